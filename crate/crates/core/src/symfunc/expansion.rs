use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::{Basis, SymError};
use crate::exactalg::{Ring, RingTag};
use crate::partitions::Partition;

/// A finite sum `Σ c_λ b_λ` in one basis. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct SymExpansion<C> {
    basis: Basis,
    terms: BTreeMap<Partition, C>,
}

impl<C: Ring> SymExpansion<C> {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1`, indexed by the empty partition in every basis.
    pub fn one(basis: Basis) -> Self {
        Self::term(basis, Partition::empty(), C::one())
    }

    pub fn term(basis: Basis, index: Partition, c: C) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(index, c);
        out
    }

    /// `b_λ` with coefficient one.
    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        Self::term(basis, index, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, C)>>(basis: Basis, it: I) -> Self {
        let mut out = Self::zero(basis);
        for (p, c) in it {
            out.add_term(p, c);
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn ring(&self) -> RingTag {
        C::TAG
    }

    /// Same terms under another tag. Only for internal re-interpretation.
    pub(crate) fn retag(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, C> {
        self.terms
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &C)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, index: &Partition) -> Option<&C> {
        self.terms.get(index)
    }

    pub fn coeff(&self, index: &Partition) -> C {
        self.terms.get(index).cloned().unwrap_or_else(C::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.terms.keys()
    }

    /// Smallest index in graded-lex order.
    pub fn min_index(&self) -> Option<&Partition> {
        self.terms.keys().next()
    }

    pub fn add_term(&mut self, index: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(slot) => {
                let s = slot.plus(&c);
                if s.is_zero() {
                    self.terms.remove(&index);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(index, c);
            }
        }
    }

    /// `self += c · other` (same basis required).
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        assert_eq!(self.basis, other.basis, "adding expansions in different bases");
        if c.is_zero() {
            return;
        }
        for (p, x) in &other.terms {
            self.add_term(p.clone(), x.times(c));
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::one());
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::one().negate());
        out
    }

    pub fn negate(&self) -> Self {
        self.map_coeffs(|c| c.negate())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_coeffs(|x| x.times(c))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> SymExpansion<D> {
        SymExpansion::from_terms(self.basis, self.terms.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    pub fn try_map_coeffs<D: Ring>(
        &self,
        f: impl Fn(&C) -> Option<D>,
    ) -> Option<SymExpansion<D>> {
        let mut out = SymExpansion::zero(self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c)?);
        }
        Some(out)
    }

    /// Change coefficient ring through `RatQT`; fails if a value does not fit.
    pub fn convert_ring<D: Ring>(&self) -> Result<SymExpansion<D>, SymError> {
        self.try_map_coeffs(|c| D::try_from_ratqt(&c.to_ratqt()))
            .ok_or(SymError::ring(D::TAG))
    }

    /// Map indices; terms landing on the same index are summed.
    pub fn map_indices(&self, basis: Basis, f: impl Fn(&Partition) -> Partition) -> Self {
        Self::from_terms(basis, self.terms.iter().map(|(p, c)| (f(p), c.clone())))
    }

    pub fn homogeneous(&self, d: usize) -> Self {
        Self::from_terms(
            self.basis,
            self.terms
                .iter()
                .filter(|(p, _)| p.degree() == d)
                .map(|(p, c)| (p.clone(), c.clone())),
        )
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::degree).collect();
        d.dedup();
        d
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Partition::degree)
    }

    pub fn to_json(&self) -> Value {
        // terms listed from the largest index down
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(p, c)| json!({"index": p.parts(), "coeff": c.to_json()}))
            .collect();
        json!({
            "basis": self.basis.name(),
            "k": self.basis.k(),
            "ring": C::TAG.name(),
            "terms": terms,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, SymError> {
        let bad = |m: &str| SymError::Malformed(m.to_string());
        let name = v["basis"].as_str().ok_or_else(|| bad("missing basis"))?;
        let k = v["k"].as_u64().map(|k| k as usize);
        let basis = Basis::from_name(name, k).ok_or_else(|| bad("unknown basis"))?;
        if let Some(r) = v["ring"].as_str() {
            if RingTag::from_name(r) != Some(C::TAG) {
                return Err(bad("ring does not match"));
            }
        }
        let terms = v["terms"].as_array().ok_or_else(|| bad("missing terms"))?;
        let mut out = Self::zero(basis);
        for t in terms {
            let parts: Vec<usize> = serde_json::from_value(t["index"].clone())
                .map_err(|e| SymError::Malformed(e.to_string()))?;
            let p = Partition::new(parts).map_err(|e| SymError::Malformed(e.to_string()))?;
            let c = C::from_json(&t["coeff"]).map_err(|e| SymError::Malformed(e.to_string()))?;
            out.add_term(p, c);
        }
        Ok(out)
    }
}

impl<C: Ring> fmt::Display for SymExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){sym}[{p}]")?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for SymExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{{self}}}", self.basis)
    }
}
