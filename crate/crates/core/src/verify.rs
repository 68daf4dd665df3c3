//! Range-bounded checks of theorems and conjectures, reported per case.
//!
//! Theorem checks end in PASS or FAIL. Conjecture checks end in HOLDS or
//! COUNTEREXAMPLE; a counterexample is a finding, not an error.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::exactalg::{LaurentT, PolyQT, Ring};
use crate::kschur::{
    k_rectangle, k_schur, k_schur_t1, k_split_poly, k_split_poly_t1, kschur_sum, pieri_sets,
    quotient_reduce, rectangle_action, to_g_basis, to_kschur_basis, to_kschur_basis_t1, Exp,
    IntExp,
};
use crate::macdonald::{kschur_qt_kostka, macdonald_h, macdonald_j_with_order};
use crate::partitions::{
    k_bounded_partitions, k_irreducible_partitions, partitions_of, Partition,
};
use crate::symfunc::{
    coproduct, omega, omega_t, pieri, schur_multiply, to_basis, Basis, PieriKind, SymExpansion,
};
use crate::tables::{compute_table, fixtures};
use crate::vertex::{hall_littlewood, h_s, morris_kostka};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    OmegaKInvolution,
    MorrisVsVertex,
    Tables,
    RectangleTheorem,
    T1Consistency,
    Unitriangularity,
    MacdonaldConsistency,
    PieriConjecture,
    OmegaTConjecture,
    CoproductConjecture,
    BranchingPositivity,
    PositivityV,
    PositivityKqt,
    IrreducibleCount,
    QuotientBasis,
}

pub const ALL_CHECKS: [Check; 15] = [
    Check::OmegaKInvolution,
    Check::MorrisVsVertex,
    Check::Tables,
    Check::RectangleTheorem,
    Check::T1Consistency,
    Check::Unitriangularity,
    Check::MacdonaldConsistency,
    Check::PieriConjecture,
    Check::OmegaTConjecture,
    Check::CoproductConjecture,
    Check::BranchingPositivity,
    Check::PositivityV,
    Check::PositivityKqt,
    Check::IrreducibleCount,
    Check::QuotientBasis,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Theorem,
    Conjecture,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::OmegaKInvolution => "omega-k-involution",
            Check::MorrisVsVertex => "morris-vs-vertex",
            Check::Tables => "tables",
            Check::RectangleTheorem => "rectangle-theorem",
            Check::T1Consistency => "t1-consistency",
            Check::Unitriangularity => "unitriangularity",
            Check::MacdonaldConsistency => "macdonald-consistency",
            Check::PieriConjecture => "pieri-conjecture",
            Check::OmegaTConjecture => "omega-t-conjecture",
            Check::CoproductConjecture => "coproduct-conjecture",
            Check::BranchingPositivity => "branching-positivity",
            Check::PositivityV => "positivity-v",
            Check::PositivityKqt => "positivity-kqt",
            Check::IrreducibleCount => "irreducible-count",
            Check::QuotientBasis => "quotient-basis",
        }
    }

    pub fn kind(self) -> CheckKind {
        match self {
            Check::PieriConjecture
            | Check::OmegaTConjecture
            | Check::CoproductConjecture
            | Check::BranchingPositivity
            | Check::PositivityV
            | Check::PositivityKqt => CheckKind::Conjecture,
            _ => CheckKind::Theorem,
        }
    }

    /// Default `(k range, max degree)`.
    pub fn default_range(self) -> (Vec<usize>, usize) {
        match self {
            Check::OmegaKInvolution => ((1..=6).collect(), 12),
            Check::MorrisVsVertex => ((1..=4).collect(), 7),
            Check::Tables => ((2..=4).collect(), 6),
            Check::RectangleTheorem => ((1..=3).collect(), 5),
            Check::T1Consistency => ((1..=3).collect(), 7),
            Check::Unitriangularity => ((1..=4).collect(), 7),
            Check::MacdonaldConsistency => ((1..=3).collect(), 6),
            Check::PieriConjecture => ((1..=4).collect(), 6),
            Check::OmegaTConjecture => ((1..=3).collect(), 6),
            Check::CoproductConjecture => (vec![2], 5),
            Check::BranchingPositivity => (vec![2], 6),
            Check::PositivityV => ((1..=4).collect(), 7),
            Check::PositivityKqt => ((1..=3).collect(), 6),
            Check::IrreducibleCount => ((1..=5).collect(), 0),
            Check::QuotientBasis => ((1..=4).collect(), 6),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_CHECKS
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Holds,
    Counterexample,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Holds => "HOLDS",
            Verdict::Counterexample => "COUNTEREXAMPLE",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseResult {
    pub case: String,
    pub ok: bool,
    pub detail: Option<String>,
    /// Observed values worth recording even when the case succeeds.
    pub data: Option<Value>,
}

impl CaseResult {
    fn from_result(case: String, r: Result<Option<Value>, String>) -> Self {
        match r {
            Ok(data) => Self { case, ok: true, detail: None, data },
            Err(d) => Self { case, ok: false, detail: Some(d), data: None },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub check: Check,
    pub ks: Vec<usize>,
    pub max_degree: usize,
    pub cases: Vec<CaseResult>,
}

impl Report {
    pub fn verdict(&self) -> Verdict {
        let ok = self.cases.iter().all(|c| c.ok);
        match (self.check.kind(), ok) {
            (CheckKind::Theorem, true) => Verdict::Pass,
            (CheckKind::Theorem, false) => Verdict::Fail,
            (CheckKind::Conjecture, true) => Verdict::Holds,
            (CheckKind::Conjecture, false) => Verdict::Counterexample,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.ok)
    }

    pub fn is_theorem_failure(&self) -> bool {
        self.verdict() == Verdict::Fail
    }

    pub fn to_json(&self) -> Value {
        let (pass, fail) = match self.check.kind() {
            CheckKind::Theorem => ("PASS", "FAIL"),
            CheckKind::Conjecture => ("HOLDS", "COUNTEREXAMPLE"),
        };
        let cases: Vec<Value> = self
            .cases
            .iter()
            .map(|c| {
                let mut v = json!({"case": c.case, "verdict": if c.ok { pass } else { fail }});
                if let Some(d) = &c.detail {
                    v["detail"] = json!(d);
                }
                if let Some(d) = &c.data {
                    v["data"] = d.clone();
                }
                v
            })
            .collect();
        json!({
            "check": self.check.name(),
            "kind": match self.check.kind() { CheckKind::Theorem => "theorem", CheckKind::Conjecture => "conjecture" },
            "k": self.ks,
            "max_degree": self.max_degree,
            "verdict": self.verdict().name(),
            "case_count": self.cases.len(),
            "failure_count": self.failures().count(),
            "cases": cases,
        })
    }

    /// One summary line, followed by one line per failing case.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{:<22} {:<15} cases={} k={:?} max_degree={}\n",
            self.check.name(),
            self.verdict().name(),
            self.cases.len(),
            self.ks,
            self.max_degree
        );
        for f in self.failures() {
            out.push_str(&format!("    {}: {}\n", f.case, f.detail.as_deref().unwrap_or("")));
        }
        out
    }
}

/// Optional overrides of a check's default range.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Params {
    pub k: Option<usize>,
    pub max_degree: Option<usize>,
}

pub fn run(check: Check, params: Params) -> Report {
    let (default_ks, default_n) = check.default_range();
    let ks = params.k.map(|k| vec![k]).unwrap_or(default_ks);
    let n = params.max_degree.unwrap_or(default_n);
    let mut cases = match check {
        Check::OmegaKInvolution => omega_k_involution(&ks, n),
        Check::MorrisVsVertex => morris_vs_vertex(&ks, n),
        Check::Tables => tables(params.k, params.max_degree),
        Check::RectangleTheorem => rectangle_theorem(&ks, n),
        Check::T1Consistency => t1_consistency(&ks, n),
        Check::Unitriangularity => unitriangularity(&ks, n),
        Check::MacdonaldConsistency => macdonald_consistency(&ks, n),
        Check::PieriConjecture => pieri_conjecture(&ks, n),
        Check::OmegaTConjecture => omega_t_conjecture(&ks, n),
        Check::CoproductConjecture => coproduct_conjecture(&ks, n),
        Check::BranchingPositivity => branching_positivity(&ks, n),
        Check::PositivityV => positivity_v(&ks, n),
        Check::PositivityKqt => positivity_kqt(&ks, n),
        Check::IrreducibleCount => irreducible_count(&ks),
        Check::QuotientBasis => quotient_basis(&ks, n),
    };
    cases.sort_by(|a, b| a.case.cmp(&b.case));
    Report { check, ks, max_degree: n, cases }
}

pub fn run_all(params: Params) -> Vec<Report> {
    ALL_CHECKS.iter().map(|&c| run(c, params)).collect()
}

// ---------------------------------------------------------------- helpers

fn label(k: usize, lam: &Partition) -> String {
    format!("k={k} λ={lam:?}")
}

/// `(k, λ)` for every k-bounded `λ` with `lo <= |λ| <= hi`.
fn bounded(ks: &[usize], lo: usize, hi: usize) -> Vec<(usize, Partition)> {
    let mut out = Vec::new();
    for &k in ks {
        for n in lo..=hi {
            for lam in k_bounded_partitions(n, k) {
                out.push((k, lam));
            }
        }
    }
    out
}

fn in_n_t(c: &LaurentT) -> bool {
    c.is_polynomial() && c.has_nonnegative_coeffs()
}

fn at_t1(f: &Exp) -> IntExp {
    f.map_coeffs(LaurentT::at_one)
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn par_cases<T: Sync>(
    items: &[T],
    name: impl Fn(&T) -> String + Sync,
    body: impl Fn(&T) -> Result<Option<Value>, String> + Sync,
) -> Vec<CaseResult> {
    items
        .par_iter()
        .map(|it| CaseResult::from_result(name(it), body(it)))
        .collect()
}

/// Every index of `f` dominates `lam`, and the coefficient at `lam` is one.
fn unitriangular_at<C: Ring>(f: &SymExpansion<C>, lam: &Partition) -> Result<(), String> {
    require(f.coeff(lam) == C::one(), || format!("diagonal coefficient is {}", f.coeff(lam)))?;
    for mu in f.support() {
        require(lam.dominated_by(mu), || format!("support contains {mu:?}, not above {lam:?}"))?;
    }
    Ok(())
}

// ---------------------------------------------------------------- theorems

fn omega_k_involution(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let mut items = Vec::new();
    for &k in ks {
        for d in 0..=n {
            items.push((k, d));
        }
    }
    par_cases(
        &items,
        |(k, d)| format!("k={k} degree={d}"),
        |&(k, d)| {
            let parts = k_bounded_partitions(d, k);
            for lam in &parts {
                let w = lam.k_conjugate(k).map_err(err)?;
                require(w.is_k_bounded(k), || format!("{lam:?} maps to non-bounded {w:?}"))?;
                let back = w.k_conjugate(k).map_err(err)?;
                require(back == *lam, || format!("{lam:?} -> {w:?} -> {back:?}"))?;
                if lam.main_hook_or_zero() <= k {
                    require(w == lam.conjugate(), || {
                        format!("{lam:?} has main hook <= k but maps to {w:?}")
                    })?;
                }
            }
            Ok(Some(json!({"partitions": parts.len()})))
        },
    )
}

fn morris_vs_vertex(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let items = bounded(ks, 0, n);
    par_cases(
        &items,
        |(k, lam)| label(*k, lam),
        |(k, lam)| {
            let split = lam.k_split(*k).map_err(err)?;
            let vertex = h_s(&split);
            let morris = morris_kostka(&split);
            let from_vertex: BTreeMap<Partition, LaurentT> =
                vertex.iter().map(|(p, c)| (p.clone(), c.clone())).collect();
            require(from_vertex == morris, || {
                format!("S={split}: vertex {vertex} vs recurrence {morris:?}")
            })?;
            // K_{μ;S} vanishes unless μ dominates the concatenation, which has K = 1
            let bar = split.concat().ok_or_else(|| format!("{split} is not dominant"))?;
            require(morris.get(&bar) == Some(&LaurentT::one()), || {
                format!("K at the concatenation {bar:?} is {:?}", morris.get(&bar))
            })?;
            for mu in morris.keys() {
                require(bar.dominated_by(mu), || format!("nonzero K at {mu:?} below {bar:?}"))?;
            }
            Ok(None)
        },
    )
}

fn tables(k: Option<usize>, max_degree: Option<usize>) -> Vec<CaseResult> {
    let fx: Vec<_> = fixtures()
        .into_iter()
        .filter(|t| k.is_none_or(|k| t.k == k) && max_degree.is_none_or(|d| t.degree <= d))
        .collect();
    par_cases(
        &fx,
        |t| format!("{} k={} degree={}", t.kind, t.k, t.degree),
        |t| {
            let ours = compute_table(t.kind, t.k, t.degree).map_err(err)?;
            let diff = ours.differences(t);
            require(diff.is_empty(), || {
                let (r, c, a, b) = &diff[0];
                format!("{} cells differ, first at row {r:?} column {c:?}: computed {a}, expected {b}", diff.len())
            })?;
            Ok(None)
        },
    )
}

fn rectangle_theorem(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let mut items = Vec::new();
    for (k, lam) in bounded(ks, 0, n) {
        for ell in 1..=k {
            items.push((k, ell, lam.clone()));
        }
    }
    let mut out = par_cases(
        &items,
        |(k, ell, lam)| format!("k={k} ℓ={ell} λ={lam:?}"),
        |(k, ell, lam)| {
            let c = rectangle_action(*k, *ell, lam).map_err(err)?;
            // at t = 1 the rectangle Schur function multiplies k-Schur functions
            let rect = k_rectangle(*k, *ell);
            let prod = schur_multiply(
                &SymExpansion::basis_element(Basis::Schur, rect.clone()),
                &*k_schur_t1(*k, lam).map_err(err)?,
            );
            let want = k_schur_t1(*k, &lam.union(&rect)).map_err(err)?;
            require(prod == *want, || format!("s_{rect:?} s^(k)_{lam:?} != s^(k)_{:?} at t=1", lam.union(&rect)))?;
            Ok(Some(json!({"c": c})))
        },
    );
    // s_k s^(k)_λ = s^(k)_{(k,λ)} at t = 1
    let items = bounded(ks, 0, n);
    out.extend(par_cases(
        &items,
        |(k, lam)| format!("row k={k} λ={lam:?}"),
        |(k, lam)| {
            let row = SymExpansion::basis_element(Basis::Schur, Partition::row(*k));
            let prod = schur_multiply(&row, &*k_schur_t1(*k, lam).map_err(err)?);
            let want = k_schur_t1(*k, &lam.prepend(*k)).map_err(err)?;
            require(prod == *want, || format!("s_{k} s^(k)_{lam:?} != s^(k)_{:?}", lam.prepend(*k)))?;
            Ok(None)
        },
    ));
    out
}

fn t1_consistency(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let items = bounded(ks, 0, n);
    let mut out = par_cases(
        &items,
        |(k, lam)| label(*k, lam),
        |(k, lam)| {
            let general = k_schur(*k, lam).map_err(err)?;
            let t1 = k_schur_t1(*k, lam).map_err(err)?;
            require(at_t1(&general) == *t1, || format!("t=1 of {general} is not {t1}"))?;
            if lam.main_hook_or_zero() <= *k {
                let s = Exp::basis_element(Basis::Schur, lam.clone());
                require(*general == s, || format!("main hook <= k but s^(k) = {general}"))?;
            }
            let g = k_split_poly(*k, lam).map_err(err)?;
            let g1 = k_split_poly_t1(*k, lam).map_err(err)?;
            require(at_t1(&g) == *g1, || format!("t=1 of H_S is {} not {g1}", at_t1(&g)))?;
            Ok(None)
        },
    );
    let mut all = Vec::new();
    for d in 0..=n {
        all.extend(partitions_of(d));
    }
    out.extend(par_cases(
        &all,
        |lam| format!("hall λ={lam:?}"),
        |lam| {
            let h: IntExp = SymExpansion::basis_element(Basis::H, lam.clone());
            let want = to_basis(&h, Basis::Schur).map_err(err)?;
            let got = at_t1(&hall_littlewood(lam));
            require(got == want, || format!("H_λ[X;1] = {got}"))?;
            Ok(None)
        },
    ));
    out
}

fn unitriangularity(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let items = bounded(ks, 0, n);
    par_cases(
        &items,
        |(k, lam)| label(*k, lam),
        |(k, lam)| {
            let g = k_split_poly(*k, lam).map_err(err)?;
            let over_h = to_basis(&*g, Basis::HallLittlewood).map_err(err)?;
            unitriangular_at(&over_h, lam).map_err(|e| format!("G over HL: {e}"))?;
            let s = k_schur(*k, lam).map_err(err)?;
            unitriangular_at(&*s, lam).map_err(|e| format!("s^(k) over Schur: {e}"))?;
            for c in s.terms().values() {
                require(c.is_polynomial(), || format!("coefficient {c} not in Z[t]"))?;
            }
            let over_g = to_g_basis(*k, &s).map_err(err)?;
            unitriangular_at(&over_g, lam).map_err(|e| format!("s^(k) over G: {e}"))?;
            for mu in over_g.support() {
                require(mu.first() == lam.first(), || format!("G-support {mu:?} changes the first part"))?;
            }
            let t1 = k_schur_t1(*k, lam).map_err(err)?;
            let over_hb = to_basis(&*t1, Basis::H).map_err(err)?;
            for mu in over_hb.support() {
                require(mu.is_k_bounded(*k), || format!("h-support {mu:?} not k-bounded"))?;
            }
            unitriangular_at(&over_hb, lam).map_err(|e| format!("s^(k)[X] over h: {e}"))?;
            Ok(None)
        },
    )
}

fn macdonald_consistency(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let mut all = Vec::new();
    for d in 0..=n {
        all.extend(partitions_of(d));
    }
    let mut out = par_cases(
        &all,
        |lam| format!("classical λ={lam:?}"),
        |lam| {
            let h = macdonald_h(lam).map_err(err)?;
            let at0 = h.map_coeffs(PolyQT::at_q_zero);
            require(at0 == *hall_littlewood(lam), || format!("H_λ[X;0,t] = {at0}"))?;
            let hb: IntExp = SymExpansion::basis_element(Basis::H, lam.clone());
            let want = to_basis(&hb, Basis::Schur).map_err(err)?;
            let at01 = at0.map_coeffs(LaurentT::at_one);
            require(at01 == want, || format!("H_λ[X;0,1] = {at01}"))?;
            Ok(None)
        },
    );
    // Gram-Schmidt along a second linear extension of dominance
    let degrees: Vec<usize> = (1..=n).collect();
    out.extend(par_cases(
        &degrees,
        |d| format!("order degree={d}"),
        |&d| {
            let a = partitions_of(d);
            let mut b = a.clone();
            b.sort_by(|x, y| y.conjugate().cmp(&x.conjugate()));
            let ja = macdonald_j_with_order(&a).map_err(err)?;
            let jb = macdonald_j_with_order(&b).map_err(err)?;
            require(ja == jb, || "J depends on the elimination order".to_string())?;
            Ok(Some(json!({"orders_differ": a != b})))
        },
    ));
    let items = bounded(ks, 1, n);
    out.extend(par_cases(
        &items,
        |(k, lam)| format!("refinement {}", label(*k, lam)),
        |(k, lam)| {
            let kk = kschur_qt_kostka(*k, lam).map_err(err)?;
            let mut recomposed = SymExpansion::<PolyQT>::zero(Basis::Schur);
            for (nu, c) in &kk {
                let s: SymExpansion<PolyQT> =
                    k_schur(*k, nu).map_err(err)?.convert_ring().map_err(err)?;
                recomposed.add_scaled(&s, c);
            }
            let h = macdonald_h(lam).map_err(err)?;
            require(recomposed == *h, || "Σ K^(k) s^(k) differs from H_λ".to_string())?;
            Ok(None)
        },
    ));
    out
}

fn irreducible_count(ks: &[usize]) -> Vec<CaseResult> {
    ks.iter()
        .map(|&k| {
            let fact: usize = (1..=k).product();
            let list = k_irreducible_partitions(k);
            // independent count: filter every k-bounded partition up to the largest possible size
            let max: usize = (1..k).map(|i| i * (k - i)).sum();
            let filtered: usize = (0..=max)
                .map(|d| k_bounded_partitions(d, k).iter().filter(|p| p.is_k_irreducible(k)).count())
                .sum();
            let r = require(list.len() == fact && filtered == fact, || {
                format!("expected {fact}, enumerated {}, filtered {filtered}", list.len())
            })
            .map(|_| Some(json!({"count": list.len()})));
            CaseResult::from_result(format!("k={k}"), r)
        })
        .collect()
}

fn quotient_basis(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let items = bounded(ks, 0, n);
    let mut out = par_cases(
        &items,
        |(k, lam)| label(*k, lam),
        |(k, lam)| {
            let s = k_schur_t1(*k, lam).map_err(err)?;
            let red = quotient_reduce(*k, &s).map_err(err)?;
            let want = if lam.is_k_irreducible(*k) {
                SymExpansion::basis_element(Basis::KSchur(*k), lam.clone())
            } else {
                SymExpansion::zero(Basis::KSchur(*k))
            };
            require(red == want, || format!("reduces to {red}"))?;
            // multiples of a rectangle vanish in the quotient
            for ell in 1..=*k {
                let rect = k_rectangle(*k, ell);
                if rect.degree() + lam.degree() > n {
                    continue;
                }
                let prod = schur_multiply(&SymExpansion::basis_element(Basis::Schur, rect.clone()), &*s);
                let r = quotient_reduce(*k, &prod).map_err(err)?;
                require(r.is_zero(), || format!("s_{rect:?} s^(k)_{lam:?} reduces to {r}"))?;
            }
            Ok(None)
        },
    );
    for &k in ks {
        let fact: usize = (1..=k).product();
        let c = k_irreducible_partitions(k).len();
        out.push(CaseResult::from_result(
            format!("k={k} dimension"),
            require(c == fact, || format!("{c} irreducible indices")).map(|_| Some(json!({"dimension": c}))),
        ));
    }
    out
}

// ---------------------------------------------------------------- conjectures

fn pieri_conjecture(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let mut items = Vec::new();
    for (k, lam) in bounded(ks, 0, n) {
        for ell in 1..=k {
            if lam.degree() + ell > n {
                continue;
            }
            for kind in [PieriKind::H, PieriKind::E] {
                items.push((k, lam.clone(), ell, kind));
            }
        }
    }
    let example = (4, Partition::of(&[3, 2, 1]), 2, PieriKind::E);
    if ks.contains(&4) && !items.contains(&example) {
        items.push(example);
    }
    par_cases(
        &items,
        |(k, lam, ell, kind)| {
            let f = if *kind == PieriKind::H { "h" } else { "e" };
            format!("{f}_{ell} k={k} λ={lam:?}")
        },
        |(k, lam, ell, kind)| {
            let s = k_schur_t1(*k, lam).map_err(err)?;
            let prod = to_kschur_basis_t1(*k, &pieri(&*s, *ell, *kind)).map_err(err)?;
            let set = pieri_sets(*k, lam, *ell, *kind).map_err(err)?;
            let want = kschur_sum(*k, &set);
            require(prod == want, || format!("product {prod}, predicted {want}"))?;
            Ok(None)
        },
    )
}

fn omega_t_conjecture(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let items = bounded(ks, 0, n);
    par_cases(
        &items,
        |(k, lam)| label(*k, lam),
        |(k, lam)| {
            let w = lam.k_conjugate(*k).map_err(err)?;
            // t = 1: ω s^(k)_λ = s^(k)_{λ^{ω_k}}
            let s1 = k_schur_t1(*k, lam).map_err(err)?;
            let o1 = omega(&*s1, false).map_err(err)?;
            require(o1 == *k_schur_t1(*k, &w).map_err(err)?, || format!("ω s^(k)_λ[X] = {o1}"))?;
            let s = k_schur(*k, lam).map_err(err)?;
            let o = omega_t(&s);
            let target = k_schur(*k, &w).map_err(err)?;
            let lead = o.coeff(&w);
            let (c, e) = lead
                .as_monomial()
                .ok_or_else(|| format!("coefficient of s_{w:?} in ω_t s^(k)_λ is {lead}"))?;
            require(c == BigInt::from(1) && e <= 0, || format!("leading coefficient {lead}"))?;
            require(o == target.scale(&LaurentT::t_pow(e)), || format!("ω_t s^(k)_λ = {o}"))?;
            Ok(Some(json!({"omega_k": w.parts(), "c": -e})))
        },
    )
}

fn coproduct_conjecture(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let items = bounded(ks, 0, n);
    par_cases(
        &items,
        |(k, lam)| label(*k, lam),
        |(k, lam)| {
            let k = *k;
            let f = k_schur(k, lam).map_err(err)?;
            let mut by_right: BTreeMap<Partition, Exp> = BTreeMap::new();
            for (nu, a) in f.iter() {
                for ((mu, rho), c) in coproduct(nu) {
                    by_right
                        .entry(rho)
                        .or_insert_with(|| Exp::zero(Basis::Schur))
                        .add_term(mu, a.scale(&c));
                }
            }
            // left leg in k-Schur functions, then the right leg
            let mut by_left: BTreeMap<Partition, Exp> = BTreeMap::new();
            for (rho, e) in &by_right {
                for (alpha, u) in to_kschur_basis(k, e).map_err(|e| format!("left leg: {e}"))?.iter() {
                    by_left
                        .entry(alpha.clone())
                        .or_insert_with(|| Exp::zero(Basis::Schur))
                        .add_term(rho.clone(), u.clone());
                }
            }
            let mut count = 0;
            for (alpha, e) in &by_left {
                for (beta, g) in to_kschur_basis(k, e).map_err(|e| format!("right leg: {e}"))?.iter() {
                    count += 1;
                    require(in_n_t(g), || format!("g at ({alpha:?}, {beta:?}) is {g}"))?;
                }
            }
            Ok(Some(json!({"terms": count})))
        },
    )
}

fn branching_positivity(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let items = bounded(ks, 0, n);
    par_cases(
        &items,
        |(k, lam)| format!("{}→{} λ={lam:?}", k, k + 1),
        |(k, lam)| {
            let s = k_schur(*k, lam).map_err(err)?;
            let v = to_kschur_basis(*k + 1, &*s).map_err(err)?;
            unitriangular_at(&v, lam)?;
            for (mu, c) in v.iter() {
                require(in_n_t(c), || format!("coefficient at {mu:?} is {c}"))?;
            }
            Ok(None)
        },
    )
}

fn positivity_v(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let items = bounded(ks, 0, n);
    par_cases(
        &items,
        |(k, lam)| label(*k, lam),
        |(k, lam)| {
            let s = k_schur(*k, lam).map_err(err)?;
            for (mu, c) in s.iter() {
                require(in_n_t(c), || format!("v at {mu:?} is {c}"))?;
            }
            Ok(None)
        },
    )
}

fn positivity_kqt(ks: &[usize], n: usize) -> Vec<CaseResult> {
    let items = bounded(ks, 1, n);
    let mut out = par_cases(
        &items,
        |(k, lam)| label(*k, lam),
        |(k, lam)| {
            let kk = kschur_qt_kostka(*k, lam).map_err(err)?;
            let h = macdonald_h(lam).map_err(err)?;
            for (mu, c) in &kk {
                require(c.has_nonnegative_coeffs(), || format!("K^(k) at {mu:?} is {c}"))?;
                let full = h.coeff(mu);
                require(c.coeffwise_le(&full), || format!("K^(k) at {mu:?} is {c}, K is {full}"))?;
            }
            Ok(None)
        },
    );
    let mut all = Vec::new();
    for d in 1..=n {
        all.extend(partitions_of(d));
    }
    out.extend(par_cases(
        &all,
        |lam| format!("classical λ={lam:?}"),
        |lam| {
            let h = macdonald_h(lam).map_err(err)?;
            for (mu, c) in h.iter() {
                require(c.has_nonnegative_coeffs(), || format!("K at {mu:?} is {c}"))?;
            }
            Ok(None)
        },
    ));
    out
}
