//! Change of basis. Every conversion pivots through the Schur basis.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::lr::{pieri, PieriKind};
use super::scalar::z_lambda;
use super::{Basis, SymError, SymExpansion};
use crate::exactalg::Ring;
use crate::memo::Memo;
use crate::partitions::{partitions_of, Partition};

type IntMap = Arc<BTreeMap<Partition, BigInt>>;
type RatMap = Arc<BTreeMap<Partition, BigRational>>;

static H_IN_S: LazyLock<Memo<Partition, IntMap>> = LazyLock::new(Memo::new);
static S_IN_H: LazyLock<Memo<Partition, IntMap>> = LazyLock::new(Memo::new);
static M_IN_S: LazyLock<Memo<Partition, IntMap>> = LazyLock::new(Memo::new);
static P_IN_H: LazyLock<Memo<Partition, IntMap>> = LazyLock::new(Memo::new);
static P_IN_S: LazyLock<Memo<Partition, IntMap>> = LazyLock::new(Memo::new);
static H_IN_P: LazyLock<Memo<Partition, RatMap>> = LazyLock::new(Memo::new);
static S_IN_P: LazyLock<Memo<Partition, RatMap>> = LazyLock::new(Memo::new);

fn add_int(map: &mut BTreeMap<Partition, BigInt>, p: Partition, c: BigInt) {
    let slot = map.entry(p.clone()).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&p);
    }
}

fn add_rat(map: &mut BTreeMap<Partition, BigRational>, p: Partition, c: BigRational) {
    let slot = map.entry(p.clone()).or_default();
    *slot += c;
    if *slot == BigRational::default() {
        map.remove(&p);
    }
}

fn conjugate_keys<V: Clone>(m: &BTreeMap<Partition, V>) -> BTreeMap<Partition, V> {
    m.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect()
}

/// `h_λ = Σ_μ K_{μλ} s_μ` by iterated Pieri.
pub(crate) fn h_in_schur(lambda: &Partition) -> IntMap {
    H_IN_S.get_or_compute(lambda, || {
        let mut f: SymExpansion<BigInt> = SymExpansion::one(Basis::Schur);
        for &r in lambda.parts() {
            f = pieri(&f, r, PieriKind::H);
        }
        Arc::new(f.into_terms())
    })
}

/// Jacobi-Trudi: `s_λ = det(h_{λ_i - i + j})` as a signed sum of `h_μ`.
pub(crate) fn schur_in_h(lambda: &Partition) -> IntMap {
    S_IN_H.get_or_compute(lambda, || {
        let n = lambda.len();
        let mut out = BTreeMap::new();
        let mut used = vec![false; n];
        let mut chosen = Vec::with_capacity(n);
        fn go(
            lam: &Partition,
            i: usize,
            used: &mut Vec<bool>,
            chosen: &mut Vec<(usize, usize)>,
            out: &mut BTreeMap<Partition, BigInt>,
        ) {
            let n = lam.len();
            if i == n {
                // sign of the permutation i -> j
                let perm: Vec<usize> = chosen.iter().map(|&(j, _)| j).collect();
                let inv = (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| perm[a] > perm[b])
                    .count();
                let sign = if inv % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                let parts = chosen.iter().map(|&(_, v)| v).collect();
                add_int(out, Partition::from_multiset(parts), sign);
                return;
            }
            for j in 0..n {
                if used[j] {
                    continue;
                }
                let v = lam.get(i) as i64 - i as i64 + j as i64;
                if v < 0 {
                    continue;
                }
                used[j] = true;
                chosen.push((j, v as usize));
                go(lam, i + 1, used, chosen, out);
                chosen.pop();
                used[j] = false;
            }
        }
        go(lambda, 0, &mut used, &mut chosen, &mut out);
        Arc::new(out)
    })
}

/// `m_λ` in Schur, by inverting the Kostka matrix.
fn m_in_schur(lambda: &Partition) -> IntMap {
    M_IN_S.get_or_compute(lambda, || {
        // s_λ = Σ_{μ ≤ λ} K_{λμ} m_μ, hence m_λ = s_λ - Σ_{μ < λ} K_{λμ} m_μ
        let mut out = BTreeMap::new();
        out.insert(lambda.clone(), BigInt::one());
        for mu in partitions_of(lambda.degree()) {
            if mu == *lambda || !mu.dominated_by(lambda) {
                continue;
            }
            let k = kostka(lambda, &mu);
            if k.is_zero() {
                continue;
            }
            for (nu, c) in m_in_schur(&mu).iter() {
                add_int(&mut out, nu.clone(), -(&k * c));
            }
        }
        Arc::new(out)
    })
}

/// `K_{λμ}`: coefficient of `s_λ` in `h_μ`.
fn kostka(lambda: &Partition, mu: &Partition) -> BigInt {
    h_in_schur(mu).get(lambda).cloned().unwrap_or_default()
}

/// `p_ρ` in the h basis via `p_n = n h_n - Σ_{i<n} p_i h_{n-i}`.
fn p_in_h(rho: &Partition) -> IntMap {
    P_IN_H.get_or_compute(rho, || {
        let mut out = BTreeMap::new();
        if rho.len() == 1 {
            let n = rho.first();
            out.insert(Partition::row(n), BigInt::from(n));
            for i in 1..n {
                for (a, c) in p_in_h(&Partition::row(i)).iter() {
                    add_int(&mut out, a.union(&Partition::row(n - i)), -c);
                }
            }
        } else if rho.is_empty() {
            out.insert(Partition::empty(), BigInt::one());
        } else {
            let head = p_in_h(&Partition::row(rho.first()));
            for (a, c) in head.iter() {
                for (b, d) in p_in_h(&rho.tail()).iter() {
                    add_int(&mut out, a.union(b), c * d);
                }
            }
        }
        Arc::new(out)
    })
}

fn p_in_schur(rho: &Partition) -> IntMap {
    P_IN_S.get_or_compute(rho, || {
        let mut out = BTreeMap::new();
        for (mu, c) in p_in_h(rho).iter() {
            for (nu, k) in h_in_schur(mu).iter() {
                add_int(&mut out, nu.clone(), c * k);
            }
        }
        Arc::new(out)
    })
}

/// `h_λ` in the p basis via `h_n = Σ_{ρ ⊢ n} p_ρ / z_ρ`.
fn h_in_p(lambda: &Partition) -> RatMap {
    H_IN_P.get_or_compute(lambda, || {
        let mut out = BTreeMap::new();
        if lambda.is_empty() {
            out.insert(Partition::empty(), BigRational::from_integer(BigInt::one()));
        } else if lambda.len() == 1 {
            for rho in partitions_of(lambda.first()) {
                let z = z_lambda(&rho);
                out.insert(rho, BigRational::new(BigInt::one(), z));
            }
        } else {
            let head = h_in_p(&Partition::row(lambda.first()));
            for (a, c) in head.iter() {
                for (b, d) in h_in_p(&lambda.tail()).iter() {
                    add_rat(&mut out, a.union(b), c * d);
                }
            }
        }
        Arc::new(out)
    })
}

fn schur_in_p(lambda: &Partition) -> RatMap {
    S_IN_P.get_or_compute(lambda, || {
        let mut out = BTreeMap::new();
        for (mu, c) in schur_in_h(lambda).iter() {
            for (rho, q) in h_in_p(mu).iter() {
                add_rat(&mut out, rho.clone(), q * BigRational::from_integer(c.clone()));
            }
        }
        Arc::new(out)
    })
}

fn from_int_map<C: Ring>(basis: Basis, m: &BTreeMap<Partition, BigInt>) -> SymExpansion<C> {
    SymExpansion::from_terms(basis, m.iter().map(|(p, c)| (p.clone(), C::from_int(c))))
}

fn from_rat_map<C: Ring>(
    basis: Basis,
    m: &BTreeMap<Partition, BigRational>,
) -> Result<SymExpansion<C>, SymError> {
    let mut out = SymExpansion::zero(basis);
    for (p, q) in m {
        out.add_term(p.clone(), C::try_from_rational(q).ok_or(SymError::ring(C::TAG))?);
    }
    Ok(out)
}

fn embed<C: Ring, D: Ring>(f: &SymExpansion<D>) -> Result<SymExpansion<C>, SymError> {
    f.convert_ring::<C>()
}

/// The Schur expansion of one basis element `b_λ`.
pub fn basis_element_in_schur<C: Ring>(
    basis: Basis,
    lambda: &Partition,
) -> Result<SymExpansion<C>, SymError> {
    let index_err = |e: String| SymError::Malformed(e);
    Ok(match basis {
        Basis::Schur => SymExpansion::basis_element(Basis::Schur, lambda.clone()),
        Basis::H => from_int_map(Basis::Schur, &h_in_schur(lambda)),
        Basis::E => from_int_map(Basis::Schur, &conjugate_keys(&h_in_schur(&lambda.conjugate()))),
        Basis::M => from_int_map(Basis::Schur, &m_in_schur(lambda)),
        Basis::P => from_int_map(Basis::Schur, &p_in_schur(lambda)),
        Basis::HallLittlewood => embed(&crate::vertex::hall_littlewood(lambda))?,
        Basis::KSplit(k) => {
            embed(&*crate::kschur::k_split_poly(k, lambda).map_err(|e| index_err(e.to_string()))?)?
        }
        Basis::KSchur(k) => {
            embed(&*crate::kschur::k_schur(k, lambda).map_err(|e| index_err(e.to_string()))?)?
        }
        Basis::MacJ => embed(&*crate::macdonald::macdonald_j(lambda))?,
        Basis::MacH => embed(
            &*crate::macdonald::macdonald_h(lambda).map_err(|e| index_err(e.to_string()))?,
        )?,
    })
}

/// Re-express any expansion in the Schur basis.
pub fn to_schur<C: Ring>(f: &SymExpansion<C>) -> Result<SymExpansion<C>, SymError> {
    if f.basis() == Basis::Schur {
        return Ok(f.clone());
    }
    let mut out = SymExpansion::zero(Basis::Schur);
    for (p, c) in f.iter() {
        out.add_scaled(&basis_element_in_schur::<C>(f.basis(), p)?, c);
    }
    Ok(out)
}

/// Triangular solve of a Schur expansion against a basis whose elements are
/// `b_μ = s_μ + (terms with dominance-larger indices)`.
///
/// The smallest residual index in graded-lex order is always dominance-minimal,
/// so it is eliminated next. An index rejected by `allowed` means `f` is not in
/// the span.
pub(crate) fn solve_unitriangular<C: Ring>(
    f: &SymExpansion<C>,
    target: Basis,
    allowed: impl Fn(&Partition) -> bool,
    element: impl Fn(&Partition) -> Result<SymExpansion<C>, SymError>,
) -> Result<SymExpansion<C>, SymError> {
    assert_eq!(f.basis(), Basis::Schur, "triangular solve needs Schur input");
    let mut residual = f.clone();
    let mut out = SymExpansion::zero(target);
    while let Some(mu) = residual.min_index().cloned() {
        if !allowed(&mu) {
            return Err(SymError::NotInSubspace(target.to_string(), format!("{mu:?}")));
        }
        let c = residual.coeff(&mu);
        let b = element(&mu)?;
        debug_assert!(b.coeff(&mu) == C::one(), "basis element not unitriangular at {mu:?}");
        residual.add_scaled(&b, &c.negate());
        out.add_term(mu, c);
    }
    Ok(out)
}

fn from_schur<C: Ring>(f: &SymExpansion<C>, target: Basis) -> Result<SymExpansion<C>, SymError> {
    let mut out = SymExpansion::zero(target);
    match target {
        Basis::Schur => return Ok(f.clone()),
        Basis::H => {
            for (l, c) in f.iter() {
                out.add_scaled(&from_int_map(Basis::H, &schur_in_h(l)), c);
            }
        }
        Basis::E => {
            for (l, c) in f.iter() {
                let m = conjugate_keys(&schur_in_h(&l.conjugate()));
                out.add_scaled(&from_int_map(Basis::E, &m), c);
            }
        }
        Basis::M => {
            for (l, c) in f.iter() {
                for mu in partitions_of(l.degree()) {
                    out.add_term(mu.clone(), c.scale_int(&kostka(l, &mu)));
                }
            }
        }
        Basis::P => {
            for (l, c) in f.iter() {
                out.add_scaled(&from_rat_map(Basis::P, &schur_in_p(l))?, c);
            }
        }
        Basis::HallLittlewood => {
            return solve_unitriangular(f, target, |_| true, |mu| {
                basis_element_in_schur(target, mu)
            })
        }
        Basis::KSplit(k) | Basis::KSchur(k) => {
            return solve_unitriangular(f, target, |mu| mu.is_k_bounded(k), |mu| {
                basis_element_in_schur(target, mu)
            })
        }
        Basis::MacJ | Basis::MacH => {
            return Err(SymError::UnsupportedConversion {
                from: Basis::Schur.to_string(),
                to: target.to_string(),
            })
        }
    }
    Ok(out)
}

/// Convert `f` to the `target` basis.
pub fn to_basis<C: Ring>(f: &SymExpansion<C>, target: Basis) -> Result<SymExpansion<C>, SymError> {
    if f.basis() == target {
        return Ok(f.clone());
    }
    from_schur(&to_schur(f)?, target)
}
