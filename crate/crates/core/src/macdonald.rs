//! Macdonald integral forms `J_λ`, modified Macdonald polynomials `H_λ`, and
//! their expansions in k-Schur functions.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use thiserror::Error;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::exactalg::{AlgError, BigInt, BigRational, PolyQT, RatQT};
use crate::kschur::{to_kschur_basis, KSchurError};
use crate::memo::Memo;
use crate::partitions::{partitions_of, Partition, PartitionError};
use crate::symfunc::{
    plethystic_substitute, to_basis, z_lambda, Alphabet, Basis, SymError, SymExpansion,
};

pub type QtExp = SymExpansion<RatQT>;
pub type PolyExp = SymExpansion<PolyQT>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    KSchur(#[from] KSchurError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

static CHARS: LazyLock<Memo<usize, Arc<Characters>>> = LazyLock::new(Memo::new);
/// All `H_λ` of one degree.
pub type HDegree = Arc<BTreeMap<Partition, Arc<PolyExp>>>;

static H_BY_DEGREE: LazyLock<Memo<usize, HDegree>> = LazyLock::new(Memo::new);
static J: LazyLock<Memo<Partition, Arc<QtExp>>> = LazyLock::new(Memo::new);

/// Symmetric group characters `χ^λ_ρ` (coefficient of `s_λ` in `p_ρ`) and `z_ρ`.
struct Characters {
    parts: Vec<Partition>,
    chi: Vec<Vec<BigInt>>,
    z: Vec<BigInt>,
}

fn characters(n: usize) -> Arc<Characters> {
    CHARS.get_or_compute(&n, || {
        let parts = partitions_of(n);
        let mut chi = vec![vec![BigInt::zero(); parts.len()]; parts.len()];
        for (j, rho) in parts.iter().enumerate() {
            let p_rho: SymExpansion<BigInt> = SymExpansion::basis_element(Basis::P, rho.clone());
            let s = to_basis(&p_rho, Basis::Schur).expect("power sums are integral in Schur");
            for (i, lam) in parts.iter().enumerate() {
                chi[i][j] = s.coeff(lam);
            }
        }
        let z = parts.iter().map(z_lambda).collect();
        Arc::new(Characters { parts, chi, z })
    })
}

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// `c_λ = Π_{s ∈ λ} (1 - q^{a(s)} t^{l(s)+1})`.
pub fn hook_normalization(lambda: &Partition) -> PolyQT {
    let mut c = PolyQT::one();
    for (r, col) in lambda.cells() {
        let (a, l) = lambda.arm_leg(r, col);
        c = &c * &(&PolyQT::one() - &PolyQT::monomial(1.into(), a as u32, l as u32 + 1));
    }
    c
}

/// Exact Gram-Schmidt over `ℚ` at the point `(q, t)`: the Schur coefficients of
/// `H_λ` for every `λ` in `order`, indexed like `characters(n).parts`.
fn h_values_at(ch: &Characters, order: &[usize], q: &BigInt, t: &BigInt) -> Vec<Vec<BigRational>> {
    let n = ch.parts.len();
    let one = BigRational::one();
    // power-sum weights 1/z_ρ Π (1 - q^r)/(1 - t^r), and the t-only factor
    let mut w = Vec::with_capacity(n);
    let mut tdiv = Vec::with_capacity(n);
    for (j, rho) in ch.parts.iter().enumerate() {
        let mut num = one.clone();
        let mut den = rat(&ch.z[j]);
        let mut td = one.clone();
        for &r in rho.parts() {
            num *= &one - rat(&q.pow(r as u32));
            let f = &one - rat(&t.pow(r as u32));
            den *= &f;
            td *= f;
        }
        w.push(num / den);
        tdiv.push(td);
    }
    let to_p = |v: &[BigRational]| -> Vec<BigRational> {
        (0..n)
            .map(|j| {
                let mut s = BigRational::zero();
                for (i, x) in v.iter().enumerate() {
                    if !x.is_zero() && !ch.chi[i][j].is_zero() {
                        s += x * rat(&ch.chi[i][j]);
                    }
                }
                s
            })
            .collect()
    };
    let pair = |a: &[BigRational], b: &[BigRational]| -> BigRational {
        let mut s = BigRational::zero();
        for j in 0..n {
            s += &a[j] * &b[j] * &w[j];
        }
        s
    };
    // monic P_μ in Schur coordinates, its power-sum image and its norm
    let mut done: Vec<(usize, Vec<BigRational>, Vec<BigRational>, BigRational)> = Vec::new();
    let mut out = vec![Vec::new(); n];
    for &li in order {
        let lam = &ch.parts[li];
        let mut pl = vec![BigRational::zero(); n];
        pl[li] = one.clone();
        let s_p = to_p(&pl);
        for (mi, pm, pm_p, norm) in &done {
            if !ch.parts[*mi].dominated_by(lam) {
                continue;
            }
            let c = pair(&s_p, pm_p) / norm;
            for (x, y) in pl.iter_mut().zip(pm) {
                *x -= &c * y;
            }
        }
        let pl_p = to_p(&pl);
        let norm = pair(&pl_p, &pl_p);
        // H_λ = c_λ P_λ[X/(1-t)]: divide each power-sum coordinate by Π(1 - t^ρ_i)
        let c = rat(&hook_normalization(lam).eval_int(q, t));
        let h_p: Vec<BigRational> =
            (0..n).map(|j| &c * &pl_p[j] / rat(&ch.z[j]) / &tdiv[j]).collect();
        out[li] = (0..n)
            .map(|i| {
                let mut s = BigRational::zero();
                for j in 0..n {
                    if !ch.chi[i][j].is_zero() {
                        s += &h_p[j] * rat(&ch.chi[i][j]);
                    }
                }
                s
            })
            .collect();
        done.push((li, pl, pl_p, norm));
    }
    out
}

/// Coefficients (constant term first) of the polynomial of degree `< xs.len()`
/// through the given points.
fn interpolate(xs: &[BigInt], ys: &[BigRational]) -> Vec<BigRational> {
    let m = xs.len();
    let mut dd: Vec<BigRational> = ys.to_vec();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / rat(&(&xs[i] - &xs[i - level]));
        }
    }
    let mut poly = vec![BigRational::zero(); m];
    for k in (0..m).rev() {
        // poly = poly * (x - x_k) + dd[k]
        let mut next = vec![BigRational::zero(); m];
        for (d, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < m {
                next[d + 1] += c;
            }
            next[d] -= c * rat(&xs[k]);
        }
        next[0] += &dd[k];
        poly = next;
    }
    poly
}

/// `H_λ` for every `λ ⊢ n`, with Gram-Schmidt run along `order` (a linear
/// extension of dominance, smallest first).
///
/// The Schur coefficient `K_{μλ}(q,t)` has `q`-degree at most `n(λ')` and
/// `t`-degree at most `n(λ)`. It is recovered by interpolation on a grid with
/// one node more than needed in each variable; a nonzero coefficient beyond
/// the bound, or a non-integral coefficient, is reported as `NotPolynomial`.
pub fn macdonald_h_with_order(order: &[Partition]) -> Result<BTreeMap<Partition, PolyExp>, MacError> {
    let Some(n) = order.first().map(Partition::degree) else {
        return Ok(BTreeMap::new());
    };
    let ch = characters(n);
    let idx: Vec<usize> = order
        .iter()
        .map(|l| ch.parts.iter().position(|p| p == l).expect("order lists partitions of n"))
        .collect();
    let dq = ch.parts.iter().map(|l| l.conjugate().n_value()).max().unwrap_or(0) + 2;
    let dt = ch.parts.iter().map(Partition::n_value).max().unwrap_or(0) + 2;
    let qs: Vec<BigInt> = (0..dq).map(|i| BigInt::from(2 + i)).collect();
    let ts: Vec<BigInt> = (0..dt).map(|j| BigInt::from(2 + j)).collect();
    let grid: Vec<Vec<Vec<Vec<BigRational>>>> = qs
        .par_iter()
        .map(|q| ts.par_iter().map(|t| h_values_at(&ch, &idx, q, t)).collect())
        .collect();
    let mut out = BTreeMap::new();
    for (li, lam) in ch.parts.iter().enumerate() {
        let (bq, bt) = (lam.conjugate().n_value(), lam.n_value());
        let mut h = PolyExp::zero(Basis::Schur);
        for (mi, mu) in ch.parts.iter().enumerate() {
            // interpolate in t for each q node, then in q for each t-degree
            let by_q: Vec<Vec<BigRational>> = (0..dq)
                .map(|a| {
                    let ys: Vec<BigRational> = (0..dt).map(|b| grid[a][b][li][mi].clone()).collect();
                    interpolate(&ts, &ys)
                })
                .collect();
            let mut poly = PolyQT::zero();
            for e in 0..dt {
                let ys: Vec<BigRational> = by_q.iter().map(|c| c[e].clone()).collect();
                for (d, c) in interpolate(&qs, &ys).into_iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if d > bq || e > bt || !c.is_integer() {
                        return Err(AlgError::NotPolynomial(format!(
                            "coefficient of s_{mu:?} in H_{lam:?} at q^{d} t^{e}: {c}"
                        ))
                        .into());
                    }
                    poly.add_term((d as u32, e as u32), &c.to_integer());
                }
            }
            h.add_term(mu.clone(), poly);
        }
        out.insert(lam.clone(), h);
    }
    Ok(out)
}

fn h_degree(n: usize) -> Result<HDegree, MacError> {
    if let Some(v) = H_BY_DEGREE.get(&n) {
        return Ok(v);
    }
    let all = macdonald_h_with_order(&partitions_of(n))?;
    let v = Arc::new(all.into_iter().map(|(l, h)| (l, Arc::new(h))).collect());
    H_BY_DEGREE.seed(n, Arc::clone(&v));
    Ok(v)
}

/// Degrees whose Macdonald polynomials are already computed, with their values.
pub fn computed_h_degrees() -> Vec<(usize, HDegree)> {
    H_BY_DEGREE.snapshot()
}

/// Install all `H_λ`, `λ ⊢ n`; ignored when degree `n` is already present.
pub fn seed_h_degree(n: usize, values: BTreeMap<Partition, PolyExp>) {
    H_BY_DEGREE.seed(n, Arc::new(values.into_iter().map(|(l, h)| (l, Arc::new(h))).collect()));
}

/// `H_λ[X;q,t] = J_λ[X/(1-t)]` in the Schur basis. Its coefficients are the
/// q,t-Kostka polynomials `K_{μλ}(q,t)`.
pub fn macdonald_h(lambda: &Partition) -> Result<Arc<PolyExp>, MacError> {
    Ok(h_degree(lambda.degree())?[lambda].clone())
}

/// `J_λ[X;q,t] = H_λ[X(1-t)]` in the Schur basis.
pub fn macdonald_j(lambda: &Partition) -> Arc<QtExp> {
    J.get_or_compute(lambda, || {
        let h = macdonald_h(lambda).expect("H is polynomial");
        let hr: QtExp = h.convert_ring().expect("polynomials embed in RAT_QT");
        Arc::new(
            plethystic_substitute(&hr, Alphabet::TimesOneMinusT)
                .expect("substitution stays in RAT_QT"),
        )
    })
}

/// All `J_λ`, `λ ⊢ n`, with Gram-Schmidt run along `order`.
pub fn macdonald_j_with_order(order: &[Partition]) -> Result<BTreeMap<Partition, QtExp>, MacError> {
    let mut out = BTreeMap::new();
    for (lam, h) in macdonald_h_with_order(order)? {
        let hr: QtExp = h.convert_ring()?;
        out.insert(lam, plethystic_substitute(&hr, Alphabet::TimesOneMinusT)?);
    }
    Ok(out)
}

/// `K^(k)_{μλ}(q,t)`: coefficients of `H_λ` in `{s^(k)_μ[X;t]}`.
pub fn kschur_qt_kostka(k: usize, lambda: &Partition) -> Result<BTreeMap<Partition, PolyQT>, MacError> {
    if !lambda.is_k_bounded(k) {
        return Err(PartitionError::NotKBounded(lambda.clone(), k).into());
    }
    let h = macdonald_h(lambda)?;
    Ok(to_kschur_basis(k, &*h)?.into_terms())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::scalar_qt;
    use crate::vertex::hall_littlewood;

    fn p(v: &[usize]) -> Partition {
        Partition::of(v)
    }

    fn pq(s: &str) -> PolyQT {
        s.parse().unwrap()
    }

    #[test]
    fn j_small() {
        let j1 = macdonald_j(&p(&[1]));
        assert_eq!(
            *j1,
            QtExp::term(Basis::Schur, p(&[1]), RatQT::from_poly(pq("1 - t")))
        );
        let j2 = macdonald_j(&p(&[2]));
        assert_eq!(j2.coeff(&p(&[2])), RatQT::from_poly(&pq("1 - t") * &pq("1 - qt")));
        let j11 = macdonald_j(&p(&[1, 1]));
        assert!(scalar_qt(&j2, &j11).unwrap().is_zero());
    }

    #[test]
    fn h_small() {
        assert_eq!(*macdonald_h(&p(&[1])).unwrap(), PolyExp::basis_element(Basis::Schur, p(&[1])));
        let h21 = macdonald_h(&p(&[2, 1])).unwrap();
        let want = PolyExp::from_terms(
            Basis::Schur,
            [
                (p(&[1, 1, 1]), pq("q")),
                (p(&[2, 1]), pq("1 + qt")),
                (p(&[3]), pq("t")),
            ],
        );
        assert_eq!(*h21, want);
    }

    #[test]
    fn q_zero_gives_hall_littlewood() {
        for n in 1..=4 {
            for lam in partitions_of(n) {
                let h = macdonald_h(&lam).unwrap();
                let at0 = h.map_coeffs(|c| c.at_q_zero());
                assert_eq!(at0, *hall_littlewood(&lam), "λ={lam:?}");
            }
        }
    }

    #[test]
    fn kostka_examples() {
        let k = kschur_qt_kostka(2, &p(&[1, 1, 1])).unwrap();
        assert_eq!(k, BTreeMap::from([(p(&[1, 1, 1]), pq("1")), (p(&[2, 1]), pq("t^2"))]));
        let k = kschur_qt_kostka(3, &p(&[2, 2])).unwrap();
        assert_eq!(
            k,
            BTreeMap::from([
                (p(&[1, 1, 1, 1]), pq("q^2")),
                (p(&[2, 1, 1]), pq("q + qt")),
                (p(&[2, 2]), pq("1 + q^2t^2")),
                (p(&[3, 1]), pq("t")),
            ])
        );
    }

    #[test]
    fn order_independence_degree_six() {
        let a = partitions_of(6);
        let mut b = a.clone();
        b.sort_by(|x, y| y.conjugate().cmp(&x.conjugate()));
        assert_ne!(a, b);
        assert_eq!(macdonald_j_with_order(&a).unwrap(), macdonald_j_with_order(&b).unwrap());
    }
}
