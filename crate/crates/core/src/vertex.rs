//! Vertex operators `B_ℓ`, Hall-Littlewood polynomials, generalized Schur
//! products `ℋ_S`, and an independent recurrence for their Schur coefficients.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::exactalg::LaurentT;
use crate::memo::Memo;
use crate::partitions::{partitions_of, Partition, PartitionSequence};
use crate::symfunc::{
    lr_product, pieri, plethystic_substitute, skew_or_perp, skew_schur, Alphabet, Basis,
    PieriKind, SymExpansion,
};

pub type Exp = SymExpansion<LaurentT>;

static HOOK_SUB: LazyLock<Memo<usize, Arc<Exp>>> = LazyLock::new(Memo::new);
static B_ON_S: LazyLock<Memo<(i64, Partition), Arc<Exp>>> = LazyLock::new(Memo::new);
static HALL: LazyLock<Memo<Partition, Arc<Exp>>> = LazyLock::new(Memo::new);
static HS: LazyLock<Memo<Vec<Partition>, Arc<Exp>>> = LazyLock::new(Memo::new);
static MORRIS: LazyLock<Memo<(Vec<Partition>, usize, Partition), LaurentT>> =
    LazyLock::new(Memo::new);

/// `s_i[X(t-1)]` in the Schur basis.
pub fn s_i_t_minus_one(i: usize) -> Arc<Exp> {
    HOOK_SUB.get_or_compute(&i, || {
        let s: Exp = SymExpansion::basis_element(Basis::Schur, Partition::row(i));
        Arc::new(
            plethystic_substitute(&s, Alphabet::TimesTMinusOne)
                .expect("integral power-sum substitution"),
        )
    })
}

/// `B_ℓ s_λ`.
fn b_on_schur(ell: i64, lambda: &Partition) -> Arc<Exp> {
    B_ON_S.get_or_compute(&(ell, lambda.clone()), || {
        let mut out = SymExpansion::zero(Basis::Schur);
        let s_lambda: Exp = SymExpansion::basis_element(Basis::Schur, lambda.clone());
        for i in 0..=lambda.degree() {
            let m = i as i64 + ell;
            if m < 0 {
                continue;
            }
            let mut skewed = SymExpansion::zero(Basis::Schur);
            for (mu, c) in s_i_t_minus_one(i).iter() {
                skewed.add_scaled(&skew_or_perp(mu, &s_lambda), c);
            }
            out.add_scaled(&pieri(&skewed, m as usize, PieriKind::H), &LaurentT::one());
        }
        Arc::new(out)
    })
}

/// `B_ℓ f = Σ_{i≥0} s_{i+ℓ} (s_i[X(t-1)])^⊥ f` for a Schur expansion `f`.
///
/// # Panics
/// If `f` is not in the Schur basis.
pub fn b_ell(ell: i64, f: &Exp) -> Exp {
    assert_eq!(f.basis(), Basis::Schur, "vertex operators act on Schur expansions");
    let mut out = SymExpansion::zero(Basis::Schur);
    for (lam, c) in f.iter() {
        out.add_scaled(&b_on_schur(ell, lam), c);
    }
    out
}

/// Expand `Π_{i<j} (1 - t e_ij)` applied to the index vector `parts`.
pub fn raising_expansion(parts: &[i64]) -> BTreeMap<Vec<i64>, LaurentT> {
    let mut cur: BTreeMap<Vec<i64>, LaurentT> = BTreeMap::new();
    cur.insert(parts.to_vec(), LaurentT::one());
    let m = parts.len();
    let minus_t = LaurentT::monomial(-BigInt::one(), 1);
    for i in 0..m {
        for j in i + 1..m {
            let mut next = cur.clone();
            for (v, c) in &cur {
                let mut w = v.clone();
                w[i] += 1;
                w[j] -= 1;
                let slot = next.entry(w.clone()).or_default();
                slot.add_assign_ref(&(c * &minus_t));
                if slot.is_zero() {
                    next.remove(&w);
                }
            }
            cur = next;
        }
    }
    cur
}

/// Apply `Σ_v c_v B_{v_1} ⋯ B_{v_m}` to `f`, sharing common suffixes.
fn apply_composites(vectors: &BTreeMap<Vec<i64>, LaurentT>, f: &Exp) -> Exp {
    fn rec(items: &[(&[i64], &LaurentT)], g: &Exp, out: &mut Exp) {
        if g.is_zero() {
            return;
        }
        let mut groups: BTreeMap<i64, Vec<(&[i64], &LaurentT)>> = BTreeMap::new();
        for &(v, c) in items {
            match v.split_last() {
                None => out.add_scaled(g, c),
                Some((last, rest)) => groups.entry(*last).or_default().push((rest, c)),
            }
        }
        for (ell, group) in groups {
            rec(&group, &b_ell(ell, g), out);
        }
    }
    let items: Vec<(&[i64], &LaurentT)> = vectors.iter().map(|(v, c)| (v.as_slice(), c)).collect();
    let mut out = SymExpansion::zero(Basis::Schur);
    rec(&items, f, &mut out);
    out
}

/// `B_λ f`, with `B_() = id`.
pub fn b_lambda(lambda: &Partition, f: &Exp) -> Exp {
    let parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    apply_composites(&raising_expansion(&parts), f)
}

/// `H_λ[X;t] = B_{λ₁} ⋯ B_{λ_ℓ} · 1`.
pub fn hall_littlewood(lambda: &Partition) -> Arc<Exp> {
    HALL.get_or_compute(lambda, || {
        if lambda.is_empty() {
            return Arc::new(SymExpansion::one(Basis::Schur));
        }
        let inner = hall_littlewood(&lambda.tail());
        Arc::new(b_ell(lambda.first() as i64, &inner))
    })
}

/// `ℋ_S = B_{λ^(1)} ℋ_{(λ^(2), …)}`, `ℋ_() = 1`.
pub fn h_s(s: &PartitionSequence) -> Arc<Exp> {
    let elems = s.without_empty().elements().to_vec();
    h_s_elems(&elems)
}

fn h_s_elems(elems: &[Partition]) -> Arc<Exp> {
    HS.get_or_compute(&elems.to_vec(), || match elems.split_first() {
        None => Arc::new(SymExpansion::one(Basis::Schur)),
        Some((head, rest)) => Arc::new(b_lambda(head, &h_s_elems(rest))),
    })
}

/// `K_{μ;S}(t)` for every `μ ⊢ |S|`, from the coset recurrence. Zero values
/// are omitted.
pub fn morris_kostka(s: &PartitionSequence) -> BTreeMap<Partition, LaurentT> {
    let elems = s.without_empty().elements().to_vec();
    let pad = s.degree();
    partitions_of(s.degree())
        .into_iter()
        .filter_map(|mu| {
            let k = morris(&elems, pad, &mu);
            (!k.is_zero()).then_some((mu, k))
        })
        .collect()
}

/// All `m`-subsets of `0..n` in increasing order.
fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < m - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// Recurrence on `S = (λ^(1), …)` followed by a block of `pad` zero parts,
/// which supplies enough variables for the result to be stable.
fn morris(elems: &[Partition], pad: usize, mu: &Partition) -> LaurentT {
    let key = (elems.to_vec(), pad, mu.clone());
    if let Some(v) = MORRIS.get(&key) {
        return v;
    }
    let value = morris_uncached(elems, pad, mu);
    MORRIS.seed(key, value.clone());
    value
}

fn morris_uncached(elems: &[Partition], pad: usize, mu: &Partition) -> LaurentT {
    let Some((lam1, rest)) = elems.split_first() else {
        return if mu.is_empty() { LaurentT::one() } else { LaurentT::zero() };
    };
    let n: usize = elems.iter().map(Partition::len).sum::<usize>() + pad;
    if mu.len() > n {
        return LaurentT::zero();
    }
    let m = lam1.len();
    let mut total = LaurentT::zero();
    for sel in subsets(n, m) {
        // α_r = μ_{i_r} - i_r + r, 0-based positions
        let alpha: Vec<i64> = sel
            .iter()
            .enumerate()
            .map(|(r, &i)| mu.get(i) as i64 - i as i64 + r as i64)
            .collect();
        if alpha
            .iter()
            .enumerate()
            .any(|(r, &a)| a < lam1.get(r) as i64)
        {
            continue;
        }
        let mut beta = Vec::with_capacity(n - m);
        let mut next = 0;
        for j in 0..n {
            if next < m && sel[next] == j {
                next += 1;
                continue;
            }
            let p = m + beta.len();
            beta.push((mu.get(j) as i64 - j as i64 + p as i64) as usize);
        }
        let alpha = Partition::new(alpha.iter().map(|&a| a as usize).collect())
            .expect("alpha is a partition");
        let beta = Partition::new(beta).expect("beta is a partition");
        let length: usize = sel.iter().enumerate().map(|(r, &i)| i - r).sum();
        let mut inner = LaurentT::zero();
        for (rho, d) in skew_schur(&alpha, lam1).iter() {
            for (nu, c) in lr_product(rho, &beta).iter() {
                let k = morris(rest, pad, nu);
                if !k.is_zero() {
                    inner.add_assign_ref(&k.scale(&(d * c)));
                }
            }
        }
        if inner.is_zero() {
            continue;
        }
        let e = (alpha.degree() - lam1.degree()) as i64;
        let signed = if length.is_multiple_of(2) { inner } else { -&inner };
        total.add_assign_ref(&signed.shift(e));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::of(v)
    }

    fn lt(s: &str) -> LaurentT {
        s.parse().unwrap()
    }

    fn exp(terms: &[(&[usize], &str)]) -> Exp {
        SymExpansion::from_terms(Basis::Schur, terms.iter().map(|(l, c)| (p(l), lt(c))))
    }

    fn one() -> Exp {
        SymExpansion::one(Basis::Schur)
    }

    #[test]
    fn b_on_one() {
        for r in 0..4 {
            assert_eq!(b_ell(r, &one()), exp(&[(&vec![r as usize; 1.min(r as usize)], "1")]));
        }
        assert!(b_ell(-1, &one()).is_zero());
        assert!(b_ell(-3, &one()).is_zero());
    }

    #[test]
    fn b1_on_s1() {
        let s1 = exp(&[(&[1], "1")]);
        assert_eq!(b_ell(1, &s1), exp(&[(&[1, 1], "1"), (&[2], "t")]));
    }

    #[test]
    fn b2_b1_on_one() {
        let v = b_ell(2, &b_ell(1, &one()));
        assert_eq!(v, exp(&[(&[2, 1], "1"), (&[3], "t")]));
        // commutation B_1 B_2 = t B_2 B_1 on 1
        let w = b_ell(1, &b_ell(2, &one()));
        assert_eq!(w, exp(&[(&[2, 1], "t"), (&[3], "t^2")]));
    }

    #[test]
    fn b_lambda_gives_schur_on_one() {
        for lam in [p(&[1, 1]), p(&[2, 2]), p(&[3, 1]), p(&[2, 1, 1])] {
            assert_eq!(b_lambda(&lam, &one()), exp(&[(lam.parts(), "1")]));
        }
        let f = exp(&[(&[2, 1], "t"), (&[1], "2")]);
        assert_eq!(b_lambda(&p(&[3]), &f), b_ell(3, &f));
    }

    #[test]
    fn hall_littlewood_examples() {
        assert_eq!(*hall_littlewood(&p(&[2, 1])), exp(&[(&[2, 1], "1"), (&[3], "t")]));
        assert_eq!(
            *hall_littlewood(&p(&[1, 1, 1])),
            exp(&[(&[1, 1, 1], "1"), (&[2, 1], "t + t^2"), (&[3], "t^3")])
        );
        assert_eq!(*hall_littlewood(&Partition::empty()), one());
    }

    #[test]
    fn generalized_products() {
        let s: PartitionSequence = "2;1".parse().unwrap();
        assert_eq!(*h_s(&s), exp(&[(&[2, 1], "1"), (&[3], "t")]));
        let single: PartitionSequence = "2,2,1".parse().unwrap();
        assert_eq!(*h_s(&single), exp(&[(&[2, 2, 1], "1")]));
    }

    #[test]
    fn morris_small_cases() {
        let s: PartitionSequence = "2;1".parse().unwrap();
        let k = morris_kostka(&s);
        assert_eq!(k.get(&p(&[3])), Some(&lt("t")));
        assert_eq!(k.get(&p(&[2, 1])), Some(&lt("1")));
        assert_eq!(k.len(), 2);
        let s: PartitionSequence = "1;1".parse().unwrap();
        let k = morris_kostka(&s);
        assert_eq!(k.get(&p(&[2])), Some(&lt("t")));
        assert_eq!(k.get(&p(&[1, 1])), Some(&lt("1")));
    }

    #[test]
    fn raising_expansion_two_parts() {
        let e = raising_expansion(&[2, 1]);
        assert_eq!(e.len(), 2);
        assert_eq!(e[&vec![3, 0]], lt("-t"));
        assert_eq!(e[&vec![2, 1]], lt("1"));
    }
}
