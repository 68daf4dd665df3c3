//! Hall and (q,t) scalar products, and the Schur coproduct.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{skew_schur, to_basis, Basis, SymError, SymExpansion};
use crate::exactalg::{PolyQT, RatQT, Ring};
use crate::partitions::Partition;

/// `z_λ = Π_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in lambda.multiplicities().iter().enumerate() {
        for j in 1..=m {
            z *= BigInt::from((i + 1) * j);
        }
    }
    z
}

/// Hall scalar product; Schur functions are orthonormal.
pub fn scalar_hall<C: Ring>(f: &SymExpansion<C>, g: &SymExpansion<C>) -> Result<C, SymError> {
    let (a, b) = (to_basis(f, Basis::Schur)?, to_basis(g, Basis::Schur)?);
    let mut s = C::zero();
    for (p, c) in a.iter() {
        if let Some(d) = b.get(p) {
            s = s.plus(&c.times(d));
        }
    }
    Ok(s)
}

/// `<p_ρ, p_ρ>_{q,t} = z_ρ Π (1 - q^{ρ_i}) / (1 - t^{ρ_i})`.
pub fn power_sum_norm_qt(rho: &Partition) -> RatQT {
    let mut num = PolyQT::constant(z_lambda(rho));
    let mut den = PolyQT::one();
    for &r in rho.parts() {
        num = &num * &(&PolyQT::one() - &PolyQT::monomial(1.into(), r as u32, 0));
        den = &den * &(&PolyQT::one() - &PolyQT::monomial(1.into(), 0, r as u32));
    }
    RatQT::new(num, den).expect("nonzero denominator")
}

/// Macdonald (q,t) scalar product, diagonal on power sums.
pub fn scalar_qt<C: Ring>(f: &SymExpansion<C>, g: &SymExpansion<C>) -> Result<RatQT, SymError> {
    let a = to_basis(&f.convert_ring::<RatQT>()?, Basis::P)?;
    let b = to_basis(&g.convert_ring::<RatQT>()?, Basis::P)?;
    let mut s = RatQT::zero();
    for (rho, c) in a.iter() {
        if let Some(d) = b.get(rho) {
            s = &s + &(&(c * d) * &power_sum_norm_qt(rho));
        }
    }
    Ok(s)
}

/// `s_λ[X+Y] = Σ c^λ_{μρ} s_μ[X] s_ρ[Y]`, keyed by `(μ, ρ)`.
pub fn coproduct(lambda: &Partition) -> BTreeMap<(Partition, Partition), BigInt> {
    let mut out = BTreeMap::new();
    for d in 0..=lambda.degree() {
        for mu in crate::partitions::partitions_of(d) {
            if !lambda.contains(&mu) {
                continue;
            }
            for (rho, c) in skew_schur(lambda, &mu).iter() {
                out.insert((mu.clone(), rho.clone()), c.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::of(v)
    }

    #[test]
    fn z_values() {
        assert_eq!(z_lambda(&p(&[2])), BigInt::from(2));
        assert_eq!(z_lambda(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(z_lambda(&p(&[2, 2, 1])), BigInt::from(8));
    }

    #[test]
    fn hall_orthonormal() {
        let s21: SymExpansion<BigInt> = SymExpansion::basis_element(Basis::Schur, p(&[2, 1]));
        assert_eq!(scalar_hall(&s21, &s21).unwrap(), BigInt::one());
        let h21: SymExpansion<BigInt> = SymExpansion::basis_element(Basis::H, p(&[2, 1]));
        assert_eq!(scalar_hall(&h21, &h21).unwrap(), BigInt::from(2));
    }

    #[test]
    fn qt_power_sums() {
        let p2: SymExpansion<BigInt> = SymExpansion::basis_element(Basis::P, p(&[2]));
        let want = RatQT::new("2 - 2q^2".parse().unwrap(), "1 - t^2".parse().unwrap()).unwrap();
        assert_eq!(scalar_qt(&p2, &p2).unwrap(), want);
        let p11: SymExpansion<BigInt> = SymExpansion::basis_element(Basis::P, p(&[1, 1]));
        assert!(scalar_qt(&p11, &p2).unwrap().is_zero());
    }

    #[test]
    fn coproduct_examples() {
        let one = BigInt::one();
        let c1 = coproduct(&p(&[1]));
        assert_eq!(c1.len(), 2);
        assert_eq!(c1[&(p(&[1]), Partition::empty())], one);
        assert_eq!(c1[&(Partition::empty(), p(&[1]))], one);
        let c2 = coproduct(&p(&[2]));
        assert_eq!(c2.len(), 3);
        assert_eq!(c2[&(p(&[1]), p(&[1]))], one);
    }
}
