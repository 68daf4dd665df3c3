//! Plethystic alphabet substitutions and the involution ω.

use super::{to_basis, Basis, SymError, SymExpansion};
use crate::exactalg::{LaurentT, PolyQT, RatQT, Ring, RingTag};

/// Supported substitutions `X -> A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `X / (1 - t)`
    OverOneMinusT,
    /// `X (1 - t)`, the inverse of `OverOneMinusT`
    TimesOneMinusT,
    /// `X (t - 1)`
    TimesTMinusOne,
    /// `-X`
    Negative,
    /// `t X`
    TimesT,
}

/// Image of `p_r` as a multiple of `p_r`.
fn power_sum_factor(sub: Alphabet, r: usize) -> RatQT {
    let tr = PolyQT::monomial(1.into(), 0, r as u32);
    let one = PolyQT::one();
    match sub {
        Alphabet::OverOneMinusT => {
            RatQT::new(one.clone(), &one - &tr).expect("1 - t^r is nonzero for r > 0")
        }
        Alphabet::TimesOneMinusT => RatQT::from_poly(&one - &tr),
        Alphabet::TimesTMinusOne => RatQT::from_poly(&tr - &one),
        Alphabet::Negative => RatQT::from_int((-1).into()),
        Alphabet::TimesT => RatQT::from_poly(tr),
    }
}

/// `f[A]`: expand in power sums, rescale each `p_ρ`, and convert back to the
/// basis of `f`. The result must fit the coefficient ring of `f`.
pub fn plethystic_substitute<C: Ring>(
    f: &SymExpansion<C>,
    sub: Alphabet,
) -> Result<SymExpansion<C>, SymError> {
    let fr: SymExpansion<RatQT> = f.convert_ring()?;
    let inp = to_basis(&fr, Basis::P)?;
    let mut scaled = SymExpansion::zero(Basis::P);
    for (rho, c) in inp.iter() {
        let mut factor = RatQT::one();
        for &r in rho.parts() {
            factor = &factor * &power_sum_factor(sub, r);
        }
        scaled.add_term(rho.clone(), c * &factor);
    }
    to_basis(&scaled, f.basis())?.convert_ring()
}

/// Untwisted: `s_λ -> s_λ'`. Twisted (`ω_t`): additionally `t -> 1/t` in
/// every coefficient, which needs `LAURENT_T` or `RAT_QT` coefficients.
pub fn omega<C: Ring>(f: &SymExpansion<C>, twisted: bool) -> Result<SymExpansion<C>, SymError> {
    if twisted && !matches!(C::TAG, RingTag::LaurentT | RingTag::RatQT) {
        return Err(SymError::ring(C::TAG));
    }
    let plain = match f.basis() {
        Basis::Schur => f.map_indices(Basis::Schur, |p| p.conjugate()),
        Basis::H => f.clone().retag(Basis::E),
        Basis::E => f.clone().retag(Basis::H),
        Basis::P => {
            let mut out = SymExpansion::zero(Basis::P);
            for (rho, c) in f.iter() {
                let odd = (rho.degree() - rho.len()) % 2 == 1;
                out.add_term(rho.clone(), if odd { c.negate() } else { c.clone() });
            }
            out
        }
        other => {
            let s = to_basis(f, Basis::Schur)?;
            to_basis(&s.map_indices(Basis::Schur, |p| p.conjugate()), other)?
        }
    };
    if !twisted {
        return Ok(plain);
    }
    plain
        .try_map_coeffs(|c| c.invert_t())
        .ok_or(SymError::ring(C::TAG))
}

/// `ω_t` specialised to Laurent coefficients.
pub fn omega_t(f: &SymExpansion<LaurentT>) -> SymExpansion<LaurentT> {
    omega(f, true).expect("Laurent coefficients support the twist")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{partitions_of, Partition};
    use num_bigint::BigInt;

    fn p(v: &[usize]) -> Partition {
        Partition::of(v)
    }

    fn lt(s: &str) -> LaurentT {
        s.parse().unwrap()
    }

    #[test]
    fn x_times_t_minus_one() {
        let s1 = SymExpansion::basis_element(Basis::Schur, p(&[1]));
        let got: SymExpansion<LaurentT> = plethystic_substitute(&s1, Alphabet::TimesTMinusOne).unwrap();
        assert_eq!(got, SymExpansion::term(Basis::Schur, p(&[1]), lt("t - 1")));
        let s2 = SymExpansion::basis_element(Basis::Schur, p(&[2]));
        let got: SymExpansion<LaurentT> = plethystic_substitute(&s2, Alphabet::TimesTMinusOne).unwrap();
        let want = SymExpansion::from_terms(
            Basis::Schur,
            [(p(&[2]), lt("t^2 - t")), (p(&[1, 1]), lt("1 - t"))],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn negative_alphabet_conjugates() {
        for n in 1..=5 {
            for lam in partitions_of(n) {
                let s: SymExpansion<BigInt> = SymExpansion::basis_element(Basis::Schur, lam.clone());
                let got = plethystic_substitute(&s, Alphabet::Negative).unwrap();
                let sign = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(got, SymExpansion::term(Basis::Schur, lam.conjugate(), BigInt::from(sign)));
            }
        }
    }

    #[test]
    fn over_one_minus_t_needs_fractions() {
        let s1: SymExpansion<LaurentT> = SymExpansion::basis_element(Basis::Schur, p(&[1]));
        assert!(matches!(
            plethystic_substitute(&s1, Alphabet::OverOneMinusT),
            Err(SymError::UnsupportedRing(_))
        ));
        let r: SymExpansion<RatQT> = s1.convert_ring().unwrap();
        let there = plethystic_substitute(&r, Alphabet::OverOneMinusT).unwrap();
        assert_eq!(plethystic_substitute(&there, Alphabet::TimesOneMinusT).unwrap(), r);
    }

    #[test]
    fn omega_examples() {
        let s21: SymExpansion<BigInt> = SymExpansion::basis_element(Basis::Schur, p(&[2, 1]));
        assert_eq!(omega(&s21, false).unwrap(), s21);
        let h3: SymExpansion<BigInt> = SymExpansion::basis_element(Basis::H, p(&[3]));
        assert_eq!(omega(&h3, false).unwrap(), SymExpansion::basis_element(Basis::E, p(&[3])));
        let ts3 = SymExpansion::term(Basis::Schur, p(&[3]), lt("t"));
        assert_eq!(
            omega(&ts3, true).unwrap(),
            SymExpansion::term(Basis::Schur, p(&[1, 1, 1]), lt("t^-1"))
        );
        assert!(omega(&s21, true).is_err());
    }
}
