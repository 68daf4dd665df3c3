//! k-split polynomials, the projections `T̄_j`, k-Schur functions (general `t`
//! and an independent `t = 1` construction), and the k-Schur basis.

use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactalg::{LaurentT, Ring};
use crate::memo::Memo;
use crate::partitions::{
    horizontal_strips, strip_test, vertical_strips, Partition, PartitionError, StripKind,
};
use crate::symfunc::{
    schur_multiply, solve_unitriangular, to_schur, Basis, PieriKind, SymError, SymExpansion,
};
use crate::vertex::{b_lambda, b_ell, h_s};

pub type Exp = SymExpansion<LaurentT>;
pub type IntExp = SymExpansion<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KSchurError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}

type Result<T> = std::result::Result<T, KSchurError>;

static KSCHUR: LazyLock<Memo<(usize, Partition), Arc<Exp>>> = LazyLock::new(Memo::new);
static KSCHUR_T1: LazyLock<Memo<(usize, Partition), Arc<IntExp>>> = LazyLock::new(Memo::new);
static KSPLIT_T1: LazyLock<Memo<(usize, Partition), Arc<IntExp>>> = LazyLock::new(Memo::new);

/// `G^(k)_λ[X;t] = ℋ_{λ^{→k}}`.
pub fn k_split_poly(k: usize, lambda: &Partition) -> Result<Arc<Exp>> {
    let split = lambda.k_split(k)?;
    Ok(h_s(&split))
}

/// `G^(k)_λ[X;1]`: product of the Schur functions of the k-split blocks.
pub fn k_split_poly_t1(k: usize, lambda: &Partition) -> Result<Arc<IntExp>> {
    let split = lambda.k_split(k)?;
    Ok(KSPLIT_T1.get_or_compute(&(k, lambda.clone()), || {
        let mut f = SymExpansion::one(Basis::Schur);
        for block in split.elements() {
            f = schur_multiply(&f, &SymExpansion::basis_element(Basis::Schur, block.clone()));
        }
        Arc::new(f)
    }))
}

fn schur_of<C: Ring>(f: &SymExpansion<C>) -> Result<SymExpansion<C>> {
    Ok(to_schur(f)?)
}

/// Coefficients of `f` in the basis `{G^(k)_λ}`.
pub fn to_g_basis(k: usize, f: &Exp) -> Result<Exp> {
    let f = schur_of(f)?;
    Ok(solve_unitriangular(
        &f,
        Basis::KSplit(k),
        |mu| mu.is_k_bounded(k),
        |mu| Ok((*k_split_poly(k, mu).map_err(to_sym)?).clone()),
    )?)
}

fn to_g_basis_t1(k: usize, f: &IntExp) -> Result<IntExp> {
    let f = schur_of(f)?;
    Ok(solve_unitriangular(
        &f,
        Basis::KSplit(k),
        |mu| mu.is_k_bounded(k),
        |mu| Ok((*k_split_poly_t1(k, mu).map_err(to_sym)?).clone()),
    )?)
}

fn to_sym(e: KSchurError) -> SymError {
    match e {
        KSchurError::Sym(s) => s,
        other => SymError::Malformed(other.to_string()),
    }
}

fn keep_first_part<C: Ring>(g: &SymExpansion<C>, j: usize, k: usize) -> SymExpansion<C> {
    SymExpansion::from_terms(
        Basis::KSplit(k),
        g.iter().filter(|(p, _)| p.first() == j).map(|(p, c)| (p.clone(), c.clone())),
    )
}

/// `T̄_j^(k) f`: keep the `G^(k)` terms whose index has first part `j`.
pub fn t_bar_project(k: usize, j: usize, f: &Exp) -> Result<Exp> {
    if j > k {
        return Err(PartitionError::InvalidInput(format!("projection index {j} exceeds k={k}")).into());
    }
    schur_of(&keep_first_part(&to_g_basis(k, f)?, j, k))
}

/// The `t = 1` projection `T_j^(k)`.
pub fn t_project_t1(k: usize, j: usize, f: &IntExp) -> Result<IntExp> {
    let g = keep_first_part(&to_g_basis_t1(k, f)?, j, k);
    let mut out = SymExpansion::zero(Basis::Schur);
    for (p, c) in g.iter() {
        out.add_scaled(&*k_split_poly_t1(k, p)?, c);
    }
    Ok(out)
}

/// `s^(k)_λ[X;t] = T̄_{λ₁} B_{λ₁} s^(k)_{(λ₂,…)}`, in the Schur basis.
pub fn k_schur(k: usize, lambda: &Partition) -> Result<Arc<Exp>> {
    lambda.check_k_bounded(k)?;
    let key = (k, lambda.clone());
    if let Some(v) = KSCHUR.get(&key) {
        return Ok(v);
    }
    let value = if lambda.is_empty() {
        SymExpansion::one(Basis::Schur)
    } else {
        let inner = k_schur(k, &lambda.tail())?;
        let raised = b_ell(lambda.first() as i64, &inner);
        t_bar_project(k, lambda.first(), &raised)?
    };
    let value = Arc::new(value);
    KSCHUR.seed(key, value.clone());
    Ok(value)
}

/// `s^(k)_λ[X]` built at `t = 1` from `T_{λ₁}(s_{λ₁} s^(k)_{(λ₂,…)})`.
pub fn k_schur_t1(k: usize, lambda: &Partition) -> Result<Arc<IntExp>> {
    lambda.check_k_bounded(k)?;
    let key = (k, lambda.clone());
    if let Some(v) = KSCHUR_T1.get(&key) {
        return Ok(v);
    }
    let value = if lambda.is_empty() {
        SymExpansion::one(Basis::Schur)
    } else {
        let inner = k_schur_t1(k, &lambda.tail())?;
        let row = SymExpansion::basis_element(Basis::Schur, Partition::row(lambda.first()));
        t_project_t1(k, lambda.first(), &schur_multiply(&row, &inner))?
    };
    let value = Arc::new(value);
    KSCHUR_T1.seed(key, value.clone());
    Ok(value)
}

/// Every `s^(k)_λ[X;t]` computed so far in this process.
pub fn computed_k_schur() -> Vec<((usize, Partition), Arc<Exp>)> {
    KSCHUR.snapshot()
}

/// Install a precomputed `s^(k)_λ[X;t]`; ignored when already present.
pub fn seed_k_schur(k: usize, lambda: Partition, value: Exp) {
    KSCHUR.seed((k, lambda), Arc::new(value));
}

/// Coefficients of `f` in `{s^(k)_λ[X;t]}`. The k-Schur functions are
/// embedded into the ring of `f`.
pub fn to_kschur_basis<C: Ring>(k: usize, f: &SymExpansion<C>) -> Result<SymExpansion<C>> {
    let f = schur_of(f)?;
    Ok(solve_unitriangular(
        &f,
        Basis::KSchur(k),
        |mu| mu.is_k_bounded(k),
        |mu| k_schur(k, mu).map_err(to_sym)?.convert_ring::<C>(),
    )?)
}

/// Coefficients of an integral `f` in `{s^(k)_λ[X]}` at `t = 1`.
pub fn to_kschur_basis_t1(k: usize, f: &IntExp) -> Result<IntExp> {
    let f = schur_of(f)?;
    Ok(solve_unitriangular(
        &f,
        Basis::KSchur(k),
        |mu| mu.is_k_bounded(k),
        |mu| Ok((*k_schur_t1(k, mu).map_err(to_sym)?).clone()),
    )?)
}

/// The k-rectangle `(ℓ^{k-ℓ+1})`.
pub fn k_rectangle(k: usize, ell: usize) -> Partition {
    Partition::rectangle(ell, k + 1 - ell)
}

/// Compute `B_{(ℓ^{k-ℓ+1})} s^(k)_λ` and return `c` with the result equal to
/// `t^c s^(k)_{λ ∪ (ℓ^{k-ℓ+1})}`.
pub fn rectangle_action(k: usize, ell: usize, lambda: &Partition) -> Result<u32> {
    if ell == 0 || ell > k {
        return Err(PartitionError::InvalidInput(format!("need 1 <= ℓ <= k, got ℓ={ell}, k={k}")).into());
    }
    let rect = k_rectangle(k, ell);
    let acted = b_lambda(&rect, &*k_schur(k, lambda)?);
    let target_index = lambda.union(&rect);
    let target = k_schur(k, &target_index)?;
    let violation = |why: &str| {
        KSchurError::TheoremViolation(format!(
            "B_{rect:?} s^({k})_{lambda:?} is not a t-power times s^({k})_{target_index:?}: {why}"
        ))
    };
    let lead = acted.coeff(&target_index);
    let (c, e) = lead.as_monomial().ok_or_else(|| violation("leading coefficient not a monomial"))?;
    if c != BigInt::from(1) || e < 0 {
        return Err(violation("leading coefficient not a nonnegative t-power"));
    }
    if acted != target.scale(&LaurentT::t_pow(e)) {
        return Err(violation("expansions differ"));
    }
    Ok(e as u32)
}

/// Reduce modulo the ideal generated by k-rectangles: expand at `t = 1` in the
/// k-Schur basis and drop every term with a reducible index.
pub fn quotient_reduce(k: usize, f: &IntExp) -> Result<IntExp> {
    let g = to_kschur_basis_t1(k, f)?;
    Ok(SymExpansion::from_terms(
        Basis::KSchur(k),
        g.iter()
            .filter(|(p, _)| p.is_k_irreducible(k))
            .map(|(p, c)| (p.clone(), c.clone())),
    ))
}

/// The candidate index sets of the k-Pieri rule: `μ/λ` an `ℓ`-strip of the
/// given kind and `μ^{ω_k}/λ^{ω_k}` a strip of the other kind.
pub fn pieri_sets(k: usize, lambda: &Partition, ell: usize, kind: PieriKind) -> Result<Vec<Partition>> {
    let lam_w = lambda.k_conjugate(k)?;
    let (strips, other) = match kind {
        PieriKind::H => (horizontal_strips(lambda, ell), StripKind::Vertical),
        PieriKind::E => (vertical_strips(lambda, ell), StripKind::Horizontal),
    };
    let mut out = Vec::new();
    for mu in strips {
        if !mu.is_k_bounded(k) {
            continue;
        }
        if strip_test(&lam_w, &mu.k_conjugate(k)?, ell, other) {
            out.push(mu);
        }
    }
    Ok(out)
}

/// Sum of `s^(k)_μ` over a list of indices, in the k-Schur basis.
pub fn kschur_sum(k: usize, indices: &[Partition]) -> IntExp {
    SymExpansion::from_terms(
        Basis::KSchur(k),
        indices.iter().map(|p| (p.clone(), BigInt::one())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{specialize, Specialization, Specialized};
    use crate::partitions::k_bounded_partitions;
    use crate::vertex::hall_littlewood;

    fn p(v: &[usize]) -> Partition {
        Partition::of(v)
    }

    fn exp(terms: &[(&[usize], &str)]) -> Exp {
        SymExpansion::from_terms(
            Basis::Schur,
            terms.iter().map(|(l, c)| (p(l), c.parse::<LaurentT>().unwrap())),
        )
    }

    #[test]
    fn split_examples() {
        assert_eq!(*k_split_poly(2, &p(&[2, 1])).unwrap(), exp(&[(&[2, 1], "1"), (&[3], "t")]));
        assert_eq!(*k_split_poly(3, &p(&[2, 1])).unwrap(), exp(&[(&[2, 1], "1")]));
        assert_eq!(*k_split_poly(2, &Partition::empty()).unwrap(), exp(&[(&[], "1")]));
        assert!(matches!(k_split_poly(2, &p(&[3])), Err(KSchurError::Partition(_))));
    }

    #[test]
    fn g_basis_examples() {
        let hl = hall_littlewood(&p(&[2, 1]));
        assert_eq!(
            to_g_basis(2, &hl).unwrap(),
            SymExpansion::basis_element(Basis::KSplit(2), p(&[2, 1]))
        );
        assert!(matches!(
            to_g_basis(2, &exp(&[(&[3], "1")])),
            Err(KSchurError::Sym(SymError::NotInSubspace(..)))
        ));
    }

    #[test]
    fn kschur_examples() {
        assert_eq!(
            *k_schur(2, &p(&[1, 1, 1])).unwrap(),
            exp(&[(&[1, 1, 1], "1"), (&[2, 1], "t")])
        );
        assert_eq!(
            *k_schur(3, &p(&[2, 2, 1, 1])).unwrap(),
            exp(&[(&[2, 2, 1, 1], "1"), (&[3, 2, 1], "t"), (&[3, 3], "t^2")])
        );
        assert_eq!(
            *k_schur(2, &p(&[1, 1, 1, 1, 1])).unwrap(),
            exp(&[
                (&[1, 1, 1, 1, 1], "1"),
                (&[2, 1, 1, 1], "t + t^2"),
                (&[2, 2, 1], "t^2 + t^3"),
                (&[3, 1, 1], "t^3"),
                (&[3, 2], "t^4"),
            ])
        );
    }

    #[test]
    fn t1_path_agrees() {
        for k in 1..=3 {
            for n in 0..=5 {
                for lam in k_bounded_partitions(n, k) {
                    let general = k_schur(k, &lam).unwrap();
                    let special = general.map_coeffs(|c| match specialize(c, Specialization::TToOne) {
                        Specialized::Int(v) => v,
                        Specialized::Laurent(_) => unreachable!(),
                    });
                    assert_eq!(special, *k_schur_t1(k, &lam).unwrap(), "k={k} λ={lam:?}");
                }
            }
        }
    }

    #[test]
    fn rectangle_examples() {
        assert_eq!(rectangle_action(2, 2, &Partition::empty()).unwrap(), 0);
        rectangle_action(2, 1, &p(&[1])).unwrap();
        for lam in k_bounded_partitions(3, 3) {
            for ell in 1..=3 {
                rectangle_action(3, ell, &lam).unwrap();
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let s21: IntExp = (*k_schur_t1(3, &p(&[2, 1])).unwrap()).clone();
        assert_eq!(
            quotient_reduce(3, &s21).unwrap(),
            SymExpansion::basis_element(Basis::KSchur(3), p(&[2, 1]))
        );
        let s321: IntExp = (*k_schur_t1(3, &p(&[3, 2, 1])).unwrap()).clone();
        assert!(quotient_reduce(3, &s321).unwrap().is_zero());
    }

    #[test]
    fn pieri_set_examples() {
        assert_eq!(
            pieri_sets(4, &p(&[3, 2, 1]), 2, PieriKind::E).unwrap(),
            vec![p(&[3, 2, 1, 1, 1]), p(&[3, 2, 2, 1]), p(&[3, 3, 2])]
        );
        assert_eq!(pieri_sets(3, &p(&[2, 1]), 0, PieriKind::H).unwrap(), vec![p(&[2, 1])]);
        assert_eq!(
            pieri_sets(9, &p(&[2, 1]), 2, PieriKind::H).unwrap(),
            horizontal_strips(&p(&[2, 1]), 2)
        );
    }
}
