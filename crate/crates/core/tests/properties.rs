use num_bigint::BigInt;
use proptest::prelude::*;

use kschur::exactalg::{LaurentT, PolyQT, RatQT, Ring};
use kschur::partitions::{k_bounded_partitions, strip_test, Partition, StripKind};
use kschur::symfunc::{
    coproduct, lr_coefficient, omega, omega_t, pieri, scalar_hall, scalar_qt, schur_multiply,
    to_basis, Basis, PieriKind, SymExpansion,
};
use kschur::vertex::b_ell;

fn laurent() -> impl Strategy<Value = LaurentT> {
    prop::collection::vec((-3i64..4, -4i64..5), 0..4)
        .prop_map(|v| LaurentT::from_terms(v.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn poly() -> impl Strategy<Value = PolyQT> {
    prop::collection::vec(((0u32..3, 0u32..3), -3i64..4), 0..4)
        .prop_map(|v| PolyQT::from_terms(v.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

fn nonzero_poly() -> impl Strategy<Value = PolyQT> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratqt() -> impl Strategy<Value = RatQT> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatQT::new(n, d).unwrap())
}

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_multiset)
}

fn partition_of_degree(lo: usize, hi: usize) -> impl Strategy<Value = Partition> {
    partition(hi, hi).prop_filter("degree in range", move |p| (lo..=hi).contains(&p.degree()))
}

fn k_bounded() -> impl Strategy<Value = (usize, Partition)> {
    (1usize..=6, 0usize..=12).prop_flat_map(|(k, n)| {
        let all = k_bounded_partitions(n, k);
        (Just(k), prop::sample::select(all))
    })
}

fn int_schur(max_degree: usize) -> impl Strategy<Value = SymExpansion<BigInt>> {
    prop::collection::vec((partition_of_degree(0, max_degree), -3i64..4), 0..4).prop_map(|v| {
        SymExpansion::from_terms(Basis::Schur, v.into_iter().map(|(p, c)| (p, BigInt::from(c))))
    })
}

fn laurent_schur(max_degree: usize) -> impl Strategy<Value = SymExpansion<LaurentT>> {
    prop::collection::vec((partition_of_degree(0, max_degree), laurent()), 0..3)
        .prop_map(|v| SymExpansion::from_terms(Basis::Schur, v))
}

macro_rules! ring_axioms {
    ($name:ident, $strategy:expr) => {
        proptest! {
            #[test]
            fn $name(a in $strategy, b in $strategy, c in $strategy) {
                prop_assert_eq!(a.plus(&b), b.plus(&a));
                prop_assert_eq!(a.times(&b), b.times(&a));
                prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
                prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
                prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
                prop_assert!(a.minus(&a).is_zero());
                prop_assert_eq!(a.times(&Ring::one()), a.clone());
                prop_assert_eq!(a.plus(&Ring::zero()), a.clone());
            }
        }
    };
}

ring_axioms!(laurent_ring_axioms, laurent());
ring_axioms!(poly_ring_axioms, poly());
ring_axioms!(ratqt_field_axioms, ratqt());

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverting_t_is_an_involution(a in laurent()) {
        prop_assert_eq!(a.invert_t().invert_t(), a);
    }

    #[test]
    fn ratqt_equality_is_cross_multiplication(a in poly(), b in nonzero_poly(), c in poly(), d in nonzero_poly()) {
        let x = RatQT::new(a.clone(), b.clone()).unwrap();
        let y = RatQT::new(c.clone(), d.clone()).unwrap();
        prop_assert_eq!(x == y, a * d == c * b);
    }

    #[test]
    fn ratqt_inverse(x in ratqt()) {
        if !x.is_zero() {
            prop_assert_eq!(x.times(&x.inverse().unwrap()), RatQT::one());
        }
    }

    #[test]
    fn conjugation_is_an_involution(p in partition(8, 8)) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn k_conjugation_is_an_involution((k, p) in k_bounded()) {
        let w = p.k_conjugate(k).unwrap();
        prop_assert_eq!(w.degree(), p.degree());
        prop_assert!(w.is_k_bounded(k));
        prop_assert_eq!(w.k_conjugate(k).unwrap(), p);
    }

    #[test]
    fn k_split_blocks((k, p) in k_bounded()) {
        let split = p.k_split(k).unwrap();
        prop_assert_eq!(split.concat_parts(), p.parts().to_vec());
        let blocks = split.elements();
        for (i, b) in blocks.iter().enumerate() {
            let hook = b.main_hook().unwrap();
            if i + 1 < blocks.len() {
                prop_assert_eq!(hook, k);
            } else {
                prop_assert!(hook <= k);
            }
        }
    }

    #[test]
    fn union_respects_dominance(a in partition_of_degree(4, 5), b in partition_of_degree(4, 5),
                                c in partition_of_degree(4, 5), d in partition_of_degree(4, 5)) {
        if a.degree() == b.degree() && c.degree() == d.degree()
            && a.dominance_leq(&b).unwrap() && c.dominance_leq(&d).unwrap() {
            prop_assert!(a.union(&c).dominance_leq(&b.union(&d)).unwrap());
        }
    }

    #[test]
    fn classical_round_trips(f in int_schur(5)) {
        let f: SymExpansion<RatQT> = f.convert_ring().unwrap();
        for b in [Basis::M, Basis::E, Basis::H, Basis::P] {
            let g = to_basis(&f, b).unwrap();
            prop_assert_eq!(to_basis(&g, Basis::Schur).unwrap(), f.clone());
            for c in [Basis::M, Basis::E, Basis::H, Basis::P] {
                prop_assert_eq!(to_basis(&to_basis(&g, c).unwrap(), b).unwrap(), g.clone());
            }
        }
    }

    #[test]
    fn omega_is_an_involution(f in int_schur(6)) {
        prop_assert_eq!(omega(&omega(&f, false).unwrap(), false).unwrap(), f);
    }

    #[test]
    fn omega_t_is_an_involution(f in laurent_schur(4)) {
        prop_assert_eq!(omega_t(&omega_t(&f)), f);
    }

    #[test]
    fn qt_scalar_product_at_q_equal_t(f in int_schur(4), g in int_schur(4)) {
        let qt = scalar_qt(&f, &g).unwrap().at_q_eq_t().unwrap();
        prop_assert_eq!(qt, RatQT::from_int(scalar_hall(&f, &g).unwrap()));
    }

    #[test]
    fn lr_product_matches_h_basis_product(a in partition_of_degree(0, 4), b in partition_of_degree(0, 4)) {
        let sa = SymExpansion::<BigInt>::basis_element(Basis::Schur, a.clone());
        let sb = SymExpansion::<BigInt>::basis_element(Basis::Schur, b.clone());
        let (ha, hb) = (to_basis(&sa, Basis::H).unwrap(), to_basis(&sb, Basis::H).unwrap());
        let mut prod = SymExpansion::zero(Basis::H);
        for (x, c) in ha.iter() {
            for (y, d) in hb.iter() {
                prod.add_term(x.union(y), c * d);
            }
        }
        prop_assert_eq!(to_basis(&prod, Basis::Schur).unwrap(), schur_multiply(&sa, &sb));
    }

    #[test]
    fn coproduct_is_dual_to_multiplication(lam in partition_of_degree(0, 6)) {
        for ((mu, rho), c) in coproduct(&lam) {
            prop_assert_eq!(c, lr_coefficient(&lam, &mu, &rho));
        }
    }

    #[test]
    fn pieri_adds_strips(lam in partition_of_degree(0, 5), r in 0usize..4) {
        let s = SymExpansion::<BigInt>::basis_element(Basis::Schur, lam.clone());
        let h = pieri(&s, r, PieriKind::H);
        let e = pieri(&s, r, PieriKind::E);
        for mu in h.support() {
            prop_assert!(strip_test(&lam, mu, r, StripKind::Horizontal));
            prop_assert_eq!(mu.degree(), lam.degree() + r);
        }
        for mu in e.support() {
            prop_assert!(strip_test(&lam, mu, r, StripKind::Vertical));
        }
    }

    #[test]
    fn vertex_operator_commutation(f in laurent_schur(2), m in -2i64..5, n in -2i64..5) {
        let t = LaurentT::t_pow(1);
        let lhs = b_ell(m, &b_ell(n, &f));
        let mut rhs = b_ell(n, &b_ell(m, &f)).scale(&t);
        rhs.add_scaled(&b_ell(m + 1, &b_ell(n - 1, &f)), &t);
        rhs.add_scaled(&b_ell(n - 1, &b_ell(m + 1, &f)), &LaurentT::from(-1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn b_ell_raises_degree(lam in partition_of_degree(0, 3), ell in 0i64..4) {
        let f = SymExpansion::<LaurentT>::basis_element(Basis::Schur, lam.clone());
        for d in b_ell(ell, &f).degrees() {
            prop_assert_eq!(d as i64, lam.degree() as i64 + ell);
        }
    }

    #[test]
    fn expansion_json_round_trip(f in laurent_schur(4)) {
        prop_assert_eq!(SymExpansion::<LaurentT>::from_json(&f.to_json()).unwrap(), f);
    }
}
