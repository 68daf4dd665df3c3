//! Library results against brute-force reference computations written here
//! from first principles: tableau enumeration, the charge statistic, cores.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use kschur::exactalg::{LaurentT, PolyQT};
use kschur::kschur::{k_schur, k_schur_t1};
use kschur::macdonald::macdonald_h;
use kschur::partitions::{
    k_bounded_partitions, k_irreducible_partitions, partitions_of, Partition, PartitionSequence,
};
use kschur::symfunc::{schur_multiply, to_basis, Basis, SymExpansion};
use kschur::vertex::{hall_littlewood, morris_kostka};

/// All semistandard tableaux of `shape` with entries in `1..=n`, rows listed top down.
fn ssyt(shape: &[usize], n: u8) -> Vec<Vec<Vec<u8>>> {
    fn fill(shape: &[usize], n: u8, r: usize, c: usize, t: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        if r == shape.len() {
            out.push(t.clone());
            return;
        }
        if c == shape[r] {
            return fill(shape, n, r + 1, 0, t, out);
        }
        let left = if c > 0 { t[r][c - 1] } else { 1 };
        let above = if r > 0 { t[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=n {
            t[r].push(v);
            fill(shape, n, r, c + 1, t, out);
            t[r].pop();
        }
    }
    let mut out = Vec::new();
    let mut t = vec![Vec::new(); shape.len()];
    fill(shape, n, 0, 0, &mut t, &mut out);
    out
}

fn content(t: &[Vec<u8>], len: usize) -> Vec<usize> {
    let mut c = vec![0; len];
    for &v in t.iter().flatten() {
        c[v as usize - 1] += 1;
    }
    c
}

fn tableaux_of_content(shape: &Partition, mu: &Partition) -> Vec<Vec<Vec<u8>>> {
    ssyt(shape.parts(), mu.len() as u8)
        .into_iter()
        .filter(|t| content(t, mu.len()) == mu.parts())
        .collect()
}

/// Charge of a word with partition content.
fn charge(word: &[u8]) -> i64 {
    let mut used = vec![false; word.len()];
    let mut total = 0;
    loop {
        // pick 1, 2, 3, ... scanning leftwards cyclically from the right end
        let mut pos = word.len();
        let mut index = 0;
        let mut letter = 1u8;
        let mut found_any = false;
        loop {
            let left = (0..pos).rev().find(|&i| !used[i] && word[i] == letter);
            let hit = match left {
                Some(i) => Some((i, false)),
                None => (pos..word.len()).rev().find(|&i| !used[i] && word[i] == letter).map(|i| (i, true)),
            };
            let Some((i, wrapped)) = hit else { break };
            if wrapped {
                index += 1;
            }
            total += index;
            found_any = true;
            used[i] = true;
            pos = i;
            letter += 1;
        }
        if !found_any {
            return total;
        }
    }
}

fn reading_word(t: &[Vec<u8>]) -> Vec<u8> {
    t.iter().rev().flatten().copied().collect()
}

fn kostka_foulkes(lam: &Partition, mu: &Partition) -> LaurentT {
    let mut out = LaurentT::zero();
    for t in tableaux_of_content(lam, mu) {
        out.add_term(charge(&reading_word(&t)), &BigInt::from(1));
    }
    out
}

#[test]
fn kostka_numbers_by_tableau_count() {
    for n in 0..=7 {
        for mu in partitions_of(n) {
            let h = SymExpansion::<BigInt>::basis_element(Basis::H, mu.clone());
            let s = to_basis(&h, Basis::Schur).unwrap();
            for lam in partitions_of(n) {
                let count = tableaux_of_content(&lam, &mu).len();
                assert_eq!(s.coeff(&lam), BigInt::from(count), "K_{lam:?},{mu:?}");
            }
        }
    }
}

#[test]
fn hall_littlewood_by_charge() {
    for n in 0..=6 {
        for mu in partitions_of(n) {
            let h = hall_littlewood(&mu);
            for lam in partitions_of(n) {
                assert_eq!(h.coeff(&lam), kostka_foulkes(&lam, &mu), "K_{lam:?},{mu:?}(t)");
            }
        }
    }
}

#[test]
fn one_bounded_kschur_is_hall_littlewood() {
    for n in 0..=6 {
        let ones = Partition::of(&vec![1; n]);
        assert_eq!(*k_schur(1, &ones).unwrap(), *hall_littlewood(&ones));
    }
}

#[test]
fn large_k_gives_schur() {
    for n in 0..=6 {
        for lam in partitions_of(n) {
            let s = SymExpansion::<LaurentT>::basis_element(Basis::Schur, lam.clone());
            assert_eq!(*k_schur(n.max(1), &lam).unwrap(), s);
        }
    }
}

/// Schur polynomial in `n` variables as exponent vector -> coefficient.
fn schur_poly(lam: &Partition, n: usize) -> HashMap<Vec<u8>, i64> {
    let mut out = HashMap::new();
    for t in ssyt(lam.parts(), n as u8) {
        let e: Vec<u8> = content(&t, n).into_iter().map(|c| c as u8).collect();
        *out.entry(e).or_insert(0) += 1;
    }
    out
}

fn poly_mul(a: &HashMap<Vec<u8>, i64>, b: &HashMap<Vec<u8>, i64>) -> HashMap<Vec<u8>, i64> {
    let mut out = HashMap::new();
    for (x, c) in a {
        for (y, d) in b {
            let e: Vec<u8> = x.iter().zip(y).map(|(u, v)| u + v).collect();
            *out.entry(e).or_insert(0) += c * d;
        }
    }
    out
}

/// Schur coefficients of a symmetric polynomial of degree `d` in at least `d` variables.
fn schur_coefficients(f: &HashMap<Vec<u8>, i64>, d: usize, n: usize) -> BTreeMap<Partition, i64> {
    let mut parts = partitions_of(d);
    parts.sort_by(|a, b| b.parts().cmp(a.parts()));
    let mono = |p: &Partition| {
        let mut e = vec![0u8; n];
        for (i, &v) in p.parts().iter().enumerate() {
            e[i] = v as u8;
        }
        e
    };
    let mut out = BTreeMap::new();
    for (i, nu) in parts.iter().enumerate() {
        let mut c = f.get(&mono(nu)).copied().unwrap_or(0);
        for above in &parts[..i] {
            let a = out.get(above).copied().unwrap_or(0);
            if a != 0 {
                c -= a * tableaux_of_content(above, nu).len() as i64;
            }
        }
        if c != 0 {
            out.insert(nu.clone(), c);
        }
    }
    out
}

#[test]
fn lr_products_by_polynomial_multiplication() {
    for d1 in 0..=3 {
        for d2 in 0..=3 {
            let n = d1 + d2;
            for a in partitions_of(d1) {
                for b in partitions_of(d2) {
                    let brute = schur_coefficients(&poly_mul(&schur_poly(&a, n), &schur_poly(&b, n)), n, n);
                    let sa = SymExpansion::<BigInt>::basis_element(Basis::Schur, a.clone());
                    let sb = SymExpansion::<BigInt>::basis_element(Basis::Schur, b.clone());
                    let lib: BTreeMap<Partition, i64> = schur_multiply(&sa, &sb)
                        .iter()
                        .map(|(p, c)| (p.clone(), i64::try_from(c).unwrap()))
                        .collect();
                    assert_eq!(lib, brute, "s_{a:?} s_{b:?}");
                }
            }
        }
    }
}

#[test]
fn generalized_kostka_at_one_is_product_multiplicity() {
    for k in 1..=3 {
        for n in 0..=6 {
            for lam in k_bounded_partitions(n, k) {
                let split: PartitionSequence = lam.k_split(k).unwrap();
                let mut prod: HashMap<Vec<u8>, i64> = HashMap::from([(vec![0u8; n], 1)]);
                for b in split.elements() {
                    prod = poly_mul(&prod, &schur_poly(b, n));
                }
                let brute = schur_coefficients(&prod, n, n);
                let lib: BTreeMap<Partition, i64> = morris_kostka(&split)
                    .into_iter()
                    .map(|(p, c)| (p, i64::try_from(c.at_one()).unwrap()))
                    .filter(|(_, c)| *c != 0)
                    .collect();
                assert_eq!(lib, brute, "{split}");
            }
        }
    }
}

/// `λ^{ω_k}` through the bijection with (k+1)-cores.
fn k_conjugate_via_core(lam: &Partition, k: usize) -> Partition {
    let parts = lam.parts();
    let mut rows = vec![0usize; parts.len()];
    for i in (0..parts.len()).rev() {
        let below = |j: usize| rows[i + 1..].iter().filter(|&&r| r > j).count();
        let mut s = 0;
        while parts[i] + below(s) > k {
            s += 1;
        }
        rows[i] = s + parts[i];
    }
    assert!(rows.windows(2).all(|w| w[0] >= w[1]), "core rows decrease");
    let width = rows.first().copied().unwrap_or(0);
    let hook = |i: usize, j: usize| rows[i] - j + rows[i + 1..].iter().filter(|&&r| r > j).count();
    let cols: Vec<usize> = (0..width)
        .map(|j| (0..rows.len()).filter(|&i| rows[i] > j && hook(i, j) <= k).count())
        .collect();
    Partition::from_multiset(cols)
}

#[test]
fn k_conjugate_via_cores() {
    for k in 1..=5 {
        for n in 0..=10 {
            for lam in k_bounded_partitions(n, k) {
                assert_eq!(lam.k_conjugate(k).unwrap(), k_conjugate_via_core(&lam, k), "k={k} {lam:?}");
            }
        }
    }
}

#[test]
fn irreducible_partitions_by_multiplicity_rule() {
    for k in 1..=5 {
        let max: usize = (1..k).map(|i| i * (k - i)).sum();
        let mut brute = Vec::new();
        for n in 0..=max {
            for p in k_bounded_partitions(n, k) {
                let ok = (1..k).all(|i| p.parts().iter().filter(|&&v| v == k - i).count() <= i)
                    && !p.parts().contains(&k);
                if ok {
                    brute.push(p);
                }
            }
        }
        let mut lib = k_irreducible_partitions(k);
        lib.sort();
        brute.sort();
        assert_eq!(lib, brute);
        assert_eq!(brute.len(), (1..=k).product::<usize>());
    }
}

fn swap_qt(p: &PolyQT) -> PolyQT {
    PolyQT::from_terms(p.terms().map(|((a, b), c)| ((b, a), c.clone())))
}

#[test]
fn macdonald_duality_and_dimensions() {
    for n in 1..=5 {
        for lam in partitions_of(n) {
            let h = macdonald_h(&lam).unwrap();
            let hc = macdonald_h(&lam.conjugate()).unwrap();
            for mu in partitions_of(n) {
                assert_eq!(h.coeff(&mu), swap_qt(&hc.coeff(&mu.conjugate())), "K_{mu:?},{lam:?}");
                // K(1,1) counts standard tableaux of shape mu
                let ones = Partition::of(&vec![1; n]);
                let syt = tableaux_of_content(&mu, &ones).len();
                let at11 = h.coeff(&mu).eval_int(&BigInt::from(1), &BigInt::from(1));
                assert_eq!(at11, BigInt::from(syt));
            }
        }
    }
}

#[test]
fn kschur_t1_at_k_one_is_power_of_s1() {
    for n in 0..=6 {
        let ones = Partition::of(&vec![1; n]);
        let h = SymExpansion::<BigInt>::basis_element(Basis::H, ones.clone());
        assert_eq!(*k_schur_t1(1, &ones).unwrap(), to_basis(&h, Basis::Schur).unwrap());
    }
}
