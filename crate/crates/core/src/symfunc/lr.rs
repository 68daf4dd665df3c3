//! Littlewood-Richardson coefficients, products, Pieri rules and skewing.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;

use super::{Basis, SymExpansion};
use crate::exactalg::Ring;
use crate::memo::Memo;
use crate::partitions::{horizontal_strips, vertical_strips, Partition};

type IntMap = Arc<BTreeMap<Partition, BigInt>>;

static SKEW: LazyLock<Memo<(Partition, Partition), IntMap>> = LazyLock::new(Memo::new);
static PRODUCT: LazyLock<Memo<(Partition, Partition), IntMap>> = LazyLock::new(Memo::new);

/// Count LR fillings of `outer / inner`, grouped by content; with `target`
/// only fillings of exactly that content are counted.
fn lr_fillings(outer: &Partition, inner: &Partition, target: Option<&Partition>) -> BTreeMap<Partition, BigInt> {
    let mut out = BTreeMap::new();
    if !outer.contains(inner) {
        return out;
    }
    let rows = outer.len();
    // reading order: rows top to bottom, each row right to left
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in (inner.get(r)..outer.get(r)).rev() {
            cells.push((r, c));
        }
    }
    let n = cells.len();
    if let Some(t) = target {
        if t.degree() != n {
            return out;
        }
    }
    let cap: Vec<usize> = match target {
        Some(t) => (0..=n).map(|i| if i == 0 { 0 } else { t.get(i - 1) }).collect(),
        None => vec![usize::MAX; n + 1],
    };
    let mut tab: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; outer.get(r)]).collect();
    let mut counts = vec![0usize; n + 2];
    counts[0] = usize::MAX;

    struct Ctx<'a> {
        cells: &'a [(usize, usize)],
        outer: &'a Partition,
        inner: &'a Partition,
        cap: &'a [usize],
        out: &'a mut BTreeMap<Partition, BigInt>,
    }

    fn dfs(ctx: &mut Ctx<'_>, idx: usize, tab: &mut Vec<Vec<usize>>, counts: &mut Vec<usize>) {
        if idx == ctx.cells.len() {
            let parts: Vec<usize> = counts[1..].iter().copied().take_while(|&c| c > 0).collect();
            *ctx.out.entry(Partition::of(&parts)).or_insert_with(BigInt::zero) += 1;
            return;
        }
        let (r, c) = ctx.cells[idx];
        let hi = if c + 1 < ctx.outer.get(r) {
            tab[r][c + 1]
        } else {
            ctx.cells.len()
        };
        let lo = if r > 0 && c >= ctx.inner.get(r - 1) {
            tab[r - 1][c] + 1
        } else {
            1
        };
        for v in lo..=hi {
            if counts[v] + 1 > counts[v - 1] || counts[v] >= ctx.cap[v] {
                continue;
            }
            counts[v] += 1;
            tab[r][c] = v;
            dfs(ctx, idx + 1, tab, counts);
            tab[r][c] = 0;
            counts[v] -= 1;
        }
    }

    let mut ctx = Ctx {
        cells: &cells,
        outer,
        inner,
        cap: &cap,
        out: &mut out,
    };
    dfs(&mut ctx, 0, &mut tab, &mut counts);
    out
}

/// `s_{outer/inner} = Σ_ρ c^{outer}_{inner,ρ} s_ρ`.
pub fn skew_schur(outer: &Partition, inner: &Partition) -> IntMap {
    SKEW.get_or_compute(&(outer.clone(), inner.clone()), || {
        Arc::new(lr_fillings(outer, inner, None))
    })
}

/// `c^ν_{λμ}`.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> BigInt {
    lr_fillings(nu, lambda, Some(mu))
        .into_values()
        .next()
        .unwrap_or_default()
}

/// Partitions `ν ⊇ lower` of size `n` with at most `max_len` parts and `ν₁ ≤ max_first`.
fn shapes_above(lower: &Partition, n: usize, max_len: usize, max_first: usize) -> Vec<Partition> {
    fn go(lower: &Partition, i: usize, left: usize, prev: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let need: usize = (i..lower.len()).map(|j| lower.get(j)).sum();
        if left < need {
            return;
        }
        if left == 0 {
            out.push(Partition::of(cur));
            return;
        }
        if i >= max_len {
            return;
        }
        let lo = lower.get(i).max(1);
        for v in lo..=prev.min(left) {
            cur.push(v);
            go(lower, i + 1, left - v, v, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lower, 0, n, max_first, max_len, &mut Vec::new(), &mut out);
    out
}

/// `s_λ s_μ = Σ_ν c^ν_{λμ} s_ν`.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> IntMap {
    let key = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    PRODUCT.get_or_compute(&key, || {
        let (a, b) = (&key.0, &key.1);
        let mut out = BTreeMap::new();
        if a.is_empty() || b.is_empty() {
            out.insert(if a.is_empty() { b.clone() } else { a.clone() }, BigInt::one());
            return Arc::new(out);
        }
        let lower = Partition::new(
            (0..a.len().max(b.len())).map(|i| a.get(i).max(b.get(i))).collect(),
        )
        .expect("componentwise max of partitions");
        let n = a.degree() + b.degree();
        for nu in shapes_above(&lower, n, a.len() + b.len(), a.first() + b.first()) {
            // fill nu / b with content a: fewer candidates when a is the smaller one
            let c = lr_fillings(&nu, b, Some(a)).into_values().next();
            if let Some(c) = c {
                out.insert(nu, c);
            }
        }
        Arc::new(out)
    })
}

fn assert_schur<C: Ring>(f: &SymExpansion<C>) {
    assert_eq!(f.basis(), Basis::Schur, "expected a Schur expansion");
}

/// Product of two Schur expansions.
///
/// # Panics
/// If either input is not in the Schur basis.
pub fn schur_multiply<C: Ring>(f: &SymExpansion<C>, g: &SymExpansion<C>) -> SymExpansion<C> {
    assert_schur(f);
    assert_schur(g);
    let mut out = SymExpansion::zero(Basis::Schur);
    for (l, a) in f.iter() {
        for (m, b) in g.iter() {
            let ab = a.times(b);
            for (nu, c) in lr_product(l, m).iter() {
                out.add_term(nu.clone(), ab.scale_int(c));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieriKind {
    H,
    E,
}

/// Multiply a Schur expansion by `h_r` or `e_r`.
///
/// # Panics
/// If `f` is not in the Schur basis.
pub fn pieri<C: Ring>(f: &SymExpansion<C>, r: usize, kind: PieriKind) -> SymExpansion<C> {
    assert_schur(f);
    let mut out = SymExpansion::zero(Basis::Schur);
    for (l, c) in f.iter() {
        let strips = match kind {
            PieriKind::H => horizontal_strips(l, r),
            PieriKind::E => vertical_strips(l, r),
        };
        for mu in strips {
            out.add_term(mu, c.clone());
        }
    }
    out
}

/// `s_μ^⊥ f`, i.e. `Σ c_λ s_{λ/μ}`.
///
/// # Panics
/// If `f` is not in the Schur basis.
pub fn skew_or_perp<C: Ring>(mu: &Partition, f: &SymExpansion<C>) -> SymExpansion<C> {
    assert_schur(f);
    let mut out = SymExpansion::zero(Basis::Schur);
    for (l, c) in f.iter() {
        if l.degree() < mu.degree() {
            continue;
        }
        for (nu, m) in skew_schur(l, mu).iter() {
            out.add_term(nu.clone(), c.scale_int(m));
        }
    }
    out
}

/// `g^⊥ f` for Schur expansions `g`, `f`.
pub fn perp<C: Ring>(g: &SymExpansion<C>, f: &SymExpansion<C>) -> SymExpansion<C> {
    assert_schur(g);
    let mut out = SymExpansion::zero(Basis::Schur);
    for (mu, c) in g.iter() {
        out.add_scaled(&skew_or_perp(mu, f), c);
    }
    out
}
