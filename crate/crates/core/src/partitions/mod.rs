//! Integer partitions and the combinatorics built on them.

mod enumerate;
mod sequence;
mod skew;

pub use enumerate::{
    enumerate, k_bounded_partitions, k_irreducible_partitions, partitions_of, PartitionFilter,
};
pub use sequence::PartitionSequence;
pub use skew::{k_conjugate, k_multiply, SkewShape};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partitions have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("main hook of the empty partition is undefined")]
    EmptyPartition,
    #[error("partition {0} is not {1}-bounded")]
    NotKBounded(Partition, usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is graded: first by degree, then lexicographically. Within one
/// degree this is a linear extension of dominance.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Build from parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::InvalidInput(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    /// Build from parts that are known to be a partition. Panics otherwise.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("not a partition")
    }

    /// Sort arbitrary nonnegative parts into a partition.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The single-row partition `(n)`, empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    /// The rectangle `(w^h)`.
    pub fn rectangle(w: usize, h: usize) -> Self {
        if w == 0 {
            Self::empty()
        } else {
            Self(vec![w; h])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    /// `(λ₂, λ₃, …)`.
    pub fn tail(&self) -> Self {
        Self(self.0.iter().skip(1).copied().collect())
    }

    /// `(m, λ₁, λ₂, …)`; `m` must be at least `λ₁`.
    pub fn prepend(&self, m: usize) -> Self {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(m);
        v.extend_from_slice(&self.0);
        Self::new(v).expect("prepended part too small")
    }

    pub fn conjugate(&self) -> Self {
        let n = self.first();
        Self((1..=n).map(|i| self.0.iter().take_while(|&&p| p >= i).count()).collect())
    }

    pub fn main_hook(&self) -> Result<usize, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        Ok(self.first() + self.len() - 1)
    }

    /// Main hook with the empty partition mapped to 0.
    pub(crate) fn main_hook_or_zero(&self) -> usize {
        self.main_hook().unwrap_or(0)
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.first() <= k
    }

    pub(crate) fn check_k_bounded(&self, k: usize) -> Result<(), PartitionError> {
        if self.is_k_bounded(k) {
            Ok(())
        } else {
            Err(PartitionError::NotKBounded(self.clone(), k))
        }
    }

    /// Parts of both, sorted (`λ ∪ μ`).
    pub fn union(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::from_multiset(v)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn dominance_leq(&self, other: &Self) -> Result<bool, PartitionError> {
        let (a, b) = (self.degree(), other.degree());
        if a != b {
            return Err(PartitionError::DegreeMismatch(a, b));
        }
        Ok(self.dominated_by(other))
    }

    /// Dominance test assuming equal degrees.
    pub(crate) fn dominated_by(&self, other: &Self) -> bool {
        let (mut s, mut t) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            s += self.get(i);
            t += other.get(i);
            if s > t {
                return false;
            }
        }
        true
    }

    /// Multiplicity of the part value `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.0.iter().filter(|&&p| p == v).count()
    }

    /// `m_i` for `i = 1..=λ₁`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first()];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// Arm and leg lengths of cell `(row, col)` (0-based, English convention).
    pub fn arm_leg(&self, row: usize, col: usize) -> (usize, usize) {
        let arm = self.0[row] - col - 1;
        let leg = self.0[row + 1..].iter().take_while(|&&p| p > col).count();
        (arm, leg)
    }

    /// Cells `(row, col)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_value(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// At most `i` parts equal to `k - i`, for `0 <= i < k`; and k-bounded.
    pub fn is_k_irreducible(&self, k: usize) -> bool {
        self.is_k_bounded(k) && (0..k).all(|i| self.multiplicity(k - i) <= i)
    }
}

/// Horizontal or vertical strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StripKind {
    Horizontal,
    Vertical,
}

/// Is `outer / inner` an `r`-strip of the given kind?
pub fn strip_test(inner: &Partition, outer: &Partition, r: usize, kind: StripKind) -> bool {
    if !outer.contains(inner) || outer.degree() != inner.degree() + r {
        return false;
    }
    match kind {
        StripKind::Horizontal => (0..outer.len()).all(|i| i == 0 || outer.get(i) <= inner.get(i - 1)),
        StripKind::Vertical => (0..outer.len()).all(|i| outer.get(i) <= inner.get(i) + 1),
    }
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal `r`-strip, in increasing order.
pub fn horizontal_strips(lambda: &Partition, r: usize) -> Vec<Partition> {
    // Row i may grow up to the old length of row i-1; one new row is allowed.
    fn go(lam: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > lam.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip keeps shape valid"));
            }
            return;
        }
        let base = lam.get(i);
        let cap = if i == 0 { left } else { (lam.get(i - 1) - base).min(left) };
        for add in 0..=cap {
            cur.push(base + add);
            go(lam, i + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, r, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All `μ ⊇ λ` with `μ/λ` a vertical `r`-strip, in increasing order.
pub fn vertical_strips(lambda: &Partition, r: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strips(&lambda.conjugate(), r)
        .into_iter()
        .map(|p| p.conjugate())
        .collect();
    out.sort();
    out
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Comma-separated parts, e.g. `3,2,1`; the empty partition prints as ``.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::InvalidInput(format!("cannot parse partition {s:?}")))?;
        Self::new(parts)
    }
}

impl std::ops::Index<usize> for Partition {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::of(v)
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 1]).dominance_leq(&p(&[3])).unwrap());
        assert!(!p(&[3]).dominance_leq(&p(&[2, 1])).unwrap());
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])).unwrap());
        assert_eq!(
            p(&[2]).dominance_leq(&p(&[2, 1])),
            Err(PartitionError::DegreeMismatch(2, 3))
        );
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn main_hook_examples() {
        assert_eq!(p(&[4, 2]).main_hook(), Ok(5));
        assert_eq!(p(&[7]).main_hook(), Ok(7));
        assert_eq!(p(&[2, 2, 1]).main_hook(), Ok(4));
        assert_eq!(Partition::empty().main_hook(), Err(PartitionError::EmptyPartition));
    }

    #[test]
    fn strip_examples() {
        use StripKind::*;
        assert!(strip_test(&p(&[2, 1]), &p(&[3, 2]), 2, Horizontal));
        assert!(strip_test(&p(&[1]), &p(&[1, 1, 1]), 2, Vertical));
        assert!(!strip_test(&p(&[1]), &p(&[3]), 2, Vertical));
    }

    #[test]
    fn strip_enumeration_matches_test() {
        for lam in partitions_of(4) {
            for r in 0..4 {
                let hs = horizontal_strips(&lam, r);
                let vs = vertical_strips(&lam, r);
                let all = partitions_of(4 + r);
                let bh: Vec<_> = all
                    .iter()
                    .filter(|m| strip_test(&lam, m, r, StripKind::Horizontal))
                    .cloned()
                    .collect();
                let bv: Vec<_> = all
                    .iter()
                    .filter(|m| strip_test(&lam, m, r, StripKind::Vertical))
                    .cloned()
                    .collect();
                assert_eq!(hs, bh, "{lam:?} {r}");
                assert_eq!(vs, bv, "{lam:?} {r}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(2, 2)".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 2, 1]).to_string(), "3,2,1");
    }

    #[test]
    fn graded_lex_order() {
        let mut v = partitions_of(4);
        v.sort();
        assert_eq!(
            v,
            vec![p(&[1, 1, 1, 1]), p(&[2, 1, 1]), p(&[2, 2]), p(&[3, 1]), p(&[4])]
        );
        assert!(p(&[5]) < p(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn irreducibility() {
        assert!(p(&[2, 1, 1]).is_k_irreducible(3));
        assert!(!p(&[2, 2]).is_k_irreducible(3));
        assert!(!p(&[3]).is_k_irreducible(3));
        assert!(!p(&[1, 1, 1]).is_k_irreducible(3));
    }
}
