use super::{Partition, PartitionError};

/// A skew diagram in French coordinates: row 0 is the bottom row, and each
/// row is the half-open column interval `[start, end)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SkewShape {
    rows: Vec<(usize, usize)>,
}

impl SkewShape {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `outer / inner`; requires `inner ⊆ outer`.
    pub fn new(outer: &Partition, inner: &Partition) -> Result<Self, PartitionError> {
        if !outer.contains(inner) {
            return Err(PartitionError::InvalidInput(format!(
                "{inner:?} is not contained in {outer:?}"
            )));
        }
        Ok(Self {
            rows: (0..outer.len()).map(|i| (inner.get(i), outer.get(i))).collect(),
        })
    }

    /// Build from explicit rows; fails unless starts and ends weakly
    /// decrease going up and every row is an interval.
    pub fn from_rows(rows: Vec<(usize, usize)>) -> Result<Self, PartitionError> {
        let s = Self { rows };
        if s.is_valid() {
            Ok(s)
        } else {
            Err(PartitionError::InvalidInput(format!("{:?} is not a skew shape", s.rows)))
        }
    }

    fn is_valid(&self) -> bool {
        self.rows.iter().all(|(a, b)| a <= b)
            && self
                .rows
                .windows(2)
                .all(|w| w[1].0 <= w[0].0 && w[1].1 <= w[0].1)
    }

    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn outer(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.1).collect()).expect("valid shape")
    }

    pub fn inner(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.0).collect()).expect("valid shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|(a, b)| b - a).sum()
    }

    /// Row lengths read bottom to top.
    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(|(a, b)| b - a).collect()
    }

    /// Cells strictly east in the row, plus cells strictly north in the column, plus one.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let east = self.rows[row].1 - col - 1;
        let north = self.rows[row + 1..]
            .iter()
            .filter(|(a, b)| *a <= col && col < *b)
            .count();
        east + north + 1
    }

    pub fn max_hook(&self) -> usize {
        (0..self.rows.len())
            .flat_map(|r| (self.rows[r].0..self.rows[r].1).map(move |c| (r, c)))
            .map(|(r, c)| self.hook(r, c))
            .max()
            .unwrap_or(0)
    }
}

/// `m ×^(k) D`: add a column of `m` cells in a new leftmost column, sharing
/// as many of the top rows of `D` as the shape and the hook bound allow.
pub fn k_multiply(m: usize, d: &SkewShape, k: usize) -> Result<SkewShape, PartitionError> {
    if m == 0 || m > k {
        return Err(PartitionError::InvalidInput(format!(
            "column height {m} outside 1..={k}"
        )));
    }
    if d.max_hook() > k {
        return Err(PartitionError::InvalidInput(format!(
            "shape {:?} has a hook larger than {k}",
            d.rows
        )));
    }
    let r = d.num_rows();
    for o in (0..=m.min(r)).rev() {
        if d.rows[r - o..].iter().any(|(a, _)| *a != 0) {
            continue;
        }
        let mut rows: Vec<(usize, usize)> = d.rows.iter().map(|(a, b)| (a + 1, b + 1)).collect();
        for row in &mut rows[r - o..] {
            row.0 = 0;
        }
        rows.extend(std::iter::repeat_n((0, 1), m - o));
        let cand = SkewShape { rows };
        if !cand.is_valid() {
            continue;
        }
        let fits = (r - o..cand.num_rows()).all(|i| cand.hook(i, 0) <= k);
        if fits {
            return Ok(cand);
        }
    }
    unreachable!("zero overlap always fits")
}

/// The k-conjugate of a k-bounded partition.
pub fn k_conjugate(lambda: &Partition, k: usize) -> Result<Partition, PartitionError> {
    lambda.check_k_bounded(k)?;
    let mut d = SkewShape::empty();
    for &part in lambda.parts().iter().rev() {
        d = k_multiply(part, &d, k)?;
    }
    Partition::new(d.row_lengths())
}

impl Partition {
    pub fn k_conjugate(&self, k: usize) -> Result<Partition, PartitionError> {
        k_conjugate(self, k)
    }
}
