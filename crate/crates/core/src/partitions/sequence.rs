use std::fmt;
use std::str::FromStr;

use super::{Partition, PartitionError};

/// An ordered list of partitions, used to index generalized Schur products.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct PartitionSequence {
    elements: Vec<Partition>,
}

impl PartitionSequence {
    pub fn new(elements: Vec<Partition>) -> Self {
        Self { elements }
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.elements.iter().map(Partition::degree).sum()
    }

    /// Concatenation of all parts, in order (not necessarily decreasing).
    pub fn concat_parts(&self) -> Vec<usize> {
        self.elements.iter().flat_map(|p| p.parts().iter().copied()).collect()
    }

    /// True when the concatenation is weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.concat_parts().windows(2).all(|w| w[0] >= w[1])
    }

    /// The concatenation as a partition; `None` unless dominant.
    pub fn concat(&self) -> Option<Partition> {
        Partition::new(self.concat_parts()).ok()
    }

    /// Drop empty elements, which do not affect the generalized product.
    pub fn without_empty(&self) -> Self {
        Self::new(self.elements.iter().filter(|p| !p.is_empty()).cloned().collect())
    }
}

impl Partition {
    /// Greedy cut into consecutive blocks of main hook `k` (last block at most `k`).
    pub fn k_split(&self, k: usize) -> Result<PartitionSequence, PartitionError> {
        if k == 0 && !self.is_empty() {
            return Err(PartitionError::NotKBounded(self.clone(), k));
        }
        self.check_k_bounded(k)?;
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &part in self.parts() {
            match blocks.last_mut() {
                Some(b) if b[0] + b.len() < k + 1 => b.push(part),
                _ => blocks.push(vec![part]),
            }
        }
        Ok(PartitionSequence::new(
            blocks.into_iter().map(|b| Partition::of(&b)).collect(),
        ))
    }
}

/// Elements separated by `;`, e.g. `3;2,2;2,1;1`.
impl fmt::Display for PartitionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elements.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(";"))
    }
}

impl fmt::Debug for PartitionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elements.iter().map(|p| format!("{p:?}")).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for PartitionSequence {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, PartitionError> {
        if s.trim().is_empty() {
            return Ok(Self::default());
        }
        s.split(';')
            .map(str::parse)
            .collect::<Result<Vec<Partition>, _>>()
            .map(Self::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[&[usize]]) -> PartitionSequence {
        PartitionSequence::new(v.iter().map(|p| Partition::of(p)).collect())
    }

    #[test]
    fn k_split_examples() {
        let lam = Partition::of(&[3, 2, 2, 2, 1, 1]);
        assert_eq!(lam.k_split(3).unwrap(), seq(&[&[3], &[2, 2], &[2, 1], &[1]]));
        assert_eq!(lam.k_split(4).unwrap(), seq(&[&[3, 2], &[2, 2, 1], &[1]]));
        let small = Partition::of(&[2, 1]);
        assert_eq!(small.k_split(5).unwrap(), seq(&[&[2, 1]]));
        assert_eq!(Partition::empty().k_split(2).unwrap(), PartitionSequence::default());
        assert!(lam.k_split(2).is_err());
    }

    #[test]
    fn parse_display() {
        let s: PartitionSequence = "3;2,2;2,1;1".parse().unwrap();
        assert_eq!(s, seq(&[&[3], &[2, 2], &[2, 1], &[1]]));
        assert_eq!(s.to_string(), "3;2,2;2,1;1");
        assert!(s.is_dominant());
        assert!(!seq(&[&[1], &[2]]).is_dominant());
    }
}
