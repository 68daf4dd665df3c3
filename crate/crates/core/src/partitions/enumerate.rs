use super::Partition;

/// Which partitions [`enumerate`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionFilter {
    AllKBounded,
    KIrreducible,
}

/// All partitions of `n`, in increasing graded-lex order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    k_bounded_partitions(n, n)
}

/// Partitions of `n` with every part at most `k`, in increasing order.
pub fn k_bounded_partitions(n: usize, k: usize) -> Vec<Partition> {
    fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::of(cur));
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::new(), &mut out);
    out.reverse();
    out
}

/// The `k!` k-irreducible partitions, in increasing order.
pub fn k_irreducible_partitions(k: usize) -> Vec<Partition> {
    // choose the multiplicity of part k-i in 0..=i, independently for each i
    let mut out = vec![Vec::<usize>::new()];
    for i in 1..k {
        let part = k - i;
        out = out
            .into_iter()
            .flat_map(|base| {
                (0..=i).map(move |m| {
                    let mut v = base.clone();
                    v.extend(std::iter::repeat_n(part, m));
                    v
                })
            })
            .collect();
    }
    let mut parts: Vec<Partition> = out.into_iter().map(|v| Partition::of(&v)).collect();
    parts.sort();
    parts
}

/// Enumerate k-bounded partitions of `n`, or the full set of k-irreducibles
/// (then `n` is ignored).
pub fn enumerate(n: usize, k: usize, filter: PartitionFilter) -> Vec<Partition> {
    match filter {
        PartitionFilter::AllKBounded => k_bounded_partitions(n, k),
        PartitionFilter::KIrreducible => k_irreducible_partitions(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::of(v)
    }

    #[test]
    fn irreducible_k3() {
        let got = k_irreducible_partitions(3);
        let mut want = vec![
            Partition::empty(),
            p(&[1]),
            p(&[2]),
            p(&[1, 1]),
            p(&[2, 1]),
            p(&[2, 1, 1]),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(k_irreducible_partitions(4).len(), 24);
        assert!(k_irreducible_partitions(5).iter().all(|l| l.is_k_irreducible(5)));
    }

    #[test]
    fn three_bounded_of_four() {
        let got = enumerate(4, 3, PartitionFilter::AllKBounded);
        assert_eq!(got, vec![p(&[1, 1, 1, 1]), p(&[2, 1, 1]), p(&[2, 2]), p(&[3, 1])]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
