//! Integer partitions and the diagram combinatorics used throughout the crate.

use std::fmt;

use crate::error::Error;

/// A weakly decreasing sequence of positive parts.
///
/// The derived ordering is lexicographic on the parts, which is what every
/// `BTreeMap<Partition, _>` in the crate iterates by.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First (largest) part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let mut out = Vec::with_capacity(width);
        for j in 0..width {
            out.push(self.0.iter().filter(|&&p| p as usize > j).count() as u32);
        }
        Partition(out)
    }

    /// Multiplicities `(i, m_i)` for every `i` with `m_i > 0`, where the
    /// multiplicity of zero is `n - len`.
    pub fn multiplicities(&self, n: usize) -> Result<Vec<(u32, u32)>, Error> {
        if self.len() > n {
            return Err(Error::PartitionTooLong { len: self.len(), n });
        }
        let mut out = Vec::new();
        if n > self.len() {
            out.push((0, (n - self.len()) as u32));
        }
        out.extend(self.positive_multiplicities());
        Ok(out)
    }

    /// Multiplicities of the positive parts, in increasing part order.
    pub fn positive_multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Arm and leg of the 0-based cell `(row, col)`.
    pub fn arm_leg(&self, row: usize, col: usize) -> Result<(u32, u32), Error> {
        if row >= self.len() || col >= self.0[row] as usize {
            return Err(Error::CellOutsideDiagram { row, col });
        }
        let arm = self.0[row] - col as u32 - 1;
        let column_height = self.0.iter().filter(|&&p| p as usize > col).count();
        let leg = (column_height - row - 1) as u32;
        Ok((arm, leg))
    }

    /// Cells `(row, col)` of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// `z(μ) = Π i^{m_i} m_i!`, the order of the centralizer of a permutation
    /// of cycle type μ.
    pub fn zee(&self) -> num_bigint::BigInt {
        let mut out = num_bigint::BigInt::from(1u32);
        for (i, m) in self.positive_multiplicities() {
            for k in 1..=m {
                out *= i;
                out *= k;
            }
        }
        out
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `[a, μ]`: prepend a part `a ≥ μ₁`.
    pub fn prepend(&self, a: u32) -> Result<Partition, Error> {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(a);
        parts.extend_from_slice(&self.0);
        Partition::new(parts)
    }

    /// Drops the first part.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Diagram containment `inner ⊆ self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// Is `self / inner` a horizontal strip (at most one cell per column)?
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        if inner.len() > self.len() {
            return false;
        }
        // interlacing: self_1 ≥ inner_1 ≥ self_2 ≥ inner_2 ≥ ...
        (0..self.len()).all(|i| self.part(i) >= inner.part(i) && inner.part(i) >= self.part(i + 1))
    }

    /// The partition whose parts are the nonzero multiplicities `m_i(μ)`,
    /// `i ≥ 0`, with `m_0 = n - len`.
    pub fn multiplicity_type(&self, n: usize) -> Result<Partition, Error> {
        let ms = self.multiplicities(n)?;
        Ok(Partition::from_unsorted(ms.into_iter().map(|(_, m)| m).collect()))
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Shorthand for tests and literals; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// All partitions of `m` with at most `max_len` parts, in reverse
/// lexicographic order (`(4), (3,1), (2,2), ...`).
pub fn partitions_of(m: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(m, m, max_len, &mut cur, &mut out);
    out
}

fn fill(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

/// All partitions of size at most `max_size` (any length), grouped by size.
pub fn partitions_up_to(max_size: u32) -> Vec<Partition> {
    (0..=max_size).flat_map(|m| partitions_of(m, m as usize)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![].conjugate(), part![]);
        assert_eq!(part![3, 1].conjugate(), part![2, 1, 1]);
        assert_eq!(part![2, 2].conjugate(), part![2, 2]);
    }

    #[test]
    fn conjugate_is_involution() {
        for mu in partitions_up_to(8) {
            let c = mu.conjugate();
            assert_eq!(c.size(), mu.size());
            assert_eq!(c.conjugate(), mu);
        }
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(part![2, 1, 1].multiplicities(4).unwrap(), vec![(0, 1), (1, 2), (2, 1)]);
        assert_eq!(part![].multiplicities(3).unwrap(), vec![(0, 3)]);
        assert_eq!(part![3].multiplicities(1).unwrap(), vec![(3, 1)]);
        assert!(matches!(part![1, 1].multiplicities(1), Err(Error::PartitionTooLong { len: 2, n: 1 })));
    }

    #[test]
    fn multiplicities_sum_to_n() {
        for mu in partitions_up_to(6) {
            for n in mu.len()..=7 {
                let total: u32 = mu.multiplicities(n).unwrap().iter().map(|(_, m)| m).sum();
                assert_eq!(total as usize, n);
            }
        }
    }

    #[test]
    fn arm_leg_examples() {
        assert_eq!(part![1].arm_leg(0, 0).unwrap(), (0, 0));
        assert_eq!(part![2, 1].arm_leg(0, 0).unwrap(), (1, 1));
        assert_eq!(part![3, 1].arm_leg(0, 1).unwrap(), (1, 0));
        assert!(part![2].arm_leg(1, 0).is_err());
        assert!(part![2].arm_leg(0, 2).is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(4, 2), vec![part![4], part![3, 1], part![2, 2]]);
        assert_eq!(partitions_of(0, 3), vec![part![]]);
        assert_eq!(partitions_of(0, 0), vec![part![]]);
        assert_eq!(partitions_of(5, 5).len(), 7);
    }

    #[test]
    fn partition_counts_match_brute_force() {
        // count compositions sorted into multisets
        fn brute(m: u32) -> usize {
            let mut seen = std::collections::BTreeSet::new();
            fn go(rest: u32, cur: &mut Vec<u32>, seen: &mut std::collections::BTreeSet<Vec<u32>>) {
                if rest == 0 {
                    let mut v = cur.clone();
                    v.sort_unstable();
                    seen.insert(v);
                    return;
                }
                for p in 1..=rest {
                    cur.push(p);
                    go(rest - p, cur, seen);
                    cur.pop();
                }
            }
            go(m, &mut Vec::new(), &mut seen);
            seen.len()
        }
        for m in 0..=8 {
            assert_eq!(partitions_of(m, m as usize).len(), brute(m), "m = {m}");
        }
    }

    #[test]
    fn zee_examples() {
        assert_eq!(part![].zee(), 1.into());
        assert_eq!(part![2].zee(), 2.into());
        assert_eq!(part![1, 1].zee(), 2.into());
        assert_eq!(part![2, 2, 1].zee(), 8.into());
    }

    #[test]
    fn horizontal_strips() {
        assert!(part![2].is_horizontal_strip_over(&part![1]));
        assert!(part![2, 1].is_horizontal_strip_over(&part![1]));
        assert!(!part![1, 1].is_horizontal_strip_over(&part![]));
        assert!(part![1].is_horizontal_strip_over(&part![]));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}
