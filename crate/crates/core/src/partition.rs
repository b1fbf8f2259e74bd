//! Cycle types of permutations of an `n`-set, i.e. integer partitions of `n`
//! written as multiplicity vectors.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{factorial, BigCount, ExactRational};
use crate::error::{Error, Result};

/// Cycle structure `(j_1, ..., j_n)` of a permutation of an `n`-set: `j_i`
/// is the number of cycles of length `i`, and `sum i * j_i == n`.
///
/// Ordered by ground-set size first, then lexicographically by the parts
/// listed in descending order, so `1+1+1 < 2+1 < 3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    j: Vec<u32>,
}

impl CycleType {
    /// Builds a cycle type from multiplicities; `j[i - 1]` counts `i`-cycles.
    pub fn new(j: Vec<u32>) -> Result<Self> {
        let total: u64 = j
            .iter()
            .enumerate()
            .map(|(i, &m)| (i as u64 + 1) * u64::from(m))
            .sum();
        if total != j.len() as u64 {
            return Err(Error::InvalidCycleType(j));
        }
        Ok(Self { j })
    }

    /// Builds a cycle type from a list of cycle lengths in any order.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let n: usize = parts.iter().sum();
        let mut j = vec![0u32; n];
        for &p in parts {
            if p == 0 {
                return Err(Error::NonPositive(0));
            }
            j[p - 1] += 1;
        }
        Ok(Self { j })
    }

    /// Identity cycle type `(n, 0, ..., 0)`.
    pub fn identity(n: usize) -> Self {
        let mut j = vec![0u32; n];
        if n > 0 {
            j[0] = n as u32;
        }
        Self { j }
    }

    pub fn n(&self) -> usize {
        self.j.len()
    }

    /// Number of cycles of length `len`; zero outside `1..=n`.
    pub fn multiplicity(&self, len: u64) -> u32 {
        if len == 0 || len > self.j.len() as u64 {
            0
        } else {
            self.j[len as usize - 1]
        }
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.j
    }

    /// Cycle lengths that actually occur, with their multiplicities, in
    /// increasing order of length.
    pub fn support(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.j
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i as u64 + 1, m))
    }

    /// Cycle lengths in descending order, repeated by multiplicity.
    pub fn parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.j
            .iter()
            .enumerate()
            .rev()
            .flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m as usize))
    }

    /// Order of the centralizer of any permutation with this cycle type,
    /// `prod i^{j_i} * j_i!`.
    pub fn centralizer_order(&self) -> BigCount {
        self.support().fold(BigCount::one(), |acc, (len, m)| {
            acc * BigCount::from(len).pow(m) * factorial(u64::from(m))
        })
    }

    /// `1 / prod i^{j_i} j_i!`, the relative frequency of this type in `S_n`.
    pub fn weight(&self) -> ExactRational {
        ExactRational::new(BigInt::one(), BigInt::from(self.centralizer_order()))
    }

    /// Sum of `d * j_d` over divisors `d` of `m`: the number of points fixed
    /// by the `m`-th power of a permutation with this cycle type.
    pub fn fixed_points_of_power(&self, m: u64) -> u64 {
        // Only d <= n can contribute, and m may be much larger than n.
        self.support()
            .filter(|&(len, _)| m.is_multiple_of(len))
            .map(|(len, mult)| len * u64::from(mult))
            .sum()
    }
}

impl Ord for CycleType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.parts().cmp(other.parts()))
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{:?}", self.j)
    }
}

/// Bracket notation `[1^3 2^0 3^0]`.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, m) in self.j.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}^{}", i + 1, m)?;
        }
        f.write_str("]")
    }
}

/// Streams every cycle type of `n`, each exactly once.
///
/// Order: partitions written with parts descending, in increasing
/// lexicographic order. For `n = 3` that is `1+1+1`, `2+1`, `3`.
pub fn enumerate_cycle_types(n: usize) -> CycleTypes {
    CycleTypes {
        n,
        parts: Some(vec![1; n]),
    }
}

#[derive(Debug, Clone)]
pub struct CycleTypes {
    n: usize,
    parts: Option<Vec<usize>>,
}

impl CycleTypes {
    fn advance(parts: &mut Vec<usize>) -> bool {
        // Rightmost position that can grow by one while staying weakly
        // below its left neighbour and with something left to borrow from
        // the tail.
        let mut tail = 0usize;
        for i in (0..parts.len()).rev() {
            if tail >= 1 && (i == 0 || parts[i] < parts[i - 1]) {
                parts[i] += 1;
                parts.truncate(i + 1);
                parts.extend(std::iter::repeat_n(1, tail - 1));
                return true;
            }
            tail += parts[i];
        }
        false
    }
}

impl Iterator for CycleTypes {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        let current = self.parts.as_mut()?;
        let item = CycleType::from_parts(current).expect("parts are positive");
        debug_assert_eq!(item.n(), self.n);
        if !Self::advance(current) {
            self.parts = None;
        }
        Some(item)
    }
}

/// Number of permutations of `S_n` with cycle type `j`,
/// `n! / prod i^{j_i} j_i!`.
pub fn cycle_type_count(j: &CycleType) -> BigCount {
    let (q, r) = factorial(j.n() as u64).div_rem(&j.centralizer_order());
    assert!(r.is_zero(), "class size of {j:?} is not integral");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(j: &[u32]) -> CycleType {
        CycleType::new(j.to_vec()).unwrap()
    }

    /// Partition numbers by the memoized recursion on largest part.
    fn partition_numbers(max: usize) -> Vec<u64> {
        // p[m][k]: partitions of m with parts <= k
        let mut p = vec![vec![0u64; max + 1]; max + 1];
        p[0].fill(1);
        for m in 1..=max {
            for k in 1..=max {
                p[m][k] = p[m][k - 1] + if k <= m { p[m - k][k] } else { 0 };
            }
        }
        (0..=max).map(|m| p[m][max]).collect()
    }

    #[test]
    fn n_zero_has_one_type() {
        let all: Vec<_> = enumerate_cycle_types(0).collect();
        assert_eq!(all, vec![ct(&[])]);
    }

    #[test]
    fn n_three_in_documented_order() {
        let all: Vec<_> = enumerate_cycle_types(3).collect();
        assert_eq!(all, vec![ct(&[3, 0, 0]), ct(&[1, 1, 0]), ct(&[0, 0, 1])]);
    }

    #[test]
    fn n_four_in_documented_order() {
        let parts: Vec<Vec<usize>> = enumerate_cycle_types(4)
            .map(|j| j.parts().collect())
            .collect();
        assert_eq!(
            parts,
            vec![
                vec![1, 1, 1, 1],
                vec![2, 1, 1],
                vec![2, 2],
                vec![3, 1],
                vec![4]
            ]
        );
    }

    #[test]
    fn counts_equal_partition_numbers() {
        let p = partition_numbers(30);
        assert_eq!(p[10], 42);
        for (n, &expected) in p.iter().enumerate() {
            assert_eq!(enumerate_cycle_types(n).count() as u64, expected, "n = {n}");
        }
    }

    #[test]
    fn stream_is_strictly_increasing() {
        for n in 0..=15 {
            let all: Vec<_> = enumerate_cycle_types(n).collect();
            assert!(all.windows(2).all(|w| w[0] < w[1]), "n = {n}");
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(cycle_type_count(&ct(&[1, 1, 0])), BigCount::from(3u32));
        assert_eq!(cycle_type_count(&ct(&[3, 0, 0])), BigCount::from(1u32));
        assert_eq!(cycle_type_count(&ct(&[0, 0, 1])), BigCount::from(2u32));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=12 {
            let total: BigCount = enumerate_cycle_types(n).map(|j| cycle_type_count(&j)).sum();
            assert_eq!(total, factorial(n as u64), "n = {n}");
        }
    }

    #[test]
    fn rejects_inconsistent_multiplicities() {
        assert!(CycleType::new(vec![1, 1]).is_err());
        assert!(CycleType::new(vec![0, 1]).is_ok());
        assert!(CycleType::from_parts(&[0, 2]).is_err());
    }

    #[test]
    fn fixed_points_of_power_skips_long_divisors() {
        // (1 2 3)(4 5): m = 6 fixes everything, m = 2 only the 2-cycle.
        let j = ct(&[0, 1, 1, 0, 0]);
        assert_eq!(j.fixed_points_of_power(6), 5);
        assert_eq!(j.fixed_points_of_power(2), 2);
        assert_eq!(j.fixed_points_of_power(1), 0);
        assert_eq!(j.fixed_points_of_power(1_000_003), 0);
    }

    #[test]
    fn display_bracket_notation() {
        assert_eq!(ct(&[1, 1, 0]).to_string(), "[1^1 2^1 3^0]");
    }
}
