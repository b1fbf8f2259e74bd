//! Ground truth by brute force, independent of the closed forms in
//! [`crate::census`].
//!
//! Cells of a `k`-ary table on `[n]` are the `k`-tuples over `[n]`, numbered
//! in mixed radix `n` with the first coordinate most significant. A table
//! is numbered the same way from its entries, entry 0 most significant, so
//! numeric order of table indices is lexicographic order of entry arrays.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{factorial, rational_to_count, BigCount, ExactRational};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default ceiling on `n^(n^k)`, the number of tables enumerated.
pub const DEFAULT_MAX_TABLES: u64 = 1 << 20;

/// Number of cells, `n^k`.
pub fn cell_count(n: usize, k: u32) -> Result<usize> {
    n.checked_pow(k).ok_or(Error::TooLarge("cell count"))
}

/// Number of tables, `n^(n^k)`, or `None` if it overflows `u64`.
pub fn table_count(n: usize, k: u32) -> Option<u64> {
    let cells = u32::try_from(n.checked_pow(k)?).ok()?;
    (n as u64).checked_pow(cells)
}

fn encode_tuple(n: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &x| acc * n + x)
}

fn decode_tuple(n: usize, k: u32, mut cell: usize) -> Vec<usize> {
    let mut t = vec![0; k as usize];
    for slot in t.iter_mut().rev() {
        *slot = cell % n;
        cell /= n;
    }
    t
}

/// A `k`-ary operation on `{0..n}` stored as its flat table of `n^k` values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    n: usize,
    k: u32,
    entries: Vec<usize>,
}

impl OpTable {
    pub fn new(n: usize, k: u32, entries: Vec<usize>) -> Result<Self> {
        let cells = cell_count(n, k)?;
        if entries.len() != cells {
            return Err(Error::DimensionMismatch {
                expected: format!("{cells} entries"),
                actual: format!("{} entries", entries.len()),
            });
        }
        if let Some(&bad) = entries.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange { value: bad, n });
        }
        Ok(Self { n, k, entries })
    }

    /// The table with every entry `c`.
    pub fn constant(n: usize, k: u32, c: usize) -> Result<Self> {
        Self::new(n, k, vec![c; cell_count(n, k)?])
    }

    /// The `index`-th table in lexicographic order of entry arrays.
    pub fn from_index(n: usize, k: u32, mut index: u64) -> Result<Self> {
        let cells = cell_count(n, k)?;
        let mut entries = vec![0usize; cells];
        for slot in entries.iter_mut().rev() {
            *slot = (index % n as u64) as usize;
            index /= n as u64;
        }
        Ok(Self { n, k, entries })
    }

    pub fn index(&self) -> u64 {
        self.entries
            .iter()
            .fold(0u64, |acc, &v| acc * self.n as u64 + v as u64)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> u32 {
        self.k
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Value of the operation at a `k`-tuple.
    pub fn get(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.k as usize {
            return Err(Error::DimensionMismatch {
                expected: format!("{}-tuple", self.k),
                actual: format!("{}-tuple", tuple.len()),
            });
        }
        if let Some(&bad) = tuple.iter().find(|&&x| x >= self.n) {
            return Err(Error::OutOfRange {
                value: bad,
                n: self.n,
            });
        }
        Ok(self.entries[encode_tuple(self.n, tuple)])
    }
}

/// The permutation `p^{×k}` of the cells `[n]^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPermutation {
    images: Vec<usize>,
}

impl CellPermutation {
    pub fn new(p: &Perm, k: u32) -> Result<Self> {
        let n = p.n();
        let cells = cell_count(n, k)?;
        let images = (0..cells)
            .map(|c| {
                let t = decode_tuple(n, k, c);
                encode_tuple(n, &p.apply_tuple(&t).expect("decoded tuple in range"))
            })
            .collect();
        Ok(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.images.len()];
        let mut lens = Vec::new();
        for start in 0..self.images.len() {
            let mut len = 0;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = self.images[c];
                len += 1;
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens
    }

    pub fn as_perm(&self) -> Perm {
        Perm::new(self.images.clone()).expect("coordinatewise image of a bijection")
    }
}

fn check_dims(p: &Perm, t: &OpTable) -> Result<()> {
    if p.n() != t.n {
        return Err(Error::DimensionMismatch {
            expected: format!("permutation of {} points", t.n),
            actual: format!("permutation of {} points", p.n()),
        });
    }
    Ok(())
}

fn act_with_cells(p: &Perm, cells: &CellPermutation, t: &OpTable) -> OpTable {
    let mut entries = vec![0; t.entries.len()];
    for (c, &v) in t.entries.iter().enumerate() {
        entries[cells.images[c]] = p.apply(v);
    }
    OpTable {
        n: t.n,
        k: t.k,
        entries,
    }
}

/// Transport of structure: the table of `p ∘ t ∘ (p^{-1})^{×k}`, i.e. the
/// entry at `p^{×k}(a)` is `p(t(a))`.
pub fn act(p: &Perm, t: &OpTable) -> Result<OpTable> {
    check_dims(p, t)?;
    Ok(act_with_cells(p, &CellPermutation::new(p, t.k)?, t))
}

/// Whether `p(t(a_1..a_k)) = t(p(a_1)..p(a_k))` for every tuple.
pub fn is_automorphism(p: &Perm, t: &OpTable) -> Result<bool> {
    check_dims(p, t)?;
    let cells = CellPermutation::new(p, t.k)?;
    Ok(t.entries
        .iter()
        .enumerate()
        .all(|(c, &v)| p.apply(v) == t.entries[cells.images[c]]))
}

/// Number of `k`-ary tables on `[n]` fixed by `p`, read off the cycles of
/// the cell permutation: a cycle of length `L` can carry any value `x` with
/// `p^L(x) = x`.
pub fn fixed_tables_structural(p: &Perm, n: usize, k: u32) -> Result<BigCount> {
    if p.n() != n {
        return Err(Error::DimensionMismatch {
            expected: format!("permutation of {n} points"),
            actual: format!("permutation of {} points", p.n()),
        });
    }
    let cells = CellPermutation::new(p, k)?;
    let mut acc = BigCount::one();
    for len in cells.cycle_lengths() {
        let power = p.pow(len as u64);
        let choices = (0..n).filter(|&x| power.apply(x) == x).count();
        acc *= BigCount::from(choices);
    }
    Ok(acc)
}

/// `(1/n!) sum_σ fixed_tables_structural(σ, n, k)` over all of `S_n`.
pub fn burnside_structural(n: usize, k: u32) -> Result<BigCount> {
    let mut total = BigCount::zero();
    for sigma in Perm::all(n) {
        total += fixed_tables_structural(&sigma, n, k)?;
    }
    rational_to_count(&ExactRational::new(
        BigInt::from(total),
        BigInt::from(factorial(n as u64)),
    ))
}

/// Lexicographically smallest entry array over all `n!` relabelings.
pub fn canonical_form(t: &OpTable) -> OpTable {
    let mut best = t.clone();
    for p in Perm::all(t.n) {
        let image = act(&p, t).expect("dimensions match");
        if image.entries < best.entries {
            best = image;
        }
    }
    best
}

/// Limits for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Ceiling on `n^(n^k)`.
    pub max_tables: u64,
    /// Ceiling on `n` (the sweep visits all of `S_n`).
    pub max_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_tables: DEFAULT_MAX_TABLES,
            max_n: crate::census::DEFAULT_PERM_GUARD,
        }
    }
}

impl OracleLimits {
    pub fn admits(&self, n: usize, k: u32) -> bool {
        n <= self.max_n && table_count(n, k).is_some_and(|c| c <= self.max_tables)
    }

    fn check(&self, n: usize, k: u32) -> Result<u64> {
        if n > self.max_n {
            return Err(Error::GuardExceeded {
                what: "n for exhaustive enumeration",
                value: n.to_string(),
                limit: self.max_n.to_string(),
            });
        }
        match table_count(n, k) {
            Some(c) if c <= self.max_tables => Ok(c),
            other => Err(Error::GuardExceeded {
                what: "number of tables",
                value: other.map_or_else(|| format!("{n}^({n}^{k})"), |c| c.to_string()),
                limit: self.max_tables.to_string(),
            }),
        }
    }
}

/// Result of partitioning every table into orbits.
#[derive(Debug, Clone)]
pub struct OrbitSweep {
    pub n: usize,
    pub k: u32,
    /// Indices of the canonical forms (orbit minima), one per orbit.
    pub canonical: HashSet<u64>,
    /// Size of each orbit, in order of discovery.
    pub orbit_sizes: Vec<u64>,
}

impl OrbitSweep {
    pub fn orbits(&self) -> usize {
        self.canonical.len()
    }
}

/// Visits tables in index order. The first table not yet seen is the
/// lexicographic minimum of its orbit, so it is recorded as that orbit's
/// canonical form and its whole orbit is marked seen.
pub fn sweep_orbits(n: usize, k: u32, limits: &OracleLimits) -> Result<OrbitSweep> {
    let total = limits.check(n, k)?;
    let group: Vec<(Perm, CellPermutation)> = Perm::all(n)
        .map(|p| {
            let cells = CellPermutation::new(&p, k)?;
            Ok((p, cells))
        })
        .collect::<Result<_>>()?;
    let mut seen = vec![0u64; (total as usize).div_ceil(64)];
    let mut canonical = HashSet::new();
    let mut orbit_sizes = Vec::new();
    for index in 0..total {
        let (word, bit) = ((index / 64) as usize, index % 64);
        if seen[word] >> bit & 1 == 1 {
            continue;
        }
        let t = OpTable::from_index(n, k, index)?;
        let mut size = 0u64;
        for (p, cells) in &group {
            let image = act_with_cells(p, cells, &t).index();
            let (w, b) = ((image / 64) as usize, image % 64);
            if seen[w] >> b & 1 == 0 {
                seen[w] |= 1 << b;
                size += 1;
            }
        }
        canonical.insert(index);
        orbit_sizes.push(size);
    }
    Ok(OrbitSweep {
        n,
        k,
        canonical,
        orbit_sizes,
    })
}

/// Number of isomorphism classes of `k`-ary tables on `[n]`, by explicit
/// orbit partitioning.
pub fn count_orbits_bruteforce(n: usize, k: u32, limits: &OracleLimits) -> Result<BigCount> {
    Ok(BigCount::from(sweep_orbits(n, k, limits)?.orbits()))
}

/// `(|orbit(t)|, |stabilizer(t)|)` from a full sweep of `S_n`.
pub fn orbit_and_stabilizer(t: &OpTable) -> (u64, u64) {
    let mut orbit = HashSet::new();
    let mut stabilizer = 0u64;
    for p in Perm::all(t.n) {
        let image = act(&p, t).expect("dimensions match");
        if image == *t {
            stabilizer += 1;
        }
        orbit.insert(image);
    }
    (orbit.len() as u64, stabilizer)
}

/// `|orbit(t)| * |stabilizer(t)| == n!`.
pub fn orbit_stabilizer_check(t: &OpTable) -> bool {
    let (orbit, stabilizer) = orbit_and_stabilizer(t);
    BigCount::from(orbit) * stabilizer == factorial(t.n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap() -> Perm {
        Perm::new(vec![1, 0]).unwrap()
    }

    // 1*1=1, 1*2=1, 2*1=1, 2*2=2 in 1-based labels
    fn first_example_table() -> OpTable {
        OpTable::new(2, 2, vec![0, 0, 0, 1]).unwrap()
    }

    #[test]
    fn relabeling_the_example() {
        let image = act(&swap(), &first_example_table()).unwrap();
        assert_eq!(image.entries(), &[0, 1, 1, 1]);
        assert!(!is_automorphism(&swap(), &first_example_table()).unwrap());
        assert_eq!(act(&swap(), &image).unwrap(), first_example_table());
    }

    #[test]
    fn identity_acts_trivially() {
        let t = first_example_table();
        assert_eq!(act(&Perm::identity(2), &t).unwrap(), t);
        assert!(is_automorphism(&Perm::identity(2), &t).unwrap());
    }

    #[test]
    fn table_validation() {
        assert!(OpTable::new(2, 2, vec![0, 1, 0]).is_err());
        assert!(OpTable::new(2, 2, vec![0, 1, 0, 2]).is_err());
        assert!(act(&Perm::identity(3), &first_example_table()).is_err());
        assert_eq!(first_example_table().get(&[1, 1]).unwrap(), 1);
        assert!(first_example_table().get(&[1]).is_err());
    }

    #[test]
    fn index_round_trip() {
        for index in 0..27 {
            let t = OpTable::from_index(3, 1, index).unwrap();
            assert_eq!(t.index(), index);
        }
        assert_eq!(first_example_table().index(), 1);
    }

    #[test]
    fn small_orbit_counts() {
        let limits = OracleLimits::default();
        let cases = [
            (2, 2, 10u32),
            (2, 3, 136),
            (3, 2, 3330),
            (2, 1, 3),
            (5, 1, 47),
        ];
        for (n, k, expected) in cases {
            assert_eq!(
                count_orbits_bruteforce(n, k, &limits).unwrap(),
                BigCount::from(expected),
                "n={n} k={k}"
            );
        }
    }

    #[test]
    fn degenerate_sizes() {
        let limits = OracleLimits::default();
        assert_eq!(
            count_orbits_bruteforce(0, 0, &limits).unwrap(),
            BigCount::zero()
        );
        for k in 1..=5 {
            assert_eq!(
                count_orbits_bruteforce(0, k, &limits).unwrap(),
                BigCount::one()
            );
            assert_eq!(
                count_orbits_bruteforce(1, k, &limits).unwrap(),
                BigCount::one()
            );
        }
        for n in 1..=6 {
            assert_eq!(
                count_orbits_bruteforce(n, 0, &limits).unwrap(),
                BigCount::one()
            );
        }
    }

    #[test]
    fn caps_are_enforced() {
        let limits = OracleLimits::default();
        assert!(matches!(
            count_orbits_bruteforce(3, 3, &limits),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(matches!(
            count_orbits_bruteforce(9, 0, &limits),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(limits.admits(7, 1));
        assert!(!limits.admits(8, 1));
        assert!(limits.admits(2, 4));
        assert!(!limits.admits(2, 5));
    }

    #[test]
    fn sweep_representatives_are_canonical() {
        let sweep = sweep_orbits(2, 2, &OracleLimits::default()).unwrap();
        for &index in &sweep.canonical {
            let t = OpTable::from_index(2, 2, index).unwrap();
            assert_eq!(canonical_form(&t), t);
        }
        let sweep = sweep_orbits(3, 1, &OracleLimits::default()).unwrap();
        let by_canon: HashSet<OpTable> = (0..27)
            .map(|i| canonical_form(&OpTable::from_index(3, 1, i).unwrap()))
            .collect();
        assert_eq!(by_canon.len(), sweep.orbits());
    }

    #[test]
    fn orbit_sizes_sum_to_table_count() {
        let limits = OracleLimits::default();
        for (n, k) in [
            (2, 2),
            (3, 2),
            (2, 3),
            (4, 1),
            (6, 1),
            (0, 0),
            (0, 2),
            (3, 0),
        ] {
            let sweep = sweep_orbits(n, k, &limits).unwrap();
            let total: u64 = sweep.orbit_sizes.iter().sum();
            assert_eq!(total, table_count(n, k).unwrap(), "n={n} k={k}");
        }
    }

    #[test]
    fn structural_fixed_points() {
        assert_eq!(
            fixed_tables_structural(&Perm::identity(2), 2, 2).unwrap(),
            BigCount::from(16u32)
        );
        assert_eq!(
            fixed_tables_structural(&swap(), 2, 2).unwrap(),
            BigCount::from(4u32)
        );
        assert_eq!(
            fixed_tables_structural(&swap(), 2, 3).unwrap(),
            BigCount::from(16u32)
        );
    }

    #[test]
    fn structural_matches_enumeration() {
        // count fixed tables by checking every table
        for (n, k) in [(2, 2), (2, 3), (3, 2), (3, 1), (4, 1)] {
            let total = table_count(n, k).unwrap();
            for p in Perm::all(n) {
                let fixed = (0..total)
                    .filter(|&i| {
                        is_automorphism(&p, &OpTable::from_index(n, k, i).unwrap()).unwrap()
                    })
                    .count();
                assert_eq!(
                    fixed_tables_structural(&p, n, k).unwrap(),
                    BigCount::from(fixed),
                    "p={p} n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn orbit_and_stabilizer_examples() {
        assert_eq!(orbit_and_stabilizer(&first_example_table()), (2, 1));
        for n in 1..=4usize {
            let (orbit, stab) = orbit_and_stabilizer(&OpTable::constant(n, 2, 0).unwrap());
            assert_eq!(orbit, n as u64);
            assert_eq!(BigCount::from(stab), factorial(n as u64 - 1));
        }
        assert!(orbit_stabilizer_check(&first_example_table()));
    }

    #[test]
    fn cell_cycles_divide_perm_order() {
        for n in 1..=5 {
            for p in Perm::all(n) {
                let order = p.order() as usize;
                for k in 0..=3 {
                    let cells = CellPermutation::new(&p, k).unwrap();
                    assert!(cells
                        .cycle_lengths()
                        .iter()
                        .all(|l| order.is_multiple_of(*l)));
                }
            }
        }
    }

    #[test]
    fn cell_cycles_on_a_box_have_lcm_length() {
        // (1 2 3)(4 5): the 3x2 block of pairs is one 6-cycle
        let p = Perm::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap();
        let cells = CellPermutation::new(&p, 2).unwrap().as_perm();
        let start = encode_tuple(5, &[0, 3]);
        let mut c = start;
        let mut len = 0;
        loop {
            c = cells.apply(c);
            len += 1;
            if c == start {
                break;
            }
        }
        assert_eq!(len, 6);
    }
}
