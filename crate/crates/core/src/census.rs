//! The counting formulas: fixed tables per cycle type, and the Burnside
//! average over `S_n` in its partition, permutation and cycle-index forms.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;

use crate::arith::{divisors, factorial, rational_to_count, BigCount, ExactRational};
use crate::chains::{box_classes, Variant};
use crate::cycle_index::{cycle_index_recursive, induce_with, substitute_per_monomial};
use crate::error::{Error, Result};
use crate::partition::{enumerate_cycle_types, CycleType};
use crate::perm::Perm;

/// Largest `n` for which the permutation-sum method runs by default.
pub const DEFAULT_PERM_GUARD: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Sum over cycle types, weighted by class size.
    #[default]
    Partition,
    /// Sum over all `n!` permutations.
    Permutation,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Partition => "partition",
            Method::Permutation => "permutation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusQuery {
    pub n: usize,
    pub k: u32,
    pub variant: Variant,
    pub method: Method,
    pub perm_guard: usize,
}

impl CensusQuery {
    pub fn new(n: usize, k: u32) -> Self {
        Self {
            n,
            k,
            variant: Variant::Correct,
            method: Method::Partition,
            perm_guard: DEFAULT_PERM_GUARD,
        }
    }

    pub fn variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn perm_guard(mut self, guard: usize) -> Self {
        self.perm_guard = guard;
        self
    }

    pub fn run(&self) -> Result<CensusResult> {
        match self.method {
            Method::Partition => count_k_magmas(self.n, self.k, self.variant),
            Method::Permutation => {
                count_via_permutation_sum(self.n, self.k, self.variant, self.perm_guard)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub query: CensusQuery,
    pub count: BigCount,
    /// Cycle types or permutations summed over.
    pub terms_evaluated: u64,
    pub elapsed: Duration,
}

/// Sum of `d * j_d` over the divisors `d` of `m`.
fn divisor_sum(j: &CycleType, m: u64) -> u64 {
    divisors(m)
        .into_iter()
        .take_while(|&d| d <= j.n() as u64)
        .map(|d| d * u64::from(j.multiplicity(d)))
        .sum()
}

/// Number of `k`-ary tables on `[n]` fixed by any permutation of cycle type
/// `j`:
///
/// `prod over (r_1..r_k) in support(j)^k of (sum_{d | lcm} d j_d)^(r_1⋯r_k / lcm · j_{r_1}⋯j_{r_k})`.
///
/// With `n = 0` and `k >= 1` the product is empty and the result is 1 (the
/// empty table). With `n = 0` and `k = 0` the single nullary slot has no
/// value to take, and the result is 0.
pub fn fixed_point_count(j: &CycleType, k: u32) -> Result<BigCount> {
    fixed_point_count_with(j, k, Variant::Correct)
}

/// [`fixed_point_count`] with `gcd(r_1..r_k)` chains per box. Wrong for
/// `k > 2`; rejects `k = 0`.
pub fn fixed_point_count_harrison(j: &CycleType, k: u32) -> Result<BigCount> {
    fixed_point_count_with(j, k, Variant::HarrisonGcd)
}

pub fn fixed_point_count_with(j: &CycleType, k: u32, variant: Variant) -> Result<BigCount> {
    let mut acc = BigCount::one();
    for class in box_classes(j, k, variant)? {
        let base = BigCount::from(divisor_sum(j, class.chain_len));
        if base.is_zero() && class.chains > 0 {
            return Ok(BigCount::zero());
        }
        acc *= Pow::pow(base, class.chains);
    }
    Ok(acc)
}

fn summand(j: &CycleType, k: u32, variant: Variant) -> Result<ExactRational> {
    let fixed = fixed_point_count_with(j, k, variant)?;
    Ok(ExactRational::new(
        BigInt::from(fixed),
        BigInt::from(j.centralizer_order()),
    ))
}

/// Number of isomorphism classes of `k`-ary magmas on an `n`-set, as the sum
/// over cycle types `j` of `fixed_point_count(j, k) / prod i^{j_i} j_i!`.
///
/// Summands are evaluated in parallel on the current rayon pool and added
/// exactly, so the result does not depend on scheduling.
pub fn count_k_magmas(n: usize, k: u32, variant: Variant) -> Result<CensusResult> {
    let start = Instant::now();
    let types: Vec<CycleType> = enumerate_cycle_types(n).collect();
    let total = types
        .par_iter()
        .map(|j| summand(j, k, variant))
        .try_reduce(ExactRational::zero, |a, b| Ok(a + b))?;
    Ok(CensusResult {
        query: CensusQuery::new(n, k).variant(variant),
        count: rational_to_count(&total)?,
        terms_evaluated: types.len() as u64,
        elapsed: start.elapsed(),
    })
}

/// The same count as `(1/n!) sum_{σ in S_n} fixed_point_count(type(σ), k)`,
/// visiting every permutation. Refuses `n > guard`.
pub fn count_via_permutation_sum(
    n: usize,
    k: u32,
    variant: Variant,
    guard: usize,
) -> Result<CensusResult> {
    if n > guard {
        return Err(Error::GuardExceeded {
            what: "n for the permutation sum",
            value: n.to_string(),
            limit: guard.to_string(),
        });
    }
    let start = Instant::now();
    let mut per_type: HashMap<CycleType, BigCount> = HashMap::new();
    let mut total = BigCount::zero();
    let mut visited = 0u64;
    for sigma in Perm::all(n) {
        let j = sigma.cycle_type();
        let fixed = match per_type.get(&j) {
            Some(f) => f.clone(),
            None => {
                let f = fixed_point_count_with(&j, k, variant)?;
                per_type.insert(j, f.clone());
                f
            }
        };
        total += fixed;
        visited += 1;
    }
    let total = ExactRational::new(BigInt::from(total), BigInt::from(factorial(n as u64)));
    Ok(CensusResult {
        query: CensusQuery::new(n, k)
            .variant(variant)
            .method(Method::Permutation)
            .perm_guard(guard),
        count: rational_to_count(&total)?,
        terms_evaluated: visited,
        elapsed: start.elapsed(),
    })
}

/// The same count through `Z_n^[k]`: substitute
/// `t_i := sum_{d | i} d j_d` separately in every term.
pub fn count_via_cycle_index(n: usize, k: u32, variant: Variant) -> Result<BigCount> {
    let z = induce_with(&cycle_index_recursive(n), k, variant)?;
    substitute_per_monomial(&z, |j, i| BigCount::from(j.fixed_points_of_power(i)))
}

/// Counts for `n = n_lo..=n_hi` at fixed arity.
pub fn sequence(k: u32, n_lo: usize, n_hi: usize, variant: Variant) -> Result<Vec<CensusResult>> {
    (n_lo..=n_hi)
        .map(|n| count_k_magmas(n, k, variant))
        .collect()
}

/// Counts for `k = k_lo..=k_hi` at fixed ground-set size.
pub fn sequence_in_arity(
    n: usize,
    k_lo: u32,
    k_hi: u32,
    variant: Variant,
) -> Result<Vec<CensusResult>> {
    (k_lo..=k_hi)
        .map(|k| count_k_magmas(n, k, variant))
        .collect()
}
