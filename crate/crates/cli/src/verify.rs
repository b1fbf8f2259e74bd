//! Verification suites run by `magma-census verify`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use magma_census::census::{
    count_k_magmas, count_via_cycle_index, count_via_permutation_sum, fixed_point_count_with,
};
use magma_census::cycle_index::{
    cycle_index_direct, cycle_index_recursive, induce, max_indeterminate_index,
};
use magma_census::oracle::{
    act, burnside_structural, count_orbits_bruteforce, fixed_tables_structural, is_automorphism,
    orbit_stabilizer_check, OracleLimits,
};
use magma_census::{enumerate_cycle_types, ExactRational, OpTable, Perm, Result, Variant};
use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Burnside,
    Structural,
    CrossMethod,
    Variant,
    CycleIndex,
    Action,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Burnside,
        Suite::Structural,
        Suite::CrossMethod,
        Suite::Variant,
        Suite::CycleIndex,
        Suite::Action,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Burnside => "burnside",
            Suite::Structural => "structural",
            Suite::CrossMethod => "cross-method",
            Suite::Variant => "variant",
            Suite::CycleIndex => "cycle-index",
            Suite::Action => "action",
        }
    }
}

/// Scope of a verification run. `None` means the suite's own default.
#[derive(Debug, Clone, Copy)]
pub struct Scope {
    pub n_max: Option<usize>,
    pub k_max: Option<u32>,
    pub variant: Variant,
    pub limits: OracleLimits,
    pub seed: u64,
}

impl Default for Scope {
    fn default() -> Self {
        Self {
            n_max: None,
            k_max: None,
            variant: Variant::Correct,
            limits: OracleLimits::default(),
            seed: crate::DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.suite, self.detail)
    }
}

fn pass(suite: &'static str, detail: String) -> Report {
    Report {
        suite,
        passed: true,
        detail,
    }
}

fn fail(suite: &'static str, detail: String) -> Report {
    Report {
        suite,
        passed: false,
        detail,
    }
}

pub fn run(suite: Suite, scope: &Scope) -> Result<Vec<Report>> {
    match suite {
        Suite::All => Suite::EACH.iter().map(|&s| run_one(s, scope)).collect(),
        other => Ok(vec![run_one(other, scope)?]),
    }
}

fn run_one(suite: Suite, scope: &Scope) -> Result<Report> {
    match suite {
        Suite::All => unreachable!("expanded by run"),
        Suite::Burnside => burnside(scope),
        Suite::Structural => structural(
            scope.n_max.unwrap_or(8),
            scope.k_max.unwrap_or(3),
            scope.variant,
        ),
        Suite::CrossMethod => cross_method(scope.n_max.unwrap_or(6), scope.k_max.unwrap_or(3)),
        Suite::Variant => variant(scope.n_max.unwrap_or(7), scope.k_max.unwrap_or(4), scope),
        Suite::CycleIndex => cycle_index(scope.n_max.unwrap_or(25)),
        Suite::Action => Ok(action(scope.seed)),
    }
}

/// Brute-force orbit counts against the partition sum and the structural
/// Burnside sum, for every `(n, k)` the limits admit.
pub fn burnside(scope: &Scope) -> Result<Report> {
    const NAME: &str = "burnside";
    let n_max = scope.n_max.unwrap_or(scope.limits.max_n);
    let k_max = scope.k_max.unwrap_or(6);
    let mut checked = Vec::new();
    for n in 0..=n_max {
        for k in 0..=k_max {
            if !scope.limits.admits(n, k) {
                continue;
            }
            let brute = count_orbits_bruteforce(n, k, &scope.limits)?;
            let formula = count_k_magmas(n, k, Variant::Correct)?.count;
            let structural = burnside_structural(n, k)?;
            if brute != formula || brute != structural {
                return Ok(fail(
                    NAME,
                    format!(
                        "n={n} k={k}: brute force {brute}, formula {formula}, structural {structural}"
                    ),
                ));
            }
            checked.push(format!("({n},{k})"));
        }
    }
    Ok(pass(
        NAME,
        format!("{} (n,k) pairs agree: {}", checked.len(), checked.join(" ")),
    ))
}

/// Closed-form fixed-table counts against explicit cell-cycle counts, one
/// concrete permutation per cycle type.
pub fn structural(n_max: usize, k_max: u32, variant: Variant) -> Result<Report> {
    const NAME: &str = "structural";
    let mut checked = 0u64;
    for k in 0..=k_max {
        if !variant.supports_arity(k) {
            continue;
        }
        for n in 0..=n_max {
            for j in enumerate_cycle_types(n) {
                let p = Perm::with_cycle_type(&j);
                let truth = fixed_tables_structural(&p, n, k)?;
                let closed = fixed_point_count_with(&j, k, variant)?;
                if truth != closed {
                    return Ok(fail(
                        NAME,
                        format!(
                            "{variant}: n={n} k={k} cycle type {j} (e.g. {p}): \
                             closed form {closed}, cell cycles {truth}"
                        ),
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(pass(
        NAME,
        format!("{variant}: {checked} (cycle type, k) cases for n<={n_max}, k<={k_max}"),
    ))
}

/// Partition sum, permutation sum and cycle-index substitution agree.
pub fn cross_method(n_max: usize, k_max: u32) -> Result<Report> {
    const NAME: &str = "cross-method";
    let mut checked = 0u64;
    for variant in Variant::ALL {
        for k in 0..=k_max {
            if !variant.supports_arity(k) {
                continue;
            }
            for n in 0..=n_max {
                let partition = count_k_magmas(n, k, variant)?.count;
                let permutation = count_via_permutation_sum(n, k, variant, n_max.max(n))?.count;
                let cycle_index = count_via_cycle_index(n, k, variant)?;
                if partition != permutation || partition != cycle_index {
                    return Ok(fail(
                        NAME,
                        format!(
                            "{variant}: n={n} k={k}: partition {partition}, \
                             permutation {permutation}, cycle index {cycle_index}"
                        ),
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(pass(
        NAME,
        format!("{checked} cases for n<={n_max}, k<={k_max}, both variants"),
    ))
}

/// The gcd rule agrees with the correct one for binary operations and is
/// refuted from arity 3 on.
pub fn variant(n_max: usize, k_max: u32, scope: &Scope) -> Result<Report> {
    const NAME: &str = "variant";
    for n in 0..=n_max {
        let correct = count_k_magmas(n, 2, Variant::Correct)?.count;
        let gcd = count_k_magmas(n, 2, Variant::HarrisonGcd)?.count;
        if correct != gcd {
            return Ok(fail(
                NAME,
                format!("k=2 n={n}: harrison-gcd {gcd} differs from correct {correct}"),
            ));
        }
    }
    for k in 3..=k_max {
        for n in 0..=n_max {
            let correct = count_k_magmas(n, k, Variant::Correct)?.count;
            let gcd = count_k_magmas(n, k, Variant::HarrisonGcd)?.count;
            if correct == gcd {
                continue;
            }
            let mut detail = format!(
                "agree for k=2, n<={n_max}; first disagreement at n={n} k={k}: \
                 harrison-gcd {gcd}, correct {correct}"
            );
            if scope.limits.admits(n, k) {
                let brute = count_orbits_bruteforce(n, k, &scope.limits)?;
                if brute != correct {
                    return Ok(fail(
                        NAME,
                        format!("n={n} k={k}: brute force {brute}, correct {correct}"),
                    ));
                }
                detail.push_str(&format!(", brute force {brute}"));
            }
            return Ok(pass(NAME, detail));
        }
    }
    Ok(fail(
        NAME,
        format!("no disagreement found for 3<=k<={k_max}, n<={n_max}"),
    ))
}

pub const Z3: &str = "1/6*t1^3 + 1/2*t1*t2 + 1/3*t3";
pub const Z3_SQUARED: &str = "1/6*t1^9 + 1/2*t1*t2^4 + 1/3*t3^3";

/// Recursion against direct construction, coefficient sums, the two
/// reference renderings, and the bound on the largest indeterminate of
/// `Z_n^[2]`.
pub fn cycle_index(n_max: usize) -> Result<Report> {
    const NAME: &str = "cycle-index";
    for n in 0..=n_max {
        let direct = cycle_index_direct(n);
        if *cycle_index_recursive(n) != direct {
            return Ok(fail(
                NAME,
                format!("n={n}: recursion differs from direct construction"),
            ));
        }
        let sum = direct.coefficient_sum();
        if sum != ExactRational::from_integer(BigInt::from(1)) {
            return Ok(fail(NAME, format!("n={n}: coefficients sum to {sum}")));
        }
    }
    let z3 = cycle_index_recursive(3).to_string();
    if z3 != Z3 {
        return Ok(fail(NAME, format!("Z_3 renders as {z3}")));
    }
    let z3_2 = induce(&cycle_index_recursive(3), 2)?.to_string();
    if z3_2 != Z3_SQUARED {
        return Ok(fail(NAME, format!("Z_3^[2] renders as {z3_2}")));
    }
    if let Some((n, max, bound)) = remark_bound_violation()? {
        return Ok(fail(
            NAME,
            format!("n={n}: Z_n^[2] uses t{max}, above the bound {bound}"),
        ));
    }
    Ok(pass(
        NAME,
        format!("recursion = direct and sums = 1 for n<={n_max}; Z_3, Z_3^[2] exact; bounds hold for n<=9"),
    ))
}

/// First `(n, max index, bound)` breaking `max <= n` (n <= 4) or
/// `max <= floor(n^2/4)` (4 <= n <= 9).
pub fn remark_bound_violation() -> Result<Option<(usize, u64, u64)>> {
    for n in 0..=9usize {
        let max = max_indeterminate_index(&induce(&cycle_index_direct(n), 2)?);
        let mut bounds = Vec::new();
        if n <= 4 {
            bounds.push(n as u64);
        }
        if n >= 4 {
            bounds.push((n * n / 4) as u64);
        }
        if let Some(&bound) = bounds.iter().find(|&&b| max > b) {
            return Ok(Some((n, max, bound)));
        }
    }
    Ok(None)
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Perm::new(images).expect("shuffled identity")
}

fn random_table(rng: &mut ChaCha8Rng, n: usize, k: u32) -> OpTable {
    let entries = (0..n.pow(k)).map(|_| rng.gen_range(0..n)).collect();
    OpTable::new(n, k, entries).expect("entries in range")
}

/// Seeded randomized checks of the group-action laws, the automorphism
/// criterion and orbit-stabilizer.
pub fn action(seed: u64) -> Report {
    const NAME: &str = "action";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..500 {
        let n = rng.gen_range(1..=5);
        let k = rng.gen_range(0..=3);
        let (p, q, t) = (
            random_perm(&mut rng, n),
            random_perm(&mut rng, n),
            random_table(&mut rng, n, k),
        );
        let id = act(&Perm::identity(n), &t).expect("sizes match");
        let pq = act(&p.compose(&q).expect("sizes match"), &t).expect("sizes match");
        let p_q = act(&p, &act(&q, &t).expect("sizes match")).expect("sizes match");
        if id != t || pq != p_q {
            return fail(
                NAME,
                format!(
                    "trial {trial}: action law broken for p={p} q={q} t={:?}",
                    t.entries()
                ),
            );
        }
    }
    for trial in 0..500 {
        let n = rng.gen_range(1..=5);
        let k = rng.gen_range(0..=3);
        let p = random_perm(&mut rng, n);
        // half constant tables, which every permutation fixes
        let t = if rng.gen_bool(0.5) {
            random_table(&mut rng, n, k)
        } else {
            OpTable::constant(n, k, rng.gen_range(0..n)).expect("entry in range")
        };
        let auto = is_automorphism(&p, &t).expect("sizes match");
        let fixed = act(&p, &t).expect("sizes match") == t;
        if auto != fixed {
            return fail(
                NAME,
                format!(
                    "trial {trial}: automorphism test {auto} but fixed {fixed} for p={p} t={:?}",
                    t.entries()
                ),
            );
        }
    }
    for trial in 0..100 {
        let n = rng.gen_range(1..=4);
        let k = rng.gen_range(0..=2);
        let t = random_table(&mut rng, n, k);
        if !orbit_stabilizer_check(&t) {
            return fail(
                NAME,
                format!(
                    "trial {trial}: |orbit|*|stabilizer| != n! for t={:?}",
                    t.entries()
                ),
            );
        }
    }
    pass(
        NAME,
        format!("seed {seed}: 500 action-law, 500 automorphism and 100 orbit-stabilizer trials"),
    )
}
