//! Cycle indices of `S_n`: the natural action on `[n]` and the induced
//! action on `[n]^k`.
//!
//! Every term remembers the cycle type of `S_n` it came from, and terms are
//! never merged across origins. For `k = 0` all monomials collapse to `t1`,
//! but substituting values still needs each origin separately.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::arith::{count_to_rational, rational_to_count, BigCount, ExactRational};
use crate::chains::{box_classes, Variant};
use crate::error::{Error, Result};
use crate::partition::{enumerate_cycle_types, CycleType};

/// Which action a cycle index describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    /// `S_n` on `[n]`.
    Natural,
    /// `S_n` on `[n]^power`, coordinatewise.
    Induced { power: u32, variant: Variant },
}

/// `prod t_i^{e_i}` tagged with the cycle type of `S_n` it represents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    origin: CycleType,
    exponents: BTreeMap<u64, u64>,
}

impl Monomial {
    pub fn origin(&self) -> &CycleType {
        &self.origin
    }

    /// Indeterminate index to positive exponent.
    pub fn exponents(&self) -> &BTreeMap<u64, u64> {
        &self.exponents
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.is_empty()
    }

    fn natural(origin: CycleType) -> Self {
        let exponents = origin.support().map(|(i, m)| (i, u64::from(m))).collect();
        Self { origin, exponents }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return f.write_str("1");
        }
        for (pos, (i, e)) in self.exponents.iter().enumerate() {
            if pos > 0 {
                f.write_str("*")?;
            }
            write!(f, "t{i}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coefficient: ExactRational,
    pub monomial: Monomial,
}

/// A cycle index with one term per cycle type of `S_n`, in enumeration
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleIndexPoly {
    n: usize,
    action: Action,
    terms: Vec<Term>,
}

impl CycleIndexPoly {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn action(&self) -> Action {
        self.action
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn coefficient_sum(&self) -> ExactRational {
        self.terms
            .iter()
            .fold(ExactRational::zero(), |acc, t| acc + &t.coefficient)
    }
}

/// `1/6*t1^3 + 1/2*t1*t2 + 1/3*t3`. A unit coefficient is omitted in front
/// of a non-constant monomial, so `Z_1` renders as `t1` and `Z_0` as `1`.
impl fmt::Display for CycleIndexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, term) in self.terms.iter().enumerate() {
            if pos > 0 {
                f.write_str(" + ")?;
            }
            let c = &term.coefficient;
            if term.monomial.is_constant() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", term.monomial)?;
            } else {
                write!(f, "{c}*{}", term.monomial)?;
            }
        }
        Ok(())
    }
}

/// `Z_n` straight from the class sizes: `sum_j (1 / prod i^{j_i} j_i!) prod t_i^{j_i}`.
pub fn cycle_index_direct(n: usize) -> CycleIndexPoly {
    let terms = enumerate_cycle_types(n)
        .map(|j| Term {
            coefficient: j.weight(),
            monomial: Monomial::natural(j),
        })
        .collect();
    CycleIndexPoly {
        n,
        action: Action::Natural,
        terms,
    }
}

fn memo() -> &'static Mutex<Vec<Arc<CycleIndexPoly>>> {
    static MEMO: OnceLock<Mutex<Vec<Arc<CycleIndexPoly>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(Vec::new()))
}

/// `Z_n` by the recursion `Z_0 = 1`, `Z_n = (1/n) sum_{i=1}^n t_i Z_{n-i}`.
///
/// `Z_0, ..., Z_n` are memoized for the life of the process; construction is
/// serialized behind a lock, readers get shared handles.
pub fn cycle_index_recursive(n: usize) -> Arc<CycleIndexPoly> {
    let mut table = memo().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let next = recursion_step(&table);
        table.push(Arc::new(next));
    }
    Arc::clone(&table[n])
}

fn recursion_step(lower: &[Arc<CycleIndexPoly>]) -> CycleIndexPoly {
    let n = lower.len();
    if n == 0 {
        return CycleIndexPoly {
            n: 0,
            action: Action::Natural,
            terms: vec![Term {
                coefficient: ExactRational::one(),
                monomial: Monomial::natural(CycleType::identity(0)),
            }],
        };
    }
    let inv_n = ExactRational::new(BigInt::one(), BigInt::from(n));
    let mut acc: HashMap<CycleType, ExactRational> = HashMap::new();
    for i in 1..=n {
        for term in lower[n - i].terms() {
            let mut j = term.monomial.origin.multiplicities().to_vec();
            j.resize(n, 0);
            j[i - 1] += 1;
            let origin = CycleType::new(j).expect("adding an i-cycle to a type of n - i");
            *acc.entry(origin).or_insert_with(ExactRational::zero) += &term.coefficient * &inv_n;
        }
    }
    let mut terms: Vec<Term> = acc
        .into_iter()
        .map(|(origin, coefficient)| Term {
            coefficient,
            monomial: Monomial::natural(origin),
        })
        .collect();
    terms.sort_by(|a, b| a.monomial.origin.cmp(&b.monomial.origin));
    CycleIndexPoly {
        n,
        action: Action::Natural,
        terms,
    }
}

/// `Z_n^[k]`: the cycle index of `S_n` acting on `[n]^k`.
pub fn induce(z: &CycleIndexPoly, k: u32) -> Result<CycleIndexPoly> {
    induce_with(z, k, Variant::Correct)
}

/// Like [`induce`], with a choice of chains-per-box rule. Only
/// [`Variant::Correct`] yields a genuine cycle index.
pub fn induce_with(z: &CycleIndexPoly, k: u32, variant: Variant) -> Result<CycleIndexPoly> {
    if z.action != Action::Natural {
        return Err(Error::NotNatural);
    }
    let terms = z
        .terms
        .iter()
        .map(|term| {
            let origin = term.monomial.origin.clone();
            let mut exponents = BTreeMap::new();
            for class in box_classes(&origin, k, variant)? {
                let e = exponents.entry(class.chain_len).or_insert(0u64);
                *e = e
                    .checked_add(class.chains)
                    .ok_or(Error::TooLarge("exponent"))?;
            }
            Ok(Term {
                coefficient: term.coefficient.clone(),
                monomial: Monomial { origin, exponents },
            })
        })
        .collect::<Result<_>>()?;
    Ok(CycleIndexPoly {
        n: z.n,
        action: Action::Induced { power: k, variant },
        terms,
    })
}

/// Evaluates `z` with `t_i := f(origin, i)` chosen separately for every term,
/// and returns the result, which must be a non-negative integer.
pub fn substitute_per_monomial<F>(z: &CycleIndexPoly, f: F) -> Result<BigCount>
where
    F: Fn(&CycleType, u64) -> BigCount,
{
    let mut acc = ExactRational::zero();
    for term in &z.terms {
        let origin = &term.monomial.origin;
        let value = term
            .monomial
            .exponents
            .iter()
            .fold(BigCount::one(), |p, (&i, &e)| p * Pow::pow(f(origin, i), e));
        acc += &term.coefficient * count_to_rational(&value);
    }
    rational_to_count(&acc)
}

/// Largest indeterminate index with a positive exponent, or 0 for a
/// constant polynomial.
pub fn max_indeterminate_index(z: &CycleIndexPoly) -> u64 {
    z.terms
        .iter()
        .filter_map(|t| t.monomial.exponents.keys().next_back().copied())
        .max()
        .unwrap_or(0)
}
