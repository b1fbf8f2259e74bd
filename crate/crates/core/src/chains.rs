//! How a permutation with a given cycle type, acting coordinatewise on
//! `[n]^k`, splits the hypercube into boxes and each box into chains.
//!
//! A box is a product `C_1 × ... × C_k` of cycles with lengths
//! `r_1, ..., r_k`. The induced permutation walks each cell of the box around
//! a chain of length `lcm(r_1, ..., r_k)`, so the box holds
//! `r_1 ⋯ r_k / lcm(r_1, ..., r_k)` chains.

use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd_list, lcm_list};
use crate::error::{Error, Result};
use crate::partition::CycleType;

/// Which chains-per-box rule to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    /// `r_1 ⋯ r_k / lcm(r_1, ..., r_k)`.
    #[default]
    Correct,
    /// `gcd(r_1, ..., r_k)`, the historically published rule. It agrees
    /// with [`Variant::Correct`] only for `k = 2`; it is kept to reproduce
    /// the wrong numbers, not to be used.
    HarrisonGcd,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Correct, Variant::HarrisonGcd];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Correct => "correct",
            Variant::HarrisonGcd => "harrison-gcd",
        }
    }

    /// Whether the rule is defined for arity `k`.
    pub fn supports_arity(self, k: u32) -> bool {
        !(self == Variant::HarrisonGcd && k == 0)
    }

    /// Number of independent chains in a box with side lengths `lens`.
    pub fn chains_per_box(self, lens: &[u64]) -> Result<u64> {
        match self {
            Variant::Correct => {
                let lcm = lcm_list(lens)?;
                // Divide as we go so the running product stays small.
                let mut rest = lcm;
                let mut chains = 1u64;
                for &r in lens {
                    let g = num_integer::gcd(r, rest);
                    rest /= g;
                    chains = chains
                        .checked_mul(r / g)
                        .ok_or(Error::TooLarge("chain count"))?;
                }
                debug_assert_eq!(rest, 1);
                Ok(chains)
            }
            Variant::HarrisonGcd => {
                if lens.is_empty() {
                    return Err(Error::GcdArityZero);
                }
                gcd_list(lens)
            }
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "correct" => Ok(Variant::Correct),
            "harrison-gcd" => Ok(Variant::HarrisonGcd),
            other => Err(format!("unknown variant `{other}`")),
        }
    }
}

/// One class of boxes: all boxes whose sides have the given lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxClass {
    pub lens: Vec<u64>,
    /// Common chain length, `lcm(lens)`.
    pub chain_len: u64,
    /// Chains in the whole class: chains per box times `prod j_{r_i}`.
    pub chains: u64,
}

/// Every ordered `k`-tuple of cycle lengths drawn from the support of `j`,
/// as box classes. Lengths absent from `j` contribute no boxes and are
/// skipped. For `k = 0` there is exactly one (empty) tuple.
pub fn box_classes(j: &CycleType, k: u32, variant: Variant) -> Result<Vec<BoxClass>> {
    if !variant.supports_arity(k) {
        return Err(Error::GcdArityZero);
    }
    let support: Vec<(u64, u32)> = j.support().collect();
    let k = k as usize;
    if k > 0 && support.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; k];
    loop {
        let lens: Vec<u64> = digits.iter().map(|&d| support[d].0).collect();
        let boxes = digits.iter().try_fold(1u64, |acc, &d| {
            acc.checked_mul(u64::from(support[d].1))
                .ok_or(Error::TooLarge("box count"))
        })?;
        let chains = variant
            .chains_per_box(&lens)?
            .checked_mul(boxes)
            .ok_or(Error::TooLarge("chain count"))?;
        out.push(BoxClass {
            chain_len: lcm_list(&lens)?,
            lens,
            chains,
        });
        // odometer over support^k, last coordinate fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < support.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_per_box_rules() {
        assert_eq!(Variant::Correct.chains_per_box(&[]).unwrap(), 1);
        assert_eq!(Variant::Correct.chains_per_box(&[5]).unwrap(), 1);
        assert_eq!(Variant::Correct.chains_per_box(&[2, 3]).unwrap(), 1);
        assert_eq!(Variant::Correct.chains_per_box(&[4, 6]).unwrap(), 2);
        assert_eq!(Variant::Correct.chains_per_box(&[2, 2, 2]).unwrap(), 4);
        assert_eq!(Variant::HarrisonGcd.chains_per_box(&[2, 2, 2]).unwrap(), 2);
        assert_eq!(
            Variant::HarrisonGcd.chains_per_box(&[]),
            Err(Error::GcdArityZero)
        );
    }

    #[test]
    fn rules_agree_on_pairs() {
        for r in 1..=30u64 {
            for s in 1..=30u64 {
                assert_eq!(
                    Variant::Correct.chains_per_box(&[r, s]).unwrap(),
                    Variant::HarrisonGcd.chains_per_box(&[r, s]).unwrap()
                );
            }
        }
    }

    #[test]
    fn correct_rule_matches_naive_division() {
        for a in 1..=12u64 {
            for b in 1..=12u64 {
                for c in 1..=12u64 {
                    let lcm = lcm_list(&[a, b, c]).unwrap();
                    assert_eq!(
                        Variant::Correct.chains_per_box(&[a, b, c]).unwrap(),
                        a * b * c / lcm
                    );
                }
            }
        }
    }

    #[test]
    fn box_classes_cover_every_cell() {
        // sum over classes of chains * chain_len == n^k
        for n in 0..=7usize {
            for k in 0..=3u32 {
                for j in crate::partition::enumerate_cycle_types(n) {
                    let total: u64 = box_classes(&j, k, Variant::Correct)
                        .unwrap()
                        .iter()
                        .map(|b| b.chains * b.chain_len)
                        .sum();
                    assert_eq!(total, (n as u64).pow(k), "n={n} k={k} j={j:?}");
                }
            }
        }
    }

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert!("gcd".parse::<Variant>().is_err());
    }
}
