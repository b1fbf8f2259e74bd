//! Exact integers and rationals plus the handful of number-theoretic helpers
//! the counting formulas need.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative count.
pub type BigCount = BigUint;

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// Least common multiple of a list of positive integers.
///
/// The empty list has lcm 1 and a singleton `[r]` has lcm `r`, matching the
/// conventions used for operations of arity 0 and 1.
pub fn lcm_list(xs: &[u64]) -> Result<u64> {
    xs.iter().try_fold(1u64, |acc, &x| {
        if x == 0 {
            return Err(Error::NonPositive(x));
        }
        let g = acc.gcd(&x);
        (acc / g).checked_mul(x).ok_or(Error::TooLarge("lcm"))
    })
}

/// Greatest common divisor of a non-empty list of positive integers.
pub fn gcd_list(xs: &[u64]) -> Result<u64> {
    let (&first, rest) = xs.split_first().ok_or(Error::EmptyGcd)?;
    if first == 0 {
        return Err(Error::NonPositive(first));
    }
    rest.iter().try_fold(first, |acc, &x| {
        if x == 0 {
            Err(Error::NonPositive(x))
        } else {
            Ok(acc.gcd(&x))
        }
    })
}

pub fn factorial(n: u64) -> BigCount {
    (2..=n).fold(BigCount::one(), |acc, i| acc * i)
}

/// Positive divisors of `m` in increasing order, by trial division.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            low.push(d);
            if d != m / d {
                high.push(m / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// Converts an exact rational to a count, failing unless it is a
/// non-negative integer.
pub fn rational_to_count(q: &ExactRational) -> Result<BigCount> {
    if !q.is_integer() {
        return Err(Error::NonIntegral(q.to_string()));
    }
    q.to_integer()
        .to_biguint()
        .ok_or_else(|| Error::NonIntegral(q.to_string()))
}

pub fn count_to_rational(c: &BigCount) -> ExactRational {
    ExactRational::from_integer(BigInt::from(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_conventions() {
        assert_eq!(lcm_list(&[]).unwrap(), 1);
        assert_eq!(lcm_list(&[7]).unwrap(), 7);
        assert_eq!(lcm_list(&[2, 2, 2]).unwrap(), 2);
        assert_eq!(lcm_list(&[4, 6]).unwrap(), 12);
        assert_eq!(lcm_list(&[3, 0]), Err(Error::NonPositive(0)));
    }

    #[test]
    fn gcd_cases() {
        assert_eq!(gcd_list(&[2, 2, 2]).unwrap(), 2);
        assert_eq!(gcd_list(&[4, 6]).unwrap(), 2);
        assert_eq!(gcd_list(&[5]).unwrap(), 5);
        assert_eq!(gcd_list(&[]), Err(Error::EmptyGcd));
        assert_eq!(gcd_list(&[0]), Err(Error::NonPositive(0)));
        assert_eq!(gcd_list(&[6, 0]), Err(Error::NonPositive(0)));
    }

    #[test]
    fn gcd_times_lcm_is_product_for_pairs() {
        for a in 1..=30u64 {
            for b in 1..=30u64 {
                assert_eq!(
                    gcd_list(&[a, b]).unwrap() * lcm_list(&[a, b]).unwrap(),
                    a * b,
                    "({a}, {b})"
                );
            }
        }
    }

    #[test]
    fn divisors_match_brute_force() {
        for m in 1..=200u64 {
            let brute: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
            assert_eq!(divisors(m), brute, "m = {m}");
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigCount::from(1u32));
        assert_eq!(factorial(5), BigCount::from(120u32));
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }

    #[test]
    fn integrality_check() {
        let q = ExactRational::new(BigInt::from(12), BigInt::from(4));
        assert_eq!(rational_to_count(&q).unwrap(), BigCount::from(3u32));
        let half = ExactRational::new(BigInt::from(1), BigInt::from(2));
        assert!(matches!(
            rational_to_count(&half),
            Err(Error::NonIntegral(_))
        ));
    }
}
