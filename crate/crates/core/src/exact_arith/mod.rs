//! Exact integer and rational arithmetic: generalized binomial coefficients,
//! the truncated ring `Z[t]/t^m`, and one-variable Laurent polynomials over `Q`.

mod laurent;
mod trunc;

pub use laurent::{LaurentParseError, LaurentPoly};
pub use trunc::TruncPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("binomial lower index must be nonnegative, got {0}")]
    NegativeLowerIndex(i64),
    #[error("modulus exponents differ: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("modulus exponent must be positive")]
    ZeroModulus,
    #[error("constant coefficient {0} is not a unit of Z")]
    NotInvertible(BigInt),
}

/// Binomial coefficient with the falling-factorial extension to any integer `n`:
/// `n(n-1)...(n-k+1) / k!`.
pub fn binom(n: i64, k: i64) -> Result<BigInt, ArithError> {
    if k < 0 {
        return Err(ArithError::NegativeLowerIndex(k));
    }
    Ok(binom_big(&BigInt::from(n), k as u64))
}

/// Same as [`binom`] for a big upper index; the lower index is unsigned so this never fails.
pub fn binom_big(n: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for j in 0..k {
        // C(n, j+1) = C(n, j) * (n - j) / (j + 1), exact for every integer n
        acc *= n - BigInt::from(j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn falling_factorial_oracle(n: i64, k: i64) -> BigInt {
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for j in 0..k {
            num *= BigInt::from(n - j);
            den *= BigInt::from(j + 1);
        }
        assert_eq!(&num % &den, BigInt::from(0));
        num / den
    }

    #[test]
    fn small_values() {
        assert_eq!(binom(5, 2).unwrap(), BigInt::from(10));
        for d in -7..7 {
            assert_eq!(binom(d, 0).unwrap(), BigInt::from(1));
        }
        assert_eq!(binom(-2, 3).unwrap(), BigInt::from(-4));
        assert_eq!(binom(2, 5).unwrap(), BigInt::from(0));
        assert_eq!(binom(0, 1).unwrap(), BigInt::from(0));
    }

    #[test]
    fn negative_lower_index_is_rejected() {
        assert_eq!(binom(4, -1), Err(ArithError::NegativeLowerIndex(-1)));
    }

    #[test]
    fn matches_falling_factorial_on_a_grid() {
        for n in -15..=15 {
            for k in 0..=12 {
                assert_eq!(binom(n, k).unwrap(), falling_factorial_oracle(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn wide_values_do_not_overflow() {
        let c = binom(70, 35).unwrap();
        assert_eq!(c.to_string(), "112186277816662845432");
        assert_eq!(binom(200, 100).unwrap(), falling_factorial_oracle(200, 100));
    }
}
