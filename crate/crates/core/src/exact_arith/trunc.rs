use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Element of `Z[t]/t^m`, stored densely: `coeffs[i]` is the coefficient of `t^i`
/// and `coeffs.len() == m` always.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncPoly {
    coeffs: Vec<BigInt>,
}

impl TruncPoly {
    /// Builds an element from the given coefficients; `coeffs.len()` is the modulus exponent.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self, ArithError> {
        if coeffs.is_empty() {
            return Err(ArithError::ZeroModulus);
        }
        Ok(Self { coeffs })
    }

    /// Reduces an arbitrary coefficient sequence mod `t^modulus_exponent`, padding with zeros.
    pub fn from_coeffs<I, T>(modulus_exponent: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        assert!(modulus_exponent > 0, "modulus exponent must be positive");
        let mut v: Vec<BigInt> = coeffs.into_iter().take(modulus_exponent).map(Into::into).collect();
        v.resize(modulus_exponent, BigInt::zero());
        Self { coeffs: v }
    }

    pub fn zero(modulus_exponent: usize) -> Self {
        Self::from_coeffs(modulus_exponent, std::iter::empty::<BigInt>())
    }

    pub fn one(modulus_exponent: usize) -> Self {
        Self::from_coeffs(modulus_exponent, [1])
    }

    /// The element `t` (zero when the modulus exponent is 1).
    pub fn t(modulus_exponent: usize) -> Self {
        Self::from_coeffs(modulus_exponent, [0, 1])
    }

    pub fn constant(modulus_exponent: usize, c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(modulus_exponent, [c.into()])
    }

    pub fn modulus_exponent(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<(), ArithError> {
        if self.modulus_exponent() != other.modulus_exponent() {
            return Err(ArithError::ModulusMismatch {
                left: self.modulus_exponent(),
                right: other.modulus_exponent(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    /// Truncated convolution; degrees `>= modulus_exponent` are never formed.
    pub fn trunc_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let m = self.modulus_exponent();
        let mut out = vec![BigInt::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..m - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse by the series recursion `b_n = -b_0 * sum_{i=1..n} a_i b_{n-i}`.
    pub fn trunc_inverse(&self) -> Result<Self, ArithError> {
        let a0 = &self.coeffs[0];
        if !(a0.abs().is_one()) {
            return Err(ArithError::NotInvertible(a0.clone()));
        }
        // a0 = ±1 is its own inverse
        let b0 = a0.clone();
        let m = self.modulus_exponent();
        let mut b: Vec<BigInt> = Vec::with_capacity(m);
        b.push(b0.clone());
        for n in 1..m {
            let mut s = BigInt::zero();
            for i in 1..=n {
                s += &self.coeffs[i] * &b[n - i];
            }
            b.push(-(&b0 * s));
        }
        Ok(Self { coeffs: b })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.modulus_exponent());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

// Operator forms panic on mismatched moduli; use the `try_*` methods to get an error instead.
impl Add for &TruncPoly {
    type Output = TruncPoly;
    fn add(self, rhs: &TruncPoly) -> TruncPoly {
        self.try_add(rhs).expect("TruncPoly addition")
    }
}

impl Sub for &TruncPoly {
    type Output = TruncPoly;
    fn sub(self, rhs: &TruncPoly) -> TruncPoly {
        self.try_sub(rhs).expect("TruncPoly subtraction")
    }
}

impl Mul for &TruncPoly {
    type Output = TruncPoly;
    fn mul(self, rhs: &TruncPoly) -> TruncPoly {
        self.trunc_mul(rhs).expect("TruncPoly multiplication")
    }
}

impl Neg for &TruncPoly {
    type Output = TruncPoly;
    fn neg(self) -> TruncPoly {
        TruncPoly { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for TruncPoly {
            type Output = TruncPoly;
            fn $f(self, rhs: TruncPoly) -> TruncPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TruncPoly {
    /// Writes e.g. `1 - 3t + 3t^2`; the zero element is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
