use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Laurent polynomial in one variable `u` with rational coefficients.
///
/// Only nonzero coefficients are stored, so the zero polynomial is the empty map and
/// structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * u^e`.
    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    /// `c * u^e` with an integer coefficient.
    pub fn int_monomial(c: i64, e: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), e)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// `Some((c, e))` when the polynomial is a single nonzero term `c * u^e`.
    pub fn as_monomial(&self) -> Option<(BigRational, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        self.coeffs.iter().next().map(|(e, c)| (c.clone(), *e))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, a)| (e + k, a.clone())).collect() }
    }

    /// The substitution `u -> 1/u`.
    pub fn invert_variable(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, a)| (-e, a.clone())).collect() }
    }

    /// d/du.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .map(|(e, a)| (e - 1, a * BigRational::from_integer(BigInt::from(*e)))),
        )
    }

    /// Exact quotient by a nonzero monomial `c * u^e`.
    pub fn div_monomial(&self, c: &BigRational, e: i64) -> Self {
        assert!(!c.is_zero(), "division by the zero monomial");
        let inv = c.recip();
        Self { coeffs: self.coeffs.iter().map(|(k, a)| (k - e, a * &inv)).collect() }
    }

    pub fn is_polynomial_in_u(&self) -> bool {
        self.min_degree().is_none_or(|d| d >= 0)
    }

    pub fn is_polynomial_in_u_inverse(&self) -> bool {
        self.max_degree().is_none_or(|d| d <= 0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Text form accepted by [`FromStr`], terms in increasing exponent: `3*u^-2 + 1 - 1/2*u^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if *e == 1 {
                write!(f, "u")?;
            } else {
                write!(f, "u^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad Laurent polynomial at byte {position}: {message}")]
pub struct LaurentParseError {
    pub position: usize,
    pub message: String,
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, message: impl Into<String>) -> LaurentParseError {
        LaurentParseError { position: self.pos, message: message.into() }
    }

    fn digits(&mut self) -> Result<BigInt, LaurentParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit run parses"))
    }

    fn exponent(&mut self) -> Result<i64, LaurentParseError> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let at = self.pos;
        let d = self.digits()?;
        let d: i64 = d
            .try_into()
            .map_err(|_| LaurentParseError { position: at, message: "exponent out of range".into() })?;
        Ok(if negative { -d } else { d })
    }

    // term := coeff ['*' mono] | mono ; mono := 'u' ['^' exponent]
    fn term(&mut self) -> Result<(i64, BigRational), LaurentParseError> {
        let coeff = match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let num = self.digits()?;
                let den = if self.eat(b'/') {
                    let at = self.pos;
                    let d = self.digits()?;
                    if d.is_zero() {
                        return Err(LaurentParseError { position: at, message: "zero denominator".into() });
                    }
                    d
                } else {
                    BigInt::one()
                };
                let c = BigRational::new(num, den);
                if !self.eat(b'*') {
                    return Ok((0, c));
                }
                c
            }
            _ => BigRational::one(),
        };
        if !self.eat(b'u') {
            return Err(self.err("expected a number or `u`"));
        }
        let e = if self.eat(b'^') { self.exponent()? } else { 1 };
        Ok((e, coeff))
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner { src: s.as_bytes(), pos: 0 };
        let mut out = LaurentPoly::zero();
        let mut negative = if sc.eat(b'-') {
            true
        } else {
            sc.eat(b'+');
            false
        };
        loop {
            let (e, c) = sc.term()?;
            out.add_term(e, if negative { -c } else { c });
            match sc.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(sc.err("expected `+`, `-` or end of input")),
            }
            sc.pos += 1;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(lp("u + u^-1") * lp("u"), lp("u^2 + 1"));
        let a = lp("3*u^-2 + 1 - 1/2*u^3");
        assert_eq!(&a + &LaurentPoly::zero(), a);
        assert_eq!(lp("1 - u^-1") * lp("1 + u^-1"), lp("1 - u^-2"));
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let p = lp("u - u + 2");
        assert_eq!(p, LaurentPoly::int_monomial(2, 0));
        assert_eq!(p.terms().count(), 1);
        assert!((lp("u") - lp("u")).is_zero());
        assert_eq!(LaurentPoly::int_monomial(0, 5), LaurentPoly::zero());
    }

    #[test]
    fn parsing_and_printing() {
        let a = lp(" 3 * u ^ -2 + 1 -1/2*u^3 ");
        assert_eq!(a.coeff(-2), BigRational::from_integer(3.into()));
        assert_eq!(a.coeff(3), BigRational::new((-1).into(), 2.into()));
        assert_eq!(a.to_string(), "3*u^-2 + 1 - 1/2*u^3");
        assert_eq!(lp("-u").to_string(), "-u");
        assert_eq!(lp("0").to_string(), "0");
        assert_eq!(lp("2/4*u").to_string(), "1/2*u");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!("u +".parse::<LaurentPoly>().unwrap_err().position, 3);
        assert_eq!("1/0".parse::<LaurentPoly>().unwrap_err().message, "zero denominator");
        assert!("2 u".parse::<LaurentPoly>().is_err());
        assert!("x".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn calculus_helpers() {
        assert_eq!(lp("u^3").derivative(), lp("3*u^2"));
        assert_eq!(lp("u^-2 + 5").derivative(), lp("-2*u^-3"));
        let q = lp("3*u^2").derivative().div_monomial(&BigRational::from_integer(3.into()), 2);
        assert_eq!(q, lp("2*u^-1"));
        assert_eq!(lp("u^2 + u^-1").invert_variable(), lp("u^-2 + u"));
        assert_eq!(lp("-4*u^7").as_monomial(), Some((BigRational::from_integer((-4).into()), 7)));
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -9i64..9, 1i64..4), 0..6).prop_map(|ts| {
            LaurentPoly::from_terms(
                ts.into_iter()
                    .map(|(e, n, d)| (e, BigRational::new(n.into(), d.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn degree_bounds_of_products(a in arb_laurent(), b in arb_laurent()) {
            let p = &a * &b;
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!(p.min_degree().unwrap(), a.min_degree().unwrap() + b.min_degree().unwrap());
                prop_assert_eq!(p.max_degree().unwrap(), a.max_degree().unwrap() + b.max_degree().unwrap());
            } else {
                prop_assert!(p.is_zero());
            }
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn text_format_round_trips(a in arb_laurent()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }
    }
}
