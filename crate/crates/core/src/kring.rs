//! The Grothendieck ring `K(P^N)` in the coordinate `t = 1 - [O(-1)]`, split
//! (virtual) bundles with their λ-operations, symmetric powers of the cotangent
//! sheaf, and cohomology of line bundles.
//!
//! Classes live in `Z[t]/t^(N+1)`, whose basis `1, t, ..., t^N` has rank `N + 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact_arith::{binom, binom_big, TruncPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KError {
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("degree and rank are only coordinates of K(P^1); ambient dimension is {0}")]
    NotProjectiveLine(usize),
    #[error("O({twist}) has negative multiplicity {multiplicity}; symmetric and exterior powers need an effective sum")]
    NotEffective { twist: i64, multiplicity: BigInt },
}

/// A class in `K(P^N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KClass {
    ambient_dim: usize,
    value: TruncPoly,
}

impl KClass {
    pub fn new(ambient_dim: usize, value: TruncPoly) -> Result<Self, KError> {
        if ambient_dim == 0 {
            return Err(KError::ZeroDimension);
        }
        if value.modulus_exponent() != ambient_dim + 1 {
            return Err(KError::DimensionMismatch(ambient_dim, value.modulus_exponent() - 1));
        }
        Ok(Self { ambient_dim, value })
    }

    /// Class with coordinates `coeffs` in the basis `1, t, ..., t^N` (missing entries are zero).
    pub fn from_coeffs<I, T>(ambient_dim: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        assert!(ambient_dim >= 1, "ambient dimension must be at least 1");
        Self { ambient_dim, value: TruncPoly::from_coeffs(ambient_dim + 1, coeffs) }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::from_coeffs(ambient_dim, std::iter::empty::<BigInt>())
    }

    pub fn one(ambient_dim: usize) -> Self {
        Self::from_coeffs(ambient_dim, [1])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn value(&self) -> &TruncPoly {
        &self.value
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.value.coeffs()
    }

    /// Coefficient of `t^0`.
    pub fn rank(&self) -> &BigInt {
        self.value.coeff(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { ambient_dim: self.ambient_dim, value: self.value.scale(c) }
    }

    fn same_space(&self, other: &Self) {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "K-classes on projective spaces of different dimension"
        );
    }
}

impl Add for &KClass {
    type Output = KClass;
    fn add(self, rhs: &KClass) -> KClass {
        self.same_space(rhs);
        KClass { ambient_dim: self.ambient_dim, value: &self.value + &rhs.value }
    }
}

impl Sub for &KClass {
    type Output = KClass;
    fn sub(self, rhs: &KClass) -> KClass {
        self.same_space(rhs);
        KClass { ambient_dim: self.ambient_dim, value: &self.value - &rhs.value }
    }
}

impl Mul for &KClass {
    type Output = KClass;
    fn mul(self, rhs: &KClass) -> KClass {
        self.same_space(rhs);
        KClass { ambient_dim: self.ambient_dim, value: &self.value * &rhs.value }
    }
}

impl Neg for &KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        KClass { ambient_dim: self.ambient_dim, value: -&self.value }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for KClass {
            type Output = KClass;
            fn $f(self, rhs: KClass) -> KClass {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// `[O(d)]` on `P^N`.
///
/// For `d <= 0` this is `sum_i (-1)^i C(-d, i) t^i`, i.e. `(1 - t)^(-d)`; for `d > 0`
/// it is `sum_i C(d + i - 1, i) t^i`, the expansion of `(1 - t)^(-d)`. Sums run to `i = N`.
pub fn class_of_twist(n: usize, d: i64) -> KClass {
    assert!(n >= 1, "ambient dimension must be at least 1");
    let coeffs = (0..=n as i64).map(|i| {
        let c = if d <= 0 {
            binom(-d, i).expect("i >= 0")
        } else {
            binom(d + i - 1, i).expect("i >= 0")
        };
        if d <= 0 && i % 2 == 1 {
            -c
        } else {
            c
        }
    });
    KClass::from_coeffs(n, coeffs.collect::<Vec<_>>())
}

/// A formal integer combination of line bundles `O(d)` on `P^N`: a (virtual) split bundle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineBundleSum {
    ambient_dim: usize,
    terms: BTreeMap<i64, BigInt>,
}

impl LineBundleSum {
    pub fn empty(ambient_dim: usize) -> Self {
        assert!(ambient_dim >= 1, "ambient dimension must be at least 1");
        Self { ambient_dim, terms: BTreeMap::new() }
    }

    /// `O(d)^{⊕ mult}`.
    pub fn twist(ambient_dim: usize, d: i64, mult: impl Into<BigInt>) -> Self {
        let mut s = Self::empty(ambient_dim);
        s.add_term(d, mult.into());
        s
    }

    /// From `(twist, multiplicity)` pairs; repeated twists accumulate.
    pub fn from_terms<I, T>(ambient_dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut s = Self::empty(ambient_dim);
        for (d, m) in terms {
            s.add_term(d, m.into());
        }
        s
    }

    /// One copy of `O(d)` per listed twist.
    pub fn from_twists(ambient_dim: usize, twists: &[i64]) -> Self {
        Self::from_terms(ambient_dim, twists.iter().map(|&d| (d, 1)))
    }

    fn add_term(&mut self, d: i64, m: BigInt) {
        if m.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_insert_with(BigInt::zero);
        *slot += m;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// `(twist, multiplicity)` in increasing twist order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(d, m)| (*d, m))
    }

    pub fn multiplicity(&self, d: i64) -> BigInt {
        self.terms.get(&d).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn rank(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `sum d * mult`; the degree on `P^1`.
    pub fn degree(&self) -> BigInt {
        self.terms.iter().map(|(d, m)| BigInt::from(*d) * m).sum()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|m| m.is_positive())
    }

    fn require_effective(&self) -> Result<(), KError> {
        match self.terms.iter().find(|(_, m)| m.is_negative()) {
            Some((d, m)) => Err(KError::NotEffective { twist: *d, multiplicity: m.clone() }),
            None => Ok(()),
        }
    }

    /// Twists listed with repetition, ascending. Panics if the sum is virtual or huge.
    pub fn twists(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (d, m) in &self.terms {
            let m: usize = m.try_into().expect("effective sum of modest rank");
            out.extend(std::iter::repeat_n(*d, m));
        }
        out
    }

    /// Direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut out = self.clone();
        for (d, m) in &other.terms {
            out.add_term(*d, m.clone());
        }
        out
    }

    /// Tensor product: twists add, multiplicities multiply.
    pub fn tensor(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut out = Self::empty(self.ambient_dim);
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                out.add_term(a + b, ma * mb);
            }
        }
        out
    }

    /// Dual: `O(d) -> O(-d)`.
    pub fn dual(&self) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            terms: self.terms.iter().map(|(d, m)| (-d, m.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.ambient_dim, self.terms.iter().map(|(d, m)| (*d, m * c)))
    }
}

impl fmt::Display for LineBundleSum {
    /// `O(1)^3 + O(-2)`; the empty sum is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, m)) in self.terms.iter().rev().enumerate() {
            let mag = m.abs();
            match (i, m.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "O({d})")?;
            if !mag.is_one() {
                write!(f, "^{mag}")?;
            }
        }
        Ok(())
    }
}

/// `sum mult * [O(d)]`.
pub fn sum_to_class(s: &LineBundleSum) -> KClass {
    let n = s.ambient_dim;
    s.terms
        .iter()
        .fold(KClass::zero(n), |acc, (d, m)| &acc + &class_of_twist(n, *d).scale(m))
}

/// `(degree, rank)` of a split bundle on `P^1`.
pub fn deg_rk(s: &LineBundleSum) -> Result<(BigInt, BigInt), KError> {
    if s.ambient_dim != 1 {
        return Err(KError::NotProjectiveLine(s.ambient_dim));
    }
    Ok((s.degree(), s.rank()))
}

fn power_series(s: &LineBundleSum, k: usize, per_twist: impl Fn(&BigInt, usize) -> BigInt) -> LineBundleSum {
    // Graded pieces: layer j collects the degree-j part; multiply one twist-block at a time.
    let n = s.ambient_dim;
    let mut layers: Vec<LineBundleSum> = vec![LineBundleSum::empty(n); k + 1];
    layers[0] = LineBundleSum::twist(n, 0, 1);
    for (d, m) in &s.terms {
        let mut next = vec![LineBundleSum::empty(n); k + 1];
        for (i, layer) in layers.iter().enumerate() {
            if layer.is_empty() {
                continue;
            }
            for j in 0..=(k - i) {
                let count = per_twist(m, j);
                if count.is_zero() {
                    continue;
                }
                let block = LineBundleSum::twist(n, d * j as i64, count);
                next[i + j] = next[i + j].direct_sum(&layer.tensor(&block));
            }
        }
        layers = next;
    }
    layers.swap_remove(k)
}

/// `Sym^k` of an effective split bundle: one `O(d_1 + ... + d_k)` per size-k multiset of summands.
pub fn sym_power(s: &LineBundleSum, k: usize) -> Result<LineBundleSum, KError> {
    s.require_effective()?;
    // Sym^j(O(d)^m) = O(jd)^{C(m+j-1, j)}
    Ok(power_series(s, k, |m, j| {
        if j == 0 {
            BigInt::one()
        } else {
            binom_big(&(m + BigInt::from(j) - 1), j as u64)
        }
    }))
}

/// `Λ^k` of an effective split bundle: one `O(d_1 + ... + d_k)` per size-k subset of summands.
pub fn wedge_power(s: &LineBundleSum, k: usize) -> Result<LineBundleSum, KError> {
    s.require_effective()?;
    // Λ^j(O(d)^m) = O(jd)^{C(m, j)}
    Ok(power_series(s, k, |m, j| binom_big(m, j as u64)))
}

/// `[Sym^i Ω^1]` on `P^N` for `i = 0..=k`, from the Euler-sequence recursion
/// `sum_{i<=k} [Sym^i Ω^1] = C(N+k, N) [O(-k)]`.
pub fn sym_omega_series(n: usize, k: usize) -> Vec<KClass> {
    let mut out: Vec<KClass> = Vec::with_capacity(k + 1);
    let mut partial = KClass::zero(n);
    for i in 0..=k {
        let total = class_of_twist(n, -(i as i64)).scale(&binom((n + i) as i64, n as i64).expect("n >= 0"));
        let next = &total - &partial;
        partial = &partial + &next;
        out.push(next);
    }
    out
}

/// `[Sym^k Ω^1]` on `P^N`.
pub fn sym_omega(n: usize, k: usize) -> KClass {
    sym_omega_series(n, k).pop().expect("series has k + 1 entries")
}

/// `dim H^i(P^N, O(d))`.
pub fn cohomology_dim(n: usize, d: i64, i: usize) -> BigInt {
    let n_i = n as i64;
    if i == 0 {
        if d >= 0 {
            binom(n_i + d, n_i).expect("n >= 0")
        } else {
            BigInt::zero()
        }
    } else if i == n {
        if -d > n_i {
            binom(-d - 1, n_i).expect("n >= 0")
        } else {
            BigInt::zero()
        }
    } else {
        BigInt::zero()
    }
}

/// `dim Hom(O(a), O(b)) = dim H^0(O(b - a))`.
pub fn hom_dim(n: usize, a: i64, b: i64) -> BigInt {
    cohomology_dim(n, b - a, 0)
}
