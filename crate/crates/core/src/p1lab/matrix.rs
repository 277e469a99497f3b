use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use super::P1Error;
use crate::exact_arith::LaurentPoly;

/// Square matrix of Laurent polynomials in `u`: a transition function on `U0 ∩ U1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    /// Row-major entries; `entries.len()` must be `size * size`.
    pub fn new(size: usize, entries: Vec<LaurentPoly>) -> Result<Self, P1Error> {
        if size == 0 || entries.len() != size * size {
            return Err(P1Error::Shape(format!(
                "{} entries do not form a nonempty {size}x{size} matrix",
                entries.len()
            )));
        }
        Ok(Self { size, entries })
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, P1Error> {
        let size = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != size) {
            return Err(P1Error::Shape(format!("row {} has {} entries, expected {size}", i + 1, row.len())));
        }
        Self::new(size, rows.into_iter().flatten().collect())
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn zero(size: usize) -> Self {
        assert!(size > 0, "empty matrix");
        Self { size, entries: vec![LaurentPoly::zero(); size * size] }
    }

    /// `diag(u^{e_1}, ..., u^{e_r})`.
    pub fn diagonal_monomials(exponents: &[i64]) -> Self {
        let mut m = Self::zero(exponents.len());
        for (i, &e) in exponents.iter().enumerate() {
            m.set(i, i, LaurentPoly::int_monomial(1, e));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.size + j] = v;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn entries(&self) -> impl Iterator<Item = &LaurentPoly> {
        self.entries.iter()
    }

    /// Smallest exponent among nonzero entries.
    pub fn min_exponent(&self) -> Option<i64> {
        self.entries.iter().filter_map(LaurentPoly::min_degree).min()
    }

    /// Largest exponent among nonzero entries.
    pub fn max_exponent(&self) -> Option<i64> {
        self.entries.iter().filter_map(LaurentPoly::max_degree).max()
    }

    /// Multiplies every entry by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { size: self.size, entries: self.entries.iter().map(|e| e.shift(k)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size, "matrix sizes differ");
        let n = self.size;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let n = self.size;
        let entries = (0..n)
            .filter(|&i| i != skip_row)
            .flat_map(|i| (0..n).filter(move |&j| j != skip_col).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Self { size: n - 1, entries }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> LaurentPoly {
        match self.size {
            1 => self.entries[0].clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            n => {
                let mut acc = LaurentPoly::zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a * &self.minor(0, j).determinant();
                    acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    /// Classical adjugate, so that `m * adj(m) = det(m) * I`.
    pub fn adjugate(&self) -> Self {
        let n = self.size;
        if n == 1 {
            return Self::identity(1);
        }
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).determinant();
                out.set(j, i, if (i + j) % 2 == 0 { c } else { -c });
            }
        }
        out
    }

    /// The determinant as a unit `c * u^e`, or an error if it is not a single nonzero term.
    pub fn unit_determinant(&self) -> Result<(BigRational, i64), P1Error> {
        let det = self.determinant();
        det.as_monomial().ok_or_else(|| P1Error::NotTransition(det.to_string()))
    }

    /// Inverse over the Laurent ring; requires a monomial determinant.
    pub fn inverse(&self) -> Result<Self, P1Error> {
        let (c, e) = self.unit_determinant()?;
        let adj = self.adjugate();
        Ok(Self { size: self.size, entries: adj.entries.iter().map(|a| a.div_monomial(&c, e)).collect() })
    }

    pub fn is_polynomial_in_u(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_polynomial_in_u)
    }

    pub fn is_polynomial_in_u_inverse(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_polynomial_in_u_inverse)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }
}

impl fmt::Display for LaurentMatrix {
    /// The ingestion grid: one row per line, entries separated by `; `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join("; "))?;
        }
        Ok(())
    }
}

impl FromStr for LaurentMatrix {
    type Err = P1Error;

    /// Parses the text grid format; blank lines are skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows = Vec::new();
        for (lineno, line) in s.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split(';')
                .enumerate()
                .map(|(col, cell)| {
                    cell.parse::<LaurentPoly>().map_err(|source| P1Error::Entry {
                        line: lineno + 1,
                        column: col + 1,
                        source,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(P1Error::Shape("no rows".into()));
        }
        Self::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> LaurentMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn parse_grid() {
        let a = m("u^2; 0\n2*u; -1\n");
        assert_eq!(a.size(), 2);
        assert_eq!(a.get(1, 0), &"2*u".parse().unwrap());
        assert_eq!(a.to_string().parse::<LaurentMatrix>().unwrap(), a);
    }

    #[test]
    fn parse_errors_name_the_cell() {
        match "1; 0\n0; u^".parse::<LaurentMatrix>() {
            Err(P1Error::Entry { line: 2, column: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!("1; 0\n0".parse::<LaurentMatrix>(), Err(P1Error::Shape(_))));
        assert!(matches!("".parse::<LaurentMatrix>(), Err(P1Error::Shape(_))));
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m("u^2; 0\n2*u; -1");
        assert_eq!(a.determinant(), LaurentPoly::int_monomial(-1, 2));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), LaurentMatrix::identity(2));
        let b = m("1; u; u^-1\n0; 1; u^3\n0; 0; u^2");
        assert_eq!(b.determinant(), LaurentPoly::int_monomial(1, 2));
        assert_eq!(b.inverse().unwrap().mul(&b), LaurentMatrix::identity(3));
        let singular = m("u; 1\nu^2; u");
        assert!(matches!(singular.unit_determinant(), Err(P1Error::NotTransition(_))));
        assert!(m("1 + u; 0\n0; 1").inverse().is_err());
    }
}
