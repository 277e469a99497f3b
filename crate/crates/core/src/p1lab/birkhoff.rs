//! Birkhoff factorization `m = A · diag(u^{a_1}, ..., u^{a_r}) · B` with `A` invertible
//! over `Q[u]` and `B` invertible over `Q[u^-1]`.
//!
//! After clearing denominators to a polynomial matrix `P = u^s m`, unimodular row
//! operations over `Q[u]` bring `P` to row-reduced form: the matrix of leading row
//! coefficients is invertible. Then `P = diag(u^{r_i}) · Q` with `Q` a polynomial in
//! `u^-1` whose constant term is that leading matrix, so `Q` is invertible over `Q[u^-1]`.
//! Each reduction strictly lowers `sum r_i - deg det P >= 0`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::linalg::kernel_vector;
use super::{LaurentMatrix, P1Error};
use crate::exact_arith::LaurentPoly;
use crate::kring::LineBundleSum;

/// Birkhoff–Grothendieck degrees of a bundle on `P^1`, stored in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplittingType {
    degrees: Vec<i64>,
}

impl SplittingType {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self { degrees }
    }

    /// Descending.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// `h^0 = sum max(0, a_i + 1)`.
    pub fn h0(&self) -> usize {
        self.degrees.iter().map(|&a| (a + 1).max(0) as usize).sum()
    }

    pub fn to_line_bundle_sum(&self) -> LineBundleSum {
        LineBundleSum::from_twists(1, &self.degrees)
    }
}

impl fmt::Display for SplittingType {
    /// Multiset notation in ascending order, e.g. `{0, 2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.degrees.iter().rev().map(ToString::to_string).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// `m = left · diag(u^{degrees[i]}) · right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirkhoffFactorization {
    /// Polynomial in `u` with constant determinant.
    pub left: LaurentMatrix,
    /// Degrees in the row order of the factorization (not sorted).
    pub degrees: Vec<i64>,
    /// Polynomial in `u^-1` with constant determinant.
    pub right: LaurentMatrix,
}

impl BirkhoffFactorization {
    pub fn splitting_type(&self) -> SplittingType {
        SplittingType::new(self.degrees.clone())
    }

    pub fn product(&self) -> LaurentMatrix {
        self.left
            .mul(&LaurentMatrix::diagonal_monomials(&self.degrees))
            .mul(&self.right)
    }
}

fn row_degree(p: &LaurentMatrix, i: usize) -> i64 {
    p.row(i)
        .iter()
        .filter_map(LaurentPoly::max_degree)
        .max()
        .expect("rows of an invertible matrix are nonzero")
}

pub fn birkhoff_factor(m: &LaurentMatrix) -> Result<BirkhoffFactorization, P1Error> {
    let (_, det_exp) = m.unit_determinant()?;
    let r = m.size();
    let shift = (-m.min_exponent().expect("nonzero determinant")).max(0);
    let mut p = m.shift(shift);
    let target = det_exp + shift * r as i64;
    let mut left = LaurentMatrix::identity(r);

    loop {
        let degs: Vec<i64> = (0..r).map(|i| row_degree(&p, i)).collect();
        let excess = degs.iter().sum::<i64>() - target;
        debug_assert!(excess >= 0);
        // leading coefficient matrix, transposed so that its kernel is our left kernel
        let lead_t: Vec<Vec<BigRational>> = (0..r)
            .map(|j| (0..r).map(|i| p.get(i, j).coeff(degs[i])).collect())
            .collect();
        let Some(c) = kernel_vector(&lead_t, r) else {
            debug_assert_eq!(excess, 0);
            break;
        };
        // pivot: highest row degree among rows in the dependency, lowest index on ties
        let pivot = (0..r)
            .filter(|&i| !c[i].is_zero())
            .max_by(|&a, &b| degs[a].cmp(&degs[b]).then(b.cmp(&a)))
            .expect("kernel vector is nonzero");
        let mut multipliers = vec![LaurentPoly::zero(); r];
        for i in (0..r).filter(|&i| i != pivot && !c[i].is_zero()) {
            multipliers[i] = LaurentPoly::monomial(&c[i] / &c[pivot], degs[pivot] - degs[i]);
        }
        // row_pivot += sum_i q_i row_i
        for j in 0..r {
            let mut acc = p.get(pivot, j).clone();
            for (i, q) in multipliers.iter().enumerate() {
                if !q.is_zero() {
                    acc = &acc + &(q * p.get(i, j));
                }
            }
            p.set(pivot, j, acc);
        }
        // left <- left · (I - e_pivot q^T): col_i -= q_i col_pivot
        for (i, q) in multipliers.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for k in 0..r {
                let v = left.get(k, i) - &(q * left.get(k, pivot));
                left.set(k, i, v);
            }
        }
    }

    let degs: Vec<i64> = (0..r).map(|i| row_degree(&p, i)).collect();
    let mut right = LaurentMatrix::zero(r);
    for (i, d) in degs.iter().enumerate() {
        for j in 0..r {
            right.set(i, j, p.get(i, j).shift(-d));
        }
    }
    let degrees = degs.iter().map(|d| d - shift).collect();
    Ok(BirkhoffFactorization { left, degrees, right })
}

/// Splitting type of the bundle with transition `m`, under the convention that the
/// `1x1` matrix `(u^d)` is `O(d)`.
pub fn birkhoff_split(m: &LaurentMatrix) -> Result<SplittingType, P1Error> {
    Ok(birkhoff_factor(m)?.splitting_type())
}

#[cfg(test)]
mod tests {
    use super::*;
    fn m(s: &str) -> LaurentMatrix {
        s.parse().unwrap()
    }

    fn check_factorization(a: &LaurentMatrix) -> SplittingType {
        let f = birkhoff_factor(a).unwrap();
        assert_eq!(&f.product(), a);
        assert!(f.left.is_polynomial_in_u());
        assert!(f.right.is_polynomial_in_u_inverse());
        assert_eq!(f.left.unit_determinant().unwrap().1, 0);
        assert_eq!(f.right.unit_determinant().unwrap().1, 0);
        f.splitting_type()
    }

    #[test]
    fn examples() {
        assert_eq!(check_factorization(&m("u^2; 0\n0; u^-1")).degrees(), &[2, -1]);
        assert_eq!(check_factorization(&m("1; u^-3\n0; 1")).degrees(), &[0, 0]);
        assert_eq!(check_factorization(&m("u^2; 0\n2*u; -1")).degrees(), &[1, 1]);
        assert_eq!(check_factorization(&m("u^5")).degrees(), &[5]);
        assert_eq!(check_factorization(&m("-3*u^-4")).degrees(), &[-4]);
    }

    #[test]
    fn row_reduced_input_reads_off_row_degrees() {
        assert_eq!(check_factorization(&m("u; 1\n0; u^-1")).degrees(), &[1, -1]);
        assert_eq!(
            check_factorization(&m("u^2; u; 1\n0; u^2; u\n0; 0; u^-4")).degrees(),
            &[2, 2, -4]
        );
    }

    #[test]
    fn coupled_entries_are_reduced() {
        // leading row coefficients [[1, 0], [1, 0]] are dependent; det = 1
        assert_eq!(check_factorization(&m("u; 0\n1; u^-1")).degrees(), &[0, 0]);
        // the left jet transition of O(3): det = -u^4, balanced as {2, 2}
        assert_eq!(check_factorization(&m("u^3; 0\n3*u^2; -u")).degrees(), &[2, 2]);
    }

    #[test]
    fn rejects_non_units() {
        assert!(matches!(birkhoff_split(&m("1 + u; 0\n0; 1")), Err(P1Error::NotTransition(_))));
        assert!(matches!(birkhoff_split(&m("u; u\nu; u")), Err(P1Error::NotTransition(_))));
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(SplittingType::new(vec![0, 2]).to_string(), "{0, 2}");
        assert_eq!(SplittingType::new(vec![2, -1, 2]).to_string(), "{-1, 2, 2}");
        assert_eq!(SplittingType::new(vec![2, -1, 2]).degrees(), &[2, 2, -1]);
    }

    #[test]
    fn scalar_multiple_of_identity() {
        let a = LaurentMatrix::identity(3).shift(-2);
        let s = check_factorization(&a);
        assert_eq!(s.degrees(), &[-2, -2, -2]);
        assert_eq!(s.to_line_bundle_sum(), LineBundleSum::twist(1, -2, 3));
    }
}
