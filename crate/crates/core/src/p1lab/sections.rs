//! Global sections by exact linear algebra, independent of the Birkhoff factorization.

use num_rational::BigRational;

use super::linalg::rank;
use super::{LaurentMatrix, P1Error, SplittingType};

/// `dim H^0` of the bundle glued by `m`: pairs of polynomial vectors `(F0(u), F1(v))`
/// with `F0(u) = m(u) F1(1/u)`.
///
/// `F1 = m^-1 F0` only involves exponents `>= min_exponent(m^-1)`, which bounds the
/// `v`-degree of `F1`; the count is the dimension of the solution space of the linear
/// conditions "no negative powers of `u` in `m(u) F1(1/u)`".
pub fn h0_count(m: &LaurentMatrix) -> Result<usize, P1Error> {
    let inv = m.inverse()?;
    let r = m.size();
    let bound = (-inv.min_exponent().expect("inverse is nonzero")).max(0);
    let lowest = m.min_exponent().expect("nonzero matrix") - bound;
    if lowest >= 0 {
        // every F1 of bounded degree works
        return Ok(r * (bound as usize + 1));
    }
    let unknowns = r * (bound as usize + 1);
    // unknown (j, k): coefficient of v^k in F1_j, contributing m_ij(u) u^-k to F0_i
    let mut rows = Vec::new();
    for i in 0..r {
        for e in lowest..0 {
            let mut row = Vec::with_capacity(unknowns);
            for j in 0..r {
                for k in 0..=bound {
                    row.push(m.get(i, j).coeff(e + k));
                }
            }
            if row.iter().any(|c: &BigRational| c != &BigRational::from_integer(0.into())) {
                rows.push(row);
            }
        }
    }
    Ok(unknowns - rank(rows))
}

/// Splitting type recovered from `t -> h0(u^t m)` alone.
///
/// Every degree lies in `[min_exponent(m), max_exponent(m)]`, and
/// `h0(u^t m) - h0(u^(t-1) m) = #{i : a_i >= -t}`.
pub fn splitting_via_h0(m: &LaurentMatrix) -> Result<SplittingType, P1Error> {
    m.unit_determinant()?;
    let lo = m.min_exponent().expect("nonzero matrix");
    let hi = m.max_exponent().expect("nonzero matrix");
    let h = |t: i64| h0_count(&m.shift(t));
    // at_least[x - lo] = #{i : a_i >= x} for x in lo..=hi+1
    let mut at_least = Vec::new();
    let mut prev = h(-hi - 1)?;
    let mut steps = Vec::new();
    for t in -hi..=-lo {
        let cur = h(t)?;
        steps.push((t, cur - prev));
        prev = cur;
    }
    for x in lo..=hi + 1 {
        let count = steps.iter().find(|(t, _)| *t == -x).map_or(0, |(_, g)| *g);
        at_least.push(count);
    }
    let mut degrees = Vec::new();
    for (idx, x) in (lo..=hi).enumerate() {
        let exactly = at_least[idx] - at_least[idx + 1];
        degrees.extend(std::iter::repeat_n(x, exactly));
    }
    if degrees.len() != m.size() {
        return Err(P1Error::Inconsistent(format!(
            "section counts recover {} degrees for a rank-{} bundle",
            degrees.len(),
            m.size()
        )));
    }
    Ok(SplittingType::new(degrees))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> LaurentMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0_count(&LaurentMatrix::identity(2)).unwrap(), 2);
        assert_eq!(h0_count(&m("u; 0\n0; u")).unwrap(), 4);
        assert_eq!(h0_count(&m("u; 0\n1; -u^-1")).unwrap(), 2);
        assert_eq!(h0_count(&m("u^-1")).unwrap(), 0);
        assert_eq!(h0_count(&m("u^4")).unwrap(), 5);
    }

    #[test]
    fn hand_computed_coupled_case() {
        // [[u, 1], [0, u^-1]]: F1 = (a, b); the second row forces b = 0, the first
        // allows a of degree <= 1, so h0 = 2; after twisting by u^-1 only constants remain.
        let a = m("u; 1\n0; u^-1");
        assert_eq!(h0_count(&a).unwrap(), 2);
        assert_eq!(h0_count(&a.shift(-1)).unwrap(), 1);
        assert_eq!(splitting_via_h0(&a).unwrap().degrees(), &[1, -1]);
    }

    #[test]
    fn splitting_examples() {
        assert_eq!(splitting_via_h0(&m("u^3")).unwrap().degrees(), &[3]);
        assert_eq!(splitting_via_h0(&m("u; 0\n1; u^-1")).unwrap().degrees(), &[0, 0]);
        assert_eq!(splitting_via_h0(&m("1; u^-3\n0; 1")).unwrap().degrees(), &[0, 0]);
        assert!(splitting_via_h0(&m("1 + u")).is_err());
    }
}
