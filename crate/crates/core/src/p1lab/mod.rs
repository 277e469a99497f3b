//! Explicit bundles on `P^1`.
//!
//! Charts: `U0` has coordinate `u`, `U1` has `v = 1/u`, and `dv = -u^-2 du`. A section of
//! `O(d)` is a pair `(f0, f1)` with `f0(u) = u^d f1(1/u)`, so the `1x1` transition `u^d`
//! is `O(d)`. A rank-r transition `m` glues `F0(u) = m(u) F1(1/u)`.

mod birkhoff;
mod linalg;
mod matrix;
mod sections;

pub use birkhoff::{birkhoff_factor, birkhoff_split, BirkhoffFactorization, SplittingType};
pub use matrix::LaurentMatrix;
pub use sections::{h0_count, splitting_via_h0};

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::exact_arith::{LaurentParseError, LaurentPoly};
use crate::jetcalc::Side;
use crate::kring::deg_rk;
use crate::report::{Report, Step, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum P1Error {
    #[error("not a vector-bundle transition: determinant {0} is not a nonzero monomial")]
    NotTransition(String),
    #[error("malformed matrix: {0}")]
    Shape(String),
    #[error("matrix entry at line {line}, column {column}: {source}")]
    Entry {
        line: usize,
        column: usize,
        #[source]
        source: LaurentParseError,
    },
    #[error("{0}")]
    Inconsistent(String),
}

/// Transition matrix of the first-order jet bundle `J(O(l))` with the chosen module structure.
///
/// Left: a section is `(f, df)`; differentiating `f0(u) = u^l f1(1/u)` gives
/// `f0' = l u^(l-1) f1 - u^(l-2) (df1/dv)`, so
/// `[[u^l, 0], [l u^(l-1), -u^(l-2)]]` carries `(f1, df1/dv)` to `(f0, df0/du)`.
///
/// Right: the right action `(x ⊗ e, f) a = (x ⊗ ea, fa)` has no derivative term, and in the
/// frame adapted to the splitting section `s(x) = (0, x)` the transition is
/// `diag(u^l, -u^(l-2))`, i.e. `O(l) ⊕ Ω^1 ⊗ O(l)`.
pub fn jet_transition(l: i64, side: Side) -> LaurentMatrix {
    let mut m = LaurentMatrix::zero(2);
    m.set(0, 0, LaurentPoly::int_monomial(1, l));
    m.set(1, 1, LaurentPoly::int_monomial(-1, l - 2));
    if side == Side::Left {
        m.set(1, 0, LaurentPoly::int_monomial(l, l - 1));
    }
    m
}

/// A Čech 1-cochain `ω(u) du` on `U0 ∩ U1` with values in `Ω^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechOneForm {
    pub coefficient: LaurentPoly,
}

impl CechOneForm {
    /// `dlog g = g'/g du` for a monomial transition `g`.
    pub fn dlog(g: &LaurentPoly) -> Result<Self, P1Error> {
        let (c, e) = g.as_monomial().ok_or_else(|| P1Error::NotTransition(g.to_string()))?;
        Ok(Self { coefficient: g.derivative().div_monomial(&c, e) })
    }

    /// Image in `H^1(P^1, Ω^1) = Q`: the `u^-1 du` coefficient. Coboundaries
    /// `a(u) du - b(v) dv` only reach exponents `>= 0` and `<= -2`.
    pub fn cohomology_class(&self) -> BigRational {
        self.coefficient.coeff(-1)
    }
}

/// Atiyah class of `O(l)` on `P^1`, the class of `dlog(u^l) = l u^-1 du`. Equals `c1(O(l)) = l`.
pub fn atiyah_class_p1(l: i64) -> BigRational {
    let g = LaurentPoly::int_monomial(1, l);
    CechOneForm::dlog(&g).expect("u^l is a monomial").cohomology_class()
}

fn splitting(l: i64, side: Side) -> SplittingType {
    birkhoff_split(&jet_transition(l, side)).expect("jet transitions have monomial determinant")
}

/// Checks `a(O(l)) = 0 <=> J(O(l))^left ≅ J(O(l))^right` on `P^1`, deciding the right-hand
/// side by comparing Birkhoff splitting types.
pub fn verify_corr_p1(l: i64) -> Report {
    let class = atiyah_class_p1(l);
    let left = splitting(l, Side::Left);
    let right = splitting(l, Side::Right);
    let class_zero = class.is_zero();
    let isomorphic = left == right;
    let (left_deg, left_rk) = deg_rk(&left.to_line_bundle_sum()).expect("P^1");
    let (right_deg, right_rk) = deg_rk(&right.to_line_bundle_sum()).expect("P^1");
    let steps = vec![
        Step::new("Atiyah class of O(l): u^-1 du coefficient of dlog(u^l)")
            .with("class", class.to_string()),
        Step::new("left transition [[u^l, 0], [l u^(l-1), -u^(l-2)]] splits as")
            .with("splitting", left.degrees().iter().rev().copied().collect::<Vec<_>>()),
        Step::new("right transition in the frame of the splitting section s(x) = (0, x); a change of frame is a unimodular factor and does not alter the splitting")
            .with("splitting", right.degrees().iter().rev().copied().collect::<Vec<_>>()),
        Step::new("degree and rank agree on both sides")
            .with("left_degree", &left_deg)
            .with("left_rank", &left_rk)
            .with("right_degree", &right_deg)
            .with("right_rank", &right_rk),
        Step::new("class vanishes exactly when the splittings coincide")
            .with("class_is_zero", class_zero)
            .with("splittings_equal", isomorphic),
    ];
    let verdict = if class_zero == isomorphic && left_deg == right_deg && left_rk == right_rk {
        Verdict::Verified
    } else {
        Verdict::Refuted
    };
    Report::new("atiyah", &[("l", l.to_string())], verdict, steps)
}
