//! K-classes of jet bundles `J^k(O(l))` on `P^N`, and the certificates comparing
//! their left and right module structures.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_arith::binom;
use crate::kring::{class_of_twist, cohomology_dim, hom_dim, sum_to_class, sym_omega_series, KClass, LineBundleSum};
pub use crate::report::{Report, Step, Value, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JetError {
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("jet order must be at least 1, got {0}")]
    ZeroOrder(usize),
    #[error("the left splitting O(l-1)^(N+1) is only known for l >= 1, got l = {0}")]
    Inapplicable(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("expected `left` or `right`, got `{other}`")),
        }
    }
}

/// `J^k(O(l))` on `P^N` with the chosen module structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct JetSpec {
    ambient_dim: usize,
    order: usize,
    twist: i64,
    side: Side,
}

impl JetSpec {
    pub fn new(ambient_dim: usize, order: usize, twist: i64, side: Side) -> Result<Self, JetError> {
        if ambient_dim == 0 {
            return Err(JetError::ZeroDimension);
        }
        if order == 0 {
            return Err(JetError::ZeroOrder(order));
        }
        Ok(Self { ambient_dim, order, twist, side })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn side(&self) -> Side {
        self.side
    }
}

/// `[J^k(O(l))] = sum_{i=0..k} [Sym^i Ω^1] [O(l)]`, telescoped along the fundamental
/// sequences `0 -> Sym^i Ω^1 ⊗ O(l) -> J^i -> J^{i-1} -> 0`. Both sides give the same class.
pub fn jet_class(spec: &JetSpec) -> KClass {
    let n = spec.ambient_dim;
    let line = class_of_twist(n, spec.twist);
    sym_omega_series(n, spec.order)
        .iter()
        .fold(KClass::zero(n), |acc, s| &acc + &(s * &line))
}

/// `J(O(l))^left = O(l-1)^{⊕(N+1)}` for `l >= 1`.
pub fn left_splitting_first_order(n: usize, l: i64) -> Result<LineBundleSum, JetError> {
    if n == 0 {
        return Err(JetError::ZeroDimension);
    }
    if l < 1 {
        return Err(JetError::Inapplicable(l));
    }
    Ok(LineBundleSum::twist(n, l - 1, n as i64 + 1))
}

/// `J(O(l))^right = Ω^1 ⊗ O(l) ⊕ O(l)`, split by the right-linear section `x -> (0, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightDecomposition {
    pub omega_part: KClass,
    pub free_part: LineBundleSum,
}

impl RightDecomposition {
    pub fn class(&self) -> KClass {
        &self.omega_part + &sum_to_class(&self.free_part)
    }
}

pub fn right_decomposition_first_order(n: usize, l: i64) -> RightDecomposition {
    let omega = &sym_omega_series(n, 1)[1];
    RightDecomposition {
        omega_part: omega * &class_of_twist(n, l),
        free_part: LineBundleSum::twist(n, l, 1),
    }
}

fn params(n: usize, k: Option<usize>, l: i64) -> Vec<(&'static str, String)> {
    let mut p = vec![("N", n.to_string())];
    if let Some(k) = k {
        p.push(("k", k.to_string()));
    }
    p.push(("l", l.to_string()));
    p
}

/// Checks `[J^k(O(l))^left] = [J^k(O(l))^right]` by comparing the telescoped class
/// `sum_i [Sym^i Ω^1][O(l)]` against the left-split form `C(N+k, N) [O(l-k)]`.
pub fn verify_ktheory_equality(n: usize, k: usize, l: i64) -> Result<Report, JetError> {
    let spec = JetSpec::new(n, k, l, Side::Right)?;
    let line = class_of_twist(n, l);
    let mut steps = Vec::new();
    let series = sym_omega_series(n, k);
    for (i, s) in series.iter().enumerate() {
        steps.push(
            Step::new(format!("graded piece Sym^{i}(Omega^1) (x) O({l})"))
                .with("i", i)
                .with("class", &(s * &line)),
        );
    }
    let telescoped = jet_class(&spec);
    let multiplicity = binom((n + k) as i64, n as i64).expect("n >= 0");
    let split_form = class_of_twist(n, l - k as i64).scale(&multiplicity);
    let equal = telescoped == split_form;
    steps.push(Step::new("right: sum of graded pieces").with("class", &telescoped));
    steps.push(
        Step::new("left: C(N+k, N) copies of O(l-k)")
            .with("multiplicity", &multiplicity)
            .with("twist", l - k as i64)
            .with("class", &split_form),
    );
    steps.push(
        Step::new("rank of J^k equals C(N+k, N)")
            .with("rank", telescoped.rank())
            .with("expected", &multiplicity),
    );
    let mut compare = Step::new("classes agree coefficientwise").with("equal", equal);
    if !equal {
        compare = compare.with("note", "mismatch means an implementation bug, not a counterexample");
    }
    steps.push(compare);
    let verdict = if equal { Verdict::Verified } else { Verdict::Refuted };
    Ok(Report::new("ktheory", &params(n, Some(k), l), verdict, steps))
}

/// Certificate that `J(O(l))^left` and `J(O(l))^right` are not isomorphic on `P^N`.
///
/// For `l >= 1` the right structure has `O(l)` as a direct summand, while the left one is
/// `O(l-1)^{N+1}`, which admits no nonzero map from `O(l)` because `H^0(O(-1)) = 0`.
/// At `l = 0` both structures are `Ω^1 ⊕ O` and the verdict is `refuted`. Negative twists
/// are `inapplicable` here; on `P^1` they are decided by [`crate::p1lab::verify_corr_p1`].
pub fn prove_non_isomorphic(n: usize, l: i64) -> Report {
    assert!(n >= 1, "ambient dimension must be at least 1");
    let params = params(n, None, l);
    if l == 0 {
        let right = right_decomposition_first_order(n, 0);
        let c1 = first_chern_coefficient(n, 0);
        let steps = vec![
            Step::new("c1(O) vanishes, so the Atiyah class a(O) = 0")
                .with("c1", &c1),
            Step::new("the universal derivation d is a connection on O; both structures are Omega^1 + O")
                .with("omega_part", &right.omega_part)
                .with("free_part", &right.free_part),
        ];
        return Report::new("mainsplit", &params, Verdict::Refuted, steps);
    }
    if l < 0 {
        let steps = vec![Step::new(
            "the left splitting O(l-1)^(N+1) is only established for l >= 1; on P^1 use the Birkhoff oracle (verify atiyah)",
        )
        .with("l", l)];
        return Report::new("mainsplit", &params, Verdict::Inapplicable, steps);
    }

    let right = right_decomposition_first_order(n, l);
    let left = left_splitting_first_order(n, l).expect("l >= 1");
    let has_summand = right.free_part.multiplicity(l) >= BigInt::from(1);
    let hom = hom_dim(n, l, l - 1);
    let h0_minus_one = cohomology_dim(n, -1, 0);
    let left_twists_below = left.terms().all(|(d, _)| d < l);
    let rank = BigInt::from(n as i64 + 1);
    let ranks_ok = left.rank() == rank && right.class().rank() == &rank;
    let classes_agree = sum_to_class(&left) == right.class();

    let steps = vec![
        Step::new("right structure splits off O(l) via the right-linear section s(x) = (0, x)")
            .with("omega_part", &right.omega_part)
            .with("free_part", &right.free_part)
            .with("contains_O(l)", has_summand),
        Step::new("left structure is O(l-1)^(N+1)")
            .with("left", &left)
            .with("rank", left.rank()),
        Step::new("H^0(O(-1)) = 0, so Hom(O(l), O(l-1)) = 0 and O(l) is not a direct summand of the left structure")
            .with("h0(O(-1))", &h0_minus_one)
            .with("dim Hom(O(l), O(l-1))", &hom),
        Step::new("both structures are locally free of rank N+1")
            .with("rank", &rank)
            .with("ok", ranks_ok),
        Step::new("their K-classes nevertheless agree")
            .with("left_class", &sum_to_class(&left))
            .with("right_class", &right.class())
            .with("equal", classes_agree),
    ];
    let verdict = if has_summand && hom.is_zero() && h0_minus_one.is_zero() && left_twists_below && ranks_ok {
        Verdict::Verified
    } else {
        Verdict::Refuted
    };
    Report::new("mainsplit", &params, verdict, steps)
}

/// Coefficient of `t` in `[O(l)]`, which is `c1(O(l)) = l` in units of the hyperplane class.
fn first_chern_coefficient(n: usize, l: i64) -> BigInt {
    class_of_twist(n, l).coeffs()[1].clone()
}

/// Whether `O(l)` on `P^N` has no connection, i.e. its Atiyah class `a(O(l)) = c1(O(l))` is nonzero.
pub fn connection_obstruction(n: usize, l: i64) -> bool {
    !first_chern_coefficient(n, l).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kring::sym_omega;

    fn kc(n: usize, c: &[i64]) -> KClass {
        KClass::from_coeffs(n, c.iter().copied())
    }

    fn spec(n: usize, k: usize, l: i64, side: Side) -> JetSpec {
        JetSpec::new(n, k, l, side).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert_eq!(JetSpec::new(0, 1, 0, Side::Left), Err(JetError::ZeroDimension));
        assert_eq!(JetSpec::new(2, 0, 0, Side::Left), Err(JetError::ZeroOrder(0)));
    }

    #[test]
    fn jet_class_examples() {
        for side in [Side::Left, Side::Right] {
            assert_eq!(jet_class(&spec(1, 1, 2, side)), kc(1, &[2, 2]));
        }
        for n in 1..5 {
            assert_eq!(jet_class(&spec(n, 1, 0, Side::Left)), &sym_omega(n, 1) + &KClass::one(n));
        }
        // term-by-term oracle
        let line = class_of_twist(2, 3);
        let oracle = (0..=2).fold(KClass::zero(2), |acc, i| &acc + &(&sym_omega(2, i) * &line));
        assert_eq!(oracle, class_of_twist(2, 1).scale(&6.into()));
        assert_eq!(jet_class(&spec(2, 2, 3, Side::Right)), oracle);
    }

    #[test]
    fn jet_class_ignores_side_and_has_binomial_rank() {
        for n in 1..=5 {
            for k in 1..=4 {
                for l in -4..=4 {
                    let left = jet_class(&spec(n, k, l, Side::Left));
                    assert_eq!(left, jet_class(&spec(n, k, l, Side::Right)));
                    assert_eq!(left.rank(), &binom((n + k) as i64, n as i64).unwrap());
                }
            }
            assert_eq!(jet_class(&spec(n, 1, 7, Side::Left)).rank(), &BigInt::from(n as i64 + 1));
        }
    }

    #[test]
    fn left_splitting_examples() {
        assert_eq!(left_splitting_first_order(3, 2).unwrap(), LineBundleSum::twist(3, 1, 4));
        assert_eq!(left_splitting_first_order(1, 1).unwrap(), LineBundleSum::twist(1, 0, 2));
        assert_eq!(left_splitting_first_order(2, 1).unwrap(), LineBundleSum::twist(2, 0, 3));
        assert_eq!(left_splitting_first_order(2, 0), Err(JetError::Inapplicable(0)));
        assert_eq!(left_splitting_first_order(2, -3), Err(JetError::Inapplicable(-3)));
    }

    #[test]
    fn right_decomposition_examples() {
        let r = right_decomposition_first_order(1, 2);
        assert_eq!(r.omega_part, class_of_twist(1, 0));
        assert_eq!(r.free_part, LineBundleSum::twist(1, 2, 1));
        let r0 = right_decomposition_first_order(3, 0);
        assert_eq!(r0.omega_part, sym_omega(3, 1));
        assert_eq!(r0.free_part, LineBundleSum::twist(3, 0, 1));
        // (2 - 3t)(1 + t + t^2) mod t^3 = 2 - t - t^2
        let r21 = right_decomposition_first_order(2, 1);
        assert_eq!(r21.omega_part, kc(2, &[2, -1, -1]));
        assert_eq!(r21.free_part, LineBundleSum::twist(2, 1, 1));
    }

    #[test]
    fn left_and_right_first_order_classes_agree() {
        for n in 1..=8 {
            for l in 1..=10 {
                let left = sum_to_class(&left_splitting_first_order(n, l).unwrap());
                let right = right_decomposition_first_order(n, l);
                assert_eq!(left, right.class());
                assert_eq!(left, jet_class(&spec(n, 1, l, Side::Left)));
            }
        }
    }

    #[test]
    fn ktheory_reports() {
        let r = verify_ktheory_equality(1, 1, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        let both = Value::List(vec!["2".into(), "2".into()]);
        assert_eq!(r.step("right:").unwrap().values["class"], both);
        assert_eq!(r.step("left:").unwrap().values["class"], both);
        assert_eq!(verify_ktheory_equality(1, 0, 2), Err(JetError::ZeroOrder(0)));
        let big = verify_ktheory_equality(4, 3, 7).unwrap();
        assert_eq!(big.verdict, Verdict::Verified);
        let expected = class_of_twist(4, 4).scale(&binom(7, 4).unwrap());
        assert_eq!(big.step("left:").unwrap().values["class"], Value::from(&expected));
    }

    #[test]
    fn non_isomorphism_examples() {
        let r = prove_non_isomorphic(3, 1);
        assert_eq!(r.verdict, Verdict::Verified);
        let h0 = r.step("H^0(O(-1)) = 0").unwrap();
        assert_eq!(h0.values["h0(O(-1))"], Value::from("0"));
        assert_eq!(prove_non_isomorphic(2, 0).verdict, Verdict::Refuted);
        assert_eq!(prove_non_isomorphic(1, 5).verdict, Verdict::Verified);
        assert_eq!(prove_non_isomorphic(2, -1).verdict, Verdict::Inapplicable);
    }

    #[test]
    fn non_isomorphism_verdict_grid() {
        for n in 1..=8 {
            for l in -3..=10 {
                let v = prove_non_isomorphic(n, l).verdict;
                assert_eq!(v == Verdict::Verified, l >= 1, "N={n} l={l}");
            }
        }
    }

    #[test]
    fn connection_obstruction_examples() {
        for n in 1..4 {
            assert!(connection_obstruction(n, 3));
            assert!(!connection_obstruction(n, 0));
        }
        assert!(connection_obstruction(1, -2));
    }
}
