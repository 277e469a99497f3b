use thiserror::Error;

use super::Expr;
use crate::jetcalc::{jet_class, JetSpec};
use crate::kring::{sum_to_class, sym_omega, sym_power, wedge_power, KClass, KError, LineBundleSum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("`{subexpr}` is a virtual sum: {source}")]
    NotEffective {
        subexpr: String,
        #[source]
        source: KError,
    },
    #[error("dual is only supported on sums of twists, not on `{subexpr}`")]
    UnsupportedDual { subexpr: String },
    #[error("Sym is only supported on sums of twists or on Omega, not on `{subexpr}`")]
    UnsupportedSym { subexpr: String },
    #[error("Wedge is only supported on sums of twists, not on `{subexpr}`")]
    UnsupportedWedge { subexpr: String },
}

/// Result of evaluating an expression: a split bundle when every step stayed in the split
/// fragment, otherwise only its K-class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SheafValue {
    Split(LineBundleSum),
    Class(KClass),
}

impl SheafValue {
    pub fn class(&self) -> KClass {
        match self {
            SheafValue::Split(s) => sum_to_class(s),
            SheafValue::Class(c) => c.clone(),
        }
    }
}

fn effective_power(
    arg: &Expr,
    k: usize,
    n: usize,
    power: fn(&LineBundleSum, usize) -> Result<LineBundleSum, KError>,
    unsupported: fn(String) -> EvalError,
) -> Result<SheafValue, EvalError> {
    match evaluate_value(arg, n)? {
        SheafValue::Split(s) => power(&s, k)
            .map(SheafValue::Split)
            .map_err(|source| EvalError::NotEffective { subexpr: arg.to_string(), source }),
        SheafValue::Class(_) => Err(unsupported(arg.to_string())),
    }
}

/// Evaluates on `P^N`, keeping split bundles split as long as possible.
pub fn evaluate_value(e: &Expr, n: usize) -> Result<SheafValue, EvalError> {
    use SheafValue::{Class, Split};
    if n == 0 {
        return Err(EvalError::ZeroDimension);
    }
    Ok(match e {
        Expr::Twist(d) => Split(LineBundleSum::twist(n, *d, 1)),
        Expr::Structure => Split(LineBundleSum::twist(n, 0, 1)),
        // Ω^1 = O(-2) on the line
        Expr::Omega if n == 1 => Split(LineBundleSum::twist(1, -2, 1)),
        Expr::Omega => Class(sym_omega(n, 1)),
        Expr::Sum(a, b) => match (evaluate_value(a, n)?, evaluate_value(b, n)?) {
            (Split(x), Split(y)) => Split(x.direct_sum(&y)),
            (x, y) => Class(&x.class() + &y.class()),
        },
        Expr::Tensor(a, b) => match (evaluate_value(a, n)?, evaluate_value(b, n)?) {
            (Split(x), Split(y)) => Split(x.tensor(&y)),
            (x, y) => Class(&x.class() * &y.class()),
        },
        Expr::Dual(a) => match evaluate_value(a, n)? {
            Split(x) => Split(x.dual()),
            Class(_) => return Err(EvalError::UnsupportedDual { subexpr: a.to_string() }),
        },
        Expr::Sym(k, a) if **a == Expr::Omega && n >= 2 => Class(sym_omega(n, *k)),
        Expr::Sym(k, a) => {
            effective_power(a, *k, n, sym_power, |subexpr| EvalError::UnsupportedSym { subexpr })?
        }
        Expr::Wedge(k, a) => {
            effective_power(a, *k, n, wedge_power, |subexpr| EvalError::UnsupportedWedge { subexpr })?
        }
        Expr::Jet { order, twist, side } => {
            let spec = JetSpec::new(n, *order, *twist, *side).expect("parser guarantees order >= 1");
            Class(jet_class(&spec))
        }
    })
}

/// K-class of the expression in `Z[t]/t^(N+1)`.
pub fn evaluate(e: &Expr, n: usize) -> Result<KClass, EvalError> {
    Ok(evaluate_value(e, n)?.class())
}
