//! A small expression language for sheaf classes on `P^N`.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := 'O' '(' int ')' | 'O' | 'Omega' | 'dual' '(' expr ')'
//!         | 'Sym' nat '(' expr ')' | 'Wedge' nat '(' expr ')'
//!         | 'J' nat '(' 'O' '(' int ')' ',' ('left' | 'right') ')'
//!         | '(' expr ')'
//! ```
//!
//! A bare `O` is the structure sheaf. Whitespace is insignificant.

mod eval;
mod parser;

pub use eval::{evaluate, evaluate_value, EvalError, SheafValue};
pub use parser::{parse, ParseError};

use std::fmt;

use crate::jetcalc::Side;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Twist(i64),
    Omega,
    Structure,
    Sum(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Dual(Box<Expr>),
    Sym(usize, Box<Expr>),
    Wedge(usize, Box<Expr>),
    /// `J^order(O(twist))` with a module structure; the argument is always a line bundle.
    Jet { order: usize, twist: i64, side: Side },
}

impl Expr {
    pub fn sum(a: Expr, b: Expr) -> Self {
        Expr::Sum(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: Expr, b: Expr) -> Self {
        Expr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn dual(a: Expr) -> Self {
        Expr::Dual(Box::new(a))
    }

    pub fn sym(k: usize, a: Expr) -> Self {
        Expr::Sym(k, Box::new(a))
    }

    pub fn wedge(k: usize, a: Expr) -> Self {
        Expr::Wedge(k, Box::new(a))
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(..) => 1,
            Expr::Tensor(..) => 2,
            _ => 3,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let paren = self.precedence() < min_prec;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Expr::Twist(d) => write!(f, "O({d})")?,
            Expr::Omega => f.write_str("Omega")?,
            Expr::Structure => f.write_str("O")?,
            // both operators associate to the left
            Expr::Sum(a, b) => {
                a.write_at(f, 1)?;
                f.write_str(" + ")?;
                b.write_at(f, 2)?;
            }
            Expr::Tensor(a, b) => {
                a.write_at(f, 2)?;
                f.write_str(" * ")?;
                b.write_at(f, 3)?;
            }
            Expr::Dual(a) => write!(f, "dual({a})")?,
            Expr::Sym(k, a) => write!(f, "Sym{k}({a})")?,
            Expr::Wedge(k, a) => write!(f, "Wedge{k}({a})")?,
            Expr::Jet { order, twist, side } => write!(f, "J{order}(O({twist}), {side})")?,
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// Canonical text; `parse(&print_expr(e)) == Ok(e)`.
pub fn print_expr(e: &Expr) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing_examples() {
        let j = Expr::Jet { order: 1, twist: 3, side: Side::Left };
        assert_eq!(print_expr(&j), "J1(O(3), left)");
        assert_eq!(print_expr(&Expr::sum(Expr::Twist(0), Expr::Twist(2))), "O(0) + O(2)");
        let nested = Expr::tensor(
            Expr::Omega,
            Expr::sum(Expr::Twist(-1), Expr::Structure),
        );
        assert_eq!(print_expr(&nested), "Omega * (O(-1) + O)");
        let right_assoc = Expr::sum(Expr::Twist(1), Expr::sum(Expr::Twist(2), Expr::Twist(3)));
        assert_eq!(print_expr(&right_assoc), "O(1) + (O(2) + O(3))");
        assert_eq!(print_expr(&Expr::sym(2, Expr::dual(Expr::Omega))), "Sym2(dual(Omega))");
    }
}
