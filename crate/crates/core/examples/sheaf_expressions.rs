//! Parse and evaluate sheaf expressions.
//!
//!     cargo run --example sheaf_expressions -- 2 "Sym2(Omega) * O(3) + J1(O(1), left)"

use principal_parts::sheafdsl::{evaluate, parse};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let inputs: Vec<String> = match args.next() {
        Some(e) => vec![e],
        None => [
            "O(0)",
            "dual(O(2) + O(-1)) * O(1)",
            "Sym2(Omega) * O(3)",
            "J2(O(3), left)",
            "J2(O(3), right)",
            "Wedge2(O(1) + O + O(-1))",
            "O(2) + + O(1)",
            "dual(Omega)",
        ]
        .map(String::from)
        .to_vec(),
    };
    for text in inputs {
        match parse(&text) {
            Err(e) => println!("{text:<32} parse error: {e}"),
            Ok(expr) => match evaluate(&expr, n) {
                Ok(class) => println!("{:<32} = {class}", expr.to_string()),
                Err(e) => println!("{:<32} error: {e}", expr.to_string()),
            },
        }
    }
}
