//! Factor a transition matrix given in the grid format (rows on lines, entries separated
//! by `;`), either from a file or a built-in example.
//!
//!     cargo run --example birkhoff_matrix -- path/to/matrix.txt

use principal_parts::p1lab::{birkhoff_factor, h0_count, LaurentMatrix};

// A · diag(u^3, u^-1) · B with A = [[1, u], [0, 1]] and B = [[1, 0], [u^-2, 1]]
const DEFAULT: &str = "u^3 + u^-2; 1\nu^-3; u^-1\n";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}")),
        None => DEFAULT.to_owned(),
    };
    let m: LaurentMatrix = match text.parse() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    match birkhoff_factor(&m) {
        Ok(f) => {
            println!("matrix:\n{m}");
            println!("splitting type {} (h0 = {})", f.splitting_type(), h0_count(&m).unwrap());
            println!("A =\n{}B =\n{}", f.left, f.right);
            assert_eq!(f.product(), m);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    }
}
