//! Certificate that J(O(l))^left and J(O(l))^right differ on Pᴺ.
//!
//!     cargo run --example mainsplit_certificate -- 3 2

use principal_parts::jetcalc::{connection_obstruction, prove_non_isomorphic};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<i64>());
    let n = args.next().and_then(Result::ok).unwrap_or(3) as usize;
    let l = args.next().and_then(Result::ok).unwrap_or(2);

    print!("{}", prove_non_isomorphic(n, l));
    println!("O({l}) on P^{n} admits a connection: {}", !connection_obstruction(n, l));
    print!("\n{}", prove_non_isomorphic(n, 0));
}
