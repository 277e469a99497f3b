//! Classes of line bundles, split bundles and symmetric powers of Ω¹ in K(Pᴺ).
//!
//!     cargo run --example kring_classes -- 3

use principal_parts::kring::{
    class_of_twist, cohomology_dim, deg_rk, sum_to_class, sym_omega, sym_power, LineBundleSum,
};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    println!("K(P^{n}) = Z[t]/t^{}, t = 1 - [O(-1)]\n", n + 1);

    for d in -3..=3 {
        println!("[O({d:>2})] = {}", class_of_twist(n, d));
    }

    println!();
    for k in 0..=3 {
        println!("[Sym^{k} Omega^1] = {}", sym_omega(n, k));
    }

    let v = LineBundleSum::twist(n, -1, n as i64 + 1);
    let sym2 = sym_power(&v, 2).expect("effective");
    println!("\nSym^2(O(-1)^{}) = {sym2}, class {}", n + 1, sum_to_class(&sym2));

    println!("\nh^i(P^{n}, O(d)):");
    for d in [-(n as i64) - 2, -1, 0, 2] {
        let dims: Vec<String> = (0..=n).map(|i| cohomology_dim(n, d, i).to_string()).collect();
        println!("  d = {d:>2}: [{}]", dims.join(", "));
    }

    let e = LineBundleSum::from_twists(1, &[3, -1, 0]);
    let (deg, rk) = deg_rk(&e).expect("P^1");
    println!("\non P^1, {e} has degree {deg} and rank {rk}: class {}", sum_to_class(&e));
}
