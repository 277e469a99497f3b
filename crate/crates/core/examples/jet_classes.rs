//! K-classes of J^k(O(l)) on Pᴺ: the telescoped class equals C(N+k, N)·[O(l-k)].

use principal_parts::jetcalc::{jet_class, verify_ktheory_equality, JetSpec, Side};

fn main() {
    let n = 2;
    println!("{:>3} {:>3}  {:<28} verdict", "k", "l", "[J^k(O(l))]");
    for k in 1..=3 {
        for l in [-2, 0, 3] {
            let class = jet_class(&JetSpec::new(n, k, l, Side::Left).unwrap());
            let report = verify_ktheory_equality(n, k, l).unwrap();
            println!("{k:>3} {l:>3}  {:<28} {}", class.to_string(), report.verdict);
        }
    }
    println!("\n{}", verify_ktheory_equality(1, 1, 2).unwrap());
}
