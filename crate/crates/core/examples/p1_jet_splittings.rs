//! Transition matrices of first-order jets on ℙ¹ and their Birkhoff splittings, checked
//! against the independent section-counting oracle.

use principal_parts::jetcalc::Side;
use principal_parts::p1lab::{birkhoff_factor, h0_count, jet_transition, splitting_via_h0};

fn main() {
    let m = jet_transition(3, Side::Left);
    let f = birkhoff_factor(&m).unwrap();
    println!("left transition of J(O(3)):\n{m}");
    println!("= A · diag(u^{:?}) · B with\nA =\n{}B =\n{}", f.degrees, f.left, f.right);

    println!("{:>3}  {:<10} {:<10} {:>4} {:>4}", "l", "left", "right", "h0_L", "h0_R");
    for l in -3..=6 {
        let left = jet_transition(l, Side::Left);
        let right = jet_transition(l, Side::Right);
        let sl = birkhoff_factor(&left).unwrap().splitting_type();
        let sr = birkhoff_factor(&right).unwrap().splitting_type();
        assert_eq!(splitting_via_h0(&left).unwrap(), sl);
        assert_eq!(splitting_via_h0(&right).unwrap(), sr);
        println!(
            "{l:>3}  {:<10} {:<10} {:>4} {:>4}",
            sl.to_string(),
            sr.to_string(),
            h0_count(&left).unwrap(),
            h0_count(&right).unwrap()
        );
    }
}
