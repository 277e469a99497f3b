//! On ℙ¹ the Atiyah class of O(l) is the residue of dlog(uˡ); it vanishes exactly when the
//! left and right jet structures split the same way.

use principal_parts::p1lab::{atiyah_class_p1, verify_corr_p1};

fn main() {
    for l in -4..=4 {
        let r = verify_corr_p1(l);
        println!("l = {l:>2}: a(O(l)) = {:>2}, {}", atiyah_class_p1(l), r.verdict);
    }
    print!("\n{}", verify_corr_p1(1));
}
