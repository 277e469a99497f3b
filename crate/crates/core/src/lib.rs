//! Exact computations with jet bundles (sheaves of principal parts) of line bundles.
//!
//! * [`kring`]: the Grothendieck ring `K(P^N) = Z[t]/t^(N+1)` with `t = 1 - [O(-1)]`,
//!   split bundles, λ-operations and `[Sym^k Ω^1]`.
//! * [`jetcalc`]: classes of `J^k(O(l))`, the equality of left and right classes, and a
//!   certificate that the two first-order module structures are not isomorphic.
//! * [`p1lab`]: explicit transition matrices on `P^1`, Birkhoff factorization, a
//!   section-counting oracle and Čech Atiyah classes.
//! * [`sheafdsl`]: a small expression language (`Sym2(Omega) * O(3)`, `J1(O(2), left)`).
//! * [`cli`]: the `pparts` command line.
//!
//! ```
//! use principal_parts::jetcalc::{prove_non_isomorphic, Verdict};
//! use principal_parts::kring::class_of_twist;
//!
//! assert_eq!(class_of_twist(1, 5).to_string(), "1 + 5t");
//! assert_eq!(prove_non_isomorphic(3, 2).verdict, Verdict::Verified);
//! ```

pub mod cli;
pub mod exact_arith;
pub mod jetcalc;
pub mod kring;
pub mod p1lab;
pub mod report;
pub mod sheafdsl;
