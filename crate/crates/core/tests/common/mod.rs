#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use principal_parts::exact_arith::LaurentPoly;
use principal_parts::p1lab::LaurentMatrix;
use rand::rngs::StdRng;
use rand::Rng;

fn nonzero_rational(rng: &mut StdRng) -> BigRational {
    let mut n = rng.gen_range(-4i64..=4);
    if n == 0 {
        n = 1;
    }
    BigRational::new(BigInt::from(n), BigInt::from(rng.gen_range(1i64..=3)))
}

/// Random element of GL_r over `Q[u]` (`inverse_variable = false`) or `Q[u^-1]`:
/// a product of at most five elementary, scaling, or swap factors with entry degree <= 3.
pub fn random_unimodular(rng: &mut StdRng, r: usize, inverse_variable: bool) -> LaurentMatrix {
    let mut acc = LaurentMatrix::identity(r);
    let factors = rng.gen_range(1..=5);
    for _ in 0..factors {
        let mut f = LaurentMatrix::identity(r);
        match rng.gen_range(0..4) {
            0 | 1 if r > 1 => {
                let i = rng.gen_range(0..r);
                let mut j = rng.gen_range(0..r - 1);
                if j >= i {
                    j += 1;
                }
                let terms = rng.gen_range(1..=2);
                let mut entry = LaurentPoly::zero();
                for _ in 0..terms {
                    let e = rng.gen_range(0i64..=3);
                    let e = if inverse_variable { -e } else { e };
                    entry = &entry + &LaurentPoly::monomial(nonzero_rational(rng), e);
                }
                f.set(i, j, entry);
            }
            2 if r > 1 => {
                let i = rng.gen_range(0..r);
                let j = (i + 1) % r;
                f.set(i, i, LaurentPoly::zero());
                f.set(j, j, LaurentPoly::zero());
                f.set(i, j, LaurentPoly::one());
                f.set(j, i, LaurentPoly::one());
            }
            _ => {
                let i = rng.gen_range(0..r);
                f.set(i, i, LaurentPoly::constant(nonzero_rational(rng)));
            }
        }
        acc = acc.mul(&f);
    }
    acc
}

pub fn random_degrees(rng: &mut StdRng, r: usize) -> Vec<i64> {
    (0..r).map(|_| rng.gen_range(-4i64..=5)).collect()
}

/// `A · diag(u^degrees) · B` with random unimodular `A` over `Q[u]` and `B` over `Q[u^-1]`.
pub fn disguised(rng: &mut StdRng, degrees: &[i64]) -> LaurentMatrix {
    let r = degrees.len();
    let a = random_unimodular(rng, r, false);
    let b = random_unimodular(rng, r, true);
    a.mul(&LaurentMatrix::diagonal_monomials(degrees)).mul(&b)
}

pub fn sorted_desc(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}
