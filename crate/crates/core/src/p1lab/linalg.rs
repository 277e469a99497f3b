// Dense Gaussian elimination over Q.

use num_rational::BigRational;
use num_traits::Zero;

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    rref(&mut rows).len()
}

/// A nonzero vector `x` with `a x = 0`, if one exists: the first free column set to 1.
pub(crate) fn kernel_vector(a: &[Vec<BigRational>], ncols: usize) -> Option<Vec<BigRational>> {
    let mut rows = a.to_vec();
    let pivots = rref(&mut rows);
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut x = vec![BigRational::zero(); ncols];
    x[free] = BigRational::from_integer(1.into());
    for (row, &pc) in rows.iter().zip(&pivots) {
        x[pc] = -row[free].clone();
    }
    Some(x)
}
