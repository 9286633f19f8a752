//! Small exact linear algebra over `Q` used for span and independence tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Row-reduces in place and returns the pivot columns.
fn row_reduce(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_bigint(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    row_reduce(&mut m).len()
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    rank_bigint(&rows)
}

/// Whether `target` is an integer combination of the linearly independent
/// vectors `gens`.
pub fn in_integer_span(gens: &[Vec<i64>], target: &[i64]) -> bool {
    if gens.is_empty() {
        return target.iter().all(|&x| x == 0);
    }
    let k = gens.len();
    // Columns are the generators; last column is the target.
    let mut m: Vec<Vec<BigRational>> = (0..target.len())
        .map(|i| {
            gens.iter()
                .map(|g| BigRational::from_integer(g[i].into()))
                .chain(std::iter::once(BigRational::from_integer(target[i].into())))
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots.contains(&k) {
        return false;
    }
    // Independent generators: every one of the first k columns is a pivot and
    // the reduced last column holds the unique coefficients.
    (0..pivots.len()).all(|r| m[r][k].denom().is_one())
}
