//! Exact rank of rational column configurations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Clears denominators column by column, giving an integer matrix with the
/// same column spans.
fn integer_column(col: &[BigRational]) -> Vec<BigInt> {
    let lcm = col
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    col.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Rank of the matrix whose columns are `cols` (each of length `rows`).
pub fn column_rank(rows: usize, cols: &[&[BigRational]]) -> usize {
    if cols.is_empty() || rows == 0 {
        return 0;
    }
    // work row-major on the transpose: rows of `m` are the columns
    let mut m: Vec<Vec<BigInt>> = cols.iter().map(|c| integer_column(c)).collect();
    integer_row_rank(&mut m, rows)
}

/// Row rank of an integer matrix with `width` columns; destroys `m`.
pub fn integer_row_rank(m: &mut [Vec<BigInt>], width: usize) -> usize {
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (top, rest) = m.split_at_mut(rank + 1);
        let p = &top[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = p[col].gcd(&row[col]);
            let a = &p[col] / &g;
            let b = &row[col] / &g;
            for k in col..width {
                row[k] = &row[k] * &a - &p[k] * &b;
            }
            let content = row[col + 1..]
                .iter()
                .fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !content.is_zero() && !content.is_one() {
                for x in row[col + 1..].iter_mut() {
                    *x = &*x / &content;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square rational matrix given by columns.
pub fn determinant(cols: &[&[BigRational]]) -> BigRational {
    let n = cols.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &p;
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// `true` when every entry is zero.
pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_zero())
}
