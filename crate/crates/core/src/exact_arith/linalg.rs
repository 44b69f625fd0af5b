//! Dense matrices over a cyclotomic field.

use super::cyclotomic::CyclotomicScalar;

pub type Matrix = Vec<Vec<CyclotomicScalar>>;

pub fn identity(n: usize, order: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| CyclotomicScalar::from_int(order, i64::from(i == j))).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let order = a.first().and_then(|r| r.first()).map_or(1, CyclotomicScalar::order);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..k).fold(CyclotomicScalar::zero(order), |acc, t| if a[i][t].is_zero() { acc } else { &acc + &(&a[i][t] * &b[t][j]) })
                })
                .collect()
        })
        .collect()
}

pub fn scale(a: &Matrix, s: &CyclotomicScalar) -> Matrix {
    a.iter().map(|row| row.iter().map(|x| x * s).collect()).collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Reduces to row echelon form in place and returns the pivot count and
/// the sign of the row permutation.
fn eliminate(m: &mut Matrix) -> (usize, bool) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut odd = false;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        if p != rank {
            m.swap(p, rank);
            odd = !odd;
        }
        let inv = m[rank][col].inv().expect("pivot is nonzero");
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..cols {
                if !m[rank][c].is_zero() {
                    let delta = &f * &m[rank][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    (rank, odd)
}

pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    eliminate(&mut m).0
}

pub fn determinant(a: &Matrix) -> CyclotomicScalar {
    let n = a.len();
    let order = a.first().and_then(|r| r.first()).map_or(1, CyclotomicScalar::order);
    let mut m = a.clone();
    let (rank, odd) = eliminate(&mut m);
    if rank < n {
        return CyclotomicScalar::zero(order);
    }
    let det = (0..n).fold(CyclotomicScalar::one(order), |acc, i| &acc * &m[i][i]);
    if odd { -det } else { det }
}
