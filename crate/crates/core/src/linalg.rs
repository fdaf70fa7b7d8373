//! Dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{internal, Result};

pub type Q = BigRational;

pub fn q(x: i64) -> Q {
    BigRational::from_integer(BigInt::from(x))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let top = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&top).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    rref(&mut rows.to_vec()).len()
}

/// Basis of `{x : m x = 0}` for an `r x cols` matrix.
pub fn nullspace(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Q::zero(); cols];
            x[f] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -a[row][f].clone();
            }
            x
        })
        .collect()
}

pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Q::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let (top, rest) = a.split_at_mut(i);
            for (x, y) in rest[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * y;
            }
        }
    }
    d
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Q::zero(), |acc, k| if row[k].is_zero() { acc } else { acc + &row[k] * &b[k][j] })
                })
                .collect()
        })
        .collect()
}

/// Inverse of an upper unitriangular integer matrix.
#[allow(clippy::needless_range_loop)]
pub fn inverse_unitriangular(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = m.len();
    for i in 0..n {
        if m[i].len() != n || m[i][i] != 1 || (0..i).any(|j| m[i][j] != 0) {
            return Err(internal("matrix is not upper unitriangular"));
        }
    }
    let mut inv = vec![vec![0i64; n]; n];
    for j in 0..n {
        inv[j][j] = 1;
        for i in (0..j).rev() {
            inv[i][j] = -(i + 1..=j).map(|k| m[i][k] * inv[k][j]).sum::<i64>();
        }
    }
    Ok(inv)
}

pub fn int_mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn determinant_and_rank() {
        let m = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(det(&m), q(18));
        assert_eq!(rank(&m), 3);
        let s = qm(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(det(&s), q(0));
        assert_eq!(rank(&s), 2);
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let m = qm(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            let col: Vec<Vec<Q>> = x.iter().map(|v| vec![v.clone()]).collect();
            assert!(mat_mul(&m, &col).iter().all(|r| r[0].is_zero()));
        }
    }

    #[test]
    fn unitriangular_inverse() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]];
        let inv = inverse_unitriangular(&m).unwrap();
        assert_eq!(int_mat_mul(&m, &inv), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(inverse_unitriangular(&[vec![1, 0], vec![1, 1]]).is_err());
    }
}
