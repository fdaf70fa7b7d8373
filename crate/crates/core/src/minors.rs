//! Exact minors of rational matrices and the component factorization of
//! minors on unitriangular matrices.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{det, q, Q};
use crate::perm::IndexSet;
use crate::shapes::{skew_shape, MinorIndex, SkewShape};

/// Random entries are drawn from this symmetric range.
pub const ENTRY_BOUND: i64 = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<Vec<Q>>,
}

impl ExactMatrix {
    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: r.len() });
        }
        Ok(ExactMatrix { n, entries: rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based.
    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.entries[r - 1][c - 1]
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.entries
    }

    pub fn is_unitriangular(&self) -> bool {
        (0..self.n)
            .all(|i| (0..=i).all(|j| if i == j { self.entries[i][j].is_one() } else { self.entries[i][j].is_zero() }))
    }

    fn random(n: usize, rng: &mut ChaCha8Rng, keep: impl Fn(usize, usize) -> Option<i64>) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n).map(|j| q(keep(i, j).unwrap_or_else(|| rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND)))).collect()
            })
            .collect();
        ExactMatrix { n, entries }
    }

    /// Upper unitriangular with off-diagonal entries in `-9..=9`.
    pub fn random_unitriangular(n: usize, rng: &mut ChaCha8Rng) -> Self {
        Self::random(n, rng, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Greater => Some(0),
            std::cmp::Ordering::Equal => Some(1),
            std::cmp::Ordering::Less => None,
        })
    }

    /// Upper triangular with nonzero diagonal.
    pub fn random_upper_triangular(n: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut m = Self::random(n, rng, |i, j| (i > j).then_some(0));
        for i in 0..n {
            if m.entries[i][i].is_zero() {
                m.entries[i][i] = Q::one();
            }
        }
        m
    }

    pub fn random_general(n: usize, rng: &mut ChaCha8Rng) -> Self {
        Self::random(n, rng, |_, _| None)
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Determinant of the submatrix on `index.rows x index.cols`; the empty minor is 1.
pub fn eval_minor(x: &ExactMatrix, index: &MinorIndex) -> Result<Q> {
    let (rows, cols) = (&index.rows, &index.cols);
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch { left: rows.len(), right: cols.len() });
    }
    if let Some(i) = rows.iter().chain(cols.iter()).find(|&i| i == 0 || i > x.n) {
        return Err(Error::IndexOutOfRange { index: i, n: x.n });
    }
    let sub: Vec<Vec<Q>> = rows.iter().map(|r| cols.iter().map(|c| x.get(r, c).clone()).collect()).collect();
    Ok(det(&sub))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub trial: usize,
    pub detail: String,
}

/// Checks `D[I,J] = D[key] = prod over components` on `trials` random
/// unitriangular matrices. Returns the first failing trial, if any.
pub fn verify_component_factorization(
    rows: &IndexSet,
    cols: &IndexSet,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<Option<IdentityFailure>> {
    let shape = skew_shape(rows, cols, n)?;
    let whole = MinorIndex::new(rows.clone(), cols.clone());
    let key = shape.canonical_key();
    let parts: Vec<MinorIndex> = shape.components().iter().map(SkewShape::canonical_key).collect();
    let mut rng = rng(seed);
    for trial in 0..trials {
        let x = ExactMatrix::random_unitriangular(n, &mut rng);
        let full = eval_minor(&x, &whole)?;
        let reduced = eval_minor(&x, &key)?;
        let mut product = Q::one();
        for p in &parts {
            product *= eval_minor(&x, p)?;
        }
        if full != reduced || full != product {
            return Ok(Some(IdentityFailure {
                trial,
                detail: format!("{whole}: full {full}, reduced {reduced}, product {product}"),
            }));
        }
    }
    Ok(None)
}

/// Index pairs whose shapes differ from that of `(rows, cols)` by sliding
/// components along the anti-diagonal: a common vertical step is inserted
/// where the two paths meet, or an existing one is removed.
pub fn translates(rows: &IndexSet, cols: &IndexSet, n: usize) -> Vec<MinorIndex> {
    let mut out = Vec::new();
    for k in 1..=n {
        let meet = rows.count_le(k - 1) == cols.count_le(k - 1);
        if !meet {
            continue;
        }
        if !rows.contains(k) && !cols.contains(k) {
            out.push(MinorIndex::new(rows.union(&IndexSet::new([k])), cols.union(&IndexSet::new([k]))));
        } else if rows.contains(k) && cols.contains(k) {
            let one = IndexSet::new([k]);
            out.push(MinorIndex::new(rows.difference(&one), cols.difference(&one)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.iter().copied())
    }

    #[test]
    fn example_factorization() {
        let (i, j) = (set(&[1, 3, 4]), set(&[2, 3, 7]));
        let mut r = rng(11);
        for _ in 0..20 {
            let x = ExactMatrix::random_unitriangular(7, &mut r);
            let lhs = eval_minor(&x, &MinorIndex::new(i.clone(), j.clone())).unwrap();
            assert_eq!(lhs, x.get(1, 2) * x.get(4, 7));
        }
        assert_eq!(verify_component_factorization(&i, &j, 7, 50, 3).unwrap(), None);
    }

    #[test]
    fn empty_minor_is_one() {
        let x = ExactMatrix::random_general(3, &mut rng(1));
        assert_eq!(eval_minor(&x, &MinorIndex::new(set(&[]), set(&[]))).unwrap(), Q::one());
    }

    #[test]
    fn minor_validation() {
        let x = ExactMatrix::random_general(3, &mut rng(1));
        assert!(matches!(eval_minor(&x, &MinorIndex::new(set(&[1]), set(&[1, 2]))), Err(Error::SizeMismatch { .. })));
        assert!(matches!(eval_minor(&x, &MinorIndex::new(set(&[4]), set(&[1]))), Err(Error::IndexOutOfRange { .. })));
        assert!(ExactMatrix::from_integers(&[vec![1, 2]]).is_err());
    }

    #[test]
    fn random_matrices_have_requested_form() {
        let mut r = rng(5);
        assert!(ExactMatrix::random_unitriangular(5, &mut r).is_unitriangular());
        let b = ExactMatrix::random_upper_triangular(5, &mut r);
        assert!((1..=5).all(|i| !b.get(i, i).is_zero() && (1..i).all(|j| b.get(i, j).is_zero())));
    }

    #[test]
    fn determinant_by_cofactor_expansion() {
        fn cofactor(m: &[Vec<Q>]) -> Q {
            if m.is_empty() {
                return Q::one();
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<Q>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                        .collect();
                    let t = &m[0][j] * cofactor(&minor);
                    if j % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .fold(Q::zero(), |a, b| a + b)
        }
        let mut r = rng(9);
        for n in 0..6 {
            let x = ExactMatrix::random_general(n, &mut r);
            assert_eq!(det(x.rows()), cofactor(x.rows()));
        }
    }

    #[test]
    fn translates_share_keys() {
        let (i, j) = (set(&[2, 4]), set(&[3, 6]));
        let key = skew_shape(&i, &j, 6).unwrap().canonical_key();
        let ts = translates(&i, &j, 6);
        assert!(!ts.is_empty());
        for t in ts {
            assert_eq!(skew_shape(&t.rows, &t.cols, 6).unwrap().canonical_key(), key);
        }
    }
}
