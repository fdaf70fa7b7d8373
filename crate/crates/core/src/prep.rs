//! Modules over the preprojective algebra of type `A_{n-1}` attached to skew
//! shapes, their Hom spaces, and the Gabriel quiver of a direct sum.
//!
//! A box of content `k` is a basis vector at vertex `k`. The arrow `k -> k+1`
//! moves a box one row down and the arrow `k+1 -> k` moves it one column
//! right; either gives zero when the target box is missing.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{internal, Error, Result};
use crate::linalg::{mat_mul, nullspace, q, rank, Q};
use crate::minors::rng;
use crate::shapes::{MinorIndex, SkewShape};

type Block = Vec<Vec<Q>>;

fn zeros(r: usize, c: usize) -> Block {
    vec![vec![Q::zero(); c]; r]
}

#[derive(Debug, Clone)]
pub struct PrepModule {
    shape: SkewShape,
    /// Boxes of content `k` at index `k - 1`, ordered by row.
    basis: Vec<Vec<(usize, usize)>>,
    /// `down[k-1]`: vertex `k` to `k+1`.
    down: Vec<Block>,
    /// `right[k-1]`: vertex `k+1` to `k`.
    right: Vec<Block>,
}

pub fn module_from_shape(shape: &SkewShape) -> Result<PrepModule> {
    let n = shape.n();
    let vertices = n.saturating_sub(1);
    let mut basis = vec![Vec::new(); vertices];
    for &(r, c) in shape.boxes() {
        let k = shape.content(r, c);
        if k == 0 || k > vertices {
            return Err(Error::ContentOutOfRange { content: k as i64, n });
        }
        basis[k - 1].push((r, c));
    }
    let pos = |k: usize, b: (usize, usize)| basis[k - 1].iter().position(|&x| x == b);
    let mut down = Vec::new();
    let mut right = Vec::new();
    for k in 1..vertices {
        let mut d = zeros(basis[k].len(), basis[k - 1].len());
        for (col, &(r, c)) in basis[k - 1].iter().enumerate() {
            if let Some(row) = pos(k + 1, (r + 1, c)) {
                d[row][col] = Q::one();
            }
        }
        let mut s = zeros(basis[k - 1].len(), basis[k].len());
        for (col, &(r, c)) in basis[k].iter().enumerate() {
            if let Some(row) = pos(k, (r, c + 1)) {
                s[row][col] = Q::one();
            }
        }
        down.push(d);
        right.push(s);
    }
    Ok(PrepModule { shape: shape.clone(), basis, down, right })
}

impl PrepModule {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn key(&self) -> MinorIndex {
        self.shape.canonical_key()
    }

    pub fn vertices(&self) -> usize {
        self.basis.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn dim(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    /// Contents of boxes with no box above and none to the left.
    pub fn top(&self) -> BTreeSet<usize> {
        let s = &self.shape;
        s.boxes()
            .iter()
            .filter(|&&(r, c)| !s.contains(r.wrapping_sub(1), c) && !s.contains(r, c.wrapping_sub(1)))
            .map(|&(r, c)| s.content(r, c))
            .collect()
    }

    /// Contents of boxes with no box below and none to the right.
    pub fn socle(&self) -> BTreeSet<usize> {
        let s = &self.shape;
        s.boxes()
            .iter()
            .filter(|&&(r, c)| !s.contains(r + 1, c) && !s.contains(r, c + 1))
            .map(|&(r, c)| s.content(r, c))
            .collect()
    }

    /// The preprojective relation holds at every vertex.
    pub fn relations_hold(&self) -> bool {
        let v = self.vertices();
        (1..=v).all(|k| {
            let d = self.basis[k - 1].len();
            let mut total = zeros(d, d);
            if k >= 2 {
                // k -> k-1 -> k
                add_into(&mut total, &mat_mul(&self.down[k - 2], &self.right[k - 2]), true);
            }
            if k < v {
                // k -> k+1 -> k
                add_into(&mut total, &mat_mul(&self.right[k - 1], &self.down[k - 1]), false);
            }
            total.iter().flatten().all(Zero::is_zero)
        })
    }
}

fn add_into(acc: &mut Block, m: &Block, plus: bool) {
    for (ra, rm) in acc.iter_mut().zip(m) {
        for (a, x) in ra.iter_mut().zip(rm) {
            if plus {
                *a += x;
            } else {
                *a -= x;
            }
        }
    }
}

/// Family of linear maps, one per vertex; block `k - 1` is `M_k -> N_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    blocks: Vec<Block>,
    /// Source dimension per vertex; blocks with no rows do not record it.
    source: Vec<usize>,
}

impl Morphism {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        let blocks = self
            .blocks
            .iter()
            .zip(&first.blocks)
            .zip(&first.source)
            .map(|((g, f), &cols)| if f.is_empty() { zeros(g.len(), cols) } else { mat_mul(g, f) })
            .collect();
        Morphism { blocks, source: first.source.clone() }
    }

    pub fn to_vector(&self) -> Vec<Q> {
        self.blocks.iter().flatten().flatten().cloned().collect()
    }

    pub fn trace(&self) -> Q {
        self.blocks.iter().flat_map(|b| b.iter().enumerate().map(|(i, r)| r[i].clone())).fold(Q::zero(), |a, b| a + b)
    }

    pub fn rank_per_vertex(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| rank(b)).collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.blocks.iter().all(|b| {
            let mut p = b.clone();
            for _ in 1..b.len() {
                p = mat_mul(&p, b);
            }
            p.iter().flatten().all(Zero::is_zero)
        })
    }

    fn minus_scalar(&self, s: &Q) -> Morphism {
        let mut m = self.clone();
        for b in &mut m.blocks {
            for (i, r) in b.iter_mut().enumerate() {
                r[i] -= s;
            }
        }
        m
    }

    fn combination(basis: &[Morphism], coeffs: &[Q]) -> Option<Morphism> {
        let first = basis.first()?;
        let mut out = first.clone();
        for b in &mut out.blocks {
            for x in b.iter_mut().flatten() {
                *x = Q::zero();
            }
        }
        for (m, c) in basis.iter().zip(coeffs) {
            for (ob, mb) in out.blocks.iter_mut().zip(&m.blocks) {
                for (o, x) in ob.iter_mut().flatten().zip(mb.iter().flatten()) {
                    *o += c * x;
                }
            }
        }
        Some(out)
    }
}

/// Basis of `Hom(m, n)`: solutions of the commutation equations with every arrow.
pub fn hom_space(m: &PrepModule, n: &PrepModule) -> Result<Vec<Morphism>> {
    if m.vertices() != n.vertices() {
        return Err(Error::DimensionMismatch { expected: m.vertices(), found: n.vertices() });
    }
    let (dm, dn) = (m.dims(), n.dims());
    let mut offset = vec![0; dm.len() + 1];
    for k in 0..dm.len() {
        offset[k + 1] = offset[k] + dm[k] * dn[k];
    }
    let unknowns = offset[dm.len()];
    let var = |k: usize, a: usize, b: usize| offset[k] + a * dm[k] + b;
    let mut eqs: Vec<Vec<Q>> = Vec::new();
    for j in 0..dm.len().saturating_sub(1) {
        // f_{j+1} down^M = down^N f_j
        for a in 0..dn[j + 1] {
            for b in 0..dm[j] {
                let mut row = vec![Q::zero(); unknowns];
                for t in 0..dm[j + 1] {
                    row[var(j + 1, a, t)] += &m.down[j][t][b];
                }
                for t in 0..dn[j] {
                    row[var(j, t, b)] -= &n.down[j][a][t];
                }
                eqs.push(row);
            }
        }
        // f_j right^M = right^N f_{j+1}
        for a in 0..dn[j] {
            for b in 0..dm[j + 1] {
                let mut row = vec![Q::zero(); unknowns];
                for t in 0..dm[j] {
                    row[var(j, a, t)] += &m.right[j][t][b];
                }
                for t in 0..dn[j + 1] {
                    row[var(j + 1, t, b)] -= &n.right[j][a][t];
                }
                eqs.push(row);
            }
        }
    }
    let solutions = if eqs.is_empty() {
        (0..unknowns).map(|i| (0..unknowns).map(|j| q((i == j) as i64)).collect()).collect()
    } else {
        nullspace(&eqs, unknowns)
    };
    Ok(solutions
        .into_iter()
        .map(|x| Morphism {
            blocks: (0..dm.len())
                .map(|k| (0..dn[k]).map(|a| (0..dm[k]).map(|b| x[var(k, a, b)].clone()).collect()).collect())
                .collect(),
            source: dm.clone(),
        })
        .collect())
}

/// Radical of `End(m)`, the kernel of the normalised trace. Fails unless
/// every endomorphism is a scalar plus a nilpotent.
pub fn end_radical(m: &PrepModule) -> Result<Vec<Morphism>> {
    let end = hom_space(m, m)?;
    let dim = q(m.dim() as i64);
    for f in &end {
        if !f.minus_scalar(&(f.trace() / &dim)).is_nilpotent() {
            return Err(internal(format!("endomorphism ring of {} is not local", m.key())));
        }
    }
    let traces: Vec<Q> = end.iter().map(Morphism::trace).collect();
    let Some(p) = traces.iter().position(|t| !t.is_zero()) else { return Ok(end) };
    Ok(end
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != p)
        .map(|(i, f)| {
            let c = &traces[i] / &traces[p];
            let mut g = f.clone();
            for (gb, pb) in g.blocks.iter_mut().zip(&end[p].blocks) {
                for (x, y) in gb.iter_mut().flatten().zip(pb.iter().flatten()) {
                    *x -= &c * y;
                }
            }
            g
        })
        .collect())
}

/// Ranks per vertex of a generic element of a Hom space.
pub fn generic_rank(basis: &[Morphism], seed: u64) -> Vec<usize> {
    let mut r = rng(seed);
    let mut best: Option<Vec<usize>> = None;
    for _ in 0..3 {
        let coeffs: Vec<Q> = basis.iter().map(|_| q(r.random_range(-50..=50))).collect();
        if let Some(f) = Morphism::combination(basis, &coeffs) {
            let ranks = f.rank_per_vertex();
            if best.as_ref().is_none_or(|b| ranks.iter().sum::<usize>() > b.iter().sum::<usize>()) {
                best = Some(ranks);
            }
        }
    }
    best.unwrap_or_default()
}

/// Arrow counts `i -> j` of the Gabriel quiver of `End(M_1 + .. + M_s)`:
/// `dim rad(M_i, M_j) - dim rad^2(M_i, M_j)`.
#[allow(clippy::needless_range_loop)]
pub fn gabriel_quiver(summands: &[PrepModule]) -> Result<BTreeMap<(usize, usize), usize>> {
    let s = summands.len();
    let keys: BTreeSet<MinorIndex> = summands.iter().map(PrepModule::key).collect();
    if keys.len() != s {
        return Err(internal("summands are not pairwise non-isomorphic"));
    }
    let mut rad: Vec<Vec<Vec<Morphism>>> = Vec::with_capacity(s);
    for i in 0..s {
        let mut row = Vec::with_capacity(s);
        for j in 0..s {
            row.push(if i == j { end_radical(&summands[i])? } else { hom_space(&summands[i], &summands[j])? });
        }
        rad.push(row);
    }
    let mut arrows = BTreeMap::new();
    for i in 0..s {
        for j in 0..s {
            if rad[i][j].is_empty() {
                continue;
            }
            let mut products = Vec::new();
            for k in 0..s {
                for f in &rad[i][k] {
                    for g in &rad[k][j] {
                        products.push(g.after(f).to_vector());
                    }
                }
            }
            let r2 = if products.is_empty() { 0 } else { rank(&products) };
            let count = rad[i][j].len() - r2;
            if count > 0 {
                arrows.insert((i, j), count);
            }
        }
    }
    Ok(arrows)
}
