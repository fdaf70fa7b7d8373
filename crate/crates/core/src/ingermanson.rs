//! Cluster seed built from pivot sets: variables are monomials in the left
//! chamber minors, and the quiver is pulled back from the wiring diagram
//! quiver through the appearance matrix.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{internal, Result};
use crate::linalg::{int_mat_mul, inverse_unitriangular};
use crate::perm::{IndexSet, Permutation};
use crate::seed::{ClusterVariable, Construction, LaurentMonomial, Quiver, Seed};
use crate::shapes::MinorIndex;
use crate::wiring::{ChamberRef, WiringDiagram};

/// Gale-minimum of `u(I)` over `I <= j`.
pub fn pivot(j: &IndexSet, u: &Permutation) -> Result<IndexSet> {
    let images: BTreeSet<IndexSet> = IndexSet::subsets(u.n(), j.len())
        .into_iter()
        .filter(|i| i.gale_leq(j).unwrap_or(false))
        .map(|i| u.image(&i))
        .collect();
    let mut minima = images.iter().filter(|a| images.iter().all(|b| a.gale_leq(b).unwrap_or(false)));
    match (minima.next(), minima.next()) {
        (Some(m), None) => Ok(m.clone()),
        _ => Err(internal(format!("no unique pivot for {j} under {u}"))),
    }
}

/// Heights of the w-strands below chamber `c` just before crossing `d`.
pub fn label_set(diagram: &WiringDiagram, c: usize, d: usize) -> IndexSet {
    let mut set = IndexSet::interval(diagram.word().letter(c));
    for k in c..d {
        let h = diagram.word().letter(k);
        set = IndexSet::new(set.iter().map(|x| {
            if x == h {
                h + 1
            } else if x == h + 1 {
                h
            } else {
                x
            }
        }));
    }
    set
}

/// 0/1 matrix with a row per chamber and a column per solid crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppearanceMatrix {
    solid: Vec<usize>,
    entries: Vec<Vec<i64>>,
}

impl AppearanceMatrix {
    pub fn new(solid: Vec<usize>, entries: Vec<Vec<i64>>) -> Self {
        AppearanceMatrix { solid, entries }
    }

    pub fn solid(&self) -> &[usize] {
        &self.solid
    }

    pub fn chambers(&self) -> usize {
        self.entries.len()
    }

    pub fn column(&self, d: usize) -> Option<usize> {
        self.solid.iter().position(|&s| s == d)
    }

    /// Entry for chamber `c` and solid crossing `d`, both 1-based labels.
    pub fn get(&self, c: usize, d: usize) -> i64 {
        self.column(d).map_or(0, |j| self.entries[c - 1][j])
    }

    /// Chamber row as a vector over solid crossings.
    pub fn row(&self, c: usize) -> &[i64] {
        &self.entries[c - 1]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Chambers in which the variable of `d` appears.
    pub fn spread(&self, d: usize) -> BTreeSet<usize> {
        (1..=self.chambers()).filter(|&c| self.get(c, d) == 1).collect()
    }

    /// Rows of the solid chambers.
    pub fn solid_block(&self) -> Vec<Vec<i64>> {
        self.solid.iter().map(|&c| self.row(c).to_vec()).collect()
    }

    /// Frozen iff the variable appears in a left-open chamber.
    pub fn frozen(&self, diagram: &WiringDiagram) -> BTreeSet<usize> {
        let open = diagram.frozen_chambers();
        self.solid.iter().copied().filter(|&d| open.iter().any(|&c| self.get(c, d) == 1)).collect()
    }

    /// Exponents over solid crossings of a monomial in chamber minors.
    pub fn cluster_exponents(&self, m: &LaurentMonomial) -> Vec<i64> {
        let mut out = vec![0; self.solid.len()];
        for (&c, &e) in m.exponents() {
            for (o, x) in out.iter_mut().zip(self.row(c)) {
                *o += e * x;
            }
        }
        out
    }
}

/// Entry `(c, d)` is 1 iff `d` is solid, `c <= d` and the pivot of the
/// label set of `c` at `d` jumps when `v_(d)` is multiplied by `s_{h_d}`.
pub fn appearance_matrix(diagram: &WiringDiagram) -> Result<AppearanceMatrix> {
    let solid = diagram.solid();
    let mut entries = vec![vec![0; solid.len()]; diagram.len()];
    for (j, &d) in solid.iter().enumerate() {
        let u = diagram.v_prefix(d);
        let us = u.times_simple(diagram.word().letter(d));
        for c in 1..=d {
            let l = label_set(diagram, c, d);
            let (before, after) = (pivot(&l, u)?, pivot(&l, &us)?);
            if before == after {
                continue;
            }
            if !before.gale_leq(&after)? {
                return Err(internal(format!("pivot of {l} decreased at crossing {d}")));
            }
            entries[c - 1][j] = 1;
        }
    }
    Ok(AppearanceMatrix { solid, entries })
}

/// Path drawn in the w-diagram after deleting every w-segment that runs
/// under a v-strand passing below the chamber; it leaves the crossing on the
/// rising strand and keeps taking the rising exit when one survives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WiringPath {
    pub crossing: usize,
    /// `(crossing, height after it)` for each crossing the path passes.
    pub steps: Vec<(usize, usize)>,
    pub end_height: usize,
}

pub fn wiring_path(diagram: &WiringDiagram, c: usize) -> Result<WiringPath> {
    let below = &diagram.chamber(c).right.rows;
    // segment of the w-strand at `height` just right of crossing `after`
    let deleted = |after: usize, height: usize| below.contains(diagram.v_suffix(after + 1).apply(height));
    let mut height = diagram.word().letter(c) + 1;
    let mut pos = c;
    let mut steps = vec![(c, height)];
    while let Some(k) = (pos + 1..=diagram.len()).find(|&k| {
        let hk = diagram.word().letter(k);
        hk == height || hk + 1 == height
    }) {
        let hk = diagram.word().letter(k);
        height = if !deleted(k, hk + 1) {
            hk + 1
        } else if !deleted(k, hk) {
            hk
        } else {
            return Err(internal(format!("path from crossing {c} is stuck at crossing {k}")));
        };
        steps.push((k, height));
        pos = k;
    }
    Ok(WiringPath { crossing: c, steps, end_height: height })
}

/// Orientation of the arrows contributed by one crossing, in terms of its
/// left, right, upper and lower chambers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HalfArrowOrientation {
    /// Full arrow right to left, else left to right.
    pub right_to_left: bool,
    /// Half-arrows left to up to right, else right to up to left.
    pub up_left_to_right: bool,
    /// Half-arrows left to down to right, else right to down to left.
    pub down_left_to_right: bool,
}

impl HalfArrowOrientation {
    pub fn all() -> Vec<HalfArrowOrientation> {
        (0..8)
            .map(|b| HalfArrowOrientation {
                right_to_left: b & 1 == 1,
                up_left_to_right: b & 2 == 2,
                down_left_to_right: b & 4 == 4,
            })
            .collect()
    }
}

/// Fixed by agreement with the Gabriel quiver on every case with `n = 3`.
pub const WIRING_ORIENTATION: HalfArrowOrientation =
    HalfArrowOrientation { right_to_left: true, up_left_to_right: true, down_left_to_right: true };

/// Skew-symmetric arrow counts between chambers, in half-arrows, with
/// entries between two left-open chambers cleared. Indexed from 0.
pub fn wiring_quiver_half(diagram: &WiringDiagram, o: HalfArrowOrientation) -> Vec<Vec<i64>> {
    let l = diagram.len();
    let mut b = vec![vec![0i64; l]; l];
    let mut add = |x: ChamberRef, y: ChamberRef, k: i64| {
        if let (Some(x), Some(y)) = (x.index(), y.index()) {
            b[x - 1][y - 1] += k;
            b[y - 1][x - 1] -= k;
        }
    };
    for x in diagram.crossings() {
        let (lc, rc) = (x.left, x.right);
        if o.right_to_left {
            add(rc, lc, 2)
        } else {
            add(lc, rc, 2)
        }
        for (mid, forward) in [(x.up, o.up_left_to_right), (x.down, o.down_left_to_right)] {
            if forward {
                add(lc, mid, 1);
                add(mid, rc, 1);
            } else {
                add(rc, mid, 1);
                add(mid, lc, 1);
            }
        }
    }
    let open = diagram.frozen_chambers();
    for &a in &open {
        for &c in &open {
            b[a - 1][c - 1] = 0;
        }
    }
    b
}

#[derive(Debug, Clone)]
pub struct IngermansonSeed {
    pub diagram: WiringDiagram,
    pub appearance: AppearanceMatrix,
    /// Inverse of the solid block, indexed by position among solid crossings.
    pub inverse: Vec<Vec<i64>>,
    pub frozen: BTreeSet<usize>,
    pub paths: BTreeMap<usize, WiringPath>,
    pub seed: Seed,
}

impl IngermansonSeed {
    pub fn new(diagram: &WiringDiagram) -> Result<Self> {
        Self::with_orientation(diagram, WIRING_ORIENTATION)
    }

    pub fn with_orientation(diagram: &WiringDiagram, o: HalfArrowOrientation) -> Result<Self> {
        let appearance = appearance_matrix(diagram)?;
        let solid = appearance.solid().to_vec();
        let inverse = inverse_unitriangular(&appearance.solid_block())?;
        let frozen = appearance.frozen(diagram);
        let mut paths = BTreeMap::new();
        let mut variables = Vec::new();
        for (j, &d) in solid.iter().enumerate() {
            let path = wiring_path(diagram, d)?;
            let h = path.end_height;
            let left = &diagram.chamber(d).left;
            let minor = MinorIndex::new(
                left.rows.intersect(&diagram.v().prefix_image(h)),
                left.cols.intersect(&diagram.w().prefix_image(h)),
            );
            let monomial = LaurentMonomial::from_exponents(solid.iter().zip(&inverse[j]).map(|(&c, &e)| (c, e)));
            variables.push(ClusterVariable { label: d, frozen: frozen.contains(&d), minor, monomial });
            paths.insert(d, path);
        }
        let quiver = pulled_back_quiver(diagram, &appearance, &frozen, o)?;
        let seed = Seed {
            construction: Construction::Ingermanson,
            v: diagram.v().clone(),
            word: diagram.word().clone(),
            mask: diagram.mask().clone(),
            variables,
            quiver,
        };
        Ok(IngermansonSeed { diagram: diagram.clone(), appearance, inverse, frozen, paths, seed })
    }

    pub fn variable(&self, d: usize) -> Option<&ClusterVariable> {
        self.seed.variables.iter().find(|x| x.label == d)
    }

    /// `(L(up) L(down)) / (L(left) L(right))` in left chamber minors; unit
    /// chambers are omitted.
    pub fn crossing_monomial(&self, x: usize) -> LaurentMonomial {
        let cr = self.diagram.crossing(x);
        let mut m = LaurentMonomial::one();
        for (r, e) in [(cr.up, 1), (cr.down, 1), (cr.left, -1), (cr.right, -1)] {
            if let Some(c) = r.index() {
                m = m.mul_pow(&LaurentMonomial::var(c), e);
            }
        }
        m
    }

    /// Exchange ratio of a mutable variable from the spread's left ends:
    /// `(1 / t_c) * prod t_d`. Cross-checked against the quiver, in cluster
    /// coordinates, before returning.
    pub fn exchange_ratio(&self, c: usize) -> Result<LaurentMonomial> {
        if self.appearance.column(c).is_none() || self.frozen.contains(&c) {
            return Err(internal(format!("crossing {c} does not carry a mutable variable")));
        }
        let boundary = self.diagram.spread_boundary(&self.appearance.spread(c))?;
        let mut by_crossings = LaurentMonomial::one().div(&self.crossing_monomial(c));
        for &d in &boundary.left_ends {
            by_crossings = by_crossings.mul(&self.crossing_monomial(d));
        }
        let mut by_quiver = LaurentMonomial::one();
        for x in &self.seed.variables {
            by_quiver = by_quiver.mul_pow(&x.monomial, self.seed.quiver.signed(x.label, c));
        }
        let (a, b) = (self.appearance.cluster_exponents(&by_crossings), self.appearance.cluster_exponents(&by_quiver));
        if a != b {
            return Err(internal(format!("exchange ratio of {c}: crossings give {a:?}, quiver gives {b:?}")));
        }
        Ok(by_crossings)
    }
}

/// `M^T B M` over solid crossings, `B` the wiring diagram quiver.
fn pulled_back_quiver(
    diagram: &WiringDiagram,
    m: &AppearanceMatrix,
    frozen: &BTreeSet<usize>,
    o: HalfArrowOrientation,
) -> Result<Quiver> {
    let b = wiring_quiver_half(diagram, o);
    let mt: Vec<Vec<i64>> = (0..m.solid().len()).map(|j| m.entries().iter().map(|r| r[j]).collect()).collect();
    let q2 = int_mat_mul(&int_mat_mul(&mt, &b), m.entries());
    let solid = m.solid();
    for (a, &x) in solid.iter().enumerate() {
        for (c, &y) in solid.iter().enumerate() {
            if q2[a][c] % 2 != 0 && !(frozen.contains(&x) && frozen.contains(&y)) {
                return Err(internal(format!("half arrow between variables {x} and {y}")));
            }
        }
    }
    let pos = |x: usize| m.column(x).expect("solid label");
    Ok(Quiver::from_signed(solid.to_vec(), frozen.clone(), |x, y| q2[pos(x)][pos(y)] / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::ReducedWord;

    fn diagram(v: &str, n: usize, word: &[usize]) -> WiringDiagram {
        WiringDiagram::new(&Permutation::from_digits(v).unwrap(), &ReducedWord::new(n, word.to_vec()).unwrap()).unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.iter().copied())
    }

    #[test]
    fn pivot_examples() {
        let u = Permutation::from_word(5, &[4, 3]).unwrap();
        assert_eq!(pivot(&set(&[1, 3, 4]), &u).unwrap(), set(&[1, 2, 3]));
        let u = Permutation::from_word(5, &[4, 3, 4]).unwrap();
        assert_eq!(pivot(&set(&[1, 3, 4]), &u).unwrap(), set(&[1, 2, 4]));
    }

    #[test]
    fn appearance_fixture() {
        let d = diagram("12534", 5, &[4, 3, 2, 1, 4, 3, 2, 3, 4]);
        assert_eq!(label_set(&d, 6, 9), set(&[1, 3, 4]));
        assert_eq!(*d.v_prefix(9), Permutation::from_word(5, &[4, 3]).unwrap());
        let m = appearance_matrix(&d).unwrap();
        assert_eq!(m.get(6, 9), 1);
    }

    #[test]
    fn single_crossing_seed() {
        let s = IngermansonSeed::new(&diagram("12", 2, &[1])).unwrap();
        assert_eq!(s.seed.variables.len(), 1);
        let x = &s.seed.variables[0];
        assert!(x.frozen);
        assert_eq!(x.minor, MinorIndex::new(set(&[1]), set(&[1])));
        assert_eq!(x.monomial, LaurentMonomial::var(1));
    }

    #[test]
    fn solid_block_is_unitriangular() {
        let d = diagram("12534", 5, &[4, 3, 2, 1, 4, 3, 2, 3, 4]);
        let s = IngermansonSeed::new(&d).unwrap();
        let block = s.appearance.solid_block();
        assert_eq!(block.len(), d.len() - 2);
        assert_eq!(
            int_mat_mul(&block, &s.inverse),
            (0..block.len())
                .map(|i| (0..block.len()).map(|j| (i == j) as i64).collect::<Vec<i64>>())
                .collect::<Vec<_>>()
        );
    }
}
