//! Lattice paths in the `n x n` grid and the skew shapes between them.
//!
//! Rows and columns are numbered as in a matrix. The box in row `r`,
//! column `c` has content `r - c + n`, so the upper-right box has content 1.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::IndexSet;

/// Row and column sets of a minor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MinorIndex {
    pub rows: IndexSet,
    pub cols: IndexSet,
}

impl MinorIndex {
    pub fn new(rows: IndexSet, cols: IndexSet) -> Self {
        MinorIndex { rows, cols }
    }
}

impl fmt::Display for MinorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D[{};{}]", self.rows, self.cols)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Down,
    Left,
}

/// Path from the upper-right corner whose step `k` is vertical iff `k` is in
/// the vertical set; it has `n + |I|` steps and ends on the left edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    n: usize,
    vertical: IndexSet,
}

impl LatticePath {
    pub fn new(vertical: IndexSet, n: usize) -> Result<Self> {
        check_range(&vertical, n)?;
        Ok(LatticePath { n, vertical })
    }

    pub fn steps(&self) -> Vec<Step> {
        (1..=self.n + self.vertical.len())
            .map(|k| if self.vertical.contains(k) { Step::Down } else { Step::Left })
            .collect()
    }

    /// Row lengths of the Young diagram lying above the path.
    pub fn young_diagram(&self) -> Vec<usize> {
        self.vertical.iter().enumerate().map(|(a, i)| self.n + a + 1 - i).collect()
    }
}

fn check_range(set: &IndexSet, n: usize) -> Result<()> {
    match set.iter().find(|&x| x == 0 || x > n) {
        Some(index) => Err(Error::IndexOutOfRange { index, n }),
        None => Ok(()),
    }
}

/// Set of boxes of the `n x n` grid forming a skew shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    n: usize,
    boxes: BTreeSet<(usize, usize)>,
}

/// The skew shape between the paths of `rows` (below) and `cols` (above).
/// Row `a` holds contents `rows_a ..= cols_a - 1`.
pub fn skew_shape(rows: &IndexSet, cols: &IndexSet, n: usize) -> Result<SkewShape> {
    check_range(rows, n)?;
    check_range(cols, n)?;
    if !rows.gale_leq(cols)? {
        return Err(Error::NotGaleLeq { rows: rows.as_slice().to_vec(), cols: cols.as_slice().to_vec() });
    }
    let mut boxes = BTreeSet::new();
    for (a0, (i, j)) in rows.iter().zip(cols.iter()).enumerate() {
        let a = a0 + 1;
        for c in (n + a + 1 - j)..=(n + a - i) {
            boxes.insert((a, c));
        }
    }
    Ok(SkewShape { n, boxes })
}

impl SkewShape {
    pub fn empty(n: usize) -> Self {
        SkewShape { n, boxes: BTreeSet::new() }
    }

    /// Any box set; callers keep it a skew shape.
    #[cfg(test)]
    pub(crate) fn from_boxes(n: usize, boxes: BTreeSet<(usize, usize)>) -> Self {
        SkewShape { n, boxes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn boxes(&self) -> &BTreeSet<(usize, usize)> {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.boxes.contains(&(r, c))
    }

    pub fn content(&self, r: usize, c: usize) -> usize {
        r + self.n - c
    }

    /// Number of boxes of each content `1..n`, indexed from 0.
    pub fn dimension_vector(&self) -> Vec<usize> {
        let mut dims = vec![0; self.n.saturating_sub(1)];
        for &(r, c) in &self.boxes {
            dims[self.content(r, c) - 1] += 1;
        }
        dims
    }

    pub fn contents(&self) -> BTreeSet<usize> {
        self.boxes.iter().map(|&(r, c)| self.content(r, c)).collect()
    }

    /// Edge-connected components, northeast (smallest content) first.
    pub fn components(&self) -> Vec<SkewShape> {
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in &self.boxes {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some((r, c)) = queue.pop_front() {
                let nbrs = [(r + 1, c), (r.wrapping_sub(1), c), (r, c + 1), (r, c.wrapping_sub(1))];
                for b in nbrs {
                    if self.boxes.contains(&b) && seen.insert(b) {
                        comp.insert(b);
                        queue.push_back(b);
                    }
                }
            }
            comps.push(SkewShape { n: self.n, boxes: comp });
        }
        comps.sort_by_key(|s| s.contents().first().copied());
        comps
    }

    /// Translation-invariant key: per nonempty row with contents `lo..=hi`,
    /// a row index `lo` and a column index `hi + 1`. For the shape of `(I, J)`
    /// this is `I` and `J` with their common vertical steps removed.
    pub fn canonical_key(&self) -> MinorIndex {
        let mut rows: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for &(r, c) in &self.boxes {
            let k = self.content(r, c);
            let e = rows.entry(r).or_insert((k, k));
            e.0 = e.0.min(k);
            e.1 = e.1.max(k);
        }
        MinorIndex::new(
            IndexSet::new(rows.values().map(|&(lo, _)| lo)),
            IndexSet::new(rows.values().map(|&(_, hi)| hi + 1)),
        )
    }

    /// Shift every box by `t` rows down and `t` columns right, if it stays in the grid.
    pub fn translated(&self, t: isize) -> Option<SkewShape> {
        let n = self.n as isize;
        let mut boxes = BTreeSet::new();
        for &(r, c) in &self.boxes {
            let (r2, c2) = (r as isize + t, c as isize + t);
            if r2 < 1 || c2 < 1 || r2 > n || c2 > n {
                return None;
            }
            boxes.insert((r2 as usize, c2 as usize));
        }
        Some(SkewShape { n: self.n, boxes })
    }
}

/// Translation classes of the components of the shape of `(rows, cols)`.
pub fn component_keys(rows: &IndexSet, cols: &IndexSet, n: usize) -> Result<Vec<MinorIndex>> {
    Ok(skew_shape(rows, cols, n)?.components().iter().map(SkewShape::canonical_key).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.iter().copied())
    }

    #[test]
    fn example_components() {
        let s = skew_shape(&set(&[1, 3, 4]), &set(&[2, 3, 7]), 7).unwrap();
        let comps = s.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].contents(), BTreeSet::from([1]));
        assert_eq!(comps[1].contents(), BTreeSet::from([4, 5, 6]));
        assert_eq!(s.canonical_key(), MinorIndex::new(set(&[1, 4]), set(&[2, 7])));
        assert_eq!(comps[0].canonical_key(), MinorIndex::new(set(&[1]), set(&[2])));
        assert_eq!(comps[1].canonical_key(), MinorIndex::new(set(&[4]), set(&[7])));
    }

    #[test]
    fn single_box_is_upper_right() {
        let s = skew_shape(&set(&[1]), &set(&[2]), 2).unwrap();
        assert_eq!(s.boxes().iter().copied().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(s.dimension_vector(), vec![1]);
    }

    #[test]
    fn validation() {
        assert!(matches!(skew_shape(&set(&[2]), &set(&[1]), 3), Err(Error::NotGaleLeq { .. })));
        assert!(matches!(skew_shape(&set(&[1]), &set(&[1, 2]), 3), Err(Error::SizeMismatch { .. })));
        assert!(matches!(skew_shape(&set(&[1]), &set(&[4]), 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn path_shape() {
        let p = LatticePath::new(set(&[1, 3]), 4).unwrap();
        assert_eq!(p.steps(), vec![Step::Down, Step::Left, Step::Down, Step::Left, Step::Left, Step::Left]);
        assert_eq!(p.young_diagram(), vec![4, 3]);
    }

    fn gale_pair(n: usize) -> impl Strategy<Value = (IndexSet, IndexSet)> {
        (0..=n)
            .prop_flat_map(move |h| {
                (
                    proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), h),
                    proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), h),
                )
            })
            .prop_map(|(a, b)| {
                let (a, b) = (IndexSet::new(a), IndexSet::new(b));
                let lo = IndexSet::new(a.iter().zip(b.iter()).map(|(x, y)| x.min(y)));
                let hi = IndexSet::new(a.iter().zip(b.iter()).map(|(x, y)| x.max(y)));
                (lo, hi)
            })
    }

    proptest! {
        #[test]
        fn gale_matches_diagram_containment(n in 1usize..8, seed in any::<u64>()) {
            let subsets: Vec<IndexSet> = (0..=n).flat_map(|h| IndexSet::subsets(n, h)).collect();
            let i = &subsets[(seed % subsets.len() as u64) as usize];
            let same: Vec<&IndexSet> = subsets.iter().filter(|s| s.len() == i.len()).collect();
            let j = same[((seed >> 20) % same.len() as u64) as usize];
            let li = LatticePath::new(i.clone(), n).unwrap().young_diagram();
            let lj = LatticePath::new(j.clone(), n).unwrap().young_diagram();
            let contained = lj.iter().zip(&li).all(|(b, a)| b <= a);
            prop_assert_eq!(i.gale_leq(j).unwrap(), contained);
        }

        #[test]
        fn shape_invariants((rows, cols) in (1usize..8).prop_flat_map(gale_pair), ) {
            let n = rows.iter().chain(cols.iter()).max().unwrap_or(1).max(1);
            let s = skew_shape(&rows, &cols, n).unwrap();
            // contents lie in 1..n and form one interval per component
            for comp in s.components() {
                let cs: Vec<usize> = comp.contents().into_iter().collect();
                prop_assert!(cs.windows(2).all(|w| w[1] == w[0] + 1));
                prop_assert!(cs[0] >= 1 && *cs.last().unwrap() < n);
            }
            // dimension vector counts |I cap [k]| - |J cap [k]|
            let dims = s.dimension_vector();
            for k in 1..n {
                prop_assert_eq!(dims[k - 1], rows.count_le(k) - cols.count_le(k));
            }
            // key is the pair with common vertical steps removed
            let common: IndexSet = IndexSet::new(rows.iter().zip(cols.iter()).filter(|(a, b)| a == b).map(|(a, _)| a));
            prop_assert_eq!(s.canonical_key(), MinorIndex::new(rows.difference(&common), cols.difference(&common)));
            // translation preserves keys
            for t in [-2isize, -1, 1, 2] {
                if let Some(u) = s.translated(t) {
                    prop_assert_eq!(u.canonical_key(), s.canonical_key());
                }
            }
        }
    }
}
