//! The double wiring diagram of a reduced word `w` with the positive
//! distinguished subexpression for `v` drawn on top.
//!
//! Heights run `1..=n` bottom to top. Chamber `c` is the chamber left of
//! crossing `c`, between heights `h_c` and `h_c + 1`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{pds, IndexSet, Permutation, ReducedWord, SubexpressionMask};
use crate::shapes::MinorIndex;

/// A chamber adjacent to some crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ChamberRef {
    /// Chamber left of this crossing.
    Indexed(usize),
    /// Rightmost chamber at this slot; its minors are 1.
    RightOpen(usize),
    /// Below every strand.
    Floor,
    /// Above every strand.
    Ceiling,
}

impl ChamberRef {
    pub fn index(self) -> Option<usize> {
        match self {
            ChamberRef::Indexed(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chamber {
    pub crossing: usize,
    pub height: usize,
    /// Left endpoints of strands below: `(v_(c)[h], w_(c)[h])`.
    pub left: MinorIndex,
    /// Right endpoints of strands below: `(v^(c)[h], w^(c)[h])`.
    pub right: MinorIndex,
    /// No crossing at this height lies further left.
    pub left_open: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub index: usize,
    pub height: usize,
    pub hollow: bool,
    pub left: ChamberRef,
    pub right: ChamberRef,
    pub up: ChamberRef,
    pub down: ChamberRef,
    /// Right endpoint of the w-strand that rises through the crossing.
    pub rising: usize,
    /// Right endpoint of the w-strand that falls through the crossing.
    pub falling: usize,
}

#[derive(Debug, Clone)]
pub struct WiringDiagram {
    v: Permutation,
    w: Permutation,
    word: ReducedWord,
    mask: SubexpressionMask,
    // index p in 1..=l+1; entry 0 is unused
    w_pre: Vec<Permutation>,
    w_suf: Vec<Permutation>,
    v_pre: Vec<Permutation>,
    v_suf: Vec<Permutation>,
    chambers: Vec<Chamber>,
    crossings: Vec<Crossing>,
}

impl WiringDiagram {
    pub fn new(v: &Permutation, word: &ReducedWord) -> Result<Self> {
        let mask = pds(v, word)?;
        let n = word.n();
        let l = word.len();
        let id = Permutation::identity(n);
        let mut w_pre = vec![id.clone(); l + 2];
        let mut v_pre = vec![id.clone(); l + 2];
        for p in 2..=l + 1 {
            let h = word.letter(p - 1);
            w_pre[p] = w_pre[p - 1].times_simple(h);
            v_pre[p] = if mask.is_hollow(p - 1) { v_pre[p - 1].times_simple(h) } else { v_pre[p - 1].clone() };
        }
        let mut w_suf = vec![id.clone(); l + 2];
        let mut v_suf = vec![id; l + 2];
        for p in (1..=l).rev() {
            let h = word.letter(p);
            w_suf[p] = w_suf[p + 1].times_simple(h);
            v_suf[p] = if mask.is_hollow(p) { v_suf[p + 1].times_simple(h) } else { v_suf[p + 1].clone() };
        }
        let w = word.permutation();
        if v_pre[l + 1] != *v {
            return Err(crate::error::internal("hollow letters do not multiply to v"));
        }
        let mut d = WiringDiagram {
            v: v.clone(),
            w,
            word: word.clone(),
            mask,
            w_pre,
            w_suf,
            v_pre,
            v_suf,
            chambers: Vec::new(),
            crossings: Vec::new(),
        };
        d.chambers = (1..=l)
            .map(|c| {
                let h = word.letter(c);
                Chamber {
                    crossing: c,
                    height: h,
                    left: d.left_labels_at(c, h),
                    right: d.right_labels_at(c, h),
                    left_open: (1..c).all(|b| word.letter(b) != h),
                }
            })
            .collect();
        d.crossings = (1..=l).map(|c| d.make_crossing(c)).collect();
        Ok(d)
    }

    fn next_at(&self, after: usize, height: usize) -> ChamberRef {
        if height == 0 {
            return ChamberRef::Floor;
        }
        if height == self.n() {
            return ChamberRef::Ceiling;
        }
        match (after + 1..=self.len()).find(|&b| self.word.letter(b) == height) {
            Some(b) => ChamberRef::Indexed(b),
            None => ChamberRef::RightOpen(height),
        }
    }

    fn make_crossing(&self, c: usize) -> Crossing {
        let h = self.word.letter(c);
        Crossing {
            index: c,
            height: h,
            hollow: self.mask.is_hollow(c),
            left: ChamberRef::Indexed(c),
            right: self.next_at(c, h),
            up: self.next_at(c, h + 1),
            down: self.next_at(c, h - 1),
            rising: self.w_suf[c].apply(h),
            falling: self.w_suf[c].apply(h + 1),
        }
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn v(&self) -> &Permutation {
        &self.v
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn mask(&self) -> &SubexpressionMask {
        &self.mask
    }

    pub fn is_hollow(&self, c: usize) -> bool {
        self.mask.is_hollow(c)
    }

    pub fn solid(&self) -> Vec<usize> {
        self.mask.solid_positions()
    }

    /// `w_(p) = s_{h_1} ... s_{h_{p-1}}`, for `p` in `1..=l+1`.
    pub fn w_prefix(&self, p: usize) -> &Permutation {
        &self.w_pre[p]
    }

    /// `w^(p) = s_{h_l} ... s_{h_p}`, for `p` in `1..=l+1`.
    pub fn w_suffix(&self, p: usize) -> &Permutation {
        &self.w_suf[p]
    }

    /// Hollow letters among `h_1 .. h_{p-1}`.
    pub fn v_prefix(&self, p: usize) -> &Permutation {
        &self.v_pre[p]
    }

    /// Hollow letters among `h_p .. h_l`, right to left.
    pub fn v_suffix(&self, p: usize) -> &Permutation {
        &self.v_suf[p]
    }

    /// Left endpoints of the strands at heights `1..=k` just before crossing `p`.
    pub fn left_labels_at(&self, p: usize, k: usize) -> MinorIndex {
        MinorIndex::new(self.v_pre[p].prefix_image(k), self.w_pre[p].prefix_image(k))
    }

    /// Right endpoints of the strands at heights `1..=k` just before crossing `p`.
    pub fn right_labels_at(&self, p: usize, k: usize) -> MinorIndex {
        MinorIndex::new(self.v_suf[p].prefix_image(k), self.w_suf[p].prefix_image(k))
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    /// 1-based.
    pub fn chamber(&self, c: usize) -> &Chamber {
        &self.chambers[c - 1]
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// 1-based.
    pub fn crossing(&self, c: usize) -> &Crossing {
        &self.crossings[c - 1]
    }

    pub fn frozen_chambers(&self) -> Vec<usize> {
        self.chambers.iter().filter(|ch| ch.left_open).map(|ch| ch.crossing).collect()
    }

    /// Left chamber minor of any chamber; unit chambers give trivial minors.
    pub fn left_minor(&self, r: ChamberRef) -> MinorIndex {
        match r {
            ChamberRef::Indexed(c) => self.chamber(c).left.clone(),
            ChamberRef::RightOpen(s) => MinorIndex::new(self.v.prefix_image(s), self.w.prefix_image(s)),
            ChamberRef::Floor => MinorIndex::new(IndexSet::default(), IndexSet::default()),
            ChamberRef::Ceiling => MinorIndex::new(IndexSet::interval(self.n()), IndexSet::interval(self.n())),
        }
    }

    /// Right chamber minor of any chamber.
    pub fn right_minor(&self, r: ChamberRef) -> MinorIndex {
        match r {
            ChamberRef::Indexed(c) => self.chamber(c).right.clone(),
            ChamberRef::RightOpen(s) => MinorIndex::new(IndexSet::interval(s), IndexSet::interval(s)),
            ChamberRef::Floor => MinorIndex::new(IndexSet::default(), IndexSet::default()),
            ChamberRef::Ceiling => MinorIndex::new(IndexSet::interval(self.n()), IndexSet::interval(self.n())),
        }
    }

    /// Ends and cusps of a region given as a set of chamber indices.
    pub fn spread_boundary(&self, region: &BTreeSet<usize>) -> Result<SpreadBoundary> {
        if let Some(&bad) = region.iter().find(|&&c| c == 0 || c > self.len()) {
            return Err(Error::IndexOutOfRange { index: bad, n: self.len() });
        }
        let inside = |r: ChamberRef| r.index().is_some_and(|c| region.contains(&c));
        let mut b = SpreadBoundary::default();
        for x in &self.crossings {
            let s = Surround { left: inside(x.left), right: inside(x.right), up: inside(x.up), down: inside(x.down) };
            if !s.left && s.right {
                b.left_ends.push(x.index);
            }
            if s.left && !s.right {
                b.right_ends.push(x.index);
            }
            if s.count() % 2 == 1 {
                b.cusps.push((x.index, s));
            }
        }
        Ok(b)
    }
}

/// Which of the four chambers around a crossing lie in a region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Surround {
    pub left: bool,
    pub right: bool,
    pub up: bool,
    pub down: bool,
}

impl Surround {
    pub fn count(&self) -> usize {
        [self.left, self.right, self.up, self.down].iter().filter(|&&b| b).count()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SpreadBoundary {
    /// Left chamber outside the region, right chamber inside.
    pub left_ends: Vec<usize>,
    /// Left chamber inside the region, right chamber outside.
    pub right_ends: Vec<usize>,
    /// Crossings with an odd number of surrounding chambers inside.
    pub cusps: Vec<(usize, Surround)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(v: &str, n: usize, word: &[usize]) -> WiringDiagram {
        WiringDiagram::new(&Permutation::from_digits(v).unwrap(), &ReducedWord::new(n, word.to_vec()).unwrap()).unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.iter().copied())
    }

    #[test]
    fn one_crossing() {
        let d = diagram("12", 2, &[1]);
        let ch = d.chamber(1);
        assert_eq!(ch.left, MinorIndex::new(set(&[1]), set(&[1])));
        assert_eq!(ch.right, MinorIndex::new(set(&[1]), set(&[2])));
        assert!(ch.left_open);
        let x = d.crossing(1);
        assert_eq!((x.right, x.up, x.down), (ChamberRef::RightOpen(1), ChamberRef::Ceiling, ChamberRef::Floor));
        assert_eq!((x.rising, x.falling), (2, 1));
    }

    #[test]
    fn labels_are_related_by_v_and_w() {
        let d = diagram("12534", 5, &[4, 3, 2, 1, 4, 3, 2, 3, 4]);
        for ch in d.chambers() {
            assert_eq!(d.v().image(&ch.right.rows), ch.left.rows);
            assert_eq!(d.w().image(&ch.right.cols), ch.left.cols);
            assert!(ch.right.rows.gale_leq(&ch.right.cols).unwrap());
        }
    }

    #[test]
    fn neighbour_chambers_match_positional_labels() {
        for (v, n, word) in [("12534", 5, vec![4, 3, 2, 1, 4, 3, 2, 3, 4]), ("3214", 4, vec![1, 2, 1, 3, 2, 1])] {
            let d = diagram(v, n, &word);
            for x in d.crossings() {
                let h = x.height;
                assert_eq!(d.right_minor(x.right), d.right_labels_at(x.index + 1, h));
                assert_eq!(d.right_minor(x.up), d.right_labels_at(x.index + 1, h + 1));
                assert_eq!(d.right_minor(x.down), d.right_labels_at(x.index + 1, h - 1));
                assert_eq!(d.left_minor(x.right), d.left_labels_at(x.index + 1, h));
                assert_eq!(d.left_minor(x.up), d.left_labels_at(x.index + 1, h + 1));
                assert_eq!(d.left_minor(x.down), d.left_labels_at(x.index + 1, h - 1));
            }
        }
    }

    #[test]
    fn suffix_is_inverse_times_prefix() {
        let d = diagram("3214", 4, &[1, 2, 1, 3, 2, 1]);
        for p in 1..=d.len() + 1 {
            assert_eq!(*d.w_suffix(p), d.w().inverse().compose(d.w_prefix(p)));
            assert_eq!(*d.v_suffix(p), d.v().inverse().compose(d.v_prefix(p)));
        }
    }

    #[test]
    fn single_chamber_region() {
        let d = diagram("3214", 4, &[1, 2, 1, 3, 2, 1]);
        let b = d.spread_boundary(&BTreeSet::from([3])).unwrap();
        assert_eq!(b.left_ends, vec![1]);
        assert_eq!(b.right_ends, vec![3]);
        assert!(d.spread_boundary(&BTreeSet::from([7])).is_err());
    }
}
