//! Permutations of `1..=n`, reduced words, Bruhat order and positive
//! distinguished subexpressions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` for which every reduced word of every permutation is enumerated.
pub const REDUCED_WORD_GUARD: usize = 7;

/// Sorted set of indices in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(items: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }

    /// `{1, .., k}`.
    pub fn interval(k: usize) -> Self {
        IndexSet((1..=k).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn intersect(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.iter().filter(|&x| other.contains(x)).collect())
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.iter().filter(|&x| !other.contains(x)).collect())
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet::new(self.iter().chain(other.iter()))
    }

    /// Elements `<= k`.
    pub fn truncate(&self, k: usize) -> IndexSet {
        IndexSet(self.iter().filter(|&x| x <= k).collect())
    }

    /// Number of elements `<= k`.
    pub fn count_le(&self, k: usize) -> usize {
        self.0.partition_point(|&x| x <= k)
    }

    /// Gale order: equal sizes and `i_a <= j_a` for every `a`.
    pub fn gale_leq(&self, other: &IndexSet) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { left: self.len(), right: other.len() });
        }
        Ok(self.iter().zip(other.iter()).all(|(a, b)| a <= b))
    }

    /// All `k`-subsets of `1..=n`, lexicographically.
    pub fn subsets(n: usize, k: usize) -> Vec<IndexSet> {
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if cur.len() == k {
                out.push(IndexSet(cur.clone()));
                return;
            }
            for x in start..=n {
                if n - x + 1 < k - cur.len() {
                    break;
                }
                cur.push(x);
                rec(x + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if k <= n {
            rec(1, n, k, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Permutation in one-line notation; `apply(i)` is the image of `i`.
/// Products compose right to left: `(u * v)(i) = u(v(i))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotAPermutation { n, values: one_line });
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// Parses one-line notation written as digits, e.g. `"3214"`.
    pub fn from_digits(s: &str) -> Result<Self> {
        let values = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse(format!("expected digits, got {s:?}")))?;
        Permutation::new(values)
    }

    /// Product of simple transpositions `s_{h_1} ... s_{h_k}`.
    pub fn from_word(n: usize, letters: &[usize]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for &h in letters {
            check_letter(h, n)?;
            p = p.times_simple(h);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.apply(x)).collect())
    }

    /// `self * s_h`: swaps positions `h` and `h + 1`.
    pub fn times_simple(&self, h: usize) -> Permutation {
        let mut p = self.0.clone();
        p.swap(h - 1, h);
        Permutation(p)
    }

    /// `s_h * self`: swaps values `h` and `h + 1`.
    pub fn simple_times(&self, h: usize) -> Permutation {
        Permutation(
            self.0
                .iter()
                .map(|&x| {
                    if x == h {
                        h + 1
                    } else if x == h + 1 {
                        h
                    } else {
                        x
                    }
                })
                .collect(),
        )
    }

    pub fn has_right_descent(&self, h: usize) -> bool {
        self.apply(h) > self.apply(h + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.0;
        (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
    }

    pub fn image(&self, set: &IndexSet) -> IndexSet {
        IndexSet::new(set.iter().map(|i| self.apply(i)))
    }

    /// `self[k] = self({1, .., k})`.
    pub fn prefix_image(&self, k: usize) -> IndexSet {
        IndexSet::new(self.0[..k].iter().copied())
    }

    /// Tableau criterion: `sort(self[k]) <= sort(other[k])` entrywise for every `k`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        self.n() == other.n()
            && (1..self.n()).all(|k| self.prefix_image(k).gale_leq(&other.prefix_image(k)).unwrap_or(false))
    }

    /// All permutations of `1..=n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

fn check_letter(h: usize, n: usize) -> Result<()> {
    if h == 0 || h >= n {
        return Err(Error::LetterOutOfRange { letter: h, n });
    }
    Ok(())
}

/// Reduced word `h_1 ... h_l` for `s_{h_1} ... s_{h_l}` in `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        let p = Permutation::from_word(n, &letters)?;
        if p.length() != letters.len() {
            return Err(Error::NotReduced(letters));
        }
        Ok(ReducedWord { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Letter at 1-based position `c`.
    pub fn letter(&self, c: usize) -> usize {
        self.letters[c - 1]
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::from_word(self.n, &self.letters).expect("letters validated")
    }

    /// Word with the first letter removed.
    pub fn drop_first(&self) -> Option<ReducedWord> {
        (!self.is_empty()).then(|| ReducedWord { n: self.n, letters: self.letters[1..].to_vec() })
    }

    /// Word with the last letter removed.
    pub fn drop_last(&self) -> Option<ReducedWord> {
        (!self.is_empty()).then(|| ReducedWord { n: self.n, letters: self.letters[..self.len() - 1].to_vec() })
    }

    /// Heights of every strand, indexed by left endpoint, at positions `0..=l`
    /// (position `k` lies just right of crossing `k`).
    pub fn strand_heights(&self) -> Vec<Vec<usize>> {
        let mut at: Vec<usize> = (0..=self.n).collect(); // at[height] = strand
        let mut heights: Vec<Vec<usize>> = (0..=self.n).map(|s| vec![s]).collect();
        for &h in &self.letters {
            at.swap(h, h + 1);
            for (height, &s) in at.iter().enumerate().skip(1) {
                heights[s].push(height);
            }
        }
        heights.remove(0);
        heights
    }

    /// No strand travels down and later up.
    pub fn is_unipeak(&self) -> bool {
        self.strand_heights().iter().all(|hs| {
            let mut descended = false;
            hs.windows(2).all(|p| {
                if p[1] < p[0] {
                    descended = true;
                }
                !(descended && p[1] > p[0])
            })
        })
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All reduced words of `w`, lexicographically.
pub fn reduced_words(w: &Permutation) -> Result<Vec<ReducedWord>> {
    let n = w.n();
    if n > REDUCED_WORD_GUARD {
        return Err(Error::GuardExceeded { what: "reduced word enumeration", n, max: REDUCED_WORD_GUARD });
    }
    fn rec(w: &Permutation, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w.length() == 0 {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for h in 1..w.n() {
            if w.has_right_descent(h) {
                suffix.push(h);
                rec(&w.times_simple(h), suffix, out);
                suffix.pop();
            }
        }
    }
    let mut words = Vec::new();
    rec(w, &mut Vec::new(), &mut words);
    words.sort();
    Ok(words.into_iter().map(|letters| ReducedWord { n, letters }).collect())
}

/// A unipeak reduced word of `w`: the strand ending at height 1 sinks first,
/// then the one ending at height 2, and so on. A strand rises only while
/// lower-ending strands pass it and sinks once, so heights are unimodal.
pub fn unipeak_word(w: &Permutation) -> ReducedWord {
    let n = w.n();
    let mut at: Vec<usize> = (0..=n).collect(); // at[height] = left endpoint
    let mut letters = Vec::new();
    for h in 1..=n {
        let mut p = at.iter().position(|&s| s == w.apply(h)).expect("strand present");
        while p > h {
            letters.push(p - 1);
            at.swap(p - 1, p);
            p -= 1;
        }
    }
    ReducedWord { n, letters }
}

/// Hollow (`true`) or solid (`false`) status per letter of a subexpression.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubexpressionMask(Vec<bool>);

impl SubexpressionMask {
    pub fn from_hollow(hollow: Vec<bool>) -> Self {
        SubexpressionMask(hollow)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based.
    pub fn is_hollow(&self, c: usize) -> bool {
        self.0[c - 1]
    }

    pub fn hollow_positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&c| self.is_hollow(c)).collect()
    }

    pub fn solid_positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&c| !self.is_hollow(c)).collect()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    /// Product of the hollow letters.
    pub fn product(&self, word: &ReducedWord) -> Permutation {
        let used: Vec<usize> = self.hollow_positions().iter().map(|&c| word.letter(c)).collect();
        Permutation::from_word(word.n(), &used).expect("letters validated")
    }
}

impl fmt::Display for SubexpressionMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &h in &self.0 {
            write!(f, "{}", if h { 'o' } else { 'x' })?;
        }
        Ok(())
    }
}

/// Positive distinguished subexpression for `v` in `word`: scanning right to
/// left from `v`, a letter is used (hollow) exactly when it shortens the
/// running permutation.
pub fn pds(v: &Permutation, word: &ReducedWord) -> Result<SubexpressionMask> {
    if v.n() != word.n() {
        return Err(Error::DimensionMismatch { expected: word.n(), found: v.n() });
    }
    let w = word.permutation();
    if !v.bruhat_leq(&w) {
        return Err(Error::NotBruhatLeq { v: v.one_line().to_vec(), w: w.one_line().to_vec() });
    }
    let mut u = v.clone();
    let mut hollow = vec![false; word.len()];
    for c in (1..=word.len()).rev() {
        let h = word.letter(c);
        if u.has_right_descent(h) {
            u = u.times_simple(h);
            hollow[c - 1] = true;
        }
    }
    if u.length() != 0 {
        return Err(crate::error::internal("greedy subexpression did not reach the identity"));
    }
    Ok(SubexpressionMask(hollow))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(n: usize, l: &[usize]) -> ReducedWord {
        ReducedWord::new(n, l.to_vec()).unwrap()
    }

    /// Subword property: `v <= w` iff some reduced word of `w` has a
    /// subword that multiplies to `v`.
    fn bruhat_leq_subword(v: &Permutation, w: &Permutation) -> bool {
        let word = unipeak_word(w);
        let l = word.len();
        (0u32..1 << l).any(|bits| {
            let used: Vec<usize> = (0..l).filter(|i| bits >> i & 1 == 1).map(|i| word.letters()[i]).collect();
            Permutation::from_word(w.n(), &used).unwrap() == *v
        })
    }

    #[test]
    fn bruhat_tableau_matches_subword() {
        for n in 1..=4 {
            let all = Permutation::all(n);
            for v in &all {
                for w in &all {
                    assert_eq!(v.bruhat_leq(w), bruhat_leq_subword(v, w), "{v} {w}");
                }
            }
        }
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(0).len(), 1);
    }

    #[test]
    fn pds_examples() {
        let m = pds(&Permutation::from_digits("3214").unwrap(), &word(4, &[1, 2, 1, 3, 2, 1])).unwrap();
        assert_eq!(m.hollow_positions(), vec![3, 5, 6]);
        let m = pds(&Permutation::from_digits("12534").unwrap(), &word(5, &[4, 3, 2, 1, 4, 3, 2, 3, 4])).unwrap();
        assert_eq!(m.hollow_positions(), vec![5, 8]);
    }

    #[test]
    fn pds_rejects_incomparable() {
        let v = Permutation::from_digits("21").unwrap();
        assert!(matches!(pds(&v, &word(2, &[])), Err(Error::NotBruhatLeq { .. })));
        assert!(matches!(pds(&v, &word(3, &[1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn reduced_word_validation() {
        assert!(matches!(ReducedWord::new(3, vec![1, 1]), Err(Error::NotReduced(_))));
        assert!(matches!(ReducedWord::new(3, vec![3]), Err(Error::LetterOutOfRange { .. })));
        assert!(matches!(reduced_words(&Permutation::identity(8)), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn unipeak_examples() {
        assert!(word(3, &[2, 1, 2]).is_unipeak());
        assert!(!word(3, &[1, 2, 1]).is_unipeak());
        assert!(!word(4, &[2, 1, 3, 2, 1]).is_unipeak());
        assert!(word(5, &[4, 3, 2, 1, 4, 3, 2, 3, 4]).is_unipeak());
    }

    #[test]
    fn reduced_word_counts() {
        let w0 = Permutation::from_digits("4321").unwrap();
        assert_eq!(reduced_words(&w0).unwrap().len(), 16);
        let w0 = Permutation::from_digits("54321").unwrap();
        assert_eq!(reduced_words(&w0).unwrap().len(), 768);
    }

    #[test]
    fn every_permutation_has_a_unipeak_word() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                assert!(reduced_words(&w).unwrap().iter().any(ReducedWord::is_unipeak), "{w}");
                let u = unipeak_word(&w);
                assert!(u.is_unipeak());
                assert_eq!(u.permutation(), w);
                assert_eq!(u.len(), w.length());
            }
        }
    }

    /// The positive distinguished subexpression is the lexicographically
    /// largest support among reduced subexpressions for `v`.
    #[test]
    fn pds_is_lexicographic_maximum() {
        for n in 1..=4 {
            for w in Permutation::all(n) {
                for word in reduced_words(&w).unwrap() {
                    let l = word.len();
                    for v in Permutation::all(n).into_iter().filter(|v| v.bruhat_leq(&w)) {
                        let best = (0u32..1 << l)
                            .filter_map(|bits| {
                                let support: Vec<usize> = (1..=l).filter(|c| bits >> (c - 1) & 1 == 1).collect();
                                let letters: Vec<usize> = support.iter().map(|&c| word.letter(c)).collect();
                                let p = Permutation::from_word(n, &letters).unwrap();
                                (p == v && support.len() == v.length()).then_some(support)
                            })
                            .max()
                            .unwrap();
                        let m = pds(&v, &word).unwrap();
                        assert_eq!(m.hollow_positions(), best);
                        assert_eq!(m.product(&word), v);
                        assert_eq!(m.solid_positions().len(), w.length() - v.length());
                    }
                }
            }
        }
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_and_length(p in (1usize..8).prop_flat_map(perm_strategy)) {
            let id = Permutation::identity(p.n());
            prop_assert_eq!(p.compose(&p.inverse()), id.clone());
            prop_assert_eq!(p.inverse().length(), p.length());
            prop_assert!(id.bruhat_leq(&p));
            let w = unipeak_word(&p);
            prop_assert_eq!(w.permutation(), p);
        }

        #[test]
        fn simple_multiplication_sides(p in (2usize..8).prop_flat_map(perm_strategy), h in 1usize..7) {
            let h = 1 + (h - 1) % (p.n() - 1);
            let s = Permutation::from_word(p.n(), &[h]).unwrap();
            prop_assert_eq!(p.times_simple(h), p.compose(&s));
            prop_assert_eq!(p.simple_times(h), s.compose(&p));
        }
    }
}
