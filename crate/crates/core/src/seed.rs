//! Types shared by both seed constructions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::{Permutation, ReducedWord, SubexpressionMask};
use crate::shapes::MinorIndex;

/// Product of integer powers of chamber minors, keyed by chamber index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentMonomial(BTreeMap<usize, i64>);

impl LaurentMonomial {
    pub fn one() -> Self {
        LaurentMonomial::default()
    }

    pub fn var(c: usize) -> Self {
        LaurentMonomial(BTreeMap::from([(c, 1)]))
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut m = LaurentMonomial::one();
        for (c, e) in exps {
            m.add(c, e);
        }
        m
    }

    fn add(&mut self, c: usize, e: i64) {
        let x = self.0.entry(c).or_insert(0);
        *x += e;
        if *x == 0 {
            self.0.remove(&c);
        }
    }

    pub fn exponent(&self, c: usize) -> i64 {
        self.0.get(&c).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<usize, i64> {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &LaurentMonomial) -> LaurentMonomial {
        self.mul_pow(other, 1)
    }

    pub fn div(&self, other: &LaurentMonomial) -> LaurentMonomial {
        self.mul_pow(other, -1)
    }

    /// `self * other^k`.
    pub fn mul_pow(&self, other: &LaurentMonomial, k: i64) -> LaurentMonomial {
        let mut m = self.clone();
        for (&c, &e) in &other.0 {
            m.add(c, e * k);
        }
        m
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.0.iter().map(|(c, e)| if *e == 1 { format!("D{c}") } else { format!("D{c}^{e}") }).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Quiver on labelled vertices with arrow multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<usize>,
    frozen: BTreeSet<usize>,
    arrows: BTreeMap<(usize, usize), u32>,
}

impl Quiver {
    /// Arrows from a skew-symmetric count: `signed(a, b) > 0` gives that
    /// many arrows `a -> b`. Arrows between frozen vertices are dropped.
    pub fn from_signed(vertices: Vec<usize>, frozen: BTreeSet<usize>, signed: impl Fn(usize, usize) -> i64) -> Self {
        let mut arrows = BTreeMap::new();
        for &a in &vertices {
            for &b in &vertices {
                let k = signed(a, b);
                if k > 0 {
                    arrows.insert((a, b), k as u32);
                }
            }
        }
        Quiver::from_arrows(vertices, frozen, arrows)
    }

    /// Arrows as given, minus those between frozen vertices.
    pub fn from_arrows(
        vertices: Vec<usize>,
        frozen: BTreeSet<usize>,
        mut arrows: BTreeMap<(usize, usize), u32>,
    ) -> Self {
        arrows.retain(|&(a, b), k| *k > 0 && !(frozen.contains(&a) && frozen.contains(&b)));
        Quiver { vertices, frozen, arrows }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn frozen(&self) -> &BTreeSet<usize> {
        &self.frozen
    }

    pub fn is_frozen(&self, v: usize) -> bool {
        self.frozen.contains(&v)
    }

    pub fn arrows(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.arrows
    }

    pub fn count(&self, a: usize, b: usize) -> u32 {
        self.arrows.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Arrows `a -> b` minus arrows `b -> a`.
    pub fn signed(&self, a: usize, b: usize) -> i64 {
        self.count(a, b) as i64 - self.count(b, a) as i64
    }

    pub fn loops(&self) -> Vec<usize> {
        self.arrows.keys().filter(|(a, b)| a == b).map(|&(a, _)| a).collect()
    }

    /// Pairs `a < b` joined in both directions, at least one of them mutable.
    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        self.arrows
            .keys()
            .filter(|&&(a, b)| a < b && self.arrows.contains_key(&(b, a)))
            .filter(|&&(a, b)| !(self.is_frozen(a) && self.is_frozen(b)))
            .copied()
            .collect()
    }

    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            frozen: self.frozen.clone(),
            arrows: self.arrows.iter().map(|(&(a, b), &k)| ((b, a), k)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Ingermanson,
    Leclerc,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Ingermanson => "ingermanson",
            Construction::Leclerc => "leclerc",
        })
    }
}

/// A cluster variable labelled by the solid crossing it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterVariable {
    pub label: usize,
    pub frozen: bool,
    /// The variable as a single minor.
    pub minor: MinorIndex,
    /// The variable as a monomial in chamber minors.
    pub monomial: LaurentMonomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub construction: Construction,
    pub v: Permutation,
    pub word: ReducedWord,
    pub mask: SubexpressionMask,
    pub variables: Vec<ClusterVariable>,
    pub quiver: Quiver,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_arithmetic() {
        let a = LaurentMonomial::from_exponents([(1, 2), (3, -1)]);
        let b = LaurentMonomial::var(3);
        assert_eq!(a.mul(&b), LaurentMonomial::from_exponents([(1, 2)]));
        assert!(a.div(&a).is_one());
        assert_eq!(a.to_string(), "D1^2*D3^-1");
    }

    #[test]
    fn frozen_arrows_are_dropped() {
        let q = Quiver::from_signed(vec![1, 2, 3], BTreeSet::from([1, 2]), |a, b| match (a, b) {
            (1, 2) | (2, 3) => 1,
            (2, 1) | (3, 2) => -1,
            _ => 0,
        });
        assert_eq!(q.count(1, 2), 0);
        assert_eq!(q.count(2, 3), 1);
        assert!(q.two_cycles().is_empty() && q.loops().is_empty());
        assert_eq!(q.reversed().count(3, 2), 1);
    }
}
