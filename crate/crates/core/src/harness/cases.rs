use rand::seq::index::sample;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::minors::rng;
use crate::perm::{reduced_words, Permutation, ReducedWord};
use crate::wiring::WiringDiagram;

/// Largest `n` enumerated exhaustively.
pub const EXHAUSTIVE_GUARD: usize = 5;

/// A pair `v <= w` with a unipeak reduced word for `w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Case {
    pub v: Permutation,
    pub word: ReducedWord,
}

impl Case {
    pub fn diagram(&self) -> Result<WiringDiagram> {
        WiringDiagram::new(&self.v, &self.word)
    }
}

/// Every case for `S_n`: `w` lexicographically, then its unipeak words, then `v`.
pub fn enumerate_cases(n: usize) -> Result<Vec<Case>> {
    if n > EXHAUSTIVE_GUARD {
        return Err(Error::GuardExceeded { what: "exhaustive enumeration", n, max: EXHAUSTIVE_GUARD });
    }
    let perms = Permutation::all(n);
    let mut out = Vec::new();
    for w in &perms {
        let below: Vec<&Permutation> = perms.iter().filter(|v| v.bruhat_leq(w)).collect();
        for word in reduced_words(w)?.into_iter().filter(ReducedWord::is_unipeak) {
            out.extend(below.iter().map(|&v| Case { v: v.clone(), word: word.clone() }));
        }
    }
    Ok(out)
}

/// `count` distinct cases drawn uniformly from the enumeration, in enumeration order.
pub fn sample_cases(n: usize, count: usize, seed: u64) -> Result<Vec<Case>> {
    let all = enumerate_cases(n)?;
    let mut idx = sample(&mut rng(seed), all.len(), count.min(all.len())).into_vec();
    idx.sort_unstable();
    Ok(idx.into_iter().map(|i| all[i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_cases(1).unwrap().len(), 1);
        let two = enumerate_cases(2).unwrap();
        assert_eq!(two.len(), 3);
        assert!(two[0].word.is_empty());
        assert!(matches!(enumerate_cases(6), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_cases(4, 10, 7).unwrap();
        assert_eq!(a, sample_cases(4, 10, 7).unwrap());
        assert_eq!(a.len(), 10);
    }
}
