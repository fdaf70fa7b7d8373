//! Inputs shared by the benchmarks.

use richardson_core::{Permutation, ReducedWord, WiringDiagram};

/// A medium case in `S_5` with two hollow crossings.
pub fn example_diagram() -> WiringDiagram {
    let v = Permutation::from_digits("12534").expect("valid permutation");
    let word = ReducedWord::new(5, vec![4, 3, 2, 1, 4, 3, 2, 3, 4]).expect("reduced word");
    WiringDiagram::new(&v, &word).expect("v below w")
}

/// The longest element of `S_n` with its standard unipeak word, above the identity.
pub fn longest_diagram(n: usize) -> WiringDiagram {
    let w0 = Permutation::new((1..=n).rev().collect()).expect("valid permutation");
    WiringDiagram::new(&Permutation::identity(n), &richardson_core::unipeak_word(&w0)).expect("identity is below")
}
