//! JSON and DOT output for seeds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{IndexSet, Permutation, ReducedWord, SubexpressionMask};
use crate::seed::{ClusterVariable, Construction, LaurentMonomial, Quiver, Seed};
use crate::shapes::MinorIndex;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct SeedDoc {
    schema: u32,
    construction: Construction,
    n: usize,
    v: Permutation,
    word: Vec<usize>,
    mask: String,
    variables: Vec<VariableDoc>,
    quiver: QuiverDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct VariableDoc {
    label: usize,
    frozen: bool,
    rows: IndexSet,
    cols: IndexSet,
    monomial: LaurentMonomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct QuiverDoc {
    vertices: Vec<usize>,
    arrows: Vec<[usize; 3]>,
}

fn parse_mask(s: &str) -> Result<SubexpressionMask> {
    s.chars()
        .map(|c| match c {
            'o' => Ok(true),
            'x' => Ok(false),
            other => Err(Error::Parse(format!("mask character {other:?}"))),
        })
        .collect::<Result<Vec<bool>>>()
        .map(SubexpressionMask::from_hollow)
}

/// Pretty JSON with a fixed key order.
pub fn seed_to_json(seed: &Seed) -> String {
    let doc = SeedDoc {
        schema: SCHEMA,
        construction: seed.construction,
        n: seed.v.n(),
        v: seed.v.clone(),
        word: seed.word.letters().to_vec(),
        mask: seed.mask.to_string(),
        variables: seed
            .variables
            .iter()
            .map(|x| VariableDoc {
                label: x.label,
                frozen: x.frozen,
                rows: x.minor.rows.clone(),
                cols: x.minor.cols.clone(),
                monomial: x.monomial.clone(),
            })
            .collect(),
        quiver: QuiverDoc {
            vertices: seed.quiver.vertices().to_vec(),
            arrows: seed.quiver.arrows().iter().map(|(&(a, b), &k)| [a, b, k as usize]).collect(),
        },
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

pub fn seed_from_json(text: &str) -> Result<Seed> {
    let doc: SeedDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.schema != SCHEMA {
        return Err(Error::Parse(format!("unsupported schema {}", doc.schema)));
    }
    if doc.v.n() != doc.n {
        return Err(Error::DimensionMismatch { expected: doc.n, found: doc.v.n() });
    }
    let word = ReducedWord::new(doc.n, doc.word)?;
    let mask = parse_mask(&doc.mask)?;
    if mask.len() != word.len() {
        return Err(Error::SizeMismatch { left: mask.len(), right: word.len() });
    }
    let frozen: BTreeSet<usize> = doc.variables.iter().filter(|x| x.frozen).map(|x| x.label).collect();
    let arrows: BTreeMap<(usize, usize), u32> = doc.quiver.arrows.iter().map(|&[a, b, k]| ((a, b), k as u32)).collect();
    let variables = doc
        .variables
        .into_iter()
        .map(|x| ClusterVariable {
            label: x.label,
            frozen: x.frozen,
            minor: MinorIndex::new(x.rows, x.cols),
            monomial: x.monomial,
        })
        .collect();
    Ok(Seed {
        construction: doc.construction,
        v: doc.v,
        word,
        mask,
        variables,
        quiver: Quiver::from_arrows(doc.quiver.vertices, frozen, arrows),
    })
}

/// Graphviz digraph of the quiver; frozen vertices are boxes.
pub fn seed_to_dot(seed: &Seed) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", seed.construction);
    for x in &seed.variables {
        let shape = if x.frozen { "box" } else { "ellipse" };
        let _ = writeln!(out, "  {} [shape={shape}, label=\"{}\\n{}\"];", x.label, x.label, x.minor);
    }
    for (&(a, b), &k) in seed.quiver.arrows() {
        for _ in 0..k {
            let _ = writeln!(out, "  {a} -> {b};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingermanson::IngermansonSeed;
    use crate::leclerc::LeclercSeed;
    use crate::wiring::WiringDiagram;

    fn diagram(v: &str, n: usize, word: &[usize]) -> WiringDiagram {
        WiringDiagram::new(&Permutation::from_digits(v).unwrap(), &ReducedWord::new(n, word.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn round_trip() {
        let d = diagram("12534", 5, &[4, 3, 2, 1, 4, 3, 2, 3, 4]);
        for seed in [IngermansonSeed::new(&d).unwrap().seed, LeclercSeed::new(&d).unwrap().seed] {
            assert_eq!(seed_from_json(&seed_to_json(&seed)).unwrap(), seed);
        }
    }

    #[test]
    fn empty_seed() {
        let d = diagram("21", 2, &[1]);
        let json = seed_to_json(&IngermansonSeed::new(&d).unwrap().seed);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["variables"], serde_json::json!([]));
        assert_eq!(value["quiver"]["arrows"], serde_json::json!([]));
        assert_eq!(value["mask"], "o");
    }

    #[test]
    fn constructions_share_exponents_and_relabel_minors() {
        let d = diagram("12534", 5, &[4, 3, 2, 1, 4, 3, 2, 3, 4]);
        let (ing, lec) = (IngermansonSeed::new(&d).unwrap(), LeclercSeed::new(&d).unwrap());
        let (a, b) = (&ing.seed, &lec.seed);
        assert_eq!(a.quiver, b.quiver);
        for (x, y) in a.variables.iter().zip(&b.variables) {
            assert_eq!((x.label, x.frozen, &x.monomial), (y.label, y.frozen, &y.monomial));
            let relabelled = MinorIndex::new(d.v().image(&y.minor.rows), d.w().image(&y.minor.cols));
            assert_eq!(x.minor, relabelled);
        }
    }

    #[test]
    fn dot_boxes_frozen_vertices() {
        let d = diagram("12", 2, &[1]);
        let dot = seed_to_dot(&LeclercSeed::new(&d).unwrap().seed);
        assert!(dot.starts_with("digraph leclerc {"));
        assert!(dot.contains("1 [shape=box"));
    }

    #[test]
    fn bad_mask_is_rejected() {
        assert!(parse_mask("xq").is_err());
    }
}
