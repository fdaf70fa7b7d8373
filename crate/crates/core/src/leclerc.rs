//! Cluster seed built from skew shapes: each chamber's right labels cut out
//! a skew shape, its components are the irreducible factors of the right
//! chamber minor, and the quiver is the Gabriel quiver of the direct sum of
//! the corresponding preprojective modules.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{internal, Result};
use crate::ingermanson::AppearanceMatrix;
use crate::linalg::inverse_unitriangular;
use crate::prep::{gabriel_quiver, module_from_shape, PrepModule};
use crate::seed::{ClusterVariable, Construction, LaurentMonomial, Quiver, Seed};
use crate::shapes::{skew_shape, MinorIndex, SkewShape};
use crate::wiring::WiringDiagram;

/// Fixed by agreement with the pulled-back wiring quiver on every case with
/// `n = 3`: an irreducible morphism `M_i -> M_j` becomes the arrow `i -> j`.
pub const MORPHISMS_POINT_FORWARD: bool = true;

pub fn chamber_shape(diagram: &WiringDiagram, c: usize) -> Result<SkewShape> {
    let r = &diagram.chamber(c).right;
    skew_shape(&r.rows, &r.cols, diagram.n())
}

/// The northeast-most component of a chamber's shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeVariable {
    pub crossing: usize,
    /// Positioned inside the chamber's shape.
    pub shape: SkewShape,
    pub key: MinorIndex,
    /// The right labels of the chamber cut down to `1..=q`.
    pub truncation: MinorIndex,
    /// Least `q` whose cut-down labels give a single connected component.
    pub q: usize,
}

pub fn shape_variable(diagram: &WiringDiagram, d: usize) -> Result<ShapeVariable> {
    let shape = chamber_shape(diagram, d)?;
    let first =
        shape.components().into_iter().next().ok_or_else(|| internal(format!("chamber {d} has an empty shape")))?;
    let key = first.canonical_key();
    let r = &diagram.chamber(d).right;
    let n = diagram.n();
    let q = (1..=n)
        .find(|&q| {
            let (i, j) = (r.rows.truncate(q), r.cols.truncate(q));
            i.len() == j.len() && skew_shape(&i, &j, n).is_ok_and(|s| s.components().len() == 1)
        })
        .ok_or_else(|| internal(format!("no connected truncation for chamber {d}")))?;
    let truncation = MinorIndex::new(r.rows.truncate(q), r.cols.truncate(q));
    Ok(ShapeVariable { crossing: d, shape: first, key, truncation, q })
}

#[derive(Debug, Clone)]
pub struct LeclercSeed {
    pub diagram: WiringDiagram,
    pub variables: BTreeMap<usize, ShapeVariable>,
    pub appearance: AppearanceMatrix,
    pub inverse: Vec<Vec<i64>>,
    pub frozen: BTreeSet<usize>,
    /// Arrow counts of the Gabriel quiver, keyed by variable labels.
    pub gabriel: BTreeMap<(usize, usize), usize>,
    pub seed: Seed,
}

impl LeclercSeed {
    pub fn new(diagram: &WiringDiagram) -> Result<Self> {
        let solid = diagram.solid();
        let mut variables = BTreeMap::new();
        let mut by_key: BTreeMap<MinorIndex, usize> = BTreeMap::new();
        for &d in &solid {
            let x = shape_variable(diagram, d)?;
            if let Some(prev) = by_key.insert(x.key.clone(), d) {
                return Err(internal(format!("crossings {prev} and {d} share the factor {}", x.key)));
            }
            variables.insert(d, x);
        }
        let appearance = factor_appearance(diagram, &solid, &by_key)?;
        let inverse = inverse_unitriangular(&appearance.solid_block())?;
        let frozen = appearance.frozen(diagram);
        let modules: Vec<PrepModule> =
            solid.iter().map(|d| module_from_shape(&variables[d].shape)).collect::<Result<_>>()?;
        let gabriel: BTreeMap<(usize, usize), usize> =
            gabriel_quiver(&modules)?.into_iter().map(|((i, j), k)| ((solid[i], solid[j]), k)).collect();
        let arrows = gabriel
            .iter()
            .map(|(&(a, b), &k)| (if MORPHISMS_POINT_FORWARD { (a, b) } else { (b, a) }, k as u32))
            .collect();
        let quiver = Quiver::from_arrows(solid.clone(), frozen.clone(), arrows);
        let seed_vars = solid
            .iter()
            .enumerate()
            .map(|(j, &d)| ClusterVariable {
                label: d,
                frozen: frozen.contains(&d),
                minor: variables[&d].truncation.clone(),
                monomial: LaurentMonomial::from_exponents(solid.iter().zip(&inverse[j]).map(|(&c, &e)| (c, e))),
            })
            .collect();
        let seed = Seed {
            construction: Construction::Leclerc,
            v: diagram.v().clone(),
            word: diagram.word().clone(),
            mask: diagram.mask().clone(),
            variables: seed_vars,
            quiver,
        };
        Ok(LeclercSeed { diagram: diagram.clone(), variables, appearance, inverse, frozen, gabriel, seed })
    }

    /// Component keys of every chamber's shape, chamber by chamber.
    pub fn chamber_keys(&self) -> Result<Vec<Vec<MinorIndex>>> {
        (1..=self.diagram.len())
            .map(|c| Ok(chamber_shape(&self.diagram, c)?.components().iter().map(SkewShape::canonical_key).collect()))
            .collect()
    }
}

/// Entry `(c, d)` is 1 iff the factor of `d` is a component of chamber `c`.
fn factor_appearance(
    diagram: &WiringDiagram,
    solid: &[usize],
    by_key: &BTreeMap<MinorIndex, usize>,
) -> Result<AppearanceMatrix> {
    let mut entries = vec![vec![0; solid.len()]; diagram.len()];
    for (c, row) in entries.iter_mut().enumerate() {
        for comp in chamber_shape(diagram, c + 1)?.components() {
            let key = comp.canonical_key();
            let d = by_key
                .get(&key)
                .ok_or_else(|| internal(format!("factor {key} of chamber {} is not a variable", c + 1)))?;
            let j = solid.iter().position(|s| s == d).expect("solid label");
            row[j] = 1;
        }
    }
    Ok(AppearanceMatrix::new(solid.to_vec(), entries))
}
