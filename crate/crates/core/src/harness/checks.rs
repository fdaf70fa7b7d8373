use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::ingermanson::{label_set, pivot, IngermansonSeed};
use crate::leclerc::LeclercSeed;
use crate::linalg::{int_mat_mul, Q};
use crate::minors::{eval_minor, rng, translates, verify_component_factorization, ExactMatrix};
use crate::perm::{reduced_words, IndexSet, Permutation, ReducedWord};
use crate::prep::{generic_rank, hom_space, module_from_shape};
use crate::shapes::{skew_shape, MinorIndex, SkewShape};
use crate::wiring::{ChamberRef, WiringDiagram};

use super::cases::Case;

pub(crate) type Outcome = std::result::Result<(), String>;

/// Everything a per-case check may need.
pub struct CaseData {
    pub case: Case,
    pub diagram: WiringDiagram,
    pub ing: IngermansonSeed,
    pub lec: LeclercSeed,
}

impl CaseData {
    pub fn new(case: &Case) -> Result<Self> {
        let diagram = case.diagram()?;
        let ing = IngermansonSeed::new(&diagram)?;
        let lec = LeclercSeed::new(&diagram)?;
        Ok(CaseData { case: case.clone(), diagram, ing, lec })
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn swap_values(set: &IndexSet, j: usize) -> IndexSet {
    IndexSet::new(set.iter().map(|x| {
        if x == j {
            j + 1
        } else if x == j + 1 {
            j
        } else {
            x
        }
    }))
}

fn shape_of(m: &MinorIndex, n: usize) -> std::result::Result<SkewShape, String> {
    skew_shape(&m.rows, &m.cols, n).map_err(|e| e.to_string())
}

/// Greedy subexpression equals the lexicographically largest reduced support.
pub(crate) fn pds(d: &CaseData) -> Outcome {
    let (word, mask, v) = (&d.case.word, d.diagram.mask(), &d.case.v);
    let l = word.len();
    ensure(mask.product(word) == *v, || "hollow letters do not multiply to v".into())?;
    ensure(mask.solid_positions().len() == word.permutation().length() - v.length(), || {
        "wrong number of solid letters".into()
    })?;
    if l <= 14 {
        let best = (0u32..1 << l)
            .filter(|bits| bits.count_ones() as usize == v.length())
            .filter_map(|bits| {
                let support: Vec<usize> = (1..=l).filter(|c| bits >> (c - 1) & 1 == 1).collect();
                let letters: Vec<usize> = support.iter().map(|&c| word.letter(c)).collect();
                (Permutation::from_word(word.n(), &letters).ok()? == *v).then_some(support)
            })
            .max();
        ensure(best.as_ref() == Some(&mask.hollow_positions()), || format!("lexicographic maximum is {best:?}"))?;
    }
    Ok(())
}

/// Variable counts, unitriangularity, the inverse, and labelling of factors.
pub(crate) fn structure(d: &CaseData) -> Outcome {
    let expected = d.case.word.len() - d.case.v.length();
    ensure(d.ing.seed.variables.len() == expected && d.lec.seed.variables.len() == expected, || {
        format!("{} and {} variables, expected {expected}", d.ing.seed.variables.len(), d.lec.seed.variables.len())
    })?;
    let m = &d.ing.appearance;
    let solid = m.solid();
    for c in 1..=d.diagram.len() {
        for &s in solid {
            let x = m.get(c, s);
            ensure(x == 0 || x == 1, || format!("entry ({c},{s}) = {x}"))?;
            ensure(c <= s || x == 0, || format!("entry ({c},{s}) below the diagonal"))?;
            ensure(c != s || x == 1, || format!("diagonal entry {c} is zero"))?;
        }
    }
    let block = m.solid_block();
    let id: Vec<Vec<i64>> = (0..block.len()).map(|i| (0..block.len()).map(|j| (i == j) as i64).collect()).collect();
    ensure(int_mat_mul(&d.ing.inverse, &block) == id, || "inverse is not exact".into())?;
    let keys = d.lec.chamber_keys().map_err(|e| e.to_string())?;
    for &s in solid {
        let later: BTreeSet<&MinorIndex> = keys[s..].iter().flatten().collect();
        let own: Vec<&MinorIndex> = keys[s - 1].iter().filter(|k| !later.contains(k)).collect();
        ensure(own == vec![&d.lec.variables[&s].key], || format!("chamber {s} introduces {own:?}"))?;
    }
    let distinct: BTreeSet<&MinorIndex> = solid.iter().flat_map(|&s| keys[s - 1].iter()).collect();
    ensure(distinct.len() == expected, || format!("{} distinct factors in solid chambers", distinct.len()))
}

/// Pivots only move up in Gale order as crossings are passed.
pub(crate) fn pivot_monotone(d: &CaseData) -> Outcome {
    for k in 1..=d.diagram.len() {
        let (u, u2) = (d.diagram.v_prefix(k), d.diagram.v_prefix(k + 1));
        for c in 1..=k {
            let l = label_set(&d.diagram, c, k);
            let (a, b) = (pivot(&l, u).map_err(|e| e.to_string())?, pivot(&l, u2).map_err(|e| e.to_string())?);
            ensure(a.gale_leq(&b).unwrap_or(false), || format!("pivot of {l} drops from {a} to {b} at crossing {k}"))?;
        }
    }
    Ok(())
}

pub(crate) fn appearance(d: &CaseData) -> Outcome {
    ensure(d.ing.appearance == d.lec.appearance, || "appearance matrices differ".into())?;
    ensure(d.ing.frozen == d.lec.frozen, || format!("frozen {:?} vs {:?}", d.ing.frozen, d.lec.frozen))
}

/// Path endpoint equals the truncation index, and the minors correspond.
pub(crate) fn variables(d: &CaseData) -> Outcome {
    let n = d.diagram.n();
    for x in &d.ing.seed.variables {
        let s = x.label;
        let path = &d.ing.paths[&s];
        let lv = &d.lec.variables[&s];
        ensure(path.end_height == lv.q, || format!("crossing {s}: path ends at {} but q = {}", path.end_height, lv.q))?;
        ensure(Some(lv.q) == lv.key.cols.last(), || {
            format!("crossing {s}: q differs from the last column of {}", lv.key)
        })?;
        ensure(shape_of(&lv.truncation, n)?.canonical_key() == lv.key, || {
            format!("crossing {s}: truncation is not the factor")
        })?;
        let relabelled =
            MinorIndex::new(d.diagram.v().image(&lv.truncation.rows), d.diagram.w().image(&lv.truncation.cols));
        ensure(relabelled == x.minor, || format!("crossing {s}: {relabelled} vs {}", x.minor))?;
        for pair in path.steps.windows(2) {
            let ((_, h0), (k, h1)) = (pair[0], pair[1]);
            ensure(h1 >= h0 || d.diagram.is_hollow(k), || {
                format!("crossing {s}: path descends at solid crossing {k}")
            })?;
        }
    }
    Ok(())
}

pub(crate) fn quiver(d: &CaseData) -> Outcome {
    let (a, b) = (&d.ing.seed.quiver, &d.lec.seed.quiver);
    ensure(a == b, || format!("quivers differ: {:?} vs {:?}", a.arrows(), b.arrows()))?;
    ensure(b.loops().is_empty(), || format!("loops at {:?}", b.loops()))?;
    ensure(b.two_cycles().is_empty(), || format!("2-cycles {:?}", b.two_cycles()))
}

/// Three index conditions on the first chamber decide whether the last
/// variable appears there.
pub(crate) fn base_case(d: &CaseData) -> Outcome {
    let l = d.diagram.len();
    if l == 0 || d.diagram.is_hollow(l) {
        return Ok(());
    }
    let (j, k) = (d.case.word.letter(l), d.case.word.letter(1));
    let winv = d.diagram.w().inverse().prefix_image(k);
    let vinv = d.diagram.v().inverse().prefix_image(k);
    let conds = !winv.contains(j)
        && winv.contains(j + 1)
        && vinv.contains(j)
        && !vinv.contains(j + 1)
        && winv.count_le(j - 1) == vinv.count_le(j - 1);
    let (mi, ml) = (d.ing.appearance.get(1, l) == 1, d.lec.appearance.get(1, l) == 1);
    ensure(conds == mi && mi == ml, || format!("conditions {conds}, pivot jump {mi}, factor {ml}"))?;
    let lset = label_set(&d.diagram, 1, l);
    let jump = !swap_values(&vinv, j).gale_leq(&lset).unwrap_or(false);
    ensure(jump == conds, || format!("comparison with {lset} gives {jump}"))?;
    let key = &d.lec.variables[&l].key;
    ensure(*key == MinorIndex::new(IndexSet::new([j]), IndexSet::new([j + 1])), || format!("last factor is {key}"))
}

/// Desnanot-Jacobi around every hollow crossing on random matrices, and
/// the three-term relation with its vanishing term on upper triangular ones.
pub(crate) fn hollow_relation(d: &CaseData, trials: usize, seed: u64) -> Outcome {
    let n = d.diagram.n();
    let mut r = rng(seed);
    for x in d.diagram.crossings().iter().filter(|x| x.hollow) {
        let (c, i) = (x.index, x.height);
        let (u, w) = (d.diagram.v_suffix(c + 1), d.diagram.w_suffix(c + 1));
        let (us, ws) = (u.times_simple(i), w.times_simple(i));
        let at = |a: &Permutation, b: &Permutation, k: usize| MinorIndex::new(a.prefix_image(k), b.prefix_image(k));
        let (up, down, right, left) = (at(u, w, i + 1), at(u, w, i - 1), at(u, w, i), at(&us, &ws, i));
        let (e, f) = (at(&us, w, i), at(u, &ws, i));
        ensure(up == d.diagram.right_minor(x.up) && down == d.diagram.right_minor(x.down), || {
            format!("crossing {c}: neighbour labels")
        })?;
        ensure(right == d.diagram.right_minor(x.right) && left == d.diagram.chamber(c).right, || {
            format!("crossing {c}: side labels")
        })?;
        ensure(!e.rows.gale_leq(&e.cols).unwrap_or(true), || format!("crossing {c}: {e} is Gale comparable"))?;
        for _ in 0..trials {
            let ev = |m: &ExactMatrix, k: &MinorIndex| eval_minor(m, k).map_err(|er| er.to_string());
            let g = ExactMatrix::random_general(n, &mut r);
            let lhs = ev(&g, &up)? * ev(&g, &down)?;
            let rhs = ev(&g, &right)? * ev(&g, &left)? - ev(&g, &e)? * ev(&g, &f)?;
            ensure(lhs == rhs, || format!("crossing {c}: Desnanot-Jacobi fails"))?;
            let b = ExactMatrix::random_upper_triangular(n, &mut r);
            ensure(ev(&b, &e)?.is_zero(), || format!("crossing {c}: {e} does not vanish"))?;
            ensure(ev(&b, &up)? * ev(&b, &down)? == ev(&b, &right)? * ev(&b, &left)?, || {
                format!("crossing {c}: relation fails")
            })?;
        }
    }
    Ok(())
}

/// Maps between the modules of the chambers around each solid crossing have
/// the predicted generic images.
pub(crate) fn strip_maps(d: &CaseData, seed: u64) -> Outcome {
    let n = d.diagram.n();
    for x in d.diagram.crossings().iter().filter(|x| !x.hollow) {
        let (i, h) = (x.index, x.height);
        let (a, a2) = (x.falling, x.rising);
        let (b, b2) = (d.diagram.v_suffix(i).apply(h + 1), d.diagram.v_suffix(i).apply(h));
        let lm = d.diagram.chamber(i).right.clone();
        let (rm, um, dm) = (d.diagram.right_minor(x.right), d.diagram.right_minor(x.up), d.diagram.right_minor(x.down));
        let one = |k: usize| IndexSet::new([k]);
        ensure(lm.rows == rm.rows && lm.cols == rm.cols.difference(&one(a)).union(&one(a2)), || {
            format!("crossing {i}: right labels")
        })?;
        ensure(um == MinorIndex::new(lm.rows.union(&one(b)), lm.cols.union(&one(a))), || {
            format!("crossing {i}: upper labels")
        })?;
        ensure(dm == MinorIndex::new(lm.rows.difference(&one(b2)), lm.cols.difference(&one(a2))), || {
            format!("crossing {i}: lower labels")
        })?;
        let module = |m: &MinorIndex| shape_of(m, n).and_then(|s| module_from_shape(&s).map_err(|e| e.to_string()));
        let (ml, mr, mu, md) = (module(&lm)?, module(&rm)?, module(&um)?, module(&dm)?);
        let image = |from, to| hom_space(from, to).map(|basis| generic_rank(&basis, seed)).map_err(|e| e.to_string());
        let fill = |v: Vec<usize>| if v.is_empty() { vec![0; n.saturating_sub(1)] } else { v };
        ensure(fill(image(&mr, &ml)?) == mr.dims(), || format!("crossing {i}: no injection from the right chamber"))?;
        ensure(fill(image(&ml, &mu)?) == mu.dims(), || format!("crossing {i}: no surjection onto the upper chamber"))?;
        // the kernel is a strip of contents b', b' + 1, .., present whenever the chamber has content b'
        let got = fill(image(&ml, &md)?);
        let lost: Vec<usize> = ml.dims().iter().zip(&got).map(|(&x, &y)| x.saturating_sub(y)).collect();
        let support: Vec<usize> = (1..n).filter(|&k| lost[k - 1] > 0).collect();
        let strip = lost.iter().all(|&x| x <= 1)
            && support.first() == (b2 < n && ml.dims()[b2 - 1] > 0).then_some(&b2)
            && support.windows(2).all(|p| p[1] == p[0] + 1);
        ensure(strip && got.iter().zip(md.dims()).all(|(&x, y)| x <= y), || {
            format!("crossing {i}: image {got:?} in the lower chamber {dm} from {lm}, strip at {b2}")
        })?;
    }
    Ok(())
}

/// Shape of every spread: right ends other than the crossing itself are
/// hollow, spreads propagate right and up, and one cusp type never occurs.
pub(crate) fn spread_boundary(d: &CaseData) -> Outcome {
    let inside = |r: ChamberRef, spr: &BTreeSet<usize>| r.index().is_some_and(|c| spr.contains(&c));
    for x in d.ing.seed.variables.iter().filter(|x| !x.frozen) {
        let c = x.label;
        let spr = d.ing.appearance.spread(c);
        let b = d.diagram.spread_boundary(&spr).map_err(|e| e.to_string())?;
        ensure(b.right_ends.contains(&c), || format!("spread of {c} does not end at {c}"))?;
        for &r in &b.right_ends {
            ensure(r == c || d.diagram.is_hollow(r), || format!("spread of {c} ends at solid crossing {r}"))?;
        }
        for &s in spr.iter().filter(|&&s| s < c && !d.diagram.is_hollow(s)) {
            let cr = d.diagram.crossing(s);
            ensure(inside(cr.right, &spr) && inside(cr.up, &spr), || {
                format!("spread of {c} does not propagate from {s}")
            })?;
        }
        for (k, s) in &b.cusps {
            ensure(!(s.up && s.right && s.down && !s.left), || format!("spread of {c} has a forbidden cusp at {k}"))?;
        }
    }
    Ok(())
}

pub(crate) fn exchange_ratio(d: &CaseData) -> Outcome {
    for x in d.ing.seed.variables.iter().filter(|x| !x.frozen) {
        d.ing.exchange_ratio(x.label).map_err(|e| e.to_string())?;
    }
    for x in d.diagram.crossings().iter().filter(|x| x.hollow) {
        let t = d.ing.appearance.cluster_exponents(&d.ing.crossing_monomial(x.index));
        ensure(t.iter().all(|&e| e == 0), || format!("hollow crossing {} has a nontrivial monomial", x.index))?;
    }
    Ok(())
}

/// One-letter truncations on either side keep the shared appearance entries.
pub(crate) fn stability(d: &CaseData) -> Outcome {
    let l = d.diagram.len();
    if l == 0 {
        return Ok(());
    }
    let word = &d.case.word;
    let build = |v: Permutation, w: ReducedWord| -> std::result::Result<CaseData, String> {
        CaseData::new(&Case { v, word: w }).map_err(|e| e.to_string())
    };
    let right = build(d.diagram.v_prefix(l).clone(), word.drop_last().expect("nonempty"))?;
    let first = word.letter(1);
    let v_left = if d.diagram.is_hollow(1) { d.case.v.simple_times(first) } else { d.case.v.clone() };
    let left = build(v_left, word.drop_first().expect("nonempty"))?;
    for (other, shift) in [(&right, 0usize), (&left, 1usize)] {
        for &s in d.ing.appearance.solid() {
            if s <= shift || s - shift > other.diagram.len() {
                continue;
            }
            for c in shift + 1..=l.min(other.diagram.len() + shift) {
                let (c2, s2) = (c - shift, s - shift);
                ensure(other.ing.appearance.get(c2, s2) == d.ing.appearance.get(c, s), || {
                    format!("{} truncation changes entry ({c},{s})", if shift == 0 { "right" } else { "left" })
                })?;
                ensure(other.lec.appearance.get(c2, s2) == d.lec.appearance.get(c, s), || {
                    format!("{} truncation changes factor entry ({c},{s})", if shift == 0 { "right" } else { "left" })
                })?;
            }
        }
    }
    Ok(())
}

/// Right chamber minors factor into the variables they contain, evaluated
/// on random unitriangular matrices.
pub(crate) fn factor_evaluation(d: &CaseData, trials: usize, seed: u64) -> Outcome {
    let mut r = rng(seed);
    let n = d.diagram.n();
    for _ in 0..trials {
        let x = ExactMatrix::random_unitriangular(n, &mut r);
        let values: Vec<(usize, Q)> = d
            .lec
            .variables
            .values()
            .map(|v| eval_minor(&x, &v.key).map(|q| (v.crossing, q)))
            .collect::<Result<_>>()
            .map_err(|e| e.to_string())?;
        for c in 1..=d.diagram.len() {
            let lhs = eval_minor(&x, &d.diagram.chamber(c).right).map_err(|e| e.to_string())?;
            let rhs =
                values.iter().filter(|(s, _)| d.lec.appearance.get(c, *s) == 1).fold(Q::one(), |acc, (_, q)| acc * q);
            ensure(lhs == rhs, || format!("chamber {c} does not factor"))?;
        }
    }
    Ok(())
}

/// Every permutation of `S_n` has a unipeak reduced word.
pub(crate) fn unipeak_existence(n: usize) -> Outcome {
    for w in Permutation::all(n) {
        let words = reduced_words(&w).map_err(|e| e.to_string())?;
        ensure(words.iter().any(ReducedWord::is_unipeak), || format!("{w} has no unipeak word"))?;
    }
    Ok(())
}

/// Factorization, translation invariance and separation of minors on
/// unitriangular matrices, for every Gale-comparable pair in `S_n`.
pub(crate) fn minor_identities(n: usize, trials: usize, seed: u64) -> Outcome {
    let mut pairs = Vec::new();
    for h in 0..=n {
        let subsets = IndexSet::subsets(n, h);
        for i in &subsets {
            for j in subsets.iter().filter(|j| i.gale_leq(j).unwrap_or(false)) {
                pairs.push((i.clone(), j.clone()));
            }
        }
    }
    let err = |e: crate::error::Error| e.to_string();
    for (k, (i, j)) in pairs.iter().enumerate() {
        let s = seed.wrapping_add(k as u64);
        if let Some(f) = verify_component_factorization(i, j, n, trials, s).map_err(err)? {
            return Err(format!("factorization: {}", f.detail));
        }
        let key = skew_shape(i, j, n).map_err(err)?.canonical_key();
        let mut r = rng(s);
        let samples: Vec<ExactMatrix> = (0..trials).map(|_| ExactMatrix::random_unitriangular(n, &mut r)).collect();
        for t in translates(i, j, n) {
            ensure(skew_shape(&t.rows, &t.cols, n).map_err(err)?.canonical_key() == key, || {
                format!("translate {t} of {i},{j} changes key")
            })?;
            for x in &samples {
                let a = eval_minor(x, &MinorIndex::new(i.clone(), j.clone())).map_err(err)?;
                ensure(eval_minor(x, &t).map_err(err)? == a, || format!("translate {t} of {i},{j} changes value"))?;
            }
        }
    }
    if n <= 4 {
        let mut r = rng(seed ^ 0x5eed);
        let samples: Vec<ExactMatrix> =
            (0..trials.clamp(1, 20)).map(|_| ExactMatrix::random_unitriangular(n, &mut r)).collect();
        let keyed: Vec<(MinorIndex, Vec<Q>)> = pairs
            .iter()
            .map(|(i, j)| {
                let key = skew_shape(i, j, n)?.canonical_key();
                let vals = samples.iter().map(|x| eval_minor(x, &key)).collect::<Result<Vec<_>>>()?;
                Ok((key, vals))
            })
            .collect::<Result<_>>()
            .map_err(err)?;
        for (a, va) in &keyed {
            for (b, vb) in &keyed {
                ensure(a == b || va != vb, || format!("{a} and {b} agree on every sample"))?;
            }
        }
    }
    Ok(())
}
