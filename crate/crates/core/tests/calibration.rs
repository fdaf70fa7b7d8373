//! The half-arrow orientation and the morphism direction are the only
//! choices under which the two quivers agree and the exchange ratios read
//! off the crossings match the quiver.

use richardson_core::enumerate_cases;
use richardson_core::ingermanson::{HalfArrowOrientation, IngermansonSeed, WIRING_ORIENTATION};
use richardson_core::leclerc::{LeclercSeed, MORPHISMS_POINT_FORWARD};

#[test]
fn orientation_is_pinned_by_small_cases() {
    let cases = enumerate_cases(3).unwrap();
    let mut passing = Vec::new();
    for o in HalfArrowOrientation::all() {
        for forward in [true, false] {
            let ok = cases.iter().all(|case| {
                let d = case.diagram().unwrap();
                let lec = LeclercSeed::new(&d).unwrap();
                let Ok(ing) = IngermansonSeed::with_orientation(&d, o) else { return false };
                let target = if forward { lec.seed.quiver.clone() } else { lec.seed.quiver.reversed() };
                ing.seed.quiver == target
                    && ing.seed.variables.iter().filter(|x| !x.frozen).all(|x| ing.exchange_ratio(x.label).is_ok())
            });
            if ok {
                passing.push((o, forward));
            }
        }
    }
    assert_eq!(passing, vec![(WIRING_ORIENTATION, MORPHISMS_POINT_FORWARD)]);
}
