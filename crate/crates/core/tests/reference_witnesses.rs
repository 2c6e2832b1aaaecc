//! The example witnesses of the previously reported psi_4 table, rows
//! 41..=80, all pass the full certificate suite. The sets are valid even on
//! the rows whose minimum value the reference overstates, so this doubles
//! as a 40-instance cross-validation of the certifiers against independent
//! ground truth.

use cyclesat::verify;
use cyclesat::{Modulus, ResidueSet};

const REFERENCE_WITNESSES: [(u32, &[u32]); 40] = [
    (41, &[1, 5, 11, 30, 36, 40]),
    (42, &[1, 5, 18, 24, 37, 41]),
    (43, &[1, 6, 8, 35, 37, 42]),
    (44, &[1, 7, 18, 26, 37, 43]),
    (45, &[1, 6, 8, 37, 39, 44]),
    (46, &[1, 3, 5, 22, 24, 41, 43, 45]),
    (47, &[1, 3, 13, 34, 44, 46]),
    (48, &[1, 10, 21, 27, 38, 47]),
    (49, &[1, 3, 19, 30, 46, 48]),
    (50, &[1, 3, 14, 25, 36, 47, 49]),
    (51, &[1, 12, 23, 28, 39, 50]),
    (52, &[2, 10, 13, 39, 42, 50]),
    (53, &[1, 3, 5, 7, 11, 42, 46, 48, 50, 52]),
    (54, &[1, 10, 24, 30, 44, 53]),
    (55, &[1, 5, 21, 34, 50, 54]),
    (56, &[1, 3, 7, 26, 30, 49, 53, 55]),
    (57, &[1, 5, 18, 22, 35, 39, 52, 56]),
    (58, &[1, 3, 7, 26, 32, 51, 55, 57]),
    (59, &[1, 5, 11, 17, 42, 48, 54, 58]),
    (60, &[1, 3, 19, 30, 41, 57, 59]),
    (61, &[1, 3, 5, 22, 39, 56, 58, 60]),
    (62, &[1, 5, 18, 31, 44, 57, 61]),
    (63, &[1, 24, 28, 35, 39, 62]),
    (64, &[1, 5, 9, 30, 34, 55, 59, 63]),
    (65, &[1, 3, 5, 22, 24, 41, 43, 60, 62, 64]),
    (66, &[1, 3, 9, 32, 34, 57, 63, 65]),
    (67, &[1, 3, 24, 28, 39, 43, 64, 66]),
    (68, &[1, 3, 13, 34, 55, 65, 67]),
    (69, &[1, 3, 5, 19, 50, 64, 66, 68]),
    (70, &[1, 3, 26, 30, 40, 44, 67, 69]),
    (71, &[1, 3, 7, 26, 45, 64, 68, 70]),
    (72, &[1, 6, 8, 35, 37, 64, 66, 71]),
    (73, &[1, 3, 15, 17, 56, 58, 70, 72]),
    (74, &[1, 7, 13, 30, 44, 61, 67, 73]),
    (75, &[1, 3, 5, 29, 46, 70, 72, 74]),
    (76, &[1, 3, 14, 18, 58, 62, 73, 75]),
    (77, &[1, 3, 13, 23, 54, 64, 74, 76]),
    (78, &[1, 12, 17, 61, 66, 77]),
    (79, &[1, 3, 13, 29, 50, 66, 76, 78]),
    (80, &[1, 3, 13, 34, 46, 67, 77, 79]),
];

#[test]
fn all_reference_witnesses_certify() {
    for (n, members) in REFERENCE_WITNESSES {
        let s = ResidueSet::from_members(Modulus::new(n), members.iter().copied()).unwrap();
        let set_report = verify::certify_symmetric_complete_sumfree(&s, 4).unwrap();
        assert!(set_report.overall(), "n={n}: {set_report}");
        let prop_report = verify::certify_proposition(&s, 4).unwrap();
        assert!(prop_report.overall(), "n={n}: {prop_report}");
    }
}

#[test]
fn reference_witness_sizes_are_upper_bounds() {
    // each witness bounds psi from above; the search may only improve on it
    use cyclesat::search::{psi_search, SearchOptions, SearchOutcome};
    for (n, members) in REFERENCE_WITNESSES {
        let r = psi_search(n, 4, &SearchOptions::default()).unwrap();
        match r.outcome {
            SearchOutcome::Found { psi, .. } => {
                assert!(
                    psi <= members.len() as u32,
                    "n={n}: search returned {psi}, witness of size {} exists",
                    members.len()
                );
            }
            other => panic!("n={n} did not resolve: {other:?}"),
        }
    }
}
