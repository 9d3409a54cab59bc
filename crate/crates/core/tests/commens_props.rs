mod common;

use common::oracles::all_words;
use twobridge::commens::{
    census, commensurable, detectable_hidden_elements, ladder_invariant, minimal_orbifold_cusp,
    ConeLocation, SingularityPattern,
};
use twobridge::{CuspComplex, TwoBridgeWord};

#[test]
fn commensurability_ladders_and_canonical_forms_agree() {
    let words: Vec<TwoBridgeWord> =
        all_words(10).into_iter().filter(|w| !w.is_arithmetic().unwrap()).collect();
    let ladders: Vec<_> = words.iter().map(|w| ladder_invariant(w).unwrap()).collect();
    for i in 0..words.len() {
        for j in i..words.len() {
            let by_form = words[i].canonical_form() == words[j].canonical_form();
            let by_ladder = ladders[i].equivalent(&ladders[j]);
            let verdict = commensurable(&words[i], &words[j]).unwrap().commensurable;
            assert_eq!(by_form, by_ladder, "{} {}", words[i], words[j]);
            assert_eq!(by_form, verdict, "{} {}", words[i], words[j]);
        }
    }
}

#[test]
fn orbifold_cusps_are_pillowcases_with_the_right_singularities() {
    for w in all_words(10) {
        if w.is_arithmetic().unwrap() {
            continue;
        }
        let cx = CuspComplex::build(&w).unwrap();
        let o = minimal_orbifold_cusp(&cx).unwrap();
        assert_eq!(o.signature, "S²(2,2,2,2)", "{w}");
        assert_eq!(o.orbifold_euler_characteristic.0, 0, "{w}");
        assert_eq!(o.cone_points.len(), 4);
        let n = w.syllable_count();
        let expected = if !w.is_palindromic() || n % 2 == 0 {
            SingularityPattern::AtVertices
        } else if w.alpha(n.div_ceil(2)) % 2 == 1 {
            SingularityPattern::OffVertex
        } else {
            SingularityPattern::ValenceTwoVertex
        };
        assert_eq!(o.pattern, expected, "{w}");
        if expected == SingularityPattern::AtVertices {
            for c in &o.cone_points {
                match c.location {
                    ConeLocation::Vertex { quotient_valence, .. } => assert_ne!(quotient_valence, 2),
                    ConeLocation::MeridionalFold => {}
                    other => panic!("{w}: cone point at {other:?}"),
                }
            }
        }
    }
}

#[test]
fn hidden_elements_exist_only_for_three_arithmetic_words() {
    for w in all_words(8) {
        let cx = CuspComplex::build(&w).unwrap();
        let hidden = detectable_hidden_elements(&cx);
        let canon = w.canonical_form();
        let expect_some = [vec![1, 1], vec![1, 1, 1], vec![2, 2]].contains(&canon.syllables().to_vec());
        assert_eq!(!hidden.is_empty(), expect_some, "{w}");
    }
}

#[test]
fn detectable_orders_of_arithmetic_words() {
    for (s, order) in [("RL", 6), ("RLR", 4), ("R2L2", 3)] {
        let cx = CuspComplex::build(&s.parse().unwrap()).unwrap();
        let hidden = detectable_hidden_elements(&cx);
        assert!(
            hidden.iter().any(|e| e.orientation == 1 && e.order == Some(order) && !e.swaps_cusps),
            "{s}"
        );
        assert!(hidden.iter().any(|e| e.orientation == -1), "{s}");
    }
}

#[test]
fn census_to_ten_has_one_nontrivial_class() {
    let report = census(10).unwrap();
    assert_eq!(
        report.summary.non_singleton_classes,
        vec![vec!["RL".to_string(), "R2L2".to_string()]]
    );
    let again = census(10).unwrap();
    assert_eq!(report, again);
}
