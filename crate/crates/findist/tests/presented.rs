//! Validation, dualization and universal-property checks on presented
//! categories.

use std::collections::BTreeMap;

use findist::category::{all_cones, verify_universal, Budget, Cone, FiniteCategory};
use findist::category::ModelCategory;
use findist::models::finset_model;
use findist::presented::{fixtures, MorphismDecl, PresentedCategory};

#[test]
fn terminal_category_passes() {
    let report = fixtures::terminal().validate();
    assert!(report.passed);
    assert!(report.violations.is_empty());
}

#[test]
fn all_fixtures_pass_validation() {
    for cat in [
        fixtures::terminal(),
        fixtures::discrete(2),
        fixtures::arrow(),
        fixtures::parallel_pair(),
        fixtures::iso_pair(),
        fixtures::chain4(),
    ] {
        let report = cat.validate();
        assert!(report.passed, "violations: {:?}", report.violations);
    }
}

#[test]
fn wrong_composite_target_is_a_typing_violation() {
    // compose(g, f) assigned a morphism with the wrong target.
    let cat = PresentedCategory::with_synthesized_identities(
        vec!["a".into(), "b".into(), "c".into()],
        vec![
            MorphismDecl::new("f", "a", "b"),
            MorphismDecl::new("g", "b", "c"),
            MorphismDecl::new("wrong", "a", "b"),
        ],
        vec![("g".into(), "f".into(), "wrong".into())],
    )
    .unwrap();
    let report = cat.validate();
    assert!(!report.passed);
    let v = report
        .violations
        .iter()
        .find(|v| v.law == "compose-typing")
        .expect("typing violation reported");
    assert_eq!(v.witnesses, vec!["g", "f"]);
}

#[test]
fn broken_associativity_is_found_by_exhaustive_enumeration() {
    // A chain whose two associations are pointed at different morphisms.
    let cat = PresentedCategory::with_synthesized_identities(
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        vec![
            MorphismDecl::new("f", "a", "b"),
            MorphismDecl::new("g", "b", "c"),
            MorphismDecl::new("h", "c", "d"),
            MorphismDecl::new("gf", "a", "c"),
            MorphismDecl::new("hg", "b", "d"),
            MorphismDecl::new("hgf", "a", "d"),
            MorphismDecl::new("hgf2", "a", "d"),
        ],
        vec![
            ("g".into(), "f".into(), "gf".into()),
            ("h".into(), "g".into(), "hg".into()),
            ("h".into(), "gf".into(), "hgf".into()),
            ("hg".into(), "f".into(), "hgf2".into()),
        ],
    )
    .unwrap();
    let report = cat.validate();
    assert!(!report.passed);
    let v = report
        .violations
        .iter()
        .find(|v| v.law == "associativity")
        .expect("associativity violation reported");
    assert_eq!(v.witnesses, vec!["h", "g", "f"]);
}

#[test]
fn opposite_is_an_involution() {
    for cat in [
        fixtures::terminal(),
        fixtures::arrow(),
        fixtures::parallel_pair(),
        fixtures::chain4(),
    ] {
        assert_eq!(cat.opposite().opposite(), cat);
    }
}

#[test]
fn opposite_swaps_hom_sets() {
    let cat = fixtures::chain4();
    let op = cat.opposite();
    for a in cat.objects() {
        for b in cat.objects() {
            assert_eq!(
                op.enumerate_hom(a, b).unwrap().len(),
                cat.enumerate_hom(b, a).unwrap().len()
            );
        }
    }
    // The arrow reverses but keeps its id.
    let arrow_op = fixtures::arrow().opposite();
    assert_eq!(arrow_op.enumerate_hom("b", "a").unwrap(), vec!["f"]);
}

#[test]
fn hom_enumeration_is_declaration_ordered() {
    let cat = fixtures::parallel_pair();
    assert_eq!(cat.enumerate_hom("a", "b").unwrap(), vec!["f", "g"]);
    assert_eq!(cat.enumerate_hom("a", "a").unwrap(), vec!["id_a"]);
    assert_eq!(
        fixtures::discrete(2).enumerate_hom("a0", "a1").unwrap(),
        Vec::<String>::new()
    );
}

#[test]
fn product_cone_in_finset_is_universal() {
    let m = finset_model(3);
    let chosen = m.product(&[2, 2]).unwrap();
    let cone = Cone::limit(chosen.object, chosen.legs);
    let apexes: Vec<usize> = (0..=3).collect();
    let candidates = all_cones(&m, &[2, 2], &apexes, cone.direction, Budget::default()).unwrap();
    // One candidate per apex and pair of legs: Σ_{n ≤ 3} (2^n)^2.
    assert_eq!(candidates.len(), 85);
    assert!(verify_universal(&m, &cone, &candidates, Budget::default()).unwrap());
}

#[test]
fn wrong_apex_fails_universality() {
    let m = finset_model(3);
    // Pretend 3 with arbitrary legs is a product of [2, 2].
    let legs = vec![
        m.hom(&3, &2).unwrap()[0].clone(),
        m.hom(&3, &2).unwrap()[1].clone(),
    ];
    let cone = Cone::limit(3, legs);
    let candidates = all_cones(&m, &[2, 2], &[2], cone.direction, Budget::default()).unwrap();
    assert!(!verify_universal(&m, &cone, &candidates, Budget::default()).unwrap());
}

#[test]
fn empty_diagram_terminal_apex_is_universal() {
    let m = finset_model(3);
    let cone = Cone::limit(1, vec![]);
    let apexes: Vec<usize> = (0..=3).collect();
    let candidates = all_cones(&m, &[], &apexes, cone.direction, Budget::default()).unwrap();
    assert!(verify_universal(&m, &cone, &candidates, Budget::default()).unwrap());
}

#[test]
fn mediator_budget_is_enforced() {
    let m = finset_model(10);
    let chosen = m.product(&[10, 10]).unwrap();
    let cone = Cone::limit(chosen.object, chosen.legs);
    let candidates = vec![Cone::limit(
        10,
        vec![m.identity(&10).unwrap(), m.identity(&10).unwrap()],
    )];
    let err = verify_universal(&m, &cone, &candidates, Budget(1000)).unwrap_err();
    assert!(matches!(
        err,
        findist::Error::EnumerationBudgetExceeded { .. }
    ));
}

#[test]
fn verify_universal_agrees_with_direct_mediator_count() {
    // Direct oracle: count commuting mediators by hand and compare.
    let m = finset_model(2);
    let chosen = m.product(&[2, 1]).unwrap();
    let cone = Cone::limit(chosen.object.clone(), chosen.legs.clone());
    let apexes: Vec<usize> = (0..=2).collect();
    let candidates = all_cones(&m, &[2, 1], &apexes, cone.direction, Budget::default()).unwrap();
    for cand in &candidates {
        let mut direct = 0;
        for mediator in m.hom(&cand.apex, &cone.apex).unwrap() {
            let commutes = cone
                .legs
                .iter()
                .zip(&cand.legs)
                .all(|(leg, cleg)| m.compose(leg, &mediator).unwrap() == *cleg);
            if commutes {
                direct += 1;
            }
        }
        assert_eq!(direct, 1, "chosen product must mediate uniquely");
    }
    assert!(verify_universal(&m, &cone, &candidates, Budget::default()).unwrap());
}

#[test]
fn synthesized_identities_close_the_table() {
    let cat = PresentedCategory::with_synthesized_identities(
        vec!["a".into()],
        vec![MorphismDecl::new("e", "a", "a")],
        vec![("e".into(), "e".into(), "e".into())],
    )
    .unwrap();
    assert!(cat.validate().passed);
    let mut identities = BTreeMap::new();
    identities.insert("a".to_string(), "id_a".to_string());
    assert_eq!(cat.identities(), &identities);
}
