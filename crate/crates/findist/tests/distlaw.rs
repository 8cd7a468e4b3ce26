//! The distributive-law functor and the canonical distributor morphism.

use findist::category::{Budget, FiniteCategory, ModelCategory};
use findist::dist::{self, DistCat, DistObject, SizeCaps};
use findist::distlaw::{
    canonical_distributor, check_distributor_iso, distributor_inverse_finset, enumerate_hom_pos,
    lambda_morphism, lambda_object, pos_compose, pos_identity, DistributorFamily,
    ProdOfSumsObject,
};
use findist::models::{finset_model, lattice_model, FiniteLattice};
use findist::presented::fixtures;

fn pos(rows: &[usize]) -> ProdOfSumsObject<String> {
    ProdOfSumsObject::new(
        rows.iter()
            .enumerate()
            .map(|(j, &n)| {
                (
                    format!("{}", j + 1),
                    (0..n).map(|i| (format!("{i}"), "*".to_string())).collect(),
                )
            })
            .collect(),
    )
    .unwrap()
}

#[test]
fn lambda_object_expands_choice_functions() {
    // Two rows of two options each: four shapes of two positions.
    let l = lambda_object(&pos(&[2, 2]));
    assert_eq!(l.shape_count(), 4);
    assert_eq!(l.shape_profile(), vec![2, 2, 2, 2]);
    assert_eq!(l.outer(), ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
}

#[test]
fn lambda_object_degenerate_cases() {
    // Empty product: the terminal object.
    assert_eq!(lambda_object(&pos(&[])), DistObject::terminal());
    // An empty row empties the whole choice set.
    assert_eq!(lambda_object(&pos(&[2, 0])).shape_count(), 0);
}

#[test]
fn lambda_morphism_on_a_reindexing() {
    // The swap on a single row of two options permutes the two shapes.
    let base = fixtures::terminal();
    let x = pos(&[2]);
    let mut table = std::collections::BTreeMap::new();
    let mut inner = std::collections::BTreeMap::new();
    inner.insert("0".to_string(), ("1".to_string(), "id_*".to_string()));
    inner.insert("1".to_string(), ("0".to_string(), "id_*".to_string()));
    table.insert("1".to_string(), ("1".to_string(), inner));
    let swap = findist::distlaw::ProdOfSumsMorphism::new(x.clone(), x.clone(), table).unwrap();
    let l = lambda_morphism(&swap).unwrap();
    // Shape (0) ↦ shape (1) and vice versa.
    assert_eq!(l.table[&"(0)".to_string()].0, "(1)");
    assert_eq!(l.table[&"(1)".to_string()].0, "(0)");
    let _ = base;
}

#[test]
fn lambda_is_functorial_exhaustively_at_small_size() {
    let base = fixtures::terminal();
    let grid = [pos(&[1]), pos(&[2]), pos(&[1, 1]), pos(&[2, 1])];
    let mut pairs = 0;
    for x in &grid {
        // Identity preservation.
        let id = pos_identity(&base, x).unwrap();
        assert_eq!(
            lambda_morphism(&id).unwrap(),
            dist::identity(&base, &lambda_object(x)).unwrap()
        );
        for y in &grid {
            for z in &grid {
                for g1 in enumerate_hom_pos(&base, x, y, Budget::default()).unwrap() {
                    for g2 in enumerate_hom_pos(&base, y, z, Budget::default()).unwrap() {
                        pairs += 1;
                        let lhs = lambda_morphism(&pos_compose(&base, &g2, &g1).unwrap()).unwrap();
                        let rhs = dist::compose(
                            &base,
                            &lambda_morphism(&g2).unwrap(),
                            &lambda_morphism(&g1).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
    assert!(pairs > 100, "only {pairs} composable pairs");
}

#[test]
fn lambda_matches_products_of_row_sums() {
    let base = fixtures::terminal();
    for x in [pos(&[2, 2]), pos(&[1, 2]), pos(&[2]), pos(&[])] {
        let via_lambda = lambda_object(&x);
        let rows: Vec<DistObject<String>> = x
            .outer()
            .iter()
            .map(|j| {
                let generators: Vec<_> = x
                    .inner(j)
                    .unwrap()
                    .iter()
                    .map(|i| DistObject::generator(x.entry(j, i).unwrap().clone()))
                    .collect();
                dist::coproduct(&base, &generators).unwrap().0
            })
            .collect();
        let via_product = dist::product(&base, &rows).unwrap().0;
        assert_eq!(via_lambda.shape_count(), via_product.shape_count());
        assert!(
            dist::iso_check(&base, &via_lambda, &via_product, Budget::default())
                .unwrap()
                .is_some()
        );
    }
}

#[test]
fn finset_distributor_on_the_nine_element_instance() {
    let m = finset_model(64);
    // Row 1 entries of sizes 1 and 2; row 2 entries of sizes 1, 1, 1.
    let family = DistributorFamily::new(vec![
        (
            "1".into(),
            vec![("0".into(), 1usize), ("1".into(), 2)],
        ),
        (
            "2".into(),
            vec![("0".into(), 1usize), ("1".into(), 1), ("2".into(), 1)],
        ),
    ])
    .unwrap();
    let d = canonical_distributor(&m, &family).unwrap();
    // Both sides have (1+2) × (1+1+1) = 9 elements.
    assert_eq!(m.src(&d), 9);
    assert_eq!(m.dst(&d), 9);
    let dinv = distributor_inverse_finset(&family).unwrap();
    assert_eq!(m.compose(&d, &dinv).unwrap(), m.identity(&9).unwrap());
    assert_eq!(m.compose(&dinv, &d).unwrap(), m.identity(&9).unwrap());
}

#[test]
fn empty_family_distributor_is_invertible() {
    let m = finset_model(4);
    let family = DistributorFamily::<usize>::new(vec![]).unwrap();
    let d = canonical_distributor(&m, &family).unwrap();
    // The one-summand coproduct of the empty product on both sides.
    assert_eq!(m.src(&d), 1);
    assert_eq!(m.dst(&d), 1);
    assert!(check_distributor_iso(&m, &family, Budget::default()).unwrap());
}

#[test]
fn empty_row_family_collapses_to_initial() {
    let m = finset_model(8);
    let family = DistributorFamily::new(vec![
        ("1".into(), vec![("0".into(), 2usize)]),
        ("2".into(), vec![]),
    ])
    .unwrap();
    let d = canonical_distributor(&m, &family).unwrap();
    assert_eq!(m.src(&d), 0);
    assert_eq!(m.dst(&d), 0);
    assert!(check_distributor_iso(&m, &family, Budget::default()).unwrap());
}

#[test]
fn m3_meet_over_join_witness_fails() {
    let model = lattice_model(FiniteLattice::m3());
    // a ∧ (b ∨ c) = a, while (a ∧ b) ∨ (a ∧ c) = 0.
    let family = DistributorFamily::new(vec![
        ("j0".into(), vec![("i0".into(), "a".to_string())]),
        (
            "j1".into(),
            vec![("i0".into(), "b".to_string()), ("i1".into(), "c".to_string())],
        ),
    ])
    .unwrap();
    let d = canonical_distributor(&model, &family).unwrap();
    assert_eq!(model.src(&d), "0");
    assert_eq!(model.dst(&d), "a");
    assert!(!check_distributor_iso(&model, &family, Budget::default()).unwrap());
}

#[test]
fn n5_witness_fails_and_boolean_passes() {
    let n5 = lattice_model(FiniteLattice::n5());
    let family = DistributorFamily::new(vec![
        ("j0".into(), vec![("i0".into(), "c".to_string())]),
        (
            "j1".into(),
            vec![("i0".into(), "a".to_string()), ("i1".into(), "b".to_string())],
        ),
    ])
    .unwrap();
    assert!(!check_distributor_iso(&n5, &family, Budget::default()).unwrap());

    let b4 = lattice_model(FiniteLattice::boolean4());
    let family = DistributorFamily::new(vec![
        ("j0".into(), vec![("i0".into(), "a".to_string())]),
        (
            "j1".into(),
            vec![("i0".into(), "a".to_string()), ("i1".into(), "b".to_string())],
        ),
    ])
    .unwrap();
    assert!(check_distributor_iso(&b4, &family, Budget::default()).unwrap());
}

#[test]
fn distributor_in_the_sum_of_products_model() {
    let base = fixtures::terminal();
    let model = DistCat::new(&base, Budget::default(), SizeCaps::default());
    let family = DistributorFamily::new(vec![
        (
            "j0".into(),
            vec![
                ("i0".into(), DistObject::terminal()),
                ("i1".into(), DistObject::generator("*".to_string())),
            ],
        ),
        (
            "j1".into(),
            vec![("i0".into(), DistObject::terminal())],
        ),
    ])
    .unwrap();
    assert!(check_distributor_iso(&model, &family, Budget::default()).unwrap());
}

#[test]
fn seeded_finset_families_have_two_sided_inverses() {
    // A deterministic sweep standing in for the seeded sample.
    let m = finset_model(64);
    for rows in 0..=2usize {
        for a in 0..=2usize {
            for b in 0..=2usize {
                let family = DistributorFamily::new(
                    (0..rows)
                        .map(|j| {
                            let sizes = if j == 0 { vec![a, b] } else { vec![b] };
                            (
                                format!("j{j}"),
                                sizes
                                    .iter()
                                    .enumerate()
                                    .map(|(i, &s)| (format!("i{i}"), s))
                                    .collect(),
                            )
                        })
                        .collect(),
                )
                .unwrap();
                let d = canonical_distributor(&m, &family).unwrap();
                let dinv = distributor_inverse_finset(&family).unwrap();
                let lhs = m.src(&d);
                let rhs = m.dst(&d);
                assert_eq!(m.compose(&d, &dinv).unwrap(), m.identity(&rhs).unwrap());
                assert_eq!(m.compose(&dinv, &d).unwrap(), m.identity(&lhs).unwrap());
            }
        }
    }
}
