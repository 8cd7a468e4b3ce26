//! The sum-of-products category: composition against the container
//! oracle, products, coproducts, exponentials (both routes), currying,
//! evaluation, and isomorphism search.

use std::collections::BTreeMap;

use findist::category::{Budget, FiniteCategory};
use findist::dist::{self, DistCat, DistMorphism, DistObject, SizeCaps};
use findist::presented::fixtures;
use findist::Error;

fn terminal_base() -> findist::PresentedCategory {
    fixtures::terminal()
}

fn obj(positions: &[usize]) -> DistObject<String> {
    dist::container_object(&"*".to_string(), positions)
}

#[test]
fn identity_absorbs_on_both_sides() {
    let base = terminal_base();
    let a = obj(&[2, 1]);
    let b = obj(&[1, 2]);
    let id_a = dist::identity(&base, &a).unwrap();
    let id_b = dist::identity(&base, &b).unwrap();
    for h in dist::enumerate_hom(&base, &a, &b, Budget::default()).unwrap() {
        assert_eq!(dist::compose(&base, &id_b, &h).unwrap(), h);
        assert_eq!(dist::compose(&base, &h, &id_a).unwrap(), h);
    }
}

/// Independent container-composition oracle: shape maps compose forward,
/// position maps backward.
fn oracle_compose(
    g: &BTreeMap<String, (String, BTreeMap<String, String>)>,
    f: &BTreeMap<String, (String, BTreeMap<String, String>)>,
) -> BTreeMap<String, (String, BTreeMap<String, String>)> {
    let mut out = BTreeMap::new();
    for (j, (jm, fpos)) in f {
        let (jd, gpos) = &g[jm];
        let mut pos = BTreeMap::new();
        for (i2, i1) in gpos {
            pos.insert(i2.clone(), fpos[i1].clone());
        }
        out.insert(j.clone(), (jd.clone(), pos));
    }
    out
}

fn strip_components(m: &DistMorphism<String, String>) -> BTreeMap<String, (String, BTreeMap<String, String>)> {
    m.table
        .iter()
        .map(|(j, (j2, inner))| {
            (
                j.clone(),
                (
                    j2.clone(),
                    inner.iter().map(|(i2, (i, _))| (i2.clone(), i.clone())).collect(),
                ),
            )
        })
        .collect()
}

#[test]
fn composition_matches_container_oracle_exhaustively() {
    let base = terminal_base();
    let x = obj(&[1, 2]);
    let y = obj(&[2]);
    let z = obj(&[1, 1]);
    let fs = dist::enumerate_hom(&base, &x, &y, Budget::default()).unwrap();
    let gs = dist::enumerate_hom(&base, &y, &z, Budget::default()).unwrap();
    assert!(!fs.is_empty() && !gs.is_empty());
    for f in &fs {
        for g in &gs {
            let composed = dist::compose(&base, g, f).unwrap();
            assert_eq!(
                strip_components(&composed),
                oracle_compose(&strip_components(g), &strip_components(f))
            );
        }
    }
}

#[test]
fn associativity_exhaustive_over_two_object_base() {
    let base = fixtures::arrow();
    let cat = DistCat::new(&base, Budget::default(), SizeCaps::default());
    // A deterministic slice of the grid keeps this fast but real.
    let objects: Vec<_> = cat
        .objects()
        .into_iter()
        .filter(|o| o.shape_count() >= 1 && o.total_positions() <= 2)
        .take(8)
        .collect();
    let mut triples = 0u64;
    for x in &objects {
        for y in &objects {
            let fs = cat.hom(x, y).unwrap();
            if fs.is_empty() || fs.len() > 16 {
                continue;
            }
            for z in &objects {
                let gs = cat.hom(y, z).unwrap();
                if gs.is_empty() || gs.len() > 16 {
                    continue;
                }
                for w in &objects {
                    let hs = cat.hom(z, w).unwrap();
                    if hs.len() > 16 {
                        continue;
                    }
                    for f in &fs {
                        for g in &gs {
                            for h in &hs {
                                triples += 1;
                                let left = dist::compose(
                                    &base,
                                    &dist::compose(&base, h, g).unwrap(),
                                    f,
                                )
                                .unwrap();
                                let right = dist::compose(
                                    &base,
                                    h,
                                    &dist::compose(&base, g, f).unwrap(),
                                )
                                .unwrap();
                                assert_eq!(left, right);
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(triples > 500, "only {triples} triples");
}

#[test]
fn coproduct_examples() {
    let base = terminal_base();
    let a = obj(&[1]);
    let b = obj(&[2]);
    let (sum, injections) = dist::coproduct(&base, &[a.clone(), b.clone()]).unwrap();
    assert_eq!(sum.shape_count(), 2);
    assert_eq!(sum.shape_profile(), vec![1, 2]);
    // Injections compose with cotuples: [ι0, ι1] = id.
    let from_parts = dist::cotuple(&base, &injections).unwrap();
    assert_eq!(from_parts, dist::identity(&base, &sum).unwrap());
}

#[test]
fn product_examples_from_profiles() {
    let base = terminal_base();
    // (1 shape ▷ 1 position) × (1 shape ▷ 2 positions) = 1 shape ▷ 3.
    let (p, _) = dist::product(&base, &[obj(&[1]), obj(&[2])]).unwrap();
    assert_eq!(p.shape_count(), 1);
    assert_eq!(p.shape_profile(), vec![3]);
    // X = shapes {a ▷ 1, b ▷ 0}: X × X has 4 shapes of sizes 2,1,1,0.
    let x = obj(&[1, 0]);
    let (xx, _) = dist::product(&base, &[x.clone(), x]).unwrap();
    assert_eq!(xx.shape_profile(), vec![2, 1, 1, 0]);
    // Nullary product: one shape, no positions.
    let (t, _) = dist::product::<findist::PresentedCategory>(&base, &[]).unwrap();
    assert_eq!(t, DistObject::terminal());
}

#[test]
fn projections_commute_with_tupling() {
    let base = terminal_base();
    let x = obj(&[2]);
    let y = obj(&[1, 1]);
    let w = obj(&[1]);
    let (_, projections) = dist::product(&base, &[x.clone(), y.clone()]).unwrap();
    for u in dist::enumerate_hom(&base, &w, &x, Budget::default()).unwrap() {
        for v in dist::enumerate_hom(&base, &w, &y, Budget::default()).unwrap() {
            let t = dist::tuple(&base, &[u.clone(), v.clone()]).unwrap();
            assert_eq!(dist::compose(&base, &projections[0], &t).unwrap(), u);
            assert_eq!(dist::compose(&base, &projections[1], &t).unwrap(), v);
        }
    }
}

#[test]
fn hom_counts_follow_the_container_formula() {
    let base = terminal_base();
    // (1 ▷ 2) → (1 ▷ 2): 2^2 = 4.
    assert_eq!(dist::count_hom(&base, &obj(&[2]), &obj(&[2])).unwrap(), 4);
    // From the initial object: exactly one morphism.
    assert_eq!(
        dist::count_hom(&base, &DistObject::initial(), &obj(&[3, 1])).unwrap(),
        1
    );
    // Into the initial object from a nonempty source: none.
    assert_eq!(
        dist::count_hom(&base, &obj(&[1]), &DistObject::initial()).unwrap(),
        0
    );
}

#[test]
fn exponential_nine_shape_instance() {
    let base = terminal_base();
    let a = obj(&[2]);
    let b = obj(&[2]);
    let exp = dist::exponential(&base, &a, &b, Budget::default()).unwrap();
    assert_eq!(exp.shape_count(), 9);
    let mut profile = exp.shape_profile();
    profile.sort_unstable();
    assert_eq!(profile, vec![0, 0, 0, 0, 1, 1, 1, 1, 2]);
}

#[test]
fn exponential_from_terminal_is_isomorphic_to_target() {
    let base = terminal_base();
    for b in [obj(&[1]), obj(&[2, 0]), DistObject::initial(), obj(&[1, 1, 2])] {
        let exp = dist::exponential(&base, &DistObject::terminal(), &b, Budget::default()).unwrap();
        assert!(
            dist::iso_check(&base, &exp, &b, Budget::default()).unwrap().is_some(),
            "terminal ⇒ {b:?} should collapse"
        );
    }
}

#[test]
fn exponential_into_initial_is_initial() {
    let base = terminal_base();
    let a = obj(&[1]);
    let exp = dist::exponential(&base, &a, &DistObject::initial(), Budget::default()).unwrap();
    assert_eq!(exp.shape_count(), 0);
}

#[test]
fn exponential_budget_is_enforced() {
    let base = terminal_base();
    let a = obj(&[2, 2]);
    let b = obj(&[2, 2]);
    let err = dist::exponential(&base, &a, &b, Budget(10)).unwrap_err();
    assert!(matches!(err, Error::EnumerationBudgetExceeded { .. }));
}

#[test]
fn inductive_exponential_agrees_on_the_nine_shape_instance() {
    let base = terminal_base();
    let a = obj(&[2]);
    let b = obj(&[2]);
    let closed = dist::exponential(&base, &a, &b, Budget::default()).unwrap();
    let inductive = dist::exponential_inductive(&base, &a, &b, Budget::default()).unwrap();
    assert_eq!(inductive.shape_count(), 9);
    assert!(dist::iso_check(&base, &closed, &inductive, Budget::default())
        .unwrap()
        .is_some());
}

#[test]
fn inductive_exponential_from_generator_of_base_terminal() {
    // Over the one-object base the generator embeds the base terminal;
    // the exponential gains one summand per morphism into the generator.
    let base = terminal_base();
    let a = DistObject::generator("*".to_string());
    let b = DistObject::generator("*".to_string());
    let inductive = dist::exponential_inductive(&base, &a, &b, Budget::default()).unwrap();
    // hom(A, B) has exactly one element, so A ⇒ B ≅ 1 ⊔ B.
    assert_eq!(inductive.shape_count(), 2);
    let mut profile = inductive.shape_profile();
    profile.sort_unstable();
    assert_eq!(profile, vec![0, 1]);
    let closed = dist::exponential(&base, &a, &b, Budget::default()).unwrap();
    assert!(dist::iso_check(&base, &closed, &inductive, Budget::default())
        .unwrap()
        .is_some());
}

#[test]
fn inductive_exponential_rejects_multi_shape_sources() {
    let base = terminal_base();
    let a = obj(&[1, 1]);
    let err = dist::exponential_inductive(&base, &a, &obj(&[1]), Budget::default()).unwrap_err();
    assert!(matches!(err, Error::ShapeRestriction(_)));
}

#[test]
fn inductive_exponential_into_initial_is_initial() {
    let base = terminal_base();
    let a = obj(&[2]);
    let e = dist::exponential_inductive(&base, &a, &DistObject::initial(), Budget::default())
        .unwrap();
    assert_eq!(e.shape_count(), 0);
}

#[test]
fn curry_is_a_bijection_on_the_fixed_instance() {
    let base = terminal_base();
    let x = obj(&[1]);
    let a = obj(&[2]);
    let b = obj(&[2]);
    let (xa, _) = dist::product(&base, &[x.clone(), a.clone()]).unwrap();
    let exp = dist::exponential(&base, &a, &b, Budget::default()).unwrap();

    let lhs = dist::enumerate_hom(&base, &xa, &b, Budget::default()).unwrap();
    let rhs = dist::enumerate_hom(&base, &x, &exp, Budget::default()).unwrap();
    assert_eq!(lhs.len(), 9);
    assert_eq!(rhs.len(), 9);

    let mut images = std::collections::BTreeSet::new();
    for h in &lhs {
        let k = dist::curry(&base, &x, &a, h, Budget::default()).unwrap();
        assert!(rhs.contains(&k), "curried morphism must be in the hom-set");
        assert!(images.insert(k.clone()), "curry must be injective");
        assert_eq!(
            dist::uncurry(&base, &x, &a, &b, &k, Budget::default()).unwrap(),
            *h
        );
    }
    assert_eq!(images.len(), rhs.len(), "curry must be surjective");
    for k in &rhs {
        let h = dist::uncurry(&base, &x, &a, &b, k, Budget::default()).unwrap();
        assert_eq!(dist::curry(&base, &x, &a, &h, Budget::default()).unwrap(), *k);
    }
}

#[test]
fn curry_with_terminal_source_reads_off_components() {
    let base = terminal_base();
    let x = DistObject::terminal();
    let a = obj(&[1]);
    let b = obj(&[1]);
    let (xa, _) = dist::product(&base, &[x.clone(), a.clone()]).unwrap();
    for h in dist::enumerate_hom(&base, &xa, &b, Budget::default()).unwrap() {
        let k = dist::curry(&base, &x, &a, &h, Budget::default()).unwrap();
        // The chosen exponential shape defers exactly the positions that
        // `h` fills from the X side.
        let (shape_label, inner) = &k.table[&"()".to_string()];
        let deferred = inner.len();
        let from_x = h.table[&"((),s0)".to_string()]
            .1
            .values()
            .filter(|(i, _)| i.starts_with("(0,"))
            .count();
        assert_eq!(deferred, from_x);
        assert!(shape_label.starts_with('{'));
    }
}

#[test]
fn eval_satisfies_the_triangle_identity() {
    let base = terminal_base();
    let x = obj(&[1, 1]);
    let a = obj(&[2]);
    let b = obj(&[1, 1]);
    let (xa, _) = dist::product(&base, &[x.clone(), a.clone()]).unwrap();
    let eval = dist::eval_morphism(&base, &a, &b, Budget::default()).unwrap();
    let id_a = dist::identity(&base, &a).unwrap();
    for h in dist::enumerate_hom(&base, &xa, &b, Budget::default()).unwrap() {
        let k = dist::curry(&base, &x, &a, &h, Budget::default()).unwrap();
        let paired = dist::product_of_morphisms(&base, &[k, id_a.clone()]).unwrap();
        assert_eq!(dist::compose(&base, &eval, &paired).unwrap(), h);
    }
}

#[test]
fn eval_with_terminal_source_collapses() {
    let base = terminal_base();
    let a = DistObject::terminal();
    let b = obj(&[2]);
    // (A ⇒ B) × 1 → B is a bijection on shapes when A is terminal.
    let eval = dist::eval_morphism(&base, &a, &b, Budget::default()).unwrap();
    let exp = dist::exponential(&base, &a, &b, Budget::default()).unwrap();
    assert_eq!(eval.src.shape_count(), exp.shape_count());
    assert_eq!(eval.dst, b);
}

#[test]
fn curry_requires_the_declared_product_source() {
    let base = terminal_base();
    let x = obj(&[1]);
    let a = obj(&[2]);
    let b = obj(&[2]);
    // A morphism from A × X (wrong order) must be rejected.
    let (ax, _) = dist::product(&base, &[a.clone(), x.clone()]).unwrap();
    let h = dist::enumerate_hom(&base, &ax, &b, Budget::default())
        .unwrap()
        .pop()
        .unwrap();
    let err = dist::curry(&base, &x, &a, &h, Budget::default()).unwrap_err();
    assert!(matches!(err, Error::TypeMismatch(_)));
}

#[test]
fn adjunction_counts_match_on_an_asymmetric_instance() {
    let base = fixtures::arrow();
    let x = DistObject::new(vec![("s".into(), vec![("p".into(), "a".to_string())])]).unwrap();
    let a = DistObject::new(vec![(
        "t".into(),
        vec![("q".into(), "b".to_string()), ("r".into(), "a".into())],
    )])
    .unwrap();
    let b = DistObject::new(vec![
        ("u".into(), vec![("v".into(), "b".to_string())]),
        ("w".into(), vec![]),
    ])
    .unwrap();
    let (xa, _) = dist::product(&base, &[x.clone(), a.clone()]).unwrap();
    let exp = dist::exponential(&base, &a, &b, Budget::default()).unwrap();
    let lhs = dist::count_hom(&base, &xa, &b).unwrap();
    let rhs = dist::count_hom(&base, &x, &exp).unwrap();
    assert_eq!(lhs, rhs);
    // And elementwise.
    let homs = dist::enumerate_hom(&base, &xa, &b, Budget::default()).unwrap();
    for h in &homs {
        let k = dist::curry(&base, &x, &a, h, Budget::default()).unwrap();
        assert_eq!(
            dist::uncurry(&base, &x, &a, &b, &k, Budget::default()).unwrap(),
            *h
        );
    }
}

fn hom_scan_iso(
    base: &findist::PresentedCategory,
    x: &DistObject<String>,
    y: &DistObject<String>,
) -> bool {
    for f in dist::enumerate_hom(base, x, y, Budget::default()).unwrap() {
        for g in dist::enumerate_hom(base, y, x, Budget::default()).unwrap() {
            if dist::compose(base, &g, &f).unwrap() == dist::identity(base, x).unwrap()
                && dist::compose(base, &f, &g).unwrap() == dist::identity(base, y).unwrap()
            {
                return true;
            }
        }
    }
    false
}

#[test]
fn iso_check_agrees_with_hom_scan_on_tiny_instances() {
    // Over the base with a nontrivial isomorphism.
    let iso_base = fixtures::iso_pair();
    let mk = |entry: &str| {
        DistObject::new(vec![("s".into(), vec![("p".into(), entry.to_string())])]).unwrap()
    };
    for (x, y) in [(mk("a"), mk("b")), (mk("a"), mk("a"))] {
        let structured = dist::iso_check(&iso_base, &x, &y, Budget::default()).unwrap();
        assert_eq!(structured.is_some(), hom_scan_iso(&iso_base, &x, &y));
    }
    // Over the one-object base, mismatched and permuted profiles.
    let base = terminal_base();
    for (x, y) in [
        (obj(&[1]), obj(&[2])),
        (obj(&[1, 2]), obj(&[2, 1])),
        (obj(&[0, 2]), obj(&[2, 0])),
        (obj(&[2, 2]), obj(&[2, 1])),
    ] {
        let structured = dist::iso_check(&base, &x, &y, Budget::default()).unwrap();
        assert_eq!(structured.is_some(), hom_scan_iso(&base, &x, &y));
    }
}

#[test]
fn iso_check_finds_base_isomorphisms() {
    let base = fixtures::iso_pair();
    let x = DistObject::new(vec![("s".into(), vec![("p".into(), "a".to_string())])]).unwrap();
    let y = DistObject::new(vec![("s".into(), vec![("p".into(), "b".to_string())])]).unwrap();
    let (f, g) = dist::iso_check(&base, &x, &y, Budget::default())
        .unwrap()
        .unwrap();
    assert_eq!(dist::compose(&base, &g, &f).unwrap(), dist::identity(&base, &x).unwrap());
    assert_eq!(dist::compose(&base, &f, &g).unwrap(), dist::identity(&base, &y).unwrap());
}

#[test]
fn hom_enumeration_budget_errors_loudly() {
    let base = terminal_base();
    let a = obj(&[3, 3, 3]);
    let b = obj(&[3, 3, 3]);
    let err = dist::enumerate_hom(&base, &a, &b, Budget(100)).unwrap_err();
    assert!(matches!(err, Error::EnumerationBudgetExceeded { .. }));
}
