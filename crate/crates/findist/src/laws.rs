//! Law suites: exhaustive grids and seeded samples for every structural
//! property the constructions assert, with deterministic reports.
//!
//! Each suite checks one cluster of properties (category laws, cartesian
//! closure, exponential agreement, universal properties, the
//! distributive law, container consistency, the canonical distributor,
//! the lattice characterization) over instance sets derived purely from
//! the configuration: fixed seed in, byte-identical report out. The
//! command-line front end and the acceptance tests both run these
//! functions.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{
    all_cones, verify_universal, Budget, Cone, ConeDirection, FiniteCategory, ModelCategory,
};
use crate::combinat::Label;
use crate::dist::{self, DistCat, DistMorphism, DistObject, SizeCaps};
use crate::distlaw::{
    canonical_distributor, check_distributor_iso, distributor_inverse_finset, enumerate_hom_pos,
    lambda_morphism, lambda_object, pos_compose, pos_identity, DistributorFamily,
    ProdOfSumsObject,
};
use crate::error::{Error, Result};
use crate::fam::{self, FamCat, FamObject};
use crate::models::{
    enumerate_lattices, finset_model, has_m3_or_n5_sublattice, is_completely_distributive_finite,
    is_distributive_binary, lattice_model, FiniteLattice,
};
use crate::presented::{fixtures, PresentedCategory};

/// Deliberate defects injectable into a suite run, used to exercise the
/// failure-reporting path from tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Perturb one component of every composite in the category-law
    /// suite.
    DistCompose,
}

/// The suites that can be selected for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SuiteName {
    DistCategoryLaws,
    FamLaws,
    CartesianClosure,
    ExponentialAgreement,
    UniversalProperties,
    DistributiveLaw,
    Container,
    Distributor,
    Lattice,
}

impl SuiteName {
    pub fn all() -> Vec<SuiteName> {
        use SuiteName::*;
        vec![
            DistCategoryLaws,
            FamLaws,
            CartesianClosure,
            ExponentialAgreement,
            UniversalProperties,
            DistributiveLaw,
            Container,
            Distributor,
            Lattice,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::DistCategoryLaws => "dist-category-laws",
            SuiteName::FamLaws => "fam-laws",
            SuiteName::CartesianClosure => "cartesian-closure",
            SuiteName::ExponentialAgreement => "exponential-agreement",
            SuiteName::UniversalProperties => "universal-properties",
            SuiteName::DistributiveLaw => "distributive-law",
            SuiteName::Container => "container",
            SuiteName::Distributor => "distributor",
            SuiteName::Lattice => "lattice",
        }
    }

    pub fn parse(name: &str) -> Result<SuiteName> {
        SuiteName::all()
            .into_iter()
            .find(|s| s.as_str() == name)
            .ok_or_else(|| Error::MalformedInput(format!("unknown suite `{name}`")))
    }
}

/// Configuration of a suite run. With a fixed configuration the produced
/// reports are byte-identical across runs.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Cap on outer index sizes of generated objects.
    pub max_outer: usize,
    /// Cap on inner index sizes of generated objects.
    pub max_inner: usize,
    /// Base object pairs with more morphisms than this are skipped when
    /// grids are built.
    pub max_base_homs: u128,
    /// Cap for any single enumeration.
    pub budget: Budget,
    /// Seed for the sampled suites.
    pub seed: u64,
    /// Which suites to run.
    pub suites: Vec<SuiteName>,
    /// Injected defect, if any.
    pub mutation: Mutation,
    /// Skip enumerated hom-sets larger than this in the law grids.
    pub pair_hom_cap: u128,
    /// Cap on unit-law instances per run.
    pub unit_instance_cap: u64,
    /// Cap on associativity triples per run.
    pub triple_instance_cap: u64,
    /// Accepted instances for the cartesian-closure suite.
    pub closure_instances: u64,
    /// Largest hom-set enumerated elementwise in the closure suite.
    pub closure_hom_cap: u128,
    /// Accepted instances for the seeded container/distributor samples.
    pub sample_instances: u64,
    /// Seeded families checked in the sum-of-products model.
    pub dist_model_families: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_outer: 2,
            max_inner: 2,
            max_base_homs: 8,
            budget: Budget::default(),
            seed: 0,
            suites: SuiteName::all(),
            mutation: Mutation::None,
            pair_hom_cap: 600,
            unit_instance_cap: 60_000,
            triple_instance_cap: 25_000,
            closure_instances: 120,
            closure_hom_cap: 512,
            sample_instances: 100,
            dist_model_families: 20,
        }
    }
}

/// Outcome of one checked property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: String,
    pub instances: u64,
    pub passed: bool,
    /// Serialized witness; present exactly when the property failed.
    pub witness: Option<String>,
}

impl PropertyResult {
    fn pass(name: &str, instances: u64) -> Self {
        PropertyResult {
            name: name.into(),
            instances,
            passed: true,
            witness: None,
        }
    }

    fn fail(name: &str, instances: u64, witness: String) -> Self {
        PropertyResult {
            name: name.into(),
            instances,
            passed: false,
            witness: Some(sanitize(&witness)),
        }
    }

    fn from_outcome(name: &str, outcome: LawOutcome) -> Self {
        match outcome.witness {
            None => PropertyResult::pass(name, outcome.instances),
            Some(w) => PropertyResult::fail(name, outcome.instances, w),
        }
    }
}

fn sanitize(witness: &str) -> String {
    witness.replace('\n', "; ")
}

/// One suite's results. Wall time is tracked for the human summary only
/// and never enters the deterministic report lines.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub properties: Vec<PropertyResult>,
    pub wall: std::time::Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn total_instances(&self) -> u64 {
        self.properties.iter().map(|p| p.instances).sum()
    }

    /// Deterministic report lines, sorted by property name.
    pub fn emit_lines(&self) -> Vec<String> {
        let mut props = self.properties.clone();
        props.sort_by(|a, b| a.name.cmp(&b.name));
        props
            .iter()
            .map(|p| {
                let status = if p.passed { "pass" } else { "fail" };
                match &p.witness {
                    None => format!(
                        "prop name={}.{} instances={} status={status}",
                        self.suite, p.name, p.instances
                    ),
                    Some(w) => format!(
                        "prop name={}.{} instances={} status={status} witness={w}",
                        self.suite, p.name, p.instances
                    ),
                }
            })
            .collect()
    }
}

struct LawOutcome {
    instances: u64,
    witness: Option<String>,
}

/// Runs the selected suites against a base category.
pub fn run_selected(base: &PresentedCategory, cfg: &SuiteConfig) -> Result<Vec<Report>> {
    cfg.suites.iter().map(|s| run_suite(*s, base, cfg)).collect()
}

/// Runs one suite against a base category.
pub fn run_suite(name: SuiteName, base: &PresentedCategory, cfg: &SuiteConfig) -> Result<Report> {
    let start = std::time::Instant::now();
    let mut report = match name {
        SuiteName::DistCategoryLaws => dist_category_laws(base, cfg)?,
        SuiteName::FamLaws => fam_laws(base, cfg)?,
        SuiteName::CartesianClosure => cartesian_closure(base, cfg)?,
        SuiteName::ExponentialAgreement => exponential_agreement(base, cfg)?,
        SuiteName::UniversalProperties => universal_properties(base, cfg)?,
        SuiteName::DistributiveLaw => distributive_law(base, cfg)?,
        SuiteName::Container => container(cfg)?,
        SuiteName::Distributor => distributor(cfg)?,
        SuiteName::Lattice => lattice(cfg)?,
    };
    report.wall = start.elapsed();
    Ok(report)
}

// ---------------------------------------------------------------------
// Generic law helpers
// ---------------------------------------------------------------------

type Composer<'c, C> = dyn Fn(
        &<C as FiniteCategory>::Mor,
        &<C as FiniteCategory>::Mor,
    ) -> Result<<C as FiniteCategory>::Mor>
    + 'c;

/// `id ∘ h = h = h ∘ id` over all enumerable hom-sets of the grid,
/// capped deterministically.
fn unit_laws<C: FiniteCategory>(
    cat: &C,
    objects: &[C::Obj],
    cfg: &SuiteConfig,
    composer: &Composer<'_, C>,
) -> Result<LawOutcome> {
    let mut instances = 0u64;
    for x in objects {
        for y in objects {
            if instances >= cfg.unit_instance_cap {
                return Ok(LawOutcome {
                    instances,
                    witness: None,
                });
            }
            let count = cat.hom_count(x, y)?;
            if count == 0 || count > cfg.pair_hom_cap {
                continue;
            }
            let id_x = cat.identity(x)?;
            let id_y = cat.identity(y)?;
            for h in cat.hom(x, y)? {
                instances += 1;
                if composer(&id_y, &h)? != h {
                    return Ok(LawOutcome {
                        instances,
                        witness: Some(format!("identity-left h={}", cat.mor_name(&h))),
                    });
                }
                if composer(&h, &id_x)? != h {
                    return Ok(LawOutcome {
                        instances,
                        witness: Some(format!("identity-right h={}", cat.mor_name(&h))),
                    });
                }
                if instances >= cfg.unit_instance_cap {
                    break;
                }
            }
        }
    }
    Ok(LawOutcome {
        instances,
        witness: None,
    })
}

/// Associativity over all composable triples reachable in the grid,
/// capped deterministically.
fn associativity<C: FiniteCategory>(
    cat: &C,
    objects: &[C::Obj],
    cfg: &SuiteConfig,
    composer: &Composer<'_, C>,
) -> Result<LawOutcome> {
    // Materialize the small hom-sets once.
    let n = objects.len();
    let mut homs: BTreeMap<(usize, usize), Vec<C::Mor>> = BTreeMap::new();
    for (xi, x) in objects.iter().enumerate() {
        for (yi, y) in objects.iter().enumerate() {
            let count = cat.hom_count(x, y)?;
            if count > 0 && count <= cfg.pair_hom_cap {
                homs.insert((xi, yi), cat.hom(x, y)?);
            }
        }
    }
    let mut instances = 0u64;
    for xi in 0..n {
        for yi in 0..n {
            let Some(first) = homs.get(&(xi, yi)) else {
                continue;
            };
            for zi in 0..n {
                let Some(second) = homs.get(&(yi, zi)) else {
                    continue;
                };
                for wi in 0..n {
                    let Some(third) = homs.get(&(zi, wi)) else {
                        continue;
                    };
                    for f in first {
                        for g in second {
                            for h in third {
                                instances += 1;
                                let left = composer(&composer(h, g)?, f)?;
                                let right = composer(h, &composer(g, f)?)?;
                                if left != right {
                                    return Ok(LawOutcome {
                                        instances,
                                        witness: Some(format!(
                                            "associativity f={} g={} h={}",
                                            cat.mor_name(f),
                                            cat.mor_name(g),
                                            cat.mor_name(h)
                                        )),
                                    });
                                }
                                if instances >= cfg.triple_instance_cap {
                                    return Ok(LawOutcome {
                                        instances,
                                        witness: None,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(LawOutcome {
        instances,
        witness: None,
    })
}

// ---------------------------------------------------------------------
// Sum-of-products category laws
// ---------------------------------------------------------------------

/// Redirects one inner component of a composite to the next available
/// option, yielding a deliberately wrong but well-typed morphism.
pub fn perturb_composite(
    base: &PresentedCategory,
    m: &DistMorphism<String, String>,
) -> Result<DistMorphism<String, String>> {
    let mut table = m.table.clone();
    'outer: for j in m.src.outer() {
        let (j2, inner) = table.get_mut(j).expect("validated table");
        let inner_keys: Vec<Label> = inner.keys().cloned().collect();
        for i2 in inner_keys {
            let mut options: Vec<(Label, String)> = Vec::new();
            for i in m.src.inner(j)? {
                for c in base.hom(m.src.entry(j, i)?, m.dst.entry(j2, &i2)?)? {
                    options.push((i.clone(), c));
                }
            }
            if options.len() >= 2 {
                let current = inner[&i2].clone();
                let at = options.iter().position(|o| *o == current).unwrap_or(0);
                inner.insert(i2.clone(), options[(at + 1) % options.len()].clone());
                break 'outer;
            }
        }
    }
    DistMorphism::new(m.src.clone(), m.dst.clone(), table)
}

fn dist_category_laws(base: &PresentedCategory, cfg: &SuiteConfig) -> Result<Report> {
    let caps = SizeCaps {
        max_outer: cfg.max_outer,
        max_inner: cfg.max_inner,
    };
    let cat = DistCat::new(base, cfg.budget, caps);
    let objects = grid_filtered(&cat, cfg)?;
    let mutation = cfg.mutation;
    let composer = move |g: &DistMorphism<String, String>, f: &DistMorphism<String, String>| {
        let composed = dist::compose(base, g, f)?;
        match mutation {
            Mutation::None => Ok(composed),
            Mutation::DistCompose => perturb_composite(base, &composed),
        }
    };
    let unit = unit_laws(&cat, &objects, cfg, &composer)?;
    let assoc = associativity(&cat, &objects, cfg, &composer)?;
    Ok(Report {
        suite: SuiteName::DistCategoryLaws.as_str().into(),
        properties: vec![
            PropertyResult::from_outcome("unit", unit),
            PropertyResult::from_outcome("associativity", assoc),
        ],
        wall: Default::default(),
    })
}

/// The object grid of a sum-of-products category, dropping objects whose
/// entries live over base pairs with oversized hom-sets.
fn grid_filtered(
    cat: &DistCat<'_, PresentedCategory>,
    cfg: &SuiteConfig,
) -> Result<Vec<DistObject<String>>> {
    let base = cat.base;
    let mut big = false;
    for a in base.objects() {
        for b in base.objects() {
            if base.hom_count(&a, &b)? > cfg.max_base_homs {
                big = true;
            }
        }
    }
    if big {
        return Err(Error::EnumerationBudgetExceeded {
            needed: cfg.max_base_homs + 1,
            budget: cfg.max_base_homs as u64,
        });
    }
    Ok(cat.objects())
}

// ---------------------------------------------------------------------
// Family category laws
// ---------------------------------------------------------------------

fn fam_laws(base: &PresentedCategory, cfg: &SuiteConfig) -> Result<Report> {
    let cat = FamCat::new(base, cfg.budget, cfg.max_inner);
    let objects = cat.objects();
    let composer =
        |g: &fam::FamMorphism<String, String>, f: &fam::FamMorphism<String, String>| {
            fam::compose(base, g, f)
        };
    let unit = unit_laws(&cat, &objects, cfg, &composer)?;
    let assoc = associativity(&cat, &objects, cfg, &composer)?;

    // Counting form of the hom-set formula: enumeration length equals
    // the product-of-sums count.
    let mut count_instances = 0u64;
    let mut count_witness = None;
    'counting: for x in &objects {
        for y in &objects {
            let formula: u128 = {
                let mut total = 1u128;
                for i in x.index() {
                    let mut options = 0u128;
                    for j in y.index() {
                        options += base.hom(x.entry(i)?, y.entry(j)?)?.len() as u128;
                    }
                    total = total.saturating_mul(options);
                }
                total
            };
            if formula > cfg.pair_hom_cap {
                continue;
            }
            count_instances += 1;
            if cat.hom(x, y)?.len() as u128 != formula {
                count_witness = Some(format!(
                    "hom-count x={} y={}",
                    cat.obj_name(x),
                    cat.obj_name(y)
                ));
                break 'counting;
            }
        }
    }

    // The singleton embedding is a functor.
    let mut unit_instances = 0u64;
    let mut unit_witness = None;
    'functor: for f in base.morphisms() {
        for g in base.morphisms() {
            if g.src != f.dst {
                continue;
            }
            unit_instances += 1;
            let composite = base.compose_table()[&(g.id.clone(), f.id.clone())].clone();
            let lhs = fam::unit_morphism(base, &composite)?;
            let rhs = fam::compose(
                base,
                &fam::unit_morphism(base, &g.id.clone())?,
                &fam::unit_morphism(base, &f.id.clone())?,
            )?;
            if lhs != rhs {
                unit_witness = Some(format!("unit-functor f={} g={}", f.id, g.id));
                break 'functor;
            }
        }
    }

    // Flattening: counting and the unit law at the level of normalized
    // tables (labels are the evident pair reindexings).
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let base_objects = base.objects();
    let mut flat_instances = 0u64;
    let mut flat_witness = None;
    for _ in 0..cfg.sample_instances {
        let outer = rng.gen_range(0..=cfg.max_outer);
        let mut rows = Vec::new();
        let mut expected = 0usize;
        for j in 0..outer {
            let inner = rng.gen_range(0..=cfg.max_inner);
            expected += inner;
            let entries = (0..inner)
                .map(|i| {
                    (
                        format!("i{i}"),
                        base_objects[rng.gen_range(0..base_objects.len())].clone(),
                    )
                })
                .collect();
            rows.push((format!("j{j}"), FamObject::new(entries).unwrap()));
        }
        let nested = FamObject::new(rows).unwrap();
        let flat = fam::flatten_object(&nested);
        flat_instances += 1;
        if flat.len() != expected {
            flat_witness = Some(format!("flatten-count expected={expected} got={}", flat.len()));
            break;
        }
    }

    let mut unitlaw_instances = 0u64;
    let mut unitlaw_witness = None;
    for x in &objects {
        unitlaw_instances += 1;
        // Flatten of the singleton-of-family: labels (*,i).
        let outer_unit = FamObject::new(vec![("*".into(), x.clone())]).unwrap();
        let flat = fam::flatten_object(&outer_unit);
        let relabeled: Vec<Label> = x.index().iter().map(|i| format!("(*,{i})")).collect();
        let entries_match = flat
            .index()
            .iter()
            .zip(x.index())
            .all(|(fi, xi)| flat.entry(fi).unwrap() == x.entry(xi).unwrap());
        if flat.index() != relabeled.as_slice() || !entries_match {
            unitlaw_witness = Some(format!("flatten-unit x={}", cat.obj_name(x)));
            break;
        }
        // Flatten of the family-of-singletons: labels (i,*).
        let mapped = FamObject::new(
            x.index()
                .iter()
                .map(|i| {
                    Ok((
                        i.clone(),
                        FamObject::singleton(x.entry(i)?.clone()),
                    ))
                })
                .collect::<Result<Vec<_>>>()?,
        )
        .unwrap();
        let flat2 = fam::flatten_object(&mapped);
        let relabeled2: Vec<Label> = x.index().iter().map(|i| format!("({i},*)")).collect();
        if flat2.index() != relabeled2.as_slice() {
            unitlaw_witness = Some(format!("flatten-unit-mapped x={}", cat.obj_name(x)));
            break;
        }
    }

    // The coproduct functor into finite sets preserves chosen products,
    // witnessed by the explicit distributor inverse.
    let finset = finset_model(64);
    let fam_finset = FamCat::new(&finset, cfg.budget, cfg.max_inner);
    let mut pres_instances = 0u64;
    let mut pres_witness = None;
    let mut rng2 = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    for _ in 0..cfg.sample_instances {
        let mk = |rng: &mut ChaCha8Rng| {
            let len = rng.gen_range(0..=3usize);
            FamObject::new(
                (0..len)
                    .map(|i| (format!("i{i}"), rng.gen_range(0..=3usize)))
                    .collect(),
            )
            .unwrap()
        };
        let x = mk(&mut rng2);
        let y = mk(&mut rng2);
        pres_instances += 1;
        let (prod, _) = fam::product(&finset, &[x.clone(), y.clone()])?;
        let sum_of_prod = fam::coproduct_functor(&finset, &prod)?;
        let prod_of_sums = finset
            .product(&[
                fam::coproduct_functor(&finset, &x)?,
                fam::coproduct_functor(&finset, &y)?,
            ])?
            .object;
        let family = DistributorFamily::new(vec![
            (
                "0".to_string(),
                x.index()
                    .iter()
                    .map(|i| Ok((i.clone(), *x.entry(i)?)))
                    .collect::<Result<Vec<_>>>()?,
            ),
            (
                "1".to_string(),
                y.index()
                    .iter()
                    .map(|i| Ok((i.clone(), *y.entry(i)?)))
                    .collect::<Result<Vec<_>>>()?,
            ),
        ])?;
        let d = canonical_distributor(&finset, &family)?;
        let dinv = distributor_inverse_finset(&family)?;
        let ok = finset.src(&d) == sum_of_prod
            && finset.dst(&d) == prod_of_sums
            && finset.compose(&d, &dinv)? == finset.identity(&prod_of_sums)?
            && finset.compose(&dinv, &d)? == finset.identity(&sum_of_prod)?;
        if !ok {
            pres_witness = Some(format!(
                "coproduct-functor x={} y={}",
                fam_finset.obj_name(&x),
                fam_finset.obj_name(&y)
            ));
            break;
        }
    }

    Ok(Report {
        suite: SuiteName::FamLaws.as_str().into(),
        properties: vec![
            PropertyResult::from_outcome("unit", unit),
            PropertyResult::from_outcome("associativity", assoc),
            PropertyResult::from_outcome(
                "hom-count",
                LawOutcome {
                    instances: count_instances,
                    witness: count_witness,
                },
            ),
            PropertyResult::from_outcome(
                "unit-functor",
                LawOutcome {
                    instances: unit_instances,
                    witness: unit_witness,
                },
            ),
            PropertyResult::from_outcome(
                "flatten-count",
                LawOutcome {
                    instances: flat_instances,
                    witness: flat_witness,
                },
            ),
            PropertyResult::from_outcome(
                "flatten-unit",
                LawOutcome {
                    instances: unitlaw_instances,
                    witness: unitlaw_witness,
                },
            ),
            PropertyResult::from_outcome(
                "coproduct-functor-preserves-products",
                LawOutcome {
                    instances: pres_instances,
                    witness: pres_witness,
                },
            ),
        ],
        wall: Default::default(),
    })
}

// ---------------------------------------------------------------------
// Cartesian closure
// ---------------------------------------------------------------------

fn random_object(
    rng: &mut ChaCha8Rng,
    base_objects: &[String],
    max_outer: usize,
    max_inner: usize,
) -> DistObject<String> {
    let shapes = rng.gen_range(0..=max_outer);
    DistObject::new(
        (0..shapes)
            .map(|k| {
                let positions = rng.gen_range(0..=max_inner);
                let inner = (0..positions)
                    .map(|p| {
                        (
                            format!("p{p}"),
                            base_objects[rng.gen_range(0..base_objects.len())].clone(),
                        )
                    })
                    .collect();
                (format!("s{k}"), inner)
            })
            .collect(),
    )
    .unwrap()
}

fn cartesian_closure(base: &PresentedCategory, cfg: &SuiteConfig) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let base_objects = base.objects().to_vec();
    let cat = DistCat::new(
        base,
        cfg.budget,
        SizeCaps {
            max_outer: cfg.max_outer,
            max_inner: cfg.max_inner,
        },
    );

    let mut accepted = 0u64;
    let mut count_pairs = 0u64;
    let mut bijections = 0u64;
    let mut inverses = 0u64;
    let mut triangles = 0u64;
    let mut naturality = 0u64;
    let mut witness: Option<(String, String)> = None; // (property, witness)

    'instances: while accepted < cfg.closure_instances {
        let x = random_object(&mut rng, &base_objects, cfg.max_outer, cfg.max_inner);
        let a = random_object(&mut rng, &base_objects, cfg.max_outer, cfg.max_inner);
        let b = random_object(&mut rng, &base_objects, cfg.max_outer, cfg.max_inner);
        let (xa, _) = dist::product(base, &[x.clone(), a.clone()])?;
        if dist::count_exponent_shapes(base, &a, &b)? > cfg.closure_hom_cap {
            continue;
        }
        let lhs_count = dist::count_hom(base, &xa, &b)?;
        let exp = dist::exponential(base, &a, &b, cfg.budget)?;
        let rhs_count = dist::count_hom(base, &x, &exp)?;
        count_pairs += 1;
        if lhs_count != rhs_count {
            witness = Some((
                "adjunction-count".into(),
                format!(
                    "x={} a={} b={} lhs={lhs_count} rhs={rhs_count}",
                    cat.obj_name(&x),
                    cat.obj_name(&a),
                    cat.obj_name(&b)
                ),
            ));
            break 'instances;
        }
        if lhs_count > cfg.closure_hom_cap {
            continue;
        }
        accepted += 1;

        let lhs = dist::enumerate_hom(base, &xa, &b, cfg.budget)?;
        let rhs = dist::enumerate_hom(base, &x, &exp, cfg.budget)?;
        let rhs_set: std::collections::BTreeSet<_> = rhs.iter().cloned().collect();
        let mut seen = std::collections::BTreeSet::new();
        for h in &lhs {
            let k = dist::curry(base, &x, &a, h, cfg.budget)?;
            bijections += 1;
            if !rhs_set.contains(&k) || !seen.insert(k.clone()) {
                witness = Some((
                    "curry-bijection".into(),
                    format!("h={}", cat.mor_name(h)),
                ));
                break 'instances;
            }
            inverses += 1;
            if dist::uncurry(base, &x, &a, &b, &k, cfg.budget)? != *h {
                witness = Some((
                    "curry-uncurry-inverse".into(),
                    format!("h={}", cat.mor_name(h)),
                ));
                break 'instances;
            }
        }
        if seen.len() != rhs.len() {
            witness = Some((
                "curry-bijection".into(),
                format!("surjectivity x={} a={}", cat.obj_name(&x), cat.obj_name(&a)),
            ));
            break 'instances;
        }
        for k in &rhs {
            inverses += 1;
            let h = dist::uncurry(base, &x, &a, &b, k, cfg.budget)?;
            if dist::curry(base, &x, &a, &h, cfg.budget)? != *k {
                witness = Some((
                    "curry-uncurry-inverse".into(),
                    format!("k={}", cat.mor_name(k)),
                ));
                break 'instances;
            }
        }

        // Triangle identity on a deterministic prefix.
        let eval = dist::eval_morphism(base, &a, &b, cfg.budget)?;
        let id_a = dist::identity(base, &a)?;
        for h in lhs.iter().take(16) {
            triangles += 1;
            let k = dist::curry(base, &x, &a, h, cfg.budget)?;
            let paired = dist::product_of_morphisms(base, &[k, id_a.clone()])?;
            if dist::compose(base, &eval, &paired)? != *h {
                witness = Some(("triangle-identity".into(), format!("h={}", cat.mor_name(h))));
                break 'instances;
            }
        }

        // Naturality in the first argument on seeded samples.
        let x2 = random_object(&mut rng, &base_objects, cfg.max_outer, cfg.max_inner);
        if dist::count_hom(base, &x2, &x)? <= cfg.closure_hom_cap {
            let id_a = dist::identity(base, &a)?;
            for u in dist::enumerate_hom(base, &x2, &x, cfg.budget)?.iter().take(4) {
                for h in lhs.iter().take(4) {
                    naturality += 1;
                    let u_id = dist::product_of_morphisms(base, &[u.clone(), id_a.clone()])?;
                    let lhs_m =
                        dist::curry(base, &x2, &a, &dist::compose(base, h, &u_id)?, cfg.budget)?;
                    let rhs_m = dist::compose(base, &dist::curry(base, &x, &a, h, cfg.budget)?, u)?;
                    if lhs_m != rhs_m {
                        witness = Some((
                            "curry-naturality".into(),
                            format!("u={} h={}", cat.mor_name(u), cat.mor_name(h)),
                        ));
                        break 'instances;
                    }
                }
            }
        }
    }

    // The pinned instance over a one-object base: 1 shape with 1
    // position against 1 shape with 2 positions.
    let mut fixed_instances = 0u64;
    let mut fixed_witness = None;
    if base.objects().len() == 1 {
        fixed_instances = 1;
        let c = base.objects()[0].clone();
        let x = dist::container_object(&c, &[1]);
        let a = dist::container_object(&c, &[2]);
        let b = dist::container_object(&c, &[2]);
        let (xa, _) = dist::product(base, &[x.clone(), a.clone()])?;
        let exp = dist::exponential(base, &a, &b, cfg.budget)?;
        let lhs = dist::count_hom(base, &xa, &b)?;
        let rhs = dist::count_hom(base, &x, &exp)?;
        if lhs != 9 || rhs != 9 {
            fixed_witness = Some(format!("fixed-instance lhs={lhs} rhs={rhs} expected=9"));
        }
    }

    let mut properties = vec![
        PropertyResult::from_outcome(
            "adjunction-count",
            LawOutcome {
                instances: count_pairs,
                witness: witness
                    .as_ref()
                    .filter(|(p, _)| p == "adjunction-count")
                    .map(|(_, w)| w.clone()),
            },
        ),
        PropertyResult::from_outcome(
            "curry-bijection",
            LawOutcome {
                instances: bijections,
                witness: witness
                    .as_ref()
                    .filter(|(p, _)| p == "curry-bijection")
                    .map(|(_, w)| w.clone()),
            },
        ),
        PropertyResult::from_outcome(
            "curry-uncurry-inverse",
            LawOutcome {
                instances: inverses,
                witness: witness
                    .as_ref()
                    .filter(|(p, _)| p == "curry-uncurry-inverse")
                    .map(|(_, w)| w.clone()),
            },
        ),
        PropertyResult::from_outcome(
            "triangle-identity",
            LawOutcome {
                instances: triangles,
                witness: witness
                    .as_ref()
                    .filter(|(p, _)| p == "triangle-identity")
                    .map(|(_, w)| w.clone()),
            },
        ),
        PropertyResult::from_outcome(
            "curry-naturality",
            LawOutcome {
                instances: naturality,
                witness: witness
                    .as_ref()
                    .filter(|(p, _)| p == "curry-naturality")
                    .map(|(_, w)| w.clone()),
            },
        ),
    ];
    if fixed_instances > 0 {
        properties.push(PropertyResult::from_outcome(
            "fixed-instance-nine",
            LawOutcome {
                instances: fixed_instances,
                witness: fixed_witness,
            },
        ));
    }
    Ok(Report {
        suite: SuiteName::CartesianClosure.as_str().into(),
        properties,
        wall: Default::default(),
    })
}

// ---------------------------------------------------------------------
// Exponential agreement (closed vs inductive)
// ---------------------------------------------------------------------

fn exponential_agreement(base: &PresentedCategory, cfg: &SuiteConfig) -> Result<Report> {
    let cat = DistCat::new(
        base,
        cfg.budget,
        SizeCaps {
            max_outer: cfg.max_outer,
            max_inner: cfg.max_inner,
        },
    );
    let grid = cat.objects();
    let sources: Vec<_> = grid
        .iter()
        .filter(|o| o.shape_count() == 1)
        .cloned()
        .collect();

    let mut agree_instances = 0u64;
    let mut agree_witness = None;
    'agree: for a in &sources {
        for b in &grid {
            if dist::count_exponent_shapes(base, a, b)? > cfg.pair_hom_cap {
                continue;
            }
            agree_instances += 1;
            let closed = dist::exponential(base, a, b, cfg.budget)?;
            let inductive = dist::exponential_inductive(base, a, b, cfg.budget)?;
            if dist::iso_check(base, &closed, &inductive, cfg.budget)?.is_none() {
                agree_witness = Some(format!(
                    "a={} b={} closed={} inductive={}",
                    cat.obj_name(a),
                    cat.obj_name(b),
                    cat.obj_name(&closed),
                    cat.obj_name(&inductive)
                ));
                break 'agree;
            }
        }
    }

    // Terminal source: the exponential collapses to the target.
    let mut term_instances = 0u64;
    let mut term_witness = None;
    for b in &grid {
        term_instances += 1;
        let closed = dist::exponential(base, &DistObject::terminal(), b, cfg.budget)?;
        if dist::iso_check(base, &closed, b, cfg.budget)?.is_none() {
            term_witness = Some(format!("b={}", cat.obj_name(b)));
            break;
        }
    }

    // Initial target against a nonempty source: the exponential is
    // initial.
    let mut init_instances = 0u64;
    let mut init_witness = None;
    for a in &sources {
        init_instances += 1;
        let closed = dist::exponential(base, a, &DistObject::initial(), cfg.budget)?;
        let inductive = dist::exponential_inductive(base, a, &DistObject::initial(), cfg.budget)?;
        if closed.shape_count() != 0 || inductive.shape_count() != 0 {
            init_witness = Some(format!("a={}", cat.obj_name(a)));
            break;
        }
    }

    let mut properties = vec![
        PropertyResult::from_outcome(
            "closed-vs-inductive",
            LawOutcome {
                instances: agree_instances,
                witness: agree_witness,
            },
        ),
        PropertyResult::from_outcome(
            "terminal-source",
            LawOutcome {
                instances: term_instances,
                witness: term_witness,
            },
        ),
        PropertyResult::from_outcome(
            "initial-target",
            LawOutcome {
                instances: init_instances,
                witness: init_witness,
            },
        ),
    ];

    // The pinned nine-shape profile over a one-object base.
    if base.objects().len() == 1 {
        let c = base.objects()[0].clone();
        let a = dist::container_object(&c, &[2]);
        let b = dist::container_object(&c, &[2]);
        let closed = dist::exponential(base, &a, &b, cfg.budget)?;
        let mut profile = closed.shape_profile();
        profile.sort_unstable();
        let ok = closed.shape_count() == 9 && profile == vec![0, 0, 0, 0, 1, 1, 1, 1, 2];
        let inductive = dist::exponential_inductive(base, &a, &b, cfg.budget)?;
        let iso = dist::iso_check(base, &closed, &inductive, cfg.budget)?.is_some();
        properties.push(if ok && iso {
            PropertyResult::pass("nine-shape-profile", 1)
        } else {
            PropertyResult::fail(
                "nine-shape-profile",
                1,
                format!("shapes={} profile={profile:?} iso={iso}", closed.shape_count()),
            )
        });
    }

    Ok(Report {
        suite: SuiteName::ExponentialAgreement.as_str().into(),
        properties,
        wall: Default::default(),
    })
}

// ---------------------------------------------------------------------
// Universal properties
// ---------------------------------------------------------------------

fn universal_properties(base: &PresentedCategory, cfg: &SuiteConfig) -> Result<Report> {
    let cat = DistCat::new(
        base,
        cfg.budget,
        SizeCaps {
            max_outer: cfg.max_outer,
            max_inner: cfg.max_inner,
        },
    );
    // A small apex pool keeps the mediator search exhaustive yet fast.
    let grid = cat.objects();
    let pool: Vec<_> = grid
        .iter()
        .filter(|o| o.shape_count() <= 2 && o.total_positions() <= 2)
        .cloned()
        .collect();
    let diagrams: Vec<Vec<DistObject<String>>> = {
        let mut out = vec![vec![]];
        for x in pool.iter().take(4) {
            out.push(vec![x.clone()]);
        }
        for x in pool.iter().take(3) {
            for y in pool.iter().take(3) {
                out.push(vec![x.clone(), y.clone()]);
            }
        }
        out
    };

    let run_side = |direction: ConeDirection| -> Result<LawOutcome> {
        let mut instances = 0u64;
        for diagram in &diagrams {
            let (object, legs) = match direction {
                ConeDirection::Limit => dist::product(base, diagram)?,
                ConeDirection::Colimit => dist::coproduct(base, diagram)?,
            };
            let cone = Cone {
                apex: object,
                legs,
                direction,
            };
            let mut feasible = true;
            for apex in &pool {
                for d in diagram {
                    let count = match direction {
                        ConeDirection::Limit => cat.hom_count(apex, d)?,
                        ConeDirection::Colimit => cat.hom_count(d, apex)?,
                    };
                    if count > cfg.pair_hom_cap {
                        feasible = false;
                    }
                }
                let mediators = match direction {
                    ConeDirection::Limit => cat.hom_count(apex, &cone.apex)?,
                    ConeDirection::Colimit => cat.hom_count(&cone.apex, apex)?,
                };
                if mediators > cfg.pair_hom_cap {
                    feasible = false;
                }
            }
            if !feasible {
                continue;
            }
            let candidates = all_cones(&cat, diagram, &pool, direction, cfg.budget)?;
            instances += candidates.len() as u64;
            if !verify_universal(&cat, &cone, &candidates, cfg.budget)? {
                return Ok(LawOutcome {
                    instances,
                    witness: Some(format!(
                        "diagram=[{}]",
                        diagram
                            .iter()
                            .map(|d| cat.obj_name(d))
                            .collect::<Vec<_>>()
                            .join(",")
                    )),
                });
            }
        }
        Ok(LawOutcome {
            instances,
            witness: None,
        })
    };
    let dist_products = run_side(ConeDirection::Limit)?;
    let dist_coproducts = run_side(ConeDirection::Colimit)?;

    // Family products and coproducts over finite sets.
    let finset = finset_model(2);
    let fam_cat = FamCat::new(&finset, cfg.budget, cfg.max_inner);
    let fam_pool: Vec<FamObject<usize>> = fam_cat
        .objects()
        .into_iter()
        .filter(|o| o.len() <= 2)
        .collect();
    let fam_diagrams: Vec<Vec<FamObject<usize>>> = {
        let mut out = vec![vec![]];
        for x in fam_pool.iter().take(4) {
            out.push(vec![x.clone()]);
        }
        for x in fam_pool.iter().take(3) {
            for y in fam_pool.iter().take(3) {
                out.push(vec![x.clone(), y.clone()]);
            }
        }
        out
    };
    let run_fam = |direction: ConeDirection| -> Result<LawOutcome> {
        let mut instances = 0u64;
        for diagram in &fam_diagrams {
            let (object, legs) = match direction {
                ConeDirection::Limit => fam::product(&finset, diagram)?,
                ConeDirection::Colimit => fam::coproduct(&finset, diagram)?,
            };
            let cone = Cone {
                apex: object,
                legs,
                direction,
            };
            let mut feasible = true;
            for apex in &fam_pool {
                let mediators = match direction {
                    ConeDirection::Limit => fam_cat.hom_count(apex, &cone.apex)?,
                    ConeDirection::Colimit => fam_cat.hom_count(&cone.apex, apex)?,
                };
                if mediators > cfg.pair_hom_cap {
                    feasible = false;
                }
                for d in diagram {
                    let count = match direction {
                        ConeDirection::Limit => fam_cat.hom_count(apex, d)?,
                        ConeDirection::Colimit => fam_cat.hom_count(d, apex)?,
                    };
                    if count > cfg.pair_hom_cap {
                        feasible = false;
                    }
                }
            }
            if !feasible {
                continue;
            }
            let candidates = all_cones(&fam_cat, diagram, &fam_pool, direction, cfg.budget)?;
            instances += candidates.len() as u64;
            if !verify_universal(&fam_cat, &cone, &candidates, cfg.budget)? {
                return Ok(LawOutcome {
                    instances,
                    witness: Some(format!(
                        "diagram=[{}]",
                        diagram
                            .iter()
                            .map(|d| fam_cat.obj_name(d))
                            .collect::<Vec<_>>()
                            .join(",")
                    )),
                });
            }
        }
        Ok(LawOutcome {
            instances,
            witness: None,
        })
    };
    let fam_products = run_fam(ConeDirection::Limit)?;
    let fam_coproducts = run_fam(ConeDirection::Colimit)?;

    Ok(Report {
        suite: SuiteName::UniversalProperties.as_str().into(),
        properties: vec![
            PropertyResult::from_outcome("dist-product", dist_products),
            PropertyResult::from_outcome("dist-coproduct", dist_coproducts),
            PropertyResult::from_outcome("fam-product", fam_products),
            PropertyResult::from_outcome("fam-coproduct", fam_coproducts),
        ],
        wall: Default::default(),
    })
}

// ---------------------------------------------------------------------
// Distributive law
// ---------------------------------------------------------------------

fn pos_grid(base: &PresentedCategory, cfg: &SuiteConfig) -> Vec<ProdOfSumsObject<String>> {
    // Same index surface as the sum-of-products grid, read dually.
    let cat = DistCat::new(
        base,
        cfg.budget,
        SizeCaps {
            max_outer: cfg.max_outer,
            max_inner: cfg.max_inner,
        },
    );
    cat.objects()
        .into_iter()
        .map(|o| {
            ProdOfSumsObject::new(
                o.outer()
                    .iter()
                    .map(|j| {
                        (
                            j.clone(),
                            o.inner(j)
                                .unwrap()
                                .iter()
                                .map(|i| (i.clone(), o.entry(j, i).unwrap().clone()))
                                .collect(),
                        )
                    })
                    .collect(),
            )
            .unwrap()
        })
        .collect()
}

fn distributive_law(base: &PresentedCategory, cfg: &SuiteConfig) -> Result<Report> {
    let grid = pos_grid(base, cfg);
    let cat = DistCat::new(
        base,
        cfg.budget,
        SizeCaps {
            max_outer: cfg.max_outer,
            max_inner: cfg.max_inner,
        },
    );

    let mut id_instances = 0u64;
    let mut id_witness = None;
    for x in &grid {
        id_instances += 1;
        let lhs = lambda_morphism(&pos_identity(base, x)?)?;
        let rhs = dist::identity(base, &lambda_object(x))?;
        if lhs != rhs {
            id_witness = Some(format!("x={}", cat.obj_name(&lambda_object(x))));
            break;
        }
    }

    let mut comp_instances = 0u64;
    let mut comp_witness = None;
    'composition: for x in &grid {
        for y in &grid {
            let count_xy = crate::distlaw::count_hom_pos(base, x, y)?;
            if count_xy == 0 || count_xy > cfg.max_base_homs {
                continue;
            }
            for z in &grid {
                let count_yz = crate::distlaw::count_hom_pos(base, y, z)?;
                if count_yz == 0 || count_yz > cfg.max_base_homs {
                    continue;
                }
                for g1 in enumerate_hom_pos(base, x, y, cfg.budget)? {
                    for g2 in enumerate_hom_pos(base, y, z, cfg.budget)? {
                        comp_instances += 1;
                        let lhs = lambda_morphism(&pos_compose(base, &g2, &g1)?)?;
                        let rhs = dist::compose(
                            base,
                            &lambda_morphism(&g2)?,
                            &lambda_morphism(&g1)?,
                        )?;
                        if lhs != rhs {
                            comp_witness = Some("lambda-composition".to_string());
                            break 'composition;
                        }
                        if comp_instances >= cfg.triple_instance_cap {
                            break 'composition;
                        }
                    }
                }
            }
        }
    }

    // Consistency with the chosen products: the law applied to a product
    // of coproducts is isomorphic to the product of the summed rows.
    let mut cons_instances = 0u64;
    let mut cons_witness = None;
    for x in &grid {
        cons_instances += 1;
        let via_lambda = lambda_object(x);
        let mut row_sums = Vec::new();
        for j in x.outer() {
            let generators: Vec<DistObject<String>> = x
                .inner(j)?
                .iter()
                .map(|i| Ok(DistObject::generator(x.entry(j, i)?.clone())))
                .collect::<Result<_>>()?;
            row_sums.push(dist::coproduct(base, &generators)?.0);
        }
        let via_product = dist::product(base, &row_sums)?.0;
        if dist::iso_check(base, &via_lambda, &via_product, cfg.budget)?.is_none() {
            cons_witness = Some(format!(
                "x={} lambda={} product={}",
                cat.obj_name(&via_lambda),
                via_lambda.shape_count(),
                via_product.shape_count()
            ));
            break;
        }
    }

    let mut properties = vec![
        PropertyResult::from_outcome(
            "identity-preservation",
            LawOutcome {
                instances: id_instances,
                witness: id_witness,
            },
        ),
        PropertyResult::from_outcome(
            "composition-preservation",
            LawOutcome {
                instances: comp_instances,
                witness: comp_witness,
            },
        ),
        PropertyResult::from_outcome(
            "product-consistency",
            LawOutcome {
                instances: cons_instances,
                witness: cons_witness,
            },
        ),
    ];

    // The pinned shape count over a one-object base: two rows of two
    // options yield four shapes of two positions each.
    if base.objects().len() == 1 {
        let c = base.objects()[0].clone();
        let x = ProdOfSumsObject::new(vec![
            ("1".into(), vec![("0".into(), c.clone()), ("1".into(), c.clone())]),
            ("2".into(), vec![("0".into(), c.clone()), ("1".into(), c)]),
        ])?;
        let l = lambda_object(&x);
        let ok = l.shape_count() == 4 && l.shape_profile() == vec![2, 2, 2, 2];
        properties.push(if ok {
            PropertyResult::pass("four-shapes", 1)
        } else {
            PropertyResult::fail(
                "four-shapes",
                1,
                format!("shapes={} profile={:?}", l.shape_count(), l.shape_profile()),
            )
        });
    }

    Ok(Report {
        suite: SuiteName::DistributiveLaw.as_str().into(),
        properties,
        wall: Default::default(),
    })
}

// ---------------------------------------------------------------------
// Container consistency (one-object base)
// ---------------------------------------------------------------------

/// An independent container morphism: a forward shape map and backward
/// position maps, with its own composition.
#[derive(Debug, Clone, PartialEq, Eq)]
struct ContainerMor {
    shape: BTreeMap<Label, Label>,
    /// `(source shape, target position) ↦ source position`.
    pos: BTreeMap<(Label, Label), Label>,
}

fn container_compose(later: &ContainerMor, earlier: &ContainerMor) -> ContainerMor {
    let mut shape = BTreeMap::new();
    let mut pos = BTreeMap::new();
    for (j, mid) in &earlier.shape {
        shape.insert(j.clone(), later.shape[mid].clone());
    }
    for (j, mid) in &earlier.shape {
        for ((mj, i2), i1) in &later.pos {
            if mj == mid {
                let i0 = &earlier.pos[&(j.clone(), i1.clone())];
                pos.insert((j.clone(), i2.clone()), i0.clone());
            }
        }
    }
    ContainerMor { shape, pos }
}

fn dist_to_container(m: &DistMorphism<String, String>) -> ContainerMor {
    let mut shape = BTreeMap::new();
    let mut pos = BTreeMap::new();
    for (j, (j2, inner)) in &m.table {
        shape.insert(j.clone(), j2.clone());
        for (i2, (i, _)) in inner {
            pos.insert((j.clone(), i2.clone()), i.clone());
        }
    }
    ContainerMor { shape, pos }
}

fn random_container_morphism(
    rng: &mut ChaCha8Rng,
    base: &PresentedCategory,
    src: &DistObject<String>,
    dst: &DistObject<String>,
) -> Result<DistMorphism<String, String>> {
    let id = base.identity(&base.objects()[0])?;
    let mut table = BTreeMap::new();
    for j in src.outer() {
        let j2 = dst.outer()[rng.gen_range(0..dst.shape_count())].clone();
        let mut inner = BTreeMap::new();
        for i2 in dst.inner(&j2)? {
            let sources = src.inner(j)?;
            let i = sources[rng.gen_range(0..sources.len())].clone();
            inner.insert(i2.clone(), (i, id.clone()));
        }
        table.insert(j.clone(), (j2, inner));
    }
    DistMorphism::new(src.clone(), dst.clone(), table)
}

fn container(cfg: &SuiteConfig) -> Result<Report> {
    let base = fixtures::terminal();
    let unit = base.objects()[0].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    // Hom counts against the closed container formula.
    let mut count_instances = 0u64;
    let mut count_witness = None;
    for _ in 0..cfg.sample_instances {
        let profile_a: Vec<usize> = (0..rng.gen_range(0..=3usize))
            .map(|_| rng.gen_range(0..=3usize))
            .collect();
        let profile_b: Vec<usize> = (0..rng.gen_range(0..=3usize))
            .map(|_| rng.gen_range(0..=3usize))
            .collect();
        let a = dist::container_object(&unit, &profile_a);
        let b = dist::container_object(&unit, &profile_b);
        // Π over shapes of A of Σ over shapes of B of |I_a|^|I_b|.
        let mut formula: u128 = 1;
        for &ia in &profile_a {
            let mut options: u128 = 0;
            for &ib in &profile_b {
                options += (ia as u128).pow(ib as u32);
            }
            formula = formula.saturating_mul(options);
        }
        count_instances += 1;
        let counted = dist::count_hom(&base, &a, &b)?;
        if counted != formula {
            count_witness = Some(format!(
                "a={profile_a:?} b={profile_b:?} counted={counted} formula={formula}"
            ));
            break;
        }
    }

    // Composition against the independent container oracle.
    let mut comp_instances = 0u64;
    let mut comp_witness = None;
    for _ in 0..cfg.sample_instances {
        // Shapes nonempty with nonempty positions so morphisms exist.
        let mk_profile = |rng: &mut ChaCha8Rng| -> Vec<usize> {
            (0..rng.gen_range(1..=3usize))
                .map(|_| rng.gen_range(1..=3usize))
                .collect()
        };
        let x = dist::container_object(&unit, &mk_profile(&mut rng));
        let y = dist::container_object(&unit, &mk_profile(&mut rng));
        let z = dist::container_object(&unit, &mk_profile(&mut rng));
        let f = random_container_morphism(&mut rng, &base, &x, &y)?;
        let g = random_container_morphism(&mut rng, &base, &y, &z)?;
        comp_instances += 1;
        let composed = dist::compose(&base, &g, &f)?;
        let oracle = container_compose(&dist_to_container(&g), &dist_to_container(&f));
        if dist_to_container(&composed) != oracle {
            comp_witness = Some("container-composition mismatch".to_string());
            break;
        }
    }

    Ok(Report {
        suite: SuiteName::Container.as_str().into(),
        properties: vec![
            PropertyResult::from_outcome(
                "hom-count-formula",
                LawOutcome {
                    instances: count_instances,
                    witness: count_witness,
                },
            ),
            PropertyResult::from_outcome(
                "compose-oracle",
                LawOutcome {
                    instances: comp_instances,
                    witness: comp_witness,
                },
            ),
        ],
        wall: Default::default(),
    })
}

// ---------------------------------------------------------------------
// Canonical distributor
// ---------------------------------------------------------------------

fn random_finset_family(rng: &mut ChaCha8Rng) -> DistributorFamily<usize> {
    let rows = rng.gen_range(0..=3usize);
    DistributorFamily::new(
        (0..rows)
            .map(|j| {
                let cols = rng.gen_range(0..=3usize);
                (
                    format!("j{j}"),
                    (0..cols)
                        .map(|i| (format!("i{i}"), rng.gen_range(0..=2usize)))
                        .collect(),
                )
            })
            .collect(),
    )
    .unwrap()
}

fn distributor(cfg: &SuiteConfig) -> Result<Report> {
    let finset = finset_model(4096);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut fin_instances = 0u64;
    let mut fin_witness = None;
    while fin_instances < cfg.sample_instances {
        let family = random_finset_family(&mut rng);
        fin_instances += 1;
        let d = canonical_distributor(&finset, &family)?;
        let dinv = distributor_inverse_finset(&family)?;
        let lhs = finset.src(&d);
        let rhs = finset.dst(&d);
        let ok = finset.src(&dinv) == rhs
            && finset.dst(&dinv) == lhs
            && finset.compose(&d, &dinv)? == finset.identity(&rhs)?
            && finset.compose(&dinv, &d)? == finset.identity(&lhs)?;
        if !ok {
            fin_witness = Some(format!("family lhs={lhs} rhs={rhs}"));
            break;
        }
    }

    // Families valued in the sum-of-products category over a one-object
    // base, checked by honest hom-set search.
    let base = fixtures::terminal();
    let unit = base.objects()[0].clone();
    let model = DistCat::new(&base, cfg.budget, SizeCaps::default());
    let entry_pool = [
        DistObject::terminal(),
        DistObject::generator(unit.clone()),
        dist::container_object(&unit, &[2]),
    ];
    let mut dist_instances = 0u64;
    let mut dist_witness = None;
    let mut attempts = 0u64;
    while dist_instances < cfg.dist_model_families && attempts < cfg.dist_model_families * 200 {
        attempts += 1;
        let rows = rng.gen_range(0..=2usize);
        let family = DistributorFamily::new(
            (0..rows)
                .map(|j| {
                    let cols = rng.gen_range(1..=2usize);
                    (
                        format!("j{j}"),
                        (0..cols)
                            .map(|i| {
                                (
                                    format!("i{i}"),
                                    entry_pool[rng.gen_range(0..entry_pool.len())].clone(),
                                )
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
        .unwrap();
        // Keep the search honest but feasible.
        let d = canonical_distributor(&model, &family)?;
        let search_size = model.hom_count(&model.dst(&d), &model.src(&d))?;
        if search_size > 50_000 {
            continue;
        }
        dist_instances += 1;
        if !check_distributor_iso(&model, &family, cfg.budget)? {
            dist_witness = Some(format!("family #{dist_instances} not invertible"));
            break;
        }
    }

    // The lattice witnesses where distributivity fails: the canonical
    // comparison for a ∧ (b ∨ c) against (a ∧ b) ∨ (a ∧ c).
    let witness_family = |top: &str, left: &str, right: &str| {
        DistributorFamily::new(vec![
            ("j0".into(), vec![("i0".into(), top.to_string())]),
            (
                "j1".into(),
                vec![("i0".into(), left.to_string()), ("i1".into(), right.to_string())],
            ),
        ])
        .unwrap()
    };
    let m3 = lattice_model(FiniteLattice::m3());
    let m3_fails = !check_distributor_iso(&m3, &witness_family("a", "b", "c"), cfg.budget)?;
    let n5 = lattice_model(FiniteLattice::n5());
    let n5_fails = !check_distributor_iso(&n5, &witness_family("c", "a", "b"), cfg.budget)?;

    // The empty family is trivially invertible.
    let empty = DistributorFamily::<usize>::new(vec![]).unwrap();
    let empty_ok = check_distributor_iso(&finset, &empty, cfg.budget)?;

    Ok(Report {
        suite: SuiteName::Distributor.as_str().into(),
        properties: vec![
            PropertyResult::from_outcome(
                "finset-explicit-inverse",
                LawOutcome {
                    instances: fin_instances,
                    witness: fin_witness,
                },
            ),
            PropertyResult::from_outcome(
                "dist-model-invertible",
                LawOutcome {
                    instances: dist_instances,
                    witness: dist_witness,
                },
            ),
            if m3_fails {
                PropertyResult::pass("m3-witness-fails", 1)
            } else {
                PropertyResult::fail("m3-witness-fails", 1, "m3 comparison is invertible".into())
            },
            if n5_fails {
                PropertyResult::pass("n5-witness-fails", 1)
            } else {
                PropertyResult::fail("n5-witness-fails", 1, "n5 comparison is invertible".into())
            },
            if empty_ok {
                PropertyResult::pass("empty-family", 1)
            } else {
                PropertyResult::fail("empty-family", 1, "empty family not invertible".into())
            },
        ],
        wall: Default::default(),
    })
}

// ---------------------------------------------------------------------
// Lattice characterization
// ---------------------------------------------------------------------

fn lattice(cfg: &SuiteConfig) -> Result<Report> {
    // Unlabeled lattice counts at desk scale.
    let expected_counts = [1usize, 1, 1, 2, 5, 15];
    let mut count_witness = None;
    let mut all: Vec<FiniteLattice> = Vec::new();
    for (n, &expected) in expected_counts.iter().enumerate() {
        let lattices = enumerate_lattices(n + 1);
        if lattices.len() != expected {
            count_witness = Some(format!(
                "n={} expected={expected} got={}",
                n + 1,
                lattices.len()
            ));
        }
        all.extend(lattices);
    }

    let mut agree_instances = 0u64;
    let mut agree_witness = None;
    for l in &all {
        agree_instances += 1;
        let categorical = is_completely_distributive_finite(l, cfg.budget)?;
        let binary = is_distributive_binary(l);
        let sublattice_free = !has_m3_or_n5_sublattice(l);
        if categorical != binary || categorical != sublattice_free {
            agree_witness = Some(format!(
                "elements={} categorical={categorical} binary={binary} sublattice-free={sublattice_free}",
                l.len()
            ));
            break;
        }
    }

    Ok(Report {
        suite: SuiteName::Lattice.as_str().into(),
        properties: vec![
            PropertyResult::from_outcome(
                "small-lattice-counts",
                LawOutcome {
                    instances: expected_counts.iter().map(|&c| c as u64).sum(),
                    witness: count_witness,
                },
            ),
            PropertyResult::from_outcome(
                "characterization-agreement",
                LawOutcome {
                    instances: agree_instances,
                    witness: agree_witness,
                },
            ),
        ],
        wall: Default::default(),
    })
}
