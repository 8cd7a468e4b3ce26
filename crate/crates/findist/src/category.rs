//! Category interfaces and brute-force universal-property checking.
//!
//! [`FiniteCategory`] is the minimal interface every category in this
//! crate exposes: typed composition plus exhaustive hom-set enumeration.
//! [`ModelCategory`] extends it with chosen finite products and
//! coproducts, which is what the distributivity checks run against.
//!
//! All checks here are enumerative. A [`Budget`] caps how many candidates
//! any single enumeration may produce; exceeding it is a loud error,
//! never a silent truncation.

use std::fmt::Debug;

use crate::error::{Error, Result};

/// Cap on the size of a single enumeration (hom-set, shape set, mediator
/// search). The default matches the crate-wide default of 10^6.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(1_000_000)
    }
}

impl Budget {
    /// Errors when `needed` candidates would exceed the cap.
    pub fn admit(&self, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            Err(Error::EnumerationBudgetExceeded {
                needed,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

/// A category whose hom-sets can be enumerated exhaustively and
/// deterministically (declaration order throughout).
pub trait FiniteCategory {
    type Obj: Clone + Ord + Debug;
    type Mor: Clone + Ord + Debug;

    /// The object enumeration surface. For schematic categories (e.g.
    /// sets up to a size bound, family categories under caps) this is the
    /// configured finite window, not a mathematical totality.
    fn objects(&self) -> Vec<Self::Obj>;

    fn src(&self, m: &Self::Mor) -> Self::Obj;
    fn dst(&self, m: &Self::Mor) -> Self::Obj;

    fn identity(&self, a: &Self::Obj) -> Result<Self::Mor>;

    /// Composite `g ∘ f` (apply `f` first). `TypeMismatch` when the
    /// middle objects disagree.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;

    /// All morphisms `a → b` in deterministic order.
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Vec<Self::Mor>>;

    /// `|hom(a, b)|` without materializing; saturates at `u128::MAX`.
    fn hom_count(&self, a: &Self::Obj, b: &Self::Obj) -> Result<u128> {
        Ok(self.hom(a, b)?.len() as u128)
    }

    /// Short printable name for an object, used in labels and reports.
    fn obj_name(&self, a: &Self::Obj) -> String {
        format!("{a:?}")
    }

    /// Short printable name for a morphism, used in labels and reports.
    fn mor_name(&self, m: &Self::Mor) -> String {
        format!("{m:?}")
    }
}

/// Chosen structure for one finite (co)product: the carrier object and
/// its projections (for products) or injections (for coproducts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chosen<O, M> {
    pub object: O,
    pub legs: Vec<M>,
}

/// A category with chosen finite products and coproducts.
///
/// The chosen structure must be strictly functional in the argument list:
/// the same list of objects always yields the same carrier and legs.
/// A one-element list returns the entry itself with an identity leg.
pub trait ModelCategory: FiniteCategory {
    /// Chosen product with projections; the empty list gives the chosen
    /// terminal object.
    fn product(&self, factors: &[Self::Obj]) -> Result<Chosen<Self::Obj, Self::Mor>>;

    /// Chosen coproduct with injections; the empty list gives the chosen
    /// initial object.
    fn coproduct(&self, summands: &[Self::Obj]) -> Result<Chosen<Self::Obj, Self::Mor>>;

    /// Tupling: the unique mediator `src → Π dst(legs)` through the chosen
    /// product of the legs' targets. `legs` must share `src` as source.
    fn tuple(&self, src: &Self::Obj, legs: &[Self::Mor]) -> Result<Self::Mor>;

    /// Cotupling: the unique mediator `⊔ src(legs) → dst` out of the
    /// chosen coproduct of the legs' sources. `legs` must share `dst`.
    fn cotuple(&self, dst: &Self::Obj, legs: &[Self::Mor]) -> Result<Self::Mor>;
}

/// Which way the legs of a cone point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeDirection {
    /// Legs run from the apex into the diagram (products).
    Limit,
    /// Legs run from the diagram into the apex (coproducts).
    Colimit,
}

/// A cone or cocone over a finite discrete diagram, with legs in diagram
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone<O, M> {
    pub apex: O,
    pub legs: Vec<M>,
    pub direction: ConeDirection,
}

impl<O: Clone, M: Clone> Cone<O, M> {
    pub fn limit(apex: O, legs: Vec<M>) -> Self {
        Cone {
            apex,
            legs,
            direction: ConeDirection::Limit,
        }
    }

    pub fn colimit(apex: O, legs: Vec<M>) -> Self {
        Cone {
            apex,
            legs,
            direction: ConeDirection::Colimit,
        }
    }
}

fn check_cone<C: FiniteCategory>(cat: &C, cone: &Cone<C::Obj, C::Mor>) -> Result<Vec<C::Obj>> {
    let mut diagram = Vec::with_capacity(cone.legs.len());
    for leg in &cone.legs {
        let (hub, tip) = match cone.direction {
            ConeDirection::Limit => (cat.src(leg), cat.dst(leg)),
            ConeDirection::Colimit => (cat.dst(leg), cat.src(leg)),
        };
        if hub != cone.apex {
            return Err(Error::TypeMismatch(
                "cone leg does not touch the apex".into(),
            ));
        }
        diagram.push(tip);
    }
    Ok(diagram)
}

/// Exhaustive universal-property check: `true` iff every candidate cone
/// over the same diagram factors through `cone` by exactly one mediating
/// morphism. Mediators are searched by enumerating the full hom-set from
/// (resp. to) each candidate apex, subject to `budget`.
pub fn verify_universal<C: FiniteCategory>(
    cat: &C,
    cone: &Cone<C::Obj, C::Mor>,
    candidates: &[Cone<C::Obj, C::Mor>],
    budget: Budget,
) -> Result<bool> {
    let diagram = check_cone(cat, cone)?;
    for cand in candidates {
        if cand.direction != cone.direction {
            return Err(Error::TypeMismatch("cone directions disagree".into()));
        }
        if check_cone(cat, cand)? != diagram {
            return Err(Error::TypeMismatch(
                "candidate cone is over a different diagram".into(),
            ));
        }
        if count_mediators(cat, cone, cand, budget)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of morphisms commuting with all legs between `cand` and `cone`.
pub fn count_mediators<C: FiniteCategory>(
    cat: &C,
    cone: &Cone<C::Obj, C::Mor>,
    cand: &Cone<C::Obj, C::Mor>,
    budget: Budget,
) -> Result<usize> {
    let pool = match cone.direction {
        ConeDirection::Limit => {
            budget.admit(cat.hom_count(&cand.apex, &cone.apex)?)?;
            cat.hom(&cand.apex, &cone.apex)?
        }
        ConeDirection::Colimit => {
            budget.admit(cat.hom_count(&cone.apex, &cand.apex)?)?;
            cat.hom(&cone.apex, &cand.apex)?
        }
    };
    let mut found = 0usize;
    'mediator: for m in &pool {
        for (leg, cleg) in cone.legs.iter().zip(&cand.legs) {
            let around = match cone.direction {
                ConeDirection::Limit => cat.compose(leg, m)?,
                ConeDirection::Colimit => cat.compose(m, leg)?,
            };
            if &around != cleg {
                continue 'mediator;
            }
        }
        found += 1;
    }
    Ok(found)
}

/// Enumerates every candidate cone over `diagram` whose apex is drawn
/// from `apexes`: all combinations of legs, in deterministic order.
pub fn all_cones<C: FiniteCategory>(
    cat: &C,
    diagram: &[C::Obj],
    apexes: &[C::Obj],
    direction: ConeDirection,
    budget: Budget,
) -> Result<Vec<Cone<C::Obj, C::Mor>>> {
    let mut cones = Vec::new();
    for apex in apexes {
        let mut homs = Vec::with_capacity(diagram.len());
        let mut total = 1u128;
        for d in diagram {
            let h = match direction {
                ConeDirection::Limit => cat.hom(apex, d)?,
                ConeDirection::Colimit => cat.hom(d, apex)?,
            };
            total = total.saturating_mul(h.len() as u128);
            homs.push(h);
        }
        budget.admit(total)?;
        let sizes: Vec<usize> = homs.iter().map(Vec::len).collect();
        for pick in crate::combinat::choice_functions(&sizes) {
            let legs = pick
                .iter()
                .enumerate()
                .map(|(k, &ix)| homs[k][ix].clone())
                .collect();
            cones.push(Cone {
                apex: apex.clone(),
                legs,
                direction,
            });
        }
    }
    Ok(cones)
}
