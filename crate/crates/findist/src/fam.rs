//! The free coproduct completion with finite index sets.
//!
//! Objects are finite indexed families `⟨C_i⟩_{i∈I}` of base objects;
//! a morphism `⟨C_i⟩_I → ⟨C'_j⟩_J` is a table assigning each `i` a target
//! index `j` together with a base morphism `C_i → C'_j`. Composition
//! chases the reindexing and composes components in the base.
//!
//! Besides identity/composition this module provides the singleton unit
//! and disjoint-union flattening (the monad structure on objects and
//! morphisms), coproducts, products (when the base has chosen products),
//! and the coproduct functor into a model category.

use std::collections::BTreeMap;

use crate::category::{Budget, Chosen, FiniteCategory, ModelCategory};
use crate::combinat::{choice_functions, pair_label, tuple_label, Label};
use crate::error::{Error, Result};

/// A finite indexed family of base objects.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FamObject<O> {
    index: Vec<Label>,
    entries: BTreeMap<Label, O>,
}

impl<O: Clone + Ord + std::fmt::Debug> FamObject<O> {
    /// Builds a family from `(label, entry)` pairs in declaration order.
    pub fn new(pairs: Vec<(Label, O)>) -> Result<Self> {
        let mut index = Vec::with_capacity(pairs.len());
        let mut entries = BTreeMap::new();
        for (label, entry) in pairs {
            if entries.insert(label.clone(), entry).is_some() {
                return Err(Error::MalformedInput(format!(
                    "duplicate index label `{label}`"
                )));
            }
            index.push(label);
        }
        Ok(FamObject { index, entries })
    }

    /// The empty family (the initial object).
    pub fn empty() -> Self {
        FamObject {
            index: Vec::new(),
            entries: BTreeMap::new(),
        }
    }

    /// The singleton family `⟨c⟩` on index `*`.
    pub fn singleton(c: O) -> Self {
        FamObject::new(vec![("*".into(), c)]).unwrap()
    }

    pub fn index(&self) -> &[Label] {
        &self.index
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn entry(&self, i: &str) -> Result<&O> {
        self.entries
            .get(i)
            .ok_or_else(|| Error::UnknownObject(format!("index label `{i}`")))
    }

    /// Entries in declaration order.
    pub fn entries_in_order(&self) -> Vec<&O> {
        self.index.iter().map(|i| &self.entries[i]).collect()
    }
}

/// A morphism of families: for each source index, a target index and a
/// base morphism between the corresponding entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FamMorphism<O, M> {
    pub src: FamObject<O>,
    pub dst: FamObject<O>,
    /// `i ↦ (j, f_i : C_i → C'_j)`, total on `src.index`.
    pub table: BTreeMap<Label, (Label, M)>,
}

impl<O: Clone + Ord + std::fmt::Debug, M: Clone + Ord + std::fmt::Debug> FamMorphism<O, M> {
    /// Structural well-formedness: totality on the source index and
    /// existence of the named target indices. Base typing is checked by
    /// the operations that have a base at hand.
    pub fn new(
        src: FamObject<O>,
        dst: FamObject<O>,
        table: BTreeMap<Label, (Label, M)>,
    ) -> Result<Self> {
        for i in src.index() {
            let (j, _) = table
                .get(i)
                .ok_or_else(|| Error::MalformedInput(format!("table misses source index `{i}`")))?;
            dst.entry(j)?;
        }
        if table.len() != src.len() {
            return Err(Error::MalformedInput(
                "table has entries outside the source index".into(),
            ));
        }
        Ok(FamMorphism { src, dst, table })
    }
}

/// Identity morphism: each index kept, components are base identities.
pub fn identity<B: FiniteCategory>(
    base: &B,
    x: &FamObject<B::Obj>,
) -> Result<FamMorphism<B::Obj, B::Mor>> {
    let mut table = BTreeMap::new();
    for i in x.index() {
        table.insert(i.clone(), (i.clone(), base.identity(x.entry(i)?)?));
    }
    FamMorphism::new(x.clone(), x.clone(), table)
}

/// Composite `f ∘ g` (apply `g` first): chase the reindexing, compose
/// components in the base.
pub fn compose<B: FiniteCategory>(
    base: &B,
    f: &FamMorphism<B::Obj, B::Mor>,
    g: &FamMorphism<B::Obj, B::Mor>,
) -> Result<FamMorphism<B::Obj, B::Mor>> {
    if g.dst != f.src {
        return Err(Error::TypeMismatch(
            "family morphisms are not composable".into(),
        ));
    }
    let mut table = BTreeMap::new();
    for i in g.src.index() {
        let (mid, g_comp) = &g.table[i];
        let (j, f_comp) = &f.table[mid];
        table.insert(i.clone(), (j.clone(), base.compose(f_comp, g_comp)?));
    }
    FamMorphism::new(g.src.clone(), f.dst.clone(), table)
}

/// Unit on objects: the singleton family.
pub fn unit_object<O: Clone + Ord + std::fmt::Debug>(c: O) -> FamObject<O> {
    FamObject::singleton(c)
}

/// Unit on morphisms: wraps a base morphism between singleton families.
pub fn unit_morphism<B: FiniteCategory>(
    base: &B,
    f: &B::Mor,
) -> Result<FamMorphism<B::Obj, B::Mor>> {
    let src = FamObject::singleton(base.src(f));
    let dst = FamObject::singleton(base.dst(f));
    let mut table = BTreeMap::new();
    table.insert("*".into(), ("*".into(), f.clone()));
    FamMorphism::new(src, dst, table)
}

/// Flattening on objects: the disjoint union of a family of families,
/// indexed by `(outer,inner)` pair labels.
pub fn flatten_object<O: Clone + Ord + std::fmt::Debug>(
    x: &FamObject<FamObject<O>>,
) -> FamObject<O> {
    let mut pairs = Vec::new();
    for j in x.index() {
        let row = &x.entries[j];
        for i in row.index() {
            pairs.push((pair_label(j, i), row.entries[i].clone()));
        }
    }
    FamObject::new(pairs).expect("pair labels of distinct indices are distinct")
}

/// Flattening on morphisms: chases the outer reindexing, then the inner
/// one, keeping the inner component.
pub fn flatten_morphism<O, M>(
    h: &FamMorphism<FamObject<O>, FamMorphism<O, M>>,
) -> Result<FamMorphism<O, M>>
where
    O: Clone + Ord + std::fmt::Debug,
    M: Clone + Ord + std::fmt::Debug,
{
    let src = flatten_object(&h.src);
    let dst = flatten_object(&h.dst);
    let mut table = BTreeMap::new();
    for j in h.src.index() {
        let (j2, comp) = &h.table[j];
        for i in h.src.entries[j].index() {
            let (i2, inner) = comp.table.get(i).ok_or_else(|| {
                Error::MalformedInput(format!("component at `{j}` misses index `{i}`"))
            })?;
            table.insert(pair_label(j, i), (pair_label(j2, i2), inner.clone()));
        }
    }
    FamMorphism::new(src, dst, table)
}

/// Coproduct: disjoint union of index sets, injections reindex with
/// identity components. The nullary case is the empty (initial) family.
#[allow(clippy::type_complexity)]
pub fn coproduct<B: FiniteCategory>(
    base: &B,
    xs: &[FamObject<B::Obj>],
) -> Result<(FamObject<B::Obj>, Vec<FamMorphism<B::Obj, B::Mor>>)> {
    let mut pairs = Vec::new();
    for (k, x) in xs.iter().enumerate() {
        for i in x.index() {
            pairs.push((pair_label(&k.to_string(), i), x.entry(i)?.clone()));
        }
    }
    let sum = FamObject::new(pairs)?;
    let mut injections = Vec::with_capacity(xs.len());
    for (k, x) in xs.iter().enumerate() {
        let mut table = BTreeMap::new();
        for i in x.index() {
            table.insert(
                i.clone(),
                (
                    pair_label(&k.to_string(), i),
                    base.identity(x.entry(i)?)?,
                ),
            );
        }
        injections.push(FamMorphism::new(x.clone(), sum.clone(), table)?);
    }
    Ok((sum, injections))
}

/// Product over a base with chosen products: the index is the set of
/// choice functions through the factors' indices (lexicographic in
/// declaration order), the entry at a choice is the chosen base product
/// of the selected entries, and projections use the base projections.
#[allow(clippy::type_complexity)]
pub fn product<B: ModelCategory>(
    base: &B,
    xs: &[FamObject<B::Obj>],
) -> Result<(FamObject<B::Obj>, Vec<FamMorphism<B::Obj, B::Mor>>)> {
    let domains: Vec<usize> = xs.iter().map(FamObject::len).collect();
    let mut pairs = Vec::new();
    let mut chosen: Vec<Chosen<B::Obj, B::Mor>> = Vec::new();
    let mut picks: Vec<Vec<usize>> = Vec::new();
    for pick in choice_functions(&domains) {
        let labels: Vec<&str> = pick
            .iter()
            .enumerate()
            .map(|(k, &ix)| xs[k].index()[ix].as_str())
            .collect();
        let factors: Vec<B::Obj> = pick
            .iter()
            .enumerate()
            .map(|(k, &ix)| xs[k].entries_in_order()[ix].clone())
            .collect();
        let ch = base.product(&factors)?;
        pairs.push((tuple_label(&labels), ch.object.clone()));
        chosen.push(ch);
        picks.push(pick);
    }
    let prod = FamObject::new(pairs)?;
    let mut projections = Vec::with_capacity(xs.len());
    for (k, x) in xs.iter().enumerate() {
        let mut table = BTreeMap::new();
        for (row, pick) in picks.iter().enumerate() {
            let f_label = prod.index()[row].clone();
            let target = x.index()[pick[k]].clone();
            table.insert(f_label, (target, chosen[row].legs[k].clone()));
        }
        projections.push(FamMorphism::new(prod.clone(), x.clone(), table)?);
    }
    Ok((prod, projections))
}

/// The coproduct functor into a model: collapses a family to the model's
/// chosen coproduct of its entries.
pub fn coproduct_functor<M: ModelCategory>(model: &M, x: &FamObject<M::Obj>) -> Result<M::Obj> {
    let entries: Vec<M::Obj> = x.entries_in_order().into_iter().cloned().collect();
    Ok(model.coproduct(&entries)?.object)
}

/// The coproduct functor on morphisms: cotuples injections-after-components.
pub fn coproduct_functor_morphism<M: ModelCategory>(
    model: &M,
    h: &FamMorphism<M::Obj, M::Mor>,
) -> Result<M::Mor> {
    let dst_entries: Vec<M::Obj> = h.dst.entries_in_order().into_iter().cloned().collect();
    let sum_dst = model.coproduct(&dst_entries)?;
    let mut legs = Vec::with_capacity(h.src.len());
    for i in h.src.index() {
        let (j, comp) = &h.table[i];
        let pos = h
            .dst
            .index()
            .iter()
            .position(|l| l == j)
            .expect("validated table");
        legs.push(model.compose(&sum_dst.legs[pos], comp)?);
    }
    model.cotuple(&sum_dst.object, &legs)
}

/// The category of finite families over a base, with hom enumeration
/// bounded by a budget and an object surface bounded by `max_index`.
pub struct FamCat<'a, B> {
    pub base: &'a B,
    pub budget: Budget,
    /// Cap on index sizes for the `objects()` enumeration surface.
    pub max_index: usize,
}

impl<'a, B: FiniteCategory> FamCat<'a, B> {
    pub fn new(base: &'a B, budget: Budget, max_index: usize) -> Self {
        FamCat {
            base,
            budget,
            max_index,
        }
    }

    /// `|hom(x, y)| = Π_i Σ_j |C(x_i, y_j)|`, saturating.
    pub fn count_hom(&self, x: &FamObject<B::Obj>, y: &FamObject<B::Obj>) -> Result<u128> {
        let mut total = 1u128;
        for i in x.index() {
            let mut options = 0u128;
            for j in y.index() {
                options = options.saturating_add(self.base.hom_count(x.entry(i)?, y.entry(j)?)?);
            }
            total = total.saturating_mul(options);
        }
        Ok(total)
    }
}

impl<'a, B: FiniteCategory> FiniteCategory for FamCat<'a, B> {
    type Obj = FamObject<B::Obj>;
    type Mor = FamMorphism<B::Obj, B::Mor>;

    fn objects(&self) -> Vec<Self::Obj> {
        let base_objects = self.base.objects();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<(Label, B::Obj)>> = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            out.push(FamObject::new(prefix.clone()).unwrap());
            if prefix.len() < self.max_index {
                for o in base_objects.iter().rev() {
                    let mut next = prefix.clone();
                    next.push((format!("i{}", prefix.len()), o.clone()));
                    stack.push(next);
                }
            }
        }
        out
    }

    fn src(&self, m: &Self::Mor) -> Self::Obj {
        m.src.clone()
    }

    fn dst(&self, m: &Self::Mor) -> Self::Obj {
        m.dst.clone()
    }

    fn identity(&self, a: &Self::Obj) -> Result<Self::Mor> {
        identity(self.base, a)
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        compose(self.base, g, f)
    }

    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Vec<Self::Mor>> {
        self.budget.admit(self.count_hom(a, b)?)?;
        // Options per source index: (target index, component) pairs in
        // declaration-then-hom order.
        let mut slot_options: Vec<Vec<(Label, B::Mor)>> = Vec::with_capacity(a.len());
        for i in a.index() {
            let mut options = Vec::new();
            for j in b.index() {
                for c in self.base.hom(a.entry(i)?, b.entry(j)?)? {
                    options.push((j.clone(), c));
                }
            }
            slot_options.push(options);
        }
        let sizes: Vec<usize> = slot_options.iter().map(Vec::len).collect();
        let mut out = Vec::new();
        for pick in choice_functions(&sizes) {
            let mut table = BTreeMap::new();
            for (slot, &ix) in pick.iter().enumerate() {
                let i = a.index()[slot].clone();
                table.insert(i, slot_options[slot][ix].clone());
            }
            out.push(FamMorphism::new(a.clone(), b.clone(), table)?);
        }
        Ok(out)
    }

    fn hom_count(&self, a: &Self::Obj, b: &Self::Obj) -> Result<u128> {
        self.count_hom(a, b)
    }

    fn obj_name(&self, a: &Self::Obj) -> String {
        let parts: Vec<String> = a
            .index()
            .iter()
            .map(|i| format!("{i}:{}", self.base.obj_name(&a.entries[i])))
            .collect();
        format!("⟨{}⟩", parts.join(","))
    }

    fn mor_name(&self, m: &Self::Mor) -> String {
        let parts: Vec<String> = m
            .src
            .index()
            .iter()
            .map(|i| {
                let (j, c) = &m.table[i];
                format!("{i}->({j},{})", self.base.mor_name(c))
            })
            .collect();
        format!("[{}]", parts.join(";"))
    }
}

impl<'a, B: ModelCategory> ModelCategory for FamCat<'a, B> {
    fn product(&self, factors: &[Self::Obj]) -> Result<Chosen<Self::Obj, Self::Mor>> {
        if factors.len() == 1 {
            return Ok(Chosen {
                object: factors[0].clone(),
                legs: vec![self.identity(&factors[0])?],
            });
        }
        let (object, legs) = product(self.base, factors)?;
        Ok(Chosen { object, legs })
    }

    fn coproduct(&self, summands: &[Self::Obj]) -> Result<Chosen<Self::Obj, Self::Mor>> {
        if summands.len() == 1 {
            return Ok(Chosen {
                object: summands[0].clone(),
                legs: vec![self.identity(&summands[0])?],
            });
        }
        let (object, legs) = coproduct(self.base, summands)?;
        Ok(Chosen { object, legs })
    }

    fn tuple(&self, src: &Self::Obj, legs: &[Self::Mor]) -> Result<Self::Mor> {
        if legs.len() == 1 {
            return Ok(legs[0].clone());
        }
        let factors: Vec<Self::Obj> = legs.iter().map(|l| l.dst.clone()).collect();
        let (prod, _) = product(self.base, &factors)?;
        let mut table = BTreeMap::new();
        for i in src.index() {
            let mut target_labels = Vec::with_capacity(legs.len());
            let mut components = Vec::with_capacity(legs.len());
            for (k, leg) in legs.iter().enumerate() {
                if leg.src != *src {
                    return Err(Error::TypeMismatch("tuple legs must share a source".into()));
                }
                let (j, c) = &leg.table[i];
                let _ = k;
                target_labels.push(j.clone());
                components.push(c.clone());
            }
            let label_refs: Vec<&str> = target_labels.iter().map(String::as_str).collect();
            let mediator = self.base.tuple(src.entry(i)?, &components)?;
            table.insert(i.clone(), (tuple_label(&label_refs), mediator));
        }
        FamMorphism::new(src.clone(), prod, table)
    }

    fn cotuple(&self, dst: &Self::Obj, legs: &[Self::Mor]) -> Result<Self::Mor> {
        if legs.len() == 1 {
            return Ok(legs[0].clone());
        }
        let summands: Vec<Self::Obj> = legs.iter().map(|l| l.src.clone()).collect();
        let (sum, _) = coproduct(self.base, &summands)?;
        let mut table = BTreeMap::new();
        for (k, leg) in legs.iter().enumerate() {
            if leg.dst != *dst {
                return Err(Error::TypeMismatch(
                    "cotuple legs must share a target".into(),
                ));
            }
            for i in leg.src.index() {
                table.insert(pair_label(&k.to_string(), i), leg.table[i].clone());
            }
        }
        FamMorphism::new(sum, dst.clone(), table)
    }
}
