//! The distributive-law functor from products-of-sums to sums-of-products,
//! and the canonical distributor morphism whose invertibility defines
//! doubly-infinitary distributivity in a model.
//!
//! A product-of-sums object reads its outer index as a product and its
//! inner indices as coproducts. The law sends it to the sum over all
//! choice functions of the product of the selected entries, and acts on
//! morphisms by the evident reindexing. In a model category with chosen
//! structure, the same data induces the canonical comparison
//! `⊔_f ⊓_j C_{f(j)j} → ⊓_j ⊔_i C_ij` as a cotuple of tuples; checking
//! its invertibility is an exhaustive hom-set search.

use std::collections::BTreeMap;

use crate::category::{Budget, FiniteCategory, ModelCategory};
use crate::combinat::{choice_functions, tuple_label, Label};
use crate::dist::{DistMorphism, DistObject, DistTable};
use crate::error::{Error, Result};
use crate::models::finset::{decode_tuple, encode_tuple, FinSetMor};

/// A family of families read as a product of coproducts: outer labels
/// index the product, inner labels index each coproduct.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProdOfSumsObject<O>(DistObject<O>);

impl<O: Clone + Ord + std::fmt::Debug> ProdOfSumsObject<O> {
    pub fn new(rows: Vec<(Label, Vec<(Label, O)>)>) -> Result<Self> {
        Ok(ProdOfSumsObject(DistObject::new(rows)?))
    }

    pub fn outer(&self) -> &[Label] {
        self.0.outer()
    }

    pub fn inner(&self, j: &str) -> Result<&[Label]> {
        self.0.inner(j)
    }

    pub fn entry(&self, j: &str, i: &str) -> Result<&O> {
        self.0.entry(j, i)
    }
}

/// A morphism of product-of-sums objects. The table is keyed by the
/// *target* outer index (products are mapped backwards) and each inner
/// table by the *source* inner index (coproducts are mapped forwards):
/// `j' ↦ (j, i ↦ (i', c : C_ij → C'_i'j'))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProdOfSumsMorphism<O, M> {
    pub src: ProdOfSumsObject<O>,
    pub dst: ProdOfSumsObject<O>,
    pub table: DistTable<M>,
}

impl<O: Clone + Ord + std::fmt::Debug, M: Clone + Ord + std::fmt::Debug>
    ProdOfSumsMorphism<O, M>
{
    pub fn new(
        src: ProdOfSumsObject<O>,
        dst: ProdOfSumsObject<O>,
        table: DistTable<M>,
    ) -> Result<Self> {
        if table.len() != dst.outer().len() {
            return Err(Error::MalformedInput(
                "outer table does not match the target index".into(),
            ));
        }
        for j2 in dst.outer() {
            let (j, inner) = table
                .get(j2)
                .ok_or_else(|| Error::MalformedInput(format!("table misses target `{j2}`")))?;
            let sources = src.inner(j)?;
            if inner.len() != sources.len() {
                return Err(Error::MalformedInput(format!(
                    "inner table at `{j2}` does not match the coproduct index of `{j}`"
                )));
            }
            for i in sources {
                let (i2, _) = inner.get(i).ok_or_else(|| {
                    Error::MalformedInput(format!("inner table at `{j2}` misses `{i}`"))
                })?;
                if !dst.inner(j2)?.iter().any(|l| l == i2) {
                    return Err(Error::MalformedInput(format!(
                        "inner table at `{j2}` targets unknown index `{i2}`"
                    )));
                }
            }
        }
        Ok(ProdOfSumsMorphism { src, dst, table })
    }
}

/// Identity morphism of a product-of-sums object.
pub fn pos_identity<B: FiniteCategory>(
    base: &B,
    x: &ProdOfSumsObject<B::Obj>,
) -> Result<ProdOfSumsMorphism<B::Obj, B::Mor>> {
    let mut table = BTreeMap::new();
    for j in x.outer() {
        let mut inner = BTreeMap::new();
        for i in x.inner(j)? {
            inner.insert(i.clone(), (i.clone(), base.identity(x.entry(j, i)?)?));
        }
        table.insert(j.clone(), (j.clone(), inner));
    }
    ProdOfSumsMorphism::new(x.clone(), x.clone(), table)
}

/// Composite `g2 ∘ g1` of product-of-sums morphisms: outer indices chase
/// backward from the final target, inner indices forward from the source.
pub fn pos_compose<B: FiniteCategory>(
    base: &B,
    g2: &ProdOfSumsMorphism<B::Obj, B::Mor>,
    g1: &ProdOfSumsMorphism<B::Obj, B::Mor>,
) -> Result<ProdOfSumsMorphism<B::Obj, B::Mor>> {
    if g1.dst != g2.src {
        return Err(Error::TypeMismatch(
            "product-of-sums morphisms are not composable".into(),
        ));
    }
    let mut table = BTreeMap::new();
    for j3 in g2.dst.outer() {
        let (j2, phi2) = &g2.table[j3];
        let (j1, phi1) = &g1.table[j2];
        let mut inner = BTreeMap::new();
        for i1 in g1.src.inner(j1)? {
            let (i2, c1) = &phi1[i1];
            let (i3, c2) = &phi2[i2];
            inner.insert(i1.clone(), (i3.clone(), base.compose(c2, c1)?));
        }
        table.insert(j3.clone(), (j1.clone(), inner));
    }
    ProdOfSumsMorphism::new(g1.src.clone(), g2.dst.clone(), table)
}

/// `|hom(x, y)|` for product-of-sums objects, saturating.
pub fn count_hom_pos<B: FiniteCategory>(
    base: &B,
    x: &ProdOfSumsObject<B::Obj>,
    y: &ProdOfSumsObject<B::Obj>,
) -> Result<u128> {
    let mut total = 1u128;
    for j2 in y.outer() {
        let mut options = 0u128;
        for j in x.outer() {
            let mut assignments = 1u128;
            for i in x.inner(j)? {
                let mut slot = 0u128;
                for i2 in y.inner(j2)? {
                    slot = slot.saturating_add(base.hom_count(x.entry(j, i)?, y.entry(j2, i2)?)?);
                }
                assignments = assignments.saturating_mul(slot);
            }
            options = options.saturating_add(assignments);
        }
        total = total.saturating_mul(options);
    }
    Ok(total)
}

/// Exhaustive hom enumeration for product-of-sums objects, in
/// deterministic order.
pub fn enumerate_hom_pos<B: FiniteCategory>(
    base: &B,
    x: &ProdOfSumsObject<B::Obj>,
    y: &ProdOfSumsObject<B::Obj>,
    budget: Budget,
) -> Result<Vec<ProdOfSumsMorphism<B::Obj, B::Mor>>> {
    budget.admit(count_hom_pos(base, x, y)?)?;
    type Option_<M> = (Label, BTreeMap<Label, (Label, M)>);
    let mut per_target: Vec<Vec<Option_<B::Mor>>> = Vec::with_capacity(y.outer().len());
    for j2 in y.outer() {
        let mut options = Vec::new();
        for j in x.outer() {
            let slots = x.inner(j)?;
            let mut slot_options: Vec<Vec<(Label, B::Mor)>> = Vec::with_capacity(slots.len());
            for i in slots {
                let mut opts = Vec::new();
                for i2 in y.inner(j2)? {
                    for c in base.hom(x.entry(j, i)?, y.entry(j2, i2)?)? {
                        opts.push((i2.clone(), c));
                    }
                }
                slot_options.push(opts);
            }
            let sizes: Vec<usize> = slot_options.iter().map(Vec::len).collect();
            for pick in choice_functions(&sizes) {
                let mut inner = BTreeMap::new();
                for (s, &ix) in pick.iter().enumerate() {
                    inner.insert(slots[s].clone(), slot_options[s][ix].clone());
                }
                options.push((j.clone(), inner));
            }
        }
        per_target.push(options);
    }
    let sizes: Vec<usize> = per_target.iter().map(Vec::len).collect();
    let mut out = Vec::new();
    for pick in choice_functions(&sizes) {
        let mut table = BTreeMap::new();
        for (k, &ix) in pick.iter().enumerate() {
            table.insert(y.outer()[k].clone(), per_target[k][ix].clone());
        }
        out.push(ProdOfSumsMorphism::new(x.clone(), y.clone(), table)?);
    }
    Ok(out)
}

/// The distributive law on objects: the product of coproducts becomes
/// the coproduct over all choice functions of the product of selected
/// entries. Shape labels are the tuple-encoded choice functions; the
/// positions of a shape are the outer labels of the source.
pub fn lambda_object<O: Clone + Ord + std::fmt::Debug>(
    x: &ProdOfSumsObject<O>,
) -> DistObject<O> {
    let domains: Vec<usize> = x
        .outer()
        .iter()
        .map(|j| x.inner(j).expect("validated object").len())
        .collect();
    let mut shapes = Vec::new();
    for pick in choice_functions(&domains) {
        let chosen: Vec<&str> = pick
            .iter()
            .enumerate()
            .map(|(k, &ix)| x.inner(&x.outer()[k]).unwrap()[ix].as_str())
            .collect();
        let positions = pick
            .iter()
            .enumerate()
            .map(|(k, &ix)| {
                let j = &x.outer()[k];
                let i = &x.inner(j).unwrap()[ix];
                (j.clone(), x.entry(j, i).unwrap().clone())
            })
            .collect();
        shapes.push((tuple_label(&chosen), positions));
    }
    DistObject::new(shapes).expect("choice-function labels are distinct")
}

/// The distributive law on morphisms: for each source choice function,
/// the induced target choice function and the componentwise base
/// morphisms. Preserves identities and composition.
pub fn lambda_morphism<O, M>(g: &ProdOfSumsMorphism<O, M>) -> Result<DistMorphism<O, M>>
where
    O: Clone + Ord + std::fmt::Debug,
    M: Clone + Ord + std::fmt::Debug,
{
    let src = lambda_object(&g.src);
    let dst = lambda_object(&g.dst);
    let domains: Vec<usize> = g
        .src
        .outer()
        .iter()
        .map(|j| g.src.inner(j).map(<[Label]>::len))
        .collect::<Result<_>>()?;
    let mut table = BTreeMap::new();
    for (row, pick) in choice_functions(&domains).enumerate() {
        let f_label = src.outer()[row].clone();
        let mut chosen2 = Vec::with_capacity(g.dst.outer().len());
        let mut inner = BTreeMap::new();
        for j2 in g.dst.outer() {
            let (j, phi) = &g.table[j2];
            let k = g
                .src
                .outer()
                .iter()
                .position(|l| l == j)
                .expect("validated table");
            let i = &g.src.inner(j)?[pick[k]];
            let (i2, c) = &phi[i];
            chosen2.push(i2.clone());
            inner.insert(j2.clone(), (j.clone(), c.clone()));
        }
        let refs: Vec<&str> = chosen2.iter().map(String::as_str).collect();
        table.insert(f_label, (tuple_label(&refs), inner));
    }
    DistMorphism::new(src, dst, table)
}

/// A doubly indexed family of model objects, the input of the canonical
/// distributor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DistributorFamily<O>(DistObject<O>);

impl<O: Clone + Ord + std::fmt::Debug> DistributorFamily<O> {
    pub fn new(rows: Vec<(Label, Vec<(Label, O)>)>) -> Result<Self> {
        Ok(DistributorFamily(DistObject::new(rows)?))
    }

    pub fn outer(&self) -> &[Label] {
        self.0.outer()
    }

    pub fn inner(&self, j: &str) -> Result<&[Label]> {
        self.0.inner(j)
    }

    pub fn entry(&self, j: &str, i: &str) -> Result<&O> {
        self.0.entry(j, i)
    }

    fn row_entries(&self, j: &str) -> Result<Vec<O>> {
        self.inner(j)?
            .iter()
            .map(|i| Ok(self.entry(j, i)?.clone()))
            .collect()
    }
}

/// The canonical comparison `⊔_f ⊓_j C_{f(j)j} → ⊓_j ⊔_i C_ij` in a
/// model with chosen structure: the cotuple over all choice functions of
/// the tuple of injection-after-projection legs.
pub fn canonical_distributor<M: ModelCategory>(
    model: &M,
    fam: &DistributorFamily<M::Obj>,
) -> Result<M::Mor> {
    let rows = fam.outer().to_vec();
    let mut row_sums = Vec::with_capacity(rows.len());
    for j in &rows {
        row_sums.push(model.coproduct(&fam.row_entries(j)?)?);
    }
    let rhs = model.product(
        &row_sums
            .iter()
            .map(|c| c.object.clone())
            .collect::<Vec<_>>(),
    )?;

    let domains: Vec<usize> = rows
        .iter()
        .map(|j| fam.inner(j).map(<[Label]>::len))
        .collect::<Result<_>>()?;
    let mut summand_legs = Vec::new();
    for pick in choice_functions(&domains) {
        let factors: Vec<M::Obj> = pick
            .iter()
            .enumerate()
            .map(|(k, &ix)| {
                let j = &rows[k];
                let i = &fam.inner(j)?[ix];
                Ok(fam.entry(j, i)?.clone())
            })
            .collect::<Result<_>>()?;
        let chosen_product = model.product(&factors)?;
        let mut legs = Vec::with_capacity(rows.len());
        for (k, &ix) in pick.iter().enumerate() {
            let injection = &row_sums[k].legs[ix];
            let projection = &chosen_product.legs[k];
            legs.push(model.compose(injection, projection)?);
        }
        summand_legs.push(model.tuple(&chosen_product.object, &legs)?);
    }
    model.cotuple(&rhs.object, &summand_legs)
}

/// The explicit inverse of the canonical distributor in finite sets,
/// defined elementwise: a tuple of tagged elements maps to the summand
/// of its tag tuple, carrying the tuple of payloads.
pub fn distributor_inverse_finset(fam: &DistributorFamily<usize>) -> Result<FinSetMor> {
    let rows = fam.outer().to_vec();
    let mut row_entry_sizes: Vec<Vec<usize>> = Vec::with_capacity(rows.len());
    for j in &rows {
        row_entry_sizes.push(fam.row_entries(j)?);
    }
    let row_sum_sizes: Vec<usize> = row_entry_sizes.iter().map(|r| r.iter().sum()).collect();
    let rhs_size: usize = row_sum_sizes.iter().product();

    let domains: Vec<usize> = row_entry_sizes.iter().map(Vec::len).collect();
    let mut summand_sizes = Vec::new();
    for pick in choice_functions(&domains) {
        let size: usize = pick
            .iter()
            .enumerate()
            .map(|(k, &ix)| row_entry_sizes[k][ix])
            .product();
        summand_sizes.push(size);
    }
    let lhs_size: usize = summand_sizes.iter().sum();
    let summand_offsets: Vec<usize> = summand_sizes
        .iter()
        .scan(0, |acc, &s| {
            let here = *acc;
            *acc += s;
            Some(here)
        })
        .collect();

    let mut map = Vec::with_capacity(rhs_size);
    for x in 0..rhs_size {
        let coords = decode_tuple(&row_sum_sizes, x);
        let mut tags = Vec::with_capacity(rows.len());
        let mut payloads = Vec::with_capacity(rows.len());
        for (k, &xk) in coords.iter().enumerate() {
            // Decode the tagged union: which entry of row k, and where.
            let mut offset = 0;
            let mut tag = 0;
            for (ix, &size) in row_entry_sizes[k].iter().enumerate() {
                if xk < offset + size {
                    tag = ix;
                    break;
                }
                offset += size;
            }
            tags.push(tag);
            payloads.push(xk - offset);
        }
        let summand = encode_tuple(&domains, &tags);
        let payload_sizes: Vec<usize> = tags
            .iter()
            .enumerate()
            .map(|(k, &t)| row_entry_sizes[k][t])
            .collect();
        let inside = encode_tuple(&payload_sizes, &payloads);
        map.push(summand_offsets[summand] + inside);
    }
    FinSetMor::new(rhs_size, lhs_size, map)
}

/// Whether the canonical distributor for `fam` has a two-sided inverse,
/// found by scanning the model's enumerated hom-set within `budget`.
pub fn check_distributor_iso<M: ModelCategory>(
    model: &M,
    fam: &DistributorFamily<M::Obj>,
    budget: Budget,
) -> Result<bool> {
    let d = canonical_distributor(model, fam)?;
    let lhs = model.src(&d);
    let rhs = model.dst(&d);
    budget.admit(model.hom_count(&rhs, &lhs)?)?;
    let id_lhs = model.identity(&lhs)?;
    let id_rhs = model.identity(&rhs)?;
    for g in model.hom(&rhs, &lhs)? {
        if model.compose(&d, &g)? == id_rhs && model.compose(&g, &d)? == id_lhs {
            return Ok(true);
        }
    }
    Ok(false)
}
