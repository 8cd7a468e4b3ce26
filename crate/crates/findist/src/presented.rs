//! Finitely presented categories: explicit object/morphism lists and a
//! composition table, with exhaustive law validation and dualization.
//!
//! A presentation is taken as given — there is no completion step. The
//! composition table must be defined exactly on composable pairs, and
//! [`PresentedCategory::validate`] checks every law by brute force:
//! totality and typing of identities and composites, both unit laws for
//! every morphism, and associativity on every composable triple.

use std::collections::{BTreeMap, BTreeSet};

use crate::category::FiniteCategory;
use crate::error::{Error, Result};

/// One declared morphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MorphismDecl {
    pub id: String,
    pub src: String,
    pub dst: String,
}

impl MorphismDecl {
    pub fn new(id: &str, src: &str, dst: &str) -> Self {
        MorphismDecl {
            id: id.into(),
            src: src.into(),
            dst: dst.into(),
        }
    }
}

/// A finite category presented by explicit data. Object and morphism ids
/// are strings; every enumeration follows declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismDecl>,
    identities: BTreeMap<String, String>,
    compose_table: BTreeMap<(String, String), String>,
    mor_ix: BTreeMap<String, usize>,
}

/// A single law violation with the morphism ids that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub witnesses: Vec<String>,
}

/// Outcome of validating a presentation: `passed` iff no violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl LawReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        LawReport {
            passed: violations.is_empty(),
            violations,
        }
    }
}

impl PresentedCategory {
    /// Builds a presentation, rejecting duplicate or dangling ids.
    /// Law violations are *not* rejected here; see [`Self::validate`].
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<MorphismDecl>,
        identities: BTreeMap<String, String>,
        compose: BTreeMap<(String, String), String>,
    ) -> Result<Self> {
        let mut seen_objects = BTreeSet::new();
        for o in &objects {
            if !seen_objects.insert(o.clone()) {
                return Err(Error::MalformedInput(format!("duplicate object id `{o}`")));
            }
        }
        let mut mor_ix = BTreeMap::new();
        for (k, m) in morphisms.iter().enumerate() {
            if mor_ix.insert(m.id.clone(), k).is_some() {
                return Err(Error::MalformedInput(format!(
                    "duplicate morphism id `{}`",
                    m.id
                )));
            }
            for end in [&m.src, &m.dst] {
                if !seen_objects.contains(end) {
                    return Err(Error::MalformedInput(format!(
                        "morphism `{}` references unknown object `{end}`",
                        m.id
                    )));
                }
            }
        }
        for (o, m) in &identities {
            if !seen_objects.contains(o) {
                return Err(Error::MalformedInput(format!(
                    "identity assigned to unknown object `{o}`"
                )));
            }
            if !mor_ix.contains_key(m) {
                return Err(Error::MalformedInput(format!(
                    "identity of `{o}` names unknown morphism `{m}`"
                )));
            }
        }
        for ((g, f), r) in &compose {
            for m in [g, f, r] {
                if !mor_ix.contains_key(m) {
                    return Err(Error::MalformedInput(format!(
                        "compose table references unknown morphism `{m}`"
                    )));
                }
            }
        }
        Ok(PresentedCategory {
            objects,
            morphisms,
            identities,
            compose_table: compose,
            mor_ix,
        })
    }

    /// Convenience builder that synthesizes `id_<object>` identities and
    /// all unit composites, then adds the declared non-identity
    /// composites on top. Fixture categories and file loading use this.
    pub fn with_synthesized_identities(
        objects: Vec<String>,
        morphisms: Vec<MorphismDecl>,
        compose: Vec<(String, String, String)>,
    ) -> Result<Self> {
        let mut all = morphisms;
        let mut identities = BTreeMap::new();
        for o in &objects {
            let id = format!("id_{o}");
            if !all.iter().any(|m| m.id == id) {
                all.push(MorphismDecl::new(&id, o, o));
            }
            identities.insert(o.clone(), id);
        }
        let mut table = BTreeMap::new();
        // Unit composites first, explicit entries may not override them.
        for m in &all {
            let id_src = identities[&m.src].clone();
            let id_dst = identities[&m.dst].clone();
            table.insert((m.id.clone(), id_src), m.id.clone());
            table.insert((id_dst, m.id.clone()), m.id.clone());
        }
        for (g, f, r) in compose {
            table.insert((g, f), r);
        }
        PresentedCategory::new(objects, all, identities, table)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[MorphismDecl] {
        &self.morphisms
    }

    pub fn identities(&self) -> &BTreeMap<String, String> {
        &self.identities
    }

    pub fn compose_table(&self) -> &BTreeMap<(String, String), String> {
        &self.compose_table
    }

    pub fn has_object(&self, o: &str) -> bool {
        self.objects.iter().any(|x| x == o)
    }

    pub fn morphism(&self, id: &str) -> Result<&MorphismDecl> {
        self.mor_ix
            .get(id)
            .map(|&k| &self.morphisms[k])
            .ok_or_else(|| Error::UnknownMorphism(id.into()))
    }

    /// All morphisms `a → b` in declaration order.
    pub fn enumerate_hom(&self, a: &str, b: &str) -> Result<Vec<String>> {
        for o in [a, b] {
            if !self.has_object(o) {
                return Err(Error::UnknownObject(o.into()));
            }
        }
        Ok(self
            .morphisms
            .iter()
            .filter(|m| m.src == a && m.dst == b)
            .map(|m| m.id.clone())
            .collect())
    }

    /// Checks every category law and returns all violations, not just
    /// the first. Law names: `identity-totality`, `identity-typing`,
    /// `compose-totality`, `compose-domain`, `compose-typing`,
    /// `unit-left`, `unit-right`, `associativity`.
    pub fn validate(&self) -> LawReport {
        let mut violations = Vec::new();
        let mut push = |law: &str, witnesses: Vec<&str>| {
            violations.push(Violation {
                law: law.into(),
                witnesses: witnesses.into_iter().map(String::from).collect(),
            });
        };

        for o in &self.objects {
            match self.identities.get(o) {
                None => push("identity-totality", vec![o]),
                Some(id) => {
                    let m = &self.morphisms[self.mor_ix[id]];
                    if m.src != *o || m.dst != *o {
                        push("identity-typing", vec![id]);
                    }
                }
            }
        }

        // The compose table must cover composable pairs exactly.
        for g in &self.morphisms {
            for f in &self.morphisms {
                let composable = f.dst == g.src;
                match self.compose_table.get(&(g.id.clone(), f.id.clone())) {
                    None if composable => push("compose-totality", vec![&g.id, &f.id]),
                    Some(_) if !composable => push("compose-domain", vec![&g.id, &f.id]),
                    Some(r) => {
                        let rm = &self.morphisms[self.mor_ix[r]];
                        if rm.src != f.src || rm.dst != g.dst {
                            push("compose-typing", vec![&g.id, &f.id]);
                        }
                    }
                    None => {}
                }
            }
        }

        // Unit laws for every morphism whose identity endpoints exist.
        for m in &self.morphisms {
            if let Some(id_src) = self.identities.get(&m.src) {
                if let Some(r) = self.compose_table.get(&(m.id.clone(), id_src.clone())) {
                    if r != &m.id {
                        push("unit-right", vec![&m.id]);
                    }
                }
            }
            if let Some(id_dst) = self.identities.get(&m.dst) {
                if let Some(r) = self.compose_table.get(&(id_dst.clone(), m.id.clone())) {
                    if r != &m.id {
                        push("unit-left", vec![&m.id]);
                    }
                }
            }
        }

        // Associativity on every composable triple that the table covers.
        for h in &self.morphisms {
            for g in &self.morphisms {
                if g.dst != h.src {
                    continue;
                }
                for f in &self.morphisms {
                    if f.dst != g.src {
                        continue;
                    }
                    let hg = self.compose_table.get(&(h.id.clone(), g.id.clone()));
                    let gf = self.compose_table.get(&(g.id.clone(), f.id.clone()));
                    if let (Some(hg), Some(gf)) = (hg, gf) {
                        let left = self.compose_table.get(&(hg.clone(), f.id.clone()));
                        let right = self.compose_table.get(&(h.id.clone(), gf.clone()));
                        if let (Some(l), Some(r)) = (left, right) {
                            if l != r {
                                push("associativity", vec![&h.id, &g.id, &f.id]);
                            }
                        }
                    }
                }
            }
        }

        LawReport::from_violations(violations)
    }

    /// The opposite category: sources and targets swapped, composition
    /// arguments reversed, same ids. An involution up to structural
    /// equality.
    pub fn opposite(&self) -> PresentedCategory {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| MorphismDecl::new(&m.id, &m.dst, &m.src))
            .collect();
        let compose = self
            .compose_table
            .iter()
            .map(|((g, f), r)| ((f.clone(), g.clone()), r.clone()))
            .collect();
        PresentedCategory {
            objects: self.objects.clone(),
            morphisms,
            identities: self.identities.clone(),
            compose_table: compose,
            mor_ix: self.mor_ix.clone(),
        }
    }
}

impl FiniteCategory for PresentedCategory {
    type Obj = String;
    type Mor = String;

    fn objects(&self) -> Vec<String> {
        self.objects.clone()
    }

    fn src(&self, m: &String) -> String {
        self.morphisms[self.mor_ix[m]].src.clone()
    }

    fn dst(&self, m: &String) -> String {
        self.morphisms[self.mor_ix[m]].dst.clone()
    }

    fn identity(&self, a: &String) -> Result<String> {
        self.identities
            .get(a)
            .cloned()
            .ok_or_else(|| Error::UnknownObject(a.clone()))
    }

    fn compose(&self, g: &String, f: &String) -> Result<String> {
        let fm = self.morphism(f)?;
        let gm = self.morphism(g)?;
        if fm.dst != gm.src {
            return Err(Error::TypeMismatch(format!(
                "cannot compose `{g}` after `{f}`: middle objects `{}` and `{}` differ",
                fm.dst, gm.src
            )));
        }
        self.compose_table
            .get(&(g.clone(), f.clone()))
            .cloned()
            .ok_or_else(|| {
                Error::MalformedInput(format!("compose table has no entry for (`{g}`, `{f}`)"))
            })
    }

    fn hom(&self, a: &String, b: &String) -> Result<Vec<String>> {
        self.enumerate_hom(a, b)
    }

    fn obj_name(&self, a: &String) -> String {
        a.clone()
    }

    fn mor_name(&self, m: &String) -> String {
        m.clone()
    }
}

/// Small stock categories used as bases throughout the tests and suites.
pub mod fixtures {
    use super::*;

    /// The terminal category: one object `*`, only its identity.
    pub fn terminal() -> PresentedCategory {
        PresentedCategory::with_synthesized_identities(vec!["*".into()], vec![], vec![]).unwrap()
    }

    /// The discrete category on `n` objects `a0..`.
    pub fn discrete(n: usize) -> PresentedCategory {
        let objects = (0..n).map(|k| format!("a{k}")).collect();
        PresentedCategory::with_synthesized_identities(objects, vec![], vec![]).unwrap()
    }

    /// The walking arrow: `a --f--> b`.
    pub fn arrow() -> PresentedCategory {
        PresentedCategory::with_synthesized_identities(
            vec!["a".into(), "b".into()],
            vec![MorphismDecl::new("f", "a", "b")],
            vec![],
        )
        .unwrap()
    }

    /// A parallel pair `f, g : a → b`.
    pub fn parallel_pair() -> PresentedCategory {
        PresentedCategory::with_synthesized_identities(
            vec!["a".into(), "b".into()],
            vec![MorphismDecl::new("f", "a", "b"), MorphismDecl::new("g", "a", "b")],
            vec![],
        )
        .unwrap()
    }

    /// Two mutually inverse morphisms `a ≅ b`.
    pub fn iso_pair() -> PresentedCategory {
        PresentedCategory::with_synthesized_identities(
            vec!["a".into(), "b".into()],
            vec![MorphismDecl::new("f", "a", "b"), MorphismDecl::new("g", "b", "a")],
            vec![
                ("g".into(), "f".into(), "id_a".into()),
                ("f".into(), "g".into(), "id_b".into()),
            ],
        )
        .unwrap()
    }

    /// The free category on the chain `a → b → c → d`, with all
    /// composites named.
    pub fn chain4() -> PresentedCategory {
        PresentedCategory::with_synthesized_identities(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                MorphismDecl::new("f", "a", "b"),
                MorphismDecl::new("g", "b", "c"),
                MorphismDecl::new("h", "c", "d"),
                MorphismDecl::new("gf", "a", "c"),
                MorphismDecl::new("hg", "b", "d"),
                MorphismDecl::new("hgf", "a", "d"),
            ],
            vec![
                ("g".into(), "f".into(), "gf".into()),
                ("h".into(), "g".into(), "hg".into()),
                ("h".into(), "gf".into(), "hgf".into()),
                ("hg".into(), "f".into(), "hgf".into()),
            ],
        )
        .unwrap()
    }
}
