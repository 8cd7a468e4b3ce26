//! File schemas: JSON loaders and writers for categories, family
//! objects, sum-of-products objects and morphisms, distributor families,
//! and lattices. All schema violations surface as `MalformedInput`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::combinat::{label_embeddable, pair_label, split_pair_label};
use crate::dist::{DistMorphism, DistObject, DistTable};
use crate::distlaw::DistributorFamily;
use crate::error::{Error, Result};
use crate::fam::FamObject;
use crate::models::lattice::FiniteLattice;
use crate::presented::{MorphismDecl, PresentedCategory};

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))
}

fn check_label(label: &str) -> Result<()> {
    if label_embeddable(label) {
        Ok(())
    } else {
        Err(Error::MalformedInput(format!(
            "label `{label}` has unbalanced brackets or a top-level comma"
        )))
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct CategoryFile {
    objects: Vec<String>,
    #[serde(default)]
    morphisms: Vec<MorphismFile>,
    #[serde(default)]
    identities: BTreeMap<String, String>,
    #[serde(default)]
    compose: Vec<ComposeFile>,
}

#[derive(Debug, Serialize, Deserialize)]
struct MorphismFile {
    id: String,
    src: String,
    dst: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct ComposeFile {
    g: String,
    f: String,
    result: String,
}

/// Loads a presented category. Identities missing from the file are
/// synthesized with id `id_<object>`, and unit composites are filled in
/// wherever the file does not supply them explicitly.
pub fn load_category(text: &str) -> Result<PresentedCategory> {
    let file: CategoryFile = parse(text)?;
    let mut morphisms: Vec<MorphismDecl> = file
        .morphisms
        .iter()
        .map(|m| MorphismDecl::new(&m.id, &m.src, &m.dst))
        .collect();
    let mut identities = file.identities;
    for o in &file.objects {
        if !identities.contains_key(o) {
            let id = format!("id_{o}");
            if !morphisms.iter().any(|m| m.id == id) {
                morphisms.push(MorphismDecl::new(&id, o, o));
            }
            identities.insert(o.clone(), id);
        }
    }
    let mut table: BTreeMap<(String, String), String> = file
        .compose
        .into_iter()
        .map(|c| ((c.g, c.f), c.result))
        .collect();
    for m in &morphisms {
        if let (Some(id_src), Some(id_dst)) = (identities.get(&m.src), identities.get(&m.dst)) {
            table
                .entry((m.id.clone(), id_src.clone()))
                .or_insert_with(|| m.id.clone());
            table
                .entry((id_dst.clone(), m.id.clone()))
                .or_insert_with(|| m.id.clone());
        }
    }
    PresentedCategory::new(file.objects, morphisms, identities, table)
}

/// Serializes a presented category in the schema accepted by
/// [`load_category`].
pub fn category_to_json(cat: &PresentedCategory) -> String {
    let file = CategoryFile {
        objects: cat.objects().to_vec(),
        morphisms: cat
            .morphisms()
            .iter()
            .map(|m| MorphismFile {
                id: m.id.clone(),
                src: m.src.clone(),
                dst: m.dst.clone(),
            })
            .collect(),
        identities: cat.identities().clone(),
        compose: cat
            .compose_table()
            .iter()
            .map(|((g, f), r)| ComposeFile {
                g: g.clone(),
                f: f.clone(),
                result: r.clone(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("category serializes")
}

#[derive(Debug, Serialize, Deserialize)]
struct FamObjectFile {
    index: Vec<String>,
    entries: BTreeMap<String, String>,
}

/// Loads a family object with string entries (base object ids).
pub fn load_fam_object(text: &str) -> Result<FamObject<String>> {
    let file: FamObjectFile = parse(text)?;
    if file.entries.len() != file.index.len() {
        return Err(Error::MalformedInput(
            "entries do not match the index".into(),
        ));
    }
    let pairs = file
        .index
        .iter()
        .map(|i| {
            let entry = file.entries.get(i).ok_or_else(|| {
                Error::MalformedInput(format!("index label `{i}` has no entry"))
            })?;
            Ok((i.clone(), entry.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    FamObject::new(pairs)
}

/// Serializes a family object.
pub fn fam_object_to_json(x: &FamObject<String>) -> String {
    let file = FamObjectFile {
        index: x.index().to_vec(),
        entries: x
            .index()
            .iter()
            .map(|i| (i.clone(), x.entry(i).unwrap().clone()))
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("family object serializes")
}

#[derive(Debug, Serialize, Deserialize)]
struct DistObjectFile {
    outer: Vec<String>,
    inner: BTreeMap<String, Vec<String>>,
    entries: BTreeMap<String, String>,
}

fn dist_object_from_file(file: &DistObjectFile) -> Result<DistObject<String>> {
    if file.inner.len() != file.outer.len() {
        return Err(Error::MalformedInput(
            "inner families do not match the outer index".into(),
        ));
    }
    let mut used = 0usize;
    let mut shapes = Vec::with_capacity(file.outer.len());
    for j in &file.outer {
        check_label(j)?;
        let positions = file.inner.get(j).ok_or_else(|| {
            Error::MalformedInput(format!("outer label `{j}` has no inner family"))
        })?;
        let mut row = Vec::with_capacity(positions.len());
        for i in positions {
            check_label(i)?;
            let key = pair_label(j, i);
            let entry = file
                .entries
                .get(&key)
                .ok_or_else(|| Error::MalformedInput(format!("position `{key}` has no entry")))?;
            used += 1;
            row.push((i.clone(), entry.clone()));
        }
        shapes.push((j.clone(), row));
    }
    if used != file.entries.len() {
        return Err(Error::MalformedInput(
            "entries contain keys outside the declared positions".into(),
        ));
    }
    DistObject::new(shapes)
}

/// Loads a sum-of-products object with string entries.
pub fn load_dist_object(text: &str) -> Result<DistObject<String>> {
    dist_object_from_file(&parse(text)?)
}

fn dist_object_to_file(x: &DistObject<String>) -> DistObjectFile {
    let mut inner = BTreeMap::new();
    let mut entries = BTreeMap::new();
    for j in x.outer() {
        let positions = x.inner(j).unwrap().to_vec();
        for i in &positions {
            entries.insert(pair_label(j, i), x.entry(j, i).unwrap().clone());
        }
        inner.insert(j.clone(), positions);
    }
    DistObjectFile {
        outer: x.outer().to_vec(),
        inner,
        entries,
    }
}

/// Serializes a sum-of-products object.
pub fn dist_object_to_json(x: &DistObject<String>) -> String {
    serde_json::to_string_pretty(&dist_object_to_file(x)).expect("object serializes")
}

/// Compact one-line serialization, used in report records.
pub fn dist_object_to_compact_json(x: &DistObject<String>) -> String {
    serde_json::to_string(&dist_object_to_file(x)).expect("object serializes")
}

#[derive(Debug, Serialize, Deserialize)]
struct DistMorphismFile {
    src: DistObjectFile,
    dst: DistObjectFile,
    /// `j ↦ {"to": j', "inner": {i' ↦ [i, morphism id]}}`.
    table: BTreeMap<String, DistRowFile>,
}

#[derive(Debug, Serialize, Deserialize)]
struct DistRowFile {
    to: String,
    inner: BTreeMap<String, (String, String)>,
}

/// Loads a sum-of-products morphism with string components.
pub fn load_dist_morphism(text: &str) -> Result<DistMorphism<String, String>> {
    let file: DistMorphismFile = parse(text)?;
    let src = dist_object_from_file(&file.src)?;
    let dst = dist_object_from_file(&file.dst)?;
    let mut table: DistTable<String> = BTreeMap::new();
    for (j, row) in file.table {
        let inner = row.inner.into_iter().map(|(i2, v)| (i2, v)).collect();
        table.insert(j, (row.to, inner));
    }
    DistMorphism::new(src, dst, table)
}

/// Serializes a sum-of-products morphism.
pub fn dist_morphism_to_json(m: &DistMorphism<String, String>) -> String {
    let table = m
        .table
        .iter()
        .map(|(j, (j2, inner))| {
            (
                j.clone(),
                DistRowFile {
                    to: j2.clone(),
                    inner: inner.clone(),
                },
            )
        })
        .collect();
    let file = DistMorphismFile {
        src: dist_object_to_file(&m.src),
        dst: dist_object_to_file(&m.dst),
        table,
    };
    serde_json::to_string_pretty(&file).expect("morphism serializes")
}

#[derive(Debug, Serialize, Deserialize)]
struct FamilyFile {
    #[serde(rename = "J")]
    j: Vec<String>,
    #[serde(rename = "I")]
    i: BTreeMap<String, Vec<String>>,
    entries: BTreeMap<String, Value>,
}

fn family_rows(file: &FamilyFile) -> Result<Vec<(String, Vec<(String, Value)>)>> {
    if file.i.len() != file.j.len() {
        return Err(Error::MalformedInput(
            "row index map does not match J".into(),
        ));
    }
    let mut used = 0usize;
    let mut rows = Vec::with_capacity(file.j.len());
    for j in &file.j {
        check_label(j)?;
        let cols = file
            .i
            .get(j)
            .ok_or_else(|| Error::MalformedInput(format!("row `{j}` missing from the I map")))?;
        let mut row = Vec::with_capacity(cols.len());
        for i in cols {
            check_label(i)?;
            let key = pair_label(j, i);
            let spec = file
                .entries
                .get(&key)
                .ok_or_else(|| Error::MalformedInput(format!("cell `{key}` has no entry")))?;
            used += 1;
            row.push((i.clone(), spec.clone()));
        }
        rows.push((j.clone(), row));
    }
    if used != file.entries.len() {
        return Err(Error::MalformedInput(
            "entries contain keys outside the declared cells".into(),
        ));
    }
    Ok(rows)
}

/// Loads a distributor family whose entries are finite-set cardinalities.
pub fn load_family_finset(text: &str) -> Result<DistributorFamily<usize>> {
    let file: FamilyFile = parse(text)?;
    let rows = family_rows(&file)?
        .into_iter()
        .map(|(j, row)| {
            let row = row
                .into_iter()
                .map(|(i, v)| match v.as_u64() {
                    Some(n) => Ok((i, n as usize)),
                    None => Err(Error::MalformedInput(format!(
                        "cell `{}` is not a cardinality",
                        pair_label(&j, &i)
                    ))),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((j, row))
        })
        .collect::<Result<Vec<_>>>()?;
    DistributorFamily::new(rows)
}

/// Loads a distributor family whose entries are lattice element names.
pub fn load_family_lattice(text: &str) -> Result<DistributorFamily<String>> {
    let file: FamilyFile = parse(text)?;
    let rows = family_rows(&file)?
        .into_iter()
        .map(|(j, row)| {
            let row = row
                .into_iter()
                .map(|(i, v)| match v.as_str() {
                    Some(name) => Ok((i, name.to_string())),
                    None => Err(Error::MalformedInput(format!(
                        "cell `{}` is not an element name",
                        pair_label(&j, &i)
                    ))),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((j, row))
        })
        .collect::<Result<Vec<_>>>()?;
    DistributorFamily::new(rows)
}

/// Loads a distributor family whose entries are inline sum-of-products
/// objects.
pub fn load_family_dist(text: &str) -> Result<DistributorFamily<DistObject<String>>> {
    let file: FamilyFile = parse(text)?;
    let rows = family_rows(&file)?
        .into_iter()
        .map(|(j, row)| {
            let row = row
                .into_iter()
                .map(|(i, v)| {
                    let nested: DistObjectFile = serde_json::from_value(v)
                        .map_err(|e| Error::MalformedInput(e.to_string()))?;
                    Ok((i, dist_object_from_file(&nested)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((j, row))
        })
        .collect::<Result<Vec<_>>>()?;
    DistributorFamily::new(rows)
}

#[derive(Debug, Serialize, Deserialize)]
struct LatticeFile {
    elements: Vec<String>,
    #[serde(default)]
    leq: Vec<(String, String)>,
}

/// Loads a lattice; meets and joins are computed and validated here.
pub fn load_lattice(text: &str) -> Result<FiniteLattice> {
    let file: LatticeFile = parse(text)?;
    FiniteLattice::new(file.elements, &file.leq)
}

/// Whether a file looks like a lattice rather than a category, by its
/// top-level keys.
pub fn sniff_lattice(text: &str) -> bool {
    serde_json::from_str::<Value>(text)
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("elements")))
        .unwrap_or(false)
}

/// Splits an `entries` key back into its labels, for error reporting.
pub fn entry_key_labels(key: &str) -> Result<(String, String)> {
    split_pair_label(key)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn category_round_trip() {
        let text = r#"{
            "objects": ["a", "b"],
            "morphisms": [{"id": "f", "src": "a", "dst": "b"}]
        }"#;
        let cat = load_category(text).unwrap();
        assert!(cat.validate().passed);
        let again = load_category(&category_to_json(&cat)).unwrap();
        assert_eq!(cat, again);
    }

    #[test]
    fn truncated_file_is_malformed() {
        assert!(matches!(
            load_category("{\"objects\": [\"a\""),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn dist_object_round_trip() {
        let text = r#"{
            "outer": ["s0"],
            "inner": {"s0": ["p0", "p1"]},
            "entries": {"(s0,p0)": "*", "(s0,p1)": "*"}
        }"#;
        let x = load_dist_object(text).unwrap();
        assert_eq!(x.shape_profile(), vec![2]);
        let again = load_dist_object(&dist_object_to_json(&x)).unwrap();
        assert_eq!(x, again);
    }

    #[test]
    fn dist_object_missing_entry_is_malformed() {
        let text = r#"{
            "outer": ["s0"],
            "inner": {"s0": ["p0"]},
            "entries": {}
        }"#;
        assert!(matches!(
            load_dist_object(text),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn family_entry_kinds() {
        let finset = r#"{
            "J": ["j0"], "I": {"j0": ["i0"]},
            "entries": {"(j0,i0)": 2}
        }"#;
        assert!(load_family_finset(finset).is_ok());
        assert!(load_family_lattice(finset).is_err());
    }

    #[test]
    fn lattice_file_loads() {
        let text = r#"{
            "elements": ["0", "1"],
            "leq": [["0", "1"]]
        }"#;
        let l = load_lattice(text).unwrap();
        assert_eq!(l.len(), 2);
        assert!(sniff_lattice(text));
        assert!(!sniff_lattice("{\"objects\": []}"));
    }
}
