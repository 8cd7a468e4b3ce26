//! Finite lattices as thin model categories.
//!
//! A lattice file or constructor supplies elements and an order relation
//! (any generating set of pairs; the reflexive-transitive closure is
//! taken). Construction fails with `NotALattice` unless every pair has a
//! meet and a join. Viewed as a category, products are meets and
//! coproducts are joins, with uniquely determined structure morphisms.
//!
//! The module also carries the classical distributivity oracles used to
//! cross-check the categorical characterization: binary distributivity
//! and M3/N5 sublattice detection.

use std::collections::BTreeMap;

use crate::category::{Chosen, FiniteCategory, ModelCategory};
use crate::error::{Error, Result};

/// A finite lattice: elements, order, and meet/join tables (computed and
/// validated at construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    elements: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl FiniteLattice {
    /// Builds a lattice from elements and generating `a ≤ b` pairs.
    pub fn new(elements: Vec<String>, leq_pairs: &[(String, String)]) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::NotALattice("no elements".into()));
        }
        let mut ix = BTreeMap::new();
        for (k, e) in elements.iter().enumerate() {
            if ix.insert(e.clone(), k).is_some() {
                return Err(Error::MalformedInput(format!("duplicate element `{e}`")));
            }
        }
        let n = elements.len();
        let mut leq = vec![vec![false; n]; n];
        for (k, row) in leq.iter_mut().enumerate() {
            row[k] = true;
        }
        for (a, b) in leq_pairs {
            let (&ka, &kb) = match (ix.get(a), ix.get(b)) {
                (Some(ka), Some(kb)) => (ka, kb),
                _ => {
                    return Err(Error::MalformedInput(format!(
                        "order pair ({a},{b}) names unknown elements"
                    )))
                }
            };
            leq[ka][kb] = true;
        }
        // Transitive closure.
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if leq[a][k] && leq[k][b] {
                        leq[a][b] = true;
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::NotALattice(format!(
                        "order is not antisymmetric: {} and {} are equivalent",
                        elements[a], elements[b]
                    )));
                }
            }
        }
        let bound = |a: usize, b: usize, lower: bool| -> Option<usize> {
            let candidates: Vec<usize> = (0..n)
                .filter(|&c| {
                    if lower {
                        leq[c][a] && leq[c][b]
                    } else {
                        leq[a][c] && leq[b][c]
                    }
                })
                .collect();
            // The bound must dominate every other candidate.
            candidates.iter().copied().find(|&c| {
                candidates
                    .iter()
                    .all(|&d| if lower { leq[d][c] } else { leq[c][d] })
            })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = bound(a, b, true).ok_or_else(|| {
                    Error::NotALattice(format!(
                        "{} and {} have no meet",
                        elements[a], elements[b]
                    ))
                })?;
                join[a][b] = bound(a, b, false).ok_or_else(|| {
                    Error::NotALattice(format!(
                        "{} and {} have no join",
                        elements[a], elements[b]
                    ))
                })?;
            }
        }
        Ok(FiniteLattice {
            elements,
            leq,
            meet,
            join,
        })
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, e: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|x| x == e)
            .ok_or_else(|| Error::UnknownObject(e.into()))
    }

    pub fn leq_ix(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet_ix(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join_ix(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// Meet of a list of indices; the empty meet is the top element.
    pub fn meet_all(&self, xs: &[usize]) -> usize {
        xs.iter().copied().fold(self.top(), |a, b| self.meet[a][b])
    }

    /// Join of a list of indices; the empty join is the bottom element.
    pub fn join_all(&self, xs: &[usize]) -> usize {
        xs.iter()
            .copied()
            .fold(self.bottom(), |a, b| self.join[a][b])
    }

    pub fn bottom(&self) -> usize {
        (0..self.len()).fold(0, |a, b| self.meet[a][b])
    }

    pub fn top(&self) -> usize {
        (0..self.len()).fold(0, |a, b| self.join[a][b])
    }

    /// The two-element chain `0 < 1`.
    pub fn chain2() -> FiniteLattice {
        FiniteLattice::new(
            vec!["0".into(), "1".into()],
            &[("0".into(), "1".into())],
        )
        .unwrap()
    }

    /// The diamond M3: three incomparable atoms between bottom and top.
    pub fn m3() -> FiniteLattice {
        let elems = ["0", "a", "b", "c", "1"];
        let pairs: Vec<(String, String)> = [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")]
            .iter()
            .map(|&(x, y)| (x.to_string(), y.to_string()))
            .collect();
        FiniteLattice::new(elems.iter().map(|s| s.to_string()).collect(), &pairs).unwrap()
    }

    /// The pentagon N5: `0 < a < 1` and `0 < b < c < 1` with `a`
    /// incomparable to `b` and `c`.
    pub fn n5() -> FiniteLattice {
        let elems = ["0", "a", "b", "c", "1"];
        let pairs: Vec<(String, String)> = [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")]
            .iter()
            .map(|&(x, y)| (x.to_string(), y.to_string()))
            .collect();
        FiniteLattice::new(elems.iter().map(|s| s.to_string()).collect(), &pairs).unwrap()
    }

    /// The Boolean square 2×2.
    pub fn boolean4() -> FiniteLattice {
        let pairs: Vec<(String, String)> = [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]
            .iter()
            .map(|&(x, y)| (x.to_string(), y.to_string()))
            .collect();
        FiniteLattice::new(
            ["0", "a", "b", "1"].iter().map(|s| s.to_string()).collect(),
            &pairs,
        )
        .unwrap()
    }
}

/// The thin category of a lattice: at most one morphism `a → b`,
/// present iff `a ≤ b`; products are meets, coproducts are joins.
#[derive(Debug, Clone)]
pub struct LatticeModel {
    pub lattice: FiniteLattice,
}

/// A witness `a ≤ b`, the unique morphism from `a` to `b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LeqMor {
    pub src: String,
    pub dst: String,
}

/// Wraps a validated lattice as a model category.
pub fn lattice_model(lattice: FiniteLattice) -> LatticeModel {
    LatticeModel { lattice }
}

impl LatticeModel {
    fn arrow(&self, a: usize, b: usize) -> LeqMor {
        LeqMor {
            src: self.lattice.elements[a].clone(),
            dst: self.lattice.elements[b].clone(),
        }
    }
}

impl FiniteCategory for LatticeModel {
    type Obj = String;
    type Mor = LeqMor;

    fn objects(&self) -> Vec<String> {
        self.lattice.elements.to_vec()
    }

    fn src(&self, m: &LeqMor) -> String {
        m.src.clone()
    }

    fn dst(&self, m: &LeqMor) -> String {
        m.dst.clone()
    }

    fn identity(&self, a: &String) -> Result<LeqMor> {
        self.lattice.index_of(a)?;
        Ok(LeqMor {
            src: a.clone(),
            dst: a.clone(),
        })
    }

    fn compose(&self, g: &LeqMor, f: &LeqMor) -> Result<LeqMor> {
        if f.dst != g.src {
            return Err(Error::TypeMismatch("order witnesses do not chain".into()));
        }
        Ok(LeqMor {
            src: f.src.clone(),
            dst: g.dst.clone(),
        })
    }

    fn hom(&self, a: &String, b: &String) -> Result<Vec<LeqMor>> {
        let ka = self.lattice.index_of(a)?;
        let kb = self.lattice.index_of(b)?;
        Ok(if self.lattice.leq_ix(ka, kb) {
            vec![self.arrow(ka, kb)]
        } else {
            vec![]
        })
    }

    fn obj_name(&self, a: &String) -> String {
        a.clone()
    }

    fn mor_name(&self, m: &LeqMor) -> String {
        format!("{}<={}", m.src, m.dst)
    }
}

impl ModelCategory for LatticeModel {
    fn product(&self, factors: &[String]) -> Result<Chosen<String, LeqMor>> {
        let ixs: Vec<usize> = factors
            .iter()
            .map(|f| self.lattice.index_of(f))
            .collect::<Result<_>>()?;
        let m = self.lattice.meet_all(&ixs);
        let legs = ixs.iter().map(|&k| self.arrow(m, k)).collect();
        Ok(Chosen {
            object: self.lattice.elements[m].clone(),
            legs,
        })
    }

    fn coproduct(&self, summands: &[String]) -> Result<Chosen<String, LeqMor>> {
        let ixs: Vec<usize> = summands
            .iter()
            .map(|f| self.lattice.index_of(f))
            .collect::<Result<_>>()?;
        let j = self.lattice.join_all(&ixs);
        let legs = ixs.iter().map(|&k| self.arrow(k, j)).collect();
        Ok(Chosen {
            object: self.lattice.elements[j].clone(),
            legs,
        })
    }

    fn tuple(&self, src: &String, legs: &[LeqMor]) -> Result<LeqMor> {
        let ks = self.lattice.index_of(src)?;
        let ixs: Vec<usize> = legs
            .iter()
            .map(|l| self.lattice.index_of(&l.dst))
            .collect::<Result<_>>()?;
        let m = self.lattice.meet_all(&ixs);
        if !self.lattice.leq_ix(ks, m) {
            return Err(Error::TypeMismatch(
                "tuple source is not below the meet".into(),
            ));
        }
        Ok(self.arrow(ks, m))
    }

    fn cotuple(&self, dst: &String, legs: &[LeqMor]) -> Result<LeqMor> {
        let kd = self.lattice.index_of(dst)?;
        let ixs: Vec<usize> = legs
            .iter()
            .map(|l| self.lattice.index_of(&l.src))
            .collect::<Result<_>>()?;
        let j = self.lattice.join_all(&ixs);
        if !self.lattice.leq_ix(j, kd) {
            return Err(Error::TypeMismatch(
                "cotuple target is not above the join".into(),
            ));
        }
        Ok(self.arrow(j, kd))
    }
}

/// Classical oracle: binary meets distribute over binary joins.
pub fn is_distributive_binary(l: &FiniteLattice) -> bool {
    let n = l.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = l.meet_ix(a, l.join_ix(b, c));
                let rhs = l.join_ix(l.meet_ix(a, b), l.meet_ix(a, c));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn is_m3(l: &FiniteLattice, s: &[usize]) -> bool {
    // bottom, top and three atoms with pairwise meet = bottom, join = top.
    for perm in five_perms(s) {
        let [bot, x, y, z, top] = perm;
        let mids = [x, y, z];
        let ok = mids.iter().all(|&m| l.leq_ix(bot, m) && l.leq_ix(m, top))
            && mids
                .iter()
                .enumerate()
                .all(|(i, &m)| mids.iter().skip(i + 1).all(|&m2| {
                    l.meet_ix(m, m2) == bot && l.join_ix(m, m2) == top && m != m2
                }))
            && bot != top
            && mids.iter().all(|&m| m != bot && m != top);
        if ok {
            return true;
        }
    }
    false
}

fn is_n5(l: &FiniteLattice, s: &[usize]) -> bool {
    for perm in five_perms(s) {
        let [bot, a, b, c, top] = perm;
        let ok = bot != top
            && [a, b, c].iter().all(|&m| m != bot && m != top)
            && l.leq_ix(b, c)
            && b != c
            && l.meet_ix(a, c) == bot
            && l.join_ix(a, b) == top
            && l.meet_ix(a, b) == bot
            && l.join_ix(a, c) == top
            && !l.leq_ix(a, b)
            && !l.leq_ix(b, a)
            && !l.leq_ix(a, c)
            && !l.leq_ix(c, a);
        if ok {
            return true;
        }
    }
    false
}

fn five_perms(s: &[usize]) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    let mut items = s.to_vec();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<[usize; 5]>) {
    if k == items.len() {
        out.push([items[0], items[1], items[2], items[3], items[4]]);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Classical oracle: a lattice is non-distributive iff it contains M3 or
/// N5 as a sublattice (a five-element subset closed under meet and join
/// with the respective order pattern).
pub fn has_m3_or_n5_sublattice(l: &FiniteLattice) -> bool {
    let n = l.len();
    if n < 5 {
        return false;
    }
    let mut subset = Vec::new();
    subsets_of_size(n, 5, &mut subset, &mut |s| {
        let closed = s.iter().all(|&a| {
            s.iter().all(|&b| {
                s.contains(&l.meet_ix(a, b)) && s.contains(&l.join_ix(a, b))
            })
        });
        closed && (is_m3(l, s) || is_n5(l, s))
    })
}

fn subsets_of_size(
    n: usize,
    size: usize,
    acc: &mut Vec<usize>,
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if acc.len() == size {
        return found(acc);
    }
    let start = acc.last().map_or(0, |&x| x + 1);
    for next in start..n {
        acc.push(next);
        if subsets_of_size(n, size, acc, found) {
            acc.pop();
            return true;
        }
        acc.pop();
    }
    false
}

/// Enumerates all lattices on `n` unlabeled elements (as concrete
/// lattices on elements `x0..`), deduplicated up to isomorphism.
///
/// Works by listing strict orders compatible with a fixed topological
/// labeling and keeping those where all meets and joins exist; feasible
/// for the desk scale (`n ≤ 6`).
pub fn enumerate_lattices(n: usize) -> Vec<FiniteLattice> {
    assert!(n >= 1 && n <= 6, "desk-scale enumeration only");
    let elements: Vec<String> = (0..n).map(|k| format!("x{k}")).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut rel = vec![vec![false; n]; n];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                rel[a][b] = true;
            }
        }
        // Transitivity filter (labels are topologically sorted already).
        let mut transitive = true;
        'tr: for a in 0..n {
            for b in 0..n {
                if !rel[a][b] {
                    continue;
                }
                for c in 0..n {
                    if rel[b][c] && !rel[a][c] {
                        transitive = false;
                        break 'tr;
                    }
                }
            }
        }
        if !transitive {
            continue;
        }
        let leq_pairs: Vec<(String, String)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &(a, b))| (elements[a].clone(), elements[b].clone()))
            .collect();
        let lattice = match FiniteLattice::new(elements.clone(), &leq_pairs) {
            Ok(l) => l,
            Err(_) => continue,
        };
        if seen.insert(canonical_order_form(&lattice)) {
            out.push(lattice);
        }
    }
    out
}

/// Minimal relabeling of the order matrix over all permutations — an
/// isomorphism invariant for deduplication.
fn canonical_order_form(l: &FiniteLattice) -> Vec<bool> {
    let n = l.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut flat = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                flat.push(l.leq_ix(perm[a], perm[b]));
            }
        }
        if best.as_ref().map_or(true, |b| flat < *b) {
            best = Some(flat);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_diamonds_validate() {
        assert_eq!(FiniteLattice::chain2().len(), 2);
        assert_eq!(FiniteLattice::m3().len(), 5);
        assert_eq!(FiniteLattice::n5().len(), 5);
        assert_eq!(FiniteLattice::boolean4().len(), 4);
    }

    #[test]
    fn non_lattice_is_rejected() {
        // Two incomparable elements with no bounds.
        let err = FiniteLattice::new(vec!["a".into(), "b".into()], &[]).unwrap_err();
        assert!(matches!(err, Error::NotALattice(_)));
    }

    #[test]
    fn antisymmetry_violation_is_rejected() {
        let err = FiniteLattice::new(
            vec!["a".into(), "b".into()],
            &[("a".into(), "b".into()), ("b".into(), "a".into())],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotALattice(_)));
    }

    #[test]
    fn binary_distributivity_oracle() {
        assert!(is_distributive_binary(&FiniteLattice::chain2()));
        assert!(is_distributive_binary(&FiniteLattice::boolean4()));
        assert!(!is_distributive_binary(&FiniteLattice::m3()));
        assert!(!is_distributive_binary(&FiniteLattice::n5()));
    }

    #[test]
    fn sublattice_oracle_matches_on_witness_lattices() {
        assert!(has_m3_or_n5_sublattice(&FiniteLattice::m3()));
        assert!(has_m3_or_n5_sublattice(&FiniteLattice::n5()));
        assert!(!has_m3_or_n5_sublattice(&FiniteLattice::boolean4()));
    }

    #[test]
    fn meets_and_joins_in_m3() {
        let l = FiniteLattice::m3();
        let a = l.index_of("a").unwrap();
        let b = l.index_of("b").unwrap();
        assert_eq!(l.elements()[l.meet_ix(a, b)], "0");
        assert_eq!(l.elements()[l.join_ix(a, b)], "1");
    }

    #[test]
    fn lattice_counts_small() {
        assert_eq!(enumerate_lattices(1).len(), 1);
        assert_eq!(enumerate_lattices(2).len(), 1);
        assert_eq!(enumerate_lattices(3).len(), 1);
        assert_eq!(enumerate_lattices(4).len(), 2);
        assert_eq!(enumerate_lattices(5).len(), 5);
    }
}
