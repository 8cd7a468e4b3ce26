//! Finite sets and functions as a model category.
//!
//! Objects are canonical initial segments `{0..n-1}` represented by their
//! cardinality; there is no object identification up to bijection, so the
//! chosen structure is strictly functional. Products use lexicographic
//! pairing (leftmost factor most significant), coproducts use offset
//! tagging.

use crate::category::{Budget, Chosen, FiniteCategory, ModelCategory};
use crate::error::{Error, Result};

/// The category of finite sets `{0..n-1}` for `n ≤ max_size`.
#[derive(Debug, Clone)]
pub struct FinSet {
    pub max_size: usize,
    pub budget: Budget,
}

/// A function between initial segments, given by its value table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FinSetMor {
    pub src: usize,
    pub dst: usize,
    pub map: Vec<usize>,
}

impl FinSetMor {
    pub fn new(src: usize, dst: usize, map: Vec<usize>) -> Result<Self> {
        if map.len() != src || map.iter().any(|&v| v >= dst) {
            return Err(Error::MalformedInput(format!(
                "function table {map:?} is not a map {src} → {dst}"
            )));
        }
        Ok(FinSetMor { src, dst, map })
    }

    pub fn is_bijection(&self) -> bool {
        if self.src != self.dst {
            return false;
        }
        let mut seen = vec![false; self.dst];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// The inverse table when this is a bijection.
    pub fn inverse(&self) -> Option<FinSetMor> {
        if !self.is_bijection() {
            return None;
        }
        let mut inv = vec![0; self.src];
        for (x, &v) in self.map.iter().enumerate() {
            inv[v] = x;
        }
        Some(FinSetMor {
            src: self.dst,
            dst: self.src,
            map: inv,
        })
    }
}

/// Constructs the model with objects up to `max_size` and the default
/// enumeration budget.
pub fn finset_model(max_size: usize) -> FinSet {
    FinSet {
        max_size,
        budget: Budget::default(),
    }
}

/// Lexicographic encoding of a tuple with the given factor sizes.
pub fn encode_tuple(sizes: &[usize], coords: &[usize]) -> usize {
    let mut x = 0;
    for (k, &c) in coords.iter().enumerate() {
        x = x * sizes[k] + c;
    }
    x
}

/// Inverse of [`encode_tuple`].
pub fn decode_tuple(sizes: &[usize], mut x: usize) -> Vec<usize> {
    let mut coords = vec![0; sizes.len()];
    for k in (0..sizes.len()).rev() {
        coords[k] = x % sizes[k];
        x /= sizes[k];
    }
    coords
}

impl FiniteCategory for FinSet {
    type Obj = usize;
    type Mor = FinSetMor;

    fn objects(&self) -> Vec<usize> {
        (0..=self.max_size).collect()
    }

    fn src(&self, m: &FinSetMor) -> usize {
        m.src
    }

    fn dst(&self, m: &FinSetMor) -> usize {
        m.dst
    }

    fn identity(&self, a: &usize) -> Result<FinSetMor> {
        FinSetMor::new(*a, *a, (0..*a).collect())
    }

    fn compose(&self, g: &FinSetMor, f: &FinSetMor) -> Result<FinSetMor> {
        if f.dst != g.src {
            return Err(Error::TypeMismatch(format!(
                "cannot compose {} → {} after {} → {}",
                g.src, g.dst, f.src, f.dst
            )));
        }
        let map = f.map.iter().map(|&x| g.map[x]).collect();
        FinSetMor::new(f.src, g.dst, map)
    }

    fn hom(&self, a: &usize, b: &usize) -> Result<Vec<FinSetMor>> {
        self.budget.admit(self.hom_count(a, b)?)?;
        let mut out = Vec::new();
        for pick in crate::combinat::choice_functions(&vec![*b; *a]) {
            out.push(FinSetMor::new(*a, *b, pick)?);
        }
        Ok(out)
    }

    fn hom_count(&self, a: &usize, b: &usize) -> Result<u128> {
        // b^a, saturating; the empty source has exactly one map.
        let mut total = 1u128;
        for _ in 0..*a {
            total = total.saturating_mul(*b as u128);
        }
        Ok(total)
    }

    fn obj_name(&self, a: &usize) -> String {
        a.to_string()
    }

    fn mor_name(&self, m: &FinSetMor) -> String {
        let cells: Vec<String> = m.map.iter().map(usize::to_string).collect();
        format!("[{}]", cells.join(" "))
    }
}

impl ModelCategory for FinSet {
    fn product(&self, factors: &[usize]) -> Result<Chosen<usize, FinSetMor>> {
        let size = factors.iter().product();
        let mut legs = Vec::with_capacity(factors.len());
        for k in 0..factors.len() {
            let map = (0..size).map(|x| decode_tuple(factors, x)[k]).collect();
            legs.push(FinSetMor::new(size, factors[k], map)?);
        }
        Ok(Chosen { object: size, legs })
    }

    fn coproduct(&self, summands: &[usize]) -> Result<Chosen<usize, FinSetMor>> {
        let size = summands.iter().sum();
        let mut legs = Vec::with_capacity(summands.len());
        let mut offset = 0;
        for &n in summands {
            legs.push(FinSetMor::new(n, size, (offset..offset + n).collect())?);
            offset += n;
        }
        Ok(Chosen { object: size, legs })
    }

    fn tuple(&self, src: &usize, legs: &[FinSetMor]) -> Result<FinSetMor> {
        let sizes: Vec<usize> = legs.iter().map(|l| l.dst).collect();
        let product: usize = sizes.iter().product();
        let mut map = Vec::with_capacity(*src);
        for x in 0..*src {
            let coords: Vec<usize> = legs
                .iter()
                .map(|l| {
                    if l.src != *src {
                        return Err(Error::TypeMismatch(
                            "tuple legs must share a source".into(),
                        ));
                    }
                    Ok(l.map[x])
                })
                .collect::<Result<_>>()?;
            map.push(encode_tuple(&sizes, &coords));
        }
        FinSetMor::new(*src, product, map)
    }

    fn cotuple(&self, dst: &usize, legs: &[FinSetMor]) -> Result<FinSetMor> {
        let mut map = Vec::new();
        for l in legs {
            if l.dst != *dst {
                return Err(Error::TypeMismatch(
                    "cotuple legs must share a target".into(),
                ));
            }
            map.extend_from_slice(&l.map);
        }
        FinSetMor::new(map.len(), *dst, map)
    }
}
