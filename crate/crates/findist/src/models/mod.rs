//! Concrete model categories with chosen products and coproducts:
//! finite sets, finite lattices (thin categories), and the
//! sum-of-products category itself wrapped behind the same interface.

pub mod finset;
pub mod lattice;

pub use finset::{finset_model, FinSet, FinSetMor};
pub use lattice::{
    enumerate_lattices, has_m3_or_n5_sublattice, is_distributive_binary, lattice_model,
    FiniteLattice, LatticeModel, LeqMor,
};

use crate::category::{Budget, FiniteCategory};
use crate::combinat::choice_functions;
use crate::dist::{DistCat, SizeCaps};
use crate::distlaw::{check_distributor_iso, DistributorFamily};
use crate::error::Result;

/// Wraps a sum-of-products category over `base` as a model, restricted
/// to the given caps for its object enumeration surface.
pub fn dist_as_model<'a, B: FiniteCategory>(
    base: &'a B,
    caps: SizeCaps,
    budget: Budget,
) -> DistCat<'a, B> {
    DistCat::new(base, budget, caps)
}

/// Whether a finite lattice is completely distributive, decided through
/// the canonical distributor.
///
/// In a finite lattice, distributivity of binary meets over binary joins
/// already implies complete distributivity, so exhausting the two-row
/// families decides the property for families of any size bounded by the
/// lattice; the suite runs all families with at most two rows of at most
/// two entries, plus all two-row families whose rows are arbitrary
/// subsets of the carrier. Cross-checked elsewhere against the binary
/// oracle and M3/N5 sublattice detection.
pub fn is_completely_distributive_finite(l: &FiniteLattice, budget: Budget) -> Result<bool> {
    let model = lattice_model(l.clone());
    let elements = l.elements();
    let n = elements.len();

    // All families with |J| ≤ 2 rows and |I_j| ≤ 2 entries.
    for rows in 0..=2usize {
        for row_sizes in choice_functions(&vec![3; rows]) {
            let total: usize = row_sizes.iter().sum();
            for assignment in choice_functions(&vec![n; total]) {
                let mut cells = assignment.iter();
                let family = DistributorFamily::new(
                    row_sizes
                        .iter()
                        .enumerate()
                        .map(|(j, &size)| {
                            let entries = (0..size)
                                .map(|i| (format!("i{i}"), elements[*cells.next().unwrap()].clone()))
                                .collect();
                            (format!("j{j}"), entries)
                        })
                        .collect(),
                )?;
                if !check_distributor_iso(&model, &family, budget)? {
                    return Ok(false);
                }
            }
        }
    }

    // All two-row families whose rows are arbitrary subsets.
    for mask_a in 0u32..(1 << n) {
        for mask_b in 0u32..(1 << n) {
            let row = |mask: u32, j: usize| {
                let entries: Vec<(String, String)> = (0..n)
                    .filter(|&k| mask & (1 << k) != 0)
                    .map(|k| (format!("i{k}"), elements[k].clone()))
                    .collect();
                (format!("j{j}"), entries)
            };
            let family = DistributorFamily::new(vec![row(mask_a, 0), row(mask_b, 1)])?;
            if !check_distributor_iso(&model, &family, budget)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_completely_distributive() {
        let l = FiniteLattice::chain2();
        assert!(is_completely_distributive_finite(&l, Budget::default()).unwrap());
    }

    #[test]
    fn m3_and_n5_are_not() {
        assert!(!is_completely_distributive_finite(&FiniteLattice::m3(), Budget::default())
            .unwrap());
        assert!(!is_completely_distributive_finite(&FiniteLattice::n5(), Budget::default())
            .unwrap());
    }
}
