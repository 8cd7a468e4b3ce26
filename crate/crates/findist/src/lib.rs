//! Finite free sum-of-products completions, executably.
//!
//! Starting from a finitely presented base category, this crate builds
//! the free coproduct completion ([`fam`]) and the free coproduct
//! completion of the free product completion ([`dist`]) with explicit
//! objects and morphism tables, and verifies by finite enumeration the
//! structure these categories carry: products, coproducts, their
//! universal properties, Dialectica-style exponentials with concrete
//! `curry`/`uncurry`, and the distributive law relating products of sums
//! to sums of products ([`distlaw`]).
//!
//! Concrete model categories — finite sets, finite lattices, and the
//! sum-of-products category itself — implement a common chosen-structure
//! interface ([`category::ModelCategory`]) against which the canonical
//! distributor morphism is built and its invertibility decided by
//! exhaustive search ([`models`]).
//!
//! Everything is deterministic: ids and labels are strings, every
//! enumeration follows declaration order, and every potentially large
//! enumeration is capped by an explicit budget.

pub mod category;
pub mod combinat;
pub mod dist;
pub mod distlaw;
pub mod error;
pub mod fam;
pub mod laws;
pub mod models;
pub mod presented;
pub mod schema;

pub use category::{Budget, Chosen, Cone, ConeDirection, FiniteCategory, ModelCategory};
pub use error::{Error, Result};
pub use presented::{LawReport, MorphismDecl, PresentedCategory, Violation};
