//! Interval representations with few distinct lengths.
//!
//! The crate covers two closely related objects:
//!
//! * **permutations**, represented by intervals whose right endpoints are in
//!   natural order and whose left endpoints follow the permutation, and
//! * **interval orders**, finite posets whose elements can be mapped to closed
//!   intervals so that `x ≺ y` exactly when `x` lies entirely left of `y`.
//!
//! For both it provides structural analysis (depth, forced nestings, peel/pith
//! graph, springs), constructive 2-count representations (depth-2
//! permutations, height-3 depth-2 interval orders), and exact k-count decision
//! oracles built on a rational simplex kernel.

pub mod construct2;
pub mod error;
pub mod explorer;
pub mod family;
pub mod height3;
pub mod io;
pub mod kcount;
pub mod lp;
pub mod order;
pub mod perm;
pub mod rational;
pub mod render;

pub use error::{Error, Result};
pub use family::{IntervalFamily, Role};
pub use order::{AscentSequence, CanonicalRepresentation, IntervalOrder, Poset};
pub use perm::{Permutation, SortedColoring};
pub use rational::Rational;

/// Version tag carried by every JSON document this crate emits.
pub const SCHEMA: &str = "intervalia/1";
