//! Interval orders: ascent-sequence encoding, canonical representations and
//! the structural invariants that constrain interval lengths.

mod ascent;
mod canonical;
mod poset;
mod springs;
mod structure;

pub use ascent::{ascent_of_order, order_from_ascent, AscentSequence};
pub use canonical::{
    canonical_representation, magnitude, verify_order_representation, CanonicalRepresentation,
};
pub use poset::{IntervalOrder, Poset};
pub use springs::{find_springs, SpringWitness, SPRING_LONG_ROLES, SPRING_SHORT_ROLES};
pub use structure::{
    collapse_twins, depth_order, find_chain_plus_one, height, pp_graph, ChainPlusOne, PPGraph,
    TwinCollapse,
};
