//! Cayley-table substrate: magmas, semigroups, groups and heaps.
//!
//! Elements are dense indices `0..n`. No labeling convention is assumed; in
//! particular a group's identity need not be `0`.

mod group;
mod heap;
mod iso;
mod magma;
mod named;

pub use group::GroupTable;
pub use heap::HeapView;
pub use iso::{find_bijections, find_isomorphisms, invert, is_bijection, validate_map};
pub use magma::MagmaTable;
pub use named::{canonical_group_name, named_group};

/// Checks associativity of a magma, returning the first failing triple.
pub fn validate_semigroup(m: &MagmaTable) -> Result<(), [usize; 3]> {
    m.associativity().into_result()
}

/// Validates a magma as a group, locating identity and inverses.
pub fn validate_group(m: MagmaTable) -> Result<GroupTable, crate::GroupError> {
    GroupTable::from_magma(m)
}
