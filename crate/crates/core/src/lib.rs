//! Generating graphs of finite groups.
//!
//! The library materializes finite groups (Cayley tables, permutation
//! groups), builds the generating graph — vertices are group elements,
//! edges are the pairs that generate the whole group — and decides
//! forbidden-induced-subgraph properties of the result: cograph,
//! perfect (odd holes / odd antiholes), chordal, split and C4-free.
//!
//! Everything is `no_std + alloc`: the crate is pure combinatorics on
//! dense tables and bit rows. IO, file formats and the command line
//! front end live in the companion `gengraph-cli` crate.
//!
//! All values are immutable after construction and every operation is a
//! deterministic function of its inputs, so shared instances may be
//! queried concurrently.

#![no_std]

extern crate alloc;

pub mod bitset;
pub mod error;
pub mod families;
pub mod gengraph;
pub mod graph;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod permgroup;
pub mod props;

pub use error::GroupError;

/// Largest group order the library will lay out as an explicit
/// multiplication table unless the caller overrides the cap.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Largest group order for which the full subgroup lattice is computed
/// unless the caller overrides the cap.
pub const DEFAULT_LATTICE_CAP: usize = 512;
