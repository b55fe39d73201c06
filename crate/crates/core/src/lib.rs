//! S-fence posets, their filter lattices (Fibonacci-like cubes) and the
//! rank, cube, maximal-cube and degree polynomials attached to them.
//!
//! Every polynomial can be obtained several ways: by brute-force census on
//! an explicit Hasse diagram ([`census`]), by recurrence or closed-form
//! coefficient formula ([`formula`]), and by expanding a rational
//! generating function ([`gf`]). [`verify`] runs them against each other.
#![allow(clippy::needless_range_loop)]

pub mod bitset;
pub mod census;
pub mod error;
pub mod family;
pub mod formula;
pub mod gf;
pub mod graph;
pub mod lattice;
pub mod poly;
pub mod poset;
pub mod structure;
pub mod tables;
pub mod verify;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use family::Family;
pub use lattice::{filter_lattice, Interval, LatticeDiagram};
pub use poly::IntPoly;
pub use poset::{make_fence, make_sfence, Poset};
