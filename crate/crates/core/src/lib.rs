//! Hamiltonian time paths of the complete time graph `K_n^T`.
//!
//! The crate models the layered graph whose source `(0, 0)` reaches the sink
//! `(0, n + 1)` through one city per day, maps city sequences to incidence
//! vectors in `Q^E`, and certifies an upper-triangular basis of the span of
//! all Hamiltonian time paths (dimension `n(n-1)(n-2) + 1` for `n >= 5`).
//!
//! Everything here is pure computation on `alloc`; file formats, timing and
//! the command line live in the `timegraph` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod annihilators;
pub mod basis;
mod error;
pub mod graph;
pub mod linalg;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{CitySequence, Edge, EdgeVector, Htp, Order, TimeGraph};
pub use linalg::{Subspace, Vector};

/// `n(n-1)(n-2) + 1`, the dimension of the htp span for `n >= 5`.
pub fn basis_size(n: usize) -> usize {
    n * (n - 1) * (n - 2) + 1
}

/// `n^2 + n - 1`, the size of the annihilator family.
pub fn annihilator_count(n: usize) -> usize {
    n * n + n - 1
}
