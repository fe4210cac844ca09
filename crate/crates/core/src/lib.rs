//! Exact computation with finite commutative rings.
//!
//! Rings are built from `Z/n` by products, quotients, monic polynomial
//! quotients, trivial extensions `A ∝ E` and amalgamated duplications
//! `R ⋈ I`. On top of that the crate enumerates ideal lattices, computes
//! annihilators and decides property (A) and strong property (A), each by
//! a lattice-enumerating oracle and by a fast characterization.
//!
//! Conventions: `0` is a zero-divisor of every nonzero ring, and every
//! property query rejects the zero ring.

pub mod axioms;
pub mod classify;
pub mod construct;
pub mod decide;
mod error;
pub mod expr;
pub mod harness;
pub mod ideal;
pub mod iso;
pub mod module;
pub mod ring;

use serde::Serialize;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use module::RingModule;
pub use ring::{Element, Ring, RingId};

/// Resource limits. Exceeding one is always an error, never a silent
/// truncation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest ring whose ideal lattice may be enumerated.
    pub lattice_ring_size: usize,
    /// Largest number of ideals a lattice enumeration may produce.
    pub max_ideals: usize,
    /// Largest ring checked exhaustively by the axiom checker.
    pub axiom_full_size: usize,
    /// Largest ring handed to the isomorphism search.
    pub iso_size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            lattice_ring_size: 4096,
            max_ideals: 200_000,
            axiom_full_size: 512,
            iso_size: 64,
        }
    }
}
