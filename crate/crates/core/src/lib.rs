//! Construction, certification and structural analysis of C4-free
//! subgraphs of the hypercube `Q_n`.
//!
//! The crate is organised bottom-up:
//!
//! - [`cube`]: vertex, edge and four-cycle encodings, incidence tables and
//!   hypercube automorphisms;
//! - [`verify`]: exhaustive C4-freeness certification and non-edge analysis;
//! - [`search`]: two-phase simulated annealing with incremental evaluation;
//! - [`exact`] and [`ilp`]: exact optima for tiny cubes and the 0/1 program
//!   in MPS form for external solvers;
//! - [`analyze`]: degrees, spectra, trace identities, dimension profiles and
//!   corpus statistics.

pub mod analyze;
pub mod cube;
pub mod error;
pub mod exact;
pub mod ilp;
pub mod search;
pub mod verify;

pub use cube::{Dim, EdgeId, EdgeSet, Vertex};
pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/hypercube.md")]
    mod hypercube {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/annealing.md")]
    mod annealing {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/analysis.md")]
    mod analysis {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
