//! Fabrication-defect handling for two-dimensional Floquet codes:
//! lattice construction, the super-plaquette adaptation algorithm and its
//! variants, logical-operator tracking, noisy memory-experiment circuits,
//! Pauli-frame sampling, matching decoding, and Monte-Carlo threshold
//! estimation.

pub mod gf2;
pub mod lattice;
pub mod par;
pub mod pauli;

pub use lattice::{check_lattice, Lattice, LatticeStats};
pub use pauli::{Basis, Colour, PauliString};
