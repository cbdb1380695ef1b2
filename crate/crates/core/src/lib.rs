//! Algebraic construction and verification of negacyclic MDS convolutional
//! codes, classical and quantum.
//!
//! The crate is layered bottom-up: [`fields`] provides exact arithmetic in the
//! tower GF(q²) ⊂ GF(q⁴); [`polyring`] and [`matrix`] add polynomials and
//! dense linear algebra over those fields; [`negacyclic`] builds negacyclic
//! BCH block codes from cyclotomic cosets; [`convolutional`] turns split
//! parity-check matrices into convolutional codes and measures them;
//! [`quantum`] maps self-orthogonal classical codes to stabilizer-code
//! parameters; [`families`] ties everything into per-instance verification
//! pipelines and table reproduction.

pub mod convolutional;
pub mod error;
pub mod families;
pub mod fields;
pub mod matrix;
pub mod negacyclic;
pub mod numtheory;
pub mod polyring;
pub mod quantum;

pub use error::{Error, Result};
