//! Quantum cluster algebras attached to quantum affine algebras.
//!
//! The crate builds the quantum Cartan data of a simply-laced type, the
//! slices of the associated infinite quiver with their skew forms, and a
//! quantum torus in which cluster variables are computed by exact quantum
//! mutation. On top of that sit fundamental `(q,t)`-characters, a classical
//! Frenkel–Mukhin oracle and the rank-one identities.

pub mod cartan;
pub mod compat;
pub mod error;
pub mod matrix;
pub mod qcluster;
pub mod qtorus;
pub mod quiver;
pub mod reference;
pub mod render;
pub mod repchar;
pub mod verify;

pub use cartan::{build_cartan, CartanData, DynkinType};
pub use compat::{build_lambda, check_compatible, CompatReport, CompatiblePair};
pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use qcluster::{ClassicalSeed, QuantumSeed, SeedCache};
pub use qtorus::{
    ExpVector, LaurentPoly, QuantumTorus, TCoeff, TorusElement, Weight, WeightExpr, YMonomial,
    YPoly,
};
pub use quiver::{build_slice, build_slice_window, ExchangeMatrix, QuiverSlice, Vertex, Window};
pub use repchar::{
    fundamental_qt_character, mutation_sequence, MutationSequenceSpec, QtCharacter, Verdict,
};
