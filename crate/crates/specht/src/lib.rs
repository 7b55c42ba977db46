//! Exact-arithmetic Specht modules for hook partitions over the quiver Hecke
//! algebra at quantum characteristic 2: standard and domino tableau
//! combinatorics, a generic generator-reduction engine, closed-form domino
//! actions, the distinguished endomorphism with its spectrum, and a
//! brute-force verification layer.

pub mod domino;
pub mod endomorphism;
pub mod engine;
pub mod error;
pub mod hook_actions;
pub mod matrix;
pub mod oracle;
pub mod scalar;
pub mod shape;
pub mod tableau;

pub use endomorphism::{decide, Verdict};
pub use engine::{Generator, GeneratorWord, ModuleElement, SpechtModule};
pub use error::SpechtError;
pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar};
pub use shape::HookShape;
pub use tableau::StandardTableau;
