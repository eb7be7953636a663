//! Torus-knot invariants and Gordian adjacency.

pub mod adjacency;
pub mod angle;
pub mod braid;
pub mod error;
pub mod seifert;
pub mod signature;
pub mod torus;

pub use angle::Angle;
pub use braid::{BraidWord, Letter};
pub use error::{Error, Result};
pub use torus::TorusKnot;
