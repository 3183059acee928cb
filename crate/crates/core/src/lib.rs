//! Homological computations for Nakayama algebras, checked against a
//! brute-force engine for bound quiver algebras over prime fields.

pub mod hybrid;
pub mod lab;
pub mod linalg;
pub mod nakayama;
pub mod oracle;
pub mod verdict;

pub use nakayama::{Dimension, NakayamaAlgebra, SerialModule, Shape};
