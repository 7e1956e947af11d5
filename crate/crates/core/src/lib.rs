//! Exact arithmetic for word algebras over the alphabets X, Y and B, their
//! Hopf structures, derivations and brackets, and the bounded-weight
//! stabilizer computations built on top of them.

pub mod brackets;
pub mod comparison;
pub mod derivations;
pub mod error;
pub mod freelie;
pub mod hopf;
pub mod ncpoly;
pub mod parse;
pub mod qlinalg;
pub mod rational;
pub mod stabilizers;
pub mod word;
pub mod wordmaps;

pub use error::{Error, Result};
pub use freelie::SubspaceBasis;
pub use hopf::Tensor2;
pub use ncpoly::NCPoly;
pub use parse::parse_poly;
pub use qlinalg::QMatrix;
pub use rational::Rat;
pub use word::{Alphabet, Bidegree, Letter, Word};
