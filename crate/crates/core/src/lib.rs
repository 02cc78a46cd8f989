//! Exact computations in the Hopf algebra `D` on `g^±1, x, u, y, zeta, v`
//! (a double of the Jordan plane) and the algebras built from it.

pub mod algebra;
pub mod catalog;
pub mod checks;
pub mod error;
pub mod expr;
pub mod fractions;
pub mod fuzz;
pub mod hopf;
pub mod membership;
pub mod ncpoly;
pub mod random;
pub mod rational;
pub mod tower;

pub use error::{Error, Result};
pub use rational::Rational;
