//! Iterated Ore extensions over a commutative fraction base: the quotient
//! `T = D/(qD + sD)`, its radical extensions and the map `π: D → T`.

mod base;
mod build;
mod checks;
mod laurent;
mod skew;

pub use base::{CommBase, Derivation, RatFunc};
pub use build::*;
pub use checks::{h_inner, invariant_ideal, ore_laws, pi_morphism, radical_tower, t_relations};
pub use laurent::Laurent;
pub use skew::{SkewVariable, Tower, TowerAlgebra, TowerElement, VarExponents, MAX_VARS};
