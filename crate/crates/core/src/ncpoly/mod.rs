//! Noncommutative polynomials over the rationals with normal-form rewriting.

mod maps;
mod monomial;
mod poly;
mod presentation;
mod reduce;

pub use maps::{
    apply_map, check_map_is_morphism, is_central, is_sigma_normal, AlgebraMap, MapReport, Witness,
};
pub use monomial::{Letter, Monomial, MAX_GENERATORS};
pub use poly::{print_order, FreePolynomial, NCPolynomial, Word};
pub use presentation::{
    FreeAlgebra, GeneratorInfo, InverseSwapRule, Presentation, SwapRule, DEFAULT_STEP_BUDGET,
};
pub use reduce::{
    commutator, level_degree, multiply, normal_form, validate_presentation, Reducer,
    ValidationEntry, ValidationReport,
};
