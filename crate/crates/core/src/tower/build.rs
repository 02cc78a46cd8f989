use super::base::{CommBase, Derivation, RatFunc};
use super::laurent::Laurent;
use super::skew::{SkewVariable, Tower, TowerAlgebra, TowerElement};
use crate::error::Result;
use crate::ncpoly::{AlgebraMap, Letter, Presentation};
use crate::rational::Rational;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn lin(terms: &[(Rational, i32, i32)]) -> CommBase {
    let mut l = Laurent::zero();
    for (c, a, b) in terms {
        l = l.add(&Laurent::term(c.clone(), *a, *b));
    }
    CommBase::from_rat(RatFunc::from_laurent(l))
}

/// `∂₁(u) = -ux/2 - 2`, `∂₁(x) = -x²/2`.
pub fn partial_1() -> Derivation {
    Derivation::new(
        "∂1",
        lin(&[(r(-1, 2), 1, 1), (r(-2, 1), 0, 0)]),
        lin(&[(r(-1, 2), 0, 2)]),
    )
}

/// `∂₂(u) = -u²/2`, `∂₂(x) = 3ux/2 + 2`.
pub fn partial_2() -> Derivation {
    Derivation::new(
        "∂2",
        lin(&[(r(-1, 2), 2, 0)]),
        lin(&[(r(3, 2), 1, 1), (r(2, 1), 0, 0)]),
    )
}

/// `∂̃₂ = h ∂₂`.
pub fn partial_2_tilde() -> Derivation {
    partial_2().scaled("∂~2", &CommBase::h())
}

/// `μ = -h u² (ux+4)^-1`.
pub fn mu() -> CommBase {
    CommBase::new(
        RatFunc::zero(),
        RatFunc::new(Laurent::term(r(-1, 1), 2, 0), 0, 1),
    )
}

/// `∂̃₂' = ∂̃₂ + μ ∂₁`.
pub fn partial_2_tilde_prime() -> Derivation {
    partial_2_tilde().plus("∂~2'", &partial_1().scaled("μ∂1", &mu()))
}

/// `β = 2 (ux+4)^-1 (ux+2)² h`.
pub fn beta() -> CommBase {
    let p2 = Laurent::linear(2).pow(2).scale(&r(2, 1));
    CommBase::new(RatFunc::zero(), RatFunc::new(p2, 0, 1))
}

fn y_var() -> SkewVariable {
    SkewVariable {
        name: "y".into(),
        sigma_vars: vec![],
        delta_base: partial_1(),
        delta_vars: vec![],
    }
}

/// `∂₂(y) = 3uy/2 - 2` as an element over `y`.
fn partial_2_of_y() -> TowerElement {
    TowerElement::term(lin(&[(r(3, 2), 1, 0)]), [1, 0, 0])
        .add(&TowerElement::base(CommBase::integer(-2)))
}

fn v_var() -> SkewVariable {
    // σ(y) = y + x/2
    let sigma_y = TowerElement::var(0).add(&TowerElement::base(lin(&[(r(1, 2), 0, 1)])));
    SkewVariable {
        name: "v".into(),
        sigma_vars: vec![sigma_y],
        delta_base: partial_2(),
        delta_vars: vec![partial_2_of_y()],
    }
}

/// `T = (k[u,x][(ux+2)^-1])[y; ∂₁][v; σ, ∂₂]`.
pub fn build_t() -> Tower {
    Tower::new("T", false, vec![y_var(), v_var()])
}

/// The same tower over the base with `h` adjoined.
pub fn build_s_tilde_v() -> Tower {
    Tower::new("S~[v]", true, vec![y_var(), v_var()])
}

/// `S̃ = R̃[y; ∂₁]` with `R̃` the base with `h`.
pub fn build_s_tilde() -> Tower {
    Tower::new("S~", true, vec![y_var()])
}

/// `T̃ = S̃[α; ∂̃₂]` with `∂̃₂(y) = h(3uy/2 - 2)`.
pub fn build_t_tilde() -> Tower {
    let alpha = SkewVariable {
        name: "alpha".into(),
        sigma_vars: vec![TowerElement::var(0)],
        delta_base: partial_2_tilde(),
        delta_vars: vec![partial_2_of_y().left_base_mul(&CommBase::h())],
    };
    Tower::new("T~", true, vec![y_var(), alpha])
}

/// `π: D → T`. The source must contain `g, x, u, y, zeta, v`.
pub fn quotient_map_pi(d: &Presentation, t: &Tower) -> Result<AlgebraMap<TowerElement>> {
    let mut m = AlgebraMap::new("pi", d);
    let images = [
        ("g", false, "-1/2*(u*x + 2)"),
        ("g", true, "-2*(u*x + 2)^-1"),
        ("x", false, "x"),
        ("u", false, "u"),
        ("y", false, "y"),
        ("v", false, "v"),
        ("zeta", false, "(u*x + 2)^-1*(u*x + x*v + u*y)"),
    ];
    for (name, inv, text) in images {
        let g = d.gen(name);
        let l = if inv { Letter::inv(g) } else { Letter::new(g) };
        m.set(l, t.parse(text)?);
    }
    Ok(m)
}

pub fn tower_algebra(t: &Tower) -> TowerAlgebra<'_> {
    TowerAlgebra { tower: t }
}

/// `1` in any tower.
pub fn tower_one() -> TowerElement {
    TowerElement::base(CommBase::one())
}
