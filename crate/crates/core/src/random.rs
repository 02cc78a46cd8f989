//! Seeded random elements for property checks.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::ncpoly::{Monomial, NCPolynomial, Presentation};
use crate::rational::Rational;
use crate::tower::{CommBase, Laurent, RatFunc, TowerElement};

pub type CheckRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CheckRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coefficient(rng: &mut CheckRng) -> Rational {
    loop {
        let c = rng.gen_range(-2..=2);
        if c != 0 {
            return Rational::integer(c);
        }
    }
}

/// A random normal monomial with total degree at most `max_degree`
/// (counting `|a|` for invertible generators).
pub fn monomial(rng: &mut CheckRng, pres: &Presentation, max_degree: u32) -> Monomial {
    let n = pres.len();
    let mut exps = vec![0i16; n];
    let mut budget = rng.gen_range(0..=max_degree) as i32;
    while budget > 0 {
        let g = rng.gen_range(0..n);
        let step: i16 = if pres.generators()[g].invertible && rng.gen_bool(0.4) {
            -1
        } else {
            1
        };
        if exps[g] != 0 && exps[g].signum() != step {
            continue;
        }
        exps[g] += step;
        budget -= 1;
    }
    Monomial::from_exponents(&exps)
}

/// A random polynomial with up to `terms` terms, coefficients in `-2..=2`.
pub fn polynomial(
    rng: &mut CheckRng,
    pres: &Presentation,
    max_degree: u32,
    terms: usize,
) -> NCPolynomial {
    let mut p = NCPolynomial::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let m = monomial(rng, pres, max_degree);
        let c = Rational::integer(rng.gen_range(-2..=2));
        p.add_term(m, c);
    }
    p
}

fn laurent(rng: &mut CheckRng) -> Laurent {
    let mut l = Laurent::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let a = rng.gen_range(-1..=2);
        let b = rng.gen_range(-1..=2);
        l = l.add(&Laurent::term(coefficient(rng), a, b));
    }
    l
}

/// A random base element; `h` and the `(ux+4)` atom are optional.
pub fn base(rng: &mut CheckRng, with_h: bool, with_q: bool) -> CommBase {
    let rat = |rng: &mut CheckRng| {
        let p = rng.gen_range(0..=2);
        let q = if with_q { rng.gen_range(0..=1) } else { 0 };
        RatFunc::new(laurent(rng), p, q)
    };
    let a = rat(rng);
    let b = if with_h && rng.gen_bool(0.7) {
        rat(rng)
    } else {
        RatFunc::zero()
    };
    CommBase::new(a, b)
}

/// A random tower element of degree at most `max_degree` in the first
/// `vars` skew variables.
pub fn tower_element(
    rng: &mut CheckRng,
    vars: usize,
    max_degree: u32,
    with_h: bool,
) -> TowerElement {
    let mut t = TowerElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let mut m = [0u32; crate::tower::MAX_VARS];
        for _ in 0..rng.gen_range(0..=max_degree) {
            m[rng.gen_range(0..vars)] += 1;
        }
        t.add_term(m, base(rng, with_h, false));
    }
    t
}
