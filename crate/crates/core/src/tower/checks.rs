use super::base::{CommBase, Derivation, RatFunc};
use super::build::*;
use super::skew::{Tower, TowerElement};
use crate::catalog::CatalogEntry;
use crate::ncpoly::{apply_map, check_map_is_morphism, ValidationEntry, ValidationReport};
use crate::random;
use crate::rational::Rational;

fn row(
    report: &mut ValidationReport,
    item: impl Into<String>,
    ok: bool,
    detail: impl Into<String>,
) {
    report.entries.push(ValidationEntry {
        item: item.into(),
        ok,
        detail: detail.into(),
    });
}

fn tower_eq(
    report: &mut ValidationReport,
    t: &Tower,
    item: &str,
    got: &TowerElement,
    want: &TowerElement,
) {
    let ok = got == want;
    let detail = if ok {
        t.render(got)
    } else {
        format!("{} (expected {})", t.render(got), t.render(want))
    };
    row(report, item, ok, detail);
}

fn base_eq(report: &mut ValidationReport, item: &str, got: &CommBase, want: &CommBase) {
    let ok = got == want;
    let detail = if ok {
        got.to_string()
    } else {
        format!("{got} (expected {want})")
    };
    row(report, item, ok, detail);
}

/// The bracket table of `T`.
pub fn t_relations() -> ValidationReport {
    let t = build_t();
    let mut report = ValidationReport::default();
    let table = [
        ("y", "x", "-1/2*x^2"),
        ("v", "x", "3/2*u*x + 2"),
        ("y", "u", "-1/2*u*x - 2"),
        ("v", "u", "-1/2*u^2"),
        ("v", "y", "3/2*u*y + 1/2*x*v - 2"),
        ("u", "x", "0"),
    ];
    for (a, b, want) in table {
        let got = t.commutator(&t.parse(a).unwrap(), &t.parse(b).unwrap());
        let want = t.parse(want).unwrap();
        tower_eq(&mut report, &t, &format!("[{a},{b}]"), &got, &want);
    }
    report
}

/// `π` kills every relation of `D`, the generators of `P₀` and the central
/// elements, and random elements of `qD + sD`.
pub fn pi_morphism(d: &CatalogEntry, samples: usize, seed: u64) -> ValidationReport {
    let t = build_t();
    let pres = &d.presentation;
    let mut report = ValidationReport::default();
    let pi = match quotient_map_pi(pres, &t) {
        Ok(pi) => pi,
        Err(e) => {
            row(&mut report, "pi", false, e.to_string());
            return report;
        }
    };
    let mut alg = tower_algebra(&t);
    let rel = check_map_is_morphism(&pi, pres, &mut alg);
    for e in rel.entries {
        row(&mut report, format!("pi({})", e.item), e.ok, e.detail);
    }
    for name in ["q", "s", "z", "omega", "theta"] {
        let img = apply_map(&pi, &mut alg, d.element(name));
        match img {
            Ok(v) => row(
                &mut report,
                format!("pi({name})"),
                v.is_zero(),
                t.render(&v),
            ),
            Err(e) => row(&mut report, format!("pi({name})"), false, e.to_string()),
        }
    }
    let mut rng = random::rng(seed);
    let mut red = d.reducer();
    let mut worst = None;
    for i in 0..samples {
        let r1 = random::polynomial(&mut rng, pres, 2, 3);
        let r2 = random::polynomial(&mut rng, pres, 2, 3);
        let res = (|| {
            let a = red.multiply(d.element("q"), &r1)?;
            let b = red.multiply(d.element("s"), &r2)?;
            apply_map(&pi, &mut alg, &a.add(&b))
        })();
        match res {
            Ok(v) if v.is_zero() => {}
            Ok(v) => {
                worst.get_or_insert(format!("sample {i}: {}", t.render(&v)));
            }
            Err(e) => {
                worst.get_or_insert(format!("sample {i}: {e}"));
            }
        }
    }
    row(
        &mut report,
        format!("pi(q*r1 + s*r2) on {samples} samples"),
        worst.is_none(),
        worst.unwrap_or_else(|| "all 0".into()),
    );
    report
}

/// `σ = τ_{h^-1}`: `h^-1 ∂₁(h) = x/2`, hence `h^-1 y h = y + x/2`.
pub fn h_inner() -> ValidationReport {
    let mut report = ValidationReport::default();
    let d1 = partial_1();
    let p = CommBase::linear(2);
    base_eq(
        &mut report,
        "∂1(u*x + 2)",
        &d1.apply(&p),
        &CommBase::x().mul(&p).neg(),
    );
    let half_x = CommBase::x().scale(&Rational::half());
    base_eq(
        &mut report,
        "h^-1*∂1(h)",
        &CommBase::h_inv().mul(&d1.apply(&CommBase::h())),
        &half_x,
    );
    base_eq(
        &mut report,
        "h*h^-1",
        &CommBase::h().mul(&CommBase::h_inv()),
        &CommBase::one(),
    );
    let s = build_s_tilde();
    let got = s.parse("h^-1*y*h").unwrap();
    tower_eq(
        &mut report,
        &s,
        "h^-1*y*h",
        &got,
        &s.parse("y + 1/2*x").unwrap(),
    );
    report
}

/// `T̃ = S̃[α; ∂̃₂]` against `α = h v` inside `S̃[v; σ, ∂₂]`.
pub fn radical_tower(samples: usize, seed: u64) -> ValidationReport {
    let mut report = ValidationReport::default();
    let d2t = partial_2_tilde();
    let h = CommBase::h();
    base_eq(
        &mut report,
        "∂~2(x)",
        &d2t.apply(&CommBase::x()),
        &h.mul(&CommBase::from_rat(
            RatFunc::x()
                .mul(&RatFunc::u())
                .scale(&Rational::new(3, 2))
                .add(&RatFunc::constant(Rational::integer(2))),
        )),
    );
    base_eq(
        &mut report,
        "∂~2(u)",
        &d2t.apply(&CommBase::u()),
        &h.mul(&CommBase::u().mul(&CommBase::u()))
            .scale(&-Rational::half()),
    );
    let sv = build_s_tilde_v();
    let tt = build_t_tilde();
    let alpha_sv = sv.parse("h*v").unwrap();
    let alpha_tt = tt.parse("alpha").unwrap();
    let y_bracket = tt.commutator(&alpha_tt, &tt.parse("y").unwrap());
    tower_eq(
        &mut report,
        &tt,
        "[alpha,y] = h*(3/2*u*y - 2)",
        &y_bracket,
        &tt.parse("h*(3/2*u*y - 2)").unwrap(),
    );
    let mut rng = random::rng(seed);
    let mut probes: Vec<(String, TowerElement)> = ["u", "x", "h", "y", "h*y^2 + x*y"]
        .iter()
        .map(|s| (s.to_string(), sv.parse(s).unwrap()))
        .collect();
    for i in 0..samples {
        probes.push((
            format!("random {i}"),
            random::tower_element(&mut rng, 1, 2, true),
        ));
    }
    let mut failures = Vec::new();
    for (name, s) in &probes {
        let via_v = sv.commutator(&alpha_sv, s);
        let via_alpha = tt.commutator(&alpha_tt, s);
        if via_v != via_alpha {
            failures.push(format!(
                "{name}: {} vs {}",
                sv.render(&via_v),
                tt.render(&via_alpha)
            ));
        }
    }
    row(
        &mut report,
        format!("[h*v, s] = [alpha, s] on {} elements of S~", probes.len()),
        failures.is_empty(),
        if failures.is_empty() {
            "all equal".into()
        } else {
            failures.join("; ")
        },
    );
    report
}

/// `∂̃₂' = ∂̃₂ + μ∂₁` kills `u`, sends `x` to `β`, and equals `β ∂ₓ`.
pub fn invariant_ideal(samples: usize, seed: u64) -> ValidationReport {
    let mut report = ValidationReport::default();
    let d2t = partial_2_tilde();
    let d1 = partial_1();
    let mu = mu();
    let beta = beta();
    // Compose the operator from its two parts rather than from the merged
    // values on u and x.
    let apply = |f: &CommBase| d2t.apply(f).add(&mu.mul(&d1.apply(f)));
    base_eq(
        &mut report,
        "∂~2'(u)",
        &apply(&CommBase::u()),
        &CommBase::zero(),
    );
    base_eq(&mut report, "∂~2'(x)", &apply(&CommBase::x()), &beta);
    let merged = partial_2_tilde_prime();
    base_eq(&mut report, "merged ∂~2'(x)", &merged.dx, &beta);
    let x2uh = CommBase::x()
        .mul(&CommBase::x())
        .mul(&CommBase::u())
        .mul(&CommBase::h());
    base_eq(
        &mut report,
        "(∂~2' - β∂x)(x^2*u*h)",
        &apply(&x2uh).sub(&beta.mul(&x2uh.partial_x())),
        &CommBase::zero(),
    );
    let mut rng = random::rng(seed);
    let mut bad = Vec::new();
    for i in 0..samples {
        let f = random::base(&mut rng, true, true);
        let lhs = apply(&f);
        let rhs = beta.mul(&f.partial_x());
        if lhs != rhs {
            bad.push(format!("sample {i}: {f}"));
        }
    }
    row(
        &mut report,
        format!("∂~2' = β∂x on {samples} random elements"),
        bad.is_empty(),
        if bad.is_empty() {
            "all equal".into()
        } else {
            bad.join("; ")
        },
    );
    report
}

fn leibniz_failures(d: &Derivation, pairs: &[(CommBase, CommBase)]) -> Vec<String> {
    pairs
        .iter()
        .enumerate()
        .filter(|(_, (a, b))| d.apply(&a.mul(b)) != d.apply(a).mul(b).add(&a.mul(&d.apply(b))))
        .map(|(i, _)| format!("{} pair {i}", d.name))
        .collect()
}

/// Leibniz and σ-Leibniz laws, the fractional-power chain rule, and
/// associativity of tower multiplication.
pub fn ore_laws(samples: usize, seed: u64) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut rng = random::rng(seed);
    let pairs: Vec<(CommBase, CommBase)> = (0..samples)
        .map(|_| {
            (
                random::base(&mut rng, true, true),
                random::base(&mut rng, true, true),
            )
        })
        .collect();
    for d in [
        partial_1(),
        partial_2(),
        partial_2_tilde(),
        partial_2_tilde_prime(),
    ] {
        let bad = leibniz_failures(&d, &pairs);
        row(
            &mut report,
            format!("Leibniz {} on {samples} pairs", d.name),
            bad.is_empty(),
            if bad.is_empty() {
                "ok".into()
            } else {
                bad.join("; ")
            },
        );
        let h = CommBase::h();
        let lhs = h.mul(&d.apply(&h)).scale(&Rational::integer(2));
        let rhs = d.apply(&CommBase::from_rat(RatFunc::p_inv(1)));
        base_eq(
            &mut report,
            &format!("2h*{}(h) = {}((u*x+2)^-1)", d.name, d.name),
            &lhs,
            &rhs,
        );
    }
    let d1 = partial_1();
    base_eq(
        &mut report,
        "∂1(u*x) = ∂1(u)*x + u*∂1(x)",
        &d1.apply(&CommBase::u().mul(&CommBase::x())),
        &d1.du.mul(&CommBase::x()).add(&CommBase::u().mul(&d1.dx)),
    );
    // σ-Leibniz for v in T, reading ∂₂(a) = v a - σ(a) v.
    let t = build_t();
    let v = t.var("v");
    let d2 = |a: &TowerElement| t.mul(&v, a).sub(&t.mul(&t.sigma(1, a), &v));
    let mut sl_bad = Vec::new();
    let mut sl_pairs = vec![(t.parse("x").unwrap(), t.parse("y").unwrap())];
    for _ in 0..samples.min(10) {
        sl_pairs.push((
            random::tower_element(&mut rng, 1, 1, false),
            random::tower_element(&mut rng, 1, 1, false),
        ));
    }
    for (i, (a, b)) in sl_pairs.iter().enumerate() {
        let lhs = d2(&t.mul(a, b));
        let rhs = t.mul(&t.sigma(1, a), &d2(b)).add(&t.mul(&d2(a), b));
        if lhs != rhs {
            sl_bad.push(format!("pair {i}"));
        }
    }
    row(
        &mut report,
        format!("σ-Leibniz for v on {} pairs", sl_pairs.len()),
        sl_bad.is_empty(),
        if sl_bad.is_empty() {
            "ok".into()
        } else {
            sl_bad.join("; ")
        },
    );
    let mut assoc_bad = Vec::new();
    let triples = samples.min(25);
    for i in 0..triples {
        let a = random::tower_element(&mut rng, 2, 2, false);
        let b = random::tower_element(&mut rng, 2, 2, false);
        let c = random::tower_element(&mut rng, 2, 2, false);
        if t.mul(&t.mul(&a, &b), &c) != t.mul(&a, &t.mul(&b, &c)) {
            assoc_bad.push(format!("triple {i}"));
        }
    }
    row(
        &mut report,
        format!("associativity in T on {triples} triples"),
        assoc_bad.is_empty(),
        if assoc_bad.is_empty() {
            "ok".into()
        } else {
            assoc_bad.join("; ")
        },
    );
    report
}
