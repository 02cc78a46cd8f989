//! Named verification checks, the batch runner and the JSON report.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{
    ad_nilpotence_order, build_with_budget, ideal_square_identities, ore_tower_report,
    sl2_quotient_map, AlgebraId, CatalogEntry,
};
use crate::error::Result;
use crate::fractions::{
    bracket_report, express_generators, weyl_coordinates, FractionRing, WeylCase,
};
use crate::fuzz;
use crate::hopf::{
    central_coproduct_residuals, check_coproduct_on_relations, counit, counit_and_coassoc_axioms,
    elect_convention, og_closure, Convention,
};
use crate::membership::{
    cofactor_monomials, degree_subadditivity_fuzz, growth_table, solve_membership,
    MembershipProblem, MembershipResult, MembershipStatus,
};
use crate::ncpoly::{
    apply_map, check_map_is_morphism, is_central, is_sigma_normal, validate_presentation, Letter,
    NCPolynomial, ValidationReport,
};
use crate::random;
use crate::rational::Rational;
use crate::tower;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Pass,
    ReportOnly,
}

/// What a runner found. `ok` is ignored for report-only checks.
pub struct Outcome {
    pub ok: bool,
    pub details: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, details: Vec<String>) -> Self {
        Outcome { ok, details }
    }
}

impl From<ValidationReport> for Outcome {
    fn from(r: ValidationReport) -> Self {
        let details = r
            .entries
            .iter()
            .map(|e| {
                let mark = if e.ok { "" } else { "FAILED " };
                let mut d = e.detail.clone();
                if d.chars().count() > 240 {
                    d = d.chars().take(240).collect::<String>() + " ...";
                }
                if d.is_empty() {
                    format!("{mark}{}", e.item)
                } else {
                    format!("{mark}{}: {d}", e.item)
                }
            })
            .collect();
        Outcome::new(r.passed(), details)
    }
}

pub struct CheckDescriptor {
    pub id: &'static str,
    pub claim: &'static str,
    pub expected: Expected,
    pub runner: fn(&Context) -> Result<Outcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub claim: String,
    pub status: Status,
    pub details: Vec<String>,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ElectedValue {
    pub value: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub version: &'static str,
    pub convention_elected: ElectedValue,
    pub checks: Vec<CheckReport>,
}

impl RunReport {
    pub fn failed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Catalog entries shared by all checks.
pub struct Context {
    entries: BTreeMap<AlgebraId, CatalogEntry>,
}

impl Context {
    pub fn new(step_budget: u64) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for id in AlgebraId::ALL {
            entries.insert(id, build_with_budget(id, step_budget)?);
        }
        Ok(Context { entries })
    }

    pub fn entry(&self, id: AlgebraId) -> &CatalogEntry {
        &self.entries[&id]
    }

    pub fn d(&self) -> &CatalogEntry {
        self.entry(AlgebraId::D)
    }
}

fn zero_rows(entry: &CatalogEntry, rows: &[(&str, &str)]) -> Result<Outcome> {
    let mut report = ValidationReport::default();
    for (item, text) in rows {
        let p = entry.parse(text)?;
        report.push(item.to_string(), p.is_zero(), entry.display(&p));
    }
    Ok(report.into())
}

fn equal_rows(entry: &CatalogEntry, rows: &[(&str, &str)]) -> Result<Outcome> {
    let mut report = ValidationReport::default();
    for (lhs, rhs) in rows {
        let a = entry.parse(lhs)?;
        let b = entry.parse(rhs)?;
        report.push(format!("{lhs} = {rhs}"), a == b, entry.display(&a));
    }
    Ok(report.into())
}

fn jordan_relations(ctx: &Context) -> Result<Outcome> {
    let j = ctx.entry(AlgebraId::J);
    equal_rows(j, &[("[y,x]", "-1/2*x^2"), ("y*x", "x*y - 1/2*x^2")])
}

fn presentations_valid(ctx: &Context) -> Result<Outcome> {
    let mut report = ValidationReport::default();
    for id in AlgebraId::ALL {
        let r = validate_presentation(&ctx.entry(id).presentation);
        let failures: Vec<String> = r.failures().map(|e| e.item.clone()).collect();
        report.push(
            id.as_str().to_string(),
            r.passed(),
            format!("{} items, failures: {:?}", r.entries.len(), failures),
        );
    }
    Ok(report.into())
}

fn ore_tower(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d();
    let pres = &d.presentation;
    let mut report = ore_tower_report(d);
    // δ(r) = [y, r] on OG must be a derivation with values in OG.
    let mut red = d.reducer();
    let y = red.generator("y");
    let mut rng = random::rng(31);
    let og: Vec<usize> = ["g", "x", "u"].iter().map(|n| pres.gen(n)).collect();
    let in_og = |p: &NCPolynomial| {
        p.monomials()
            .all(|m| (0..pres.len()).all(|i| og.contains(&i) || m.exponent(i) == 0))
    };
    let random_og = |rng: &mut random::CheckRng| loop {
        let m = random::monomial(rng, pres, 3);
        let p = NCPolynomial::monomial(m);
        if in_og(&p) {
            return p;
        }
    };
    let mut bad = 0;
    for _ in 0..50 {
        let a = random_og(&mut rng);
        let b = random_og(&mut rng);
        let ab = red.multiply(&a, &b)?;
        let da = red.commutator(&y, &a)?;
        let db = red.commutator(&y, &b)?;
        let dab = red.commutator(&y, &ab)?;
        let leibniz = red.multiply(&da, &b)?.add(&red.multiply(&a, &db)?);
        if dab != leibniz || !in_og(&da) {
            bad += 1;
        }
    }
    report.push(
        "Leibniz law of [y,-] on OG, 50 pairs".into(),
        bad == 0,
        format!("{bad} failures"),
    );
    Ok(report.into())
}

fn sigma_morphism(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d();
    let mut red = d.reducer();
    Ok(check_map_is_morphism(d.sigma(), &d.presentation, &mut red).into())
}

fn sigma_normal(ctx: &Context, name: &str) -> Result<Outcome> {
    let d = ctx.d();
    let w = is_sigma_normal(d.element(name), d.sigma(), &d.presentation)?;
    Ok(match w {
        None => Outcome::new(
            true,
            vec![format!("{name}*a = sigma(a)*{name} for every generator a")],
        ),
        Some(w) => Outcome::new(false, vec![w.describe(&d.presentation)]),
    })
}

fn sigma_normal_q(ctx: &Context) -> Result<Outcome> {
    sigma_normal(ctx, "q")
}

fn sigma_normal_s(ctx: &Context) -> Result<Outcome> {
    sigma_normal(ctx, "s")
}

fn sigma_squared_adg(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d();
    let pres = &d.presentation;
    let mut red = d.reducer();
    let sigma = d.sigma();
    let g = red.generator("g");
    let g_inv = red.letter(Letter::inv(pres.gen("g")));
    let mut report = ValidationReport::default();
    for l in pres.letters() {
        let a = red.letter(l);
        let s1 = apply_map(sigma, &mut red, &a)?;
        let s2 = apply_map(sigma, &mut red, &s1)?;
        let ga = red.multiply(&g, &a)?;
        let adg = red.multiply(&ga, &g_inv)?;
        let diff = s2.sub(&adg);
        report.push(
            format!("sigma^2({})", pres.letter_name(l)),
            diff.is_zero(),
            d.display(&diff),
        );
    }
    Ok(report.into())
}

fn centre(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d();
    let pres = &d.presentation;
    let mut red = d.reducer();
    let mut report = ValidationReport::default();
    let zt = red.multiply(d.element("z"), d.element("theta"))?;
    let ww = red.multiply(d.element("omega"), d.element("omega"))?;
    let rel = zt.sub(&ww);
    report.push("z*theta - omega^2".into(), rel.is_zero(), d.display(&rel));
    for name in ["z", "omega", "theta"] {
        let c = d.element(name);
        for l in pres.letters() {
            let a = red.letter(l);
            let br = red.commutator(c, &a)?;
            report.push(
                format!("[{name},{}]", pres.letter_name(l)),
                br.is_zero(),
                d.display(&br),
            );
        }
    }
    for name in ["q", "s"] {
        let w = is_central(d.element(name), pres)?;
        report.push(
            format!("{name} is not central"),
            w.is_some(),
            w.map(|w| w.describe(pres)).unwrap_or_default(),
        );
    }
    let w = is_central(&red.generator("g"), pres)?;
    report.push("g is not central".into(), w.is_some(), String::new());
    Ok(report.into())
}

fn centre_relation(ctx: &Context) -> Result<Outcome> {
    zero_rows(ctx.d(), &[("z*theta - omega^2", "z*theta - omega^2")])
}

fn counit_mplus(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d();
    let pres = &d.presentation;
    let mut report = ValidationReport::default();
    for (name, v) in [
        ("q", 4),
        ("s", -4),
        ("z", 16),
        ("omega", -16),
        ("theta", 16),
    ] {
        let e = counit(d.element(name), pres)?;
        report.push(
            format!("eps({name}) = {v}"),
            e == Rational::integer(v),
            e.to_string(),
        );
    }
    for (name, p) in ["z - 16", "omega + 16", "theta - 16"]
        .iter()
        .zip(d.mplus_gens())
    {
        let e = counit(&p, pres)?;
        report.push(format!("eps({name}) = 0"), e.is_zero(), e.to_string());
    }
    Ok(report.into())
}

fn sl2_quotient(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d();
    let sl2 = ctx.entry(AlgebraId::SL2);
    let pi = sl2_quotient_map(&d.presentation, &sl2.presentation);
    let mut target = sl2.reducer();
    let mut report = check_map_is_morphism(&pi, &d.presentation, &mut target);
    for (src, expected) in [
        ("z", "16"),
        ("omega", "-16"),
        ("theta", "16"),
        ("x", "0"),
        ("u", "0"),
        ("g - 1", "0"),
        ("[v,y]", "-h"),
        ("[zeta,v]", "-f"),
        ("[zeta,y]", "e"),
    ] {
        let p = d.parse(src)?;
        let img = apply_map(&pi, &mut target, &p)?;
        let want = sl2.parse(expected)?;
        report.push(
            format!("image of {src} = {expected}"),
            img == want,
            sl2.display(&img),
        );
    }
    Ok(report.into())
}

fn hopf_relations(ctx: &Context) -> Result<Outcome> {
    let pres = &ctx.d().presentation;
    let passing = elect_convention(pres);
    let mut out: Outcome = check_coproduct_on_relations(pres, Convention::B).into();
    out.ok &= passing == vec![Convention::B];
    out.details
        .insert(0, format!("conventions passing: {passing:?}"));
    Ok(out)
}

fn hopf_convention(ctx: &Context) -> Result<Outcome> {
    let pres = &ctx.d().presentation;
    let mut details = Vec::new();
    for c in Convention::ALL {
        let r = check_coproduct_on_relations(pres, c);
        let failures: Vec<&str> = r.failures().map(|e| e.item.as_str()).collect();
        details.push(format!(
            "{c} ({}): failing relations {failures:?}",
            c.formula()
        ));
    }
    Ok(Outcome::new(true, details))
}

fn axioms_matching(ctx: &Context, pred: fn(&str) -> bool) -> Result<Outcome> {
    let mut r = counit_and_coassoc_axioms(&ctx.d().presentation, Convention::B);
    r.entries.retain(|e| pred(&e.item));
    Ok(r.into())
}

fn hopf_coassoc(ctx: &Context) -> Result<Outcome> {
    axioms_matching(ctx, |item| {
        item.starts_with("coassociativity") || item.starts_with("axioms")
    })
}

fn hopf_counit(ctx: &Context) -> Result<Outcome> {
    axioms_matching(ctx, |item| item.contains('ε') || item.starts_with("axioms"))
}

fn og_sub_bialgebra(ctx: &Context) -> Result<Outcome> {
    Ok(og_closure(&ctx.d().presentation, Convention::B).into())
}

fn hopf_central_coproducts(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d();
    let pres = &d.presentation;
    let mut report = ValidationReport::default();
    for (name, residual) in central_coproduct_residuals(d, Convention::B)? {
        // Δ(c) - c⊗c must be killed by ε⊗id and id⊗ε, since ε(c) is a scalar.
        let c = d.element(&name);
        let eps = counit(c, pres)?;
        let mut left = NCPolynomial::zero();
        let mut right = NCPolynomial::zero();
        for (slots, k) in residual.terms() {
            let e0 = counit(&NCPolynomial::monomial(slots[0]), pres)?;
            let e1 = counit(&NCPolynomial::monomial(slots[1]), pres)?;
            left.add_term(slots[1], k * &e0);
            right.add_term(slots[0], k * &e1);
        }
        let expected = c.scale(&(Rational::one() - &eps));
        let ok = left == expected && right == expected;
        report.push(
            format!("counit on Delta({name}) - {name}⊗{name}"),
            ok,
            format!("{} residual terms", residual.len()),
        );
    }
    Ok(report.into())
}

fn adnilp(ctx: &Context, t: &str, expected: &[(&str, u32)]) -> Result<Outcome> {
    let pres = &ctx.d().presentation;
    let orders = ad_nilpotence_order(t, pres, 8)?;
    let mut report = ValidationReport::default();
    for (g, n) in &orders {
        let want = expected.iter().find(|(e, _)| e == g).map(|(_, n)| *n);
        let ok = want.is_none_or(|w| w == *n);
        report.push(format!("ad({t})^N({g}) = 0"), ok, format!("N = {n}"));
    }
    Ok(report.into())
}

fn adnilp_x(ctx: &Context) -> Result<Outcome> {
    adnilp(ctx, "x", &[("v", 2), ("g", 1), ("x", 1)])
}

fn adnilp_u(ctx: &Context) -> Result<Outcome> {
    adnilp(ctx, "u", &[("y", 2), ("g", 1), ("u", 1)])
}

fn weyl(ctx: &Context, case: WeylCase) -> Result<Outcome> {
    let entry = ctx.entry(case.algebra());
    let mut ring = FractionRing::new(entry, case.center());
    let (w, _) = weyl_coordinates(&mut ring, case)?;
    Ok(bracket_report(&mut ring, &w)?.into())
}

fn weyl_express(ctx: &Context, case: WeylCase) -> Result<Outcome> {
    let entry = ctx.entry(case.algebra());
    let mut ring = FractionRing::new(entry, case.center());
    weyl_coordinates(&mut ring, case)?;
    Ok(express_generators(&mut ring, case)?.into())
}

fn eta_sign_report(ctx: &Context) -> Result<Outcome> {
    let mut details = Vec::new();
    for case in WeylCase::ALL {
        let entry = ctx.entry(case.algebra());
        let mut ring = FractionRing::new(entry, case.center());
        let (_, e) = weyl_coordinates(&mut ring, case)?;
        let written = e
            .bracket_as_written
            .map_or("not a small constant".to_string(), |k| k.to_string());
        details.push(format!(
            "{case}: eta = {}; [eta,t] as written = {written}; elected sign {:+}",
            e.formula, e.elected_sign
        ));
    }
    Ok(Outcome::new(true, details))
}

macro_rules! weyl_runners {
    ($($f:ident, $g:ident, $case:expr);*) => {
        $(
            fn $f(ctx: &Context) -> Result<Outcome> {
                weyl(ctx, $case)
            }
            fn $g(ctx: &Context) -> Result<Outcome> {
                weyl_express(ctx, $case)
            }
        )*
    };
}

weyl_runners!(
    weyl_a, weyl_express_a, WeylCase::A;
    weyl_b, weyl_express_b, WeylCase::B;
    weyl_c, weyl_express_c, WeylCase::C;
    weyl_d, weyl_express_d, WeylCase::D
);

fn t_relations(_: &Context) -> Result<Outcome> {
    Ok(tower::t_relations().into())
}

fn pi_morphism(ctx: &Context) -> Result<Outcome> {
    Ok(tower::pi_morphism(ctx.d(), 20, 7).into())
}

fn h_inner(_: &Context) -> Result<Outcome> {
    Ok(tower::h_inner().into())
}

fn radical_tower(_: &Context) -> Result<Outcome> {
    Ok(tower::radical_tower(20, 3).into())
}

fn invariant_ideal(_: &Context) -> Result<Outcome> {
    Ok(tower::invariant_ideal(20, 5).into())
}

fn ore_laws(_: &Context) -> Result<Outcome> {
    Ok(tower::ore_laws(100, 11).into())
}

fn member(
    ctx: &Context,
    target: &NCPolynomial,
    gens: Vec<NCPolynomial>,
    bound: u32,
) -> Result<MembershipResult> {
    let normal = vec![true; gens.len()];
    let p = MembershipProblem {
        target: target.clone(),
        ideal_generators: gens,
        normal,
        cofactor_degree_bound: bound,
    };
    solve_membership(&p, &ctx.d().presentation)
}

fn describe_result(ctx: &Context, label: &str, r: &MembershipResult) -> String {
    let d = ctx.d();
    let text = match &r.status {
        MembershipStatus::Witness(h) => {
            let hs: Vec<String> = h.iter().map(|c| d.display(c)).collect();
            format!("witness [{}]", hs.join("; "))
        }
        MembershipStatus::NoWitnessAtBound(b) => format!(
            "no witness at bound {b} ({} unknowns, {} equations, rank {})",
            r.unknowns, r.equations, r.rank
        ),
    };
    if label.is_empty() {
        text
    } else {
        format!("{label}: {text}")
    }
}

fn witness_rows(ctx: &Context, rows: &[(&str, &[&str])], bound: u32) -> Result<Outcome> {
    let d = ctx.d();
    let mut report = ValidationReport::default();
    for (target, gens) in rows {
        let t = d.parse(target)?;
        let gs = gens
            .iter()
            .map(|g| d.parse(g))
            .collect::<Result<Vec<_>>>()?;
        let r = member(ctx, &t, gs, bound)?;
        let ok = matches!(r.status, MembershipStatus::Witness(_));
        let label = format!("{target} in ({})D", gens.join(", "));
        report.push(label.clone(), ok, describe_result(ctx, "", &r));
    }
    Ok(report.into())
}

fn m0_equals_p0sq(ctx: &Context) -> Result<Outcome> {
    let squares: &[&str] = &["q^2", "q*s", "s*q", "s^2"];
    let m0: &[&str] = &["z", "omega", "theta"];
    witness_rows(
        ctx,
        &[
            ("z", squares),
            ("omega", squares),
            ("theta", squares),
            ("q^2", m0),
            ("q*s", m0),
            ("s*q", m0),
            ("s^2", m0),
        ],
        2,
    )
}

fn p1p2_in_p0(ctx: &Context) -> Result<Outcome> {
    // theta = s * (s g^-1) needs a cofactor of degree 3, the degree of s.
    let p0: &[&str] = &["q", "s"];
    witness_rows(ctx, &[("z", p0), ("omega", p0), ("theta", p0)], 3)
}

fn expect_no_witness(ctx: &Context, label: &str, target: &str, gens: &[&str]) -> Result<Outcome> {
    let d = ctx.d();
    let t = d.parse(target)?;
    let gs = gens
        .iter()
        .map(|g| d.parse(g))
        .collect::<Result<Vec<_>>>()?;
    let r = member(ctx, &t, gs, 4)?;
    let ok = r.status == MembershipStatus::NoWitnessAtBound(4);
    Ok(Outcome::new(ok, vec![describe_result(ctx, label, &r)]))
}

fn s_notin_qd(ctx: &Context) -> Result<Outcome> {
    expect_no_witness(ctx, "s in qD", "s", &["q"])
}

fn one_notin_p0(ctx: &Context) -> Result<Outcome> {
    expect_no_witness(ctx, "1 in qD + sD", "1", &["q", "s"])
}

fn pq_square_claim(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d();
    let q2 = d.parse("q^2")?;
    let mut details = Vec::new();
    for bound in 2..=4 {
        let r = member(ctx, d.element("omega"), vec![q2.clone()], bound)?;
        details.push(describe_result(
            ctx,
            &format!("omega in q^2 D, bound {bound}"),
            &r,
        ));
    }
    Ok(Outcome::new(true, details))
}

fn growth(ctx: &Context) -> Result<Outcome> {
    let pres = &ctx.d().presentation;
    let mut report = ValidationReport::default();
    let all = cofactor_monomials(pres, 6);
    for row in growth_table(12) {
        let mut ok = row.monomial_count == row.expected_count;
        let mut detail = format!("count {}", row.monomial_count);
        if row.n <= 6 {
            let brute = all
                .iter()
                .filter(|m| m.total_degree() as u64 <= row.n)
                .count() as u64;
            ok &= brute == row.monomial_count;
            detail += &format!(", enumerated {brute}");
        }
        if let Some(r) = row.log_ratio {
            detail += &format!(", log ratio {r:.3}");
        }
        report.push(format!("n = {}", row.n), ok, detail);
    }
    Ok(report.into())
}

fn fuzz_assoc(ctx: &Context) -> Result<Outcome> {
    let mut report = fuzz::associativity(&ctx.d().presentation, 200, 1)?;
    for id in [AlgebraId::DLX, AlgebraId::DLU] {
        report
            .entries
            .extend(fuzz::associativity(&ctx.entry(id).presentation, 50, 2)?.entries);
    }
    let mut out: Outcome = report.into();
    let n = out.details.len();
    out.details.retain(|d| d.starts_with("FAILED"));
    out.details.insert(0, format!("{n} triples"));
    Ok(out)
}

fn filtration(ctx: &Context) -> Result<Outcome> {
    let pres = &ctx.d().presentation;
    let report = fuzz::filtration(pres, 100, 4)?;
    let extra = degree_subadditivity_fuzz(pres, 100, 12)?;
    let ok = report.passed() && extra.failures.is_empty();
    let mut details = vec![format!(
        "{} filtration samples, {} extra subadditivity pairs",
        report.entries.len(),
        extra.samples
    )];
    details.extend(report.failures().map(|e| format!("FAILED {}", e.item)));
    details.extend(extra.failures);
    Ok(Outcome::new(ok, details))
}

fn laurent_roundtrip(ctx: &Context) -> Result<Outcome> {
    let mut report = ValidationReport::default();
    for id in [AlgebraId::D, AlgebraId::DLX, AlgebraId::DLU] {
        report
            .entries
            .extend(fuzz::laurent_roundtrip(&ctx.entry(id).presentation, 30, 3)?.entries);
    }
    let ok = report.passed();
    let mut details = vec![format!("{} round trips", report.entries.len())];
    details.extend(report.failures().map(|e| format!("FAILED {}", e.item)));
    Ok(Outcome::new(ok, details))
}

fn parse_roundtrip(ctx: &Context) -> Result<Outcome> {
    let report = fuzz::parse_roundtrip(ctx.d(), 200, 5)?;
    let ok = report.passed();
    let mut details = vec![format!("{} polynomials", report.entries.len())];
    details.extend(
        report
            .failures()
            .map(|e| format!("FAILED {}: {}", e.item, e.detail)),
    );
    Ok(Outcome::new(ok, details))
}

fn ideal_squares(ctx: &Context) -> Result<Outcome> {
    Ok(ideal_square_identities(ctx.d()).into())
}

fn localized_rules(ctx: &Context) -> Result<Outcome> {
    let mut out = equal_rows(
        ctx.entry(AlgebraId::DLX),
        &[
            ("v*x^-1", "x^-1*v - x^-1*u - x^-2*(1 - g)"),
            ("x*x^-1", "1"),
        ],
    )?;
    let other = equal_rows(
        ctx.entry(AlgebraId::DLU),
        &[("u^-1*u", "1"), ("u*y*u^-1", "y + (1 - g)*u^-1")],
    )?;
    out.ok &= other.ok;
    out.details.extend(other.details);
    Ok(out)
}

const fn desc(
    id: &'static str,
    claim: &'static str,
    runner: fn(&Context) -> Result<Outcome>,
) -> CheckDescriptor {
    CheckDescriptor {
        id,
        claim,
        expected: Expected::Pass,
        runner,
    }
}

const fn report_only(
    id: &'static str,
    claim: &'static str,
    runner: fn(&Context) -> Result<Outcome>,
) -> CheckDescriptor {
    CheckDescriptor {
        id,
        claim,
        expected: Expected::ReportOnly,
        runner,
    }
}

pub static REGISTRY: &[CheckDescriptor] = &[
    desc("jordan-relations", "J: [y,x] = -1/2 x^2", jordan_relations),
    desc(
        "presentations-valid",
        "every catalog presentation passes rule, certificate and inverse validation",
        presentations_valid,
    ),
    desc(
        "localized-rules",
        "inverse rules of D_LX and D_LU agree with the defining relations",
        localized_rules,
    ),
    desc(
        "ore-tower",
        "D is an iterated Ore extension with top variable v and v*zeta = (zeta+1)*v",
        ore_tower,
    ),
    desc(
        "sigma-morphism",
        "sigma (y -> y + x/2, v -> v - u/2) is an algebra map of D",
        sigma_morphism,
    ),
    desc(
        "sigma-normal-q",
        "q*a = sigma(a)*q for all generators a",
        sigma_normal_q,
    ),
    desc(
        "sigma-normal-s",
        "s*a = sigma(a)*s for all generators a",
        sigma_normal_s,
    ),
    desc("sigma-squared-adg", "sigma^2 = Ad(g)", sigma_squared_adg),
    desc(
        "centre-zωθ",
        "z, omega, theta are central; z*theta = omega^2; q, s, g are not central",
        centre,
    ),
    desc("centre-relation", "z*theta = omega^2", centre_relation),
    desc(
        "ideal-squares",
        "q^2 = z g, q s = s q = omega g, s^2 = theta g",
        ideal_squares,
    ),
    desc(
        "counit-mplus",
        "eps(z) = 16, eps(omega) = -16, eps(theta) = 16",
        counit_mplus,
    ),
    desc(
        "sl2-quotient",
        "D -> U(sl2) with x, u -> 0 and g -> 1 is an algebra map",
        sl2_quotient,
    ),
    desc(
        "hopf-relations",
        "exactly one coproduct convention respects every relation of D",
        hopf_relations,
    ),
    report_only(
        "hopf-convention",
        "which placement of g in Delta(x), Delta(y) respects the relations",
        hopf_convention,
    ),
    desc(
        "hopf-coassoc",
        "(Delta x id) Delta = (id x Delta) Delta on generators",
        hopf_coassoc,
    ),
    desc(
        "hopf-counit",
        "(eps x id) Delta = id = (id x eps) Delta on generators",
        hopf_counit,
    ),
    desc(
        "og-sub-bialgebra",
        "Delta(x), Delta(u), Delta(g) lie in OG x OG",
        og_sub_bialgebra,
    ),
    desc(
        "hopf-central-coproducts",
        "Delta(c) - c x c is counit-compatible for c = z, omega, theta",
        hopf_central_coproducts,
    ),
    desc(
        "adnilp-x",
        "ad(x) acts locally nilpotently on the generators",
        adnilp_x,
    ),
    desc(
        "adnilp-u",
        "ad(u) acts locally nilpotently on the generators",
        adnilp_u,
    ),
    desc(
        "weyl-A",
        "case A coordinates satisfy the Weyl brackets (1,1,0,0,0,0)",
        weyl_a,
    ),
    desc(
        "weyl-B",
        "case B coordinates satisfy the Weyl brackets (1,1,0,0,0,0)",
        weyl_b,
    ),
    desc(
        "weyl-C",
        "case C coordinates satisfy the Weyl brackets (1,1,0,0,0,0)",
        weyl_c,
    ),
    desc(
        "weyl-D",
        "case D coordinates satisfy the Weyl brackets (1,1,0,0,0,0)",
        weyl_d,
    ),
    desc(
        "weyl-express-A",
        "case A generators are recovered from the coordinates",
        weyl_express_a,
    ),
    desc(
        "weyl-express-B",
        "case B generators are recovered from the coordinates",
        weyl_express_b,
    ),
    desc(
        "weyl-express-C",
        "case C generators are recovered from the coordinates",
        weyl_express_c,
    ),
    desc(
        "weyl-express-D",
        "case D generators are recovered from the coordinates",
        weyl_express_d,
    ),
    report_only(
        "eta-sign-report",
        "sign of eta needed for [eta,t] = 1 in each case",
        eta_sign_report,
    ),
    desc(
        "T-relations",
        "the quotient tower T has the stated brackets",
        t_relations,
    ),
    desc(
        "pi-morphism",
        "pi: D -> T respects the relations and kills q, s, z, omega, theta",
        pi_morphism,
    ),
    desc(
        "h-inner",
        "h^-1 d1(h) = x/2 and d1 is inner on the radical base",
        h_inner,
    ),
    desc(
        "radical-tower",
        "the twisted derivation of the radical tower is beta times d/dx",
        radical_tower,
    ),
    desc(
        "invariant-ideal",
        "the invariant-ideal identities hold in the radical tower",
        invariant_ideal,
    ),
    desc(
        "ore-laws",
        "tower multiplication is associative and the derivations satisfy the Leibniz rule",
        ore_laws,
    ),
    desc(
        "m0-equals-P0sq",
        "zD + omega D + theta D = (qD + sD)^2 at cofactor bound 2",
        m0_equals_p0sq,
    ),
    desc(
        "p1p2-in-P0",
        "z, omega, theta lie in qD + sD at cofactor bound 3",
        p1p2_in_p0,
    ),
    desc(
        "s-notin-qD",
        "no cofactor of degree <= 4 puts s in qD",
        s_notin_qd,
    ),
    desc(
        "one-notin-P0",
        "no cofactors of degree <= 4 put 1 in qD + sD",
        one_notin_p0,
    ),
    report_only(
        "pq-square-claim",
        "is omega in q^2 D? (bounds 2..4)",
        pq_square_claim,
    ),
    desc(
        "growth",
        "PBW monomials of degree <= n number C(n+6,6) + C(n+5,6)",
        growth,
    ),
    desc(
        "fuzz-assoc",
        "normal-form multiplication is associative and distributive",
        fuzz_assoc,
    ),
    desc(
        "filtration",
        "total degree is subadditive and the level-graded algebra is commutative",
        filtration,
    ),
    desc(
        "laurent-roundtrip",
        "a t^-1 t = a for invertible t",
        laurent_roundtrip,
    ),
    desc("parse-roundtrip", "parse(print(p)) = p", parse_roundtrip),
];

pub const REQUIRED_IDS: &[&str] = &[
    "jordan-relations",
    "ore-tower",
    "sigma-normal-q",
    "sigma-normal-s",
    "sigma-squared-adg",
    "centre-zωθ",
    "centre-relation",
    "counit-mplus",
    "hopf-relations",
    "hopf-coassoc",
    "hopf-counit",
    "og-sub-bialgebra",
    "adnilp-x",
    "adnilp-u",
    "weyl-A",
    "weyl-B",
    "weyl-C",
    "weyl-D",
    "weyl-express-A",
    "weyl-express-B",
    "weyl-express-C",
    "weyl-express-D",
    "T-relations",
    "pi-morphism",
    "h-inner",
    "invariant-ideal",
    "ore-laws",
    "m0-equals-P0sq",
    "p1p2-in-P0",
    "s-notin-qD",
    "one-notin-P0",
    "pq-square-claim",
    "eta-sign-report",
    "growth",
    "fuzz-assoc",
    "filtration",
];

const fn str_eq(a: &str, b: &str) -> bool {
    let (a, b) = (a.as_bytes(), b.as_bytes());
    if a.len() != b.len() {
        return false;
    }
    let mut i = 0;
    while i < a.len() {
        if a[i] != b[i] {
            return false;
        }
        i += 1;
    }
    true
}

const fn registry_is_sound() -> bool {
    let mut i = 0;
    while i < REQUIRED_IDS.len() {
        let mut found = false;
        let mut j = 0;
        while j < REGISTRY.len() {
            if str_eq(REGISTRY[j].id, REQUIRED_IDS[i]) {
                found = true;
            }
            j += 1;
        }
        if !found {
            return false;
        }
        i += 1;
    }
    let mut j = 0;
    while j < REGISTRY.len() {
        let mut k = j + 1;
        while k < REGISTRY.len() {
            if str_eq(REGISTRY[j].id, REGISTRY[k].id) {
                return false;
            }
            k += 1;
        }
        j += 1;
    }
    true
}

const _: () = assert!(
    registry_is_sound(),
    "check registry is missing an id or has a duplicate"
);

fn glob_match(pattern: &[char], id: &[char]) -> bool {
    match pattern.split_first() {
        None => id.is_empty(),
        Some(('*', rest)) => {
            let mut i = 0;
            loop {
                if glob_match(rest, &id[i..]) {
                    return true;
                }
                if i == id.len() || id[i] == '-' {
                    return false;
                }
                i += 1;
            }
        }
        Some((c, rest)) => id.first() == Some(c) && glob_match(rest, &id[1..]),
    }
}

/// `all` selects everything. Without `*` a filter selects the id itself and
/// ids continuing it after a `-`; with `*` the whole id must match and `*`
/// stays within one `-`-separated segment.
pub fn matches(filter: &str, id: &str) -> bool {
    if filter == "all" {
        return true;
    }
    if filter.contains('*') {
        let p: Vec<char> = filter.chars().collect();
        let s: Vec<char> = id.chars().collect();
        return glob_match(&p, &s);
    }
    id == filter || id.strip_prefix(filter).is_some_and(|r| r.starts_with('-'))
}

pub fn select(filter: &str) -> Vec<&'static CheckDescriptor> {
    REGISTRY.iter().filter(|d| matches(filter, d.id)).collect()
}

pub fn run_one(ctx: &Context, d: &CheckDescriptor) -> CheckReport {
    let start = Instant::now();
    let (ok, details) = match (d.runner)(ctx) {
        Ok(o) => (o.ok, o.details),
        Err(e) => (false, vec![format!("error: {e}")]),
    };
    let status = match (d.expected, ok) {
        (Expected::ReportOnly, _) => Status::Report,
        (Expected::Pass, true) => Status::Pass,
        (Expected::Pass, false) => Status::Fail,
    };
    CheckReport {
        id: d.id.to_string(),
        claim: d.claim.to_string(),
        status,
        details,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

fn elected(ctx: &Context) -> ElectedValue {
    let passing = elect_convention(&ctx.d().presentation);
    let value = match passing.as_slice() {
        [c] => format!("{c}: {}", c.formula()),
        [] => "none".to_string(),
        many => format!("{many:?}"),
    };
    ElectedValue {
        value,
        status: Status::Report,
    }
}

/// Run the selected checks on up to `jobs` threads; reports are sorted by id.
pub fn run_checks(ctx: &Context, filter: &str, jobs: usize) -> RunReport {
    let selected = select(filter);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .stack_size(64 << 20)
        .build()
        .expect("thread pool");
    let mut checks: Vec<CheckReport> =
        pool.install(|| selected.par_iter().map(|d| run_one(ctx, d)).collect());
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    RunReport {
        version: REPORT_VERSION,
        convention_elected: elected(ctx),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        assert_eq!(select("weyl-*").len(), 4);
        assert_eq!(select("weyl-express-*").len(), 4);
        assert_eq!(select("weyl").len(), 8);
        assert_eq!(select("centre").len(), 2);
        assert_eq!(select("all").len(), REGISTRY.len());
        assert_eq!(select("pq-square-claim").len(), 1);
        assert!(select("weyl-A*").iter().all(|d| d.id == "weyl-A"));
        assert!(select("nothing").is_empty());
    }
}
