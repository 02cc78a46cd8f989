//! One line per acceptance criterion. Equalities are exact; the only
//! tolerances are the wall-clock limits below and the growth log ratio.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use ncverify_core::catalog::{build, AlgebraId, CatalogEntry};
use ncverify_core::checks::{run_checks, Context, RunReport, Status};
use ncverify_core::fractions::{
    bracket_report, express_generators, weyl_coordinates, FractionRing, WeylCase,
};
use ncverify_core::fuzz;
use ncverify_core::hopf::{
    check_coproduct_on_relations, counit, counit_and_coassoc_axioms, elect_convention, og_closure,
    Convention,
};
use ncverify_core::membership::{
    closed_form_count, cofactor_monomials, doubling_exponent, growth_table, monomial_count,
    solve_membership, MembershipProblem, MembershipResult, MembershipStatus,
};
use ncverify_core::ncpoly::{
    apply_map, is_sigma_normal, Letter, NCPolynomial, DEFAULT_STEP_BUDGET,
};
use ncverify_core::tower::{h_inner, pi_morphism, radical_tower, t_relations};
use ncverify_core::Rational;

struct Outcome {
    ok: bool,
    note: String,
}

fn outcome(ok: bool, note: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        note: note.into(),
    }
}

fn within(start: Instant, limit_s: u64) -> (bool, Duration) {
    let t = start.elapsed();
    (t < Duration::from_secs(limit_s), t)
}

fn centre(d: &CatalogEntry) -> Outcome {
    let start = Instant::now();
    let pres = &d.presentation;
    let mut red = d.reducer();
    let mut zeros = 0;
    let mut total = 1;
    let zt = red.multiply(d.element("z"), d.element("theta")).unwrap();
    let ww = red
        .multiply(d.element("omega"), d.element("omega"))
        .unwrap();
    zeros += zt.sub(&ww).is_zero() as usize;
    for c in ["z", "omega", "theta"] {
        for l in pres.letters() {
            total += 1;
            let br = red.commutator(d.element(c), &red.letter(l)).unwrap();
            zeros += br.is_zero() as usize;
        }
    }
    let (fast, t) = within(start, 5);
    outcome(
        total == 22 && zeros == 22 && fast,
        format!("{zeros}/{total} exact zeros in {t:?}"),
    )
}

fn normality(d: &CatalogEntry) -> Outcome {
    let start = Instant::now();
    let pres = &d.presentation;
    let q = is_sigma_normal(d.element("q"), d.sigma(), pres).unwrap();
    let s = is_sigma_normal(d.element("s"), d.sigma(), pres).unwrap();
    let mut red = d.reducer();
    let g = red.generator("g");
    let g_inv = red.letter(Letter::inv(pres.gen("g")));
    let mut adg = true;
    for l in pres.letters() {
        let a = red.letter(l);
        let s1 = apply_map(d.sigma(), &mut red, &a).unwrap();
        let s2 = apply_map(d.sigma(), &mut red, &s1).unwrap();
        let ga = red.multiply(&g, &a).unwrap();
        adg &= s2 == red.multiply(&ga, &g_inv).unwrap();
    }
    let (fast, t) = within(start, 5);
    outcome(
        q.is_none() && s.is_none() && adg && fast,
        format!(
            "q normal {}, s normal {}, sigma^2 = Ad(g) {adg}, {t:?}",
            q.is_none(),
            s.is_none()
        ),
    )
}

fn counits(d: &CatalogEntry) -> Outcome {
    let pres = &d.presentation;
    let vals: Vec<Rational> = ["z", "omega", "theta"]
        .iter()
        .map(|n| counit(d.element(n), pres).unwrap())
        .collect();
    let want = [16, -16, 16].map(Rational::integer);
    outcome(vals == want, format!("eps(z, omega, theta) = {vals:?}"))
}

fn hopf(d: &CatalogEntry) -> Outcome {
    let start = Instant::now();
    let pres = &d.presentation;
    let elected = elect_convention(pres);
    let relations = check_coproduct_on_relations(pres, Convention::B)
        .entries
        .len();
    let axioms = counit_and_coassoc_axioms(pres, Convention::B).passed();
    let og = og_closure(pres, Convention::B).passed();
    let (fast, t) = within(start, 30);
    outcome(
        elected == vec![Convention::B] && axioms && og && fast,
        format!("passing conventions {elected:?} on {relations} relations, axioms {axioms}, OG closed {og}, {t:?}"),
    )
}

fn weyl() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for case in WeylCase::ALL {
        let entry = build(case.algebra()).unwrap();
        let mut ring = FractionRing::new(&entry, case.center());
        let (w, election) = weyl_coordinates(&mut ring, case).unwrap();
        let br = bracket_report(&mut ring, &w).unwrap();
        let ex = express_generators(&mut ring, case).unwrap();
        ok &= br.entries.len() >= 6 && br.passed() && ex.passed();
        notes.push(format!("{case} eta sign {:+}", election.elected_sign));
    }
    let (fast, t) = within(start, 60);
    outcome(ok && fast, format!("{} (report), {t:?}", notes.join(", ")))
}

fn quotient_t(d: &CatalogEntry) -> Outcome {
    let start = Instant::now();
    let pi = pi_morphism(d, 20, 7);
    let rel = t_relations();
    let (fast, t) = within(start, 10);
    outcome(
        pi.passed() && rel.passed() && fast,
        format!(
            "{} pi rows, {} bracket rows, {t:?}",
            pi.entries.len(),
            rel.entries.len()
        ),
    )
}

fn radical() -> Outcome {
    let start = Instant::now();
    let r = radical_tower(20, 3);
    let h = h_inner();
    let (fast, t) = within(start, 10);
    outcome(
        r.passed() && h.passed() && fast,
        format!("{} rows, {t:?}", r.entries.len() + h.entries.len()),
    )
}

fn member(d: &CatalogEntry, target: &NCPolynomial, gens: &[&str], bound: u32) -> MembershipResult {
    let gens: Vec<NCPolynomial> = gens.iter().map(|g| d.parse(g).unwrap()).collect();
    let problem = MembershipProblem {
        target: target.clone(),
        normal: vec![true; gens.len()],
        ideal_generators: gens,
        cofactor_degree_bound: bound,
    };
    solve_membership(&problem, &d.presentation).unwrap()
}

fn ideal_identities(d: &CatalogEntry) -> Outcome {
    let exact = [
        "q^2 - z*g",
        "q*s - omega*g",
        "s*q - omega*g",
        "s^2 - theta*g",
    ]
    .iter()
    .all(|t| d.parse(t).unwrap().is_zero());
    let squares = ["q^2", "q*s", "s*q", "s^2"];
    let m0 = ["z", "omega", "theta"];
    let mut witnesses = 0;
    for t in m0 {
        let r = member(d, d.element(t), &squares, 2);
        witnesses += matches!(r.status, MembershipStatus::Witness(_)) as usize;
    }
    for t in squares {
        let r = member(d, &d.parse(t).unwrap(), &m0, 2);
        witnesses += matches!(r.status, MembershipStatus::Witness(_)) as usize;
    }
    outcome(
        exact && witnesses == 7,
        format!("identities exact {exact}, {witnesses}/7 witnesses at bound 2"),
    )
}

fn negative(d: &CatalogEntry) -> Outcome {
    let run = || {
        (
            member(d, d.element("s"), &["q"], 4),
            member(d, &NCPolynomial::one(), &["q", "s"], 4),
        )
    };
    let (a, b) = run();
    let (a2, b2) = run();
    let ok = a.status == MembershipStatus::NoWitnessAtBound(4)
        && b.status == MembershipStatus::NoWitnessAtBound(4)
        && a == a2
        && b == b2;
    outcome(
        ok,
        format!(
            "s in qD: rank {}/{}; 1 in P0: rank {}/{}; repeatable {}",
            a.rank,
            a.unknowns,
            b.rank,
            b.unknowns,
            a == a2 && b == b2
        ),
    )
}

/// The full registry run, shared by criteria 10 and 12, with its wall time.
fn full_run() -> &'static (RunReport, Duration) {
    static RUN: OnceLock<(RunReport, Duration)> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let ctx = Context::new(DEFAULT_STEP_BUDGET).unwrap();
        let report = run_checks(&ctx, "all", 4);
        (report, start.elapsed())
    })
}

fn fuzzing(d: &CatalogEntry) -> Outcome {
    let pres = &d.presentation;
    let assoc = fuzz::associativity(pres, 200, 101).unwrap();
    let mut laurent = fuzz::laurent_roundtrip(pres, 30, 102).unwrap().passed();
    for id in [AlgebraId::DLX, AlgebraId::DLU] {
        laurent &= fuzz::laurent_roundtrip(&build(id).unwrap().presentation, 30, 103)
            .unwrap()
            .passed();
    }
    let filt = fuzz::filtration(pres, 100, 104).unwrap();
    let parse = fuzz::parse_roundtrip(d, 200, 105).unwrap();
    let (report, t) = full_run();
    let t = *t;
    let ok = assoc.entries.len() == 200
        && assoc.passed()
        && laurent
        && filt.passed()
        && parse.entries.len() == 200
        && parse.passed()
        && report.failed() == 0
        && t < Duration::from_secs(300);
    outcome(
        ok,
        format!(
            "200 triples, 100 pairs, 200 round trips; full run {} checks, {} failed, {t:?}",
            report.checks.len(),
            report.failed()
        ),
    )
}

fn growth() -> Outcome {
    let d = build(AlgebraId::D).unwrap();
    let closed = (0..=12).all(|n| monomial_count(n) == closed_form_count(n));
    let all = cofactor_monomials(&d.presentation, 6);
    let brute = (0..=6u64).all(|n| {
        all.iter().filter(|m| m.total_degree() as u64 <= n).count() as u64 == monomial_count(n)
    });
    let table = growth_table(12)
        .iter()
        .all(|r| r.monomial_count == r.expected_count);
    let exponent = doubling_exponent(1000);
    outcome(
        closed && table && brute && (exponent - 6.0).abs() < 0.05,
        format!("closed form n <= 12 {closed}, brute force n <= 6 {brute}, log2(c(2000)/c(1000)) = {exponent:.3}"),
    )
}

fn flagged(report: &RunReport) -> Outcome {
    let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    let pq = json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "pq-square-claim")
        .map(|c| c["status"].clone());
    let conv = json["convention_elected"]["status"].clone();
    let ok = pq.as_ref().is_some_and(|s| s == "report") && conv == "report";
    let value = json["convention_elected"]["value"]
        .as_str()
        .unwrap_or("")
        .to_string();
    let pq_status = report
        .checks
        .iter()
        .find(|c| c.id == "pq-square-claim")
        .map(|c| c.status);
    outcome(
        ok && pq_status == Some(Status::Report),
        format!("convention_elected = {value}"),
    )
}

fn d() -> &'static CatalogEntry {
    static D: OnceLock<CatalogEntry> = OnceLock::new();
    D.get_or_init(|| build(AlgebraId::D).unwrap())
}

fn judge(o: Outcome) {
    println!("{}  {}", if o.ok { "PASS" } else { "FAIL" }, o.note);
    assert!(o.ok, "{}", o.note);
}

#[test]
fn criterion_01_centre_battery() {
    judge(centre(d()));
}

#[test]
fn criterion_02_normality_battery() {
    judge(normality(d()));
}

#[test]
fn criterion_03_counit_values() {
    judge(counits(d()));
}

#[test]
fn criterion_04_hopf_convention_and_axioms() {
    judge(hopf(d()));
}

#[test]
fn criterion_05_weyl_localizations() {
    judge(weyl());
}

#[test]
fn criterion_06_quotient_tower() {
    judge(quotient_t(d()));
}

#[test]
fn criterion_07_radical_tower() {
    judge(radical());
}

#[test]
fn criterion_08_ideal_identities() {
    judge(ideal_identities(d()));
}

#[test]
fn criterion_09_negative_membership_evidence() {
    judge(negative(d()));
}

#[test]
fn criterion_10_property_fuzzing_and_full_run() {
    judge(fuzzing(d()));
}

#[test]
fn criterion_11_growth() {
    judge(growth());
}

#[test]
fn criterion_12_flagged_reports() {
    judge(flagged(&full_run().0));
}
