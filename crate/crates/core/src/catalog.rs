//! The concrete algebras: the Jordan plane and its bosonization, the double
//! `D`, its localizations at `x` or `u`, the coordinate ring `OG` and the
//! enveloping algebra target `SL2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ncpoly::{
    validate_presentation, AlgebraMap, Letter, NCPolynomial, Presentation, Reducer,
    ValidationEntry, ValidationReport,
};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraId {
    J,
    OG,
    H,
    D,
    DLX,
    DLU,
    SL2,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 7] = [
        AlgebraId::J,
        AlgebraId::OG,
        AlgebraId::H,
        AlgebraId::D,
        AlgebraId::DLX,
        AlgebraId::DLU,
        AlgebraId::SL2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraId::J => "J",
            AlgebraId::OG => "OG",
            AlgebraId::H => "H",
            AlgebraId::D => "D",
            AlgebraId::DLX => "D_LX",
            AlgebraId::DLU => "D_LU",
            AlgebraId::SL2 => "SL2",
        }
    }

    pub fn presentation_text(self) -> &'static str {
        match self {
            AlgebraId::J => include_str!("../presentations/J.txt"),
            AlgebraId::OG => include_str!("../presentations/OG.txt"),
            AlgebraId::H => include_str!("../presentations/H.txt"),
            AlgebraId::D => include_str!("../presentations/D.txt"),
            AlgebraId::DLX => include_str!("../presentations/D_LX.txt"),
            AlgebraId::DLU => include_str!("../presentations/D_LU.txt"),
            AlgebraId::SL2 => include_str!("../presentations/SL2.txt"),
        }
    }

    /// Whether the algebra contains `D` with its distinguished elements.
    pub fn is_double(self) -> bool {
        matches!(self, AlgebraId::D | AlgebraId::DLX | AlgebraId::DLU)
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))
    }
}

/// A validated presentation with its named elements and endomorphisms.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: AlgebraId,
    pub presentation: Presentation,
    pub distinguished: BTreeMap<String, NCPolynomial>,
    pub maps: BTreeMap<String, AlgebraMap<NCPolynomial>>,
}

const Q_TEXT: &str = "u*x + 2 + 2*g";
const S_TEXT: &str = "x*v + u*y + (-1/2*u*x + g - 1)*zeta - 2*(g + 1)";

pub fn build(id: AlgebraId) -> Result<CatalogEntry> {
    build_with_budget(id, crate::ncpoly::DEFAULT_STEP_BUDGET)
}

pub fn build_with_budget(id: AlgebraId, budget: u64) -> Result<CatalogEntry> {
    let pres = Presentation::from_text(id.presentation_text())?.with_step_budget(budget);
    let report = validate_presentation(&pres);
    if !report.passed() {
        let details = report
            .failures()
            .map(|e| format!("{}: {}", e.item, e.detail))
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::ValidationFailed {
            algebra: id.to_string(),
            details,
        });
    }
    let mut distinguished = BTreeMap::new();
    let mut maps = BTreeMap::new();
    if id.is_double() {
        let mut red = Reducer::new(&pres);
        let q = red.parse(Q_TEXT)?;
        let s = red.parse(S_TEXT)?;
        let g_inv = red.letter(Letter::inv(pres.gen("g")));
        let qq = red.multiply(&q, &q)?;
        let z = red.multiply(&qq, &g_inv)?;
        let qs = red.multiply(&q, &s)?;
        let omega = red.multiply(&qs, &g_inv)?;
        let ss = red.multiply(&s, &s)?;
        let theta = red.multiply(&ss, &g_inv)?;
        for (k, v) in [
            ("q", q),
            ("s", s),
            ("z", z),
            ("omega", omega),
            ("theta", theta),
        ] {
            distinguished.insert(k.to_string(), v);
        }
        maps.insert("sigma".to_string(), sigma_map(&pres)?);
    }
    Ok(CatalogEntry {
        id,
        presentation: pres,
        distinguished,
        maps,
    })
}

/// `σ(y) = y + x/2`, `σ(v) = v - u/2`, identity on every other letter.
fn sigma_map(pres: &Presentation) -> Result<AlgebraMap<NCPolynomial>> {
    let mut red = Reducer::new(pres);
    let mut m = AlgebraMap::identity(pres);
    m.name = "sigma".into();
    m.set(Letter::new(pres.gen("y")), red.parse("y + 1/2*x")?);
    m.set(Letter::new(pres.gen("v")), red.parse("v - 1/2*u")?);
    Ok(m)
}

impl CatalogEntry {
    pub fn reducer(&self) -> Reducer<'_> {
        Reducer::new(&self.presentation).with_symbols(self.distinguished.clone())
    }

    pub fn parse(&self, text: &str) -> Result<NCPolynomial> {
        self.reducer().parse(text)
    }

    pub fn element(&self, name: &str) -> &NCPolynomial {
        &self.distinguished[name]
    }

    pub fn sigma(&self) -> &AlgebraMap<NCPolynomial> {
        &self.maps["sigma"]
    }

    pub fn display(&self, p: &NCPolynomial) -> String {
        p.display(self.presentation.names()).to_string()
    }

    fn named(&self, names: &[&str]) -> Vec<NCPolynomial> {
        names.iter().map(|n| self.element(n).clone()).collect()
    }

    pub fn p0_gens(&self) -> Vec<NCPolynomial> {
        self.named(&["q", "s"])
    }

    pub fn m0_gens(&self) -> Vec<NCPolynomial> {
        self.named(&["z", "omega", "theta"])
    }

    /// `z - 16, ω + 16, θ - 16`.
    pub fn mplus_gens(&self) -> Vec<NCPolynomial> {
        let c = |k: i64| NCPolynomial::constant(Rational::integer(k));
        vec![
            self.element("z").sub(&c(16)),
            self.element("omega").add(&c(16)),
            self.element("theta").sub(&c(16)),
        ]
    }
}

/// `D → U(sl2)`: `x, u ↦ 0`, `g^±1 ↦ 1`, `y, ζ, v ↦ e, h, f`.
pub fn sl2_quotient_map(d: &Presentation, sl2: &Presentation) -> AlgebraMap<NCPolynomial> {
    let red = Reducer::new(sl2);
    let zero = NCPolynomial::zero();
    let one = NCPolynomial::one();
    AlgebraMap::new("sl2-quotient", d)
        .with(Letter::new(d.gen("g")), one.clone())
        .with(Letter::inv(d.gen("g")), one)
        .with(Letter::new(d.gen("x")), zero.clone())
        .with(Letter::new(d.gen("u")), zero)
        .with(Letter::new(d.gen("y")), red.generator("e"))
        .with(Letter::new(d.gen("zeta")), red.generator("h"))
        .with(Letter::new(d.gen("v")), red.generator("f"))
}

/// For each generator `a`, the least `N` with `ad(t)^N(a) = 0`.
pub fn ad_nilpotence_order(
    t: &str,
    pres: &Presentation,
    bound: u32,
) -> Result<BTreeMap<String, u32>> {
    let mut red = Reducer::new(pres);
    let tp = red.generator(t);
    let mut out = BTreeMap::new();
    for (i, name) in pres.names().iter().enumerate() {
        let mut cur = red.letter(Letter::new(i));
        let mut n = 0;
        while !cur.is_zero() {
            if n == bound {
                return Err(Error::BoundExceeded(bound));
            }
            cur = red.commutator(&tp, &cur)?;
            n += 1;
        }
        out.insert(name.clone(), n);
    }
    Ok(out)
}

fn zero_entry(entry: &CatalogEntry, item: &str, r: Result<NCPolynomial>) -> ValidationEntry {
    let (ok, detail) = match r {
        Ok(p) if p.is_zero() => (true, "0".to_string()),
        Ok(p) => (false, entry.display(&p)),
        Err(e) => (false, e.to_string()),
    };
    ValidationEntry {
        item: item.to_string(),
        ok,
        detail,
    }
}

/// `q² = zg`, `qs = ωg`, `sq = ωg`, `s² = θg` and `sq = qs`.
pub fn ideal_square_identities(entry: &CatalogEntry) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (item, text) in [
        ("q^2 - z*g", "q^2 - z*g"),
        ("q*s - omega*g", "q*s - omega*g"),
        ("s*q - omega*g", "s*q - omega*g"),
        ("s^2 - theta*g", "s^2 - theta*g"),
        ("s*q - q*s", "s*q - q*s"),
    ] {
        report
            .entries
            .push(zero_entry(entry, item, entry.parse(text)));
    }
    report
}

/// `v` as the top Ore variable of `D`: `v*ζ = (ζ+1)*v` and for earlier
/// generators `r`, `v*r - r*v` is free of `v`; likewise `y` over `OG`.
pub fn ore_tower_report(entry: &CatalogEntry) -> ValidationReport {
    let pres = &entry.presentation;
    let mut red = entry.reducer();
    let mut report = ValidationReport::default();
    let v = pres.gen("v");
    let zeta = pres.gen("zeta");
    let check_top = |red: &mut Reducer,
                     top: usize,
                     lower: &[&str],
                     report: &mut ValidationReport| {
        let t = red.letter(Letter::new(top));
        for r in lower {
            let rp = red.generator(r);
            let res = red.commutator(&t, &rp);
            let entry_row = match res {
                Ok(d) => {
                    let free = d.monomials().all(|m| m.exponent(top) == 0);
                    ValidationEntry {
                        item: format!("[{},{}] below {}", pres.names()[top], r, pres.names()[top]),
                        ok: free,
                        detail: entry.display(&d),
                    }
                }
                Err(e) => ValidationEntry {
                    item: format!("[{},{}]", pres.names()[top], r),
                    ok: false,
                    detail: e.to_string(),
                },
            };
            report.entries.push(entry_row);
        }
    };
    check_top(&mut red, v, &["g", "x", "u", "y"], &mut report);
    let tau = red.parse("v*zeta - (zeta + 1)*v");
    report
        .entries
        .push(zero_entry(entry, "v*zeta - (zeta+1)*v", tau));
    check_top(&mut red, zeta, &["g", "x", "u", "y"], &mut report);
    check_top(&mut red, pres.gen("y"), &["g", "x", "u"], &mut report);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_validates() {
        for id in AlgebraId::ALL {
            let e = build(id).unwrap();
            assert_eq!(e.id, id);
        }
    }

    #[test]
    fn ids_round_trip() {
        for id in AlgebraId::ALL {
            assert_eq!(id.as_str().parse::<AlgebraId>().unwrap(), id);
        }
        assert!("E8".parse::<AlgebraId>().is_err());
    }
}
