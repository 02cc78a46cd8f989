//! Localization of `D_LX` and `D_LU` at the powers of a central element, and
//! the Weyl coordinates living there.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::algebra::Algebra;
use crate::catalog::{AlgebraId, CatalogEntry};
use crate::error::{Error, Result};
use crate::expr::{self, canonical_name, ExprTarget};
use crate::ncpoly::{Letter, NCPolynomial, Reducer, ValidationEntry, ValidationReport, Word};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Center {
    Z,
    Theta,
}

impl Center {
    pub fn symbol(self) -> &'static str {
        match self {
            Center::Z => "z",
            Center::Theta => "theta",
        }
    }
}

/// `numerator * c^-power` for the central element `c` named by `center`.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralFraction {
    pub numerator: NCPolynomial,
    pub power: u32,
    pub center: Center,
}

impl CentralFraction {
    pub fn new(numerator: NCPolynomial, power: u32, center: Center) -> Self {
        CentralFraction {
            numerator,
            power,
            center,
        }
    }
}

/// Arithmetic in `A[c^-1]` for one catalog algebra `A` and central `c`.
pub struct FractionRing<'e> {
    entry: &'e CatalogEntry,
    center: Center,
    red: Reducer<'e>,
    powers: Vec<NCPolynomial>,
    known_inverses: Vec<(NCPolynomial, CentralFraction)>,
    symbols: BTreeMap<String, CentralFraction>,
}

impl<'e> FractionRing<'e> {
    pub fn new(entry: &'e CatalogEntry, center: Center) -> Self {
        let red = entry.reducer();
        let c = entry.element(center.symbol()).clone();
        let g_inv = red.letter(Letter::inv(entry.presentation.gen("g")));
        let mut ring = FractionRing {
            entry,
            center,
            red,
            powers: vec![NCPolynomial::one(), c.clone()],
            known_inverses: Vec::new(),
            symbols: BTreeMap::new(),
        };
        ring.known_inverses
            .push((c, CentralFraction::new(NCPolynomial::one(), 1, center)));
        // q^2 g^-1 = z and s^2 g^-1 = θ, with g commuting with q and s.
        let normal = match center {
            Center::Z => "q",
            Center::Theta => "s",
        };
        let n = entry.element(normal).clone();
        let inv = ring
            .red
            .multiply(&n, &g_inv)
            .expect("normal element times g^-1");
        ring.known_inverses
            .push((n, CentralFraction::new(inv, 1, center)));
        ring
    }

    pub fn center(&self) -> Center {
        self.center
    }

    pub fn entry(&self) -> &'e CatalogEntry {
        self.entry
    }

    fn center_power(&mut self, n: u32) -> Result<NCPolynomial> {
        while self.powers.len() <= n as usize {
            let next = self
                .red
                .multiply(self.powers.last().unwrap(), &self.powers[1])?;
            self.powers.push(next);
        }
        Ok(self.powers[n as usize].clone())
    }

    pub fn lift(&self, p: NCPolynomial) -> CentralFraction {
        CentralFraction::new(p, 0, self.center)
    }

    fn same_center(&self, a: &CentralFraction, b: &CentralFraction) -> Result<()> {
        if a.center != self.center || b.center != self.center {
            return Err(Error::MixedCenters);
        }
        Ok(())
    }

    pub fn frac_mul(
        &mut self,
        a: &CentralFraction,
        b: &CentralFraction,
    ) -> Result<CentralFraction> {
        self.same_center(a, b)?;
        let n = self.red.multiply(&a.numerator, &b.numerator)?;
        Ok(CentralFraction::new(n, a.power + b.power, self.center))
    }

    pub fn frac_add(
        &mut self,
        a: &CentralFraction,
        b: &CentralFraction,
    ) -> Result<CentralFraction> {
        self.same_center(a, b)?;
        let k = a.power.max(b.power);
        let ca = self.center_power(k - a.power)?;
        let cb = self.center_power(k - b.power)?;
        let na = self.red.multiply(&a.numerator, &ca)?;
        let nb = self.red.multiply(&b.numerator, &cb)?;
        Ok(CentralFraction::new(na.add(&nb), k, self.center))
    }

    pub fn frac_commutator(
        &mut self,
        a: &CentralFraction,
        b: &CentralFraction,
    ) -> Result<CentralFraction> {
        self.same_center(a, b)?;
        let ab = self.red.multiply(&a.numerator, &b.numerator)?;
        let ba = self.red.multiply(&b.numerator, &a.numerator)?;
        Ok(CentralFraction::new(
            ab.sub(&ba),
            a.power + b.power,
            self.center,
        ))
    }

    /// `(a, m) = (b, n)` iff `a c^n = b c^m`.
    pub fn frac_eq(&mut self, a: &CentralFraction, b: &CentralFraction) -> Result<bool> {
        self.same_center(a, b)?;
        let cn = self.center_power(b.power)?;
        let cm = self.center_power(a.power)?;
        let l = self.red.multiply(&a.numerator, &cn)?;
        let r = self.red.multiply(&b.numerator, &cm)?;
        Ok(l == r)
    }

    pub fn constant_eq(&mut self, a: &CentralFraction, k: i64) -> Result<bool> {
        let b = self.lift(NCPolynomial::constant(Rational::integer(k)));
        self.frac_eq(a, &b)
    }

    /// `(c a, n+1)`, the same fraction with a larger denominator.
    pub fn expand(&mut self, a: &CentralFraction) -> Result<CentralFraction> {
        let c = self.center_power(1)?;
        let n = self.red.multiply(&c, &a.numerator)?;
        Ok(CentralFraction::new(n, a.power + 1, self.center))
    }

    pub fn define(&mut self, name: &str, value: CentralFraction) {
        self.symbols.insert(name.to_string(), value);
    }

    pub fn parse(&mut self, text: &str) -> Result<CentralFraction> {
        let e = expr::parse_expr(text)?;
        expr::evaluate(self, &e)
    }

    pub fn display(&self, a: &CentralFraction) -> String {
        let num = self.entry.display(&a.numerator);
        match a.power {
            _ if a.numerator.is_zero() => num,
            0 => num,
            n => format!("({num})*{}^-{n}", self.center.symbol()),
        }
    }
}

impl Algebra for FractionRing<'_> {
    type Elem = CentralFraction;

    fn zero(&self) -> CentralFraction {
        self.lift(NCPolynomial::zero())
    }
    fn one(&self) -> CentralFraction {
        self.lift(NCPolynomial::one())
    }
    fn add(&self, a: &CentralFraction, b: &CentralFraction) -> CentralFraction {
        // `Algebra::add` takes `&self`, so the scratch reducer is local.
        assert_eq!(a.center, b.center, "{}", Error::MixedCenters);
        let mut red = self.entry.reducer();
        let k = a.power.max(b.power);
        let mut lift = |f: &CentralFraction| {
            let mut n = f.numerator.clone();
            for _ in f.power..k {
                n = red
                    .multiply(&n, &self.powers[1])
                    .expect("multiplying by the center");
            }
            n
        };
        let sum = lift(a).add(&lift(b));
        CentralFraction::new(sum, k, a.center)
    }
    fn scale(&self, a: &CentralFraction, c: &Rational) -> CentralFraction {
        CentralFraction::new(a.numerator.scale(c), a.power, a.center)
    }
    fn mul(&mut self, a: &CentralFraction, b: &CentralFraction) -> Result<CentralFraction> {
        self.frac_mul(a, b)
    }
    fn sub(&self, a: &CentralFraction, b: &CentralFraction) -> CentralFraction {
        self.add(a, &self.scale(b, &-Rational::one()))
    }
    fn commutator(&mut self, a: &CentralFraction, b: &CentralFraction) -> Result<CentralFraction> {
        self.frac_commutator(a, b)
    }
    fn is_zero(&self, a: &CentralFraction) -> bool {
        // The center is a nonzero divisor.
        a.numerator.is_zero()
    }
    fn render(&self, a: &CentralFraction) -> String {
        self.display(a)
    }
}

impl ExprTarget for FractionRing<'_> {
    fn symbol(&mut self, name: &str) -> Result<CentralFraction> {
        if let Some(v) = self.symbols.get(canonical_name(name)) {
            return Ok(v.clone());
        }
        let p = self.red.symbol(name)?;
        Ok(self.lift(p))
    }

    fn inverse(&mut self, a: &CentralFraction, shown: &str) -> Result<CentralFraction> {
        let cn = self.center_power(a.power)?;
        let cn = self.lift(cn);
        let mut terms = a.numerator.terms();
        if let (Some((m, c)), None) = (terms.next(), terms.next()) {
            let pres = &self.entry.presentation;
            if m.letters().all(|l| pres.generators()[l.index()].invertible) {
                let w = self
                    .red
                    .word(&Word::from_letters(&m.inverse_letters()))?
                    .scale(&c.recip());
                let w = self.lift(w);
                return self.frac_mul(&w, &cn);
            }
        }
        let hit = self
            .known_inverses
            .iter()
            .find(|(n, _)| *n == a.numerator)
            .map(|(_, f)| f.clone());
        match hit {
            Some(f) => self.frac_mul(&f, &cn),
            None => Err(Error::NegativePowerNotInvertible(shown.to_string())),
        }
    }
}

/// The four localizations carrying Weyl coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylCase {
    A,
    B,
    C,
    D,
}

impl WeylCase {
    pub const ALL: [WeylCase; 4] = [WeylCase::A, WeylCase::B, WeylCase::C, WeylCase::D];

    /// `x` is inverted for A and B, `u` for C and D.
    pub fn algebra(self) -> AlgebraId {
        match self {
            WeylCase::A | WeylCase::B => AlgebraId::DLX,
            WeylCase::C | WeylCase::D => AlgebraId::DLU,
        }
    }

    pub fn center(self) -> Center {
        match self {
            WeylCase::A | WeylCase::C => Center::Z,
            WeylCase::B | WeylCase::D => Center::Theta,
        }
    }

    /// Defining texts of `p, q, t, η` and the inverses of `q` and `t`.
    fn texts(self) -> [&'static str; 6] {
        match self {
            WeylCase::A => [
                "-2*q^-1*x^-1*y",
                "q",
                "q*x^-1",
                "-x*q^-1*zeta",
                "q^-1",
                "x*q^-1",
            ],
            WeylCase::B => [
                "-2*s^-1*x^-1*y",
                "s",
                "s*x^-1",
                "-x*s^-1*zeta",
                "s^-1",
                "x*s^-1",
            ],
            WeylCase::C => [
                "2*q^-1*u^-1*v",
                "q",
                "q^-1*u^-1",
                "-u*q*zeta",
                "q^-1",
                "u*q",
            ],
            WeylCase::D => ["2*s^-1*u^-1*v", "s", "s^-1*u^-1", "u*s*zeta", "s^-1", "u*s"],
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            WeylCase::A => "A",
            WeylCase::B => "B",
            WeylCase::C => "C",
            WeylCase::D => "D",
        }
    }
}

impl fmt::Display for WeylCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.suffix())
    }
}

#[derive(Clone, Debug)]
pub struct WeylCoordinates {
    pub case: WeylCase,
    pub p: CentralFraction,
    pub q: CentralFraction,
    pub t: CentralFraction,
    pub eta: CentralFraction,
    pub q_inv: CentralFraction,
    pub t_inv: CentralFraction,
    /// Sign applied to the defining formula of `η` (+1 means as written).
    pub eta_sign: i64,
}

/// Outcome of testing `[η, t] = 1` for the written `η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaElection {
    pub case: WeylCase,
    pub formula: &'static str,
    /// `[η, t]` for `η` as written, as an integer.
    pub bracket_as_written: Option<i64>,
    pub elected_sign: i64,
}

fn as_small_constant(ring: &mut FractionRing, a: &CentralFraction) -> Result<Option<i64>> {
    for k in -2..=2 {
        if ring.constant_eq(a, k)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Build the coordinates for `case` in `ring`, choosing the sign of `η` that
/// makes `[η, t] = 1`.
pub fn weyl_coordinates(
    ring: &mut FractionRing,
    case: WeylCase,
) -> Result<(WeylCoordinates, EtaElection)> {
    let [p, q, t, eta, q_inv, t_inv] = case.texts();
    let p_f = ring.parse(p)?;
    let q_f = ring.parse(q)?;
    let t_f = ring.parse(t)?;
    let eta_f = ring.parse(eta)?;
    let q_inv_f = ring.parse(q_inv)?;
    let t_inv_f = ring.parse(t_inv)?;
    let b = ring.frac_commutator(&eta_f, &t_f)?;
    let written = as_small_constant(ring, &b)?;
    let sign = if written == Some(-1) { -1 } else { 1 };
    let eta_f = ring.scale(&eta_f, &Rational::integer(sign));
    let s = case.suffix();
    for (name, v) in [
        ("p", &p_f),
        ("q", &q_f),
        ("t", &t_f),
        ("eta", &eta_f),
        ("qinv", &q_inv_f),
        ("tinv", &t_inv_f),
    ] {
        ring.define(&format!("{name}_{s}"), v.clone());
    }
    let coords = WeylCoordinates {
        case,
        p: p_f,
        q: q_f,
        t: t_f,
        eta: eta_f,
        q_inv: q_inv_f,
        t_inv: t_inv_f,
        eta_sign: sign,
    };
    let election = EtaElection {
        case,
        formula: eta,
        bracket_as_written: written,
        elected_sign: sign,
    };
    Ok((coords, election))
}

/// The six brackets among `p, q, t, η`, in the order
/// `[p,q], [η,t], [p,t], [p,η], [q,t], [q,η]`, with expected values
/// `1, 1, 0, 0, 0, 0`, followed by the brackets of `ω` and `c` with each
/// coordinate.
pub fn bracket_report(ring: &mut FractionRing, w: &WeylCoordinates) -> Result<ValidationReport> {
    let pairs: [(&str, &CentralFraction, &CentralFraction, i64); 6] = [
        ("[p,q]", &w.p, &w.q, 1),
        ("[eta,t]", &w.eta, &w.t, 1),
        ("[p,t]", &w.p, &w.t, 0),
        ("[p,eta]", &w.p, &w.eta, 0),
        ("[q,t]", &w.q, &w.t, 0),
        ("[q,eta]", &w.q, &w.eta, 0),
    ];
    let mut report = ValidationReport::default();
    for (item, a, b, want) in pairs {
        let br = ring.frac_commutator(a, b)?;
        let got = as_small_constant(ring, &br)?;
        let ok = got == Some(want);
        let detail = match got {
            Some(k) => k.to_string(),
            None => ring.display(&br),
        };
        report.entries.push(ValidationEntry {
            item: item.to_string(),
            ok,
            detail,
        });
    }
    let omega = ring.lift(ring.entry.element("omega").clone());
    let c = ring.lift(ring.entry.element(ring.center.symbol()).clone());
    for (cname, cv) in [("omega", &omega), (ring.center.symbol(), &c)] {
        for (name, v) in [("p", &w.p), ("q", &w.q), ("t", &w.t), ("eta", &w.eta)] {
            let br = ring.frac_commutator(cv, v)?;
            report.entries.push(ValidationEntry {
                item: format!("[{cname},{name}]"),
                ok: br.numerator.is_zero(),
                detail: ring.display(&br),
            });
        }
    }
    Ok(report)
}

/// Identities placing every generator of `D_Ω` (and the inverted ones) in
/// the subalgebra generated by the coordinates over the central ring. Each
/// right side uses only coordinates, central elements and generators
/// expressed on earlier lines.
pub fn express_identities(case: WeylCase) -> Vec<String> {
    let s = case.suffix();
    let c = case.center().symbol();
    let lines: Vec<&str> = match case {
        WeylCase::A | WeylCase::B => vec![
            "q_#*qinv_# - 1",
            "t_#*tinv_# - 1",
            "tinv_#*t_# - 1",
            "x - tinv_#*q_#",
            "x^-1 - t_#*qinv_#",
            "y + 1/2*x*q_#*p_#",
            "zeta + t_#*eta_#",
            "g - q_#^2*@^-1",
            "g^-1 - @*qinv_#^2",
        ],
        WeylCase::C | WeylCase::D => vec![
            "q_#*qinv_# - 1",
            "t_#*tinv_# - 1",
            "tinv_#*t_# - 1",
            "u - tinv_#*qinv_#",
            "u^-1 - q_#*t_#",
            "v - 1/2*u*q_#*p_#",
            "zeta - t_#*eta_#",
            "g - q_#^2*@^-1",
            "g^-1 - @*qinv_#^2",
        ],
    };
    let tail: Vec<&str> = match case {
        WeylCase::A => vec![
            "u - (q_A - 2 - 2*g)*x^-1",
            "s - omega*z^-1*q_A",
            "v - x^-1*(s - u*y - (-1/2*u*x + g - 1)*zeta + 2*(g + 1))",
        ],
        WeylCase::B => vec![
            "q - omega*theta^-1*q_B",
            "u - (q - 2 - 2*g)*x^-1",
            "v - x^-1*(q_B - u*y - (-1/2*u*x + g - 1)*zeta + 2*(g + 1))",
        ],
        WeylCase::C => vec![
            "x - (q_C - 2 - 2*g)*u^-1",
            "s - omega*z^-1*q_C",
            "y - u^-1*(s - x*v - (-1/2*u*x + g - 1)*zeta + 2*(g + 1))",
        ],
        WeylCase::D => vec![
            "q - omega*theta^-1*q_D",
            "x - (q - 2 - 2*g)*u^-1",
            "y - u^-1*(q_D - x*v - (-1/2*u*x + g - 1)*zeta + 2*(g + 1))",
        ],
    };
    lines
        .into_iter()
        .chain(tail)
        .map(|l| l.replace('#', s).replace('@', c))
        .collect()
}

pub fn express_generators(ring: &mut FractionRing, case: WeylCase) -> Result<ValidationReport> {
    let mut report = ValidationReport::default();
    for text in express_identities(case) {
        let (ok, detail) = match ring.parse(&text) {
            Ok(v) if v.numerator.is_zero() => (true, "0".to_string()),
            Ok(v) => (false, ring.display(&v)),
            Err(e) => (false, e.to_string()),
        };
        report.entries.push(ValidationEntry {
            item: text,
            ok,
            detail,
        });
    }
    Ok(report)
}
