//! Bounded-degree right-cofactor ideal membership, and PBW growth counts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ncpoly::{print_order, Monomial, NCPolynomial, Presentation, Reducer};
use crate::random;
use crate::rational::Rational;

/// Default cap on the estimated number of nonzero matrix entries.
pub const DEFAULT_ENTRY_CAP: u64 = 50_000_000;

/// Is `target` in `Σ n_i D`, with cofactors of bounded degree?
#[derive(Clone, Debug)]
pub struct MembershipProblem {
    pub target: NCPolynomial,
    pub ideal_generators: Vec<NCPolynomial>,
    /// Informational: all generators used here are normal or central, so
    /// `Σ n_i D` is a two-sided ideal.
    pub normal: Vec<bool>,
    pub cofactor_degree_bound: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MembershipStatus {
    /// Cofactors `h_i` with `target = Σ n_i h_i`, already replayed.
    Witness(Vec<NCPolynomial>),
    /// Inconclusive: no combination exists with cofactors inside the bound.
    NoWitnessAtBound(u32),
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipResult {
    pub status: MembershipStatus,
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
}

/// Cofactor monomials: `|a| ≤ d` on the invertible generators and total
/// degree `≤ d` on the rest, in graded order.
pub fn cofactor_monomials(pres: &Presentation, d: u32) -> Vec<Monomial> {
    let n = pres.len();
    let inv: Vec<bool> = pres.generators().iter().map(|g| g.invertible).collect();
    let mut out = Vec::new();
    let mut exps = vec![0i16; n];
    fn rec(
        i: usize,
        rest: u32,
        d: u32,
        inv: &[bool],
        exps: &mut Vec<i16>,
        out: &mut Vec<Monomial>,
    ) {
        if i == inv.len() {
            out.push(Monomial::from_exponents(exps));
            return;
        }
        if inv[i] {
            for a in -(d as i16)..=(d as i16) {
                exps[i] = a;
                rec(i + 1, rest, d, inv, exps, out);
            }
        } else {
            for b in 0..=rest {
                exps[i] = b as i16;
                rec(i + 1, rest - b, d, inv, exps, out);
            }
        }
        exps[i] = 0;
    }
    rec(0, d, d, &inv, &mut exps, &mut out);
    out.sort_by(print_order);
    out
}

type IntVec = BTreeMap<Monomial, BigInt>;
type Combo = BTreeMap<usize, Rational>;

/// Clear denominators; returns the integer vector and the multiplier.
fn to_integer(p: &NCPolynomial) -> (IntVec, BigInt) {
    let l = p
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let v = p
        .terms()
        .map(|(m, c)| (*m, c.numer() * (&l / c.denom())))
        .collect();
    (v, l)
}

fn content(v: &IntVec) -> BigInt {
    v.values().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

struct Echelon {
    pivots: BTreeMap<Monomial, (IntVec, Combo)>,
}

impl Echelon {
    /// Reduce `(v, combo)` against the pivots; `v` always equals
    /// `Σ combo_j column_j`.
    fn reduce(&self, mut v: IntVec, mut combo: Combo) -> (IntVec, Combo) {
        while let Some((&lead, _)) = v.iter().next_back() {
            let Some((pv, pc)) = self.pivots.get(&lead) else {
                break;
            };
            let a = pv[&lead].clone();
            let b = v[&lead].clone();
            let g = a.gcd(&b);
            let (fa, fb) = (&a / &g, &b / &g);
            // v <- fa*v - fb*pv, which cancels the lead.
            let mut next = IntVec::new();
            for (m, c) in &v {
                next.insert(*m, c * &fa);
            }
            for (m, c) in pv {
                let e = next.entry(*m).or_insert_with(BigInt::zero);
                *e -= c * &fb;
                if e.is_zero() {
                    next.remove(m);
                }
            }
            next.retain(|_, c| !c.is_zero());
            let ra = Rational::from_bigints(fa, BigInt::one());
            let rb = Rational::from_bigints(fb, BigInt::one());
            let mut nc = Combo::new();
            for (j, c) in &combo {
                nc.insert(*j, c * &ra);
            }
            for (j, c) in pc {
                let e = nc.entry(*j).or_insert_with(Rational::zero);
                *e -= &(c * &rb);
            }
            nc.retain(|_, c| !c.is_zero());
            let g = content(&next);
            if !g.is_zero() && !g.is_one() {
                for c in next.values_mut() {
                    *c /= &g;
                }
                let rg = Rational::from_bigints(BigInt::one(), g);
                for c in nc.values_mut() {
                    *c *= &rg;
                }
            }
            v = next;
            combo = nc;
        }
        (v, combo)
    }

    fn insert(&mut self, v: IntVec, combo: Combo) -> bool {
        let (v, combo) = self.reduce(v, combo);
        match v.keys().next_back().copied() {
            None => false,
            Some(lead) => {
                // Keep pivots with positive leading entries for determinism.
                let (v, combo) = if v[&lead].is_negative() {
                    let m1 = -Rational::one();
                    (
                        v.into_iter().map(|(m, c)| (m, -c)).collect(),
                        combo.into_iter().map(|(j, c)| (j, c * &m1)).collect(),
                    )
                } else {
                    (v, combo)
                };
                self.pivots.insert(lead, (v, combo));
                true
            }
        }
    }
}

pub fn solve_membership(
    problem: &MembershipProblem,
    pres: &Presentation,
) -> Result<MembershipResult> {
    solve_membership_with_cap(problem, pres, DEFAULT_ENTRY_CAP)
}

pub fn solve_membership_with_cap(
    problem: &MembershipProblem,
    pres: &Presentation,
    cap: u64,
) -> Result<MembershipResult> {
    let d = problem.cofactor_degree_bound;
    let monos = cofactor_monomials(pres, d);
    let k = problem.ideal_generators.len();
    let max_terms = problem
        .ideal_generators
        .iter()
        .map(|g| g.len() as u64)
        .max()
        .unwrap_or(0);
    // Each column NF(n_i m) has at least as many terms as n_i, typically a
    // few times more.
    let estimated = (monos.len() * k) as u64 * max_terms * 4;
    if estimated > cap {
        return Err(Error::BoundTooLargeForMemory {
            estimated: estimated as usize,
            cap: cap as usize,
        });
    }
    let mut red = Reducer::new(pres);
    let mut columns: Vec<(usize, Monomial)> = Vec::new();
    let mut ech = Echelon {
        pivots: BTreeMap::new(),
    };
    let mut rows = std::collections::BTreeSet::new();
    for (i, n) in problem.ideal_generators.iter().enumerate() {
        for m in &monos {
            let col = red.multiply(n, &NCPolynomial::monomial(*m))?;
            rows.extend(col.monomials().copied());
            let (v, l) = to_integer(&col);
            let j = columns.len();
            columns.push((i, *m));
            let mut combo = Combo::new();
            combo.insert(j, Rational::from_bigints(l, BigInt::one()));
            ech.insert(v, combo);
        }
    }
    let rank = ech.pivots.len();
    rows.extend(problem.target.monomials().copied());
    // The target rides along as an extra column so its scaling is tracked.
    let target_col = usize::MAX;
    let (t, l) = to_integer(&problem.target);
    let mut start = Combo::new();
    start.insert(target_col, Rational::from_bigints(l, BigInt::one()));
    let (rest, mut combo) = ech.reduce(t, start);
    let result = |status| MembershipResult {
        status,
        unknowns: columns.len(),
        equations: rows.len(),
        rank,
    };
    if !rest.is_empty() {
        return Ok(result(MembershipStatus::NoWitnessAtBound(d)));
    }
    // c_T * target + Σ c_j column_j = 0.
    let ct = combo.remove(&target_col).unwrap_or_else(Rational::zero);
    if ct.is_zero() {
        return Err(Error::ValidationFailed {
            algebra: pres.name().to_string(),
            details: "membership elimination lost the target".into(),
        });
    }
    let scale = -(Rational::one() / ct);
    let mut cofactors = vec![NCPolynomial::zero(); k];
    for (j, c) in combo {
        let (i, m) = columns[j];
        cofactors[i].add_term(m, c * &scale);
    }
    // Replay through normal forms.
    let mut sum = NCPolynomial::zero();
    for (n, h) in problem.ideal_generators.iter().zip(&cofactors) {
        sum = sum.add(&red.multiply(n, h)?);
    }
    if sum != problem.target {
        return Err(Error::ValidationFailed {
            algebra: pres.name().to_string(),
            details: "membership witness failed to replay".into(),
        });
    }
    Ok(result(MembershipStatus::Witness(cofactors)))
}

/// PBW monomials of `D` with `|a| + b + c + d + e + f ≤ n`.
pub fn monomial_count(n: u64) -> u64 {
    (0..=n)
        .map(|k| {
            let mult = if k == 0 { 1 } else { 2 };
            mult * binomial(n - k + 5, 5)
        })
        .sum()
}

/// `C(n+6, 6) + C(n+5, 6)`
pub fn closed_form_count(n: u64) -> u64 {
    binomial(n + 6, 6) + binomial(n + 5, 6)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let c = (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1));
    u64::try_from(c).expect("binomial coefficient exceeds u64")
}

/// `log2(count(2n) / count(n))`, which tends to the growth exponent.
pub fn doubling_exponent(n: u64) -> f64 {
    (monomial_count(2 * n) as f64 / monomial_count(n) as f64).log2()
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthRow {
    pub n: u64,
    pub monomial_count: u64,
    pub expected_count: u64,
    /// `log(count(n)) / log(n)`, undefined for `n ≤ 1`.
    pub log_ratio: Option<f64>,
}

pub fn growth_table(max_n: u64) -> Vec<GrowthRow> {
    (0..=max_n)
        .map(|n| {
            let c = monomial_count(n);
            GrowthRow {
                n,
                monomial_count: c,
                expected_count: closed_form_count(n),
                log_ratio: (n > 1).then(|| (c as f64).ln() / (n as f64).ln()),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct FuzzOutcome {
    pub samples: usize,
    pub failures: Vec<String>,
}

/// `deg NF(ab) ≤ deg a + deg b` on random pairs.
pub fn degree_subadditivity_fuzz(
    pres: &Presentation,
    samples: usize,
    seed: u64,
) -> Result<FuzzOutcome> {
    let mut rng = random::rng(seed);
    let mut red = Reducer::new(pres);
    let mut failures = Vec::new();
    for i in 0..samples {
        let a = random::polynomial(&mut rng, pres, 3, 3);
        let b = random::polynomial(&mut rng, pres, 3, 3);
        let ab = red.multiply(&a, &b)?;
        if let (Some(da), Some(db), Some(dab)) =
            (a.total_degree(), b.total_degree(), ab.total_degree())
        {
            if dab > da + db {
                failures.push(format!("pair {i}: {dab} > {da} + {db}"));
            }
        }
    }
    Ok(FuzzOutcome { samples, failures })
}
