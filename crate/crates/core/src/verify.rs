//! Named cross-check suites pitting closed forms against the oracle.

use std::collections::BTreeMap;
use std::fmt;

use crate::calculus::{chi_amalgam, chi_hnn, rank_gradient_graph};
use crate::decompose::{
    amalgam_finite_index, chi_of_decomposition, free_product_finite_index, hnn_finite_index,
    kurosh_rank_finite_index, FreeProductDecomposition,
};
use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};
use crate::graph::GraphOfGroups;
use crate::oracle::{
    build_group, catalog_names, conjugacy_class_count, enumerate_subgroups, hom_count_surface,
    mednykh_eval, rank_gradient_estimate, Budget, FiniteGroupTable,
};
use crate::rational::Rational;

pub const SUITES: [&str; 5] = ["mednykh", "kurosh", "rank-gradient", "decomposition-chi", "dihedral-count"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    /// `None` on success, otherwise what went wrong.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}/{}", self.suite, self.name),
            Some(why) => write!(f, "FAIL {}/{}: {why}", self.suite, self.name),
        }
    }
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Recorder { suite, checks: Vec::new() }
    }

    /// Records a check; budget errors abort the suite, other errors fail the check.
    fn check(&mut self, name: impl Into<String>, body: impl FnOnce() -> Result<Option<String>>) -> Result<()> {
        let failure = match body() {
            Ok(f) => f,
            Err(e @ Error::BudgetExceeded(_)) => return Err(e),
            Err(e) => Some(e.to_string()),
        };
        self.checks.push(Check { suite: self.suite, name: name.into(), failure });
        Ok(())
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("got {got}, expected {want}"))
}

fn group(name: &str) -> FiniteGroupTable {
    build_group(name).expect("catalog name")
}

/// Runs one suite by name.
pub fn run_suite(name: &str, budget: &Budget) -> Result<Vec<Check>> {
    match name {
        "mednykh" => mednykh(budget),
        "kurosh" => kurosh(budget),
        "rank-gradient" => rank_gradient(budget),
        "decomposition-chi" => decomposition_chi(budget),
        "dihedral-count" => dihedral_count(budget),
        _ => Err(Error::InvalidInput(format!("unknown suite {name:?}; known: {}", SUITES.join(", ")))),
    }
}

/// Runs every suite in the fixed order of [`SUITES`].
pub fn run_all(budget: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for s in SUITES {
        out.extend(run_suite(s, budget)?);
    }
    Ok(out)
}

fn mednykh(budget: &Budget) -> Result<Vec<Check>> {
    let mut r = Recorder::new("mednykh");
    for name in catalog_names() {
        let t = group(&name);
        if t.order() > 8 {
            continue;
        }
        let max_genus = if t.order() <= 6 { 2 } else { 1 };
        for g in 0..=max_genus {
            r.check(format!("{name}/genus{g}"), || {
                Ok(expect_eq(mednykh_eval(g, &t)?, hom_count_surface(g, &t, budget)?))
            })?;
        }
        r.check(format!("{name}/commuting-pairs"), || {
            Ok(expect_eq(mednykh_eval(1, &t)?, (t.order() * conjugacy_class_count(&t)) as u64))
        })?;
    }
    Ok(r.checks)
}

const SMALL: [&str; 5] = ["cyclic1", "cyclic2", "cyclic3", "cyclic4", "klein4"];

fn kurosh(budget: &Budget) -> Result<Vec<Check>> {
    let mut r = Recorder::new("kurosh");
    for (i, a) in SMALL.iter().enumerate() {
        for b in &SMALL[i..] {
            let (ta, tb) = (group(a), group(b));
            for s in 1..=6usize.min(budget.max_degree) {
                r.check(format!("{a}*{b}/index{s}"), || {
                    let want = kurosh_rank_finite_index(2, s as u64)?;
                    let certs = enumerate_subgroups(&ta, &tb, s, budget)?;
                    for c in &certs {
                        let got = c.decomposition.total_kurosh_count();
                        if got != want {
                            return Ok(Some(format!("{c}: Kurosh count {got}, expected {want}")));
                        }
                        // all-trivial stabilizers: free rank 1 − s(1/|A| + 1/|B| − 1)
                        let (na, nb, s) = (ta.order() as i64, tb.order() as i64, s as i64);
                        if c.all_stabilizers_trivial() && c.free_rank() as i64 * na * nb != na * nb + s * (na * nb - na - nb) {
                            return Ok(Some(format!("{c}: free rank off the Euler value")));
                        }
                    }
                    Ok(None)
                })?;
            }
        }
    }
    Ok(r.checks)
}

fn one_edge_graph(a: u64, b: u64) -> GraphOfGroups {
    GraphOfGroups::new()
        .with_vertex("a", GroupDescriptor::finite(a))
        .with_vertex("b", GroupDescriptor::finite(b))
        .with_edge("e", "a", "b", 1)
}

fn rank_gradient(budget: &Budget) -> Result<Vec<Check>> {
    let mut r = Recorder::new("rank-gradient");
    let names = ["cyclic1", "cyclic2", "cyclic3"];
    for (i, a) in names.iter().enumerate() {
        for b in &names[i..] {
            let (ta, tb) = (group(a), group(b));
            let top = ta.order() * tb.order();
            r.check(format!("{a}*{b}/squeeze"), || {
                let formula = rank_gradient_graph(&one_edge_graph(ta.order() as u64, tb.order() as u64))?;
                let mut prev: Option<Rational> = None;
                for s in 1..=top {
                    let est = rank_gradient_estimate(&ta, &tb, s, budget)?;
                    if est < formula {
                        return Ok(Some(format!("estimate {est} at index {s} is below {formula}")));
                    }
                    if prev.is_some_and(|p| est > p) {
                        return Ok(Some(format!("estimate increased at index {s}")));
                    }
                    prev = Some(est);
                }
                Ok(expect_eq(prev.expect("top ≥ 1"), formula))
            })?;
        }
    }
    Ok(r.checks)
}

fn scaled(pairs: &[(&str, Rational)]) -> BTreeMap<String, Rational> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn multiplicative(d: &FreeProductDecomposition, values: &BTreeMap<String, Rational>, parent: Rational) -> Result<Option<String>> {
    let lhs = chi_of_decomposition(d, values)?;
    let rhs = Rational::from(d.index).try_mul(parent)?;
    Ok((lhs != rhs).then(|| format!("{d}: chi {lhs}, index times parent {rhs}")))
}

fn decomposition_chi(budget: &Budget) -> Result<Vec<Check>> {
    let mut r = Recorder::new("decomposition-chi");
    let generic = [Rational::new(5, 7)?, Rational::new(-2, 3)?];

    r.check("free-product", || {
        for m in 1..=8u64 {
            for n in 1..=8u64 {
                let l = m * n / gcd(m, n);
                for s in (l..=4 * m * n).step_by(l as usize) {
                    // H1 = G1 or H2 = G2 admits only s = n or s = m
                    let Ok(d) = free_product_finite_index(m, n, s) else {
                        if s / m + s / n <= s + 1 {
                            return Ok(Some(format!("({m},{n},{s}) rejected")));
                        }
                        continue;
                    };
                    // finite factors of orders m, n with trivial H_i, then generic values
                    let cases = [(Rational::unit_fraction(m), Rational::unit_fraction(n)), (generic[0], generic[1])];
                    for (x, y) in cases {
                        let values = scaled(&[
                            ("H1", Rational::from(m).try_mul(x)?),
                            ("H2", Rational::from(n).try_mul(y)?),
                        ]);
                        if let Some(f) = multiplicative(&d, &values, chi_amalgam(x, y, 1))? {
                            return Ok(Some(f));
                        }
                    }
                    if s == m * n && d.printed_free_rank != Some(d.free_rank) {
                        return Ok(Some(format!("printed rank differs at s = mn for ({m},{n})")));
                    }
                }
            }
        }
        Ok(None)
    })?;

    r.check("hnn", || {
        for k in 1..=24u64 {
            for c in (1..=k).filter(|c| k % c == 0) {
                let d = hnn_finite_index(k, c)?;
                for x in [Rational::ZERO, generic[0]] {
                    let values = scaled(&[("K", Rational::from(k).try_mul(x)?)]);
                    if let Some(f) = multiplicative(&d, &values, chi_hnn(x, c))? {
                        return Ok(Some(f));
                    }
                }
            }
        }
        Ok(None)
    })?;

    r.check("amalgam", || {
        for n1 in 1..=12u64 {
            for n2 in 1..=12u64 {
                for c in (1..=n1.min(n2)).filter(|c| n1 % c == 0 && n2 % c == 0) {
                    let d = amalgam_finite_index(n1, n2, c)?;
                    let values = scaled(&[
                        ("N1", Rational::from(n1).try_mul(generic[0])?),
                        ("N2", Rational::from(n2).try_mul(generic[1])?),
                    ]);
                    if let Some(f) = multiplicative(&d, &values, chi_amalgam(generic[0], generic[1], c))? {
                        return Ok(Some(f));
                    }
                }
            }
        }
        Ok(None)
    })?;

    // the oracle decides between the two free-rank formulas where they differ
    let c2 = group("cyclic2");
    let s = 6usize.min(budget.max_degree);
    r.check(format!("free-rank-arbitration/cyclic2*cyclic2/index{s}"), || {
        let lemma = free_product_finite_index(2, 2, s as u64)?;
        let realized: Vec<u64> = enumerate_subgroups(&c2, &c2, s, budget)?
            .iter()
            .filter(|c| c.all_stabilizers_trivial())
            .map(|c| c.free_rank())
            .collect();
        if realized.is_empty() {
            return Ok(Some("no torsion-free subgroup found".into()));
        }
        Ok(realized.iter().find(|&&f| f != lemma.free_rank).map(|f| {
            format!("realized free rank {f}, Euler-consistent {}, printed {:?}", lemma.free_rank, lemma.printed_free_rank)
        }))
    })?;
    Ok(r.checks)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn dihedral_count(budget: &Budget) -> Result<Vec<Check>> {
    let mut r = Recorder::new("dihedral-count");
    let c2 = group("cyclic2");
    for s in 1..=budget.max_degree.min(7) {
        r.check(format!("index{s}"), || {
            // s dihedral subgroups, plus the cyclic one when s is even
            let want = s + usize::from(s % 2 == 0);
            Ok(expect_eq(enumerate_subgroups(&c2, &c2, s, budget)?.len(), want))
        })?;
    }
    r.check("index2-types", || {
        let mut types: Vec<(Vec<u64>, u64)> = enumerate_subgroups(&c2, &c2, 2, budget)?
            .iter()
            .map(|c| (c.finite_factor_orders(), c.free_rank()))
            .collect();
        types.sort();
        let want = vec![(vec![], 1), (vec![2, 2], 0), (vec![2, 2], 0)];
        Ok((types != want).then(|| format!("got {types:?}")))
    })?;
    Ok(r.checks)
}
