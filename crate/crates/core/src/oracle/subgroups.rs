//! Finite-index subgroups of free products of finite groups.
//!
//! An index-`s` subgroup of `A₁ ∗ ⋯ ∗ A_n` is the stabilizer of point 0 in a
//! transitive action on `s` points, and two actions give the same subgroup
//! iff they are isomorphic by a relabeling fixing 0. Actions are found as
//! tuples of homomorphisms `A_i → Sym(s)`; the first factor's action is only
//! taken up to relabelings fixing 0, and the remaining duplicates are merged
//! through a canonical code.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use super::group::{min_generators, FiniteGroupTable};
use super::homs::{actions, count_homs, is_homomorphism};
use super::perm::Perm;
use super::Budget;
use crate::decompose::{Factor, FactorKind, FreeProductDecomposition};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A homomorphism from a finite group to `Sym(degree)`, stored as the image
/// of every element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermutationAction {
    pub degree: usize,
    pub images: Vec<Perm>,
}

impl PermutationAction {
    pub fn new(t: &FiniteGroupTable, images: Vec<Perm>) -> Result<Self> {
        let degree = images.first().map_or(0, Perm::degree);
        if images.len() != t.order() || images.iter().any(|p| p.degree() != degree) {
            return Err(Error::InvalidInput("action must map every element to a permutation of one degree".into()));
        }
        if !images[0].is_identity() || !is_homomorphism(t, &images, Perm::compose) {
            return Err(Error::InvalidInput("images do not respect the multiplication table".into()));
        }
        Ok(PermutationAction { degree, images })
    }

    /// Orbits as sorted point lists, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if seen[p] {
                continue;
            }
            let mut orbit: Vec<usize> = self.images.iter().map(|g| g.apply(p)).unique().collect();
            orbit.sort_unstable();
            for &q in &orbit {
                seen[q] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// Elements fixing `point`, ascending.
    pub fn stabilizer(&self, point: usize) -> Vec<usize> {
        (0..self.images.len()).filter(|&a| self.images[a].apply(point) == point).collect()
    }
}

/// One finite-index subgroup of a free product, with its Kurosh
/// decomposition read off the action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupCertificate {
    pub actions: Vec<PermutationAction>,
    pub degree: usize,
    /// Orbit sizes per factor, orbits ordered by least point.
    pub orbits: Vec<Vec<usize>>,
    /// Per factor and orbit, the stabilizer of the orbit's least point.
    pub stabilizers: Vec<Vec<Vec<usize>>>,
    /// Conjugates of stabilizers grouped by order, trivial ones included,
    /// plus the free rank.
    pub decomposition: FreeProductDecomposition,
    /// Grushko rank: generators of nontrivial stabilizers plus free rank.
    pub min_rank: u64,
    /// Rank of the abelianization modulo torsion.
    pub b1: u64,
    /// Canonical form of the pointed action; equal iff same subgroup.
    pub code: Vec<u8>,
}

fn factor_letter(i: usize) -> char {
    (b'A' + i as u8) as char
}

impl SubgroupCertificate {
    /// Builds a certificate from one action per factor. The actions must be
    /// jointly transitive.
    pub fn from_actions(tables: &[&FiniteGroupTable], actions: Vec<PermutationAction>) -> Result<Self> {
        if tables.is_empty() || tables.len() != actions.len() || tables.len() > 26 {
            return Err(Error::InvalidInput("need one action per factor, at most 26 factors".into()));
        }
        let degree = actions[0].degree;
        if degree == 0 || actions.iter().any(|a| a.degree != degree) {
            return Err(Error::InvalidInput("actions must share a positive degree".into()));
        }
        let gens: Vec<&Perm> = tables
            .iter()
            .zip(&actions)
            .flat_map(|(t, a)| t.generators().iter().map(move |&g| &a.images[g]))
            .collect();
        let code = canonical_code(&gens, degree)
            .ok_or_else(|| Error::InvalidInput("actions are not jointly transitive".into()))?;

        let mut orbits = Vec::new();
        let mut stabilizers = Vec::new();
        let mut factors = Vec::new();
        let mut min_rank = 0u64;
        let mut orbit_total = 0u64;
        for (i, (t, a)) in tables.iter().zip(&actions).enumerate() {
            let orbs = a.orbits();
            let stabs: Vec<Vec<usize>> = orbs.iter().map(|o| a.stabilizer(o[0])).collect();
            let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
            for st in &stabs {
                *by_order.entry(st.len() as u64).or_default() += 1;
                if st.len() > 1 {
                    min_rank += min_generators(&t.subgroup(st)?) as u64;
                }
            }
            for (k, mult) in by_order.into_iter().rev() {
                factors.push(Factor {
                    label: format!("{}[{k}]", factor_letter(i)),
                    kind: FactorKind::FiniteOfOrder(k),
                    multiplicity: mult,
                });
            }
            orbit_total += orbs.len() as u64;
            orbits.push(orbs.iter().map(Vec::len).collect());
            stabilizers.push(stabs);
        }
        // covering graph: Σ orbits vertices, (n − 1)·s edges
        let free_rank = (tables.len() as u64 - 1) * degree as u64 + 1 - orbit_total;
        min_rank += free_rank;
        Ok(SubgroupCertificate {
            actions,
            degree,
            orbits,
            stabilizers,
            decomposition: FreeProductDecomposition {
                factors,
                free_rank,
                index: degree as u64,
                printed_free_rank: None,
            },
            min_rank,
            b1: free_rank,
            code,
        })
    }

    pub fn action_a(&self) -> &PermutationAction {
        &self.actions[0]
    }

    pub fn action_b(&self) -> &PermutationAction {
        &self.actions[1]
    }

    pub fn free_rank(&self) -> u64 {
        self.decomposition.free_rank
    }

    /// Orders of the nontrivial finite free factors, descending. Together
    /// with the free rank this is the isomorphism type.
    pub fn finite_factor_orders(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.stabilizers.iter().flatten().map(|s| s.len() as u64).filter(|&k| k > 1).collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn all_stabilizers_trivial(&self) -> bool {
        self.stabilizers.iter().flatten().all(|s| s.len() == 1)
    }

    /// `|Hom(H, C)|`: product over finite factors times `|C|^{free rank}`.
    pub fn hom_count(&self, tables: &[&FiniteGroupTable], target: &FiniteGroupTable, budget: &Budget) -> Result<u64> {
        let overflow = || Error::Overflow("hom count");
        let mut total = (target.order() as u64)
            .checked_pow(self.free_rank() as u32)
            .ok_or_else(overflow)?;
        for (t, stabs) in tables.iter().zip(&self.stabilizers) {
            for st in stabs.iter().filter(|s| s.len() > 1) {
                total = total.checked_mul(count_homs(&t.subgroup(st)?, target, budget)?).ok_or_else(overflow)?;
            }
        }
        Ok(total)
    }
}

impl fmt::Display for SubgroupCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "index={}", self.degree)?;
        for (i, o) in self.orbits.iter().enumerate() {
            write!(f, " orbits{}={}", factor_letter(i), o.iter().join(","))?;
        }
        write!(f, " free_rank={} min_rank={}", self.free_rank(), self.min_rank)
    }
}

/// Relabels points in breadth-first order from 0 along the generator images
/// and lists every generator's image in the new labels. `None` if some point
/// is unreachable.
fn canonical_code(gens: &[&Perm], degree: usize) -> Option<Vec<u8>> {
    const UNSEEN: u8 = u8::MAX;
    let mut label = vec![UNSEEN; degree];
    let mut order = Vec::with_capacity(degree);
    label[0] = 0;
    order.push(0);
    let mut i = 0;
    while i < order.len() {
        let p = order[i];
        for g in gens {
            let q = g.apply(p);
            if label[q] == UNSEEN {
                label[q] = order.len() as u8;
                order.push(q);
            }
        }
        i += 1;
    }
    if order.len() < degree {
        return None;
    }
    Some(gens.iter().flat_map(|g| order.iter().map(|&p| label[g.apply(p)])).collect())
}

/// Representatives of `acts` up to conjugation by permutations fixing 0.
/// `acts` must be closed under that conjugation.
fn pointed_orbit_representatives(t: &FiniteGroupTable, acts: &[Vec<Perm>], degree: usize) -> Vec<usize> {
    let key = |a: &[Perm]| -> Vec<Perm> { t.generators().iter().map(|&g| a[g].clone()).collect() };
    let index: HashMap<Vec<Perm>, usize> = acts.iter().enumerate().map(|(i, a)| (key(a), i)).collect();
    let mut seen = vec![false; acts.len()];
    let mut reps = Vec::new();
    for start in 0..acts.len() {
        if seen[start] {
            continue;
        }
        reps.push(start);
        seen[start] = true;
        let mut queue = vec![key(&acts[start])];
        while let Some(k) = queue.pop() {
            for i in 1..degree {
                for j in i + 1..degree {
                    let moved: Vec<Perm> = k.iter().map(|p| p.conjugate_by_transposition(i, j)).collect();
                    let m = index[&moved];
                    if !seen[m] {
                        seen[m] = true;
                        queue.push(moved);
                    }
                }
            }
        }
    }
    reps
}

/// Every index-`s` subgroup of the free product of `factors`, one
/// certificate each, in canonical order.
pub fn enumerate_free_product_subgroups(
    factors: &[&FiniteGroupTable],
    s: usize,
    budget: &Budget,
) -> Result<Vec<SubgroupCertificate>> {
    if factors.is_empty() || s == 0 {
        return Err(Error::InvalidInput("need at least one factor and index ≥ 1".into()));
    }
    if s > budget.max_degree {
        return Err(Error::BudgetExceeded(format!("index {s} exceeds the degree budget {}", budget.max_degree)));
    }
    let all: Vec<Vec<Vec<Perm>>> = factors.iter().map(|t| actions(t, s, budget)).collect::<Result<_>>()?;
    let reps = pointed_orbit_representatives(factors[0], &all[0], s);
    let tuples = all[1..]
        .iter()
        .try_fold(reps.len() as u64, |acc, a| acc.checked_mul(a.len() as u64))
        .unwrap_or(u64::MAX);
    if tuples > budget.max_work {
        return Err(Error::BudgetExceeded(format!("{tuples} action tuples exceed {}", budget.max_work)));
    }

    let all_ref = &all;
    let gen_images = move |f: usize, a: usize| factors[f].generators().iter().map(move |&g| &all_ref[f][a][g]);
    let mut found: Vec<(Vec<u8>, Vec<usize>)> = reps
        .par_iter()
        .flat_map_iter(|&r| {
            all[1..]
                .iter()
                .map(|a| 0..a.len())
                .multi_cartesian_product()
                .filter_map(move |rest| {
                    let mut gens: Vec<&Perm> = gen_images(0, r).collect();
                    for (k, &a) in rest.iter().enumerate() {
                        gens.extend(gen_images(k + 1, a));
                    }
                    let code = canonical_code(&gens, s)?;
                    let mut choice = Vec::with_capacity(factors.len());
                    choice.push(r);
                    choice.extend(rest);
                    Some((code, choice))
                })
        })
        .collect();
    found.par_sort_unstable();
    found.dedup_by(|a, b| a.0 == b.0);

    let mut certs: Vec<SubgroupCertificate> = found
        .into_par_iter()
        .map(|(_, choice)| {
            let acts = choice
                .iter()
                .enumerate()
                .map(|(f, &a)| PermutationAction { degree: s, images: all[f][a].clone() })
                .collect();
            SubgroupCertificate::from_actions(factors, acts)
        })
        .collect::<Result<_>>()?;
    certs.sort_by(|x, y| (&x.orbits, x.free_rank(), &x.code).cmp(&(&y.orbits, y.free_rank(), &y.code)));
    Ok(certs)
}

/// Index-`s` subgroups of `A ∗ B`.
pub fn enumerate_subgroups(
    a: &FiniteGroupTable,
    b: &FiniteGroupTable,
    s: usize,
    budget: &Budget,
) -> Result<Vec<SubgroupCertificate>> {
    enumerate_free_product_subgroups(&[a, b], s, budget)
}

/// `min (r(H) − 1)/[G:H]` over all subgroups of index at most `max_index`.
pub fn rank_gradient_estimate(
    a: &FiniteGroupTable,
    b: &FiniteGroupTable,
    max_index: usize,
    budget: &Budget,
) -> Result<Rational> {
    let mut best: Option<Rational> = None;
    for s in 1..=max_index {
        for c in enumerate_subgroups(a, b, s, budget)? {
            let rate = Rational::new(c.min_rank as i128 - 1, s as i128)?;
            best = Some(best.map_or(rate, |x| x.min(rate)));
        }
    }
    best.ok_or_else(|| Error::InvalidInput("max_index must be ≥ 1".into()))
}

/// Largest `e` with `base^e ≤ value`; `base ≥ 2`, `value ≥ 1`.
pub(crate) fn floor_log(base: u64, value: u64) -> u64 {
    let mut e = 0;
    let mut p = base;
    while p <= value {
        e += 1;
        match p.checked_mul(base) {
            Some(next) => p = next,
            None => break,
        }
    }
    e
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcRateWitness {
    /// Best certified rate `(e − 1)/s` at `witness_index`.
    pub best_rate: Rational,
    pub witness_index: u64,
    /// `|Hom(H, C)|` of the certificate attaining `best_rate`.
    pub hom_count: u64,
    /// Best rate at each index that has subgroups.
    pub per_index: Vec<(u64, Rational)>,
}

/// Lower bounds for `(log_{|C|} |Hom(H, C)| − 1)/[G:H]` over the subgroups of
/// `A ∗ B` of index at most `max_index`, with `e = ⌊log_{|C|} |Hom(H, C)|⌋`.
///
/// The reported witness is the best certificate at the deepest index
/// reached, since the hom-volume is a limit along deep subgroups; the best
/// rate at every shallower index is kept in `per_index`.
pub fn vc_rate_witness(
    a: &FiniteGroupTable,
    b: &FiniteGroupTable,
    c: &FiniteGroupTable,
    max_index: usize,
    budget: &Budget,
) -> Result<VcRateWitness> {
    if c.order() < 2 {
        return Err(Error::InvalidInput("target group must be nontrivial".into()));
    }
    let base = c.order() as u64;
    let tables = [a, b];
    let mut per_index = Vec::new();
    let mut deepest: Option<(u64, Rational, u64)> = None;
    for s in 1..=max_index {
        let mut best: Option<(Rational, u64)> = None;
        for cert in enumerate_subgroups(a, b, s, budget)? {
            let homs = cert.hom_count(&tables, c, budget)?;
            let rate = Rational::new(floor_log(base, homs) as i128 - 1, s as i128)?;
            if best.map_or(true, |(r, _)| rate > r) {
                best = Some((rate, homs));
            }
        }
        if let Some((rate, homs)) = best {
            per_index.push((s as u64, rate));
            deepest = Some((s as u64, rate, homs));
        }
    }
    let (witness_index, best_rate, hom_count) =
        deepest.ok_or_else(|| Error::InvalidInput("max_index must be ≥ 1".into()))?;
    Ok(VcRateWitness { best_rate, witness_index, hom_count, per_index })
}
