//! Closed-form invariants of graphs of groups with finite edge groups, and the
//! numeric accessibility bounds built on them.
//!
//! Two affine shapes cover every formula here. Euler-type invariants
//! (`ω`, raw `χ`) subtract `1/|G_e|` per edge; co-Euler invariants (rank
//! gradient, Betti volume, hom-volume, shifted `b₁⁽²⁾`) add it.

use std::collections::BTreeMap;
use std::fmt;

use crate::descriptor::{base_invariants, GroupDescriptor, InvariantRecord, Norm};
use crate::error::{Error, Result};
use crate::graph::{is_total_group_finite, GraphOfGroups};
use crate::rational::Rational;

/// `χ(G∗_H) = χ(G) − 1/|H|`.
pub fn chi_hnn(chi_g: Rational, h: u64) -> Rational {
    chi_g - Rational::unit_fraction(h)
}

/// `χ(G₁ ∗_H G₂) = χ(G₁) + χ(G₂) − 1/|H|`.
pub fn chi_amalgam(chi_1: Rational, chi_2: Rational, h: u64) -> Rational {
    chi_1 + chi_2 - Rational::unit_fraction(h)
}

fn require_valid(g: &GraphOfGroups) -> Result<()> {
    let report = g.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Validation(report))
    }
}

fn edge_sum(g: &GraphOfGroups) -> Rational {
    g.edges.iter().map(|e| Rational::unit_fraction(e.edge_order)).sum()
}

fn vertex_sum(g: &GraphOfGroups, values: &BTreeMap<String, Rational>) -> Result<Rational> {
    g.vertices
        .keys()
        .map(|v| values.get(v).copied().ok_or_else(|| Error::IncompleteAssignment(v.clone())))
        .try_fold(Rational::ZERO, |acc, x| acc.try_add(x?))
}

/// `Σ_u χ(u) − Σ_e 1/|G_e|`.
pub fn graph_chi(g: &GraphOfGroups, vertex_chi: &BTreeMap<String, Rational>) -> Result<Rational> {
    require_valid(g)?;
    vertex_sum(g, vertex_chi)?.try_sub(edge_sum(g))
}

/// `Σ_u σ(u) + Σ_e 1/|G_e|`.
pub fn graph_cochi(g: &GraphOfGroups, vertex_val: &BTreeMap<String, Rational>) -> Result<Rational> {
    require_valid(g)?;
    vertex_sum(g, vertex_val)?.try_add(edge_sum(g))
}

fn records(g: &GraphOfGroups) -> impl Iterator<Item = (&String, InvariantRecord)> {
    g.vertices.iter().map(|(id, d)| (id, base_invariants(d)))
}

fn collect_values(
    g: &GraphOfGroups,
    pick: impl Fn(&InvariantRecord) -> Rational,
) -> BTreeMap<String, Rational> {
    records(g).map(|(id, r)| (id.clone(), pick(&r))).collect()
}

pub fn omega_graph(g: &GraphOfGroups) -> Result<Rational> {
    let mut values = BTreeMap::new();
    for (id, rec) in records(g) {
        let w = rec.omega.ok_or_else(|| Error::Undefined {
            invariant: "omega",
            reason: format!("omega not declared for vertex {id}"),
        })?;
        values.insert(id.clone(), w);
    }
    graph_chi(g, &values)
}

pub fn rank_gradient_graph(g: &GraphOfGroups) -> Result<Rational> {
    graph_cochi(g, &collect_values(g, |r| r.rank_gradient))
}

pub fn betti_volume_graph(g: &GraphOfGroups) -> Result<Rational> {
    graph_cochi(g, &collect_values(g, |r| r.betti_volume))
}

/// `1/|H|` for finite `H`, zero otherwise.
fn inverse_order(order: Option<u64>) -> Rational {
    order.map(Rational::unit_fraction).unwrap_or(Rational::ZERO)
}

/// First L²-Betti number via the shifted invariant `b₁⁽²⁾(G) − 1/|G|`,
/// which is co-Euler over the graph.
pub fn l2_betti_graph(g: &GraphOfGroups) -> Result<Rational> {
    let shifted = collect_values(g, |r| r.l2_betti - inverse_order(r.finite_order));
    let total = graph_cochi(g, &shifted)?;
    total.try_add(inverse_order(is_total_group_finite(g)))
}

/// Hom-volume `Ṽ_C` for any non-trivial finite `C`.
pub fn vc_graph(g: &GraphOfGroups) -> Result<Rational> {
    let mut values = BTreeMap::new();
    for (id, rec) in records(g) {
        let v = match rec.finite_order {
            Some(n) => -Rational::unit_fraction(n),
            None if rec.vc_equals_rg => rec.rank_gradient,
            None => {
                return Err(Error::Undefined {
                    invariant: "vc",
                    reason: format!("V_C not established for vertex {id}"),
                })
            }
        };
        values.insert(id.clone(), v);
    }
    graph_cochi(g, &values)
}

/// A computed value or the reason it is not defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Defined(Rational),
    Undefined(String),
}

impl Value {
    pub fn defined(&self) -> Option<Rational> {
        match self {
            Value::Defined(x) => Some(*x),
            Value::Undefined(_) => None,
        }
    }

    fn from_result(r: Result<Rational>) -> Result<Self> {
        match r {
            Ok(x) => Ok(Value::Defined(x)),
            Err(Error::Undefined { reason, .. }) => Ok(Value::Undefined(reason)),
            Err(e) => Err(e),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Defined(x) => write!(f, "{x}"),
            Value::Undefined(reason) => write!(f, "undefined:{reason}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub omega: Value,
    pub rank_gradient: Rational,
    pub l2_betti: Rational,
    pub betti_volume: Rational,
    pub vc: Value,
    pub finite_order: Option<u64>,
}

impl InvariantReport {
    /// All invariants of a valid graph. Fails only on validation or overflow.
    pub fn compute(g: &GraphOfGroups) -> Result<Self> {
        require_valid(g)?;
        Ok(InvariantReport {
            omega: Value::from_result(omega_graph(g))?,
            rank_gradient: rank_gradient_graph(g)?,
            l2_betti: l2_betti_graph(g)?,
            betti_volume: betti_volume_graph(g)?,
            vc: Value::from_result(vc_graph(g))?,
            finite_order: is_total_group_finite(g),
        })
    }

    /// `(name, value)` in the fixed output order.
    pub fn entries(&self) -> [(&'static str, Value); 5] {
        [
            ("omega", self.omega.clone()),
            ("rg", Value::Defined(self.rank_gradient)),
            ("b1l2", Value::Defined(self.l2_betti)),
            ("vb", Value::Defined(self.betti_volume)),
            ("vc", self.vc.clone()),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplittingKind {
    Amalgam,
    Hnn,
}

/// Lower bound on the rank gradient of a group with infinitely many ends
/// splitting over a finite group of order `f`.
pub fn ends_rg_lower_bound(kind: SplittingKind, f: u64) -> Rational {
    let k = match kind {
        SplittingKind::Amalgam => 6,
        SplittingKind::Hnn => 2,
    };
    Rational::unit_fraction(k * f)
}

/// Maximum number of edges in a minimal splitting with finite edge groups:
/// `⌊‖G‖ (1/2 + RG(G))⌋`.
///
/// Assumes the splitting has non-trivial vertex groups; a trivial vertex has
/// rank gradient −1, below the −1/2 the bound is derived from.
pub fn accessibility_edge_bound(norm: Norm, rg: Rational) -> Result<u64> {
    let Norm::Finite(n) = norm else {
        return Err(Error::Undefined {
            invariant: "accessibility_edge_bound",
            reason: "finite-subgroup orders are unbounded or unknown".into(),
        });
    };
    if n == 0 {
        return Err(Error::InvalidInput("norm must be ≥ 1".into()));
    }
    let half = Rational::new(1, 2)?;
    if rg < -half {
        return Err(Error::InvalidInput(format!(
            "rank gradient {rg} is below -1/2; no non-trivial group has this value"
        )));
    }
    let bound = Rational::from(n).try_mul(half.try_add(rg)?)?;
    Ok(bound.floor().max(0) as u64)
}

/// Edge bound `⌊RG(H)⌋` for a torsion-free finite-index subgroup `H`.
pub fn torsion_free_edge_bound(rg_h: Rational) -> Result<u64> {
    if rg_h.is_negative() {
        return Err(Error::InvalidInput(format!(
            "rank gradient of a torsion-free subgroup must be ≥ 0, got {rg_h}"
        )));
    }
    Ok(rg_h.floor() as u64)
}

/// Upper bound `[G:N]/2 − ω(N) + 1` on the maximum complexity of fixed
/// subgroups of automorphisms, for a characteristic torsion-free `N`.
pub fn fixed_subgroup_complexity_bound(index_n: u64, omega_n: Rational) -> Result<Rational> {
    if index_n == 0 {
        return Err(Error::InvalidInput("index must be ≥ 1".into()));
    }
    Rational::new(index_n as i128, 2)?
        .try_sub(omega_n)?
        .try_add(Rational::ONE)
}

/// Shorthand used by examples and the CLI.
pub fn single_vertex(d: GroupDescriptor) -> GraphOfGroups {
    GraphOfGroups::new().with_vertex("v", d)
}
