//! Finite graphs of groups with finite edge groups.
//!
//! Only group orders are stored on edges; every formula in this crate depends
//! on the edge groups through `|G_e|` alone. Loops are HNN edges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::descriptor::{base_invariants, GroupDescriptor, Norm};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeRec {
    pub id: String,
    pub endpoints: (String, String),
    /// `|G_e|`.
    pub edge_order: u64,
}

impl EdgeRec {
    pub fn is_loop(&self) -> bool {
        self.endpoints.0 == self.endpoints.1
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphOfGroups {
    pub vertices: BTreeMap<String, GroupDescriptor>,
    pub edges: Vec<EdgeRec>,
}

impl GraphOfGroups {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertex(mut self, id: impl Into<String>, d: GroupDescriptor) -> Self {
        self.add_vertex(id, d);
        self
    }

    pub fn with_edge(
        mut self,
        id: impl Into<String>,
        u: impl Into<String>,
        v: impl Into<String>,
        order: u64,
    ) -> Self {
        self.add_edge(id, u, v, order);
        self
    }

    /// Returns the previous descriptor if the id was already present.
    pub fn add_vertex(&mut self, id: impl Into<String>, d: GroupDescriptor) -> Option<GroupDescriptor> {
        self.vertices.insert(id.into(), d)
    }

    pub fn add_edge(
        &mut self,
        id: impl Into<String>,
        u: impl Into<String>,
        v: impl Into<String>,
        order: u64,
    ) {
        self.edges.push(EdgeRec {
            id: id.into(),
            endpoints: (u.into(), v.into()),
            edge_order: order,
        });
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    /// `‖G‖` as the maximum over vertex groups; any unbounded vertex makes it unbounded.
    pub fn norm(&self) -> Norm {
        self.vertices
            .values()
            .map(|d| base_invariants(d).max_finite_subgroup)
            .fold(Norm::Finite(1), Norm::max)
    }

    /// Non-loop edges whose group is all of a finite endpoint group.
    pub fn non_minimal_edges(&self) -> Vec<&EdgeRec> {
        self.edges
            .iter()
            .filter(|e| !e.is_loop() && self.is_trivial_edge(e))
            .collect()
    }

    fn is_trivial_edge(&self, e: &EdgeRec) -> bool {
        [&e.endpoints.0, &e.endpoints.1].into_iter().any(|v| {
            self.vertices
                .get(v)
                .and_then(GroupDescriptor::finite_order)
                .is_some_and(|n| n == e.edge_order)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Violation,
    Warning,
    /// Accepted without proof that the embedding exists.
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subject {
    Graph,
    Vertex(String),
    Edge(String),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Graph => f.write_str("graph"),
            Subject::Vertex(v) => write!(f, "vertex {v}"),
            Subject::Edge(e) => write!(f, "edge {e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Issue {
    pub severity: Severity,
    pub subject: Subject,
    pub message: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Violation => "error",
            Severity::Warning => "warning",
            Severity::Unverified => "unverified",
        };
        write!(f, "{tag}: {}: {}", self.subject, self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    /// No violations; warnings and unverified notes are allowed.
    pub fn is_valid(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Issue> {
        self.issues.iter().filter(|i| i.severity == Severity::Violation)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Issue> {
        self.issues.iter().filter(|i| i.severity == Severity::Warning)
    }

    /// For operations that require a minimal graph.
    pub fn promote_warnings_to_violations(&mut self) {
        for i in &mut self.issues {
            if i.severity == Severity::Warning {
                i.severity = Severity::Violation;
            }
        }
    }

    fn push(&mut self, severity: Severity, subject: Subject, message: impl Into<String>) {
        self.issues.push(Issue { severity, subject, message: message.into() });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

fn vertex_issues(id: &str, d: &GroupDescriptor, report: &mut ValidationReport) {
    let subject = || Subject::Vertex(id.to_string());
    for msg in d.parameter_errors() {
        report.push(Severity::Violation, subject(), msg);
    }
    if !base_invariants(d).hypothesis_ok {
        report.push(
            Severity::Violation,
            subject(),
            "vertex group must be residually finite or virtually torsion free",
        );
    }
}

/// Constraint an endpoint places on the order of an incident edge group.
fn endpoint_issue(d: &GroupDescriptor, q: u64) -> Option<(Severity, String)> {
    match d {
        GroupDescriptor::Finite { order, .. } if *order > 0 && order % q != 0 => Some((
            Severity::Violation,
            format!("edge order {q} does not divide vertex order {order}"),
        )),
        GroupDescriptor::SurfaceGenus { .. } | GroupDescriptor::FreeOfRank { .. } if q != 1 => {
            Some((
                Severity::Violation,
                format!("edge order must be 1 for a torsion-free vertex group, got {q}"),
            ))
        }
        GroupDescriptor::Custom { name, record } => match record.finite_order {
            Some(n) if n > 0 && n % q != 0 => Some((
                Severity::Violation,
                format!("edge order {q} does not divide order {n} of custom group {name}"),
            )),
            _ => Some((
                Severity::Unverified,
                format!("embedding of an order-{q} group into custom group {name} not checked"),
            )),
        },
        _ => None,
    }
}

fn edge_issues(g: &GraphOfGroups, e: &EdgeRec, report: &mut ValidationReport) {
    let subject = || Subject::Edge(e.id.clone());
    if e.edge_order == 0 {
        report.push(Severity::Violation, subject(), "edge order must be ≥ 1");
        return;
    }
    let ends: Vec<&String> = if e.is_loop() {
        vec![&e.endpoints.0]
    } else {
        vec![&e.endpoints.0, &e.endpoints.1]
    };
    let mut all_known = true;
    for v in ends {
        match g.vertices.get(v) {
            None => {
                all_known = false;
                report.push(Severity::Violation, subject(), format!("unknown endpoint {v}"));
            }
            Some(d) => {
                if let Some((sev, msg)) = endpoint_issue(d, e.edge_order) {
                    report.push(sev, subject(), format!("at {v}: {msg}"));
                }
            }
        }
    }
    if all_known && !e.is_loop() && g.is_trivial_edge(e) {
        report.push(
            Severity::Warning,
            subject(),
            "edge group equals a finite endpoint group (non-minimal edge)",
        );
    }
}

/// Every violated invariant, plus warnings for non-minimal edges and notes
/// for unchecked custom embeddings.
pub fn validate(g: &GraphOfGroups) -> ValidationReport {
    let mut report = ValidationReport::default();
    if g.vertices.is_empty() {
        report.push(Severity::Violation, Subject::Graph, "graph has no vertices");
    }
    for (id, d) in &g.vertices {
        vertex_issues(id, d, &mut report);
    }
    let mut seen = BTreeSet::new();
    for e in &g.edges {
        if !seen.insert(&e.id) {
            report.push(Severity::Violation, Subject::Edge(e.id.clone()), "duplicate edge id");
        }
        edge_issues(g, e, &mut report);
    }
    if !g.vertices.is_empty() && !is_connected(g) {
        report.push(Severity::Violation, Subject::Graph, "underlying graph is not connected");
    }
    report
}

fn is_connected(g: &GraphOfGroups) -> bool {
    let ids: Vec<&String> = g.vertices.keys().collect();
    let index: BTreeMap<&String, usize> = ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut parent: Vec<usize> = (0..ids.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in &g.edges {
        if let (Some(&a), Some(&b)) = (index.get(&e.endpoints.0), index.get(&e.endpoints.1)) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let root = find(&mut parent, 0);
    (0..ids.len()).all(|i| find(&mut parent, i) == root)
}

/// Order of the fundamental group if it is finite.
///
/// Non-minimal edges are contracted first: an amalgam `A ∗_C B` with `C = A`
/// is isomorphic to `B`. After contraction the group is finite exactly when a
/// single finite vertex remains with no edges.
pub fn is_total_group_finite(g: &GraphOfGroups) -> Option<u64> {
    let mut vertices: BTreeMap<String, Option<u64>> = g
        .vertices
        .iter()
        .map(|(id, d)| (id.clone(), d.finite_order()))
        .collect();
    let mut edges: Vec<(String, String, u64)> = g
        .edges
        .iter()
        .map(|e| (e.endpoints.0.clone(), e.endpoints.1.clone(), e.edge_order))
        .collect();
    loop {
        let pos = edges.iter().position(|(u, v, q)| {
            u != v && (vertices.get(u) == Some(&Some(*q)) || vertices.get(v) == Some(&Some(*q)))
        });
        let Some(pos) = pos else { break };
        let (u, v, q) = edges.remove(pos);
        // keep the endpoint that absorbs the other one
        let (gone, kept) = if vertices.get(&u) == Some(&Some(q)) { (u, v) } else { (v, u) };
        vertices.remove(&gone);
        for (a, b, _) in edges.iter_mut() {
            if *a == gone {
                *a = kept.clone();
            }
            if *b == gone {
                *b = kept.clone();
            }
        }
    }
    match (vertices.len(), edges.is_empty()) {
        (1, true) => *vertices.values().next().unwrap(),
        _ => None,
    }
}
