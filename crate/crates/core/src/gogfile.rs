//! Text format for graphs of groups.
//!
//! ```text
//! # comment
//! custom <name> omega=<p/q|undef> rg=<p/q> b1l2=<p/q> vb=<p/q> vc_eq_rg=<0|1> norm=<int|unbounded> hyp=<0|1>
//! vertex <id> <finite:n|finite:catalog-name|surface:g|free:r|nilpotent|polycyclic|custom:name>
//! edge <id> <u> <v> <order>
//! ```
//!
//! Names are declared before use. Range checks on parameters are left to
//! validation; only syntax, unknown references and duplicates fail here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::descriptor::{GroupDescriptor, InvariantRecord, Norm};
use crate::error::{Error, Result};
use crate::graph::GraphOfGroups;
use crate::oracle::build_group;
use crate::rational::Rational;

const CUSTOM_KEYS: [&str; 7] = ["omega", "rg", "b1l2", "vb", "vc_eq_rg", "norm", "hyp"];

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn check_ident(line: usize, what: &str, s: &str) -> Result<()> {
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || "_-.".contains(c)) {
        Ok(())
    } else {
        Err(err(line, format!("invalid {what} {s:?}")))
    }
}

fn parse_int(line: usize, what: &str, s: &str) -> Result<u64> {
    s.parse().map_err(|_| err(line, format!("{what} must be a nonnegative integer, got {s:?}")))
}

fn parse_rational(line: usize, key: &str, s: &str) -> Result<Rational> {
    s.parse().map_err(|_| err(line, format!("{key} must be p/q with q > 0 or an integer, got {s:?}")))
}

fn parse_flag(line: usize, key: &str, s: &str) -> Result<bool> {
    match s {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(err(line, format!("{key} must be 0 or 1, got {s:?}"))),
    }
}

fn parse_custom(line: usize, fields: &[&str]) -> Result<InvariantRecord> {
    let mut kv: BTreeMap<&str, &str> = BTreeMap::new();
    for f in fields {
        let (k, v) = f.split_once('=').ok_or_else(|| err(line, format!("expected key=value, got {f:?}")))?;
        if !CUSTOM_KEYS.contains(&k) {
            return Err(err(line, format!("unknown key {k:?}")));
        }
        if kv.insert(k, v).is_some() {
            return Err(err(line, format!("duplicate key {k:?}")));
        }
    }
    if let Some(missing) = CUSTOM_KEYS.iter().find(|k| !kv.contains_key(*k)) {
        return Err(err(line, format!("missing key {missing:?}")));
    }
    let omega = match kv["omega"] {
        "undef" => None,
        s => Some(parse_rational(line, "omega", s)?),
    };
    let max_finite_subgroup = match kv["norm"] {
        "unbounded" => Norm::Unbounded,
        s => Norm::Finite(parse_int(line, "norm", s)?),
    };
    Ok(InvariantRecord {
        omega,
        rank_gradient: parse_rational(line, "rg", kv["rg"])?,
        l2_betti: parse_rational(line, "b1l2", kv["b1l2"])?,
        betti_volume: parse_rational(line, "vb", kv["vb"])?,
        vc_equals_rg: parse_flag(line, "vc_eq_rg", kv["vc_eq_rg"])?,
        finite_order: None,
        max_finite_subgroup,
        hypothesis_ok: parse_flag(line, "hyp", kv["hyp"])?,
    })
}

fn parse_descriptor(
    line: usize,
    s: &str,
    customs: &BTreeMap<String, InvariantRecord>,
) -> Result<GroupDescriptor> {
    let (kind, arg) = match s.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (s, None),
    };
    let d = match (kind, arg) {
        ("finite", Some(a)) if a.chars().all(|c| c.is_ascii_digit()) => {
            GroupDescriptor::finite(parse_int(line, "finite order", a)?)
        }
        ("finite", Some(name)) => {
            let t = build_group(name).map_err(|e| err(line, e.to_string()))?;
            GroupDescriptor::Finite { order: t.order() as u64, catalog_name: Some(name.to_string()) }
        }
        ("surface", Some(a)) => GroupDescriptor::SurfaceGenus { g: parse_int(line, "genus", a)? },
        ("free", Some(a)) => GroupDescriptor::FreeOfRank { r: parse_int(line, "rank", a)? },
        ("nilpotent", None) => GroupDescriptor::NilpotentInfinite,
        ("polycyclic", None) => GroupDescriptor::PolycyclicInfinite,
        ("custom", Some(name)) => {
            let record = customs
                .get(name)
                .ok_or_else(|| err(line, format!("custom group {name:?} not declared")))?;
            GroupDescriptor::Custom { name: name.to_string(), record: record.clone() }
        }
        _ => return Err(err(line, format!("unknown descriptor {s:?}"))),
    };
    Ok(d)
}

/// Parses a graph. Validation is a separate step.
pub fn parse(text: &str) -> Result<GraphOfGroups> {
    let mut g = GraphOfGroups::new();
    let mut customs: BTreeMap<String, InvariantRecord> = BTreeMap::new();
    let mut edge_ids: BTreeSet<String> = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields.as_slice() {
            ["custom", name, rest @ ..] => {
                check_ident(line, "custom name", name)?;
                let record = parse_custom(line, rest)?;
                if customs.insert(name.to_string(), record).is_some() {
                    return Err(err(line, format!("duplicate custom group {name:?}")));
                }
            }
            ["vertex", id, desc] => {
                check_ident(line, "vertex id", id)?;
                if g.vertices.contains_key(*id) {
                    return Err(err(line, format!("duplicate vertex {id:?}")));
                }
                let d = parse_descriptor(line, desc, &customs)?;
                g.add_vertex(*id, d);
            }
            ["edge", id, u, v, order] => {
                check_ident(line, "edge id", id)?;
                if !edge_ids.insert(id.to_string()) {
                    return Err(err(line, format!("duplicate edge {id:?}")));
                }
                for end in [u, v] {
                    if !g.vertices.contains_key(*end) {
                        return Err(err(line, format!("vertex {end:?} not declared")));
                    }
                }
                g.add_edge(*id, *u, *v, parse_int(line, "edge order", order)?);
            }
            [kw, ..] if ["custom", "vertex", "edge"].contains(kw) => {
                return Err(err(line, format!("wrong number of fields for {kw}")));
            }
            [kw, ..] => return Err(err(line, format!("unknown keyword {kw:?}"))),
            [] => unreachable!("blank lines are skipped"),
        }
    }
    Ok(g)
}

fn flag(b: bool) -> u8 {
    u8::from(b)
}

/// Canonical text: custom declarations by name, vertices by id, then edges
/// in their stored order.
pub fn write(g: &GraphOfGroups) -> String {
    let mut out = String::new();
    let customs: BTreeMap<&str, &InvariantRecord> = g
        .vertices
        .values()
        .filter_map(|d| match d {
            GroupDescriptor::Custom { name, record } => Some((name.as_str(), record)),
            _ => None,
        })
        .collect();
    for (name, r) in customs {
        let omega = r.omega.map_or_else(|| "undef".to_string(), |w| w.to_string());
        writeln!(
            out,
            "custom {name} omega={omega} rg={} b1l2={} vb={} vc_eq_rg={} norm={} hyp={}",
            r.rank_gradient,
            r.l2_betti,
            r.betti_volume,
            flag(r.vc_equals_rg),
            r.max_finite_subgroup,
            flag(r.hypothesis_ok)
        )
        .unwrap();
    }
    for (id, d) in &g.vertices {
        writeln!(out, "vertex {id} {d}").unwrap();
    }
    for e in &g.edges {
        writeln!(out, "edge {} {} {} {}", e.id, e.endpoints.0, e.endpoints.1, e.edge_order).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_vertex_graph() {
        let g = parse("vertex v1 finite:2\nvertex v2 finite:3\nedge e1 v1 v2 1\n").unwrap();
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges.len(), 1);
        assert!(g.validate().is_valid());
    }

    #[test]
    fn descriptors() {
        let g = parse("# surfaces\nvertex v surface:2\n\nvertex w finite:sym3\nvertex x polycyclic").unwrap();
        assert_eq!(g.vertices["v"], GroupDescriptor::SurfaceGenus { g: 2 });
        assert_eq!(
            g.vertices["w"],
            GroupDescriptor::Finite { order: 6, catalog_name: Some("sym3".into()) }
        );
        assert_eq!(g.vertices["x"], GroupDescriptor::PolycyclicInfinite);
    }

    #[test]
    fn edge_before_vertex() {
        assert!(matches!(parse("edge e1 v1 v1 2\nvertex v1 finite:2"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn errors_carry_lines() {
        let cases = [
            ("vertex a finite:2\nvertex a finite:3", 2),
            ("vertex a finite:2\nedge e a a 1\nedge e a a 1", 3),
            ("vertex a finite:foo", 1),
            ("vertex a custom:x", 1),
            ("\n\nvertex a torus", 3),
            ("frobnicate", 1),
            ("vertex a", 1),
            ("custom x omega=1 rg=0", 1),
            ("custom x omega=1/0 rg=0 b1l2=0 vb=0 vc_eq_rg=1 norm=1 hyp=1", 1),
            ("custom x omega=1 rg=0 b1l2=0 vb=0 vc_eq_rg=2 norm=1 hyp=1", 1),
            ("vertex a finite:2\nedge e a a -1", 2),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn custom_round_trip() {
        let text = "custom lattice omega=undef rg=0 b1l2=0 vb=-1/2 vc_eq_rg=0 norm=unbounded hyp=1\n\
                    vertex a custom:lattice\nvertex b finite:4\nedge e a b 2\n";
        let g = parse(text).unwrap();
        assert_eq!(write(&g), text);
        assert_eq!(parse(&write(&g)).unwrap(), g);
    }
}
