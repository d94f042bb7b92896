//! Graph generators shared by the property tests and the acceptance runner.
#![allow(dead_code)]

use gogchi::{GraphOfGroups, GroupDescriptor};
use proptest::prelude::*;

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Edge orders an edge between `u` and `v` may carry. With `minimal`, a
/// non-loop edge never equals a finite endpoint group.
pub fn allowed_edge_orders(u: &GroupDescriptor, v: &GroupDescriptor, is_loop: bool, minimal: bool) -> Vec<u64> {
    let torsion_free = |d: &GroupDescriptor| {
        matches!(d, GroupDescriptor::SurfaceGenus { .. } | GroupDescriptor::FreeOfRank { .. })
    };
    if torsion_free(u) || torsion_free(v) {
        return vec![1];
    }
    let bound = match (u.finite_order(), v.finite_order()) {
        (Some(a), Some(b)) => gcd(a, b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => 6,
    };
    divisors(bound)
        .into_iter()
        .filter(|&q| is_loop || !minimal || (u.finite_order() != Some(q) && v.finite_order() != Some(q)))
        .collect()
}

/// Raw choices, turned into a connected graph by [`assemble`].
#[derive(Clone, Debug)]
pub struct GraphSeed {
    pub vertices: Vec<GroupDescriptor>,
    /// Per non-root vertex, a seed for its parent in a spanning tree.
    pub parents: Vec<usize>,
    /// Extra edges as (endpoint seed, endpoint seed, order seed).
    pub extra: Vec<(usize, usize, usize)>,
    pub tree_orders: Vec<usize>,
}

pub fn assemble(seed: &GraphSeed, minimal: bool) -> GraphOfGroups {
    let mut g = GraphOfGroups::new();
    let name = |i: usize| format!("v{i}");
    for (i, d) in seed.vertices.iter().enumerate() {
        g.add_vertex(name(i), d.clone());
    }
    let add = |g: &mut GraphOfGroups, u: usize, v: usize, pick: usize| {
        let orders = allowed_edge_orders(&seed.vertices[u], &seed.vertices[v], u == v, minimal);
        if orders.is_empty() {
            return false;
        }
        let id = format!("e{}", g.edges.len());
        g.add_edge(id, name(u), name(v), orders[pick % orders.len()]);
        true
    };
    for i in 1..seed.vertices.len() {
        let p = seed.parents[i - 1] % i;
        assert!(add(&mut g, p, i, seed.tree_orders[i - 1]), "tree edges always admit order 1");
    }
    let n = seed.vertices.len();
    for &(a, b, q) in &seed.extra {
        add(&mut g, a % n, b % n, q);
    }
    g
}

pub fn finite_descriptor() -> impl Strategy<Value = GroupDescriptor> + Clone {
    (2u64..=12).prop_map(GroupDescriptor::finite)
}

pub fn any_descriptor() -> impl Strategy<Value = GroupDescriptor> + Clone {
    prop_oneof![
        4 => (1u64..=12).prop_map(GroupDescriptor::finite),
        1 => (1u64..=4).prop_map(|g| GroupDescriptor::SurfaceGenus { g }),
        1 => (0u64..=3).prop_map(|r| GroupDescriptor::FreeOfRank { r }),
        1 => Just(GroupDescriptor::NilpotentInfinite),
        1 => Just(GroupDescriptor::PolycyclicInfinite),
    ]
}

/// Connected graphs with at most `max_edges` edges over vertices from `vertex`.
pub fn graph_seed(
    vertex: impl Strategy<Value = GroupDescriptor> + Clone,
    max_edges: usize,
) -> impl Strategy<Value = GraphSeed> {
    (1..=max_edges.max(1)).prop_flat_map(move |n| {
        let n_vertices = n.min(max_edges + 1);
        (
            prop::collection::vec(vertex.clone(), n_vertices),
            prop::collection::vec(any::<usize>(), n_vertices - 1),
            prop::collection::vec((any::<usize>(), any::<usize>(), any::<usize>()), 0..=max_edges + 1 - n_vertices),
            prop::collection::vec(any::<usize>(), n_vertices - 1),
        )
            .prop_map(|(vertices, parents, extra, tree_orders)| GraphSeed { vertices, parents, extra, tree_orders })
    })
}
