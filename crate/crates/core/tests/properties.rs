mod common;

use std::collections::BTreeMap;

use common::{allowed_edge_orders, any_descriptor, assemble, finite_descriptor, graph_seed};
use gogchi::calculus::{
    betti_volume_graph, l2_betti_graph, omega_graph, rank_gradient_graph, vc_graph, InvariantReport,
};
use gogchi::graph::is_total_group_finite;
use gogchi::oracle::{build_group, enumerate_subgroups, Budget};
use gogchi::{base_invariants, gogfile, GraphOfGroups, GroupDescriptor, InvariantRecord, Norm, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn big_reduced(n: BigInt, d: BigInt) -> (BigInt, BigInt) {
    let g = n.gcd(&d);
    let (mut n, mut d) = (n / &g, d / &g);
    if d < BigInt::from(0) {
        n = -n;
        d = -d;
    }
    (n, d)
}

fn as_big(r: Rational) -> (BigInt, BigInt) {
    (BigInt::from(r.numer()), BigInt::from(r.denom()))
}

fn fraction() -> impl Strategy<Value = (i64, i64)> {
    (any::<i64>(), any::<i64>().prop_filter("nonzero", |d| *d != 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_arithmetic_matches_big_integers((a, b) in fraction(), (c, d) in fraction()) {
        let x = Rational::new(a as i128, b as i128).unwrap();
        let y = Rational::new(c as i128, d as i128).unwrap();
        let (a, b, c, d) = (BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d));
        prop_assert_eq!(as_big(x), big_reduced(a.clone(), b.clone()));

        let sum = big_reduced(&a * &d + &c * &b, &b * &d);
        let diff = big_reduced(&a * &d - &c * &b, &b * &d);
        let prod = big_reduced(&a * &c, &b * &d);
        prop_assert_eq!(x.checked_add(y).map(as_big), Some(sum));
        prop_assert_eq!(x.checked_sub(y).map(as_big), Some(diff));
        prop_assert_eq!(x.checked_mul(y).map(as_big), Some(prod));
        if !y.is_zero() {
            prop_assert_eq!(x.checked_div(y).map(as_big), Some(big_reduced(&a * &d, &b * &c)));
        }
        // sign of x − y decides the order
        let cross = (&a * &d - &c * &b) * (&b * &d);
        prop_assert_eq!(x.cmp(&y), cross.cmp(&BigInt::from(0)));
    }

    #[test]
    fn normalization_is_idempotent(n in any::<i64>(), d in any::<i64>().prop_filter("nonzero", |d| *d != 0), k in 1i64..1000) {
        let x = Rational::new(n as i128, d as i128).unwrap();
        prop_assert_eq!(Rational::new(x.numer(), x.denom()).unwrap(), x);
        prop_assert_eq!(Rational::new(n as i128 * k as i128, d as i128 * k as i128).unwrap(), x);
        prop_assert!(x.denom() > 0);
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
    }
}

fn with_edge(g: &GraphOfGroups, u: &str, v: &str, q: u64) -> GraphOfGroups {
    let mut h = g.clone();
    h.add_edge(format!("extra{}", h.edges.len()), u, v, q);
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn adding_an_edge_shifts_every_invariant(seed in graph_seed(any_descriptor(), 5), a in any::<usize>(), b in any::<usize>(), pick in any::<usize>()) {
        let g = assemble(&seed, false);
        prop_assume!(g.validate().is_valid());
        let ids: Vec<&String> = g.vertices.keys().collect();
        let (u, v) = (ids[a % ids.len()].clone(), ids[b % ids.len()].clone());
        let orders = allowed_edge_orders(&g.vertices[&u], &g.vertices[&v], u == v, false);
        let q = orders[pick % orders.len()];
        let h = with_edge(&g, &u, &v, q);
        prop_assume!(h.validate().is_valid());
        let inv = Rational::unit_fraction(q);

        prop_assert_eq!(rank_gradient_graph(&h).unwrap(), rank_gradient_graph(&g).unwrap() + inv);
        prop_assert_eq!(betti_volume_graph(&h).unwrap(), betti_volume_graph(&g).unwrap() + inv);
        prop_assert_eq!(omega_graph(&h).unwrap(), omega_graph(&g).unwrap() - inv);
        prop_assert_eq!(vc_graph(&h).unwrap(), vc_graph(&g).unwrap() + inv);
        if is_total_group_finite(&g).is_none() && is_total_group_finite(&h).is_none() {
            prop_assert_eq!(l2_betti_graph(&h).unwrap(), l2_betti_graph(&g).unwrap() + inv);
        }
    }

    #[test]
    fn finite_vertex_graphs_have_dual_signs(seed in graph_seed(finite_descriptor(), 5)) {
        let g = assemble(&seed, false);
        prop_assert!(g.validate().is_valid());
        let r = InvariantReport::compute(&g).unwrap();
        prop_assert_eq!(r.rank_gradient, -r.omega.defined().unwrap());
        prop_assert_eq!(r.betti_volume, r.rank_gradient);
        prop_assert_eq!(r.vc.defined(), Some(r.rank_gradient));
        match r.finite_order {
            None => prop_assert_eq!(r.l2_betti, r.rank_gradient),
            Some(n) => {
                prop_assert_eq!(r.l2_betti, Rational::ZERO);
                prop_assert_eq!(r.rank_gradient, -Rational::unit_fraction(n));
            }
        }
    }

    #[test]
    fn catalog_graphs_have_vc_equal_rg_and_vb_below_rg(seed in graph_seed(any_descriptor(), 5)) {
        let g = assemble(&seed, false);
        prop_assume!(g.validate().is_valid());
        let r = InvariantReport::compute(&g).unwrap();
        prop_assert!(r.betti_volume <= r.rank_gradient);
        if r.finite_order.is_none() {
            prop_assert_eq!(r.vc.defined(), Some(r.rank_gradient));
        }
    }

    #[test]
    fn relabeling_vertices_changes_nothing(seed in graph_seed(any_descriptor(), 5), shift in 1usize..50) {
        let g = assemble(&seed, false);
        let n = g.vertices.len();
        let rename = |id: &str| {
            let i: usize = id[1..].parse().unwrap();
            format!("w{}", (i + shift) % n)
        };
        let mut h = GraphOfGroups::new();
        for (id, d) in &g.vertices {
            h.add_vertex(rename(id), d.clone());
        }
        for e in &g.edges {
            h.add_edge(e.id.clone(), rename(&e.endpoints.0), rename(&e.endpoints.1), e.edge_order);
        }
        prop_assert_eq!(g.validate().is_valid(), h.validate().is_valid());
        prop_assert_eq!(g.validate().issues.len(), h.validate().issues.len());
        if g.validate().is_valid() {
            prop_assert_eq!(InvariantReport::compute(&g).unwrap(), InvariantReport::compute(&h).unwrap());
        }
    }

    #[test]
    fn validation_is_the_union_of_local_reports(seed in graph_seed(any_descriptor(), 5)) {
        let g = assemble(&seed, false);
        let whole = g.validate().issues.len();
        // each edge judged alone, with the vertices it needs
        let alone = |id: &String| GraphOfGroups::new().with_vertex(id.clone(), g.vertices[id].clone()).validate().issues.len();
        let mut parts: usize = g.vertices.keys().map(alone).sum();
        for e in &g.edges {
            let mut h = GraphOfGroups::new();
            h.add_vertex(e.endpoints.0.clone(), g.vertices[&e.endpoints.0].clone());
            h.add_vertex(e.endpoints.1.clone(), g.vertices[&e.endpoints.1].clone());
            h.edges.push(e.clone());
            let ends: usize = h.vertices.keys().map(alone).sum();
            parts += h.validate().issues.len() - ends;
        }
        // generated graphs are connected, so no graph-level issue appears
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn text_format_round_trips(seed in graph_seed(any_descriptor(), 5), with_custom in any::<bool>()) {
        let mut g = assemble(&seed, false);
        if with_custom {
            let record = InvariantRecord {
                omega: None,
                rank_gradient: Rational::new(3, 4).unwrap(),
                l2_betti: Rational::new(1, 2).unwrap(),
                betti_volume: Rational::new(-1, 4).unwrap(),
                vc_equals_rg: false,
                finite_order: None,
                max_finite_subgroup: Norm::Unbounded,
                hypothesis_ok: true,
            };
            g.add_vertex("x", GroupDescriptor::Custom { name: "lattice".into(), record });
        }
        let text = gogfile::write(&g);
        let back = gogfile::parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(gogfile::write(&back), text);
    }
}

#[test]
fn catalog_records_are_consistent() {
    let mut descriptors = vec![GroupDescriptor::NilpotentInfinite, GroupDescriptor::PolycyclicInfinite];
    descriptors.extend((1..=24).map(GroupDescriptor::finite));
    descriptors.extend((1..=6).map(|g| GroupDescriptor::SurfaceGenus { g }));
    descriptors.extend((0..=6).map(|r| GroupDescriptor::FreeOfRank { r }));
    for d in descriptors {
        let r = base_invariants(&d);
        assert!(r.inconsistencies().is_empty(), "{d}: {:?}", r.inconsistencies());
        assert_eq!(r, base_invariants(&d));
    }
}

#[test]
fn enumeration_is_schedule_independent() {
    let b = Budget::default();
    let cases = [("cyclic2", "cyclic3", 6), ("klein4", "cyclic2", 4), ("sym3", "cyclic3", 4)];
    for (x, y, s) in cases {
        let (tx, ty) = (build_group(x).unwrap(), build_group(y).unwrap());
        let runs: Vec<Vec<String>> = [1, 4, 4]
            .iter()
            .map(|&threads| {
                let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
                pool.install(|| enumerate_subgroups(&tx, &ty, s, &b).unwrap())
                    .iter()
                    .map(|c| format!("{c} {:?}", c.code))
                    .collect()
            })
            .collect();
        assert!(runs.windows(2).all(|w| w[0] == w[1]), "{x} * {y} at index {s}");
    }
}

#[test]
fn one_edge_multiplicativity_against_the_oracle() {
    // χ of each enumerated subgroup equals its index times ω of the parent
    let b = Budget::default();
    for (x, y) in [("cyclic2", "cyclic2"), ("cyclic2", "cyclic3"), ("cyclic3", "klein4")] {
        let (tx, ty) = (build_group(x).unwrap(), build_group(y).unwrap());
        let parent = GraphOfGroups::new()
            .with_vertex("a", GroupDescriptor::finite(tx.order() as u64))
            .with_vertex("b", GroupDescriptor::finite(ty.order() as u64))
            .with_edge("e", "a", "b", 1);
        let omega = omega_graph(&parent).unwrap();
        for s in 1..=5 {
            for c in enumerate_subgroups(&tx, &ty, s, &b).unwrap() {
                let chi: BTreeMap<String, Rational> = c
                    .decomposition
                    .factors
                    .iter()
                    .map(|f| match f.kind {
                        gogchi::decompose::FactorKind::FiniteOfOrder(k) => (f.label.clone(), Rational::unit_fraction(k)),
                        gogchi::decompose::FactorKind::BaseSubgroup => unreachable!(),
                    })
                    .collect();
                let got = gogchi::decompose::chi_of_decomposition(&c.decomposition, &chi).unwrap();
                assert_eq!(got, Rational::from(s as u64) * omega, "{x} * {y}: {c}");
            }
        }
    }
}
