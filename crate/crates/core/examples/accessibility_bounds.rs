//! Numeric bounds on minimal splittings and fixed subgroups.
use gogchi::calculus::{
    accessibility_edge_bound, ends_rg_lower_bound, fixed_subgroup_complexity_bound, rank_gradient_graph,
    torsion_free_edge_bound, SplittingKind,
};
use gogchi::{GraphOfGroups, GroupDescriptor, Rational};

fn main() -> gogchi::Result<()> {
    let g = GraphOfGroups::new()
        .with_vertex("a", GroupDescriptor::finite(4))
        .with_vertex("b", GroupDescriptor::finite(6))
        .with_vertex("c", GroupDescriptor::finite(6))
        .with_edge("e1", "a", "b", 2)
        .with_edge("e2", "b", "c", 3);
    let rg = rank_gradient_graph(&g)?;
    println!("norm {} rg {rg}", g.norm());
    println!("at most {} edges in a minimal splitting", accessibility_edge_bound(g.norm(), rg)?);
    println!("torsion-free subgroup with rg 7/2: at most {} edges", torsion_free_edge_bound(Rational::new(7, 2)?)?);
    for f in 1..=3 {
        println!(
            "order-{f} edge: rg > {} (amalgam), > {} (HNN)",
            ends_rg_lower_bound(SplittingKind::Amalgam, f),
            ends_rg_lower_bound(SplittingKind::Hnn, f)
        );
    }
    println!("fixed subgroups: complexity at most {}", fixed_subgroup_complexity_bound(6, -Rational::ONE)?);
    Ok(())
}
