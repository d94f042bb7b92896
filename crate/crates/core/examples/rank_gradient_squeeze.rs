//! Closed-form rank gradient against the minimum of (d(H) − 1)/[G:H].
use gogchi::calculus::rank_gradient_graph;
use gogchi::oracle::{build_group, rank_gradient_estimate, Budget};
use gogchi::{GraphOfGroups, GroupDescriptor};

fn main() -> gogchi::Result<()> {
    let budget = Budget::extended();
    for (x, y) in [("cyclic2", "cyclic2"), ("cyclic2", "cyclic3"), ("cyclic2", "cyclic4"), ("cyclic3", "cyclic3")] {
        let (a, b) = (build_group(x)?, build_group(y)?);
        let g = GraphOfGroups::new()
            .with_vertex("a", GroupDescriptor::finite(a.order() as u64))
            .with_vertex("b", GroupDescriptor::finite(b.order() as u64))
            .with_edge("e", "a", "b", 1);
        let closed = rank_gradient_graph(&g)?;
        let upto = a.order() * b.order();
        let est = rank_gradient_estimate(&a, &b, upto, &budget)?;
        println!("{x} * {y}: closed form {closed}, oracle up to index {upto}: {est}");
    }
    Ok(())
}
