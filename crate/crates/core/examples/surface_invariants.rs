//! Invariants of closed surface groups and free groups.
use gogchi::calculus::{single_vertex, InvariantReport};
use gogchi::GroupDescriptor;

fn main() -> gogchi::Result<()> {
    for g in 1..=4 {
        let r = InvariantReport::compute(&single_vertex(GroupDescriptor::SurfaceGenus { g }))?;
        println!("surface genus {g}: omega = {} rg = {} b1l2 = {}", r.omega, r.rank_gradient, r.l2_betti);
    }
    for rank in 0..=3 {
        let r = InvariantReport::compute(&single_vertex(GroupDescriptor::FreeOfRank { r: rank }))?;
        println!("free rank {rank}: omega = {} rg = {}", r.omega, r.rank_gradient);
    }
    Ok(())
}
