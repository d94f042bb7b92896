//! Subgroups of small index in Z/2 * Z/3 with their Kurosh decompositions.
use gogchi::oracle::{build_group, enumerate_subgroups, Budget};

fn main() -> gogchi::Result<()> {
    let (a, b) = (build_group("cyclic2")?, build_group("cyclic3")?);
    let budget = Budget::default();
    for s in 1..=6 {
        let certs = enumerate_subgroups(&a, &b, s, &budget)?;
        println!("index {s}: {} subgroups", certs.len());
        for c in certs {
            println!("  {c}  finite factors {:?}  b1 {}", c.finite_factor_orders(), c.b1);
        }
    }
    Ok(())
}
