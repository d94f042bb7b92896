//! Free-product decompositions of finite-index subgroups.
use std::collections::BTreeMap;

use gogchi::decompose::{amalgam_finite_index, chi_of_decomposition, free_product_finite_index, hnn_finite_index};
use gogchi::Rational;

fn main() -> gogchi::Result<()> {
    // Z/2 * Z/3: H1 = H2 = 1, s = 6
    let d = free_product_finite_index(2, 3, 6)?;
    let chi: BTreeMap<String, Rational> = [("H1".to_string(), Rational::ONE), ("H2".to_string(), Rational::ONE)].into();
    println!("{d}  chi = {}", chi_of_decomposition(&d, &chi)?);
    if let Some(p) = d.printed_free_rank {
        println!("  product formula gives {p}");
    }
    println!("{}", hnn_finite_index(6, 2)?);
    println!("{}", amalgam_finite_index(4, 6, 2)?);
    for (m, n, s) in [(2, 3, 5), (1, 2, 4)] {
        match free_product_finite_index(m, n, s) {
            Err(e) => println!("({m}, {n}, {s}): {e}"),
            Ok(d) => println!("unexpected: {d}"),
        }
    }
    Ok(())
}
