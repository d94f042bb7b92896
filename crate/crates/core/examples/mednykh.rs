//! Homomorphism counts from surface groups to small finite groups.
use gogchi::oracle::{build_group, catalog_names, hom_count_surface, irrep_dimensions, mednykh_eval, Budget};

fn main() -> gogchi::Result<()> {
    let budget = Budget::default();
    for name in catalog_names() {
        let t = build_group(&name)?;
        let dims = irrep_dimensions(&t)?;
        let formula = mednykh_eval(2, &t)?;
        let check = match hom_count_surface(2, &t, &budget) {
            Ok(n) if n == formula => "match".to_string(),
            Ok(n) => format!("MISMATCH ({n})"),
            Err(e) => format!("skipped: {e}"),
        };
        println!("{name:>12} |G|={:<3} dims={:?} genus 2: {formula} {check}", t.order(), dims.dims);
    }
    Ok(())
}
