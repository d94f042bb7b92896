//! Lower bounds on the hom-volume rate from finite-index subgroups.
use gogchi::oracle::{build_group, vc_rate_witness, volume_estimates, Budget, VolumeSample};
use gogchi::Rational;

fn main() -> gogchi::Result<()> {
    let (c2, c3) = (build_group("cyclic2")?, build_group("cyclic3")?);
    let w = vc_rate_witness(&c2, &c3, &c2, 6, &Budget::default())?;
    for (s, rate) in &w.per_index {
        println!("index {s}: best rate {rate}");
    }
    println!("witness at index {}: rate {} from {} homomorphisms", w.witness_index, w.best_rate, w.hom_count);

    let samples: Vec<VolumeSample> = w
        .per_index
        .iter()
        .map(|&(index, rate)| VolumeSample { sigma: rate * Rational::from(index), index })
        .collect();
    let est = volume_estimates(&samples)?;
    println!("sampled rates: min {} max {}", est.upper, est.lower);
    Ok(())
}
