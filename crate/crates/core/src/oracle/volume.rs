//! Finite truncations of the lower and upper σ-volumes.

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VolumeSample {
    pub sigma: Rational,
    pub index: u64,
}

/// `lower` is the sup and `upper` the inf of `σ(H)/[G:H]` over the sample.
/// With a single sample the two coincide; in general `lower ≥ upper` is
/// possible, since these are not limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VolumeEstimate {
    pub lower: Rational,
    pub upper: Rational,
}

pub fn volume_estimates(samples: &[VolumeSample]) -> Result<VolumeEstimate> {
    let mut rates = samples.iter().map(|s| {
        if s.index == 0 {
            return Err(Error::InvalidInput("subgroup index must be ≥ 1".into()));
        }
        s.sigma.checked_div(Rational::from(s.index)).ok_or(Error::Overflow("volume"))
    });
    let first = rates.next().ok_or(Error::EmptySample)??;
    let mut est = VolumeEstimate { lower: first, upper: first };
    for r in rates {
        let r = r?;
        est.lower = est.lower.max(r);
        est.upper = est.upper.min(r);
    }
    Ok(est)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(sigma: i64, index: u64) -> VolumeSample {
        VolumeSample { sigma: Rational::from(sigma), index }
    }

    #[test]
    fn examples() {
        let e = volume_estimates(&[s(1, 1)]).unwrap();
        assert_eq!((e.lower, e.upper), (Rational::ONE, Rational::ONE));
        let e = volume_estimates(&[s(0, 2), s(1, 3)]).unwrap();
        assert_eq!(e.lower, "1/3".parse().unwrap());
        assert_eq!(e.upper, Rational::ZERO);
        assert!(matches!(volume_estimates(&[]), Err(Error::EmptySample)));
        assert!(volume_estimates(&[s(1, 0)]).is_err());
    }
}
