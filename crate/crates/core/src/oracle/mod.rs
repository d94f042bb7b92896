//! Brute-force ground truth over concrete finite groups.
//!
//! Everything here is exhaustive and bounded by an explicit [`Budget`];
//! exceeding it is an error, never a silent truncation.

pub mod group;
pub mod homs;
pub mod perm;
pub mod subgroups;
pub mod surface;
pub mod volume;

pub use group::{build_group, catalog_names, conjugacy_class_count, min_generators, FiniteGroupTable};
pub use homs::{count_homs, hom_count_free_product};
pub use perm::Perm;
pub use subgroups::{
    enumerate_free_product_subgroups, enumerate_subgroups, rank_gradient_estimate, vc_rate_witness,
    PermutationAction, SubgroupCertificate, VcRateWitness,
};
pub use surface::{hom_count_surface, irrep_dimensions, mednykh_eval, IrrepDimensions};
pub use volume::{volume_estimates, VolumeEstimate, VolumeSample};

/// Limits on exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest permutation degree (subgroup index) for subgroup enumeration.
    pub max_degree: usize,
    /// Largest number of candidate assignments or tuples visited.
    pub max_work: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_degree: 7, max_work: 100_000_000 }
    }
}

impl Budget {
    /// Degree 9, enough for index `|A||B|` with `|A|, |B| ≤ 3`.
    pub fn extended() -> Self {
        Budget { max_degree: 9, ..Budget::default() }
    }
}
