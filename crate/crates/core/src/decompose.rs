//! Free-product decompositions of guaranteed finite-index subgroups of free
//! products, HNN extensions and amalgams over finite groups.
//!
//! Factor labels (`H1`, `K`, `N1`, ...) are symbolic references to subgroups
//! of the parent's factors; nothing here materializes group elements.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    /// A named finite-index subgroup of one of the parent's factors.
    BaseSubgroup,
    FiniteOfOrder(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub label: String,
    pub kind: FactorKind,
    pub multiplicity: u64,
}

impl Factor {
    pub fn base(label: &str, multiplicity: u64) -> Self {
        Factor { label: label.to_string(), kind: FactorKind::BaseSubgroup, multiplicity }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeProductDecomposition {
    pub factors: Vec<Factor>,
    pub free_rank: u64,
    pub index: u64,
    /// The product formula `(s/m − 1)(s/n − 1)` for the free rank, kept for
    /// comparison. Differs from `free_rank` unless `s = mn`.
    pub printed_free_rank: Option<u64>,
}

impl FreeProductDecomposition {
    /// Factor count with multiplicity plus free rank.
    pub fn total_kurosh_count(&self) -> u64 {
        self.factors.iter().map(|f| f.multiplicity).sum::<u64>() + self.free_rank
    }
}

impl fmt::Display for FreeProductDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "index={} factors=", self.index)?;
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}x{}", fac.label, fac.multiplicity)?;
        }
        write!(f, " free_rank={}", self.free_rank)
    }
}

fn require_positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidInput(format!("{name} must be ≥ 1")))
    } else {
        Ok(())
    }
}

/// Subgroup of `G₁ ∗ G₂` of index `s` built from `H₁ ≤ G₁` of index `m` and
/// `H₂ ≤ G₂` of index `n`: `s/m` copies of `H₁`, `s/n` of `H₂`, and a free
/// group of rank `s + 1 − s/m − s/n`.
pub fn free_product_finite_index(m: u64, n: u64, s: u64) -> Result<FreeProductDecomposition> {
    require_positive("m", m)?;
    require_positive("n", n)?;
    require_positive("s", s)?;
    if s % m != 0 || s % n != 0 {
        return Err(Error::Divisibility(format!(
            "index must be common multiple of {m} and {n}, got {s}"
        )));
    }
    let (a, b) = (s / m, s / n);
    if a + b > s + 1 {
        return Err(Error::InvalidInput(format!(
            "no connected covering: {a} + {b} vertex spaces cannot be joined by {s} arcs"
        )));
    }
    Ok(FreeProductDecomposition {
        factors: vec![Factor::base("H1", a), Factor::base("H2", b)],
        // the covering graph has a + b vertices and s edges
        free_rank: s + 1 - a - b,
        index: s,
        printed_free_rank: Some((a - 1) * (b - 1)),
    })
}

/// Subgroup `K ∗ F_{k/c}` of index `k` in an HNN extension over a group of
/// order `c`, where `K` is normal of index `k` meeting the associated
/// subgroups trivially.
pub fn hnn_finite_index(k: u64, c: u64) -> Result<FreeProductDecomposition> {
    require_positive("k", k)?;
    require_positive("c", c)?;
    if k % c != 0 {
        return Err(Error::Divisibility(format!("edge order {c} does not divide index {k}")));
    }
    Ok(FreeProductDecomposition {
        factors: vec![Factor::base("K", 1)],
        free_rank: k / c,
        index: k,
        printed_free_rank: None,
    })
}

/// Subgroup of index `n₁n₂/c` in `G₁ ∗_C G₂` built from normal subgroups
/// `N₁`, `N₂` of indices `n₁`, `n₂` meeting `C` trivially.
pub fn amalgam_finite_index(n1: u64, n2: u64, c: u64) -> Result<FreeProductDecomposition> {
    require_positive("n1", n1)?;
    require_positive("n2", n2)?;
    require_positive("c", c)?;
    if n1 % c != 0 || n2 % c != 0 {
        return Err(Error::Divisibility(format!(
            "edge order {c} must divide both {n1} and {n2}"
        )));
    }
    let (a, b) = (n1 / c, n2 / c);
    Ok(FreeProductDecomposition {
        factors: vec![Factor::base("N1", b), Factor::base("N2", a)],
        free_rank: (a - 1) * (b - 1),
        index: n1 * n2 / c,
        printed_free_rank: None,
    })
}

/// Kurosh rank `1 + index·(n_factors − 1)` of a finite-index subgroup of a
/// free product of `n_factors` groups.
pub fn kurosh_rank_finite_index(n_factors: u64, index: u64) -> Result<u64> {
    require_positive("n_factors", n_factors)?;
    require_positive("index", index)?;
    Ok(1 + index * (n_factors - 1))
}

/// `χ` of a decomposition by additivity, with `χ(ℤ) = 0`:
/// `Σ mult·χ(factor) − (total_kurosh_count − 1)`.
pub fn chi_of_decomposition(
    d: &FreeProductDecomposition,
    factor_chi: &BTreeMap<String, Rational>,
) -> Result<Rational> {
    let mut acc = Rational::ZERO;
    for f in &d.factors {
        let chi = factor_chi
            .get(&f.label)
            .copied()
            .ok_or_else(|| Error::MissingLabel(f.label.clone()))?;
        acc = acc.try_add(chi.try_mul(Rational::from(f.multiplicity))?)?;
    }
    acc.try_sub(Rational::from(d.total_kurosh_count() - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn chis(pairs: &[(&str, Rational)]) -> BTreeMap<String, Rational> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn free_product_examples() {
        let d = free_product_finite_index(2, 3, 6).unwrap();
        assert_eq!(d.to_string(), "index=6 factors=H1x3,H2x2 free_rank=2");
        assert_eq!(d.printed_free_rank, Some(2));

        let d = free_product_finite_index(1, 1, 1).unwrap();
        assert_eq!(d.to_string(), "index=1 factors=H1x1,H2x1 free_rank=0");

        let d = free_product_finite_index(2, 2, 4).unwrap();
        assert_eq!(d.to_string(), "index=4 factors=H1x2,H2x2 free_rank=1");

        // the printed rank disagrees away from s = mn
        let d = free_product_finite_index(2, 3, 12).unwrap();
        assert_eq!((d.free_rank, d.printed_free_rank), (3, Some(15)));

        assert!(matches!(free_product_finite_index(2, 3, 4), Err(Error::Divisibility(_))));
        // H1 = G1 forces s = n
        assert!(matches!(free_product_finite_index(1, 2, 4), Err(Error::InvalidInput(_))));
        assert_eq!(free_product_finite_index(1, 2, 2).unwrap().free_rank, 0);
    }

    #[test]
    fn hnn_examples() {
        assert_eq!(hnn_finite_index(6, 2).unwrap().to_string(), "index=6 factors=Kx1 free_rank=3");
        assert_eq!(hnn_finite_index(1, 1).unwrap().to_string(), "index=1 factors=Kx1 free_rank=1");
        assert_eq!(hnn_finite_index(4, 4).unwrap().to_string(), "index=4 factors=Kx1 free_rank=1");
        assert!(hnn_finite_index(6, 4).is_err());
    }

    #[test]
    fn amalgam_examples() {
        assert_eq!(
            amalgam_finite_index(2, 2, 2).unwrap().to_string(),
            "index=2 factors=N1x1,N2x1 free_rank=0"
        );
        assert_eq!(
            amalgam_finite_index(1, 1, 1).unwrap().to_string(),
            "index=1 factors=N1x1,N2x1 free_rank=0"
        );
        assert_eq!(
            amalgam_finite_index(6, 4, 2).unwrap().to_string(),
            "index=12 factors=N1x2,N2x3 free_rank=2"
        );
        assert!(amalgam_finite_index(6, 3, 2).is_err());
    }

    #[test]
    fn kurosh_rank() {
        assert_eq!(kurosh_rank_finite_index(2, 5).unwrap(), 6);
        assert_eq!(kurosh_rank_finite_index(1, 9).unwrap(), 1);
        assert_eq!(kurosh_rank_finite_index(3, 2).unwrap(), 5);
    }

    #[test]
    fn chi_examples() {
        let d = FreeProductDecomposition {
            factors: vec![Factor::base("Z", 2)],
            free_rank: 1,
            index: 1,
            printed_free_rank: None,
        };
        assert_eq!(chi_of_decomposition(&d, &chis(&[("Z", q("0"))])).unwrap(), q("-2"));

        let chi_g = q("5/7");
        let d = hnn_finite_index(6, 2).unwrap();
        let got = chi_of_decomposition(&d, &chis(&[("K", Rational::from(6i64) * chi_g)])).unwrap();
        assert_eq!(got, Rational::from(6i64) * chi_g - Rational::from(3i64));

        let d = free_product_finite_index(2, 3, 6).unwrap();
        let got = chi_of_decomposition(&d, &chis(&[("H1", q("1")), ("H2", q("1"))])).unwrap();
        assert_eq!(got, q("-1"));

        assert!(matches!(
            chi_of_decomposition(&d, &chis(&[("H1", q("1"))])),
            Err(Error::MissingLabel(l)) if l == "H2"
        ));
    }
}
