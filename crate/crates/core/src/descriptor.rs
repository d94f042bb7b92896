//! Symbolic vertex groups and the catalog of their base invariant values.

use std::fmt;

use crate::rational::Rational;

/// Supremum of the orders of finite subgroups, `‖G‖`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Norm {
    Finite(u64),
    /// Unbounded or not known to be bounded.
    Unbounded,
}

impl Norm {
    pub fn max(self, other: Norm) -> Norm {
        match (self, other) {
            (Norm::Finite(a), Norm::Finite(b)) => Norm::Finite(a.max(b)),
            _ => Norm::Unbounded,
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Norm::Finite(n) => write!(f, "{n}"),
            Norm::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// Base values of every invariant for one group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantRecord {
    /// `None` when the group does not declare a value; consumers must error.
    pub omega: Option<Rational>,
    pub rank_gradient: Rational,
    pub l2_betti: Rational,
    pub betti_volume: Rational,
    /// Hom-volume equals the rank gradient for every non-trivial finite target.
    pub vc_equals_rg: bool,
    pub finite_order: Option<u64>,
    pub max_finite_subgroup: Norm,
    /// Residually finite or virtually torsion free.
    pub hypothesis_ok: bool,
}

impl InvariantRecord {
    /// Catalog record of a finite group of order `n`.
    pub fn finite(n: u64) -> Self {
        let inv = Rational::unit_fraction(n);
        InvariantRecord {
            omega: Some(inv),
            rank_gradient: -inv,
            l2_betti: Rational::ZERO,
            betti_volume: -inv,
            vc_equals_rg: true,
            finite_order: Some(n),
            max_finite_subgroup: Norm::Finite(n),
            hypothesis_ok: true,
        }
    }

    fn infinite_record(omega: Rational, value: Rational, norm: Norm) -> Self {
        InvariantRecord {
            omega: Some(omega),
            rank_gradient: value,
            l2_betti: value,
            betti_volume: value,
            vc_equals_rg: true,
            finite_order: None,
            max_finite_subgroup: norm,
            hypothesis_ok: true,
        }
    }

    /// Violated record invariants, as human-readable strings.
    pub fn inconsistencies(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(n) = self.finite_order {
            if n == 0 {
                out.push("finite order must be positive".to_string());
            } else {
                let inv = Rational::unit_fraction(n);
                if self.rank_gradient != -inv {
                    out.push(format!("finite group of order {n} needs rg = -1/{n}"));
                }
                if !self.l2_betti.is_zero() {
                    out.push(format!("finite group of order {n} needs b1l2 = 0"));
                }
                if self.betti_volume != -inv {
                    out.push(format!("finite group of order {n} needs vb = -1/{n}"));
                }
                if self.omega.is_some_and(|w| w != inv) {
                    out.push(format!("finite group of order {n} needs omega = 1/{n}"));
                }
                if self.max_finite_subgroup != Norm::Finite(n) {
                    out.push(format!("finite group of order {n} needs norm = {n}"));
                }
            }
        }
        if self.betti_volume > self.rank_gradient {
            out.push(format!(
                "betti volume {} exceeds rank gradient {}",
                self.betti_volume, self.rank_gradient
            ));
        }
        out
    }
}

/// Classifier for a vertex group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Finite { order: u64, catalog_name: Option<String> },
    /// Fundamental group of the closed orientable surface of genus `g ≥ 1`.
    SurfaceGenus { g: u64 },
    /// Free group; rank 0 is trivial, rank 1 is ℤ.
    FreeOfRank { r: u64 },
    NilpotentInfinite,
    PolycyclicInfinite,
    Custom { name: String, record: InvariantRecord },
}

impl GroupDescriptor {
    pub fn finite(order: u64) -> Self {
        GroupDescriptor::Finite { order, catalog_name: None }
    }

    /// Problems with the descriptor's parameters, empty when in range.
    pub fn parameter_errors(&self) -> Vec<String> {
        match self {
            GroupDescriptor::Finite { order: 0, .. } => vec!["finite order must be ≥ 1".into()],
            GroupDescriptor::SurfaceGenus { g: 0 } => vec!["surface genus must be ≥ 1".into()],
            GroupDescriptor::Custom { record, .. } => record.inconsistencies(),
            _ => Vec::new(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.finite_order().is_some()
    }

    pub fn finite_order(&self) -> Option<u64> {
        match self {
            GroupDescriptor::Finite { order, .. } => Some(*order),
            GroupDescriptor::FreeOfRank { r: 0 } => Some(1),
            GroupDescriptor::Custom { record, .. } => record.finite_order,
            _ => None,
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Finite { catalog_name: Some(name), .. } => write!(f, "finite:{name}"),
            GroupDescriptor::Finite { order, .. } => write!(f, "finite:{order}"),
            GroupDescriptor::SurfaceGenus { g } => write!(f, "surface:{g}"),
            GroupDescriptor::FreeOfRank { r } => write!(f, "free:{r}"),
            GroupDescriptor::NilpotentInfinite => f.write_str("nilpotent"),
            GroupDescriptor::PolycyclicInfinite => f.write_str("polycyclic"),
            GroupDescriptor::Custom { name, .. } => write!(f, "custom:{name}"),
        }
    }
}

/// Full invariant record of a descriptor.
pub fn base_invariants(d: &GroupDescriptor) -> InvariantRecord {
    match d {
        GroupDescriptor::Finite { order, .. } => InvariantRecord::finite(*order),
        GroupDescriptor::SurfaceGenus { g } => {
            let v = Rational::from_integer(2 * (*g as i128 - 1));
            InvariantRecord::infinite_record(Rational::ZERO, v, Norm::Finite(1))
        }
        // the trivial group is the finite group of order 1
        GroupDescriptor::FreeOfRank { r: 0 } => InvariantRecord::finite(1),
        GroupDescriptor::FreeOfRank { r } => {
            let r = *r as i128;
            InvariantRecord::infinite_record(
                Rational::from_integer(1 - r),
                Rational::from_integer(r - 1),
                Norm::Finite(1),
            )
        }
        GroupDescriptor::NilpotentInfinite | GroupDescriptor::PolycyclicInfinite => {
            InvariantRecord::infinite_record(Rational::ZERO, Rational::ZERO, Norm::Unbounded)
        }
        GroupDescriptor::Custom { record, .. } => record.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn surface_genus_two() {
        let rec = base_invariants(&GroupDescriptor::SurfaceGenus { g: 2 });
        assert_eq!(rec.rank_gradient, q("2"));
        assert_eq!(rec.l2_betti, q("2"));
        assert_eq!(rec.betti_volume, q("2"));
        assert_eq!(rec.omega, Some(q("0")));
        assert!(rec.vc_equals_rg);
        assert_eq!(rec.max_finite_subgroup, Norm::Finite(1));
    }

    #[test]
    fn integers() {
        let rec = base_invariants(&GroupDescriptor::FreeOfRank { r: 1 });
        assert_eq!(rec.rank_gradient, Rational::ZERO);
        assert_eq!(rec.omega, Some(Rational::ZERO));
    }

    #[test]
    fn finite_six() {
        let rec = base_invariants(&GroupDescriptor::finite(6));
        assert_eq!(rec.rank_gradient, q("-1/6"));
        assert_eq!(rec.omega, Some(q("1/6")));
        assert_eq!(rec.betti_volume, q("-1/6"));
        assert_eq!(rec.l2_betti, Rational::ZERO);
        assert_eq!(rec.max_finite_subgroup, Norm::Finite(6));
    }

    #[test]
    fn nilpotent_and_polycyclic() {
        for d in [GroupDescriptor::NilpotentInfinite, GroupDescriptor::PolycyclicInfinite] {
            let rec = base_invariants(&d);
            assert_eq!(rec.rank_gradient, Rational::ZERO);
            assert_eq!(rec.max_finite_subgroup, Norm::Unbounded);
        }
    }

    #[test]
    fn trivial_group_is_finite_of_order_one() {
        let rec = base_invariants(&GroupDescriptor::FreeOfRank { r: 0 });
        assert_eq!(rec, InvariantRecord::finite(1));
    }

    #[test]
    fn catalog_records_are_consistent() {
        let mut ds = vec![
            GroupDescriptor::NilpotentInfinite,
            GroupDescriptor::PolycyclicInfinite,
        ];
        ds.extend((1..=24).map(GroupDescriptor::finite));
        ds.extend((1..=6).map(|g| GroupDescriptor::SurfaceGenus { g }));
        ds.extend((0..=6).map(|r| GroupDescriptor::FreeOfRank { r }));
        for d in &ds {
            let rec = base_invariants(d);
            assert!(rec.inconsistencies().is_empty(), "{d}: {:?}", rec.inconsistencies());
            assert_eq!(rec, base_invariants(d));
        }
    }

    #[test]
    fn custom_is_verbatim_and_checked() {
        let mut rec = InvariantRecord::finite(3);
        rec.omega = None;
        let d = GroupDescriptor::Custom { name: "x".into(), record: rec.clone() };
        assert_eq!(base_invariants(&d), rec);
        assert!(d.parameter_errors().is_empty());

        rec.rank_gradient = Rational::ZERO;
        let d = GroupDescriptor::Custom { name: "x".into(), record: rec };
        assert!(!d.parameter_errors().is_empty());
    }
}
