//! Concrete finite groups as multiplication tables.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;

use super::perm::Perm;
use crate::error::{Error, Result};

/// A finite group given by its Cayley table. Element 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    element_orders: Vec<u64>,
    generators: Vec<usize>,
    name: Option<String>,
}

impl FiniteGroupTable {
    /// Validates associativity, identity at index 0, and inverses.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > u16::MAX as usize {
            return Err(Error::InvalidTable("table too large".into()));
        }
        if rows.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidTable("table is not square over 0..n".into()));
        }
        let mul: Vec<u16> = rows.iter().flatten().map(|&x| x as u16).collect();
        let at = |a: usize, b: usize| mul[a * n + b] as usize;
        for a in 0..n {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::InvalidTable("element 0 is not a two-sided identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidTable(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            let left: Vec<usize> = (0..n).filter(|&b| at(a, b) == 0).collect();
            match left.as_slice() {
                [b] if at(*b, a) == 0 => inv[a] = *b as u16,
                _ => return Err(Error::InvalidTable(format!("element {a} lacks a unique inverse"))),
            }
        }
        let mut t = FiniteGroupTable {
            order: n,
            mul,
            inv,
            element_orders: Vec::new(),
            generators: Vec::new(),
            name: None,
        };
        t.element_orders = (0..n).map(|a| t.element_order_slow(a)).collect();
        t.generators = t.find_min_generating_set();
        Ok(t)
    }

    /// The group generated by the given permutations, elements listed in
    /// breadth-first order from the identity.
    pub fn from_permutations(gens: &[Perm]) -> Result<Self> {
        let degree = gens.first().map_or(0, Perm::degree);
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidTable("generators of different degrees".into()));
        }
        let id = Perm::identity(degree);
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = elems[x].compose(g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(y);
                }
            }
        }
        let rows = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        Self::from_table(rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub(crate) fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.element_orders[a]
    }

    /// A generating set of minimum size (the lexicographically first one).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        self.mul(self.mul(self.inv(a), self.inv(b)), ab)
    }

    fn element_order_slow(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut elems = vec![0];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    fn find_min_generating_set(&self) -> Vec<usize> {
        (0..=self.order)
            .find_map(|k| {
                (1..self.order)
                    .combinations(k)
                    .find(|c| self.closure(c).len() == self.order)
            })
            .unwrap_or_default()
    }

    /// Reindexes a subgroup as its own table. The identity must be included
    /// and the set must be closed under multiplication.
    pub fn subgroup(&self, elements: &[usize]) -> Result<FiniteGroupTable> {
        let mut elems: Vec<usize> = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(Error::InvalidTable("subgroup must contain the identity".into()));
        }
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut rows = Vec::with_capacity(elems.len());
        for &a in &elems {
            let mut row = Vec::with_capacity(elems.len());
            for &b in &elems {
                let p = pos
                    .get(&self.mul(a, b))
                    .ok_or_else(|| Error::InvalidTable("subset is not closed".into()))?;
                row.push(*p);
            }
            rows.push(row);
        }
        FiniteGroupTable::from_table(rows)
    }

    /// The derived subgroup `[C, C]`.
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let comms: Vec<usize> = (0..self.order)
            .cartesian_product(0..self.order)
            .map(|(a, b)| self.commutator(a, b))
            .unique()
            .collect();
        self.closure(&comms)
    }
}

impl fmt::Debug for FiniteGroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

/// Number of conjugacy classes, by exhaustive partition.
pub fn conjugacy_class_count(t: &FiniteGroupTable) -> usize {
    let n = t.order();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        classes += 1;
        for g in 0..n {
            seen[t.mul(t.mul(g, x), t.inv(g))] = true;
        }
    }
    classes
}

/// Minimum size of a generating set. Exhaustive over subset sizes; intended
/// for groups of order at most 24.
pub fn min_generators(t: &FiniteGroupTable) -> usize {
    t.generators().len()
}

fn cycle(n: usize, points: &[u8]) -> Perm {
    let mut img: Vec<u8> = (0..n as u8).collect();
    for w in 0..points.len() {
        img[points[w] as usize] = points[(w + 1) % points.len()];
    }
    Perm::from_images(img)
}

fn product(perms: &[Perm]) -> Perm {
    perms.iter().fold(Perm::identity(perms[0].degree()), |acc, p| acc.compose(p))
}

fn quaternion_generators() -> Vec<Perm> {
    // units 1, i, j, k as 0..4; point u + 4*negated
    const UNIT_MUL: [[(bool, u8); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let left_mult = |u: u8| {
        let img = (0..8u8)
            .map(|p| {
                let (neg, v) = (p >= 4, p % 4);
                let (s, w) = UNIT_MUL[u as usize][v as usize];
                w + if neg ^ s { 4 } else { 0 }
            })
            .collect();
        Perm::from_images(img)
    };
    vec![left_mult(1), left_mult(2)]
}

fn dihedral_generators(n: usize) -> Vec<Perm> {
    if n == 2 {
        return klein_generators();
    }
    let rotation = cycle(n, &(0..n as u8).collect::<Vec<_>>());
    let reflection = Perm::from_images((0..n).map(|i| ((n - i) % n) as u8).collect());
    vec![rotation, reflection]
}

fn klein_generators() -> Vec<Perm> {
    vec![
        product(&[cycle(4, &[0, 1]), cycle(4, &[2, 3])]),
        product(&[cycle(4, &[0, 2]), cycle(4, &[1, 3])]),
    ]
}

/// Names accepted by [`build_group`], in a fixed order.
pub fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=12).map(|n| format!("cyclic{n}")).collect();
    names.push("klein4".into());
    names.extend((2..=6).map(|n| format!("dihedral{n}")));
    names.extend(["sym3", "sym4", "alt4", "quaternion8"].map(String::from));
    names
}

/// Builds a catalog group: `cyclic<n>` (n ≤ 12), `klein4`, `dihedral<n>`
/// (order 2n ≤ 12), `sym3`, `sym4`, `alt4`, `quaternion8`.
pub fn build_group(name: &str) -> Result<FiniteGroupTable> {
    let unknown = || Error::UnknownGroup(name.to_string());
    let param = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    let gens = if let Some(n) = param("cyclic") {
        if !(1..=12).contains(&n) {
            return Err(unknown());
        }
        if n == 1 {
            vec![Perm::identity(1)]
        } else {
            vec![cycle(n, &(0..n as u8).collect::<Vec<_>>())]
        }
    } else if let Some(n) = param("dihedral") {
        if !(2..=6).contains(&n) {
            return Err(unknown());
        }
        dihedral_generators(n)
    } else {
        match name {
            "klein4" => klein_generators(),
            "sym3" => vec![cycle(3, &[0, 1]), cycle(3, &[0, 1, 2])],
            "sym4" => vec![cycle(4, &[0, 1]), cycle(4, &[0, 1, 2, 3])],
            "alt4" => vec![cycle(4, &[0, 1, 2]), product(&[cycle(4, &[0, 1]), cycle(4, &[2, 3])])],
            "quaternion8" => quaternion_generators(),
            _ => return Err(unknown()),
        }
    };
    Ok(FiniteGroupTable::from_permutations(&gens)?.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let expect = [
            ("cyclic1", 1),
            ("cyclic4", 4),
            ("cyclic12", 12),
            ("klein4", 4),
            ("dihedral2", 4),
            ("dihedral3", 6),
            ("dihedral6", 12),
            ("sym3", 6),
            ("sym4", 24),
            ("alt4", 12),
            ("quaternion8", 8),
        ];
        for (name, order) in expect {
            assert_eq!(build_group(name).unwrap().order(), order, "{name}");
        }
        for name in catalog_names() {
            build_group(&name).unwrap();
        }
    }

    #[test]
    fn unknown_names() {
        for bad in ["cyclic13", "cyclic0", "dihedral7", "dihedral1", "foo", "sym5"] {
            assert!(matches!(build_group(bad), Err(Error::UnknownGroup(_))), "{bad}");
        }
    }

    #[test]
    fn abelian_and_classes() {
        assert!(build_group("cyclic4").unwrap().is_abelian());
        assert!(!build_group("quaternion8").unwrap().is_abelian());
        assert_eq!(conjugacy_class_count(&build_group("cyclic6").unwrap()), 6);
        assert_eq!(conjugacy_class_count(&build_group("sym3").unwrap()), 3);
        assert_eq!(conjugacy_class_count(&build_group("sym4").unwrap()), 5);
        assert_eq!(conjugacy_class_count(&build_group("quaternion8").unwrap()), 5);
        assert_eq!(conjugacy_class_count(&build_group("alt4").unwrap()), 4);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = build_group("quaternion8").unwrap();
        let involutions = (0..8).filter(|&a| q.element_order(a) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn generators() {
        assert_eq!(min_generators(&build_group("cyclic6").unwrap()), 1);
        assert_eq!(min_generators(&build_group("klein4").unwrap()), 2);
        assert_eq!(min_generators(&build_group("sym3").unwrap()), 2);
        assert_eq!(min_generators(&build_group("sym4").unwrap()), 2);
        assert_eq!(min_generators(&build_group("cyclic1").unwrap()), 0);
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(build_group("sym3").unwrap().commutator_subgroup().len(), 3);
        assert_eq!(build_group("sym4").unwrap().commutator_subgroup().len(), 12);
        assert_eq!(build_group("quaternion8").unwrap().commutator_subgroup().len(), 2);
        assert_eq!(build_group("cyclic5").unwrap().commutator_subgroup().len(), 1);
    }

    #[test]
    fn table_validation() {
        assert!(FiniteGroupTable::from_table(vec![vec![0, 1], vec![1, 0]]).is_ok());
        // identity not at index 0
        assert!(FiniteGroupTable::from_table(vec![vec![1, 0], vec![0, 1]]).is_err());
        // not a group: x*x = x for x = 1
        assert!(FiniteGroupTable::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn subgroups_reindex() {
        let s3 = build_group("sym3").unwrap();
        let derived = s3.commutator_subgroup();
        let sub = s3.subgroup(&derived).unwrap();
        assert_eq!(sub.order(), 3);
        assert!(sub.is_abelian());
        assert!(s3.subgroup(&[0, 1, 2, 3]).is_err());
    }
}
