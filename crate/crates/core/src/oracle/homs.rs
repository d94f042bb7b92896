//! Homomorphisms out of a finite group, found by extending generator images.

use itertools::Itertools;

use super::group::FiniteGroupTable;
use super::perm::Perm;
use super::Budget;
use crate::error::{Error, Result};

/// Extends generator images along the Cayley graph of `src`. Returns the full
/// image table, or `None` if the assignment does not define a homomorphism.
///
/// Checking `φ(x·g) = φ(x)·φ(g)` on every Cayley edge is sufficient: by
/// induction on word length it gives `φ(xy) = φ(x)φ(y)` for all `x, y`.
pub(crate) fn extend<E, F>(src: &FiniteGroupTable, gen_images: &[E], identity: E, mul: F) -> Option<Vec<E>>
where
    E: Clone + PartialEq,
    F: Fn(&E, &E) -> E,
{
    let n = src.order();
    let mut img: Vec<Option<E>> = vec![None; n];
    img[0] = Some(identity);
    let mut order = vec![0usize];
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        let ix = img[x].clone().expect("visited");
        for (gi, &g) in src.generators().iter().enumerate() {
            let y = src.mul(x, g);
            let val = mul(&ix, &gen_images[gi]);
            match &img[y] {
                None => {
                    img[y] = Some(val);
                    order.push(y);
                }
                Some(prev) if *prev != val => return None,
                Some(_) => {}
            }
        }
        i += 1;
    }
    img.into_iter().collect()
}

/// Checks the full multiplication table, independent of [`extend`].
pub(crate) fn is_homomorphism<E, F>(src: &FiniteGroupTable, images: &[E], mul: F) -> bool
where
    E: PartialEq,
    F: Fn(&E, &E) -> E,
{
    images.len() == src.order()
        && (0..src.order()).all(|a| {
            (0..src.order()).all(|b| images[src.mul(a, b)] == mul(&images[a], &images[b]))
        })
}

fn checked_assignments(candidates: &[usize], budget: &Budget, what: &str) -> Result<()> {
    let total = candidates
        .iter()
        .try_fold(1u64, |acc, &c| acc.checked_mul(c as u64))
        .unwrap_or(u64::MAX);
    if total > budget.max_work {
        return Err(Error::BudgetExceeded(format!(
            "{what}: {total} generator assignments exceed {}",
            budget.max_work
        )));
    }
    Ok(())
}

/// `|Hom(src, dst)|`, exhaustive over generator images.
pub fn count_homs(src: &FiniteGroupTable, dst: &FiniteGroupTable, budget: &Budget) -> Result<u64> {
    let r = src.generators().len() as u32;
    let naive = (dst.order() as u64).checked_pow(r).unwrap_or(u64::MAX);
    if naive > budget.max_work {
        return Err(Error::BudgetExceeded(format!(
            "|C|^r = {}^{r} assignments exceed {}",
            dst.order(),
            budget.max_work
        )));
    }
    let candidates: Vec<Vec<usize>> = src
        .generators()
        .iter()
        .map(|&g| {
            let k = src.element_order(g);
            (0..dst.order()).filter(|&c| k % dst.element_order(c) == 0).collect()
        })
        .collect();
    if candidates.is_empty() {
        return Ok(1);
    }
    let count = candidates
        .iter()
        .map(|c| c.iter().copied())
        .multi_cartesian_product()
        .filter(|imgs| extend(src, imgs, 0usize, |&a, &b| dst.mul(a, b)).is_some())
        .count();
    Ok(count as u64)
}

/// `|Hom(A ∗ B, C)| = |Hom(A, C)|·|Hom(B, C)|` by the universal property of
/// the free product.
pub fn hom_count_free_product(
    a: &FiniteGroupTable,
    b: &FiniteGroupTable,
    c: &FiniteGroupTable,
    budget: &Budget,
) -> Result<u64> {
    count_homs(a, c, budget)?
        .checked_mul(count_homs(b, c, budget)?)
        .ok_or(Error::Overflow("hom count"))
}

/// All actions of `src` on `degree` points, as full image tables indexed by
/// element, in lexicographic order of the generator images.
pub fn actions(src: &FiniteGroupTable, degree: usize, budget: &Budget) -> Result<Vec<Vec<Perm>>> {
    let gens = src.generators();
    if gens.is_empty() {
        return Ok(vec![vec![Perm::identity(degree)]]);
    }
    let perms: Vec<(Perm, u64)> = Perm::all(degree).map(|p| {
        let o = p.order();
        (p, o)
    }).collect();
    let candidates: Vec<Vec<&Perm>> = gens
        .iter()
        .map(|&g| {
            let k = src.element_order(g);
            perms.iter().filter(|(_, o)| k % o == 0).map(|(p, _)| p).collect()
        })
        .collect();
    checked_assignments(
        &candidates.iter().map(Vec::len).collect::<Vec<_>>(),
        budget,
        "actions",
    )?;
    let id = Perm::identity(degree);
    Ok(candidates
        .iter()
        .map(|c| c.iter().copied())
        .multi_cartesian_product()
        .filter_map(|imgs| {
            let owned: Vec<Perm> = imgs.into_iter().cloned().collect();
            extend(src, &owned, id.clone(), Perm::compose)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::group::build_group;

    fn g(name: &str) -> FiniteGroupTable {
        build_group(name).unwrap()
    }

    /// Every map on all elements, checked against the full table.
    fn brute_force_homs(src: &FiniteGroupTable, dst: &FiniteGroupTable) -> u64 {
        (0..src.order())
            .map(|_| 0..dst.order())
            .multi_cartesian_product()
            .filter(|imgs| is_homomorphism(src, imgs, |&a, &b| dst.mul(a, b)))
            .count() as u64
    }

    #[test]
    fn counts_match_full_table_search() {
        let b = Budget::default();
        let pairs = [
            ("cyclic2", "sym3"),
            ("cyclic3", "sym3"),
            ("klein4", "cyclic2"),
            ("cyclic4", "klein4"),
            ("sym3", "cyclic2"),
            ("cyclic3", "cyclic2"),
        ];
        for (a, c) in pairs {
            let (ta, tc) = (g(a), g(c));
            assert_eq!(count_homs(&ta, &tc, &b).unwrap(), brute_force_homs(&ta, &tc), "{a} -> {c}");
        }
    }

    #[test]
    fn known_counts() {
        let b = Budget::default();
        assert_eq!(count_homs(&g("cyclic2"), &g("sym3"), &b).unwrap(), 4);
        assert_eq!(count_homs(&g("cyclic3"), &g("sym3"), &b).unwrap(), 3);
        assert_eq!(count_homs(&g("cyclic1"), &g("sym3"), &b).unwrap(), 1);
        assert_eq!(count_homs(&g("sym3"), &g("sym3"), &b).unwrap(), 10);
    }

    #[test]
    fn actions_are_homomorphisms() {
        let b = Budget::default();
        for name in ["cyclic3", "klein4", "sym3"] {
            let t = g(name);
            let acts = actions(&t, 4, &b).unwrap();
            assert!(!acts.is_empty());
            for a in &acts {
                assert!(is_homomorphism(&t, a, Perm::compose));
            }
            // Hom(G, Sym(n)) counted two ways
            let sym4 = g("sym4");
            assert_eq!(acts.len() as u64, count_homs(&t, &sym4, &b).unwrap(), "{name}");
        }
    }

    #[test]
    fn free_products() {
        let b = Budget::default();
        let fp = |x, y, z| hom_count_free_product(&g(x), &g(y), &g(z), &b).unwrap();
        assert_eq!(fp("cyclic2", "cyclic3", "sym3"), 12);
        assert_eq!(fp("cyclic2", "cyclic2", "cyclic2"), 4);
        assert_eq!(fp("cyclic2", "cyclic3", "cyclic2"), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let tiny = Budget { max_work: 10, ..Budget::default() };
        assert!(matches!(
            count_homs(&g("klein4"), &g("sym4"), &tiny),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
