//! Homomorphisms from closed orientable surface groups into finite groups,
//! counted twice: through irreducible-representation dimensions and by
//! exhausting tuples against the surface relator.

use super::group::{conjugacy_class_count, FiniteGroupTable};
use super::Budget;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dimensions of the complex irreducible representations, as a multiset
/// sorted in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrrepDimensions {
    pub dims: Vec<u64>,
}

impl IrrepDimensions {
    pub fn sum_of_squares(&self) -> u64 {
        self.dims.iter().map(|d| d * d).sum()
    }

    pub fn linear_count(&self) -> usize {
        self.dims.iter().filter(|&&d| d == 1).count()
    }
}

/// Recovers irrep dimensions from class count, group order and the number of
/// linear characters, by exhaustive search over nonincreasing sequences.
///
/// The constraints are: `k` dimensions in total, `Σd² = |C|`, exactly
/// `|C|/|[C,C]|` of them equal to 1, and each `d ≤ √|C|`. Errors if the
/// constraints admit zero or several solutions.
pub fn irrep_dimensions(t: &FiniteGroupTable) -> Result<IrrepDimensions> {
    let n = t.order() as u64;
    let k = conjugacy_class_count(t);
    let linear = n / t.commutator_subgroup().len() as u64;
    let rest = k
        .checked_sub(linear as usize)
        .ok_or_else(|| Error::Inconsistent("more linear characters than classes".into()))?;
    let target = n
        .checked_sub(linear)
        .ok_or_else(|| Error::Inconsistent("more linear characters than the order".into()))?;
    let max_d = (1..=n).take_while(|d| d * d <= n).last().unwrap_or(1);

    fn search(slots: usize, remaining: u64, cap: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        // each slot takes at least 2^2
        if remaining < 4 * slots as u64 {
            return;
        }
        for d in (2..=cap).rev() {
            if d * d > remaining {
                continue;
            }
            acc.push(d);
            search(slots - 1, remaining - d * d, d, acc, out);
            acc.pop();
        }
    }

    let mut solutions = Vec::new();
    search(rest, target, max_d, &mut Vec::new(), &mut solutions);
    match solutions.len() {
        1 => {
            let mut dims = solutions.pop().unwrap();
            dims.extend(std::iter::repeat(1).take(linear as usize));
            Ok(IrrepDimensions { dims })
        }
        count => Err(Error::AmbiguousCharacterData(count)),
    }
}

/// `|Hom(π₁(S_g), C)| = |C|^{2g−1} Σ_V (dim V)^{2−2g}`, evaluated exactly.
pub fn mednykh_eval(g: u64, t: &FiniteGroupTable) -> Result<u64> {
    mednykh_from_dims(g, t.order() as u64, &irrep_dimensions(t)?)
}

pub fn mednykh_from_dims(g: u64, order: u64, dims: &IrrepDimensions) -> Result<u64> {
    let g = i32::try_from(g).map_err(|_| Error::InvalidInput("genus too large".into()))?;
    let overflow = || Error::Overflow("mednykh");
    let c = Rational::from(order);
    let mut sum = Rational::ZERO;
    for &d in &dims.dims {
        sum = sum.try_add(Rational::from(d).checked_pow(2 - 2 * g).ok_or_else(overflow)?)?;
    }
    let value = c.checked_pow(2 * g - 1).ok_or_else(overflow)?.try_mul(sum)?;
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Inconsistent(format!("Mednykh value {value} is not a natural number")));
    }
    u64::try_from(value.numer()).map_err(|_| overflow())
}

/// Number of `2g`-tuples `(a₁, b₁, …, a_g, b_g)` in `C` with
/// `[a₁,b₁]⋯[a_g,b_g] = 1`.
///
/// Every pair is visited once to tabulate commutator values; tuples are then
/// counted exactly by chaining the pair table `g` times. Refuses inputs with
/// `|C|^{2g}` above the budget.
pub fn hom_count_surface(g: u64, t: &FiniteGroupTable, budget: &Budget) -> Result<u64> {
    let n = t.order();
    let tuples = (n as u64).checked_pow(2 * g as u32).unwrap_or(u64::MAX);
    if tuples > budget.max_work {
        return Err(Error::BudgetExceeded(format!(
            "{tuples} tuples exceed the surface enumeration budget {}",
            budget.max_work
        )));
    }
    let mut pairs = vec![0u64; n];
    for a in 0..n {
        for b in 0..n {
            pairs[t.commutator(a, b)] += 1;
        }
    }
    // ways[x] = number of prefixes whose commutator product is x
    let mut ways = vec![0u64; n];
    ways[0] = 1;
    for _ in 0..g {
        let mut next = vec![0u64; n];
        for (x, &wx) in ways.iter().enumerate() {
            if wx == 0 {
                continue;
            }
            for (c, &pc) in pairs.iter().enumerate() {
                next[t.mul(x, c)] += wx * pc;
            }
        }
        ways = next;
    }
    Ok(ways[0])
}
