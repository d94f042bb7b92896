//! Exact signed fractions over checked 128-bit integers.
//!
//! Every invariant computed by this crate is a [`Rational`]. Values stay in
//! lowest terms with a positive denominator, so structural equality is value
//! equality. Overflow is never silent: the `checked_*` methods return `None`
//! and the operator impls panic with a message naming the operation.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num/den` in lowest terms. Fails on a zero denominator.
    pub fn new(num: i128, den: i128) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Self::normalized(num, den).ok_or(Error::Overflow("normalize"))
    }

    fn normalized(num: i128, den: i128) -> Option<Self> {
        debug_assert!(den != 0);
        let g = gcd(num, den);
        let (mut n, mut d) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if d < 0 {
            n = n.checked_neg()?;
            d = d.checked_neg()?;
        }
        if n == 0 {
            d = 1;
        }
        Some(Rational { num: n, den: d })
    }

    pub const fn from_integer(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    /// `1/n`, the reciprocal of a positive group order.
    pub fn unit_fraction(n: u64) -> Self {
        assert!(n > 0, "unit_fraction of zero");
        Rational { num: 1, den: n as i128 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        let g = gcd(self.den, rhs.den);
        let l = self.den / g;
        let r = rhs.den / g;
        let num = self.num.checked_mul(r)?.checked_add(rhs.num.checked_mul(l)?)?;
        let den = self.den.checked_mul(r)?;
        Self::normalized(num, den)
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        // cross-reduce first to keep intermediates small
        let g1 = gcd(self.num, rhs.den).max(1);
        let g2 = gcd(rhs.num, self.den).max(1);
        let num = (self.num / g1).checked_mul(rhs.num / g2)?;
        let den = (self.den / g2).checked_mul(rhs.den / g1)?;
        Self::normalized(num, den)
    }

    pub fn checked_div(self, rhs: Self) -> Option<Self> {
        self.checked_mul(rhs.checked_recip()?)
    }

    pub fn checked_neg(self) -> Option<Self> {
        Some(Rational { num: self.num.checked_neg()?, den: self.den })
    }

    /// `None` for zero or on overflow.
    pub fn checked_recip(self) -> Option<Self> {
        if self.num == 0 {
            return None;
        }
        Self::normalized(self.den, self.num)
    }

    /// Integer power; negative exponents invert. `None` on overflow or `0^-k`.
    pub fn checked_pow(self, exp: i32) -> Option<Self> {
        let base = if exp < 0 { self.checked_recip()? } else { self };
        let mut acc = Rational::ONE;
        for _ in 0..exp.unsigned_abs() {
            acc = acc.checked_mul(base)?;
        }
        Some(acc)
    }

    pub fn try_add(self, rhs: Self) -> Result<Self, Error> {
        self.checked_add(rhs).ok_or(Error::Overflow("add"))
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self, Error> {
        self.checked_sub(rhs).ok_or(Error::Overflow("sub"))
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self, Error> {
        self.checked_mul(rhs).ok_or(Error::Overflow("mul"))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n as i128)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n as i128)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(n as i128)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("Rational overflow in add")
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("Rational overflow in sub")
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("Rational overflow in mul")
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "Rational division by zero");
        self.checked_div(rhs).expect("Rational overflow in div")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Self {
        self.checked_neg().expect("Rational overflow in neg")
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |a, b| a + b)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross-multiplication preserves order
        match (
            self.num.checked_mul(other.den),
            other.num.checked_mul(self.den),
        ) {
            (Some(l), Some(r)) => l.cmp(&r),
            _ => {
                let (lf, rf) = (self.floor(), other.floor());
                if lf != rf {
                    return lf.cmp(&rf);
                }
                let l = *self - Rational::from_integer(lf);
                let r = *other - Rational::from_integer(rf);
                // both fractional parts lie in [0, 1); compare reciprocals
                match (l.is_zero(), r.is_zero()) {
                    (true, true) => Ordering::Equal,
                    (true, false) => Ordering::Less,
                    (false, true) => Ordering::Greater,
                    (false, false) => r.checked_recip().cmp(&l.checked_recip()),
                }
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` (q > 0) or a bare integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i128>().map(Rational::from_integer).map_err(|_| bad()),
            Some((p, q)) => {
                let p: i128 = p.parse().map_err(|_| bad())?;
                let q: i128 = q.parse().map_err(|_| bad())?;
                if q <= 0 {
                    return Err(bad());
                }
                Rational::new(p, q)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn normal_form() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(3, -6), r(-1, 2));
        assert_eq!(r(0, -5).denom(), 1);
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(r(-1, 6).to_string(), "-1/6");
        assert_eq!(r(4, 2).to_string(), "2");
        assert_eq!("-1/6".parse::<Rational>().unwrap(), r(-1, 6));
        assert_eq!("7".parse::<Rational>().unwrap(), r(7, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn floor_of_negative() {
        assert_eq!(r(5, 2).floor(), 2);
        assert_eq!(r(-1, 2).floor(), -1);
        assert_eq!(r(-4, 2).floor(), -2);
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::from_integer(i128::MAX);
        assert!(big.checked_add(Rational::ONE).is_none());
        assert!(big.checked_mul(Rational::from_integer(2)).is_none());
        assert!(matches!(big.try_add(big), Err(Error::Overflow(_))));
    }

    #[test]
    fn ordering_survives_large_values() {
        let a = Rational::new(i128::MAX - 1, 3).unwrap();
        let b = Rational::new(i128::MAX - 2, 3).unwrap();
        assert!(a > b);
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(-1, 3));
    }

    #[test]
    fn pow() {
        assert_eq!(r(2, 3).checked_pow(2), Some(r(4, 9)));
        assert_eq!(r(2, 3).checked_pow(-2), Some(r(9, 4)));
        assert_eq!(Rational::ZERO.checked_pow(-1), None);
    }
}
