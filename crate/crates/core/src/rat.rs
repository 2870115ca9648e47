//! Arbitrary-precision rationals, the base field Q.
//!
//! `Rat` is `num_rational::BigRational`, which already maintains the
//! invariants we need: the fraction is stored reduced (gcd of numerator and
//! denominator is 1), the denominator is positive, and zero is `0/1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Exact integer n-th root of a non-negative big integer, if one exists.
pub fn exact_nth_root(value: &BigInt, n: u32) -> Option<BigInt> {
    if value.is_negative() {
        return None;
    }
    let root = value.nth_root(n);
    if num_traits::pow(root.clone(), n as usize) == *value {
        Some(root)
    } else {
        None
    }
}

/// Exact rational n-th root with sign handling: for odd `n` the sign passes
/// through; for even `n` a negative input has no rational root.
pub fn rat_nth_root(r: &Rat, n: u32) -> Option<Rat> {
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let negative = r.is_negative();
    if negative && n % 2 == 0 {
        return None;
    }
    let num = exact_nth_root(&r.numer().abs(), n)?;
    let den = exact_nth_root(&r.denom().abs(), n)?;
    let root = Rat::new(num, den);
    Some(if negative { -root } else { root })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_invariants() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom() > &BigInt::from(0));
        assert_eq!(rat(0, 5), Rat::zero());
    }

    #[test]
    fn nth_roots() {
        assert_eq!(rat_nth_root(&rat(8, 27), 3), Some(rat(2, 3)));
        assert_eq!(rat_nth_root(&rat(-8, 27), 3), Some(rat(-2, 3)));
        assert_eq!(rat_nth_root(&rat(-4, 9), 2), None);
        assert_eq!(rat_nth_root(&rat(4, 9), 2), Some(rat(2, 3)));
        assert_eq!(rat_nth_root(&rat(2, 1), 2), None);
    }
}
