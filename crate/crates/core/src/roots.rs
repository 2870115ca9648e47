//! Roots of unity and radical extraction inside cyclotomic fields.
//!
//! The constants appearing in the identity families are all of the form
//! (rational) * (root of unity), possibly times `sqrt(2)` or `sqrt(3)`.
//! This module builds such values exactly: `unit_root` places `e^{2 pi i t/k}`
//! at its minimal conductor, `sqrt_rational` realizes square roots of
//! rationals through Gauss sums, and `nth_roots` enumerates the in-field
//! candidates for `y^n = x` when `x` factors as rational * root of unity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclo::CycloElem;
use crate::error::{Error, Result};
use crate::rat::{rat_nth_root, Rat};

/// `e^{2 pi i power / order}` at its minimal conductor.
///
/// For orders `k = 2u` with `u` odd the primitive root is written as
/// `-zeta_u^{(u+1)/2}`, so the element lives at conductor `u` rather than `2u`.
pub fn unit_root(order: u32, power: i64) -> Result<CycloElem> {
    if order == 0 {
        return Err(Error::usage("unit_root: order must be positive"));
    }
    let t = power.rem_euclid(order as i64) as u32;
    let d = t.gcd(&order);
    let (ord, t) = (order / d, t / d);
    match ord {
        1 => Ok(CycloElem::one()),
        2 => Ok(CycloElem::from_int(-1)),
        _ if ord % 4 == 2 => {
            // zeta_{2u} = -zeta_u^{(u+1)/2} for odd u.
            let u = ord / 2;
            let inner = (t as u64 * ((u as u64 + 1) / 2)) % u as u64;
            let base = CycloElem::zeta(u)?.pow(inner as i64)?;
            Ok(if t % 2 == 1 { -base } else { base })
        }
        _ => CycloElem::zeta(ord)?.pow(t as i64),
    }
}

/// Write a root of unity as `e^{2 pi i t / k}` with `k` its exact order and
/// `gcd(t, k) = 1`. Returns `None` when the element is not a root of unity.
pub fn as_unit_power(x: &CycloElem) -> Option<(u32, u32)> {
    let k = x.root_order()?;
    if k == 1 {
        return Some((1, 0));
    }
    (1..k)
        .filter(|t| t.gcd(&k) == 1)
        .find(|&t| unit_root(k, t as i64).map_or(false, |u| u == *x))
        .map(|t| (k, t))
}

/// `i` as an exact element (`zeta_4`).
pub fn i_unit() -> CycloElem {
    CycloElem::zeta(4).expect("conductor 4 is always within limits")
}

fn legendre(a: u32, p: u32) -> i32 {
    // p odd prime, 1 <= a < p: Euler's criterion by fast modular power.
    let mut result: u64 = 1;
    let mut base = a as u64 % p as u64;
    let mut e = (p as u64 - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

fn sqrt_prime(p: u32) -> Result<CycloElem> {
    if p == 2 {
        let z8 = CycloElem::zeta(8)?;
        z8.checked_add(&z8.pow(7)?)
    } else {
        sqrt_odd_prime(p)
    }
}

/// Exact square root of an odd prime `p` via the quadratic Gauss sum
/// `g = sum_a (a|p) zeta_p^a`, which satisfies `g^2 = (-1)^((p-1)/2) p`.
fn sqrt_odd_prime(p: u32) -> Result<CycloElem> {
    let zeta = CycloElem::zeta(p)?;
    let mut g = CycloElem::zero();
    for a in 1..p {
        let term = zeta.pow(a as i64)?;
        g = if legendre(a, p) == 1 {
            g.checked_add(&term)?
        } else {
            g.checked_sub(&term)?
        };
    }
    if p % 4 == 1 {
        // g^2 = p; fix the sign so the value squares correctly either way.
        Ok(g)
    } else {
        // g^2 = -p, so sqrt(p) = -i * g.
        (-i_unit()).checked_mul(&g)
    }
}

/// An exact square root of a rational inside a cyclotomic field.
///
/// Always exists mathematically (`sqrt(2) = zeta_8 + zeta_8^-1`, odd primes
/// via Gauss sums, `sqrt(-1) = i`); fails with a conductor-limit error when
/// the required field does not fit the configured bound, or a usage error
/// when the radicand cannot be factored at desk scale.
pub fn sqrt_rational(r: &Rat) -> Result<CycloElem> {
    if r.is_zero() {
        return Ok(CycloElem::zero());
    }
    let mut result = CycloElem::one();
    if r.is_negative() {
        result = i_unit();
    }
    // sqrt(num/den) = sqrt(num*den) / den.
    let num = r.numer().abs();
    let den = r.denom().abs();
    let mut m: BigInt = &num * &den;
    let mut square_part = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        while (&m % (&p * &p)).is_zero() {
            m /= &p * &p;
            square_part *= &p;
        }
        let mut odd = false;
        while (&m % &p).is_zero() {
            m /= &p;
            odd = true;
        }
        if odd {
            let pp = p.to_u32().ok_or_else(|| Error::ConductorLimit {
                requested: u64::MAX,
                limit: crate::limits::conductor_limit(),
            })?;
            result = result.checked_mul(&sqrt_prime(pp)?)?;
        }
        p += 1;
        if p > BigInt::from(1_000_000u32) {
            return Err(Error::usage("sqrt_rational: radicand too large to factor"));
        }
    }
    if !m.is_one() {
        // Remaining cofactor is prime (no factor below its square root).
        let pp = m.to_u32().ok_or_else(|| Error::ConductorLimit {
            requested: u64::MAX,
            limit: crate::limits::conductor_limit(),
        })?;
        result = result.checked_mul(&sqrt_prime(pp)?)?;
    }
    let scale = Rat::new(square_part, den);
    result.checked_mul(&CycloElem::from_rat(scale))
}

/// Decompose `x = q * u` with `q` rational and `u` a root of unity of the
/// ambient field, if such a factorization exists.
pub fn rational_times_unit(x: &CycloElem) -> Option<(Rat, u32, u32)> {
    if x.is_zero() {
        return None;
    }
    if let Some(q) = x.as_rat() {
        if q.is_negative() {
            return Some((-q, 2, 1));
        }
        return Some((q, 1, 0));
    }
    let m = x.conductor();
    let zeta = CycloElem::zeta(m).ok()?;
    let mut power = CycloElem::one();
    for j in 0..m {
        if j > 0 {
            power = power.checked_mul(&zeta).ok()?;
        }
        let u = power.clone();
        for sign in [false, true] {
            let u = if sign { -u.clone() } else { u.clone() };
            let q = x.checked_mul(&u.inv().ok()?).ok()?;
            if let Some(q) = q.as_rat() {
                let (k, t) = as_unit_power(&u)?;
                if q.is_negative() {
                    // fold the sign into the unit
                    let (k2, t2) = as_unit_power(&(-u))?;
                    return Some((-q, k2, t2));
                }
                return Some((q, k, t));
            }
        }
    }
    None
}

fn push_unique(out: &mut Vec<CycloElem>, y: CycloElem) {
    if !out.iter().any(|e| e == &y) {
        out.push(y);
    }
}

/// All candidates `y` in the working field with `y^n = x`, for `x` of the
/// form rational * root of unity. Elements outside that form (or roots that
/// would need a conductor beyond the limit) yield an empty list; every
/// returned candidate is certified by recomputing `y^n`.
pub fn nth_roots(x: &CycloElem, n: u32) -> Result<Vec<CycloElem>> {
    if n == 0 {
        return Err(Error::usage("nth_roots: n must be positive"));
    }
    if x.is_zero() {
        return Ok(vec![CycloElem::zero()]);
    }
    if n == 1 {
        return Ok(vec![x.clone()]);
    }
    let mut out = Vec::new();
    let Some((q, k, t)) = rational_times_unit(x) else {
        return Ok(out);
    };
    // Real positive part: |q|^{1/n} = (odd root, must be rational) followed
    // by repeated square roots.
    let two_part = n.trailing_zeros();
    let odd_part = n >> two_part;
    let Some(mut base) = rat_nth_root(&q, odd_part) else {
        return Ok(out);
    };
    let mut radical = CycloElem::one();
    for step in 0..two_part {
        if let Some(r) = rat_nth_root(&base, 2) {
            base = r;
        } else if step + 1 == two_part {
            // The final halving may take one symbolic square root; an earlier
            // irrational step would need a nested radical, which never lies
            // in a cyclotomic field.
            match sqrt_rational(&base) {
                Ok(s) => {
                    radical = s;
                    base = Rat::one();
                }
                Err(_) => return Ok(out),
            }
        } else {
            return Ok(out);
        }
    }
    let rho = CycloElem::from_rat(base).checked_mul(&radical)?;
    // Unit part: y = rho * omega with omega^n = zeta_k^t.
    let kn = k as u64 * n as u64;
    if kn > u32::MAX as u64 {
        return Ok(out);
    }
    for s in 0..n {
        let Ok(omega) = unit_root(kn as u32, t as i64 + (k as i64) * (s as i64)) else {
            continue;
        };
        let Ok(y) = rho.checked_mul(&omega) else {
            continue;
        };
        if let Ok(p) = y.pow(n as i64) {
            if p == *x {
                push_unique(&mut out, y);
            }
        }
    }
    Ok(out)
}

/// `sqrt(2)` as `zeta_8 + zeta_8^-1`.
pub fn sqrt2() -> Result<CycloElem> {
    let z = CycloElem::zeta(8)?;
    z.checked_add(&z.pow(7)?)
}

/// `sqrt(3)` as `zeta_12 + zeta_12^-1`.
pub fn sqrt3() -> Result<CycloElem> {
    let z = CycloElem::zeta(12)?;
    z.checked_add(&z.pow(11)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn unit_root_basics() {
        assert!(unit_root(1, 0).unwrap().is_one());
        assert_eq!(unit_root(2, 1).unwrap(), CycloElem::from_int(-1));
        assert_eq!(unit_root(4, 1).unwrap(), i_unit());
        assert_eq!(unit_root(4, 3).unwrap(), -i_unit());
        // e^{2 pi i 2/8} = i
        assert_eq!(unit_root(8, 2).unwrap(), i_unit());
    }

    #[test]
    fn unit_root_order_two_mod_four_uses_small_conductor() {
        // zeta_6 = -zeta_3^2 lives at conductor 3.
        let z6 = unit_root(6, 1).unwrap();
        assert_eq!(z6.conductor(), 3);
        assert_eq!(z6.root_order(), Some(6));
        assert_eq!(z6.pow(6).unwrap(), CycloElem::one());
        assert_eq!(z6, -CycloElem::zeta(3).unwrap().pow(2).unwrap());
    }

    #[test]
    fn unit_root_matches_zeta_powers() {
        for (k, t) in [(12u32, 5i64), (8, 3), (24, 7), (5, 2)] {
            let u = unit_root(k, t).unwrap();
            let direct = CycloElem::zeta(k).unwrap().pow(t).unwrap();
            assert_eq!(u, direct, "k={k} t={t}");
        }
    }

    #[test]
    fn as_unit_power_roundtrip() {
        for (k, t) in [(1u32, 0u32), (2, 1), (3, 1), (4, 3), (6, 1), (12, 5)] {
            let x = unit_root(k, t as i64).unwrap();
            assert_eq!(as_unit_power(&x), Some((k, t)), "k={k} t={t}");
        }
        assert_eq!(as_unit_power(&CycloElem::from_int(2)), None);
    }

    #[test]
    fn sqrt_rational_small_values() {
        for r in [rat_int(2), rat_int(3), rat_int(5), rat(1, 2), rat(9, 4), rat(-3, 4)] {
            let s = sqrt_rational(&r).unwrap();
            assert_eq!(
                s.checked_mul(&s).unwrap(),
                CycloElem::from_rat(r.clone()),
                "r = {r}"
            );
        }
    }

    #[test]
    fn sqrt_constants() {
        let s2 = sqrt2().unwrap();
        let s3 = sqrt3().unwrap();
        assert_eq!(s2.checked_mul(&s2).unwrap(), CycloElem::from_int(2));
        assert_eq!(s3.checked_mul(&s3).unwrap(), CycloElem::from_int(3));
        // sqrt(6) two ways
        let via_product = s2.checked_mul(&s3).unwrap();
        let six = via_product.checked_mul(&via_product).unwrap();
        assert_eq!(six, CycloElem::from_int(6));
    }

    #[test]
    fn rational_times_unit_decomposition() {
        let x = CycloElem::from_rat(rat(3, 2))
            .checked_mul(&unit_root(3, 1).unwrap())
            .unwrap();
        let (q, k, t) = rational_times_unit(&x).unwrap();
        assert_eq!(q, rat(3, 2));
        assert_eq!((k, t), (3, 1));
        // not of the form: 1 + zeta_3 has norm issues
        let y = CycloElem::one()
            .checked_add(&CycloElem::zeta(4).unwrap())
            .unwrap();
        assert!(rational_times_unit(&y).is_none());
    }

    #[test]
    fn nth_roots_of_unity_values() {
        let roots = nth_roots(&CycloElem::one(), 3).unwrap();
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert_eq!(r.pow(3).unwrap(), CycloElem::one());
        }
        let roots = nth_roots(&CycloElem::from_int(-1), 2).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&i_unit()));
    }

    #[test]
    fn nth_roots_rational_cases() {
        // square root of 1/2 exists in Q(zeta_8): (zeta_8 + zeta_8^-1)/2
        let roots = nth_roots(&CycloElem::from_rat(rat(1, 2)), 2).unwrap();
        assert!(!roots.is_empty());
        for r in &roots {
            assert_eq!(r.pow(2).unwrap(), CycloElem::from_rat(rat(1, 2)));
        }
        // cube roots of 8: 2 times the cube roots of unity
        let roots = nth_roots(&CycloElem::from_int(8), 3).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&CycloElem::from_int(2)));
        // cube root of 2 is not cyclotomic
        assert!(nth_roots(&CycloElem::from_int(2), 3).unwrap().is_empty());
    }

    #[test]
    fn nth_roots_mixed() {
        // y^2 = 2 * zeta_3 has solutions sqrt(2) * zeta_12^... in the field
        let x = CycloElem::from_int(2)
            .checked_mul(&CycloElem::zeta(3).unwrap())
            .unwrap();
        let roots = nth_roots(&x, 2).unwrap();
        assert!(!roots.is_empty());
        for r in &roots {
            assert_eq!(r.pow(2).unwrap(), x);
        }
    }
}
