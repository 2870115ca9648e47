//! Sparse Laurent polynomials over cyclotomic coefficients, with exact
//! composition, affine maps, and bivariate substitution.
//!
//! A `LaurentPoly` is a finite exponent -> coefficient map; exponents may be
//! negative. Ordinary polynomials are the sub-case with no negative
//! exponents (`deg_minus() == 0`). Zero coefficients are never stored, so
//! equality is map equality.
//!
//! Composition `outer o inner` is defined exactly when the outer is a
//! polynomial (any Laurent inner), or the inner is a monomial `c z^d` with
//! `d != 0` (any Laurent outer). Any other combination is a domain error:
//! the caller must restructure the decomposition through a polynomial outer
//! or a monomial inner first.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::cyclo::CycloElem;
use crate::error::{Error, Result};
use crate::rat::{rat_int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, CycloElem>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(CycloElem::one())
    }

    /// The variable `z`.
    pub fn var() -> LaurentPoly {
        LaurentPoly::monomial(1, CycloElem::one())
    }

    pub fn constant(c: CycloElem) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_int(n: i64) -> LaurentPoly {
        LaurentPoly::constant(CycloElem::from_int(n))
    }

    pub fn monomial(exp: i64, c: CycloElem) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// Build from `(exponent, coefficient)` pairs, dropping zeros and summing
    /// duplicates.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, CycloElem)>) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    /// Polynomial from ascending rational coefficients `[c0, c1, ...]`.
    pub fn from_rat_coeffs(coeffs: &[Rat]) -> LaurentPoly {
        LaurentPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, CycloElem::from_rat(c.clone()))),
        )
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> LaurentPoly {
        let rats: Vec<Rat> = coeffs.iter().map(|&c| rat_int(c)).collect();
        LaurentPoly::from_rat_coeffs(&rats)
    }

    fn add_term(&mut self, exp: i64, c: CycloElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            None => {
                self.terms.insert(exp, c);
            }
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// Largest exponent, `deg+`. Zero for the zero polynomial by convention.
    pub fn deg_plus(&self) -> i64 {
        self.terms.keys().next_back().copied().unwrap_or(0).max(0)
    }

    /// Pole order at 0, `deg- = -min exponent` (0 when none is negative).
    pub fn deg_minus(&self) -> i64 {
        (-self.terms.keys().next().copied().unwrap_or(0)).max(0)
    }

    /// Degree of an ordinary polynomial (largest exponent).
    pub fn degree(&self) -> i64 {
        self.deg_plus()
    }

    pub fn is_polynomial(&self) -> bool {
        self.deg_minus() == 0
    }

    pub fn coeff(&self, exp: i64) -> CycloElem {
        self.terms.get(&exp).cloned().unwrap_or_else(CycloElem::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CycloElem)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn support(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    /// Coefficient of the largest exponent; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> CycloElem {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(CycloElem::zero)
    }

    pub fn trailing_coeff(&self) -> CycloElem {
        self.terms
            .iter()
            .next()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(CycloElem::zero)
    }

    pub fn constant_coeff(&self) -> CycloElem {
        self.coeff(0)
    }

    /// `Some((c, d))` when the value is a single term `c z^d`.
    pub fn as_monomial(&self) -> Option<(CycloElem, i64)> {
        if self.terms.len() == 1 {
            let (&e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), e))
        } else {
            None
        }
    }

    /// lcm of the conductors of all coefficients.
    pub fn conductor(&self) -> u32 {
        self.terms
            .values()
            .fold(1u32, |acc, c| (acc as u64).lcm(&(c.conductor() as u64)) as u32)
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in self.terms.iter() {
            for (&e2, c2) in other.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &CycloElem) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Shift all exponents by `k` (multiply by `z^k`).
    pub fn mul_z_pow(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitute `z -> z^-1`.
    pub fn invert_variable(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluate at a scalar; negative exponents require `x != 0`.
    pub fn eval(&self, x: &CycloElem) -> Result<CycloElem> {
        let mut acc = CycloElem::zero();
        for (&e, c) in self.terms.iter() {
            acc = acc.checked_add(&c.checked_mul(&x.pow(e)?)?)?;
        }
        Ok(acc)
    }

    /// First exponent (smallest) at which the two values differ, with both
    /// coefficients. `None` when the values are equal.
    pub fn first_difference(&self, other: &LaurentPoly) -> Option<(i64, CycloElem, CycloElem)> {
        let mut exps: Vec<i64> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        exps.sort_unstable();
        exps.dedup();
        for e in exps {
            let a = self.coeff(e);
            let b = other.coeff(e);
            if a != b {
                return Some((e, a, b));
            }
        }
        None
    }
}

/// Exact composition `outer o inner`; see the module docs for the domain.
pub fn compose(outer: &LaurentPoly, inner: &LaurentPoly) -> Result<LaurentPoly> {
    if outer.is_polynomial() {
        // Horner on the ascending coefficient list.
        let deg = outer.deg_plus();
        let mut acc = LaurentPoly::zero();
        for e in (0..=deg).rev() {
            acc = acc.mul(inner);
            let c = outer.coeff(e);
            if !c.is_zero() {
                acc = acc.add(&LaurentPoly::constant(c));
            }
        }
        return Ok(acc);
    }
    if let Some((c, d)) = inner.as_monomial() {
        if d != 0 {
            let mut out = LaurentPoly::zero();
            for (e, a) in outer.terms() {
                out.add_term(e * d, a.checked_mul(&c.pow(e)?)?);
            }
            return Ok(out);
        }
    }
    Err(Error::domain(
        "composition undefined: a Laurent outer requires a monomial inner c*z^d, d != 0",
    ))
}

/// Exponent-set statistics used by the shape recognizers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportStats {
    pub deg_plus: i64,
    pub deg_minus: i64,
    pub support: Vec<i64>,
    /// gcd of the absolute exponents (0 only for support = {0}).
    pub support_gcd: i64,
    /// gcd of pairwise exponent differences; 0 for a single-point support.
    pub diff_gcd: i64,
}

pub fn support_stats(p: &LaurentPoly) -> Result<SupportStats> {
    if p.is_zero() {
        return Err(Error::domain("support_stats: zero polynomial"));
    }
    let support = p.support();
    let support_gcd = support.iter().fold(0i64, |g, &e| g.gcd(&e));
    let min = support[0];
    let diff_gcd = support.iter().fold(0i64, |g, &e| g.gcd(&(e - min)));
    Ok(SupportStats {
        deg_plus: p.deg_plus(),
        deg_minus: p.deg_minus(),
        support,
        support_gcd,
        diff_gcd,
    })
}

// ---------------------------------------------------------------------------
// Affine maps z -> a z + b.
// ---------------------------------------------------------------------------

/// The degree-one map `z -> a z + b`, `a != 0`. These (together with the
/// monomial maps `c z^{+/-d}` handled by `compose`) are the only degree-one
/// equivalences the Laurent reductions need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    a: CycloElem,
    b: CycloElem,
}

impl AffineMap {
    pub fn new(a: CycloElem, b: CycloElem) -> Result<AffineMap> {
        if a.is_zero() {
            return Err(Error::usage("affine map requires a != 0"));
        }
        Ok(AffineMap { a, b })
    }

    pub fn identity() -> AffineMap {
        AffineMap {
            a: CycloElem::one(),
            b: CycloElem::zero(),
        }
    }

    pub fn shift(b: CycloElem) -> AffineMap {
        AffineMap {
            a: CycloElem::one(),
            b,
        }
    }

    pub fn scaling(a: CycloElem) -> Result<AffineMap> {
        AffineMap::new(a, CycloElem::zero())
    }

    pub fn a(&self) -> &CycloElem {
        &self.a
    }

    pub fn b(&self) -> &CycloElem {
        &self.b
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// `self o other` as maps (apply `other` first).
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            a: &self.a * &other.a,
            b: &(&self.a * &other.b) + &self.b,
        }
    }

    /// The inverse map `z -> (z - b)/a`.
    pub fn inverse(&self) -> AffineMap {
        let ainv = self.a.inv().expect("affine map has a != 0");
        AffineMap {
            b: -&(&ainv * &self.b),
            a: ainv,
        }
    }

    pub fn apply_elem(&self, x: &CycloElem) -> CycloElem {
        &(&self.a * x) + &self.b
    }

    pub fn as_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms([(1, self.a.clone()), (0, self.b.clone())])
    }
}

/// Which side of a composition an affine map is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineSide {
    /// `p o m`: the map feeds the argument.
    Pre,
    /// `m o p`: the map rescales the value.
    Post,
}

/// Exact `p o (az+b)` or `(az+b) o p`.
///
/// Pre-composition of a genuine Laurent value is only defined for `b = 0`
/// (the substitution `z -> az` keeps poles at 0 and infinity); otherwise the
/// input must be a polynomial.
pub fn affine_apply(side: AffineSide, m: &AffineMap, p: &LaurentPoly) -> Result<LaurentPoly> {
    match side {
        AffineSide::Post => Ok(p.scale(&m.a).add(&LaurentPoly::constant(m.b.clone()))),
        AffineSide::Pre => {
            if !p.is_polynomial() && !m.b.is_zero() {
                return Err(Error::domain(
                    "pre-composition with a shift requires a polynomial",
                ));
            }
            if m.b.is_zero() {
                let mut out = LaurentPoly::zero();
                for (e, c) in p.terms() {
                    out.add_term(e, c.checked_mul(&m.a.pow(e)?)?);
                }
                Ok(out)
            } else {
                compose(p, &m.as_poly())
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Bivariate polynomials (for curve checks).
// ---------------------------------------------------------------------------

/// A polynomial in two variables x, y with cyclotomic coefficients; only
/// non-negative exponents, no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), CycloElem>,
}

impl BivarPoly {
    pub fn zero() -> BivarPoly {
        BivarPoly::default()
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = ((u32, u32), CycloElem)>) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for ((i, j), c) in pairs {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn add_term(&mut self, xe: u32, ye: u32, c: CycloElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&(xe, ye)) {
            None => {
                self.terms.insert((xe, ye), c);
            }
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert((xe, ye), sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(i, j), c) in other.terms.iter() {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i1, j1), c1) in self.terms.iter() {
            for (&(i2, j2), c2) in other.terms.iter() {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    /// Substitute `x -> fx`, `y -> fy` and expand exactly.
    pub fn eval(&self, fx: &LaurentPoly, fy: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(i, j), c) in self.terms.iter() {
            let term = fx.pow(i).mul(&fy.pow(j)).scale(c);
            out = out.add(&term);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: terms in descending exponent order, coefficients
    /// parenthesized unless rational. Examples: `z^2 - 2`,
    /// `1/2*z + (zeta(4))*z^-1`. The CLI grammar parses this form back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let (text, neg) = match c.as_rat() {
                Some(r) => {
                    let mag = r.abs();
                    let body = if r.denom() == &num_bigint::BigInt::from(1) {
                        mag.numer().to_string()
                    } else {
                        format!("{}/{}", mag.numer(), mag.denom())
                    };
                    (body, r.is_negative())
                }
                None => (format!("({c})"), false),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let var = match e {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{e}"),
            };
            if var.is_empty() {
                write!(f, "{text}")?;
            } else if text == "1" {
                write!(f, "{var}")?;
            } else {
                write!(f, "{text}*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn z() -> LaurentPoly {
        LaurentPoly::var()
    }

    fn zpow(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(e, CycloElem::one())
    }

    #[test]
    fn ring_ops() {
        // (z + z^-1)(z - z^-1) = z^2 - z^-2
        let a = z().add(&zpow(-1));
        let b = z().sub(&zpow(-1));
        assert_eq!(a.mul(&b), zpow(2).sub(&zpow(-2)));
        // (z^2 + 1) + (-1) = z^2
        assert_eq!(
            zpow(2).add(&LaurentPoly::one()).add(&LaurentPoly::from_int(-1)),
            zpow(2)
        );
        // scale(z^3, 1/2)
        assert_eq!(
            zpow(3).scale(&CycloElem::from_rat(rat(1, 2))),
            LaurentPoly::monomial(3, CycloElem::from_rat(rat(1, 2)))
        );
    }

    #[test]
    fn zero_coefficients_dropped() {
        let p = z().sub(&z());
        assert!(p.is_zero());
        assert_eq!(p.support(), Vec::<i64>::new());
    }

    #[test]
    fn degrees() {
        let p = zpow(3).add(&zpow(-2));
        assert_eq!(p.deg_plus(), 3);
        assert_eq!(p.deg_minus(), 2);
        assert!(!p.is_polynomial());
        assert!(zpow(2).is_polynomial());
    }

    #[test]
    fn compose_poly_outer() {
        // z^2 o (z+1) = z^2 + 2z + 1
        let got = compose(&zpow(2), &z().add(&LaurentPoly::one())).unwrap();
        assert_eq!(got, LaurentPoly::from_int_coeffs(&[1, 2, 1]));
    }

    #[test]
    fn compose_r1_example() {
        // z^2 o z(z^2+1) = z^6 + 2z^4 + z^2 = z(z+1)^2 o z^2
        let inner = z().mul(&zpow(2).add(&LaurentPoly::one()));
        let lhs = compose(&zpow(2), &inner).unwrap();
        let expected = LaurentPoly::from_terms([
            (6, CycloElem::one()),
            (4, CycloElem::from_int(2)),
            (2, CycloElem::one()),
        ]);
        assert_eq!(lhs, expected);
        let outer2 = z().mul(&z().add(&LaurentPoly::one()).pow(2));
        let rhs = compose(&outer2, &zpow(2)).unwrap();
        assert_eq!(rhs, expected);
    }

    #[test]
    fn compose_monomial_inner() {
        // (z + z^-1) o z^-1 = z^-1 + z
        let u = z().add(&zpow(-1));
        assert_eq!(compose(&u, &zpow(-1)).unwrap(), u);
    }

    #[test]
    fn compose_rejects_laurent_outer_nonmonomial_inner() {
        let u = z().add(&zpow(-1));
        assert!(matches!(compose(&u, &u), Err(Error::Domain(_))));
    }

    #[test]
    fn compose_degree_law() {
        let a = LaurentPoly::from_int_coeffs(&[1, 0, 2, 3]); // degree 3
        let l = zpow(2).add(&zpow(-1).scale(&CycloElem::from_int(5)));
        let c = compose(&a, &l).unwrap();
        assert_eq!(c.deg_plus(), 3 * 2);
        assert_eq!(c.deg_minus(), 3 * 1);
    }

    #[test]
    fn affine_apply_cases() {
        // post (2z+1) on T_3 = 8z^3 - 6z + 1
        let t3 = LaurentPoly::from_int_coeffs(&[0, -3, 0, 4]);
        let m = AffineMap::new(CycloElem::from_int(2), CycloElem::one()).unwrap();
        assert_eq!(
            affine_apply(AffineSide::Post, &m, &t3).unwrap(),
            LaurentPoly::from_int_coeffs(&[1, -6, 0, 8])
        );
        // pre (z - 1/3) on z^3+z^2+z = z^3 + (2/3)z - 7/27
        let p = LaurentPoly::from_int_coeffs(&[0, 1, 1, 1]);
        let shift = AffineMap::new(CycloElem::one(), CycloElem::from_rat(rat(-1, 3))).unwrap();
        let got = affine_apply(AffineSide::Pre, &shift, &p).unwrap();
        let expected = LaurentPoly::from_rat_coeffs(&[rat(-7, 27), rat(2, 3), rat(0, 1), rat(1, 1)]);
        assert_eq!(got, expected);
        // pre identity leaves the value unchanged
        let id = AffineMap::identity();
        assert_eq!(affine_apply(AffineSide::Pre, &id, &p).unwrap(), p);
    }

    #[test]
    fn affine_pre_rejects_laurent_with_shift() {
        let u = z().add(&zpow(-1));
        let m = AffineMap::new(CycloElem::one(), CycloElem::one()).unwrap();
        assert!(affine_apply(AffineSide::Pre, &m, &u).is_err());
        // but a pure scaling is fine
        let s = AffineMap::scaling(CycloElem::from_int(2)).unwrap();
        let got = affine_apply(AffineSide::Pre, &s, &u).unwrap();
        assert_eq!(
            got,
            z().scale(&CycloElem::from_int(2))
                .add(&zpow(-1).scale(&CycloElem::from_rat(rat(1, 2))))
        );
    }

    #[test]
    fn affine_roundtrip() {
        let m = AffineMap::new(CycloElem::from_int(3), CycloElem::from_rat(rat(1, 2))).unwrap();
        let p = LaurentPoly::from_int_coeffs(&[2, 0, 1, 5]);
        let there = affine_apply(AffineSide::Pre, &m, &p).unwrap();
        let back = affine_apply(AffineSide::Pre, &m.inverse(), &there).unwrap();
        assert_eq!(back, p);
        assert!(m.compose(&m.inverse()).is_identity());
    }

    #[test]
    fn bivar_eval_cases() {
        // x - y at fx = fy vanishes
        let u = BivarPoly::from_terms([
            ((1, 0), CycloElem::one()),
            ((0, 1), CycloElem::from_int(-1)),
        ]);
        let f = z().add(&zpow(-3));
        assert!(u.eval(&f, &f).is_zero());
    }

    #[test]
    fn support_stats_cases() {
        let p = LaurentPoly::from_terms([
            (6, CycloElem::one()),
            (4, CycloElem::from_int(2)),
            (2, CycloElem::one()),
        ]);
        let s = support_stats(&p).unwrap();
        assert_eq!(s.support, vec![2, 4, 6]);
        assert_eq!(s.diff_gcd, 2);
        assert_eq!(s.support_gcd, 2);

        let m = support_stats(&zpow(3)).unwrap();
        assert_eq!(m.support, vec![3]);
        assert_eq!(m.diff_gcd, 0);
        assert_eq!(m.support_gcd, 3);

        let u = support_stats(&zpow(2).add(&zpow(-2))).unwrap();
        assert_eq!(u.support, vec![-2, 2]);
        assert_eq!(u.support_gcd, 2);
        assert_eq!(u.diff_gcd, 4);

        assert!(support_stats(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn display_canonical() {
        let p = zpow(2)
            .scale(&CycloElem::from_int(2))
            .add(&zpow(-1).scale(&CycloElem::from_rat(rat(-1, 2))))
            .add(&LaurentPoly::one());
        assert_eq!(p.to_string(), "2*z^2 + 1 - 1/2*z^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let q = z().scale(&crate::roots::i_unit());
        assert_eq!(q.to_string(), "(zeta(4))*z");
    }
}
