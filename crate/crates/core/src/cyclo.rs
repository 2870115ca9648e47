//! Exact arithmetic in cyclotomic fields `Q(zeta_M)`.
//!
//! Elements are stored on the power basis `1, zeta, ..., zeta^(phi(M)-1)` of
//! `Q(zeta_M)` with arbitrary-precision rational coordinates, canonically
//! reduced modulo the M-th cyclotomic polynomial `Phi_M`. `Phi_M` itself is
//! computed by exact division, `Phi_M = (x^M - 1) / prod_{d|M, d<M} Phi_d`.
//!
//! Operations on elements with different conductors join them into
//! `Q(zeta_lcm)` first; the join is bounded by the configured conductor
//! limit (default 256). Arithmetic operators panic if a join would exceed
//! the limit — front-ends validate conductors up front (see
//! [`join_conductors`]), so the panic is an internal backstop, not a normal
//! error path.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::limits::conductor_limit;
use crate::rat::{rat_int, Rat};

// ---------------------------------------------------------------------------
// Dense polynomial helpers over Q (private to this module).
// ---------------------------------------------------------------------------

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn dense_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    trim(out)
}

/// Division with remainder by a nonzero divisor; returns `(quotient, remainder)`.
fn dense_divrem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let den = den.to_vec();
    assert!(!den.is_empty(), "division by the zero polynomial");
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    if rem.len() <= dd {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap() / &lead;
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            if !d.is_zero() {
                let v = &c * d;
                rem[k + i] -= v;
            }
        }
        rem = trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (trim(quot), rem)
}

/// Extended Euclid over Q[x]: returns `(g, u)` with `u*a = g (mod b)` and `g`
/// the gcd (not normalized).
fn dense_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut u0 = vec![Rat::one()];
    let mut u1: Vec<Rat> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = dense_divrem(&r0, &r1);
        let qu1 = dense_mul(&q, &u1);
        let mut nu = u0.clone();
        if nu.len() < qu1.len() {
            nu.resize(qu1.len(), Rat::zero());
        }
        for (i, c) in qu1.iter().enumerate() {
            nu[i] -= c;
        }
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = trim(nu);
    }
    (r0, u0)
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and field descriptions.
// ---------------------------------------------------------------------------

/// A cyclotomic field `Q(zeta_M)`, described by its conductor and the minimal
/// polynomial `Phi_M` of `zeta_M` (monic, integer coefficients, degree
/// `phi(M)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloField {
    conductor: u32,
    minimal_poly: Vec<Rat>,
}

static FIELDS: LazyLock<Mutex<HashMap<u32, Arc<CycloField>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn x_pow_minus_one(m: u32) -> Vec<Rat> {
    let mut p = vec![Rat::zero(); m as usize + 1];
    p[0] = -Rat::one();
    p[m as usize] = Rat::one();
    p
}

pub fn divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

fn compute_field(m: u32) -> Arc<CycloField> {
    // Divisors ascending, so every proper divisor is already cached when
    // its turn comes.
    for d in divisors(m) {
        let cached = FIELDS.lock().unwrap().contains_key(&d);
        if cached {
            continue;
        }
        let phi = if d == 1 {
            vec![-Rat::one(), Rat::one()]
        } else {
            let mut num = x_pow_minus_one(d);
            for e in divisors(d) {
                if e == d {
                    continue;
                }
                let fe = FIELDS.lock().unwrap().get(&e).unwrap().clone();
                let (q, r) = dense_divrem(&num, &fe.minimal_poly);
                debug_assert!(r.is_empty(), "Phi_{e} must divide x^{d} - 1 exactly");
                num = q;
            }
            num
        };
        FIELDS.lock().unwrap().insert(
            d,
            Arc::new(CycloField {
                conductor: d,
                minimal_poly: phi,
            }),
        );
    }
    FIELDS.lock().unwrap().get(&m).unwrap().clone()
}

thread_local! {
    static LOCAL_FIELDS: std::cell::RefCell<HashMap<u32, Arc<CycloField>>> =
        std::cell::RefCell::new(HashMap::new());
}

impl CycloField {
    /// The field `Q(zeta_M)`. Fields are cached per conductor (with a
    /// thread-local mirror, since every element operation looks one up).
    pub fn new(m: u32) -> Result<Arc<CycloField>> {
        if m == 0 {
            return Err(Error::usage("conductor must be positive"));
        }
        let limit = conductor_limit();
        if m > limit {
            return Err(Error::ConductorLimit {
                requested: m as u64,
                limit,
            });
        }
        if let Some(f) = LOCAL_FIELDS.with(|c| c.borrow().get(&m).cloned()) {
            return Ok(f);
        }
        let cached = FIELDS.lock().unwrap().get(&m).cloned();
        let f = cached.unwrap_or_else(|| compute_field(m));
        LOCAL_FIELDS.with(|c| c.borrow_mut().insert(m, f.clone()));
        Ok(f)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Degree of the field over Q, i.e. `phi(conductor)`.
    pub fn degree(&self) -> usize {
        self.minimal_poly.len() - 1
    }

    /// Coefficients of `Phi_M`, ascending, monic.
    pub fn minimal_poly(&self) -> &[Rat] {
        &self.minimal_poly
    }
}

/// The M-th cyclotomic polynomial as an ascending coefficient list.
pub fn cyclotomic_poly(m: u32) -> Result<Vec<Rat>> {
    Ok(CycloField::new(m)?.minimal_poly().to_vec())
}

/// lcm of two conductors, checked against the configured limit.
pub fn join_conductors(a: u32, b: u32) -> Result<u32> {
    let l = (a as u64).lcm(&(b as u64));
    let limit = conductor_limit();
    if l > limit as u64 {
        return Err(Error::ConductorLimit {
            requested: l,
            limit,
        });
    }
    Ok(l as u32)
}

// ---------------------------------------------------------------------------
// Field elements.
// ---------------------------------------------------------------------------

/// An element of `Q(zeta_M)`: the vector of power-basis coordinates
/// `sum coeffs[j] * zeta_M^j`, canonically reduced modulo `Phi_M`.
///
/// Two elements at different conductors compare equal when their images in
/// the joined field agree coordinate-wise.
#[derive(Debug, Clone)]
pub struct CycloElem {
    conductor: u32,
    coeffs: Vec<Rat>,
}

impl CycloElem {
    /// Build from an arbitrary dense polynomial in `zeta_M` (reduces mod `Phi_M`).
    pub fn from_poly(conductor: u32, poly: Vec<Rat>) -> Result<CycloElem> {
        let field = CycloField::new(conductor)?;
        let deg = field.degree();
        let mut coeffs = if poly.len() > deg {
            let (_, r) = dense_divrem(&poly, field.minimal_poly());
            r
        } else {
            trim(poly)
        };
        coeffs.resize(deg, Rat::zero());
        Ok(CycloElem { conductor, coeffs })
    }

    pub fn zero() -> CycloElem {
        CycloElem {
            conductor: 1,
            coeffs: vec![Rat::zero()],
        }
    }

    pub fn one() -> CycloElem {
        CycloElem::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> CycloElem {
        CycloElem {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> CycloElem {
        CycloElem::from_rat(rat_int(n))
    }

    /// The primitive M-th root of unity `zeta_M`.
    pub fn zeta(m: u32) -> Result<CycloElem> {
        let field = CycloField::new(m)?;
        if field.degree() == 1 {
            // zeta_1 = 1, zeta_2 = -1: x reduces to a constant mod Phi.
            let c = -field.minimal_poly()[0].clone();
            return Ok(CycloElem {
                conductor: m,
                coeffs: vec![c],
            });
        }
        let mut coeffs = vec![Rat::zero(); field.degree()];
        coeffs[1] = Rat::one();
        Ok(CycloElem { conductor: m, coeffs })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rat().map_or(false, |r| r.is_one())
    }

    /// The element as a rational, when it lies in Q.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rat().is_some()
    }

    /// Image under `zeta_M -> zeta_N^{N/M}`; requires `M | N`.
    pub fn embed(&self, n: u32) -> Result<CycloElem> {
        if n == self.conductor {
            return Ok(self.clone());
        }
        if n % self.conductor != 0 {
            return Err(Error::usage(format!(
                "cannot embed conductor {} into {}: not a divisor",
                self.conductor, n
            )));
        }
        let step = (n / self.conductor) as usize;
        let mut poly = vec![Rat::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[j * step] = c.clone();
            }
        }
        CycloElem::from_poly(n, poly)
    }

    fn joined(&self, other: &CycloElem) -> Result<(CycloElem, CycloElem)> {
        if self.conductor == other.conductor {
            return Ok((self.clone(), other.clone()));
        }
        let m = join_conductors(self.conductor, other.conductor)?;
        Ok((self.embed(m)?, other.embed(m)?))
    }

    pub fn checked_add(&self, other: &CycloElem) -> Result<CycloElem> {
        let (mut a, b) = self.joined(other)?;
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        Ok(a)
    }

    pub fn checked_sub(&self, other: &CycloElem) -> Result<CycloElem> {
        let (mut a, b) = self.joined(other)?;
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        Ok(a)
    }

    pub fn checked_mul(&self, other: &CycloElem) -> Result<CycloElem> {
        // Rational scalars multiply coordinate-wise; no reduction needed.
        if self.conductor == 1 {
            let c = &self.coeffs[0];
            if other.is_zero() || c.is_zero() {
                return Ok(CycloElem::zero());
            }
            return Ok(CycloElem {
                conductor: other.conductor,
                coeffs: other.coeffs.iter().map(|x| x * c).collect(),
            });
        }
        if other.conductor == 1 {
            return other.checked_mul(self);
        }
        let (a, b) = self.joined(other)?;
        let prod = dense_mul(&a.coeffs, &b.coeffs);
        CycloElem::from_poly(a.conductor, prod)
    }

    /// Multiplicative inverse, via extended Euclid against `Phi_M`.
    pub fn inv(&self) -> Result<CycloElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rat() {
            return Ok(CycloElem::from_rat(Rat::one() / r));
        }
        let field = CycloField::new(self.conductor)?;
        let a = trim(self.coeffs.clone());
        let (g, u) = dense_ext_gcd(&a, field.minimal_poly());
        debug_assert_eq!(g.len(), 1, "element must be coprime to Phi_M");
        let ginv = Rat::one() / g[0].clone();
        let scaled: Vec<Rat> = u.into_iter().map(|c| c * &ginv).collect();
        CycloElem::from_poly(self.conductor, scaled)
    }

    /// Integer power; negative exponents go through `inv`.
    pub fn pow(&self, e: i64) -> Result<CycloElem> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut base = self.clone();
        let mut e = e as u64;
        let mut acc = CycloElem::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Least `k >= 1` with `self^k = 1`, when `self` is a root of unity.
    ///
    /// The roots of unity of `Q(zeta_M)` are exactly `(+/-) zeta_M^j`, so the
    /// order always divides `lcm(2, M)`; anything whose power at that bound
    /// is not 1 is not a root of unity.
    pub fn root_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bound = (2u32).lcm(&self.conductor);
        if !self.pow(bound as i64).ok()?.is_one() {
            return None;
        }
        divisors(bound)
            .into_iter()
            .find(|&k| self.pow(k as i64).map_or(false, |p| p.is_one()))
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        match self.joined(other) {
            Ok((a, b)) => a.coeffs == b.coeffs,
            Err(e) => panic!("conductor join failed during comparison: {e}"),
        }
    }
}

impl Eq for CycloElem {}

macro_rules! arith_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: &CycloElem) -> CycloElem {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("cyclotomic arithmetic failed: {e}"))
            }
        }
        impl std::ops::$trait for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: CycloElem) -> CycloElem {
                (&self).$method(&rhs)
            }
        }
    };
}

arith_op!(Add, add, checked_add);
arith_op!(Sub, sub, checked_sub);
arith_op!(Mul, mul, checked_mul);

impl std::ops::Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl std::ops::Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycloElem {
    /// Canonical text form: terms in descending basis power, e.g.
    /// `1/2*zeta(8)^3 - 1/2*zeta(8) + 2`. Parseable by the CLI grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let neg = c.is_negative();
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
            let basis = match j {
                0 => String::new(),
                1 => format!("zeta({})", self.conductor),
                _ => format!("zeta({})^{}", self.conductor, j),
            };
            if basis.is_empty() {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{basis}")?;
            } else {
                write!(f, "{}*{}", fmt_rat(&mag), basis)?;
            }
        }
        Ok(())
    }
}
