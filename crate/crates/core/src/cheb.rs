//! Chebyshev polynomials and the exact trigonometric dictionary.
//!
//! `T_n` is the polynomial with `T_n(cos z) = cos nz`; under the
//! substitution `w = e^{iz}` this becomes the finite identity
//! `T_n o U_1 = U_n` for the Laurent polynomials
//! `U_n = (z^n + z^-n)/2` and `V_n = (z^n - z^-n)/(2i)`.
//!
//! A [`TrigExpr`] is a formal finite sum of terms
//! `amplitude * cos(kz + phase)`, `amplitude * sin(kz + phase)`, and
//! `amplitude * e^{ikz}`, with root-of-unity phases; [`encode_trig`] maps it
//! to its Laurent polynomial in `w`. Identities between such expressions
//! hold exactly when their encodings are equal.

use crate::cyclo::{join_conductors, CycloElem};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rat::rat;
use crate::roots::{as_unit_power, i_unit, unit_root};

/// The Chebyshev polynomial `T_n`, by the recurrence
/// `T_{n+1} = 2z T_n - T_{n-1}`, `T_0 = 1`, `T_1 = z`.
///
/// The recurrence is not trusted axiomatically: the test suite certifies
/// every generated `T_n` against the defining identity `T_n o U_1 = U_n`.
pub fn cheb_t(n: u32) -> LaurentPoly {
    let two_z = LaurentPoly::monomial(1, CycloElem::from_int(2));
    let mut prev = LaurentPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = LaurentPoly::var();
    for _ in 1..n {
        let next = two_z.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `U_n = (z^n + z^-n)/2`, the Laurent encoding of `cos nz`.
pub fn laurent_u(n: u32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::one();
    }
    let half = CycloElem::from_rat(rat(1, 2));
    LaurentPoly::from_terms([(n as i64, half.clone()), (-(n as i64), half)])
}

/// `V_n = (z^n - z^-n)/(2i)`, the Laurent encoding of `sin nz` (conductor 4).
pub fn laurent_v(n: u32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    // 1/(2i) = -i/2
    let c = (-i_unit()).checked_mul(&CycloElem::from_rat(rat(1, 2))).unwrap();
    LaurentPoly::from_terms([(n as i64, c.clone()), (-(n as i64), -c)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigKind {
    Cos,
    Sin,
    /// `e^{ikz}` (phase unused).
    Exp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigTerm {
    pub kind: TrigKind,
    pub freq: i64,
    /// Root of unity `eta = e^{i phi}` for the phase `phi`.
    pub phase: CycloElem,
    pub amplitude: CycloElem,
}

/// A formal finite sum of phased cosines, sines and imaginary exponentials,
/// plus a constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigExpr {
    pub terms: Vec<TrigTerm>,
    pub constant: CycloElem,
}

impl TrigExpr {
    pub fn zero() -> TrigExpr {
        TrigExpr {
            terms: Vec::new(),
            constant: CycloElem::zero(),
        }
    }

    /// `cos(freq * z)`.
    pub fn cos(freq: i64) -> TrigExpr {
        TrigExpr::zero().plus_cos(freq, CycloElem::one(), CycloElem::one())
    }

    /// `sin(freq * z)`.
    pub fn sin(freq: i64) -> TrigExpr {
        TrigExpr::zero().plus_sin(freq, CycloElem::one(), CycloElem::one())
    }

    /// `cos(freq * z + phi)` where `phi = pi * num/den`, exact.
    pub fn cos_phased_pi(freq: i64, num: i64, den: i64) -> Result<TrigExpr> {
        let eta = phase_from_pi_multiple(num, den)?;
        Ok(TrigExpr::zero().plus_cos(freq, eta, CycloElem::one()))
    }

    pub fn sin_phased_pi(freq: i64, num: i64, den: i64) -> Result<TrigExpr> {
        let eta = phase_from_pi_multiple(num, den)?;
        Ok(TrigExpr::zero().plus_sin(freq, eta, CycloElem::one()))
    }

    /// `e^{i freq z}`.
    pub fn exp_i(freq: i64) -> TrigExpr {
        TrigExpr {
            terms: vec![TrigTerm {
                kind: TrigKind::Exp,
                freq,
                phase: CycloElem::one(),
                amplitude: CycloElem::one(),
            }],
            constant: CycloElem::zero(),
        }
    }

    pub fn plus_cos(mut self, freq: i64, phase: CycloElem, amplitude: CycloElem) -> TrigExpr {
        self.terms.push(TrigTerm {
            kind: TrigKind::Cos,
            freq,
            phase,
            amplitude,
        });
        self
    }

    pub fn plus_sin(mut self, freq: i64, phase: CycloElem, amplitude: CycloElem) -> TrigExpr {
        self.terms.push(TrigTerm {
            kind: TrigKind::Sin,
            freq,
            phase,
            amplitude,
        });
        self
    }

    pub fn plus_const(mut self, c: CycloElem) -> TrigExpr {
        self.constant = &self.constant + &c;
        self
    }

    pub fn scaled(mut self, c: &CycloElem) -> TrigExpr {
        for t in &mut self.terms {
            t.amplitude = &t.amplitude * c;
        }
        self.constant = &self.constant * c;
        self
    }
}

/// `e^{i pi num/den}` as an exact root of unity at its minimal conductor.
pub fn phase_from_pi_multiple(num: i64, den: i64) -> Result<CycloElem> {
    if den == 0 {
        return Err(Error::usage("phase denominator must be nonzero"));
    }
    // e^{i pi num/den} = e^{2 pi i num/(2 den)}
    let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
    let order = 2i64
        .checked_mul(den)
        .ok_or_else(|| Error::usage("phase denominator too large"))?;
    unit_root(order as u32, num)
}

fn embed_phase(phase: &CycloElem, conductor: u32) -> Result<CycloElem> {
    // Re-express the phase at its minimal conductor before embedding, so that
    // e.g. i given at conductor 8 still fits into conductor 4.
    let (k, t) = as_unit_power(phase).ok_or_else(|| {
        Error::usage("trig phases must be roots of unity")
    })?;
    let minimal = unit_root(k, t as i64)?;
    if conductor % minimal.conductor() != 0 {
        return Err(Error::usage(format!(
            "conductor {} too small for a phase of order {}: needs a multiple of {}",
            conductor,
            k,
            minimal.conductor()
        )));
    }
    minimal.embed(conductor)
}

/// Encode a trigonometric expression as a Laurent polynomial in
/// `w = e^{iz}`:
/// `cos(kz+phi) -> (eta w^k + eta^-1 w^-k)/2`,
/// `sin(kz+phi) -> (eta w^k - eta^-1 w^-k)/(2i)`,
/// `e^{ikz} -> w^k`, with `eta = e^{i phi}`.
///
/// All phases must embed into `Q(zeta_conductor)`; sine terms additionally
/// need `4 | conductor` for the factor `1/(2i)`.
pub fn encode_trig(expr: &TrigExpr, conductor: u32) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::constant(expr.constant.clone());
    for term in &expr.terms {
        let amp = &term.amplitude;
        let encoded = match term.kind {
            TrigKind::Exp => LaurentPoly::monomial(term.freq, amp.clone()),
            TrigKind::Cos | TrigKind::Sin => {
                let eta = embed_phase(&term.phase, conductor)?;
                let fwd = LaurentPoly::monomial(term.freq, eta.clone());
                let bwd = LaurentPoly::monomial(-term.freq, eta.inv()?);
                match term.kind {
                    TrigKind::Cos => {
                        let half = CycloElem::from_rat(rat(1, 2));
                        fwd.add(&bwd).scale(&half.checked_mul(amp)?)
                    }
                    _ => {
                        if conductor % 4 != 0 {
                            return Err(Error::usage(format!(
                                "conductor {conductor} too small for a sine term: needs a multiple of 4"
                            )));
                        }
                        let c = (-i_unit().embed(conductor)?)
                            .checked_mul(&CycloElem::from_rat(rat(1, 2)))?;
                        fwd.sub(&bwd).scale(&c.checked_mul(amp)?)
                    }
                }
            }
        };
        out = out.add(&encoded);
    }
    // Keep the whole value inside the requested field.
    let joined = join_conductors(out.conductor(), conductor)?;
    debug_assert!(joined as u64 <= conductor as u64 * out.conductor() as u64);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::compose;

    #[test]
    fn cheb_small_values() {
        assert_eq!(cheb_t(0), LaurentPoly::one());
        assert_eq!(cheb_t(1), LaurentPoly::var());
        assert_eq!(cheb_t(2), LaurentPoly::from_int_coeffs(&[-1, 0, 2]));
        assert_eq!(cheb_t(3), LaurentPoly::from_int_coeffs(&[0, -3, 0, 4]));
        assert_eq!(
            cheb_t(6),
            LaurentPoly::from_int_coeffs(&[-1, 0, 18, 0, -48, 0, 32])
        );
    }

    #[test]
    fn defining_identity_oracle() {
        // T_n o U_1 = U_n: the (che) identity in encoded form, for all n <= 24.
        for n in 0..=24 {
            let lhs = compose(&cheb_t(n), &laurent_u(1)).unwrap();
            assert_eq!(lhs, laurent_u(n), "n = {n}");
        }
    }

    #[test]
    fn t6_is_t2_of_t3() {
        let direct = cheb_t(6);
        let composed = compose(&cheb_t(2), &cheb_t(3)).unwrap();
        assert_eq!(direct, composed);
    }

    #[test]
    fn uv_definitions() {
        let u1 = laurent_u(1);
        assert_eq!(u1.coeff(1), CycloElem::from_rat(rat(1, 2)));
        assert_eq!(u1.coeff(-1), CycloElem::from_rat(rat(1, 2)));
        let v1 = laurent_v(1);
        // (z - z^-1)/(2i): coefficient of z is -i/2
        let minus_i_half = (-i_unit())
            .checked_mul(&CycloElem::from_rat(rat(1, 2)))
            .unwrap();
        assert_eq!(v1.coeff(1), minus_i_half);
        assert_eq!(v1.coeff(-1), -minus_i_half);
        assert_eq!(laurent_u(0), LaurentPoly::one());
        assert_eq!(laurent_v(0), LaurentPoly::zero());
    }

    #[test]
    fn pythagorean_identity() {
        for k in 1..=12u32 {
            let lhs = laurent_u(k).pow(2).add(&laurent_v(k).pow(2));
            assert_eq!(lhs, LaurentPoly::one(), "k = {k}");
        }
    }

    #[test]
    fn u_inversion_symmetry() {
        for n in 0..=8u32 {
            assert_eq!(laurent_u(n).invert_variable(), laurent_u(n));
        }
    }

    #[test]
    fn encode_cos_is_u1() {
        let enc = encode_trig(&TrigExpr::cos(1), 4).unwrap();
        assert_eq!(enc, laurent_u(1));
    }

    #[test]
    fn encode_shifted_cos_is_minus_sin() {
        // cos(pi/2 + z) = -sin z: encode both and compare.
        let lhs = encode_trig(&TrigExpr::cos_phased_pi(1, 1, 2).unwrap(), 4).unwrap();
        assert_eq!(lhs, laurent_v(1).neg());
    }

    #[test]
    fn encode_exp() {
        let enc = encode_trig(&TrigExpr::exp_i(3), 1).unwrap();
        assert_eq!(enc, LaurentPoly::monomial(3, CycloElem::one()));
    }

    #[test]
    fn encode_requires_room_for_phase() {
        let e = TrigExpr::cos_phased_pi(1, 1, 3).unwrap(); // phase of order 6
        assert!(matches!(encode_trig(&e, 4), Err(Error::Usage(_))));
        assert!(encode_trig(&e, 12).is_ok());
        // the same phase expressed at a large conductor still encodes at a
        // small compatible one
        let e2 = TrigExpr::zero().plus_cos(
            1,
            unit_root(6, 1).unwrap().embed(24).unwrap(),
            CycloElem::one(),
        );
        assert!(encode_trig(&e2, 12).is_ok());
    }

    #[test]
    fn encode_sin_needs_conductor_4() {
        assert!(matches!(
            encode_trig(&TrigExpr::sin(1), 3),
            Err(Error::Usage(_))
        ));
        assert_eq!(encode_trig(&TrigExpr::sin(2), 4).unwrap(), laurent_v(2));
    }

    #[test]
    fn encode_linearity_with_amplitude_and_constant() {
        // 2 cos z - 3 encodes to 2 U_1 - 3
        let e = TrigExpr::zero()
            .plus_cos(1, CycloElem::one(), CycloElem::from_int(2))
            .plus_const(CycloElem::from_int(-3));
        let enc = encode_trig(&e, 4).unwrap();
        assert_eq!(
            enc,
            laurent_u(1)
                .scale(&CycloElem::from_int(2))
                .add(&LaurentPoly::from_int(-3))
        );
    }
}
