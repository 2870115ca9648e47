//! Exact composition algebra for polynomials and Laurent polynomials over
//! cyclotomic fields.
//!
//! The crate is organized in layers:
//!
//! - [`cyclo`]: exact arithmetic in the cyclotomic fields `Q(zeta_M)`, the
//!   coefficient domain for everything else, together with root-of-unity and
//!   radical extraction helpers in [`roots`].
//! - [`laurent`]: sparse Laurent polynomials, bivariate polynomials, affine
//!   maps, and exact composition.
//! - [`cheb`]: Chebyshev polynomials and the trigonometric-to-Laurent
//!   dictionary (`cos nz -> U_n(w)`, `sin nz -> V_n(w)` under `w = e^{iz}`).
//! - [`decomp`]: functional decomposition (right factors, left quotients,
//!   complete decompositions, Laurent factor extraction).
//! - [`classify`]: shape recognizers (cyclic and Chebyshev forms), the strong
//!   uniqueness decision procedure, and classification of double
//!   decompositions.
//! - [`identities`]: generators and an exact verifier for the canonical
//!   identity families relating compositions of polynomials, Laurent
//!   polynomials and trigonometric expressions.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals
//! or rational combinations of roots of unity, and no floating point is used
//! anywhere in a decision.

pub mod cheb;
pub mod classify;
pub mod cyclo;
pub mod decomp;
pub mod error;
pub mod identities;
pub mod laurent;
pub mod limits;
pub mod rat;
pub mod roots;

pub use cyclo::{CycloElem, CycloField};
pub use error::{Error, Result};
pub use laurent::{AffineMap, BivarPoly, LaurentPoly};
pub use rat::Rat;
