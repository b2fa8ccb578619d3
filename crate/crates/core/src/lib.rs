//! Exact constructions around osculating isotropic flags and Schubert
//! intersections on Grassmannians.
//!
//! - [`exact_linalg`]: rationals, ℚ(√d), dense matrices, polynomials.
//! - [`curves_flags`]: rational normal curves, osculating flags, invariant
//!   forms, principal nilpotents and random isotropic flags.
//! - [`schubert`]: Schubert conditions, tangent spaces, transversality
//!   certificates and an exact solver for lines meeting four 2-planes in ℂ⁴.
//! - [`wronski`]: planes of polynomials, Wronskians and ramification.
//! - [`json`]: the exact JSON encodings used by the command-line tool.

pub mod curves_flags;
pub mod exact_linalg;
pub mod json;
pub mod schubert;
pub mod wronski;
