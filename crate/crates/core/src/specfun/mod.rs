//! Special functions built from scratch: Gegenbauer polynomials and conical
//! Gegenbauer functions, modified Bessel functions of real order (complex
//! argument) and purely imaginary order, Legendre polynomials, and squared
//! moduli of the Gamma function on vertical lines.

mod bessel_i;
mod bessel_k;
mod gamma;
mod gegenbauer;

pub use bessel_i::{bessel_i, bessel_i_real, bessel_i_scaled};
pub use bessel_k::{bessel_k_imag, bessel_k_imag_scaled};
pub use gamma::{gamma, gamma_abs_sq, ln_gamma, ln_gamma_complex};
pub use gegenbauer::{
    gegenbauer_at_one, gegenbauer_conical, gegenbauer_poly, legendre_p, sphere_zonal, ConicalCache,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("argument outside domain: {0}")]
    Domain(&'static str),
    #[error("result overflows f64; use the scaled variant")]
    Overflow,
    #[error("series or expansion failed to converge")]
    NoConvergence,
    #[error("gamma pole at a non-positive integer")]
    GammaPole,
}

/// Order of a modified Bessel function: real `I_nu` or imaginary `K_{i rho}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BesselOrder {
    Real(f64),
    Imaginary(f64),
}

impl BesselOrder {
    pub fn value(&self) -> f64 {
        match *self {
            BesselOrder::Real(v) | BesselOrder::Imaginary(v) => v,
        }
    }

    pub fn validate(&self) -> Result<(), SpecFunError> {
        let v = self.value();
        if !v.is_finite() || v < 0.0 {
            return Err(SpecFunError::Domain("Bessel order must be finite and >= 0"));
        }
        Ok(())
    }
}

/// Index of a Gegenbauer evaluation: integer degree, or the conical degree
/// -(d-1)/2 + i*rho that labels SO(d,1) zonal functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GegenbauerIndex {
    /// C_l^alpha with integer l >= 0 and real alpha > -1/2.
    Polynomial { degree: u32, alpha: f64 },
    /// Conical degree encoded by (d, rho), d >= 2, rho >= 0.
    Conical { d: u32, rho: f64 },
}

impl GegenbauerIndex {
    pub fn validate(&self) -> Result<(), SpecFunError> {
        match *self {
            GegenbauerIndex::Polynomial { alpha, .. } => {
                if !(alpha > -0.5) {
                    Err(SpecFunError::Domain("Gegenbauer superscript must exceed -1/2"))
                } else {
                    Ok(())
                }
            }
            GegenbauerIndex::Conical { d, rho } => {
                if d < 2 {
                    Err(SpecFunError::Domain("conical index requires d >= 2"))
                } else if !(rho >= 0.0) || !rho.is_finite() {
                    Err(SpecFunError::Domain("conical rho must be finite and >= 0"))
                } else {
                    Ok(())
                }
            }
        }
    }
}
