//! Quantum propagators and heat kernels on homogeneous spaces.
//!
//! Two model systems are covered end to end:
//!
//! * free motion on the d-dimensional space of constant negative curvature,
//!   solved by the spherical transform of SO(d,1) (conical Gegenbauer
//!   functions, Plancherel density, spectral integral, closed forms for
//!   odd and even d);
//! * the d-dimensional isotropic harmonic oscillator, whose radial
//!   propagator is an SU(1,1) matrix element on the continuous basis
//!   diagonalizing x² (modified Bessel kernels closed under Weber
//!   convolution).
//!
//! Imaginary time is the verification workhorse throughout: every kernel
//! has a positive Euclidean continuation that is checked by quadrature
//! against transform identities, semigroup convolutions and independent
//! closed forms.  Real-time values are produced only from the final closed
//! forms, never by oscillatory quadrature.

pub mod hyperbolic;
pub mod oscillator;
pub mod policy;
pub mod quad;
pub mod report;
pub mod slicer;
pub mod specfun;
pub mod su11;
pub mod zonal;

pub use policy::EvaluationPolicy;

/// Evolution parameter: inverse temperature (Euclidean) or physical time.
///
/// Euclidean `beta` has dimension 1/energy, so `exp(-beta H)` is the heat
/// semigroup; real `tau` is the time in `exp(-i tau H / hbar)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvolutionTime {
    Euclidean { beta: f64 },
    RealTime { tau: f64 },
}

impl EvolutionTime {
    pub fn is_euclidean(&self) -> bool {
        matches!(self, EvolutionTime::Euclidean { .. })
    }
}
