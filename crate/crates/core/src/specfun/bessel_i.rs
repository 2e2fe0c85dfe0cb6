//! Modified Bessel function of the first kind, real order >= 0.
//!
//! Real arguments use the power series summed outward from its largest
//! term, with that term's logarithm extracted first so neither the sum nor
//! the scaled result e^{-x} I_nu(x) can overflow.  Large real arguments
//! switch to the Hankel asymptotic expansion (A&S 9.7.1); the crossover is
//! |z| = 20, pushed up to nu^2 + 10 for larger orders where the expansion
//! is too slow to settle.  Complex arguments keep the same series below
//! |z| = 20 and use the compound expansion with both exponentials above
//! (needed on the imaginary axis, where I_nu(ix) = i^nu J_nu(x)).

use super::gamma::ln_gamma;
use super::SpecFunError;
use num_complex::Complex64;
use std::f64::consts::PI;

const ASYM_CUTOFF: f64 = 20.0;
const MAX_ASYM_TERMS: usize = 60;

/// e^{-x} I_nu(x) for real x >= 0; never overflows.
pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<f64, SpecFunError> {
    check_order(nu)?;
    if x < 0.0 {
        return Err(SpecFunError::Domain("scaled Bessel I requires x >= 0"));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if x >= ASYM_CUTOFF.max(nu * nu + 10.0) {
        return Ok(asym_scaled_real(nu, x));
    }
    Ok(series_scaled_real(nu, x))
}

/// I_nu(x) for real x >= 0; overflow is reported, not saturated.
pub fn bessel_i_real(nu: f64, x: f64) -> Result<f64, SpecFunError> {
    let scaled = bessel_i_scaled(nu, x)?;
    let ln_val = scaled.ln() + x;
    if ln_val > 709.0 {
        return Err(SpecFunError::Overflow);
    }
    Ok(scaled * x.exp())
}

/// I_nu(z) for complex z.  Arguments with Re z < 0 are reflected through
/// I_nu(z e^{i pi}) = e^{i pi nu} I_nu(z).
pub fn bessel_i(nu: f64, z: Complex64) -> Result<Complex64, SpecFunError> {
    check_order(nu)?;
    if z.im == 0.0 && z.re >= 0.0 {
        return bessel_i_real(nu, z.re).map(|v| Complex64::new(v, 0.0));
    }
    if z.re < 0.0 {
        let rotated = bessel_i(nu, -z)?;
        // -z = z e^{-i pi} for Im z > 0, z e^{+i pi} for Im z <= 0
        let phase = if z.im > 0.0 {
            Complex64::from_polar(1.0, PI * nu)
        } else {
            Complex64::from_polar(1.0, -PI * nu)
        };
        return Ok(phase * rotated);
    }
    if z.norm() <= ASYM_CUTOFF || nu > 0.5 * z.norm() {
        return series_complex(nu, z);
    }
    Ok(asym_complex(nu, z))
}

fn check_order(nu: f64) -> Result<(), SpecFunError> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(SpecFunError::Domain("Bessel order must be finite and >= 0"));
    }
    Ok(())
}

/// Power series summed bidirectionally from the largest term k*.
fn series_scaled_real(nu: f64, x: f64) -> f64 {
    let h = x / 2.0;
    let kstar = (0.5 * (-(nu + 1.0) + ((nu + 1.0) * (nu + 1.0) + x * x).sqrt())).max(0.0) as usize;
    let kf = kstar as f64;
    let ln_tk = (nu + 2.0 * kf) * h.ln() - ln_gamma(kf + 1.0) - ln_gamma(nu + kf + 1.0);
    let mut sum = 1.0f64;
    // upward from k*
    let mut t = 1.0;
    let mut k = kf;
    loop {
        t *= h * h / ((k + 1.0) * (nu + k + 1.0));
        sum += t;
        k += 1.0;
        if t < 1e-18 * sum || k > kf + 600.0 {
            break;
        }
    }
    // downward from k*
    t = 1.0;
    k = kf;
    while k > 0.0 {
        t *= k * (nu + k) / (h * h);
        sum += t;
        k -= 1.0;
        if t < 1e-18 * sum {
            break;
        }
    }
    (ln_tk - x).exp() * sum
}

/// A&S 9.7.1 for e^{-x} I_nu(x); the reflected e^{-2x} term is dropped
/// (below 1e-17 for x >= 20).
fn asym_scaled_real(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut sum = 1.0f64;
    let mut term = 1.0f64;
    for k in 1..MAX_ASYM_TERMS {
        let kf = k as f64;
        term *= -(mu - (2.0 * kf - 1.0) * (2.0 * kf - 1.0)) / (8.0 * x * kf);
        if term.abs() > sum.abs() {
            break;
        }
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum / (2.0 * PI * x).sqrt()
}

fn series_complex(nu: f64, z: Complex64) -> Result<Complex64, SpecFunError> {
    let h = z / 2.0;
    let lead = nu * h.ln() - ln_gamma(nu + 1.0);
    let mut term = lead.exp();
    if !term.is_finite() {
        return Err(SpecFunError::Overflow);
    }
    let mut sum = term;
    for k in 0..600 {
        let kf = k as f64;
        term = term * h * h / ((kf + 1.0) * (nu + kf + 1.0));
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            return Ok(sum);
        }
    }
    Err(SpecFunError::NoConvergence)
}

/// Compound expansion with both exponentials, valid for Re z >= 0
/// (A&S 9.7.1 together with the continuation term e^{-z +- (nu+1/2) pi i}).
fn asym_complex(nu: f64, z: Complex64) -> Complex64 {
    let mu = 4.0 * nu * nu;
    let series = |sign: f64| {
        let mut sum = Complex64::new(1.0, 0.0);
        let mut term = Complex64::new(1.0, 0.0);
        for k in 1..MAX_ASYM_TERMS {
            let kf = k as f64;
            term = term * sign * (-(mu - (2.0 * kf - 1.0) * (2.0 * kf - 1.0))) / (8.0 * z * kf);
            if term.norm() > sum.norm() {
                break;
            }
            sum += term;
            if term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        sum
    };
    let phase = if z.im >= 0.0 {
        Complex64::new(0.0, (nu + 0.5) * PI).exp()
    } else {
        Complex64::new(0.0, -(nu + 0.5) * PI).exp()
    };
    (z.exp() * series(1.0) + (-z).exp() * phase * series(-1.0)) / (2.0 * PI * z).sqrt()
}
