//! Gegenbauer polynomials, Legendre polynomials, and the conical Gegenbauer
//! functions that serve as zonal spherical functions of SO(d,1).
//!
//! The conical function of degree -(d-1)/2 + i*rho with superscript
//! (d-1)/2, normalized to 1 at the identity, equals
//!
//!   phi(Theta) = 2F1((d-1)/2 - i rho, (d-1)/2 + i rho; d/2; -sinh^2(Theta/2))
//!
//! and also admits the Laplace-type average
//!
//!   phi(Theta) = c_d * int_0^pi w^{-(d-1)/2} cos(rho ln w) sin^{d-2}p dp,
//!   w(p) = cosh Theta + sinh Theta cos p.
//!
//! The series is used for cosh Theta <= 2 while its terms stay small; the
//! integral elsewhere.  Near p = pi the phase rho*ln(w) turns over on a
//! scale e^{-Theta}, so the integral panels refine geometrically toward
//! that endpoint and split further wherever the phase swings.

use super::gamma::{gamma, ln_gamma};
use super::SpecFunError;
use crate::quad::{gauss_legendre, NeumaierSum};
use std::f64::consts::PI;

/// C_l^alpha(x) by the stable three-term recurrence in l.
pub fn gegenbauer_poly(l: u32, alpha: f64, x: f64) -> f64 {
    if l == 0 {
        return 1.0;
    }
    let mut p0 = 1.0;
    let mut p1 = 2.0 * alpha * x;
    for k in 1..l {
        let kf = k as f64;
        let p2 = (2.0 * (kf + alpha) * x * p1 - (kf + 2.0 * alpha - 1.0) * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Legendre polynomial P_l(x) = C_l^{1/2}(x).
pub fn legendre_p(l: u32, x: f64) -> f64 {
    gegenbauer_poly(l, 0.5, x)
}

fn chebyshev_t(l: u32, x: f64) -> f64 {
    if x.abs() <= 1.0 {
        (l as f64 * x.acos()).cos()
    } else {
        // |x| > 1 arises only from rounding at the endpoints
        let t = x.abs().acosh();
        let v = (l as f64 * t).cosh();
        if x < 0.0 && l % 2 == 1 {
            -v
        } else {
            v
        }
    }
}

/// Normalized zonal spherical function of SO(d) on the sphere S^{d-1}:
/// l! Gamma(d-2) / Gamma(l+d-2) * C_l^{(d-2)/2}(x), which is 1 at x = 1.
///
/// d = 2 uses the Chebyshev limit T_l(x) of the degenerate superscript.
pub fn sphere_zonal(d: u32, l: u32, x: f64) -> f64 {
    assert!(d >= 2, "sphere zonal function requires d >= 2");
    if d == 2 {
        return chebyshev_t(l, x);
    }
    if l == 0 {
        return 1.0;
    }
    let alpha = (d as f64 - 2.0) / 2.0;
    // ln of l! Gamma(2 alpha) / Gamma(l + 2 alpha)
    let ln_pref = ln_gamma(l as f64 + 1.0) + ln_gamma(2.0 * alpha) - ln_gamma(l as f64 + 2.0 * alpha);
    ln_pref.exp() * gegenbauer_poly(l, alpha, x)
}

/// Unnormalized value C_l^alpha(1) = Gamma(l+2a)/(l! Gamma(2a)).
///
/// Signed gammas: for -1/2 < alpha < 0 the value is negative for l >= 1.
pub fn gegenbauer_at_one(l: u32, alpha: f64) -> f64 {
    gamma(l as f64 + 2.0 * alpha) / (gamma(l as f64 + 1.0) * gamma(2.0 * alpha))
}

const SERIES_CUTOFF_COSH: f64 = 2.0;
// the largest series term is ~ exp(2 rho sinh(Theta/2)); keep the
// cancellation under ~4 digits
const SERIES_CUTOFF_PHASE: f64 = 9.0;

fn conical_series(d: u32, rho: f64, cosh_theta: f64, max_terms: usize) -> Result<f64, SpecFunError> {
    let z = -(cosh_theta - 1.0) / 2.0; // = -sinh^2(Theta/2)
    let a0 = (d as f64 - 1.0) / 2.0;
    let c0 = d as f64 / 2.0;
    let mut term = 1.0;
    let mut acc = NeumaierSum::new();
    acc.add(1.0);
    for k in 0..max_terms {
        let kf = k as f64;
        term *= ((a0 + kf) * (a0 + kf) + rho * rho) / ((c0 + kf) * (kf + 1.0)) * z;
        acc.add(term);
        if term.abs() < 1e-17 * acc.value().abs().max(1e-30) {
            return Ok(acc.value());
        }
    }
    Err(SpecFunError::NoConvergence)
}

/// Panel layout for the Laplace-type integral at fixed Theta, reusable
/// across rho up to the `rho_max` it was built with.
pub struct ConicalCache {
    d: u32,
    theta: f64,
    /// per node: (weight * w^{-(d-1)/2} * sin^{d-2} p, ln w)
    nodes: Vec<(f64, f64)>,
    prefactor: f64,
    rho_max: f64,
}

impl ConicalCache {
    pub fn build(d: u32, rho_max: f64, theta: f64) -> Self {
        assert!(d >= 2);
        let ch = theta.cosh();
        let sh = theta.sinh();
        let ex = (d as f64 - 1.0) / 2.0;
        let ln_w = |p: f64| (ch + sh * p.cos()).ln();

        // geometric breakpoints toward p = pi where ln w turns over
        let mut deltas = vec![PI];
        loop {
            let next = deltas.last().unwrap() / 2.0;
            deltas.push(next);
            if sh * next * next / 2.0 < (-theta).exp() / 8.0 || next < 1e-8 {
                break;
            }
        }
        let mut pts: Vec<f64> = std::iter::once(0.0)
            .chain(deltas.iter().map(|dd| PI - dd))
            .chain(std::iter::once(PI))
            .collect();
        pts.dedup_by(|a, b| (*a - *b).abs() < 1e-15);

        let (gx, gw) = gauss_legendre(16);
        let mut nodes = Vec::new();
        for win in pts.windows(2) {
            let (a, b) = (win[0], win[1]);
            let span = (rho_max * (ln_w(a) - ln_w(b))).abs();
            let m = 1 + (span / 4.0) as usize;
            for i in 0..m {
                let aa = a + (b - a) * i as f64 / m as f64;
                let bb = a + (b - a) * (i + 1) as f64 / m as f64;
                let c = 0.5 * (bb - aa);
                let mid = 0.5 * (aa + bb);
                for (xi, wi) in gx.iter().zip(gw) {
                    let p = c * xi + mid;
                    let w = ch + sh * p.cos();
                    nodes.push((c * wi * w.powf(-ex) * p.sin().powi(d as i32 - 2), w.ln()));
                }
            }
        }
        let prefactor = gamma(d as f64 / 2.0) / (PI.sqrt() * gamma((d as f64 - 1.0) / 2.0));
        ConicalCache { d, theta, nodes, prefactor, rho_max }
    }

    /// Evaluate at any rho <= rho_max the cache was built for.
    pub fn eval(&self, rho: f64) -> f64 {
        debug_assert!(rho <= self.rho_max * (1.0 + 1e-12));
        if self.theta < 1e-14 {
            return 1.0;
        }
        if self.theta.cosh() <= SERIES_CUTOFF_COSH
            && 2.0 * rho * (self.theta / 2.0).sinh() <= SERIES_CUTOFF_PHASE
        {
            if let Ok(v) = conical_series(self.d, rho, self.theta.cosh(), 512) {
                return v;
            }
        }
        let mut acc = NeumaierSum::new();
        for &(w, lnw) in &self.nodes {
            acc.add(w * (rho * lnw).cos());
        }
        self.prefactor * acc.value()
    }
}

/// Normalized zonal spherical function of SO(d,1) at geodesic angle Theta
/// given through cosh(Theta); real-valued, equal to 1 at cosh Theta = 1.
pub fn gegenbauer_conical(d: u32, rho: f64, cosh_theta: f64) -> Result<f64, SpecFunError> {
    if d < 2 {
        return Err(SpecFunError::Domain("conical function requires d >= 2"));
    }
    if !(rho >= 0.0) || !cosh_theta.is_finite() {
        return Err(SpecFunError::Domain("conical function requires finite rho >= 0"));
    }
    if cosh_theta < 1.0 {
        if cosh_theta > 1.0 - 1e-12 {
            return Ok(1.0);
        }
        return Err(SpecFunError::Domain("cosh Theta must be >= 1"));
    }
    if cosh_theta == 1.0 {
        return Ok(1.0);
    }
    if cosh_theta <= SERIES_CUTOFF_COSH {
        let theta = cosh_theta.acosh();
        if 2.0 * rho * (theta / 2.0).sinh() <= SERIES_CUTOFF_PHASE {
            return conical_series(d, rho, cosh_theta, 512);
        }
    }
    let theta = cosh_theta.acosh();
    Ok(ConicalCache::build(d, rho, theta).eval(rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn poly_base_cases() {
        assert_relative_eq!(gegenbauer_poly(0, 0.5, 0.3), 1.0);
        // C_l^{1/2} = P_l, P_2(1) = 1
        assert_relative_eq!(gegenbauer_poly(2, 0.5, 1.0), 1.0, max_relative = 1e-14);
        // C_l^1 = U_l (Chebyshev second kind), U_3(1/2) = -1
        assert_relative_eq!(gegenbauer_poly(3, 1.0, 0.5), -1.0, max_relative = 1e-13);
    }

    #[test]
    fn legendre_values() {
        assert_relative_eq!(legendre_p(0, 0.7), 1.0);
        assert_relative_eq!(legendre_p(1, 0.7), 0.7);
        // against the explicit quartic (35 x^4 - 30 x^2 + 3)/8 at x = 0.2
        let x: f64 = 0.2;
        let quartic = (35.0 * x.powi(4) - 30.0 * x * x + 3.0) / 8.0;
        assert_relative_eq!(legendre_p(4, x), quartic, max_relative = 1e-14);
        assert_relative_eq!(legendre_p(4, x), 0.232, max_relative = 1e-13);
    }

    #[test]
    fn sphere_zonal_d2_is_cosine() {
        let g = 0.6f64;
        assert_relative_eq!(sphere_zonal(2, 3, g.cos()), (3.0 * g).cos(), max_relative = 1e-13);
    }

    #[test]
    fn conical_identity_value() {
        for d in [2u32, 3, 5] {
            for rho in [0.0, 0.7, 4.0] {
                assert_relative_eq!(gegenbauer_conical(d, rho, 1.0).unwrap(), 1.0);
            }
        }
    }

    #[test]
    fn conical_d3_reduction() {
        // d = 3: sin(rho Theta) / (rho sinh Theta)
        let th = 1.0f64;
        let got = gegenbauer_conical(3, 1.0, th.cosh()).unwrap();
        assert_relative_eq!(got, 0.716_022_915_360_433_9, max_relative = 1e-12);
        // rho -> 0 limit Theta / sinh Theta
        let got0 = gegenbauer_conical(3, 0.0, th.cosh()).unwrap();
        assert_relative_eq!(got0, 0.850_918_128_239_321_6, max_relative = 1e-12);
    }

    #[test]
    fn conical_domain_errors() {
        assert!(gegenbauer_conical(3, 1.0, 0.5).is_err());
        assert!(gegenbauer_conical(1, 1.0, 1.5).is_err());
        // clamping window just below 1
        assert_eq!(gegenbauer_conical(3, 1.0, 1.0 - 1e-13).unwrap(), 1.0);
    }

    // references computed with mpmath hyp2f1 at 30 digits
    const CONICAL_REFS: &[(u32, f64, f64, f64)] = &[
        (2, 1.0, 1.0, 0.722_075_228_279_374_57),
        (2, 5.0, 2.0, -0.182_133_802_279_848_54),
        (2, 27.0, 3.0, 0.004_811_311_757_798_121_6),
        (3, 1.0, 1.0, 0.716_022_915_360_433_87),
        (3, 10.0, 0.5, -0.184_020_900_697_721_72),
        (3, 27.0, 3.0, -0.002_328_755_863_111_941_2),
        (4, 5.0, 1.5, 0.022_491_694_715_719_888),
        (5, 1.0, 1.0, 0.613_184_783_465_154_9),
        (5, 27.0, 3.0, -3.276_486_177_350_083_3e-5),
        (2, 20.0, 5.0, 0.005_087_641_509_748_644_5),
        (3, 6.3, 5.2, 0.001_706_523_693_354_303_3),
        (5, 10.0, 0.5, -0.053_727_477_062_888_958),
    ];

    #[test]
    fn conical_against_reference_table() {
        for &(d, rho, th, want) in CONICAL_REFS {
            let got = gegenbauer_conical(d, rho, f64::cosh(th)).unwrap();
            let err = (got - want).abs();
            assert!(
                err <= (1e-11 * want.abs()).max(1e-12),
                "d={d} rho={rho} Theta={th}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn series_and_integral_agree_on_the_seam() {
        // both representations are valid in a band around cosh Theta = 2
        for d in [2u32, 3, 5] {
            for rho in [0.3, 1.5, 3.0] {
                for ct in [1.6, 1.9, 2.0] {
                    let th = f64::acosh(ct);
                    let ser = conical_series(d, rho, ct, 512).unwrap();
                    let int = ConicalCache::build(d, rho, th).eval(rho);
                    assert_relative_eq!(ser, int, max_relative = 1e-10, epsilon = 1e-13);
                }
            }
        }
    }

    #[test]
    fn cache_matches_pointwise_eval() {
        let cache = ConicalCache::build(3, 30.0, 2.5);
        for rho in [0.0, 0.5, 7.0, 29.9] {
            let direct = gegenbauer_conical(3, rho, 2.5f64.cosh()).unwrap();
            assert_relative_eq!(cache.eval(rho), direct, max_relative = 1e-9, epsilon = 1e-13);
        }
    }

    proptest! {
        // normalized value at x = 1 is exactly 1: C_l^a(1) = Gamma(l+2a)/(l! Gamma(2a))
        #[test]
        fn normalization_at_one(l in 0u32..40, alpha in -0.4f64..4.0) {
            prop_assume!(alpha.abs() > 1e-3);
            let c = gegenbauer_poly(l, alpha, 1.0);
            let target = gegenbauer_at_one(l, alpha);
            prop_assert!((c - target).abs() <= 1e-10 * target.abs().max(1.0));
        }
    }
}
