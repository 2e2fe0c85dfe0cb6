//! Gauss-Legendre quadrature and compensated summation.
//!
//! Nodes are computed once per order by Newton iteration on the Legendre
//! recurrence and cached.  All reductions use Neumaier's compensated sum so
//! results do not depend on how callers batch their work.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Neumaier (improved Kahan) compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated sum of an iterator.
pub fn csum(it: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = NeumaierSum::new();
    for x in it {
        acc.add(x);
    }
    acc.value()
}

fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn compute_gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // Tricomi-style initial guess, then Newton
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_deriv(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, dp) = legendre_and_deriv(n, 0.0);
        weights[n / 2] = 2.0 / (dp * dp);
    }
    (nodes, weights)
}

type Rule = (Vec<f64>, Vec<f64>);

fn cache() -> &'static Mutex<HashMap<usize, &'static Rule>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static Rule>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Nodes and weights on [-1, 1] for the n-point rule.
pub fn gauss_legendre(n: usize) -> &'static Rule {
    let mut map = cache().lock().unwrap();
    if let Some(r) = map.get(&n) {
        return r;
    }
    let rule: &'static Rule = Box::leak(Box::new(compute_gauss_legendre(n)));
    map.insert(n, rule);
    rule
}

/// Fixed n-point Gauss-Legendre integral of `f` over [a, b].
pub fn fixed_quad(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let (x, w) = gauss_legendre(n);
    let c = 0.5 * (b - a);
    let d = 0.5 * (a + b);
    let mut acc = NeumaierSum::new();
    for (xi, wi) in x.iter().zip(w) {
        acc.add(wi * f(c * xi + d));
    }
    c * acc.value()
}

/// Adaptive bisection on top of a 15-point rule.
///
/// Returns `(value, error_estimate)`.  The estimate is the accumulated
/// difference between each accepted panel and its bisection.
pub fn adaptive_quad(
    f: &mut dyn FnMut(f64) -> f64,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> (f64, f64) {
    const ORDER: usize = 15;
    const MAX_DEPTH: usize = 28;

    fn recurse(
        f: &mut dyn FnMut(f64) -> f64,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: usize,
        err: &mut NeumaierSum,
        out: &mut NeumaierSum,
    ) {
        let m = 0.5 * (a + b);
        let left = fixed_quad(f, a, m, ORDER);
        let right = fixed_quad(f, m, b, ORDER);
        let delta = left + right - whole;
        if delta.abs() <= tol || depth >= MAX_DEPTH {
            out.add(left);
            out.add(right);
            err.add(delta.abs());
            return;
        }
        recurse(f, a, m, left, 0.5 * tol, depth + 1, err, out);
        recurse(f, m, b, right, 0.5 * tol, depth + 1, err, out);
    }

    let coarse = fixed_quad(f, a, b, ORDER);
    let tol = (coarse.abs() * rel_tol).max(abs_tol);
    let mut out = NeumaierSum::new();
    let mut err = NeumaierSum::new();
    recurse(f, a, b, coarse, tol, 0, &mut err, &mut out);
    (out.value(), err.value())
}
