//! Evaluation policy shared by series summation and quadrature.

/// Accuracy knobs for series and quadrature.
///
/// `abs_tol` is a floor against needless refinement of results that are
/// themselves denormal-small; it is not a promise of absolute accuracy.
#[derive(Debug, Clone, Copy)]
pub struct EvaluationPolicy {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
    pub quadrature_nodes: usize,
}

impl Default for EvaluationPolicy {
    fn default() -> Self {
        EvaluationPolicy {
            rel_tol: 1e-12,
            abs_tol: 1e-300,
            max_terms: 512,
            quadrature_nodes: 200,
        }
    }
}

impl EvaluationPolicy {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.rel_tol > 0.0) {
            return Err("rel_tol must be positive".into());
        }
        if self.max_terms < 16 {
            return Err("max_terms must be at least 16".into());
        }
        Ok(())
    }
}
