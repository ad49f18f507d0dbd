use crate::error::{Error, Result};
use sha2::{Digest, Sha256};

/// Evaluation context: working precision and truncation/derivative controls.
///
/// Every evaluator takes a context and is a pure function of (inputs, ctx):
/// the same context and inputs always reproduce bit-identical results.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalContext {
    /// Binary working precision of all intermediate arithmetic (>= 53).
    pub precision_bits: u32,
    /// Relative error target for series/quadrature truncation.
    pub rel_tol: f64,
    /// Step (in t units) for numerical argument derivatives.
    pub diff_step: f64,
    /// Maximum number of grid-halving levels in semi-infinite quadrature.
    pub quad_levels: u32,
    /// Hard cap on the number of terms any single sum may consume.
    pub sum_term_cap: u64,
}

impl Default for EvalContext {
    fn default() -> Self {
        EvalContext {
            precision_bits: 128,
            rel_tol: 1e-12,
            diff_step: 1e-5,
            quad_levels: 10,
            sum_term_cap: 1_000_000,
        }
    }
}

impl EvalContext {
    pub fn new(
        precision_bits: u32,
        rel_tol: f64,
        diff_step: f64,
        quad_levels: u32,
        sum_term_cap: u64,
    ) -> Result<Self> {
        let ctx = EvalContext {
            precision_bits,
            rel_tol,
            diff_step,
            quad_levels,
            sum_term_cap,
        };
        ctx.validate()?;
        Ok(ctx)
    }

    pub fn with_precision(bits: u32) -> Result<Self> {
        EvalContext::new(bits, 1e-12, 1e-5, 10, 1_000_000)
    }

    pub fn validate(&self) -> Result<()> {
        if self.precision_bits < 53 {
            return Err(Error::InvalidContext(format!(
                "precision_bits = {} < 53",
                self.precision_bits
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::InvalidContext(format!(
                "rel_tol = {} outside (0, 1)",
                self.rel_tol
            )));
        }
        if !(self.diff_step > 0.0 && self.diff_step < 1.0) {
            return Err(Error::InvalidContext(format!(
                "diff_step = {} outside (0, 1)",
                self.diff_step
            )));
        }
        if self.quad_levels == 0 {
            return Err(Error::InvalidContext("quad_levels must be >= 1".into()));
        }
        if self.sum_term_cap == 0 {
            return Err(Error::InvalidContext("sum_term_cap must be >= 1".into()));
        }
        Ok(())
    }

    /// Internal working precision: requested bits plus guard bits that absorb
    /// roundoff accumulated across long sums.
    pub fn work_prec(&self) -> u32 {
        self.precision_bits + 32
    }

    /// Truncation target used by series/quadrature loops.
    pub fn trunc_eps(&self) -> f64 {
        // Truncation aims below rel_tol so the reported err_estimate stays under it.
        self.rel_tol * 0.01
    }

    /// Stable hash of the context, used to key on-disk catalog caches.
    pub fn hash(&self) -> String {
        let canon = format!(
            "p={};rel={:e};h={:e};ql={};cap={}",
            self.precision_bits, self.rel_tol, self.diff_step, self.quad_levels, self.sum_term_cap
        );
        let digest = Sha256::digest(canon.as_bytes());
        let mut out = String::with_capacity(16);
        for b in digest.iter().take(8) {
            out.push_str(&format!("{:02x}", b));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        let ctx = EvalContext::default();
        assert!(ctx.validate().is_ok());
        assert_eq!(ctx.precision_bits, 128);
    }

    #[test]
    fn rejects_low_precision() {
        assert!(EvalContext::new(52, 1e-12, 1e-5, 10, 1000).is_err());
        assert!(EvalContext::new(53, 1e-12, 1e-5, 10, 1000).is_ok());
    }

    #[test]
    fn rejects_bad_tolerances() {
        assert!(EvalContext::new(64, 0.0, 1e-5, 10, 1000).is_err());
        assert!(EvalContext::new(64, 1e-12, 1.5, 10, 1000).is_err());
    }

    #[test]
    fn hash_depends_on_fields() {
        let a = EvalContext::default().hash();
        let b = EvalContext::with_precision(96).unwrap().hash();
        assert_ne!(a, b);
        assert_eq!(a, EvalContext::default().hash());
    }
}
