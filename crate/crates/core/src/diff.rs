//! Numerical argument derivatives along the critical line, and phase
//! unwrapping for argument-change bookkeeping.

use crate::cplx::Cx;
use crate::ctx::EvalContext;
use crate::error::{Error, Result};
use crate::mp::{rf, Real};

/// d/dt arg f(1/2 + it), computed as the imaginary part of the central
/// difference of log f, with one Richardson refinement step.
///
/// The difference uses log of the ratio f(t+h)/f(t-h), which stays on the
/// principal branch as long as the argument moves by less than pi across the
/// stencil; `ctx.diff_step` is small enough for every function this crate
/// differentiates away from poles.
pub fn arg_derivative_t<F>(f: F, t: f64, ctx: &EvalContext) -> Result<Real>
where
    F: Fn(&Cx) -> Result<Cx>,
{
    let p = ctx.work_prec();
    let h = ctx.diff_step;
    let at = |tt: f64| -> Result<Cx> {
        let s = Cx::new(rf(p, 0.5), rf(p, tt));
        f(&s)
    };
    let vals = [at(t + h)?, at(t - h)?, at(t + h / 2.0)?, at(t - h / 2.0)?];
    let mut scale = rf(p, 0.0);
    for v in &vals {
        let a = v.abs();
        if a > scale {
            scale = a;
        }
    }
    let floor = scale.clone() * rf(p, 10.0 * ctx.rel_tol);
    for v in &vals {
        if v.abs() <= floor {
            return Err(Error::PoleOrZeroTooClose { t });
        }
    }
    // D(h) = Im log(f(t+h)/f(t-h)) / (2h)
    let d_h = (&vals[0] / &vals[1]).ln().im / rf(p, 2.0 * h);
    let d_h2 = (&vals[2] / &vals[3]).ln().im / rf(p, h);
    // Richardson: central differences have O(h^2) error
    Ok((d_h2 * 4u32 - d_h) / 3u32)
}

/// Phase unwrapping: removes 2-pi jumps from a sequence of raw principal
/// angles. The first element is returned unchanged; each successive output
/// differs from its predecessor by the principal representative of the raw
/// increment.
pub fn unwrap_phase(samples: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(samples.len());
    let mut prev_raw = match samples.first() {
        Some(&v) => v,
        None => return out,
    };
    let mut prev = prev_raw;
    out.push(prev);
    let tau = 2.0 * std::f64::consts::PI;
    for &raw in &samples[1..] {
        let mut d = raw - prev_raw;
        d -= tau * (d / tau).round();
        prev += d;
        prev_raw = raw;
        out.push(prev);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn identity_function_derivative() {
        // f(s) = s on the line: d/dt arg(1/2+it) = Im(i/(1/2+it));
        // at t = 1: Im(i(1/2-i)/(1/4+1)) = (1/2)/(5/4) = 0.4
        let c = ctx();
        let d = arg_derivative_t(|s| Ok(s.clone()), 1.0, &c).unwrap();
        assert!((d.to_f64() - 0.4).abs() < 1e-9, "d = {}", d.to_f64());
    }

    #[test]
    fn constant_has_zero_derivative() {
        let c = ctx();
        let p = c.work_prec();
        let d = arg_derivative_t(|_| Ok(Cx::from_f64(p, -2.5, 1.25)), 3.7, &c).unwrap();
        assert!(d.to_f64().abs() < 1e-20);
    }

    #[test]
    fn scaling_invariance() {
        // arg derivative of c*f equals that of f
        let c = ctx();
        let p = c.work_prec();
        let k = Cx::from_f64(p, -0.3, 1.9);
        let f = |s: &Cx| Ok(&(s * s) + &Cx::from_f64(p, 0.0, 2.0));
        let g = |s: &Cx| f(s).map(|v| &v * &k);
        let a = arg_derivative_t(f, 2.2, &c).unwrap();
        let b = arg_derivative_t(g, 2.2, &c).unwrap();
        let rel = ((a.clone() - &b) / a).abs().to_f64();
        assert!(rel < 10.0 * c.rel_tol, "rel = {rel:e}");
    }

    #[test]
    fn halving_step_converges_quadratically() {
        let c = ctx();
        let mut half = ctx();
        half.diff_step /= 2.0;
        let f = |s: &Cx| Ok(&(s * s) + &Cx::from_f64(c.work_prec(), 1.0, 0.0));
        let a = arg_derivative_t(f, 1.5, &c).unwrap().to_f64();
        let b = arg_derivative_t(f, 1.5, &half).unwrap().to_f64();
        assert!((a - b).abs() < 10.0 * c.rel_tol * a.abs().max(1.0));
    }

    #[test]
    fn zero_too_close_is_reported() {
        let c = ctx();
        let p = c.work_prec();
        // f vanishes at s = 1/2 + 2i; stencil at t = 2 sits on top of it
        let f = |s: &Cx| Ok(s - &Cx::from_f64(p, 0.5, 2.0));
        match arg_derivative_t(f, 2.0, &c) {
            Err(Error::PoleOrZeroTooClose { .. }) => {}
            other => panic!("expected PoleOrZeroTooClose, got {other:?}"),
        }
    }

    #[test]
    fn unwrap_simple_jump() {
        let u = unwrap_phase(&[3.0, -3.0]);
        assert_eq!(u[0], 3.0);
        assert!((u[1] - (2.0 * std::f64::consts::PI - 3.0)).abs() < 1e-15);
    }

    #[test]
    fn unwrap_no_jump() {
        let u = unwrap_phase(&[0.1, 0.2, 0.3]);
        assert_eq!(u, vec![0.1, 0.2, 0.3]);
    }
}
