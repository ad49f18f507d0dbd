//! Complex Gamma via the Stirling series with argument shifting.
//!
//! `ln_gamma` produces the analytic branch on the upper half plane and the
//! positive reals (values for `Im z < 0` come from conjugation), which is
//! what the Hardy-style phase rotations need: continuous in t, no mod-2pi
//! jumps. `gamma_c` shifts through a plain product, so it never pays for
//! logarithms.

use crate::bernoulli::tables;
use crate::cplx::{Cx, SpecialValue};
use crate::ctx::EvalContext;
use crate::error::{Error, Result};
use crate::mp::{rf, two_pi, Real};

fn stirling_threshold(p: u32) -> f64 {
    20.0f64.max(0.30 * (p as f64 + 10.0))
}

/// Stirling series for ln Gamma, valid for |w| above the threshold and
/// Re w > 0.
fn ln_gamma_stirling(w: &Cx, ctx: &EvalContext) -> Result<Cx> {
    let p = ctx.work_prec();
    let kmax = (p as f64 / 2.0).ceil() as usize + 8;
    let coeffs = tables(p, kmax);
    let half = rf(p, 0.5);
    let lnw = w.ln();
    let ln_tau_half = two_pi(p).ln() * &half;
    // (w - 1/2) ln w - w + ln(2 pi)/2
    let mut acc = &(w - &Cx::from_real(half)) * &lnw;
    acc.sub_mut(w);
    acc.re += &ln_tau_half;

    let winv = w.recip();
    let winv2 = &winv * &winv;
    let mut pw = winv;
    let eps_abs = ctx.trunc_eps() * 0.1;
    let mut prev = f64::INFINITY;
    for k in 1..=coeffs.stirling.len() {
        let term = pw.scale(&coeffs.stirling[k - 1]);
        acc.add_mut(&term);
        let mag = term.abs().to_f64();
        if mag <= eps_abs {
            return Ok(acc);
        }
        if mag > prev * 1.01 {
            return Err(Error::NoConvergence(format!(
                "Stirling series diverges at order {k} for |w| = {:.3}",
                w.abs().to_f64()
            )));
        }
        prev = mag;
        pw = &pw * &winv2;
    }
    Err(Error::NoConvergence("Stirling order exhausted".into()))
}

fn is_nonpositive_integer(z: &Cx) -> bool {
    if !z.im.is_zero() {
        return false;
    }
    let re = z.re.to_f64();
    re <= 0.0 && z.re.clone().fract().is_zero()
}

fn shift_count(z: &Cx, thr: f64) -> u32 {
    let re = z.re.to_f64();
    let im = z.im.to_f64().abs();
    let mut k = if re < 0.5 { (0.5 - re).ceil() as u32 } else { 0 };
    if im < thr {
        let need = (thr * thr - im * im).sqrt() - re;
        if need > k as f64 {
            k = need.ceil() as u32;
        }
    }
    k
}

/// ln Gamma on the analytic branch that is real on the positive reals.
///
/// Requires `Re z > 0` or `Im z != 0`.
pub fn ln_gamma(z: &Cx, ctx: &EvalContext) -> Result<Cx> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            func: "ln_gamma",
            at: format!("{z}"),
        });
    }
    if z.im.is_sign_negative() && !z.im.is_zero() {
        return Ok(ln_gamma(&z.conj(), ctx)?.conj());
    }
    if z.im.is_zero() && z.re.to_f64() <= 0.0 {
        return Err(Error::Domain(
            "ln_gamma needs Re z > 0 or Im z != 0".into(),
        ));
    }
    let p = ctx.work_prec();
    let thr = stirling_threshold(p);
    let k = shift_count(z, thr);
    let shifted = z + &Cx::from_f64(p, k as f64, 0.0);
    let mut acc = ln_gamma_stirling(&shifted, ctx)?;
    // ln Gamma(z) = ln Gamma(z+k) - sum_j ln(z+j); principal logs are exact
    // for the analytic branch anywhere in the (closed) upper half plane
    for j in 0..k {
        let zj = z + &Cx::from_f64(p, j as f64, 0.0);
        acc.sub_mut(&zj.ln());
    }
    Ok(acc)
}

/// Gamma(z) as a value: Stirling after an integer shift performed as one
/// complex product. Poles raise `Error::Pole`.
pub fn gamma_value(z: &Cx, ctx: &EvalContext) -> Result<Cx> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            func: "gamma",
            at: format!("{z}"),
        });
    }
    if z.im.is_sign_negative() && !z.im.is_zero() {
        return Ok(gamma_value(&z.conj(), ctx)?.conj());
    }
    let p = ctx.work_prec();
    let thr = stirling_threshold(p);
    let k = shift_count(z, thr);
    let shifted = z + &Cx::from_f64(p, k as f64, 0.0);
    let lg = ln_gamma_stirling(&shifted, ctx)?;
    let mut val = lg.exp();
    if k > 0 {
        let mut prod = z.clone();
        for j in 1..k {
            let zj = z + &Cx::from_f64(p, j as f64, 0.0);
            prod = &prod * &zj;
        }
        val = &val / &prod;
    }
    Ok(val)
}

/// Gamma with an error estimate, the library-facing entry point.
pub fn gamma_c(s: &Cx, ctx: &EvalContext) -> Result<SpecialValue> {
    let v = gamma_value(s, ctx)?;
    Ok(SpecialValue::new(v, ctx.trunc_eps()))
}

/// Magnitude |Gamma(1/2 + it)| = sqrt(pi / cosh(pi t)): closed form used as
/// an independent cross-check by the tests.
pub fn gamma_half_line_abs(p: u32, t: f64) -> Real {
    let pit = crate::mp::pi(p) * rf(p, t);
    (crate::mp::pi(p) / pit.cosh()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::sqrt_pi;

    fn ctx() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn gamma_half_is_sqrt_pi() {
        let c = ctx();
        let p = c.work_prec();
        let v = gamma_value(&Cx::from_f64(p, 0.5, 0.0), &c).unwrap();
        let rel = ((v.re.clone() - sqrt_pi(p)) / sqrt_pi(p)).abs().to_f64();
        assert!(rel < 1e-30, "rel = {rel:e}");
        assert!(v.im.to_f64().abs() < 1e-30);
    }

    #[test]
    fn gamma_five_is_24() {
        let c = ctx();
        let p = c.work_prec();
        let v = gamma_value(&Cx::from_f64(p, 5.0, 0.0), &c).unwrap();
        assert!((v.re.to_f64() - 24.0).abs() < 1e-25);
    }

    #[test]
    fn gamma_pole_detection() {
        let c = ctx();
        let p = c.work_prec();
        assert!(matches!(
            gamma_value(&Cx::from_f64(p, 0.0, 0.0), &c),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            gamma_value(&Cx::from_f64(p, -3.0, 0.0), &c),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn recurrence_holds() {
        let c = ctx();
        let p = c.work_prec();
        let z = Cx::from_f64(p, 0.3, 7.2);
        let a = gamma_value(&(&z + &Cx::one(p)), &c).unwrap();
        let b = &gamma_value(&z, &c).unwrap() * &z;
        assert!(a.rel_dist(&b) < 1e-30);
    }

    #[test]
    fn magnitude_on_critical_line_matches_closed_form() {
        let c = ctx();
        let p = c.work_prec();
        let t = 14.1347;
        let v = gamma_value(&Cx::from_f64(p, 0.5, t), &c).unwrap();
        let expect = gamma_half_line_abs(p, t);
        let rel = ((v.abs() - &expect) / expect).abs().to_f64();
        assert!(rel < 1e-10, "rel = {rel:e}");
    }

    #[test]
    fn ln_gamma_exponentiates_to_gamma() {
        let c = ctx();
        let p = c.work_prec();
        let z = Cx::from_f64(p, 0.25, 3.5);
        let lg = ln_gamma(&z, &c).unwrap().exp();
        let g = gamma_value(&z, &c).unwrap();
        assert!(lg.rel_dist(&g) < 1e-30);
    }

    #[test]
    fn ln_gamma_is_continuous_in_t() {
        // walk up the line z = 1/4 + it/2 across the shift threshold and
        // require small increments of the imaginary part
        let c = ctx();
        let p = c.work_prec();
        let mut prev = ln_gamma(&Cx::from_f64(p, 0.25, 10.0), &c).unwrap().im.to_f64();
        let mut t = 10.05f64;
        while t < 120.0 {
            let cur = ln_gamma(&Cx::from_f64(p, 0.25, t), &c).unwrap().im.to_f64();
            assert!((cur - prev).abs() < 0.5, "jump at t = {t}: {prev} -> {cur}");
            prev = cur;
            t += 0.05;
        }
    }
}
