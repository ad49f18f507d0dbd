//! Quadrature over the half line.
//!
//! Backend for the MacDonald-function evaluator: integrands decay
//! double-exponentially after the cosh substitution, so the trapezoid rule
//! with grid halving converges geometrically in the number of levels.

use crate::cplx::Cx;
use crate::ctx::EvalContext;
use crate::error::{Error, Result};
use crate::mp::{rf, Real};

/// Integrate `g` over `(0, infinity)`.
///
/// Starts from the trapezoid rule with spacing `h0 = 0.5`, then halves the
/// spacing up to `ctx.quad_levels` times, reusing previous evaluations.
/// Converged when two successive levels agree to `ctx.rel_tol`; the achieved
/// estimate is returned alongside the value.
pub fn semi_infinite<G>(g: G, ctx: &EvalContext) -> Result<(Cx, f64)>
where
    G: Fn(&Real) -> Cx,
{
    let p = ctx.work_prec();
    let eps = ctx.trunc_eps();
    let h0 = rf(p, 0.5);

    // Level 0: find the truncation point. Terms must drop below
    // eps * running-scale three times in a row before the tail is cut.
    let g0 = g(&rf(p, 0.0));
    let mut scale = g0.abs();
    let mut sum = g0.scale(&rf(p, 0.5));
    let mut terms: u64 = 1;
    let mut low_count = 0;
    let mut j = 1u64;
    let u_max;
    loop {
        let u = (h0.clone()) * j;
        let v = g(&u);
        let va = v.abs();
        if va > scale {
            scale = va.clone();
        }
        sum = &sum + &v;
        terms += 1;
        if terms > ctx.sum_term_cap {
            return Err(Error::TermCapExceeded {
                what: "semi_infinite quadrature",
                cap: ctx.sum_term_cap,
            });
        }
        let small = va.to_f64() <= eps * scale.to_f64().max(f64::MIN_POSITIVE);
        if small {
            low_count += 1;
            if low_count >= 3 {
                u_max = (h0.clone()) * j;
                break;
            }
        } else {
            low_count = 0;
        }
        j += 1;
    }

    let mut integral = sum.scale(&h0);
    let mut h = h0;
    let mut err = f64::INFINITY;
    for _level in 1..=ctx.quad_levels {
        h /= 2u32;
        // new points are the odd multiples of the refined spacing
        let mut odd_sum = Cx::zero(p);
        let mut k = 1u64;
        loop {
            let u = (h.clone()) * k;
            if u > u_max {
                break;
            }
            odd_sum = &odd_sum + &g(&u);
            terms += 1;
            if terms > ctx.sum_term_cap {
                return Err(Error::TermCapExceeded {
                    what: "semi_infinite quadrature",
                    cap: ctx.sum_term_cap,
                });
            }
            k += 2;
        }
        let refined = &integral.scale(&rf(p, 0.5)) + &odd_sum.scale(&h);
        let delta = (&refined - &integral).abs().to_f64();
        let denom = refined.abs().to_f64().max(f64::MIN_POSITIVE);
        err = delta / denom;
        integral = refined;
        if err <= ctx.rel_tol {
            return Ok((integral, err));
        }
    }
    Err(Error::NoConvergence(format!(
        "quadrature levels exhausted, last relative change {err:.3e}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::pi;

    fn ctx() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn gaussian_integral() {
        // int_0^inf e^{-u^2} du = sqrt(pi)/2
        let c = ctx();
        let p = c.work_prec();
        let (v, err) = semi_infinite(
            |u| {
                let e = (-(u.clone() * u)).exp();
                Cx::new(e, rf(p, 0.0))
            },
            &c,
        )
        .unwrap();
        let expect = pi(p).sqrt() / 2u32;
        let rel = ((v.re.clone() - &expect) / expect).abs().to_f64().abs();
        assert!(rel < 1e-13, "rel = {rel:e}");
        assert!(err <= c.rel_tol);
        assert!(v.im.to_f64().abs() < 1e-30);
    }

    #[test]
    fn bessel_k0_of_one() {
        // int_0^inf e^{-cosh u} du = K_0(1); oracle value comes from the
        // ascending series computed in tests/oracles.rs, frozen here.
        let c = ctx();
        let p = c.work_prec();
        let (v, _) = semi_infinite(
            |u| {
                let e = (-(u.clone().cosh())).exp();
                Cx::new(e, rf(p, 0.0))
            },
            &c,
        )
        .unwrap();
        let expect = 0.421_024_438_240_708_333;
        assert!((v.re.to_f64() - expect).abs() < 1e-13);
    }

    #[test]
    fn linearity() {
        let c = ctx();
        let p = c.work_prec();
        let g1 = |u: &Real| Cx::new((-(u.clone() * u)).exp(), rf(p, 0.0));
        let g2 = |u: &Real| Cx::new((-(u.clone().cosh())).exp(), rf(p, 0.0));
        let (a, _) = semi_infinite(g1, &c).unwrap();
        let (b, _) = semi_infinite(g2, &c).unwrap();
        let (s, _) = semi_infinite(|u| &g1(u) + &g2(u), &c).unwrap();
        assert!(s.rel_dist(&(&a + &b)) < c.rel_tol);
    }
}
