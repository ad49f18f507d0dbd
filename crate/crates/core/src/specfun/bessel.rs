//! Modified Bessel function of the second kind with complex order, through
//! the integral representation K_nu(x) = int_0^inf e^{-x cosh u} cosh(nu u) du.

use crate::cplx::{Cx, SpecialValue};
use crate::ctx::EvalContext;
use crate::error::{Error, Result};
use crate::mp::Real;
use crate::quad::semi_infinite;
use rug::Float;

/// Largest |Im nu| the quadrature grid is validated for.
pub const MAX_IM_ORDER: f64 = 40.0;

/// K_nu(x) for real x > 0 and complex order nu with |Im nu| <= 40.
/// Symmetric in nu -> -nu by construction.
pub fn bessel_k_complex_order(nu: &Cx, x: &Real, ctx: &EvalContext) -> Result<SpecialValue> {
    if !(x.to_f64() > 0.0) {
        return Err(Error::Domain(format!(
            "bessel K needs x > 0, got {}",
            x.to_f64()
        )));
    }
    if nu.im.to_f64().abs() > MAX_IM_ORDER {
        return Err(Error::Domain(format!(
            "bessel K order Im nu = {} outside validated band |Im nu| <= {MAX_IM_ORDER}",
            nu.im.to_f64()
        )));
    }
    let p = ctx.work_prec();
    let half = crate::mp::rf(p, 0.5);
    let (v, err) = semi_infinite(
        |u| {
            // e^{-x cosh u} (real, the decay) * cosh(nu u) (complex)
            let damp = (-(x.clone() * u.clone().cosh())).exp();
            let w = nu.scale(u).exp();
            let c = (&w + &w.recip()).scale(&half);
            c.scale(&damp)
        },
        ctx,
    )?;
    Ok(SpecialValue::new(v, err))
}

/// First term of the large-x asymptotic, sqrt(pi/(2x)) e^{-x}; the tests
/// compare the quadrature against it within the size of the next term.
pub fn bessel_k_leading_asymptotic(p: u32, x: &Real) -> Real {
    let num = crate::mp::pi(p);
    let den = Float::with_val(p, 2) * x;
    (num / den).sqrt() * (-x.clone()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::{pi, rf};

    fn ctx() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn half_integer_closed_form() {
        // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}; at x = 3
        let c = ctx();
        let p = c.work_prec();
        let v = bessel_k_complex_order(&Cx::from_f64(p, 0.5, 0.0), &rf(p, 3.0), &c).unwrap();
        let expect = (pi(p) / rf(p, 6.0)).sqrt() * rf(p, -3.0).exp();
        let rel = ((v.value.re.clone() - &expect) / expect).abs().to_f64();
        assert!(rel < 1e-12, "rel = {rel:e}");
        assert!((v.value.re.to_f64() - 0.036_089_404_5).abs() < 1e-9);
    }

    #[test]
    fn symmetric_in_order_sign() {
        let c = ctx();
        let p = c.work_prec();
        let x = crate::mp::two_pi(p);
        let a = bessel_k_complex_order(&Cx::from_f64(p, 1.0, 5.0), &x, &c).unwrap();
        let b = bessel_k_complex_order(&Cx::from_f64(p, -1.0, -5.0), &x, &c).unwrap();
        assert!(a.value.rel_dist(&b.value) < 1e-12);
    }

    #[test]
    fn domain_checks() {
        let c = ctx();
        let p = c.work_prec();
        assert!(bessel_k_complex_order(&Cx::from_f64(p, 0.0, 41.0), &rf(p, 2.0), &c).is_err());
        assert!(bessel_k_complex_order(&Cx::from_f64(p, 0.0, 0.0), &rf(p, 0.0), &c).is_err());
    }

    #[test]
    fn leading_asymptotic_within_its_own_bound() {
        // For x >= 1.3 |nu| and the second asymptotic term small, the
        // quadrature agrees with the first term within twice that term.
        let c = ctx();
        let p = c.work_prec();
        let cases = [(0.3f64, 0.2f64), (1.0, 2.0), (0.0, 5.0)];
        for (re, im) in cases {
            let nu = Cx::from_f64(p, re, im);
            let nu_abs = (re * re + im * im).sqrt();
            // push x up so the second term a1/x = (4 nu^2 - 1)/(8x) is < 1/4
            let a1 = {
                let four_nu_sq = 4.0 * (re * re - im * im);
                let a1_re = (four_nu_sq - 1.0) / 8.0;
                let a1_im = 4.0 * 2.0 * re * im / 8.0;
                (a1_re * a1_re + a1_im * a1_im).sqrt()
            };
            let x_f = (1.3 * nu_abs).max(4.0 * a1).max(8.0);
            let x = rf(p, x_f);
            let v = bessel_k_complex_order(&nu, &x, &c).unwrap().value;
            let lead = bessel_k_leading_asymptotic(p, &x);
            let rel = ((v.re.clone() - &lead) / &lead).abs().to_f64();
            let bound = 2.0 * a1 / x_f;
            assert!(
                rel <= bound.max(1e-10),
                "nu = {re}+{im}i, x = {x_f}: rel = {rel:e} > bound = {bound:e}"
            );
        }
    }
}
