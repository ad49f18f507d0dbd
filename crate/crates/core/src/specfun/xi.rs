//! The symmetrised zeta function `xi1(z) = pi^{-z/2} Gamma(z/2) zeta(z)`,
//! invariant under z -> 1 - z.

use crate::cplx::{Cx, SpecialValue};
use crate::ctx::EvalContext;
use crate::error::{Error, Result};
use crate::mp::{ln_pi, rf};
use crate::specfun::gamma::gamma_value;
use crate::specfun::zeta::zeta_c;

/// xi1(z); simple poles at z = 0 and z = 1.
pub fn xi1(z: &Cx, ctx: &EvalContext) -> Result<SpecialValue> {
    let p = ctx.work_prec();
    let at_pole = |w: &Cx| w.abs().to_f64() < 1e-14;
    let one = Cx::one(p);
    if at_pole(z) || at_pole(&(z - &one)) {
        return Err(Error::Pole {
            func: "xi1",
            at: format!("{z}"),
        });
    }
    let half = rf(p, 0.5);
    let zeta = zeta_c(z, ctx)?;
    let g = gamma_value(&z.scale(&half), ctx)?;
    // pi^{-z/2} = exp(-(z/2) ln pi)
    let pref = (-z.scale(&half)).scale(&ln_pi(p)).exp();
    let v = &(&pref * &g) * &zeta.value;
    Ok(SpecialValue::new(v, zeta.err_estimate + ctx.trunc_eps()))
}
