//! Riemann zeta, Hurwitz zeta and the Dirichlet L function for the
//! non-trivial character mod 4, all by Euler–Maclaurin summation.
//!
//! Heads over integer indices go through a shared multiplicative power
//! table: `n^{-s}` is computed by one complex exponential per prime and one
//! complex multiplication per composite. Tails use the Euler–Maclaurin
//! correction series with adaptive order and a divergence guard.

use crate::bernoulli::{tables, CoeffTables};
use crate::cplx::{Cx, SpecialValue};
use crate::ctx::EvalContext;
use crate::error::{Error, Result};
use crate::mp::{rf, Real};
use rug::Float;
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

fn build_spf(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            let mut j = i * i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

fn spf_upto(n: usize) -> Arc<Vec<u32>> {
    static CELL: OnceLock<RwLock<Arc<Vec<u32>>>> = OnceLock::new();
    let lock = CELL.get_or_init(|| RwLock::new(Arc::new(build_spf(1 << 12))));
    {
        let guard = lock.read().unwrap();
        if guard.len() > n {
            return guard.clone();
        }
    }
    let mut guard = lock.write().unwrap();
    if guard.len() <= n {
        *guard = Arc::new(build_spf((n + 1).next_power_of_two()));
    }
    guard.clone()
}

thread_local! {
    static LN_CACHE: RefCell<HashMap<(u32, u32), Real>> = RefCell::new(HashMap::new());
}

fn ln_int(p: u32, n: u32) -> Real {
    LN_CACHE.with(|cell| {
        let mut map = cell.borrow_mut();
        map.entry((p, n))
            .or_insert_with(|| Float::with_val(p, n).ln())
            .clone()
    })
}

/// Table of `n^{-s}` for n = 1..=n_max (index 0 is unused and holds zero).
pub(crate) fn power_table(s: &Cx, n_max: u64, p: u32) -> Vec<Cx> {
    let n_max = n_max as usize;
    let spf = spf_upto(n_max);
    let mut pows = Vec::with_capacity(n_max + 1);
    pows.push(Cx::zero(p));
    if n_max >= 1 {
        pows.push(Cx::one(p));
    }
    let ms = -s;
    for n in 2..=n_max {
        let f = spf[n] as usize;
        if f == n {
            let val = ms.scale(&ln_int(p, n as u32)).exp();
            pows.push(val);
        } else {
            let val = &pows[f] * &pows[n / f];
            pows.push(val);
        }
    }
    pows
}

/// Euler–Maclaurin parameters for height `|Im s|` at working precision `p`.
pub(crate) fn em_params(p: u32, im_abs: f64) -> (u64, usize) {
    let kmax = ((p as f64 + 10.0) / 3.0).ceil() as usize + 4;
    let n = (0.455 * (im_abs + 2.0 * kmax as f64)).ceil() as u64 + 8;
    (n, kmax)
}

/// `sum_{n >= 0} (x0 + n)^{-s}` by the Euler–Maclaurin formula, valid for
/// all `sigma` reachable with the adaptive correction order.
///
/// With `subtract_pole` the leading `x0^{1-s}/(s-1)` is replaced by
/// `(x0^{1-s} - 1)/(s-1)`, turning the result into the tail of
/// `zeta(s, .) - 1/(s-1)` for pole-free evaluation near s = 1.
pub(crate) fn em_tail(
    s: &Cx,
    x0: &Real,
    coeffs: &CoeffTables,
    eps: f64,
    subtract_pole: bool,
) -> Result<(Cx, f64)> {
    let p = s.prec();
    let one = Cx::one(p);
    let ms = -s;
    let x0_ms = Cx::real_pow(x0, &ms); // x0^{-s}
    let sm1 = s - &one;
    let x0_1ms = x0_ms.scale(x0); // x0^{1-s}
    let t1 = if subtract_pole {
        &(&x0_1ms - &one) / &sm1
    } else {
        &x0_1ms / &sm1
    };
    let t2 = x0_ms.scale(&rf(p, 0.5));
    let scale0 = t1.abs().to_f64().abs() + t2.abs().to_f64().abs() + 1e-300;
    let mut acc = &t1 + &t2;

    let x0_m2 = {
        let inv = (rf(p, 1.0)) / x0;
        inv.clone() * inv
    };
    let mut pw = x0_1ms; // becomes x0^{1-s-2k} after k scalings
    let mut rising = s.clone(); // (s)_{2k-1}, starts at (s)_1 = s
    let mut prev_mag = f64::INFINITY;
    let kmax = coeffs.em.len();
    for k in 1..=kmax {
        pw = pw.scale(&x0_m2);
        if k > 1 {
            let a = rf(p, (2 * k - 3) as f64);
            let b = rf(p, (2 * k - 2) as f64);
            let f1 = s + &Cx::from_real(a);
            let f2 = s + &Cx::from_real(b);
            rising = &(&rising * &f1) * &f2;
        }
        let term = &pw.scale(&coeffs.em[k - 1]) * &rising;
        acc = &acc + &term;
        let mag = term.abs().to_f64().abs();
        let local_scale = acc.abs().to_f64().abs() + scale0;
        if mag <= eps * local_scale {
            return Ok((acc, mag / local_scale));
        }
        if k > 4 && mag > prev_mag * 1.01 {
            return Err(Error::NoConvergence(format!(
                "Euler-Maclaurin corrections diverge at order {k} for x0 = {}",
                x0.to_f64()
            )));
        }
        prev_mag = mag;
    }
    Err(Error::NoConvergence(
        "Euler-Maclaurin correction order exhausted".into(),
    ))
}

fn guard_not_pole(s: &Cx, func: &'static str) -> Result<()> {
    let p = s.prec();
    let one = Cx::one(p);
    if (s - &one).abs().to_f64() == 0.0 {
        return Err(Error::Pole {
            func,
            at: format!("{s}"),
        });
    }
    Ok(())
}

/// Riemann zeta along with a relative error estimate. `subtract_pole`
/// computes `zeta(s) - 1/(s-1)` instead, which is entire.
pub(crate) fn zeta_em(s: &Cx, ctx: &EvalContext, subtract_pole: bool) -> Result<(Cx, f64)> {
    let p = ctx.work_prec();
    let eps = ctx.trunc_eps();
    let im_abs = s.im.to_f64().abs();
    let (mut n, kmax) = em_params(p, im_abs);
    let coeffs = tables(p, kmax);
    for _attempt in 0..4 {
        if 2 * n > ctx.sum_term_cap {
            return Err(Error::TermCapExceeded {
                what: "zeta Euler-Maclaurin head",
                cap: ctx.sum_term_cap,
            });
        }
        let pows = power_table(s, n - 1, p);
        let mut head = Cx::zero(p);
        for pw in pows.iter().skip(1) {
            head.add_mut(pw);
        }
        match em_tail(s, &rf(p, n as f64), &coeffs, eps, subtract_pole) {
            Ok((tail, err)) => return Ok((&head + &tail, err)),
            Err(Error::NoConvergence(_)) => {
                n = n * 8 / 5;
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoConvergence(
        "zeta Euler-Maclaurin failed after escalations".into(),
    ))
}

/// Riemann zeta function, analytically continued to all `s != 1`.
pub fn zeta_c(s: &Cx, ctx: &EvalContext) -> Result<SpecialValue> {
    guard_not_pole(s, "zeta")?;
    let (v, err) = zeta_em(s, ctx, false)?;
    Ok(SpecialValue::new(v, err))
}

/// `zeta(s) - 1/(s-1)`: the entire part of zeta, stable arbitrarily close
/// to the pole.
pub fn zeta_minus_pole(s: &Cx, ctx: &EvalContext) -> Result<SpecialValue> {
    let (v, err) = zeta_em(s, ctx, true)?;
    Ok(SpecialValue::new(v, err))
}

/// Hurwitz zeta `zeta(s, a)` for `0 < a <= 1`, all `s != 1`.
pub fn hurwitz_zeta(s: &Cx, a: f64, ctx: &EvalContext) -> Result<SpecialValue> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!("hurwitz a = {a} outside (0, 1]")));
    }
    guard_not_pole(s, "hurwitz_zeta")?;
    let p = ctx.work_prec();
    let eps = ctx.trunc_eps();
    let im_abs = s.im.to_f64().abs();
    let (mut m, kmax) = em_params(p, im_abs);
    let coeffs = tables(p, kmax);
    let ms = -s;
    for _attempt in 0..4 {
        if 2 * m > ctx.sum_term_cap {
            return Err(Error::TermCapExceeded {
                what: "hurwitz Euler-Maclaurin head",
                cap: ctx.sum_term_cap,
            });
        }
        let mut head = Cx::zero(p);
        for k in 0..m {
            let base = rf(p, k as f64) + rf(p, a);
            head = &head + &Cx::real_pow(&base, &ms);
        }
        let x0 = rf(p, m as f64) + rf(p, a);
        match em_tail(s, &x0, &coeffs, eps, false) {
            Ok((tail, err)) => return Ok(SpecialValue::new(&head + &tail, err)),
            Err(Error::NoConvergence(_)) => {
                m = m * 8 / 5;
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoConvergence(
        "hurwitz Euler-Maclaurin failed after escalations".into(),
    ))
}

/// Internal fast path for `L_{-4}(s) = 4^{-s} (zeta(s,1/4) - zeta(s,3/4))`:
/// the head runs over odd integers through the shared power table, the two
/// Hurwitz tails are summed explicitly.
pub(crate) fn l4_em(s: &Cx, ctx: &EvalContext) -> Result<(Cx, f64)> {
    let p = ctx.work_prec();
    let eps = ctx.trunc_eps();
    let im_abs = s.im.to_f64().abs();
    let (mut m, kmax) = em_params(p, im_abs);
    let coeffs = tables(p, kmax);
    for _attempt in 0..4 {
        if 8 * m > ctx.sum_term_cap {
            return Err(Error::TermCapExceeded {
                what: "L-4 Euler-Maclaurin head",
                cap: ctx.sum_term_cap,
            });
        }
        let pows = power_table(s, 4 * m - 1, p);
        let mut head = Cx::zero(p);
        let mut n = 1usize;
        while n < 4 * m as usize {
            match n % 4 {
                1 => head.add_mut(&pows[n]),
                3 => head.sub_mut(&pows[n]),
                _ => {}
            }
            n += 2;
        }
        let t14 = em_tail(s, &(rf(p, m as f64) + rf(p, 0.25)), &coeffs, eps, false);
        let t34 = em_tail(s, &(rf(p, m as f64) + rf(p, 0.75)), &coeffs, eps, false);
        match (t14, t34) {
            (Ok((a, ea)), Ok((b, eb))) => {
                let four_ms = &pows[4];
                let tail = &four_ms * &(&a - &b);
                return Ok((&head + &tail, ea.max(eb)));
            }
            (Err(Error::NoConvergence(_)), _) | (_, Err(Error::NoConvergence(_))) => {
                m = m * 8 / 5;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
    }
    Err(Error::NoConvergence(
        "L-4 Euler-Maclaurin failed after escalations".into(),
    ))
}

/// Dirichlet L function for the odd character mod 4 (an entire function).
pub fn l_minus4(s: &Cx, ctx: &EvalContext) -> Result<SpecialValue> {
    let (v, err) = l4_em(s, ctx)?;
    Ok(SpecialValue::new(v, err))
}

/// `(zeta(2s), zeta(2s-1))` off one shared power table; the pair feeds every
/// symmetrised-zeta combination. `n^{-(2s-1)} = n * n^{-2s}`.
pub(crate) fn zeta_pair_at_2s(s: &Cx, ctx: &EvalContext) -> Result<(Cx, Cx)> {
    let p = ctx.work_prec();
    let eps = ctx.trunc_eps();
    let s2 = s + s;
    let one = Cx::one(p);
    let s2m1 = &s2 - &one;
    guard_not_pole(&s2, "zeta(2s)")?;
    guard_not_pole(&s2m1, "zeta(2s-1)")?;
    let im_abs = s2.im.to_f64().abs();
    let (mut n, kmax) = em_params(p, im_abs);
    let coeffs = tables(p, kmax);
    for _attempt in 0..4 {
        if 2 * n > ctx.sum_term_cap {
            return Err(Error::TermCapExceeded {
                what: "zeta pair Euler-Maclaurin head",
                cap: ctx.sum_term_cap,
            });
        }
        let pows = power_table(&s2, n - 1, p);
        let mut head_a = Cx::zero(p);
        let mut head_b = Cx::zero(p);
        for (k, pw) in pows.iter().enumerate().skip(1) {
            head_a.add_mut(pw);
            head_b.add_scaled_mut(pw, &rf(p, k as f64));
        }
        let x0 = rf(p, n as f64);
        let ta = em_tail(&s2, &x0, &coeffs, eps, false);
        let tb = em_tail(&s2m1, &x0, &coeffs, eps, false);
        match (ta, tb) {
            (Ok((a, _)), Ok((b, _))) => {
                return Ok((&head_a + &a, &head_b + &b));
            }
            (Err(Error::NoConvergence(_)), _) | (_, Err(Error::NoConvergence(_))) => {
                n = n * 8 / 5;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
    }
    Err(Error::NoConvergence(
        "zeta pair Euler-Maclaurin failed after escalations".into(),
    ))
}
