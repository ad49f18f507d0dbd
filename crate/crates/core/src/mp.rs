//! Thin helpers over the multiprecision real type.
//!
//! All higher modules construct values at the working precision of an
//! [`crate::ctx::EvalContext`] and keep every intermediate at that precision.

use rug::float::Constant;
use rug::ops::CompleteRound;
use rug::Float;

/// The multiprecision real scalar used throughout the crate.
pub type Real = Float;

/// A real value at precision `p`.
pub fn rf(p: u32, x: f64) -> Real {
    Float::with_val(p, x)
}

/// A real value from an integer at precision `p`.
pub fn ri(p: u32, n: i64) -> Real {
    Float::with_val(p, n)
}

pub fn pi(p: u32) -> Real {
    Float::with_val(p, Constant::Pi)
}

pub fn ln_pi(p: u32) -> Real {
    pi(p).ln()
}

pub fn sqrt_pi(p: u32) -> Real {
    pi(p).sqrt()
}

pub fn two_pi(p: u32) -> Real {
    pi(p) * 2u32
}

/// Euler–Mascheroni constant at precision `p`.
pub fn euler_gamma(p: u32) -> Real {
    Float::with_val(p, Constant::Euler)
}

/// ln of a small positive integer at precision `p`.
pub fn ln_u64(p: u32, n: u64) -> Real {
    Float::with_val(p, n).ln()
}

/// `x^n` for integer `n` keeping `x`'s precision.
pub fn powi(x: &Real, n: i32) -> Real {
    x.pow(n).complete(x.prec())
}

/// Round a principal-branch angle into (-pi, pi].
pub fn principal_angle(theta: &Real) -> Real {
    let p = theta.prec();
    let tau = two_pi(p);
    let half = pi(p);
    let mut a = theta.clone();
    // k = floor((theta + pi) / tau) turns of 2*pi to remove
    let k = Float::with_val(p, (&a + &half).complete(p) / &tau).floor();
    a -= k * &tau;
    // land exactly in (-pi, pi]
    if a > half {
        a -= &tau;
    }
    let neg_half = -pi(p);
    if a <= neg_half {
        a += &tau;
    }
    a
}
