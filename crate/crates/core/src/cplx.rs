//! Complex arithmetic over multiprecision reals.
//!
//! rug's own complex type needs MPC; the handful of operations this crate
//! uses are implemented directly on pairs of `Float`s instead.

use crate::mp::{pi, rf, Real};
use rug::ops::CompleteRound;
use rug::Float;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A complex number with both components held at the same working precision.
#[derive(Debug, Clone, PartialEq)]
pub struct Cx {
    pub re: Real,
    pub im: Real,
}

impl Cx {
    pub fn new(re: Real, im: Real) -> Self {
        Cx { re, im }
    }

    pub fn from_f64(p: u32, re: f64, im: f64) -> Self {
        Cx::new(rf(p, re), rf(p, im))
    }

    pub fn from_real(re: Real) -> Self {
        let p = re.prec();
        let im = Float::new(p);
        Cx { re, im }
    }

    pub fn zero(p: u32) -> Self {
        Cx::new(Float::new(p), Float::new(p))
    }

    pub fn one(p: u32) -> Self {
        Cx::new(rf(p, 1.0), Float::new(p))
    }

    pub fn i(p: u32) -> Self {
        Cx::new(Float::new(p), rf(p, 1.0))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn conj(&self) -> Self {
        Cx::new(self.re.clone(), (-&self.im).complete(self.im.prec()))
    }

    /// i * self
    pub fn mul_i(&self) -> Self {
        Cx::new((-&self.im).complete(self.im.prec()), self.re.clone())
    }

    pub fn scale(&self, k: &Real) -> Self {
        let p = self.prec();
        Cx::new(
            (&self.re * k).complete(p),
            (&self.im * k).complete(p),
        )
    }

    pub fn unscale(&self, k: &Real) -> Self {
        let p = self.prec();
        Cx::new(
            (&self.re / k).complete(p),
            (&self.im / k).complete(p),
        )
    }

    pub fn norm_sqr(&self) -> Real {
        let p = self.prec();
        let a = (&self.re * &self.re).complete(p);
        let b = (&self.im * &self.im).complete(p);
        a + b
    }

    pub fn abs(&self) -> Real {
        self.re.clone().hypot(&self.im)
    }

    /// Principal argument in (-pi, pi]. arg(0) is returned as 0.
    pub fn arg(&self) -> Real {
        if self.re.is_zero() && self.im.is_zero() {
            return Float::new(self.prec());
        }
        self.im.clone().atan2(&self.re)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_f64s(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let d = self.norm_sqr();
        Cx::new(
            (&self.re / &d).complete(p),
            (-(&self.im / &d).complete(p)).complete(p),
        )
    }

    /// e^self
    pub fn exp(&self) -> Self {
        let m = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(self.im.prec()));
        Cx::new(m.clone() * c, m * s)
    }

    /// Principal branch logarithm: ln|z| + i arg(z).
    pub fn ln(&self) -> Self {
        let p = self.prec();
        let half = rf(p, 0.5);
        Cx::new(self.norm_sqr().ln() * half, self.arg())
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        let r = self.abs();
        let theta = self.arg() / 2u32;
        let m = r.sqrt();
        let (s, c) = theta.sin_cos(Float::new(p));
        Cx::new((&m * &c).complete(p), m * s)
    }

    /// z^w, principal branch via exp(w ln z).
    pub fn powc(&self, w: &Cx) -> Self {
        (w * &self.ln()).exp()
    }

    /// x^w for real x > 0.
    pub fn real_pow(x: &Real, w: &Cx) -> Self {
        let lx = x.clone().ln();
        w.scale(&lx).exp()
    }

    /// n^w for a positive integer n.
    pub fn int_pow(p: u32, n: u64, w: &Cx) -> Self {
        Cx::real_pow(&rf(p, n as f64), w)
    }

    /// cosh(self) = (e^z + e^-z)/2
    pub fn cosh(&self) -> Self {
        let ez = self.exp();
        let enz = (-self).exp();
        (&ez + &enz).scale(&rf(self.prec(), 0.5))
    }

    /// |self - other| / max(|self|, |other|, tiny); gauges agreement of two values.
    pub fn rel_dist(&self, other: &Cx) -> f64 {
        let d = (self - other).abs();
        let m = self.abs().max(&other.abs());
        if m.is_zero() {
            return d.to_f64();
        }
        (d / m).to_f64()
    }

    /// In-place `self += rhs` without allocating temporaries.
    pub fn add_mut(&mut self, rhs: &Cx) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }

    /// In-place `self -= rhs`.
    pub fn sub_mut(&mut self, rhs: &Cx) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }

    /// In-place `self += rhs * k` for real `k`.
    pub fn add_scaled_mut(&mut self, rhs: &Cx, k: &Real) {
        self.re += &rhs.re * k;
        self.im += &rhs.im * k;
    }

    /// Value from polar data.
    pub fn from_polar(r: &Real, theta: &Real) -> Self {
        let p = r.prec().max(theta.prec());
        let (s, c) = theta.clone().sin_cos(Float::new(p));
        Cx::new((r * c).complete(p), (r * s).complete(p))
    }
}

impl fmt::Display for Cx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64s();
        if im >= 0.0 {
            write!(f, "{re}+{im}i")
        } else {
            write!(f, "{re}{im}i")
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Cx> for Cx {
            type Output = Cx;
            fn $method(self, rhs: Cx) -> Cx {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Cx> for Cx {
            type Output = Cx;
            fn $method(self, rhs: &Cx) -> Cx {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Cx> for &Cx {
            type Output = Cx;
            fn $method(self, rhs: Cx) -> Cx {
                $trait::$method(self, &rhs)
            }
        }
    };
}

impl Add<&Cx> for &Cx {
    type Output = Cx;
    fn add(self, rhs: &Cx) -> Cx {
        let p = self.prec().max(rhs.prec());
        Cx::new(
            (&self.re + &rhs.re).complete(p),
            (&self.im + &rhs.im).complete(p),
        )
    }
}

impl Sub<&Cx> for &Cx {
    type Output = Cx;
    fn sub(self, rhs: &Cx) -> Cx {
        let p = self.prec().max(rhs.prec());
        Cx::new(
            (&self.re - &rhs.re).complete(p),
            (&self.im - &rhs.im).complete(p),
        )
    }
}

impl Mul<&Cx> for &Cx {
    type Output = Cx;
    fn mul(self, rhs: &Cx) -> Cx {
        let p = self.prec().max(rhs.prec());
        let ac = (&self.re * &rhs.re).complete(p);
        let bd = (&self.im * &rhs.im).complete(p);
        let ad = (&self.re * &rhs.im).complete(p);
        let bc = (&self.im * &rhs.re).complete(p);
        Cx::new(ac - bd, ad + bc)
    }
}

impl Div<&Cx> for &Cx {
    type Output = Cx;
    fn div(self, rhs: &Cx) -> Cx {
        let p = self.prec().max(rhs.prec());
        let d = rhs.norm_sqr();
        let ac = (&self.re * &rhs.re).complete(p);
        let bd = (&self.im * &rhs.im).complete(p);
        let bc = (&self.im * &rhs.re).complete(p);
        let ad = (&self.re * &rhs.im).complete(p);
        Cx::new((ac + bd) / &d, (bc - ad) / &d)
    }
}

impl Neg for &Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        let p = self.prec();
        Cx::new((-&self.re).complete(p), (-&self.im).complete(p))
    }
}

impl Neg for Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        -&self
    }
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

/// A computed function value together with its relative error estimate.
#[derive(Debug, Clone)]
pub struct SpecialValue {
    pub value: Cx,
    /// Estimated relative error of `value`.
    pub err_estimate: f64,
}

impl SpecialValue {
    pub fn new(value: Cx, err_estimate: f64) -> Self {
        SpecialValue {
            value,
            err_estimate,
        }
    }

    pub fn exact(value: Cx) -> Self {
        SpecialValue {
            value,
            err_estimate: 0.0,
        }
    }
}

/// Half turn: arg of -1, used when normalising principal branches.
pub fn pi_at(p: u32) -> Real {
    pi(p)
}
