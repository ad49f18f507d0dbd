//! Bernoulli-number coefficient tables.
//!
//! The Euler–Maclaurin tails and the Stirling series both consume ratios of
//! Bernoulli numbers. The numbers are generated once as exact rationals and
//! converted to multiprecision reals per working precision on demand.

use crate::mp::Real;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rug::Float;
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::{Mutex, OnceLock};

/// Exact `B_0 .. B_n` via the defining recurrence
/// `sum_{j<=m} C(m+1, j) B_j = 0`.
fn bernoulli_rationals(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        if m > 1 && m % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        // C(m+1, j) running binomial
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate().take(m) {
            if !bj.is_zero() {
                acc += BigRational::from(binom.clone()) * bj;
            }
            // C(m+1, j+1) = C(m+1, j) * (m+1-j)/(j+1)
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from(BigInt::from(m + 1)));
    }
    b
}

fn bernoulli_exact() -> &'static Mutex<Vec<BigRational>> {
    static CELL: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    CELL.get_or_init(|| Mutex::new(bernoulli_rationals(64)))
}

fn rational_to_real(q: &BigRational, p: u32) -> Real {
    let num = Float::parse(q.numer().to_string())
        .map(|v| Float::with_val(p, v))
        .unwrap();
    let den = Float::parse(q.denom().to_string())
        .map(|v| Float::with_val(p, v))
        .unwrap();
    num / den
}

#[derive(Clone)]
pub struct CoeffTables {
    /// `B_{2k} / (2k)!` for k = 1..=kmax (index 0 holds k = 1).
    pub em: Rc<Vec<Real>>,
    /// `B_{2k} / ((2k)(2k-1))` for k = 1..=kmax.
    pub stirling: Rc<Vec<Real>>,
}

thread_local! {
    static TABLES: RefCell<HashMap<(u32, usize), CoeffTables>> = RefCell::new(HashMap::new());
}

/// Coefficient tables with at least `kmax` entries at precision `p`.
pub fn tables(p: u32, kmax: usize) -> CoeffTables {
    // bucket kmax so the cache holds a handful of sizes, not one per call
    let bucket = kmax.next_power_of_two().max(32);
    TABLES.with(|cell| {
        let mut map = cell.borrow_mut();
        if let Some(t) = map.get(&(p, bucket)) {
            return t.clone();
        }
        {
            let mut guard = bernoulli_exact().lock().unwrap();
            if guard.len() < 2 * bucket + 1 {
                *guard = bernoulli_rationals(2 * bucket);
            }
        }
        let guard = bernoulli_exact().lock().unwrap();
        let mut em = Vec::with_capacity(bucket);
        let mut st = Vec::with_capacity(bucket);
        let mut fact = BigInt::one(); // (2k)!
        for k in 1..=bucket {
            fact = fact * BigInt::from(2 * k - 1) * BigInt::from(2 * k);
            let b2k = &guard[2 * k];
            em.push(rational_to_real(&(b2k / BigRational::from(fact.clone())), p));
            st.push(rational_to_real(
                &(b2k / BigRational::from(BigInt::from(2 * k * (2 * k - 1)))),
                p,
            ));
        }
        let t = CoeffTables {
            em: Rc::new(em),
            stirling: Rc::new(st),
        };
        map.insert((p, bucket), t.clone());
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bernoulli_values() {
        let b = bernoulli_rationals(12);
        let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(b[0], q(1, 1));
        assert_eq!(b[1], q(-1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[4], q(-1, 30));
        assert_eq!(b[6], q(1, 42));
        assert_eq!(b[8], q(-1, 30));
        assert_eq!(b[10], q(5, 66));
        assert_eq!(b[12], q(-691, 2730));
        assert!(b[3].is_zero() && b[5].is_zero());
    }

    #[test]
    fn em_coefficients_match_series() {
        // B_2/2! = 1/12, B_4/4! = -1/720
        let t = tables(96, 4);
        assert!((t.em[0].to_f64() - 1.0 / 12.0).abs() < 1e-18);
        assert!((t.em[1].to_f64() + 1.0 / 720.0).abs() < 1e-18);
        // Stirling: B_2/(2*1) = 1/12, B_4/(4*3) = -1/360
        assert!((t.stirling[0].to_f64() - 1.0 / 12.0).abs() < 1e-18);
        assert!((t.stirling[1].to_f64() + 1.0 / 360.0).abs() < 1e-18);
    }
}
