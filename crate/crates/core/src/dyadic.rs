//! Exact non-negative dyadic rationals `num / 2^exp`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// A non-negative rational whose denominator is a power of two, kept in
/// lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigUint,
    exp: u32,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            num: BigUint::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            num: BigUint::one(),
            exp: 0,
        }
    }

    pub fn new(num: impl Into<BigUint>, exp: u32) -> Self {
        let mut d = Dyadic {
            num: num.into(),
            exp,
        };
        d.normalize();
        d
    }

    /// `2^-exp`.
    pub fn pow2_neg(exp: u32) -> Self {
        Dyadic {
            num: BigUint::one(),
            exp,
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.exp as u64) as u32;
        self.num >>= tz;
        self.exp -= tz;
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    /// Base-two logarithm of the denominator.
    pub fn denominator_exp(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::INFINITY) / 2f64.powi(self.exp as i32)
    }

    /// Exact decimal expansion (every dyadic has a finite one).
    pub fn to_decimal_string(&self) -> String {
        let scaled = &self.num * BigUint::from(5u32).pow(self.exp);
        let digits = scaled.to_str_radix(10);
        let k = self.exp as usize;
        if k == 0 {
            return digits;
        }
        let padded = if digits.len() <= k {
            format!("{}{}", "0".repeat(k + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int, frac) = padded.split_at(padded.len() - k);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    }

    /// `num/den` form.
    pub fn to_fraction_string(&self) -> String {
        if self.exp == 0 {
            self.num.to_str_radix(10)
        } else {
            format!("{}/{}", self.num, BigUint::one() << self.exp)
        }
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let num = (&self.num << (exp - self.exp)) + (&rhs.num << (exp - rhs.exp));
        Dyadic::new(num, exp)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp);
        let b = &other.num << (exp - other.exp);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}
