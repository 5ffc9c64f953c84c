//! Certified real enclosures built from exact rationals.
//!
//! Every quantity is an interval `[lo, hi]` of rationals known to contain the
//! true value. Irrational operations (square roots) round outward to a dyadic
//! grid of a chosen number of bits, so enclosures stay small in size.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Closed interval of rationals containing an unknown real.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Enclosure {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Enclosure { lo, hi }
    }

    pub fn exact(v: BigRational) -> Self {
        Enclosure {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    /// True when the width is strictly below `2^-bits`.
    pub fn is_tighter_than(&self, bits: u32) -> bool {
        self.width() < pow2_neg(bits)
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// True when `other` lies inside `self`.
    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Midpoint rounded half-up to `digits` decimals.
    pub fn to_decimal(&self, digits: usize) -> String {
        decimal_string(&self.midpoint(), digits)
    }

    /// Number of decimal digits that the enclosure certifies.
    pub fn certified_digits(&self) -> usize {
        let w = self.width();
        if w.is_zero() {
            return 40;
        }
        let mut d = 0usize;
        let ten = BigRational::from_integer(BigInt::from(10));
        let mut scale = BigRational::one();
        while d < 400 {
            scale *= &ten;
            if &w * &scale >= BigRational::one() {
                break;
            }
            d += 1;
        }
        d
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.certified_digits().clamp(1, 60);
        write!(f, "{}", self.to_decimal(digits))
    }
}

pub fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

pub fn pow2_neg(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), pow2(bits))
}

/// Largest multiple of `2^-bits` not above `x`.
pub fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let scaled = x * BigRational::from_integer(pow2(bits));
    BigRational::new(scaled.floor().to_integer(), pow2(bits))
}

/// Smallest multiple of `2^-bits` not below `x`.
pub fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let scaled = x * BigRational::from_integer(pow2(bits));
    BigRational::new(scaled.ceil().to_integer(), pow2(bits))
}

/// Lower and upper dyadic bounds on `sqrt(x)` for `x >= 0`, with the upper
/// bound at most `2^-bits` above the lower one.
pub fn sqrt_bounds(x: &BigRational, bits: u32) -> (BigRational, BigRational) {
    assert!(!x.is_negative(), "square root of a negative number");
    let four_pow = BigRational::from_integer(pow2(2 * bits));
    let scaled = x * four_pow;
    let floor = scaled.floor().to_integer();
    let ceil = scaled.ceil().to_integer();
    let lo = floor.to_biguint().unwrap().sqrt();
    let hi_root = ceil.to_biguint().unwrap().sqrt();
    let hi = if &hi_root * &hi_root == ceil.to_biguint().unwrap() {
        hi_root
    } else {
        hi_root + BigUint::one()
    };
    let den = pow2(bits);
    (
        BigRational::new(BigInt::from(lo), den.clone()),
        BigRational::new(BigInt::from(hi), den),
    )
}

/// Integer square root test: `Some(r)` when `v = r^2`.
pub fn exact_sqrt(v: &BigUint) -> Option<BigUint> {
    let r = v.sqrt();
    if &r * &r == *v {
        Some(r)
    } else {
        None
    }
}

/// Enclosure of `tan(pi / 2^m)` for `m >= 2`, via the half-angle identity
/// `tan(t/2) = tan t / (1 + sqrt(1 + tan^2 t))`, which is increasing in `tan t`.
pub fn tan_pi_over_pow2(m: u32, bits: u32) -> Enclosure {
    assert!(m >= 2);
    let one = BigRational::one();
    let mut lo = one.clone();
    let mut hi = one.clone();
    for _ in 2..m {
        let (_, s_up) = sqrt_bounds(&(&one + &lo * &lo), bits + 8);
        let (s_down, _) = sqrt_bounds(&(&one + &hi * &hi), bits + 8);
        lo = round_down(&(&lo / (&one + s_up)), bits + 4);
        hi = round_up(&(&hi / (&one + s_down)), bits + 4);
    }
    Enclosure::new(lo, hi)
}

/// `x` rendered with exactly `digits` decimals, rounding half away from zero.
pub fn decimal_string(x: &BigRational, digits: usize) -> String {
    render_decimal(x, digits, true)
}

/// `x` with its decimal expansion cut after `digits` places.
pub fn truncated_decimal(x: &BigRational, digits: usize) -> String {
    render_decimal(x, digits, false)
}

fn render_decimal(x: &BigRational, digits: usize, round: bool) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let mut scaled = x.abs() * BigRational::from_integer(scale.clone());
    if round {
        scaled += BigRational::new(BigInt::one(), BigInt::from(2));
    }
    let rounded = scaled.floor().to_integer();
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part, width = digits)
    }
}

/// Natural logarithm of a positive big integer, accurate to f64 precision.
pub fn ln_biguint(v: &BigUint) -> f64 {
    assert!(!v.is_zero(), "logarithm of zero");
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top = (v >> shift).to_f64().unwrap();
    top.ln() + (shift as f64) * std::f64::consts::LN_2
}
