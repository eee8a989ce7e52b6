use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Round;
use rug::ops::Pow;
use rug::Float;

use crate::rational::Rational;

/// Arbitrary-precision floating-point number.  Every value carries its binary
/// precision (set from the PrecisionContext that created it); binary
/// operations round to the larger precision of the two operands, so working
/// precision established at construction flows through whole computations.
#[derive(Debug, Clone, PartialEq)]
pub struct Real(Float);

impl Real {
    pub fn from_i64(n: i64, prec: u32) -> Self {
        Real(Float::with_val(prec, n))
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        Real(Float::with_val(prec, x))
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        Real(Float::with_val(prec, q.inner()))
    }

    /// Parse a decimal literal such as "-1.5880710226113753".
    pub fn parse(s: &str, prec: u32) -> Self {
        let val = Float::parse(s).unwrap_or_else(|e| panic!("bad real literal {s:?}: {e}"));
        Real(Float::with_val(prec, val))
    }

    pub fn pi(prec: u32) -> Self {
        Real(Float::with_val(prec, rug::float::Constant::Pi))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Round (or extend) to a precision, returning a new value.
    pub fn with_prec(&self, prec: u32) -> Self {
        Real(Float::with_val(prec, &self.0))
    }

    pub fn inner(&self) -> &Float {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    pub fn signum_i(&self) -> i32 {
        match self.0.cmp0() {
            Some(Ordering::Less) => -1,
            Some(Ordering::Greater) => 1,
            _ => 0,
        }
    }

    pub fn abs(&self) -> Self {
        Real(self.0.clone().abs())
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.clone().sqrt())
    }

    pub fn exp(&self) -> Self {
        Real(self.0.clone().exp())
    }

    pub fn ln(&self) -> Self {
        Real(self.0.clone().ln())
    }

    pub fn cos(&self) -> Self {
        Real(self.0.clone().cos())
    }

    pub fn sin(&self) -> Self {
        Real(self.0.clone().sin())
    }

    pub fn atan2(&self, x: &Real) -> Self {
        let prec = self.prec().max(x.prec());
        Real(Float::with_val(prec, self.0.atan2_ref(&x.0)))
    }

    pub fn recip(&self) -> Self {
        Real(self.0.clone().recip())
    }

    pub fn square(&self) -> Self {
        Real(self.0.clone().square())
    }

    /// Integer power; exact semantics for negative exponents via recip.
    pub fn pow_i64(&self, e: i64) -> Self {
        Real(self.0.clone().pow(e))
    }

    /// k-th root of a nonnegative value.
    pub fn root_u32(&self, k: u32) -> Self {
        Real(self.0.clone().root(k))
    }

    /// General real power of a positive base.
    pub fn pow_real(&self, e: &Real) -> Self {
        let prec = self.prec().max(e.prec());
        Real(Float::with_val(prec, (&self.0).pow(&e.0)))
    }

    pub fn min(&self, o: &Real) -> Self {
        if self <= o {
            self.clone()
        } else {
            o.clone()
        }
    }

    pub fn max(&self, o: &Real) -> Self {
        if self >= o {
            self.clone()
        } else {
            o.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Base-2 exponent of the magnitude, or None for zero.
    pub fn exp2_estimate(&self) -> Option<i32> {
        self.0.get_exp()
    }

    /// Rough log10 of |self| without allocating; -inf for 0.
    pub fn log10_abs_estimate(&self) -> f64 {
        match self.0.get_exp() {
            Some(e) => e as f64 * std::f64::consts::LOG10_2,
            None => f64::NEG_INFINITY,
        }
    }

    /// Scientific-notation string with `sig` significant digits, e.g.
    /// "2.4314292988681e-2".  Deterministic for fixed precision settings.
    pub fn to_sig_string(&self, sig: usize) -> String {
        if !self.0.is_finite() {
            return format!("{}", self.0);
        }
        if self.0.is_zero() {
            return "0".to_string();
        }
        let (sign, digits, exp) = self.decimal_parts(sig);
        let mut out = String::new();
        if sign {
            out.push('-');
        }
        out.push(digits.as_bytes()[0] as char);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&(exp - 1).to_string());
        out
    }

    /// (negative?, significant digit string, decimal exponent) where the
    /// value is 0.DIGITS * 10^exp in MPFR's convention.
    fn decimal_parts(&self, sig: usize) -> (bool, String, i64) {
        let (s, exp) = self
            .0
            .to_string_radix_round(10, Some(sig.max(1)), Round::Nearest)
            .split_once('e')
            .map(|(m, e)| (m.to_string(), e.parse::<i64>().unwrap()))
            .unwrap_or_else(|| {
                let m = self.0.to_string_radix_round(10, Some(sig.max(1)), Round::Nearest);
                (m, 0)
            });
        let neg = s.starts_with('-');
        let digits: String = s.chars().filter(|c| c.is_ascii_digit()).collect();
        // MPFR's mantissa is "d.ddd"; normalize to 0.DIGITS * 10^(exp+1).
        (neg, digits, exp + 1)
    }

    /// Count of matching leading significant decimal digits against `other`.
    /// Equal values (to the smaller working precision) saturate at `cap`.
    pub fn agreed_digits(&self, other: &Real, cap: u32) -> u32 {
        let prec = self.prec().max(other.prec());
        let diff = Real(Float::with_val(prec, &self.0 - &other.0)).abs();
        if diff.is_zero() {
            return cap;
        }
        let scale = self.abs().max(&other.abs());
        if scale.is_zero() {
            return cap;
        }
        let rel = diff.log10_abs_estimate() - scale.log10_abs_estimate();
        if rel >= 0.0 {
            0
        } else {
            ((-rel).floor() as u32).min(cap)
        }
    }

    /// Round to `sig` significant decimal digits (returned at same precision).
    pub fn round_sig(&self, sig: usize) -> Real {
        if self.0.is_zero() || !self.0.is_finite() {
            return self.clone();
        }
        Real::parse(&self.to_sig_string(sig), self.prec())
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = (self.prec() as f64 / 3.3219) as usize;
        write!(f, "{}", self.to_sig_string(sig.max(8)))
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let prec = self.prec().max(rhs.prec());
                Real(Float::with_val(prec, &self.0 $op &rhs.0))
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0.clone())
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl AddAssign<&Real> for Real {
    fn add_assign(&mut self, rhs: &Real) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Real> for Real {
    fn sub_assign(&mut self, rhs: &Real) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Real> for Real {
    fn mul_assign(&mut self, rhs: &Real) {
        *self = &*self * rhs;
    }
}

impl DivAssign<&Real> for Real {
    fn div_assign(&mut self, rhs: &Real) {
        *self = &*self / rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_flows_through_ops() {
        let a = Real::from_i64(1, 64);
        let b = Real::parse("0.1", 512);
        assert_eq!((&a + &b).prec(), 512);
    }

    #[test]
    fn sig_string() {
        let x = Real::parse("0.024314292988681", 256);
        assert_eq!(x.to_sig_string(14), "2.4314292988681e-2");
        let y = Real::parse("-1.5880710226113753", 256);
        assert_eq!(y.to_sig_string(5), "-1.5881e0");
    }

    #[test]
    fn agreement() {
        let a = Real::parse("3.0688571828147994", 256);
        let b = Real::parse("3.0688571828000000", 256);
        let d = a.agreed_digits(&b, 60);
        assert!((10..=12).contains(&d), "agreed {d}");
        assert_eq!(a.agreed_digits(&a, 60), 60);
    }

    #[test]
    fn rounding() {
        let x = Real::parse("1.23456789", 128);
        assert_eq!(x.round_sig(4).to_sig_string(4), "1.235e0");
    }
}
