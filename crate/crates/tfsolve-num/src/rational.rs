use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::ops::Pow;

/// Exact rational with arbitrary-size integer parts, kept canonical
/// (gcd 1, positive denominator) by the underlying representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(rug::Rational);

impl Rational {
    pub fn zero() -> Self {
        Rational(rug::Rational::new())
    }

    pub fn one() -> Self {
        Rational(rug::Rational::from(1))
    }

    pub fn from_i64(n: i64) -> Self {
        Rational(rug::Rational::from(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(rug::Rational::from((num, den)))
    }

    /// Parse "n", "n/d" or a plain decimal such as "0.25".
    pub fn parse(s: &str) -> Self {
        if let Ok(v) = rug::Rational::parse(s) {
            return Rational(rug::Rational::from(v));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let digits = format!("{int_part}{frac_part}");
            let v = rug::Rational::parse(&digits).expect("bad rational literal");
            let mut q = rug::Rational::from(v);
            q /= rug::Rational::from(10).pow(frac_part.len() as u32);
            return Rational(q);
        }
        panic!("bad rational literal {s:?}");
    }

    pub fn inner(&self) -> &rug::Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == Ordering::Equal
    }

    pub fn is_negative(&self) -> bool {
        self.0.cmp0() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.clone().abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero rational");
        Rational(self.0.clone().recip())
    }

    pub fn pow_i32(&self, e: i32) -> Self {
        Rational(self.0.clone().pow(e))
    }

    /// Total size in bits, used to pick cheap exact pivots.
    pub fn bit_size(&self) -> u32 {
        (self.0.numer().significant_bits() + self.0.denom().significant_bits()) as u32
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn numer_string(&self) -> String {
        self.0.numer().to_string()
    }

    pub fn denom_string(&self) -> String {
        self.0.denom().to_string()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! ratop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(rug::Rational::from(&self.0 $op &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(rug::Rational::from(&self.0 $op &rhs.0))
            }
        }
    };
}

ratop!(Add, add, +);
ratop!(Sub, sub, -);
ratop!(Mul, mul, *);
ratop!(Div, div, /);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0.clone())
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let q = Rational::from_frac(4, -6);
        assert_eq!(q.to_string(), "-2/3");
        assert_eq!(Rational::parse("6/4").to_string(), "3/2");
        assert_eq!(Rational::parse("0.25").to_string(), "1/4");
        assert_eq!(Rational::parse("-1/144").to_string(), "-1/144");
    }

    #[test]
    fn arithmetic() {
        let a = Rational::from_frac(1, 3);
        let b = Rational::from_frac(1, 6);
        assert_eq!(&a + &b, Rational::from_frac(1, 2));
        assert_eq!(&a / &b, Rational::from_i64(2));
    }
}
