use crate::rational::Rational;
use crate::real::Real;

/// Field-style operations shared by Real and Rational so polynomials,
/// elimination and series recurrences can be written once.
pub trait Scalar: Clone + PartialEq + Send + Sync + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn div_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiply by an exact rational (serves recurrences that only ever
    /// divide by integer factors, keeping polynomial scalars usable).
    fn mul_rat(&self, r: &Rational) -> Self;
    /// Pivot preference for elimination; larger is better, -inf means zero.
    fn pivot_weight(&self) -> f64;
    /// Decimal digits carried by this value, None for exact scalars.
    fn precision_digits(&self) -> Option<f64> {
        None
    }
    /// Zero/one carrying this value's precision.  Inexact scalars must seed
    /// recurrences from these so rational constants (1/3, 2/3, ...) are not
    /// truncated at some default precision.
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
}

impl Scalar for Real {
    fn zero() -> Self {
        Real::from_i64(0, 64)
    }
    fn one() -> Self {
        Real::from_i64(1, 64)
    }
    fn from_i64(n: i64) -> Self {
        Real::from_i64(n, 64)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Real::is_zero(self)
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        self * &Real::from_rational(r, self.prec())
    }
    fn pivot_weight(&self) -> f64 {
        self.log10_abs_estimate()
    }
    fn precision_digits(&self) -> Option<f64> {
        Some(self.prec() as f64 * std::f64::consts::LOG10_2)
    }
    fn zero_like(&self) -> Self {
        Real::from_i64(0, self.prec())
    }
    fn one_like(&self) -> Self {
        Real::from_i64(1, self.prec())
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_i64(n)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        self * r
    }
    // Exact arithmetic: any nonzero pivot is valid, prefer small entries to
    // curb coefficient growth.
    fn pivot_weight(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            -(self.bit_size() as f64)
        }
    }
}
