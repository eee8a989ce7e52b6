use crate::rational::Rational;
use crate::scalar::Scalar;

/// Dense univariate polynomial, coefficients in ascending degree.
/// Trailing zeros are trimmed; the zero polynomial has an empty list.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0 alongside is_zero().
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul_rat(&Rational::from_i64(k as i64)))
            .collect();
        Self::new(coeffs)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add_ref(&o.coeff(k))).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).sub_ref(&o.coeff(k))).collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul_ref(s)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.neg_ref()).collect())
    }

    /// Map coefficients into another scalar type.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

/// Polynomials over an exact field form the coefficient ring used for the
/// small symbolic computations (bivariate residuals, resultants).  Division
/// is only defined by nonzero constants.
impl Scalar for Polynomial<Rational> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn from_i64(n: i64) -> Self {
        Polynomial::constant(Rational::from_i64(n))
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn div_ref(&self, o: &Self) -> Self {
        assert!(
            o.degree() == 0 && !o.is_zero(),
            "polynomial scalars only divide by nonzero constants"
        );
        self.scale(&o.coeff(0).recip())
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        self.scale(r)
    }
    fn pivot_weight(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            -(self.degree() as f64)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    #[test]
    fn trim_and_degree() {
        let p = Polynomial::new(vec![q(1, 1), q(2, 1), Rational::zero()]);
        assert_eq!(p.degree(), 1);
        assert!(Polynomial::<Rational>::new(vec![Rational::zero()]).is_zero());
    }

    #[test]
    fn eval_and_derivative() {
        // p = 1 - x + x^2/2
        let p = Polynomial::new(vec![q(1, 1), q(-1, 1), q(1, 2)]);
        assert_eq!(p.eval(&q(2, 1)), q(1, 1));
        let dp = p.derivative();
        assert_eq!(dp.eval(&q(2, 1)), q(1, 1));
    }

    #[test]
    fn product() {
        // (1+x)(1-x) = 1-x^2
        let a = Polynomial::new(vec![q(1, 1), q(1, 1)]);
        let b = Polynomial::new(vec![q(1, 1), q(-1, 1)]);
        let p = a.mul(&b);
        assert_eq!(p.coeff(0), q(1, 1));
        assert_eq!(p.coeff(1), q(0, 1));
        assert_eq!(p.coeff(2), q(-1, 1));
    }
}
