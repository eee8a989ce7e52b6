use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::real::Real;

/// Complex number over two Reals.  Arithmetic is closed; sqrt and rational
/// powers return the principal branch.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexReal {
    pub re: Real,
    pub im: Real,
}

impl ComplexReal {
    pub fn new(re: Real, im: Real) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let im = &re - &re;
        Self { re, im }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn modulus(&self) -> Real {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }

    pub fn arg(&self) -> Real {
        self.im.atan2(&self.re)
    }

    /// Principal square root: real part nonnegative.
    pub fn sqrt(&self) -> Self {
        if self.im.is_zero() {
            if self.re.signum_i() >= 0 {
                return Self::new(self.re.sqrt(), self.im.clone());
            }
            return Self::new(self.im.clone(), (-&self.re).sqrt());
        }
        let m = self.modulus();
        let two = Real::from_i64(2, m.prec());
        let re = (&(&m + &self.re) / &two).sqrt();
        let mut im = (&(&m - &self.re) / &two).sqrt();
        if self.im.is_sign_negative() {
            im = -im;
        }
        Self::new(re, im)
    }

    /// Principal real power: modulus^p * exp(i * arg * p).  For p = 1/5 this
    /// picks the fifth root nearest the positive real axis.
    pub fn pow_real(&self, p: &Real) -> Self {
        if self.im.is_zero() && self.re.signum_i() > 0 {
            return Self::new(self.re.pow_real(p), self.im.clone());
        }
        let r = self.modulus().pow_real(p);
        let th = self.arg() * p;
        Self::new(&r * &th.cos(), &r * &th.sin())
    }

    pub fn scale(&self, s: &Real) -> Self {
        Self::new(&self.re * s, &self.im * s)
    }
}

impl Add<&ComplexReal> for &ComplexReal {
    type Output = ComplexReal;
    fn add(self, rhs: &ComplexReal) -> ComplexReal {
        ComplexReal::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&ComplexReal> for &ComplexReal {
    type Output = ComplexReal;
    fn sub(self, rhs: &ComplexReal) -> ComplexReal {
        ComplexReal::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&ComplexReal> for &ComplexReal {
    type Output = ComplexReal;
    fn mul(self, rhs: &ComplexReal) -> ComplexReal {
        ComplexReal::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Div<&ComplexReal> for &ComplexReal {
    type Output = ComplexReal;
    fn div(self, rhs: &ComplexReal) -> ComplexReal {
        let d = &(&rhs.re * &rhs.re) + &(&rhs.im * &rhs.im);
        ComplexReal::new(
            &(&(&self.re * &rhs.re) + &(&self.im * &rhs.im)) / &d,
            &(&(&self.im * &rhs.re) - &(&self.re * &rhs.im)) / &d,
        )
    }
}

impl Neg for &ComplexReal {
    type Output = ComplexReal;
    fn neg(self) -> ComplexReal {
        ComplexReal::new(-&self.re, -&self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Real {
        Real::parse(s, 128)
    }

    #[test]
    fn principal_sqrt() {
        let z = ComplexReal::new(r("-4"), r("0"));
        let s = z.sqrt();
        assert!(s.re.is_zero());
        assert!(s.im.agreed_digits(&r("2"), 30) >= 30);

        let z = ComplexReal::new(r("3"), r("4"));
        let s = z.sqrt();
        assert!(s.re.agreed_digits(&r("2"), 30) >= 30);
        assert!(s.im.agreed_digits(&r("1"), 30) >= 30);
    }

    #[test]
    fn fifth_root_nearest_real_axis() {
        // (-32)^(1/5): principal root 2*exp(i*pi/5), not the real root -2.
        let z = ComplexReal::new(r("-32"), r("0"));
        let p = z.pow_real(&r("0.2"));
        let pi = Real::pi(128);
        let expected_re = r("2") * (&pi / &r("5")).cos();
        assert!(p.re.agreed_digits(&expected_re, 25) >= 25);
        // A conjugate pair averages back to the real axis.
        let avg_im = &(&p.im + &p.conj().im) / &r("2");
        assert!(avg_im.abs() < r("1e-30"));
    }
}
