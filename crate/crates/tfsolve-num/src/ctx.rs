use crate::rational::Rational;
use crate::real::Real;

const LOG2_10: f64 = 3.321928094887362;

/// Two-tier precision: the caller asks for `requested_digits` trusted decimal
/// digits, the kernels compute with `working_digits`.  The gap absorbs the
/// cancellation inside ill-conditioned determinants and Newton solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionContext {
    requested_digits: u32,
    working_digits: u32,
}

impl PrecisionContext {
    /// Default guard rule: working = 2 * requested + 10.
    pub fn new(requested_digits: u32) -> Self {
        assert!(requested_digits > 0, "requested_digits must be positive");
        Self {
            requested_digits,
            working_digits: 2 * requested_digits + 10,
        }
    }

    /// Explicit working precision; clamped up so the guard rule always holds.
    pub fn with_working(requested_digits: u32, working_digits: u32) -> Self {
        assert!(requested_digits > 0, "requested_digits must be positive");
        Self {
            requested_digits,
            working_digits: working_digits.max(2 * requested_digits + 10),
        }
    }

    pub fn requested_digits(&self) -> u32 {
        self.requested_digits
    }

    pub fn working_digits(&self) -> u32 {
        self.working_digits
    }

    /// Same request served with `factor` times the working digits.
    pub fn scaled_working(&self, factor: f64) -> Self {
        let w = (self.working_digits as f64 * factor).ceil() as u32;
        Self::with_working(self.requested_digits, w)
    }

    /// Extra guard digits on top of the current working precision.
    pub fn bumped(&self, extra_digits: u32) -> Self {
        Self::with_working(self.requested_digits, self.working_digits + extra_digits)
    }

    /// Binary precision used for every Real produced under this context.
    pub fn prec_bits(&self) -> u32 {
        (self.working_digits as f64 * LOG2_10).ceil() as u32 + 16
    }

    pub fn real_from_i64(&self, n: i64) -> Real {
        Real::from_i64(n, self.prec_bits())
    }

    pub fn real_from_f64(&self, x: f64) -> Real {
        Real::from_f64(x, self.prec_bits())
    }

    /// Parse a decimal string at working precision.
    pub fn real_from_str(&self, s: &str) -> Real {
        Real::parse(s, self.prec_bits())
    }

    pub fn real_from_rational(&self, q: &Rational) -> Real {
        Real::from_rational(q, self.prec_bits())
    }

    pub fn pi(&self) -> Real {
        Real::pi(self.prec_bits())
    }

    /// 10^(-requested_digits), the tolerance most contracts are stated in.
    pub fn tol_requested(&self) -> Real {
        self.pow10(-(self.requested_digits as i64))
    }

    /// 10^(-working_digits + slack).
    pub fn tol_working(&self, slack: i64) -> Real {
        self.pow10(-(self.working_digits as i64) + slack)
    }

    pub fn pow10(&self, exp: i64) -> Real {
        self.real_from_i64(10).pow_i64(exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_rule_holds() {
        let ctx = PrecisionContext::new(50);
        assert_eq!(ctx.working_digits(), 110);
        let clamped = PrecisionContext::with_working(50, 20);
        assert_eq!(clamped.working_digits(), 110);
        let explicit = PrecisionContext::with_working(50, 300);
        assert_eq!(explicit.working_digits(), 300);
    }

    #[test]
    fn scaling() {
        let ctx = PrecisionContext::new(40).scaled_working(1.5);
        assert_eq!(ctx.working_digits(), 135);
        assert_eq!(ctx.requested_digits(), 40);
    }
}
