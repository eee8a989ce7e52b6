//! Public truncated-series types.  GeneralizedSeries admits half-integer
//! (and, for the infinity expansions, irrational) exponents; PowerSeries is
//! integer-exponent only.

use serde_json::{json, Value};
use tfsolve_num::{PrecisionContext, Rational, Real};

use crate::EquationKind;

/// Series coefficient: exact rational where the structure permits, big float
/// otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum Coef {
    Rat(Rational),
    Fl(Real),
}

impl Coef {
    pub fn to_real(&self, ctx: &PrecisionContext) -> Real {
        match self {
            Coef::Rat(q) => ctx.real_from_rational(q),
            Coef::Fl(r) => r.clone(),
        }
    }

    pub fn as_string(&self) -> String {
        match self {
            Coef::Rat(q) => q.to_string(),
            Coef::Fl(r) => r.to_sig_string(((r.prec() as f64) * 0.301) as usize),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coef::Rat(q) => q.is_zero(),
            Coef::Fl(r) => r.is_zero(),
        }
    }
}

/// Term exponent: rational for origin/endpoint/movable-point lattices, real
/// for the infinity expansions whose steps involve sqrt(73) or sqrt(41).
#[derive(Debug, Clone, PartialEq)]
pub enum Exp {
    Rat(Rational),
    Fl(Real),
}

impl Exp {
    pub fn to_real(&self, ctx: &PrecisionContext) -> Real {
        match self {
            Exp::Rat(q) => ctx.real_from_rational(q),
            Exp::Fl(r) => r.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Exp::Rat(q) => q.to_f64(),
            Exp::Fl(r) => r.to_f64(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Exp::Rat(q) => json!(q.to_string()),
            Exp::Fl(r) => json!(r.to_sig_string(30)),
        }
    }
}

/// Where the expansion lives and what its local variable means:
/// - Origin: powers of x
/// - Movable(p): powers of s = (p - x)/p
/// - Infinity: (generally descending) powers of x
#[derive(Debug, Clone, PartialEq)]
pub enum ExpansionPoint {
    Origin,
    Movable(Real),
    Infinity,
}

#[derive(Debug, Clone)]
pub struct GeneralizedSeries {
    pub variable: String,
    pub point: ExpansionPoint,
    /// (exponent, coefficient), exponents strictly increasing
    pub terms: Vec<(Exp, Coef)>,
    /// truncation exponent: terms above this are unknown, not zero
    pub order: Exp,
}

impl GeneralizedSeries {
    /// Value of the local variable at coordinate x.
    pub fn local_at(&self, x: &Real, _ctx: &PrecisionContext) -> Real {
        match &self.point {
            ExpansionPoint::Origin | ExpansionPoint::Infinity => x.clone(),
            ExpansionPoint::Movable(p) => &(p - x) / p,
        }
    }

    /// Evaluate the truncated series at local-variable value `w` > 0
    /// (fractional exponents require a positive argument).
    pub fn eval_local(&self, w: &Real, ctx: &PrecisionContext) -> Real {
        self.eval_local_derivative(w, 0, ctx)
    }

    /// d^k/dw^k of the series at w, term by term.
    pub fn eval_local_derivative(&self, w: &Real, k: u32, ctx: &PrecisionContext) -> Real {
        let mut acc = ctx.real_from_i64(0);
        for (e, c) in &self.terms {
            let ev = e.to_real(ctx);
            let mut factor = c.to_real(ctx);
            let mut shift = ev.clone();
            for _ in 0..k {
                factor = &factor * &shift;
                shift = &shift - &ctx.real_from_i64(1);
            }
            if factor.is_zero() {
                continue;
            }
            acc = &acc + &(&factor * &pow_general(w, &shift, ctx));
        }
        acc
    }

    /// Residual u'' - rhs(x, u) of the governing equation at coordinate x,
    /// using the chain rule for movable-point variables.
    pub fn ode_residual_at(&self, kind: EquationKind, x: &Real, ctx: &PrecisionContext) -> Real {
        let w = self.local_at(x, ctx);
        let u = self.eval_local(&w, ctx);
        let d2_local = self.eval_local_derivative(&w, 2, ctx);
        let u_xx = match &self.point {
            ExpansionPoint::Origin | ExpansionPoint::Infinity => d2_local,
            // s = (p - x)/p: d/dx = -(1/p) d/ds
            ExpansionPoint::Movable(p) => &d2_local / &(p * p),
        };
        &u_xx - &kind.rhs(x, &u, ctx)
    }

    /// {variable, point, terms:[[exponent, "coefficient"]...], order}
    pub fn to_json(&self, _ctx: &PrecisionContext) -> Value {
        let point = match &self.point {
            ExpansionPoint::Origin => json!("0"),
            ExpansionPoint::Infinity => json!("inf"),
            ExpansionPoint::Movable(p) => json!(p.to_sig_string(30)),
        };
        json!({
            "variable": self.variable,
            "point": point,
            "terms": self
                .terms
                .iter()
                .map(|(e, c)| json!([e.json(), c.as_string()]))
                .collect::<Vec<_>>(),
            "order": self.order.json(),
        })
    }
}

/// x^e for positive x (general real exponent), with exact fast paths for
/// small integer exponents.
fn pow_general(x: &Real, e: &Real, ctx: &PrecisionContext) -> Real {
    let ef = e.to_f64();
    if ef.fract() == 0.0 && ef.abs() < 1e6 {
        return x.pow_i64(ef as i64);
    }
    assert!(
        x.signum_i() > 0,
        "fractional power of non-positive value {x}"
    );
    let _ = ctx;
    x.pow_real(e)
}

/// Integer-exponent truncated series; coefficient k belongs to variable^k.
#[derive(Debug, Clone)]
pub struct PowerSeries {
    pub variable: String,
    pub coeffs: Vec<Coef>,
    /// slope value baked into the coefficients, when there is one
    pub parameter_note: Option<String>,
}

impl PowerSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: &Real, ctx: &PrecisionContext) -> Real {
        let mut acc = ctx.real_from_i64(0);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + &c.to_real(ctx);
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        json!({
            "variable": self.variable,
            "point": "0",
            "terms": self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| json!([k.to_string(), c.as_string()]))
                .collect::<Vec<_>>(),
            "parameter_note": self.parameter_note,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_derivatives() {
        let ctx = PrecisionContext::new(30);
        // f = 2 x^(3/2): f'' = 2 * (3/2)(1/2) x^(-1/2)
        let s = GeneralizedSeries {
            variable: "x".into(),
            point: ExpansionPoint::Origin,
            terms: vec![(Exp::Rat(Rational::from_frac(3, 2)), Coef::Rat(Rational::from_i64(2)))],
            order: Exp::Rat(Rational::from_frac(3, 2)),
        };
        let x = ctx.real_from_str("0.25");
        let f = s.eval_local(&x, &ctx);
        assert!(f.agreed_digits(&ctx.real_from_str("0.25"), 25) >= 25);
        let f2 = s.eval_local_derivative(&x, 2, &ctx);
        // 1.5 * 0.25^(-1/2) = 3
        assert!(f2.agreed_digits(&ctx.real_from_i64(3), 25) >= 25);
    }

    #[test]
    fn json_shape() {
        let s = PowerSeries {
            variable: "t".into(),
            coeffs: vec![Coef::Rat(Rational::from_frac(1, 3))],
            parameter_note: None,
        };
        let v = s.to_json();
        assert_eq!(v["terms"][0][1], "1/3");
    }
}
