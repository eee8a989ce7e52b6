//! Local expansions of the two Thomas-Fermi boundary-value problems.
//!
//! The raw origin series (half-integer powers of x), the transformed origin
//! series v(t) = sqrt(u(t^2)), the universal right-endpoint series of the
//! magnetic problem, its counterpart for the transformed equation, and the
//! movable-point / infinity local models all live here, with exact rational
//! coefficients wherever the structure permits.

pub mod endpoint;
pub mod generalized;
pub mod halfstep;
pub mod local;
pub mod origin;

use thiserror::Error;
use tfsolve_num::{PrecisionContext, Rational, Real};

pub use endpoint::{endpoint_coeffs, v_endpoint_coeffs};
pub use generalized::{Coef, Exp, ExpansionPoint, GeneralizedSeries, PowerSeries};
pub use local::{local_model_series, LocalModel, LocalModelParams};
pub use origin::{origin_u_coeffs, origin_v_coeffs, origin_v_coeffs_symbolic};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum SeriesError {
    #[error("inconsistent local-model parameters: {0}")]
    InconsistentParams(String),
    #[error("order too small: need at least {need}, got {got}")]
    OrderTooSmall { need: String, got: String },
}

/// Which Thomas-Fermi equation: u'' = u^(3/2)/x^(1/2) (neutral atom) or
/// u'' = sqrt(x u) (neutral atom in a very strong magnetic field), both with
/// u(0) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquationKind {
    Atom,
    Magnetic,
}

impl EquationKind {
    pub fn name(&self) -> &'static str {
        match self {
            EquationKind::Atom => "atom",
            EquationKind::Magnetic => "magnetic",
        }
    }

    /// Right-hand side f(x, u) of u'' = f(x, u); requires x > 0 and u >= 0.
    pub fn rhs(&self, x: &Real, u: &Real, ctx: &PrecisionContext) -> Real {
        let _ = ctx;
        match self {
            EquationKind::Atom => {
                let u32_ = u.sqrt().pow_i64(3);
                &u32_ / &x.sqrt()
            }
            EquationKind::Magnetic => (x * u).sqrt(),
        }
    }
}

/// Raw origin series u = 1 + a x + ... as a GeneralizedSeries with exact
/// rational coefficients for rational a.
pub fn origin_series_u_rational(
    kind: EquationKind,
    a: &Rational,
    order: &Rational,
) -> GeneralizedSeries {
    let half_order = order_to_halfsteps(order);
    let g = origin_u_coeffs(kind, a, half_order);
    let terms = g
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            (
                Exp::Rat(Rational::from_frac(k as i64, 2)),
                Coef::Rat(c.clone()),
            )
        })
        .collect();
    GeneralizedSeries {
        variable: "x".into(),
        point: ExpansionPoint::Origin,
        terms,
        order: Exp::Rat(order.clone()),
    }
}

/// Raw origin series for a big-float slope.
pub fn origin_series_u_real(
    kind: EquationKind,
    a: &Real,
    order: &Rational,
    ctx: &PrecisionContext,
) -> GeneralizedSeries {
    let half_order = order_to_halfsteps(order);
    let a = a.with_prec(ctx.prec_bits());
    let g = origin_u_coeffs(kind, &a, half_order);
    let terms = g
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            (
                Exp::Rat(Rational::from_frac(k as i64, 2)),
                Coef::Fl(c.clone()),
            )
        })
        .collect();
    GeneralizedSeries {
        variable: "x".into(),
        point: ExpansionPoint::Origin,
        terms,
        order: Exp::Rat(order.clone()),
    }
}

/// Transformed origin series v(t) with the slope recorded in the note.
pub fn origin_series_v_rational(kind: EquationKind, a: &Rational, order: usize) -> PowerSeries {
    let v = origin_v_coeffs(kind, a, order);
    PowerSeries {
        variable: "t".into(),
        coeffs: v.into_iter().map(Coef::Rat).collect(),
        parameter_note: Some(format!("a = {a}")),
    }
}

/// Universal endpoint series factor of Eq-13 type as a PowerSeries in s.
pub fn endpoint_series(order: usize) -> PowerSeries {
    PowerSeries {
        variable: "s".into(),
        coeffs: endpoint_coeffs(order).into_iter().map(Coef::Rat).collect(),
        parameter_note: None,
    }
}

/// Universal transformed-endpoint series factor (Eq-24 type) in t = z - 1.
pub fn v_endpoint_series(order: usize) -> PowerSeries {
    PowerSeries {
        variable: "t".into(),
        coeffs: v_endpoint_coeffs(order)
            .into_iter()
            .map(Coef::Rat)
            .collect(),
        parameter_note: None,
    }
}

fn order_to_halfsteps(order: &Rational) -> usize {
    let f = order.to_f64();
    assert!(f >= 0.0, "order must be nonnegative");
    (f * 2.0).floor() as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rhs_values() {
        let ctx = PrecisionContext::new(30);
        let x = ctx.real_from_i64(4);
        let u = ctx.real_from_i64(9);
        let atom = EquationKind::Atom.rhs(&x, &u, &ctx);
        assert!(atom.agreed_digits(&ctx.real_from_str("13.5"), 25) >= 25);
        let mag = EquationKind::Magnetic.rhs(&x, &u, &ctx);
        assert!(mag.agreed_digits(&ctx.real_from_i64(6), 25) >= 25);
    }

    #[test]
    fn u_series_json_roundtrip_shape() {
        let s = origin_series_u_rational(
            EquationKind::Atom,
            &Rational::from_frac(-3, 2),
            &Rational::from_i64(3),
        );
        let ctx = PrecisionContext::new(20);
        let j = s.to_json(&ctx);
        assert_eq!(j["variable"], "x");
        // terms include [ "3/2", "4/3" ]
        let found = j["terms"]
            .as_array()
            .unwrap()
            .iter()
            .any(|t| t[0] == "3/2" && t[1] == "4/3");
        assert!(found, "{j}");
    }
}
