//! Eigenlength and slope extraction from the magnetic endpoint series: plain
//! partial sums, quadratic Shafer resummation with branch averaging, and the
//! transformed-equation series with Pade acceleration.

use tfsolve_num::{ComplexReal, PrecisionContext, Rational, Real};
use tfsolve_series::{endpoint_coeffs, v_endpoint_coeffs};

use crate::pade::pade_fit;
use crate::shafer::{shafer_fit, Branch, QuadApproximant};
use crate::ResumError;

/// 50-digit eigenlength used to attach error columns to the estimates.
pub const X0_REFERENCE: &str = "3.06885718281479942624073100623167158584582595057745";
/// 50-digit critical slope of the magnetic problem.
pub const SLOPE_REFERENCE: &str = "-0.93896688764395889305505340187460180383289370739437";

/// Endpoint series in the resummation variable sigma = (x - x0)/x0, which
/// runs over [-1, 0] with x = 0 at sigma = -1: the odd coefficients of the
/// (x0 - x)/x0 form flip sign.
pub fn flipped_endpoint_series(order: usize) -> Vec<Rational> {
    endpoint_coeffs(order)
        .into_iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 1 { -c } else { c })
        .collect()
}

/// Both branch estimates of x0 from the diagonal K = L = M Shafer fit,
/// their average, and the error triple against the 50-digit reference:
/// x0 = u~(sigma = -1)^(-1/5) per branch.
#[derive(Debug, Clone)]
pub struct ShaferEstimate {
    pub k: usize,
    pub matched_terms: usize,
    pub root_plus: ComplexReal,
    pub root_minus: ComplexReal,
    pub average: ComplexReal,
    /// |x0_plus - ref|, |x0_minus - ref|, |average - ref|
    pub errors: (Real, Real, Real),
}

pub fn shafer_x0(k: usize, ctx: &PrecisionContext) -> Result<ShaferEstimate, ResumError> {
    let series = flipped_endpoint_series(3 * k);
    let quad = shafer_fit(&series, k, k, k)?;
    let minus_one = Rational::from_i64(-1);
    let p = ctx.real_from_rational(&quad.p.eval(&minus_one));
    let q = ctx.real_from_rational(&quad.q.eval(&minus_one));
    let r = ctx.real_from_rational(&quad.r.eval(&minus_one));
    if p.is_zero() {
        return Err(ResumError::PoleAt("-1".into()));
    }
    let disc = &(&q * &q) - &(&(&ctx.real_from_i64(4) * &p) * &r);
    let w = ComplexReal::from_real(disc).sqrt();
    let two_p = ComplexReal::from_real(&p + &p);
    let qc = ComplexReal::from_real(q);
    let u_plus = &(&w - &qc) / &two_p;
    let u_minus = &(&(-&w) - &qc) / &two_p;
    let fifth = &ctx.real_from_i64(-1) / &ctx.real_from_i64(5);
    let root_plus = u_plus.pow_real(&fifth);
    let root_minus = u_minus.pow_real(&fifth);
    let avg_re = &(&root_plus.re + &root_minus.re) / &ctx.real_from_i64(2);
    let avg_im = &(&root_plus.im + &root_minus.im) / &ctx.real_from_i64(2);
    let average = ComplexReal::new(avg_re, avg_im);
    let reference = ComplexReal::from_real(ctx.real_from_str(X0_REFERENCE));
    let errors = (
        (&root_plus - &reference).modulus(),
        (&root_minus - &reference).modulus(),
        (&average - &reference).modulus(),
    );
    Ok(ShaferEstimate {
        k,
        matched_terms: 3 * k + 1,
        root_plus,
        root_minus,
        average,
        errors,
    })
}

/// x0 from the plain M-th partial sum: u(0) = 1 forces
/// x0 = (sum_{j<=M} c_j)^(-1/5).  The error falls like M^(-5/2).
pub fn endpoint_x0_partial_sums(m: usize, ctx: &PrecisionContext) -> Real {
    let c = endpoint_coeffs(m);
    let mut sum = Rational::zero();
    for cj in &c {
        sum = &sum + cj;
    }
    let s = ctx.real_from_rational(&sum);
    s.pow_real(&(&ctx.real_from_i64(-1) / &ctx.real_from_i64(5)))
}

/// Taylor-order-N partial-sum error against the reference, the "power
/// series" column of the error tables.
pub fn partial_sum_error(m: usize, ctx: &PrecisionContext) -> Real {
    let x0 = endpoint_x0_partial_sums(m, ctx);
    (&x0 - &ctx.real_from_str(X0_REFERENCE)).abs()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Acceleration {
    None,
    Pade,
}

/// Slope and eigenlength from the transformed-equation endpoint series
/// v_M(z) = x0^(5/2) t^2 sum c~_j t^j, t = z - 1: the condition v_M(0) = 1
/// fixes x0, the slope follows from u'(0) = v''(0)/x0.  With acceleration
/// the series factor is replaced by its diagonal (or near-diagonal) Pade
/// approximant in t.
pub fn vseries_estimates(
    m: usize,
    accelerate: Acceleration,
    ctx: &PrecisionContext,
) -> Result<(Real, Real), ResumError> {
    let coeffs = v_endpoint_coeffs(m);
    let minus_one = Rational::from_i64(-1);
    // G(t) = t^2 f(t); need G(-1) and G''(-1) = 2 f(-1) - 4 f'(-1) + f''(-1)
    let (f0, f1, f2) = match accelerate {
        Acceleration::None => {
            let f = tfsolve_num::Polynomial::new(coeffs);
            let df = f.derivative();
            (
                f.eval(&minus_one),
                df.eval(&minus_one),
                df.derivative().eval(&minus_one),
            )
        }
        Acceleration::Pade => {
            let j = m / 2;
            let k = m - j;
            let approx = pade_fit(&coeffs, j, k)?;
            rational_fn_d2(&approx.num, &approx.den, &minus_one)?
        }
    };
    let two = Rational::from_i64(2);
    let four = Rational::from_i64(4);
    let g0 = f0.clone();
    let g2 = &(&(&two * &f0) - &(&four * &f1)) + &f2;
    if !g0.is_negative() && g0.is_zero() {
        return Err(ResumError::RootFindFailure(
            "v_M(0) = 1 has no solution: series factor vanishes at t = -1".into(),
        ));
    }
    if g0.is_negative() {
        return Err(ResumError::RootFindFailure(
            "v_M(0) = 1 has no positive solution at this order".into(),
        ));
    }
    let g0r = ctx.real_from_rational(&g0);
    // x0^(5/2) g0 = 1
    let x0 = g0r.pow_real(&(&ctx.real_from_i64(-2) / &ctx.real_from_i64(5)));
    // u'0 = v''(0)/x0 = x0^(3/2) G''(-1)
    let u0p = &x0.pow_real(&(&ctx.real_from_i64(3) / &ctx.real_from_i64(2)))
        * &ctx.real_from_rational(&g2);
    Ok((u0p, x0))
}

/// Value and first two derivatives of num/den at a rational point.
fn rational_fn_d2(
    num: &tfsolve_num::Polynomial<Rational>,
    den: &tfsolve_num::Polynomial<Rational>,
    at: &Rational,
) -> Result<(Rational, Rational, Rational), ResumError> {
    let d = den.eval(at);
    if d.is_zero() {
        return Err(ResumError::PoleAt(at.to_string()));
    }
    let n0 = num.eval(at);
    let dn = num.derivative();
    let dd = den.derivative();
    let n1 = dn.eval(at);
    let d1 = dd.eval(at);
    let n2 = dn.derivative().eval(at);
    let d2 = dd.derivative().eval(at);
    let f0 = &n0 / &d;
    // f' = (n' - f d')/d
    let f1 = &(&n1 - &(&f0 * &d1)) / &d;
    // f'' = (n'' - 2 f' d' - f d'')/d
    let f2 = &(&(&n2 - &(&(&f1 * &d1) * &Rational::from_i64(2))) - &(&f0 * &d2)) / &d;
    Ok((f0, f1, f2))
}

/// Locations inside (-1, 0) where |P| and the discriminant both collapse
/// below 10^(-requested/2) of their interval maxima: the spurious
/// singularities of high-order diagonal fits, where numerator, denominator
/// and discriminant zeros nearly coincide.  |P| reaches exact zero only at
/// its sign crossings, so those are located first by bisection and the
/// discriminant smallness is checked there.
pub fn scan_spurious(
    quad: &QuadApproximant<Real>,
    ctx: &PrecisionContext,
    samples: usize,
) -> Vec<Real> {
    let n = samples.max(64);
    let disc_at = |s: &Real| {
        let p = quad.p.eval(s);
        let q = quad.q.eval(s);
        let r = quad.r.eval(s);
        &(&q * &q) - &(&(&ctx.real_from_i64(4) * &p) * &r)
    };
    let mut dmax = ctx.real_from_i64(0);
    let mut crossings: Vec<(Real, Real)> = Vec::new();
    let mut prev: Option<(Real, i32)> = None;
    for i in 0..=n {
        let t = -1.0 + (i as f64 + 0.5) / (n as f64 + 1.0);
        if t >= 0.0 {
            break;
        }
        let s = ctx.real_from_f64(t);
        dmax = dmax.max(&disc_at(&s).abs());
        let psign = quad.p.eval(&s).signum_i();
        if let Some((ps, prev_sign)) = prev.take() {
            if prev_sign * psign < 0 {
                crossings.push((ps, s.clone()));
            }
        }
        prev = Some((s, psign));
    }
    let thresh = ctx.pow10(-(ctx.requested_digits() as i64) / 2);
    let d_cut = &dmax * &thresh;
    let mut hits = Vec::new();
    for (lo, hi) in crossings {
        if let Ok(s_p) = tfsolve_num::find_root(
            |s| Ok(quad.p.eval(s)),
            tfsolve_num::Seed::Bracket(lo, hi),
            ctx,
            200,
        ) {
            if disc_at(&s_p).abs() < d_cut {
                hits.push(s_p);
            }
        }
    }
    hits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_term_partial_sum() {
        // M = 0: x0 = (1/144)^(-1/5) = 144^(1/5) = 2.70192...
        let ctx = PrecisionContext::new(30);
        let x0 = endpoint_x0_partial_sums(0, &ctx);
        let expect = ctx.real_from_i64(144).root_u32(5);
        assert!(x0.agreed_digits(&expect, 28) >= 28);
        assert!(x0.agreed_digits(&ctx.real_from_str("2.7019"), 5) >= 4);
    }

    #[test]
    fn partial_sums_decay_like_m_to_minus_five_halves() {
        let ctx = PrecisionContext::new(30);
        let e1 = partial_sum_error(20, &ctx);
        let e2 = partial_sum_error(80, &ctx);
        // ratio expected 4^(5/2) = 32, within a factor 2
        let ratio = (&e1 / &e2).to_f64();
        assert!((16.0..=64.0).contains(&ratio), "decay ratio {ratio}");
    }

    #[test]
    fn five_digit_value_at_moderate_order() {
        let ctx = PrecisionContext::new(30);
        let x0 = endpoint_x0_partial_sums(60, &ctx);
        assert_eq!(x0.round_sig(6).to_sig_string(6), "3.06882e0");
        assert!(x0.agreed_digits(&ctx.real_from_str("3.0688"), 5) >= 5);
    }

    #[test]
    fn vseries_plain_and_pade_at_m10() {
        let ctx = PrecisionContext::new(40);
        // plain power series at M = 10: x0 = 3.068806..., slope -0.9364...
        let (u0p, x0) = vseries_estimates(10, Acceleration::None, &ctx).unwrap();
        assert!(x0.agreed_digits(&ctx.real_from_str("3.068806"), 7) >= 6);
        assert!(u0p.agreed_digits(&ctx.real_from_str("-0.9364"), 4) >= 4);
        // Pade at M = 10: slope -0.9327
        let (u0p, _) = vseries_estimates(10, Acceleration::Pade, &ctx).unwrap();
        assert!(u0p.agreed_digits(&ctx.real_from_str("-0.9327"), 4) >= 4);
    }

    #[test]
    fn shafer_x0_low_order_errors() {
        // K = 2 (N = 7): branch errors about 0.0023 and 0.044, average 0.023
        let ctx = PrecisionContext::new(40);
        let est = shafer_x0(2, &ctx).unwrap();
        let (e_plus, e_minus, e_avg) = &est.errors;
        assert!((0.001..0.005).contains(&e_plus.to_f64()), "{}", e_plus.to_f64());
        assert!((0.02..0.09).contains(&e_minus.to_f64()), "{}", e_minus.to_f64());
        assert!((0.01..0.05).contains(&e_avg.to_f64()), "{}", e_avg.to_f64());
    }
}
