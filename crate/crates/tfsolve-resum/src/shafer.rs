use tfsolve_num::{
    solve_linear, ComplexReal, Matrix, NumError, Polynomial, PrecisionContext, Rational, Real,
    Scalar,
};

use crate::ResumError;

/// Quadratic (Shafer) approximant: polynomials P, Q, R of degrees K, L, M
/// with P(0) = Q(0) = 1, chosen so P u^2 + Q u + R has vanishing series
/// coefficients through order N - 1, N = K + L + M + 1.
#[derive(Debug, Clone)]
pub struct QuadApproximant<S: Scalar> {
    pub p: Polynomial<S>,
    pub q: Polynomial<S>,
    pub r: Polynomial<S>,
    pub matched_order: usize,
    /// set when the P(0)=Q(0)=1 normalization was singular and the fit fell
    /// back to Q(0) = 0
    pub flagged_normalization: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl<S: Scalar> QuadApproximant<S> {
    pub fn map<U: Scalar>(&self, f: impl Fn(&S) -> U) -> QuadApproximant<U> {
        QuadApproximant {
            p: self.p.map(&f),
            q: self.q.map(&f),
            r: self.r.map(&f),
            matched_order: self.matched_order,
            flagged_normalization: self.flagged_normalization,
        }
    }

    /// Coefficients of P u^2 + Q u + R against the source series, through
    /// `order`; all must vanish for a valid fit.
    pub fn matching_defect(&self, series: &[S], order: usize) -> Vec<S> {
        let n = order + 1;
        let s2 = conv(series, series, n);
        (0..n)
            .map(|i| {
                let mut acc = S::zero();
                for m in 0..=i.min(self.p.degree()) {
                    acc = acc.add_ref(&self.p.coeff(m).mul_ref(&s2[i - m]));
                }
                for m in 0..=i.min(self.q.degree()) {
                    acc = acc.add_ref(&self.q.coeff(m).mul_ref(&series[i - m]));
                }
                acc.add_ref(&self.r.coeff(i))
            })
            .collect()
    }
}

impl QuadApproximant<Rational> {
    pub fn to_real(&self, ctx: &PrecisionContext) -> QuadApproximant<Real> {
        self.map(|c| ctx.real_from_rational(c))
    }
}

fn conv<S: Scalar>(a: &[S], b: &[S], len: usize) -> Vec<S> {
    let mut out = vec![S::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
        }
    }
    out
}

/// Fit the quadratic approximant to a series.  The matching system is
/// solved exactly over Rational input (the endpoint series is rational) and
/// at working precision otherwise; diagonal K = L = M is the accurate
/// choice in practice.
pub fn shafer_fit<S: Scalar>(
    series: &[S],
    k: usize,
    l: usize,
    m: usize,
) -> Result<QuadApproximant<S>, ResumError> {
    let n = k + l + m + 1;
    if series.len() < n {
        return Err(ResumError::OrderTooSmall {
            need: n,
            got: series.len(),
        });
    }
    match shafer_fit_normalized(series, k, l, m, false) {
        Ok(quad) => Ok(quad),
        Err(ResumError::DegenerateOrder { .. }) => shafer_fit_normalized(series, k, l, m, true),
        Err(e) => Err(e),
    }
}

fn shafer_fit_normalized<S: Scalar>(
    series: &[S],
    k: usize,
    l: usize,
    m: usize,
    q0_zero: bool,
) -> Result<QuadApproximant<S>, ResumError> {
    let n = k + l + m + 1;
    let s2 = conv(series, series, n);
    let s = |i: usize| series[i].clone();
    let q0 = if q0_zero { S::zero() } else { S::one() };
    // unknowns x = (p_1..p_K, q_1..q_L); rows n = M+1 .. N-1
    let rows = k + l;
    let mat = Matrix::from_fn(rows, rows, |row, col| {
        let nn = m + 1 + row;
        if col < k {
            let i = col + 1;
            if i <= nn {
                s2[nn - i].clone()
            } else {
                S::zero()
            }
        } else {
            let i = col - k + 1;
            if i <= nn {
                s(nn - i)
            } else {
                S::zero()
            }
        }
    });
    let rhs: Vec<S> = (0..rows)
        .map(|row| {
            let nn = m + 1 + row;
            s2[nn].add_ref(&q0.mul_ref(&s(nn))).neg_ref()
        })
        .collect();
    let x = solve_linear(&mat, &rhs).map_err(|e| match e {
        NumError::Singular { .. } => ResumError::DegenerateOrder { j: k, k: l },
        other => ResumError::Num(other),
    })?;
    let mut p_coeffs = vec![S::one()];
    p_coeffs.extend(x[..k].iter().cloned());
    let mut q_coeffs = vec![q0];
    q_coeffs.extend(x[k..].iter().cloned());
    let p = Polynomial::new(p_coeffs);
    let q = Polynomial::new(q_coeffs);
    // r_n from the first M+1 equations
    let r_coeffs: Vec<S> = (0..=m)
        .map(|nn| {
            let mut acc = S::zero();
            for i in 0..=nn.min(k) {
                acc = acc.add_ref(&p.coeff(i).mul_ref(&s2[nn - i]));
            }
            for i in 0..=nn.min(l) {
                acc = acc.add_ref(&q.coeff(i).mul_ref(&s(nn - i)));
            }
            acc.neg_ref()
        })
        .collect();
    Ok(QuadApproximant {
        p,
        q,
        r: Polynomial::new(r_coeffs),
        matched_order: n - 1,
        flagged_normalization: q0_zero,
    })
}

/// Evaluation of one branch at a point, complex square root permitted.
/// Returns the value and whether the discriminant was negative there.
pub fn shafer_eval(
    quad: &QuadApproximant<Real>,
    s: &Real,
    branch: Branch,
    ctx: &PrecisionContext,
) -> Result<(ComplexReal, bool), ResumError> {
    let p = quad.p.eval(s);
    if p.is_zero() {
        return Err(ResumError::PoleAt(s.to_sig_string(10)));
    }
    let q = quad.q.eval(s);
    let r = quad.r.eval(s);
    let disc = &(&q * &q) - &(&(&ctx.real_from_i64(4) * &p) * &r);
    let complex = disc.signum_i() < 0;
    let w = ComplexReal::from_real(disc).sqrt();
    let signed_w = match branch {
        Branch::Plus => w,
        Branch::Minus => -&w,
    };
    let num = &signed_w - &ComplexReal::from_real(q);
    let den = ComplexReal::from_real(&p + &p);
    Ok((&num / &den, complex))
}

/// Both branch derivatives up to second order at a point, for the residual
/// diagnostics: u = (-Q +/- sqrt(disc))/(2P) differentiated analytically.
pub fn shafer_eval_d2(
    quad: &QuadApproximant<Real>,
    s: &Real,
    branch: Branch,
    ctx: &PrecisionContext,
) -> Result<(ComplexReal, ComplexReal, ComplexReal), ResumError> {
    let pval = quad.p.eval(s);
    if pval.is_zero() {
        return Err(ResumError::PoleAt(s.to_sig_string(10)));
    }
    let c = ComplexReal::from_real;
    let dp = quad.p.derivative();
    let dq = quad.q.derivative();
    let dr = quad.r.derivative();
    let (p, p1, p2) = (
        c(pval),
        c(dp.eval(s)),
        c(dp.derivative().eval(s)),
    );
    let (q, q1, q2) = (
        c(quad.q.eval(s)),
        c(dq.eval(s)),
        c(dq.derivative().eval(s)),
    );
    let (r, r1, r2) = (
        c(quad.r.eval(s)),
        c(dr.eval(s)),
        c(dr.derivative().eval(s)),
    );
    let four = c(ctx.real_from_i64(4));
    let two = c(ctx.real_from_i64(2));
    // disc and its derivatives
    let d0 = &(&q * &q) - &(&(&four * &p) * &r);
    let d1 = &(&two * &(&q * &q1)) - &(&four * &(&(&p1 * &r) + &(&p * &r1)));
    let d2 = &(&two * &(&(&q1 * &q1) + &(&q * &q2)))
        - &(&four * &(&(&(&p2 * &r) + &(&two * &(&p1 * &r1))) + &(&p * &r2)));
    let w = d0.sqrt();
    if w.modulus().is_zero() {
        return Err(ResumError::PoleAt(format!(
            "discriminant vanishes at {}",
            s.to_sig_string(10)
        )));
    }
    let w1 = &d1 / &(&two * &w);
    let w2 = &(&d2 / &(&two * &w)) - &(&(&d1 * &d1) / &(&(&four * &w) * &(&w * &w)));
    let (sw, sw1, sw2) = match branch {
        Branch::Plus => (w, w1, w2),
        Branch::Minus => (-&w, -&w1, -&w2),
    };
    let f = &sw - &q;
    let f1 = &sw1 - &q1;
    let f2 = &sw2 - &q2;
    // g = 1/(2P), g' = -P'/(2P^2), g'' = -P''/(2P^2) + P'^2/P^3
    let g = &c(ctx.real_from_i64(1)) / &(&two * &p);
    let g1 = -&(&p1 / &(&two * &(&p * &p)));
    let g2 = &(&(&p1 * &p1) / &(&(&p * &p) * &p)) - &(&p2 / &(&two * &(&p * &p)));
    let u = &f * &g;
    let u1 = &(&f1 * &g) + &(&f * &g1);
    let u2 = &(&(&f2 * &g) + &(&two * &(&f1 * &g1))) + &(&f * &g2);
    Ok((u, u1, u2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    // sqrt(1+s) solves u^2 - (1+s) = 0; with the P(0)=Q(0)=1 normalization
    // the K=L=M=1 fit solved by hand gives P = 1 - s/8, Q = 1 + s/2,
    // R = -2 - 15 s/8.
    #[test]
    fn sqrt_one_plus_s_hand_fit() {
        let series = vec![q(1, 1), q(1, 2), q(-1, 8), q(1, 16)];
        let quad = shafer_fit(&series, 1, 1, 1).unwrap();
        assert!(!quad.flagged_normalization);
        assert_eq!(quad.p.coeffs(), &[q(1, 1), q(-1, 8)]);
        assert_eq!(quad.q.coeffs(), &[q(1, 1), q(1, 2)]);
        assert_eq!(quad.r.coeffs(), &[q(-2, 1), q(-15, 8)]);
        // and it reproduces the function to the matched order
        let ctx = PrecisionContext::new(30);
        let qr = quad.to_real(&ctx);
        let s = ctx.real_from_str("0.3");
        let (u, complex) = shafer_eval(&qr, &s, Branch::Plus, &ctx).unwrap();
        assert!(!complex);
        let exact = ctx.real_from_str("1.3").sqrt();
        let err = (&u.re - &exact).abs();
        assert!(
            err < ctx.real_from_str("2e-4"),
            "err {}",
            err.to_sig_string(4)
        );
    }

    #[test]
    fn matching_identity_exact() {
        // endpoint-series fits must null the first N coefficients exactly
        let c = tfsolve_series::endpoint_coeffs(40);
        let flipped: Vec<Rational> = c
            .iter()
            .enumerate()
            .map(|(j, cj)| if j % 2 == 1 { -cj } else { cj.clone() })
            .collect();
        for (k, l, m) in [(2, 2, 2), (4, 4, 4), (3, 2, 4)] {
            let quad = shafer_fit(&flipped, k, l, m).unwrap();
            let n = k + l + m + 1;
            let defect = quad.matching_defect(&flipped, n - 1);
            for (i, d) in defect.iter().enumerate() {
                assert!(d.is_zero(), "({k},{l},{m}) defect at {i}: {d}");
            }
        }
    }

    // at s = 0 the fitted quadratic u^2 + u + r0 = 0 has the physical root
    // c0 = 1/144 on the plus branch (the minus branch carries -1 - c0)
    #[test]
    fn physical_branch_reproduces_c0() {
        let ctx = PrecisionContext::new(40);
        let c = tfsolve_series::endpoint_coeffs(10);
        let flipped: Vec<Rational> = c
            .iter()
            .enumerate()
            .map(|(j, cj)| if j % 2 == 1 { -cj } else { cj.clone() })
            .collect();
        let quad = shafer_fit(&flipped, 3, 3, 3).unwrap().to_real(&ctx);
        let zero = ctx.real_from_i64(0);
        let (up, _) = shafer_eval(&quad, &zero, Branch::Plus, &ctx).unwrap();
        let c0 = ctx.real_from_rational(&q(1, 144));
        assert!(up.is_real());
        assert!(up.re.agreed_digits(&c0, 35) >= 35);
        let (um, _) = shafer_eval(&quad, &zero, Branch::Minus, &ctx).unwrap();
        let other = ctx.real_from_rational(&q(-145, 144));
        assert!(um.re.agreed_digits(&other, 35) >= 35);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let ctx = PrecisionContext::new(40);
        let c = tfsolve_series::endpoint_coeffs(20);
        let flipped: Vec<Rational> = c
            .iter()
            .enumerate()
            .map(|(j, cj)| if j % 2 == 1 { -cj } else { cj.clone() })
            .collect();
        let quad = shafer_fit(&flipped, 5, 5, 5).unwrap().to_real(&ctx);
        let s = ctx.real_from_str("-0.4");
        let h = ctx.pow10(-12);
        let (u, u1, u2) = shafer_eval_d2(&quad, &s, Branch::Plus, &ctx).unwrap();
        let (up, _) = shafer_eval(&quad, &(&s + &h), Branch::Plus, &ctx).unwrap();
        let (um, _) = shafer_eval(&quad, &(&s - &h), Branch::Plus, &ctx).unwrap();
        let fd1 = &(&up.re - &um.re) / &(&h + &h);
        let fd2 = &(&(&up.re + &um.re) - &(&u.re + &u.re)) / &(&h * &h);
        assert!(u1.re.agreed_digits(&fd1, 10) >= 10);
        assert!(u2.re.agreed_digits(&fd2, 8) >= 8);
    }
}
