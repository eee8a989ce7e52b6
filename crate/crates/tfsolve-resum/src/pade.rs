use tfsolve_num::{solve_linear, Matrix, NumError, Polynomial, Scalar};

use crate::ResumError;

/// Rational approximant [J/K]: numerator degree J, denominator degree K,
/// denominator constant term 1, Taylor expansion matching the source series
/// through degree J + K.
#[derive(Debug, Clone)]
pub struct PadeApproximant<S: Scalar> {
    pub num: Polynomial<S>,
    pub den: Polynomial<S>,
    pub matched_order: usize,
}

impl<S: Scalar> PadeApproximant<S> {
    pub fn eval(&self, x: &S) -> S {
        self.num.eval(x).div_ref(&self.den.eval(x))
    }

    /// Taylor coefficients of num/den through `order`, by long division.
    pub fn taylor(&self, order: usize) -> Vec<S> {
        let mut t = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for m in 1..=n.min(self.den.degree()) {
                acc = acc.sub_ref(&self.den.coeff(m).mul_ref(&t[n - m]));
            }
            t.push(acc);
        }
        t
    }
}

/// Fit [J/K] to the series coefficients (ascending powers).  The linear
/// system for the denominator is the usual Toeplitz block; a singular system
/// signals a degenerate approximant order and the caller retries with J-1 or
/// K-1.
pub fn pade_fit<S: Scalar>(
    series: &[S],
    j: usize,
    k: usize,
) -> Result<PadeApproximant<S>, ResumError> {
    if series.len() <= j + k {
        return Err(ResumError::OrderTooSmall {
            need: j + k + 1,
            got: series.len(),
        });
    }
    let c = |n: isize| -> S {
        if n < 0 {
            S::zero()
        } else {
            series[n as usize].clone()
        }
    };
    let den = if k == 0 {
        Polynomial::one()
    } else {
        let m = Matrix::from_fn(k, k, |i, mm| c(j as isize + 1 + i as isize - (mm as isize + 1)));
        let rhs: Vec<S> = (0..k).map(|i| c((j + 1 + i) as isize).neg_ref()).collect();
        let b = solve_linear(&m, &rhs).map_err(|e| match e {
            NumError::Singular { .. } => ResumError::DegenerateOrder { j, k },
            other => ResumError::Num(other),
        })?;
        let mut den_coeffs = vec![S::one()];
        den_coeffs.extend(b);
        Polynomial::new(den_coeffs)
    };
    let num_coeffs: Vec<S> = (0..=j)
        .map(|n| {
            let mut acc = S::zero();
            for m in 0..=n.min(k) {
                acc = acc.add_ref(&den.coeff(m).mul_ref(&c(n as isize - m as isize)));
            }
            acc
        })
        .collect();
    Ok(PadeApproximant {
        num: Polynomial::new(num_coeffs),
        den,
        matched_order: j + k,
    })
}
