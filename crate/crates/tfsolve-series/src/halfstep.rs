//! Dense truncated series over a lattice variable tau (tau = x^(1/2) for the
//! origin expansions, tau = s^(1/2) for movable-point models, tau = s for
//! integer-step lattices).  Coefficient vectors are indexed by lattice step.

use tfsolve_num::{Rational, Scalar};

/// c[i+j] += a[i] * b[j], truncated at len.
pub fn mul_trunc<S: Scalar>(a: &[S], b: &[S], len: usize) -> Vec<S> {
    let hint = a.first().cloned().unwrap_or_else(S::zero);
    let mut out = vec![hint.zero_like(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add_ref(&ai.mul_ref(bj));
        }
    }
    out
}

pub fn add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(S::zero);
            let y = b.get(k).cloned().unwrap_or_else(S::zero);
            x.add_ref(&y)
        })
        .collect()
}

/// (1 + w)^alpha for a series with w[0] = 0, by the J.C.P. Miller recurrence:
/// n g_n = sum_{j=1..n} ((alpha+1) j - n) w_j g_{n-j}.
pub fn binom_pow_one_plus<S: Scalar>(w: &[S], alpha: &Rational, len: usize) -> Vec<S> {
    assert!(w.is_empty() || w[0].is_zero(), "series must start at 1");
    let hint = w.first().cloned().unwrap_or_else(S::zero);
    let mut g = vec![hint.zero_like(); len];
    if len == 0 {
        return g;
    }
    g[0] = hint.one_like();
    for n in 1..len {
        let mut acc = hint.zero_like();
        for j in 1..=n.min(w.len().saturating_sub(1)) {
            if w[j].is_zero() {
                continue;
            }
            let factor = &(&(alpha + &Rational::one()) * &Rational::from_i64(j as i64))
                - &Rational::from_i64(n as i64);
            if factor.is_zero() {
                continue;
            }
            acc = acc.add_ref(&w[j].mul_ref(&g[n - j]).mul_rat(&factor));
        }
        g[n] = acc.mul_rat(&Rational::from_frac(1, n as i64));
    }
    g
}

/// Coefficients of (1 - s)^alpha on an integer lattice in s.
pub fn one_minus_s_pow(alpha: &Rational, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut c = Rational::one();
    out.push(c.clone());
    for k in 1..len {
        // c_k = c_{k-1} * (alpha - k + 1)/k * (-1)
        let num = alpha - &Rational::from_i64(k as i64 - 1);
        c = &(&c * &num) / &Rational::from_i64(-(k as i64));
        out.push(c.clone());
    }
    out
}

/// Series with its lattice metadata: term k carries exponent (k_min + k)/den
/// in the local variable (den = 2 for half-integer lattices, 1 for integer).
#[derive(Debug, Clone)]
pub struct LatticeSeries<S: Scalar> {
    pub k_min: i64,
    pub den: i64,
    pub coeffs: Vec<S>,
}

impl<S: Scalar> LatticeSeries<S> {
    pub fn exponent(&self, idx: usize) -> Rational {
        Rational::from_frac(self.k_min + idx as i64, self.den)
    }
}
