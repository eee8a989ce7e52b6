//! Origin expansions of both equations, in the raw variable (half-integer
//! powers of x) and in the transformed variable t = x^(1/2) after the
//! substitution v(t) = sqrt(u(t^2)).

use tfsolve_num::{Rational, Scalar};

use crate::EquationKind;

/// Coefficients g_k of u = sum g_k x^(k/2) through lattice index
/// `half_order` inclusive, for slope u'(0) = a.
///
/// Single forward pass: u'' matched against u^(3/2) x^(-1/2) (atom) or
/// x^(1/2) u^(1/2) (magnetic), with the fractional power tracked
/// incrementally by the Miller recurrence.
pub fn origin_u_coeffs<S: Scalar>(kind: EquationKind, a: &S, half_order: usize) -> Vec<S> {
    let len = half_order + 1;
    let mut g = vec![a.zero_like(); len];
    g[0] = a.one_like();
    if len > 2 {
        g[2] = a.clone();
    }
    // h = (1 + w)^alpha with w = u - 1
    let alpha = match kind {
        EquationKind::Atom => Rational::from_frac(3, 2),
        EquationKind::Magnetic => Rational::from_frac(1, 2),
    };
    // rhs lattice shift: u'' coefficient at tau^(m-4) equals
    //   atom:      (u^(3/2))_{m-3} at tau^(m-4) via the x^(-1/2) factor
    //   magnetic:  (u^(1/2))_{m-5} via the x^(+1/2) factor
    let shift = match kind {
        EquationKind::Atom => 3usize,
        EquationKind::Magnetic => 5usize,
    };
    let mut h = vec![a.zero_like(); len];
    h[0] = a.one_like();
    let alpha_plus = &alpha + &Rational::one();
    for m in 3..len {
        // extend h to index m - shift (needs w = g up to the same index,
        // all already known because shift >= 3)
        if m >= shift {
            let n = m - shift;
            if n >= 1 {
                let mut acc = g[0].zero_like();
                for j in 1..=n {
                    if g[j].is_zero() {
                        continue;
                    }
                    let factor = &(&alpha_plus * &Rational::from_i64(j as i64))
                        - &Rational::from_i64(n as i64);
                    if factor.is_zero() {
                        continue;
                    }
                    acc = acc.add_ref(&g[j].mul_ref(&h[n - j]).mul_rat(&factor));
                }
                h[n] = acc.mul_rat(&Rational::from_frac(1, n as i64));
            }
            // u'': g_m (m/2)(m/2 - 1) = g_m m (m-2)/4
            let rhs = h[m - shift].clone();
            g[m] = rhs.mul_rat(&Rational::from_frac(4, (m as i64) * (m as i64 - 2)));
        }
    }
    g
}

/// Coefficients v_j of v(t) = sqrt(u(t^2)) = sum v_j t^j through `order`
/// inclusive; v_0 = 1, v_1 = 0, v_2 = a/2 and the rest follow from
///   t (v v'' + v'^2) - v v' = 2 t^2 v^3   (atom)
///   t (v v'' + v'^2) - v v' = 2 t^4 v     (magnetic)
/// matched order by order.  Independent of [`origin_u_coeffs`], which the
/// consistency tests exploit.
pub fn origin_v_coeffs<S: Scalar>(kind: EquationKind, a: &S, order: usize) -> Vec<S> {
    let len = order + 1;
    let mut v = vec![a.zero_like(); len];
    v[0] = a.one_like();
    if len > 2 {
        v[2] = a.mul_rat(&Rational::from_frac(1, 2));
    }
    // v^2 built lazily; index m only ever needs v[0..=m], all final by then
    let mut v2: Vec<S> = Vec::with_capacity(len);
    let extend_v2 = |v: &[S], v2: &mut Vec<S>, upto: usize| {
        while v2.len() <= upto {
            let m = v2.len();
            let mut acc = v[0].zero_like();
            for i in 0..=m {
                if v[i].is_zero() || v[m - i].is_zero() {
                    continue;
                }
                acc = acc.add_ref(&v[i].mul_ref(&v[m - i]));
            }
            v2.push(acc);
        }
    };
    for n in 2..len.saturating_sub(1) {
        // A_n = (V V'')_{n-1} without the v_{n+1} term
        let mut a_sum = v[0].zero_like();
        for q in 2..=n {
            let p = n + 1 - q;
            if v[p].is_zero() || v[q].is_zero() {
                continue;
            }
            let w = Rational::from_i64((q * (q - 1)) as i64);
            a_sum = a_sum.add_ref(&v[p].mul_ref(&v[q]).mul_rat(&w));
        }
        // B_n = (V'^2)_{n-1}
        let mut b_sum = v[0].zero_like();
        for p in 1..=n {
            let q = n + 1 - p;
            if q < 1 || q > n {
                continue;
            }
            if v[p].is_zero() || v[q].is_zero() {
                continue;
            }
            let w = Rational::from_i64((p * q) as i64);
            b_sum = b_sum.add_ref(&v[p].mul_ref(&v[q]).mul_rat(&w));
        }
        // C_n = (V V')_n without the v_{n+1} term
        let mut c_sum = v[0].zero_like();
        for q in 1..=n {
            let p = n + 1 - q;
            if v[p].is_zero() || v[q].is_zero() {
                continue;
            }
            let w = Rational::from_i64(q as i64);
            c_sum = c_sum.add_ref(&v[p].mul_ref(&v[q]).mul_rat(&w));
        }
        // nonlinear term
        let d_sum = match kind {
            EquationKind::Atom => {
                // (V^3)_{n-2} = sum_i (V^2)_i v_{n-2-i}
                let m = n - 2;
                extend_v2(&v, &mut v2, m);
                let mut acc = v[0].zero_like();
                for i in 0..=m {
                    if v2[i].is_zero() || v[m - i].is_zero() {
                        continue;
                    }
                    acc = acc.add_ref(&v2[i].mul_ref(&v[m - i]));
                }
                acc
            }
            EquationKind::Magnetic => {
                if n >= 4 {
                    v[n - 4].clone()
                } else {
                    v[0].zero_like()
                }
            }
        };
        // v_{n+1} (n+1)(n-1) = C + 2 D - A - B
        let num = c_sum
            .add_ref(&d_sum.mul_rat(&Rational::from_i64(2)))
            .sub_ref(&a_sum)
            .sub_ref(&b_sum);
        v[n + 1] = num.mul_rat(&Rational::from_frac(1, ((n + 1) * (n - 1)) as i64));
    }
    v
}

/// v_j as exact polynomials in the slope a, for the symbolic Hankel checks.
pub fn origin_v_coeffs_symbolic(
    kind: EquationKind,
    order: usize,
) -> Vec<tfsolve_num::Polynomial<Rational>> {
    let a = tfsolve_num::Polynomial::x();
    origin_v_coeffs(kind, &a, order)
}

/// Squares the v-series, giving u-lattice coefficients; used by the
/// cross-consistency tests (t^2 -> x maps index j to exponent j/2).
pub fn square_series<S: Scalar>(v: &[S]) -> Vec<S> {
    crate::halfstep::mul_trunc(v, v, v.len())
}
