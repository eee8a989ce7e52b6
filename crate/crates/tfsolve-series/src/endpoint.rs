//! Universal right-endpoint expansions of the magnetic equation.  Both series
//! have parameter-free rational coefficients: the eigenlength x0 cancels
//! after substitution.

use std::sync::{Mutex, OnceLock};

use tfsolve_num::Rational;

/// Coefficients c_0..c_order of u = x0^5 s^4 sum c_j s^j, s = (x0 - x)/x0.
///
/// Derived from the squared form (w'')^2 = (1 - s) w with w = s^4 sum c_j s^j,
/// which avoids a formal square root; the sign of sqrt(c_0) is fixed positive
/// so c_0 = 1/144.
pub fn endpoint_coeffs(order: usize) -> Vec<Rational> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut b = cache.lock().unwrap();
    if b.is_empty() {
        // lattice index k >= 4 carries b_k = c_{k-4}; seed 144 b_4^2 = b_4
        b.extend([
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::from_frac(1, 144),
        ]);
    }
    while b.len() < order + 5 {
        let n = b.len() as i64;
        // (w'')^2 coefficient of s^n:
        //   sum_{i+j=n+4} i(i-1) j(j-1) b_i b_j = b_n - b_{n-1}
        // the two i-or-j = n terms contribute n(n-1)/6 * b_n; the rest have
        // indices 5..=n-1
        let mut mid = Rational::zero();
        for i in 5..=(n - 1) {
            let j = n + 4 - i;
            if j < 5 || j > n - 1 {
                continue;
            }
            let w = Rational::from_i64(i * (i - 1) * j * (j - 1));
            mid = &mid + &(&(&b[i as usize] * &b[j as usize]) * &w);
        }
        let denom = &Rational::from_frac(n * (n - 1), 6) - &Rational::one();
        let bn = &(-&(&b[(n - 1) as usize] + &mid)) / &denom;
        b.push(bn);
    }
    b[4..=(order + 4)].to_vec()
}

/// Check value of the defining convolution identity at lattice index k:
/// sum_{i+j=k+4} i(i-1) j(j-1) b_i b_j - (b_k - b_{k-1}), which must vanish
/// for every computed k.  Exposed for the recurrence cross-check tests.
pub fn endpoint_convolution_residual(k: usize) -> Rational {
    assert!(k >= 5);
    let c = endpoint_coeffs(k - 4);
    let b = |i: usize| -> Rational {
        if i >= 4 && i - 4 < c.len() {
            c[i - 4].clone()
        } else {
            Rational::zero()
        }
    };
    let mut lhs = Rational::zero();
    for i in 4..=k {
        let j = k + 4 - i;
        if j < 4 || j > k {
            continue;
        }
        let w = Rational::from_i64((i * (i - 1) * j * (j - 1)) as i64);
        lhs = &lhs + &(&(&b(i) * &b(j)) * &w);
    }
    &lhs - &(&b(k) - &b(k - 1))
}

/// Coefficients c~_0..c~_order of v_M(z) = x0^(5/2) t^2 sum c~_j t^j with
/// t = z - 1, satisfying the transformed equation
///   (1+t)(g g'' + g'^2) - g g' - 2 (1+t)^4 g = 0,   g = t^2 sum c~_j t^j.
pub fn v_endpoint_coeffs(order: usize) -> Vec<Rational> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut e = cache.lock().unwrap();
    if e.is_empty() {
        // lattice index k >= 2 carries e_k = c~_{k-2}; leading balance
        // 6 e_2^2 = 2 e_2 picks the nonzero root e_2 = 1/3
        e.extend([Rational::zero(), Rational::zero(), Rational::from_frac(1, 3)]);
    }
    while e.len() < order + 3 {
        let n = e.len() as i64;
        let term = |p: i64, q: i64, w: i64| -> Rational {
            if p < 2 || q < 2 || p >= n || q >= n {
                return Rational::zero();
            }
            &(&e[p as usize] * &e[q as usize]) * &Rational::from_i64(w)
        };
        let mut r = Rational::zero();
        // (g g'')_n and (g g'')_{n-1}, highest index n excluded
        for p in 2..n {
            let q = n + 2 - p;
            r = &r + &term(p, q, q * (q - 1));
            let q1 = n + 1 - p;
            r = &r + &term(p, q1, q1 * (q1 - 1));
        }
        // (g'^2)_n and (g'^2)_{n-1}
        for p in 2..n {
            let q = n + 2 - p;
            r = &r + &term(p, q, p * q);
            let q1 = n + 1 - p;
            r = &r + &term(p, q1, p * q1);
        }
        // -(g g')_n
        for p in 2..n {
            let q = n + 1 - p;
            r = &r - &term(p, q, q);
        }
        // -2 [(1+t)^4 g]_n, index-n term excluded
        let binom4 = [1i64, 4, 6, 4, 1];
        for (i, bc) in binom4.iter().enumerate().skip(1) {
            let idx = n - i as i64;
            if idx >= 2 && idx < n {
                r = &r - &(&e[idx as usize] * &Rational::from_i64(2 * bc));
            }
        }
        // linear coefficient of e_n is (n+4)(n-1)/3
        let denom = Rational::from_frac((n + 4) * (n - 1), 3);
        e.push(&(-&r) / &denom);
    }
    e[2..=(order + 2)].to_vec()
}
