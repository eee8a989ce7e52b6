use tfsolve_num::{
    determinant, determinant_cofactor, find_root, Matrix, NumError, Polynomial, PrecisionContext,
    Rational, Real, Seed,
};
use tfsolve_series::{origin_v_coeffs, origin_v_coeffs_symbolic, EquationKind};

use crate::PhmError;

/// Which Hankel determinant: H_D^d = |v_{i+j+d+1}|, i,j = 0..D-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HankelSpec {
    pub kind: EquationKind,
    /// index offset d
    pub d: usize,
    /// dimension D
    pub dim: usize,
}

impl HankelSpec {
    pub fn new(kind: EquationKind, d: usize, dim: usize) -> Self {
        Self { kind, d, dim }
    }

    /// Highest series index used: v_{2(D-1) + d + 1}.
    pub fn series_order(&self) -> usize {
        2 * (self.dim - 1) + self.d + 1
    }
}

/// Numerical Hankel determinant at slope a.  Evaluated twice, the second
/// time with 20 extra guard digits; disagreement beyond the requested digits
/// relative to the matrix's Hadamard scale means the cancellation ate the
/// working precision and the caller must raise it.
pub fn hankel_value(spec: &HankelSpec, a: &Real, ctx: &PrecisionContext) -> Result<Real, PhmError> {
    let (base, scale_log10) = hankel_value_raw(spec, a, ctx);
    let (check, _) = hankel_value_raw(spec, a, &ctx.bumped(20));
    let diff = (&base - &check).abs();
    let noise_floor = scale_log10 - ctx.requested_digits() as f64;
    if !diff.is_zero() && diff.log10_abs_estimate() > noise_floor {
        return Err(PhmError::Num(NumError::PrecisionStarved(format!(
            "H_{}^{} at a={}: evaluations at working and working+20 digits \
             differ at 1e{:.0} against a determinant scale of 1e{:.0}",
            spec.d,
            spec.dim,
            a.to_sig_string(8),
            diff.log10_abs_estimate(),
            scale_log10
        ))));
    }
    Ok(check)
}

/// Single evaluation without the dual-precision verification, for sign scans.
pub(crate) fn hankel_value_single(spec: &HankelSpec, a: &Real, ctx: &PrecisionContext) -> Real {
    hankel_value_raw(spec, a, ctx).0
}

/// Returns the determinant and the log10 of its Hadamard bound
/// (product of row 2-norms), the natural cancellation-free scale.
fn hankel_value_raw(spec: &HankelSpec, a: &Real, ctx: &PrecisionContext) -> (Real, f64) {
    let a = a.with_prec(ctx.prec_bits());
    let v = origin_v_coeffs(spec.kind, &a, spec.series_order());
    let m = Matrix::from_fn(spec.dim, spec.dim, |i, j| v[i + j + spec.d + 1].clone());
    let mut scale_log10 = 0.0f64;
    for i in 0..spec.dim {
        let mut row_max = f64::NEG_INFINITY;
        for j in 0..spec.dim {
            row_max = row_max.max(m.get(i, j).log10_abs_estimate());
        }
        if row_max.is_finite() {
            scale_log10 += row_max + 0.5 * (spec.dim as f64).log10();
        }
    }
    (determinant(&m).expect("square by construction"), scale_log10)
}

/// Exact rational determinant at a rational slope, for cross-checks.
pub fn hankel_value_rational(spec: &HankelSpec, a: &Rational) -> Rational {
    let v = origin_v_coeffs(spec.kind, a, spec.series_order());
    let m = Matrix::from_fn(spec.dim, spec.dim, |i, j| v[i + j + spec.d + 1].clone());
    determinant(&m).expect("square by construction")
}

/// Symbolic determinant as a polynomial in the slope a (cofactor expansion,
/// practical for D <= 5).
pub fn hankel_polynomial(spec: &HankelSpec) -> Result<Polynomial<Rational>, PhmError> {
    if spec.dim > 5 {
        return Err(PhmError::Invalid(
            "symbolic Hankel determinants limited to D <= 5".into(),
        ));
    }
    let v = origin_v_coeffs_symbolic(spec.kind, spec.series_order());
    let m = Matrix::from_fn(spec.dim, spec.dim, |i, j| v[i + j + spec.d + 1].clone());
    Ok(determinant_cofactor(&m).expect("square by construction"))
}

/// Root of H_D^d(a) = 0 from a bracket or a previous-dimension seed.
pub fn hankel_root(
    spec: &HankelSpec,
    seed: Seed,
    ctx: &PrecisionContext,
) -> Result<Real, PhmError> {
    let root = find_root(
        |a| hankel_value(spec, a, ctx).map_err(flatten),
        seed,
        ctx,
        400,
    )
    .map_err(PhmError::Num)?;
    Ok(root)
}

fn flatten(e: PhmError) -> NumError {
    match e {
        PhmError::Num(n) => n,
        other => NumError::InvalidInput(other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    // Atom, d=1, D=2: H = v2 v4 - v3^2 = -a^3/16 - 4/9 (by hand from
    // v2 = a/2, v3 = 2/3, v4 = -a^2/8); at a = -2 the value is 1/18.
    #[test]
    fn atom_d1_2x2_hand_value() {
        let spec = HankelSpec::new(EquationKind::Atom, 1, 2);
        let v = hankel_value_rational(&spec, &q(-2, 1));
        assert_eq!(v, q(1, 18));
        let ctx = PrecisionContext::new(30);
        let num = hankel_value(&spec, &ctx.real_from_i64(-2), &ctx).unwrap();
        assert!(num.agreed_digits(&ctx.real_from_rational(&q(1, 18)), 28) >= 28);
    }

    // Magnetic, d=3, D=2: H = v4 v6 - v5^2 = -a^5/128 - 4/225 (by hand from
    // v4 = -a^2/8, v5 = 2/15, v6 = a^3/16).
    #[test]
    fn magnetic_d3_2x2_hand_value() {
        let spec = HankelSpec::new(EquationKind::Magnetic, 3, 2);
        let a = q(-3, 2);
        let expect = &(-&a.pow_i32(5)) / &q(128, 1) - q(4, 225);
        assert_eq!(hankel_value_rational(&spec, &a), expect);
    }

    // D=1, d=0 picks out v1, which vanishes identically.
    #[test]
    fn v1_vanishes_for_all_slopes() {
        for kind in [EquationKind::Atom, EquationKind::Magnetic] {
            let spec = HankelSpec::new(kind, 0, 1);
            for a in [q(-1, 1), q(-2, 3), q(-31, 17)] {
                assert!(hankel_value_rational(&spec, &a).is_zero());
            }
        }
    }

    // Atom, d=1, D=2 root: -a^3/16 = 4/9  =>  a = -(64/9)^(1/3)
    #[test]
    fn atom_d1_2x2_closed_form_root() {
        let ctx = PrecisionContext::new(35);
        let spec = HankelSpec::new(EquationKind::Atom, 1, 2);
        let root = hankel_root(
            &spec,
            Seed::Bracket(ctx.real_from_i64(-3), ctx.real_from_str("-0.5")),
            &ctx,
        )
        .unwrap();
        let expect = -(&ctx.real_from_i64(64) / &ctx.real_from_i64(9)).root_u32(3);
        assert!(root.agreed_digits(&expect, 33) >= 33);
        assert_eq!(root.to_sig_string(6), "-1.92300e0");
    }

    // Magnetic, d=3, D=2 root: a = -(512/225)^(1/5) = -1.17875...
    #[test]
    fn magnetic_d3_2x2_closed_form_root() {
        let ctx = PrecisionContext::new(35);
        let spec = HankelSpec::new(EquationKind::Magnetic, 3, 2);
        let root = hankel_root(
            &spec,
            Seed::Bracket(ctx.real_from_i64(-3), ctx.real_from_str("-0.5")),
            &ctx,
        )
        .unwrap();
        let expect = -(&ctx.real_from_i64(512) / &ctx.real_from_i64(225)).root_u32(5);
        assert!(root.agreed_digits(&expect, 33) >= 33);
        assert_eq!(root.to_sig_string(5), "-1.1787e0");
    }

    // numeric evaluation against the exact symbolic polynomial for D <= 5
    #[test]
    fn symbolic_matches_numeric() {
        let ctx = PrecisionContext::new(40);
        for kind in [EquationKind::Atom, EquationKind::Magnetic] {
            for d in 0..=3 {
                for dim in 2..=4 {
                    let spec = HankelSpec::new(kind, d, dim);
                    let poly = hankel_polynomial(&spec).unwrap();
                    for i in 0..5 {
                        let a = q(-3 - i, 2 + i);
                        assert_eq!(
                            hankel_value_rational(&spec, &a),
                            poly.eval(&a),
                            "{kind:?} d={d} D={dim} a={a}"
                        );
                    }
                }
            }
        }
    }
}
