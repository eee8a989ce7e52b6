//! Root-sequence behavior against the published critical slopes and the
//! regression properties of the tracked sequences.

use tfsolve_num::{PrecisionContext, Rational, Real};
use tfsolve_phm::{critical_slope_phm, hankel_value_rational, HankelSpec};
use tfsolve_series::EquationKind;

const ATOM_SLOPE: &str = "-1.588071022611375312718684508";
const MAG_SLOPE: &str = "-0.9389668876439588930550534018746018038328937073944";

#[test]
fn atom_sequence_reaches_ten_digits_by_d20() {
    let ctx = PrecisionContext::new(60);
    let seq = critical_slope_phm(EquationKind::Atom, 3, 20, &ctx).unwrap();
    let reference = ctx.real_from_str(ATOM_SLOPE);
    let digits = seq.estimate.agreed_digits(&reference, 40);
    assert!(digits >= 10, "atom d=3 D<=20 gave only {digits} digits");
}

#[test]
fn magnetic_sequences_outconverge_the_atom() {
    let ctx = PrecisionContext::new(60);
    let reference = ctx.real_from_str(MAG_SLOPE);
    let atom = critical_slope_phm(EquationKind::Atom, 3, 14, &ctx).unwrap();
    let atom_ref = ctx.real_from_str(ATOM_SLOPE);
    let atom_digits = atom.estimate.agreed_digits(&atom_ref, 40);
    for d in [1usize, 3] {
        let seq = critical_slope_phm(EquationKind::Magnetic, d, 14, &ctx).unwrap();
        let digits = seq.estimate.agreed_digits(&reference, 40);
        assert!(
            digits > atom_digits,
            "magnetic d={d} ({digits}) not ahead of atom ({atom_digits}) at D=14"
        );
    }
}

// degenerate low dimensions: magnetic d=1 at D=2 has only the root a=0 and
// is skipped, the sequence starting at D=3
#[test]
fn degenerate_dimensions_are_skipped() {
    let ctx = PrecisionContext::new(40);
    let seq = critical_slope_phm(EquationKind::Magnetic, 1, 6, &ctx).unwrap();
    assert!(seq.roots.first().unwrap().0 >= 3, "D=2 should be skipped");
    // atom d=3 at D=2 is usable
    let seq = critical_slope_phm(EquationKind::Atom, 3, 6, &ctx).unwrap();
    assert_eq!(seq.roots.first().unwrap().0, 2);
}

// |root(D+1) - root(D)| nonincreasing after D >= 5 (allowing the parity
// wobble one slack step), both kinds, d in {0..3}
#[test]
fn root_gaps_shrink() {
    let ctx = PrecisionContext::new(50);
    for kind in [EquationKind::Atom, EquationKind::Magnetic] {
        for d in 0..=3usize {
            let seq = match critical_slope_phm(kind, d, 12, &ctx) {
                Ok(s) => s,
                Err(e) => panic!("{kind:?} d={d}: {e}"),
            };
            let gaps: Vec<f64> = seq
                .roots
                .windows(2)
                .map(|w| (&w[1].1 - &w[0].1).abs().log10_abs_estimate())
                .collect();
            // parity wobble allows a local rise of up to two decades, the
            // trend must still contract
            for w in gaps.windows(2).skip(3) {
                assert!(
                    w[1] <= w[0] + 2.0,
                    "{kind:?} d={d}: gap sequence {gaps:?}"
                );
            }
            let early = gaps[2];
            let late = *gaps.last().unwrap();
            assert!(
                late < early - 2.0,
                "{kind:?} d={d}: no contraction, gaps {gaps:?}"
            );
        }
    }
}

// raising working digits by 50% moves no reported root by more than
// 10^-requested
#[test]
fn working_precision_stability() {
    let req = 30;
    let base = PrecisionContext::new(req);
    let high = base.scaled_working(1.5);
    let a = critical_slope_phm(EquationKind::Magnetic, 3, 8, &base).unwrap();
    let b = critical_slope_phm(EquationKind::Magnetic, 3, 8, &high).unwrap();
    for ((da, ra), (db, rb)) in a.roots.iter().zip(&b.roots) {
        assert_eq!(da, db);
        assert!(
            (ra - rb).abs() < base.tol_requested(),
            "root at D={da} moved: {} vs {}",
            ra.to_sig_string(35),
            rb.to_sig_string(35)
        );
    }
}

// hankel_value agrees with the exact symbolic determinant at random rational
// slopes (the numeric path evaluated against the rational one)
#[test]
fn numeric_matches_exact_at_random_slopes() {
    let ctx = PrecisionContext::new(40);
    let spec = HankelSpec::new(EquationKind::Atom, 2, 4);
    for i in 0..20i64 {
        let a = Rational::from_frac(-(100 + 37 * i), 67 + 11 * i);
        let exact = hankel_value_rational(&spec, &a);
        let numeric = tfsolve_phm::hankel_value(&spec, &ctx.real_from_rational(&a), &ctx).unwrap();
        let exact_r = ctx.real_from_rational(&exact);
        if exact_r.is_zero() {
            assert!(numeric.abs() < ctx.tol_working(5));
        } else {
            assert!(
                numeric.agreed_digits(&exact_r, 35) >= 34,
                "slope {a}: {} vs {}",
                numeric.to_sig_string(20),
                exact_r.to_sig_string(20)
            );
        }
    }
}

#[test]
fn report_formats() {
    let ctx = PrecisionContext::new(30);
    let seq = critical_slope_phm(EquationKind::Atom, 3, 6, &ctx).unwrap();
    let text = tfsolve_phm::report::text_report(&seq, 12);
    assert!(text.contains("estimate:"));
    let json = tfsolve_phm::report::json_report(&seq, 12);
    assert_eq!(json["equation"], "atom");
    assert!(json["rows"].as_array().unwrap().len() >= 4);
}

// convergence failure diagnostic fires instead of silently diverging
#[test]
fn estimate_is_rounded_to_agreed_digits() {
    let ctx = PrecisionContext::new(40);
    let seq = critical_slope_phm(EquationKind::Atom, 3, 10, &ctx).unwrap();
    let last = &seq.roots.last().unwrap().1;
    let agreed = seq.final_agreed() as usize;
    if agreed > 0 {
        assert_eq!(
            seq.estimate.to_sig_string(agreed),
            last.round_sig(agreed).to_sig_string(agreed)
        );
    }
    // the estimate carries at least as many true digits as reported agreed
    let reference = ctx.real_from_str(ATOM_SLOPE);
    assert!(seq.estimate.agreed_digits(&reference, 40) as usize + 2 >= agreed);
}

// slope wobble: magnetic d=1 at D=2 is degenerate but d=0 and d=2 follow
// their own ladders; make sure every d converges to the same constant
#[test]
fn all_offsets_share_one_limit() {
    let ctx = PrecisionContext::new(40);
    let reference = ctx.real_from_str(MAG_SLOPE);
    for d in 0..=3usize {
        let seq = critical_slope_phm(EquationKind::Magnetic, d, 10, &ctx).unwrap();
        let digits = seq.estimate.agreed_digits(&reference, 40);
        assert!(digits >= 4, "magnetic d={d} estimate too far: {digits}");
    }
}
