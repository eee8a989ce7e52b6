use tfsolve_num::{NumError, PrecisionContext, Real, Seed};
use tfsolve_series::EquationKind;

use crate::hankel::{hankel_root, hankel_value, HankelSpec};
use crate::PhmError;

/// Root sequence u'0[D, d] over D = 2..D_max at fixed d, with the per-step
/// agreed-digit counts and the final estimate.
#[derive(Debug, Clone)]
pub struct RootSequence {
    pub kind: EquationKind,
    pub d: usize,
    /// (D, root) pairs for every non-degenerate dimension
    pub roots: Vec<(usize, Real)>,
    /// matching leading digits between consecutive roots (len = roots-1)
    pub agreed_digits: Vec<u32>,
    /// last root rounded to the digits agreed with its predecessor
    pub estimate: Real,
}

impl RootSequence {
    pub fn final_agreed(&self) -> u32 {
        self.agreed_digits.last().copied().unwrap_or(0)
    }
}

/// Physical search bracket for the first usable dimension.
const BRACKET: (f64, f64) = (-3.0, -0.5);

/// Critical slope by the root sequence of H_D^d over D = 2..D_max.
///
/// Degenerate low dimensions whose only root is a = 0 (no sign change inside
/// the physical bracket) are skipped; later dimensions are seeded from the
/// previous root, taking the nearest root when several exist.  A sequence
/// whose agreed-digit count drops three times in a row aborts.
pub fn critical_slope_phm(
    kind: EquationKind,
    d: usize,
    d_max: usize,
    ctx: &PrecisionContext,
) -> Result<RootSequence, PhmError> {
    if d_max < 3 {
        return Err(PhmError::Invalid("D_max must be at least 3".into()));
    }
    let mut roots: Vec<(usize, Real)> = Vec::new();
    let mut agreed: Vec<u32> = Vec::new();
    let mut drops = 0usize;
    for dim in 2..=d_max {
        let spec = HankelSpec::new(kind, d, dim);
        let found = match roots.last() {
            None => first_root(&spec, ctx)?,
            Some((_, prev)) => {
                let gap = roots.iter().rev().nth(1).map(|(_, r)| (r - prev).abs());
                seeded_root(&spec, prev, gap.as_ref(), ctx)?
            }
        };
        let Some(root) = found else {
            // degenerate dimension before the sequence started
            continue;
        };
        if let Some((_, prev)) = roots.last() {
            // a context can never certify more than its requested digits
            let a = root.agreed_digits(prev, ctx.requested_digits());
            if let Some(last) = agreed.last() {
                if a < *last {
                    drops += 1;
                    if drops >= 3 {
                        return Err(PhmError::NotConverging(drops));
                    }
                } else {
                    drops = 0;
                }
            }
            agreed.push(a);
        }
        roots.push((dim, root));
    }
    if roots.is_empty() {
        return Err(PhmError::DegenerateDeterminant { d, dim: d_max });
    }
    let estimate = match (roots.last(), agreed.last()) {
        (Some((_, r)), Some(&a)) if a > 0 => r.round_sig(a as usize),
        (Some((_, r)), _) => r.clone(),
        _ => unreachable!(),
    };
    Ok(RootSequence {
        kind,
        d,
        roots,
        agreed_digits: agreed,
        estimate,
    })
}

/// Scan the physical bracket for a sign change; None marks a degenerate
/// dimension (e.g. magnetic d <= 2 at D = 2, whose only root is a = 0).
fn first_root(spec: &HankelSpec, ctx: &PrecisionContext) -> Result<Option<Real>, PhmError> {
    let (lo, hi) = BRACKET;
    let n = 24usize;
    let mut prev: Option<(Real, Real)> = None;
    for i in 0..=n {
        let a = ctx.real_from_f64(lo + (hi - lo) * (i as f64) / (n as f64));
        let h = eval_with_escalation(spec, &a, ctx)?;
        if let Some((pa, ph)) = prev {
            if ph.signum_i() * h.signum_i() < 0 {
                let root = root_with_escalation(spec, Seed::Bracket(pa, a.clone()), ctx)?;
                return Ok(Some(root));
            }
        }
        prev = Some((a, h));
    }
    Ok(None)
}

/// Root for the next dimension, from two competing candidates.
///
/// A sign-change root near the seed (expanding-window scan) is reliable
/// while the sequence takes large steps; once the physical root becomes the
/// center of a collapsing multiplet, sign scans lose it (adjacent ladder
/// rungs cancel within one scan cell) but |H| forms a funnel many orders of
/// magnitude deep, which a log-offset descent finds from the seed alone.
/// Both candidates are generated, clamped to the physical window, and scored
/// by basin depth: |H| sampled at a 1e-3 standoff stays deeply cancelled
/// only around the physical multiplet, while spurious roots are razor thin.
/// Returns None when no acceptable candidate exists (dimension skipped).
fn seeded_root(
    spec: &HankelSpec,
    prev: &Real,
    prev_gap: Option<&Real>,
    ctx: &PrecisionContext,
) -> Result<Option<Real>, PhmError> {
    let mut candidates: Vec<Real> = Vec::new();
    if let Ok((r0, width)) = sign_window_root(spec, prev, prev_gap, ctx) {
        if in_physical_window(&r0, ctx) {
            let rel_width = (&width / &r0.abs()).log10_abs_estimate();
            let coarse_k = ((-rel_width).ceil() as i64 + 1).max(2);
            candidates.push(descend(spec, r0, coarse_k, ctx));
        }
    }
    let coarse_k = match prev_gap {
        Some(g) if !g.is_zero() => {
            let rel = (&(g * &ctx.real_from_i64(4)) / &prev.abs()).log10_abs_estimate();
            ((-rel).floor() as i64).max(2)
        }
        _ => 2,
    };
    let r_descent = descend(spec, prev.clone(), coarse_k, ctx);
    if in_physical_window(&r_descent, ctx) {
        candidates.push(r_descent);
    }
    if candidates.is_empty() {
        return Ok(None);
    }
    // deepest basin wins; near-ties go to the candidate nearest the seed
    let scored: Vec<(f64, Real)> = candidates
        .into_iter()
        .map(|c| (basin_depth(spec, &c, ctx), c))
        .collect();
    let best_depth = scored
        .iter()
        .map(|(d, _)| *d)
        .fold(f64::INFINITY, f64::min);
    let winner = scored
        .into_iter()
        .filter(|(d, _)| *d <= best_depth + 0.5)
        .min_by(|(_, a), (_, b)| {
            let da = (a - prev).abs();
            let db = (b - prev).abs();
            da.partial_cmp(&db).unwrap()
        })
        .map(|(_, c)| c);
    Ok(winner)
}

fn in_physical_window(a: &Real, ctx: &PrecisionContext) -> bool {
    a > &ctx.real_from_str("-3.2") && a < &ctx.real_from_str("-0.45")
}

/// log10 |H| averaged over the two 1e-3-relative standoff points.
fn basin_depth(spec: &HankelSpec, r: &Real, ctx: &PrecisionContext) -> f64 {
    let off = &r.abs() * &ctx.pow10(-3);
    let fp = log_abs_h(spec, &(r + &off), ctx);
    let fm = log_abs_h(spec, &(r - &off), ctx);
    0.5 * (fp + fm)
}

/// Expanding-window scan for the sign-change root nearest the seed.
/// Returns the root and the final bracket width.
fn sign_window_root(
    spec: &HankelSpec,
    prev: &Real,
    prev_gap: Option<&Real>,
    ctx: &PrecisionContext,
) -> Result<(Real, Real), PhmError> {
    let floor = &prev.abs() * &ctx.pow10(-3);
    let mut radius = match prev_gap {
        Some(g) => (g * &ctx.real_from_i64(4)).max(&floor),
        None => floor,
    };
    let cap = &prev.abs() * &ctx.real_from_str("0.5");
    loop {
        let lo = prev - &radius;
        let hi = prev + &radius;
        let n = 16usize;
        let mut brackets: Vec<(Real, Real)> = Vec::new();
        let mut prev_pt: Option<(Real, Real)> = None;
        for i in 0..=n {
            let frac = ctx.real_from_f64(i as f64 / n as f64);
            let a = &lo + &(&(&hi - &lo) * &frac);
            let h = eval_with_escalation(spec, &a, ctx)?;
            if let Some((pa, ph)) = prev_pt.take() {
                if ph.signum_i() * h.signum_i() < 0 {
                    brackets.push((pa, a.clone()));
                }
            }
            prev_pt = Some((a, h));
        }
        let nearest = brackets.into_iter().min_by(|(l1, r1), (l2, r2)| {
            let two = ctx.real_from_i64(2);
            let m1 = (&(&(l1 + r1) / &two) - prev).abs();
            let m2 = (&(&(l2 + r2) / &two) - prev).abs();
            m1.partial_cmp(&m2).unwrap()
        });
        if let Some((left, right)) = nearest {
            let width = &right - &left;
            let root = root_with_escalation(spec, Seed::Bracket(left, right), ctx)?;
            return Ok((root, width));
        }
        radius = &radius * &ctx.real_from_i64(4);
        if radius > cap {
            let root = first_root(spec, ctx)?.ok_or(PhmError::DegenerateDeterminant {
                d: spec.d,
                dim: spec.dim,
            })?;
            let w = &root.abs() * &ctx.pow10(-2);
            return Ok((root, w));
        }
    }
}

/// Multiscale descent on log10 |H| from `start`, never reaching beyond the
/// 10^(1-coarse_k) |a| neighborhood, followed by the parabolic pair-center
/// polish.  Both refinements only ever accept candidates that keep |H| at
/// least as deep, so an isolated simple root passes through unchanged.
fn descend(spec: &HankelSpec, start: Real, coarse_k0: i64, ctx: &PrecisionContext) -> Real {
    let scale = start.abs();
    let fine_k = ctx.working_digits() as i64 - 25;
    let mut center = start;
    let mut best_f = log_abs_h(spec, &center, ctx);
    let mut coarse_k = coarse_k0.min(fine_k);
    let thirds = [
        ctx.real_from_i64(1),
        ctx.real_from_str("2.15443469"),
        ctx.real_from_str("4.64158883"),
    ];
    loop {
        let mut improved_at: Option<i64> = None;
        for k in coarse_k..=fine_k {
            let base = &scale * &ctx.pow10(-k);
            for t in &thirds {
                let off = &base * t;
                for cand in [&center + &off, &center - &off] {
                    let f = log_abs_h(spec, &cand, ctx);
                    if f < best_f - 0.2 {
                        best_f = f;
                        center = cand;
                        improved_at = Some(k);
                    }
                }
            }
            if let Some(ki) = improved_at {
                coarse_k = ki;
                break;
            }
        }
        if improved_at.is_none() {
            break;
        }
    }
    // parabolic polish: scan step sizes from fine to coarse; the first scale
    // with significant curvature and a bounded vertex step is the right one
    let two = ctx.real_from_i64(2);
    for _round in 0..3 {
        let h0 = crate::hankel::hankel_value_single(spec, &center, ctx);
        let mut moved = false;
        for k in (coarse_k0.min(fine_k)..=fine_k).rev() {
            let h_step = &scale * &ctx.pow10(-k);
            let hp = crate::hankel::hankel_value_single(spec, &(&center + &h_step), ctx);
            let hm = crate::hankel::hankel_value_single(spec, &(&center - &h_step), ctx);
            let curv = &(&hp + &hm) - &(&h0 + &h0);
            let mag = hp.abs().max(&hm.abs()).max(&h0.abs());
            if curv.is_zero() || curv.abs() < &mag * &ctx.pow10(-10) {
                continue;
            }
            let delta = &(&hp - &hm) / &(&curv + &curv);
            if delta.abs() <= two {
                let cand = &center - &(&delta * &h_step);
                let f = log_abs_h(spec, &cand, ctx);
                if f <= best_f + 0.35 {
                    best_f = f.min(best_f);
                    moved = !(&cand - &center).is_zero();
                    center = cand;
                }
                break;
            }
        }
        if !moved {
            break;
        }
    }
    center
}

fn log_abs_h(spec: &HankelSpec, a: &Real, ctx: &PrecisionContext) -> f64 {
    crate::hankel::hankel_value_single(spec, a, ctx).log10_abs_estimate()
}

/// Evaluate, retrying at escalated working precision when the dual-precision
/// check reports starvation.
fn eval_with_escalation(
    spec: &HankelSpec,
    a: &Real,
    ctx: &PrecisionContext,
) -> Result<Real, PhmError> {
    let mut c = *ctx;
    for _ in 0..4 {
        match hankel_value(spec, a, &c) {
            Err(PhmError::Num(NumError::PrecisionStarved(_))) => c = c.scaled_working(1.5),
            other => return other,
        }
    }
    hankel_value(spec, a, &c)
}

fn root_with_escalation(
    spec: &HankelSpec,
    seed: Seed,
    ctx: &PrecisionContext,
) -> Result<Real, PhmError> {
    let mut c = *ctx;
    for _ in 0..4 {
        match hankel_root(spec, seed.clone(), &c) {
            Err(PhmError::Num(NumError::PrecisionStarved(_))) => c = c.scaled_working(1.5),
            other => return other,
        }
    }
    hankel_root(spec, seed, &c)
}
