use crate::ctx::PrecisionContext;
use crate::error::NumError;
use crate::real::Real;

/// Where to start the search: a sign-change bracket or a Newton-basin guess.
#[derive(Debug, Clone)]
pub enum Seed {
    Bracket(Real, Real),
    Guess(Real),
}

/// Scalar root finding: bisection to shrink a bracket, secant to polish.
/// Hankel determinant functions and collocation residuals are smooth but
/// steep near their roots, which this combination handles well.
pub fn find_root<F>(
    mut f: F,
    seed: Seed,
    ctx: &PrecisionContext,
    max_iter: usize,
) -> Result<Real, NumError>
where
    F: FnMut(&Real) -> Result<Real, NumError>,
{
    match seed {
        Seed::Bracket(lo, hi) => bracketed(&mut f, lo, hi, ctx, max_iter),
        Seed::Guess(g) => secant_from_guess(&mut f, g, ctx, max_iter),
    }
}

fn step_tol(x: &Real, ctx: &PrecisionContext) -> Real {
    let req = ctx.tol_requested();
    (&x.abs().max(&req) * &req) * ctx.pow10(-2)
}

fn bracketed<F>(
    f: &mut F,
    mut lo: Real,
    mut hi: Real,
    ctx: &PrecisionContext,
    max_iter: usize,
) -> Result<Real, NumError>
where
    F: FnMut(&Real) -> Result<Real, NumError>,
{
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let mut flo = f(&lo)?;
    if flo.is_zero() {
        return Ok(lo);
    }
    let mut fhi = f(&hi)?;
    if fhi.is_zero() {
        return Ok(hi);
    }
    if flo.signum_i() == fhi.signum_i() {
        return Err(NumError::NoSignChange {
            lo: lo.to_sig_string(8),
            hi: hi.to_sig_string(8),
        });
    }
    let two = ctx.real_from_i64(2);
    // previous iterate for the secant update
    let (mut xp, mut fp) = (lo.clone(), flo.clone());
    let (mut xc, mut fc) = (hi.clone(), fhi.clone());
    for iter in 0..max_iter {
        let width = &hi - &lo;
        let mid = &(&lo + &hi) / &two;
        if width <= step_tol(&mid, ctx) {
            return Ok(mid);
        }
        // secant candidate, fall back to bisection when it misbehaves
        let df = &fc - &fp;
        let mut x_new = if df.is_zero() {
            mid.clone()
        } else {
            &xc - &(&fc * &(&xc - &xp) / &df)
        };
        if !(x_new > lo && x_new < hi) || iter % 4 == 3 {
            x_new = mid;
        }
        let f_new = f(&x_new)?;
        if f_new.is_zero() {
            return Ok(x_new);
        }
        if f_new.signum_i() == flo.signum_i() {
            lo = x_new.clone();
            flo = f_new.clone();
        } else {
            hi = x_new.clone();
            fhi = f_new.clone();
        }
        let _ = &fhi;
        xp = xc;
        fp = fc;
        xc = x_new;
        fc = f_new;
    }
    Err(NumError::IterationCap(max_iter))
}

fn secant_from_guess<F>(
    f: &mut F,
    guess: Real,
    ctx: &PrecisionContext,
    max_iter: usize,
) -> Result<Real, NumError>
where
    F: FnMut(&Real) -> Result<Real, NumError>,
{
    let h = &(&guess.abs() + &ctx.tol_requested()) * &ctx.pow10(-6);
    let mut xp = guess.clone();
    let mut xc = &guess + &h;
    let mut fp = f(&xp)?;
    if fp.is_zero() {
        return Ok(xp);
    }
    let mut fc = f(&xc)?;
    for _ in 0..max_iter {
        if fc.is_zero() {
            return Ok(xc);
        }
        let df = &fc - &fp;
        if df.is_zero() {
            return Err(NumError::PrecisionStarved(
                "flat secant update; raise working precision".into(),
            ));
        }
        let step = &fc * &(&xc - &xp) / &df;
        let x_new = &xc - &step;
        xp = xc;
        fp = fc;
        xc = x_new;
        fc = f(&xc)?;
        if step.abs() <= step_tol(&xc, ctx) {
            return Ok(xc);
        }
    }
    Err(NumError::IterationCap(max_iter))
}
