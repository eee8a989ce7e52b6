//! Residual diagnostics: substituting the reconstructed u back into the
//! magnetic equation separates the physical branch (tiny residual) from the
//! spurious one (order 1), and localizes spurious singularities.

use tfsolve_num::{ComplexReal, PrecisionContext, Real};

use crate::shafer::{shafer_eval_d2, Branch, QuadApproximant};
use crate::ResumError;

/// rho = u_ss / x0^2 - sqrt(x0 (s + 1) u) in the resummation variable
/// s = (x - x0)/x0; a solution of the magnetic equation nulls it.
/// Complex-valued u (spurious-branch or post-singularity regime) yields the
/// modulus of the complex residual.
pub fn endpoint_residual(u: &Real, u_ss: &Real, s: &Real, x0: &Real, ctx: &PrecisionContext) -> Real {
    endpoint_residual_complex(
        &ComplexReal::from_real(u.clone()),
        &ComplexReal::from_real(u_ss.clone()),
        s,
        x0,
        ctx,
    )
}

pub fn endpoint_residual_complex(
    u: &ComplexReal,
    u_ss: &ComplexReal,
    s: &Real,
    x0: &Real,
    ctx: &PrecisionContext,
) -> Real {
    let x0sq = ComplexReal::from_real(x0 * x0);
    let one = ctx.real_from_i64(1);
    let factor = ComplexReal::from_real(x0 * &(s + &one));
    let rhs = (&factor * u).sqrt();
    let rho = &(u_ss / &x0sq) - &rhs;
    rho.modulus()
}

/// Per-point branch choice by residual comparison: branch identities swap
/// across spurious singularities, so the physical branch is whichever nulls
/// the equation at that point.  An exact tie picks Plus and flags the point.
pub fn select_branch(plus_residual: &Real, minus_residual: &Real) -> (Branch, bool) {
    if plus_residual < minus_residual {
        (Branch::Plus, false)
    } else if minus_residual < plus_residual {
        (Branch::Minus, false)
    } else {
        (Branch::Plus, true)
    }
}

/// Residual of u = x0^5 s^4 u~_branch(s) in the magnetic equation, per grid
/// point, per branch ((plus, minus) pairs).
pub fn shafer_residual(
    quad: &QuadApproximant<Real>,
    x0: &Real,
    grid: &[Real],
    ctx: &PrecisionContext,
) -> Result<Vec<(Real, Real)>, ResumError> {
    let mut out = Vec::with_capacity(grid.len());
    for s in grid {
        let mut pair = Vec::with_capacity(2);
        for branch in [Branch::Plus, Branch::Minus] {
            let (ut, ut1, ut2) = shafer_eval_d2(quad, s, branch, ctx)?;
            // u = x0^5 s^4 u~:
            //   u_ss = x0^5 (12 s^2 u~ + 8 s^3 u~' + s^4 u~'')
            let x05 = x0.pow_i64(5);
            let s2 = s * s;
            let s3 = &s2 * s;
            let s4 = &s2 * &s2;
            let c = ComplexReal::from_real;
            let u = &c(x05.clone()) * &(&c(s4.clone()) * &ut);
            let u_ss_inner = &(&(&c(&s2 * &ctx.real_from_i64(12)) * &ut)
                + &(&c(&s3 * &ctx.real_from_i64(8)) * &ut1))
                + &(&c(s4) * &ut2);
            let u_ss = &c(x05) * &u_ss_inner;
            pair.push(endpoint_residual_complex(&u, &u_ss, s, x0, ctx));
        }
        let minus = pair.pop().unwrap();
        let plus = pair.pop().unwrap();
        out.push((plus, minus));
    }
    Ok(out)
}
