//! SQUAREM extrapolation around an MM fixed-point map, with projection back
//! onto the unit circle and backtracking that preserves descent.

use num_complex::Complex64;

use crate::error::Result;
use crate::solvers::{Evaluation, MmMap};

/// Halvings of `α + 1` tried before falling back to the plain double MM step.
pub const MAX_BACKTRACKS: u32 = 64;

/// Result of one accelerated step.
#[derive(Debug, Clone)]
pub struct SquaremOutcome {
    pub next: Vec<Complex64>,
    /// Objective and peak sidelobe at `next`.
    pub eval: Evaluation,
    /// Objective at the starting point.
    pub start_objective: f64,
    pub map_calls: u32,
    pub backtracks: u32,
    /// The accepted point is the plain double step `x₂` because no
    /// extrapolated candidate decreased the objective.
    pub fell_back: bool,
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn project_candidate(
    x: &[Complex64],
    r: &[Complex64],
    v: &[Complex64],
    alpha: f64,
) -> Vec<Complex64> {
    let y: Vec<Complex64> = x
        .iter()
        .zip(r)
        .zip(v)
        .map(|((xi, ri), vi)| xi - ri * (2.0 * alpha) + vi * (alpha * alpha))
        .collect();
    crate::solvers::steps::project_unit(&y, x)
}

/// One SQUAREM step from `x`.
///
/// The step length `α = -‖r‖/‖v‖` is clamped to at most `-1`, so the first
/// candidate is never shorter than two plain MM steps. `‖v‖ = 0` returns `x₂`,
/// and `‖r‖ < 1e-14·√N` treats `x` as a fixed point and returns `x₁`.
pub fn squarem_step<M: MmMap + ?Sized>(map: &mut M, x: &[Complex64]) -> Result<SquaremOutcome> {
    let n = x.len();
    let s1 = map.step(x)?;
    let fx = s1.objective;
    let x1 = s1.next;
    let r: Vec<Complex64> = x1.iter().zip(x).map(|(a, b)| a - b).collect();
    let r_norm = norm(&r);
    if r_norm < 1e-14 * (n as f64).sqrt() {
        let eval = map.evaluate(&x1)?;
        return Ok(SquaremOutcome {
            next: x1,
            eval,
            start_objective: fx,
            map_calls: 1,
            backtracks: 0,
            fell_back: false,
        });
    }

    let x2 = map.step(&x1)?.next;
    let v: Vec<Complex64> = x2
        .iter()
        .zip(&x1)
        .zip(&r)
        .map(|((b, a), ri)| b - a - ri)
        .collect();
    let v_norm = norm(&v);

    let fallback = |map: &mut M, backtracks: u32, fell_back: bool| -> Result<SquaremOutcome> {
        let eval = map.evaluate(&x2)?;
        Ok(SquaremOutcome {
            next: x2.clone(),
            eval,
            start_objective: fx,
            map_calls: 2,
            backtracks,
            fell_back,
        })
    };

    if v_norm == 0.0 {
        return fallback(map, 0, false);
    }

    let mut alpha = (-r_norm / v_norm).min(-1.0);
    let mut backtracks = 0;
    loop {
        if alpha == -1.0 {
            // The candidate is x₂ itself. If rounding makes it look worse than
            // x, halving cannot move α away from -1, so stop here.
            let out = fallback(map, backtracks, false)?;
            if out.eval.objective <= fx {
                return Ok(out);
            }
            return Ok(SquaremOutcome {
                fell_back: true,
                ..out
            });
        }
        let candidate = project_candidate(x, &r, &v, alpha);
        let eval = map.evaluate(&candidate)?;
        if eval.objective <= fx {
            return Ok(SquaremOutcome {
                next: candidate,
                eval,
                start_objective: fx,
                map_calls: 2,
                backtracks,
                fell_back: false,
            });
        }
        if backtracks == MAX_BACKTRACKS {
            return fallback(map, backtracks, true);
        }
        alpha = (alpha - 1.0) / 2.0;
        backtracks += 1;
    }
}
