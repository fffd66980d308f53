use super::linalg::solve;
use super::scalar::Scalar;
use super::system::System;

pub const DIVERGENCE_BOUND: f64 = 1e6;
pub const MAX_HALVINGS: usize = 20;

fn max_abs<S: Scalar>(v: &[S]) -> f64 {
    v.iter().map(Scalar::abs_f64).fold(0.0, f64::max)
}

#[derive(Clone, Debug)]
pub struct NewtonResult<S> {
    pub x: Vec<S>,
    pub residual: f64,
    pub iterations: usize,
}

/// Damped Newton iteration: the step is halved (at most 20 times) until the
/// residual decreases. Stops once the residual is at most `tol`, when no
/// damped step improves it, or after `max_iter` steps. Returns `None` on
/// divergence past `1e6` or a singular Jacobian.
pub fn newton<S: Scalar, Sys: System>(
    sys: &Sys,
    x0: Vec<S>,
    precision: usize,
    tol: f64,
    max_iter: usize,
) -> Option<NewtonResult<S>> {
    let mut x = x0;
    let mut f = sys.eval(&x, precision);
    let mut r = max_abs(&f);
    for it in 0..max_iter {
        if !r.is_finite() {
            return None;
        }
        if r <= tol {
            return Some(NewtonResult {
                x,
                residual: r,
                iterations: it,
            });
        }
        let jac = sys.jacobian(&x, precision);
        let rhs: Vec<S> = f.iter().map(|v| -v.clone()).collect();
        let dx = solve(jac, rhs)?;
        let mut lambda = S::one(precision);
        let half = S::from_parts(0.5, 0.0, precision);
        let mut accepted = None;
        for _ in 0..=MAX_HALVINGS {
            let xn: Vec<S> = x
                .iter()
                .zip(&dx)
                .map(|(a, d)| a.clone() + lambda.clone() * d.clone())
                .collect();
            let fn_ = sys.eval(&xn, precision);
            let rn = max_abs(&fn_);
            if rn.is_finite() && rn < r {
                accepted = Some((xn, fn_, rn));
                break;
            }
            lambda = lambda * half.clone();
        }
        let Some((xn, fn_, rn)) = accepted else {
            return Some(NewtonResult {
                x,
                residual: r,
                iterations: it,
            });
        };
        if max_abs(&xn) > DIVERGENCE_BOUND {
            return None;
        }
        x = xn;
        f = fn_;
        r = rn;
    }
    Some(NewtonResult {
        x,
        residual: r,
        iterations: max_iter,
    })
}
