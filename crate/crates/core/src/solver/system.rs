//! Square polynomial systems in big-cell chart coordinates.

use num_traits::ToPrimitive;

use super::linalg::{cofactor, det};
use super::scalar::Scalar;
use crate::exact::rational::to_f64;
use crate::exact::{Poly, Rational};
use crate::grassmann::beta;
use crate::subsets::{self, Subset};

pub trait System: Sync {
    fn nvars(&self) -> usize;
    fn eval<S: Scalar>(&self, x: &[S], precision: usize) -> Vec<S>;
    fn jacobian<S: Scalar>(&self, x: &[S], precision: usize) -> Vec<Vec<S>>;
    /// Magnitude of the constant data, for relative residuals.
    fn scale(&self) -> f64;
}

/// `rows x cols` chart matrix whose top `rows - cols` rows are the unknowns
/// and whose bottom block is the identity.
pub fn chart_matrix<S: Scalar>(x: &[S], rows: usize, cols: usize, precision: usize) -> Vec<Vec<S>> {
    let free = rows - cols;
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    if r < free {
                        x[r * cols + c].clone()
                    } else if r - free == c {
                        S::one(precision)
                    } else {
                        S::zero(precision)
                    }
                })
                .collect()
        })
        .collect()
}

fn select_rows<S: Clone>(m: &[Vec<S>], rows: &[usize]) -> Vec<Vec<S>> {
    rows.iter().map(|&r| m[r].clone()).collect()
}

/// All maximal minors of an `n x k` chart, in lex order of the subsets.
pub fn chart_pluckers<S: Scalar>(x: &[S], n: usize, k: usize, precision: usize) -> Vec<(Subset, S)> {
    let m = chart_matrix(x, n, k, precision);
    subsets::k_subsets(n, k)
        .into_iter()
        .map(|set| {
            let rows: Vec<usize> = set.iter().map(|i| i - 1).collect();
            let d = det(&select_rows(&m, &rows), precision);
            (set, d)
        })
        .collect()
}

struct Term {
    rows: Vec<usize>,
    beta: Rational,
    beta_f64: f64,
}

/// `Wr(V) = prod (x - r_l)` for `V` the column span of `[X; I_k]`, written
/// as one equation per coefficient of `x^m`, `m < k(n-k)`; the top
/// coefficient is `Δ_{[n]∖[n-k]} = 1` by the choice of chart.
pub struct WronskiSystem {
    pub n: usize,
    pub k: usize,
    groups: Vec<Vec<Term>>,
    target: Vec<Rational>,
    target_f64: Vec<f64>,
}

impl WronskiSystem {
    pub fn new(n: usize, k: usize, roots: &[Rational]) -> Self {
        let dim = k * (n - k);
        assert_eq!(roots.len(), dim, "one root per chart coordinate");
        let shift = k * (k + 1) / 2;
        let mut groups: Vec<Vec<Term>> = (0..dim).map(|_| Vec::new()).collect();
        for set in subsets::k_subsets(n, k) {
            let m = subsets::sum(&set) - shift;
            if m < dim {
                let b = beta(&set);
                groups[m].push(Term {
                    rows: set.iter().map(|i| i - 1).collect(),
                    beta_f64: b.to_f64().unwrap_or(f64::MAX),
                    beta: Rational::from_integer(b),
                });
            }
        }
        let target: Vec<Rational> = Poly::from_roots(roots).padded_coeffs(dim + 1)[..dim].to_vec();
        WronskiSystem {
            n,
            k,
            groups,
            target_f64: target.iter().map(to_f64).collect(),
            target,
        }
    }
}

impl System for WronskiSystem {
    fn nvars(&self) -> usize {
        self.k * (self.n - self.k)
    }

    fn eval<S: Scalar>(&self, x: &[S], precision: usize) -> Vec<S> {
        let m = chart_matrix(x, self.n, self.k, precision);
        self.groups
            .iter()
            .zip(self.target.iter().zip(&self.target_f64))
            .map(|(terms, (t, tf))| {
                let mut acc = -S::from_exact(*tf, t, precision);
                for term in terms {
                    let d = det(&select_rows(&m, &term.rows), precision);
                    acc = acc + S::from_exact(term.beta_f64, &term.beta, precision) * d;
                }
                acc
            })
            .collect()
    }

    fn jacobian<S: Scalar>(&self, x: &[S], precision: usize) -> Vec<Vec<S>> {
        let (n, k) = (self.n, self.k);
        let m = chart_matrix(x, n, k, precision);
        let mut jac = vec![vec![S::zero(precision); self.nvars()]; self.nvars()];
        for (eq, terms) in self.groups.iter().enumerate() {
            for term in terms {
                let sub = select_rows(&m, &term.rows);
                let b = S::from_exact(term.beta_f64, &term.beta, precision);
                for (pos, &row) in term.rows.iter().enumerate() {
                    if row >= n - k {
                        continue;
                    }
                    for col in 0..k {
                        let c = cofactor(&sub, pos, col, precision);
                        let var = row * k + col;
                        jac[eq][var] = jac[eq][var].clone() + b.clone() * c;
                    }
                }
            }
        }
        jac
    }

    fn scale(&self) -> f64 {
        self.target_f64.iter().fold(1.0, |a, t| a.max(t.abs()))
    }
}

/// `det [U | W_l] = 0` for `U` the column span of `[Y; I_{n-k}]` and
/// given `n x k` bases `W_l`.
pub struct SecantSystem {
    pub n: usize,
    pub k: usize,
    ws: Vec<Vec<Vec<Rational>>>,
    ws_f64: Vec<Vec<Vec<f64>>>,
}

impl SecantSystem {
    /// Each `W_l` is given by its `n x k` rows; columns are rescaled to a
    /// unit largest entry, which leaves the span unchanged.
    pub fn new(n: usize, k: usize, ws: Vec<Vec<Vec<Rational>>>) -> Self {
        assert_eq!(ws.len(), k * (n - k), "one condition per chart coordinate");
        let ws: Vec<Vec<Vec<Rational>>> = ws
            .into_iter()
            .map(|w| {
                let mut w = w;
                for c in 0..k {
                    let big = (0..n)
                        .map(|r| num_traits::Signed::abs(&w[r][c]))
                        .max()
                        .expect("nonempty column");
                    if !num_traits::Zero::is_zero(&big) {
                        for row in w.iter_mut() {
                            row[c] = &row[c] / &big;
                        }
                    }
                }
                w
            })
            .collect();
        let ws_f64 = ws
            .iter()
            .map(|w| w.iter().map(|row| row.iter().map(to_f64).collect()).collect())
            .collect();
        SecantSystem { n, k, ws, ws_f64 }
    }

    fn full<S: Scalar>(&self, x: &[S], l: usize, precision: usize) -> Vec<Vec<S>> {
        let d = self.n - self.k;
        let u = chart_matrix(x, self.n, d, precision);
        u.into_iter()
            .enumerate()
            .map(|(r, mut row)| {
                for c in 0..self.k {
                    row.push(S::from_exact(self.ws_f64[l][r][c], &self.ws[l][r][c], precision));
                }
                row
            })
            .collect()
    }
}

impl System for SecantSystem {
    fn nvars(&self) -> usize {
        self.k * (self.n - self.k)
    }

    fn eval<S: Scalar>(&self, x: &[S], precision: usize) -> Vec<S> {
        (0..self.ws.len())
            .map(|l| det(&self.full(x, l, precision), precision))
            .collect()
    }

    fn jacobian<S: Scalar>(&self, x: &[S], precision: usize) -> Vec<Vec<S>> {
        let d = self.n - self.k;
        (0..self.ws.len())
            .map(|l| {
                let m = self.full(x, l, precision);
                (0..self.nvars())
                    .map(|var| cofactor(&m, var / d, var % d, precision))
                    .collect()
            })
            .collect()
    }

    fn scale(&self) -> f64 {
        1.0
    }
}
