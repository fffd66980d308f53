//! Numeric inversion of the Wronski map and secant Schubert problems by
//! multistart damped Newton in a big-cell chart, followed by polishing at
//! high precision and a reality and sign classification of each solution.

pub mod closed_form;
mod instance;
pub mod linalg;
pub mod newton;
pub mod report;
pub mod scalar;
pub mod system;

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::rational::to_f64;
use crate::exact::{ExactMatrix, ProjInterval, Rational};
use crate::flag::Mode;
use crate::grassmann::beta;
use crate::schubert::{rnc_span, PointMultiset, ProjPoint};
use crate::subsets::{self, Subset};

pub use closed_form::{d_count, gr24_closed_form, gr24_from_wronskian_roots, kappa, Gr24ClosedForm};
pub use instance::{InstanceSpec, SecantCondition};
pub use newton::{newton, NewtonResult};
pub use report::{
    classify_pluckers, classify_solution, InstanceKind, InstanceReport, NumericPositivity, NumericSolution,
    SolutionFlags, Status,
};
pub use scalar::{BigComplex, Scalar};
pub use system::{SecantSystem, System, WronskiSystem};

use linalg::det;
use system::chart_matrix;

#[derive(Clone, Debug, PartialEq)]
pub struct SolverOptions {
    /// Starts per round; `None` means `50 d_{k,n}`.
    pub starts: Option<usize>,
    /// Largest accepted residual after polishing.
    pub tol: f64,
    pub dedup_eps: f64,
    pub max_iter: usize,
    /// Polishing precision in bits.
    pub precision: usize,
    pub max_precision: usize,
    pub seed: u64,
    pub real_tol: f64,
    pub sign_margin: f64,
    /// Rounds of restarts, each with a doubled start box.
    pub rounds: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            starts: None,
            tol: 1e-10,
            dedup_eps: 1e-6,
            max_iter: 100,
            precision: 128,
            max_precision: 512,
            seed: 0,
            real_tol: 1e-8,
            sign_margin: 1e-6,
            rounds: 3,
        }
    }
}

/// How chart coordinates become a basis of the solution: `[X; I]`, then
/// optionally a fixed exact change of coordinates.
struct Chart {
    n: usize,
    dim: usize,
    back: Option<ExactMatrix>,
}

impl Chart {
    fn basis<S: Scalar>(&self, x: &[S], precision: usize) -> Vec<Vec<S>> {
        let m = chart_matrix(x, self.n, self.dim, precision);
        let Some(g) = &self.back else { return m };
        (0..self.n)
            .map(|r| {
                (0..self.dim)
                    .map(|c| {
                        (0..self.n).fold(S::zero(precision), |acc, t| {
                            let e = g.get(r, t);
                            if e.is_zero() {
                                acc
                            } else {
                                acc + S::from_exact(to_f64(e), e, precision) * m[t][c].clone()
                            }
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

fn relative_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    let size = a.iter().chain(b).map(|z| z.norm()).fold(1.0, f64::max);
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max) / size
}

fn sort_key(chart: &[Complex64]) -> Vec<f64> {
    chart
        .iter()
        .flat_map(|z| [(z.re * 1e6).round(), (z.im * 1e6).round()])
        .collect()
}

fn cmp_keys(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// Newton at `precision` from `x0`, then Plücker coordinates and flags.
fn finish<P: System>(
    polish: &P,
    chart: &Chart,
    x0: Vec<BigComplex>,
    precision: usize,
    opts: &SolverOptions,
) -> Option<NumericSolution> {
    let target = polish.scale() * 2f64.powi(8 - precision as i32);
    let res = newton(polish, x0, precision, target, opts.max_iter)?;
    if res.residual.is_nan() || res.residual > opts.tol {
        return None;
    }
    let basis = chart.basis(&res.x, precision);
    let raw: Vec<(Subset, Complex64)> = subsets::k_subsets(chart.n, chart.dim)
        .into_iter()
        .map(|set| {
            let rows: Vec<Vec<BigComplex>> = set.iter().map(|&i| basis[i - 1].clone()).collect();
            let d = det(&rows, precision).to_c64();
            (set, d)
        })
        .collect();
    if raw.iter().all(|(_, z)| z.norm() == 0.0 || !z.norm().is_finite()) {
        return None;
    }
    let (pluckers, flags) = classify_pluckers(&raw, opts.real_tol, opts.sign_margin);
    Some(NumericSolution {
        n: chart.n,
        dim: chart.dim,
        chart: res.x.iter().map(Scalar::to_c64).collect(),
        basis: basis.iter().map(|row| row.iter().map(Scalar::to_c64).collect()).collect(),
        residual: res.residual,
        precision,
        pluckers,
        flags,
        big_chart: res.x,
    })
}

/// Random starts in rounds of growing boxes, machine-precision Newton on
/// `search`, then polishing on `polish` after mapping with `to_polish`.
/// Output order depends only on the options, never on scheduling.
fn multistart<Q, P, F>(search: &Q, to_polish: F, polish: &P, chart: &Chart, d: usize, opts: &SolverOptions) -> Vec<NumericSolution>
where
    Q: System,
    P: System,
    F: Fn(&[Complex64]) -> Vec<Complex64> + Sync,
{
    let nv = search.nvars();
    let per_round = opts.starts.unwrap_or(50 * d).max(1);
    let search_tol = 1e-13 * search.scale();
    let mut found: Vec<NumericSolution> = Vec::new();
    for round in 0..opts.rounds.max(1) {
        let b = 2.0 * f64::powi(2.0, round as i32);
        let candidates: Vec<Option<Vec<Complex64>>> = (0..per_round)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                rng.set_stream(((round as u64) << 32) | i as u64);
                let x0: Vec<Complex64> = (0..nv)
                    .map(|_| Complex64::new(rng.gen_range(-b..=b), rng.gen_range(-b..=b)))
                    .collect();
                let r = newton(search, x0, 0, search_tol, opts.max_iter)?;
                (r.residual <= 1e-7 * search.scale()).then(|| to_polish(&r.x))
            })
            .collect();
        let mut fresh: Vec<Vec<Complex64>> = Vec::new();
        for c in candidates.into_iter().flatten() {
            let seen = found.iter().any(|s| relative_distance(&s.chart, &c) < opts.dedup_eps)
                || fresh.iter().any(|f| relative_distance(f, &c) < opts.dedup_eps);
            if !seen {
                fresh.push(c);
            }
        }
        let polished: Vec<Option<NumericSolution>> = fresh
            .into_par_iter()
            .map(|c| {
                let x0 = c.iter().map(|z| BigComplex::from_c64(*z, opts.precision)).collect();
                finish(polish, chart, x0, opts.precision, opts)
            })
            .collect();
        for s in polished.into_iter().flatten() {
            if !found.iter().any(|f| relative_distance(&f.chart, &s.chart) < opts.dedup_eps) {
                found.push(s);
            }
        }
        if found.len() >= d {
            break;
        }
    }
    found.sort_by(|a, b| cmp_keys(&sort_key(&a.chart), &sort_key(&b.chart)));
    found
}

/// Re-polishes solutions whose flags are not `acceptable`, doubling the
/// precision up to `max_precision`.
fn escalate<P: System>(
    polish: &P,
    chart: &Chart,
    sols: Vec<NumericSolution>,
    opts: &SolverOptions,
    acceptable: impl Fn(&SolutionFlags) -> bool,
) -> Vec<NumericSolution> {
    sols.into_iter()
        .map(|mut s| {
            let mut p = s.precision;
            while !acceptable(&s.flags) && p < opts.max_precision {
                p = (p * 2).min(opts.max_precision);
                let x0 = s.big_chart.iter().map(|z| z.with_precision(p)).collect();
                if let Some(t) = finish(polish, chart, x0, p, opts) {
                    s = t;
                }
            }
            s
        })
        .collect()
}

fn check_dims(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidInput(format!("need 0 < k < n, got k={k}, n={n}")));
    }
    Ok(())
}

fn expected_count(k: usize, n: usize) -> Result<usize> {
    d_count(k, n)
        .to_usize()
        .ok_or_else(|| Error::InvalidInput(format!("d_{{{k},{n}}} is out of range")))
}

struct WronskiSetup {
    search: WronskiSystem,
    polish: WronskiSystem,
    chart: Chart,
    scale_powers: Vec<f64>,
}

fn wronski_setup(k: usize, n: usize, roots: &PointMultiset) -> Result<(WronskiSetup, Vec<Rational>)> {
    check_dims(k, n)?;
    let dim = k * (n - k);
    if roots.size() != dim {
        return Err(Error::InvalidInput(format!("need k(n-k) = {dim} roots, got {}", roots.size())));
    }
    let roots: Vec<Rational> = roots
        .expanded()
        .into_iter()
        .map(|p| match p {
            ProjPoint::Finite(r) => Ok(r),
            ProjPoint::Infinity => Err(Error::InvalidInput("roots must be finite".into())),
        })
        .collect::<Result<_>>()?;
    let biggest = roots.iter().map(|r| to_f64(r).abs()).fold(0.0, f64::max);
    let e = if biggest > 0.0 { biggest.log2().round().clamp(-60.0, 60.0) as i32 } else { 0 };
    let s = if e >= 0 {
        Rational::from_integer(num_bigint::BigInt::from(1u64) << e as usize)
    } else {
        Rational::new(1.into(), num_bigint::BigInt::from(1u64) << (-e) as usize)
    };
    let scaled: Vec<Rational> = roots.iter().map(|r| r / &s).collect();
    let sf = f64::powi(2.0, e);
    let free = n - k;
    let scale_powers = (0..free * k)
        .map(|v| {
            let (i, j) = (v / k, v % k);
            sf.powi((free + j) as i32 - i as i32)
        })
        .collect();
    Ok((
        WronskiSetup {
            search: WronskiSystem::new(n, k, &scaled),
            polish: WronskiSystem::new(n, k, &roots),
            chart: Chart { n, dim: k, back: None },
            scale_powers,
        },
        roots,
    ))
}

fn wronski_run(setup: &WronskiSetup, d: usize, opts: &SolverOptions) -> Vec<NumericSolution> {
    let map = |x: &[Complex64]| x.iter().zip(&setup.scale_powers).map(|(z, p)| z * p).collect();
    multistart(&setup.search, map, &setup.polish, &setup.chart, d, opts)
}

/// All `V ∈ Gr(k, n)` with `Wr(V)` proportional to `prod (x - r)` over the
/// given roots, found numerically in the chart `[X; I_k]`.
///
/// Roots must be finite. Fewer than `d_{k,n}` solutions means the starts
/// missed some basins; the caller decides how to report that.
pub fn wronski_solve(k: usize, n: usize, roots: &PointMultiset, opts: &SolverOptions) -> Result<Vec<NumericSolution>> {
    let (setup, _) = wronski_setup(k, n, roots)?;
    Ok(wronski_run(&setup, expected_count(k, n)?, opts))
}

struct SecantSetup {
    system: SecantSystem,
    chart: Chart,
}

/// A fixed integer matrix with small entries that moves coordinate flags
/// into general position.
fn general_position(n: usize) -> (ExactMatrix, ExactMatrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x005e_c447);
    loop {
        let g = crate::sample::int_matrix(&mut rng, n, n, -3, 3);
        if g.rank() == n {
            let (r, _) = g.hcat(&ExactMatrix::identity(n)).expect("same rows").rref();
            let cols: Vec<usize> = (n..2 * n).collect();
            let rows: Vec<usize> = (0..n).collect();
            return (g, r.select(&rows, &cols));
        }
    }
}

fn secant_setup(k: usize, n: usize, conditions: &[SecantCondition]) -> Result<SecantSetup> {
    check_dims(k, n)?;
    let dim = k * (n - k);
    if conditions.len() != dim {
        return Err(Error::InvalidInput(format!(
            "need k(n-k) = {dim} conditions, got {}",
            conditions.len()
        )));
    }
    for c in conditions {
        if c.points.size() != k {
            return Err(Error::InvalidInput(format!("condition {} has size {}, need {k}", c.points, c.points.size())));
        }
        if !c.points.in_interval(&c.interval) {
            return Err(Error::InvalidInput(format!("points {} lie outside their interval", c.points)));
        }
    }
    let special = conditions.iter().any(|c| {
        c.points
            .entries()
            .iter()
            .any(|(p, _)| p.finite().is_none_or(Zero::is_zero))
    });
    let (g, back) = if special {
        let (g, inv) = general_position(n);
        (Some(g), Some(inv))
    } else {
        (None, None)
    };
    let ws = conditions
        .iter()
        .map(|c| {
            let b = rnc_span(n, &c.points)?.basis().clone();
            let b = match &g {
                Some(g) => g.mul(&b)?,
                None => b,
            };
            Ok((0..n).map(|r| b.row(r).to_vec()).collect())
        })
        .collect::<Result<Vec<Vec<Vec<Rational>>>>>()?;
    Ok(SecantSetup {
        system: SecantSystem::new(n, k, ws),
        chart: Chart { n, dim: n - k, back },
    })
}

/// All `U ∈ Gr(n-k, n)` meeting each secant flat `γ_{X_l}` nontrivially,
/// with `k(n-k)` multisets `X_l` of size `k`.
pub fn schubert_solve(
    k: usize,
    n: usize,
    conditions: &[SecantCondition],
    opts: &SolverOptions,
) -> Result<Vec<NumericSolution>> {
    let setup = secant_setup(k, n, conditions)?;
    let d = expected_count(k, n)?;
    Ok(multistart(&setup.system, |x| x.to_vec(), &setup.system, &setup.chart, d, opts))
}

fn status_of(found: usize, expected: usize, degenerate: bool, bad: bool, unresolved: bool) -> Status {
    if found > expected {
        Status::DedupFailure
    } else if bad {
        Status::Counterexample
    } else if unresolved || (found < expected && !degenerate) || found == 0 {
        Status::Warn
    } else {
        Status::Verified
    }
}

/// Solves `Wr(V) = prod (x - r)` for negative roots and checks that every
/// solution is real and totally positive. Suspect solutions are re-polished
/// at increasing precision before being reported.
pub fn check_positivity_instance(k: usize, n: usize, roots: &[Rational], opts: &SolverOptions) -> Result<InstanceReport> {
    if let Some(r) = roots.iter().find(|r| !r.is_negative()) {
        return Err(Error::InvalidInput(format!(
            "roots must lie in (-inf, 0), got {}",
            crate::exact::rational::format_rational(r)
        )));
    }
    let multiset = PointMultiset::from_rationals(roots);
    let (setup, _) = wronski_setup(k, n, &multiset)?;
    let expected = expected_count(k, n)?;
    let sols = wronski_run(&setup, expected, opts);
    let good = |f: &SolutionFlags| f.is_real && f.positivity == NumericPositivity::TotallyPositive;
    let sols = escalate(&setup.polish, &setup.chart, sols, opts, good);
    Ok(assemble(
        InstanceKind::Positivity,
        k,
        n,
        Mode::Positive,
        format!("roots {}", multiset),
        multiset.has_repeats(),
        expected,
        sols,
        opts,
    ))
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    kind: InstanceKind,
    k: usize,
    n: usize,
    mode: Mode,
    input: String,
    degenerate: bool,
    expected: usize,
    solutions: Vec<NumericSolution>,
    opts: &SolverOptions,
) -> InstanceReport {
    let all_real = solutions.iter().all(|s| s.flags.is_real);
    let signs_ok = |s: &NumericSolution| match mode {
        Mode::Positive => s.flags.positivity == NumericPositivity::TotallyPositive,
        Mode::Nonnegative => s.flags.positivity != NumericPositivity::Neither,
    };
    let all_positive = solutions.iter().all(signs_ok);
    let bad = solutions
        .iter()
        .any(|s| !s.flags.is_real || s.flags.positivity == NumericPositivity::Neither);
    let unresolved = solutions.iter().any(|s| !signs_ok(s));
    let precision = solutions.iter().map(|s| s.precision).max().unwrap_or(opts.precision);
    InstanceReport {
        kind,
        k,
        n,
        mode,
        input,
        found: solutions.len(),
        expected,
        degenerate,
        all_real,
        all_positive,
        status: status_of(solutions.len(), expected, degenerate, bad, unresolved),
        seed: opts.seed,
        precision,
        solutions,
    }
}

/// Solves a secant problem and checks reality and signs of the solutions.
///
/// Intervals must be pairwise disjoint and lie in `(0, ∞)` for the positive
/// mode or `[0, ∞]` for the nonnegative one. In nonnegative mode a
/// coordinate too small to sign is accepted; a clearly negative one is not.
pub fn check_secant_instance(
    k: usize,
    n: usize,
    conditions: &[SecantCondition],
    mode: Mode,
    opts: &SolverOptions,
) -> Result<InstanceReport> {
    let region = match mode {
        Mode::Positive => ProjInterval::positive_open(),
        Mode::Nonnegative => ProjInterval::nonnegative_closed(),
    };
    for (i, a) in conditions.iter().enumerate() {
        if !a.interval.is_subset_of(&region) {
            return Err(Error::InvalidInput(format!("interval {} is not inside {}", a.interval, region)));
        }
        for b in &conditions[i + 1..] {
            if !a.interval.is_disjoint(&b.interval) {
                return Err(Error::InvalidInput(format!("intervals {} and {} overlap", a.interval, b.interval)));
            }
        }
    }
    let setup = secant_setup(k, n, conditions)?;
    let expected = expected_count(k, n)?;
    let sols = multistart(&setup.system, |x| x.to_vec(), &setup.system, &setup.chart, expected, opts);
    let good = |f: &SolutionFlags| {
        f.is_real
            && match mode {
                Mode::Positive => f.positivity == NumericPositivity::TotallyPositive,
                Mode::Nonnegative => f.positivity != NumericPositivity::Neither,
            }
    };
    let sols = escalate(&setup.system, &setup.chart, sols, opts, good);
    let input = conditions
        .iter()
        .map(|c| format!("{} in {}", c.points, c.interval))
        .collect::<Vec<_>>()
        .join("; ");
    let degenerate = conditions.iter().any(|c| c.points.has_repeats());
    Ok(assemble(InstanceKind::Secant, k, n, mode, input, degenerate, expected, sols, opts))
}

/// Plücker coordinates of `V^⊥` from those of `V`, via
/// `β_I Δ_I(V) ∝ β_{I^⊥} Δ_{I^⊥}(V^⊥)`, normalized by the largest modulus.
pub fn dual_pluckers(p: &[(Subset, Complex64)], n: usize) -> Vec<(Subset, Complex64)> {
    let k = p.first().map_or(0, |(s, _)| s.len());
    let bf = |s: &[usize]| beta(s).to_f64().unwrap_or(f64::MAX);
    let lookup = |s: &[usize]| p.iter().find(|(t, _)| t == s).map(|(_, z)| *z).unwrap_or_default();
    let raw: Vec<(Subset, Complex64)> = subsets::k_subsets(n, n - k)
        .into_iter()
        .map(|j| {
            let i = subsets::i_perp(&j, n);
            let z = lookup(&i) * (bf(&i) / bf(&j));
            (j, z)
        })
        .collect();
    let pivot = raw
        .iter()
        .map(|(_, z)| *z)
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(Complex64::new(1.0, 0.0));
    raw.into_iter().map(|(s, z)| (s, z / pivot)).collect()
}

/// Distance between two projective points given by coordinate lists over
/// the same index sets: both are scaled to `1` at the largest coordinate of
/// `a`, then compared in max norm.
pub fn projective_distance(a: &[(Subset, Complex64)], b: &[(Subset, Complex64)]) -> f64 {
    let Some((i, _)) = a.iter().enumerate().max_by(|x, y| x.1 .1.norm().total_cmp(&y.1 .1.norm())) else {
        return 0.0;
    };
    if b[i].1.norm() == 0.0 {
        return f64::INFINITY;
    }
    let (pa, pb) = (a[i].1, b[i].1);
    a.iter()
        .zip(b)
        .map(|((_, x), (_, y))| (x / pa - y / pb).norm())
        .fold(0.0, f64::max)
}
