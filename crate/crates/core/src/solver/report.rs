use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::scalar::BigComplex;
use crate::flag::Mode;
use crate::subsets::{self, Subset};

/// Sign verdict on a numeric Plücker vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NumericPositivity {
    TotallyPositive,
    /// No coordinate is clearly negative, but some are below the sign
    /// margin.
    Indeterminate,
    Neither,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolutionFlags {
    pub is_real: bool,
    /// `max |Im Δ| / max |Δ|`.
    pub imag_ratio: f64,
    pub positivity: NumericPositivity,
    /// Smallest `Re Δ_I / max |Δ|` after normalizing the largest coordinate
    /// to be positive.
    pub margin: f64,
    pub witness: Option<Subset>,
}

/// A converged, polished solution in a big-cell chart.
#[derive(Clone, Debug)]
pub struct NumericSolution {
    pub n: usize,
    /// Dimension of the solution subspace.
    pub dim: usize,
    /// The free `(n - dim) x dim` block, row-major.
    pub chart: Vec<Complex64>,
    /// A basis of the solution subspace, `n` rows of `dim` entries.
    pub basis: Vec<Vec<Complex64>>,
    pub residual: f64,
    pub precision: usize,
    /// Plücker coordinates in lex order, divided by the coordinate of
    /// largest modulus.
    pub pluckers: Vec<(Subset, Complex64)>,
    pub flags: SolutionFlags,
    pub(crate) big_chart: Vec<BigComplex>,
}

impl NumericSolution {
    pub fn plucker(&self, set: &[usize]) -> Complex64 {
        self.pluckers
            .iter()
            .find(|(s, _)| s == set)
            .map(|(_, v)| *v)
            .unwrap_or_default()
    }

    pub fn to_json(&self) -> Value {
        let pair = |z: &Complex64| json!([z.re, z.im]);
        let coords: serde_json::Map<String, Value> = self
            .pluckers
            .iter()
            .map(|(s, z)| (subsets::key(s), pair(z)))
            .collect();
        json!({
            "chart": self.chart.iter().map(pair).collect::<Vec<_>>(),
            "pluckers": coords,
            "residual": self.residual,
            "precision": self.precision,
            "is_real": self.flags.is_real,
            "imag_ratio": self.flags.imag_ratio,
            "positivity": self.flags.positivity,
            "margin": self.flags.margin,
            "witness": self.flags.witness.as_ref().map(|w| subsets::key(w)),
        })
    }
}

/// Classifies a Plücker vector given in lex order.
///
/// Reality compares imaginary parts against the largest modulus. Positivity
/// normalizes the largest coordinate to `1` and then requires every real
/// part to be at least `sign_margin`; a coordinate at most `-sign_margin`
/// is a witness of `Neither`, and anything in between is `Indeterminate`.
pub fn classify_pluckers(
    raw: &[(Subset, Complex64)],
    real_tol: f64,
    sign_margin: f64,
) -> (Vec<(Subset, Complex64)>, SolutionFlags) {
    let (imax, _) = raw
        .iter()
        .enumerate()
        .map(|(i, (_, z))| (i, z.norm()))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty Plücker vector");
    let pivot = raw[imax].1;
    let scaled: Vec<(Subset, Complex64)> = raw.iter().map(|(s, z)| (s.clone(), z / pivot)).collect();
    let imag_ratio = scaled.iter().map(|(_, z)| z.im.abs()).fold(0.0, f64::max);
    let (wmin, margin) = scaled
        .iter()
        .enumerate()
        .map(|(i, (_, z))| (i, z.re))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty");
    let positivity = if margin >= sign_margin {
        NumericPositivity::TotallyPositive
    } else if margin <= -sign_margin {
        NumericPositivity::Neither
    } else {
        NumericPositivity::Indeterminate
    };
    let witness = (positivity != NumericPositivity::TotallyPositive).then(|| scaled[wmin].0.clone());
    let flags = SolutionFlags {
        is_real: imag_ratio <= real_tol,
        imag_ratio,
        positivity,
        margin,
        witness,
    };
    (scaled, flags)
}

/// Re-derives the flags of a solution at other tolerances.
pub fn classify_solution(s: &NumericSolution, real_tol: f64, sign_margin: f64) -> SolutionFlags {
    classify_pluckers(&s.pluckers, real_tol, sign_margin).1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Verified,
    /// Fewer solutions than expected, or unresolved signs.
    Warn,
    /// A nonreal or non-positive solution survived precision escalation.
    Counterexample,
    /// More distinct solutions than the expected count.
    DedupFailure,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Warn => 3,
            Status::Counterexample => 4,
            Status::DedupFailure => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Positivity,
    Secant,
}

#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub kind: InstanceKind,
    pub k: usize,
    pub n: usize,
    pub mode: Mode,
    pub input: String,
    pub found: usize,
    pub expected: usize,
    pub degenerate: bool,
    pub all_real: bool,
    /// All solutions positive (or, in nonnegative mode, none clearly
    /// negative).
    pub all_positive: bool,
    pub status: Status,
    pub seed: u64,
    pub precision: usize,
    pub solutions: Vec<NumericSolution>,
}

impl InstanceReport {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "k": self.k,
            "n": self.n,
            "mode": self.mode,
            "input": self.input,
            "found": self.found,
            "expected": self.expected,
            "degenerate": self.degenerate,
            "all_real": self.all_real,
            "all_positive": self.all_positive,
            "status": self.status,
            "seed": self.seed,
            "precision": self.precision,
            "solutions": self.solutions.iter().map(NumericSolution::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn summary(&self) -> String {
        let what = match self.mode {
            Mode::Positive => "TP",
            Mode::Nonnegative => "TNN",
        };
        format!(
            "Gr({},{}) {}: {}/{} solutions, real: {}, {}: {}, status {:?}{}",
            self.k,
            self.n,
            self.input,
            self.found,
            self.expected,
            self.all_real,
            what,
            self.all_positive,
            self.status,
            if self.degenerate { " (degenerate)" } else { "" }
        )
    }
}
