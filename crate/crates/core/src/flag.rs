//! Complete flags and their two positivity tests: left-justified minors, and
//! root-freeness of the Wronskians of the nested subspaces.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{sturm_root_count, wronskian_det, ExactMatrix, Poly, ProjInterval};
use crate::grassmann::{classify_positivity, maximal_minors, PositivityClass, PositivityTag, SubspaceRep};

/// A complete flag `V_1 ⊂ ... ⊂ V_{n-1}`, with `V_k` spanned by the first
/// `k` columns of an invertible `n x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagRep {
    n: usize,
    basis: ExactMatrix,
}

impl FlagRep {
    pub fn new(basis: ExactMatrix) -> Result<Self> {
        if basis.rows() != basis.cols() {
            return Err(Error::NonSquare {
                rows: basis.rows(),
                cols: basis.cols(),
            });
        }
        if basis.det()?.is_zero() {
            return Err(Error::SingularFlag);
        }
        Ok(FlagRep {
            n: basis.rows(),
            basis,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    /// `V_k`, for `1 <= k <= n`.
    pub fn level(&self, k: usize) -> SubspaceRep {
        SubspaceRep::new(self.basis.leading_columns(k)).expect("columns of an invertible matrix")
    }

    /// `V_1, ..., V_{n-1}`.
    pub fn levels(&self) -> Vec<SubspaceRep> {
        (1..self.n).map(|k| self.level(k)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Nonnegative,
    Positive,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nonnegative" | "tnn" => Ok(Mode::Nonnegative),
            "positive" | "tp" => Ok(Mode::Positive),
            _ => Err(Error::Parse(format!("unknown mode '{s}'"))),
        }
    }
}

/// Wronskian data of one level `V_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelReport {
    pub k: usize,
    pub wronskian: Poly,
    /// Distinct roots in `(0, inf)`.
    pub roots_in_region: usize,
    /// `deg Wr(V_k) = k(n-k)`, i.e. no zero at infinity.
    pub degree_ok: bool,
    pub value_at_zero_nonzero: bool,
}

impl LevelReport {
    pub fn of(v: &SubspaceRep) -> Self {
        let (n, k) = (v.n(), v.k());
        let wronskian = wronskian_det(&v.polys()).expect("nonempty basis with a shared bound");
        let roots_in_region =
            sturm_root_count(&wronskian, &ProjInterval::positive_open(), None).expect("independent basis");
        LevelReport {
            k,
            degree_ok: wronskian.degree() == Some(k * (n - k)),
            value_at_zero_nonzero: !wronskian.coeff(0).is_zero(),
            roots_in_region,
            wronskian,
        }
    }

    /// Nonzero on `(0, inf)`.
    pub fn nonnegative_ok(&self) -> bool {
        self.roots_in_region == 0
    }

    /// Nonzero on `[0, inf]`.
    pub fn positive_ok(&self) -> bool {
        self.nonnegative_ok() && self.degree_ok && self.value_at_zero_nonzero
    }
}

/// Outcome of the Wronskian test. The verdict is the full classification
/// from all levels; `mode` only selects what [`FlagTestReport::passes`]
/// asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagTestReport {
    pub mode: Mode,
    pub verdict: PositivityTag,
    pub per_level: Vec<LevelReport>,
}

impl FlagTestReport {
    pub fn from_levels(mode: Mode, per_level: Vec<LevelReport>) -> Self {
        let verdict = if !per_level.iter().all(LevelReport::nonnegative_ok) {
            PositivityTag::Neither
        } else if per_level.iter().all(LevelReport::positive_ok) {
            PositivityTag::TotallyPositive
        } else {
            PositivityTag::TotallyNonnegative
        };
        FlagTestReport {
            mode,
            verdict,
            per_level,
        }
    }

    pub fn passes(&self) -> bool {
        match self.mode {
            Mode::Nonnegative => self.verdict >= PositivityTag::TotallyNonnegative,
            Mode::Positive => self.verdict == PositivityTag::TotallyPositive,
        }
    }
}

/// Classifies the flag by the signs of its left-justified minors, each
/// level scaled independently.
pub fn flag_positivity_plucker(f: &FlagRep) -> PositivityClass {
    classify_levels(&f.levels())
}

/// Combined sign classification of several subspaces.
pub fn classify_levels(levels: &[SubspaceRep]) -> PositivityClass {
    let mut out = PositivityClass::totally_positive();
    for v in levels {
        let c = classify_positivity(&maximal_minors(v).canonical());
        match c.tag {
            PositivityTag::Neither => return c,
            PositivityTag::TotallyNonnegative if out.is_positive() => out = c,
            _ => {}
        }
    }
    out
}

/// The Wronskian membership test on every level `V_1, ..., V_{n-1}`.
pub fn flag_positivity_wronskian(f: &FlagRep, mode: Mode) -> FlagTestReport {
    let levels = f.levels();
    FlagTestReport::from_levels(mode, levels.iter().map(LevelReport::of).collect())
}

/// True iff `fs` is a Markov system on `interval`: every initial Wronskian
/// `Wr(f_1, ..., f_i)` has no root there. The point at infinity is judged
/// from the ambient degree bounds of the inputs.
pub fn markov_system_check(fs: &[Poly], interval: &ProjInterval) -> Result<bool> {
    if fs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dependent = wronskian_det(fs)?.is_zero();
    if dependent {
        return Err(Error::LinearlyDependent);
    }
    for i in 1..=fs.len() {
        let w = wronskian_det(&fs[..i])?;
        if sturm_root_count(&w, interval, None)? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The partial flag `V_1 ⊂ V_2` in `R^4` whose Wronskians are both
/// root-free on `[0, inf]` although it is not totally nonnegative.
#[derive(Clone, Debug)]
pub struct PartialFlagExample {
    pub basis: ExactMatrix,
    pub levels: Vec<SubspaceRep>,
    pub report: FlagTestReport,
    pub plucker: PositivityClass,
}

pub fn partial_flag_counterexample() -> PartialFlagExample {
    let basis = ExactMatrix::from_i64(&[&[1, 0], &[1, 2], &[1, 1], &[1, 3]]);
    let levels = vec![
        SubspaceRep::new(basis.leading_columns(1)).expect("nonzero column"),
        SubspaceRep::new(basis.clone()).expect("independent columns"),
    ];
    let report = FlagTestReport::from_levels(Mode::Positive, levels.iter().map(LevelReport::of).collect());
    let plucker = classify_levels(&levels);
    PartialFlagExample {
        basis,
        levels,
        report,
        plucker,
    }
}

/// Product of signs of two coordinates, `-1`, `0` or `1`.
pub fn sign_product(a: &crate::Rational, b: &crate::Rational) -> i8 {
    if a.is_zero() || b.is_zero() {
        0
    } else if a.is_positive() == b.is_positive() {
        1
    } else {
        -1
    }
}
