//! Grassmannians: Plücker coordinates, the Wronski map, the duality pairing
//! and total positivity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::rational::{binomial, factorial, format_rational, parse_rational, primitive_integer_scaling};
use crate::exact::{descartes_sign_changes, ExactMatrix, Poly, Rational};
use crate::subsets::{self, Subset};

pub use crate::subsets::i_perp;

/// A `k`-dimensional subspace of `Q^n`, represented by an `n x k` basis
/// matrix of full column rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceRep {
    n: usize,
    k: usize,
    basis: ExactMatrix,
}

impl SubspaceRep {
    pub fn new(basis: ExactMatrix) -> Result<Self> {
        let (n, k) = (basis.rows(), basis.cols());
        if k > n {
            return Err(Error::DimensionMismatch(format!("{k} vectors in dimension {n}")));
        }
        if basis.rank() != k {
            return Err(Error::LinearlyDependent);
        }
        Ok(SubspaceRep { n, k, basis })
    }

    /// Span of polynomials of degree at most `n - 1`, as coefficient columns.
    pub fn from_polys(n: usize, polys: &[Poly]) -> Result<Self> {
        let cols = polys
            .iter()
            .map(|p| {
                if p.degree().is_some_and(|d| d >= n) {
                    return Err(Error::DegreeExceedsBound {
                        degree: p.degree().unwrap(),
                        bound: n.saturating_sub(1),
                    });
                }
                Ok(p.padded_coeffs(n))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ExactMatrix::from_columns(n, &cols)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    /// Basis columns as polynomials in `Q[x]_{<= n-1}`.
    pub fn polys(&self) -> Vec<Poly> {
        self.basis.column_polys()
    }

    /// Equality as subspaces, independent of the chosen bases.
    pub fn same_subspace(&self, other: &SubspaceRep) -> bool {
        self.n == other.n
            && self.k == other.k
            && self.basis.hcat(&other.basis).map(|m| m.rank()) == Ok(self.k)
    }

    /// Applies an `n x n` matrix to every basis vector.
    pub fn transform(&self, m: &ExactMatrix) -> Result<SubspaceRep> {
        SubspaceRep::new(m.mul(&self.basis)?)
    }
}

/// Plücker coordinates `Δ_I` for all `k`-subsets `I` of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    n: usize,
    k: usize,
    values: BTreeMap<Subset, Rational>,
}

impl PluckerVector {
    /// Builds a vector from explicit values; missing subsets are zero.
    pub fn new(n: usize, k: usize, values: BTreeMap<Subset, Rational>) -> Result<Self> {
        for set in values.keys() {
            if set.len() != k {
                return Err(Error::DimensionMismatch(format!("subset {set:?} is not a {k}-subset")));
            }
            subsets::validate(set, n)?;
        }
        let mut full = BTreeMap::new();
        for set in subsets::k_subsets(n, k) {
            let v = values.get(&set).cloned().unwrap_or_else(Rational::zero);
            full.insert(set, v);
        }
        if full.values().all(Zero::is_zero) {
            return Err(Error::InvalidInput("all Plücker coordinates vanish".into()));
        }
        Ok(PluckerVector { n, k, values: full })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &BTreeMap<Subset, Rational> {
        &self.values
    }

    /// `Δ_I`, zero for subsets outside the index range.
    pub fn get(&self, set: &[usize]) -> Rational {
        self.values.get(set).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Δ` of an arbitrary ordered index sequence (alternating extension).
    pub fn get_signed(&self, seq: &[usize]) -> Rational {
        match subsets::sort_with_sign(seq) {
            Some((set, s)) if s > 0 => self.get(&set),
            Some((set, _)) => -self.get(&set),
            None => Rational::zero(),
        }
    }

    /// Divides by the first nonzero coordinate in lex order, then clears
    /// denominators to coprime integers, so the first nonzero entry is
    /// positive.
    pub fn canonical(&self) -> PluckerVector {
        let first = self.values.values().find(|v| !v.is_zero()).cloned().unwrap();
        let scaled: Vec<Rational> = self.values.values().map(|v| v / &first).collect();
        let ints = primitive_integer_scaling(&scaled);
        let values = self.values.keys().cloned().zip(ints).collect();
        PluckerVector {
            n: self.n,
            k: self.k,
            values,
        }
    }

    pub fn is_proportional(&self, other: &PluckerVector) -> bool {
        self.n == other.n && self.k == other.k && self.canonical() == other.canonical()
    }

    /// Checks every three-term relation
    /// `Δ_{Sac} Δ_{Sbd} = Δ_{Sab} Δ_{Scd} + Δ_{Sad} Δ_{Sbc}`
    /// for `|S| = k - 2` and `a < b < c < d` outside `S`.
    pub fn satisfies_three_term_relations(&self) -> bool {
        if self.k < 2 || self.n < 4 {
            return true;
        }
        for s in subsets::k_subsets(self.n, self.k - 2) {
            let rest = subsets::complement(&s, self.n);
            for quad in subsets::k_subsets(rest.len(), 4) {
                let [a, b, c, d] = [rest[quad[0] - 1], rest[quad[1] - 1], rest[quad[2] - 1], rest[quad[3] - 1]];
                let with = |x: usize, y: usize| {
                    let mut seq = s.clone();
                    seq.push(x);
                    seq.push(y);
                    self.get_signed(&seq)
                };
                let lhs = with(a, c) * with(b, d);
                let rhs = with(a, b) * with(c, d) + with(a, d) * with(b, c);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("Plücker vectors always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct PluckerJson {
    n: usize,
    k: usize,
    coords: BTreeMap<String, String>,
}

impl Serialize for PluckerVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PluckerJson {
            n: self.n,
            k: self.k,
            coords: self
                .values
                .iter()
                .map(|(set, v)| (subsets::key(set), format_rational(v)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PluckerVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PluckerJson::deserialize(deserializer)?;
        let mut values = BTreeMap::new();
        for (key, v) in &raw.coords {
            let set = subsets::parse_key(key).map_err(D::Error::custom)?;
            let q = parse_rational(v).map_err(D::Error::custom)?;
            values.insert(set, q);
        }
        PluckerVector::new(raw.n, raw.k, values).map_err(D::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PositivityTag {
    Neither,
    TotallyNonnegative,
    TotallyPositive,
}

/// Verdict of a sign test. For `Neither` the witness is a subset whose
/// coordinate has the offending sign; for `TotallyNonnegative` it is a
/// vanishing coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityClass {
    pub tag: PositivityTag,
    pub witness: Option<Subset>,
}

impl PositivityClass {
    pub fn totally_positive() -> Self {
        PositivityClass {
            tag: PositivityTag::TotallyPositive,
            witness: None,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.tag >= PositivityTag::TotallyNonnegative
    }

    pub fn is_positive(&self) -> bool {
        self.tag == PositivityTag::TotallyPositive
    }
}

/// Exact maximal minors `det(A_{I,[k]})` of the basis, unscaled.
pub fn maximal_minors(v: &SubspaceRep) -> PluckerVector {
    let cols: Vec<usize> = (0..v.k).collect();
    let values = subsets::k_subsets(v.n, v.k)
        .into_iter()
        .map(|set| {
            let rows: Vec<usize> = set.iter().map(|i| i - 1).collect();
            let d = v.basis.select(&rows, &cols).det().expect("square");
            (set, d)
        })
        .collect();
    PluckerVector {
        n: v.n,
        k: v.k,
        values,
    }
}

/// All maximal minors, in canonical scaling.
pub fn plucker_coordinates(v: &SubspaceRep) -> PluckerVector {
    maximal_minors(v).canonical()
}

/// TP iff every coordinate is positive, TNN iff all are nonnegative with
/// some zero, up to one global sign.
pub fn classify_positivity(p: &PluckerVector) -> PositivityClass {
    let sign = p
        .values
        .values()
        .find(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .unwrap_or(true);
    let mut zero = None;
    for (set, v) in &p.values {
        if v.is_zero() {
            zero.get_or_insert_with(|| set.clone());
        } else if v.is_positive() != sign {
            return PositivityClass {
                tag: PositivityTag::Neither,
                witness: Some(set.clone()),
            };
        }
    }
    match zero {
        None => PositivityClass::totally_positive(),
        Some(w) => PositivityClass {
            tag: PositivityTag::TotallyNonnegative,
            witness: Some(w),
        },
    }
}

/// `β_I = prod_{i<j in I} (j - i) / (1! 2! ... (k-1)!)`, a positive integer.
pub fn beta(set: &[usize]) -> BigInt {
    let mut num = BigInt::one();
    for (a, &i) in set.iter().enumerate() {
        for &j in &set[a + 1..] {
            num *= BigInt::from(j as i64 - i as i64);
        }
    }
    let den = (1..set.len() as u64).fold(BigInt::one(), |acc, m| acc * factorial(m));
    num / den
}

/// `Wr(V) = sum_I β_I Δ_I x^{ΣI - C(k+1, 2)}`, in `Q[x]_{<= k(n-k)}`.
pub fn wronskian_from_pluckers(p: &PluckerVector) -> Poly {
    let (n, k) = (p.n, p.k);
    let shift = k * (k + 1) / 2;
    let top = k * (n - k);
    let mut coeffs = vec![Rational::zero(); top + 1];
    for (set, v) in &p.values {
        coeffs[subsets::sum(set) - shift] += Rational::from_integer(beta(set)) * v;
    }
    Poly::with_bound(coeffs, top).expect("exponents never exceed k(n-k)")
}

/// The pairing `<a, b> = sum_i (-1)^{i-1} a_i b_{n+1-i} / C(n-1, i-1)`.
pub fn pairing(a: &[Rational], b: &[Rational]) -> Result<Rational> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!("lengths {} and {}", a.len(), b.len())));
    }
    let n = a.len();
    let mut acc = Rational::zero();
    for i in 0..n {
        let term = &a[i] * &b[n - 1 - i] / Rational::from_integer(binomial(n as u64 - 1, i as u64));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The perpendicular space under the pairing: the standard orthogonal
/// complement with its rows reversed and row `i` scaled by
/// `(-1)^{i-1} C(n-1, i-1)`.
pub fn perp(v: &SubspaceRep) -> SubspaceRep {
    let n = v.n;
    let w = if v.k == 0 {
        ExactMatrix::identity(n)
    } else {
        v.basis.transpose().nullspace()
    };
    let mut out = ExactMatrix::zeros(n, w.cols());
    for i in 0..n {
        let scale = Rational::from_integer(binomial(n as u64 - 1, i as u64));
        let scale = if i % 2 == 0 { scale } else { -scale };
        for j in 0..w.cols() {
            out.set(i, j, w.get(n - 1 - i, j) * &scale);
        }
    }
    SubspaceRep::new(out).expect("complement has full rank")
}

/// Sampled Gantmakher-Krein test: every sampled vector of `V` must change
/// sign at most `k - 1` times. A necessary condition for total
/// nonnegativity; the basis vectors are always among the samples.
pub fn gk_variation_sample(v: &SubspaceRep, trials: usize, seed: u64) -> bool {
    let k = v.k;
    if k == 0 {
        return true;
    }
    let basis = v.basis.columns();
    let ok = |coeffs: &[i64]| {
        let vec: Vec<Rational> = (0..v.n)
            .map(|i| {
                coeffs
                    .iter()
                    .zip(&basis)
                    .map(|(&c, col)| Rational::from_integer(c.into()) * &col[i])
                    .sum()
            })
            .collect();
        descartes_sign_changes(&vec) < k
    };
    for j in 0..k {
        let mut e = vec![0; k];
        e[j] = 1;
        if !ok(&e) {
            return false;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut c: Vec<i64> = (0..k).map(|_| rng.gen_range(-9..=9)).collect();
        if c.iter().all(|&x| x == 0) {
            c[0] = 1;
        }
        if !ok(&c) {
            return false;
        }
    }
    true
}

/// Pretty form of a Plücker vector, e.g. `Δ12=1 Δ13=3 ...`.
pub fn describe(p: &PluckerVector) -> String {
    p.values
        .iter()
        .map(|(set, v)| {
            let sep = if p.n >= 10 { "," } else { "" };
            let idx: Vec<String> = set.iter().map(usize::to_string).collect();
            format!("Δ{}={}", idx.join(sep), format_rational(v))
        })
        .collect::<Vec<_>>()
        .join(" ")
}
