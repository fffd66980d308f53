//! The `SL_2` action, reversal and shift operators on `Q[x]_{<= n-1}`, and
//! a path-counting model for the minors of shift matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{binomial, format_rational, parse_rational, pow};
use crate::exact::{ExactMatrix, Poly, Rational};
use crate::grassmann::SubspaceRep;

/// `x -> (ax + b) / (cx + d)` with `ad - bc = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Moebius {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl Moebius {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::NotUnimodular(format!("ad - bc = {}", format_rational(&det))));
        }
        Ok(Moebius { a, b, c, d })
    }

    pub fn identity() -> Self {
        Moebius {
            a: Rational::one(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::one(),
        }
    }

    /// The element acting on polynomials as `f(x) -> f(x + t)`.
    pub fn shift(t: Rational) -> Self {
        Moebius {
            a: Rational::one(),
            b: -t,
            c: Rational::zero(),
            d: Rational::one(),
        }
    }

    /// Parses `"a,b,c,d"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<Rational> = s.split(',').map(parse_rational).collect::<Result<_>>()?;
        match <[Rational; 4]>::try_from(parts) {
            Ok([a, b, c, d]) => Moebius::new(a, b, c, d),
            Err(_) => Err(Error::Parse(format!("expected four entries a,b,c,d in '{s}'"))),
        }
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn compose(&self, other: &Moebius) -> Moebius {
        Moebius {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    /// Image of a point of the projective line, `None` standing for infinity.
    pub fn apply_point(&self, x: Option<&Rational>) -> Option<Rational> {
        match x {
            None if self.c.is_zero() => None,
            None => Some(&self.a / &self.c),
            Some(x) => {
                let den = &self.c * x + &self.d;
                if den.is_zero() {
                    None
                } else {
                    Some((&self.a * x + &self.b) / den)
                }
            }
        }
    }
}

fn check_bound(p: &Poly, n: usize) -> Result<()> {
    match p.degree() {
        Some(d) if d + 1 > n => Err(Error::DegreeExceedsBound {
            degree: d,
            bound: n.saturating_sub(1),
        }),
        _ => Ok(()),
    }
}

/// `(α·f)(x) = (-cx + a)^{n-1} f((dx - b) / (-cx + a))`, in `Q[x]_{<= n-1}`.
pub fn apply_moebius(alpha: &Moebius, p: &Poly, n: usize) -> Result<Poly> {
    check_bound(p, n)?;
    let num = Poly::new(vec![-alpha.b.clone(), alpha.d.clone()]);
    let den = Poly::new(vec![alpha.a.clone(), -alpha.c.clone()]);
    let mut out = Poly::zero();
    for (i, coeff) in p.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let term = &(&num.pow(i) * &den.pow(n - 1 - i)).scale(coeff);
        out = &out + term;
    }
    out.bounded(n - 1)
}

/// `rev(f)(x) = x^{n-1} f(1/x)`: the coefficient list reversed.
pub fn rev(p: &Poly, n: usize) -> Result<Poly> {
    check_bound(p, n)?;
    let mut c = p.padded_coeffs(n);
    c.reverse();
    Poly::with_bound(c, n - 1)
}

/// The matrix of `f(x) -> f(x + t)` on coefficient vectors: entry `(i, j)`
/// (one-based) is `C(j-1, i-1) t^{j-i}`.
pub fn shift_matrix(n: usize, t: &Rational) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = Rational::from_integer(binomial(j as u64, i as u64)) * pow(t, j - i);
            m.set(i, j, v);
        }
    }
    m
}

/// The differentiation matrix `D`, with `D_{i,i+1} = i` (one-based).
pub fn derivative_matrix(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        m.set(i, i + 1, Rational::from_integer(BigInt::from(i + 1)));
    }
    m
}

/// The matrix of `rev`, the antidiagonal permutation.
pub fn rev_matrix(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, n - 1 - i, Rational::one());
    }
    m
}

/// `rev ∘ Θ_s ∘ rev ∘ Θ_t`, a totally positive matrix for `s, t > 0`.
pub fn shift_rev_product(n: usize, s: &Rational, t: &Rational) -> ExactMatrix {
    let r = rev_matrix(n);
    let lower = r.mul(&shift_matrix(n, s)).and_then(|m| m.mul(&r)).expect("square");
    lower.mul(&shift_matrix(n, t)).expect("square")
}

/// `Θ_t(V) = {f(x + t) : f in V}`.
pub fn apply_shift(v: &SubspaceRep, t: &Rational) -> SubspaceRep {
    v.transform(&shift_matrix(v.n(), t)).expect("shift is invertible")
}

pub fn moebius_subspace(alpha: &Moebius, v: &SubspaceRep) -> Result<SubspaceRep> {
    let polys = v
        .polys()
        .iter()
        .map(|p| apply_moebius(alpha, p, v.n()))
        .collect::<Result<Vec<_>>>()?;
    SubspaceRep::from_polys(v.n(), &polys)
}

pub fn rev_subspace(v: &SubspaceRep) -> SubspaceRep {
    v.transform(&rev_matrix(v.n())).expect("rev is invertible")
}

/// Number of families of vertex-disjoint paths from sources `I` to sinks
/// `J` in the staircase network whose path counts are `C(j-1, i-1)`.
///
/// The network has inner vertices `(x, y)` with `2 <= x <= y <= n`, sources
/// `(1, y)`, and edges `(x-1, y) -> (x, y)` and `(x-1, y-1) -> (x, y)`. Sink
/// `j` is reached from the diagonal vertex `(j, j)`. The count is a transfer
/// over columns whose state is the set of occupied heights.
pub fn lgv_path_count(sources: &[usize], sinks: &[usize], n: usize) -> Result<BigInt> {
    if sources.len() != sinks.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} sources but {} sinks",
            sources.len(),
            sinks.len()
        )));
    }
    crate::subsets::validate(sources, n)?;
    crate::subsets::validate(sinks, n)?;
    let mut states: HashMap<Vec<usize>, BigInt> = HashMap::new();
    states.insert(sources.to_vec(), BigInt::one());
    for x in 1..=n {
        // Sink x must absorb the path sitting on the diagonal.
        let mut absorbed: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (state, count) in states {
            let on_diag = state.contains(&x);
            let next = if sinks.contains(&x) {
                if !on_diag {
                    continue;
                }
                state.iter().copied().filter(|&y| y != x).collect()
            } else {
                state
            };
            *absorbed.entry(next).or_insert_with(BigInt::zero) += count;
        }
        if x == n {
            return Ok(absorbed.remove(&Vec::new()).unwrap_or_else(BigInt::zero));
        }
        let mut moved: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (state, count) in absorbed {
            let m = state.len();
            'choice: for mask in 0u32..(1 << m) {
                let mut next = Vec::with_capacity(m);
                for (idx, &y) in state.iter().enumerate() {
                    let ny = if mask & (1 << idx) != 0 { y + 1 } else { y };
                    if ny > n || ny < x + 1 || next.last().is_some_and(|&p| p >= ny) {
                        continue 'choice;
                    }
                    next.push(ny);
                }
                *moved.entry(next).or_insert_with(BigInt::zero) += &count;
            }
        }
        states = moved;
    }
    Ok(BigInt::zero())
}
