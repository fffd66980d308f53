//! Confluent evaluation determinants and checkers for Chebyshev,
//! disconjugate and Markov spaces of polynomials.
//!
//! Being Chebyshev or disconjugate on an interval quantifies over every
//! element of the space, so those checks sample elements and can only ever
//! produce a counterexample. The Markov check is exact for the given basis.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::factorial;
use crate::exact::sturm::root_count_with_multiplicity;
use crate::exact::{sturm_root_count, wronskian_det, ExactMatrix, Poly, ProjInterval, Rational};
use crate::flag::markov_system_check;

/// Weakly increasing evaluation nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeList {
    xs: Vec<Rational>,
}

impl NodeList {
    pub fn new(xs: Vec<Rational>) -> Result<Self> {
        if xs.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput("nodes must be weakly increasing".into()));
        }
        Ok(NodeList { xs })
    }

    pub fn from_i64(xs: &[i64]) -> Result<Self> {
        Self::new(xs.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn xs(&self) -> &[Rational] {
        &self.xs
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// `p_i`: how many earlier nodes equal `x_i`.
    pub fn depths(&self) -> Vec<usize> {
        (0..self.xs.len())
            .map(|i| self.xs[..i].iter().filter(|y| **y == self.xs[i]).count())
            .collect()
    }
}

/// The matrix `(f_j^{(p_i)}(x_i))`.
fn confluent_matrix(fs: &[Poly], xs: &NodeList) -> Result<ExactMatrix> {
    if fs.len() != xs.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} functions but {} nodes",
            fs.len(),
            xs.len()
        )));
    }
    let rows = xs
        .xs
        .iter()
        .zip(xs.depths())
        .map(|(x, p)| fs.iter().map(|f| f.nth_derivative(p).eval(x)).collect())
        .collect();
    ExactMatrix::from_rows(rows)
}

/// `det*(f_1, ..., f_k; x_1, ..., x_k) = det(f_j^{(p_i)}(x_i))`.
pub fn det_star(fs: &[Poly], xs: &NodeList) -> Result<Rational> {
    confluent_matrix(fs, xs)?.det()
}

/// Deviations of the divided-difference quotients from `det*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitCheck {
    pub target: Rational,
    pub eps: Vec<Rational>,
    /// `|q(ε) - det*| / max(|det*|, 1)` for each `ε`.
    pub deviations: Vec<Rational>,
}

impl LimitCheck {
    pub fn max_deviation(&self) -> Rational {
        self.deviations.iter().cloned().max().unwrap_or_else(Rational::zero)
    }

    /// Strictly decreasing deviations, ending within `tol`.
    pub fn converges(&self, tol: &Rational) -> bool {
        self.deviations.windows(2).all(|w| w[1] <= w[0])
            && self.deviations.last().is_none_or(|d| d <= tol)
    }
}

/// Compares `(prod p_i!) (prod_{i<j, x_i = x_j} 1/(y_j - y_i)) det(f_j(y_i))`
/// at the split nodes `y_i = x_i + i ε` against `det*`, for each `ε`.
pub fn det_star_limit_check(fs: &[Poly], xs: &NodeList, eps: &[Rational]) -> Result<LimitCheck> {
    let target = det_star(fs, xs)?;
    let depth_factor: Rational = xs
        .depths()
        .iter()
        .map(|&p| Rational::from_integer(factorial(p as u64)))
        .product();
    let scale = if target.is_zero() { Rational::from_integer(1.into()) } else { target.abs() };
    let mut deviations = Vec::with_capacity(eps.len());
    for e in eps {
        if !e.is_positive() {
            return Err(Error::InvalidInput("perturbations must be positive".into()));
        }
        let ys: Vec<Rational> = xs
            .xs
            .iter()
            .enumerate()
            .map(|(i, x)| x + e * Rational::from_integer((i as i64 + 1).into()))
            .collect();
        let vandermonde_part: Rational = (0..ys.len())
            .flat_map(|i| (i + 1..ys.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| xs.xs[i] == xs.xs[j])
            .map(|(i, j)| &ys[j] - &ys[i])
            .product();
        let rows = ys.iter().map(|y| fs.iter().map(|f| f.eval(y)).collect()).collect();
        let plain = ExactMatrix::from_rows(rows)?.det()?;
        let q = &depth_factor * plain / vandermonde_part;
        deviations.push((q - &target).abs() / &scale);
    }
    Ok(LimitCheck {
        target,
        eps: eps.to_vec(),
        deviations,
    })
}

/// A nonzero `c` with `sum c_j f_j` vanishing at the nodes to the prescribed
/// orders, when `det* = 0`.
pub fn dependent_combination(fs: &[Poly], xs: &NodeList) -> Result<Option<Vec<Rational>>> {
    Ok(confluent_matrix(fs, xs)?.kernel_vector())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceProperty {
    Chebyshev,
    Disconjugate,
    Markov,
}

/// Outcome of [`property_check`]; a witness is an element of the space with
/// too many zeros, or for the Markov check the index `i` of a vanishing
/// initial Wronskian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub holds: bool,
    pub witness: Option<Poly>,
}

fn combination(fs: &[Poly], c: &[i64]) -> Poly {
    fs.iter()
        .zip(c)
        .fold(Poly::zero(), |acc, (f, &cj)| &acc + &f.scale(&Rational::from_integer(cj.into())))
}

fn zero_count(f: &Poly, interval: &ProjInterval, property: SpaceProperty) -> Result<usize> {
    match property {
        SpaceProperty::Disconjugate => root_count_with_multiplicity(f, interval, None),
        _ => sturm_root_count(f, interval, None),
    }
}

/// Checks a space, given by a basis of polynomials, on `interval`.
///
/// Markov is exact on the given ordered basis. Chebyshev and disconjugate
/// sample the basis vectors and then `trials` integer combinations with
/// coefficients in `[-9, 9]`, returning the first element with at least `k`
/// zeros (distinct, resp. with multiplicity).
pub fn property_check(
    fs: &[Poly],
    interval: &ProjInterval,
    property: SpaceProperty,
    trials: usize,
    seed: u64,
) -> Result<PropertyVerdict> {
    if fs.is_empty() {
        return Err(Error::EmptyInput);
    }
    if wronskian_det(fs)?.is_zero() {
        return Err(Error::LinearlyDependent);
    }
    if property == SpaceProperty::Markov {
        let holds = markov_system_check(fs, interval)?;
        return Ok(PropertyVerdict { holds, witness: None });
    }
    let k = fs.len();
    let is_witness = |c: &[i64]| -> Result<Option<Poly>> {
        let f = combination(fs, c);
        Ok((zero_count(&f, interval, property)? >= k).then_some(f))
    };
    for j in 0..k {
        let mut e = vec![0; k];
        e[j] = 1;
        if let Some(w) = is_witness(&e)? {
            return Ok(PropertyVerdict {
                holds: false,
                witness: Some(w),
            });
        }
    }
    let samples: Vec<Vec<i64>> = (0..trials)
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            loop {
                let c: Vec<i64> = (0..k).map(|_| rng.gen_range(-9..=9)).collect();
                if c.iter().any(|&v| v != 0) {
                    break c;
                }
            }
        })
        .collect();
    let found = samples
        .par_iter()
        .map(|c| is_witness(c))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(PropertyVerdict {
        holds: found.is_none(),
        witness: found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    #[test]
    fn det_star_examples() {
        let fs = [Poly::from_i64(&[1]), Poly::from_i64(&[0, 1])];
        assert_eq!(det_star(&fs, &NodeList::from_i64(&[0, 0]).unwrap()).unwrap(), int(1));
        let dist = det_star(&fs, &NodeList::from_i64(&[2, 5]).unwrap()).unwrap();
        assert_eq!(dist, int(3));
        let quad = [Poly::from_i64(&[1]), Poly::from_i64(&[0, 1]), Poly::from_i64(&[0, 0, 1])];
        assert_eq!(det_star(&quad, &NodeList::from_i64(&[0, 0, 0]).unwrap()).unwrap(), int(2));
        assert!(det_star(&fs, &NodeList::from_i64(&[0]).unwrap()).is_err());
        assert!(NodeList::from_i64(&[1, 0]).is_err());
    }

    #[test]
    fn limits() {
        let eps: Vec<Rational> = (1..=5).map(|i| frac(1, 10i64.pow(i))).collect();
        let quad = [Poly::from_i64(&[1]), Poly::from_i64(&[0, 1]), Poly::from_i64(&[0, 0, 1])];
        let check = det_star_limit_check(&quad, &NodeList::from_i64(&[0, 0, 0]).unwrap(), &eps).unwrap();
        assert_eq!(check.target, int(2));
        assert!(check.converges(&frac(1, 1000)));
        let cubic = [Poly::from_i64(&[1, 2]), Poly::from_i64(&[0, 1, 0, 1]), Poly::from_i64(&[3, 0, 1])];
        let check = det_star_limit_check(&cubic, &NodeList::from_i64(&[1, 1, 2]).unwrap(), &eps).unwrap();
        assert!(check.converges(&frac(1, 100)));
        let check = det_star_limit_check(&cubic, &NodeList::from_i64(&[-1, 0, 2]).unwrap(), &eps).unwrap();
        assert!(check.max_deviation() > int(0));
    }

    #[test]
    fn combinations() {
        let fs = [Poly::from_i64(&[1]), Poly::from_i64(&[0, 0, 1])];
        let c = dependent_combination(&fs, &NodeList::from_i64(&[-1, 1]).unwrap()).unwrap().unwrap();
        assert_eq!(c[0], -c[1].clone());
        let fs2 = [Poly::from_i64(&[1]), Poly::from_i64(&[0, 1])];
        assert!(dependent_combination(&fs2, &NodeList::from_i64(&[-1, 1]).unwrap()).unwrap().is_none());
        let fs3 = [Poly::from_i64(&[0, 1]), Poly::from_i64(&[0, 0, 1])];
        assert!(dependent_combination(&fs3, &NodeList::from_i64(&[0, 0]).unwrap()).unwrap().is_some());
    }

    #[test]
    fn reference_spaces() {
        let interval = ProjInterval::open(int(-1), int(1)).unwrap();
        let cubic = [Poly::from_i64(&[1]), Poly::from_i64(&[0, 0, 0, 1])];
        assert!(property_check(&cubic, &interval, SpaceProperty::Chebyshev, 200, 0).unwrap().holds);
        let v = property_check(&cubic, &interval, SpaceProperty::Disconjugate, 200, 0).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap(), Poly::from_i64(&[0, 0, 0, 1]));

        let half_open = ProjInterval::parse("[-1,1)").unwrap();
        let pair = [Poly::from_i64(&[0, 1]), Poly::from_i64(&[-1, 0, 1])];
        assert!(!property_check(&pair, &half_open, SpaceProperty::Markov, 0, 0).unwrap().holds);
        assert!(property_check(&pair, &half_open, SpaceProperty::Disconjugate, 500, 3).unwrap().holds);
    }
}
