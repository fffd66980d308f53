use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, primitive_integer_scaling, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals.
///
/// `coeffs[i]` is the coefficient of `x^i`. The optional ambient bound is the
/// degree cap `n - 1` of the space the polynomial lives in; the gap between it
/// and the actual degree is the multiplicity of the zero at infinity.
#[derive(Clone, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
    ambient_bound: Option<usize>,
}

impl PartialEq for Poly {
    /// Equality of polynomials; the ambient bound is context, not value.
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            ambient_bound: None,
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Builds a polynomial living in `Q[x]_{<= bound}`.
    pub fn with_bound(coeffs: Vec<Rational>, bound: usize) -> Result<Self> {
        Self::new(coeffs).bounded(bound)
    }

    /// Attaches an ambient bound, failing if the degree is already larger.
    pub fn bounded(mut self, bound: usize) -> Result<Self> {
        if let Some(d) = self.degree() {
            if d > bound {
                return Err(Error::DegreeExceedsBound { degree: d, bound });
            }
        }
        self.ambient_bound = Some(bound);
        Ok(self)
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^e`
    pub fn monomial(c: Rational, e: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    /// `x - r`
    pub fn linear_factor(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    /// Monic polynomial with the given roots (with repetition).
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Poly::one(), |acc, r| &acc * &Poly::linear_factor(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients `0..len`, zero-padded.
    pub fn padded_coeffs(&self, len: usize) -> Vec<Rational> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn ambient_bound(&self) -> Option<usize> {
        self.ambient_bound
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiplicity of the zero at infinity relative to the ambient bound.
    pub fn infinity_multiplicity(&self) -> Option<usize> {
        let bound = self.ambient_bound?;
        Some(match self.degree() {
            Some(d) => bound - d,
            None => bound,
        })
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        Poly {
            ambient_bound: self.ambient_bound,
            ..Poly::new(coeffs)
        }
    }

    pub fn nth_derivative(&self, j: usize) -> Poly {
        (0..j).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly {
            ambient_bound: self.ambient_bound,
            ..Poly::new(self.coeffs.iter().map(|a| a * c).collect())
        }
    }

    /// Euclidean division over Q. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / lc;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * b;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Division known to be exact; the remainder is discarded.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.primitive_positive();
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&(Rational::one() / lc)),
            None => Poly::zero(),
        }
    }

    /// Rescales by a positive rational so the coefficients are coprime
    /// integers. Signs of values are unchanged, which is what Sturm chains
    /// need.
    pub fn primitive_positive(&self) -> Poly {
        Poly {
            ambient_bound: self.ambient_bound,
            ..Poly::new(primitive_integer_scaling(&self.coeffs))
        }
    }

    /// Product of the distinct irreducible factors.
    pub fn square_free_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g)
    }

    /// Yun's square-free decomposition: returns `(a_i, i)` with
    /// `self = c * prod a_i^i`, each `a_i` square-free, monic, nonconstant.
    pub fn square_free_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0);
        let mut c = fp.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// True if `self = c * other` for a nonzero rational `c`, or both are zero.
    pub fn is_proportional(&self, other: &Poly) -> bool {
        match (self.leading_coeff(), other.leading_coeff()) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                self.coeffs.len() == other.coeffs.len()
                    && self
                        .coeffs
                        .iter()
                        .zip(&other.coeffs)
                        .all(|(x, y)| x * b == y * a)
            }
            _ => false,
        }
    }

    /// Parses the list format `"[1, 2/3, 0, -5]"` (low to high).
    pub fn parse_list(s: &str) -> Result<Poly> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [c0, c1, ...], got {s:?}")))?;
        if body.trim().is_empty() {
            return Ok(Poly::zero());
        }
        let coeffs = body
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    /// The list format, low to high.
    pub fn to_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

fn common_bound(a: &Poly, b: &Poly) -> Option<usize> {
    match (a.ambient_bound, b.ambient_bound) {
        (Some(x), Some(y)) if x == y => Some(x),
        _ => None,
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly {
            ambient_bound: common_bound(self, rhs),
            ..Poly::new(coeffs)
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly {
            ambient_bound: common_bound(self, rhs),
            ..Poly::new(coeffs)
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    #[test]
    fn derivative_examples() {
        assert_eq!(Poly::from_i64(&[1, 2, 3]).derivative(), Poly::from_i64(&[2, 6]));
        assert_eq!(Poly::zero().derivative(), Poly::zero());
        assert_eq!(Poly::from_i64(&[0, 0, 0, 1]).derivative(), Poly::from_i64(&[0, 0, 3]));
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_roots(&[int(1), int(2), int(2)]);
        let b = Poly::from_roots(&[int(2), int(3)]);
        assert_eq!(a.gcd(&b), Poly::from_roots(&[int(2)]));
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn square_free() {
        let p = &Poly::from_roots(&[int(1), int(1), int(1), frac(1, 2)]).scale(&int(7));
        assert_eq!(p.square_free_part().monic(), Poly::from_roots(&[int(1), frac(1, 2)]));
        let dec = p.square_free_decomposition();
        assert_eq!(
            dec,
            vec![
                (Poly::from_roots(&[frac(1, 2)]), 1),
                (Poly::from_roots(&[int(1)]), 3)
            ]
        );
    }

    #[test]
    fn display_and_parse() {
        let p = Poly::parse_list("[1, 2/3, 0, -5]").unwrap();
        assert_eq!(p.to_string(), "1 + 2/3x - 5x^3");
        assert_eq!(Poly::parse_list(&p.to_list_string()).unwrap(), p);
        assert_eq!(Poly::from_i64(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn bound_is_checked() {
        assert!(Poly::with_bound(vec![int(1), int(1)], 0).is_err());
        let p = Poly::with_bound(vec![int(1), int(1)], 3).unwrap();
        assert_eq!(p.infinity_multiplicity(), Some(2));
    }

    #[test]
    fn proportional() {
        let p = Poly::from_i64(&[1, 2]);
        assert!(p.is_proportional(&p.scale(&frac(-3, 2))));
        assert!(!p.is_proportional(&Poly::from_i64(&[1, 3])));
        assert!(!p.is_proportional(&Poly::zero()));
    }
}
