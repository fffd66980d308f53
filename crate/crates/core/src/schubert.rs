//! The rational normal curve, its osculating and secant flats, spaces of
//! polynomials with prescribed zeros, and intersection predicates.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{binomial, factorial, format_rational, parse_rational, pow};
use crate::exact::{ExactMatrix, Poly, ProjInterval, Rational};
use crate::grassmann::SubspaceRep;

/// A point of the real projective line. Infinity is a single point, printed
/// as `inf` and also parsed from `-inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjPoint {
    Finite(Rational),
    Infinity,
}

impl ProjPoint {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" | "-inf" | "∞" | "infinity" => Ok(ProjPoint::Infinity),
            t => parse_rational(t).map(ProjPoint::Finite),
        }
    }

    pub fn negated(&self) -> ProjPoint {
        match self {
            ProjPoint::Finite(x) => ProjPoint::Finite(-x),
            ProjPoint::Infinity => ProjPoint::Infinity,
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ProjPoint::Finite(x) => Some(x),
            ProjPoint::Infinity => None,
        }
    }

    pub fn in_interval(&self, interval: &ProjInterval) -> bool {
        match self {
            ProjPoint::Finite(x) => interval.contains(x),
            ProjPoint::Infinity => interval.includes_infinity_point(),
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(x) => f.write_str(&format_rational(x)),
            ProjPoint::Infinity => f.write_str("inf"),
        }
    }
}

/// Distinct points with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMultiset {
    entries: Vec<(ProjPoint, usize)>,
}

impl PointMultiset {
    pub fn new(entries: Vec<(ProjPoint, usize)>) -> Result<Self> {
        for (i, (p, m)) in entries.iter().enumerate() {
            if *m == 0 {
                return Err(Error::InvalidInput(format!("point {p} has multiplicity 0")));
            }
            if entries[..i].iter().any(|(q, _)| q == p) {
                return Err(Error::InvalidInput(format!("point {p} listed twice")));
            }
        }
        Ok(PointMultiset { entries })
    }

    /// Gathers repeated values into multiplicities, keeping first-seen order.
    pub fn from_points(points: &[ProjPoint]) -> Self {
        let mut entries: Vec<(ProjPoint, usize)> = Vec::new();
        for p in points {
            match entries.iter_mut().find(|(q, _)| q == p) {
                Some((_, m)) => *m += 1,
                None => entries.push((p.clone(), 1)),
            }
        }
        PointMultiset { entries }
    }

    pub fn from_rationals(points: &[Rational]) -> Self {
        let pts: Vec<ProjPoint> = points.iter().cloned().map(ProjPoint::Finite).collect();
        Self::from_points(&pts)
    }

    /// Parses `"0^2, 1, inf"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut points = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (p, m) = parse_point_power(item)?;
            points.extend(std::iter::repeat_n(p, m));
        }
        Ok(Self::from_points(&points))
    }

    pub fn entries(&self) -> &[(ProjPoint, usize)] {
        &self.entries
    }

    /// Total multiplicity.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn has_repeats(&self) -> bool {
        self.entries.iter().any(|(_, m)| *m > 1)
    }

    pub fn infinity_multiplicity(&self) -> usize {
        self.entries
            .iter()
            .filter(|(p, _)| *p == ProjPoint::Infinity)
            .map(|(_, m)| m)
            .sum()
    }

    /// Points listed with repetition.
    pub fn expanded(&self) -> Vec<ProjPoint> {
        self.entries
            .iter()
            .flat_map(|(p, m)| std::iter::repeat_n(p.clone(), *m))
            .collect()
    }

    /// `-X`: finite points negated, infinity fixed.
    pub fn negated(&self) -> PointMultiset {
        PointMultiset {
            entries: self.entries.iter().map(|(p, m)| (p.negated(), *m)).collect(),
        }
    }

    pub fn in_interval(&self, interval: &ProjInterval) -> bool {
        self.entries.iter().all(|(p, _)| p.in_interval(interval))
    }
}

impl fmt::Display for PointMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .entries
            .iter()
            .map(|(p, m)| if *m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect();
        f.write_str(&items.join(", "))
    }
}

/// Parses `"point"` or `"point^mult"`.
pub fn parse_point_power(item: &str) -> Result<(ProjPoint, usize)> {
    match item.rsplit_once('^') {
        Some((p, m)) => {
            let m: usize = m
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity in '{item}'")))?;
            if m == 0 {
                return Err(Error::Parse(format!("zero multiplicity in '{item}'")));
            }
            Ok((ProjPoint::parse(p)?, m))
        }
        None => Ok((ProjPoint::parse(item)?, 1)),
    }
}

/// `γ^{(j)}(x)` for `γ_i(x) = C(n-1, i-1) x^{n-i}`; at infinity the unit
/// vector `e_{j+1}`.
pub fn gamma_jet(n: usize, x: &ProjPoint, j: usize) -> Result<Vec<Rational>> {
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, bound: n - 1 });
    }
    let mut out = vec![Rational::zero(); n];
    match x {
        ProjPoint::Infinity => out[j] = Rational::one(),
        ProjPoint::Finite(x) => {
            for (i, entry) in out.iter_mut().enumerate() {
                let e = n - 1 - i;
                if e < j {
                    continue;
                }
                let c = binomial(n as u64 - 1, i as u64) * factorial(e as u64) / factorial((e - j) as u64);
                *entry = Rational::from_integer(c) * pow(x, e - j);
            }
        }
    }
    Ok(out)
}

/// The flat `γ_X` spanned by `γ(x), ..., γ^{(p-1)}(x)` over the points `x`
/// of multiplicity `p` in `X`.
pub fn rnc_span(n: usize, x: &PointMultiset) -> Result<SubspaceRep> {
    check_size(n, x)?;
    let mut cols = Vec::new();
    for (p, m) in x.entries() {
        for j in 0..*m {
            cols.push(gamma_jet(n, p, j)?);
        }
    }
    SubspaceRep::new(ExactMatrix::from_columns(n, &cols)?)
}

/// `Z_X`: polynomials of degree at most `n - 1` vanishing to order `p` at
/// each point of multiplicity `p`, a zero of order `p` at infinity meaning
/// degree at most `n - 1 - p`.
pub fn zeros_space(n: usize, x: &PointMultiset) -> Result<SubspaceRep> {
    check_size(n, x)?;
    let mut base = Poly::one();
    for (p, m) in x.entries() {
        if let ProjPoint::Finite(r) = p {
            base = &base * &Poly::linear_factor(r).pow(*m);
        }
    }
    let polys: Vec<Poly> = (0..n - x.size())
        .map(|j| &base * &Poly::monomial(Rational::one(), j))
        .collect();
    SubspaceRep::from_polys(n, &polys)
}

fn check_size(n: usize, x: &PointMultiset) -> Result<()> {
    if x.size() > n {
        return Err(Error::DimensionMismatch(format!(
            "multiset of size {} in dimension {n}",
            x.size()
        )));
    }
    Ok(())
}

/// `U ∩ W ≠ {0}`, decided by the exact rank of `[U | W]`.
pub fn intersects_nontrivially(u: &SubspaceRep, w: &SubspaceRep) -> Result<bool> {
    if u.n() != w.n() {
        return Err(Error::DimensionMismatch(format!("ambient dimensions {} and {}", u.n(), w.n())));
    }
    let rank = u.basis().hcat(w.basis())?.rank();
    Ok(u.k() + w.k() > rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn fin(v: i64) -> ProjPoint {
        ProjPoint::Finite(int(v))
    }

    #[test]
    fn jets() {
        let s = int(7);
        assert_eq!(gamma_jet(3, &ProjPoint::Finite(s), 0).unwrap(), vec![int(49), int(14), int(1)]);
        let ones: Vec<Rational> = [1, 4, 6, 4, 1].iter().map(|&v| int(v)).collect();
        assert_eq!(gamma_jet(5, &fin(1), 0).unwrap(), ones);
        let e2: Vec<Rational> = [0, 1, 0, 0, 0].iter().map(|&v| int(v)).collect();
        assert_eq!(gamma_jet(5, &ProjPoint::Infinity, 1).unwrap(), e2);
        assert!(gamma_jet(3, &fin(0), 3).is_err());
    }

    #[test]
    fn spans() {
        let x = PointMultiset::parse("0^2, 1").unwrap();
        let span = rnc_span(5, &x).unwrap();
        let expected = SubspaceRep::new(ExactMatrix::from_i64(&[
            &[0, 0, 1],
            &[0, 0, 4],
            &[0, 0, 6],
            &[0, 4, 4],
            &[1, 0, 1],
        ]))
        .unwrap();
        assert!(span.same_subspace(&expected));

        let origin = rnc_span(4, &PointMultiset::parse("0^3").unwrap()).unwrap();
        let tail = SubspaceRep::new(ExactMatrix::identity(4).select(&[0, 1, 2, 3], &[1, 2, 3])).unwrap();
        assert!(origin.same_subspace(&tail));

        let top = rnc_span(4, &PointMultiset::parse("inf^2").unwrap()).unwrap();
        let head = SubspaceRep::new(ExactMatrix::identity(4).leading_columns(2)).unwrap();
        assert!(top.same_subspace(&head));
    }

    #[test]
    fn zero_spaces() {
        let z = zeros_space(3, &PointMultiset::parse("0").unwrap()).unwrap();
        let expected = SubspaceRep::from_polys(3, &[Poly::from_i64(&[0, 1]), Poly::from_i64(&[0, 0, 1])]).unwrap();
        assert!(z.same_subspace(&expected));

        let z = zeros_space(5, &PointMultiset::parse("0^2, -1").unwrap()).unwrap();
        assert_eq!(z.k(), 2);
        for f in z.polys() {
            assert!(f.eval(&int(0)).is_zero() && f.derivative().eval(&int(0)).is_zero());
            assert!(f.eval(&int(-1)).is_zero());
        }

        let z = zeros_space(3, &PointMultiset::parse("inf").unwrap()).unwrap();
        let expected = SubspaceRep::from_polys(3, &[Poly::from_i64(&[1]), Poly::from_i64(&[0, 1])]).unwrap();
        assert!(z.same_subspace(&expected));
    }

    #[test]
    fn intersections() {
        let u = SubspaceRep::new(ExactMatrix::from_i64(&[&[1], &[2], &[3]])).unwrap();
        assert!(intersects_nontrivially(&u, &u).unwrap());
        let e = ExactMatrix::identity(4);
        let a = SubspaceRep::new(e.select(&[0, 1, 2, 3], &[0, 1])).unwrap();
        let b = SubspaceRep::new(e.select(&[0, 1, 2, 3], &[2, 3])).unwrap();
        assert!(!intersects_nontrivially(&a, &b).unwrap());
        let c = SubspaceRep::new(ExactMatrix::from_i64(&[&[1, 0], &[0, 0], &[0, 1], &[0, 0]])).unwrap();
        assert!(intersects_nontrivially(&a, &c).unwrap());
        assert!(intersects_nontrivially(&u, &a).is_err());
    }

    #[test]
    fn multiset_text() {
        let x = PointMultiset::parse("0^2, 1, inf").unwrap();
        assert_eq!(x.size(), 4);
        assert_eq!(x.infinity_multiplicity(), 1);
        assert_eq!(x.to_string(), "0^2, 1, inf");
        assert_eq!(x.negated().to_string(), "0^2, -1, inf");
        assert_eq!(PointMultiset::parse("-inf").unwrap().entries()[0].0, ProjPoint::Infinity);
        assert!(PointMultiset::parse("1^0").is_err());
        assert!(PointMultiset::new(vec![(fin(1), 1), (fin(1), 2)]).is_err());
    }
}
