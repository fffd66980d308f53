//! Exact counting of distinct real roots in intervals of the projective line.

use std::fmt;

use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::rational::{format_rational, parse_rational, sign, Rational};
use crate::error::{Error, Result};

/// One end of an interval. On the left `Infinite` means `-inf`, on the
/// right `+inf`; both name the single point at infinity of P^1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Infinite,
    Finite(Rational),
}

impl Endpoint {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Endpoint::Finite(q) => Some(q),
            Endpoint::Infinite => None,
        }
    }
}

/// An interval of the real projective line that does not wrap around
/// infinity. Open and closed ends are explicit; a closed infinite end means
/// the point at infinity belongs to the interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjInterval {
    lo: Endpoint,
    hi: Endpoint,
    lo_closed: bool,
    hi_closed: bool,
    includes_infinity_point: bool,
}

impl ProjInterval {
    pub fn new(lo: Endpoint, lo_closed: bool, hi: Endpoint, hi_closed: bool) -> Result<Self> {
        if let (Endpoint::Finite(a), Endpoint::Finite(b)) = (&lo, &hi) {
            if a > b {
                return Err(Error::InvalidInterval(format!(
                    "lower end {} exceeds upper end {}",
                    format_rational(a),
                    format_rational(b)
                )));
            }
            if a == b && !(lo_closed && hi_closed) {
                return Err(Error::InvalidInterval("empty degenerate interval".into()));
            }
        }
        let includes_infinity_point = (lo == Endpoint::Infinite && lo_closed)
            || (hi == Endpoint::Infinite && hi_closed);
        Ok(ProjInterval {
            lo,
            hi,
            lo_closed,
            hi_closed,
            includes_infinity_point,
        })
    }

    pub fn open(a: Rational, b: Rational) -> Result<Self> {
        Self::new(Endpoint::Finite(a), false, Endpoint::Finite(b), false)
    }

    pub fn closed(a: Rational, b: Rational) -> Result<Self> {
        Self::new(Endpoint::Finite(a), true, Endpoint::Finite(b), true)
    }

    /// `(0, inf)`
    pub fn positive_open() -> Self {
        Self::new(Endpoint::Finite(Rational::zero()), false, Endpoint::Infinite, false).unwrap()
    }

    /// `[0, inf]`, including the point at infinity.
    pub fn nonnegative_closed() -> Self {
        Self::new(Endpoint::Finite(Rational::zero()), true, Endpoint::Infinite, true).unwrap()
    }

    /// `(-inf, 0)`
    pub fn negative_open() -> Self {
        Self::new(Endpoint::Infinite, false, Endpoint::Finite(Rational::zero()), false).unwrap()
    }

    pub fn real_line() -> Self {
        Self::new(Endpoint::Infinite, false, Endpoint::Infinite, false).unwrap()
    }

    pub fn point(a: Rational) -> Self {
        Self::closed(a.clone(), a).unwrap()
    }

    pub fn lo(&self) -> &Endpoint {
        &self.lo
    }

    pub fn hi(&self) -> &Endpoint {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn includes_infinity_point(&self) -> bool {
        self.includes_infinity_point
    }

    /// Membership of a finite point.
    pub fn contains(&self, x: &Rational) -> bool {
        let above = match &self.lo {
            Endpoint::Infinite => true,
            Endpoint::Finite(a) => x > a || (self.lo_closed && x == a),
        };
        let below = match &self.hi {
            Endpoint::Infinite => true,
            Endpoint::Finite(b) => x < b || (self.hi_closed && x == b),
        };
        above && below
    }

    /// True if the intervals share no point (including infinity).
    pub fn is_disjoint(&self, other: &ProjInterval) -> bool {
        if self.includes_infinity_point && other.includes_infinity_point {
            return false;
        }
        // Order so that `a` starts no later than `b`.
        let starts_before = |x: &ProjInterval, y: &ProjInterval| match (&x.lo, &y.lo) {
            (Endpoint::Infinite, _) => true,
            (_, Endpoint::Infinite) => false,
            (Endpoint::Finite(p), Endpoint::Finite(q)) => p <= q,
        };
        let (a, b) = if starts_before(self, other) {
            (self, other)
        } else {
            (other, self)
        };
        match (&a.hi, &b.lo) {
            (Endpoint::Infinite, _) => false,
            (Endpoint::Finite(_), Endpoint::Infinite) => false,
            (Endpoint::Finite(e), Endpoint::Finite(s)) => e < s || (e == s && !(a.hi_closed && b.lo_closed)),
        }
    }

    /// True if this interval lies inside `other`.
    pub fn is_subset_of(&self, other: &ProjInterval) -> bool {
        if self.includes_infinity_point && !other.includes_infinity_point {
            return false;
        }
        let lo_ok = match (&other.lo, &self.lo) {
            (Endpoint::Infinite, _) => true,
            (Endpoint::Finite(_), Endpoint::Infinite) => false,
            (Endpoint::Finite(o), Endpoint::Finite(s)) => s > o || (s == o && (other.lo_closed || !self.lo_closed)),
        };
        let hi_ok = match (&other.hi, &self.hi) {
            (Endpoint::Infinite, _) => true,
            (Endpoint::Finite(_), Endpoint::Infinite) => false,
            (Endpoint::Finite(o), Endpoint::Finite(s)) => s < o || (s == o && (other.hi_closed || !self.hi_closed)),
        };
        lo_ok && hi_ok
    }

    /// Parses bracket notation such as `"(0,inf]"`, `"[-1, 1)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not an interval: {s:?}"));
        let lo_closed = match s.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(bad()),
        };
        let hi_closed = match s.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(bad()),
        };
        let (a, b) = s[1..s.len() - 1].split_once(',').ok_or_else(bad)?;
        let end = |t: &str| -> Result<Endpoint> {
            match t.trim() {
                "inf" | "+inf" | "-inf" | "∞" | "-∞" => Ok(Endpoint::Infinite),
                other => parse_rational(other).map(Endpoint::Finite),
            }
        };
        Self::new(end(a)?, lo_closed, end(b)?, hi_closed)
    }

    /// The interval `{-x : x in self}`; infinity is fixed.
    pub fn negated(&self) -> ProjInterval {
        let neg = |e: &Endpoint| match e {
            Endpoint::Infinite => Endpoint::Infinite,
            Endpoint::Finite(q) => Endpoint::Finite(-q.clone()),
        };
        ProjInterval::new(neg(&self.hi), self.hi_closed, neg(&self.lo), self.lo_closed).unwrap()
    }
}

impl fmt::Display for ProjInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = match &self.lo {
            Endpoint::Infinite => "-inf".to_string(),
            Endpoint::Finite(q) => format_rational(q),
        };
        let hi = match &self.hi {
            Endpoint::Infinite => "inf".to_string(),
            Endpoint::Finite(q) => format_rational(q),
        };
        write!(
            f,
            "{}{lo}, {hi}{}",
            if self.lo_closed { '[' } else { '(' },
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// Sturm chain with each member rescaled to a primitive integer polynomial.
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.primitive_positive()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive_positive());
    loop {
        let n = chain.len();
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        chain.push((-&r).primitive_positive());
    }
    chain
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[Poly], x: &Endpoint, at_plus: bool) -> usize {
    match x {
        Endpoint::Finite(q) => sign_variations(chain.iter().map(|p| sign(&p.eval(q)))),
        Endpoint::Infinite => sign_variations(chain.iter().map(|p| {
            let lc = sign(p.leading_coeff().unwrap());
            let odd = p.degree().unwrap() % 2 == 1;
            if !at_plus && odd {
                -lc
            } else {
                lc
            }
        })),
    }
}

/// Number of distinct real roots of `p` in `interval`.
///
/// Endpoints count only when closed. If the interval contains the point at
/// infinity, it counts as one more root when `deg p < expected_degree`;
/// when `expected_degree` is `None` the polynomial's ambient bound is used.
pub fn sturm_root_count(
    p: &Poly,
    interval: &ProjInterval,
    expected_degree: Option<usize>,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut count = 0;
    let deg = p.degree().unwrap();
    if interval.includes_infinity_point() {
        if let Some(e) = expected_degree.or(p.ambient_bound()) {
            if deg < e {
                count += 1;
            }
        }
    }
    let mut q = p.square_free_part();
    // An endpoint root is handled exactly and divided out so the Sturm
    // count below runs over an interval whose ends are not roots.
    for (end, closed) in [(&interval.lo, interval.lo_closed), (&interval.hi, interval.hi_closed)] {
        if let Endpoint::Finite(e) = end {
            if q.eval(e).is_zero() {
                if closed {
                    count += 1;
                }
                q = q.exact_div(&Poly::linear_factor(e));
            }
        }
    }
    if interval.lo == interval.hi && interval.lo != Endpoint::Infinite {
        return Ok(count);
    }
    if q.degree().unwrap_or(0) == 0 {
        return Ok(count);
    }
    let chain = sturm_chain(&q);
    let va = variations_at(&chain, &interval.lo, false);
    let vb = variations_at(&chain, &interval.hi, true);
    Ok(count + va - vb)
}

/// Number of sign alternations after deleting zeros.
pub fn descartes_sign_changes(seq: &[Rational]) -> usize {
    sign_variations(seq.iter().map(|q| if q.is_zero() { 0 } else if q.is_positive() { 1 } else { -1 }))
}

/// Number of real roots of `p` in `interval` counted with multiplicity,
/// including the multiplicity `expected_degree - deg p` at infinity when the
/// interval contains it.
pub fn root_count_with_multiplicity(
    p: &Poly,
    interval: &ProjInterval,
    expected_degree: Option<usize>,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut count = 0;
    if interval.includes_infinity_point() {
        if let Some(e) = expected_degree.or(p.ambient_bound()) {
            count += e.saturating_sub(p.degree().unwrap());
        }
    }
    for (factor, mult) in p.square_free_decomposition() {
        count += mult * sturm_root_count(&factor, interval, Some(0))?;
    }
    Ok(count)
}
