//! Complex scalars for the Newton solver: machine precision for the search
//! phase and configurable binary precision for polishing.

use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_complex::Complex64;

use crate::exact::Rational;

pub type Float = FBig<HalfEven, 2>;

pub trait Scalar:
    Clone
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_parts(re: f64, im: f64, precision: usize) -> Self;
    fn from_rational(q: &Rational, precision: usize) -> Self;
    fn re_f64(&self) -> f64;
    fn im_f64(&self) -> f64;

    /// A constant given both exactly and as a double; machine-precision
    /// scalars take the double.
    fn from_exact(approx: f64, exact: &Rational, precision: usize) -> Self {
        let _ = approx;
        Self::from_rational(exact, precision)
    }

    fn zero(precision: usize) -> Self {
        Self::from_parts(0.0, 0.0, precision)
    }

    fn one(precision: usize) -> Self {
        Self::from_parts(1.0, 0.0, precision)
    }

    fn abs_f64(&self) -> f64 {
        self.re_f64().hypot(self.im_f64())
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re_f64(), self.im_f64())
    }
}

impl Scalar for Complex64 {
    fn from_parts(re: f64, im: f64, _precision: usize) -> Self {
        Complex64::new(re, im)
    }

    fn from_rational(q: &Rational, _precision: usize) -> Self {
        Complex64::new(crate::exact::rational::to_f64(q), 0.0)
    }

    fn from_exact(approx: f64, _exact: &Rational, _precision: usize) -> Self {
        Complex64::new(approx, 0.0)
    }

    fn re_f64(&self) -> f64 {
        self.re
    }

    fn im_f64(&self) -> f64 {
        self.im
    }

    fn abs_f64(&self) -> f64 {
        self.norm()
    }
}

/// A complex number with both parts at a fixed binary precision.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: Float,
    pub im: Float,
}

fn float_from_f64(v: f64, precision: usize) -> Float {
    Float::try_from(v)
        .expect("finite value")
        .with_precision(precision)
        .value()
}

fn float_from_int(v: &num_bigint::BigInt, precision: usize) -> Float {
    let i = IBig::from_str(&v.to_string()).expect("decimal integer");
    Float::from(i).with_precision(precision).value()
}

impl BigComplex {
    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn from_c64(z: Complex64, precision: usize) -> Self {
        Self::from_parts(z.re, z.im, precision)
    }

    pub fn with_precision(&self, precision: usize) -> Self {
        BigComplex {
            re: self.re.clone().with_precision(precision).value(),
            im: self.im.clone().with_precision(precision).value(),
        }
    }
}

impl Scalar for BigComplex {
    fn from_parts(re: f64, im: f64, precision: usize) -> Self {
        BigComplex {
            re: float_from_f64(re, precision),
            im: float_from_f64(im, precision),
        }
    }

    fn from_rational(q: &Rational, precision: usize) -> Self {
        let re = float_from_int(q.numer(), precision) / float_from_int(q.denom(), precision);
        BigComplex {
            re,
            im: float_from_f64(0.0, precision),
        }
    }

    fn re_f64(&self) -> f64 {
        self.re.to_f64().value()
    }

    fn im_f64(&self) -> f64 {
        self.im.to_f64().value()
    }
}

impl Add for BigComplex {
    type Output = BigComplex;

    fn add(self, rhs: Self) -> Self {
        BigComplex {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for BigComplex {
    type Output = BigComplex;

    fn sub(self, rhs: Self) -> Self {
        BigComplex {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for BigComplex {
    type Output = BigComplex;

    fn mul(self, rhs: Self) -> Self {
        BigComplex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for BigComplex {
    type Output = BigComplex;

    fn div(self, rhs: Self) -> Self {
        let den = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        BigComplex {
            re: (&self.re * &rhs.re + &self.im * &rhs.im) / &den,
            im: (&self.im * &rhs.re - &self.re * &rhs.im) / &den,
        }
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;

    fn neg(self) -> Self {
        BigComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn big_arithmetic() {
        let a = BigComplex::from_parts(1.5, -2.0, 128);
        let b = BigComplex::from_parts(0.25, 3.0, 128);
        let q = (a.clone() * b.clone()) / b.clone();
        assert!((q - a).abs_f64() < 1e-35);
        let third = BigComplex::from_rational(&frac(1, 3), 200);
        let back = third * BigComplex::from_parts(3.0, 0.0, 200) - BigComplex::one(200);
        assert!(back.abs_f64() < 1e-55);
        assert_eq!(BigComplex::from_parts(2.0, 0.0, 64).precision(), 64);
    }
}
