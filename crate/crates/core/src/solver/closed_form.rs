//! Closed forms for small cases: the number `d_{k,n}` of solutions, and the
//! two elements of `Gr(2, 4)` with `Wr(V) = prod (1 + r_i x)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{factorial, to_f64};
use crate::exact::Rational;
use crate::subsets::Subset;

/// `d_{k,n} = 1! 2! ... (k-1)! / ((n-k)! ... (n-1)!) * (k(n-k))!`.
pub fn d_count(k: usize, n: usize) -> BigInt {
    assert!(k <= n, "k must not exceed n");
    let num = (1..k as u64).fold(BigInt::one(), |acc, i| acc * factorial(i)) * factorial((k * (n - k)) as u64);
    let den = ((n - k) as u64..n as u64).fold(BigInt::one(), |acc, i| acc * factorial(i));
    num / den
}

/// Elementary symmetric polynomials `e_1, ..., e_4`.
pub fn elementary_symmetric(r: &[Rational; 4]) -> [Rational; 4] {
    let mut e = [Rational::one(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
    for x in r {
        for j in (1..5).rev() {
            e[j] = &e[j] + &e[j - 1] * x;
        }
    }
    [e[1].clone(), e[2].clone(), e[3].clone(), e[4].clone()]
}

/// `κ = e_2^2 - 3 e_1 e_3 + 12 e_4`.
pub fn kappa(r: &[Rational; 4]) -> Rational {
    let [e1, e2, e3, e4] = elementary_symmetric(r);
    &e2 * &e2 - Rational::from_integer(3.into()) * &e1 * &e3 + Rational::from_integer(12.into()) * &e4
}

/// `κ` as half a sum of squares of root differences.
pub fn kappa_sum_of_squares(r: &[Rational; 4]) -> Rational {
    let sq = |a: usize, b: usize, c: usize, d: usize| {
        let x = (&r[a] - &r[b]) * (&r[c] - &r[d]);
        &x * &x
    };
    (sq(0, 1, 2, 3) + sq(0, 2, 1, 3) + sq(0, 3, 1, 2)) / Rational::from_integer(2.into())
}

/// `e_1 e_3 > 4 e_4`, the total positivity criterion for both solutions.
pub fn gr24_tp_criterion(r: &[Rational; 4]) -> bool {
    let [e1, _, e3, e4] = elementary_symmetric(r);
    &e1 * &e3 > Rational::from_integer(4.into()) * e4
}

#[derive(Clone, Debug)]
pub struct Gr24ClosedForm {
    pub e: [Rational; 4],
    pub kappa: Rational,
    /// Plücker vectors in lex order, `Δ_12 = 1`, for the two signs of `√κ`.
    pub solutions: [Vec<(Subset, f64)>; 2],
}

/// The two solutions `Δ_12 = 1, Δ_13 = e_1/2, Δ_14 = (e_2 ± √κ)/6,
/// Δ_23 = (e_2 ∓ √κ)/2, Δ_24 = e_3/2, Δ_34 = e_4`.
///
/// Valid for any nonzero `r_i`; both solutions are totally positive when all
/// `r_i > 0`.
pub fn gr24_closed_form(r: &[Rational; 4]) -> Result<Gr24ClosedForm> {
    if r.iter().any(Zero::is_zero) {
        return Err(Error::InvalidInput("roots of 1 + r x need r nonzero".into()));
    }
    let e = elementary_symmetric(r);
    let kappa = kappa(r);
    if kappa.is_negative() {
        return Err(Error::InvalidInput("κ < 0 for real input".into()));
    }
    let sq = to_f64(&kappa).sqrt();
    let [e1, e2, e3, e4] = e.clone().map(|v| to_f64(&v));
    let make = |s: f64| {
        vec![
            (vec![1, 2], 1.0),
            (vec![1, 3], e1 / 2.0),
            (vec![1, 4], (e2 + s * sq) / 6.0),
            (vec![2, 3], (e2 - s * sq) / 2.0),
            (vec![2, 4], e3 / 2.0),
            (vec![3, 4], e4),
        ]
    };
    Ok(Gr24ClosedForm {
        e,
        kappa,
        solutions: [make(1.0), make(-1.0)],
    })
}

/// Solver roots `ρ` of `Wr(V)` in monic form correspond to `r_i = -1/ρ_i`.
pub fn gr24_from_wronskian_roots(roots: &[Rational; 4]) -> Result<Gr24ClosedForm> {
    if roots.iter().any(Zero::is_zero) {
        return Err(Error::InvalidInput("a root at 0 has no 1 + r x form".into()));
    }
    let r = roots.clone().map(|q| -(Rational::one() / q));
    gr24_closed_form(&r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn counts() {
        assert_eq!(d_count(2, 4), BigInt::from(2));
        assert_eq!(d_count(2, 5), BigInt::from(5));
        assert_eq!(d_count(3, 5), BigInt::from(5));
        assert_eq!(d_count(3, 6), BigInt::from(42));
        assert_eq!(d_count(2, 6), BigInt::from(14));
        for n in 1..8 {
            assert_eq!(d_count(1, n), BigInt::one());
            assert_eq!(d_count(n - 1, n), BigInt::one());
        }
    }

    #[test]
    fn closed_form_examples() {
        let ones = [int(1), int(1), int(1), int(1)];
        let c = gr24_closed_form(&ones).unwrap();
        assert_eq!(c.kappa, int(0));
        assert_eq!(c.solutions[0], c.solutions[1]);
        assert_eq!(c.solutions[0][2].1, 1.0);
        assert_eq!(c.solutions[0][3].1, 3.0);

        let r = [int(1), int(2), int(3), int(4)];
        let c = gr24_closed_form(&r).unwrap();
        assert_eq!(c.e, [int(10), int(35), int(50), int(24)]);
        assert_eq!(c.kappa, int(13));
        assert_eq!(kappa_sum_of_squares(&r), int(13));
        assert!(gr24_tp_criterion(&r));
        for s in &c.solutions {
            assert!(s.iter().all(|(_, v)| *v > 0.0));
        }
    }
}
