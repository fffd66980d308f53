use super::bareiss::bareiss_det;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Determinant of the `k x k` matrix whose `(i, j)` entry is the `(i-1)`-st
/// derivative of `fs[j]`, computed exactly by fraction-free elimination over
/// `Q[x]`. Zero exactly when the inputs are linearly dependent.
///
/// If the inputs live in `Q[x]_{<= n-1}`, the result carries the ambient
/// bound `k(n-k)`.
pub fn wronskian_det(fs: &[Poly]) -> Result<Poly> {
    let first = fs.first().ok_or(Error::EmptyInput)?;
    let bound = first.ambient_bound();
    if fs.iter().any(|f| f.ambient_bound() != bound) {
        return Err(Error::DimensionMismatch(
            "Wronskian inputs have different ambient bounds".into(),
        ));
    }
    let k = fs.len();
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(k);
    rows.push(fs.to_vec());
    for i in 1..k {
        let next = rows[i - 1].iter().map(Poly::derivative).collect();
        rows.push(next);
    }
    let w = bareiss_det(rows);
    match bound {
        Some(b) if k <= b + 1 => w.bounded(k * (b + 1 - k)),
        _ => Ok(w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn example_from_the_three_flag() {
        // f1 = 1 + a x + b x^2, f2 = x + c x^2 with a, b, c = 2, 3, 5
        let f1 = Poly::from_i64(&[1, 2, 3]);
        let f2 = Poly::from_i64(&[0, 1, 5]);
        // 1 + 2c x + (ac - b) x^2
        assert_eq!(wronskian_det(&[f1, f2]).unwrap(), Poly::from_i64(&[1, 10, 7]));
    }

    #[test]
    fn small_cases() {
        let f = Poly::from_i64(&[3, 0, 1]);
        assert_eq!(wronskian_det(std::slice::from_ref(&f)).unwrap(), f);
        let basis = [Poly::from_i64(&[1]), Poly::from_i64(&[0, 1]), Poly::from_i64(&[0, 0, 1])];
        assert_eq!(wronskian_det(&basis).unwrap(), Poly::constant(int(2)));
        assert!(wronskian_det(&[]).is_err());
    }

    #[test]
    fn dependent_inputs_give_zero() {
        let f = Poly::from_i64(&[1, 2]);
        assert!(wronskian_det(&[f.clone(), f.scale(&int(3))]).unwrap().is_zero());
    }

    #[test]
    fn bound_propagates() {
        let fs: Vec<Poly> = [[1, 1, 0, 0], [0, 1, 1, 1]]
            .iter()
            .map(|c| Poly::with_bound(c.iter().map(|&v| int(v)).collect(), 3).unwrap())
            .collect();
        assert_eq!(wronskian_det(&fs).unwrap().ambient_bound(), Some(4));
    }
}
