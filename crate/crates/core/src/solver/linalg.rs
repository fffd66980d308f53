use super::scalar::Scalar;

/// Division-free determinant by expansion over column subsets,
/// `O(s 2^s)` for an `s x s` matrix. Stable at singular points, where
/// elimination would divide by tiny pivots.
pub fn det<S: Scalar>(m: &[Vec<S>], precision: usize) -> S {
    let s = m.len();
    if s == 0 {
        return S::one(precision);
    }
    let full = (1usize << s) - 1;
    let mut dp: Vec<Option<S>> = vec![None; 1 << s];
    dp[0] = Some(S::one(precision));
    for mask in 0..full {
        let Some(acc) = dp[mask].clone() else { continue };
        let row = mask.count_ones() as usize;
        for (c, entry) in m[row].iter().enumerate().take(s) {
            if mask & (1 << c) != 0 {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let term = acc.clone() * entry.clone();
            let term = if above % 2 == 1 { -term } else { term };
            let next = mask | (1 << c);
            dp[next] = Some(match dp[next].take() {
                Some(v) => v + term,
                None => term,
            });
        }
    }
    dp[full].take().expect("full mask reached")
}

/// Cofactor `(-1)^{i+j} det(M without row i and column j)`.
pub fn cofactor<S: Scalar>(m: &[Vec<S>], i: usize, j: usize, precision: usize) -> S {
    let minor: Vec<Vec<S>> = m
        .iter()
        .enumerate()
        .filter(|(r, _)| *r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != j)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect();
    let d = det(&minor, precision);
    if (i + j) % 2 == 1 {
        -d
    } else {
        d
    }
}

/// Solves `a x = b` by Gaussian elimination with partial pivoting; `None`
/// when a pivot vanishes.
pub fn solve<S: Scalar>(mut a: Vec<Vec<S>>, mut b: Vec<S>) -> Option<Vec<S>> {
    let n = b.len();
    for col in 0..n {
        let (p, best) = (col..n)
            .map(|r| (r, a[r][col].abs_f64()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if !(best > 0.0 && best.is_finite()) {
            return None;
        }
        a.swap(col, p);
        b.swap(col, p);
        for r in col + 1..n {
            let f = a[r][col].clone() / a[col][col].clone();
            let (top, rest) = a.split_at_mut(r);
            for (x, y) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = x.clone() - f.clone() * y.clone();
            }
            let v = b[r].clone() - f * b[col].clone();
            b[r] = v;
        }
    }
    let mut x: Vec<Option<S>> = vec![None; n];
    for r in (0..n).rev() {
        let mut acc = b[r].clone();
        for c in r + 1..n {
            acc = acc - a[r][c].clone() * x[c].clone().expect("solved");
        }
        x[r] = Some(acc / a[r][r].clone());
    }
    Some(x.into_iter().map(|v| v.expect("solved")).collect())
}
