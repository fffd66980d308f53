use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bareiss::bareiss_det;
use super::poly::Poly;
use super::rational::{denominator_lcm, format_rational, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Columns read as polynomials `a_1 + a_2 x + ... + a_n x^{n-1}`.
    pub fn column_polys(&self) -> Vec<Poly> {
        let bound = self.rows.saturating_sub(1);
        self.columns()
            .into_iter()
            .map(|c| Poly::with_bound(c, bound).expect("length-n column fits degree n-1"))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(l, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// First `k` columns.
    pub fn leading_columns(&self, k: usize) -> ExactMatrix {
        let cols: Vec<usize> = (0..k).collect();
        self.select(&(0..self.rows).collect::<Vec<_>>(), &cols)
    }

    /// Submatrix with zero-based row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        ExactMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "row counts {} and {} differ",
                self.rows, other.rows
            )));
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Exact determinant: rows are cleared to integers, then Bareiss.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut scale = BigInt::one();
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = denominator_lcm(row);
                let lr = Rational::from_integer(l.clone());
                scale *= l;
                row.iter().map(|v| (v * &lr).to_integer()).collect()
            })
            .collect();
        Ok(Rational::new(bareiss_det(rows), scale))
    }

    /// `det(A_{I,J})` for one-based row set `I` and column set `J`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Rational> {
        if rows.len() != cols.len() {
            return Err(Error::DimensionMismatch(format!(
                "|I| = {} but |J| = {}",
                rows.len(),
                cols.len()
            )));
        }
        let to_zero_based = |set: &[usize], bound: usize| -> Result<Vec<usize>> {
            set.iter()
                .map(|&i| {
                    if i == 0 || i > bound {
                        Err(Error::IndexOutOfRange { index: i, bound })
                    } else {
                        Ok(i - 1)
                    }
                })
                .collect()
        };
        let r = to_zero_based(rows, self.rows)?;
        let c = to_zero_based(cols, self.cols)?;
        self.select(&r, &c).det()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.get(p, j).clone();
                    let b = m.get(r, j).clone();
                    m.set(p, j, b);
                    m.set(r, j, a);
                }
            }
            let inv = Rational::one() / m.get(r, c);
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}` as the columns of a `cols x d` matrix,
    /// one column per free variable of the RREF.
    pub fn nullspace(&self) -> ExactMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = ExactMatrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, Rational::one());
            for (row, &p) in pivots.iter().enumerate() {
                basis.set(p, k, -r.get(row, f).clone());
            }
        }
        basis
    }

    /// Solves `self * x = 0` for one nonzero `x`, if the kernel is nontrivial.
    pub fn kernel_vector(&self) -> Option<Vec<Rational>> {
        let n = self.nullspace();
        (n.cols() > 0).then(|| n.column(0))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Determinant of a square matrix.
pub fn det_exact(m: &ExactMatrix) -> Result<Rational> {
    m.det()
}
