//! Dense square matrices over [`GoldenExt`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{parse_ext, GoldenExt, GoldenScalar};

/// Square matrix with exact entries, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<GoldenExt>,
}

impl ExactMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![GoldenExt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                GoldenExt::one()
            } else {
                GoldenExt::zero()
            }
        })
    }

    /// Antidiagonal ones.
    pub fn exchange(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i + j + 1 == n {
                GoldenExt::one()
            } else {
                GoldenExt::zero()
            }
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> GoldenExt) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<GoldenExt>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotSquare {
                rows: 0,
                bad_row: 0,
                cols: 0,
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    bad_row: i,
                    cols: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GoldenExt::integer(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GoldenExt {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[GoldenExt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GoldenExt]> {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> &[GoldenExt] {
        &self.entries
    }

    pub fn set(&mut self, i: usize, j: usize, x: GoldenExt) {
        self.entries[i * self.n + j] = x;
    }

    pub fn map(&self, f: impl FnMut(&GoldenExt) -> GoldenExt) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &GoldenExt) -> Self {
        self.map(|x| x * s)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Gauss–Jordan inverse; the pivot is the first exactly-nonzero entry
    /// at or below the diagonal.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::Singular { column: col })?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p_inv = a.get(col, col).checked_inv()?;
            a.scale_row(col, &p_inv);
            inv.scale_row(col, &p_inv);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                a.axpy_row(r, col, &factor);
                inv.axpy_row(r, col, &factor);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        for j in 0..self.n {
            self.entries.swap(r1 * self.n + j, r2 * self.n + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &GoldenExt) {
        for j in 0..self.n {
            let idx = r * self.n + j;
            self.entries[idx] = &self.entries[idx] * s;
        }
    }

    /// row[target] -= factor * row[source]
    fn axpy_row(&mut self, target: usize, source: usize, factor: &GoldenExt) {
        for j in 0..self.n {
            let s = &self.entries[source * self.n + j] * factor;
            let idx = target * self.n + j;
            self.entries[idx] = &self.entries[idx] - &s;
        }
    }

    /// Integer power by repeated squaring; negative `k` inverts first.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.n);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> GoldenExt {
        (0..self.n).fold(GoldenExt::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Determinant by exact elimination (first nonzero pivot).
    pub fn det(&self) -> GoldenExt {
        let n = self.n;
        let mut a = self.clone();
        let mut det = GoldenExt::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return GoldenExt::zero();
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -&det;
            }
            let p = a.get(col, col).clone();
            det = &det * &p;
            let p_inv = p.checked_inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = a.get(r, col) * &p_inv;
                if factor.is_zero() {
                    continue;
                }
                a.axpy_row(r, col, &factor);
            }
        }
        det
    }

    /// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier.
    ///
    /// `M₀ = 0`, `c_n = 1`; `M_k = A·M_{k−1} + c_{n−k+1}·I` and
    /// `c_{n−k} = −tr(A·M_k)/k`. Only exact division by integers occurs.
    pub fn char_poly(&self) -> CharPoly {
        let n = self.n;
        // coeffs[i] is the coefficient of x^(n−i)
        let mut coeffs = vec![GoldenExt::one()];
        let mut m = Self::zeros(n);
        for k in 1..=n {
            let c_prev = coeffs[k - 1].clone();
            m = self.mul(&m).expect("same dimension");
            for i in 0..n {
                let idx = i * n + i;
                m.entries[idx] = &m.entries[idx] + &c_prev;
            }
            let am = self.mul(&m).expect("same dimension");
            let inv_k = GoldenExt::from_scalar(GoldenScalar::from_rational(BigRational::new(
                BigInt::from(-1),
                BigInt::from(k as i64),
            )));
            coeffs.push(&am.trace() * &inv_k);
        }
        CharPoly { coeffs }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Symmetric about the antidiagonal.
    pub fn is_persymmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == self.get(n - 1 - j, n - 1 - i)))
    }

    /// `AᵀA = I`; with real entries this is unitarity.
    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self).map(|p| p.is_identity()).unwrap_or(false)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn predicates(&self) -> Predicates {
        let trace = self.trace();
        Predicates {
            is_traceless: trace.is_zero(),
            trace,
            det: self.det(),
            is_symmetric: self.is_symmetric(),
            is_orthogonal: self.is_orthogonal(),
        }
    }

    /// First entry where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((0, 0));
        }
        (0..self.n * self.n)
            .find(|&idx| self.entries[idx] != other.entries[idx])
            .map(|idx| (idx / self.n, idx % self.n))
    }

    /// All entries in Q(√5)?
    pub fn is_scalar_valued(&self) -> bool {
        self.entries.iter().all(|x| x.v().is_zero())
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(|r| r.iter().map(GoldenExt::to_f64).collect()).collect()
    }

    /// Parse the matrix literal format: one row per line, entries separated
    /// by `;`. Blank lines and lines starting with `#` are ignored.
    pub fn parse_literal(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .trim_end_matches(';')
                .split(';')
                .map(|tok| {
                    parse_ext(tok.trim()).map_err(|e| match e {
                        Error::Parse(msg) => Error::Parse(format!("line {}: {msg}", lineno + 1)),
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::from_rows(rows)
    }

    /// Inverse of [`ExactMatrix::parse_literal`]; columns are padded so
    /// entries line up.
    pub fn to_literal(&self) -> String {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let mut widths = vec![0usize; self.n];
        for (idx, c) in cells.iter().enumerate() {
            let w = &mut widths[idx % self.n];
            *w = (*w).max(c.chars().count());
        }
        let mut out = String::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let c = &cells[i * self.n + j];
                if j > 0 {
                    out.push_str("; ");
                }
                out.push_str(c);
                if j + 1 < self.n {
                    let pad = widths[j] - c.chars().count();
                    out.extend(std::iter::repeat_n(' ', pad));
                }
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// Exact scalar invariants of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub trace: GoldenExt,
    pub det: GoldenExt,
    pub is_symmetric: bool,
    pub is_orthogonal: bool,
    pub is_traceless: bool,
}

/// Monic characteristic polynomial, coefficients in descending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<GoldenExt>,
}

impl CharPoly {
    pub fn new(coeffs: Vec<GoldenExt>) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GoldenExt::integer(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[GoldenExt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.first().is_some_and(GoldenExt::is_one)
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Coefficients as golden scalars, if none has a √φ part.
    pub fn scalar_coeffs(&self) -> Option<Vec<GoldenScalar>> {
        self.coeffs.iter().map(|c| c.as_scalar().cloned()).collect()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pow = n - i;
            let mono = match pow {
                0 => String::new(),
                1 => "x".to_string(),
                p => format!("x^{p}"),
            };
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() && pow > 0 {
                f.write_str(&mono)?;
            } else if pow == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}){mono}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Plain coefficient list for reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CharPolyReport {
    pub coefficients: Vec<String>,
    pub palindromic: bool,
}

impl From<&CharPoly> for CharPolyReport {
    fn from(cp: &CharPoly) -> Self {
        Self {
            coefficients: cp.coeffs.iter().map(ToString::to_string).collect(),
            palindromic: cp.is_palindromic(),
        }
    }
}
