//! Dense matrices over a prime field GF(p).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::{is_prime, Residue};

/// A row-major matrix with entries in `[0, p)`, `p` prime.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    modulus: R,
    entries: Vec<R>,
}

/// Result of Gauss–Jordan elimination.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rref<R> {
    pub matrix: Matrix<R>,
    /// 0-based pivot columns, strictly increasing.
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<R: Residue> Matrix<R> {
    /// Validates the modulus and every entry.
    pub fn new(rows: usize, cols: usize, modulus: R, entries: Vec<R>) -> Result<Self> {
        let p = modulus.to_u64().ok_or(Error::Overflow("modulus"))?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|&e| e >= modulus) {
            return Err(Error::EntryOutOfRange {
                row: pos / cols.max(1),
                col: pos % cols.max(1),
                value: entries[pos].to_u64().unwrap_or(u64::MAX),
                modulus: p,
            });
        }
        Ok(Self {
            rows,
            cols,
            modulus,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize, modulus: R) -> Result<Self> {
        Self::new(rows, cols, modulus, vec![R::zero(); rows * cols])
    }

    pub fn identity(size: usize, modulus: R) -> Result<Self> {
        let mut m = Self::zeros(size, size, modulus)?;
        for i in 0..size {
            m.entries[i * size + i] = R::one();
        }
        Ok(m)
    }

    /// Builds a matrix from nested rows of small integers, reducing nothing:
    /// every entry must already be a residue.
    pub fn from_rows(rows: &[Vec<u64>], modulus: R) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for &v in row {
                entries.push(R::from_u64(v).ok_or(Error::EntryOutOfRange {
                    row: r,
                    col: 0,
                    value: v,
                    modulus: modulus.to_u64().unwrap_or(0),
                })?);
            }
        }
        Self::new(rows.len(), cols, modulus, entries)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn modulus(&self) -> R {
        self.modulus
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> R {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: R) {
        assert!(v < self.modulus, "entry is not a residue");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[R] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<R> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<R>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    /// Sorted column list; two matrices with equal multisets of columns
    /// describe the same projective system up to coordinate permutation.
    pub fn column_multiset(&self) -> Vec<Vec<R>> {
        let mut cols = self.columns();
        cols.sort();
        cols
    }

    pub fn has_zero_column(&self) -> bool {
        (0..self.cols).any(|c| (0..self.rows).all(|r| self.get(r, c).is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            modulus: self.modulus,
            entries,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows || self.modulus != rhs.modulus {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let p = self.modulus;
        let mut out = Self::zeros(self.rows, rhs.cols, p)?;
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = R::zero();
                for l in 0..self.cols {
                    acc = acc.add_mod(self.get(i, l).mul_mod(rhs.get(l, j), p), p);
                }
                out.entries[i * rhs.cols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Gauss–Jordan elimination to reduced row echelon form.
    pub fn rref(&self) -> Rref<R> {
        let p = self.modulus;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = m.get(pivot_row, col).inv_mod(p);
            for c in 0..m.cols {
                let v = m.get(pivot_row, c).mul_mod(inv, p);
                m.entries[pivot_row * m.cols + c] = v;
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == pivot_row || factor.is_zero() {
                    continue;
                }
                for c in 0..m.cols {
                    let v = m
                        .get(r, c)
                        .sub_mod(factor.mul_mod(m.get(pivot_row, c), p), p);
                    m.entries[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Determinant of a square matrix: cofactor expansion up to 4x4,
    /// elimination beyond.
    pub fn determinant(&self) -> Result<R> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows <= 4 {
            let idx: Vec<usize> = (0..self.rows).collect();
            return Ok(self.cofactor_det(&idx, &idx));
        }
        Ok(self.elimination_det())
    }

    fn cofactor_det(&self, rows: &[usize], cols: &[usize]) -> R {
        let p = self.modulus;
        match rows.len() {
            0 => R::one(),
            1 => self.get(rows[0], cols[0]),
            _ => {
                let mut acc = R::zero();
                for (j, &c) in cols.iter().enumerate() {
                    let a = self.get(rows[0], c);
                    if a.is_zero() {
                        continue;
                    }
                    let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = a.mul_mod(self.cofactor_det(&rows[1..], &minor_cols), p);
                    acc = if j % 2 == 0 {
                        acc.add_mod(term, p)
                    } else {
                        acc.sub_mod(term, p)
                    };
                }
                acc
            }
        }
    }

    fn elimination_det(&self) -> R {
        let p = self.modulus;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = R::one();
        for col in 0..n {
            let Some(found) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return R::zero();
            };
            if found != col {
                m.swap_rows(found, col);
                det = det.neg_mod(p);
            }
            let pivot = m.get(col, col);
            det = det.mul_mod(pivot, p);
            let inv = pivot.inv_mod(p);
            for r in col + 1..n {
                let factor = m.get(r, col).mul_mod(inv, p);
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c).sub_mod(factor.mul_mod(m.get(col, c), p), p);
                    m.entries[r * n + c] = v;
                }
            }
        }
        det
    }

    /// Submatrix formed by all rows and the given columns.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                entries.push(self.get(r, c));
            }
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            modulus: self.modulus,
            entries,
        }
    }

    /// Renders the shared text format: `k n p` then one line per row.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.rows, self.cols, self.modulus);
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Parses the shared text format. Blank lines and `#` comments are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let dims: Vec<u64> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad header token `{t}`")))
            })
            .collect::<Result<_>>()?;
        let [rows, cols, p] = dims[..] else {
            return Err(Error::Parse(format!("header `{header}` is not `k n p`")));
        };
        let (rows, cols) = (rows as usize, cols as usize);
        let modulus = R::from_u64(p).ok_or(Error::Overflow("modulus"))?;
        let mut data = Vec::with_capacity(rows);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {}", r + 1)))?;
            let row: Vec<u64> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad entry `{t}` in row {}", r + 1)))
                })
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {cols}",
                    r + 1,
                    row.len()
                )));
            }
            data.push(row);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing content `{extra}`")));
        }
        if rows == 0 {
            return Self::zeros(0, cols, modulus);
        }
        Self::from_rows(&data, modulus)
    }
}

/// Parity-check matrix of a full-row-rank generator.
///
/// Built from the RREF: one row per non-pivot column `j`, with a 1 at `j`
/// and the negated RREF entries of column `j` at the pivot positions.
pub fn parity_check_of<R: Residue>(generator: &Matrix<R>) -> Result<Matrix<R>> {
    let Rref {
        matrix: reduced,
        pivots,
        rank,
    } = generator.rref();
    if rank != generator.rows() {
        return Err(Error::NotFullRank {
            rank,
            rows: generator.rows(),
        });
    }
    let p = generator.modulus();
    let n = generator.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut h = Matrix::zeros(free.len(), n, p)?;
    for (hr, &j) in free.iter().enumerate() {
        h.set(hr, j, R::one());
        for (pr, &pc) in pivots.iter().enumerate() {
            h.set(hr, pc, reduced.get(pr, j).neg_mod(p));
        }
    }
    Ok(h)
}
