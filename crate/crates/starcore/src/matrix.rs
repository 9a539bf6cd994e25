//! Dense matrices over the Gaussian rationals with the conjugate transpose as
//! involution.
//!
//! Everything here is exact: rank and reduced row echelon form use plain
//! Gauss-Jordan elimination with first-nonzero pivot selection and carry no
//! tolerance parameter anywhere. Matrices are immutable values; operations
//! return new matrices and are safe to use concurrently.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Range, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalar::{GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not idempotent: p^2 != p")]
    NotIdempotent,
}

/// Dense row-major matrix of Gaussian rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

/// `A = F * G` with `F` of full column rank `r` and `G` of full row rank `r`.
///
/// The zero matrix factors with `r = 0` and empty `F`, `G`, so downstream
/// inverse formulas degrade to the zero inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullRankFactorization {
    pub f: Matrix,
    pub g: Matrix,
    pub rank: usize,
}

/// The four corner blocks of `x` relative to an idempotent `p`, stored
/// full-size: `pxp`, `px(1-p)`, `(1-p)xp`, `(1-p)x(1-p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PierceBlocks {
    pub p: Matrix,
    /// `p x p`
    pub pp: Matrix,
    /// `p x (1-p)`
    pub pq: Matrix,
    /// `(1-p) x p`
    pub qp: Matrix,
    /// `(1-p) x (1-p)`
    pub qq: Matrix,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![GaussianRational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, entries)
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer test/data helper: `Matrix::from_int_rows(&[&[1, 2], &[3, 4]])`.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| GaussianRational::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn diag(values: &[GaussianRational]) -> Self {
        let n = values.len();
        let mut m = Matrix::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    /// Conjugate transpose; the matrix involution.
    pub fn star(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, factor: &GaussianRational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * factor)
    }

    /// Exact product. Rows of `self` and columns of `rhs` are scaled to
    /// Gaussian integers first, so the accumulation runs without any
    /// intermediate reduction and each output entry reduces exactly once.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "dimension mismatch in matrix product: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let scaled = |entries: Vec<&GaussianRational>| -> (Vec<GaussInt>, BigInt) {
            let mut den = BigInt::one();
            for e in &entries {
                den = den.lcm(e.re.denom());
                den = den.lcm(e.im.denom());
            }
            let ints = entries
                .iter()
                .map(|e| GaussInt {
                    re: e.re.numer() * (&den / e.re.denom()),
                    im: e.im.numer() * (&den / e.im.denom()),
                })
                .collect();
            (ints, den)
        };
        let lhs_rows: Vec<(Vec<GaussInt>, BigInt)> = (0..self.rows)
            .map(|i| scaled((0..self.cols).map(|k| &self[(i, k)]).collect()))
            .collect();
        let rhs_cols: Vec<(Vec<GaussInt>, BigInt)> = (0..rhs.cols)
            .map(|j| scaled((0..rhs.rows).map(|k| &rhs[(k, j)]).collect()))
            .collect();
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let (row, row_den) = &lhs_rows[i];
            let (col, col_den) = &rhs_cols[j];
            let mut acc = GaussInt { re: BigInt::zero(), im: BigInt::zero() };
            for k in 0..self.cols {
                let l = &row[k];
                if l.is_zero() {
                    continue;
                }
                let r = &col[k];
                if r.is_zero() {
                    continue;
                }
                acc = acc.add(&l.mul(r));
            }
            if acc.is_zero() {
                return GaussianRational::zero();
            }
            let den = row_den * col_den;
            GaussianRational::new(
                Rational::new(acc.re, den.clone()),
                Rational::new(acc.im, den),
            )
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sum");
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in difference");
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }

    /// `self^k` for square matrices; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square(), "pow requires a square matrix");
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self) == *self
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && self.star() == *self
    }

    /// True iff `p^2 = p = p*`.
    pub fn is_projection(&self) -> bool {
        self.is_idempotent() && self.is_hermitian()
    }

    /// Reduced row echelon form and the pivot columns.
    ///
    /// Uses fraction-free Gauss-Jordan elimination over the Gaussian
    /// integers (entries stay minors of the scaled input, divisions by the
    /// previous pivot are exact) with first-nonzero pivot selection, then a
    /// single normalization by the final pivot. `rref(c A) = rref(A)` for
    /// any nonzero scalar `c`, so clearing denominators first is sound.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (rows, cols) = (self.rows, self.cols);
        let mut scale = BigInt::one();
        for e in &self.entries {
            scale = scale.lcm(e.re.denom());
            scale = scale.lcm(e.im.denom());
        }
        let mut w: Vec<GaussInt> = self
            .entries
            .iter()
            .map(|e| GaussInt {
                re: e.re.numer() * (&scale / e.re.denom()),
                im: e.im.numer() * (&scale / e.im.denom()),
            })
            .collect();
        let at = |i: usize, j: usize| i * cols + j;

        let mut pivots = Vec::new();
        let mut prev = GaussInt::one();
        let mut row = 0;
        for col in 0..cols {
            if row == rows {
                break;
            }
            let Some(pivot_row) = (row..rows).find(|&r| !w[at(r, col)].is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for j in 0..cols {
                    w.swap(at(row, j), at(pivot_row, j));
                }
            }
            let pivot = w[at(row, col)].clone();
            for i in 0..rows {
                if i == row {
                    continue;
                }
                let factor = w[at(i, col)].clone();
                for j in 0..cols {
                    let updated = w[at(i, j)].mul(&pivot).sub(&factor.mul(&w[at(row, j)]));
                    w[at(i, j)] = updated.exact_div(&prev);
                }
            }
            prev = pivot;
            pivots.push(col);
            row += 1;
        }

        // Every pivot entry now equals the final pivot; dividing by it gives
        // the reduced form. Rows past the rank are exactly zero.
        let last = prev;
        let norm = &last.re * &last.re + &last.im * &last.im;
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                if i >= pivots.len() {
                    entries.push(GaussianRational::zero());
                    continue;
                }
                let z = w[at(i, j)].mul(&last.conj());
                entries.push(GaussianRational::new(
                    Rational::new(z.re, norm.clone()),
                    Rational::new(z.im, norm.clone()),
                ));
            }
        }
        (Matrix::new(rows, cols, entries), pivots)
    }

    /// Row rank (equals column rank) by exact row reduction.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `A = F * G` with `F` the pivot columns of `A` and `G` the nonzero rows
    /// of `rref(A)`.
    pub fn full_rank_factorize(&self) -> FullRankFactorization {
        let (reduced, pivots) = self.rref();
        let rank = pivots.len();
        let f = self.select_cols(&pivots);
        let g = reduced.slice_rows(0..rank);
        FullRankFactorization { f, g, rank }
    }

    /// Exact inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse requires a square matrix");
        let n = self.rows;
        let (reduced, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
            return None;
        }
        Some(reduced.slice_cols(n..2 * n))
    }

    /// Some `Y` with `self * Y = B`, or `None` when the system is unsolvable.
    pub fn solve_left(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "dimension mismatch in solve");
        let (reduced, pivots) = self.hstack(b).rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut y = Matrix::zeros(self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                y[(pc, j)] = reduced[(i, self.cols + j)].clone();
            }
        }
        Some(y)
    }

    /// Some `X` with `X * self = B` ("right division" `B / self`), or `None`.
    pub fn solve_right(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.cols, b.cols, "dimension mismatch in solve");
        self.star().solve_left(&b.star()).map(|y| y.star())
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack needs equal row counts");
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols, "vstack needs equal column counts");
        Matrix::from_fn(self.rows + below.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                below[(i - self.rows, j)].clone()
            }
        })
    }

    pub fn slice_rows(&self, r: Range<usize>) -> Matrix {
        assert!(r.end <= self.rows);
        Matrix::from_fn(r.len(), self.cols, |i, j| self[(r.start + i, j)].clone())
    }

    pub fn slice_cols(&self, r: Range<usize>) -> Matrix {
        assert!(r.end <= self.cols);
        Matrix::from_fn(self.rows, r.len(), |i, j| self[(i, r.start + j)].clone())
    }

    pub fn select_cols(&self, sel: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, sel.len(), |i, j| self[(i, sel[j])].clone())
    }

    /// `[[a, b], [c, d]]` from four conforming blocks.
    pub fn block_2x2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        a.hstack(b).vstack(&c.hstack(d))
    }
}

/// Gaussian integer used inside fraction-free elimination.
#[derive(Clone)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn one() -> Self {
        GaussInt { re: BigInt::one(), im: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn conj(&self) -> GaussInt {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    fn mul(&self, rhs: &GaussInt) -> GaussInt {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussInt { re: &self.re * &rhs.re, im: BigInt::zero() };
        }
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn add(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }

    fn sub(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }

    /// Exact division in Z[i]; the elimination invariant guarantees
    /// divisibility, asserted here as a correctness tripwire.
    fn exact_div(&self, d: &GaussInt) -> GaussInt {
        if self.is_zero() {
            return GaussInt { re: BigInt::zero(), im: BigInt::zero() };
        }
        if d.im.is_zero() {
            let (q_re, r_re) = self.re.div_rem(&d.re);
            let (q_im, r_im) = self.im.div_rem(&d.re);
            assert!(r_re.is_zero() && r_im.is_zero(), "non-exact division in elimination");
            return GaussInt { re: q_re, im: q_im };
        }
        let norm = &d.re * &d.re + &d.im * &d.im;
        let num = self.mul(&d.conj());
        let (q_re, r_re) = num.re.div_rem(&norm);
        let (q_im, r_im) = num.im.div_rem(&norm);
        assert!(r_re.is_zero() && r_im.is_zero(), "non-exact division in elimination");
        GaussInt { re: q_re, im: q_im }
    }
}

/// Pierce decomposition of `x` relative to an idempotent `p`:
/// `x = pxp + px(1-p) + (1-p)xp + (1-p)x(1-p)`.
pub fn pierce_decompose(x: &Matrix, p: &Matrix) -> Result<PierceBlocks, MatrixError> {
    assert!(x.is_square() && p.is_square(), "pierce decomposition needs square matrices");
    assert_eq!(x.rows(), p.rows(), "pierce decomposition needs matching dimensions");
    if !p.is_idempotent() {
        return Err(MatrixError::NotIdempotent);
    }
    let q = Matrix::identity(p.rows()).sub(p);
    let px = p.mul(x);
    let qx = q.mul(x);
    Ok(PierceBlocks {
        p: p.clone(),
        pp: px.mul(p),
        pq: px.mul(&q),
        qp: qx.mul(p),
        qq: qx.mul(&q),
    })
}

impl Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::mul(self, rhs)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix::add(self, rhs)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix::sub(self, rhs)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows, self.cols, self)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect())
            .collect();
        MatrixRepr { rows: self.rows, cols: self.cols, entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        if repr.entries.len() != repr.rows {
            return Err(D::Error::custom(format!(
                "expected {} rows, found {}",
                repr.rows,
                repr.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(repr.rows * repr.cols);
        for (i, row) in repr.entries.iter().enumerate() {
            if row.len() != repr.cols {
                return Err(D::Error::custom(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    repr.cols
                )));
            }
            for s in row {
                entries.push(s.parse::<GaussianRational>().map_err(D::Error::custom)?);
            }
        }
        Ok(Matrix::new(repr.rows, repr.cols, entries))
    }
}
