//! Exact linear algebra over the rationals.
//!
//! Dense matrices with arbitrary-precision rational entries. Rank and
//! determinants go through fraction-free Bareiss elimination on a
//! denominator-cleared integer copy, so intermediate growth stays bounded;
//! solving and inversion use straight Gauss-Jordan over the rationals, which
//! is exact as well. Conjugacy over Q is decided by invariant factors of
//! `xI - M` (Smith normal form over the polynomial ring), with the kernel-dimension
//! fast path for nilpotent pairs.

use crate::rational::{format_rat, rat, Rat};
use crate::ratpoly::RatPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    NotSquare,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::ShapeMismatch { expected, found } => write!(
                f,
                "shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            MatrixError::NotSquare => write!(f, "matrix is not square"),
        }
    }
}

impl std::error::Error for MatrixError {}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn scalar(n: usize, c: &Rat) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn diag(values: &[Rat]) -> Self {
        let mut m = RatMatrix::zero(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// Elementary nilpotent Jordan block `j_m` (ones on the subdiagonal).
    pub fn jordan_block(m: usize) -> Self {
        let mut j = RatMatrix::zero(m, m);
        for i in 0..m.saturating_sub(1) {
            j.set(i + 1, i, Rat::one());
        }
        j
    }

    /// Companion matrix of a monic polynomial given by ascending coefficients.
    pub fn companion(coeffs: &[Rat]) -> Self {
        let n = coeffs.len() - 1;
        assert!(n >= 1 && coeffs[n].is_one(), "companion needs monic input");
        let mut c = RatMatrix::zero(n, n);
        for i in 0..n - 1 {
            c.set(i + 1, i, Rat::one());
        }
        for i in 0..n {
            c.set(i, n - 1, -coeffs[i].clone());
        }
        c
    }

    pub fn block_diag(blocks: &[RatMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = RatMatrix::zero(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
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

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RatMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> RatMatrix {
        let mut m = RatMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> Vec<Rat> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut m = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> RatMatrix {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut m = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let prod = a * b;
                        let cur = m.get(i, j) + prod;
                        m.set(i, j, cur);
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(Rat::zero(), |a, b| a + b)
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> RatMatrix {
        assert!(self.is_square());
        let mut out = RatMatrix::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows)
            .map(|i| self.get(i, i).clone())
            .fold(Rat::zero(), |a, b| a + b)
    }

    /// Exact rank via fraction-free Bareiss elimination on a
    /// denominator-cleared integer copy.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.to_bigint_rows())
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// `[dim ker M, dim ker M^2, ...]` until the value stops growing.
    pub fn kernel_dim_sequence(&self) -> Vec<usize> {
        assert!(self.is_square());
        let mut seq = Vec::new();
        let mut power = self.clone();
        let mut prev = usize::MAX;
        loop {
            let d = power.kernel_dim();
            if d == prev {
                break;
            }
            seq.push(d);
            prev = d;
            if d == self.cols {
                break;
            }
            power = power.mul(self);
        }
        seq
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        if self.rows == 0 {
            return true;
        }
        *self.kernel_dim_sequence().last().unwrap() == self.cols
    }

    /// One exact solution of `M x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let mut aug: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| {
                let mut row = self.row(i);
                row.push(b[i].clone());
                row
            })
            .collect();
        let pivots = row_reduce(&mut aug, self.cols);
        // Inconsistent if a pivot lands in the augmented column.
        for row in &aug {
            if row[..self.cols].iter().all(|c| c.is_zero()) && !row[self.cols].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); self.cols];
        for &(r, c) in &pivots {
            x[c] = aug[r][self.cols].clone();
        }
        Some(x)
    }

    /// Basis of the right kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m: Vec<Vec<Rat>> = (0..self.rows).map(|i| self.row(i)).collect();
        let pivots = row_reduce(&mut m, self.cols);
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for j in 0..self.cols {
            if pivot_cols.contains(&j) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[j] = Rat::one();
            for &(r, c) in &pivots {
                v[c] = -m[r][j].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Indices of a maximal set of linearly independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut m: Vec<Vec<Rat>> = (0..self.rows).map(|i| self.row(i)).collect();
        row_reduce(&mut m, self.cols).into_iter().map(|(_, c)| c).collect()
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row = self.row(i);
                row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                row
            })
            .collect();
        let pivots = row_reduce(&mut aug, n);
        if pivots.len() < n {
            return None;
        }
        let mut inv = RatMatrix::zero(n, n);
        for &(r, c) in &pivots {
            for j in 0..n {
                inv.set(c, j, aug[r][n + j].clone());
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> Rat {
        assert!(self.is_square());
        if self.rows == 0 {
            return Rat::one();
        }
        // Clear denominators row by row and divide the integer determinant back.
        let mut scale = Rat::one();
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let lcm = (0..self.cols).fold(BigInt::one(), |acc, j| {
                acc.lcm(self.get(i, j).denom())
            });
            scale *= Rat::from_integer(lcm.clone());
            rows.push(
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect(),
            );
        }
        Rat::from_integer(bareiss_det(rows)) / scale
    }

    /// Monic characteristic polynomial `det(xI - M)` by Faddeev-LeVerrier.
    ///
    /// The interior divisions are exact, and for integer matrices the whole
    /// recursion stays in `BigInt`.
    pub fn char_poly(&self) -> RatPoly {
        assert!(self.is_square());
        let d = self.rows;
        if d == 0 {
            return RatPoly::one();
        }
        if self.entries.iter().all(|e| e.denom().is_one()) {
            return char_poly_int(self);
        }
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = Rat::one();
        let mut m = RatMatrix::identity(d);
        for k in 1..=d {
            let am = self.mul(&m);
            let c = -am.trace() / rat(k as i64);
            coeffs[d - k] = c.clone();
            m = am;
            for i in 0..d {
                let v = m.get(i, i) + &c;
                m.set(i, i, v);
            }
        }
        RatPoly::new(coeffs)
    }

    /// Evaluate a polynomial at this matrix.
    pub fn poly_at(&self, p: &RatPoly) -> RatMatrix {
        assert!(self.is_square());
        let mut acc = RatMatrix::zero(self.rows, self.rows);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..self.rows {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    fn to_bigint_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let lcm = (0..self.cols).fold(BigInt::one(), |acc, j| {
                    acc.lcm(self.get(i, j).denom())
                });
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| format_rat(self.get(i, j))).collect())
            .collect();
        let width = strings
            .iter()
            .flatten()
            .map(|s| s.len())
            .max()
            .unwrap_or(1);
        for row in &strings {
            write!(f, "[")?;
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{s:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

fn char_poly_int(m: &RatMatrix) -> RatPoly {
    let d = m.rows;
    let a: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| m.get(i, j).numer().clone()).collect())
        .collect();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    let mut w: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for k in 1..=d {
        // w <- a * w
        let mut next = vec![vec![BigInt::zero(); d]; d];
        for i in 0..d {
            for l in 0..d {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..d {
                    if !w[l][j].is_zero() {
                        let t = &a[i][l] * &w[l][j];
                        next[i][j] += t;
                    }
                }
            }
        }
        w = next;
        let tr: BigInt = (0..d).map(|i| w[i][i].clone()).sum();
        let c = -tr / BigInt::from(k); // exact by the recursion's invariant
        coeffs[d - k] = c.clone();
        for i in 0..d {
            w[i][i] += &c;
        }
    }
    RatPoly::new(coeffs.into_iter().map(Rat::from_integer).collect())
}

/// Reduced row echelon form in place over the first `cols` columns.
/// Returns the (row, col) pivot positions.
fn row_reduce(m: &mut [Vec<Rat>], cols: usize) -> Vec<(usize, usize)> {
    let rows = m.len();
    let width = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in 0..width {
            m[r][j] = &m[r][j] / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..width {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of an integer matrix by Bareiss fraction-free elimination.
pub(crate) fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        // Any nonzero entry in the trailing block can serve as the pivot.
        let mut pivot = None;
        'search: for i in k..rows {
            for j in k..cols {
                if !m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
        }
        for i in k + 1..rows {
            for j in k + 1..cols {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut prev = BigInt::one();
    let mut sign = 1i64;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Non-constant invariant factors of `xI - M`, monic, in divisibility order.
///
/// Computed by diagonalizing the characteristic matrix over the rational
/// polynomial ring; two square matrices are conjugate over Q exactly when
/// these lists agree.
pub fn invariant_factors(m: &RatMatrix) -> Vec<RatPoly> {
    assert!(m.is_square());
    let n = m.rows();
    let mut a: Vec<Vec<RatPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -m.get(i, j).clone();
                    if i == j {
                        RatPoly::new(vec![c, Rat::one()])
                    } else {
                        RatPoly::new(vec![c])
                    }
                })
                .collect()
        })
        .collect();

    let mut factors = Vec::new();
    for t in 0..n {
        'pivot: loop {
            // Minimal-degree nonzero entry of the trailing block.
            let mut best: Option<(usize, usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if let Some(d) = a[i][j].degree() {
                        if best.is_none_or(|(_, _, bd)| d < bd) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((bi, bj, _)) = best else {
                break 'pivot;
            };
            a.swap(t, bi);
            if bj != t {
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
            }
            let lc = a[t][t].leading().unwrap().clone();
            if !lc.is_one() {
                let inv = Rat::one() / lc;
                for j in t..n {
                    a[t][j] = a[t][j].scale(&inv);
                }
            }
            // Clear column t; a nonzero remainder becomes the smaller pivot.
            for i in t + 1..n {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, _) = a[i][t].div_rem(&a[t][t]);
                for j in t..n {
                    let s = q.mul(&a[t][j]);
                    a[i][j] = a[i][j].sub(&s);
                }
                if !a[i][t].is_zero() {
                    continue 'pivot;
                }
            }
            // Clear row t.
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, _) = a[t][j].div_rem(&a[t][t]);
                for i in t..n {
                    let s = q.mul(&a[i][t]);
                    a[i][j] = a[i][j].sub(&s);
                }
                if !a[t][j].is_zero() {
                    continue 'pivot;
                }
            }
            // Enforce divisibility: fold in any entry the pivot misses.
            for i in t + 1..n {
                for j in t + 1..n {
                    if !a[i][j].div_rem(&a[t][t]).1.is_zero() {
                        for col in t..n {
                            let add = a[i][col].clone();
                            a[t][col] = a[t][col].add(&add);
                        }
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if a[t][t].is_zero() {
            break;
        }
        let f = a[t][t].clone().into_monic();
        if !f.is_constant() {
            factors.push(f);
        }
    }
    factors
}

/// Conjugacy over the rationals, decided by invariant factors; nilpotent
/// pairs short-circuit through their kernel-dimension sequences.
pub fn conjugate_test(m1: &RatMatrix, m2: &RatMatrix) -> bool {
    assert!(m1.is_square() && m2.is_square());
    if m1.rows() != m2.rows() {
        return false;
    }
    let p1 = m1.char_poly();
    if p1 != m2.char_poly() {
        return false;
    }
    let xn = RatPoly::monomial(Rat::one(), m1.rows());
    if p1 == xn {
        return m1.kernel_dim_sequence() == m2.kernel_dim_sequence();
    }
    invariant_factors(m1) == invariant_factors(m2)
}
