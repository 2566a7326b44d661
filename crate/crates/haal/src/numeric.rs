//! Double-precision matrix helpers: the matrix exponential by
//! scaling-and-squaring with a degree-13 Pade approximant, LU solving,
//! thresholded numeric rank, and polynomial root finding by the
//! Durand-Kerner iteration.

use crate::matrix::RatMatrix;
use crate::rational::rat_to_f64;
use num_complex::Complex64;

#[derive(Clone, Debug)]
pub struct Mat64 {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat64 {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat64 {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat64::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rat(m: &RatMatrix) -> Self {
        let mut out = Mat64::zero(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, rat_to_f64(m.get(i, j)));
            }
        }
        out
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Mat64 {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn block_diag(blocks: &[Mat64]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Mat64::zero(n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn scale(&self, c: f64) -> Mat64 {
        Mat64 {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, o: &Mat64) -> Mat64 {
        Mat64 {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Mat64) -> Mat64 {
        Mat64 {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, o: &Mat64) -> Mat64 {
        assert_eq!(self.cols, o.rows);
        let mut m = Mat64::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..o.cols {
                    let v = m.get(i, j) + a * o.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn norm_1(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn norm_max(&self) -> f64 {
        self.data.iter().fold(0.0, |a: f64, &x| a.max(x.abs()))
    }

    /// Horner evaluation of an ascending-coefficient polynomial at the matrix.
    pub fn poly_at(&self, coeffs: &[f64]) -> Mat64 {
        let n = self.rows;
        let mut acc = Mat64::zero(n, n);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Thresholded rank by Gaussian elimination with full pivoting.
    pub fn rank_with_threshold(&self, thresh: f64) -> usize {
        let mut m = self.clone();
        let steps = self.rows.min(self.cols);
        let mut rank = 0;
        let mut used_rows = vec![false; self.rows];
        let mut used_cols = vec![false; self.cols];
        for _ in 0..steps {
            let mut best = (0usize, 0usize, 0.0f64);
            for i in 0..self.rows {
                if used_rows[i] {
                    continue;
                }
                for j in 0..self.cols {
                    if used_cols[j] {
                        continue;
                    }
                    if m.get(i, j).abs() > best.2 {
                        best = (i, j, m.get(i, j).abs());
                    }
                }
            }
            if best.2 <= thresh {
                break;
            }
            let (pi, pj, _) = best;
            used_rows[pi] = true;
            used_cols[pj] = true;
            rank += 1;
            let pivot = m.get(pi, pj);
            for i in 0..self.rows {
                if used_rows[i] || m.get(i, pj) == 0.0 {
                    continue;
                }
                let f = m.get(i, pj) / pivot;
                for j in 0..self.cols {
                    let v = m.get(i, j) - f * m.get(pi, j);
                    m.set(i, j, v);
                }
            }
        }
        rank
    }
}

/// Solve `A X = B` by LU with partial pivoting; `None` on a (numerically)
/// singular matrix.
pub fn solve(a: &Mat64, b: &Mat64) -> Option<Mat64> {
    assert_eq!(a.rows(), a.cols());
    assert_eq!(a.rows(), b.rows());
    let n = a.rows();
    let mut lu = a.clone();
    let mut rhs = b.clone();
    for k in 0..n {
        let (p, mag) = (k..n)
            .map(|i| (i, lu.get(i, k).abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag == 0.0 {
            return None;
        }
        if p != k {
            for j in 0..n {
                let (x, y) = (lu.get(k, j), lu.get(p, j));
                lu.set(k, j, y);
                lu.set(p, j, x);
            }
            for j in 0..rhs.cols() {
                let (x, y) = (rhs.get(k, j), rhs.get(p, j));
                rhs.set(k, j, y);
                rhs.set(p, j, x);
            }
        }
        for i in k + 1..n {
            let f = lu.get(i, k) / lu.get(k, k);
            lu.set(i, k, f);
            for j in k + 1..n {
                let v = lu.get(i, j) - f * lu.get(k, j);
                lu.set(i, j, v);
            }
            for j in 0..rhs.cols() {
                let v = rhs.get(i, j) - f * rhs.get(k, j);
                rhs.set(i, j, v);
            }
        }
    }
    // back substitution
    let mut x = Mat64::zero(n, rhs.cols());
    for j in 0..rhs.cols() {
        for i in (0..n).rev() {
            let mut v = rhs.get(i, j);
            for k in i + 1..n {
                v -= lu.get(i, k) * x.get(k, j);
            }
            x.set(i, j, v / lu.get(i, i));
        }
    }
    Some(x)
}

pub fn inverse(a: &Mat64) -> Option<Mat64> {
    solve(a, &Mat64::identity(a.rows()))
}

/// Matrix exponential: scaling-and-squaring with the (13,13) Pade
/// approximant, scaling chosen from the 1-norm.
pub fn expm(a: &Mat64) -> Mat64 {
    let n = a.rows();
    assert_eq!(n, a.cols());
    if n == 0 {
        return Mat64::zero(0, 0);
    }
    const THETA_13: f64 = 5.371920351148152;
    let norm = a.norm_1();
    let s = if norm > THETA_13 {
        (norm / THETA_13).log2().ceil() as u32
    } else {
        0
    };
    let a = a.scale(0.5f64.powi(s as i32));

    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let id = Mat64::identity(n);
    let a2 = a.mul(&a);
    let a4 = a2.mul(&a2);
    let a6 = a2.mul(&a4);

    let u_inner = a6
        .mul(&a6.scale(B[13]).add(&a4.scale(B[11])).add(&a2.scale(B[9])))
        .add(&a6.scale(B[7]))
        .add(&a4.scale(B[5]))
        .add(&a2.scale(B[3]))
        .add(&id.scale(B[1]));
    let u = a.mul(&u_inner);
    let v = a6
        .mul(&a6.scale(B[12]).add(&a4.scale(B[10])).add(&a2.scale(B[8])))
        .add(&a6.scale(B[6]))
        .add(&a4.scale(B[4]))
        .add(&a2.scale(B[2]))
        .add(&id.scale(B[0]));

    let mut e = solve(&v.sub(&u), &v.add(&u)).expect("Pade denominator is invertible");
    for _ in 0..s {
        e = e.mul(&e);
    }
    e
}

/// All complex roots of a polynomial (ascending real coefficients) by the
/// Durand-Kerner iteration.
pub fn complex_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len().saturating_sub(1);
    if d == 0 {
        return vec![];
    }
    let lead = coeffs[d];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let radius = 1.0
        + monic[..d]
            .iter()
            .fold(0.0f64, |m, &c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..d)
        .map(|k| seed.powu(k as u32 + 1) * radius / seed.norm())
        .collect();
    for _ in 0..600 {
        let mut delta: f64 = 0.0;
        for i in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots
}

/// Determinant by LU with partial pivoting.
pub fn det64(a: &Mat64) -> f64 {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let mut lu = a.clone();
    let mut det = 1.0;
    for k in 0..n {
        let (p, mag) = (k..n)
            .map(|i| (i, lu.get(i, k).abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag == 0.0 {
            return 0.0;
        }
        if p != k {
            det = -det;
            for j in 0..n {
                let (x, y) = (lu.get(k, j), lu.get(p, j));
                lu.set(k, j, y);
                lu.set(p, j, x);
            }
        }
        det *= lu.get(k, k);
        for i in k + 1..n {
            let f = lu.get(i, k) / lu.get(k, k);
            for j in k + 1..n {
                let v = lu.get(i, j) - f * lu.get(k, j);
                lu.set(i, j, v);
            }
        }
    }
    det
}

/// Characteristic polynomial coefficients (ascending, monic) by the
/// Faddeev-LeVerrier recursion in double precision.
pub fn char_poly_f64(m: &Mat64) -> Vec<f64> {
    let d = m.rows();
    assert_eq!(d, m.cols());
    let mut coeffs = vec![0.0; d + 1];
    coeffs[d] = 1.0;
    let mut w = Mat64::identity(d);
    for k in 1..=d {
        w = m.mul(&w);
        let tr: f64 = (0..d).map(|i| w.get(i, i)).sum();
        let c = -tr / k as f64;
        coeffs[d - k] = c;
        for i in 0..d {
            let v = w.get(i, i) + c;
            w.set(i, i, v);
        }
    }
    coeffs
}
