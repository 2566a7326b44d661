//! Quaternion arithmetic over the rationals and the correspondence between
//! q x q quaternionic matrices and the real 4q x 4q matrices commuting with
//! the standard triple of complex structures.
//!
//! Real coordinates are grouped in quadruples `(f, J1 f, J2 f, J3 f)`, one
//! quadruple per quaternionic coordinate. In that ordering each quaternion
//! entry turns into a fixed 4 x 4 block pattern, the triple `J_alpha` is
//! block diagonal, and nilpotent conjugacy classes are read off from real
//! kernel dimensions divided by four.

use crate::matrix::RatMatrix;
use crate::rational::Rat;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quaternion {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
    pub w: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuatError {
    SizeNotMultipleOfFour { size: usize },
    BlockPatternMismatch { block_row: usize, block_col: usize },
    NotNilpotent,
    NotQuaternionLinear,
}

impl fmt::Display for QuatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuatError::SizeNotMultipleOfFour { size } => {
                write!(f, "matrix size {size} is not a multiple of 4")
            }
            QuatError::BlockPatternMismatch { block_row, block_col } => write!(
                f,
                "block ({block_row},{block_col}) does not have the quaternionic pattern"
            ),
            QuatError::NotNilpotent => write!(f, "matrix is not nilpotent"),
            QuatError::NotQuaternionLinear => {
                write!(f, "matrix does not commute with the standard triple")
            }
        }
    }
}

impl std::error::Error for QuatError {}

impl Quaternion {
    pub fn new(x: Rat, y: Rat, z: Rat, w: Rat) -> Self {
        Quaternion { x, y, z, w }
    }

    pub fn zero() -> Self {
        Quaternion::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Quaternion::new(Rat::one(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn from_real(x: Rat) -> Self {
        Quaternion::new(x, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn i() -> Self {
        Quaternion::new(Rat::zero(), Rat::one(), Rat::zero(), Rat::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(Rat::zero(), Rat::zero(), Rat::one(), Rat::zero())
    }

    pub fn k() -> Self {
        Quaternion::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero() && self.w.is_zero()
    }

    pub fn add(&self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z, &self.w + &o.w)
    }

    pub fn neg(&self) -> Quaternion {
        Quaternion::new(-&self.x, -&self.y, -&self.z, -&self.w)
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.x.clone(), -&self.y, -&self.z, -&self.w)
    }

    pub fn norm_sq(&self) -> Rat {
        &self.x * &self.x + &self.y * &self.y + &self.z * &self.z + &self.w * &self.w
    }

    pub fn mul(&self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.x, &self.y, &self.z, &self.w);
        let (a2, b2, c2, d2) = (&o.x, &o.y, &o.z, &o.w);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    /// The 4 x 4 real block this entry occupies inside the real form.
    pub fn real_block(&self) -> RatMatrix {
        let (a, b, c, d) = (&self.x, &self.y, &self.z, &self.w);
        RatMatrix::from_rows(vec![
            vec![a.clone(), -b, c.clone(), -d],
            vec![b.clone(), a.clone(), d.clone(), c.clone()],
            vec![-c, -d, a.clone(), b.clone()],
            vec![d.clone(), -c, -b, a.clone()],
        ])
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuatMatrix {
    size: usize,
    entries: Vec<Quaternion>,
}

impl QuatMatrix {
    pub fn zero(q: usize) -> Self {
        QuatMatrix {
            size: q,
            entries: vec![Quaternion::zero(); q * q],
        }
    }

    pub fn identity(q: usize) -> Self {
        let mut m = QuatMatrix::zero(q);
        for i in 0..q {
            m.set(i, i, Quaternion::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Self {
        let q = rows.len();
        assert!(rows.iter().all(|r| r.len() == q), "must be square");
        QuatMatrix {
            size: q,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Quaternionic Jordan block `J_m(lambda)`: lambda on the diagonal, ones
    /// on the subdiagonal.
    pub fn jordan_block(m: usize, lambda: &Quaternion) -> Self {
        let mut b = QuatMatrix::zero(m);
        for i in 0..m {
            b.set(i, i, lambda.clone());
        }
        for i in 0..m.saturating_sub(1) {
            b.set(i + 1, i, Quaternion::one());
        }
        b
    }

    pub fn block_diag(blocks: &[QuatMatrix]) -> Self {
        let q: usize = blocks.iter().map(|b| b.size).sum();
        let mut m = QuatMatrix::zero(q);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.size {
                for j in 0..b.size {
                    m.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.size;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Quaternion {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Quaternion) {
        self.entries[i * self.size + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &QuatMatrix) -> QuatMatrix {
        assert_eq!(self.size, other.size);
        let q = self.size;
        let mut out = QuatMatrix::zero(q);
        for i in 0..q {
            for k in 0..q {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..q {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let add = a.mul(b);
                        let cur = out.get(i, j).add(&add);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> QuatMatrix {
        let mut out = QuatMatrix::identity(self.size);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `Q^q = 0` decides nilpotency at this size.
    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.size).is_zero()
    }
}

/// The invariant tuple of a nilpotent quaternionic conjugacy class:
/// block sizes `m_1 > ... > m_r >= 2` with multiplicities `p_i`, plus the
/// number `s` of 1 x 1 zero blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SigmaTuple {
    pub m: Vec<usize>,
    pub p: Vec<usize>,
    pub s: usize,
}

impl SigmaTuple {
    pub fn new(m: Vec<usize>, p: Vec<usize>, s: usize) -> Self {
        let t = SigmaTuple { m, p, s };
        t.validate();
        t
    }

    pub fn validate(&self) {
        assert_eq!(self.m.len(), self.p.len());
        assert!(self.m.windows(2).all(|w| w[0] > w[1]), "sizes must decrease");
        assert!(self.m.iter().all(|&m| m >= 2));
        assert!(self.p.iter().all(|&p| p >= 1));
    }

    pub fn r(&self) -> usize {
        self.m.len()
    }

    /// Quaternionic dimension `sum m_i p_i + s`.
    pub fn quat_dim(&self) -> usize {
        self.m.iter().zip(&self.p).map(|(m, p)| m * p).sum::<usize>() + self.s
    }

    /// Block-diagonal quaternionic normal form, blocks in decreasing size.
    pub fn jordan_form(&self) -> QuatMatrix {
        let mut blocks = Vec::new();
        for (&m, &p) in self.m.iter().zip(&self.p) {
            for _ in 0..p {
                blocks.push(QuatMatrix::jordan_block(m, &Quaternion::zero()));
            }
        }
        if self.s > 0 {
            blocks.push(QuatMatrix::zero(self.s));
        }
        QuatMatrix::block_diag(&blocks)
    }
}

impl fmt::Display for SigmaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, m={:?}, p={:?}, s={})", self.r(), self.m, self.p, self.s)
    }
}

/// The three standard complex structures on `R^{4q}`, block diagonal in the
/// quadruple-grouped basis, satisfying `J1 J2 = J3 = -J2 J1`.
pub struct StandardJTriple {
    pub q: usize,
    pub j1: RatMatrix,
    pub j2: RatMatrix,
    pub j3: RatMatrix,
}

impl StandardJTriple {
    /// Triple acting on `H^q = R^{4q}`.
    pub fn for_quaternionic_dim(q: usize) -> Self {
        let li = RatMatrix::from_i64_rows(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]);
        let lj = RatMatrix::from_i64_rows(&[
            &[0, 0, -1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, -1, 0, 0],
        ]);
        let lk = RatMatrix::from_i64_rows(&[
            &[0, 0, 0, -1],
            &[0, 0, -1, 0],
            &[0, 1, 0, 0],
            &[1, 0, 0, 0],
        ]);
        let rep = |b: &RatMatrix| RatMatrix::block_diag(&vec![b.clone(); q]);
        StandardJTriple {
            q,
            j1: rep(&li),
            j2: rep(&lj),
            j3: rep(&lk),
        }
    }

    /// Triple on the codimension-four ideal of a 4n-dimensional algebra.
    pub fn for_algebra(n: usize) -> Self {
        assert!(n >= 1);
        StandardJTriple::for_quaternionic_dim(n - 1)
    }

    pub fn commutes_with(&self, b: &RatMatrix) -> bool {
        b.rows() == 4 * self.q
            && b.is_square()
            && [&self.j1, &self.j2, &self.j3]
                .iter()
                .all(|j| j.mul(b) == b.mul(j))
    }
}

/// Read a real matrix in the quadruple-grouped block form as a quaternionic
/// matrix. Fails with `BlockPatternMismatch` when some 4 x 4 block is not of
/// the required shape, which is exactly failure to commute with the triple.
pub fn sigma(b: &RatMatrix) -> Result<QuatMatrix, QuatError> {
    if !b.is_square() || !b.rows().is_multiple_of(4) {
        return Err(QuatError::SizeNotMultipleOfFour { size: b.rows() });
    }
    let q = b.rows() / 4;
    let mut out = QuatMatrix::zero(q);
    for bi in 0..q {
        for bj in 0..q {
            let block = b.submatrix(4 * bi, 4 * bj, 4, 4);
            let entry = Quaternion::new(
                block.get(0, 0).clone(),
                block.get(1, 0).clone(),
                -block.get(2, 0),
                block.get(3, 0).clone(),
            );
            if entry.real_block() != block {
                return Err(QuatError::BlockPatternMismatch {
                    block_row: bi,
                    block_col: bj,
                });
            }
            out.set(bi, bj, entry);
        }
    }
    Ok(out)
}

/// Inverse of [`sigma`]: assemble the real 4q x 4q form.
pub fn sigma_inv(m: &QuatMatrix) -> RatMatrix {
    let q = m.size();
    let mut out = RatMatrix::zero(4 * q, 4 * q);
    for i in 0..q {
        for j in 0..q {
            let e = m.get(i, j);
            if !e.is_zero() {
                out.set_block(4 * i, 4 * j, &e.real_block());
            }
        }
    }
    out
}

/// Real form of the nilpotent quaternionic Jordan block `J_m(0)`: identity
/// 4 x 4 blocks on the subdiagonal.
pub fn real_jordan_quad(m: usize) -> RatMatrix {
    sigma_inv(&QuatMatrix::jordan_block(m, &Quaternion::zero()))
}

/// Nilpotent partition data of a quaternionic matrix, computed from the
/// kernel-dimension sequence of its real form.
pub fn quat_jordan_nilpotent(q: &QuatMatrix) -> Result<SigmaTuple, QuatError> {
    if !q.is_nilpotent() {
        return Err(QuatError::NotNilpotent);
    }
    let real = sigma_inv(q);
    tuple_from_kernel_sequence(&real.kernel_dim_sequence(), q.size())
}

/// Same partition, starting from a real matrix commuting with the triple.
/// Also checks every kernel dimension is divisible by four.
pub fn sigma_tuple_from_real(b: &RatMatrix) -> Result<SigmaTuple, QuatError> {
    if !b.is_square() || !b.rows().is_multiple_of(4) {
        return Err(QuatError::SizeNotMultipleOfFour { size: b.rows() });
    }
    let q = b.rows() / 4;
    let triple = StandardJTriple::for_quaternionic_dim(q);
    if !triple.commutes_with(b) {
        return Err(QuatError::NotQuaternionLinear);
    }
    if !b.is_nilpotent() {
        return Err(QuatError::NotNilpotent);
    }
    tuple_from_kernel_sequence(&b.kernel_dim_sequence(), q)
}

fn tuple_from_kernel_sequence(seq: &[usize], q: usize) -> Result<SigmaTuple, QuatError> {
    if q == 0 {
        return Ok(SigmaTuple::new(vec![], vec![], 0));
    }
    if seq.iter().any(|d| d % 4 != 0) {
        return Err(QuatError::NotQuaternionLinear);
    }
    // blocks_ge[j] = number of quaternionic blocks of size >= j+1
    let mut blocks_ge = Vec::with_capacity(seq.len());
    let mut prev = 0;
    for &d in seq {
        blocks_ge.push((d - prev) / 4);
        prev = d;
    }
    let count_exact = |j: usize| -> usize {
        let ge = |idx: usize| blocks_ge.get(idx).copied().unwrap_or(0);
        ge(j - 1) - ge(j)
    };
    let s = count_exact(1);
    let mut m = Vec::new();
    let mut p = Vec::new();
    for size in (2..=seq.len()).rev() {
        let c = count_exact(size);
        if c > 0 {
            m.push(size);
            p.push(c);
        }
    }
    Ok(SigmaTuple::new(m, p, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::conjugate_test;
    use crate::rational::rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn qr(x: i64, y: i64, z: i64, w: i64) -> Quaternion {
        Quaternion::new(rat(x), rat(y), rat(z), rat(w))
    }

    fn random_quat(rng: &mut StdRng) -> Quaternion {
        qr(
            rng.gen_range(-2..=2),
            rng.gen_range(-2..=2),
            rng.gen_range(-2..=2),
            rng.gen_range(-2..=2),
        )
    }

    fn random_quat_matrix(rng: &mut StdRng, q: usize) -> QuatMatrix {
        QuatMatrix::from_rows(
            (0..q)
                .map(|_| (0..q).map(|_| random_quat(rng)).collect())
                .collect(),
        )
    }

    fn random_invertible_quat(rng: &mut StdRng, q: usize) -> QuatMatrix {
        loop {
            let s = random_quat_matrix(rng, q);
            if sigma_inv(&s).rank() == 4 * q {
                return s;
            }
        }
    }

    #[test]
    fn quaternion_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(i.mul(&i), Quaternion::one().neg());
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        let q = qr(1, 2, -3, 4);
        assert_eq!(q.mul(&q.conj()), Quaternion::from_real(q.norm_sq()));
    }

    #[test]
    fn sigma_round_trip_scalars() {
        let q = qr(1, 2, -3, 4);
        let b = q.real_block();
        let back = sigma(&b).unwrap();
        assert_eq!(back.get(0, 0), &q);
        assert_eq!(sigma_inv(&QuatMatrix::identity(1)), RatMatrix::identity(4));
        assert_eq!(
            sigma(&RatMatrix::identity(4)).unwrap(),
            QuatMatrix::identity(1)
        );
    }

    #[test]
    fn sigma_of_component_block_layout() {
        // the four-component block layout with blocks X, Y, Z, W reads back
        // as X + iY - jZ + kW; at size one that is the full 4 x 4 pattern
        let (a, b, c, d) = (rat(2), rat(3), rat(5), rat(7));
        let m = RatMatrix::from_rows(vec![
            vec![a.clone(), -&b, -&c, -&d],
            vec![b.clone(), a.clone(), d.clone(), -&c],
            vec![c.clone(), -&d, a.clone(), b.clone()],
            vec![d.clone(), c.clone(), -&b, a.clone()],
        ]);
        let q = sigma(&m).unwrap();
        assert_eq!(q.get(0, 0), &Quaternion::new(a, b, -c, d));
    }

    #[test]
    fn sigma_of_quad_jordan() {
        // the real quad Jordan block reads back as J_m(0)
        for m in 2..=4 {
            let real = real_jordan_quad(m);
            assert_eq!(
                sigma(&real).unwrap(),
                QuatMatrix::jordan_block(m, &Quaternion::zero())
            );
        }
    }

    #[test]
    fn sigma_rejects_non_pattern() {
        let mut b = RatMatrix::identity(4);
        b.set(0, 1, rat(1));
        assert!(matches!(
            sigma(&b),
            Err(QuatError::BlockPatternMismatch { .. })
        ));
    }

    #[test]
    fn sigma_multiplicative() {
        let mut rng = StdRng::seed_from_u64(3);
        for q in 1..=4 {
            let a = random_quat_matrix(&mut rng, q);
            let b = random_quat_matrix(&mut rng, q);
            assert_eq!(sigma_inv(&a.mul(&b)), sigma_inv(&a).mul(&sigma_inv(&b)));
            // and back through sigma on J-commuting real products
            let ra = sigma_inv(&a);
            let rb = sigma_inv(&b);
            assert_eq!(sigma(&ra.mul(&rb)).unwrap(), a.mul(&b));
        }
    }

    #[test]
    fn triple_relations_and_commutation() {
        for q in 1..=3 {
            let t = StandardJTriple::for_quaternionic_dim(q);
            let neg_id = RatMatrix::identity(4 * q).neg();
            assert_eq!(t.j1.mul(&t.j1), neg_id);
            assert_eq!(t.j2.mul(&t.j2), neg_id);
            assert_eq!(t.j3.mul(&t.j3), neg_id);
            assert_eq!(t.j1.mul(&t.j2), t.j3);
            assert_eq!(t.j2.mul(&t.j1), t.j3.neg());
            let mut rng = StdRng::seed_from_u64(q as u64);
            let b = sigma_inv(&random_quat_matrix(&mut rng, q));
            assert!(t.commutes_with(&b));
        }
    }

    #[test]
    fn nilpotency_transfer() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..20 {
            let q = rng.gen_range(1..=3);
            let a = random_quat_matrix(&mut rng, q);
            assert_eq!(a.is_nilpotent(), sigma_inv(&a).is_nilpotent());
        }
    }

    #[test]
    fn jordan_tuple_examples() {
        let j2 = QuatMatrix::jordan_block(2, &Quaternion::zero());
        assert_eq!(
            quat_jordan_nilpotent(&j2).unwrap(),
            SigmaTuple::new(vec![2], vec![1], 0)
        );
        assert_eq!(
            quat_jordan_nilpotent(&QuatMatrix::zero(3)).unwrap(),
            SigmaTuple::new(vec![], vec![], 3)
        );
        assert!(matches!(
            quat_jordan_nilpotent(&QuatMatrix::identity(2)),
            Err(QuatError::NotNilpotent)
        ));
    }

    #[test]
    fn jordan_tuple_conjugation_invariant() {
        let mut rng = StdRng::seed_from_u64(29);
        // S (J_2(0) + 0_1) S^{-1} for random invertible quaternionic S
        let base = QuatMatrix::block_diag(&[
            QuatMatrix::jordan_block(2, &Quaternion::zero()),
            QuatMatrix::zero(1),
        ]);
        let expected = SigmaTuple::new(vec![2], vec![1], 1);
        for _ in 0..5 {
            let s = random_invertible_quat(&mut rng, 3);
            let rs = sigma_inv(&s);
            let conj = rs.mul(&sigma_inv(&base)).mul(&rs.inverse().unwrap());
            assert_eq!(sigma_tuple_from_real(&conj).unwrap(), expected);
            // kernel dims of the real form are divisible by 4
            for d in conj.kernel_dim_sequence() {
                assert_eq!(d % 4, 0);
            }
        }
    }

    #[test]
    fn tuple_from_real_examples() {
        // quad J_3 + quad J_2 is 20 x 20 with tuple (2, [3,2], [1,1], 0)
        let b = RatMatrix::block_diag(&[real_jordan_quad(3), real_jordan_quad(2)]);
        assert_eq!(
            sigma_tuple_from_real(&b).unwrap(),
            SigmaTuple::new(vec![3, 2], vec![1, 1], 0)
        );
        assert_eq!(
            sigma_tuple_from_real(&RatMatrix::zero(8, 8)).unwrap(),
            SigmaTuple::new(vec![], vec![], 2)
        );
        // non-J-linear input is rejected
        let j = RatMatrix::jordan_block(8);
        assert!(matches!(
            sigma_tuple_from_real(&j),
            Err(QuatError::NotQuaternionLinear)
        ));
    }

    #[test]
    fn jordan_form_reconstruction_is_conjugate() {
        let mut rng = StdRng::seed_from_u64(31);
        let base = QuatMatrix::block_diag(&[
            QuatMatrix::jordan_block(3, &Quaternion::zero()),
            QuatMatrix::jordan_block(2, &Quaternion::zero()),
        ]);
        let s = random_invertible_quat(&mut rng, 5);
        let rs = sigma_inv(&s);
        let real = rs.mul(&sigma_inv(&base)).mul(&rs.inverse().unwrap());
        let tuple = sigma_tuple_from_real(&real).unwrap();
        let reconstructed = sigma_inv(&tuple.jordan_form());
        assert!(conjugate_test(&reconstructed, &real));
    }

    #[test]
    fn nilpotency_degree_bound() {
        let mut rng = StdRng::seed_from_u64(37);
        for _ in 0..10 {
            let q = rng.gen_range(1..=4);
            let t = random_nilpotent_tuple(&mut rng, q);
            let m = t.jordan_form();
            let mut r = 0;
            let mut power = QuatMatrix::identity(q);
            loop {
                power = power.mul(&m);
                r += 1;
                if power.is_zero() {
                    break;
                }
            }
            assert!(r <= q);
        }
    }

    fn random_nilpotent_tuple(rng: &mut StdRng, q: usize) -> SigmaTuple {
        // random partition of q into block sizes
        let mut remaining = q;
        let mut sizes = Vec::new();
        while remaining > 0 {
            let s = rng.gen_range(1..=remaining);
            sizes.push(s);
            remaining -= s;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let s1 = sizes.iter().filter(|&&s| s == 1).count();
        let mut m = Vec::new();
        let mut p = Vec::new();
        for &sz in sizes.iter().filter(|&&s| s >= 2) {
            if m.last() == Some(&sz) {
                *p.last_mut().unwrap() += 1;
            } else {
                m.push(sz);
                p.push(1);
            }
        }
        SigmaTuple::new(m, p, s1)
    }
}
