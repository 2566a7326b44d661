//! Classification engine for nilpotent almost abelian Lie algebras carrying
//! a hypercomplex or complex structure.
//!
//! Both settings share one code path parameterized by the block width
//! `beta` (4 for hypercomplex, 2 for complex): canonical matrices, the
//! admissibility congruences on Jordan data, class identification via
//! kernel-dimension sequences, and isomorphism-class counting.

use crate::matrix::RatMatrix;
use crate::quaternion::{sigma_tuple_from_real, SigmaTuple, StandardJTriple};
use crate::rational::Rat;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Hypercomplex,
    Complex,
}

impl StructureKind {
    pub fn beta(self) -> usize {
        match self {
            StructureKind::Hypercomplex => 4,
            StructureKind::Complex => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NilpError {
    NotQuaternionLinear,
    NotNilpotent,
    MuNotZero,
    IndexOutOfRange { ell: usize, max: usize },
    DimensionMismatch { dim: usize, beta: usize },
    BadJordanData(String),
    BadInput(String),
}

impl fmt::Display for NilpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NilpError::NotQuaternionLinear => {
                write!(f, "matrix does not commute with the standard triple")
            }
            NilpError::NotNilpotent => write!(f, "matrix is not nilpotent"),
            NilpError::MuNotZero => write!(f, "operation requires mu = 0"),
            NilpError::IndexOutOfRange { ell, max } => {
                write!(f, "class index {ell} out of range (max {max})")
            }
            NilpError::DimensionMismatch { dim, beta } => write!(
                f,
                "ambient dimension {dim} is not congruent to {} mod {beta}",
                beta - 1
            ),
            NilpError::BadJordanData(msg) => write!(f, "invalid Jordan data: {msg}"),
            NilpError::BadInput(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for NilpError {}

/// Jordan type of a nilpotent matrix: block sizes `n_1 > ... > n_k >= 2`
/// with multiplicities `q_i`, plus `d` zero blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanData {
    pub parts: Vec<(usize, usize)>,
    pub d: usize,
}

impl JordanData {
    pub fn new(parts: Vec<(usize, usize)>, d: usize) -> Result<Self, NilpError> {
        for w in parts.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(NilpError::BadJordanData(
                    "block sizes must be strictly decreasing".into(),
                ));
            }
        }
        if parts.iter().any(|&(n, _)| n < 2) {
            return Err(NilpError::BadJordanData("block sizes must be >= 2".into()));
        }
        if parts.iter().any(|&(_, q)| q == 0) {
            return Err(NilpError::BadJordanData("multiplicities must be >= 1".into()));
        }
        Ok(JordanData { parts, d })
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().map(|&(n, q)| n * q).sum::<usize>() + self.d
    }

    /// Jordan type of a nilpotent matrix, from its kernel-dimension sequence.
    pub fn of_nilpotent(m: &RatMatrix) -> Option<JordanData> {
        if !m.is_nilpotent() {
            return None;
        }
        let seq = m.kernel_dim_sequence();
        let mut blocks_ge = Vec::with_capacity(seq.len());
        let mut prev = 0;
        for &d in &seq {
            blocks_ge.push(d - prev);
            prev = d;
        }
        let count_exact = |j: usize| -> usize {
            let ge = |idx: usize| blocks_ge.get(idx).copied().unwrap_or(0);
            ge(j - 1) - ge(j)
        };
        let d = count_exact(1);
        let mut parts = Vec::new();
        for size in (2..=seq.len()).rev() {
            let c = count_exact(size);
            if c > 0 {
                parts.push((size, c));
            }
        }
        Some(JordanData { parts, d })
    }

    /// The block-diagonal nilpotent matrix with this Jordan type.
    pub fn matrix(&self) -> RatMatrix {
        let mut blocks = Vec::new();
        for &(n, q) in &self.parts {
            for _ in 0..q {
                blocks.push(RatMatrix::jordan_block(n));
            }
        }
        if self.d > 0 {
            blocks.push(RatMatrix::zero(self.d, self.d));
        }
        RatMatrix::block_diag(&blocks)
    }
}

/// Which admissibility congruence matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    CondI,
    CondII,
    CondIII { t: usize },
}

#[derive(Debug, Clone)]
pub struct AdmissibilityVerdict {
    pub admissible: bool,
    pub condition: Option<Condition>,
    pub witness: Option<RatMatrix>,
}

/// Canonical representative of a nilpotent class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalKind {
    /// The zero matrix: the abelian algebra.
    Abelian,
    /// The rank-three class with trivial quaternionic part.
    N { s: usize },
    /// The class with index `ell` attached to a nonzero partition.
    A { sigma: SigmaTuple, ell: usize },
}

#[derive(Debug, Clone)]
pub struct CanonicalNilpotent {
    pub kind: CanonicalKind,
    pub matrix: RatMatrix,
    pub n: usize,
}

impl CanonicalNilpotent {
    /// Nilpotency step of the associated Lie algebra.
    pub fn step(&self) -> usize {
        match &self.kind {
            CanonicalKind::Abelian => 1,
            CanonicalKind::N { .. } => 2,
            CanonicalKind::A { sigma, ell } => {
                if *ell == 1 {
                    sigma.m[0] + 1
                } else {
                    sigma.m[0]
                }
            }
        }
    }
}

/// Defining data of a hypercomplex almost abelian algebra of dimension 4n:
/// `R e_0` acting on `span(e_1,e_2,e_3) + R^{4(n-1)}` with scalar `mu`,
/// translation vector `v_0` and quaternion-linear block `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcxAAData {
    pub n: usize,
    pub mu: Rat,
    pub v0: Vec<Rat>,
    pub b: RatMatrix,
}

impl HcxAAData {
    pub fn new(n: usize, mu: Rat, v0: Vec<Rat>, b: RatMatrix) -> Result<Self, NilpError> {
        let h = 4 * (n - 1);
        if v0.len() != h || b.rows() != h || !b.is_square() {
            return Err(NilpError::BadInput(format!(
                "expected v0 of length {h} and a {h}x{h} matrix"
            )));
        }
        Ok(HcxAAData { n, mu, v0, b })
    }
}

/// `I_beta`-subdiagonal Jordan block on `beta * m` coordinates.
pub fn grouped_jordan(m: usize, beta: usize) -> RatMatrix {
    let mut j = RatMatrix::zero(beta * m, beta * m);
    for t in 0..m.saturating_sub(1) {
        for i in 0..beta {
            j.set(beta * (t + 1) + i, beta * t + i, crate::rational::rat(1));
        }
    }
    j
}

/// Translation-column insert placed under the scalar block: the images of
/// the canonical `v_0` under the structure operators.
fn insert_matrix(beta: usize) -> RatMatrix {
    match beta {
        4 => RatMatrix::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        2 => RatMatrix::from_i64_rows(&[&[1], &[0]]),
        _ => unreachable!("beta is 2 or 4"),
    }
}

fn n_ell_block(m: usize, p: usize, beta: usize) -> RatMatrix {
    // [ 0_{beta-1} | 0 ; insert over zeros | J_m ] followed by p-1 plain blocks
    let c = beta - 1;
    let head = beta * m + c;
    let mut first = RatMatrix::zero(head, head);
    first.set_block(c, 0, &insert_matrix(beta));
    first.set_block(c, c, &grouped_jordan(m, beta));
    let mut blocks = vec![first];
    for _ in 1..p {
        blocks.push(grouped_jordan(m, beta));
    }
    RatMatrix::block_diag(&blocks)
}

fn n_block(s: usize, beta: usize) -> RatMatrix {
    let c = beta - 1;
    let mut m = RatMatrix::zero(beta * s + c, beta * s + c);
    m.set_block(c, 0, &insert_matrix(beta));
    m
}

/// Canonical matrix for the class `ell` attached to a partition, realizing
/// the block layouts exactly. `ell` ranges over `0..=r+1`, with `r+1`
/// admissible only when `s > 0`.
pub fn canonical_matrix(
    sigma: &SigmaTuple,
    ell: usize,
    kind: StructureKind,
) -> Result<CanonicalNilpotent, NilpError> {
    sigma.validate();
    let beta = kind.beta();
    let r = sigma.r();
    let max = if sigma.s > 0 { r + 1 } else { r };
    if ell > max {
        return Err(NilpError::IndexOutOfRange { ell, max });
    }
    let n = sigma.quat_dim() + 1;
    let jq = |m: usize, p: usize| -> Vec<RatMatrix> { vec![grouped_jordan(m, beta); p] };

    let mut blocks: Vec<RatMatrix> = Vec::new();
    let kind_tag;
    if ell == 0 {
        blocks.push(RatMatrix::zero(beta - 1, beta - 1));
        for i in 0..r {
            blocks.extend(jq(sigma.m[i], sigma.p[i]));
        }
        if sigma.s > 0 {
            blocks.push(RatMatrix::zero(beta * sigma.s, beta * sigma.s));
        }
        kind_tag = if r == 0 {
            CanonicalKind::Abelian
        } else {
            CanonicalKind::A {
                sigma: sigma.clone(),
                ell,
            }
        };
    } else if ell <= r {
        for i in 0..ell - 1 {
            blocks.extend(jq(sigma.m[i], sigma.p[i]));
        }
        blocks.push(n_ell_block(sigma.m[ell - 1], sigma.p[ell - 1], beta));
        for i in ell..r {
            blocks.extend(jq(sigma.m[i], sigma.p[i]));
        }
        if sigma.s > 0 {
            blocks.push(RatMatrix::zero(beta * sigma.s, beta * sigma.s));
        }
        kind_tag = CanonicalKind::A {
            sigma: sigma.clone(),
            ell,
        };
    } else {
        // ell = r + 1, s > 0
        for i in 0..r {
            blocks.extend(jq(sigma.m[i], sigma.p[i]));
        }
        blocks.push(n_block(sigma.s, beta));
        kind_tag = if r == 0 {
            CanonicalKind::N { s: sigma.s }
        } else {
            CanonicalKind::A {
                sigma: sigma.clone(),
                ell,
            }
        };
    }
    let matrix = RatMatrix::block_diag(&blocks);
    debug_assert_eq!(matrix.rows(), beta * (n - 1) + beta - 1);
    Ok(CanonicalNilpotent {
        kind: kind_tag,
        matrix,
        n,
    })
}

/// Defining data `(mu = 0, v0, B)` whose assembled matrix is conjugate to
/// `canonical_matrix(sigma, ell, Hypercomplex)`.
pub fn canonical_data(sigma: &SigmaTuple, ell: usize) -> Result<HcxAAData, NilpError> {
    sigma.validate();
    let r = sigma.r();
    let max = if sigma.s > 0 { r + 1 } else { r };
    if ell > max {
        return Err(NilpError::IndexOutOfRange { ell, max });
    }
    let n = sigma.quat_dim() + 1;
    let h = 4 * (n - 1);
    let mut blocks = Vec::new();
    for i in 0..r {
        for _ in 0..sigma.p[i] {
            blocks.push(grouped_jordan(sigma.m[i], 4));
        }
    }
    if sigma.s > 0 {
        blocks.push(RatMatrix::zero(4 * sigma.s, 4 * sigma.s));
    }
    let b = RatMatrix::block_diag(&blocks);
    let mut v0 = vec![Rat::zero(); h];
    if ell >= 1 {
        // first coordinate of the leading quadruple of the ell-th slot
        let mut offset = 0;
        for i in 0..ell - 1 {
            offset += if i < r { 4 * sigma.m[i] * sigma.p[i] } else { 0 };
        }
        v0[offset] = crate::rational::rat(1);
    }
    HcxAAData::new(n, Rat::zero(), v0, b)
}

fn assemble_a_unchecked(data: &HcxAAData) -> RatMatrix {
    let h = 4 * (data.n - 1);
    let triple = StandardJTriple::for_algebra(data.n);
    let mut a = RatMatrix::zero(h + 3, h + 3);
    for i in 0..3 {
        a.set(i, i, data.mu.clone());
    }
    for (alpha, j) in [&triple.j1, &triple.j2, &triple.j3].iter().enumerate() {
        let v = j.mul_vec(&data.v0);
        for (row, val) in v.into_iter().enumerate() {
            a.set(3 + row, alpha, val);
        }
    }
    a.set_block(3, 3, &data.b);
    a
}

/// The full `(4n-1) x (4n-1)` adjoint matrix: `mu I_3` on the scalar block,
/// the three structure images of `v_0` as columns, and `B` on the ideal.
pub fn assemble_a(data: &HcxAAData) -> Result<RatMatrix, NilpError> {
    let triple = StandardJTriple::for_algebra(data.n);
    if !triple.commutes_with(&data.b) {
        return Err(NilpError::NotQuaternionLinear);
    }
    Ok(assemble_a_unchecked(data))
}

/// The unique canonical class of a nilpotent defining datum, decided by the
/// kernel-dimension sequence of the assembled matrix.
pub fn identify_class(data: &HcxAAData) -> Result<CanonicalNilpotent, NilpError> {
    if !data.mu.is_zero() {
        return Err(NilpError::MuNotZero);
    }
    let triple = StandardJTriple::for_algebra(data.n);
    if !triple.commutes_with(&data.b) {
        return Err(NilpError::NotQuaternionLinear);
    }
    if !data.b.is_nilpotent() {
        return Err(NilpError::NotNilpotent);
    }
    let v0_zero = data.v0.iter().all(|c| c.is_zero());
    if data.b.is_zero() {
        let sigma = SigmaTuple::new(vec![], vec![], data.n - 1);
        let ell = if v0_zero { 0 } else { 1 };
        return canonical_matrix(&sigma, ell, StructureKind::Hypercomplex);
    }
    let sigma = sigma_tuple_from_real(&data.b).expect("checked above");
    let a = assemble_a_unchecked(data);
    let seq = a.kernel_dim_sequence();
    let max = if sigma.s > 0 { sigma.r() + 1 } else { sigma.r() };
    for ell in 0..=max {
        let cand = canonical_matrix(&sigma, ell, StructureKind::Hypercomplex)?;
        if cand.matrix.kernel_dim_sequence() == seq {
            return Ok(cand);
        }
    }
    unreachable!("every admissible datum matches exactly one canonical class");
}

/// Replace `v_0` by zero when it lies in the image of `B - mu I`, otherwise
/// by its component in the canonical invariant complement of that image.
pub fn normalize_v0(data: &HcxAAData) -> Result<HcxAAData, NilpError> {
    let triple = StandardJTriple::for_algebra(data.n);
    if !triple.commutes_with(&data.b) {
        return Err(NilpError::NotQuaternionLinear);
    }
    let h = 4 * (data.n - 1);
    let m = data.b.sub(&RatMatrix::scalar(h, &data.mu));
    if m.solve(&data.v0).is_some() {
        return Ok(HcxAAData {
            v0: vec![Rat::zero(); h],
            ..data.clone()
        });
    }
    // Greedy invariant complement: quadruples are added while they enlarge
    // the span of the image.
    let image_cols = m.pivot_columns();
    let mut cols: Vec<Vec<Rat>> = image_cols.iter().map(|&j| m.col(j)).collect();
    let base_rank = cols.len();
    let mut w_cols: Vec<usize> = Vec::new();
    for quad in 0..(data.n - 1) {
        if cols.len() == h {
            break;
        }
        let mut trial: Vec<Vec<Rat>> = cols.clone();
        for t in 0..4 {
            let mut e = vec![Rat::zero(); h];
            e[4 * quad + t] = crate::rational::rat(1);
            trial.push(e);
        }
        let mt = RatMatrix::from_rows(trial.clone()).transpose();
        if mt.rank() == cols.len() + 4 {
            for t in 0..4 {
                w_cols.push(4 * quad + t);
            }
            cols = trial;
        }
    }
    debug_assert_eq!(cols.len(), h);
    let full = RatMatrix::from_rows(cols).transpose();
    let coeffs = full.solve(&data.v0).expect("spanning set");
    let mut v0p = vec![Rat::zero(); h];
    for (idx, &col) in w_cols.iter().enumerate() {
        let c = &coeffs[base_rank + idx];
        if !c.is_zero() {
            v0p[col] = c.clone();
        }
    }
    Ok(HcxAAData {
        v0: v0p,
        ..data.clone()
    })
}

/// Decide whether the almost abelian algebra built on a nilpotent matrix of
/// the given Jordan type admits the structure, and produce the canonical
/// witness when it does.
pub fn admissible(jd: &JordanData, kind: StructureKind) -> Result<AdmissibilityVerdict, NilpError> {
    let beta = kind.beta();
    let c = beta - 1;
    let dim = jd.dim();
    if dim % beta != c {
        return Err(NilpError::DimensionMismatch { dim, beta });
    }
    let k = jd.parts.len();
    let no = AdmissibilityVerdict {
        admissible: false,
        condition: None,
        witness: None,
    };

    // Condition II: every multiplicity divisible by beta, d = beta*s + c.
    if jd.parts.iter().all(|&(_, q)| q % beta == 0) && jd.d % beta == c {
        let sigma = SigmaTuple::new(
            jd.parts.iter().map(|&(n, _)| n).collect(),
            jd.parts.iter().map(|&(_, q)| q / beta).collect(),
            (jd.d - c) / beta,
        );
        let w = canonical_matrix(&sigma, 0, kind)?;
        return Ok(AdmissibilityVerdict {
            admissible: true,
            condition: Some(Condition::CondII),
            witness: Some(w.matrix),
        });
    }

    // Condition I: a surplus of c blocks of size two, d = beta*s - c.
    if k >= 1 {
        let (nk, qk) = jd.parts[k - 1];
        if nk == 2
            && qk % beta == c
            && jd.d % beta == 1 % beta
            && (beta != 4 || jd.d % 4 == 1)
            && jd.parts[..k - 1].iter().all(|&(_, q)| q % beta == 0)
        {
            let pk = (qk - c) / beta;
            let mut m: Vec<usize> = jd.parts[..k - 1].iter().map(|&(n, _)| n).collect();
            let mut p: Vec<usize> = jd.parts[..k - 1].iter().map(|&(_, q)| q / beta).collect();
            if pk > 0 {
                m.push(2);
                p.push(pk);
            }
            let s = (jd.d + c) / beta;
            let sigma = SigmaTuple::new(m, p, s);
            let ell = sigma.r() + 1;
            let w = canonical_matrix(&sigma, ell, kind)?;
            return Ok(AdmissibilityVerdict {
                admissible: true,
                condition: Some(Condition::CondI),
                witness: Some(w.matrix),
            });
        }
    }

    // Condition III: adjacent sizes n_{t-1} = n_t + 1 absorbing the surplus.
    for t in 2..=k {
        let (nt1, qt1) = jd.parts[t - 2];
        let (nt, qt) = jd.parts[t - 1];
        if nt1 == nt + 1
            && qt1 % beta == c
            && qt % beta == 1
            && jd.d.is_multiple_of(beta)
            && jd
                .parts
                .iter()
                .enumerate()
                .all(|(i, &(_, q))| i == t - 2 || i == t - 1 || q % beta == 0)
        {
            let mut m = Vec::new();
            let mut p = Vec::new();
            for (i, &(n, q)) in jd.parts.iter().enumerate() {
                if i == t - 2 {
                    let pt1 = (q - c) / beta;
                    if pt1 > 0 {
                        m.push(n);
                        p.push(pt1);
                    }
                } else if i == t - 1 {
                    m.push(n);
                    p.push((q + c) / beta);
                } else {
                    m.push(n);
                    p.push(q / beta);
                }
            }
            let s = jd.d / beta;
            let sigma = SigmaTuple::new(m, p, s);
            let ell = sigma.m.iter().position(|&x| x == nt).unwrap() + 1;
            let w = canonical_matrix(&sigma, ell, kind)?;
            return Ok(AdmissibilityVerdict {
                admissible: true,
                condition: Some(Condition::CondIII { t }),
                witness: Some(w.matrix),
            });
        }
    }

    Ok(no)
}

/// All partition tuples with `sum m_i p_i + s = q` and at least one block.
pub fn enumerate_sigma_tuples(q: usize) -> Vec<SigmaTuple> {
    let mut out = Vec::new();
    fn rec(
        remaining: usize,
        max_size: usize,
        m: &mut Vec<usize>,
        p: &mut Vec<usize>,
        out: &mut Vec<SigmaTuple>,
    ) {
        if !m.is_empty() {
            out.push(SigmaTuple::new(m.clone(), p.clone(), remaining));
        }
        for size in (2..=max_size.min(remaining)).rev() {
            for mult in 1..=remaining / size {
                m.push(size);
                p.push(mult);
                rec(remaining - size * mult, size - 1, m, p, out);
                m.pop();
                p.pop();
            }
        }
    }
    rec(q, q, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Per-tuple class counts plus the single class with trivial block part.
pub struct ClassCount {
    pub total: usize,
    pub by_tuple: Vec<(SigmaTuple, usize)>,
}

/// Number of isomorphism classes of nilpotent almost abelian algebras of
/// dimension `beta * n` admitting the structure. Each partition tuple
/// contributes `r + 2` classes, one fewer when it has no zero part, and the
/// trivial partition contributes exactly one.
pub fn count_classes(n: usize, _kind: StructureKind) -> ClassCount {
    assert!(n >= 2);
    let tuples = enumerate_sigma_tuples(n - 1);
    let by_tuple: Vec<(SigmaTuple, usize)> = tuples
        .into_iter()
        .map(|t| {
            let classes = t.r() + 2 - usize::from(t.s == 0);
            (t, classes)
        })
        .collect();
    let total = 1 + by_tuple.iter().map(|(_, c)| c).sum::<usize>();
    ClassCount { total, by_tuple }
}

/// Number of classes that are exactly 2-step nilpotent.
pub fn count_two_step(n: usize, kind: StructureKind) -> usize {
    assert!(n >= 2);
    let mut count = 1; // the trivial-block class
    for t in enumerate_sigma_tuples(n - 1) {
        let max = if t.s > 0 { t.r() + 1 } else { t.r() };
        for ell in 0..=max {
            let c = canonical_matrix(&t, ell, kind).unwrap();
            if c.step() == 2 {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::conjugate_test;
    use crate::quaternion::real_jordan_quad;
    use crate::rational::rat;

    fn sig(m: &[usize], p: &[usize], s: usize) -> SigmaTuple {
        SigmaTuple::new(m.to_vec(), p.to_vec(), s)
    }

    #[test]
    fn grouped_jordan_matches_quaternionic_form() {
        for m in 2..=4 {
            assert_eq!(grouped_jordan(m, 4), real_jordan_quad(m));
        }
    }

    #[test]
    fn assemble_matches_n_block() {
        // n = 2, mu = 0, v0 = first basis vector, B = 0: exactly the s = 1
        // rank-three canonical matrix
        let data = HcxAAData::new(
            2,
            Rat::zero(),
            vec![rat(1), rat(0), rat(0), rat(0)],
            RatMatrix::zero(4, 4),
        )
        .unwrap();
        let a = assemble_a(&data).unwrap();
        assert_eq!(a, n_block(1, 4));

        let idn = HcxAAData::new(
            2,
            rat(1),
            vec![rat(0); 4],
            RatMatrix::identity(4),
        )
        .unwrap();
        assert_eq!(assemble_a(&idn).unwrap(), RatMatrix::identity(7));

        // n = 3, v0 = 0, B = quad J_2: the ell = 0 canonical form
        let data = HcxAAData::new(3, Rat::zero(), vec![rat(0); 8], real_jordan_quad(2)).unwrap();
        let c = canonical_matrix(&sig(&[2], &[1], 0), 0, StructureKind::Hypercomplex).unwrap();
        assert_eq!(assemble_a(&data).unwrap(), c.matrix);
    }

    #[test]
    fn assemble_rejects_non_commuting() {
        let data = HcxAAData::new(3, Rat::zero(), vec![rat(0); 8], RatMatrix::jordan_block(8)).unwrap();
        assert!(matches!(assemble_a(&data), Err(NilpError::NotQuaternionLinear)));
    }

    #[test]
    fn canonical_matrix_shapes() {
        // A_1 for (1, [2], [1], 0) is 11 x 11 with kernel sequence 4, 8, 11
        let c = canonical_matrix(&sig(&[2], &[1], 0), 1, StructureKind::Hypercomplex).unwrap();
        assert_eq!(c.matrix.rows(), 11);
        assert_eq!(c.matrix.kernel_dim_sequence(), vec![4, 8, 11]);
        assert_eq!(c.step(), 3);

        // N with s = n-1 squares to zero
        let c = canonical_matrix(&sig(&[], &[], 3), 1, StructureKind::Hypercomplex).unwrap();
        assert!(matches!(c.kind, CanonicalKind::N { s: 3 }));
        assert!(c.matrix.pow(2).is_zero());
        assert_eq!(c.step(), 2);

        // complex side: A_2 for (1, [2], [1], 1) is J_2 + N of size 7
        let c = canonical_matrix(&sig(&[2], &[1], 1), 2, StructureKind::Complex).unwrap();
        assert_eq!(c.matrix.rows(), 7);
        let expected = RatMatrix::block_diag(&[grouped_jordan(2, 2), n_block(1, 2)]);
        assert_eq!(c.matrix, expected);

        // index out of range: ell = r+1 needs s > 0
        assert!(matches!(
            canonical_matrix(&sig(&[2], &[1], 0), 2, StructureKind::Hypercomplex),
            Err(NilpError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn canonical_data_is_conjugate_to_canonical_matrix() {
        for (t, max) in [
            (sig(&[2], &[1], 0), 1),
            (sig(&[2], &[1], 1), 2),
            (sig(&[3], &[1], 0), 1),
            (sig(&[3, 2], &[1, 1], 1), 3),
        ] {
            for ell in 0..=max {
                let data = canonical_data(&t, ell).unwrap();
                let a = assemble_a(&data).unwrap();
                let c = canonical_matrix(&t, ell, StructureKind::Hypercomplex).unwrap();
                assert!(
                    conjugate_test(&a, &c.matrix),
                    "tuple {t} ell {ell} should assemble conjugate"
                );
            }
        }
    }

    #[test]
    fn identify_class_examples() {
        // B = quad J_2, v0 at the block top: the 3-step class
        let mut v0 = vec![rat(0); 8];
        v0[0] = rat(1);
        let data = HcxAAData::new(3, Rat::zero(), v0, real_jordan_quad(2)).unwrap();
        let c = identify_class(&data).unwrap();
        assert_eq!(
            c.kind,
            CanonicalKind::A { sigma: sig(&[2], &[1], 0), ell: 1 }
        );

        // v0 = 0 gives ell = 0
        let data = HcxAAData::new(3, Rat::zero(), vec![rat(0); 8], real_jordan_quad(2)).unwrap();
        let c = identify_class(&data).unwrap();
        assert_eq!(
            c.kind,
            CanonicalKind::A { sigma: sig(&[2], &[1], 0), ell: 0 }
        );

        // B = quad J_2 + 0_4 at n = 4, v0 inside the zero part: ell = r+1
        let b = RatMatrix::block_diag(&[real_jordan_quad(2), RatMatrix::zero(4, 4)]);
        let mut v0 = vec![rat(0); 12];
        v0[8] = rat(1);
        let data = HcxAAData::new(4, Rat::zero(), v0, b).unwrap();
        let c = identify_class(&data).unwrap();
        assert_eq!(
            c.kind,
            CanonicalKind::A { sigma: sig(&[2], &[1], 1), ell: 2 }
        );
        // cross-check against the canonical matrix by conjugacy
        let a = assemble_a(&data).unwrap();
        assert!(conjugate_test(&a, &c.matrix));

        // B = 0, v0 nonzero: the rank-three class
        let mut v0 = vec![rat(0); 8];
        v0[3] = rat(2);
        let data = HcxAAData::new(3, Rat::zero(), v0, RatMatrix::zero(8, 8)).unwrap();
        assert!(matches!(identify_class(&data).unwrap().kind, CanonicalKind::N { s: 2 }));

        // B = 0, v0 = 0: abelian
        let data = HcxAAData::new(3, Rat::zero(), vec![rat(0); 8], RatMatrix::zero(8, 8)).unwrap();
        assert!(matches!(identify_class(&data).unwrap().kind, CanonicalKind::Abelian));
    }

    #[test]
    fn normalize_v0_cases() {
        // mu = 1, B = 0: image of B - I is everything, v0 dies
        let data = HcxAAData::new(
            2,
            rat(1),
            vec![rat(1), rat(0), rat(0), rat(0)],
            RatMatrix::zero(4, 4),
        )
        .unwrap();
        assert!(normalize_v0(&data).unwrap().v0.iter().all(|c| c.is_zero()));

        // mu = 0, B = quad J_2, v0 = B x stays in the image
        let b = real_jordan_quad(2);
        let x: Vec<Rat> = (0..8).map(|i| rat(i as i64 - 3)).collect();
        let data = HcxAAData::new(3, Rat::zero(), b.mul_vec(&x), b.clone()).unwrap();
        assert!(normalize_v0(&data).unwrap().v0.iter().all(|c| c.is_zero()));

        // mu = 0, B = 0: nothing moves
        let mut v0 = vec![rat(0); 8];
        v0[5] = rat(3);
        let data = HcxAAData::new(3, Rat::zero(), v0.clone(), RatMatrix::zero(8, 8)).unwrap();
        assert_eq!(normalize_v0(&data).unwrap().v0, v0);

        // component extraction: image of quad J_2 is the second quadruple,
        // so only the leading-quad part of v0 survives
        let mut v0 = vec![rat(0); 8];
        v0[0] = rat(2);
        v0[4] = rat(5);
        let data = HcxAAData::new(3, Rat::zero(), v0, real_jordan_quad(2)).unwrap();
        let out = normalize_v0(&data).unwrap();
        let mut expected = vec![rat(0); 8];
        expected[0] = rat(2);
        assert_eq!(out.v0, expected);
    }

    #[test]
    fn normalize_v0_preserves_class() {
        use crate::quaternion::{sigma_inv, QuatMatrix, Quaternion};
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(99);
        let mut random_q = |rng: &mut StdRng| {
            Quaternion::new(
                rat(rng.gen_range(-2..=2)),
                rat(rng.gen_range(-2..=2)),
                rat(rng.gen_range(-2..=2)),
                rat(rng.gen_range(-2..=2)),
            )
        };
        for _ in 0..10 {
            // conjugated nilpotent block with a random translation vector
            let base = RatMatrix::block_diag(&[grouped_jordan(2, 4), RatMatrix::zero(4, 4)]);
            let p = loop {
                let cand = QuatMatrix::from_rows(
                    (0..3)
                        .map(|_| (0..3).map(|_| random_q(&mut rng)).collect())
                        .collect(),
                );
                let real = sigma_inv(&cand);
                if real.rank() == 12 {
                    break real;
                }
            };
            let b = p.mul(&base).mul(&p.inverse().unwrap());
            let v0: Vec<Rat> = (0..12).map(|_| rat(rng.gen_range(-2..=2))).collect();
            let data = HcxAAData::new(4, Rat::zero(), v0, b).unwrap();
            let normalized = normalize_v0(&data).unwrap();
            // same algebra up to isomorphism: identical canonical class
            let before = identify_class(&data).unwrap();
            let after = identify_class(&normalized).unwrap();
            assert_eq!(before.kind, after.kind);
            // and the normalized vector really lies in the chosen complement
            let m = normalized.b.sub(&RatMatrix::scalar(12, &normalized.mu));
            if normalized.v0.iter().any(|c| !c.is_zero()) {
                assert!(m.solve(&normalized.v0).is_none());
            }
        }
    }

    #[test]
    fn admissible_examples() {
        let kind = StructureKind::Hypercomplex;
        // three blocks of size two plus a point: the rank-three class
        let jd = JordanData::new(vec![(2, 3)], 1).unwrap();
        let v = admissible(&jd, kind).unwrap();
        assert!(v.admissible);
        assert_eq!(v.condition, Some(Condition::CondI));
        let w = v.witness.unwrap();
        assert!(conjugate_test(&w, &jd.matrix()));

        // j_3^3 + j_2 in dimension 11
        let jd = JordanData::new(vec![(3, 3), (2, 1)], 0).unwrap();
        let v = admissible(&jd, kind).unwrap();
        assert!(v.admissible);
        assert_eq!(v.condition, Some(Condition::CondIII { t: 2 }));
        assert!(conjugate_test(&v.witness.unwrap(), &jd.matrix()));

        // complex Heisenberg: j_2 + 0 in dimension 3
        let jd = JordanData::new(vec![(2, 1)], 1).unwrap();
        let v = admissible(&jd, StructureKind::Complex).unwrap();
        assert!(v.admissible);
        assert_eq!(v.condition, Some(Condition::CondI));

        // q_1 = 2 fails every pattern in dimension 7
        let jd = JordanData::new(vec![(2, 2)], 3).unwrap();
        let v = admissible(&jd, kind).unwrap();
        assert!(!v.admissible && v.condition.is_none() && v.witness.is_none());

        // wrong ambient dimension
        let jd = JordanData::new(vec![(2, 1)], 0).unwrap();
        assert!(matches!(
            admissible(&jd, kind),
            Err(NilpError::DimensionMismatch { .. })
        ));

        // zero matrix: abelian, admissible through the plain congruence
        let jd = JordanData::new(vec![], 7).unwrap();
        let v = admissible(&jd, kind).unwrap();
        assert!(v.admissible);
        assert_eq!(v.condition, Some(Condition::CondII));
        assert!(v.witness.unwrap().is_zero());
    }

    #[test]
    fn class_counts() {
        assert_eq!(count_classes(3, StructureKind::Hypercomplex).total, 3);
        assert_eq!(count_classes(4, StructureKind::Hypercomplex).total, 6);
        for n in 3..=8 {
            assert_eq!(count_two_step(n, StructureKind::Hypercomplex), n - 1);
        }
    }

    #[test]
    fn unique_deep_class_per_tuple() {
        for n in 2..=6 {
            for t in enumerate_sigma_tuples(n - 1) {
                let max = if t.s > 0 { t.r() + 1 } else { t.r() };
                let deep: Vec<usize> = (0..=max)
                    .filter(|&ell| {
                        canonical_matrix(&t, ell, StructureKind::Hypercomplex)
                            .unwrap()
                            .step()
                            == t.m[0] + 1
                    })
                    .collect();
                assert_eq!(deep, vec![1], "tuple {t}");
            }
        }
    }

    #[test]
    fn step_bound() {
        for n in 2..=6 {
            for t in enumerate_sigma_tuples(n - 1) {
                let max = if t.s > 0 { t.r() + 1 } else { t.r() };
                for ell in 0..=max {
                    let c = canonical_matrix(&t, ell, StructureKind::Hypercomplex).unwrap();
                    assert!(c.step() <= n);
                    // the step is the nilpotency index of the matrix
                    assert_eq!(c.matrix.kernel_dim_sequence().len(), c.step());
                }
            }
        }
    }

    #[test]
    fn jordan_data_round_trip() {
        let jd = JordanData::new(vec![(4, 2), (2, 3)], 5).unwrap();
        assert_eq!(JordanData::of_nilpotent(&jd.matrix()).unwrap(), jd);
        assert!(JordanData::of_nilpotent(&RatMatrix::identity(3)).is_none());
    }
}
