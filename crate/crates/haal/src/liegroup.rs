//! Computational core for simply connected almost abelian Lie groups
//! `R x_phi R^d` with `phi(t) = e^{tA}`: the exponential map through the
//! entire function `Phi(x) = (e^x - 1)/x`, exact invertibility of `Phi(tA)`
//! for all `t`, construction of group isomorphisms from scalar conjugations
//! of the defining matrices, verification of integer-conjugacy lattice
//! witnesses, and exact structure checks on hypercomplex defining data.

use crate::intpoly::{squarefree_decomposition, sturm_count, Bound, IntPoly};
use crate::matrix::{conjugate_test, RatMatrix};
use crate::nilpotent::HcxAAData;
use crate::numeric::{complex_roots, det64, expm, inverse, solve, Mat64};
use crate::quaternion::StandardJTriple;
use crate::rational::{rat, rat_to_f64, Rat};
use crate::ratpoly::RatPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieGroupError {
    NotConjugate,
    HeisenbergExcluded,
    NoAnticommutingIntertwiner,
    SingularConjugator,
}

impl fmt::Display for LieGroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieGroupError::NotConjugate => write!(f, "matrices are not conjugate at the given scalar"),
            LieGroupError::HeisenbergExcluded => {
                write!(f, "Heisenberg-type algebras are outside this construction")
            }
            LieGroupError::NoAnticommutingIntertwiner => {
                write!(f, "no invertible map anticommutes with the structure matrix")
            }
            LieGroupError::SingularConjugator => write!(f, "conjugator must be invertible"),
        }
    }
}

impl std::error::Error for LieGroupError {}

/// `Phi(x) = (e^x - 1)/x`, extended by `Phi(0) = 1`.
pub fn phi_scalar(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.exp_m1() / x
    }
}

/// Exact value of `Phi(tA)` for nilpotent `A` and rational `t`: the series
/// terminates at the nilpotency index.
pub fn phi_matrix_exact(t: &Rat, a: &RatMatrix) -> Option<RatMatrix> {
    if !a.is_nilpotent() {
        return None;
    }
    let d = a.rows();
    let ta = a.scale(t);
    let mut out = RatMatrix::identity(d);
    let mut power = RatMatrix::identity(d);
    let mut fact = BigInt::one();
    for k in 1..=d {
        power = power.mul(&ta);
        if power.is_zero() {
            break;
        }
        fact *= BigInt::from(k + 1);
        out = out.add(&power.scale(&Rat::new(BigInt::one(), fact.clone())));
    }
    Some(out)
}

/// Exact `e^{tA}` for nilpotent `A` and rational `t`.
pub fn exp_matrix_exact(t: &Rat, a: &RatMatrix) -> Option<RatMatrix> {
    if !a.is_nilpotent() {
        return None;
    }
    let d = a.rows();
    let ta = a.scale(t);
    let mut out = RatMatrix::identity(d);
    let mut power = RatMatrix::identity(d);
    let mut fact = BigInt::one();
    for k in 1..=d {
        power = power.mul(&ta);
        if power.is_zero() {
            break;
        }
        fact *= BigInt::from(k);
        out = out.add(&power.scale(&Rat::new(BigInt::one(), fact.clone())));
    }
    Some(out)
}

/// Numeric `Phi(tA)`: `(e^{tA} - I)(tA)^{-1}` when `tA` is invertible
/// (decided exactly on the rational input), otherwise a truncated series
/// with the tail kept below machine precision.
pub fn phi_matrix(t: f64, a: &RatMatrix) -> Mat64 {
    let d = a.rows();
    let af = Mat64::from_rat(a);
    let ta = af.scale(t);
    if t != 0.0 && a.rank() == d {
        let e = expm(&ta);
        let num = e.sub(&Mat64::identity(d));
        return solve(&ta, &num).expect("tA invertible");
    }
    // series with rigorous tail bound: the remainder after K terms is at
    // most ||tA||^{K+1} e^{||tA||} / (K+2)!
    let norm = ta.norm_1();
    let mut out = Mat64::identity(d);
    let mut power = Mat64::identity(d);
    let mut fact = 1.0f64;
    let mut bound = norm.exp();
    let mut k = 0usize;
    loop {
        k += 1;
        power = power.mul(&ta);
        fact *= (k + 1) as f64;
        out = out.add(&power.scale(1.0 / fact));
        bound *= norm / (k + 2) as f64;
        if bound < 1e-17 || k > 200 {
            break;
        }
    }
    out
}

/// Exact test: is `Phi(tA)` invertible for every real `t`? Equivalently,
/// the characteristic polynomial has no purely imaginary nonzero root,
/// decided by a Sturm count on the even part of
/// `gcd(p(x), (-1)^d p(-x))`.
pub fn phi_invertible_all_t(a: &RatMatrix) -> bool {
    let d = a.rows();
    let p = a.char_poly();
    let mut q = p.compose_neg();
    if d % 2 == 1 {
        q = q.neg();
    }
    let g = p.gcd(&q);
    let stripped = g.strip_zero_root();
    if stripped.is_constant() {
        return true;
    }
    // symmetric root set with nonzero constant term: even polynomial
    let coeffs = stripped.coeffs();
    debug_assert!(coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero()));
    let even: Vec<Rat> = coeffs.iter().step_by(2).cloned().collect();
    let gt = IntPoly::from_ratpoly_primitive(&RatPoly::new(even));
    // a negative real root y of the even part means x^2 = y for a purely
    // imaginary pair of roots of p
    let negatives = sturm_count(&gt, &Bound::NegInf, &Bound::Finite(Rat::zero()))
        .expect("nonzero polynomial");
    let at_zero = usize::from(gt.eval_rat(&Rat::zero()).is_zero());
    negatives - at_zero == 0
}

/// Group exponential `exp(t, v) = (t, Phi(tA) v)` in double precision.
pub fn exp_group(t: f64, v: &[f64], a: &RatMatrix) -> (f64, Vec<f64>) {
    (t, phi_matrix(t, a).mul_vec(v))
}

/// Exact group exponential for nilpotent rational data.
pub fn exp_group_exact(t: &Rat, v: &[Rat], a: &RatMatrix) -> Option<(Rat, Vec<Rat>)> {
    let phi = phi_matrix_exact(t, a)?;
    Some((t.clone(), phi.mul_vec(v)))
}

/// Inverse of the group exponential, defined when `Phi(tA)` is invertible.
pub fn log_group(t: f64, w: &[f64], a: &RatMatrix) -> Option<(f64, Vec<f64>)> {
    let phi = phi_matrix(t, a);
    let inv = inverse(&phi)?;
    Some((t, inv.mul_vec(w)))
}

/// Group product in `R x_phi R^d`: `(t,v)(s,w) = (t+s, v + e^{tA} w)`.
pub fn group_mul(a: &RatMatrix, x: (f64, &[f64]), y: (f64, &[f64])) -> (f64, Vec<f64>) {
    let e = expm(&Mat64::from_rat(a).scale(x.0));
    let moved = e.mul_vec(y.1);
    (
        x.0 + y.0,
        x.1.iter().zip(moved).map(|(p, q)| p + q).collect(),
    )
}

/// Defect of the one-parameter subgroup identity at `(t0, v0)` and times
/// `(t, s)`, exact for nilpotent rational data. Zero when the identity
/// holds.
pub fn one_parameter_defect_exact(
    a: &RatMatrix,
    t0: &Rat,
    v0: &[Rat],
    t: &Rat,
    s: &Rat,
) -> Option<Vec<Rat>> {
    let ts = t + s;
    let lhs_phi = phi_matrix_exact(&(&ts * t0), a)?;
    let lhs: Vec<Rat> = lhs_phi.mul_vec(v0).into_iter().map(|x| x * &ts).collect();
    let rhs_a = phi_matrix_exact(&(t * t0), a)?;
    let rhs_b = exp_matrix_exact(&(t * t0), a)?.mul(&phi_matrix_exact(&(s * t0), a)?);
    let part_a: Vec<Rat> = rhs_a.mul_vec(v0).into_iter().map(|x| x * t).collect();
    let part_b: Vec<Rat> = rhs_b.mul_vec(v0).into_iter().map(|x| x * s).collect();
    Some(
        lhs.into_iter()
            .zip(part_a.into_iter().zip(part_b))
            .map(|(l, (pa, pb))| l - pa - pb)
            .collect(),
    )
}

/// Numeric counterpart: maximum absolute defect of the same identity.
pub fn one_parameter_defect(a: &RatMatrix, t0: f64, v0: &[f64], t: f64, s: f64) -> f64 {
    let af = Mat64::from_rat(a);
    let lhs = phi_matrix_scaled(&af, (t + s) * t0).mul_vec(v0);
    let ra = phi_matrix_scaled(&af, t * t0).mul_vec(v0);
    let eb = expm(&af.scale(t * t0));
    let rb = eb.mul_vec(&phi_matrix_scaled(&af, s * t0).mul_vec(v0));
    lhs.iter()
        .zip(ra.iter().zip(rb.iter()))
        .map(|(l, (x, y))| ((t + s) * l - t * x - s * y).abs())
        .fold(0.0, f64::max)
}

fn phi_matrix_scaled(af: &Mat64, t: f64) -> Mat64 {
    // series fallback works for every argument at f64 accuracy
    let d = af.rows();
    let ta = af.scale(t);
    let norm = ta.norm_1();
    let mut out = Mat64::identity(d);
    let mut power = Mat64::identity(d);
    let mut fact = 1.0f64;
    let mut bound = norm.exp();
    let mut k = 0usize;
    loop {
        k += 1;
        power = power.mul(&ta);
        fact *= (k + 1) as f64;
        out = out.add(&power.scale(1.0 / fact));
        bound *= norm / (k + 2) as f64;
        if bound < 1e-17 || k > 400 {
            break;
        }
    }
    out
}

/// `rank A = 1` and `A^2 = 0`: the almost abelian presentations of the
/// Heisenberg algebra times an abelian factor, which have non-unique
/// codimension-one ideals and are excluded from the isomorphism formula.
pub fn detect_heisenberg(a: &RatMatrix) -> bool {
    a.rank() == 1 && a.pow(2).is_zero()
}

fn perfect_nth_root(x: &BigInt, n: usize) -> Option<BigInt> {
    if x.is_zero() {
        return Some(BigInt::zero());
    }
    let neg = x.is_negative();
    if neg && n.is_multiple_of(2) {
        return None;
    }
    let mag = x.abs();
    let root = mag.nth_root(n as u32);
    if num_traits::pow::pow(root.clone(), n) == mag {
        Some(if neg { -root } else { root })
    } else {
        None
    }
}

fn rational_roots_of_power(ratio: &Rat, e: usize) -> Vec<Rat> {
    let mut out = Vec::new();
    if let (Some(n), Some(d)) = (
        perfect_nth_root(ratio.numer(), e),
        perfect_nth_root(ratio.denom(), e),
    ) {
        let c = Rat::new(n, d);
        if e.is_multiple_of(2) {
            if ratio.is_positive() {
                out.push(c.clone());
                out.push(-c);
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// Invertible solution of `a X = X b`, if one exists. The solution space is
/// computed exactly; an invertible point is found by sampling small integer
/// combinations of its basis.
pub fn find_intertwiner(a: &RatMatrix, b: &RatMatrix) -> Option<RatMatrix> {
    find_scaled_intertwiner(a, b, false)
}

fn find_scaled_intertwiner(a: &RatMatrix, b: &RatMatrix, anti: bool) -> Option<RatMatrix> {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let d = a.rows();
    // linear operator X -> aX -+ Xb on matrix space, row-major unknowns
    let mut sys = RatMatrix::zero(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let row = i * d + j;
            for k in 0..d {
                // a_{ik} X_{kj}
                let cur = sys.get(row, k * d + j) + a.get(i, k);
                sys.set(row, k * d + j, cur);
            }
            for l in 0..d {
                // -+ X_{il} b_{lj}
                let coeff = if anti {
                    b.get(l, j).clone()
                } else {
                    -b.get(l, j)
                };
                let cur = sys.get(row, i * d + l) + coeff;
                sys.set(row, i * d + l, cur);
            }
        }
    }
    let basis = sys.kernel_basis();
    if basis.is_empty() {
        return None;
    }
    let to_matrix = |v: &[Rat]| {
        let mut m = RatMatrix::zero(d, d);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, v[i * d + j].clone());
            }
        }
        m
    };
    for v in &basis {
        let m = to_matrix(v);
        if m.rank() == d {
            return Some(m);
        }
    }
    let mut rng = StdRng::seed_from_u64(0x6c69_6e6b);
    for attempt in 0..4000 {
        let range = 1 + attempt / 500;
        let mut combo = vec![Rat::zero(); d * d];
        for v in &basis {
            let c = rat(rng.gen_range(-(range as i64)..=range as i64));
            if c.is_zero() {
                continue;
            }
            for (slot, x) in combo.iter_mut().zip(v) {
                *slot += &c * x;
            }
        }
        let m = to_matrix(&combo);
        if m.rank() == d {
            return Some(m);
        }
    }
    None
}

/// Scalar-conjugacy decision: a nonzero rational `c` and invertible `P`
/// with `A1 = c P A2 P^{-1}`, when they exist over the rationals.
///
/// Nilpotent pairs take `c = 1`. Otherwise the candidate scalars come from
/// the lowest nonzero characteristic coefficients, which scale by a power
/// of `c`; only rational roots are considered, so an irrational scaling
/// reports as absent.
pub fn ad_conjugate_iso(a1: &RatMatrix, a2: &RatMatrix) -> Option<(Rat, RatMatrix)> {
    if a1.rows() != a2.rows() || !a1.is_square() || !a2.is_square() {
        return None;
    }
    let d = a1.rows();
    if a1.is_zero() && a2.is_zero() {
        return Some((Rat::one(), RatMatrix::identity(d)));
    }
    if a1.is_zero() != a2.is_zero() {
        return None;
    }
    let p1 = a1.char_poly();
    let p2 = a2.char_poly();
    let xd = RatPoly::monomial(Rat::one(), d);
    if p1 == xd && p2 == xd {
        if conjugate_test(a1, a2) {
            return find_intertwiner(a1, a2).map(|p| (Rat::one(), p));
        }
        return None;
    }
    if (p1 == xd) != (p2 == xd) {
        return None;
    }
    let k1 = p1.order_at_zero();
    let k2 = p2.order_at_zero();
    if k1 != k2 {
        return None;
    }
    let e = d - k1;
    let ratio = p1.coeff(k1) / p2.coeff(k1);
    for c in rational_roots_of_power(&ratio, e) {
        let ca2 = a2.scale(&c);
        if conjugate_test(a1, &ca2) {
            if let Some(p) = find_intertwiner(a1, &ca2) {
                return Some((c, p));
            }
        }
    }
    None
}

/// A Lie group isomorphism `F(t, v) = (mu t, L v + t Phi(mu t A2) v0)`
/// between `R x_{A1} R^d` and `R x_{A2} R^d`.
pub struct LieIso {
    pub mu: Rat,
    pub l: RatMatrix,
    pub v0: Vec<f64>,
    pub a2: RatMatrix,
    /// Largest homomorphism defect observed over the random sample.
    pub max_defect: f64,
}

impl LieIso {
    pub fn apply(&self, t: f64, v: &[f64]) -> (f64, Vec<f64>) {
        let mu = rat_to_f64(&self.mu);
        let lf = Mat64::from_rat(&self.l);
        let phi = phi_matrix_scaled(&Mat64::from_rat(&self.a2), mu * t);
        let shift = phi.mul_vec(&self.v0);
        let lv = lf.mul_vec(v);
        (
            mu * t,
            lv.iter().zip(shift).map(|(x, s)| x + t * s).collect(),
        )
    }
}

/// Build the isomorphism attached to a verified scalar conjugation
/// `A1 = c P A2 P^{-1}` with target scalar `mu = sign * c`. The linear part
/// satisfies `(L P) A2 = sign * A2 (L P)`; for `sign = -1` an invertible
/// anticommuting intertwiner must exist.
pub fn lie_iso_build(
    a1: &RatMatrix,
    a2: &RatMatrix,
    c: &Rat,
    p: &RatMatrix,
    sign: i8,
    v0: &[f64],
) -> Result<LieIso, LieGroupError> {
    let pinv = p.inverse().ok_or(LieGroupError::SingularConjugator)?;
    if &p.mul(&a2.scale(c)).mul(&pinv) != a1 {
        return Err(LieGroupError::NotConjugate);
    }
    if detect_heisenberg(a1) || detect_heisenberg(a2) {
        return Err(LieGroupError::HeisenbergExcluded);
    }
    let l = if sign >= 0 {
        pinv
    } else {
        let m = find_scaled_intertwiner(a2, a2, true)
            .ok_or(LieGroupError::NoAnticommutingIntertwiner)?;
        m.mul(&pinv)
    };
    let mu = if sign >= 0 { c.clone() } else { -c };
    let mut iso = LieIso {
        mu,
        l,
        v0: v0.to_vec(),
        a2: a2.clone(),
        max_defect: 0.0,
    };
    iso.max_defect = homomorphism_defect(a1, &iso, 100);
    Ok(iso)
}

/// Max defect of `F(xy) = F(x)F(y)` over random group elements.
pub fn homomorphism_defect(a1: &RatMatrix, iso: &LieIso, samples: usize) -> f64 {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let d = a1.rows();
    let mut rng = StdRng::seed_from_u64(0x686f6d);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let rv = |rng: &mut StdRng| -> Vec<f64> {
            (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect()
        };
        let (t, v) = (rng.gen_range(-1.5..1.5), rv(&mut rng));
        let (s, w) = (rng.gen_range(-1.5..1.5), rv(&mut rng));
        let prod = group_mul(a1, (t, &v), (s, &w));
        let lhs = iso.apply(prod.0, &prod.1);
        let fx = iso.apply(t, &v);
        let fy = iso.apply(s, &w);
        let rhs = group_mul(&iso.a2, (fx.0, &fx.1), (fy.0, &fy.1));
        // relative defect: the group law has exponential range
        let rel = |x: f64, y: f64| (x - y).abs() / f64::max(1.0, f64::max(x.abs(), y.abs()));
        worst = worst.max(rel(lhs.0, rhs.0));
        for (x, y) in lhs.1.iter().zip(rhs.1.iter()) {
            worst = worst.max(rel(*x, *y));
        }
    }
    worst
}

/// Necessary condition for a lattice in the assembled hypercomplex group:
/// scalar part zero and traceless quaternionic block.
pub fn lattice_necessary(mu: &Rat, b: &RatMatrix) -> bool {
    mu.is_zero() && b.trace().is_zero()
}

/// An integer-conjugacy witness for `e^{t0 A}`.
pub struct LatticeWitness {
    pub t0: f64,
    pub e: RatMatrix,
    pub conjugator: Option<Mat64>,
}

#[derive(Debug, Clone)]
pub struct BockReport {
    pub tol: f64,
    pub char_poly_defect: f64,
    pub structure_ok: bool,
    pub conjugator_defect: Option<f64>,
}

impl BockReport {
    pub fn accepted(&self) -> bool {
        self.char_poly_defect <= self.tol
            && self.structure_ok
            && self.conjugator_defect.is_none_or(|d| d <= self.tol)
    }
}

/// Verify a lattice witness: the characteristic polynomial of the numeric
/// period map `e^{t0 A}` must match the exact one of `E` coefficientwise,
/// and the two matrices must share their Jordan structure, compared through
/// thresholded ranks of powers of each exact squarefree factor. A supplied
/// conjugator is checked entrywise. `E` must be integer with determinant 1.
pub fn bock_verify(a: &RatMatrix, w: &LatticeWitness, tol: f64) -> BockReport {
    bock_verify_numeric(&Mat64::from_rat(a), w, tol)
}

/// Same check with a numeric structure matrix (for witnesses whose defining
/// data is itself irrational).
pub fn bock_verify_numeric(a: &Mat64, w: &LatticeWitness, tol: f64) -> BockReport {
    assert_eq!(
        w.e.det(),
        Rat::one(),
        "witness matrix must have determinant one"
    );
    let d = a.rows();
    assert_eq!(w.e.rows(), d, "witness size must match");
    let m = expm(&a.scale(w.t0));
    let pe = w.e.char_poly();
    // Characteristic polynomials compared through stable point evaluations:
    // det(xI - M) by LU against the exact value of p_E, relative per point.
    // Both are monic of degree d, so agreement at d+1 points pins them.
    let mut defect: f64 = 0.0;
    for x in 0..=d {
        let xf = x as f64;
        let shifted = Mat64::identity(d).scale(xf).sub(&m);
        let dm = det64(&shifted);
        let de = rat_to_f64(&pe.eval(&rat(x as i64)));
        defect = defect.max((dm - de).abs() / f64::max(1.0, de.abs()));
    }

    let pe_int = IntPoly::from_ratpoly(&pe).expect("integer matrix has integer char poly");
    let mut structure_ok = true;
    for (idx, factor) in squarefree_decomposition(&pe_int).iter().enumerate() {
        let mult = idx + 1;
        if factor.degree().is_none_or(|dg| dg == 0) {
            continue;
        }
        let coeffs: Vec<f64> = factor
            .coeffs()
            .iter()
            .map(|c| rat_to_f64(&Rat::from_integer(c.clone())))
            .collect();
        let fm = m.poly_at(&coeffs);
        let fe = w.e.poly_at(&factor.to_ratpoly());
        let mut fm_pow = Mat64::identity(d);
        let mut fe_pow = RatMatrix::identity(d);
        for _ in 1..=mult {
            fm_pow = fm_pow.mul(&fm);
            fe_pow = fe_pow.mul(&fe);
            let thresh = tol * d as f64 * f64::max(1.0, fm_pow.norm_max());
            if fm_pow.rank_with_threshold(thresh) != fe_pow.rank() {
                structure_ok = false;
            }
        }
    }

    let conjugator_defect = w.conjugator.as_ref().map(|p| {
        match inverse(p) {
            Some(pinv) => {
                let lhs = pinv.mul(&m).mul(p);
                let diff = lhs.sub(&Mat64::from_rat(&w.e));
                diff.norm_max()
            }
            None => f64::INFINITY,
        }
    });

    BockReport {
        tol,
        char_poly_defect: defect,
        structure_ok,
        conjugator_defect,
    }
}

/// Exact structure check on defining data: the extended triple must square
/// to minus the identity, satisfy the quaternion relations, and have
/// vanishing torsion tensor on the bracket defined by the assembled matrix.
/// Data whose block fails to commute with the triple comes out false.
pub fn verify_hypercomplex_structure(data: &HcxAAData) -> bool {
    let n = data.n;
    let dim = 4 * n;
    let h_triple = StandardJTriple::for_algebra(n);
    let quad = StandardJTriple::for_quaternionic_dim(1);
    let js = [
        RatMatrix::block_diag(&[quad.j1.clone(), h_triple.j1.clone()]),
        RatMatrix::block_diag(&[quad.j2.clone(), h_triple.j2.clone()]),
        RatMatrix::block_diag(&[quad.j3.clone(), h_triple.j3.clone()]),
    ];
    let neg_id = RatMatrix::identity(dim).neg();
    if js.iter().any(|j| j.mul(j) != neg_id) {
        return false;
    }
    if js[0].mul(&js[1]) != js[2] || js[1].mul(&js[0]) != js[2].neg() {
        return false;
    }

    // bracket on R e_0 + R^{4n-1}: [x, y] = x_0 A y' - y_0 A x'
    let a = {
        let mut m = RatMatrix::zero(dim - 1, dim - 1);
        for i in 0..3 {
            m.set(i, i, data.mu.clone());
        }
        for (alpha, j) in [&h_triple.j1, &h_triple.j2, &h_triple.j3].iter().enumerate() {
            let v = j.mul_vec(&data.v0);
            for (row, val) in v.into_iter().enumerate() {
                m.set(3 + row, alpha, val);
            }
        }
        m.set_block(3, 3, &data.b);
        m
    };
    let bracket = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let ax = a.mul_vec(&x[1..]);
        let ay = a.mul_vec(&y[1..]);
        let mut out = vec![Rat::zero(); dim];
        for i in 0..dim - 1 {
            out[i + 1] = &x[0] * &ay[i] - &y[0] * &ax[i];
        }
        out
    };
    let basis: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            let mut e = vec![Rat::zero(); dim];
            e[i] = Rat::one();
            e
        })
        .collect();
    let apply = |j: &RatMatrix, v: &[Rat]| j.mul_vec(v);

    for j in &js {
        for i in 0..dim {
            for k in i + 1..dim {
                let x = &basis[i];
                let y = &basis[k];
                let jx = apply(j, x);
                let jy = apply(j, y);
                // torsion: [x,y] + J([Jx,y] + [x,Jy]) - [Jx,Jy]
                let t1 = bracket(x, y);
                let inner = bracket(&jx, y)
                    .iter()
                    .zip(bracket(x, &jy))
                    .map(|(p, q)| p + q)
                    .collect::<Vec<_>>();
                let t2 = apply(j, &inner);
                let t3 = bracket(&jx, &jy);
                let nij: Vec<Rat> = t1
                    .iter()
                    .zip(t2.iter().zip(t3.iter()))
                    .map(|(a, (b, c))| a + b - c)
                    .collect();
                if nij.iter().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Witness data for the hyperbolic diagonal family: time
/// `log((m + sqrt(m^2 - 4))/2)` against `I_3 + C^{(4)}` with `C` the
/// companion of `x^2 - m x + 1`.
pub fn witness_hyperbolic(m: u32) -> (RatMatrix, LatticeWitness) {
    assert!(m >= 3);
    let mut blocks = vec![RatMatrix::zero(3, 3)];
    blocks.push(RatMatrix::identity(4));
    blocks.push(RatMatrix::identity(4).neg());
    let a = RatMatrix::block_diag(&blocks);
    let mf = m as f64;
    let t0 = ((mf + (mf * mf - 4.0).sqrt()) / 2.0).ln();
    let c = RatMatrix::from_i64_rows(&[&[0, -1], &[1, m as i64]]);
    let e = RatMatrix::block_diag(&[
        RatMatrix::identity(3),
        c.clone(),
        c.clone(),
        c.clone(),
        c,
    ]);
    (
        a,
        LatticeWitness {
            t0,
            e,
            conjugator: None,
        },
    )
}

/// Integer 2 x 2 matrix of multiplicative order `k`, `k` in {1,2,3,4,6}.
fn finite_order_2x2(k: u32) -> RatMatrix {
    match k {
        1 => RatMatrix::identity(2),
        2 => RatMatrix::identity(2).neg(),
        3 => RatMatrix::from_i64_rows(&[&[0, -1], &[1, -1]]),
        4 => RatMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]),
        6 => RatMatrix::from_i64_rows(&[&[0, -1], &[1, 1]]),
        _ => panic!("rotation by 2*pi/{k} is not integer-conjugate"),
    }
}

/// Witness for the unipotent-plus-rotation family at time `2 pi / k`.
pub fn witness_unipotent_rotation(k: u32) -> (RatMatrix, LatticeWitness) {
    let mut head = RatMatrix::zero(7, 7);
    head.set_block(
        3,
        0,
        &RatMatrix::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
    );
    let rot = RatMatrix::from_i64_rows(&[
        &[0, -1, 0, 0],
        &[1, 0, 0, 0],
        &[0, 0, 0, 1],
        &[0, 0, -1, 0],
    ]);
    let a = RatMatrix::block_diag(&[head, rot]);
    let mut e_head = RatMatrix::identity(7);
    e_head.set_block(
        3,
        0,
        &RatMatrix::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
    );
    let mk = finite_order_2x2(k);
    let e = RatMatrix::block_diag(&[e_head, mk.clone(), mk]);
    (
        a,
        LatticeWitness {
            t0: 2.0 * std::f64::consts::PI / k as f64,
            e,
            conjugator: None,
        },
    )
}

/// Witness for the sheared-rotation family at time `2 pi / k`: the five
/// explicit integer matrices, one per admissible `k`.
pub fn witness_sheared_rotation(k: u32) -> (RatMatrix, LatticeWitness) {
    let rot = RatMatrix::from_i64_rows(&[
        &[0, -1, 0, 0],
        &[1, 0, 0, 0],
        &[0, 0, 0, 1],
        &[0, 0, -1, 0],
    ]);
    let mut b = RatMatrix::zero(8, 8);
    b.set_block(0, 0, &rot);
    b.set_block(4, 4, &rot);
    b.set_block(4, 0, &RatMatrix::identity(4));
    let a = RatMatrix::block_diag(&[RatMatrix::zero(3, 3), b]);

    let e_tail = match k {
        1 => {
            let j = RatMatrix::from_i64_rows(&[&[1, 0], &[1, 1]]);
            RatMatrix::block_diag(&[j.clone(), j.clone(), j.clone(), j])
        }
        2 => {
            let j = RatMatrix::from_i64_rows(&[&[-1, 0], &[1, -1]]);
            RatMatrix::block_diag(&[j.clone(), j.clone(), j.clone(), j])
        }
        3 => {
            let c = RatMatrix::from_i64_rows(&[
                &[0, 0, 0, -1],
                &[1, 0, 0, -2],
                &[0, 1, 0, -3],
                &[0, 0, 1, -2],
            ]);
            RatMatrix::block_diag(&[c.clone(), c])
        }
        4 => {
            let c = RatMatrix::from_i64_rows(&[
                &[0, 0, 0, -1],
                &[1, 0, 0, 0],
                &[0, 1, 0, -2],
                &[0, 0, 1, 0],
            ]);
            RatMatrix::block_diag(&[c.clone(), c])
        }
        6 => {
            let c = RatMatrix::from_i64_rows(&[
                &[0, 0, 0, -1],
                &[1, 0, 0, 2],
                &[0, 1, 0, -3],
                &[0, 0, 1, 2],
            ]);
            RatMatrix::block_diag(&[c.clone(), c])
        }
        _ => panic!("no integer witness at 2*pi/{k}"),
    };
    let e = RatMatrix::block_diag(&[RatMatrix::identity(3), e_tail]);
    (
        a,
        LatticeWitness {
            t0: 2.0 * std::f64::consts::PI / k as f64,
            e,
            conjugator: None,
        },
    )
}

/// Witness from the quartic `x^4 - x^3 + k x^2 - x + 1`, `k >= 3`: all
/// roots are non-real and off the unit circle, so the log-modulus and
/// argument of a largest root give a structure matrix whose time-one period
/// map is integer-conjugate to two companion blocks.
pub fn witness_quartic(k: u32) -> (Mat64, LatticeWitness) {
    assert!(k >= 3);
    let p = IntPoly::p_quartic(k as i64);
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| rat_to_f64(&Rat::from_integer(c.clone())))
        .collect();
    let roots = complex_roots(&coeffs);
    let alpha = roots
        .iter()
        .filter(|z| z.im > 0.0)
        .max_by(|x, y| x.norm().total_cmp(&y.norm()))
        .expect("quartic has non-real roots");
    let aa = alpha.norm().ln();
    let th = alpha.arg();
    let rot4 = |a: f64, b: f64| {
        Mat64::from_rows(vec![
            vec![a, -b, 0.0, 0.0],
            vec![b, a, 0.0, 0.0],
            vec![0.0, 0.0, a, b],
            vec![0.0, 0.0, -b, a],
        ])
    };
    let a = Mat64::block_diag(&[Mat64::zero(3, 3), rot4(aa, th), rot4(-aa, th)]);
    let c = RatMatrix::companion(p.to_ratpoly().coeffs());
    let e = RatMatrix::block_diag(&[RatMatrix::identity(3), c.clone(), c]);
    (
        a,
        LatticeWitness {
            t0: 1.0,
            e,
            conjugator: None,
        },
    )
}
