//! Solvmanifolds built from Delta polynomials.
//!
//! A member `p` of Delta_n yields a `(4n+4)`-dimensional completely solvable
//! group with structure matrix `0_3 + X_p^{(4)}`, `X_p` the diagonal of root
//! logarithms. Its time-one period map is conjugate to the integer matrix
//! `I_3 + C_p^{(4)}` built from the companion of `p`, which presents the
//! lattice as `Z x_E Z^{4n+3}`. Two such solvmanifolds are diffeomorphic
//! exactly when the polynomials coincide or are each other's reciprocal, so
//! equivalence testing is purely symbolic.

use crate::intpoly::{delta_check, reciprocal, resultant, IntPoly};
use crate::matrix::RatMatrix;
use crate::rational::{rat_to_f64, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolvError {
    NotDeltaMember,
    CommonRoot,
}

impl fmt::Display for SolvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolvError::NotDeltaMember => write!(f, "polynomial is not a Delta member"),
            SolvError::CommonRoot => write!(f, "polynomials share a root"),
        }
    }
}

impl std::error::Error for SolvError {}

/// The lattice `Z x_E Z^{4n+3}` with product
/// `(m, p) (n, q) = (m + n, p + E^m q)`.
#[derive(Debug, Clone)]
pub struct LatticePresentation {
    pub rank: usize,
    pub generator_matrix: RatMatrix,
}

impl LatticePresentation {
    /// Group law on lattice elements, exact.
    pub fn mul(&self, x: (i64, &[Rat]), y: (i64, &[Rat])) -> (i64, Vec<Rat>) {
        let d = self.generator_matrix.rows();
        assert_eq!(x.1.len(), d);
        assert_eq!(y.1.len(), d);
        let e_m = if x.0 >= 0 {
            self.generator_matrix.pow(x.0 as usize)
        } else {
            self.generator_matrix
                .inverse()
                .expect("generator is invertible")
                .pow((-x.0) as usize)
        };
        let moved = e_m.mul_vec(y.1);
        (
            x.0 + y.0,
            x.1.iter().zip(moved).map(|(a, b)| a + b).collect(),
        )
    }
}

#[derive(Debug, Clone)]
pub struct SolvmanifoldDescriptor {
    pub p: IntPoly,
    pub n: usize,
    /// Companion matrix of `p`, determinant one.
    pub companion: RatMatrix,
    /// `I_3 + companion^{(4)}`, the integer model of the period map.
    pub holonomy: RatMatrix,
    pub lattice: LatticePresentation,
    /// Logarithms of the roots, ascending; they sum to zero.
    pub xp_numeric: Vec<f64>,
}

impl SolvmanifoldDescriptor {
    /// Dimension of the solvmanifold: `4n + 4`.
    pub fn dim(&self) -> usize {
        4 * self.n + 4
    }

    /// The structure matrix `0_3 + X_p^{(4)}` in double precision.
    pub fn structure_matrix(&self) -> crate::numeric::Mat64 {
        let n = self.n;
        let mut m = crate::numeric::Mat64::zero(4 * n + 3, 4 * n + 3);
        for rep in 0..4 {
            for (i, &x) in self.xp_numeric.iter().enumerate() {
                let idx = 3 + rep * n + i;
                m.set(idx, idx, x);
            }
        }
        m
    }
}

/// Exact sign of `p` at a rational point.
fn sign_at(p: &IntPoly, x: &Rat) -> i8 {
    let v = p.eval_rat(x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Isolate and refine the positive real roots of a squarefree polynomial
/// with all roots positive; each root is returned as a rational interval of
/// width below `precision`.
pub fn isolate_positive_roots(p: &IntPoly, precision: &Rat) -> Vec<(Rat, Rat)> {
    use crate::intpoly::{sturm_count, Bound};
    let n = p.degree().expect("nonzero");
    // Cauchy bound on root magnitude for monic p
    let bound = 1 + p
        .coeffs()
        .iter()
        .take(n)
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let mut stack = vec![(Rat::zero(), Rat::from_integer(bound))];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let count = sturm_count(p, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))
            .expect("nonzero polynomial");
        match count {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / crate::rational::rat(2);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    isolated.sort_by(|a, b| a.0.cmp(&b.0));
    // refine by bisection with exact signs
    isolated
        .into_iter()
        .map(|(mut lo, mut hi)| {
            if sign_at(p, &hi) == 0 {
                return (hi.clone(), hi);
            }
            let shi = sign_at(p, &hi);
            loop {
                if &hi - &lo < *precision {
                    return (lo, hi);
                }
                let mid = (&lo + &hi) / crate::rational::rat(2);
                let sm = sign_at(p, &mid);
                if sm == 0 {
                    return (mid.clone(), mid);
                }
                if sm == shi {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        })
        .collect()
}

/// Build the full descriptor of the solvmanifold attached to a member of
/// Delta_n. Root logarithms are refined to `precision` (default `1e-12`
/// when `None`).
pub fn build_with_precision(
    p: &IntPoly,
    precision: Option<f64>,
) -> Result<SolvmanifoldDescriptor, SolvError> {
    if !delta_check(p).member {
        return Err(SolvError::NotDeltaMember);
    }
    let n = p.degree().unwrap();
    let companion = RatMatrix::companion(p.to_ratpoly().coeffs());
    debug_assert_eq!(companion.det(), Rat::one());
    let holonomy = RatMatrix::block_diag(&[
        RatMatrix::identity(3),
        companion.clone(),
        companion.clone(),
        companion.clone(),
        companion.clone(),
    ]);
    let prec = precision.unwrap_or(1e-12);
    let prec_rat = Rat::new(BigInt::one(), BigInt::from((1.0 / prec).ceil() as u64));
    let xp_numeric: Vec<f64> = isolate_positive_roots(p, &prec_rat)
        .into_iter()
        .map(|(lo, hi)| {
            let mid = (&lo + &hi) / crate::rational::rat(2);
            rat_to_f64(&mid).ln()
        })
        .collect();
    debug_assert_eq!(xp_numeric.len(), n);
    Ok(SolvmanifoldDescriptor {
        p: p.clone(),
        n,
        lattice: LatticePresentation {
            rank: 4 * n + 4,
            generator_matrix: holonomy.clone(),
        },
        companion,
        holonomy,
        xp_numeric,
    })
}

pub fn build(p: &IntPoly) -> Result<SolvmanifoldDescriptor, SolvError> {
    build_with_precision(p, None)
}

/// Diffeomorphism of the associated solvmanifolds is a polynomial identity:
/// `q = p` or `q` is the reciprocal of `p`.
pub fn diffeo_equiv(p: &IntPoly, q: &IntPoly) -> Result<bool, SolvError> {
    if !delta_check(p).member || !delta_check(q).member {
        return Err(SolvError::NotDeltaMember);
    }
    if p.degree() != q.degree() {
        return Ok(false);
    }
    Ok(q == p || *q == reciprocal(p).expect("members have unit constant term"))
}

/// When `p(1) = 0` the solvmanifold splits off a four-torus: returns the
/// quotient polynomial, which lands in the prime subset one degree down.
pub fn split_torus_factor(p: &IntPoly) -> Result<Option<IntPoly>, SolvError> {
    if !delta_check(p).member {
        return Err(SolvError::NotDeltaMember);
    }
    if !p.eval_int(&BigInt::one()).is_zero() {
        return Ok(None);
    }
    let x_minus_1 = IntPoly::from_i64(&[-1, 1]);
    let quotient = p.div_exact(&x_minus_1).expect("p(1) = 0");
    let v = delta_check(&quotient);
    debug_assert!(v.member && v.in_delta_prime);
    Ok(Some(quotient))
}

/// The solvmanifold of a product of coprime members, sitting inside the
/// product of the two factors with codimension four.
#[derive(Debug, Clone)]
pub struct ProductEmbedding {
    pub descriptor: SolvmanifoldDescriptor,
    pub ambient_dim: usize,
    pub submanifold_dim: usize,
    pub codimension: usize,
}

pub fn product_embedding(p: &IntPoly, q: &IntPoly) -> Result<ProductEmbedding, SolvError> {
    if !delta_check(p).member || !delta_check(q).member {
        return Err(SolvError::NotDeltaMember);
    }
    if resultant(p, q).expect("nonzero members").is_zero() {
        return Err(SolvError::CommonRoot);
    }
    let n = p.degree().unwrap();
    let m = q.degree().unwrap();
    let descriptor = build(&p.mul(q))?;
    Ok(ProductEmbedding {
        descriptor,
        ambient_dim: (4 * n + 4) + (4 * m + 4),
        submanifold_dim: 4 * (n + m) + 4,
        codimension: 4,
    })
}
