//! Integer polynomials and the Delta_n membership machinery.
//!
//! Delta_n is the set of monic degree-n integer polynomials with n distinct
//! positive real roots and constant term (-1)^n; Delta_n' additionally
//! requires p(1) != 0. Membership is decided exactly: distinctness through
//! gcd(p, p') and root location through Sturm chains with content removal,
//! never through floating point.

use crate::matrix::bareiss_det;
use crate::rational::{rat, Rat};
use crate::ratpoly::RatPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    ZeroPolynomial,
    NonUnitConstantTerm,
    NonMonic,
    SignPatternViolation { index: usize },
    NotDeltaMember,
    ZeroExponent,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "zero polynomial"),
            PolyError::NonUnitConstantTerm => write!(f, "constant term is not a unit"),
            PolyError::NonMonic => write!(f, "polynomial is not monic"),
            PolyError::SignPatternViolation { index } => {
                write!(f, "coefficient of x^{index} breaks the alternating sign pattern")
            }
            PolyError::NotDeltaMember => write!(f, "polynomial is not a Delta member"),
            PolyError::ZeroExponent => write!(f, "exponent must be nonzero"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Which membership condition failed first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaFailure {
    Degree,
    NotMonic,
    ConstantTerm,
    RootsNotRealDistinctPositive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVerdict {
    pub member: bool,
    pub failed_condition: Option<DeltaFailure>,
    pub in_delta_prime: bool,
}

/// Interval endpoint for root counting.
#[derive(Debug, Clone, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `x^2 - m x + 1`.
    pub fn h(m: i64) -> Self {
        IntPoly::from_i64(&[1, -m, 1])
    }

    /// `x^3 - m x^2 + n x - 1`.
    pub fn f(m: i64, n: i64) -> Self {
        IntPoly::from_i64(&[-1, n, -m, 1])
    }

    /// `x^4 - x^3 + k x^2 - x + 1`.
    pub fn p_quartic(k: i64) -> Self {
        IntPoly::from_i64(&[1, -1, k, -1, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + crate::rational::rat_to_f64(&Rat::from_integer(c.clone()));
        }
        acc
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Positive gcd of the coefficients (zero polynomial has content 0).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.to_ratpoly().div_rem(&divisor.to_ratpoly());
        if !r.is_zero() {
            return None;
        }
        IntPoly::from_ratpoly(&q)
    }

    /// Pseudo-remainder: the remainder of `lc(d)^{deg self - deg d + 1} * self`
    /// divided by `d`, computed entirely over the integers.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return self.clone();
        }
        let steps = rem.len() - dd;
        for k in (0..steps).rev() {
            // rem <- lc * rem - rem[k + dd] * x^k * d
            let top = rem[k + dd].clone();
            for (i, c) in rem.iter_mut().enumerate() {
                *c = &*c * &lc;
                if i >= k && i <= k + dd {
                    *c -= &top * &d.coeffs[i - k];
                }
            }
        }
        rem.truncate(dd);
        IntPoly::new(rem)
    }

    /// Primitive gcd over the integers via the primitive pseudo-remainder
    /// sequence, positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return positive_leading(b);
        }
        while !b.is_zero() {
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        positive_leading(a)
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn to_ratpoly(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Back from a rational polynomial when all coefficients are integral.
    pub fn from_ratpoly(p: &RatPoly) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(p.coeffs().len());
        for c in p.coeffs() {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(IntPoly::new(out))
    }

    /// Clear denominators and strip content; the sign of the leading
    /// coefficient is preserved.
    pub fn from_ratpoly_primitive(p: &RatPoly) -> IntPoly {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly::new(ints).primitive_part()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratpoly())
    }
}

fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn sign_of_rat(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn positive_leading(p: IntPoly) -> IntPoly {
    if p.leading().is_some_and(|c| c.is_negative()) {
        p.neg()
    } else {
        p
    }
}

/// Sturm chain of a squarefree polynomial: integer pseudo-remainders with
/// content removed at every step. The pseudo-remainder differs from the true
/// remainder by the factor `lc^{delta+1}`, so the sign is corrected whenever
/// that factor is negative to keep the chain a genuine Sturm sequence.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.clone(), p.derivative().primitive_part()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == Some(0) {
            break;
        }
        let a = &chain[n - 2];
        let b = &chain[n - 1];
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        let flip = b.leading().unwrap().is_negative() && delta % 2 == 0;
        let next = if flip { r } else { r.neg() };
        chain.push(next.primitive_part());
    }
    chain
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[IntPoly], at: &Bound) -> usize {
    sign_variations(chain.iter().map(|q| match at {
        Bound::NegInf => {
            let d = q.degree().unwrap_or(0);
            let lc = sign_of(q.leading().unwrap_or(&BigInt::zero()));
            if d % 2 == 0 {
                lc
            } else {
                -lc
            }
        }
        Bound::PosInf => sign_of(q.leading().unwrap_or(&BigInt::zero())),
        Bound::Finite(x) => sign_of_rat(&q.eval_rat(x)),
    }))
}

/// Exact number of distinct real roots of `p` in the half-open interval
/// `(lo, hi]`. Multiple roots are collapsed by first dividing out
/// `gcd(p, p')`.
pub fn sturm_count(p: &IntPoly, lo: &Bound, hi: &Bound) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let g = p.gcd(&p.derivative());
    let sf = if g.degree() == Some(0) {
        p.clone()
    } else {
        p.div_exact(&g).expect("gcd divides")
    };
    let chain = sturm_chain(&sf);
    let vl = variations_at(&chain, lo);
    let vh = variations_at(&chain, hi);
    Ok(vl.saturating_sub(vh))
}

/// Number of distinct positive real roots.
pub fn positive_root_count(p: &IntPoly) -> Result<usize, PolyError> {
    sturm_count(p, &Bound::Finite(Rat::zero()), &Bound::PosInf)
}

/// Exact Delta_n membership test.
pub fn delta_check(p: &IntPoly) -> DeltaVerdict {
    let fail = |f| DeltaVerdict {
        member: false,
        failed_condition: Some(f),
        in_delta_prime: false,
    };
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        _ => return fail(DeltaFailure::Degree),
    };
    if !p.is_monic() {
        return fail(DeltaFailure::NotMonic);
    }
    let want = if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    if p.constant_term() != want {
        return fail(DeltaFailure::ConstantTerm);
    }
    if p.gcd(&p.derivative()).degree() != Some(0) {
        return fail(DeltaFailure::RootsNotRealDistinctPositive);
    }
    if positive_root_count(p).expect("nonzero") != n {
        return fail(DeltaFailure::RootsNotRealDistinctPositive);
    }
    DeltaVerdict {
        member: true,
        failed_condition: None,
        in_delta_prime: !p.eval_int(&BigInt::one()).is_zero(),
    }
}

/// Closed-form discriminant of `x^3 - m x^2 + n x - 1`.
pub fn cubic_discriminant(m: i64, n: i64) -> BigInt {
    let (m, n) = (BigInt::from(m), BigInt::from(n));
    &m * &m * &n * &n - 4 * &m * &m * &m - 4 * &n * &n * &n + 18 * &m * &n - 27
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt, PolyError> {
    let dp = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let dq = q.degree().ok_or(PolyError::ZeroPolynomial)?;
    if dp == 0 {
        return Ok(p.coeff(0).pow(dq as u32));
    }
    if dq == 0 {
        return Ok(q.coeff(0).pow(dp as u32));
    }
    let size = dp + dq;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for i in 0..dq {
        for k in 0..=dp {
            m[i][i + k] = p.coeff(dp - k);
        }
    }
    for i in 0..dp {
        for k in 0..=dq {
            m[dq + i][i + k] = q.coeff(dq - k);
        }
    }
    Ok(bareiss_det(m))
}

/// Product of two Delta members: `Some(pq)` when they share no root,
/// `None` on a common root.
pub fn delta_product(p: &IntPoly, q: &IntPoly) -> Result<Option<IntPoly>, PolyError> {
    if !delta_check(p).member || !delta_check(q).member {
        return Err(PolyError::NotDeltaMember);
    }
    if resultant(p, q)?.is_zero() {
        return Ok(None);
    }
    let prod = p.mul(q);
    debug_assert!(delta_check(&prod).member);
    Ok(Some(prod))
}

/// `p*(x) = (-1)^n x^n p(1/x)`: the roots become their inverses.
pub fn reciprocal(p: &IntPoly) -> Result<IntPoly, PolyError> {
    let n = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if !p.constant_term().abs().is_one() {
        return Err(PolyError::NonUnitConstantTerm);
    }
    let sign = if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    Ok(IntPoly::new(
        (0..=n).map(|i| &sign * p.coeff(n - i)).collect(),
    ))
}

/// Monic integer polynomial whose roots are the k-th powers of the roots of
/// `p`, via Newton's power sums. Negative `k` routes through the reciprocal.
pub fn power_poly(p: &IntPoly, k: i64) -> Result<IntPoly, PolyError> {
    if k == 0 {
        return Err(PolyError::ZeroExponent);
    }
    if !p.is_monic() {
        return Err(PolyError::NonMonic);
    }
    if !p.constant_term().abs().is_one() {
        return Err(PolyError::NonUnitConstantTerm);
    }
    if k < 0 {
        return power_poly(&reciprocal(p)?, -k);
    }
    let k = k as usize;
    let n = p.degree().unwrap();
    if n == 0 {
        return Ok(p.clone());
    }
    // e_i with p = x^n - e_1 x^{n-1} + e_2 x^{n-2} - ...
    let e: Vec<Rat> = (0..=n)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            Rat::from_integer(p.coeff(n - i) * BigInt::from(sign))
        })
        .collect();
    // Power sums s_1 .. s_{nk} by Newton's identities.
    let mut s = vec![Rat::zero(); n * k + 1];
    for j in 1..=n * k {
        let mut acc = Rat::zero();
        for i in 1..j.min(n + 1) {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            acc += rat(sign) * &e[i] * &s[j - i];
        }
        if j <= n {
            let sign = if j % 2 == 0 { -1 } else { 1 };
            acc += rat(sign) * rat(j as i64) * &e[j];
        }
        s[j] = acc;
    }
    // Invert Newton's identities on S_j = s_{jk}.
    let mut ep = vec![Rat::zero(); n + 1];
    ep[0] = Rat::one();
    for j in 1..=n {
        let mut acc = Rat::zero();
        for i in 1..=j {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            acc += rat(sign) * &ep[j - i] * &s[i * k];
        }
        ep[j] = acc / rat(j as i64);
    }
    let coeffs: Vec<Rat> = (0..=n)
        .map(|i| {
            let j = n - i;
            let sign = if j.is_multiple_of(2) { 1 } else { -1 };
            rat(sign) * &ep[j]
        })
        .collect();
    Ok(IntPoly::from_ratpoly(&RatPoly::new(coeffs)).expect("power sums of integer monic stay integral"))
}

/// Interior coefficients `m_1..m_{n-1}` of an alternating-sign monic
/// polynomial `x^n - m_{n-1} x^{n-1} + ... + (-1)^n`, or the index where the
/// pattern breaks.
fn alternating_coefficients(p: &IntPoly) -> Result<Vec<BigInt>, PolyError> {
    let n = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(PolyError::NonMonic);
    }
    let mut m = Vec::with_capacity(n);
    for t in 0..n {
        let sign = if (n - t) % 2 == 0 { 1 } else { -1 };
        let v = p.coeff(t) * BigInt::from(sign);
        if !v.is_positive() {
            return Err(PolyError::SignPatternViolation { index: t });
        }
        m.push(v);
    }
    Ok(m)
}

/// Necessary condition for membership: every interior coefficient must
/// exceed the matching binomial coefficient.
pub fn binom_necessary(p: &IntPoly) -> Result<bool, PolyError> {
    let n = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let m = alternating_coefficients(p)?;
    for j in 1..n {
        if m[j] <= binomial(n, j) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sufficient condition: `m_j^2 - 4 m_{j-1} m_{j+1} > 0` for all interior
/// `j` forces n distinct positive real roots.
pub fn kurtz_sufficient(p: &IntPoly) -> Result<bool, PolyError> {
    let n = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let mut m = alternating_coefficients(p)?;
    if !m[0].is_one() {
        return Err(PolyError::NonUnitConstantTerm);
    }
    m.push(BigInt::one()); // m_n = 1
    for j in 1..n {
        if (&m[j] * &m[j] - 4 * &m[j - 1] * &m[j + 1]) <= BigInt::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Squarefree decomposition by Yun's algorithm over Q, normalized back to
/// primitive integer factors: returns `(a_1, a_2, ...)` with
/// `p = c * a_1 a_2^2 a_3^3 ...` and the `a_i` pairwise coprime squarefree.
pub fn squarefree_decomposition(p: &IntPoly) -> Vec<IntPoly> {
    if p.degree().is_none_or(|d| d == 0) {
        return vec![];
    }
    let f = p.to_ratpoly().into_monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut w = f.div_rem(&a0).0;
    let mut y = df.div_rem(&a0).0;
    let mut out = Vec::new();
    loop {
        let z = y.sub(&w.derivative());
        if z.is_zero() {
            out.push(IntPoly::from_ratpoly_primitive(&w));
            break;
        }
        let g = w.gcd(&z);
        out.push(IntPoly::from_ratpoly_primitive(&g));
        w = w.div_rem(&g).0;
        y = z.div_rem(&g).0;
        if w.is_constant() {
            break;
        }
    }
    out
}

/// Squarefree product of the factors appearing to odd multiplicity.
pub fn odd_multiplicity_part(p: &IntPoly) -> Result<IntPoly, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(PolyError::NonMonic);
    }
    if !p.constant_term().abs().is_one() {
        return Err(PolyError::NonUnitConstantTerm);
    }
    let parts = squarefree_decomposition(p);
    let mut out = IntPoly::one();
    for (i, a) in parts.iter().enumerate() {
        if (i + 1) % 2 == 1 {
            out = out.mul(a);
        }
    }
    Ok(out)
}

/// A concrete element of Delta_n' for every n >= 2.
pub fn build_delta_prime(n: usize) -> IntPoly {
    assert!(n >= 2);
    let p = if n == 3 {
        IntPoly::f(6, 7)
    } else if n.is_multiple_of(2) {
        // product of distinct h_m, m = 3, 4, ...
        let k = n / 2;
        (0..k).fold(IntPoly::one(), |acc, j| acc.mul(&IntPoly::h(3 + j as i64)))
    } else {
        // f_{6,7} times distinct h_m with m >= 4
        let k = (n - 3) / 2;
        (0..k).fold(IntPoly::f(6, 7), |acc, j| acc.mul(&IntPoly::h(4 + j as i64)))
    };
    let v = delta_check(&p);
    debug_assert!(v.member && v.in_delta_prime);
    p
}

fn newton_ok(m: &[i64], j: usize, n: usize) -> bool {
    // a_k^2 * (k+1)(n-k+1) >= a_{k-1} a_{k+1} * k(n-k) is necessary for
    // real roots; in the m-parametrization signs cancel.
    if j == 0 || j >= n {
        return true;
    }
    let lhs = (m[j] as i128) * (m[j] as i128) * ((j + 1) as i128) * ((n - j + 1) as i128);
    let rhs = (m[j - 1] as i128) * (m[j + 1] as i128) * (j as i128) * ((n - j) as i128);
    lhs >= rhs
}

fn enumerate_rec(m: &mut Vec<i64>, idx: usize, n: usize, bound: i64, out: &mut Vec<IntPoly>) {
    if idx == n {
        // all interior coefficients fixed; final Newton check at n-1
        if !newton_ok(m, n - 1, n) {
            return;
        }
        let coeffs: Vec<i64> = (0..=n)
            .map(|t| {
                let sign = if (n - t).is_multiple_of(2) { 1 } else { -1 };
                sign * m[t]
            })
            .collect();
        let p = IntPoly::from_i64(&coeffs);
        if delta_check(&p).member {
            out.push(p);
        }
        return;
    }
    for v in 1..=bound {
        m[idx] = v;
        // check the inequality one slot behind, now that both sides exist
        if idx >= 2 && !newton_ok(m, idx - 1, n) {
            continue;
        }
        enumerate_rec(m, idx + 1, n, bound, out);
    }
    m[idx] = 0;
}

/// All Delta_n members whose interior coefficients are bounded by `bound` in
/// absolute value. Enumeration prunes with Newton's inequalities, which every
/// real-rooted candidate must satisfy.
pub fn enumerate_delta(n: usize, bound: i64) -> Vec<IntPoly> {
    enumerate_delta_jobs(n, bound, 1)
}

/// Sharded enumeration: the leading interior coefficient splits the search
/// space across `jobs` threads, and the shards are concatenated in order so
/// the output is identical to the sequential one.
pub fn enumerate_delta_jobs(n: usize, bound: i64, jobs: usize) -> Vec<IntPoly> {
    assert!(n >= 2);
    let jobs = jobs.max(1);
    let run_shard = |values: &[i64]| -> Vec<IntPoly> {
        let mut out = Vec::new();
        let mut m = vec![0i64; n + 1]; // m[0] = m[n] = 1 conceptually
        m[0] = 1;
        m[n] = 1;
        for &v in values {
            m[1] = v;
            if n == 2 {
                m[1] = 0;
                // degree two has no free slot beyond the single coefficient
                enumerate_rec(&mut m, 1, n, bound, &mut out);
                break;
            }
            enumerate_rec(&mut m, 2, n, bound, &mut out);
        }
        out
    };
    let firsts: Vec<i64> = (1..=bound).collect();
    if jobs == 1 || n == 2 {
        return run_shard(&firsts);
    }
    let chunk = firsts.len().div_ceil(jobs);
    let mut shards: Vec<Vec<IntPoly>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = firsts
            .chunks(chunk)
            .map(|values| scope.spawn(move || run_shard(values)))
            .collect();
        for h in handles {
            shards.push(h.join().expect("enumeration shard"));
        }
    });
    shards.into_iter().flatten().collect()
}
