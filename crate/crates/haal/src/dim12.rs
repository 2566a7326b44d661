//! Classification of 12-dimensional hypercomplex almost abelian Lie
//! algebras from their defining data, together with the algebraic flags
//! (unimodularity, complete solvability, nilpotency, special metrics) and
//! the lattice verdict for each simply connected group.
//!
//! Inputs arrive as the scalar `mu`, the block shape of the quaternionic
//! part (two diagonal eigenvalue blocks, or one Jordan-type block), the four
//! real parameters, and the membership status of the translation vector.
//! Normalization follows the case analysis of the classification proofs:
//! positive rescaling, sign flips, and block swaps, exactly in the branches
//! where those moves are available.

use crate::matrix::RatMatrix;
use crate::nilpotent::{assemble_a, HcxAAData};
use crate::rational::{rat, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BCase {
    B1,
    B2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum V0Status {
    Zero,
    InImage,
    NotInImage,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dim12Input {
    pub mu: Rat,
    pub bcase: BCase,
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub v0_status: V0Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dim12Error {
    NegativeParameter(&'static str),
    V0OutsideImageImpossible,
    AbelianInput,
}

impl fmt::Display for Dim12Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim12Error::NegativeParameter(p) => write!(f, "parameter {p} must be nonnegative"),
            Dim12Error::V0OutsideImageImpossible => write!(
                f,
                "v0 cannot lie outside the image: mu is not an eigenvalue of B"
            ),
            Dim12Error::AbelianInput => write!(f, "input defines the abelian Lie algebra"),
        }
    }
}

impl std::error::Error for Dim12Error {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(clippy::enum_variant_names)]
pub enum Family {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    S8,
    S9,
    S10,
    S11,
    S12,
    S13,
    S14,
    S15,
    S16,
    S17,
    S18,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::S1 => "s1",
            Family::S2 => "s2",
            Family::S3 => "s3",
            Family::S4 => "s4",
            Family::S5 => "s5",
            Family::S6 => "s6",
            Family::S7 => "s7",
            Family::S8 => "s8",
            Family::S9 => "s9",
            Family::S10 => "s10",
            Family::S11 => "s11",
            Family::S12 => "s12",
            Family::S13 => "s13",
            Family::S14 => "s14",
            Family::S15 => "s15",
            Family::S16 => "s16",
            Family::S17 => "s17",
            Family::S18 => "s18",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyFlags {
    pub unimodular: bool,
    pub completely_solvable: bool,
    pub nilpotent_step: Option<usize>,
    pub hkt: bool,
    pub hyper_kahler: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessRef {
    /// The canonical structure matrix is integer; the classical nilpotent
    /// criterion applies directly.
    NilmanifoldInteger,
    /// Rotation blocks at angles `2*pi/k` exponentiate to finite-order
    /// integer-conjugate matrices.
    RotationAngles { denominators: Vec<u32> },
    /// Unipotent translation block paired with finite-order rotations.
    UnipotentRotation { denominators: Vec<u32> },
    /// Hyperbolic times `log((m + sqrt(m^2-4))/2)` hitting companion
    /// matrices of `x^2 - m x + 1`.
    HyperbolicLog { min_m: u32 },
    /// Sheared rotation block whose period-`k` exponentials match explicit
    /// integer matrices.
    ShearedRotation { denominators: Vec<u32> },
    /// Quartics `x^4 - x^3 + k x^2 - x + 1`, `k >= 3`: all roots non-real
    /// and off the unit circle, realizing countably many parameter values.
    QuarticFamily { min_k: u32 },
    /// Independent rotation angle pairs `2*pi/k1 != 2*pi/k2`.
    RotationPairAngles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoLatticeReason {
    NotUnimodular,
    /// Nonzero scalar part: any cocompact subgroup forces the scalar
    /// eigenvalue of the period map to be a unit root of an integer monic
    /// polynomial of odd multiplicity, hence 1.
    ScalarPartNonzero,
    /// The minimal polynomial of the period map has constant term
    /// `e^{-a t0}`, which integrality forces to 1: impossible for `a != 0`.
    UnitConstantTerm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeVerdict {
    Yes(Vec<WitnessRef>),
    PartialYes(Vec<WitnessRef>),
    No(NoLatticeReason),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyLabel {
    pub family: Family,
    pub params: Vec<(&'static str, Rat)>,
    pub flags: Option<FamilyFlags>,
    pub lattice: Option<LatticeVerdict>,
}

impl FamilyLabel {
    fn new(family: Family, params: Vec<(&'static str, Rat)>) -> Self {
        FamilyLabel {
            family,
            params,
            flags: None,
            lattice: None,
        }
    }

    pub fn param(&self, name: &str) -> Option<&Rat> {
        self.params.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.name())?;
        if !self.params.is_empty() {
            let parts: Vec<String> = self
                .params
                .iter()
                .map(|(n, v)| format!("{n}={}", crate::rational::format_rat(v)))
                .collect();
            write!(f, "^({})", parts.join(","))?;
        }
        Ok(())
    }
}

fn is_eigenvalue_b1(mu: &Rat, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> bool {
    (b.is_zero() && a == mu) || (d.is_zero() && c == mu)
}

/// Representative of the commuting-pair orbit `{(x,y),(y,x),(-x,-y),(-y,-x)}`:
/// `0 <= a <= c`, or `a < 0 < c` with `|a| <= |c|`.
fn orbit_rep(x: Rat, y: Rat) -> (Rat, Rat) {
    let neg = |v: &Rat| -v;
    if !x.is_negative() && !y.is_negative() {
        if x <= y {
            (x, y)
        } else {
            (y, x)
        }
    } else if !x.is_positive() && !y.is_positive() {
        let (u, v) = (neg(&x), neg(&y));
        if u <= v {
            (u, v)
        } else {
            (v, u)
        }
    } else {
        let (u, v) = if x.is_negative() { (x, y) } else { (y, x) };
        if u.abs() <= v.abs() {
            (u, v)
        } else {
            (neg(&v), neg(&u))
        }
    }
}

/// Normalize defining data to its unique family label.
pub fn classify12(input: &Dim12Input) -> Result<FamilyLabel, Dim12Error> {
    if input.b.is_negative() {
        return Err(Dim12Error::NegativeParameter("b"));
    }
    let v0_nonzero = matches!(input.v0_status, V0Status::NotInImage);
    match input.bcase {
        BCase::B1 => {
            if input.d.is_negative() {
                return Err(Dim12Error::NegativeParameter("d"));
            }
            // order the diagonal blocks so that b <= d
            let (a, b, c, d) = if input.b <= input.d {
                (input.a.clone(), input.b.clone(), input.c.clone(), input.d.clone())
            } else {
                (input.c.clone(), input.d.clone(), input.a.clone(), input.b.clone())
            };
            if v0_nonzero && !is_eigenvalue_b1(&input.mu, &a, &b, &c, &d) {
                return Err(Dim12Error::V0OutsideImageImpossible);
            }
            let mu = &input.mu;
            if b.is_positive() {
                // both blocks rotate: v0 is absorbed
                if mu.is_zero() {
                    let (a2, c2, d2) = (&a / &b, &c / &b, &d / &b);
                    if d2 > Rat::one() {
                        Ok(FamilyLabel::new(
                            Family::S1,
                            vec![("a", a2), ("c", c2), ("d", d2)],
                        ))
                    } else {
                        let (ra, rc) = orbit_rep(a2, c2);
                        Ok(FamilyLabel::new(Family::S2, vec![("a", ra), ("c", rc)]))
                    }
                } else {
                    let (a2, b2, c2, d2) = (&a / mu, (&b / mu).abs(), &c / mu, (&d / mu).abs());
                    if b2 < d2 {
                        Ok(FamilyLabel::new(
                            Family::S3,
                            vec![("a", a2), ("b", b2), ("c", c2), ("d", d2)],
                        ))
                    } else {
                        let (lo, hi) = if a2 <= c2 { (a2, c2) } else { (c2, a2) };
                        Ok(FamilyLabel::new(
                            Family::S4,
                            vec![("a", lo), ("b", b2), ("c", hi)],
                        ))
                    }
                }
            } else if d.is_positive() {
                // one real block, one rotating block
                if mu.is_zero() {
                    let (a2, c2) = (&a / &d, &c / &d);
                    if !v0_nonzero {
                        if a2.is_zero() && c2.is_negative() {
                            Ok(FamilyLabel::new(Family::S5, vec![("a", a2), ("c", -c2)]))
                        } else {
                            Ok(FamilyLabel::new(Family::S5, vec![("a", a2), ("c", c2)]))
                        }
                    } else {
                        // a = mu = 0 here
                        Ok(FamilyLabel::new(Family::S6, vec![("c", c2.abs())]))
                    }
                } else {
                    let (a2, c2, d2) = (&a / mu, &c / mu, (&d / mu).abs());
                    if !v0_nonzero {
                        Ok(FamilyLabel::new(
                            Family::S7,
                            vec![("a", a2), ("c", c2), ("d", d2)],
                        ))
                    } else {
                        // a = mu, i.e. a2 = 1
                        Ok(FamilyLabel::new(Family::S8, vec![("c", c2), ("d", d2)]))
                    }
                }
            } else {
                // b = d = 0: two real quadruple eigenvalues
                if mu.is_zero() {
                    if !v0_nonzero {
                        if a.is_zero() && c.is_zero() {
                            return Err(Dim12Error::AbelianInput);
                        }
                        let (x, y) = if a.abs() >= c.abs() { (a, c) } else { (c, a) };
                        Ok(FamilyLabel::new(Family::S9, vec![("c", &y / &x)]))
                    } else {
                        // one eigenvalue vanishes; scale the other to 1
                        let other = if a.is_zero() { c } else { a };
                        let cval = if other.is_zero() { rat(0) } else { rat(1) };
                        Ok(FamilyLabel::new(Family::S10, vec![("c", cval)]))
                    }
                } else {
                    let (a2, c2) = (&a / mu, &c / mu);
                    if !v0_nonzero {
                        let (lo, hi) = if a2 <= c2 { (a2, c2) } else { (c2, a2) };
                        Ok(FamilyLabel::new(Family::S11, vec![("a", lo), ("c", hi)]))
                    } else {
                        let other = if a2.is_one() { c2 } else { a2 };
                        Ok(FamilyLabel::new(Family::S12, vec![("c", other)]))
                    }
                }
            }
        }
        BCase::B2 => {
            let (a, b) = (input.a.clone(), input.b.clone());
            let mu = &input.mu;
            if v0_nonzero && !(b.is_zero() && &a == mu) {
                return Err(Dim12Error::V0OutsideImageImpossible);
            }
            if b.is_positive() {
                if mu.is_zero() {
                    Ok(FamilyLabel::new(Family::S13, vec![("a", (&a / &b).abs())]))
                } else {
                    Ok(FamilyLabel::new(
                        Family::S14,
                        vec![("a", &a / mu), ("b", (&b / mu).abs())],
                    ))
                }
            } else if mu.is_zero() {
                if !a.is_zero() {
                    Ok(FamilyLabel::new(Family::S15, vec![]))
                } else if v0_nonzero {
                    Ok(FamilyLabel::new(Family::S16, vec![("s", rat(1))]))
                } else {
                    Ok(FamilyLabel::new(Family::S16, vec![("s", rat(0))]))
                }
            } else {
                let a2 = &a / mu;
                if a2.is_one() {
                    if v0_nonzero {
                        Ok(FamilyLabel::new(Family::S18, vec![]))
                    } else {
                        Ok(FamilyLabel::new(Family::S17, vec![("a", rat(1))]))
                    }
                } else {
                    Ok(FamilyLabel::new(Family::S17, vec![("a", a2)]))
                }
            }
        }
    }
}

/// Canonical defining data of a labeled family: scalar part, block
/// parameters, and translation vector.
pub fn canonical_input(label: &FamilyLabel) -> Dim12Input {
    let g = |n: &str| label.param(n).cloned().unwrap_or_else(Rat::zero);
    let zero = Rat::zero();
    let one = Rat::one();
    let (mu, bcase, a, b, c, d, v0) = match label.family {
        Family::S1 => (zero, BCase::B1, g("a"), one, g("c"), g("d"), V0Status::Zero),
        Family::S2 => (zero, BCase::B1, g("a"), one.clone(), g("c"), one, V0Status::Zero),
        Family::S3 => (one, BCase::B1, g("a"), g("b"), g("c"), g("d"), V0Status::Zero),
        Family::S4 => (one, BCase::B1, g("a"), g("b"), g("c"), g("b"), V0Status::Zero),
        Family::S5 => (zero, BCase::B1, g("a"), Rat::zero(), g("c"), one, V0Status::Zero),
        Family::S6 => (
            zero.clone(),
            BCase::B1,
            zero,
            Rat::zero(),
            g("c"),
            one,
            V0Status::NotInImage,
        ),
        Family::S7 => (one, BCase::B1, g("a"), Rat::zero(), g("c"), g("d"), V0Status::Zero),
        Family::S8 => (
            one.clone(),
            BCase::B1,
            one,
            Rat::zero(),
            g("c"),
            g("d"),
            V0Status::NotInImage,
        ),
        Family::S9 => (zero.clone(), BCase::B1, one, Rat::zero(), g("c"), zero, V0Status::Zero),
        Family::S10 => (
            zero.clone(),
            BCase::B1,
            zero.clone(),
            Rat::zero(),
            g("c"),
            zero,
            V0Status::NotInImage,
        ),
        Family::S11 => (one, BCase::B1, g("a"), Rat::zero(), g("c"), zero, V0Status::Zero),
        Family::S12 => (
            one.clone(),
            BCase::B1,
            one,
            Rat::zero(),
            g("c"),
            zero,
            V0Status::NotInImage,
        ),
        Family::S13 => (zero.clone(), BCase::B2, g("a"), one, zero.clone(), zero, V0Status::Zero),
        Family::S14 => (one, BCase::B2, g("a"), g("b"), zero.clone(), zero, V0Status::Zero),
        Family::S15 => (zero.clone(), BCase::B2, one, Rat::zero(), zero.clone(), zero, V0Status::Zero),
        Family::S16 => {
            let st = if g("s").is_one() {
                V0Status::NotInImage
            } else {
                V0Status::Zero
            };
            (zero.clone(), BCase::B2, zero.clone(), Rat::zero(), zero.clone(), zero, st)
        }
        Family::S17 => (one, BCase::B2, g("a"), Rat::zero(), zero.clone(), zero, V0Status::Zero),
        Family::S18 => (
            one.clone(),
            BCase::B2,
            one,
            Rat::zero(),
            zero.clone(),
            zero,
            V0Status::NotInImage,
        ),
    };
    Dim12Input {
        mu,
        bcase,
        a,
        b,
        c,
        d,
        v0_status: v0,
    }
}

/// 4 x 4 block for the complex eigenvalue `a + b i` on a quadruple.
fn rot4(a: &Rat, b: &Rat) -> RatMatrix {
    RatMatrix::from_rows(vec![
        vec![a.clone(), -b, Rat::zero(), Rat::zero()],
        vec![b.clone(), a.clone(), Rat::zero(), Rat::zero()],
        vec![Rat::zero(), Rat::zero(), a.clone(), b.clone()],
        vec![Rat::zero(), Rat::zero(), -b, a.clone()],
    ])
}

/// The 8 x 8 quaternion-linear block of a dim-12 input.
pub fn b_matrix(bcase: BCase, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> RatMatrix {
    match bcase {
        BCase::B1 => RatMatrix::block_diag(&[rot4(a, b), rot4(c, d)]),
        BCase::B2 => {
            let mut m = RatMatrix::zero(8, 8);
            m.set_block(0, 0, &rot4(a, b));
            m.set_block(4, 4, &rot4(a, b));
            m.set_block(4, 0, &RatMatrix::identity(4));
            m
        }
    }
}

/// Full 11 x 11 defining matrix of a (possibly unnormalized) input.
pub fn assemble_input(input: &Dim12Input) -> HcxAAData {
    let b = b_matrix(input.bcase, &input.a, &input.b, &input.c, &input.d);
    let mut v0 = vec![Rat::zero(); 8];
    if matches!(input.v0_status, V0Status::NotInImage) {
        // the complement of the image is the leading quadruple in every
        // case where a nonzero v0 is possible
        v0[0] = Rat::one();
    }
    HcxAAData::new(3, input.mu.clone(), v0, b).expect("consistent shape")
}

/// Canonical 11 x 11 representative of a label.
pub fn representative(label: &FamilyLabel) -> RatMatrix {
    assemble_a(&assemble_input(&canonical_input(label))).expect("canonical data commutes")
}

/// Populate the algebraic flags of a label.
pub fn flags(label: &FamilyLabel) -> FamilyLabel {
    let g = |n: &str| label.param(n).cloned().unwrap_or_else(Rat::zero);
    let input = canonical_input(label);
    let trace = match input.bcase {
        BCase::B1 => rat(3) * &input.mu + rat(4) * (&input.a + &input.c),
        BCase::B2 => rat(3) * &input.mu + rat(8) * &input.a,
    };
    let unimodular = trace.is_zero();
    let completely_solvable = matches!(
        label.family,
        Family::S9
            | Family::S10
            | Family::S11
            | Family::S12
            | Family::S15
            | Family::S16
            | Family::S17
            | Family::S18
    );
    let nilpotent_step = match label.family {
        Family::S10 if g("c").is_zero() => Some(2),
        Family::S16 => Some(if g("s").is_one() { 3 } else { 2 }),
        _ => None,
    };
    let hyper_kahler = matches!(label.family, Family::S1 | Family::S2 | Family::S5)
        && g("a").is_zero()
        && g("c").is_zero();
    let hkt = hyper_kahler
        || (matches!(label.family, Family::S3 | Family::S4 | Family::S7)
            && g("a").is_zero()
            && g("c").is_zero());
    FamilyLabel {
        flags: Some(FamilyFlags {
            unimodular,
            completely_solvable,
            nilpotent_step,
            hkt,
            hyper_kahler,
        }),
        ..label.clone()
    }
}

/// Lattice existence for the simply connected group of a flagged label.
/// Only verdicts actually established are reported; a bare existence result
/// for isolated parameter values is `PartialYes` with its witness family.
pub fn lattice_verdict(label: &FamilyLabel) -> LatticeVerdict {
    let fl = label
        .flags
        .unwrap_or_else(|| flags(label).flags.unwrap());
    if !fl.unimodular {
        return LatticeVerdict::No(NoLatticeReason::NotUnimodular);
    }
    if fl.nilpotent_step.is_some() {
        return LatticeVerdict::Yes(vec![WitnessRef::NilmanifoldInteger]);
    }
    let g = |n: &str| label.param(n).cloned().unwrap_or_else(Rat::zero);
    match label.family {
        // scalar part survives every normalization in these families
        Family::S3
        | Family::S4
        | Family::S7
        | Family::S8
        | Family::S11
        | Family::S12
        | Family::S14
        | Family::S17 => LatticeVerdict::No(NoLatticeReason::ScalarPartNonzero),
        Family::S5 => {
            if g("a").is_zero() {
                LatticeVerdict::Yes(vec![WitnessRef::RotationAngles {
                    denominators: vec![1, 2, 3, 4, 6],
                }])
            } else {
                LatticeVerdict::No(NoLatticeReason::UnitConstantTerm)
            }
        }
        Family::S6 => LatticeVerdict::Yes(vec![WitnessRef::UnipotentRotation {
            denominators: vec![1, 2, 3, 4, 6],
        }]),
        Family::S9 => LatticeVerdict::Yes(vec![WitnessRef::HyperbolicLog { min_m: 3 }]),
        Family::S13 => LatticeVerdict::Yes(vec![WitnessRef::ShearedRotation {
            denominators: vec![1, 2, 3, 4, 6],
        }]),
        Family::S1 => LatticeVerdict::PartialYes(vec![
            WitnessRef::RotationPairAngles,
            WitnessRef::QuarticFamily { min_k: 3 },
        ]),
        Family::S2 => {
            if g("a").is_zero() {
                LatticeVerdict::Yes(vec![WitnessRef::RotationAngles {
                    denominators: vec![1, 2, 3, 4, 6],
                }])
            } else {
                LatticeVerdict::PartialYes(vec![WitnessRef::QuarticFamily { min_k: 3 }])
            }
        }
        _ => LatticeVerdict::Unknown,
    }
}

/// Classification, flags, and lattice verdict in one pass.
pub fn classify_full(input: &Dim12Input) -> Result<FamilyLabel, Dim12Error> {
    let label = flags(&classify12(input)?);
    let lattice = lattice_verdict(&label);
    Ok(FamilyLabel {
        lattice: Some(lattice),
        ..label
    })
}
