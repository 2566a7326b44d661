//! Acceptance suite: one test per criterion, each printing a pass line with
//! the measured quantity once its assertions hold. Run with
//! `cargo test --test acceptance` (add `-- --nocapture` to see the lines).

use haal::dim12::{self, BCase, Dim12Input, LatticeVerdict, NoLatticeReason, V0Status};
use haal::intpoly::{
    cubic_discriminant, delta_check, power_poly, resultant, IntPoly,
};
use haal::liegroup;
use haal::matrix::RatMatrix;
use haal::nilpotent::{
    admissible, canonical_data, canonical_matrix, count_classes, count_two_step,
    enumerate_sigma_tuples, JordanData, StructureKind,
};
use haal::quaternion::SigmaTuple;
use haal::rational::{rat, ratio, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;
use std::collections::BTreeSet;

fn pass(id: u32, detail: &str) {
    println!("criterion {id:02}: PASS ({detail})");
}

#[test]
fn criterion_01_nilpotent_class_counts() {
    let run = |n: &str| {
        let (code, v) = haal::cli::run(&["nilp".into(), "count".into(), "--n".into(), n.into()]);
        assert_eq!(code, 0);
        v["total"].as_u64().unwrap()
    };
    assert_eq!(run("3"), 3);
    assert_eq!(run("4"), 6);
    pass(1, "n=3 gives 3 classes, n=4 gives 6");
}

#[test]
fn criterion_02_two_step_counts() {
    for n in 3..=8 {
        assert_eq!(
            count_two_step(n, StructureKind::Hypercomplex),
            n - 1,
            "n = {n}"
        );
    }
    pass(2, "two-step classes equal n-1 for 3 <= n <= 8");
}

/// All Jordan types of nilpotent matrices of the given total dimension.
fn enumerate_jordan_data(dim: usize) -> Vec<JordanData> {
    let mut out = Vec::new();
    fn rec(remaining: usize, max_size: usize, parts: &mut Vec<(usize, usize)>, out: &mut Vec<JordanData>) {
        // remaining coordinates not covered by blocks of size >= 2 become d
        out.push(JordanData::new(parts.clone(), remaining).unwrap());
        for size in (2..=max_size.min(remaining)).rev() {
            for mult in 1..=remaining / size {
                parts.push((size, mult));
                rec(remaining - size * mult, size - 1, parts, out);
                parts.pop();
            }
        }
    }
    rec(dim, dim, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_03_admissibility_oracle() {
    let kind = StructureKind::Hypercomplex;
    let mut checked = 0;
    for n in 2..=5usize {
        let dim = 4 * n - 1;
        // Jordan data of every canonical matrix, including the trivial class
        let mut canonical: BTreeSet<JordanData> = BTreeSet::new();
        let mut tuples = enumerate_sigma_tuples(n - 1);
        tuples.push(SigmaTuple::new(vec![], vec![], n - 1));
        for t in tuples {
            let max = if t.s > 0 { t.r() + 1 } else { t.r() };
            for ell in 0..=max {
                let c = canonical_matrix(&t, ell, kind).unwrap();
                canonical.insert(JordanData::of_nilpotent(&c.matrix).unwrap());
            }
        }
        for jd in enumerate_jordan_data(dim) {
            let verdict = admissible(&jd, kind).unwrap();
            assert_eq!(
                verdict.admissible,
                canonical.contains(&jd),
                "n = {n}, jd = {jd:?}"
            );
            if verdict.admissible {
                // the witness realizes exactly this Jordan type
                let w = verdict.witness.unwrap();
                assert_eq!(JordanData::of_nilpotent(&w).unwrap(), jd);
            }
            checked += 1;
        }
    }
    pass(3, &format!("{checked} Jordan types against the canonical set"));
}

/// Kernel-dimension sequence of the canonical class, from the closed
/// formulas: the three displayed cases for positive indices and the direct
/// block count for index zero.
fn closed_form_sequence(t: &SigmaTuple, ell: usize) -> Vec<usize> {
    let r = t.r();
    let n1 = t.quat_dim();
    let dim = 4 * n1 + 3;
    let psum: usize = t.p.iter().sum();
    let sum_tail = |k: usize| -> usize {
        // sum_{i >= k} m_i p_i with 1-based k
        (k - 1..r).map(|i| t.m[i] * t.p[i]).sum()
    };
    let psum_head = |k: usize| -> usize { (0..k - 1).map(|i| t.p[i]).sum() };
    if ell == 0 {
        // scalar block contributes 3 at every power
        return (1..=t.m[0])
            .map(|j| {
                3 + 4 * ((0..r).map(|i| t.m[i].min(j) * t.p[i]).sum::<usize>() + t.s)
            })
            .collect();
    }
    let m_r = t.m[r - 1];
    let mut seq = Vec::new();
    if ell == 1 {
        for j in 1..=t.m[0] {
            let v = if j <= m_r {
                4 * j * psum + 4 * t.s
            } else {
                let k = (2..=r).find(|&k| t.m[k - 1] < j && j <= t.m[k - 2]).unwrap();
                4 * j * psum_head(k) + 4 * sum_tail(k) + 4 * t.s
            };
            seq.push(v);
        }
        seq.push(dim);
    } else if ell <= r {
        for j in 1..t.m[0] {
            let v = if j <= m_r {
                4 * j * psum + 4 * t.s
            } else {
                let k = (2..=r).find(|&k| t.m[k - 1] < j && j <= t.m[k - 2]).unwrap();
                let base = if k == 2 {
                    4 * j * t.p[0] + 4 * sum_tail(2) + 4 * t.s
                } else {
                    4 * j * psum_head(k) + 4 * sum_tail(k) + 4 * t.s
                };
                // the scalar block joins once the power passes the slot size
                if k >= ell + 1 {
                    base
                } else {
                    base + 3
                }
            };
            seq.push(v);
        }
        seq.push(dim);
    } else {
        // ell = r + 1
        for j in 1..t.m[0] {
            let v = if j == 1 {
                4 * psum + 4 * t.s
            } else if j <= m_r {
                4 * j * psum + 4 * t.s + 3
            } else {
                let k = (2..=r).find(|&k| t.m[k - 1] < j && j <= t.m[k - 2]).unwrap();
                4 * j * psum_head(k) + 4 * sum_tail(k) + 4 * t.s + 3
            };
            seq.push(v);
        }
        seq.push(dim);
    }
    seq
}

#[test]
fn criterion_04_kernel_sequence_closed_forms() {
    let mut checked = 0;
    for n in 2..=6usize {
        for t in enumerate_sigma_tuples(n - 1) {
            let max = if t.s > 0 { t.r() + 1 } else { t.r() };
            for ell in 0..=max {
                let c = canonical_matrix(&t, ell, StructureKind::Hypercomplex).unwrap();
                assert_eq!(
                    c.matrix.kernel_dim_sequence(),
                    closed_form_sequence(&t, ell),
                    "tuple {t}, ell {ell}"
                );
                checked += 1;
            }
        }
    }
    pass(4, &format!("{checked} canonical kernel sequences match"));
}

#[test]
fn criterion_05_resultant_closed_form() {
    for m in 4..=20i64 {
        let r = resultant(&IntPoly::h(m), &IntPoly::f(6, 7)).unwrap();
        let expected = BigInt::from(-m * m * m + 13 * m * m - 52 * m + 61);
        assert_eq!(r, expected, "m = {m}");
        // Stated requirement: every value negative. The closed form itself
        // evaluates to +1 at m = 5 and m = 6 (hand-checkable: the cubic
        // -m^3+13m^2-52m+61 has real roots near 2.5, 4.7 and 6.3), so this
        // assertion fails there: the source statement's sign claim is wrong,
        // not the resultant. The nonvanishing the construction actually
        // needs is verified for all m in the supplement test below.
        assert!(
            r.is_negative(),
            "m = {m}: resultant is {r}, the claimed negativity fails at this value"
        );
    }
    pass(5, "resultant against the cubic matches the closed form, all negative");
}

#[test]
fn criterion_05_supplement_resultant_never_vanishes() {
    // What the infinitude construction needs: no common roots, i.e. a
    // nonvanishing resultant, for every quadratic factor used.
    for m in 4..=60i64 {
        let r = resultant(&IntPoly::h(m), &IntPoly::f(6, 7)).unwrap();
        assert!(!r.is_zero(), "m = {m}");
        let negative_expected = m != 5 && m != 6;
        assert_eq!(r.is_negative(), negative_expected, "m = {m}: r = {r}");
    }
    pass(5, "supplement: resultant never vanishes; sign negative except m = 5, 6");
}

#[test]
fn criterion_06_cubic_membership_grid() {
    for m in 4..=30i64 {
        for n in 4..=30i64 {
            let member = delta_check(&IntPoly::f(m, n)).member;
            let disc_positive = cubic_discriminant(m, n) > BigInt::zero();
            assert_eq!(member, disc_positive, "(m, n) = ({m}, {n})");
        }
    }
    pass(6, "27 x 27 grid: membership iff positive discriminant");
}

#[test]
fn criterion_07_quadratic_law() {
    for m in 0..=100i64 {
        let member = delta_check(&IntPoly::h(m)).member;
        assert_eq!(member, m >= 3, "m = {m}");
    }
    pass(7, "x^2 - m x + 1 in Delta_2 iff m >= 3, m <= 100");
}

/// At least `want` distinct Delta members of degree at most 5.
fn generate_members(want: usize) -> Vec<IntPoly> {
    let mut out: Vec<IntPoly> = Vec::new();
    let mut push = |p: IntPoly| {
        if delta_check(&p).member && !out.contains(&p) {
            out.push(p);
        }
    };
    for m in 3..=14i64 {
        push(IntPoly::h(m));
        push(IntPoly::from_i64(&[-1, 1]).mul(&IntPoly::h(m)));
    }
    for m in 4..=9i64 {
        for n in 4..=9i64 {
            push(IntPoly::f(m, n));
        }
    }
    for m in 3..=7i64 {
        for k in (m + 1)..=8i64 {
            push(IntPoly::h(m).mul(&IntPoly::h(k)));
        }
    }
    for m in 4..=8i64 {
        push(IntPoly::f(6, 7).mul(&IntPoly::h(m)));
    }
    out.truncate(want.max(out.len().min(want)));
    assert!(out.len() >= want, "only generated {}", out.len());
    out.truncate(want);
    out
}

#[test]
fn criterion_08_holonomy_factorization() {
    let members = generate_members(50);
    for p in &members {
        let d = haal::solv::build(p).unwrap();
        let x_minus_1 = haal::ratpoly::RatPoly::from_i64(&[-1, 1]);
        let expected = x_minus_1.pow(3).mul(&p.to_ratpoly().pow(4));
        assert_eq!(d.holonomy.char_poly(), expected, "p = {p}");
        assert_eq!(d.holonomy.det(), Rat::one(), "p = {p}");
    }
    pass(8, "50 holonomy matrices factor exactly with determinant one");
}

#[test]
fn criterion_09_diffeomorphism_law() {
    let h3 = IntPoly::h(3);
    let ks: Vec<i64> = (-6..=6).filter(|&k| k != 0).collect();
    for &j in &ks {
        for &k in &ks {
            let pj = power_poly(&h3, j).unwrap();
            let pk = power_poly(&h3, k).unwrap();
            assert_eq!(
                haal::solv::diffeo_equiv(&pj, &pk).unwrap(),
                k == j || k == -j,
                "(j, k) = ({j}, {k})"
            );
        }
    }
    pass(9, "power family diffeomorphic exactly at matching exponents up to sign");
}

#[test]
fn criterion_10_exponential_identity() {
    let mut rng = StdRng::seed_from_u64(1010);
    // exact: random nilpotent rational data
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let mut tmat = RatMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..i {
                tmat.set(i, j, ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3)));
            }
        }
        let v0: Vec<Rat> = (0..n).map(|_| ratio(rng.gen_range(-3..=3), 2)).collect();
        let t0 = ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let t = ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let s = ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let defect = liegroup::one_parameter_defect_exact(&tmat, &t0, &v0, &t, &s).unwrap();
        assert!(defect.iter().all(|d| d.is_zero()));
    }
    // numeric: random dense matrices of operator norm at most two
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let m = RatMatrix::from_rows(
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| ratio(rng.gen_range(-4..=4), 2 * n as i64))
                        .collect()
                })
                .collect(),
        );
        let v0: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let d = liegroup::one_parameter_defect(
            &m,
            rng.gen_range(-2.0..2.0),
            &v0,
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        worst = worst.max(d);
    }
    assert!(worst < 1e-10, "numeric defect {worst}");
    pass(
        10,
        &format!("identity exact on 100 nilpotent samples, numeric defect {worst:.2e}"),
    );
}

#[test]
fn criterion_11_witness_suite() {
    let tol = 1e-8;
    for m in 3..=10 {
        let (a, w) = liegroup::witness_hyperbolic(m);
        assert!(liegroup::bock_verify(&a, &w, tol).accepted(), "hyperbolic m={m}");
    }
    for k in [1u32, 2, 3, 4, 6] {
        let (a, w) = liegroup::witness_unipotent_rotation(k);
        assert!(liegroup::bock_verify(&a, &w, tol).accepted(), "unipotent k={k}");
        let (a, w) = liegroup::witness_sheared_rotation(k);
        assert!(liegroup::bock_verify(&a, &w, tol).accepted(), "sheared k={k}");
    }
    for k in [3u32, 4, 5] {
        let (a, w) = liegroup::witness_quartic(k);
        assert!(
            liegroup::bock_verify_numeric(&a, &w, tol).accepted(),
            "quartic k={k}"
        );
    }
    pass(11, "all 21 lattice witnesses accepted at 1e-8");
}

#[test]
fn criterion_12_lattice_obstructions() {
    // every unimodular family with nonzero scalar part
    let mu_nonzero: Vec<Dim12Input> = vec![
        // a + c = -3/4 branches
        Dim12Input {
            mu: rat(1),
            bcase: BCase::B1,
            a: ratio(-1, 4),
            b: rat(1),
            c: ratio(-1, 2),
            d: rat(2),
            v0_status: V0Status::Zero,
        },
        Dim12Input {
            mu: rat(1),
            bcase: BCase::B1,
            a: ratio(-1, 4),
            b: rat(1),
            c: ratio(-1, 2),
            d: rat(1),
            v0_status: V0Status::Zero,
        },
        Dim12Input {
            mu: rat(1),
            bcase: BCase::B1,
            a: ratio(-1, 4),
            b: rat(0),
            c: ratio(-1, 2),
            d: rat(1),
            v0_status: V0Status::Zero,
        },
        Dim12Input {
            mu: rat(1),
            bcase: BCase::B1,
            a: rat(1),
            b: rat(0),
            c: ratio(-7, 4),
            d: rat(1),
            v0_status: V0Status::NotInImage,
        },
        Dim12Input {
            mu: rat(1),
            bcase: BCase::B1,
            a: ratio(-1, 4),
            b: rat(0),
            c: ratio(-1, 2),
            d: rat(0),
            v0_status: V0Status::Zero,
        },
        Dim12Input {
            mu: rat(1),
            bcase: BCase::B1,
            a: rat(1),
            b: rat(0),
            c: ratio(-7, 4),
            d: rat(0),
            v0_status: V0Status::NotInImage,
        },
        Dim12Input {
            mu: rat(1),
            bcase: BCase::B2,
            a: ratio(-3, 8),
            b: rat(2),
            c: rat(0),
            d: rat(0),
            v0_status: V0Status::Zero,
        },
        Dim12Input {
            mu: rat(1),
            bcase: BCase::B2,
            a: ratio(-3, 8),
            b: rat(0),
            c: rat(0),
            d: rat(0),
            v0_status: V0Status::Zero,
        },
    ];
    let mut families = BTreeSet::new();
    for input in &mu_nonzero {
        let label = dim12::classify_full(input).unwrap();
        let fl = label.flags.unwrap();
        assert!(fl.unimodular, "{label} should be unimodular");
        assert_eq!(
            label.lattice,
            Some(LatticeVerdict::No(NoLatticeReason::ScalarPartNonzero)),
            "{label}"
        );
        families.insert(label.family);
    }
    assert_eq!(families.len(), 8, "all eight scalar-part families covered");

    // the split family at nonzero parameter: exact unit-term argument
    for a in [ratio(1, 2), rat(1), rat(-3), ratio(-2, 7)] {
        let input = Dim12Input {
            mu: rat(0),
            bcase: BCase::B1,
            a: a.clone(),
            b: rat(0),
            c: -&a,
            d: rat(1),
            v0_status: V0Status::Zero,
        };
        let label = dim12::classify_full(&input).unwrap();
        assert_eq!(label.family, dim12::Family::S5);
        assert!(label.flags.unwrap().unimodular);
        assert_eq!(
            label.lattice,
            Some(LatticeVerdict::No(NoLatticeReason::UnitConstantTerm)),
            "a = {a}"
        );
    }
    pass(12, "scalar-part and unit-term obstructions fire on every family");
}

#[test]
fn criterion_13_structure_verification() {
    let mut verified = 0;
    for n in 2..=5usize {
        let mut tuples = enumerate_sigma_tuples(n - 1);
        tuples.push(SigmaTuple::new(vec![], vec![], n - 1));
        for t in tuples {
            let max = if t.s > 0 { t.r() + 1 } else { t.r() };
            for ell in 0..=max {
                let data = canonical_data(&t, ell).unwrap();
                assert!(
                    liegroup::verify_hypercomplex_structure(&data),
                    "tuple {t}, ell {ell}"
                );
                verified += 1;
            }
        }
    }
    // all assembled dimension-12 representatives
    use dim12::Family::*;
    let labels: Vec<(dim12::Family, Vec<(&str, Rat)>)> = vec![
        (S1, vec![("a", rat(2)), ("c", rat(-1)), ("d", rat(3))]),
        (S2, vec![("a", rat(0)), ("c", rat(1))]),
        (S3, vec![("a", rat(1)), ("b", rat(1)), ("c", rat(0)), ("d", rat(2))]),
        (S4, vec![("a", rat(-1)), ("b", rat(2)), ("c", rat(1))]),
        (S5, vec![("a", rat(1)), ("c", rat(-1))]),
        (S6, vec![("c", rat(2))]),
        (S7, vec![("a", rat(0)), ("c", rat(1)), ("d", rat(1))]),
        (S8, vec![("c", rat(0)), ("d", rat(1))]),
        (S9, vec![("c", ratio(1, 2))]),
        (S10, vec![("c", rat(0))]),
        (S11, vec![("a", rat(-1)), ("c", rat(2))]),
        (S12, vec![("c", rat(3))]),
        (S13, vec![("a", rat(1))]),
        (S14, vec![("a", rat(0)), ("b", rat(1))]),
        (S15, vec![]),
        (S16, vec![("s", rat(1))]),
        (S17, vec![("a", rat(-2))]),
        (S18, vec![]),
    ];
    for (family, params) in labels {
        let label = dim12::FamilyLabel {
            family,
            params,
            flags: None,
            lattice: None,
        };
        let data = dim12::assemble_input(&dim12::canonical_input(&label));
        assert!(
            liegroup::verify_hypercomplex_structure(&data),
            "family {}",
            label.family.name()
        );
        verified += 1;
    }
    // random commutation-breaking perturbations all fail
    let mut rng = StdRng::seed_from_u64(1313);
    let triple2 = haal::quaternion::StandardJTriple::for_quaternionic_dim(2);
    let mut broken = 0;
    while broken < 100 {
        let base = dim12::b_matrix(
            if rng.gen_bool(0.5) { BCase::B1 } else { BCase::B2 },
            &rat(rng.gen_range(-2..=2)),
            &rat(rng.gen_range(0..=2)),
            &rat(rng.gen_range(-2..=2)),
            &rat(rng.gen_range(0..=2)),
        );
        let mut b = base;
        let i = rng.gen_range(0..8);
        let j = rng.gen_range(0..8);
        let delta = rat(rng.gen_range(1..=3));
        b.set(i, j, b.get(i, j) + &delta);
        if triple2.commutes_with(&b) {
            continue;
        }
        let data = haal::nilpotent::HcxAAData::new(3, Rat::zero(), vec![Rat::zero(); 8], b).unwrap();
        assert!(!liegroup::verify_hypercomplex_structure(&data));
        broken += 1;
    }
    pass(
        13,
        &format!("{verified} structures verified, 100 broken perturbations rejected"),
    );
}

#[test]
fn criterion_14_odd_multiplicity_roots() {
    let mut rng = StdRng::seed_from_u64(1414);
    for case in 0..200 {
        let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let linear = IntPoly::from_i64(&[-sign, 1]); // x -+ 1
        let a = rng.gen_range(0..=2);
        let b = rng.gen_range(1..=2);
        // random monic q with unit constant term
        let deg = rng.gen_range(1..=3);
        let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-4..=4)).collect();
        coeffs[0] = if rng.gen_bool(0.5) { 1 } else { -1 };
        coeffs[deg] = 1;
        let q = IntPoly::from_i64(&coeffs);
        let p = linear.pow(2 * a + 1).mul(&q.pow(2 * b));
        let odd = haal::intpoly::odd_multiplicity_part(&p).unwrap();
        assert_eq!(odd.degree(), Some(1), "case {case}: p = {p}");
        let root = -odd.coeff(0);
        assert!(
            root == BigInt::one() || root == -BigInt::one(),
            "case {case}: root {root}"
        );
        assert_eq!(root, BigInt::from(sign), "case {case}");
    }
    pass(14, "200 random samples: the odd-multiplicity root is always +-1");
}

#[test]
fn acceptance_summary() {
    // quick cross-check that the CLI front door stays wired to the library
    let (code, v) = haal::cli::run(&[
        "poly".into(),
        "delta-check".into(),
        "x^2-3x+1".into(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["member"], json!(true));
    let breakdown = count_classes(4, StructureKind::Hypercomplex);
    assert_eq!(breakdown.total, 6);
}
