//! Cross-module property tests: the structural invariants that tie the
//! polynomial machinery, the classification engine and the numeric layer
//! together.

use haal::intpoly::{
    binom_necessary, delta_check, enumerate_delta, kurtz_sufficient, reciprocal, resultant,
    IntPoly,
};
use haal::matrix::RatMatrix;
use haal::nilpotent::{canonical_data, identify_class, CanonicalKind, HcxAAData};
use haal::numeric::complex_roots;
use haal::quaternion::{sigma_inv, QuatMatrix, Quaternion, SigmaTuple};
use haal::rational::{rat, rat_to_f64, Rat};
use haal::solv::diffeo_equiv;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn membership_implies_binomial_bound() {
    // enumeration endpoints sized to finish quickly; the degree-five side is
    // padded with constructed members whose coefficients exceed any small
    // enumeration bound
    let mut members: Vec<IntPoly> = Vec::new();
    members.extend(enumerate_delta(2, 60));
    members.extend(enumerate_delta(3, 40));
    members.extend(enumerate_delta(4, 30));
    members.extend(enumerate_delta(5, 22));
    for m in 4..=10i64 {
        let p = IntPoly::f(6, 7).mul(&IntPoly::h(m));
        if delta_check(&p).member {
            members.push(p);
        }
        let q = IntPoly::from_i64(&[-1, 17, -70, 70, -17, 1]);
        if delta_check(&q).member {
            members.push(q);
        }
    }
    assert!(members.len() > 1500);
    for p in &members {
        assert!(
            binom_necessary(p).unwrap(),
            "member violates the binomial bound: {p}"
        );
    }
}

#[test]
fn kurtz_implies_membership_on_quartic_grid() {
    let mut fired = 0;
    for m in 1..=20i64 {
        for r in 1..=20i64 {
            for n in 1..=110i64 {
                let p = IntPoly::from_i64(&[1, -r, n, -m, 1]);
                if kurtz_sufficient(&p).unwrap() {
                    assert!(delta_check(&p).member, "(m, n, r) = ({m}, {n}, {r})");
                    fired += 1;
                }
            }
        }
    }
    // the window 2 sqrt(mr) < n < min(m^2, r^2)/4 opens often enough
    assert!(fired > 300, "only {fired} quartics passed the sufficient test");
}

#[test]
fn reciprocal_preserves_membership() {
    let mut members: Vec<IntPoly> = (3..=12).map(IntPoly::h).collect();
    members.push(IntPoly::f(6, 7));
    members.push(IntPoly::f(5, 5));
    members.push(IntPoly::h(3).mul(&IntPoly::h(4)));
    for p in &members {
        let r = reciprocal(p).unwrap();
        assert!(delta_check(&r).member, "reciprocal of {p}");
        assert_eq!(reciprocal(&r).unwrap(), *p);
    }
}

#[test]
fn resultant_zero_iff_roots_intersect() {
    let mut rng = StdRng::seed_from_u64(77);
    let random_poly = |rng: &mut StdRng, deg: usize| -> IntPoly {
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-4..=4)).collect();
        c[deg] = rng.gen_range(1..=3);
        IntPoly::from_i64(&c)
    };
    for _ in 0..60 {
        let da = rng.gen_range(1..=3);
        let a = random_poly(&mut rng, da);
        let db = rng.gen_range(1..=3);
        let b = random_poly(&mut rng, db);
        let share = rng.gen_bool(0.5);
        let (p, q) = if share {
            let common = random_poly(&mut rng, 1);
            (a.mul(&common), b.mul(&common))
        } else {
            (a, b)
        };
        if p.degree().is_none() || q.degree().is_none() {
            continue;
        }
        // multiple roots defeat the numeric oracle; keep the samples simple
        let squarefree =
            |f: &IntPoly| f.gcd(&f.derivative()).degree() == Some(0) || f.degree() == Some(0);
        if !squarefree(&p) || !squarefree(&q) {
            continue;
        }
        let res = resultant(&p, &q).unwrap();
        let roots_p = complex_roots(
            &p.coeffs().iter().map(|c| rat_to_f64(&Rat::from_integer(c.clone()))).collect::<Vec<_>>(),
        );
        let roots_q = complex_roots(
            &q.coeffs().iter().map(|c| rat_to_f64(&Rat::from_integer(c.clone()))).collect::<Vec<_>>(),
        );
        let intersect = roots_p
            .iter()
            .any(|x| roots_q.iter().any(|y| (x - y).norm() < 1e-9));
        assert_eq!(res.is_zero(), intersect, "p = {p}, q = {q}, res = {res}");
    }
}

#[test]
fn diffeo_classes_pair_up() {
    // a finite sample of members: classes have size at most two, and size
    // one exactly for the self-reciprocal ones
    let mut sample: Vec<IntPoly> = (3..=9).map(IntPoly::h).collect();
    sample.push(IntPoly::f(6, 7));
    sample.push(IntPoly::f(7, 6));
    sample.push(IntPoly::f(5, 6));
    sample.push(IntPoly::f(6, 5));
    sample.push(IntPoly::from_i64(&[1, -7, 14, -7, 1]));
    for p in &sample {
        // reflexivity and symmetry on the sample
        assert!(diffeo_equiv(p, p).unwrap());
        let class: Vec<&IntPoly> = sample
            .iter()
            .filter(|q| diffeo_equiv(p, q).unwrap())
            .collect();
        assert!(class.len() <= 2, "class of {p} too large");
        let self_reciprocal = reciprocal(p).unwrap() == *p;
        assert_eq!(class.len() == 1, self_reciprocal || !sample.contains(&reciprocal(p).unwrap()), "p = {p}");
        if self_reciprocal {
            assert_eq!(class.len(), 1);
        }
        // transitivity through the explicit classification
        for q in &sample {
            for r in &sample {
                if diffeo_equiv(p, q).unwrap() && diffeo_equiv(q, r).unwrap() {
                    assert!(diffeo_equiv(p, r).unwrap());
                }
            }
        }
    }
}

fn random_invertible_quaternionic(rng: &mut StdRng, q: usize) -> RatMatrix {
    loop {
        let m = QuatMatrix::from_rows(
            (0..q)
                .map(|_| {
                    (0..q)
                        .map(|_| {
                            Quaternion::new(
                                rat(rng.gen_range(-2..=2)),
                                rat(rng.gen_range(-2..=2)),
                                rat(rng.gen_range(-2..=2)),
                                rat(rng.gen_range(-2..=2)),
                            )
                        })
                        .collect()
                })
                .collect(),
        );
        let real = sigma_inv(&m);
        if real.rank() == 4 * q {
            return real;
        }
    }
}

#[test]
fn identify_class_is_conjugation_invariant() {
    let mut rng = StdRng::seed_from_u64(2024);
    let tuples = [
        SigmaTuple::new(vec![2], vec![1], 0),
        SigmaTuple::new(vec![2], vec![1], 1),
        SigmaTuple::new(vec![3], vec![1], 0),
    ];
    for t in &tuples {
        let max = if t.s > 0 { t.r() + 1 } else { t.r() };
        for ell in 0..=max {
            let data = canonical_data(t, ell).unwrap();
            let base = identify_class(&data).unwrap();
            for _ in 0..3 {
                // transport the data by a quaternion-linear base change
                let p = random_invertible_quaternionic(&mut rng, t.quat_dim());
                let pinv = p.inverse().unwrap();
                let b = p.mul(&data.b).mul(&pinv);
                let v0 = p.mul_vec(&data.v0);
                let moved = HcxAAData::new(data.n, Rat::zero(), v0, b).unwrap();
                let got = identify_class(&moved).unwrap();
                assert_eq!(
                    kind_key(&got.kind),
                    kind_key(&base.kind),
                    "tuple {t}, ell {ell}"
                );
            }
        }
    }
}

fn kind_key(k: &CanonicalKind) -> String {
    match k {
        CanonicalKind::Abelian => "abelian".into(),
        CanonicalKind::N { s } => format!("n:{s}"),
        CanonicalKind::A { sigma, ell } => format!("a:{sigma}:{ell}"),
    }
}
