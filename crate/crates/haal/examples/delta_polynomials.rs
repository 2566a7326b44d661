//! The Delta families of monic integer polynomials: exact membership
//! through Sturm counts, coefficient tests, resultant coprimality, and the
//! builders that make each degree inhabited.
//!
//! Run with `cargo run --example delta_polynomials`.

use haal::intpoly::{
    binom_necessary, build_delta_prime, cubic_discriminant, delta_check, delta_product,
    enumerate_delta, kurtz_sufficient, power_poly, reciprocal, resultant, IntPoly,
};

fn main() {
    println!("membership checks:");
    for p in [
        IntPoly::h(3),
        IntPoly::h(2),
        IntPoly::f(6, 7),
        IntPoly::f(4, 4),
        IntPoly::from_i64(&[1, -2, 1]),
    ] {
        let v = delta_check(&p);
        println!(
            "  {p}: member = {}, prime subset = {}, failed = {:?}",
            v.member, v.in_delta_prime, v.failed_condition
        );
    }

    println!("\ncubic family x^3 - m x^2 + n x - 1 via the discriminant:");
    for (m, n) in [(6i64, 7i64), (4, 4), (3, 3), (5, 9)] {
        let d = cubic_discriminant(m, n);
        let member = delta_check(&IntPoly::f(m, n)).member;
        println!("  (m, n) = ({m}, {n}): discriminant {d}, member = {member}");
    }

    println!("\ncoefficient filters on x^4 - 9x^3 + 19x^2 - 9x + 1:");
    let p = IntPoly::from_i64(&[1, -9, 19, -9, 1]);
    println!("  binomial-bound necessary test: {}", binom_necessary(&p).unwrap());
    println!("  dominance sufficient test: {}", kurtz_sufficient(&p).unwrap());
    println!("  full membership: {}", delta_check(&p).member);

    println!("\nreciprocals and root powers of h_3 = x^2 - 3x + 1:");
    let h3 = IntPoly::h(3);
    println!("  reciprocal: {}", reciprocal(&h3).unwrap());
    for k in [2i64, 3, -2] {
        println!("  roots to the power {k}: {}", power_poly(&h3, k).unwrap());
    }

    println!("\nproducts stay inside the family when the resultant is nonzero:");
    let r = resultant(&IntPoly::h(3), &IntPoly::h(4)).unwrap();
    let prod = delta_product(&IntPoly::h(3), &IntPoly::h(4)).unwrap().unwrap();
    println!("  res(h_3, h_4) = {r}, product = {prod}");
    println!(
        "  res(h_3, h_3) = {}, product = {:?}",
        resultant(&IntPoly::h(3), &IntPoly::h(3)).unwrap(),
        delta_product(&IntPoly::h(3), &IntPoly::h(3)).unwrap()
    );

    println!("\none member of the prime subset per degree:");
    for n in 2..=8 {
        println!("  degree {n}: {}", build_delta_prime(n));
    }

    println!("\nsmall enumerations:");
    for (n, bound) in [(2usize, 10i64), (3, 12)] {
        let members = enumerate_delta(n, bound);
        println!(
            "  degree {n}, coefficients up to {bound}: {} members",
            members.len()
        );
        for p in members.iter().take(4) {
            println!("    {p}");
        }
    }
}
