//! Integer-conjugacy witnesses for the twelve-dimensional groups that admit
//! lattices, verified numerically against the exact integer models.
//!
//! Run with `cargo run --example lattice_witnesses`.

use haal::liegroup::{
    bock_verify, bock_verify_numeric, lattice_necessary, witness_hyperbolic, witness_quartic,
    witness_sheared_rotation, witness_unipotent_rotation,
};
use haal::matrix::RatMatrix;
use haal::rational::rat;

fn main() {
    let tol = 1e-8;

    println!("hyperbolic family, times log((m + sqrt(m^2-4))/2):");
    for m in [3u32, 5, 8] {
        let (a, w) = witness_hyperbolic(m);
        let r = bock_verify(&a, &w, tol);
        println!(
            "  m = {m}: accepted = {}, char poly defect {:.2e}",
            r.accepted(),
            r.char_poly_defect
        );
    }

    println!("\nunipotent-plus-rotation family, times 2 pi / k:");
    for k in [1u32, 2, 3, 4, 6] {
        let (a, w) = witness_unipotent_rotation(k);
        let r = bock_verify(&a, &w, tol);
        println!("  k = {k}: accepted = {}", r.accepted());
    }

    println!("\nsheared rotation family, five explicit integer matrices:");
    for k in [1u32, 2, 3, 4, 6] {
        let (a, w) = witness_sheared_rotation(k);
        let r = bock_verify(&a, &w, tol);
        println!("  k = {k}: accepted = {}", r.accepted());
    }

    println!("\nquartic family x^4 - x^3 + k x^2 - x + 1 at time one:");
    for k in [3u32, 4, 5] {
        let (a, w) = witness_quartic(k);
        let r = bock_verify_numeric(&a, &w, tol);
        println!("  k = {k}: accepted = {}", r.accepted());
    }

    println!("\na witness that must fail: nilpotent against the identity:");
    let mut a = RatMatrix::zero(3, 3);
    a.set(1, 0, rat(1));
    let w = haal::liegroup::LatticeWitness {
        t0: 1.0,
        e: RatMatrix::identity(3),
        conjugator: None,
    };
    let r = bock_verify(&a, &w, tol);
    println!(
        "  accepted = {}, structure agreed = {}",
        r.accepted(),
        r.structure_ok
    );

    println!("\nthe exact necessary condition (zero scalar part, traceless block):");
    for (mu, tr_zero) in [(rat(0), true), (rat(1), true), (rat(0), false)] {
        let b = if tr_zero {
            RatMatrix::diag(&[rat(1), rat(-1), rat(2), rat(-2)])
        } else {
            RatMatrix::identity(4)
        };
        println!(
            "  mu = {mu}, trace {} -> lattices possible: {}",
            b.trace(),
            lattice_necessary(&mu, &b)
        );
    }
}
