//! The twelve-dimensional classification in action: defining data goes in,
//! a normalized family label with algebraic flags and a lattice verdict
//! comes out.
//!
//! Run with `cargo run --example dim12_families`.

use haal::dim12::{classify_full, BCase, Dim12Input, V0Status};
use haal::rational::{rat, ratio, Rat};
use num_traits::Zero;

fn show(input: Dim12Input) {
    let desc = format!(
        "mu={}, {:?}, a={}, b={}, c={}, d={}, v0={:?}",
        input.mu, input.bcase, input.a, input.b, input.c, input.d, input.v0_status
    );
    match classify_full(&input) {
        Ok(label) => {
            let f = label.flags.unwrap();
            let mut tags = Vec::new();
            if f.unimodular {
                tags.push("unimodular".to_string());
            }
            if f.completely_solvable {
                tags.push("completely solvable".to_string());
            }
            if let Some(step) = f.nilpotent_step {
                tags.push(format!("{step}-step nilpotent"));
            }
            if f.hyper_kahler {
                tags.push("hyper-Kahler".to_string());
            } else if f.hkt {
                tags.push("HKT".to_string());
            }
            println!("  {desc}\n    -> {label}  [{}]", tags.join(", "));
            println!("       lattice: {:?}", label.lattice.unwrap());
        }
        Err(e) => println!("  {desc}\n    -> rejected: {e}"),
    }
}

fn main() {
    let zero = Rat::zero();
    let input = |mu: Rat, bcase, a: Rat, b: Rat, c: Rat, d: Rat, v0| Dim12Input {
        mu,
        bcase,
        a,
        b,
        c,
        d,
        v0_status: v0,
    };

    println!("diagonal quaternionic blocks:");
    // hyperbolic pair, hits the countable lattice family
    show(input(zero.clone(), BCase::B1, rat(1), rat(0), rat(-1), rat(0), V0Status::Zero));
    // hyper-Kahler commuting rotations
    show(input(zero.clone(), BCase::B1, rat(0), rat(2), rat(0), rat(2), V0Status::Zero));
    // generic rotations, not unimodular
    show(input(zero.clone(), BCase::B1, rat(1), rat(2), rat(3), rat(4), V0Status::Zero));
    // unimodular rotations with unequal speeds: partial lattice knowledge
    show(input(zero.clone(), BCase::B1, rat(1), rat(1), rat(-1), rat(2), V0Status::Zero));
    // split family at a nonzero parameter: exact obstruction
    show(input(zero.clone(), BCase::B1, ratio(1, 2), rat(0), ratio(-1, 2), rat(1), V0Status::Zero));
    // translation vector outside the image
    show(input(zero.clone(), BCase::B1, rat(0), rat(0), rat(0), rat(1), V0Status::NotInImage));

    println!("\nJordan-type quaternionic block:");
    // scalar part zero, rotation speed normalized away
    show(input(zero.clone(), BCase::B2, rat(-2), rat(1), zero.clone(), zero.clone(), V0Status::Zero));
    // sheared rotation with lattices
    show(input(zero.clone(), BCase::B2, rat(0), rat(3), zero.clone(), zero.clone(), V0Status::Zero));
    // the two nilpotent Jordan classes
    show(input(zero.clone(), BCase::B2, zero.clone(), zero.clone(), zero.clone(), zero.clone(), V0Status::Zero));
    show(input(zero.clone(), BCase::B2, zero.clone(), zero.clone(), zero.clone(), zero.clone(), V0Status::NotInImage));
    // nonzero scalar part: unimodularity pins a = -3/8, no lattices
    show(input(rat(8), BCase::B2, rat(-3), rat(0), zero.clone(), zero.clone(), V0Status::Zero));
    show(input(rat(2), BCase::B2, rat(2), rat(0), zero.clone(), zero, V0Status::NotInImage));
}
