//! Quaternionic linear algebra over the rationals: the block correspondence
//! between quaternion matrices and the real matrices commuting with the
//! standard triple, and the partition invariant of nilpotent classes.
//!
//! Run with `cargo run --example quaternionic_matrices`.

use haal::quaternion::{
    quat_jordan_nilpotent, real_jordan_quad, sigma, sigma_inv, sigma_tuple_from_real, QuatMatrix,
    Quaternion, StandardJTriple,
};
use haal::matrix::RatMatrix;
use haal::rational::rat;

fn main() {
    println!("one quaternion becomes a 4 x 4 real block:");
    let q = Quaternion::new(rat(1), rat(2), rat(-1), rat(3));
    println!("1 + 2i - j + 3k ->\n{}", q.real_block());

    println!("the correspondence is multiplicative:");
    let a = QuatMatrix::from_rows(vec![
        vec![Quaternion::i(), Quaternion::one()],
        vec![Quaternion::zero(), Quaternion::j()],
    ]);
    let b = QuatMatrix::from_rows(vec![
        vec![Quaternion::k(), Quaternion::zero()],
        vec![Quaternion::one(), Quaternion::i()],
    ]);
    let lhs = sigma_inv(&a.mul(&b));
    let rhs = sigma_inv(&a).mul(&sigma_inv(&b));
    println!("  real form of (AB) equals product of real forms: {}", lhs == rhs);

    println!("\nthe standard triple commutes with every such block matrix:");
    let triple = StandardJTriple::for_quaternionic_dim(2);
    println!("  J1 J2 = J3: {}", triple.j1.mul(&triple.j2) == triple.j3);
    println!("  commutes with the real form of A: {}", triple.commutes_with(&sigma_inv(&a)));

    println!("\nreading a real matrix back as quaternionic:");
    let real = real_jordan_quad(2);
    let back = sigma(&real).unwrap();
    println!(
        "  the 8 x 8 quad Jordan block reads back as J_2(0): {}",
        back == QuatMatrix::jordan_block(2, &Quaternion::zero())
    );
    println!(
        "  a generic real matrix is rejected: {:?}",
        sigma(&RatMatrix::jordan_block(4)).is_err()
    );

    println!("\npartition invariants of nilpotent classes:");
    let m = QuatMatrix::block_diag(&[
        QuatMatrix::jordan_block(3, &Quaternion::zero()),
        QuatMatrix::jordan_block(2, &Quaternion::zero()),
        QuatMatrix::zero(1),
    ]);
    println!("  J_3 + J_2 + 0_1: {}", quat_jordan_nilpotent(&m).unwrap());
    let real = sigma_inv(&m);
    println!("  from the real form: {}", sigma_tuple_from_real(&real).unwrap());
    println!(
        "  kernel dimensions of the real form (all divisible by four): {:?}",
        real.kernel_dim_sequence()
    );
}
