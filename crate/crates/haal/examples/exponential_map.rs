//! The exponential map of almost abelian groups: the entire function
//! behind it, invertibility for all times decided exactly, the
//! one-parameter subgroup identity, and group isomorphisms built from
//! scalar conjugations.
//!
//! Run with `cargo run --example exponential_map`.

use haal::liegroup::{
    ad_conjugate_iso, detect_heisenberg, exp_group, exp_group_exact, lie_iso_build, log_group,
    one_parameter_defect_exact, phi_invertible_all_t, phi_matrix_exact, phi_scalar,
};
use haal::matrix::RatMatrix;
use haal::rational::{rat, ratio};

fn main() {
    println!("the scalar function (e^x - 1)/x:");
    for x in [0.0, 1.0, -2.0] {
        println!("  phi({x}) = {}", phi_scalar(x));
    }

    println!("\nexact values on nilpotent matrices:");
    let j2 = RatMatrix::jordan_block(2);
    println!("phi(j_2) =\n{}", phi_matrix_exact(&rat(1), &j2).unwrap());
    let (_, v) = exp_group_exact(&rat(1), &[rat(0), rat(1)], &j2).unwrap();
    println!("exp(1, e_2) lands at ({:?})", v);

    println!("invertibility of phi(tA) for every t, decided exactly:");
    for (name, m) in [
        ("nilpotent j_4", RatMatrix::jordan_block(4)),
        ("diag(1, -1)", RatMatrix::diag(&[rat(1), rat(-1)])),
        ("rotation generator", RatMatrix::from_i64_rows(&[&[0, -1], &[1, 0]])),
    ] {
        println!("  {name}: {}", phi_invertible_all_t(&m));
    }

    println!("\nexp and log invert each other away from the obstruction:");
    let a = RatMatrix::diag(&[rat(1), rat(-2)]);
    let (t, w) = exp_group(0.7, &[0.3, -1.1], &a);
    let (_, back) = log_group(t, &w, &a).unwrap();
    println!("  (0.7, [0.3, -1.1]) -> exp -> log -> ({t}, {back:?})");

    println!("\nthe one-parameter subgroup identity, exact on rational data:");
    let mut n3 = RatMatrix::zero(3, 3);
    n3.set(1, 0, ratio(1, 2));
    n3.set(2, 1, rat(-2));
    let defect = one_parameter_defect_exact(
        &n3,
        &ratio(3, 2),
        &[rat(1), rat(0), rat(-1)],
        &ratio(2, 3),
        &ratio(-5, 4),
    )
    .unwrap();
    println!("  defect vector: {defect:?}");

    println!("\nscalar conjugation between structure matrices:");
    let a1 = RatMatrix::diag(&[rat(2), rat(-2)]);
    let a2 = RatMatrix::diag(&[rat(1), rat(-1)]);
    let (c, p) = ad_conjugate_iso(&a1, &a2).unwrap();
    println!("  diag(2,-2) = {c} * P diag(1,-1) P^(-1) with P =\n{p}");
    println!(
        "  no scalar links diag(1,2) and diag(1,3): {:?}",
        ad_conjugate_iso(&RatMatrix::diag(&[rat(1), rat(2)]), &RatMatrix::diag(&[rat(1), rat(3)]))
            .is_none()
    );

    println!("the induced group isomorphism and its numeric check:");
    let iso = lie_iso_build(&a1, &a2, &c, &p, 1, &[0.25, -0.5]).unwrap();
    println!(
        "  scalar {}, largest homomorphism defect over 100 random pairs: {:.2e}",
        iso.mu, iso.max_defect
    );
    let iso = lie_iso_build(&a2, &a2, &rat(1), &RatMatrix::identity(2), -1, &[0.0, 0.0]).unwrap();
    println!(
        "  time-reversing map exists through an anticommuting intertwiner, defect {:.2e}",
        iso.max_defect
    );

    println!("\nthe excluded degenerate type:");
    let h = RatMatrix::block_diag(&[RatMatrix::jordan_block(2), RatMatrix::zero(2, 2)]);
    println!("  rank-one square-zero block detected: {}", detect_heisenberg(&h));
}
