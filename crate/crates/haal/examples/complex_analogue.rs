//! The complex-structure analogue of the nilpotent classification: the same
//! engine with half-size blocks. Canonical matrices use paired coordinates,
//! admissibility reads the congruences modulo two, and the smallest case
//! recovers the Heisenberg algebra.
//!
//! Run with `cargo run --example complex_analogue`.

use haal::matrix::conjugate_test;
use haal::matrix::RatMatrix;
use haal::nilpotent::{
    admissible, canonical_matrix, count_classes, JordanData, StructureKind,
};
use haal::quaternion::SigmaTuple;

fn main() {
    let kind = StructureKind::Complex;

    println!("class counts for dimension 2n algebras with a complex structure:");
    for n in 2..=8 {
        println!("  n = {n} (dim {:>2}): {} classes", 2 * n, count_classes(n, kind).total);
    }

    println!("\nthe Heisenberg algebra as the smallest canonical class:");
    let tuple = SigmaTuple::new(vec![], vec![], 1);
    let c = canonical_matrix(&tuple, 1, kind).unwrap();
    println!("{}", c.matrix);
    // rank one and square zero characterizes it among almost abelian types
    println!(
        "  rank {} and square zero: {}",
        c.matrix.rank(),
        c.matrix.pow(2).is_zero()
    );
    let jd = JordanData::new(vec![(2, 1)], 1).unwrap();
    let v = admissible(&jd, kind).unwrap();
    println!(
        "  j_2 + 0_1 admissible: {} via {:?}",
        v.admissible, v.condition
    );

    println!("\ncanonical forms for the partition (m=[2], p=[1], s=1), n = 4:");
    for ell in 0..=2 {
        let c = canonical_matrix(&SigmaTuple::new(vec![2], vec![1], 1), ell, kind).unwrap();
        println!(
            "  ell = {ell}: size {}, {}-step, kernel dimensions {:?}",
            c.matrix.rows(),
            c.step(),
            c.matrix.kernel_dim_sequence()
        );
    }

    println!("\nadmissibility in dimension 7 under the half-size congruences:");
    for (parts, d) in [
        (vec![(2usize, 1usize)], 5usize),
        (vec![(2, 2)], 3),
        (vec![(3, 1), (2, 1)], 2),
        (vec![(4, 1), (3, 1)], 0),
        (vec![(3, 2)], 1),
    ] {
        let jd = JordanData::new(parts.clone(), d).unwrap();
        let v = admissible(&jd, kind).unwrap();
        print!(
            "  parts {parts:?}, d = {d}: admissible = {}, condition = {:?}",
            v.admissible, v.condition
        );
        if let Some(w) = v.witness {
            let same = conjugate_test(&w, &jd.matrix());
            print!(", witness conjugate to the type: {same}");
        }
        println!();
    }

    println!("\npaired Jordan blocks versus plain ones:");
    let grouped = haal::nilpotent::grouped_jordan(3, 2);
    let plain = RatMatrix::block_diag(&[RatMatrix::jordan_block(3), RatMatrix::jordan_block(3)]);
    println!(
        "  the paired block on six coordinates is conjugate to j_3 + j_3: {}",
        conjugate_test(&grouped, &plain)
    );
}
