//! Census of nilpotent hypercomplex almost abelian Lie algebras: class
//! counts by dimension, the canonical matrix menagerie for one partition,
//! and admissibility tests on raw Jordan data.
//!
//! Run with `cargo run --example nilpotent_census`.

use haal::nilpotent::{
    admissible, canonical_matrix, count_classes, count_two_step,
    JordanData, StructureKind,
};

fn main() {
    let kind = StructureKind::Hypercomplex;

    println!("isomorphism classes of nilpotent structures, dimension 4n:");
    for n in 2..=8 {
        let c = count_classes(n, kind);
        println!(
            "  n = {n} (dim {:>2}): {:>3} classes, {} two-step",
            4 * n,
            c.total,
            count_two_step(n, kind)
        );
    }

    println!("\nbreakdown for n = 4 (dimension 16):");
    let c = count_classes(4, kind);
    println!("  trivial block: 1 class");
    for (t, classes) in &c.by_tuple {
        println!("  {t}: {classes} classes");
    }

    println!("\ncanonical matrices for the partition (m=[2], p=[1], s=1), n = 4:");
    let tuple = haal::quaternion::SigmaTuple::new(vec![2], vec![1], 1);
    for ell in 0..=2 {
        let c = canonical_matrix(&tuple, ell, kind).unwrap();
        println!(
            "  ell = {ell}: {}-step, kernel dimensions {:?}",
            c.step(),
            c.matrix.kernel_dim_sequence()
        );
    }
    let c = canonical_matrix(&tuple, 1, kind).unwrap();
    println!("the ell = 1 matrix itself:\n{}", c.matrix);

    println!("admissibility of Jordan types in dimension 11:");
    for (parts, d) in [
        (vec![(3usize, 3usize), (2, 1)], 0usize),
        (vec![(2, 3)], 5),
        (vec![(2, 2)], 7),
        (vec![(2, 4)], 3),
    ] {
        let jd = JordanData::new(parts.clone(), d).unwrap();
        let v = admissible(&jd, kind).unwrap();
        println!(
            "  parts {parts:?}, d = {d}: admissible = {}, condition = {:?}",
            v.admissible, v.condition
        );
    }
}
