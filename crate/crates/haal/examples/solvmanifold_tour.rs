//! From a Delta polynomial to a solvmanifold: the integer holonomy model,
//! the lattice presentation, torus splitting, product embeddings, and the
//! two-to-one diffeomorphism classification.
//!
//! Run with `cargo run --example solvmanifold_tour`.

use haal::intpoly::{power_poly, IntPoly};
use haal::solv::{build, diffeo_equiv, product_embedding, split_torus_factor};

fn main() {
    let h3 = IntPoly::h(3);
    let d = build(&h3).unwrap();
    println!("descriptor for {h3}:");
    println!("  solvmanifold dimension: {}", d.dim());
    println!("  companion matrix:\n{}", d.companion);
    println!("  integer period map: {} x {}", d.holonomy.rows(), d.holonomy.cols());
    println!("  char poly of the period map: {}", d.holonomy.char_poly());
    println!("  root logarithms: {:?}", d.xp_numeric);
    println!("  lattice rank: {}", d.lattice.rank);

    println!("\ntorus factors split off at a root of one:");
    let p = IntPoly::from_i64(&[-1, 1]).mul(&h3);
    println!("  {p}: quotient = {:?}", split_torus_factor(&p).unwrap().map(|q| q.to_string()));
    let f = IntPoly::f(6, 7);
    println!("  {f}: quotient = {:?}", split_torus_factor(&f).unwrap().map(|q| q.to_string()));

    println!("\nproduct embedding of coprime members:");
    let e = product_embedding(&h3, &IntPoly::h(4)).unwrap();
    println!(
        "  {} sits inside a product of dimension {} with codimension {}",
        e.descriptor.p, e.ambient_dim, e.codimension
    );

    println!("\ndiffeomorphism classes in the root-power family of {h3}:");
    for j in 1..=4i64 {
        let pj = power_poly(&h3, j).unwrap();
        let pnegj = power_poly(&h3, -j).unwrap();
        let p1 = power_poly(&h3, 1).unwrap();
        println!(
            "  k = {j}: poly {pj}, same manifold as k = {}: {}, as k = 1: {}",
            -j,
            diffeo_equiv(&pj, &pnegj).unwrap(),
            diffeo_equiv(&pj, &p1).unwrap()
        );
    }

    println!("\nreciprocal pairs give one manifold:");
    println!(
        "  {} vs {}: {}",
        IntPoly::f(6, 7),
        IntPoly::f(7, 6),
        diffeo_equiv(&IntPoly::f(6, 7), &IntPoly::f(7, 6)).unwrap()
    );
    println!(
        "  {} vs {}: {}",
        IntPoly::f(6, 7),
        IntPoly::f(6, 8),
        diffeo_equiv(&IntPoly::f(6, 7), &IntPoly::f(6, 8)).unwrap()
    );
}
