//! Convex hulls, faces, volumes and Minkowski sums of lattice polytopes.

use tropint::polytope::{convex_hull, cube, minkowski_sum, simplex};
use tropint::tropical::TropicalPolynomial;

fn main() -> tropint::Result<()> {
    let f = TropicalPolynomial::parse("0 + 2x + 3y^2 + x^2y + (-1)xy", 2)?;
    let p = f.newton_polytope();
    println!("f = {f}");
    println!("P(f) vertices {:?}", p.vertices());
    println!(
        "f-vector {:?}, area {}, lattice points {}",
        p.f_vector(),
        p.euclidean_volume(),
        p.lattice_points().len()
    );

    let hexagon = convex_hull(&[
        vec![0, 0],
        vec![1, 0],
        vec![2, 1],
        vec![2, 2],
        vec![1, 2],
        vec![0, 1],
    ])?;
    let sum = minkowski_sum(&p, &hexagon)?;
    println!(
        "P(f) + hexagon has {} vertices and area {}",
        sum.vertices().len(),
        sum.euclidean_volume()
    );

    for (name, q) in [
        ("3-simplex", simplex(3, 1)),
        ("2 * 3-simplex", simplex(3, 2)),
        ("unit cube", cube(3, 1)),
    ] {
        println!(
            "{name}: f-vector {:?}, volume {}, normalized volume {}",
            q.f_vector(),
            q.euclidean_volume(),
            q.lattice_volume()
        );
        for facet in q.faces(2)? {
            println!(
                "  facet {:?} with normal {:?}",
                facet.vertices, facet.normal
            );
        }
    }
    Ok(())
}
