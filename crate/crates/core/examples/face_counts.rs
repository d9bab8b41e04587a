//! Weighted face counts of a transversal intersection of two surfaces in R^3,
//! read off the intersection complex and predicted from cell types alone.

use tropint::intersection::{f_vector_counts, unbounded_face_count, vertex_count_curve};
use tropint::polytope::simplex;
use tropint::random::random_transversal_instance;
use tropint::subdivision::perturb_lifts;
use tropint::tropical::TropicalPolynomial;

fn main() -> tropint::Result<()> {
    let fs = random_transversal_instance(3, 2, 11)?;
    for f in &fs {
        println!(
            "{} terms on {:?}",
            f.num_terms(),
            f.newton_polytope().vertices()
        );
    }
    for j in 0..=3 {
        let c = f_vector_counts(&fs, j)?;
        let u = unbounded_face_count(&fs, j)?;
        println!(
            "j = {j}: weighted faces {} = {} (by type), unbounded {} = {}",
            c.cell_sum, c.type_sum, u.face_sum, u.cell_sum
        );
    }

    let simplices: Vec<_> = (1..=2)
        .map(|s| TropicalPolynomial::with_zero_coefficients(simplex(3, s).vertices()))
        .collect::<tropint::Result<_>>()?;
    let generic = perturb_lifts(&simplices, 0)?;
    println!(
        "vertices of the curve cut by D and 2D: {}",
        vertex_count_curve(&generic, 0)?
    );
    Ok(())
}
