//! Genus of a smooth intersection curve in R^3: the mixed-volume formula, the
//! Betti number of the curve graph, and the toric genus of the polytopes.

use tropint::ehrhart::toric_genus;
use tropint::intersection::{curve_graph, genus};
use tropint::polytope::{cube, simplex};
use tropint::random::smooth_polynomial;

fn main() -> tropint::Result<()> {
    for (name, p) in [
        ("D", simplex(3, 1)),
        ("2D", simplex(3, 2)),
        ("cube", cube(3, 1)),
    ] {
        let fs = [smooth_polynomial(&p, 1)?, smooth_polynomial(&p, 2)?];
        let report = genus(&fs)?;
        let graph = curve_graph(&fs)?;
        println!(
            "({name}, {name}): formula {}, graph {:?}, toric {}, vertices {}, bounded edges {}, rays {}, exact {}",
            report.genus_formula_value,
            report.genus_graph_value,
            toric_genus(&[p.clone(), p.clone()])?,
            graph.vertices.len(),
            graph.bounded_edges.len(),
            graph.rays.len(),
            report.is_exact
        );
    }
    Ok(())
}
