//! Cell census of the subdivisions of two plane curves, their pair and their product.
//! Prints JSON; the acceptance tests compare it against a golden copy.

use serde_json::json;
use tropint::subdivision::privileged_subdivision;
use tropint::tropical::TropicalPolynomial;

pub const F: &str = "-62x + 97x^2 + -73y^2 + -4x^3y + -83x^2y^2 + -10y^4";
pub const G: &str = "-10x^2y + 31x^3y + -51xy^3 + 77y^4 + 95x^2y^3 + y^5";

fn main() -> tropint::Result<()> {
    let f = TropicalPolynomial::parse(F, 2)?;
    let g = TropicalPolynomial::parse(G, 2)?;
    let product = f.tropical_product(&g)?;
    let mut census = serde_json::Map::new();
    for (name, fs) in [
        ("f", vec![f.clone()]),
        ("g", vec![g.clone()]),
        ("pair", vec![f, g]),
        ("product", vec![product]),
    ] {
        let s = privileged_subdivision(&fs)?;
        census.insert(
            name.into(),
            json!({ "cells_by_dim": s.num_cells_by_dim(), "subdivision": s.to_json() }),
        );
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&census).expect("serializable")
    );
    Ok(())
}
