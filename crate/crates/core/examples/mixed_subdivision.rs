//! The privileged subdivision of a pair of plane curves and the dual intersection complex.

use tropint::intersection::intersection_complex;
use tropint::subdivision::{is_transversal, privileged_subdivision};
use tropint::tropical::TropicalPolynomial;

fn main() -> tropint::Result<()> {
    let f = TropicalPolynomial::parse("0 + x + y + (-1)xy", 2)?;
    let g = TropicalPolynomial::parse("1 + (-2)x^2 + y", 2)?;
    let fs = [f, g];
    let s = privileged_subdivision(&fs)?;
    println!("cells by dimension {:?}", s.num_cells_by_dim());
    for cell in s.cells() {
        println!(
            "dim {} type {:?}{}{} vertices {:?}",
            cell.dim,
            cell.type_vector,
            if cell.is_mixed() { " mixed" } else { "" },
            if cell.on_boundary { " boundary" } else { "" },
            cell.vertices()
        );
    }
    println!("transversal: {}", is_transversal(&s).transversal);

    let complex = intersection_complex(&fs)?;
    println!("intersection f-vector {:?}", complex.f_vector());
    for cell in complex.cells() {
        println!(
            "  {}-cell, {}, multiplicity {}",
            cell.dim,
            if cell.bounded { "bounded" } else { "unbounded" },
            cell.multiplicity
        );
    }
    Ok(())
}
