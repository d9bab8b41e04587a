//! Mixed volumes two ways, and the stable intersection points whose weights add up to them.

use tropint::intersection::stable_intersection_points;
use tropint::mixed_volume::{mixed_volume_cells, mixed_volume_ie, MVQuery};
use tropint::polytope::{cube, simplex};
use tropint::tropical::TropicalPolynomial;

fn main() -> tropint::Result<()> {
    let q = MVQuery::new(vec![simplex(3, 2), cube(3, 1)], vec![2, 1]);
    println!("MV(2D, 2D, C) by polarization: {}", mixed_volume_ie(&q)?);
    println!(
        "MV(2D, 2D, C) by mixed cells:  {}",
        mixed_volume_cells(&q, 0)?
    );

    let fs = [
        TropicalPolynomial::parse("0 + x + 3y + x^2y", 2)?,
        TropicalPolynomial::parse("1 + 2x + (-1)y^2 + xy", 2)?,
    ];
    let polytopes: Vec<_> = fs.iter().map(TropicalPolynomial::newton_polytope).collect();
    let mv = mixed_volume_ie(&MVQuery::each_once(polytopes))?;
    let stable = stable_intersection_points(&fs, 0)?;
    println!("MV of the Newton polygons: {mv}");
    for p in &stable.points {
        println!(
            "  stable point {:?} with weight {}",
            p.point.iter().map(ToString::to_string).collect::<Vec<_>>(),
            p.weight
        );
    }
    println!("total weight {}", stable.total_weight);
    Ok(())
}
