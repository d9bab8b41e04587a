//! Ehrhart and mixed Ehrhart polynomials, with the lattice-point identities they satisfy.

use tropint::ehrhart::{
    ehrhart_polynomial, macdonald_check, mixed_ehrhart, mixed_ehrhart_predicted, pick_surface_check,
};
use tropint::exact_math::rat;
use tropint::polytope::{convex_hull, cube, simplex};

fn main() -> tropint::Result<()> {
    let c = cube(3, 1);
    let e = ehrhart_polynomial(&c)?;
    println!(
        "E(cube) coefficients {:?}",
        e.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    println!("E(cube)(-2) = {}", e.evaluate(&rat(-2)));

    let tetra = convex_hull(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 3]])?;
    let e = ehrhart_polynomial(&tetra)?;
    println!(
        "E(Reeve tetrahedron) coefficients {:?}",
        e.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>()
    );

    let pair = [simplex(3, 2), cube(3, 1)];
    let me = mixed_ehrhart(&pair)?;
    let predicted = mixed_ehrhart_predicted(&pair)?;
    println!(
        "ME(2D, cube) {:?}, closed form {:?}",
        me.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>(),
        predicted
            .coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    for p in [cube(2, 1), cube(3, 1), simplex(2, 3)] {
        let pick = pick_surface_check(&p)?;
        let mac = macdonald_check(&p)?;
        println!(
            "surface {} = {}, Macdonald {} = {}",
            pick.lhs, pick.rhs, mac.lhs, mac.rhs
        );
    }
    Ok(())
}
