//! Writes SVG drawings of plane tropical curves into the current directory.

use tropint::svg::{plane_curve, render_svg, Viewport};
use tropint::tropical::TropicalPolynomial;

fn main() -> tropint::Result<()> {
    let curves = [
        ("line.svg", "0 + x + y", None),
        ("conic.svg", "0 + x + y + (-1)x^2 + xy + (-1)y^2", None),
        (
            "cubic.svg",
            "0 + 2x + 2y + 2x^2 + 3xy + 2y^2 + x^3 + 2x^2y + 2xy^2 + y^3",
            Some("-5,-5,3,3"),
        ),
        ("double.svg", "0 + 3x + x^2", None),
    ];
    for (file, text, viewport) in curves {
        let f = TropicalPolynomial::parse(text, 2)?;
        let curve = plane_curve(&f)?;
        let vp = viewport.map(str::parse::<Viewport>).transpose()?;
        std::fs::write(file, render_svg(&f, vp)?).expect("writable directory");
        println!(
            "{file}: {} vertices, {} edges",
            curve.vertices.len(),
            curve.edges.len()
        );
    }
    Ok(())
}
