//! Planar tropical curves: exact geometry and SVG drawings.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact_math::{dot_point, primitive, Rational};
use crate::subdivision::privileged_subdivision;
use crate::tropical::{dual_vertex_coordinates, tie_solution, TropicalPolynomial};

#[derive(Clone, Debug, PartialEq)]
pub enum EdgeGeometry {
    Segment {
        from: Vec<Rational>,
        to: Vec<Rational>,
    },
    Ray {
        origin: Vec<Rational>,
        direction: Vec<BigInt>,
    },
    Line {
        through: Vec<Rational>,
        direction: Vec<BigInt>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlaneEdge {
    pub geometry: EdgeGeometry,
    /// Lattice length of the dual edge.
    pub multiplicity: Rational,
}

/// The curve `X(f) ⊂ R^2`: vertices dual to the 2-cells of `Γ(f)` and edges dual to its 1-cells.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneCurve {
    pub vertices: Vec<Vec<Rational>>,
    pub edges: Vec<PlaneEdge>,
}

pub fn plane_curve(f: &TropicalPolynomial) -> Result<PlaneCurve> {
    if f.n_vars() != 2 {
        return Err(Error::Precondition(format!(
            "drawing needs 2 variables, got {}",
            f.n_vars()
        )));
    }
    let fs = std::slice::from_ref(f);
    let s = privileged_subdivision(fs)?;
    let total = s.total_polytope();
    let mut vertex_of = vec![None; s.cells().len()];
    let mut vertices = Vec::new();
    for &i in s.indices_of_dim(2) {
        vertex_of[i] = Some(vertices.len());
        vertices.push(dual_vertex_coordinates(fs, s.cell(i))?);
    }
    let mut edges = Vec::new();
    for &i in s.indices_of_dim(1) {
        let cell = s.cell(i);
        let (a, b) = (&cell.vertices()[0], &cell.vertices()[1]);
        let normal = primitive(&[BigInt::from(b[1] - a[1]), BigInt::from(a[0] - b[0])]);
        let multiplicity = cell.cell_polytope.lattice_volume();
        let ends: Vec<usize> = s
            .cofacets_of(i)
            .iter()
            .filter_map(|&j| vertex_of[j])
            .collect();
        let geometry = match ends.as_slice() {
            [u, v] => EdgeGeometry::Segment {
                from: vertices[*u].clone(),
                to: vertices[*v].clone(),
            },
            [u] => {
                let at_edge = dot_point(&normal, a);
                let outward = total
                    .vertices()
                    .iter()
                    .all(|p| dot_point(&normal, p) <= at_edge);
                let direction = if outward {
                    normal
                } else {
                    normal.iter().map(|x| -x).collect()
                };
                EdgeGeometry::Ray {
                    origin: vertices[*u].clone(),
                    direction,
                }
            }
            _ => {
                let sol = tie_solution(fs, &cell.summand_points).ok_or_else(|| {
                    Error::InfeasibleCell("edge tie system is inconsistent".into())
                })?;
                EdgeGeometry::Line {
                    through: sol.particular,
                    direction: normal,
                }
            }
        };
        edges.push(PlaneEdge {
            geometry,
            multiplicity,
        });
    }
    Ok(PlaneCurve { vertices, edges })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl FromStr for Viewport {
    type Err = Error;

    /// Parses `xmin,ymin,xmax,ymax`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Precondition(format!("viewport '{s}': {e}")))?;
        match parts[..] {
            [xmin, ymin, xmax, ymax] if xmin < xmax && ymin < ymax => Ok(Viewport {
                xmin,
                ymin,
                xmax,
                ymax,
            }),
            _ => Err(Error::Precondition(format!(
                "viewport '{s}' must be xmin,ymin,xmax,ymax with min < max"
            ))),
        }
    }
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("finite")
}

fn point(v: &[Rational]) -> (f64, f64) {
    (to_f64(&v[0]), to_f64(&v[1]))
}

fn dir(d: &[BigInt]) -> (f64, f64) {
    (
        d[0].to_f64().expect("finite"),
        d[1].to_f64().expect("finite"),
    )
}

impl Viewport {
    /// Bounding box of the vertices (or line anchors) widened by 20% on each side.
    pub fn fit(curve: &PlaneCurve) -> Viewport {
        let mut pts: Vec<(f64, f64)> = curve.vertices.iter().map(|v| point(v)).collect();
        if pts.is_empty() {
            pts = curve
                .edges
                .iter()
                .filter_map(|e| match &e.geometry {
                    EdgeGeometry::Line { through, .. } => Some(point(through)),
                    _ => None,
                })
                .collect();
        }
        if pts.is_empty() {
            pts.push((0.0, 0.0));
        }
        let (mut xmin, mut ymin) = (f64::INFINITY, f64::INFINITY);
        let (mut xmax, mut ymax) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (x, y) in pts {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
        let w = (xmax - xmin).max(1.0);
        let h = (ymax - ymin).max(1.0);
        let (cx, cy) = ((xmin + xmax) / 2.0, (ymin + ymax) / 2.0);
        Viewport {
            xmin: cx - 0.7 * w,
            xmax: cx + 0.7 * w,
            ymin: cy - 0.7 * h,
            ymax: cy + 0.7 * h,
        }
    }

    /// Parameter range of `p + t d` inside the box, intersected with `[lo, hi]`.
    fn clip(&self, p: (f64, f64), d: (f64, f64), lo: f64, hi: f64) -> Option<(f64, f64)> {
        let (mut lo, mut hi) = (lo, hi);
        for (start, delta, min, max) in [
            (p.0, d.0, self.xmin, self.xmax),
            (p.1, d.1, self.ymin, self.ymax),
        ] {
            if delta == 0.0 {
                if start < min || start > max {
                    return None;
                }
                continue;
            }
            let (a, b) = ((min - start) / delta, (max - start) / delta);
            lo = lo.max(a.min(b));
            hi = hi.min(a.max(b));
        }
        (lo < hi).then_some((lo, hi))
    }
}

impl PlaneCurve {
    /// The image under `x -> -x`, which maps a max-plus curve to its min-plus reading.
    pub fn reflected(&self) -> PlaneCurve {
        let neg = |v: &[Rational]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let neg_dir = |v: &[BigInt]| v.iter().map(|x| -x).collect::<Vec<_>>();
        PlaneCurve {
            vertices: self.vertices.iter().map(|v| neg(v)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| PlaneEdge {
                    geometry: match &e.geometry {
                        EdgeGeometry::Segment { from, to } => EdgeGeometry::Segment {
                            from: neg(from),
                            to: neg(to),
                        },
                        EdgeGeometry::Ray { origin, direction } => EdgeGeometry::Ray {
                            origin: neg(origin),
                            direction: neg_dir(direction),
                        },
                        EdgeGeometry::Line { through, direction } => EdgeGeometry::Line {
                            through: neg(through),
                            direction: neg_dir(direction),
                        },
                    },
                    multiplicity: e.multiplicity.clone(),
                })
                .collect(),
        }
    }
}

/// Renders `X(f)` as an SVG 1.1 document; a single monomial gives an empty drawing.
pub fn render_svg(f: &TropicalPolynomial, viewport: Option<Viewport>) -> Result<String> {
    Ok(render_curve_svg(&plane_curve(f)?, viewport))
}

pub fn render_curve_svg(curve: &PlaneCurve, viewport: Option<Viewport>) -> String {
    let vp = viewport.unwrap_or_else(|| Viewport::fit(curve));
    let (w, h) = (vp.xmax - vp.xmin, vp.ymax - vp.ymin);
    let unit = 0.004 * w.max(h);
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="600" height="{:.0}" viewBox="{:.4} {:.4} {:.4} {:.4}">"#,
        600.0 * h / w,
        vp.xmin,
        -vp.ymax,
        w,
        h
    )
    .unwrap();
    writeln!(
        out,
        r#"<g fill="none" stroke="black" stroke-linecap="round">"#
    )
    .unwrap();
    let line = |out: &mut String, a: (f64, f64), b: (f64, f64), width: f64, dashed: bool| {
        let dash = if dashed {
            format!(r#" stroke-dasharray="{:.4} {:.4}""#, 4.0 * unit, 3.0 * unit)
        } else {
            String::new()
        };
        writeln!(
            out,
            r#"<line x1="{:.4}" y1="{:.4}" x2="{:.4}" y2="{:.4}" stroke-width="{:.4}"{dash}/>"#,
            a.0, -a.1, b.0, -b.1, width
        )
        .unwrap();
    };
    let at = |p: (f64, f64), d: (f64, f64), t: f64| (p.0 + t * d.0, p.1 + t * d.1);
    for e in &curve.edges {
        let width = unit * to_f64(&e.multiplicity);
        match &e.geometry {
            EdgeGeometry::Segment { from, to } => {
                let (p, q) = (point(from), point(to));
                let d = (q.0 - p.0, q.1 - p.1);
                if let Some((a, b)) = vp.clip(p, d, 0.0, 1.0) {
                    line(&mut out, at(p, d, a), at(p, d, b), width, false);
                }
            }
            EdgeGeometry::Ray { origin, direction } => {
                let (p, d) = (point(origin), dir(direction));
                if let Some((a, b)) = vp.clip(p, d, 0.0, f64::INFINITY) {
                    draw_ray(&mut out, &line, p, d, a, b, width);
                }
            }
            EdgeGeometry::Line { through, direction } => {
                let (p, d) = (point(through), dir(direction));
                let back = (-d.0, -d.1);
                for d in [d, back] {
                    if let Some((a, b)) = vp.clip(p, d, 0.0, f64::INFINITY) {
                        draw_ray(&mut out, &line, p, d, a, b, width);
                    }
                }
            }
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g fill="black" stroke="none">"#).unwrap();
    for v in &curve.vertices {
        let (x, y) = point(v);
        if vp.clip((x, y), (0.0, 0.0), 0.0, 1.0).is_some() {
            writeln!(
                out,
                r#"<circle cx="{:.4}" cy="{:.4}" r="{:.4}"/>"#,
                x,
                -y,
                2.0 * unit
            )
            .unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

/// A ray drawn solid up to 80% of its visible length and dashed to the viewport edge.
fn draw_ray(
    out: &mut String,
    line: &impl Fn(&mut String, (f64, f64), (f64, f64), f64, bool),
    p: (f64, f64),
    d: (f64, f64),
    a: f64,
    b: f64,
    width: f64,
) {
    let at = |t: f64| (p.0 + t * d.0, p.1 + t * d.1);
    let split = a + 0.8 * (b - a);
    line(out, at(a), at(split), width, false);
    line(out, at(split), at(b), width, true);
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    use crate::exact_math::{rat, to_big};

    fn parse(s: &str) -> TropicalPolynomial {
        TropicalPolynomial::parse(s, 2).unwrap()
    }

    fn rays_are_outer_normals(curve: &PlaneCurve, f: &TropicalPolynomial) -> bool {
        let p = f.newton_polytope();
        curve.edges.iter().all(|e| match &e.geometry {
            EdgeGeometry::Ray { direction, .. } => {
                let face = p.face_in_direction(direction);
                face.map(|face| face.dim == 1).unwrap_or(false)
                    && !direction.iter().all(Zero::is_zero)
            }
            _ => true,
        }) && curve.edges.iter().all(|e| !e.multiplicity.is_negative())
    }

    #[test]
    fn tropical_line_geometry() {
        let c = plane_curve(&parse("0+x+y")).unwrap();
        assert_eq!(c.vertices, vec![vec![rat(0), rat(0)]]);
        let mut dirs: Vec<Vec<BigInt>> = c
            .edges
            .iter()
            .map(|e| match &e.geometry {
                EdgeGeometry::Ray { direction, .. } => direction.clone(),
                other => panic!("unexpected {other:?}"),
            })
            .collect();
        dirs.sort();
        assert_eq!(
            dirs,
            vec![to_big(&[-1, 0]), to_big(&[0, -1]), to_big(&[1, 1])]
        );
    }

    #[test]
    fn single_monomial_is_empty() {
        let svg = render_svg(&parse("3x^2y"), None).unwrap();
        assert!(svg.contains("<svg") && !svg.contains("<line") && !svg.contains("<circle"));
    }

    #[test]
    fn segment_newton_polytope_gives_a_line() {
        let c = plane_curve(&parse("0+1x")).unwrap();
        assert!(c.vertices.is_empty());
        assert_eq!(
            c.edges[0].geometry,
            EdgeGeometry::Line {
                through: vec![rat(-1), rat(0)],
                direction: to_big(&[0, -1])
            }
        );
        assert_eq!(
            render_svg(&parse("0+1x"), None)
                .unwrap()
                .matches("<line")
                .count(),
            4
        );
    }

    #[test]
    fn drawing_is_deterministic_and_respects_viewport() {
        let f = parse("-62x + 97x^2 + -73y^2 + -4x^3y + -83x^2y^2 + -10y^4");
        let a = render_svg(&f, None).unwrap();
        assert_eq!(a, render_svg(&f, None).unwrap());
        let vp: Viewport = "-10,-10,10,10".parse().unwrap();
        let b = render_svg(&f, Some(vp)).unwrap();
        assert!(b.contains(r#"viewBox="-10.0000 -10.0000 20.0000 20.0000""#));
        assert!("1,2,0,3".parse::<Viewport>().is_err());
        let c = plane_curve(&f).unwrap();
        assert!(rays_are_outer_normals(&c, &f));
        assert!(c.edges.iter().any(|e| e.multiplicity == rat(2)));
        assert!(render_svg(&TropicalPolynomial::parse("0+x", 1).unwrap(), None).is_err());
    }
}
