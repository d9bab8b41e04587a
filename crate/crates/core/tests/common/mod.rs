//! Reference computations for lattice polytopes in dimension 2 and 3 that share no
//! code with the library: brute-force facet enumeration, exact volumes from facet
//! data, lattice point counting by scanning a bounding box, and regular
//! subdivisions of plane point sets by testing every triple of lifted points.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use tropint::exact_math::Rational;

pub type Pt = Vec<i64>;

fn q(v: i128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive outer normal; the facet lies on `normal · x = offset`.
    pub normal: Pt,
    pub offset: i64,
}

/// A full-dimensional lattice polytope in R^2 or R^3 given by its vertices and facets.
#[derive(Clone, Debug)]
pub struct Body {
    pub dim: usize,
    pub vertices: Vec<Pt>,
    pub facets: Vec<Facet>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[i64], b: &[i64]) -> Pt {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn make_primitive(v: Pt) -> Pt {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    v.into_iter().map(|x| x / g).collect()
}

impl Body {
    pub fn new(points: &[Pt]) -> Body {
        let mut pts: Vec<Pt> = points.to_vec();
        pts.sort();
        pts.dedup();
        let dim = pts[0].len();
        assert!(dim == 2 || dim == 3, "oracle handles dimensions 2 and 3");
        let mut facets: Vec<Facet> = Vec::new();
        let mut candidate = |normal: Pt, base: &Pt| {
            if normal.iter().all(|&x| x == 0) {
                return;
            }
            let normal = make_primitive(normal);
            for n in [normal.clone(), normal.iter().map(|x| -x).collect()] {
                let offset = dot(&n, base);
                let values: Vec<i64> = pts.iter().map(|p| dot(&n, p)).collect();
                if values.iter().all(|&v| v <= offset) && values.iter().any(|&v| v < offset) {
                    let f = Facet { normal: n, offset };
                    if !facets.contains(&f) {
                        facets.push(f);
                    }
                }
            }
        };
        let m = pts.len();
        if dim == 2 {
            for i in 0..m {
                for j in i + 1..m {
                    let d = sub(&pts[j], &pts[i]);
                    candidate(vec![d[1], -d[0]], &pts[i].clone());
                }
            }
        } else {
            for i in 0..m {
                for j in i + 1..m {
                    for k in j + 1..m {
                        let (a, b) = (sub(&pts[j], &pts[i]), sub(&pts[k], &pts[i]));
                        let c = vec![
                            a[1] * b[2] - a[2] * b[1],
                            a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0],
                        ];
                        candidate(c, &pts[i].clone());
                    }
                }
            }
        }
        assert!(facets.len() > dim, "oracle bodies must be full-dimensional");
        let vertices = pts
            .iter()
            .filter(|p| {
                facets
                    .iter()
                    .filter(|f| dot(&f.normal, p) == f.offset)
                    .count()
                    >= dim
            })
            .cloned()
            .collect();
        Body {
            dim,
            vertices,
            facets,
        }
    }

    pub fn dilate(&self, t: i64) -> Body {
        Body::new(
            &self
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * t).collect())
                .collect::<Vec<_>>(),
        )
    }

    /// Points of the vertex set maximizing `normal`.
    pub fn face(&self, normal: &[i64]) -> Vec<Pt> {
        let best = self.vertices.iter().map(|v| dot(normal, v)).max().unwrap();
        self.vertices
            .iter()
            .filter(|v| dot(normal, v) == best)
            .cloned()
            .collect()
    }

    pub fn facet_points(&self, f: &Facet) -> Vec<Pt> {
        self.vertices
            .iter()
            .filter(|v| dot(&f.normal, v) == f.offset)
            .cloned()
            .collect()
    }

    /// Lattice-normalized measure of a facet.
    pub fn facet_measure(&self, f: &Facet) -> Rational {
        planar_measure(&self.facet_points(f), &f.normal)
    }

    /// Sum of the lattice-normalized facet measures.
    pub fn surface(&self) -> Rational {
        self.facets.iter().map(|f| self.facet_measure(f)).sum()
    }

    /// Euclidean volume: `(1/n) Σ_F offset_F · vol'(F)`.
    pub fn volume(&self) -> Rational {
        let total: Rational = self
            .facets
            .iter()
            .map(|f| q(f.offset as i128) * self.facet_measure(f))
            .sum();
        total / q(self.dim as i128)
    }

    fn count_where(&self, t: i64, strict: bool) -> i128 {
        let lo: Vec<i64> = (0..self.dim)
            .map(|i| self.vertices.iter().map(|v| v[i]).min().unwrap() * t)
            .collect();
        let hi: Vec<i64> = (0..self.dim)
            .map(|i| self.vertices.iter().map(|v| v[i]).max().unwrap() * t)
            .collect();
        let mut count = 0;
        let mut p = lo.clone();
        loop {
            let inside = self.facets.iter().all(|f| {
                let v = dot(&f.normal, &p);
                if strict {
                    v < f.offset * t
                } else {
                    v <= f.offset * t
                }
            });
            count += inside as i128;
            let mut i = 0;
            loop {
                if i == self.dim {
                    return count;
                }
                if p[i] < hi[i] {
                    p[i] += 1;
                    break;
                }
                p[i] = lo[i];
                i += 1;
            }
        }
    }

    /// `|tP ∩ Z^n|` for `t >= 1`.
    pub fn count(&self, t: i64) -> i128 {
        self.count_where(t, false)
    }

    /// Interior lattice points of `tP` for `t >= 1`.
    pub fn count_interior(&self, t: i64) -> i128 {
        self.count_where(t, true)
    }
}

pub fn minkowski(bodies: &[&Body]) -> Body {
    let mut points: Vec<Pt> = vec![vec![0; bodies[0].dim]];
    for b in bodies {
        let mut next: Vec<Pt> = Vec::new();
        for p in &points {
            for v in &b.vertices {
                next.push(p.iter().zip(v).map(|(x, y)| x + y).collect());
            }
        }
        points = Body::new(&next).vertices;
    }
    Body::new(&points)
}

fn twice_area(points: &[[i128; 2]]) -> i128 {
    let hull = hull_2d(points);
    let n = hull.len();
    if n < 3 {
        return 0;
    }
    (0..n)
        .map(|i| {
            let (a, b) = (hull[i], hull[(i + 1) % n]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum::<i128>()
        .abs()
}

/// Vertices of the convex hull in counterclockwise order, collinear points dropped.
fn hull_2d(points: &[[i128; 2]]) -> Vec<[i128; 2]> {
    let mut p = points.to_vec();
    p.sort();
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let cross = |o: [i128; 2], a: [i128; 2], b: [i128; 2]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let chain = |iter: &mut dyn Iterator<Item = [i128; 2]>| {
        let mut h: Vec<[i128; 2]> = Vec::new();
        for x in iter {
            while h.len() >= 2 && cross(h[h.len() - 2], h[h.len() - 1], x) <= 0 {
                h.pop();
            }
            h.push(x);
        }
        h.pop();
        h
    };
    let mut lower = chain(&mut p.clone().into_iter());
    let upper = chain(&mut p.into_iter().rev());
    lower.extend(upper);
    lower
}

/// Lattice-normalized measure of a point set lying in a hyperplane with primitive normal `normal`:
/// lattice length in R^2, lattice area (fundamental parallelogram = 1) in R^3.
pub fn planar_measure(points: &[Pt], normal: &[i64]) -> Rational {
    if points.len() < 2 {
        return Rational::zero();
    }
    if normal.len() == 2 {
        let mut p = points.to_vec();
        p.sort();
        let d = sub(&p[p.len() - 1], &p[0]);
        return q(d[0].gcd(&d[1]) as i128);
    }
    let k = (0..3).max_by_key(|&i| normal[i].abs()).unwrap();
    let projected: Vec<[i128; 2]> = points
        .iter()
        .map(|p| {
            let rest: Vec<i128> = (0..3).filter(|&i| i != k).map(|i| p[i] as i128).collect();
            [rest[0], rest[1]]
        })
        .collect();
    q(twice_area(&projected)) / q(2 * normal[k].abs() as i128)
}

fn subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << m)).map(move |mask| (0..m).filter(|i| mask & (1 << i) != 0).collect())
}

fn sign(k: usize) -> Rational {
    q(if k % 2 == 0 { 1 } else { -1 })
}

/// `MV_n(P_1, ..., P_n)` by inclusion-exclusion, normalized so that `MV(P, ..., P) = n! vol(P)`.
pub fn mixed_volume(bodies: &[&Body]) -> Rational {
    let n = bodies.len();
    subsets(n)
        .map(|s| {
            let part: Vec<&Body> = s.iter().map(|&i| bodies[i]).collect();
            sign(n - s.len()) * minkowski(&part).volume()
        })
        .sum()
}

/// `Σ_v MV'_{n-1}((P_1)^v, ..., (P_{n-1})^v)` over the facets `v` of `P_1 + ... + P_{n-1}`.
pub fn facet_mixed_sum(bodies: &[&Body]) -> Rational {
    let m = bodies.len();
    let total = minkowski(bodies);
    let mut sum = Rational::zero();
    for f in &total.facets {
        let faces: Vec<Vec<Pt>> = bodies.iter().map(|b| b.face(&f.normal)).collect();
        for s in subsets(m) {
            let mut points: Vec<Pt> = vec![vec![0; total.dim]];
            for &i in &s {
                points = points
                    .iter()
                    .flat_map(|p| {
                        faces[i]
                            .iter()
                            .map(move |v| p.iter().zip(v).map(|(x, y)| x + y).collect::<Pt>())
                    })
                    .collect();
            }
            sum += sign(m - s.len()) * planar_measure(&points, &f.normal);
        }
    }
    sum
}

/// `Σ_{∅≠J} (-1)^{k-|J|} B⁺(Σ_J P_j)`.
pub fn toric_genus(bodies: &[&Body]) -> Rational {
    let k = bodies.len();
    subsets(k)
        .map(|s| {
            let part: Vec<&Body> = s.iter().map(|&i| bodies[i]).collect();
            sign(k - s.len()) * q(minkowski(&part).count_interior(1))
        })
        .sum()
}

/// `Σ_{∅≠J} (-1)^{k-|J|} |t Σ_J P_j ∩ Z^n|` for `t >= 1`.
pub fn mixed_count(bodies: &[&Body], t: i64) -> Rational {
    let k = bodies.len();
    subsets(k)
        .map(|s| {
            let part: Vec<&Body> = s.iter().map(|&i| bodies[i]).collect();
            sign(k - s.len()) * q(minkowski(&part).count(t))
        })
        .sum()
}

/// Maximal cells of the regular subdivision of a plane point set lifted by `heights`
/// (upper hull), each given by its sorted vertex list.
pub fn upper_cells_2d(lifted: &[(Pt, Rational)]) -> BTreeSet<Vec<Pt>> {
    let mut cells = BTreeSet::new();
    let m = lifted.len();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let (a, b, c) = (&lifted[i], &lifted[j], &lifted[k]);
                let (u, v) = (sub(&b.0, &a.0), sub(&c.0, &a.0));
                let det = u[0] * v[1] - u[1] * v[0];
                if det == 0 {
                    continue;
                }
                let (du, dv) = (&b.1 - &a.1, &c.1 - &a.1);
                let det = q(det as i128);
                let sx = (&du * q(v[1] as i128) - &dv * q(u[1] as i128)) / &det;
                let sy = (&dv * q(u[0] as i128) - &du * q(v[0] as i128)) / &det;
                let plane = |p: &Pt| {
                    &a.1 + &sx * q((p[0] - a.0[0]) as i128) + &sy * q((p[1] - a.0[1]) as i128)
                };
                if lifted.iter().any(|(p, h)| *h > plane(p)) {
                    continue;
                }
                let on: Vec<[i128; 2]> = lifted
                    .iter()
                    .filter(|(p, h)| *h == plane(p))
                    .map(|(p, _)| [p[0] as i128, p[1] as i128])
                    .collect();
                let mut cell: Vec<Pt> = hull_2d(&on)
                    .iter()
                    .map(|p| vec![p[0] as i64, p[1] as i64])
                    .collect();
                cell.sort();
                cells.insert(cell);
            }
        }
    }
    cells
}

pub fn is_nonnegative_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}
