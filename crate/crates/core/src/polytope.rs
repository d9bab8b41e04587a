//! Lattice polytopes in V-representation with cached facet descriptions.
//!
//! A polytope of dimension `m < n` is handled in integer coordinates on its
//! affine hull (see [`SublatticeChart`]), so hull, face and volume logic always
//! runs on full-dimensional data. The lattice volume reported by
//! [`LatticePolytope::lattice_volume`] is measured in that chart: a fundamental
//! cell of `aff(P) ∩ Z^n` has volume one.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_math::{
    dot_big, primitive, rank, to_big, to_point, IntVector, Point, Rational, SublatticeChart,
};
use crate::hull::full_hull;

#[derive(Clone, Debug)]
struct LocalFacet {
    normal: IntVector,
    offset: BigInt,
    vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
struct FaceRecord {
    vertices: Vec<usize>,
    local_normal: IntVector,
}

/// A convex lattice polytope.
#[derive(Clone)]
pub struct LatticePolytope {
    vertices: Vec<Point>,
    chart: SublatticeChart,
    local_vertices: Vec<IntVector>,
    facets: Vec<LocalFacet>,
    lattice_volume: Rational,
    face_lattice: OnceLock<Vec<Vec<FaceRecord>>>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.ambient_dim() == other.ambient_dim()
    }
}

impl Eq for LatticePolytope {}

impl fmt::Debug for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LatticePolytope")
            .field("dim", &self.dim())
            .field("vertices", &self.vertices)
            .finish()
    }
}

/// A face of a polytope together with a direction that exposes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFace {
    pub vertices: Vec<Point>,
    pub dim: usize,
    /// Ambient linear functional maximized exactly on this face (zero for the improper face).
    pub normal: IntVector,
}

impl PFace {
    pub fn polytope(&self) -> LatticePolytope {
        convex_hull(&self.vertices).expect("faces are non-empty")
    }
}

/// Ambient facet inequality `normal · x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetInequality {
    pub normal: IntVector,
    pub offset: BigInt,
}

/// Convex hull of a non-empty set of lattice points.
pub fn convex_hull(points: &[Point]) -> Result<LatticePolytope> {
    LatticePolytope::new(points)
}

/// Minkowski sum by vertex-sum enumeration.
pub fn minkowski_sum(a: &LatticePolytope, b: &LatticePolytope) -> Result<LatticePolytope> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim(),
            found: b.ambient_dim(),
        });
    }
    let mut sums = BTreeSet::new();
    for p in &a.vertices {
        for q in &b.vertices {
            sums.insert(p.iter().zip(q).map(|(x, y)| x + y).collect::<Point>());
        }
    }
    convex_hull(&sums.into_iter().collect::<Vec<_>>())
}

/// Minkowski sum of a non-empty sequence.
pub fn minkowski_sum_all<'a, I>(polys: I) -> Result<LatticePolytope>
where
    I: IntoIterator<Item = &'a LatticePolytope>,
{
    let mut it = polys.into_iter();
    let first = it.next().ok_or(Error::EmptyPointSet)?.clone();
    it.try_fold(first, |acc, p| minkowski_sum(&acc, p))
}

pub fn faces(p: &LatticePolytope, d: usize) -> Result<Vec<PFace>> {
    p.faces(d)
}

pub fn face_in_direction(p: &LatticePolytope, v: &[BigInt]) -> Result<PFace> {
    p.face_in_direction(v)
}

pub fn euclidean_volume(p: &LatticePolytope) -> Rational {
    p.euclidean_volume()
}

/// Volume of a face in the lattice of its own affine hull.
pub fn relative_volume(f: &PFace) -> Rational {
    f.polytope().lattice_volume()
}

impl LatticePolytope {
    pub fn new(points: &[Point]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyPointSet)?;
        let n = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort();
        pts.dedup();
        let chart = SublatticeChart::new(&pts)?;
        let local: Vec<IntVector> = pts
            .iter()
            .map(|p| {
                chart
                    .coords(p)
                    .expect("points lie on their own affine lattice")
            })
            .collect();
        let m = chart.dim();
        if m == 0 {
            return Ok(Self::assemble(
                vec![pts[0].clone()],
                chart,
                Vec::new(),
                Rational::from_integer(1.into()),
            ));
        }
        let raw = full_hull(&local);
        let index_of: Vec<usize> = {
            let mut map = vec![usize::MAX; pts.len()];
            for (k, &i) in raw.vertices.iter().enumerate() {
                map[i] = k;
            }
            map
        };
        let vertices: Vec<Point> = raw.vertices.iter().map(|&i| pts[i].clone()).collect();
        let facets = raw
            .facets
            .into_iter()
            .map(|f| LocalFacet {
                normal: f.normal,
                offset: f.offset,
                vertices: f.vertices.iter().map(|&i| index_of[i]).collect(),
            })
            .collect();
        // Re-anchor the chart at the first vertex so local coordinates stay canonical.
        let chart = SublatticeChart::from_directions(vertices[0].clone(), &chart.basis);
        let mut poly = Self::assemble(vertices, chart, facets, raw.volume);
        poly.relocalize();
        Ok(poly)
    }

    fn assemble(
        vertices: Vec<Point>,
        chart: SublatticeChart,
        facets: Vec<LocalFacet>,
        vol: Rational,
    ) -> Self {
        let local_vertices = vertices
            .iter()
            .map(|p| chart.coords(p).expect("vertex in chart"))
            .collect();
        LatticePolytope {
            vertices,
            chart,
            local_vertices,
            facets,
            lattice_volume: vol,
            face_lattice: OnceLock::new(),
        }
    }

    // Facet offsets were computed in the chart anchored at the first input point.
    fn relocalize(&mut self) {
        for f in &mut self.facets {
            let v = &self.local_vertices[f.vertices[0]];
            f.offset = dot_big(&f.normal, v);
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.chart.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Irredundant vertices in lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn chart(&self) -> &SublatticeChart {
        &self.chart
    }

    /// Volume in the lattice `aff(P) ∩ Z^n`; equals the Euclidean volume when full-dimensional.
    pub fn lattice_volume(&self) -> Rational {
        self.lattice_volume.clone()
    }

    pub fn euclidean_volume(&self) -> Rational {
        if self.is_full_dimensional() {
            self.lattice_volume.clone()
        } else {
            Rational::zero()
        }
    }

    /// Facet inequalities in ambient coordinates. For a lower-dimensional
    /// polytope these cut it out only together with its affine hull.
    pub fn facet_inequalities(&self) -> Vec<FacetInequality> {
        self.facets
            .iter()
            .map(|f| {
                let normal = self.chart.pushforward(&f.normal);
                let offset = dot_big(&normal, &to_big(&self.vertices[f.vertices[0]]));
                FacetInequality { normal, offset }
            })
            .collect()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Vertices (as indices into [`Self::vertices`]) of each facet.
    pub fn facet_vertex_sets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.vertices.clone()).collect()
    }

    pub fn translate(&self, v: &[i64]) -> LatticePolytope {
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|p| p.iter().zip(v).map(|(a, b)| a + b).collect())
            .collect();
        convex_hull(&pts).expect("translation keeps the vertex set non-empty")
    }

    /// `t · P` for a non-negative integer `t`.
    pub fn dilate(&self, t: i64) -> LatticePolytope {
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|p| p.iter().map(|x| x * t).collect())
            .collect();
        convex_hull(&pts).expect("dilation keeps the vertex set non-empty")
    }

    /// Whether an integer point lies in the polytope.
    pub fn contains(&self, p: &[i64]) -> bool {
        match self.chart.coords(p) {
            None => false,
            Some(y) => self
                .facets
                .iter()
                .all(|f| dot_big(&f.normal, &y) <= f.offset),
        }
    }

    /// All lattice points, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<Point> {
        let n = self.ambient_dim();
        let lo: Vec<i64> = (0..n)
            .map(|j| self.vertices.iter().map(|v| v[j]).min().expect("non-empty"))
            .collect();
        let hi: Vec<i64> = (0..n)
            .map(|j| self.vertices.iter().map(|v| v[j]).max().expect("non-empty"))
            .collect();
        let mut out = Vec::new();
        let mut p = lo.clone();
        loop {
            if self.contains(&p) {
                out.push(p.clone());
            }
            let mut j = n;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                p[j] += 1;
                if p[j] <= hi[j] {
                    break;
                }
                p[j] = lo[j];
            }
        }
    }

    /// Whether an integer point lies in the relative interior.
    pub fn relative_interior_contains(&self, p: &[i64]) -> bool {
        match self.chart.coords(p) {
            None => false,
            Some(y) => self
                .facets
                .iter()
                .all(|f| dot_big(&f.normal, &y) < f.offset),
        }
    }

    /// Number of lattice points of `t · P` (closed, or relatively open when `open`).
    /// For `t = 0` this is the single point `0`.
    pub(crate) fn count_dilate_points(&self, t: u64, open: bool) -> BigInt {
        let m = self.dim();
        if m == 0 || t == 0 {
            return BigInt::from(1);
        }
        let tb = BigInt::from(t);
        let scaled: Vec<IntVector> = self
            .local_vertices
            .iter()
            .map(|v| v.iter().map(|x| x * &tb).collect())
            .collect();
        let lo: Vec<BigInt> = (0..m)
            .map(|j| scaled.iter().map(|v| v[j].clone()).min().unwrap())
            .collect();
        let hi: Vec<BigInt> = (0..m)
            .map(|j| scaled.iter().map(|v| v[j].clone()).max().unwrap())
            .collect();
        let rhs: Vec<BigInt> = self
            .facets
            .iter()
            .map(|f| {
                if open {
                    &f.offset * &tb - 1
                } else {
                    &f.offset * &tb
                }
            })
            .collect();
        let mut total = BigInt::zero();
        let mut prefix: Vec<BigInt> = lo[..m - 1].to_vec();
        loop {
            // Interval for the last coordinate given the prefix.
            let mut low = lo[m - 1].clone();
            let mut high = hi[m - 1].clone();
            let mut feasible = true;
            for (f, r) in self.facets.iter().zip(&rhs) {
                let s: BigInt = f.normal[..m - 1]
                    .iter()
                    .zip(&prefix)
                    .map(|(a, b)| a * b)
                    .sum();
                let rest = r - s;
                let c = &f.normal[m - 1];
                if c.is_zero() {
                    if rest.is_negative() {
                        feasible = false;
                        break;
                    }
                } else if c.is_positive() {
                    high = high.min(rest.div_floor(c));
                } else {
                    let bound = (-&rest).div_ceil(&(-c));
                    low = low.max(bound);
                }
            }
            if feasible && high >= low {
                total += high - low + 1;
            }
            // Advance the odometer over the prefix box.
            let mut j = 0;
            loop {
                if j == m - 1 {
                    return total;
                }
                prefix[j] += 1;
                if prefix[j] <= hi[j] {
                    break;
                }
                prefix[j] = lo[j].clone();
                j += 1;
            }
        }
    }

    fn affine_dim(&self, verts: &[usize]) -> usize {
        if verts.len() <= 1 {
            return 0;
        }
        let base = &self.local_vertices[verts[0]];
        let rows: Vec<IntVector> = verts[1..]
            .iter()
            .map(|&i| {
                self.local_vertices[i]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        rank(&rows)
    }

    fn face_lattice(&self) -> &Vec<Vec<FaceRecord>> {
        self.face_lattice.get_or_init(|| {
            let m = self.dim();
            let mut by_dim: Vec<Vec<FaceRecord>> = vec![Vec::new(); m + 1];
            by_dim[m].push(FaceRecord {
                vertices: (0..self.vertices.len()).collect(),
                local_normal: vec![BigInt::zero(); m],
            });
            if m == 0 {
                return by_dim;
            }
            by_dim[m - 1] = self
                .facets
                .iter()
                .map(|f| FaceRecord {
                    vertices: f.vertices.clone(),
                    local_normal: f.normal.clone(),
                })
                .collect();
            for d in (0..m.saturating_sub(1)).rev() {
                let mut seen: HashSet<Vec<usize>> = HashSet::new();
                let mut found = Vec::new();
                for g in &by_dim[d + 1] {
                    for f in &self.facets {
                        let inter: Vec<usize> = g
                            .vertices
                            .iter()
                            .copied()
                            .filter(|v| f.vertices.binary_search(v).is_ok())
                            .collect();
                        if inter.len() < d + 1
                            || inter.len() == g.vertices.len()
                            || seen.contains(&inter)
                        {
                            continue;
                        }
                        if self.affine_dim(&inter) == d {
                            seen.insert(inter.clone());
                            found.push(inter);
                        }
                    }
                }
                found.sort();
                by_dim[d] = found
                    .into_iter()
                    .map(|verts| {
                        let mut normal = vec![BigInt::zero(); m];
                        for f in &self.facets {
                            if verts.iter().all(|v| f.vertices.binary_search(v).is_ok()) {
                                for (a, b) in normal.iter_mut().zip(&f.normal) {
                                    *a += b;
                                }
                            }
                        }
                        FaceRecord {
                            vertices: verts,
                            local_normal: primitive(&normal),
                        }
                    })
                    .collect();
            }
            by_dim
        })
    }

    /// All faces of dimension `d`, each with an exposing ambient direction.
    pub fn faces(&self, d: usize) -> Result<Vec<PFace>> {
        let m = self.dim();
        if d > m {
            return Err(Error::FaceDimensionOutOfRange {
                requested: d,
                max: m,
            });
        }
        Ok(self.face_lattice()[d]
            .iter()
            .map(|r| PFace {
                vertices: r
                    .vertices
                    .iter()
                    .map(|&i| self.vertices[i].clone())
                    .collect(),
                dim: d,
                normal: if r.local_normal.iter().all(Zero::is_zero) {
                    vec![BigInt::zero(); self.ambient_dim()]
                } else {
                    self.chart.pushforward(&r.local_normal)
                },
            })
            .collect())
    }

    /// Face counts `f_0, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.face_lattice().iter().map(Vec::len).collect()
    }

    /// The face on which `<v, ·>` attains its maximum.
    pub fn face_in_direction(&self, v: &[BigInt]) -> Result<PFace> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: v.len(),
            });
        }
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroDirection);
        }
        let idx = self.maximizers(v);
        Ok(PFace {
            vertices: idx.iter().map(|&i| self.vertices[i].clone()).collect(),
            dim: self.affine_dim(&idx),
            normal: primitive(v),
        })
    }

    /// Vertices maximizing `<v, ·>`; all vertices when `v` is zero.
    pub fn face_vertices_in_direction(&self, v: &[BigInt]) -> Vec<Point> {
        self.maximizers(v)
            .into_iter()
            .map(|i| self.vertices[i].clone())
            .collect()
    }

    fn maximizers(&self, v: &[BigInt]) -> Vec<usize> {
        let vals: Vec<BigInt> = self
            .vertices
            .iter()
            .map(|p| crate::exact_math::dot_point(v, p))
            .collect();
        let best = vals.iter().max().expect("non-empty").clone();
        (0..vals.len()).filter(|&i| vals[i] == best).collect()
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson {
            dim: self.ambient_dim(),
            vertices: self.vertices.clone(),
        }
    }

    pub fn from_json(j: &PolytopeJson) -> Result<Self> {
        if let Some(bad) = j.vertices.iter().find(|v| v.len() != j.dim) {
            return Err(Error::DimensionMismatch {
                expected: j.dim,
                found: bad.len(),
            });
        }
        convex_hull(&j.vertices)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

/// Polytope interchange format `{"dim": n, "vertices": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Point>,
}

/// `conv{0, s e_1, ..., s e_n}`.
pub fn simplex(n: usize, s: i64) -> LatticePolytope {
    let mut pts = vec![vec![0; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = s;
        pts.push(e);
    }
    convex_hull(&pts).expect("non-empty")
}

/// `[0, s]^n`.
pub fn cube(n: usize, s: i64) -> LatticePolytope {
    let pts: Vec<Point> = (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { s } else { 0 })
                .collect()
        })
        .collect();
    convex_hull(&pts).expect("non-empty")
}

pub(crate) fn point_from_big(v: &[BigInt]) -> Point {
    to_point(v).expect("lattice coordinates fit in i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{rat, ratio};

    fn poly(v: &[&[i64]]) -> LatticePolytope {
        convex_hull(&v.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn square_with_duplicates() {
        let p = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[0, 0]]);
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.euclidean_volume(), rat(1));
    }

    #[test]
    fn paper_support_hull() {
        let p = poly(&[&[1, 0], &[2, 0], &[0, 2], &[3, 1], &[2, 2], &[0, 4]]);
        let expect: Vec<Point> = vec![vec![0, 2], vec![0, 4], vec![1, 0], vec![2, 0], vec![3, 1]];
        assert_eq!(p.vertices(), expect.as_slice());
        assert_eq!(p.euclidean_volume(), rat(6));
    }

    #[test]
    fn collinear_hull_is_segment() {
        let p = poly(&[&[0, 0], &[1, 1], &[2, 2]]);
        assert_eq!(p.dim(), 1);
        assert_eq!(p.vertices(), &[vec![0, 0], vec![2, 2]]);
        assert_eq!(p.lattice_volume(), rat(2));
        assert_eq!(p.euclidean_volume(), rat(0));
    }

    #[test]
    fn empty_input_is_error() {
        assert!(matches!(convex_hull(&[]), Err(Error::EmptyPointSet)));
    }

    #[test]
    fn minkowski_examples() {
        let d2 = simplex(2, 1);
        assert_eq!(minkowski_sum(&d2, &d2).unwrap(), simplex(2, 2));
        let sx = poly(&[&[0, 0], &[1, 0]]);
        let sy = poly(&[&[0, 0], &[0, 1]]);
        assert_eq!(minkowski_sum(&sx, &sy).unwrap(), cube(2, 1));
        assert!(matches!(
            minkowski_sum(&d2, &simplex(3, 1)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn face_counts() {
        let c = cube(3, 1);
        assert_eq!(c.faces(2).unwrap().len(), 6);
        assert_eq!(c.faces(1).unwrap().len(), 12);
        assert_eq!(c.faces(0).unwrap().len(), 8);
        assert_eq!(simplex(3, 1).faces(2).unwrap().len(), 4);
        assert_eq!(simplex(3, 2).faces(1).unwrap().len(), 6);
        assert!(matches!(
            c.faces(4),
            Err(Error::FaceDimensionOutOfRange { .. })
        ));
    }

    #[test]
    fn face_witnesses_expose_faces() {
        let p = poly(&[&[0, 0, 0], &[2, 0, 0], &[0, 3, 0], &[1, 1, 2], &[2, 2, 1]]);
        for d in 0..p.dim() {
            for f in p.faces(d).unwrap() {
                let exposed = p.face_in_direction(&f.normal).unwrap();
                assert_eq!(exposed.vertices, f.vertices);
                assert_eq!(exposed.dim, d);
            }
        }
    }

    #[test]
    fn directional_faces() {
        let d3 = simplex(3, 1);
        let f = d3.face_in_direction(&to_big(&[0, 0, -1])).unwrap();
        assert_eq!(
            f.vertices,
            vec![vec![0, 0, 0], vec![0, 1, 0], vec![1, 0, 0]]
        );
        let f = d3.face_in_direction(&to_big(&[1, 1, 1])).unwrap();
        assert_eq!(f.dim, 2);
        assert_eq!(f.vertices.len(), 3);
        let sq = cube(2, 1);
        let f = sq.face_in_direction(&to_big(&[1, 0])).unwrap();
        assert_eq!(f.vertices, vec![vec![1, 0], vec![1, 1]]);
        assert!(matches!(
            sq.face_in_direction(&to_big(&[0, 0])),
            Err(Error::ZeroDirection)
        ));
    }

    #[test]
    fn volumes() {
        assert_eq!(simplex(3, 1).euclidean_volume(), ratio(1, 6));
        assert_eq!(simplex(4, 1).euclidean_volume(), ratio(1, 24));
        assert_eq!(cube(3, 1).euclidean_volume(), rat(1));
    }

    #[test]
    fn relative_volumes() {
        let seg = PFace {
            vertices: vec![vec![0, 0], vec![2, 2]],
            dim: 1,
            normal: to_big(&[1, -1]),
        };
        assert_eq!(relative_volume(&seg), rat(2));
        let tri = PFace {
            vertices: vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]],
            dim: 2,
            normal: to_big(&[0, 0, -1]),
        };
        assert_eq!(relative_volume(&tri), ratio(1, 2));
        let big_tri = PFace {
            vertices: vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]],
            dim: 2,
            normal: to_big(&[1, 1, 1]),
        };
        assert_eq!(relative_volume(&big_tri), rat(2));
    }

    #[test]
    fn lower_dimensional_membership() {
        let p = poly(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert!(p.contains(&[1, 1, 0]));
        assert!(!p.contains(&[1, 0, 0]));
        assert!(!p.relative_interior_contains(&[1, 1, 0]));
        assert_eq!(p.count_dilate_points(1, false), BigInt::from(6));
        assert_eq!(p.count_dilate_points(2, true), BigInt::from(3));
    }

    #[test]
    fn lattice_point_counts() {
        assert_eq!(cube(2, 1).count_dilate_points(1, false), BigInt::from(4));
        assert_eq!(
            simplex(2, 1).count_dilate_points(3, false),
            BigInt::from(10)
        );
        assert_eq!(simplex(3, 4).count_dilate_points(1, true), BigInt::from(1));
    }

    #[test]
    fn json_roundtrip() {
        let p = simplex(3, 2);
        let s = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(LatticePolytope::from_json_str(&s).unwrap(), p);
        assert!(LatticePolytope::from_json_str(r#"{"dim":2,"vertices":[[1,2,3]]}"#).is_err());
    }
}
