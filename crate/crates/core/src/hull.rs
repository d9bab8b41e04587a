//! Exact beneath-beyond convex hull for full-dimensional integer point sets.
//!
//! The kernel runs in checked `i128` arithmetic and falls back to big
//! integers when an intermediate value overflows. Boundary simplices that
//! share a supporting hyperplane are merged into facets at the end.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact_math::{bareiss_det, IntMatrix, IntVector};

pub(crate) trait Scalar: Clone + Ord + std::fmt::Debug {
    fn zero() -> Self;
    fn from_usize(v: usize) -> Self;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    /// Exact division; the divisor always divides.
    fn div(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn from_usize(v: usize) -> Self {
        v as i128
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(*o)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_usize(v: usize) -> Self {
        BigInt::from(v)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> Option<T> {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&x.mul(y)?)?;
    }
    Some(acc)
}

/// Fraction-free (Bareiss) determinant of a square matrix.
fn det<T: Scalar>(m: &[Vec<T>]) -> Option<T> {
    let n = m.len();
    match n {
        0 => return Some(T::from_usize(1)),
        1 => return Some(m[0][0].clone()),
        2 => return m[0][0].mul(&m[1][1])?.sub(&m[0][1].mul(&m[1][0])?),
        _ => {}
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = T::from_usize(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Some(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = a[i][j]
                    .mul(&a[k][k])?
                    .sub(&a[i][k].mul(&a[k][j])?)?
                    .div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Some(if negate { d.neg() } else { d })
}

/// Rank by fraction-free elimination.
pub(crate) fn rank_with<T: Scalar>(rows: &[Vec<T>]) -> Option<usize> {
    let Some(width) = rows.first().map(Vec::len) else {
        return Some(0);
    };
    let mut a = rows.to_vec();
    let n = a.len();
    let mut r = 0;
    let mut prev = T::from_usize(1);
    for c in 0..width {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..n {
            for j in c + 1..width {
                a[i][j] = a[i][j]
                    .mul(&a[r][c])?
                    .sub(&a[i][c].mul(&a[r][j])?)?
                    .div(&prev)?;
            }
            a[i][c] = T::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == n {
            break;
        }
    }
    Some(r)
}

/// Rank of integer rows, in `i128` when the entries fit.
pub(crate) fn fast_rank(rows: &[IntVector]) -> usize {
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|r| r.iter().map(<i128 as Scalar>::from_big).collect())
        .collect();
    if let Some(r) = small.and_then(|m| rank_with(&m)) {
        return r;
    }
    rank_with(rows).expect("big integer elimination cannot overflow")
}

/// Normal of the hyperplane through `d` points in `R^d` via cofactors.
fn hyperplane_normal<T: Scalar>(pts: &[&Vec<T>]) -> Option<Vec<T>> {
    let d = pts[0].len();
    let base = pts[0];
    let mut diffs = Vec::with_capacity(d - 1);
    for p in &pts[1..] {
        let mut row = Vec::with_capacity(d);
        for (a, b) in p.iter().zip(base) {
            row.push(a.sub(b)?);
        }
        diffs.push(row);
    }
    let mut normal = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<T>> = diffs
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let v = det(&minor)?;
        normal.push(if j % 2 == 0 { v } else { v.neg() });
    }
    Some(normal)
}

#[derive(Clone, Debug)]
struct Simplex<T> {
    verts: Vec<usize>,
    normal: Vec<T>,
    offset: T,
    alive: bool,
}

/// A facet of the hull: `normal · x <= offset` with equality on `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RawFacet {
    pub normal: IntVector,
    pub offset: BigInt,
    /// Indices (into the input) of hull vertices on this facet, sorted.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub(crate) struct RawHull {
    /// Indices of the hull vertices, sorted.
    pub vertices: Vec<usize>,
    pub facets: Vec<RawFacet>,
    /// Euclidean volume of the hull.
    pub volume: BigRational,
}

/// Hull of a full-dimensional set of distinct integer points in `R^d`, `d >= 1`.
pub(crate) fn full_hull(points: &[IntVector]) -> RawHull {
    let small: Option<Vec<Vec<i128>>> = points
        .iter()
        .map(|p| p.iter().map(<i128 as Scalar>::from_big).collect())
        .collect();
    if let Some(pts) = small {
        if let Some(h) = hull_with::<i128>(&pts) {
            return h;
        }
    }
    let pts: Vec<Vec<BigInt>> = points.to_vec();
    hull_with::<BigInt>(&pts).expect("big integer hull cannot overflow")
}

fn hull_with<T: Scalar>(pts: &[Vec<T>]) -> Option<RawHull> {
    let d = pts[0].len();
    if d == 1 {
        return Some(hull_1d(pts));
    }
    let initial = initial_simplex(pts, d);
    assert_eq!(initial.len(), d + 1, "point set must be full-dimensional");

    // Scaled interior point: (d+1) * centroid of the initial simplex.
    let mut interior = vec![T::zero(); d];
    for &i in &initial {
        for (s, x) in interior.iter_mut().zip(&pts[i]) {
            *s = s.add(x)?;
        }
    }
    let scale = T::from_usize(d + 1);

    let mut simplices: Vec<Simplex<T>> = Vec::new();
    let make = |verts: Vec<usize>| -> Option<Simplex<T>> {
        let refs: Vec<&Vec<T>> = verts.iter().map(|&i| &pts[i]).collect();
        let mut normal = hyperplane_normal(&refs)?;
        let mut offset = dot(&normal, &pts[verts[0]])?;
        assert!(
            normal.iter().any(|x| !x.is_zero()),
            "degenerate boundary simplex"
        );
        if dot(&normal, &interior)? > offset.mul(&scale)? {
            normal = normal.iter().map(Scalar::neg).collect();
            offset = offset.neg();
        }
        Some(Simplex {
            verts,
            normal,
            offset,
            alive: true,
        })
    };

    for skip in 0..=d {
        let verts: Vec<usize> = initial
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, &v)| v)
            .collect();
        simplices.push(make(verts)?);
    }

    let mut in_initial = vec![false; pts.len()];
    for &i in &initial {
        in_initial[i] = true;
    }
    for (pi, p) in pts.iter().enumerate() {
        if in_initial[pi] {
            continue;
        }
        let mut visible = Vec::new();
        for (si, s) in simplices.iter().enumerate() {
            if s.alive && dot(&s.normal, p)? > s.offset {
                visible.push(si);
            }
        }
        if visible.is_empty() {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for &si in &visible {
            simplices[si].alive = false;
            let verts = &simplices[si].verts;
            for skip in 0..verts.len() {
                let mut r: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                r.sort_unstable();
                *ridges.entry(r).or_insert(0) += 1;
            }
        }
        let mut horizon: Vec<Vec<usize>> = ridges
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect();
        horizon.sort_unstable();
        for mut r in horizon {
            r.push(pi);
            simplices.push(make(r)?);
        }
        if simplices.len() > 4 * simplices.iter().filter(|s| s.alive).count() + 64 {
            simplices.retain(|s| s.alive);
        }
    }
    simplices.retain(|s| s.alive);

    // Volume from the boundary triangulation coned to the interior point.
    let mut vol_scaled = <BigInt as Zero>::zero();
    let interior_big: Vec<BigInt> = interior.iter().map(Scalar::to_big).collect();
    let scale_big = BigInt::from(d + 1);
    for s in &simplices {
        let small: Option<Vec<Vec<T>>> = s
            .verts
            .iter()
            .map(|&v| {
                pts[v]
                    .iter()
                    .zip(&interior)
                    .map(|(x, c)| x.mul(&scale)?.sub(c))
                    .collect()
            })
            .collect();
        let value = match small.and_then(|rows| det(&rows)) {
            Some(v) => v.to_big(),
            None => {
                let rows: IntMatrix = s
                    .verts
                    .iter()
                    .map(|&v| {
                        pts[v]
                            .iter()
                            .zip(&interior_big)
                            .map(|(x, c)| x.to_big() * &scale_big - c)
                            .collect()
                    })
                    .collect();
                bareiss_det(&rows)
            }
        };
        vol_scaled += value.abs();
    }
    let denom = crate::exact_math::factorial(d) * scale_big.pow(d as u32);
    let volume = BigRational::new(vol_scaled, denom);

    // Merge coplanar boundary simplices.
    let mut groups: HashMap<(IntVector, BigInt), Vec<usize>> = HashMap::new();
    for s in &simplices {
        let mut v: IntVector = s.normal.iter().map(Scalar::to_big).collect();
        v.push(s.offset.to_big());
        let g = v.iter().fold(<BigInt as Zero>::zero(), |g, x| g.gcd(x));
        let v: IntVector = v.iter().map(|x| x / &g).collect();
        let offset = v[d].clone();
        let entry = groups.entry((v[..d].to_vec(), offset)).or_default();
        entry.extend(s.verts.iter().copied());
    }
    let mut hyperplanes: Vec<(IntVector, BigInt)> = groups.into_keys().collect();
    hyperplanes.sort();
    let mut candidates: Vec<usize> = simplices
        .iter()
        .flat_map(|s| s.verts.iter().copied())
        .collect();
    candidates.sort_unstable();
    candidates.dedup();

    let big_pts: HashMap<usize, IntVector> = candidates
        .iter()
        .map(|&i| (i, pts[i].iter().map(Scalar::to_big).collect()))
        .collect();
    let mut vertices = Vec::new();
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); hyperplanes.len()];
    for &c in &candidates {
        let p = &big_pts[&c];
        let on: Vec<usize> = hyperplanes
            .iter()
            .enumerate()
            .filter(|(_, (n, o))| crate::exact_math::dot_big(n, p) == *o)
            .map(|(i, _)| i)
            .collect();
        let normals: Vec<IntVector> = on.iter().map(|&i| hyperplanes[i].0.clone()).collect();
        if fast_rank(&normals) == d {
            vertices.push(c);
            for i in on {
                incidence[i].push(c);
            }
        }
    }
    let facets = hyperplanes
        .into_iter()
        .zip(incidence)
        .map(|((normal, offset), vertices)| RawFacet {
            normal,
            offset,
            vertices,
        })
        .collect();
    Some(RawHull {
        vertices,
        facets,
        volume,
    })
}

fn hull_1d<T: Scalar>(pts: &[Vec<T>]) -> RawHull {
    let (mut lo, mut hi) = (0, 0);
    for (i, p) in pts.iter().enumerate() {
        if p[0] < pts[lo][0] {
            lo = i;
        }
        if p[0] > pts[hi][0] {
            hi = i;
        }
    }
    let lo_v = pts[lo][0].to_big();
    let hi_v = pts[hi][0].to_big();
    let mut vertices = vec![lo, hi];
    vertices.sort_unstable();
    RawHull {
        vertices,
        facets: vec![
            RawFacet {
                normal: vec![-BigInt::one()],
                offset: -lo_v.clone(),
                vertices: vec![lo],
            },
            RawFacet {
                normal: vec![BigInt::one()],
                offset: hi_v.clone(),
                vertices: vec![hi],
            },
        ],
        volume: BigRational::from_integer(hi_v - lo_v),
    }
}

/// Greedily picks `d+1` affinely independent points.
fn initial_simplex<T: Scalar>(pts: &[Vec<T>], d: usize) -> Vec<usize> {
    let base: IntVector = pts[0].iter().map(Scalar::to_big).collect();
    let mut chosen = vec![0];
    let mut rows: Vec<IntVector> = Vec::new();
    for (i, p) in pts.iter().enumerate().skip(1) {
        let diff: IntVector = p.iter().zip(&base).map(|(a, b)| a.to_big() - b).collect();
        rows.push(diff);
        if fast_rank(&rows) == rows.len() {
            chosen.push(i);
            if chosen.len() == d + 1 {
                break;
            }
        } else {
            rows.pop();
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{ratio, to_big};

    fn pts(v: &[&[i64]]) -> Vec<IntVector> {
        v.iter().map(|p| to_big(p)).collect()
    }

    #[test]
    fn square_with_edge_point() {
        let h = full_hull(&pts(&[
            &[0, 0],
            &[1, 0],
            &[2, 0],
            &[0, 2],
            &[2, 2],
            &[1, 1],
        ]));
        assert_eq!(h.vertices, vec![0, 2, 3, 4]);
        assert_eq!(h.facets.len(), 4);
        assert_eq!(h.volume, ratio(4, 1));
    }

    #[test]
    fn cube_facets() {
        let mut v = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    v.push(vec![x, y, z]);
                }
            }
        }
        let refs: Vec<&[i64]> = v.iter().map(|p| p.as_slice()).collect();
        let h = full_hull(&pts(&refs));
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.len(), 6);
        assert!(h.facets.iter().all(|f| f.vertices.len() == 4));
        assert_eq!(h.volume, ratio(1, 1));
    }

    #[test]
    fn big_fallback_matches() {
        let huge = 1_i64 << 62;
        let h = full_hull(&pts(&[
            &[0, 0, 0],
            &[huge, 0, 0],
            &[0, huge, 0],
            &[0, 0, huge],
            &[1, 1, 1],
        ]));
        assert_eq!(h.vertices, vec![0, 1, 2, 3]);
        assert_eq!(h.facets.len(), 4);
    }
}
