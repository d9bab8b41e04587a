//! Exact rational arithmetic and integer lattice linear algebra.
//!
//! Everything here is exact: big integers, big rationals, fraction-free
//! elimination. Lattice points of polytopes are stored as `i64` coordinates
//! ([`Point`]); everything derived from them (determinants, transforms,
//! volumes) is carried in arbitrary precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Integer vector of arbitrary precision.
pub type IntVector = Vec<BigInt>;

/// Row-major integer matrix.
pub type IntMatrix = Vec<IntVector>;

/// Lattice point with machine-integer coordinates.
pub type Point = Vec<i64>;

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_big(p: &[i64]) -> IntVector {
    p.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_point(v: &[BigInt]) -> Option<Point> {
    v.iter().map(|x| x.to_i64()).collect()
}

pub fn dot_big(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_point(a: &[BigInt], p: &[i64]) -> BigInt {
    a.iter().zip(p).map(|(x, &y)| x * BigInt::from(y)).sum()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Divides a vector by the gcd of its entries. The zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> IntVector {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Result of [`hermite_normal_form`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub hnf: IntMatrix,
    pub transform: IntMatrix,
    pub rank: usize,
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Row-style Hermite normal form: `hnf = transform * m` with `transform`
/// unimodular, nonzero rows first, positive pivots, and entries above each
/// pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> Hnf {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut h = m.clone();
    let mut u = identity(rows);
    let mut p = 0;
    for col in 0..cols {
        if p == rows {
            break;
        }
        for i in (p + 1)..rows {
            if h[i][col].is_zero() {
                continue;
            }
            let a = h[p][col].clone();
            let b = h[i][col].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (a_g, b_g) = (&a / &g, &b / &g);
            combine_rows(&mut h, p, i, &x, &y, &b_g, &a_g);
            combine_rows(&mut u, p, i, &x, &y, &b_g, &a_g);
        }
        if h[p][col].is_zero() {
            continue;
        }
        if h[p][col].is_negative() {
            negate_row(&mut h, p);
            negate_row(&mut u, p);
        }
        for i in 0..p {
            let q = h[i][col].div_floor(&h[p][col]);
            if !q.is_zero() {
                sub_row_multiple(&mut h, i, p, &q);
                sub_row_multiple(&mut u, i, p, &q);
            }
        }
        p += 1;
    }
    Hnf {
        hnf: h,
        transform: u,
        rank: p,
    }
}

// rows (p, i) <- (x*row_p + y*row_i, -b_g*row_p + a_g*row_i)
fn combine_rows(
    m: &mut IntMatrix,
    p: usize,
    i: usize,
    x: &BigInt,
    y: &BigInt,
    b_g: &BigInt,
    a_g: &BigInt,
) {
    let rp = m[p].clone();
    let ri = m[i].clone();
    m[p] = rp.iter().zip(&ri).map(|(s, t)| x * s + y * t).collect();
    m[i] = rp.iter().zip(&ri).map(|(s, t)| a_g * t - b_g * s).collect();
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for x in m[r].iter_mut() {
        *x = -&*x;
    }
}

fn sub_row_multiple(m: &mut IntMatrix, target: usize, src: usize, q: &BigInt) {
    let s = m[src].clone();
    for (t, v) in m[target].iter_mut().zip(&s) {
        *t -= q * v;
    }
}

/// Basis (in Hermite normal form) of the integer lattice generated by `vectors`.
pub fn lattice_basis_of_span(vectors: &[IntVector]) -> IntMatrix {
    if vectors.is_empty() {
        return Vec::new();
    }
    let h = hermite_normal_form(&vectors.to_vec());
    h.hnf.into_iter().take(h.rank).collect()
}

/// Basis of `{x in Z^cols : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix, cols: usize) -> IntMatrix {
    if m.is_empty() {
        return identity(cols);
    }
    let transposed: IntMatrix = (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect();
    let h = hermite_normal_form(&transposed);
    h.transform.into_iter().skip(h.rank).collect()
}

/// Basis of the saturated lattice `span_R(vectors) ∩ Z^dim`, in Hermite normal form.
pub fn saturated_basis(vectors: &[IntVector], dim: usize) -> IntMatrix {
    let span = lattice_basis_of_span(vectors);
    if span.is_empty() {
        return Vec::new();
    }
    let kernel = integer_kernel(&span, dim);
    let sat = integer_kernel(&kernel, dim);
    lattice_basis_of_span(&sat)
}

/// `|det(m)|` by fraction-free elimination.
pub fn abs_determinant(m: &IntMatrix) -> Result<Rational> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare {
            rows: n,
            cols: row.len(),
        });
    }
    Ok(Rational::from_integer(bareiss_det(m).abs()))
}

pub(crate) fn bareiss_det(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank of a set of integer rows.
pub fn rank(rows: &[IntVector]) -> usize {
    crate::hull::fast_rank(rows)
}

/// Solution set of an affine rational system `a x = b`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution {
    pub particular: Vec<Rational>,
    /// Basis of the homogeneous solution space.
    pub directions: Vec<Vec<Rational>>,
}

/// Solves `a x = b` over the rationals. Returns `None` when inconsistent.
pub fn solve_affine(a: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<AffineSolution> {
    let rows = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut particular = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = m[i][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let directions = free
        .iter()
        .map(|&f| {
            let mut d = vec![Rational::zero(); cols];
            d[f] = Rational::one();
            for (i, &c) in pivots.iter().enumerate() {
                d[c] = -m[i][f].clone();
            }
            d
        })
        .collect();
    Some(AffineSolution {
        particular,
        directions,
    })
}

/// Integer coordinates on the lattice `aff(points) ∩ Z^n`.
///
/// The basis is the Hermite normal form of the saturated direction lattice,
/// so integer points of the affine hull correspond bijectively to integer
/// local coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeChart {
    pub origin: Point,
    pub basis: IntMatrix,
    pivots: Vec<usize>,
}

impl SublatticeChart {
    pub fn new(points: &[Point]) -> Result<Self> {
        let origin = points.first().ok_or(Error::EmptyPointSet)?.clone();
        let dirs: Vec<IntVector> = points
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&origin)
                    .map(|(a, b)| BigInt::from(a - b))
                    .collect()
            })
            .collect();
        Ok(Self::from_directions(origin, &dirs))
    }

    pub fn from_directions(origin: Point, dirs: &[IntVector]) -> Self {
        let n = origin.len();
        let basis = saturated_basis(dirs, n);
        let pivots = basis
            .iter()
            .map(|row| {
                row.iter()
                    .position(|x| !x.is_zero())
                    .expect("nonzero basis row")
            })
            .collect();
        SublatticeChart {
            origin,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.len()
    }

    /// Coordinates of an integer direction vector in the basis, if it lies in the lattice.
    pub fn direction_coords(&self, v: &[BigInt]) -> Option<IntVector> {
        let mut rest = v.to_vec();
        let mut out = Vec::with_capacity(self.basis.len());
        for (row, &piv) in self.basis.iter().zip(&self.pivots) {
            let (q, r) = rest[piv].div_rem(&row[piv]);
            if !r.is_zero() {
                return None;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
            out.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(out)
    }

    /// Local coordinates of an ambient lattice point.
    pub fn coords(&self, p: &[i64]) -> Option<IntVector> {
        let v: IntVector = p
            .iter()
            .zip(&self.origin)
            .map(|(a, b)| BigInt::from(*a) - BigInt::from(*b))
            .collect();
        self.direction_coords(&v)
    }

    pub fn to_ambient(&self, y: &[BigInt]) -> IntVector {
        let mut out = to_big(&self.origin);
        for (c, row) in y.iter().zip(&self.basis) {
            for (o, b) in out.iter_mut().zip(row) {
                *o += c * b;
            }
        }
        out
    }

    /// Restriction of an ambient linear functional to local coordinates.
    pub fn pullback(&self, v: &[BigInt]) -> IntVector {
        self.basis.iter().map(|row| dot_big(row, v)).collect()
    }

    /// A primitive ambient functional whose restriction is a positive multiple of `u`.
    pub fn pushforward(&self, u: &[BigInt]) -> IntVector {
        let n = self.ambient_dim();
        let d = self.dim();
        if d == n
            && self.basis.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
            })
        {
            return primitive(u);
        }
        // w = B^T (B B^T)^{-1} u
        let gram: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|r| {
                self.basis
                    .iter()
                    .map(|s| Rational::from_integer(dot_big(r, s)))
                    .collect()
            })
            .collect();
        let rhs: Vec<Rational> = u.iter().cloned().map(Rational::from_integer).collect();
        let sol = solve_affine(&gram, &rhs, d).expect("Gram matrix of a basis is invertible");
        let mut w = vec![Rational::zero(); n];
        for (c, row) in sol.particular.iter().zip(&self.basis) {
            for (o, b) in w.iter_mut().zip(row) {
                *o += c * Rational::from_integer(b.clone());
            }
        }
        clear_denominators(&w)
    }
}

/// Scales a rational vector by a positive factor to a primitive integer vector.
pub fn clear_denominators(v: &[Rational]) -> IntVector {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: IntVector = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive(&ints)
}

/// Serializes rationals as `"p/q"` strings.
pub mod rational_serde {
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    use super::Rational;

    pub fn to_string(r: &Rational) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(r))
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&to_string(r))?;
            }
            seq.end()
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_str(&to_string(r)),
                None => s.serialize_none(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| to_big(r)).collect()
    }

    fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        a.iter()
            .map(|row| {
                (0..b[0].len())
                    .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn hnf_identity() {
        let id = m(&[&[1, 0], &[0, 1]]);
        let h = hermite_normal_form(&id);
        assert_eq!(h.hnf, id);
        assert_eq!(h.rank, 2);
    }

    #[test]
    fn hnf_small_example() {
        let a = m(&[&[2, 4], &[0, 3]]);
        let h = hermite_normal_form(&a);
        assert_eq!(h.hnf, m(&[&[2, 1], &[0, 3]]));
        assert_eq!(h.rank, 2);
        assert_eq!(mul(&h.transform, &a), h.hnf);
        assert_eq!(abs_determinant(&h.transform).unwrap(), rat(1));
    }

    #[test]
    fn hnf_dependent_rows() {
        let h = hermite_normal_form(&m(&[&[1, 1], &[2, 2]]));
        assert_eq!(h.rank, 1);
        assert!(h.hnf[1].iter().all(Zero::is_zero));
    }

    #[test]
    fn hnf_negative_and_wide() {
        let a = m(&[&[-3, 6, 9, 1], &[4, -2, 0, 5], &[7, -8, -9, 4]]);
        let h = hermite_normal_form(&a);
        assert_eq!(mul(&h.transform, &a), h.hnf);
        assert_eq!(h.rank, 2);
        assert_eq!(hermite_normal_form(&h.hnf).hnf, h.hnf);
    }

    #[test]
    fn span_basis_examples() {
        assert_eq!(
            lattice_basis_of_span(&m(&[&[1, 0], &[0, 1]])),
            m(&[&[1, 0], &[0, 1]])
        );
        assert_eq!(lattice_basis_of_span(&m(&[&[2, 2]])), m(&[&[2, 2]]));
        assert_eq!(
            lattice_basis_of_span(&m(&[&[2, 0], &[0, 2], &[1, 1]])),
            m(&[&[1, 1], &[0, 2]])
        );
        assert!(lattice_basis_of_span(&[]).is_empty());
    }

    #[test]
    fn determinants() {
        assert_eq!(abs_determinant(&m(&[&[1, 0], &[0, 1]])).unwrap(), rat(1));
        assert_eq!(abs_determinant(&m(&[&[2, 0], &[0, 3]])).unwrap(), rat(6));
        assert_eq!(abs_determinant(&m(&[&[1, 2], &[3, 4]])).unwrap(), rat(2));
        assert!(matches!(
            abs_determinant(&m(&[&[1, 2]])),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn saturation() {
        let s = saturated_basis(&m(&[&[2, 2, 0]]), 3);
        assert_eq!(s, m(&[&[1, 1, 0]]));
        let s = saturated_basis(&m(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]), 3);
        assert_eq!(s.len(), 3);
        assert_eq!(abs_determinant(&s).unwrap(), rat(1));
    }

    #[test]
    fn kernel_is_orthogonal() {
        let a = m(&[&[1, 2, 3], &[0, 1, 4]]);
        let k = integer_kernel(&a, 3);
        assert_eq!(k.len(), 1);
        for row in &a {
            assert!(dot_big(row, &k[0]).is_zero());
        }
    }

    #[test]
    fn chart_coordinates_roundtrip() {
        let pts = vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]];
        let c = SublatticeChart::new(&pts).unwrap();
        assert_eq!(c.dim(), 2);
        let y = c.coords(&[1, 1, 0]).unwrap();
        assert_eq!(c.to_ambient(&y), to_big(&[1, 1, 0]));
        assert!(c.coords(&[1, 0, 0]).is_none());
        let w = c.pushforward(&to_big(&[1, 0]));
        assert_eq!(c.pullback(&w).iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn affine_solve() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        let s = solve_affine(&a, &[rat(2), rat(0)], 2).unwrap();
        assert_eq!(s.particular, vec![rat(1), rat(1)]);
        assert!(s.directions.is_empty());
        let s = solve_affine(&[vec![rat(1), rat(1)]], &[rat(1)], 2).unwrap();
        assert_eq!(s.directions.len(), 1);
        assert!(solve_affine(&[vec![rat(1)], vec![rat(1)]], &[rat(0), rat(1)], 1).is_none());
    }
}
