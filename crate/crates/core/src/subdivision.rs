//! Privileged mixed subdivisions induced by coefficient lifts.
//!
//! The supports are lifted by their coefficients, the lifted Minkowski sum is
//! formed (keeping only the highest lift over each sum point) and the facets
//! of its upper hull are projected back. Every cell carries the Minkowski
//! decomposition read off from the lifted summands, and lower-dimensional
//! cells are the faces of full cells with the induced decomposition.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_math::{dot_big, dot_point, rank, IntVector, Point, Rational, SublatticeChart};
use crate::hull::full_hull;
use crate::polytope::{convex_hull, minkowski_sum_all, LatticePolytope, PFace, PolytopeJson};
use crate::tropical::TropicalPolynomial;

pub const RETRY_LIMIT: usize = 32;

/// A cell `F_1 + ... + F_k` of a mixed subdivision.
#[derive(Clone, Debug)]
pub struct MixedCell {
    /// The faces `F_i`; each normal is the ambient part of the lifted witness.
    pub summands: Vec<PFace>,
    /// Support points of each `f_i` lying over the cell (vertices and any points on `F_i`).
    pub summand_points: Vec<Vec<Point>>,
    pub cell_polytope: LatticePolytope,
    pub type_vector: Vec<usize>,
    pub dim: usize,
    pub on_boundary: bool,
}

impl MixedCell {
    /// Every summand has positive dimension.
    pub fn is_mixed(&self) -> bool {
        self.type_vector.iter().all(|&d| d >= 1)
    }

    /// `dim C = d_1 + ... + d_k`.
    pub fn is_transversal(&self) -> bool {
        self.type_vector.iter().sum::<usize>() == self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        self.cell_polytope.vertices()
    }

    /// Vertex sets of the summands `F_i`.
    pub fn summand_vertex_sets(&self) -> Vec<Vec<Point>> {
        self.summands.iter().map(|f| f.vertices.clone()).collect()
    }
}

/// The privileged subdivision `Γ(f_1, ..., f_k)` with all its cells.
#[derive(Clone, Debug)]
pub struct MixedSubdivision {
    polynomials: Vec<TropicalPolynomial>,
    polytopes: Vec<LatticePolytope>,
    total: LatticePolytope,
    cells: Vec<MixedCell>,
    by_dim: Vec<Vec<usize>>,
    facets_of: Vec<Vec<usize>>,
    cofacets_of: Vec<Vec<usize>>,
}

impl MixedSubdivision {
    pub fn ambient_dim(&self) -> usize {
        self.total.ambient_dim()
    }

    /// Dimension of `P_1 + ... + P_k`.
    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn polynomials(&self) -> &[TropicalPolynomial] {
        &self.polynomials
    }

    pub fn polytopes(&self) -> &[LatticePolytope] {
        &self.polytopes
    }

    pub fn total_polytope(&self) -> &LatticePolytope {
        &self.total
    }

    pub fn cells(&self) -> &[MixedCell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &MixedCell {
        &self.cells[i]
    }

    /// Indices of the cells of dimension `d`.
    pub fn indices_of_dim(&self, d: usize) -> &[usize] {
        self.by_dim.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn full_cells(&self) -> impl Iterator<Item = &MixedCell> {
        self.cell_faces(self.dim())
    }

    pub fn cell_faces(&self, d: usize) -> impl Iterator<Item = &MixedCell> {
        self.indices_of_dim(d).iter().map(|&i| &self.cells[i])
    }

    /// Cells of one dimension less contained in cell `i`.
    pub fn facets_of(&self, i: usize) -> &[usize] {
        &self.facets_of[i]
    }

    /// Cells of one dimension more containing cell `i`.
    pub fn cofacets_of(&self, i: usize) -> &[usize] {
        &self.cofacets_of[i]
    }

    pub fn num_cells_by_dim(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn to_json(&self) -> SubdivisionJson {
        SubdivisionJson {
            ambient_dim: self.ambient_dim(),
            dim: self.dim(),
            polytopes: self
                .polytopes
                .iter()
                .map(LatticePolytope::to_json)
                .collect(),
            cells: self
                .cells
                .iter()
                .map(|c| CellJson {
                    dim: c.dim,
                    type_vector: c.type_vector.clone(),
                    on_boundary: c.on_boundary,
                    mixed: c.is_mixed(),
                    vertices: c.vertices().to_vec(),
                    summands: c.summand_vertex_sets(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub dim: usize,
    #[serde(rename = "type")]
    pub type_vector: Vec<usize>,
    pub on_boundary: bool,
    pub mixed: bool,
    pub vertices: Vec<Point>,
    pub summands: Vec<Vec<Point>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionJson {
    pub ambient_dim: usize,
    pub dim: usize,
    pub polytopes: Vec<PolytopeJson>,
    pub cells: Vec<CellJson>,
}

/// Builds `Γ(f_1, ..., f_k)`.
pub fn privileged_subdivision(fs: &[TropicalPolynomial]) -> Result<MixedSubdivision> {
    let (polytopes, total, groups) = full_cell_groups(fs)?;
    let mut builder = Builder::new(&total);
    for g in groups {
        builder.add_full_cell(g);
    }
    Ok(builder.finish(fs.to_vec(), polytopes, total))
}

type Groups = Vec<Vec<Vec<Point>>>;

/// Newton polytopes, their sum, and the summand point sets of every full cell.
fn full_cell_groups(
    fs: &[TropicalPolynomial],
) -> Result<(Vec<LatticePolytope>, LatticePolytope, Groups)> {
    let n = fs
        .first()
        .ok_or_else(|| Error::Precondition("need at least one polynomial".into()))?
        .n_vars();
    if let Some(bad) = fs.iter().find(|f| f.n_vars() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.n_vars(),
        });
    }
    let polytopes: Vec<LatticePolytope> =
        fs.iter().map(TropicalPolynomial::newton_polytope).collect();
    let total = minkowski_sum_all(&polytopes)?;
    let chart = total.chart().clone();

    let scale = fs
        .iter()
        .flat_map(|f| f.terms().values())
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let heights: Vec<BTreeMap<Point, BigInt>> = fs
        .iter()
        .map(|f| {
            f.terms()
                .iter()
                .map(|(e, c)| (e.clone(), c.numer() * (&scale / c.denom())))
                .collect()
        })
        .collect();

    let groups = if chart.dim() == 0 {
        None
    } else {
        upper_facet_groups(&heights, &chart)
    };
    let groups =
        groups.unwrap_or_else(|| vec![fs.iter().map(TropicalPolynomial::support).collect()]);
    Ok((polytopes, total, groups))
}

/// Summand point sets of the upper facets, or `None` when the lift is affine.
fn upper_facet_groups(
    heights: &[BTreeMap<Point, BigInt>],
    chart: &SublatticeChart,
) -> Option<Vec<Vec<Vec<Point>>>> {
    let m = chart.dim();
    let n = chart.ambient_dim();
    let mut acc: BTreeMap<Point, BigInt> = BTreeMap::new();
    acc.insert(vec![0; n], BigInt::zero());
    for h in heights {
        let mut next: BTreeMap<Point, BigInt> = BTreeMap::new();
        for (y, hy) in &acc {
            for (a, ha) in h {
                let key: Point = y.iter().zip(a).map(|(p, q)| p + q).collect();
                let val = hy + ha;
                match next.get_mut(&key) {
                    Some(old) if *old >= val => {}
                    Some(old) => *old = val,
                    None => {
                        next.insert(key, val);
                    }
                }
            }
        }
        acc = next;
    }
    let lifted: Vec<IntVector> = acc
        .iter()
        .map(|(y, h)| {
            let mut v = chart
                .coords(y)
                .expect("sum points lie on the affine lattice of the sum");
            v.push(h.clone());
            v
        })
        .collect();
    let base = &lifted[0];
    let diffs: Vec<IntVector> = lifted[1..]
        .iter()
        .map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    if rank(&diffs) <= m {
        return None;
    }
    let hull = full_hull(&lifted);

    let local: Vec<Vec<(Point, IntVector)>> = heights
        .iter()
        .map(|h| {
            let origin = h.keys().next().expect("non-empty support");
            h.keys()
                .map(|a| {
                    let d: IntVector = a
                        .iter()
                        .zip(origin)
                        .map(|(p, q)| BigInt::from(p - q))
                        .collect();
                    (
                        a.clone(),
                        chart
                            .direction_coords(&d)
                            .expect("summand directions lie in the sum lattice"),
                    )
                })
                .collect()
        })
        .collect();

    let mut groups = Vec::new();
    for facet in &hull.facets {
        if !facet.normal[m].is_positive() {
            continue;
        }
        let a = &facet.normal[..m];
        let ah = &facet.normal[m];
        let group: Vec<Vec<Point>> = heights
            .iter()
            .zip(&local)
            .map(|(h, loc)| {
                let scores: Vec<BigInt> = loc
                    .iter()
                    .map(|(p, y)| dot_big(a, y) + ah * &h[p])
                    .collect();
                let best = scores.iter().max().expect("non-empty").clone();
                loc.iter()
                    .zip(&scores)
                    .filter(|(_, s)| **s == best)
                    .map(|((p, _), _)| p.clone())
                    .collect()
            })
            .collect();
        groups.push(group);
    }
    Some(groups)
}

struct Builder {
    facet_ineqs: Vec<crate::polytope::FacetInequality>,
    full_dim: bool,
    index: HashMap<Vec<Point>, usize>,
    cells: Vec<MixedCell>,
}

impl Builder {
    fn new(total: &LatticePolytope) -> Self {
        Builder {
            facet_ineqs: total.facet_inequalities(),
            full_dim: total.is_full_dimensional(),
            index: HashMap::new(),
            cells: Vec::new(),
        }
    }

    fn on_boundary(&self, verts: &[Point]) -> bool {
        if !self.full_dim {
            return true;
        }
        self.facet_ineqs
            .iter()
            .any(|f| verts.iter().all(|v| dot_point(&f.normal, v) == f.offset))
    }

    fn insert(
        &mut self,
        groups: Vec<Vec<Point>>,
        cell_polytope: LatticePolytope,
        witness: Vec<BigInt>,
    ) -> usize {
        let key = cell_polytope.vertices().to_vec();
        if let Some(&i) = self.index.get(&key) {
            return i;
        }
        let summands: Vec<PFace> = groups
            .iter()
            .map(|g| {
                let p = convex_hull(g).expect("non-empty summand");
                PFace {
                    vertices: p.vertices().to_vec(),
                    dim: p.dim(),
                    normal: witness.clone(),
                }
            })
            .collect();
        let type_vector = summands.iter().map(|f| f.dim).collect();
        let cell = MixedCell {
            on_boundary: self.on_boundary(&key),
            dim: cell_polytope.dim(),
            summands,
            summand_points: groups,
            cell_polytope,
            type_vector,
        };
        self.cells.push(cell);
        self.index.insert(key, self.cells.len() - 1);
        self.cells.len() - 1
    }

    fn add_full_cell(&mut self, groups: Vec<Vec<Point>>) {
        let hulls: Vec<LatticePolytope> = groups
            .iter()
            .map(|g| convex_hull(g).expect("non-empty"))
            .collect();
        let cell = minkowski_sum_all(&hulls).expect("summands share the ambient dimension");
        let n = cell.ambient_dim();
        let full = self.insert(groups.clone(), cell.clone(), vec![BigInt::zero(); n]);
        if self.cells[full].dim == 0 {
            return;
        }
        for d in 0..cell.dim() {
            for face in cell.faces(d).expect("dimension in range") {
                if self.index.contains_key(&face.vertices) {
                    continue;
                }
                let sub: Vec<Vec<Point>> = groups
                    .iter()
                    .map(|g| {
                        let vals: Vec<BigInt> =
                            g.iter().map(|p| dot_point(&face.normal, p)).collect();
                        let best = vals.iter().max().expect("non-empty").clone();
                        g.iter()
                            .zip(&vals)
                            .filter(|(_, v)| **v == best)
                            .map(|(p, _)| p.clone())
                            .collect()
                    })
                    .collect();
                let poly = convex_hull(&face.vertices).expect("non-empty face");
                self.insert(sub, poly, face.normal.clone());
            }
        }
    }

    fn finish(
        self,
        polynomials: Vec<TropicalPolynomial>,
        polytopes: Vec<LatticePolytope>,
        total: LatticePolytope,
    ) -> MixedSubdivision {
        let mut order: Vec<usize> = (0..self.cells.len()).collect();
        order.sort_by(|&a, &b| {
            let (ca, cb) = (&self.cells[a], &self.cells[b]);
            cb.dim
                .cmp(&ca.dim)
                .then_with(|| ca.vertices().cmp(cb.vertices()))
        });
        let cells: Vec<MixedCell> = order.iter().map(|&i| self.cells[i].clone()).collect();
        let index: HashMap<Vec<Point>, usize> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| (c.vertices().to_vec(), i))
            .collect();
        let top = total.dim();
        let mut by_dim = vec![Vec::new(); top + 1];
        for (i, c) in cells.iter().enumerate() {
            by_dim[c.dim].push(i);
        }
        let mut facets_of = vec![Vec::new(); cells.len()];
        let mut cofacets_of = vec![Vec::new(); cells.len()];
        for (i, c) in cells.iter().enumerate() {
            if c.dim == 0 {
                continue;
            }
            for face in c
                .cell_polytope
                .faces(c.dim - 1)
                .expect("dimension in range")
            {
                let j = index[&face.vertices];
                facets_of[i].push(j);
                cofacets_of[j].push(i);
            }
        }
        for v in facets_of.iter_mut().chain(cofacets_of.iter_mut()) {
            v.sort_unstable();
        }
        MixedSubdivision {
            polynomials,
            polytopes,
            total,
            cells,
            by_dim,
            facets_of,
            cofacets_of,
        }
    }
}

/// A cell whose dimension is smaller than the sum of its summand dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalityViolation {
    /// Zero-based indices of the sub-collection that was checked.
    pub subset: Vec<usize>,
    pub cell_vertices: Vec<Point>,
    pub type_vector: Vec<usize>,
    pub dim: usize,
}

impl fmt::Display for TransversalityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "polynomials {:?}: cell with vertices {:?} has dimension {} but type {:?}",
            self.subset, self.cell_vertices, self.dim, self.type_vector
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalityReport {
    pub transversal: bool,
    pub violation: Option<TransversalityViolation>,
}

fn first_violation(s: &MixedSubdivision, subset: &[usize]) -> Option<TransversalityViolation> {
    s.full_cells()
        .find(|c| !c.is_transversal())
        .map(|c| TransversalityViolation {
            subset: subset.to_vec(),
            cell_vertices: c.vertices().to_vec(),
            type_vector: c.type_vector.clone(),
            dim: c.dim,
        })
}

/// Checks `dim C = Σ dim F_i` on every full cell, for every sub-collection.
/// Faces of a transversal full cell are transversal, so full cells suffice.
pub fn is_transversal(s: &MixedSubdivision) -> TransversalityReport {
    let k = s.polynomials.len();
    let all: Vec<usize> = (0..k).collect();
    if let Some(v) = first_violation(s, &all) {
        return TransversalityReport {
            transversal: false,
            violation: Some(v),
        };
    }
    for mask in 1u64..(1u64 << k) - 1 {
        let subset: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let fs: Vec<TropicalPolynomial> =
            subset.iter().map(|&i| s.polynomials[i].clone()).collect();
        if let Some(v) = full_cell_violation(&fs, &subset) {
            return TransversalityReport {
                transversal: false,
                violation: Some(v),
            };
        }
    }
    TransversalityReport {
        transversal: true,
        violation: None,
    }
}

fn affine_directions(points: &[Point]) -> Vec<IntVector> {
    points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(&points[0])
                .map(|(a, b)| BigInt::from(a - b))
                .collect()
        })
        .collect()
}

/// Like `first_violation`, but reads dimensions off the summand point sets without building cells.
fn full_cell_violation(
    fs: &[TropicalPolynomial],
    subset: &[usize],
) -> Option<TransversalityViolation> {
    let (_, _, groups) = full_cell_groups(fs).expect("sub-collection of a valid input");
    groups.into_iter().find_map(|g| {
        let directions: Vec<Vec<IntVector>> = g.iter().map(|p| affine_directions(p)).collect();
        let type_vector: Vec<usize> = directions.iter().map(|d| rank(d)).collect();
        let dim = rank(&directions.concat());
        (type_vector.iter().sum::<usize>() != dim).then(|| {
            let hulls: Vec<LatticePolytope> = g
                .iter()
                .map(|p| convex_hull(p).expect("non-empty"))
                .collect();
            TransversalityViolation {
                subset: subset.to_vec(),
                cell_vertices: minkowski_sum_all(&hulls)
                    .expect("same ambient dimension")
                    .vertices()
                    .to_vec(),
                type_vector,
                dim,
            }
        })
    })
}

/// Returns an error carrying the certificate when `s` is not transversal.
pub fn require_transversal(s: &MixedSubdivision) -> Result<()> {
    match is_transversal(s).violation {
        None => Ok(()),
        Some(v) => Err(Error::NotTransversal(v)),
    }
}

fn perturbation_denominator(fs: &[TropicalPolynomial], retry: usize) -> BigInt {
    let terms: usize = fs.iter().map(TropicalPolynomial::num_terms).sum();
    let lcm = fs
        .iter()
        .flat_map(|f| f.terms().values())
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    (BigInt::one() << (16 + retry)) * BigInt::from(1 + terms) * lcm
}

/// `count` seeded rationals `u / (2^12 D)` with `|u| < 2^12`, for perturbation number `retry`.
pub(crate) fn small_rationals(
    fs: &[TropicalPolynomial],
    seed: u64,
    retry: usize,
    count: usize,
) -> Vec<Rational> {
    const BITS: u32 = 12;
    let mut rng = SplitMix64::seed_from_u64(seed.wrapping_add(retry as u64));
    let den = perturbation_denominator(fs, retry) << BITS;
    let span = (1u64 << (BITS + 1)) - 1;
    (0..count)
        .map(|_| {
            let u = (rng.next_u64() % span) as i64 - ((1i64 << BITS) - 1);
            Rational::new(BigInt::from(u), den.clone())
        })
        .collect()
}

/// Perturbation number `retry` of all coefficients, each of magnitude below `1/D`.
pub fn perturb_once(fs: &[TropicalPolynomial], seed: u64, retry: usize) -> Vec<TropicalPolynomial> {
    let total: usize = fs.iter().map(TropicalPolynomial::num_terms).sum();
    let mut eps = small_rationals(fs, seed, retry, total).into_iter();
    fs.iter()
        .map(|f| f.with_coefficients(|_, c| c + eps.next().expect("one per term")))
        .collect()
}

/// Seeded small perturbation of all coefficients, retried until the subdivision is transversal.
pub fn perturb_lifts(fs: &[TropicalPolynomial], seed: u64) -> Result<Vec<TropicalPolynomial>> {
    for retry in 0..RETRY_LIMIT {
        let out = perturb_once(fs, seed, retry);
        if is_transversal(&privileged_subdivision(&out)?).transversal {
            return Ok(out);
        }
    }
    Err(Error::RetryLimit { limit: RETRY_LIMIT })
}

/// Polynomials on the vertices of `polytopes` with zero lifts, then perturbed.
pub fn generic_polynomials(
    polytopes: &[LatticePolytope],
    seed: u64,
) -> Result<Vec<TropicalPolynomial>> {
    let fs: Vec<TropicalPolynomial> = polytopes
        .iter()
        .map(|p| TropicalPolynomial::with_zero_coefficients(p.vertices()))
        .collect::<Result<_>>()?;
    perturb_lifts(&fs, seed)
}

/// Subdivision of perturbed copies of `fs`.
pub fn perturbed_subdivision(fs: &[TropicalPolynomial], seed: u64) -> Result<MixedSubdivision> {
    privileged_subdivision(&perturb_lifts(fs, seed)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{rat, ratio};
    use crate::polytope::simplex;

    fn polys(texts: &[&str], n: usize) -> Vec<TropicalPolynomial> {
        texts
            .iter()
            .map(|t| TropicalPolynomial::parse(t, n).unwrap())
            .collect()
    }

    #[test]
    fn square_split_by_diagonal() {
        let s = privileged_subdivision(&polys(&["0+x+y+(-1)xy"], 2)).unwrap();
        let full: Vec<&MixedCell> = s.full_cells().collect();
        assert_eq!(full.len(), 2);
        for c in &full {
            assert_eq!(c.vertices().len(), 3);
            assert_eq!(c.cell_polytope.euclidean_volume(), ratio(1, 2));
        }
        assert_eq!(s.num_cells_by_dim(), vec![4, 5, 2]);
        let diagonal: Vec<&MixedCell> = s.cell_faces(1).filter(|c| !c.on_boundary).collect();
        assert_eq!(diagonal.len(), 1);
        assert_eq!(diagonal[0].vertices(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn flat_lift_is_trivial() {
        let s = privileged_subdivision(&polys(&["0+x+y+xy"], 2)).unwrap();
        assert_eq!(s.full_cells().count(), 1);
        let s = privileged_subdivision(&polys(&["0+x+y+z"], 3)).unwrap();
        assert_eq!(s.cell_faces(2).count(), 4);
        assert!(s.cell_faces(2).all(|c| c.on_boundary));
    }

    #[test]
    fn two_segments_make_one_mixed_square() {
        let s = privileged_subdivision(&polys(&["0+x", "0+y"], 2)).unwrap();
        let full: Vec<&MixedCell> = s.full_cells().collect();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].type_vector, vec![1, 1]);
        assert!(!full[0].on_boundary);
        assert!(is_transversal(&s).transversal);
    }

    #[test]
    fn identical_lines_are_not_transversal() {
        let s = privileged_subdivision(&polys(&["0+x+y", "0+x+y"], 2)).unwrap();
        let r = is_transversal(&s);
        assert!(!r.transversal);
        let v = r.violation.unwrap();
        assert!(v.type_vector.iter().sum::<usize>() > v.dim);
    }

    #[test]
    fn perturbation_is_reproducible_and_mixed() {
        let f = TropicalPolynomial::with_zero_coefficients(simplex(2, 2).vertices()).unwrap();
        let fs = vec![f.clone(), f];
        let a = perturb_lifts(&fs, 9).unwrap();
        let b = perturb_lifts(&fs, 9).unwrap();
        assert_eq!(a, b);
        let s = privileged_subdivision(&a).unwrap();
        assert!(s
            .full_cells()
            .all(|c| c.type_vector.iter().sum::<usize>() == 2));
        let total: Rational = s
            .full_cells()
            .map(|c| c.cell_polytope.euclidean_volume())
            .sum();
        assert_eq!(total, rat(8));
    }

    #[test]
    fn generic_input_keeps_its_combinatorics() {
        let fs = polys(&["0+x+y+(-1)xy"], 2);
        let before = privileged_subdivision(&fs).unwrap();
        let after = privileged_subdivision(&perturb_lifts(&fs, 3).unwrap()).unwrap();
        let key = |s: &MixedSubdivision| {
            s.cells()
                .iter()
                .map(|c| c.vertices().to_vec())
                .collect::<Vec<_>>()
        };
        assert_eq!(key(&before), key(&after));
    }

    #[test]
    fn adjacency_is_consistent() {
        let fs = perturb_lifts(&polys(&["0+x+y+z", "0+x+y+z"], 3), 1).unwrap();
        let s = privileged_subdivision(&fs).unwrap();
        for (i, c) in s.cells().iter().enumerate() {
            for &j in s.facets_of(i) {
                assert_eq!(s.cell(j).dim + 1, c.dim);
                assert!(s.cofacets_of(j).contains(&i));
            }
            if c.dim + 1 == s.dim() {
                assert_eq!(s.cofacets_of(i).len(), if c.on_boundary { 1 } else { 2 });
            }
        }
    }

    #[test]
    fn lower_dimensional_sum() {
        let s = privileged_subdivision(&polys(&["0 + 1x", "0 + x^2"], 2)).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.cells().iter().all(|c| c.on_boundary));
        let points = privileged_subdivision(&polys(&["3", "x y"], 2)).unwrap();
        assert_eq!(points.cells().len(), 1);
        assert_eq!(points.cells()[0].dim, 0);
    }
}
