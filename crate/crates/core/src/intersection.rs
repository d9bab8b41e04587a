//! The intersection `X(f_1) ∩ ... ∩ X(f_k)` read off the dual mixed subdivision.
//!
//! A cell `C = F_1 + ... + F_k` of the privileged subdivision is dual to a face
//! `A` of the union of the hypersurfaces with `dim A = n - dim C`. The face lies
//! in the intersection exactly when every `F_i` has positive dimension, and it
//! is unbounded exactly when `C` lies on the boundary of `P_1 + ... + P_k`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_math::{
    clear_denominators, factorial, rational_serde, IntVector, Point, Rational,
};
use crate::mixed_volume::{
    compositions, curve_mixed_volume, facet_mixed_volume_sum, mixed_volume_ie,
    relative_mixed_volume, relative_mixed_volume_of, MVQuery,
};
use crate::polytope::LatticePolytope;
use crate::subdivision::{
    privileged_subdivision, require_transversal, small_rationals, MixedCell, MixedSubdivision,
    RETRY_LIMIT,
};
use crate::tropical::{product_all, tie_solution, TropicalPolynomial};

/// A face `A` of the intersection, stored through its dual cell.
#[derive(Clone, Debug)]
pub struct IntersectionCell {
    /// Index of the dual cell in the source subdivision.
    pub dual: usize,
    pub dim: usize,
    pub type_vector: Vec<usize>,
    pub bounded: bool,
    pub multiplicity: Rational,
    /// Faces of `A` as indices into the complex; these are dual to the cofacets of the dual cell.
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct IntersectionComplex {
    source: MixedSubdivision,
    cells: Vec<IntersectionCell>,
    by_dim: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionCellJson {
    pub dim: usize,
    #[serde(rename = "type")]
    pub type_vector: Vec<usize>,
    pub bounded: bool,
    #[serde(with = "rational_serde")]
    pub multiplicity: Rational,
    pub dual_vertices: Vec<Point>,
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionJson {
    pub ambient_dim: usize,
    pub f_vector: Vec<usize>,
    pub cells: Vec<IntersectionCellJson>,
}

impl IntersectionComplex {
    pub fn new(source: MixedSubdivision) -> Result<Self> {
        let n = source.ambient_dim();
        let mut index = vec![usize::MAX; source.cells().len()];
        let mut cells = Vec::new();
        for (i, c) in source.cells().iter().enumerate() {
            if c.is_mixed() {
                index[i] = cells.len();
                cells.push(IntersectionCell {
                    dual: i,
                    dim: n - c.dim,
                    type_vector: c.type_vector.clone(),
                    bounded: !c.on_boundary,
                    multiplicity: multiplicity(c, c.is_transversal())?,
                    faces: Vec::new(),
                });
            }
        }
        for cell in &mut cells {
            cell.faces = source
                .cofacets_of(cell.dual)
                .iter()
                .map(|&j| index[j])
                .collect();
        }
        let mut by_dim = vec![Vec::new(); n + 1];
        for (i, c) in cells.iter().enumerate() {
            by_dim[c.dim].push(i);
        }
        Ok(IntersectionComplex {
            source,
            cells,
            by_dim,
        })
    }

    pub fn source(&self) -> &MixedSubdivision {
        &self.source
    }

    pub fn ambient_dim(&self) -> usize {
        self.source.ambient_dim()
    }

    pub fn cells(&self) -> &[IntersectionCell] {
        &self.cells
    }

    pub fn cells_of_dim(&self, j: usize) -> impl Iterator<Item = &IntersectionCell> {
        self.by_dim
            .get(j)
            .into_iter()
            .flatten()
            .map(move |&i| &self.cells[i])
    }

    pub fn dual_cell(&self, a: &IntersectionCell) -> &MixedCell {
        self.source.cell(a.dual)
    }

    /// Number of `j`-faces for `j = 0..=n`, without multiplicities.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    /// `Σ m_A` over the `j`-faces.
    pub fn weighted_count(&self, j: usize) -> Rational {
        self.cells_of_dim(j).map(|a| a.multiplicity.clone()).sum()
    }

    pub fn to_json(&self) -> IntersectionJson {
        IntersectionJson {
            ambient_dim: self.ambient_dim(),
            f_vector: self.f_vector(),
            cells: self
                .cells
                .iter()
                .map(|a| IntersectionCellJson {
                    dim: a.dim,
                    type_vector: a.type_vector.clone(),
                    bounded: a.bounded,
                    multiplicity: a.multiplicity.clone(),
                    dual_vertices: self.dual_cell(a).vertices().to_vec(),
                    faces: a.faces.clone(),
                })
                .collect(),
        }
    }
}

pub fn intersection_complex(fs: &[TropicalPolynomial]) -> Result<IntersectionComplex> {
    IntersectionComplex::new(privileged_subdivision(fs)?)
}

/// Multiplicity of the face dual to `cell`.
///
/// In the transversal case this is `MV'(F_1, d_1; ...; F_k, d_k)`; otherwise it
/// is the sum of `MV'(F_1, e_1; ...; F_k, e_k)` over `e <= d` with `Σ e = dim C`,
/// where summand collections spanning too small a lattice contribute zero.
pub fn multiplicity(cell: &MixedCell, transversal: bool) -> Result<Rational> {
    if transversal {
        if !cell.is_mixed() {
            return Err(Error::Precondition(format!(
                "cell of type {:?} is not mixed",
                cell.type_vector
            )));
        }
        if !cell.is_transversal() {
            return Err(Error::Precondition(format!(
                "cell of dimension {} and type {:?} is not transversal",
                cell.dim, cell.type_vector
            )));
        }
        return relative_mixed_volume(&cell.summands, &cell.type_vector);
    }
    let zeros = vec![0; cell.type_vector.len()];
    let mut total = Rational::zero();
    for e in compositions(&zeros, &cell.type_vector, cell.dim) {
        match relative_mixed_volume(&cell.summands, &e) {
            Ok(v) => total += v,
            Err(Error::RankDeficient { .. }) => {}
            Err(err) => return Err(err),
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TypeContribution {
    #[serde(rename = "type")]
    pub type_vector: Vec<usize>,
    #[serde(with = "rational_serde")]
    pub value: Rational,
}

/// Both sides of the weighted `j`-face count.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FVectorCount {
    pub j: usize,
    /// `Σ m_A` over the `j`-faces of the intersection.
    #[serde(with = "rational_serde")]
    pub cell_sum: Rational,
    /// `Σ d_1! ... d_k! vol'(C)` over mixed cells `C` of dimension `n - j`.
    #[serde(with = "rational_serde")]
    pub type_sum: Rational,
    pub by_type: Vec<TypeContribution>,
    /// For `j = 0`: `Σ_d MV(P_1, d_1; ...; P_k, d_k)` over mixed types.
    #[serde(with = "rational_serde::option")]
    pub mixed_volume_sum: Option<Rational>,
    pub equal: bool,
}

pub fn f_vector_counts(fs: &[TropicalPolynomial], j: usize) -> Result<FVectorCount> {
    let s = privileged_subdivision(fs)?;
    require_transversal(&s)?;
    f_vector_counts_in(&s, j)
}

fn f_vector_counts_in(s: &MixedSubdivision, j: usize) -> Result<FVectorCount> {
    let n = s.ambient_dim();
    if j > n {
        return Err(Error::FaceDimensionOutOfRange {
            requested: j,
            max: n,
        });
    }
    let d = n - j;
    let mut cell_sum = Rational::zero();
    let mut by_type: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for c in s.cell_faces(d).filter(|c| c.is_mixed()) {
        cell_sum += multiplicity(c, true)?;
        let weight: BigInt = c.type_vector.iter().map(|&di| factorial(di)).product();
        *by_type
            .entry(c.type_vector.clone())
            .or_insert_with(Rational::zero) +=
            c.cell_polytope.lattice_volume() * Rational::from_integer(weight);
    }
    let type_sum: Rational = by_type.values().sum();
    let mixed_volume_sum = if j == 0 {
        let k = s.polytopes().len();
        let mut total = Rational::zero();
        for t in compositions(&vec![1; k], &vec![n; k], n) {
            total += mixed_volume_ie(&MVQuery::new(s.polytopes().to_vec(), t))?;
        }
        Some(total)
    } else {
        None
    };
    let equal = cell_sum == type_sum && mixed_volume_sum.as_ref().is_none_or(|m| *m == cell_sum);
    Ok(FVectorCount {
        j,
        cell_sum,
        type_sum,
        by_type: by_type
            .into_iter()
            .map(|(type_vector, value)| TypeContribution { type_vector, value })
            .collect(),
        mixed_volume_sum,
        equal,
    })
}

/// `MV_n(P_1, ..., P_{n-1}, P_1 + ... + P_{n-1})`, checked against the weighted
/// vertex count of the curve and against the stable intersection of the curve
/// with the union hypersurface `X(f_1 ⊙ ... ⊙ f_{n-1})`.
pub fn vertex_count_curve(fs: &[TropicalPolynomial], seed: u64) -> Result<Rational> {
    let n = require_curve(fs)?;
    let s = privileged_subdivision(fs)?;
    require_transversal(&s)?;
    let mut polys = s.polytopes().to_vec();
    polys.push(s.total_polytope().clone());
    let formula = mixed_volume_ie(&MVQuery::each_once(polys))?;
    let cells = f_vector_counts_in(&s, 0)?.cell_sum;
    let mut with_union = fs.to_vec();
    with_union.push(product_all(fs)?);
    let stable = stable_intersection_points(&with_union, seed)?.total_weight;
    if formula != cells || formula != stable {
        return Err(Error::IdentityFailure(format!(
            "vertex count of a curve in R^{n}: mixed volume {formula}, cell sum {cells}, stable intersection {stable}"
        )));
    }
    Ok(formula)
}

fn require_curve(fs: &[TropicalPolynomial]) -> Result<usize> {
    let n = fs
        .first()
        .ok_or_else(|| Error::Precondition("no polynomials".into()))?
        .n_vars();
    if let Some(bad) = fs.iter().find(|f| f.n_vars() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.n_vars(),
        });
    }
    if fs.len() + 1 != n {
        return Err(Error::Precondition(format!(
            "a curve in R^{n} needs {} polynomials, got {}",
            n - 1,
            fs.len()
        )));
    }
    Ok(n)
}

/// Both sides of the weighted count of unbounded `j`-faces.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnboundedCount {
    pub j: usize,
    /// `Σ_F Σ_d MV'((P_1)^v, d_1; ...)` over the `(n - j)`-faces `F` of `P` on its boundary.
    #[serde(with = "rational_serde")]
    pub face_sum: Rational,
    /// `Σ m_A` over the unbounded `j`-faces of the intersection.
    #[serde(with = "rational_serde")]
    pub cell_sum: Rational,
    pub equal: bool,
}

pub fn unbounded_face_count(fs: &[TropicalPolynomial], j: usize) -> Result<UnboundedCount> {
    let s = privileged_subdivision(fs)?;
    require_transversal(&s)?;
    let n = s.ambient_dim();
    if j > n {
        return Err(Error::FaceDimensionOutOfRange {
            requested: j,
            max: n,
        });
    }
    let d = n - j;
    let mut cell_sum = Rational::zero();
    for c in s.cell_faces(d).filter(|c| c.is_mixed() && c.on_boundary) {
        cell_sum += multiplicity(c, true)?;
    }
    let total = s.total_polytope();
    let mut face_sum = Rational::zero();
    if d <= total.dim() {
        let k = s.polytopes().len();
        for face in total.faces(d)? {
            let improper = face.normal.iter().all(Zero::is_zero);
            if improper && total.is_full_dimensional() {
                continue;
            }
            let parts: Vec<LatticePolytope> = s
                .polytopes()
                .iter()
                .map(|p| {
                    if improper {
                        Ok(p.clone())
                    } else {
                        p.face_in_direction(&face.normal).map(|f| f.polytope())
                    }
                })
                .collect::<Result<_>>()?;
            face_sum += mixed_sum_over_types(&parts, d, &vec![1; k])?;
        }
    }
    let equal = face_sum == cell_sum;
    Ok(UnboundedCount {
        j,
        face_sum,
        cell_sum,
        equal,
    })
}

/// `Σ MV'(Q_1, e_1; ...; Q_k, e_k)` over `e >= lo` with `Σ e = d`; rank-deficient terms vanish.
fn mixed_sum_over_types(parts: &[LatticePolytope], d: usize, lo: &[usize]) -> Result<Rational> {
    let hi: Vec<usize> = parts.iter().map(|p| p.dim().min(d)).collect();
    let mut total = Rational::zero();
    for e in compositions(lo, &hi, d) {
        match relative_mixed_volume_of(parts, &e) {
            Ok(v) => total += v,
            Err(Error::RankDeficient { .. }) => {}
            Err(err) => return Err(err),
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveVertex {
    /// Index of the dual full cell in the source subdivision.
    pub dual: usize,
    #[serde(with = "rational_serde")]
    pub multiplicity: Rational,
    pub valence: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveEdge {
    pub dual: usize,
    #[serde(with = "rational_serde")]
    pub multiplicity: Rational,
    /// Indices into the vertex list: two for a bounded edge, one for a ray.
    pub endpoints: Vec<usize>,
}

/// The intersection curve of `n - 1` hypersurfaces as a graph with rays.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveGraph {
    pub vertices: Vec<CurveVertex>,
    pub bounded_edges: Vec<CurveEdge>,
    pub rays: Vec<CurveEdge>,
}

impl CurveGraph {
    fn from_complex(complex: &IntersectionComplex) -> Self {
        let mut vertex_index = BTreeMap::new();
        let mut vertices = Vec::new();
        for (i, a) in complex.cells.iter().enumerate().filter(|(_, a)| a.dim == 0) {
            vertex_index.insert(i, vertices.len());
            vertices.push(CurveVertex {
                dual: a.dual,
                multiplicity: a.multiplicity.clone(),
                valence: 0,
            });
        }
        let mut bounded_edges = Vec::new();
        let mut rays = Vec::new();
        for a in complex.cells_of_dim(1) {
            let endpoints: Vec<usize> = a.faces.iter().map(|f| vertex_index[f]).collect();
            for &v in &endpoints {
                vertices[v].valence += 1;
            }
            let edge = CurveEdge {
                dual: a.dual,
                multiplicity: a.multiplicity.clone(),
                endpoints,
            };
            if a.bounded {
                bounded_edges.push(edge);
            } else {
                rays.push(edge);
            }
        }
        CurveGraph {
            vertices,
            bounded_edges,
            rays,
        }
    }

    /// Connected components of vertices joined by bounded edges.
    pub fn num_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.vertices.len();
        for e in &self.bounded_edges {
            let (a, b) = (
                find(&mut parent, e.endpoints[0]),
                find(&mut parent, e.endpoints[1]),
            );
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        !self.vertices.is_empty() && self.num_components() == 1
    }

    /// First Betti number `E_bounded - V + components`.
    pub fn betti_number(&self) -> i64 {
        self.bounded_edges.len() as i64 - self.vertices.len() as i64 + self.num_components() as i64
    }

    pub fn is_three_valent(&self) -> bool {
        self.vertices.iter().all(|v| v.valence == 3)
    }

    pub fn has_unit_multiplicities(&self) -> bool {
        let one = Rational::one();
        self.vertices.iter().all(|v| v.multiplicity == one)
            && self
                .bounded_edges
                .iter()
                .chain(&self.rays)
                .all(|e| e.multiplicity == one)
    }
}

pub fn curve_graph(fs: &[TropicalPolynomial]) -> Result<CurveGraph> {
    require_curve(fs)?;
    let s = privileged_subdivision(fs)?;
    require_transversal(&s)?;
    Ok(CurveGraph::from_complex(&IntersectionComplex::new(s)?))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenusReport {
    #[serde(with = "rational_serde")]
    pub vertices_weighted: Rational,
    #[serde(with = "rational_serde")]
    pub rays_weighted: Rational,
    /// `MV_n(P_1, ..., P_{n-1}, ΣP_i)`.
    #[serde(with = "rational_serde")]
    pub mixed_volume: Rational,
    /// `Σ_v MV'_{n-1}((P_1)^v, ..., (P_{n-1})^v)` over the facets of `ΣP_i`.
    #[serde(with = "rational_serde")]
    pub boundary_sum: Rational,
    #[serde(with = "rational_serde")]
    pub genus_formula_value: Rational,
    pub genus_graph_value: Option<i64>,
    pub num_vertices: usize,
    pub num_bounded_edges: usize,
    pub num_rays: usize,
    pub transversal: bool,
    pub smooth: bool,
    pub connected: bool,
    /// Smooth, transversal, connected, 3-valent with unit multiplicities; otherwise
    /// the formula value only bounds the graph genus from above.
    pub is_exact: bool,
}

pub fn genus(fs: &[TropicalPolynomial]) -> Result<GenusReport> {
    require_curve(fs)?;
    let s = privileged_subdivision(fs)?;
    let transversal = require_transversal(&s).is_ok();
    let mixed_volume = curve_mixed_volume(s.polytopes())?;
    let boundary_sum = facet_mixed_volume_sum(s.polytopes())?;
    let two = Rational::from_integer(2.into());
    let genus_formula_value = (&mixed_volume - &boundary_sum) / &two + Rational::one();
    let smooth = fs.iter().all(smoothness_check);
    let graph = CurveGraph::from_complex(&IntersectionComplex::new(s)?);
    let connected = graph.is_connected();
    let genus_graph_value = connected.then(|| graph.betti_number());
    let is_exact = smooth
        && transversal
        && connected
        && graph.is_three_valent()
        && graph.has_unit_multiplicities();
    Ok(GenusReport {
        vertices_weighted: graph.vertices.iter().map(|v| v.multiplicity.clone()).sum(),
        rays_weighted: graph.rays.iter().map(|e| e.multiplicity.clone()).sum(),
        mixed_volume,
        boundary_sum,
        genus_formula_value,
        genus_graph_value,
        num_vertices: graph.vertices.len(),
        num_bounded_edges: graph.bounded_edges.len(),
        num_rays: graph.rays.len(),
        transversal,
        smooth,
        connected,
        is_exact,
    })
}

/// Every full cell of `Γ(f)` is a simplex of volume `1/n!`.
pub fn smoothness_check(f: &TropicalPolynomial) -> bool {
    let Ok(s) = privileged_subdivision(std::slice::from_ref(f)) else {
        return false;
    };
    let unit = Rational::new(BigInt::one(), factorial(f.n_vars()));
    let smooth = s.full_cells().all(|c| {
        c.vertices().len() == f.n_vars() + 1 && c.cell_polytope.euclidean_volume() == unit
    });
    smooth
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WeightedPoint {
    #[serde(with = "rational_serde::vec")]
    pub point: Vec<Rational>,
    #[serde(with = "rational_serde")]
    pub weight: Rational,
}

/// The stable intersection of `n` hypersurfaces in `R^n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StableIntersection {
    pub points: Vec<WeightedPoint>,
    #[serde(with = "rational_serde")]
    pub total_weight: Rational,
    /// Perturbation attempts discarded before a generic one was found.
    pub retries: usize,
}

/// An edge of the curve cut out by the first `n - 1` translated hypersurfaces.
struct CurveLine {
    base: Vec<Rational>,
    direction: IntVector,
    lower: Option<Rational>,
    upper: Option<Rational>,
    weight: Rational,
    ties: Vec<Vec<Point>>,
}

/// A crossing of the last hypersurface along a curve edge.
struct Crossing {
    slope_jump: BigInt,
    from: Point,
    to: Point,
}

/// Translates every hypersurface generically, intersects, and moves the
/// intersection points back to the limit configuration.
///
/// The translation of `X(f)` by `v` is realised by adding `<v, α>` to each
/// coefficient `c_α`. The first `n - 1` translated hypersurfaces meet in a
/// curve; each edge of it is walked against the last hypersurface, and each
/// crossing contributes the edge weight times the slope change along the edge.
pub fn stable_intersection_points(
    fs: &[TropicalPolynomial],
    seed: u64,
) -> Result<StableIntersection> {
    let n = fs
        .first()
        .ok_or_else(|| Error::Precondition("no polynomials".into()))?
        .n_vars();
    if let Some(bad) = fs.iter().find(|f| f.n_vars() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.n_vars(),
        });
    }
    if fs.len() != n {
        return Err(Error::Precondition(format!(
            "stable intersection in R^{n} needs {n} polynomials, got {}",
            fs.len()
        )));
    }
    for retry in 0..RETRY_LIMIT {
        let shifts = small_rationals(fs, seed, retry, n * n);
        let moved: Vec<TropicalPolynomial> = fs
            .iter()
            .zip(shifts.chunks(n))
            .map(|(f, v)| f.add_linear(v))
            .collect();
        if let Some(points) = stable_attempt(fs, &moved)? {
            let total_weight = points.iter().map(|p| p.weight.clone()).sum();
            return Ok(StableIntersection {
                points,
                total_weight,
                retries: retry,
            });
        }
    }
    Err(Error::RetryLimit { limit: RETRY_LIMIT })
}

fn stable_attempt(
    fs: &[TropicalPolynomial],
    moved: &[TropicalPolynomial],
) -> Result<Option<Vec<WeightedPoint>>> {
    let n = fs.len();
    let (last, curve) = moved.split_last().expect("n >= 1");
    let Some(lines) = curve_lines(curve, n)? else {
        return Ok(None);
    };
    let mut grouped: BTreeMap<Vec<Rational>, Rational> = BTreeMap::new();
    for line in &lines {
        let Some(crossings) = crossings(line, last) else {
            return Ok(None);
        };
        for c in crossings {
            let mut ties = line.ties.clone();
            ties.push(vec![c.from, c.to]);
            let Some(sol) = tie_solution(fs, &ties) else {
                return Ok(None);
            };
            if !sol.directions.is_empty() {
                return Ok(None);
            }
            let x = sol.particular;
            for (f, pts) in fs.iter().zip(&ties) {
                let ev = f.evaluate(&x)?;
                if !pts.iter().all(|p| ev.argmax.contains(p)) {
                    return Ok(None);
                }
            }
            let weight = &line.weight * Rational::from_integer(c.slope_jump);
            *grouped.entry(x).or_insert_with(Rational::zero) += weight;
        }
    }
    Ok(Some(
        grouped
            .into_iter()
            .map(|(point, weight)| WeightedPoint { point, weight })
            .collect(),
    ))
}

/// The weighted edges of `X(g_1) ∩ ... ∩ X(g_{n-1})`, or `None` when the translated
/// hypersurfaces are not transversal.
fn curve_lines(gs: &[TropicalPolynomial], n: usize) -> Result<Option<Vec<CurveLine>>> {
    if gs.is_empty() {
        return Ok(Some(vec![CurveLine {
            base: vec![Rational::zero()],
            direction: vec![BigInt::one()],
            lower: None,
            upper: None,
            weight: Rational::one(),
            ties: Vec::new(),
        }]));
    }
    let s = privileged_subdivision(gs)?;
    if s.full_cells().any(|c| !c.is_transversal()) {
        return Ok(None);
    }
    let mut lines = Vec::new();
    for cell in s.cell_faces(n - 1).filter(|c| c.is_mixed()) {
        let sol = tie_solution(gs, &cell.summand_points)
            .ok_or_else(|| Error::InfeasibleCell("edge tie system is inconsistent".into()))?;
        if sol.directions.len() != 1 {
            return Ok(None);
        }
        let direction = clear_denominators(&sol.directions[0]);
        let base = sol.particular;
        let mut lower: Option<Rational> = None;
        let mut upper: Option<Rational> = None;
        for (g, pts) in gs.iter().zip(&cell.summand_points) {
            let anchor = &pts[0];
            let c0 = g.coefficient(anchor).expect("tie point is in the support");
            for (beta, c) in g.terms() {
                if pts.contains(beta) {
                    continue;
                }
                let diff: Vec<i64> = beta.iter().zip(anchor).map(|(a, b)| a - b).collect();
                let a = c - c0 + dot_rational(&diff, &base);
                let b = Rational::from_integer(dot_int(&diff, &direction));
                if b.is_zero() {
                    continue;
                }
                let bound = -a / &b;
                if b.is_positive() {
                    if upper.as_ref().is_none_or(|u| bound < *u) {
                        upper = Some(bound);
                    }
                } else if lower.as_ref().is_none_or(|l| bound > *l) {
                    lower = Some(bound);
                }
            }
        }
        let weight = relative_mixed_volume(&cell.summands, &cell.type_vector)?;
        lines.push(CurveLine {
            base,
            direction,
            lower,
            upper,
            weight,
            ties: cell.summand_points.clone(),
        });
    }
    Ok(Some(lines))
}

fn dot_rational(e: &[i64], x: &[Rational]) -> Rational {
    e.iter()
        .zip(x)
        .map(|(a, xi)| xi * Rational::from_integer((*a).into()))
        .sum()
}

fn dot_int(e: &[i64], d: &[BigInt]) -> BigInt {
    e.iter().zip(d).map(|(a, di)| di * a).sum()
}

/// Breakpoints of `g` restricted to the line, strictly inside its parameter interval.
/// `None` signals a non-generic position.
fn crossings(line: &CurveLine, g: &TropicalPolynomial) -> Option<Vec<Crossing>> {
    let terms: Vec<(Point, Rational, BigInt)> = g
        .terms()
        .iter()
        .map(|(beta, c)| {
            (
                beta.clone(),
                c + dot_rational(beta, &line.base),
                dot_int(beta, &line.direction),
            )
        })
        .collect();
    let value =
        |i: usize, t: &Rational| &terms[i].1 + t * Rational::from_integer(terms[i].2.clone());
    let mut current = match &line.lower {
        None => {
            let min_slope = terms.iter().map(|t| &t.2).min()?.clone();
            let candidates: Vec<usize> = (0..terms.len())
                .filter(|&i| terms[i].2 == min_slope)
                .collect();
            let best = candidates.iter().map(|&i| &terms[i].1).max()?.clone();
            let top: Vec<usize> = candidates
                .into_iter()
                .filter(|&i| terms[i].1 == best)
                .collect();
            if top.len() > 1 {
                return None;
            }
            top[0]
        }
        Some(lo) => {
            let best = (0..terms.len()).map(|i| value(i, lo)).max()?;
            let top: Vec<usize> = (0..terms.len()).filter(|&i| value(i, lo) == best).collect();
            if top.len() > 1 {
                return None;
            }
            top[0]
        }
    };
    let mut out = Vec::new();
    loop {
        let (a0, b0) = (&terms[current].1, &terms[current].2);
        let mut next: Option<(Rational, Vec<usize>)> = None;
        for (i, (_, a, b)) in terms.iter().enumerate() {
            if b <= b0 {
                continue;
            }
            let t = (a0 - a) / Rational::from_integer(b - b0);
            match &mut next {
                Some((best, idx)) if t == *best => idx.push(i),
                Some((best, _)) if t > *best => {}
                _ => next = Some((t, vec![i])),
            }
        }
        let Some((t, idx)) = next else {
            return Some(out);
        };
        if let Some(hi) = &line.upper {
            if t == *hi {
                return None;
            }
            if t > *hi {
                return Some(out);
            }
        }
        let max_slope = idx
            .iter()
            .map(|&i| &terms[i].2)
            .max()
            .expect("non-empty")
            .clone();
        let steepest: Vec<usize> = idx
            .into_iter()
            .filter(|&i| terms[i].2 == max_slope)
            .collect();
        if steepest.len() > 1 {
            return None;
        }
        let to = steepest[0];
        out.push(Crossing {
            slope_jump: &terms[to].2 - b0,
            from: terms[current].0.clone(),
            to: terms[to].0.clone(),
        });
        current = to;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{rat, ratio};
    use crate::polytope::simplex;
    use crate::random::smooth_polynomial;
    use crate::subdivision::generic_polynomials;

    fn polys(texts: &[&str], n: usize) -> Vec<TropicalPolynomial> {
        texts
            .iter()
            .map(|t| TropicalPolynomial::parse(t, n).unwrap())
            .collect()
    }

    fn generic(polytopes: &[LatticePolytope], seed: u64) -> Vec<TropicalPolynomial> {
        generic_polynomials(polytopes, seed).unwrap()
    }

    fn smooth(polytopes: &[LatticePolytope], seed: u64) -> Vec<TropicalPolynomial> {
        let fs: Vec<TropicalPolynomial> = polytopes
            .iter()
            .enumerate()
            .map(|(i, p)| smooth_polynomial(p, seed + i as u64).unwrap())
            .collect();
        let fs = crate::subdivision::perturb_lifts(&fs, seed).unwrap();
        assert!(fs.iter().all(smoothness_check));
        fs
    }

    #[test]
    fn two_segments_meet_in_one_point() {
        let c = intersection_complex(&polys(&["0+x", "0+y"], 2)).unwrap();
        assert_eq!(c.f_vector(), vec![1, 0, 0]);
        let a = c.cells_of_dim(0).next().unwrap();
        assert!(a.bounded);
        assert_eq!(a.multiplicity, rat(1));
    }

    #[test]
    fn single_line_is_its_own_intersection() {
        let c = intersection_complex(&polys(&["0+x+y"], 2)).unwrap();
        assert_eq!(c.f_vector(), vec![1, 3, 0]);
        assert!(c.cells_of_dim(1).all(|a| !a.bounded && a.faces == vec![0]));
    }

    #[test]
    fn two_planes_give_a_line() {
        let fs = generic(&[simplex(3, 1), simplex(3, 1)], 3);
        let g = curve_graph(&fs).unwrap();
        assert_eq!(
            (g.vertices.len(), g.bounded_edges.len(), g.rays.len()),
            (2, 1, 4)
        );
        assert!(g.is_three_valent() && g.has_unit_multiplicities());
        assert_eq!(f_vector_counts(&fs, 0).unwrap().cell_sum, rat(2));
        let edges = f_vector_counts(&fs, 1).unwrap();
        assert!(edges.equal);
        assert_eq!(edges.cell_sum, rat(5));
        let rays = unbounded_face_count(&fs, 1).unwrap();
        assert_eq!((rays.face_sum.clone(), rays.equal), (rat(4), true));
    }

    #[test]
    fn valence_matches_the_dual_two_face() {
        let fs = smooth(&[simplex(3, 2), simplex(3, 2)], 11);
        let s = privileged_subdivision(&fs).unwrap();
        let g = curve_graph(&fs).unwrap();
        for v in &g.vertices {
            let cell = s.cell(v.dual);
            let two = cell.type_vector.iter().position(|&d| d == 2).unwrap();
            assert_eq!(v.valence, cell.summands[two].polytope().f_vector()[1]);
        }
        assert_eq!(
            (g.vertices.len(), g.bounded_edges.len(), g.rays.len()),
            (16, 16, 16)
        );
    }

    #[test]
    fn multiplicity_of_a_long_edge() {
        let fs = polys(&["0+x^2", "0+y"], 2);
        let c = intersection_complex(&fs).unwrap();
        assert_eq!(c.weighted_count(0), rat(2));
        let s = privileged_subdivision(&fs).unwrap();
        let cell = s.full_cells().next().unwrap();
        assert_eq!(multiplicity(cell, false).unwrap(), rat(2));
    }

    #[test]
    fn non_transversal_multiplicity_sums_over_smaller_types() {
        let fs = polys(&["0+x+y", "0+x+y"], 2);
        let s = privileged_subdivision(&fs).unwrap();
        let big = s
            .full_cells()
            .find(|c| c.type_vector == vec![2, 2])
            .unwrap();
        assert!(multiplicity(big, true).is_err());
        assert_eq!(multiplicity(big, false).unwrap(), rat(3));
    }

    #[test]
    fn vertex_counts_of_simplex_curves() {
        assert_eq!(
            vertex_count_curve(&generic(&[simplex(3, 2), simplex(3, 2)], 1), 1).unwrap(),
            rat(16)
        );
        assert_eq!(
            vertex_count_curve(&generic(&[simplex(3, 1), simplex(3, 2)], 2), 2).unwrap(),
            rat(6)
        );
    }

    #[test]
    fn genus_of_simplex_curves() {
        let r = genus(&generic(&[simplex(3, 1), simplex(3, 1)], 4)).unwrap();
        assert_eq!(r.genus_formula_value, rat(0));
        assert_eq!(r.genus_graph_value, Some(0));
        assert!(r.is_exact);
        let r = genus(&generic(&[simplex(3, 2), simplex(3, 2)], 4)).unwrap();
        assert_eq!(
            (r.genus_formula_value, r.genus_graph_value, r.is_exact),
            (rat(1), Some(0), false)
        );
        let r = genus(&smooth(&[simplex(3, 2), simplex(3, 2)], 4)).unwrap();
        assert_eq!(
            (r.genus_formula_value, r.genus_graph_value, r.is_exact),
            (rat(1), Some(1), true)
        );
        assert!(genus(&polys(&["0+x"], 3)).is_err());
    }

    #[test]
    fn plane_cubic_has_genus_one() {
        let fs = smooth(&[simplex(2, 3)], 9);
        let r = genus(&fs).unwrap();
        assert_eq!(
            (r.genus_formula_value, r.genus_graph_value, r.is_exact),
            (rat(1), Some(1), true)
        );
    }

    #[test]
    fn smoothness_examples() {
        assert!(smoothness_check(&polys(&["0+x+y+z"], 3)[0]));
        assert!(!smoothness_check(&polys(&["0+x^2+y^2"], 2)[0]));
    }

    #[test]
    fn stable_intersections_of_lines() {
        let r = stable_intersection_points(&polys(&["0+x+y", "1+x+(-1)y"], 2), 0).unwrap();
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.total_weight, rat(1));
        let line = polys(&["0+x+y", "0+x+y"], 2);
        let r = stable_intersection_points(&line, 5).unwrap();
        assert_eq!(
            r.points,
            vec![WeightedPoint {
                point: vec![rat(0), rat(0)],
                weight: rat(1)
            }]
        );
        let r = stable_intersection_points(
            &polys(&["0+x^2+y^2+x+y+xy", "0+x^2+y^2+1x+(-1)y+xy"], 2),
            3,
        )
        .unwrap();
        assert_eq!(r.total_weight, rat(4));
        let r = stable_intersection_points(&polys(&["0+x^2"], 1), 3).unwrap();
        assert_eq!(
            r.points,
            vec![WeightedPoint {
                point: vec![ratio(0, 1)],
                weight: rat(2)
            }]
        );
    }
}
