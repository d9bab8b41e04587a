//! Mixed volumes by polarization, by mixed cells, and relative to a sublattice.
//!
//! Normalization: `MV(P, ..., P) = n! vol(P)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{binomial, factorial, IntVector, Point, Rational, SublatticeChart};
use crate::polytope::{convex_hull, minkowski_sum_all, LatticePolytope, PFace};
use crate::subdivision::{generic_polynomials, privileged_subdivision};

/// `MV(P_1, d_1; ...; P_k, d_k)`: polytope `P_i` repeated `d_i` times.
#[derive(Clone, Debug)]
pub struct MVQuery {
    pub polytopes: Vec<LatticePolytope>,
    pub multiplicities: Vec<usize>,
}

impl MVQuery {
    pub fn new(polytopes: Vec<LatticePolytope>, multiplicities: Vec<usize>) -> Self {
        MVQuery {
            polytopes,
            multiplicities,
        }
    }

    /// Each polytope taken once.
    pub fn each_once(polytopes: Vec<LatticePolytope>) -> Self {
        let k = polytopes.len();
        MVQuery {
            polytopes,
            multiplicities: vec![1; k],
        }
    }

    fn validate(&self) -> Result<usize> {
        if self.polytopes.len() != self.multiplicities.len() {
            return Err(Error::DimensionMismatch {
                expected: self.polytopes.len(),
                found: self.multiplicities.len(),
            });
        }
        let n = self
            .polytopes
            .first()
            .ok_or(Error::EmptyPointSet)?
            .ambient_dim();
        if let Some(bad) = self.polytopes.iter().find(|p| p.ambient_dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.ambient_dim(),
            });
        }
        let sum: usize = self.multiplicities.iter().sum();
        if sum != n {
            return Err(Error::MultiplicitySum { sum, expected: n });
        }
        Ok(n)
    }

    /// The non-trivial slots only.
    fn active(&self) -> (Vec<&LatticePolytope>, Vec<usize>) {
        self.polytopes
            .iter()
            .zip(&self.multiplicities)
            .filter(|(_, &d)| d > 0)
            .map(|(p, &d)| (p, d))
            .unzip()
    }
}

/// `Σ_{0 <= s <= d, s != 0} Π C(d_i, s_i) (-1)^{n - |s|} vol(Σ s_i P_i)`.
pub fn mixed_volume_ie(q: &MVQuery) -> Result<Rational> {
    let n = q.validate()?;
    let (polys, mults) = q.active();
    Ok(polarize(&polys, &mults, n))
}

fn polarize(polys: &[&LatticePolytope], mults: &[usize], n: usize) -> Rational {
    let mut total = Rational::zero();
    let mut s = vec![0usize; mults.len()];
    let mut cache: HashMap<Vec<usize>, Rational> = HashMap::new();
    loop {
        let mut i = 0;
        while i < s.len() {
            s[i] += 1;
            if s[i] <= mults[i] {
                break;
            }
            s[i] = 0;
            i += 1;
        }
        if i == s.len() {
            return total;
        }
        let weight: BigInt = s
            .iter()
            .zip(mults)
            .map(|(&si, &di)| binomial(di, si))
            .product();
        let size: usize = s.iter().sum();
        let vol = cache
            .entry(s.clone())
            .or_insert_with(|| {
                let parts: Vec<LatticePolytope> = polys
                    .iter()
                    .zip(&s)
                    .filter(|(_, &si)| si > 0)
                    .map(|(p, &si)| p.dilate(si as i64))
                    .collect();
                minkowski_sum_all(&parts)
                    .expect("same ambient dimension")
                    .euclidean_volume()
            })
            .clone();
        let term = vol * Rational::from_integer(weight);
        if (n - size) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
}

/// `Σ d_1! ... d_k! vol(C)` over full cells of type `d` in a perturbed subdivision.
pub fn mixed_volume_cells(q: &MVQuery, seed: u64) -> Result<Rational> {
    let n = q.validate()?;
    let (polys, mults) = q.active();
    let owned: Vec<LatticePolytope> = polys.into_iter().cloned().collect();
    let sum = minkowski_sum_all(&owned)?;
    if !sum.is_full_dimensional() {
        return Ok(Rational::zero());
    }
    let fs = generic_polynomials(&owned, seed)?;
    let s = privileged_subdivision(&fs)?;
    let weight: BigInt = mults.iter().map(|&d| factorial(d)).product();
    let weight = Rational::from_integer(weight);
    Ok(s.cell_faces(n)
        .filter(|c| c.type_vector == mults)
        .map(|c| c.cell_polytope.euclidean_volume() * &weight)
        .sum())
}

/// `MV_n(P_1, ..., P_n)`, the generic number of intersection points.
pub fn bernstein_count(polytopes: &[LatticePolytope]) -> Result<Rational> {
    let n = polytopes.first().ok_or(Error::EmptyPointSet)?.ambient_dim();
    if polytopes.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: polytopes.len(),
        });
    }
    mixed_volume_ie(&MVQuery::each_once(polytopes.to_vec()))
}

/// Mixed volume of faces measured in the lattice `span(F_1, ..., F_k) ∩ Z^n`.
///
/// Faces with multiplicity zero are ignored. The spanned lattice must have
/// rank `Σ d_i`.
pub fn relative_mixed_volume(faces: &[PFace], multiplicities: &[usize]) -> Result<Rational> {
    if faces.len() != multiplicities.len() {
        return Err(Error::DimensionMismatch {
            expected: faces.len(),
            found: multiplicities.len(),
        });
    }
    let polys: Vec<LatticePolytope> = faces.iter().map(PFace::polytope).collect();
    relative_mixed_volume_of(&polys, multiplicities)
}

pub(crate) fn relative_mixed_volume_of(
    polys: &[LatticePolytope],
    multiplicities: &[usize],
) -> Result<Rational> {
    let expected: usize = multiplicities.iter().sum();
    let active: Vec<(&LatticePolytope, usize)> = polys
        .iter()
        .zip(multiplicities)
        .filter(|(_, &d)| d > 0)
        .map(|(p, &d)| (p, d))
        .collect();
    if active.is_empty() {
        return Ok(Rational::one());
    }
    let n = active[0].0.ambient_dim();
    let dirs: Vec<IntVector> = active
        .iter()
        .flat_map(|(p, _)| {
            let base = &p.vertices()[0];
            p.vertices().iter().map(move |v| {
                v.iter()
                    .zip(base)
                    .map(|(a, b)| BigInt::from(a - b))
                    .collect()
            })
        })
        .collect();
    let chart = SublatticeChart::from_directions(vec![0; n], &dirs);
    if chart.dim() != expected {
        return Err(Error::RankDeficient {
            rank: chart.dim(),
            expected,
        });
    }
    let local: Vec<LatticePolytope> = active
        .iter()
        .map(|(p, _)| {
            let base = &p.vertices()[0];
            let pts: Vec<Point> = p
                .vertices()
                .iter()
                .map(|v| {
                    let d: IntVector = v
                        .iter()
                        .zip(base)
                        .map(|(a, b)| BigInt::from(a - b))
                        .collect();
                    let y = chart
                        .direction_coords(&d)
                        .expect("face directions lie in the joint lattice");
                    crate::polytope::point_from_big(&y)
                })
                .collect();
            convex_hull(&pts).expect("non-empty")
        })
        .collect();
    let refs: Vec<&LatticePolytope> = local.iter().collect();
    let mults: Vec<usize> = active.iter().map(|(_, d)| *d).collect();
    Ok(polarize(&refs, &mults, expected))
}

/// `MV_n(P_1, ..., P_{n-1}, P_1 + ... + P_{n-1})`.
pub fn curve_mixed_volume(polytopes: &[LatticePolytope]) -> Result<Rational> {
    let mut all = polytopes.to_vec();
    all.push(minkowski_sum_all(polytopes)?);
    mixed_volume_ie(&MVQuery::each_once(all))
}

/// `Σ_v MV'_{n-1}((P_1)^v, ..., (P_{n-1})^v)` over the facets of `P_1 + ... + P_{n-1}`,
/// with rank-deficient terms counted as zero.
pub fn facet_mixed_volume_sum(polytopes: &[LatticePolytope]) -> Result<Rational> {
    let total = minkowski_sum_all(polytopes)?;
    let n = total.ambient_dim();
    if polytopes.len() + 1 != n {
        return Err(Error::Precondition(format!(
            "expected {} polytopes in R^{n}, got {}",
            n - 1,
            polytopes.len()
        )));
    }
    if !total.is_full_dimensional() {
        return Ok(Rational::zero());
    }
    let mut sum = Rational::zero();
    for facet in total.faces(n - 1)? {
        let parts: Vec<LatticePolytope> = polytopes
            .iter()
            .map(|p| p.face_in_direction(&facet.normal).map(|f| f.polytope()))
            .collect::<Result<_>>()?;
        match relative_mixed_volume_of(&parts, &vec![1; n - 1]) {
            Ok(v) => sum += v,
            Err(Error::RankDeficient { .. }) => {}
            Err(err) => return Err(err),
        }
    }
    Ok(sum)
}

/// All vectors `e` with `lo <= e <= hi` componentwise and `Σ e = total`.
pub(crate) fn compositions(lo: &[usize], hi: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn rec(
        i: usize,
        lo: &[usize],
        hi: &[usize],
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == lo.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in lo[i]..=hi[i].min(left) {
            cur.push(e);
            rec(i + 1, lo, hi, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, lo, hi, total, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{rat, to_big};
    use crate::polytope::{cube, simplex};

    fn seg(a: &[i64], b: &[i64]) -> LatticePolytope {
        convex_hull(&[a.to_vec(), b.to_vec()]).unwrap()
    }

    #[test]
    fn polarization_examples() {
        let d2 = simplex(2, 1);
        assert_eq!(
            mixed_volume_ie(&MVQuery::new(vec![d2.clone()], vec![2])).unwrap(),
            rat(1)
        );
        assert_eq!(
            mixed_volume_ie(&MVQuery::each_once(vec![d2.clone(), d2])).unwrap(),
            rat(1)
        );
        let sq = MVQuery::each_once(vec![seg(&[0, 0], &[1, 0]), seg(&[0, 0], &[0, 1])]);
        assert_eq!(mixed_volume_ie(&sq).unwrap(), rat(1));
        let q = MVQuery::new(vec![simplex(3, 1), simplex(3, 2)], vec![2, 1]);
        assert_eq!(mixed_volume_ie(&q).unwrap(), rat(2));
        assert!(matches!(
            mixed_volume_ie(&MVQuery::new(vec![simplex(3, 1)], vec![2])),
            Err(Error::MultiplicitySum {
                sum: 2,
                expected: 3
            })
        ));
    }

    #[test]
    fn cell_sums_match_polarization() {
        let d3 = simplex(3, 1);
        let q = MVQuery::new(vec![d3], vec![3]);
        assert_eq!(mixed_volume_cells(&q, 1).unwrap(), rat(1));
        let q = MVQuery::new(vec![simplex(3, 2), simplex(3, 2)], vec![2, 1]);
        assert_eq!(mixed_volume_cells(&q, 5).unwrap(), rat(8));
        let q = MVQuery::new(vec![cube(3, 1), simplex(3, 2)], vec![1, 2]);
        assert_eq!(
            mixed_volume_cells(&q, 2).unwrap(),
            mixed_volume_ie(&q).unwrap()
        );
    }

    #[test]
    fn bernstein_examples() {
        assert_eq!(
            bernstein_count(&[simplex(2, 1), simplex(2, 1)]).unwrap(),
            rat(1)
        );
        assert_eq!(
            bernstein_count(&[simplex(2, 2), simplex(2, 2)]).unwrap(),
            rat(4)
        );
        let d3 = simplex(3, 1);
        assert_eq!(
            bernstein_count(&[d3.clone(), d3.clone(), d3]).unwrap(),
            rat(1)
        );
        assert!(bernstein_count(&[simplex(2, 1)]).is_err());
    }

    #[test]
    fn relative_examples() {
        let facet = simplex(3, 1)
            .face_in_direction(&to_big(&[1, 1, 1]))
            .unwrap();
        assert_eq!(
            relative_mixed_volume(&[facet.clone(), facet], &[1, 1]).unwrap(),
            rat(1)
        );
        let e1 = PFace {
            vertices: vec![vec![0, 0, 0], vec![1, 0, 0]],
            dim: 1,
            normal: to_big(&[0, 1, 0]),
        };
        let e2 = PFace {
            vertices: vec![vec![0, 0, 0], vec![0, 1, 0]],
            dim: 1,
            normal: to_big(&[1, 0, 0]),
        };
        assert_eq!(
            relative_mixed_volume(&[e1.clone(), e2], &[1, 1]).unwrap(),
            rat(1)
        );
        let long = PFace {
            vertices: vec![vec![0, 0], vec![2, 0]],
            dim: 1,
            normal: to_big(&[1, 0]),
        };
        assert_eq!(relative_mixed_volume(&[long], &[1]).unwrap(), rat(2));
        assert!(matches!(
            relative_mixed_volume(&[e1.clone(), e1], &[1, 1]),
            Err(Error::RankDeficient {
                rank: 1,
                expected: 2
            })
        ));
    }

    #[test]
    fn compositions_respect_bounds() {
        assert_eq!(
            compositions(&[1, 1], &[3, 3], 3),
            vec![vec![1, 2], vec![2, 1]]
        );
        assert_eq!(
            compositions(&[0, 0, 0], &[1, 0, 2], 2),
            vec![vec![0, 0, 2], vec![1, 0, 1]]
        );
        assert!(compositions(&[1, 1], &[1, 1], 3).is_empty());
    }

    #[test]
    fn curve_quantities_of_simplices() {
        let d = simplex(3, 1);
        assert_eq!(curve_mixed_volume(&[d.clone(), d.clone()]).unwrap(), rat(2));
        assert_eq!(facet_mixed_volume_sum(&[d.clone(), d]).unwrap(), rat(4));
        let c = cube(3, 1);
        assert_eq!(
            curve_mixed_volume(&[c.clone(), c.clone()]).unwrap(),
            rat(12)
        );
        assert_eq!(facet_mixed_volume_sum(&[c.clone(), c]).unwrap(), rat(12));
    }

    #[test]
    fn diagonal_segments_use_the_saturated_lattice() {
        let a = seg(&[0, 0], &[1, 1]);
        let b = seg(&[0, 0], &[1, -1]);
        assert_eq!(
            relative_mixed_volume_of(&[a.clone(), b.clone()], &[1, 1]).unwrap(),
            rat(2)
        );
        assert_eq!(
            mixed_volume_ie(&MVQuery::each_once(vec![a, b])).unwrap(),
            rat(2)
        );
    }
}
