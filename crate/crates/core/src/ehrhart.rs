//! Lattice point counts, Ehrhart and mixed Ehrhart polynomials, and the
//! identities relating them to mixed volumes.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_math::{binomial, factorial, rational_serde, solve_affine, Rational};
use crate::mixed_volume::{curve_mixed_volume, facet_mixed_volume_sum};
use crate::polytope::{minkowski_sum_all, LatticePolytope};

/// `|tP ∩ Z^n|`, with `B(0 · P) = 1`.
pub fn count_lattice_points(p: &LatticePolytope, t: u64) -> BigInt {
    p.count_dilate_points(t, false)
}

/// Interior lattice points of `tP`; zero for `t = 0` and for lower-dimensional `P`.
pub fn count_interior_lattice_points(p: &LatticePolytope, t: u64) -> BigInt {
    if t == 0 || !p.is_full_dimensional() {
        return BigInt::zero();
    }
    p.count_dilate_points(t, true)
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Coefficients `c_0..c_n` of the polynomial taking `values[t]` at `t = 0..n`.
fn interpolate(values: &[Rational]) -> Vec<Rational> {
    let m = values.len();
    let rows: Vec<Vec<Rational>> = (0..m)
        .map(|t| (0..m).map(|i| int(BigInt::from(t).pow(i as u32))).collect())
        .collect();
    solve_affine(&rows, values, m)
        .expect("Vandermonde systems are invertible")
        .particular
}

fn evaluate(coeffs: &[Rational], t: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * t + c)
}

/// `E_P(t) = Σ e_i t^i` with `E_P(t) = |tP ∩ Z^n|` for `t >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhrhartPolynomial {
    #[serde(with = "rational_serde::vec")]
    pub coeffs: Vec<Rational>,
}

impl EhrhartPolynomial {
    pub fn evaluate(&self, t: &Rational) -> Rational {
        evaluate(&self.coeffs, t)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

fn require_full(p: &LatticePolytope) -> Result<usize> {
    if !p.is_full_dimensional() {
        return Err(Error::Precondition(format!(
            "polytope of dimension {} in R^{} is not full-dimensional",
            p.dim(),
            p.ambient_dim()
        )));
    }
    Ok(p.ambient_dim())
}

/// Sum of the lattice volumes of the facets.
fn facet_lattice_volume(p: &LatticePolytope) -> Result<Rational> {
    let n = p.ambient_dim();
    if n == 0 {
        return Ok(Rational::zero());
    }
    Ok(p.faces(n - 1)?
        .iter()
        .map(|f| f.polytope().lattice_volume())
        .sum())
}

/// Interpolates `B(tP)` at `t = 0..n` and validates `e_0 = 1`, `e_n = vol(P)`,
/// `e_{n-1} = ½ Σ vol'(F)` and `B⁺(tP) = (-1)^n E_P(-t)` for `t = 1, 2`.
pub fn ehrhart_polynomial(p: &LatticePolytope) -> Result<EhrhartPolynomial> {
    let n = require_full(p)?;
    let values: Vec<Rational> = (0..=n as u64)
        .map(|t| int(count_lattice_points(p, t)))
        .collect();
    let e = EhrhartPolynomial {
        coeffs: interpolate(&values),
    };
    let fail = |what: String| Err(Error::IdentityFailure(what));
    if e.coeffs[0] != Rational::one() {
        return fail(format!("constant coefficient {} is not 1", e.coeffs[0]));
    }
    if e.coeffs[n] != p.euclidean_volume() {
        return fail(format!(
            "leading coefficient {} differs from the volume {}",
            e.coeffs[n],
            p.euclidean_volume()
        ));
    }
    if n >= 1 {
        let half_surface = facet_lattice_volume(p)? / int(2);
        if e.coeffs[n - 1] != half_surface {
            return fail(format!(
                "coefficient e_{} = {} differs from half the facet volume {half_surface}",
                n - 1,
                e.coeffs[n - 1]
            ));
        }
    }
    for t in 1..=2u64 {
        let interior = int(count_interior_lattice_points(p, t));
        let reciprocal = sign(n) * e.evaluate(&-int(t));
        if interior != reciprocal {
            return fail(format!("reciprocity at t = {t}: {interior} interior points but (-1)^n E(-t) = {reciprocal}"));
        }
    }
    Ok(e)
}

/// `ME(t) = Σ_{∅≠J} (-1)^{k-|J|} B(t Σ_{j∈J} P_j) = Σ me_r t^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedEhrhartPolynomial {
    #[serde(with = "rational_serde::vec")]
    pub coeffs: Vec<Rational>,
    pub k: usize,
}

impl MixedEhrhartPolynomial {
    pub fn evaluate(&self, t: &Rational) -> Rational {
        evaluate(&self.coeffs, t)
    }
}

fn require_family(polytopes: &[LatticePolytope]) -> Result<usize> {
    let n = polytopes.first().ok_or(Error::EmptyPointSet)?.ambient_dim();
    for p in polytopes {
        if p.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.ambient_dim(),
            });
        }
        require_full(p)?;
    }
    Ok(n)
}

/// `(sign, Σ_{j∈J} P_j)` for every non-empty `J ⊆ [k]`, with sign `(-1)^{k-|J|}`.
fn subset_sums(polytopes: &[LatticePolytope]) -> Result<Vec<(Rational, LatticePolytope)>> {
    let k = polytopes.len();
    (1u64..1 << k)
        .map(|mask| {
            let members: Vec<&LatticePolytope> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &polytopes[i])
                .collect();
            Ok((sign(k - members.len()), minkowski_sum_all(members)?))
        })
        .collect()
}

/// Interpolated mixed Ehrhart polynomial; checks `me_r = 0` for `1 <= r < k`.
pub fn mixed_ehrhart(polytopes: &[LatticePolytope]) -> Result<MixedEhrhartPolynomial> {
    let n = require_family(polytopes)?;
    let k = polytopes.len();
    let sums = subset_sums(polytopes)?;
    let values: Vec<Rational> = (0..=n as u64)
        .map(|t| {
            sums.iter()
                .map(|(s, q)| s * int(count_lattice_points(q, t)))
                .sum()
        })
        .collect();
    let coeffs = interpolate(&values);
    if let Some(r) = (1..k.min(n + 1)).find(|&r| !coeffs[r].is_zero()) {
        return Err(Error::IdentityFailure(format!(
            "mixed Ehrhart coefficient me_{r} = {} should vanish",
            coeffs[r]
        )));
    }
    Ok(MixedEhrhartPolynomial { coeffs, k })
}

/// Closed form for `k = n - 1`: `me_n = ½ MV_n(P_1, ..., P_{n-1}, ΣP_i)`,
/// `me_{n-1} = ½ Σ_v MV'_{n-1}((P_1)^v, ...)`, `me_0 = (-1)^n`, all others zero.
pub fn mixed_ehrhart_predicted(polytopes: &[LatticePolytope]) -> Result<MixedEhrhartPolynomial> {
    let n = require_family(polytopes)?;
    if polytopes.len() + 1 != n {
        return Err(Error::Precondition(format!(
            "expected {} polytopes in R^{n}, got {}",
            n - 1,
            polytopes.len()
        )));
    }
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[0] = sign(n);
    coeffs[n - 1] += facet_mixed_volume_sum(polytopes)? / int(2);
    coeffs[n] = curve_mixed_volume(polytopes)? / int(2);
    Ok(MixedEhrhartPolynomial { coeffs, k: n - 1 })
}

/// `Σ_{∅≠J} (-1)^{k-|J|} B⁺(Σ_{j∈J} P_j)`.
pub fn toric_genus(polytopes: &[LatticePolytope]) -> Result<Rational> {
    require_family(polytopes)?;
    Ok(subset_sums(polytopes)?
        .iter()
        .map(|(s, q)| s * int(count_interior_lattice_points(q, 1)))
        .sum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusComparison {
    /// `½ MV_n(P_1, ..., P_{n-1}, ΣP_i) - ½ Σ_v MV'_{n-1}((P_i)^v) + 1`.
    #[serde(with = "rational_serde")]
    pub tropical: Rational,
    #[serde(with = "rational_serde")]
    pub toric: Rational,
    #[serde(with = "rational_serde")]
    pub mixed_volume: Rational,
    #[serde(with = "rational_serde")]
    pub boundary_sum: Rational,
    pub equal: bool,
}

pub fn genus_comparison(polytopes: &[LatticePolytope]) -> Result<GenusComparison> {
    let n = require_family(polytopes)?;
    if polytopes.len() + 1 != n {
        return Err(Error::Precondition(format!(
            "expected {} polytopes in R^{n}, got {}",
            n - 1,
            polytopes.len()
        )));
    }
    let mixed_volume = curve_mixed_volume(polytopes)?;
    let boundary_sum = facet_mixed_volume_sum(polytopes)?;
    let tropical = (&mixed_volume - &boundary_sum) / int(2) + Rational::one();
    let toric = toric_genus(polytopes)?;
    let equal = tropical == toric;
    Ok(GenusComparison {
        tropical,
        toric,
        mixed_volume,
        boundary_sum,
        equal,
    })
}

/// `B(k ∂P)` for `k = 0..n-1`, with `B(0 ∂P) = 1 + (-1)^{n-1}`.
fn boundary_counts(p: &LatticePolytope) -> Vec<BigInt> {
    let n = p.ambient_dim();
    (0..n as u64)
        .map(|k| {
            if k == 0 {
                BigInt::from(if n % 2 == 1 { 2 } else { 0 })
            } else {
                count_lattice_points(p, k) - count_interior_lattice_points(p, k)
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PickSurfaceCheck {
    /// `Σ_F (n-1)! vol'(F)` over the facets.
    #[serde(with = "rational_serde")]
    pub lhs: Rational,
    /// `(-1)^{n-1} Σ_{k=0}^{n-1} (-1)^k C(n-1, k) B(k ∂P)`.
    #[serde(with = "rational_serde")]
    pub rhs: Rational,
    pub boundary_counts: Vec<String>,
    pub equal: bool,
}

pub fn pick_surface_check(p: &LatticePolytope) -> Result<PickSurfaceCheck> {
    let n = require_full(p)?;
    if n == 0 {
        return Err(Error::Precondition(
            "the boundary of a point is empty".into(),
        ));
    }
    let lhs = facet_lattice_volume(p)? * int(factorial(n - 1));
    let counts = boundary_counts(p);
    let sum: Rational = counts
        .iter()
        .enumerate()
        .map(|(k, b)| sign(k) * int(binomial(n - 1, k)) * int(b.clone()))
        .sum();
    let rhs = sign(n - 1) * sum;
    let equal = lhs == rhs;
    Ok(PickSurfaceCheck {
        lhs,
        rhs,
        boundary_counts: counts.iter().map(ToString::to_string).collect(),
        equal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacdonaldCheck {
    /// `(n-1)/2 · n! vol(P)`.
    #[serde(with = "rational_serde")]
    pub lhs: Rational,
    /// `Σ_{k=0}^{n-1} (-1)^{n-1-k} C(n-1, k) [B(kP) - ½ B(k ∂P)]`.
    #[serde(with = "rational_serde")]
    pub rhs: Rational,
    /// `(n-1)/2 · n! vol(P) - ½ Σ_F (n-1)! vol'(F) + 1`.
    #[serde(with = "rational_serde")]
    pub interior_lhs: Rational,
    /// `Σ_{k=1}^{n-1} (-1)^{n-1-k} C(n-1, k) B⁺(kP)`.
    #[serde(with = "rational_serde")]
    pub interior_rhs: Rational,
    pub equal: bool,
}

pub fn macdonald_check(p: &LatticePolytope) -> Result<MacdonaldCheck> {
    let n = require_full(p)?;
    if n == 0 {
        return Err(Error::Precondition(
            "the boundary of a point is empty".into(),
        ));
    }
    let normalized = p.euclidean_volume() * int(factorial(n));
    let lhs = &normalized * int(n as i64 - 1) / int(2);
    let counts = boundary_counts(p);
    let rhs: Rational = (0..n)
        .map(|k| {
            let closed = int(count_lattice_points(p, k as u64));
            sign(n - 1 - k) * int(binomial(n - 1, k)) * (closed - int(counts[k].clone()) / int(2))
        })
        .sum();
    let surface = facet_lattice_volume(p)? * int(factorial(n - 1));
    let interior_lhs = &lhs - surface / int(2) + Rational::one();
    let interior_rhs: Rational = (1..n)
        .map(|k| {
            sign(n - 1 - k)
                * int(binomial(n - 1, k))
                * int(count_interior_lattice_points(p, k as u64))
        })
        .sum();
    let equal = lhs == rhs && interior_lhs == interior_rhs;
    Ok(MacdonaldCheck {
        lhs,
        rhs,
        interior_lhs,
        interior_rhs,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{rat, ratio};
    use crate::polytope::{cube, simplex};

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn counts() {
        assert_eq!(count_lattice_points(&cube(2, 1), 1), BigInt::from(4));
        assert_eq!(count_lattice_points(&simplex(2, 1), 3), BigInt::from(10));
        assert_eq!(count_lattice_points(&simplex(3, 2), 0), BigInt::from(1));
        assert_eq!(
            count_interior_lattice_points(&cube(2, 1), 1),
            BigInt::from(0)
        );
        assert_eq!(
            count_interior_lattice_points(&cube(2, 1), 2),
            BigInt::from(1)
        );
        assert_eq!(
            count_interior_lattice_points(&simplex(2, 3), 1),
            BigInt::from(1)
        );
        assert_eq!(
            count_interior_lattice_points(&simplex(3, 4), 1),
            BigInt::from(1)
        );
        assert_eq!(
            count_interior_lattice_points(
                &simplex(3, 1)
                    .face_in_direction(&crate::exact_math::to_big(&[1, 1, 1]))
                    .unwrap()
                    .polytope(),
                1
            ),
            BigInt::from(0)
        );
    }

    #[test]
    fn ehrhart_examples() {
        assert_eq!(
            ehrhart_polynomial(&cube(3, 1)).unwrap().coeffs,
            rats(&[1, 3, 3, 1])
        );
        assert_eq!(
            ehrhart_polynomial(&simplex(2, 1)).unwrap().coeffs,
            vec![rat(1), ratio(3, 2), ratio(1, 2)]
        );
        assert!(ehrhart_polynomial(
            &simplex(3, 1)
                .face_in_direction(&crate::exact_math::to_big(&[1, 1, 1]))
                .unwrap()
                .polytope()
        )
        .is_err());
    }

    #[test]
    fn mixed_ehrhart_examples() {
        let d = simplex(3, 1);
        let c = cube(3, 1);
        assert_eq!(
            mixed_ehrhart(&[d.clone(), d.clone()]).unwrap().coeffs,
            rats(&[-1, 0, 2, 1])
        );
        assert_eq!(
            mixed_ehrhart(&[c.clone(), c.clone()]).unwrap().coeffs,
            rats(&[-1, 0, 6, 6])
        );
        assert_eq!(
            mixed_ehrhart_predicted(&[d.clone(), d]).unwrap().coeffs,
            rats(&[-1, 0, 2, 1])
        );
        assert_eq!(
            mixed_ehrhart_predicted(&[c.clone(), c]).unwrap().coeffs,
            rats(&[-1, 0, 6, 6])
        );
    }

    #[test]
    fn toric_genus_examples() {
        assert_eq!(toric_genus(&[simplex(2, 3)]).unwrap(), rat(1));
        assert_eq!(
            toric_genus(&[simplex(3, 1), simplex(3, 1)]).unwrap(),
            rat(0)
        );
        assert_eq!(
            toric_genus(&[simplex(3, 2), simplex(3, 2)]).unwrap(),
            rat(1)
        );
        for (p, g) in [(simplex(3, 1), 0), (simplex(3, 2), 1), (cube(3, 1), 1)] {
            let r = genus_comparison(&[p.clone(), p]).unwrap();
            assert!(r.equal);
            assert_eq!(r.toric, rat(g));
        }
    }

    #[test]
    fn pick_and_macdonald_examples() {
        let sq = pick_surface_check(&cube(2, 1)).unwrap();
        assert_eq!((sq.lhs, sq.rhs), (rat(4), rat(4)));
        let cu = pick_surface_check(&cube(3, 1)).unwrap();
        assert_eq!((cu.lhs, cu.rhs), (rat(12), rat(12)));
        assert!(pick_surface_check(&simplex(3, 2)).unwrap().equal);
        let sq = macdonald_check(&cube(2, 1)).unwrap();
        assert_eq!(
            (sq.lhs.clone(), sq.rhs.clone(), sq.equal),
            (rat(1), rat(1), true)
        );
        let cu = macdonald_check(&cube(3, 1)).unwrap();
        assert_eq!(
            (cu.lhs.clone(), cu.rhs.clone(), cu.equal),
            (rat(6), rat(6), true)
        );
        assert!(macdonald_check(&simplex(3, 1)).unwrap().equal);
    }
}
