//! Seeded generators for lattice polytopes with vertices in `[0, 3]^n` and
//! tropical polynomials on them.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{Error, Result};
use crate::exact_math::{rat, Point, Rational};
use crate::intersection::smoothness_check;
use crate::polytope::{convex_hull, LatticePolytope};
use crate::subdivision::{perturb_lifts, RETRY_LIMIT};
use crate::tropical::TropicalPolynomial;

pub const MAX_COORDINATE: i64 = 3;

pub fn rng(seed: u64) -> Xoshiro256StarStar {
    Xoshiro256StarStar::seed_from_u64(seed)
}

fn below(rng: &mut impl RngCore, bound: u64) -> u64 {
    rng.next_u64() % bound
}

fn random_point(rng: &mut impl RngCore, n: usize) -> Point {
    (0..n)
        .map(|_| below(rng, MAX_COORDINATE as u64 + 1) as i64)
        .collect()
}

/// A full-dimensional polytope spanned by `n + 1` to `n + 4` random points of `[0, 3]^n`.
pub fn random_polytope(rng: &mut impl RngCore, n: usize) -> LatticePolytope {
    loop {
        let count = n + 1 + below(rng, 4) as usize;
        let points: Vec<Point> = (0..count).map(|_| random_point(rng, n)).collect();
        let p = convex_hull(&points).expect("non-empty");
        if p.is_full_dimensional() {
            return p;
        }
    }
}

pub fn random_polytopes(n: usize, k: usize, seed: u64) -> Vec<LatticePolytope> {
    let mut r = rng(seed);
    (0..k).map(|_| random_polytope(&mut r, n)).collect()
}

/// Integer coefficients in `[-9, 9]` on the vertices of `p` and up to three further lattice points.
pub fn random_polynomial(rng: &mut impl RngCore, p: &LatticePolytope) -> TropicalPolynomial {
    let mut support: Vec<Point> = p.vertices().to_vec();
    let extra: Vec<Point> = p
        .lattice_points()
        .into_iter()
        .filter(|q| !support.contains(q))
        .collect();
    for _ in 0..3 {
        if extra.is_empty() {
            break;
        }
        let q = &extra[below(rng, extra.len() as u64) as usize];
        if !support.contains(q) {
            support.push(q.clone());
        }
    }
    let terms = support.into_iter().map(|q| {
        let c = below(rng, 19) as i64 - 9;
        (q, rat(c))
    });
    TropicalPolynomial::new(p.ambient_dim(), terms.collect::<Vec<_>>()).expect("non-empty support")
}

/// Random polynomials on random polytopes, perturbed until they meet transversally.
pub fn random_transversal_instance(
    n: usize,
    k: usize,
    seed: u64,
) -> Result<Vec<TropicalPolynomial>> {
    let mut r = rng(seed);
    let fs: Vec<TropicalPolynomial> = (0..k)
        .map(|_| {
            let p = random_polytope(&mut r, n);
            random_polynomial(&mut r, &p)
        })
        .collect();
    perturb_lifts(&fs, seed)
}

/// A polynomial supported on all lattice points of `p` whose subdivision is a
/// unimodular triangulation, found by perturbing the lift `-|α|^2`.
pub fn smooth_polynomial(p: &LatticePolytope, seed: u64) -> Result<TropicalPolynomial> {
    let points = p.lattice_points();
    let base = TropicalPolynomial::new(
        p.ambient_dim(),
        points.iter().map(|q| {
            (
                q.clone(),
                -Rational::from_integer(q.iter().map(|x| x * x).sum::<i64>().into()),
            )
        }),
    )?;
    for attempt in 0..RETRY_LIMIT as u64 {
        let f = perturb_lifts(
            std::slice::from_ref(&base),
            seed.wrapping_add(attempt << 32),
        )?
        .remove(0);
        if smoothness_check(&f) {
            return Ok(f);
        }
    }
    Err(Error::RetryLimit { limit: RETRY_LIMIT })
}
