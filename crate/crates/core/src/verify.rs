//! Seeded randomized checks of the counting identities, one suite per family.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::ehrhart::{
    genus_comparison, macdonald_check, mixed_ehrhart, mixed_ehrhart_predicted, pick_surface_check,
};
use crate::error::{Error, Result};
use crate::exact_math::{rational_serde, Rational};
use crate::intersection::{f_vector_counts, stable_intersection_points, unbounded_face_count};
use crate::mixed_volume::{mixed_volume_cells, mixed_volume_ie, MVQuery};
use crate::random::{random_polytopes, random_transversal_instance};
use crate::tropical::TropicalPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Bernstein,
    FVector,
    Unbounded,
    GenusEquality,
    MixedEhrhart,
    Pick,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Bernstein,
        Suite::FVector,
        Suite::Unbounded,
        Suite::GenusEquality,
        Suite::MixedEhrhart,
        Suite::Pick,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bernstein => "bernstein",
            Suite::FVector => "fvector",
            Suite::Unbounded => "unbounded",
            Suite::GenusEquality => "genus-equality",
            Suite::MixedEhrhart => "mixed-ehrhart",
            Suite::Pick => "pick",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite '{s}'")))
    }
}

/// One named quantity computed two or more ways.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Comparison {
    pub name: String,
    #[serde(with = "rational_serde::vec")]
    pub values: Vec<Rational>,
    pub equal: bool,
}

impl Comparison {
    pub fn new(name: impl Into<String>, values: Vec<Rational>) -> Self {
        let equal = values.windows(2).all(|w| w[0] == w[1]);
        Comparison {
            name: name.into(),
            values,
            equal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub trial: usize,
    pub seed: u64,
    pub input: Vec<String>,
    pub comparisons: Vec<Comparison>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub dim: usize,
    pub seed: u64,
    pub trials: Vec<TrialReport>,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Seed of trial `i` under a base seed.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(trial as u64)
}

pub fn run_suite(suite: Suite, trials: usize, seed: u64, dim: usize) -> Result<SuiteReport> {
    if !(2..=3).contains(&dim) {
        return Err(Error::Precondition(format!(
            "suites run in dimension 2 or 3, got {dim}"
        )));
    }
    let mut reports = Vec::with_capacity(trials);
    for trial in 0..trials {
        let s = trial_seed(seed, trial);
        let (input, comparisons) = run_trial(suite, dim, s)?;
        let passed = comparisons.iter().all(|c| c.equal);
        reports.push(TrialReport {
            trial,
            seed: s,
            input,
            comparisons,
            passed,
        });
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    Ok(SuiteReport {
        suite: suite.name().into(),
        dim,
        seed,
        failed: reports.len() - passed,
        passed,
        trials: reports,
    })
}

fn describe_polytopes(ps: &[crate::polytope::LatticePolytope]) -> Vec<String> {
    ps.iter().map(|p| format!("{:?}", p.vertices())).collect()
}

fn describe_polynomials(fs: &[TropicalPolynomial]) -> Vec<String> {
    fs.iter().map(ToString::to_string).collect()
}

fn run_trial(suite: Suite, n: usize, seed: u64) -> Result<(Vec<String>, Vec<Comparison>)> {
    Ok(match suite {
        Suite::Bernstein => {
            let ps = random_polytopes(n, n, seed);
            let q = MVQuery::each_once(ps.clone());
            let fs: Vec<TropicalPolynomial> = ps
                .iter()
                .map(|p| TropicalPolynomial::with_zero_coefficients(p.vertices()))
                .collect::<Result<_>>()?;
            let stable = stable_intersection_points(&fs, seed)?.total_weight;
            let values = vec![mixed_volume_ie(&q)?, mixed_volume_cells(&q, seed)?, stable];
            (
                describe_polytopes(&ps),
                vec![Comparison::new("mixed volume", values)],
            )
        }
        Suite::FVector => {
            let fs = random_transversal_instance(n, n - 1, seed)?;
            let mut out = Vec::new();
            for j in 0..=n {
                let c = f_vector_counts(&fs, j)?;
                let mut values = vec![c.cell_sum, c.type_sum];
                values.extend(c.mixed_volume_sum);
                out.push(Comparison::new(format!("weighted {j}-faces"), values));
            }
            (describe_polynomials(&fs), out)
        }
        Suite::Unbounded => {
            let fs = random_transversal_instance(n, n - 1, seed)?;
            let mut out = Vec::new();
            for j in 0..=n {
                let c = unbounded_face_count(&fs, j)?;
                out.push(Comparison::new(
                    format!("unbounded {j}-faces"),
                    vec![c.face_sum, c.cell_sum],
                ));
            }
            (describe_polynomials(&fs), out)
        }
        Suite::GenusEquality => {
            let ps = random_polytopes(n, n - 1, seed);
            let r = genus_comparison(&ps)?;
            (
                describe_polytopes(&ps),
                vec![Comparison::new("genus", vec![r.tropical, r.toric])],
            )
        }
        Suite::MixedEhrhart => {
            let ps = random_polytopes(n, n - 1, seed);
            let interpolated = mixed_ehrhart(&ps)?;
            let predicted = mixed_ehrhart_predicted(&ps)?;
            let out = interpolated
                .coeffs
                .iter()
                .zip(&predicted.coeffs)
                .enumerate()
                .map(|(r, (a, b))| Comparison::new(format!("me_{r}"), vec![a.clone(), b.clone()]))
                .collect();
            (describe_polytopes(&ps), out)
        }
        Suite::Pick => {
            let ps = random_polytopes(n, 1, seed);
            let pick = pick_surface_check(&ps[0])?;
            let mac = macdonald_check(&ps[0])?;
            let out = vec![
                Comparison::new("surface", vec![pick.lhs, pick.rhs]),
                Comparison::new("macdonald", vec![mac.lhs, mac.rhs]),
                Comparison::new("interior", vec![mac.interior_lhs, mac.interior_rhs]),
            ];
            (describe_polytopes(&ps), out)
        }
    })
}
