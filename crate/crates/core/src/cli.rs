//! Command-line front end. Every verb prints JSON except `draw`, which prints SVG.
//!
//! Exit status: 0 on success, 1 on a domain or input error, 2 when an
//! identity check fails.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::ehrhart::{
    ehrhart_polynomial, genus_comparison, macdonald_check, mixed_ehrhart, mixed_ehrhart_predicted,
    pick_surface_check, toric_genus, MacdonaldCheck, PickSurfaceCheck,
};
use crate::error::{Error, Result};
use crate::exact_math::{rational_serde, Rational};
use crate::intersection::{
    f_vector_counts, genus, intersection_complex, stable_intersection_points, unbounded_face_count,
    FVectorCount, GenusReport, StableIntersection, UnboundedCount,
};
use crate::mixed_volume::{mixed_volume_cells, mixed_volume_ie, MVQuery};
use crate::polytope::{LatticePolytope, PolytopeJson};
use crate::subdivision::{perturb_lifts, privileged_subdivision, SubdivisionJson};
use crate::svg::{plane_curve, render_curve_svg, Viewport};
use crate::tropical::TropicalPolynomial;
use crate::verify::{run_suite, Suite, SuiteReport};

#[derive(Debug, Parser)]
#[command(
    name = "tropint",
    version,
    about = "Exact combinatorics of tropical hypersurface intersections"
)]
pub struct Cli {
    /// Seed for perturbations and random instances.
    #[arg(long, global = true, env = "TROPINT_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Read polynomials in the min-plus convention.
    #[arg(long, global = true)]
    pub min_plus: bool,
    /// Write the output here instead of stdout.
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PolynomialArgs {
    /// A polynomial, or a file containing one. Repeat for several.
    #[arg(short = 'f', long = "poly", required = true)]
    pub polys: Vec<String>,
    /// Number of variables; inferred from the variable names when omitted.
    #[arg(short = 'n', long)]
    pub vars: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PolytopeArgs {
    /// A polytope JSON file `{"dim": n, "vertices": [[...], ...]}`. Repeat for several.
    #[arg(short = 'p', long = "polytope")]
    pub polytopes: Vec<PathBuf>,
    /// A polynomial (or file) whose Newton polytope is used. Repeat for several.
    #[arg(short = 'f', long = "poly")]
    pub polys: Vec<String>,
    /// Number of variables for `-f` inputs.
    #[arg(short = 'n', long)]
    pub vars: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Newton polytope of a polynomial.
    Newton(PolynomialArgs),
    /// Privileged subdivision and intersection complex.
    Subdivision {
        #[command(flatten)]
        input: PolynomialArgs,
        /// Perturb the coefficients (seeded) before subdividing.
        #[arg(long)]
        perturb: bool,
    },
    /// Mixed volume by polarization and by mixed cells.
    MixedVolume {
        #[command(flatten)]
        input: PolytopeArgs,
        /// Multiplicity of each polytope; defaults to all ones.
        #[arg(short = 'm', long = "mult", value_delimiter = ',')]
        multiplicities: Vec<usize>,
    },
    /// Weighted j-face counts of the intersection, both ways.
    Fvector(CountArgs),
    /// Weighted unbounded j-face counts, both ways.
    Unbounded(CountArgs),
    /// Genus of an intersection curve of n-1 hypersurfaces.
    Genus {
        #[command(flatten)]
        input: PolynomialArgs,
        /// Use the coefficients as given instead of a seeded generic perturbation.
        #[arg(long)]
        exact: bool,
    },
    /// Alternating sum of interior lattice points over sub-sums.
    ToricGenus(PolytopeArgs),
    /// Ehrhart polynomial with its coefficient identities checked.
    Ehrhart(PolytopeArgs),
    /// Mixed Ehrhart polynomial, and its closed form when k = n - 1.
    MixedEhrhart(PolytopeArgs),
    /// Randomized identity checks.
    Verify {
        /// One of bernstein, fvector, unbounded, genus-equality, mixed-ehrhart, pick.
        #[arg(long)]
        suite: String,
        /// Number of random instances.
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Ambient dimension of the instances, 2 or 3.
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Stable intersection points of n hypersurfaces in R^n.
    StablePoints(PolynomialArgs),
    /// SVG drawing of a plane tropical curve.
    Draw {
        #[command(flatten)]
        input: PolynomialArgs,
        /// `xmin,ymin,xmax,ymax`; fitted to the vertices when omitted.
        #[arg(long, allow_hyphen_values = true)]
        viewport: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub input: PolynomialArgs,
    /// Face dimension; all dimensions when omitted.
    #[arg(short = 'j', long)]
    pub j: Option<usize>,
    /// Use the coefficients as given instead of a seeded generic perturbation.
    #[arg(long)]
    pub exact: bool,
}

/// Runs the CLI on `args` and returns the exit status.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(Output { text, failed }) => {
            let written = match &cli.out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))
                }
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 1;
            }
            if failed {
                2
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::IdentityFailure(_) => 2,
                _ => 1,
            }
        }
    }
}

struct Output {
    text: String,
    failed: bool,
}

fn json_output<T: Serialize>(value: &T, failed: bool) -> Result<Output> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(Output { text, failed })
}

fn read_text(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))
    } else {
        Ok(arg.to_string())
    }
}

/// Highest variable index used in `text`, counting `x, y, z, w` as 1..4.
fn infer_vars(text: &str) -> usize {
    let chars: Vec<char> = text.chars().collect();
    let mut n = 1;
    let mut i = 0;
    while i < chars.len() {
        match chars[i] {
            'x' if chars.get(i + 1).is_some_and(|c| c.is_ascii_digit()) => {
                let digits: String = chars[i + 1..]
                    .iter()
                    .take_while(|c| c.is_ascii_digit())
                    .collect();
                n = n.max(digits.parse().unwrap_or(1));
                i += digits.len();
            }
            'x' => n = n.max(1),
            'y' => n = n.max(2),
            'z' => n = n.max(3),
            'w' => n = n.max(4),
            _ => {}
        }
        i += 1;
    }
    n
}

fn read_polynomials(
    args: &[String],
    vars: Option<usize>,
    min_plus: bool,
) -> Result<Vec<TropicalPolynomial>> {
    let texts: Vec<String> = args.iter().map(|a| read_text(a)).collect::<Result<_>>()?;
    let n = vars.unwrap_or_else(|| texts.iter().map(|t| infer_vars(t)).max().unwrap_or(1));
    texts
        .iter()
        .map(|t| {
            let f = TropicalPolynomial::parse(t.trim(), n)?;
            Ok(if min_plus { f.negated() } else { f })
        })
        .collect()
}

fn read_polytopes(args: &PolytopeArgs, min_plus: bool) -> Result<Vec<LatticePolytope>> {
    let mut out: Vec<LatticePolytope> = args
        .polytopes
        .iter()
        .map(|path| {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
            LatticePolytope::from_json_str(&text)
        })
        .collect::<Result<_>>()?;
    if !args.polys.is_empty() {
        out.extend(
            read_polynomials(&args.polys, args.vars, min_plus)?
                .iter()
                .map(TropicalPolynomial::newton_polytope),
        );
    }
    if out.is_empty() {
        return Err(Error::Precondition(
            "no input: pass -p FILE or -f POLYNOMIAL".into(),
        ));
    }
    Ok(out)
}

fn strings(fs: &[TropicalPolynomial]) -> Vec<String> {
    fs.iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
struct NewtonOutput {
    polynomial: String,
    dim: usize,
    polytope: PolytopeJson,
    f_vector: Vec<usize>,
    #[serde(with = "rational_serde")]
    volume: Rational,
    #[serde(with = "rational_serde")]
    lattice_volume: Rational,
}

#[derive(Serialize)]
struct SubdivisionOutput {
    polynomials: Vec<String>,
    perturbed: bool,
    subdivision: SubdivisionJson,
    intersection: crate::intersection::IntersectionJson,
}

#[derive(Serialize)]
struct MixedVolumeOutput {
    multiplicities: Vec<usize>,
    #[serde(with = "rational_serde")]
    polarization: Rational,
    #[serde(with = "rational_serde")]
    cells: Rational,
    equal: bool,
}

#[derive(Serialize)]
struct CountOutput<T> {
    polynomials: Vec<String>,
    perturbed: bool,
    counts: Vec<T>,
    equal: bool,
}

#[derive(Serialize)]
struct GenusOutput {
    polynomials: Vec<String>,
    perturbed: bool,
    #[serde(with = "rational_serde")]
    genus: Rational,
    report: GenusReport,
}

#[derive(Serialize)]
struct ToricGenusOutput {
    #[serde(with = "rational_serde")]
    toric_genus: Rational,
    comparison: Option<crate::ehrhart::GenusComparison>,
}

#[derive(Serialize)]
struct EhrhartOutput {
    polytopes: Vec<EhrhartEntry>,
}

#[derive(Serialize)]
struct EhrhartEntry {
    polytope: PolytopeJson,
    #[serde(with = "rational_serde::vec")]
    coeffs: Vec<Rational>,
    pick: PickSurfaceCheck,
    macdonald: MacdonaldCheck,
}

#[derive(Serialize)]
struct MixedEhrhartOutput {
    k: usize,
    #[serde(with = "rational_serde::vec")]
    coeffs: Vec<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", with = "optional_vec")]
    predicted: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equal: Option<bool>,
}

mod optional_vec {
    use serde::Serializer;

    use crate::exact_math::{rational_serde, Rational};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => rational_serde::vec::serialize(v, s),
            None => s.serialize_none(),
        }
    }
}

#[derive(Serialize)]
struct StableOutput {
    polynomials: Vec<String>,
    min_plus: bool,
    #[serde(flatten)]
    result: StableIntersection,
}

fn generic_or_exact(
    fs: Vec<TropicalPolynomial>,
    exact: bool,
    seed: u64,
) -> Result<(Vec<TropicalPolynomial>, bool)> {
    if exact {
        Ok((fs, false))
    } else {
        Ok((perturb_lifts(&fs, seed)?, true))
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let seed = cli.seed;
    let polys = |a: &PolynomialArgs| read_polynomials(&a.polys, a.vars, cli.min_plus);
    match &cli.command {
        Command::Newton(input) => {
            let fs = polys(input)?;
            if fs.len() != 1 {
                return Err(Error::Precondition(
                    "newton takes exactly one polynomial".into(),
                ));
            }
            let p = fs[0].newton_polytope();
            json_output(
                &NewtonOutput {
                    polynomial: fs[0].to_string(),
                    dim: p.dim(),
                    polytope: p.to_json(),
                    f_vector: p.f_vector(),
                    volume: p.euclidean_volume(),
                    lattice_volume: p.lattice_volume(),
                },
                false,
            )
        }
        Command::Subdivision { input, perturb } => {
            let (fs, perturbed) = generic_or_exact(polys(input)?, !perturb, seed)?;
            let s = privileged_subdivision(&fs)?;
            let intersection = intersection_complex(&fs)?.to_json();
            json_output(
                &SubdivisionOutput {
                    polynomials: strings(&fs),
                    perturbed,
                    subdivision: s.to_json(),
                    intersection,
                },
                false,
            )
        }
        Command::MixedVolume {
            input,
            multiplicities,
        } => {
            let ps = read_polytopes(input, cli.min_plus)?;
            let mults = if multiplicities.is_empty() {
                vec![1; ps.len()]
            } else {
                multiplicities.clone()
            };
            let q = MVQuery::new(ps, mults.clone());
            let polarization = mixed_volume_ie(&q)?;
            let cells = mixed_volume_cells(&q, seed)?;
            let equal = polarization == cells;
            json_output(
                &MixedVolumeOutput {
                    multiplicities: mults,
                    polarization,
                    cells,
                    equal,
                },
                !equal,
            )
        }
        Command::Fvector(args) => {
            let (fs, perturbed) = generic_or_exact(polys(&args.input)?, args.exact, seed)?;
            let n = fs[0].n_vars();
            let js: Vec<usize> = args.j.map_or_else(|| (0..=n).collect(), |j| vec![j]);
            let counts: Vec<FVectorCount> = js
                .iter()
                .map(|&j| f_vector_counts(&fs, j))
                .collect::<Result<_>>()?;
            let equal = counts.iter().all(|c| c.equal);
            json_output(
                &CountOutput {
                    polynomials: strings(&fs),
                    perturbed,
                    counts,
                    equal,
                },
                !equal,
            )
        }
        Command::Unbounded(args) => {
            let (fs, perturbed) = generic_or_exact(polys(&args.input)?, args.exact, seed)?;
            let n = fs[0].n_vars();
            let js: Vec<usize> = args.j.map_or_else(|| (0..=n).collect(), |j| vec![j]);
            let counts: Vec<UnboundedCount> = js
                .iter()
                .map(|&j| unbounded_face_count(&fs, j))
                .collect::<Result<_>>()?;
            let equal = counts.iter().all(|c| c.equal);
            json_output(
                &CountOutput {
                    polynomials: strings(&fs),
                    perturbed,
                    counts,
                    equal,
                },
                !equal,
            )
        }
        Command::Genus { input, exact } => {
            let (fs, perturbed) = generic_or_exact(polys(input)?, *exact, seed)?;
            let report = genus(&fs)?;
            let failed = report.is_exact
                && report
                    .genus_graph_value
                    .map(|g| Rational::from_integer(g.into()))
                    != Some(report.genus_formula_value.clone());
            json_output(
                &GenusOutput {
                    polynomials: strings(&fs),
                    perturbed,
                    genus: report.genus_formula_value.clone(),
                    report,
                },
                failed,
            )
        }
        Command::ToricGenus(input) => {
            let ps = read_polytopes(input, cli.min_plus)?;
            let n = ps[0].ambient_dim();
            let comparison = if ps.len() + 1 == n {
                Some(genus_comparison(&ps)?)
            } else {
                None
            };
            let failed = comparison.as_ref().is_some_and(|c| !c.equal);
            json_output(
                &ToricGenusOutput {
                    toric_genus: toric_genus(&ps)?,
                    comparison,
                },
                failed,
            )
        }
        Command::Ehrhart(input) => {
            let ps = read_polytopes(input, cli.min_plus)?;
            let polytopes: Vec<EhrhartEntry> = ps
                .iter()
                .map(|p| {
                    Ok(EhrhartEntry {
                        polytope: p.to_json(),
                        coeffs: ehrhart_polynomial(p)?.coeffs,
                        pick: pick_surface_check(p)?,
                        macdonald: macdonald_check(p)?,
                    })
                })
                .collect::<Result<_>>()?;
            let failed = polytopes
                .iter()
                .any(|e| !e.pick.equal || !e.macdonald.equal);
            json_output(&EhrhartOutput { polytopes }, failed)
        }
        Command::MixedEhrhart(input) => {
            let ps = read_polytopes(input, cli.min_plus)?;
            let me = mixed_ehrhart(&ps)?;
            let predicted = if ps.len() + 1 == ps[0].ambient_dim() {
                Some(mixed_ehrhart_predicted(&ps)?.coeffs)
            } else {
                None
            };
            let equal = predicted.as_ref().map(|p| *p == me.coeffs);
            json_output(
                &MixedEhrhartOutput {
                    k: me.k,
                    coeffs: me.coeffs,
                    predicted,
                    equal,
                },
                equal == Some(false),
            )
        }
        Command::Verify { suite, trials, dim } => {
            let suite: Suite = suite.parse()?;
            let report: SuiteReport = run_suite(suite, *trials, seed, *dim)?;
            let failed = !report.all_passed();
            json_output(&report, failed)
        }
        Command::StablePoints(input) => {
            let fs = polys(input)?;
            let mut result = stable_intersection_points(&fs, seed)?;
            if cli.min_plus {
                for p in &mut result.points {
                    p.point.iter_mut().for_each(|x| *x = -x.clone());
                }
                result.points.sort();
            }
            let shown = if cli.min_plus {
                fs.iter().map(TropicalPolynomial::negated).collect()
            } else {
                fs
            };
            json_output(
                &StableOutput {
                    polynomials: strings(&shown),
                    min_plus: cli.min_plus,
                    result,
                },
                false,
            )
        }
        Command::Draw { input, viewport } => {
            let fs = polys(input)?;
            if fs.len() != 1 {
                return Err(Error::Precondition(
                    "draw takes exactly one polynomial".into(),
                ));
            }
            let mut curve = plane_curve(&fs[0])?;
            if cli.min_plus {
                curve = curve.reflected();
            }
            let vp = viewport
                .as_deref()
                .map(str::parse::<Viewport>)
                .transpose()?;
            Ok(Output {
                text: render_curve_svg(&curve, vp),
                failed: false,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_inference() {
        assert_eq!(infer_vars("0+x+y+z"), 3);
        assert_eq!(infer_vars("0 + x7"), 7);
        assert_eq!(infer_vars("3"), 1);
        assert_eq!(infer_vars("x^2 + w"), 4);
    }
}
