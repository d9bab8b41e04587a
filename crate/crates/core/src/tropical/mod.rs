//! Max-plus tropical polynomials.

mod parser;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

pub use parser::{ParseError, ParseErrorKind};

use crate::error::{Error, Result};
use crate::exact_math::{solve_affine, AffineSolution, Point, Rational};
use crate::polytope::{convex_hull, LatticePolytope};
use crate::subdivision::MixedCell;

/// A tropical (Laurent) polynomial `max_α (c_α + α·x)` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalPolynomial {
    n_vars: usize,
    terms: BTreeMap<Point, Rational>,
}

/// The value of a tropical polynomial at a point and the exponents attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: Rational,
    pub argmax: Vec<Point>,
}

/// Support points lifted by their coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedPointSet {
    pub points: Vec<(Point, Rational)>,
}

pub fn parse_tropical_polynomial(text: &str, n_vars: usize) -> Result<TropicalPolynomial> {
    TropicalPolynomial::parse(text, n_vars)
}

pub fn evaluate(f: &TropicalPolynomial, x: &[Rational]) -> Result<Evaluation> {
    f.evaluate(x)
}

pub fn newton_polytope(f: &TropicalPolynomial) -> LatticePolytope {
    f.newton_polytope()
}

impl TropicalPolynomial {
    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents combine by tropical addition.
    pub fn new<I>(n_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Point, Rational)>,
    {
        let mut map: BTreeMap<Point, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n_vars {
                return Err(Error::DimensionMismatch {
                    expected: n_vars,
                    found: e.len(),
                });
            }
            match map.get_mut(&e) {
                Some(old) if *old >= c => {}
                Some(old) => *old = c,
                None => {
                    map.insert(e, c);
                }
            }
        }
        if map.is_empty() {
            return Err(Error::Precondition(
                "a tropical polynomial needs at least one term".into(),
            ));
        }
        Ok(TropicalPolynomial { n_vars, terms: map })
    }

    pub fn parse(text: &str, n_vars: usize) -> Result<Self> {
        let terms = parser::parse_terms(text, n_vars)?;
        Ok(TropicalPolynomial { n_vars, terms })
    }

    /// Every point of `points` with coefficient zero.
    pub fn with_zero_coefficients(points: &[Point]) -> Result<Self> {
        let n = points.first().map(Vec::len).ok_or(Error::EmptyPointSet)?;
        Self::new(n, points.iter().map(|p| (p.clone(), Rational::zero())))
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &BTreeMap<Point, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn support(&self) -> Vec<Point> {
        self.terms.keys().cloned().collect()
    }

    pub fn coefficient(&self, exponent: &[i64]) -> Option<&Rational> {
        self.terms.get(exponent)
    }

    pub fn lifted_points(&self) -> LiftedPointSet {
        LiftedPointSet {
            points: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Evaluation> {
        if x.len() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                found: x.len(),
            });
        }
        let mut best: Option<Rational> = None;
        let mut argmax = Vec::new();
        for (e, c) in &self.terms {
            let v = term_value(e, c, x);
            match &best {
                Some(b) if v < *b => {}
                Some(b) if v == *b => argmax.push(e.clone()),
                _ => {
                    best = Some(v);
                    argmax = vec![e.clone()];
                }
            }
        }
        Ok(Evaluation {
            value: best.expect("at least one term"),
            argmax,
        })
    }

    pub fn newton_polytope(&self) -> LatticePolytope {
        convex_hull(&self.support()).expect("support is non-empty")
    }

    /// Tropical product: exponents add, coefficients add, ties take the max.
    pub fn tropical_product(&self, other: &Self) -> Result<Self> {
        if self.n_vars != other.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                found: other.n_vars,
            });
        }
        let mut out: BTreeMap<Point, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Point = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let c = ca + cb;
                match out.get_mut(&e) {
                    Some(old) if *old >= c => {}
                    Some(old) => *old = c,
                    None => {
                        out.insert(e, c);
                    }
                }
            }
        }
        Ok(TropicalPolynomial {
            n_vars: self.n_vars,
            terms: out,
        })
    }

    /// All coefficients negated, turning a min-plus reading into max-plus and back.
    pub fn negated(&self) -> Self {
        TropicalPolynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// `c_α + v·α`: the hypersurface moves by `-v`.
    pub fn add_linear(&self, v: &[Rational]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let shift: Rational = e
                    .iter()
                    .zip(v)
                    .map(|(a, b)| b * Rational::from_integer((*a).into()))
                    .sum();
                (e.clone(), c + shift)
            })
            .collect();
        TropicalPolynomial {
            n_vars: self.n_vars,
            terms,
        }
    }

    pub fn with_coefficients<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Point, &Rational) -> Rational,
    {
        TropicalPolynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), f(e, c)))
                .collect(),
        }
    }
}

/// Tropical product of a non-empty list.
pub fn product_all(fs: &[TropicalPolynomial]) -> Result<TropicalPolynomial> {
    let (first, rest) = fs
        .split_first()
        .ok_or_else(|| Error::Precondition("empty product".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, f| acc.tropical_product(f))
}

fn term_value(e: &[i64], c: &Rational, x: &[Rational]) -> Rational {
    let mut v = c.clone();
    for (a, xi) in e.iter().zip(x) {
        if *a != 0 {
            v += xi * Rational::from_integer((*a).into());
        }
    }
    v
}

const LETTERS: [char; 4] = ['x', 'y', 'z', 'w'];

impl fmt::Display for TropicalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.n_vars <= LETTERS.len();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let constant = e.iter().all(|&a| a == 0);
            if constant || !c.is_zero() {
                write!(f, "{}", parser::format_coefficient(c))?;
            }
            for (i, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if letters {
                    write!(f, "{}", LETTERS[i])?;
                } else {
                    write!(f, "x{}", i + 1)?;
                }
                if a != 1 {
                    write!(f, "^{a}")?;
                }
            }
        }
        Ok(())
    }
}

/// Points where every summand's monomials tie, as an affine solution set.
pub(crate) fn tie_solution(
    fs: &[TropicalPolynomial],
    summand_points: &[Vec<Point>],
) -> Option<AffineSolution> {
    let n = fs.first()?.n_vars;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (f, pts) in fs.iter().zip(summand_points) {
        let (first, rest) = pts.split_first()?;
        let c0 = &f.terms[first];
        for p in rest {
            rows.push(
                p.iter()
                    .zip(first)
                    .map(|(a, b)| Rational::from_integer((a - b).into()))
                    .collect(),
            );
            rhs.push(c0 - &f.terms[p]);
        }
    }
    solve_affine(&rows, &rhs, n)
}

/// The vertex of the union of hypersurfaces dual to a full-dimensional cell.
pub fn dual_vertex_coordinates(
    fs: &[TropicalPolynomial],
    cell: &MixedCell,
) -> Result<Vec<Rational>> {
    let n = fs
        .first()
        .map(|f| f.n_vars)
        .ok_or_else(|| Error::Precondition("no polynomials".into()))?;
    if cell.dim != n {
        return Err(Error::Precondition(format!(
            "cell has dimension {} but a vertex needs {n}",
            cell.dim
        )));
    }
    let sol = tie_solution(fs, &cell.summand_points)
        .ok_or_else(|| Error::InfeasibleCell("tie system is inconsistent".into()))?;
    if !sol.directions.is_empty() {
        return Err(Error::InfeasibleCell(
            "tie system is underdetermined".into(),
        ));
    }
    let x = sol.particular;
    for (f, pts) in fs.iter().zip(&cell.summand_points) {
        let ev = f.evaluate(&x)?;
        if !pts.iter().all(|p| ev.argmax.contains(p)) {
            return Err(Error::InfeasibleCell(
                "cell monomials are not maximal at the tie point".into(),
            ));
        }
    }
    Ok(x)
}

/// Whether `x` lies on the tropical hypersurface of `f`.
pub fn on_hypersurface(f: &TropicalPolynomial, x: &[Rational]) -> Result<bool> {
    Ok(f.evaluate(x)?.argmax.len() >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{rat, ratio};
    use crate::polytope::simplex;

    fn pentagon_f() -> TropicalPolynomial {
        TropicalPolynomial::parse("-62x + 97x^2 + -73y^2 + -4x^3y + -83x^2y^2 + -10y^4", 2).unwrap()
    }

    #[test]
    fn evaluate_line() {
        let f = TropicalPolynomial::parse("0+x+y", 2).unwrap();
        let ev = f.evaluate(&[rat(3), rat(5)]).unwrap();
        assert_eq!(ev.value, rat(5));
        assert_eq!(ev.argmax, vec![vec![0, 1]]);
        let ev = f.evaluate(&[rat(0), rat(0)]).unwrap();
        assert_eq!(ev.argmax.len(), 3);
        assert!(f.evaluate(&[rat(0)]).is_err());
    }

    #[test]
    fn evaluate_pentagon_polynomial() {
        let ev = pentagon_f().evaluate(&[rat(0), rat(0)]).unwrap();
        assert_eq!(ev.value, rat(97));
        assert_eq!(ev.argmax, vec![vec![2, 0]]);
    }

    #[test]
    fn newton_polytopes() {
        let f = TropicalPolynomial::parse("0+x+y", 2).unwrap();
        assert_eq!(f.newton_polytope(), simplex(2, 1));
        let p = pentagon_f().newton_polytope();
        assert_eq!(p.vertices().len(), 5);
        assert!(!p.vertices().contains(&vec![2, 2]));
        let mono = TropicalPolynomial::parse("3x^2y", 2).unwrap();
        assert_eq!(mono.newton_polytope().dim(), 0);
    }

    #[test]
    fn display_reparses() {
        for text in [
            "0+x+y+(-1)xy",
            "-62x + 97x^2 + -73y^2 + -4x^3y",
            "1/2 x^-1 + (-3/7)",
            "x1x5^2 + 4",
        ] {
            let n = if text.contains("x5") { 5 } else { 2 };
            let f = TropicalPolynomial::parse(text, n).unwrap();
            let g = TropicalPolynomial::parse(&f.to_string(), n).unwrap();
            assert_eq!(f, g, "{text} -> {f}");
        }
    }

    #[test]
    fn product_adds_newton_polytopes() {
        let f = TropicalPolynomial::parse("0+x", 2).unwrap();
        let g = TropicalPolynomial::parse("0+y", 2).unwrap();
        let h = f.tropical_product(&g).unwrap();
        assert_eq!(h.num_terms(), 4);
        assert_eq!(h.newton_polytope(), crate::polytope::cube(2, 1));
        let a = TropicalPolynomial::parse("1 + 2x", 1).unwrap();
        let sq = a.tropical_product(&a).unwrap();
        assert_eq!(sq.coefficient(&[1]), Some(&rat(3)));
    }

    #[test]
    fn add_linear_shifts_evaluation() {
        let f = TropicalPolynomial::parse("0+x+y", 2).unwrap();
        let g = f.add_linear(&[ratio(1, 2), rat(-1)]);
        assert_eq!(g.coefficient(&[1, 0]), Some(&ratio(1, 2)));
        assert_eq!(g.coefficient(&[0, 1]), Some(&rat(-1)));
    }
}
