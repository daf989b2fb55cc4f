//! Shuffle superalgebra elements: supersymmetric numerators over the implicit
//! adjacent-color denominator `Π (x_{i,r} - x_{i+1,r'})`.

mod membership;
mod pbw;
mod product;
mod relations;
pub(crate) mod words;

use std::fmt;

pub use membership::{check_membership, MembershipReport, WheelViolation};
pub use pbw::{pbw_element, pbw_word, psi_pbw_monomial, PbwChoice};
pub use product::{star, star_naive, star_naive_with, star_with, superbracket, Normalization};
pub use relations::{
    rank1_independence, verify_positive_relations, Rank1Report, RelationCheck, RelationReport,
};
pub use words::{Letter, PsiEvaluator, Word, WordExpr};

use crate::exactalg::{ExactAlgError, Monomial, Poly, Scalar, Var};
use crate::root_data::{DynkinDiagram, RootDataError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShuffleError {
    #[error("elements live on different diagrams ({0} vs {1})")]
    DiagramMismatch(String, String),
    #[error("cannot combine rational and trigonometric elements")]
    FlavorMismatch,
    #[error("degree mismatch: expected {expected:?}, got {got:?}")]
    DegreeMismatch { expected: Vec<usize>, got: Vec<usize> },
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("variable {var} is not allowed in an element of degree {degree:?}")]
    StrayVariable { var: Var, degree: Vec<usize> },
    #[error("negative mode {0} in the rational case")]
    NegativeMode(i64),
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Rational (`h`-deformed, additive ζ argument) or trigonometric
/// (`v`-deformed, multiplicative ζ argument, Laurent numerators).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Rational,
    Trig,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShuffleElement {
    diagram: DynkinDiagram,
    degree: Vec<usize>,
    numerator: Poly,
    flavor: Flavor,
}

impl ShuffleElement {
    /// Validates that the numerator only uses `h`/`v` and the x-variables
    /// allowed by `degree`.
    pub fn new(diagram: DynkinDiagram, degree: Vec<usize>, numerator: Poly, flavor: Flavor) -> Result<Self, ShuffleError> {
        if degree.len() != diagram.rank() {
            return Err(ShuffleError::ArityMismatch(format!(
                "degree has {} entries but the diagram has {} colors",
                degree.len(),
                diagram.rank()
            )));
        }
        for v in numerator.vars() {
            let ok = match v {
                Var::Hbar => flavor == Flavor::Rational,
                Var::V => flavor == Flavor::Trig,
                Var::X { color, slot } => {
                    let c = color as usize;
                    (1..=degree.len()).contains(&c) && (1..=degree[c - 1]).contains(&(slot as usize))
                }
                Var::Y { .. } => false,
            };
            if !ok {
                return Err(ShuffleError::StrayVariable { var: v, degree });
            }
        }
        if flavor == Flavor::Rational && !numerator.is_polynomial() {
            let var = numerator
                .terms()
                .flat_map(|(m, _)| m.iter().filter(|&(_, e)| e < 0).map(|(v, _)| v).collect::<Vec<_>>())
                .next()
                .unwrap_or(Var::Hbar);
            return Err(ExactAlgError::NegativeExponentOnNonLaurent { var }.into());
        }
        Ok(ShuffleElement { diagram, degree, numerator, flavor })
    }

    pub(crate) fn from_parts(diagram: DynkinDiagram, degree: Vec<usize>, numerator: Poly, flavor: Flavor) -> Self {
        ShuffleElement { diagram, degree, numerator, flavor }
    }

    pub fn zero(diagram: &DynkinDiagram, degree: Vec<usize>, flavor: Flavor) -> Self {
        ShuffleElement::from_parts(diagram.clone(), degree, Poly::zero(), flavor)
    }

    pub fn unit(diagram: &DynkinDiagram, flavor: Flavor) -> Self {
        ShuffleElement::from_parts(diagram.clone(), vec![0; diagram.rank()], Poly::one(), flavor)
    }

    /// `x_{i,1}^r` in degree `1_i`, the image of the generator of color `i`
    /// and mode `r`.
    pub fn generator(diagram: &DynkinDiagram, i: usize, r: i64, flavor: Flavor) -> Result<Self, ShuffleError> {
        diagram.check_color(i)?;
        if flavor == Flavor::Rational && r < 0 {
            return Err(ShuffleError::NegativeMode(r));
        }
        let mut degree = vec![0; diagram.rank()];
        degree[i - 1] = 1;
        let num = Poly::term(Scalar::one(), Monomial::var_pow(Var::x(i, 1), r as i32));
        Ok(ShuffleElement::from_parts(diagram.clone(), degree, num, flavor))
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn degree(&self) -> &[usize] {
        &self.degree
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn total_degree(&self) -> usize {
        self.degree.iter().sum()
    }

    /// `Σ k_i |α_i| mod 2`.
    pub fn parity(&self) -> u8 {
        let s: usize = self.diagram.colors().map(|i| self.degree[i - 1] * self.diagram.alpha_parity(i) as usize).sum();
        (s % 2) as u8
    }

    pub fn with_numerator(&self, numerator: Poly) -> Self {
        ShuffleElement { numerator, ..self.clone() }
    }

    pub(crate) fn check_compatible(&self, other: &ShuffleElement) -> Result<(), ShuffleError> {
        if self.diagram != other.diagram {
            return Err(ShuffleError::DiagramMismatch(self.diagram.to_string(), other.diagram.to_string()));
        }
        if self.flavor != other.flavor {
            return Err(ShuffleError::FlavorMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(ShuffleError::DegreeMismatch { expected: self.degree.clone(), got: other.degree.clone() });
        }
        Ok(self.with_numerator(&self.numerator + &other.numerator))
    }

    pub fn sub(&self, other: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
        self.add(&other.scale(&Poly::int(-1)))
    }

    /// Multiplies by a coefficient in `Q[h]` (rational) or `Q[v, v^-1]` (trig).
    pub fn scale(&self, c: &Poly) -> ShuffleElement {
        self.with_numerator(&self.numerator * c)
    }

    /// Multiplies the numerator by a symmetric polynomial in the variables of
    /// color `i`, given in terms of `x_{i,1}, ..., x_{i,k_i}`.
    pub fn mult_symfun(&self, i: usize, q: &Poly) -> Result<ShuffleElement, ShuffleError> {
        self.diagram.check_color(i)?;
        let k = self.degree[i - 1];
        for v in q.vars() {
            match v {
                Var::X { color, slot } if color as usize == i && (1..=k).contains(&(slot as usize)) => {}
                Var::Hbar | Var::V => {}
                _ => return Err(ShuffleError::ArityMismatch(format!("{v} is not one of x{i}_1..x{i}_{k}"))),
            }
        }
        for a in 1..k {
            if q.rename(|v| swap_slots(v, i, a, a + 1)) != *q {
                return Err(ShuffleError::ArityMismatch(format!("polynomial is not symmetric in color {i}")));
            }
        }
        Ok(self.with_numerator(&self.numerator * q))
    }

    /// Symmetric in each even color, skew-symmetric in each odd color.
    pub fn is_supersymmetric(&self) -> bool {
        self.diagram.colors().all(|i| {
            let sign = if self.diagram.is_odd(i) { -1 } else { 1 };
            (1..self.degree[i - 1]).all(|a| {
                let swapped = self.numerator.rename(|v| swap_slots(v, i, a, a + 1));
                swapped == self.numerator.scale(&Scalar::from_int(sign))
            })
        })
    }
}

pub(crate) fn swap_slots(v: Var, color: usize, a: usize, b: usize) -> Var {
    match v {
        Var::X { color: c, slot } if c as usize == color => {
            let s = slot as usize;
            let t = if s == a {
                b
            } else if s == b {
                a
            } else {
                s
            };
            Var::x(color, t)
        }
        other => other,
    }
}

impl fmt::Display for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {:?}] {}", self.diagram, self.degree, self.numerator)
    }
}

impl fmt::Debug for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
