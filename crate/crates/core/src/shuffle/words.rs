use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::{star_with, Flavor, Normalization, ShuffleElement, ShuffleError};
use crate::exactalg::{Monomial, Poly, Scalar, Var};
use crate::root_data::DynkinDiagram;

/// `(color, mode)`.
pub type Letter = (usize, i64);
pub type Word = Vec<Letter>;

/// A finite linear combination of generator words with coefficients in
/// `Q[h]` or `Q[v, v^-1]`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct WordExpr {
    terms: BTreeMap<Word, Poly>,
}

impl WordExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn letter(i: usize, r: i64) -> Self {
        WordExpr::word(vec![(i, r)])
    }

    pub fn word(w: Word) -> Self {
        WordExpr { terms: BTreeMap::from([(w, Poly::one())]) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Poly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, c: &Poly) {
        let e = self.terms.entry(w).or_default();
        *e = &*e + c;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn scale(&self, c: &Poly) -> WordExpr {
        let mut out = WordExpr::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &(a * c));
        }
        out
    }

    pub fn plus(&self, other: &WordExpr) -> WordExpr {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn minus(&self, other: &WordExpr) -> WordExpr {
        self.plus(&other.scale(&Poly::int(-1)))
    }

    /// Concatenation product.
    pub fn times(&self, other: &WordExpr) -> WordExpr {
        let mut out = WordExpr::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &(ca * cb));
            }
        }
        out
    }

    /// Parity of the (homogeneous) expression; zero counts as even.
    pub fn parity(&self, d: &DynkinDiagram) -> u8 {
        self.terms.keys().next().map_or(0, |w| (w.iter().map(|&(i, _)| d.alpha_parity(i) as usize).sum::<usize>() % 2) as u8)
    }

    /// Color degree of the (homogeneous) expression.
    pub fn color_degree(&self, d: &DynkinDiagram) -> Vec<usize> {
        let mut k = vec![0; d.rank()];
        if let Some(w) = self.terms.keys().next() {
            for &(i, _) in w {
                k[i - 1] += 1;
            }
        }
        k
    }

    /// `ab - (-1)^{|a||b|} x ba`.
    pub fn bracket_with(d: &DynkinDiagram, a: &WordExpr, b: &WordExpr, x: &Poly) -> WordExpr {
        let sign = if a.parity(d) * b.parity(d) == 1 { -1 } else { 1 };
        a.times(b).minus(&b.times(a).scale(&x.scale(&Scalar::from_int(sign))))
    }

    /// Supercommutator `[a, b]`.
    pub fn bracket(d: &DynkinDiagram, a: &WordExpr, b: &WordExpr) -> WordExpr {
        WordExpr::bracket_with(d, a, b, &Poly::one())
    }

    /// Superanticommutator `{a, b} = ab + (-1)^{|a||b|} ba`.
    pub fn anti_bracket(d: &DynkinDiagram, a: &WordExpr, b: &WordExpr) -> WordExpr {
        WordExpr::bracket_with(d, a, b, &Poly::int(-1))
    }

    /// `[a, b]_x` with `x = v^e`.
    pub fn v_bracket(d: &DynkinDiagram, a: &WordExpr, b: &WordExpr, e: i64) -> WordExpr {
        WordExpr::bracket_with(d, a, b, &v_pow(e))
    }

    /// `[[a, b]] = ab - (-1)^{|a||b|} v^{(a,b)} ba` with
    /// `(a, b) = Σ k_i l_j c_ij`.
    pub fn q_bracket(d: &DynkinDiagram, a: &WordExpr, b: &WordExpr) -> WordExpr {
        let (k, l) = (a.color_degree(d), b.color_degree(d));
        let mut pairing = 0i64;
        for i in d.colors() {
            for j in d.colors() {
                pairing += (k[i - 1] * l[j - 1]) as i64 * d.cartan(i, j);
            }
        }
        WordExpr::v_bracket(d, a, b, pairing)
    }
}

pub fn v_pow(e: i64) -> Poly {
    Poly::term(Scalar::one(), Monomial::var_pow(Var::V, e as i32))
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, r) in w {
                write!(f, " e{i}[{r}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Evaluates Ψ on words as left-to-right shuffle products, memoizing every
/// prefix.
pub struct PsiEvaluator {
    diagram: DynkinDiagram,
    flavor: Flavor,
    norm: Normalization,
    cache: HashMap<Word, ShuffleElement>,
}

impl PsiEvaluator {
    pub fn new(diagram: &DynkinDiagram, flavor: Flavor) -> Self {
        PsiEvaluator::with_normalization(diagram, flavor, Normalization::CosetSum)
    }

    pub fn with_normalization(diagram: &DynkinDiagram, flavor: Flavor, norm: Normalization) -> Self {
        PsiEvaluator { diagram: diagram.clone(), flavor, norm, cache: HashMap::new() }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn word(&mut self, w: &[Letter]) -> Result<ShuffleElement, ShuffleError> {
        if w.is_empty() {
            return Ok(ShuffleElement::unit(&self.diagram, self.flavor));
        }
        if let Some(e) = self.cache.get(w) {
            return Ok(e.clone());
        }
        let (i, r) = w[w.len() - 1];
        let last = ShuffleElement::generator(&self.diagram, i, r, self.flavor)?;
        let out = if w.len() == 1 {
            last
        } else {
            let prefix = self.word(&w[..w.len() - 1])?;
            star_with(&prefix, &last, self.norm)?
        };
        self.cache.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    pub fn eval(&mut self, e: &WordExpr) -> Result<ShuffleElement, ShuffleError> {
        let mut acc: Option<ShuffleElement> = None;
        for (w, c) in e.terms() {
            let term = self.word(w)?.scale(c);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
        }
        Ok(acc.unwrap_or_else(|| ShuffleElement::zero(&self.diagram, vec![0; self.diagram.rank()], self.flavor)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shuffle::star;

    #[test]
    fn brackets_of_letters() {
        let d: DynkinDiagram = "01".parse().unwrap();
        let a = WordExpr::letter(1, 0);
        let b = WordExpr::letter(1, 1);
        let br = WordExpr::bracket(&d, &a, &b);
        // both odd: [a,b] = ab + ba
        assert_eq!(br.terms().count(), 2);
        assert!(br.terms().all(|(_, c)| c.is_one()));
        assert!(WordExpr::bracket(&"00".parse().unwrap(), &a, &a).is_zero());
    }

    #[test]
    fn psi_is_multiplicative() {
        let d: DynkinDiagram = "010".parse().unwrap();
        let mut ev = PsiEvaluator::new(&d, Flavor::Rational);
        let w1: Word = vec![(1, 1), (2, 0)];
        let w2: Word = vec![(2, 2)];
        let whole: Word = w1.iter().chain(&w2).copied().collect();
        let lhs = ev.word(&whole).unwrap();
        let rhs = star(&ev.word(&w1).unwrap(), &ev.word(&w2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(ev.word(&[]).unwrap(), ShuffleElement::unit(&d, Flavor::Rational));
    }

    #[test]
    fn adjacent_pair_on_010() {
        let d: DynkinDiagram = "010".parse().unwrap();
        let mut ev = PsiEvaluator::new(&d, Flavor::Rational);
        let f = ev.word(&[(1, 0), (2, 0)]).unwrap();
        assert_eq!(f.degree(), &[1, 1]);
        // ζ_12(z) = (z + h/2)/z with c_12 = 1
        assert_eq!(f.numerator(), &"x1_1 - x2_1 + 1/2*h".parse::<Poly>().unwrap());
    }
}
