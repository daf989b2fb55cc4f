use super::{star, PsiEvaluator, ShuffleElement, ShuffleError, WordExpr};
use crate::root_data::{PBWMonomial, Root, RootDataError};

/// Where the mode of a root vector sits in its left-nested bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PbwChoice {
    /// `[...[[x_{j,r}, x_{j+1,0}], x_{j+2,0}], ..., x_{i,0}]`.
    #[default]
    ModeFirst,
    /// `[...[[x_{j,0}, x_{j+1,0}], ...], x_{i,r}]`.
    ModeLast,
}

/// The left-nested bracket defining the root vector `x_{β,r}`.
pub fn pbw_word(ev: &PsiEvaluator, b: Root, r: u32, choice: PbwChoice) -> WordExpr {
    let d = ev.diagram();
    let mode = |k: usize| match choice {
        PbwChoice::ModeFirst if k == b.j => r as i64,
        PbwChoice::ModeLast if k == b.i => r as i64,
        _ => 0,
    };
    let mut e = WordExpr::letter(b.j, mode(b.j));
    for k in b.j + 1..=b.i {
        e = WordExpr::bracket(d, &e, &WordExpr::letter(k, mode(k)));
    }
    e
}

pub fn pbw_element(ev: &mut PsiEvaluator, b: Root, r: u32, choice: PbwChoice) -> Result<ShuffleElement, ShuffleError> {
    ev.diagram().check_color(b.i)?;
    let w = pbw_word(ev, b, r, choice);
    ev.eval(&w)
}

/// Ψ of the ordered PBW monomial: the product of root vectors in the double
/// order.
pub fn psi_pbw_monomial(ev: &mut PsiEvaluator, h: &PBWMonomial, choice: PbwChoice) -> Result<ShuffleElement, ShuffleError> {
    h.validate(ev.diagram()).map_err(|e: RootDataError| ShuffleError::RootData(e))?;
    let mut acc = ShuffleElement::unit(ev.diagram(), ev.flavor());
    for (b, r) in h.factors() {
        let f = pbw_element(ev, b, r, choice)?;
        acc = star(&acc, &f)?;
    }
    Ok(acc)
}
