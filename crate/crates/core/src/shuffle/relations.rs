use std::collections::BTreeSet;
use std::fmt;

use super::{Flavor, PsiEvaluator, ShuffleElement, ShuffleError, WordExpr};
use crate::exactalg::{solve_linear, Monomial, Poly, Scalar};
use crate::root_data::DynkinDiagram;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: String,
    pub instance: String,
    pub pass: bool,
    /// Canonical text of the nonzero image (truncated) when the check fails.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn families(&self) -> BTreeSet<&str> {
        self.checks.iter().map(|c| c.family.as_str()).collect()
    }

    pub(crate) fn record_zero(&mut self, family: &str, instance: String, image: &ShuffleElement) {
        self.record(family, instance, image.is_zero(), || image.numerator().to_string());
    }

    pub(crate) fn record(&mut self, family: &str, instance: String, pass: bool, witness: impl FnOnce() -> String) {
        let witness = (!pass).then(|| {
            let mut w = witness();
            if w.len() > 240 {
                w.truncate(240);
                w.push_str("...");
            }
            w
        });
        self.checks.push(RelationCheck { family: family.to_string(), instance, pass, witness });
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fails = self.failures().count();
        write!(f, "{} checks, {} failures", self.checks.len(), fails)
    }
}

fn l(i: usize, r: i64) -> WordExpr {
    WordExpr::letter(i, r)
}

/// `Q_j(r; k, l; s)`.
pub(crate) fn quartic_q(d: &DynkinDiagram, j: usize, r: i64, k: i64, lm: i64, s: i64) -> WordExpr {
    let br = |a: &WordExpr, b: &WordExpr| WordExpr::bracket(d, a, b);
    let left = |m: i64| br(&l(j - 1, r), &l(j, m));
    let right = |m: i64| br(&l(j, m), &l(j + 1, s));
    br(&left(k), &right(lm)).plus(&br(&left(lm), &right(k)))
}

/// Ψ-images of the defining relations of the positive half of the super
/// Yangian, for all modes in `0..=max_mode`.
///
/// Families: `commute` (`[x_{i,r}, x_{j,s}] = 0` when `c_ij = 0`),
/// `quadratic` (`[x_{i,r+1}, x_{j,s}] - [x_{i,r}, x_{j,s+1}] = (c_ij h / 2)
/// {x_{i,r}, x_{j,s}}` unless `i = j` is odd), `cubic_serre` (`j = i ± 1`,
/// `α_i` even), `quartic_serre` and `quartic_serre_generalized` (`α_j` odd
/// between even neighbours), their `*_other_parities` counterparts, and
/// `higher_serre_symfun` (the generalized quartic image equals the `k = l = 0`
/// image times `x_{j,1}^k x_{j,2}^l + x_{j,1}^l x_{j,2}^k`).
pub fn verify_positive_relations(d: &DynkinDiagram, max_mode: u32) -> Result<RelationReport, ShuffleError> {
    let mut ev = PsiEvaluator::new(d, Flavor::Rational);
    let mut rep = RelationReport::default();
    let rmax = max_mode as i64;
    let modes = || 0..=rmax;
    let br = |a: &WordExpr, b: &WordExpr| WordExpr::bracket(d, a, b);
    for i in d.colors() {
        for j in d.colors() {
            let c = d.cartan(i, j);
            for r in modes() {
                for s in modes() {
                    if c == 0 {
                        let e = br(&l(i, r), &l(j, s));
                        rep.record_zero("commute", format!("i={i} j={j} r={r} s={s}"), &ev.eval(&e)?);
                    }
                    if i == j && d.is_odd(i) {
                        continue;
                    }
                    let lhs = br(&l(i, r + 1), &l(j, s)).minus(&br(&l(i, r), &l(j, s + 1)));
                    let coeff = Poly::hbar().scale(&Scalar::new(c, 2));
                    let rhs = WordExpr::anti_bracket(d, &l(i, r), &l(j, s)).scale(&coeff);
                    rep.record_zero("quadratic", format!("i={i} j={j} r={r} s={s}"), &ev.eval(&lhs.minus(&rhs))?);
                }
            }
        }
    }
    for i in d.colors() {
        for j in [i.wrapping_sub(1), i + 1] {
            if !(1..=d.rank()).contains(&j) {
                continue;
            }
            let family = if d.is_odd(i) { "cubic_serre_other_parities" } else { "cubic_serre" };
            for r in modes() {
                for s in modes() {
                    for t in modes() {
                        let e = br(&l(i, r), &br(&l(i, s), &l(j, t))).plus(&br(&l(i, s), &br(&l(i, r), &l(j, t))));
                        rep.record_zero(family, format!("i={i} j={j} r={r} s={s} t={t}"), &ev.eval(&e)?);
                    }
                }
            }
        }
    }
    for j in 2..d.rank() {
        let standard = d.is_odd(j) && !d.is_odd(j - 1) && !d.is_odd(j + 1);
        let suffix = if standard { "" } else { "_other_parities" };
        for r in modes() {
            for s in modes() {
                let e = br(&br(&l(j - 1, r), &l(j, 0)), &br(&l(j, 0), &l(j + 1, s)));
                rep.record_zero(&format!("quartic_serre{suffix}"), format!("j={j} r={r} s={s}"), &ev.eval(&e)?);
                let base = ev.eval(&quartic_q(d, j, r, 0, 0, s))?;
                for k in modes() {
                    for lm in modes() {
                        let q = ev.eval(&quartic_q(d, j, r, k, lm, s))?;
                        let inst = format!("j={j} r={r} k={k} l={lm} s={s}");
                        rep.record_zero(&format!("quartic_serre_generalized{suffix}"), inst.clone(), &q);
                        if standard {
                            let sym = symmetric_pair(j, k, lm);
                            let scaled = base.mult_symfun(j, &sym)?;
                            rep.record("higher_serre_symfun", inst, scaled == q, || {
                                format!("lhs {} vs rhs {}", q.numerator(), scaled.numerator())
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// `x_{j,1}^k x_{j,2}^l + x_{j,1}^l x_{j,2}^k`.
pub(crate) fn symmetric_pair(j: usize, k: i64, l: i64) -> Poly {
    use crate::exactalg::Var;
    let m = |a: i64, b: i64| {
        Poly::term(Scalar::one(), Monomial::from_pairs([(Var::x(j, 1), a as i32), (Var::x(j, 2), b as i32)]))
    };
    &m(k, l) + &m(l, k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank1Report {
    pub parities: [u8; 2],
    /// Mode lists whose product vanishes.
    pub zero_products: Vec<Vec<u32>>,
    /// Mode lists whose products were tested for independence.
    pub tested: Vec<Vec<u32>>,
    /// Rank over the fraction field of `Q[h]`.
    pub rank: usize,
    pub full_rank: bool,
}

/// Rank of `{x^{r_1} * ... * x^{r_k}}` over `Q(h)` in the single-color
/// case; lists whose product vanishes are set aside.
pub fn rank1_independence(parities: [u8; 2], lists: &[Vec<u32>]) -> Result<Rank1Report, ShuffleError> {
    let d = DynkinDiagram::new(parities.to_vec())?;
    let mut ev = PsiEvaluator::new(&d, Flavor::Rational);
    let mut zero_products = Vec::new();
    let mut tested = Vec::new();
    let mut by_len: std::collections::BTreeMap<usize, Vec<Poly>> = Default::default();
    for list in lists {
        let w: Vec<(usize, i64)> = list.iter().map(|&r| (1, r as i64)).collect();
        let f = ev.word(&w)?;
        if f.is_zero() {
            zero_products.push(list.clone());
        } else {
            tested.push(list.clone());
            by_len.entry(list.len()).or_default().push(f.numerator().clone());
        }
    }
    // products of different lengths live in disjoint variable sets
    let mut rank = 0;
    for vecs in by_len.values() {
        let cols: BTreeSet<Monomial> = vecs
            .iter()
            .flat_map(|p| p.terms().map(|(m, _)| m.split(|v| v.is_x()).0))
            .collect();
        let cols: Vec<Monomial> = cols.into_iter().collect();
        let coeffs: Vec<std::collections::BTreeMap<Monomial, Poly>> =
            vecs.iter().map(|p| p.coefficients_by(|v| v.is_x())).collect();
        let rows: Vec<Vec<Poly>> = coeffs.iter().map(|c| cols.iter().map(|m| c.get(m).cloned().unwrap_or_default()).collect()).collect();
        let rhs = vec![Poly::zero(); rows.len()];
        rank += solve_linear(&rows, &rhs)?.rank;
    }
    Ok(Rank1Report { parities, full_rank: rank == tested.len(), zero_products, tested, rank })
}
