//! The trigonometric shuffle superalgebra: Laurent numerators, multiplicative
//! ζ-kernels and the quadratic, cubic and quartic v-relations.

use crate::exactalg::Poly;
use crate::root_data::DynkinDiagram;
use crate::shuffle::{
    check_membership, star, star_naive, Flavor, MembershipReport, PsiEvaluator, RelationReport, ShuffleElement,
    ShuffleError, WordExpr,
};
use crate::shuffle::words::v_pow;

pub fn star_trig(f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
    require_trig(f)?;
    star(f, g)
}

pub fn star_trig_naive(f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
    require_trig(f)?;
    star_naive(f, g)
}

pub fn check_membership_trig(f: &ShuffleElement) -> Result<MembershipReport, ShuffleError> {
    require_trig(f)?;
    Ok(check_membership(f))
}

/// Ψ of a word in the generators `e_{i,r}`, `r ∈ Z`.
pub fn psi_trig_word(d: &DynkinDiagram, w: &[(usize, i64)]) -> Result<ShuffleElement, ShuffleError> {
    PsiEvaluator::new(d, Flavor::Trig).word(w)
}

fn require_trig(f: &ShuffleElement) -> Result<(), ShuffleError> {
    if f.flavor() == Flavor::Trig {
        Ok(())
    } else {
        Err(ShuffleError::FlavorMismatch)
    }
}

fn e(i: usize, r: i64) -> WordExpr {
    WordExpr::letter(i, r)
}

/// Mode-wise Ψ-images of the quantum relations for modes in `-R..=R`.
///
/// Families: `quantum1` (coefficient of `z^{-a} w^{-b}` in
/// `(z - v^c w) e_i(z) e_j(w) = ± (v^c z - w) e_j(w) e_i(z)`), `quantum2`
/// (`[e_{i,a}, e_{j,b}] = 0` when `c_ij = 0`), `quantum3` (literal
/// `[e_i, [e_i, e_j]_{v^-1}]_v` form), `quantum3_general` (`[[·,·]]` form),
/// `quantum4`, `quantum4_general`, `quantum4_general_flv`, plus
/// `*_other_parities` for the `[[·,·]]` forms outside the standard parity
/// pattern, and `cubic_forms_agree` / `quartic_forms_agree` comparing the
/// images of the equivalent forms instance by instance.
pub fn verify_quantum_relations(d: &DynkinDiagram, max_mode: u32) -> Result<RelationReport, ShuffleError> {
    let mut ev = PsiEvaluator::new(d, Flavor::Trig);
    let mut rep = RelationReport::default();
    let rm = max_mode as i64;
    let modes = || -rm..=rm;
    let br = |a: &WordExpr, b: &WordExpr| WordExpr::bracket(d, a, b);
    let vb = |a: &WordExpr, b: &WordExpr, k: i64| WordExpr::v_bracket(d, a, b, k);
    let qb = |a: &WordExpr, b: &WordExpr| WordExpr::q_bracket(d, a, b);
    for i in d.colors() {
        for j in d.colors() {
            let c = d.cartan(i, j);
            let sign = if d.is_odd(i) && d.is_odd(j) { -1 } else { 1 };
            for a in modes() {
                for b in modes() {
                    let vc = v_pow(c);
                    let lhs = e(i, a + 1).times(&e(j, b)).minus(&e(i, a).times(&e(j, b + 1)).scale(&vc));
                    let rhs = e(j, b).times(&e(i, a + 1)).scale(&vc).minus(&e(j, b + 1).times(&e(i, a)));
                    let rel = lhs.minus(&rhs.scale(&Poly::int(sign)));
                    rep.record_zero("quantum1", format!("i={i} j={j} a={a} b={b}"), &ev.eval(&rel)?);
                    if c == 0 {
                        rep.record_zero("quantum2", format!("i={i} j={j} a={a} b={b}"), &ev.eval(&br(&e(i, a), &e(j, b)))?);
                    }
                }
            }
        }
    }
    for i in d.colors() {
        for j in [i.wrapping_sub(1), i + 1] {
            if !(1..=d.rank()).contains(&j) {
                continue;
            }
            let standard = !d.is_odd(i);
            let suffix = if standard { "" } else { "_other_parities" };
            for a in modes() {
                for b in modes() {
                    for c in modes() {
                        let inst = format!("i={i} j={j} a={a} b={b} c={c}");
                        let general = qb(&e(i, a), &qb(&e(i, b), &e(j, c))).plus(&qb(&e(i, b), &qb(&e(i, a), &e(j, c))));
                        let g_img = ev.eval(&general)?;
                        rep.record_zero(&format!("quantum3_general{suffix}"), inst.clone(), &g_img);
                        if standard {
                            let lit = vb(&e(i, a), &vb(&e(i, b), &e(j, c), -1), 1)
                                .plus(&vb(&e(i, b), &vb(&e(i, a), &e(j, c), -1), 1));
                            let l_img = ev.eval(&lit)?;
                            rep.record_zero("quantum3", inst.clone(), &l_img);
                            rep.record("cubic_forms_agree", inst, l_img == g_img, || {
                                format!("literal {} vs general {}", l_img.numerator(), g_img.numerator())
                            });
                        }
                    }
                }
            }
        }
    }
    for i in 2..d.rank() {
        let standard = d.is_odd(i) && !d.is_odd(i - 1) && !d.is_odd(i + 1);
        let suffix = if standard { "" } else { "_other_parities" };
        for w in modes() {
            for u in modes() {
                for a in modes() {
                    for b in modes() {
                        let inst = format!("i={i} w={w} u={u} a={a} b={b}");
                        let nested = |x: i64, y: i64| qb(&qb(&qb(&e(i - 1, w), &e(i, x)), &e(i + 1, u)), &e(i, y));
                        let flv = |x: i64, y: i64| qb(&qb(&e(i - 1, w), &e(i, x)), &qb(&e(i + 1, u), &e(i, y)));
                        let n_img = ev.eval(&nested(a, b).plus(&nested(b, a)))?;
                        let f_img = ev.eval(&flv(a, b).plus(&flv(b, a)))?;
                        rep.record_zero(&format!("quantum4_general{suffix}"), inst.clone(), &n_img);
                        rep.record_zero(&format!("quantum4_general_flv{suffix}"), inst.clone(), &f_img);
                        rep.record(&format!("quartic_forms_agree{suffix}"), inst.clone(), n_img == f_img, || {
                            format!("nested {} vs flv {}", n_img.numerator(), f_img.numerator())
                        });
                        if standard {
                            let lit = |x: i64, y: i64| br(&vb(&vb(&e(i - 1, w), &e(i, x), -1), &e(i + 1, u), 1), &e(i, y));
                            let l_img = ev.eval(&lit(a, b).plus(&lit(b, a)))?;
                            rep.record_zero("quantum4", inst, &l_img);
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_mode_generator() {
        let d: DynkinDiagram = "01".parse().unwrap();
        let f = psi_trig_word(&d, &[(1, -1)]).unwrap();
        assert_eq!(f.numerator(), &"x1_1^-1".parse::<Poly>().unwrap());
    }

    #[test]
    fn odd_square_vanishes_and_even_square_is_proportional() {
        let odd: DynkinDiagram = "01".parse().unwrap();
        for r in -1..2 {
            assert!(psi_trig_word(&odd, &[(1, r), (1, r)]).unwrap().is_zero());
        }
        let even: DynkinDiagram = "00".parse().unwrap();
        let sq = psi_trig_word(&even, &[(1, 1), (1, 1)]).unwrap();
        let by_x = sq.numerator().coefficients_by(|v| v.is_x());
        assert_eq!(by_x.len(), 1);
        let (m, c) = by_x.iter().next().unwrap();
        assert_eq!(m.to_string(), "x1_1*x1_2");
        assert_eq!(c, &"1 + v^-2".parse::<Poly>().unwrap());
    }

    #[test]
    fn rank_one_relations() {
        for ds in ["00", "01", "10", "11"] {
            let rep = verify_quantum_relations(&ds.parse().unwrap(), 1).unwrap();
            assert!(rep.all_pass(), "{ds}: {:?}", rep.failures().next());
        }
    }
}
