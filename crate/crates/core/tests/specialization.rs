mod common;

use std::collections::BTreeMap;

use common::*;
use proptest::prelude::*;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shuffly::exactalg::{Poly, Var};
use shuffly::root_data::{enumerate_t, pbw_monomials_of_degree, PBWMonomial, Root, RootDegreeVector};
use shuffly::shuffle::{Flavor, PbwChoice, ShuffleElement};
use shuffly::specialization::*;

fn rdv(pairs: &[((usize, usize), usize)]) -> RootDegreeVector {
    RootDegreeVector::from_pairs(pairs.iter().map(|&((j, i), c)| (Root::new(j, i), c)))
}

fn h_of(factors: &[((usize, usize), u32)]) -> PBWMonomial {
    PBWMonomial::from_factors(factors.iter().map(|&((j, i), r)| (Root::new(j, i), r)))
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                s = -s;
            }
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn splitting_independence(ds in prop::sample::select(vec!["000", "010", "011", "111"]), seed in any::<u64>()) {
        let d = dg(ds);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_element_upto(&mut rng, &d, 4, Flavor::Rational);
        let ts = enumerate_t(d.rank(), f.degree());
        let dv = ts.choose(&mut rng).unwrap();
        let mut sign = 1;
        let perms: Vec<Vec<usize>> = d
            .colors()
            .map(|i| {
                let mut p: Vec<usize> = (1..=f.degree()[i - 1]).collect();
                p.shuffle(&mut rng);
                if d.is_odd(i) {
                    sign *= perm_sign(&p);
                }
                p
            })
            .collect();
        let canonical = phi(&f, dv).unwrap().poly;
        let other = phi_with_split(&f, dv, &perms).unwrap().poly;
        prop_assert_eq!(other, canonical.scale(&shuffly::exactalg::Scalar::from_int(sign)));
    }

    #[test]
    fn phi_is_linear(seed in any::<u64>()) {
        let d = dg("010");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_degree(&mut rng, 2, 3);
        let f = random_element(&mut rng, &d, &k, Flavor::Rational);
        let g = random_element(&mut rng, &d, &k, Flavor::Rational);
        for dv in enumerate_t(2, &k) {
            let lhs = phi(&f.scale(&Poly::hbar()).add(&g).unwrap(), &dv).unwrap().poly;
            let rhs = &(&phi(&f, &dv).unwrap().poly * &Poly::hbar()) + &phi(&g, &dv).unwrap().poly;
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn specializations_are_supersymmetric_in_copies() {
    for ds in ["000", "011", "010"] {
        let d = dg(ds);
        let mut ctx = PbwContext::new(&d);
        let h = h_of(&[((1, 2), 0), ((1, 2), 1), ((2, 2), 0)]);
        let f = ctx.psi(&h).unwrap();
        let dv = h.degree();
        let p = phi(&f, &dv).unwrap().poly;
        let b = Root::new(1, 2);
        let swapped = p.rename(|v| match v {
            Var::Y { j: 1, i: 2, slot } => Var::y(1, 2, 3 - slot as usize),
            other => other,
        });
        let expect = if d.root_is_odd(b) { -&p } else { p.clone() };
        assert_eq!(swapped, expect, "{ds}");
    }
}

#[test]
fn lower_degrees_examples() {
    let d = dg("000");
    let mut ctx = PbwContext::new(&d);
    let h = h_of(&[((1, 1), 0), ((2, 2), 0)]);
    assert!(check_lower_degrees(&mut ctx, &h, &rdv(&[((1, 2), 1)])).unwrap());
    let d = dg("0000");
    let mut ctx = PbwContext::new(&d);
    let h = h_of(&[((1, 1), 0), ((2, 2), 1), ((3, 3), 0)]);
    assert!(check_lower_degrees(&mut ctx, &h, &rdv(&[((1, 3), 1)])).unwrap());
    assert!(check_lower_degrees(&mut ctx, &h, &rdv(&[((1, 2), 1), ((3, 3), 1)])).unwrap());
}

#[test]
fn same_degrees_examples() {
    let d = dg("000");
    let mut ctx = PbwContext::new(&d);
    let chk = verify_same_degrees_formula(&mut ctx, &h_of(&[((1, 2), 0), ((1, 1), 0)])).unwrap();
    assert!(chk.sign.is_some(), "{} vs {}", chk.direct, chk.factored);
    // an odd root with two copies exercises the sign branch of the copy sum
    let d = dg("011");
    assert!(d.root_is_odd(Root::new(1, 1)));
    let mut ctx = PbwContext::new(&d);
    for h in [h_of(&[((1, 1), 0), ((1, 1), 2)]), h_of(&[((1, 2), 0), ((1, 2), 1)])] {
        let chk = verify_same_degrees_formula(&mut ctx, &h).unwrap();
        assert!(chk.sign.is_some(), "{h}: {} vs {}", chk.direct, chk.factored);
    }
    // a single simple root collapses to the rank-one product
    let mut ctx = PbwContext::new(&dg("00"));
    let chk = verify_same_degrees_formula(&mut ctx, &h_of(&[((1, 1), 0), ((1, 1), 1)])).unwrap();
    assert_eq!(chk.sign, Some(1));
}

#[test]
fn factor_formulas() {
    let d = dg("0000");
    assert!(factor_pair(&d, Root::simple(1), Root::simple(3), &rdv(&[((1, 1), 1), ((3, 3), 1)])).is_one());
    // odd overlap colors add to the diagonal power
    let d = dg("01100");
    let e = factor_pair_exponents(&d, Root::new(1, 3), Root::new(2, 3));
    let odd_overlap = (2..=3).filter(|&k| d.is_odd(k)).count() as i64;
    assert_eq!(e.get(&0).copied().unwrap_or(0), odd_overlap);
    assert_eq!(factor_diag(&dg("000"), Root::new(1, 2), 1), "h".parse().unwrap());
    assert_eq!(factor_diag(&dg("000"), Root::new(1, 2), 0), Poly::one());
}

#[test]
fn vanishing_orders_meet_predictions() {
    // non-adjacent simple roots: nothing predicted
    let d = dg("0000");
    let mut ctx = PbwContext::new(&d);
    let simple = h_of(&[((1, 1), 1), ((3, 3), 0)]);
    let f = ctx.psi(&simple).unwrap();
    for e in vanishing_orders(&f, &simple.degree()).unwrap() {
        assert_eq!(e.predicted, 0);
    }
    // adjacent simple roots: the diagonal carries order one
    let adjacent = h_of(&[((1, 1), 1), ((2, 2), 0)]);
    let f = ctx.psi(&adjacent).unwrap();
    let orders = vanishing_orders(&f, &adjacent.degree()).unwrap();
    let diag = orders.iter().find(|e| e.shift == 0).unwrap();
    assert_eq!((diag.predicted, diag.measured), (1, Some(1)));
    for ds in ["000", "011", "010"] {
        let d = dg(ds);
        let mut ctx = PbwContext::new(&d);
        for h in [h_of(&[((1, 2), 0), ((1, 1), 1)]), h_of(&[((1, 2), 0), ((1, 2), 1)]), h_of(&[((1, 1), 0), ((1, 1), 1), ((2, 2), 0)])] {
            let f = ctx.psi(&h).unwrap();
            for e in vanishing_orders(&f, &h.degree()).unwrap() {
                let m = e.measured.expect("nonzero specialization") as i64;
                assert!(m >= e.predicted, "{ds} {h}: {e:?}");
            }
        }
    }
    // odd root with two copies: one extra order on the diagonal
    let d = dg("011");
    let mut ctx = PbwContext::new(&d);
    let h = h_of(&[((1, 2), 0), ((1, 2), 1)]);
    assert!(d.root_is_odd(Root::new(1, 2)));
    let (e0, _) = factor_diag_exponents(&d, Root::new(1, 2));
    let f = ctx.psi(&h).unwrap();
    let diag = vanishing_orders(&f, &h.degree()).unwrap().into_iter().find(|e| e.shift == 0).unwrap();
    assert_eq!(diag.predicted, 2 * e0 + 1);
    assert!(diag.measured.unwrap() as i64 >= diag.predicted);
}

#[test]
fn rank_one_elements_are_good() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for ds in ["00", "01", "10", "11"] {
        let d = dg(ds);
        for _ in 0..5 {
            let f = random_element_upto(&mut rng, &d, 3, Flavor::Rational);
            assert!(is_good(&f).unwrap().good);
        }
    }
}

#[test]
fn good_and_integral() {
    let d = dg("000");
    let bad = ShuffleElement::new(d.clone(), vec![1, 1], Poly::one(), Flavor::Rational).unwrap();
    let rep = is_good(&bad).unwrap();
    assert!(!rep.good);
    assert_eq!(rep.witness, Some(rdv(&[((1, 2), 1)])));
    assert!(!is_integral(&bad));
    assert!(is_integral(&bad.scale(&Poly::hbar().pow(2))));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for ds in ["000", "010", "011"] {
        let d = dg(ds);
        for _ in 0..4 {
            let f = random_element_upto(&mut rng, &d, 3, Flavor::Rational);
            let g = f.scale(&Poly::hbar().pow(f.total_degree() as u32));
            assert!(is_integral(&g));
            assert!(is_good(&g).unwrap().good);
        }
    }
}

#[test]
fn decompose_examples() {
    let d = dg("010");
    let mut ctx = PbwContext::new(&d);
    let h = h_of(&[((1, 2), 1), ((2, 2), 0)]);
    let f = ctx.psi(&h).unwrap();
    let dec = decompose_good(&mut ctx, &f).unwrap();
    assert_eq!(dec.coefficients, BTreeMap::from([(h, Poly::one())]));
    assert!(dec.residual.is_zero());
    let bad = ShuffleElement::new(d, vec![1, 1], Poly::one(), Flavor::Rational).unwrap();
    assert!(matches!(decompose_good(&mut ctx, &bad), Err(SpecializationError::NotInSpan { .. })));
    let trig = ShuffleElement::new(dg("00"), vec![1], Poly::one(), Flavor::Trig).unwrap();
    assert!(matches!(phi(&trig, &rdv(&[((1, 1), 1)])), Err(SpecializationError::NotRational)));
}

#[test]
fn integral_iff_coefficients_carry_factor_count() {
    // F = Σ c_h Ψ(x_h) is integral iff h^{number of factors of h} divides each c_h
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for ds in ["000", "011"] {
        let d = dg(ds);
        let mut ctx = PbwContext::new(&d);
        for k in [vec![1, 1], vec![2, 1], vec![1, 2]] {
            let pool: Vec<PBWMonomial> = enumerate_t(2, &k).iter().flat_map(|t| pbw_monomials_of_degree(&d, t, 1)).collect();
            for _ in 0..4 {
                let mut coeffs = BTreeMap::new();
                for h in pool.choose_multiple(&mut rng, 2) {
                    let n = h.factors().len() as u32;
                    let e = if rng.gen_bool(0.5) { n } else { n - 1 };
                    coeffs.insert(h.clone(), Poly::hbar().pow(e).scale(&shuffly::exactalg::Scalar::from_int(rng.gen_range(1..=3))));
                }
                let f = reassemble(&mut ctx, &k, &coeffs).unwrap();
                let predicted = coeffs.iter().all(|(h, c)| c.is_divisible_by_hbar_power(h.factors().len() as i32));
                assert_eq!(is_integral(&f), predicted, "{ds} {coeffs:?}");
                let dec = decompose_good(&mut ctx, &f).unwrap();
                assert_eq!(dec.coefficients, coeffs);
            }
        }
    }
}

#[test]
fn bracket_choice_gives_the_same_span() {
    let d = dg("011");
    let mut first = PbwContext::new(&d);
    let mut last = PbwContext::with_choice(&d, PbwChoice::ModeLast);
    for h in pbw_monomials_of_degree(&d, &rdv(&[((1, 2), 1), ((2, 2), 1)]), 2) {
        let a = last.psi(&h).unwrap();
        assert!(decompose_good(&mut first, &a).is_ok(), "{h}");
        let b = first.psi(&h).unwrap();
        assert!(decompose_good(&mut last, &b).is_ok(), "{h}");
    }
}

#[test]
fn same_degrees_rank_is_full() {
    for ds in ["000", "011"] {
        let d = dg(ds);
        let mut ctx = PbwContext::new(&d);
        for t in enumerate_t(2, &[2, 2]) {
            let r = same_degrees_rank(&mut ctx, &t, 2).unwrap();
            assert_eq!(r.rank, r.monomials, "{ds} {t}");
        }
    }
}
