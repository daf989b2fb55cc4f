#![allow(dead_code)]

use rand::Rng;
use shuffly::exactalg::{Monomial, Poly, Scalar, Var};
use shuffly::root_data::DynkinDiagram;
use shuffly::shuffle::{Flavor, PsiEvaluator, ShuffleElement};

pub fn dg(s: &str) -> DynkinDiagram {
    s.parse().unwrap()
}

/// All `k ∈ ℕ^rank` with `1 <= Σk <= max_total`.
pub fn color_degrees(rank: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max_total).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| (1..=max_total).contains(&v.iter().sum::<usize>()));
    out
}

pub fn diagrams(ns: std::ops::RangeInclusive<usize>) -> Vec<DynkinDiagram> {
    ns.flat_map(DynkinDiagram::all_of_length).collect()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// `Σ_σ sgn_odd(σ) σ(p)` over all color-preserving slot permutations.
pub fn supersymmetrize(d: &DynkinDiagram, k: &[usize], p: &Poly) -> Poly {
    let mut acc = p.clone();
    for i in d.colors() {
        let perms = permutations(k[i - 1]);
        let mut next = Poly::zero();
        for (perm, sign) in perms {
            let moved = acc.rename(|v| match v {
                Var::X { color, slot } if color as usize == i => Var::x(i, perm[slot as usize - 1]),
                other => other,
            });
            let s = if d.is_odd(i) { sign } else { 1 };
            next = &next + &moved.scale(&Scalar::from_int(s));
        }
        acc = next;
    }
    acc
}

/// A random polynomial in the x-variables of degree `k` and `h` (or `v`).
pub fn random_poly<R: Rng>(rng: &mut R, k: &[usize], flavor: Flavor, terms: usize) -> Poly {
    let mut out = Vec::new();
    for _ in 0..terms {
        let mut pairs = Vec::new();
        for (c, &kc) in k.iter().enumerate() {
            for s in 1..=kc {
                let e = match flavor {
                    Flavor::Rational => rng.gen_range(0..=2),
                    Flavor::Trig => rng.gen_range(-1..=2),
                };
                pairs.push((Var::x(c + 1, s), e));
            }
        }
        match flavor {
            Flavor::Rational => pairs.push((Var::Hbar, rng.gen_range(0..=1))),
            Flavor::Trig => pairs.push((Var::V, rng.gen_range(-1..=1))),
        }
        let c = Scalar::new(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        out.push((Monomial::from_pairs(pairs), c));
    }
    Poly::from_terms(out)
}

/// A random supersymmetric element (no wheel conditions imposed).
pub fn random_element<R: Rng>(rng: &mut R, d: &DynkinDiagram, k: &[usize], flavor: Flavor) -> ShuffleElement {
    let p = supersymmetrize(d, k, &random_poly(rng, k, flavor, 2));
    ShuffleElement::new(d.clone(), k.to_vec(), p, flavor).unwrap()
}

pub fn random_degree<R: Rng>(rng: &mut R, rank: usize, max_total: usize) -> Vec<usize> {
    let all = color_degrees(rank, max_total);
    all[rng.gen_range(0..all.len())].clone()
}

/// A random element satisfying the wheel conditions: an image of a random
/// word times a symmetric function of one color.
pub fn random_wheel_element<R: Rng>(rng: &mut R, ev: &mut PsiEvaluator, max_len: usize) -> ShuffleElement {
    let d = ev.diagram().clone();
    let len = rng.gen_range(1..=max_len);
    let lo = if ev.flavor() == Flavor::Trig { -1 } else { 0 };
    let word: Vec<(usize, i64)> = (0..len).map(|_| (rng.gen_range(1..=d.rank()), rng.gen_range(lo..=2))).collect();
    let f = ev.word(&word).unwrap();
    let i = word[0].0;
    let k = f.degree()[i - 1];
    let power_sum: Poly = (1..=k).map(|s| Poly::var(Var::x(i, s))).sum();
    let coeff = match ev.flavor() {
        Flavor::Rational => &Poly::int(rng.gen_range(1..=3)) + &Poly::hbar(),
        Flavor::Trig => &Poly::int(rng.gen_range(1..=3)) + &Poly::var(Var::V),
    };
    f.mult_symfun(i, &power_sum.pow(rng.gen_range(0..=1))).unwrap().scale(&coeff)
}

/// [`random_element`] in a random degree of total size at most `max_total`.
pub fn random_element_upto<R: Rng>(rng: &mut R, d: &DynkinDiagram, max_total: usize, flavor: Flavor) -> ShuffleElement {
    let k = random_degree(rng, d.rank(), max_total);
    random_element(rng, d, &k, flavor)
}
