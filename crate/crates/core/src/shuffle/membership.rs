use std::collections::BTreeMap;
use std::fmt;

use super::{Flavor, ShuffleElement};
use crate::exactalg::{Monomial, Poly, Scalar, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelViolation {
    /// 1 or 2.
    pub kind: u8,
    pub color: usize,
    pub r1: usize,
    pub r2: usize,
    /// Neighbor-color slots placed on the locus.
    pub neighbors: Vec<(usize, usize)>,
}

impl fmt::Display for WheelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "wheel{} at color {} (slots {}, {}; neighbors", self.kind, self.color, self.r1, self.r2)?;
        for (c, s) in &self.neighbors {
            write!(f, " x{c}_{s}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub supersymmetric: bool,
    pub wheel1: Vec<WheelViolation>,
    pub wheel2: Vec<WheelViolation>,
}

impl MembershipReport {
    pub fn passes(&self) -> bool {
        self.supersymmetric && self.wheel1.is_empty() && self.wheel2.is_empty()
    }
}

/// Rational: `t + a h`. Trig: `v^a t` (with `a` an integer).
fn locus_point(flavor: Flavor, t: Var, half_steps: i64) -> Poly {
    match flavor {
        Flavor::Rational => &Poly::var(t) + &Poly::hbar().scale(&Scalar::new(half_steps, 2)),
        Flavor::Trig => {
            assert!(half_steps % 2 == 0, "trigonometric loci use whole v-steps");
            Poly::term(Scalar::one(), Monomial::var(t).mul(&Monomial::var_pow(Var::V, (half_steps / 2) as i32)))
        }
    }
}

fn vanishes(num: &Poly, binds: BTreeMap<Var, Poly>) -> bool {
    num.substitute(&binds).map(|p| p.is_zero()).unwrap_or(false)
}

/// Supersymmetry plus both kinds of wheel conditions on the numerator.
///
/// Rational first kind (even `i`): `x_{i,r1} = t + h`, `x_{i+ε,s} = t + h/2`,
/// `x_{i,r2} = t`. Second kind (odd `i`): `x_{i,r1} = t`,
/// `x_{i-1,s} = x_{i+1,s'} = t + h/2`, `x_{i,r2} = t + h`. Trig loci replace
/// `+h/2` steps by multiplication by `v`.
pub fn check_membership(f: &ShuffleElement) -> MembershipReport {
    let d = &f.diagram;
    let k = &f.degree;
    let num = &f.numerator;
    let mut wheel1 = Vec::new();
    let mut wheel2 = Vec::new();
    // trig steps are v^1 per half-step of the rational locus
    let step = |half: i64| match f.flavor {
        Flavor::Rational => half,
        Flavor::Trig => 2 * half,
    };
    for i in d.colors() {
        let ki = k[i - 1];
        if ki < 2 {
            continue;
        }
        let pairs: Vec<(usize, usize)> =
            (1..=ki).flat_map(|a| (1..=ki).filter(move |&b| b != a).map(move |b| (a, b))).collect();
        if !d.is_odd(i) {
            for nb in [i.wrapping_sub(1), i + 1] {
                if !(1..=d.rank()).contains(&nb) {
                    continue;
                }
                for &(r1, r2) in &pairs {
                    for s in 1..=k[nb - 1] {
                        let t = Var::x(i, r2);
                        let binds = BTreeMap::from([
                            (Var::x(i, r1), locus_point(f.flavor, t, step(2))),
                            (Var::x(nb, s), locus_point(f.flavor, t, step(1))),
                        ]);
                        if !vanishes(num, binds) {
                            wheel1.push(WheelViolation { kind: 1, color: i, r1, r2, neighbors: vec![(nb, s)] });
                        }
                    }
                }
            }
        } else if i > 1 && i < d.rank() {
            for &(r1, r2) in &pairs {
                for s in 1..=k[i - 2] {
                    for s2 in 1..=k[i] {
                        let t = Var::x(i, r1);
                        let binds = BTreeMap::from([
                            (Var::x(i - 1, s), locus_point(f.flavor, t, step(1))),
                            (Var::x(i + 1, s2), locus_point(f.flavor, t, step(1))),
                            (Var::x(i, r2), locus_point(f.flavor, t, step(2))),
                        ]);
                        if !vanishes(num, binds) {
                            wheel2.push(WheelViolation { kind: 2, color: i, r1, r2, neighbors: vec![(i - 1, s), (i + 1, s2)] });
                        }
                    }
                }
            }
        }
    }
    MembershipReport { supersymmetric: f.is_supersymmetric(), wheel1, wheel2 }
}
