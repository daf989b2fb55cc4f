//! Dynkin parity sequences, Cartan data, positive roots and degree-vector
//! combinatorics for type A.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::exactalg::{Poly, Scalar, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootDataError {
    #[error("parity string must consist of '0'/'1' and have length >= 2, got `{0}`")]
    InvalidParities(String),
    #[error("color {color} out of range 1..={max}")]
    ColorOutOfRange { color: usize, max: usize },
    #[error("bad root `{0}`")]
    BadRoot(String),
    #[error("odd root {root} with mode {mode} has multiplicity {mult} > 1")]
    OddMultiplicity { root: Root, mode: u32, mult: u32 },
}

/// The parity sequence `(p_1, ..., p_n)` of a basis of the superspace.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinDiagram {
    parities: Vec<u8>,
}

impl DynkinDiagram {
    pub fn new(parities: Vec<u8>) -> Result<Self, RootDataError> {
        if parities.len() < 2 || parities.iter().any(|&p| p > 1) {
            let s: String = parities.iter().map(|p| p.to_string()).collect();
            return Err(RootDataError::InvalidParities(s));
        }
        Ok(DynkinDiagram { parities })
    }

    /// Every parity sequence of length `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<DynkinDiagram> {
        (0..1u32 << n)
            .map(|bits| {
                let p = (0..n).map(|k| ((bits >> (n - 1 - k)) & 1) as u8).collect();
                DynkinDiagram { parities: p }
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.parities.len()
    }

    /// Number of colors `n - 1`.
    pub fn rank(&self) -> usize {
        self.parities.len() - 1
    }

    pub fn colors(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank()
    }

    pub fn n_plus(&self) -> usize {
        self.parities.iter().filter(|&&p| p == 0).count()
    }

    pub fn n_minus(&self) -> usize {
        self.parities.iter().filter(|&&p| p == 1).count()
    }

    /// `p_k` for `1 <= k <= n`.
    pub fn p(&self, k: usize) -> u8 {
        self.parities[k - 1]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    /// `|α_i| = p_i + p_{i+1} mod 2`.
    pub fn alpha_parity(&self, i: usize) -> u8 {
        (self.p(i) + self.p(i + 1)) % 2
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.alpha_parity(i) == 1
    }

    pub fn check_color(&self, i: usize) -> Result<(), RootDataError> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(RootDataError::ColorOutOfRange { color: i, max: self.rank() })
        }
    }

    /// `c_ij = (α_i, α_j)` with `(ε_k, ε_l) = δ_kl (-1)^{p_k}`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        let sgn = |k: usize| if self.p(k) == 0 { 1 } else { -1 };
        if i == j {
            sgn(i) + sgn(i + 1)
        } else if i.abs_diff(j) == 1 {
            -sgn(i.max(j))
        } else {
            0
        }
    }

    /// `-1` iff `i > j` and both simple roots are odd.
    pub fn zeta_sign(&self, i: usize, j: usize) -> i64 {
        if i > j && self.is_odd(i) && self.is_odd(j) {
            -1
        } else {
            1
        }
    }

    /// `ζ_ij(z) = s (z + c_ij h/2) / z`.
    pub fn zeta_rational(&self, i: usize, j: usize) -> ZetaRational {
        let c = self.cartan(i, j);
        ZetaRational { sign: self.zeta_sign(i, j), shift: Scalar::new(c, 2), has_pole: c != 0 }
    }

    /// `ζ_ij(z) = s (z - v^{-c_ij}) / (z - 1)`.
    pub fn zeta_trig(&self, i: usize, j: usize) -> ZetaTrig {
        let c = self.cartan(i, j);
        ZetaTrig { sign: self.zeta_sign(i, j), v_power: -c, has_pole: c != 0 }
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        let r = self.rank();
        (1..=r).flat_map(|j| (j..=r).map(move |i| Root { j, i })).collect()
    }

    pub fn root_parity(&self, b: Root) -> u8 {
        (b.colors().map(|k| self.alpha_parity(k) as usize).sum::<usize>() % 2) as u8
    }

    pub fn root_is_odd(&self, b: Root) -> bool {
        self.root_parity(b) == 1
    }

    /// `even(β)`: number of even simple roots in `[β]`.
    pub fn even_count(&self, b: Root) -> usize {
        b.colors().filter(|&k| !self.is_odd(k)).count()
    }

    /// `odd(β)`: number of odd simple roots in `[β]`.
    pub fn odd_count(&self, b: Root) -> usize {
        b.colors().filter(|&k| self.is_odd(k)).count()
    }

    /// `(c_12 + ... + c_{k-1,k}) / 2`, the φ shift of color `k`.
    pub fn phi_shift(&self, k: usize) -> Scalar {
        let s: i64 = (1..k).map(|t| self.cartan(t, t + 1)).sum();
        Scalar::new(s, 2)
    }
}

impl FromStr for DynkinDiagram {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootDataError::InvalidParities(s.to_string());
        let p = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        DynkinDiagram::new(p).map_err(|_| bad())
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.parities {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaRational {
    pub sign: i64,
    /// `c_ij / 2`.
    pub shift: Scalar,
    pub has_pole: bool,
}

impl ZetaRational {
    /// Numerator evaluated at `z = a - b`: `s (a - b + c h/2)`, or `s` when `c = 0`.
    pub fn numerator(&self, a: &Poly, b: &Poly) -> Poly {
        let s = Scalar::from_int(self.sign);
        if !self.has_pole {
            return Poly::constant(s);
        }
        (&(a - b) + &Poly::hbar().scale(&self.shift)).scale(&s)
    }

    /// Value at a point `z` in `Q[h]`; `None` at the pole.
    pub fn eval(&self, z: &Poly) -> Option<crate::exactalg::RatFn> {
        if !self.has_pole {
            return Some(crate::exactalg::RatFn::from_poly(Poly::int(self.sign)));
        }
        if z.is_zero() {
            return None;
        }
        crate::exactalg::RatFn::new(self.numerator(z, &Poly::zero()), z.clone()).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaTrig {
    pub sign: i64,
    /// `-c_ij`.
    pub v_power: i64,
    pub has_pole: bool,
}

impl ZetaTrig {
    /// Numerator of `ζ(a/b)` after multiplying through by `b`:
    /// `s (a - v^{-c} b)`, or `s` when `c = 0`.
    pub fn numerator(&self, a: &Poly, b: &Poly) -> Poly {
        let s = Scalar::from_int(self.sign);
        if !self.has_pole {
            return Poly::constant(s);
        }
        let vb = b.mul_monomial(&crate::exactalg::Monomial::var_pow(Var::V, self.v_power as i32));
        (a - &vb).scale(&s)
    }
}

/// A positive root `α_j + ... + α_i`, `j <= i`. The derived order (by `j`,
/// then `i`) is the positive-root order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub j: usize,
    pub i: usize,
}

impl Root {
    pub fn new(j: usize, i: usize) -> Root {
        assert!(1 <= j && j <= i, "invalid root interval [{j}, {i}]");
        Root { j, i }
    }

    pub fn simple(i: usize) -> Root {
        Root::new(i, i)
    }

    pub fn colors(self) -> std::ops::RangeInclusive<usize> {
        self.j..=self.i
    }

    pub fn contains(self, k: usize) -> bool {
        self.j <= k && k <= self.i
    }

    pub fn height(self) -> usize {
        self.i - self.j + 1
    }

    pub fn is_simple(self) -> bool {
        self.i == self.j
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}..{}", self.j, self.i)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Root {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootDataError::BadRoot(s.to_string());
        let (j, i) = s.strip_prefix('a').and_then(|r| r.split_once("..")).ok_or_else(bad)?;
        let j: usize = j.parse().map_err(|_| bad())?;
        let i: usize = i.parse().map_err(|_| bad())?;
        if j == 0 || j > i {
            return Err(bad());
        }
        Ok(Root { j, i })
    }
}

/// `d: Δ⁺ -> ℕ` with finite support; zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RootDegreeVector {
    d: BTreeMap<Root, usize>,
}

impl RootDegreeVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Root, usize)>>(it: I) -> Self {
        let mut d = RootDegreeVector::new();
        for (b, c) in it {
            d.add(b, c);
        }
        d
    }

    pub fn add(&mut self, b: Root, c: usize) {
        if c > 0 {
            *self.d.entry(b).or_default() += c;
        }
    }

    pub fn get(&self, b: Root) -> usize {
        self.d.get(&b).copied().unwrap_or(0)
    }

    /// Support in root order.
    pub fn iter(&self) -> impl Iterator<Item = (Root, usize)> + '_ {
        self.d.iter().map(|(&b, &c)| (b, c))
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// `k = Σ d_β [β]` as a vector over colors `1..=rank`, extended when a
    /// root reaches past `rank`.
    pub fn color_degree(&self, rank: usize) -> Vec<usize> {
        let mut k = vec![0; rank];
        for (b, c) in self.iter() {
            if b.i > k.len() {
                k.resize(b.i, 0);
            }
            for col in b.colors() {
                k[col - 1] += c;
            }
        }
        k
    }

    /// `Σ d_β (i(β) - j(β))`, the h-power demanded of a good element.
    pub fn hbar_demand(&self) -> usize {
        self.iter().map(|(b, c)| c * (b.i - b.j)).sum()
    }

    pub fn is_simple_supported(&self) -> bool {
        self.d.keys().all(|b| b.is_simple())
    }
}

impl fmt::Display for RootDegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (b, c)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}:{c}")?;
        }
        write!(f, "}}")
    }
}

/// Parses `a1..1:2, a2..2:1`, with or without surrounding braces.
impl FromStr for RootDegreeVector {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut d = RootDegreeVector::new();
        for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (b, c) = part.split_once(':').ok_or_else(|| RootDataError::BadRoot(part.to_string()))?;
            let c: usize = c.trim().parse().map_err(|_| RootDataError::BadRoot(part.to_string()))?;
            d.add(b.trim().parse()?, c);
        }
        Ok(d)
    }
}

impl fmt::Debug for RootDegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The degree-vector order: at the first root where `d` and `d'` differ, the
/// vector with the larger entry is the smaller one.
pub fn compare_deg(d: &RootDegreeVector, e: &RootDegreeVector) -> Ordering {
    let mut roots: Vec<Root> = d.d.keys().chain(e.d.keys()).copied().collect();
    roots.sort();
    roots.dedup();
    for b in roots {
        match d.get(b).cmp(&e.get(b)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// All `d` with `Σ d_β [β] = k`, from the largest to the smallest in
/// [`compare_deg`].
pub fn enumerate_t(rank: usize, k: &[usize]) -> Vec<RootDegreeVector> {
    assert_eq!(k.len(), rank, "color degree has wrong length");
    let roots: Vec<Root> = (1..=rank).flat_map(|j| (j..=rank).map(move |i| Root { j, i })).collect();
    let mut out = Vec::new();
    let mut rest = k.to_vec();
    let mut cur = RootDegreeVector::new();
    tile(&roots, 0, &mut rest, &mut cur, &mut out);
    out.sort_by(|a, b| compare_deg(b, a));
    out
}

fn tile(roots: &[Root], idx: usize, rest: &mut [usize], cur: &mut RootDegreeVector, out: &mut Vec<RootDegreeVector>) {
    if idx == roots.len() {
        if rest.iter().all(|&c| c == 0) {
            out.push(cur.clone());
        }
        return;
    }
    let b = roots[idx];
    // all roots starting at b.j are exhausted after this one
    let last_from_j = idx + 1 == roots.len() || roots[idx + 1].j != b.j;
    let cap = b.colors().map(|c| rest[c - 1]).min().unwrap_or(0);
    for m in 0..=cap {
        for c in b.colors() {
            rest[c - 1] -= m;
        }
        if !last_from_j || rest[b.j - 1] == 0 {
            if m > 0 {
                cur.d.insert(b, m);
            }
            tile(roots, idx + 1, rest, cur, out);
            cur.d.remove(&b);
        }
        for c in b.colors() {
            rest[c - 1] += m;
        }
    }
}

/// `h: Δ⁺ × ℕ -> ℕ` with finite support; names the ordered product of root
/// vectors in the double order `(β, r) ⪯ (β', r')` iff `β < β'` or `β = β'`,
/// `r <= r'`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PBWMonomial {
    h: BTreeMap<(Root, u32), u32>,
}

impl PBWMonomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from a list of factors (repetitions allowed, any order).
    pub fn from_factors<I: IntoIterator<Item = (Root, u32)>>(it: I) -> Self {
        let mut h = PBWMonomial::new();
        for f in it {
            *h.h.entry(f).or_default() += 1;
        }
        h
    }

    pub fn validate(&self, diagram: &DynkinDiagram) -> Result<(), RootDataError> {
        for (&(b, r), &m) in &self.h {
            diagram.check_color(b.i)?;
            if m > 1 && diagram.root_is_odd(b) {
                return Err(RootDataError::OddMultiplicity { root: b, mode: r, mult: m });
            }
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    pub fn get(&self, b: Root, r: u32) -> u32 {
        self.h.get(&(b, r)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((Root, u32), u32)> + '_ {
        self.h.iter().map(|(&k, &m)| (k, m))
    }

    /// Factors with repetition, in the double order.
    pub fn factors(&self) -> Vec<(Root, u32)> {
        self.h.iter().flat_map(|(&k, &m)| std::iter::repeat_n(k, m as usize)).collect()
    }

    pub fn degree(&self) -> RootDegreeVector {
        RootDegreeVector::from_pairs(self.h.iter().map(|(&(b, _), &m)| (b, m as usize)))
    }

    /// Modes attached to root `b`, ascending with repetition.
    pub fn modes_of(&self, b: Root) -> Vec<u32> {
        self.h
            .iter()
            .filter(|((c, _), _)| *c == b)
            .flat_map(|(&(_, r), &m)| std::iter::repeat_n(r, m as usize))
            .collect()
    }

    /// Σ d_β (i(β) - j(β) + 1), the h-power of the rescaled product.
    pub fn shifted_hbar_degree(&self) -> usize {
        self.degree().iter().map(|(b, c)| c * b.height()).sum()
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.h.is_empty() {
            return write!(f, "1");
        }
        for (k, (b, r)) in self.factors().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}[{r}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Nondecreasing (or strictly increasing when `strict`) mode lists of the given
/// length with entries in `0..=max_mode`.
pub fn mode_multisets(len: usize, max_mode: u32, strict: bool) -> Vec<Vec<u32>> {
    fn go(len: usize, lo: u32, max: u32, strict: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for r in lo..=max {
            cur.push(r);
            go(len, if strict { r + 1 } else { r }, max, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 0, max_mode, strict, &mut Vec::new(), &mut out);
    out
}

/// All PBW monomials of degree `d` whose modes lie in `0..=max_mode`
/// (strictly increasing on odd roots).
pub fn pbw_monomials_of_degree(diagram: &DynkinDiagram, d: &RootDegreeVector, max_mode: u32) -> Vec<PBWMonomial> {
    let mut acc = vec![PBWMonomial::new()];
    for (b, c) in d.iter() {
        let lists = mode_multisets(c, max_mode, diagram.root_is_odd(b));
        let mut next = Vec::with_capacity(acc.len() * lists.len());
        for h in &acc {
            for l in &lists {
                let mut h2 = h.clone();
                for &r in l {
                    *h2.h.entry((b, r)).or_default() += 1;
                }
                next.push(h2);
            }
        }
        acc = next;
    }
    acc
}
