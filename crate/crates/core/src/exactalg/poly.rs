use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use smallvec::SmallVec;

use super::{ExactAlgError, Scalar, Var};

pub type Exp = i32;

/// A sparse exponent vector: `(variable, exponent)` pairs sorted by variable,
/// zero exponents never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(Var, Exp); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: Exp) -> Self {
        let mut exps = SmallVec::new();
        if e != 0 {
            exps.push((v, e));
        }
        Monomial { exps }
    }

    /// Builds a monomial from unsorted pairs; repeated variables add up.
    pub fn from_pairs<I: IntoIterator<Item = (Var, Exp)>>(pairs: I) -> Self {
        let mut exps: SmallVec<[(Var, Exp); 6]> = pairs.into_iter().collect();
        exps.sort_by_key(|&(v, _)| v);
        let mut out: SmallVec<[(Var, Exp); 6]> = SmallVec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|(_, e)| *e != 0);
        Monomial { exps: out }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, Exp)> + '_ {
        self.exps.iter().copied()
    }

    pub fn exponent(&self, v: Var) -> Exp {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|k| self.exps[k].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> Exp {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    /// Quotient in the Laurent monomial group (exponents may go negative).
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect() }
    }

    /// Componentwise `self <= other`, the polynomial-ring divisibility test.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::new();
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        if ea < 0 {
                            out.push((va, ea));
                        }
                        a.next();
                    }
                    Ordering::Greater => {
                        if eb < 0 {
                            out.push((vb, eb));
                        }
                        b.next();
                    }
                    Ordering::Equal => {
                        let e = ea.min(eb);
                        if e != 0 {
                            out.push((va, e));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&&(va, ea)), None) => {
                    if ea < 0 {
                        out.push((va, ea));
                    }
                    a.next();
                }
                (None, Some(&&(vb, eb))) => {
                    if eb < 0 {
                        out.push((vb, eb));
                    }
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps: out }
    }

    fn combine(&self, other: &Monomial, sign: Exp) -> Monomial {
        let mut out = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (0, 0);
        while a < self.exps.len() || b < other.exps.len() {
            let ord = match (self.exps.get(a), other.exps.get(b)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.exps[a]);
                    a += 1;
                }
                Ordering::Greater => {
                    let (v, e) = other.exps[b];
                    out.push((v, sign * e));
                    b += 1;
                }
                Ordering::Equal => {
                    let (v, e) = self.exps[a];
                    let s = e + sign * other.exps[b].1;
                    if s != 0 {
                        out.push((v, s));
                    }
                    a += 1;
                    b += 1;
                }
            }
        }
        Monomial { exps: out }
    }

    /// Splits into the part over variables selected by `pred` and the rest.
    pub fn split(&self, pred: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let (mut inside, mut outside) = (SmallVec::new(), SmallVec::new());
        for &(v, e) in &self.exps {
            if pred(v) {
                inside.push((v, e));
            } else {
                outside.push((v, e));
            }
        }
        (Monomial { exps: inside }, Monomial { exps: outside })
    }

    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.exps.iter().map(|&(v, e)| (f(v), e)))
    }
}

/// Graded lexicographic order: total degree first, then exponents compared
/// variable by variable in the canonical variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        let (mut a, mut b) = (0, 0);
        loop {
            match (self.exps.get(a), other.exps.get(b)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        a += 1;
                        b += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Hash-based term accumulator, turned into a canonical [`Poly`] at the end.
#[derive(Default)]
pub struct TermAccumulator {
    terms: HashMap<Monomial, Scalar>,
}

impl TermAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(acc) => *acc += c,
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_poly(&mut self, p: &Poly, scale: &Scalar) {
        for (m, c) in p.terms() {
            self.add_term(m.clone(), &(c * scale));
        }
    }

    pub fn into_poly(self) -> Poly {
        Poly { terms: self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

/// A sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms live in a map keyed by [`Monomial`]; no zero coefficient is ever
/// stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(Scalar::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Scalar::one(), Monomial::var(v))
    }

    pub fn hbar() -> Self {
        Poly::var(Var::Hbar)
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(it: I) -> Self {
        let mut acc = TermAccumulator::new();
        for (m, c) in it {
            acc.add_term(m, &c);
        }
        acc.into_poly()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(Scalar::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn trailing_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next()
    }

    /// `Some(c)` if the polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn as_single_term(&self) -> Option<(&Monomial, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect()
    }

    pub fn max_degree_in(&self, v: Var) -> Option<Exp> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn min_degree_in(&self, v: Var) -> Option<Exp> {
        self.terms.keys().map(|m| m.exponent(v)).min()
    }

    /// Largest `e` such that `h^e` divides every term (`None` for zero).
    pub fn hbar_valuation(&self) -> Option<Exp> {
        self.min_degree_in(Var::Hbar)
    }

    pub fn is_divisible_by_hbar_power(&self, e: Exp) -> bool {
        self.hbar_valuation().is_none_or(|val| val >= e)
    }

    pub fn total_degree(&self) -> Option<Exp> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Splits by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<Exp, Poly> {
        let mut out: BTreeMap<Exp, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_default().terms.insert(m.clone(), c.clone());
        }
        out
    }

    /// Groups terms by their monomial in the variables selected by `pred`;
    /// each value is the cofactor polynomial in the remaining variables.
    pub fn coefficients_by(&self, pred: impl Fn(Var) -> bool) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(&pred);
            out.entry(inside).or_default().terms.insert(outside, c.clone());
        }
        out
    }

    /// Renames variables; `f` must be injective on the variables present.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Poly {
        let mut acc = TermAccumulator::new();
        for (m, c) in &self.terms {
            acc.add_term(m.map_vars(&f), c);
        }
        acc.into_poly()
    }

    /// Simultaneous substitution `v -> bindings[v]`, fully expanded.
    ///
    /// A variable carrying a negative exponent may only be replaced by a
    /// single nonzero term.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Poly>) -> Result<Poly, ExactAlgError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let mut cache: HashMap<(Var, Exp), Poly> = HashMap::new();
        let mut acc = TermAccumulator::new();
        for (m, c) in &self.terms {
            let (bound, free) = m.split(|v| bindings.contains_key(&v));
            let mut prod = Poly::term(c.clone(), free);
            for (v, e) in bound.iter() {
                if let std::collections::hash_map::Entry::Vacant(slot) = cache.entry((v, e)) {
                    let target = &bindings[&v];
                    let p = if e >= 0 {
                        target.pow(e as u32)
                    } else {
                        match target.as_single_term() {
                            Some((tm, tc)) => Poly::term(tc.recip(), tm.inverse()).pow((-e) as u32),
                            None => return Err(ExactAlgError::NegativeExponentOnNonLaurent { var: v }),
                        }
                    };
                    slot.insert(p);
                }
                prod = &prod * &cache[&(v, e)];
            }
            acc.add_poly(&prod, &Scalar::one());
        }
        Ok(acc.into_poly())
    }

    /// Convenience wrapper for a single variable binding.
    pub fn substitute_var(&self, v: Var, target: &Poly) -> Result<Poly, ExactAlgError> {
        self.substitute(&BTreeMap::from([(v, target.clone())]))
    }

    /// Multivariate division by one divisor in the polynomial ring, using the
    /// graded-lex leading term. Returns `(quotient, remainder)`; the
    /// remainder is zero exactly when `den` divides `self`.
    pub fn div_rem(&self, den: &Poly) -> Result<(Poly, Poly), ExactAlgError> {
        let (lm, lc) = den.leading_term().ok_or(ExactAlgError::DivisionByZero)?;
        let (lm, lc_inv) = (lm.clone(), lc.recip());
        let mut work = self.terms.clone();
        let mut quot = TermAccumulator::new();
        let mut rem = BTreeMap::new();
        while let Some((m, c)) = work.pop_last() {
            if lm.divides(&m) {
                let qm = m.div(&lm);
                let qc = &c * &lc_inv;
                for (dm, dc) in den.terms.iter().rev().skip(1) {
                    let tm = dm.mul(&qm);
                    let delta = dc * &qc;
                    match work.get_mut(&tm) {
                        Some(e) => {
                            *e -= &delta;
                            if e.is_zero() {
                                work.remove(&tm);
                            }
                        }
                        None => {
                            work.insert(tm, -delta);
                        }
                    }
                }
                quot.add_term(qm, &qc);
            } else {
                rem.insert(m, c);
            }
        }
        Ok((quot.into_poly(), Poly { terms: rem }))
    }

    /// Exact quotient `self / den`.
    ///
    /// Works in the polynomial ring when both operands are polynomials and
    /// in the Laurent ring otherwise. Fails with `NotDivisible` (carrying the
    /// remainder) when the quotient does not exist.
    pub fn divide_exact(&self, den: &Poly) -> Result<Poly, ExactAlgError> {
        if den.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if let Some(c) = den.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        if self.is_polynomial() && den.is_polynomial() {
            let (q, r) = self.div_rem(den)?;
            return if r.is_zero() { Ok(q) } else { Err(ExactAlgError::NotDivisible { remainder: r }) };
        }
        let shift_num = self.monomial_content();
        let shift_den = den.monomial_content();
        let num = self.mul_monomial(&shift_num.inverse());
        let den_core = den.mul_monomial(&shift_den.inverse());
        let (q, r) = num.div_rem(&den_core)?;
        if !r.is_zero() {
            return Err(ExactAlgError::NotDivisible { remainder: r });
        }
        Ok(q.mul_monomial(&shift_num.div(&shift_den)))
    }

    /// Componentwise minimum exponent over all terms (the largest monomial
    /// factor in the Laurent sense).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Monomial::one() };
        let mut pairs: BTreeMap<Var, Exp> = first.iter().collect();
        let mut seen_all = first.clone();
        for m in it {
            for (v, e) in pairs.iter_mut() {
                *e = (*e).min(m.exponent(*v));
            }
            for (v, e) in m.iter() {
                if !pairs.contains_key(&v) && e < 0 {
                    pairs.insert(v, e);
                }
            }
            seen_all = seen_all.gcd(m);
        }
        // variables absent from some term have exponent 0 there
        Monomial::from_pairs(pairs.into_iter().map(|(v, e)| (v, e.min(seen_all.exponent(v)))))
    }

    /// Multiplicity of `factor` as a divisor (`None` if `self` is zero).
    pub fn vanishing_order(&self, factor: &Poly) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut cur = self.clone();
        let mut k = 0;
        while let Ok(q) = cur.divide_exact(factor) {
            cur = q;
            k += 1;
        }
        Some(k)
    }

    /// Canonical text form: terms in descending canonical order.
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses sums of products such as `x1_1^2 - 1/2*h*x2_1 + 3`.
impl FromStr for Poly {
    type Err = ExactAlgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ExactAlgError::Parse("empty polynomial".into()));
        }
        let mut acc = TermAccumulator::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body
                .char_indices()
                .find(|&(k, c)| (c == '+' || c == '-') && !body[..k].ends_with('^'))
                .map_or(body.len(), |(k, _)| k);
            let (term, tail) = body.split_at(end);
            let mut coeff = Scalar::from_int(sign);
            let mut mono = Monomial::one();
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(ExactAlgError::Parse(format!("empty factor in `{s}`")));
                }
                if factor.as_bytes()[0].is_ascii_digit() {
                    coeff = coeff * factor.parse::<Scalar>()?;
                } else {
                    let (name, e) = match factor.split_once('^') {
                        Some((n, e)) => {
                            (n, e.parse::<Exp>().map_err(|_| ExactAlgError::Parse(format!("bad exponent `{e}`")))?)
                        }
                        None => (factor, 1),
                    };
                    mono = mono.mul(&Monomial::var_pow(name.parse()?, e));
                }
            }
            acc.add_term(mono, &coeff);
            rest = tail;
        }
        Ok(acc.into_poly())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            match terms.get_mut(m) {
                Some(e) => {
                    *e += c;
                    if e.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Poly { terms }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut acc = TermAccumulator::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                acc.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        acc.into_poly()
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc = TermAccumulator::new();
        for p in iter {
            acc.add_poly(&p, &Scalar::one());
        }
        acc.into_poly()
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |a, b| &a * &b)
    }
}
