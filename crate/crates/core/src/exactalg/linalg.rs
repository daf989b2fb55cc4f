use std::collections::BTreeMap;
use std::fmt;

use super::{ExactAlgError, Poly, Scalar};

/// A quotient `num / den` of polynomials. Not reduced by gcd; the quotient is
/// collapsed to a polynomial whenever the division happens to be exact.
#[derive(Clone)]
pub struct RatFn {
    pub num: Poly,
    pub den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactAlgError> {
        if den.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        Ok(match num.divide_exact(&den) {
            Ok(q) => RatFn { num: q, den: Poly::one() },
            Err(_) => RatFn { num, den },
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFn {}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolveReport {
    pub rank: usize,
    pub consistent: bool,
    /// One particular solution (free unknowns set to zero) when consistent.
    pub solution: Option<Vec<RatFn>>,
}

/// Solves `rows · x = rhs` over the fraction field of the coefficient ring by
/// fraction-free Gauss-Jordan elimination; every intermediate division is by
/// the previous pivot and is exact.
pub fn solve_linear(rows: &[Vec<Poly>], rhs: &[Poly]) -> Result<LinearSolveReport, ExactAlgError> {
    if rows.len() != rhs.len() {
        return Err(ExactAlgError::Dimension(format!("{} rows but {} right-hand sides", rows.len(), rhs.len())));
    }
    let ncols = rows.first().map_or(0, Vec::len);
    if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
        return Err(ExactAlgError::Dimension(format!("ragged row of length {} (expected {ncols})", r.len())));
    }
    let mut a: Vec<Vec<Poly>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let m = a.len();
    let mut prev = Poly::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let piv = a[rank][c].clone();
        for r in 0..m {
            if r == rank {
                continue;
            }
            let factor = a[r][c].clone();
            for k in 0..=ncols {
                if k == c {
                    continue;
                }
                let t = &(&piv * &a[r][k]) - &(&factor * &a[rank][k]);
                a[r][k] = t.divide_exact(&prev)?;
            }
            a[r][c] = Poly::zero();
        }
        pivots.push(c);
        prev = piv;
        rank += 1;
    }
    let consistent = (rank..m).all(|r| a[r][ncols].is_zero());
    let solution = consistent.then(|| -> Result<Vec<RatFn>, ExactAlgError> {
        let mut x = vec![RatFn::from_poly(Poly::zero()); ncols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = RatFn::new(a[r][ncols].clone(), a[r][c].clone())?;
        }
        Ok(x)
    });
    Ok(LinearSolveReport { rank, consistent, solution: solution.transpose()? })
}

/// Incremental row echelon form over ℚ for sparse vectors stored as
/// polynomials (each monomial is a coordinate). Remembers how every basis row
/// is expressed through the inserted vectors, so membership queries return
/// explicit coefficients.
#[derive(Default, Clone)]
pub struct QEchelon {
    rows: BTreeMap<super::Monomial, (Poly, BTreeMap<usize, Scalar>)>,
    inserted: usize,
}

impl QEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors inserted so far; the next insert gets this index.
    pub fn len(&self) -> usize {
        self.inserted
    }

    pub fn is_empty(&self) -> bool {
        self.inserted == 0
    }

    fn reduce(&self, v: &Poly) -> (Poly, BTreeMap<usize, Scalar>) {
        let mut cur = v.clone();
        let mut combo: BTreeMap<usize, Scalar> = BTreeMap::new();
        let mut bound: Option<super::Monomial> = None;
        loop {
            let next = match &bound {
                None => cur.leading_term().map(|(m, c)| (m.clone(), c.clone())),
                Some(b) => cur.terms().rev().find(|(m, _)| *m < b).map(|(m, c)| (m.clone(), c.clone())),
            };
            let Some((m, c)) = next else { break };
            if let Some((row, rc)) = self.rows.get(&m) {
                cur = &cur - &row.scale(&c);
                for (k, s) in rc {
                    let e = combo.entry(*k).or_default();
                    *e += &(s * &c);
                }
            } else {
                bound = Some(m);
            }
        }
        combo.retain(|_, s| !s.is_zero());
        (cur, combo)
    }

    /// Inserts a vector; returns `true` if it raised the rank.
    pub fn insert(&mut self, v: &Poly) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (res, combo) = self.reduce(v);
        let Some((lead, lc)) = res.leading_term().map(|(m, c)| (m.clone(), c.clone())) else {
            return false;
        };
        let inv = lc.recip();
        let mut rc: BTreeMap<usize, Scalar> = combo.into_iter().map(|(k, s)| (k, -(s * &inv))).collect();
        rc.insert(idx, inv.clone());
        self.rows.insert(lead, (res.scale(&inv), rc));
        true
    }

    /// Coefficients `c` with `target = Σ c[k] · inserted[k]`, if any exist.
    pub fn express(&self, target: &Poly) -> Option<BTreeMap<usize, Scalar>> {
        let (res, combo) = self.reduce(target);
        res.is_zero().then_some(combo)
    }
}
