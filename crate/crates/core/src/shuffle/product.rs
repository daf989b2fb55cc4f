use rayon::prelude::*;

use super::{Flavor, ShuffleElement, ShuffleError};
use crate::exactalg::{Poly, Scalar, TermAccumulator, Var};
use crate::root_data::DynkinDiagram;

/// Overall scalar convention of the shuffle product.
///
/// `CosetSum` sums over minimal shuffle representatives, i.e. `1/(k! l!)`
/// times the full supersymmetrization; it is associative. `Averaged` is
/// `k! l! / m!` times the full supersymmetrization; it differs from
/// `CosetSum` by `Π_i (k_i! l_i!)^2 / m_i!` and is not associative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    #[default]
    CosetSum,
    Averaged,
}

pub fn star(f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
    star_with(f, g, Normalization::CosetSum)
}

/// `[F, G] = F*G - (-1)^{|F||G|} G*F`.
pub fn superbracket(f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
    let fg = star(f, g)?;
    let gf = star(g, f)?;
    let sign = if f.parity() * g.parity() == 1 { 1 } else { -1 };
    Ok(fg.with_numerator(&fg.numerator + &gf.numerator.scale(&Scalar::from_int(sign))))
}

/// Numerator of `ζ_{i,i'}` at the pair `(a, b)`; `a` comes from the left factor.
fn zeta_numerator(d: &DynkinDiagram, flavor: Flavor, i: usize, ip: usize, a: &Poly, b: &Poly) -> Poly {
    match flavor {
        Flavor::Rational => d.zeta_rational(i, ip).numerator(a, b),
        Flavor::Trig => d.zeta_trig(i, ip).numerator(a, b),
    }
}

fn x(i: usize, r: usize) -> Poly {
    Poly::var(Var::x(i, r))
}

/// `Π_{a <= r < s <= b} (x_{i,r} - x_{i,s})` as a list of linear factors.
fn vandermonde_factors(i: usize, lo: usize, hi: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    for r in lo..=hi {
        for s in r + 1..=hi {
            out.push(&x(i, r) - &x(i, s));
        }
    }
    out
}

struct Prepared {
    degree: Vec<usize>,
    /// ζ numerators of the cross pairs, the adjacent orientation signs and the
    /// left/right Vandermonde factors of even colors.
    body: Poly,
    /// Vandermonde of all slots of each even color; the final divisor.
    divisors: Vec<Poly>,
}

fn shift_right(g: &ShuffleElement, k: &[usize]) -> Poly {
    g.numerator.rename(|v| match v {
        Var::X { color, slot } => Var::x(color as usize, slot as usize + k[color as usize - 1]),
        other => other,
    })
}

/// Cross ζ numerators with the orientation fix for `i' = i - 1`; same-color
/// even pairs are included (their poles are handled separately).
fn cross_numerators(d: &DynkinDiagram, flavor: Flavor, k: &[usize], l: &[usize]) -> Poly {
    let mut sign = 1i64;
    let mut body = Poly::one();
    for i in d.colors() {
        for ip in d.colors() {
            let (ki, lip) = (k[i - 1], l[ip - 1]);
            if ki == 0 || lip == 0 {
                continue;
            }
            let c = d.cartan(i, ip);
            if c == 0 {
                if d.zeta_sign(i, ip) == -1 && (ki * lip) % 2 == 1 {
                    sign = -sign;
                }
                continue;
            }
            if ip + 1 == i && (ki * lip) % 2 == 1 {
                sign = -sign;
            }
            for r in 1..=ki {
                for s in 1..=lip {
                    body = &body * &zeta_numerator(d, flavor, i, ip, &x(i, r), &x(ip, k[ip - 1] + s));
                }
            }
        }
    }
    body.scale(&Scalar::from_int(sign))
}

fn prepare(f: &ShuffleElement, g: &ShuffleElement) -> Prepared {
    let d = &f.diagram;
    let (k, l) = (&f.degree, &g.degree);
    let degree: Vec<usize> = k.iter().zip(l).map(|(a, b)| a + b).collect();
    let mut body = &f.numerator * &shift_right(g, k);
    if !body.is_zero() {
        body = &body * &cross_numerators(d, f.flavor, k, l);
    }
    let mut divisors = Vec::new();
    for i in d.colors() {
        if d.is_odd(i) || k[i - 1] == 0 || l[i - 1] == 0 {
            continue;
        }
        let m = degree[i - 1];
        for fac in vandermonde_factors(i, 1, k[i - 1]).into_iter().chain(vandermonde_factors(i, k[i - 1] + 1, m)) {
            body = &body * &fac;
        }
        divisors.extend(vandermonde_factors(i, 1, m));
    }
    Prepared { degree, body, divisors }
}

/// All `k`-subsets of `1..=m` in lexicographic order.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..=m {
            if m - s + 1 < k - cur.len() {
                break;
            }
            cur.push(s);
            go(s + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, m, k, &mut Vec::new(), &mut out);
    out
}

/// Slot map of the shuffle whose left block lands on `left`, and its sign.
fn shuffle_map(m: usize, left: &[usize]) -> (Vec<u8>, bool) {
    let mut map = vec![0u8; m + 1];
    let mut right = (1..=m).filter(|s| !left.contains(s));
    for (a, &s) in left.iter().enumerate() {
        map[a + 1] = s as u8;
    }
    for slot in &mut map[left.len() + 1..=m] {
        *slot = right.next().expect("complement size") as u8;
    }
    let inversions: usize = left.iter().enumerate().map(|(a, &s)| s - (a + 1)).sum();
    (map, inversions % 2 == 1)
}

/// Per-color slot maps and signs of one element of a product of permutation
/// families, indexed in mixed radix.
struct Combos {
    per_color: Vec<Vec<(Vec<u8>, bool)>>,
    total: usize,
}

impl Combos {
    fn get(&self, mut idx: usize) -> (Vec<&[u8]>, bool) {
        let mut maps = Vec::with_capacity(self.per_color.len());
        let mut odd = false;
        for fam in &self.per_color {
            let (m, s) = &fam[idx % fam.len()];
            idx /= fam.len();
            maps.push(m.as_slice());
            odd ^= *s;
        }
        (maps, odd)
    }
}

fn apply(p: &Poly, maps: &[&[u8]]) -> Poly {
    p.rename(|v| match v {
        Var::X { color, slot } => Var::X { color, slot: maps[color as usize - 1][slot as usize] },
        other => other,
    })
}

/// Sums `±ρ(body)` over the index range in parallel; exact addition makes the
/// result independent of the split.
fn parallel_sum(n: usize, term: impl Fn(usize) -> Option<(Poly, bool)> + Sync) -> Poly {
    let chunk = n.div_ceil(rayon::current_num_threads().max(1) * 4).max(1);
    let parts: Vec<Poly> = (0..n)
        .collect::<Vec<_>>()
        .par_chunks(chunk)
        .map(|idxs| {
            let mut acc = TermAccumulator::new();
            let (one, minus) = (Scalar::one(), Scalar::from_int(-1));
            for &i in idxs {
                if let Some((p, neg)) = term(i) {
                    acc.add_poly(&p, if neg { &minus } else { &one });
                }
            }
            acc.into_poly()
        })
        .collect();
    parts.into_iter().sum()
}

fn divide_all(mut num: Poly, divisors: &[Poly]) -> Result<Poly, ShuffleError> {
    for dv in divisors {
        if num.is_zero() {
            break;
        }
        num = num.divide_exact(dv)?;
    }
    Ok(num)
}

fn factorial_ratio(k: &[usize], l: &[usize], norm: Normalization) -> Scalar {
    match norm {
        Normalization::CosetSum => Scalar::one(),
        Normalization::Averaged => k.iter().zip(l).fold(Scalar::one(), |acc, (&a, &b)| {
            let kl = Scalar::factorial(a) * Scalar::factorial(b);
            acc * (&kl * &kl) / Scalar::factorial(a + b)
        }),
    }
}

/// The shuffle product, summed over minimal shuffle coset representatives.
pub fn star_with(f: &ShuffleElement, g: &ShuffleElement, norm: Normalization) -> Result<ShuffleElement, ShuffleError> {
    f.check_compatible(g)?;
    let prep = prepare(f, g);
    let out = |num: Poly| ShuffleElement::from_parts(f.diagram.clone(), prep.degree.clone(), num, f.flavor);
    if prep.body.is_zero() {
        return Ok(out(Poly::zero()));
    }
    let per_color: Vec<Vec<(Vec<u8>, bool)>> = f
        .degree
        .iter()
        .zip(&prep.degree)
        .map(|(&k, &m)| subsets(m, k).iter().map(|s| shuffle_map(m, s)).collect())
        .collect();
    let total = per_color.iter().map(Vec::len).product();
    let combos = Combos { per_color, total };
    let sum = parallel_sum(combos.total, |idx| {
        let (maps, neg) = combos.get(idx);
        Some((apply(&prep.body, &maps), neg))
    });
    let num = divide_all(sum, &prep.divisors)?;
    Ok(out(num.scale(&factorial_ratio(&f.degree, &g.degree, norm))))
}

/// Literal full supersymmetrization over `Π_i S_{m_i}`; test oracle.
pub fn star_naive(f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
    star_naive_with(f, g, Normalization::CosetSum)
}

fn permutations(m: usize) -> Vec<(Vec<u8>, bool)> {
    fn go(cur: &mut Vec<u8>, used: &mut Vec<bool>, m: usize, out: &mut Vec<Vec<u8>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for s in 1..=m {
            if !used[s] {
                used[s] = true;
                cur.push(s as u8);
                go(cur, used, m, out);
                cur.pop();
                used[s] = false;
            }
        }
    }
    let mut perms = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m + 1], m, &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inv = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
            let mut map = vec![0u8];
            map.extend(p);
            (map, inv % 2 == 1)
        })
        .collect()
}

pub fn star_naive_with(
    f: &ShuffleElement,
    g: &ShuffleElement,
    norm: Normalization,
) -> Result<ShuffleElement, ShuffleError> {
    f.check_compatible(g)?;
    let d = &f.diagram;
    let (k, l) = (&f.degree, &g.degree);
    let degree: Vec<usize> = k.iter().zip(l).map(|(a, b)| a + b).collect();
    let q = &(&f.numerator * &shift_right(g, k)) * &cross_numerators(d, f.flavor, k, l);
    // same-color even poles of the cross ζ factors, and the full Vandermonde
    let mut poles = Poly::one();
    let mut vdm = Poly::one();
    let mut vdm_factors = Vec::new();
    for i in d.colors().filter(|&i| !d.is_odd(i)) {
        for r in 1..=k[i - 1] {
            for s in k[i - 1] + 1..=degree[i - 1] {
                poles = &poles * &(&x(i, r) - &x(i, s));
            }
        }
        for fac in vandermonde_factors(i, 1, degree[i - 1]) {
            vdm = &vdm * &fac;
            vdm_factors.push(fac);
        }
    }
    let per_color: Vec<Vec<(Vec<u8>, bool)>> = degree.iter().map(|&m| permutations(m)).collect();
    let total = per_color.iter().map(Vec::len).product();
    let combos = Combos { per_color, total };
    let odd: Vec<bool> = d.colors().map(|i| d.is_odd(i)).collect();
    let sum = parallel_sum(combos.total, |idx| {
        let mut rest = idx;
        let mut maps = Vec::with_capacity(odd.len());
        let mut neg = false;
        for (c, fam) in combos.per_color.iter().enumerate() {
            let (m, s) = &fam[rest % fam.len()];
            rest /= fam.len();
            maps.push(m.as_slice());
            if odd[c] {
                neg ^= *s;
            }
        }
        let cleared = vdm.divide_exact(&apply(&poles, &maps)).expect("a Vandermonde product is divisible by its own factors");
        Some((&apply(&q, &maps) * &cleared, neg))
    });
    let num = divide_all(sum, &vdm_factors)?;
    let scale = match norm {
        Normalization::CosetSum => k.iter().zip(l).fold(Scalar::one(), |acc, (&a, &b)| {
            acc / (Scalar::factorial(a) * Scalar::factorial(b))
        }),
        Normalization::Averaged => k.iter().zip(l).fold(Scalar::one(), |acc, (&a, &b)| {
            acc * Scalar::factorial(a) * Scalar::factorial(b) / Scalar::factorial(a + b)
        }),
    };
    Ok(ShuffleElement::from_parts(d.clone(), degree, num.scale(&scale), f.flavor))
}
