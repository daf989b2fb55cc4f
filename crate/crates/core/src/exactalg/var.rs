use std::fmt;
use std::str::FromStr;

use super::ExactAlgError;

/// A polynomial indeterminate.
///
/// The derived order is the canonical variable order used everywhere:
/// `h < v < x` variables by `(color, slot) < y` variables by
/// `(root start, root end, slot)`. Roots compare by start then end, which is
/// the positive-root order used for specializations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Hbar,
    V,
    X { color: u8, slot: u8 },
    Y { j: u8, i: u8, slot: u8 },
}

impl Var {
    pub fn x(color: usize, slot: usize) -> Var {
        Var::X { color: small(color), slot: small(slot) }
    }

    pub fn y(j: usize, i: usize, slot: usize) -> Var {
        Var::Y { j: small(j), i: small(i), slot: small(slot) }
    }

    /// Exponents of these variables may be negative in trigonometric mode.
    pub fn is_laurent_capable(self) -> bool {
        matches!(self, Var::V | Var::X { .. })
    }

    pub fn is_x(self) -> bool {
        matches!(self, Var::X { .. })
    }

    pub fn is_y(self) -> bool {
        matches!(self, Var::Y { .. })
    }
}

fn small(k: usize) -> u8 {
    u8::try_from(k).expect("index exceeds variable capacity")
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::Hbar => write!(f, "h"),
            Var::V => write!(f, "v"),
            Var::X { color, slot } => write!(f, "x{color}_{slot}"),
            Var::Y { j, i, slot } => write!(f, "y{j}.{i}_{slot}"),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Var {
    type Err = ExactAlgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactAlgError::Parse(format!("unknown variable `{s}`"));
        let num = |t: &str| t.parse::<u8>().map_err(|_| bad());
        match s {
            "h" => return Ok(Var::Hbar),
            "v" => return Ok(Var::V),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix('x') {
            let (c, r) = rest.split_once('_').ok_or_else(bad)?;
            return Ok(Var::X { color: num(c)?, slot: num(r)? });
        }
        if let Some(rest) = s.strip_prefix('y') {
            let (root, slot) = rest.split_once('_').ok_or_else(bad)?;
            let (j, i) = root.split_once('.').ok_or_else(bad)?;
            return Ok(Var::Y { j: num(j)?, i: num(i)?, slot: num(slot)? });
        }
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_names() {
        let mut vs = vec![Var::y(1, 2, 1), Var::x(2, 1), Var::x(1, 3), Var::V, Var::Hbar, Var::y(1, 1, 2)];
        vs.sort();
        let names: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["h", "v", "x1_3", "x2_1", "y1.1_2", "y1.2_1"]);
        for v in vs {
            assert_eq!(v.to_string().parse::<Var>().unwrap(), v);
        }
        assert!("z1".parse::<Var>().is_err());
    }
}
