//! Vertex labels of generated instances and their text form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Gadget role of a generated vertex. Indices are stored 0-based and written
/// 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// `h+`
    HPlus,
    /// `h-`
    HMinus,
    /// `h`
    Hub,
    /// `u`
    U,
    /// `q`
    Q,
    /// `y.<l>`
    Selector(usize),
    /// `c.<j>+`
    ClausePlus(usize),
    /// `c.<j>-`
    ClauseMinus(usize),
    /// `x.<i>`
    Var(usize),
    /// `x.<i>+`
    Pos(usize),
    /// `x.<i>-`
    Neg(usize),
    /// `x.<i>*`
    Star(usize),
    /// `v.<i>`
    Ring(usize),
    /// `u.<i>`
    Pendant(usize),
    /// `cyc.<w>.<t>`
    Cycle(usize, usize),
    /// `path.<w>.<u>.<t>`
    Path(usize, usize, usize),
    /// `vw.<w>.<u>`
    Port(usize, usize),
    /// `vert.<w>`
    Vert(usize),
    /// `pair.<w>`
    Pair(usize),
    /// `s.<u>`
    Element(usize),
    /// `set.<j>`
    Set(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Label::*;
        match *self {
            HPlus => write!(f, "h+"),
            HMinus => write!(f, "h-"),
            Hub => write!(f, "h"),
            U => write!(f, "u"),
            Q => write!(f, "q"),
            Selector(l) => write!(f, "y.{}", l + 1),
            ClausePlus(j) => write!(f, "c.{}+", j + 1),
            ClauseMinus(j) => write!(f, "c.{}-", j + 1),
            Var(i) => write!(f, "x.{}", i + 1),
            Pos(i) => write!(f, "x.{}+", i + 1),
            Neg(i) => write!(f, "x.{}-", i + 1),
            Star(i) => write!(f, "x.{}*", i + 1),
            Ring(i) => write!(f, "v.{}", i + 1),
            Pendant(i) => write!(f, "u.{}", i + 1),
            Cycle(w, t) => write!(f, "cyc.{}.{}", w + 1, t + 1),
            Path(w, u, t) => write!(f, "path.{}.{}.{}", w + 1, u + 1, t + 1),
            Port(w, u) => write!(f, "vw.{}.{}", w + 1, u + 1),
            Vert(w) => write!(f, "vert.{}", w + 1),
            Pair(w) => write!(f, "pair.{}", w + 1),
            Element(u) => write!(f, "s.{}", u + 1),
            Set(j) => write!(f, "set.{}", j + 1),
        }
    }
}

fn bad(s: &str) -> Error {
    Error::Parse {
        line: 0,
        msg: format!("unknown label {s:?}"),
    }
}

fn index(s: &str, whole: &str) -> Result<usize> {
    match s.parse::<usize>() {
        Ok(x) if x >= 1 => Ok(x - 1),
        _ => Err(bad(whole)),
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use Label::*;
        match s {
            "h+" => return Ok(HPlus),
            "h-" => return Ok(HMinus),
            "h" => return Ok(Hub),
            "u" => return Ok(U),
            "q" => return Ok(Q),
            _ => {}
        }
        let (head, rest) = s.split_once('.').ok_or_else(|| bad(s))?;
        let parts: Vec<&str> = rest.split('.').collect();
        let one = |ctor: fn(usize) -> Label| -> Result<Label> {
            match parts.as_slice() {
                [a] => Ok(ctor(index(a, s)?)),
                _ => Err(bad(s)),
            }
        };
        match head {
            "y" => one(Selector),
            "v" => one(Ring),
            "u" => one(Pendant),
            "vert" => one(Vert),
            "pair" => one(Pair),
            "s" => one(Element),
            "set" => one(Set),
            "cyc" => match parts.as_slice() {
                [w, t] => Ok(Cycle(index(w, s)?, index(t, s)?)),
                _ => Err(bad(s)),
            },
            "vw" => match parts.as_slice() {
                [w, u] => Ok(Port(index(w, s)?, index(u, s)?)),
                _ => Err(bad(s)),
            },
            "path" => match parts.as_slice() {
                [w, u, t] => Ok(Path(index(w, s)?, index(u, s)?, index(t, s)?)),
                _ => Err(bad(s)),
            },
            "c" | "x" => {
                let [body] = parts.as_slice() else {
                    return Err(bad(s));
                };
                let (num, suffix) = body.split_at(body.trim_end_matches(['+', '-', '*']).len());
                let i = index(num, s)?;
                match (head, suffix) {
                    ("c", "+") => Ok(ClausePlus(i)),
                    ("c", "-") => Ok(ClauseMinus(i)),
                    ("x", "") => Ok(Var(i)),
                    ("x", "+") => Ok(Pos(i)),
                    ("x", "-") => Ok(Neg(i)),
                    ("x", "*") => Ok(Star(i)),
                    _ => Err(bad(s)),
                }
            }
            _ => Err(bad(s)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        use Label::*;
        let all = [
            HPlus,
            HMinus,
            Hub,
            U,
            Q,
            Selector(0),
            ClausePlus(3),
            ClauseMinus(0),
            Var(9),
            Pos(1),
            Neg(2),
            Star(4),
            Ring(0),
            Pendant(7),
            Cycle(2, 19),
            Path(0, 1, 5),
            Port(1, 0),
            Vert(3),
            Pair(3),
            Element(6),
            Set(4),
        ];
        for l in all {
            assert_eq!(l.to_string().parse::<Label>().unwrap(), l);
        }
        assert_eq!(ClausePlus(3).to_string(), "c.4+");
        assert_eq!(Path(0, 1, 5).to_string(), "path.1.2.6");
    }

    #[test]
    fn rejects_junk() {
        for s in ["", "x", "x.0", "x.1?", "c.2", "cyc.1", "path.1.2", "z.1", "y.-1"] {
            assert!(s.parse::<Label>().is_err(), "{s}");
        }
    }
}
