use std::fmt;

use serde::Serialize;

use super::enumerate::enumerate_osequences;
use crate::compressed::{fl_numbers, CompressedProfile};
use crate::error::{Error, Result};
use crate::hilbert::{HVector, SocleVector};

/// Type-2 level family with plateau value `p`:
/// `(1, 3, 4, ..., p, ..., p, p-1, ..., 3, 2)` of socle degree `c`, where `p`
/// is repeated `c - 2p + 5` times. For `p = 3` this is `(1, 3, ..., 3, 2)`.
///
/// Requires `c >= 2` and `3 <= p <= (c + 4) / 2`.
pub fn family_type2(p: u64, c: usize) -> Result<HVector> {
    if c < 2 {
        return Err(Error::InvalidArgument(format!(
            "type-2 family needs socle degree >= 2, got {c}"
        )));
    }
    if p < 3 || 2 * p > c as u64 + 4 {
        return Err(Error::InvalidArgument(format!(
            "type-2 family needs 3 <= p <= (c+4)/2, got p={p}, c={c}"
        )));
    }
    let mut e = vec![1];
    e.extend(3..p);
    e.extend(std::iter::repeat(p).take(c + 5 - 2 * p as usize));
    e.extend((2..p).rev());
    HVector::new(e)
}

/// Every legal `(p, c, h)` of the type-2 family with `p` in `ps` and
/// `c <= max_c`, ordered by `p` then `c`.
pub fn type2_grid(ps: impl IntoIterator<Item = u64>, max_c: usize) -> Vec<(u64, usize, HVector)> {
    let mut out = Vec::new();
    for p in ps {
        for c in 2..=max_c {
            if let Ok(h) = family_type2(p, c) {
                out.push((p, c, h));
            }
        }
    }
    out
}

/// One entry of the list of h-vectors with `h_2 <= 4` that can occur for
/// level algebras. Open-ended entries are instantiated up to a cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IiiPattern {
    Fixed(Vec<u64>),
    /// `(1, 3, 3, ..., 3, last)`.
    Threes { last: u64 },
    /// All O-sequences starting `(1, 3, 4, 5)`.
    Begins1345,
    /// All O-sequences starting `(1, 3, 4, 4, 4)`. Every later entry is at
    /// most 4 by Macaulay growth.
    Begins13444,
}

impl IiiPattern {
    pub fn is_open_ended(&self) -> bool {
        !matches!(self, IiiPattern::Fixed(_))
    }

    /// Instances with socle degree `<= max_c` and entries `<= max_entry`, in
    /// graded-lex order. `max_entry` only affects [`IiiPattern::Begins1345`].
    pub fn instantiate(&self, max_c: usize, max_entry: u64) -> Vec<HVector> {
        match self {
            IiiPattern::Fixed(e) => {
                let h = HVector::new(e.clone()).expect("fixed list entries are valid");
                if h.socle_degree() <= max_c {
                    vec![h]
                } else {
                    vec![]
                }
            }
            IiiPattern::Threes { last } => {
                let min_c = if *last == 3 { 2 } else { 3 };
                (min_c..=max_c)
                    .map(|c| {
                        let mut e = vec![1];
                        e.extend(std::iter::repeat(3).take(c - 1));
                        e.push(*last);
                        HVector::new(e).expect("valid")
                    })
                    .collect()
            }
            IiiPattern::Begins1345 => {
                enumerate_osequences(max_c, max_entry, Some(&[1, 3, 4, 5])).collect()
            }
            IiiPattern::Begins13444 => {
                enumerate_osequences(max_c, max_entry.min(4), Some(&[1, 3, 4, 4, 4])).collect()
            }
        }
    }
}

impl fmt::Display for IiiPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IiiPattern::Fixed(e) => {
                let s: Vec<String> = e.iter().map(u64::to_string).collect();
                write!(f, "({})", s.join(","))
            }
            IiiPattern::Threes { last } => write!(f, "(1,3,3,...,3,{last})"),
            IiiPattern::Begins1345 => f.write_str("(1,3,4,5,...)"),
            IiiPattern::Begins13444 => f.write_str("(1,3,4,4,4,u,...), u<=4"),
        }
    }
}

/// The possible level h-vectors with `h_1 = 3` and `h_2 <= 4`.
pub fn family_iii_list() -> Vec<IiiPattern> {
    use IiiPattern::*;
    let fixed: [&[u64]; 10] = [
        &[1, 3, 4, 4, 3, 2],
        &[1, 3, 4, 4, 3, 1],
        &[1, 3, 4, 4, 3],
        &[1, 3, 4, 4, 2],
        &[1, 3, 4, 4],
        &[1, 3, 4, 3, 2],
        &[1, 3, 4, 3, 1],
        &[1, 3, 4, 3],
        &[1, 3, 4, 2],
        &[1, 3, 4],
    ];
    let mut out = vec![
        Fixed(vec![1, 3, 1]),
        Fixed(vec![1, 3, 2]),
        Threes { last: 1 },
        Threes { last: 2 },
        Threes { last: 3 },
        Begins1345,
        Begins13444,
    ];
    out.extend(fixed.iter().map(|e| Fixed(e.to_vec())));
    out
}

/// All socle vectors in codimension 3 with socle degree `1..=max_c` and type
/// `<= max_type`, ordered by socle degree then lexicographically.
pub fn socle_vectors(max_c: usize, max_type: u64) -> Vec<SocleVector> {
    fn fill(pos: usize, c: usize, budget: u64, cur: &mut Vec<u64>, out: &mut Vec<SocleVector>) {
        if pos == c {
            for top in 1..=budget {
                cur.push(top);
                out.push(SocleVector::new(cur.clone()).expect("valid socle"));
                cur.pop();
            }
            return;
        }
        for v in 0..budget {
            cur.push(v);
            fill(pos + 1, c, budget - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for c in 1..=max_c {
        let mut cur = vec![0];
        fill(1, c, max_type, &mut cur, &mut out);
    }
    out
}

/// The compressed profiles among [`socle_vectors`]: those whose socle sits
/// at or above the pivot degree.
pub fn compressed_socles(max_c: usize, max_type: u64) -> Vec<CompressedProfile> {
    socle_vectors(max_c, max_type)
        .iter()
        .filter_map(|s| fl_numbers(3, s).ok()?.require_compressed().ok())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilySpec {
    Type2 { p: u64, c: usize },
    /// Instantiations of [`family_iii_list`].
    IiiList { max_c: usize, max_entry: u64 },
    /// The compressed h-vector of the level socle vector of the given type.
    CompressedLevel { c: usize, socle_type: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Vec<HVector>> {
        match *self {
            FamilySpec::Type2 { p, c } => Ok(vec![family_type2(p, c)?]),
            FamilySpec::IiiList { max_c, max_entry } => Ok(family_iii_list()
                .iter()
                .flat_map(|p| p.instantiate(max_c, max_entry))
                .collect()),
            FamilySpec::CompressedLevel { c, socle_type } => {
                let s = SocleVector::level(c, socle_type)?;
                Ok(vec![fl_numbers(3, &s)?.upper_bound().clone()])
            }
        }
    }
}
