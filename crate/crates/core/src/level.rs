//! Multiplicity bounds read off the h-vector alone.
//!
//! For a codimension-3 h-vector with invariants `t, i, j, m` the candidate
//! bracket is
//!
//! ```text
//! t * i * (c+3) / 6  <=  e  <=  m * j * (c+3) / 6
//! ```
//!
//! A positive `f(n)` forces a shift of degree `n` in the second module of the
//! resolution of any algebra with this h-vector, so when the lower bound
//! holds, the lower multiplicity-conjecture bound follows. The upper bound
//! only carries that meaning for level algebras, which cannot be decided from
//! `h`; callers state it through `assume_level`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::compressed::{fl_numbers, recover_socle, SocleRecovery};
use crate::error::{Error, Result};
use crate::hilbert::{invariants, HVector, InvariantSet};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inapplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CaseTag {
    /// Compressed h-vector of a level socle vector.
    #[serde(rename = "COMPRESSED")]
    Compressed,
    /// `h_{c-1} = 3`, `h_c = 2`.
    #[serde(rename = "ENDS_3_2")]
    Ends32,
    #[serde(rename = "H2_LE_4")]
    H2Le4,
    /// `h_{c-1} <= h_c + 1`.
    #[serde(rename = "TAIL_IV")]
    TailIv,
    #[serde(rename = "BEGINS_1345")]
    Begins1345,
    /// Compressed for a non-level socle vector with `r_b = 0`; the lower
    /// bound is known to fail for these.
    #[serde(rename = "EXTREME_NONLEVEL")]
    ExtremeNonlevel,
    /// The upper bound was evaluated without a levelness assertion.
    #[serde(rename = "UPPER_LEVEL_ONLY")]
    UpperLevelOnly,
    /// `h_{c-1} = h_c + 1` with `h_{c-2} <= 3`, outside the finite list of
    /// level h-vectors known to have that tail.
    #[serde(rename = "CONJECTURAL")]
    Conjectural,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Compressed => "COMPRESSED",
            CaseTag::Ends32 => "ENDS_3_2",
            CaseTag::H2Le4 => "H2_LE_4",
            CaseTag::TailIv => "TAIL_IV",
            CaseTag::Begins1345 => "BEGINS_1345",
            CaseTag::ExtremeNonlevel => "EXTREME_NONLEVEL",
            CaseTag::UpperLevelOnly => "UPPER_LEVEL_ONLY",
            CaseTag::Conjectural => "CONJECTURAL",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureBounds {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

fn require_codim3(h: &HVector, what: &'static str) -> Result<()> {
    if h.codimension() != 3 {
        return Err(Error::NotCodimensionThree(what, h.codimension() as usize));
    }
    Ok(())
}

fn bounds_from(inv: &InvariantSet, c: usize) -> ConjectureBounds {
    ConjectureBounds {
        lower: inv.i.map(|i| rational::triple_over_six(inv.t, i, c + 3)),
        upper: inv
            .m
            .zip(inv.j)
            .map(|(m, j)| rational::triple_over_six(m, j, c + 3)),
    }
}

/// `t i (c+3) / 6` and `m j (c+3) / 6`, each absent when an invariant is.
pub fn conjecture_bounds(h: &HVector) -> Result<ConjectureBounds> {
    require_codim3(h, "conjectural bounds")?;
    Ok(bounds_from(&invariants(h), h.socle_degree()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub h: HVector,
    pub e: u64,
    #[serde(flatten)]
    pub inv: InvariantSet,
    #[serde(with = "rational::serde_fraction::option")]
    pub lower: Option<Rational>,
    #[serde(with = "rational::serde_fraction::option")]
    pub upper: Option<Rational>,
    pub lower_holds: Verdict,
    pub upper_holds: Verdict,
    pub lower_sharp: bool,
    pub upper_sharp: bool,
    pub mc_lower_implied: bool,
    pub assume_level: bool,
    pub case_tags: BTreeSet<CaseTag>,
}

impl BoundReport {
    pub fn any_failure(&self) -> bool {
        self.lower_holds == Verdict::Fails || self.upper_holds == Verdict::Fails
    }

    pub fn any_sharp(&self) -> bool {
        self.lower_sharp || self.upper_sharp
    }

    /// Space-separated flag tokens, e.g. `lower:holds upper:holds lower_sharp`.
    pub fn flags_string(&self) -> String {
        let mut out = vec![
            format!("lower:{}", self.lower_holds),
            format!("upper:{}", self.upper_holds),
        ];
        if self.lower_sharp {
            out.push("lower_sharp".into());
        }
        if self.upper_sharp {
            out.push("upper_sharp".into());
        }
        if self.mc_lower_implied {
            out.push("mc_lower_implied".into());
        }
        if self.assume_level {
            out.push("level".into());
        }
        out.join(" ")
    }

    pub fn tags_string(&self) -> String {
        self.case_tags
            .iter()
            .map(|t| t.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub const CSV_HEADER: [&'static str; 10] =
        ["h", "e", "t", "i", "j", "m", "lower", "upper", "flags", "tags"];

    pub fn csv_record(&self) -> [String; 10] {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        let frac = |v: &Option<Rational>| {
            v.as_ref()
                .map(rational::to_fraction_string)
                .unwrap_or_default()
        };
        [
            self.h.to_string(),
            self.e.to_string(),
            self.inv.t.to_string(),
            opt(self.inv.i),
            opt(self.inv.j),
            opt(self.inv.m),
            frac(&self.lower),
            frac(&self.upper),
            self.flags_string(),
            self.tags_string(),
        ]
    }
}

fn verdict(holds: Option<bool>) -> Verdict {
    match holds {
        Some(true) => Verdict::Holds,
        Some(false) => Verdict::Fails,
        None => Verdict::Inapplicable,
    }
}

/// Evaluates both candidate bounds exactly and tags the h-vector with the
/// cases in which they are known to hold.
pub fn check_bounds(h: &HVector, assume_level: bool) -> Result<BoundReport> {
    require_codim3(h, "bound check")?;
    let inv = invariants(h);
    let bounds = bounds_from(&inv, h.socle_degree());
    let e = Rational::from_integer(BigInt::from(h.multiplicity()));

    let lower_holds = verdict(bounds.lower.as_ref().map(|l| l <= &e));
    let upper_holds = verdict(bounds.upper.as_ref().map(|u| &e <= u));
    let lower_sharp = bounds.lower.as_ref() == Some(&e);
    let upper_sharp = bounds.upper.as_ref() == Some(&e);

    let recovery = recover_socle(h)?;
    let mut case_tags = classify_with(h, &recovery);
    if let SocleRecovery::Compressed(s) = &recovery {
        if !s.is_level() && fl_numbers(3, s)?.extremely_compressed() {
            case_tags.insert(CaseTag::ExtremeNonlevel);
        }
    }
    if !assume_level {
        case_tags.insert(CaseTag::UpperLevelOnly);
    }
    if is_unlisted_tail(h) {
        case_tags.insert(CaseTag::Conjectural);
    }

    Ok(BoundReport {
        h: h.clone(),
        e: h.multiplicity(),
        inv,
        lower: bounds.lower,
        upper: bounds.upper,
        lower_holds,
        upper_holds,
        lower_sharp,
        upper_sharp,
        mc_lower_implied: lower_holds == Verdict::Holds,
        assume_level,
        case_tags,
    })
}

/// The structural cases under which the bounds are proven for level algebras.
pub fn classify_37(h: &HVector) -> Result<BTreeSet<CaseTag>> {
    require_codim3(h, "case classification")?;
    Ok(classify_with(h, &recover_socle(h)?))
}

fn classify_with(h: &HVector, recovery: &SocleRecovery) -> BTreeSet<CaseTag> {
    let c = h.socle_degree() as i64;
    let at = |d: i64| h.at(d);
    let mut tags = BTreeSet::new();
    if recovery.socle().is_some_and(|s| s.is_level()) {
        tags.insert(CaseTag::Compressed);
    }
    if at(c - 1) == 3 && at(c) == 2 {
        tags.insert(CaseTag::Ends32);
    }
    if at(2) <= 4 {
        tags.insert(CaseTag::H2Le4);
    }
    if at(c - 1) <= at(c) + 1 {
        tags.insert(CaseTag::TailIv);
    }
    if h.starts_with(&[1, 3, 4, 5]) {
        tags.insert(CaseTag::Begins1345);
    }
    tags
}

/// Level h-vectors with `h_{c-1} = h_c + 1` and `h_{c-2} <= 3`: `(1,3,3,...,3,2)`
/// for any `c >= 2`, `(1,3,4,3)`, `(1,3,5,4)` and `(1,3,6,5)`.
pub fn in_tail_list(h: &HVector) -> bool {
    let e = h.entries();
    let threes_then_two = e.len() >= 3
        && e[0] == 1
        && e[e.len() - 1] == 2
        && e[1..e.len() - 1].iter().all(|&v| v == 3);
    threes_then_two || matches!(e, [1, 3, 4, 3] | [1, 3, 5, 4] | [1, 3, 6, 5])
}

fn is_unlisted_tail(h: &HVector) -> bool {
    let c = h.socle_degree() as i64;
    h.at(c - 1) == h.at(c) + 1 && h.at(c - 2) <= 3 && !in_tail_list(h)
}

/// Extremal shifts of each module of a resolution, supplied externally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftExtremes {
    pub min_shifts: Vec<u64>,
    pub max_shifts: Vec<u64>,
}

/// Multiplicity-conjecture bracket `prod m_i / r!` and `prod M_i / r!`.
pub fn mc_bounds_from_shifts(shifts: &ShiftExtremes) -> Result<(Rational, Rational)> {
    let r = shifts.min_shifts.len();
    if r == 0 || shifts.max_shifts.len() != r {
        return Err(Error::InvalidArgument(format!(
            "need one minimal and one maximal shift per module (got {} and {})",
            r,
            shifts.max_shifts.len()
        )));
    }
    if let Some(k) = (0..r).find(|&k| shifts.min_shifts[k] > shifts.max_shifts[k]) {
        return Err(Error::InvalidArgument(format!(
            "module {}: minimal shift exceeds maximal shift",
            k + 1
        )));
    }
    let fact: BigInt = (1..=r).map(BigInt::from).product();
    let prod = |v: &[u64]| v.iter().map(|&x| BigInt::from(x)).fold(BigInt::one(), |a, b| a * b);
    Ok((
        Rational::new(prod(&shifts.min_shifts), fact.clone()),
        Rational::new(prod(&shifts.max_shifts), fact),
    ))
}
