//! h-vectors and socle vectors, binomial and Macaulay-growth machinery, and
//! the f-profile `f(n) = h_n - 3h_{n-1} + 3h_{n-2} - h_{n-3}` together with
//! the extremal invariants `t`, `i`, `j`, `m` read off from it.
//!
//! Entries are stored as `u64`; every quantity derived from them is computed
//! in a type wide enough that it cannot overflow (`i128` for profile values,
//! [`BigUint`] for binomials). Nothing here uses floating point.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `N(r, d)`: the number of monomials of degree `d` in `r` variables.
pub fn dim_n(r: usize, d: usize) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::ZeroCodimension);
    }
    Ok(binom((r - 1 + d) as u64, d as u64))
}

/// `N(r, d)` as an `i128`, with `N(r, d) = 0` for negative `d`.
pub(crate) fn dim_n_i128(r: usize, d: i64) -> Result<i128> {
    if d < 0 {
        return Ok(0);
    }
    dim_n(r, d as usize)?
        .to_i128()
        .ok_or(Error::Overflow("N(r, d)"))
}

/// The `d`-th Macaulay representation `a = C(k_d, d) + C(k_{d-1}, d-1) + ...`
/// with `k_d > k_{d-1} > ... >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    degree: usize,
    /// `(k_idx, idx)` pairs, `idx` strictly decreasing from `degree`.
    terms: Vec<(u64, usize)>,
}

impl MacaulayRep {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[(u64, usize)] {
        &self.terms
    }

    /// The upper indices `k_d, k_{d-1}, ...` in order.
    pub fn indices(&self) -> Vec<u64> {
        self.terms.iter().map(|&(k, _)| k).collect()
    }

    /// Re-sums the representation.
    pub fn value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|&(k, idx)| binom(k, idx as u64))
            .sum()
    }

    /// `a^<d> = sum C(k_idx + 1, idx + 1)`.
    pub fn growth(&self) -> BigUint {
        self.terms
            .iter()
            .map(|&(k, idx)| binom(k, idx as u64) * (BigUint::from(k) + 1u32) / (idx + 1))
            .sum()
    }
}

/// Greedy `d`-th Macaulay representation of `a`. Requires `a >= 1`, `d >= 1`.
pub fn macaulay_rep(a: u64, d: usize) -> Result<MacaulayRep> {
    if a == 0 || d == 0 {
        return Err(Error::InvalidArgument(format!(
            "Macaulay representation needs a >= 1 and d >= 1 (got a = {a}, d = {d})"
        )));
    }
    let mut rem = BigUint::from(a);
    let mut terms = Vec::new();
    let mut idx = d;
    while idx >= 1 && !rem.is_zero() {
        let k = largest_k_with_binom_at_most(&rem, idx);
        rem -= binom(k, idx as u64);
        terms.push((k, idx));
        idx -= 1;
    }
    Ok(MacaulayRep { degree: d, terms })
}

/// Largest `k >= idx` with `C(k, idx) <= rem`, for `rem >= 1`, `idx >= 1`.
fn largest_k_with_binom_at_most(rem: &BigUint, idx: usize) -> u64 {
    let idx_u = idx as u64;
    // C(rem + idx, idx) > rem, so the answer lies in [idx, rem + idx - 1].
    let rem_u = rem.to_u64().unwrap_or(u64::MAX);
    let mut lo = idx_u;
    let mut hi = idx_u.saturating_add(rem_u);
    if &binom(hi, idx_u) <= rem {
        return hi;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if &binom(mid, idx_u) <= rem {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Macaulay's bound `a^<d>` on `h_{d+1}` given `h_d = a`. `a = 0` gives 0.
pub fn macaulay_growth(a: u64, d: usize) -> Result<u128> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "Macaulay growth is unrestricted in degree 0".into(),
        ));
    }
    if a == 0 {
        return Ok(0);
    }
    macaulay_rep(a, d)?
        .growth()
        .to_u128()
        .ok_or(Error::Overflow("Macaulay growth"))
}

/// Whether a raw sequence is an O-sequence: `h_0 = 1` and
/// `h_{d+1} <= h_d^<d>` for every `d >= 1`.
pub fn is_o_sequence_entries(entries: &[u64]) -> bool {
    if entries.first() != Some(&1) {
        return false;
    }
    entries.windows(2).enumerate().skip(1).all(|(d, w)| {
        match macaulay_growth(w[0], d) {
            Ok(bound) => u128::from(w[1]) <= bound,
            Err(_) => false,
        }
    })
}

pub fn is_o_sequence(h: &HVector) -> bool {
    is_o_sequence_entries(&h.entries)
}

fn parse_int_list(s: &str, what: &'static str) -> Result<Vec<u64>> {
    let err = |reason: String| Error::Parse {
        what,
        input: s.to_string(),
        reason,
    };
    let mut body = s.trim();
    if let Some(inner) = body.strip_prefix('(') {
        body = inner
            .strip_suffix(')')
            .ok_or_else(|| err("unbalanced parenthesis".into()))?;
    } else if body.ends_with(')') {
        return Err(err("unbalanced parenthesis".into()));
    }
    if body.trim().is_empty() {
        return Err(err("empty list".into()));
    }
    body.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u64>()
                .map_err(|_| err(format!("{tok:?} is not a nonnegative integer")))
        })
        .collect()
}

fn join_entries(entries: &[u64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (k, v) in entries.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// The h-vector `(h_0 = 1, h_1, ..., h_c)` of a standard graded artinian
/// algebra, with `h_c > 0`.
///
/// Construction trims trailing zeros and rejects a zero followed by a
/// positive entry, which no Hilbert function of a standard graded algebra
/// can have.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct HVector {
    entries: Vec<u64>,
    multiplicity: u64,
}

impl HVector {
    pub fn new(mut entries: Vec<u64>) -> Result<Self> {
        while entries.len() > 1 && entries.last() == Some(&0) {
            entries.pop();
        }
        match entries.first() {
            None => return Err(Error::InvalidHVector("empty sequence".into())),
            Some(&1) => {}
            Some(&h0) => {
                return Err(Error::InvalidHVector(format!("h_0 must be 1, got {h0}")))
            }
        }
        if let Some(z) = entries.iter().position(|&v| v == 0) {
            return Err(Error::InvalidHVector(format!(
                "h_{z} = 0 is followed by a positive entry"
            )));
        }
        let multiplicity = entries
            .iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(v))
            .ok_or(Error::Overflow("multiplicity"))?;
        Ok(HVector {
            entries,
            multiplicity,
        })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Socle degree `c`, the last index with a positive entry.
    pub fn socle_degree(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// `h_1`, the codimension (0 for the trivial vector `(1)`).
    pub fn codimension(&self) -> u64 {
        self.at(1)
    }

    /// `h_d` extended by zero outside `0..=c`.
    pub fn at(&self, d: i64) -> u64 {
        if d < 0 {
            0
        } else {
            self.entries.get(d as usize).copied().unwrap_or(0)
        }
    }

    pub fn starts_with(&self, prefix: &[u64]) -> bool {
        self.entries.starts_with(prefix)
    }
}

impl TryFrom<Vec<u64>> for HVector {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        HVector::new(v)
    }
}

impl From<HVector> for Vec<u64> {
    fn from(h: HVector) -> Self {
        h.entries
    }
}

impl FromStr for HVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HVector::new(parse_int_list(s, "h-vector")?)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join_entries(&self.entries, f)
    }
}

/// Graded-lex: shorter vectors first, then lexicographic on entries.
impl Ord for HVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries
            .len()
            .cmp(&other.entries.len())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for HVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degreewise socle dimensions `(s_0 = 0, s_1, ..., s_c)` with `s_c > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct SocleVector {
    entries: Vec<u64>,
}

impl SocleVector {
    pub fn new(mut entries: Vec<u64>) -> Result<Self> {
        while entries.len() > 1 && entries.last() == Some(&0) {
            entries.pop();
        }
        if entries.len() < 2 {
            return Err(Error::InvalidSocle(
                "needs a positive entry in some degree c >= 1".into(),
            ));
        }
        if entries[0] != 0 {
            return Err(Error::InvalidSocle(format!(
                "s_0 must be 0, got {}",
                entries[0]
            )));
        }
        Ok(SocleVector { entries })
    }

    /// The level socle vector `(0, ..., 0, s_c)`.
    pub fn level(c: usize, top: u64) -> Result<Self> {
        if c == 0 || top == 0 {
            return Err(Error::InvalidSocle(
                "level socle needs c >= 1 and s_c >= 1".into(),
            ));
        }
        let mut entries = vec![0; c + 1];
        entries[c] = top;
        SocleVector::new(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn socle_degree(&self) -> usize {
        self.entries.len() - 1
    }

    /// Smallest degree carrying socle.
    pub fn first_degree(&self) -> usize {
        self.entries
            .iter()
            .position(|&v| v > 0)
            .expect("s_c > 0 by construction")
    }

    pub fn socle_type(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn is_level(&self) -> bool {
        self.first_degree() == self.socle_degree()
    }

    pub fn at(&self, d: usize) -> u64 {
        self.entries.get(d).copied().unwrap_or(0)
    }
}

impl TryFrom<Vec<u64>> for SocleVector {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        SocleVector::new(v)
    }
}

impl From<SocleVector> for Vec<u64> {
    fn from(s: SocleVector) -> Self {
        s.entries
    }
}

impl FromStr for SocleVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SocleVector::new(parse_int_list(s, "socle vector")?)
    }
}

impl fmt::Display for SocleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join_entries(&self.entries, f)
    }
}

/// Coefficients `f(1), ..., f(c+3)` of `h(z)(1 - z)^3 - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FProfile {
    #[serde(skip)]
    socle_degree: usize,
    values: Vec<i128>,
}

impl FProfile {
    pub fn socle_degree(&self) -> usize {
        self.socle_degree
    }

    /// `f(n)` for `1 <= n <= c+3`, zero elsewhere.
    pub fn value(&self, n: usize) -> i128 {
        if n == 0 {
            0
        } else {
            self.values.get(n - 1).copied().unwrap_or(0)
        }
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i128)> + '_ {
        self.values.iter().enumerate().map(|(k, &v)| (k + 1, v))
    }

    /// Falling-factorial moment `sum n(n-1)...(n-k+1) f(n)`.
    pub fn moment(&self, k: u32) -> i128 {
        self.iter()
            .map(|(n, v)| {
                let w: i128 = (0..k as i128).map(|s| n as i128 - s).product();
                w * v
            })
            .sum()
    }
}

pub fn f_profile(h: &HVector) -> FProfile {
    let c = h.socle_degree();
    let hh = |d: i64| i128::from(h.at(d));
    let values = (1..=c as i64 + 3)
        .map(|n| hh(n) - 3 * hh(n - 1) + 3 * hh(n - 2) - hh(n - 3))
        .collect();
    FProfile {
        socle_degree: c,
        values,
    }
}

/// The extremal indices of the f-profile.
///
/// * `t`: smallest `n` with `f(n) < 0` (the initial degree)
/// * `i`: smallest `n` with `f(n) > 0`
/// * `j`: largest `n` with `f(n) > 0`
/// * `m`: largest `n < c + 3` with `f(n) < 0`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSet {
    pub t: usize,
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub m: Option<usize>,
    pub profile: FProfile,
}

pub fn invariants(h: &HVector) -> InvariantSet {
    let profile = f_profile(h);
    let c = h.socle_degree();
    let t = profile
        .iter()
        .find(|&(_, v)| v < 0)
        .map(|(n, _)| n)
        .expect("the f-profile sums to -1, so some value is negative");
    let i = profile.iter().find(|&(_, v)| v > 0).map(|(n, _)| n);
    let j = profile.iter().filter(|&(_, v)| v > 0).map(|(n, _)| n).last();
    let m = profile
        .iter()
        .filter(|&(n, v)| n < c + 3 && v < 0)
        .map(|(n, _)| n)
        .last();
    InvariantSet {
        t,
        i,
        j,
        m,
        profile,
    }
}

pub fn multiplicity(h: &HVector) -> u64 {
    h.multiplicity()
}

/// Recovers `e` from the third falling moment: `e = -(1/6) sum n(n-1)(n-2) f(n)`.
pub fn multiplicity_from_profile(p: &FProfile) -> Result<u64> {
    let third = p.moment(3);
    if third % 6 != 0 {
        return Err(Error::CorruptProfile(format!(
            "third moment {third} is not divisible by 6"
        )));
    }
    let e = -third / 6;
    if e <= 0 {
        return Err(Error::CorruptProfile(format!(
            "recovered multiplicity {e} is not positive"
        )));
    }
    u64::try_from(e).map_err(|_| Error::Overflow("multiplicity"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hv(s: &str) -> HVector {
        s.parse().unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(6, 4), BigUint::from(15u32));
        assert_eq!(binom(5, 0), BigUint::one());
        assert_eq!(binom(4, 2), BigUint::from(6u32));
        assert_eq!(binom(3, 5), BigUint::zero());
        // Beyond u64.
        assert_eq!(
            binom(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn dims() {
        assert_eq!(dim_n(3, 5).unwrap(), BigUint::from(21u32));
        assert_eq!(dim_n(4, 4).unwrap(), BigUint::from(35u32));
        assert_eq!(dim_n(3, 0).unwrap(), BigUint::one());
        assert_eq!(dim_n(0, 3), Err(Error::ZeroCodimension));
        assert_eq!(dim_n_i128(4, -1).unwrap(), 0);
    }

    #[test]
    fn macaulay_representations() {
        assert_eq!(macaulay_rep(3, 2).unwrap().indices(), vec![3]);
        assert_eq!(macaulay_rep(2, 2).unwrap().indices(), vec![2, 1]);
        assert_eq!(macaulay_rep(4, 2).unwrap().indices(), vec![3, 1]);
        assert!(macaulay_rep(0, 2).is_err());
        assert!(macaulay_rep(3, 0).is_err());
    }

    #[test]
    fn macaulay_growth_values() {
        assert_eq!(macaulay_growth(2, 2).unwrap(), 2);
        assert_eq!(macaulay_growth(3, 1).unwrap(), 6);
        assert_eq!(macaulay_growth(4, 2).unwrap(), 5);
        assert_eq!(macaulay_growth(0, 4).unwrap(), 0);
        assert!(macaulay_growth(3, 0).is_err());
        // a(a+1)/2 at the top of the u64 range still fits.
        let big = macaulay_growth(u64::MAX, 1).unwrap();
        assert_eq!(big, u128::from(u64::MAX) * (u128::from(u64::MAX) + 1) / 2);
    }

    /// Independent oracle: the lex-segment ideal in three variables.
    /// `I_d` is spanned by the `N(3,d) - a` lex-largest monomials and the
    /// maximal `h_{d+1}` is `N(3,d+1) - |R_1 I_d|`.
    fn lex_growth_oracle(a: usize, d: usize) -> usize {
        let monos = |deg: usize| {
            let mut v = Vec::new();
            for x in (0..=deg).rev() {
                for y in (0..=deg - x).rev() {
                    v.push([x, y, deg - x - y]);
                }
            }
            v // lex-descending
        };
        let low = monos(d);
        let ideal = &low[..low.len() - a];
        let mut up = std::collections::BTreeSet::new();
        for m in ideal {
            for k in 0..3 {
                let mut n = *m;
                n[k] += 1;
                up.insert(n);
            }
        }
        monos(d + 1).len() - up.len()
    }

    #[test]
    fn growth_matches_lex_segment_oracle() {
        for d in 1..=5 {
            let full = (d + 1) * (d + 2) / 2;
            for a in 0..=full {
                assert_eq!(
                    macaulay_growth(a as u64, d).unwrap(),
                    lex_growth_oracle(a, d) as u128,
                    "a = {a}, d = {d}"
                );
            }
        }
    }

    #[test]
    fn o_sequences() {
        assert!(is_o_sequence(&hv("1,3,4,4,3,1")));
        assert!(!is_o_sequence(&hv("1,3,7")));
        assert!(!is_o_sequence(&hv("1,2,4")));
        assert!(is_o_sequence(&hv("1")));
        assert!(is_o_sequence(&hv("1,3,6,10,15,20,12,6,2")));
    }

    #[test]
    fn hvector_construction() {
        assert_eq!(hv("(1,3,4,4,3,1)").entries(), &[1, 3, 4, 4, 3, 1]);
        assert_eq!(hv(" 1, 3 ,2,0 ").entries(), &[1, 3, 2]);
        assert!("1,3,0,2".parse::<HVector>().is_err());
        assert!("2,3".parse::<HVector>().is_err());
        assert!("1,3,x".parse::<HVector>().is_err());
        assert!("".parse::<HVector>().is_err());
        assert!("(1,3".parse::<HVector>().is_err());
        assert_eq!(hv("1,3,4,4,3,1").to_string(), "1,3,4,4,3,1");
        let json = serde_json::to_string(&hv("1,3,2")).unwrap();
        assert_eq!(json, "[1,3,2]");
        assert!(serde_json::from_str::<HVector>("[1,0,2]").is_err());
    }

    #[test]
    fn socle_vectors() {
        let s: SocleVector = "0,0,0,0,0,0,0,1,0,1".parse().unwrap();
        assert_eq!(s.socle_degree(), 9);
        assert_eq!(s.first_degree(), 7);
        assert_eq!(s.socle_type(), 2);
        assert!(!s.is_level());
        assert!(SocleVector::level(8, 2).unwrap().is_level());
        assert!("1,2".parse::<SocleVector>().is_err());
        assert!("0".parse::<SocleVector>().is_err());
    }

    #[test]
    fn profiles() {
        let p = f_profile(&hv("1,3,4,4,3,1"));
        assert_eq!(p.value(4), 0);
        assert_eq!(p.values(), &[0, -2, 0, 0, 0, 2, 0, -1]);
        assert_eq!(f_profile(&hv("1")).values(), &[-3, 3, -1]);
    }

    #[test]
    fn invariant_examples() {
        let inv = invariants(&hv("1,3,4,4,3,1"));
        assert_eq!((inv.t, inv.i, inv.j, inv.m), (2, Some(6), Some(6), Some(2)));
        let inv = invariants(&hv("1,3,6,10,15,21,13,7,3,1"));
        assert_eq!((inv.t, inv.i), (6, Some(7)));
        let inv = invariants(&hv("1,3,3,3,2"));
        assert_eq!((inv.t, inv.i, inv.j, inv.m), (2, Some(3), Some(6), Some(4)));
        let inv = invariants(&hv("1"));
        assert_eq!((inv.t, inv.i, inv.j, inv.m), (1, Some(2), Some(2), Some(1)));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(&hv("1,3,4,4,3,1")), 16);
        assert_eq!(multiplicity(&hv("1,3,6,10,15,21,13,7,3,1")), 80);
        assert_eq!(multiplicity(&hv("1")), 1);
        for (s, e) in [("1,3,4,4,3,1", 16), ("1", 1), ("1,3,6,10,15,20,12,6,2", 75)] {
            assert_eq!(multiplicity_from_profile(&f_profile(&hv(s))).unwrap(), e);
        }
        // (240 - 336) / -6 = 16 for the quintic Gorenstein vector.
        assert_eq!(f_profile(&hv("1,3,4,4,3,1")).moment(3), -96);
    }

    #[test]
    fn corrupted_profiles_are_reported() {
        let mut p = f_profile(&hv("1,3,4,4,3,1"));
        p.values[5] += 1; // n = 6 contributes 120
        assert!(multiplicity_from_profile(&p).is_err());
        let flat = FProfile {
            socle_degree: 0,
            values: vec![0, 0, 0],
        };
        assert!(multiplicity_from_profile(&flat).is_err());
    }

    /// Random O-sequences grown under Macaulay's bound, with `h_1 <= 30`
    /// or, from `codim3_sequence`, `h_1 = 3`.
    fn grown(first: Option<u64>) -> impl Strategy<Value = HVector> {
        (0usize..=8, proptest::collection::vec(0u64..1000, 8)).prop_map(move |(c, picks)| {
            let mut e = vec![1u64];
            for d in 0..c {
                let next = match (d, first) {
                    (0, Some(h1)) => h1,
                    (0, None) => 1 + picks[0] % 30,
                    _ => 1 + picks[d] % macaulay_growth(e[d], d).unwrap().min(30) as u64,
                };
                e.push(next);
            }
            HVector::new(e).unwrap()
        })
    }

    fn o_sequence() -> impl Strategy<Value = HVector> {
        grown(None)
    }

    fn codim3_sequence() -> impl Strategy<Value = HVector> {
        grown(Some(3))
    }

    proptest! {
        #[test]
        fn profile_identities(h in o_sequence()) {
            prop_assert!(is_o_sequence(&h));
            let p = f_profile(&h);
            prop_assert_eq!(p.values().iter().sum::<i128>(), -1);
            prop_assert_eq!(p.moment(1), 0);
            prop_assert_eq!(p.moment(2), 0);
            prop_assert_eq!(p.moment(3), -6 * h.multiplicity() as i128);
            prop_assert_eq!(multiplicity_from_profile(&p).unwrap(), h.multiplicity());
            let c = h.socle_degree();
            prop_assert_eq!(p.value(c + 3), -(h.at(c as i64) as i128));
        }

        #[test]
        fn initial_degree_is_first_non_full_degree(h in codim3_sequence()) {
            prop_assume!(h.socle_degree() >= 1);
            let inv = invariants(&h);
            let first_short = (0..).find(|&d: &usize| {
                u128::from(h.at(d as i64)) < dim_n(3, d).unwrap().to_u128().unwrap()
            }).unwrap();
            prop_assert_eq!(inv.t, first_short);
            prop_assert!((1..inv.t).all(|n| inv.profile.value(n) == 0));
            if let (Some(i), Some(j)) = (inv.i, inv.j) { prop_assert!(i <= j); }
            if let Some(m) = inv.m { prop_assert!(inv.t <= m); }
        }

        #[test]
        fn macaulay_rep_round_trips(a in 1u64..1_000_000, d in 1usize..12) {
            let rep = macaulay_rep(a, d).unwrap();
            prop_assert_eq!(rep.value(), BigUint::from(a));
            let idx = rep.indices();
            prop_assert!(idx.windows(2).all(|w| w[0] > w[1]));
            prop_assert!(rep.terms().iter().all(|&(k, i)| k >= i as u64 && i >= 1));
        }
    }
}
