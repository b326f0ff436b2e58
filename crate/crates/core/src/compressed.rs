//! Compressed h-vectors.
//!
//! For a codimension `r` and socle vector `s` the numbers
//! `r_d = N(r,d) - sum_{i=0}^{c-d} N(r,i) s_{d+i}` change sign exactly once;
//! the first nonnegative one sits at the pivot `b`. The entrywise upper
//! bound `H_d = min(N(r,d) - r_d, N(r,d))` is the h-vector of a compressed
//! algebra whenever `s` vanishes below `b`. In codimension 3 this module also
//! derives the Betti numbers forced by `H` and the four-case bracket on the
//! multiplicity given by the smallest and largest forced shifts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{dim_n_i128, HVector, SocleVector};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompressedProfile {
    codimension: usize,
    socle: SocleVector,
    r_values: Vec<i128>,
    pivot: usize,
    initial_degree: usize,
    upper_bound: HVector,
}

impl CompressedProfile {
    pub fn codimension(&self) -> usize {
        self.codimension
    }

    pub fn socle(&self) -> &SocleVector {
        &self.socle
    }

    /// `r_0, ..., r_c`.
    pub fn r_values(&self) -> &[i128] {
        &self.r_values
    }

    /// The pivot `b`: `r_b >= 0 > r_{b-1}`.
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// Initial degree `t` of the defining ideal: `b`, or `b + 1` when `r_b = 0`.
    pub fn initial_degree(&self) -> usize {
        self.initial_degree
    }

    pub fn extremely_compressed(&self) -> bool {
        self.r_values[self.pivot] == 0
    }

    /// The upper bound `H` on h-vectors with this codimension and socle.
    pub fn upper_bound(&self) -> &HVector {
        &self.upper_bound
    }

    /// `s_1 = ... = s_{b-1} = 0`, the condition under which `H` is attained.
    pub fn is_compressed_valid(&self) -> bool {
        self.first_socle_below_pivot().is_none()
    }

    fn first_socle_below_pivot(&self) -> Option<usize> {
        (1..self.pivot).find(|&d| self.socle.at(d) > 0)
    }

    /// Rejects socle vectors with positive entries below the pivot.
    pub fn require_compressed(self) -> Result<Self> {
        match self.first_socle_below_pivot() {
            Some(degree) => Err(Error::NotCompressedSocle {
                degree,
                pivot: self.pivot,
            }),
            None => Ok(self),
        }
    }

    fn require_codim3(&self, what: &'static str) -> Result<()> {
        if self.codimension != 3 {
            return Err(Error::NotCodimensionThree(what, self.codimension));
        }
        Ok(())
    }
}

/// Computes the numbers `r_d`, the pivot, the initial degree and `H` for an
/// arbitrary socle vector. Use [`CompressedProfile::require_compressed`] to
/// insist on compressed semantics.
pub fn fl_numbers(r: usize, s: &SocleVector) -> Result<CompressedProfile> {
    if r == 0 {
        return Err(Error::ZeroCodimension);
    }
    let c = s.socle_degree();
    let overflow = || Error::Overflow("r_d");
    let mut r_values = Vec::with_capacity(c + 1);
    for d in 0..=c {
        let mut acc = dim_n_i128(r, d as i64)?;
        for i in 0..=(c - d) {
            let term = dim_n_i128(r, i as i64)?
                .checked_mul(i128::from(s.at(d + i)))
                .ok_or_else(overflow)?;
            acc = acc.checked_sub(term).ok_or_else(overflow)?;
        }
        r_values.push(acc);
    }
    if r_values[c] < 0 {
        return Err(Error::NoPivot(r_values[c]));
    }
    if r_values[0] >= 0 {
        return Err(Error::InvalidArgument(format!(
            "degenerate data: r_0 = {} is not negative",
            r_values[0]
        )));
    }
    let pivot = (1..=c)
        .find(|&d| r_values[d] >= 0)
        .expect("r_c >= 0 was checked");
    let initial_degree = if r_values[pivot] > 0 { pivot } else { pivot + 1 };

    let entries = (0..=c)
        .map(|d| {
            let full = dim_n_i128(r, d as i64)?;
            let h = full - r_values[d].max(0);
            u64::try_from(h).map_err(|_| Error::Overflow("H"))
        })
        .collect::<Result<Vec<_>>>()?;
    let upper_bound = HVector::new(entries)?;

    Ok(CompressedProfile {
        codimension: r,
        socle: s.clone(),
        r_values,
        pivot,
        initial_degree,
        upper_bound,
    })
}

/// Outcome of [`recover_socle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SocleRecovery {
    /// `h` is the compressed h-vector of this socle vector.
    Compressed(SocleVector),
    NotCompressed,
}

impl SocleRecovery {
    pub fn socle(&self) -> Option<&SocleVector> {
        match self {
            SocleRecovery::Compressed(s) => Some(s),
            SocleRecovery::NotCompressed => None,
        }
    }
}

/// Recovers the socle vector of a compressed algebra from its h-vector by
/// descending induction on the degree, then certifies the answer by
/// regenerating `H` from it. `h` is read as a quotient of the polynomial
/// ring in three variables, so `h_1 <= 3`.
pub fn recover_socle(h: &HVector) -> Result<SocleRecovery> {
    if h.codimension() > 3 {
        return Err(Error::NotCodimensionThree(
            "socle recovery",
            h.codimension() as usize,
        ));
    }
    let c = h.socle_degree();
    let mut s = vec![0i128; c + 1];
    s[c] = i128::from(h.at(c as i64));
    for d in (0..c).rev() {
        let mut rest = 0i128;
        for i in 1..=(c - d) {
            rest += dim_n_i128(3, i as i64)? * s[d + i];
        }
        s[d] = (i128::from(h.at(d as i64)) - rest).max(0);
    }
    let entries: Vec<u64> = s.into_iter().map(|v| v as u64).collect();
    let Ok(socle) = SocleVector::new(entries) else {
        return Ok(SocleRecovery::NotCompressed);
    };
    let regenerated = match fl_numbers(3, &socle).and_then(CompressedProfile::require_compressed) {
        Ok(p) => p,
        Err(_) => return Ok(SocleRecovery::NotCompressed),
    };
    if regenerated.upper_bound() == h {
        Ok(SocleRecovery::Compressed(socle))
    } else {
        Ok(SocleRecovery::NotCompressed)
    }
}

/// Betti numbers at the edge of the two-shift resolution of a codimension-3
/// compressed algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiEdge {
    /// `beta_{2,t+2} = -r_{t-1}`.
    pub beta_2_t_plus_2: u64,
    /// `beta_{2,t+1} - beta_{1,t+1} = t(t+2) - sum_{j>=q} s_j (j-t+1)(j-t+3)`.
    pub difference: i128,
}

pub fn betti_edge(p: &CompressedProfile) -> Result<BettiEdge> {
    p.require_codim3("Betti edge")?;
    let t = p.initial_degree;
    let beta = -p.r_values[t - 1];
    let beta = u64::try_from(beta)
        .map_err(|_| Error::Consistency(format!("beta_(2,t+2) = {beta} is negative")))?;
    let s = p.socle();
    let t_i = t as i128;
    let weighted: i128 = (s.first_degree()..=s.socle_degree())
        .map(|j| {
            let j = j as i128;
            i128::from(s.at(j as usize)) * (j - t_i + 1) * (j - t_i + 3)
        })
        .sum();
    Ok(BettiEdge {
        beta_2_t_plus_2: beta,
        difference: t_i * (t_i + 2) - weighted,
    })
}

/// Which pair of forced shifts bounds the multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum McCase {
    /// `r_b = 0`: no shift of degree `t + 2` in the second module.
    Extreme,
    DNeg,
    DPos,
    DZero,
}

impl McCase {
    pub fn as_str(self) -> &'static str {
        match self {
            McCase::Extreme => "EXTREME",
            McCase::DNeg => "D_NEG",
            McCase::DPos => "D_POS",
            McCase::DZero => "D_ZERO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct McBoundPair {
    #[serde(with = "rational::serde_fraction")]
    pub lower: Rational,
    #[serde(with = "rational::serde_fraction")]
    pub upper: Rational,
    pub case: McCase,
}

/// The multiplicity-conjecture bracket for a codimension-3 compressed
/// profile, checked against the actual multiplicity of `H`.
pub fn compressed_mc_bounds(p: &CompressedProfile) -> Result<McBoundPair> {
    p.require_codim3("multiplicity bounds")?;
    let p = p.clone().require_compressed()?;
    let edge = betti_edge(&p)?;
    let t = p.initial_degree;
    let q = p.socle.first_degree();
    let c = p.socle.socle_degree();
    let tri = rational::triple_over_six;
    let (case, lower, upper) = if p.extremely_compressed() {
        (McCase::Extreme, tri(t, t + 1, q + 3), tri(t, t + 1, c + 3))
    } else if edge.difference < 0 {
        (McCase::DNeg, tri(t, t + 2, q + 3), tri(t + 1, t + 2, c + 3))
    } else if edge.difference > 0 {
        (McCase::DPos, tri(t, t + 1, q + 3), tri(t, t + 2, c + 3))
    } else {
        (McCase::DZero, tri(t, t + 2, q + 3), tri(t, t + 2, c + 3))
    };
    let e = Rational::from_integer(p.upper_bound.multiplicity().into());
    if !(lower <= e && e <= upper) {
        return Err(Error::Consistency(format!(
            "{} bounds {} <= e = {} <= {} fail for socle {}",
            case.as_str(),
            rational::to_fraction_string(&lower),
            e,
            rational::to_fraction_string(&upper),
            p.socle
        )));
    }
    Ok(McBoundPair { lower, upper, case })
}

/// `e = N(4, t-1) + sum_{j=q}^{c} N(4, j-t) s_j`, cross-checked against the
/// entry sum of `H`.
pub fn multiplicity_formula(p: &CompressedProfile) -> Result<u64> {
    p.require_codim3("multiplicity formula")?;
    let p = p.clone().require_compressed()?;
    let t = p.initial_degree as i64;
    let s = &p.socle;
    let mut e = dim_n_i128(4, t - 1)?;
    for j in s.first_degree()..=s.socle_degree() {
        e += dim_n_i128(4, j as i64 - t)? * i128::from(s.at(j));
    }
    let summed = p.upper_bound.multiplicity();
    if e != i128::from(summed) {
        return Err(Error::Consistency(format!(
            "closed-form multiplicity {e} differs from entry sum {summed} for socle {s}"
        )));
    }
    Ok(summed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::is_o_sequence;
    use crate::rational::ratio;

    fn sv(s: &str) -> SocleVector {
        s.parse().unwrap()
    }

    fn level_eight() -> CompressedProfile {
        fl_numbers(3, &SocleVector::level(8, 2).unwrap()).unwrap()
    }

    fn extreme_nine() -> CompressedProfile {
        fl_numbers(3, &sv("0,0,0,0,0,0,0,1,0,1")).unwrap()
    }

    #[test]
    fn fl_numbers_level_type_two() {
        let p = level_eight();
        assert_eq!(p.r_values()[5], 1);
        assert_eq!(p.r_values()[4], -15);
        assert_eq!(p.pivot(), 5);
        assert_eq!(p.initial_degree(), 5);
        assert!(!p.extremely_compressed());
        assert_eq!(p.upper_bound().to_string(), "1,3,6,10,15,20,12,6,2");
    }

    #[test]
    fn fl_numbers_extreme() {
        let p = extreme_nine();
        assert_eq!(p.r_values()[5], 0);
        assert_eq!(p.pivot(), 5);
        assert_eq!(p.initial_degree(), 6);
        assert!(p.extremely_compressed());
        assert_eq!(p.upper_bound().to_string(), "1,3,6,10,15,21,13,7,3,1");
    }

    #[test]
    fn fl_numbers_small() {
        let p = fl_numbers(3, &sv("0,0,2")).unwrap();
        assert_eq!(p.r_values(), &[-11, -3, 4]);
        assert_eq!(p.upper_bound().to_string(), "1,3,2");
    }

    #[test]
    fn fl_numbers_errors() {
        assert_eq!(fl_numbers(0, &sv("0,1")), Err(Error::ZeroCodimension));
        // s_1 = 7 exceeds N(3,1) = 3.
        assert!(matches!(fl_numbers(3, &sv("0,7")), Err(Error::NoPivot(-4))));
        // s_2 > 0 below the pivot b = 5.
        let p = fl_numbers(3, &sv("0,0,1,0,0,0,0,0,2")).unwrap();
        assert!(!p.is_compressed_valid());
        assert_eq!(
            p.require_compressed(),
            Err(Error::NotCompressedSocle { degree: 2, pivot: 5 })
        );
    }

    #[test]
    fn fl_numbers_other_codimensions() {
        // Codimension 2 Gorenstein of socle degree 3: (1,2,2,1).
        let p = fl_numbers(2, &SocleVector::level(3, 1).unwrap()).unwrap();
        assert_eq!(p.upper_bound().to_string(), "1,2,2,1");
        // Codimension 4, level type 1, socle degree 4: (1,4,10,4,1).
        let p = fl_numbers(4, &SocleVector::level(4, 1).unwrap()).unwrap();
        assert_eq!(p.upper_bound().to_string(), "1,4,10,4,1");
        assert!(matches!(betti_edge(&p), Err(Error::NotCodimensionThree(..))));
        assert!(compressed_mc_bounds(&p).is_err());
        assert!(multiplicity_formula(&p).is_err());
    }

    #[test]
    fn socle_recovery() {
        let h: HVector = "1,3,6,10,15,20,12,6,2".parse().unwrap();
        assert_eq!(
            recover_socle(&h).unwrap(),
            SocleRecovery::Compressed(SocleVector::level(8, 2).unwrap())
        );
        let h: HVector = "1,3,2".parse().unwrap();
        assert_eq!(recover_socle(&h).unwrap().socle(), Some(&sv("0,0,2")));
        let h: HVector = "1,3,4,4,3,1".parse().unwrap();
        assert_eq!(recover_socle(&h).unwrap(), SocleRecovery::NotCompressed);
        // Fewer than three generators in degree 1 is still a quotient of
        // the three-variable ring.
        let h: HVector = "1,1".parse().unwrap();
        assert_eq!(recover_socle(&h).unwrap().socle(), Some(&sv("0,1")));
        let h: HVector = "1,2,1".parse().unwrap();
        assert_eq!(recover_socle(&h).unwrap(), SocleRecovery::NotCompressed);
        let h: HVector = "1,4,1".parse().unwrap();
        assert!(recover_socle(&h).is_err());
    }

    #[test]
    fn betti_edges() {
        let e = betti_edge(&level_eight()).unwrap();
        assert_eq!(e.beta_2_t_plus_2, 15);
        assert_eq!(e.difference, -13);
        assert_eq!(betti_edge(&extreme_nine()).unwrap().beta_2_t_plus_2, 0);
        let e = betti_edge(&fl_numbers(3, &sv("0,0,2")).unwrap()).unwrap();
        assert_eq!(e.difference, 2);
    }

    #[test]
    fn mc_bound_cases() {
        let b = compressed_mc_bounds(&level_eight()).unwrap();
        assert_eq!(b.case, McCase::DNeg);
        assert_eq!((b.lower, b.upper), (ratio(385, 6), ratio(77, 1)));

        let b = compressed_mc_bounds(&extreme_nine()).unwrap();
        assert_eq!(b.case, McCase::Extreme);
        assert_eq!((b.lower.clone(), b.upper.clone()), (ratio(70, 1), ratio(84, 1)));
        let e = ratio(80, 1);
        assert!(b.lower < e && e < b.upper);

        // (1,3,2): t = 2, D = 2 > 0, q = c = 2.
        let b = compressed_mc_bounds(&fl_numbers(3, &sv("0,0,2")).unwrap()).unwrap();
        assert_eq!(b.case, McCase::DPos);
        assert_eq!((b.lower, b.upper), (ratio(2 * 3 * 5, 6), ratio(2 * 4 * 5, 6)));
    }

    #[test]
    fn mc_bound_zero_difference_case() {
        // Search a small grid for D = 0 with r_b > 0 and check both bounds
        // use t(t+2).
        let mut found = false;
        for c in 1..=8 {
            for top in 1..=6 {
                let Ok(p) = fl_numbers(3, &SocleVector::level(c, top).unwrap()) else {
                    continue;
                };
                let edge = betti_edge(&p).unwrap();
                if p.extremely_compressed() || edge.difference != 0 {
                    continue;
                }
                found = true;
                let t = p.initial_degree();
                let b = compressed_mc_bounds(&p).unwrap();
                assert_eq!(b.case, McCase::DZero);
                assert_eq!(b.lower, rational::triple_over_six(t, t + 2, c + 3));
                assert_eq!(b.upper, rational::triple_over_six(t, t + 2, c + 3));
            }
        }
        assert!(found, "no D = 0 profile in the grid");
    }

    #[test]
    fn multiplicity_formulas() {
        assert_eq!(multiplicity_formula(&level_eight()).unwrap(), 75);
        assert_eq!(multiplicity_formula(&extreme_nine()).unwrap(), 80);
        assert_eq!(multiplicity_formula(&fl_numbers(3, &sv("0,0,2")).unwrap()).unwrap(), 6);
    }

    #[test]
    fn small_grid_round_trip() {
        for c in 1..=6usize {
            for top in 1..=4u64 {
                for mid in 0..=2u64 {
                    let mut e = vec![0; c + 1];
                    e[c] = top;
                    if c >= 2 {
                        e[c - 1] = mid;
                    }
                    let s = SocleVector::new(e).unwrap();
                    let Ok(p) = fl_numbers(3, &s).and_then(CompressedProfile::require_compressed)
                    else {
                        continue;
                    };
                    assert!(p.r_values().windows(2).all(|w| w[0] < w[1]));
                    assert!(is_o_sequence(p.upper_bound()));
                    assert_eq!(
                        recover_socle(p.upper_bound()).unwrap().socle(),
                        Some(&s),
                        "socle {s}"
                    );
                    assert_eq!(
                        betti_edge(&p).unwrap().beta_2_t_plus_2 == 0,
                        p.initial_degree() == p.pivot() + 1
                    );
                    compressed_mc_bounds(&p).unwrap();
                    multiplicity_formula(&p).unwrap();
                }
            }
        }
    }
}
