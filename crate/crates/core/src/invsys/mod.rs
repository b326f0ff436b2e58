//! Inverse systems in three variables.
//!
//! `x_k` acts on `k[y1, y2, y3]` as `d/dy_k`. The h-vector of the algebra
//! whose inverse system is generated by a set of forms is, in each degree
//! `d`, the dimension of the span of all order-`(deg g - d)` partial
//! derivatives of the generators `g`.

mod parse;
mod poly;
mod rank;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use parse::{parse_poly, parse_polys};
pub use poly::{apply_derivative, Monomial, Poly, PolySet, NUM_VARS};
pub use rank::{integer_row, rank_fraction_free, rank_rational};

use crate::error::{Error, Result};
use crate::hilbert::HVector;

/// Coefficient rows of every order-`(deg g - d)` derivative of every
/// generator of degree at least `d`, over the degree-`d` monomial basis in
/// graded-lex order.
pub fn derivative_rows(set: &PolySet, d: u32) -> Vec<Vec<BigRational>> {
    let basis = Monomial::of_degree(d);
    let mut rows = Vec::new();
    for g in set.generators() {
        let deg = g.degree().expect("generators are nonzero");
        if deg < d {
            continue;
        }
        for op in Monomial::of_degree(deg - d) {
            let der = apply_derivative(&op, g);
            if der.is_zero() {
                continue;
            }
            rows.push(basis.iter().map(|m| der.coeff(m)).collect());
        }
    }
    rows
}

pub fn hvector_from_invsys(set: &PolySet) -> Result<HVector> {
    if set.is_empty() {
        return Err(Error::InvalidGenerators("empty generator set".into()));
    }
    let top = set
        .generators()
        .iter()
        .filter_map(Poly::degree)
        .max()
        .expect("nonempty");
    let entries = (0..=top)
        .map(|d| rank_fraction_free(derivative_rows(set, d).iter().map(|r| integer_row(r)).collect()) as u64)
        .collect();
    HVector::new(entries)
}

/// Random linear form with rational coefficients `n / d`, `|n| <= 100`,
/// `1 <= d <= 10`.
fn random_linear_form(rng: &mut impl Rng) -> Poly {
    let mut l = Poly::zero();
    for k in 0..NUM_VARS {
        let n: i64 = rng.gen_range(-100..=100);
        let d: i64 = rng.gen_range(1..=10);
        l.add_term(Monomial::var(k), BigRational::new(n.into(), d.into()));
    }
    l
}

/// `{L_1^{d_1}, L_2^{d_2}, ...}` for pseudo-random linear forms `L_i`
/// drawn from `seed`.
///
/// Genericity is probabilistic: a rank can fall short of its generic value
/// on an unlucky draw. [`generic_hvector`] handles retries.
pub fn random_power_instance(degrees: &[u32], seed: u64) -> Result<PolySet> {
    if degrees.is_empty() {
        return Err(Error::InvalidGenerators("no generator degrees".into()));
    }
    if degrees.contains(&0) {
        return Err(Error::InvalidGenerators("generator degrees must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = degrees
        .iter()
        .map(|&d| loop {
            let l = random_linear_form(&mut rng);
            if !l.is_zero() {
                break l.pow(d);
            }
        })
        .collect();
    PolySet::new(gens)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericRun {
    pub h: HVector,
    /// Seed whose instance produced `h`.
    pub seed: u64,
    /// Every seed tried, with its h-vector, in order.
    pub attempts: Vec<(u64, HVector)>,
}

fn dominates(a: &HVector, b: &HVector) -> bool {
    let len = a.entries().len().max(b.entries().len()) as i64;
    (0..len).all(|d| a.at(d) >= b.at(d))
}

/// Computes the h-vector of generic powers of linear forms with the given
/// degrees, trying seeds `first_seed, first_seed + 1, ...` at most
/// `max_attempts` times.
///
/// With `expected`, the first seed reproducing it wins. Without, a result is
/// accepted once two seeds agree on an h-vector that dominates every other
/// attempt entrywise. Otherwise [`Error::RetryExhausted`].
pub fn generic_hvector(
    degrees: &[u32],
    first_seed: u64,
    max_attempts: usize,
    expected: Option<&HVector>,
) -> Result<GenericRun> {
    let mut attempts: Vec<(u64, HVector)> = Vec::new();
    for k in 0..max_attempts {
        let seed = first_seed.wrapping_add(k as u64);
        let h = hvector_from_invsys(&random_power_instance(degrees, seed)?)?;
        attempts.push((seed, h.clone()));
        let accepted = match expected {
            Some(target) => &h == target,
            None => {
                attempts.iter().filter(|(_, other)| other == &h).count() >= 2
                    && attempts.iter().all(|(_, other)| dominates(&h, other))
            }
        };
        if accepted {
            return Ok(GenericRun { h, seed, attempts });
        }
    }
    Err(Error::RetryExhausted {
        seeds: attempts.into_iter().map(|(s, _)| s).collect(),
    })
}
