use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Number of dual variables `y1, y2, y3`.
pub const NUM_VARS: usize = 3;

/// A monomial `y1^a y2^b y3^c`. Also used for the differential operator
/// `d^a/dy1^a d^b/dy2^b d^c/dy3^c` acting on the dual ring.
///
/// Ordered graded-lexicographically: by degree, then by exponents with `y1`
/// most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; NUM_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NUM_VARS]);

    pub fn new(exponents: [u32; NUM_VARS]) -> Self {
        Monomial(exponents)
    }

    pub fn var(k: usize) -> Self {
        let mut e = [0; NUM_VARS];
        e[k] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; NUM_VARS] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    /// All monomials of degree `d`, ascending in graded-lex order.
    pub fn of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
        for a in 0..=d {
            for b in 0..=(d - a) {
                out.push(Monomial([a, b, d - a - b]));
            }
        }
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "y{}", k + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial in `y1, y2, y3` with exact rational coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(m: Monomial, coeff: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, coeff);
        p
    }

    pub fn add_term(&mut self, m: Monomial, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::monomial(Monomial::ONE, BigRational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

/// Highest term first; parses back to the same polynomial.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let is_const = *m == Monomial::ONE;
            if a.is_one() {
                if is_const {
                    f.write_str("1")?;
                }
            } else {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())?;
                }
                if !is_const {
                    f.write_str("*")?;
                }
            }
            if !is_const {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

/// Iterated partial derivative `op` applied to `g`.
pub fn apply_derivative(op: &Monomial, g: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in g.terms() {
        let mut e = m.exponents();
        let mut factor = BigInt::one();
        let mut vanishes = false;
        for (ek, &a) in e.iter_mut().zip(&op.0) {
            if *ek < a {
                vanishes = true;
                break;
            }
            for s in 0..a {
                factor *= *ek - s;
            }
            *ek -= a;
        }
        if !vanishes {
            out.add_term(Monomial(e), c * BigRational::from_integer(factor));
        }
    }
    out
}

/// The generators of an inverse-system module: nonzero forms in three
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolySet {
    generators: Vec<Poly>,
}

impl PolySet {
    pub fn new(generators: Vec<Poly>) -> Result<Self> {
        for (k, g) in generators.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::InvalidGenerators(format!(
                    "generator {} is zero",
                    k + 1
                )));
            }
            if !g.is_homogeneous() {
                return Err(Error::InvalidGenerators(format!(
                    "generator {} ({g}) is not homogeneous",
                    k + 1
                )));
            }
        }
        Ok(PolySet { generators })
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn num_vars(&self) -> usize {
        NUM_VARS
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }
}
