//! Generator file grammar.
//!
//! One polynomial per line; blank lines and lines starting with `#` are
//! skipped. A term is an optional coefficient (`7` or `2/3`) followed by
//! `*`-separated powers `y<k>^<e>` with `k` in `1..=3`, `e >= 1`, `^1`
//! optional. Terms are joined by `+` and `-`. Whitespace is insignificant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Monomial, Poly, PolySet, NUM_VARS};
use crate::error::{Error, Result};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: pos + 1,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn digits(&mut self) -> Result<(usize, String)> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok((start, self.chars[start..self.pos].iter().collect()))
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        let (_, num) = self.digits()?;
        let num: BigInt = num.parse().expect("ascii digits");
        self.skip_ws();
        if self.peek() != Some('/') {
            return Ok(BigRational::from_integer(num));
        }
        self.bump();
        self.skip_ws();
        let (start, den) = self.digits()?;
        let den: BigInt = den.parse().expect("ascii digits");
        if den.is_zero() {
            return Err(self.error_at(start, "zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }

    fn power(&mut self) -> Result<Monomial> {
        if self.peek() != Some('y') {
            return Err(self.error("expected a variable y1, y2 or y3"));
        }
        self.bump();
        let (start, idx) = self.digits()?;
        let k: usize = idx.parse().unwrap_or(usize::MAX);
        if !(1..=NUM_VARS).contains(&k) {
            return Err(self.error_at(
                start,
                format!("variable index y{idx} out of range (expected 1..={NUM_VARS})"),
            ));
        }
        self.skip_ws();
        let mut exp = 1u32;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let (start, e) = self.digits()?;
            exp = match e.parse::<u32>() {
                Ok(e) if e >= 1 => e,
                _ => return Err(self.error_at(start, format!("invalid exponent {e}"))),
            };
        }
        let mut ex = [0u32; NUM_VARS];
        ex[k - 1] = exp;
        Ok(Monomial::new(ex))
    }

    fn term(&mut self) -> Result<(BigRational, Monomial)> {
        let mut coeff = BigRational::one();
        let mut mono = Monomial::ONE;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.coefficient()?;
                self.skip_ws();
                match self.peek() {
                    Some('*') => {
                        self.bump();
                        self.skip_ws();
                    }
                    Some('y') => {}
                    _ => return Ok((coeff, mono)),
                }
            }
            Some('y') => {}
            _ => return Err(self.error("expected a coefficient or a variable")),
        }
        loop {
            mono = mono.mul(&self.power()?);
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                self.skip_ws();
            } else {
                return Ok((coeff, mono));
            }
        }
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut p = Poly::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty polynomial"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = match self.peek() {
                Some('+') => {
                    self.bump();
                    false
                }
                Some('-') => {
                    self.bump();
                    true
                }
                None => break,
                Some(c) if !first => {
                    return Err(self.error(format!("expected '+' or '-', found {c:?}")))
                }
                Some(_) => false,
            };
            self.skip_ws();
            let (c, m) = self.term()?;
            p.add_term(m, if negative { -c } else { c });
            first = false;
        }
        Ok(p)
    }
}

/// Parses one polynomial; errors report line 1.
pub fn parse_poly(src: &str) -> Result<Poly> {
    Cursor::new(src, 1).poly()
}

/// Parses a generator file into a [`PolySet`].
pub fn parse_polys(text: &str) -> Result<PolySet> {
    let mut gens = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let p = Cursor::new(line, k + 1).poly()?;
        if p.is_zero() {
            return Err(Error::Syntax {
                line: k + 1,
                column: 1,
                message: "polynomial is identically zero".into(),
            });
        }
        gens.push(p);
    }
    PolySet::new(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn quintic_form() {
        let p = parse_poly("y1^5 - y1*y3^4 - y2^2*y3^3").unwrap();
        assert_eq!(p.coeff(&Monomial::new([5, 0, 0])), q(1, 1));
        assert_eq!(p.coeff(&Monomial::new([1, 0, 4])), q(-1, 1));
        assert_eq!(p.coeff(&Monomial::new([0, 2, 3])), q(-1, 1));
        assert_eq!(p.terms().count(), 3);
        assert_eq!(p.to_string(), "y1^5 - y1*y3^4 - y2^2*y3^3");
    }

    #[test]
    fn simple_terms() {
        assert_eq!(
            parse_poly("y1").unwrap(),
            Poly::monomial(Monomial::var(0), q(1, 1))
        );
        let p = parse_poly("2/3*y1^2 + y2*y3").unwrap();
        assert_eq!(p.coeff(&Monomial::new([2, 0, 0])), q(2, 3));
        assert_eq!(p.coeff(&Monomial::new([0, 1, 1])), q(1, 1));
        let p = parse_poly("  - 4 y1 ^ 2*y2+ 6/4*y3^3 ").unwrap();
        assert_eq!(p.coeff(&Monomial::new([2, 1, 0])), q(-4, 1));
        assert_eq!(p.coeff(&Monomial::new([0, 0, 3])), q(3, 2));
        // Repeated variables multiply.
        let p = parse_poly("y1*y1^2").unwrap();
        assert_eq!(p.coeff(&Monomial::new([3, 0, 0])), q(1, 1));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_polys("y1^2\n# comment\ny1 + y4") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 7)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly("y1 y2") {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly("y1^0").is_err());
        assert!(parse_poly("1/0*y1").is_err());
        assert!(parse_poly("x1").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("y1 +").is_err());
        assert!(parse_polys("y1 - y1").is_err());
        assert!(parse_polys("y1^2 + y2").is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let set = parse_polys("# header\n\ny1^2\n   # indented comment\ny2^2\n").unwrap();
        assert_eq!(set.len(), 2);
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(((0u32..4, 0u32..4, 0u32..4), -20i64..20, 1i64..6), 1..6)
            .prop_map(|terms| {
                let mut p = Poly::zero();
                for ((a, b, c), n, d) in terms {
                    p.add_term(Monomial::new([a, b, c]), q(n, d));
                }
                p
            })
    }

    proptest! {
        #[test]
        fn display_round_trips(p in arb_poly()) {
            prop_assume!(!p.is_zero());
            let text = p.to_string();
            prop_assert_eq!(parse_poly(&text).unwrap(), p);
        }
    }
}
