//! Text syntax for integer polynomials.
//!
//! Two forms are accepted:
//! * expressions in `x` with `+ - * ^` and parentheses, e.g.
//!   `x^4 - 2*x^3 + 5*x^2 - 4*x + 1` or `(x^2 + 1)*(x - 3)`; juxtaposition
//!   such as `2x` is read as multiplication;
//! * an ascending coefficient list, e.g. `1,-4,5,-2,1` (optionally bracketed).

use num_bigint::BigInt;

use super::IntPoly;
use crate::error::{Error, Result};

pub(crate) fn parse_int_poly(src: &str) -> Result<IntPoly> {
    let trimmed = src.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if trimmed.contains(',') && !trimmed.chars().any(|c| c.is_ascii_alphabetic()) {
        return parse_coeff_list(trimmed);
    }
    let tokens = tokenize(trimmed)?;
    let mut parser = Parser { tokens, pos: 0 };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "unexpected {:?} in {src:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(poly)
}

fn parse_coeff_list(s: &str) -> Result<IntPoly> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(s);
    let coeffs = inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Tok::Num(digits.parse().expect("ascii digits")));
            }
            'x' | 'X' => out.push(Tok::Var),
            '+' => out.push(Tok::Plus),
            '-' | '−' => out.push(Tok::Minus),
            '*' | '·' => out.push(Tok::Star),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := power (['*'] power)*
    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Num(_) | Tok::Var | Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // power := atom ['^' number]
    fn power(&mut self) -> Result<IntPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = (&n)
                        .try_into()
                        .map_err(|_| Error::Parse(format!("exponent {n} too large")))?;
                    if e > 4096 {
                        return Err(Error::Parse(format!("exponent {e} too large")));
                    }
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<IntPoly> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(IntPoly::constant(n)),
            Some(Tok::Var) => Ok(IntPoly::x()),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            Some(Tok::Minus) => Ok(-self.power()?),
            other => Err(Error::Parse(format!("expected a term, found {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expression_form() {
        let p = parse_int_poly("x^4 - 2*x^3 + 5*x^2 - 4*x + 1").unwrap();
        assert_eq!(p, IntPoly::from_i64s(&[1, -4, 5, -2, 1]));
    }

    #[test]
    fn coefficient_list_form() {
        let p = parse_int_poly("1,-4,5,-2,1").unwrap();
        assert_eq!(p, IntPoly::from_i64s(&[1, -4, 5, -2, 1]));
        let q = parse_int_poly("[3, 0, 1]").unwrap();
        assert_eq!(q, IntPoly::from_i64s(&[3, 0, 1]));
    }

    #[test]
    fn products_and_implicit_multiplication() {
        let p = parse_int_poly("(x^4 - x^2 + 1)(3x^4 - 2x^3 - x^2 - 2x + 3)").unwrap();
        let a = parse_int_poly("x^4 - x^2 + 1").unwrap();
        let b = parse_int_poly("3*x^4 - 2*x^3 - x^2 - 2*x + 3").unwrap();
        assert_eq!(p, &a * &b);
        assert_eq!(parse_int_poly("-(x-1)^2").unwrap(), IntPoly::from_i64s(&[-1, 2, -1]));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_int_poly("").is_err());
        assert!(parse_int_poly("x^").is_err());
        assert!(parse_int_poly("y + 1").is_err());
        assert!(parse_int_poly("1,a,3").is_err());
        assert!(parse_int_poly("(x + 1").is_err());
        assert!(parse_int_poly("1.5*x").is_err());
    }
}
