//! Expression grammar shared by polynomial and Hilbert-polynomial input.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | '+' unary | power
//! power   := atom ('^' integer)?
//! atom    := number | ident | ident '(' expr (',' expr)* ')' | '(' expr ')'
//! number  := digits ('/' digits)?
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Polynomial, RingContext};
use crate::ParseError;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigRational),
    /// An identifier together with its byte offset.
    Ident(String, usize),
    Call(String, Vec<Expr>, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<(BigInt, usize)> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Some((s.parse().expect("ascii digits"), start))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(b'*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let (e, _) = self
                .digits()
                .ok_or_else(|| ParseError::new(at, "expected a nonnegative integer exponent"))?;
            let e: u32 = e
                .try_into()
                .map_err(|_| ParseError::new(at, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(c) = self.peek() else {
            return Err(ParseError::new(self.pos, "unexpected end of input"));
        };
        if c.is_ascii_digit() {
            let (num, _) = self.digits().expect("peeked a digit");
            // A slash directly after digits makes a rational literal.
            if self.src.get(self.pos) == Some(&b'/') {
                self.pos += 1;
                let at = self.pos;
                let (den, _) = self
                    .digits()
                    .ok_or_else(|| ParseError::new(at, "expected denominator"))?;
                if den.is_zero() {
                    return Err(ParseError::new(at, "zero denominator"));
                }
                return Ok(Expr::Num(BigRational::new(num, den)));
            }
            return Ok(Expr::Num(BigRational::from_integer(num)));
        }
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(b')') {
                return Err(ParseError::new(self.pos, "expected `)`"));
            }
            return Ok(e);
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = self.pos;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos])
                .expect("ascii identifier")
                .to_string();
            if self.eat(b'(') {
                let mut args = vec![self.expr()?];
                while self.eat(b',') {
                    args.push(self.expr()?);
                }
                if !self.eat(b')') {
                    return Err(ParseError::new(self.pos, "expected `)` or `,`"));
                }
                return Ok(Expr::Call(name, args, start));
            }
            return Ok(Expr::Ident(name, start));
        }
        Err(ParseError::new(self.pos, format!("unexpected character `{}`", c as char)))
    }
}

/// Parses an arithmetic expression into its syntax tree.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(ParseError::new(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

fn variable_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

impl Expr {
    /// Largest variable index `i` among the `xi` occurring in the expression.
    pub fn max_variable(&self) -> Option<usize> {
        match self {
            Expr::Num(_) => None,
            Expr::Ident(name, _) => variable_index(name),
            Expr::Call(_, args, _) => args.iter().filter_map(|a| a.max_variable()).max(),
            Expr::Neg(a) | Expr::Pow(a, _) => a.max_variable(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.max_variable().max(b.max_variable())
            }
        }
    }

    /// Evaluates the expression as a polynomial in `nvars` variables.
    pub fn to_polynomial(&self, nvars: usize) -> Result<Polynomial, ParseError> {
        Ok(match self {
            Expr::Num(c) => Polynomial::constant(nvars, c.clone()),
            Expr::Ident(name, at) => match variable_index(name) {
                Some(i) if i < nvars => Polynomial::var(nvars, i),
                Some(i) => {
                    return Err(ParseError::new(
                        *at,
                        format!("variable x{i} outside x0..x{}", nvars - 1),
                    ))
                }
                None => return Err(ParseError::new(*at, format!("unknown identifier `{name}`"))),
            },
            Expr::Call(name, _, at) => {
                return Err(ParseError::new(*at, format!("unknown function `{name}`")))
            }
            Expr::Neg(a) => -&a.to_polynomial(nvars)?,
            Expr::Add(a, b) => &a.to_polynomial(nvars)? + &b.to_polynomial(nvars)?,
            Expr::Sub(a, b) => &a.to_polynomial(nvars)? - &b.to_polynomial(nvars)?,
            Expr::Mul(a, b) => &a.to_polynomial(nvars)? * &b.to_polynomial(nvars)?,
            Expr::Pow(a, e) => a.to_polynomial(nvars)?.pow(*e),
        })
    }
}

/// Parses one polynomial over the variables of `ctx`.
pub fn parse_polynomial(ctx: &RingContext, text: &str) -> Result<Polynomial, ParseError> {
    parse_expr(text)?.to_polynomial(ctx.nvars())
}

/// Parses a `;`-separated list of polynomials (newlines also separate, `#`
/// starts a comment). When `n` is `None` the ambient dimension is the largest
/// variable index seen, but at least 1.
pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<(usize, Vec<Polynomial>), ParseError> {
    let mut exprs = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("");
        let mut local = 0;
        for piece in body.split(';') {
            if !piece.trim().is_empty() {
                let e = parse_expr(piece).map_err(|e| ParseError {
                    position: e.position + offset + local,
                    message: e.message,
                })?;
                exprs.push(e);
            }
            local += piece.len() + 1;
        }
        offset += line.len();
    }
    let seen = exprs.iter().filter_map(|e| e.max_variable()).max();
    let n = match n {
        Some(n) => n,
        None => seen.unwrap_or(1).max(1),
    };
    let polys = exprs
        .iter()
        .map(|e| e.to_polynomial(n + 1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((n, polys))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_quadric() {
        let ctx = RingContext::grevlex(2);
        let f = parse_polynomial(&ctx, "x0*x2 - x1^2").unwrap();
        assert_eq!(f.to_string_in(&ctx), "-x1^2 + x0*x2");
        let g = parse_polynomial(&ctx, " 3/2 * x0 +(x1 - x1)").unwrap();
        assert_eq!(g.to_string_in(&ctx), "3/2*x0");
    }

    #[test]
    fn reports_positions() {
        let ctx = RingContext::grevlex(2);
        let e = parse_polynomial(&ctx, "x0 + * x1").unwrap_err();
        assert_eq!(e.position, 5);
        let e = parse_polynomial(&ctx, "x0 + x7").unwrap_err();
        assert_eq!(e.position, 5);
        let e = parse_polynomial(&ctx, "x0^").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(parse_polynomial(&ctx, "1/0").is_err());
        assert!(parse_polynomial(&ctx, "x0 x1").is_err());
    }

    #[test]
    fn ideal_lists_infer_dimension() {
        let (n, gens) = parse_ideal("x0*x2 - x1^2; x1*x3 - x2^2\n# comment\nx0*x3 - x1*x2", None).unwrap();
        assert_eq!(n, 3);
        assert_eq!(gens.len(), 3);
        let (n, gens) = parse_ideal("x0^2", None).unwrap();
        assert_eq!((n, gens.len()), (1, 1));
        let err = parse_ideal("x0; x1 +", None).unwrap_err();
        assert_eq!(err.position, 8);
    }
}
