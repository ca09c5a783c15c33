//! Surface syntax for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' exponent)?
//! atom   := identifier | unsigned-int | '(' expr ')'
//! exponent := ['+'|'-'] unsigned-int | '(' ['+'|'-'] unsigned-int ')'
//! ```
//!
//! Multiplication is always explicit (`2*u*w`, never `2uw`). Parsing expands
//! eagerly, so the result of [`parse`] is already a [`Polynomial`].

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::poly::{PolyError, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { name: String, offset: usize },
    #[error("at offset {offset}: {source}")]
    Poly {
        offset: usize,
        #[source]
        source: PolyError,
    },
}

impl ExprError {
    pub fn offset(&self) -> usize {
        match self {
            ExprError::Syntax { offset, .. }
            | ExprError::UnknownIdentifier { offset, .. }
            | ExprError::Poly { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err(ExprError::Syntax {
                        offset: i,
                        message: "implicit multiplication is not allowed; use `*`".into(),
                    });
                }
                out.push((Tok::Int(input[start..i].parse().unwrap()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(input[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = input[i..].chars().next().unwrap();
                return Err(ExprError::Syntax {
                    offset: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, input.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    universe: Option<&'a [Var]>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ExprError {
        ExprError::Syntax {
            offset: self.offset(),
            message: format!("expected {wanted}, found {}", self.peek().describe()),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ExprError> {
        let mut negate = false;
        match self.peek() {
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc += self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ExprError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ExprError> {
        let atom_offset = self.offset();
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let e = self.exponent()?;
        base.pow(e).map_err(|source| ExprError::Poly {
            offset: atom_offset,
            source,
        })
    }

    fn exponent(&mut self) -> Result<i64, ExprError> {
        let paren = *self.peek() == Tok::LParen;
        if paren {
            self.bump();
        }
        let negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let offset = self.offset();
        let Tok::Int(n) = self.peek().clone() else {
            return Err(self.unexpected("an integer exponent"));
        };
        self.bump();
        let mut e: i64 = n.try_into().map_err(|_| ExprError::Syntax {
            offset,
            message: "exponent out of range".into(),
        })?;
        if negative {
            e = -e;
        }
        if paren {
            if *self.peek() != Tok::RParen {
                return Err(self.unexpected("`)`"));
            }
            self.bump();
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Polynomial, ExprError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                let v = Var::new(&name);
                if let Some(universe) = self.universe {
                    if !universe.contains(&v) {
                        return Err(ExprError::UnknownIdentifier { name, offset });
                    }
                }
                Ok(Polynomial::var(v))
            }
            Tok::Int(n) => {
                self.bump();
                Ok(Polynomial::constant(n))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("an identifier, integer, or `(`")),
        }
    }
}

/// Parses an expression; variables print alphabetically.
pub fn parse(input: &str) -> Result<Polynomial, ExprError> {
    parse_inner(input, None)
}

/// Parses an expression whose identifiers must all belong to `universe`; the
/// universe also becomes the print order of the result.
pub fn parse_in<V: Into<Var> + Copy>(input: &str, universe: &[V]) -> Result<Polynomial, ExprError> {
    let vars: Vec<Var> = universe.iter().map(|&v| v.into()).collect();
    Ok(parse_inner(input, Some(&vars))?.with_order_vars(&vars))
}

/// Parses with a print order but no restriction on identifiers.
pub fn parse_ordered(input: &str, order: &[Var]) -> Result<Polynomial, ExprError> {
    Ok(parse_inner(input, None)?.with_order_vars(order))
}

fn parse_inner(input: &str, universe: Option<&[Var]>) -> Result<Polynomial, ExprError> {
    let mut parser = Parser {
        toks: lex(input)?,
        pos: 0,
        universe,
    };
    let p = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(p)
}

/// Canonical text: graded-lex terms, `[sign][|coeff|*]var^e*...`, unit
/// coefficients and exponents omitted, `0` for the zero polynomial.
pub fn print(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let order = p.print_order();
    let mut out = String::new();
    for (i, (m, c)) in p.sorted_terms().into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(abs.to_string());
        }
        for v in &order {
            match m.exponent(*v) {
                0 => {}
                1 => factors.push(v.name().to_string()),
                e => factors.push(format!("{}^{}", v.name(), e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn mono(pairs: &[(&str, i64)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(v, e)| (Var::new(v), e)))
    }

    #[test]
    fn parses_sum_of_monomials() {
        let p = parse("x*y + x^2*y").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&mono(&[("x", 1), ("y", 1)])), BigInt::from(1));
        assert_eq!(p.coeff(&mono(&[("x", 2), ("y", 1)])), BigInt::from(1));
    }

    #[test]
    fn expands_powers() {
        let p = parse("(x+y)^2").unwrap();
        assert_eq!(p.coeff(&mono(&[("x", 2)])), BigInt::from(1));
        assert_eq!(p.coeff(&mono(&[("x", 1), ("y", 1)])), BigInt::from(2));
        assert_eq!(p.coeff(&mono(&[("y", 2)])), BigInt::from(1));
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn rule_right_side() {
        let p = parse("2*u*w").unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&mono(&[("u", 1), ("w", 1)])), BigInt::from(2));
    }

    #[test]
    fn laurent_exponents() {
        let a = parse("x*y^-1").unwrap();
        assert_eq!(a.coeff(&mono(&[("x", 1), ("y", -1)])), BigInt::from(1));
        assert_eq!(parse("x*y^(-1)").unwrap(), a);
        assert!(matches!(
            parse("(x+y)^-1"),
            Err(ExprError::Poly { offset: 0, .. })
        ));
    }

    #[test]
    fn syntax_errors_report_offsets() {
        assert_eq!(parse("x+").unwrap_err().offset(), 2);
        assert!(matches!(parse("x+").unwrap_err(), ExprError::Syntax { .. }));
        assert_eq!(parse("2uw").unwrap_err().offset(), 1);
        assert_eq!(parse("(x+y").unwrap_err().offset(), 4);
        assert_eq!(parse("x $ y").unwrap_err().offset(), 2);
        assert_eq!(parse("x y").unwrap_err().offset(), 2);
        assert_eq!(parse("x^y").unwrap_err().offset(), 2);
        assert_eq!(parse("").unwrap_err().offset(), 0);
    }

    #[test]
    fn universe_restricts_identifiers() {
        assert!(parse_in("x*y", &["x", "y"]).is_ok());
        assert_eq!(
            parse_in("x*q", &["x", "y"]).unwrap_err(),
            ExprError::UnknownIdentifier {
                name: "q".into(),
                offset: 2
            }
        );
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(print(&parse("x*y + x^2*y").unwrap()), "x^2*y + x*y");
        assert_eq!(print(&Polynomial::zero()), "0");
        assert_eq!(print(&parse("x*y^2+x^2*y").unwrap()), "x^2*y + x*y^2");
        assert_eq!(print(&parse("-y^-1*x").unwrap()), "-x*y^-1");
        assert_eq!(print(&parse("3 - x").unwrap()), "-x + 3");
        assert_eq!(print(&parse("-1").unwrap()), "-1");
        assert_eq!(print(&parse("2*u*w + 0*v").unwrap()), "2*u*w");
    }

    #[test]
    fn declared_order_controls_printing() {
        let p = parse_in("x*z + y^2", &["z", "y", "x"]).unwrap();
        assert_eq!(print(&p), "z*x + y^2");
        let q = parse("b*a").unwrap().with_order(["b"]);
        assert_eq!(print(&q), "b*a");
    }

    #[test]
    fn parse_print_round_trip() {
        for s in [
            "x^2*y + x*y",
            "-x*y^-1 + 7",
            "12345678901234567890*u^3*v - w",
            "x*y^-1*(y-x)^4",
            "(x+y+z)^3 - 2*x*y*z",
        ] {
            let p = parse(s).unwrap();
            assert_eq!(parse(&print(&p)).unwrap(), p, "{s}");
        }
    }
}
