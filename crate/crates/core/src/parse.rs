//! Expression parser for polynomials.
//!
//! Grammar (whitespace separates tokens):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition is concatenation
//! unary  := '-' unary | atom
//! atom   := integer | letter | '(' expr ')' | '[' expr ',' expr ']'
//! letter := ('x' | 'y' | 'b') digits
//! ```
//!
//! `/` only accepts a nonzero constant on the right. `[p, q]` is the
//! commutator. All letters must come from a single alphabet; a hint is
//! needed when the expression has no letters at all.

use crate::error::{Error, Result};
use crate::ncpoly::NCPoly;
use crate::rational::Rat;
use crate::word::{Alphabet, Letter};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rat),
    Letter(Alphabet, u8),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
}

#[derive(Debug)]
enum Ast {
    Num(Rat),
    Letter(u8),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Bracket(Box<Ast>, Box<Ast>),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = simple {
            out.push(t);
            i += 1;
            continue;
        }
        let digits_from = |start: usize| {
            let mut j = start;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            j
        };
        if c.is_ascii_digit() {
            let j = digits_from(i);
            let text: String = chars[i..j].iter().collect();
            out.push(Tok::Num(text.parse()?));
            i = j;
        } else if let Some(a) = Alphabet::from_prefix(c) {
            let j = digits_from(i + 1);
            if j == i + 1 {
                return Err(Error::Parse(format!("letter `{c}` needs an index")));
            }
            let text: String = chars[i + 1..j].iter().collect();
            let idx: u8 = text
                .parse()
                .map_err(|_| Error::Parse(format!("letter index `{text}` out of range")))?;
            Letter::new(a, idx)?;
            out.push(Tok::Letter(a, idx));
            i = j;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.bump() {
            Some(ref u) if *u == t => Ok(()),
            other => Err(Error::Parse(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Num(_) | Tok::Letter(..) | Tok::LParen | Tok::LBrack) => {
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.bump() {
            Some(Tok::Num(r)) => Ok(Ast::Num(r)),
            Some(Tok::Letter(_, i)) => Ok(Ast::Letter(i)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::LBrack) => {
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::RBrack)?;
                Ok(Ast::Bracket(Box::new(a), Box::new(b)))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn eval(ast: &Ast, a: Alphabet) -> Result<NCPoly> {
    Ok(match ast {
        Ast::Num(r) => NCPoly::constant(a, r.clone()),
        Ast::Letter(i) => NCPoly::letter(a, *i),
        Ast::Add(l, r) => &eval(l, a)? + &eval(r, a)?,
        Ast::Sub(l, r) => &eval(l, a)? - &eval(r, a)?,
        Ast::Mul(l, r) => &eval(l, a)? * &eval(r, a)?,
        Ast::Neg(x) => -eval(x, a)?,
        Ast::Bracket(l, r) => eval(l, a)?.commutator(&eval(r, a)?)?,
        Ast::Div(l, r) => {
            let d = eval(r, a)?;
            let is_const = d.words().all(|w| w.is_empty());
            let c = d.constant_term();
            if !is_const || c.is_zero() {
                return Err(Error::Parse("division only by a nonzero constant".into()));
            }
            eval(l, a)?.scale(&c.recip())
        }
    })
}

/// Parses a polynomial expression such as `x0 x1 - x1 x0`,
/// `-1/2*y1 + y2 y1` or `[b1, b2]`.
pub fn parse_poly(s: &str, hint: Option<Alphabet>) -> Result<NCPoly> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut alphabet = hint;
    for t in &toks {
        if let Tok::Letter(a, _) = t {
            match alphabet {
                Some(f) if f != *a => {
                    return Err(Error::AlphabetMismatch {
                        expected: f,
                        found: *a,
                    })
                }
                _ => alphabet = Some(*a),
            }
        }
    }
    let alphabet = alphabet
        .ok_or_else(|| Error::Parse("cannot infer alphabet of a constant expression".into()))?;
    let mut p = Parser { toks, pos: 0 };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            p.toks[p.pos]
        )));
    }
    eval(&ast, alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    #[test]
    fn parses_basic_forms() {
        let p = parse_poly("x0 x1 - x1 x0", None).unwrap();
        assert_eq!(p.alphabet(), Alphabet::X);
        assert_eq!(p.coeff(&Word::from_slice(&[0, 1])), Rat::ONE);
        assert_eq!(p.coeff(&Word::from_slice(&[1, 0])), Rat::from_int(-1));

        let q = parse_poly("-1/2*y1", None).unwrap();
        assert_eq!(q.coeff(&Word::from_slice(&[1])), Rat::new(-1, 2));

        let r = parse_poly("[b1, b2]", None).unwrap();
        assert_eq!(r, parse_poly("b1 b2 - b2 b1", None).unwrap());

        let c = parse_poly("3", Some(Alphabet::B)).unwrap();
        assert_eq!(c.constant_term(), Rat::from_int(3));
    }

    #[test]
    fn precedence() {
        let a = parse_poly("x0 + x1 x0", None).unwrap();
        assert_eq!(a.len(), 2);
        let b = parse_poly("(x0 + x1) x0", None).unwrap();
        assert_eq!(b, parse_poly("x0 x0 + x1 x0", None).unwrap());
        let c = parse_poly("2 x0 / 4", None).unwrap();
        assert_eq!(c, parse_poly("1/2*x0", None).unwrap());
        let d = parse_poly("- - x0", None).unwrap();
        assert_eq!(d, parse_poly("x0", None).unwrap());
    }

    #[test]
    fn errors() {
        assert!(parse_poly("", None).is_err());
        assert!(parse_poly("3", None).is_err());
        assert!(parse_poly("x0 y1", None).is_err());
        assert!(parse_poly("x2", None).is_err());
        assert!(parse_poly("y0", None).is_err());
        assert!(parse_poly("x0 / x1", None).is_err());
        assert!(parse_poly("x0 / 0", None).is_err());
        assert!(parse_poly("(x0", None).is_err());
        assert!(parse_poly("x0 )", None).is_err());
        assert!(parse_poly("x0 ? x1", None).is_err());
        assert!(parse_poly("b1", Some(Alphabet::X)).is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in [
            "x0 x1 - x1 x0",
            "2*x0 x1 x1 + x1 x0 x1",
            "-1/2*y1",
            "3 - 1/2*y1 + y2 y1",
            "b0 b2 - 7/3*b2 b0 b0",
        ] {
            let p = parse_poly(s, None).unwrap();
            assert_eq!(parse_poly(&p.to_string(), Some(p.alphabet())).unwrap(), p);
        }
        assert_eq!(
            parse_poly("x1 x0 + x0 x1", None).unwrap().to_string(),
            "x0 x1 + x1 x0"
        );
    }
}
