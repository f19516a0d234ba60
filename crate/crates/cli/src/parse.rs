//! Polynomial expressions in `x`: integer and rational literals, `+ - * ^`,
//! parentheses and unary minus. Multiplication is always explicit.

use num_bigint::BigInt;
use num_traits::Zero;

use critval_core::{Poly, Rational};

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    /// 0-based character offset.
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Rational),
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(q) => format!("number {q}"),
        Tok::Int(n) => format!("number {n}"),
        Tok::X => "'x'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |start: usize| -> usize {
        let mut j = start;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let end = digits(i);
                let num: BigInt = chars[i..end].iter().collect::<String>().parse().unwrap();
                // `p/q` with no spaces is a single rational literal.
                if end + 1 < chars.len() && chars[end] == '/' && chars[end + 1].is_ascii_digit() {
                    let dend = digits(end + 1);
                    let den: BigInt = chars[end + 1..dend].iter().collect::<String>().parse().unwrap();
                    if den.is_zero() {
                        return err(end + 1, "zero denominator");
                    }
                    out.push((Tok::Num(Rational::new(num, den)), i));
                    i = dend;
                } else {
                    out.push((Tok::Int(num), i));
                    i = end;
                }
                continue;
            }
            'x' => Tok::X,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return err(i, format!("unexpected character '{other}'")),
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => match u32::try_from(&n).ok().filter(|&e| e <= MAX_EXPONENT) {
                Some(e) => Ok(base.pow(e)),
                None => err(pos, format!("exponent {n} exceeds {MAX_EXPONENT}")),
            },
            Tok::End => err(pos, "expected a nonnegative integer exponent"),
            t => err(pos, format!("exponent must be a nonnegative integer literal, found {}", describe(&t))),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(Poly::constant(Rational::from(n))),
            Tok::Num(q) => Ok(Poly::constant(q)),
            Tok::X => Ok(Poly::x()),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    t => err(close, format!("expected ')', found {}", describe(&t))),
                }
            }
            t => err(pos, format!("expected a number, 'x' or '(', found {}", describe(&t))),
        }
    }
}

pub fn parse_polynomial(text: &str) -> Result<Poly, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let poly = p.expr()?;
    match p.peek() {
        Tok::End => Ok(poly),
        t => {
            let found = describe(t);
            err(p.pos(), format!("expected an operator, found {found}"))
        }
    }
}
