//! Polynomial text parser.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ['*'] factor ('*' factor)* | coeff | factor ('*' factor)*
//! factor := var ['^' uint]
//! coeff  := int ['/' uint]
//! var    := ('x'|'y') uint
//! ```
//!
//! Whitespace is ignored between tokens.

use std::fmt;

use apolarity::{Field, Monomial, Poly, PolyRing, Side};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    /// Byte offset into the source.
    pub offset: usize,
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at line {}, column {} (offset {}): {}",
            self.line, self.column, self.offset, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(Side, usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("number {v}"),
            Tok::Var(s, i) => format!("variable {}{i}", s.prefix()),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

/// A parsed polynomial before it is placed in a ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyText {
    pub source: String,
    /// `None` when no variable occurs.
    pub side: Option<Side>,
    /// Largest variable index that occurs.
    pub max_index: Option<usize>,
    terms: Vec<(Vec<(usize, u32)>, BigRational)>,
}

impl PolyText {
    /// Number of variables the text needs.
    pub fn min_nvars(&self) -> usize {
        self.max_index.map_or(0, |i| i + 1)
    }

    /// Place the polynomial in the ring with `nvars` variables on the given
    /// side. Fails if the text uses the other side or too many variables, or
    /// if a denominator vanishes in the field.
    pub fn to_poly(&self, field: Field, nvars: usize, side: Side) -> apolarity::Result<Poly> {
        if let Some(s) = self.side {
            if s != side {
                return Err(apolarity::Error::SideMismatch {
                    expected: side,
                    found: s,
                });
            }
        }
        if self.min_nvars() > nvars {
            return Err(apolarity::Error::VariableCountMismatch {
                left: self.min_nvars(),
                right: nvars,
            });
        }
        let ring = PolyRing::new(field, nvars, side);
        let mut out = ring.zero();
        for (factors, c) in &self.terms {
            let mut e = vec![0u32; nvars];
            for &(i, k) in factors {
                e[i] += k;
            }
            out.add_term(Monomial::new(e), &field.from_rational(c)?);
        }
        Ok(out)
    }

    /// The polynomial in its own side (forms if no variable occurs) with
    /// exactly the variables it mentions.
    pub fn to_own_poly(&self, field: Field) -> apolarity::Result<Poly> {
        self.to_poly(field, self.min_nvars(), self.side.unwrap_or(Side::Form))
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.src[start..start + len]))
    }

    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let Some(c) = self.src[start..].chars().next() else {
            return Ok((start, Tok::End));
        };
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            _ => None,
        };
        if let Some(t) = simple {
            self.pos += 1;
            return Ok((start, t));
        }
        if c.is_ascii_digit() {
            let (_, s) = self.digits().expect("starts with a digit");
            return Ok((start, Tok::Int(s.parse().expect("ascii digits"))));
        }
        if c == 'x' || c == 'y' {
            self.pos += 1;
            let side = if c == 'x' { Side::Form } else { Side::Operator };
            let Some((at, s)) = self.digits() else {
                return Err(error(
                    self.src,
                    self.pos,
                    format!("expected a variable index after '{c}'"),
                ));
            };
            let index = s
                .parse()
                .map_err(|_| error(self.src, at, format!("variable index {s} is too large")))?;
            return Ok((start, Tok::Var(side, index)));
        }
        if c.is_alphabetic() {
            return Err(error(
                self.src,
                start,
                format!("unknown variable '{c}' (use x0, x1, ... or y0, y1, ...)"),
            ));
        }
        Err(error(
            self.src,
            start,
            format!("unexpected character '{c}'"),
        ))
    }
}

fn error(src: &str, offset: usize, message: String) -> ParseError {
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    ParseError {
        message,
        offset,
        line,
        column: src[line_start..offset].chars().count() + 1,
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    at: usize,
    side: Option<(Side, usize)>,
    max_index: Option<usize>,
}

impl<'a> Parser<'a> {
    fn advance(&mut self) -> Result<(), ParseError> {
        let (at, tok) = self.lexer.next()?;
        self.at = at;
        self.tok = tok;
        Ok(())
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(error(
            self.lexer.src,
            self.at,
            format!("expected {expected}, found {}", self.tok.describe()),
        ))
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Int(v) => {
                self.advance()?;
                Ok(v)
            }
            other => {
                self.tok = other;
                self.fail("an unsigned integer")
            }
        }
    }

    fn coeff(&mut self) -> Result<BigRational, ParseError> {
        let num = self.uint()?;
        if self.tok != Tok::Slash {
            return Ok(BigRational::from_integer(num));
        }
        self.advance()?;
        let at = self.at;
        let den = self.uint()?;
        if den.is_zero() {
            return Err(error(self.lexer.src, at, "zero denominator".into()));
        }
        Ok(BigRational::new(num, den))
    }

    fn factor(&mut self) -> Result<(usize, u32), ParseError> {
        let Tok::Var(side, index) = self.tok else {
            return self.fail("a variable");
        };
        match self.side {
            Some((s, first)) if s != side => {
                return Err(error(
                    self.lexer.src,
                    self.at,
                    format!(
                        "mixed variables: {}{index} after {}{}",
                        side.prefix(),
                        s.prefix(),
                        first
                    ),
                ));
            }
            None => self.side = Some((side, index)),
            _ => {}
        }
        self.max_index = self.max_index.max(Some(index));
        self.advance()?;
        if self.tok != Tok::Caret {
            return Ok((index, 1));
        }
        self.advance()?;
        let at = self.at;
        let e = self.uint()?;
        let e = u32::try_from(e)
            .map_err(|_| error(self.lexer.src, at, "exponent is too large".into()))?;
        Ok((index, e))
    }

    fn term(&mut self) -> Result<(Vec<(usize, u32)>, BigRational), ParseError> {
        let mut coeff = BigRational::one();
        let mut factors = Vec::new();
        match self.tok {
            Tok::Int(_) => {
                coeff = self.coeff()?;
                match self.tok {
                    Tok::Star => {
                        self.advance()?;
                        factors.push(self.factor()?);
                    }
                    Tok::Var(..) => factors.push(self.factor()?),
                    _ => return Ok((factors, coeff)),
                }
            }
            Tok::Var(..) => factors.push(self.factor()?),
            _ => return self.fail("a term"),
        }
        while self.tok == Tok::Star {
            self.advance()?;
            factors.push(self.factor()?);
        }
        Ok((factors, coeff))
    }
}

/// Parse one polynomial.
pub fn parse_poly(text: &str) -> Result<PolyText, ParseError> {
    let mut p = Parser {
        lexer: Lexer { src: text, pos: 0 },
        tok: Tok::End,
        at: 0,
        side: None,
        max_index: None,
    };
    p.advance()?;
    let mut terms = Vec::new();
    let mut negative = false;
    match p.tok {
        Tok::Minus => {
            negative = true;
            p.advance()?;
        }
        Tok::Plus => p.advance()?,
        _ => {}
    }
    loop {
        let (factors, c) = p.term()?;
        terms.push((factors, if negative { -c } else { c }));
        match p.tok {
            Tok::Plus => negative = false,
            Tok::Minus => negative = true,
            Tok::End => break,
            _ => return p.fail("'+', '-' or end of input"),
        }
        p.advance()?;
    }
    Ok(PolyText {
        source: text.to_string(),
        side: p.side.map(|(s, _)| s),
        max_index: p.max_index,
        terms,
    })
}

/// Split a list such as `x0, x1 + x2; x2` on commas and semicolons and parse
/// each entry.
pub fn parse_list(text: &str) -> Result<Vec<PolyText>, ParseError> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text
        .char_indices()
        .chain(std::iter::once((text.len(), ',')))
    {
        if c != ',' && c != ';' {
            continue;
        }
        let piece = &text[start..i];
        if piece.trim().is_empty() {
            return Err(error(text, i, "empty list entry".into()));
        }
        let parsed = parse_poly(piece).map_err(|e| error(text, start + e.offset, e.message))?;
        out.push(parsed);
        start = i + c.len_utf8();
    }
    Ok(out)
}

/// One polynomial per nonempty line; `#` starts a comment.
pub fn parse_file(text: &str) -> Result<Vec<PolyText>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        if !content.trim().is_empty() {
            let parsed = parse_poly(content.trim_end_matches(['\n', '\r']))
                .map_err(|e| error(text, offset + e.offset, e.message))?;
            out.push(parsed);
        }
        offset += line.len();
    }
    Ok(out)
}
