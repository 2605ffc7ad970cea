//! Expression grammar over a presentation's generators.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' ['-'] INT]
//! atom   := INT | 'q' | NAME '[' INT ',' INT ']' | '(' expr ')'
//! ```
//!
//! Whitespace-insensitive. `q^k` admits any integer exponent; a negative
//! exponent on a generator is legal only if the generator is invertible in
//! the ambient presentation; a negative exponent on a parenthesized
//! expression requires a unit monomial. The canonical text emitted by the
//! kernel parses back to the same element.

use num_bigint::BigInt;
use qmat::pbwcore::{Element, Monomial, Presentation};
use qmat::qcoeff::LaurentInt;

/// Parse error with a byte position into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Errors surfaced while evaluating a syntactically valid expression
/// (currently only invalid inverses).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for EvalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for EvalError {}

#[derive(Debug)]
pub enum ExprError {
    Parse(ParseError),
    Eval(EvalError),
}

impl std::fmt::Display for ExprError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExprError::Parse(e) => write!(f, "{}", e),
            ExprError::Eval(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for ExprError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Gen(String, u32, u32),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn read_int(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError {
                position: start,
                message: "expected an integer".into(),
            });
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        self.skip_ws();
        let at = self.pos;
        if self.pos >= self.src.len() {
            return Ok((at, Tok::End));
        }
        let ch = self.src[self.pos];
        let simple = match ch {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            self.pos += 1;
            return Ok((at, tok));
        }
        if ch.is_ascii_digit() {
            return Ok((at, Tok::Int(self.read_int()?)));
        }
        if ch.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .to_string();
            self.skip_ws();
            if self.pos < self.src.len() && self.src[self.pos] == b'[' {
                self.pos += 1;
                self.skip_ws();
                let row = self.read_int()?;
                self.skip_ws();
                if self.pos >= self.src.len() || self.src[self.pos] != b',' {
                    return Err(ParseError {
                        position: self.pos,
                        message: "expected `,` in generator index".into(),
                    });
                }
                self.pos += 1;
                self.skip_ws();
                let col = self.read_int()?;
                self.skip_ws();
                if self.pos >= self.src.len() || self.src[self.pos] != b']' {
                    return Err(ParseError {
                        position: self.pos,
                        message: "expected `]` after generator index".into(),
                    });
                }
                self.pos += 1;
                let to_u32 = |v: BigInt, at: usize| -> Result<u32, ParseError> {
                    u32::try_from(v).map_err(|_| ParseError {
                        position: at,
                        message: "generator index out of range".into(),
                    })
                };
                return Ok((at, Tok::Gen(name, to_u32(row, at)?, to_u32(col, at)?)));
            }
            if name == "q" {
                return Ok((at, Tok::Q));
            }
            return Err(ParseError {
                position: at,
                message: format!("unknown name `{}` (generators are written NAME[i,j])", name),
            });
        }
        Err(ParseError {
            position: at,
            message: format!("unexpected character `{}`", ch as char),
        })
    }
}

pub struct Parser<'a> {
    pres: &'a Presentation,
    lexer: Lexer<'a>,
    look: (usize, Tok),
}

impl<'a> Parser<'a> {
    pub fn new(pres: &'a Presentation, src: &'a str) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src);
        let look = lexer.next()?;
        Ok(Parser { pres, lexer, look })
    }

    fn bump(&mut self) -> Result<(usize, Tok), ParseError> {
        let out = self.look.clone();
        self.look = self.lexer.next()?;
        Ok(out)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        let (at, got) = self.bump()?;
        if got == tok {
            Ok(())
        } else {
            Err(ParseError {
                position: at,
                message: format!("expected {}", what),
            })
        }
    }

    pub fn parse_element(mut self) -> Result<Element, ExprError> {
        let e = self.expr()?;
        let (at, tok) = self.look.clone();
        if tok != Tok::End {
            return Err(ExprError::Parse(ParseError {
                position: at,
                message: "trailing input after expression".into(),
            }));
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Element, ExprError> {
        let mut negate = false;
        if self.look.1 == Tok::Minus {
            self.bump().map_err(ExprError::Parse)?;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.look.1 {
                Tok::Plus => {
                    self.bump().map_err(ExprError::Parse)?;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Tok::Minus => {
                    self.bump().map_err(ExprError::Parse)?;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, ExprError> {
        let mut acc = self.factor()?;
        while self.look.1 == Tok::Star {
            self.bump().map_err(ExprError::Parse)?;
            let f = self.factor()?;
            acc = self.pres.multiply(&acc, &f);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Option<i64>, ParseError> {
        if self.look.1 != Tok::Caret {
            return Ok(None);
        }
        self.bump()?;
        let mut neg = false;
        if self.look.1 == Tok::Minus {
            self.bump()?;
            neg = true;
        }
        let (at, tok) = self.bump()?;
        let Tok::Int(v) = tok else {
            return Err(ParseError {
                position: at,
                message: "expected an integer exponent".into(),
            });
        };
        let mag = i64::try_from(v).map_err(|_| ParseError {
            position: at,
            message: "exponent out of range".into(),
        })?;
        Ok(Some(if neg { -mag } else { mag }))
    }

    fn power_of(&mut self, base: Element, at: usize) -> Result<Element, ExprError> {
        let exp = self.exponent().map_err(ExprError::Parse)?;
        let Some(e) = exp else { return Ok(base) };
        if e >= 0 {
            let mut acc = Element::one();
            for _ in 0..e {
                acc = self.pres.multiply(&acc, &base);
            }
            return Ok(acc);
        }
        // negative power: base must be a unit monomial on invertible generators
        let inv = invert_unit(self.pres, &base).ok_or(ExprError::Eval(EvalError {
            position: at,
            message: "negative power of a non-invertible expression".into(),
        }))?;
        let mut acc = Element::one();
        for _ in 0..(-e) {
            acc = self.pres.multiply(&acc, &inv);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element, ExprError> {
        let (at, tok) = self.bump().map_err(ExprError::Parse)?;
        match tok {
            Tok::Int(v) => {
                let base = Element::scalar(LaurentInt::term(v, 0));
                self.power_of(base, at)
            }
            Tok::Q => {
                let exp = self.exponent().map_err(ExprError::Parse)?.unwrap_or(1);
                Ok(Element::scalar(LaurentInt::q_pow(exp)))
            }
            Tok::Gen(name, row, col) => {
                // namespace errors are parse-level: the ambient algebra fixes
                // which generator families are in scope
                let gid = self
                    .pres
                    .find_gen_named(&name, row, col)
                    .ok_or(ExprError::Parse(ParseError {
                        position: at,
                        message: format!(
                            "unknown generator `{}[{},{}]` in this algebra",
                            name, row, col
                        ),
                    }))?;
                let exp = self.exponent().map_err(ExprError::Parse)?.unwrap_or(1);
                if exp < 0 && !self.pres.gen_info(gid).invertible {
                    return Err(ExprError::Eval(EvalError {
                        position: at,
                        message: format!(
                            "negative power of non-invertible generator `{}[{},{}]`",
                            name, row, col
                        ),
                    }));
                }
                Ok(Element::monomial(Monomial::gen_pow(gid, exp)))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`").map_err(ExprError::Parse)?;
                self.power_of(inner, at)
            }
            other => Err(ExprError::Parse(ParseError {
                position: at,
                message: format!("unexpected token {:?}", other),
            })),
        }
    }
}

fn invert_unit(pres: &Presentation, x: &Element) -> Option<Element> {
    if x.num_terms() != 1 {
        return None;
    }
    let (m, c) = x.iter().next().unwrap();
    let cinv = c.try_unit_inverse()?;
    if m.exps().iter().any(|(g, _)| !pres.gen_info(*g).invertible) {
        return None;
    }
    Some(Element::term(
        cinv,
        Monomial::from_exps(m.exps().iter().map(|(g, e)| (*g, -e))),
    ))
}

/// Parse an expression over the given presentation.
pub fn parse_element(pres: &Presentation, src: &str) -> Result<Element, ExprError> {
    Parser::new(pres, src)
        .map_err(ExprError::Parse)?
        .parse_element()
}
