use std::fmt;

use num_bigint::BigUint;

use super::GammaExpr;
use crate::clifford::Generator;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
}

/// A diagnostic with the byte offset at which parsing failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ParseErrorKind::Lexical => "lexical error",
            ParseErrorKind::Syntax => "syntax error",
        };
        write!(f, "{kind} at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Star,
    Minus,
    LParen,
    RParen,
    Integer(BigUint),
    Identity,
    Imaginary,
    Gen(Generator),
    Func(Func),
    End,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Func {
    Star,
    Transpose,
    Dagger,
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    let lexical = |offset: usize, message: String| ParseError { kind: ParseErrorKind::Lexical, offset, message };
    while pos < bytes.len() {
        let ch = bytes[pos];
        let start = pos;
        let token = match ch {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'*' => Token::Star,
            b'-' => Token::Minus,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                out.push((Token::Integer(text[start..pos].parse().expect("ascii digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                    pos += 1;
                }
                let word = &text[start..pos];
                let tok = match word {
                    "I" => Token::Identity,
                    "i" => Token::Imaginary,
                    "star" => Token::Func(Func::Star),
                    "transpose" => Token::Func(Func::Transpose),
                    "dagger" => Token::Func(Func::Dagger),
                    "g0" | "g1" | "g2" | "g3" | "g5" => {
                        Token::Gen(Generator::from_symbol(word).expect("known generator"))
                    }
                    _ => return Err(lexical(start, format!("unknown token {word:?}"))),
                };
                out.push((tok, start));
                continue;
            }
            _ => {
                let c = text[start..].chars().next().unwrap_or('?');
                return Err(lexical(start, format!("unexpected character {c:?}")));
            }
        };
        out.push((token, start));
        pos += 1;
    }
    out.push((Token::End, text.len()));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { kind: ParseErrorKind::Syntax, offset: self.offset(), message: message.into() }
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<GammaExpr, ParseError> {
        let mut items = vec![self.term()?];
        while *self.peek() == Token::Star {
            self.bump();
            items.push(self.term()?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { GammaExpr::Product(items) })
    }

    fn term(&mut self) -> Result<GammaExpr, ParseError> {
        if *self.peek() == Token::Minus {
            self.bump();
            return Ok(GammaExpr::Negate(Box::new(self.factor()?)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<GammaExpr, ParseError> {
        match self.peek().clone() {
            Token::Identity => {
                self.bump();
                Ok(GammaExpr::Identity)
            }
            Token::Imaginary => {
                self.bump();
                Ok(GammaExpr::ImaginaryUnit)
            }
            Token::Integer(n) => {
                self.bump();
                Ok(GammaExpr::Integer(n))
            }
            Token::Gen(g) => {
                self.bump();
                Ok(GammaExpr::Generator(g))
            }
            Token::Func(func) => {
                self.bump();
                self.expect(Token::LParen, "'(' after function name")?;
                let inner = Box::new(self.expr()?);
                self.expect(Token::RParen, "')'")?;
                Ok(match func {
                    Func::Star => GammaExpr::Star(inner),
                    Func::Transpose => GammaExpr::Transpose(inner),
                    Func::Dagger => GammaExpr::Dagger(inner),
                })
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Token::End => Err(self.error("unexpected end of input")),
            other => Err(self.error(format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Token) -> &'static str {
    match t {
        Token::Star => "'*'",
        Token::Minus => "'-'",
        Token::RParen => "')'",
        Token::LParen => "'('",
        _ => "token",
    }
}

/// Parses the textual form of a gamma expression. Whitespace is ignored.
pub fn parse(text: &str) -> Result<GammaExpr, ParseError> {
    let mut parser = Parser { tokens: lex(text)?, pos: 0 };
    let e = parser.expr()?;
    if *parser.peek() != Token::End {
        return Err(parser.error("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GammaExpr::*;

    #[test]
    fn parses_product_with_imaginary_unit() {
        assert_eq!(parse("i*g0").unwrap(), Product(vec![ImaginaryUnit, Generator(crate::clifford::Generator::G0)]));
        assert_eq!(parse(" i * g0 ").unwrap(), parse("i*g0").unwrap());
        assert_eq!(parse("I").unwrap(), Identity);
    }

    #[test]
    fn negation_binds_to_factor() {
        let e = parse("-1*g0*g2").unwrap();
        let Product(items) = e else { panic!("expected product") };
        assert_eq!(items[0], GammaExpr::negate(GammaExpr::int(1)));
        assert_eq!(items.len(), 3);
        assert_eq!(
            parse("dagger(-g1)").unwrap(),
            Dagger(Box::new(GammaExpr::negate(Generator(crate::clifford::Generator::G1))))
        );
    }

    #[test]
    fn lexical_errors() {
        let err = parse("g4").unwrap_err();
        assert_eq!((err.kind, err.offset), (ParseErrorKind::Lexical, 0));
        let err = parse("g0 * $").unwrap_err();
        assert_eq!((err.kind, err.offset), (ParseErrorKind::Lexical, 5));
        assert_eq!(parse("conj(g0)").unwrap_err().kind, ParseErrorKind::Lexical);
    }

    #[test]
    fn syntax_errors() {
        let err = parse("g0*(").unwrap_err();
        assert_eq!((err.kind, err.offset), (ParseErrorKind::Syntax, 4));
        assert_eq!(err.to_string(), "syntax error at offset 4: unexpected end of input");
        assert_eq!(parse("(g0").unwrap_err().offset, 3);
        assert_eq!(parse("g0*").unwrap_err().offset, 3);
        assert_eq!(parse("g0 g1").unwrap_err().offset, 3);
        assert_eq!(parse("--g0").unwrap_err().offset, 1);
        assert_eq!(parse("g0)").unwrap_err().offset, 2);
        assert_eq!(parse("star g0").unwrap_err().offset, 5);
        assert_eq!(parse("").unwrap_err().offset, 0);
    }

    #[test]
    fn big_integers_do_not_overflow() {
        let e = parse("123456789012345678901234567890").unwrap();
        assert!(matches!(e, Integer(_)));
    }
}
