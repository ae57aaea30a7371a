//! Shared tokenizer for scalar literals, the relation DSL and series files.

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    /// Byte offset into the source, for error spans.
    pub pos: usize,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => { out.push(Token { tok: Tok::Plus, pos: i }); i += 1 }
            '-' => { out.push(Token { tok: Tok::Minus, pos: i }); i += 1 }
            '*' => { out.push(Token { tok: Tok::Star, pos: i }); i += 1 }
            '/' => { out.push(Token { tok: Tok::Slash, pos: i }); i += 1 }
            '^' => { out.push(Token { tok: Tok::Caret, pos: i }); i += 1 }
            '(' => { out.push(Token { tok: Tok::LParen, pos: i }); i += 1 }
            ')' => { out.push(Token { tok: Tok::RParen, pos: i }); i += 1 }
            '[' => { out.push(Token { tok: Tok::LBracket, pos: i }); i += 1 }
            ']' => { out.push(Token { tok: Tok::RBracket, pos: i }); i += 1 }
            ',' => { out.push(Token { tok: Tok::Comma, pos: i }); i += 1 }
            ';' => { out.push(Token { tok: Tok::Semi, pos: i }); i += 1 }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digit run parses");
                out.push(Token { tok: Tok::Int(n), pos: start });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(src[start..i].to_string()), pos: start });
            }
            other => return Err(Error::syntax(i, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Cursor over a token stream; cheap to clone for backtracking.
#[derive(Debug, Clone)]
pub struct Cursor<'a> {
    toks: &'a [Token],
    pub idx: usize,
    /// Length of the underlying source, used as the span of "unexpected end".
    pub end: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Token], end: usize) -> Self {
        Cursor { toks, idx: 0, end }
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.tok)
    }

    pub fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|t| t.pos).unwrap_or(self.end)
    }

    pub fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.idx).map(|t| &t.tok);
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    pub fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(Error::syntax(self.pos(), format!("expected {what}")))
        }
    }

    pub fn at_end(&self) -> bool {
        self.idx >= self.toks.len()
    }

    /// Signed integer: optional minus followed by an integer literal.
    pub fn parse_signed_int(&mut self) -> Result<BigInt> {
        let neg = self.eat(&Tok::Minus);
        match self.bump() {
            Some(Tok::Int(n)) => Ok(if neg { -n.clone() } else { n.clone() }),
            _ => {
                self.idx = self.idx.saturating_sub(1);
                Err(Error::syntax(self.pos(), "expected integer"))
            }
        }
    }
}
