//! A small lexer for C-family source text (Java, C, C++, Kotlin-ish).
//!
//! It knows just enough to skip comments, keep string and character literals
//! intact, and report byte offsets and line numbers. Everything it does not
//! recognise becomes single-character punctuation.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Number,
    Str,
    Char,
    Punct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Byte offset of the first character.
    pub start: usize,
    /// Byte offset one past the last character.
    pub end: usize,
    /// 1-based line of the first character.
    pub line: usize,
    /// 1-based line of the last character.
    pub end_line: usize,
}

impl Token {
    pub fn text<'a>(&self, src: &'a str) -> &'a str {
        &src[self.start..self.end]
    }

    pub fn is_punct(&self, src: &str, p: &str) -> bool {
        self.kind == TokenKind::Punct && self.text(src) == p
    }
}

const RAW_STRING_PREFIXES: [&str; 5] = ["R", "u8R", "LR", "uR", "UR"];

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self, ahead: usize) -> Option<u8> {
        self.bytes.get(self.pos + ahead).copied()
    }

    fn bump(&mut self) {
        if self.bytes[self.pos] == b'\n' {
            self.line += 1;
        }
        self.pos += 1;
    }

    fn bump_char(&mut self) {
        let ch = self.src[self.pos..].chars().next().expect("cursor in bounds");
        if ch == '\n' {
            self.line += 1;
        }
        self.pos += ch.len_utf8();
    }

    fn starts_with(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s)
    }
}

pub fn lex(src: &str) -> Result<Vec<Token>> {
    let mut cur = Cursor {
        src,
        bytes: src.as_bytes(),
        pos: 0,
        line: 1,
    };
    let mut tokens = Vec::new();

    while let Some(b) = cur.peek(0) {
        if b.is_ascii_whitespace() {
            cur.bump();
            continue;
        }
        if cur.starts_with("//") {
            while let Some(c) = cur.peek(0) {
                if c == b'\n' {
                    break;
                }
                cur.bump();
            }
            continue;
        }
        if cur.starts_with("/*") {
            let open_line = cur.line;
            cur.pos += 2;
            loop {
                if cur.starts_with("*/") {
                    cur.pos += 2;
                    break;
                }
                if cur.peek(0).is_none() {
                    return Err(Error::Syntax(format!(
                        "unterminated block comment opened on line {open_line}"
                    )));
                }
                cur.bump_char();
            }
            continue;
        }

        let start = cur.pos;
        let line = cur.line;
        let kind = if b == b'"' {
            lex_string(&mut cur)?;
            TokenKind::Str
        } else if b == b'\'' {
            lex_char(&mut cur)?;
            TokenKind::Char
        } else if b.is_ascii_digit() {
            lex_number(&mut cur);
            TokenKind::Number
        } else if is_ident_start(&src[cur.pos..]) {
            while cur.peek(0).is_some() && is_ident_continue(&src[cur.pos..]) {
                cur.bump_char();
            }
            let word = &src[start..cur.pos];
            if cur.peek(0) == Some(b'"') && RAW_STRING_PREFIXES.contains(&word) {
                lex_raw_string(&mut cur)?;
                TokenKind::Str
            } else {
                TokenKind::Ident
            }
        } else if cur.starts_with("->") || cur.starts_with("::") {
            cur.pos += 2;
            TokenKind::Punct
        } else {
            cur.bump_char();
            TokenKind::Punct
        };
        tokens.push(Token {
            kind,
            start,
            end: cur.pos,
            line,
            end_line: cur.line,
        });
    }
    Ok(tokens)
}

fn is_ident_start(rest: &str) -> bool {
    rest.chars()
        .next()
        .is_some_and(|c| c.is_alphabetic() || c == '_' || c == '$')
}

fn is_ident_continue(rest: &str) -> bool {
    rest.chars()
        .next()
        .is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '$')
}

fn lex_string(cur: &mut Cursor<'_>) -> Result<()> {
    let line = cur.line;
    if cur.starts_with("\"\"\"") {
        cur.pos += 3;
        loop {
            if cur.starts_with("\\") && cur.peek(1).is_some() {
                cur.bump();
                cur.bump_char();
                continue;
            }
            if cur.starts_with("\"\"\"") {
                cur.pos += 3;
                return Ok(());
            }
            if cur.peek(0).is_none() {
                return Err(Error::Syntax(format!(
                    "unterminated text block opened on line {line}"
                )));
            }
            cur.bump_char();
        }
    }
    cur.pos += 1;
    loop {
        match cur.peek(0) {
            None | Some(b'\n') => {
                return Err(Error::Syntax(format!(
                    "unterminated string literal on line {line}"
                )))
            }
            Some(b'\\') => {
                cur.bump();
                if cur.peek(0).is_some() {
                    cur.bump_char();
                }
            }
            Some(b'"') => {
                cur.pos += 1;
                return Ok(());
            }
            Some(_) => cur.bump_char(),
        }
    }
}

fn lex_raw_string(cur: &mut Cursor<'_>) -> Result<()> {
    let line = cur.line;
    cur.pos += 1;
    let delim_start = cur.pos;
    while let Some(c) = cur.peek(0) {
        if c == b'(' {
            break;
        }
        if c == b'\n' || c == b'"' {
            return Err(Error::Syntax(format!("malformed raw string on line {line}")));
        }
        cur.bump();
    }
    let delim = &cur.src[delim_start..cur.pos];
    let closing = format!("){delim}\"");
    loop {
        if cur.starts_with(&closing) {
            cur.pos += closing.len();
            return Ok(());
        }
        if cur.peek(0).is_none() {
            return Err(Error::Syntax(format!(
                "unterminated raw string opened on line {line}"
            )));
        }
        cur.bump_char();
    }
}

fn lex_char(cur: &mut Cursor<'_>) -> Result<()> {
    let line = cur.line;
    cur.pos += 1;
    loop {
        match cur.peek(0) {
            None | Some(b'\n') => {
                return Err(Error::Syntax(format!(
                    "unterminated character literal on line {line}"
                )))
            }
            Some(b'\\') => {
                cur.bump();
                if cur.peek(0).is_some() {
                    cur.bump_char();
                }
            }
            Some(b'\'') => {
                cur.pos += 1;
                return Ok(());
            }
            Some(_) => cur.bump_char(),
        }
    }
}

fn lex_number(cur: &mut Cursor<'_>) {
    let start = cur.pos;
    let hex = cur.src[start..].starts_with("0x") || cur.src[start..].starts_with("0X");
    while let Some(c) = cur.peek(0) {
        let exponent_sign = (c == b'+' || c == b'-')
            && cur.pos > start
            && matches!(cur.bytes[cur.pos - 1], b'e' | b'E' | b'p' | b'P')
            && (!hex || matches!(cur.bytes[cur.pos - 1], b'p' | b'P'));
        let digit_separator = c == b'\'' && cur.peek(1).is_some_and(|n| n.is_ascii_alphanumeric());
        if c.is_ascii_alphanumeric() || c == b'.' || c == b'_' || exponent_sign || digit_separator
        {
            cur.bump();
        } else {
            break;
        }
    }
}
