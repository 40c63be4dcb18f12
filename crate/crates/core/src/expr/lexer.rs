use num_bigint::BigInt;

use super::{ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(super) enum Tok {
    Int(BigInt),
    X,
    Lambda,
    Call(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("number `{v}`"),
            Tok::X => "`x`".into(),
            Tok::Lambda => "`l`".into(),
            Tok::Call(c) => format!("`{c}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
        }
    }
}

pub(super) fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(src[start..i].parse().expect("ascii digits")), start));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &src[start..i];
                let tok = match word {
                    "x" => Tok::X,
                    "l" => Tok::Lambda,
                    "B" | "E" | "G" => Tok::Call(word.chars().next().expect("nonempty")),
                    _ => {
                        return Err(ParseError {
                            kind: ParseErrorKind::UnknownIdentifier(word.to_string()),
                            offset: start,
                        })
                    }
                };
                out.push((tok, start));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            _ => {
                let ch = src[start..].chars().next().expect("in bounds");
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(ch),
                    offset: start,
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}
