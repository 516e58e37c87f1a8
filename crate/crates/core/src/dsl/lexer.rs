use super::{DslError, ErrorKind, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    /// Unsigned decimal integer, kept as text.
    Number(String),
    Str(String),
    Plus,
    Minus,
    Star,
    Slash,
    Comma,
    Colon,
    Eq,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Number(s) => format!("number {s}"),
            Tok::Str(s) => format!("string {s:?}"),
            other => {
                let c = match other {
                    Tok::Plus => "+",
                    Tok::Minus => "-",
                    Tok::Star => "*",
                    Tok::Slash => "/",
                    Tok::Comma => ",",
                    Tok::Colon => ":",
                    Tok::Eq => "=",
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::LBracket => "[",
                    Tok::RBracket => "]",
                    Tok::LBrace => "{",
                    _ => "}",
                };
                format!("`{c}`")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
    /// byte offsets, used to detect adjacency in hyphenated words
    pub start: usize,
    pub end: usize,
}

pub fn lex(src: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    let advance = |c: char, line: &mut usize, col: &mut usize| {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let (off, c) = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            advance(c, &mut line, &mut col);
            i += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i].1 != '\n' {
                advance(chars[i].1, &mut line, &mut col);
                i += 1;
            }
            continue;
        }
        let start_i = i;
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_' || chars[i].1 == '\'') {
                s.push(chars[i].1);
                advance(chars[i].1, &mut line, &mut col);
                i += 1;
            }
            Tok::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                s.push(chars[i].1);
                advance(chars[i].1, &mut line, &mut col);
                i += 1;
            }
            if i + 1 < chars.len() && (chars[i].1 == '.' || chars[i].1 == 'e') && chars[i + 1].1.is_ascii_digit() {
                let mut lit = s.clone();
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '.') {
                    lit.push(chars[i].1);
                    i += 1;
                }
                return Err(DslError::new(ErrorKind::NonRational(lit), pos));
            }
            Tok::Number(s)
        } else if c == '"' {
            let mut s = String::new();
            advance(c, &mut line, &mut col);
            i += 1;
            loop {
                match chars.get(i) {
                    None => return Err(DslError::new(ErrorKind::Syntax("unterminated string".into()), pos)),
                    Some((_, '"')) => {
                        advance('"', &mut line, &mut col);
                        i += 1;
                        break;
                    }
                    Some((_, '\\')) if matches!(chars.get(i + 1), Some((_, '"' | '\\'))) => {
                        s.push(chars[i + 1].1);
                        col += 2;
                        i += 2;
                    }
                    Some((_, ch)) => {
                        s.push(*ch);
                        advance(*ch, &mut line, &mut col);
                        i += 1;
                    }
                }
            }
            Tok::Str(s)
        } else {
            let t = match c {
                '+' => Tok::Plus,
                '-' | '−' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                ',' => Tok::Comma,
                ':' => Tok::Colon,
                '=' => Tok::Eq,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                other => {
                    return Err(DslError::new(ErrorKind::Syntax(format!("unexpected character {other:?}")), pos));
                }
            };
            advance(c, &mut line, &mut col);
            i += 1;
            t
        };
        let end = chars.get(i).map_or(src.len(), |(o, _)| *o);
        let _ = start_i;
        out.push(Token { tok, pos, start: off, end });
    }
    Ok(out)
}
