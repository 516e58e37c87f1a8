use num::Zero;

use super::ast::*;
use super::lexer::{lex, Tok, Token};
use super::{DslError, ErrorKind, Pos};
use crate::scalar::{parse_scalar, Scalar};

pub fn parse(src: &str) -> Result<Document, DslError> {
    let tokens = lex(src)?;
    let end = tokens.last().map_or(Pos { line: 1, col: 1 }, |t| t.pos);
    let mut p = Parser { toks: tokens, at: 0, end };
    let mut decls = Vec::new();
    while !p.done() {
        decls.push(p.decl()?);
    }
    Ok(Document { decls })
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: Pos,
}

fn syntax(msg: impl Into<String>, pos: Pos) -> DslError {
    DslError::new(ErrorKind::Syntax(msg.into()), pos)
}

impl Parser {
    fn done(&self) -> bool {
        self.at >= self.toks.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.at + k).map(|t| &t.tok)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn unexpected(&self, wanted: &str) -> DslError {
        match self.toks.get(self.at) {
            Some(t) => syntax(format!("expected {wanted}, found {}", t.tok.describe()), t.pos),
            None => syntax(format!("expected {wanted}, found end of input"), self.end),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, DslError> {
        if self.peek() == Some(&tok) {
            Ok(self.bump().expect("peeked").pos)
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == kw)
    }

    fn keyword(&mut self, kw: &str) -> Result<Pos, DslError> {
        if self.is_kw(kw) {
            Ok(self.bump().expect("peeked").pos)
        } else {
            Err(self.unexpected(&format!("`{kw}`")))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), DslError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                Ok((s, self.bump().expect("peeked").pos))
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    /// A word like `thm-main-1` or `solvable-mode`: identifiers, numbers and
    /// minus signs with no whitespace between them.
    fn hyphen_word(&mut self) -> Result<(String, Pos), DslError> {
        let (mut word, pos) = self.ident()?;
        loop {
            let adjacent = |a: &Token, b: &Token| a.end == b.start;
            let (Some(prev), Some(dash), Some(next)) =
                (self.toks.get(self.at - 1), self.toks.get(self.at), self.toks.get(self.at + 1))
            else {
                break;
            };
            let joins = dash.tok == Tok::Minus
                && adjacent(prev, dash)
                && adjacent(dash, next)
                && matches!(next.tok, Tok::Ident(_) | Tok::Number(_));
            if !joins {
                break;
            }
            match &next.tok {
                Tok::Ident(s) | Tok::Number(s) => {
                    word.push('-');
                    word.push_str(s);
                }
                _ => unreachable!(),
            }
            self.at += 2;
        }
        Ok((word, pos))
    }

    fn unsigned_rational(&mut self) -> Result<Scalar, DslError> {
        let pos = self.pos();
        let Some(Tok::Number(n)) = self.peek().cloned() else {
            return Err(self.unexpected("a rational number"));
        };
        self.bump();
        let mut text = n;
        if self.peek() == Some(&Tok::Slash) && matches!(self.peek_at(1), Some(Tok::Number(_))) {
            self.bump();
            if let Some(Token { tok: Tok::Number(d), .. }) = self.bump() {
                text = format!("{text}/{d}");
            }
        }
        parse_scalar(&text).map_err(|_| DslError::new(ErrorKind::NonRational(text), pos))
    }

    fn signed_rational(&mut self) -> Result<Scalar, DslError> {
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let v = self.unsigned_rational()?;
        Ok(if neg { -v } else { v })
    }

    /// `[+|-] term ((+|-) term)*`, term = `coeff*NAME | coeff NAME | NAME`,
    /// or the literal `0`.
    fn lin_expr(&mut self) -> Result<LinExpr, DslError> {
        let pos = self.pos();
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let sign_pos = self.pos();
            let neg = match self.peek() {
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                Some(Tok::Plus) if !first => {
                    self.bump();
                    false
                }
                _ if first => false,
                _ => break,
            };
            let term_pos = if first && !neg { self.pos() } else { sign_pos };
            let coeff = if matches!(self.peek(), Some(Tok::Number(_))) {
                let c = self.unsigned_rational()?;
                if self.peek() == Some(&Tok::Star) {
                    self.bump();
                } else if !matches!(self.peek(), Some(Tok::Ident(_))) {
                    if first && c.is_zero() && !neg {
                        first = false;
                        continue;
                    }
                    return Err(self.unexpected("`*` and a basis name"));
                }
                c
            } else {
                Scalar::from_integer(1.into())
            };
            let (name, _) = self.ident()?;
            terms.push(Term { coeff: if neg { -coeff } else { coeff }, name, pos: term_pos });
            first = false;
        }
        Ok(LinExpr { terms, pos })
    }

    fn span_list(&mut self) -> Result<Vec<LinExpr>, DslError> {
        self.keyword("span")?;
        self.expect(Tok::LParen)?;
        let mut out = Vec::new();
        if self.peek() != Some(&Tok::RParen) {
            out.push(self.lin_expr()?);
            while self.peek() == Some(&Tok::Comma) {
                self.bump();
                out.push(self.lin_expr()?);
            }
        }
        self.expect(Tok::RParen)?;
        Ok(out)
    }

    fn decl(&mut self) -> Result<Decl, DslError> {
        let pos = self.pos();
        let kw = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return Err(self.unexpected("a declaration")),
        };
        match kw.as_str() {
            "algebra" => self.algebra(),
            "subalgebra" => {
                self.bump();
                let (name, _) = self.ident()?;
                self.keyword("of")?;
                let of = self.ident()?;
                self.expect(Tok::Eq)?;
                let def = if self.is_kw("stab") {
                    self.bump();
                    self.expect(Tok::LParen)?;
                    let (n, p) = self.ident()?;
                    self.expect(Tok::RParen)?;
                    SubDef::Stab(n, p)
                } else {
                    SubDef::Span(self.span_list()?)
                };
                Ok(Decl::Subalgebra { name, of, def, pos })
            }
            "functional" => {
                self.bump();
                let (name, _) = self.ident()?;
                self.keyword("on")?;
                let on = self.ident()?;
                self.expect(Tok::Eq)?;
                self.expect(Tok::LBrace)?;
                let mut entries = Vec::new();
                while self.peek() != Some(&Tok::RBrace) {
                    if !entries.is_empty() {
                        self.expect(Tok::Comma)?;
                    }
                    let (label, p) = self.ident()?;
                    self.expect(Tok::Star)?;
                    self.expect(Tok::Colon)?;
                    entries.push((label, self.signed_rational()?, p));
                }
                self.bump();
                Ok(Decl::Functional { name, on, entries, pos })
            }
            "element" => {
                self.bump();
                let (name, _) = self.ident()?;
                self.keyword("of")?;
                let of = self.ident()?;
                self.expect(Tok::Eq)?;
                let expr = self.lin_expr()?;
                Ok(Decl::Element { name, of, expr, pos })
            }
            "compact" => {
                self.bump();
                let (name, _) = self.ident()?;
                self.keyword("of")?;
                let of = self.ident()?;
                self.expect(Tok::Eq)?;
                let span = self.span_list()?;
                Ok(Decl::Compact { name, of, span, pos })
            }
            "assert" => {
                self.bump();
                self.keyword("group_assumption")?;
                match self.bump() {
                    Some(Token { tok: Tok::Str(text), .. }) => Ok(Decl::Assert { text, pos }),
                    _ => {
                        self.at -= 1;
                        Err(self.unexpected("a quoted string"))
                    }
                }
            }
            "check" => {
                self.bump();
                let check = self.check()?;
                Ok(Decl::Check { check, pos })
            }
            _ => Err(self.unexpected("a declaration")),
        }
    }

    fn algebra(&mut self) -> Result<Decl, DslError> {
        let pos = self.keyword("algebra")?;
        let (name, _) = self.ident()?;
        if self.is_kw("from") {
            self.bump();
            self.keyword("matrices")?;
            self.expect(Tok::LBrace)?;
            self.keyword("size")?;
            let size_pos = self.pos();
            let size = match self.bump() {
                Some(Token { tok: Tok::Number(n), .. }) => n.parse::<usize>().ok().filter(|&d| d > 0),
                _ => None,
            }
            .ok_or_else(|| syntax("expected a positive matrix size", size_pos))?;
            let mut gens = Vec::new();
            while self.is_kw("gen") {
                let gpos = self.bump().expect("peeked").pos;
                let (gname, _) = self.ident()?;
                self.expect(Tok::Eq)?;
                let rows = self.matrix_literal()?;
                if rows.len() != size || rows.iter().any(|r| r.len() != size) {
                    return Err(DslError::new(
                        ErrorKind::DimensionMismatch(format!("generator {gname} is not {size}x{size}")),
                        gpos,
                    ));
                }
                gens.push(MatrixGen { name: gname, rows, pos: gpos });
            }
            self.expect(Tok::RBrace)?;
            return Ok(Decl::Algebra { name, body: AlgebraBody::Matrices { size, gens }, pos });
        }
        self.expect(Tok::LBrace)?;
        self.keyword("basis")?;
        let mut basis = Vec::new();
        while !self.is_kw("bracket") && self.peek() != Some(&Tok::RBrace) {
            basis.push(self.ident()?);
        }
        let mut brackets = Vec::new();
        while self.is_kw("bracket") {
            let bpos = self.bump().expect("peeked").pos;
            self.expect(Tok::LBracket)?;
            let left = self.ident()?;
            self.expect(Tok::Comma)?;
            let right = self.ident()?;
            self.expect(Tok::RBracket)?;
            self.expect(Tok::Eq)?;
            let value = self.lin_expr()?;
            brackets.push(BracketDecl { left, right, value, pos: bpos });
        }
        self.expect(Tok::RBrace)?;
        Ok(Decl::Algebra { name, body: AlgebraBody::Brackets { basis, brackets }, pos })
    }

    fn matrix_literal(&mut self) -> Result<Vec<Vec<Scalar>>, DslError> {
        self.expect(Tok::LBracket)?;
        let mut rows = Vec::new();
        loop {
            self.expect(Tok::LBracket)?;
            let mut row = vec![self.signed_rational()?];
            while self.peek() == Some(&Tok::Comma) {
                self.bump();
                row.push(self.signed_rational()?);
            }
            self.expect(Tok::RBracket)?;
            rows.push(row);
            if self.peek() == Some(&Tok::Comma) {
                self.bump();
            } else {
                break;
            }
        }
        self.expect(Tok::RBracket)?;
        Ok(rows)
    }

    fn check(&mut self) -> Result<CheckDecl, DslError> {
        let criteria = if self.is_kw("all") {
            self.bump();
            CriteriaSel::All
        } else {
            let mut ids = vec![self.hyphen_word()?];
            while self.peek() == Some(&Tok::Comma) {
                self.bump();
                ids.push(self.hyphen_word()?);
            }
            CriteriaSel::Ids(ids)
        };
        let algebra = self.ident()?;
        self.expect(Tok::Slash)?;
        let sub = match self.peek() {
            Some(Tok::Number(n)) if n == "0" => {
                self.bump();
                None
            }
            _ => Some(self.ident()?),
        };
        let mut with = Vec::new();
        let mut solvable_mode = false;
        loop {
            if self.is_kw("with") {
                self.bump();
                let (kind, kpos) = self.ident()?;
                let (n, p) = self.ident()?;
                with.push(match kind.as_str() {
                    "compact" => With::Compact(n, p),
                    "functional" => With::Functional(n, p),
                    "element" => With::Element(n, p),
                    "gprime" => With::Gprime(n, p),
                    other => {
                        return Err(syntax(
                            format!("expected compact, functional, element or gprime after `with`, found `{other}`"),
                            kpos,
                        ))
                    }
                });
            } else if self.is_kw("solvable") {
                let (w, p) = self.hyphen_word()?;
                if w != "solvable-mode" {
                    return Err(syntax(format!("unknown flag `{w}`"), p));
                }
                solvable_mode = true;
            } else {
                break;
            }
        }
        Ok(CheckDecl { criteria, algebra, sub, with, solvable_mode })
    }
}
