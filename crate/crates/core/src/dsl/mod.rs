//! Text format for algebras, subalgebras and check directives.
//!
//! ```text
//! algebra sl2 {
//!   basis H E F
//!   bracket [H,E] = 2*E
//!   bracket [H,F] = -2*F
//!   bracket [E,F] = H
//! }
//! subalgebra n of sl2 = span(E)
//! check all sl2 / n
//! ```

mod ast;
mod elaborate;
mod lexer;
mod parser;

use std::fmt;

pub use ast::{
    AlgebraBody, BracketDecl, CheckDecl, CriteriaSel, Decl, Document, LinExpr, MatrixGen, SubDef, Term, With,
};
pub use elaborate::{elaborate, run_document, CheckJob, Elaborated};
pub use parser::parse;

/// 1-based source position.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax(String),
    UnresolvedName(String),
    DimensionMismatch(String),
    NonRational(String),
    InvalidAlgebra(String),
    NotClosed(String),
    Duplicate(String),
    UnknownCriterion(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {kind}")]
pub struct DslError {
    pub kind: ErrorKind,
    pub pos: Pos,
}

impl DslError {
    pub fn new(kind: ErrorKind, pos: Pos) -> Self {
        DslError { kind, pos }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ErrorKind::UnresolvedName(n) => write!(f, "unresolved name `{n}`"),
            ErrorKind::DimensionMismatch(m) => write!(f, "dimension mismatch: {m}"),
            ErrorKind::NonRational(l) => write!(f, "non-rational literal `{l}`"),
            ErrorKind::InvalidAlgebra(m) => write!(f, "invalid algebra: {m}"),
            ErrorKind::NotClosed(m) => write!(f, "not a subalgebra: {m}"),
            ErrorKind::Duplicate(n) => write!(f, "duplicate definition of `{n}`"),
            ErrorKind::UnknownCriterion(c) => write!(f, "unknown criterion `{c}`"),
        }
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::catalog::catalog;
    use crate::scalar::Scalar;

    #[test]
    fn catalog_sources_round_trip() {
        for e in catalog() {
            let doc = parse(e.source).unwrap();
            let printed = doc.to_string();
            let again = parse(&printed).unwrap_or_else(|err| panic!("{}: {err}\n{printed}", e.name));
            assert_eq!(doc.without_positions(), again.without_positions(), "{}", e.name);
            assert_eq!(printed, again.to_string());
        }
    }

    fn term() -> impl Strategy<Value = Term> {
        (-9i64..10, 1i64..5, prop::sample::select(vec!["H", "E", "F", "X1", "y_2"])).prop_map(|(n, d, name)| Term {
            coeff: Scalar::new(n.into(), d.into()),
            name: name.to_string(),
            pos: Pos::default(),
        })
    }

    proptest! {
        #[test]
        fn expressions_round_trip(terms in prop::collection::vec(term(), 0..5)) {
            // zero coefficients would print as `0*E`; the printer keeps them
            let expr = LinExpr { terms, pos: Pos::default() };
            let doc = Document { decls: vec![Decl::Element {
                name: "x".into(),
                of: ("g".into(), Pos::default()),
                expr,
                pos: Pos::default(),
            }] };
            let back = parse(&doc.to_string()).unwrap();
            prop_assert_eq!(back.without_positions(), doc);
        }
    }
}
