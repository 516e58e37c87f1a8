use std::fmt;

use num::{One, Signed};

use super::Pos;
use crate::scalar::{format_scalar, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub name: String,
    pub pos: Pos,
}

/// `Σ coeff*NAME`; empty means zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinExpr {
    pub terms: Vec<Term>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketDecl {
    pub left: (String, Pos),
    pub right: (String, Pos),
    pub value: LinExpr,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGen {
    pub name: String,
    pub rows: Vec<Vec<Scalar>>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraBody {
    Brackets { basis: Vec<(String, Pos)>, brackets: Vec<BracketDecl> },
    Matrices { size: usize, gens: Vec<MatrixGen> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubDef {
    Span(Vec<LinExpr>),
    /// Stabilizer of a declared functional or element.
    Stab(String, Pos),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriteriaSel {
    All,
    Ids(Vec<(String, Pos)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum With {
    Compact(String, Pos),
    Functional(String, Pos),
    Element(String, Pos),
    Gprime(String, Pos),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckDecl {
    pub criteria: CriteriaSel,
    pub algebra: (String, Pos),
    /// `None` for the literal `0`.
    pub sub: Option<(String, Pos)>,
    pub with: Vec<With>,
    pub solvable_mode: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Algebra { name: String, body: AlgebraBody, pos: Pos },
    Subalgebra { name: String, of: (String, Pos), def: SubDef, pos: Pos },
    Functional { name: String, on: (String, Pos), entries: Vec<(String, Scalar, Pos)>, pos: Pos },
    Element { name: String, of: (String, Pos), expr: LinExpr, pos: Pos },
    Compact { name: String, of: (String, Pos), span: Vec<LinExpr>, pos: Pos },
    Assert { text: String, pos: Pos },
    Check { check: CheckDecl, pos: Pos },
}

impl Decl {
    pub fn pos(&self) -> Pos {
        match self {
            Decl::Algebra { pos, .. }
            | Decl::Subalgebra { pos, .. }
            | Decl::Functional { pos, .. }
            | Decl::Element { pos, .. }
            | Decl::Compact { pos, .. }
            | Decl::Assert { pos, .. }
            | Decl::Check { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub decls: Vec<Decl>,
}

fn strip(p: &mut Pos) {
    *p = Pos::default();
}

fn strip_named(n: &mut (String, Pos)) {
    strip(&mut n.1);
}

impl LinExpr {
    fn strip(&mut self) {
        strip(&mut self.pos);
        self.terms.iter_mut().for_each(|t| strip(&mut t.pos));
    }
}

impl Document {
    /// Copy with every source position zeroed, for structural comparison.
    pub fn without_positions(&self) -> Document {
        let mut doc = self.clone();
        for d in &mut doc.decls {
            match d {
                Decl::Algebra { body, pos, .. } => {
                    strip(pos);
                    match body {
                        AlgebraBody::Brackets { basis, brackets } => {
                            basis.iter_mut().for_each(strip_named);
                            for b in brackets {
                                strip(&mut b.pos);
                                strip_named(&mut b.left);
                                strip_named(&mut b.right);
                                b.value.strip();
                            }
                        }
                        AlgebraBody::Matrices { gens, .. } => gens.iter_mut().for_each(|g| strip(&mut g.pos)),
                    }
                }
                Decl::Subalgebra { of, def, pos, .. } => {
                    strip(pos);
                    strip_named(of);
                    match def {
                        SubDef::Span(es) => es.iter_mut().for_each(LinExpr::strip),
                        SubDef::Stab(_, p) => strip(p),
                    }
                }
                Decl::Functional { on, entries, pos, .. } => {
                    strip(pos);
                    strip_named(on);
                    entries.iter_mut().for_each(|e| strip(&mut e.2));
                }
                Decl::Element { of, expr, pos, .. } => {
                    strip(pos);
                    strip_named(of);
                    expr.strip();
                }
                Decl::Compact { of, span, pos, .. } => {
                    strip(pos);
                    strip_named(of);
                    span.iter_mut().for_each(LinExpr::strip);
                }
                Decl::Assert { pos, .. } => strip(pos),
                Decl::Check { check, pos } => {
                    strip(pos);
                    strip_named(&mut check.algebra);
                    if let Some(s) = &mut check.sub {
                        strip_named(s);
                    }
                    if let CriteriaSel::Ids(ids) = &mut check.criteria {
                        ids.iter_mut().for_each(strip_named);
                    }
                    for w in &mut check.with {
                        match w {
                            With::Compact(_, p) | With::Functional(_, p) | With::Element(_, p) | With::Gprime(_, p) => {
                                strip(p)
                            }
                        }
                    }
                }
            }
        }
        doc
    }
}

impl fmt::Display for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = t.coeff.abs();
            if !a.is_one() {
                write!(f, "{}*", format_scalar(&a))?;
            }
            f.write_str(&t.name)?;
        }
        Ok(())
    }
}

fn write_span(f: &mut fmt::Formatter<'_>, es: &[LinExpr]) -> fmt::Result {
    let items: Vec<String> = es.iter().map(ToString::to_string).collect();
    write!(f, "span({})", items.join(", "))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decl::Algebra { name, body: AlgebraBody::Brackets { basis, brackets }, .. } => {
                writeln!(f, "algebra {name} {{")?;
                let names: Vec<&str> = basis.iter().map(|b| b.0.as_str()).collect();
                writeln!(f, "  basis {}", names.join(" "))?;
                for b in brackets {
                    writeln!(f, "  bracket [{},{}] = {}", b.left.0, b.right.0, b.value)?;
                }
                f.write_str("}")
            }
            Decl::Algebra { name, body: AlgebraBody::Matrices { size, gens }, .. } => {
                writeln!(f, "algebra {name} from matrices {{")?;
                writeln!(f, "  size {size}")?;
                for g in gens {
                    let rows: Vec<String> = g
                        .rows
                        .iter()
                        .map(|r| format!("[{}]", r.iter().map(format_scalar).collect::<Vec<_>>().join(", ")))
                        .collect();
                    writeln!(f, "  gen {} = [{}]", g.name, rows.join(", "))?;
                }
                f.write_str("}")
            }
            Decl::Subalgebra { name, of, def, .. } => {
                write!(f, "subalgebra {name} of {} = ", of.0)?;
                match def {
                    SubDef::Span(es) => write_span(f, es),
                    SubDef::Stab(n, _) => write!(f, "stab({n})"),
                }
            }
            Decl::Functional { name, on, entries, .. } => {
                let items: Vec<String> =
                    entries.iter().map(|(l, c, _)| format!("{l}*: {}", format_scalar(c))).collect();
                write!(f, "functional {name} on {} = {{ {} }}", on.0, items.join(", "))
            }
            Decl::Element { name, of, expr, .. } => write!(f, "element {name} of {} = {expr}", of.0),
            Decl::Compact { name, of, span, .. } => {
                write!(f, "compact {name} of {} = ", of.0)?;
                write_span(f, span)
            }
            Decl::Assert { text, .. } => write!(f, "assert group_assumption {}", quote(text)),
            Decl::Check { check, .. } => {
                f.write_str("check ")?;
                match &check.criteria {
                    CriteriaSel::All => f.write_str("all")?,
                    CriteriaSel::Ids(ids) => {
                        let ids: Vec<&str> = ids.iter().map(|i| i.0.as_str()).collect();
                        f.write_str(&ids.join(", "))?;
                    }
                }
                let sub = check.sub.as_ref().map_or("0", |s| s.0.as_str());
                write!(f, " {} / {sub}", check.algebra.0)?;
                for w in &check.with {
                    match w {
                        With::Compact(n, _) => write!(f, " with compact {n}")?,
                        With::Functional(n, _) => write!(f, " with functional {n}")?,
                        With::Element(n, _) => write!(f, " with element {n}")?,
                        With::Gprime(n, _) => write!(f, " with gprime {n}")?,
                    }
                }
                if check.solvable_mode {
                    f.write_str(" solvable-mode")?;
                }
                Ok(())
            }
        }
    }
}

/// Canonical text: one declaration per block, blank line between blocks.
impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.decls.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}
