use std::collections::HashMap;
use std::sync::Arc;

use num::Zero;
use rayon::prelude::*;

use super::ast::*;
use super::{DslError, ErrorKind, Pos};
use crate::lie::{Covector, LieAlgebra, Subspace, Vector};
use crate::matrix::{EchelonSpan, Matrix};
use crate::obstruct::{run_selected, Auxiliary, CriterionId, ObstructionReport};
use crate::scalar::Scalar;

/// One `check` directive with every name resolved.
#[derive(Debug, Clone)]
pub struct CheckJob {
    pub algebra: String,
    /// `"0"` for the zero subalgebra.
    pub subalgebra: String,
    pub g: Arc<LieAlgebra>,
    pub h: Subspace,
    pub aux: Auxiliary,
    pub criteria: Vec<CriterionId>,
    pub pos: Pos,
}

impl CheckJob {
    pub fn run(&self) -> ObstructionReport {
        let mut report = run_selected(&self.g, &self.h, &self.aux, &self.criteria);
        report.space.algebra = self.algebra.clone();
        report.space.subalgebra = self.subalgebra.clone();
        report
    }
}

#[derive(Debug, Clone, Default)]
pub struct Elaborated {
    pub algebras: Vec<(String, Arc<LieAlgebra>)>,
    /// `(name, ambient algebra, span)`.
    pub subalgebras: Vec<(String, String, Subspace)>,
    pub checks: Vec<CheckJob>,
}

impl Elaborated {
    pub fn algebra(&self, name: &str) -> Option<&Arc<LieAlgebra>> {
        self.algebras.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn subalgebra(&self, name: &str) -> Option<(&str, &Subspace)> {
        self.subalgebras.iter().find(|(n, _, _)| n == name).map(|(_, a, s)| (a.as_str(), s))
    }
}

/// Runs every check of the document; independent checks run concurrently
/// and the reports come back in document order.
pub fn run_document(doc: &Elaborated) -> Vec<ObstructionReport> {
    doc.checks.par_iter().map(CheckJob::run).collect()
}

enum Entity {
    Algebra(Arc<LieAlgebra>),
    /// ambient algebra name, span
    Sub(String, Subspace),
    Compact(String, Subspace),
    Functional(String, Covector),
    Element(String, Vector),
}

impl Entity {
    fn what(&self) -> &'static str {
        match self {
            Entity::Algebra(_) => "an algebra",
            Entity::Sub(..) => "a subalgebra",
            Entity::Compact(..) => "a compact subalgebra",
            Entity::Functional(..) => "a functional",
            Entity::Element(..) => "an element",
        }
    }
}

struct Scope {
    names: HashMap<String, Entity>,
}

fn err(kind: ErrorKind, pos: Pos) -> DslError {
    DslError::new(kind, pos)
}

impl Scope {
    fn define(&mut self, name: &str, e: Entity, pos: Pos) -> Result<(), DslError> {
        if self.names.contains_key(name) {
            return Err(err(ErrorKind::Duplicate(name.into()), pos));
        }
        self.names.insert(name.into(), e);
        Ok(())
    }

    fn get(&self, (name, pos): &(String, Pos)) -> Result<&Entity, DslError> {
        self.names.get(name).ok_or_else(|| err(ErrorKind::UnresolvedName(name.clone()), *pos))
    }

    fn algebra(&self, n: &(String, Pos)) -> Result<Arc<LieAlgebra>, DslError> {
        match self.get(n)? {
            Entity::Algebra(g) => Ok(g.clone()),
            other => Err(err(ErrorKind::Syntax(format!("`{}` is {}, not an algebra", n.0, other.what())), n.1)),
        }
    }

    /// Resolves a linear combination of basis labels (or declared elements
    /// of the same algebra).
    fn vector(&self, g: &LieAlgebra, algebra: &str, e: &LinExpr) -> Result<Vector, DslError> {
        let mut v = Vector::zero(g.dim());
        for t in &e.terms {
            let base = match g.index_of(&t.name) {
                Some(i) => g.basis_vector(i),
                None => match self.names.get(&t.name) {
                    Some(Entity::Element(a, x)) if a == algebra => x.clone(),
                    _ => return Err(err(ErrorKind::UnresolvedName(t.name.clone()), t.pos)),
                },
            };
            v = &v + &base.scale(&t.coeff);
        }
        Ok(v)
    }
}

fn not_closed(g: &LieAlgebra, s: &Subspace, what: &str) -> Option<String> {
    let b = s.basis();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let c = g.bracket(&b[i], &b[j]);
            if !s.contains(&c) {
                return Some(format!(
                    "{what}: [{}, {}] = {} leaves the span",
                    g.format_vector(&b[i]),
                    g.format_vector(&b[j]),
                    g.format_vector(&c)
                ));
            }
        }
    }
    None
}

fn bracket_algebra(name: &str, basis: &[(String, Pos)], brackets: &[BracketDecl], pos: Pos) -> Result<LieAlgebra, DslError> {
    let mut seen = HashMap::new();
    for (b, p) in basis {
        if seen.insert(b.as_str(), *p).is_some() {
            return Err(err(ErrorKind::Duplicate(b.clone()), *p));
        }
    }
    let labels: Vec<String> = basis.iter().map(|b| b.0.clone()).collect();
    let n = labels.len();
    let index = |(l, p): &(String, Pos)| {
        labels.iter().position(|x| x == l).ok_or_else(|| err(ErrorKind::UnresolvedName(l.clone()), *p))
    };
    let mut table = Vec::new();
    for b in brackets {
        let (i, j) = (index(&b.left)?, index(&b.right)?);
        let mut v = vec![Scalar::zero(); n];
        for t in &b.value.terms {
            let k = index(&(t.name.clone(), t.pos))?;
            v[k] += &t.coeff;
        }
        table.push((i, j, Vector(v)));
    }
    LieAlgebra::from_brackets(labels, &table)
        .map_err(|e| err(ErrorKind::InvalidAlgebra(format!("{name}: {e}")), pos))
}

/// Closure of the generators under commutators inside `gl(size)`. Elements
/// produced by the closure are labelled `c1, c2, …`.
fn matrix_algebra(name: &str, size: usize, gens: &[MatrixGen], pos: Pos) -> Result<LieAlgebra, DslError> {
    let mut span = EchelonSpan::new(size * size);
    let mut labels: Vec<String> = Vec::new();
    let mut basis: Vec<Matrix> = Vec::new();
    for g in gens {
        if labels.contains(&g.name) {
            return Err(err(ErrorKind::Duplicate(g.name.clone()), g.pos));
        }
        let m = Matrix::from_rows(g.rows.clone());
        if !span.insert(&m.flatten()) {
            return Err(err(
                ErrorKind::InvalidAlgebra(format!("generator {} is a combination of the previous ones", g.name)),
                g.pos,
            ));
        }
        labels.push(g.name.clone());
        basis.push(m);
    }
    let mut counter = 0;
    let mut frontier = 0;
    while frontier < basis.len() {
        for j in 0..frontier + 1 {
            let c = basis[frontier].commutator(&basis[j]);
            if span.insert(&c.flatten()) {
                let label = loop {
                    counter += 1;
                    let l = format!("c{counter}");
                    if !labels.contains(&l) {
                        break l;
                    }
                };
                labels.push(label);
                basis.push(c);
            }
        }
        frontier += 1;
    }
    LieAlgebra::from_matrix_basis(labels, &basis)
        .map_err(|e| err(ErrorKind::InvalidAlgebra(format!("{name}: {e}")), pos))
}

/// Resolves names, validates algebras and subalgebras and prepares checks.
pub fn elaborate(doc: &Document) -> Result<Elaborated, DslError> {
    let mut scope = Scope { names: HashMap::new() };
    let mut out = Elaborated::default();
    let mut assumptions: Vec<String> = Vec::new();
    for d in &doc.decls {
        match d {
            Decl::Algebra { name, body, pos } => {
                let g = match body {
                    AlgebraBody::Brackets { basis, brackets } => bracket_algebra(name, basis, brackets, *pos)?,
                    AlgebraBody::Matrices { size, gens } => matrix_algebra(name, *size, gens, *pos)?,
                };
                let g = Arc::new(g);
                scope.define(name, Entity::Algebra(g.clone()), *pos)?;
                out.algebras.push((name.clone(), g));
            }
            Decl::Subalgebra { name, of, def, pos } => {
                let g = scope.algebra(of)?;
                let s = match def {
                    SubDef::Span(es) => {
                        let vs = es.iter().map(|e| scope.vector(&g, &of.0, e)).collect::<Result<Vec<_>, _>>()?;
                        Subspace::spanned_by(g.dim(), vs)
                    }
                    SubDef::Stab(target, tpos) => match scope.get(&(target.clone(), *tpos))? {
                        Entity::Functional(a, f) if *a == of.0 => g.stabilizer_of_functional(f).into_subspace(),
                        Entity::Element(a, x) if *a == of.0 => g.stabilizer_of_element(x).into_subspace(),
                        Entity::Functional(a, _) | Entity::Element(a, _) => {
                            return Err(err(
                                ErrorKind::DimensionMismatch(format!("`{target}` lives on {a}, not on {}", of.0)),
                                *tpos,
                            ))
                        }
                        other => {
                            return Err(err(
                                ErrorKind::Syntax(format!("stab() needs a functional or element; `{target}` is {}", other.what())),
                                *tpos,
                            ))
                        }
                    },
                };
                if let Some(m) = not_closed(&g, &s, name) {
                    return Err(err(ErrorKind::NotClosed(m), *pos));
                }
                scope.define(name, Entity::Sub(of.0.clone(), s.clone()), *pos)?;
                out.subalgebras.push((name.clone(), of.0.clone(), s));
            }
            Decl::Functional { name, on, entries, pos } => {
                let g = scope.algebra(on)?;
                let mut f = vec![Scalar::zero(); g.dim()];
                for (label, c, p) in entries {
                    let i = g.index_of(label).ok_or_else(|| err(ErrorKind::UnresolvedName(format!("{label}*")), *p))?;
                    f[i] += c;
                }
                scope.define(name, Entity::Functional(on.0.clone(), Covector(f)), *pos)?;
            }
            Decl::Element { name, of, expr, pos } => {
                let g = scope.algebra(of)?;
                let x = scope.vector(&g, &of.0, expr)?;
                scope.define(name, Entity::Element(of.0.clone(), x), *pos)?;
            }
            Decl::Compact { name, of, span, pos } => {
                let (algebra, container) = match scope.get(of)? {
                    Entity::Algebra(g) => (of.0.clone(), Subspace::full(g.dim())),
                    Entity::Sub(a, s) => (a.clone(), s.clone()),
                    other => {
                        return Err(err(
                            ErrorKind::Syntax(format!("`{}` is {}, expected a subalgebra", of.0, other.what())),
                            of.1,
                        ))
                    }
                };
                let g = scope.algebra(&(algebra.clone(), of.1))?;
                let vs = span.iter().map(|e| scope.vector(&g, &algebra, e)).collect::<Result<Vec<_>, _>>()?;
                let k = Subspace::spanned_by(g.dim(), vs);
                if !container.contains_subspace(&k) {
                    return Err(err(ErrorKind::NotClosed(format!("{name} is not contained in {}", of.0)), *pos));
                }
                if let Some(m) = not_closed(&g, &k, name) {
                    return Err(err(ErrorKind::NotClosed(m), *pos));
                }
                scope.define(name, Entity::Compact(algebra, k), *pos)?;
            }
            Decl::Assert { text, .. } => assumptions.push(text.clone()),
            Decl::Check { check, pos } => {
                let job = check_job(&scope, check, *pos, &assumptions)?;
                out.checks.push(job);
            }
        }
    }
    Ok(out)
}

fn check_job(scope: &Scope, c: &CheckDecl, pos: Pos, assumptions: &[String]) -> Result<CheckJob, DslError> {
    let algebra = &c.algebra.0;
    let g = scope.algebra(&c.algebra)?;
    let mismatch = |name: &str, owner: &str, p: Pos| {
        err(ErrorKind::DimensionMismatch(format!("`{name}` belongs to {owner}, not to {algebra}")), p)
    };
    let sub_of = |n: &(String, Pos)| -> Result<Subspace, DslError> {
        match scope.get(n)? {
            Entity::Sub(a, s) if a == algebra => Ok(s.clone()),
            Entity::Sub(a, _) => Err(mismatch(&n.0, a, n.1)),
            other => Err(err(ErrorKind::Syntax(format!("`{}` is {}, expected a subalgebra", n.0, other.what())), n.1)),
        }
    };
    let (h, subalgebra) = match &c.sub {
        None => (Subspace::zero(g.dim()), "0".to_string()),
        Some(n) => (sub_of(n)?, n.0.clone()),
    };
    let mut aux = Auxiliary { solvable_mode: c.solvable_mode, group_assumptions: assumptions.to_vec(), ..Default::default() };
    for w in &c.with {
        match w {
            With::Compact(n, p) => match scope.get(&(n.clone(), *p))? {
                Entity::Compact(a, k) if a == algebra => aux.compact = Some(k.clone()),
                Entity::Compact(a, _) => return Err(mismatch(n, a, *p)),
                other => return Err(err(ErrorKind::Syntax(format!("`{n}` is {}, expected a compact subalgebra", other.what())), *p)),
            },
            With::Functional(n, p) => match scope.get(&(n.clone(), *p))? {
                Entity::Functional(a, f) if a == algebra => aux.functional = Some(f.clone()),
                Entity::Functional(a, _) => return Err(mismatch(n, a, *p)),
                other => return Err(err(ErrorKind::Syntax(format!("`{n}` is {}, expected a functional", other.what())), *p)),
            },
            With::Element(n, p) => match scope.get(&(n.clone(), *p))? {
                Entity::Element(a, x) if a == algebra => aux.element = Some(x.clone()),
                Entity::Element(a, _) => return Err(mismatch(n, a, *p)),
                other => return Err(err(ErrorKind::Syntax(format!("`{n}` is {}, expected an element", other.what())), *p)),
            },
            With::Gprime(n, p) => aux.gprime = Some(sub_of(&(n.clone(), *p))?),
        }
    }
    let criteria = match &c.criteria {
        CriteriaSel::All => CriterionId::ALL.to_vec(),
        CriteriaSel::Ids(ids) => ids
            .iter()
            .map(|(s, p)| s.parse::<CriterionId>().map_err(|_| err(ErrorKind::UnknownCriterion(s.clone()), *p)))
            .collect::<Result<_, _>>()?,
    };
    Ok(CheckJob { algebra: algebra.clone(), subalgebra, g, h, aux, criteria, pos })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;
    use crate::lie::standard;
    use crate::obstruct::Verdict;

    fn run(src: &str) -> Result<Elaborated, DslError> {
        elaborate(&parse(src)?)
    }

    const SL2: &str = "algebra sl2 {\n  basis H E F\n  bracket [H,E] = 2*E\n  bracket [H,F] = -2*F\n  bracket [E,F] = H\n}\n";

    #[test]
    fn sl2_parabolic_is_obstructed() {
        let doc = run(&format!("{SL2}subalgebra n of sl2 = span(E)\ncheck all sl2 / n\n")).unwrap();
        let g = doc.algebra("sl2").unwrap();
        let expected = standard::sl2();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g.bracket_basis(i, j), expected.bracket_basis(i, j));
            }
        }
        let reports = run_document(&doc);
        assert_eq!(reports[0].verdict, Verdict::Obstructed);
        assert_eq!(reports[0].space.algebra, "sl2");
        assert_eq!(reports[0].space.subalgebra, "n");
    }

    #[test]
    fn undeclared_bracket_name_is_located() {
        let e = run("algebra g {\n  basis H F\n  bracket [H,E] = 2*E\n}").unwrap_err();
        assert_eq!(e.kind, ErrorKind::UnresolvedName("E".into()));
        assert_eq!(e.pos, Pos { line: 3, col: 14 });
    }

    #[test]
    fn jacobi_failure_is_reported() {
        let e = run("algebra g {\n basis A B C\n bracket [A,B] = C\n bracket [B,C] = A\n bracket [A,C] = A\n}").unwrap_err();
        assert!(matches!(&e.kind, ErrorKind::InvalidAlgebra(m) if m.contains("JACOBI_VIOLATION")), "{e}");
    }

    #[test]
    fn open_span_is_rejected() {
        let e = run(&format!("{SL2}subalgebra s of sl2 = span(E, F)")).unwrap_err();
        assert!(matches!(e.kind, ErrorKind::NotClosed(_)));
        assert_eq!(e.pos.line, 7);
    }

    #[test]
    fn cross_algebra_references_are_mismatches() {
        let src = format!("{SL2}algebra t {{ basis X }}\nsubalgebra n of sl2 = span(E)\ncheck all t / n");
        let e = run(&src).unwrap_err();
        assert!(matches!(e.kind, ErrorKind::DimensionMismatch(_)));
        let e = run(&format!("{SL2}check thm-main-7 sl2 / 0")).unwrap_err();
        assert_eq!(e.kind, ErrorKind::UnknownCriterion("thm-main-7".into()));
        let e = run(&format!("{SL2}subalgebra sl2 of sl2 = span(E)")).unwrap_err();
        assert_eq!(e.kind, ErrorKind::Duplicate("sl2".into()));
    }

    #[test]
    fn upper_triangular_closure_is_aff() {
        // b = span(A, N) with [A, N] = N: non-abelian of dimension 2
        let doc = run("algebra b from matrices {\n size 2\n gen A = [[1, 0], [0, 0]]\n gen N = [[0, 1], [0, 0]]\n}").unwrap();
        let g = doc.algebra("b").unwrap();
        assert_eq!(g.dim(), 2);
        let (a, n) = (g.e("A"), g.e("N"));
        assert_eq!(g.bracket(&a, &n), n);
    }

    #[test]
    fn closure_adds_commutators() {
        let doc = run("algebra s from matrices {\n size 2\n gen E = [[0, 1], [0, 0]]\n gen F = [[0, 0], [1, 0]]\n}").unwrap();
        let g = doc.algebra("s").unwrap();
        assert_eq!(g.labels(), ["E", "F", "c1"]);
        assert!(g.classify().semisimple);
    }

    #[test]
    fn stabilizers_and_auxiliary_data() {
        let src = "algebra aff {\n basis X Y\n bracket [X,Y] = Y\n}\nfunctional F on aff = { Y*: 1 }\n\
                   subalgebra s of aff = stab(F)\nassert group_assumption \"G simply connected\"\n\
                   check ex-coadjoint aff / s with functional F solvable-mode\n";
        let doc = run(src).unwrap();
        let job = &doc.checks[0];
        assert!(job.h.is_zero_space());
        assert_eq!(job.aux.group_assumptions, ["G simply connected"]);
        let r = job.run();
        assert_eq!(r.verdict, Verdict::Obstructed);
        assert!(r.caveats.iter().any(|c| c == "asserted: G simply connected"));
    }
}
