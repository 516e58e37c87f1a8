//! Relative Chevalley–Eilenberg complexes `C^p(g, s)`: forms on `g` killed by
//! `ι(b)` and `L(b)` for every `b` in `s`.

use num::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::exterior::{AltForm, BasisIndex};
use crate::lie::{LieAlgebra, Subspace};
use crate::matrix::{EchelonSpan, Matrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelcohError {
    #[error("NOT_IN_COMPLEX: form is not a relative cochain")]
    NotInComplex,
    #[error("NOT_CLOSED: form is not a cocycle")]
    NotClosed,
    #[error("PRECONDITION_UNMET: {0}")]
    PreconditionUnmet(String),
    #[error("degree {0} is outside the complex")]
    DegreeOutOfRange(usize),
}

/// One degree of a relative complex.
#[derive(Debug, Clone)]
struct Level {
    index: BasisIndex,
    basis: Vec<AltForm>,
    /// Dense positions whose values are the coordinates of a cochain.
    free: Vec<usize>,
}

impl Level {
    fn coordinates(&self, n: usize, a: &AltForm) -> Option<Vec<Scalar>> {
        if a.is_zero() {
            return Some(vec![Scalar::zero(); self.basis.len()]);
        }
        if a.degree() != self.index.degree {
            return None;
        }
        let dense = a.to_dense(&self.index);
        let coords: Vec<Scalar> = self.free.iter().map(|&f| dense[f].clone()).collect();
        (combine(n, self.index.degree, &self.basis, &coords) == *a).then_some(coords)
    }
}

fn combine(n: usize, degree: usize, basis: &[AltForm], coords: &[Scalar]) -> AltForm {
    basis
        .iter()
        .zip(coords)
        .filter(|(_, c)| !c.is_zero())
        .fold(AltForm::zero(n, degree), |acc, (b, c)| acc.add(&b.scale(c)))
}

/// Basis of `C^p(g, s)` as the joint kernel of the stacked `ι(b)`, `L(b)`.
pub fn relative_cochains(g: &LieAlgebra, s: &Subspace, p: usize) -> Vec<AltForm> {
    cochain_level(g, s, p).basis
}

fn cochain_level(g: &LieAlgebra, s: &Subspace, p: usize) -> Level {
    let n = g.dim();
    let index = BasisIndex::new(n, p);
    if p > s.codim() {
        return Level { index, basis: Vec::new(), free: Vec::new() };
    }
    let forms: Vec<AltForm> = index.masks.iter().map(|&m| AltForm::basis(n, m)).collect();
    let mut constraints = Matrix::zeros(0, index.len());
    if p > 0 {
        let lower = BasisIndex::new(n, p - 1);
        for b in s.basis() {
            let cols: Vec<Vec<Scalar>> = forms.iter().map(|f| f.interior(b).to_dense(&lower)).collect();
            constraints = constraints.vstack(&Matrix::from_columns(lower.len(), &cols));
            let cols: Vec<Vec<Scalar>> =
                forms.iter().map(|f| g.lie_derivative(b, f).to_dense(&index)).collect();
            constraints = constraints.vstack(&Matrix::from_columns(index.len(), &cols));
        }
    }
    let (kernel, free) = if constraints.rows() == 0 {
        let id = Matrix::identity(index.len());
        ((0..index.len()).map(|i| id.row(i).to_vec()).collect(), (0..index.len()).collect())
    } else {
        constraints.kernel_with_free_columns()
    };
    let basis = kernel.iter().map(|v| AltForm::from_dense(n, &index, v)).collect();
    Level { index, basis, free }
}

/// `dim (Λ^N (g/h)*)^h`, which is 0 or 1.
pub fn top_invariant_dim(g: &LieAlgebra, h: &Subspace) -> usize {
    relative_cochains(g, h, h.codim()).len()
}

#[derive(Debug, Clone)]
pub struct RelativeComplex {
    g: LieAlgebra,
    s: Subspace,
    levels: Vec<Level>,
    /// `diffs[p]` is `d: C^p -> C^{p+1}` in the cochain bases.
    diffs: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologySpace {
    pub degree: usize,
    pub dim: usize,
    pub representatives: Vec<AltForm>,
    /// Coordinates in `C^p` of a basis of the coboundaries.
    pub coboundaries: Vec<Vec<Scalar>>,
}

impl RelativeComplex {
    pub fn new(g: &LieAlgebra, s: &Subspace) -> Self {
        let top = s.codim();
        let levels: Vec<Level> = (0..=top).into_par_iter().map(|p| cochain_level(g, s, p)).collect();
        let n = g.dim();
        let diffs = (0..=top)
            .into_par_iter()
            .map(|p| {
                let src = &levels[p];
                let rows = levels.get(p + 1).map_or(0, |l| l.basis.len());
                let cols: Vec<Vec<Scalar>> = src
                    .basis
                    .iter()
                    .map(|b| {
                        let db = g.ce_diff(b);
                        match levels.get(p + 1) {
                            Some(next) => next.coordinates(n, &db).expect("relative complex not closed under d"),
                            None => {
                                assert!(db.is_zero(), "differential leaves the relative complex");
                                Vec::new()
                            }
                        }
                    })
                    .collect();
                Matrix::from_columns(rows, &cols)
            })
            .collect();
        RelativeComplex { g: g.clone(), s: s.clone(), levels, diffs }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn subalgebra(&self) -> &Subspace {
        &self.s
    }

    /// Codimension of `s`; the complex vanishes above this degree.
    pub fn top_degree(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn cochains(&self, p: usize) -> &[AltForm] {
        self.levels.get(p).map_or(&[], |l| &l.basis)
    }

    pub fn cochain_dim(&self, p: usize) -> usize {
        self.cochains(p).len()
    }

    /// Matrix of `d: C^p -> C^{p+1}`.
    pub fn differential(&self, p: usize) -> Matrix {
        match self.diffs.get(p) {
            Some(d) => d.clone(),
            None => Matrix::zeros(self.cochain_dim(p + 1), self.cochain_dim(p)),
        }
    }

    pub fn coordinates(&self, a: &AltForm) -> Option<Vec<Scalar>> {
        if a.is_zero() {
            return Some(vec![Scalar::zero(); self.cochain_dim(a.degree())]);
        }
        let level = self.levels.get(a.degree())?;
        level.coordinates(self.g.dim(), a)
    }

    pub fn form(&self, p: usize, coords: &[Scalar]) -> AltForm {
        combine(self.g.dim(), p, self.cochains(p), coords)
    }

    pub fn contains(&self, a: &AltForm) -> bool {
        a.ambient_dim() == self.g.dim() && self.coordinates(a).is_some()
    }

    fn coboundary_basis(&self, p: usize) -> Vec<Vec<Scalar>> {
        if p == 0 {
            return Vec::new();
        }
        let d = self.differential(p - 1);
        let mut span = EchelonSpan::new(self.cochain_dim(p));
        (0..d.cols()).map(|j| d.column(j)).filter(|c| span.insert(c)).collect()
    }

    pub fn cohomology(&self, p: usize) -> CohomologySpace {
        let dim_p = self.cochain_dim(p);
        let coboundaries = self.coboundary_basis(p);
        let cycles = if dim_p == 0 {
            Vec::new()
        } else {
            let d = self.differential(p);
            if d.rows() == 0 {
                let id = Matrix::identity(dim_p);
                (0..dim_p).map(|i| id.row(i).to_vec()).collect()
            } else {
                d.kernel()
            }
        };
        let mut span = EchelonSpan::new(dim_p);
        for c in &coboundaries {
            span.insert(c);
        }
        let representatives: Vec<AltForm> =
            cycles.into_iter().filter(|z| span.insert(z)).map(|z| self.form(p, &z)).collect();
        CohomologySpace { degree: p, dim: representatives.len(), representatives, coboundaries }
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.top_degree()).map(|p| self.cohomology(p).dim).collect()
    }

    /// A primitive `β ∈ C^{p-1}` with `dβ = a`, if one exists.
    pub fn primitive(&self, a: &AltForm) -> Result<Option<AltForm>, RelcohError> {
        let coords = self.coordinates(a).ok_or(RelcohError::NotInComplex)?;
        if !self.g.ce_diff(a).is_zero() {
            return Err(RelcohError::NotClosed);
        }
        let p = a.degree();
        if a.is_zero() {
            return Ok(Some(AltForm::zero(self.g.dim(), p.saturating_sub(1))));
        }
        if p == 0 {
            return Ok(None);
        }
        Ok(self.differential(p - 1).solve(&coords).map(|x| self.form(p - 1, &x)))
    }

    /// Class of a cocycle in the basis of `cohomology(p).representatives`.
    pub fn class_of(&self, a: &AltForm, space: &CohomologySpace) -> Result<Vec<Scalar>, RelcohError> {
        let coords = self.coordinates(a).ok_or(RelcohError::NotInComplex)?;
        if !self.g.ce_diff(a).is_zero() {
            return Err(RelcohError::NotClosed);
        }
        let p = space.degree;
        let mut cols: Vec<Vec<Scalar>> = space
            .representatives
            .iter()
            .map(|r| self.coordinates(r).expect("representative outside complex"))
            .collect();
        cols.extend(space.coboundaries.iter().cloned());
        let m = Matrix::from_columns(self.cochain_dim(p), &cols);
        let x = m.solve(&coords).expect("cocycle not spanned by representatives and coboundaries");
        Ok(x[..space.dim].to_vec())
    }
}

/// `dim H^p(g, s)`.
pub fn cohomology(g: &LieAlgebra, s: &Subspace, p: usize) -> CohomologySpace {
    RelativeComplex::new(g, s).cohomology(p)
}

/// Decides exactness of a relative cocycle, returning a primitive when exact.
pub fn is_exact_in(a: &AltForm, g: &LieAlgebra, s: &Subspace) -> Result<Option<AltForm>, RelcohError> {
    RelativeComplex::new(g, s).primitive(a)
}

/// The map `H^p(g, h) -> H^p(g, k)` induced by `C(g, h) ⊆ C(g, k)` for `k ⊆ h`.
#[derive(Debug, Clone)]
pub struct InducedMap {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    /// `target_dim x source_dim`, in the representative bases.
    pub matrix: Matrix,
    pub kernel_dim: usize,
    /// Source cocycles representing a kernel basis, each with a primitive in `C(g, k)`.
    pub killed: Vec<(AltForm, AltForm)>,
}

impl InducedMap {
    pub fn is_injective(&self) -> bool {
        self.kernel_dim == 0
    }
}

pub fn induced_map(
    g: &LieAlgebra,
    h: &Subspace,
    k: &Subspace,
    p: usize,
) -> Result<InducedMap, RelcohError> {
    if !h.contains_subspace(k) {
        return Err(RelcohError::PreconditionUnmet("k is not contained in h".into()));
    }
    let source = RelativeComplex::new(g, h);
    let target = RelativeComplex::new(g, k);
    Ok(induced_map_between(&source, &target, p))
}

pub(crate) fn induced_map_between(source: &RelativeComplex, target: &RelativeComplex, p: usize) -> InducedMap {
    let src = source.cohomology(p);
    let tgt = target.cohomology(p);
    let cols: Vec<Vec<Scalar>> = src
        .representatives
        .iter()
        .map(|r| target.class_of(r, &tgt).expect("source cocycle is not a target cocycle"))
        .collect();
    let matrix = Matrix::from_columns(tgt.dim, &cols);
    let kernel = if src.dim == 0 {
        Vec::new()
    } else if tgt.dim == 0 {
        let id = Matrix::identity(src.dim);
        (0..src.dim).map(|i| id.row(i).to_vec()).collect()
    } else {
        matrix.kernel()
    };
    let killed = kernel
        .iter()
        .map(|v| {
            let alpha = combine(source.g.dim(), p, &src.representatives, v);
            let beta = target
                .primitive(&alpha)
                .expect("killed class is a target cocycle")
                .expect("killed class has a primitive");
            (alpha, beta)
        })
        .collect();
    InducedMap { degree: p, source_dim: src.dim, target_dim: tgt.dim, matrix, kernel_dim: kernel.len(), killed }
}

#[derive(Debug, Clone)]
pub struct PoincarePairing {
    pub degree: usize,
    /// Entry `(i, j)` is the class of `α_i ∧ β_j` in units of the top class.
    pub matrix: Matrix,
    pub nondegenerate: bool,
}

/// Pairing `H^p(g, h) x H^{N-p}(g, h) -> H^N(g, h)`.
pub fn poincare_pairing(g: &LieAlgebra, h: &Subspace, p: usize) -> Result<PoincarePairing, RelcohError> {
    if !g.is_unimodular() {
        return Err(RelcohError::PreconditionUnmet("g is not unimodular".into()));
    }
    if !g.is_reductive_in(h) {
        return Err(RelcohError::PreconditionUnmet("h is not reductive in g".into()));
    }
    let n_top = h.codim();
    if p > n_top {
        return Err(RelcohError::DegreeOutOfRange(p));
    }
    let complex = RelativeComplex::new(g, h);
    let top = complex.cohomology(n_top);
    if top.dim != 1 {
        return Err(RelcohError::PreconditionUnmet(format!("dim H^N(g,h) = {} != 1", top.dim)));
    }
    let left = complex.cohomology(p);
    let right = complex.cohomology(n_top - p);
    let mut m = Matrix::zeros(left.dim, right.dim);
    for (i, a) in left.representatives.iter().enumerate() {
        for (j, b) in right.representatives.iter().enumerate() {
            let class = complex.class_of(&a.wedge(b), &top).expect("product of cocycles is a cocycle");
            m[(i, j)] = class[0].clone();
        }
    }
    let nondegenerate = left.dim == right.dim && m.rank() == left.dim;
    Ok(PoincarePairing { degree: p, matrix: m, nondegenerate })
}
