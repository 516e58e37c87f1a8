use std::ops::Deref;

use num::Zero;

use super::{LieAlgebra, LieError, Vector};
use crate::matrix::{EchelonSpan, Matrix};
use crate::scalar::Scalar;

/// A linear subspace of an `n`-dimensional algebra, with a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    n: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    /// Checks that `basis` is linearly independent.
    pub fn new(n: usize, basis: Vec<Vector>) -> Result<Self, LieError> {
        let mut span = EchelonSpan::new(n);
        for v in &basis {
            if v.dim() != n {
                return Err(LieError::DimensionMismatch { expected: n, found: v.dim() });
            }
            if !span.insert(&v.0) {
                return Err(LieError::LinearlyDependent);
            }
        }
        Ok(Subspace { n, basis })
    }

    /// The span of `vectors`, keeping a maximal independent subset in order.
    pub fn spanned_by(n: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut span = EchelonSpan::new(n);
        let basis = vectors.into_iter().filter(|v| span.insert(&v.0)).collect();
        Subspace { n, basis }
    }

    pub fn zero(n: usize) -> Self {
        Subspace { n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace { n, basis: (0..n).map(|i| Vector::basis(n, i)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn codim(&self) -> usize {
        self.n - self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// `n x dim` matrix whose columns are the basis vectors.
    pub fn matrix(&self) -> Matrix {
        let cols: Vec<Vec<Scalar>> = self.basis.iter().map(|v| v.0.clone()).collect();
        Matrix::from_columns(self.n, &cols)
    }

    fn echelon(&self) -> EchelonSpan {
        let mut span = EchelonSpan::new(self.n);
        for v in &self.basis {
            span.insert(&v.0);
        }
        span
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.echelon().contains(&v.0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let e = self.echelon();
        other.basis.iter().all(|v| e.contains(&v.0))
    }

    pub fn same_span(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// Coordinates of `v` in this basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Scalar>> {
        self.matrix().solve(&v.0)
    }

    /// Canonical reduced row echelon basis (rows), used for span comparison.
    pub fn canonical_form(&self) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::zeros(0, self.n);
        }
        let rows: Vec<Vec<Scalar>> = self.basis.iter().map(|v| v.0.clone()).collect();
        Matrix::from_rows(rows).rref().0
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // a in ker [A | -B] gives A a_1 = B a_2
        let a = self.matrix();
        let b = other.matrix().scale(&Scalar::from_integer((-1).into()));
        let stacked = a.hstack(&b);
        let d = self.dim();
        let vectors = stacked.kernel().into_iter().map(|k| Vector(a.mul_vec(&k[..d])));
        Subspace::spanned_by(self.n, vectors)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::spanned_by(self.n, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Standard basis vectors completing this basis, chosen at the non-pivot
    /// coordinates of the echelon form.
    pub fn pivot_complement(&self) -> Vec<Vector> {
        let pivots = self.canonical_form().rref().1;
        (0..self.n).filter(|i| !pivots.contains(i)).map(|i| Vector::basis(self.n, i)).collect()
    }

    pub fn is_zero_space(&self) -> bool {
        self.basis.is_empty()
    }
}

/// A subspace closed under the bracket of its ambient algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra(Subspace);

impl Deref for Subalgebra {
    type Target = Subspace;
    fn deref(&self) -> &Subspace {
        &self.0
    }
}

impl Subalgebra {
    /// Wraps a subspace already known to be bracket-closed.
    pub(crate) fn trusted(s: Subspace) -> Self {
        Subalgebra(s)
    }

    pub fn zero(n: usize) -> Self {
        Subalgebra(Subspace::zero(n))
    }

    pub fn as_subspace(&self) -> &Subspace {
        &self.0
    }

    pub fn into_subspace(self) -> Subspace {
        self.0
    }
}

impl LieAlgebra {
    /// Checks independence and bracket closure of `basis`.
    pub fn subalgebra(&self, basis: Vec<Vector>) -> Result<Subalgebra, LieError> {
        let s = Subspace::new(self.dim(), basis)?;
        self.check_closed(&s)?;
        Ok(Subalgebra(s))
    }

    /// Promotes a subspace to a subalgebra after checking closure.
    pub fn closed(&self, s: Subspace) -> Result<Subalgebra, LieError> {
        if s.ambient_dim() != self.dim() {
            return Err(LieError::DimensionMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        self.check_closed(&s)?;
        Ok(Subalgebra(s))
    }

    fn check_closed(&self, s: &Subspace) -> Result<(), LieError> {
        let e = s.echelon();
        for (i, a) in s.basis().iter().enumerate() {
            for (j, b) in s.basis().iter().enumerate().skip(i + 1) {
                if !e.contains(&self.bracket(a, b).0) {
                    return Err(LieError::NotClosed(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn full_subalgebra(&self) -> Subalgebra {
        Subalgebra(Subspace::full(self.dim()))
    }

    /// Span of all `[a, b]` with `a` in `x`, `b` in `y`.
    pub fn bracket_span(&self, x: &Subspace, y: &Subspace) -> Subspace {
        let vectors = x
            .basis()
            .iter()
            .flat_map(|a| y.basis().iter().map(move |b| (a, b)))
            .map(|(a, b)| self.bracket(a, b))
            .filter(|v| !v.is_zero());
        Subspace::spanned_by(self.dim(), vectors)
    }

    /// Smallest subalgebra containing the generators.
    pub fn subalgebra_closure(&self, generators: &[Vector]) -> Subalgebra {
        let n = self.dim();
        let mut span = EchelonSpan::new(n);
        let mut basis: Vec<Vector> = Vec::new();
        for g in generators {
            if span.insert(&g.0) {
                basis.push(g.clone());
            }
        }
        // each pass brackets new elements against everything; dimension is bounded by n
        let mut frontier = 0;
        while frontier < basis.len() {
            let end = basis.len();
            for i in frontier..end {
                for j in 0..end {
                    let v = self.bracket(&basis[i], &basis[j]);
                    if !v.0.iter().all(Zero::is_zero) && span.insert(&v.0) {
                        basis.push(v);
                    }
                }
            }
            frontier = end;
        }
        Subalgebra(Subspace { n, basis })
    }
}
