//! Distinguished subalgebras, trace conditions and structural tests.

use num::Zero;

use super::{Covector, LieAlgebra, LieError, Subalgebra, Subspace, Vector};
use crate::matrix::{EchelonSpan, Matrix};
use crate::scalar::Scalar;

/// A basis of `g` adapted to a subspace `h`: the `h` basis followed by a
/// complement. Quotient coordinates are the last `codim(h)` coordinates in
/// this basis.
#[derive(Debug, Clone)]
pub struct QuotientFrame {
    sub_dim: usize,
    complement: Vec<Vector>,
    /// inverse of the change-of-basis matrix `[h | complement]`
    to_frame: Matrix,
}

impl QuotientFrame {
    /// Complement chosen by column pivoting on the `h` basis.
    pub fn new(h: &Subspace) -> Self {
        Self::with_complement(h, h.pivot_complement()).expect("pivot complement is a complement")
    }

    /// Uses the given vectors as the complement; `None` if they do not
    /// complete the basis of `h` to a basis of `g`.
    pub fn with_complement(h: &Subspace, complement: Vec<Vector>) -> Option<Self> {
        let n = h.ambient_dim();
        let cols: Vec<Vec<Scalar>> =
            h.basis().iter().chain(&complement).map(|v| v.0.clone()).collect();
        if cols.len() != n {
            return None;
        }
        let to_frame = Matrix::from_columns(n, &cols).inverse()?;
        Some(QuotientFrame { sub_dim: h.dim(), complement, to_frame })
    }

    pub fn codim(&self) -> usize {
        self.complement.len()
    }

    pub fn complement(&self) -> &[Vector] {
        &self.complement
    }

    /// Image of `v` in `g/h`, in the complement coordinates.
    pub fn project(&self, v: &Vector) -> Vec<Scalar> {
        self.to_frame.mul_vec(&v.0)[self.sub_dim..].to_vec()
    }

    /// The `codim x n` matrix of the projection `g -> g/h`.
    pub fn projection_matrix(&self) -> Matrix {
        let n = self.to_frame.cols();
        let rows = (self.sub_dim..n).map(|i| self.to_frame.row(i).to_vec()).collect();
        if self.codim() == 0 {
            return Matrix::zeros(0, n);
        }
        Matrix::from_rows(rows)
    }

    /// Matrix of the operator induced on `g/h` by `op`, which must preserve `h`.
    pub fn induced(&self, op: &Matrix, h: &Subspace) -> Option<Matrix> {
        let d = self.sub_dim;
        let n = op.rows();
        let p = self.projection_matrix();
        // op must map h into h
        for b in h.basis() {
            if !p.mul_vec(&op.mul_vec(&b.0)).iter().all(Zero::is_zero) {
                return None;
            }
        }
        let cols: Vec<Vec<Scalar>> =
            self.complement.iter().map(|c| p.mul_vec(&op.mul_vec(&c.0))).collect();
        debug_assert_eq!(cols.len(), n - d);
        Some(Matrix::from_columns(n - d, &cols))
    }
}

/// Structural flags of a Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Classification {
    pub solvable: bool,
    pub nilpotent: bool,
    pub semisimple: bool,
    pub reductive: bool,
}

impl LieAlgebra {
    /// Trace of `ad(x)` acting on `g/h`; `x` must normalize `h`.
    pub fn trace_on_quotient(&self, x: &Vector, h: &Subspace) -> Result<Scalar, LieError> {
        self.trace_on_quotient_in(x, h, &QuotientFrame::new(h))
    }

    /// As [`LieAlgebra::trace_on_quotient`] with an explicit complement frame.
    pub fn trace_on_quotient_in(
        &self,
        x: &Vector,
        h: &Subspace,
        frame: &QuotientFrame,
    ) -> Result<Scalar, LieError> {
        let op = self.ad_matrix(x);
        let induced = frame.induced(&op, h).ok_or(LieError::NotInNormalizer)?;
        Ok(if induced.rows() == 0 { Scalar::zero() } else { induced.trace() })
    }

    /// `n_g(h) = {x : [x, h] ⊆ h}`, as the kernel of `x -> ([x, b_i] mod h)`.
    pub fn normalizer(&self, h: &Subspace) -> Subalgebra {
        let n = self.dim();
        let p = QuotientFrame::new(h).projection_matrix();
        let mut stacked = Matrix::zeros(0, n);
        for b in h.basis() {
            // [x, b] = -ad(b) x; the sign does not change the kernel
            stacked = stacked.vstack(&p.mul(&self.ad_matrix(b)));
        }
        Subalgebra::trusted(Subspace::spanned_by(n, stacked.kernel().into_iter().map(Vector)))
    }

    /// `z_g(s) = {x : [x, s] = 0}`.
    pub fn centralizer(&self, s: &Subspace) -> Subalgebra {
        let n = self.dim();
        let mut stacked = Matrix::zeros(0, n);
        for b in s.basis() {
            stacked = stacked.vstack(&self.ad_matrix(b));
        }
        Subalgebra::trusted(Subspace::spanned_by(n, stacked.kernel().into_iter().map(Vector)))
    }

    /// `z(h) = h ∩ z_g(h)`.
    pub fn center(&self, h: &Subspace) -> Subspace {
        let n = self.dim();
        let hm = h.matrix();
        let mut stacked = Matrix::zeros(0, h.dim());
        for b in h.basis() {
            stacked = stacked.vstack(&self.ad_matrix(b).mul(&hm));
        }
        Subspace::spanned_by(n, stacked.kernel().into_iter().map(|a| Vector(hm.mul_vec(&a))))
    }

    pub fn derived_subalgebra(&self) -> Subalgebra {
        let full = Subspace::full(self.dim());
        Subalgebra::trusted(self.bracket_span(&full, &full))
    }

    /// `g = g^1 ⊇ [g, g^1] ⊇ ...` until it stabilises; the last entry is the
    /// stable term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let next = self.bracket_span(&full, series.last().unwrap());
            if next.dim() == series.last().unwrap().dim() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim()).all(|i| self.ad_basis(i).trace().is_zero())
    }

    /// `{x : tr ad(x) = 0}`; all of `g` or a hyperplane.
    pub fn unimodular_kernel(&self) -> Subspace {
        let n = self.dim();
        let functional = Matrix::from_rows(vec![(0..n).map(|i| self.ad_basis(i).trace()).collect()]);
        Subspace::spanned_by(n, functional.kernel().into_iter().map(Vector))
    }

    /// `B[i][j] = tr(ad e_i ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let mut b = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = self.ad_basis(i).mul(self.ad_basis(j)).trace();
                b[(i, j)] = v.clone();
                b[(j, i)] = v;
            }
        }
        b
    }

    pub fn killing(&self, x: &Vector, y: &Vector) -> Scalar {
        self.ad_matrix(x).mul(&self.ad_matrix(y)).trace()
    }

    /// `B(x, ·)`, available only when the Killing form is nondegenerate.
    pub fn killing_dual(&self, x: &Vector) -> Result<Covector, LieError> {
        let b = self.killing_form();
        if b.determinant().is_zero() {
            return Err(LieError::DegenerateKilling);
        }
        Ok(Covector(b.mul_vec(&x.0)))
    }

    /// Matrix `Ω[i][j] = -F([e_i, e_j])`.
    pub fn kks_matrix(&self, f: &Covector) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v: Scalar = (0..n).map(|k| self.structure_constant(i, j, k) * &f.0[k]).sum();
                m[(i, j)] = -v;
            }
        }
        m
    }

    /// Stabilizer of a functional under the coadjoint action, the radical of
    /// `ω(x, y) = -F([x, y])`.
    pub fn stabilizer_of_functional(&self, f: &Covector) -> Subalgebra {
        let n = self.dim();
        let k = self.kks_matrix(f).kernel();
        Subalgebra::trusted(Subspace::spanned_by(n, k.into_iter().map(Vector)))
    }

    /// `ker ad(x)`.
    pub fn stabilizer_of_element(&self, x: &Vector) -> Subalgebra {
        let n = self.dim();
        let k = self.ad_matrix(x).kernel();
        Subalgebra::trusted(Subspace::spanned_by(n, k.into_iter().map(Vector)))
    }

    pub fn classify(&self) -> Classification {
        let n = self.dim();
        let b = self.killing_form();
        let derived = self.derived_subalgebra();
        let dm = derived.matrix();
        // Cartan: solvable iff B(g, [g,g]) = 0
        let solvable = derived.dim() == 0 || b.mul(&dm).is_zero();
        let nilpotent = self.lower_central_series().last().unwrap().dim() == 0;
        let semisimple = n > 0 && !b.determinant().is_zero();
        let center = self.center(&Subspace::full(n));
        let reductive = center.dim() + derived.dim() == n
            && center.intersection(&derived).dim() == 0
            && self.is_semisimple_ideal(&derived);
        Classification { solvable, nilpotent, semisimple, reductive }
    }

    /// Whether an ideal is semisimple as a Lie algebra in its own right,
    /// via the Killing form of the restricted adjoint action.
    fn is_semisimple_ideal(&self, ideal: &Subspace) -> bool {
        if ideal.dim() == 0 {
            return true;
        }
        let basis: Vec<Vec<Scalar>> = ideal.basis().iter().map(|v| v.0.clone()).collect();
        let restricted: Vec<Matrix> = ideal
            .basis()
            .iter()
            .map(|v| self.ad_matrix(v).restrict_to(&basis).expect("ideal is ad-invariant"))
            .collect();
        let d = basis.len();
        let mut gram = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                gram[(i, j)] = restricted[i].mul(&restricted[j]).trace();
            }
        }
        !gram.determinant().is_zero()
    }

    /// Whether `g` is a completely reducible `s`-module under `ad`: the
    /// associative algebra generated by `1` and `ad(s)` must have a
    /// nondegenerate trace form.
    pub fn is_reductive_in(&self, s: &Subspace) -> bool {
        let algebra = self.enveloping_matrix_algebra(s);
        let k = algebra.len();
        let mut gram = Matrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let v = algebra[i].mul(&algebra[j]).trace();
                gram[(i, j)] = v.clone();
                gram[(j, i)] = v;
            }
        }
        !gram.determinant().is_zero()
    }

    /// Basis of the unital associative matrix algebra generated by `ad(s)`.
    pub(crate) fn enveloping_matrix_algebra(&self, s: &Subspace) -> Vec<Matrix> {
        let n = self.dim();
        let generators: Vec<Matrix> = s.basis().iter().map(|b| self.ad_matrix(b)).collect();
        let mut span = EchelonSpan::new(n * n);
        let mut basis = Vec::new();
        for m in std::iter::once(Matrix::identity(n)).chain(generators.iter().cloned()) {
            if span.insert(&m.flatten()) {
                basis.push(m);
            }
        }
        let mut frontier = 0;
        while frontier < basis.len() {
            let end = basis.len();
            for i in frontier..end {
                for g in &generators {
                    let p = g.mul(&basis[i]);
                    if span.insert(&p.flatten()) {
                        basis.push(p);
                    }
                }
            }
            frontier = end;
        }
        basis
    }
}
