//! Finite-dimensional Lie algebras over the rationals, given by structure
//! constants `[e_i, e_j] = sum_k c[i][j][k] e_k`.

mod compact;
mod structure;
mod subspace;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::matrix::Matrix;
use crate::scalar::{int, Scalar};

pub use compact::CompactEmbeddingCheck;
pub use structure::{Classification, QuotientFrame};
pub use subspace::{Subalgebra, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("invalid structure constants: {}", format_violations(.0))]
    InvalidAlgebra(Vec<Violation>),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element does not normalize the subalgebra")]
    NotInNormalizer,
    #[error("Killing form is degenerate")]
    DegenerateKilling,
    #[error("vectors are linearly dependent")]
    LinearlyDependent,
    #[error("span is not closed under the bracket: [{0}, {1}] leaves it")]
    NotClosed(usize, usize),
    #[error("duplicate or empty basis label {0:?}")]
    BadLabel(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    Antisymmetry,
    Jacobi,
}

/// A failed identity on the basis triple `(i, j, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub indices: (usize, usize, usize),
    pub labels: (String, String, String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            ViolationKind::Antisymmetry => "ANTISYMMETRY_VIOLATION",
            ViolationKind::Jacobi => "JACOBI_VIOLATION",
        };
        let (a, b, c) = &self.labels;
        write!(f, "{name}({a},{b},{c})")
    }
}

/// Coordinates of an element of a Lie algebra in its basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Scalar>);

/// Coordinates of a linear functional in the dual basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Covector(pub Vec<Scalar>);

impl Vector {
    pub fn zero(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Vector::zero(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }
}

impl Covector {
    pub fn zero(n: usize) -> Self {
        Covector(vec![Scalar::zero(); n])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Covector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Pairing `<F, x>`.
    pub fn apply(&self, x: &Vector) -> Scalar {
        assert_eq!(self.dim(), x.dim());
        self.0.iter().zip(&x.0).map(|(a, b)| a * b).sum()
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for &Covector {
    type Output = Covector;
    fn add(self, rhs: &Covector) -> Covector {
        Covector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "Vector[{}]", parts.join(", "))
    }
}

impl fmt::Debug for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "Covector[{}]", parts.join(", "))
    }
}

/// A validated Lie algebra. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// `c[(i * n + j) * n + k]`
    consts: Vec<Scalar>,
    /// ad(e_i) for every basis vector
    ad_basis: Vec<Matrix>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({})", self.labels.join(" "))
    }
}

impl LieAlgebra {
    /// Validates a full structure-constant tensor `c[i][j][k]`.
    pub fn from_structure_constants(
        labels: Vec<String>,
        c: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, LieError> {
        let n = labels.len();
        check_labels(&labels)?;
        if c.len() != n {
            return Err(LieError::DimensionMismatch { expected: n, found: c.len() });
        }
        let mut consts = Vec::with_capacity(n * n * n);
        for row in &c {
            if row.len() != n {
                return Err(LieError::DimensionMismatch { expected: n, found: row.len() });
            }
            for entry in row {
                if entry.len() != n {
                    return Err(LieError::DimensionMismatch { expected: n, found: entry.len() });
                }
                consts.extend(entry.iter().cloned());
            }
        }
        Self::validated(labels, consts)
    }

    /// Builds an algebra from the listed brackets `[e_i, e_j] = v`. Pairs not
    /// listed default to zero and `[e_j, e_i]` is filled in by antisymmetry.
    /// Listing both orders inconsistently, or a nonzero `[e_i, e_i]`, is an
    /// antisymmetry violation.
    pub fn from_brackets(
        labels: Vec<String>,
        brackets: &[(usize, usize, Vector)],
    ) -> Result<Self, LieError> {
        let n = labels.len();
        check_labels(&labels)?;
        let mut consts = vec![Scalar::zero(); n * n * n];
        let mut given = vec![false; n * n];
        let mut violations = Vec::new();
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(LieError::DimensionMismatch { expected: n, found: i.max(j) + 1 });
            }
            if v.dim() != n {
                return Err(LieError::DimensionMismatch { expected: n, found: v.dim() });
            }
            for k in 0..n {
                let idx = (i * n + j) * n + k;
                let rev = (j * n + i) * n + k;
                let value = v.0[k].clone();
                let expected_rev = -value.clone();
                let conflict = (given[i * n + j] && consts[idx] != value)
                    || (given[j * n + i] && consts[rev] != expected_rev)
                    || (i == j && !value.is_zero());
                if conflict {
                    violations.push(Violation {
                        kind: ViolationKind::Antisymmetry,
                        indices: (i, j, k),
                        labels: (labels[i].clone(), labels[j].clone(), labels[k].clone()),
                    });
                }
                consts[idx] = value;
                if i != j {
                    consts[rev] = expected_rev;
                }
            }
            given[i * n + j] = true;
            given[j * n + i] = true;
        }
        if !violations.is_empty() {
            return Err(LieError::InvalidAlgebra(violations));
        }
        Self::validated(labels, consts)
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        Self::validated(labels, vec![Scalar::zero(); n * n * n]).expect("abelian algebra")
    }

    /// `a ⊕ b` with the bases concatenated and labels kept (they must not clash).
    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> Result<Self, LieError> {
        let (na, nb) = (a.dim(), b.dim());
        let n = na + nb;
        let mut labels = a.labels.clone();
        labels.extend(b.labels.iter().cloned());
        let mut brackets = Vec::new();
        for i in 0..na {
            for j in i + 1..na {
                let mut v = a.bracket_basis(i, j).0;
                v.extend(std::iter::repeat_n(Scalar::zero(), nb));
                brackets.push((i, j, Vector(v)));
            }
        }
        for i in 0..nb {
            for j in i + 1..nb {
                let mut v = vec![Scalar::zero(); na];
                v.extend(b.bracket_basis(i, j).0);
                brackets.push((na + i, na + j, Vector(v)));
            }
        }
        debug_assert_eq!(brackets.iter().map(|b| b.2.dim()).max().unwrap_or(n), n);
        Self::from_brackets(labels, &brackets)
    }

    fn validated(labels: Vec<String>, consts: Vec<Scalar>) -> Result<Self, LieError> {
        let n = labels.len();
        let c = |i: usize, j: usize, k: usize| &consts[(i * n + j) * n + k];
        let triple = |i: usize, j: usize, k: usize| {
            (labels[i].clone(), labels[j].clone(), labels[k].clone())
        };
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if !(c(i, j, k) + c(j, i, k)).is_zero() {
                        violations.push(Violation {
                            kind: ViolationKind::Antisymmetry,
                            indices: (i, j, k),
                            labels: triple(i, j, k),
                        });
                    }
                }
            }
        }
        if violations.is_empty() {
            // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], component l
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        let failed = (0..n).any(|l| {
                            let s: Scalar = (0..n)
                                .map(|m| {
                                    c(i, j, m) * c(m, k, l)
                                        + c(j, k, m) * c(m, i, l)
                                        + c(k, i, m) * c(m, j, l)
                                })
                                .sum();
                            !s.is_zero()
                        });
                        if failed {
                            violations.push(Violation {
                                kind: ViolationKind::Jacobi,
                                indices: (i, j, k),
                                labels: triple(i, j, k),
                            });
                        }
                    }
                }
            }
        }
        if !violations.is_empty() {
            return Err(LieError::InvalidAlgebra(violations));
        }
        let ad_basis = (0..n)
            .map(|i| {
                let mut m = Matrix::zeros(n, n);
                for j in 0..n {
                    for k in 0..n {
                        m[(k, j)] = c(i, j, k).clone();
                    }
                }
                m
            })
            .collect();
        Ok(LieAlgebra { labels, consts, ad_basis })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.consts[(i * n + j) * n + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// Basis vector by label. Panics on an unknown label.
    pub fn e(&self, label: &str) -> Vector {
        let i = self.index_of(label).unwrap_or_else(|| panic!("unknown basis label {label}"));
        self.basis_vector(i)
    }

    /// Linear combination of basis vectors by label.
    pub fn combination(&self, terms: &[(&str, Scalar)]) -> Vector {
        terms.iter().fold(Vector::zero(self.dim()), |acc, (l, c)| &acc + &self.e(l).scale(c))
    }

    /// Dual basis functional `label*`.
    pub fn dual(&self, label: &str) -> Covector {
        Covector(self.e(label).0)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        Vector((0..n).map(|k| self.structure_constant(i, j, k).clone()).collect())
    }

    /// `[x, y]`. Panics if either vector has the wrong length; see
    /// [`LieAlgebra::checked_bracket`].
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.checked_bracket(x, y).expect("bracket of vectors from another algebra")
    }

    pub fn checked_bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, LieError> {
        let n = self.dim();
        for v in [x, y] {
            if v.dim() != n {
                return Err(LieError::DimensionMismatch { expected: n, found: v.dim() });
            }
        }
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in x.0.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.0.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                if i == j {
                    continue;
                }
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        Ok(Vector(out))
    }

    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad_basis[i]
    }

    /// Matrix of `ad(x)`: column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &Vector) -> Matrix {
        assert_eq!(x.dim(), self.dim(), "ad of a vector from another algebra");
        let n = self.dim();
        x.0.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (i, c)| acc.add(&self.ad_basis[i].scale(c)))
    }

    pub fn trace_ad(&self, x: &Vector) -> Scalar {
        x.0.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| c * self.ad_basis[i].trace())
            .sum()
    }

    /// Human form of a vector in terms of the basis labels, e.g. `2*E - 1/2*F`.
    pub fn format_vector(&self, v: &Vector) -> String {
        format_combination(v.0.iter().zip(self.labels.iter().map(String::as_str)))
    }

    /// Human form of a functional, e.g. `H* - 2*E*`.
    pub fn format_covector(&self, f: &Covector) -> String {
        let names: Vec<String> = self.labels.iter().map(|l| format!("{l}*")).collect();
        format_combination(f.0.iter().zip(names.iter().map(String::as_str)))
    }
}

fn check_labels(labels: &[String]) -> Result<(), LieError> {
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() || labels[..i].contains(l) {
            return Err(LieError::BadLabel(l.clone()));
        }
    }
    Ok(())
}

/// `sum c_i * name_i` with unit coefficients elided; `0` for the empty sum.
pub(crate) fn format_combination<'a>(terms: impl Iterator<Item = (&'a Scalar, &'a str)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Standard algebras used throughout tests, benches and the catalog.
pub mod standard {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    /// sl(2) with `[H,E] = 2E`, `[H,F] = -2F`, `[E,F] = H`.
    pub fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            labels(&["H", "E", "F"]),
            &[
                (0, 1, Vector::from_i64(&[0, 2, 0])),
                (0, 2, Vector::from_i64(&[0, 0, -2])),
                (1, 2, Vector::from_i64(&[1, 0, 0])),
            ],
        )
        .expect("sl2")
    }

    /// Heisenberg algebra `[X,Y] = Z`.
    pub fn heis3() -> LieAlgebra {
        LieAlgebra::from_brackets(labels(&["X", "Y", "Z"]), &[(0, 1, Vector::from_i64(&[0, 0, 1]))])
            .expect("heis3")
    }

    /// Affine algebra of the line, `[X,Y] = Y`.
    pub fn aff() -> LieAlgebra {
        LieAlgebra::from_brackets(labels(&["X", "Y"]), &[(0, 1, Vector::from_i64(&[0, 1]))])
            .expect("aff")
    }

    /// su(2): `[A,B] = C`, `[B,C] = A`, `[C,A] = B`.
    pub fn su2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            labels(&["A", "B", "C"]),
            &[
                (0, 1, Vector::from_i64(&[0, 0, 1])),
                (1, 2, Vector::from_i64(&[1, 0, 0])),
                (2, 0, Vector::from_i64(&[0, 1, 0])),
            ],
        )
        .expect("su2")
    }

    /// sl(2) ⊕ sl(2) with labels `H1 E1 F1 H2 E2 F2`.
    pub fn sl2_sl2() -> LieAlgebra {
        let rename = |suffix: &str| {
            let g = sl2();
            let names: Vec<String> = g.labels().iter().map(|l| format!("{l}{suffix}")).collect();
            LieAlgebra { labels: names, ..g }
        };
        LieAlgebra::direct_sum(&rename("1"), &rename("2")).expect("sl2+sl2")
    }

    /// sl(2) ⊕ aff(R).
    pub fn sl2_aff() -> LieAlgebra {
        LieAlgebra::direct_sum(&sl2(), &aff()).expect("sl2+aff")
    }

    /// sl(3) in the basis `H1 H2 E12 E13 E23 E21 E31 E32` with
    /// `H1 = E11 - E22`, `H2 = E22 - E33`.
    pub fn sl3() -> LieAlgebra {
        let m = |i: usize, j: usize| {
            let mut a = Matrix::zeros(3, 3);
            a[(i, j)] = Scalar::one();
            a
        };
        let basis = vec![
            m(0, 0).sub(&m(1, 1)),
            m(1, 1).sub(&m(2, 2)),
            m(0, 1),
            m(0, 2),
            m(1, 2),
            m(1, 0),
            m(2, 0),
            m(2, 1),
        ];
        let names = ["H1", "H2", "E12", "E13", "E23", "E21", "E31", "E32"];
        LieAlgebra::from_matrix_basis(labels(&names), &basis).expect("sl3")
    }
}

impl LieAlgebra {
    /// Structure constants of a linearly independent, commutator-closed set
    /// of square matrices.
    pub fn from_matrix_basis(labels: Vec<String>, basis: &[Matrix]) -> Result<Self, LieError> {
        let n = basis.len();
        if labels.len() != n {
            return Err(LieError::DimensionMismatch { expected: n, found: labels.len() });
        }
        let flat: Vec<Vec<Scalar>> = basis.iter().map(Matrix::flatten).collect();
        let len = flat.first().map_or(0, Vec::len);
        let b = Matrix::from_columns(len, &flat);
        if b.rank() < n {
            return Err(LieError::LinearlyDependent);
        }
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = basis[i].commutator(&basis[j]).flatten();
                let coords = b.solve(&c).ok_or(LieError::NotClosed(i, j))?;
                brackets.push((i, j, Vector(coords)));
            }
        }
        Self::from_brackets(labels, &brackets)
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;
    use crate::scalar::frac;

    /// Jacobi by brute force over all ordered triples, independent of the
    /// validator's loop structure.
    fn jacobi_holds(g: &LieAlgebra) -> bool {
        let n = g.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (a, b, c) = (g.basis_vector(i), g.basis_vector(j), g.basis_vector(k));
                    let s = &(&g.bracket(&g.bracket(&a, &b), &c) + &g.bracket(&g.bracket(&b, &c), &a))
                        + &g.bracket(&g.bracket(&c, &a), &b);
                    s.is_zero()
                })
            })
        })
    }

    #[test]
    fn standard_algebras_satisfy_jacobi() {
        for g in [sl2(), heis3(), aff(), su2(), sl2_sl2(), sl2_aff(), sl3(), LieAlgebra::abelian(4)] {
            assert!(jacobi_holds(&g), "{g:?}");
        }
    }

    #[test]
    fn jacobi_violation_is_reported() {
        let names = vec!["X".to_string(), "Y".to_string(), "Z".to_string()];
        let err = LieAlgebra::from_brackets(
            names,
            &[
                (0, 1, Vector::from_i64(&[0, 0, 1])),
                (0, 2, Vector::from_i64(&[0, 1, 0])),
                (1, 2, Vector::from_i64(&[0, 1, 0])),
            ],
        )
        .unwrap_err();
        match err {
            LieError::InvalidAlgebra(v) => {
                assert_eq!(v.len(), 1);
                assert_eq!(v[0].kind, ViolationKind::Jacobi);
                assert_eq!(v[0].to_string(), "JACOBI_VIOLATION(X,Y,Z)");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn antisymmetry_violation_is_reported() {
        let names = vec!["X".to_string(), "Y".to_string()];
        let err = LieAlgebra::from_brackets(
            names.clone(),
            &[(0, 1, Vector::from_i64(&[0, 1])), (1, 0, Vector::from_i64(&[0, 1]))],
        )
        .unwrap_err();
        assert!(matches!(&err, LieError::InvalidAlgebra(v) if v[0].kind == ViolationKind::Antisymmetry));

        let mut c = vec![vec![vec![Scalar::zero(); 2]; 2]; 2];
        c[0][1][1] = int(1);
        let err = LieAlgebra::from_structure_constants(names, c).unwrap_err();
        assert!(matches!(&err, LieError::InvalidAlgebra(v) if v[0].indices == (0, 1, 1)));
    }

    #[test]
    fn sl2_brackets() {
        let g = sl2();
        assert_eq!(g.bracket(&g.e("H"), &g.e("E")), g.e("E").scale(&int(2)));
        let x = g.combination(&[("H", frac(1, 3)), ("F", int(-2))]);
        assert!(g.bracket(&x, &x).is_zero());
        let h = heis3();
        assert_eq!(h.bracket(&h.e("Y"), &h.e("X")), -&h.e("Z"));
        assert!(matches!(
            g.checked_bracket(&Vector::zero(2), &g.e("H")),
            Err(LieError::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn ad_matrices() {
        let g = sl2();
        let ad_h = g.ad_matrix(&g.e("H"));
        assert_eq!(ad_h, Matrix::from_i64(&[&[0, 0, 0], &[0, 2, 0], &[0, 0, -2]]));
        assert_eq!(ad_h.trace(), int(0));
        assert!(LieAlgebra::abelian(3).ad_matrix(&Vector::from_i64(&[1, 2, 3])).is_zero());
        let a = aff();
        let ad_x = a.ad_matrix(&a.e("X"));
        assert_eq!(ad_x, Matrix::from_i64(&[&[0, 0], &[0, 1]]));
        assert_eq!(ad_x.trace(), int(1));
    }

    #[test]
    fn sl3_from_matrices() {
        let g = sl3();
        assert_eq!(g.dim(), 8);
        // [E12, E21] = E11 - E22 = H1
        assert_eq!(g.bracket(&g.e("E12"), &g.e("E21")), g.e("H1"));
        // [E12, E23] = E13
        assert_eq!(g.bracket(&g.e("E12"), &g.e("E23")), g.e("E13"));
    }

    #[test]
    fn formatting() {
        let g = sl2();
        let v = g.combination(&[("E", int(2)), ("F", frac(-1, 2))]);
        assert_eq!(g.format_vector(&v), "2*E - 1/2*F");
        assert_eq!(g.format_vector(&Vector::zero(3)), "0");
        assert_eq!(g.format_covector(&Covector::from_i64(&[1, -1, 0])), "H* - E*");
    }

    #[test]
    fn duplicate_labels_rejected() {
        let names = vec!["A".to_string(), "A".to_string()];
        assert!(matches!(LieAlgebra::from_brackets(names, &[]), Err(LieError::BadLabel(_))));
    }
}
