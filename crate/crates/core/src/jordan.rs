//! Additive Jordan–Chevalley decomposition and the elliptic / hyperbolic /
//! nilpotent classification of elements through their adjoint operators.
//!
//! The semisimple/nilpotent split is always exact (Newton iteration on the
//! squarefree part of the characteristic polynomial). The further split of
//! the semisimple part into elliptic and hyperbolic pieces is exact when the
//! minimal polynomial is a product of rational linear factors and a factor
//! whose roots are all real or all purely imaginary; otherwise it falls back
//! to a certified floating point eigenvalue computation.

use num::complex::Complex64;
use num::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::lie::{LieAlgebra, Vector};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JordanError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not semisimple")]
    NotSemisimple,
    #[error("could not certify the signs of eigenvalue real parts")]
    UncertifiedSplit,
    #[error("Jordan part is not the adjoint of an element of the algebra")]
    NotInAdjointImage,
}

/// Elliptic and hyperbolic parts of a semisimple matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum SemisimpleSplit {
    Exact { e_part: Matrix, h_part: Matrix },
    /// Floating point parts; the eigenvalue real-part signs behind them are
    /// certified by disjoint inclusion disks.
    Numeric { e_part: Vec<Vec<f64>>, h_part: Vec<Vec<f64>>, spectrum: Vec<CertifiedEigenvalue> },
}

impl SemisimpleSplit {
    pub fn is_exact(&self) -> bool {
        matches!(self, SemisimpleSplit::Exact { .. })
    }
}

/// An eigenvalue approximation with a disk that provably contains exactly
/// one eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertifiedEigenvalue {
    pub re: f64,
    pub im: f64,
    pub radius: f64,
    /// real part proven to be exactly zero
    pub imaginary: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct JordanParts {
    pub s_part: Matrix,
    pub n_part: Matrix,
    pub split: Option<SemisimpleSplit>,
}

impl JordanParts {
    pub fn exact(&self) -> bool {
        self.split.as_ref().is_none_or(SemisimpleSplit::is_exact)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Elliptic,
    Hyperbolic,
    Nilpotent,
}

/// Type of a matrix (or of an element, through `ad`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    /// `ad(x) = 0`: simultaneously elliptic, hyperbolic and nilpotent
    Central,
    Elliptic,
    Hyperbolic,
    Nilpotent,
    /// the nonzero parts, in the order elliptic, hyperbolic, nilpotent
    Mixed(Vec<Part>),
}

impl ElementKind {
    pub fn has_part(&self, part: Part) -> bool {
        match self {
            ElementKind::Central => false,
            ElementKind::Elliptic => part == Part::Elliptic,
            ElementKind::Hyperbolic => part == Part::Hyperbolic,
            ElementKind::Nilpotent => part == Part::Nilpotent,
            ElementKind::Mixed(parts) => parts.contains(&part),
        }
    }

    /// Semisimple with purely imaginary spectrum (zero counts).
    pub fn is_elliptic(&self) -> bool {
        matches!(self, ElementKind::Central | ElementKind::Elliptic)
    }

    /// Semisimple with real spectrum and not central.
    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, ElementKind::Hyperbolic)
    }
}

/// `M = S + N` with `S` semisimple, `N` nilpotent, `SN = NS`.
pub fn jordan_chevalley(m: &Matrix) -> Result<(Matrix, Matrix), JordanError> {
    if !m.is_square() {
        return Err(JordanError::NotSquare);
    }
    let n = m.rows();
    let q = m.charpoly().squarefree_part();
    let dq = q.derivative();
    let mut s = m.clone();
    // Newton iteration converges in at most ceil(log2 n) + 1 steps
    for _ in 0..=usize::BITS - n.leading_zeros() + 1 {
        let qs = q.eval_matrix(&s);
        if qs.is_zero() {
            break;
        }
        let inv = dq.eval_matrix(&s).inverse().expect("q'(S) is invertible along the iteration");
        s = s.sub(&qs.mul(&inv));
    }
    debug_assert!(q.eval_matrix(&s).is_zero());
    let nil = m.sub(&s);
    Ok((s, nil))
}

/// Exact type of a square matrix, decided with Sturm sequences.
pub fn classify_matrix(m: &Matrix) -> Result<ElementKind, JordanError> {
    if m.is_zero() {
        return Ok(ElementKind::Central);
    }
    let (s, nil) = jordan_chevalley(m)?;
    Ok(kind_from_parts(&s, &nil))
}

fn kind_from_parts(s: &Matrix, nil: &Matrix) -> ElementKind {
    if s.is_zero() {
        return ElementKind::Nilpotent;
    }
    let has_e = !spectrum_is_real(s);
    let has_h = !spectrum_is_imaginary(s);
    let has_n = !nil.is_zero();
    match (has_e, has_h, has_n) {
        (true, false, false) => ElementKind::Elliptic,
        (false, true, false) => ElementKind::Hyperbolic,
        _ => {
            let parts = [(has_e, Part::Elliptic), (has_h, Part::Hyperbolic), (has_n, Part::Nilpotent)];
            ElementKind::Mixed(parts.into_iter().filter(|(b, _)| *b).map(|(_, p)| p).collect())
        }
    }
}

/// All eigenvalues real.
pub fn spectrum_is_real(m: &Matrix) -> bool {
    let p = m.charpoly().squarefree_part();
    p.count_real_roots() == p.degree()
}

/// All eigenvalues purely imaginary (zero included). For semisimple `S`,
/// this holds iff every eigenvalue of `S^2` is real and not positive.
pub fn spectrum_is_imaginary(s: &Matrix) -> bool {
    let p = s.mul(s).charpoly().squarefree_part();
    let at_zero = usize::from(p.eval(&Scalar::zero()).is_zero());
    p.count_negative_roots() + at_zero == p.degree()
}

/// Elliptic/hyperbolic split of a semisimple matrix.
pub fn split_semisimple(s: &Matrix) -> Result<SemisimpleSplit, JordanError> {
    if !s.is_square() {
        return Err(JordanError::NotSquare);
    }
    let n = s.rows();
    if s.is_zero() {
        return Ok(SemisimpleSplit::Exact { e_part: Matrix::zeros(n, n), h_part: Matrix::zeros(n, n) });
    }
    let m = s.minimal_polynomial();
    if !m.is_squarefree() {
        return Err(JordanError::NotSemisimple);
    }
    let all_hyperbolic = || SemisimpleSplit::Exact { e_part: Matrix::zeros(n, n), h_part: s.clone() };
    let Some(roots) = m.rational_roots() else {
        return numeric_split(s, &m);
    };
    let linear = roots.iter().fold(Poly::one(), |acc, r| acc.mul(&Poly::linear_root(r)));
    let rest = m.div_rem(&linear).0;
    if rest.degree() == 0 || rest.count_real_roots() == rest.degree() {
        return Ok(all_hyperbolic());
    }
    if let Some(p) = rest.as_poly_in_square() {
        if p.count_negative_roots() == p.degree() {
            // rest has purely imaginary roots; project onto ker rest(S)
            let (_, u, _) = linear.ext_gcd(&rest);
            let projector = u.mul(&linear).eval_matrix(s);
            let e_part = s.mul(&projector);
            let h_part = s.sub(&e_part);
            return Ok(SemisimpleSplit::Exact { e_part, h_part });
        }
    }
    numeric_split(s, &m)
}

/// Jordan–Chevalley parts of `m` together with the semisimple split.
pub fn jordan_parts(m: &Matrix) -> Result<JordanParts, JordanError> {
    let (s_part, n_part) = jordan_chevalley(m)?;
    let split = Some(split_semisimple(&s_part)?);
    Ok(JordanParts { s_part, n_part, split })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementClassification {
    pub kind: ElementKind,
    pub parts: JordanParts,
}

/// Classifies `x` through `ad(x)`.
pub fn classify_element(g: &LieAlgebra, x: &Vector) -> Result<ElementClassification, JordanError> {
    let ad = g.ad_matrix(x);
    let parts = jordan_parts(&ad)?;
    let kind = if ad.is_zero() { ElementKind::Central } else { kind_from_parts(&parts.s_part, &parts.n_part) };
    Ok(ElementClassification { kind, parts })
}

/// Elements `(x_s, x_n)` of `g` with `ad(x_s)`, `ad(x_n)` the Jordan parts of
/// `ad(x)`. Exists whenever `g` is semisimple.
pub fn element_jordan_parts(g: &LieAlgebra, x: &Vector) -> Result<(Vector, Vector), JordanError> {
    let n = g.dim();
    let (_, nil) = jordan_chevalley(&g.ad_matrix(x))?;
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| g.ad_basis(i).flatten()).collect();
    let system = Matrix::from_columns(n * n, &cols);
    let coords = system.solve(&nil.flatten()).ok_or(JordanError::NotInAdjointImage)?;
    let x_n = Vector(coords);
    // ad is faithful on semisimple g, so the solution is unique there
    let x_s = x - &x_n;
    if g.ad_matrix(&x_s).add(&nil) != g.ad_matrix(x) {
        return Err(JordanError::NotInAdjointImage);
    }
    Ok((x_s, x_n))
}

fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn eval_c(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Durand–Kerner on a monic polynomial followed by Newton polishing.
fn approximate_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let seed = Complex64::new(0.4, 0.9);
    let scale = 1.0 + coeffs[..d].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32) * scale).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let denom = (0..d).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = eval_c(coeffs, z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * scale {
            break;
        }
    }
    let dcoeffs: Vec<f64> = coeffs.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let dp = eval_c(&dcoeffs, *zi);
            if dp.norm() > 0.0 {
                *zi -= eval_c(coeffs, *zi) / dp;
            }
        }
    }
    z
}

/// Inclusion disks from Weierstrass corrections: if the disks of radius
/// `d * |W_i|` (plus rounding slack) are pairwise disjoint, each contains
/// exactly one root.
fn certify(coeffs: &[f64], z: &[Complex64]) -> Option<Vec<f64>> {
    let d = z.len();
    let eps = f64::EPSILON;
    let radii: Vec<f64> = (0..d)
        .map(|i| {
            let denom = (0..d).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let magnitude: f64 = coeffs.iter().enumerate().map(|(k, c)| c.abs() * z[i].norm().powi(k as i32)).sum();
            let rounding = 16.0 * (d as f64 + 1.0) * eps * magnitude;
            let w = (eval_c(coeffs, z[i]).norm() + rounding) / denom.norm();
            d as f64 * w * (1.0 + 1e-8) + f64::MIN_POSITIVE
        })
        .collect();
    for i in 0..d {
        for j in i + 1..d {
            if (z[i] - z[j]).norm() <= radii[i] + radii[j] {
                return None;
            }
        }
    }
    Some(radii)
}

fn numeric_split(s: &Matrix, minpoly: &Poly) -> Result<SemisimpleSplit, JordanError> {
    let n = s.rows();
    let m = minpoly.monic();
    let coeffs: Vec<f64> = m.coeffs().iter().map(to_f64).collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(JordanError::UncertifiedSplit);
    }
    let z = approximate_roots(&coeffs);
    let radii = certify(&coeffs, &z).ok_or(JordanError::UncertifiedSplit)?;

    // exact count of roots on the imaginary axis: the zero root plus the
    // negative real roots of P where gcd(m(t), m(-t)) = P(t^2)
    let symmetric = m.gcd(&m.reflect());
    let on_axis = usize::from(m.eval(&Scalar::zero()).is_zero())
        + 2 * symmetric
            .as_poly_in_square()
            .map(|p| {
                let p = if p.eval(&Scalar::zero()).is_zero() { p.div_rem(&Poly::from_i64(&[0, 1])).0 } else { p };
                p.count_negative_roots()
            })
            .unwrap_or(0);
    let candidates: Vec<bool> = (0..z.len()).map(|i| z[i].re.abs() <= radii[i]).collect();
    if candidates.iter().filter(|&&c| c).count() != on_axis {
        return Err(JordanError::UncertifiedSplit);
    }
    let spectrum: Vec<CertifiedEigenvalue> = (0..z.len())
        .map(|i| CertifiedEigenvalue { re: z[i].re, im: z[i].im, radius: radii[i], imaginary: candidates[i] })
        .collect();

    // h = f(S) where f interpolates Re(λ) on the spectrum
    let d = z.len();
    let mut f = vec![Complex64::new(0.0, 0.0); d];
    for i in 0..d {
        let target = if candidates[i] { 0.0 } else { z[i].re };
        if target == 0.0 {
            continue;
        }
        // Lagrange basis polynomial for node i
        let mut basis = vec![Complex64::new(1.0, 0.0)];
        let mut denom = Complex64::new(1.0, 0.0);
        for j in (0..d).filter(|&j| j != i) {
            let mut next = vec![Complex64::new(0.0, 0.0); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k] -= b * z[j];
                next[k + 1] += b;
            }
            basis = next;
            denom *= z[i] - z[j];
        }
        for (k, b) in basis.iter().enumerate() {
            f[k] += b * target / denom;
        }
    }
    let sf: Vec<Vec<f64>> = (0..n).map(|i| s.row(i).iter().map(to_f64).collect()).collect();
    let mut h = vec![vec![0.0; n]; n];
    for c in f.iter().rev() {
        let mut next = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|k| h[i][k] * sf[k][j]).sum::<f64>();
            }
            next[i][i] += c.re;
        }
        h = next;
    }
    let e: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| sf[i][j] - h[i][j]).collect()).collect();
    Ok(SemisimpleSplit::Numeric { e_part: e, h_part: h, spectrum })
}

/// Checks every defining property of the decomposition exactly.
pub fn verify_parts(m: &Matrix, parts: &JordanParts) -> bool {
    let (s, nil) = (&parts.s_part, &parts.n_part);
    let n = m.rows();
    let reconstructs = s.add(nil) == *m;
    let commute = s.commutator(nil).is_zero();
    let nilpotent = nil.pow(n.max(1) as u32).is_zero();
    let semisimple = s.minimal_polynomial().is_squarefree();
    let split_ok = match &parts.split {
        None | Some(SemisimpleSplit::Numeric { .. }) => true,
        Some(SemisimpleSplit::Exact { e_part, h_part }) => {
            e_part.add(h_part) == *s
                && e_part.commutator(h_part).is_zero()
                && e_part.commutator(nil).is_zero()
                && h_part.commutator(nil).is_zero()
                && spectrum_is_real(h_part)
                && spectrum_is_imaginary(e_part)
        }
    };
    reconstructs && commute && nilpotent && semisimple && split_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::standard::*;
    use crate::scalar::int;

    #[test]
    fn already_semisimple_or_nilpotent() {
        let d = Matrix::from_i64(&[&[1, 0], &[0, 2]]);
        assert_eq!(jordan_chevalley(&d).unwrap(), (d.clone(), Matrix::zeros(2, 2)));
        let n = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(jordan_chevalley(&n).unwrap(), (Matrix::zeros(2, 2), n.clone()));
    }

    #[test]
    fn unipotent_block() {
        let m = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let (s, n) = jordan_chevalley(&m).unwrap();
        assert_eq!(s, Matrix::identity(2));
        assert_eq!(n, Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        let parts = jordan_parts(&m).unwrap();
        assert!(verify_parts(&m, &parts));
    }

    #[test]
    fn conjugated_blocks_recovered() {
        // P (D + N) P^-1 with D = diag(2, 2, -1), N = E_12
        let d = Matrix::from_i64(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, -1]]);
        let nil = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let p = Matrix::from_i64(&[&[1, 2, 0], &[0, 1, 1], &[1, 0, 1]]);
        let pi = p.inverse().unwrap();
        let m = p.mul(&d.add(&nil)).mul(&pi);
        let (s, n) = jordan_chevalley(&m).unwrap();
        assert_eq!(s, p.mul(&d).mul(&pi));
        assert_eq!(n, p.mul(&nil).mul(&pi));
    }

    #[test]
    fn sl2_splits() {
        let g = sl2();
        let ad_h = g.ad_matrix(&g.e("H"));
        assert_eq!(
            split_semisimple(&ad_h).unwrap(),
            SemisimpleSplit::Exact { e_part: Matrix::zeros(3, 3), h_part: ad_h.clone() }
        );
        let k = g.combination(&[("E", int(1)), ("F", int(-1))]);
        let ad_k = g.ad_matrix(&k);
        assert_eq!(ad_k.minimal_polynomial(), Poly::from_i64(&[0, 4, 0, 1]));
        assert_eq!(
            split_semisimple(&ad_k).unwrap(),
            SemisimpleSplit::Exact { e_part: ad_k.clone(), h_part: Matrix::zeros(3, 3) }
        );
        assert!(split_semisimple(&Matrix::zeros(2, 2)).unwrap().is_exact());
        assert_eq!(split_semisimple(&Matrix::from_i64(&[&[0, 1], &[0, 0]])), Err(JordanError::NotSemisimple));
    }

    #[test]
    fn mixed_block_exact_split() {
        // diag(3) ⊕ rotation generator: eigenvalues 3, ±i
        let m = Matrix::from_i64(&[&[3, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
        match split_semisimple(&m).unwrap() {
            SemisimpleSplit::Exact { e_part, h_part } => {
                assert_eq!(h_part, Matrix::from_i64(&[&[3, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
                assert_eq!(e_part, Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]));
            }
            other => panic!("expected exact split, got {other:?}"),
        }
    }

    #[test]
    fn loxodromic_block_needs_numeric_split() {
        // companion of t^2 - 2t + 2, eigenvalues 1 ± i
        let m = Matrix::from_i64(&[&[0, -2], &[1, 2]]);
        match split_semisimple(&m).unwrap() {
            SemisimpleSplit::Numeric { h_part, e_part, spectrum } => {
                assert_eq!(spectrum.len(), 2);
                assert!(spectrum.iter().all(|e| !e.imaginary && (e.re - 1.0).abs() < 1e-9));
                // real part is 1 on both eigenvalues, so h = I
                for i in 0..2 {
                    for j in 0..2 {
                        let id = if i == j { 1.0 } else { 0.0 };
                        assert!((h_part[i][j] - id).abs() < 1e-9);
                        assert!((e_part[i][j] + h_part[i][j] - to_f64(&m[(i, j)])).abs() < 1e-9);
                    }
                }
            }
            other => panic!("expected numeric split, got {other:?}"),
        }
        assert_eq!(
            classify_matrix(&m).unwrap(),
            ElementKind::Mixed(vec![Part::Elliptic, Part::Hyperbolic])
        );
    }

    #[test]
    fn numeric_split_certifies_imaginary_axis() {
        // eigenvalues ±√2 and ±i: (t^2 - 2)(t^2 + 1) = t^4 - t^2 - 2
        let m = Matrix::from_i64(&[&[0, 0, 0, 2], &[1, 0, 0, 0], &[0, 1, 0, 1], &[0, 0, 1, 0]]);
        assert_eq!(m.charpoly(), Poly::from_i64(&[-2, 0, -1, 0, 1]));
        match split_semisimple(&m).unwrap() {
            SemisimpleSplit::Numeric { spectrum, .. } => {
                assert_eq!(spectrum.iter().filter(|e| e.imaginary).count(), 2);
            }
            other => panic!("expected numeric split, got {other:?}"),
        }
    }

    #[test]
    fn sl2_element_types() {
        let g = sl2();
        let kind = |x: &Vector| classify_element(&g, x).unwrap().kind;
        assert_eq!(kind(&g.e("E")), ElementKind::Nilpotent);
        assert!(g.ad_matrix(&g.e("E")).pow(3).is_zero());
        assert_eq!(kind(&g.e("H")), ElementKind::Hyperbolic);
        assert_eq!(kind(&g.combination(&[("E", int(1)), ("F", int(-1))])), ElementKind::Elliptic);
        // the lower-triangular nilpotent matrix [[0,0],[1,0]] is F
        assert_eq!(kind(&g.e("F")), ElementKind::Nilpotent);
        assert_eq!(kind(&Vector::zero(3)), ElementKind::Central);
    }

    #[test]
    fn mixed_element_in_product() {
        let g = sl2_sl2();
        let x = g.combination(&[("H1", int(1)), ("E2", int(1))]);
        let c = classify_element(&g, &x).unwrap();
        assert_eq!(c.kind, ElementKind::Mixed(vec![Part::Hyperbolic, Part::Nilpotent]));
        let (xs, xn) = element_jordan_parts(&g, &x).unwrap();
        assert_eq!(xs, g.e("H1"));
        assert_eq!(xn, g.e("E2"));
    }

    #[test]
    fn adjoint_image_required() {
        // in aff(R), ad(X + Y) is semisimple, so the parts exist trivially
        let a = aff();
        let (xs, xn) = element_jordan_parts(&a, &a.combination(&[("X", int(1)), ("Y", int(1))])).unwrap();
        assert!(xn.is_zero());
        assert_eq!(xs, a.combination(&[("X", int(1)), ("Y", int(1))]));
    }
}
