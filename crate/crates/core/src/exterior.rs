//! Alternating forms on a Lie algebra, stored sparsely over the basis
//! `e^{i_1} ∧ … ∧ e^{i_p}` (`i_1 < … < i_p`) encoded as bit sets.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::lie::{Covector, LieAlgebra, Vector};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Sign of `e^A ∧ e^B` relative to `e^{A ∪ B}`; zero when the sets overlap.
pub fn wedge_sign(a: u32, b: u32) -> i32 {
    if a & b != 0 {
        return 0;
    }
    let mut crossings = 0;
    let mut rest = b;
    while rest != 0 {
        let k = rest.trailing_zeros();
        crossings += (a >> k).count_ones();
        rest &= rest - 1;
    }
    if crossings % 2 == 0 { 1 } else { -1 }
}

fn signed(sign: i32, c: &Scalar) -> Scalar {
    if sign > 0 { c.clone() } else { -c.clone() }
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(k)
    })
}

/// All `p`-subsets of `{0..n}` in lexicographic order of their index tuples.
pub fn basis_masks(n: usize, p: usize) -> Vec<u32> {
    fn go(start: usize, n: usize, left: usize, acc: u32, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..=n - left {
            go(i + 1, n, left - 1, acc | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    if p <= n {
        go(0, n, p, 0, &mut out);
    }
    out
}

#[derive(Clone)]
pub struct AltForm {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<u32, Scalar>,
}

/// Zero forms compare equal regardless of degree.
impl PartialEq for AltForm {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.coeffs == other.coeffs
            && (self.degree == other.degree || self.coeffs.is_empty())
    }
}

impl Eq for AltForm {}

impl std::hash::Hash for AltForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.coeffs.hash(state);
    }
}

impl AltForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        assert!(n <= 31, "exterior algebra limited to 31 generators");
        AltForm { n, degree, coeffs: BTreeMap::new() }
    }

    /// The constant function 1 in degree 0.
    pub fn one(n: usize) -> Self {
        AltForm::basis(n, 0)
    }

    pub fn basis(n: usize, mask: u32) -> Self {
        let mut f = AltForm::zero(n, mask.count_ones() as usize);
        f.coeffs.insert(mask, Scalar::one());
        f
    }

    /// `e^{i_1} ∧ … ∧ e^{i_p}` for indices in any order.
    pub fn monomial(n: usize, indices: &[usize]) -> Self {
        let mut f = AltForm::one(n);
        for &i in indices {
            f = f.wedge(&AltForm::basis(n, 1 << i));
        }
        f
    }

    pub fn from_covector(f: &Covector) -> Self {
        let n = f.dim();
        let mut out = AltForm::zero(n, 1);
        for (i, c) in f.0.iter().enumerate() {
            out.add_term(1 << i, c.clone());
        }
        out
    }

    pub fn to_covector(&self) -> Option<Covector> {
        (self.degree == 1).then(|| Covector((0..self.n).map(|i| self.coeff(1 << i)).collect()))
    }

    /// Two-form with `a(e_i, e_j) = m[i][j]` for an antisymmetric `m`.
    pub fn from_antisymmetric(m: &Matrix) -> Self {
        let n = m.rows();
        let mut out = AltForm::zero(n, 2);
        for i in 0..n {
            for j in i + 1..n {
                out.add_term((1 << i) | (1 << j), m[(i, j)].clone());
            }
        }
        out
    }

    pub fn from_terms(n: usize, degree: usize, terms: impl IntoIterator<Item = (u32, Scalar)>) -> Self {
        let mut out = AltForm::zero(n, degree);
        for (mask, c) in terms {
            assert_eq!(mask.count_ones() as usize, degree);
            out.add_term(mask, c);
        }
        out
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> Scalar {
        self.coeffs.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, mask: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(mask).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    fn check_compatible(&self, other: &AltForm) {
        assert_eq!(self.n, other.n, "forms live on different algebras");
    }

    pub fn add(&self, other: &AltForm) -> AltForm {
        self.check_compatible(other);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AltForm) -> AltForm {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> AltForm {
        if s.is_zero() {
            return AltForm::zero(self.n, self.degree);
        }
        AltForm {
            n: self.n,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn wedge(&self, other: &AltForm) -> AltForm {
        self.check_compatible(other);
        let degree = self.degree + other.degree;
        let mut out = AltForm::zero(self.n, degree);
        if degree > self.n {
            return out;
        }
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let s = wedge_sign(*a, *b);
                if s != 0 {
                    out.add_term(a | b, signed(s, &(ca * cb)));
                }
            }
        }
        out
    }

    /// `m`-fold wedge power; the zeroth power is the constant 1.
    pub fn power(&self, m: usize) -> AltForm {
        let mut out = AltForm::one(self.n);
        for _ in 0..m {
            if out.is_zero() {
                break;
            }
            out = out.wedge(self);
        }
        out
    }

    /// Interior product `ι(y)`, inserting `y` into the first slot.
    pub fn interior(&self, y: &Vector) -> AltForm {
        assert_eq!(y.dim(), self.n);
        if self.degree == 0 {
            return AltForm::zero(self.n, 0);
        }
        let mut out = AltForm::zero(self.n, self.degree - 1);
        for (mask, c) in &self.coeffs {
            for k in bits(*mask) {
                let yk = &y.0[k];
                if yk.is_zero() {
                    continue;
                }
                let below = (mask & ((1u32 << k) - 1)).count_ones();
                let term = c * yk;
                out.add_term(mask & !(1 << k), if below.is_multiple_of(2) { term } else { -term });
            }
        }
        out
    }

    /// Value on the given vectors, via the determinant convention
    /// `e^I(v_1, …, v_p) = det[e^{i_r}(v_s)]`.
    pub fn evaluate(&self, vectors: &[Vector]) -> Scalar {
        assert_eq!(vectors.len(), self.degree);
        let mut total = Scalar::zero();
        for (mask, c) in &self.coeffs {
            let idx: Vec<usize> = bits(*mask).collect();
            let rows: Vec<Vec<Scalar>> =
                idx.iter().map(|&i| vectors.iter().map(|v| v.0[i].clone()).collect()).collect();
            let det = if rows.is_empty() { Scalar::one() } else { Matrix::from_rows(rows).determinant() };
            total += c * det;
        }
        total
    }

    /// Dense coordinates over `basis_masks(n, degree)`.
    pub fn to_dense(&self, index: &BasisIndex) -> Vec<Scalar> {
        assert_eq!(index.degree, self.degree);
        let mut v = vec![Scalar::zero(); index.masks.len()];
        for (m, c) in &self.coeffs {
            v[index.position(*m)] = c.clone();
        }
        v
    }

    pub fn from_dense(n: usize, index: &BasisIndex, coords: &[Scalar]) -> AltForm {
        AltForm::from_terms(n, index.degree, index.masks.iter().copied().zip(coords.iter().cloned()))
    }

    /// Text using the algebra's labels, e.g. `2*X*^Y* - Z*^Y*`.
    pub fn format(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (mask, c)) in self.coeffs.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let name = if *mask == 0 {
                String::new()
            } else {
                bits(*mask).map(|k| format!("{}*", labels[k])).collect::<Vec<_>>().join("^")
            };
            match (abs.is_one(), name.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&name),
                (false, true) => out.push_str(&abs.to_string()),
                (false, false) => out.push_str(&format!("{abs}*{name}")),
            }
        }
        out
    }
}

impl fmt::Debug for AltForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (1..=self.n).map(|i| format!("e{i}")).collect();
        write!(f, "AltForm[{}]({})", self.degree, self.format(&labels))
    }
}

/// Position lookup for the lexicographic basis of one degree.
#[derive(Debug, Clone)]
pub struct BasisIndex {
    pub degree: usize,
    pub masks: Vec<u32>,
    positions: std::collections::HashMap<u32, usize>,
}

impl BasisIndex {
    pub fn new(n: usize, degree: usize) -> Self {
        let masks = basis_masks(n, degree);
        let positions = masks.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        BasisIndex { degree, masks, positions }
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn position(&self, mask: u32) -> usize {
        self.positions[&mask]
    }
}

impl LieAlgebra {
    /// `d(e^k) = -Σ_{i<j} c_ij^k e^i ∧ e^j`.
    fn dual_differentials(&self) -> Vec<Vec<(u32, Scalar)>> {
        let n = self.dim();
        (0..n)
            .map(|k| {
                let mut terms = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        let c = self.structure_constant(i, j, k);
                        if !c.is_zero() {
                            terms.push(((1u32 << i) | (1 << j), -c.clone()));
                        }
                    }
                }
                terms
            })
            .collect()
    }

    /// Chevalley–Eilenberg differential with trivial coefficients,
    /// `(da)(x_0..x_p) = Σ_{i<j} (-1)^{i+j} a([x_i,x_j], x_0..^i..^j..x_p)`.
    pub fn ce_diff(&self, a: &AltForm) -> AltForm {
        assert_eq!(a.ambient_dim(), self.dim());
        let de = self.dual_differentials();
        let mut out = AltForm::zero(self.dim(), a.degree() + 1);
        for (mask, c) in a.terms() {
            for (r, k) in bits(mask).enumerate() {
                let left = mask & ((1u32 << k) - 1);
                let right = mask & !((1u32 << (k + 1)) - 1);
                let parity = if r % 2 == 0 { 1 } else { -1 };
                for (pair, cij) in &de[k] {
                    let s1 = wedge_sign(left, *pair);
                    if s1 == 0 {
                        continue;
                    }
                    let s2 = wedge_sign(left | pair, right);
                    if s2 == 0 {
                        continue;
                    }
                    out.add_term(left | pair | right, signed(parity * s1 * s2, &(c * cij)));
                }
            }
        }
        out
    }

    /// Coadjoint-type action `(L(x)a)(y_1..y_p) = -Σ a(.., [x,y_i], ..)`.
    pub fn lie_derivative(&self, x: &Vector, a: &AltForm) -> AltForm {
        assert_eq!(a.ambient_dim(), self.dim());
        let ad = self.ad_matrix(x);
        let n = self.dim();
        let mut out = AltForm::zero(n, a.degree());
        for (mask, c) in a.terms() {
            for i in bits(mask) {
                let left = mask & ((1u32 << i) - 1);
                let right = mask & !((1u32 << (i + 1)) - 1);
                let rest = left | right;
                // L(x) e^i = -Σ_j (ad x)_{ij} e^j
                for j in 0..n {
                    let aij = &ad[(i, j)];
                    if aij.is_zero() || rest & (1 << j) != 0 {
                        continue;
                    }
                    let s = wedge_sign(left, 1 << j) * wedge_sign(left | (1 << j), right);
                    out.add_term(rest | (1 << j), signed(-s, &(c * aij)));
                }
            }
        }
        out
    }

    /// The 2-form `dF`, i.e. `ω(X, Y) = -<F, [X, Y]>`.
    pub fn kks_form(&self, f: &Covector) -> AltForm {
        self.ce_diff(&AltForm::from_covector(f))
    }

    /// `e^1 ∧ … ∧ e^n`.
    pub fn volume_form(&self) -> AltForm {
        AltForm::basis(self.dim(), ((1u64 << self.dim()) - 1) as u32)
    }

    pub fn format_form(&self, a: &AltForm) -> String {
        a.format(self.labels())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::standard::*;
    use crate::scalar::{frac, int};
    use proptest::prelude::*;

    fn form(g: &LieAlgebra, text: &[(&[&str], i64)]) -> AltForm {
        let mut out: Option<AltForm> = None;
        for (labels, c) in text {
            let idx: Vec<usize> = labels.iter().map(|l| g.index_of(l).unwrap()).collect();
            let term = AltForm::monomial(g.dim(), &idx).scale(&int(*c));
            out = Some(match out {
                None => term,
                Some(o) => o.add(&term),
            });
        }
        out.unwrap()
    }

    /// Direct evaluation of the defining formula of `d`.
    fn ce_diff_by_evaluation(g: &LieAlgebra, a: &AltForm) -> AltForm {
        let n = g.dim();
        let p = a.degree() + 1;
        let terms = basis_masks(n, p).into_iter().map(|mask| {
            let xs: Vec<Vector> = bits(mask).map(|k| Vector::basis(n, k)).collect();
            let mut v = Scalar::zero();
            for i in 0..p {
                for j in i + 1..p {
                    let mut args = vec![g.bracket(&xs[i], &xs[j])];
                    args.extend(xs.iter().enumerate().filter(|(r, _)| *r != i && *r != j).map(|(_, x)| x.clone()));
                    let val = a.evaluate(&args);
                    if (i + j) % 2 == 0 { v += val } else { v -= val }
                }
            }
            (mask, v)
        });
        AltForm::from_terms(n, p, terms)
    }

    fn lie_derivative_by_evaluation(g: &LieAlgebra, x: &Vector, a: &AltForm) -> AltForm {
        let n = g.dim();
        let p = a.degree();
        let terms = basis_masks(n, p).into_iter().map(|mask| {
            let ys: Vec<Vector> = bits(mask).map(|k| Vector::basis(n, k)).collect();
            let mut v = Scalar::zero();
            for i in 0..p {
                let mut args = ys.clone();
                args[i] = g.bracket(x, &ys[i]);
                v -= a.evaluate(&args);
            }
            (mask, v)
        });
        AltForm::from_terms(n, p, terms)
    }

    #[test]
    fn wedge_examples() {
        let g = aff();
        let e1 = form(&g, &[(&["X"], 1)]);
        let e2 = form(&g, &[(&["Y"], 1)]);
        assert_eq!(e1.wedge(&e2), AltForm::basis(2, 0b11));
        assert!(e1.wedge(&e1).is_zero());
        let a = form(&g, &[(&["X"], 1), (&["Y"], 1)]);
        let b = form(&g, &[(&["X"], 1), (&["Y"], -1)]);
        assert_eq!(a.wedge(&b), form(&g, &[(&["X", "Y"], -2)]));
        assert_eq!(e2.wedge(&e1), form(&g, &[(&["X", "Y"], -1)]));
    }

    #[test]
    fn interior_examples() {
        let g = sl2();
        let vol = g.volume_form();
        assert_eq!(vol.interior(&g.e("H")), form(&g, &[(&["E", "F"], 1)]));
        assert_eq!(vol.interior(&g.e("E")), form(&g, &[(&["H", "F"], -1)]));
        let y = g.combination(&[("H", int(2)), ("F", frac(1, 3))]);
        assert!(vol.interior(&y).interior(&y).is_zero());
        assert!(AltForm::one(3).interior(&y).is_zero());
    }

    #[test]
    fn differential_examples() {
        let g = aff();
        assert_eq!(g.ce_diff(&form(&g, &[(&["Y"], 1)])), form(&g, &[(&["X", "Y"], -1)]));
        assert!(g.ce_diff(&form(&g, &[(&["X"], 1)])).is_zero());
        let h = heis3();
        assert_eq!(h.ce_diff(&form(&h, &[(&["Z"], 1)])), form(&h, &[(&["X", "Y"], -1)]));
        assert!(h.ce_diff(&form(&h, &[(&["X"], 1)])).is_zero());
        assert!(h.ce_diff(&form(&h, &[(&["Y"], 1)])).is_zero());
        let ab = LieAlgebra::abelian(4);
        assert!(ab.ce_diff(&AltForm::monomial(4, &[0, 2])).is_zero());
    }

    #[test]
    fn lie_derivative_examples() {
        let g = aff();
        let top = g.volume_form();
        assert_eq!(g.lie_derivative(&g.e("X"), &top), top.scale(&int(-1)));
        let ab = LieAlgebra::abelian(3);
        assert!(ab.lie_derivative(&Vector::from_i64(&[1, 2, 3]), &AltForm::monomial(3, &[1])).is_zero());
        // sl2 relative to span(E): L(E) ι(F) Φ = ι([E,F]) Φ + ι(F) L(E) Φ and L(E)Φ = 0 for Φ = H*^F*
        let s = sl2();
        let phi = form(&s, &[(&["H", "F"], 1)]);
        let lhs = s.lie_derivative(&s.e("E"), &phi.interior(&s.e("F")));
        assert!(s.lie_derivative(&s.e("E"), &phi).is_zero());
        assert_eq!(lhs, phi.interior(&s.e("H")));
    }

    #[test]
    fn powers() {
        let g = aff();
        let omega = g.kks_form(&g.dual("Y"));
        assert_eq!(omega, form(&g, &[(&["X", "Y"], -1)]));
        assert_eq!(omega.power(1), omega);
        assert!(omega.power(2).is_zero());
        assert_eq!(omega.power(0), AltForm::one(2));
        let w = AltForm::monomial(4, &[0, 1]).add(&AltForm::monomial(4, &[2, 3]));
        assert_eq!(w.power(2), AltForm::monomial(4, &[0, 1, 2, 3]).scale(&int(2)));
    }

    #[test]
    fn kks_form_matches_stabilizer_matrix() {
        let g = sl3();
        let f = Covector::from_i64(&[1, 0, 2, -1, 0, 3, 0, 1]);
        let omega = g.kks_form(&f);
        let direct = AltForm::from_antisymmetric(&g.kks_matrix(&f));
        assert_eq!(omega, direct);
    }

    #[test]
    fn evaluation_oracle_agrees_on_basis_forms() {
        for g in [sl2(), heis3(), aff(), su2(), sl2_aff(), sl3()] {
            let n = g.dim();
            for p in 0..=n.min(4) {
                for mask in basis_masks(n, p) {
                    let a = AltForm::basis(n, mask);
                    let d = g.ce_diff(&a);
                    assert_eq!(d, ce_diff_by_evaluation(&g, &a));
                    assert!(g.ce_diff(&d).is_zero());
                }
            }
            for i in 0..n {
                let x = Vector::basis(n, i);
                let a = AltForm::basis(n, 0b101 & ((1 << n) - 1));
                assert_eq!(g.lie_derivative(&x, &a), lie_derivative_by_evaluation(&g, &x, &a));
            }
        }
    }

    #[test]
    fn basis_enumeration() {
        assert_eq!(basis_masks(4, 2), vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(basis_masks(3, 0), vec![0]);
        assert!(basis_masks(2, 3).is_empty());
        let idx = BasisIndex::new(5, 3);
        assert_eq!(idx.len(), 10);
        let a = AltForm::monomial(5, &[4, 0, 2]);
        assert_eq!(AltForm::from_dense(5, &idx, &a.to_dense(&idx)), a);
    }

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        (-4i64..=4, 1i64..=3).prop_map(|(a, b)| frac(a, b))
    }

    fn random_form(n: usize, p: usize) -> impl Strategy<Value = AltForm> {
        let masks = basis_masks(n, p);
        proptest::collection::vec(small_scalar(), masks.len())
            .prop_map(move |cs| AltForm::from_terms(n, p, masks.clone().into_iter().zip(cs)))
    }

    fn random_vector(n: usize) -> impl Strategy<Value = Vector> {
        proptest::collection::vec(small_scalar(), n).prop_map(Vector)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn cartan_formula((a, x) in (0usize..=4).prop_flat_map(|p| (random_form(5, p), random_vector(5)))) {
            let g = sl2_aff();
            let lhs = g.lie_derivative(&x, &a);
            let rhs = g.ce_diff(&a.interior(&x)).add(&g.ce_diff(&a).interior(&x));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn commutation_and_equivariance(a in random_form(5, 3), x in random_vector(5), y in random_vector(5)) {
            let g = sl2_aff();
            let lhs = g.lie_derivative(&x, &a.interior(&y)).sub(&g.lie_derivative(&x, &a).interior(&y));
            prop_assert_eq!(lhs, a.interior(&g.bracket(&x, &y)));
            let ld = g.lie_derivative(&x, &g.ce_diff(&a));
            prop_assert_eq!(ld, g.ce_diff(&g.lie_derivative(&x, &a)));
        }

        #[test]
        fn derivation_laws(a in random_form(5, 2), b in random_form(5, 1), y in random_vector(5)) {
            let g = sl2_aff();
            let lhs = g.ce_diff(&a.wedge(&b));
            let rhs = g.ce_diff(&a).wedge(&b).add(&a.wedge(&g.ce_diff(&b)));
            prop_assert_eq!(lhs, rhs);
            let lhs = a.wedge(&b).interior(&y);
            let rhs = a.interior(&y).wedge(&b).add(&a.wedge(&b.interior(&y)));
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(a.wedge(&b), b.wedge(&a));
        }

        #[test]
        fn graded_commutativity(a in random_form(6, 3), b in random_form(6, 1)) {
            prop_assert_eq!(a.wedge(&b), b.wedge(&a).scale(&int(-1)));
            prop_assert!(b.wedge(&b).is_zero());
        }

        #[test]
        fn interior_matches_evaluation(a in random_form(4, 3), y in random_vector(4), u in random_vector(4), v in random_vector(4)) {
            prop_assert_eq!(a.interior(&y).evaluate(&[u.clone(), v.clone()]), a.evaluate(&[y, u, v]));
        }
    }
}
