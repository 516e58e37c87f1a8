//! Certificate checking from first principles: only brackets, traces and the
//! exterior-algebra primitives are used, never the relative complex or the
//! criteria themselves.

use num::Zero;

use super::Certificate;
use crate::exterior::AltForm;
use crate::lie::{LieAlgebra, Subspace, Vector};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::{format_scalar, Scalar};

/// `ι(b)a = 0` and `L(b)a = 0` for every basis element `b` of `s`.
pub fn in_relative_complex(g: &LieAlgebra, s: &Subspace, a: &AltForm) -> bool {
    s.basis().iter().all(|b| a.interior(b).is_zero() && g.lie_derivative(b, a).is_zero())
}

/// `tr(ad_{g/h} y) = tr(ad_g y) - tr(ad_h y)` for `y` normalizing `h`,
/// with the restriction solved in the basis of `h`.
pub fn quotient_trace(g: &LieAlgebra, y: &Vector, h: &Subspace) -> Scalar {
    let mut inner = Scalar::zero();
    for (j, b) in h.basis().iter().enumerate() {
        let coords = h.coordinates(&g.bracket(y, b)).expect("element does not normalize h");
        inner += &coords[j];
    }
    g.trace_ad(y) - inner
}

fn normalizes(g: &LieAlgebra, y: &Vector, h: &Subspace) -> bool {
    h.basis().iter().all(|b| h.contains(&g.bracket(y, b)))
}

fn is_closed(g: &LieAlgebra, h: &Subspace) -> bool {
    h.basis().iter().all(|a| normalizes(g, a, h))
}

fn check(cond: bool, msg: &str) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg.to_string()) }
}

/// Re-checks a certificate from scratch.
pub fn verify_certificate(g: &LieAlgebra, cert: &Certificate) -> Result<(), String> {
    match cert {
        Certificate::Exactness { h, k, top_form, primitive } => {
            check(is_closed(g, h) && is_closed(g, k), "h or k is not a subalgebra")?;
            check(h.contains_subspace(k), "k is not contained in h")?;
            check(!top_form.is_zero(), "top form is zero")?;
            check(top_form.degree() == h.codim(), "top form does not have degree codim(h)")?;
            check(in_relative_complex(g, h, top_form), "top form is not in C(g,h)")?;
            check(
                primitive.is_zero() || primitive.degree() + 1 == top_form.degree(),
                "primitive has the wrong degree",
            )?;
            check(in_relative_complex(g, k, primitive), "primitive is not in C(g,k)")?;
            check(g.ce_diff(primitive) == *top_form, "d(primitive) differs from the top form")
        }
        Certificate::Trace { h, element, trace } => {
            check(is_closed(g, h), "h is not a subalgebra")?;
            check(h.codim() > 0, "h has codimension 0")?;
            for b in h.basis() {
                check(quotient_trace(g, b, h).is_zero(), "h does not act trace-freely on g/h")?;
            }
            check(normalizes(g, element, h), "witness does not normalize h")?;
            let t = quotient_trace(g, element, h);
            check(!t.is_zero(), "witness acts trace-freely on g/h")?;
            check(t == *trace, &format!("recorded trace {} differs from {}", format_scalar(trace), format_scalar(&t)))
        }
        Certificate::HyperbolicCenter { h, element } => {
            check(is_closed(g, h), "h is not a subalgebra")?;
            check(!g.killing_form().determinant().is_zero(), "g is not semisimple")?;
            check(!element.is_zero() && h.contains(element), "witness is zero or outside h")?;
            check(h.basis().iter().all(|b| g.bracket(element, b).is_zero()), "witness is not central in h")?;
            for b in h.basis() {
                let coords: Vec<Vec<Scalar>> = h
                    .basis()
                    .iter()
                    .map(|c| h.coordinates(&g.bracket(b, c)).expect("h is closed"))
                    .collect();
                let restricted = Matrix::from_columns(h.dim(), &coords);
                check(restricted.trace().is_zero(), "h is not unimodular")?;
            }
            let ad = g.ad_matrix(element);
            let minpoly: Poly = ad.minimal_polynomial();
            check(minpoly.is_squarefree(), "ad(witness) is not semisimple")?;
            check(minpoly.count_real_roots() == minpoly.degree(), "ad(witness) has non-real eigenvalues")?;
            check(minpoly.degree() > 1 || !ad.is_zero(), "ad(witness) vanishes")
        }
    }
}
