mod common;

use locmod::lie::standard;
use locmod::scalar::frac;
use locmod::{AltForm, LieAlgebra, RelativeComplex, Subspace, Vector};
use proptest::prelude::*;

fn algebras() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("sl2", standard::sl2()),
        ("heis3", standard::heis3()),
        ("aff", standard::aff()),
        ("su2", standard::su2()),
        ("abelian3", LieAlgebra::abelian(3)),
        ("sl2aff", standard::sl2_aff()),
    ]
}

#[test]
fn absolute_betti_numbers_match_the_rank_oracle() {
    for (name, g) in algebras() {
        let lib = RelativeComplex::new(&g, &Subspace::zero(g.dim())).betti_numbers();
        assert_eq!(lib, common::betti(&g), "{name}");
    }
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec((-3i64..=3, 1i64..=2), n)
        .prop_map(|v| Vector(v.into_iter().map(|(a, b)| frac(a, b)).collect()))
}

fn form(n: usize, p: usize) -> impl Strategy<Value = AltForm> {
    let masks = locmod::exterior::basis_masks(n, p);
    prop::collection::vec((prop::sample::select(masks), -3i64..=3), 1..4)
        .prop_map(move |terms| AltForm::from_terms(n, p, terms.into_iter().map(|(m, c)| (m, frac(c, 1)))))
}

fn case() -> impl Strategy<Value = (usize, AltForm, Vec<Vector>, Vector)> {
    (0usize..6, 0usize..5).prop_flat_map(|(which, p)| {
        let n = algebras()[which].1.dim();
        let p = p.min(n - 1);
        (Just(which), form(n, p), prop::collection::vec(vector(n), p + 1), vector(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn differential_matches_its_evaluation_formula((which, a, ys, _) in case()) {
        let g = &algebras()[which].1;
        prop_assert_eq!(g.ce_diff(&a).evaluate(&ys), common::d_eval(g, &a, &ys));
    }

    #[test]
    fn lie_derivative_matches_its_evaluation_formula((which, a, ys, x) in case()) {
        let g = &algebras()[which].1;
        let p = a.degree();
        prop_assert_eq!(g.lie_derivative(&x, &a).evaluate(&ys[..p]), common::lie_derivative_eval(g, &x, &a, &ys[..p]));
    }

    #[test]
    fn quotient_trace_on_lines(v in vector(5), c in -3i64..=3) {
        // ad v preserves span(v), so the quotient trace is defined
        let g = standard::sl2_aff();
        prop_assume!(!v.is_zero());
        let h = Subspace::spanned_by(5, [v.clone()]);
        let y = v.scale(&frac(c, 1));
        prop_assert_eq!(g.trace_on_quotient(&y, &h).unwrap(), common::quotient_trace(&g, &y, &h));
    }
}
