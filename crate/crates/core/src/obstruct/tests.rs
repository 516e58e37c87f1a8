use super::*;
use crate::lie::standard::*;
use crate::scalar::int;

fn span(g: &LieAlgebra, labels: &[&str]) -> Subspace {
    Subspace::new(g.dim(), labels.iter().map(|l| g.e(l)).collect()).unwrap()
}

fn so2(g: &LieAlgebra) -> Subspace {
    Subspace::new(3, vec![g.combination(&[("E", int(1)), ("F", int(-1))])]).unwrap()
}

#[test]
fn volume_examples() {
    let g = sl2();
    let out = check_volume_obstruction(&g, &span(&g, &["E"]));
    assert_eq!(out.verdict, Verdict::Obstructed);
    assert_eq!(out.witness["primitive"], "1/2*F*");
    assert_eq!(check_volume_obstruction(&g, &so2(&g)).verdict, Verdict::Inconclusive);
    let h = heis3();
    assert_eq!(check_volume_obstruction(&h, &Subspace::zero(3)).verdict, Verdict::Inconclusive);
    let a = aff();
    assert_eq!(check_volume_obstruction(&a, &Subspace::zero(2)).verdict, Verdict::Obstructed);
    let full = check_volume_obstruction(&a, &Subspace::full(2));
    assert_eq!(full.verdict, Verdict::Inapplicable);
    assert_eq!(full.witness["failed_precondition"], "codim(h) = 0");
}

#[test]
fn trace_examples() {
    let g = sl2();
    let out = check_trace_criterion(&g, &span(&g, &["E"]));
    assert_eq!(out.verdict, Verdict::Obstructed);
    assert_eq!(out.witness["normalizer_element"], "H");
    assert_eq!(out.witness["trace"], "-2");
    let a = aff();
    // ad X acts on g/span(Y) = span(X) by 0: tr_g(ad X) = 1 = tr_h(ad X)
    let out = check_trace_criterion(&a, &span(&a, &["Y"]));
    assert_eq!(out.verdict, Verdict::Inconclusive);
    assert_eq!(out.diagnostics["normalizer_trace_free"], "true");
    let out = check_trace_criterion(&a, &Subspace::zero(2));
    assert_eq!(out.verdict, Verdict::Obstructed);
    assert_eq!(out.witness["trace"], "1");
    assert_eq!(check_trace_criterion(&a, &span(&a, &["X"])).diagnostics["h_trace_free"], "false");
    let ab = LieAlgebra::abelian(4);
    assert_eq!(check_trace_criterion(&ab, &span(&ab, &["e1"])).verdict, Verdict::Inconclusive);
}

#[test]
fn injectivity_examples() {
    let g = sl2();
    let z = Subspace::zero(3);
    let out = check_injectivity_obstruction(&g, &span(&g, &["H"]), &z);
    assert_eq!(out.verdict, Verdict::Obstructed);
    assert!(out.caveats.iter().any(|c| c == "k maximality trusted"));
    assert_eq!(check_injectivity_obstruction(&g, &so2(&g), &so2(&g)).verdict, Verdict::Inconclusive);
    assert_eq!(check_injectivity_obstruction(&g, &span(&g, &["E"]), &z).verdict, Verdict::Inconclusive);
    let bad = check_injectivity_obstruction(&g, &span(&g, &["H"]), &span(&g, &["H"]));
    assert_eq!(bad.verdict, Verdict::Inapplicable);
}

#[test]
fn coadjoint_examples() {
    let a = aff();
    let z = Subspace::zero(2);
    let out = check_coadjoint(&a, &a.dual("Y"), &z, true);
    assert_eq!(out.verdict, Verdict::Obstructed);
    assert_eq!(out.diagnostics["m"], "1");
    let h = heis3();
    let out = check_coadjoint(&h, &h.dual("Z"), &Subspace::zero(3), false);
    assert_eq!(out.verdict, Verdict::Obstructed);
    assert_eq!(out.diagnostics["stab(F)"], "span(Z)");
    assert_eq!(check_coadjoint(&h, &Covector::zero(3), &Subspace::zero(3), false).verdict, Verdict::Inapplicable);
    // F = X* vanishes on [g,g] = span(Z): zero-dimensional orbit
    assert_eq!(check_coadjoint(&h, &h.dual("X"), &Subspace::zero(3), false).verdict, Verdict::Inapplicable);
    let g = sl2();
    assert_eq!(check_coadjoint(&g, &g.dual("E"), &so2(&g), false).verdict, Verdict::Inapplicable);
}

#[test]
fn coadjoint_elliptic_orbit_is_not_obstructed() {
    // F dual to E - F: stab = so(2) = k, and F(k) != 0 with k ⊆ [g,g]
    let g = sl2();
    let f = g.killing_dual(&g.combination(&[("E", int(1)), ("F", int(-1))])).unwrap();
    let out = check_coadjoint(&g, &f, &so2(&g), false);
    assert_eq!(out.verdict, Verdict::Inconclusive, "{out:?}");
}

#[test]
fn nonunimodular_examples() {
    let g = sl2_aff();
    let gp = span(&g, &["H", "E", "F"]);
    let h = Subspace::new(5, vec![g.combination(&[("E", int(1)), ("F", int(-1))])]).unwrap();
    let out = check_nonunimodular(&g, &gp, &h);
    assert_eq!(out.verdict, Verdict::Obstructed, "{out:?}");
    assert_eq!(out.witness["centralizer_element"], "X");
    let a = aff();
    assert_eq!(check_nonunimodular(&a, &Subspace::zero(2), &Subspace::zero(2)).verdict, Verdict::Obstructed);
    assert_eq!(check_nonunimodular(&a, &Subspace::full(2), &Subspace::full(2)).verdict, Verdict::Inapplicable);
    // g' = span(X): its centre acts with trace 1
    let out = check_nonunimodular(&a, &span(&a, &["X"]), &Subspace::zero(2));
    assert_eq!(out.verdict, Verdict::Inapplicable);
    assert_eq!(out.witness["failed_precondition"], "z(g') does not act trace-freely on g");
    let s = sl2();
    assert_eq!(check_nonunimodular(&s, &s.full_subalgebra(), &so2(&s)).verdict, Verdict::Inapplicable);
}

#[test]
fn nonss_orbit_examples() {
    let g = sl2();
    let out = check_nonss_orbit(&g, &g.e("E"), &Subspace::zero(3));
    assert_eq!(out.verdict, Verdict::Obstructed);
    assert!(out.witness["route"].starts_with("thm-main-1"));
    assert_eq!(check_nonss_orbit(&g, &g.e("H"), &Subspace::zero(3)).verdict, Verdict::Inapplicable);
    let gg = sl2_sl2();
    let x = gg.combination(&[("H1", int(1)), ("E2", int(1))]);
    let out = check_nonss_orbit(&gg, &x, &Subspace::zero(6));
    assert_eq!(out.verdict, Verdict::Obstructed, "{out:?}");
    assert_eq!(out.diagnostics["dim stab(X) < dim stab(X_ss)"], "2 < 4");
    assert_eq!(out.diagnostics["X_n"], "E2");
    assert_eq!(out.diagnostics["binomial_chain"], "true");
    assert_eq!(out.diagnostics["omega_ss^m"], "0");
    assert_eq!(out.certificates.len(), 2);
    assert!(out.witness["route"].contains("binomial chain"));
    assert_eq!(check_nonss_orbit(&aff(), &aff().e("Y"), &Subspace::zero(2)).verdict, Verdict::Inapplicable);
}

#[test]
fn hyperbolic_center_examples() {
    let g = sl2();
    let out = check_hyperbolic_center(&g, &span(&g, &["H"]), None);
    assert_eq!(out.verdict, Verdict::Obstructed);
    assert_eq!(out.witness["element"], "H");
    assert_eq!(out.witness["spectrum"], "{-2, 0, 2}");
    assert!(out.caveats.iter().any(|c| c.starts_with("external construction")));
    let direct = check_hyperbolic_center(&g, &span(&g, &["H"]), Some(&Subspace::zero(3)));
    assert!(direct.witness["route"].starts_with("thm-main-2"));
    let out = check_hyperbolic_center(&g, &so2(&g), None);
    assert_eq!(out.verdict, Verdict::Inconclusive);
    assert_eq!(out.diagnostics["hyperbolic_search"], "UNDETECTED");
    assert_eq!(check_hyperbolic_center(&g, &span(&g, &["E"]), None).verdict, Verdict::Inconclusive);
    assert_eq!(check_hyperbolic_center(&aff(), &Subspace::zero(2), None).verdict, Verdict::Inapplicable);
}

#[test]
fn run_all_examples() {
    let g = sl2();
    let report = run_all(&g, &span(&g, &["E"]), &Auxiliary::default());
    assert_eq!(report.verdict, Verdict::Obstructed);
    assert_eq!(report.firing(), vec![CriterionId::ThmMain1, CriterionId::PropTraceFree]);
    assert_eq!(report.diagnostics["betti"], "(1,0,0)");
    let aux = Auxiliary { compact: Some(so2(&g)), ..Default::default() };
    let report = run_all(&g, &so2(&g), &aux);
    assert_eq!(report.verdict, Verdict::Inconclusive);
    assert!(report.firing().is_empty());
    let a = aff();
    let report = run_all(&a, &Subspace::zero(2), &Auxiliary::default());
    assert!(report.firing().contains(&CriterionId::ThmMain1));
}

#[test]
fn tampered_certificates_are_rejected() {
    let g = sl2();
    let h = span(&g, &["E"]);
    let out = check_volume_obstruction(&g, &h);
    let Certificate::Exactness { h, k, top_form, primitive } = out.certificates[0].clone() else { panic!() };
    let bad = Certificate::Exactness { h: h.clone(), k: k.clone(), top_form: top_form.clone(), primitive: primitive.scale(&int(2)) };
    assert!(verify_certificate(&g, &bad).is_err());
    let bad = Certificate::Exactness { h: Subspace::zero(3), k, top_form, primitive };
    assert!(verify_certificate(&g, &bad).is_err());
    let bad = Certificate::Trace { h: h.clone(), element: g.e("E"), trace: int(0) };
    assert!(verify_certificate(&g, &bad).is_err());
    let bad = Certificate::HyperbolicCenter { h: so2(&g), element: so2(&g).basis()[0].clone() };
    assert!(verify_certificate(&g, &bad).is_err());
}
