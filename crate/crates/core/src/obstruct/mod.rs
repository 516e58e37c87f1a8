//! Obstruction criteria for compact manifolds locally modelled on `G/H`,
//! decided at the Lie algebra level.

mod criteria;
mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exterior::AltForm;
use crate::lie::{Covector, LieAlgebra, Subspace, Vector};
use crate::relcoh::RelativeComplex;
use crate::scalar::{format_scalar, Scalar};

pub use criteria::{
    check_coadjoint, check_hyperbolic_center, check_injectivity_obstruction, check_nonss_orbit,
    check_nonunimodular, check_trace_criterion, check_volume_obstruction,
};
pub use verify::{in_relative_complex, quotient_trace, verify_certificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Obstructed,
    Inconclusive,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Inapplicable => "INAPPLICABLE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CriterionId {
    #[serde(rename = "thm-main-1")]
    ThmMain1,
    #[serde(rename = "thm-main-2")]
    ThmMain2,
    #[serde(rename = "prop-trace-free")]
    PropTraceFree,
    #[serde(rename = "ex-coadjoint")]
    ExCoadjoint,
    #[serde(rename = "ex-nonunimodular")]
    ExNonunimodular,
    #[serde(rename = "ex-nonss-orbit")]
    ExNonssOrbit,
    #[serde(rename = "prop-hyperbolic-center")]
    PropHyperbolicCenter,
}

impl CriterionId {
    /// Fixed report order.
    pub const ALL: [CriterionId; 7] = [
        CriterionId::ThmMain1,
        CriterionId::ThmMain2,
        CriterionId::PropTraceFree,
        CriterionId::ExCoadjoint,
        CriterionId::ExNonunimodular,
        CriterionId::ExNonssOrbit,
        CriterionId::PropHyperbolicCenter,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CriterionId::ThmMain1 => "thm-main-1",
            CriterionId::ThmMain2 => "thm-main-2",
            CriterionId::PropTraceFree => "prop-trace-free",
            CriterionId::ExCoadjoint => "ex-coadjoint",
            CriterionId::ExNonunimodular => "ex-nonunimodular",
            CriterionId::ExNonssOrbit => "ex-nonss-orbit",
            CriterionId::PropHyperbolicCenter => "prop-hyperbolic-center",
        }
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown criterion `{0}`")]
pub struct UnknownCriterion(pub String);

impl FromStr for CriterionId {
    type Err = UnknownCriterion;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CriterionId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| UnknownCriterion(s.to_string()))
    }
}

/// Typed evidence behind an OBSTRUCTED verdict, re-checked by
/// [`verify_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A nonzero `top_form ∈ C^N(g, h)` equal to `d(primitive)` with
    /// `primitive ∈ C^{N-1}(g, k)`, `k ⊆ h`. With `k = h` this is criterion (1);
    /// otherwise the class of `top_form` lies in the kernel of `i`, or
    /// `H^N(g, h) = 0` and criterion (1) applies.
    Exactness { h: Subspace, k: Subspace, top_form: AltForm, primitive: AltForm },
    /// `h` acts trace-freely on `g/h` while `element ∈ n_g(h)` does not.
    Trace { h: Subspace, element: Vector, trace: Scalar },
    /// A nonzero hyperbolic element in the centre of a unimodular `h` inside
    /// a semisimple `g`.
    HyperbolicCenter { h: Subspace, element: Vector },
}

/// Result of one criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: CriterionId,
    pub verdict: Verdict,
    pub witness: BTreeMap<String, String>,
    pub diagnostics: BTreeMap<String, String>,
    pub caveats: Vec<String>,
    pub certificates: Vec<Certificate>,
}

impl CriterionOutcome {
    pub(crate) fn new(id: CriterionId, verdict: Verdict) -> Self {
        CriterionOutcome {
            id,
            verdict,
            witness: BTreeMap::new(),
            diagnostics: BTreeMap::new(),
            caveats: Vec::new(),
            certificates: Vec::new(),
        }
    }

    pub(crate) fn inapplicable(id: CriterionId, reason: impl Into<String>) -> Self {
        let mut out = CriterionOutcome::new(id, Verdict::Inapplicable);
        out.witness.insert("failed_precondition".into(), reason.into());
        out
    }

    pub fn fired(&self) -> bool {
        self.verdict == Verdict::Obstructed
    }

    pub(crate) fn with_witness(mut self, key: &str, value: impl Into<String>) -> Self {
        self.witness.insert(key.into(), value.into());
        self
    }

    pub(crate) fn with_diag(mut self, key: &str, value: impl Into<String>) -> Self {
        self.diagnostics.insert(key.into(), value.into());
        self
    }

    pub(crate) fn with_caveat(mut self, caveat: impl Into<String>) -> Self {
        self.caveats.push(caveat.into());
        self
    }

    /// Runs the independent checker on every certificate; an OBSTRUCTED
    /// verdict without a passing certificate is downgraded.
    pub(crate) fn verified(mut self, g: &LieAlgebra) -> Self {
        if self.verdict != Verdict::Obstructed {
            return self;
        }
        let failures: Vec<String> =
            self.certificates.iter().filter_map(|c| verify_certificate(g, c).err()).collect();
        if self.certificates.is_empty() || !failures.is_empty() {
            self.verdict = Verdict::Inconclusive;
            let reason = if failures.is_empty() { "no certificate".to_string() } else { failures.join("; ") };
            self.diagnostics.insert("certificate_rejected".into(), reason);
        } else {
            self.diagnostics.insert("certificate_verified".into(), "true".into());
        }
        self
    }
}

/// Optional data attached to a space `G/H`.
#[derive(Debug, Clone, Default)]
pub struct Auxiliary {
    pub compact: Option<Subspace>,
    pub functional: Option<Covector>,
    pub element: Option<Vector>,
    pub gprime: Option<Subspace>,
    pub solvable_mode: bool,
    /// Group-level hypotheses asserted by the user, echoed verbatim.
    pub group_assumptions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDescription {
    pub algebra: String,
    pub subalgebra: String,
    pub dim: usize,
    pub codim: usize,
    pub h_basis: Vec<String>,
    pub auxiliary: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub space: SpaceDescription,
    pub verdict: Verdict,
    pub criteria: Vec<CriterionOutcome>,
    pub caveats: Vec<String>,
    pub diagnostics: BTreeMap<String, String>,
}

impl ObstructionReport {
    pub fn firing(&self) -> Vec<CriterionId> {
        self.criteria.iter().filter(|c| c.fired()).map(|c| c.id).collect()
    }

    pub fn outcome(&self, id: CriterionId) -> Option<&CriterionOutcome> {
        self.criteria.iter().find(|c| c.id == id)
    }
}

pub(crate) fn join_vectors(g: &LieAlgebra, vs: &[Vector]) -> String {
    let items: Vec<String> = vs.iter().map(|v| g.format_vector(v)).collect();
    format!("span({})", items.join(", "))
}

fn describe(g: &LieAlgebra, h: &Subspace, aux: &Auxiliary) -> SpaceDescription {
    let mut auxiliary = BTreeMap::new();
    if let Some(k) = &aux.compact {
        auxiliary.insert("compact".into(), join_vectors(g, k.basis()));
    }
    if let Some(f) = &aux.functional {
        auxiliary.insert("functional".into(), g.format_covector(f));
    }
    if let Some(x) = &aux.element {
        auxiliary.insert("element".into(), g.format_vector(x));
    }
    if let Some(gp) = &aux.gprime {
        auxiliary.insert("gprime".into(), join_vectors(g, gp.basis()));
    }
    if aux.solvable_mode {
        auxiliary.insert("solvable_mode".into(), "true".into());
    }
    SpaceDescription {
        algebra: "g".into(),
        subalgebra: "h".into(),
        dim: g.dim(),
        codim: h.codim(),
        h_basis: h.basis().iter().map(|v| g.format_vector(v)).collect(),
        auxiliary,
    }
}

/// Table of quantities shared by the criteria: `N`, Betti numbers of the
/// pair, quotient traces and the normalizer.
pub fn pair_diagnostics(g: &LieAlgebra, h: &Subspace) -> BTreeMap<String, String> {
    let mut d = BTreeMap::new();
    d.insert("N".into(), h.codim().to_string());
    let c = g.classify();
    let class: Vec<&str> = [
        (c.solvable, "solvable"),
        (c.nilpotent, "nilpotent"),
        (c.semisimple, "semisimple"),
        (c.reductive, "reductive"),
    ]
    .into_iter()
    .filter_map(|(b, s)| b.then_some(s))
    .collect();
    d.insert("classification".into(), if class.is_empty() { "none".into() } else { class.join(",") });
    if g.closed(h.clone()).is_err() {
        return d;
    }
    let complex = RelativeComplex::new(g, h);
    let betti: Vec<String> = complex.betti_numbers().iter().map(usize::to_string).collect();
    d.insert("betti".into(), format!("({})", betti.join(",")));
    d.insert("top_invariant_dim".into(), complex.cochain_dim(h.codim()).to_string());
    let traces: Vec<String> = h
        .basis()
        .iter()
        .map(|b| format!("{}:{}", g.format_vector(b), format_scalar(&quotient_trace(g, b, h))))
        .collect();
    d.insert("h_traces".into(), traces.join(", "));
    let nz = g.normalizer(h);
    d.insert("normalizer".into(), join_vectors(g, nz.basis()));
    let n_traces: Vec<String> = nz
        .basis()
        .iter()
        .map(|b| format!("{}:{}", g.format_vector(b), format_scalar(&quotient_trace(g, b, h))))
        .collect();
    d.insert("normalizer_traces".into(), n_traces.join(", "));
    d
}

fn run_one(g: &LieAlgebra, h: &Subspace, aux: &Auxiliary, id: CriterionId) -> CriterionOutcome {
    match id {
        CriterionId::ThmMain1 => check_volume_obstruction(g, h),
        CriterionId::ThmMain2 => match &aux.compact {
            Some(k) => check_injectivity_obstruction(g, h, k),
            None => CriterionOutcome::inapplicable(id, "no compact subalgebra k supplied"),
        },
        CriterionId::PropTraceFree => check_trace_criterion(g, h),
        CriterionId::ExCoadjoint => match &aux.functional {
            None => CriterionOutcome::inapplicable(id, "no functional supplied"),
            Some(f) => {
                let stab = g.stabilizer_of_functional(f);
                if !stab.same_span(h) {
                    return CriterionOutcome::inapplicable(id, "h is not stab(F)");
                }
                let k = aux.compact.clone().unwrap_or_else(|| Subspace::zero(g.dim()));
                check_coadjoint(g, f, &k, aux.solvable_mode)
            }
        },
        CriterionId::ExNonunimodular => match &aux.gprime {
            Some(gp) => check_nonunimodular(g, gp, h),
            None => CriterionOutcome::inapplicable(id, "no subalgebra g' supplied"),
        },
        CriterionId::ExNonssOrbit => match &aux.element {
            None => CriterionOutcome::inapplicable(id, "no element supplied"),
            Some(x) => {
                let stab = g.stabilizer_of_element(x);
                if !stab.same_span(h) {
                    return CriterionOutcome::inapplicable(id, "h is not stab(X)");
                }
                let k = aux.compact.clone().unwrap_or_else(|| Subspace::zero(g.dim()));
                check_nonss_orbit(g, x, &k)
            }
        },
        CriterionId::PropHyperbolicCenter => check_hyperbolic_center(g, h, aux.compact.as_ref()),
    }
}

/// Runs the selected criteria (in parallel) and merges them in fixed order.
pub fn run_selected(g: &LieAlgebra, h: &Subspace, aux: &Auxiliary, ids: &[CriterionId]) -> ObstructionReport {
    let mut ids: Vec<CriterionId> = ids.to_vec();
    ids.sort();
    ids.dedup();
    let criteria: Vec<CriterionOutcome> = ids.par_iter().map(|&id| run_one(g, h, aux, id)).collect();
    let verdict = if criteria.iter().any(|c| c.verdict == Verdict::Obstructed) {
        Verdict::Obstructed
    } else if criteria.iter().any(|c| c.verdict == Verdict::Inconclusive) {
        Verdict::Inconclusive
    } else {
        Verdict::Inapplicable
    };
    let mut caveats: Vec<String> = Vec::new();
    if verdict == Verdict::Obstructed {
        caveats.push("algebra-level computation: H is assumed closed with finitely many connected components".into());
    }
    for c in &criteria {
        for cav in &c.caveats {
            if !caveats.contains(cav) {
                caveats.push(cav.clone());
            }
        }
    }
    caveats.extend(aux.group_assumptions.iter().map(|a| format!("asserted: {a}")));
    ObstructionReport {
        space: describe(g, h, aux),
        verdict,
        criteria,
        caveats,
        diagnostics: pair_diagnostics(g, h),
    }
}

pub fn run_all(g: &LieAlgebra, h: &Subspace, aux: &Auxiliary) -> ObstructionReport {
    run_selected(g, h, aux, &CriterionId::ALL)
}

#[cfg(test)]
mod tests;
