//! Built-in model spaces with the verdicts the engine is expected to reach.

use std::sync::Arc;

use crate::dsl::{elaborate, parse, CheckJob, Elaborated};
use crate::lie::{LieAlgebra, Subspace};
use crate::obstruct::{CriterionId, ObstructionReport, Verdict};

use CriterionId::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// The entry as a model file with exactly one `check` directive.
    pub source: &'static str,
    pub expected: Verdict,
    /// Criteria expected to return OBSTRUCTED, in report order.
    pub firing: &'static [CriterionId],
    pub provenance: &'static str,
    /// A compact manifold locally modelled on the space is known to exist.
    pub compact_form_known: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("UNKNOWN_ENTRY: no catalog entry named `{0}`")]
pub struct UnknownEntry(pub String);

impl CatalogEntry {
    pub fn document(&self) -> Elaborated {
        let doc = parse(self.source).unwrap_or_else(|e| panic!("catalog entry {}: {e}", self.name));
        elaborate(&doc).unwrap_or_else(|e| panic!("catalog entry {}: {e}", self.name))
    }

    pub fn job(&self) -> CheckJob {
        self.document().checks.into_iter().next().expect("catalog entries carry a check")
    }

    pub fn algebra(&self) -> Arc<LieAlgebra> {
        self.job().g
    }

    /// The distinguished subalgebras declared by the entry.
    pub fn subalgebras(&self) -> Vec<(String, Subspace)> {
        self.document().subalgebras.into_iter().map(|(n, _, s)| (n, s)).collect()
    }

    pub fn run(&self) -> ObstructionReport {
        self.job().run()
    }
}

macro_rules! entry {
    ($name:literal, $file:literal, $verdict:ident, [$($id:ident),*], $compact:literal, $prov:literal) => {
        CatalogEntry {
            name: $name,
            source: include_str!(concat!("../catalog/", $file)),
            expected: Verdict::$verdict,
            firing: &[$($id),*],
            provenance: $prov,
            compact_form_known: $compact,
        }
    };
}

static ENTRIES: &[CatalogEntry] = &[
    entry!("sl2/n", "sl2_n.lm", Obstructed, [ThmMain1, PropTraceFree], false,
        "G/N for the unipotent radical of a proper parabolic; smallest reductive case"),
    entry!("sl2/a", "sl2_a.lm", Obstructed, [ThmMain2, PropHyperbolicCenter], false,
        "split Cartan subgroup: unimodular H with a hyperbolic centre, maximal compact trivial"),
    entry!("sl2/so2", "sl2_so2.lm", Inconclusive, [], true,
        "hyperbolic plane; compact hyperbolic surfaces exist"),
    entry!("sl2/0", "sl2_0.lm", Inconclusive, [], true,
        "the group itself; quotients by cocompact lattices"),
    entry!("heis3/0", "heis3_0.lm", Inconclusive, [], true, "Heisenberg nilmanifolds"),
    entry!("heis3-coadjoint", "heis3_coadjoint.lm", Obstructed, [ExCoadjoint], false,
        "two-dimensional coadjoint orbit of the linear Heisenberg group"),
    entry!("heis3-nonlinear", "heis3_nonlinear.lm", Inconclusive, [], true,
        "the same orbit for the Heisenberg group modulo a discrete central subgroup; compact forms \
         exist but only the group level distinguishes this from heis3-coadjoint"),
    entry!("aff/0", "aff_0.lm", Obstructed, [ThmMain1, PropTraceFree], false,
        "the nonunimodular affine group of the line"),
    entry!("aff-coadjoint", "aff_coadjoint.lm", Obstructed, [ThmMain1, PropTraceFree, ExCoadjoint], false,
        "open coadjoint orbit of the affine group; its stabilizer is trivial"),
    entry!("su2/0", "su2_0.lm", Inconclusive, [], true, "compact group"),
    entry!("sl3/n1", "sl3_n1.lm", Obstructed, [ThmMain1, PropTraceFree], false,
        "nilradical of the maximal parabolic stabilizing a line"),
    entry!("sl3/n2", "sl3_n2.lm", Obstructed, [ThmMain1, PropTraceFree], false,
        "nilradical of the maximal parabolic stabilizing a plane"),
    entry!("sl3/n", "sl3_n.lm", Obstructed, [ThmMain1, PropTraceFree], false,
        "nilradical of the Borel subalgebra"),
    entry!("sl2xsl2-orbit", "sl2xsl2_orbit.lm", Obstructed,
        [ThmMain1, PropTraceFree, ExNonssOrbit, PropHyperbolicCenter], false,
        "adjoint orbit of the non-semisimple element H1 + E2"),
    entry!("sl2+aff/so2", "sl2aff_so2.lm", Obstructed, [ThmMain1, PropTraceFree, ExNonunimodular], false,
        "nonunimodular G = SL(2) x Aff(R) with H = SO(2) inside the reductive factor"),
    entry!("abelian4/0", "abelian4_0.lm", Inconclusive, [], true, "tori"),
];

pub fn catalog() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn catalog_get(name: &str) -> Result<&'static CatalogEntry, UnknownEntry> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| UnknownEntry(name.to_string()))
}
