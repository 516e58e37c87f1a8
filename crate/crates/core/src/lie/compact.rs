use serde::{Deserialize, Serialize};

use super::{LieAlgebra, Subspace};
use crate::jordan::classify_matrix;

/// Outcome of the necessary-condition test for a compactly embedded
/// subalgebra. Maximality is never checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactEmbeddingCheck {
    pub passed: bool,
    pub diagnostics: Vec<String>,
}

impl LieAlgebra {
    /// Every basis element of `k` must be elliptic and the Killing form of
    /// `g` restricted to `k` negative semidefinite.
    pub fn verify_compactly_embedded(&self, k: &Subspace) -> CompactEmbeddingCheck {
        let mut diagnostics = Vec::new();
        for b in k.basis() {
            match classify_matrix(&self.ad_matrix(b)) {
                Ok(kind) if kind.is_elliptic() => {}
                Ok(kind) => diagnostics.push(format!(
                    "{} is not elliptic (type {kind:?})",
                    self.format_vector(b)
                )),
                Err(e) => diagnostics.push(format!("{}: {e}", self.format_vector(b))),
            }
        }
        if k.dim() > 0 {
            let km = k.matrix();
            let restricted = km.transpose().mul(&self.killing_form()).mul(&km);
            let (pos, _, _) = restricted.inertia();
            if pos > 0 {
                diagnostics.push(format!(
                    "Killing form restricted to k has {pos} positive direction(s)"
                ));
            }
        }
        CompactEmbeddingCheck { passed: diagnostics.is_empty(), diagnostics }
    }
}

#[cfg(test)]
mod tests {
    use crate::lie::standard::*;
    use crate::lie::Subspace;
    use crate::scalar::int;

    #[test]
    fn sl2_compact_candidates() {
        let g = sl2();
        let so2 = Subspace::new(3, vec![g.combination(&[("E", int(1)), ("F", int(-1))])]).unwrap();
        assert!(g.verify_compactly_embedded(&so2).passed);
        assert_eq!(g.killing(&so2.basis()[0], &so2.basis()[0]), int(-8));
        let a = Subspace::new(3, vec![g.e("H")]).unwrap();
        let check = g.verify_compactly_embedded(&a);
        assert!(!check.passed);
        assert!(check.diagnostics[0].contains("not elliptic"));
        assert!(g.verify_compactly_embedded(&Subspace::zero(3)).passed);
    }

    #[test]
    fn su2_is_compact() {
        let g = su2();
        assert!(g.verify_compactly_embedded(&Subspace::full(3)).passed);
    }
}
