//! Exact computation of the cohomological obstructions to compact manifolds
//! locally modelled on a homogeneous space `G/H`, at the Lie algebra level.

pub mod catalog;
pub mod dsl;
pub mod exterior;
pub mod jordan;
pub mod lie;
pub mod matrix;
pub mod obstruct;
pub mod poly;
pub mod relcoh;
pub mod report;
pub mod scalar;

pub use exterior::AltForm;
pub use lie::{Covector, LieAlgebra, LieError, Subalgebra, Subspace, Vector};
pub use matrix::Matrix;
pub use poly::Poly;
pub use scalar::Scalar;
pub use catalog::{catalog, catalog_get, CatalogEntry};
pub use dsl::{DslError, Pos};
pub use obstruct::{run_all, run_selected, Auxiliary, CriterionId, ObstructionReport, Verdict};
pub use relcoh::RelativeComplex;
pub use report::{emit_report, Format, ReportDoc};
