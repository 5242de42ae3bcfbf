//! Spectral-geometry constants on H_n x R^k with tracked error bounds.
//!
//! The crate computes the explicit constants entering Weyl asymptotics,
//! sharp Sobolev/Gagliardo-Nirenberg inequalities, isoperimetric and
//! Faber-Krahn inequalities, and the resulting Pleijel-type nodal-count
//! bounds on Heisenberg-type groups, each as a binary64 estimate with a
//! propagated absolute error bound and a provenance route. Named
//! verification campaigns replay the reference numeric checks.

pub mod bound;
pub mod campaign;
pub mod error;
pub mod faberkrahn;
pub mod functional;
pub mod group;
pub mod isoperimetry;
pub mod pleijel;
pub mod quad;
pub mod report;
pub mod specfun;
pub mod table;
pub mod value;
pub mod weyl;

pub use bound::{Bound, Direction, Hypothesis, IsoValue, Quantity};
pub use campaign::{run_campaign, Campaign, CampaignName};
pub use error::{Error, Result};
pub use group::GroupSpec;
pub use report::{Cell, ReportTable, Status, VerificationRecord};
pub use table::{build_table, emit_table, render_campaign, render_table, Format, TableName};
pub use value::{Method, Value};
