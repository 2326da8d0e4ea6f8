//! Typed relations between requirement elements: endpoint typing,
//! derivations and structural checks.

mod derive;
mod edge;
mod index;
mod kind;
mod structure;
mod validate;

pub use derive::{derive_belongs, derive_shares, normalize_symmetry, refine_repeats};
pub(crate) use derive::{derive_shares_indexed, refine_repeats_indexed};
pub use edge::{Provenance, RelationEdge};
pub use index::{DocIndex, IndexedElement};
pub use kind::RelationKind;
pub(crate) use structure::check_structure_indexed;
pub use structure::{check_structure, StructureIssue};
pub use validate::{validate_edge, EdgeIssue};
