//! Requirement categories, subcategories and statement-level concepts.

mod category;
mod classification;
pub mod crosswalk;
mod element;

pub use category::{Category, ConstraintNature, ConstraintSource, Slot, Subcategory, UnknownCategory};
pub use classification::{validate_classification, Classification, ClassificationIssue};
pub use crosswalk::{crosswalk_avl, crosswalk_wb, CrosswalkEntry, Scheme, UnknownLabel};
pub use element::{
    fold_term, is_heterogeneous, ElementId, Glossary, GlossaryEntry, NotationTag, RequirementElement, Walk,
};
