//! Abstract model interface (a *-autonomous category with optional finite
//! products and a linear-nonlinear adjunction), concrete posetal instances,
//! and exhaustive law checking.

mod cat;
mod laws;
mod lineale;
mod morphism;

pub use cat::{CartesianCategory, Category, Model};
pub use laws::{check_model_laws, check_suite, find_iso, sample_tuples, LawReport, LawResult, LawSuite};
pub use lineale::{
    boolean_lineale, load_finite_lineale, load_finite_lineale_unchecked, LMor, Lineale, Poset,
};
pub use morphism::{
    check_model_morphism, identity_model_morphism, lineale_morphism, ModelMorphism,
};
