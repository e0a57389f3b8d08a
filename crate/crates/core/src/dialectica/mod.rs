//! The linear and Diller-Nahm dialectica transformations, as model-to-model
//! constructions: objects, morphisms, hom search, the full connective
//! table, the lifted linear-nonlinear adjunction, the endofunctor
//! factorisation of the exponential, and lifting of model morphisms.

mod functor;
mod intuitionistic;
pub mod lift;
mod linear;
mod morphism;
mod object;

pub use functor::lift_model_morphism;
pub use intuitionistic::{dial_intuitionistic, DialIntModel};
pub use lift::{
    adjunction_witness, dial_f_mor, dial_f_mor_int, dial_f_obj, endofunctor_a, endofunctor_b,
    linearisation_mor, linearisation_obj, multiplication_mor, multiplication_obj,
    strong_monoidality_witness, AdjunctionWitness,
};
pub use linear::{dial_linear, DialModel};
pub use morphism::{DialIntMorphism, DialMorphism};
pub use object::DialObject;
