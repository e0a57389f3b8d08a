//! Effective finite sets: the substrate every index set in the dialectica
//! construction lives in.
//!
//! Provides symbolic element values, enumerated sets with decidable
//! membership (products, coproducts, function spaces, dependent sums and
//! products, bounded multiset spaces), total finite functions, and the
//! finite multiset monad.

mod func;
mod multiset;
mod set;
mod value;

pub use func::{FiniteFunction, TotalMap};
pub use multiset::{
    multiset_bind, multiset_pair_to_sum, multiset_sum_to_pair, Multiset,
};
pub use set::{EffectiveSet, Limits};
pub use value::Value;
