use std::collections::BTreeMap;
use std::fmt;

use crate::dialectica::DialObject;
use crate::error::{Error, Result};
use crate::finset::{FiniteFunction, TotalMap, Value};

/// A morphism of the linear dialectica category: a triple `(f, g, α)` with
/// `f : wit(src) → wit(dst)`, `g : cowit(dst) → cowit(src)` and a family of
/// base morphisms `α_{x,v} : src(x, g v) → dst(f x, v)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DialMorphism<O, M> {
    pub src: DialObject<O>,
    pub dst: DialObject<O>,
    pub fwd: FiniteFunction,
    pub bwd: FiniteFunction,
    pub alpha: TotalMap<(Value, Value), M>,
}

impl<O: fmt::Debug, M: fmt::Debug> fmt::Debug for DialMorphism<O, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(f={:?}, g={:?}, α={:?})", self.fwd, self.bwd, self.alpha)
    }
}

impl<O, M> DialMorphism<O, M>
where
    O: Clone + Eq + Ord + Send + Sync + 'static,
    M: Clone + Eq + Ord + Send + Sync + 'static,
{
    pub fn new(
        src: DialObject<O>,
        dst: DialObject<O>,
        fwd: FiniteFunction,
        bwd: FiniteFunction,
        alpha: BTreeMap<(Value, Value), M>,
    ) -> Self {
        DialMorphism { src, dst, fwd, bwd, alpha: TotalMap::new(alpha) }
    }

    /// Component lookup on the enumerated grid, falling through to the
    /// extension rule when present.
    pub fn alpha_get(&self, x: &Value, v: &Value) -> Option<M> {
        self.alpha.get(&(x.clone(), v.clone()))
    }

    /// The strategy component at a pair of bids; errors when the component
    /// is neither tabulated nor recoverable from the extension.
    pub fn alpha_at(&self, x: &Value, v: &Value) -> Result<M> {
        self.alpha_get(x, v).ok_or_else(|| {
            Error::eval(format!("morphism has no strategy component at ({x},{v})"))
        })
    }
}

/// A morphism of the Diller-Nahm category: `f : X → U`,
/// `g : X × V → Y*` (counter-moves are finite multisets) and
/// `α_{x,v} : Π_{y ∈ g(x,v)} src(x,y) → dst(f x, v)` in the cartesian base.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DialIntMorphism<O, M> {
    pub src: DialObject<O>,
    pub dst: DialObject<O>,
    pub fwd: FiniteFunction,
    /// Keyed by the pair `(x, v)`; values are bag values over `cowit(src)`.
    pub bwd: TotalMap<(Value, Value), Value>,
    pub alpha: TotalMap<(Value, Value), M>,
}

impl<O: fmt::Debug, M: fmt::Debug> fmt::Debug for DialIntMorphism<O, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(f={:?}, g={:?}, α={:?})", self.fwd, self.bwd, self.alpha)
    }
}

impl<O, M> DialIntMorphism<O, M>
where
    O: Clone + Eq + Ord + Send + Sync + 'static,
    M: Clone + Eq + Ord + Send + Sync + 'static,
{
    pub fn bwd_at(&self, x: &Value, v: &Value) -> Result<Value> {
        self.bwd
            .get(&(x.clone(), v.clone()))
            .ok_or_else(|| Error::eval(format!("morphism has no counter-move at ({x},{v})")))
    }

    pub fn alpha_at(&self, x: &Value, v: &Value) -> Result<M> {
        self.alpha.get(&(x.clone(), v.clone())).ok_or_else(|| {
            Error::eval(format!("morphism has no strategy component at ({x},{v})"))
        })
    }
}
