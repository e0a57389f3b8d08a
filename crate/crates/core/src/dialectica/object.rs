use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finset::{EffectiveSet, TotalMap, Value};

/// A double-indexed family of base-model objects: witness set `X`,
/// counter-witness set `Y`, and an object of the base for every pair of
/// bids. The game reading: Eloise and Abelard bid simultaneously, and the
/// pair of bids selects the residual game.
///
/// Invariant: the two index sets are not both empty, and the family is
/// total on the enumerated index grid.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DialObject<O> {
    wit: EffectiveSet,
    cowit: EffectiveSet,
    fam: TotalMap<(Value, Value), O>,
}

impl<O: fmt::Debug> fmt::Debug for DialObject<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨wit={:?} cowit={:?} fam={{", self.wit, self.cowit)?;
        for (i, ((x, y), o)) in self.fam.table().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({x},{y})↦{o:?}")?;
        }
        write!(f, "}}⟩")
    }
}

impl<O: Clone + Send + Sync + 'static> DialObject<O> {
    /// Build from an explicit table; checks the index invariant and
    /// totality.
    pub fn new(
        wit: EffectiveSet,
        cowit: EffectiveSet,
        table: BTreeMap<(Value, Value), O>,
    ) -> Result<Self> {
        Self::check_indices(&wit, &cowit)?;
        for x in wit.elements() {
            for y in cowit.elements() {
                if !table.contains_key(&(x.clone(), y.clone())) {
                    return Err(Error::eval(format!("family not total: missing ({x},{y})")));
                }
            }
        }
        Ok(DialObject { wit, cowit, fam: TotalMap::new(table) })
    }

    /// Tabulate a rule over the enumerated grid and keep it as the extension
    /// for legal off-enumeration indices (these arise when counter-witness
    /// sets are truncated multiset or function spaces).
    pub fn from_rule(
        wit: EffectiveSet,
        cowit: EffectiveSet,
        rule: impl Fn(&Value, &Value) -> Result<O> + Send + Sync + 'static,
    ) -> Result<Self> {
        Self::check_indices(&wit, &cowit)?;
        let mut table = BTreeMap::new();
        for x in wit.elements() {
            for y in cowit.elements() {
                table.insert((x.clone(), y.clone()), rule(x, y)?);
            }
        }
        let fam = TotalMap::with_ext(table, move |(x, y): &(Value, Value)| rule(x, y).ok());
        Ok(DialObject { wit, cowit, fam })
    }

    fn check_indices(wit: &EffectiveSet, cowit: &EffectiveSet) -> Result<()> {
        if wit.is_empty() && !wit.truncated() && cowit.is_empty() && !cowit.truncated() {
            return Err(Error::eval("witness and counter-witness sets are both empty"));
        }
        Ok(())
    }

    pub fn wit(&self) -> &EffectiveSet {
        &self.wit
    }

    pub fn cowit(&self) -> &EffectiveSet {
        &self.cowit
    }

    /// The base object at a pair of bids.
    pub fn at(&self, x: &Value, y: &Value) -> Result<O> {
        self.fam
            .get(&(x.clone(), y.clone()))
            .ok_or_else(|| Error::eval(format!("family has no value at ({x},{y})")))
    }

    pub fn fam_table(&self) -> &BTreeMap<(Value, Value), O> {
        self.fam.table()
    }

    /// Apply a functor to every family value (the object action of the
    /// pointwise lift). The extension is chained when present.
    pub fn map_values<P: Clone + Send + Sync + 'static>(
        &self,
        func: Arc<dyn Fn(&O) -> Result<P> + Send + Sync>,
    ) -> Result<DialObject<P>> {
        let this = self.clone();
        DialObject::from_rule(self.wit.clone(), self.cowit.clone(), move |x, y| {
            func(&this.at(x, y)?)
        })
    }

    /// Swap witness and counter-witness roles, mapping values through
    /// `dualise`; `dual ∘ dual` is the identity on the nose.
    pub fn swap_indices<P: Clone + Send + Sync + 'static>(
        &self,
        dualise: Arc<dyn Fn(&O) -> P + Send + Sync>,
    ) -> DialObject<P> {
        let this = self.clone();
        DialObject::from_rule(self.cowit.clone(), self.wit.clone(), move |y, x| {
            Ok(dualise(&this.at(x, y)?))
        })
        .expect("swapping preserves the index invariant")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_both_empty() {
        let r: Result<DialObject<Value>> =
            DialObject::new(EffectiveSet::empty(), EffectiveSet::empty(), BTreeMap::new());
        assert!(r.is_err());
    }

    #[test]
    fn swap_twice_is_identity() {
        let wit = EffectiveSet::named(&["x0", "x1"]);
        let cowit = EffectiveSet::named(&["y0"]);
        let g = DialObject::from_rule(wit, cowit, |x, _| Ok(x.clone())).unwrap();
        let dualise: Arc<dyn Fn(&Value) -> Value + Send + Sync> = Arc::new(|v: &Value| v.clone());
        let once = g.swap_indices(dualise.clone());
        let twice = once.swap_indices(dualise);
        assert_eq!(g, twice);
    }
}
