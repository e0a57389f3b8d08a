use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finset::{EffectiveSet, Value};

/// A table total on an enumerated domain, optionally extended by a rule for
/// legal-but-not-enumerated keys (these appear when composition grows
/// multisets past the truncation bound). Equality, ordering and hashing see
/// only the table: two maps are interchangeable exactly when they agree on
/// the enumerated domain.
pub struct TotalMap<K, V> {
    table: Arc<BTreeMap<K, V>>,
    ext: Option<Arc<dyn Fn(&K) -> Option<V> + Send + Sync>>,
}

impl<K, V> Clone for TotalMap<K, V> {
    fn clone(&self) -> Self {
        TotalMap { table: Arc::clone(&self.table), ext: self.ext.clone() }
    }
}

impl<K: Ord, V: PartialEq> PartialEq for TotalMap<K, V> {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl<K: Ord, V: Eq> Eq for TotalMap<K, V> {}

impl<K: PartialOrd, V: PartialOrd> PartialOrd for TotalMap<K, V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.table.partial_cmp(&other.table)
    }
}

impl<K: Ord, V: Ord> Ord for TotalMap<K, V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.table.cmp(&other.table)
    }
}

impl<K: fmt::Debug, V: fmt::Debug> fmt::Debug for TotalMap<K, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.table.fmt(f)?;
        if self.ext.is_some() {
            write!(f, "+ext")?;
        }
        Ok(())
    }
}

impl<K: Ord + Clone, V: Clone> TotalMap<K, V> {
    pub fn new(table: BTreeMap<K, V>) -> Self {
        TotalMap { table: Arc::new(table), ext: None }
    }

    pub fn with_ext(
        table: BTreeMap<K, V>,
        ext: impl Fn(&K) -> Option<V> + Send + Sync + 'static,
    ) -> Self {
        TotalMap { table: Arc::new(table), ext: Some(Arc::new(ext)) }
    }

    pub fn get(&self, k: &K) -> Option<V> {
        match self.table.get(k) {
            Some(v) => Some(v.clone()),
            None => self.ext.as_ref().and_then(|f| f(k)),
        }
    }

    pub fn table(&self) -> &BTreeMap<K, V> {
        &self.table
    }

    pub fn has_ext(&self) -> bool {
        self.ext.is_some()
    }
}

/// A total function between effective sets, stored as its graph over the
/// enumerated domain.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteFunction {
    domain: EffectiveSet,
    codomain: EffectiveSet,
    map: TotalMap<Value, Value>,
}

impl fmt::Debug for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_value())?;
        if self.map.has_ext() {
            write!(f, "+ext")?;
        }
        Ok(())
    }
}

impl FiniteFunction {
    /// Build from an explicit graph; checks totality and that outputs pass
    /// codomain membership.
    pub fn new(
        domain: EffectiveSet,
        codomain: EffectiveSet,
        table: BTreeMap<Value, Value>,
    ) -> Result<Self> {
        Self::validate(&domain, &codomain, &table)?;
        Ok(FiniteFunction { domain, codomain, map: TotalMap::new(table) })
    }

    /// Tabulate a rule over the enumerated domain and keep the rule as the
    /// extension for off-enumeration (legal) inputs.
    pub fn from_rule(
        domain: EffectiveSet,
        codomain: EffectiveSet,
        rule: impl Fn(&Value) -> Result<Value> + Send + Sync + 'static,
    ) -> Result<Self> {
        let mut table = BTreeMap::new();
        for d in domain.elements() {
            table.insert(d.clone(), rule(d)?);
        }
        Self::validate(&domain, &codomain, &table)?;
        let map = TotalMap::with_ext(table, move |k| rule(k).ok());
        Ok(FiniteFunction { domain, codomain, map })
    }

    fn validate(
        domain: &EffectiveSet,
        codomain: &EffectiveSet,
        table: &BTreeMap<Value, Value>,
    ) -> Result<()> {
        for d in domain.elements() {
            match table.get(d) {
                None => {
                    return Err(Error::eval(format!("function table not total: missing {d}")))
                }
                Some(o) => {
                    if !codomain.contains(o) {
                        return Err(Error::eval(format!(
                            "function output {o} fails codomain membership"
                        )));
                    }
                }
            }
        }
        if table.len() != domain.len() {
            return Err(Error::eval("function table has keys outside the domain".to_string()));
        }
        Ok(())
    }

    pub fn identity(set: &EffectiveSet) -> Self {
        let table = set.elements().iter().map(|v| (v.clone(), v.clone())).collect();
        let map = TotalMap::with_ext(table, |k: &Value| Some(k.clone()));
        FiniteFunction { domain: set.clone(), codomain: set.clone(), map }
    }

    pub fn constant(domain: EffectiveSet, codomain: EffectiveSet, out: Value) -> Result<Self> {
        if !codomain.contains(&out) {
            return Err(Error::eval(format!("constant {out} fails codomain membership")));
        }
        let table = domain.elements().iter().map(|v| (v.clone(), out.clone())).collect();
        let o = out.clone();
        let map = TotalMap::with_ext(table, move |_| Some(o.clone()));
        Ok(FiniteFunction { domain, codomain, map })
    }

    /// Reinterpret an enumerated table value as a function.
    pub fn from_value(domain: EffectiveSet, codomain: EffectiveSet, v: &Value) -> Result<Self> {
        let table = v.as_table()?;
        Self::new(domain, codomain, table.clone())
    }

    pub fn domain(&self) -> &EffectiveSet {
        &self.domain
    }

    pub fn codomain(&self) -> &EffectiveSet {
        &self.codomain
    }

    pub fn graph(&self) -> &BTreeMap<Value, Value> {
        self.map.table()
    }

    pub fn apply(&self, v: &Value) -> Result<Value> {
        self.map
            .get(v)
            .ok_or_else(|| Error::eval(format!("function has no value at {v}")))
    }

    /// `outer ∘ inner`; the composite keeps an extension rule chaining the
    /// two evaluations.
    pub fn compose(outer: &FiniteFunction, inner: &FiniteFunction) -> Result<FiniteFunction> {
        let mut table = BTreeMap::new();
        for d in inner.domain.elements() {
            let mid = inner.apply(d)?;
            table.insert(d.clone(), outer.apply(&mid)?);
        }
        let o = outer.clone();
        let i = inner.clone();
        let map = TotalMap::with_ext(table, move |k| {
            i.apply(k).ok().and_then(|m| o.apply(&m).ok())
        });
        Ok(FiniteFunction { domain: inner.domain.clone(), codomain: outer.codomain.clone(), map })
    }

    /// The graph as a table value (the canonical element of a function-space
    /// set).
    pub fn as_value(&self) -> Value {
        Value::Table(Arc::new(self.map.table().clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::Limits;

    #[test]
    fn identity_and_compose() {
        let s = EffectiveSet::named(&["a", "b"]);
        let id = FiniteFunction::identity(&s);
        let f = FiniteFunction::new(
            s.clone(),
            s.clone(),
            [
                (Value::atom("a"), Value::atom("b")),
                (Value::atom("b"), Value::atom("a")),
            ]
            .into_iter()
            .collect(),
        )
        .unwrap();
        let fid = FiniteFunction::compose(&f, &id).unwrap();
        assert_eq!(fid, f);
        let idf = FiniteFunction::compose(&id, &f).unwrap();
        assert_eq!(idf, f);
    }

    #[test]
    fn totality_is_checked() {
        let s = EffectiveSet::named(&["a", "b"]);
        let r = FiniteFunction::new(
            s.clone(),
            s.clone(),
            [(Value::atom("a"), Value::atom("b"))].into_iter().collect(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn rule_extension_survives_composition() {
        // functions into a truncated multiset space can be evaluated past
        // the enumerated part through the stored rule
        let y = EffectiveSet::named(&["y"]);
        let ystar = EffectiveSet::multiset_space(&y, &Limits::default()).unwrap();
        let double = FiniteFunction::from_rule(ystar.clone(), ystar.clone(), |v| {
            let entries = v.as_bag()?;
            Ok(Value::bag(entries.iter().chain(entries.iter()).cloned()))
        })
        .unwrap();
        let quad = FiniteFunction::compose(&double, &double).unwrap();
        // [y,y] doubled twice is [y;8], far beyond the bound-2 enumeration
        let yy = Value::bag([Value::atom("y"), Value::atom("y")]);
        let out = quad.apply(&yy).unwrap();
        assert_eq!(out.as_bag().unwrap().len(), 8);
    }
}
