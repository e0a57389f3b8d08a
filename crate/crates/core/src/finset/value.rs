use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A symbolic element value: nested tagged tuples with a canonical total
/// order, so set membership and function equality are decidable and
/// deterministic.
///
/// Every index-set element in the library is a `Value`: unit points, named
/// atoms, pairs, tagged coproduct injections, graphs of finite functions and
/// finite multisets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Unit,
    Atom(Arc<str>),
    Pair(Arc<Value>, Arc<Value>),
    Inl(Arc<Value>),
    Inr(Arc<Value>),
    /// Graph of a finite function, keyed by argument.
    Table(Arc<BTreeMap<Value, Value>>),
    /// Finite multiset; entries are kept sorted so equality is count-wise.
    Bag(Arc<Vec<Value>>),
}

impl Value {
    pub fn atom(name: &str) -> Self {
        Value::Atom(Arc::from(name))
    }

    pub fn pair(a: Value, b: Value) -> Self {
        Value::Pair(Arc::new(a), Arc::new(b))
    }

    pub fn inl(a: Value) -> Self {
        Value::Inl(Arc::new(a))
    }

    pub fn inr(a: Value) -> Self {
        Value::Inr(Arc::new(a))
    }

    pub fn table<I: IntoIterator<Item = (Value, Value)>>(entries: I) -> Self {
        Value::Table(Arc::new(entries.into_iter().collect()))
    }

    /// Multiset value; entries are sorted into canonical order.
    pub fn bag<I: IntoIterator<Item = Value>>(entries: I) -> Self {
        let mut v: Vec<Value> = entries.into_iter().collect();
        v.sort();
        Value::Bag(Arc::new(v))
    }

    pub fn as_pair(&self) -> Result<(&Value, &Value)> {
        match self {
            Value::Pair(a, b) => Ok((a, b)),
            other => Err(Error::eval(format!("expected pair, got {other}"))),
        }
    }

    pub fn as_table(&self) -> Result<&BTreeMap<Value, Value>> {
        match self {
            Value::Table(t) => Ok(t),
            other => Err(Error::eval(format!("expected function value, got {other}"))),
        }
    }

    pub fn as_bag(&self) -> Result<&[Value]> {
        match self {
            Value::Bag(b) => Ok(b),
            other => Err(Error::eval(format!("expected multiset value, got {other}"))),
        }
    }

    /// Apply a function value (a `Table`) to an argument.
    pub fn apply(&self, arg: &Value) -> Result<Value> {
        let t = self.as_table()?;
        t.get(arg)
            .cloned()
            .ok_or_else(|| Error::eval(format!("function value has no entry for {arg}")))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Unit => write!(f, "*"),
            Value::Atom(s) => write!(f, "{s}"),
            Value::Pair(a, b) => write!(f, "({a},{b})"),
            Value::Inl(a) => write!(f, "inl {a}"),
            Value::Inr(a) => write!(f, "inr {a}"),
            Value::Table(t) => {
                write!(f, "{{")?;
                for (i, (k, v)) in t.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{k}->{v}")?;
                }
                write!(f, "}}")
            }
            Value::Bag(b) => {
                write!(f, "[")?;
                for (i, v) in b.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bag_entries_are_canonicalised() {
        let a = Value::bag([Value::atom("b"), Value::atom("a")]);
        let b = Value::bag([Value::atom("a"), Value::atom("b")]);
        assert_eq!(a, b);
    }

    #[test]
    fn bag_equality_respects_multiplicity() {
        let a = Value::bag([Value::atom("a"), Value::atom("a")]);
        let b = Value::bag([Value::atom("a")]);
        assert_ne!(a, b);
    }

    #[test]
    fn apply_looks_up_graph() {
        let f = Value::table([(Value::atom("x"), Value::atom("y"))]);
        assert_eq!(f.apply(&Value::atom("x")).unwrap(), Value::atom("y"));
        assert!(f.apply(&Value::atom("z")).is_err());
    }
}
