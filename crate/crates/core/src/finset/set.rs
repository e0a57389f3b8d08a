use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finset::Value;

/// Enumeration limits shared by every set constructor.
///
/// `max_set` caps the number of enumerated elements a single constructed set
/// may have; exceeding it is a reported error, never silent truncation.
/// `multiset_bound` is the size bound for multiset-space enumerations; the
/// enumeration of `Y*` is truncated at this bound but membership stays
/// unbounded, so composition can grow multisets past the bound without ever
/// producing an illegal value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_set: u64,
    pub multiset_bound: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_set: 1_000_000, multiset_bound: 2 }
    }
}

impl Limits {
    pub fn with_bound(self, bound: u32) -> Self {
        Limits { multiset_bound: bound, ..self }
    }

    pub fn with_max_set(self, max_set: u64) -> Self {
        Limits { max_set, ..self }
    }

    fn check(&self, what: &str, needed: u128) -> Result<()> {
        if needed > self.max_set as u128 {
            Err(Error::budget(what, needed, self.max_set))
        } else {
            Ok(())
        }
    }
}

/// Structural membership data for non-listed sets. For a truncated set the
/// enumeration is a bounded sample of an infinite carrier; the shape is what
/// lets membership remain unbounded.
#[derive(Clone)]
enum Shape {
    Listed,
    Product(Arc<EffectiveSet>, Arc<EffectiveSet>),
    Coproduct(Arc<EffectiveSet>, Arc<EffectiveSet>),
    Functions(Arc<EffectiveSet>, Arc<EffectiveSet>),
    DepSum(Arc<Vec<(Value, EffectiveSet)>>),
    DepProd(Arc<Vec<(Value, EffectiveSet)>>),
    Multisets(Arc<EffectiveSet>),
}

/// A finite (or boundedly-enumerated) carrier with a decidable membership
/// test and a deterministic enumerator.
///
/// Invariants: enumerated elements are distinct and all pass membership;
/// when `truncated` is false, membership accepts exactly the enumerated
/// elements.
#[derive(Clone)]
pub struct EffectiveSet {
    elements: Arc<Vec<Value>>,
    truncated: bool,
    shape: Shape,
}

impl PartialEq for EffectiveSet {
    fn eq(&self, other: &Self) -> bool {
        self.truncated == other.truncated && self.elements == other.elements
    }
}

impl Eq for EffectiveSet {}

impl PartialOrd for EffectiveSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EffectiveSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (&*self.elements, self.truncated).cmp(&(&*other.elements, other.truncated))
    }
}

impl fmt::Debug for EffectiveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")?;
        if self.truncated {
            write!(f, "…")?;
        }
        Ok(())
    }
}

impl EffectiveSet {
    pub fn empty() -> Self {
        EffectiveSet { elements: Arc::new(Vec::new()), truncated: false, shape: Shape::Listed }
    }

    /// The canonical singleton `{*}`.
    pub fn unit() -> Self {
        EffectiveSet {
            elements: Arc::new(vec![Value::Unit]),
            truncated: false,
            shape: Shape::Listed,
        }
    }

    pub fn named(names: &[&str]) -> Self {
        let vals: Vec<Value> = names.iter().map(|n| Value::atom(n)).collect();
        Self::from_values(vals).expect("named elements must be distinct")
    }

    /// `n` fresh atoms `prefix0 .. prefix(n-1)`.
    pub fn canonical(n: usize, prefix: &str) -> Self {
        let vals = (0..n).map(|i| Value::atom(&format!("{prefix}{i}"))).collect();
        Self::from_values(vals).expect("canonical elements are distinct")
    }

    pub fn from_values(vals: Vec<Value>) -> Result<Self> {
        for (i, v) in vals.iter().enumerate() {
            if vals[..i].contains(v) {
                return Err(Error::eval(format!("duplicate element {v} in set literal")));
            }
        }
        Ok(EffectiveSet { elements: Arc::new(vals), truncated: false, shape: Shape::Listed })
    }

    pub fn elements(&self) -> &[Value] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn contains(&self, v: &Value) -> bool {
        match &self.shape {
            Shape::Listed => self.elements.contains(v),
            Shape::Product(a, b) => match v {
                Value::Pair(x, y) => a.contains(x) && b.contains(y),
                _ => false,
            },
            Shape::Coproduct(a, b) => match v {
                Value::Inl(x) => a.contains(x),
                Value::Inr(y) => b.contains(y),
                _ => false,
            },
            Shape::Functions(dom, cod) => match v {
                Value::Table(t) => {
                    t.len() == dom.len()
                        && dom.elements.iter().all(|d| match t.get(d) {
                            Some(o) => cod.contains(o),
                            None => false,
                        })
                }
                _ => false,
            },
            Shape::DepSum(fibers) => match v {
                Value::Pair(i, e) => fibers
                    .iter()
                    .find(|(idx, _)| idx == i.as_ref())
                    .is_some_and(|(_, fib)| fib.contains(e)),
                _ => false,
            },
            Shape::DepProd(fibers) => match v {
                Value::Table(t) => {
                    t.len() == fibers.len()
                        && fibers.iter().all(|(idx, fib)| match t.get(idx) {
                            Some(o) => fib.contains(o),
                            None => false,
                        })
                }
                _ => false,
            },
            Shape::Multisets(carrier) => match v {
                Value::Bag(entries) => entries.iter().all(|e| carrier.contains(e)),
                _ => false,
            },
        }
    }

    pub fn index_of(&self, v: &Value) -> Option<usize> {
        self.elements.iter().position(|e| e == v)
    }

    /// Cartesian product; pairs enumerated with the left factor varying
    /// slowest.
    pub fn product(a: &Self, b: &Self, lim: &Limits) -> Result<Self> {
        lim.check("product", a.len() as u128 * b.len() as u128)?;
        let mut elems = Vec::with_capacity(a.len() * b.len());
        for x in a.elements() {
            for y in b.elements() {
                elems.push(Value::pair(x.clone(), y.clone()));
            }
        }
        Ok(EffectiveSet {
            elements: Arc::new(elems),
            truncated: a.truncated || b.truncated,
            shape: Shape::Product(Arc::new(a.clone()), Arc::new(b.clone())),
        })
    }

    /// Disjoint union with left/right tags.
    pub fn coproduct(a: &Self, b: &Self, lim: &Limits) -> Result<Self> {
        lim.check("coproduct", a.len() as u128 + b.len() as u128)?;
        let mut elems = Vec::with_capacity(a.len() + b.len());
        elems.extend(a.elements().iter().map(|x| Value::inl(x.clone())));
        elems.extend(b.elements().iter().map(|y| Value::inr(y.clone())));
        Ok(EffectiveSet {
            elements: Arc::new(elems),
            truncated: a.truncated || b.truncated,
            shape: Shape::Coproduct(Arc::new(a.clone()), Arc::new(b.clone())),
        })
    }

    /// All functions `dom -> cod` as table values, ordered with the first
    /// domain position most significant. `0^0 = 1`: the empty set to itself
    /// has exactly the empty function.
    pub fn function_space(dom: &Self, cod: &Self, lim: &Limits) -> Result<Self> {
        let mut needed: u128 = 1;
        for _ in 0..dom.len() {
            needed = needed.saturating_mul(cod.len() as u128);
            if needed > lim.max_set as u128 {
                return Err(Error::budget("function space", needed, lim.max_set));
            }
        }
        lim.check("function space", needed)?;
        let mut elems = Vec::with_capacity(needed as usize);
        if dom.is_empty() {
            elems.push(Value::table([]));
        } else if !cod.is_empty() {
            // odometer over output choices
            let n = dom.len();
            let mut digits = vec![0usize; n];
            loop {
                let table = dom
                    .elements()
                    .iter()
                    .zip(digits.iter())
                    .map(|(d, &i)| (d.clone(), cod.elements()[i].clone()));
                elems.push(Value::table(table));
                // increment with the last position fastest
                let mut pos = n;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < cod.len() {
                        break;
                    }
                    digits[pos] = 0;
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos == usize::MAX {
                    break;
                }
            }
        }
        Ok(EffectiveSet {
            elements: Arc::new(elems),
            truncated: dom.truncated || cod.truncated,
            shape: Shape::Functions(Arc::new(dom.clone()), Arc::new(cod.clone())),
        })
    }

    /// Σ-type: pairs `(i, e)` with `e` in the fiber over `i`.
    pub fn dependent_sum(
        index: &Self,
        mut fam: impl FnMut(&Value) -> Result<EffectiveSet>,
        lim: &Limits,
    ) -> Result<Self> {
        let mut fibers = Vec::with_capacity(index.len());
        let mut needed: u128 = 0;
        for i in index.elements() {
            let fib = fam(i)?;
            needed += fib.len() as u128;
            lim.check("dependent sum", needed)?;
            fibers.push((i.clone(), fib));
        }
        let mut elems = Vec::with_capacity(needed as usize);
        let mut truncated = index.truncated;
        for (i, fib) in &fibers {
            truncated |= fib.truncated;
            for e in fib.elements() {
                elems.push(Value::pair(i.clone(), e.clone()));
            }
        }
        Ok(EffectiveSet {
            elements: Arc::new(elems),
            truncated,
            shape: Shape::DepSum(Arc::new(fibers)),
        })
    }

    /// Π-type: choice functions over the fibers; the empty index yields the
    /// singleton holding the empty choice.
    pub fn dependent_product(
        index: &Self,
        mut fam: impl FnMut(&Value) -> Result<EffectiveSet>,
        lim: &Limits,
    ) -> Result<Self> {
        let mut fibers = Vec::with_capacity(index.len());
        let mut needed: u128 = 1;
        for i in index.elements() {
            let fib = fam(i)?;
            needed = needed.saturating_mul(fib.len() as u128);
            if needed > lim.max_set as u128 {
                return Err(Error::budget("dependent product", needed, lim.max_set));
            }
            fibers.push((i.clone(), fib));
        }
        let mut elems = Vec::with_capacity(needed as usize);
        if fibers.iter().all(|(_, f)| !f.is_empty()) {
            let n = fibers.len();
            let mut digits = vec![0usize; n];
            'outer: loop {
                let table = fibers
                    .iter()
                    .zip(digits.iter())
                    .map(|((i, fib), &d)| (i.clone(), fib.elements()[d].clone()));
                elems.push(Value::table(table));
                if n == 0 {
                    break;
                }
                let mut pos = n;
                loop {
                    if pos == 0 {
                        break 'outer;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < fibers[pos].1.len() {
                        break;
                    }
                    digits[pos] = 0;
                    if pos == 0 {
                        break 'outer;
                    }
                }
            }
        }
        let truncated = index.truncated || fibers.iter().any(|(_, f)| f.truncated);
        Ok(EffectiveSet {
            elements: Arc::new(elems),
            truncated,
            shape: Shape::DepProd(Arc::new(fibers)),
        })
    }

    /// All multisets over `carrier` of size up to `lim.multiset_bound`,
    /// ordered by size then entry indices. The enumeration is truncated
    /// whenever the carrier is nonempty (the full multiset space is
    /// infinite), but membership accepts multisets of any size.
    pub fn multiset_space(carrier: &Self, lim: &Limits) -> Result<Self> {
        let bound = lim.multiset_bound as usize;
        let n = carrier.len();
        let mut elems = Vec::new();
        elems.push(Value::bag([]));
        // nondecreasing index tuples of each size
        for size in 1..=bound {
            if n == 0 {
                break;
            }
            let mut idx = vec![0usize; size];
            loop {
                lim.check("multiset space", elems.len() as u128 + 1)?;
                elems.push(Value::bag(idx.iter().map(|&i| carrier.elements()[i].clone())));
                let mut pos = size;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < n {
                        for p in pos + 1..size {
                            idx[p] = idx[pos];
                        }
                        break;
                    }
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos == usize::MAX {
                    break;
                }
            }
        }
        Ok(EffectiveSet {
            elements: Arc::new(elems),
            truncated: !carrier.is_empty() || carrier.truncated,
            shape: Shape::Multisets(Arc::new(carrier.clone())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn product_counts() {
        let a = EffectiveSet::named(&["a", "b"]);
        let b = EffectiveSet::named(&["0", "1"]);
        assert_eq!(EffectiveSet::product(&a, &b, &lim()).unwrap().len(), 4);
        assert_eq!(EffectiveSet::product(&EffectiveSet::empty(), &b, &lim()).unwrap().len(), 0);
        let u = EffectiveSet::unit();
        let uu = EffectiveSet::product(&u, &u, &lim()).unwrap();
        assert_eq!(uu.elements(), &[Value::pair(Value::Unit, Value::Unit)]);
    }

    #[test]
    fn coproduct_tags_keep_copies_distinct() {
        let a = EffectiveSet::named(&["a", "b"]);
        let b = EffectiveSet::named(&["a"]);
        let c = EffectiveSet::coproduct(&a, &b, &lim()).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.contains(&Value::inl(Value::atom("a"))));
        assert!(c.contains(&Value::inr(Value::atom("a"))));
        let e = EffectiveSet::coproduct(&EffectiveSet::empty(), &a, &lim()).unwrap();
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn function_space_counts() {
        let a = EffectiveSet::named(&["a", "b"]);
        let b = EffectiveSet::named(&["0", "1"]);
        assert_eq!(EffectiveSet::function_space(&a, &b, &lim()).unwrap().len(), 4);
        // 0^0 = 1
        let e = EffectiveSet::empty();
        let ee = EffectiveSet::function_space(&e, &e, &lim()).unwrap();
        assert_eq!(ee.len(), 1);
        // no function from a nonempty set into the empty set
        let ae = EffectiveSet::function_space(&a, &e, &lim()).unwrap();
        assert_eq!(ae.len(), 0);
    }

    #[test]
    fn function_space_budget() {
        let a = EffectiveSet::canonical(30, "x");
        let b = EffectiveSet::named(&["0", "1"]);
        let err = EffectiveSet::function_space(&a, &b, &lim()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn dependent_sum_counts() {
        let idx = EffectiveSet::named(&["a", "b"]);
        let two = EffectiveSet::named(&["0", "1"]);
        let s = EffectiveSet::dependent_sum(&idx, |_| Ok(two.clone()), &lim()).unwrap();
        assert_eq!(s.len(), 4);

        let s2 = EffectiveSet::dependent_sum(
            &idx,
            |i| {
                Ok(if *i == Value::atom("a") {
                    EffectiveSet::empty()
                } else {
                    EffectiveSet::named(&["0"])
                })
            },
            &lim(),
        )
        .unwrap();
        assert_eq!(s2.elements(), &[Value::pair(Value::atom("b"), Value::atom("0"))]);

        let s3 =
            EffectiveSet::dependent_sum(&EffectiveSet::empty(), |_| Ok(two.clone()), &lim())
                .unwrap();
        assert!(s3.is_empty());
    }

    #[test]
    fn dependent_product_counts() {
        let empty_index = EffectiveSet::empty();
        let two = EffectiveSet::named(&["0", "1"]);
        let p = EffectiveSet::dependent_product(&empty_index, |_| Ok(two.clone()), &lim()).unwrap();
        assert_eq!(p.len(), 1);

        let idx = EffectiveSet::named(&["a", "b"]);
        let p2 = EffectiveSet::dependent_product(
            &idx,
            |i| {
                Ok(if *i == Value::atom("a") {
                    EffectiveSet::named(&["0", "1"])
                } else {
                    EffectiveSet::named(&["0"])
                })
            },
            &lim(),
        )
        .unwrap();
        assert_eq!(p2.len(), 2);

        let p3 = EffectiveSet::dependent_product(
            &idx,
            |i| {
                Ok(if *i == Value::atom("a") {
                    EffectiveSet::empty()
                } else {
                    EffectiveSet::named(&["0"])
                })
            },
            &lim(),
        )
        .unwrap();
        assert!(p3.is_empty());
    }

    #[test]
    fn dependent_product_matches_plain_product_on_constant_family() {
        let idx = EffectiveSet::named(&["a", "b"]);
        let two = EffectiveSet::named(&["0", "1"]);
        let dp = EffectiveSet::dependent_product(&idx, |_| Ok(two.clone()), &lim()).unwrap();
        let fs = EffectiveSet::function_space(&idx, &two, &lim()).unwrap();
        assert_eq!(dp.len(), fs.len());
        assert!(dp.elements().iter().all(|v| fs.contains(v)));
    }

    #[test]
    fn multiset_space_counts() {
        let one = EffectiveSet::named(&["y"]);
        let m = EffectiveSet::multiset_space(&one, &lim()).unwrap();
        // [], [y], [y,y] at bound 2, independently: C(1+0-1,0)+C(1,1)+C(2,2)
        assert_eq!(m.len(), 3);
        assert!(m.truncated());
        // membership accepts any size
        let big = Value::bag(vec![Value::atom("y"); 9]);
        assert!(m.contains(&big));

        let e = EffectiveSet::multiset_space(&EffectiveSet::empty(), &lim()).unwrap();
        assert_eq!(e.len(), 1);
        assert!(!e.truncated());

        let two = EffectiveSet::named(&["a", "b"]);
        let m2 = EffectiveSet::multiset_space(&two, &lim().with_bound(1)).unwrap();
        assert_eq!(m2.len(), 3);
    }

    #[test]
    fn multiset_space_count_matches_binomial_oracle() {
        // number of multisets of size s over n elements is C(n+s-1, s)
        fn binom(n: u64, k: u64) -> u64 {
            if k > n {
                return 0;
            }
            let mut r = 1u64;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        for n in 0..4u64 {
            for bound in 0..4u32 {
                let carrier = EffectiveSet::canonical(n as usize, "c");
                let m =
                    EffectiveSet::multiset_space(&carrier, &lim().with_bound(bound)).unwrap();
                let expect: u64 = (0..=bound as u64)
                    .map(|s| if s == 0 { 1 } else { binom(n + s - 1, s) })
                    .sum();
                assert_eq!(m.len() as u64, expect, "n={n} bound={bound}");
            }
        }
    }

    #[test]
    fn truncation_propagates() {
        let one = EffectiveSet::named(&["y"]);
        let m = EffectiveSet::multiset_space(&one, &lim()).unwrap();
        let p = EffectiveSet::product(&one, &m, &lim()).unwrap();
        assert!(p.truncated());
        let f = EffectiveSet::function_space(&one, &m, &lim()).unwrap();
        assert!(f.truncated());
    }
}
