use crate::error::{Error, Result};
use crate::finset::{EffectiveSet, Limits, Value};

/// A finite multiset over an effective carrier. Entries are kept sorted, so
/// two multisets are equal exactly when their entry counts agree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Multiset {
    carrier: EffectiveSet,
    entries: Vec<Value>,
}

impl Multiset {
    pub fn new(carrier: EffectiveSet, mut entries: Vec<Value>) -> Result<Self> {
        for e in &entries {
            if !carrier.contains(e) {
                return Err(Error::eval(format!("multiset entry {e} fails carrier membership")));
            }
        }
        entries.sort();
        Ok(Multiset { carrier, entries })
    }

    pub fn empty(carrier: EffectiveSet) -> Self {
        Multiset { carrier, entries: Vec::new() }
    }

    pub fn singleton(carrier: EffectiveSet, v: Value) -> Result<Self> {
        Self::new(carrier, vec![v])
    }

    pub fn carrier(&self) -> &EffectiveSet {
        &self.carrier
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_value(&self) -> Value {
        Value::bag(self.entries.iter().cloned())
    }

    pub fn from_value(carrier: EffectiveSet, v: &Value) -> Result<Self> {
        Self::new(carrier, v.as_bag()?.to_vec())
    }

    /// Multiset union (with multiplicity).
    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        entries.sort();
        Multiset { carrier: self.carrier.clone(), entries }
    }

    /// Bind of the finite multiset monad: applies `k` to each entry and
    /// collects the results with a multiplicity-respecting union.
    pub fn bind(
        &self,
        target: &EffectiveSet,
        mut k: impl FnMut(&Value) -> Result<Multiset>,
    ) -> Result<Multiset> {
        let mut entries = Vec::new();
        for e in &self.entries {
            let m = k(e)?;
            entries.extend(m.entries.iter().cloned());
        }
        entries.sort();
        Ok(Multiset { carrier: target.clone(), entries })
    }
}

/// Bind on raw bag values: `l >>= k` over the target carrier.
pub fn multiset_bind(
    carrier: &EffectiveSet,
    target: &EffectiveSet,
    l: &Value,
    mut k: impl FnMut(&Value) -> Result<Value>,
) -> Result<Value> {
    let m = Multiset::from_value(carrier.clone(), l)?;
    let bound = m.bind(target, |e| Multiset::from_value(target.clone(), &k(e)?))?;
    Ok(bound.as_value())
}

/// Forward direction of the natural isomorphism `Y* × V* ≅ (Y + V)*`.
pub fn multiset_pair_to_sum(
    left: &Multiset,
    right: &Multiset,
    lim: &Limits,
) -> Result<Multiset> {
    let sum = EffectiveSet::coproduct(left.carrier(), right.carrier(), lim)?;
    let mut entries: Vec<Value> =
        left.entries().iter().map(|y| Value::inl(y.clone())).collect();
    entries.extend(right.entries().iter().map(|v| Value::inr(v.clone())));
    Multiset::new(sum, entries)
}

/// Inverse direction of `Y* × V* ≅ (Y + V)*`.
pub fn multiset_sum_to_pair(
    m: &Multiset,
    left_carrier: &EffectiveSet,
    right_carrier: &EffectiveSet,
) -> Result<(Multiset, Multiset)> {
    let mut ls = Vec::new();
    let mut rs = Vec::new();
    for e in m.entries() {
        match e {
            Value::Inl(x) => ls.push((**x).clone()),
            Value::Inr(y) => rs.push((**y).clone()),
            other => {
                return Err(Error::eval(format!("untagged entry {other} in sum multiset")))
            }
        }
    }
    Ok((Multiset::new(left_carrier.clone(), ls)?, Multiset::new(right_carrier.clone(), rs)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn bind_left_zero() {
        let a = EffectiveSet::named(&["a"]);
        let b = EffectiveSet::named(&["b"]);
        let empty = Multiset::empty(a.clone());
        let out = empty
            .bind(&b, |_| Multiset::new(b.clone(), vec![Value::atom("b")]))
            .unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn bind_singleton() {
        let a = EffectiveSet::named(&["a"]);
        let b = EffectiveSet::named(&["b"]);
        let one = Multiset::singleton(a.clone(), Value::atom("a")).unwrap();
        let out = one
            .bind(&b, |_| {
                Multiset::new(b.clone(), vec![Value::atom("b"), Value::atom("b")])
            })
            .unwrap();
        assert_eq!(out.entries(), &[Value::atom("b"), Value::atom("b")]);
    }

    #[test]
    fn bind_respects_multiplicity() {
        // [a,a] >>= (a ↦ [b]) must equal the brute-force union [b] ⊎ [b]
        let a = EffectiveSet::named(&["a"]);
        let b = EffectiveSet::named(&["b"]);
        let aa =
            Multiset::new(a.clone(), vec![Value::atom("a"), Value::atom("a")]).unwrap();
        let k = |_: &Value| Multiset::new(b.clone(), vec![Value::atom("b")]);
        let out = aa.bind(&b, k).unwrap();
        // independent oracle: elementwise union
        let mut oracle = Multiset::empty(b.clone());
        for e in aa.entries() {
            oracle = oracle.union(&k(e).unwrap());
        }
        assert_eq!(out, oracle);
        assert_eq!(out.len(), 2);
    }

    /// The three monad laws, exhaustively over all multisets of size ≤ 3 on
    /// carriers of size ≤ 3.
    #[test]
    fn monad_laws_exhaustive() {
        let lim3 = lim().with_bound(3);
        for n in 0..=3usize {
            let carrier = EffectiveSet::canonical(n, "c");
            let space = EffectiveSet::multiset_space(&carrier, &lim3).unwrap();
            // unit: return x = [x]
            let unit = |v: &Value| Multiset::new(carrier.clone(), vec![v.clone()]);
            for l in space.elements() {
                let l = Multiset::from_value(carrier.clone(), l).unwrap();
                // left identity: return x >>= k = k x (on every element)
                for x in carrier.elements() {
                    let k = |v: &Value| {
                        Multiset::new(carrier.clone(), vec![v.clone(), v.clone()])
                    };
                    let lhs = unit(x).unwrap().bind(&carrier, k).unwrap();
                    assert_eq!(lhs, k(x).unwrap());
                }
                // right identity: l >>= return = l
                let rhs = l.bind(&carrier, unit).unwrap();
                assert_eq!(rhs, l);
                // associativity with two fixed nontrivial continuations
                let k1 = |v: &Value| Multiset::new(carrier.clone(), vec![v.clone(), v.clone()]);
                let k2 = |v: &Value| {
                    Multiset::new(
                        carrier.clone(),
                        if *v == carrier.elements()[0] {
                            vec![]
                        } else {
                            vec![v.clone()]
                        },
                    )
                };
                let left = l.bind(&carrier, k1).unwrap().bind(&carrier, k2).unwrap();
                let right = l
                    .bind(&carrier, |v| k1(v).unwrap().bind(&carrier, k2))
                    .unwrap();
                assert_eq!(left, right);
            }
        }
    }

    /// `Y* × V* ≅ (Y + V)*` round-trips both ways on the full bound-2
    /// enumeration over 2-element carriers.
    #[test]
    fn coproduct_iso_roundtrip_exhaustive() {
        let y = EffectiveSet::named(&["y1", "y2"]);
        let v = EffectiveSet::named(&["v1", "v2"]);
        let ys = EffectiveSet::multiset_space(&y, &lim()).unwrap();
        let vs = EffectiveSet::multiset_space(&v, &lim()).unwrap();
        let mut seen = Vec::new();
        for my in ys.elements() {
            for mv in vs.elements() {
                let my = Multiset::from_value(y.clone(), my).unwrap();
                let mv = Multiset::from_value(v.clone(), mv).unwrap();
                let sum = multiset_pair_to_sum(&my, &mv, &lim()).unwrap();
                assert_eq!(sum.len(), my.len() + mv.len());
                let (back_y, back_v) = multiset_sum_to_pair(&sum, &y, &v).unwrap();
                assert_eq!(back_y, my);
                assert_eq!(back_v, mv);
                // injectivity makes it a bijection onto its image
                assert!(!seen.contains(&sum));
                seen.push(sum);
            }
        }
        // surjectivity onto the size ≤ 2 enumeration of (Y+V)*
        let sum_set = EffectiveSet::coproduct(&y, &v, &lim()).unwrap();
        let sum_space = EffectiveSet::multiset_space(&sum_set, &lim()).unwrap();
        for m in sum_space.elements() {
            let m = Multiset::from_value(sum_set.clone(), m).unwrap();
            let (py, pv) = multiset_sum_to_pair(&m, &y, &v).unwrap();
            let again = multiset_pair_to_sum(&py, &pv, &lim()).unwrap();
            assert_eq!(again, m);
        }
    }

    #[test]
    fn pair_to_sum_examples() {
        let y = EffectiveSet::named(&["y"]);
        let v = EffectiveSet::named(&["v"]);
        let e = multiset_pair_to_sum(&Multiset::empty(y.clone()), &Multiset::empty(v.clone()), &lim())
            .unwrap();
        assert!(e.is_empty());
        let s = multiset_pair_to_sum(
            &Multiset::singleton(y.clone(), Value::atom("y")).unwrap(),
            &Multiset::singleton(v.clone(), Value::atom("v")).unwrap(),
            &lim(),
        )
        .unwrap();
        assert_eq!(
            s.entries(),
            &[Value::inl(Value::atom("y")), Value::inr(Value::atom("v"))]
        );
    }
}
