use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::finset::Value;
use crate::model::{CartesianCategory, Category, Model};

/// Morphism descriptor of a posetal category: the unique witness that
/// `src ≤ dst`. Composition and identities are forced, so equality of
/// morphisms is equality of endpoints.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LMor {
    pub src: Value,
    pub dst: Value,
}

impl fmt::Debug for LMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}≤{}", self.src, self.dst)
    }
}

/// A finite poset with all binary meets and a top element, used as the
/// cartesian (nonlinear) side of a posetal linear-nonlinear adjunction.
#[derive(Clone)]
pub struct Poset {
    data: Arc<PosetData>,
}

struct PosetData {
    elements: Vec<Value>,
    leq: BTreeSet<(Value, Value)>,
    meets: BTreeMap<(Value, Value), Value>,
    top: Value,
}

impl Poset {
    pub fn new(
        elements: Vec<Value>,
        leq: BTreeSet<(Value, Value)>,
        meets: BTreeMap<(Value, Value), Value>,
        top: Value,
    ) -> Self {
        Poset { data: Arc::new(PosetData { elements, leq, meets, top }) }
    }

    pub fn leq(&self, a: &Value, b: &Value) -> bool {
        self.data.leq.contains(&(a.clone(), b.clone()))
    }

    pub fn elements(&self) -> &[Value] {
        &self.data.elements
    }
}

impl Category for Poset {
    type Obj = Value;
    type Mor = LMor;

    fn sample_objects(&self, cap: usize) -> Vec<Value> {
        self.data.elements.iter().take(cap).cloned().collect()
    }

    fn hom(&self, a: &Value, b: &Value) -> Result<Vec<LMor>> {
        Ok(if self.leq(a, b) { vec![LMor { src: a.clone(), dst: b.clone() }] } else { vec![] })
    }

    fn identity(&self, a: &Value) -> LMor {
        LMor { src: a.clone(), dst: a.clone() }
    }

    fn compose(&self, g: &LMor, f: &LMor) -> LMor {
        assert_eq!(f.dst, g.src, "posetal composition endpoint mismatch");
        LMor { src: f.src.clone(), dst: g.dst.clone() }
    }

    fn dom(&self, f: &LMor) -> Value {
        f.src.clone()
    }

    fn cod(&self, f: &LMor) -> Value {
        f.dst.clone()
    }

    fn is_valid_mor(&self, f: &LMor) -> bool {
        self.leq(&f.src, &f.dst)
    }
}

impl CartesianCategory for Poset {
    fn terminal(&self) -> Value {
        self.data.top.clone()
    }

    fn product(&self, a: &Value, b: &Value) -> Result<Value> {
        self.data
            .meets
            .get(&(a.clone(), b.clone()))
            .cloned()
            .ok_or_else(|| Error::eval(format!("poset has no meet of {a} and {b}")))
    }

    fn proj_left(&self, a: &Value, b: &Value) -> Result<LMor> {
        Ok(LMor { src: self.product(a, b)?, dst: a.clone() })
    }

    fn proj_right(&self, a: &Value, b: &Value) -> Result<LMor> {
        Ok(LMor { src: self.product(a, b)?, dst: b.clone() })
    }

    fn pairing(&self, f: &LMor, g: &LMor) -> Result<LMor> {
        Ok(LMor { src: f.src.clone(), dst: self.product(&f.dst, &g.dst)? })
    }

    fn to_terminal(&self, a: &Value) -> Result<LMor> {
        Ok(LMor { src: a.clone(), dst: self.data.top.clone() })
    }
}

/// A lineale: a finite posetal model of multiplicative linear logic, with
/// optional lattice structure for the additives and an optional interior
/// operator (`bang` table) inducing a linear-nonlinear adjunction whose
/// nonlinear side is the sub-poset of `!`-fixed points.
#[derive(Clone)]
pub struct Lineale {
    data: Arc<LinealeData>,
}

impl fmt::Debug for Lineale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lineale({} elements)", self.data.elements.len())
    }
}

struct LinealeData {
    elements: Vec<Value>,
    leq: BTreeSet<(Value, Value)>,
    tensor: BTreeMap<(Value, Value), Value>,
    unit: Value,
    dual: BTreeMap<Value, Value>,
    bang: Option<BTreeMap<Value, Value>>,
    // derived
    meets: Option<BTreeMap<(Value, Value), Value>>,
    joins: Option<BTreeMap<(Value, Value), Value>>,
    top: Option<Value>,
    bottom: Option<Value>,
    nonlinear: Option<Poset>,
    tensor_is_meet: bool,
}

/// On-disk configuration for a finite lineale. Unknown fields are rejected.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LinealeConfig {
    elements: Vec<String>,
    leq: Vec<[String; 2]>,
    tensor: BTreeMap<String, String>,
    unit: String,
    dual: BTreeMap<String, String>,
    #[serde(default)]
    bang: Option<BTreeMap<String, String>>,
}

/// The two-element boolean algebra as a degenerate game model: one game
/// Eloise wins immediately, one Abelard wins immediately.
pub fn boolean_lineale() -> Lineale {
    let config = r#"{
        "elements": ["0", "1"],
        "leq": [["0", "1"]],
        "tensor": {"0,0": "0", "0,1": "0", "1,0": "0", "1,1": "1"},
        "unit": "1",
        "dual": {"0": "1", "1": "0"},
        "bang": {"0": "0", "1": "1"}
    }"#;
    load_finite_lineale(config).expect("boolean lineale tables are valid")
}

/// Parse, build and exhaustively validate a lineale from its JSON
/// configuration. Every axiom is checked before the model is returned; the
/// first failure is reported with a witness tuple.
pub fn load_finite_lineale(config: &str) -> Result<Lineale> {
    let lineale = load_finite_lineale_unchecked(config)?;
    lineale.validate()?;
    Ok(lineale)
}

/// Parse and build without validating the axioms. Used to feed deliberately
/// broken tables to the law suites, which report failures as data.
pub fn load_finite_lineale_unchecked(config: &str) -> Result<Lineale> {
    let cfg: LinealeConfig =
        serde_json::from_str(config).map_err(|e| Error::Config(e.to_string()))?;
    Lineale::from_config(cfg)
}

impl Lineale {
    fn from_config(cfg: LinealeConfig) -> Result<Self> {
        if cfg.elements.is_empty() {
            return Err(Error::Config("a lineale needs at least one element".into()));
        }
        let elements: Vec<Value> = cfg.elements.iter().map(|s| Value::atom(s)).collect();
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(Error::Config(format!("duplicate element {e}")));
            }
        }
        let known = |name: &str| -> Result<Value> {
            let v = Value::atom(name);
            if elements.contains(&v) {
                Ok(v)
            } else {
                Err(Error::Config(format!("unknown element '{name}'")))
            }
        };

        let mut leq = BTreeSet::new();
        for e in &elements {
            leq.insert((e.clone(), e.clone()));
        }
        for [a, b] in &cfg.leq {
            leq.insert((known(a)?, known(b)?));
        }

        let mut tensor = BTreeMap::new();
        for (key, out) in &cfg.tensor {
            let mut parts = key.split(',').map(str::trim);
            let (a, b) = match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(Error::Config(format!("bad tensor key '{key}'"))),
            };
            tensor.insert((known(a)?, known(b)?), known(out)?);
        }

        let unit = known(&cfg.unit)?;

        let mut dual = BTreeMap::new();
        for (a, b) in &cfg.dual {
            dual.insert(known(a)?, known(b)?);
        }

        let bang = match &cfg.bang {
            None => None,
            Some(table) => {
                let mut t = BTreeMap::new();
                for (a, b) in table {
                    t.insert(known(a)?, known(b)?);
                }
                Some(t)
            }
        };

        // derived lattice structure
        let holds = |a: &Value, b: &Value| leq.contains(&(a.clone(), b.clone()));
        let glb = |a: &Value, b: &Value| -> Option<Value> {
            let lower: Vec<&Value> =
                elements.iter().filter(|c| holds(c, a) && holds(c, b)).collect();
            lower
                .iter()
                .find(|m| lower.iter().all(|c| holds(c, m)))
                .map(|m| (*m).clone())
        };
        let lub = |a: &Value, b: &Value| -> Option<Value> {
            let upper: Vec<&Value> =
                elements.iter().filter(|c| holds(a, c) && holds(b, c)).collect();
            upper
                .iter()
                .find(|j| upper.iter().all(|c| holds(j, c)))
                .map(|j| (*j).clone())
        };

        let mut meets = Some(BTreeMap::new());
        let mut joins = Some(BTreeMap::new());
        for a in &elements {
            for b in &elements {
                match (&mut meets, glb(a, b)) {
                    (Some(m), Some(v)) => {
                        m.insert((a.clone(), b.clone()), v);
                    }
                    (m, None) => *m = None,
                    _ => {}
                }
                match (&mut joins, lub(a, b)) {
                    (Some(j), Some(v)) => {
                        j.insert((a.clone(), b.clone()), v);
                    }
                    (j, None) => *j = None,
                    _ => {}
                }
            }
        }
        let top = elements.iter().find(|t| elements.iter().all(|a| holds(a, t))).cloned();
        let bottom = elements.iter().find(|z| elements.iter().all(|a| holds(z, a))).cloned();

        let tensor_is_meet = match &meets {
            Some(m) => elements.iter().all(|a| {
                elements.iter().all(|b| {
                    tensor.get(&(a.clone(), b.clone())) == m.get(&(a.clone(), b.clone()))
                })
            }),
            None => false,
        };

        // the nonlinear side: sub-poset of !-fixed points
        let nonlinear = match (&bang, &meets, &top) {
            (Some(bang_table), Some(_), Some(_)) => {
                let fixed: Vec<Value> = elements
                    .iter()
                    .filter(|e| bang_table.get(*e) == Some(e))
                    .cloned()
                    .collect();
                let sub_leq: BTreeSet<(Value, Value)> = leq
                    .iter()
                    .filter(|(a, b)| fixed.contains(a) && fixed.contains(b))
                    .cloned()
                    .collect();
                let mut sub_meets = BTreeMap::new();
                let mut ok = true;
                for a in &fixed {
                    for b in &fixed {
                        let lower: Vec<&Value> = fixed
                            .iter()
                            .filter(|c| holds(c, a) && holds(c, b))
                            .collect();
                        match lower.iter().find(|m| lower.iter().all(|c| holds(c, m))) {
                            Some(m) => {
                                sub_meets.insert((a.clone(), b.clone()), (*m).clone());
                            }
                            None => ok = false,
                        }
                    }
                }
                let sub_top =
                    fixed.iter().find(|t| fixed.iter().all(|a| holds(a, t))).cloned();
                match (ok, sub_top) {
                    (true, Some(t)) => Some(Poset::new(fixed, sub_leq, sub_meets, t)),
                    _ => None,
                }
            }
            _ => None,
        };

        Ok(Lineale {
            data: Arc::new(LinealeData {
                elements,
                leq,
                tensor,
                unit,
                dual,
                bang,
                meets,
                joins,
                top,
                bottom,
                nonlinear,
                tensor_is_meet,
            }),
        })
    }

    pub fn elements(&self) -> &[Value] {
        &self.data.elements
    }

    pub fn leq(&self, a: &Value, b: &Value) -> bool {
        self.data.leq.contains(&(a.clone(), b.clone()))
    }

    fn tensor_of(&self, a: &Value, b: &Value) -> Result<Value> {
        self.data
            .tensor
            .get(&(a.clone(), b.clone()))
            .cloned()
            .ok_or_else(|| Error::eval(format!("tensor table missing entry ({a},{b})")))
    }

    fn dual_of(&self, a: &Value) -> Result<Value> {
        self.data
            .dual
            .get(a)
            .cloned()
            .ok_or_else(|| Error::eval(format!("dual table missing entry {a}")))
    }

    fn bang_of(&self, a: &Value) -> Result<Value> {
        self.data
            .bang
            .as_ref()
            .and_then(|t| t.get(a))
            .cloned()
            .ok_or_else(|| Error::eval(format!("model has no exponential table entry for {a}")))
    }

    /// Exhaustive load-time validation of every lineale axiom; reports the
    /// first failed law with a witness tuple.
    pub fn validate(&self) -> Result<()> {
        let d = &self.data;
        let els = &d.elements;
        let holds = |a: &Value, b: &Value| self.leq(a, b);

        for a in els {
            for b in els {
                if holds(a, b) && holds(b, a) && a != b {
                    return Err(Error::axiom("leq-antisymmetry", vec![a.clone(), b.clone()]));
                }
                for c in els {
                    if holds(a, b) && holds(b, c) && !holds(a, c) {
                        return Err(Error::axiom(
                            "leq-transitivity",
                            vec![a.clone(), b.clone(), c.clone()],
                        ));
                    }
                }
            }
        }

        for a in els {
            for b in els {
                match d.tensor.get(&(a.clone(), b.clone())) {
                    None => {
                        return Err(Error::axiom("tensor-totality", vec![a.clone(), b.clone()]))
                    }
                    Some(o) if !els.contains(o) => {
                        return Err(Error::axiom("tensor-closure", vec![a.clone(), b.clone()]))
                    }
                    _ => {}
                }
            }
        }

        let t = |a: &Value, b: &Value| self.tensor_of(a, b).unwrap();
        for a in els {
            for b in els {
                if t(a, b) != t(b, a) {
                    return Err(Error::axiom(
                        "tensor-commutativity",
                        vec![a.clone(), b.clone()],
                    ));
                }
                for c in els {
                    if t(&t(a, b), c) != t(a, &t(b, c)) {
                        return Err(Error::axiom(
                            "tensor-associativity",
                            vec![a.clone(), b.clone(), c.clone()],
                        ));
                    }
                }
            }
        }
        for a in els {
            if t(&d.unit, a) != *a {
                return Err(Error::axiom("tensor-unit", vec![a.clone()]));
            }
        }
        for a in els {
            for b in els {
                for c in els {
                    if holds(a, b) && !holds(&t(a, c), &t(b, c)) {
                        return Err(Error::axiom(
                            "tensor-monotone",
                            vec![a.clone(), b.clone(), c.clone()],
                        ));
                    }
                }
            }
        }

        for a in els {
            match d.dual.get(a) {
                None => return Err(Error::axiom("dual-totality", vec![a.clone()])),
                Some(o) if !els.contains(o) => {
                    return Err(Error::axiom("dual-closure", vec![a.clone()]))
                }
                _ => {}
            }
        }
        let dual = |a: &Value| self.dual_of(a).unwrap();
        for a in els {
            if dual(&dual(a)) != *a {
                return Err(Error::axiom("dual-involution", vec![a.clone()]));
            }
        }

        // hom(a⊗b, c^⊥) ≅ hom(a, (b⊗c)^⊥), which for a poset is an iff
        for a in els {
            for b in els {
                for c in els {
                    let lhs = holds(&t(a, b), &dual(c));
                    let rhs = holds(a, &dual(&t(b, c)));
                    if lhs != rhs {
                        return Err(Error::axiom(
                            "star-autonomy",
                            vec![a.clone(), b.clone(), c.clone()],
                        ));
                    }
                }
            }
        }

        if let Some(bang) = &d.bang {
            for a in els {
                match bang.get(a) {
                    None => return Err(Error::axiom("bang-totality", vec![a.clone()])),
                    Some(o) if !els.contains(o) => {
                        return Err(Error::axiom("bang-closure", vec![a.clone()]))
                    }
                    _ => {}
                }
            }
            let bg = |a: &Value| bang.get(a).unwrap().clone();
            // comonad laws for an interior operator
            for a in els {
                if !holds(&bg(a), a) {
                    return Err(Error::axiom("bang-counit", vec![a.clone()]));
                }
                if bg(&bg(a)) != bg(a) {
                    return Err(Error::axiom("bang-comultiplication", vec![a.clone()]));
                }
                for b in els {
                    if holds(a, b) && !holds(&bg(a), &bg(b)) {
                        return Err(Error::axiom("bang-monotone", vec![a.clone(), b.clone()]));
                    }
                }
            }
            let nl = d.nonlinear.as_ref().ok_or_else(|| {
                Error::axiom("exponential-lattice", vec![])
            })?;
            // L strong monoidal on fixed points: s ⊗ s' = !(s ∧ s')
            for s1 in nl.elements() {
                for s2 in nl.elements() {
                    let meet = nl.product(s1, s2)?;
                    if t(s1, s2) != meet {
                        return Err(Error::axiom(
                            "linearisation-strong-monoidal",
                            vec![s1.clone(), s2.clone()],
                        ));
                    }
                }
            }
            // M lax monoidal: M a ×ₛ M b ≤ M (a⊗b), and ⊤ₛ ≤ M 1
            for a in els {
                for b in els {
                    let ms = nl.product(&bg(a), &bg(b))?;
                    if !holds(&ms, &bg(&t(a, b))) {
                        return Err(Error::axiom(
                            "multiplication-lax-monoidal",
                            vec![a.clone(), b.clone()],
                        ));
                    }
                }
            }
            if !holds(&nl.terminal(), &bg(&d.unit)) {
                return Err(Error::axiom("multiplication-unit", vec![]));
            }
        }

        Ok(())
    }
}

impl Category for Lineale {
    type Obj = Value;
    type Mor = LMor;

    fn sample_objects(&self, cap: usize) -> Vec<Value> {
        self.data.elements.iter().take(cap).cloned().collect()
    }

    fn hom(&self, a: &Value, b: &Value) -> Result<Vec<LMor>> {
        Ok(if self.leq(a, b) { vec![LMor { src: a.clone(), dst: b.clone() }] } else { vec![] })
    }

    fn identity(&self, a: &Value) -> LMor {
        LMor { src: a.clone(), dst: a.clone() }
    }

    fn compose(&self, g: &LMor, f: &LMor) -> LMor {
        assert_eq!(f.dst, g.src, "posetal composition endpoint mismatch");
        LMor { src: f.src.clone(), dst: g.dst.clone() }
    }

    fn dom(&self, f: &LMor) -> Value {
        f.src.clone()
    }

    fn cod(&self, f: &LMor) -> Value {
        f.dst.clone()
    }

    fn is_valid_mor(&self, f: &LMor) -> bool {
        self.leq(&f.src, &f.dst)
    }
}

impl Model for Lineale {
    fn unit(&self) -> Value {
        self.data.unit.clone()
    }

    fn tensor(&self, a: &Value, b: &Value) -> Result<Value> {
        self.tensor_of(a, b)
    }

    fn tensor_mor(&self, f: &LMor, g: &LMor) -> Result<LMor> {
        Ok(LMor {
            src: self.tensor_of(&f.src, &g.src)?,
            dst: self.tensor_of(&f.dst, &g.dst)?,
        })
    }

    fn dual(&self, a: &Value) -> Value {
        self.dual_of(a).expect("dual table total on objects")
    }

    fn dual_mor(&self, f: &LMor) -> LMor {
        LMor { src: self.dual(&f.dst), dst: self.dual(&f.src) }
    }

    fn associator(&self, a: &Value, b: &Value, c: &Value) -> Result<LMor> {
        let ab = self.tensor_of(a, b)?;
        let bc = self.tensor_of(b, c)?;
        Ok(LMor { src: self.tensor_of(&ab, c)?, dst: self.tensor_of(a, &bc)? })
    }

    fn associator_inv(&self, a: &Value, b: &Value, c: &Value) -> Result<LMor> {
        let f = self.associator(a, b, c)?;
        Ok(LMor { src: f.dst, dst: f.src })
    }

    fn braiding(&self, a: &Value, b: &Value) -> Result<LMor> {
        Ok(LMor { src: self.tensor_of(a, b)?, dst: self.tensor_of(b, a)? })
    }

    fn left_unitor(&self, a: &Value) -> Result<LMor> {
        Ok(LMor { src: self.tensor_of(&self.data.unit, a)?, dst: a.clone() })
    }

    fn left_unitor_inv(&self, a: &Value) -> Result<LMor> {
        let f = self.left_unitor(a)?;
        Ok(LMor { src: f.dst, dst: f.src })
    }

    fn right_unitor(&self, a: &Value) -> Result<LMor> {
        Ok(LMor { src: self.tensor_of(a, &self.data.unit)?, dst: a.clone() })
    }

    fn right_unitor_inv(&self, a: &Value) -> Result<LMor> {
        let f = self.right_unitor(a)?;
        Ok(LMor { src: f.dst, dst: f.src })
    }

    fn has_products(&self) -> bool {
        self.data.meets.is_some()
            && self.data.joins.is_some()
            && self.data.top.is_some()
            && self.data.bottom.is_some()
    }

    fn top(&self) -> Result<Value> {
        self.data.top.clone().ok_or_else(|| Error::eval("lineale has no top element"))
    }

    fn zero(&self) -> Result<Value> {
        self.data.bottom.clone().ok_or_else(|| Error::eval("lineale has no bottom element"))
    }

    fn with(&self, a: &Value, b: &Value) -> Result<Value> {
        self.data
            .meets
            .as_ref()
            .and_then(|m| m.get(&(a.clone(), b.clone())).cloned())
            .ok_or_else(|| Error::eval(format!("lineale has no meet of {a} and {b}")))
    }

    fn plus(&self, a: &Value, b: &Value) -> Result<Value> {
        self.data
            .joins
            .as_ref()
            .and_then(|j| j.get(&(a.clone(), b.clone())).cloned())
            .ok_or_else(|| Error::eval(format!("lineale has no join of {a} and {b}")))
    }

    fn with_proj_left(&self, a: &Value, b: &Value) -> Result<LMor> {
        Ok(LMor { src: self.with(a, b)?, dst: a.clone() })
    }

    fn with_proj_right(&self, a: &Value, b: &Value) -> Result<LMor> {
        Ok(LMor { src: self.with(a, b)?, dst: b.clone() })
    }

    fn with_pairing(&self, f: &LMor, g: &LMor) -> Result<LMor> {
        Ok(LMor { src: f.src.clone(), dst: self.with(&f.dst, &g.dst)? })
    }

    fn to_top(&self, a: &Value) -> Result<LMor> {
        Ok(LMor { src: a.clone(), dst: self.top()? })
    }

    fn plus_inj_left(&self, a: &Value, b: &Value) -> Result<LMor> {
        Ok(LMor { src: a.clone(), dst: self.plus(a, b)? })
    }

    fn plus_inj_right(&self, a: &Value, b: &Value) -> Result<LMor> {
        Ok(LMor { src: b.clone(), dst: self.plus(a, b)? })
    }

    fn plus_copairing(&self, f: &LMor, g: &LMor) -> Result<LMor> {
        Ok(LMor { src: self.plus(&f.src, &g.src)?, dst: f.dst.clone() })
    }

    fn from_zero(&self, a: &Value) -> Result<LMor> {
        Ok(LMor { src: self.zero()?, dst: a.clone() })
    }

    fn has_exponential(&self) -> bool {
        self.data.bang.is_some() && self.data.nonlinear.is_some()
    }

    type NonLinear = Poset;

    fn nonlinear(&self) -> Result<&Poset> {
        self.data
            .nonlinear
            .as_ref()
            .ok_or_else(|| Error::eval("lineale has no exponential structure"))
    }

    fn m_obj(&self, r: &Value) -> Result<Value> {
        self.bang_of(r)
    }

    fn m_mor(&self, f: &LMor) -> Result<LMor> {
        Ok(LMor { src: self.bang_of(&f.src)?, dst: self.bang_of(&f.dst)? })
    }

    fn l_obj(&self, s: &Value) -> Result<Value> {
        Ok(s.clone())
    }

    fn l_mor(&self, f: &LMor) -> Result<LMor> {
        Ok(f.clone())
    }

    fn transpose_in(&self, psi: &LMor, s: &Value, r: &Value) -> Result<LMor> {
        debug_assert_eq!(&psi.src, s);
        debug_assert_eq!(&psi.dst, r);
        Ok(LMor { src: s.clone(), dst: self.bang_of(r)? })
    }

    fn transpose_out(&self, phi: &LMor, s: &Value, r: &Value) -> Result<LMor> {
        debug_assert_eq!(&phi.src, s);
        Ok(LMor { src: s.clone(), dst: r.clone() })
    }

    fn l_monoidal(&self, s1: &Value, s2: &Value) -> Result<LMor> {
        let nl = self.nonlinear()?;
        Ok(LMor { src: self.tensor_of(s1, s2)?, dst: nl.product(s1, s2)? })
    }

    fn l_monoidal_inv(&self, s1: &Value, s2: &Value) -> Result<LMor> {
        let f = self.l_monoidal(s1, s2)?;
        Ok(LMor { src: f.dst, dst: f.src })
    }

    fn l_unit(&self) -> Result<LMor> {
        let nl = self.nonlinear()?;
        Ok(LMor { src: self.data.unit.clone(), dst: nl.terminal() })
    }

    fn l_unit_inv(&self) -> Result<LMor> {
        let f = self.l_unit()?;
        Ok(LMor { src: f.dst, dst: f.src })
    }

    fn m_monoidal(&self, r1: &Value, r2: &Value) -> Result<LMor> {
        let nl = self.nonlinear()?;
        Ok(LMor {
            src: nl.product(&self.bang_of(r1)?, &self.bang_of(r2)?)?,
            dst: self.bang_of(&self.tensor_of(r1, r2)?)?,
        })
    }

    fn m_unit(&self) -> Result<LMor> {
        let nl = self.nonlinear()?;
        Ok(LMor { src: nl.terminal(), dst: self.bang_of(&self.data.unit)? })
    }

    fn truncation_complete(&self) -> bool {
        self.data.tensor_is_meet
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_order_and_duals() {
        let b = boolean_lineale();
        let zero = Value::atom("0");
        let one = Value::atom("1");
        assert_eq!(b.hom(&zero, &one).unwrap().len(), 1);
        assert_eq!(b.hom(&one, &zero).unwrap().len(), 0);
        for x in [&zero, &one] {
            assert_eq!(b.dual(&b.dual(x)), *x);
        }
        assert_eq!(b.tensor(&one, &zero).unwrap(), zero);
        assert!(b.has_products());
        assert!(b.has_exponential());
        assert!(b.truncation_complete());
    }

    #[test]
    fn boolean_bang_is_identity() {
        let b = boolean_lineale();
        for x in b.elements().to_vec() {
            assert_eq!(b.bang(&x).unwrap(), x);
        }
        assert_eq!(b.nonlinear().unwrap().elements().len(), 2);
    }

    #[test]
    fn broken_associativity_is_detected() {
        // commutative, unital, but (a⊗a)⊗b = c⊗b = b while a⊗(a⊗b) = a⊗c = a
        let cfg = r#"{
            "elements": ["a", "b", "c"],
            "leq": [["a","b"], ["b","c"], ["a","c"]],
            "tensor": {"a,a": "c", "a,b": "c", "a,c": "a",
                       "b,a": "c", "b,b": "c", "b,c": "b",
                       "c,a": "a", "c,b": "b", "c,c": "c"},
            "unit": "c",
            "dual": {"a": "c", "b": "b", "c": "a"}
        }"#;
        let err = load_finite_lineale(cfg).unwrap_err();
        match err {
            Error::AxiomViolation { law, witness } => {
                assert_eq!(law, "tensor-associativity");
                assert_eq!(
                    witness,
                    vec![Value::atom("a"), Value::atom("a"), Value::atom("b")]
                );
            }
            other => panic!("expected associativity violation, got {other}"),
        }
    }

    #[test]
    fn unknown_fields_rejected() {
        let cfg = r#"{
            "elements": ["a"], "leq": [], "tensor": {"a,a": "a"},
            "unit": "a", "dual": {"a": "a"}, "extra": 1
        }"#;
        assert!(matches!(load_finite_lineale(cfg), Err(Error::Config(_))));
    }
}
