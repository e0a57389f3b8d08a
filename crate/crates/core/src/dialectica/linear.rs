use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dialectica::intuitionistic::DialIntModel;
use crate::dialectica::{DialMorphism, DialObject};
use crate::error::{Error, Result};
use crate::finset::{EffectiveSet, FiniteFunction, Limits, TotalMap, Value};
use crate::model::{Category, Model};

pub(crate) type DObj<B> = DialObject<<B as Category>::Obj>;
pub(crate) type DMor<B> = DialMorphism<<B as Category>::Obj, <B as Category>::Mor>;

/// The linear dialectica transformation of a base model, itself a model:
/// objects are double-indexed families, morphisms are bid-function triples,
/// and every connective of the interpretation table is realised on the
/// witness/counter-witness sets.
pub struct DialModel<B: Model> {
    base: B,
    nl: Option<DialIntModel<B::NonLinear>>,
    limits: Limits,
}

impl<B: Model> Clone for DialModel<B> {
    fn clone(&self) -> Self {
        DialModel { base: self.base.clone(), nl: self.nl.clone(), limits: self.limits }
    }
}

impl<B: Model> fmt::Debug for DialModel<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DialModel(bound={})", self.limits.multiset_bound)
    }
}

/// The linear dialectica transformation `𝔇ₗ`.
pub fn dial_linear<B: Model>(base: B, limits: Limits) -> DialModel<B> {
    DialModel::new(base, limits)
}

/// Tabulate a rule over an enumerated set into a function value.
pub(crate) fn table_value(
    dom: &EffectiveSet,
    mut f: impl FnMut(&Value) -> Result<Value>,
) -> Result<Value> {
    let mut t = BTreeMap::new();
    for d in dom.elements() {
        t.insert(d.clone(), f(d)?);
    }
    Ok(Value::table(t))
}

/// Odometer over mixed-radix digits; yields every index vector in
/// lexicographic order with the last position fastest.
pub(crate) struct Odometer {
    sizes: Vec<usize>,
    digits: Vec<usize>,
    done: bool,
}

impl Odometer {
    pub(crate) fn new(sizes: Vec<usize>) -> Self {
        let done = sizes.iter().any(|&s| s == 0);
        let digits = vec![0; sizes.len()];
        Odometer { sizes, digits, done }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.digits.clone();
        let mut pos = self.digits.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.digits[pos] += 1;
            if self.digits[pos] < self.sizes[pos] {
                break;
            }
            self.digits[pos] = 0;
            if pos == 0 {
                self.done = true;
                break;
            }
        }
        Some(out)
    }
}

/// The per-pair hom grid: enumerated base hom-sets for every index
/// combination, plus everything the search engine derives from them.
struct HomGrid<B: Model> {
    src_wit: Vec<Value>,
    src_cowit: Vec<Value>,
    dst_wit: Vec<Value>,
    dst_cowit: Vec<Value>,
    /// `cells[((x·ny + y)·nu + u)·nv + v]` = base hom from `src(x,y)` to
    /// `dst(u,v)`.
    cells: Vec<Vec<B::Mor>>,
}

impl<B: Model> HomGrid<B> {
    fn build(base: &B, src: &DObj<B>, dst: &DObj<B>) -> Result<Self> {
        let src_wit = src.wit().elements().to_vec();
        let src_cowit = src.cowit().elements().to_vec();
        let dst_wit = dst.wit().elements().to_vec();
        let dst_cowit = dst.cowit().elements().to_vec();
        let mut cells =
            Vec::with_capacity(src_wit.len() * src_cowit.len() * dst_wit.len() * dst_cowit.len());
        for x in &src_wit {
            for y in &src_cowit {
                let s = src.at(x, y)?;
                for u in &dst_wit {
                    for v in &dst_cowit {
                        let d = dst.at(u, v)?;
                        cells.push(base.hom(&s, &d)?);
                    }
                }
            }
        }
        Ok(HomGrid { src_wit, src_cowit, dst_wit, dst_cowit, cells })
    }

    fn cell(&self, x: usize, y: usize, u: usize, v: usize) -> &Vec<B::Mor> {
        let ny = self.src_cowit.len();
        let nu = self.dst_wit.len();
        let nv = self.dst_cowit.len();
        &self.cells[((x * ny + y) * nu + u) * nv + v]
    }

    /// For a fixed forward bid table, the per-`v` options: counter-bids `y`
    /// whose every strategy slot is inhabited.
    fn options_for(&self, f_digits: &[usize], v: usize) -> Vec<usize> {
        (0..self.src_cowit.len())
            .filter(|&y| {
                (0..self.src_wit.len()).all(|x| !self.cell(x, y, f_digits[x], v).is_empty())
            })
            .collect()
    }
}

impl<B: Model> DialModel<B> {
    pub fn new(base: B, limits: Limits) -> Self {
        let nl = if base.has_exponential() {
            base.nonlinear().ok().map(|s| DialIntModel::new(s.clone(), limits))
        } else {
            None
        };
        DialModel { base, nl, limits }
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    fn f_space_size(&self, nx: usize, nu: usize) -> Result<u128> {
        let mut needed: u128 = 1;
        for _ in 0..nx {
            needed = needed.saturating_mul(nu as u128);
            if needed > self.limits.max_set as u128 {
                return Err(Error::budget("forward bid space", needed, self.limits.max_set));
            }
        }
        Ok(needed)
    }

    /// The strategy component of a morphism at a pair of bids, recovering
    /// off-enumeration components by base hom search when the stored table
    /// misses (sound for posetal bases, where components are unique).
    pub fn strategy_component(&self, m: &DMor<B>, x: &Value, v: &Value) -> Result<B::Mor> {
        if let Some(a) = m.alpha_get(x, v) {
            return Ok(a);
        }
        let gv = m.bwd.apply(v)?;
        let src_o = m.src.at(x, &gv)?;
        let dst_o = m.dst.at(&m.fwd.apply(x)?, v)?;
        self.base.hom_first(&src_o, &dst_o)?.ok_or_else(|| {
            Error::ContractViolation(format!(
                "no base morphism exists for the off-enumeration component at ({x},{v})"
            ))
        })
    }

    fn assemble(
        &self,
        src: &DObj<B>,
        dst: &DObj<B>,
        grid: &HomGrid<B>,
        f_digits: &[usize],
        g_digits: &[usize],
        alpha_pick: impl Fn(usize, usize) -> usize,
    ) -> DMor<B> {
        let fwd_table: BTreeMap<Value, Value> = grid
            .src_wit
            .iter()
            .zip(f_digits)
            .map(|(x, &u)| (x.clone(), grid.dst_wit[u].clone()))
            .collect();
        let fwd = FiniteFunction::new(src.wit().clone(), dst.wit().clone(), fwd_table)
            .expect("forward bid table is total by construction");
        let bwd_table: BTreeMap<Value, Value> = grid
            .dst_cowit
            .iter()
            .zip(g_digits)
            .map(|(v, &y)| (v.clone(), grid.src_cowit[y].clone()))
            .collect();
        let bwd = FiniteFunction::new(dst.cowit().clone(), src.cowit().clone(), bwd_table)
            .expect("backward bid table is total by construction");
        let mut alpha = BTreeMap::new();
        for (xi, x) in grid.src_wit.iter().enumerate() {
            for (vi, v) in grid.dst_cowit.iter().enumerate() {
                let cell = grid.cell(xi, g_digits[vi], f_digits[xi], vi);
                alpha.insert((x.clone(), v.clone()), cell[alpha_pick(xi, vi)].clone());
            }
        }
        DialMorphism::new(src.clone(), dst.clone(), fwd, bwd, alpha)
    }

    fn hom_impl(
        &self,
        src: &DObj<B>,
        dst: &DObj<B>,
        first_only: bool,
    ) -> Result<Vec<DMor<B>>> {
        let grid = HomGrid::build(&self.base, src, dst)?;
        let nx = grid.src_wit.len();
        let nu = grid.dst_wit.len();
        let nv = grid.dst_cowit.len();
        self.f_space_size(nx, nu)?;
        if !first_only {
            let count = self.hom_count_impl(src, dst)?;
            if count > self.limits.max_set as u128 {
                return Err(Error::budget("hom enumeration", count, self.limits.max_set));
            }
        }
        let mut out = Vec::new();
        'f_loop: for f_digits in Odometer::new(vec![nu; nx]) {
            let options: Vec<Vec<usize>> =
                (0..nv).map(|v| grid.options_for(&f_digits, v)).collect();
            if options.iter().any(|o| o.is_empty()) {
                continue 'f_loop;
            }
            if first_only {
                let g_digits: Vec<usize> = options.iter().map(|o| o[0]).collect();
                out.push(self.assemble(src, dst, &grid, &f_digits, &g_digits, |_, _| 0));
                return Ok(out);
            }
            for g_choice in Odometer::new(options.iter().map(|o| o.len()).collect()) {
                let g_digits: Vec<usize> =
                    g_choice.iter().zip(&options).map(|(&i, o)| o[i]).collect();
                // strategy slots (x, v) enumerate independently
                let slot_sizes: Vec<usize> = (0..nx)
                    .flat_map(|x| {
                        let f_digits = &f_digits;
                        let g_digits = &g_digits;
                        let grid = &grid;
                        (0..nv)
                            .map(move |v| grid.cell(x, g_digits[v], f_digits[x], v).len())
                    })
                    .collect();
                for alpha_digits in Odometer::new(slot_sizes) {
                    out.push(self.assemble(src, dst, &grid, &f_digits, &g_digits, |x, v| {
                        alpha_digits[x * nv + v]
                    }));
                }
            }
        }
        Ok(out)
    }

    fn hom_count_impl(&self, src: &DObj<B>, dst: &DObj<B>) -> Result<u128> {
        let grid = HomGrid::build(&self.base, src, dst)?;
        let nx = grid.src_wit.len();
        let ny = grid.src_cowit.len();
        let nu = grid.dst_wit.len();
        let nv = grid.dst_cowit.len();
        self.f_space_size(nx, nu)?;
        let mut total: u128 = 0;
        for f_digits in Odometer::new(vec![nu; nx]) {
            let mut per_f: u128 = 1;
            for v in 0..nv {
                let mut per_v: u128 = 0;
                for y in 0..ny {
                    let mut per_y: u128 = 1;
                    for x in 0..nx {
                        per_y =
                            per_y.saturating_mul(grid.cell(x, y, f_digits[x], v).len() as u128);
                    }
                    per_v = per_v.saturating_add(per_y);
                }
                per_f = per_f.saturating_mul(per_v);
            }
            total = total.saturating_add(per_f);
        }
        Ok(total)
    }
}

impl<B: Model> Category for DialModel<B> {
    type Obj = DObj<B>;
    type Mor = DMor<B>;

    /// Every object with named index sets of size ≤ 2 and family values
    /// drawn from the base sample, enumerated when that fits in `cap` and
    /// deterministically subsampled otherwise.
    fn sample_objects(&self, cap: usize) -> Vec<DObj<B>> {
        let base_objs = self.base.sample_objects(30);
        if base_objs.is_empty() {
            return Vec::new();
        }
        let shapes: [(usize, usize); 8] =
            [(0, 1), (1, 0), (1, 1), (0, 2), (2, 0), (1, 2), (2, 1), (2, 2)];
        let nb = base_objs.len() as u128;
        let total: u128 = shapes.iter().map(|&(w, c)| nb.saturating_pow((w * c) as u32)).sum();
        let mut out = Vec::new();
        if total <= cap as u128 {
            for &(w, c) in &shapes {
                let wit = EffectiveSet::canonical(w, "w");
                let cowit = EffectiveSet::canonical(c, "c");
                let grid: Vec<(Value, Value)> = wit
                    .elements()
                    .iter()
                    .flat_map(|x| {
                        cowit.elements().iter().map(move |y| (x.clone(), y.clone()))
                    })
                    .collect();
                for pick in Odometer::new(vec![base_objs.len(); grid.len()]) {
                    let table: BTreeMap<(Value, Value), B::Obj> = grid
                        .iter()
                        .zip(&pick)
                        .map(|(k, &i)| (k.clone(), base_objs[i].clone()))
                        .collect();
                    out.push(
                        DialObject::new(wit.clone(), cowit.clone(), table)
                            .expect("index sets are not both empty"),
                    );
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            while out.len() < cap {
                let (w, c) = shapes[rng.random_range(0..shapes.len())];
                let wit = EffectiveSet::canonical(w, "w");
                let cowit = EffectiveSet::canonical(c, "c");
                let mut table = BTreeMap::new();
                for x in wit.elements() {
                    for y in cowit.elements() {
                        table.insert(
                            (x.clone(), y.clone()),
                            base_objs[rng.random_range(0..base_objs.len())].clone(),
                        );
                    }
                }
                let obj = DialObject::new(wit, cowit, table).expect("not both empty");
                if !out.contains(&obj) {
                    out.push(obj);
                }
            }
        }
        out
    }

    fn hom(&self, a: &DObj<B>, b: &DObj<B>) -> Result<Vec<DMor<B>>> {
        self.hom_impl(a, b, false)
    }

    fn hom_count(&self, a: &DObj<B>, b: &DObj<B>) -> Result<u64> {
        Ok(self.hom_count_impl(a, b)?.min(u64::MAX as u128) as u64)
    }

    fn hom_first(&self, a: &DObj<B>, b: &DObj<B>) -> Result<Option<DMor<B>>> {
        Ok(self.hom_impl(a, b, true)?.into_iter().next())
    }

    fn identity(&self, a: &DObj<B>) -> DMor<B> {
        let fwd = FiniteFunction::identity(a.wit());
        let bwd = FiniteFunction::identity(a.cowit());
        let mut alpha = BTreeMap::new();
        for x in a.wit().elements() {
            for v in a.cowit().elements() {
                let o = a.at(x, v).expect("family is total on the enumerated grid");
                alpha.insert((x.clone(), v.clone()), self.base.identity(&o));
            }
        }
        let base = self.base.clone();
        let a2 = a.clone();
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| {
            a2.at(x, v).ok().map(|o| base.identity(&o))
        });
        DialMorphism { src: a.clone(), dst: a.clone(), fwd, bwd, alpha }
    }

    fn compose(&self, g: &DMor<B>, f: &DMor<B>) -> DMor<B> {
        assert_eq!(f.dst, g.src, "dialectica composition endpoint mismatch");
        let fwd = FiniteFunction::compose(&g.fwd, &f.fwd)
            .expect("forward bids compose on the enumerated witness set");
        let bwd = FiniteFunction::compose(&f.bwd, &g.bwd)
            .expect("backward bids compose on the enumerated counter-witness set");
        let model = self.clone();
        let f2 = f.clone();
        let g2 = g.clone();
        let rule = move |x: &Value, q: &Value| -> Result<B::Mor> {
            let mid = g2.bwd.apply(q)?;
            let a = model.strategy_component(&f2, x, &mid)?;
            let b = model.strategy_component(&g2, &f2.fwd.apply(x)?, q)?;
            Ok(model.base.compose(&b, &a))
        };
        let mut alpha = BTreeMap::new();
        for x in f.src.wit().elements() {
            for q in g.dst.cowit().elements() {
                alpha.insert(
                    (x.clone(), q.clone()),
                    rule(x, q).expect("composite strategy exists on the enumerated grid"),
                );
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, q): &(Value, Value)| rule(x, q).ok());
        DialMorphism { src: f.src.clone(), dst: g.dst.clone(), fwd, bwd, alpha }
    }

    fn dom(&self, f: &DMor<B>) -> DObj<B> {
        f.src.clone()
    }

    fn cod(&self, f: &DMor<B>) -> DObj<B> {
        f.dst.clone()
    }

    fn is_valid_mor(&self, m: &DMor<B>) -> bool {
        if m.fwd.domain() != m.src.wit()
            || m.fwd.codomain() != m.dst.wit()
            || m.bwd.domain() != m.dst.cowit()
            || m.bwd.codomain() != m.src.cowit()
        {
            return false;
        }
        for x in m.src.wit().elements() {
            let Ok(fx) = m.fwd.apply(x) else { return false };
            if !m.dst.wit().contains(&fx) {
                return false;
            }
            for v in m.dst.cowit().elements() {
                let Ok(gv) = m.bwd.apply(v) else { return false };
                if !m.src.cowit().contains(&gv) {
                    return false;
                }
                let (Ok(so), Ok(do_)) = (m.src.at(x, &gv), m.dst.at(&fx, v)) else {
                    return false;
                };
                let Some(a) = m.alpha_get(x, v) else { return false };
                if !self.base.is_valid_mor(&a)
                    || self.base.dom(&a) != so
                    || self.base.cod(&a) != do_
                {
                    return false;
                }
            }
        }
        true
    }
}

impl<B: Model> Model for DialModel<B> {
    fn unit(&self) -> DObj<B> {
        let base = self.base.clone();
        DialObject::from_rule(EffectiveSet::unit(), EffectiveSet::unit(), move |_, _| {
            Ok(base.unit())
        })
        .expect("singleton index sets")
    }

    fn tensor(&self, a: &DObj<B>, b: &DObj<B>) -> Result<DObj<B>> {
        let wit = EffectiveSet::product(a.wit(), b.wit(), &self.limits)?;
        let left = EffectiveSet::function_space(b.wit(), a.cowit(), &self.limits)?;
        let right = EffectiveSet::function_space(a.wit(), b.cowit(), &self.limits)?;
        let cowit = EffectiveSet::product(&left, &right, &self.limits)?;
        let (a2, b2, base) = (a.clone(), b.clone(), self.base.clone());
        DialObject::from_rule(wit, cowit, move |xu, fg| {
            let (x, u) = xu.as_pair()?;
            let (f, g) = fg.as_pair()?;
            let av = a2.at(x, &f.apply(u)?)?;
            let bv = b2.at(u, &g.apply(x)?)?;
            base.tensor(&av, &bv)
        })
    }

    fn tensor_mor(&self, m1: &DMor<B>, m2: &DMor<B>) -> Result<DMor<B>> {
        let src = self.tensor(&m1.src, &m2.src)?;
        let dst = self.tensor(&m1.dst, &m2.dst)?;
        let (n1, n2) = (m1.clone(), m2.clone());
        let fwd = FiniteFunction::from_rule(src.wit().clone(), dst.wit().clone(), move |xu| {
            let (x, u) = xu.as_pair()?;
            Ok(Value::pair(n1.fwd.apply(x)?, n2.fwd.apply(u)?))
        })?;
        let (n1, n2) = (m1.clone(), m2.clone());
        let (sw1, sw2) = (m1.src.wit().clone(), m2.src.wit().clone());
        let bwd = FiniteFunction::from_rule(dst.cowit().clone(), src.cowit().clone(), move |fk| {
            let (fv, kv) = fk.as_pair()?;
            let f_tab = table_value(&sw2, |u| n1.bwd.apply(&fv.apply(&n2.fwd.apply(u)?)?))?;
            let k_tab = table_value(&sw1, |x| n2.bwd.apply(&kv.apply(&n1.fwd.apply(x)?)?))?;
            Ok(Value::pair(f_tab, k_tab))
        })?;
        let model = self.clone();
        let (n1, n2) = (m1.clone(), m2.clone());
        let rule = move |xu: &Value, fk: &Value| -> Result<B::Mor> {
            let (x, u) = xu.as_pair()?;
            let (fv, kv) = fk.as_pair()?;
            let a1 = model.strategy_component(&n1, x, &fv.apply(&n2.fwd.apply(u)?)?)?;
            let a2 = model.strategy_component(&n2, u, &kv.apply(&n1.fwd.apply(x)?)?)?;
            model.base.tensor_mor(&a1, &a2)
        };
        let mut alpha = BTreeMap::new();
        for x in src.wit().elements() {
            for v in dst.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src, dst, fwd, bwd, alpha })
    }

    fn dual(&self, a: &DObj<B>) -> DObj<B> {
        let base = self.base.clone();
        a.swap_indices(Arc::new(move |o: &B::Obj| base.dual(o)))
    }

    fn dual_mor(&self, m: &DMor<B>) -> DMor<B> {
        let src = self.dual(&m.dst);
        let dst = self.dual(&m.src);
        let model = self.clone();
        let m2 = m.clone();
        let rule = move |v: &Value, x: &Value| -> Result<B::Mor> {
            Ok(model.base.dual_mor(&model.strategy_component(&m2, x, v)?))
        };
        let mut alpha = BTreeMap::new();
        for v in src.wit().elements() {
            for x in dst.cowit().elements() {
                alpha.insert(
                    (v.clone(), x.clone()),
                    rule(v, x).expect("dual components exist on the enumerated grid"),
                );
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(v, x): &(Value, Value)| rule(v, x).ok());
        DialMorphism { src, dst, fwd: m.bwd.clone(), bwd: m.fwd.clone(), alpha }
    }

    fn associator(&self, a: &DObj<B>, b: &DObj<B>, c: &DObj<B>) -> Result<DMor<B>> {
        let src = self.tensor(&self.tensor(a, b)?, c)?;
        let dst = self.tensor(a, &self.tensor(b, c)?)?;
        let fwd = FiniteFunction::from_rule(src.wit().clone(), dst.wit().clone(), |xup| {
            let (xu, p) = xup.as_pair()?;
            let (x, u) = xu.as_pair()?;
            Ok(Value::pair(x.clone(), Value::pair(u.clone(), p.clone())))
        })?;
        // counter-bids of a⊗(b⊗c): (F₁ : U×P → Y, F₂ : X → (P→V)×(U→Q))
        // map to those of (a⊗b)⊗c: (K₁ : P → (U→Y)×(X→V), K₂ : X×U → Q)
        let (wa, wb, wc) = (a.wit().clone(), b.wit().clone(), c.wit().clone());
        let wab = EffectiveSet::product(&wa, &wb, &self.limits)?;
        let bwd = FiniteFunction::from_rule(dst.cowit().clone(), src.cowit().clone(), {
            let (wa, wb, wc, wab) = (wa.clone(), wb.clone(), wc.clone(), wab.clone());
            move |ff| {
                let (f1, f2) = ff.as_pair()?;
                let k1 = table_value(&wc, |p| {
                    let ys = table_value(&wb, |u| f1.apply(&Value::pair(u.clone(), p.clone())))?;
                    let vs = table_value(&wa, |x| f2.apply(x)?.as_pair().map(|(l, _)| l.clone())?.apply(p))?;
                    Ok(Value::pair(ys, vs))
                })?;
                let k2 = table_value(&wab, |xu| {
                    let (x, u) = xu.as_pair()?;
                    f2.apply(x)?.as_pair().map(|(_, r)| r.clone())?.apply(u)
                })?;
                Ok(Value::pair(k1, k2))
            }
        })?;
        let model = self.clone();
        let (a2, b2, c2) = (a.clone(), b.clone(), c.clone());
        let rule = move |xup: &Value, ff: &Value| -> Result<B::Mor> {
            let (xu, p) = xup.as_pair()?;
            let (x, u) = xu.as_pair()?;
            let (f1, f2) = ff.as_pair()?;
            let (f2a, f2b) = f2.apply(x)?.as_pair().map(|(l, r)| (l.clone(), r.clone()))?;
            let ga = a2.at(x, &f1.apply(&Value::pair(u.clone(), p.clone()))?)?;
            let gb = b2.at(u, &f2a.apply(p)?)?;
            let gc = c2.at(p, &f2b.apply(u)?)?;
            model.base.associator(&ga, &gb, &gc)
        };
        let mut alpha = BTreeMap::new();
        for x in src.wit().elements() {
            for v in dst.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src, dst, fwd, bwd, alpha })
    }

    fn associator_inv(&self, a: &DObj<B>, b: &DObj<B>, c: &DObj<B>) -> Result<DMor<B>> {
        let src = self.tensor(a, &self.tensor(b, c)?)?;
        let dst = self.tensor(&self.tensor(a, b)?, c)?;
        let fwd = FiniteFunction::from_rule(src.wit().clone(), dst.wit().clone(), |xup| {
            let (x, up) = xup.as_pair()?;
            let (u, p) = up.as_pair()?;
            Ok(Value::pair(Value::pair(x.clone(), u.clone()), p.clone()))
        })?;
        let (wa, wb, wc) = (a.wit().clone(), b.wit().clone(), c.wit().clone());
        let wbc = EffectiveSet::product(&wb, &wc, &self.limits)?;
        let bwd = FiniteFunction::from_rule(dst.cowit().clone(), src.cowit().clone(), {
            let (wa, wb, wc, wbc) = (wa.clone(), wb.clone(), wc.clone(), wbc.clone());
            move |kk| {
                let (k1, k2) = kk.as_pair()?;
                let f1 = table_value(&wbc, |up| {
                    let (u, p) = up.as_pair()?;
                    k1.apply(p)?.as_pair().map(|(l, _)| l.clone())?.apply(u)
                })?;
                let f2 = table_value(&wa, |x| {
                    let vs = table_value(&wc, |p| {
                        k1.apply(p)?.as_pair().map(|(_, r)| r.clone())?.apply(x)
                    })?;
                    let qs = table_value(&wb, |u| k2.apply(&Value::pair(x.clone(), u.clone())))?;
                    Ok(Value::pair(vs, qs))
                })?;
                Ok(Value::pair(f1, f2))
            }
        })?;
        let model = self.clone();
        let (a2, b2, c2) = (a.clone(), b.clone(), c.clone());
        let rule = move |xup: &Value, kk: &Value| -> Result<B::Mor> {
            let (x, up) = xup.as_pair()?;
            let (u, p) = up.as_pair()?;
            let (k1, k2) = kk.as_pair()?;
            let (k1a, k1b) = k1.apply(p)?.as_pair().map(|(l, r)| (l.clone(), r.clone()))?;
            let ga = a2.at(x, &k1a.apply(u)?)?;
            let gb = b2.at(u, &k1b.apply(x)?)?;
            let gc = c2.at(p, &k2.apply(&Value::pair(x.clone(), u.clone()))?)?;
            model.base.associator_inv(&ga, &gb, &gc)
        };
        let mut alpha = BTreeMap::new();
        for x in src.wit().elements() {
            for v in dst.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src, dst, fwd, bwd, alpha })
    }

    fn braiding(&self, a: &DObj<B>, b: &DObj<B>) -> Result<DMor<B>> {
        let src = self.tensor(a, b)?;
        let dst = self.tensor(b, a)?;
        let fwd = FiniteFunction::from_rule(src.wit().clone(), dst.wit().clone(), |xu| {
            let (x, u) = xu.as_pair()?;
            Ok(Value::pair(u.clone(), x.clone()))
        })?;
        let bwd = FiniteFunction::from_rule(dst.cowit().clone(), src.cowit().clone(), |gf| {
            let (g, f) = gf.as_pair()?;
            Ok(Value::pair(f.clone(), g.clone()))
        })?;
        let model = self.clone();
        let (a2, b2) = (a.clone(), b.clone());
        let rule = move |xu: &Value, gf: &Value| -> Result<B::Mor> {
            let (x, u) = xu.as_pair()?;
            let (g, f) = gf.as_pair()?;
            let ga = a2.at(x, &f.apply(u)?)?;
            let gb = b2.at(u, &g.apply(x)?)?;
            model.base.braiding(&ga, &gb)
        };
        let mut alpha = BTreeMap::new();
        for x in src.wit().elements() {
            for v in dst.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src, dst, fwd, bwd, alpha })
    }

    fn left_unitor(&self, a: &DObj<B>) -> Result<DMor<B>> {
        let one = self.unit();
        let src = self.tensor(&one, a)?;
        let fwd = FiniteFunction::from_rule(src.wit().clone(), a.wit().clone(), |sx| {
            Ok(sx.as_pair()?.1.clone())
        })?;
        let unit_set = EffectiveSet::unit();
        let aw = a.wit().clone();
        let bwd = FiniteFunction::from_rule(a.cowit().clone(), src.cowit().clone(), move |y| {
            let f = table_value(&aw, |_| Ok(Value::Unit))?;
            let g = table_value(&unit_set, |_| Ok(y.clone()))?;
            Ok(Value::pair(f, g))
        })?;
        let model = self.clone();
        let a2 = a.clone();
        let rule = move |sx: &Value, y: &Value| -> Result<B::Mor> {
            let (_, x) = sx.as_pair()?;
            model.base.left_unitor(&a2.at(x, y)?)
        };
        let mut alpha = BTreeMap::new();
        for x in src.wit().elements() {
            for v in a.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src, dst: a.clone(), fwd, bwd, alpha })
    }

    fn left_unitor_inv(&self, a: &DObj<B>) -> Result<DMor<B>> {
        let one = self.unit();
        let dst = self.tensor(&one, a)?;
        let fwd = FiniteFunction::from_rule(a.wit().clone(), dst.wit().clone(), |x| {
            Ok(Value::pair(Value::Unit, x.clone()))
        })?;
        let bwd = FiniteFunction::from_rule(dst.cowit().clone(), a.cowit().clone(), |fg| {
            fg.as_pair()?.1.apply(&Value::Unit)
        })?;
        let model = self.clone();
        let a2 = a.clone();
        let rule = move |x: &Value, fg: &Value| -> Result<B::Mor> {
            let (_, g) = fg.as_pair()?;
            model.base.left_unitor_inv(&a2.at(x, &g.apply(&Value::Unit)?)?)
        };
        let mut alpha = BTreeMap::new();
        for x in a.wit().elements() {
            for v in dst.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src: a.clone(), dst, fwd, bwd, alpha })
    }

    fn right_unitor(&self, a: &DObj<B>) -> Result<DMor<B>> {
        let one = self.unit();
        let src = self.tensor(a, &one)?;
        let fwd = FiniteFunction::from_rule(src.wit().clone(), a.wit().clone(), |xs| {
            Ok(xs.as_pair()?.0.clone())
        })?;
        let unit_set = EffectiveSet::unit();
        let aw = a.wit().clone();
        let bwd = FiniteFunction::from_rule(a.cowit().clone(), src.cowit().clone(), move |y| {
            let f = table_value(&unit_set, |_| Ok(y.clone()))?;
            let g = table_value(&aw, |_| Ok(Value::Unit))?;
            Ok(Value::pair(f, g))
        })?;
        let model = self.clone();
        let a2 = a.clone();
        let rule = move |xs: &Value, y: &Value| -> Result<B::Mor> {
            let (x, _) = xs.as_pair()?;
            model.base.right_unitor(&a2.at(x, y)?)
        };
        let mut alpha = BTreeMap::new();
        for x in src.wit().elements() {
            for v in a.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src, dst: a.clone(), fwd, bwd, alpha })
    }

    fn right_unitor_inv(&self, a: &DObj<B>) -> Result<DMor<B>> {
        let one = self.unit();
        let dst = self.tensor(a, &one)?;
        let fwd = FiniteFunction::from_rule(a.wit().clone(), dst.wit().clone(), |x| {
            Ok(Value::pair(x.clone(), Value::Unit))
        })?;
        let bwd = FiniteFunction::from_rule(dst.cowit().clone(), a.cowit().clone(), |fg| {
            fg.as_pair()?.0.apply(&Value::Unit)
        })?;
        let model = self.clone();
        let a2 = a.clone();
        let rule = move |x: &Value, fg: &Value| -> Result<B::Mor> {
            let (f, _) = fg.as_pair()?;
            model.base.right_unitor_inv(&a2.at(x, &f.apply(&Value::Unit)?)?)
        };
        let mut alpha = BTreeMap::new();
        for x in a.wit().elements() {
            for v in dst.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src: a.clone(), dst, fwd, bwd, alpha })
    }

    /// The additives exist over any base.
    fn has_products(&self) -> bool {
        true
    }

    fn top(&self) -> Result<DObj<B>> {
        DialObject::new(EffectiveSet::unit(), EffectiveSet::empty(), BTreeMap::new())
    }

    fn zero(&self) -> Result<DObj<B>> {
        DialObject::new(EffectiveSet::empty(), EffectiveSet::unit(), BTreeMap::new())
    }

    fn with(&self, a: &DObj<B>, b: &DObj<B>) -> Result<DObj<B>> {
        let wit = EffectiveSet::product(a.wit(), b.wit(), &self.limits)?;
        let cowit = EffectiveSet::coproduct(a.cowit(), b.cowit(), &self.limits)?;
        let (a2, b2) = (a.clone(), b.clone());
        DialObject::from_rule(wit, cowit, move |xu, z| {
            let (x, u) = xu.as_pair()?;
            match z {
                Value::Inl(y) => a2.at(x, y),
                Value::Inr(v) => b2.at(u, v),
                other => Err(Error::eval(format!("untagged additive counter-bid {other}"))),
            }
        })
    }

    fn plus(&self, a: &DObj<B>, b: &DObj<B>) -> Result<DObj<B>> {
        let wit = EffectiveSet::coproduct(a.wit(), b.wit(), &self.limits)?;
        let cowit = EffectiveSet::product(a.cowit(), b.cowit(), &self.limits)?;
        let (a2, b2) = (a.clone(), b.clone());
        DialObject::from_rule(wit, cowit, move |z, yv| {
            let (y, v) = yv.as_pair()?;
            match z {
                Value::Inl(x) => a2.at(x, y),
                Value::Inr(u) => b2.at(u, v),
                other => Err(Error::eval(format!("untagged additive bid {other}"))),
            }
        })
    }

    fn with_proj_left(&self, a: &DObj<B>, b: &DObj<B>) -> Result<DMor<B>> {
        let src = self.with(a, b)?;
        let fwd = FiniteFunction::from_rule(src.wit().clone(), a.wit().clone(), |xu| {
            Ok(xu.as_pair()?.0.clone())
        })?;
        let bwd = FiniteFunction::from_rule(a.cowit().clone(), src.cowit().clone(), |y| {
            Ok(Value::inl(y.clone()))
        })?;
        let (base, a2) = (self.base.clone(), a.clone());
        let rule = move |xu: &Value, y: &Value| -> Result<B::Mor> {
            let (x, _) = xu.as_pair()?;
            Ok(base.identity(&a2.at(x, y)?))
        };
        let mut alpha = BTreeMap::new();
        for x in src.wit().elements() {
            for v in a.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src, dst: a.clone(), fwd, bwd, alpha })
    }

    fn with_proj_right(&self, a: &DObj<B>, b: &DObj<B>) -> Result<DMor<B>> {
        let src = self.with(a, b)?;
        let fwd = FiniteFunction::from_rule(src.wit().clone(), b.wit().clone(), |xu| {
            Ok(xu.as_pair()?.1.clone())
        })?;
        let bwd = FiniteFunction::from_rule(b.cowit().clone(), src.cowit().clone(), |v| {
            Ok(Value::inr(v.clone()))
        })?;
        let (base, b2) = (self.base.clone(), b.clone());
        let rule = move |xu: &Value, v: &Value| -> Result<B::Mor> {
            let (_, u) = xu.as_pair()?;
            Ok(base.identity(&b2.at(u, v)?))
        };
        let mut alpha = BTreeMap::new();
        for x in src.wit().elements() {
            for v in b.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src, dst: b.clone(), fwd, bwd, alpha })
    }

    fn with_pairing(&self, f: &DMor<B>, g: &DMor<B>) -> Result<DMor<B>> {
        assert_eq!(f.src, g.src, "pairing needs a common source");
        let dst = self.with(&f.dst, &g.dst)?;
        let (f2, g2) = (f.clone(), g.clone());
        let fwd = FiniteFunction::from_rule(f.src.wit().clone(), dst.wit().clone(), move |k| {
            Ok(Value::pair(f2.fwd.apply(k)?, g2.fwd.apply(k)?))
        })?;
        let (f2, g2) = (f.clone(), g.clone());
        let bwd =
            FiniteFunction::from_rule(dst.cowit().clone(), f.src.cowit().clone(), move |z| {
                match z {
                    Value::Inl(y) => f2.bwd.apply(y),
                    Value::Inr(v) => g2.bwd.apply(v),
                    other => Err(Error::eval(format!("untagged counter-bid {other}"))),
                }
            })?;
        let model = self.clone();
        let (f2, g2) = (f.clone(), g.clone());
        let rule = move |k: &Value, z: &Value| -> Result<B::Mor> {
            match z {
                Value::Inl(y) => model.strategy_component(&f2, k, y),
                Value::Inr(v) => model.strategy_component(&g2, k, v),
                other => Err(Error::eval(format!("untagged counter-bid {other}"))),
            }
        };
        let mut alpha = BTreeMap::new();
        for k in f.src.wit().elements() {
            for z in dst.cowit().elements() {
                alpha.insert((k.clone(), z.clone()), rule(k, z)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(k, z): &(Value, Value)| rule(k, z).ok());
        Ok(DialMorphism { src: f.src.clone(), dst, fwd, bwd, alpha })
    }

    fn to_top(&self, a: &DObj<B>) -> Result<DMor<B>> {
        let dst = self.top()?;
        let fwd = FiniteFunction::constant(a.wit().clone(), dst.wit().clone(), Value::Unit)?;
        let bwd = FiniteFunction::new(EffectiveSet::empty(), a.cowit().clone(), BTreeMap::new())?;
        Ok(DialMorphism::new(a.clone(), dst, fwd, bwd, BTreeMap::new()))
    }

    fn plus_inj_left(&self, a: &DObj<B>, b: &DObj<B>) -> Result<DMor<B>> {
        let dst = self.plus(a, b)?;
        let fwd = FiniteFunction::from_rule(a.wit().clone(), dst.wit().clone(), |x| {
            Ok(Value::inl(x.clone()))
        })?;
        let bwd = FiniteFunction::from_rule(dst.cowit().clone(), a.cowit().clone(), |yv| {
            Ok(yv.as_pair()?.0.clone())
        })?;
        let (base, a2) = (self.base.clone(), a.clone());
        let rule = move |x: &Value, yv: &Value| -> Result<B::Mor> {
            let (y, _) = yv.as_pair()?;
            Ok(base.identity(&a2.at(x, y)?))
        };
        let mut alpha = BTreeMap::new();
        for x in a.wit().elements() {
            for v in dst.cowit().elements() {
                alpha.insert((x.clone(), v.clone()), rule(x, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| rule(x, v).ok());
        Ok(DialMorphism { src: a.clone(), dst, fwd, bwd, alpha })
    }

    fn plus_inj_right(&self, a: &DObj<B>, b: &DObj<B>) -> Result<DMor<B>> {
        let dst = self.plus(a, b)?;
        let fwd = FiniteFunction::from_rule(b.wit().clone(), dst.wit().clone(), |u| {
            Ok(Value::inr(u.clone()))
        })?;
        let bwd = FiniteFunction::from_rule(dst.cowit().clone(), b.cowit().clone(), |yv| {
            Ok(yv.as_pair()?.1.clone())
        })?;
        let (base, b2) = (self.base.clone(), b.clone());
        let rule = move |u: &Value, yv: &Value| -> Result<B::Mor> {
            let (_, v) = yv.as_pair()?;
            Ok(base.identity(&b2.at(u, v)?))
        };
        let mut alpha = BTreeMap::new();
        for u in b.wit().elements() {
            for v in dst.cowit().elements() {
                alpha.insert((u.clone(), v.clone()), rule(u, v)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(u, v): &(Value, Value)| rule(u, v).ok());
        Ok(DialMorphism { src: b.clone(), dst, fwd, bwd, alpha })
    }

    fn plus_copairing(&self, f: &DMor<B>, g: &DMor<B>) -> Result<DMor<B>> {
        assert_eq!(f.dst, g.dst, "copairing needs a common target");
        let src = self.plus(&f.src, &g.src)?;
        let (f2, g2) = (f.clone(), g.clone());
        let fwd = FiniteFunction::from_rule(src.wit().clone(), f.dst.wit().clone(), move |z| {
            match z {
                Value::Inl(x) => f2.fwd.apply(x),
                Value::Inr(u) => g2.fwd.apply(u),
                other => Err(Error::eval(format!("untagged bid {other}"))),
            }
        })?;
        let (f2, g2) = (f.clone(), g.clone());
        let bwd =
            FiniteFunction::from_rule(f.dst.cowit().clone(), src.cowit().clone(), move |w| {
                Ok(Value::pair(f2.bwd.apply(w)?, g2.bwd.apply(w)?))
            })?;
        let model = self.clone();
        let (f2, g2) = (f.clone(), g.clone());
        let rule = move |z: &Value, w: &Value| -> Result<B::Mor> {
            match z {
                Value::Inl(x) => model.strategy_component(&f2, x, w),
                Value::Inr(u) => model.strategy_component(&g2, u, w),
                other => Err(Error::eval(format!("untagged bid {other}"))),
            }
        };
        let mut alpha = BTreeMap::new();
        for z in src.wit().elements() {
            for w in f.dst.cowit().elements() {
                alpha.insert((z.clone(), w.clone()), rule(z, w)?);
            }
        }
        let alpha = TotalMap::with_ext(alpha, move |(z, w): &(Value, Value)| rule(z, w).ok());
        Ok(DialMorphism { src, dst: f.dst.clone(), fwd, bwd, alpha })
    }

    fn from_zero(&self, a: &DObj<B>) -> Result<DMor<B>> {
        let src = self.zero()?;
        let fwd = FiniteFunction::new(EffectiveSet::empty(), a.wit().clone(), BTreeMap::new())?;
        let bwd = FiniteFunction::constant(a.cowit().clone(), src.cowit().clone(), Value::Unit)?;
        Ok(DialMorphism::new(src, a.clone(), fwd, bwd, BTreeMap::new()))
    }

    fn has_exponential(&self) -> bool {
        self.base.has_exponential()
    }

    type NonLinear = DialIntModel<B::NonLinear>;

    fn nonlinear(&self) -> Result<&DialIntModel<B::NonLinear>> {
        self.nl
            .as_ref()
            .ok_or_else(|| Error::eval("dialectica model over a base without exponential"))
    }

    fn m_obj(&self, r: &DObj<B>) -> Result<DialObject<<B::NonLinear as Category>::Obj>> {
        crate::dialectica::lift::multiplication_obj(self, r)
    }

    fn m_mor(
        &self,
        f: &DMor<B>,
    ) -> Result<<DialIntModel<B::NonLinear> as Category>::Mor> {
        crate::dialectica::lift::multiplication_mor(self, f)
    }

    fn l_obj(&self, s: &DialObject<<B::NonLinear as Category>::Obj>) -> Result<DObj<B>> {
        crate::dialectica::lift::linearisation_obj(self, s)
    }

    fn l_mor(
        &self,
        f: &<DialIntModel<B::NonLinear> as Category>::Mor,
    ) -> Result<DMor<B>> {
        crate::dialectica::lift::linearisation_mor(self, f)
    }

    fn transpose_in(
        &self,
        psi: &DMor<B>,
        s: &DialObject<<B::NonLinear as Category>::Obj>,
        r: &DObj<B>,
    ) -> Result<<DialIntModel<B::NonLinear> as Category>::Mor> {
        crate::dialectica::lift::transpose_in(self, psi, s, r)
    }

    fn transpose_out(
        &self,
        phi: &<DialIntModel<B::NonLinear> as Category>::Mor,
        s: &DialObject<<B::NonLinear as Category>::Obj>,
        r: &DObj<B>,
    ) -> Result<DMor<B>> {
        crate::dialectica::lift::transpose_out(self, phi, s, r)
    }

    fn l_monoidal(
        &self,
        s1: &DialObject<<B::NonLinear as Category>::Obj>,
        s2: &DialObject<<B::NonLinear as Category>::Obj>,
    ) -> Result<DMor<B>> {
        crate::dialectica::lift::strong_monoidality_witness(self, s1, s2).map(|(f, _)| f)
    }

    fn l_monoidal_inv(
        &self,
        s1: &DialObject<<B::NonLinear as Category>::Obj>,
        s2: &DialObject<<B::NonLinear as Category>::Obj>,
    ) -> Result<DMor<B>> {
        crate::dialectica::lift::strong_monoidality_witness(self, s1, s2).map(|(_, g)| g)
    }

    fn l_unit(&self) -> Result<DMor<B>> {
        crate::dialectica::lift::l_unit(self, false)
    }

    fn l_unit_inv(&self) -> Result<DMor<B>> {
        crate::dialectica::lift::l_unit(self, true)
    }

    fn m_monoidal(
        &self,
        r1: &DObj<B>,
        r2: &DObj<B>,
    ) -> Result<<DialIntModel<B::NonLinear> as Category>::Mor> {
        crate::dialectica::lift::m_monoidal(self, r1, r2)
    }

    fn m_unit(&self) -> Result<<DialIntModel<B::NonLinear> as Category>::Mor> {
        crate::dialectica::lift::m_unit(self)
    }

    fn truncation_complete(&self) -> bool {
        self.base.truncation_complete()
    }
}
