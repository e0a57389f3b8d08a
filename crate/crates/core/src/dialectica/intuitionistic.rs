use std::collections::BTreeMap;
use std::fmt;

use crate::dialectica::linear::Odometer;
use crate::dialectica::{DialIntMorphism, DialObject};
use crate::error::{Error, Result};
use crate::finset::{EffectiveSet, FiniteFunction, Limits, Multiset, TotalMap, Value};
use crate::model::{CartesianCategory, Category};

type IObj<C> = DialObject<<C as Category>::Obj>;
type IMor<C> = DialIntMorphism<<C as Category>::Obj, <C as Category>::Mor>;

/// The Diller-Nahm transformation of a category with finite products:
/// counter-moves are finite multisets and a strategy component consumes the
/// product of the sources selected by the counter-move.
pub struct DialIntModel<C: CartesianCategory> {
    base: C,
    limits: Limits,
}

impl<C: CartesianCategory> Clone for DialIntModel<C> {
    fn clone(&self) -> Self {
        DialIntModel { base: self.base.clone(), limits: self.limits }
    }
}

impl<C: CartesianCategory> fmt::Debug for DialIntModel<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DialIntModel(bound={})", self.limits.multiset_bound)
    }
}

/// The Diller-Nahm transformation `𝔇ᵢ`.
pub fn dial_intuitionistic<C: CartesianCategory>(base: C, limits: Limits) -> DialIntModel<C> {
    DialIntModel::new(base, limits)
}

/// Projection out of a left-associated product fold.
fn nth_proj<C: CartesianCategory>(c: &C, objs: &[C::Obj], i: usize) -> Result<C::Mor> {
    let n = objs.len();
    assert!(i < n);
    if n == 1 {
        return Ok(c.identity(&objs[0]));
    }
    let front = c.product_fold(&objs[..n - 1])?;
    if i == n - 1 {
        c.proj_right(&front, &objs[n - 1])
    } else {
        let outer = c.proj_left(&front, &objs[n - 1])?;
        Ok(c.compose(&nth_proj(c, &objs[..n - 1], i)?, &outer))
    }
}

/// `Π src → Π src[picks]` built from projections and pairing; the empty pick
/// list is the terminal map.
fn tuple_pick<C: CartesianCategory>(c: &C, objs: &[C::Obj], picks: &[usize]) -> Result<C::Mor> {
    let whole = c.product_fold(objs)?;
    match picks.split_first() {
        None => c.to_terminal(&whole),
        Some((&first, rest)) => {
            let mut m = nth_proj(c, objs, first)?;
            for &p in rest {
                m = c.pairing(&m, &nth_proj(c, objs, p)?)?;
            }
            Ok(m)
        }
    }
}

/// `f × g` on morphisms of a cartesian category, matching the left-assoc
/// fold.
fn prod_mor<C: CartesianCategory>(c: &C, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
    let a = c.dom(f);
    let b = c.dom(g);
    let pl = c.proj_left(&a, &b)?;
    let pr = c.proj_right(&a, &b)?;
    c.pairing(&c.compose(f, &pl), &c.compose(g, &pr))
}

impl<C: CartesianCategory> DialIntModel<C> {
    pub fn new(base: C, limits: Limits) -> Self {
        DialIntModel { base, limits }
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// The product object `Π_{y ∈ bag} G^x_y` a strategy component consumes.
    pub fn bag_source(&self, g: &IObj<C>, x: &Value, bag: &Value) -> Result<C::Obj> {
        let entries = bag.as_bag()?;
        let mut objs = Vec::with_capacity(entries.len());
        for y in entries {
            objs.push(g.at(x, y)?);
        }
        self.base.product_fold(&objs)
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

    fn hom_impl(&self, src: &IObj<C>, dst: &IObj<C>, first_only: bool) -> Result<Vec<IMor<C>>> {
        let xs = src.wit().elements().to_vec();
        let us = dst.wit().elements().to_vec();
        let vs = dst.cowit().elements().to_vec();
        let bags = EffectiveSet::multiset_space(src.cowit(), &self.limits)?;
        self.f_space_size(xs.len(), us.len())?;

        // cells[(x, u, v)] = [(bag, homs)] with at least one strategy
        let mut cells: BTreeMap<(usize, usize, usize), Vec<(Value, Vec<C::Mor>)>> =
            BTreeMap::new();
        for (xi, x) in xs.iter().enumerate() {
            for (ui, u) in us.iter().enumerate() {
                for (vi, v) in vs.iter().enumerate() {
                    let target = dst.at(u, v)?;
                    let mut options = Vec::new();
                    for bag in bags.elements() {
                        let source = self.bag_source(src, x, bag)?;
                        let homs = self.base.hom(&source, &target)?;
                        if !homs.is_empty() {
                            options.push((bag.clone(), homs));
                        }
                    }
                    cells.insert((xi, ui, vi), options);
                }
            }
        }

        let mut out = Vec::new();
        for f_digits in Odometer::new(vec![us.len(); xs.len()]) {
            // slots are (x, v) pairs, x-major
            let slots: Vec<&Vec<(Value, Vec<C::Mor>)>> = xs
                .iter()
                .enumerate()
                .flat_map(|(xi, _)| {
                    let f_digits = &f_digits;
                    let cells = &cells;
                    (0..vs.len()).map(move |vi| &cells[&(xi, f_digits[xi], vi)])
                })
                .collect();
            if slots.iter().any(|s| s.is_empty()) {
                continue;
            }
            let fwd_table: BTreeMap<Value, Value> = xs
                .iter()
                .zip(&f_digits)
                .map(|(x, &u)| (x.clone(), us[u].clone()))
                .collect();
            let fwd = FiniteFunction::new(src.wit().clone(), dst.wit().clone(), fwd_table)?;
            if first_only {
                let mut bwd = BTreeMap::new();
                let mut alpha = BTreeMap::new();
                for (xi, x) in xs.iter().enumerate() {
                    for (vi, v) in vs.iter().enumerate() {
                        let (bag, homs) = &slots[xi * vs.len() + vi][0];
                        bwd.insert((x.clone(), v.clone()), bag.clone());
                        alpha.insert((x.clone(), v.clone()), homs[0].clone());
                    }
                }
                out.push(DialIntMorphism {
                    src: src.clone(),
                    dst: dst.clone(),
                    fwd,
                    bwd: TotalMap::new(bwd),
                    alpha: TotalMap::new(alpha),
                });
                return Ok(out);
            }
            for bag_choice in Odometer::new(slots.iter().map(|s| s.len()).collect()) {
                let strategy_sizes: Vec<usize> = bag_choice
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| slots[i][b].1.len())
                    .collect();
                for strat_choice in Odometer::new(strategy_sizes) {
                    let mut bwd = BTreeMap::new();
                    let mut alpha = BTreeMap::new();
                    for (xi, x) in xs.iter().enumerate() {
                        for (vi, v) in vs.iter().enumerate() {
                            let i = xi * vs.len() + vi;
                            let (bag, homs) = &slots[i][bag_choice[i]];
                            bwd.insert((x.clone(), v.clone()), bag.clone());
                            alpha.insert((x.clone(), v.clone()), homs[strat_choice[i]].clone());
                        }
                    }
                    out.push(DialIntMorphism {
                        src: src.clone(),
                        dst: dst.clone(),
                        fwd: fwd.clone(),
                        bwd: TotalMap::new(bwd),
                        alpha: TotalMap::new(alpha),
                    });
                    if out.len() as u64 > self.limits.max_set {
                        return Err(Error::budget(
                            "hom enumeration",
                            out.len() as u128,
                            self.limits.max_set,
                        ));
                    }
                }
            }
        }
        Ok(out)
    }
}

impl<C: CartesianCategory> Category for DialIntModel<C> {
    type Obj = IObj<C>;
    type Mor = IMor<C>;

    fn sample_objects(&self, cap: usize) -> Vec<IObj<C>> {
        // same generator as the linear side: index sets of size ≤ 2 over the
        // base sample
        let shapes: [(usize, usize); 8] =
            [(0, 1), (1, 0), (1, 1), (0, 2), (2, 0), (1, 2), (2, 1), (2, 2)];
        let base_objs = self.base.sample_objects(30);
        if base_objs.is_empty() {
            return Vec::new();
        }
        let mut out = Vec::new();
        'outer: for &(w, c) in &shapes {
            let wit = EffectiveSet::canonical(w, "w");
            let cowit = EffectiveSet::canonical(c, "c");
            let grid: Vec<(Value, Value)> = wit
                .elements()
                .iter()
                .flat_map(|x| cowit.elements().iter().map(move |y| (x.clone(), y.clone())))
                .collect();
            for pick in Odometer::new(vec![base_objs.len(); grid.len()]) {
                if out.len() >= cap {
                    break 'outer;
                }
                let table: BTreeMap<(Value, Value), C::Obj> = grid
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
        out
    }

    fn hom(&self, a: &IObj<C>, b: &IObj<C>) -> Result<Vec<IMor<C>>> {
        self.hom_impl(a, b, false)
    }

    fn hom_first(&self, a: &IObj<C>, b: &IObj<C>) -> Result<Option<IMor<C>>> {
        Ok(self.hom_impl(a, b, true)?.into_iter().next())
    }

    fn identity(&self, a: &IObj<C>) -> IMor<C> {
        let fwd = FiniteFunction::identity(a.wit());
        let mut bwd = BTreeMap::new();
        let mut alpha = BTreeMap::new();
        for x in a.wit().elements() {
            for v in a.cowit().elements() {
                bwd.insert((x.clone(), v.clone()), Value::bag([v.clone()]));
                let o = a.at(x, v).expect("family total");
                alpha.insert((x.clone(), v.clone()), self.base.identity(&o));
            }
        }
        let a1 = a.clone();
        let bwd = TotalMap::with_ext(bwd, move |(_, v): &(Value, Value)| {
            if a1.cowit().contains(v) {
                Some(Value::bag([v.clone()]))
            } else {
                None
            }
        });
        let a2 = a.clone();
        let base = self.base.clone();
        let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| {
            a2.at(x, v).ok().map(|o| base.identity(&o))
        });
        DialIntMorphism { src: a.clone(), dst: a.clone(), fwd, bwd, alpha }
    }

    /// `g ∘ f` with the counter-move component given by the multiset bind
    /// `λx q. g(f x, q) >>= λv. f(x, v)` and strategies composed through the
    /// block decomposition of the bound multiset.
    fn compose(&self, g: &IMor<C>, f: &IMor<C>) -> IMor<C> {
        assert_eq!(f.dst, g.src, "Diller-Nahm composition endpoint mismatch");
        let fwd = FiniteFunction::compose(&g.fwd, &f.fwd)
            .expect("forward bids compose on the enumerated witness set");
        let model = self.clone();
        let f2 = f.clone();
        let g2 = g.clone();
        let src_cowit = f.src.cowit().clone();
        let bwd_rule = move |x: &Value, q: &Value| -> Result<Value> {
            let fx = f2.fwd.apply(x)?;
            let mids = Multiset::from_value(f2.dst.cowit().clone(), &g2.bwd_at(&fx, q)?)?;
            let out = mids.bind(&src_cowit, |v| {
                Multiset::from_value(src_cowit.clone(), &f2.bwd_at(x, v)?)
            })?;
            Ok(out.as_value())
        };
        let f3 = f.clone();
        let g3 = g.clone();
        let bwd_rule2 = bwd_rule.clone();
        let alpha_rule = move |x: &Value, q: &Value| -> Result<C::Mor> {
            let fx = f3.fwd.apply(x)?;
            let mids = g3.bwd_at(&fx, q)?;
            let mids = mids.as_bag()?;
            // component objects of the composite source, in canonical order
            let union = bwd_rule2(x, q)?;
            let union_entries = union.as_bag()?.to_vec();
            let mut comp_objs = Vec::with_capacity(union_entries.len());
            for y in &union_entries {
                comp_objs.push(f3.src.at(x, y)?);
            }
            // assign each block's entries to distinct slots of the union
            let mut used = vec![false; union_entries.len()];
            let mut block_maps = Vec::new();
            let mut mid_objs = Vec::new();
            for v in mids {
                let block = f3.bwd_at(x, v)?;
                let mut picks = Vec::new();
                for y in block.as_bag()? {
                    let slot = union_entries
                        .iter()
                        .enumerate()
                        .position(|(i, e)| !used[i] && e == y)
                        .ok_or_else(|| Error::eval("block entry missing from union"))?;
                    used[slot] = true;
                    picks.push(slot);
                }
                let to_block = tuple_pick(&model.base, &comp_objs, &picks)?;
                let strat = f3.alpha_at(x, v)?;
                block_maps.push(model.base.compose(&strat, &to_block));
                mid_objs.push(f3.dst.at(&fx, v)?);
            }
            // pair the per-block strategies into Π_{v} H^{fx}_v
            let whole = model.base.product_fold(&comp_objs)?;
            let mid_map = match block_maps.split_first() {
                None => model.base.to_terminal(&whole)?,
                Some((first, rest)) => {
                    let mut m = first.clone();
                    for b in rest {
                        m = model.base.pairing(&m, b)?;
                    }
                    m
                }
            };
            let outer = g3.alpha_at(&fx, q)?;
            Ok(model.base.compose(&outer, &mid_map))
        };
        let mut bwd = BTreeMap::new();
        let mut alpha = BTreeMap::new();
        for x in f.src.wit().elements() {
            for q in g.dst.cowit().elements() {
                bwd.insert(
                    (x.clone(), q.clone()),
                    bwd_rule(x, q).expect("counter-moves compose on the enumerated grid"),
                );
                alpha.insert(
                    (x.clone(), q.clone()),
                    alpha_rule(x, q).expect("strategies compose on the enumerated grid"),
                );
            }
        }
        let bwd = TotalMap::with_ext(bwd, move |(x, q): &(Value, Value)| bwd_rule(x, q).ok());
        let alpha =
            TotalMap::with_ext(alpha, move |(x, q): &(Value, Value)| alpha_rule(x, q).ok());
        DialIntMorphism { src: f.src.clone(), dst: g.dst.clone(), fwd, bwd, alpha }
    }

    fn dom(&self, f: &IMor<C>) -> IObj<C> {
        f.src.clone()
    }

    fn cod(&self, f: &IMor<C>) -> IObj<C> {
        f.dst.clone()
    }

    fn is_valid_mor(&self, m: &IMor<C>) -> bool {
        if m.fwd.domain() != m.src.wit() || m.fwd.codomain() != m.dst.wit() {
            return false;
        }
        for x in m.src.wit().elements() {
            let Ok(fx) = m.fwd.apply(x) else { return false };
            if !m.dst.wit().contains(&fx) {
                return false;
            }
            for v in m.dst.cowit().elements() {
                let Ok(bag) = m.bwd_at(x, v) else { return false };
                let Ok(entries) = bag.as_bag() else { return false };
                if !entries.iter().all(|y| m.src.cowit().contains(y)) {
                    return false;
                }
                let (Ok(source), Ok(target)) =
                    (self.bag_source(&m.src, x, &bag), m.dst.at(&fx, v))
                else {
                    return false;
                };
                let Ok(a) = m.alpha_at(x, v) else { return false };
                if !self.base.is_valid_mor(&a)
                    || self.base.dom(&a) != source
                    || self.base.cod(&a) != target
                {
                    return false;
                }
            }
        }
        true
    }
}

impl<C: CartesianCategory> CartesianCategory for DialIntModel<C> {
    fn terminal(&self) -> IObj<C> {
        DialObject::new(EffectiveSet::unit(), EffectiveSet::empty(), BTreeMap::new())
            .expect("witness side nonempty")
    }

    fn product(&self, a: &IObj<C>, b: &IObj<C>) -> Result<IObj<C>> {
        let wit = EffectiveSet::product(a.wit(), b.wit(), &self.limits)?;
        let cowit = EffectiveSet::coproduct(a.cowit(), b.cowit(), &self.limits)?;
        let (a2, b2) = (a.clone(), b.clone());
        DialObject::from_rule(wit, cowit, move |xu, z| {
            let (x, u) = xu.as_pair()?;
            match z {
                Value::Inl(y) => a2.at(x, y),
                Value::Inr(v) => b2.at(u, v),
                other => Err(Error::eval(format!("untagged counter-bid {other}"))),
            }
        })
    }

    fn proj_left(&self, a: &IObj<C>, b: &IObj<C>) -> Result<IMor<C>> {
        let src = self.product(a, b)?;
        let fwd = FiniteFunction::from_rule(src.wit().clone(), a.wit().clone(), |xu| {
            Ok(xu.as_pair()?.0.clone())
        })?;
        let mut bwd = BTreeMap::new();
        let mut alpha = BTreeMap::new();
        for xu in src.wit().elements() {
            let (x, _) = xu.as_pair()?;
            for y in a.cowit().elements() {
                bwd.insert((xu.clone(), y.clone()), Value::bag([Value::inl(y.clone())]));
                alpha.insert((xu.clone(), y.clone()), self.base.identity(&a.at(x, y)?));
            }
        }
        Ok(DialIntMorphism {
            src,
            dst: a.clone(),
            fwd,
            bwd: TotalMap::new(bwd),
            alpha: TotalMap::new(alpha),
        })
    }

    fn proj_right(&self, a: &IObj<C>, b: &IObj<C>) -> Result<IMor<C>> {
        let src = self.product(a, b)?;
        let fwd = FiniteFunction::from_rule(src.wit().clone(), b.wit().clone(), |xu| {
            Ok(xu.as_pair()?.1.clone())
        })?;
        let mut bwd = BTreeMap::new();
        let mut alpha = BTreeMap::new();
        for xu in src.wit().elements() {
            let (_, u) = xu.as_pair()?;
            for v in b.cowit().elements() {
                bwd.insert((xu.clone(), v.clone()), Value::bag([Value::inr(v.clone())]));
                alpha.insert((xu.clone(), v.clone()), self.base.identity(&b.at(u, v)?));
            }
        }
        Ok(DialIntMorphism {
            src,
            dst: b.clone(),
            fwd,
            bwd: TotalMap::new(bwd),
            alpha: TotalMap::new(alpha),
        })
    }

    fn pairing(&self, f: &IMor<C>, g: &IMor<C>) -> Result<IMor<C>> {
        assert_eq!(f.src, g.src, "pairing needs a common source");
        let dst = self.product(&f.dst, &g.dst)?;
        let (f2, g2) = (f.clone(), g.clone());
        let fwd = FiniteFunction::from_rule(f.src.wit().clone(), dst.wit().clone(), move |k| {
            Ok(Value::pair(f2.fwd.apply(k)?, g2.fwd.apply(k)?))
        })?;
        let mut bwd = BTreeMap::new();
        let mut alpha = BTreeMap::new();
        for k in f.src.wit().elements() {
            for z in dst.cowit().elements() {
                match z {
                    Value::Inl(y) => {
                        bwd.insert((k.clone(), z.clone()), f.bwd_at(k, y)?);
                        alpha.insert((k.clone(), z.clone()), f.alpha_at(k, y)?);
                    }
                    Value::Inr(v) => {
                        bwd.insert((k.clone(), z.clone()), g.bwd_at(k, v)?);
                        alpha.insert((k.clone(), z.clone()), g.alpha_at(k, v)?);
                    }
                    other => {
                        return Err(Error::eval(format!("untagged counter-bid {other}")))
                    }
                }
            }
        }
        Ok(DialIntMorphism {
            src: f.src.clone(),
            dst,
            fwd,
            bwd: TotalMap::new(bwd),
            alpha: TotalMap::new(alpha),
        })
    }

    fn to_terminal(&self, a: &IObj<C>) -> Result<IMor<C>> {
        let dst = self.terminal();
        let fwd = FiniteFunction::constant(a.wit().clone(), dst.wit().clone(), Value::Unit)?;
        Ok(DialIntMorphism {
            src: a.clone(),
            dst,
            fwd,
            bwd: TotalMap::new(BTreeMap::new()),
            alpha: TotalMap::new(BTreeMap::new()),
        })
    }
}
