//! The lifted linear-nonlinear adjunction: the pointwise functor lift, the
//! Diller-Nahm linearisation with its strong monoidality, the adjunction
//! transposes, and the two-endofunctor factorisation of the exponential.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::dialectica::intuitionistic::DialIntModel;
use crate::dialectica::linear::{table_value, DMor, DObj, DialModel};
use crate::dialectica::{DialIntMorphism, DialMorphism, DialObject};
use crate::error::{Error, Result};
use crate::finset::{EffectiveSet, FiniteFunction, Multiset, TotalMap, Value};
use crate::model::{CartesianCategory, Category, Model};

type SObj<B> = <<B as Model>::NonLinear as Category>::Obj;
type SMor<B> = <<B as Model>::NonLinear as Category>::Mor;
type IMor<B> = DialIntMorphism<SObj<B>, SMor<B>>;

/// First morphism between two base objects, in enumeration order; over a
/// posetal base this is the canonical (unique) coherence morphism.
fn canonical_mor<B: Model>(base: &B, src: &B::Obj, dst: &B::Obj) -> Result<B::Mor> {
    base.hom_first(src, dst)?.ok_or_else(|| {
        Error::ContractViolation(
            "expected a canonical base morphism between tensor rearrangements".into(),
        )
    })
}

/// Pointwise lift of a functor to objects: apply it to every family value.
pub fn dial_f_obj<O1, O2>(
    g: &DialObject<O1>,
    func: Arc<dyn Fn(&O1) -> Result<O2> + Send + Sync>,
) -> Result<DialObject<O2>>
where
    O1: Clone + Send + Sync + 'static,
    O2: Clone + Send + Sync + 'static,
{
    g.map_values(func)
}

/// Pointwise lift of a functor to linear dialectica morphisms: bids are
/// unchanged, strategies map through the functor.
pub fn dial_f_mor<O1, M1, O2, M2>(
    m: &DialMorphism<O1, M1>,
    func_obj: Arc<dyn Fn(&O1) -> Result<O2> + Send + Sync>,
    func_mor: Arc<dyn Fn(&M1) -> Result<M2> + Send + Sync>,
) -> Result<DialMorphism<O2, M2>>
where
    O1: Clone + Eq + Ord + Send + Sync + 'static,
    M1: Clone + Eq + Ord + Send + Sync + 'static,
    O2: Clone + Eq + Ord + Send + Sync + 'static,
    M2: Clone + Eq + Ord + Send + Sync + 'static,
{
    let src = m.src.map_values(func_obj.clone())?;
    let dst = m.dst.map_values(func_obj)?;
    let mut alpha = BTreeMap::new();
    for ((x, v), a) in m.alpha.table() {
        alpha.insert((x.clone(), v.clone()), func_mor(a)?);
    }
    let m2 = m.clone();
    let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| {
        m2.alpha_get(x, v).and_then(|a| func_mor(&a).ok())
    });
    Ok(DialMorphism { src, dst, fwd: m.fwd.clone(), bwd: m.bwd.clone(), alpha })
}

/// Pointwise lift of a functor to Diller-Nahm morphisms.
pub fn dial_f_mor_int<O1, M1, O2, M2>(
    m: &DialIntMorphism<O1, M1>,
    func_obj: Arc<dyn Fn(&O1) -> Result<O2> + Send + Sync>,
    func_mor: Arc<dyn Fn(&M1) -> Result<M2> + Send + Sync>,
) -> Result<DialIntMorphism<O2, M2>>
where
    O1: Clone + Eq + Ord + Send + Sync + 'static,
    M1: Clone + Eq + Ord + Send + Sync + 'static,
    O2: Clone + Eq + Ord + Send + Sync + 'static,
    M2: Clone + Eq + Ord + Send + Sync + 'static,
{
    let src = m.src.map_values(func_obj.clone())?;
    let dst = m.dst.map_values(func_obj)?;
    let mut alpha = BTreeMap::new();
    for ((x, v), a) in m.alpha.table() {
        alpha.insert((x.clone(), v.clone()), func_mor(a)?);
    }
    let m2 = m.clone();
    let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| {
        m2.alpha.get(&(x.clone(), v.clone())).and_then(|a| func_mor(&a).ok())
    });
    Ok(DialIntMorphism { src, dst, fwd: m.fwd.clone(), bwd: m.bwd.clone(), alpha })
}

/// Object action of the lifted multiplication functor: apply `M`
/// componentwise.
pub fn multiplication_obj<B: Model>(dm: &DialModel<B>, r: &DObj<B>) -> Result<DialObject<SObj<B>>> {
    let base = dm.base().clone();
    dial_f_obj(r, Arc::new(move |o: &B::Obj| base.m_obj(o)))
}

/// Morphism action of the lifted multiplication functor: counter-moves
/// become singleton multisets, strategies map through `M` (the product over
/// a singleton multiset being the object itself).
pub fn multiplication_mor<B: Model>(dm: &DialModel<B>, m: &DMor<B>) -> Result<IMor<B>> {
    let src = multiplication_obj(dm, &m.src)?;
    let dst = multiplication_obj(dm, &m.dst)?;
    let m2 = m.clone();
    let bwd_rule = move |_x: &Value, v: &Value| -> Result<Value> {
        Ok(Value::bag([m2.bwd.apply(v)?]))
    };
    let model = dm.clone();
    let m3 = m.clone();
    let alpha_rule = move |x: &Value, v: &Value| -> Result<SMor<B>> {
        model.base().m_mor(&model.strategy_component(&m3, x, v)?)
    };
    let mut bwd = BTreeMap::new();
    let mut alpha = BTreeMap::new();
    for x in m.src.wit().elements() {
        for v in m.dst.cowit().elements() {
            bwd.insert((x.clone(), v.clone()), bwd_rule(x, v)?);
            alpha.insert((x.clone(), v.clone()), alpha_rule(x, v)?);
        }
    }
    let bwd = TotalMap::with_ext(bwd, move |(x, v): &(Value, Value)| bwd_rule(x, v).ok());
    let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| alpha_rule(x, v).ok());
    Ok(DialIntMorphism { src, dst, fwd: m.fwd.clone(), bwd, alpha })
}

/// Object action of the Diller-Nahm linearisation: counter-bids become
/// multiset-valued functions and the family value is the tensor fold of `L`
/// over the selected multiset (the empty fold is the unit).
pub fn linearisation_obj<B: Model>(
    dm: &DialModel<B>,
    s: &DialObject<SObj<B>>,
) -> Result<DObj<B>> {
    let bags = EffectiveSet::multiset_space(s.cowit(), dm.limits())?;
    let cowit = EffectiveSet::function_space(s.wit(), &bags, dm.limits())?;
    let base = dm.base().clone();
    let s2 = s.clone();
    DialObject::from_rule(s.wit().clone(), cowit, move |x, f| {
        let bag = f.apply(x)?;
        let mut objs = Vec::new();
        for y in bag.as_bag()? {
            objs.push(base.l_obj(&s2.at(x, y)?)?);
        }
        base.tensor_fold(&objs)
    })
}

/// Morphism action of the linearisation: the counter-bid component is the
/// multiset bind `λh x. h(f x) >>= λv. g(x, v)`, and the strategy component
/// tensors the linearised strategies over the selected counter-moves behind
/// the monoidality rearrangement.
pub fn linearisation_mor<B: Model>(dm: &DialModel<B>, m: &IMor<B>) -> Result<DMor<B>> {
    let src = linearisation_obj(dm, &m.src)?;
    let dst = linearisation_obj(dm, &m.dst)?;
    let m2 = m.clone();
    let src_wit = m.src.wit().clone();
    let src_bags = m.src.cowit().clone();
    let bwd_rule = move |h: &Value| -> Result<Value> {
        table_value(&src_wit, |x| {
            let fx = m2.fwd.apply(x)?;
            let hv = Multiset::from_value(m2.dst.cowit().clone(), &h.apply(&fx)?)?;
            let out = hv.bind(&src_bags, |v| {
                Multiset::from_value(src_bags.clone(), &m2.bwd_at(x, v)?)
            })?;
            Ok(out.as_value())
        })
    };
    let bwd = FiniteFunction::from_rule(dst.cowit().clone(), src.cowit().clone(), {
        let r = bwd_rule.clone();
        move |h| r(h)
    })?;
    let model = dm.clone();
    let m3 = m.clone();
    let bwd_rule2 = bwd_rule;
    let alpha_rule = move |x: &Value, h: &Value| -> Result<B::Mor> {
        let base = model.base();
        let nl = base.nonlinear()?;
        let fx = m3.fwd.apply(x)?;
        let mids = h.apply(&fx)?;
        let mids = mids.as_bag()?.to_vec();
        // source: ⊗ over the bound multiset of L G^x_y
        let union = bwd_rule2(h)?.apply(x)?;
        let mut union_l = Vec::new();
        for y in union.as_bag()? {
            union_l.push(base.l_obj(&m3.src.at(x, y)?)?);
        }
        // middle: ⊗_v ⊗_{y ∈ g(x,v)} L G^x_y, then ⊗_v L (Π_y G^x_y)
        let mut grouped_l = Vec::new();
        let mut fold_maps = Vec::new();
        let mut strat_maps = Vec::new();
        for v in &mids {
            let block = m3.bwd_at(x, v)?;
            let mut block_s = Vec::new();
            for y in block.as_bag()? {
                block_s.push(m3.src.at(x, y)?);
                grouped_l.push(base.l_obj(&m3.src.at(x, y)?)?);
            }
            fold_maps.push(base.l_monoidal_fold(&block_s)?);
            strat_maps.push(base.l_mor(&m3.alpha_at(x, v)?)?);
        }
        let _ = nl;
        let rearrange = canonical_mor(
            base,
            &base.tensor_fold(&union_l)?,
            &base.tensor_fold(&grouped_l)?,
        )?;
        let grouped_to_products = base.tensor_fold_mor(&fold_maps)?;
        let strategies = base.tensor_fold_mor(&strat_maps)?;
        Ok(base.compose(&strategies, &base.compose(&grouped_to_products, &rearrange)))
    };
    let mut alpha = BTreeMap::new();
    for x in src.wit().elements() {
        for h in dst.cowit().elements() {
            alpha.insert((x.clone(), h.clone()), alpha_rule(x, h)?);
        }
    }
    let alpha = TotalMap::with_ext(alpha, move |(x, h): &(Value, Value)| alpha_rule(x, h).ok());
    Ok(DialMorphism { src, dst, fwd: m.fwd.clone(), bwd, alpha })
}

/// Transpose `ψ : 𝔇_dn(L) G → H` into `G → 𝔇_f(M) H`.
pub fn transpose_in<B: Model>(
    dm: &DialModel<B>,
    psi: &DMor<B>,
    s: &DialObject<SObj<B>>,
    r: &DObj<B>,
) -> Result<IMor<B>> {
    let src = s.clone();
    let dst = multiplication_obj(dm, r)?;
    let psi2 = psi.clone();
    let bwd_rule = move |x: &Value, v: &Value| -> Result<Value> { psi2.bwd.apply(v)?.apply(x) };
    let model = dm.clone();
    let psi3 = psi.clone();
    let s2 = s.clone();
    let r2 = r.clone();
    let bwd_rule2 = bwd_rule.clone();
    let alpha_rule = move |x: &Value, v: &Value| -> Result<SMor<B>> {
        let base = model.base();
        let nl = base.nonlinear()?;
        let bag = bwd_rule2(x, v)?;
        let mut block = Vec::new();
        for y in bag.as_bag()? {
            block.push(s2.at(x, y)?);
        }
        let strategy = model.strategy_component(&psi3, x, v)?;
        let unfold = base.l_monoidal_fold_inv(&block)?;
        let composite = base.compose(&strategy, &unfold);
        let target = r2.at(&psi3.fwd.apply(x)?, v)?;
        base.transpose_in(&composite, &nl.product_fold(&block)?, &target)
    };
    let mut bwd = BTreeMap::new();
    let mut alpha = BTreeMap::new();
    for x in src.wit().elements() {
        for v in dst.cowit().elements() {
            bwd.insert((x.clone(), v.clone()), bwd_rule(x, v)?);
            alpha.insert((x.clone(), v.clone()), alpha_rule(x, v)?);
        }
    }
    let bwd = TotalMap::with_ext(bwd, move |(x, v): &(Value, Value)| bwd_rule(x, v).ok());
    let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| alpha_rule(x, v).ok());
    Ok(DialIntMorphism { src, dst, fwd: psi.fwd.clone(), bwd, alpha })
}

/// Transpose `φ : G → 𝔇_f(M) H` into `𝔇_dn(L) G → H`.
pub fn transpose_out<B: Model>(
    dm: &DialModel<B>,
    phi: &IMor<B>,
    s: &DialObject<SObj<B>>,
    r: &DObj<B>,
) -> Result<DMor<B>> {
    let src = linearisation_obj(dm, s)?;
    let dst = r.clone();
    let phi2 = phi.clone();
    let s_wit = s.wit().clone();
    let bwd = FiniteFunction::from_rule(dst.cowit().clone(), src.cowit().clone(), move |v| {
        table_value(&s_wit, |x| phi2.bwd_at(x, v))
    })?;
    let model = dm.clone();
    let phi3 = phi.clone();
    let s2 = s.clone();
    let r2 = r.clone();
    let alpha_rule = move |x: &Value, v: &Value| -> Result<B::Mor> {
        let base = model.base();
        let nl = base.nonlinear()?;
        let bag = phi3.bwd_at(x, v)?;
        let mut block = Vec::new();
        for y in bag.as_bag()? {
            block.push(s2.at(x, y)?);
        }
        let target = r2.at(&phi3.fwd.apply(x)?, v)?;
        let opened =
            base.transpose_out(&phi3.alpha_at(x, v)?, &nl.product_fold(&block)?, &target)?;
        Ok(base.compose(&opened, &base.l_monoidal_fold(&block)?))
    };
    let mut alpha = BTreeMap::new();
    for x in src.wit().elements() {
        for v in dst.cowit().elements() {
            alpha.insert((x.clone(), v.clone()), alpha_rule(x, v)?);
        }
    }
    let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| alpha_rule(x, v).ok());
    Ok(DialMorphism { src, dst, fwd: phi.fwd.clone(), bwd, alpha })
}

/// The strong monoidality of the linearisation:
/// `𝔇_dn(L) G ⊗ 𝔇_dn(L) H ≅ 𝔇_dn(L) (G & H)`, built from the natural
/// isomorphism between a pair of multisets and a multiset over the tagged
/// sum. Returns the mutually inverse pair.
pub fn strong_monoidality_witness<B: Model>(
    dm: &DialModel<B>,
    g: &DialObject<SObj<B>>,
    h: &DialObject<SObj<B>>,
) -> Result<(DMor<B>, DMor<B>)> {
    let nl_model = DialIntModel::new(dm.base().nonlinear()?.clone(), *dm.limits());
    let ln_g = linearisation_obj(dm, g)?;
    let ln_h = linearisation_obj(dm, h)?;
    let src = dm.tensor(&ln_g, &ln_h)?;
    let gh = nl_model.product(g, h)?;
    let dst = linearisation_obj(dm, &gh)?;

    let fwd = FiniteFunction::from_rule(src.wit().clone(), dst.wit().clone(), |xu| {
        Ok(xu.clone())
    })?;
    let (g2, h2) = (g.clone(), h.clone());
    let (gw, hw) = (g.wit().clone(), h.wit().clone());
    let bwd = FiniteFunction::from_rule(dst.cowit().clone(), src.cowit().clone(), {
        let (g2, h2) = (g2.clone(), h2.clone());
        move |hmap| {
            // h : X×U → (Y+V)*  ↦  (F : U → (X→Y*), K : X → (U→V*))
            let f_tab = table_value(&hw, |u| {
                table_value(&gw, |x| {
                    let mixed = Multiset::from_value(
                        EffectiveSet::coproduct(
                            g2.cowit(),
                            h2.cowit(),
                            &crate::finset::Limits::default(),
                        )?,
                        &hmap.apply(&Value::pair(x.clone(), u.clone()))?,
                    )?;
                    let (ys, _) =
                        crate::finset::multiset_sum_to_pair(&mixed, g2.cowit(), h2.cowit())?;
                    Ok(ys.as_value())
                })
            })?;
            let k_tab = table_value(&gw, |x| {
                table_value(&hw, |u| {
                    let mixed = Multiset::from_value(
                        EffectiveSet::coproduct(
                            g2.cowit(),
                            h2.cowit(),
                            &crate::finset::Limits::default(),
                        )?,
                        &hmap.apply(&Value::pair(x.clone(), u.clone()))?,
                    )?;
                    let (_, vs) =
                        crate::finset::multiset_sum_to_pair(&mixed, g2.cowit(), h2.cowit())?;
                    Ok(vs.as_value())
                })
            })?;
            Ok(Value::pair(f_tab, k_tab))
        }
    })?;
    let model = dm.clone();
    let (src2, dst2) = (src.clone(), dst.clone());
    let bwd2 = bwd.clone();
    let alpha_rule = move |xu: &Value, hmap: &Value| -> Result<B::Mor> {
        let from = src2.at(xu, &bwd2.apply(hmap)?)?;
        let to = dst2.at(xu, hmap)?;
        canonical_mor(model.base(), &from, &to)
    };
    let mut alpha = BTreeMap::new();
    for x in src.wit().elements() {
        for v in dst.cowit().elements() {
            alpha.insert((x.clone(), v.clone()), alpha_rule(x, v)?);
        }
    }
    let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| alpha_rule(x, v).ok());
    let forward = DialMorphism { src: src.clone(), dst: dst.clone(), fwd, bwd, alpha };

    // inverse: same index bijection read backwards
    let fwd_inv = FiniteFunction::from_rule(dst.wit().clone(), src.wit().clone(), |xu| {
        Ok(xu.clone())
    })?;
    let bwd_inv = FiniteFunction::from_rule(src.cowit().clone(), dst.cowit().clone(), {
        let (g2, h2) = (g.clone(), h.clone());
        let (gw, hw) = (g.wit().clone(), h.wit().clone());
        let lim = *dm.limits();
        move |fk| {
            let (f_tab, k_tab) = fk.as_pair()?;
            let wit_prod = EffectiveSet::product(&gw, &hw, &lim)?;
            table_value(&wit_prod, |xu| {
                let (x, u) = xu.as_pair()?;
                let ys = Multiset::from_value(g2.cowit().clone(), &f_tab.apply(u)?.apply(x)?)?;
                let vs = Multiset::from_value(h2.cowit().clone(), &k_tab.apply(x)?.apply(u)?)?;
                Ok(crate::finset::multiset_pair_to_sum(&ys, &vs, &lim)?.as_value())
            })
        }
    })?;
    let model2 = dm.clone();
    let (src3, dst3) = (dst.clone(), src.clone());
    let bwd_inv2 = bwd_inv.clone();
    let alpha_rule_inv = move |xu: &Value, fk: &Value| -> Result<B::Mor> {
        let from = src3.at(xu, &bwd_inv2.apply(fk)?)?;
        let to = dst3.at(xu, fk)?;
        canonical_mor(model2.base(), &from, &to)
    };
    let mut alpha_inv = BTreeMap::new();
    for x in dst.wit().elements() {
        for v in src.cowit().elements() {
            alpha_inv.insert((x.clone(), v.clone()), alpha_rule_inv(x, v)?);
        }
    }
    let alpha_inv = TotalMap::with_ext(alpha_inv, move |(x, v): &(Value, Value)| {
        alpha_rule_inv(x, v).ok()
    });
    let backward =
        DialMorphism { src: dst, dst: src, fwd: fwd_inv, bwd: bwd_inv, alpha: alpha_inv };
    Ok((forward, backward))
}

/// `1 → 𝔇_dn(L) ⊤` (or its inverse): the linearised terminal object has
/// singleton index sets and unit value, so the map is an isomorphism.
pub fn l_unit<B: Model>(dm: &DialModel<B>, inverse: bool) -> Result<DMor<B>> {
    let nl_model = DialIntModel::new(dm.base().nonlinear()?.clone(), *dm.limits());
    let one = dm.unit();
    let ltop = linearisation_obj(dm, &nl_model.terminal())?;
    let (src, dst) =
        if inverse { (ltop.clone(), one.clone()) } else { (one.clone(), ltop.clone()) };
    let fwd = FiniteFunction::constant(
        src.wit().clone(),
        dst.wit().clone(),
        dst.wit().elements()[0].clone(),
    )?;
    let bwd = FiniteFunction::constant(
        dst.cowit().clone(),
        src.cowit().clone(),
        src.cowit().elements()[0].clone(),
    )?;
    let mut alpha = BTreeMap::new();
    let unit_mor = dm.base().identity(&dm.base().unit());
    for x in src.wit().elements() {
        for v in dst.cowit().elements() {
            alpha.insert((x.clone(), v.clone()), unit_mor.clone());
        }
    }
    Ok(DialMorphism { src, dst, fwd, bwd, alpha: TotalMap::new(alpha) })
}

/// Lax monoidality of the lifted multiplication:
/// `𝔇_f(M) r₁ & 𝔇_f(M) r₂ → 𝔇_f(M)(r₁ ⊗ r₂)`, a Diller-Nahm morphism whose
/// counter-move selects one counter-bid on each side.
pub fn m_monoidal<B: Model>(dm: &DialModel<B>, r1: &DObj<B>, r2: &DObj<B>) -> Result<IMor<B>> {
    let nl_model = DialIntModel::new(dm.base().nonlinear()?.clone(), *dm.limits());
    let m1 = multiplication_obj(dm, r1)?;
    let m2 = multiplication_obj(dm, r2)?;
    let src = nl_model.product(&m1, &m2)?;
    let tensor = dm.tensor(r1, r2)?;
    let dst = multiplication_obj(dm, &tensor)?;
    let fwd = FiniteFunction::from_rule(src.wit().clone(), dst.wit().clone(), |xu| {
        Ok(xu.clone())
    })?;
    let bwd_rule = move |xu: &Value, fk: &Value| -> Result<Value> {
        let (x, u) = xu.as_pair()?;
        let (f, k) = fk.as_pair()?;
        Ok(Value::bag([Value::inl(f.apply(u)?), Value::inr(k.apply(x)?)]))
    };
    let model = dm.clone();
    let (r1b, r2b) = (r1.clone(), r2.clone());
    let alpha_rule = move |xu: &Value, fk: &Value| -> Result<SMor<B>> {
        let (x, u) = xu.as_pair()?;
        let (f, k) = fk.as_pair()?;
        let a = r1b.at(x, &f.apply(u)?)?;
        let b = r2b.at(u, &k.apply(x)?)?;
        model.base().m_monoidal(&a, &b)
    };
    let mut bwd = BTreeMap::new();
    let mut alpha = BTreeMap::new();
    for x in src.wit().elements() {
        for v in dst.cowit().elements() {
            bwd.insert((x.clone(), v.clone()), bwd_rule(x, v)?);
            alpha.insert((x.clone(), v.clone()), alpha_rule(x, v)?);
        }
    }
    let bwd = TotalMap::with_ext(bwd, move |(x, v): &(Value, Value)| bwd_rule(x, v).ok());
    let alpha = TotalMap::with_ext(alpha, move |(x, v): &(Value, Value)| alpha_rule(x, v).ok());
    Ok(DialIntMorphism { src, dst, fwd, bwd, alpha })
}

/// `⊤ → 𝔇_f(M) 1`: the counter-move is the empty multiset, whose strategy
/// source is the terminal object.
pub fn m_unit<B: Model>(dm: &DialModel<B>) -> Result<IMor<B>> {
    let nl_model = DialIntModel::new(dm.base().nonlinear()?.clone(), *dm.limits());
    let src = nl_model.terminal();
    let dst = multiplication_obj(dm, &dm.unit())?;
    let fwd = FiniteFunction::constant(src.wit().clone(), dst.wit().clone(), Value::Unit)?;
    let mut bwd = BTreeMap::new();
    let mut alpha = BTreeMap::new();
    for x in src.wit().elements() {
        for v in dst.cowit().elements() {
            bwd.insert((x.clone(), v.clone()), Value::bag([]));
            alpha.insert((x.clone(), v.clone()), dm.base().m_unit()?);
        }
    }
    Ok(DialIntMorphism {
        src,
        dst,
        fwd,
        bwd: TotalMap::new(bwd),
        alpha: TotalMap::new(alpha),
    })
}

/// Endofunctor `A`: several counter-moves at once (the finite multiset
/// monad on the counter-bid side).
pub fn endofunctor_a<B: Model>(dm: &DialModel<B>, g: &DObj<B>) -> Result<DObj<B>> {
    let cowit = EffectiveSet::multiset_space(g.cowit(), dm.limits())?;
    let base = dm.base().clone();
    let g2 = g.clone();
    DialObject::from_rule(g.wit().clone(), cowit, move |x, s| {
        let mut objs = Vec::new();
        for y in s.as_bag()? {
            objs.push(g2.at(x, y)?);
        }
        base.tensor_fold(&objs)
    })
}

/// Endofunctor `B`: the counter-move observes the witness bid (the reader
/// monad on the counter-bid side).
pub fn endofunctor_b<B: Model>(dm: &DialModel<B>, g: &DObj<B>) -> Result<DObj<B>> {
    let cowit = EffectiveSet::function_space(g.wit(), g.cowit(), dm.limits())?;
    let g2 = g.clone();
    DialObject::from_rule(g.wit().clone(), cowit, move |x, f| g2.at(x, &f.apply(x)?))
}

/// An enumerated, verified bijection between `hom(𝔇_dn(L) G, H)` and
/// `hom(G, 𝔇_f(M) H)`: every element of each side transposes into the other
/// and the round trips are identities.
pub struct AdjunctionWitness<B: Model> {
    pub outer: Vec<DMor<B>>,
    pub inner: Vec<IMor<B>>,
    /// `pairs[i] = j` matches `outer[i]` with `inner[j]`.
    pub pairs: Vec<usize>,
}

pub fn adjunction_witness<B: Model>(
    dm: &DialModel<B>,
    g: &DialObject<SObj<B>>,
    h: &DObj<B>,
) -> Result<AdjunctionWitness<B>> {
    let nl_model = DialIntModel::new(dm.base().nonlinear()?.clone(), *dm.limits());
    let ln_g = linearisation_obj(dm, g)?;
    let mh = multiplication_obj(dm, h)?;
    let outer = dm.hom(&ln_g, h)?;
    let inner = nl_model.hom(g, &mh)?;
    if outer.len() != inner.len() {
        return Err(Error::ContractViolation(format!(
            "adjunction hom-sets differ in size: {} vs {}",
            outer.len(),
            inner.len()
        )));
    }
    let mut pairs = Vec::with_capacity(outer.len());
    let mut seen = vec![false; inner.len()];
    for psi in &outer {
        let phi = transpose_in(dm, psi, g, h)?;
        let j = inner
            .iter()
            .position(|m| *m == phi)
            .ok_or_else(|| Error::ContractViolation("transpose left the hom-set".into()))?;
        if seen[j] {
            return Err(Error::ContractViolation("transpose is not injective".into()));
        }
        seen[j] = true;
        let back = transpose_out(dm, &phi, g, h)?;
        if back != *psi {
            return Err(Error::ContractViolation("transpose round trip failed".into()));
        }
        pairs.push(j);
    }
    Ok(AdjunctionWitness { outer, inner, pairs })
}
