use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finset::Value;
use crate::model::laws::{find_iso, LawReport, LawResult};
use crate::model::{CartesianCategory, Category, Lineale, Model};

type NlObj<M> = <<M as Model>::NonLinear as Category>::Obj;
type NlMor<M> = <<M as Model>::NonLinear as Category>::Mor;

/// A morphism of linear-nonlinear adjunctions: a pair of functors `F` on the
/// linear parts and `G` on the nonlinear parts that commute with the
/// adjunctions up to natural isomorphism.
pub struct ModelMorphism<A: Model, B: Model> {
    pub name: String,
    f_obj: Arc<dyn Fn(&A::Obj) -> Result<B::Obj> + Send + Sync>,
    f_mor: Arc<dyn Fn(&A::Mor) -> Result<B::Mor> + Send + Sync>,
    g_obj: Arc<dyn Fn(&NlObj<A>) -> Result<NlObj<B>> + Send + Sync>,
    g_mor: Arc<dyn Fn(&NlMor<A>) -> Result<NlMor<B>> + Send + Sync>,
}

impl<A: Model, B: Model> Clone for ModelMorphism<A, B> {
    fn clone(&self) -> Self {
        ModelMorphism {
            name: self.name.clone(),
            f_obj: Arc::clone(&self.f_obj),
            f_mor: Arc::clone(&self.f_mor),
            g_obj: Arc::clone(&self.g_obj),
            g_mor: Arc::clone(&self.g_mor),
        }
    }
}

impl<A: Model, B: Model> ModelMorphism<A, B> {
    pub fn new(
        name: impl Into<String>,
        f_obj: impl Fn(&A::Obj) -> Result<B::Obj> + Send + Sync + 'static,
        f_mor: impl Fn(&A::Mor) -> Result<B::Mor> + Send + Sync + 'static,
        g_obj: impl Fn(&NlObj<A>) -> Result<NlObj<B>> + Send + Sync + 'static,
        g_mor: impl Fn(&NlMor<A>) -> Result<NlMor<B>> + Send + Sync + 'static,
    ) -> Self {
        ModelMorphism {
            name: name.into(),
            f_obj: Arc::new(f_obj),
            f_mor: Arc::new(f_mor),
            g_obj: Arc::new(g_obj),
            g_mor: Arc::new(g_mor),
        }
    }

    pub fn f_obj(&self, a: &A::Obj) -> Result<B::Obj> {
        (self.f_obj)(a)
    }

    pub fn f_mor(&self, f: &A::Mor) -> Result<B::Mor> {
        (self.f_mor)(f)
    }

    pub fn g_obj(&self, s: &NlObj<A>) -> Result<NlObj<B>> {
        (self.g_obj)(s)
    }

    pub fn g_mor(&self, f: &NlMor<A>) -> Result<NlMor<B>> {
        (self.g_mor)(f)
    }
}

/// The identity morphism of models.
pub fn identity_model_morphism<A: Model>(_a: &A) -> ModelMorphism<A, A> {
    ModelMorphism::new(
        "identity",
        |x: &A::Obj| Ok(x.clone()),
        |f: &A::Mor| Ok(f.clone()),
        |s: &NlObj<A>| Ok(s.clone()),
        |g: &NlMor<A>| Ok(g.clone()),
    )
}

/// A morphism between lineales given by an element table (applied to both
/// the linear and the nonlinear parts).
pub fn lineale_morphism(
    name: &str,
    table: &[(Value, Value)],
) -> ModelMorphism<Lineale, Lineale> {
    let map: BTreeMap<Value, Value> = table.iter().cloned().collect();
    let look = move |v: &Value| -> Result<Value> {
        map.get(v)
            .cloned()
            .ok_or_else(|| Error::eval(format!("lineale morphism undefined at {v}")))
    };
    let l1 = look.clone();
    let l2 = look.clone();
    let l3 = look.clone();
    let l4 = look;
    ModelMorphism::new(
        name,
        move |x: &Value| l1(x),
        move |f: &crate::model::LMor| {
            Ok(crate::model::LMor { src: l2(&f.src)?, dst: l2(&f.dst)? })
        },
        move |s: &Value| l3(s),
        move |g: &crate::model::LMor| {
            Ok(crate::model::LMor { src: l4(&g.src)?, dst: l4(&g.dst)? })
        },
    )
}

/// Validate a model morphism against the definition: functoriality of `F`
/// and `G`, monoidality of `F`, cartesian monoidality of `G`, and the two
/// squares `M' ∘ F ≅ G ∘ M` and `L' ∘ G ≅ F ∘ L`, all checked on sampled
/// objects and morphisms with isomorphisms found by hom search.
pub fn check_model_morphism<A: Model, B: Model>(
    a: &A,
    b: &B,
    phi: &ModelMorphism<A, B>,
    sample: usize,
) -> LawReport {
    let mut report = LawReport::default();
    let objs = a.sample_objects(sample.max(2));

    report.results.push(run_law_mm("functor-identities", || {
        for x in &objs {
            let lhs = phi.f_mor(&a.identity(x))?;
            let rhs = b.identity(&phi.f_obj(x)?);
            if lhs != rhs {
                return Ok(Some(format!("F(id) at {x:?}")));
            }
        }
        Ok(None)
    }));

    report.results.push(run_law_mm("functor-composition", || {
        for x in objs.iter().take(6) {
            for y in objs.iter().take(6) {
                for z in objs.iter().take(6) {
                    for f in a.hom(x, y)? {
                        for g in a.hom(y, z)? {
                            let lhs = phi.f_mor(&a.compose(&g, &f))?;
                            let rhs = b.compose(&phi.f_mor(&g)?, &phi.f_mor(&f)?);
                            if lhs != rhs {
                                return Ok(Some(format!("F({g:?} ∘ {f:?})")));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }));

    report.results.push(run_law_mm("monoidality-of-F", || {
        for x in objs.iter().take(8) {
            for y in objs.iter().take(8) {
                let lhs = phi.f_obj(&a.tensor(x, y)?)?;
                let rhs = b.tensor(&phi.f_obj(x)?, &phi.f_obj(y)?)?;
                if find_iso(b, &lhs, &rhs)?.is_none() {
                    return Ok(Some(format!("F({x:?} ⊗ {y:?}) ≇ F{x:?} ⊗ F{y:?}")));
                }
            }
        }
        let lhs = phi.f_obj(&a.unit())?;
        if find_iso(b, &lhs, &b.unit())?.is_none() {
            return Ok(Some("F(1) ≇ 1".into()));
        }
        Ok(None)
    }));

    if a.has_exponential() && b.has_exponential() {
        report.results.push(run_law_mm("cartesian-monoidality-of-G", || {
            let nla = a.nonlinear()?;
            let nlb = b.nonlinear()?;
            let ss = nla.sample_objects(8);
            for s1 in &ss {
                for s2 in &ss {
                    let lhs = phi.g_obj(&nla.product(s1, s2)?)?;
                    let rhs = nlb.product(&phi.g_obj(s1)?, &phi.g_obj(s2)?)?;
                    if find_iso(nlb, &lhs, &rhs)?.is_none() {
                        return Ok(Some(format!("G({s1:?} × {s2:?}) ≇ G{s1:?} × G{s2:?}")));
                    }
                }
            }
            let lhs = phi.g_obj(&nla.terminal())?;
            if find_iso(nlb, &lhs, &nlb.terminal())?.is_none() {
                return Ok(Some("G(⊤) ≇ ⊤".into()));
            }
            Ok(None)
        }));

        report.results.push(run_law_mm("square-multiplication", || {
            // M' ∘ F ≅ G ∘ M, with naturality over sampled morphisms
            let nlb = b.nonlinear()?;
            let mut isos = Vec::new();
            for x in objs.iter().take(sample.clamp(2, 8)) {
                let lhs = b.m_obj(&phi.f_obj(x)?)?;
                let rhs = phi.g_obj(&a.m_obj(x)?)?;
                match find_iso(nlb, &lhs, &rhs)? {
                    None => {
                        return Ok(Some(format!("M'F{x:?} ≇ GM{x:?}")));
                    }
                    Some(pair) => isos.push((x.clone(), pair)),
                }
            }
            for (x, (ix, _)) in &isos {
                for (y, (iy, _)) in &isos {
                    for f in a.hom(x, y)? {
                        let lhs = nlb.compose(iy, &b.m_mor(&phi.f_mor(&f)?)?);
                        let rhs = nlb.compose(&phi.g_mor(&a.m_mor(&f)?)?, ix);
                        if lhs != rhs {
                            return Ok(Some(format!("naturality at {f:?}")));
                        }
                    }
                }
            }
            Ok(None)
        }));

        report.results.push(run_law_mm("square-linearisation", || {
            // L' ∘ G ≅ F ∘ L, with naturality over sampled morphisms
            let nla = a.nonlinear()?;
            let ss = nla.sample_objects(sample.clamp(2, 8));
            let mut isos = Vec::new();
            for s in &ss {
                let lhs = b.l_obj(&phi.g_obj(s)?)?;
                let rhs = phi.f_obj(&a.l_obj(s)?)?;
                match find_iso(b, &lhs, &rhs)? {
                    None => {
                        return Ok(Some(format!("L'G{s:?} ≇ FL{s:?}")));
                    }
                    Some(pair) => isos.push((s.clone(), pair)),
                }
            }
            for (s, (is_, _)) in &isos {
                for (t, (it, _)) in &isos {
                    for f in nla.hom(s, t)? {
                        let lhs = b.compose(it, &b.l_mor(&phi.g_mor(&f)?)?);
                        let rhs = b.compose(&phi.f_mor(&a.l_mor(&f)?)?, is_);
                        if lhs != rhs {
                            return Ok(Some(format!("naturality at {f:?}")));
                        }
                    }
                }
            }
            Ok(None)
        }));
    }

    report
}

fn run_law_mm(
    name: &str,
    body: impl FnOnce() -> Result<Option<String>>,
) -> LawResult {
    match body() {
        Ok(None) => LawResult { law: name.into(), passed: true, checked: 0, counterexample: None },
        Ok(Some(cx)) => {
            LawResult { law: name.into(), passed: false, checked: 0, counterexample: Some(cx) }
        }
        Err(e) => LawResult {
            law: name.into(),
            passed: false,
            checked: 0,
            counterexample: Some(format!("error: {e}")),
        },
    }
}
