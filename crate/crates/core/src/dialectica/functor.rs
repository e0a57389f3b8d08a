//! The transformation is functorial on models: a morphism of
//! linear-nonlinear adjunctions lifts componentwise to a morphism between
//! the transformed models.

use std::sync::Arc;

use crate::dialectica::lift::{dial_f_mor, dial_f_mor_int, dial_f_obj};
use crate::dialectica::linear::DialModel;
use crate::model::{Category, Model, ModelMorphism};

/// Lift a morphism of base models to the dialectica models: object families
/// and strategy tables map through `F` on the linear side and `G` on the
/// nonlinear side; bid structure is untouched.
pub fn lift_model_morphism<A: Model, B: Model>(
    phi: &ModelMorphism<A, B>,
) -> ModelMorphism<DialModel<A>, DialModel<B>> {
    let p = phi.clone();
    let f_obj = move |g: &<DialModel<A> as Category>::Obj| {
        let p = p.clone();
        dial_f_obj(g, Arc::new(move |o: &A::Obj| p.f_obj(o)))
    };
    let p = phi.clone();
    let f_mor = move |m: &<DialModel<A> as Category>::Mor| {
        let po = p.clone();
        let pm = p.clone();
        dial_f_mor(
            m,
            Arc::new(move |o: &A::Obj| po.f_obj(o)),
            Arc::new(move |f: &A::Mor| pm.f_mor(f)),
        )
    };
    let p = phi.clone();
    let g_obj = move |g: &<<DialModel<A> as Model>::NonLinear as Category>::Obj| {
        let p = p.clone();
        dial_f_obj(g, Arc::new(move |o: &<A::NonLinear as Category>::Obj| p.g_obj(o)))
    };
    let p = phi.clone();
    let g_mor = move |m: &<<DialModel<A> as Model>::NonLinear as Category>::Mor| {
        let po = p.clone();
        let pm = p.clone();
        dial_f_mor_int(
            m,
            Arc::new(move |o: &<A::NonLinear as Category>::Obj| po.g_obj(o)),
            Arc::new(move |f: &<A::NonLinear as Category>::Mor| pm.g_mor(f)),
        )
    };
    ModelMorphism::new(format!("dial({})", phi.name), f_obj, f_mor, g_obj, g_mor)
}
