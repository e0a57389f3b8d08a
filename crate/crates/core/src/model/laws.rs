use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::model::{CartesianCategory, Category, Model};

/// Outcome of one law check: pass/fail, how many instances were checked, and
/// a rendered counterexample on failure.
#[derive(Clone, Debug, Serialize)]
pub struct LawResult {
    pub law: String,
    pub passed: bool,
    pub checked: u64,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LawReport {
    pub results: Vec<LawResult>,
}

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn merge(&mut self, other: LawReport) {
        self.results.extend(other.results);
    }
}

/// Which part of the law suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawSuite {
    Category,
    StarAutonomy,
    Products,
    Adjunction,
}

fn run_law(
    name: &str,
    body: impl FnOnce(&mut u64) -> Result<Option<String>>,
) -> LawResult {
    let mut checked = 0u64;
    match body(&mut checked) {
        Ok(None) => {
            LawResult { law: name.into(), passed: true, checked, counterexample: None }
        }
        Ok(Some(cx)) => LawResult {
            law: name.into(),
            passed: false,
            checked,
            counterexample: Some(cx),
        },
        Err(e) => LawResult {
            law: name.into(),
            passed: false,
            checked,
            counterexample: Some(format!("error: {e}")),
        },
    }
}

/// Deterministic tuple sample: exhaustive when the full grid fits in `cap`,
/// otherwise a seeded pseudorandom subsample of size `cap`.
pub fn sample_tuples<T: Clone>(items: &[T], arity: u32, cap: usize, seed: u64) -> Vec<Vec<T>> {
    let n = items.len();
    if n == 0 {
        return Vec::new();
    }
    let total = (n as u128).saturating_pow(arity);
    if total <= cap as u128 {
        let mut out = Vec::with_capacity(total as usize);
        let mut digits = vec![0usize; arity as usize];
        loop {
            out.push(digits.iter().map(|&i| items[i].clone()).collect());
            let mut pos = arity as usize;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < n {
                    break;
                }
                digits[pos] = 0;
                if pos == 0 {
                    return out;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..cap)
            .map(|_| {
                (0..arity)
                    .map(|_| items[rng.random_range(0..n)].clone())
                    .collect()
            })
            .collect()
    }
}

/// Run the full applicable law suite against a model: category laws,
/// symmetric monoidal coherence, *-autonomy, additive universal properties
/// when the model has products, and the linear-nonlinear adjunction laws
/// when it has an exponential. Failures are data, not errors.
pub fn check_model_laws<M: Model>(m: &M, sample_budget: usize) -> LawReport {
    let mut report = check_suite(m, LawSuite::Category, sample_budget);
    report.merge(check_suite(m, LawSuite::StarAutonomy, sample_budget));
    if m.has_products() {
        report.merge(check_suite(m, LawSuite::Products, sample_budget));
    }
    if m.has_exponential() {
        report.merge(check_suite(m, LawSuite::Adjunction, sample_budget));
    }
    report
}

pub fn check_suite<M: Model>(m: &M, suite: LawSuite, sample_budget: usize) -> LawReport {
    let object_cap = 40;
    let objs = m.sample_objects(object_cap);
    let mut report = LawReport::default();
    match suite {
        LawSuite::Category => category_laws(m, &objs, sample_budget, &mut report),
        LawSuite::StarAutonomy => star_autonomy_laws(m, &objs, sample_budget, &mut report),
        LawSuite::Products => product_laws(m, &objs, sample_budget, &mut report),
        LawSuite::Adjunction => adjunction_laws(m, &objs, sample_budget, &mut report),
    }
    report
}

fn category_laws<M: Model>(
    m: &M,
    objs: &[M::Obj],
    cap: usize,
    report: &mut LawReport,
) {
    report.results.push(run_law("identity-validity", |checked| {
        for a in objs {
            *checked += 1;
            let id = m.identity(a);
            if !m.is_valid_mor(&id) || m.dom(&id) != *a || m.cod(&id) != *a {
                return Ok(Some(format!("identity at {a:?}")));
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("identity-neutrality", |checked| {
        for pair in sample_tuples(objs, 2, cap, 11) {
            let (a, b) = (&pair[0], &pair[1]);
            for f in m.hom(a, b)? {
                *checked += 1;
                let lhs = m.compose(&f, &m.identity(a));
                let rhs = m.compose(&m.identity(b), &f);
                if lhs != f || rhs != f {
                    return Ok(Some(format!("{f:?} between {a:?} and {b:?}")));
                }
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("composition-closure", |checked| {
        for triple in sample_tuples(objs, 3, cap, 12) {
            let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
            for f in m.hom(a, b)? {
                for g in m.hom(b, c)? {
                    *checked += 1;
                    let gf = m.compose(&g, &f);
                    if !m.is_valid_mor(&gf) || m.dom(&gf) != *a || m.cod(&gf) != *c {
                        return Ok(Some(format!("{g:?} ∘ {f:?}")));
                    }
                }
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("composition-associativity", |checked| {
        for quad in sample_tuples(objs, 4, cap, 13) {
            let (a, b, c, d) = (&quad[0], &quad[1], &quad[2], &quad[3]);
            for f in m.hom(a, b)? {
                for g in m.hom(b, c)? {
                    for h in m.hom(c, d)? {
                        *checked += 1;
                        let left = m.compose(&m.compose(&h, &g), &f);
                        let right = m.compose(&h, &m.compose(&g, &f));
                        if left != right {
                            return Ok(Some(format!("h={h:?} g={g:?} f={f:?}")));
                        }
                    }
                }
            }
        }
        Ok(None)
    }));
}

fn star_autonomy_laws<M: Model>(
    m: &M,
    objs: &[M::Obj],
    cap: usize,
    report: &mut LawReport,
) {
    report.results.push(run_law("tensor-functorial-identity", |checked| {
        for pair in sample_tuples(objs, 2, cap, 21) {
            let (a, b) = (&pair[0], &pair[1]);
            *checked += 1;
            let lhs = m.tensor_mor(&m.identity(a), &m.identity(b))?;
            let rhs = m.identity(&m.tensor(a, b)?);
            if lhs != rhs {
                return Ok(Some(format!("id⊗id at ({a:?},{b:?})")));
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("tensor-functorial-interchange", |checked| {
        for quad in sample_tuples(objs, 4, cap.min(200), 22) {
            let (a, b, c, d) = (&quad[0], &quad[1], &quad[2], &quad[3]);
            for f in m.hom(a, b)? {
                for g in m.hom(b, c)? {
                    for f2 in m.hom(c, d)? {
                        for g2 in m.hom(d, a)? {
                            *checked += 1;
                            let lhs =
                                m.tensor_mor(&m.compose(&g, &f), &m.compose(&g2, &f2))?;
                            let rhs = m.compose(
                                &m.tensor_mor(&g, &g2)?,
                                &m.tensor_mor(&f, &f2)?,
                            );
                            if lhs != rhs {
                                return Ok(Some(format!(
                                    "interchange at ({a:?},{b:?},{c:?},{d:?})"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("structural-isomorphisms", |checked| {
        for triple in sample_tuples(objs, 3, cap, 23) {
            let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
            *checked += 1;
            let assoc = m.associator(a, b, c)?;
            let assoc_inv = m.associator_inv(a, b, c)?;
            if !m.is_valid_mor(&assoc)
                || !m.is_valid_mor(&assoc_inv)
                || m.compose(&assoc_inv, &assoc) != m.identity(&m.dom(&assoc))
                || m.compose(&assoc, &assoc_inv) != m.identity(&m.cod(&assoc))
            {
                return Ok(Some(format!("associator at ({a:?},{b:?},{c:?})")));
            }
            let braid = m.braiding(a, b)?;
            let braid_back = m.braiding(b, a)?;
            if !m.is_valid_mor(&braid)
                || m.compose(&braid_back, &braid) != m.identity(&m.tensor(a, b)?)
            {
                return Ok(Some(format!("braiding at ({a:?},{b:?})")));
            }
            let lu = m.left_unitor(a)?;
            let lui = m.left_unitor_inv(a)?;
            let ru = m.right_unitor(a)?;
            let rui = m.right_unitor_inv(a)?;
            if !m.is_valid_mor(&lu)
                || !m.is_valid_mor(&ru)
                || m.compose(&lui, &lu) != m.identity(&m.dom(&lu))
                || m.compose(&lu, &lui) != m.identity(a)
                || m.compose(&rui, &ru) != m.identity(&m.dom(&ru))
                || m.compose(&ru, &rui) != m.identity(a)
            {
                return Ok(Some(format!("unitors at {a:?}")));
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("braiding-naturality", |checked| {
        for quad in sample_tuples(objs, 4, cap.min(200), 24) {
            let (a, a2, b, b2) = (&quad[0], &quad[1], &quad[2], &quad[3]);
            for f in m.hom(a, a2)? {
                for g in m.hom(b, b2)? {
                    *checked += 1;
                    let lhs = m.compose(&m.braiding(a2, b2)?, &m.tensor_mor(&f, &g)?);
                    let rhs = m.compose(&m.tensor_mor(&g, &f)?, &m.braiding(a, b)?);
                    if lhs != rhs {
                        return Ok(Some(format!("naturality at {f:?},{g:?}")));
                    }
                }
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("coherence-pentagon", |checked| {
        for quad in sample_tuples(objs, 4, cap.min(100), 25) {
            let (a, b, c, d) = (&quad[0], &quad[1], &quad[2], &quad[3]);
            *checked += 1;
            let ab = m.tensor(a, b)?;
            let cd = m.tensor(c, d)?;
            let bc = m.tensor(b, c)?;
            // ((a⊗b)⊗c)⊗d → a⊗(b⊗(c⊗d)) along both pentagon legs
            let leg1 = m.compose(
                &m.associator(a, b, &cd)?,
                &m.associator(&ab, c, d)?,
            );
            let leg2 = m.compose(
                &m.tensor_mor(&m.identity(a), &m.associator(b, c, d)?)?,
                &m.compose(
                    &m.associator(a, &bc, d)?,
                    &m.tensor_mor(&m.associator(a, b, c)?, &m.identity(d))?,
                ),
            );
            if leg1 != leg2 {
                return Ok(Some(format!("pentagon at ({a:?},{b:?},{c:?},{d:?})")));
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("coherence-triangle", |checked| {
        for pair in sample_tuples(objs, 2, cap, 26) {
            let (a, b) = (&pair[0], &pair[1]);
            *checked += 1;
            let one = m.unit();
            let lhs = m.compose(
                &m.tensor_mor(&m.identity(a), &m.left_unitor(b)?)?,
                &m.associator(a, &one, b)?,
            );
            let rhs = m.tensor_mor(&m.right_unitor(a)?, &m.identity(b))?;
            if lhs != rhs {
                return Ok(Some(format!("triangle at ({a:?},{b:?})")));
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("coherence-hexagon", |checked| {
        for triple in sample_tuples(objs, 3, cap.min(150), 27) {
            let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
            *checked += 1;
            let bc = m.tensor(b, c)?;
            let lhs = m.compose(
                &m.associator(b, c, a)?,
                &m.compose(&m.braiding(a, &bc)?, &m.associator(a, b, c)?),
            );
            let rhs = m.compose(
                &m.tensor_mor(&m.identity(b), &m.braiding(a, c)?)?,
                &m.compose(
                    &m.associator(b, a, c)?,
                    &m.tensor_mor(&m.braiding(a, b)?, &m.identity(c))?,
                ),
            );
            if lhs != rhs {
                return Ok(Some(format!("hexagon at ({a:?},{b:?},{c:?})")));
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("dual-involution", |checked| {
        for pair in sample_tuples(objs, 2, cap, 28) {
            let (a, b) = (&pair[0], &pair[1]);
            *checked += 1;
            if m.dual(&m.dual(a)) != *a {
                return Ok(Some(format!("object {a:?}")));
            }
            for f in m.hom(a, b)? {
                if m.dual_mor(&m.dual_mor(&f)) != f {
                    return Ok(Some(format!("morphism {f:?}")));
                }
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("star-autonomy-bijection", |checked| {
        for triple in sample_tuples(objs, 3, cap, 29) {
            let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
            *checked += 1;
            let lhs = m.hom_count(&m.tensor(a, b)?, &m.dual(c))?;
            let rhs = m.hom_count(a, &m.dual(&m.tensor(b, c)?))?;
            if lhs != rhs {
                return Ok(Some(format!(
                    "hom({a:?}⊗{b:?}, {c:?}^⊥) has {lhs} elements but hom({a:?}, ({b:?}⊗{c:?})^⊥) has {rhs}"
                )));
            }
        }
        Ok(None)
    }));
}

fn product_laws<M: Model>(
    m: &M,
    objs: &[M::Obj],
    cap: usize,
    report: &mut LawReport,
) {
    report.results.push(run_law("terminal-and-initial", |checked| {
        let top = m.top()?;
        let zero = m.zero()?;
        for a in objs {
            *checked += 1;
            if m.hom_count(a, &top)? != 1 {
                return Ok(Some(format!("hom({a:?}, ⊤) is not a singleton")));
            }
            if m.hom_count(&zero, a)? != 1 {
                return Ok(Some(format!("hom(0, {a:?}) is not a singleton")));
            }
            let to_top = m.to_top(a)?;
            let from_zero = m.from_zero(a)?;
            if !m.is_valid_mor(&to_top) || !m.is_valid_mor(&from_zero) {
                return Ok(Some(format!("canonical maps at {a:?}")));
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("with-universal-property", |checked| {
        for triple in sample_tuples(objs, 3, cap.min(300), 31) {
            let (k, a, b) = (&triple[0], &triple[1], &triple[2]);
            *checked += 1;
            let ab = m.with(a, b)?;
            let pl = m.with_proj_left(a, b)?;
            let pr = m.with_proj_right(a, b)?;
            if !m.is_valid_mor(&pl) || !m.is_valid_mor(&pr) {
                return Ok(Some(format!("projections at ({a:?},{b:?})")));
            }
            let into_with = m.hom(k, &ab)?;
            let into_a = m.hom(k, a)?;
            let into_b = m.hom(k, b)?;
            if into_with.len() as u64 != (into_a.len() * into_b.len()) as u64 {
                return Ok(Some(format!(
                    "|hom({k:?},&)| = {} ≠ {}·{}",
                    into_with.len(),
                    into_a.len(),
                    into_b.len()
                )));
            }
            for f in &into_a {
                for g in &into_b {
                    let paired = m.with_pairing(f, g)?;
                    if !into_with.contains(&paired)
                        || m.compose(&pl, &paired) != *f
                        || m.compose(&pr, &paired) != *g
                    {
                        return Ok(Some(format!("pairing of {f:?},{g:?}")));
                    }
                }
            }
            for h in &into_with {
                let again =
                    m.with_pairing(&m.compose(&pl, h), &m.compose(&pr, h))?;
                if again != *h {
                    return Ok(Some(format!("uniqueness at {h:?}")));
                }
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("plus-universal-property", |checked| {
        for triple in sample_tuples(objs, 3, cap.min(300), 32) {
            let (k, a, b) = (&triple[0], &triple[1], &triple[2]);
            *checked += 1;
            let ab = m.plus(a, b)?;
            let il = m.plus_inj_left(a, b)?;
            let ir = m.plus_inj_right(a, b)?;
            if !m.is_valid_mor(&il) || !m.is_valid_mor(&ir) {
                return Ok(Some(format!("injections at ({a:?},{b:?})")));
            }
            let from_plus = m.hom(&ab, k)?;
            let from_a = m.hom(a, k)?;
            let from_b = m.hom(b, k)?;
            if from_plus.len() != from_a.len() * from_b.len() {
                return Ok(Some(format!(
                    "|hom(⊕,{k:?})| = {} ≠ {}·{}",
                    from_plus.len(),
                    from_a.len(),
                    from_b.len()
                )));
            }
            for f in &from_a {
                for g in &from_b {
                    let co = m.plus_copairing(f, g)?;
                    if !from_plus.contains(&co)
                        || m.compose(&co, &il) != *f
                        || m.compose(&co, &ir) != *g
                    {
                        return Ok(Some(format!("copairing of {f:?},{g:?}")));
                    }
                }
            }
            for h in &from_plus {
                let again =
                    m.plus_copairing(&m.compose(h, &il), &m.compose(h, &ir))?;
                if again != *h {
                    return Ok(Some(format!("uniqueness at {h:?}")));
                }
            }
        }
        Ok(None)
    }));
}

fn adjunction_laws<M: Model>(
    m: &M,
    objs: &[M::Obj],
    cap: usize,
    report: &mut LawReport,
) {
    let nl_objs = match m.nonlinear() {
        Ok(nl) => nl.sample_objects(40),
        Err(_) => Vec::new(),
    };

    report.results.push(run_law("adjunction-bijection", |checked| {
        let nl = m.nonlinear()?;
        for s in nl_objs.iter().take(cap.max(1)) {
            for r in objs.iter().take(cap.max(1)) {
                *checked += 1;
                let ls = m.l_obj(s)?;
                let mr = m.m_obj(r)?;
                let outer = m.hom(&ls, r)?;
                let inner = nl.hom(s, &mr)?;
                if outer.len() != inner.len() {
                    return Ok(Some(format!(
                        "|hom(L {s:?}, {r:?})| = {} ≠ |hom({s:?}, M {r:?})| = {}",
                        outer.len(),
                        inner.len()
                    )));
                }
                for psi in &outer {
                    let phi = m.transpose_in(psi, s, r)?;
                    if !inner.contains(&phi) {
                        return Ok(Some(format!("transpose of {psi:?} not in hom")));
                    }
                    if m.transpose_out(&phi, s, r)? != *psi {
                        return Ok(Some(format!("round-trip failed at {psi:?}")));
                    }
                }
                for phi in &inner {
                    let psi = m.transpose_out(phi, s, r)?;
                    if !outer.contains(&psi) {
                        return Ok(Some(format!("transpose of {phi:?} not in hom")));
                    }
                    if m.transpose_in(&psi, s, r)? != *phi {
                        return Ok(Some(format!("round-trip failed at {phi:?}")));
                    }
                }
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("adjunction-naturality", |checked| {
        let nl = m.nonlinear()?;
        for s2 in nl_objs.iter().take(6) {
            for s in nl_objs.iter().take(6) {
                for r in objs.iter().take(6) {
                    for r2 in objs.iter().take(6) {
                        let ls = m.l_obj(s)?;
                        for sigma in nl.hom(s2, s)? {
                            for rho in m.hom(r, r2)? {
                                for psi in m.hom(&ls, r)? {
                                    *checked += 1;
                                    // transpose(ρ ∘ ψ ∘ L σ) = M ρ ∘ transpose(ψ) ∘ σ
                                    let lsigma = m.l_mor(&sigma)?;
                                    let lhs = m.transpose_in(
                                        &m.compose(&rho, &m.compose(&psi, &lsigma)),
                                        s2,
                                        r2,
                                    )?;
                                    let rhs = nl.compose(
                                        &m.m_mor(&rho)?,
                                        &nl.compose(&m.transpose_in(&psi, s, r)?, &sigma),
                                    );
                                    if lhs != rhs {
                                        return Ok(Some(format!(
                                            "σ={sigma:?} ρ={rho:?} ψ={psi:?}"
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }));

    report.results.push(run_law("linearisation-strong-monoidal", |checked| {
        let nl = m.nonlinear()?;
        for pair in sample_tuples(&nl_objs, 2, cap, 41) {
            let (s1, s2) = (&pair[0], &pair[1]);
            *checked += 1;
            let fwd = m.l_monoidal(s1, s2)?;
            let bwd = m.l_monoidal_inv(s1, s2)?;
            let src = m.tensor(&m.l_obj(s1)?, &m.l_obj(s2)?)?;
            let dst = m.l_obj(&nl.product(s1, s2)?)?;
            if !m.is_valid_mor(&fwd)
                || m.dom(&fwd) != src
                || m.cod(&fwd) != dst
                || m.compose(&bwd, &fwd) != m.identity(&src)
                || m.compose(&fwd, &bwd) != m.identity(&dst)
            {
                return Ok(Some(format!("L-monoidality at ({s1:?},{s2:?})")));
            }
        }
        let unit_fwd = m.l_unit()?;
        let unit_bwd = m.l_unit_inv()?;
        *checked += 1;
        if !m.is_valid_mor(&unit_fwd)
            || m.compose(&unit_bwd, &unit_fwd) != m.identity(&m.unit())
        {
            return Ok(Some("L-unit map is not invertible".into()));
        }
        Ok(None)
    }));

    report.results.push(run_law("multiplication-lax-monoidal", |checked| {
        let nl = m.nonlinear()?;
        for pair in sample_tuples(objs, 2, cap, 42) {
            let (r1, r2) = (&pair[0], &pair[1]);
            *checked += 1;
            let f = m.m_monoidal(r1, r2)?;
            let src = nl.product(&m.m_obj(r1)?, &m.m_obj(r2)?)?;
            let dst = m.m_obj(&m.tensor(r1, r2)?)?;
            if !nl.is_valid_mor(&f) || nl.dom(&f) != src || nl.cod(&f) != dst {
                return Ok(Some(format!("M-monoidality at ({r1:?},{r2:?})")));
            }
        }
        let u = m.m_unit()?;
        *checked += 1;
        if !nl.is_valid_mor(&u) {
            return Ok(Some("M-unit map invalid".into()));
        }
        Ok(None)
    }));

    report.results.push(run_law("exponential-comonad", |checked| {
        for a in objs.iter().take(cap.max(1)) {
            *checked += 1;
            let bang_a = m.bang(a)?;
            let der = m.dereliction(a)?;
            let dig = m.digging(a)?;
            let weak = m.weakening(a)?;
            let contr = m.contraction(a)?;
            if !m.is_valid_mor(&der)
                || m.dom(&der) != bang_a
                || m.cod(&der) != *a
                || !m.is_valid_mor(&dig)
                || m.dom(&dig) != bang_a
                || m.cod(&dig) != m.bang(&bang_a)?
                || !m.is_valid_mor(&weak)
                || m.cod(&weak) != m.unit()
                || !m.is_valid_mor(&contr)
                || m.cod(&contr) != m.tensor(&bang_a, &bang_a)?
            {
                return Ok(Some(format!("exponential structure at {a:?}")));
            }
            // counit laws of the comonad
            let left = m.compose(&m.dereliction(&bang_a)?, &dig);
            let right = m.compose(&m.bang_mor(&der)?, &dig);
            if left != m.identity(&bang_a) || right != m.identity(&bang_a) {
                return Ok(Some(format!("comonad counit laws at {a:?}")));
            }
            // coassociativity
            let l2 = m.compose(&m.digging(&bang_a)?, &dig);
            let r2 = m.compose(&m.bang_mor(&dig)?, &dig);
            if l2 != r2 {
                return Ok(Some(format!("comonad coassociativity at {a:?}")));
            }
        }
        Ok(None)
    }));
}

/// Search for an isomorphism pair between two objects by enumerating both
/// hom-sets; returns the first mutually inverse pair in deterministic order.
pub fn find_iso<C: Category>(
    c: &C,
    a: &C::Obj,
    b: &C::Obj,
) -> Result<Option<(C::Mor, C::Mor)>> {
    let fwd = c.hom(a, b)?;
    if fwd.is_empty() {
        return Ok(None);
    }
    let bwd = c.hom(b, a)?;
    let ida = c.identity(a);
    let idb = c.identity(b);
    for f in &fwd {
        for g in &bwd {
            if c.compose(g, f) == ida && c.compose(f, g) == idb {
                return Ok(Some((f.clone(), g.clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::boolean_lineale;

    #[test]
    fn boolean_lineale_passes_all_laws() {
        let b = boolean_lineale();
        let report = check_model_laws(&b, 2000);
        for r in &report.results {
            assert!(r.passed, "law {} failed: {:?}", r.law, r.counterexample);
        }
        // every suite actually ran
        assert!(report.results.len() >= 15);
    }
}
