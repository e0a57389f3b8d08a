use std::fmt::Debug;

use crate::error::Result;

/// A finite, enumerable category with decidable equality of objects and
/// morphisms.
///
/// `hom` returns the full enumerated hom-set in a deterministic order;
/// implementations may override `hom_count` / `hom_first` with cheaper
/// procedures (the dialectica models do, since full hom-sets blow up long
/// before emptiness or cardinality become hard to decide).
pub trait Category: Clone + Send + Sync + 'static {
    type Obj: Clone + Eq + Ord + Debug + Send + Sync + 'static;
    type Mor: Clone + Eq + Ord + Debug + Send + Sync + 'static;

    /// Deterministic object sample used by the law suites. For categories
    /// with infinitely many objects this is a bounded generator; `cap`
    /// limits its size.
    fn sample_objects(&self, cap: usize) -> Vec<Self::Obj>;

    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Vec<Self::Mor>>;

    fn hom_count(&self, a: &Self::Obj, b: &Self::Obj) -> Result<u64> {
        Ok(self.hom(a, b)?.len() as u64)
    }

    fn hom_first(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Option<Self::Mor>> {
        Ok(self.hom(a, b)?.into_iter().next())
    }

    fn hom_nonempty(&self, a: &Self::Obj, b: &Self::Obj) -> Result<bool> {
        Ok(self.hom_first(a, b)?.is_some())
    }

    fn identity(&self, a: &Self::Obj) -> Self::Mor;

    /// `g ∘ f` (apply `f` first). Panics when `cod f ≠ dom g`; callers
    /// compose only well-typed morphisms.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;

    fn cod(&self, f: &Self::Mor) -> Self::Obj;

    /// Structural well-formedness of a morphism descriptor. Law suites use
    /// this to detect broken structure without panicking.
    fn is_valid_mor(&self, f: &Self::Mor) -> bool;
}

/// A category with finite products (the nonlinear side of a
/// linear-nonlinear adjunction).
pub trait CartesianCategory: Category {
    fn terminal(&self) -> Self::Obj;

    fn product(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;

    /// `a × b → a`
    fn proj_left(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;

    /// `a × b → b`
    fn proj_right(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;

    /// `⟨f, g⟩ : dom f → a × b` for `f : k → a`, `g : k → b`.
    fn pairing(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn to_terminal(&self, a: &Self::Obj) -> Result<Self::Mor>;

    fn diagonal(&self, a: &Self::Obj) -> Result<Self::Mor> {
        let id = self.identity(a);
        self.pairing(&id, &id)
    }

    /// Left-associated product fold; empty product is the terminal object,
    /// a singleton fold is the object itself.
    fn product_fold(&self, objs: &[Self::Obj]) -> Result<Self::Obj> {
        match objs.split_first() {
            None => Ok(self.terminal()),
            Some((first, rest)) => {
                let mut acc = first.clone();
                for o in rest {
                    acc = self.product(&acc, o)?;
                }
                Ok(acc)
            }
        }
    }
}

/// A model of multiplicative(-additive-exponential) linear logic: a
/// *-autonomous category with optional finite products and an optional
/// linear-nonlinear adjunction `L ⊣ M : R → S`.
///
/// The additive and exponential operations are capability-gated by
/// `has_products` / `has_exponential`; calling a gated operation on a model
/// without the capability returns an error.
pub trait Model: Category {
    // ---- symmetric monoidal, *-autonomous core ----

    fn unit(&self) -> Self::Obj;

    fn tensor(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;

    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn dual(&self, a: &Self::Obj) -> Self::Obj;

    fn dual_mor(&self, f: &Self::Mor) -> Self::Mor;

    fn bottom(&self) -> Self::Obj {
        self.dual(&self.unit())
    }

    /// `a ⅋ b = (a^⊥ ⊗ b^⊥)^⊥`, derived.
    fn par(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj> {
        Ok(self.dual(&self.tensor(&self.dual(a), &self.dual(b))?))
    }

    fn par_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok(self.dual_mor(&self.tensor_mor(&self.dual_mor(f), &self.dual_mor(g))?))
    }

    /// `a ⊸ b = (a ⊗ b^⊥)^⊥`, derived.
    fn lollipop(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj> {
        Ok(self.dual(&self.tensor(a, &self.dual(b))?))
    }

    // structural isomorphisms of the monoidal structure

    /// `(a ⊗ b) ⊗ c → a ⊗ (b ⊗ c)`
    fn associator(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Mor>;
    fn associator_inv(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Mor>;

    /// `a ⊗ b → b ⊗ a`
    fn braiding(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;

    /// `1 ⊗ a → a`
    fn left_unitor(&self, a: &Self::Obj) -> Result<Self::Mor>;
    fn left_unitor_inv(&self, a: &Self::Obj) -> Result<Self::Mor>;

    /// `a ⊗ 1 → a`
    fn right_unitor(&self, a: &Self::Obj) -> Result<Self::Mor>;
    fn right_unitor_inv(&self, a: &Self::Obj) -> Result<Self::Mor>;

    /// Left-associated tensor fold; the fold over the empty list is the
    /// unit.
    fn tensor_fold(&self, objs: &[Self::Obj]) -> Result<Self::Obj> {
        match objs.split_first() {
            None => Ok(self.unit()),
            Some((first, rest)) => {
                let mut acc = first.clone();
                for o in rest {
                    acc = self.tensor(&acc, o)?;
                }
                Ok(acc)
            }
        }
    }

    fn tensor_fold_mor(&self, mors: &[Self::Mor]) -> Result<Self::Mor> {
        match mors.split_first() {
            None => Ok(self.identity(&self.unit())),
            Some((first, rest)) => {
                let mut acc = first.clone();
                for m in rest {
                    acc = self.tensor_mor(&acc, m)?;
                }
                Ok(acc)
            }
        }
    }

    // ---- additives (capability: products) ----

    fn has_products(&self) -> bool;

    fn top(&self) -> Result<Self::Obj>;

    fn zero(&self) -> Result<Self::Obj>;

    fn with(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;

    fn plus(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;

    /// `a & b → a`
    fn with_proj_left(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;

    /// `a & b → b`
    fn with_proj_right(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;

    /// `⟨f, g⟩ : k → a & b`
    fn with_pairing(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn to_top(&self, a: &Self::Obj) -> Result<Self::Mor>;

    /// `a → a ⊕ b`
    fn plus_inj_left(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;

    /// `b → a ⊕ b`
    fn plus_inj_right(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;

    /// `[f, g] : a ⊕ b → k`
    fn plus_copairing(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn from_zero(&self, a: &Self::Obj) -> Result<Self::Mor>;

    // ---- exponentials (capability: linear-nonlinear adjunction) ----

    fn has_exponential(&self) -> bool;

    type NonLinear: CartesianCategory;

    fn nonlinear(&self) -> Result<&Self::NonLinear>;

    /// Multiplication functor `M : R → S` on objects.
    fn m_obj(&self, r: &Self::Obj) -> Result<<Self::NonLinear as Category>::Obj>;

    fn m_mor(&self, f: &Self::Mor) -> Result<<Self::NonLinear as Category>::Mor>;

    /// Linearisation functor `L : S → R` on objects.
    fn l_obj(&self, s: &<Self::NonLinear as Category>::Obj) -> Result<Self::Obj>;

    fn l_mor(&self, f: &<Self::NonLinear as Category>::Mor) -> Result<Self::Mor>;

    /// Adjunction transpose of `ψ : L s → r` into `s → M r`.
    fn transpose_in(
        &self,
        psi: &Self::Mor,
        s: &<Self::NonLinear as Category>::Obj,
        r: &Self::Obj,
    ) -> Result<<Self::NonLinear as Category>::Mor>;

    /// Adjunction transpose of `φ : s → M r` into `L s → r`.
    fn transpose_out(
        &self,
        phi: &<Self::NonLinear as Category>::Mor,
        s: &<Self::NonLinear as Category>::Obj,
        r: &Self::Obj,
    ) -> Result<Self::Mor>;

    /// Strong monoidality of `L`: `L s ⊗ L s' → L (s × s')`, invertible.
    fn l_monoidal(
        &self,
        s1: &<Self::NonLinear as Category>::Obj,
        s2: &<Self::NonLinear as Category>::Obj,
    ) -> Result<Self::Mor>;

    fn l_monoidal_inv(
        &self,
        s1: &<Self::NonLinear as Category>::Obj,
        s2: &<Self::NonLinear as Category>::Obj,
    ) -> Result<Self::Mor>;

    /// `1 → L ⊤`, invertible.
    fn l_unit(&self) -> Result<Self::Mor>;
    fn l_unit_inv(&self) -> Result<Self::Mor>;

    /// Lax monoidality of `M`: `M r × M r' → M (r ⊗ r')`.
    fn m_monoidal(
        &self,
        r1: &Self::Obj,
        r2: &Self::Obj,
    ) -> Result<<Self::NonLinear as Category>::Mor>;

    /// `⊤ → M 1`.
    fn m_unit(&self) -> Result<<Self::NonLinear as Category>::Mor>;

    /// `⊗ᵢ L sᵢ → L (Πᵢ sᵢ)` for the left-associated folds, from the binary
    /// monoidality maps.
    fn l_monoidal_fold(
        &self,
        ss: &[<Self::NonLinear as Category>::Obj],
    ) -> Result<Self::Mor> {
        match ss.len() {
            0 => self.l_unit(),
            1 => Ok(self.identity(&self.l_obj(&ss[0])?)),
            n => {
                let nl = self.nonlinear()?;
                let front_prod = nl.product_fold(&ss[..n - 1])?;
                let last_l = self.l_obj(&ss[n - 1])?;
                let step = self.tensor_mor(
                    &self.l_monoidal_fold(&ss[..n - 1])?,
                    &self.identity(&last_l),
                )?;
                Ok(self.compose(&self.l_monoidal(&front_prod, &ss[n - 1])?, &step))
            }
        }
    }

    /// `L (Πᵢ sᵢ) → ⊗ᵢ L sᵢ`, the inverse fold.
    fn l_monoidal_fold_inv(
        &self,
        ss: &[<Self::NonLinear as Category>::Obj],
    ) -> Result<Self::Mor> {
        match ss.len() {
            0 => self.l_unit_inv(),
            1 => Ok(self.identity(&self.l_obj(&ss[0])?)),
            n => {
                let nl = self.nonlinear()?;
                let front_prod = nl.product_fold(&ss[..n - 1])?;
                let last_l = self.l_obj(&ss[n - 1])?;
                let step = self.tensor_mor(
                    &self.l_monoidal_fold_inv(&ss[..n - 1])?,
                    &self.identity(&last_l),
                )?;
                Ok(self.compose(&step, &self.l_monoidal_inv(&front_prod, &ss[n - 1])?))
            }
        }
    }

    // derived exponential structure

    /// `!a = L (M a)`
    fn bang(&self, a: &Self::Obj) -> Result<Self::Obj> {
        self.l_obj(&self.m_obj(a)?)
    }

    fn bang_mor(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.l_mor(&self.m_mor(f)?)
    }

    /// `?a = (!(a^⊥))^⊥`
    fn whynot(&self, a: &Self::Obj) -> Result<Self::Obj> {
        Ok(self.dual(&self.bang(&self.dual(a))?))
    }

    /// Dereliction `!a → a`: the counit, `transpose_out(id_{M a})`.
    fn dereliction(&self, a: &Self::Obj) -> Result<Self::Mor> {
        let ma = self.m_obj(a)?;
        let nl = self.nonlinear()?;
        self.transpose_out(&nl.identity(&ma), &ma, a)
    }

    /// Digging `!a → !!a`: `L` applied to the adjunction unit at `M a`.
    fn digging(&self, a: &Self::Obj) -> Result<Self::Mor> {
        let ma = self.m_obj(a)?;
        let lma = self.l_obj(&ma)?;
        let unit = self.transpose_in(&self.identity(&lma), &ma, &lma)?;
        self.l_mor(&unit)
    }

    /// Weakening `!a → 1`.
    fn weakening(&self, a: &Self::Obj) -> Result<Self::Mor> {
        let ma = self.m_obj(a)?;
        let nl = self.nonlinear()?;
        let to_top = self.l_mor(&nl.to_terminal(&ma)?)?;
        Ok(self.compose(&self.l_unit_inv()?, &to_top))
    }

    /// Contraction `!a → !a ⊗ !a`.
    fn contraction(&self, a: &Self::Obj) -> Result<Self::Mor> {
        let ma = self.m_obj(a)?;
        let nl = self.nonlinear()?;
        let dup = self.l_mor(&nl.diagonal(&ma)?)?;
        Ok(self.compose(&self.l_monoidal_inv(&ma, &ma)?, &dup))
    }

    /// `!a → ⊗ⁿ !a` matching the left-associated tensor fold: weakening at
    /// `n = 0`, identity at `n = 1`, iterated contraction otherwise.
    fn spread(&self, a: &Self::Obj, n: usize) -> Result<Self::Mor> {
        let bang_a = self.bang(a)?;
        match n {
            0 => self.weakening(a),
            1 => Ok(self.identity(&bang_a)),
            _ => {
                // !a → (⊗ⁿ⁻¹ !a) ⊗ !a
                let head = self.spread(a, n - 1)?;
                let step = self.tensor_mor(&head, &self.identity(&bang_a))?;
                Ok(self.compose(&step, &self.contraction(a)?))
            }
        }
    }

    /// Whether bounded enumeration is complete for validity verdicts over
    /// this model (true for idempotent bases where the tensor is the order
    /// meet, e.g. the boolean lineale).
    fn truncation_complete(&self) -> bool {
        false
    }
}
