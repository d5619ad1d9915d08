//! Engine-agnostic finite group algorithms.
//!
//! A [`Group`] is a generator list together with a membership engine. Matrix
//! and class-two model groups use closure enumeration; permutation groups use
//! the Schreier–Sims engine from [`crate::perm`]. Every algorithm in this module
//! talks to the engine only through order and membership queries, falling back
//! to explicit enumeration where a quotient or element scan is unavoidable.

mod closure;
mod lemmas;
mod quotient;
mod series;
mod subgroups;

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use crate::error::Result;

pub use closure::{enumerate_closure, ClosureEngine, ElementSet};
pub use lemmas::{check_lemmas, lemma6, Finding, FindingStatus, ENUMERABLE_LIMIT};
pub use quotient::{coset_representatives, quotient_on_cosets, MAX_INDEX};
pub use series::{
    derived_series, derived_subgroup, lower_central_series, omega, prime_factorization,
    DerivedSeries, SeriesReport,
};
pub use subgroups::{
    center, commutator_subgroup, frattini_pgroup, minimal_normal_subgroups, MINIMAL_NORMAL_LIMIT,
};

/// Default enumeration cap (2^24 elements).
pub const DEFAULT_CAP: usize = 1 << 24;
/// Default estimated-memory guard for explicit enumeration.
pub const DEFAULT_MEMORY_LIMIT: usize = 6 << 30;

/// A finite group element with an exact product.
pub trait Element: Clone + Eq + Hash + Debug + Send + Sync + 'static {
    /// The product `self * rhs` (apply `self` first for maps acting on the right).
    fn op(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;

    /// Approximate heap footprint, used by the enumeration memory guard.
    fn footprint(&self) -> usize {
        std::mem::size_of::<Self>()
    }

    /// Order of the element; the default multiplies until the identity recurs.
    fn element_order(&self, identity: &Self) -> u64 {
        let mut x = self.clone();
        let mut k = 1;
        while &x != identity {
            x = x.op(self);
            k += 1;
        }
        k
    }

    /// A fresh membership engine for subgroups of the ambient group described by `ctx`.
    fn new_engine(identity: &Self, ctx: &GroupContext) -> Box<dyn Engine<Self>> {
        Box::new(ClosureEngine::new(identity.clone(), ctx))
    }

    fn conj(&self, by: &Self) -> Self {
        by.inv().op(self).op(by)
    }

    /// `self^-1 rhs^-1 self rhs`.
    fn commutator(&self, rhs: &Self) -> Self {
        self.inv().op(&rhs.inv()).op(self).op(rhs)
    }

    fn pow(&self, identity: &Self, mut k: u64) -> Self {
        let mut acc = identity.clone();
        let mut b = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.op(&b);
            }
            b = b.op(&b);
            k >>= 1;
        }
        acc
    }
}

/// Which engine answers order and membership queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineKind {
    Closure,
    Bsgs,
}

impl EngineKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EngineKind::Closure => "closure",
            EngineKind::Bsgs => "bsgs",
        }
    }
}

/// Order and membership oracle for a subgroup, grown one generator at a time.
pub trait Engine<E: Element>: Send + Sync {
    fn order(&self) -> u128;
    /// Membership of `g`, which must lie in the ambient group.
    fn contains(&self, g: &E) -> bool;
    /// Extends the subgroup by `g`; returns whether the subgroup grew.
    fn add_generator(&mut self, g: &E) -> Result<bool>;
    fn kind(&self) -> EngineKind;
    /// The full element list when the engine holds one.
    fn elements(&self) -> Option<&ElementSet<E>> {
        None
    }
}

/// Settings shared by a group and all subgroups derived from it.
#[derive(Debug, Clone)]
pub struct GroupContext {
    pub cap: usize,
    pub memory_limit: usize,
    /// A base for the ambient permutation group, when known from construction.
    pub known_base: Option<Arc<[u32]>>,
}

impl Default for GroupContext {
    fn default() -> Self {
        GroupContext {
            cap: DEFAULT_CAP,
            memory_limit: DEFAULT_MEMORY_LIMIT,
            known_base: None,
        }
    }
}

impl GroupContext {
    pub fn with_cap(cap: usize) -> Self {
        GroupContext {
            cap,
            ..Default::default()
        }
    }

    pub fn with_base(mut self, base: Vec<u32>) -> Self {
        self.known_base = Some(base.into());
        self
    }
}

/// Immutable handle on a finite group given by generators.
///
/// Order, membership and enumeration are computed on first use and cached.
pub struct Group<E: Element> {
    identity: E,
    gens: Vec<E>,
    ctx: Arc<GroupContext>,
    engine: OnceLock<std::result::Result<Arc<dyn Engine<E>>, crate::GroupError>>,
    enumeration: OnceLock<std::result::Result<Arc<ElementSet<E>>, crate::GroupError>>,
}

impl<E: Element> Clone for Group<E> {
    fn clone(&self) -> Self {
        let engine = OnceLock::new();
        if let Some(e) = self.engine.get() {
            let _ = engine.set(e.clone());
        }
        let enumeration = OnceLock::new();
        if let Some(e) = self.enumeration.get() {
            let _ = enumeration.set(e.clone());
        }
        Group {
            identity: self.identity.clone(),
            gens: self.gens.clone(),
            ctx: self.ctx.clone(),
            engine,
            enumeration,
        }
    }
}

impl<E: Element> Debug for Group<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("generators", &self.gens.len())
            .field("order", &self.cached_order())
            .finish()
    }
}

impl<E: Element> Group<E> {
    pub fn new(identity: E, gens: Vec<E>) -> Self {
        Self::with_context(identity, gens, GroupContext::default())
    }

    pub fn with_context(identity: E, gens: Vec<E>, ctx: GroupContext) -> Self {
        Self::in_context(identity, gens, Arc::new(ctx))
    }

    pub(crate) fn in_context(identity: E, gens: Vec<E>, ctx: Arc<GroupContext>) -> Self {
        let gens = gens.into_iter().filter(|g| *g != identity).collect();
        Group {
            identity,
            gens,
            ctx,
            engine: OnceLock::new(),
            enumeration: OnceLock::new(),
        }
    }

    /// A subgroup sharing this group's context, with a prebuilt engine.
    pub(crate) fn subgroup_with_engine(&self, gens: Vec<E>, engine: Box<dyn Engine<E>>) -> Self {
        let g = Self::in_context(self.identity.clone(), gens, self.ctx.clone());
        let _ = g.engine.set(Ok(Arc::from(engine)));
        g
    }

    /// The subgroup generated by `gens` (elements of this group).
    pub fn subgroup(&self, gens: Vec<E>) -> Self {
        Self::in_context(self.identity.clone(), gens, self.ctx.clone())
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn generators(&self) -> &[E] {
        &self.gens
    }

    pub fn context(&self) -> &GroupContext {
        &self.ctx
    }

    /// A group with the same generators and a different enumeration cap.
    pub fn with_cap(&self, cap: usize) -> Self {
        let mut ctx = (*self.ctx).clone();
        ctx.cap = cap;
        Self::with_context(self.identity.clone(), self.gens.clone(), ctx)
    }

    pub fn engine(&self) -> Result<Arc<dyn Engine<E>>> {
        self.engine
            .get_or_init(|| {
                let mut engine = E::new_engine(&self.identity, &self.ctx);
                for g in &self.gens {
                    engine.add_generator(g)?;
                }
                Ok(Arc::from(engine))
            })
            .clone()
    }

    pub fn engine_kind(&self) -> EngineKind {
        match self.engine() {
            Ok(e) => e.kind(),
            Err(_) => E::new_engine(&self.identity, &self.ctx).kind(),
        }
    }

    pub fn order(&self) -> Result<u128> {
        Ok(self.engine()?.order())
    }

    fn cached_order(&self) -> Option<u128> {
        match self.engine.get() {
            Some(Ok(e)) => Some(e.order()),
            _ => None,
        }
    }

    pub fn contains(&self, g: &E) -> Result<bool> {
        Ok(self.engine()?.contains(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// The full element list, in breadth-first order from the identity.
    pub fn elements(&self) -> Result<Arc<ElementSet<E>>> {
        self.enumeration
            .get_or_init(|| {
                if let Ok(engine) = self.engine() {
                    if let Some(set) = engine.elements() {
                        return Ok(Arc::new(set.clone()));
                    }
                }
                enumerate_closure(&self.identity, &self.gens, &self.ctx).map(Arc::new)
            })
            .clone()
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.op(b) == b.op(a)))
    }

    /// Whether every generator of `sub` lies in this group.
    pub fn includes(&self, sub: &Group<E>) -> Result<bool> {
        let engine = self.engine()?;
        Ok(sub.generators().iter().all(|g| engine.contains(g)))
    }

    /// Whether `sub` (a subgroup of this group) is normalized by every generator.
    pub fn normalizes(&self, sub: &Group<E>) -> Result<bool> {
        let engine = sub.engine()?;
        Ok(sub
            .generators()
            .iter()
            .all(|n| self.gens.iter().all(|g| engine.contains(&n.conj(g)))))
    }

    /// Smallest normal subgroup of this group containing `seeds`.
    pub fn normal_closure(&self, seeds: &[E]) -> Result<Group<E>> {
        let mut engine = E::new_engine(&self.identity, &self.ctx);
        let mut gens: Vec<E> = Vec::new();
        let mut queue: Vec<E> = seeds.iter().rev().cloned().collect();
        while let Some(x) = queue.pop() {
            if x == self.identity || engine.contains(&x) {
                continue;
            }
            engine.add_generator(&x)?;
            for g in self.gens.iter().rev() {
                queue.push(x.conj(g));
            }
            gens.push(x);
        }
        Ok(self.subgroup_with_engine(gens, engine))
    }
}

/// Smallest normal subgroup of `g` containing `seeds`.
pub fn normal_closure<E: Element>(g: &Group<E>, seeds: &[E]) -> Result<Group<E>> {
    g.normal_closure(seeds)
}
