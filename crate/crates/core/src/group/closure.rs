use indexmap::IndexSet;

use super::{Element, Engine, EngineKind, GroupContext};
use crate::error::{GroupError, Result};

/// Deduplicated element list; indices follow discovery order.
#[derive(Debug, Clone)]
pub struct ElementSet<E: Element> {
    set: IndexSet<E>,
}

impl<E: Element> ElementSet<E> {
    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains(&self, g: &E) -> bool {
        self.set.contains(g)
    }

    pub fn index_of(&self, g: &E) -> Option<usize> {
        self.set.get_index_of(g)
    }

    pub fn get(&self, i: usize) -> &E {
        &self.set[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &E> {
        self.set.iter()
    }
}

struct Guard {
    cap: usize,
    memory_limit: usize,
    per_element: usize,
}

impl Guard {
    fn new(identity: &impl Element, ctx: &GroupContext) -> Self {
        Guard {
            cap: ctx.cap,
            memory_limit: ctx.memory_limit,
            per_element: identity.footprint() + 16,
        }
    }

    fn check(&self, len: usize) -> Result<()> {
        if len > self.cap || len.saturating_mul(self.per_element) > self.memory_limit {
            return Err(GroupError::CapExceeded { cap: self.cap });
        }
        Ok(())
    }
}

/// Breadth-first closure of the identity under right multiplication by `gens`.
pub fn enumerate_closure<E: Element>(
    identity: &E,
    gens: &[E],
    ctx: &GroupContext,
) -> Result<ElementSet<E>> {
    let guard = Guard::new(identity, ctx);
    let mut set = IndexSet::new();
    set.insert(identity.clone());
    let mut next = 0;
    while next < set.len() {
        let x = set[next].clone();
        next += 1;
        for g in gens {
            let y = x.op(g);
            if set.insert(y) {
                guard.check(set.len())?;
            }
        }
    }
    Ok(ElementSet { set })
}

/// Membership by explicit enumeration, extended incrementally.
pub struct ClosureEngine<E: Element> {
    elements: ElementSet<E>,
    gens: Vec<E>,
    guard: Guard,
}

impl<E: Element> ClosureEngine<E> {
    pub fn new(identity: E, ctx: &GroupContext) -> Self {
        let guard = Guard::new(&identity, ctx);
        let mut set = IndexSet::new();
        set.insert(identity);
        ClosureEngine {
            elements: ElementSet { set },
            gens: Vec::new(),
            guard,
        }
    }
}

impl<E: Element> Engine<E> for ClosureEngine<E> {
    fn order(&self) -> u128 {
        self.elements.len() as u128
    }

    fn contains(&self, g: &E) -> bool {
        self.elements.contains(g)
    }

    fn add_generator(&mut self, g: &E) -> Result<bool> {
        if self.elements.contains(g) {
            return Ok(false);
        }
        self.gens.push(g.clone());
        let set = &mut self.elements.set;
        // Old elements are already closed under the old generators, so only
        // the new generator is applied to them; new elements get every generator.
        let old = set.len();
        for i in 0..old {
            let y = set[i].op(g);
            if set.insert(y) {
                self.guard.check(set.len())?;
            }
        }
        let mut next = old;
        while next < set.len() {
            let x = set[next].clone();
            next += 1;
            for h in &self.gens {
                let y = x.op(h);
                if set.insert(y) {
                    self.guard.check(set.len())?;
                }
            }
        }
        Ok(true)
    }

    fn kind(&self) -> EngineKind {
        EngineKind::Closure
    }

    fn elements(&self) -> Option<&ElementSet<E>> {
        Some(&self.elements)
    }
}
