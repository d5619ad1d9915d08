use std::collections::HashSet;

use super::series::prime_factorization;
use super::{Element, Group};
use crate::error::{GroupError, Result};

/// Upper bound on group order for [`minimal_normal_subgroups`].
pub const MINIMAL_NORMAL_LIMIT: u128 = 1_000_000;

fn subgroup_from<E: Element>(g: &Group<E>, elements: impl IntoIterator<Item = E>) -> Result<Group<E>> {
    let mut engine = E::new_engine(g.identity(), g.context());
    let mut gens = Vec::new();
    for x in elements {
        if engine.add_generator(&x)? {
            gens.push(x);
        }
    }
    Ok(g.subgroup_with_engine(gens, engine))
}

/// `Z(G)`, by scanning the enumeration for elements commuting with every generator.
pub fn center<E: Element>(g: &Group<E>) -> Result<Group<E>> {
    let elements = g.elements()?;
    let gens = g.generators();
    let central = elements
        .iter()
        .filter(|z| gens.iter().all(|h| z.op(h) == h.op(z)))
        .cloned();
    subgroup_from(g, central)
}

/// `[N, G]` for `N` normal in `G`: the normal closure of `[n, g]` over generators.
pub fn commutator_subgroup<E: Element>(g: &Group<E>, n: &Group<E>) -> Result<Group<E>> {
    let mut seeds = Vec::new();
    for a in n.generators() {
        for b in g.generators() {
            let c = a.commutator(b);
            if &c != g.identity() && !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    g.normal_closure(&seeds)
}

/// `Φ(P) = P^p P'`, the normal closure of `p`-th powers and commutators of generators.
pub fn frattini_pgroup<E: Element>(p: &Group<E>) -> Result<Group<E>> {
    let order = p.order()?;
    let f = prime_factorization(order);
    if f.len() > 1 {
        return Err(GroupError::NotPGroup { order });
    }
    let Some(&(prime, _)) = f.first() else {
        return Ok(p.subgroup(Vec::new()));
    };
    let gens = p.generators();
    let mut seeds: Vec<E> = gens
        .iter()
        .map(|g| g.pow(p.identity(), prime as u64))
        .collect();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            seeds.push(a.commutator(b));
        }
    }
    p.normal_closure(&seeds)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// All minimal normal subgroups, as normal closures of prime-order elements.
///
/// Elements are visited in enumeration order; each conjugacy class of cyclic
/// subgroups of prime order contributes one normal closure.
pub fn minimal_normal_subgroups<E: Element>(g: &Group<E>) -> Result<Vec<Group<E>>> {
    let order = g.order()?;
    if order > MINIMAL_NORMAL_LIMIT {
        return Err(GroupError::CapExceeded {
            cap: MINIMAL_NORMAL_LIMIT as usize,
        });
    }
    let elements = g.elements()?;
    let id = g.identity();
    let mut seen: HashSet<E> = HashSet::new();
    let mut candidates: Vec<Group<E>> = Vec::new();
    for x in elements.iter() {
        if x == id || seen.contains(x) {
            continue;
        }
        let o = x.element_order(id);
        if !is_prime(o) {
            continue;
        }
        // Mark the class of <x> under conjugation.
        let mut class: HashSet<E> = HashSet::new();
        class.insert(x.clone());
        let mut stack = vec![x.clone()];
        while let Some(y) = stack.pop() {
            let mut pw = y.clone();
            for _ in 1..o {
                seen.insert(pw.clone());
                pw = pw.op(&y);
            }
            for h in g.generators() {
                let c = y.conj(h);
                if class.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
        let n = g.normal_closure(std::slice::from_ref(x))?;
        candidates.push(n);
    }
    let orders: Vec<u128> = candidates
        .iter()
        .map(|n| n.order())
        .collect::<Result<_>>()?;
    let mut minimal: Vec<Group<E>> = Vec::new();
    let mut minimal_orders: Vec<u128> = Vec::new();
    let mut idx: Vec<usize> = (0..candidates.len()).collect();
    idx.sort_by_key(|&i| orders[i]);
    for i in idx {
        let n = &candidates[i];
        let mut dominated = false;
        for (m, &mo) in minimal.iter().zip(&minimal_orders) {
            if mo <= orders[i] && n.includes(m)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            minimal.push(n.clone());
            minimal_orders.push(orders[i]);
        }
    }
    Ok(minimal)
}
