use std::collections::HashMap;

use super::{Element, Group, GroupContext};
use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// Largest index accepted by [`quotient_on_cosets`].
pub const MAX_INDEX: u128 = 10_000;

struct CosetTable<E> {
    reps: Vec<E>,
    /// `action[k][i]` is the coset of `reps[i] * gens[k]`.
    action: Vec<Vec<u32>>,
}

fn coset_table<E: Element>(g: &Group<E>, n: &Group<E>) -> Result<CosetTable<E>> {
    let index = g.order()? / n.order()?;
    if index > MAX_INDEX {
        return Err(GroupError::CapExceeded {
            cap: MAX_INDEX as usize,
        });
    }
    let ngens = g.generators().len();
    let mut reps = vec![g.identity().clone()];
    let mut action: Vec<Vec<u32>> = vec![Vec::new(); ngens];

    // Label cosets through an explicit element map when N is small enough,
    // otherwise by membership tests against every known representative.
    let n_elems = if n.order()? * index <= g.context().cap as u128 {
        Some(n.elements()?)
    } else {
        None
    };
    let mut label: HashMap<E, u32> = HashMap::new();
    if let Some(ne) = &n_elems {
        for x in ne.iter() {
            label.insert(x.clone(), 0);
        }
    }
    let n_engine = n.engine()?;
    let mut next = 0;
    while next < reps.len() {
        let r = reps[next].clone();
        next += 1;
        for (k, h) in g.generators().iter().enumerate() {
            let y = r.op(h);
            let found = match &n_elems {
                Some(_) => label.get(&y).copied(),
                None => reps
                    .iter()
                    .position(|s| n_engine.contains(&y.op(&s.inv())))
                    .map(|i| i as u32),
            };
            let c = match found {
                Some(c) => c,
                None => {
                    let c = reps.len() as u32;
                    if let Some(ne) = &n_elems {
                        for x in ne.iter() {
                            label.insert(x.op(&y), c);
                        }
                    }
                    reps.push(y);
                    c
                }
            };
            action[k].push(c);
        }
    }
    Ok(CosetTable { reps, action })
}

fn check_normal<E: Element>(g: &Group<E>, n: &Group<E>) -> Result<()> {
    if !g.includes(n)? || !g.normalizes(n)? {
        return Err(GroupError::NotNormal);
    }
    Ok(())
}

/// Representatives of the right cosets `N x`, starting with the identity.
pub fn coset_representatives<E: Element>(g: &Group<E>, n: &Group<E>) -> Result<Vec<E>> {
    Ok(coset_table(g, n)?.reps)
}

/// The action of `G` on the right cosets of the normal subgroup `N`, as a
/// permutation group of degree and order `|G:N|`.
pub fn quotient_on_cosets<E: Element>(g: &Group<E>, n: &Group<E>) -> Result<Group<Permutation>> {
    check_normal(g, n)?;
    let table = coset_table(g, n)?;
    let gens = table
        .action
        .into_iter()
        .map(Permutation::new)
        .collect::<Result<Vec<_>>>()?;
    let ctx = GroupContext {
        known_base: None,
        ..g.context().clone()
    };
    Ok(Group::with_context(
        Permutation::identity(table.reps.len()),
        gens,
        ctx,
    ))
}
