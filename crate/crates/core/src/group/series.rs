use super::{Element, Group};
use crate::error::Result;

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn prime_factorization(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Number of prime factors counted with multiplicity.
pub fn omega(n: u128) -> u32 {
    prime_factorization(n).iter().map(|&(_, e)| e).sum()
}

/// Derived-series invariants: subgroup orders, `n(G)`, composition length
/// `c(G)` and derived length `d(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    /// `|G^(0)|, |G^(1)|, ...`, ending at 1 for solvable groups or at the
    /// first repeated order otherwise.
    pub derived_orders: Vec<u128>,
    /// `n_i = Ω(|G^(i-1)| / |G^(i)|)` for each proper step.
    pub n: Vec<u32>,
    /// Composition length; defined only for solvable groups.
    pub c: Option<u32>,
    /// Derived length; defined only for solvable groups.
    pub d: Option<usize>,
    pub solvable: bool,
    pub lower_central: Option<Vec<u128>>,
}

impl SeriesReport {
    pub fn from_orders(derived_orders: Vec<u128>) -> Self {
        let n: Vec<u32> = derived_orders
            .windows(2)
            .map(|w| omega(w[0] / w[1]))
            .collect();
        let solvable = derived_orders.last() == Some(&1);
        SeriesReport {
            c: solvable.then(|| n.iter().sum()),
            d: solvable.then_some(n.len()),
            n,
            derived_orders,
            solvable,
            lower_central: None,
        }
    }

    pub fn order(&self) -> u128 {
        self.derived_orders[0]
    }

    /// Order of the section `G^(i-1) / G^(i)` for `1 <= i <= d`.
    pub fn quotient_order(&self, i: usize) -> u128 {
        self.derived_orders[i - 1] / self.derived_orders[i]
    }
}

/// The derived subgroups `G = G^(0) > G^(1) > ...` with their report.
#[derive(Debug, Clone)]
pub struct DerivedSeries<E: Element> {
    pub terms: Vec<Group<E>>,
    pub report: SeriesReport,
}

/// `[G, G]`: normal closure of the pairwise commutators of the generators.
pub fn derived_subgroup<E: Element>(g: &Group<E>) -> Result<Group<E>> {
    let gens = g.generators();
    let mut seeds = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.commutator(b);
            if &c != g.identity() && !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    g.normal_closure(&seeds)
}

/// Iterates [`derived_subgroup`] until two consecutive orders agree.
pub fn derived_series<E: Element>(g: &Group<E>) -> Result<DerivedSeries<E>> {
    let mut terms = vec![g.clone()];
    let mut orders = vec![g.order()?];
    loop {
        let last = terms.last().unwrap();
        if *orders.last().unwrap() == 1 {
            break;
        }
        let next = derived_subgroup(last)?;
        let order = next.order()?;
        if order == *orders.last().unwrap() {
            break;
        }
        terms.push(next);
        orders.push(order);
    }
    Ok(DerivedSeries {
        terms,
        report: SeriesReport::from_orders(orders),
    })
}

/// `γ_1 = P`, `γ_{i+1} = [γ_i, P]`, stopping once the order stabilizes.
pub fn lower_central_series<E: Element>(p: &Group<E>) -> Result<Vec<Group<E>>> {
    let mut chain = vec![p.clone()];
    let mut last_order = p.order()?;
    while last_order > 1 {
        let current = chain.last().unwrap();
        let next = super::commutator_subgroup(p, current)?;
        let order = next.order()?;
        if order == last_order {
            break;
        }
        chain.push(next);
        last_order = order;
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_omega() {
        assert_eq!(prime_factorization(165_888), vec![(2, 11), (3, 4)]);
        assert_eq!(omega(165_888), 15);
        assert_eq!(omega(1), 0);
        assert_eq!(omega(76_236_552), 13);
        assert_eq!(prime_factorization(97), vec![(97, 1)]);
    }

    #[test]
    fn report_from_orders() {
        let r = SeriesReport::from_orders(vec![48, 24, 8, 2, 1]);
        assert_eq!(r.n, vec![1, 1, 2, 1]);
        assert_eq!(r.c, Some(5));
        assert_eq!(r.d, Some(4));
        let bad = SeriesReport::from_orders(vec![60]);
        assert!(!bad.solvable);
        assert_eq!(bad.c, None);
    }
}
