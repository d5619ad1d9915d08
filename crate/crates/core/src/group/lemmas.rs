use std::fmt;

use num_integer::Integer;

use super::quotient::{coset_representatives, quotient_on_cosets};
use super::series::{lower_central_series, prime_factorization, DerivedSeries};
use super::subgroups::{center, minimal_normal_subgroups};
use super::{derived_subgroup, Element, Group};
use crate::error::{GroupError, Result};

/// Groups above this order only get the order-arithmetic checks.
pub const ENUMERABLE_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FindingStatus {
    Pass,
    Fail,
    NotApplicable,
    /// A sub-check could not run (too large to enumerate).
    Skipped,
}

impl FindingStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            FindingStatus::Pass => "pass",
            FindingStatus::Fail => "fail",
            FindingStatus::NotApplicable => "not-applicable",
            FindingStatus::Skipped => "skipped",
        }
    }
}

/// Outcome of one structural check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    /// Check name: `c-weak`, `c-full`, `a`, `d`, `e` or `lemma6`.
    pub check: &'static str,
    /// Derived-series index `i` the finding refers to, if any.
    pub index: Option<usize>,
    pub status: FindingStatus,
    pub detail: String,
}

impl Finding {
    fn new(check: &'static str, index: Option<usize>, status: FindingStatus, detail: impl Into<String>) -> Self {
        Finding {
            check,
            index,
            status,
            detail: detail.into(),
        }
    }

    fn from_result(check: &'static str, index: Option<usize>, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((true, d)) => Finding::new(check, index, FindingStatus::Pass, d),
            Ok((false, d)) => Finding::new(check, index, FindingStatus::Fail, d),
            Err(e @ GroupError::CapExceeded { .. }) => {
                Finding::new(check, index, FindingStatus::Skipped, e.to_string())
            }
            Err(e) => Finding::new(check, index, FindingStatus::Fail, e.to_string()),
        }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}[{}]: {} ({})", self.check, i, self.status.as_str(), self.detail),
            None => write!(f, "{}: {} ({})", self.check, self.status.as_str(), self.detail),
        }
    }
}

/// Whether the abelian section `hi / lo` is cyclic.
fn section_is_cyclic<E: Element>(hi: &Group<E>, lo: &Group<E>) -> Result<bool> {
    let q = quotient_on_cosets(hi, lo)?;
    let order = q.order()?;
    let exponent = q
        .generators()
        .iter()
        .fold(1u128, |acc, g| acc.lcm(&g.order()));
    Ok(exponent == order)
}

fn is_prime(n: u128) -> bool {
    let f = prime_factorization(n);
    f.len() == 1 && f[0].1 == 1
}

/// Runs the structural checks on a solvable group with its derived series.
///
/// `in_cs` asserts that `G` has minimal composition length for its derived
/// length, which enables check (a).
pub fn check_lemmas<E: Element>(g: &Group<E>, series: &DerivedSeries<E>, in_cs: bool) -> Vec<Finding> {
    let report = &series.report;
    let mut out = Vec::new();
    if !report.solvable {
        out.push(Finding::new("c-weak", None, FindingStatus::NotApplicable, "group is not solvable"));
        return out;
    }
    let d = report.d.unwrap_or(0);
    let n = &report.n;
    let terms = &series.terms;
    let enumerable = report.order() <= ENUMERABLE_LIMIT;

    // (c-weak): no two consecutive n_i equal to 1 for i >= 2.
    let bad: Vec<usize> = (2..d).filter(|&i| n[i - 1] == 1 && n[i] == 1).collect();
    out.push(if d < 3 {
        Finding::new("c-weak", None, FindingStatus::NotApplicable, "d < 3")
    } else if bad.is_empty() {
        Finding::new("c-weak", None, FindingStatus::Pass, format!("n = {n:?}"))
    } else {
        Finding::new("c-weak", None, FindingStatus::Fail, format!("n_i = n_(i+1) = 1 at i = {bad:?}"))
    });

    // (c-full): consecutive derived quotients are not both cyclic.
    for i in 2..d {
        if !enumerable {
            out.push(Finding::new("c-full", Some(i), FindingStatus::Skipped, "group too large"));
            continue;
        }
        let r = (|| {
            let a = section_is_cyclic(&terms[i - 1], &terms[i])?;
            let b = section_is_cyclic(&terms[i], &terms[i + 1])?;
            Ok((!(a && b), format!("cyclic: {a}, {b}")))
        })();
        out.push(Finding::from_result("c-full", Some(i), r));
    }

    // (a): the minimal normal subgroup is unique and equals G^(d-1).
    if in_cs && d >= 1 {
        if enumerable {
            let r = (|| {
                let mins = minimal_normal_subgroups(g)?;
                let last = &terms[d - 1];
                let ok = mins.len() == 1
                    && mins[0].order()? == last.order()?
                    && mins[0].includes(last)?;
                let orders: Vec<u128> = mins.iter().map(|m| m.order()).collect::<Result<_>>()?;
                Ok((ok, format!("minimal normal orders {orders:?}, |G^(d-1)| = {}", report.derived_orders[d - 1])))
            })();
            out.push(Finding::from_result("a", None, r));
        } else {
            out.push(Finding::new("a", None, FindingStatus::Skipped, "group too large"));
        }
    } else {
        out.push(Finding::new("a", None, FindingStatus::NotApplicable, "membership in C_S(d) not asserted"));
    }

    // (d): a cyclic section of prime order acts coprimely and fixed-point-freely on the next.
    let mut fired = false;
    for i in 1..d {
        let q = report.quotient_order(i);
        if !is_prime(q) {
            continue;
        }
        fired = true;
        let next = report.quotient_order(i + 1);
        if next.gcd(&q) != 1 {
            out.push(Finding::new("d", Some(i), FindingStatus::Fail, format!("gcd({q}, {next}) != 1")));
            continue;
        }
        if !enumerable {
            out.push(Finding::new("d", Some(i), FindingStatus::Skipped, "coprime; fixed-point scan skipped"));
            continue;
        }
        let r = (|| {
            let (hi, mid, lo) = (&terms[i - 1], &terms[i], &terms[i + 1]);
            let mid_engine = mid.engine()?;
            let x = hi
                .generators()
                .iter()
                .find(|x| !mid_engine.contains(x))
                .expect("proper section has a generator outside")
                .clone();
            let lo_engine = lo.engine()?;
            let reps = coset_representatives(mid, lo)?;
            let fixed = reps[1..]
                .iter()
                .filter(|y| lo_engine.contains(&y.conj(&x).op(&y.inv())))
                .count();
            Ok((fixed == 0, format!("orders {q}, {next}; {} nontrivial cosets, {fixed} fixed", reps.len() - 1)))
        })();
        out.push(Finding::from_result("d", Some(i), r));
    }
    if !fired {
        out.push(Finding::new("d", None, FindingStatus::NotApplicable, "no derived quotient of prime order"));
    }

    // (e): n_i = 2, n_(i+1) = 1 forces an extraspecial section of order p^3.
    let mut fired = false;
    for i in 2..d {
        if n[i - 1] != 2 || n[i] != 1 {
            continue;
        }
        fired = true;
        let size = report.derived_orders[i - 1] / report.derived_orders[i + 1];
        let f = prime_factorization(size);
        if f.len() != 1 || f[0].1 != 3 {
            out.push(Finding::new("e", Some(i), FindingStatus::Fail, format!("section order {size} is not p^3")));
            continue;
        }
        if report.order() > ENUMERABLE_LIMIT {
            out.push(Finding::new("e", Some(i), FindingStatus::Skipped, "section order checked; structure skipped"));
            continue;
        }
        let r = (|| {
            let sec = quotient_on_cosets(&terms[i - 1], &terms[i + 1])?;
            let z = center(&sec)?.order()?;
            let ok = !sec.is_abelian() && z == f[0].0;
            Ok((ok, format!("section of order {size}, center order {z}")))
        })();
        out.push(Finding::from_result("e", Some(i), r));
    }
    if !fired {
        out.push(Finding::new("e", None, FindingStatus::NotApplicable, "no n_i = 2, n_(i+1) = 1 with i >= 2"));
    }

    out.push(lemma6(g));
    out
}

/// For a p-group with `p >= 3`, `|P'/P''| = p^3` and `P'' != 1`, the lower
/// central series satisfies `γ2 > γ3 > γ4 > γ5 = P''`.
pub fn lemma6<E: Element>(p: &Group<E>) -> Finding {
    let r = (|| -> Result<Option<(bool, String)>> {
        let order = p.order()?;
        let f = prime_factorization(order);
        if f.len() != 1 || f[0].0 < 3 {
            return Ok(None);
        }
        let prime = f[0].0;
        let d1 = derived_subgroup(p)?;
        let d2 = derived_subgroup(&d1)?;
        let (o1, o2) = (d1.order()?, d2.order()?);
        if o2 == 1 || o1 / o2 != prime.pow(3) {
            return Ok(None);
        }
        let chain = lower_central_series(p)?;
        let gamma: Vec<u128> = chain.iter().map(|g| g.order()).collect::<Result<_>>()?;
        let k5 = 4.min(chain.len() - 1);
        let at = |k: usize| gamma.get(k - 1).copied().unwrap_or(*gamma.last().unwrap());
        let ok = at(2) > at(3)
            && at(3) > at(4)
            && at(4) > at(5)
            && at(5) == o2
            && chain[k5].includes(&d2)?;
        Ok(Some((ok, format!("lower central orders {gamma:?}, |P''| = {o2}"))))
    })();
    match r {
        Ok(None) => Finding::new("lemma6", None, FindingStatus::NotApplicable, "hypotheses not met"),
        Ok(Some(v)) => Finding::from_result("lemma6", None, Ok(v)),
        Err(e) => Finding::from_result("lemma6", None, Err(e)),
    }
}
