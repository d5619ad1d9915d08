//! Known values and closed-form bounds for minimal composition lengths.

pub use num_bigint::BigUint;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::error::{GroupError, Result};

/// `c_S(d)` for `d = 0..=8`.
pub const CS_TABLE: [u64; 9] = [0, 1, 2, 4, 5, 7, 8, 13, 15];
/// `c_N(d)` for `d = 0..=4`.
pub const CN_TABLE: [u64; 5] = [0, 1, 3, 6, 14];
/// Maximal derived length of a completely reducible solvable subgroup of
/// `GL_n(F)`, indexed by `n = 1..=8`.
pub const CR_TABLE: [u64; 8] = [1, 4, 5, 5, 5, 6, 6, 8];
/// Maximal derived length of a solvable automorphism group of an elementary
/// abelian group of order `p^k`, indexed by `k = 1..=4`.
pub const LEMMA4_TABLE: [u64; 4] = [1, 4, 5, 6];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    Cs,
    Cn,
    Cr,
    Lemma4,
}

impl Table {
    pub fn name(&self) -> &'static str {
        match self {
            Table::Cs => "cs",
            Table::Cn => "cn",
            Table::Cr => "cr",
            Table::Lemma4 => "lemma4",
        }
    }

    pub fn parse(s: &str) -> Option<Table> {
        match s {
            "cs" => Some(Table::Cs),
            "cn" => Some(Table::Cn),
            "cr" => Some(Table::Cr),
            "lemma4" => Some(Table::Lemma4),
            _ => None,
        }
    }
}

pub fn table_lookup(table: Table, index: usize) -> Result<u64> {
    let (data, first): (&[u64], usize) = match table {
        Table::Cs => (&CS_TABLE, 0),
        Table::Cn => (&CN_TABLE, 0),
        Table::Cr => (&CR_TABLE, 1),
        Table::Lemma4 => (&LEMMA4_TABLE, 1),
    };
    index
        .checked_sub(first)
        .and_then(|i| data.get(i).copied())
        .ok_or(GroupError::OutOfRange {
            table: table.name(),
            index,
        })
}

/// One contribution to a bound, named by the rule that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTerm {
    pub rule: &'static str,
    pub value: BigUint,
}

/// A published range that the formulas alone do not reproduce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Annotation {
    pub lower: u64,
    pub upper: u64,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub d: u32,
    pub lower: BigUint,
    pub upper: BigUint,
    /// Every lower bound considered; `lower` is their maximum.
    pub lower_terms: Vec<BoundTerm>,
    /// Every upper bound considered; `upper` is their minimum.
    pub upper_terms: Vec<BoundTerm>,
    pub annotation: Option<Annotation>,
}

impl Bounds {
    fn from_terms(d: u32, lower_terms: Vec<BoundTerm>, upper_terms: Vec<BoundTerm>, annotation: Option<Annotation>) -> Self {
        let lower = lower_terms.iter().map(|t| t.value.clone()).max().expect("nonempty");
        let upper = upper_terms.iter().map(|t| t.value.clone()).min().expect("nonempty");
        Bounds {
            d,
            lower,
            upper,
            lower_terms,
            upper_terms,
            annotation,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

fn term(rule: &'static str, value: impl Into<BigUint>) -> BoundTerm {
    BoundTerm {
        rule,
        value: value.into(),
    }
}

fn pow(base: u32, exp: u32) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// Bounds on `c_S(d)`.
pub fn cs_bounds(d: u32) -> Bounds {
    if let Some(&v) = CS_TABLE.get(d as usize) {
        return Bounds::from_terms(d, vec![term("table", v)], vec![term("table", v)], None);
    }
    let top = CS_TABLE.len() as u32 - 1;
    let last = CS_TABLE[top as usize];
    let steps = d - top;
    let lower = vec![
        term("successor recurrence", BigUint::from(last) + steps),
        term("length bound", g89_min_length(d)),
    ];
    // u(d+1) = 2 u(d) + 1 gives u(d) = 2^steps (last + 1) - 1.
    let mut upper = vec![term("doubling recurrence", pow(2, steps) * (last + 1) - 1u32)];
    if d % 3 == 0 {
        upper.push(term("wreath power 4", (pow(4, d / 3) - 1u32) * 4u32 / 3u32));
    }
    if d % 5 == 0 {
        upper.push(term("wreath power 9", (pow(9, d / 5) - 1u32) * 7u32 / 8u32));
    }
    let annotation = (d == 10).then_some(Annotation {
        lower: 18,
        upper: 24,
        note: "published range 18..24",
    });
    Bounds::from_terms(d, lower, upper, annotation)
}

/// Bounds on `c_N(d)`.
pub fn cn_bounds(d: u32) -> Bounds {
    if let Some(&v) = CN_TABLE.get(d as usize) {
        return Bounds::from_terms(d, vec![term("table", v)], vec![term("table", v)], None);
    }
    let h = pow(2, d - 1);
    let d = d as u64;
    let lower = vec![
        term("2^(d-1) + d - 1", &h + (d - 1)),
        term("2^(d-1) + 2d - 4", &h + (2 * d - 4)),
        term("2^(d-1) + 3d - 10", &h + (3 * d - 10)),
        term("2^(d-1) + d + 1", &h + (d + 1)),
    ];
    let upper = vec![term("2^d - 2", pow(2, d as u32) - 2u32)];
    let annotation = (d == 10).then_some(Annotation {
        lower: 532,
        upper: 1022,
        note: "published range 532..1022",
    });
    Bounds::from_terms(d as u32, lower, upper, annotation)
}

fn ratio(n: impl Into<BigInt>, m: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), m.into())
}

/// Enclosure of `atanh(num / den)` for `0 <= num < den` from `terms` series
/// terms, in fixed point with every step rounded outward.
fn atanh_interval(num: &BigInt, den: &BigInt, terms: u32) -> (BigRational, BigRational) {
    let bits = 4 * terms as usize + 64;
    let scale = BigInt::one() << bits;
    let (n2, d2) = (num * num, den * den);
    let mut p_lo = (&scale * num).div_floor(den);
    let mut p_hi = (&scale * num).div_ceil(den);
    let (mut lo, mut hi) = (BigInt::zero(), BigInt::zero());
    for m in 0..terms {
        let k = BigInt::from(2 * m + 1);
        lo += p_lo.div_floor(&k);
        hi += p_hi.div_ceil(&k);
        p_lo = (&p_lo * &n2).div_floor(&d2);
        p_hi = (&p_hi * &n2).div_ceil(&d2);
    }
    // Remaining terms are bounded by a geometric series with ratio y^2.
    hi += (&p_hi * &d2).div_ceil(&(BigInt::from(2 * terms + 1) * (&d2 - &n2)));
    (BigRational::new(lo, scale.clone()), BigRational::new(hi, scale))
}

struct Logs {
    ln2: (BigRational, BigRational),
    ln3: (BigRational, BigRational),
}

impl Logs {
    fn new(terms: u32) -> Self {
        let two = ratio(2, 1);
        let (a, b) = atanh_interval(&BigInt::one(), &BigInt::from(3), terms);
        let ln2 = (&a * &two, &b * &two);
        let (c, e) = atanh_interval(&BigInt::one(), &BigInt::from(5), terms);
        let ln3 = (&ln2.0 + &c * &two, &ln2.1 + &e * &two);
        Logs { ln2, ln3 }
    }

    /// Enclosure of `ln n` for `n >= 1`.
    fn ln(&self, n: &BigUint, terms: u32) -> (BigRational, BigRational) {
        let j = n.bits() - 1;
        // ln n = j ln 2 + 2 atanh((n - 2^j) / (n + 2^j)).
        let (n, h) = (BigInt::from(n.clone()), BigInt::from(pow(2, j as u32)));
        let (a, b) = atanh_interval(&(&n - &h), &(&n + &h), terms);
        let jr = ratio(j as i64, 1);
        let two = ratio(2, 1);
        (&jr * &self.ln2.0 + &a * &two, &jr * &self.ln2.1 + &b * &two)
    }
}

/// `α = 5 log_9 2 + 1 = 1 + 5 ln 2 / (2 ln 3)` enclosed in a rational interval.
pub fn alpha_interval(terms: u32) -> (BigRational, BigRational) {
    let logs = Logs::new(terms);
    let five_halves = ratio(5, 2);
    let one = BigRational::one();
    (
        &one + &five_halves * &logs.ln2.0 / &logs.ln3.1,
        &one + &five_halves * &logs.ln2.1 / &logs.ln3.0,
    )
}

pub fn alpha() -> f64 {
    1.0 + 2.5 * std::f64::consts::LN_2 / 3f64.ln()
}

/// Decides `α log_2 n >= k`, refining the enclosure until it is decided.
fn alpha_log_at_least(n: &BigUint, k: i64) -> bool {
    if k <= 0 {
        return true;
    }
    if n.is_one() {
        return false;
    }
    let target = ratio(k, 1);
    let mut terms = 16;
    loop {
        let logs = Logs::new(terms);
        let (lo, hi) = logs.ln(n, terms);
        let five_halves = ratio(5, 2);
        let lower = &lo / &logs.ln2.1 + &five_halves * &lo / &logs.ln3.1;
        let upper = &hi / &logs.ln2.0 + &five_halves * &hi / &logs.ln3.0;
        if lower >= target {
            return true;
        }
        if upper < target {
            return false;
        }
        if terms >= 1 << 14 {
            // Not reached for any d with a representable answer; decide on the midpoint.
            let mid = (lower + upper) / ratio(2, 1);
            return !(mid - target).is_negative();
        }
        terms *= 2;
    }
}

/// Smallest positive `n` with `d <= α log_2 n + 9`.
///
/// The floating-point estimate only proposes a bracket; both ends are decided
/// exactly before the binary search runs inside it.
pub fn g89_min_length(d: u32) -> BigUint {
    let k = d as i64 - 9;
    let one = BigUint::one();
    if alpha_log_at_least(&one, k) {
        return one;
    }
    let x = g89_real(d);
    let guess = |f: f64| BigUint::from_f64((x * f).floor()).filter(|n| !n.is_zero());
    let (mut lo, mut hi) = match (guess(1.0 - 1e-9), guess(1.0 + 1e-9)) {
        (Some(l), Some(h)) if !alpha_log_at_least(&l, k) && alpha_log_at_least(&(&h + 1u32), k) => (l, h + 1u32),
        _ => {
            let mut lo = one.clone();
            let mut hi = BigUint::from(2u32);
            while !alpha_log_at_least(&hi, k) {
                lo = hi.clone();
                hi <<= 1;
            }
            (lo, hi)
        }
    };
    // lo fails, hi holds.
    while &hi - &lo > one {
        let mid = (&lo + &hi) >> 1;
        if alpha_log_at_least(&mid, k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// `2^((d - 9) / α)`, the real number `g89_min_length` rounds up.
pub fn g89_real(d: u32) -> f64 {
    2f64.powf((d as f64 - 9.0) / alpha())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let b = cs_bounds(3);
        assert_eq!((b.lower, b.upper), (4u32.into(), 4u32.into()));
        let b = cs_bounds(10);
        assert_eq!((b.lower.clone(), b.upper.clone()), (17u32.into(), 63u32.into()));
        assert_eq!(b.annotation.map(|a| (a.lower, a.upper)), Some((18, 24)));
        let b = cs_bounds(15);
        assert!(b.upper_terms.iter().any(|t| t.value == 637u32.into()));
        assert_eq!(b.upper, 637u32.into());
        let b = cn_bounds(10);
        assert_eq!((b.lower, b.upper), (532u32.into(), 1022u32.into()));
        assert_eq!(cn_bounds(4).lower, 14u32.into());
        assert_eq!(cn_bounds(0).upper, 0u32.into());
    }

    #[test]
    fn length_bound() {
        assert_eq!(g89_min_length(9), 1u32.into());
        assert_eq!(g89_min_length(10), 2u32.into());
        assert_eq!(g89_min_length(20), 20u32.into());
        assert_eq!(g89_min_length(0), 1u32.into());
    }

    #[test]
    fn alpha_enclosure() {
        let (lo, hi) = alpha_interval(20);
        assert!(lo > ratio(2577, 1000) && hi < ratio(2578, 1000));
        assert!(lo < hi);
    }

    #[test]
    fn lookups() {
        assert_eq!(table_lookup(Table::Cr, 3).unwrap(), 5);
        assert_eq!(table_lookup(Table::Lemma4, 2).unwrap(), 4);
        assert!(matches!(
            table_lookup(Table::Cr, 9),
            Err(GroupError::OutOfRange { table: "cr", index: 9 })
        ));
        assert!(table_lookup(Table::Cr, 0).is_err());
        assert_eq!(table_lookup(Table::Cs, 8).unwrap(), 15);
    }
}
