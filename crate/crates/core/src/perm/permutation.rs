use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use super::bsgs::Bsgs;
use crate::error::{GroupError, Result};
use crate::group::{Element, Engine, GroupContext};

/// Largest supported permutation degree.
pub const MAX_DEGREE: usize = 200_000;

/// A permutation of `{0, ..., m-1}` acting on the right: `x^(gh) = (x^g)^h`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Arc<[u32]>,
}

impl Permutation {
    /// Validates that `images` is a bijection.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let m = images.len();
        if m > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge {
                degree: m,
                max: MAX_DEGREE,
            });
        }
        let mut seen = vec![false; m];
        for &x in &images {
            let x = x as usize;
            if x >= m || seen[x] {
                return Err(GroupError::BadParameter(
                    "image array is not a bijection".into(),
                ));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into(),
        })
    }

    pub(crate) fn from_vec_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation {
            images: images.into(),
        }
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(m: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..m as u32).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                let y = c[(i + 1) % c.len()];
                if x as usize >= m || y as usize >= m {
                    return Err(GroupError::BadParameter(format!(
                        "cycle point out of range for degree {m}"
                    )));
                }
                images[x as usize] = y;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        self.cycles()
            .iter()
            .fold(1u128, |acc, c| acc.lcm(&(c.len() as u128)))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv.into() }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| rhs.images[x as usize]).collect(),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl Element for Permutation {
    fn op(&self, rhs: &Self) -> Self {
        self.compose(rhs)
    }

    fn inv(&self) -> Self {
        self.inverse()
    }

    fn footprint(&self) -> usize {
        4 * self.degree() + 32
    }

    fn element_order(&self, _identity: &Self) -> u64 {
        u64::try_from(self.order()).unwrap_or(u64::MAX)
    }

    fn new_engine(identity: &Self, ctx: &GroupContext) -> Box<dyn Engine<Self>> {
        Box::new(Bsgs::new(identity.degree(), ctx.known_base.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_composition() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.compose(&b).apply(0), 2);
        assert_eq!(a.compose(&b).order(), 3);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn cycles_and_display() {
        let g = Permutation::new(vec![1, 2, 0, 4, 3, 5]).unwrap();
        assert_eq!(g.cycles(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(g.to_string(), "(0 1 2)(3 4)");
        assert_eq!(g.order(), 6);
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
    }
}
