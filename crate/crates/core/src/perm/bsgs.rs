use std::collections::HashSet;
use std::sync::Arc;

use super::permutation::{Permutation, MAX_DEGREE};
use crate::error::{GroupError, Result};
use crate::group::{Element, Engine, EngineKind};

const NONE: u32 = u32::MAX;
/// Per-level bound on remembered Schreier generator images.
const SEEN_LIMIT: usize = 1 << 20;

/// A word letter: pool index shifted left once, low bit set for the inverse.
type Letter = u32;

#[derive(Debug, Clone)]
struct Level {
    point: u32,
    gens: Vec<u32>,
    orbit: Vec<u32>,
    /// Dense Schreier vector: `parent[y]^label[y] = y` for orbit points.
    parent: Vec<u32>,
    label: Vec<u32>,
    /// Number of level generators already paired with each orbit point.
    checked: Vec<u32>,
    first_unchecked: usize,
    seen: HashSet<Box<[u32]>>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        let mut parent = vec![NONE; degree];
        parent[point as usize] = point;
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            parent,
            label: vec![NONE; degree],
            checked: vec![0],
            first_unchecked: 0,
            seen: HashSet::new(),
        }
    }

    #[inline]
    fn in_orbit(&self, x: u32) -> bool {
        self.parent[x as usize] != NONE
    }
}

/// Base and strong generating set built by deterministic Schreier–Sims.
///
/// The structure is grown one generator at a time and is a verified stabilizer
/// chain after every call to [`Bsgs::add`]. When a base for the ambient group
/// is known, levels are fixed in advance, sifting only follows base-point images
/// and Schreier generators are deduplicated by those images.
#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    known_base: bool,
    levels: Vec<Level>,
    fwd: Vec<Permutation>,
    inv: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl Bsgs {
    /// An empty chain (trivial group); `known_base` must be a base of every
    /// group whose elements will be added.
    pub fn new(degree: usize, known_base: Option<Arc<[u32]>>) -> Self {
        let levels = match &known_base {
            Some(b) => b.iter().map(|&p| Level::new(p, degree)).collect(),
            None => Vec::new(),
        };
        Bsgs {
            degree,
            known_base: known_base.is_some(),
            levels,
            fwd: Vec::new(),
            inv: Vec::new(),
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.fwd
    }

    /// Strong generators lying in the level-`i` stabilizer.
    pub fn level_generators(&self, i: usize) -> Vec<Permutation> {
        self.levels[i]
            .gens
            .iter()
            .map(|&k| self.fwd[k as usize].clone())
            .collect()
    }

    #[inline]
    fn apply_letter(&self, l: Letter, x: u32) -> u32 {
        let k = (l >> 1) as usize;
        if l & 1 == 0 {
            self.fwd[k].apply(x)
        } else {
            self.inv[k].apply(x)
        }
    }

    fn apply_word(&self, word: &[Letter], mut x: u32) -> u32 {
        for &l in word {
            x = self.apply_letter(l, x);
        }
        x
    }

    /// Appends the letters of the transversal element `u_x` (or its inverse).
    fn trace(&self, level: usize, mut x: u32, inverse: bool, out: &mut Vec<Letter>) {
        let lv = &self.levels[level];
        let start = out.len();
        while x != lv.point {
            let s = lv.label[x as usize];
            out.push(s << 1 | inverse as u32);
            x = lv.parent[x as usize];
        }
        if !inverse {
            out[start..].reverse();
        }
    }

    /// Sifts base images from level `from`; returns the first failing level.
    fn sift(&self, tuple: &mut [u32], word: &mut Vec<Letter>, from: usize) -> Option<usize> {
        for l in from..self.levels.len() {
            let lv = &self.levels[l];
            let mut x = tuple[l];
            if x == lv.point {
                continue;
            }
            if !lv.in_orbit(x) {
                return Some(l);
            }
            while x != lv.point {
                let s = lv.label[x as usize];
                let inv = &self.inv[s as usize];
                for t in tuple[l..].iter_mut() {
                    *t = inv.apply(*t);
                }
                word.push(s << 1 | 1);
                x = lv.parent[x as usize];
            }
        }
        None
    }

    fn materialize(&self, prefix: Option<&Permutation>, word: &[Letter]) -> Permutation {
        let mut arr: Vec<u32> = match prefix {
            Some(p) => p.images().to_vec(),
            None => (0..self.degree as u32).collect(),
        };
        for &l in word {
            let k = (l >> 1) as usize;
            let p = if l & 1 == 0 { &self.fwd[k] } else { &self.inv[k] };
            let img = p.images();
            for v in arr.iter_mut() {
                *v = img[*v as usize];
            }
        }
        Permutation::from_vec_unchecked(arr)
    }

    /// Adds `h` as a strong generator of levels `lo..=hi` and extends orbits.
    fn add_strong(&mut self, h: Permutation, lo: usize, hi: usize) {
        let idx = self.fwd.len() as u32;
        self.inv.push(h.inverse());
        self.fwd.push(h);
        for l in lo..=hi {
            let old_len = self.levels[l].orbit.len();
            self.levels[l].gens.push(idx);
            self.levels[l].first_unchecked = 0;
            let h = &self.fwd[idx as usize];
            let lv = &mut self.levels[l];
            for i in 0..old_len {
                let x = lv.orbit[i];
                let y = h.apply(x);
                if !lv.in_orbit(y) {
                    lv.parent[y as usize] = x;
                    lv.label[y as usize] = idx;
                    lv.orbit.push(y);
                    lv.checked.push(0);
                }
            }
            let mut next = old_len;
            while next < lv.orbit.len() {
                let x = lv.orbit[next];
                next += 1;
                for &g in &lv.gens {
                    let y = self.fwd[g as usize].apply(x);
                    if !lv.in_orbit(y) {
                        lv.parent[y as usize] = x;
                        lv.label[y as usize] = g;
                        lv.orbit.push(y);
                        lv.checked.push(0);
                    }
                }
            }
        }
    }

    fn push_level(&mut self, h: &Permutation) -> usize {
        let point = h.first_moved_point().expect("nontrivial residue");
        self.levels.push(Level::new(point, self.degree));
        self.levels.len() - 1
    }

    fn base_images(&self, g: &Permutation) -> Vec<u32> {
        self.levels.iter().map(|l| g.apply(l.point)).collect()
    }

    /// Sifts the Schreier generator `u_x s u_{x^s}^-1` of level `l`; on
    /// failure the residue is installed and the deepest touched level returned.
    fn check_schreier(&mut self, l: usize, x: u32, s: u32, word: &mut Vec<Letter>) -> Option<usize> {
        let lv = &self.levels[l];
        let y = self.fwd[s as usize].apply(x);
        if lv.parent[y as usize] == x && lv.label[y as usize] == s {
            return None;
        }
        word.clear();
        self.trace(l, x, false, word);
        word.push(s << 1);
        self.trace(l, y, true, word);
        let mut tuple: Vec<u32> = self.levels[l + 1..]
            .iter()
            .map(|lv| self.apply_word(word, lv.point))
            .collect();
        if self.known_base {
            let seen = &self.levels[l].seen;
            if seen.contains(tuple.as_slice()) {
                return None;
            }
            if seen.len() < SEEN_LIMIT {
                self.levels[l].seen.insert(tuple.clone().into_boxed_slice());
            }
        }
        // `tuple` is indexed from level l + 1.
        let mut full = vec![0u32; l + 1];
        full.extend_from_slice(&tuple);
        tuple = full;
        match self.sift(&mut tuple, word, l + 1) {
            Some(j) => {
                let h = self.materialize(None, word);
                self.add_strong(h, l + 1, j);
                Some(j)
            }
            None if self.known_base => None,
            None => {
                let h = self.materialize(None, word);
                if h.is_identity() {
                    return None;
                }
                let j = self.push_level(&h);
                self.add_strong(h, l + 1, j);
                Some(j)
            }
        }
    }

    fn complete(&mut self, mut l: usize) {
        let mut word = Vec::new();
        loop {
            let lv = &mut self.levels[l];
            let ngens = lv.gens.len() as u32;
            while lv.first_unchecked < lv.orbit.len() && lv.checked[lv.first_unchecked] == ngens {
                lv.first_unchecked += 1;
            }
            if lv.first_unchecked == lv.orbit.len() {
                if l == 0 {
                    return;
                }
                l -= 1;
                continue;
            }
            let pos = lv.first_unchecked;
            let gi = lv.checked[pos];
            lv.checked[pos] += 1;
            let x = lv.orbit[pos];
            let s = lv.gens[gi as usize];
            if let Some(j) = self.check_schreier(l, x, s, &mut word) {
                l = j;
            }
        }
    }

    /// Extends the group by `g`; returns whether the order grew.
    pub fn add(&mut self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        let mut tuple = self.base_images(g);
        let mut word = Vec::new();
        let j = match self.sift(&mut tuple, &mut word, 0) {
            Some(j) => {
                let h = self.materialize(Some(g), &word);
                self.add_strong(h, 0, j);
                j
            }
            None if self.known_base => return Ok(false),
            None => {
                let h = self.materialize(Some(g), &word);
                if h.is_identity() {
                    return Ok(false);
                }
                let j = self.push_level(&h);
                self.add_strong(h, 0, j);
                j
            }
        };
        self.generators.push(g.clone());
        self.complete(j);
        Ok(true)
    }

    /// Membership by sifting; exact for elements of the ambient group.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let mut tuple = self.base_images(g);
        let mut word = Vec::new();
        if self.sift(&mut tuple, &mut word, 0).is_some() {
            return false;
        }
        self.known_base || self.materialize(Some(g), &word).is_identity()
    }

    /// Rechecks every Schreier generator of every level by full sifting.
    pub fn verify(&self) -> bool {
        let mut word = Vec::new();
        for l in 0..self.levels.len() {
            let lv = &self.levels[l];
            if lv.gens.iter().any(|&g| {
                self.levels[..l]
                    .iter()
                    .any(|p| self.fwd[g as usize].apply(p.point) != p.point)
            }) {
                return false;
            }
            for &x in &lv.orbit {
                for &s in &lv.gens {
                    let y = self.fwd[s as usize].apply(x);
                    word.clear();
                    self.trace(l, x, false, &mut word);
                    word.push(s << 1);
                    self.trace(l, y, true, &mut word);
                    let h = self.materialize(None, &word);
                    if !self.contains(&h) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Engine<Permutation> for Bsgs {
    fn order(&self) -> u128 {
        Bsgs::order(self)
    }

    fn contains(&self, g: &Permutation) -> bool {
        Bsgs::contains(self, g)
    }

    fn add_generator(&mut self, g: &Permutation) -> Result<bool> {
        self.add(g)
    }

    fn kind(&self) -> EngineKind {
        EngineKind::Bsgs
    }
}

fn common_degree(gens: &[Permutation]) -> Result<usize> {
    let degree = gens.first().map_or(0, |g| g.degree());
    for g in gens {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    if degree > MAX_DEGREE {
        return Err(GroupError::DegreeTooLarge {
            degree,
            max: MAX_DEGREE,
        });
    }
    Ok(degree)
}

/// Deterministic Schreier–Sims on `gens`, choosing base points as the
/// smallest moved point of each new residue.
pub fn schreier_sims(gens: &[Permutation]) -> Result<Bsgs> {
    let mut b = Bsgs::new(common_degree(gens)?, None);
    for g in gens {
        b.add(g)?;
    }
    Ok(b)
}

pub fn group_order(b: &Bsgs) -> u128 {
    b.order()
}

pub fn contains(b: &Bsgs, g: &Permutation) -> Result<bool> {
    if g.degree() != b.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: b.degree(),
            found: g.degree(),
        });
    }
    Ok(b.contains(g))
}

/// Normal closure of `seeds` in the group described by `g`.
pub fn normal_closure_perm(g: &Bsgs, seeds: &[Permutation]) -> Result<Bsgs> {
    common_degree(seeds)?;
    let base = g.known_base.then(|| Arc::from(g.base()));
    let mut n = Bsgs::new(g.degree(), base);
    let mut queue: Vec<Permutation> = seeds.iter().rev().cloned().collect();
    while let Some(x) = queue.pop() {
        if !g.contains(&x) {
            return Err(GroupError::BadParameter("seed outside the group".into()));
        }
        if n.contains(&x) {
            continue;
        }
        n.add(&x)?;
        for h in g.generators().iter().rev() {
            queue.push(x.conj(h));
        }
    }
    Ok(n)
}
