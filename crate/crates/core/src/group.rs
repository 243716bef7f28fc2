//! Permutation groups with lazily built stabilizer chains (BSGS).
//!
//! The chain is built by deterministic sift-and-repair Schreier–Sims; when the
//! group order is known in advance (order formulas, subgroup indices) a seeded
//! random-element closure is used instead and stopped exactly at the target
//! order, which is sound because the product of fundamental orbit lengths never
//! exceeds the group order.

use crate::perm::{PermError, Permutation};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::OnceLock;
use thiserror::Error;

/// Default cap for full element enumeration (configurable per call site).
pub const ENUMERATION_GUARD: u128 = 1_000_000;

const CHAIN_SEED: u64 = 0x50C1_E000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("enumeration guard exceeded: order {order} > guard {guard}")]
    EnumerationGuard { order: u128, guard: u128 },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(u32, usize),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("{0}")]
    Invalid(String),
}

/// A permutation group given by generators, with a cached stabilizer chain.
#[derive(Debug)]
pub struct PermutationGroup {
    degree: usize,
    gens: Vec<Permutation>,
    known_order: Option<u128>,
    chain: OnceLock<StabilizerChain>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermutationGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            known_order: self.known_order,
            chain,
        }
    }
}

impl PermutationGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self, GroupError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch(g.degree(), degree));
            }
        }
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermutationGroup {
            degree,
            gens,
            known_order: None,
            chain: OnceLock::new(),
        })
    }

    /// Like `new`, with the exact order supplied from an external argument
    /// (order formula, subgroup index). Chain construction stops when the
    /// product of fundamental orbit lengths reaches it.
    pub fn with_known_order(degree: usize, gens: Vec<Permutation>, order: u128) -> Result<Self, GroupError> {
        let mut g = Self::new(degree, gens)?;
        g.known_order = Some(order);
        Ok(g)
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            gens: Vec::new(),
            known_order: Some(1),
            chain: OnceLock::new(),
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(transposition(n, 0, 1));
        }
        if n >= 3 {
            gens.push(cycle(n, &(0..n as u32).collect::<Vec<_>>()));
        }
        PermutationGroup {
            degree: n,
            gens,
            known_order: Some(factorial(n)),
            chain: OnceLock::new(),
        }
    }

    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(cycle(n, &[0, 1, 2]));
        }
        if n >= 4 {
            if n % 2 == 1 {
                gens.push(cycle(n, &(0..n as u32).collect::<Vec<_>>()));
            } else {
                gens.push(cycle(n, &(1..n as u32).collect::<Vec<_>>()));
            }
        }
        PermutationGroup {
            degree: n,
            gens,
            known_order: Some(factorial(n) / 2),
            chain: OnceLock::new(),
        }
    }

    pub fn cyclic(g: &Permutation) -> Self {
        PermutationGroup {
            degree: g.degree(),
            gens: if g.is_identity() { vec![] } else { vec![g.clone()] },
            known_order: Some(g.order() as u128),
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// The stabilizer chain with the default (smallest-moved-point) base.
    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.gens, &[], self.known_order))
    }

    /// A fresh chain whose base starts with the given points (in order).
    /// Uses the group's order, once known, to stop construction early.
    pub fn chain_with_base(&self, base: &[u32]) -> StabilizerChain {
        let order = self.chain.get().map(|c| c.order()).or(self.known_order);
        StabilizerChain::build(self.degree, &self.gens, base, order)
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty() || self.order() == 1
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain().contains(g)
    }

    /// True iff every generator of `sub` sifts through this group's chain.
    pub fn contains_group(&self, sub: &PermutationGroup) -> bool {
        sub.generators().iter().all(|g| self.contains(g))
    }

    pub fn orbit(&self, point: u32) -> Result<Vec<u32>, GroupError> {
        if point as usize >= self.degree {
            return Err(GroupError::PointOutOfRange(point, self.degree));
        }
        Ok(orbit_of(&self.gens, self.degree, point))
    }

    /// Orbit partition: for each point, the smallest point of its orbit.
    pub fn orbit_reps(&self) -> Vec<u32> {
        let mut rep: Vec<u32> = (0..self.degree as u32).collect();
        for start in 0..self.degree as u32 {
            if rep[start as usize] != start {
                continue;
            }
            let mut stack = vec![start];
            while let Some(p) = stack.pop() {
                for g in &self.gens {
                    let q = g.apply(p);
                    if rep[q as usize] > start {
                        rep[q as usize] = start;
                        stack.push(q);
                    } else if rep[q as usize] < start {
                        debug_assert!(false, "orbit merge out of order");
                    }
                }
            }
        }
        rep
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// Point-wise stabilizer of the listed points, as a group.
    pub fn stabilizer_of_points(&self, points: &[u32]) -> PermutationGroup {
        let chain = self.chain_with_base(points);
        chain.stabilizer_group(points.len())
    }

    /// All elements, guarded.
    pub fn elements(&self, guard: u128) -> Result<Vec<Permutation>, GroupError> {
        let order = self.order();
        if order > guard {
            return Err(GroupError::EnumerationGuard { order, guard });
        }
        let mut out = Vec::with_capacity(order as usize);
        self.chain().for_each_element(&mut |g| {
            out.push(g.clone());
            ControlFlow::<()>::Continue(())
        });
        Ok(out)
    }

    /// Seeded product-replacement element stream (search heuristics only).
    pub fn random_elements(&self, seed: u64) -> RandomElements {
        RandomElements::new(self.degree, &self.gens, seed)
    }
}

/// One level of a stabilizer chain.
#[derive(Debug, Clone)]
pub struct ChainLevel {
    pub base: u32,
    /// Fundamental orbit in discovery order; `orbit[0] == base`.
    pub orbit: Vec<u32>,
    /// point -> u with base^u = point.
    transversal: HashMap<u32, Permutation>,
}

impl ChainLevel {
    pub fn transversal_elem(&self, point: u32) -> Option<&Permutation> {
        self.transversal.get(&point)
    }
}

/// Base and strong generating set with per-level fundamental orbits.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<ChainLevel>,
    /// (generator, deepest level it belongs to): it fixes base[0..lvl).
    strong: Vec<(Permutation, usize)>,
}

impl StabilizerChain {
    pub fn build(
        degree: usize,
        gens: &[Permutation],
        initial_base: &[u32],
        known_order: Option<u128>,
    ) -> StabilizerChain {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
            strong: Vec::new(),
        };
        // Pre-seed the base so callers get a guaranteed base prefix
        // (transporter walks and set-stabilizer search rely on it).
        let mut seen = vec![false; degree];
        for &b in initial_base {
            if !seen[b as usize] {
                seen[b as usize] = true;
                chain.levels.push(ChainLevel {
                    base: b,
                    orbit: vec![b],
                    transversal: HashMap::from([(b, Permutation::identity(degree))]),
                });
            }
        }
        for g in gens {
            chain.insert_generator(g.clone());
        }
        for l in 0..chain.levels.len() {
            chain.rebuild_orbit(l);
        }
        match known_order {
            Some(target) => chain.complete_random(gens, target),
            None => chain.complete_deterministic(),
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[ChainLevel] {
        &self.levels
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn strong_generators(&self) -> impl Iterator<Item = &Permutation> {
        self.strong.iter().map(|(g, _)| g)
    }

    /// Strong generators fixing base[0..level) — they generate the level'th
    /// stabilizer subgroup of the chain.
    pub fn level_generators(&self, level: usize) -> Vec<Permutation> {
        self.strong
            .iter()
            .filter(|(_, lvl)| *lvl >= level)
            .map(|(g, _)| g.clone())
            .collect()
    }

    /// The point-wise stabilizer of base[0..level) as a group with its own
    /// (already known) order.
    pub fn stabilizer_group(&self, level: usize) -> PermutationGroup {
        let gens = self.level_generators(level.min(self.levels.len()));
        let order: u128 = self.levels[level.min(self.levels.len())..]
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product();
        PermutationGroup::with_known_order(self.degree, gens, order).expect("valid by construction")
    }

    /// Sifts `g`; returns the residue and the level where sifting stopped
    /// (== number of levels on success). Membership iff residue is identity.
    pub fn strip(&self, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let delta = h.apply(level.base);
            if delta == level.base {
                continue;
            }
            match level.transversal.get(&delta) {
                None => return (h, i),
                Some(u) => h = h.compose(&u.inverse()),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (res, _) = self.strip(g);
        res.is_identity()
    }

    /// Chain-walk transporter: some g in the chain's group with src^g = dst,
    /// or `Err(level)` at the first level whose fundamental orbit misses the
    /// required image. Requires the base to start with `src` (pre-seeded).
    pub fn walk_transporter(&self, src: &[u32], dst: &[u32]) -> Result<Permutation, usize> {
        assert_eq!(src.len(), dst.len());
        assert!(
            self.levels.iter().zip(src).all(|(l, &s)| l.base == s),
            "walk_transporter requires a base seeded with the source tuple"
        );
        let mut acc = Permutation::identity(self.degree);
        let mut targets: Vec<u32> = dst.to_vec();
        for k in 0..src.len() {
            let u = match self.levels[k].transversal.get(&targets[k]) {
                Some(u) => u.clone(),
                None => return Err(k),
            };
            let uinv = u.inverse();
            for t in targets.iter_mut().skip(k + 1) {
                *t = uinv.apply(*t);
            }
            // g = h·u with h in the next stabilizer: accumulate u-parts outside-in.
            acc = u.compose(&acc);
        }
        Ok(acc)
    }

    /// Walks all group elements in a fixed deterministic order.
    pub fn for_each_element<B>(&self, f: &mut impl FnMut(&Permutation) -> ControlFlow<B>) -> Option<B> {
        self.walk(0, &Permutation::identity(self.degree), f)
    }

    fn walk<B>(
        &self,
        level: usize,
        suffix: &Permutation,
        f: &mut impl FnMut(&Permutation) -> ControlFlow<B>,
    ) -> Option<B> {
        if level == self.levels.len() {
            return match f(suffix) {
                ControlFlow::Break(b) => Some(b),
                ControlFlow::Continue(()) => None,
            };
        }
        // Elements factor uniquely as h·u with u in this level's transversal
        // and h in the next stabilizer; we accumulate u-parts outside-in.
        let lv = &self.levels[level];
        for &p in &lv.orbit {
            let u = &lv.transversal[&p];
            let acc = u.compose(suffix);
            if let Some(b) = self.walk(level + 1, &acc, f) {
                return Some(b);
            }
        }
        None
    }

    // ---- construction internals ----

    /// Registers a non-identity element as a strong generator at its deepest
    /// valid level, extending the base if it fixes every current base point.
    /// Does not rebuild orbits. Returns the generator's level.
    fn insert_generator(&mut self, g: Permutation) -> Option<usize> {
        if g.is_identity() {
            return None;
        }
        let mut lvl = 0;
        while lvl < self.levels.len() && g.apply(self.levels[lvl].base) == self.levels[lvl].base {
            lvl += 1;
        }
        if lvl == self.levels.len() {
            let b = g
                .smallest_moved_point()
                .expect("non-identity permutation moves a point");
            self.levels.push(ChainLevel {
                base: b,
                orbit: vec![b],
                transversal: HashMap::from([(b, Permutation::identity(self.degree))]),
            });
        }
        self.strong.push((g, lvl));
        Some(lvl)
    }

    /// Extends the fundamental orbit at `level` to closure under the current
    /// level generators (incremental BFS; existing transversal kept).
    fn rebuild_orbit(&mut self, level: usize) {
        let gens: Vec<Permutation> = self.level_generators(level);
        let lv = &mut self.levels[level];
        let mut queue: std::collections::VecDeque<u32> = lv.orbit.iter().copied().collect();
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q = g.apply(p);
                if !lv.transversal.contains_key(&q) {
                    let u = lv.transversal[&p].compose(g);
                    lv.transversal.insert(q, u);
                    lv.orbit.push(q);
                    queue.push_back(q);
                }
            }
        }
    }

    /// Adds a sift residue, rebuilding the orbits it invalidates. Returns the
    /// level the residue was registered at.
    fn add_residue(&mut self, res: Permutation) -> usize {
        let lvl = self.insert_generator(res).expect("residue is non-identity");
        for l in 0..=lvl.min(self.levels.len() - 1) {
            self.rebuild_orbit(l);
        }
        lvl
    }

    /// Deterministic Schreier–Sims: verify levels bottom-up, adding sift
    /// residues of Schreier generators until every one sifts to identity.
    fn complete_deterministic(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() as isize - 1;
        'levels: while i >= 0 {
            let l = i as usize;
            self.rebuild_orbit(l);
            let gens = self.level_generators(l);
            let mut oi = 0;
            while oi < self.levels[l].orbit.len() {
                let p = self.levels[l].orbit[oi];
                for s in &gens {
                    let q = s.apply(p);
                    let u_p = self.levels[l].transversal[&p].clone();
                    let u_q_inv = self.levels[l].transversal[&q].inverse();
                    let schreier = u_p.compose(s).compose(&u_q_inv);
                    let (res, _) = self.strip(&schreier);
                    if !res.is_identity() {
                        let lvl = self.add_residue(res);
                        // Levels > lvl are unaffected; re-verify downward from lvl.
                        i = lvl as isize;
                        continue 'levels;
                    }
                }
                oi += 1;
            }
            i -= 1;
        }
    }

    /// Known-order construction: close the chain with seeded random elements
    /// until the orbit-length product reaches the target order exactly.
    fn complete_random(&mut self, input_gens: &[Permutation], target: u128) {
        if self.order() == target {
            return;
        }
        assert!(
            !input_gens.is_empty(),
            "cannot reach order {target} without generators"
        );
        let mut rng = RandomElements::new(self.degree, input_gens, CHAIN_SEED);
        let mut stalled = 0u32;
        loop {
            let current = self.order();
            if current == target {
                return;
            }
            assert!(
                current < target,
                "chain order {current} exceeded claimed order {target}"
            );
            let r = rng.next_element();
            let (res, _) = self.strip(&r);
            if res.is_identity() {
                stalled += 1;
                // A random stream alone can stall on tiny groups whose
                // product-replacement walk has poor mixing; fall back to
                // deterministic completion (still exact).
                if stalled > 4096 {
                    self.complete_deterministic();
                    assert_eq!(self.order(), target, "claimed order contradicts generators");
                    return;
                }
                continue;
            }
            stalled = 0;
            self.add_residue(res);
        }
    }
}

/// Seeded product-replacement ("rattle") stream of pseudo-random elements.
pub struct RandomElements {
    state: Vec<Permutation>,
    accum: Permutation,
    rng: ChaCha8Rng,
}

impl RandomElements {
    pub fn new(degree: usize, gens: &[Permutation], seed: u64) -> Self {
        let mut state: Vec<Permutation> = Vec::new();
        if gens.is_empty() {
            state.push(Permutation::identity(degree));
        } else {
            while state.len() < 10.max(gens.len()) {
                state.push(gens[state.len() % gens.len()].clone());
            }
        }
        let mut s = RandomElements {
            state,
            accum: Permutation::identity(degree),
            rng: ChaCha8Rng::seed_from_u64(seed),
        };
        for _ in 0..80 {
            s.step();
        }
        s
    }

    fn step(&mut self) {
        let n = self.state.len();
        let i = self.rng.random_range(0..n);
        let mut j = self.rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let mult = if self.rng.random_bool(0.5) {
            self.state[j].clone()
        } else {
            self.state[j].inverse()
        };
        self.state[i] = self.state[i].compose(&mult);
        self.accum = self.accum.compose(&self.state[i]);
    }

    pub fn next_element(&mut self) -> Permutation {
        self.step();
        self.accum.clone()
    }
}

/// Orbit of `point` under `gens`, in BFS discovery order.
pub fn orbit_of(gens: &[Permutation], degree: usize, point: u32) -> Vec<u32> {
    let mut seen = vec![false; degree];
    seen[point as usize] = true;
    let mut orbit = vec![point];
    let mut i = 0;
    while i < orbit.len() {
        let p = orbit[i];
        for g in gens {
            let q = g.apply(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                orbit.push(q);
            }
        }
        i += 1;
    }
    orbit
}

/// Orbit of `point` under `gens` with a transversal: for each orbit point a
/// word (as a permutation) mapping `point` to it.
pub fn orbit_with_transversal(
    gens: &[Permutation],
    degree: usize,
    point: u32,
) -> HashMap<u32, Permutation> {
    let mut map = HashMap::from([(point, Permutation::identity(degree))]);
    let mut queue = vec![point];
    let mut i = 0;
    while i < queue.len() {
        let p = queue[i];
        for g in gens {
            let q = g.apply(p);
            if !map.contains_key(&q) {
                let u = map[&p].compose(g);
                map.insert(q, u);
                queue.push(q);
            }
        }
        i += 1;
    }
    map
}

pub fn transposition(degree: usize, a: u32, b: u32) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    images.swap(a as usize, b as usize);
    Permutation::from_images(images).expect("transposition is a bijection")
}

pub fn cycle(degree: usize, points: &[u32]) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for w in 0..points.len() {
        images[points[w] as usize] = points[(w + 1) % points.len()];
    }
    Permutation::from_images(images).expect("cycle points must be distinct")
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// JSON form of a group: `{degree, generators: [[images]]}` (0-based).
#[derive(Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl PermutationGroup {
    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            degree: self.degree,
            generators: self.gens.iter().map(|g| g.images().to_vec()).collect(),
        }
    }

    pub fn from_json(j: &GroupJson) -> Result<Self, GroupError> {
        let gens = j
            .generators
            .iter()
            .map(|imgs| Permutation::from_images(imgs.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        PermutationGroup::new(j.degree, gens)
    }

    /// Parses 1-based cycle-notation generators, one per line.
    pub fn from_cycle_strings(degree: usize, lines: &[&str]) -> Result<Self, GroupError> {
        let gens = lines
            .iter()
            .map(|s| Permutation::from_cycle_string(s, degree))
            .collect::<Result<Vec<_>, _>>()?;
        PermutationGroup::new(degree, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym5_order() {
        assert_eq!(PermutationGroup::symmetric(5).order(), 120);
        // Also via the deterministic path with no order hint.
        let g = PermutationGroup::from_cycle_strings(5, &["(1 2)", "(1 2 3 4 5)"]).unwrap();
        assert_eq!(g.order(), 120);
    }

    #[test]
    fn alt_orders() {
        for n in 3..9 {
            assert_eq!(PermutationGroup::alternating(n).order(), factorial(n) / 2);
            for g in PermutationGroup::alternating(n).generators() {
                assert!(g.is_even());
            }
        }
    }

    #[test]
    fn single_cycle_chain() {
        let g = PermutationGroup::from_cycle_strings(5, &["(1 2 3 4 5)"]).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.chain().base().len(), 1);
    }

    #[test]
    fn orbit_basics() {
        let g = PermutationGroup::from_cycle_strings(7, &["(1 2 3 4 5)"]).unwrap();
        assert_eq!(g.orbit(0).unwrap().len(), 5);
        assert_eq!(g.orbit(5).unwrap(), vec![5]);
        assert!(g.orbit(9).is_err());
    }

    #[test]
    fn membership_and_enumeration() {
        let g = PermutationGroup::alternating(5);
        let elems = g.elements(ENUMERATION_GUARD).unwrap();
        assert_eq!(elems.len(), 60);
        let mut set = std::collections::HashSet::new();
        for e in &elems {
            assert!(g.contains(e));
            assert!(e.is_even());
            assert!(set.insert(e.clone()), "duplicate element in enumeration");
        }
        assert!(!g.contains(&transposition(5, 0, 1)));
    }

    #[test]
    fn stabilizer_of_points() {
        let g = PermutationGroup::symmetric(6);
        let s = g.stabilizer_of_points(&[0, 1]);
        assert_eq!(s.order(), 24);
        for gen in s.generators() {
            assert_eq!(gen.apply(0), 0);
            assert_eq!(gen.apply(1), 1);
        }
    }

    #[test]
    fn chain_with_base_prefix() {
        let g = PermutationGroup::symmetric(6);
        let c = g.chain_with_base(&[3, 1, 4]);
        assert_eq!(c.order(), 720);
        assert_eq!(&c.base()[..3], &[3, 1, 4]);
    }

    #[test]
    fn known_order_path_matches() {
        let gens = vec![
            Permutation::from_cycle_string("(1 2 3)", 6).unwrap(),
            Permutation::from_cycle_string("(4 5 6)", 6).unwrap(),
            Permutation::from_cycle_string("(1 4)(2 5)(3 6)", 6).unwrap(),
        ];
        let honest = PermutationGroup::new(6, gens.clone()).unwrap();
        let order = honest.order();
        assert_eq!(order, 18);
        let hinted = PermutationGroup::with_known_order(6, gens, order).unwrap();
        assert_eq!(hinted.order(), 18);
    }

    #[test]
    fn random_elements_deterministic_and_members() {
        let g = PermutationGroup::symmetric(7);
        let mut a = g.random_elements(42);
        let mut b = g.random_elements(42);
        for _ in 0..20 {
            let x = a.next_element();
            assert_eq!(x, b.next_element());
            assert!(g.contains(&x));
        }
    }

    #[test]
    fn json_roundtrip() {
        let g = PermutationGroup::alternating(6);
        let j = g.to_json();
        let back = PermutationGroup::from_json(&j).unwrap();
        assert_eq!(back.order(), 360);
    }
}
