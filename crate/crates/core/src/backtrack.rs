//! Chain-based searches: tuple transporters, set-wise stabilizers, group
//! intersections, pair-orbit counting and normalizers of cyclic subgroups.
//!
//! All searches explore candidate images in ascending point order, so results
//! (including failure certificates) are deterministic.

use crate::group::{orbit_of, GroupError, PermutationGroup};
use crate::perm::Permutation;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BacktrackError {
    #[error("search budget exhausted after {nodes} nodes; result inconclusive")]
    Inconclusive { nodes: u64 },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Invalid(String),
}

/// Replay token for a failed transporter walk: the chain-walk level whose
/// fundamental orbit did not contain the required image.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TransporterRefutation {
    pub mode: String,
    pub failed_level: usize,
    pub nodes: u64,
}

/// Finds g in G with I^g = J element-wise (no backtracking is needed: with a
/// base seeded by I the walk is a sequence of orbit lookups).
pub fn transporter(g: &PermutationGroup, i: &[u32], j: &[u32]) -> Result<Option<Permutation>, BacktrackError> {
    Ok(transporter_detailed(g, i, j)?.ok())
}

pub fn transporter_detailed(
    group: &PermutationGroup,
    i: &[u32],
    j: &[u32],
) -> Result<Result<Permutation, TransporterRefutation>, BacktrackError> {
    if i.len() != j.len() {
        return Err(BacktrackError::Invalid(format!(
            "tuple length mismatch: {} vs {}",
            i.len(),
            j.len()
        )));
    }
    for &p in i.iter().chain(j) {
        if p as usize >= group.degree() {
            return Err(GroupError::PointOutOfRange(p, group.degree()).into());
        }
    }
    let refute = |level: usize, nodes: u64| {
        Ok(Err(TransporterRefutation {
            mode: "chain-walk".to_string(),
            failed_level: level,
            nodes,
        }))
    };
    // Deduplicate the source tuple; conflicting or non-injective targets
    // admit no transporter at all.
    let mut src = Vec::new();
    let mut dst = Vec::new();
    for (&a, &b) in i.iter().zip(j) {
        match src.iter().position(|&x| x == a) {
            Some(k) => {
                if dst[k] != b {
                    return refute(0, 0);
                }
            }
            None => {
                if dst.contains(&b) {
                    return refute(0, 0);
                }
                src.push(a);
                dst.push(b);
            }
        }
    }
    let chain = group.chain_with_base(&src);
    match chain.walk_transporter(&src, &dst) {
        Ok(acc) => {
            debug_assert!(i.iter().zip(j).all(|(&a, &b)| acc.apply(a) == b));
            Ok(Ok(acc))
        }
        Err(level) => refute(level, level as u64),
    }
}

/// Set-wise stabilizer G_Λ by backtrack over a chain whose base starts with
/// the points of Λ. Sound and complete: leaves are coset representatives of
/// the point-wise stabilizer of the searched base prefix.
pub fn setwise_stabilizer(group: &PermutationGroup, lambda: &[u32]) -> PermutationGroup {
    let mut lam: Vec<u32> = lambda.to_vec();
    lam.sort_unstable();
    lam.dedup();
    if lam.is_empty() || lam.len() == group.degree() {
        return group.clone();
    }
    let chain = group.chain_with_base(&lam);
    let mut in_lam = vec![false; group.degree()];
    for &x in &lam {
        in_lam[x as usize] = true;
    }
    // First level whose stabilizer subgroup already fixes Λ point-wise; the
    // search only branches above it.
    let fix_level = (0..=lam.len().min(chain.levels().len()))
        .find(|&l| {
            chain
                .level_generators(l)
                .iter()
                .all(|g| lam.iter().all(|&x| g.apply(x) == x))
        })
        .expect("level |Λ| always fixes Λ point-wise");
    let mut accepted: Vec<Permutation> = Vec::new();
    let mut stack: Vec<(usize, Permutation)> = vec![(0, Permutation::identity(group.degree()))];
    while let Some((level, w)) = stack.pop() {
        if level == fix_level {
            if lam.iter().all(|&x| in_lam[w.apply(x) as usize]) {
                accepted.push(w);
            }
            continue;
        }
        let lv = &chain.levels()[level];
        let mut candidates: Vec<u32> = lv
            .orbit
            .iter()
            .copied()
            .filter(|&gamma| in_lam[w.apply(gamma) as usize])
            .collect();
        // Ascending order; with a stack, push in reverse.
        candidates.sort_unstable();
        for &gamma in candidates.iter().rev() {
            let u = lv.transversal_elem(gamma).expect("orbit point has transversal");
            stack.push((level + 1, u.compose(&w)));
        }
    }
    let point_stab = chain.stabilizer_group(fix_level);
    let order = point_stab.order() * accepted.len() as u128;
    let mut gens = point_stab.generators().to_vec();
    gens.extend(accepted.into_iter().filter(|w| !w.is_identity()));
    let result =
        PermutationGroup::with_known_order(group.degree(), gens, order).expect("degrees agree");
    debug_assert!(result
        .generators()
        .iter()
        .all(|g| { lam.iter().all(|&x| in_lam[g.apply(x) as usize]) }));
    result
}

/// Brute-force set-wise stabilizer (test oracle).
pub fn setwise_stabilizer_brute(
    group: &PermutationGroup,
    lambda: &[u32],
    guard: u128,
) -> Result<Vec<Permutation>, GroupError> {
    let mut lam: Vec<u32> = lambda.to_vec();
    lam.sort_unstable();
    lam.dedup();
    let mut in_lam = vec![false; group.degree()];
    for &x in &lam {
        in_lam[x as usize] = true;
    }
    Ok(group
        .elements(guard)?
        .into_iter()
        .filter(|g| lam.iter().all(|&x| in_lam[g.apply(x) as usize]))
        .collect())
}

/// Point-wise stabilizer G_(Λ).
pub fn pointwise_stabilizer(group: &PermutationGroup, lambda: &[u32]) -> PermutationGroup {
    let mut lam: Vec<u32> = lambda.to_vec();
    lam.sort_unstable();
    lam.dedup();
    group.stabilizer_of_points(&lam)
}

/// Builds the subgroup generated by a stream of elements, keeping only the
/// ones that enlarge it (at most log2(order) many).
pub fn group_from_elements(
    degree: usize,
    elems: impl IntoIterator<Item = Permutation>,
) -> PermutationGroup {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermutationGroup::trivial(degree);
    for e in elems {
        if !e.is_identity() && !current.contains(&e) {
            gens.push(e);
            current = PermutationGroup::new(degree, gens.clone()).expect("degrees agree");
        }
    }
    current
}

/// Exact A ∩ B. Enumerates the smaller group when possible, otherwise
/// backtracks over A's chain pruned by transporter existence in B.
pub fn intersection(
    a: &PermutationGroup,
    b: &PermutationGroup,
    guard: u128,
    node_budget: u64,
) -> Result<PermutationGroup, BacktrackError> {
    if a.degree() != b.degree() {
        return Err(GroupError::DegreeMismatch(a.degree(), b.degree()).into());
    }
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    if small.order() <= guard {
        let members = small
            .elements(guard)?
            .into_iter()
            .filter(|g| large.contains(g));
        return Ok(group_from_elements(a.degree(), members));
    }
    // Backtrack over A's chain; prune each partial base-image assignment by
    // transporter existence in B, certify leaves by sifting in B.
    let chain_a = a.chain();
    let base = chain_a.base();
    let chain_b = b.chain_with_base(&base);
    let mut nodes: u64 = 0;
    let mut found: Vec<Permutation> = Vec::new();
    let mut stack: Vec<(usize, Permutation)> = vec![(0, Permutation::identity(a.degree()))];
    while let Some((level, w)) = stack.pop() {
        nodes += 1;
        if nodes > node_budget {
            return Err(BacktrackError::Inconclusive { nodes });
        }
        if level == base.len() {
            // Leaves enumerate A exactly once each (A's full chain is a
            // bijection between base-image sequences and elements).
            if chain_b.contains(&w) {
                found.push(w.clone());
            }
            continue;
        }
        let lv = &chain_a.levels()[level];
        let mut candidates: Vec<u32> = lv.orbit.to_vec();
        candidates.sort_unstable();
        for &gamma in candidates.iter().rev() {
            let w2 = lv.transversal_elem(gamma).expect("orbit point").compose(&w);
            let images: Vec<u32> = base[..=level].iter().map(|&p| w2.apply(p)).collect();
            if chain_b.walk_transporter(&base[..=level], &images).is_ok() {
                stack.push((level + 1, w2));
            }
        }
    }
    Ok(group_from_elements(a.degree(), found))
}

/// Number of orbits on ordered distinct pairs.
pub fn pair_orbit_count(group: &PermutationGroup) -> usize {
    let n = group.degree();
    let gens = group.generators();
    let mut id = vec![usize::MAX; n * n];
    let mut count = 0;
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            if a == b || id[a as usize * n + b as usize] != usize::MAX {
                continue;
            }
            let mut stack = vec![(a, b)];
            id[a as usize * n + b as usize] = count;
            while let Some((x, y)) = stack.pop() {
                for g in gens {
                    let (gx, gy) = (g.apply(x), g.apply(y));
                    let k = gx as usize * n + gy as usize;
                    if id[k] == usize::MAX {
                        id[k] = count;
                        stack.push((gx, gy));
                    }
                }
            }
            count += 1;
        }
    }
    count
}

/// True iff the group is transitive with a single orbit on ordered distinct
/// pairs (equivalently: a point stabilizer is transitive on the rest).
pub fn is_2_transitive(group: &PermutationGroup) -> bool {
    group.degree() >= 2 && group.is_transitive() && pair_orbit_count(group) == 1
}

/// All x in G with g^x = g^s, found by assigning images cycle-by-cycle
/// (x maps cycles of g onto equal-length cycles of g^s).
fn conjugating_elements(
    group: &PermutationGroup,
    g: &Permutation,
    gs: &Permutation,
    nodes: &mut u64,
    node_budget: u64,
    out: &mut Vec<Permutation>,
) -> Result<(), BacktrackError> {
    let n = group.degree();
    let cycles_g = g.cycles_with_fixed(true);
    // For propagation we need, for each point q, the cycle of g^s through q.
    let mut images: Vec<Option<u32>> = vec![None; n];
    let mut used: Vec<bool> = vec![false; n];
    fn assign(
        ci: usize,
        cycles_g: &[Vec<u32>],
        gs: &Permutation,
        images: &mut Vec<Option<u32>>,
        used: &mut Vec<bool>,
        group: &PermutationGroup,
        nodes: &mut u64,
        node_budget: u64,
        out: &mut Vec<Permutation>,
    ) -> Result<(), BacktrackError> {
        *nodes += 1;
        if *nodes > node_budget {
            return Err(BacktrackError::Inconclusive { nodes: *nodes });
        }
        if ci == cycles_g.len() {
            let imgs: Vec<u32> = images.iter().map(|o| o.expect("fully assigned")).collect();
            let x = Permutation::from_images(imgs).expect("propagation keeps injectivity");
            if group.contains(&x) {
                out.push(x);
            }
            return Ok(());
        }
        let cycle = &cycles_g[ci];
        for q0 in 0..group.degree() as u32 {
            if used[q0 as usize] {
                continue;
            }
            // Propagate x(g^k p0) = (g^s)^k q0 around the cycle; the target
            // cycle must close with the same length.
            let mut ok = true;
            let mut placed: Vec<u32> = Vec::with_capacity(cycle.len());
            let mut q = q0;
            for (k, &p) in cycle.iter().enumerate() {
                if used[q as usize] || images[p as usize].is_some() {
                    ok = false;
                    break;
                }
                images[p as usize] = Some(q);
                used[q as usize] = true;
                placed.push(p);
                let next = gs.apply(q);
                if k + 1 == cycle.len() {
                    if next != q0 {
                        ok = false;
                    }
                } else if next == q0 {
                    ok = false;
                }
                if !ok {
                    break;
                }
                q = next;
            }
            if ok {
                assign(ci + 1, cycles_g, gs, images, used, group, nodes, node_budget, out)?;
            }
            for &p in &placed {
                let img = images[p as usize].take().expect("was placed");
                used[img as usize] = false;
            }
        }
        Ok(())
    }
    assign(0, &cycles_g, gs, &mut images, &mut used, group, nodes, node_budget, out)
}

/// Normalizer N_G(⟨g⟩), computed by solving g^x = g^s for every power map
/// s coprime to the order of g and closing the solutions into a group.
pub fn cyclic_normalizer(
    group: &PermutationGroup,
    g: &Permutation,
    node_budget: u64,
) -> Result<PermutationGroup, BacktrackError> {
    if g.is_identity() {
        return Ok(group.clone());
    }
    let m = g.order() as i64;
    let mut nodes = 0u64;
    let mut solutions: Vec<Permutation> = Vec::new();
    for s in 1..m {
        if crate::perm::gcd(s as u64, m as u64) != 1 {
            continue;
        }
        let gs = g.pow(s);
        conjugating_elements(group, g, &gs, &mut nodes, node_budget, &mut solutions)?;
    }
    Ok(group_from_elements(group.degree(), solutions))
}

/// Orbit of a point under a subgroup given by generators, with for each orbit
/// point a transporter from the start point (Schreier tree walk).
pub fn orbit_transporter(
    gens: &[Permutation],
    degree: usize,
    from: u32,
    to: u32,
) -> Option<Permutation> {
    crate::group::orbit_with_transversal(gens, degree, from).remove(&to)
}

/// Orbit partition as point -> orbit id (ids in first-seen order).
pub fn orbit_ids(gens: &[Permutation], degree: usize) -> Vec<u32> {
    let mut ids = vec![u32::MAX; degree];
    let mut next = 0;
    for p in 0..degree as u32 {
        if ids[p as usize] != u32::MAX {
            continue;
        }
        for q in orbit_of(gens, degree, p) {
            ids[q as usize] = next;
        }
        next += 1;
    }
    ids
}
