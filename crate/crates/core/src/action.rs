//! Induced actions: k-subsets, uniform partitions, coset actions, and
//! restriction of a group to an invariant-ized subset of its domain.
//!
//! Domain labels are canonicalized (sorted subsets, partitions as sorted
//! lists of sorted blocks, cosets by their lexicographically least member),
//! so certificates are label-stable across runs.

use crate::backtrack::{pointwise_stabilizer, setwise_stabilizer};
use crate::group::{GroupError, PermutationGroup, ENUMERATION_GUARD};
use crate::perm::Permutation;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ActionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{0} is not a subgroup (generator fails to sift)")]
    NotASubgroup(String),
    #[error("coset index {index} exceeds the materialization bound {bound}")]
    IndexOverBudget { index: u128, bound: u128 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A canonical, printable label for a point of an induced action.
/// Subset/partition entries are 0-based internally and render 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ActionLabel {
    Point(u32),
    Subset(Vec<u32>),
    Partition(Vec<Vec<u32>>),
    /// Lexicographically least element of the coset (by image sequence).
    Coset(Permutation),
    /// Row-reduced echelon basis, entries as field codes.
    Subspace(Vec<Vec<u8>>),
    /// Nested subspaces W1 < W2 < …, each in echelon form.
    Flag(Vec<Vec<Vec<u8>>>),
}

impl fmt::Display for ActionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn set(f: &mut fmt::Formatter<'_>, s: &[u32]) -> fmt::Result {
            let parts: Vec<String> = s.iter().map(|&x| (x + 1).to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
        match self {
            ActionLabel::Point(p) => write!(f, "{}", p + 1),
            ActionLabel::Subset(s) => set(f, s),
            ActionLabel::Partition(blocks) => {
                for (i, b) in blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, "|")?;
                    }
                    set(f, b)?;
                }
                Ok(())
            }
            ActionLabel::Coset(rep) => write!(f, "M·{}", rep.to_cycle_string()),
            ActionLabel::Subspace(rows) => {
                let rs: Vec<String> = rows
                    .iter()
                    .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(""))
                    .collect();
                write!(f, "⟨{}⟩", rs.join(";"))
            }
            ActionLabel::Flag(spaces) => {
                for (i, s) in spaces.iter().enumerate() {
                    if i > 0 {
                        write!(f, "<")?;
                    }
                    ActionLabel::Subspace(s.clone()).fmt(f)?;
                }
                Ok(())
            }
        }
    }
}

/// An action of a parent group on a labeled domain.
#[derive(Debug, Clone)]
pub struct InducedAction {
    pub labels: Vec<ActionLabel>,
    /// The induced permutation group on `{0..labels.len()-1}`.
    pub group: PermutationGroup,
    /// (parent generator, its induced image), index-aligned.
    pub parent_generator_map: Vec<(Permutation, Permutation)>,
    /// Point-wise stabilizer of the whole domain inside the parent.
    pub kernel: PermutationGroup,
}

impl InducedAction {
    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub fn label_index(&self, label: &ActionLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Spot-check that the generator map is a homomorphism on words of
    /// length ≤ 3 (test helper; exhaustive over generator triples).
    pub fn verify_generator_homomorphism(&self) -> bool {
        let m = &self.parent_generator_map;
        for (p1, q1) in m {
            for (p2, q2) in m {
                let p12 = p1.compose(p2);
                let q12 = q1.compose(q2);
                for (p3, q3) in m {
                    let lhs = self.image_of(&p12.compose(p3));
                    let rhs = q12.compose(q3);
                    if lhs.as_ref() != Some(&rhs) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The induced image of an arbitrary parent element, if the labels allow
    /// recomputing it (used by tests; works for all label kinds constructed
    /// by this module via the stored generator map and sifting).
    fn image_of(&self, parent_elem: &Permutation) -> Option<Permutation> {
        // Factor the element over the parent generators by sifting through a
        // chain of the *paired* action (parent ⊕ induced): the induced part
        // of any factorization is the image.
        let n_par = self.parent_generator_map.first()?.0.degree();
        let n_ind = self.degree();
        let paired: Vec<Permutation> = self
            .parent_generator_map
            .iter()
            .map(|(p, q)| pair_perm(p, q, n_par, n_ind))
            .collect();
        let paired_group = PermutationGroup::new(n_par + n_ind, paired).ok()?;
        // Find the unique paired element whose parent part matches.
        let base: Vec<u32> = (0..n_par as u32).collect();
        let chain = paired_group.chain_with_base(&base);
        let images: Vec<u32> = parent_elem.images().to_vec();
        let g = chain.walk_transporter(&base, &images).ok()?;
        let ind: Vec<u32> = (n_par..n_par + n_ind)
            .map(|x| g.apply(x as u32) - n_par as u32)
            .collect();
        Permutation::from_images(ind).ok()
    }
}

/// The subgroup of the parent whose induced images stabilize `lambda`
/// (a subset of the induced domain) set-wise, computed in the paired action
/// (parent ⊕ induced) and projected back to the parent's domain.
pub fn parent_setwise_stabilizer(
    action: &InducedAction,
    lambda: &[u32],
) -> Result<PermutationGroup, ActionError> {
    let n_par = action
        .parent_generator_map
        .first()
        .map(|(p, _)| p.degree())
        .ok_or_else(|| ActionError::InvalidParameters("generator-free action".to_string()))?;
    let n_ind = action.degree();
    let paired: Vec<Permutation> = action
        .parent_generator_map
        .iter()
        .map(|(p, q)| pair_perm(p, q, n_par, n_ind))
        .collect();
    let paired_group = PermutationGroup::new(n_par + n_ind, paired)?;
    let shifted: Vec<u32> = lambda.iter().map(|&x| x + n_par as u32).collect();
    let stab = setwise_stabilizer(&paired_group, &shifted);
    let gens: Vec<Permutation> = stab
        .generators()
        .iter()
        .map(|g| Permutation::from_images(g.images()[..n_par].to_vec()).expect("block element"))
        .collect();
    // The projection is injective when the parent acts faithfully on its own
    // block of the paired action, which holds by construction.
    Ok(PermutationGroup::with_known_order(n_par, gens, stab.order())?)
}

fn pair_perm(p: &Permutation, q: &Permutation, n_par: usize, n_ind: usize) -> Permutation {
    let mut images: Vec<u32> = Vec::with_capacity(n_par + n_ind);
    images.extend(p.images());
    images.extend(q.images().iter().map(|&x| x + n_par as u32));
    Permutation::from_images(images).expect("blocks are bijections")
}

/// Builds the induced action given the canonical labels and a function
/// computing the image label of a (label, parent generator) pair.
pub fn induced_from_labels(
    parent: &PermutationGroup,
    labels: Vec<ActionLabel>,
    mut act: impl FnMut(&ActionLabel, &Permutation) -> ActionLabel,
    faithful: bool,
) -> Result<InducedAction, ActionError> {
    let parent_gens = parent.generators();
    let index: HashMap<ActionLabel, u32> = labels
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, l)| (l, i as u32))
        .collect();
    let mut map = Vec::with_capacity(parent_gens.len());
    for g in parent_gens {
        let images: Vec<u32> = labels
            .iter()
            .map(|l| {
                let img = act(l, g);
                *index
                    .get(&img)
                    .unwrap_or_else(|| panic!("image {img} escapes the domain"))
            })
            .collect();
        map.push((g.clone(), Permutation::from_images(images).expect("action is a bijection")));
    }
    let gens: Vec<Permutation> = map.iter().map(|(_, q)| q.clone()).collect();
    let (group, kernel) = if faithful {
        (
            PermutationGroup::with_known_order(labels.len(), gens, parent.order())?,
            PermutationGroup::trivial(parent.degree()),
        )
    } else {
        let group = PermutationGroup::new(labels.len(), gens)?;
        let kernel = if group.order() == parent.order() {
            PermutationGroup::trivial(parent.degree())
        } else {
            kernel_by_pairing(parent, &map)?
        };
        (group, kernel)
    };
    Ok(InducedAction {
        labels,
        group,
        parent_generator_map: map,
        kernel,
    })
}

fn apply_to_subset(g: &Permutation, s: &[u32]) -> Vec<u32> {
    let mut t: Vec<u32> = s.iter().map(|&x| g.apply(x)).collect();
    t.sort_unstable();
    t
}

fn apply_to_partition(g: &Permutation, blocks: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut t: Vec<Vec<u32>> = blocks.iter().map(|b| apply_to_subset(g, b)).collect();
    t.sort();
    t
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// n! / ((k!)^ℓ · ℓ!) with ℓ = n/k: the number of partitions of an n-set
/// into blocks of size k.
pub fn uniform_partition_count(n: u64, k: u64) -> u128 {
    let l = n / k;
    let mut acc: u128 = 1;
    // Choose blocks one at a time, smallest unused point anchors each block.
    for i in 0..l {
        acc *= binomial(n - i * k - 1, k - 1);
    }
    acc
}

fn subsets_of(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for x in start..=(n - need as u32) {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n as u32, k, &mut cur, &mut out);
    out
}

/// The action of `parent` (a subgroup of Sym(n)) on k-subsets of {0..n-1}.
pub fn k_subset_action(parent: &PermutationGroup, k: usize) -> Result<InducedAction, ActionError> {
    let n = parent.degree();
    if k < 1 || k >= n {
        return Err(ActionError::InvalidParameters(format!(
            "k-subsets need 1 ≤ k < n, got k={k}, n={n}"
        )));
    }
    let labels: Vec<ActionLabel> = subsets_of(n, k).into_iter().map(ActionLabel::Subset).collect();
    debug_assert_eq!(labels.len() as u128, binomial(n as u64, k as u64));
    // Faithful for 1 ≤ k < n: a k-subset containing a moved point but not
    // its image separates any nontrivial element from the identity.
    let action = induced_from_labels(
        parent,
        labels,
        |l, g| match l {
            ActionLabel::Subset(s) => ActionLabel::Subset(apply_to_subset(g, s)),
            _ => unreachable!(),
        },
        true,
    )?;
    Ok(action)
}

/// The action of `parent` on partitions of {0..n-1} into n/k blocks of size k.
pub fn uniform_partition_action(
    parent: &PermutationGroup,
    k: usize,
) -> Result<InducedAction, ActionError> {
    let n = parent.degree();
    let l = n / k;
    if k < 2 || n % k != 0 || l < 2 {
        return Err(ActionError::InvalidParameters(format!(
            "uniform partitions need k ≥ 2, ℓ = n/k ≥ 2 and k | n, got k={k}, n={n}"
        )));
    }
    let mut labels_raw: Vec<Vec<Vec<u32>>> = Vec::new();
    // Enumerate by anchoring each block at its least unplaced point.
    fn rec(remaining: &mut Vec<u32>, k: usize, cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if remaining.is_empty() {
            let mut p = cur.clone();
            p.sort();
            out.push(p);
            return;
        }
        let anchor = remaining[0];
        let rest: Vec<u32> = remaining[1..].to_vec();
        for combo in subsets_of(rest.len(), k - 1) {
            let mut block = vec![anchor];
            block.extend(combo.iter().map(|&i| rest[i as usize]));
            let mut next: Vec<u32> = rest
                .iter()
                .copied()
                .filter(|x| !block.contains(x))
                .collect();
            cur.push(block);
            rec(&mut next, k, cur, out);
            cur.pop();
        }
    }
    rec(&mut (0..n as u32).collect(), k, &mut Vec::new(), &mut labels_raw);
    labels_raw.sort();
    debug_assert_eq!(labels_raw.len() as u128, uniform_partition_count(n as u64, k as u64));
    let labels: Vec<ActionLabel> = labels_raw.into_iter().map(ActionLabel::Partition).collect();
    // Faithful except for (n, k) = (4, 2), whose kernel is the Klein group.
    let action = induced_from_labels(
        parent,
        labels,
        |l, g| match l {
            ActionLabel::Partition(b) => ActionLabel::Partition(apply_to_partition(g, b)),
            _ => unreachable!(),
        },
        !(n == 4 && k == 2),
    )?;
    Ok(action)
}

/// Lexicographically least element of the coset M·g (image-sequence order),
/// computed by greedy descent of M's natural-base chain (the minimizing
/// choice at each level is unique because g is injective).
pub fn min_coset_rep(m_chain: &crate::group::StabilizerChain, g: &Permutation) -> Permutation {
    let mut acc = g.clone();
    for level in m_chain.levels() {
        let (&best, _) = level
            .orbit
            .iter()
            .map(|p| (p, acc.apply(*p)))
            .min_by_key(|&(_, img)| img)
            .expect("orbit nonempty");
        let u = level.transversal_elem(best).expect("orbit point");
        acc = u.compose(&acc);
    }
    acc
}

/// The action of G on right cosets of M ≤ G.
pub fn coset_action(
    g: &PermutationGroup,
    m: &PermutationGroup,
    index_bound: u128,
) -> Result<InducedAction, ActionError> {
    if g.degree() != m.degree() {
        return Err(GroupError::DegreeMismatch(g.degree(), m.degree()).into());
    }
    if !g.contains_group(m) {
        return Err(ActionError::NotASubgroup("M".to_string()));
    }
    let index = g.order() / m.order();
    if index > index_bound {
        return Err(ActionError::IndexOverBudget {
            index,
            bound: index_bound,
        });
    }
    let natural_base: Vec<u32> = (0..m.degree() as u32).collect();
    let m_chain = m.chain_with_base(&natural_base);
    let start = min_coset_rep(&m_chain, &Permutation::identity(g.degree()));
    let mut index_of: HashMap<Permutation, u32> = HashMap::from([(start.clone(), 0)]);
    let mut reps: Vec<Permutation> = vec![start];
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i].clone();
        for s in g.generators() {
            let img = min_coset_rep(&m_chain, &r.compose(s));
            if !index_of.contains_key(&img) {
                index_of.insert(img.clone(), reps.len() as u32);
                reps.push(img);
            }
        }
        i += 1;
    }
    assert_eq!(reps.len() as u128, index, "coset BFS must reach the full index");
    let mut map = Vec::new();
    for s in g.generators() {
        let images: Vec<u32> = reps
            .iter()
            .map(|r| index_of[&min_coset_rep(&m_chain, &r.compose(s))])
            .collect();
        map.push((s.clone(), Permutation::from_images(images).expect("bijection")));
    }
    let group = PermutationGroup::new(reps.len(), map.iter().map(|(_, q)| q.clone()).collect())?;
    // Kernel = core of M in G: trivial iff the induced order equals |G|.
    let kernel = if group.order() == g.order() {
        PermutationGroup::trivial(g.degree())
    } else {
        kernel_by_pairing(g, &map)?
    };
    Ok(InducedAction {
        labels: reps.into_iter().map(ActionLabel::Coset).collect(),
        group,
        parent_generator_map: map,
        kernel,
    })
}

/// Kernel of the action homomorphism via the paired action (parent ⊕ induced):
/// the point-wise stabilizer of the induced block, projected to the parent.
pub fn kernel_by_pairing(
    parent: &PermutationGroup,
    map: &[(Permutation, Permutation)],
) -> Result<PermutationGroup, ActionError> {
    let n_par = parent.degree();
    let n_ind = map.first().map(|(_, q)| q.degree()).unwrap_or(0);
    let paired: Vec<Permutation> = map
        .iter()
        .map(|(p, q)| pair_perm(p, q, n_par, n_ind))
        .collect();
    let paired_group = PermutationGroup::new(n_par + n_ind, paired)?;
    let fix: Vec<u32> = (n_par as u32..(n_par + n_ind) as u32).collect();
    let stab = paired_group.stabilizer_of_points(&fix);
    let gens: Vec<Permutation> = stab
        .generators()
        .iter()
        .map(|g| {
            Permutation::from_images(g.images()[..n_par].to_vec()).expect("block-diagonal element")
        })
        .collect();
    Ok(PermutationGroup::with_known_order(n_par, gens, stab.order())?)
}

/// Result of restricting a group to a subset of its domain.
pub struct Restriction {
    /// Sorted subset the restriction lives on.
    pub lambda: Vec<u32>,
    /// Set-wise stabilizer G_Λ inside the original group.
    pub setwise: PermutationGroup,
    /// G^Λ: the induced group on positions of Λ (degree |Λ|).
    pub induced: PermutationGroup,
    /// G_(Λ): point-wise stabilizer (the kernel of G_Λ → G^Λ).
    pub kernel: PermutationGroup,
}

/// Computes G_Λ, G^Λ and G_(Λ), verifying |G_Λ| = |G^Λ|·|G_(Λ)|.
pub fn restrict(group: &PermutationGroup, lambda: &[u32]) -> Result<Restriction, ActionError> {
    let mut lam: Vec<u32> = lambda.to_vec();
    lam.sort_unstable();
    lam.dedup();
    if lam.is_empty() {
        return Err(ActionError::InvalidParameters("empty subset".to_string()));
    }
    let setwise = setwise_stabilizer(group, &lam);
    let kernel = pointwise_stabilizer(&setwise, &lam);
    let pos: HashMap<u32, u32> = lam.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
    let induced_gens: Vec<Permutation> = setwise
        .generators()
        .iter()
        .map(|g| {
            let images: Vec<u32> = lam.iter().map(|&x| pos[&g.apply(x)]).collect();
            Permutation::from_images(images).expect("Λ is invariant")
        })
        .collect();
    let induced = PermutationGroup::new(lam.len(), induced_gens)?;
    assert_eq!(
        setwise.order(),
        induced.order() * kernel.order(),
        "induced times kernel must equal the set-wise stabilizer order"
    );
    Ok(Restriction {
        lambda: lam,
        setwise,
        induced,
        kernel,
    })
}

/// Subset of the pool guard re-exported for callers building oracles.
pub const DEFAULT_INDEX_BOUND: u128 = ENUMERATION_GUARD;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backtrack::is_2_transitive;

    #[test]
    fn k_subset_counts_and_transitivity() {
        let a = k_subset_action(&PermutationGroup::symmetric(5), 2).unwrap();
        assert_eq!(a.degree(), 10);
        assert!(a.group.is_transitive());
        let a = k_subset_action(&PermutationGroup::symmetric(8), 3).unwrap();
        assert_eq!(a.degree(), 56);
        assert!(a.group.is_transitive());
        let a = k_subset_action(&PermutationGroup::alternating(6), 2).unwrap();
        assert_eq!(a.degree(), 15);
        assert_eq!(a.group.order(), 360);
        assert!(k_subset_action(&PermutationGroup::symmetric(4), 0).is_err());
    }

    #[test]
    fn sym4_on_pairs_single_orbit() {
        let a = k_subset_action(&PermutationGroup::symmetric(4), 2).unwrap();
        assert_eq!(a.degree(), 6);
        assert_eq!(a.group.orbit(0).unwrap().len(), 6);
    }

    #[test]
    fn partition_counts() {
        let a = uniform_partition_action(&PermutationGroup::symmetric(6), 3).unwrap();
        assert_eq!(a.degree(), 10);
        let a = uniform_partition_action(&PermutationGroup::symmetric(4), 2).unwrap();
        assert_eq!(a.degree(), 3);
        assert_eq!(uniform_partition_count(10, 2), 945);
        assert!(uniform_partition_action(&PermutationGroup::symmetric(7), 3).is_err());
    }

    #[test]
    fn partition_action_degree_945() {
        let a = uniform_partition_action(&PermutationGroup::symmetric(10), 2).unwrap();
        assert_eq!(a.degree(), 945);
        assert!(a.group.is_transitive());
        assert_eq!(a.group.order(), 3628800);
    }

    #[test]
    fn partition_4_2_kernel_is_klein() {
        let a = uniform_partition_action(&PermutationGroup::symmetric(4), 2).unwrap();
        assert_eq!(a.group.order(), 6);
        assert_eq!(a.kernel.order(), 4);
    }

    #[test]
    fn parent_setwise_stabilizer_projects() {
        // Stabilizer of one 2-subset point inside Sym(4): Sym(2) × Sym(2).
        let a = k_subset_action(&PermutationGroup::symmetric(4), 2).unwrap();
        let idx = a.label_index(&ActionLabel::Subset(vec![0, 1])).unwrap() as u32;
        let stab = parent_setwise_stabilizer(&a, &[idx]).unwrap();
        assert_eq!(stab.order(), 4);
        assert!(stab.generators().iter().all(|g| {
            let img: std::collections::BTreeSet<u32> = [0, 1].iter().map(|&x| g.apply(x)).collect();
            img == [0u32, 1].into_iter().collect()
        }));
    }

    #[test]
    fn homomorphism_spot_check() {
        let a = k_subset_action(&PermutationGroup::symmetric(5), 2).unwrap();
        assert!(a.verify_generator_homomorphism());
        let a = uniform_partition_action(&PermutationGroup::symmetric(6), 2).unwrap();
        assert!(a.verify_generator_homomorphism());
    }

    #[test]
    fn coset_action_natural() {
        // Sym(3) on cosets of ⟨(1 2)⟩: degree 3, faithful, same order.
        let g = PermutationGroup::symmetric(3);
        let m = PermutationGroup::from_cycle_strings(3, &["(1 2)"]).unwrap();
        let a = coset_action(&g, &m, DEFAULT_INDEX_BOUND).unwrap();
        assert_eq!(a.degree(), 3);
        assert_eq!(a.group.order(), 6);
        assert!(a.kernel.is_trivial());
    }

    #[test]
    fn coset_action_stabilizer_matches() {
        // Point stabilizer of the coset M is conjugate to M (here: equal order).
        let g = PermutationGroup::symmetric(4);
        let m = crate::backtrack::setwise_stabilizer(&g, &[0, 1]);
        let a = coset_action(&g, &m, DEFAULT_INDEX_BOUND).unwrap();
        assert_eq!(a.degree(), 6);
        let stab = a.group.stabilizer_of_points(&[0]);
        assert_eq!(stab.order(), m.order());
    }

    #[test]
    fn coset_action_nontrivial_kernel() {
        // Sym(4) on cosets of a subgroup containing the Klein kernel V4:
        // M = D8 ⊇ V4, index 3; kernel of the degree-3 action is V4.
        let g = PermutationGroup::symmetric(4);
        let m = PermutationGroup::from_cycle_strings(4, &["(1 2 3 4)", "(1 3)"]).unwrap();
        assert_eq!(m.order(), 8);
        let a = coset_action(&g, &m, DEFAULT_INDEX_BOUND).unwrap();
        assert_eq!(a.degree(), 3);
        assert_eq!(a.group.order(), 6);
        assert_eq!(a.kernel.order(), 4);
    }

    #[test]
    fn coset_action_rejects_non_subgroup() {
        let g = PermutationGroup::alternating(4);
        let m = PermutationGroup::from_cycle_strings(4, &["(1 2)"]).unwrap();
        assert!(coset_action(&g, &m, DEFAULT_INDEX_BOUND).is_err());
    }

    #[test]
    fn restrict_fixed_point() {
        let g = PermutationGroup::from_cycle_strings(5, &["(1 2 3 4)"]).unwrap();
        let r = restrict(&g, &[4]).unwrap();
        assert_eq!(r.induced.order(), 1);
        assert_eq!(r.setwise.order(), 4);
    }

    #[test]
    fn restrict_orders_multiply() {
        let g = PermutationGroup::symmetric(6);
        let r = restrict(&g, &[0, 1, 2]).unwrap();
        assert_eq!(r.setwise.order(), 36);
        assert_eq!(r.induced.order(), 6);
        assert_eq!(r.kernel.order(), 6);
        assert!(is_2_transitive(&r.induced));
    }
}
