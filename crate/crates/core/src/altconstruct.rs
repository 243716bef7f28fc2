//! Named explicit configurations inside actions of Sym(n)/Alt(n): the Fano
//! family of k-subsets, the Petersen matchings, Fano-patterned uniform
//! partitions, the ten 3-uniform splits of a 6-set, and the affine line
//! orbit on cosets of the one-dimensional affine group.
//!
//! Constructors emit the printed 1-based sets, canonicalized to 0-based
//! labels, ready for certification by the beautiful-subset machinery.

use crate::action::{coset_action, ActionLabel, InducedAction};
use crate::backtrack::intersection;
use crate::group::{cycle, factorial, transposition, PermutationGroup, ENUMERATION_GUARD};
use crate::perm::Permutation;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("parameter violation: {0}")]
    Parameters(String),
    #[error(transparent)]
    Action(#[from] crate::action::ActionError),
    #[error(transparent)]
    Backtrack(#[from] crate::backtrack::BacktrackError),
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
}

/// A named subset configuration: canonical labels inside a stated action.
#[derive(Debug, Clone)]
pub struct NamedConfiguration {
    /// One of "fano-subset", "petersen-matchings", "fano-partitions",
    /// "three-uniform", "affine-line".
    pub id: &'static str,
    pub n: usize,
    pub k: usize,
    pub labels: Vec<ActionLabel>,
    pub expected_size: usize,
    pub expected_induced_order: u128,
}

impl NamedConfiguration {
    /// Resolves the configuration's labels to point indices of an action.
    pub fn indices_in(&self, action: &InducedAction) -> Option<Vec<u32>> {
        self.labels
            .iter()
            .map(|l| action.label_index(l).map(|i| i as u32))
            .collect()
    }
}

/// The seven Fano lines on points {1..7}, 1-based as printed.
pub const FANO_LINES: [[u32; 3]; 7] = [
    [1, 2, 3],
    [3, 4, 5],
    [1, 5, 6],
    [1, 4, 7],
    [3, 6, 7],
    [2, 5, 7],
    [2, 4, 6],
];

fn to0(xs: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut v: Vec<u32> = xs.into_iter().map(|x| x - 1).collect();
    v.sort_unstable();
    v
}

/// Seven k-subsets of {1..n}: each Fano line extended by the common tail
/// {8..k+4}. Requires 2 < k < n/2 (integer halving, matching the contract's
/// examples; see the build notes for the boundary case of odd n).
pub fn fano_subset(n: usize, k: usize) -> Result<NamedConfiguration, ConstructError> {
    if !(2 < k && k < n / 2) {
        return Err(ConstructError::Parameters(format!(
            "fano-subset needs 2 < k < n/2, got n={n}, k={k}"
        )));
    }
    let tail: Vec<u32> = (8..=(k as u32 + 4)).collect();
    let labels = FANO_LINES
        .iter()
        .map(|line| ActionLabel::Subset(to0(line.iter().copied().chain(tail.iter().copied()))))
        .collect();
    Ok(NamedConfiguration {
        id: "fano-subset",
        n,
        k,
        labels,
        expected_size: 7,
        expected_induced_order: 168,
    })
}

/// The six complete matchings of the Petersen graph, 1-based as printed.
pub const PETERSEN_MATCHINGS: [[[u32; 2]; 5]; 6] = [
    [[1, 6], [2, 7], [3, 8], [4, 9], [5, 10]],
    [[1, 2], [3, 8], [4, 5], [6, 9], [7, 10]],
    [[1, 5], [2, 3], [4, 9], [6, 8], [7, 10]],
    [[1, 6], [2, 3], [4, 5], [7, 9], [8, 10]],
    [[1, 2], [3, 4], [5, 10], [6, 8], [7, 9]],
    [[1, 5], [2, 7], [3, 4], [6, 9], [8, 10]],
];

fn pad_blocks(mut blocks: Vec<Vec<u32>>, start: u32, n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut x = start;
    while (x as usize) <= n {
        blocks.push(to0(x..x + k as u32));
        x += k as u32;
    }
    blocks.sort();
    blocks
}

/// Six partitions of {1..n} into 2-blocks: the Petersen matchings padded by
/// the fixed pairs {11,12}, {13,14}, …. Requires n even, n ≥ 10.
pub fn petersen_matchings(n: usize) -> Result<NamedConfiguration, ConstructError> {
    if n % 2 != 0 || n < 10 {
        return Err(ConstructError::Parameters(format!(
            "petersen-matchings needs even n ≥ 10, got n={n}"
        )));
    }
    let labels = PETERSEN_MATCHINGS
        .iter()
        .map(|m| {
            let blocks: Vec<Vec<u32>> = m.iter().map(|p| to0(p.iter().copied())).collect();
            ActionLabel::Partition(pad_blocks(blocks, 11, n, 2))
        })
        .collect();
    Ok(NamedConfiguration {
        id: "petersen-matchings",
        n,
        k: 2,
        labels,
        expected_size: 6,
        expected_induced_order: 120,
    })
}

/// Complements of the Fano lines inside {1..7}, 1-based, printed order.
const FANO_COMPLEMENTS: [[u32; 4]; 7] = [
    [4, 5, 6, 7],
    [1, 2, 6, 7],
    [2, 3, 4, 7],
    [2, 3, 5, 6],
    [1, 2, 4, 5],
    [1, 3, 4, 6],
    [1, 3, 5, 7],
];

/// Seven partitions of {1..n} into k-blocks patterned on the Fano lines:
/// line ∪ {8..k+4} | complement ∪ {k+5..2k} | fixed k-blocks of {2k+1..n}.
/// Requires k ≥ 4 and k | n (hence n ≥ 2k).
pub fn fano_partitions(n: usize, k: usize) -> Result<NamedConfiguration, ConstructError> {
    if k < 4 || n % k != 0 || n < 2 * k {
        return Err(ConstructError::Parameters(format!(
            "fano-partitions needs k ≥ 4, k | n and n ≥ 2k, got n={n}, k={k}"
        )));
    }
    let first_tail: Vec<u32> = (8..=(k as u32 + 4)).collect();
    let second_tail: Vec<u32> = (k as u32 + 5..=2 * k as u32).collect();
    let labels = FANO_LINES
        .iter()
        .zip(&FANO_COMPLEMENTS)
        .map(|(line, comp)| {
            let blocks = vec![
                to0(line.iter().copied().chain(first_tail.iter().copied())),
                to0(comp.iter().copied().chain(second_tail.iter().copied())),
            ];
            ActionLabel::Partition(pad_blocks(blocks, 2 * k as u32 + 1, n, k))
        })
        .collect();
    Ok(NamedConfiguration {
        id: "fano-partitions",
        n,
        k,
        labels,
        expected_size: 7,
        expected_induced_order: 168,
    })
}

/// The ten 3|3 splits of {1..6}, first blocks in the printed order.
pub const THREE_UNIFORM_SPLITS: [[u32; 3]; 10] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 2, 5],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 5],
    [1, 3, 6],
    [1, 4, 5],
    [1, 4, 6],
    [1, 5, 6],
];

/// Ten partitions of {1..n} into 3-blocks: each 3|3 split of {1..6} padded
/// by the fixed triples {7,8,9}, …. Requires 3 | n, n ≥ 6.
pub fn three_uniform_partitions(n: usize) -> Result<NamedConfiguration, ConstructError> {
    if n % 3 != 0 || n < 6 {
        return Err(ConstructError::Parameters(format!(
            "three-uniform needs 3 | n and n ≥ 6, got n={n}"
        )));
    }
    let labels = THREE_UNIFORM_SPLITS
        .iter()
        .map(|first| {
            let complement: Vec<u32> = (1..=6).filter(|x| !first.contains(x)).collect();
            let blocks = vec![to0(first.iter().copied()), to0(complement)];
            ActionLabel::Partition(pad_blocks(blocks, 7, n, 3))
        })
        .collect();
    Ok(NamedConfiguration {
        id: "three-uniform",
        n,
        k: 3,
        labels,
        expected_size: 10,
        expected_induced_order: 720,
    })
}

/// The affine line construction inside Sym(r) on the cosets of AGL₁(r):
/// h of order r−1 in M = AGL₁(r), x inverting h, Δ = (Mx)^M of size r.
#[derive(Debug)]
pub struct AffineLineOrbit {
    pub config: NamedConfiguration,
    /// M = AGL₁(r) ≤ Sym(r), of order r(r−1).
    pub m: PermutationGroup,
    pub h: Permutation,
    pub x: Permutation,
    /// |M ∩ M^x|, verified equal to r−1 (= |⟨h⟩|, so |Δ| = r).
    pub meet_order: u128,
    /// The coset action and the point indices of Δ, when the index is small
    /// enough to materialize (r ≤ 7).
    pub action: Option<(InducedAction, Vec<u32>)>,
}

fn primitive_root(r: u64) -> u64 {
    'cand: for a in 2..r {
        let mut pow = 1u64;
        for _ in 0..r - 2 {
            pow = pow * a % r;
            if pow == 1 {
                continue 'cand;
            }
        }
        return a;
    }
    unreachable!("every prime has a primitive root")
}

fn is_odd_prime(r: usize) -> bool {
    r >= 3 && r % 2 == 1 && (3..r).step_by(2).take_while(|d| d * d <= r).all(|d| r % d != 0)
}

/// Builds the affine line configuration for an odd prime r ≥ 5. For r ≤ 7
/// the coset action is materialized and Δ is listed explicitly; for larger r
/// the certification data is the abstract intersection M ∩ M^x = ⟨h⟩.
pub fn affine_line_orbit(r: usize) -> Result<AffineLineOrbit, ConstructError> {
    if !is_odd_prime(r) || r < 5 {
        return Err(ConstructError::Parameters(format!(
            "affine-line needs an odd prime r ≥ 5, got r={r}"
        )));
    }
    let a = primitive_root(r as u64);
    // Points are the field elements 0..r−1; c is translation by 1, h is
    // multiplication by a primitive root, x inverts the nonzero elements.
    let c = cycle(r, &(0..r as u32).collect::<Vec<_>>());
    let h = Permutation::from_images((0..r as u64).map(|v| (v * a % r as u64) as u32).collect())
        .expect("multiplication by a unit is a bijection");
    let mut inv = vec![0u32; r];
    for v in 1..r as u64 {
        let mut w = 1u64;
        // w = v^{r-2} = v^{-1} mod r.
        for _ in 0..r - 2 {
            w = w * v % r as u64;
        }
        inv[v as usize] = w as u32;
    }
    let x = Permutation::from_images(inv).expect("field inversion is an involution");
    debug_assert_eq!(h.conjugate(&x), h.inverse());
    let m = PermutationGroup::with_known_order(
        r,
        vec![c.clone(), h.clone()],
        (r as u128) * (r as u128 - 1),
    )?;
    debug_assert!(!m.contains(&x));
    let m_conj: Vec<Permutation> = m.generators().iter().map(|g| g.conjugate(&x)).collect();
    let m_x = PermutationGroup::with_known_order(r, m_conj, m.order())?;
    let meet = intersection(&m, &m_x, ENUMERATION_GUARD, 10_000_000)?;
    if meet.order() != (r as u128 - 1) || !meet.contains(&h) {
        return Err(ConstructError::Parameters(
            "M ∩ M^x is not ⟨h⟩; construction does not apply".to_string(),
        ));
    }
    let action = if r <= 7 {
        // Generators listed so the parent map carries images of c and h.
        let sym = PermutationGroup::with_known_order(
            r,
            vec![transposition(r, 0, 1), c.clone(), h.clone()],
            factorial(r),
        )?;
        let act = coset_action(&sym, &m, ENUMERATION_GUARD)?;
        let omega1 = act
            .labels
            .iter()
            .position(|l| match l {
                ActionLabel::Coset(rep) => m.contains(&rep.compose(&x.inverse())),
                _ => false,
            })
            .expect("the coset Mx exists") as u32;
        // Δ = ω1 under the image of M = ⟨c, h⟩.
        let m_images: Vec<Permutation> = act.parent_generator_map[1..=2]
            .iter()
            .map(|(_, q)| q.clone())
            .collect();
        let mut delta = crate::group::orbit_of(&m_images, act.degree(), omega1);
        delta.sort_unstable();
        Some((act, delta))
    } else {
        None
    };
    let labels = action
        .as_ref()
        .map(|(act, delta)| {
            delta
                .iter()
                .map(|&i| act.labels[i as usize].clone())
                .collect()
        })
        .unwrap_or_default();
    Ok(AffineLineOrbit {
        config: NamedConfiguration {
            id: "affine-line",
            n: r,
            k: 1,
            labels,
            expected_size: r,
            expected_induced_order: (r as u128) * (r as u128 - 1),
        },
        m,
        h,
        x,
        meet_order: r as u128 - 1,
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{k_subset_action, parent_setwise_stabilizer, uniform_partition_action};
    use crate::beautiful::is_beautiful;
    use crate::group::PermutationGroup;

    fn certify(config: &NamedConfiguration, action: &InducedAction) {
        let lam = config.indices_in(action).expect("labels lie in the domain");
        let cert = is_beautiful(&action.group, &lam)
            .unwrap_or_else(|e| panic!("{} not beautiful: {e:?}", config.id));
        assert_eq!(cert.lambda.len(), config.expected_size);
        assert_eq!(cert.induced_order, config.expected_induced_order);
    }

    #[test]
    fn fano_subset_certifies() {
        for (n, k) in [(8, 3), (9, 3), (10, 4), (11, 3)] {
            let config = fano_subset(n, k).unwrap();
            let action = k_subset_action(&PermutationGroup::symmetric(n), k).unwrap();
            certify(&config, &action);
        }
    }

    #[test]
    fn fano_subset_socle_variant() {
        let config = fano_subset(8, 3).unwrap();
        let action = k_subset_action(&PermutationGroup::symmetric(8), 3).unwrap();
        let socle_action = k_subset_action(&PermutationGroup::alternating(8), 3).unwrap();
        let lam = config.indices_in(&action).unwrap();
        let cert =
            crate::beautiful::is_s_beautiful(&action.group, &socle_action.group, &lam).unwrap();
        assert!(cert.socle_variant.is_some());
    }

    #[test]
    fn fano_subset_rejects_bad_params() {
        assert!(fano_subset(7, 3).is_err());
        assert!(fano_subset(10, 2).is_err());
    }

    #[test]
    fn fano_stabilizer_fixes_intersection_and_complement() {
        // Elements stabilizing Δ set-wise fix X = ∩δ and Y = {1..n} \ ∪δ.
        let (n, k) = (10, 4);
        let config = fano_subset(n, k).unwrap();
        let action = k_subset_action(&PermutationGroup::symmetric(n), k).unwrap();
        let lam = config.indices_in(&action).unwrap();
        let stab = parent_setwise_stabilizer(&action, &lam).unwrap();
        let x_set: Vec<u32> = (7..=(k as u32 + 3)).collect(); // 0-based {8..k+4}
        let y_set: Vec<u32> = (k as u32 + 4..n as u32).collect(); // 0-based {k+5..n}
        for g in stab.generators() {
            for set in [&x_set, &y_set] {
                let img: std::collections::BTreeSet<u32> =
                    set.iter().map(|&p| g.apply(p)).collect();
                assert_eq!(img, set.iter().copied().collect());
            }
        }
    }

    #[test]
    fn petersen_matchings_certify() {
        for n in [10, 12] {
            let config = petersen_matchings(n).unwrap();
            let action = uniform_partition_action(&PermutationGroup::symmetric(n), 2).unwrap();
            certify(&config, &action);
        }
        assert!(petersen_matchings(8).is_err());
        assert!(petersen_matchings(11).is_err());
    }

    #[test]
    fn fano_partitions_certify() {
        for (n, k) in [(8, 4), (12, 4)] {
            let config = fano_partitions(n, k).unwrap();
            let action = uniform_partition_action(&PermutationGroup::symmetric(n), k).unwrap();
            certify(&config, &action);
        }
        assert!(fano_partitions(9, 3).is_err());
    }

    #[test]
    fn three_uniform_certify() {
        for n in [6, 9, 12] {
            let config = three_uniform_partitions(n).unwrap();
            let action = uniform_partition_action(&PermutationGroup::symmetric(n), 3).unwrap();
            certify(&config, &action);
        }
        assert!(three_uniform_partitions(7).is_err());
    }

    #[test]
    fn affine_line_small_primes() {
        // r = 5: six cosets; r = 7: 120 cosets. Both materialize and certify.
        for r in [5usize, 7] {
            let orbit = affine_line_orbit(r).unwrap();
            let (action, delta) = orbit.action.as_ref().unwrap();
            assert_eq!(
                action.degree() as u128,
                factorial(r) / ((r as u128) * (r as u128 - 1))
            );
            assert_eq!(delta.len(), r);
            let cert = is_beautiful(&action.group, delta).unwrap();
            assert_eq!(cert.induced_order, (r as u128) * (r as u128 - 1));
        }
    }

    #[test]
    fn affine_line_abstract_for_11() {
        let orbit = affine_line_orbit(11).unwrap();
        assert!(orbit.action.is_none());
        assert_eq!(orbit.meet_order, 10);
        assert_eq!(orbit.m.order(), 110);
    }

    #[test]
    fn affine_line_rejects_bad_r() {
        assert!(affine_line_orbit(9).is_err());
        assert!(affine_line_orbit(4).is_err());
    }
}
