//! Property suites over randomly generated small groups: chain order versus
//! brute-force enumeration, backtracking versus brute-force oracles,
//! 2-transitivity versus the pair-orbit count, and determinism of seeded
//! search certificates.

use proptest::prelude::*;

use socle::action::k_subset_action;
use socle::backtrack::{
    is_2_transitive, pair_orbit_count, setwise_stabilizer, setwise_stabilizer_brute, transporter,
};
use socle::beautiful::{orbit_beautiful_search, PoolSpec};
use socle::binary::{witness_search, SearchStrategy};
use socle::group::ENUMERATION_GUARD;
use socle::{Permutation, PermutationGroup};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).expect("shuffled identity"))
}

fn group() -> impl Strategy<Value = PermutationGroup> {
    (4usize..8).prop_flat_map(|n| {
        prop::collection::vec(perm(n), 1..4)
            .prop_map(move |gens| PermutationGroup::new(n, gens).expect("degrees agree"))
    })
}

proptest! {
    /// Chain-computed order equals the brute-force element count.
    #[test]
    fn order_agrees_with_enumeration(g in group()) {
        let elements = g.elements(ENUMERATION_GUARD).unwrap();
        prop_assert_eq!(g.order() as usize, elements.len());
    }

    /// Backtracking set-wise stabilizer equals the brute-force filter.
    #[test]
    fn setwise_agrees_with_brute(g in group(), mask in 1u32..64) {
        let lambda: Vec<u32> = (0..g.degree() as u32)
            .filter(|&x| mask & (1 << x) != 0)
            .collect();
        prop_assume!(!lambda.is_empty());
        let fast = setwise_stabilizer(&g, &lambda);
        let brute = setwise_stabilizer_brute(&g, &lambda, ENUMERATION_GUARD).unwrap();
        prop_assert_eq!(fast.order() as usize, brute.len());
        for gen in fast.generators() {
            prop_assert!(brute.contains(gen));
        }
    }

    /// Transporter walks agree with brute-force search over all elements.
    #[test]
    fn transporter_agrees_with_brute(g in group(), seed in proptest::bits::u64::ANY) {
        let n = g.degree() as u32;
        let len = 1 + (seed % 3) as usize;
        let i: Vec<u32> = (0..len).map(|t| (seed >> (8 * t)) as u32 % n).collect();
        let j: Vec<u32> = (0..len).map(|t| (seed >> (8 * t + 4)) as u32 % n).collect();
        let found = transporter(&g, &i, &j).unwrap();
        let brute = g
            .elements(ENUMERATION_GUARD)
            .unwrap()
            .into_iter()
            .find(|e| i.iter().zip(&j) .all(|(&a, &b)| e.apply(a) == b));
        match found {
            Some(e) => {
                prop_assert!(i.iter().zip(&j).all(|(&a, &b)| e.apply(a) == b));
                prop_assert!(brute.is_some());
            }
            None => prop_assert!(brute.is_none()),
        }
    }

    /// is_2_transitive is exactly "transitive with one orbit on ordered
    /// distinct pairs".
    #[test]
    fn two_transitivity_matches_pair_orbits(g in group()) {
        let expected = g.is_transitive() && pair_orbit_count(&g) == 1;
        prop_assert_eq!(is_2_transitive(&g), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Seeded beautiful-subset searches are bit-identical across two runs
    /// with the same seed.
    #[test]
    fn seeded_search_is_deterministic(seed in 0u64..1000) {
        let act = k_subset_action(&PermutationGroup::symmetric(7), 2).unwrap();
        let run = || {
            orbit_beautiful_search(&act.group, &PoolSpec::default(), seed, 10_000)
                .map(|r| r.map(|c| serde_json::to_value(&c).unwrap()))
        };
        match (run(), run()) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(a), Err(b)) => prop_assert_eq!(a.to_string(), b.to_string()),
            _ => prop_assert!(false, "runs disagreed on success"),
        }
    }

    /// The deterministic witness search emits identical certificates across
    /// runs.
    #[test]
    fn witness_search_is_deterministic(n in 5usize..8) {
        let g = PermutationGroup::alternating(n);
        let a = witness_search(&g, SearchStrategy::TripleOrbit, u64::MAX).unwrap();
        let b = witness_search(&g, SearchStrategy::TripleOrbit, u64::MAX).unwrap();
        prop_assert_eq!(
            a.map(|c| serde_json::to_value(&c).unwrap()),
            b.map(|c| serde_json::to_value(&c).unwrap())
        );
    }
}
