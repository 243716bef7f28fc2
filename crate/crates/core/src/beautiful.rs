//! Beautiful subsets: subsets Λ of a domain (|Λ| ≥ 5) whose set-wise
//! stabilizer induces a 2-transitive group on Λ that is a proper subgroup of
//! Alt(Λ). Such a subset forces the ambient action to be non-binary.
//!
//! The properness test is order-based: a 2-transitive induced group of order
//! below |Λ|!/2 can be neither Sym(Λ) nor Alt(Λ) (the unique subgroup of
//! order |Λ|!/2), and an abstract-isomorphism test would be wrong here — a
//! 2-transitive copy of PSL₂(5) ≅ Alt(5) acting on 6 points does qualify.

use crate::action::{ActionLabel, Restriction};
use crate::backtrack::{intersection, pair_orbit_count, BacktrackError};
use crate::group::{factorial, GroupError, PermutationGroup, ENUMERATION_GUARD};
use crate::perm::Permutation;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::collections::HashSet;
use thiserror::Error;

/// Largest |Λ| for which |Λ|!/2 fits in u128.
pub const MAX_LAMBDA: usize = 33;

#[derive(Debug, Error)]
pub enum BeautifulError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degree {0} exceeds the exhaustive-scan guard {1}")]
    DegreeOverGuard(usize, usize),
    #[error("group order {0} exceeds the enumeration guard")]
    OrderOverGuard(u128),
    #[error(transparent)]
    Backtrack(#[from] BacktrackError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The clause that failed when a subset is not beautiful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotBeautiful {
    TooSmall { size: usize },
    TooLarge { size: usize },
    NotTwoTransitive { pair_orbits: usize },
    /// Induced order ≥ |Λ|!/2, i.e. the induced group contains Alt(Λ).
    ContainsAlternating { induced_order: u128 },
}

/// Induced-group evidence for one group acting on Λ.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InducedEvidence {
    pub stabilizer_gens: Vec<Permutation>,
    pub induced_order: u128,
    pub pair_orbit_count: usize,
}

/// Certificate that Λ is beautiful: G^Λ is 2-transitive of order < |Λ|!/2.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BeautifulCertificate {
    pub lambda: Vec<u32>,
    pub stabilizer_gens: Vec<Permutation>,
    pub induced_order: u128,
    pub pair_orbit_count: usize,
    /// (|Λ|!, |Λ|!/2) recorded with the order comparison.
    pub properness: (u128, u128),
    /// Present when the certified conditions are those of the socle S^Λ.
    pub socle_variant: Option<InducedEvidence>,
}

impl BeautifulCertificate {
    /// Recomputes everything from scratch against the acting group (and the
    /// socle when a socle variant is recorded).
    pub fn validate(&self, group: &PermutationGroup, socle: Option<&PermutationGroup>) -> bool {
        match (&self.socle_variant, socle) {
            (None, None) => is_beautiful(group, &self.lambda).is_ok(),
            (Some(_), Some(s)) => is_s_beautiful(group, s, &self.lambda).is_ok(),
            _ => false,
        }
    }

    pub fn to_json(&self, labels: Option<&[ActionLabel]>) -> serde_json::Value {
        let lambda: Vec<serde_json::Value> = match labels {
            Some(ls) => self
                .lambda
                .iter()
                .map(|&i| json!(ls[i as usize].to_string()))
                .collect(),
            None => self.lambda.iter().map(|&i| json!(i)).collect(),
        };
        let mut v = json!({
            "lambda": lambda,
            "stabilizer_gens": self.stabilizer_gens.iter().map(|g| g.to_cycle_string()).collect::<Vec<_>>(),
            "induced_order": self.induced_order.to_string(),
            "pair_orbit_count": self.pair_orbit_count,
        });
        if let Some(sv) = &self.socle_variant {
            v["socle_variant"] = json!({
                "stabilizer_gens": sv.stabilizer_gens.iter().map(|g| g.to_cycle_string()).collect::<Vec<_>>(),
                "induced_order": sv.induced_order.to_string(),
                "pair_orbit_count": sv.pair_orbit_count,
            });
        }
        v
    }
}

fn check_restriction(r: &Restriction) -> Result<(usize, u128), NotBeautiful> {
    let size = r.lambda.len();
    if size < 5 {
        return Err(NotBeautiful::TooSmall { size });
    }
    if size > MAX_LAMBDA {
        return Err(NotBeautiful::TooLarge { size });
    }
    let pairs = pair_orbit_count(&r.induced);
    if pairs != 1 || size < 2 {
        return Err(NotBeautiful::NotTwoTransitive { pair_orbits: pairs });
    }
    let order = r.induced.order();
    if order >= factorial(size) / 2 {
        return Err(NotBeautiful::ContainsAlternating {
            induced_order: order,
        });
    }
    Ok((pairs, order))
}

/// Tests whether Λ is a beautiful subset for the given action group.
pub fn is_beautiful(
    group: &PermutationGroup,
    lambda: &[u32],
) -> Result<BeautifulCertificate, NotBeautiful> {
    let mut lam = lambda.to_vec();
    lam.sort_unstable();
    lam.dedup();
    if lam.len() < 5 {
        return Err(NotBeautiful::TooSmall { size: lam.len() });
    }
    let r = crate::action::restrict(group, &lam).expect("lambda validated");
    let (pairs, order) = check_restriction(&r)?;
    Ok(BeautifulCertificate {
        lambda: r.lambda.clone(),
        stabilizer_gens: r.setwise.generators().to_vec(),
        induced_order: order,
        pair_orbit_count: pairs,
        properness: (factorial(lam.len()), factorial(lam.len()) / 2),
        socle_variant: None,
    })
}

/// S-beautiful variant: the conditions are tested against the socle's
/// induced group S^Λ; the certificate carries both G's and S's evidence.
pub fn is_s_beautiful(
    group: &PermutationGroup,
    socle: &PermutationGroup,
    lambda: &[u32],
) -> Result<BeautifulCertificate, NotBeautiful> {
    assert!(
        group.contains_group(socle),
        "the socle must be a subgroup of the acting group"
    );
    let mut lam = lambda.to_vec();
    lam.sort_unstable();
    lam.dedup();
    if lam.len() < 5 {
        return Err(NotBeautiful::TooSmall { size: lam.len() });
    }
    let rs = crate::action::restrict(socle, &lam).expect("lambda validated");
    let (pairs_s, order_s) = check_restriction(&rs)?;
    let rg = crate::action::restrict(group, &lam).expect("lambda validated");
    Ok(BeautifulCertificate {
        lambda: rg.lambda.clone(),
        stabilizer_gens: rg.setwise.generators().to_vec(),
        induced_order: rg.induced.order(),
        pair_orbit_count: pair_orbit_count(&rg.induced),
        properness: (factorial(lam.len()), factorial(lam.len()) / 2),
        socle_variant: Some(InducedEvidence {
            stabilizer_gens: rs.setwise.generators().to_vec(),
            induced_order: order_s,
            pair_orbit_count: pairs_s,
        }),
    })
}

/// Complete scan over all subsets with sizes in `sizes` (clamped to
/// [5, degree]). An empty result is a universal "none exists" statement.
/// Requires degree ≤ 16 and enumerable group order.
pub fn exhaustive_beautiful_search(
    group: &PermutationGroup,
    sizes: std::ops::RangeInclusive<usize>,
) -> Result<Vec<BeautifulCertificate>, BeautifulError> {
    let n = group.degree();
    if n > 16 {
        return Err(BeautifulError::DegreeOverGuard(n, 16));
    }
    if group.order() > ENUMERATION_GUARD {
        return Err(BeautifulError::OrderOverGuard(group.order()));
    }
    let elements = group.elements(ENUMERATION_GUARD)?;
    let lo = (*sizes.start()).max(5);
    let hi = (*sizes.end()).min(n);
    let mut found = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let s = mask.count_ones() as usize;
        if s < lo || s > hi {
            continue;
        }
        // Set-wise stabilizer and point-wise kernel by element scan.
        let mut stab = 0u128;
        let mut kernel = 0u128;
        let mut pair_witness: Option<(u32, u32)> = None;
        let mut pair_images: HashSet<(u32, u32)> = HashSet::new();
        for e in &elements {
            let mut img = 0u32;
            let mut m = mask;
            while m != 0 {
                let p = m.trailing_zeros();
                img |= 1 << e.apply(p);
                m &= m - 1;
            }
            if img != mask {
                continue;
            }
            stab += 1;
            let mut fixes_all = true;
            let mut m = mask;
            while m != 0 {
                let p = m.trailing_zeros();
                if e.apply(p) != p {
                    fixes_all = false;
                    break;
                }
                m &= m - 1;
            }
            if fixes_all {
                kernel += 1;
            }
            let (a, b) = *pair_witness.get_or_insert_with(|| {
                let a = mask.trailing_zeros();
                let b = (mask & (mask - 1)).trailing_zeros();
                (a, b)
            });
            pair_images.insert((e.apply(a), e.apply(b)));
        }
        // 2-transitivity of the induced group means the images of one fixed
        // ordered pair cover all s(s−1) ordered pairs of Λ.
        if pair_images.len() != s * (s - 1) {
            continue;
        }
        if stab / kernel >= factorial(s) / 2 {
            continue;
        }
        let lambda: Vec<u32> = (0..n as u32).filter(|&p| mask & (1 << p) != 0).collect();
        let cert = is_beautiful(group, &lambda).expect("scan conditions imply beauty");
        found.push(cert);
    }
    Ok(found)
}

/// Specification of the subgroup pool used by [`orbit_beautiful_search`].
#[derive(Debug, Clone)]
pub struct PoolSpec {
    /// Number of seeded random elements sampled for cyclic subgroups.
    pub cyclic_samples: usize,
    /// Also try normalizers of the sampled cyclic subgroups.
    pub normalizers: bool,
    /// Also try ⟨a, b⟩ for sampled commuting pairs of equal prime order
    /// (elementary abelian p² subgroups).
    pub commuting_pairs: bool,
}

impl Default for PoolSpec {
    fn default() -> Self {
        PoolSpec {
            cyclic_samples: 60,
            normalizers: true,
            commuting_pairs: true,
        }
    }
}

/// Searches for a beautiful subset among orbits of pooled subgroups
/// (cyclic subgroups of sampled elements, their normalizers, and elementary
/// abelian p² subgroups from commuting sampled pairs). Sound but not
/// complete; deterministic for a fixed seed.
pub fn orbit_beautiful_search(
    group: &PermutationGroup,
    pool: &PoolSpec,
    seed: u64,
    candidate_budget: u64,
) -> Result<Option<BeautifulCertificate>, BeautifulError> {
    let n = group.degree();
    let mut sampler = group.random_elements(seed);
    let mut samples: Vec<Permutation> = Vec::new();
    for _ in 0..pool.cyclic_samples {
        let e = sampler.next_element();
        if !e.is_identity() {
            samples.push(e);
        }
    }
    let mut candidates_left = candidate_budget;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let try_subgroup = |h: &PermutationGroup,
                            candidates_left: &mut u64,
                            seen: &mut HashSet<Vec<u32>>|
     -> Option<BeautifulCertificate> {
        for rep in h.orbit_reps() {
            let orbit = h.orbit(rep).expect("in range");
            if orbit.len() < 5 || orbit.len() > MAX_LAMBDA {
                continue;
            }
            let mut lam = orbit;
            lam.sort_unstable();
            if !seen.insert(lam.clone()) {
                continue;
            }
            if *candidates_left == 0 {
                return None;
            }
            *candidates_left -= 1;
            if let Ok(cert) = is_beautiful(group, &lam) {
                return Some(cert);
            }
        }
        None
    };
    // Cyclic subgroups ⟨g^d⟩ for each sampled g and divisor d of its order.
    for g in &samples {
        let ord = g.order() as i64;
        for d in 1..=ord {
            if ord % d != 0 || g.pow(d).is_identity() {
                continue;
            }
            let h = PermutationGroup::cyclic(&g.pow(d));
            if let Some(c) = try_subgroup(&h, &mut candidates_left, &mut seen) {
                return Ok(Some(c));
            }
            if candidates_left == 0 {
                return Ok(None);
            }
        }
    }
    if pool.commuting_pairs {
        for (i, a) in samples.iter().enumerate() {
            let pa = a.order();
            if !is_prime(pa) {
                continue;
            }
            for b in samples.iter().skip(i + 1) {
                if b.order() != pa || a.compose(b) != b.compose(a) {
                    continue;
                }
                let h = match PermutationGroup::new(n, vec![a.clone(), b.clone()]) {
                    Ok(h) => h,
                    Err(_) => continue,
                };
                if h.order() != (pa as u128) * (pa as u128) {
                    continue;
                }
                if let Some(c) = try_subgroup(&h, &mut candidates_left, &mut seen) {
                    return Ok(Some(c));
                }
                if candidates_left == 0 {
                    return Ok(None);
                }
            }
        }
    }
    if pool.normalizers {
        for g in &samples {
            let h = crate::backtrack::cyclic_normalizer(group, g, 1_000_000)?;
            if h.order() == group.order() {
                continue;
            }
            if let Some(c) = try_subgroup(&h, &mut candidates_left, &mut seen) {
                return Ok(Some(c));
            }
            if candidates_left == 0 {
                return Ok(None);
            }
        }
    }
    Ok(None)
}

fn is_prime(x: u64) -> bool {
    x >= 2 && (2..x).take_while(|d| d * d <= x).all(|d| x % d != 0)
}

/// A Frobenius pair (g, h) of orders t, t−1 with K = ⟨g, h⟩ of order t(t−1),
/// intended for the beautiful-orbit construction on a coset space of M.
#[derive(Debug, Clone)]
pub struct FrobeniusCandidate {
    pub h: Permutation,
    pub g: Permutation,
    pub t: u64,
    /// Number of natural points moved by g (g fixes n − k points).
    pub k: usize,
}

impl FrobeniusCandidate {
    pub fn group(&self, degree: usize) -> Result<PermutationGroup, GroupError> {
        PermutationGroup::new(degree, vec![self.g.clone(), self.h.clone()])
    }
}

/// Outcome of [`frobenius_beautiful`].
#[derive(Debug)]
pub enum FrobeniusVerdict {
    /// Δ = ω0^K has size t and K acts on it sharply 2-transitively, so Δ is
    /// beautiful in the coset action of M (certified abstractly via
    /// K ∩ M = ⟨h⟩; t ≥ 5).
    Beautiful {
        delta_size: u64,
        k_order: u128,
        meet_order: u128,
    },
    /// The dichotomy's alternative: a nontrivial f ∈ M of order divisible by
    /// 3 fixing at least n − 2k natural points.
    ElementFAlternative { f: Permutation },
    /// M is too large to scan for the alternative.
    InconclusiveOnAlternative,
}

/// Certifies the Frobenius-orbit construction for the action of `group` on
/// the cosets of `m` (never materialized): checks the candidate invariants,
/// then either certifies Δ = ω0^K beautiful of size t via K ∩ M = ⟨h⟩, or
/// exhibits the dichotomy's alternative element f ∈ M.
pub fn frobenius_beautiful(
    group: &PermutationGroup,
    m: &PermutationGroup,
    cand: &FrobeniusCandidate,
) -> Result<FrobeniusVerdict, BeautifulError> {
    let err = |s: &str| Err(BeautifulError::Invalid(s.to_string()));
    let t = cand.t;
    if t < 5 {
        return err("t must be at least 5");
    }
    if !group.contains_group(m) {
        return err("M is not a subgroup of G");
    }
    if !m.contains(&cand.h) {
        return err("h ∉ M");
    }
    if m.contains(&cand.g) {
        return err("g ∈ M");
    }
    if !group.contains(&cand.g) || !group.contains(&cand.h) {
        return err("the candidate pair must lie in G");
    }
    if cand.g.order() != t || cand.h.order() != t - 1 {
        return err("orders of (g, h) must be (t, t−1)");
    }
    if cand.g.fixed_point_count(None) != group.degree() - cand.k {
        return err("g must fix exactly n − k natural points");
    }
    // Frobenius structure: g^h a nontrivial power of g, conjugation by
    // powers of h fixed-point-free on ⟨g⟩ \ {1}, |K| = t(t−1).
    let conj = cand.g.conjugate(&cand.h);
    let mut power = None;
    let mut acc = Permutation::identity(group.degree());
    for s in 0..t {
        if acc == conj {
            power = Some(s);
            break;
        }
        acc = acc.compose(&cand.g);
    }
    let Some(s) = power else {
        return err("g^h is not a power of g");
    };
    if s <= 1 {
        return err("conjugation by h must move g");
    }
    let mut e = 1u64;
    for i in 1..t - 1 {
        e = e * s % t;
        if e == 1 {
            return Err(BeautifulError::Invalid(format!(
                "conjugation by h^{i} fixes ⟨g⟩ pointwise; K is not Frobenius"
            )));
        }
    }
    let k_group = cand.group(group.degree())?;
    if k_group.order() != (t as u128) * (t as u128 - 1) {
        return err("|⟨g, h⟩| is not t(t−1)");
    }
    let meet = intersection(&k_group, m, ENUMERATION_GUARD, 10_000_000)?;
    if meet.order() == (t - 1) as u128 && meet.contains(&cand.h) {
        // |Δ| = |K : K ∩ M| = t and the point stabilizer of ω0 in K is ⟨h⟩,
        // so K acts sharply 2-transitively on Δ: beautiful of size t.
        return Ok(FrobeniusVerdict::Beautiful {
            delta_size: t,
            k_order: k_group.order(),
            meet_order: meet.order(),
        });
    }
    // Construction failed: look for the dichotomy's alternative inside M.
    if m.order() > ENUMERATION_GUARD {
        return Ok(FrobeniusVerdict::InconclusiveOnAlternative);
    }
    let threshold = group.degree().saturating_sub(2 * cand.k);
    for f in m.elements(ENUMERATION_GUARD)? {
        if !f.is_identity() && f.order() % 3 == 0 && f.fixed_point_count(None) >= threshold {
            return Ok(FrobeniusVerdict::ElementFAlternative { f });
        }
    }
    err("neither the beautiful orbit nor the alternative element exists")
}

/// Direct check of the two stabilizer containments for Λ = ω^H: every
/// element of C_M(H) fixes Λ point-wise, and G_Λ normalizes G_(Λ).
pub fn check_stabilizer_containments(
    group: &PermutationGroup,
    m: &PermutationGroup,
    h: &PermutationGroup,
    omega: u32,
) -> Result<(bool, bool), BeautifulError> {
    if m.order() > ENUMERATION_GUARD {
        return Err(BeautifulError::OrderOverGuard(m.order()));
    }
    if m.generators().iter().any(|e| e.apply(omega) != omega) {
        return Err(BeautifulError::Invalid(
            "M must stabilize ω (the containments are about M = G_ω)".to_string(),
        ));
    }
    let lambda = h.orbit(omega)?;
    let centralizer_in_pointwise = m
        .elements(ENUMERATION_GUARD)?
        .into_iter()
        .filter(|e| h.generators().iter().all(|x| e.compose(x) == x.compose(e)))
        .all(|e| lambda.iter().all(|&p| e.apply(p) == p));
    let setwise = crate::backtrack::setwise_stabilizer(group, &lambda);
    let pointwise = crate::backtrack::pointwise_stabilizer(group, &lambda);
    let normalized = setwise.generators().iter().all(|s| {
        pointwise
            .generators()
            .iter()
            .all(|p| pointwise.contains(&p.conjugate(s)) && pointwise.contains(&p.conjugate(&s.inverse())))
    });
    Ok((centralizer_in_pointwise, normalized))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::k_subset_action;

    fn psl27() -> PermutationGroup {
        // SL₃(2) ≅ PSL₂(7) acting 2-transitively on 7 points, order 168.
        PermutationGroup::from_cycle_strings(7, &["(1 2 3 4 5 6 7)", "(2 3)(4 7)"]).unwrap()
    }

    #[test]
    fn whole_domain_beautiful_for_psl() {
        let g = psl27();
        assert_eq!(g.order(), 168);
        let cert = is_beautiful(&g, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(cert.induced_order, 168);
        assert_eq!(cert.pair_orbit_count, 1);
        assert!(cert.validate(&g, None));
    }

    #[test]
    fn alt5_natural_not_beautiful() {
        let g = PermutationGroup::alternating(5);
        match is_beautiful(&g, &[0, 1, 2, 3, 4]) {
            Err(NotBeautiful::ContainsAlternating { induced_order: 60 }) => {}
            v => panic!("expected the alternating rejection, got {v:?}"),
        }
    }

    #[test]
    fn small_subsets_rejected() {
        let g = psl27();
        assert!(matches!(
            is_beautiful(&g, &[0, 1, 2, 3]),
            Err(NotBeautiful::TooSmall { size: 4 })
        ));
    }

    #[test]
    fn s_beautiful_matches_plain_when_socle_is_group() {
        let g = psl27();
        let lam = [0, 1, 2, 3, 4, 5, 6];
        let a = is_beautiful(&g, &lam).unwrap();
        let b = is_s_beautiful(&g, &g, &lam).unwrap();
        assert_eq!(a.induced_order, b.induced_order);
        assert!(b.socle_variant.is_some());
        assert!(b.validate(&g, Some(&g)));
    }

    #[test]
    fn exhaustive_none_for_sym5_on_pairs() {
        let action = k_subset_action(&PermutationGroup::symmetric(5), 2).unwrap();
        let found = exhaustive_beautiful_search(&action.group, 5..=10).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn exhaustive_none_for_alt6_on_pairs() {
        let action = k_subset_action(&PermutationGroup::alternating(6), 2).unwrap();
        let found = exhaustive_beautiful_search(&action.group, 5..=15).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn exhaustive_finds_whole_domain_for_psl27() {
        let g = psl27();
        let found = exhaustive_beautiful_search(&g, 5..=7).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].lambda.len(), 7);
    }

    #[test]
    fn orbit_search_agrees_with_exhaustive_on_psl27() {
        let g = psl27();
        let cert = orbit_beautiful_search(&g, &PoolSpec::default(), 7, 10_000)
            .unwrap()
            .unwrap();
        assert!(cert.validate(&g, None));
    }

    #[test]
    fn orbit_search_none_for_sym5_natural() {
        let g = PermutationGroup::symmetric(5);
        assert!(orbit_beautiful_search(&g, &PoolSpec::default(), 3, 10_000)
            .unwrap()
            .is_none());
    }

    #[test]
    fn index_two_subgroup_is_alternating() {
        // Squares generate Alt(n); any order-n!/2 subgroup has index 2, is
        // normal, contains all squares, hence equals Alt(n). Verified for
        // the sizes the properness test depends on.
        for n in [5usize, 6] {
            let sym = PermutationGroup::symmetric(n);
            let squares: Vec<Permutation> = sym
                .elements(ENUMERATION_GUARD)
                .unwrap()
                .iter()
                .map(|e| e.compose(e))
                .collect();
            let gen = crate::backtrack::group_from_elements(n, squares);
            assert_eq!(gen.order(), factorial(n) / 2);
            assert!(PermutationGroup::alternating(n).contains_group(&gen));
        }
    }

    #[test]
    fn two_generated_order60_subgroups_of_sym5_are_alt5() {
        let sym = PermutationGroup::symmetric(5);
        let alt = PermutationGroup::alternating(5);
        let elements = sym.elements(ENUMERATION_GUARD).unwrap();
        for a in &elements {
            for b in &elements {
                let h = PermutationGroup::new(5, vec![a.clone(), b.clone()]).unwrap();
                if h.order() == 60 {
                    assert!(alt.contains_group(&h));
                }
            }
        }
    }

    #[test]
    fn frobenius_f20_in_sym5() {
        // K = AGL₁(5) ≤ Sym(5), M = stabilizer of point 0: K ∩ M = ⟨h⟩, so
        // the orbit of the M-coset under K is beautiful of size 5 in the
        // coset action (which here is the natural action; t = k = 5).
        let sym5 = PermutationGroup::symmetric(5);
        let m = sym5.stabilizer_of_points(&[0]);
        let g = Permutation::from_cycle_string("(1 2 3 4 5)", 5).unwrap();
        let h = Permutation::from_cycle_string("(2 3 5 4)", 5).unwrap();
        let cand = FrobeniusCandidate { h, g, t: 5, k: 5 };
        match frobenius_beautiful(&sym5, &m, &cand).unwrap() {
            FrobeniusVerdict::Beautiful {
                delta_size: 5,
                k_order: 20,
                meet_order: 4,
            } => {}
            v => panic!("expected the beautiful verdict, got {v:?}"),
        }
    }

    #[test]
    fn frobenius_rejects_g_in_m() {
        let sym5 = PermutationGroup::symmetric(5);
        let g = Permutation::from_cycle_string("(2 3 4 5 1)", 5).unwrap();
        let h = Permutation::from_cycle_string("(2 3 5 4)", 5).unwrap();
        let cand = FrobeniusCandidate { h, g, t: 5, k: 5 };
        let err = frobenius_beautiful(&sym5, &sym5, &cand).unwrap_err();
        assert!(err.to_string().contains("g ∈ M"));
    }

    #[test]
    fn stab_containments_trivial_and_pool() {
        let g = PermutationGroup::symmetric(6);
        let m = g.stabilizer_of_points(&[0]);
        let h_triv = PermutationGroup::trivial(6);
        assert_eq!(check_stabilizer_containments(&g, &m, &h_triv, 0).unwrap(), (true, true));
        let h = PermutationGroup::from_cycle_strings(6, &["(1 2 3)"]).unwrap();
        assert_eq!(check_stabilizer_containments(&g, &m, &h, 0).unwrap(), (true, true));
        let h2 = PermutationGroup::from_cycle_strings(6, &["(1 2 3 4 5)"]).unwrap();
        assert_eq!(check_stabilizer_containments(&g, &m, &h2, 0).unwrap(), (true, true));
        // ω not stabilized by M is rejected.
        assert!(check_stabilizer_containments(&g, &m, &h_triv, 2).is_err());
    }
}
