//! Property-based invariants across the crate.
//!
//! Random demi-matroids are drawn directly: any function built level by
//! level that starts at zero, never decreases, and never climbs by more
//! than one per added element is the s-side of exactly one demi-matroid
//! (the t-side is forced by the complementation identity). That
//! generator covers the whole space, not just matroid-derived corners.

use proptest::prelude::*;

use weidual::demimatroid::{DemiMatroid, RankTable};
use weidual::gf::FiniteField;
use weidual::linalg::FieldMatrix;
use weidual::matroid::{min_irredundant_union, CircuitFamily, MatroidError};
use weidual::subset::{bit, card, complement, elements, full, masks_by_size, Mask};

/// Builds a monotone unit-step table over `n` elements from one raise
/// decision per subset: each subset's value sits between the forced
/// lower bound (monotonicity) and upper bound (unit steps), which
/// differ by at most one.
fn table_from_choices(n: usize, raise: &[bool]) -> Vec<u8> {
    let mut table = vec![0u8; 1 << n];
    for x in masks_by_size(n).skip(1) {
        let mut lower = 0u8;
        let mut upper = u8::MAX;
        for e in elements(x) {
            let v = table[(x & !bit(e)) as usize];
            lower = lower.max(v);
            upper = upper.min(v + 1);
        }
        table[x as usize] = if raise[x as usize] { upper } else { lower };
    }
    table
}

/// The t-table forced by the complementation identity.
fn forced_t(n: usize, s: &[u8]) -> Vec<u8> {
    let e = full(n);
    let t_e = n - s[e as usize] as usize;
    (0..1u64 << n)
        .map(|x| (t_e + s[complement(x, n) as usize] as usize - (n - card(x))) as u8)
        .collect()
}

fn demimatroid_strategy(max_n: usize) -> impl Strategy<Value = DemiMatroid> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), 1 << n),
            )
        })
        .prop_map(|(n, raise)| {
            let s = table_from_choices(n, &raise);
            let t = forced_t(n, &s);
            DemiMatroid::from_tables(n, s, t).expect("level construction satisfies the axioms")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_demimatroids_validate_and_partition(d in demimatroid_strategy(7)) {
        let report = d.verify_wei();
        prop_assert!(report.all_ok(), "violations: {:?}", report.violations());
        prop_assert!(d.singleton_check().iter().all(|b| b.satisfied));
    }

    #[test]
    fn involutions_hold(d in demimatroid_strategy(6)) {
        prop_assert_eq!(d.dual().dual(), d.clone());
        prop_assert_eq!(d.supplement().supplement(), d.clone());
        prop_assert_eq!(d.dual().supplement(), d.supplement().dual());
    }

    #[test]
    fn profile_reversal_identities_hold(d in demimatroid_strategy(6)) {
        let n = d.n();
        let k = d.k();
        let p = d.profiles();
        for i in 0..=k {
            prop_assert_eq!(p.smax[i], n - p.sigma_bar[k - i]);
            prop_assert_eq!(p.sigma[i], n - p.smax_bar[k - i]);
        }
        for j in 0..=n - k {
            prop_assert_eq!(p.tmax[j], n - p.tau_bar[n - k - j]);
            prop_assert_eq!(p.tau[j], n - p.tmax_bar[n - k - j]);
        }
    }

    #[test]
    fn supplement_exchanges_the_feature_sets(d in demimatroid_strategy(6)) {
        let sets = d.feature_sets();
        let bar = d.supplement().feature_sets();
        prop_assert_eq!(sets.s, bar.u);
        prop_assert_eq!(sets.t, bar.v);
    }

    #[test]
    fn unit_drop_lemma_holds(d in demimatroid_strategy(6)) {
        for x in 0..1u64 << d.n() {
            for e in elements(x) {
                prop_assert!(d.s(x & !bit(e)) + 1 >= d.s(x));
                prop_assert!(d.t(x & !bit(e)) + 1 >= d.t(x));
            }
        }
    }

    #[test]
    fn profiles_match_literal_definition_scans(d in demimatroid_strategy(6)) {
        let n = d.n();
        let p = d.profiles();
        for i in 0..=d.k() {
            let min_ge = (0..1u64 << n).filter(|&x| d.s(x) >= i).map(card).min();
            let min_eq = (0..1u64 << n).filter(|&x| d.s(x) == i).map(card).min();
            let max_le = (0..1u64 << n).filter(|&x| d.s(x) <= i).map(card).max();
            let max_eq = (0..1u64 << n).filter(|&x| d.s(x) == i).map(card).max();
            prop_assert_eq!(min_ge, Some(p.sigma[i]));
            prop_assert_eq!(min_eq, Some(p.sigma[i]));
            prop_assert_eq!(max_le, Some(p.smax[i]));
            prop_assert_eq!(max_eq, Some(p.smax[i]));
        }
        for j in 0..=n - d.k() {
            let min_ge = (0..1u64 << n).filter(|&x| d.t(x) >= j).map(card).min();
            prop_assert_eq!(min_ge, Some(p.tau[j]));
            let max_le = (0..1u64 << n).filter(|&x| d.t(x) <= j).map(card).max();
            prop_assert_eq!(max_le, Some(p.tmax[j]));
        }
    }
}

/// Brute-force reference for the irredundant-union search: try every
/// combination.
fn brute_min_irredundant(members: &[Mask], count: usize) -> Option<usize> {
    fn combos(members: &[Mask], count: usize, start: usize, chosen: &mut Vec<Mask>, best: &mut Option<usize>) {
        if chosen.len() == count {
            let union = chosen.iter().fold(0u64, |a, &b| a | b);
            let irredundant = chosen.iter().all(|&m| {
                let others = chosen.iter().filter(|&&o| o != m).fold(0u64, |a, &b| a | b);
                m & !others != 0
            });
            if irredundant {
                let c = card(union);
                *best = Some(best.map_or(c, |b| b.min(c)));
            }
            return;
        }
        for idx in start..members.len() {
            chosen.push(members[idx]);
            combos(members, count, idx + 1, chosen, best);
            chosen.pop();
        }
    }
    let mut best = None;
    combos(members, count, 0, &mut Vec::new(), &mut best);
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn irredundant_union_search_matches_brute_force(
        members in proptest::collection::btree_set(1u64..256, 1..10),
        count in 1usize..4,
    ) {
        let mut members: Vec<Mask> = members.into_iter().collect();
        members.sort_by_key(|&m| (card(m), m));
        let family = CircuitFamily { n: 8, members: members.clone() };
        let expected = brute_min_irredundant(&members, count);
        match min_irredundant_union(&family, count) {
            Ok(result) => {
                prop_assert_eq!(Some(result.size), expected);
                // The witness really is an irredundant family of the
                // right size.
                prop_assert_eq!(result.witness.len(), count);
                let union = result.witness.iter().fold(0u64, |a, &b| a | b);
                prop_assert_eq!(card(union), result.size);
                for &m in &result.witness {
                    let others = result
                        .witness
                        .iter()
                        .filter(|&&o| o != m)
                        .fold(0u64, |a, &b| a | b);
                    prop_assert!(m & !others != 0);
                }
            }
            Err(MatroidError::Infeasible { .. }) => prop_assert_eq!(expected, None),
            Err(other) => prop_assert!(false, "unexpected error: {other}"),
        }
    }

    #[test]
    fn field_matrix_rank_nullity_and_annihilation(
        q_pick in 0usize..3,
        rows in 1usize..5,
        cols in 1usize..6,
        seed in any::<u64>(),
    ) {
        let (p, m) = [(2, 1), (3, 1), (2, 2)][q_pick];
        let field = FiniteField::new(p, m).unwrap();
        let q = field.q() as u64;
        // Cheap deterministic fill from the seed.
        let mut state = seed | 1;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % q
        };
        let data: Vec<Vec<u64>> = (0..rows).map(|_| (0..cols).map(|_| next()).collect()).collect();
        let matrix = FieldMatrix::from_rows(field, &data).unwrap();
        let ns = matrix.nullspace();
        prop_assert_eq!(matrix.rank() + ns.rows(), cols);
        let prod = matrix.matmul(&ns.transpose());
        for r in 0..prod.rows() {
            prop_assert!(prod.row(r).iter().all(|&v| v == 0));
        }
        // Column-subset rank is monotone with unit steps.
        for x in 0..1u64 << cols {
            let base = matrix.column_rank_of_subset(x);
            for e in 0..cols {
                if x & bit(e) == 0 {
                    let up = matrix.column_rank_of_subset(x | bit(e));
                    prop_assert!(up == base || up == base + 1);
                }
            }
        }
    }

    #[test]
    fn rank_tables_survive_document_round_trips(d in demimatroid_strategy(5)) {
        let doc = weidual::doc::demimatroid_document(&d);
        let json = serde_json::to_string(&doc).unwrap();
        let parsed = weidual::doc::InputDocument::parse(&json).unwrap();
        let weidual::doc::Artifact::DemiMatroid(back) = parsed.build().unwrap() else {
            panic!("expected a demi-matroid");
        };
        prop_assert_eq!(back.s_table(), d.s_table());
        prop_assert_eq!(back.t_table(), d.t_table());
    }
}

/// The level construction really needs no extra validation: build a few
/// hundred tables and let the constructor check the axioms.
#[test]
fn level_construction_always_validates() {
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for n in 0..=6 {
        for _ in 0..40 {
            let raise: Vec<bool> = (0..1usize << n).map(|_| next() & 1 == 1).collect();
            let s = table_from_choices(n, &raise);
            let t = forced_t(n, &s);
            DemiMatroid::new(
                weidual::GroundSet::new(n).unwrap(),
                RankTable::from_values(s),
                RankTable::from_values(t),
            )
            .expect("axioms hold by construction");
        }
    }
}
