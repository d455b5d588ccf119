//! Acceptance suite: one test per criterion, each printing a pass line
//! with its runtime and asserting the stated budget.
//!
//! Expected values are frozen from independent reference computations
//! (literal-definition scans, brute-force matching, direct subcode
//! enumeration); the tests assert exact integer equality throughout.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use weidual::code::{subcode_minimum_weights, LinearCode, OracleMode};
use weidual::corpus::{random_code, random_multigraph, random_setsystem};
use weidual::demimatroid::DemiMatroid;
use weidual::gf::FiniteField;
use weidual::graph::{klm_closed_form, km_closed_form, Multigraph};
use weidual::matroid::{min_irredundant_union, vamos, Matroid};
use weidual::subset::{bit, card, complement, elements, full, GroundSet};
use weidual::transversal::SetSystem;

fn finish(criterion: usize, label: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!(
        "acceptance criterion {criterion} ({label}): PASS in {:.2} ms",
        elapsed.as_secs_f64() * 1e3
    );
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

/// The t-table forced from an s-table by the complementation identity.
fn forced_t(n: usize, s: &[u8]) -> Vec<u8> {
    let e = full(n);
    let t_e = n - s[e as usize] as usize;
    (0..1u64 << n)
        .map(|x| (t_e + s[complement(x, n) as usize] as usize - (n - card(x))) as u8)
        .collect()
}

#[test]
fn criterion_1_worked_demimatroid_example() {
    let started = Instant::now();
    let mut s = vec![0u8; 8];
    s[7] = 1;
    let t = forced_t(3, &s);
    let d = DemiMatroid::from_tables(3, s, t).expect("axioms hold");
    assert_eq!(d.k(), 1);
    let report = d.verify_wei();
    assert_eq!(report.sets.s, vec![1]);
    assert_eq!(report.sets.t, vec![2, 3]);
    assert_eq!(report.sets.u, vec![3]);
    assert_eq!(report.sets.v, vec![1, 2]);
    assert!(report.st.ok && report.uv.ok);
    finish(1, "worked demi-matroid example", started, Duration::from_millis(1));
}

#[test]
fn criterion_2_vamos_matroid() {
    let started = Instant::now();
    let v = vamos();
    let st = v.st_sets().expect("eight elements fit every cap");
    assert_eq!(st.profile.f[..4], [0, 1, 2, 4]);
    assert_eq!(st.profile.fstar[..4], [0, 1, 2, 4]);
    assert_eq!(st.profile.f, st.profile.fstar);
    assert_eq!(st.s, vec![4, 6, 7, 8]);
    assert_eq!(st.t, vec![1, 2, 3, 5]);
    assert!(st.check.ok);
    finish(2, "self-dual eight-element matroid", started, Duration::from_millis(50));
}

#[test]
fn criterion_3_binary_code_example() {
    let started = Instant::now();
    let field = FiniteField::new(2, 1).unwrap();
    let code = LinearCode::new(
        field,
        &[
            vec![1, 0, 1, 0, 0],
            vec![0, 1, 1, 0, 0],
            vec![0, 0, 0, 1, 1],
        ],
    )
    .unwrap();

    // Route one: the demi-matroid profile.
    let demi = code.demimatroid().unwrap();
    let profile = demi.profiles();
    let (n, k) = (code.n(), code.k());
    let d_profile: Vec<usize> = (1..=k).map(|i| n - profile.smax[k - i]).collect();
    let d_perp_profile: Vec<usize> = (1..=n - k).map(|j| n - profile.tmax[n - k - j]).collect();
    assert_eq!(d_profile, vec![2, 3, 5]);
    assert_eq!(d_perp_profile, vec![2, 5]);

    // Route two: direct subcode enumeration, forced on.
    let d_direct = subcode_minimum_weights(&code, OracleMode::Force).expect("small enough");
    let d_perp_direct =
        subcode_minimum_weights(&code.dual(), OracleMode::Force).expect("small enough");
    assert_eq!(d_direct, d_profile);
    assert_eq!(d_perp_direct, d_perp_profile);

    let h = code.hierarchy().unwrap();
    assert!(h.oracle_checked);
    assert_eq!(h.u, vec![2, 3, 5]);
    assert_eq!(h.v, vec![1, 4]);
    assert!(h.check.ok);
    finish(3, "binary [5,3] code hierarchy", started, Duration::from_millis(10));
}

#[test]
fn criterion_4_five_edge_graph() {
    let started = Instant::now();
    let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
    let m = g.cycle_matroid();
    let (n, k) = (g.edge_count(), m.k());

    // Route one: the f-profile.
    let profile = m.f_coefficients().unwrap();
    let b_profile: Vec<usize> = (1..=k).map(|i| n - profile.f[k - i]).collect();
    let c_profile: Vec<usize> = (1..=n - k).map(|j| n - profile.fstar[n - k - j]).collect();
    assert_eq!(b_profile, vec![2, 4, 5]);
    assert_eq!(c_profile, vec![3, 5]);

    // Route two: irredundant-union search over bonds and cycles.
    let bonds = g.bonds().unwrap();
    let cycles = g.cycles().unwrap();
    let b_unions: Vec<usize> = (1..=k)
        .map(|i| min_irredundant_union(&bonds, i).unwrap().size)
        .collect();
    let c_unions: Vec<usize> = (1..=n - k)
        .map(|j| min_irredundant_union(&cycles, j).unwrap().size)
        .collect();
    assert_eq!(b_unions, b_profile);
    assert_eq!(c_unions, c_profile);

    let seqs = g.bc_sequences().unwrap();
    assert_eq!(seqs.b, vec![2, 4, 5]);
    assert_eq!(seqs.c, vec![3, 5]);
    assert!(seqs.check.ok);
    finish(4, "five-edge graph sequences", started, Duration::from_millis(10));
}

#[test]
fn criterion_5_closed_form_families() {
    let started = Instant::now();
    for m in 3..=6 {
        let seqs = Multigraph::complete(m).bc_sequences().unwrap();
        let (b, c) = km_closed_form(m).unwrap();
        assert_eq!(seqs.b, b, "complete graph on {m} vertices, b");
        assert_eq!(seqs.c, c, "complete graph on {m} vertices, c");
        assert!(seqs.check.ok);
    }
    for l in 1..=12 {
        for m in 1..=l {
            if l * m > 12 {
                continue;
            }
            let seqs = Multigraph::complete_bipartite(l, m).bc_sequences().unwrap();
            let (b, c) = klm_closed_form(l, m).unwrap();
            assert_eq!(seqs.b, b, "complete bipartite {l}x{m}, b");
            assert_eq!(seqs.c, c, "complete bipartite {l}x{m}, c");
            assert!(seqs.check.ok);
        }
    }
    finish(5, "closed-form graph families", started, Duration::from_secs(30));
}

/// Every lemma and theorem checked on one demi-matroid, exactly.
fn full_battery(d: &DemiMatroid, context: &str) {
    let n = d.n();
    let k = d.k();
    let p = d.profiles();

    // Unit-drop lemma.
    for x in 0..1u64 << n {
        for e in elements(x) {
            assert!(d.s(x & !bit(e)) + 1 >= d.s(x), "{context}: unit drop (s)");
            assert!(d.t(x & !bit(e)) + 1 >= d.t(x), "{context}: unit drop (t)");
        }
    }

    // Equivalent min/max characterizations by literal scans.
    for i in 0..=k {
        let min_ge = (0..1u64 << n).filter(|&x| d.s(x) >= i).map(card).min();
        let min_eq = (0..1u64 << n).filter(|&x| d.s(x) == i).map(card).min();
        let max_le = (0..1u64 << n).filter(|&x| d.s(x) <= i).map(card).max();
        let max_eq = (0..1u64 << n).filter(|&x| d.s(x) == i).map(card).max();
        assert_eq!(min_ge, Some(p.sigma[i]), "{context}: sigma_{i}");
        assert_eq!(min_eq, Some(p.sigma[i]), "{context}: sigma_{i} (exact form)");
        assert_eq!(max_le, Some(p.smax[i]), "{context}: smax_{i}");
        assert_eq!(max_eq, Some(p.smax[i]), "{context}: smax_{i} (exact form)");
    }
    for j in 0..=n - k {
        let min_ge = (0..1u64 << n).filter(|&x| d.t(x) >= j).map(card).min();
        let min_eq = (0..1u64 << n).filter(|&x| d.t(x) == j).map(card).min();
        let max_le = (0..1u64 << n).filter(|&x| d.t(x) <= j).map(card).max();
        let max_eq = (0..1u64 << n).filter(|&x| d.t(x) == j).map(card).max();
        assert_eq!(min_ge, Some(p.tau[j]), "{context}: tau_{j}");
        assert_eq!(min_eq, Some(p.tau[j]), "{context}: tau_{j} (exact form)");
        assert_eq!(max_le, Some(p.tmax[j]), "{context}: tmax_{j}");
        assert_eq!(max_eq, Some(p.tmax[j]), "{context}: tmax_{j} (exact form)");
    }

    // Strict monotonicity chains with their endpoints.
    assert_eq!(p.sigma[0], 0, "{context}");
    assert_eq!(p.tau[0], 0, "{context}");
    assert!(p.sigma.windows(2).all(|w| w[0] < w[1]), "{context}: sigma strict");
    assert!(p.tau.windows(2).all(|w| w[0] < w[1]), "{context}: tau strict");
    assert!(p.smax.windows(2).all(|w| w[0] < w[1]), "{context}: smax strict");
    assert!(p.tmax.windows(2).all(|w| w[0] < w[1]), "{context}: tmax strict");
    assert_eq!(p.smax[k], n, "{context}: smax endpoint");
    assert_eq!(p.tmax[n - k], n, "{context}: tmax endpoint");

    // Singleton-type bounds.
    assert!(
        d.singleton_check().iter().all(|b| b.satisfied),
        "{context}: singleton bounds"
    );

    // Involution identities.
    let dual = d.dual();
    let supp = d.supplement();
    assert_eq!(&dual.dual(), d, "{context}: dual involution");
    assert_eq!(&supp.supplement(), d, "{context}: supplement involution");
    assert_eq!(
        dual.supplement(),
        supp.dual(),
        "{context}: dual/supplement commutation"
    );

    // Index-reversal identities between plain and barred profiles.
    for i in 0..=k {
        assert_eq!(p.smax[i], n - p.sigma_bar[k - i], "{context}: smax reversal");
        assert_eq!(p.sigma[i], n - p.smax_bar[k - i], "{context}: sigma reversal");
    }
    for j in 0..=n - k {
        assert_eq!(p.tmax[j], n - p.tau_bar[n - k - j], "{context}: tmax reversal");
        assert_eq!(p.tau[j], n - p.tmax_bar[n - k - j], "{context}: tau reversal");
    }

    // Feature sets swap under the supplement.
    let sets = d.feature_sets();
    let bar_sets = supp.feature_sets();
    assert_eq!(sets.s, bar_sets.u, "{context}: S = U-bar");
    assert_eq!(sets.t, bar_sets.v, "{context}: T = V-bar");

    // Both partition theorems.
    let report = d.verify_wei();
    assert!(
        report.all_ok(),
        "{context}: partition violations {:?}",
        report.violations()
    );
}

#[test]
fn criterion_6_randomized_property_suite() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut bases: Vec<(String, DemiMatroid)> = Vec::new();

    for (p, m) in [(2u64, 1u32), (3, 1), (2, 2)] {
        let field = FiniteField::new(p, m).unwrap();
        for i in 0..60 {
            let code = random_code(&mut rng, field.clone(), 10);
            let label = format!("code GF({}^{}) #{i}", p, m);
            bases.push((label, code.demimatroid().unwrap()));
        }
    }
    for i in 0..60 {
        let graph = random_multigraph(&mut rng, 10);
        let label = format!("graph #{i}");
        bases.push((label, graph.cycle_matroid().to_demimatroid().unwrap()));
    }
    for i in 0..60 {
        let system = random_setsystem(&mut rng, 8, 6);
        let label = format!("setsystem #{i}");
        bases.push((label, system.matroid().to_demimatroid().unwrap()));
    }
    assert_eq!(bases.len(), 300);

    let mut instances = 0usize;
    for (label, d) in &bases {
        // Close the corpus under the two involutions.
        let variants = [
            (format!("{label}"), d.clone()),
            (format!("{label} dual"), d.dual()),
            (format!("{label} supplement"), d.supplement()),
            (format!("{label} dual supplement"), d.dual().supplement()),
        ];
        for (context, variant) in variants {
            full_battery(&variant, &context);
            instances += 1;
        }
    }
    assert!(instances >= 500, "only {instances} instances checked");
    println!("criterion 6 corpus: {instances} demi-matroid instances");
    finish(6, "randomized property suite", started, Duration::from_secs(60));
}

#[test]
fn criterion_7_oracle_equivalences() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut corpus_matroids: Vec<(String, Matroid)> = Vec::new();

    // Matching rank vs exhaustive assignment search.
    for i in 0..50 {
        let system = random_setsystem(&mut rng, 8, 6);
        for x in 0..1u64 << system.n() {
            assert_eq!(
                system.rank(x),
                system.exhaustive_rank(x),
                "system #{i}, subset {x:#b}"
            );
        }
        corpus_matroids.push((format!("setsystem #{i}"), system.matroid()));
    }

    // Dual code rank vs dual matroid rank on every subset.
    let fields = [
        FiniteField::new(2, 1).unwrap(),
        FiniteField::new(3, 1).unwrap(),
        FiniteField::new(2, 2).unwrap(),
    ];
    for i in 0..50 {
        let field = fields[i % fields.len()].clone();
        let code = random_code(&mut rng, field, 10);
        let dual_code = code.dual();
        let dual_matroid = code.matroid().dual();
        for x in 0..1u64 << code.n() {
            assert_eq!(
                dual_code.rank_on(x),
                dual_matroid.rank(x),
                "code #{i}, subset {x:#b}"
            );
        }
        corpus_matroids.push((format!("code #{i}"), code.matroid()));
    }

    for i in 0..40 {
        let graph = random_multigraph(&mut rng, 10);
        corpus_matroids.push((format!("graph #{i}"), graph.cycle_matroid()));
    }

    // Irredundant-union minima against the f-profiles, both sides.
    for (label, matroid) in &corpus_matroids {
        let n = matroid.n();
        let k = matroid.k();
        let profile = matroid.f_coefficients().unwrap();
        let cocircuits = matroid.cocircuits().unwrap();
        for i in 1..=k {
            let got = min_irredundant_union(&cocircuits, i).unwrap().size;
            assert_eq!(got, n - profile.f[k - i], "{label}: cocircuit union {i}");
        }
        let circuits = matroid.circuits().unwrap();
        for j in 1..=n - k {
            let got = min_irredundant_union(&circuits, j).unwrap().size;
            assert_eq!(got, n - profile.fstar[n - k - j], "{label}: circuit union {j}");
        }
    }
    finish(7, "oracle equivalences", started, Duration::from_secs(60));
}

#[test]
fn criterion_8_documented_transversal_discrepancy() {
    let started = Instant::now();
    let ground = GroundSet::with_labels(
        ["a", "b", "c", "d", "e"].iter().map(|s| s.to_string()).collect(),
    )
    .unwrap();
    let system = SetSystem::new(ground, vec![0b00011, 0b00101, 0b01000, 0b01000]).unwrap();

    // The brute-force matching oracle is the ground truth for the rank
    // function.
    for x in 0..1u64 << 5 {
        assert_eq!(system.rank(x), system.exhaustive_rank(x));
    }

    let seqs = system.mp_sequences().unwrap();
    assert_eq!(seqs.u, vec![2, 3, 5]);
    assert_eq!(seqs.v, vec![1, 4]);
    assert!(seqs.check.ok);

    let note = system
        .published_discrepancy()
        .expect("the known system carries a discrepancy note");
    assert_eq!(note.published_u, vec![2, 4, 5]);
    assert_eq!(note.published_v, vec![1, 3]);
    let warning = note.warning(&seqs.u, &seqs.v);
    assert!(warning.contains("[2, 4, 5]") && warning.contains("[1, 3]"));
    assert!(warning.contains("[2, 3, 5]") && warning.contains("[1, 4]"));
    println!("criterion 8 warning: {warning}");
    finish(8, "documented transversal discrepancy", started, Duration::from_secs(5));
}
