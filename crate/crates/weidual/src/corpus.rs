//! Seeded random instance generators for cross-checking the theorems
//! on bulk corpora. Every generator takes the RNG explicitly so runs
//! are reproducible from a single seed.

use std::sync::Arc;

use rand::Rng;

use crate::code::LinearCode;
use crate::gf::FiniteField;
use crate::graph::Multigraph;
use crate::subset::{GroundSet, Mask};
use crate::transversal::SetSystem;

/// Random linear code over `field` with `1 <= n <= max_n`; the row
/// count is drawn up to `n`, so the reduced dimension lands anywhere in
/// `0..=n`.
pub fn random_code<R: Rng + ?Sized>(
    rng: &mut R,
    field: Arc<FiniteField>,
    max_n: usize,
) -> LinearCode {
    let n = rng.gen_range(1..=max_n);
    let rows = rng.gen_range(0..=n);
    let q = field.q() as u64;
    let data: Vec<Vec<u64>> = (0..rows)
        .map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect())
        .collect();
    LinearCode::new(field, &data).expect("generated entries lie in the field")
}

/// Random multigraph with up to `max_edges` edges on 1..=6 vertices;
/// loops and parallel edges arise naturally.
pub fn random_multigraph<R: Rng + ?Sized>(rng: &mut R, max_edges: usize) -> Multigraph {
    let vertices = rng.gen_range(1..=6);
    let edges = (0..rng.gen_range(0..=max_edges))
        .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
        .collect();
    Multigraph::new(vertices, edges).expect("endpoints drawn within range")
}

/// Random set system on `1 <= n <= max_n` elements with up to
/// `max_sets` member sets; duplicates and uncovered elements arise
/// naturally.
pub fn random_setsystem<R: Rng + ?Sized>(rng: &mut R, max_n: usize, max_sets: usize) -> SetSystem {
    let n = rng.gen_range(1..=max_n);
    let sets: Vec<Mask> = (0..rng.gen_range(0..=max_sets))
        .map(|_| rng.gen_range(0..1u64 << n))
        .collect();
    SetSystem::new(GroundSet::new(n).expect("n is small"), sets)
        .expect("sets drawn inside the ground set")
}
