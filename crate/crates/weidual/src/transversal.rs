//! Transversal set systems: matching-based rank, the transversal
//! matroid, plugs, and the m/p sequences with their partition theorem.
//!
//! A system is a multiset of subsets `A_1, .., A_m` of the ground set;
//! duplicates are kept as distinct matching targets. The rank of `X`
//! is the size of a maximum matching between the elements of `X` and
//! the sets, with `e` adjacent to `A_j` iff `e ∈ A_j` — equivalently,
//! the size of the largest partial transversal inside `X`. Elements
//! covered by no set are loops and show up as singleton plugs.

use std::sync::Arc;

use thiserror::Error;

use crate::demimatroid::{check_partition, PartitionCheck};
use crate::matroid::{min_irredundant_union, CircuitFamily, Matroid, MatroidError, RankOracle};
use crate::subset::{bit, card, elements, GroundSet, GroundSetError, Mask, DEFAULT_ENUM_CAP};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransversalError {
    #[error("set {index} reaches outside the {n}-element ground set")]
    SetOutOfRange { index: usize, n: usize },
    #[error("m/p routes disagree: p_{index} is {via_profile} via the profile but {via_unions} via irredundant unions")]
    RouteMismatch {
        index: usize,
        via_profile: usize,
        via_unions: usize,
    },
    #[error("enumerated plug {plug:#x} fails the definitional predicate")]
    PlugPredicate { plug: Mask },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Ground(#[from] GroundSetError),
}

/// A multiset of subsets of a ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground: GroundSet,
    sets: Vec<Mask>,
}

impl SetSystem {
    pub fn new(ground: GroundSet, sets: Vec<Mask>) -> Result<SetSystem, TransversalError> {
        let full = ground.full();
        for (index, &s) in sets.iter().enumerate() {
            if s & !full != 0 {
                return Err(TransversalError::SetOutOfRange {
                    index,
                    n: ground.size(),
                });
            }
        }
        Ok(SetSystem { ground, sets })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ground.size()
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn sets(&self) -> &[Mask] {
        &self.sets
    }

    /// Maximum matching between the elements of `x` and the sets, by
    /// augmenting paths over elements in ascending order.
    pub fn rank(&self, x: Mask) -> usize {
        let m = self.sets.len();
        let mut owner: Vec<Option<usize>> = vec![None; m];
        let mut size = 0usize;
        for e in elements(x) {
            let mut seen = vec![false; m];
            if self.augment(e, x, &mut seen, &mut owner) {
                size += 1;
            }
        }
        size
    }

    fn augment(&self, e: usize, x: Mask, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for (j, &set) in self.sets.iter().enumerate() {
            if seen[j] || set & bit(e) == 0 {
                continue;
            }
            seen[j] = true;
            let free = match owner[j] {
                None => true,
                Some(prev) => self.augment(prev, x, seen, owner),
            };
            if free {
                owner[j] = Some(e);
                return true;
            }
        }
        false
    }

    /// Reference rank: brute force over all element-to-set assignments.
    /// Exponential in the number of sets; the independent check for
    /// [`SetSystem::rank`].
    pub fn exhaustive_rank(&self, x: Mask) -> usize {
        fn rec(sets: &[Mask], j: usize, x: Mask, used: Mask) -> usize {
            if j == sets.len() {
                return 0;
            }
            let mut best = rec(sets, j + 1, x, used);
            for e in elements(sets[j] & x & !used) {
                best = best.max(1 + rec(sets, j + 1, x, used | bit(e)));
            }
            best
        }
        rec(&self.sets, 0, x, 0)
    }

    /// True when `x` is a partial transversal (an independent set of
    /// the transversal matroid).
    pub fn is_partial_transversal(&self, x: Mask) -> bool {
        self.rank(x) == card(x)
    }

    /// The transversal matroid M[A].
    pub fn matroid(&self) -> Matroid {
        Matroid::from_oracle(
            self.ground.clone(),
            Arc::new(TransversalOracle { system: self.clone() }),
        )
    }

    /// Plugs: subsets that are not partial transversals although every
    /// single-element deletion is — exactly the circuits of M[A]. Each
    /// enumerated circuit is re-checked against that definitional
    /// predicate.
    pub fn plugs(&self) -> Result<CircuitFamily, TransversalError> {
        self.plugs_capped(DEFAULT_ENUM_CAP)
    }

    pub fn plugs_capped(&self, cap: usize) -> Result<CircuitFamily, TransversalError> {
        let family = self.matroid().circuits_capped(cap)?;
        for &plug in &family.members {
            let minimal_non_transversal = !self.is_partial_transversal(plug)
                && elements(plug).all(|e| self.is_partial_transversal(plug & !bit(e)));
            if !minimal_non_transversal {
                return Err(TransversalError::PlugPredicate { plug });
            }
        }
        Ok(family)
    }

    /// The sequences `m_0, .., m_{k-1}` (largest set whose biggest
    /// partial transversal has size i) and `p_1, .., p_{n-k}` (minimum
    /// size of a union of j irredundant plugs), with the induced sets
    /// `U_A = {m_i + 1}` and `V_A = {p_j}` and their partition verdict.
    ///
    /// `p_j` is computed by irredundant-union search and checked
    /// against the dual-profile route `p_j = n - f*_{(n-k)-j}`.
    pub fn mp_sequences(&self) -> Result<TransversalSequences, TransversalError> {
        self.mp_sequences_capped(DEFAULT_ENUM_CAP)
    }

    pub fn mp_sequences_capped(&self, cap: usize) -> Result<TransversalSequences, TransversalError> {
        let matroid = self.matroid();
        let n = self.n();
        let k = matroid.k();
        let profile = matroid.f_coefficients_capped(cap)?;
        let m: Vec<usize> = profile.f[..k].to_vec();
        let plugs = self.plugs_capped(cap)?;
        let mut p = Vec::with_capacity(n - k);
        for j in 1..=n - k {
            let via_unions = min_irredundant_union(&plugs, j)?.size;
            let via_profile = n - profile.fstar[(n - k) - j];
            if via_unions != via_profile {
                return Err(TransversalError::RouteMismatch {
                    index: j,
                    via_profile,
                    via_unions,
                });
            }
            p.push(via_unions);
        }
        let u: Vec<usize> = m.iter().map(|&mi| mi + 1).collect();
        let v: Vec<usize> = p.clone();
        let check = check_partition(n, &u, &v);
        Ok(TransversalSequences { m, p, u, v, check })
    }

    /// A note attached to the one published worked system whose listed
    /// U/V values exhaustive recomputation does not reproduce. The
    /// computed sequences are the ground truth; the note documents the
    /// mismatch for anyone comparing against the printed table.
    pub fn published_discrepancy(&self) -> Option<SequenceDiscrepancy> {
        if self.n() != 5 {
            return None;
        }
        let mut sets = self.sets.clone();
        sets.sort_unstable();
        if sets == [0b00011, 0b00101, 0b01000, 0b01000] {
            Some(SequenceDiscrepancy {
                published_u: vec![2, 4, 5],
                published_v: vec![1, 3],
            })
        } else {
            None
        }
    }
}

struct TransversalOracle {
    system: SetSystem,
}

impl RankOracle for TransversalOracle {
    fn rank(&self, subset: Mask) -> usize {
        self.system.rank(subset)
    }
}

/// The m/p sequences and the sets they induce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalSequences {
    pub m: Vec<usize>,
    pub p: Vec<usize>,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub check: PartitionCheck,
}

/// Published U/V values that disagree with exhaustive recomputation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceDiscrepancy {
    pub published_u: Vec<usize>,
    pub published_v: Vec<usize>,
}

impl SequenceDiscrepancy {
    /// One-line warning for reports.
    pub fn warning(&self, computed_u: &[usize], computed_v: &[usize]) -> String {
        format!(
            "a published table lists U = {:?}, V = {:?} for this system; exhaustive matching \
             recomputation gives U = {:?}, V = {:?}, which this report uses",
            self.published_u, self.published_v, computed_u, computed_v
        )
    }
}
