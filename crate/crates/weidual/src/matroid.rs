//! Matroids behind pluggable rank oracles: explicit bases, uniform,
//! vector (field-matrix columns), graphic and transversal backings live
//! in their own modules and plug in through [`RankOracle`].
//!
//! Alongside the oracles this module carries the subset machinery the
//! rest of the crate is built on: dual rank, conversion to
//! demi-matroids, the maximal-set coefficients `f_i` / `f*_j` and the
//! S/T partition they induce, circuit and cocircuit enumeration,
//! minimum irredundant unions of circuit families, closure, and perfect
//! matroid design detection.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::demimatroid::{check_partition, DemiMatroid, DemiMatroidError, PartitionCheck, RankTable};
use crate::subset::{
    bit, card, complement, elements, masks_of_size, GroundSet, GroundSetError, Mask,
    DEFAULT_ENUM_CAP,
};

/// A rank evaluator on subsets of a fixed ground set.
///
/// Required behaviour: `rank(∅) = 0` and a unit increase
/// `rank(X ∪ {x}) ∈ {rank(X), rank(X)+1}`. Submodularity is not
/// assumed by the demi-matroid constructions; basis-backed oracles
/// satisfy it anyway.
pub trait RankOracle: Send + Sync {
    fn rank(&self, subset: Mask) -> usize;
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("a matroid needs at least one basis")]
    EmptyBases,
    #[error("bases must share one cardinality: found {0} and {1}")]
    MixedCardinality(usize, usize),
    #[error("basis exchange fails: {basis:#x} and {other:#x} at element {element}")]
    ExchangeViolation {
        basis: Mask,
        other: Mask,
        element: usize,
    },
    #[error("rank {k} exceeds ground size {n}")]
    RankTooLarge { n: usize, k: usize },
    #[error("{n} elements exceed the exhaustive-scan cap {cap}; raise the cap to proceed")]
    CapExceeded { n: usize, cap: usize },
    #[error("no irredundant family of {count} members exists")]
    Infeasible { count: usize },
    #[error("not a perfect matroid design")]
    NotPmd,
    #[error(transparent)]
    Ground(#[from] GroundSetError),
    #[error(transparent)]
    Demi(#[from] DemiMatroidError),
}

struct BasesOracle {
    bases: Vec<Mask>,
}

impl RankOracle for BasesOracle {
    fn rank(&self, subset: Mask) -> usize {
        self.bases.iter().map(|&b| card(b & subset)).max().unwrap_or(0)
    }
}

struct UniformOracle {
    k: usize,
}

impl RankOracle for UniformOracle {
    fn rank(&self, subset: Mask) -> usize {
        card(subset).min(self.k)
    }
}

struct DualOracle {
    inner: Arc<dyn RankOracle>,
    n: usize,
    inner_rank: usize,
}

impl RankOracle for DualOracle {
    fn rank(&self, subset: Mask) -> usize {
        // rho*(X) = |X| - rho(E) + rho(E - X)
        (card(subset) + self.inner.rank(complement(subset, self.n)))
            .checked_sub(self.inner_rank)
            .expect("inner oracle must be unit-increasing")
    }
}

/// A matroid: a ground set plus a rank oracle, with `k = rank(E)`
/// cached.
#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    oracle: Arc<dyn RankOracle>,
    k: usize,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n())
            .field("k", &self.k)
            .finish()
    }
}

impl Matroid {
    pub fn from_oracle(ground: GroundSet, oracle: Arc<dyn RankOracle>) -> Matroid {
        let k = oracle.rank(ground.full());
        Matroid { ground, oracle, k }
    }

    /// Matroid given by its bases: `rank(X) = max |X ∩ B|` over bases
    /// `B`. The basis list is trusted; see
    /// [`Matroid::from_bases_verified`] for the checked variant.
    pub fn from_bases(ground: GroundSet, bases: Vec<Mask>) -> Result<Matroid, MatroidError> {
        if bases.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        let c = card(bases[0]);
        for &b in &bases[1..] {
            if card(b) != c {
                return Err(MatroidError::MixedCardinality(c, card(b)));
            }
        }
        Ok(Matroid::from_oracle(ground, Arc::new(BasesOracle { bases })))
    }

    /// As [`Matroid::from_bases`], additionally verifying the basis
    /// exchange axiom. Quadratic in the number of bases; meant for
    /// small ground sets.
    pub fn from_bases_verified(ground: GroundSet, bases: Vec<Mask>) -> Result<Matroid, MatroidError> {
        let mut sorted = bases.clone();
        sorted.sort_unstable();
        let is_basis = |m: Mask| sorted.binary_search(&m).is_ok();
        for &b1 in &bases {
            for &b2 in &bases {
                if b1 == b2 {
                    continue;
                }
                for x in elements(b1 & !b2) {
                    let stripped = b1 & !bit(x);
                    let found = elements(b2 & !b1).any(|y| is_basis(stripped | bit(y)));
                    if !found {
                        return Err(MatroidError::ExchangeViolation {
                            basis: b1,
                            other: b2,
                            element: x,
                        });
                    }
                }
            }
        }
        Matroid::from_bases(ground, bases)
    }

    /// The uniform matroid U_{k,n}.
    pub fn uniform(n: usize, k: usize) -> Result<Matroid, MatroidError> {
        if k > n {
            return Err(MatroidError::RankTooLarge { n, k });
        }
        Ok(Matroid::from_oracle(
            GroundSet::new(n)?,
            Arc::new(UniformOracle { k }),
        ))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ground.size()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    #[inline]
    pub fn rank(&self, subset: Mask) -> usize {
        debug_assert_eq!(subset & !self.ground.full(), 0);
        self.oracle.rank(subset)
    }

    /// The dual matroid, evaluated lazily through
    /// `rho*(X) = |X| - rho(E) + rho(E-X)`.
    pub fn dual(&self) -> Matroid {
        let n = self.n();
        Matroid {
            ground: self.ground.clone(),
            oracle: Arc::new(DualOracle {
                inner: self.oracle.clone(),
                n,
                inner_rank: self.k,
            }),
            k: n - self.k,
        }
    }

    /// Materializes the full rank table.
    pub fn rank_table(&self, cap: usize) -> Result<RankTable, MatroidError> {
        let n = self.check_cap(cap)?;
        Ok(RankTable::from_fn(n, |x| self.rank(x)))
    }

    /// The demi-matroid `(E, rho, rho*)`, validated on construction.
    pub fn to_demimatroid(&self) -> Result<DemiMatroid, MatroidError> {
        self.to_demimatroid_capped(DEFAULT_ENUM_CAP)
    }

    pub fn to_demimatroid_capped(&self, cap: usize) -> Result<DemiMatroid, MatroidError> {
        let n = self.check_cap(cap)?;
        let s = self.rank_table(cap)?;
        let k = self.k;
        let t = RankTable::from_fn(n, |x| card(x) + s.get(complement(x, n)) - k);
        Ok(DemiMatroid::new(self.ground.clone(), s, t)?)
    }

    /// The coefficients `f_i = max{|F| : rho(F) = i}` and
    /// `f*_j = max{|F| : rho*(F) = j}`, by exhaustive scan.
    pub fn f_coefficients(&self) -> Result<FlatProfile, MatroidError> {
        self.f_coefficients_capped(DEFAULT_ENUM_CAP)
    }

    pub fn f_coefficients_capped(&self, cap: usize) -> Result<FlatProfile, MatroidError> {
        let n = self.check_cap(cap)?;
        let k = self.k;
        let mut f = vec![0usize; k + 1];
        let mut fstar = vec![0usize; n - k + 1];
        for x in 0..1u64 << n {
            let c = card(x);
            let r = self.rank(x);
            if c > f[r] {
                f[r] = c;
            }
        }
        // rho*(X) = |X| - k + rho(E-X): reuse the same scan through the
        // complement rather than re-deriving a dual oracle.
        for x in 0..1u64 << n {
            let rs = card(x) + self.rank(complement(x, n)) - k;
            let c = card(x);
            if c > fstar[rs] {
                fstar[rs] = c;
            }
        }
        Ok(FlatProfile { f, fstar })
    }

    /// The sets `S_M = {n - f_{k-1}, .., n - f_0}` and
    /// `T_M = {f*_0 + 1, .., f*_{n-k-1} + 1}`, with their partition
    /// verdict.
    pub fn st_sets(&self) -> Result<StSets, MatroidError> {
        self.st_sets_capped(DEFAULT_ENUM_CAP)
    }

    pub fn st_sets_capped(&self, cap: usize) -> Result<StSets, MatroidError> {
        let profile = self.f_coefficients_capped(cap)?;
        let n = self.n();
        let k = self.k;
        let s: Vec<usize> = (0..k).rev().map(|i| n - profile.f[i]).collect();
        let t: Vec<usize> = (0..n - k).map(|j| profile.fstar[j] + 1).collect();
        let check = check_partition(n, &s, &t);
        Ok(StSets { s, t, check, profile })
    }

    /// All circuits (minimal dependent sets), ascending by cardinality
    /// then mask value.
    pub fn circuits(&self) -> Result<CircuitFamily, MatroidError> {
        self.circuits_capped(DEFAULT_ENUM_CAP)
    }

    pub fn circuits_capped(&self, cap: usize) -> Result<CircuitFamily, MatroidError> {
        let n = self.check_cap(cap)?;
        let mut members: Vec<Mask> = Vec::new();
        for c in 1..=n {
            for x in masks_of_size(n, c) {
                // A smaller circuit inside x means x is dependent but
                // not minimal.
                if members.iter().any(|&m| m & x == m) {
                    continue;
                }
                if self.rank(x) < c {
                    members.push(x);
                }
            }
        }
        Ok(CircuitFamily { n, members })
    }

    /// Cocircuits: circuits of the dual.
    pub fn cocircuits(&self) -> Result<CircuitFamily, MatroidError> {
        self.cocircuits_capped(DEFAULT_ENUM_CAP)
    }

    pub fn cocircuits_capped(&self, cap: usize) -> Result<CircuitFamily, MatroidError> {
        self.dual().circuits_capped(cap)
    }

    /// Closure of `x`: adjoins every element whose addition keeps the
    /// rank.
    pub fn closure(&self, x: Mask) -> Mask {
        let r = self.rank(x);
        let mut out = x;
        for e in elements(self.ground.complement(x)) {
            if self.rank(x | bit(e)) == r {
                out |= bit(e);
            }
        }
        out
    }

    /// Enumerates all flats (closure-fixed subsets) and checks whether
    /// same-rank flats share one cardinality — the perfect matroid
    /// design property.
    pub fn pmd_check(&self) -> Result<PmdReport, MatroidError> {
        self.pmd_check_capped(DEFAULT_ENUM_CAP)
    }

    pub fn pmd_check_capped(&self, cap: usize) -> Result<PmdReport, MatroidError> {
        let n = self.check_cap(cap)?;
        let mut sizes: Vec<Option<usize>> = vec![None; self.k + 1];
        let mut conflict = None;
        for x in 0..1u64 << n {
            if self.closure(x) != x {
                continue;
            }
            let r = self.rank(x);
            let c = card(x);
            match sizes[r] {
                None => sizes[r] = Some(c),
                Some(prev) if prev != c && conflict.is_none() => {
                    conflict = Some(PmdConflict {
                        rank: r,
                        sizes: (prev, c),
                    });
                }
                _ => {}
            }
        }
        let is_pmd = conflict.is_none();
        Ok(PmdReport {
            is_pmd,
            flat_sizes: if is_pmd {
                // Every rank in 0..=k is realized by some flat.
                Some(sizes.into_iter().map(|s| s.expect("every rank has a flat")).collect())
            } else {
                None
            },
            conflict,
        })
    }

    /// For a perfect matroid design, confirms that the f-profile (equal
    /// to the flat sizes) pins down the dual profile through the S/T
    /// partition: the complement of `S_M` in `{1, .., n}` must
    /// reproduce `T_M` and hence `f*_0, .., f*_{n-k-1}`.
    pub fn pmd_dual_profile_check(&self) -> Result<PmdDualityCheck, MatroidError> {
        self.pmd_dual_profile_check_capped(DEFAULT_ENUM_CAP)
    }

    pub fn pmd_dual_profile_check_capped(&self, cap: usize) -> Result<PmdDualityCheck, MatroidError> {
        let pmd = self.pmd_check_capped(cap)?;
        let Some(flat_sizes) = pmd.flat_sizes else {
            return Err(MatroidError::NotPmd);
        };
        let st = self.st_sets_capped(cap)?;
        let n = self.n();
        let k = self.k;
        let flat_sizes_match_profile = flat_sizes == st.profile.f;
        let complement_of_s: Vec<usize> =
            (1..=n).filter(|v| !st.s.contains(v)).collect();
        let derived_fstar: Vec<usize> = complement_of_s.iter().map(|&v| v - 1).collect();
        let computed_fstar: Vec<usize> = st.profile.fstar[..n - k].to_vec();
        let ok = flat_sizes_match_profile && derived_fstar == computed_fstar && st.check.ok;
        Ok(PmdDualityCheck {
            flat_sizes,
            s_m: st.s,
            t_m: st.t,
            derived_fstar,
            computed_fstar,
            ok,
        })
    }

    fn check_cap(&self, cap: usize) -> Result<usize, MatroidError> {
        let n = self.n();
        if n > cap {
            return Err(MatroidError::CapExceeded { n, cap });
        }
        Ok(n)
    }
}

/// The maximal-cardinality coefficients of a matroid and its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatProfile {
    /// `f[i] = max{|F| : rho(F) = i}`, `i = 0..=k`.
    pub f: Vec<usize>,
    /// `fstar[j] = max{|F| : rho*(F) = j}`, `j = 0..=n-k`.
    pub fstar: Vec<usize>,
}

/// `S_M`, `T_M` and their partition verdict, plus the profile they came
/// from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StSets {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub check: PartitionCheck,
    pub profile: FlatProfile,
}

/// A family of circuits (or cocircuits), each a minimal dependent set,
/// sorted by cardinality then mask value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitFamily {
    pub n: usize,
    pub members: Vec<Mask>,
}

impl CircuitFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Result of a minimum irredundant-union search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrredundantUnion {
    pub size: usize,
    pub witness: Vec<Mask>,
}

/// Minimum size of a union of `count` family members, none contained in
/// the union of the others. Branch-and-bound over index-increasing
/// combinations: a branch dies as soon as a chosen member loses its
/// last private element or the union cannot beat the best size found.
pub fn min_irredundant_union(
    family: &CircuitFamily,
    count: usize,
) -> Result<IrredundantUnion, MatroidError> {
    assert!(count >= 1, "count must be at least 1");
    if family.members.len() < count {
        return Err(MatroidError::Infeasible { count });
    }
    let members = &family.members;
    let mut best_size = usize::MAX;
    let mut best: Vec<usize> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    // privates[d] = elements of chosen[d] in no other chosen member.
    let mut privates: Vec<Mask> = Vec::new();

    fn dfs(
        members: &[Mask],
        count: usize,
        start: usize,
        union: Mask,
        chosen: &mut Vec<usize>,
        privates: &mut Vec<Mask>,
        best_size: &mut usize,
        best: &mut Vec<usize>,
    ) {
        if chosen.len() == count {
            if card(union) < *best_size {
                *best_size = card(union);
                *best = chosen.clone();
            }
            return;
        }
        let need = count - chosen.len();
        for idx in start..=members.len() - need {
            let b = members[idx];
            let fresh = b & !union;
            if fresh == 0 {
                // b inside the current union: redundant forever.
                continue;
            }
            let new_union = union | b;
            // Each remaining member must contribute at least one
            // private (hence new) element.
            if card(new_union) + (need - 1) >= *best_size {
                continue;
            }
            // Private elements only shrink as members are added; a
            // member stripped of its last private cannot recover.
            if privates.iter().any(|&p| p & !b == 0) {
                continue;
            }
            let saved: Vec<Mask> = privates.clone();
            for p in privates.iter_mut() {
                *p &= !b;
            }
            privates.push(fresh);
            chosen.push(idx);
            dfs(members, count, idx + 1, new_union, chosen, privates, best_size, best);
            chosen.pop();
            *privates = saved;
        }
    }

    dfs(
        members,
        count,
        0,
        0,
        &mut chosen,
        &mut privates,
        &mut best_size,
        &mut best,
    );

    if best_size == usize::MAX {
        return Err(MatroidError::Infeasible { count });
    }
    Ok(IrredundantUnion {
        size: best_size,
        witness: best.into_iter().map(|i| members[i]).collect(),
    })
}

/// Perfect matroid design verdict with the size-by-rank table on
/// success.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmdReport {
    pub is_pmd: bool,
    pub flat_sizes: Option<Vec<usize>>,
    pub conflict: Option<PmdConflict>,
}

/// Two flats of the same rank with different cardinalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmdConflict {
    pub rank: usize,
    pub sizes: (usize, usize),
}

/// Outcome of [`Matroid::pmd_dual_profile_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmdDualityCheck {
    pub flat_sizes: Vec<usize>,
    pub s_m: Vec<usize>,
    pub t_m: Vec<usize>,
    pub derived_fstar: Vec<usize>,
    pub computed_fstar: Vec<usize>,
    pub ok: bool,
}

/// The rank-4 matroid on 8 elements whose bases are all 4-subsets
/// except five: simple, self-dual, paving, and not representable over
/// any field. Elements are labeled "1" through "8".
pub fn vamos() -> Matroid {
    let excluded: [Mask; 5] = [
        0b0011_0011, // {1,2,5,6}
        0b0101_0101, // {1,3,5,7}
        0b1001_1001, // {1,4,5,8}
        0b0110_0110, // {2,3,6,7}
        0b1010_1010, // {2,4,6,8}
    ];
    let bases: Vec<Mask> = masks_of_size(8, 4)
        .filter(|m| !excluded.contains(m))
        .collect();
    let ground = GroundSet::with_labels((1..=8).map(|i| i.to_string()).collect())
        .expect("eight distinct labels");
    Matroid::from_bases(ground, bases).expect("nonempty equicardinal bases")
}
