//! Demi-matroids: a ground set with two monotone, cardinality-bounded
//! subset functions `s` and `t` tied together by a complementation
//! identity.
//!
//! The axioms, for all `X ⊆ Y ⊆ E`:
//!
//! * (R) `0 <= s(X) <= s(Y) <= |Y|`, and the same for `t`;
//! * (D) `|E-X| - s(E-X) = t(E) - t(X)`.
//!
//! (D) is equivalent to its mirror (D') `|E-X| - t(E-X) = s(E) - s(X)`;
//! validation checks both. Writing `k = s(E)`, the axioms force
//! `s(E) + t(E) = n`.
//!
//! Two involutions act on demi-matroids: the *dual* swaps `s` and `t`,
//! and the *supplement* replaces each function `f` by
//! `f̄(X) = f(E) - f(E-X)`. The four weight profiles (minimum subset
//! sizes reaching each rank value and maximum subset sizes staying below
//! it) yield four integer sets S, T, U, V, and the two partition
//! theorems state that S ⊔ T and U ⊔ V both partition `{1, .., n}`.

use thiserror::Error;

use crate::subset::{card, complement, full, GroundSet, Mask, MAX_ELEMENTS};

/// Which of the two rank tables a validation error refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableSide {
    S,
    T,
}

/// Dense table of rank values over every subset, indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    values: Vec<u8>,
}

impl RankTable {
    /// Wraps raw values (length must be a power of two; checked when the
    /// table is attached to a ground set).
    pub fn from_values(values: Vec<u8>) -> Self {
        RankTable { values }
    }

    /// Materializes a table by evaluating `f` on every mask, in
    /// ascending mask order.
    pub fn from_fn(n: usize, mut f: impl FnMut(Mask) -> usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        let values = (0..1u64 << n)
            .map(|x| {
                let v = f(x);
                debug_assert!(v <= MAX_ELEMENTS);
                v as u8
            })
            .collect();
        RankTable { values }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn get(&self, x: Mask) -> usize {
        self.values[x as usize] as usize
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DemiMatroidError {
    #[error("ground set has {0} elements; at most {MAX_ELEMENTS} are supported")]
    SizeError(usize),
    #[error("rank table {side:?} has {got} entries, expected 2^{n} = {expected}")]
    TableLength {
        side: TableSide,
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("(R) fails for table {side:?}: value on mask {sub:#x} exceeds value on superset {sup:#x}")]
    RViolation { side: TableSide, sub: Mask, sup: Mask },
    #[error("(D) fails at X = {subset:#x}")]
    DViolation { subset: Mask },
    #[error("internal invariant broken: {0}")]
    Internal(&'static str),
}

/// A validated demi-matroid `(E, s, t)`.
///
/// Validation is eager: both tables are checked against (R), and the
/// pair against (D) and (D'), at construction. Everything downstream
/// assumes validity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemiMatroid {
    ground: GroundSet,
    s: RankTable,
    t: RankTable,
    k: usize,
}

impl DemiMatroid {
    pub fn new(ground: GroundSet, s: RankTable, t: RankTable) -> Result<Self, DemiMatroidError> {
        let n = ground.size();
        check_r(n, &s, TableSide::S)?;
        check_r(n, &t, TableSide::T)?;
        check_d(n, &s, &t)?;
        let k = s.get(full(n));
        Ok(DemiMatroid { ground, s, t, k })
    }

    /// Convenience constructor from raw table vectors.
    pub fn from_tables(n: usize, s: Vec<u8>, t: Vec<u8>) -> Result<Self, DemiMatroidError> {
        let ground = GroundSet::new(n).map_err(|_| DemiMatroidError::SizeError(n))?;
        DemiMatroid::new(ground, RankTable::from_values(s), RankTable::from_values(t))
    }

    pub fn with_ground(self, ground: GroundSet) -> Result<Self, DemiMatroidError> {
        if ground.size() != self.ground.size() {
            return Err(DemiMatroidError::SizeError(ground.size()));
        }
        Ok(DemiMatroid { ground, ..self })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ground.size()
    }

    /// `k = s(E)`; `t(E)` is then `n - k`.
    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    #[inline]
    pub fn s(&self, x: Mask) -> usize {
        self.s.get(x)
    }

    #[inline]
    pub fn t(&self, x: Mask) -> usize {
        self.t.get(x)
    }

    pub fn s_table(&self) -> &RankTable {
        &self.s
    }

    pub fn t_table(&self) -> &RankTable {
        &self.t
    }

    /// The dual `(E, t, s)`. No re-validation: (D) and (D') trade
    /// places under the swap.
    pub fn dual(&self) -> DemiMatroid {
        DemiMatroid {
            ground: self.ground.clone(),
            s: self.t.clone(),
            t: self.s.clone(),
            k: self.n() - self.k,
        }
    }

    /// The supplement `(E, s̄, t̄)` with `f̄(X) = f(E) - f(E-X)`.
    ///
    /// The result is re-validated; failure would mean a bug in this
    /// crate, so it aborts.
    pub fn supplement(&self) -> DemiMatroid {
        let n = self.n();
        let k = self.k;
        let tk = n - k;
        let sbar = RankTable::from_fn(n, |x| k - self.s.get(complement(x, n)));
        let tbar = RankTable::from_fn(n, |x| tk - self.t.get(complement(x, n)));
        DemiMatroid::new(self.ground.clone(), sbar, tbar)
            .expect("supplement of a valid demi-matroid must satisfy the axioms")
    }

    /// All eight weight sequences of this demi-matroid (plain and
    /// supplement-barred).
    pub fn profiles(&self) -> WeightProfile {
        let n = self.n();
        let k = self.k;
        let nk = n - k;
        let s_stats = ClassStats::of(n, &self.s);
        let t_stats = ClassStats::of(n, &self.t);
        let sbar_stats = s_stats.barred(k);
        let tbar_stats = t_stats.barred(nk);
        WeightProfile {
            sigma: s_stats.profile_min(k),
            tau: t_stats.profile_min(nk),
            smax: s_stats.profile_max(k),
            tmax: t_stats.profile_max(nk),
            sigma_bar: sbar_stats.profile_min(k),
            tau_bar: tbar_stats.profile_min(nk),
            smax_bar: sbar_stats.profile_max(k),
            tmax_bar: tbar_stats.profile_max(nk),
        }
    }

    /// The four feature sets S, T, U, V, each sorted ascending.
    pub fn feature_sets(&self) -> FeatureSets {
        FeatureSets::from_profile(self.n(), self.k, &self.profiles())
    }

    /// Checks both partition theorems: S ⊔ T = {1, .., n} and
    /// U ⊔ V = {1, .., n}. Violations are reported as data.
    pub fn verify_wei(&self) -> DualityReport {
        let sets = self.feature_sets();
        let n = self.n();
        let st = check_partition(n, &sets.s, &sets.t);
        let uv = check_partition(n, &sets.u, &sets.v);
        DualityReport { sets, st, uv }
    }

    /// Evaluates the Singleton-type bounds `sigma_i <= n-k+i`,
    /// `smax_i <= n-k+i`, `tau_j <= k+j`, `tmax_j <= k+j` on every index
    /// of every sequence.
    pub fn singleton_check(&self) -> Vec<SingletonBound> {
        let profile = self.profiles();
        let n = self.n();
        let k = self.k;
        let mut out = Vec::new();
        let mut push = |sequence: &'static str, values: &[usize], bound_of: &dyn Fn(usize) -> usize| {
            for (index, &value) in values.iter().enumerate() {
                let bound = bound_of(index);
                out.push(SingletonBound {
                    sequence,
                    index,
                    value,
                    bound,
                    satisfied: value <= bound,
                });
            }
        };
        push("sigma", &profile.sigma, &|i| n - k + i);
        push("smax", &profile.smax, &|i| n - k + i);
        push("tau", &profile.tau, &|j| k + j);
        push("tmax", &profile.tmax, &|j| k + j);
        out
    }
}

fn check_r(n: usize, table: &RankTable, side: TableSide) -> Result<(), DemiMatroidError> {
    let expected = 1usize << n;
    if table.len() != expected {
        return Err(DemiMatroidError::TableLength {
            side,
            n,
            expected,
            got: table.len(),
        });
    }
    for x in 0..1u64 << n {
        let v = table.get(x);
        if v > card(x) {
            return Err(DemiMatroidError::RViolation { side, sub: x, sup: x });
        }
        // Monotonicity over single-element steps implies it over all
        // chains X ⊆ Y.
        let mut rest = x;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if table.get(x & !b) > v {
                return Err(DemiMatroidError::RViolation {
                    side,
                    sub: x & !b,
                    sup: x,
                });
            }
        }
    }
    Ok(())
}

fn check_d(n: usize, s: &RankTable, t: &RankTable) -> Result<(), DemiMatroidError> {
    let e = full(n);
    let s_e = s.get(e);
    let t_e = t.get(e);
    // s(E) + t(E) = n is (D) at X = ∅; checking it first gives the
    // clearest error for the most common bad input.
    if s_e + t_e != n {
        return Err(DemiMatroidError::DViolation { subset: 0 });
    }
    for x in 0..1u64 << n {
        let cx = complement(x, n);
        let co_card = n - card(x);
        // (D): |E-X| - s(E-X) = t(E) - t(X). (R) already guarantees the
        // subtractions cannot underflow.
        if co_card - s.get(cx) != t_e - t.get(x) {
            return Err(DemiMatroidError::DViolation { subset: x });
        }
        // (D'): the same identity with s and t exchanged.
        if co_card - t.get(cx) != s_e - s.get(x) {
            return Err(DemiMatroidError::DViolation { subset: x });
        }
    }
    Ok(())
}

/// Per-cardinality minima and maxima of a rank table. Both vectors are
/// nondecreasing in the cardinality, which is what makes the profile
/// extraction below a single sweep.
struct ClassStats {
    min: Vec<usize>,
    max: Vec<usize>,
}

impl ClassStats {
    fn of(n: usize, table: &RankTable) -> ClassStats {
        let mut min = vec![usize::MAX; n + 1];
        let mut max = vec![0usize; n + 1];
        for x in 0..1u64 << n {
            let c = card(x);
            let v = table.get(x);
            if v < min[c] {
                min[c] = v;
            }
            if v > max[c] {
                max[c] = v;
            }
        }
        ClassStats { min, max }
    }

    /// Stats of the barred function `f̄(X) = m - f(E-X)` where `m = f(E)`,
    /// obtained by reflecting the cardinality axis.
    fn barred(&self, m: usize) -> ClassStats {
        let n = self.min.len() - 1;
        let min = (0..=n).map(|c| m - self.max[n - c]).collect();
        let max = (0..=n).map(|c| m - self.min[n - c]).collect();
        ClassStats { min, max }
    }

    /// `min { |X| : f(X) >= i }` for `i = 0..=m` — the sigma/tau shape.
    fn profile_min(&self, m: usize) -> Vec<usize> {
        let n = self.max.len() - 1;
        let mut out = Vec::with_capacity(m + 1);
        let mut c = 0usize;
        for i in 0..=m {
            while self.max[c] < i {
                c += 1;
                debug_assert!(c <= n);
            }
            out.push(c);
        }
        out
    }

    /// `max { |X| : f(X) <= i }` for `i = 0..=m` — the smax/tmax shape.
    fn profile_max(&self, m: usize) -> Vec<usize> {
        let n = self.min.len() - 1;
        let mut out = Vec::with_capacity(m + 1);
        let mut c = 0usize;
        for i in 0..=m {
            while c < n && self.min[c + 1] <= i {
                c += 1;
            }
            out.push(c);
        }
        out
    }
}

/// The eight weight sequences of a demi-matroid.
///
/// * `sigma[i] = min{|X| : s(X) >= i}` for `i = 0..=k`
/// * `tau[j] = min{|X| : t(X) >= j}` for `j = 0..=n-k`
/// * `smax[i] = max{|X| : s(X) <= i}`, `tmax[j] = max{|X| : t(X) <= j}`
/// * barred variants are the same sequences for the supplement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
    pub smax: Vec<usize>,
    pub tmax: Vec<usize>,
    pub sigma_bar: Vec<usize>,
    pub tau_bar: Vec<usize>,
    pub smax_bar: Vec<usize>,
    pub tmax_bar: Vec<usize>,
}

impl WeightProfile {
    /// True when the minimum profiles are the trivial staircases
    /// `sigma_i = i`, `tau_j = j`, as they are for every demi-matroid of
    /// the form `(E, rho, rho*)` with `rho` a matroid rank function.
    pub fn is_matroidal(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &v)| v == i)
            && self.tau.iter().enumerate().all(|(j, &v)| v == j)
    }
}

/// The four feature sets, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeatureSets {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
}

impl FeatureSets {
    pub fn from_profile(n: usize, k: usize, profile: &WeightProfile) -> FeatureSets {
        let nk = n - k;
        // smax is strictly increasing, so walking its first k entries
        // backwards yields an ascending S.
        let s = (0..k).rev().map(|i| n - profile.smax[i]).collect();
        let t = (0..nk).map(|j| profile.tmax[j] + 1).collect();
        let u = (1..=k).map(|i| profile.sigma[i]).collect();
        let v = (1..=nk).rev().map(|j| n + 1 - profile.tau[j]).collect();
        FeatureSets { s, t, u, v }
    }
}

/// Which partition theorem a violation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionLaw {
    /// S ⊔ T = {1, .., n}.
    St,
    /// U ⊔ V = {1, .., n}.
    Uv,
}

/// Outcome of checking that two integer sets partition `{1, .., n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCheck {
    pub ok: bool,
    /// Values of `{1, .., n}` in neither set.
    pub missing: Vec<usize>,
    /// Values in both sets.
    pub repeated: Vec<usize>,
}

/// Checks that `a` and `b` (each sorted, duplicate-free) cover
/// `{1, .., n}` exactly once between them. Values outside `{1, .., n}`
/// count as repetitions: they break the partition either way.
pub fn check_partition(n: usize, a: &[usize], b: &[usize]) -> PartitionCheck {
    let mut count = vec![0u8; n + 1];
    let mut repeated = Vec::new();
    for &v in a.iter().chain(b) {
        if (1..=n).contains(&v) {
            count[v] = count[v].saturating_add(1);
        } else {
            repeated.push(v);
        }
    }
    let missing: Vec<usize> = (1..=n).filter(|&v| count[v] == 0).collect();
    repeated.extend((1..=n).filter(|&v| count[v] > 1));
    repeated.sort_unstable();
    PartitionCheck {
        ok: missing.is_empty() && repeated.is_empty(),
        missing,
        repeated,
    }
}

/// Verdicts for the two partition theorems on one demi-matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub sets: FeatureSets,
    pub st: PartitionCheck,
    pub uv: PartitionCheck,
}

impl DualityReport {
    pub fn all_ok(&self) -> bool {
        self.st.ok && self.uv.ok
    }

    /// Every offending integer, tagged by the theorem it violates.
    pub fn violations(&self) -> Vec<(PartitionLaw, usize)> {
        let mut out = Vec::new();
        for &v in self.st.missing.iter().chain(&self.st.repeated) {
            out.push((PartitionLaw::St, v));
        }
        for &v in self.uv.missing.iter().chain(&self.uv.repeated) {
            out.push((PartitionLaw::Uv, v));
        }
        out
    }
}

/// One evaluated Singleton-type bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingletonBound {
    pub sequence: &'static str,
    pub index: usize,
    pub value: usize,
    pub bound: usize,
    pub satisfied: bool,
}
