//! Linear codes over finite fields: dual codes, puncturing and
//! shortening, the code demi-matroid, generalized Hamming weights, and
//! the weight-hierarchy partition check.
//!
//! A code is stored through a full-row-rank generator matrix in reduced
//! row-echelon form; constructors reduce whatever they are given and
//! drop zero rows, so the dimension is always derived. The rank
//! function `rho_C(X)` is the column rank of the generator on `X`,
//! which equals the dimension of the code punctured to `X`.

use std::sync::Arc;

use thiserror::Error;

use crate::demimatroid::{check_partition, DemiMatroid, DemiMatroidError, PartitionCheck, RankTable};
use crate::gf::FiniteField;
use crate::linalg::{FieldMatrix, LinalgError};
use crate::matroid::{Matroid, RankOracle};
use crate::subset::{bit, card, complement, GroundSet, Mask, DEFAULT_ENUM_CAP, MAX_ELEMENTS};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("code length {0} exceeds {MAX_ELEMENTS}")]
    TooLong(usize),
    #[error("{n} coordinates exceed the exhaustive-scan cap {cap}; raise the cap to proceed")]
    CapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Demi(#[from] DemiMatroidError),
}

/// Support of a word given as field-element indices: the mask of
/// nonzero coordinates.
pub fn word_support(word: &[u8]) -> Mask {
    word.iter()
        .enumerate()
        .filter(|&(_, &v)| v != 0)
        .map(|(i, _)| bit(i))
        .sum()
}

/// Whether the direct subcode-enumeration oracle runs inside
/// [`LinearCode::hierarchy`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    /// Run when the subspace count is small enough (the default).
    Auto,
    /// Run regardless of size.
    Force,
    /// Never run.
    Skip,
}

/// Codeword-count gate for the direct oracle.
const ORACLE_MAX_WORDS: u128 = 4096;
/// Subspace-count gate: the Gaussian-binomial enumeration must stay
/// desk-sized.
const ORACLE_MAX_SUBSPACES: u128 = 200_000;

/// An `[n, k]` linear code over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: FieldMatrix,
    n: usize,
    k: usize,
}

impl LinearCode {
    /// Builds a code from spanning rows; dependent and zero rows are
    /// eliminated by reduction, so `k` is the rank of what was given.
    pub fn new(field: Arc<FiniteField>, rows: &[Vec<u64>]) -> Result<LinearCode, CodeError> {
        let matrix = FieldMatrix::from_rows(field, rows)?;
        LinearCode::from_matrix(matrix)
    }

    pub fn from_matrix(matrix: FieldMatrix) -> Result<LinearCode, CodeError> {
        let n = matrix.cols();
        if n > MAX_ELEMENTS {
            return Err(CodeError::TooLong(n));
        }
        let generator = matrix.row_space_canonical();
        let k = generator.rows();
        Ok(LinearCode { generator, n, k })
    }

    /// The zero code of length `n`.
    pub fn zero(field: Arc<FiniteField>, n: usize) -> Result<LinearCode, CodeError> {
        if n > MAX_ELEMENTS {
            return Err(CodeError::TooLong(n));
        }
        Ok(LinearCode {
            generator: FieldMatrix::zero(field, 0, n),
            n,
            k: 0,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.generator.field()
    }

    /// The canonical (RREF) generator matrix.
    pub fn generator(&self) -> &FieldMatrix {
        &self.generator
    }

    /// `rho_C(X)`: rank of the generator columns selected by `X`, i.e.
    /// the dimension of the code punctured to `X`.
    pub fn rank_on(&self, x: Mask) -> usize {
        self.generator.column_rank_of_subset(x)
    }

    /// Support of the whole code: the union of the generator-row
    /// supports (which equals the union over the full row space).
    pub fn support(&self) -> Mask {
        (0..self.k)
            .map(|r| word_support(self.generator.row(r)))
            .fold(0, |acc, s| acc | s)
    }

    /// The dual code: the nullspace of the generator.
    pub fn dual(&self) -> LinearCode {
        let ns = self.generator.nullspace();
        LinearCode::from_matrix(ns).expect("dual of a valid-length code has the same length")
    }

    /// Deletes the coordinates in `x` and re-reduces; the result lives
    /// on the remaining `n - |x|` coordinates.
    pub fn puncture(&self, x: Mask) -> LinearCode {
        let keep = complement(x, self.n);
        LinearCode::from_matrix(self.generator.select_columns(keep))
            .expect("puncturing cannot lengthen a code")
    }

    /// The subcode of words supported inside `x`, kept on all `n`
    /// coordinates.
    pub fn shorten(&self, x: Mask) -> LinearCode {
        let outside = self.generator.select_columns(complement(x, self.n));
        // Coefficient vectors u with u * G_outside = 0 span the words
        // vanishing off x.
        let coeffs = outside.transpose().nullspace();
        LinearCode::from_matrix(coeffs.matmul(&self.generator))
            .expect("shortening preserves the length")
    }

    /// The vector matroid of the generator columns.
    pub fn matroid(&self) -> Matroid {
        let ground = GroundSet::new(self.n).expect("length checked at construction");
        Matroid::from_oracle(ground, Arc::new(CodeOracle { code: self.clone() }))
    }

    /// The demi-matroid `(E, rho_C, rho_{C_perp})`, validated on
    /// construction.
    pub fn demimatroid(&self) -> Result<DemiMatroid, CodeError> {
        self.demimatroid_capped(DEFAULT_ENUM_CAP)
    }

    pub fn demimatroid_capped(&self, cap: usize) -> Result<DemiMatroid, CodeError> {
        if self.n > cap {
            return Err(CodeError::CapExceeded { n: self.n, cap });
        }
        let dual = self.dual();
        let s = RankTable::from_fn(self.n, |x| self.rank_on(x));
        let t = RankTable::from_fn(self.n, |x| dual.rank_on(x));
        let ground = GroundSet::new(self.n).expect("length checked at construction");
        Ok(DemiMatroid::new(ground, s, t)?)
    }

    /// Generalized Hamming weights `d_1 < .. < d_k` of the code and
    /// `d⊥_1 < .. < d⊥_{n-k}` of its dual, through the demi-matroid
    /// profile (`d_i = n - smax_{k-i}`, `d⊥_j = n - tmax_{n-k-j}`),
    /// plus the induced sets `U_C = {d_i}` and `V_C = {n+1-d⊥_j}`.
    ///
    /// When the subspace counts are small (or `mode` forces it), the
    /// weights are recomputed by direct enumeration of all fixed-
    /// dimension subcodes and the two routes are asserted equal.
    pub fn hierarchy(&self) -> Result<WeightHierarchy, CodeError> {
        self.hierarchy_capped(DEFAULT_ENUM_CAP, OracleMode::Auto)
    }

    pub fn hierarchy_capped(&self, cap: usize, mode: OracleMode) -> Result<WeightHierarchy, CodeError> {
        let demi = self.demimatroid_capped(cap)?;
        let profile = demi.profiles();
        let n = self.n;
        let k = self.k;
        let d: Vec<usize> = (1..=k).map(|i| n - profile.smax[k - i]).collect();
        let d_perp: Vec<usize> = (1..=n - k).map(|j| n - profile.tmax[n - k - j]).collect();

        let mut oracle_checked = false;
        if let Some(direct) = subcode_minimum_weights(self, mode) {
            assert_eq!(
                direct, d,
                "direct subcode enumeration disagrees with the profile route"
            );
            oracle_checked = true;
        }
        if let Some(direct) = subcode_minimum_weights(&self.dual(), mode) {
            assert_eq!(
                direct, d_perp,
                "direct dual-subcode enumeration disagrees with the profile route"
            );
        }

        let u = d.clone();
        let v: Vec<usize> = d_perp.iter().rev().map(|&dj| n + 1 - dj).collect();
        let check = check_partition(n, &u, &v);
        Ok(WeightHierarchy {
            d,
            d_perp,
            u,
            v,
            check,
            oracle_checked,
        })
    }

    /// The weight-hierarchy partition report alone.
    pub fn wei_sets(&self) -> Result<WeightHierarchy, CodeError> {
        self.hierarchy()
    }
}

struct CodeOracle {
    code: LinearCode,
}

impl RankOracle for CodeOracle {
    fn rank(&self, subset: Mask) -> usize {
        self.code.rank_on(subset)
    }
}

/// The weight hierarchy of a code and its dual, with the partition
/// verdict of `U_C ⊔ V_C = {1, .., n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightHierarchy {
    pub d: Vec<usize>,
    pub d_perp: Vec<usize>,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub check: PartitionCheck,
    /// Whether the direct subcode-enumeration oracle ran on the primal
    /// side.
    pub oracle_checked: bool,
}

/// Number of `i`-dimensional subspaces of GF(q)^k, as the sum over
/// pivot-column choices of q^(free positions). `None` on overflow.
fn subspace_count(q: u128, k: usize, i: usize) -> Option<u128> {
    let mut total: u128 = 0;
    let mut pivots: Vec<usize> = (0..i).collect();
    loop {
        let free = free_positions(&pivots, k);
        total = total.checked_add(q.checked_pow(free as u32)?)?;
        if !next_combination(&mut pivots, k) {
            break;
        }
    }
    Some(total)
}

fn free_positions(pivots: &[usize], k: usize) -> usize {
    let mut free = 0;
    for (r, &p) in pivots.iter().enumerate() {
        // Entries right of the pivot, excluding later pivot columns.
        let later_pivots = pivots.len() - r - 1;
        free += k - p - 1 - later_pivots;
    }
    free
}

fn next_combination(combo: &mut [usize], k: usize) -> bool {
    let i = combo.len();
    if i == 0 {
        return false;
    }
    let mut pos = i;
    while pos > 0 {
        pos -= 1;
        if combo[pos] < k - (i - pos) {
            combo[pos] += 1;
            for j in pos + 1..i {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Direct oracle: the minimum support weight of an `i`-dimensional
/// subcode for every `i = 1..=k`, by enumerating each subspace of the
/// coefficient space exactly once through its unique RREF basis.
/// Returns `None` when the enumeration would exceed the size gates and
/// `mode` does not force it.
pub fn subcode_minimum_weights(code: &LinearCode, mode: OracleMode) -> Option<Vec<usize>> {
    if mode == OracleMode::Skip {
        return None;
    }
    let k = code.k();
    let n = code.n();
    let q = code.field().q();
    if k == 0 {
        return Some(Vec::new());
    }
    let words = (q as u128).checked_pow(k as u32)?;
    if mode == OracleMode::Auto {
        if words > ORACLE_MAX_WORDS {
            return None;
        }
        let total: Option<u128> = (1..=k).try_fold(0u128, |acc, i| {
            subspace_count(q as u128, k, i).and_then(|c| acc.checked_add(c))
        });
        match total {
            Some(t) if t <= ORACLE_MAX_SUBSPACES => {}
            _ => return None,
        }
    } else if words > (1 << 22) {
        // Even a forced run must fit in memory.
        return None;
    }

    // Support of every codeword, indexed by the coefficient vector read
    // as a base-q integer (digit j = coefficient of generator row j).
    let word_count = (q as u128).pow(k as u32) as usize;
    let mut supports = vec![0u64; word_count];
    for idx in 0..word_count {
        let mut word = vec![0u8; n];
        let mut rest = idx;
        let f = code.field();
        for row in 0..k {
            let coeff = (rest % q) as u8;
            rest /= q;
            if coeff != 0 {
                for c in 0..n {
                    let add = f.mul(coeff, code.generator().get(row, c));
                    word[c] = f.add(word[c], add);
                }
            }
        }
        supports[idx] = word_support(&word);
    }

    let coeff_index = |row: &[u8]| -> usize {
        row.iter().rev().fold(0usize, |acc, &c| acc * q + c as usize)
    };

    let mut minima = Vec::with_capacity(k);
    for i in 1..=k {
        let mut best = usize::MAX;
        let mut pivots: Vec<usize> = (0..i).collect();
        loop {
            // Free entries: row r, columns past its pivot that are not
            // pivots themselves.
            let mut free_slots: Vec<(usize, usize)> = Vec::new();
            for (r, &p) in pivots.iter().enumerate() {
                for c in p + 1..k {
                    if !pivots.contains(&c) {
                        free_slots.push((r, c));
                    }
                }
            }
            let mut rows = vec![vec![0u8; k]; i];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            // Odometer over all q^(free) assignments.
            let mut counters = vec![0u8; free_slots.len()];
            loop {
                let support = rows
                    .iter()
                    .map(|row| supports[coeff_index(row)])
                    .fold(0u64, |acc, s| acc | s);
                best = best.min(card(support));

                let mut pos = 0;
                loop {
                    if pos == counters.len() {
                        break;
                    }
                    counters[pos] += 1;
                    if (counters[pos] as usize) < q {
                        let (r, c) = free_slots[pos];
                        rows[r][c] = counters[pos];
                        break;
                    }
                    counters[pos] = 0;
                    let (r, c) = free_slots[pos];
                    rows[r][c] = 0;
                    pos += 1;
                }
                if pos == counters.len() {
                    break;
                }
            }
            if !next_combination(&mut pivots, k) {
                break;
            }
        }
        minima.push(best);
    }
    Some(minima)
}
