//! Exact arithmetic in finite fields GF(p^m) of order at most 256.
//!
//! Elements are table indices in `0..q`. For prime fields the index is
//! the residue itself; for extension fields index `i` encodes the
//! polynomial whose coefficient of `x^j` is the `j`-th base-`p` digit
//! of `i`. Addition and multiplication are fully tabulated at
//! construction, so all downstream arithmetic is two loads.
//!
//! Extension fields are built over a fixed irreducible polynomial: the
//! Conway polynomial where one is tabled (every order up to 256 is),
//! otherwise the lexicographically smallest monic irreducible found by
//! search.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: usize = 256;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {p}^{m} exceeds {MAX_ORDER}")]
    OrderTooLarge { p: u64, m: u32 },
    #[error("degree must be at least 1")]
    ZeroDegree,
}

/// Conway polynomials for every prime power 4..=256 with m >= 2, as
/// coefficient vectors (c_0, .., c_{m-1}) of the non-leading terms; the
/// polynomial is x^m + c_{m-1} x^{m-1} + .. + c_0.
const CONWAY: &[(u64, u32, &[u8])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (5, 2, &[2, 4]),
    (5, 3, &[3, 3, 0]),
    (7, 2, &[3, 6]),
    (11, 2, &[2, 7]),
    (13, 2, &[2, 12]),
];

/// A finite field GF(p^m), q = p^m <= 256, with tabulated arithmetic.
pub struct FiniteField {
    p: u64,
    m: u32,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    /// Non-leading coefficients of the reduction polynomial (empty for
    /// m = 1, where arithmetic is plain residues mod p).
    poly: Vec<u8>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.poly == other.poly
    }
}
impl Eq for FiniteField {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial arithmetic over GF(p) on little-endian coefficient slices,
/// used only while building tables.
mod polys {
    /// Remainder of `a` modulo the monic polynomial `x^m + tail`, where
    /// `tail` holds the non-leading coefficients.
    pub fn rem(mut a: Vec<u8>, tail: &[u8], p: u64) -> Vec<u8> {
        let m = tail.len();
        while a.len() > m {
            let lead = *a.last().unwrap() as u64;
            let deg = a.len() - 1;
            if lead != 0 {
                // a -= lead * x^(deg-m) * (x^m + tail)
                for (i, &t) in tail.iter().enumerate() {
                    let idx = deg - m + i;
                    let cur = a[idx] as u64;
                    a[idx] = ((cur + p * p - (lead * t as u64) % p) % p) as u8;
                }
            }
            a.pop();
        }
        a
    }

    pub fn mul(a: &[u8], b: &[u8], p: u64) -> Vec<u8> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x as u64 * y as u64;
            }
        }
        out.into_iter().map(|v| (v % p) as u8).collect()
    }

    pub fn is_zero(a: &[u8]) -> bool {
        a.iter().all(|&c| c == 0)
    }
}

/// Index <-> coefficient-vector codecs for elements of GF(p^m).
fn digits(mut idx: usize, p: u64, m: u32) -> Vec<u8> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push((idx as u64 % p) as u8);
        idx /= p as usize;
    }
    out
}

fn index(coeffs: &[u8], p: u64, m: u32) -> usize {
    let mut out = 0usize;
    for j in (0..m as usize).rev() {
        let c = coeffs.get(j).copied().unwrap_or(0) as usize;
        out = out * p as usize + c;
    }
    out
}

/// Tests irreducibility of `x^m + tail` over GF(p) by trial division
/// against every monic polynomial of degree 1..=m/2. Fine at these
/// sizes (m <= 8, p <= 13).
fn is_irreducible(tail: &[u8], p: u64) -> bool {
    let m = tail.len();
    for d in 1..=m / 2 {
        // Divisor candidates x^d + g, g ranging over all p^d tails.
        for g_idx in 0..(p as usize).pow(d as u32) {
            let g = digits(g_idx, p, d as u32);
            // full = x^m + tail reduced mod (x^d + g): irreducible iff
            // remainder never vanishes.
            let mut full = tail.to_vec();
            full.push(1);
            if polys::is_zero(&polys::rem(full, &g, p)) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest irreducible tail for x^m + tail, ordering
/// tails by their element index (constant coefficient least
/// significant).
fn smallest_irreducible_tail(p: u64, m: u32) -> Vec<u8> {
    for idx in 0..(p as usize).pow(m) {
        let tail = digits(idx, p, m);
        if is_irreducible(&tail, p) {
            return tail;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over every prime field")
}

impl FiniteField {
    /// Builds GF(p^m). `p` must be prime and `p^m <= 256`.
    pub fn new(p: u64, m: u32) -> Result<Arc<FiniteField>, FieldError> {
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let q = (p as usize)
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(FieldError::OrderTooLarge { p, m })?;

        let poly = if m == 1 {
            Vec::new()
        } else {
            CONWAY
                .iter()
                .find(|&&(cp, cm, _)| cp == p && cm == m)
                .map(|&(_, _, tail)| tail.to_vec())
                .unwrap_or_else(|| smallest_irreducible_tail(p, m))
        };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a, p, m);
            for b in 0..=a {
                let db = digits(b, p, m);
                let sum: Vec<u8> = da
                    .iter()
                    .zip(&db)
                    .map(|(&x, &y)| ((x as u64 + y as u64) % p) as u8)
                    .collect();
                let s = index(&sum, p, m);
                add[a * q + b] = s as u8;
                add[b * q + a] = s as u8;
                let prod = if m == 1 {
                    vec![((da[0] as u64 * db[0] as u64) % p) as u8]
                } else {
                    polys::rem(polys::mul(&da, &db, p), &poly, p)
                };
                let pr = index(&prod, p, m);
                mul[a * q + b] = pr as u8;
                mul[b * q + a] = pr as u8;
            }
        }

        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as u8;
                }
                if a != 0 && mul[a * q + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }

        Ok(Arc::new(FiniteField {
            p,
            m,
            q,
            add,
            mul,
            neg,
            inv,
            poly,
        }))
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Non-leading coefficients of the reduction polynomial; empty for
    /// prime fields.
    pub fn reduction_poly(&self) -> &[u8] {
        &self.poly
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    #[inline]
    pub fn div(&self, a: u8, b: u8) -> u8 {
        self.mul(a, self.inv(b))
    }

    /// True when `e` is a valid element index.
    #[inline]
    pub fn contains(&self, e: u64) -> bool {
        (e as usize) < self.q
    }
}
