//! Ground sets and single-word subset masks.
//!
//! Every structure in this crate lives on a ground set of at most 63
//! elements, so a subset is one `u64` with bit `i` marking element `i`
//! (least-significant bit = element 0). Rank tables are indexed directly
//! by mask value.

use thiserror::Error;

/// A subset of a ground set, one bit per element.
pub type Mask = u64;

/// Largest supported ground-set size. Subsets must fit in one machine
/// word and dense tables must be indexable by `1 << n`.
pub const MAX_ELEMENTS: usize = 63;

/// Default size cap for operations that scan or materialize all `2^n`
/// subsets. Raisable per call; `MAX_ELEMENTS` stays the hard limit.
pub const DEFAULT_ENUM_CAP: usize = 20;

/// Number of elements in `x`.
#[inline]
pub fn card(x: Mask) -> usize {
    x.count_ones() as usize
}

/// The mask for the single element `i`.
#[inline]
pub fn bit(i: usize) -> Mask {
    debug_assert!(i < MAX_ELEMENTS);
    1u64 << i
}

/// The full subset `{0, .., n-1}`.
#[inline]
pub fn full(n: usize) -> Mask {
    debug_assert!(n <= MAX_ELEMENTS);
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n as u32)
    }
}

/// Complement of `x` within the low `n` bits.
#[inline]
pub fn complement(x: Mask, n: usize) -> Mask {
    full(n) & !x
}

/// Iterator over the element indices of `x`, ascending.
pub fn elements(x: Mask) -> Elements {
    Elements { rest: x }
}

#[derive(Clone, Debug)]
pub struct Elements {
    rest: Mask,
}

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.rest == 0 {
            return None;
        }
        let i = self.rest.trailing_zeros() as usize;
        self.rest &= self.rest - 1;
        Some(i)
    }
}

/// All masks over `n` elements with exactly `c` bits set, in ascending
/// mask order (Gosper's hack).
pub fn masks_of_size(n: usize, c: usize) -> SizedMasks {
    debug_assert!(n <= MAX_ELEMENTS);
    let next = if c > n {
        None
    } else if c == 0 {
        Some(0)
    } else {
        Some((1u64 << c) - 1)
    };
    SizedMasks {
        next,
        limit: full(n),
    }
}

#[derive(Clone, Debug)]
pub struct SizedMasks {
    next: Option<Mask>,
    limit: Mask,
}

impl Iterator for SizedMasks {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let carry = cur + low;
            let out = carry | (((carry ^ cur) / low) >> 2);
            if out > self.limit {
                None
            } else {
                Some(out)
            }
        };
        Some(cur)
    }
}

/// All masks over `n` elements in ascending cardinality, ascending mask
/// value within each cardinality class.
pub fn masks_by_size(n: usize) -> impl Iterator<Item = Mask> {
    (0..=n).flat_map(move |c| masks_of_size(n, c))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroundSetError {
    #[error("ground set has {0} elements; at most {MAX_ELEMENTS} are supported")]
    TooLarge(usize),
    #[error("element labels must be pairwise distinct; {0:?} repeats")]
    DuplicateLabel(String),
}

/// A finite ground set: a size plus optional distinct element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self, GroundSetError> {
        if n > MAX_ELEMENTS {
            return Err(GroundSetError::TooLarge(n));
        }
        Ok(GroundSet { n, labels: None })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self, GroundSetError> {
        if labels.len() > MAX_ELEMENTS {
            return Err(GroundSetError::TooLarge(labels.len()));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(GroundSetError::DuplicateLabel(a.clone()));
            }
        }
        Ok(GroundSet {
            n: labels.len(),
            labels: Some(labels),
        })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn full(&self) -> Mask {
        full(self.n)
    }

    #[inline]
    pub fn complement(&self, x: Mask) -> Mask {
        complement(x, self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of element `i`, falling back to its index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    /// Renders a mask as `{a, b, c}` using element labels.
    pub fn display(&self, x: Mask) -> String {
        let inner: Vec<String> = elements(x).map(|i| self.label(i)).collect();
        format!("{{{}}}", inner.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_masks() {
        assert_eq!(full(0), 0);
        assert_eq!(full(3), 0b111);
        assert_eq!(full(63), u64::MAX >> 1);
    }

    #[test]
    fn complement_within_ground() {
        assert_eq!(complement(0b101, 3), 0b010);
        assert_eq!(complement(0, 4), 0b1111);
    }

    #[test]
    fn element_iteration() {
        let got: Vec<usize> = elements(0b10110).collect();
        assert_eq!(got, vec![1, 2, 4]);
        assert_eq!(elements(0).count(), 0);
    }

    #[test]
    fn sized_masks_enumerate_all_combinations() {
        let got: Vec<Mask> = masks_of_size(4, 2).collect();
        assert_eq!(got, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(masks_of_size(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks_of_size(3, 4).count(), 0);
        assert_eq!(masks_of_size(10, 5).count(), 252);
    }

    #[test]
    fn masks_by_size_covers_power_set_in_order() {
        let got: Vec<Mask> = masks_by_size(3).collect();
        assert_eq!(got, vec![0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]);
    }

    #[test]
    fn ground_set_rejects_oversize_and_duplicate_labels() {
        assert!(GroundSet::new(64).is_err());
        assert!(GroundSet::new(63).is_ok());
        let err = GroundSet::with_labels(vec!["a".into(), "a".into()]).unwrap_err();
        assert_eq!(err, GroundSetError::DuplicateLabel("a".into()));
    }

    #[test]
    fn mask_display_uses_labels() {
        let g = GroundSet::with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert_eq!(g.display(0b101), "{a, c}");
        let plain = GroundSet::new(3).unwrap();
        assert_eq!(plain.display(0b110), "{1, 2}");
    }
}
