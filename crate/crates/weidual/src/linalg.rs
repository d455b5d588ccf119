//! Dense matrices over a finite field: reduced row-echelon form, rank,
//! nullspace, and column-subset rank.
//!
//! Elimination is deterministic — leftmost pivot column, topmost pivot
//! row — so pivot sets and nullspace bases are reproducible across runs.

use std::sync::Arc;

use thiserror::Error;

use crate::gf::FiniteField;
use crate::subset::{card, elements, Mask};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("entry {value} at ({row}, {col}) is not an element of a field of order {q}")]
    BadEntry {
        row: usize,
        col: usize,
        value: u64,
        q: usize,
    },
    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },
}

/// A row-major matrix of field-element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Arc<FiniteField>,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of reduction: the echelon matrix, its rank, and the pivot
/// column indices in ascending order.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: FieldMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FieldMatrix {
    pub fn zero(field: Arc<FiniteField>, rows: usize, cols: usize) -> FieldMatrix {
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Arc<FiniteField>, n: usize) -> FieldMatrix {
        let mut m = FieldMatrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, validating every entry
    /// against the field order.
    pub fn from_rows(field: Arc<FiniteField>, rows: &[Vec<u64>]) -> Result<FieldMatrix, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::RaggedRow {
                    row: i,
                    expected: cols,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !field.contains(v) {
                    return Err(LinalgError::BadEntry {
                        row: i,
                        col: j,
                        value: v,
                        q: field.q(),
                    });
                }
                data.push(v as u8);
            }
        }
        Ok(FieldMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Reduced row-echelon form with deterministic pivoting.
    pub fn rref(&self) -> Echelon {
        let f = &self.field;
        let mut data = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..cols {
            let Some(pivot_row) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
                continue;
            };
            if pivot_row != rank {
                for c in 0..cols {
                    data.swap(rank * cols + c, pivot_row * cols + c);
                }
            }
            let scale = f.inv(data[rank * cols + col]);
            for c in 0..cols {
                data[rank * cols + c] = f.mul(data[rank * cols + c], scale);
            }
            for r in 0..rows {
                if r == rank {
                    continue;
                }
                let factor = data[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in 0..cols {
                    let sub = f.mul(factor, data[rank * cols + c]);
                    data[r * cols + c] = f.sub(data[r * cols + c], sub);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows {
                break;
            }
        }
        Echelon {
            matrix: FieldMatrix {
                field: self.field.clone(),
                rows,
                cols,
                data,
            },
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of the right nullspace `{ y : M y^T = 0 }`, one vector
    /// per row. The basis is the standard one read off the RREF, with
    /// free columns taken in ascending order; row count is
    /// `cols - rank`.
    pub fn nullspace(&self) -> FieldMatrix {
        let ech = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut data = Vec::with_capacity(free.len() * self.cols);
        for &fc in &free {
            let mut y = vec![0u8; self.cols];
            y[fc] = 1;
            for (r, &pc) in ech.pivots.iter().enumerate() {
                y[pc] = f.neg(ech.matrix.get(r, fc));
            }
            data.extend_from_slice(&y);
        }
        FieldMatrix {
            field: self.field.clone(),
            rows: free.len(),
            cols: self.cols,
            data,
        }
    }

    /// Rank of the submatrix formed by the columns selected by `x`.
    pub fn column_rank_of_subset(&self, x: Mask) -> usize {
        self.select_columns(x).rank()
    }

    /// New matrix keeping only the columns selected by `x`, in
    /// ascending column order.
    pub fn select_columns(&self, x: Mask) -> FieldMatrix {
        debug_assert!(card(x) <= self.cols);
        let keep: Vec<usize> = elements(x).collect();
        let mut data = Vec::with_capacity(self.rows * keep.len());
        for r in 0..self.rows {
            for &c in &keep {
                data.push(self.get(r, c));
            }
        }
        FieldMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: keep.len(),
            data,
        }
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let f = &self.field;
        let mut data = vec![0u8; self.rows * other.cols];
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.get(r, i);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let add = f.mul(a, other.get(i, c));
                    data[r * other.cols + c] = f.add(data[r * other.cols + c], add);
                }
            }
        }
        FieldMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut data = vec![0u8; self.rows * self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.get(r, c);
            }
        }
        FieldMatrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Canonical representative of the row space: RREF with zero rows
    /// dropped. Two matrices span the same row space iff these agree.
    pub fn row_space_canonical(&self) -> FieldMatrix {
        let ech = self.rref();
        let rank = ech.rank;
        let mut data = ech.matrix.data;
        data.truncate(rank * self.cols);
        FieldMatrix {
            field: self.field.clone(),
            rows: rank,
            cols: self.cols,
            data,
        }
    }
}
