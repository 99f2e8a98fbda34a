use std::collections::HashMap;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{
    enumerate_osps_with_cap, shuffle_lumpings, standard_decomposition, OrderedSetPartition,
    DEFAULT_MAX_N,
};
use crate::error::{Error, Result};

/// The square integer matrix, over the lex-ordered plate basis of size the
/// ordered Bell number, whose column `j` expands the `j`-th canonical basis
/// element into plates. Columns are stored sparsely, sorted by row index.
#[derive(Clone, Debug)]
pub struct ChangeOfBasis {
    n: u32,
    labels: Vec<OrderedSetPartition>,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl ChangeOfBasis {
    pub fn build(n: u32) -> Result<Self> {
        Self::build_with_cap(n, DEFAULT_MAX_N)
    }

    pub fn build_with_cap(n: u32, cap: u32) -> Result<Self> {
        let labels = enumerate_osps_with_cap(n, cap)?;
        let index: HashMap<&OrderedSetPartition, usize> =
            labels.iter().enumerate().map(|(i, osp)| (osp, i)).collect();
        let mut columns = Vec::with_capacity(labels.len());
        for label in &labels {
            let csp = standard_decomposition(label);
            let mut column: Vec<(usize, BigInt)> = shuffle_lumpings(&csp)
                .into_iter()
                .map(|(osp, sign)| (index[&osp], BigInt::from(sign)))
                .collect();
            column.sort_by_key(|&(row, _)| row);
            columns.push(column);
        }
        Ok(ChangeOfBasis { n, labels, columns })
    }

    /// Wraps an inverse computed by `inverse` (or any explicit columns) over
    /// the same basis. Internal helper for constructing the inverse matrix.
    fn with_columns(&self, columns: Vec<Vec<(usize, BigInt)>>) -> Self {
        ChangeOfBasis {
            n: self.n,
            labels: self.labels.clone(),
            columns,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[OrderedSetPartition] {
        &self.labels
    }

    pub fn entry(&self, row: usize, col: usize) -> BigInt {
        self.columns[col]
            .binary_search_by_key(&row, |&(r, _)| r)
            .map(|pos| self.columns[col][pos].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    pub fn column(&self, col: usize) -> &[(usize, BigInt)] {
        &self.columns[col]
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.columns.iter().enumerate().all(|(j, column)| {
            let mut diagonal = false;
            for (row, value) in column {
                if *row > j {
                    return false;
                }
                if *row == j {
                    diagonal = value.is_one();
                }
            }
            diagonal
        })
    }

    /// Inverts the matrix by back-substitution over the columns. Requires the
    /// matrix to be upper unitriangular, so the inverse is again integral.
    pub fn inverse(&self) -> Result<ChangeOfBasis> {
        if !self.is_upper_unitriangular() {
            return Err(Error::domain(
                "inverse is only implemented for upper unitriangular matrices",
            ));
        }
        let dim = self.dim();
        let mut columns = Vec::with_capacity(dim);
        let mut work: Vec<BigInt> = vec![BigInt::zero(); dim];
        for j in 0..dim {
            work[j] = BigInt::one();
            // Walking k downward, work[k] is final when reached: it only
            // receives contributions from columns right of k, which have
            // already been folded in.
            for k in (0..=j).rev() {
                if work[k].is_zero() {
                    continue;
                }
                for (row, value) in &self.columns[k] {
                    if *row < k {
                        let delta = value * &work[k];
                        work[*row] -= delta;
                    }
                }
            }
            let mut column: Vec<(usize, BigInt)> = Vec::new();
            for (row, value) in work.iter_mut().enumerate().take(j + 1) {
                if !value.is_zero() {
                    column.push((row, std::mem::take(value)));
                }
            }
            columns.push(column);
        }
        Ok(self.with_columns(columns))
    }

    /// Exact check that `self * other` is the identity matrix.
    pub fn product_is_identity(&self, other: &ChangeOfBasis) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let dim = self.dim();
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); dim];
        for j in 0..dim {
            for (k, weight) in &other.columns[j] {
                for (row, value) in &self.columns[*k] {
                    acc[*row] += value * weight;
                }
            }
            for (row, value) in acc.iter_mut().enumerate() {
                let expected = i32::from(row == j);
                if *value != BigInt::from(expected) {
                    return false;
                }
                *value = BigInt::zero();
            }
        }
        true
    }

    /// Row-major dense rows, in lex order on both axes. Each row is produced
    /// on demand so large matrices can stream.
    pub fn dense_rows(&self) -> impl Iterator<Item = Vec<BigInt>> + '_ {
        let dim = self.dim();
        let mut by_row: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); dim];
        for (j, column) in self.columns.iter().enumerate() {
            for (row, value) in column {
                by_row[*row].push((j, value.clone()));
            }
        }
        by_row.into_iter().map(move |sparse_row| {
            let mut row = vec![BigInt::zero(); dim];
            for (col, value) in sparse_row {
                row[col] = value;
            }
            row
        })
    }

    /// Writes the matrix as bare CSV: one line per row, entries separated by
    /// commas, no header.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        for row in self.dense_rows() {
            let mut first = true;
            for value in row {
                if !first {
                    out.write_all(b",")?;
                }
                write!(out, "{value}")?;
                first = false;
            }
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 13×13 expansion matrix for n = 3, row-major over the lex basis
    /// ((123), (12|3), (13|2), (1|23), (1|2|3), (1|3|2), (23|1), (2|13),
    /// (2|1|3), (3|12), (3|1|2), (2|3|1), (3|2|1)).
    pub(crate) const N3_MATRIX: [[i64; 13]; 13] = [
        [1, 0, 0, 0, 0, 0, -1, -1, 0, -1, 0, 0, 1],
        [0, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0, -1, -1],
        [0, 0, 1, 0, 0, 0, 0, 1, 0, 0, -1, 0, -1],
        [0, 0, 0, 1, 0, 0, 1, 0, -1, 0, -1, 0, -1],
        [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1],
        [0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ];

    #[test]
    fn matrix_for_three_labels_matches_reference() {
        let m = ChangeOfBasis::build(3).unwrap();
        assert_eq!(m.dim(), 13);
        for (i, row) in N3_MATRIX.iter().enumerate() {
            for (j, &value) in row.iter().enumerate() {
                assert_eq!(m.entry(i, j), BigInt::from(value), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn unitriangular_and_inverse_roundtrip() {
        for n in 1..=4 {
            let m = ChangeOfBasis::build(n).unwrap();
            assert!(m.is_upper_unitriangular(), "n = {n}");
            let inv = m.inverse().unwrap();
            assert!(m.product_is_identity(&inv), "n = {n}");
            assert!(inv.product_is_identity(&m), "n = {n}");
        }
    }

    #[test]
    fn csv_rows_are_dense_and_ordered() {
        // Lex basis for two labels: (12), (1|2), (2|1); the last column is
        // the expansion of ⌊1⌋•⌊2⌋.
        let m = ChangeOfBasis::build(2).unwrap();
        let mut buffer = Vec::new();
        m.write_csv(&mut buffer).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        assert_eq!(text, "1,0,-1\n0,1,1\n0,0,1\n");
    }

    #[test]
    fn cap_is_enforced() {
        assert!(ChangeOfBasis::build_with_cap(4, 3).is_err());
    }
}
