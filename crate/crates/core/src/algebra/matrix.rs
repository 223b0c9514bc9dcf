use std::fmt;

use serde::Serialize;

use super::{AlgebraError, RationalFunction};

/// Dense matrix over `Q(q)`, row-major. Rows are output coordinates.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![RationalFunction::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| RationalFunction::one()))
    }

    pub fn diagonal(diag: impl IntoIterator<Item = RationalFunction>) -> Self {
        let diag: Vec<_> = diag.into_iter().collect();
        let mut m = Self::zero(diag.len(), diag.len());
        for (k, d) in diag.into_iter().enumerate() {
            m.set(k, k, d);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch {
                left_rows: r,
                left_cols: c,
                right_rows: r,
                right_cols: c,
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RationalFunction {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RationalFunction) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[RationalFunction] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RationalFunction::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// Exact product `self * rhs`. Zero entries are skipped, which keeps
    /// products against the sparse seminormal generators cheap.
    pub fn matmul(&self, rhs: &QMatrix) -> Result<QMatrix, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(self.mismatch(rhs));
        }
        let mut out = QMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..rhs.cols {
                let terms = row.iter().enumerate().map(|(k, a)| (a, rhs.get(k, j)));
                out.set(i, j, RationalFunction::sum_of_products(terms));
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &QMatrix) -> Result<QMatrix, AlgebraError> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &QMatrix) -> Result<QMatrix, AlgebraError> {
        self.zip(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &RationalFunction) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Product of a sequence of square matrices of size `n`; the empty
    /// product is the identity.
    pub fn product<'a>(n: usize, factors: impl IntoIterator<Item = &'a QMatrix>) -> Result<QMatrix, AlgebraError> {
        factors
            .into_iter()
            .try_fold(QMatrix::identity(n), |acc, m| acc.matmul(m))
    }

    fn zip(
        &self,
        rhs: &QMatrix,
        f: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction,
    ) -> Result<QMatrix, AlgebraError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(self.mismatch(rhs));
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    fn mismatch(&self, rhs: &QMatrix) -> AlgebraError {
        AlgebraError::DimensionMismatch {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: rhs.rows,
            right_cols: rhs.cols,
        }
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[ {} ]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LaurentPoly;

    fn q(k: i32) -> RationalFunction {
        RationalFunction::q_pow(k)
    }

    #[test]
    fn identity_is_neutral() {
        let a = QMatrix::from_rows(vec![vec![q(1), q(2)], vec![RationalFunction::from(3), q(-1)]]).unwrap();
        assert_eq!(QMatrix::identity(2).matmul(&a).unwrap(), a);
        assert_eq!(a.matmul(&QMatrix::identity(2)).unwrap(), a);
    }

    #[test]
    fn diagonal_inverse_pair() {
        let a = QMatrix::diagonal([q(1), q(-1)]);
        let b = QMatrix::diagonal([q(-1), q(1)]);
        assert!(a.matmul(&b).unwrap().is_identity());
    }

    #[test]
    fn dimension_mismatch() {
        let a = QMatrix::zero(2, 3);
        let b = QMatrix::zero(2, 3);
        assert!(matches!(a.matmul(&b), Err(AlgebraError::DimensionMismatch { .. })));
        assert!(a.add(&QMatrix::zero(3, 2)).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![q(0)], vec![q(0), q(1)]];
        assert!(QMatrix::from_rows(rows).is_err());
    }

    #[test]
    fn display_uses_laurent_grammar() {
        let m = QMatrix::diagonal([LaurentPoly::from_terms([(1, 1), (-1, 1)]).into(), q(0)]);
        assert_eq!(m.to_string(), "[ q + q^-1, 0 ]\n[ 0, 1 ]\n");
    }
}
