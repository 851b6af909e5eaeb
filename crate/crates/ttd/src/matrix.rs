//! Small dense matrices over a [`Field`]; just enough linear algebra for
//! the 4x4 matrix machinery of the isogeny construction.

use crate::field::Field;
use crate::poly::det_bareiss;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<K: Field> {
    pub n: usize,
    entries: Vec<K>,
}

impl<K: Field> Mat<K> {
    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrices only");
        Mat {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &K {
        &self.entries[i * self.n + j]
    }

    pub fn det(&self) -> K {
        let zero = self.entries[0].zero();
        let one = self.entries[0].one();
        let rows: Vec<Vec<K>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        det_bareiss(rows, &zero, &one)
    }

    fn minor(&self, i: usize, j: usize) -> K {
        let zero = self.entries[0].zero();
        let one = self.entries[0].one();
        let rows: Vec<Vec<K>> = (0..self.n)
            .filter(|&r| r != i)
            .map(|r| {
                (0..self.n)
                    .filter(|&c| c != j)
                    .map(|c| self.at(r, c).clone())
                    .collect()
            })
            .collect();
        det_bareiss(rows, &zero, &one)
    }

    /// Cofactor matrix M with M[i][j] = (-1)^(i+j) minor(i, j), so that
    /// M^T = det(A) A^(-1).
    pub fn cofactor_matrix(&self) -> Mat<K> {
        let rows: Vec<Vec<K>> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let m = self.minor(i, j);
                        if (i + j) % 2 == 1 {
                            m.neg()
                        } else {
                            m
                        }
                    })
                    .collect()
            })
            .collect();
        Mat::from_rows(rows)
    }

    pub fn mul(&self, rhs: &Mat<K>) -> Mat<K> {
        assert_eq!(self.n, rhs.n);
        let zero = self.entries[0].zero();
        let rows: Vec<Vec<K>> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let mut acc = zero.clone();
                        for k in 0..self.n {
                            acc = acc.add(&self.at(i, k).mul(rhs.at(k, j)));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Mat::from_rows(rows)
    }

    pub fn transpose(&self) -> Mat<K> {
        let rows: Vec<Vec<K>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(j, i).clone()).collect())
            .collect();
        Mat::from_rows(rows)
    }

    /// `true` iff self equals c * identity.
    pub fn is_scalar(&self, c: &K) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                let want = if i == j { c.clone() } else { c.zero() };
                if *self.at(i, j) != want {
                    return false;
                }
            }
        }
        true
    }
}
