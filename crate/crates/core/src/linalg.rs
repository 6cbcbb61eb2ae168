//! Exact linear algebra over arbitrary-precision rationals.
//!
//! Every kernel, rank and membership question in the crate ends up here.
//! Elimination is fraction-free: rows are scaled to integers, reduced to
//! echelon form with Bareiss updates (all intermediate divisions exact), and
//! only the final back substitution returns to rationals. Results are
//! canonical (reduced row echelon form, pivots chosen left to right), so two
//! runs over the same input always agree bit for bit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

/// Dense matrix of exact rationals, stored row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RatMatrix {
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: rows,
                    got: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        Ok(m)
    }

    /// Convenience constructor from small integers, mostly for tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

/// Reduced row echelon form: `rows` holds the nonzero rows, `pivots[i]` is the
/// pivot column of `rows[i]`, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub cols: usize,
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .map(|v| {
            if v.is_zero() {
                BigInt::zero()
            } else {
                v.numer() * (&lcm / v.denom())
            }
        })
        .collect()
}

/// Fraction-free forward elimination. Returns the integer echelon rows
/// together with their pivot columns.
fn bareiss_echelon(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let n_rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == n_rows {
            break;
        }
        // Smallest nonzero entry in magnitude keeps the numbers small; ties
        // resolved by row index so the result stays deterministic.
        let Some(p) = (r..n_rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()).then(i.cmp(&j)))
        else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let factor = row[c].clone();
            if factor.is_zero() {
                for v in row.iter_mut().skip(c + 1) {
                    if !v.is_zero() {
                        *v = &*v * &pivot;
                        if !prev.is_one() {
                            *v = &*v / &prev;
                        }
                    }
                }
            } else {
                for j in c + 1..cols {
                    let v = &row[j] * &pivot - &factor * &pivot_row[j];
                    debug_assert!((&v % &prev).is_zero(), "inexact Bareiss step");
                    row[j] = if prev.is_one() { v } else { v / &prev };
                }
                row[c] = BigInt::zero();
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Canonical reduced row echelon form of `m`.
pub fn rref(m: &RatMatrix) -> Echelon {
    let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| integer_row(m.row(i))).collect();
    rref_integer(rows, m.cols())
}

fn rref_integer(rows: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let (ech, pivots) = bareiss_echelon(rows, cols);
    // Rational normalization and back substitution.
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(ech.len());
    for (row, &pc) in ech.into_iter().zip(&pivots) {
        let p = row[pc].clone();
        out.push(
            row.into_iter()
                .map(|v| {
                    if v.is_zero() {
                        Rational::zero()
                    } else {
                        Rational::new(v, p.clone())
                    }
                })
                .collect(),
        );
    }
    for i in (0..out.len()).rev() {
        let pc = pivots[i];
        let (above, rest) = out.split_at_mut(i);
        let pivot_row = &rest[0];
        for row in above.iter_mut() {
            let factor = row[pc].clone();
            if factor.is_zero() {
                continue;
            }
            for j in pc..cols {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &factor * &pivot_row[j];
                }
            }
        }
    }
    Echelon {
        cols,
        rows: out,
        pivots,
    }
}

pub fn rank(m: &RatMatrix) -> usize {
    let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| integer_row(m.row(i))).collect();
    bareiss_echelon(rows, m.cols()).1.len()
}

/// Basis of the kernel of `m`, returned in reduced echelon form.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let ech = rref(m);
    let free: Vec<usize> = {
        let mut is_pivot = vec![false; m.cols()];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..m.cols()).filter(|&c| !is_pivot[c]).collect()
    };
    let raw: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[f] = Rational::one();
            for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
                if !row[f].is_zero() {
                    v[pc] = -row[f].clone();
                }
            }
            v
        })
        .collect();
    row_basis(&raw, m.cols())
}

/// Canonical basis (reduced echelon rows) of the span of `vectors`.
pub fn row_basis(vectors: &[Vec<Rational>], len: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let rows = vectors.iter().map(|v| integer_row(v)).collect();
    rref_integer(rows, len).rows
}

/// Result of a membership query `span_cols · c = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Solution(Vec<Rational>),
    NotInSpan,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Solution(_))
    }
}

/// Solves `span_cols · c = target`. When the solution set is an affine space
/// the echelon-canonical solution (all free coordinates zero) is returned.
pub fn solve_membership(
    span_cols: &RatMatrix,
    target: &[Rational],
) -> Result<Membership, LinalgError> {
    if target.len() != span_cols.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: span_cols.rows(),
            got: target.len(),
        });
    }
    let n = span_cols.cols();
    let rows: Vec<Vec<BigInt>> = (0..span_cols.rows())
        .map(|i| {
            let mut r = span_cols.row(i).to_vec();
            r.push(target[i].clone());
            integer_row(&r)
        })
        .collect();
    let ech = rref_integer(rows, n + 1);
    if ech.pivots.last() == Some(&n) {
        return Ok(Membership::NotInSpan);
    }
    let mut c = vec![Rational::zero(); n];
    for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
        c[pc] = row[n].clone();
    }
    Ok(Membership::Solution(c))
}

/// Canonical basis of `span(a) ∩ span(b)`.
pub fn subspace_intersection(
    a: &[Vec<Rational>],
    b: &[Vec<Rational>],
) -> Result<Vec<Vec<Rational>>, LinalgError> {
    let Some(len) = a.first().or(b.first()).map(Vec::len) else {
        return Ok(Vec::new());
    };
    for v in a.iter().chain(b) {
        if v.len() != len {
            return Err(LinalgError::DimensionMismatch {
                expected: len,
                got: v.len(),
            });
        }
    }
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    // Reduce each side first so the stacked system is as small as possible.
    let a = row_basis(a, len);
    let b = row_basis(b, len);
    let mut cols: Vec<Vec<Rational>> = a.clone();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
    let m = RatMatrix::from_columns(len, &cols)?;
    let image: Vec<Vec<Rational>> = nullspace(&m)
        .into_iter()
        .map(|c| {
            let mut v = vec![Rational::zero(); len];
            for (coef, basis) in c.iter().zip(&a) {
                if coef.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(basis) {
                    if !y.is_zero() {
                        *x += coef * y;
                    }
                }
            }
            v
        })
        .collect();
    Ok(row_basis(&image, len))
}

/// Determinant via fraction-free elimination.
pub fn determinant(m: &RatMatrix) -> Result<Rational, LinalgError> {
    let n = m.rows();
    if m.cols() != n {
        return Err(LinalgError::NotSquare {
            rows: n,
            cols: m.cols(),
        });
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    // Scale rows to integers and remember the scale factors.
    let mut scale = Rational::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let lcm = row
            .iter()
            .filter(|v| !v.is_zero())
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        scale *= Rational::from_integer(lcm.clone());
        a.push(integer_row(row));
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = Rational::from_integer(a[n - 1][n - 1].clone() * sign) / scale;
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn rv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| r(x)).collect()
    }

    #[test]
    fn nullspace_of_identity_is_trivial() {
        assert!(nullspace(&RatMatrix::identity(3)).is_empty());
    }

    #[test]
    fn nullspace_of_zero_map_is_everything() {
        let ns = nullspace(&RatMatrix::zeros(2, 3));
        assert_eq!(ns, vec![rv(&[1, 0, 0]), rv(&[0, 1, 0]), rv(&[0, 0, 1])]);
    }

    #[test]
    fn nullspace_hand_elimination() {
        let m = RatMatrix::from_i64_rows(&[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(nullspace(&m), vec![rv(&[1, -1, 0])]);
    }

    #[test]
    fn membership_examples() {
        let id = RatMatrix::identity(3);
        assert_eq!(
            solve_membership(&id, &rv(&[1, 2, 3])).unwrap(),
            Membership::Solution(rv(&[1, 2, 3]))
        );
        let single = RatMatrix::from_i64_rows(&[&[1], &[0]]);
        assert_eq!(
            solve_membership(&single, &rv(&[0, 1])).unwrap(),
            Membership::NotInSpan
        );
        let two = RatMatrix::from_i64_rows(&[&[1, 1], &[1, -1]]);
        assert_eq!(
            solve_membership(&two, &rv(&[2, 0])).unwrap(),
            Membership::Solution(rv(&[1, 1]))
        );
    }

    #[test]
    fn membership_rejects_wrong_length() {
        let id = RatMatrix::identity(2);
        assert!(matches!(
            solve_membership(&id, &rv(&[1, 2, 3])),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn membership_canonical_solution_sets_free_variables_to_zero() {
        // columns (1,0), (1,0), (0,1): free column 1
        let m = RatMatrix::from_i64_rows(&[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            solve_membership(&m, &rv(&[3, 4])).unwrap(),
            Membership::Solution(rv(&[3, 0, 4]))
        );
    }

    #[test]
    fn intersection_examples() {
        let e1 = rv(&[1, 0, 0]);
        let e2 = rv(&[0, 1, 0]);
        let e3 = rv(&[0, 0, 1]);
        assert_eq!(
            subspace_intersection(&[e1.clone()], &[e1.clone()]).unwrap(),
            vec![e1.clone()]
        );
        assert!(subspace_intersection(&[e1.clone()], &[e2.clone()])
            .unwrap()
            .is_empty());
        assert_eq!(
            subspace_intersection(&[e1, e2.clone()], &[e2.clone(), e3]).unwrap(),
            vec![e2]
        );
    }

    #[test]
    fn intersection_dimension_mismatch() {
        assert!(subspace_intersection(&[rv(&[1, 0])], &[rv(&[1, 0, 0])]).is_err());
    }

    #[test]
    fn determinant_small() {
        let m = RatMatrix::from_i64_rows(&[&[2, 1], &[1, 3]]);
        assert_eq!(determinant(&m).unwrap(), r(5));
        let m = RatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&m).unwrap(), r(-1));
        let mut m = RatMatrix::identity(2);
        m.set(0, 0, Rational::new(1.into(), 2.into()));
        assert_eq!(determinant(&m).unwrap(), Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn rref_with_fractions() {
        let mut m = RatMatrix::zeros(2, 2);
        m.set(0, 0, Rational::new(1.into(), 3.into()));
        m.set(0, 1, Rational::new(2.into(), 3.into()));
        m.set(1, 0, r(1));
        m.set(1, 1, r(2));
        let e = rref(&m);
        assert_eq!(e.rows, vec![rv(&[1, 2])]);
        assert_eq!(e.pivots, vec![0]);
    }
}
