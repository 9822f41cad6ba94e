//! Dense exact matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::rational::{format_rational, Rational};
use super::ExactError;

/// Row-major dense matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of a reduced row echelon computation.
struct Echelon {
    m: ExactMatrix,
    pivots: Vec<usize>,
}

fn bit_size(r: &Rational) -> u64 {
    r.numer().bits() + r.denom().bits()
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.set(i, i, c.clone());
            }
        }
        m
    }

    pub fn diag(d: Vec<Rational>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, c) in d.into_iter().enumerate() {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::ShapeMismatch);
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Column vector from entries.
    pub fn column(v: Vec<Rational>) -> Self {
        ExactMatrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| if x.is_zero() { x.clone() } else { x * c }).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Matrix product; sparse-aware since most operators here have few nonzeros.
    pub fn try_mul(&self, o: &ExactMatrix) -> Result<ExactMatrix, ExactError> {
        if self.cols != o.rows {
            return Err(ExactError::ShapeMismatch);
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn try_add(&self, o: &ExactMatrix) -> Result<ExactMatrix, ExactError> {
        if self.shape() != o.shape() {
            return Err(ExactError::ShapeMismatch);
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, o: &ExactMatrix) -> Result<ExactMatrix, ExactError> {
        if self.shape() != o.shape() {
            return Err(ExactError::ShapeMismatch);
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self * o - o * self`.
    pub fn commutator(&self, o: &ExactMatrix) -> ExactMatrix {
        &(self * o) - &(o * self)
    }

    /// Kronecker product, with `self` as the slow index.
    pub fn kron(&self, o: &ExactMatrix) -> ExactMatrix {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Copies the block with the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Contiguous block of size `r x c` starting at `(i0, j0)`.
    pub fn block(&self, i0: usize, j0: usize, r: usize, c: usize) -> ExactMatrix {
        let rows: Vec<usize> = (i0..i0 + r).collect();
        let cols: Vec<usize> = (j0..j0 + c).collect();
        self.select(&rows, &cols)
    }

    pub fn set_block(&mut self, i0: usize, j0: usize, b: &ExactMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(i0 + i, j0 + j, b.get(i, j).clone());
            }
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[ExactMatrix]) -> Result<ExactMatrix, ExactError> {
        let cols = parts.first().map_or(0, |m| m.cols);
        if parts.iter().any(|m| m.cols != cols) {
            return Err(ExactError::ShapeMismatch);
        }
        Ok(ExactMatrix {
            rows: parts.iter().map(|m| m.rows).sum(),
            cols,
            data: parts.iter().flat_map(|m| m.data.iter().cloned()).collect(),
        })
    }

    fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Smallest nonzero pivot keeps intermediate entries short.
            let Some(p) = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by_key(|&i| bit_size(m.get(i, c)))
            else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let x = m.get(r, j);
                    if x.is_zero() {
                        continue;
                    }
                    let d = &f * x;
                    *m.get_mut(i, j) -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let e = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in e.pivots.iter().enumerate() {
                    v[p] = -e.m.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    /// Solves `self * x = b` when the system is consistent with a unique solution.
    pub fn solve_unique(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>, ExactError> {
        if b.len() != self.rows {
            return Err(ExactError::ShapeMismatch);
        }
        let mut aug = ExactMatrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let e = aug.echelon();
        if e.pivots.contains(&self.cols) {
            return Ok(None);
        }
        if e.pivots.len() < self.cols {
            return Err(ExactError::Underdetermined);
        }
        Ok(Some((0..self.cols).map(|r| e.m.get(r, self.cols).clone()).collect()))
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<ExactMatrix, ExactError> {
        if !self.is_square() {
            return Err(ExactError::ShapeMismatch);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut aug = ExactMatrix::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &ExactMatrix::identity(n));
        let e = aug.echelon();
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return Err(ExactError::SingularMatrix);
        }
        Ok(e.m.block(0, n, n, n))
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, o: &ExactMatrix) -> ExactMatrix {
        self.try_mul(o).expect("shape mismatch")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, o: &ExactMatrix) -> ExactMatrix {
        self.try_add(o).expect("shape mismatch")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, o: &ExactMatrix) -> ExactMatrix {
        self.try_sub(o).expect("shape mismatch")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ExactMatrix::identity(3).inverse().unwrap(), ExactMatrix::identity(3));
        assert_eq!(m(&[&[1, 1], &[0, 1]]).inverse().unwrap(), m(&[&[1, -1], &[0, 1]]));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(ExactError::SingularMatrix));
        assert_eq!(m(&[&[1, 2, 3]]).inverse(), Err(ExactError::ShapeMismatch));
    }

    #[test]
    fn nullspace_and_solve() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
        let b = m(&[&[2, 0], &[0, 4], &[1, 1]]);
        let x = b.solve_unique(&[int(2), int(4), int(2)]).unwrap().unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        assert_eq!(b.solve_unique(&[int(2), int(4), int(3)]).unwrap(), None);
    }

    #[test]
    fn kron_shape_and_entries() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.shape(), (4, 4));
        assert_eq!(k.get(2, 1), &int(3));
        assert_eq!(k.get(1, 2), &int(2));
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
        prop::collection::vec((-4i64..5, 1i64..4), n * n).prop_map(move |v| {
            let data: Vec<Rational> = v.into_iter().map(|(p, q)| frac(p, q)).collect();
            ExactMatrix::from_rows(data.chunks(n).map(<[Rational]>::to_vec).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(a in arb_matrix(4)) {
            match a.inverse() {
                Ok(inv) => {
                    prop_assert_eq!(&a * &inv, ExactMatrix::identity(4));
                    prop_assert_eq!(&inv * &a, ExactMatrix::identity(4));
                }
                Err(e) => {
                    prop_assert_eq!(e, ExactError::SingularMatrix);
                    prop_assert!(a.rank() < 4);
                }
            }
        }

        #[test]
        fn kron_is_multiplicative(a in arb_matrix(2), b in arb_matrix(2), c in arb_matrix(2), d in arb_matrix(2)) {
            prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
        }
    }
}
