//! Matrix-valued polynomials, Lagrange interpolation and minimal polynomials.

use num::{One, Zero};

use super::matrix::ExactMatrix;
use super::poly::Poly;
use super::rational::{int, Rational};
use super::ExactError;

/// Polynomial `sum_k C_k u^k` with matrix coefficients of a fixed shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixPoly {
    rows: usize,
    cols: usize,
    coeffs: Vec<ExactMatrix>,
}

impl MatrixPoly {
    pub fn new(rows: usize, cols: usize, mut coeffs: Vec<ExactMatrix>) -> Result<Self, ExactError> {
        if coeffs.iter().any(|c| c.shape() != (rows, cols)) {
            return Err(ExactError::ShapeMismatch);
        }
        while coeffs.last().is_some_and(ExactMatrix::is_zero) {
            coeffs.pop();
        }
        Ok(MatrixPoly { rows, cols, coeffs })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        MatrixPoly { rows, cols, coeffs: Vec::new() }
    }

    pub fn constant(m: ExactMatrix) -> Self {
        let (r, c) = m.shape();
        MatrixPoly::new(r, c, vec![m]).expect("shape")
    }

    /// The scalar polynomial `p` times the identity of size `n`.
    pub fn scalar(n: usize, p: &Poly) -> Self {
        let coeffs = p.coeffs().iter().map(|c| ExactMatrix::scalar(n, c.clone())).collect();
        MatrixPoly::new(n, n, coeffs).expect("shape")
    }

    /// Diagonal matrix polynomial with the given diagonal entries.
    pub fn diagonal(entries: &[Poly]) -> Self {
        let n = entries.len();
        let deg = entries.iter().filter_map(Poly::degree).max().map_or(0, |d| d + 1);
        let coeffs = (0..deg)
            .map(|k| ExactMatrix::diag(entries.iter().map(|p| p.coeff(k)).collect()))
            .collect();
        MatrixPoly::new(n, n, coeffs).expect("shape")
    }

    /// Assembles from a grid of scalar polynomial entries.
    pub fn from_entries(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> Poly) -> Self {
        let grid: Vec<Poly> = (0..rows * cols).map(|k| entry(k / cols.max(1), k % cols.max(1))).collect();
        let deg = grid.iter().filter_map(Poly::degree).max().map_or(0, |d| d + 1);
        let coeffs = (0..deg)
            .map(|k| {
                let mut m = ExactMatrix::zeros(rows, cols);
                for (idx, p) in grid.iter().enumerate() {
                    let c = p.coeff(k);
                    if !c.is_zero() {
                        m.set(idx / cols, idx % cols, c);
                    }
                }
                m
            })
            .collect();
        MatrixPoly::new(rows, cols, coeffs).expect("shape")
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn coeffs(&self) -> &[ExactMatrix] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The scalar polynomial in entry `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.get(i, j).clone()).collect())
    }

    pub fn eval(&self, u: &Rational) -> ExactMatrix {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactMatrix::zeros(self.rows, self.cols), |acc, c| &acc.scale(u) + c)
    }

    pub fn try_add(&self, o: &MatrixPoly) -> Result<MatrixPoly, ExactError> {
        if self.shape() != o.shape() {
            return Err(ExactError::ShapeMismatch);
        }
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = ExactMatrix::zeros(self.rows, self.cols);
        let coeffs = (0..n)
            .map(|k| self.coeffs.get(k).unwrap_or(&z) + o.coeffs.get(k).unwrap_or(&z))
            .collect();
        MatrixPoly::new(self.rows, self.cols, coeffs)
    }

    pub fn try_sub(&self, o: &MatrixPoly) -> Result<MatrixPoly, ExactError> {
        self.try_add(&o.scale(&-Rational::one()))
    }

    pub fn try_mul(&self, o: &MatrixPoly) -> Result<MatrixPoly, ExactError> {
        if self.cols != o.rows {
            return Err(ExactError::ShapeMismatch);
        }
        if self.is_zero() || o.is_zero() {
            return Ok(MatrixPoly::zero(self.rows, o.cols));
        }
        let mut coeffs =
            vec![ExactMatrix::zeros(self.rows, o.cols); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        MatrixPoly::new(self.rows, o.cols, coeffs)
    }

    pub fn scale(&self, c: &Rational) -> MatrixPoly {
        MatrixPoly::new(self.rows, self.cols, self.coeffs.iter().map(|m| m.scale(c)).collect())
            .expect("shape")
    }

    /// Multiplies by a scalar polynomial.
    pub fn mul_poly(&self, p: &Poly) -> MatrixPoly {
        if p.is_zero() || self.is_zero() {
            return MatrixPoly::zero(self.rows, self.cols);
        }
        let mut coeffs = vec![ExactMatrix::zeros(self.rows, self.cols); self.coeffs.len() + p.coeffs().len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &a.scale(c);
                }
            }
        }
        MatrixPoly::new(self.rows, self.cols, coeffs).expect("shape")
    }

    /// Left multiplication by a constant matrix.
    pub fn left_mul(&self, m: &ExactMatrix) -> MatrixPoly {
        MatrixPoly::new(m.rows(), self.cols, self.coeffs.iter().map(|c| m * c).collect())
            .expect("shape")
    }

    /// Right multiplication by a constant matrix.
    pub fn right_mul(&self, m: &ExactMatrix) -> MatrixPoly {
        MatrixPoly::new(self.rows, m.cols(), self.coeffs.iter().map(|c| c * m).collect())
            .expect("shape")
    }

    /// The polynomial `u -> P(u + h)`.
    pub fn shift(&self, h: &Rational) -> MatrixPoly {
        // Binomial expansion of (u + h)^k.
        let n = self.coeffs.len();
        let mut out = vec![ExactMatrix::zeros(self.rows, self.cols); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut binom = Rational::one();
            let mut hp = Rational::one();
            for j in (0..=k).rev() {
                // Coefficient of u^j in (u + h)^k is C(k, j) h^(k - j).
                let w = &binom * &hp;
                out[j] = &out[j] + &c.scale(&w);
                binom = binom * int(j as i64) / int((k - j + 1) as i64);
                hp *= h;
            }
        }
        MatrixPoly::new(self.rows, self.cols, out).expect("shape")
    }
}

/// Lagrange basis polynomials for pairwise distinct nodes.
pub fn lagrange_basis(nodes: &[Rational]) -> Result<Vec<Poly>, ExactError> {
    for (i, a) in nodes.iter().enumerate() {
        if nodes[..i].contains(a) {
            return Err(ExactError::DuplicateNode(a.clone()));
        }
    }
    Ok(nodes
        .iter()
        .enumerate()
        .map(|(i, xi)| {
            let mut p = Poly::one();
            let mut den = Rational::one();
            for (j, xj) in nodes.iter().enumerate() {
                if i != j {
                    p = &p * &Poly::linear(-xj.clone());
                    den *= xi - xj;
                }
            }
            p.scale(&den.recip())
        })
        .collect())
}

/// The unique matrix polynomial of degree below `nodes.len()` with the given values.
pub fn lagrange_interpolate(
    nodes: &[Rational],
    values: &[ExactMatrix],
) -> Result<MatrixPoly, ExactError> {
    if nodes.len() != values.len() || nodes.is_empty() {
        return Err(ExactError::ShapeMismatch);
    }
    let (r, c) = values[0].shape();
    if values.iter().any(|v| v.shape() != (r, c)) {
        return Err(ExactError::ShapeMismatch);
    }
    let basis = lagrange_basis(nodes)?;
    let mut out = MatrixPoly::zero(r, c);
    for (l, v) in basis.iter().zip(values) {
        if !v.is_zero() {
            out = out.try_add(&MatrixPoly::constant(v.clone()).mul_poly(l))?;
        }
    }
    Ok(out)
}

/// Scalar Lagrange interpolation.
pub fn interpolate_scalar(nodes: &[Rational], values: &[Rational]) -> Result<Poly, ExactError> {
    if nodes.len() != values.len() {
        return Err(ExactError::ShapeMismatch);
    }
    let basis = lagrange_basis(nodes)?;
    Ok(basis
        .iter()
        .zip(values)
        .fold(Poly::zero(), |acc, (l, v)| &acc + &l.scale(v)))
}

/// Monic minimal polynomial of a square matrix.
///
/// Computed as the least common multiple of the minimal polynomials of the
/// standard basis vectors, each found from the first linear dependence in its
/// Krylov sequence.
pub fn minimal_polynomial(m: &ExactMatrix) -> Result<Poly, ExactError> {
    if !m.is_square() {
        return Err(ExactError::ShapeMismatch);
    }
    let n = m.rows();
    let mut acc = Poly::one();
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        if apply_poly(m, &acc, &e).iter().all(Zero::is_zero) {
            continue;
        }
        let p = vector_minimal_polynomial(m, &e)?;
        acc = Poly::lcm(&acc, &p);
    }
    Ok(acc)
}

fn apply_poly(m: &ExactMatrix, p: &Poly, v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); v.len()];
    for c in p.coeffs().iter().rev() {
        out = m.mul_vec(&out);
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

fn vector_minimal_polynomial(m: &ExactMatrix, v: &[Rational]) -> Result<Poly, ExactError> {
    let mut krylov: Vec<Vec<Rational>> = vec![v.to_vec()];
    loop {
        let next = m.mul_vec(krylov.last().expect("nonempty"));
        let k = krylov.len();
        let mut a = ExactMatrix::zeros(v.len(), k);
        for (j, col) in krylov.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                a.set(i, j, x.clone());
            }
        }
        // Krylov vectors so far are independent, so any solution is unique.
        if let Some(c) = a.solve_unique(&next)? {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            return Ok(Poly::new(coeffs));
        }
        krylov.push(next);
    }
}
