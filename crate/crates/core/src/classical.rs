//! Irreducible `gl_K` modules in the Gelfand-Zetlin basis.

use std::collections::HashMap;

use num::Zero;
use thiserror::Error;

use crate::exact::{int, ExactMatrix, Rational};
use crate::gz::{check_weight, enumerate_schemes, enumerate_schemes_lm, CombError, GzScheme};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error("gl relation [E{0}{1}, E{2}{3}] fails")]
    RelationCheckFailed(usize, usize, usize, usize),
    #[error("no scheme with top row {lambda:?} restricts to {mu:?}")]
    EmptySubspace { lambda: Vec<i64>, mu: Vec<i64> },
    #[error("singular subspace check failed: {0}")]
    NotSingular(String),
}

/// The module `V_λ` of `gl_K` with matrices of all `E_ij`.
#[derive(Clone, Debug)]
pub struct GlModule {
    k: usize,
    lambda: Vec<i64>,
    basis: Vec<GzScheme>,
    index: HashMap<GzScheme, usize>,
    gens: Vec<ExactMatrix>,
}

impl GlModule {
    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[GzScheme] {
        &self.basis
    }

    pub fn index_of(&self, s: &GzScheme) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Matrix of `E_ij`, 1-based.
    pub fn e(&self, i: usize, j: usize) -> &ExactMatrix {
        &self.gens[(i - 1) * self.k + (j - 1)]
    }

    /// Checks `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj` for all index quadruples.
    pub fn check_relations(&self) -> Result<(), RepError> {
        let k = self.k;
        let zero = ExactMatrix::zeros(self.dim(), self.dim());
        for i in 1..=k {
            for j in 1..=k {
                for a in 1..=k {
                    for b in 1..=k {
                        let lhs = self.e(i, j).commutator(self.e(a, b));
                        let mut rhs = zero.clone();
                        if j == a {
                            rhs = &rhs + self.e(i, b);
                        }
                        if b == i {
                            rhs = &rhs - self.e(a, j);
                        }
                        if lhs != rhs {
                            return Err(RepError::RelationCheckFailed(i, j, a, b));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Shifted entry `l_{ki} = λ_{ki} − i + 1`.
fn shifted(s: &GzScheme, k: usize, i: usize) -> Rational {
    int(s.get(k, i) - i as i64 + 1)
}

/// Builds `V_λ` for `gl_K` and checks the full commutation relations.
pub fn build_gl_module(lambda: &[i64]) -> Result<GlModule, RepError> {
    check_weight(lambda)?;
    let k = lambda.len();
    let basis = enumerate_schemes(lambda)?;
    let index: HashMap<GzScheme, usize> = basis.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let d = basis.len();
    let mut gens = vec![ExactMatrix::zeros(d, d); k * k];
    let slot = |i: usize, j: usize| (i - 1) * k + (j - 1);

    for (col, s) in basis.iter().enumerate() {
        for r in 1..=k {
            let w = s.row(r).iter().sum::<i64>() - s.row(r - 1).iter().sum::<i64>();
            gens[slot(r, r)].set(col, col, int(w));
        }
        for r in 1..k {
            for i in 1..=r {
                let denom: Rational = (1..=r)
                    .filter(|&j| j != i)
                    .map(|j| shifted(s, r, i) - shifted(s, r, j))
                    .product();
                let mut up = s.clone();
                up.set(r, i, s.get(r, i) + 1);
                if let Some(&row) = index.get(&up) {
                    let num: Rational = (1..=r + 1).map(|j| shifted(s, r, i) - shifted(s, r + 1, j)).product();
                    gens[slot(r, r + 1)].set(row, col, -(num / &denom));
                }
                let mut down = s.clone();
                down.set(r, i, s.get(r, i) - 1);
                if let Some(&row) = index.get(&down) {
                    let num: Rational = (1..r).map(|j| shifted(s, r, i) - shifted(s, r - 1, j)).product();
                    gens[slot(r + 1, r)].set(row, col, num / &denom);
                }
            }
        }
    }
    // Remaining root vectors from adjacent ones: E_ij = [E_{i,i±1}, E_{i±1,j}].
    for gap in 2..k {
        for i in 1..=k - gap {
            let j = i + gap;
            gens[slot(i, j)] = gens[slot(i, i + 1)].commutator(&gens[slot(i + 1, j)]);
            gens[slot(j, i)] = gens[slot(j, j - 1)].commutator(&gens[slot(j - 1, i)]);
        }
    }
    let m = GlModule { k, lambda: lambda.to_vec(), basis, index, gens };
    m.check_relations()?;
    Ok(m)
}

/// The span of basis vectors whose schemes lie in `S_{λ,μ}`.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub mu: Vec<i64>,
    pub schemes: Vec<GzScheme>,
    /// Position of each scheme in the ambient basis.
    pub inclusion: Vec<usize>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.schemes.len()
    }

    /// Restricts an ambient operator, failing if the subspace is not invariant.
    pub fn restrict(&self, op: &ExactMatrix) -> Option<ExactMatrix> {
        let inside: Vec<bool> = {
            let mut v = vec![false; op.rows()];
            for &i in &self.inclusion {
                v[i] = true;
            }
            v
        };
        for &c in &self.inclusion {
            for (r, &ok) in inside.iter().enumerate() {
                if !ok && !op.get(r, c).is_zero() {
                    return None;
                }
            }
        }
        Some(op.select(&self.inclusion, &self.inclusion))
    }
}

/// Vectors of `V_λ` that are `gl_M` highest weight vectors of weight `μ`.
pub fn singular_subspace(m: &GlModule, mu: &[i64]) -> Result<Subspace, RepError> {
    check_weight(mu)?;
    let big_m = mu.len();
    if big_m >= m.rank() {
        return Err(RepError::NotSingular("mu must have fewer parts than lambda".into()));
    }
    let schemes = enumerate_schemes_lm(m.lambda(), mu)?;
    if schemes.is_empty() {
        return Err(RepError::EmptySubspace { lambda: m.lambda().to_vec(), mu: mu.to_vec() });
    }
    let inclusion: Vec<usize> = schemes.iter().map(|s| m.index_of(s).expect("scheme in ambient basis")).collect();
    for &c in &inclusion {
        for i in 1..=big_m {
            if m.e(i, i).get(c, c) != &int(mu[i - 1]) {
                return Err(RepError::NotSingular(format!("weight differs at E{i}{i}")));
            }
            for j in i + 1..=big_m {
                if (0..m.dim()).any(|r| !m.e(i, j).get(r, c).is_zero()) {
                    return Err(RepError::NotSingular(format!("E{i}{j} does not annihilate")));
                }
            }
        }
    }
    Ok(Subspace { mu: mu.to_vec(), schemes, inclusion })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_gl2() {
        let m = build_gl_module(&[1, 0]).unwrap();
        assert_eq!(m.dim(), 2);
        // Basis order: λ11 = 1 first.
        assert_eq!(m.e(2, 1).get(1, 0), &int(1));
        assert_eq!(m.e(1, 2).get(0, 1), &int(1));
        assert_eq!(m.e(1, 1), &ExactMatrix::diag(vec![int(1), int(0)]));
    }

    #[test]
    fn one_dimensional() {
        let m = build_gl_module(&[5]).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.e(1, 1).get(0, 0), &int(5));
    }

    fn casimir(m: &GlModule) -> ExactMatrix {
        let d = m.dim();
        let mut c = ExactMatrix::zeros(d, d);
        for i in 1..=m.rank() {
            for j in 1..=m.rank() {
                c = &c + &(m.e(i, j) * m.e(j, i));
            }
        }
        c
    }

    /// `Σ λ_i (λ_i + K + 1 − 2i)`.
    fn casimir_value(lambda: &[i64]) -> i64 {
        let k = lambda.len() as i64;
        lambda.iter().enumerate().map(|(i, &l)| l * (l + k + 1 - 2 * (i as i64 + 1))).sum()
    }

    #[test]
    fn casimir_scalars() {
        for lambda in [vec![2, 1, 0], vec![1, 0, -1], vec![3, 1, 0, 0], vec![2, 0]] {
            let m = build_gl_module(&lambda).unwrap();
            assert_eq!(casimir(&m), ExactMatrix::scalar(m.dim(), int(casimir_value(&lambda))));
        }
        assert_eq!(casimir_value(&[2, 1, 0]), 9);
        assert_eq!(casimir_value(&[1, 0, -1]), 6);
    }

    #[test]
    fn highest_weight_and_grading() {
        for lambda in [vec![2, 1, 0], vec![2, 1, 1, 0], vec![3, 0, -1]] {
            let m = build_gl_module(&lambda).unwrap();
            let k = m.rank();
            assert_eq!(m.basis()[0], crate::gz::top_scheme(&lambda, &[]).unwrap());
            for i in 1..=k {
                assert_eq!(m.e(i, i).get(0, 0), &int(lambda[i - 1]));
                for j in i + 1..=k {
                    assert!(m.e(i, j).col(0).iter().all(Zero::is_zero));
                }
            }
            let mut grading = ExactMatrix::zeros(m.dim(), m.dim());
            for i in 1..=k {
                grading = &grading + &m.e(i, i).scale(&int((k - i + 1) as i64));
            }
            let degrees = m.basis().iter().map(|s| int(s.degree())).collect();
            assert_eq!(grading, ExactMatrix::diag(degrees));
        }
    }

    #[test]
    fn singular_subspaces() {
        let m = build_gl_module(&[1, 0]).unwrap();
        assert_eq!(singular_subspace(&m, &[]).unwrap().dim(), 2);
        let m = build_gl_module(&[3, 1, 0]).unwrap();
        assert_eq!(singular_subspace(&m, &[2]).unwrap().dim(), 4);
        let m = build_gl_module(&[1, 1]).unwrap();
        assert!(matches!(singular_subspace(&m, &[3]), Err(RepError::EmptySubspace { .. })));
        let m = build_gl_module(&[2, 1, 0, 0]).unwrap();
        let s = singular_subspace(&m, &[1, 0]).unwrap();
        assert!(s.dim() > 0);
    }
}
