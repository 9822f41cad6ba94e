//! Brute-force Yangian action by exact linear algebra at sample points.
//!
//! A factor `V_{λ,μ}(h)` is realized inside the `gl_{M+N}` module `V_λ`: the
//! evaluation matrix `δ_ij + E_ji/u` is inverted, its lower-right `N × N`
//! block is extracted and inverted again, and the result is restricted to the
//! schemes whose bottom `M` rows are pinned to `μ`. Tensor products use the
//! coproduct `T_ij ↦ Σ_k T_ik ⊗ T_kj`.

mod drinfeld;
mod families;
mod minors;
mod verify;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num::{One, Zero};
use thiserror::Error;

use crate::classical::{build_gl_module, singular_subspace, GlModule, RepError, Subspace};
use crate::exact::{ExactError, ExactMatrix, Rational};
use crate::spec::{ModuleSpec, YangianFactor};

pub use drinfeld::{drinfeld_from_singular, DrinfeldData};
pub use families::{oracle_families, regular_samples};
pub use minors::{named_minors, permutations, quantum_minor, IndexSeq, NamedMinors};
pub use verify::{verify, verify_rtt, Suite};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("pole at u = {0}")]
    PoleHit(Rational),
    #[error("restricted subspace is not invariant")]
    SubspaceNotInvariant,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("{identity} fails at {point}")]
    RelationViolated { identity: String, point: String },
    #[error("no singular vector")]
    NoSingularVector,
    #[error("singular vectors span {0} dimensions")]
    NonUniqueSingularLine(usize),
    #[error("interpolation: {0}")]
    Interpolation(String),
}

/// An `N × N` matrix of operators on a module, entries indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpBlock {
    n: usize,
    dim: usize,
    entries: Vec<ExactMatrix>,
}

impl OpBlock {
    pub fn new(n: usize, dim: usize, entries: Vec<ExactMatrix>) -> Self {
        assert_eq!(entries.len(), n * n);
        OpBlock { n, dim, entries }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactMatrix {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Assembles the block matrix on `ℂ^N ⊗ W`.
    pub fn to_big(&self) -> ExactMatrix {
        let mut big = ExactMatrix::zeros(self.n * self.dim, self.n * self.dim);
        for i in 0..self.n {
            for j in 0..self.n {
                big.set_block(i * self.dim, j * self.dim, &self.entries[i * self.n + j]);
            }
        }
        big
    }

    pub fn from_big(big: &ExactMatrix, n: usize, dim: usize) -> Self {
        let entries = (0..n * n).map(|k| big.block((k / n) * dim, (k % n) * dim, dim, dim)).collect();
        OpBlock { n, dim, entries }
    }

    /// Inverse as an operator-valued matrix.
    pub fn inverse(&self) -> Result<OpBlock, ExactError> {
        Ok(OpBlock::from_big(&self.to_big().inverse()?, self.n, self.dim))
    }

    pub fn map(&self, f: impl Fn(&ExactMatrix) -> ExactMatrix) -> OpBlock {
        OpBlock { n: self.n, dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }
}

/// A module of the Yangian given by its generator matrix at each point.
pub trait Realization: Sync {
    fn rank(&self) -> usize;
    fn dim(&self) -> usize;
    /// The operators `T_ij(u)`.
    fn generators(&self, u: &Rational) -> Result<Arc<OpBlock>, OracleError>;
}

type Cache = Mutex<HashMap<Rational, Arc<OpBlock>>>;

fn cached(
    cache: &Cache,
    u: &Rational,
    f: impl FnOnce() -> Result<OpBlock, OracleError>,
) -> Result<Arc<OpBlock>, OracleError> {
    if let Some(b) = cache.lock().expect("cache lock").get(u) {
        return Ok(b.clone());
    }
    let b = Arc::new(f()?);
    cache.lock().expect("cache lock").insert(u.clone(), b.clone());
    Ok(b)
}

fn pole(u: &Rational) -> impl Fn(ExactError) -> OracleError + '_ {
    move |e| match e {
        ExactError::SingularMatrix | ExactError::DivisionByZero => OracleError::PoleHit(u.clone()),
        other => OracleError::Exact(other),
    }
}

/// One factor `V_{λ,μ}(h)` realized inside `V_λ`.
pub struct FactorOracle {
    factor: YangianFactor,
    n: usize,
    gl: GlModule,
    sub: Subspace,
}

impl FactorOracle {
    pub fn new(factor: &YangianFactor, n: usize) -> Result<Self, OracleError> {
        let gl = build_gl_module(&factor.lambda)?;
        let sub = singular_subspace(&gl, &factor.mu)?;
        Ok(FactorOracle { factor: factor.clone(), n, gl, sub })
    }

    pub fn gl(&self) -> &GlModule {
        &self.gl
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    pub fn factor(&self) -> &YangianFactor {
        &self.factor
    }

    /// The evaluation generator matrix `δ_ij + E_ji/w` of `gl_{M+N}` on `V_λ`.
    pub fn evaluation_full(&self, w: &Rational) -> Result<OpBlock, OracleError> {
        if w.is_zero() {
            return Err(OracleError::PoleHit(w.clone()));
        }
        let k = self.gl.rank();
        let d = self.gl.dim();
        let inv_w = w.recip();
        let entries = (0..k * k)
            .map(|x| {
                let (i, j) = (x / k + 1, x % k + 1);
                let mut m = self.gl.e(j, i).scale(&inv_w);
                if i == j {
                    m = &m + &ExactMatrix::identity(d);
                }
                m
            })
            .collect();
        Ok(OpBlock::new(k, d, entries))
    }

    /// Image of the generator matrix of rank `N` under the embedding into rank
    /// `M + N`, composed with evaluation, on all of `V_λ` at the point `w`.
    pub fn embedded_full(&self, w: &Rational) -> Result<OpBlock, OracleError> {
        let big_m = self.factor.big_m();
        let d = self.gl.dim();
        let inv = self.evaluation_full(w)?.to_big().inverse().map_err(pole(w))?;
        let idx: Vec<usize> = (big_m * d..(big_m + self.n) * d).collect();
        let block = inv.select(&idx, &idx).inverse().map_err(pole(w))?;
        Ok(OpBlock::from_big(&block, self.n, d))
    }

    /// `T_ij(u)` on `V_{λ,μ}(h)`.
    pub fn generators_at(&self, u: &Rational) -> Result<OpBlock, OracleError> {
        let full = self.embedded_full(&(u + &self.factor.h))?;
        let entries = full
            .entries
            .iter()
            .map(|m| self.sub.restrict(m).ok_or(OracleError::SubspaceNotInvariant))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(OpBlock::new(self.n, self.sub.dim(), entries))
    }
}

/// Coproduct of two generator matrices, `T_ij = Σ_k T_ik ⊗ T_kj`.
pub fn coproduct(a: &OpBlock, b: &OpBlock) -> OpBlock {
    let n = a.n;
    let entries = (0..n * n)
        .map(|x| {
            let (i, j) = (x / n + 1, x % n + 1);
            (1..=n).fold(ExactMatrix::zeros(a.dim * b.dim, a.dim * b.dim), |acc, k| {
                &acc + &a.get(i, k).kron(b.get(k, j))
            })
        })
        .collect();
    OpBlock::new(n, a.dim * b.dim, entries)
}

/// The module `W` of a [`ModuleSpec`], realized factor by factor.
pub struct TensorOracle {
    spec: ModuleSpec,
    factors: Vec<FactorOracle>,
    cache: Cache,
}

impl TensorOracle {
    pub fn new(spec: &ModuleSpec) -> Result<Self, OracleError> {
        let factors = spec
            .factors()
            .iter()
            .map(|f| FactorOracle::new(f, spec.rank()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TensorOracle { spec: spec.clone(), factors, cache: Mutex::new(HashMap::new()) })
    }

    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    pub fn factors(&self) -> &[FactorOracle] {
        &self.factors
    }

    /// Position in the tensor basis of the tuple of factor basis indices.
    pub fn tensor_index(&self, parts: &[usize]) -> usize {
        self.factors.iter().zip(parts).fold(0, |acc, (f, &p)| acc * f.sub.dim() + p)
    }

    /// Factor basis indices of a tensor basis position.
    pub fn split_index(&self, mut idx: usize) -> Vec<usize> {
        let mut parts = vec![0; self.factors.len()];
        for (s, f) in self.factors.iter().enumerate().rev() {
            parts[s] = idx % f.sub.dim();
            idx /= f.sub.dim();
        }
        parts
    }
}

impl Realization for TensorOracle {
    fn rank(&self) -> usize {
        self.spec.rank()
    }

    fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.sub.dim()).product()
    }

    fn generators(&self, u: &Rational) -> Result<Arc<OpBlock>, OracleError> {
        cached(&self.cache, u, || {
            let mut blocks = self.factors.iter().map(|f| f.generators_at(u));
            let first = match blocks.next() {
                Some(b) => b?,
                None => OpBlock::new(
                    self.rank(),
                    1,
                    (0..self.rank() * self.rank())
                        .map(|x| ExactMatrix::scalar(1, if x % (self.rank() + 1) == 0 { Rational::one() } else { Rational::zero() }))
                        .collect(),
                ),
            };
            blocks.try_fold(first, |acc, b| Ok(coproduct(&acc, &b?)))
        })
    }
}

/// Pullback through `T(u) ↦ T(−u)^{-1}`.
pub struct InverseTwist<'a, R: Realization> {
    inner: &'a R,
    cache: Cache,
}

impl<'a, R: Realization> InverseTwist<'a, R> {
    pub fn new(inner: &'a R) -> Self {
        InverseTwist { inner, cache: Mutex::new(HashMap::new()) }
    }
}

impl<R: Realization> Realization for InverseTwist<'_, R> {
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn generators(&self, u: &Rational) -> Result<Arc<OpBlock>, OracleError> {
        cached(&self.cache, u, || {
            let neg = -u.clone();
            self.inner.generators(&neg)?.inverse().map_err(pole(u))
        })
    }
}

/// Pullback through `T_ij(u) ↦ T̃_{N−j+1, N−i+1}(u)` where `T̃ = T^{-1}`.
pub struct ReflectTwist<'a, R: Realization> {
    inner: &'a R,
    cache: Cache,
}

impl<'a, R: Realization> ReflectTwist<'a, R> {
    pub fn new(inner: &'a R) -> Self {
        ReflectTwist { inner, cache: Mutex::new(HashMap::new()) }
    }
}

impl<R: Realization> Realization for ReflectTwist<'_, R> {
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn generators(&self, u: &Rational) -> Result<Arc<OpBlock>, OracleError> {
        cached(&self.cache, u, || {
            let inv = self.inner.generators(u)?.inverse().map_err(pole(u))?;
            let n = self.rank();
            let entries = (0..n * n)
                .map(|x| {
                    let (i, j) = (x / n + 1, x % n + 1);
                    inv.get(n - j + 1, n - i + 1).clone()
                })
                .collect();
            Ok(OpBlock::new(n, self.dim(), entries))
        })
    }
}

/// A deliberately broken family for negative controls: `T_12(u)` gains `u^{-2}·Id`.
pub struct Perturbed<'a, R: Realization> {
    inner: &'a R,
}

impl<'a, R: Realization> Perturbed<'a, R> {
    pub fn new(inner: &'a R) -> Self {
        Perturbed { inner }
    }
}

impl<R: Realization> Realization for Perturbed<'_, R> {
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn generators(&self, u: &Rational) -> Result<Arc<OpBlock>, OracleError> {
        let base = self.inner.generators(u)?;
        if self.rank() < 2 {
            return Ok(base);
        }
        let mut b = (*base).clone();
        let extra = ExactMatrix::scalar(self.dim(), (u * u).recip());
        b.entries[1] = &b.entries[1] + &extra;
        Ok(Arc::new(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn one_dimensional_factor() {
        let spec = ModuleSpec::evaluation(vec![3], frac(1, 2)).unwrap();
        let o = TensorOracle::new(&spec).unwrap();
        let u = frac(2, 7);
        let t = o.generators(&u).unwrap();
        assert_eq!(t.get(1, 1), &ExactMatrix::scalar(1, int(1) + int(3) / (&u + frac(1, 2))));
    }

    #[test]
    fn vector_representation_is_evaluation() {
        let spec = ModuleSpec::vectors(2, &[int(0)]).unwrap();
        let o = TensorOracle::new(&spec).unwrap();
        let gl = o.factors()[0].gl();
        let u = frac(5, 3);
        let t = o.generators(&u).unwrap();
        assert_eq!(t.get(2, 1), &gl.e(1, 2).scale(&u.recip()));
        assert_eq!(t.get(1, 2), &gl.e(2, 1).scale(&u.recip()));
        assert_eq!(t.get(1, 1), &(&ExactMatrix::identity(2) + &gl.e(1, 1).scale(&u.recip())));
    }

    #[test]
    fn one_dimensional_tensor_is_product() {
        let spec = ModuleSpec::new(
            1,
            vec![
                YangianFactor::new(vec![2], vec![], frac(1, 3)),
                YangianFactor::new(vec![-1], vec![], frac(1, 2)),
            ],
        )
        .unwrap();
        let o = TensorOracle::new(&spec).unwrap();
        let u = frac(3, 11);
        let expect = (int(1) + int(2) / (&u + frac(1, 3))) * (int(1) - int(1) / (&u + frac(1, 2)));
        assert_eq!(o.generators(&u).unwrap().get(1, 1), &ExactMatrix::scalar(1, expect));
    }

    #[test]
    fn pinned_factor_is_invariant() {
        let spec = ModuleSpec::new(2, vec![YangianFactor::new(vec![3, 1, 0], vec![2], frac(1, 3))]).unwrap();
        let o = TensorOracle::new(&spec).unwrap();
        assert_eq!(o.dim(), 4);
        assert!(o.generators(&frac(4, 7)).is_ok());
        assert!(matches!(o.generators(&frac(-1, 3)), Err(OracleError::PoleHit(_))));
    }

    #[test]
    fn tensor_index_roundtrip() {
        let spec = ModuleSpec::vectors(3, &[int(0), frac(1, 2)]).unwrap();
        let o = TensorOracle::new(&spec).unwrap();
        for idx in 0..o.dim() {
            assert_eq!(o.tensor_index(&o.split_index(idx)), idx);
        }
    }
}
