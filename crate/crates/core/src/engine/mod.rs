//! Closed-form action of the rescaled Drinfeld generators on a tensor product
//! of factors, in the basis of raising-path vectors indexed by scheme tuples.

mod crossval;

use std::collections::HashMap;

use num::{One, Zero};
use thiserror::Error;

use crate::exact::{int, lagrange_basis, lagrange_interpolate, ExactError, ExactMatrix, MatrixPoly, Poly, Rational, RationalFunction};
use crate::families::Families;
use crate::gz::{diagram_drinfeld_poly, skew_shape, CombError, GzScheme};
use crate::oracle::OracleError;
use crate::par;
use crate::sample::SamplePoints;
use crate::spec::ModuleSpec;

pub use crossval::{crossval, CrossvalOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("factors {0} and {1} have shifts differing by an integer")]
    NonGeneric(usize, usize),
    #[error("eigenvalue nodes collide at {0}")]
    NodesCollide(Rational),
    #[error("rescaled eigenvalue is not a polynomial for m = {0}")]
    NotPolynomial(usize),
    #[error("{family}{m} disagrees with its interpolant at an extra point")]
    InterpolationInconsistent { family: &'static str, m: usize },
    #[error("zero denominator in a matrix element coefficient")]
    DenominatorZero,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// A basis line of the module: one scheme per factor.
pub type SchemeTuple = Vec<GzScheme>;

/// Scheme tuples in canonical order, factor-major.
#[derive(Clone, Debug)]
pub struct TupleBasis {
    tuples: Vec<SchemeTuple>,
    index: HashMap<SchemeTuple, usize>,
}

impl TupleBasis {
    pub fn new(spec: &ModuleSpec) -> Self {
        let mut tuples: Vec<SchemeTuple> = vec![Vec::new()];
        for f in spec.factors() {
            let schemes = f.schemes();
            tuples = tuples
                .iter()
                .flat_map(|t| {
                    schemes.iter().map(move |s| {
                        let mut v = t.clone();
                        v.push(s.clone());
                        v
                    })
                })
                .collect();
        }
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        TupleBasis { tuples, index }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[SchemeTuple] {
        &self.tuples
    }

    pub fn get(&self, i: usize) -> &SchemeTuple {
        &self.tuples[i]
    }

    pub fn index_of(&self, t: &SchemeTuple) -> Option<usize> {
        self.index.get(t).copied()
    }
}

/// `∏_i (u + row_i − i + 1)/(u − i + 1)`, reduced.
pub fn row_eigenvalue(row: &[i64]) -> RationalFunction {
    let shifts = |f: &dyn Fn(usize) -> i64| -> Vec<Rational> { (1..=row.len()).map(|i| int(f(i))).collect() };
    let num = Poly::from_shifts(&shifts(&|i| row[i - 1] - i as i64 + 1));
    let den = Poly::from_shifts(&shifts(&|i| 1 - i as i64));
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// Eigenvalue of `A_m(u)` on the basis line `t`, as a rational function.
pub fn minor_eigenvalue(spec: &ModuleSpec, t: &SchemeTuple, m: usize) -> RationalFunction {
    let mut acc = RationalFunction::from_poly(Poly::one());
    for (f, s) in spec.factors().iter().zip(t) {
        let num = row_eigenvalue(s.row(f.big_m() + m)).shift(&f.h);
        let den = row_eigenvalue(&f.mu).shift(&(&f.h - int(m as i64)));
        acc = acc.mul(&num).div(&den).expect("row eigenvalue is never zero");
    }
    acc
}

/// A zero of the eigenvalue polynomial, labelled by factor and entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub factor: usize,
    pub entry: usize,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenData {
    pub rescaling: Poly,
    pub eigen_poly: Poly,
    pub nodes: Vec<Node>,
}

fn entry_node(spec: &ModuleSpec, t: &SchemeTuple, m: usize, s: usize, i: usize) -> Rational {
    let f = &spec.factors()[s];
    int(i as i64 - t[s].get(f.big_m() + m, i) - 1) - &f.h
}

/// Rescaling polynomial, the polynomial eigenvalue it produces from
/// [`minor_eigenvalue`], and the zeros of that eigenvalue.
pub fn eigen_data(spec: &ModuleSpec, t: &SchemeTuple, m: usize) -> Result<EigenData, EngineError> {
    let rescaling = spec.rescaling(m);
    let mut nodes = Vec::new();
    for (s, f) in spec.factors().iter().enumerate() {
        for i in 1..=f.big_m() + m {
            nodes.push(Node { factor: s, entry: i, value: entry_node(spec, t, m, s, i) });
        }
    }
    let eigen_poly = Poly::from_shifts(&nodes.iter().map(|n| -n.value.clone()).collect::<Vec<_>>());
    let scaled = RationalFunction::from_poly(rescaling.clone()).mul(&minor_eigenvalue(spec, t, m));
    if scaled.as_poly() != Some(&eigen_poly) {
        return Err(EngineError::NotPolynomial(m));
    }
    for (k, a) in nodes.iter().enumerate() {
        if nodes[..k].iter().any(|b| b.value == a.value) {
            return Err(EngineError::NodesCollide(a.value.clone()));
        }
    }
    Ok(EigenData { rescaling, eigen_poly, nodes })
}

fn require_generic(spec: &ModuleSpec) -> Result<(), EngineError> {
    match spec.integral_shift_pair() {
        Some((r, s)) => Err(EngineError::NonGeneric(r, s)),
        None => Ok(()),
    }
}

struct Coefficients<'a> {
    spec: &'a ModuleSpec,
    t: &'a SchemeTuple,
    tops: Vec<GzScheme>,
}

impl Coefficients<'_> {
    /// Top-scheme entry of factor `r` at `(row, j)`.
    fn top(&self, r: usize, row: usize, j: usize) -> i64 {
        self.tops[r].get(row, j)
    }

    fn cur(&self, r: usize, row: usize, j: usize) -> i64 {
        self.t[r].get(row, j)
    }

    fn big_m(&self, r: usize) -> usize {
        self.spec.factors()[r].big_m()
    }

    fn shift_gap(&self, r: usize, s: usize) -> Rational {
        &self.spec.factors()[r].h - &self.spec.factors()[s].h
    }

    fn raising(&self, m: usize, i: usize, s: usize) -> Rational {
        let x = self.cur(s, self.big_m(s) + m, i);
        let mut acc = Rational::one();
        for r in 0..self.spec.len() {
            let gap = self.shift_gap(r, s);
            let up = self.big_m(r) + m + 1;
            for j in 1..=up {
                let y = if j <= i { self.top(r, up, j) } else { self.cur(r, up, j) };
                acc *= int(y - x + i as i64 - j as i64) + &gap;
            }
            let down = self.big_m(r) + m - 1;
            for j in 1..=down {
                let y = if j < i { self.top(r, down, j) } else { self.cur(r, down, j) };
                acc *= int(y - x + i as i64 - j as i64 - 1) + &gap;
            }
        }
        acc
    }

    fn lowering(&self, m: usize, i: usize, s: usize) -> Result<Rational, EngineError> {
        let x = self.cur(s, self.big_m(s) + m, i);
        let mut acc = Rational::one();
        for r in 0..self.spec.len() {
            let gap = self.shift_gap(r, s);
            let up = self.big_m(r) + m + 1;
            for j in 1..=i.min(up) {
                let offset = i as i64 - j as i64 + 1;
                let den = int(self.top(r, up, j) - x + offset) + &gap;
                if den.is_zero() {
                    return Err(EngineError::DenominatorZero);
                }
                acc *= (int(self.cur(r, up, j) - x + offset) + &gap) / den;
            }
            let down = self.big_m(r) + m - 1;
            for j in 1..i.min(self.big_m(r) + m) {
                let offset = i as i64 - j as i64;
                let den = int(self.top(r, down, j) - x + offset) + &gap;
                if den.is_zero() {
                    return Err(EngineError::DenominatorZero);
                }
                acc *= (int(self.cur(r, down, j) - x + offset) + &gap) / den;
            }
        }
        Ok(acc)
    }
}

fn coefficients<'a>(spec: &'a ModuleSpec, t: &'a SchemeTuple) -> Coefficients<'a> {
    Coefficients { spec, t, tops: spec.factors().iter().map(|f| f.top()).collect() }
}

/// Coefficient of the raising matrix element of `c_m` at the node `(m, i)` of factor `s`.
pub fn raising_coeff(spec: &ModuleSpec, t: &SchemeTuple, m: usize, i: usize, s: usize) -> Rational {
    coefficients(spec, t).raising(m, i, s)
}

/// Coefficient of the lowering matrix element of `b_m` at the node `(m, i)` of factor `s`.
pub fn lowering_coeff(spec: &ModuleSpec, t: &SchemeTuple, m: usize, i: usize, s: usize) -> Result<Rational, EngineError> {
    coefficients(spec, t).lowering(m, i, s)
}

/// The tuple with entry `(M^{(s)}+m, i)` of factor `s` moved by `delta`, if
/// the result is still a basis line.
pub fn neighbour(spec: &ModuleSpec, t: &SchemeTuple, m: usize, i: usize, s: usize, delta: i64) -> Option<SchemeTuple> {
    let f = &spec.factors()[s];
    let mut out = t.clone();
    let row = f.big_m() + m;
    out[s].set(row, i, t[s].get(row, i) + delta);
    out[s].is_scheme_for(&f.lambda, &f.mu).then_some(out)
}

/// One nodal value used to build `b_m` and `c_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeEntry {
    pub m: usize,
    pub column: usize,
    pub factor: usize,
    pub entry: usize,
    pub node: Rational,
    /// Lowered neighbour and its coefficient, when the neighbour is a basis line.
    pub lowered: Option<(usize, Rational)>,
    /// Raised neighbour and its coefficient, when the neighbour is a basis line.
    pub raised: Option<(usize, Rational)>,
}

/// The realized families together with the tables they were built from.
#[derive(Clone, Debug)]
pub struct GtAction {
    pub spec: ModuleSpec,
    pub basis: TupleBasis,
    pub families: Families,
    pub nodes: Vec<NodeEntry>,
}

fn column_family(
    dim: usize,
    columns: Vec<Vec<(Poly, usize, Rational)>>,
    degree_bound: usize,
) -> Result<MatrixPoly, EngineError> {
    let mut coeffs = vec![ExactMatrix::zeros(dim, dim); degree_bound.max(1)];
    for (col, terms) in columns.into_iter().enumerate() {
        for (basis_poly, row, value) in terms {
            for (p, c) in basis_poly.coeffs().iter().enumerate() {
                let slot = coeffs[p].get_mut(row, col);
                *slot += c * &value;
            }
        }
    }
    Ok(MatrixPoly::new(dim, dim, coeffs)?)
}

/// Builds `a_m`, `b_m`, `c_m`, `d_m` on the module from the nodal formulas.
#[allow(clippy::needless_range_loop)]
pub fn build_action(spec: &ModuleSpec, seed: u64) -> Result<GtAction, EngineError> {
    require_generic(spec)?;
    let n = spec.rank();
    let basis = TupleBasis::new(spec);
    let dim = basis.len();
    let eigen: Vec<Vec<EigenData>> = par::try_map(basis.tuples(), |t| (0..=n).map(|m| eigen_data(spec, t, m)).collect())?;
    let a: Vec<MatrixPoly> = (0..=n).map(|m| MatrixPoly::diagonal(&eigen.iter().map(|e| e[m].eigen_poly.clone()).collect::<Vec<_>>())).collect();

    let mut b = vec![MatrixPoly::zero(dim, dim)];
    let mut c = b.clone();
    let mut nodes = Vec::new();
    for m in 1..n {
        let per_column = par::try_map(&(0..dim).collect::<Vec<_>>(), |&col| -> Result<_, EngineError> {
            let t = basis.get(col);
            let data = &eigen[col][m];
            let values: Vec<Rational> = data.nodes.iter().map(|x| x.value.clone()).collect();
            let lagrange = lagrange_basis(&values)?;
            let co = coefficients(spec, t);
            let mut b_terms = Vec::new();
            let mut c_terms = Vec::new();
            let mut entries = Vec::new();
            for (node, l) in data.nodes.iter().zip(lagrange) {
                let (s, i) = (node.factor, node.entry);
                let lower = neighbour(spec, t, m, i, s, -1).map(|x| basis.index_of(&x).expect("basis line"));
                let upper = neighbour(spec, t, m, i, s, 1).map(|x| basis.index_of(&x).expect("basis line"));
                let lowered = lower.map(|row| co.lowering(m, i, s).map(|v| (row, v))).transpose()?;
                let raised = upper.map(|row| (row, co.raising(m, i, s)));
                if let Some((row, v)) = &lowered {
                    b_terms.push((l.clone(), *row, v.clone()));
                }
                if let Some((row, v)) = &raised {
                    c_terms.push((l.clone(), *row, -v.clone()));
                }
                entries.push(NodeEntry { m, column: col, factor: s, entry: i, node: node.value.clone(), lowered, raised });
            }
            Ok((b_terms, c_terms, entries))
        })?;
        let mut b_cols = Vec::with_capacity(dim);
        let mut c_cols = Vec::with_capacity(dim);
        for (bt, ct, e) in per_column {
            b_cols.push(bt);
            c_cols.push(ct);
            nodes.extend(e);
        }
        b.push(column_family(dim, b_cols, spec.rescaling_degree(m))?);
        c.push(column_family(dim, c_cols, spec.rescaling_degree(m))?);
    }

    let mut d = vec![MatrixPoly::zero(dim, dim)];
    for m in 1..n {
        d.push(quadratic_d(spec, &a, &b[m], &c[m], m, seed)?);
    }
    Ok(GtAction { spec: spec.clone(), basis, families: Families { n, dim, a, b, c, d }, nodes })
}

/// `d_m(u) = (c_m(u) b_m(u−1) + a_{m+1}(u) a_{m−1}(u−1)) a_m(u−1)^{-1}`,
/// interpolated with degree bound `r_m` and checked at one extra point.
fn quadratic_d(
    spec: &ModuleSpec,
    a: &[MatrixPoly],
    b: &MatrixPoly,
    c: &MatrixPoly,
    m: usize,
    seed: u64,
) -> Result<MatrixPoly, EngineError> {
    let dim = b.shape().0;
    let need = spec.rescaling_degree(m) + 2;
    let mut points = SamplePoints::new(seed ^ ((m as u64) << 8));
    let mut samples: Vec<(Rational, ExactMatrix)> = Vec::with_capacity(need);
    while samples.len() < need {
        let u = points.next_point();
        let back = &u - int(1);
        let am = a[m].eval(&back);
        if (0..dim).any(|i| am.get(i, i).is_zero()) {
            continue;
        }
        let inv = ExactMatrix::diag((0..dim).map(|i| am.get(i, i).recip()).collect());
        let sum = &(&c.eval(&u) * &b.eval(&back)) + &(&a[m + 1].eval(&u) * &a[m - 1].eval(&back));
        samples.push((u, &sum * &inv));
    }
    let (fit, extra) = samples.split_at(need - 1);
    let nodes: Vec<Rational> = fit.iter().map(|x| x.0.clone()).collect();
    let values: Vec<ExactMatrix> = fit.iter().map(|x| x.1.clone()).collect();
    let d = lagrange_interpolate(&nodes, &values)?;
    if extra.iter().any(|(u, v)| &d.eval(u) != v) {
        return Err(EngineError::InterpolationInconsistent { family: "d", m });
    }
    Ok(d)
}

/// The basis line of the all-top tuple, verified to be singular.
pub fn singular_vector(action: &GtAction) -> Result<usize, EngineError> {
    let f = &action.families;
    let top: SchemeTuple = action.spec.factors().iter().map(|x| x.top()).collect();
    let idx = action.basis.index_of(&top).ok_or_else(|| EngineError::VerificationFailed("top tuple missing".into()))?;
    for m in 1..f.n {
        if f.c(m).coeffs().iter().any(|k| (0..f.dim).any(|r| !k.get(r, idx).is_zero())) {
            return Err(EngineError::VerificationFailed(format!("c{m} does not annihilate the top tuple")));
        }
    }
    for m in 0..=f.n {
        let col_ok = f.a(m).coeffs().iter().all(|k| (0..f.dim).all(|r| r == idx || k.get(r, idx).is_zero()));
        if !col_ok {
            return Err(EngineError::VerificationFailed(format!("top tuple is not an eigenvector of a{m}")));
        }
    }
    Ok(idx)
}

/// Operator word `[(l, point)]`, read left to right, whose product applied to
/// the top vector gives the basis vector of `target`.
///
/// Entries of `target` above the top tuple give empty ranges, so arrays
/// outside the scheme set are accepted.
pub fn raising_path(spec: &ModuleSpec, target: &SchemeTuple) -> Vec<(usize, Rational)> {
    let n = spec.rank();
    let tops: Vec<GzScheme> = spec.factors().iter().map(|f| f.top()).collect();
    let max_j = spec.factors().iter().map(|f| f.big_m()).max().unwrap_or(0) + n;
    let mut pairs: Vec<(usize, usize)> = (1..n).flat_map(|l| (1..=max_j).map(move |j| (l, j))).collect();
    // (m, i) precedes (l, j) when i < j, or i = j and m > l.
    pairs.sort_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)));
    let mut word = Vec::new();
    for (l, j) in pairs {
        for (r, f) in spec.factors().iter().enumerate() {
            let row = f.big_m() + l;
            if j > row {
                continue;
            }
            let lam = target[r].get(row, j);
            let top_entry = tops[r].get(row, j);
            let nu = int(j as i64 - lam - 1) - &f.h;
            for step in 1..=(top_entry - lam).max(0) {
                word.push((l, &nu - int(step)));
            }
        }
    }
    word
}

/// Applies a word to a vector using the `b` family, rightmost factor first.
pub fn apply_word(families: &Families, word: &[(usize, Rational)], v: &[Rational]) -> Vec<Rational> {
    word.iter().rev().fold(v.to_vec(), |acc, (l, x)| families.b(*l).eval(x).mul_vec(&acc))
}

/// `P_m(u) = ∏_s P_{m, λ/μ}(u + h)` for `m = 1..N`.
pub fn drinfeld_polys(spec: &ModuleSpec) -> Result<Vec<Poly>, EngineError> {
    let n = spec.rank();
    (1..n)
        .map(|m| {
            spec.factors().iter().try_fold(Poly::one(), |acc, f| {
                let p = diagram_drinfeld_poly(&skew_shape(&f.lambda, &f.mu)?, m, n)?;
                Ok(&acc * &p.shift(&f.h))
            })
        })
        .collect()
}

/// Result of comparing eigenvalue tuples over the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumCheck {
    pub simple: bool,
    /// Two basis lines with equal eigenvalues, when the spectrum is not simple.
    pub collision: Option<(usize, usize)>,
}

/// Whether the tuple of eigenvalue functions separates the basis lines.
pub fn simple_spectrum_check(spec: &ModuleSpec) -> SpectrumCheck {
    let basis = TupleBasis::new(spec);
    let n = spec.rank();
    let mut seen: HashMap<Vec<RationalFunction>, usize> = HashMap::new();
    for (idx, t) in basis.tuples().iter().enumerate() {
        let key: Vec<RationalFunction> = (1..=n).map(|m| minor_eigenvalue(spec, t, m)).collect();
        if let Some(&prev) = seen.get(&key) {
            return SpectrumCheck { simple: false, collision: Some((prev, idx)) };
        }
        seen.insert(key, idx);
    }
    SpectrumCheck { simple: true, collision: None }
}
