//! Pointwise identity suites for realized modules.

use num::{One, Zero};

use crate::exact::{int, ExactMatrix, Rational};
use crate::gz::GzScheme;
use crate::par;
use crate::report::Report;
use crate::sample::SamplePoints;
use crate::spec::ModuleSpec;

use super::minors::{named_minors, quantum_minor, IndexSeq};
use super::{FactorOracle, OpBlock, OracleError, Realization, InverseTwist, ReflectTwist, TensorOracle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Ternary relation and the relations among named minors.
    Rtt,
    /// Commutation of minors with generators and of `T` with `T^{-1}`.
    Minors,
    /// Multiplicativity of minors over tensor factors and triangularity.
    Coproduct,
    /// The two inverting automorphisms and their action on minors.
    Twists,
    /// Minors of the embedded subalgebra versus minors of the big algebra.
    Embedding,
    /// Diagonal action of `A_m` with the expected eigenvalues.
    Eigenvalues,
    /// Degree shifts of generators and annihilation of the top vector.
    Grading,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Rtt,
        Suite::Minors,
        Suite::Coproduct,
        Suite::Twists,
        Suite::Embedding,
        Suite::Eigenvalues,
        Suite::Grading,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rtt => "rtt",
            Suite::Minors => "minors",
            Suite::Coproduct => "coproduct",
            Suite::Twists => "twists",
            Suite::Embedding => "embedding",
            Suite::Eigenvalues => "eigenvalues",
            Suite::Grading => "grading",
        }
    }

    /// Accepts every [`Suite::name`], plus `tau` for the twist suite.
    pub fn parse(s: &str) -> Option<Suite> {
        if s == "tau" {
            return Some(Suite::Twists);
        }
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

type Check = Result<Option<String>, OracleError>;

fn mismatch(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(what)
}

trait PointLabel {
    fn label(&self) -> String;
}

impl PointLabel for Rational {
    fn label(&self) -> String {
        format!("u = {self}")
    }
}

impl PointLabel for (Rational, Rational) {
    fn label(&self) -> String {
        format!("u = {}, v = {}", self.0, self.1)
    }
}

/// Runs `f` at each point, skipping poles, and records one line.
fn record<T: Sync + PointLabel>(
    report: &mut Report,
    name: &str,
    points: &[T],
    f: impl Fn(&T) -> Check + Sync + Send,
) -> Result<(), OracleError> {
    let results = par::map(points, |p| f(p));
    let mut checked = 0;
    for (p, r) in points.iter().zip(results) {
        match r {
            Ok(None) => checked += 1,
            Ok(Some(detail)) => {
                report.push(name, false, format!("{detail} at {}", p.label()));
                return Ok(());
            }
            Err(OracleError::PoleHit(_)) => {}
            Err(e) => return Err(e),
        }
    }
    report.push(name, checked > 0, format!("{checked} points"));
    Ok(())
}

/// `(u−v)[T_ab(u), T_cd(v)] = T_cb(v)T_ad(u) − T_cb(u)T_ad(v)` for all indices.
pub fn rtt_at<R: Realization + ?Sized>(rep: &R, u: &Rational, v: &Rational) -> Check {
    let tu = rep.generators(u)?;
    let tv = rep.generators(v)?;
    let n = rep.rank();
    let diff = u - v;
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for d in 1..=n {
                    let lhs = tu.get(a, b).commutator(tv.get(c, d)).scale(&diff);
                    let rhs = &(tv.get(c, b) * tu.get(a, d)) - &(tu.get(c, b) * tv.get(a, d));
                    if lhs != rhs {
                        return Ok(Some(format!("indices ({a},{b},{c},{d})")));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// The commutation relations among named minors at `(u, v)`.
pub fn minor_relations_at<R: Realization + ?Sized>(rep: &R, u: &Rational, v: &Rational) -> Check {
    let n = rep.rank();
    let x = named_minors(rep, u)?;
    let y = named_minors(rep, v)?;
    let back = named_minors(rep, &(u - int(1)))?;
    let diff = u - v;
    let comm = |p: &ExactMatrix, q: &ExactMatrix| p.commutator(q).is_zero();
    for m in 1..=n {
        for k in 1..n {
            if m != k && !comm(x.a(m), y.b(k)) {
                return Ok(Some(format!("[A{m}(u), B{k}(v)] != 0")));
            }
        }
    }
    for m in 1..n {
        for k in 1..n {
            if m != k && !comm(x.c(m), y.b(k)) {
                return Ok(Some(format!("[C{m}(u), B{k}(v)] != 0")));
            }
            if m.abs_diff(k) != 1 && !comm(x.b(m), y.b(k)) {
                return Ok(Some(format!("[B{m}(u), B{k}(v)] != 0")));
            }
        }
        let lhs = x.a(m).commutator(y.b(m)).scale(&diff);
        let rhs = &(x.b(m) * y.a(m)) - &(y.b(m) * x.a(m));
        if lhs != rhs {
            return Ok(Some(format!("A{m}/B{m} exchange relation")));
        }
        let lhs = x.c(m).commutator(y.b(m)).scale(&diff);
        let rhs = &(x.d(m) * y.a(m)) - &(y.d(m) * x.a(m));
        if lhs != rhs {
            return Ok(Some(format!("C{m}/B{m} exchange relation")));
        }
        let lhs = x.c(m) * back.b(m);
        let rhs = &(x.d(m) * back.a(m)) - &(x.a(m + 1) * back.a(m - 1));
        if lhs != rhs {
            return Ok(Some(format!("C{m}(u)B{m}(u-1) quadratic relation")));
        }
    }
    Ok(None)
}

/// All increasing sequences of length `m` in `1..=n`.
pub fn subsets(n: usize, m: usize) -> Vec<IndexSeq> {
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSeq>) {
        if cur.len() == m {
            out.push(IndexSeq::new(cur.clone(), n).expect("increasing"));
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, m, &mut Vec::new(), &mut out);
    out
}

/// Sign of the permutation taking `(i, complement of i)` to `(j, complement of j)`.
fn complement_sign(i: &IndexSeq, j: &IndexSeq, n: usize) -> i64 {
    let sign = |s: &IndexSeq| -> i64 {
        let full: Vec<usize> = s.entries().iter().copied().chain(s.complement(n).entries().iter().copied()).collect();
        let inv = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| full[a] > full[b]).count();
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    };
    sign(i) * sign(j)
}

fn scalar_of(m: &ExactMatrix) -> Option<Rational> {
    let c = m.get(0, 0).clone();
    (m == &ExactMatrix::scalar(m.rows(), c.clone())).then_some(c)
}

fn points(seed: u64, k: usize) -> Vec<Rational> {
    SamplePoints::new(seed).take(k)
}

fn pairs(seed: u64, k: usize) -> Vec<(Rational, Rational)> {
    let p = points(seed, 2 * k);
    p.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect()
}

fn suite_rtt<R: Realization + ?Sized>(o: &R, report: &mut Report, k: usize, seed: u64) -> Result<(), OracleError> {
    let pts = pairs(seed, k);
    record(report, "ternary relation R(u-v) T1(u) T2(v) = T2(v) T1(u) R(u-v)", &pts, |(u, v)| rtt_at(o, u, v))?;
    record(report, "commutation and quadratic relations of A, B, C, D", &pts, |(u, v)| minor_relations_at(o, u, v))
}

fn suite_minors(o: &TensorOracle, report: &mut Report, k: usize, seed: u64) -> Result<(), OracleError> {
    let n = o.rank();
    let pts = pairs(seed, k);
    record(report, "[T_ij(u), Tinv_kl(v)] = 0 for i != l, k != j", &pts, |(u, v)| {
        let t = o.generators(u)?;
        let inv = o.generators(v)?.inverse().map_err(|_| OracleError::PoleHit(v.clone()))?;
        for i in 1..=n {
            for j in 1..=n {
                for kk in 1..=n {
                    for l in 1..=n {
                        if i != l && kk != j && !t.get(i, j).commutator(inv.get(kk, l)).is_zero() {
                            return Ok(Some(format!("indices ({i},{j},{kk},{l})")));
                        }
                    }
                }
            }
        }
        Ok(None)
    })?;
    record(report, "minors commute with their own entries", &pts, |(u, v)| {
        let t = o.generators(v)?;
        for m in 1..=n {
            for i in subsets(n, m) {
                for j in subsets(n, m) {
                    let q = quantum_minor(o, &i, &j, u)?;
                    for &a in i.entries() {
                        for &b in j.entries() {
                            if !q.commutator(t.get(a, b)).is_zero() {
                                return Ok(Some(format!("Q_{i}{j} with T_{a}{b}")));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    })?;
    record(report, "quantum determinant is central", &pts, |(u, v)| {
        let q = quantum_minor(o, &IndexSeq::initial(n), &IndexSeq::initial(n), u)?;
        let t = o.generators(v)?;
        for i in 1..=n {
            for j in 1..=n {
                if !q.commutator(t.get(i, j)).is_zero() {
                    return Ok(Some(format!("T_{i}{j}")));
                }
            }
        }
        Ok(None)
    })
}

fn suite_coproduct(o: &TensorOracle, report: &mut Report, k: usize, seed: u64) -> Result<(), OracleError> {
    let n = o.rank();
    let spec = o.spec();
    if spec.len() < 2 {
        report.push("coproduct identities (single factor, nothing to split)", true, "");
        return Ok(());
    }
    let left = TensorOracle::new(&ModuleSpec::new(n, spec.factors()[..1].to_vec()).map_err(|e| OracleError::Interpolation(e.to_string()))?)?;
    let right = TensorOracle::new(&ModuleSpec::new(n, spec.factors()[1..].to_vec()).map_err(|e| OracleError::Interpolation(e.to_string()))?)?;
    let singles: Vec<TensorOracle> = spec
        .factors()
        .iter()
        .map(|f| TensorOracle::new(&ModuleSpec::new(n, vec![f.clone()]).expect("valid factor")))
        .collect::<Result<_, _>>()?;
    let pts = points(seed, k);
    record(report, "quantum determinant is multiplicative over factors", &pts, |u| {
        let full = IndexSeq::initial(n);
        let whole = quantum_minor(o, &full, &full, u)?;
        let mut prod = ExactMatrix::identity(1);
        for s in &singles {
            prod = prod.kron(&quantum_minor(s, &full, &full, u)?);
        }
        Ok(mismatch(whole == prod, || "determinant".into()))
    })?;
    record(report, "minors of a tensor product split over intermediate indices", &pts, |u| {
        for m in 1..=n {
            let seqs = subsets(n, m);
            for i in &seqs {
                for j in &seqs {
                    let whole = quantum_minor(o, i, j, u)?;
                    let mut sum = ExactMatrix::zeros(o.dim(), o.dim());
                    for kk in &seqs {
                        let a = quantum_minor(&left, i, kk, u)?;
                        let b = quantum_minor(&right, kk, j, u)?;
                        sum = &sum + &a.kron(&b);
                    }
                    if whole != sum {
                        return Ok(Some(format!("Q_{i}{j}")));
                    }
                }
            }
        }
        Ok(None)
    })?;
    let degrees: Vec<Vec<i64>> = (0..o.dim()).map(|idx| factor_degrees(o, idx)).collect();
    record(report, "A_m is triangular for the factorwise degree order", &pts, |u| {
        for m in 1..=n {
            let a = quantum_minor(o, &IndexSeq::initial(m), &IndexSeq::initial(m), u)?;
            for r in 0..o.dim() {
                for c in 0..o.dim() {
                    if r != c && !a.get(r, c).is_zero() {
                        let delta: Vec<i64> = degrees[r].iter().zip(&degrees[c]).map(|(x, y)| x - y).collect();
                        if delta.iter().find(|d| **d != 0).is_none_or(|d| *d > 0) {
                            return Ok(Some(format!("A{m} entry ({r},{c})")));
                        }
                    }
                }
            }
        }
        Ok(None)
    })
}

fn factor_schemes(o: &TensorOracle, idx: usize) -> Vec<&GzScheme> {
    o.split_index(idx).iter().zip(o.factors()).map(|(&p, f)| &f.subspace().schemes[p]).collect()
}

fn factor_degrees(o: &TensorOracle, idx: usize) -> Vec<i64> {
    factor_schemes(o, idx).iter().map(|s| s.degree()).collect()
}

fn suite_twists(o: &TensorOracle, report: &mut Report, k: usize, seed: u64) -> Result<(), OracleError> {
    let n = o.rank();
    let inverse = InverseTwist::new(o);
    let inverse2 = InverseTwist::new(&inverse);
    let reflect = ReflectTwist::new(o);
    let reflect2 = ReflectTwist::new(&reflect);
    let pts = points(seed, k);
    let det = |u: &Rational| -> Result<Rational, OracleError> {
        let q = quantum_minor(o, &IndexSeq::initial(n), &IndexSeq::initial(n), u)?;
        scalar_of(&q).ok_or_else(|| OracleError::RelationViolated { identity: "quantum determinant is scalar".into(), point: u.to_string() })
    };
    record(report, "inverting twist composed with itself is the identity", &pts, |u| {
        Ok(mismatch(*inverse2.generators(u)? == *o.generators(u)?, || "generators differ".into()))
    })?;
    record(report, "inverting twist maps Q_ij(u) to sign * Q_{j'i'}(-1-u) / A_N(m-1-u)", &pts, |u| {
        for m in 1..=n {
            let scale_at = det(&(int(m as i64 - 1) - u))?;
            if scale_at.is_zero() {
                return Err(OracleError::PoleHit(u.clone()));
            }
            for i in subsets(n, m) {
                for j in subsets(n, m) {
                    let lhs = quantum_minor(&inverse, &i, &j, u)?;
                    let eps = int(complement_sign(&i, &j, n));
                    let rhs = quantum_minor(o, &j.complement(n), &i.complement(n), &(-int(1) - u))?.scale(&(eps / &scale_at));
                    if lhs != rhs {
                        return Ok(Some(format!("Q_{i}{j}")));
                    }
                }
            }
        }
        Ok(None)
    })?;
    record(report, "reflecting twist maps Q_ij(u) to sign * Q_{~i~j}(u-m) / A_N(u)", &pts, |u| {
        let d = det(u)?;
        if d.is_zero() {
            return Err(OracleError::PoleHit(u.clone()));
        }
        for m in 1..=n {
            for i in subsets(n, m) {
                for j in subsets(n, m) {
                    let lhs = quantum_minor(&reflect, &i, &j, u)?;
                    let eps = int(complement_sign(&i, &j, n));
                    let rhs = quantum_minor(o, &i.complement(n).reflect(n), &j.complement(n).reflect(n), &(u - int(m as i64)))?
                        .scale(&(eps / &d));
                    if lhs != rhs {
                        return Ok(Some(format!("Q_{i}{j}")));
                    }
                }
            }
        }
        Ok(None)
    })?;
    record(report, "reflecting twist on named minors: A_m -> A_{N-m}(u-m)/A_N, B_m -> -B_{N-m}(u-m)/A_N", &pts, |u| {
        let d = det(u)?;
        if d.is_zero() {
            return Err(OracleError::PoleHit(u.clone()));
        }
        let inv = d.recip();
        let tw = named_minors(&reflect, u)?;
        let ordinary = |m: usize| named_minors(o, &(u - int(m as i64)));
        for m in 1..=n {
            let base = ordinary(m)?;
            if tw.a(m) != &base.a(n - m).scale(&inv) {
                return Ok(Some(format!("A{m}")));
            }
            if m < n {
                let minus = -inv.clone();
                if tw.b(m) != &base.b(n - m).scale(&minus) {
                    return Ok(Some(format!("B{m}")));
                }
                if tw.c(m) != &base.c(n - m).scale(&minus) {
                    return Ok(Some(format!("C{m}")));
                }
                if tw.d(m) != &base.d(n - m).scale(&inv) {
                    return Ok(Some(format!("D{m}")));
                }
            }
        }
        Ok(None)
    })?;
    record(report, "reflecting twist squared shifts by N and rescales by A_N(u)/A_N(u-1)", &pts, |u| {
        let num = det(u)?;
        let den = det(&(u - int(1)))?;
        if den.is_zero() {
            return Err(OracleError::PoleHit(u.clone()));
        }
        let expected = o.generators(&(u - int(n as i64)))?.map(|m| m.scale(&(&num / &den)));
        Ok(mismatch(*reflect2.generators(u)? == expected, || "generators differ".into()))
    })
}

/// `T(w)` of the big algebra on the whole of `V_λ`.
struct FullEvaluation<'a>(&'a FactorOracle);

/// The embedded rank `N` generators on the whole of `V_λ`.
struct FullEmbedded<'a>(&'a FactorOracle);

impl Realization for FullEvaluation<'_> {
    fn rank(&self) -> usize {
        self.0.gl().rank()
    }

    fn dim(&self) -> usize {
        self.0.gl().dim()
    }

    fn generators(&self, u: &Rational) -> Result<std::sync::Arc<OpBlock>, OracleError> {
        Ok(std::sync::Arc::new(self.0.evaluation_full(u)?))
    }
}

impl Realization for FullEmbedded<'_> {
    fn rank(&self) -> usize {
        self.0.gl().rank() - self.0.factor().big_m()
    }

    fn dim(&self) -> usize {
        self.0.gl().dim()
    }

    fn generators(&self, u: &Rational) -> Result<std::sync::Arc<OpBlock>, OracleError> {
        Ok(std::sync::Arc::new(self.0.embedded_full(u)?))
    }
}

fn suite_embedding(o: &TensorOracle, report: &mut Report, k: usize, seed: u64) -> Result<(), OracleError> {
    let pts = points(seed, k);
    for (s, f) in o.factors().iter().enumerate() {
        let big = FullEvaluation(f);
        let small = FullEmbedded(f);
        let big_m = f.factor().big_m();
        let n = small.rank();
        let name = format!("factor {s}: embedded minors times A_M(u-m) equal minors with rows 1..M prepended");
        record(report, &name, &pts, |u| {
            for m in 1..=n {
                let am = quantum_minor(&big, &IndexSeq::initial(big_m), &IndexSeq::initial(big_m), &(u - int(m as i64)))?;
                for i in subsets(n, m) {
                    for j in subsets(n, m) {
                        let lhs = &quantum_minor(&small, &i, &j, u)? * &am;
                        let lift = |x: &IndexSeq| {
                            IndexSeq::new((1..=big_m).chain(x.entries().iter().map(|a| a + big_m)).collect(), big_m + n)
                                .expect("increasing")
                        };
                        let rhs = quantum_minor(&big, &lift(&i), &lift(&j), u)?;
                        if lhs != rhs {
                            return Ok(Some(format!("Q_{i}{j}")));
                        }
                    }
                }
            }
            Ok(None)
        })?;
    }
    Ok(())
}

/// `∏_{i ≤ m} (u + row_i − i + 1)/(u − i + 1)` at a point.
fn row_eigenvalue_at(row: &[i64], u: &Rational) -> Option<Rational> {
    let mut acc = Rational::one();
    for (i, &x) in row.iter().enumerate() {
        let den = u - int(i as i64);
        if den.is_zero() {
            return None;
        }
        acc *= (u + int(x - i as i64)) / den;
    }
    Some(acc)
}

fn suite_eigenvalues(o: &TensorOracle, report: &mut Report, k: usize, seed: u64) -> Result<(), OracleError> {
    let n = o.rank();
    let pts = points(seed, k);
    record(report, "A_m has the product of row ratios on its diagonal, and nothing else on a single factor", &pts, |u| {
        for m in 1..=n {
            let a = quantum_minor(o, &IndexSeq::initial(m), &IndexSeq::initial(m), u)?;
            let mut expected = Vec::with_capacity(o.dim());
            for idx in 0..o.dim() {
                let mut e = Rational::one();
                for (s, f) in o.factors().iter().enumerate() {
                    let sch = factor_schemes(o, idx)[s];
                    let h = &f.factor().h;
                    let big_m = f.factor().big_m();
                    let num = row_eigenvalue_at(sch.row(big_m + m), &(u + h));
                    let den = row_eigenvalue_at(&f.factor().mu, &(u - int(m as i64) + h));
                    match (num, den) {
                        (Some(x), Some(y)) if !y.is_zero() => e *= x / y,
                        _ => return Err(OracleError::PoleHit(u.clone())),
                    }
                }
                expected.push(e);
            }
            let single = o.factors().len() == 1;
            let diag_ok = expected.iter().enumerate().all(|(i, e)| a.get(i, i) == e);
            if !diag_ok || (single && a != ExactMatrix::diag(expected)) {
                return Ok(Some(format!("A{m}")));
            }
        }
        Ok(None)
    })
}

fn suite_grading(o: &TensorOracle, report: &mut Report, k: usize, seed: u64) -> Result<(), OracleError> {
    let n = o.rank();
    let total: Vec<i64> = (0..o.dim()).map(|idx| factor_degrees(o, idx).iter().sum()).collect();
    let top = total.iter().copied().max().unwrap_or(0);
    let pts = points(seed, k);
    record(report, "T_ij(u) shifts the total degree by i - j", &pts, |u| {
        let t = o.generators(u)?;
        for i in 1..=n {
            for j in 1..=n {
                let g = t.get(i, j);
                for r in 0..o.dim() {
                    for c in 0..o.dim() {
                        if !g.get(r, c).is_zero() && total[r] - total[c] != i as i64 - j as i64 {
                            return Ok(Some(format!("T_{i}{j} entry ({r},{c})")));
                        }
                    }
                }
            }
        }
        Ok(None)
    })?;
    report.push("first basis vector has maximal degree", total.first() == Some(&top), "");
    record(report, "T_ij(u) with i > j kills the first basis vector", &pts, |u| {
        let t = o.generators(u)?;
        for i in 1..=n {
            for j in 1..i {
                if (0..o.dim()).any(|r| !t.get(i, j).get(r, 0).is_zero()) {
                    return Ok(Some(format!("T_{i}{j}")));
                }
            }
        }
        Ok(None)
    })
}

/// The rtt suite on any realization, including wrapped or perturbed ones.
pub fn verify_rtt<R: Realization + ?Sized>(rep: &R, samples: usize, seed: u64) -> Result<Report, OracleError> {
    let mut report = Report::new();
    suite_rtt(rep, &mut report, samples, seed)?;
    Ok(report)
}

/// Runs one suite at `samples` points (or point pairs) drawn from `seed`.
pub fn verify(o: &TensorOracle, suite: Suite, samples: usize, seed: u64) -> Result<Report, OracleError> {
    let mut report = Report::new();
    match suite {
        Suite::Rtt => suite_rtt(o, &mut report, samples, seed)?,
        Suite::Minors => suite_minors(o, &mut report, samples, seed)?,
        Suite::Coproduct => suite_coproduct(o, &mut report, samples, seed)?,
        Suite::Twists => suite_twists(o, &mut report, samples, seed)?,
        Suite::Embedding => suite_embedding(o, &mut report, samples, seed)?,
        Suite::Eigenvalues => suite_eigenvalues(o, &mut report, samples, seed)?,
        Suite::Grading => suite_grading(o, &mut report, samples, seed)?,
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use crate::oracle::Perturbed;

    #[test]
    fn subsets_and_signs() {
        assert_eq!(subsets(3, 2).len(), 3);
        assert_eq!(subsets(4, 0).len(), 1);
        let i = IndexSeq::new(vec![1], 2).unwrap();
        let j = IndexSeq::new(vec![2], 2).unwrap();
        assert_eq!(complement_sign(&i, &j, 2), -1);
        assert_eq!(complement_sign(&i, &i, 2), 1);
    }

    #[test]
    fn rtt_holds_and_detects_corruption() {
        let spec = ModuleSpec::vectors(2, &[int(0), frac(1, 2)]).unwrap();
        let o = TensorOracle::new(&spec).unwrap();
        for (u, v) in pairs(3, 3) {
            assert_eq!(rtt_at(&o, &u, &v).unwrap(), None);
            assert_eq!(minor_relations_at(&o, &u, &v).unwrap(), None);
        }
        let bad = Perturbed::new(&o);
        let (u, v) = pairs(3, 1).remove(0);
        assert!(rtt_at(&bad, &u, &v).unwrap().is_some());
        let r = verify_rtt(&bad, 2, 3).unwrap();
        assert!(!r.all_passed());
        assert!(r.first_failure().unwrap().detail.contains("u = "));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("tau"), Some(Suite::Twists));
        assert_eq!(Suite::parse("sigma"), None);
    }

    #[test]
    fn vector_representation_suites() {
        let spec = ModuleSpec::vectors(2, &[int(0)]).unwrap();
        let o = TensorOracle::new(&spec).unwrap();
        for suite in Suite::ALL {
            let r = verify(&o, suite, 2, 1).unwrap();
            assert!(r.all_passed(), "{}: {r}", suite.name());
        }
    }
}
