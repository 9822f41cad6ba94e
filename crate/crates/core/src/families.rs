//! Rescaled Drinfeld generator families `a_m, b_m, c_m, d_m` as matrix
//! polynomials, and their defining relations checked as exact polynomial
//! identities in two variables.

use crate::exact::{int, ExactError, ExactMatrix, MatrixPoly};
use crate::par;
use crate::report::Report;

/// The families on a module of dimension `dim` for the rank `n` Yangian.
///
/// `a[m]` for `m = 0..=n`; `b[m]`, `c[m]`, `d[m]` for `m = 1..n`, with index 0
/// unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Families {
    pub n: usize,
    pub dim: usize,
    pub a: Vec<MatrixPoly>,
    pub b: Vec<MatrixPoly>,
    pub c: Vec<MatrixPoly>,
    pub d: Vec<MatrixPoly>,
}

#[derive(Clone, Copy, Debug)]
enum Relation {
    AbCommute(usize, usize),
    CbCommute(usize, usize),
    BbCommute(usize, usize),
    AaCommute(usize, usize),
    AbExchange(usize),
    CbExchange(usize),
    Quadratic(usize),
}

impl Relation {
    fn name(self) -> String {
        match self {
            Relation::AbCommute(m, n) => format!("[a{m}(u), b{n}(v)] = 0"),
            Relation::CbCommute(m, n) => format!("[c{m}(u), b{n}(v)] = 0"),
            Relation::BbCommute(m, n) => format!("[b{m}(u), b{n}(v)] = 0"),
            Relation::AaCommute(m, n) => format!("[a{m}(u), a{n}(v)] = 0"),
            Relation::AbExchange(m) => format!("(u-v)[a{m}(u), b{m}(v)] = b{m}(u)a{m}(v) - b{m}(v)a{m}(u)"),
            Relation::CbExchange(m) => format!("(u-v)[c{m}(u), b{m}(v)] = d{m}(u)a{m}(v) - d{m}(v)a{m}(u)"),
            Relation::Quadratic(m) => format!("c{m}(u)b{m}(u-1) = d{m}(u)a{m}(u-1) - a{}(u)a{}(u-1)", m + 1, m - 1),
        }
    }
}

fn coeff(p: &MatrixPoly, k: Option<usize>) -> Option<&ExactMatrix> {
    k.and_then(|k| p.coeffs().get(k))
}

fn bracket(x: Option<&ExactMatrix>, y: Option<&ExactMatrix>) -> Option<ExactMatrix> {
    match (x, y) {
        (Some(x), Some(y)) => Some(x.commutator(y)),
        _ => None,
    }
}

fn product(x: Option<&ExactMatrix>, y: Option<&ExactMatrix>) -> Option<ExactMatrix> {
    match (x, y) {
        (Some(x), Some(y)) => Some(x * y),
        _ => None,
    }
}

fn combine(dim: usize, plus: Vec<Option<ExactMatrix>>, minus: Vec<Option<ExactMatrix>>) -> ExactMatrix {
    let mut acc = ExactMatrix::zeros(dim, dim);
    for t in plus.into_iter().flatten() {
        acc = &acc + &t;
    }
    for t in minus.into_iter().flatten() {
        acc = &acc - &t;
    }
    acc
}

fn len(p: &MatrixPoly) -> usize {
    p.coeffs().len()
}

/// `[x(u), y(v)] = 0` coefficientwise.
pub fn commute_bivariate(x: &MatrixPoly, y: &MatrixPoly) -> Option<(usize, usize)> {
    for (p, xp) in x.coeffs().iter().enumerate() {
        for (q, yq) in y.coeffs().iter().enumerate() {
            if !xp.commutator(yq).is_zero() {
                return Some((p, q));
            }
        }
    }
    None
}

/// `(u−v)[x(u), y(v)] = p(u)q(v) − p(v)q(u)` coefficientwise; returns the
/// first failing monomial `u^i v^j`.
pub fn exchange_bivariate(
    x: &MatrixPoly,
    y: &MatrixPoly,
    p: &MatrixPoly,
    q: &MatrixPoly,
    dim: usize,
) -> Option<(usize, usize)> {
    let top_u = (len(x) + 1).max(len(p)).max(len(q));
    let top_v = (len(y) + 1).max(len(p)).max(len(q));
    for i in 0..top_u {
        for j in 0..top_v {
            let lhs = combine(
                dim,
                vec![bracket(coeff(x, i.checked_sub(1)), coeff(y, Some(j)))],
                vec![bracket(coeff(x, Some(i)), coeff(y, j.checked_sub(1)))],
            );
            let rhs = combine(
                dim,
                vec![product(coeff(p, Some(i)), coeff(q, Some(j)))],
                vec![product(coeff(p, Some(j)), coeff(q, Some(i)))],
            );
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

impl Families {
    pub fn a(&self, m: usize) -> &MatrixPoly {
        &self.a[m]
    }

    pub fn b(&self, m: usize) -> &MatrixPoly {
        &self.b[m]
    }

    pub fn c(&self, m: usize) -> &MatrixPoly {
        &self.c[m]
    }

    pub fn d(&self, m: usize) -> &MatrixPoly {
        &self.d[m]
    }

    fn relations(&self) -> Vec<Relation> {
        let n = self.n;
        let mut out = Vec::new();
        for m in 1..=n {
            for k in 1..n {
                if m != k {
                    out.push(Relation::AbCommute(m, k));
                }
            }
            for k in m..=n {
                out.push(Relation::AaCommute(m, k));
            }
        }
        for m in 1..n {
            for k in 1..n {
                if m != k {
                    out.push(Relation::CbCommute(m, k));
                }
                if m <= k && k - m != 1 {
                    out.push(Relation::BbCommute(m, k));
                }
            }
            out.push(Relation::AbExchange(m));
            out.push(Relation::CbExchange(m));
            out.push(Relation::Quadratic(m));
        }
        out
    }

    fn check(&self, rel: Relation) -> Result<Option<String>, ExactError> {
        let mono = |w: Option<(usize, usize)>| w.map(|(i, j)| format!("coefficient of u^{i} v^{j}"));
        Ok(match rel {
            Relation::AbCommute(m, k) => mono(commute_bivariate(self.a(m), self.b(k))),
            Relation::CbCommute(m, k) => mono(commute_bivariate(self.c(m), self.b(k))),
            Relation::BbCommute(m, k) => mono(commute_bivariate(self.b(m), self.b(k))),
            Relation::AaCommute(m, k) => mono(commute_bivariate(self.a(m), self.a(k))),
            Relation::AbExchange(m) => {
                mono(exchange_bivariate(self.a(m), self.b(m), self.b(m), self.a(m), self.dim))
            }
            Relation::CbExchange(m) => {
                mono(exchange_bivariate(self.c(m), self.b(m), self.d(m), self.a(m), self.dim))
            }
            Relation::Quadratic(m) => {
                let back = -int(1);
                let lhs = self.c(m).try_mul(&self.b(m).shift(&back))?;
                let rhs = self
                    .d(m)
                    .try_mul(&self.a(m).shift(&back))?
                    .try_sub(&self.a(m + 1).try_mul(&self.a(m - 1).shift(&back))?)?;
                let diff = lhs.try_sub(&rhs)?;
                diff.degree().map(|k| format!("coefficient of u^{k}"))
            }
        })
    }

    /// Checks every commutation and quadratic relation among the families.
    pub fn check_relations(&self) -> Result<Report, ExactError> {
        let rels = self.relations();
        let results = par::try_map(&rels, |&r| self.check(r))?;
        let mut report = Report::new();
        for (r, res) in rels.iter().zip(results) {
            report.push(r.name(), res.is_none(), res.unwrap_or_default());
        }
        Ok(report)
    }

    /// Entrywise comparison; returns the name of the first differing family.
    pub fn first_difference(&self, other: &Families) -> Option<String> {
        if (self.n, self.dim) != (other.n, other.dim) {
            return Some("shape".into());
        }
        let named = [("a", &self.a, &other.a), ("b", &self.b, &other.b), ("c", &self.c, &other.c), ("d", &self.d, &other.d)];
        for (name, x, y) in named {
            let start = if name == "a" { 0 } else { 1 };
            for m in start..x.len().min(y.len()) {
                if x[m] != y[m] {
                    return Some(format!("{name}{m}"));
                }
            }
        }
        None
    }

    /// Conjugates every family by `s`: `x ↦ s^{-1} x s`.
    pub fn conjugate(&self, s: &ExactMatrix) -> Result<Families, ExactError> {
        let inv = s.inverse()?;
        let conj = |v: &Vec<MatrixPoly>| v.iter().map(|p| p.left_mul(&inv).right_mul(s)).collect();
        Ok(Families { n: self.n, dim: self.dim, a: conj(&self.a), b: conj(&self.b), c: conj(&self.c), d: conj(&self.d) })
    }
}
