//! Drinfeld polynomials read off the singular vector of a realized module.

use num::{One, Zero};

use crate::exact::{int, ExactMatrix, Poly, Rational};
use crate::report::Report;

use super::families::regular_samples;
use super::minors::{quantum_minor, IndexSeq};
use super::{OracleError, Realization};

#[derive(Clone, Debug)]
pub struct DrinfeldData {
    /// Spanning vector of the singular line.
    pub singular: Vec<Rational>,
    /// `P_1, …, P_{N−1}`.
    pub polys: Vec<Poly>,
    pub report: Report,
}

fn eigenvalue(op: &ExactMatrix, v: &[Rational]) -> Option<Rational> {
    let w = op.mul_vec(v);
    let p = v.iter().position(|x| !x.is_zero())?;
    let e = &w[p] / &v[p];
    w.iter().zip(v).all(|(a, b)| a == &(&e * b)).then_some(e)
}

/// Eigenvalues of `A_0, …, A_N` on `v` at `u`.
fn a_eigenvalues<R: Realization + ?Sized>(rep: &R, v: &[Rational], u: &Rational) -> Result<Vec<Rational>, OracleError> {
    (0..=rep.rank())
        .map(|k| {
            let a = quantum_minor(rep, &IndexSeq::initial(k), &IndexSeq::initial(k), u)?;
            eigenvalue(&a, v).ok_or_else(|| OracleError::RelationViolated {
                identity: format!("singular vector is an eigenvector of A{k}(u)"),
                point: u.to_string(),
            })
        })
        .collect()
}

/// Smallest-degree monic `P` with `P(u−1) = r_k·P(u)` at every `(u_k, r_k)`.
fn solve_ratio(data: &[(Rational, Rational)], max_degree: usize) -> Option<Poly> {
    for d in 0..=max_degree {
        let mut rows = Vec::with_capacity(data.len());
        let mut rhs = Vec::with_capacity(data.len());
        for (u, r) in data {
            let back = u - int(1);
            let term = |i: usize| -> Rational {
                let p = u.pow(i as i32);
                let q = back.pow(i as i32);
                r * p - q
            };
            rows.push((0..d).map(term).collect::<Vec<_>>());
            rhs.push(-term(d));
        }
        if d == 0 {
            if rhs.iter().all(Zero::is_zero) {
                return Some(Poly::one());
            }
            continue;
        }
        let a = ExactMatrix::from_rows(rows).ok()?;
        if let Ok(Some(sol)) = a.solve_unique(&rhs) {
            let mut coeffs = sol;
            coeffs.push(Rational::one());
            return Some(Poly::new(coeffs));
        }
    }
    None
}

/// Locates the singular line of `rep` and recovers its Drinfeld polynomials.
///
/// `bound` must dominate the degrees of numerators and denominators of the
/// rational functions `A_m(u)`, `C_m(u)` on `rep`, and the Drinfeld
/// polynomial degrees.
pub fn drinfeld_from_singular<R: Realization + ?Sized>(
    rep: &R,
    bound: usize,
    seed: u64,
) -> Result<DrinfeldData, OracleError> {
    let n = rep.rank();
    let dim = rep.dim();
    let mut report = Report::new();

    let lowering = regular_samples(2 * bound + 2, seed, |u| {
        (1..n)
            .map(|m| quantum_minor(rep, &IndexSeq::skip_last(m), &IndexSeq::initial(m), u))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let mut stack: Vec<ExactMatrix> = lowering.iter().flat_map(|(_, cs)| cs.iter().cloned()).collect();
    if stack.is_empty() {
        stack.push(ExactMatrix::zeros(1, dim));
    }
    let kernel = ExactMatrix::vstack(&stack)?.nullspace();
    match kernel.len() {
        0 => return Err(OracleError::NoSingularVector),
        1 => {}
        k => return Err(OracleError::NonUniqueSingularLine(k)),
    }
    let xi = kernel.into_iter().next().expect("one kernel vector");
    report.push("singular line is unique", true, "");

    let count = 6 * bound + 6;
    let samples = regular_samples(count, seed ^ 0x5eed, |u| {
        let here = a_eigenvalues(rep, &xi, u)?;
        let back = a_eigenvalues(rep, &xi, &(u - int(1)))?;
        let t = rep.generators(u)?;
        let lower_ok = (1..=n).all(|i| (1..i).all(|j| t.get(i, j).mul_vec(&xi).iter().all(Zero::is_zero)));
        Ok((here, back, lower_ok))
    })?;
    let lower_ok = samples.iter().all(|s| s.1 .2);
    report.push("lower generators T_ij(u), i > j, annihilate the singular vector", lower_ok, "");
    if !lower_ok {
        return Err(OracleError::RelationViolated {
            identity: "T_ij(u) singular vector = 0 for i > j".into(),
            point: "sample points".into(),
        });
    }

    let mut polys = Vec::new();
    for m in 1..n {
        let data: Vec<(Rational, Rational)> = samples
            .iter()
            .filter_map(|(u, (here, back, _))| {
                let den = &here[m] * &back[m];
                (!den.is_zero()).then(|| (u.clone(), &here[m + 1] * &back[m - 1] / den))
            })
            .collect();
        let p = solve_ratio(&data, bound).ok_or_else(|| {
            OracleError::Interpolation(format!("no monic P{m} of degree at most {bound} fits the eigenvalue ratios"))
        })?;
        polys.push(p);
    }

    let ratio_points = regular_samples(2 * bound + 2, seed ^ 0xa11, |u| {
        let mut ok = true;
        for m in 1..n {
            let t = rep.generators(&(u - int(m as i64)))?;
            let upper = t.get(m + 1, m + 1).mul_vec(&xi);
            let lower = t.get(m, m).mul_vec(&xi);
            let p = &polys[m - 1];
            let (pu, pb) = (p.eval(u), p.eval(&(u - int(1))));
            ok &= upper.iter().zip(&lower).all(|(x, y)| x * &pu == y * &pb);
        }
        Ok(ok)
    })?;
    let ratio_ok = ratio_points.iter().all(|p| p.1);
    report.push("T_{m+1,m+1}(u-m) P_m(u) = P_m(u-1) T_mm(u-m) on the singular vector", ratio_ok, "");
    if !ratio_ok {
        return Err(OracleError::RelationViolated {
            identity: "diagonal generator ratio on the singular vector".into(),
            point: "sample points".into(),
        });
    }
    Ok(DrinfeldData { singular: xi, polys, report })
}
