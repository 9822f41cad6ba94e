//! Rescaled named-minor families recovered by interpolation.

use crate::exact::{lagrange_interpolate, ExactMatrix, MatrixPoly, Poly, Rational};
use crate::families::Families;
use crate::par;
use crate::sample::SamplePoints;

use super::minors::{named_minors, NamedMinors};
use super::{OracleError, Realization, TensorOracle};

/// Evaluates `f` at `count` sample points, redrawing points that hit a pole.
pub fn regular_samples<T: Send>(
    count: usize,
    seed: u64,
    f: impl Fn(&Rational) -> Result<T, OracleError> + Sync + Send,
) -> Result<Vec<(Rational, T)>, OracleError> {
    let mut points = SamplePoints::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let batch = points.take(count - out.len());
        for (u, r) in batch.iter().zip(par::map(&batch, |u| f(u))) {
            match r {
                Ok(v) => out.push((u.clone(), v)),
                Err(OracleError::PoleHit(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

fn fit(
    name: &str,
    scale: &Poly,
    degree: usize,
    samples: &[(Rational, ExactMatrix)],
) -> Result<MatrixPoly, OracleError> {
    let scaled: Vec<(Rational, ExactMatrix)> =
        samples.iter().map(|(u, x)| (u.clone(), x.scale(&scale.eval(u)))).collect();
    let (fit_part, check_part) = scaled.split_at(degree + 1);
    let nodes: Vec<Rational> = fit_part.iter().map(|p| p.0.clone()).collect();
    let values: Vec<ExactMatrix> = fit_part.iter().map(|p| p.1.clone()).collect();
    let poly = lagrange_interpolate(&nodes, &values)?;
    for (u, x) in check_part {
        if &poly.eval(u) != x {
            return Err(OracleError::Interpolation(format!("{name} is not a polynomial of degree {degree} (check at {u})")));
        }
    }
    Ok(poly)
}

/// The families `ρ_m·A_m`, `ρ_m·B_m`, `ρ_m·C_m`, `ρ_m·D_m` as matrix polynomials.
///
/// Each family is interpolated through `r_m + 1` points and checked at the
/// remaining ones. `b_m` and `c_m` must have degree below `r_m`.
pub fn oracle_families(oracle: &TensorOracle, seed: u64) -> Result<Families, OracleError> {
    let spec = oracle.spec();
    let n = spec.rank();
    let count = spec.rescaling_degree(n) + 3;
    let samples: Vec<(Rational, NamedMinors)> = regular_samples(count, seed, |u| named_minors(oracle, u))?;
    let pick = |f: &dyn Fn(&NamedMinors) -> &ExactMatrix| -> Vec<(Rational, ExactMatrix)> {
        samples.iter().map(|(u, nm)| (u.clone(), f(nm).clone())).collect()
    };
    let mut a = Vec::new();
    for m in 0..=n {
        a.push(fit(&format!("a{m}"), &spec.rescaling(m), spec.rescaling_degree(m), &pick(&|nm| nm.a(m)))?);
    }
    let mut b = vec![MatrixPoly::zero(oracle.dim(), oracle.dim())];
    let mut c = b.clone();
    let mut d = b.clone();
    for m in 1..n {
        let scale = spec.rescaling(m);
        let r = spec.rescaling_degree(m);
        b.push(fit(&format!("b{m}"), &scale, r, &pick(&|nm| nm.b(m)))?);
        c.push(fit(&format!("c{m}"), &scale, r, &pick(&|nm| nm.c(m)))?);
        d.push(fit(&format!("d{m}"), &scale, r, &pick(&|nm| nm.d(m)))?);
        for (name, p) in [("b", &b[m]), ("c", &c[m])] {
            if p.degree().is_some_and(|k| k + 1 > r) {
                return Err(OracleError::Interpolation(format!("{name}{m} has degree {} >= {r}", p.degree().unwrap_or(0))));
            }
        }
    }
    Ok(Families { n, dim: oracle.dim(), a, b, c, d })
}
