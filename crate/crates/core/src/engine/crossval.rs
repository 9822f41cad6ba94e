//! Agreement between the closed-form engine and the brute-force oracle.

use num::Zero;

use crate::exact::{int, ExactMatrix, Rational};
use crate::families::Families;
use crate::oracle::{drinfeld_from_singular, named_minors, oracle_families, TensorOracle};
use crate::report::Report;
use crate::sample::SamplePoints;
use crate::spec::ModuleSpec;

use super::{
    apply_word, lowering_coeff, build_action, drinfeld_polys, raising_coeff, neighbour, raising_path, eigen_data,
    simple_spectrum_check, singular_vector, EngineError, GtAction,
};

#[derive(Clone, Copy, Debug)]
pub struct CrossvalOptions {
    pub seed: u64,
    /// Extra points at which `b_m` is compared with a direct oracle evaluation.
    pub extra_points: usize,
    /// Replace the engine's `b_1` by twice itself, as a negative control.
    pub corrupt: bool,
}

impl Default for CrossvalOptions {
    fn default() -> Self {
        CrossvalOptions { seed: 1, extra_points: 1, corrupt: false }
    }
}

/// Columns are raising-path vectors, computed with the oracle's `b` family.
fn raising_basis(action: &GtAction, oracle: &Families) -> ExactMatrix {
    let dim = action.basis.len();
    let mut top = vec![Rational::zero(); dim];
    top[0] = int(1);
    let mut s = ExactMatrix::zeros(dim, dim);
    for (col, t) in action.basis.tuples().iter().enumerate() {
        let v = apply_word(oracle, &raising_path(&action.spec, t), &top);
        for (row, x) in v.into_iter().enumerate() {
            s.set(row, col, x);
        }
    }
    s
}

/// Joint eigenvectors of the oracle's `a` family, one per basis line.
fn eigenbasis(action: &GtAction, oracle: &Families, seed: u64) -> Result<Option<ExactMatrix>, EngineError> {
    let dim = action.basis.len();
    let n = action.spec.rank();
    let points = SamplePoints::new(seed).take(2);
    let mut v = ExactMatrix::zeros(dim, dim);
    for (col, t) in action.basis.tuples().iter().enumerate() {
        let mut blocks = Vec::new();
        for m in 1..=n {
            let eigen_poly = eigen_data(&action.spec, t, m)?.eigen_poly;
            for u in &points {
                blocks.push(&oracle.a(m).eval(u) - &ExactMatrix::scalar(dim, eigen_poly.eval(u)));
            }
        }
        let kernel = ExactMatrix::vstack(&blocks)?.nullspace();
        if kernel.len() != 1 {
            return Ok(None);
        }
        for (row, x) in kernel[0].iter().enumerate() {
            v.set(row, col, x.clone());
        }
    }
    Ok(Some(v))
}

fn check_edges(action: &GtAction, eig: &Families, report: &mut Report) -> Result<(), EngineError> {
    let spec = &action.spec;
    let mut checked = 0;
    for (col, t) in action.basis.tuples().iter().enumerate() {
        for m in 1..spec.rank() {
            for (s, f) in spec.factors().iter().enumerate() {
                for i in 1..=f.big_m() + m {
                    let Some(up) = neighbour(spec, t, m, i, s, 1) else { continue };
                    let row = action.basis.index_of(&up).expect("basis line");
                    let nu = eigen_data(spec, t, m)?.nodes.iter().find(|x| x.factor == s && x.entry == i).expect("node").value.clone();
                    let c = eig.c(m).eval(&nu).get(row, col).clone();
                    let b = eig.b(m).eval(&(&nu - int(1))).get(col, row).clone();
                    let expect = -raising_coeff(spec, t, m, i, s) * lowering_coeff(spec, &up, m, i, s)?;
                    if c * b != expect {
                        report.push("edge products c(nu) b(nu-1) agree with minus raising times lowering coefficients", false, format!("m={m} column {col} factor {s} entry {i}"));
                        return Ok(());
                    }
                    checked += 1;
                }
            }
        }
    }
    report.push("edge products c(nu) b(nu-1) agree with minus raising times lowering coefficients", true, format!("{checked} edges"));
    Ok(())
}

/// Compares every engine family with the oracle and records one line per claim.
pub fn crossval(spec: &ModuleSpec, opts: CrossvalOptions) -> Result<Report, EngineError> {
    let mut report = Report::new();
    let mut action = build_action(spec, opts.seed)?;
    if opts.corrupt && spec.rank() > 1 {
        action.families.b[1] = action.families.b[1].scale(&int(2));
    }
    let gt = &action.families;
    let oracle = TensorOracle::new(spec)?;
    let of = oracle_families(&oracle, opts.seed)?;

    let rel = gt.check_relations()?;
    report.push("engine families satisfy the commutation and quadratic relations", rel.all_passed(), rel.first_failure().map(|l| l.name.clone()).unwrap_or_default());
    let rel = of.check_relations()?;
    report.push("oracle families satisfy the commutation and quadratic relations", rel.all_passed(), rel.first_failure().map(|l| l.name.clone()).unwrap_or_default());

    let sing = singular_vector(&action);
    report.push("top tuple is singular and an eigenvector of every a_m", sing.is_ok(), sing.err().map(|e| e.to_string()).unwrap_or_default());

    let unit_ok = action.basis.tuples().iter().enumerate().all(|(col, t)| {
        let mut top = vec![Rational::zero(); gt.dim];
        top[0] = int(1);
        let v = apply_word(gt, &raising_path(spec, t), &top);
        v.iter().enumerate().all(|(r, x)| if r == col { x == &int(1) } else { x.is_zero() })
    });
    report.push("raising paths reach unit vectors through the engine's b family", unit_ok, "");

    let s = raising_basis(&action, &of);
    match of.conjugate(&s) {
        Ok(conj) => {
            let diff = conj.first_difference(gt);
            report.push("oracle families in the raising-path basis equal the engine families", diff.is_none(), diff.unwrap_or_default());
            for k in 0..opts.extra_points {
                let u = SamplePoints::new(opts.seed ^ 0xe7 ^ k as u64).next_point();
                let minors = named_minors(&oracle, &u)?;
                let inv = s.inverse()?;
                let mut ok = true;
                for m in 1..spec.rank() {
                    let direct = &(&inv * &minors.b(m).scale(&spec.rescaling(m).eval(&u))) * &s;
                    ok &= direct == gt.b(m).eval(&u);
                }
                report.push("engine b_m matches a direct oracle evaluation off the nodes", ok, format!("u = {u}"));
            }
        }
        Err(_) => report.push("raising-path vectors form a basis", false, "singular change of basis"),
    }

    if simple_spectrum_check(spec).simple {
        match eigenbasis(&action, &of, opts.seed)? {
            Some(v) => {
                let eig = of.conjugate(&v)?;
                let same = (0..=spec.rank()).all(|m| eig.a(m) == gt.a(m));
                report.push("oracle a_m in its eigenbasis equals the engine's diagonal a_m", same, "");
                check_edges(&action, &eig, &mut report)?;
            }
            None => report.push("oracle a_m in its eigenbasis equals the engine's diagonal a_m", false, "joint eigenspace is not a line"),
        }
    }

    let bound = spec.rescaling_degree(spec.rank());
    let from_oracle = drinfeld_from_singular(&oracle, bound, opts.seed)?;
    let from_diagrams = drinfeld_polys(spec)?;
    report.push(
        "Drinfeld polynomials from the singular vector equal the diagram products",
        from_oracle.polys == from_diagrams,
        from_diagrams.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("; "),
    );
    Ok(report)
}
