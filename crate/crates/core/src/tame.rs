//! Tameness of Drinfeld zero data, factorization into shifted skew diagrams,
//! and a semisimplicity test for the Gelfand-Zetlin subalgebra.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::rational::format_rational;
use crate::exact::{int, is_squarefree, minimal_polynomial, parse_rational, ExactError, ExactMatrix, Poly, Rational};
use crate::gz::{column_profile, diagram_drinfeld_poly, skew_shape, Column, CombError, SkewDiagram};
use crate::oracle::{oracle_families, OracleError, TensorOracle};
use crate::par;
use crate::spec::{ModuleSpec, SpecError, YangianFactor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TameError {
    #[error("zero data is not tame: {0}")]
    NotTame(TameWitness),
    #[error("internal assertion failed: {0}")]
    InternalAssertFailed(String),
    #[error("zero data: {0}")]
    Parse(String),
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Zeros of `P_m(−u)` for `m = 1, …, N−1`, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroData {
    n: usize,
    levels: Vec<Vec<Rational>>,
}

impl ZeroData {
    pub fn new(n: usize) -> Self {
        ZeroData { n, levels: vec![Vec::new(); n.saturating_sub(1)] }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Zeros at level `m` (1-based).
    pub fn level(&self, m: usize) -> &[Rational] {
        &self.levels[m - 1]
    }

    pub fn push(&mut self, m: usize, z: Rational) {
        self.levels[m - 1].push(z);
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Same data with every level sorted, for multiset comparison.
    pub fn sorted(&self) -> ZeroData {
        let mut out = self.clone();
        for l in &mut out.levels {
            l.sort();
        }
        out
    }

    /// `P_m(u) = ∏ (u + z)` over the zeros at level `m`.
    pub fn poly(&self, m: usize) -> Poly {
        Poly::from_shifts(self.level(m))
    }

    pub fn shifted(&self, c: &Rational) -> ZeroData {
        ZeroData { n: self.n, levels: self.levels.iter().map(|l| l.iter().map(|z| z + c).collect()).collect() }
    }

    /// Parses `"m=1:0,5;m=2:1"`. Levels not mentioned are empty.
    pub fn parse(text: &str, n: usize) -> Result<Self, TameError> {
        if n == 0 {
            return Err(TameError::Parse("rank must be at least 1".into()));
        }
        let mut zd = ZeroData::new(n);
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (head, body) =
                part.split_once(':').ok_or_else(|| TameError::Parse(format!("missing ':' in {part:?}")))?;
            let m: usize = head
                .trim()
                .strip_prefix("m=")
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| TameError::Parse(format!("expected m=<level> in {part:?}")))?;
            if m == 0 || m >= n {
                return Err(TameError::Parse(format!("level {m} outside 1..{}", n - 1)));
            }
            for z in body.split(',').map(str::trim).filter(|z| !z.is_empty()) {
                zd.push(m, parse_rational(z).map_err(|e| TameError::Parse(e.to_string()))?);
            }
        }
        Ok(zd)
    }

    /// Zeros of the Drinfeld polynomials of `spec`, read from column bottoms.
    pub fn from_spec(spec: &ModuleSpec) -> Result<Self, TameError> {
        let n = spec.rank();
        let mut zd = ZeroData::new(n);
        for f in spec.factors() {
            for (height, content) in column_profile(&skew_shape(&f.lambda, &f.mu)?).into_values() {
                if (1..n).contains(&height) {
                    zd.push(height, int(content) + &f.h);
                }
            }
        }
        Ok(zd)
    }
}

impl fmt::Display for ZeroData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .levels
            .iter()
            .enumerate()
            .map(|(k, l)| format!("m={}:{}", k + 1, l.iter().map(format_rational).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// A pair of zeros `z_{li}`, `z_{mj}` with `m ≥ l` whose difference lies in `0..=m−l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TameWitness {
    pub l: usize,
    pub i: usize,
    pub m: usize,
    pub j: usize,
    pub difference: i64,
}

impl fmt::Display for TameWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z[{},{}] - z[{},{}] = {}", self.l, self.i, self.m, self.j, self.difference)
    }
}

fn as_i64(r: &Rational) -> Option<i64> {
    r.is_integer().then(|| i64::try_from(r.to_integer()).ok()).flatten()
}

/// First violating pair in level-then-index order, or `None` when tame.
pub fn tame_witness(zd: &ZeroData) -> Option<TameWitness> {
    let top = zd.rank().saturating_sub(1);
    for l in 1..=top {
        for m in l..=top {
            for (i, zl) in zd.level(l).iter().enumerate() {
                for (j, zm) in zd.level(m).iter().enumerate() {
                    if m == l && i == j {
                        continue;
                    }
                    if let Some(d) = as_i64(&(zl - zm)) {
                        if (0..=(m - l) as i64).contains(&d) {
                            return Some(TameWitness { l, i: i + 1, m, j: j + 1, difference: d });
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_tame(zd: &ZeroData) -> bool {
    tame_witness(zd).is_none()
}

/// One shifted skew diagram, responsible for one class of zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorPart {
    pub h: Rational,
    pub diagram: SkewDiagram,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: usize,
    pub parts: Vec<FactorPart>,
}

#[derive(Serialize)]
struct PartRecord {
    h: String,
    beta: Vec<i64>,
    gamma: Vec<i64>,
}

impl Factorization {
    /// The zeros whose Drinfeld polynomials the diagrams realize.
    pub fn zeros(&self) -> ZeroData {
        let mut zd = ZeroData::new(self.n);
        for p in &self.parts {
            for (height, content) in column_profile(&p.diagram).into_values() {
                if (1..self.n).contains(&height) {
                    zd.push(height, int(content) + &p.h);
                }
            }
        }
        zd
    }

    /// Tensor product of the modules `V_{λ,μ}(h)` with `λ/μ` the part diagrams.
    pub fn to_spec(&self) -> Result<ModuleSpec, TameError> {
        let factors = self
            .parts
            .iter()
            .map(|p| {
                let d = &p.diagram;
                let mut lambda = d.beta.clone();
                lambda.extend(std::iter::repeat_n(d.stable_value, self.n));
                YangianFactor::new(lambda, d.gamma.clone(), p.h.clone())
            })
            .collect();
        Ok(ModuleSpec::new(self.n, factors)?)
    }

    /// `[{h, beta, gamma}, …]` as JSON.
    pub fn to_json(&self) -> String {
        let records: Vec<PartRecord> = self
            .parts
            .iter()
            .map(|p| PartRecord { h: format_rational(&p.h), beta: p.diagram.beta.clone(), gamma: p.diagram.gamma.clone() })
            .collect();
        serde_json::to_string(&records).expect("serializable")
    }
}

/// Groups zeros whose differences are integers. Classes are ordered by the
/// fractional part of their members.
fn integer_classes(zd: &ZeroData) -> Vec<Vec<(usize, Rational)>> {
    let mut classes: BTreeMap<Rational, Vec<(usize, Rational)>> = BTreeMap::new();
    for m in 1..zd.rank() {
        for z in zd.level(m) {
            let frac = z - z.floor();
            classes.entry(frac).or_default().push((m, z.clone()));
        }
    }
    classes.into_values().collect()
}

/// Splits tame zero data into one shifted skew diagram per integer class.
pub fn factorize(zd: &ZeroData) -> Result<Factorization, TameError> {
    if let Some(w) = tame_witness(zd) {
        return Err(TameError::NotTame(w));
    }
    let n = zd.rank();
    let fail = |msg: String| TameError::InternalAssertFailed(msg);
    let mut parts = Vec::new();
    for mut class in integer_classes(zd) {
        class.sort_by(|a, b| b.1.cmp(&a.1));
        let (q, z1) = class[0].clone();
        let mut cols = BTreeMap::new();
        for (k, (m, z)) in class.iter().enumerate() {
            let offset = as_i64(&(z - &z1)).ok_or_else(|| fail(format!("{z} - {z1} is not an integer")))?;
            if k > 0 {
                let (l, prev) = &class[k - 1];
                let prev_offset = as_i64(&(prev - &z1)).expect("same class");
                if offset >= prev_offset {
                    return Err(fail(format!("zeros {prev} and {z} are not strictly decreasing")));
                }
                if offset + *m as i64 >= prev_offset + *l as i64 {
                    return Err(fail(format!("column for {z} (height {m}) overlaps the one for {prev} (height {l})")));
                }
            }
            let j = q as i64 - k as i64;
            let bottom = j - offset;
            let top = bottom - *m as i64 + 1;
            if top < 1 {
                return Err(fail(format!("column for {z} reaches row {top}")));
            }
            cols.insert(j, Column { top: top as usize, bottom: bottom as usize });
        }
        let diagram = SkewDiagram::from_columns(&cols)?;
        for m in 1..n {
            let expect = Poly::from_shifts(class.iter().filter(|(l, _)| *l == m).map(|(_, z)| z));
            if diagram_drinfeld_poly(&diagram, m, n - 1)?.shift(&z1) != expect {
                return Err(fail(format!("diagram polynomial at level {m} differs from the class product")));
            }
        }
        parts.push(FactorPart { h: z1, diagram });
    }
    let f = Factorization { n, parts };
    if f.zeros().sorted() != zd.sorted() {
        return Err(fail("recomposed zeros differ from the input".into()));
    }
    Ok(f)
}

/// A coefficient of a rescaled `A_m` whose minimal polynomial has a repeated root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanWitness {
    pub m: usize,
    pub power: usize,
    pub minimal_polynomial: Poly,
}

impl fmt::Display for JordanWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coefficient of u^{} in a{} has minimal polynomial {}", self.power, self.m, self.minimal_polynomial)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplicityVerdict {
    pub semisimple: bool,
    pub commuting: bool,
    pub coefficients: usize,
    pub witness: Option<JordanWitness>,
}

/// Tests whether the coefficients of `ρ_m·A_m`, `m = 1, …, N`, act semisimply.
pub fn semisimplicity_test(spec: &ModuleSpec, seed: u64) -> Result<SemisimplicityVerdict, OracleError> {
    let oracle = TensorOracle::new(spec)?;
    let fam = oracle_families(&oracle, seed)?;
    let mut coeffs: Vec<(usize, usize, ExactMatrix)> = Vec::new();
    for m in 1..=spec.rank() {
        for (power, c) in fam.a(m).coeffs().iter().enumerate() {
            if !c.is_zero() {
                coeffs.push((m, power, c.clone()));
            }
        }
    }
    let commuting = coeffs.iter().enumerate().all(|(k, x)| coeffs[k + 1..].iter().all(|y| x.2.commutator(&y.2).is_zero()));
    let minimal = par::try_map(&coeffs, |(_, _, c)| {
        let p = minimal_polynomial(c)?;
        Ok::<_, ExactError>((is_squarefree(&p)?, p))
    })?;
    let witness = coeffs
        .iter()
        .zip(minimal)
        .find(|(_, (sf, _))| !sf)
        .map(|((m, power, _), (_, p))| JordanWitness { m: *m, power: *power, minimal_polynomial: p });
    Ok(SemisimplicityVerdict { semisimple: commuting && witness.is_none(), commuting, coefficients: coeffs.len(), witness })
}

/// Tameness of the zero data of `spec` next to the semisimplicity test.
#[derive(Clone, Debug)]
pub struct Classification {
    pub zeros: ZeroData,
    pub tame: Option<TameWitness>,
    pub semisimplicity: SemisimplicityVerdict,
}

impl Classification {
    pub fn is_tame(&self) -> bool {
        self.tame.is_none()
    }

    pub fn consistent(&self) -> bool {
        self.is_tame() == self.semisimplicity.semisimple
    }
}

pub fn classify(spec: &ModuleSpec, seed: u64) -> Result<Classification, OracleError> {
    let zeros = ZeroData::from_spec(spec).map_err(|e| OracleError::Interpolation(e.to_string()))?;
    let tame = tame_witness(&zeros);
    let semisimplicity = semisimplicity_test(spec, seed)?;
    Ok(Classification { zeros, tame, semisimplicity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::engine::drinfeld_polys;
    use crate::exact::frac;

    fn zd(text: &str, n: usize) -> ZeroData {
        ZeroData::parse(text, n).unwrap()
    }

    #[test]
    fn parse_and_format_round_trip() {
        let z = zd("m=1:0,5;m=2:1/2", 3);
        assert_eq!(z.level(1), &[int(0), int(5)]);
        assert_eq!(z.level(2), &[frac(1, 2)]);
        assert_eq!(z.to_string(), "m=1:0,5;m=2:1/2");
        assert_eq!(ZeroData::parse(&z.to_string(), 3).unwrap(), z);
        assert!(ZeroData::parse("m=3:1", 3).is_err());
        assert!(ZeroData::parse("m=1 0", 3).is_err());
        assert!(ZeroData::parse("", 2).unwrap().is_empty());
    }

    #[test]
    fn tameness_examples() {
        assert!(is_tame(&zd("m=1:0,5", 2)));
        let w = tame_witness(&zd("m=1:0,0", 2)).unwrap();
        assert_eq!((w.l, w.m, w.difference), (1, 1, 0));
        let w = tame_witness(&zd("m=1:0,1;m=2:1", 3)).unwrap();
        assert_eq!((w.l, w.i, w.m, w.j, w.difference), (1, 2, 2, 1, 0));
        assert!(is_tame(&zd("m=1:0,1", 2)));
    }

    #[test]
    fn tameness_ignores_global_shifts() {
        for text in ["m=1:0,5", "m=1:0,0", "m=1:0,1;m=2:1", "m=1:3,1/2;m=2:1,2;m=3:-1"] {
            let z = zd(text, 4);
            assert_eq!(is_tame(&z), is_tame(&z.shifted(&frac(7, 3))), "{text}");
        }
    }

    #[test]
    fn factorize_two_zeros() {
        let f = factorize(&zd("m=1:5,0", 2)).unwrap();
        assert_eq!(f.parts.len(), 1);
        assert_eq!(f.parts[0].h, int(5));
        let profile = column_profile(&f.parts[0].diagram);
        assert_eq!(profile.get(&1), Some(&(1, 0)));
        assert_eq!(profile.get(&0), Some(&(1, -5)));
        assert_eq!(profile.len(), 2);
        assert_eq!(f.zeros().sorted(), zd("m=1:0,5", 2));
    }

    #[test]
    fn factorize_empty_and_refusal() {
        let f = factorize(&ZeroData::new(3)).unwrap();
        assert!(f.parts.is_empty());
        assert!(matches!(factorize(&zd("m=1:0,0", 2)), Err(TameError::NotTame(_))));
    }

    #[test]
    fn factorization_spec_has_the_same_drinfeld_polynomials() {
        for text in ["m=1:5,0", "m=1:0,1/2;m=2:3", "m=1:2;m=2:0,4", "m=2:1,-3;m=1:1/3"] {
            let z = zd(text, 3);
            let f = factorize(&z).unwrap();
            let spec = f.to_spec().unwrap();
            let polys = drinfeld_polys(&spec).unwrap();
            for m in 1..3 {
                assert_eq!(polys[m - 1], z.poly(m), "{text} level {m}");
            }
        }
    }

    #[test]
    fn catalog_zero_data_matches_drinfeld_polynomials() {
        for e in catalog() {
            let z = ZeroData::from_spec(&e.spec).unwrap();
            let polys = drinfeld_polys(&e.spec).unwrap();
            for m in 1..e.spec.rank() {
                assert_eq!(z.poly(m), polys[m - 1], "{}", e.name);
            }
        }
    }

    #[test]
    fn semisimplicity_on_two_vector_modules() {
        let equal = ModuleSpec::vectors(2, &[int(0), int(0)]).unwrap();
        let v = semisimplicity_test(&equal, 3).unwrap();
        assert!(!v.semisimple);
        assert!(v.commuting);
        let w = v.witness.unwrap();
        assert_eq!((w.m, w.power), (1, 0));
        assert_eq!(w.minimal_polynomial, &Poly::var().pow(2) * &Poly::linear(int(-1)));

        let apart = ModuleSpec::vectors(2, &[int(0), int(1)]).unwrap();
        assert!(semisimplicity_test(&apart, 3).unwrap().semisimple);
        let generic = ModuleSpec::vectors(2, &[int(0), frac(1, 2)]).unwrap();
        assert!(semisimplicity_test(&generic, 3).unwrap().semisimple);
    }
}
