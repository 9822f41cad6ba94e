//! Module descriptions: tensor products of shifted factors `V_{λ,μ}(h)`.

use std::fmt;

use num::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::rational::{format_int_list, format_rational, parse_int_list};
use crate::exact::{int, parse_rational, ExactError, Poly, Rational};
use crate::gz::{check_weight, enumerate_schemes_lm, top_scheme, CombError, GzScheme};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("rank N must be at least 1")]
    ZeroRank,
    #[error("factor {index}: lambda has {lambda} parts but mu has {mu} and N is {n}")]
    PartCount { index: usize, lambda: usize, mu: usize, n: usize },
    #[error("factor {index}: {source}")]
    Comb { index: usize, source: CombError },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("invalid module description: {0}")]
    Json(String),
}

/// One tensor factor `V_{λ,μ}(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YangianFactor {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub h: Rational,
}

impl YangianFactor {
    pub fn new(lambda: Vec<i64>, mu: Vec<i64>, h: Rational) -> Self {
        YangianFactor { lambda, mu, h }
    }

    /// Number of pinned rows `M`.
    pub fn big_m(&self) -> usize {
        self.mu.len()
    }

    pub fn schemes(&self) -> Vec<GzScheme> {
        enumerate_schemes_lm(&self.lambda, &self.mu).expect("validated factor")
    }

    pub fn top(&self) -> GzScheme {
        top_scheme(&self.lambda, &self.mu).expect("validated factor")
    }
}

/// A module `W = ⊗_s V_{λ^{(s)},μ^{(s)}}(h^{(s)})` of the Yangian of `gl_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    n: usize,
    factors: Vec<YangianFactor>,
}

#[derive(Serialize, Deserialize)]
struct RawFactor {
    lambda: String,
    #[serde(default)]
    mu: String,
    #[serde(default = "zero_string")]
    h: String,
}

fn zero_string() -> String {
    "0".into()
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    #[serde(rename = "N")]
    n: usize,
    factors: Vec<RawFactor>,
}

impl ModuleSpec {
    pub fn new(n: usize, factors: Vec<YangianFactor>) -> Result<Self, SpecError> {
        if n == 0 {
            return Err(SpecError::ZeroRank);
        }
        for (index, f) in factors.iter().enumerate() {
            if f.lambda.len() != f.mu.len() + n {
                return Err(SpecError::PartCount { index, lambda: f.lambda.len(), mu: f.mu.len(), n });
            }
            let wrap = |source| SpecError::Comb { index, source };
            check_weight(&f.lambda).map_err(wrap)?;
            check_weight(&f.mu).map_err(wrap)?;
            top_scheme(&f.lambda, &f.mu).map_err(wrap)?;
        }
        Ok(ModuleSpec { n, factors })
    }

    /// Single factor with `M = 0`.
    pub fn evaluation(lambda: Vec<i64>, h: Rational) -> Result<Self, SpecError> {
        let n = lambda.len();
        ModuleSpec::new(n, vec![YangianFactor::new(lambda, Vec::new(), h)])
    }

    /// Tensor product of vector representations `ℂ^N(h)`.
    pub fn vectors(n: usize, shifts: &[Rational]) -> Result<Self, SpecError> {
        let mut lambda = vec![0; n];
        lambda[0] = 1;
        ModuleSpec::new(
            n,
            shifts.iter().map(|h| YangianFactor::new(lambda.clone(), Vec::new(), h.clone())).collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[YangianFactor] {
        &self.factors
    }

    /// Number of tensor factors `n`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.schemes().len()).product()
    }

    /// First pair of factors whose shifts differ by an integer.
    pub fn integral_shift_pair(&self) -> Option<(usize, usize)> {
        for r in 0..self.factors.len() {
            for s in r + 1..self.factors.len() {
                if (&self.factors[r].h - &self.factors[s].h).is_integer() {
                    return Some((r, s));
                }
            }
        }
        None
    }

    /// True when all pairwise shift differences are non-integral.
    pub fn is_generic(&self) -> bool {
        self.integral_shift_pair().is_none()
    }

    /// Degree `r_m = Σ_s M^{(s)} + m·n` of the rescaling polynomial.
    pub fn rescaling_degree(&self, m: usize) -> usize {
        self.factors.iter().map(YangianFactor::big_m).sum::<usize>() + m * self.factors.len()
    }

    /// The rescaling polynomial `ρ_m` that clears denominators of the `m`-th minors.
    pub fn rescaling(&self, m: usize) -> Poly {
        let mut shifts = Vec::new();
        for f in &self.factors {
            for i in 1..=m {
                shifts.push(int(1 - i as i64) + &f.h);
            }
            for i in m + 1..=f.big_m() + m {
                shifts.push(int(f.mu[i - m - 1] - i as i64 + 1) + &f.h);
            }
        }
        Poly::from_shifts(&shifts)
    }

    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        let raw: RawSpec = serde_json::from_str(text).map_err(|e| SpecError::Json(e.to_string()))?;
        let factors = raw
            .factors
            .iter()
            .map(|f| {
                Ok(YangianFactor::new(parse_int_list(&f.lambda)?, parse_int_list(&f.mu)?, parse_rational(&f.h)?))
            })
            .collect::<Result<Vec<_>, ExactError>>()?;
        ModuleSpec::new(raw.n, factors)
    }

    pub fn to_json(&self) -> String {
        let raw = RawSpec {
            n: self.n,
            factors: self
                .factors
                .iter()
                .map(|f| RawFactor {
                    lambda: format_int_list(&f.lambda),
                    mu: format_int_list(&f.mu),
                    h: format_rational(&f.h),
                })
                .collect(),
        };
        serde_json::to_string(&raw).expect("serializable")
    }
}

impl fmt::Display for ModuleSpec {
    /// Compact form such as `N=2 [1,0|;0] x [1,0|;1/2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| {
                let h = if x.h.is_zero() { "0".to_string() } else { format_rational(&x.h) };
                format!("[{}|{};{}]", format_int_list(&x.lambda), format_int_list(&x.mu), h)
            })
            .collect();
        write!(f, "N={} {}", self.n, parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn json_roundtrip() {
        let text = r#"{"N":2,"factors":[{"lambda":"1,0","mu":"","h":"0"},{"lambda":"3,1,0","mu":"2","h":"1/3"}]}"#;
        let s = ModuleSpec::from_json(text).unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.factors()[1].h, frac(1, 3));
        assert_eq!(s.dim(), 2 * 4);
        assert_eq!(ModuleSpec::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn validation() {
        assert!(matches!(
            ModuleSpec::new(2, vec![YangianFactor::new(vec![1, 0, 0], vec![], int(0))]),
            Err(SpecError::PartCount { .. })
        ));
        assert!(matches!(
            ModuleSpec::new(1, vec![YangianFactor::new(vec![1, 1], vec![3], int(0))]),
            Err(SpecError::Comb { .. })
        ));
        assert!(ModuleSpec::from_json("{").is_err());
    }

    #[test]
    fn rescaling_degrees_and_identity() {
        let s = ModuleSpec::new(
            3,
            vec![
                YangianFactor::new(vec![2, 1, 1, 0], vec![1], frac(1, 4)),
                YangianFactor::new(vec![1, 0, 0], vec![], int(0)),
            ],
        )
        .unwrap();
        for m in 0..=3 {
            assert_eq!(s.rescaling(m).degree(), Some(s.rescaling_degree(m)));
        }
        let one = int(1);
        for m in 1..3 {
            let lhs = &s.rescaling(m) * &s.rescaling(m).shift(&-one.clone());
            let rhs = &s.rescaling(m + 1) * &s.rescaling(m - 1).shift(&-one.clone());
            assert_eq!(lhs, rhs);
        }
        assert_eq!(ModuleSpec::vectors(2, &[int(0)]).unwrap().rescaling(1), Poly::var());
    }

    #[test]
    fn genericity() {
        assert!(ModuleSpec::vectors(2, &[int(0), frac(1, 2)]).unwrap().is_generic());
        assert!(!ModuleSpec::vectors(2, &[int(0), int(1)]).unwrap().is_generic());
    }
}
