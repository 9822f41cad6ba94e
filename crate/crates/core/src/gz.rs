//! Gelfand-Zetlin schemes, skew Young diagrams and their contents.
//!
//! Row `l` of a scheme has `l` entries; rows and entries are indexed from 1 in
//! the accessors, matching the usual notation `λ_{li}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{int, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("weight {0:?} is not non-increasing")]
    InvalidWeight(Vec<i64>),
    #[error("no scheme with top row {lambda:?} has bottom rows {mu:?}")]
    EmptySchemeSet { lambda: Vec<i64>, mu: Vec<i64> },
    #[error("diagram has a column of height {height} exceeding {limit}")]
    ColumnTooTall { height: usize, limit: usize },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("malformed array: {0}")]
    Malformed(String),
}

/// Checks that `parts` is non-increasing.
pub fn check_weight(parts: &[i64]) -> Result<(), CombError> {
    if parts.windows(2).all(|w| w[0] >= w[1]) {
        Ok(())
    } else {
        Err(CombError::InvalidWeight(parts.to_vec()))
    }
}

/// Triangular integer array `(λ_{li})`, `1 ≤ i ≤ l ≤ K`.
///
/// The same type serves for arbitrary arrays and for interlacing schemes;
/// [`GzScheme::is_interlacing`] distinguishes them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GzScheme {
    rows: Vec<Vec<i64>>,
}

impl GzScheme {
    /// Builds from rows listed bottom (length 1) to top (length `K`).
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, CombError> {
        for (k, r) in rows.iter().enumerate() {
            if r.len() != k + 1 {
                return Err(CombError::Malformed(format!("row {} has {} entries", k + 1, r.len())));
            }
        }
        Ok(GzScheme { rows })
    }

    /// Rank `K`, the length of the top row.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `λ_{li}` with 1-based indices.
    pub fn get(&self, l: usize, i: usize) -> i64 {
        self.rows[l - 1][i - 1]
    }

    pub fn set(&mut self, l: usize, i: usize, v: i64) {
        self.rows[l - 1][i - 1] = v;
    }

    /// Row `l` (1-based); row 0 is the empty row.
    pub fn row(&self, l: usize) -> &[i64] {
        if l == 0 {
            &[]
        } else {
            &self.rows[l - 1]
        }
    }

    pub fn top_row(&self) -> &[i64] {
        self.rows.last().map_or(&[], Vec::as_slice)
    }

    /// Interlacing `λ_{li} ≥ λ_{l-1,i} ≥ λ_{l,i+1}` for all rows.
    pub fn is_interlacing(&self) -> bool {
        (2..=self.rank()).all(|l| {
            (1..l).all(|i| self.get(l, i) >= self.get(l - 1, i) && self.get(l - 1, i) >= self.get(l, i + 1))
        })
    }

    /// True when the array is a scheme with top row `lambda` and rows `1..=M` equal to `mu`.
    pub fn is_scheme_for(&self, lambda: &[i64], mu: &[i64]) -> bool {
        self.top_row() == lambda
            && (1..=mu.len()).all(|l| self.row(l) == &mu[..l])
            && self.is_interlacing()
    }

    /// Sum of all entries.
    pub fn degree(&self) -> i64 {
        self.rows.iter().flatten().sum()
    }

    /// Rows read top to bottom, the order used for canonical sorting.
    fn key(&self) -> Vec<i64> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

impl fmt::Display for GzScheme {
    /// Rows top to bottom separated by `/`, e.g. `1,0/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .rev()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Sum of entries of an array.
pub fn scheme_degree(s: &GzScheme) -> i64 {
    s.degree()
}

/// All schemes with top row `lambda`, in canonical order.
pub fn enumerate_schemes(lambda: &[i64]) -> Result<Vec<GzScheme>, CombError> {
    enumerate_schemes_lm(lambda, &[])
}

/// Schemes with top row `lambda` whose rows `1..=M` are truncations of `mu`.
///
/// Canonical order is descending lexicographic on the entries read top to
/// bottom, left to right, so the entrywise maximal scheme comes first.
pub fn enumerate_schemes_lm(lambda: &[i64], mu: &[i64]) -> Result<Vec<GzScheme>, CombError> {
    check_weight(lambda)?;
    check_weight(mu)?;
    if mu.len() > lambda.len() {
        return Err(CombError::Malformed("mu longer than lambda".into()));
    }
    let k = lambda.len();
    let mut out = Vec::new();
    if k == 0 {
        return Ok(out);
    }
    let mut rows_desc: Vec<Vec<i64>> = vec![lambda.to_vec()];
    extend_rows(&mut rows_desc, mu, &mut out);
    out.sort_by_key(|s| std::cmp::Reverse(s.key()));
    Ok(out)
}

fn extend_rows(rows_desc: &mut Vec<Vec<i64>>, mu: &[i64], out: &mut Vec<GzScheme>) {
    let upper = rows_desc.last().expect("nonempty").clone();
    let l = upper.len() - 1;
    if l == 0 {
        let rows: Vec<Vec<i64>> = rows_desc.iter().rev().cloned().collect();
        out.push(GzScheme { rows });
        return;
    }
    if l <= mu.len() {
        let cand = mu[..l].to_vec();
        if (0..l).all(|i| upper[i] >= cand[i] && cand[i] >= upper[i + 1]) {
            rows_desc.push(cand);
            extend_rows(rows_desc, mu, out);
            rows_desc.pop();
        }
        return;
    }
    let mut cur = vec![0; l];
    fill_row(&upper, 0, &mut cur, rows_desc, mu, out);
}

fn fill_row(
    upper: &[i64],
    i: usize,
    cur: &mut Vec<i64>,
    rows_desc: &mut Vec<Vec<i64>>,
    mu: &[i64],
    out: &mut Vec<GzScheme>,
) {
    if i == cur.len() {
        rows_desc.push(cur.clone());
        extend_rows(rows_desc, mu, out);
        rows_desc.pop();
        return;
    }
    for v in (upper[i + 1]..=upper[i]).rev() {
        cur[i] = v;
        fill_row(upper, i + 1, cur, rows_desc, mu, out);
    }
}

/// The distinguished scheme `Λ₀` of maximal degree in `S_{λ,μ}`.
///
/// Entries: `μ_i` on rows below `M`; `min(λ_i, μ_{i-l+M})` when `l ≥ M`
/// and `i > l - M`; `λ_i` when `l > M` and `i ≤ l - M`.
pub fn top_scheme(lambda: &[i64], mu: &[i64]) -> Result<GzScheme, CombError> {
    check_weight(lambda)?;
    check_weight(mu)?;
    let k = lambda.len();
    let m = mu.len();
    if m >= k {
        return Err(CombError::Malformed("need at least one more part in lambda than in mu".into()));
    }
    let rows = (1..=k)
        .map(|l| {
            (1..=l)
                .map(|i| {
                    if l < m {
                        mu[i - 1]
                    } else if i > l - m {
                        lambda[i - 1].min(mu[i + m - l - 1])
                    } else {
                        lambda[i - 1]
                    }
                })
                .collect()
        })
        .collect();
    let s = GzScheme { rows };
    if s.is_scheme_for(lambda, mu) {
        Ok(s)
    } else {
        Err(CombError::EmptySchemeSet { lambda: lambda.to_vec(), mu: mu.to_vec() })
    }
}

/// Skew diagram `{(i, j) : β_i ≥ j > γ_i, i ≥ 1}` with eventually equal boundaries.
///
/// `beta` and `gamma` list the first rows; beyond them both sequences equal
/// `stable`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewDiagram {
    pub beta: Vec<i64>,
    pub gamma: Vec<i64>,
    pub stable_value: i64,
}

/// One nonempty column of a skew diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Column {
    pub top: usize,
    pub bottom: usize,
}

impl Column {
    pub fn height(&self) -> usize {
        self.bottom - self.top + 1
    }
}

impl SkewDiagram {
    pub fn new(mut beta: Vec<i64>, mut gamma: Vec<i64>, stable_value: i64) -> Result<Self, CombError> {
        let n = beta.len().max(gamma.len());
        beta.resize(n, stable_value);
        gamma.resize(n, stable_value);
        let full_b: Vec<i64> = beta.iter().copied().chain([stable_value]).collect();
        let full_g: Vec<i64> = gamma.iter().copied().chain([stable_value]).collect();
        if check_weight(&full_b).is_err() || check_weight(&full_g).is_err() {
            return Err(CombError::InvalidDiagram("boundaries must be non-increasing".into()));
        }
        if beta.iter().zip(&gamma).any(|(b, g)| b < g) {
            return Err(CombError::InvalidDiagram("beta below gamma".into()));
        }
        let mut d = SkewDiagram { beta, gamma, stable_value };
        d.trim();
        Ok(d)
    }

    pub fn empty() -> Self {
        SkewDiagram { beta: Vec::new(), gamma: Vec::new(), stable_value: 0 }
    }

    fn trim(&mut self) {
        while self.beta.last() == Some(&self.stable_value) && self.gamma.last() == Some(&self.stable_value) {
            self.beta.pop();
            self.gamma.pop();
        }
    }

    pub fn is_empty(&self) -> bool {
        self.beta.iter().zip(&self.gamma).all(|(b, g)| b == g)
    }

    /// All boxes `(i, j)` in row-major order.
    pub fn boxes(&self) -> Vec<(usize, i64)> {
        self.beta
            .iter()
            .zip(&self.gamma)
            .enumerate()
            .flat_map(|(k, (&b, &g))| ((g + 1)..=b).map(move |j| (k + 1, j)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.boxes().len()
    }

    /// Nonempty columns keyed by column index.
    pub fn columns(&self) -> BTreeMap<i64, Column> {
        let mut cols: BTreeMap<i64, Column> = BTreeMap::new();
        for (i, j) in self.boxes() {
            cols.entry(j)
                .and_modify(|c| {
                    c.top = c.top.min(i);
                    c.bottom = c.bottom.max(i);
                })
                .or_insert(Column { top: i, bottom: i });
        }
        cols
    }

    /// Builds the diagram whose columns are exactly `cols`.
    ///
    /// Fails unless the box set is a skew diagram, i.e. every row is an
    /// interval and both boundaries are non-increasing.
    pub fn from_columns(cols: &BTreeMap<i64, Column>) -> Result<Self, CombError> {
        let Some((&jmin, _)) = cols.first_key_value() else {
            return Ok(SkewDiagram::empty());
        };
        let jmax = *cols.last_key_value().expect("nonempty").0;
        let rows = cols.values().map(|c| c.bottom).max().expect("nonempty");
        let mut beta = Vec::with_capacity(rows);
        let mut gamma = Vec::with_capacity(rows);
        for i in 1..=rows {
            let b = cols.iter().filter(|(_, c)| c.bottom >= i).map(|(&j, _)| j).max().unwrap_or(jmin - 1);
            let g = cols.iter().filter(|(_, c)| c.top <= i).map(|(&j, _)| j).min().unwrap_or(jmax + 1) - 1;
            beta.push(b.max(g));
            gamma.push(g);
        }
        let d = SkewDiagram::new(beta, gamma, jmin - 1)?;
        if &d.columns() != cols {
            return Err(CombError::InvalidDiagram("columns do not form a skew diagram".into()));
        }
        Ok(d)
    }
}

/// Column index to `(height, content of the bottom box)`.
pub fn column_profile(d: &SkewDiagram) -> BTreeMap<i64, (usize, i64)> {
    d.columns()
        .into_iter()
        .map(|(j, c)| (j, (c.height(), j - c.bottom as i64)))
        .collect()
}

/// `∏ (u + k)` over bottom-box contents `k` of the height-`m` columns.
pub fn diagram_drinfeld_poly(d: &SkewDiagram, m: usize, n: usize) -> Result<Poly, CombError> {
    let profile = column_profile(d);
    if let Some(&(height, _)) = profile.values().find(|(h, _)| *h > n) {
        return Err(CombError::ColumnTooTall { height, limit: n });
    }
    let contents: Vec<_> = profile.values().filter(|(h, _)| *h == m).map(|&(_, k)| int(k)).collect();
    Ok(Poly::from_shifts(&contents))
}

/// The diagram `κ^{(m)}` between rows `M + m` and `M` of `Λ₀`, padded by `λ_{M+N}`.
pub fn level_diagram(lambda: &[i64], mu: &[i64], m: usize) -> Result<SkewDiagram, CombError> {
    let top = top_scheme(lambda, mu)?;
    let big_m = mu.len();
    let stable = *lambda.last().expect("nonempty");
    SkewDiagram::new(top.row(big_m + m).to_vec(), top.row(big_m).to_vec(), stable)
}

/// The skew diagram `λ/μ`, equal to `κ^{(N)}`.
pub fn skew_shape(lambda: &[i64], mu: &[i64]) -> Result<SkewDiagram, CombError> {
    check_weight(lambda)?;
    check_weight(mu)?;
    let stable = *lambda.last().ok_or_else(|| CombError::Malformed("empty lambda".into()))?;
    SkewDiagram::new(lambda.to_vec(), mu.to_vec(), stable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn weyl_dimension(lambda: &[i64]) -> i64 {
        let k = lambda.len();
        let mut num = 1i128;
        let mut den = 1i128;
        for i in 0..k {
            for j in (i + 1)..k {
                num *= (lambda[i] - lambda[j] + (j - i) as i64) as i128;
                den *= (j - i) as i128;
            }
        }
        (num / den) as i64
    }

    #[test]
    fn scheme_counts() {
        assert_eq!(enumerate_schemes(&[0]).unwrap().len(), 1);
        assert_eq!(enumerate_schemes(&[1, 0]).unwrap().len(), 2);
        assert_eq!(enumerate_schemes(&[2, 1, 0]).unwrap().len(), 8);
        assert_eq!(enumerate_schemes_lm(&[1, 0], &[]).unwrap().len(), 2);
        assert!(enumerate_schemes_lm(&[1, 1], &[3]).unwrap().is_empty());
        // (3,1) has two parts, so the only free row is the pinned one.
        assert_eq!(enumerate_schemes_lm(&[3, 1], &[2]).unwrap().len(), 1);
        assert_eq!(enumerate_schemes_lm(&[3, 1, 0], &[2]).unwrap().len(), 4);
    }

    #[test]
    fn canonical_order_starts_at_top() {
        let s = enumerate_schemes(&[1, 0]).unwrap();
        assert_eq!(s[0].get(1, 1), 1);
        assert_eq!(s[1].get(1, 1), 0);
        for lambda in [[2, 1, 0], [3, 1, 1], [2, 2, 0]] {
            let all = enumerate_schemes(&lambda).unwrap();
            assert_eq!(all[0], top_scheme(&lambda, &[]).unwrap());
        }
    }

    #[test]
    fn weyl_dimension_matches() {
        for lambda in [vec![2, 1, 0], vec![3, 1, 0, 0], vec![2, 2, 1, 0], vec![4, 0], vec![1, 1, 0, -1], vec![3, 2, 0]] {
            assert_eq!(enumerate_schemes(&lambda).unwrap().len() as i64, weyl_dimension(&lambda));
        }
    }

    #[test]
    fn top_scheme_examples() {
        let t = top_scheme(&[3, 1], &[2]).unwrap();
        assert_eq!(t.row(1), &[2]);
        assert_eq!(t.row(2), &[3, 1]);
        let t = top_scheme(&[1, 0], &[]).unwrap();
        assert_eq!(t.row(1), &[1]);
        assert_eq!(t.row(2), &[1, 0]);
        assert!(matches!(top_scheme(&[1, 1], &[3]), Err(CombError::EmptySchemeSet { .. })));
    }

    #[test]
    fn degrees() {
        let s = GzScheme::new(vec![vec![1], vec![1, 0]]).unwrap();
        assert_eq!(scheme_degree(&s), 2);
        let z = GzScheme::new(vec![vec![0], vec![0, 0]]).unwrap();
        assert_eq!(scheme_degree(&z), 0);
    }

    #[test]
    fn kappa_examples() {
        assert!(level_diagram(&[2, 1, 0], &[], 0).unwrap().is_empty());
        let full = level_diagram(&[2, 1, 0], &[], 3).unwrap();
        assert_eq!(full.boxes(), vec![(1, 1), (1, 2), (2, 1)]);
        let k = level_diagram(&[3, 1], &[2], 1).unwrap();
        assert_eq!(k.boxes(), vec![(1, 3)]);
        assert_eq!(column_profile(&k), BTreeMap::from([(3, (1, 2))]));
    }

    #[test]
    fn column_profile_of_six_row_skew_diagram() {
        let d = SkewDiagram::new(vec![6, 6, 4, 2, 0, -2], vec![3, 2, 2, 1, -3, -3], -3).unwrap();
        let expected = BTreeMap::from([
            (6, (2, 4)),
            (5, (2, 3)),
            (4, (3, 1)),
            (3, (2, 0)),
            (2, (1, -2)),
            (0, (1, -5)),
            (-1, (1, -6)),
            (-2, (2, -8)),
        ]);
        assert_eq!(column_profile(&d), expected);
        assert_eq!(SkewDiagram::from_columns(&d.columns()).unwrap(), d);
    }

    #[test]
    fn small_profiles() {
        assert!(column_profile(&SkewDiagram::empty()).is_empty());
        let one = SkewDiagram::new(vec![1], vec![0], 0).unwrap();
        assert_eq!(column_profile(&one), BTreeMap::from([(1, (1, 0))]));
    }

    #[test]
    fn diagram_polynomials() {
        let d = skew_shape(&[2, 1, 0], &[]).unwrap();
        assert_eq!(diagram_drinfeld_poly(&d, 1, 3).unwrap(), Poly::linear(int(1)));
        assert_eq!(diagram_drinfeld_poly(&d, 2, 3).unwrap(), Poly::linear(int(-1)));
        for k in 0..5 {
            let d = skew_shape(&[k, 0], &[]).unwrap();
            let expect = Poly::from_shifts(&(0..k).map(int).collect::<Vec<_>>());
            assert_eq!(diagram_drinfeld_poly(&d, 1, 2).unwrap(), expect);
        }
        assert_eq!(diagram_drinfeld_poly(&SkewDiagram::empty(), 1, 2).unwrap(), Poly::one());
        let tall = SkewDiagram::new(vec![1, 1, 1], vec![0, 0, 0], 0).unwrap();
        assert!(matches!(diagram_drinfeld_poly(&tall, 1, 2), Err(CombError::ColumnTooTall { .. })));
    }

    fn arb_pair() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
        (1usize..3, 0usize..3).prop_flat_map(|(n, m)| {
            (
                prop::collection::vec(0i64..4, n + m).prop_map(|mut v| {
                    v.sort_unstable_by(|a, b| b.cmp(a));
                    v
                }),
                prop::collection::vec(0i64..4, m).prop_map(|mut v| {
                    v.sort_unstable_by(|a, b| b.cmp(a));
                    v
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn top_scheme_is_maximal((lambda, mu) in arb_pair()) {
            let all = enumerate_schemes_lm(&lambda, &mu).unwrap();
            let n = lambda.len() - mu.len();
            let fits = skew_shape(&lambda, &mu)
                .is_ok_and(|shape| column_profile(&shape).values().all(|(h, _)| *h <= n));
            prop_assert_eq!(!all.is_empty(), fits);
            match top_scheme(&lambda, &mu) {
                Ok(t) => {
                    prop_assert!(all.contains(&t));
                    prop_assert!(all.iter().all(|s| s.degree() <= t.degree()));
                    prop_assert!(all.iter().all(|s| s.is_scheme_for(&lambda, &mu)));
                }
                Err(_) => prop_assert!(all.is_empty()),
            }
        }

        #[test]
        fn level_diagram_ladder((lambda, mu) in arb_pair()) {
            prop_assume!(top_scheme(&lambda, &mu).is_ok());
            let n = lambda.len() - mu.len();
            prop_assert_eq!(level_diagram(&lambda, &mu, n).unwrap().boxes(), skew_shape(&lambda, &mu).unwrap().boxes());
            for m in 1..=n {
                let upper = level_diagram(&lambda, &mu, m).unwrap();
                let lower = level_diagram(&lambda, &mu, m - 1).unwrap();
                let cols = upper.columns();
                prop_assert!(cols.values().all(|c| c.height() <= m));
                let mut expect: Vec<(usize, i64)> = upper
                    .boxes()
                    .into_iter()
                    .filter(|&(i, j)| !(cols[&j].height() == m && cols[&j].bottom == i))
                    .collect();
                expect.sort_unstable();
                let mut got = lower.boxes();
                got.sort_unstable();
                prop_assert_eq!(got, expect);
            }
        }
    }
}
