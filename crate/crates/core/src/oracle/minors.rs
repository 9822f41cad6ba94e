//! Quantum minors by the signed permutation sum.

use std::fmt;

use crate::exact::{int, ExactMatrix, Rational};

use super::{OracleError, Realization};

/// A strictly increasing sequence of indices in `1..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSeq(Vec<usize>);

impl IndexSeq {
    pub fn new(entries: Vec<usize>, n: usize) -> Option<Self> {
        let increasing = entries.windows(2).all(|w| w[0] < w[1]);
        let in_range = entries.iter().all(|&i| (1..=n).contains(&i));
        (increasing && in_range).then_some(IndexSeq(entries))
    }

    /// `(1, …, m)`.
    pub fn initial(m: usize) -> Self {
        IndexSeq((1..=m).collect())
    }

    /// `(1, …, m−1, m+1)`.
    pub fn skip_last(m: usize) -> Self {
        let mut v: Vec<usize> = (1..m).collect();
        v.push(m + 1);
        IndexSeq(v)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The increasing complement in `1..=n`.
    pub fn complement(&self, n: usize) -> IndexSeq {
        IndexSeq((1..=n).filter(|i| !self.0.contains(i)).collect())
    }

    /// `(n − i_m + 1, …, n − i_1 + 1)`.
    pub fn reflect(&self, n: usize) -> IndexSeq {
        IndexSeq(self.0.iter().rev().map(|&i| n - i + 1).collect())
    }
}

impl fmt::Display for IndexSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All permutations of `0..m` with their signs, in lexicographic order.
pub fn permutations(m: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == used.len() {
            let inversions = (0..prefix.len())
                .flat_map(|a| (a + 1..prefix.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| prefix[a] > prefix[b])
                .count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                go(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// `Q_ij(u) = Σ_g sgn(g) T_{i_1 j_g(1)}(u) T_{i_2 j_g(2)}(u−1) ⋯ T_{i_m j_g(m)}(u−m+1)`.
pub fn quantum_minor<R: Realization + ?Sized>(
    rep: &R,
    i: &IndexSeq,
    j: &IndexSeq,
    u: &Rational,
) -> Result<ExactMatrix, OracleError> {
    assert_eq!(i.len(), j.len(), "minor needs index sequences of equal length");
    let m = i.len();
    let dim = rep.dim();
    if m == 0 {
        return Ok(ExactMatrix::identity(dim));
    }
    let gens = (0..m)
        .map(|k| rep.generators(&(u - int(k as i64))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut acc = ExactMatrix::zeros(dim, dim);
    for (g, sign) in permutations(m) {
        let mut term = gens[0].get(i.0[0], j.0[g[0]]).clone();
        for k in 1..m {
            if term.is_zero() {
                break;
            }
            term = &term * gens[k].get(i.0[k], j.0[g[k]]);
        }
        acc = if sign > 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

/// `A_m, B_m, C_m, D_m` at one point.
#[derive(Clone, Debug)]
pub struct NamedMinors {
    /// `A_0, …, A_N`.
    pub a: Vec<ExactMatrix>,
    /// `B_m` at index `m − 1` for `m = 1..N`.
    pub b: Vec<ExactMatrix>,
    pub c: Vec<ExactMatrix>,
    pub d: Vec<ExactMatrix>,
}

impl NamedMinors {
    pub fn a(&self, m: usize) -> &ExactMatrix {
        &self.a[m]
    }

    pub fn b(&self, m: usize) -> &ExactMatrix {
        &self.b[m - 1]
    }

    pub fn c(&self, m: usize) -> &ExactMatrix {
        &self.c[m - 1]
    }

    pub fn d(&self, m: usize) -> &ExactMatrix {
        &self.d[m - 1]
    }
}

pub fn named_minors<R: Realization + ?Sized>(rep: &R, u: &Rational) -> Result<NamedMinors, OracleError> {
    let n = rep.rank();
    let a = (0..=n)
        .map(|m| quantum_minor(rep, &IndexSeq::initial(m), &IndexSeq::initial(m), u))
        .collect::<Result<Vec<_>, _>>()?;
    let (mut b, mut c, mut d) = (Vec::new(), Vec::new(), Vec::new());
    for m in 1..n {
        let (i, j) = (IndexSeq::initial(m), IndexSeq::skip_last(m));
        b.push(quantum_minor(rep, &i, &j, u)?);
        c.push(quantum_minor(rep, &j, &i, u)?);
        d.push(quantum_minor(rep, &j, &j, u)?);
    }
    Ok(NamedMinors { a, b, c, d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], (vec![0, 1, 2], 1));
        assert_eq!(p[1], (vec![0, 2, 1], -1));
        assert_eq!(p.iter().map(|x| x.1).sum::<i64>(), 0);
        assert_eq!(permutations(0), vec![(vec![], 1)]);
    }

    #[test]
    fn index_sequences() {
        assert!(IndexSeq::new(vec![1, 3], 3).is_some());
        assert!(IndexSeq::new(vec![3, 1], 3).is_none());
        assert!(IndexSeq::new(vec![4], 3).is_none());
        let s = IndexSeq::skip_last(2);
        assert_eq!(s.entries(), &[1, 3]);
        assert_eq!(s.complement(4).entries(), &[2, 4]);
        assert_eq!(s.reflect(4).entries(), &[2, 4]);
        assert_eq!(IndexSeq::initial(1).reflect(3).entries(), &[3]);
    }
}
