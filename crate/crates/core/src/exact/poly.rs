//! Dense univariate polynomials and rational functions over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::rational::{format_rational, int, Rational};
use super::ExactError;

/// Polynomial with coefficients stored lowest degree first and no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear polynomial `u + c`.
    pub fn linear(c: Rational) -> Self {
        Self::new(vec![c, Rational::one()])
    }

    /// `u`.
    pub fn var() -> Self {
        Self::linear(Rational::zero())
    }

    /// Product of `u + c` over `roots_shift`.
    pub fn from_shifts<'a>(shifts: impl IntoIterator<Item = &'a Rational>) -> Self {
        shifts
            .into_iter()
            .fold(Poly::one(), |acc, c| &acc * &Poly::linear(c.clone()))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `u^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * u + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// The polynomial `u -> p(u + h)`.
    pub fn shift(&self, h: &Rational) -> Self {
        // Horner in the shifted variable.
        let step = Poly::linear(h.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &step) + &Poly::constant(c.clone()))
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), ExactError> {
        let dl = d.leading().ok_or(ExactError::ZeroPolynomial)?.clone();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Scales to leading coefficient one; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Monic least common multiple of two nonzero polynomials.
    pub fn lcm(a: &Poly, b: &Poly) -> Poly {
        let g = Poly::gcd(a, b);
        let (q, _) = (a * b).div_rem(&g).expect("nonzero gcd");
        q.monic()
    }

    /// Exact division, failing when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly, ExactError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::NotDivisible)
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }
}

/// True when `gcd(p, p') ` is constant.
pub fn is_squarefree(p: &Poly) -> Result<bool, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    Ok(Poly::gcd(p, &p.derivative()).degree() == Some(0))
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    /// Renders like `u^2 - 1/2*u + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a.is_one() && k > 0;
            if !unit {
                write!(f, "{}", format_rational(&a))?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{k}")?,
            }
        }
        Ok(())
    }
}

/// Reduced quotient of polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let g = Poly::gcd(&num, &den);
        let g = if g.is_zero() { Poly::one() } else { g };
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let l = den.leading().expect("nonzero").clone();
        Ok(RationalFunction {
            num: num.scale(&l.recip()),
            den: den.scale(&l.recip()),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn eval(&self, u: &Rational) -> Result<Rational, ExactError> {
        let d = self.den.eval(u);
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self.num.eval(u) / d)
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero den")
    }

    pub fn div(&self, o: &RationalFunction) -> Result<RationalFunction, ExactError> {
        if o.num.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        RationalFunction::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn shift(&self, h: &Rational) -> RationalFunction {
        RationalFunction::new(self.num.shift(h), self.den.shift(h)).expect("nonzero den")
    }

    /// The polynomial value when the denominator is one.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.den == Poly::one()).then_some(&self.num)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn arithmetic_and_display() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!((&a * &b).to_string(), "u^2 - 1");
        assert_eq!(p(&[0, -2, 1]).to_string(), "u^2 - 2*u");
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[3, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn shift_matches_evaluation() {
        let a = p(&[2, -3, 0, 1]);
        let s = a.shift(&frac(1, 2));
        for x in -3..4 {
            let u = int(x);
            assert_eq!(s.eval(&u), a.eval(&(&u + frac(1, 2))));
        }
    }

    #[test]
    fn squarefree_cases() {
        assert!(!is_squarefree(&p(&[0, 0, 1])).unwrap());
        assert!(is_squarefree(&p(&[-1, 0, 1])).unwrap());
        assert!(is_squarefree(&p(&[5])).unwrap());
        assert!(is_squarefree(&Poly::zero()).is_err());
    }

    #[test]
    fn rational_function_normalizes() {
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[2, 2])).unwrap();
        assert_eq!(r.num(), &p(&[-1, 1]).scale(&frac(1, 2)));
        assert_eq!(r.den(), &Poly::one());
        assert!(RationalFunction::new(Poly::one(), Poly::zero()).is_err());
        let q = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        assert!(q.eval(&int(0)).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-6i64..6, 0..5).prop_map(|v| p(&v))
    }

    proptest! {
        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }

        #[test]
        fn gcd_divides(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = Poly::gcd(&a, &b);
            prop_assert!(a.div_exact(&g).is_ok());
            prop_assert!(b.div_exact(&g).is_ok());
            prop_assert_eq!(g.leading().cloned(), Some(Rational::one()));
        }

        #[test]
        fn eval_is_ring_hom(a in arb_poly(), b in arb_poly(), x in -5i64..5) {
            let u = int(x);
            prop_assert_eq!((&a * &b).eval(&u), a.eval(&u) * b.eval(&u));
            prop_assert_eq!((&a + &b).eval(&u), a.eval(&u) + b.eval(&u));
        }
    }
}
