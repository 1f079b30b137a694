//! Sparse Laurent polynomials in two commuting variables α, β with
//! arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(k, l)` of the monomial `α^k β^l`.
pub type Monomial = (i64, i64);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    // zero coefficients are never stored
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(k: i64, l: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((k, l), coeff);
        }
        LaurentPoly { terms }
    }

    pub fn alpha() -> Self {
        LaurentPoly::monomial(1, 0, 1)
    }

    pub fn beta() -> Self {
        LaurentPoly::monomial(0, 1, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial().is_some_and(|(m, c)| m == (0, 0) && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// `Some((exponents, coefficient))` when this is a single term.
    pub fn as_monomial(&self) -> Option<(Monomial, &BigInt)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    /// Exponents of a `±α^k β^l` term, if this is one.
    pub fn unit_monomial(&self) -> Option<(Monomial, bool)> {
        let (m, c) = self.as_monomial()?;
        (c.abs().is_one()).then_some((m, c.is_negative()))
    }

    /// Exact evaluation at nonzero rationals.
    pub fn evaluate(&self, alpha: &BigRational, beta: &BigRational) -> BigRational {
        let mut sum = BigRational::zero();
        for (&(k, l), c) in &self.terms {
            sum += BigRational::from_integer(c.clone()) * rational_pow(alpha, k) * rational_pow(beta, l);
        }
        sum
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let mag = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        mag.recip()
    } else {
        mag
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(k1, l1), c1) in &self.terms {
            for (&(k2, l2), c2) in &rhs.terms {
                out.add_term((k1 + k2, l1 + l2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(k, l), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let constant = k == 0 && l == 0;
            if !mag.is_one() || constant {
                write!(f, "{mag}")?;
            }
            for (sym, e) in [("α", k), ("β", l)] {
                match e {
                    0 => {}
                    1 => f.write_str(sym)?,
                    _ => write!(f, "{sym}^{e}")?,
                }
            }
        }
        Ok(())
    }
}
