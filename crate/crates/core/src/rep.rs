//! The representation ρ: π₁ → PGL(2,ℝ) given by
//!
//! ```text
//! ρ(a) = [α  0  ]      ρ(b) = [β  1  ]
//!        [0  α⁻¹]             [0  β⁻¹]
//! ```
//!
//! Images are upper triangular with determinant one, so they are stored as
//! `(d1, u, d2)`. Entries live in ℤ[α^±1, β^±1] symbolically, or in ℚ after
//! specialization.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::word::{Generator, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UTMatrix {
    pub d1: LaurentPoly,
    pub u: LaurentPoly,
    pub d2: LaurentPoly,
}

impl UTMatrix {
    pub fn identity() -> Self {
        UTMatrix { d1: LaurentPoly::one(), u: LaurentPoly::zero(), d2: LaurentPoly::one() }
    }

    pub fn mul(&self, rhs: &UTMatrix) -> UTMatrix {
        UTMatrix {
            d1: &self.d1 * &rhs.d1,
            u: &(&self.d1 * &rhs.u) + &(&self.u * &rhs.d2),
            d2: &self.d2 * &rhs.d2,
        }
    }

    /// Inverse of a determinant-one upper triangular matrix.
    pub fn inverse(&self) -> UTMatrix {
        UTMatrix { d1: self.d2.clone(), u: -&self.u, d2: self.d1.clone() }
    }

    pub fn determinant(&self) -> LaurentPoly {
        &self.d1 * &self.d2
    }

    /// Equal to `±I` in the ring, i.e. the identity in PGL.
    pub fn is_projective_identity(&self) -> bool {
        if !self.u.is_zero() || self.d1 != self.d2 {
            return false;
        }
        match self.d1.unit_monomial() {
            Some((m, _)) => m == (0, 0),
            None => false,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.d1.is_one() && self.u.is_zero() && self.d2.is_one()
    }

    pub fn specialize(&self, p: &Params) -> RationalUTMatrix {
        RationalUTMatrix {
            d1: self.d1.evaluate(&p.alpha, &p.beta),
            u: self.u.evaluate(&p.alpha, &p.beta),
            d2: self.d2.evaluate(&p.alpha, &p.beta),
        }
    }
}

impl fmt::Display for UTMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [0, {}]]", self.d1, self.u, self.d2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalUTMatrix {
    pub d1: BigRational,
    pub u: BigRational,
    pub d2: BigRational,
}

impl RationalUTMatrix {
    pub fn identity() -> Self {
        RationalUTMatrix { d1: BigRational::one(), u: BigRational::zero(), d2: BigRational::one() }
    }

    pub fn mul(&self, rhs: &RationalUTMatrix) -> RationalUTMatrix {
        RationalUTMatrix {
            d1: &self.d1 * &rhs.d1,
            u: &self.d1 * &rhs.u + &self.u * &rhs.d2,
            d2: &self.d2 * &rhs.d2,
        }
    }

    pub fn determinant(&self) -> BigRational {
        &self.d1 * &self.d2
    }

    pub fn is_projective_identity(&self) -> bool {
        let one = BigRational::one();
        self.u.is_zero() && self.d1 == self.d2 && (self.d1 == one || self.d1 == -one)
    }
}

/// Nonzero rational values for α and β.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub alpha: BigRational,
    pub beta: BigRational,
}

impl Params {
    pub fn new(alpha: BigRational, beta: BigRational) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::InvalidParams("alpha and beta must be nonzero".into()));
        }
        Ok(Params { alpha, beta })
    }

    pub fn integers(alpha: i64, beta: i64) -> Result<Self> {
        Params::new(BigRational::from_integer(alpha.into()), BigRational::from_integer(beta.into()))
    }
}

impl Default for Params {
    fn default() -> Self {
        Params::integers(2, 3).expect("nonzero defaults")
    }
}

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParams(format!("'{s}' is not an integer or p/q rational"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Always renders as `p/q`, including `q = 1`.
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn rho_letter(l: Letter) -> UTMatrix {
    let mono = |k, l| LaurentPoly::monomial(k, l, 1);
    match (l.generator, l.inverse) {
        (Generator::A, false) => UTMatrix { d1: mono(1, 0), u: LaurentPoly::zero(), d2: mono(-1, 0) },
        (Generator::A, true) => UTMatrix { d1: mono(-1, 0), u: LaurentPoly::zero(), d2: mono(1, 0) },
        (Generator::B, false) => UTMatrix { d1: mono(0, 1), u: LaurentPoly::one(), d2: mono(0, -1) },
        (Generator::B, true) => {
            UTMatrix { d1: mono(0, -1), u: LaurentPoly::monomial(0, 0, -1), d2: mono(0, 1) }
        }
    }
}

/// Symbolic image of a word, multiplying letter matrices left to right.
pub fn rho(w: &Word) -> UTMatrix {
    w.letters().iter().fold(UTMatrix::identity(), |acc, &l| acc.mul(&rho_letter(l)))
}

/// Numeric image computed directly over ℚ, letter by letter.
pub fn rho_at(w: &Word, p: &Params) -> RationalUTMatrix {
    let a = RationalUTMatrix { d1: p.alpha.clone(), u: BigRational::zero(), d2: p.alpha.recip() };
    let a_inv = RationalUTMatrix { d1: p.alpha.recip(), u: BigRational::zero(), d2: p.alpha.clone() };
    let b = RationalUTMatrix { d1: p.beta.clone(), u: BigRational::one(), d2: p.beta.recip() };
    let b_inv = RationalUTMatrix { d1: p.beta.recip(), u: -BigRational::one(), d2: p.beta.clone() };
    w.letters().iter().fold(RationalUTMatrix::identity(), |acc, l| {
        acc.mul(match (l.generator, l.inverse) {
            (Generator::A, false) => &a,
            (Generator::A, true) => &a_inv,
            (Generator::B, false) => &b,
            (Generator::B, true) => &b_inv,
        })
    })
}

/// `x y x⁻¹ y⁻¹`.
pub fn commutator(x: &Word, y: &Word) -> Word {
    x.concat(y).concat(&x.inverse()).concat(&y.inverse())
}

/// The double commutator `[[a, b], [a, b²]]`: nontrivial, yet killed by ρ
/// because the image of ρ is metabelian.
pub fn kernel_witness() -> Word {
    let a = Word::letter(Letter::A);
    let b = Word::letter(Letter::B);
    commutator(&commutator(&a, &b), &commutator(&a, &b.power(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::a5_image;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn letter_images() {
        let a = rho_letter(Letter::A);
        assert_eq!(a.d1, LaurentPoly::alpha());
        assert!(a.u.is_zero());
        let b = rho_letter(Letter::B);
        assert_eq!(b.d1, LaurentPoly::beta());
        assert!(b.u.is_one());
        let b_inv = rho_letter(Letter::B_INV);
        assert!(b.mul(&b_inv).is_identity());
        assert_eq!(b.inverse(), b_inv);
    }

    #[test]
    fn products() {
        assert!(rho_letter(Letter::A).mul(&rho_letter(Letter::A_INV)).is_identity());
        let ab = rho_letter(Letter::A).mul(&rho_letter(Letter::B));
        assert_eq!(ab.d1, LaurentPoly::monomial(1, 1, 1));
        assert_eq!(ab.u, LaurentPoly::alpha());
        assert_eq!(ab.d2, LaurentPoly::monomial(-1, -1, 1));
    }

    #[test]
    fn word_images() {
        assert_eq!(rho(&w("aBAB")).d1, LaurentPoly::monomial(0, -2, 1));
        for n in -4..=4 {
            let m = rho(&w(&format!("ab^{n}")));
            assert_eq!(m.d1, LaurentPoly::monomial(1, n, 1));
        }
        assert!(rho(&Word::identity()).is_identity());
    }

    #[test]
    fn specialization_examples() {
        let p = Params::default();
        let a = rho_letter(Letter::A).specialize(&p);
        assert_eq!((a.d1, a.u, a.d2), (q(2, 1), q(0, 1), q(1, 2)));
        let b = rho_letter(Letter::B).specialize(&p);
        assert_eq!((b.d1, b.u, b.d2), (q(3, 1), q(1, 1), q(1, 3)));
        assert_eq!(UTMatrix::identity().specialize(&Params::integers(7, -5).unwrap()), RationalUTMatrix::identity());
    }

    #[test]
    fn direct_numeric_route_matches_specialization() {
        let p = Params::new(q(-3, 2), q(5, 7)).unwrap();
        let x = w("ab^3Ab^-2a^2BA");
        assert_eq!(rho_at(&x, &p), rho(&x).specialize(&p));
    }

    #[test]
    fn projective_identity() {
        assert!(UTMatrix::identity().is_projective_identity());
        assert!(!rho_letter(Letter::A).is_projective_identity());
        let minus = UTMatrix {
            d1: LaurentPoly::monomial(0, 0, -1),
            u: LaurentPoly::zero(),
            d2: LaurentPoly::monomial(0, 0, -1),
        };
        assert!(minus.is_projective_identity());
        let neg = RationalUTMatrix { d1: q(-1, 1), u: q(0, 1), d2: q(-1, 1) };
        assert!(neg.is_projective_identity());
        // α=1 collapses ρ(a) to the identity numerically but not symbolically
        let p = Params::integers(1, 3).unwrap();
        assert!(rho(&w("a")).specialize(&p).is_projective_identity());
    }

    #[test]
    fn witness_is_in_kernel_and_nontrivial() {
        let k = kernel_witness();
        assert_eq!(k, w("abABabbABaBAbbaBBA"));
        assert!(rho(&k).is_identity());
        assert!(rho(&k).is_projective_identity());
        assert_eq!(a5_image(&k).to_string(), "(13)(45)");
    }

    #[test]
    fn rationals_parse_and_print() {
        assert_eq!(parse_rational("2").unwrap(), q(2, 1));
        assert_eq!(parse_rational("-6/4").unwrap(), q(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&q(2, 1)), "2/1");
        assert_eq!(format_rational(&q(-3, 2)), "-3/2");
        assert!(Params::integers(0, 3).is_err());
    }
}
