//! Exhaustive checks that ρ kills no power of a simple closed curve.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::classify::SccClass;
use crate::error::{Error, Result};
use crate::laurent::rational_pow;
use crate::rep::{rho, rho_at, Params};

/// Search bound used by [`verify_theorem41`] when the parameters are not
/// coprime integers.
pub const DEFAULT_PARAM_BOUND: u32 = 32;

/// Outcome of [`check_params`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamCheck {
    pub holds: bool,
    /// The verdict comes from a finite search rather than factorization.
    pub bounded: bool,
    /// A pair `(k, l) ≠ (0, 0)` with `α^k β^l = ±1`, when one was found.
    pub witness: Option<(i64, i64)>,
}

/// Whether `α^k β^l ≠ ±1` for every `(k, l) ≠ (0, 0)`.
///
/// Coprime integers with `|α|, |β| ≥ 2` are accepted outright by unique
/// factorization. Anything else is searched over `|k|, |l| ≤ bound`.
pub fn check_params(p: &Params, bound: u32) -> ParamCheck {
    if p.alpha.is_integer() && p.beta.is_integer() {
        let (a, b) = (p.alpha.numer().abs(), p.beta.numer().abs());
        let two = 2.into();
        if a >= two && b >= two && a.gcd(&b).is_one() {
            return ParamCheck { holds: true, bounded: false, witness: None };
        }
    }
    let bound = bound.max(1) as i64;
    let alpha_pows: Vec<BigRational> = (-bound..=bound).map(|k| rational_pow(&p.alpha, k)).collect();
    let beta_pows: Vec<BigRational> = (-bound..=bound).map(|l| rational_pow(&p.beta, l)).collect();
    let one = BigRational::one();
    for k in -bound..=bound {
        for l in -bound..=bound {
            if k == 0 && l == 0 {
                continue;
            }
            let v = &alpha_pows[(k + bound) as usize] * &beta_pows[(l + bound) as usize];
            if v.abs() == one {
                return ParamCheck { holds: false, bounded: true, witness: Some((k, l)) };
            }
        }
    }
    ParamCheck { holds: true, bounded: true, witness: None }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The top-left entry is not a `±α^k β^l` monomial.
    DiagonalNotMonomial,
    /// The top-left entry is `±1` symbolically.
    DiagonalTrivial,
    /// The specialized matrix is `±I`.
    NumericIdentity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub class: SccClass,
    pub power: u32,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub classes: usize,
    pub cases: usize,
    pub params_bounded: bool,
    /// Diagonal exponent pair of `ρ(w)` for each class, in class order.
    pub diagonal_exponents: Vec<(SccClass, (i64, i64))>,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every class with `|n| ≤ max_n` and every `1 ≤ k ≤ max_power`, checks
/// symbolically that the top-left entry of `ρ(w^k)` is a nontrivial monomial,
/// and numerically at `p` that `ρ(w^k) ≠ ±I`.
pub fn verify_theorem41(max_n: u32, max_power: u32, p: &Params) -> Result<Report> {
    let check = check_params(p, DEFAULT_PARAM_BOUND);
    if !check.holds {
        let (k, l) = check.witness.unwrap_or_default();
        return Err(Error::InvalidParams(format!("alpha^{k} beta^{l} = ±1")));
    }
    let classes = SccClass::all_up_to(max_n as i64);
    let per_class: Vec<((i64, i64), Vec<Violation>)> = classes
        .par_iter()
        .map(|&class| {
            let w = class.canonical_word();
            let mut violations = Vec::new();
            let symbolic = rho(&w);
            let diag = symbolic.d1.unit_monomial().map(|(m, _)| m).unwrap_or_default();
            let mut power = symbolic.clone();
            for k in 1..=max_power {
                if k > 1 {
                    power = power.mul(&symbolic);
                }
                let kind = match power.d1.unit_monomial() {
                    None => Some(ViolationKind::DiagonalNotMonomial),
                    Some(((0, 0), _)) => Some(ViolationKind::DiagonalTrivial),
                    Some(_) => None,
                };
                if let Some(kind) = kind {
                    violations.push(Violation { class, power: k, kind });
                }
                if rho_at(&w.power(k as i64), p).is_projective_identity() {
                    violations.push(Violation { class, power: k, kind: ViolationKind::NumericIdentity });
                }
            }
            (diag, violations)
        })
        .collect();
    let mut report = Report {
        classes: classes.len(),
        cases: classes.len() * max_power as usize,
        params_bounded: check.bounded,
        diagonal_exponents: Vec::with_capacity(classes.len()),
        violations: Vec::new(),
    };
    for (class, (diag, violations)) in classes.into_iter().zip(per_class) {
        report.diagonal_exponents.push((class, diag));
        report.violations.extend(violations);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn coprime_integers_hold_without_search() {
        let c = check_params(&Params::integers(2, 3).unwrap(), 1);
        assert!(c.holds && !c.bounded);
        assert!(check_params(&Params::integers(-5, 12).unwrap(), 1).holds);
    }

    #[test]
    fn unit_parameter_fails() {
        let c = check_params(&Params::integers(1, 2).unwrap(), 4);
        assert!(!c.holds);
        assert_eq!(c.witness.map(|(_, l)| l), Some(0));
        assert!(!check_params(&Params::integers(-1, 7).unwrap(), 4).holds);
    }

    #[test]
    fn dependent_integers_fail() {
        let c = check_params(&Params::integers(4, 2).unwrap(), 4);
        assert!(!c.holds && c.bounded);
        let (k, l) = c.witness.unwrap();
        assert_eq!(rational_pow(&q(4, 1), k) * rational_pow(&q(2, 1), l), q(1, 1));
        assert!(!check_params(&Params::integers(6, 6).unwrap(), 2).holds);
    }

    #[test]
    fn rational_parameters_use_bounded_search() {
        let c = check_params(&Params::new(q(2, 3), q(5, 7)).unwrap(), 6);
        assert!(c.holds && c.bounded);
        // (2/3)·(3/2) = 1
        assert!(!check_params(&Params::new(q(2, 3), q(3, 2)).unwrap(), 2).holds);
    }

    #[test]
    fn small_run_has_no_violations() {
        let report = verify_theorem41(3, 3, &Params::default()).unwrap();
        assert!(report.passed());
        assert_eq!(report.classes, 8 + 6 * 4);
        assert_eq!(report.cases, report.classes * 3);
        assert!(report.diagonal_exponents.iter().all(|(_, e)| *e != (0, 0)));
    }

    #[test]
    fn boundary_and_b_diagonals() {
        let report = verify_theorem41(1, 1, &Params::default()).unwrap();
        let lookup = |c: SccClass| report.diagonal_exponents.iter().find(|(x, _)| *x == c).unwrap().1;
        assert_eq!(lookup(SccClass::Boundary { inverted: false }), (0, -2));
        assert_eq!(lookup(SccClass::GenB { inverted: false }), (0, 1));
        let b3 = rho_at(&SccClass::GenB { inverted: false }.canonical_word().power(3), &Params::default());
        assert_eq!(b3.d1, q(27, 1));
    }

    #[test]
    fn bad_params_are_rejected() {
        assert!(verify_theorem41(2, 2, &Params::integers(4, 2).unwrap()).is_err());
    }

    #[test]
    fn degenerate_params_would_be_caught() {
        // With α = 1 the class of a is killed numerically. Bypass the
        // precondition to make sure the numeric check notices.
        let p = Params::integers(1, 3).unwrap();
        let w = SccClass::GenA { inverted: false }.canonical_word();
        assert!(rho_at(&w, &p).is_projective_identity());
    }
}
