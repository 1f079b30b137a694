//! Explicit mapping class sequences carrying a curve word to one of the four
//! base curves `a`, `b`, `a²`, `ab⁻¹a⁻¹b⁻¹`.

use std::fmt;

use crate::classify::{classify, SccClass};
use crate::mcg::{McgGenerator, McgWord};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseCurve {
    A,
    B,
    A2,
    Boundary,
}

impl BaseCurve {
    pub const ALL: [BaseCurve; 4] = [BaseCurve::A, BaseCurve::B, BaseCurve::A2, BaseCurve::Boundary];

    pub fn word(self) -> Word {
        use Letter as L;
        match self {
            BaseCurve::A => Word::letter(L::A),
            BaseCurve::B => Word::letter(L::B),
            BaseCurve::A2 => Word::reduce([L::A, L::A]),
            BaseCurve::Boundary => Word::reduce([L::A, L::B_INV, L::A_INV, L::B_INV]),
        }
    }

    /// The base curve of the orbit containing `class`.
    pub fn of_class(class: SccClass) -> BaseCurve {
        match class {
            SccClass::GenA { .. } | SccClass::Slope { doubled: false, .. } => BaseCurve::A,
            SccClass::GenB { .. } => BaseCurve::B,
            SccClass::GenA2 { .. } | SccClass::Slope { doubled: true, .. } => BaseCurve::A2,
            SccClass::Boundary { .. } => BaseCurve::Boundary,
        }
    }
}

impl fmt::Display for BaseCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word().fmt(f)
    }
}

/// The base curves, in the order `a, b, a², ab⁻¹a⁻¹b⁻¹`.
pub fn c0_elements() -> Vec<Word> {
    BaseCurve::ALL.iter().map(|b| b.word()).collect()
}

/// `mcg(input) = conjugator · target^(±1) · conjugator⁻¹`, exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalizationResult {
    pub mcg: McgWord,
    pub target: BaseCurve,
    pub target_inverted: bool,
    pub conjugator: Word,
}

/// Finds a generator sequence taking `w` to a base curve. Returns `None` when
/// `w` is not a simple-closed-curve word.
///
/// Slope classes `abⁿ`, `abⁿabⁿ` are untwisted by `t_b^{-n}`; classes whose
/// a-letters are negative get a final `y`. `b⁻¹` and the inverse boundary class
/// use `w1`, which exchanges the two boundary classes.
pub fn canonicalize(w: &Word) -> Option<CanonicalizationResult> {
    let class = classify(w)?;
    let target = BaseCurve::of_class(class);
    let mcg = match class {
        SccClass::GenB { inverted } | SccClass::Boundary { inverted } => {
            McgWord::repeat(McgGenerator::W1, inverted as usize)
        }
        SccClass::GenA { inverted } | SccClass::GenA2 { inverted } => {
            McgWord::repeat(McgGenerator::Y, inverted as usize)
        }
        SccClass::Slope { n, inverted, .. } => {
            McgWord::repeat(McgGenerator::Y, inverted as usize).compose(&McgWord::twist_power(-n))
        }
    };
    let image = mcg.apply(w);
    let (target_inverted, conjugator) = match_conjugate(&image, &target.word())?;
    Some(CanonicalizationResult { mcg, target, target_inverted, conjugator })
}

/// If `image = g · t^(±1) · g⁻¹`, returns the sign flag and `g`.
fn match_conjugate(image: &Word, target: &Word) -> Option<(bool, Word)> {
    let (core, conj) = image.cyclic_reduce();
    for (inverted, t) in [(false, target.clone()), (true, target.inverse())] {
        let (t_core, t_conj) = t.cyclic_reduce();
        if t_core == core {
            // image = conj·core·conj⁻¹ and t = t_conj·core·t_conj⁻¹
            let g = conj.concat(&t_conj.inverse());
            return Some((inverted, g));
        }
    }
    None
}

/// Replays `r` on `w` and checks the group identity exactly.
pub fn verify_canonicalization(w: &Word, r: &CanonicalizationResult) -> bool {
    let t = if r.target_inverted { r.target.word().inverse() } else { r.target.word() };
    r.mcg.apply(w) == t.conjugate_by(&r.conjugator)
}
