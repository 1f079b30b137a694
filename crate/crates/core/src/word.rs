//! Words in the free group on `a`, `b`.
//!
//! A [`Word`] is always freely reduced. A [`CyclicWord`] is the canonical
//! representative of a conjugacy class: cyclically reduced and rotated to the
//! lexicographically least rotation under the letter order `a < A < b < B`.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::ParseError;

/// Largest absolute exponent accepted by the parser.
pub const MAX_EXPONENT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    pub fn symbol(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
        }
    }
}

/// A generator or its inverse.
///
/// The derived ordering is the canonical-rotation order `a < a⁻¹ < b < b⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub const A: Letter = Letter { generator: Generator::A, inverse: false };
    pub const A_INV: Letter = Letter { generator: Generator::A, inverse: true };
    pub const B: Letter = Letter { generator: Generator::B, inverse: false };
    pub const B_INV: Letter = Letter { generator: Generator::B, inverse: true };

    /// All four letters in canonical order.
    pub const ALL: [Letter; 4] = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];

    pub fn inv(self) -> Letter {
        Letter { inverse: !self.inverse, ..self }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_a(self) -> bool {
        self.generator == Generator::A
    }

    /// Single-character form: lowercase for generators, uppercase for inverses.
    pub fn to_char(self) -> char {
        let c = self.generator.symbol();
        if self.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

/// Signed letter counts `(e_a, e_b)` of a word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExponentPair {
    pub a: i64,
    pub b: i64,
}

impl ExponentPair {
    pub fn new(a: i64, b: i64) -> Self {
        ExponentPair { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl Add for ExponentPair {
    type Output = ExponentPair;

    fn add(self, rhs: ExponentPair) -> ExponentPair {
        ExponentPair::new(self.a + rhs.a, self.b + rhs.b)
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l] }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            if letters.last() == Some(&l.inv()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word { letters }
    }

    /// `g^n` for a single generator.
    pub fn gen_power(g: Generator, n: i64) -> Self {
        let l = Letter { generator: g, inverse: n < 0 };
        Word { letters: vec![l; n.unsigned_abs() as usize] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }

    pub fn power(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn exponent_sums(&self) -> ExponentPair {
        let mut e = ExponentPair::default();
        for l in &self.letters {
            match l.generator {
                Generator::A => e.a += l.sign(),
                Generator::B => e.b += l.sign(),
            }
        }
        e
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) if self.letters.len() > 1 => f != l.inv(),
            _ => true,
        }
    }

    /// Splits `self = conjugator · core · conjugator⁻¹` with `core` in canonical
    /// cyclic form.
    pub fn cyclic_reduce(&self) -> (CyclicWord, Word) {
        let n = self.letters.len();
        let mut i = 0;
        while 2 * i + 1 < n && self.letters[i] == self.letters[n - 1 - i].inv() {
            i += 1;
        }
        let outer = &self.letters[..i];
        let middle = &self.letters[i..n - i];
        let shift = least_rotation(middle);
        let mut conjugator = outer.to_vec();
        conjugator.extend_from_slice(&middle[..shift]);
        let mut core = middle[shift..].to_vec();
        core.extend_from_slice(&middle[..shift]);
        (CyclicWord { letters: core }, Word::reduce(conjugator))
    }

    pub fn cyclic(&self) -> CyclicWord {
        self.cyclic_reduce().0
    }

    /// Maximal runs of equal letters as `(letter, run length)`.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        runs(&self.letters)
    }
}

fn runs(letters: &[Letter]) -> Vec<(Letter, usize)> {
    let mut out: Vec<(Letter, usize)> = Vec::new();
    for &l in letters {
        match out.last_mut() {
            Some((prev, count)) if *prev == l => *count += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

/// Index of the lexicographically least rotation (first one on ties).
fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    let mut best = 0;
    for start in 1..n {
        let candidate = s[start..].iter().chain(&s[..start]);
        let current = s[best..].iter().chain(&s[..best]);
        if candidate.lt(current) {
            best = start;
        }
    }
    best
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        self.concat(&rhs)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::reduce(iter)
    }
}

fn fmt_letters(letters: &[Letter], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("1");
    }
    for (l, count) in runs(letters) {
        let exp = l.sign() * count as i64;
        if exp == 1 {
            write!(f, "{}", l.generator.symbol())?;
        } else {
            write!(f, "{}^{}", l.generator.symbol(), exp)?;
        }
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.letters, f)
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// Parses the word grammar: terms `letter ('^' '-'? digit+)?`, where uppercase
/// letters denote inverses and whitespace between terms is ignored. A lone
/// `1` is accepted as the identity so that printed words parse back.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    if text.trim() == "1" {
        return Ok(Word::identity());
    }
    let bytes = text.as_bytes();
    let mut raw = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let letter = match c {
            b'a' => Letter::A,
            b'A' => Letter::A_INV,
            b'b' => Letter::B,
            b'B' => Letter::B_INV,
            _ => {
                let ch = text[pos..].chars().next().unwrap_or('?');
                return Err(ParseError::new(pos, format!("unexpected character '{ch}'")));
            }
        };
        pos += 1;
        let mut exp: i64 = 1;
        if bytes.get(pos) == Some(&b'^') {
            let caret = pos;
            pos += 1;
            let negative = bytes.get(pos) == Some(&b'-');
            if negative {
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(ParseError::new(pos, "expected digits after '^'"));
            }
            let magnitude: u64 = text[start..pos]
                .parse()
                .ok()
                .filter(|m| *m <= MAX_EXPONENT)
                .ok_or_else(|| {
                    ParseError::new(caret, format!("exponent exceeds {MAX_EXPONENT} in absolute value"))
                })?;
            exp = if negative { -(magnitude as i64) } else { magnitude as i64 };
        }
        let l = if exp < 0 { letter.inv() } else { letter };
        raw.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
    }
    Ok(Word::reduce(raw))
}

/// Canonical representative of a conjugacy class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The representative as a plain word.
    pub fn to_word(&self) -> Word {
        Word { letters: self.letters.clone() }
    }

    /// Canonical form of the inverse class.
    pub fn inverse(&self) -> CyclicWord {
        self.to_word().inverse().cyclic()
    }

    /// Builds a cyclic word from a sequence that is already cyclically reduced
    /// and in canonical rotation. Returns `None` otherwise.
    pub fn from_canonical(letters: Vec<Letter>) -> Option<CyclicWord> {
        let w = Word { letters };
        let (c, conj) = w.cyclic_reduce();
        (conj.is_empty() && c.letters == w.letters).then_some(c)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.letters, f)
    }
}
