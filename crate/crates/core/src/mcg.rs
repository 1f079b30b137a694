//! Mapping class group generators acting on π₁ by substitution.
//!
//! Compositions are written as function composition: in `[g1, g2, g3]` the
//! rightmost generator `g3` acts first.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::word::{ExponentPair, Generator, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum McgGenerator {
    /// Dehn twist about `b`: a ↦ ab, b ↦ b.
    Tb,
    /// Inverse twist: a ↦ ab⁻¹, b ↦ b.
    TbInv,
    /// Crosscap slide: a ↦ a⁻¹, b ↦ b.
    Y,
    /// Boundary slide: a ↦ a, b ↦ b⁻¹.
    W1,
}

impl McgGenerator {
    pub const ALL: [McgGenerator; 4] =
        [McgGenerator::Tb, McgGenerator::TbInv, McgGenerator::Y, McgGenerator::W1];

    pub fn inverse(self) -> McgGenerator {
        match self {
            McgGenerator::Tb => McgGenerator::TbInv,
            McgGenerator::TbInv => McgGenerator::Tb,
            g => g,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            McgGenerator::Tb => "tb",
            McgGenerator::TbInv => "tb-",
            McgGenerator::Y => "y",
            McgGenerator::W1 => "w1",
        }
    }

    pub fn endo(self) -> EndoMap {
        let a = Word::letter(Letter::A);
        let b = Word::letter(Letter::B);
        let (image_a, image_b) = match self {
            McgGenerator::Tb => (Word::reduce([Letter::A, Letter::B]), b),
            McgGenerator::TbInv => (Word::reduce([Letter::A, Letter::B_INV]), b),
            McgGenerator::Y => (a.inverse(), b),
            McgGenerator::W1 => (a, b.inverse()),
        };
        EndoMap { image_a, image_b }
    }

    /// Action on exponent sums: column vector `(e_a, e_b)` is multiplied on the left.
    pub fn exponent_action(self) -> [[i64; 2]; 2] {
        match self {
            McgGenerator::Tb => [[1, 0], [1, 1]],
            McgGenerator::TbInv => [[1, 0], [-1, 1]],
            McgGenerator::Y => [[-1, 0], [0, 1]],
            McgGenerator::W1 => [[1, 0], [0, -1]],
        }
    }

    pub fn apply(self, w: &Word) -> Word {
        self.endo().apply(w)
    }
}

impl fmt::Display for McgGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for McgGenerator {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tb" => Ok(McgGenerator::Tb),
            "tb-" => Ok(McgGenerator::TbInv),
            "y" => Ok(McgGenerator::Y),
            "w1" => Ok(McgGenerator::W1),
            other => Err(ParseError::new(0, format!("unknown generator token '{other}'"))),
        }
    }
}

pub fn apply_matrix(m: [[i64; 2]; 2], e: ExponentPair) -> ExponentPair {
    ExponentPair::new(m[0][0] * e.a + m[0][1] * e.b, m[1][0] * e.a + m[1][1] * e.b)
}

/// An endomorphism of the free group given by the images of `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndoMap {
    pub image_a: Word,
    pub image_b: Word,
}

impl EndoMap {
    pub fn identity() -> Self {
        EndoMap { image_a: Word::letter(Letter::A), image_b: Word::letter(Letter::B) }
    }

    pub fn apply(&self, w: &Word) -> Word {
        let inv_a = self.image_a.inverse();
        let inv_b = self.image_b.inverse();
        let raw = w.letters().iter().flat_map(|l| {
            let image = match (l.generator, l.inverse) {
                (Generator::A, false) => &self.image_a,
                (Generator::A, true) => &inv_a,
                (Generator::B, false) => &self.image_b,
                (Generator::B, true) => &inv_b,
            };
            image.letters().iter().copied()
        });
        Word::reduce(raw)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &EndoMap) -> EndoMap {
        EndoMap { image_a: self.apply(&other.image_a), image_b: self.apply(&other.image_b) }
    }
}

/// A composition of generators, leftmost outermost.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct McgWord {
    pub gens: Vec<McgGenerator>,
}

impl McgWord {
    pub fn new(gens: Vec<McgGenerator>) -> Self {
        McgWord { gens }
    }

    pub fn identity() -> Self {
        McgWord::default()
    }

    pub fn repeat(g: McgGenerator, times: usize) -> Self {
        McgWord { gens: vec![g; times] }
    }

    /// `t_b^k` for any integer `k`.
    pub fn twist_power(k: i64) -> Self {
        let g = if k < 0 { McgGenerator::TbInv } else { McgGenerator::Tb };
        McgWord::repeat(g, k.unsigned_abs() as usize)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.gens.iter().rev().fold(w.clone(), |acc, g| g.apply(&acc))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &McgWord) -> McgWord {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        McgWord { gens }
    }

    pub fn inverse(&self) -> McgWord {
        McgWord { gens: self.gens.iter().rev().map(|g| g.inverse()).collect() }
    }

    /// The composed endomorphism, as generator images.
    pub fn endo(&self) -> EndoMap {
        self.gens.iter().fold(EndoMap::identity(), |acc, g| acc.after(&g.endo()))
    }

    pub fn tokens(&self) -> Vec<&'static str> {
        self.gens.iter().map(|g| g.token()).collect()
    }
}

impl fmt::Display for McgWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens().join(" "))
    }
}

impl FromStr for McgWord {
    type Err = ParseError;

    /// Whitespace-separated tokens from `tb`, `tb-`, `y`, `w1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut gens = Vec::new();
        let mut offset = 0;
        for token in s.split_whitespace() {
            let pos = offset + s[offset..].find(token).unwrap_or(0);
            offset = pos + token.len();
            let g = token.parse::<McgGenerator>().map_err(|e| ParseError::new(pos, e.message))?;
            gens.push(g);
        }
        Ok(McgWord { gens })
    }
}
