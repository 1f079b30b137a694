//! Permutations of {1,…,5} and the homomorphism a ↦ (123), b ↦ (345) onto A₅.
//!
//! Composition is function composition: in `p * q` the right factor acts first.

use std::fmt;
use std::ops::Mul;

use crate::word::{Generator, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Permutation5 {
    // images[i] is the image of i + 1, zero-based
    images: [u8; 5],
}

impl Permutation5 {
    pub fn identity() -> Self {
        Permutation5 { images: [0, 1, 2, 3, 4] }
    }

    /// Builds a permutation from the images of 1..=5. Returns `None` unless bijective.
    pub fn from_images(images: [u8; 5]) -> Option<Self> {
        let mut seen = [false; 5];
        let mut zero_based = [0u8; 5];
        for (i, &img) in images.iter().enumerate() {
            if !(1..=5).contains(&img) || seen[(img - 1) as usize] {
                return None;
            }
            seen[(img - 1) as usize] = true;
            zero_based[i] = img - 1;
        }
        Some(Permutation5 { images: zero_based })
    }

    /// A single cycle on the given points (1-based).
    pub fn cycle(points: &[u8]) -> Self {
        let mut p = Permutation5::identity();
        for (i, &x) in points.iter().enumerate() {
            let next = points[(i + 1) % points.len()];
            p.images[(x - 1) as usize] = next - 1;
        }
        p
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.images[(x - 1) as usize] + 1
    }

    pub fn images(&self) -> [u8; 5] {
        self.images.map(|i| i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0u8; 5];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Permutation5 { images }
    }

    pub fn is_identity(&self) -> bool {
        *self == Permutation5::identity()
    }

    pub fn is_even(&self) -> bool {
        let mut seen = [false; 5];
        let mut transpositions = 0;
        for start in 0..5 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = [false; 5];
        let mut out = Vec::new();
        for start in 0..5 {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u8 + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl Mul for Permutation5 {
    type Output = Permutation5;

    fn mul(self, rhs: Permutation5) -> Permutation5 {
        Permutation5 { images: rhs.images.map(|i| self.images[i as usize]) }
    }
}

impl fmt::Display for Permutation5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for x in c {
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Image of `w` under a ↦ (123), b ↦ (345).
pub fn a5_image(w: &Word) -> Permutation5 {
    let a = Permutation5::cycle(&[1, 2, 3]);
    let b = Permutation5::cycle(&[3, 4, 5]);
    let (a_inv, b_inv) = (a.inverse(), b.inverse());
    w.letters().iter().fold(Permutation5::identity(), |acc, l| {
        acc * match (l.generator, l.inverse) {
            (Generator::A, false) => a,
            (Generator::A, true) => a_inv,
            (Generator::B, false) => b,
            (Generator::B, true) => b_inv,
        }
    })
}
