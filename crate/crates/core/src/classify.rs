//! Membership of a conjugacy class (up to inversion) in the class of
//! simple-closed-curve words, with family tagging and the topology of the
//! complement.
//!
//! The classes are `a^±1`, `a^±2`, `b^±1`, `(ab⁻¹a⁻¹b⁻¹)^±1`, `(abⁿ)^±1` and
//! `(abⁿabⁿ)^±1`, all taken up to conjugation. Classification is pattern
//! matching on the canonical cyclic word; no search is involved.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::word::{CyclicWord, Letter, Word};

/// A simple-closed-curve class. `inverted` selects the inverse class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SccClass {
    GenB { inverted: bool },
    GenA { inverted: bool },
    GenA2 { inverted: bool },
    /// `ab⁻¹a⁻¹b⁻¹`, or cyclically `aba⁻¹b` when inverted.
    Boundary { inverted: bool },
    /// `abⁿ`, or `abⁿabⁿ` when doubled. `n` is never zero.
    Slope { n: i64, doubled: bool, inverted: bool },
}

impl SccClass {
    pub fn inverted(self) -> bool {
        match self {
            SccClass::GenB { inverted }
            | SccClass::GenA { inverted }
            | SccClass::GenA2 { inverted }
            | SccClass::Boundary { inverted }
            | SccClass::Slope { inverted, .. } => inverted,
        }
    }

    /// The same family with the `inverted` flag toggled.
    pub fn toggled(self) -> SccClass {
        match self {
            SccClass::GenB { inverted } => SccClass::GenB { inverted: !inverted },
            SccClass::GenA { inverted } => SccClass::GenA { inverted: !inverted },
            SccClass::GenA2 { inverted } => SccClass::GenA2 { inverted: !inverted },
            SccClass::Boundary { inverted } => SccClass::Boundary { inverted: !inverted },
            SccClass::Slope { n, doubled, inverted } => {
                SccClass::Slope { n, doubled, inverted: !inverted }
            }
        }
    }

    pub fn family_name(self) -> &'static str {
        match self {
            SccClass::GenB { .. } => "gen_b",
            SccClass::GenA { .. } => "gen_a",
            SccClass::GenA2 { .. } => "gen_a2",
            SccClass::Boundary { .. } => "boundary",
            SccClass::Slope { .. } => "slope",
        }
    }

    /// The listed representative word.
    pub fn canonical_word(self) -> Word {
        let base = match self {
            SccClass::GenB { .. } => Word::letter(Letter::B),
            SccClass::GenA { .. } => Word::letter(Letter::A),
            SccClass::GenA2 { .. } => Word::reduce([Letter::A, Letter::A]),
            SccClass::Boundary { .. } => {
                Word::reduce([Letter::A, Letter::B_INV, Letter::A_INV, Letter::B_INV])
            }
            SccClass::Slope { n, doubled, .. } => {
                let single = Word::letter(Letter::A).concat(&Word::gen_power(crate::word::Generator::B, n));
                if doubled {
                    single.power(2)
                } else {
                    single
                }
            }
        };
        if self.inverted() {
            base.inverse()
        } else {
            base
        }
    }

    /// Every class in the families with `|n| ≤ max_n`, in a fixed order.
    pub fn all_up_to(max_n: i64) -> Vec<SccClass> {
        let mut out = Vec::new();
        for inverted in [false, true] {
            out.push(SccClass::GenB { inverted });
            out.push(SccClass::GenA { inverted });
            out.push(SccClass::GenA2 { inverted });
            out.push(SccClass::Boundary { inverted });
        }
        for n in (-max_n..=max_n).filter(|&n| n != 0) {
            for doubled in [false, true] {
                for inverted in [false, true] {
                    out.push(SccClass::Slope { n, doubled, inverted });
                }
            }
        }
        out
    }

    pub fn topo_type(self) -> TopoType {
        match self {
            SccClass::GenA { .. } | SccClass::Slope { doubled: false, .. } => TopoType {
                separating: false,
                one_sided: true,
                pieces: vec![SurfacePiece::nonorientable("once-punctured Mobius band", 1, 2)],
            },
            SccClass::GenB { .. } => TopoType {
                separating: false,
                one_sided: false,
                pieces: vec![SurfacePiece::orientable("three-holed sphere", 0, 3)],
            },
            SccClass::GenA2 { .. } | SccClass::Slope { doubled: true, .. } => TopoType {
                separating: true,
                one_sided: false,
                pieces: vec![
                    SurfacePiece::nonorientable("Mobius band", 1, 1),
                    SurfacePiece::nonorientable("once-punctured Mobius band", 1, 2),
                ],
            },
            SccClass::Boundary { .. } => TopoType {
                separating: true,
                one_sided: false,
                pieces: vec![
                    SurfacePiece::orientable("annulus", 0, 2),
                    SurfacePiece::nonorientable("Klein bottle with one hole", 2, 1),
                ],
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurfacePiece {
    pub name: &'static str,
    pub orientable: bool,
    pub genus: u32,
    pub boundary_components: u32,
    pub euler_characteristic: i64,
}

impl SurfacePiece {
    fn orientable(name: &'static str, genus: u32, boundary: u32) -> Self {
        SurfacePiece {
            name,
            orientable: true,
            genus,
            boundary_components: boundary,
            euler_characteristic: 2 - 2 * genus as i64 - boundary as i64,
        }
    }

    fn nonorientable(name: &'static str, genus: u32, boundary: u32) -> Self {
        SurfacePiece {
            name,
            orientable: false,
            genus,
            boundary_components: boundary,
            euler_characteristic: 2 - genus as i64 - boundary as i64,
        }
    }
}

/// Topology of the surface cut along the curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TopoType {
    pub separating: bool,
    pub one_sided: bool,
    pub pieces: Vec<SurfacePiece>,
}

impl TopoType {
    pub fn euler_characteristic(&self) -> i64 {
        self.pieces.iter().map(|p| p.euler_characteristic).sum()
    }
}

/// Classifies the conjugacy class of `w` up to inversion. `None` means the
/// class is not represented by a simple closed curve.
pub fn classify(w: &Word) -> Option<SccClass> {
    classify_cyclic(&w.cyclic())
}

pub fn classify_cyclic(c: &CyclicWord) -> Option<SccClass> {
    let letters = c.letters();
    let Some(first_a) = letters.iter().position(|l| l.is_a()) else {
        return match letters {
            [l] => Some(SccClass::GenB { inverted: l.inverse }),
            _ => None,
        };
    };
    // Blocks of (a-letter, signed b-exponent following it), read cyclically.
    // The word is cyclically reduced, so each b-run has a single sign.
    let mut blocks: Vec<(Letter, i64)> = Vec::new();
    for l in letters[first_a..].iter().chain(&letters[..first_a]) {
        if l.is_a() {
            blocks.push((*l, 0));
        } else if let Some(last) = blocks.last_mut() {
            last.1 += l.sign();
        }
    }
    match blocks.as_slice() {
        [(a, run)] => {
            let inverted = a.inverse;
            Some(if *run == 0 {
                SccClass::GenA { inverted }
            } else {
                let n = if inverted { -run } else { *run };
                SccClass::Slope { n, doubled: false, inverted }
            })
        }
        [(a1, r1), (a2, r2)] if a1 == a2 => {
            if r1 != r2 {
                return None;
            }
            let inverted = a1.inverse;
            Some(if *r1 == 0 {
                SccClass::GenA2 { inverted }
            } else {
                let n = if inverted { -r1 } else { *r1 };
                SccClass::Slope { n, doubled: true, inverted }
            })
        }
        [(a1, r1), (_, r2)] => {
            // a-letters of opposite sign; read the run after the positive one first.
            let (after_pos, after_neg) = if a1.inverse { (*r2, *r1) } else { (*r1, *r2) };
            match (after_pos, after_neg) {
                (-1, -1) => Some(SccClass::Boundary { inverted: false }),
                (1, 1) => Some(SccClass::Boundary { inverted: true }),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Maximum cyclic length accepted by [`build_oracle_set`].
pub const ORACLE_MAX_LEN: usize = 24;
/// Maximum cyclic length accepted by [`enumerate_classes`].
pub const ENUMERATE_MAX_LEN: usize = 12;

/// Canonical cyclic words of every member class of cyclic length `≤ max_len`,
/// built directly from the family list without calling [`classify`].
pub fn build_oracle_set(max_len: usize) -> Result<BTreeSet<CyclicWord>> {
    if max_len > ORACLE_MAX_LEN {
        return Err(Error::ResourceGuard { what: "oracle length", got: max_len, limit: ORACLE_MAX_LEN });
    }
    let parse = |s: &str| s.parse::<Word>().expect("static word");
    let mut words: Vec<Word> = ["a", "a^2", "b", "ab^-1a^-1b^-1"].iter().map(|s| parse(s)).collect();
    let n_max = max_len as i64;
    for n in -n_max..=n_max {
        let single = parse(&format!("ab^{n}"));
        words.push(single.power(2));
        words.push(single);
    }
    let mut set = BTreeSet::new();
    for w in words {
        for candidate in [w.cyclic(), w.inverse().cyclic()] {
            if !candidate.is_empty() && candidate.len() <= max_len {
                set.insert(candidate);
            }
        }
    }
    Ok(set)
}

/// One entry of [`enumerate_classes`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    pub cyclic: CyclicWord,
    pub class: Option<SccClass>,
}

/// Every cyclic class of nonempty cyclically reduced words of length
/// `≤ max_len`, classified, ordered by length then letter order.
pub fn enumerate_classes(max_len: usize) -> Result<Vec<ClassEntry>> {
    if max_len > ENUMERATE_MAX_LEN {
        return Err(Error::ResourceGuard {
            what: "enumeration length",
            got: max_len,
            limit: ENUMERATE_MAX_LEN,
        });
    }
    let mut out = Vec::new();
    for len in 1..=max_len {
        let mut level: Vec<CyclicWord> = Letter::ALL
            .par_iter()
            .flat_map_iter(|&first| {
                let mut found = Vec::new();
                let mut prefix = vec![first];
                extend_canonical(&mut prefix, len, &mut found);
                found
            })
            .collect();
        level.sort();
        out.extend(level.into_iter().map(|cyclic| {
            let class = classify_cyclic(&cyclic);
            ClassEntry { cyclic, class }
        }));
    }
    Ok(out)
}

fn extend_canonical(prefix: &mut Vec<Letter>, len: usize, found: &mut Vec<CyclicWord>) {
    if prefix.len() == len {
        if let Some(c) = CyclicWord::from_canonical(prefix.clone()) {
            found.push(c);
        }
        return;
    }
    let first = prefix[0];
    let last = *prefix.last().expect("nonempty prefix");
    for l in Letter::ALL {
        // A canonical rotation starts with its least letter.
        if l == last.inv() || l < first {
            continue;
        }
        prefix.push(l);
        extend_canonical(prefix, len, found);
        prefix.pop();
    }
}
