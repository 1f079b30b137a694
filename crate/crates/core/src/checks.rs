//! Exhaustive verification suites shared by the CLI `verify` command.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::classify::{build_oracle_set, classify, enumerate_classes, SccClass};
use crate::error::Result;
use crate::mcg::{McgGenerator, McgWord};
use crate::orbit::{canonicalize, verify_canonicalization, BaseCurve};
use crate::word::{CyclicWord, Letter, Word};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckSummary {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: CheckSummary) -> CheckSummary {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

/// Every generator image of every class with `|n| ≤ max_n` is a member with
/// the same topological type.
pub fn closure_check(max_n: u32) -> CheckSummary {
    SccClass::all_up_to(max_n as i64)
        .par_iter()
        .map(|&class| {
            let w = class.canonical_word();
            let mut summary = CheckSummary::default();
            for g in McgGenerator::ALL {
                summary.cases += 1;
                let image = g.apply(&w);
                match classify(&image) {
                    None => summary.failures.push(format!("{g}({w}) = {image} is not a member")),
                    Some(c) if c.topo_type() != class.topo_type() => {
                        summary.failures.push(format!("{g}({w}) = {image} changes topological type"))
                    }
                    Some(_) => {}
                }
            }
            summary
        })
        .reduce(CheckSummary::default, CheckSummary::merge)
}

/// Canonicalization succeeds, replays exactly, lands on the orbit's base curve
/// and respects the length bound, for every class with `|n| ≤ max_n`
/// conjugated by each of `conjugators`.
pub fn canonicalization_check(max_n: u32, conjugators: &[Word]) -> CheckSummary {
    SccClass::all_up_to(max_n as i64)
        .par_iter()
        .map(|&class| {
            let base = class.canonical_word();
            let bound = match class {
                SccClass::Slope { n, .. } => n.unsigned_abs() as usize + 2,
                _ => 1,
            };
            let mut summary = CheckSummary::default();
            for g in conjugators {
                summary.cases += 1;
                let w = base.conjugate_by(g);
                let Some(r) = canonicalize(&w) else {
                    summary.failures.push(format!("{w}: canonicalize rejected a member"));
                    continue;
                };
                if !verify_canonicalization(&w, &r) {
                    summary.failures.push(format!("{w}: replay mismatch"));
                } else if r.target != BaseCurve::of_class(class) {
                    summary.failures.push(format!("{w}: wrong base curve {}", r.target));
                } else if r.mcg.len() > bound {
                    summary.failures.push(format!("{w}: sequence of length {} exceeds {bound}", r.mcg.len()));
                }
            }
            summary
        })
        .reduce(CheckSummary::default, CheckSummary::merge)
}

/// All reduced words of length `≤ max_len`, in length-then-letter order.
pub fn reduced_words_up_to(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut frontier = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in Letter::ALL {
                if w.letters().last() == Some(&l.inv()) {
                    continue;
                }
                next.push(w.concat(&Word::letter(l)));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSummary {
    pub classes: usize,
    pub members: usize,
    pub oracle_size: usize,
    pub disagreements: Vec<CyclicWord>,
}

/// Compares [`classify`] with the family-list oracle on every cyclic class of
/// length `≤ max_len`.
pub fn oracle_check(max_len: usize) -> Result<OracleSummary> {
    let oracle = build_oracle_set(max_len)?;
    let entries = enumerate_classes(max_len)?;
    let members: BTreeSet<&CyclicWord> =
        entries.iter().filter(|e| e.class.is_some()).map(|e| &e.cyclic).collect();
    let disagreements = entries
        .iter()
        .filter(|e| e.class.is_some() != oracle.contains(&e.cyclic))
        .map(|e| e.cyclic.clone())
        .collect();
    Ok(OracleSummary {
        classes: entries.len(),
        members: members.len(),
        oracle_size: oracle.len(),
        disagreements,
    })
}

/// The eight generator images: a and b under `t_b`, `t_b⁻¹`, `y`, `w1`.
pub fn generator_table_check() -> CheckSummary {
    let table: [(McgGenerator, &str, &str); 4] = [
        (McgGenerator::Tb, "ab", "b"),
        (McgGenerator::TbInv, "ab^-1", "b"),
        (McgGenerator::Y, "a^-1", "b"),
        (McgGenerator::W1, "a", "b^-1"),
    ];
    let mut summary = CheckSummary::default();
    for (g, image_a, image_b) in table {
        for (src, expected) in [("a", image_a), ("b", image_b)] {
            summary.cases += 1;
            let src: Word = src.parse().expect("static word");
            let expected: Word = expected.parse().expect("static word");
            let got = g.apply(&src);
            if got != expected {
                summary.failures.push(format!("{g}({src}) = {got}, expected {expected}"));
            }
        }
    }
    summary
}

/// `t_b^n(a) = abⁿ` for `0 ≤ n ≤ max_n`.
pub fn twist_induction_check(max_n: u32) -> CheckSummary {
    let a = Word::letter(Letter::A);
    let mut summary = CheckSummary::default();
    for n in 0..=max_n as i64 {
        summary.cases += 1;
        let image = McgWord::twist_power(n).apply(&a);
        let expected = a.concat(&Word::gen_power(crate::word::Generator::B, n));
        if image != expected {
            summary.failures.push(format!("t_b^{n}(a) = {image}, expected {expected}"));
        }
    }
    summary
}
