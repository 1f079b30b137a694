//! JSON records and table rendering for each subcommand.

use std::fmt::Write as _;

use kleinscc::checks::{CheckSummary, OracleSummary};
use kleinscc::classify::ClassEntry;
use kleinscc::rep::format_rational;
use kleinscc::{
    CanonicalizationResult, LaurentPoly, Params, RationalUTMatrix, Report, SccClass, TopoType, UTMatrix, Word,
};
use serde::Serialize;

#[derive(Serialize)]
pub struct PieceRecord {
    pub name: &'static str,
    pub orientable: bool,
    pub genus: u32,
    pub boundary: u32,
    pub euler: i64,
}

#[derive(Serialize)]
pub struct TopoRecord {
    pub separating: bool,
    pub one_sided: bool,
    pub pieces: Vec<PieceRecord>,
}

impl From<TopoType> for TopoRecord {
    fn from(t: TopoType) -> Self {
        TopoRecord {
            separating: t.separating,
            one_sided: t.one_sided,
            pieces: t
                .pieces
                .into_iter()
                .map(|p| PieceRecord {
                    name: p.name,
                    orientable: p.orientable,
                    genus: p.genus,
                    boundary: p.boundary_components,
                    euler: p.euler_characteristic,
                })
                .collect(),
        }
    }
}

/// Family fields shared by `classify` and `enumerate` records.
struct FamilyFields {
    family: Option<&'static str>,
    n: Option<i64>,
    doubled: Option<bool>,
    inverted: Option<bool>,
}

fn family_fields(class: Option<SccClass>) -> FamilyFields {
    let (n, doubled) = match class {
        Some(SccClass::Slope { n, doubled, .. }) => (Some(n), Some(doubled)),
        _ => (None, None),
    };
    FamilyFields {
        family: class.map(SccClass::family_name),
        n,
        doubled,
        inverted: class.map(SccClass::inverted),
    }
}

#[derive(Serialize)]
pub struct ClassifyRecord {
    pub input: String,
    pub reduced: String,
    pub cyclic: String,
    pub member: bool,
    pub family: Option<&'static str>,
    pub n: Option<i64>,
    pub doubled: Option<bool>,
    pub inverted: Option<bool>,
    pub topo: Option<TopoRecord>,
}

impl ClassifyRecord {
    pub fn new(input: &str, w: &Word, class: Option<SccClass>) -> Self {
        let f = family_fields(class);
        ClassifyRecord {
            input: input.to_string(),
            reduced: w.to_string(),
            cyclic: w.cyclic().to_string(),
            member: class.is_some(),
            family: f.family,
            n: f.n,
            doubled: f.doubled,
            inverted: f.inverted,
            topo: class.map(|c| c.topo_type().into()),
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let row = |out: &mut String, k: &str, v: &str| writeln!(out, "{k:<10} {v}").unwrap();
        row(&mut out, "input", &self.input);
        row(&mut out, "reduced", &self.reduced);
        row(&mut out, "cyclic", &self.cyclic);
        row(&mut out, "simple", if self.member { "yes" } else { "no" });
        if let Some(family) = self.family {
            row(&mut out, "family", family);
        }
        if let Some(n) = self.n {
            row(&mut out, "n", &n.to_string());
        }
        if let Some(d) = self.doubled {
            row(&mut out, "doubled", &d.to_string());
        }
        if let Some(i) = self.inverted {
            row(&mut out, "inverted", &i.to_string());
        }
        if let Some(t) = &self.topo {
            let kind = match (t.separating, t.one_sided) {
                (true, _) => "separating, two-sided",
                (false, true) => "non-separating, one-sided",
                (false, false) => "non-separating, two-sided",
            };
            row(&mut out, "curve", kind);
            for p in &t.pieces {
                let orient = if p.orientable { "orientable" } else { "nonorientable" };
                let desc = format!(
                    "{} ({orient}, genus {}, {} boundary, euler {})",
                    p.name, p.genus, p.boundary, p.euler
                );
                row(&mut out, "piece", &desc);
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct ActRecord {
    pub input: String,
    pub mcg: Vec<&'static str>,
    pub output: String,
}

#[derive(Serialize)]
pub struct CanonicalizeRecord {
    pub input: String,
    pub mcg: Option<Vec<&'static str>>,
    pub target: Option<String>,
    pub target_inverted: Option<bool>,
    pub conjugator: Option<String>,
}

impl CanonicalizeRecord {
    pub fn new(input: &str, r: Option<&CanonicalizationResult>) -> Self {
        CanonicalizeRecord {
            input: input.to_string(),
            mcg: r.map(|r| r.mcg.tokens()),
            target: r.map(|r| r.target.to_string()),
            target_inverted: r.map(|r| r.target_inverted),
            conjugator: r.map(|r| r.conjugator.to_string()),
        }
    }

    pub fn table(&self) -> String {
        match (&self.mcg, &self.target, &self.conjugator) {
            (Some(mcg), Some(target), Some(conj)) => {
                let mcg = if mcg.is_empty() { "(identity)".to_string() } else { mcg.join(" ") };
                let inv = if self.target_inverted == Some(true) { "^-1" } else { "" };
                format!(
                    "{:<10} {}\n{:<10} {mcg}\n{:<10} ({target}){inv}\n{:<10} {conj}\n",
                    "input", self.input, "mcg", "target", "conjugator"
                )
            }
            _ => format!("{:<10} {}\n{:<10} not a simple closed curve\n", "input", self.input, "result"),
        }
    }
}

pub type Term = (i64, i64, String);

fn terms(p: &LaurentPoly) -> Vec<Term> {
    p.terms().map(|(&(k, l), c)| (k, l, c.to_string())).collect()
}

#[derive(Serialize)]
pub struct SymbolicRecord {
    pub d1: Vec<Term>,
    pub u: Vec<Term>,
    pub d2: Vec<Term>,
}

#[derive(Serialize)]
pub struct NumericRecord {
    pub alpha: String,
    pub beta: String,
    pub d1: String,
    pub u: String,
    pub d2: String,
}

#[derive(Serialize)]
pub struct RepRecord {
    pub word: String,
    pub symbolic: Option<SymbolicRecord>,
    pub numeric: NumericRecord,
    pub projective_identity: bool,
}

impl RepRecord {
    pub fn new(w: &Word, symbolic: Option<&UTMatrix>, numeric: &RationalUTMatrix, p: &Params) -> Self {
        let projective_identity = match symbolic {
            Some(m) => m.is_projective_identity(),
            None => numeric.is_projective_identity(),
        };
        RepRecord {
            word: w.to_string(),
            symbolic: symbolic.map(|m| SymbolicRecord { d1: terms(&m.d1), u: terms(&m.u), d2: terms(&m.d2) }),
            numeric: NumericRecord {
                alpha: format_rational(&p.alpha),
                beta: format_rational(&p.beta),
                d1: format_rational(&numeric.d1),
                u: format_rational(&numeric.u),
                d2: format_rational(&numeric.d2),
            },
            projective_identity,
        }
    }
}

pub fn rep_table(w: &Word, symbolic: Option<&UTMatrix>, rec: &RepRecord) -> String {
    let mut out = String::new();
    writeln!(out, "{:<10} {w}", "word").unwrap();
    if let Some(m) = symbolic {
        writeln!(out, "{:<10} {m}", "symbolic").unwrap();
    }
    let n = &rec.numeric;
    writeln!(out, "{:<10} alpha={} beta={}", "params", n.alpha, n.beta).unwrap();
    writeln!(out, "{:<10} [[{}, {}], [0, {}]]", "numeric", n.d1, n.u, n.d2).unwrap();
    writeln!(out, "{:<10} {}", "identity", rec.projective_identity).unwrap();
    out
}

#[derive(Serialize)]
pub struct EnumerateRecord {
    pub length: usize,
    pub cyclic: String,
    pub member: bool,
    pub family: Option<&'static str>,
    pub n: Option<i64>,
    pub doubled: Option<bool>,
    pub inverted: Option<bool>,
}

impl From<&ClassEntry> for EnumerateRecord {
    fn from(e: &ClassEntry) -> Self {
        let f = family_fields(e.class);
        EnumerateRecord {
            length: e.cyclic.len(),
            cyclic: e.cyclic.to_string(),
            member: e.class.is_some(),
            family: f.family,
            n: f.n,
            doubled: f.doubled,
            inverted: f.inverted,
        }
    }
}

pub fn enumerate_table(records: &[EnumerateRecord]) -> String {
    let width = records.iter().map(|r| r.cyclic.len()).max().unwrap_or(0).max("cyclic".len());
    let mut out = format!("{:>6}  {:<width$}  family\n", "length", "cyclic");
    for r in records {
        let family = match (r.family, r.n, r.doubled, r.inverted) {
            (None, ..) => "-".to_string(),
            (Some(f), Some(n), Some(d), Some(i)) => {
                format!("{f} n={n}{}{}", if d { " doubled" } else { "" }, if i { " inverted" } else { "" })
            }
            (Some(f), _, _, i) => format!("{f}{}", if i == Some(true) { " inverted" } else { "" }),
        };
        writeln!(out, "{:>6}  {:<width$}  {family}", r.length, r.cyclic).unwrap();
    }
    out
}

#[derive(Serialize)]
pub struct KernelWitnessRecord {
    pub word: String,
    pub a5_nontrivial: bool,
    pub rho_identity: bool,
}

#[derive(Serialize)]
pub struct SuiteRecord {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl From<CheckSummary> for SuiteRecord {
    fn from(s: CheckSummary) -> Self {
        SuiteRecord { cases: s.cases, failures: s.failures }
    }
}

#[derive(Serialize)]
pub struct OracleRecord {
    pub classes: usize,
    pub members: usize,
    pub oracle_size: usize,
    pub disagreements: Vec<String>,
}

impl From<OracleSummary> for OracleRecord {
    fn from(s: OracleSummary) -> Self {
        OracleRecord {
            classes: s.classes,
            members: s.members,
            oracle_size: s.oracle_size,
            disagreements: s.disagreements.iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ViolationRecord {
    pub word: String,
    pub power: u32,
    pub kind: String,
}

#[derive(Serialize)]
pub struct RepresentationRecord {
    pub alpha: String,
    pub beta: String,
    pub params_bounded: bool,
    pub classes: usize,
    pub cases: usize,
    pub violations: Vec<ViolationRecord>,
}

impl RepresentationRecord {
    pub fn new(r: &Report, p: &Params) -> Self {
        RepresentationRecord {
            alpha: format_rational(&p.alpha),
            beta: format_rational(&p.beta),
            params_bounded: r.params_bounded,
            classes: r.classes,
            cases: r.cases,
            violations: r
                .violations
                .iter()
                .map(|v| ViolationRecord {
                    word: v.class.canonical_word().to_string(),
                    power: v.power,
                    kind: format!("{:?}", v.kind),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct VerifyRecord {
    pub generator_tables: SuiteRecord,
    pub twist_induction: SuiteRecord,
    pub closure: SuiteRecord,
    pub canonicalization: SuiteRecord,
    pub oracle: OracleRecord,
    pub representation: RepresentationRecord,
    pub kernel_witness: KernelWitnessRecord,
    pub passed: bool,
}

impl VerifyRecord {
    pub fn table(&self) -> String {
        let mut out = String::new();
        let mut line = |name: &str, cases: usize, bad: usize| {
            let status = if bad == 0 { "ok" } else { "FAIL" };
            writeln!(out, "{name:<18} {cases:>8} cases  {bad:>4} failures  {status}").unwrap();
        };
        line("generator tables", self.generator_tables.cases, self.generator_tables.failures.len());
        line("twist induction", self.twist_induction.cases, self.twist_induction.failures.len());
        line("closure", self.closure.cases, self.closure.failures.len());
        line("canonicalization", self.canonicalization.cases, self.canonicalization.failures.len());
        line("oracle", self.oracle.classes, self.oracle.disagreements.len());
        line("representation", self.representation.cases, self.representation.violations.len());
        let kw = &self.kernel_witness;
        line("kernel witness", 1, usize::from(!(kw.a5_nontrivial && kw.rho_identity)));
        writeln!(out, "{}", if self.passed { "PASSED" } else { "FAILED" }).unwrap();
        out
    }
}
