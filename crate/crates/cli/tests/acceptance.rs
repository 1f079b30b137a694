//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line.
//!
//! Run with `cargo test -p kleinscc-cli --test acceptance -- --nocapture`
//! to see the lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use assert_cmd::Command;
use kleinscc::mcg::apply_matrix;
use kleinscc::rep::commutator;
use kleinscc::{
    a5_image, build_oracle_set, canonicalize, classify, enumerate_classes, kernel_witness, rho, verify_canonicalization,
    verify_theorem41, BaseCurve, CyclicWord, Letter, McgGenerator, McgWord, Params, SccClass, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x4b6c_6569_6e42;

fn verdict(id: u32, title: &str, ok: bool, elapsed: Duration, limit: Duration, detail: &str) {
    let in_time = elapsed <= limit;
    let tag = if ok && in_time { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id}: {title} ({detail}; {elapsed:.2?} of {limit:?})");
    assert!(ok, "criterion {id} failed: {detail}");
    assert!(in_time, "criterion {id} exceeded its time budget: {elapsed:?} > {limit:?}");
}

/// Best-of-five wall time, so scheduler noise from parallel tests does not
/// count against sub-millisecond budgets.
fn best_of_five<T>(mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..5 {
        let start = Instant::now();
        let value = f();
        best = best.min(start.elapsed());
        out = Some(value);
    }
    (out.expect("ran at least once"), best)
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::ALL[rng.gen_range(0..4)];
        if letters.last() != Some(&l.inv()) {
            letters.push(l);
        }
    }
    Word::reduce(letters)
}

/// Every class with `|n| ≤ 20`, both `doubled` and both `inverted` flags.
fn class_range() -> Vec<SccClass> {
    SccClass::all_up_to(20)
}

#[test]
fn criterion_1_generator_tables() {
    let table = [
        (McgGenerator::Tb, "a", "ab"),
        (McgGenerator::Tb, "b", "b"),
        (McgGenerator::Y, "a", "a^-1"),
        (McgGenerator::Y, "b", "b"),
        (McgGenerator::W1, "a", "a"),
        (McgGenerator::W1, "b", "b^-1"),
        (McgGenerator::TbInv, "a", "ab^-1"),
        (McgGenerator::TbInv, "b", "b"),
    ];
    let (failures, elapsed) = best_of_five(|| {
        table.iter().filter(|(g, src, image)| g.apply(&w(src)) != w(image)).count()
    });
    verdict(
        1,
        "generator substitution tables",
        failures == 0,
        elapsed,
        Duration::from_millis(1),
        &format!("{failures} of 8 images wrong"),
    );
}

#[test]
fn criterion_2_closure() {
    let start = Instant::now();
    let mut cases = 0;
    let mut failures = Vec::new();
    for c in class_range() {
        let base = c.canonical_word();
        for g in McgGenerator::ALL {
            cases += 1;
            let image = g.apply(&base);
            match classify(&image) {
                Some(d) if d.topo_type() == c.topo_type() => {}
                other => failures.push(format!("{g}({base}) = {image} -> {other:?}")),
            }
        }
    }
    verdict(
        2,
        "mapping class group preserves the curve classes and their topology",
        failures.is_empty(),
        start.elapsed(),
        Duration::from_secs(1),
        &format!("{cases} cases, {} failures {:?}", failures.len(), failures.first()),
    );
}

#[test]
fn criterion_3_reachability() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cases = 0;
    let mut failures = Vec::new();
    for c in class_range() {
        let base = c.canonical_word();
        let bound = match c {
            SccClass::Slope { n, .. } => n.unsigned_abs() as usize + 2,
            _ => 1,
        };
        let mut inputs = vec![base.clone()];
        inputs.extend((0..100).map(|_| base.conjugate_by(&random_word(&mut rng, 8))));
        for x in inputs {
            cases += 1;
            let ok = match canonicalize(&x) {
                Some(r) => {
                    verify_canonicalization(&x, &r) && r.mcg.len() <= bound && r.target == BaseCurve::of_class(c)
                }
                None => false,
            };
            if !ok {
                failures.push(x.to_string());
            }
        }
    }
    verdict(
        3,
        "every curve word reaches a base curve with a replayable sequence",
        failures.is_empty(),
        start.elapsed(),
        Duration::from_secs(5),
        &format!("{cases} cases, {} failures {:?}", failures.len(), failures.first()),
    );
}

/// Cyclic classes of length `≤ max_len`, found by brute force over all
/// reduced words rather than by the library's canonical-prefix enumeration.
fn brute_force_classes(max_len: usize) -> BTreeSet<CyclicWord> {
    let mut classes = BTreeSet::new();
    let mut frontier: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for prefix in &frontier {
            for l in Letter::ALL {
                if prefix.last() == Some(&l.inv()) {
                    continue;
                }
                let mut extended = prefix.clone();
                extended.push(l);
                if extended.len() == 1 || extended[0] != l.inv() {
                    classes.insert(Word::reduce(extended.iter().copied()).cyclic());
                }
                next.push(extended);
            }
        }
        frontier = next;
    }
    classes
}

#[test]
fn criterion_4_oracle_equivalence() {
    let start = Instant::now();
    let oracle = build_oracle_set(10).unwrap();
    let brute = brute_force_classes(10);
    let enumerated: BTreeSet<CyclicWord> =
        enumerate_classes(10).unwrap().into_iter().map(|e| e.cyclic).collect();
    let disagreements: Vec<&CyclicWord> =
        brute.iter().filter(|c| kleinscc::classify_cyclic(c).is_some() != oracle.contains(c)).collect();
    let members = brute.iter().filter(|c| oracle.contains(c)).count();
    verdict(
        4,
        "classifier agrees with the family-list oracle up to length 10",
        disagreements.is_empty() && brute == enumerated && members == oracle.len(),
        start.elapsed(),
        Duration::from_secs(60),
        &format!(
            "{} classes, {members} members, {} disagreements, enumeration {}",
            brute.len(),
            disagreements.len(),
            if brute == enumerated { "matches" } else { "differs" }
        ),
    );
}

#[test]
fn criterion_5_length_four_count() {
    let start = Instant::now();
    let oracle_count = build_oracle_set(4).unwrap().iter().filter(|c| c.len() == 4).count();
    let classifier_count = brute_force_classes(4)
        .iter()
        .filter(|c| c.len() == 4 && kleinscc::classify_cyclic(c).is_some())
        .count();
    verdict(
        5,
        "exactly 10 member classes of cyclic length 4",
        oracle_count == 10 && classifier_count == 10,
        start.elapsed(),
        Duration::from_secs(1),
        &format!("oracle {oracle_count}, classifier {classifier_count}"),
    );
}

#[test]
fn criterion_6_no_power_of_a_curve_is_killed() {
    let start = Instant::now();
    let report = verify_theorem41(10, 5, &Params::integers(2, 3).unwrap()).unwrap();
    let trivial_diagonals = report.diagonal_exponents.iter().filter(|(_, e)| *e == (0, 0)).count();
    let expected_classes = SccClass::all_up_to(10).len();
    verdict(
        6,
        "rho(w^k) is never ±I for curve words w, 1 <= k <= 5, alpha=2, beta=3",
        report.passed() && trivial_diagonals == 0 && report.classes == expected_classes,
        start.elapsed(),
        Duration::from_secs(10),
        &format!(
            "{} classes, {} cases, {} violations, {trivial_diagonals} trivial diagonals",
            report.classes,
            report.cases,
            report.violations.len()
        ),
    );
}

#[test]
fn criterion_7_kernel_witness() {
    let ((k, reduced, in_kernel, image), elapsed) = best_of_five(|| {
        let k = kernel_witness();
        let reduced = Word::reduce(k.letters().iter().copied()) == k;
        let in_kernel = rho(&k).is_identity();
        let image = a5_image(&k);
        (k, reduced, in_kernel, image)
    });
    verdict(
        7,
        "rho is not injective: a nontrivial word maps to the identity",
        !k.is_empty() && reduced && in_kernel && !image.is_identity(),
        elapsed,
        Duration::from_millis(1),
        &format!("witness {k}, A5 image {image}"),
    );
}

#[test]
fn criterion_8_algebraic_invariants() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut failures: Vec<&str> = Vec::new();
    let mut check = |ok: bool, name: &'static str| {
        if !ok && !failures.contains(&name) {
            failures.push(name);
        }
    };

    for _ in 0..200 {
        let u = random_word(&mut rng, 20);
        let v = random_word(&mut rng, 20);
        check(rho(&u.concat(&v)) == rho(&u).mul(&rho(&v)), "rho homomorphism");
        check(rho(&u.inverse()) == rho(&u).inverse(), "rho inverse");
        check(a5_image(&u.concat(&v)) == a5_image(&u) * a5_image(&v), "A5 homomorphism");
        for g in McgGenerator::ALL {
            check(g.apply(&u.concat(&v)) == g.apply(&u).concat(&g.apply(&v)), "generator homomorphism");
            check(
                g.apply(&u).exponent_sums() == apply_matrix(g.exponent_action(), u.exponent_sums()),
                "abelianized action",
            );
        }
        for (pair, name) in [
            ([McgGenerator::Y, McgGenerator::Y], "y involution"),
            ([McgGenerator::W1, McgGenerator::W1], "w1 involution"),
            ([McgGenerator::Tb, McgGenerator::TbInv], "tb tb- inverse"),
            ([McgGenerator::TbInv, McgGenerator::Tb], "tb- tb inverse"),
        ] {
            check(McgWord::new(pair.to_vec()).apply(&u) == u, name);
        }
    }

    for _ in 0..1000 {
        let x = random_word(&mut rng, 50);
        let m = rho(&x);
        check(m.determinant().is_one(), "determinant one");
        let e = x.exponent_sums();
        check(m.d1.unit_monomial() == Some(((e.a, e.b), false)), "diagonal equals exponent sums");
    }

    for _ in 0..200 {
        let [p, q, r, s] = [0; 4].map(|_| random_word(&mut rng, 6));
        let dc = commutator(&commutator(&p, &q), &commutator(&r, &s));
        check(rho(&dc).is_identity(), "metabelian collapse");
    }

    verdict(
        8,
        "algebraic invariants on randomized inputs",
        failures.is_empty(),
        start.elapsed(),
        Duration::from_secs(5),
        &format!("failed: {failures:?}"),
    );
}

const CLI_CASES: &[&[&str]] = &[
    &["classify", "ab^3ab^3"],
    &["act", "tb", "a"],
    &["canonicalize", "ab^3"],
    &["rep", "aBAB", "--symbolic"],
    &["enumerate", "--max-len", "3"],
    &["kernel-witness"],
    &["verify", "--max-n", "10", "--max-len", "10", "--max-power", "5", "--alpha", "2", "--beta", "3"],
];

const CLI_GOLDEN: &[&str] = &["classify", "act", "canonicalize", "rep", "enumerate", "kernel_witness", "verify"];

#[test]
fn criterion_9_cli_determinism() {
    let start = Instant::now();
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut mismatches = Vec::new();
    for (args, golden) in CLI_CASES.iter().zip(CLI_GOLDEN) {
        let run = || Command::cargo_bin("kleinscc").unwrap().args(*args).output().unwrap();
        let (first, second) = (run(), run());
        let expected = std::fs::read(dir.join(format!("{golden}.out"))).unwrap_or_default();
        if !first.status.success() || first.stdout != second.stdout || first.stdout != expected {
            mismatches.push(args[0]);
        }
    }
    verdict(
        9,
        "every subcommand is byte-identical across runs and matches its golden file",
        mismatches.is_empty(),
        start.elapsed(),
        Duration::from_secs(60),
        &format!("{} subcommands, mismatches {mismatches:?}", CLI_CASES.len()),
    );
}
