//! Acceptance run: one PASS/FAIL line per criterion followed by indented
//! detail lines. Reports are written twice under a temporary directory and
//! compared byte for byte.
//!
//! The process exits nonzero only when a result departs from the values
//! derived by hand. Criterion 6 prints FAIL with its reason because two of
//! its clauses do not hold as stated; the derived facts are still enforced.

mod common;

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use dendriform_fp::envelope::{enumerated_dimension, pmap_audit, quotient_dims, Envelope};
use dendriform_fp::field::Modulus;
use dendriform_fp::fixtures::{abelian_prelie, dendriform_fixtures, dual_numbers};
use dendriform_fp::freedend::FreeDend;
use dendriform_fp::jacobson::s_coefficients;
use dendriform_fp::laws::{
    verify_dendriform, verify_functor_squares, verify_operator_identities, verify_restricted_lie,
    verify_restricted_prelie, LawReport, SamplePlan,
};
use dendriform_fp::scalg::{
    check_rota_baxter, induced_dendriform, matrix_algebra, search_rota_baxter, LinearOperator,
    SCAlgebra, SearchMode,
};
use dendriform_fp::structure::{Commutator, InducedLie, PMap, PreLieOf, SampleRng, VectorSpace};
use dendriform_fp::trees::free_dimension;
use rand::SeedableRng;
use serde_json::{json, Value};

type Res<T> = Result<T, Box<dyn std::error::Error>>;

const SEED: u64 = 20_240_601;
const CATALAN: [u64; 6] = [1, 2, 5, 14, 42, 132];

/// Outcome of one criterion: the printed verdict, whether the run matched
/// the hand-derived expectation, and the report written to disk.
struct Outcome {
    pass: bool,
    as_derived: bool,
    details: Vec<String>,
    report: Value,
}

impl Outcome {
    fn plain(pass: bool, details: Vec<String>, report: Value) -> Self {
        Outcome { pass, as_derived: pass, details, report }
    }
}

fn m(p: u64) -> Modulus {
    Modulus::new(p).expect("prime")
}

fn summary(r: &LawReport) -> String {
    format!("{} on {}: {} checks, {} violations", r.law, r.structure, r.checked, r.violations)
}

fn c1(seed: u64) -> Res<Outcome> {
    let mut details = Vec::new();
    let mut reports = Vec::new();
    let mut pass = true;
    // basis triples of combined degree ≤ 6, counted from the oracle trees
    let counts: Vec<usize> = (0..=6).map(|n| if n == 0 { 0 } else { common::all_trees(n, 1).len() }).collect();
    let mut triples = 0;
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                if a + b + c <= 6 {
                    triples += counts[a] * counts[b] * counts[c];
                }
            }
        }
    }
    details.push(format!("{triples} basis triples, three axioms each"));
    for p in [2, 3, 5] {
        let d = FreeDend::new(m(p), 1);
        let r = verify_dendriform(&d, "g = 1", &SamplePlan::exhaustive(6))?;
        pass &= r.passed() && r.checked == 3 * triples;
        details.push(summary(&r));
        reports.push(r.to_json());
    }
    let d = FreeDend::new(m(3), 2);
    let r = verify_dendriform(&d, "g = 2", &SamplePlan::random(500, seed, 3))?;
    pass &= r.passed() && r.checked == 3 * 500;
    details.push(summary(&r));
    reports.push(r.to_json());
    Ok(Outcome::plain(pass, details, json!(reports)))
}

fn c2(seed: u64) -> Res<Outcome> {
    let mut details = Vec::new();
    let mut reports = Vec::new();
    let mut pass = true;
    for (p, ymax) in [(2, 3), (3, 2)] {
        let d = FreeDend::new(m(p), 1);
        let plan = SamplePlan::exhaustive(ymax)
            .with_total_degree(None)
            .with_x_degrees(1, 1)
            .with_y_degrees(1, ymax)
            .with_random(50, seed);
        let pre = PreLieOf(&d);
        let star = PMap::star_power(&d);
        for r in [
            verify_restricted_prelie(&pre, &star, "free, g = 1", &plan)?,
            verify_restricted_lie(&InducedLie(&pre), &star, "free, g = 1", &plan)?,
            verify_operator_identities(&d, "free, g = 1", &plan)?,
        ] {
            pass &= r.passed() && r.checked > 0;
            details.push(format!("p = {p}: {}", summary(&r)));
            reports.push(r.to_json());
        }
    }
    Ok(Outcome::plain(pass, details, json!(reports)))
}

fn c3(seed: u64) -> Res<Outcome> {
    let mut details = Vec::new();
    let mut reports = Vec::new();
    let mut pass = true;
    for n in [2, 3] {
        for p in [2, 3] {
            let a = matrix_algebra(n, m(p));
            let plan = SamplePlan::exhaustive(1)
                .with_total_degree(None)
                .with_random(200, seed);
            let r = verify_restricted_lie(&Commutator(&a), &PMap::frobenius(&a), &format!("M{n}(F{p})"), &plan)?;
            pass &= r.passed();
            details.push(summary(&r));
            reports.push(r.to_json());
        }
    }
    Ok(Outcome::plain(pass, details, json!(reports)))
}

fn c4(seed: u64) -> Res<Outcome> {
    let mut details = Vec::new();
    let mut pass = true;
    let mut rows = Vec::new();
    for p in [2u64, 3] {
        for n in [2, 3] {
            let a = matrix_algebra(n, m(p));
            let lie = Commutator(&a);
            let mut rng = SampleRng::seed_from_u64(seed ^ (p << 8) ^ n as u64);
            let mut agree = 0;
            for _ in 0..100 {
                let x = a.random_element(&mut rng, 1, 1);
                let y = a.random_element(&mut rng, 1, 1);
                let s = s_coefficients(&lie, &x, &y)?;
                let yx = common::commutator(n, p, &y, &x);
                let closed: Vec<Vec<u64>> = if p == 2 {
                    vec![yx]
                } else {
                    vec![
                        common::commutator(n, p, &y, &yx),
                        common::mat_scale(p, 2, &common::commutator(n, p, &x, &yx)),
                    ]
                };
                let words: Vec<Vec<u64>> =
                    (1..p as u32).map(|i| common::word_sum(n, p, &x, &y, i)).collect();
                let mut total = vec![0; n * n];
                for w in &words {
                    total = common::mat_add(p, &total, w);
                }
                let sum = common::mat_add(p, &common::mat_pow(n, p, &x, p), &common::mat_pow(n, p, &y, p));
                let whole = common::mat_sub(p, &common::mat_pow(n, p, &common::mat_add(p, &x, &y), p), &sum);
                if s == closed && s == words && total == whole {
                    agree += 1;
                }
            }
            pass &= agree == 100;
            details.push(format!("p = {p}, M{n}: {agree}/100 trials agree with the matrix oracle"));
            rows.push(json!({"p": p, "n": n, "trials": 100, "agree": agree}));
        }
    }
    Ok(Outcome::plain(pass, details, json!(rows)))
}

fn c5(_seed: u64) -> Res<Outcome> {
    let mut pass = true;
    let mut rows = Vec::new();
    for (i, want) in CATALAN.iter().enumerate() {
        let n = i + 1;
        let formula = free_dimension(n, 1);
        let enumerated = enumerated_dimension(n, 1)?;
        let oracle = common::all_trees(n, 1).len() as u64;
        let alg = FreeDend::new(m(2), 1).dimension(n);
        pass &= formula == *want && enumerated == *want && oracle == *want && alg == *want;
        rows.push(json!({"n": n, "expected": want, "formula": formula, "enumerated": enumerated, "oracle": oracle}));
    }
    let got: Vec<u64> = (1..=6).map(|n| free_dimension(n, 1)).collect();
    Ok(Outcome::plain(pass, vec![format!("dimensions {got:?}")], json!(rows)))
}

#[derive(Default)]
struct Chain {
    candidates: usize,
    gate: usize,
    dendriform: usize,
    star: usize,
    algebra_power: usize,
}

fn chain(a: &SCAlgebra, mode: SearchMode, plan: &SamplePlan, candidates: usize) -> Res<Chain> {
    let mut c = Chain { candidates, ..Chain::default() };
    for beta in search_rota_baxter(a, mode)? {
        c.gate += 1;
        let d = induced_dendriform(a, &beta)?;
        if !verify_dendriform(&d, "rb", plan)?.passed() {
            continue;
        }
        c.dendriform += 1;
        let pre = PreLieOf(&d);
        if verify_restricted_prelie(&pre, &PMap::star_power(&d), "rb", plan)?.passed() {
            c.star += 1;
        }
        if verify_restricted_prelie(&pre, &PMap::frobenius(a), "rb", plan)?.passed() {
            c.algebra_power += 1;
        }
    }
    Ok(c)
}

fn c6(seed: u64) -> Res<Outcome> {
    let plan = SamplePlan::exhaustive(1).with_total_degree(None).with_random(20, seed);
    let dual = dual_numbers(m(2));
    let m2 = matrix_algebra(2, m(2));
    let runs = [
        ("F2[x]/(x^2), exhaustive", chain(&dual, SearchMode::Exhaustive { max_dim: 3 }, &plan, 16)?),
        ("M2(F2), 500 random", chain(&m2, SearchMode::Random { count: 500, seed }, &plan, 500)?),
        ("M2(F2), exhaustive", chain(&m2, SearchMode::Exhaustive { max_dim: 4 }, &plan, 1 << 16)?),
    ];
    let mut details = Vec::new();
    let mut report = Vec::new();
    let mut star_ok = true;
    let mut literal_ok = true;
    for (name, c) in &runs {
        details.push(format!(
            "{name}: {} candidates, {} Rota-Baxter, {} dendriform, {} pass with ⋆-power, {} pass with ·-power",
            c.candidates, c.gate, c.dendriform, c.star, c.algebra_power
        ));
        star_ok &= c.dendriform == c.gate && c.star == c.gate;
        literal_ok &= c.algebra_power == c.gate;
        report.push(json!({
            "run": name, "candidates": c.candidates, "rota_baxter": c.gate,
            "dendriform": c.dendriform, "star_power": c.star, "algebra_power": c.algebra_power,
        }));
    }
    let mut identity = Vec::new();
    for p in [2, 3] {
        for (name, a) in [("F_p[x]/(x^2)", dual_numbers(m(p))), ("M2", matrix_algebra(2, m(p)))] {
            let r = check_rota_baxter(&a, &LinearOperator::identity(&a))?;
            let first = r.violations.first().map(|v| (v.i, v.j, v.residual.clone()));
            details.push(format!(
                "identity on {name} over F{p}: {} ({} violating pairs)",
                if r.passes() { "Rota-Baxter" } else { "not Rota-Baxter" },
                r.violations.len()
            ));
            identity.push((p, r.passes(), first));
            report.push(json!({"identity": name, "p": p, "passes": r.passes(), "violations": r.violations.len()}));
        }
    }
    let identity_char2 = identity.iter().filter(|(p, ..)| *p == 2).all(|(_, ok, _)| *ok);
    let identity_char3 = identity.iter().filter(|(p, ..)| *p == 3).all(|(_, ok, _)| !*ok);
    // Derived: id(x)id(y) − id(id(x)y + x id(y)) = −xy, nonzero as soon as
    // xy ≠ 0, in every characteristic. On M2(F2) the ·-power p-map fails for
    // every Rota-Baxter operator while the ⋆-power passes.
    let derived = star_ok
        && identity.iter().all(|(p, ok, first)| {
            !*ok && matches!(first, Some((0, 0, res)) if res[0] == *p - 1)
        })
        && runs[0].1.algebra_power == runs[0].1.gate
        && runs[2].1.gate == 28
        && runs[2].1.algebra_power == 0;
    let pass = star_ok && literal_ok && identity_char2 && identity_char3;
    if !literal_ok {
        details.push("unmet: the chain with the algebra's own p-th power fails on M2(F2)".into());
    }
    if !identity_char2 {
        details.push("unmet: the identity is not a weight-0 Rota-Baxter operator in characteristic 2".into());
    }
    Ok(Outcome { pass, as_derived: derived, details, report: json!(report) })
}

fn c7(_seed: u64) -> Res<Outcome> {
    let plan = SamplePlan::exhaustive(1).with_total_degree(None);
    let mut pass = true;
    let mut checked = 0;
    let mut structures = 0;
    let mut rows = Vec::new();
    for (name, d) in dendriform_fixtures()? {
        if !verify_dendriform(&d, &name, &plan)?.passed() {
            continue;
        }
        let r = verify_functor_squares(&d, &name, &plan)?;
        let t = r.tally("{x,y} − {y,x} = x⋆y − y⋆x");
        pass &= t.violations == 0 && t.checked == d.dim() * d.dim();
        checked += t.checked;
        structures += 1;
        rows.push(json!({"structure": name, "pairs": t.checked, "violations": t.violations}));
    }
    let free = FreeDend::new(m(3), 2);
    let r = verify_functor_squares(&free, "free, g = 2", &SamplePlan::exhaustive(3))?;
    pass &= r.passed();
    rows.push(r.to_json());
    let details = vec![
        format!("{structures} fixture structures, {checked} basis pairs, all exact"),
        summary(&r),
    ];
    Ok(Outcome::plain(pass, details, json!(rows)))
}

fn c8(seed: u64) -> Res<Outcome> {
    let mut details = Vec::new();
    let ab = abelian_prelie(m(2), None);
    let d2 = quotient_dims(&ab, 2, false)?;
    let d3 = quotient_dims(&ab, 3, false)?;
    let yy = common::y(0);
    let relation = common::comb_sub(
        2,
        &common::comb_op(2, common::t_prec, &yy, &yy),
        &common::comb_op(2, common::t_succ, &yy, &yy),
    );
    let oracle = common::oracle_quotient_dims(2, 1, 3, &[relation]);
    let catalan_column = d3.rows.iter().all(|r| r.free_dim == CATALAN[r.n - 1]);
    details.push(format!("U(P) at d = 2: {:?}", d2.quotient_dims()));
    details.push(format!("U(P) at d = 3: {:?}, oracle {:?}", d3.quotient_dims(), oracle));
    let restricted = abelian_prelie(m(2), Some(0));
    let env = Envelope::compute(&restricted, 3, true)?;
    let alg = env.algebra();
    let y0 = alg.generator(0)?;
    let detected = env.contains(&alg.star(&y0, &y0)?)?;
    let audit = pmap_audit(&env, 50, seed)?;
    details.push(format!("U_p: x⋆x in ideal = {detected}"));
    details.push(format!(
        "audit: {} samples, {} members, {} failures, {} unexplained",
        audit.samples, audit.members, audit.failures, audit.unexplained
    ));
    let pass = d2.quotient_dims() == [1, 2]
        && d3.quotient_dims() == oracle
        && catalan_column
        && detected
        && audit.samples == 50
        && audit.unexplained == 0;
    let report = json!({"d2": d2.to_json(), "d3": d3.to_json(), "oracle": oracle, "audit": audit});
    Ok(Outcome::plain(pass, details, report))
}

type Criterion = fn(u64) -> Res<Outcome>;

const CRITERIA: [(&str, Criterion); 8] = [
    ("free dendriform axioms", c1),
    ("star-power restricted pre-Lie on free dendriform", c2),
    ("Jacobson p-map on matrix algebras", c3),
    ("s_i closed forms against the matrix oracle", c4),
    ("Catalan dimensions", c5),
    ("Rota-Baxter chain", c6),
    ("functor squares", c7),
    ("enveloping algebra sanity", c8),
];

fn run_all(dir: &Path, seed: u64) -> Res<Vec<Outcome>> {
    let mut out = Vec::new();
    for (i, (_, f)) in CRITERIA.iter().enumerate() {
        let o = f(seed)?;
        let text = serde_json::to_string_pretty(&o.report)? + "\n";
        std::fs::write(dir.join(format!("criterion{}.json", i + 1)), text)?;
        out.push(o);
    }
    let cli = dir.join("cli_envelope.json");
    let status = Command::new(env!("CARGO_BIN_EXE_dendri"))
        .args(["envelope", "-p", "2", "-d", "3", "--seed"])
        .arg(seed.to_string())
        .arg("-o")
        .arg(&cli)
        .status()?;
    if !status.success() {
        return Err("envelope run failed".into());
    }
    Ok(out)
}

fn main() -> ExitCode {
    let start = Instant::now();
    let first = tempfile::tempdir().expect("temp dir");
    let second = tempfile::tempdir().expect("temp dir");
    let outcomes = match run_all(first.path(), SEED) {
        Ok(o) => o,
        Err(e) => {
            println!("acceptance run aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut ok = true;
    for (i, ((name, _), o)) in CRITERIA.iter().zip(&outcomes).enumerate() {
        println!("{} criterion {}: {name}", if o.pass { "PASS" } else { "FAIL" }, i + 1);
        for d in &o.details {
            println!("    {d}");
        }
        if !o.pass && o.as_derived {
            println!("    (matches the hand-derived values; see the notes above)");
        }
        ok &= o.as_derived;
    }
    let repeat = run_all(second.path(), SEED).is_ok();
    let mut identical = repeat;
    let mut files = 0;
    for entry in std::fs::read_dir(first.path()).expect("report dir") {
        let path = entry.expect("entry").path();
        let other = second.path().join(path.file_name().expect("file name"));
        identical &= std::fs::read(&path).ok() == std::fs::read(&other).ok();
        files += 1;
    }
    println!("{} criterion 9: determinism", if identical { "PASS" } else { "FAIL" });
    println!("    {files} report files compared byte for byte across two runs with seed {SEED}");
    ok &= identical;
    println!("acceptance finished in {:.1} s", start.elapsed().as_secs_f64());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
