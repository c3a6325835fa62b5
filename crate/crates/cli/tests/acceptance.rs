//! Acceptance criteria, one line of output per criterion.
//!
//! Runs without the libtest harness so the PASS/FAIL lines always show up in
//! `cargo test` output. Exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use fdk0::cstar::{
    cokernel_torsion_free, is_injective, is_surjective, is_unital, k0_injective, k0_surjective,
    row_pattern_span_equivalence, rows_are_unit_patterns, torsion_verdict,
};
use fdk0::intlin::{
    determinant, left_inverse, minor_gcd, scaled_left_inverse,
    scaled_left_inverse_with_coefficients, smith_normal_form,
};
use fdk0::oracle::{bounded_torsion_search, det_permutation, torsion_free_by_snf, OracleReport};
use fdk0::{analyze, compose, make_hom, sample, BigInt, FdAlgebra, FdHom, IntMatrix};
use fdk0_cli::exit;
use fdk0_cli::machine::AnalysisDocument;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x00C0_FFEE;

const SUITE_SIZE: usize = 1000;
const RANK_DEFICIENT: usize = 100;
const DET_SAMPLES: usize = 500;
const HOM_SAMPLES: usize = 1000;
const CHAINS: usize = 200;
const SPAN_SAMPLES: usize = 500;
const MAX_ROWS: usize = 6;

const EXAMPLE_BUDGET: Duration = Duration::from_millis(10);
const DET_BUDGET: Duration = Duration::from_secs(5);

// bounded torsion search parameters
const SEARCH_BOX: u32 = 2;
const SEARCH_MULTIPLIER: u32 = 4;
const SEARCH_DIM: usize = 4;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(BigInt::from).collect()
}

fn mat<const R: usize, const C: usize>(rows: [[i64; C]; R]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

fn alg(blocks: &[u64]) -> FdAlgebra {
    FdAlgebra::new(blocks.to_vec()).unwrap()
}

fn example_matrix() -> IntMatrix {
    mat([[3, 3], [2, 0], [0, 5]])
}

fn block_diagonal_hom() -> FdHom {
    make_hom(alg(&[2, 3, 4]), alg(&[5, 4]), mat([[1, 1, 0], [0, 0, 1]])).unwrap()
}

fn example_hom() -> FdHom {
    make_hom(alg(&[1, 1]), alg(&[6, 2, 5]), example_matrix()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first_failure(reports: &[OracleReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.agreed) {
        None => Ok(()),
        Some(r) => Err(format!(
            "{} disagreements in {}; first: {}",
            reports.iter().filter(|r| !r.agreed).count(),
            r.subject,
            r.counterexample.as_deref().unwrap_or("?")
        )),
    }
}

struct Suites {
    full_rank: Vec<IntMatrix>,
    rank_deficient: Vec<IntMatrix>,
    homs: Vec<FdHom>,
}

impl Suites {
    fn generate() -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let full_rank = (0..SUITE_SIZE)
            .map(|_| sample::full_column_rank(&mut rng, MAX_ROWS))
            .collect();
        let rank_deficient = (0..RANK_DEFICIENT)
            .map(|_| sample::rank_deficient(&mut rng, MAX_ROWS))
            .collect();
        let homs = (0..HOM_SAMPLES).map(|_| sample::hom(&mut rng)).collect();
        Self {
            full_rank,
            rank_deficient,
            homs,
        }
    }
}

fn c01_example() -> Outcome {
    let start = Instant::now();
    let e = example_matrix();
    let minors = minor_gcd(&e, false).map_err(|x| x.to_string())?;
    let mut dets: Vec<BigInt> = minors.witnesses.iter().map(|(_, d)| d.clone()).collect();
    dets.sort();
    ensure(dets == ints(&[-6, 10, 15]), || format!("minors {dets:?}"))?;
    ensure(minors.d.is_one(), || format!("d = {}", minors.d))?;

    // lexicographic row sets {0,1}, {0,2}, {1,2} have minors -6, 15, 10
    let pinned =
        scaled_left_inverse_with_coefficients(&e, &ints(&[4, 1, 1])).map_err(|x| x.to_string())?;
    let expected = mat([[5, -7, -3], [-8, 12, 5]]);
    ensure(pinned.matrix == expected, || {
        format!("pinned K = {:?}", pinned.matrix)
    })?;
    ensure((&pinned.matrix * &e).is_identity(), || {
        "pinned K * E != I".into()
    })?;

    let default = scaled_left_inverse(&e).map_err(|x| x.to_string())?;
    ensure(
        default.d.is_one() && (&default.matrix * &e).is_identity(),
        || "default K * E != I".into(),
    )?;
    let k = left_inverse(&e)
        .map_err(|x| x.to_string())?
        .ok_or("no left inverse")?;
    ensure((&k * &e).is_identity(), || "left_inverse K * E != I".into())?;

    let elapsed = start.elapsed();
    ensure(elapsed < EXAMPLE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "minors {{-6, 10, 15}}, d = 1, K = [[5,-7,-3],[-8,12,5]], {elapsed:?}"
    ))
}

fn c02_three_way(s: &Suites) -> Outcome {
    let mut reports = Vec::new();
    let mut unit = 0;
    for e in &s.full_rank {
        let d = minor_gcd(e, true).map_err(|x| x.to_string())?.d;
        let k = left_inverse(e).map_err(|x| x.to_string())?;
        let verified = k.as_ref().is_some_and(|k| (k * e).is_identity());
        let snf = smith_normal_form(e);
        let snf_units = snf.rank() == e.cols() && snf.invariant_factors.iter().all(One::is_one);
        reports.push(OracleReport::check(
            "minor gcd vs left inverse",
            e,
            d.is_one(),
            verified,
        ));
        reports.push(OracleReport::check(
            "minor gcd vs invariant factors",
            e,
            d.is_one(),
            snf_units,
        ));
        unit += usize::from(d.is_one());
    }
    first_failure(&reports)?;
    Ok(format!(
        "{} matrices ({} with d = 1, {} with d > 1), 0 disagreements",
        s.full_rank.len(),
        unit,
        s.full_rank.len() - unit
    ))
}

fn c03_scaled_inverse(s: &Suites) -> Outcome {
    for e in &s.full_rank {
        let inv = scaled_left_inverse(e).map_err(|x| x.to_string())?;
        ensure(!inv.degenerate && !inv.d.is_zero(), || {
            format!("{e:?} flagged degenerate")
        })?;
        ensure((&inv.matrix * e).is_scalar(&inv.d), || {
            format!("K * E != d * I for {e:?}")
        })?;
    }
    for e in &s.rank_deficient {
        let inv = scaled_left_inverse(e).map_err(|x| x.to_string())?;
        ensure(inv.degenerate && inv.d.is_zero(), || {
            format!("{e:?} not flagged degenerate")
        })?;
        ensure((&inv.matrix * e).is_scalar(&inv.d), || {
            format!("K * E != 0 for {e:?}")
        })?;
    }
    Ok(format!(
        "{} full-rank identities exact, {} rank-deficient flagged d = 0",
        s.full_rank.len(),
        s.rank_deficient.len()
    ))
}

fn c04_determinant() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let inputs: Vec<IntMatrix> = (0..DET_SAMPLES)
        .map(|i| {
            let n = 1 + i % 6;
            sample::matrix(&mut rng, n, n, -9, 9)
        })
        .collect();
    let start = Instant::now();
    let reports: Vec<OracleReport> = inputs
        .iter()
        .map(|m| {
            OracleReport::check(
                "bareiss vs permutation expansion",
                m,
                determinant(m).unwrap(),
                det_permutation(m).unwrap(),
            )
        })
        .collect();
    let elapsed = start.elapsed();
    first_failure(&reports)?;
    ensure(elapsed < DET_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} matrices n <= 6 agree exactly, {elapsed:?}",
        inputs.len()
    ))
}

fn hom_implications(h: &FdHom) -> Result<(), String> {
    let (inj, surj, unital) = (is_injective(h), is_surjective(h), is_unital(h));
    let (k0_inj, k0_surj) = (k0_injective(h), k0_surjective(h));
    ensure(!k0_inj || inj, || {
        format!("K0 injective but phi not: {h:?}")
    })?;
    ensure(!surj || (k0_surj && unital), || {
        format!("phi surjective but not K0 surjective and unital: {h:?}")
    })?;
    ensure(
        surj == (k0_surj && unital && rows_are_unit_patterns(h.matrix())),
        || format!("surjectivity equivalence fails: {h:?}"),
    )
}

fn c05_hom_implications(s: &Suites) -> Outcome {
    let mut surjective = 0;
    let mut k0_inj = 0;
    for h in &s.homs {
        hom_implications(h)?;
        surjective += usize::from(is_surjective(h));
        k0_inj += usize::from(k0_injective(h));
    }
    Ok(format!(
        "{} homs ({} surjective, {} with injective K0), 0 violations",
        s.homs.len(),
        surjective,
        k0_inj
    ))
}

fn c06_block_diagonal_report() -> Outcome {
    let r = analyze(&block_diagonal_hom());
    let got = (
        r.phi_injective,
        r.k0_injective,
        r.k0_surjective,
        r.phi_surjective,
        r.phi_unital,
    );
    ensure(got == (true, false, true, false, true), || {
        format!("got {got:?}")
    })?;
    Ok(
        "(phi inj, K0 inj, K0 surj, phi surj, phi unital) = (true, false, true, false, true)"
            .into(),
    )
}

fn c07_snf(s: &Suites) -> Outcome {
    for e in &s.full_rank {
        ensure(smith_normal_form(e).verify(e), || {
            format!("invalid decomposition for {e:?}")
        })?;
    }
    Ok(format!("{} decompositions valid", s.full_rank.len()))
}

fn c08_torsion_oracle(s: &Suites) -> Outcome {
    let mut reports = Vec::new();
    let mut searched = 0;
    let mut witnesses = 0;
    let homs: Vec<&IntMatrix> = s.homs.iter().map(FdHom::matrix).collect();
    for e in s.full_rank.iter().chain(homs.iter().copied()) {
        let decided = torsion_verdict(e).torsion_free;
        let oracle = torsion_free_by_snf(e);
        reports.push(OracleReport::check(
            "cokernel torsion-free vs oracle",
            e,
            decided,
            oracle,
        ));
        if e.rows() <= SEARCH_DIM && e.cols() <= SEARCH_DIM {
            searched += 1;
            if let Some(w) = bounded_torsion_search(e, SEARCH_BOX, SEARCH_MULTIPLIER)
                .map_err(|x| x.to_string())?
            {
                witnesses += 1;
                ensure(!decided && !oracle, || {
                    format!("witness {w:?} for torsion-free {e:?}")
                })?;
            }
        }
    }
    for h in &s.homs {
        reports.push(OracleReport::check(
            "hom cokernel vs oracle",
            h.matrix(),
            cokernel_torsion_free(h).torsion_free,
            torsion_free_by_snf(h.matrix()),
        ));
    }
    first_failure(&reports)?;
    Ok(format!(
        "{} instances agree; {searched} searched, {witnesses} witnesses all contradict torsion-freeness",
        s.full_rank.len() + s.homs.len()
    ))
}

fn c09_functoriality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    for i in 0..CHAINS {
        let len = 2 + i % 3;
        let chain = sample::chain(&mut rng, len);
        let mut composite = chain[0].clone();
        let mut product = chain[0].matrix().clone();
        for h in &chain[1..] {
            composite = compose(h, &composite).map_err(|x| x.to_string())?;
            product = h.matrix() * &product;
        }
        ensure(composite.matrix() == &product, || {
            format!("composite matrix differs from product in chain {i}")
        })?;
        hom_implications(&composite)?;
        let violations = analyze(&composite).violations(&composite);
        ensure(violations.is_empty(), || {
            format!("chain {i}: {violations:?}")
        })?;
    }
    Ok(format!("{CHAINS} chains of length 2-4"))
}

fn c10_span_lemma() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let mut spanning = 0;
    for _ in 0..SPAN_SAMPLES {
        let e = sample::unit_rows(&mut rng, 5, 5);
        let (columns, span) = row_pattern_span_equivalence(&e).map_err(|x| x.to_string())?;
        ensure(columns == span, || {
            format!("{e:?}: column condition {columns}, span {span}")
        })?;
        spanning += usize::from(span);
    }
    Ok(format!(
        "{SPAN_SAMPLES} matrices ({spanning} spanning), conditions always agree"
    ))
}

const WORKSPACE: &str = r#"
[algebras]
A = [2, 3, 4]
B = [5, 4]
P = [1, 1]
Q = [6, 2, 5]
R = [1]

[homs.phi]
source = "A"
target = "B"
matrix = [[1, 1, 0], [0, 0, 1]]

[homs.id_B]
source = "B"
target = "B"
matrix = [[1, 0], [0, 1]]

[homs.psi]
source = "P"
target = "Q"
matrix = [[3, 3], [2, 0], [0, 5]]

[homs.diag]
source = "R"
target = "P"
matrix = [[1], [1]]
"#;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fdk0"))
        .args(args)
        .output()
        .expect("run fdk0");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn round_trip(ws: &str, name: &str, expected_hom: &FdHom) -> Result<(), String> {
    let (code, stdout, stderr) = run_cli(&[
        "analyze",
        "--workspace",
        ws,
        "--hom",
        name,
        "--format",
        "machine",
    ]);
    ensure(code == i32::from(exit::SUCCESS), || {
        format!("analyze {name} exited {code}: {stderr}")
    })?;
    let doc: AnalysisDocument = serde_json::from_str(&stdout).map_err(|e| e.to_string())?;
    let hom = doc.hom.to_hom().map_err(|e| e.to_string())?;
    ensure(&hom == expected_hom, || {
        format!("{name}: hom differs after round trip")
    })?;
    let report = doc.report.to_report().map_err(|e| e.to_string())?;
    ensure(report == analyze(expected_hom), || {
        format!("{name}: report differs from library")
    })?;
    let again = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())? + "\n";
    ensure(again == stdout, || {
        format!("{name}: serialization is not idempotent")
    })
}

fn c11_cli(dir: &Path) -> Outcome {
    let ws_path = dir.join("workspace.toml");
    fs::write(&ws_path, WORKSPACE).map_err(|e| e.to_string())?;
    let ws = ws_path.to_str().unwrap();

    round_trip(ws, "phi", &block_diagonal_hom())?;
    round_trip(ws, "psi", &example_hom())?;

    let bad_syntax = dir.join("bad.toml");
    fs::write(&bad_syntax, "[algebras]\nA = [2, 3\n").map_err(|e| e.to_string())?;
    let infeasible = dir.join("infeasible.toml");
    fs::write(
        &infeasible,
        WORKSPACE.replace("[[1, 1, 0], [0, 0, 1]]", "[[1, 1, 1], [0, 0, 1]]"),
    )
    .map_err(|e| e.to_string())?;
    let empty = dir.join("empty.toml");
    fs::write(&empty, "[algebras]\n").map_err(|e| e.to_string())?;

    let table: Vec<(Vec<&str>, u8)> = vec![
        (
            vec!["analyze", "--workspace", ws, "--hom", "phi"],
            exit::SUCCESS,
        ),
        (
            vec!["compose", "--workspace", ws, "--homs", "phi,id_B"],
            exit::SUCCESS,
        ),
        (
            vec![
                "compose",
                "--workspace",
                ws,
                "--homs",
                "diag,psi",
                "--format",
                "machine",
            ],
            exit::SUCCESS,
        ),
        (
            vec!["analyze", "--workspace", ws, "--hom", "nope"],
            exit::USAGE,
        ),
        (
            vec![
                "analyze",
                "--workspace",
                bad_syntax.to_str().unwrap(),
                "--hom",
                "phi",
            ],
            exit::USAGE,
        ),
        (
            vec![
                "analyze",
                "--workspace",
                empty.to_str().unwrap(),
                "--hom",
                "phi",
            ],
            exit::USAGE,
        ),
        (
            vec![
                "analyze",
                "--workspace",
                "/nonexistent/ws.toml",
                "--hom",
                "phi",
            ],
            exit::USAGE,
        ),
        (vec!["analyze", "--workspace", ws], exit::USAGE),
        (
            vec![
                "analyze",
                "--workspace",
                infeasible.to_str().unwrap(),
                "--hom",
                "phi",
            ],
            exit::PRECONDITION,
        ),
        (
            vec!["compose", "--workspace", ws, "--homs", "phi,psi"],
            exit::PRECONDITION,
        ),
        (
            vec!["invert", "--side", "left", "--matrix", "3 3; 2 0; 0 5"],
            exit::SUCCESS,
        ),
        (
            vec!["invert", "--side", "left", "--matrix", "1 0; 0 1"],
            exit::SUCCESS,
        ),
        (
            vec!["invert", "--side", "right", "--matrix", "3 2 0; 3 0 5"],
            exit::SUCCESS,
        ),
        (
            vec!["invert", "--side", "left", "--matrix", "2; 0"],
            exit::NO_UNIT_INVERSE,
        ),
        (
            vec!["invert", "--side", "left", "--matrix", "1 2; 2 4"],
            exit::NO_UNIT_INVERSE,
        ),
        (
            vec!["invert", "--side", "left", "--matrix", "3 2 0; 3 0 5"],
            exit::PRECONDITION,
        ),
        (
            vec!["invert", "--side", "left", "--matrix", "1 x"],
            exit::USAGE,
        ),
        (vec!["snf", "--matrix", "2 0; 0 3"], exit::SUCCESS),
        (vec!["frobnicate"], exit::USAGE),
    ];
    for (args, expected) in &table {
        let (code, _, stderr) = run_cli(args);
        ensure(code == i32::from(*expected), || {
            format!("{args:?}: exit {code}, expected {expected}; {stderr}")
        })?;
    }

    // compose with a mismatched middle algebra names the failing pair
    let (_, _, stderr) = run_cli(&["compose", "--workspace", ws, "--homs", "phi,psi"]);
    ensure(stderr.contains("phi -> psi"), || {
        format!("mismatch message: {stderr}")
    })?;

    // composite of diag then psi is the hand product [[6],[2],[5]]
    let (_, stdout, _) = run_cli(&[
        "compose",
        "--workspace",
        ws,
        "--homs",
        "diag,psi",
        "--format",
        "machine",
    ]);
    let doc: AnalysisDocument = serde_json::from_str(&stdout).map_err(|e| e.to_string())?;
    ensure(
        doc.hom.matrix == vec![vec!["6"], vec!["2"], vec!["5"]],
        || format!("composite {:?}", doc.hom.matrix),
    )?;

    // compose with the identity on the target reports exactly what analyze does
    let (_, composed, _) = run_cli(&[
        "compose",
        "--workspace",
        ws,
        "--homs",
        "phi,id_B",
        "--format",
        "machine",
    ]);
    let composed: AnalysisDocument = serde_json::from_str(&composed).map_err(|e| e.to_string())?;
    ensure(composed.report == analyze_doc(ws, "phi")?.report, || {
        "compose with identity changed the report".into()
    })?;

    Ok(format!(
        "2 machine round trips exact, {} exit statuses as documented",
        table.len()
    ))
}

fn analyze_doc(ws: &str, name: &str) -> Result<AnalysisDocument, String> {
    let (_, stdout, _) = run_cli(&[
        "analyze",
        "--workspace",
        ws,
        "--hom",
        name,
        "--format",
        "machine",
    ]);
    serde_json::from_str(&stdout).map_err(|e| e.to_string())
}

fn main() {
    let start = Instant::now();
    let suites = Suites::generate();
    let dir = tempfile::tempdir().expect("temp dir");

    let criteria: Vec<Criterion> = vec![
        ("C01 example left inverse reproduced", Box::new(c01_example)),
        (
            "C02 three-way equivalence",
            Box::new(|| c02_three_way(&suites)),
        ),
        (
            "C03 scaled inverse identity",
            Box::new(|| c03_scaled_inverse(&suites)),
        ),
        ("C04 determinant oracle", Box::new(c04_determinant)),
        (
            "C05 implications on homs",
            Box::new(|| c05_hom_implications(&suites)),
        ),
        (
            "C06 block-diagonal example report",
            Box::new(c06_block_diagonal_report),
        ),
        (
            "C07 Smith decomposition validity",
            Box::new(|| c07_snf(&suites)),
        ),
        (
            "C08 torsion oracle agreement",
            Box::new(|| c08_torsion_oracle(&suites)),
        ),
        ("C09 functoriality", Box::new(c09_functoriality)),
        ("C10 span lemma", Box::new(c10_span_lemma)),
        (
            "C11 CLI round trip and exit statuses",
            Box::new(|| c11_cli(dir.path())),
        ),
    ];

    let mut results = BTreeMap::new();
    println!("\nacceptance criteria");
    for (name, run) in &criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match &outcome {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => println!("[FAIL] {name}: {why}"),
        }
        results.insert(*name, outcome.is_ok());
    }
    let failed = results.values().filter(|ok| !**ok).count();
    println!(
        "{} passed, {failed} failed ({:.1?})\n",
        results.len() - failed,
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
