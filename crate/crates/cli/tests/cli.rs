use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use sgb_core::gf::{LinearCode, Matrix};
use sgb_core::groebner::{coset_engine, parse_basis, parse_listing};
use sgb_core::{generator_matrix, Binomial, SchubertSpec};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn sgb(args: &[&str]) -> Output {
    sgb_env(args, &[])
}

fn sgb_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sgb"));
    cmd.args(args)
        .env_remove("SGB_MAX_N")
        .env_remove("SGB_FIXTURES");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code_of(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn params_prints_code_parameters() {
    let o = sgb(&[
        "params", "--l", "2", "--m", "5", "--q", "2", "--alpha", "1,4",
    ]);
    assert_eq!(code_of(&o), 0);
    assert!(stdout(&o).starts_with("n=7 k=3 d=4 t=1 mds=no"));
    let o = sgb(&["params", "--alpha", "1,5"]);
    assert!(stdout(&o).starts_with("n=15 k=4 d=8"));
    let o = sgb(&["params", "--alpha", "2,4"]);
    assert!(stdout(&o).starts_with("n=19 k=5 d=8 t=3"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code_of(&sgb(&["params", "--alpha", "5,5"])), 2);
    assert_eq!(code_of(&sgb(&["params", "--alpha", "1,x"])), 2);
    assert_eq!(code_of(&sgb(&["params"])), 2);
    assert_eq!(code_of(&sgb(&["frobnicate"])), 2);
    assert_eq!(code_of(&sgb(&["gb", "--matrix", "/nonexistent/m.txt"])), 2);
    let o = sgb_env(&["params", "--alpha", "1,4"], &[("SGB_MAX_N", "many")]);
    assert_eq!(code_of(&o), 2);
}

#[test]
fn build_matches_printed_matrices_by_columns() {
    let dir = tempfile::tempdir().unwrap();
    for (alpha, key) in [
        ("1,4", "1_4"),
        ("2,3", "2_3"),
        ("1,5", "1_5"),
        ("2,4", "2_4"),
    ] {
        let out = dir.path().join(format!("{key}.txt"));
        let o = sgb(&["build", "--alpha", alpha, "-o", p(&out)]);
        assert_eq!(code_of(&o), 0);
        let built = Matrix::<u32>::from_text(&fs::read_to_string(&out).unwrap()).unwrap();
        let printed = Matrix::<u32>::from_text(
            &fs::read_to_string(fixture(&format!("matrix_{key}.txt"))).unwrap(),
        )
        .unwrap();
        assert_eq!(
            built.column_multiset(),
            printed.column_multiset(),
            "alpha={alpha}"
        );
        // parsed output equals the in-memory construction
        let alpha: Vec<usize> = alpha.split(',').map(|v| v.parse().unwrap()).collect();
        let spec = SchubertSpec::new(2, 5, 2, alpha).unwrap();
        assert_eq!(built, generator_matrix::<u32>(&spec).unwrap());
    }
}

#[test]
fn build_full_grassmann_code_and_points() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let pts = dir.path().join("pts.txt");
    let o = sgb(&[
        "build",
        "--alpha",
        "4,5",
        "-o",
        p(&out),
        "--emit-points",
        p(&pts),
    ]);
    assert_eq!(code_of(&o), 0);
    let m = Matrix::<u32>::from_text(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((m.rows(), m.cols()), (10, 155));
    let points = fs::read_to_string(&pts).unwrap();
    let mut lines = points.lines();
    assert!(lines.next().unwrap().contains("(1,2) (1,3)"));
    assert_eq!(lines.count(), 155);
}

#[test]
fn build_over_gf3_and_stdout() {
    let o = sgb(&["build", "--q", "3", "--alpha", "2,4"]);
    assert_eq!(code_of(&o), 0);
    let m = Matrix::<u32>::from_text(&stdout(&o)).unwrap();
    assert_eq!(m.modulus(), 3);
    assert_eq!(m.rows(), 5);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |tag: &str| {
        let m = dir.path().join(format!("m{tag}.txt"));
        let g = dir.path().join(format!("g{tag}.txt"));
        assert_eq!(code_of(&sgb(&["build", "--alpha", "2,4", "-o", p(&m)])), 0);
        assert_eq!(code_of(&sgb(&["gb", "--matrix", p(&m), "-o", p(&g)])), 0);
        (fs::read(&m).unwrap(), fs::read(&g).unwrap())
    };
    assert_eq!(run("a"), run("b"));
}

#[test]
fn gb_reports_count_and_capability() {
    let dir = tempfile::tempdir().unwrap();
    for (key, summary) in [
        ("1_4", "elements=21 code_binomials=14 field_relations=7 t=1"),
        ("2_3", "elements=21 code_binomials=14 field_relations=7 t=1"),
    ] {
        let out = dir.path().join(format!("gb_{key}.txt"));
        let m = fixture(&format!("matrix_{key}.txt"));
        let o = sgb(&["gb", "--matrix", p(&m), "--engine", "coset", "-o", p(&out)]);
        assert_eq!(stdout(&o).trim(), summary);
        let parsed = parse_basis(&fs::read_to_string(&out).unwrap()).unwrap();
        let code =
            LinearCode::new(Matrix::<u32>::from_text(&fs::read_to_string(&m).unwrap()).unwrap())
                .unwrap();
        assert_eq!(parsed.pair_set(), coset_engine(&code).unwrap().pair_set());
        let listed =
            parse_listing(&fs::read_to_string(fixture(&format!("gb_{key}.txt"))).unwrap()).unwrap();
        assert_eq!(parsed.pair_set(), listed.elements.into_iter().collect());
        // the reference engine writes the same file
        let bb = dir.path().join(format!("bb_{key}.txt"));
        let o = sgb(&[
            "gb",
            "--matrix",
            p(&m),
            "--engine",
            "buchberger",
            "-o",
            p(&bb),
        ]);
        assert_eq!(code_of(&o), 0);
        assert_eq!(fs::read(&bb).unwrap(), fs::read(&out).unwrap());
    }
}

#[test]
fn gb_of_long_code_contains_first_listed_element() {
    let o = sgb(&["gb", "--matrix", p(&fixture("matrix_1_5.txt"))]);
    assert_eq!(code_of(&o), 0);
    let gb = parse_basis(&stdout(&o)).unwrap();
    assert!(gb.contains(&Binomial::parse("x1*x2*x3*x4 - x8*x9*x11*x13", 15).unwrap()));
    assert_eq!(gb.capability().unwrap(), 3);
}

#[test]
fn guards_exit_3() {
    let m = fixture("matrix_1_5.txt");
    let o = sgb_env(&["gb", "--matrix", p(&m)], &[("SGB_MAX_N", "10")]);
    assert_eq!(code_of(&o), 3);
    let o = sgb(&["gb", "--matrix", p(&m), "--engine", "buchberger"]);
    assert_eq!(code_of(&o), 3);
    let o = sgb_env(
        &[
            "simulate",
            "--matrix",
            p(&m),
            "--model",
            "fixed_weight(1)",
            "--trials",
            "5",
        ],
        &[("SGB_MAX_N", "10")],
    );
    assert_eq!(code_of(&o), 3);
}

#[test]
fn decoding_tables_replay_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    for key in ["1_4", "1_5", "2_3", "2_4"] {
        let basis = dir.path().join(format!("{key}.gb"));
        let m = fixture(&format!("matrix_{key}.txt"));
        assert_eq!(
            code_of(&sgb(&["gb", "--matrix", p(&m), "-o", p(&basis)])),
            0
        );
        let table = fs::read_to_string(fixture(&format!("decode_{key}.txt"))).unwrap();
        for row in table.lines().filter(|l| !l.starts_with('#')) {
            let cells: Vec<&str> = row.split('|').map(str::trim).collect();
            let o = sgb(&["decode", "--basis", p(&basis), "--word", cells[0]]);
            assert_eq!(code_of(&o), 0);
            let line = stdout(&o);
            assert!(line.starts_with("status=decoded"), "{line}");
            assert!(
                line.contains(&format!("canonical={} ", cells[1])),
                "{key}: {line}"
            );
            assert!(
                line.contains(&format!("codeword={} (", cells[2])),
                "{key}: {line}"
            );
        }
    }
}

#[test]
fn decode_examples() {
    let listing = fixture("gb_2_3.txt");
    let o = sgb(&["decode", "--basis", p(&listing), "--word", "x2*x5*x7"]);
    let line = stdout(&o);
    assert!(line.contains("canonical=x4 "), "{line}");
    assert!(line.contains("codeword=x2*x4*x5*x7 (0101101)"), "{line}");

    let listing = fixture("gb_1_4.txt");
    let o = sgb(&["decode", "--basis", p(&listing), "--word", "0111101"]);
    let line = stdout(&o);
    assert!(line.contains("canonical=x2 "), "{line}");
    assert!(line.contains("codeword=x3*x4*x5*x7 (0011101)"), "{line}");

    // a codeword decodes to itself
    let o = sgb(&["decode", "--basis", p(&listing), "--word", "1000111"]);
    let line = stdout(&o);
    assert!(line.contains("canonical=1 error=1 (0000000)"), "{line}");
    assert!(line.contains("codeword=x1*x5*x6*x7 (1000111)"), "{line}");

    // two errors exceed the radius unless complete decoding is asked for
    let o = sgb(&["decode", "--basis", p(&listing), "--word", "1100000"]);
    assert!(stdout(&o).starts_with("status=too_many_errors"));
    let o = sgb(&[
        "decode",
        "--basis",
        p(&listing),
        "--word",
        "1100000",
        "--mode",
        "complete",
    ]);
    assert!(stdout(&o).starts_with("status=decoded"));

    assert_eq!(
        code_of(&sgb(&["decode", "--basis", p(&listing), "--word", "0101"])),
        2
    );
    assert_eq!(
        code_of(&sgb(&["decode", "--basis", p(&listing), "--word", "x9"])),
        2
    );
}

#[test]
fn simulate_reports() {
    let m14 = fixture("matrix_1_4.txt");
    let run = |m: &Path, model: &str, seed: &str| {
        let o = sgb(&[
            "simulate",
            "--matrix",
            p(m),
            "--model",
            model,
            "--trials",
            "1000",
            "--seed",
            seed,
        ]);
        assert_eq!(code_of(&o), 0);
        stdout(&o)
    };
    let a = run(&m14, "fixed_weight(1)", "7");
    assert!(a.contains("successes=1000 "), "{a}");
    assert_eq!(a, run(&m14, "fixed_weight(1)", "7"));
    let b = run(&fixture("matrix_2_4.txt"), "fixed_weight(3)", "7");
    assert!(b.contains("successes=1000 "), "{b}");
    // beyond the radius nothing is silently wrong: every output is a codeword
    let c = run(&m14, "fixed_weight(2)", "7");
    assert!(
        c.contains("successes=0 failures_flagged=1000 miscorrections=0"),
        "{c}"
    );
    let d = run(&m14, "bsc(0.05)", "3");
    assert_eq!(d, run(&m14, "bsc(0.05)", "3"));
    assert_eq!(
        code_of(&sgb(&[
            "simulate",
            "--matrix",
            p(&m14),
            "--model",
            "bsc(2)"
        ])),
        2
    );
}

fn copy_fixtures(to: &Path) {
    for entry in fs::read_dir(fixture("")).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), to.join(entry.file_name())).unwrap();
    }
}

#[test]
fn verify_passes_on_shipped_fixtures() {
    let o = sgb(&["verify-paper", "--only", "gb"]);
    assert_eq!(code_of(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l.contains("] gb: ")), "{out}");
}

#[test]
fn tampered_matrix_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    copy_fixtures(dir.path());
    let path = dir.path().join("matrix_1_4.txt");
    let text = fs::read_to_string(&path).unwrap();
    // flip the first entry of the second row
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let row = &mut lines[2];
    let flipped = if row.starts_with('0') { "1" } else { "0" };
    row.replace_range(0..1, flipped);
    fs::write(&path, lines.join("\n") + "\n").unwrap();

    let o = sgb(&[
        "verify-paper",
        "--fixtures",
        p(dir.path()),
        "--only",
        "fixtures,construct",
    ]);
    assert_eq!(code_of(&o), 1);
    let out = stdout(&o);
    assert!(
        out.contains("FAIL [ 2] construct: A(1,4) column multiset"),
        "{out}"
    );
    assert!(
        out.contains("FAIL [--] fixtures: checksum matrix_1_4.txt"),
        "{out}"
    );
}

#[test]
fn missing_fixtures_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        code_of(&sgb(&["verify-paper", "--fixtures", p(dir.path())])),
        4
    );
    copy_fixtures(dir.path());
    fs::remove_file(dir.path().join("decode_2_4.txt")).unwrap();
    assert_eq!(
        code_of(&sgb(&["verify-paper", "--fixtures", p(dir.path())])),
        4
    );
    let o = sgb_env(
        &["verify-paper"],
        &[("SGB_FIXTURES", p(&dir.path().join("absent")))],
    );
    assert_eq!(code_of(&o), 4);
}
