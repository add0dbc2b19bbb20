//! End-to-end checks of the command-line surface: exit codes, output
//! shapes, and file round-trips.

use std::path::Path;
use std::process::{Command, Output};

fn cfcolor(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfcolor"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

#[test]
fn exact_on_bull_prints_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = cfcolor(dir.path(), &["gen", "--family", "named:bull", "--out", "bull.g"]);
    assert_eq!(code(&out), 0);
    let out = cfcolor(
        dir.path(),
        &["exact", "--mode", "cn", "--graph", "bull.g", "--max-k", "3"],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn verify_valid_and_invalid() {
    let dir = tempfile::tempdir().unwrap();
    cfcolor(dir.path(), &["gen", "--family", "named:k3", "--out", "k3.g"]);
    std::fs::write(dir.path().join("good"), "1 2 0\n").unwrap();
    std::fs::write(dir.path().join("bad"), "1 1 0\n").unwrap();
    let out = cfcolor(
        dir.path(),
        &["verify", "--mode", "on", "--graph", "k3.g", "--coloring", "good"],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "VALID");
    let out = cfcolor(
        dir.path(),
        &["verify", "--mode", "on", "--graph", "k3.g", "--coloring", "bad"],
    );
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "INVALID witness=2");
}

#[test]
fn kneser_color_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = cfcolor(
        dir.path(),
        &["color", "--class", "kneser-on", "--n", "7", "--k", "3", "--out", "c"],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "colors_used=4 valid=true");
}

#[test]
fn dp_yes_no_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("k3.we"),
        "j(1,2,u(r(1,2,j(1,2,u(v(0,1),v(1,2)))),v(2,1)))\n",
    )
    .unwrap();
    let yes = cfcolor(
        dir.path(),
        &["dp", "--expr", "k3.we", "--k", "2", "--mode", "on"],
    );
    assert_eq!(code(&yes), 0);
    assert_eq!(stdout(&yes).trim(), "YES");
    let no = cfcolor(
        dir.path(),
        &["dp", "--expr", "k3.we", "--k", "1", "--mode", "on"],
    );
    assert_eq!(code(&no), 1);
    assert_eq!(stdout(&no).trim(), "NO");
}

#[test]
fn exact_ceiling_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    cfcolor(
        dir.path(),
        &["gen", "--family", "bipartite-dh", "--k", "5", "--out", "big.g"],
    );
    let out = cfcolor(
        dir.path(),
        &[
            "exact", "--mode", "on", "--graph", "big.g", "--max-k", "2", "--ceiling", "20",
        ],
    );
    assert_eq!(code(&out), 3);
}

#[test]
fn usage_error_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let out = cfcolor(dir.path(), &["color", "--class", "no-such-class"]);
    assert_eq!(code(&out), 2);
    std::fs::write(dir.path().join("broken.g"), "2 9\n0 1\n").unwrap();
    let out = cfcolor(
        dir.path(),
        &["exact", "--mode", "on", "--graph", "broken.g", "--max-k", "1"],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn generated_files_roundtrip_through_loaders() {
    let dir = tempfile::tempdir().unwrap();
    for (family, extra) in [
        ("random:extension-seq", vec!["--ops", "PTF"]),
        ("random:cotree", vec![]),
        ("random:intervals", vec![]),
        ("random:unit-intervals", vec![]),
        ("random:points-box", vec![]),
    ] {
        let mut args = vec![
            "gen", "--family", family, "--n", "9", "--seed", "7", "--out", "inst",
        ];
        args.extend(extra);
        let out = cfcolor(dir.path(), &args);
        assert_eq!(code(&out), 0, "family {family}");
        assert!(dir.path().join("inst").exists());
    }
    // sequence file feeds the dh colorer
    cfcolor(
        dir.path(),
        &[
            "gen", "--family", "random:extension-seq", "--n", "9", "--seed", "7", "--out",
            "seq",
        ],
    );
    let out = cfcolor(
        dir.path(),
        &["color", "--class", "dh-cn", "--input", "seq", "--out", "c"],
    );
    assert_eq!(code(&out), 0);
    let summary = stdout(&out);
    assert!(summary.contains("valid=true"), "{summary}");
}

#[test]
fn split_reduction_emits_partition() {
    let dir = tempfile::tempdir().unwrap();
    cfcolor(dir.path(), &["gen", "--family", "named:k3", "--out", "k3.g"]);
    let out = cfcolor(
        dir.path(),
        &[
            "gen", "--family", "split-reduction", "--input", "k3.g", "--out", "red.g",
        ],
    );
    assert_eq!(code(&out), 0);
    assert!(dir.path().join("red.g").exists());
    assert!(dir.path().join("red.partition").exists());
    let out = cfcolor(
        dir.path(),
        &[
            "color", "--class", "split-cn", "--input", "red.g", "--partition",
            "red.partition", "--out", "c",
        ],
    );
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("valid=true"));
}

#[test]
fn pid_on_graph_and_intervals() {
    let dir = tempfile::tempdir().unwrap();
    cfcolor(dir.path(), &["gen", "--family", "named:bull", "--out", "bull.g"]);
    let out = cfcolor(dir.path(), &["pid", "--graph", "bull.g"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "NONE");
    cfcolor(
        dir.path(),
        &["gen", "--family", "named-intervals:bull", "--out", "bull.iv"],
    );
    let out = cfcolor(dir.path(), &["pid", "--intervals", "bull.iv"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn bench_emits_all_classes_valid() {
    let dir = tempfile::tempdir().unwrap();
    let out = cfcolor(dir.path(), &["bench", "--suite", "tables", "--out", "t.csv"]);
    assert_eq!(code(&out), 0);
    let csv = std::fs::read_to_string(dir.path().join("t.csv")).unwrap();
    let lines: Vec<&str> = csv.trim().lines().collect();
    assert_eq!(lines[0], "class,n,bound,colors_used,valid");
    assert_eq!(lines.len(), 13);
    for line in &lines[1..] {
        assert!(line.ends_with(",true"), "row not verified: {line}");
    }
}
