use std::path::PathBuf;
use std::process::{Command, Output};

fn permtab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permtab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = permtab(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "..",
        "core",
        "tests",
        "data",
        name,
    ]
    .iter()
    .collect();
    p.to_string_lossy().into_owned()
}

fn value<'a>(tsv: &'a str, key: &str) -> &'a str {
    tsv.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix('\t'))
        .unwrap_or_else(|| panic!("no {key} in\n{tsv}"))
}

#[test]
fn enumerate_prints_n_factorial_tableaux() {
    for (n, total) in [(0, 1), (3, 6), (4, 24)] {
        let out = stdout(&["enumerate", &n.to_string()]);
        assert_eq!(value(&out, "total"), total.to_string());
        let blocks = out.split("\n\n").count() - 1;
        assert_eq!(blocks, total);
    }
}

#[test]
fn enumerate_rejects_large_n() {
    let out = permtab(&["enumerate", "13"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("at most 12"));
}

#[test]
fn enumerate_is_independent_of_jobs() {
    assert_eq!(
        stdout(&["--jobs", "1", "enumerate", "5"]),
        stdout(&["--jobs", "4", "enumerate", "5"])
    );
}

#[test]
fn stats_on_small_example() {
    let out = stdout(&["stats", &data("shape221.tab")]);
    assert_eq!(value(&out, "inv"), "2");
    assert_eq!(value(&out, "w_3"), "2");
    assert_eq!(value(&out, "w_5"), "0");
    assert_eq!(value(&out, "xi"), "4,5,1,3,2");
    assert_eq!(value(&out, "f3-21"), "2");
    assert_eq!(value(&out, "lbell"), "false");
}

#[test]
fn stats_lists_unrestricted_rows() {
    let out = stdout(&["stats", &data("length11.tab")]);
    assert_eq!(value(&out, "unrestricted_rows"), "1,2,7,11");
    assert_eq!(value(&out, "white_dots"), "(5,9) (8,10)");
}

#[test]
fn stats_on_empty_rows() {
    let out = stdout(&["stats", &data("empty_rows4.tab")]);
    assert_eq!(value(&out, "inv"), "0");
    assert_eq!(value(&out, "xi"), "1,2,3,4");
    assert_eq!(value(&out, "lbell"), "true");
}

#[test]
fn stats_accepts_dot_files() {
    let out = stdout(&["stats", &data("one_row.dots")]);
    assert_eq!(value(&out, "w_2"), "1");
    assert_eq!(value(&out, "inv"), "1");
}

#[test]
fn stats_rejects_axiom_violations() {
    let dir = std::env::temp_dir().join(format!("permtab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.tab");
    std::fs::write(&bad, "4\n2,2\n01\n10\n").unwrap();
    let out = permtab(&["stats", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("(2,3)"), "{err}");
}

#[test]
fn xi_and_inv() {
    assert_eq!(stdout(&["xi", &data("shape221.tab")]), "4,5,1,3,2\n");
    assert_eq!(stdout(&["inv", &data("shape221.tab")]), "2\n");
    assert_eq!(stdout(&["xi", &data("empty_rows4.tab")]), "1,2,3,4\n");
}

#[test]
fn pattern_counts() {
    assert_eq!(stdout(&["pattern", "3-21", "4,5,1,3,2"]), "2\n");
    assert_eq!(stdout(&["pattern", "32-1", "1,2,3"]), "0\n");
    assert_eq!(stdout(&["pattern", "32-1", "3,2,1"]), "1\n");
    assert_eq!(
        stdout(&["pattern", "3-21", "4,5,1,3,2", "--rc"]),
        "2\nrc\t0\n"
    );
}

#[test]
fn pattern_parse_errors_fail() {
    assert!(!permtab(&["pattern", "3---21", "1,2,3"]).status.success());
    assert!(!permtab(&["pattern", "3-21", "1,1,2"]).status.success());
}

#[test]
fn distribution_matches_between_statistics() {
    let a = stdout(&["distribution", "5", "inv"]);
    let b = stdout(&["distribution", "5", "32-1"]);
    assert_eq!(a, b);
    assert_eq!(value(&a, "total"), "120");
}

#[test]
fn verify_reports_tsv() {
    let out = stdout(&["verify", "3", "bell"]);
    let last = out.lines().last().unwrap();
    assert_eq!(last, "bell\t3\tpass\tinv0=5 lbell=5 avoid32-1=5 bell=5\t-");
    assert!(out.starts_with("check\tn\tstatus"));
}

#[test]
fn verify_all_small() {
    let out = stdout(&["verify", "1", "all"]);
    assert!(out
        .lines()
        .skip(1)
        .all(|l| l.split('\t').nth(2) == Some("pass")));
    stdout(&["verify", "6", "all"]);
}

#[test]
fn verify_is_deterministic() {
    assert_eq!(
        stdout(&["--jobs", "1", "verify", "5", "all"]),
        stdout(&["--jobs", "3", "verify", "5", "all", "--seed", "0"])
    );
}

#[test]
fn verify_errors() {
    let out = permtab(&["verify", "3", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = permtab(&["verify", "9", "theorem"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pretty_aligns_columns() {
    let out = stdout(&["--pretty", "distribution", "3"]);
    assert!(out.lines().all(|l| !l.contains('\t')));
    assert!(out.contains("total  6"));
}
