use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn terw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_terw")).args(args).output().expect("terw runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// `scheme -> char -> distinct dims` from CSV output.
fn distinct_from_csv(csv: &str) -> BTreeMap<String, BTreeMap<u32, BTreeSet<usize>>> {
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("scheme,point,char,dim,radical_dim,semisimple"));
    let mut out: BTreeMap<String, BTreeMap<u32, BTreeSet<usize>>> = BTreeMap::new();
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 6, "{line}");
        out.entry(f[0].to_string()).or_default().entry(f[2].parse().unwrap()).or_default().insert(f[3].parse().unwrap());
    }
    out
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

#[test]
fn verify_valid_emitted_johnson6() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("j6.txt");
    let o = terw(&["emit", "johnson:6", "--out", path_str(&file)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = terw(&["verify", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("rank 3, valencies 1 8 6"), "{out}");
    assert!(out.contains("symmetric yes, commutative yes"), "{out}");
}

#[test]
fn verify_perturbed_table_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    let text = stdout(&terw(&["emit", "johnson:6"]));
    let mut rows: Vec<Vec<String>> = text.lines().map(|l| l.split_whitespace().map(String::from).collect()).collect();
    // swap the relation of the pair {0, 1} symmetrically; the table stays well formed
    let flipped = if rows[1][1] == "1" { "2" } else { "1" };
    rows[1][1] = flipped.into();
    rows[2][0] = flipped.into();
    let text: Vec<String> = rows.iter().map(|r| r.join(" ")).collect();
    fs::write(&file, text.join("\n")).unwrap();
    let o = terw(&["verify", path_str(&file)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("is not constant"), "{}", stderr(&o));
}

#[test]
fn input_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let garbage = dir.path().join("garbage.txt");
    fs::write(&garbage, "3 2\n0 1\n").unwrap();
    for args in [
        vec!["verify", path_str(&missing)],
        vec!["verify", path_str(&garbage)],
        vec!["emit", "chang:4"],
        vec!["emit", "petersen"],
        vec!["tdim", "--scheme", "johnson:6", "--chars", "4"],
        vec!["tdim", "--scheme", "johnson:6", "--points", "16"],
        vec!["tdim", "--scheme", "johnson:2"],
        vec!["tdim"],
        vec!["frobnicate"],
    ] {
        assert_eq!(terw(&args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn graph_that_is_not_strongly_regular_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("path.txt");
    fs::write(&file, "3\n010\n101\n010\n").unwrap();
    let o = terw(&["verify", path_str(&file)]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert_eq!(terw(&["tdim", "--file", path_str(&file)]).status.code(), Some(2));
}

#[test]
fn emitted_graphs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (name, params, order) in [
        ("shrikhande", "(16,6,2,2)", 16),
        ("rook4", "(16,6,2,2)", 16),
        ("chang:1", "(28,12,6,4)", 28),
        ("chang:2", "(28,12,6,4)", 28),
        ("chang:3", "(28,12,6,4)", 28),
    ] {
        let file = dir.path().join(format!("{}.txt", name.replace(':', "_")));
        assert!(terw(&["emit", name, "--out", path_str(&file)]).status.success());
        let text = fs::read_to_string(&file).unwrap();
        assert_eq!(text.lines().next(), Some(order.to_string().as_str()));
        let o = terw(&["verify", path_str(&file)]);
        assert!(stdout(&o).contains(&format!("strongly regular graph {params}")), "{name}: {}", stdout(&o));
    }
    let j5 = stdout(&terw(&["emit", "johnson:5"]));
    let lines: Vec<&str> = j5.lines().collect();
    assert_eq!(lines[0], "10 3");
    assert_eq!(lines.len(), 11);
    assert!(lines[1..].iter().all(|l| l.split_whitespace().count() == 10));
}

#[test]
fn tdim_johnson8_csv() {
    let o = terw(&["tdim", "--scheme", "johnson:8", "--chars", "0,2,3,5,7", "--format", "csv", "--no-corners"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let d = distinct_from_csv(&stdout(&o));
    let j = &d["johnson:8"];
    assert_eq!(j[&0], set(&[16]));
    assert_eq!(j[&2], set(&[15]));
    for p in [3, 5, 7] {
        assert_eq!(j[&p], set(&[16]));
    }
    assert_eq!(stdout(&o).lines().count(), 1 + 28 * 5);
}

#[test]
fn tdim_chang_json() {
    let o = terw(&["tdim", "--scheme", "chang", "--chars", "0,2", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let points = v.as_array().unwrap();
    assert_eq!(points.len(), 84);
    let mut char0: BTreeMap<String, BTreeSet<u64>> = BTreeMap::new();
    let mut char2: BTreeMap<String, BTreeSet<u64>> = BTreeMap::new();
    for p in points {
        let scheme = p["scheme"].as_str().unwrap().to_string();
        assert_eq!(p["chars"]["0"]["dim"], p["dim_char0"]);
        assert_eq!(p["divisors"].as_array().unwrap().len() as u64, p["dim_char0"].as_u64().unwrap());
        assert_eq!(p["chars"]["2"]["corners"].as_array().unwrap().len(), 3);
        assert!(p["chars"]["0"]["corners"].is_null());
        char0.entry(scheme.clone()).or_default().insert(p["dim_char0"].as_u64().unwrap());
        char2.entry(scheme).or_default().insert(p["chars"]["2"]["dim"].as_u64().unwrap());
    }
    let s = |v: &[u64]| v.iter().copied().collect::<BTreeSet<u64>>();
    assert_eq!(char0["chang:1"], s(&[20, 27]));
    assert_eq!(char0["chang:2"], s(&[23, 27]));
    assert_eq!(char0["chang:3"], s(&[23, 35]));
    assert_eq!(char2["chang:1"], s(&[19]));
    assert_eq!(char2["chang:2"], s(&[23]));
    assert_eq!(char2["chang:3"], s(&[23]));
}

#[test]
fn tdim_order15_file() {
    let o = terw(&["tdim", "--file", &data("as15_5.txt"), "--chars", "0,2", "--points", "1,2,11", "--format", "csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(
        rows,
        [
            "as15_5,1,0,33,0,true",
            "as15_5,1,2,31,10,false",
            "as15_5,2,0,17,0,true",
            "as15_5,2,2,17,4,false",
            "as15_5,11,0,17,0,true",
            "as15_5,11,2,15,2,false",
        ]
    );
}

#[test]
fn tdim_table_has_distinct_row() {
    let o = terw(&["tdim", "--scheme", "shrikhande", "--chars", "0,2"]);
    let out = stdout(&o);
    let row = out.lines().find(|l| l.trim_start().starts_with("distinct")).unwrap();
    assert_eq!(row.split_whitespace().collect::<Vec<_>>(), ["distinct", "{20}", "{19}"]);
}

#[test]
fn parallel_and_serial_reports_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let outputs: Vec<PathBuf> = ["1", "3"]
        .iter()
        .map(|jobs| {
            let out = dir.path().join(format!("r{jobs}.json"));
            let o = terw(&[
                "tdim", "--scheme", "rook4", "--scheme", "shrikhande", "--chars", "0,2,3", "--format", "json", "--jobs", jobs,
                "--out", path_str(&out),
            ]);
            assert!(o.status.success(), "{}", stderr(&o));
            out
        })
        .collect();
    assert_eq!(fs::read(&outputs[0]).unwrap(), fs::read(&outputs[1]).unwrap());
}

#[test]
fn check_johnson8() {
    let o = terw(&["check", "--scheme", "johnson:8", "--chars", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(!out.contains("FAIL"));
    assert!(out.lines().any(|l| l.starts_with("PASS johnson:8: product identities")), "{out}");
    assert!(out.contains("0 failed"));
}

#[test]
fn check_order15_finds_converse_failure() {
    let o = terw(&["check", "--file", &data("as15_5.txt"), "--chars", "2", "--points", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("FINDING as15_5 point 2 p = 2: every corner algebra is semisimple but T(x) is not"), "{out}");
}

#[test]
fn check_johnson5_records_dimension() {
    let o = terw(&["check", "--scheme", "johnson:5", "--chars", "2,3", "--points", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("NOTE johnson:5: 14 nonzero generators, dim over Q [15], nontrivial divisors []"), "{out}");
}

#[test]
fn srg26_files_spot_check() {
    let o = terw(&[
        "tdim", "--file", &data("srg26_no09.txt"), "--file", &data("srg26_no10.txt"), "--chars", "0,2,5", "--format", "csv",
        "--no-corners",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let d = distinct_from_csv(&stdout(&o));
    assert_eq!(d["srg26_no09"][&0], set(&[31, 35]));
    assert_eq!(d["srg26_no09"][&2], set(&[29, 30]));
    assert_eq!(d["srg26_no10"][&5], set(&[23, 27]));
}
