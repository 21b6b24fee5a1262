use std::collections::BTreeMap;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quiverpaths"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str], stdin: &str) -> Vec<Value> {
    let o = run(args, stdin);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

/// Strict partitions with at most `zeros` boxes of even content.
fn distinct_part_partitions(max_size: u32, zeros: u32) -> usize {
    fn rec(remaining: u32, max_part: u32, rows: &mut Vec<u32>, zeros: u32, count: &mut usize) {
        let v0: u32 = rows
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len).filter(|&j| (j as i64 - i as i64).rem_euclid(2) == 0).count() as u32)
            .sum();
        if v0 <= zeros {
            *count += 1;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            rows.push(p);
            rec(remaining - p, p - 1, rows, zeros, count);
            rows.pop();
        }
    }
    let mut count = 0;
    rec(max_size, max_size, &mut Vec::new(), zeros, &mut count);
    count
}

#[test]
fn enumerate_counts_strict_partitions() {
    let rows = json(&["enumerate", "--n", "1", "--charges", "0", "--max-energy", "3"], "");
    // A strict partition with v_0 ≤ 3 has fewer than 16 boxes.
    assert_eq!(rows.len(), distinct_part_partitions(16, 3));
    assert_eq!(rows[0]["weight"], "1,0;0");
    assert_eq!(rows[0]["energy"], 0);
}

#[test]
fn gl_rows_contain_reduced_rows() {
    let args = ["enumerate", "--n", "1", "--charges", "0,1", "--max-energy", "2"];
    let reduced = json(&args, "");
    let mut gl_args = args.to_vec();
    gl_args.push("--gl");
    let gl = json(&gl_args, "");
    assert!(gl.len() > reduced.len());
    for r in &reduced {
        assert!(gl.contains(r), "{r}");
    }
}

#[test]
fn enumerate_is_sorted_by_energy() {
    let rows = json(&["enumerate", "--n", "2", "--charges", "0,1", "--max-energy", "2"], "");
    let energies: Vec<u64> = rows.iter().map(|r| r["energy"].as_u64().unwrap()).collect();
    assert!(energies.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn character_matches_enumeration() {
    let table = json(&["character", "--n", "1", "--charges", "0,0", "--max-energy", "3"], "");
    assert_eq!(table[0]["weight"], "2,0;0");
    assert_eq!(table[0]["count"], 1);
    let rows = json(&["enumerate", "--n", "1", "--charges", "0,0", "--max-energy", "3"], "");
    let mut per_energy: BTreeMap<u64, u64> = BTreeMap::new();
    for r in &rows {
        *per_energy.entry(r["energy"].as_u64().unwrap()).or_default() += 1;
    }
    let mut summed: BTreeMap<u64, u64> = BTreeMap::new();
    for t in &table {
        *summed.entry(t["energy"].as_u64().unwrap()).or_default() += t["count"].as_u64().unwrap();
    }
    assert_eq!(per_energy, summed);
    let paths = json(
        &[
            "enumerate",
            "--n",
            "1",
            "--charges",
            "0,0",
            "--max-energy",
            "3",
            "--paths",
        ],
        "",
    );
    assert_eq!(paths.len(), rows.len());
}

#[test]
fn tsv_and_json_carry_the_same_data() {
    let args = ["enumerate", "--n", "1", "--charges", "0,1", "--max-energy", "2"];
    let rows = json(&args, "");
    let mut tsv_args = vec!["--format", "tsv"];
    tsv_args.extend(args);
    let tsv = stdout(&run(&tsv_args, ""));
    let mut lines = tsv.lines();
    assert_eq!(lines.next(), Some("energy\tweight\ttuple"));
    let parsed: Vec<Vec<String>> = lines.map(|l| l.split('\t').map(String::from).collect()).collect();
    assert_eq!(parsed.len(), rows.len());
    for (cells, row) in parsed.iter().zip(&rows) {
        assert_eq!(cells[0], row["energy"].to_string());
        assert_eq!(cells[1], row["weight"].as_str().unwrap());
        assert_eq!(serde_json::from_str::<Value>(&cells[2]).unwrap(), row["tuple"]);
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--jobs",
        "3",
        "quiver-check",
        "--charges",
        "0",
        "--seed",
        "7",
        "--seeds",
        "5",
    ];
    let input = r#"{"mode":"cyclic","n":1,"segments":[{"lo":0,"hi":1,"mult":1},{"lo":1,"hi":1,"mult":1}]}"#;
    let a = run(&args, input);
    let b = run(&args, input);
    assert_eq!(a.stdout, b.stdout);
    let e1 = run(
        &[
            "--jobs",
            "1",
            "enumerate",
            "--n",
            "2",
            "--charges",
            "0,0,1",
            "--max-energy",
            "2",
        ],
        "",
    );
    let e4 = run(
        &[
            "--jobs",
            "4",
            "enumerate",
            "--n",
            "2",
            "--charges",
            "0,0,1",
            "--max-energy",
            "2",
        ],
        "",
    );
    assert_eq!(e1.stdout, e4.stdout);
}

/// Applies content bookkeeping directly: F_k appends the box of content k at
/// the end of the unique row that admits it.
fn add_box(rows: &[u32], k: i64) -> Option<Vec<u32>> {
    let mut rows = rows.to_vec();
    rows.push(0);
    for i in 0..rows.len() {
        let content = rows[i] as i64 - i as i64;
        let fits = i == 0 || rows[i - 1] > rows[i];
        if content == k && fits {
            rows[i] += 1;
            while rows.last() == Some(&0) {
                rows.pop();
            }
            return Some(rows);
        }
    }
    None
}

#[test]
fn fock_words_match_box_bookkeeping() {
    let rows = json(&["fock", "--word", "F-1 F1 F0"], "");
    let expected = add_box(&[], 0)
        .and_then(|y| add_box(&y, 1))
        .and_then(|y| add_box(&y, -1))
        .unwrap();
    assert_eq!(expected, vec![2, 1]);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["parts"], serde_json::json!(expected));
    assert_eq!(rows[0]["coeff"], "1");

    let rows = json(&["fock", "--word", "E0 F0"], "");
    assert_eq!(rows[0]["parts"], serde_json::json!([]));

    let rows = json(&["fock", "--word", "H0", "--start", "[1]"], "");
    assert_eq!(rows[0]["coeff"], "-1");

    let rows = json(&["fock", "--word", "F2 F0"], "");
    assert!(rows.is_empty());
}

#[test]
fn lift_and_reduce() {
    let path = r#"{"n":1,"charges":[0,0],"prefix":[[1,1],[0,1]]}"#;
    let rows = json(&["lift"], path);
    assert_eq!(rows[0]["energy"], 2);
    assert_eq!(
        rows[0]["tuple"],
        serde_json::json!([{"parts":[2],"charge":0},{"parts":[1],"charge":0}])
    );

    let rows = json(&["reduce", "--n", "1"], r#"[{"parts":[2,1,1],"charge":0}]"#);
    assert_eq!(rows[0]["tuple"], serde_json::json!([{"parts":[2],"charge":0}]));
}

#[test]
fn verify_passes_and_reports_faults() {
    let o = run(&["verify"], "");
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["passed"], true);
    for p in report["properties"].as_array().unwrap() {
        assert!(p["cases"].as_u64().unwrap() > 0, "{p}");
    }

    let o = run(&["verify", "--corrupt-delta"], "");
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<&Value> = report["properties"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["passed"] == false)
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["name"], "delta_equals_weight");
    assert!(failed[0]["counterexample"].as_str().unwrap().contains("Y=[]"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[], "").status.code(), Some(2));
    assert_eq!(
        run(&["enumerate", "--n", "1", "--charges", "0"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--n", "1", "--charges", "0,5", "--max-energy", "1"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["fock", "--word", "Q3"], "").status.code(), Some(2));
    assert_eq!(run(&["reduce", "--n", "1"], "[").status.code(), Some(2));
    assert_eq!(run(&["lift", "/nonexistent/path.json"], "").status.code(), Some(2));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}
