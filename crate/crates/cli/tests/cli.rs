use std::process::{Command, Output};

fn qpv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpv"))
        .args(args)
        .output()
        .expect("qpv runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn expand_partition_numbers() {
    let o = qpv(&["expand", "1/(q;q)", "--trunc", "6", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let coefs: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.rsplit('\t').next().unwrap().to_string())
        .collect();
    assert_eq!(coefs, ["1", "1", "2", "3", "5", "7", "11"]);
}

#[test]
fn expand_empty_product_and_pretty_output() {
    let o = qpv(&["expand", "(x;q)_0", "--format", "pretty"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + O(q^31)\n");

    let o = qpv(&[
        "expand",
        "(-aq;q^2)_inf",
        "--trunc",
        "3",
        "--format",
        "pretty",
    ]);
    assert_eq!(stdout(&o), "1 + aq + aq^3 + O(q^4)\n");
}

#[test]
fn expand_json_schema() {
    let v = json(&qpv(&["expand", "(-aq;q^2)_inf", "--trunc", "3"]));
    assert_eq!(v["truncation"], 3);
    assert_eq!(v["variables"], serde_json::json!(["a", "c", "d"]));
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["terms"][1]["a"], 1);
    assert_eq!(v["terms"][1]["coef"], "1");
}

#[test]
fn parse_error_exits_2_with_column() {
    let o = qpv(&["expand", "(q;q)_inf / (aq;q^2"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("column"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn enumerate_cor2_lists_eleven() {
    let o = qpv(&["enumerate", "--case", "cor2", "--side", "A", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let parts: Vec<&str> = v["partitions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["parts"].as_str().unwrap())
        .collect();
    assert_eq!(parts.len(), 11);
    assert!(parts.contains(&"3',2,1"));
    assert!(parts.contains(&"2',2',2'"));
}

#[test]
fn enumerate_cor3_b_side_and_empty_partition() {
    let v = json(&qpv(&[
        "enumerate",
        "--case",
        "cor3",
        "--side",
        "B",
        "--n",
        "14",
    ]));
    assert_eq!(v["partitions"].as_array().unwrap().len(), 13);

    let v = json(&qpv(&["enumerate", "--case", "theorem-main", "--n", "0"]));
    assert_eq!(
        v["partitions"],
        serde_json::json!([{"weight": 0, "parts": "", "stats": [0, 0, 0]}])
    );
}

#[test]
fn count_only_table() {
    let o = qpv(&[
        "enumerate",
        "--case",
        "primc",
        "--nmax",
        "5",
        "--count-only",
        "--format",
        "tsv",
    ]);
    assert_eq!(stdout(&o), "n\tcount\n0\t1\n1\t1\n2\t2\n3\t3\n4\t5\n5\t7\n");
    let v = json(&qpv(&[
        "enumerate",
        "--case",
        "cor2",
        "--side",
        "product",
        "--n",
        "6",
        "--count-only",
    ]));
    let hit = v["counts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["stats"] == serde_json::json!([1, 0, 1]));
    assert_eq!(hit.unwrap()["count"], "1");
}

#[test]
fn unknown_case_exits_2() {
    let o = qpv(&["enumerate", "--case", "nope", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(qpv(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(
        qpv(&["enumerate", "--case", "cor2", "--side", "Z", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_all_passes() {
    let o = qpv(&["verify", "all", "--nmax", "20", "--trunc", "25"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["reports"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_truncation_too_small_exits_2() {
    let o = qpv(&["verify", "theorem-main", "--nmax", "3", "--trunc", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_rr_passes() {
    let o = qpv(&["verify", "rr", "--trunc", "50", "--format", "pretty"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS rr"));
}

#[test]
fn discrepancy_exits_1_with_detail() {
    let dir = std::env::temp_dir().join(format!("qpv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("cases.json");
    std::fs::write(
        &file,
        r#"{"name": "odd-parts", "colours": ["a"], "matrix": [[1]], "tracked": ["a"],
            "b_side": {"modulus": 2, "kinds": [{"residue": 1, "tracked": "a"}]},
            "product": [{"sign": "-", "base": "aq", "ratio": 1}]}"#,
    )
    .unwrap();
    let path = file.to_str().unwrap();
    let o = qpv(&[
        "verify",
        "--case-file",
        path,
        "--nmax",
        "8",
        "--trunc",
        "8",
        "--format",
        "pretty",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(
        text.contains("fail b-vs-product: first discrepancy at q^2"),
        "{text}"
    );

    let v = json(&qpv(&[
        "enumerate",
        "--case-file",
        path,
        "--side",
        "B",
        "--n",
        "4",
    ]));
    assert_eq!(v["partitions"].as_array().unwrap().len(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn matrix_file_enumeration() {
    let dir = std::env::temp_dir().join(format!("qpv-matrix-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("rr.txt");
    // one colour, parts differing by at least 2: the first Rogers-Ramanujan side
    std::fs::write(&file, "x\n2\n").unwrap();
    let o = qpv(&[
        "enumerate",
        "--matrix",
        file.to_str().unwrap(),
        "--nmax",
        "8",
        "--count-only",
        "--format",
        "tsv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let totals: Vec<u64> = stdout(&o).lines().skip(1).fold(vec![0; 9], |mut acc, l| {
        let f: Vec<&str> = l.split('\t').collect();
        acc[f[0].parse::<usize>().unwrap()] += f.last().unwrap().parse::<u64>().unwrap();
        acc
    });
    assert_eq!(totals, [1, 1, 1, 1, 2, 2, 3, 3, 4]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic_and_out_writes_a_file() {
    let args = ["verify", "cor2", "--nmax", "10", "--trunc", "10"];
    let a = qpv(&args);
    let b = qpv(&args);
    assert_eq!(a.stdout, b.stdout);

    let path = std::env::temp_dir().join(format!("qpv-out-{}.json", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_qpv"))
        .args(args)
        .args(["--out", path.to_str().unwrap()])
        .env("QPV_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn bad_thread_count_exits_2() {
    let o = Command::new(env!("CARGO_BIN_EXE_qpv"))
        .args(["expand", "1/(q;q)"])
        .env("QPV_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
