use std::io::Write;
use std::process::{Command, Output, Stdio};

fn zagreb(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zagreb"))
        .args(args)
        .env_remove("ZAGREB_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(text: &str) -> Vec<serde_json::Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

#[test]
fn compute_path_and_star() {
    let out = zagreb(&["compute"], "EhCG\nEsa?\n");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rows = json_lines(&stdout(&out));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["pi1"]["exact"], "256");
    assert_eq!(rows[0]["pi2"]["exact"], "256");
    assert_eq!(rows[0]["k"], 4);
    assert_eq!(rows[0]["max_degree"], 2);
    assert_eq!(rows[1]["pi1"]["exact"], "25");
    assert_eq!(rows[1]["pi2"]["exact"], "3125");
    assert_eq!(rows[1]["m1"], 30);
    assert_eq!(rows[1]["m2"], 25);
}

#[test]
fn compute_reads_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trees.txt");
    std::fs::write(&path, "# two trees\n0 1\n1 2\n2 3\n\n0 1\n0 2\n0 3\n").unwrap();
    let out = zagreb(&["compute", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rows = json_lines(&stdout(&out));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["line"], 2);
    assert_eq!(rows[0]["sequence"], serde_json::json!([2, 2, 1, 1]));
    assert_eq!(rows[1]["pi2"]["exact"], "27");
}

#[test]
fn compute_table_format() {
    let out = zagreb(&["compute", "--format", "table", "-"], "Esa?\n");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    assert!(row.contains(" 25  3125  (5,1^5)"), "{row}");
}

#[test]
fn compute_malformed_line_exits_2() {
    let out = zagreb(&["compute"], "EhCG\n# comment\nE!!!\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn compute_bad_edge_names_input_line() {
    let out = zagreb(&["compute"], "0 1\n1 2\n\n0 1\n0 1\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 5"), "{}", stderr(&out));
}

#[test]
fn compute_missing_file_exits_2() {
    let out = zagreb(&["compute", "/nonexistent/trees.g6"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_pi1_min_bound() {
    let out = zagreb(
        &[
            "construct",
            "--n",
            "11",
            "--k",
            "2",
            "--index",
            "pi1",
            "--goal",
            "min",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("# sequence (5,5,2,1^8)"), "{text}");
    assert!(text.contains("# bound 2500 "), "{text}");
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 1);
}

#[test]
fn construct_path_class() {
    for (index, goal) in [
        ("pi1", "min"),
        ("pi1", "max"),
        ("pi2", "min"),
        ("pi2", "max"),
    ] {
        let out = zagreb(
            &[
                "construct",
                "--n",
                "9",
                "--k",
                "7",
                "--index",
                index,
                "--goal",
                goal,
                "--format",
                "json",
            ],
            "",
        );
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["bound"]["exact"], "16384");
        assert_eq!(v["max_degree"], 2);
        let edges = v["edges"].as_array().unwrap();
        assert_eq!(edges.len(), 8);
    }
}

#[test]
fn construct_inadmissible_exits_3() {
    let out = zagreb(
        &[
            "construct",
            "--n",
            "8",
            "--k",
            "4",
            "--index",
            "pi1",
            "--goal",
            "min",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(3));
    let err = stderr(&out);
    assert!(err.contains("1 <= k <= floor((n-2)/2) or k = n-2"), "{err}");
    assert!(stdout(&out).is_empty());
}

#[test]
fn construct_round_trips_through_compute() {
    for format in ["graph6", "edgelist"] {
        for (index, goal) in [
            ("pi1", "min"),
            ("pi1", "max"),
            ("pi2", "min"),
            ("pi2", "max"),
        ] {
            for (n, k) in [(11, 2), (17, 3), (30, 4), (12, 10)] {
                let (n, k) = (n.to_string(), k.to_string());
                let built = zagreb(
                    &[
                        "construct",
                        "--n",
                        &n,
                        "--k",
                        &k,
                        "--index",
                        index,
                        "--goal",
                        goal,
                        "--format",
                        format,
                    ],
                    "",
                );
                assert_eq!(built.status.code(), Some(0));
                let text = stdout(&built);
                let bound = text
                    .lines()
                    .find_map(|l| l.strip_prefix("# bound "))
                    .and_then(|l| l.split_whitespace().next())
                    .unwrap()
                    .to_string();
                let computed = zagreb(&["compute"], &text);
                assert_eq!(computed.status.code(), Some(0), "{}", stderr(&computed));
                let rows = json_lines(&stdout(&computed));
                assert_eq!(rows.len(), 1);
                assert_eq!(
                    rows[0][index]["exact"],
                    bound.as_str(),
                    "{format} {n} {k} {index} {goal}"
                );
                assert_eq!(rows[0]["k"].to_string(), k);
            }
        }
    }
}

#[test]
fn enumerate_counts() {
    let out = zagreb(&["enumerate", "--n", "8"], "");
    assert_eq!(stdout(&out).lines().count(), 23);
    let out = zagreb(
        &["enumerate", "--n", "8", "--k", "2", "--format", "edgelist"],
        "",
    );
    let computed = zagreb(&["compute"], &stdout(&out));
    let rows = json_lines(&stdout(&computed));
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["k"] == 2 && r["n"] == 8));
    assert_eq!(
        zagreb(&["enumerate", "--n", "21"], "").status.code(),
        Some(3)
    );
    assert_eq!(
        zagreb(&["enumerate", "--n", "8", "--k", "4"], "")
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn verify_small_grid() {
    let out = zagreb(&["verify", "--n-max", "4"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("n=")).count(), 2);
}

#[test]
fn verify_to_twelve_with_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("grid.json");
    let out = zagreb(
        &[
            "verify",
            "--n-max",
            "12",
            "--jobs",
            "2",
            "--report",
            json.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["all_match"], true);
    let keys: Vec<(u64, u64)> = report["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["n"].as_u64().unwrap(), c["k"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);

    let csv = dir.path().join("grid.csv");
    let out = zagreb(
        &["verify", "--n-max", "6", "--report", csv.to_str().unwrap()],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(
        body.lines().next(),
        Some("n,k,index,goal,oracle,formula,match")
    );
    assert!(body.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn verify_rejects_out_of_range() {
    assert_eq!(
        zagreb(&["verify", "--n-max", "3"], "").status.code(),
        Some(3)
    );
    assert_eq!(
        zagreb(&["verify", "--n-max", "21"], "").status.code(),
        Some(3)
    );
}

#[test]
fn table_rows() {
    let out = zagreb(&["table", "--n-from", "10", "--n-to", "12"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,k,delta,pi1_min,pi1_max,pi2_min,pi2_max")
    );
    assert!(text
        .lines()
        .any(|l| l == "11,2,5,2500,82944,746496,39062500"));
    // path rows carry four equal values
    assert!(text
        .lines()
        .any(|l| l == "12,10,2,1048576,1048576,1048576,1048576"));
    assert_eq!(
        zagreb(&["table", "--n-from", "5", "--n-to", "4"], "")
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn table_text_has_log_columns() {
    let out = zagreb(
        &[
            "table", "--n-from", "11", "--n-to", "11", "--format", "text",
        ],
        "",
    );
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().contains("log2_pi2_max"));
    assert!(text.contains("11.2877"));
}

#[test]
fn usage_errors_exit_2() {
    let out = zagreb(
        &[
            "construct",
            "--n",
            "8",
            "--k",
            "2",
            "--index",
            "pi3",
            "--goal",
            "min",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
}
