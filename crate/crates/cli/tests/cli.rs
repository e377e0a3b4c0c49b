use std::process::{Command, Output};

fn boolinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boolinv"))
        .args(args)
        .env_remove("BOOLINV_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn check_exit_codes() {
    let o = boolinv(&["check", "4321"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["is_boolean"], false);
    assert_eq!(
        v["pattern"]["pattern"]["word"],
        serde_json::json!([4, 3, 2, 1])
    );
    assert_eq!(v["long_crossing"], serde_json::json!([1, 2]));

    let o = boolinv(&["check", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["is_boolean"], true);

    let o = boolinv(&["check", "--signed", "-1,-2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["is_boolean"], false);

    let o = boolinv(&["check", "4322"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("duplicate"));
    assert_eq!(boolinv(&["check", "231"]).status.code(), Some(2));
    assert_eq!(
        boolinv(&["check", "12", "--method", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(boolinv(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn check_methods_agree() {
    for method in ["patterns", "long-crossing", "sexpr", "poset", "all"] {
        let o = boolinv(&["check", "456123", "--method", method]);
        assert_eq!(o.status.code(), Some(1), "{method}");
        let o = boolinv(&["check", "3412", "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{method}");
    }
    for method in ["phi", "signed-patterns", "sexpr", "all"] {
        let o = boolinv(&["check", "--signed", "2,1,-3", "--method", method]);
        assert_eq!(o.status.code(), Some(1), "{method}");
    }
}

#[test]
fn text_format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_boolinv"))
        .args(["check", "3412"])
        .env("BOOLINV_FORMAT", "text")
        .output()
        .unwrap();
    let text = stdout(&o);
    assert!(text.starts_with("3412: Boolean"));
    assert!(text.contains("expression 1,3,2"));
}

#[test]
fn tables() {
    let o = boolinv(&["table", "h", "--max-n", "4", "--format", "tsv"]);
    assert_eq!(stdout(&o), "n\tcount\n1\t1\n2\t2\n3\t4\n4\t9\n");
    let o = boolinv(&["table", "f", "--max-n", "4", "--method", "gf"]);
    let rows = json(&o)["rows"].as_array().unwrap().clone();
    assert!(rows.contains(&serde_json::json!({"n": 4, "l": 2, "a": 2, "count": 1})));
    for method in ["brute", "recurrence", "gf"] {
        let o = boolinv(&[
            "table", "g", "--max-n", "7", "--method", method, "--format", "tsv",
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(
            stdout(&o),
            stdout(&boolinv(&["table", "g", "--max-n", "7", "--format", "tsv"]))
        );
    }
    let o = boolinv(&[
        "table", "h", "--max-n", "10", "--method", "verify", "--jobs", "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], true);
    let o = boolinv(&["table", "h", "--max-n", "13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn motzkin_conversion() {
    let o = boolinv(&["motzkin", "to-path", "2143", "--format", "text"]);
    assert_eq!(stdout(&o), "UDUD\n");
    let o = boolinv(&["motzkin", "from-path", "UD", "--format", "text"]);
    assert_eq!(stdout(&o), "21\n");
    let o = boolinv(&["motzkin", "from-path", "FUUFDD"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("step 4"));
    let v = json(&boolinv(&["motzkin", "from-path", "UUDUDUDDF"]));
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["rank"], 7);
}

#[test]
fn ideal_dot() {
    let o = boolinv(&["ideal", "321"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("// B(321): 4 elements, rank 2, Boolean lattice: yes\n"));
    assert_eq!(text.matches("[label=").count(), 4);
    assert_eq!(text.matches(" -> ").count(), 4);
    let o = boolinv(&["ideal", "4321"]);
    assert!(stdout(&o).contains("Boolean lattice: no"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.dot");
    let o = boolinv(&["ideal", "3412", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&boolinv(&["ideal", "3412"])));
    let bad = dir.path().join("missing").join("b.dot");
    assert_eq!(
        boolinv(&["ideal", "21", "-o", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enumerate_and_shards() {
    let o = boolinv(&[
        "enumerate",
        "--n",
        "4",
        "--boolean-only",
        "--format",
        "text",
    ]);
    assert_eq!(stdout(&o).lines().count(), 9);
    let whole = stdout(&boolinv(&["enumerate", "--n", "6", "--format", "text"]));
    assert_eq!(whole.lines().count(), 76);
    let mut merged: Vec<String> = Vec::new();
    for k in 0..3 {
        let shard = format!("{k}/3");
        let part = stdout(&boolinv(&[
            "enumerate",
            "--n",
            "6",
            "--shard",
            &shard,
            "--format",
            "text",
        ]));
        merged.extend(part.lines().map(String::from));
    }
    merged.sort();
    let mut expected: Vec<String> = whole.lines().map(String::from).collect();
    expected.sort();
    assert_eq!(merged, expected);
    let o = boolinv(&["enumerate", "--n", "3", "--signed", "--format", "text"]);
    assert_eq!(stdout(&o).lines().count(), 20);
    assert_eq!(
        boolinv(&["enumerate", "--n", "3", "--shard", "3/3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn selftest_passes() {
    let o = boolinv(&["selftest", "--max-n", "7", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["check", "84725631"][..],
        &["table", "f", "--max-n", "8", "--jobs", "3"],
        &["ideal", "563412"],
        &["enumerate", "--n", "5"],
    ] {
        assert_eq!(boolinv(args).stdout, boolinv(args).stdout, "{args:?}");
    }
}
