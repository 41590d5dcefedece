use std::process::{Command, Output};

use serde_json::Value;

fn apolarity(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apolarity"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn hilbert_function_of_fermat_cubic() {
    let out = apolarity(&["hilbert", "--poly", "x0^3+x1^3+x2^3"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["command"], "hilbert");
    assert_eq!(doc["field"], "q");
    assert_eq!(
        doc["results"][0]["hilbert"],
        serde_json::json!([1, 3, 3, 1])
    );
}

#[test]
fn nd_bound_and_generic_rank() {
    let out = apolarity(&["nd-bound", "--n", "8", "--d", "3"]);
    assert_eq!(json(&out)["results"][0]["nd_bound"], 18);
    let out = apolarity(&["generic-rank", "--n", "4", "--d", "3"]);
    let r = &json(&out)["results"][0];
    assert_eq!(r["generic_rank"], 8);
    assert_eq!(r["exceptional"], true);
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(
        apolarity(&["hilbert", "--poly", "x0 +"]).status.code(),
        Some(2)
    );
    assert_eq!(apolarity(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        apolarity(&["annih", "--poly", "x0^2"]).status.code(),
        Some(2)
    );
    assert_eq!(apolarity(&["hilbert"]).status.code(), Some(2));
    assert_eq!(
        apolarity(&["hilbert", "--field", "p:10", "--poly", "x0"])
            .status
            .code(),
        Some(2)
    );
    // domain errors
    assert_eq!(
        apolarity(&["hilbert", "--poly", "x0^2 + x1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        apolarity(&["annih", "--k", "9", "--poly", "x0^2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        apolarity(&["gamma", "--poly", "x0^3", "--l", "x0^2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        apolarity(&["hilbert", "--field", "p:2", "--poly", "x0^3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        apolarity(&["decompose", "--poly", "x0^3", "--points", "x0, 2*x0"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn syntax_error_reports_position() {
    let out = apolarity(&["hilbert", "--poly", "x0 +"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("offset 4"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn json_is_byte_identical() {
    for args in [
        &["cactus-bound", "--poly", "x0*x1*x2 + x1^3", "--seed", "3"][..],
        &["random", "--n", "3", "--d", "4", "--seed", "11"][..],
        &[
            "secant-dim",
            "--n",
            "2",
            "--d",
            "4",
            "--r",
            "5",
            "--seed",
            "1",
        ][..],
    ] {
        let a = apolarity(args);
        let b = apolarity(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn random_then_hilbert() {
    let out = apolarity(&[
        "random", "--n", "2", "--d", "3", "--seed", "5", "--field", "p:101",
    ]);
    let poly = json(&out)["results"][0]["poly"]
        .as_str()
        .unwrap()
        .to_string();
    let out = apolarity(&["hilbert", "--field", "p:101", "--poly", &poly]);
    assert!(out.status.success());
    assert_eq!(json(&out)["results"][0]["symmetric"], true);
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join(format!("apolarity-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("forms.txt");
    std::fs::write(&path, "# two cubics\nx0^3 + x1^3\n\nx0*x1*x2  # monomial\n").unwrap();
    let out = apolarity(&["ldiff", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    let results = json(&out)["results"].as_array().unwrap().clone();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["ldiff"], 2);
    assert_eq!(results[1]["ldiff"], 3);
    std::fs::write(&path, "x0^3\nx1 *\n").unwrap();
    let out = apolarity(&["ldiff", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn text_output() {
    let out = apolarity(&["--text", "annih", "--k", "1", "--poly", "x0^2"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("annih (field q, seed 0)"), "{s}");
    assert!(s.contains("dim: 0"), "{s}");
}

#[test]
fn verify_paper_suite() {
    let out = apolarity(&["verify-paper", "--text", "--n-max", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("bound 18 < generic rank 19"), "{text}");
    assert!(text.contains("n <= 3"));
    let failing: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    // the span of y_i y_j, y0^2 - y_i^2 is not F^perp_2 under differentiation
    assert_eq!(failing.len(), 5, "{text}");
    assert!(failing.iter().all(|l| l.contains("y0^2 - y_i^2")));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with("NOT REPRODUCED"))
            .count(),
        3
    );
}
