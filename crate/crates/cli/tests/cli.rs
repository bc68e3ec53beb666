use std::process::{Command, Output};

fn altrun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altrun")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn poly_f4() {
    let o = altrun(&["poly", "--family", "Fpoly", "--n", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x + 7*x^2 + 29*x^3 + 31*x^4 + 29*x^5 + 7*x^6 + x^7\n");
}

#[test]
fn poly_other_families() {
    let cases = [
        ("dpoly", "3", "x + x^3"),
        ("gammapoly", "3", "x - x^2 + 3*x^3"),
        ("eulerA", "1", "x"),
        ("eulerB", "2", "1 + 6*x + x^2"),
        ("bpoly", "2", "1 + 4*x + 3*x^2"),
        ("cpoly", "2", "x + 3*x^2"),
    ];
    for (fam, n, want) in cases {
        let o = altrun(&["poly", "--family", fam, "--n", n]);
        assert_eq!(stdout(&o).trim(), want, "{fam} {n}");
    }
}

#[test]
fn dist_examples() {
    let o = altrun(&["dist", "--class", "perm", "--stat", "altrun", "--n", "3"]);
    assert_eq!(stdout(&o), "2*x + 4*x^2\n");
    let o = altrun(&["dist", "--class", "stirling", "--stat", "fap", "--n", "2"]);
    assert_eq!(stdout(&o), "x + x^2 + x^3\n");
    let o = altrun(&["dist", "--class", "perm", "--stat", "crun,cyc", "--n", "3"]);
    assert_eq!(stdout(&o), "x*q + x^3*q + 3*x^2*q^2 + x^3*q^3\n");
    let o = altrun(&["dist", "--class", "derangement", "--stat", "crun:t", "--n", "3"]);
    assert_eq!(stdout(&o), "t + t^3\n");
}

#[test]
fn triangle_bfile_first_row() {
    let o = altrun(&["triangle", "--family", "R", "--rows", "1", "--format", "bfile"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data, ["1 1"]);
}

#[test]
fn triangle_formats() {
    let o = altrun(&["triangle", "--family", "T", "--rows", "3", "--format", "table"]);
    assert_eq!(stdout(&o).lines().last(), Some("3: 0, 1, 3, 2"));
    let o = altrun(&["triangle", "--family", "gamma", "--rows", "4", "--format", "csv"]);
    assert!(stdout(&o).contains("4,4,-15\n"));
    let o = altrun(&["triangle", "--family", "Rq", "--rows", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"][2], serde_json::json!(["0", "q", "q^2"]));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "gamma", "--max-n", "5", "--order", "4"];
    assert_eq!(altrun(&args).stdout, altrun(&args).stdout);
}

#[test]
fn verify_all_passes() {
    let o = altrun(&["verify", "--suite", "all", "--max-n", "7", "--order", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["overall"], serde_json::json!(true));
    assert_eq!(v["suite"], serde_json::json!("all"));
    let ids: Vec<String> =
        v["checks"].as_array().unwrap().iter().map(|c| c["check_id"].as_str().unwrap().to_string()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for prefix in ["grammar.", "triangles.", "enumeration.", "davidbarton.", "series.", "gamma."] {
        assert!(ids.iter().any(|i| i.starts_with(prefix)), "{prefix}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(altrun(&["nonsense"]).status.code(), Some(2));
    assert_eq!(altrun(&["triangle", "--family", "Z", "--rows", "2"]).status.code(), Some(2));
    assert_eq!(altrun(&["dist", "--class", "stirling", "--stat", "des", "--n", "2"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_altrun"))
        .args(["dist", "--class", "perm", "--stat", "altrun", "--n", "6"])
        .env("ALTRUN_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_altrun"))
        .args(["verify", "--suite", "enumeration", "--max-n", "5"])
        .env("ALTRUN_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}
