use assert_cmd::Command;

fn superklr(args: &[&str]) -> (i32, String, String) {
    let out = Command::cargo_bin("superklr").unwrap().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap().trim().to_string(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn form_value() {
    let (code, out, _) = superklr(&["form", "--m", "2", "--n", "2", "--a", "2,1,3,2", "--b", "2,1,2,3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "-q/(1-q^2)");
}

#[test]
fn dimension_of_weight_space() {
    let (code, out, _) = superklr(&["dim-fnu", "--m", "2", "--n", "1", "--nu", "1:1,2:1"]);
    assert_eq!((code, out.as_str()), (0, "2"));
}

#[test]
fn dg_analysis_summary() {
    let (code, out, _) = superklr(&["dg-analyze", "--from-klr", "--m", "2", "--nu", "2:2"]);
    assert_eq!(code, 0);
    assert_eq!(out, r#"{"m_I":0,"m_II":1,"k0_rank":0}"#);
    let (_, out, _) = superklr(&["dg-analyze", "--example", "ground"]);
    assert_eq!(out, r#"{"m_I":1,"m_II":0,"k0_rank":1}"#);
}

#[test]
fn dg_json_round_trip() {
    let dir = std::env::temp_dir().join(format!("superklr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (_, dump, _) = superklr(&["dg-analyze", "--example", "lambda", "--dump"]);
    let path = dir.join("lambda.json");
    std::fs::write(&path, dump).unwrap();
    let (code, out, _) = superklr(&["dg-analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, r#"{"m_I":0,"m_II":1,"k0_rank":0}"#);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn radical_membership_sets_exit_code() {
    assert_eq!(superklr(&["radical-check", "--m", "1", "--n", "2", "--term", "1@1,1"]).0, 0);
    let (code, out, _) = superklr(&["radical-check", "--m", "1", "--n", "2", "--term", "1@1,2"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("not in radical"));
    assert_eq!(superklr(&["radical-check", "--m", "2", "--n", "1", "--max-size", "4"]).0, 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(superklr(&["form", "--m", "2", "--n", "1", "--a", "9", "--b", "1"]).0, 2);
    assert_eq!(superklr(&["dim-fnu", "--m", "2", "--nu", "1:x"]).0, 2);
    assert_eq!(superklr(&["dg-analyze", "--from-klr", "--m", "2", "--nu", "1:1"]).0, 2);
    assert_eq!(superklr(&["verify", "--criterion", "14"]).0, 2);
    assert_eq!(superklr(&["nonsense"]).0, 2);
}

#[test]
fn rewriting_and_gdim() {
    let (_, out, _) = superklr(&["klr-rewrite", "--m", "2", "--source", "2,2", "--word", "psi1 psi1"]);
    assert_eq!(out, "0");
    let (_, out, _) = superklr(&["klr-gdim", "--m", "2", "--i", "1,2", "--j", "2,1"]);
    assert_eq!(out, "e(2,1): (q/(1-q^2))");
}

#[test]
fn seeded_runs_are_deterministic() {
    let args = ["klr-verify", "--m", "2", "--samples", "10", "--trials", "20", "--seed", "7", "--format", "json"];
    let a = superklr(&args).1;
    assert_eq!(a, superklr(&args).1);
    assert!(a.contains(r#""passed":true"#));
}

#[test]
fn verification_failure_exits_one() {
    let (code, out, _) = superklr(&["verify", "--criterion", "13"]);
    assert_eq!(code, 1);
    assert!(out.contains("first counterexample"));
}
