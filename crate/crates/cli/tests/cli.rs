use std::io::Write;
use std::process::{Command, Output, Stdio};

fn schreier(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schreier")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = schreier(&all);
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn member_of_the_omega_family() {
    let o = schreier(&["member", "--family", "A:w", "--set", "{3,5,9}"]);
    assert_eq!(stdout(&o), "true");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn non_member_exits_with_one() {
    let o = schreier(&["member", "--family", "A:w", "--set", "{1,2}"]);
    assert_eq!(stdout(&o), "false");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn fundamental_sequence_of_omega_squared() {
    let o = schreier(&["fundseq", "--ordinal", "w^2", "--at", "3"]);
    assert_eq!(stdout(&o), "w*2 + 2");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(schreier(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(schreier(&["member", "--family", "A:q", "--set", "{1}"]).status.code(), Some(2));
    assert_eq!(schreier(&["member", "--family", "A:w", "--set", "{0,2}"]).status.code(), Some(2));
    assert_eq!(schreier(&["separate", "--lower", "w", "--upper", "3"]).status.code(), Some(2));
    assert_eq!(schreier(&["fundseq", "--ordinal", "w+1", "--at", "2"]).status.code(), Some(2));
}

#[test]
fn canonical_representation_as_json() {
    let j = json(&["canon", "--family", "A:w", "--set", "{2,3,4,5,6}"]);
    assert_eq!(j["blocks"], serde_json::json!([[2, 3]]));
    assert_eq!(j["tail"], serde_json::json!([4, 5, 6]));
    assert_eq!(j["type"], 1);
}

#[test]
fn closure_index_and_rank() {
    assert_eq!(stdout(&schreier(&["index", "--family-closure", "A:w"])), "w + 1");
    assert_eq!(stdout(&schreier(&["rank", "--family", "A:w", "--set", "{3}"])), "2");
}

#[test]
fn plain_and_json_enumerations_agree() {
    let args = ["enum", "--family", "B:1", "--window", "1..9"];
    let plain: Vec<String> = stdout(&schreier(&args)).lines().map(String::from).collect();
    let j = json(&args);
    let listed: Vec<String> = j["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            let v: Vec<String> = s.as_array().unwrap().iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", v.join(","))
        })
        .collect();
    assert_eq!(plain, listed);
    assert!(plain.contains(&"{3,5,9}".to_string()));
}

#[test]
fn section_with_a_ground_set() {
    let o = schreier(&["section", "--family", "A:w", "--at", "3", "--window", "1..12", "--ground", "4,6,8,10"]);
    let text = stdout(&o);
    let sets: Vec<&str> = text.lines().collect();
    assert_eq!(sets.first(), Some(&"{4,6}"));
    assert!(sets.iter().all(|s| s.matches(',').count() == 1));
}

#[test]
fn homogenize_then_verify_the_certificate() {
    let args = ["homogenize", "--family", "A:2", "--coloring", "parity-sum", "--window", "1..20", "--target", "4", "--json"];
    let o = schreier(&args);
    assert_eq!(o.status.code(), Some(0));
    let mut child = Command::new(env!("CARGO_BIN_EXE_schreier"))
        .args(["verify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&o.stdout).unwrap();
    let v = child.wait_with_output().unwrap();
    assert_eq!(stdout(&v), "accepted");

    let mut forged: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    forged["witness"] = serde_json::json!([1, 2, 5, 7]);
    let path = std::env::temp_dir().join(format!("schreier-forged-{}.json", std::process::id()));
    std::fs::write(&path, forged.to_string()).unwrap();
    let r = schreier(&["verify", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(r.status.code(), Some(1));
    assert!(stdout(&r).starts_with("rejected"));
}

#[test]
fn dichotomy_boundary_example() {
    let o = schreier(&["dichotomy", "--hereditary", "F:1", "--family", "exL", "--window", "1..14"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("branch B on"));
}

#[test]
fn transfer_drops_two_points() {
    let j = json(&["transfer", "--xi", "1", "--window", "1..16"]);
    assert_eq!(j["kind"], "Transfer");
    assert_eq!(j["witness"][0], 3);
}

#[test]
fn exhausted_windows_exit_with_one() {
    let o = schreier(&["chain", "--family", "down:A:3", "--depth", "5", "--window", "1..10"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn ordinal_arithmetic() {
    let o = schreier(&["ord", "w^2*3 + w + 2", "--compare", "w^3", "--add", "w"]);
    assert_eq!(stdout(&o), "w^2*3 + w + 2\nsuccessor\nless\nw^2*3 + w*2");
}

#[test]
fn check_runs_selected_criteria() {
    let o = schreier(&["check", "--criterion", "4", "--criterion", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.contains("PASS")));
}
