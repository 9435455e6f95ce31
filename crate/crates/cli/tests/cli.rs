use std::process::{Command, Output};

fn stingray(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stingray"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = stingray(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    stingray(args).status.code().unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.push("--json");
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn abacus_verbs() {
    assert_eq!(stdout(&["core", "-e", "3", "4,3,2,2"]), "2\n");
    assert_eq!(stdout(&["weight", "-e", "3", "4,3,2,2"]), "3\n");
    assert_eq!(stdout(&["quotient", "-e", "3", "4,3,2,2"]), "(1|2|-)\n");
    assert_eq!(stdout(&["core", "-e", "3", "-r", "6", "4,3,2,2"]), "2\n");
    assert_eq!(stdout(&["core", "-e", "2", "-"]), "-\n");
}

#[test]
fn weight_verbs() {
    assert_eq!(stdout(&["omega", "4,3,2,2"]), "[2,2,1]\n");
    assert_eq!(stdout(&["shi", "-e", "3", "2,2"]), "{(1,2):0, (1,3):1, (2,3):0}\n");
}

#[test]
fn counts() {
    assert_eq!(stdout(&["count", "-r", "3", "-e", "8", "-w", "0"]), "36\n");
    assert_eq!(stdout(&["count", "-r", "3", "-e", "8", "-w", "3"]), "297\n");
    let listed = stdout(&["enumerate", "-r", "3", "-e", "8", "-w", "3"]);
    assert_eq!(listed.lines().count(), 297);
    assert_eq!(listed, stdout(&["enumerate", "-r", "3", "-e", "8", "-w", "3", "--parallel"]));
}

#[test]
fn vertices_and_pairs() {
    assert_eq!(
        stdout(&["vertices", "-r", "3", "-e", "8", "-w", "3"]),
        "boundary: [16,16] [32,8]\ninterior: [8,8] [8,16] [16,8] [24,8]\n"
    );
    let pairs = stdout(&["pairs", "-r", "3", "-e", "8", "-w", "3"]);
    assert_eq!(pairs, "bad [16,8] [16,16]\n");
    let rays = stdout(&["patterns", "-r", "3", "-e", "8", "-w", "3"]);
    assert!(rays.starts_with("stingray [16,8] [16,16]"));
}

#[test]
fn alcove_verbs() {
    assert_eq!(stdout(&["act", "--label", "4,3,3", "--gen", "0"]), "4,3,3\n");
    assert_eq!(stdout(&["act", "--label", "2,0,0", "--gen", "0"]), "1,0,1\n");
    assert_eq!(stdout(&["act", "--label", "2,1,0", "--gen", "1"]), "1,2,0\n");
    assert_eq!(code(&["act", "--label", "0,1,1", "--gen", "0"]), 3);
    assert_eq!(code(&["act", "--label", "0,1,1", "--gen", "3"]), 3);
    let listed = stdout(&["alcoves", "-r", "3", "-w", "10", "-e", "10"]);
    assert_eq!(listed.lines().count(), 66);
    assert!(listed.contains("4,3,3 {(1,2):0, (1,3):0, (2,3):0} *\n"));
}

#[test]
fn runner_insertion() {
    assert_eq!(stdout(&["insert-runner", "-e", "3", "-r", "3", "-k", "0", "9,6,1"]), "13,9,2\n");
    assert_eq!(stdout(&["insert-runner", "-e", "3", "-r", "3", "-k", "2", "9,6,1"]), "13,8,1\n");
    let pair = stdout(&["insert-runner", "-e", "3", "-r", "4", "-k", "2", "4,3,2,2", "--mu", "6,3,1,1"]);
    assert!(pair.contains("PASS shi-stability"));
    assert_eq!(code(&["insert-runner", "-e", "3", "-r", "3", "-k", "0", "3", "--mu", "2"]), 3);
    assert_eq!(code(&["insert-runner", "-e", "3", "-r", "3", "-k", "3", "2,1"]), 3);
    assert_eq!(code(&["insert-runner", "-e", "3", "-r", "2", "-k", "0", "1,1,1"]), 3);
    assert_eq!(code(&["insert-runner", "-e", "3", "-k", "0", "2,1"]), 2);
}

#[test]
fn verification_exit_codes() {
    let out = stingray(&["verify", "all", "-r", "3", "-e", "8", "--wmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with("failed\n"));
    assert!(text.contains(", 0 failed"));
    assert_eq!(code(&["verify", "regular", "-r", "5", "-e", "6", "-w", "15", "--parallel"]), 1);
    assert_eq!(code(&["verify", "tails", "-r", "3", "-e", "3"]), 3);
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(code(&["core", "-e", "3", "2,3"]), 2);
    assert_eq!(code(&["core", "-e", "3", "4,x"]), 2);
    assert_eq!(code(&["count", "-r", "3", "-e", "8"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["count", "-r", "3", "-e", "4", "-w", "0"]), 0);
    assert_eq!(code(&["count", "-r", "2", "-e", "4", "-w", "0"]), 3);
    assert_eq!(code(&["plot", "-r", "4", "-e", "6", "-w", "0"]), 3);
    let out = stingray(&["core", "-e", "3", "4,x"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 2"));
}

#[test]
fn json_documents_carry_a_schema() {
    let cases: [&[&str]; 12] = [
        &["core", "-e", "3", "4,3,2,2"],
        &["weight", "-e", "3", "4,3,2,2"],
        &["quotient", "-e", "3", "4,3,2,2"],
        &["omega", "4,3,2,2"],
        &["shi", "-e", "8", "5,1"],
        &["count", "-r", "3", "-e", "8", "-w", "1"],
        &["enumerate", "-r", "3", "-e", "8", "-w", "1"],
        &["vertices", "-r", "3", "-e", "8", "-w", "3"],
        &["pairs", "-r", "3", "-e", "8", "-w", "3"],
        &["patterns", "-r", "3", "-e", "8", "-w", "3"],
        &["alcoves", "-r", "3", "-w", "2"],
        &["act", "--label", "2,0,0", "--gen", "0"],
    ];
    for args in cases {
        let doc = json(args);
        assert_eq!(doc["schema"], format!("stingray/{}/v1", args[0]), "{args:?}");
    }
    let doc = json(&["enumerate", "-r", "3", "-e", "8", "-w", "1"]);
    assert_eq!(doc["count"], 92);
    assert_eq!(doc["weights"].as_array().unwrap().len(), 92);
    let doc = json(&["verify", "walls", "-r", "3", "-e", "8", "--wmax", "2"]);
    assert_eq!(doc["schema"], "stingray/verify/v1");
    assert_eq!(doc["passed"], true);
    let doc = json(&["insert-runner", "-e", "3", "-r", "3", "-k", "1", "2,1"]);
    assert_eq!(doc["result"], serde_json::json!([4, 2]));
}

#[test]
fn plot_is_deterministic_and_writes_files() {
    let dir = std::env::temp_dir().join(format!("stingray-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig.svg");
    let path_str = path.to_str().unwrap();
    assert_eq!(code(&["plot", "-r", "3", "-e", "8", "-w", "2", "--out", path_str]), 0);
    let written = std::fs::read_to_string(&path).unwrap();
    let printed = stdout(&["plot", "-r", "3", "-e", "8", "-w", "2"]);
    assert_eq!(written, printed);
    let count: usize = stdout(&["count", "-r", "3", "-e", "8", "-w", "2"]).trim().parse().unwrap();
    assert_eq!(written.matches("<circle").count(), count);
    let labelled = stdout(&["plot", "-r", "3", "-e", "8", "-w", "2", "--labels", "--highlight", "pairs"]);
    assert!(labelled.contains("class=\"label\""));
    assert_eq!(code(&["plot", "-r", "3", "-e", "8", "-w", "2", "--highlight", "nope"]), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
