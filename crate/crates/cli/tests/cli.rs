use std::path::Path;
use std::process::{Command, Output};

fn gqlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gqlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let o = gqlab(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
}

#[test]
fn verify_grover_crosscheck() {
    let o = gqlab(&["verify", "--suite", "grover-crosscheck"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("grover-crosscheck: ok"));
    assert!(!gqlab(&["verify", "--suite", "nope"]).status.success());
}

#[test]
fn run_on_empty_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.txt");
    std::fs::write(&path, "#model=matrix\n#directed=0\n4\n0000\n0000\n0000\n0000\n").unwrap();
    let o = gqlab(&["run", "--algo", "q_connected", "--graph", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("answer=false"));
    let o = gqlab(&["run", "--algo", "q_strongly_connected_list", "--graph", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gen_then_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gadget.txt");
    let p = path.to_str().unwrap();
    let o = gqlab(&["gen", "--family", "origin-gadget", "--x", "110", "--k", "3", "--seed", "4", "--out", p]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("#model=list\n9 3\n"));
    let o = gqlab(&["run", "--algo", "classical_strongly_connected", "--graph", p]);
    assert!(stdout(&o).contains("answer=false"));
    assert!(stdout(&o).contains("truth=false"));
}

fn bench_csv(dir: &Path, name: &str) -> String {
    let cfg = dir.join(format!("{name}.cfg"));
    let out = dir.join(format!("{name}.csv"));
    std::fs::write(
        &cfg,
        format!(
            "algorithm = q_connected\nfamily = gnp\nn = 8, 16, 32\ntrials = 4\nseed = 3\noutput = {}\n",
            out.display()
        ),
    )
    .unwrap();
    let report = dir.join(format!("{name}.json"));
    let o = gqlab(&["bench", "--config", cfg.to_str().unwrap(), "--fit", "n", "--report", report.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let json = std::fs::read_to_string(report).unwrap();
    assert!(json.contains("\"slope\""));
    std::fs::read_to_string(out).unwrap()
}

#[test]
fn bench_writes_deterministic_csv() {
    let dir = tempfile::tempdir().unwrap();
    let a = bench_csv(dir.path(), "a");
    let b = bench_csv(dir.path(), "b");
    assert_eq!(a, b);
    assert!(a.starts_with("algorithm,model,family,n,k,trial,seed,queries,answer,truth,correct,ms\n"));
    assert_eq!(a.lines().count(), 13);
}

#[test]
fn bench_without_output_fails() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("s.cfg");
    std::fs::write(&cfg, "algorithm = q_connected\nfamily = gnp\nn = 8\n").unwrap();
    let o = gqlab(&["bench", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("output"));
}

#[test]
fn adversary_tables() {
    let o = gqlab(&["adversary", "--relation", "parity", "--n", "4"]);
    assert!(o.status.success());
    let line = stdout(&o).lines().nth(1).unwrap().to_string();
    let cols: Vec<&str> = line.split_whitespace().collect();
    assert_eq!(cols, ["4", "4", "4", "1", "4.000000"]);
    let o = gqlab(&["adversary", "--relation", "gadget", "--p", "3", "--k", "3"]);
    assert!(stdout(&o).contains("4.242641"));
    assert!(!gqlab(&["adversary", "--relation", "cycle", "--n", "5"]).status.success());
}
