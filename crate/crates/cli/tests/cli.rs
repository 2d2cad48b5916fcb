use std::fs;
use std::process::{Command, Output};

fn heisplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heisplit"))
        .args(args)
        .env_remove("HEISPLIT_OUT_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn split_both() {
    let o = heisplit(&["split", "--both", "-p", "13", "-l", "2", "-a", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "p,ell,a,e_alpha,e_beta,a_ell,predicted,oracle_K,oracle_R,agree,seed"
    );
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(
        &fields[..10],
        ["13", "2", "4", "0", "0", "1", "8", "4", "8", "true"]
    );
}

#[test]
fn split_oracle_non_split_prime() {
    let o = heisplit(&[
        "split", "--oracle", "-p", "7", "-l", "3", "-a", "6", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["oracle_K"], 3);
    assert_eq!(v[0]["oracle_R"], 9);
    assert_eq!(v[0]["k_degrees"], "3 3 3");
}

#[test]
fn verify_31_3() {
    let o = heisplit(&["verify", "-p", "31", "-l", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("29 points, 29 agree, 0 failures"));
    assert_eq!(stdout(&o).lines().count(), 30);
}

#[test]
fn apoly_5_2() {
    let o = heisplit(&["apoly", "-p", "5", "-l", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["coeffs"], serde_json::json!([1, 1]));
}

#[test]
fn symbol_and_avalue() {
    let o = heisplit(&["symbol", "-p", "7", "-l", "3", "-a", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("7,3,2,"));
    let o = heisplit(&[
        "avalue", "-p", "31", "-l", "3", "-a", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["a_ell"], v[0]["root_average"]);
}

#[test]
fn stats_bins() {
    let o = heisplit(&["stats", "-p", "13", "-l", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let bins = v.as_array().unwrap();
    assert_eq!(bins.len(), 5);
    let total: u64 = bins.iter().map(|b| b["observed"].as_u64().unwrap()).sum();
    assert_eq!(total, 10);
}

#[test]
fn detlemma_and_disc() {
    let o = heisplit(&[
        "detlemma", "-p", "11,31", "-l", "5", "-n", "2", "--trials", "20",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = heisplit(&[
        "disc", "-p", "13", "-l", "2", "-a", "4", "--a2", "10", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["passed"], true);
    let o = heisplit(&["disc", "-p", "11", "-l", "5", "-a", "2", "--a2", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(
        heisplit(&["split", "-p", "13", "-a", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        heisplit(&["scan", "-p", "13", "-l", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        heisplit(&["frob", "-p", "13", "-l", "2", "-a", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        heisplit(&["scan", "-p", "x", "-l", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        heisplit(&["scan", "-p", "13", "-l", "2", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn invalid_pairs_are_skipped() {
    let o = heisplit(&["scan", "-p", "7,11,13", "-l", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("skipping p=11"));
    let ps: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().to_string())
        .collect();
    assert!(ps.iter().all(|p| p == "7" || p == "13"));
    assert_eq!(ps.len(), 5 + 11);
}

#[test]
fn parallel_output_matches_serial() {
    for format in ["csv", "json"] {
        let serial = heisplit(&[
            "scan", "-p", "3..80", "-l", "3", "--jobs", "1", "--format", format,
        ]);
        let parallel = heisplit(&[
            "scan", "-p", "3..80", "-l", "3", "--jobs", "4", "--format", format,
        ]);
        assert_eq!(serial.status.code(), Some(0));
        assert_eq!(serial.stdout, parallel.stdout);
    }
}

#[test]
fn seed_changes_only_the_seed_column() {
    let a = stdout(&heisplit(&["scan", "-p", "19", "-l", "3", "--seed", "1"]));
    let b = stdout(&heisplit(&["scan", "-p", "19", "-l", "3", "--seed", "2"]));
    let strip = |s: &str| -> Vec<String> {
        s.lines()
            .skip(1)
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
    assert_ne!(a, b);
}

#[test]
fn output_dir_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_heisplit"))
        .args(["scan", "-p", "13", "-l", "2", "-o", "sub/scan.csv"])
        .env("HEISPLIT_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(dir.path().join("sub/scan.csv")).unwrap();
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn batch_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("split.json");
    let jobs = format!(
        "# jobs\n\
         command=split p=13 l=2 a=4 both=true format=json output={}\n\
         command=scan p=13 l=5\n\
         command=symbol p=7 l=3 a=2\n",
        out.display()
    );
    let file = dir.path().join("jobs.txt");
    fs::write(&file, jobs).unwrap();
    let o = heisplit(&["batch", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("job 3"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v[0]["agree"], true);
    assert!(stdout(&o).starts_with("p,ell,a,symbol"));
}
