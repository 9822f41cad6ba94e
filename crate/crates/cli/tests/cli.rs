use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yangian")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn schemes_counts_and_empty_set() {
    let o = run(&["schemes", "--lambda", "2,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("8 schemes\n"));
    assert_eq!(stdout(&o).lines().count(), 9);

    let o = run(&["schemes", "--lambda", "1,0"]);
    assert!(stdout(&o).starts_with("2 schemes\n"));

    let o = run(&["schemes", "--lambda", "1,1", "--mu", "3", "--M", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "empty\n");
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(run(&["schemes", "--lambda", "2,x"]).status.code(), Some(2));
    assert_eq!(run(&["schemes", "--lambda", "1,0", "--mu", "1", "--M", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--spec", "no-such-module"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--spec", "c2", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--zeros", "m=1:0"]).status.code(), Some(2));
}

#[test]
fn build_dumps_families_and_refuses_integral_shifts() {
    let o = run(&["build", "--spec", "c2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("dim 2\n"));
    for name in ["a1", "b1", "c1", "d1", "nodes"] {
        assert!(text.lines().any(|l| l == name), "{name}");
    }

    let o = run(&["build", "--lambda", "3,1,0", "--mu", "2", "--h", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim 4\n"));

    let o = run(&["build", "--spec", &fixture("c2x2_equal.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("differing by an integer"));
}

#[test]
fn verify_passes_and_catches_corruption() {
    let o = run(&["verify", "--spec", &fixture("c2x2_generic.json"), "--suite", "rtt", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));

    let o = run(&["verify", "--spec", "adjoint-n3", "--suite", "tau", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("suite twists"));

    let o = run(&["verify", "--spec", "c2xc2", "--suite", "rtt", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert!(stdout(&o).contains("at u = "));
}

#[test]
fn crossval_passes_and_catches_corruption() {
    for name in ["c2xc2", "pinned-n2", "adjoint-n3"] {
        let o = run(&["crossval", "--spec", name]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
    }
    let o = run(&["crossval", "--spec", "c2xc2", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classify_verdicts() {
    let o = run(&["classify", "--zeros", "m=1:0,5", "--N", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict: tame\n"));
    assert!(text.contains(r#"factorization: [{"h":"5","#));

    let o = run(&["classify", "--zeros", "m=1:0,0", "--N", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: not tame\nwitness: z[1,1] - z[1,2] = 0\n"));

    let o = run(&["classify", "--spec", &fixture("c2x2_equal.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict: not tame"));
    assert!(text.contains("semisimple: false"));
    assert!(text.contains("PASS tameness and semisimplicity agree"));
}

#[test]
fn drinfeld_of_adjoint() {
    let o = run(&["drinfeld", "--spec", "adjoint-n3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("P1 = u + 1\nP2 = u - 1\n"));
}

#[test]
fn reports_are_deterministic_and_can_be_written_to_a_file() {
    let args = ["verify", "--spec", "pinned-n2", "--suite", "rtt,minors", "--seed", "9"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let dir = std::env::temp_dir().join(format!("yangian-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let o = run(&["classify", "--zeros", "m=1:0,5", "--N", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("verdict: tame"));
    std::fs::remove_dir_all(&dir).unwrap();
}
