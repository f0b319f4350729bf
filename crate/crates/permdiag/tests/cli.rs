use std::process::{Command, Output};

use permdiag::format::{
    diagram_from_json, partition_from_json, path_from_json, permutation_from_json, table_from_json,
};
use permdiag_core::diagram::rank_diagram;
use permdiag_core::enumeration::{distribution, Statistic};
use permdiag_core::{DyckPath, Partition, Permutation};
use serde_json::Value;

fn permdiag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permdiag"))
        .args(args)
        .env_remove("PERMDIAG_NMAX")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = permdiag(&full);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn map_forward() {
    let o = permdiag(&["map", "--perm", "1 4 7 2 3 8 5 6 10 9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "phi: 8 9 5 4 6 7 2 3 10 1\npartition: [7,7,4,3,3,3,1,1,1]\npath: UUUDDUUUDUDDDUUDDDUD\n"
    );
}

#[test]
fn map_inverse_and_other_inputs() {
    let o = permdiag(&["map", "--perm", "8 9 5 4 6 7 2 3 10 1"]);
    assert!(stdout(&o).starts_with("phi_inverse: 1 4 7 2 3 8 5 6 10 9\n"));
    let o = permdiag(&["map", "--perm", "1 2 3", "--inverse"]);
    assert!(stdout(&o).starts_with("phi_inverse: 1 2 3\n"));
    let o = permdiag(&["map", "--path", "UUUDDUUUDUDDDUUDDDUD"]);
    assert!(stdout(&o).contains("avoider_132: 8 9 5 4 6 7 2 3 10 1\n"));
    let o = permdiag(&["map", "--partition", "[1]", "--n", "3"]);
    assert!(stdout(&o).contains("avoider_132: 2 1 3\n"));
}

#[test]
fn count_example() {
    let o = permdiag(&[
        "count",
        "--perm",
        "4 2 8 3 6 9 7 5 1 10",
        "--pattern",
        "1 3 2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "20\n");
}

#[test]
fn verify_exit_zero() {
    let o = permdiag(&["verify", "--n-max", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() > 100);
    assert!(text
        .lines()
        .all(|l| l.starts_with("IDENT ") && l.ends_with(" PASS")));
    assert!(!text.contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["map", "--perm", "2 2 1"],
        vec!["map", "--perm", "3 2 1 5 4"],
        vec!["map", "--path", "UDDU"],
        vec!["map", "--partition", "[3,1]", "--n", "3"],
        vec!["map", "--perm", "1 2", "--path", "UD"],
        vec![
            "check",
            "--perm",
            "1 3 2",
            "--pattern",
            "1 2 3",
            "--via",
            "diagram",
        ],
        vec![
            "check",
            "--perm",
            "3 2 1",
            "--pattern",
            "2 4 1 3",
            "--via",
            "diagram",
        ],
        vec!["table", "--formula", "fibonacci", "--n", "3"],
        vec!["generate", "--n", "12"],
        vec!["nonsense"],
    ] {
        let o = permdiag(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(permdiag(&["--help"]).status.code(), Some(0));
}

#[test]
fn nmax_env_overrides_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_permdiag"))
        .args(["generate", "--n", "4"])
        .env("PERMDIAG_NMAX", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = permdiag(&["generate", "--n", "4", "--avoid", "1 3 2"]);
    assert_eq!(stdout(&o).lines().count(), 14);
}

#[test]
fn check_agrees_both_ways() {
    let p = "8 9 5 4 6 7 2 3 10 1";
    for (pat, want) in [
        ("6 5 4 3 2 1", "avoids"),
        ("1 2 3 4 5", "avoids"),
        ("2 1 3 4 5", "contains"),
        ("2 3 4 5 6 1", "avoids"),
        ("2 3 4 5 1", "contains"),
    ] {
        for via in ["diagram", "bruteforce"] {
            let o = permdiag(&["check", "--perm", p, "--pattern", pat, "--via", via]);
            assert_eq!(stdout(&o), format!("{want}\n"), "{pat} via {via}");
        }
    }
}

#[test]
fn tables() {
    let o = permdiag(&["table", "--stat", "des", "--n", "4"]);
    assert_eq!(stdout(&o), "0 1\n1 6\n2 6\n3 1\ntotal 14\n");
    let o = permdiag(&["table", "--stat", "returns", "--n", "4"]);
    assert_eq!(stdout(&o), "1 5\n2 5\n3 3\n4 1\ntotal 14\n");
    let o = permdiag(&["table", "--formula", "rank_count", "--n", "10", "--k", "3"]);
    assert_eq!(stdout(&o), "3 5625\n");
    let o = permdiag(&["table", "--formula", "catalan", "--n", "10"]);
    assert_eq!(stdout(&o), "10 16796\n");
}

#[test]
fn diagram_text() {
    let o = permdiag(&["diagram", "--perm", "1 3 2"]);
    assert_eq!(
        stdout(&o),
        "o..\n.#o\n.o.\ncells: 1\nessential: (2,2)\nnot dominant, witness (2,2)\n"
    );
    let o = permdiag(&["diagram", "--perm", "4 2 8 3 6 9 7 5 1 10", "--ranks"]);
    let text = stdout(&o);
    assert_eq!(text.lines().nth(5).unwrap().chars().nth(6), Some('4'));
    assert!(text.ends_with("count_132: 20\n"));
}

#[test]
fn json_map_round_trips() {
    let v = json(&["map", "--perm", "1 4 7 2 3 8 5 6 10 9"]);
    let p321 = permutation_from_json(&v["avoider_321"]).unwrap();
    let p132 = permutation_from_json(&v["avoider_132"]).unwrap();
    assert_eq!(p321, "1 4 7 2 3 8 5 6 10 9".parse::<Permutation>().unwrap());
    assert_eq!(p132, "8 9 5 4 6 7 2 3 10 1".parse::<Permutation>().unwrap());
    let lam = partition_from_json(&v["partition"]).unwrap();
    assert_eq!(lam, "[7,7,4,3,3,3,1,1,1]".parse::<Partition>().unwrap());
    let path = path_from_json(&v["path"]).unwrap();
    assert_eq!(path, "UUUDDUUUDUDDDUUDDDUD".parse::<DyckPath>().unwrap());
    assert_eq!(v["path"]["returns"], 2);
}

#[test]
fn json_diagram_round_trips() {
    for perm in ["4 2 8 3 6 9 7 5 1 10", "8 9 5 4 6 7 2 3 10 1", "1", "1 3 2"] {
        let v = json(&["diagram", "--perm", perm]);
        let p = permutation_from_json(&v["perm"]).unwrap();
        let back = diagram_from_json(&v).unwrap();
        assert!(back.matches(&rank_diagram(&p)), "{perm}");
    }
}

#[test]
fn json_table_and_generate_round_trip() {
    let v = json(&["table", "--stat", "exc", "--n", "5", "--avoid", "3 2 1"]);
    let t = table_from_json(&v).unwrap();
    let pats = ["3 2 1".parse().unwrap()];
    assert_eq!(t, distribution(5, &pats, Statistic::Exc).unwrap());
    let v = json(&[
        "generate", "--n", "4", "--avoid", "1 3 2", "--avoid", "4 3 2 1",
    ]);
    let list: Vec<Permutation> = v["permutations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| permutation_from_json(x).unwrap())
        .collect();
    assert_eq!(list.len(), v["count"].as_u64().unwrap() as usize);
    assert_eq!(list.len(), 13);
}

#[test]
fn json_verify_and_count() {
    let v = json(&["verify", "--n-max", "5"]);
    assert_eq!(v["passed"], true);
    assert!(v["identities"]
        .as_array()
        .unwrap()
        .iter()
        .all(|o| o["pass"] == true));
    let v = json(&[
        "count",
        "--perm",
        "4 2 8 3 6 9 7 5 1 10",
        "--pattern",
        "2 1",
    ]);
    assert_eq!(v["occurrences"], 18);
    let v = json(&["table", "--formula", "narayana", "--n", "4"]);
    assert_eq!(v["values"]["2"], "6");
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = permdiag::run(
        ["permdiag", "count", "--perm", "2 3 1", "--pattern", "1 2"],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    assert_eq!(out, b"1\n");
}
