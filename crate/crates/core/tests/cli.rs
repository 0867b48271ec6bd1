use std::process::{Command, Output};

use tight_brieskorn::census::CensusRecord;
use tight_brieskorn::open_book::parse_book;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tight-brieskorn")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["census", "--n", "5"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "census", "--max-n", "8"]).status.code(), Some(0));
    assert_eq!(run(&["census", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["openbook", "--i", "0", "--l", "0", "--r", "0", "--with-surgery", "--emit", "monodromy"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["census", "--n", "9", "--format", "json"][..],
        &["invariants", "--n", "7"],
        &["verify", "--max-n", "10"],
        &["openbook", "--i", "1", "--l", "2", "--r", "1", "--with-surgery", "--emit", "serialize"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn census_json_round_trips() {
    let o = run(&["census", "--n", "6", "--format", "json"]);
    let recs: Vec<CensusRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(recs.len(), 15);
    assert_eq!(serde_json::to_string_pretty(&recs).unwrap().trim(), stdout(&o).trim());
}

#[test]
fn serialized_books_parse() {
    let o = run(&["openbook", "--i", "2", "--l", "1", "--r", "3", "--with-surgery", "--emit", "serialize"]);
    let b = parse_book(&stdout(&o)).unwrap();
    assert_eq!(b.page.boundary_count, 5 + 8 + 4);
    assert!(b.page.has_curve("L"));
}

#[test]
fn homology_of_the_family() {
    let o = run(&["homology", "--builtin", "yn", "--n", "4"]);
    assert!(stdout(&o).ends_with("H_1 = 0\n"));
    let o = run(&["homology", "--builtin", "yinf"]);
    assert!(stdout(&o).ends_with("H_1 = Z\n"), "{}", stdout(&o));
}
