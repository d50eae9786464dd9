use std::io::Write;
use std::process::{Command, Output};

fn infbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infbraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = infbraid(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn code(args: &[&str]) -> i32 {
    infbraid(args).status.code().expect("exited normally")
}

#[test]
fn documented_examples() {
    assert_eq!(
        stdout(&["comb", "--strands", "3", "s1 s1"]),
        "k1 =\nk2 = A[1,2]\nk3 ="
    );
    assert_eq!(stdout(&["wild", "--depth", "4"]), "A[1,2] A[2,3] A[3,4]");
    assert_eq!(
        stdout(&["dist", "--perm", "1->2 2->1", "id", "--precision", "10"]),
        "0.75"
    );
}

#[test]
fn permutation_verbs() {
    assert_eq!(
        stdout(&["perm-nf", "--depth", "3", "perm: 1->2 2->1"]),
        "blocks: m1=2 m2=2 m3=3"
    );
    assert_eq!(
        stdout(&["perm-nf", "--depth", "3", "--perm", "1->2 2->3 3->1"]),
        "blocks: m1=3 m2=2 m3=3"
    );
    assert_eq!(stdout(&["section", "--depth", "2", "1->2 2->1"]), "s1");
    assert_eq!(stdout(&["section", "--depth", "4", "id"]), "");
    assert_eq!(
        stdout(&[
            "dist",
            "--perm",
            "id",
            "--perm",
            "1->2 2->3 3->1",
            "--precision",
            "10"
        ]),
        "0.875"
    );
}

#[test]
fn finite_verbs() {
    assert_eq!(stdout(&["eq", "s1 s2 s1", "s2 s1 s2"]), "true");
    assert_eq!(stdout(&["eq", "A[1,3] A[2,3]", "A[2,3] A[1,3]"]), "false");
    assert_eq!(stdout(&["mul", "s1 s2", "s2^-1 s1"]), "s1 s1");
    assert_eq!(stdout(&["inv", "s1 s2^-1"]), "s2 s1^-1");
    assert_eq!(
        stdout(&["truncate", "--depth", "2", "s1 s1 s2 s2"]),
        "A[1,2]"
    );
}

#[test]
fn comb_recombine_round_trip() {
    let word = "s1 s2 s1 s2 s1 s2";
    let combed = stdout(&["comb", "--strands", "3", word]);
    let joined = combed.replace('\n', ";");
    let band = stdout(&["recombine", &joined]);
    assert_eq!(stdout(&["eq", &band, word]), "true");
}

#[test]
fn stream_round_trip() {
    let prefix = stdout(&[
        "mul",
        "--depth",
        "4",
        "k1 =; k2 = A[1,2]",
        "k1 =; k2 =; k3 = A[2,3]",
    ]);
    assert!(prefix.starts_with("depth=4\n"));
    let back = stdout(&["mul", "--depth", "4", &prefix, "k1 ="]);
    assert_eq!(back, prefix);
    assert_eq!(
        stdout(&["eq", "--depth", "4", &prefix, "A[1,2] A[2,3]"]),
        "true (up to depth 4)"
    );
    let inv = stdout(&["inv", "--depth", "4", &prefix]);
    let one = stdout(&["mul", "--depth", "4", &inv, &prefix]);
    assert_eq!(
        stdout(&["eq", "--depth", "4", &one, "k1 ="]),
        "true (up to depth 4)"
    );
}

#[test]
fn stream_distance_and_convergence() {
    assert_eq!(
        stdout(&["dist", "--depth", "5", "A[1,2]", "A[1,2] A[2,3]"]),
        "0.125"
    );
    assert_eq!(
        stdout(&["dist", "--depth", "3", "A[1,2]", "A[1,2] A[3,4]"]),
        "indistinguishable at depth 3"
    );
    assert_eq!(
        stdout(&["converge", "--depth", "3", "s1 s1", "s2 s2", "s3 s3", "s4 s4"]),
        "3"
    );
    assert_eq!(
        stdout(&["converge", "--depth", "1", "s1", "s1"]),
        "not found"
    );
}

#[test]
fn inputs_from_files() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "strands=3\ns1 s1 s2 s2").unwrap();
    let arg = format!("@{}", f.path().display());
    assert_eq!(stdout(&["comb", &arg]), "k1 =\nk2 = A[1,2]\nk3 = A[2,3]");
    assert_eq!(code(&["comb", "@/nonexistent/input"]), 1);
}

#[test]
fn exit_codes_for_malformed_inputs() {
    // parse errors
    for args in [
        &["comb", "s1 x2"][..],
        &["comb", "s0"],
        &["eq", "A[1 2]", "A[1,2]"],
        &["dist", "--perm", "1=>2", "id", "--precision", "4"],
        &["perm-nf", "--depth", "2", "1->x"],
        &["frobnicate"],
        &["wild", "--depth", "four"],
    ] {
        assert_eq!(code(args), 2, "{args:?}");
    }
    // contract errors
    for args in [
        &["comb", "s1"][..],
        &["comb", "--strands", "2", "s2"],
        &["wild"],
        &["wild", "--depth", "0"],
        &["dist", "--perm", "1->2 2->1", "id"],
        &["dist", "--perm", "1->2 2->2", "id", "--precision", "3"],
        &["eq", "s1"],
        &["inv", "k1 =; k2 = A[1,2]"],
        &["section", "--depth", "3"],
        &["recombine", "k1 =; k2 = A[1,3]"],
    ] {
        assert_eq!(code(args), 1, "{args:?}");
    }
}
