//! The subcommands through the binary.

use std::process::{Command, Output};

fn knotadj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotadj")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn convert_round_trips() {
    let gauss = stdout(&knotadj(&["convert", "--dt", "[4,8,10,2,6]", "--to", "gauss"]));
    let back = stdout(&knotadj(&["convert", "--gauss", gauss.trim(), "--to", "dt"]));
    let again = stdout(&knotadj(&["convert", "--dt", back.trim(), "--to", "fingerprint"]));
    let first = stdout(&knotadj(&["convert", "--dt", "[4,8,10,2,6]", "--to", "fingerprint"]));
    assert_eq!(again, first);
}

#[test]
fn reports_name_knots() {
    let r = stdout(&knotadj(&["convert", "--dt", "[]"]));
    assert!(r.contains("knot unknot\n"));
    let r = stdout(&knotadj(&["convert", "--braid", "2:{1,1,1}"]));
    assert!(r.contains("knot 3_1\n"));
    let r = stdout(&knotadj(&["convert", "--dt", "[4,6,2]"]));
    assert!(r.contains("mirror_fingerprint_equal false\n"));
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(knotadj(&["convert", "--dt", "[4,6]"]).status.code(), Some(2));
    assert_eq!(knotadj(&["convert", "--braid", "3:{1,1,1}"]).status.code(), Some(2));
    assert_eq!(knotadj(&["bjset", "--knot", "nope"]).status.code(), Some(2));
    assert_eq!(knotadj(&["bjset", "--knot", "K11n91"]).status.code(), Some(2));
}

#[test]
fn tabulate_and_identify() {
    let t = stdout(&knotadj(&["tabulate", "--k", "6"]));
    assert!(t.starts_with("k=6 count=3\n"));
    let named = stdout(&knotadj(&["tabulate", "--k", "6", "--identify"]));
    let mut names: Vec<_> = named.lines().map(|l| l.split('\t').nth(1).unwrap()).collect();
    names.sort();
    assert_eq!(names, ["6_1", "6_2", "6_3"]);
}

#[test]
fn bjset_from_reference_file() {
    let dir = std::env::temp_dir().join(format!("knotadj-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let refs = dir.join("refs5.txt");
    std::fs::write(&refs, stdout(&knotadj(&["tabulate", "--k", "5"]))).unwrap();
    let r = stdout(&knotadj(&["bjset", "--knot", "5_2", "--refs", refs.to_str().unwrap()]));
    assert!(r.starts_with("knot 5_2\ncrossing_number 5\n"));
    assert!(r.contains("bj_set 2\n  unknot\n  3_1\n"));
    let enumerated = stdout(&knotadj(&["bjset", "--knot", "5_2"]));
    assert_eq!(r.lines().filter(|l| !l.starts_with("note")).collect::<Vec<_>>(), enumerated.lines().collect::<Vec<_>>());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn ubjw_small() {
    let w = stdout(&knotadj(&["ubjw", "--nmax", "6"]));
    assert!(w.contains("\n5_1\t2\n"));
    assert!(w.contains("unknot\tu=0\ts=0\tw=0\n"));
}

#[test]
fn identical_runs_give_identical_files() {
    let dir = std::env::temp_dir().join(format!("knotadj-det-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |tag: &str| {
        let (out, man) = (dir.join(format!("{tag}.out")), dir.join(format!("{tag}.manifest")));
        let o = knotadj(&[
            "--jobs", if tag == "a" { "1" } else { "3" },
            "bjset", "--knot", "8_13",
            "--out", out.to_str().unwrap(),
            "--manifest", man.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        (std::fs::read(out).unwrap(), std::fs::read(man).unwrap())
    };
    assert_eq!(run("a"), run("b"));
    std::fs::remove_dir_all(&dir).unwrap();
}
