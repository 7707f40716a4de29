use std::fs;
use std::process::{Command, Output};

fn kostka(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kostka"))
        .args(args)
        .env_remove("KOSTKA_CACHE")
        .output()
        .expect("spawn kostka")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_plain_and_json() {
    let o = kostka(&["compute", "--shape", "3,2,1", "--content", "2,2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t + 2t^2 + t^3\n");
    let o = kostka(&[
        "compute",
        "--shape",
        "3,2,1",
        "--content",
        "2^2,1^2",
        "--format",
        "json",
    ]);
    assert_eq!(stdout(&o), "[[1,\"1\"],[2,\"2\"],[3,\"1\"]]\n");
}

#[test]
fn bad_partition_exits_one() {
    let o = kostka(&["compute", "--shape", "1,2", "--content", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stderr(&o).is_empty());
    let o = kostka(&["table", "--n", "three"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn cache_round_trip_and_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.cache");
    let p = path.to_str().unwrap();
    let o = kostka(&["table", "--n", "4", "--cache", p]);
    assert_eq!(o.status.code(), Some(0));
    let saved = fs::read_to_string(&path).unwrap();
    assert!(!saved.is_empty());
    assert!(saved.lines().all(|l| l.split('\t').count() == 3), "{saved}");

    let again = kostka(&["table", "--n", "4", "--cache", p]);
    assert_eq!(stdout(&again), stdout(&o));
    assert_eq!(fs::read_to_string(&path).unwrap(), saved);

    let env_path = dir.path().join("env.cache");
    let o = Command::new(env!("CARGO_BIN_EXE_kostka"))
        .args([
            "compute",
            "--shape",
            "2,1",
            "--content",
            "1^3",
            "--cache",
            p,
        ])
        .env("KOSTKA_CACHE", &env_path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(env_path.exists());
}

#[test]
fn corrupt_cache_exits_two_naming_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cache");
    fs::write(
        &path,
        "2,1\t1,1,1\t[[1,\"1\"],[2,\"5\"]]\n2\t3\t[[0,\"1\"]]\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let o = kostka(&["table", "--n", "3", "--cache", p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    fs::write(&path, "1,1\t2\t[[0,\"1\"]]\n").unwrap();
    let o = kostka(&["compute", "--shape", "2", "--content", "2", "--cache", p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("1,1; 2"), "{}", stderr(&o));

    fs::write(&path, "not a cache line\n").unwrap();
    assert_eq!(
        kostka(&["verify", "--max-n", "2", "--cache", p])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_detects_wrong_cached_value() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wrong.cache");
    fs::write(&path, "2,1\t1,1,1\t[[1,\"1\"],[2,\"5\"]]\n").unwrap();
    let o = kostka(&["verify", "--max-n", "3", "--cache", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(
        out.contains("(2,1; 1,1,1)") && out.contains("cache-entry"),
        "{out}"
    );
}

#[test]
fn verify_passes_to_six() {
    let o = kostka(&["verify", "--max-n", "6", "--threads", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 mismatches / 210 pairs\n");
}

#[test]
fn table_csv_shape() {
    let o = kostka(&["table", "--n", "5", "--format", "csv"]);
    let out = stdout(&o);
    let mut rows = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(
        rows.headers().unwrap(),
        vec!["shape", "content", "polynomial"]
    );
    let records: Vec<_> = rows.records().map(Result::unwrap).collect();
    assert_eq!(&records[0][0], "5");
    assert!(records
        .iter()
        .any(|r| &r[0] == "3,2" && &r[1] == "1,1,1,1,1" && &r[2] == "t^4 + t^5 + t^6 + t^7 + t^8"));
}
