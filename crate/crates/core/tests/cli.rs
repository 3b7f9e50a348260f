use std::path::PathBuf;
use std::process::{Command, Output};

use sun_systems::certificate::{Certificate, Kind};

fn sunsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sunsys"))
        .args(args)
        .output()
        .expect("run sunsys")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sunsys-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn generate_then_verify() {
    let out = sunsys(&["generate", "25"]);
    assert_eq!(out.status.code(), Some(0));
    let cert = Certificate::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(
        (cert.kind, cert.m, cert.blocks.len()),
        (Kind::Complete, 25, 50)
    );

    let path = scratch("k25.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let check = sunsys(&["verify", path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn verify_rejects_a_tampered_certificate() {
    let out = sunsys(&["generate", "13"]);
    let mut cert = Certificate::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    cert.blocks.pop();
    let path = scratch("k13-short.json");
    std::fs::write(&path, cert.to_json()).unwrap();
    let check = sunsys(&["verify", path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(1));
    assert!(
        String::from_utf8_lossy(&check.stdout).contains("6 missing")
            || String::from_utf8_lossy(&check.stderr).contains("6 missing")
    );
}

#[test]
fn embed_from_a_base_file_keeps_the_base() {
    let base = sunsys(&["generate", "9"]);
    let path = scratch("k9.json");
    std::fs::write(&path, &base.stdout).unwrap();
    let out = sunsys(&["embed", "9", "21", "--base", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let big = Certificate::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(big.blocks.len(), 35);
    let small = Certificate::from_json(std::str::from_utf8(&base.stdout).unwrap()).unwrap();
    for b in &small.blocks {
        let shifted = sun_systems::verify::canonical_block(&b.map(|v| v + 12));
        assert!(big.blocks.contains(&shifted));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(sunsys(&["embed", "9", "13"]).status.code(), Some(3));
    assert_eq!(sunsys(&["generate", "10"]).status.code(), Some(2));
    assert_eq!(sunsys(&["generate", "4"]).status.code(), Some(2));
    assert_eq!(
        sunsys(&["lemma", "no_such_generator", "12"]).status.code(),
        Some(2)
    );
    let missing = scratch("absent.json");
    assert_eq!(
        sunsys(&["verify", missing.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn table_lists_least_orders() {
    let out = sunsys(&["table", "40"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(
        rows,
        [
            "9  14  {0,3,4,7}",
            "12  18  {0,1,4,9}",
            "13  20  {0,3,8,11}",
            "16  24  {0,5,8,9}",
            "21  31  {0,3,4,7}",
            "24  35  {0,1,4,9}",
            "25  36  {0,3,8,11}",
            "28  41  {0,5,8,9}",
            "33  48  {0,3,4,7}",
            "36  52  {0,1,4,9}",
            "37  53  {0,3,8,11}",
            "40  57  {0,5,8,9}",
        ]
    );
}

#[test]
fn lemma_prints_a_checkable_certificate() {
    let out = sunsys(&["lemma", "one_inf_five_diffs", "13", "--d", "2,5,6,1,3"]);
    assert_eq!(out.status.code(), Some(0));
    let cert = Certificate::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!((cert.m, cert.n, cert.blocks.len()), (14, 1, 13));
    assert!(cert.verify().unwrap().ok);
}
