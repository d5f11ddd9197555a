use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::tempdir;

fn cycsyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycsyn")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(dir: &Path, name: &str, extra: &[&str]) -> String {
    let out = dir.join(name);
    let out = out.to_str().unwrap();
    let mut args = vec!["gen", "--n0", "7", "--g0", "x3+x+1", "--out", out];
    args.extend_from_slice(extra);
    let o = cycsyn(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out.to_string()
}

#[test]
fn factor_listings() {
    let o = cycsyn(&["factor", "--n", "7"]);
    assert_eq!(stdout(&o), "1+X ×1\n1+X+X^3 ×1\n1+X^2+X^3 ×1\ndivisors: 8\n");
    assert_eq!(stdout(&cycsyn(&["factor", "--n", "4"])), "1+X ×4\ndivisors: 5\n");
    assert_eq!(stdout(&cycsyn(&["factor", "--n", "1"])), "1+X ×1\ndivisors: 2\n");
    let o = cycsyn(&["factor", "--n", "seven"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dist_truncation_example() {
    let o =
        cycsyn(&["dist", "--n0", "15", "--g0", "x4+x3+1,x4+x3+x2+x+1,x+1", "--trunc", "9", "--f", "x6+x3+1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("P[0]=0.0625 class=RestrictedUniform AGREE"));
}

#[test]
fn dist_four_point_support_and_zero_noise() {
    let base = ["dist", "--n0", "15", "--g0", "x4+x+1,x4+x3+1", "--trunc", "10", "--f", "x4+x3+x2+x+1"];
    let clean = stdout(&cycsyn(&base));
    let support: Vec<&str> = clean.lines().take_while(|l| !l.starts_with("class=")).collect();
    assert_eq!(support, ["0000 0.25", "0010 0.25", "1001 0.25", "1011 0.25"]);
    let mut noisy = base.to_vec();
    noisy.extend(["--p", "0"]);
    assert_eq!(stdout(&cycsyn(&noisy)), clean);
}

#[test]
fn dist_block_position_flags() {
    // n = 7, s = s0: whole codewords, f = g0
    let o = cycsyn(&[
        "dist", "--n0", "7", "--g0", "x3+x+1", "--n", "7", "--s", "2", "--s0", "2", "--f", "x3+x+1",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("000 1\nclass=Degenerate\n"), "{text}");
    assert!(text.ends_with("AGREE\n"));
    let o = cycsyn(&["dist", "--n0", "7", "--g0", "x3+x+1", "--f", "x+1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cycsyn(&["dist", "--n0", "7", "--g0", "x3+x+1", "--trunc", "3", "--d1", "1", "--f", "x+1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dist_machine_output() {
    let o = cycsyn(&["--machine", "dist", "--n0", "7", "--g0", "x3+x+1", "--trunc", "5", "--f", "x+1"]);
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.is_object());
    }
    assert!(stdout(&o).contains("\"verdict\":\"AGREE\""));
}

#[test]
fn gen_writes_stream_and_metadata() {
    let dir = tempdir().unwrap();
    let flags = ["--s0", "2", "--p", "0", "--blocks", "3", "--seed", "1"];
    let a = gen(dir.path(), "a.txt", &flags);
    let b = gen(dir.path(), "b.txt", &flags);
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text.trim_end().len(), 23);
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(format!("{a}.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["seed"], 1);
    assert_eq!(meta["length"], 23);
    // every block at (n, s) = (7, 2) is a multiple of g0
    let bits: Vec<u8> = text.trim_end().bytes().map(|b| b - b'0').collect();
    for block in bits[2..].chunks(7) {
        let v = block.iter().enumerate().fold(0u64, |acc, (i, &b)| acc | (b as u64) << i);
        let r = (0..7)
            .rev()
            .fold(v, |r, i| if (r >> i) & 1 == 1 && i >= 3 { r ^ (0b1011 << (i - 3)) } else { r });
        assert_eq!(r, 0);
    }
    let bad = cycsyn(&["gen", "--n0", "7", "--g0", "x3+x+1", "--blocks", "3", "--out", "/nonexistent/dir/x"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn reconstruct_noise_free_and_noisy() {
    let dir = tempdir().unwrap();
    let clean = gen(dir.path(), "clean.txt", &["--s0", "2", "--blocks", "300", "--seed", "5"]);
    let o = cycsyn(&["reconstruct", "--in", &clean, "--n-min", "3", "--n-max", "10"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("winner n=7 s=2 g=1101"));

    let noisy =
        gen(dir.path(), "noisy.txt", &["--s0", "4", "--p", "0.02", "--blocks", "2000", "--seed", "9"]);
    let report = dir.path().join("report.jsonl");
    let o = cycsyn(&[
        "--machine",
        "reconstruct",
        "--in",
        &noisy,
        "--n-min",
        "3",
        "--n-max",
        "10",
        "--p",
        "0.02",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let last = fs::read_to_string(&report).unwrap().lines().last().unwrap().to_string();
    let v: serde_json::Value = serde_json::from_str(&last).unwrap();
    assert_eq!(v["winner"]["n"], 7);
}

#[test]
fn reconstruct_coin_flips_and_bad_input() {
    let dir = tempdir().unwrap();
    // xorshift bits
    let mut x = 0x9e3779b97f4a7c15u64;
    let bits: String = (0..10_000)
        .map(|_| {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            if x >> 63 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect();
    let path = dir.path().join("coin.txt");
    fs::write(&path, bits).unwrap();
    let o = cycsyn(&[
        "reconstruct",
        "--in",
        path.to_str().unwrap(),
        "--n-min",
        "3",
        "--n-max",
        "10",
        "--p",
        "0.02",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().last(), Some("no code detected"));

    fs::write(&path, "0101x1\n").unwrap();
    let o = cycsyn(&["reconstruct", "--in", path.to_str().unwrap(), "--n-max", "10"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cycsyn(&["reconstruct", "--in", path.to_str().unwrap(), "--n-max", "10", "--method", "guess"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_suites() {
    let o = cycsyn(&["--jobs", "1", "verify", "--suite", "distributions", "--n0", "7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains(
        "PASS distributions: predicted class = class of the exact distribution: checked=4665 failures=0"
    ));
    assert!(text.ends_with("verify: PASS\n"));
    let o = cycsyn(&["verify", "--suite", "algebra"]);
    assert!(o.status.success());
    let o = cycsyn(&["verify", "--suite", "bounds", "--n0", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS bounds: Theorem 5"));
    let o = cycsyn(&["verify", "--suite", "everything"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_machine_output() {
    let o = cycsyn(&["--machine", "verify", "--suite", "recon", "--n0", "7"]);
    assert!(o.status.success());
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["failures"], 0);
    }
}

#[test]
fn usage_errors() {
    assert_eq!(cycsyn(&["factor", "--n", "7", "--bogus"]).status.code(), Some(1));
    assert_eq!(cycsyn(&[]).status.code(), Some(1));
    assert_eq!(cycsyn(&["--help"]).status.code(), Some(0));
    // x^2+1 does not divide X^7+1
    assert_eq!(
        cycsyn(&["dist", "--n0", "7", "--g0", "x2+1", "--trunc", "3", "--f", "x+1"]).status.code(),
        Some(1)
    );
}
