//! End-to-end tests of the binary: flags, outputs, file formats, and the
//! exit-code contract (0 success, 1 domain error, 2 I/O or format error).

use std::path::Path;
use std::process::{Command, Output};

fn braidkex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidkex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn normalize_outputs_rendering_and_lengths() {
    let out = braidkex(&["normalize", "--n", "3", "1 2 1 2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("D^1 | 1,3,2"));
    assert!(text.contains("(inf, len, sup) = (1, 1, 2)"));

    let out = braidkex(&["normalize", "--n", "3", "1 -1"]);
    assert!(stdout(&out).contains("D^0 |"));
    assert!(stdout(&out).contains("(0, 0, 0)"));
}

#[test]
fn normalize_error_codes() {
    // out-of-range generator: domain error
    let out = braidkex(&["normalize", "--n", "3", "7"]);
    assert_eq!(code(&out), 1);
    assert!(!out.stderr.is_empty());

    // unparseable token: format error
    let out = braidkex(&["normalize", "--n", "3", "zap"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn keygen_is_deterministic_and_validates() {
    let dir = tempfile::tempdir().unwrap();
    let k1 = dir.path().join("k1.key");
    let k2 = dir.path().join("k2.key");

    let out = braidkex(&["keygen", "--out", k1.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("digest="));

    let out = braidkex(&["keygen", "--out", k2.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        std::fs::read(&k1).unwrap(),
        std::fs::read(&k2).unwrap(),
        "same invocation twice writes identical bytes"
    );

    // i > n-5 is a domain error
    let out = braidkex(&["keygen", "--n", "8", "--index", "5", "--out", k2.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}

fn write_keys(dir: &Path) -> (String, String) {
    let a = dir.join("a.key");
    let b = dir.join("b.key");
    assert_eq!(code(&braidkex(&["keygen", "--out", a.to_str().unwrap()])), 0);
    assert_eq!(
        code(&braidkex(&["keygen", "--index", "2", "--seed", "43", "--out", b.to_str().unwrap()])),
        0
    );
    (a.to_str().unwrap().to_string(), b.to_str().unwrap().to_string())
}

#[test]
fn exchange_produces_matching_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = write_keys(dir.path());
    let t = dir.path().join("t.json");

    let out = braidkex(&["exchange", "--key-a", &a, "--key-b", &b, "--out", t.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("match=true"));
    assert!(text.contains("digest="));

    let transcript = std::fs::read_to_string(&t).unwrap();
    assert!(transcript.starts_with("[{\"v\":1,"));
    assert!(transcript.contains("\"match\":true"));
}

#[test]
fn exchange_rejects_commuting_indices() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.key");
    let b = dir.path().join("b.key");
    braidkex(&["keygen", "--n", "12", "--index", "1", "--out", a.to_str().unwrap()]);
    braidkex(&["keygen", "--n", "12", "--index", "7", "--seed", "43", "--out", b.to_str().unwrap()]);
    let out = braidkex(&["exchange", "--key-a", a.to_str().unwrap(), "--key-b", b.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("commut"));
}

#[test]
fn attack_subcommand_methods() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = write_keys(dir.path());
    let t = dir.path().join("t.json");
    braidkex(&["exchange", "--key-a", &a, "--key-b", &b, "--out", t.to_str().unwrap()]);

    // length-based attack runs and reports honestly
    let out = braidkex(&["attack", "--method", "length", "--transcript", t.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"method\":\"length\""));

    // the documented non-goal method errors
    let out = braidkex(&["attack", "--method", "uss", "--transcript", t.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown attack method"));

    // corrupted transcript: format error
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"v\":1").unwrap();
    let out = braidkex(&["attack", "--method", "length", "--transcript", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn attack_sss_on_generator_pair() {
    // a session in B_3 whose first pair is (sigma_1, sigma_2): conjugate
    // braids with a shared super summit set
    use aag_protocol::{commit_word, derive_key_initiator_raw, Role};
    use braid_core::BraidWord;

    let x = BraidWord::new(3, vec![2, 1]).unwrap();
    let y = BraidWord::new(3, vec![1]).unwrap();
    let msg_a = commit_word(3, &x, Role::A).unwrap();
    assert_eq!(
        msg_a.conjugates[0],
        braid_core::normalize(&BraidWord::new(3, vec![2]).unwrap()),
        "first pair is (sigma_1, sigma_2)"
    );
    let msg_b = commit_word(3, &y, Role::B).unwrap();
    let key = derive_key_initiator_raw(&x, &msg_b).unwrap();

    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    std::fs::write(
        &t,
        format!(
            "[{},{},{{\"match\":true,\"digest\":\"{}\"}}]",
            msg_a.encode(),
            msg_b.encode(),
            key.digest_hex()
        ),
    )
    .unwrap();

    let out = braidkex(&["attack", "--method", "sss", "--transcript", t.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("success=true"), "{text}");
    assert!(text.contains("key_match=true"), "{text}");
}

#[test]
fn relator_file_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let relators = dir.path().join("relators.json");
    std::fs::write(&relators, r#"{"source":"toy","s_words":["tu"]}"#).unwrap();
    let rel = relators.to_str().unwrap();

    let a = dir.path().join("a.key");
    let b = dir.path().join("b.key");
    let out = braidkex(&["keygen", "--relators", rel, "--out", a.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = braidkex(&[
        "keygen", "--index", "2", "--seed", "43", "--relators", rel, "--out",
        b.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);

    let out = braidkex(&[
        "exchange", "--key-a", a.to_str().unwrap(), "--key-b", b.to_str().unwrap(),
        "--relators", rel,
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("match=true"));

    // loading a relator-mode key without the relator set fails: its
    // generator word references ids past the diagonal-only list
    let out = braidkex(&["exchange", "--key-a", a.to_str().unwrap(), "--key-b", b.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("generator id"));
}

#[test]
fn bench_emits_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("bench.csv");
    let args = [
        "bench", "--n", "6", "--lens", "1,2", "--trials", "5", "--out",
        csv_path.to_str().unwrap(),
    ];
    assert_eq!(code(&braidkex(&args)), 0);
    let first = std::fs::read(&csv_path).unwrap();
    assert!(String::from_utf8_lossy(&first)
        .starts_with("method,n,key_len,trials,successes,key_matches,mean_iterations,seed"));

    // byte-identical on rerun
    assert_eq!(code(&braidkex(&args)), 0);
    assert_eq!(std::fs::read(&csv_path).unwrap(), first);
}
