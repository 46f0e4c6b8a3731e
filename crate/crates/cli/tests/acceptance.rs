//! End-to-end acceptance run: drives the `qg2` binary and prints one
//! PASS/FAIL line per criterion. Runs without the libtest harness so the
//! lines are never captured.

use serde_json::Value;
use std::process::Command;
use std::time::{Duration, Instant};

fn verify(json: &std::path::Path, extra: &[&str]) -> (bool, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qg2"))
        .arg("verify")
        .arg("--json")
        .arg(json)
        .args(extra)
        .output()
        .expect("qg2 runs");
    (out.status.success(), start.elapsed())
}

fn load(path: &std::path::Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn strip_timing(v: &Value) -> Value {
    match v {
        Value::Object(m) => Value::Object(
            m.iter().filter(|(k, _)| !k.ends_with("millis")).map(|(k, v)| (k.clone(), strip_timing(v))).collect(),
        ),
        Value::Array(a) => Value::Array(a.iter().map(strip_timing).collect()),
        v => v.clone(),
    }
}

struct Checks<'a>(Vec<&'a Value>);

impl<'a> Checks<'a> {
    fn new(report: &'a Value) -> Self {
        Checks(report["checks"].as_array().unwrap().iter().collect())
    }

    fn matching(&self, pred: impl Fn(&str) -> bool) -> Vec<&'a Value> {
        self.0.iter().copied().filter(|c| pred(c["id"].as_str().unwrap())).collect()
    }

    fn prefix(&self, p: &str) -> Vec<&'a Value> {
        self.matching(|id| id.starts_with(p))
    }

    fn one(&self, id: &str) -> &'a Value {
        self.matching(|x| x == id).first().copied().unwrap_or_else(|| panic!("no check {id}"))
    }
}

fn pass(c: &Value) -> bool {
    c["status"] == "pass"
}

fn millis(cs: &[&Value]) -> u64 {
    cs.iter().map(|c| c["millis"].as_u64().unwrap()).sum()
}

fn acceptance() {
    let dir = std::env::temp_dir().join(format!("qg2-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a_path, b_path) = (dir.join("a.json"), dir.join("b.json"));
    let (ok_a, elapsed) = verify(&a_path, &[]);
    let (ok_b, _) = verify(&b_path, &["--jobs", "1"]);
    let a = load(&a_path);
    let b = load(&b_path);
    let checks = Checks::new(&a);

    let mut results: Vec<(u32, &str, bool, String)> = Vec::new();

    let hopf = checks.prefix("hopf-axioms-");
    let random = checks.one("hopf-axioms-random-words");
    results.push((
        1,
        "Hopf axioms on generators and random words",
        hopf.len() == 2
            && hopf.iter().all(|c| pass(c))
            && checks.one("hopf-axioms-generators")["detail"]["inputs"] == 12
            && random["detail"]["inputs"].as_u64() >= Some(50)
            && millis(&hopf) < 10_000,
        format!("{} ms", millis(&hopf)),
    ));

    let pc = checks.one("pairing-constants");
    results.push((2, "pairing constants", pass(pc), pc["detail"].to_string()));

    let tab = checks.prefix("tabular-");
    results.push((
        3,
        "five coproduct tables",
        tab.len() == 5
            && tab.iter().all(|c| pass(c) && c["detail"]["rows"] == 120 && c["detail"]["weighted_total"] == "0")
            && millis(&tab) < 60_000,
        format!("{} ms", millis(&tab)),
    ));

    let serre = checks.prefix("serre-radical-");
    let anti = checks.one("pairing-antipode");
    results.push((
        4,
        "Serre elements in the radical, antipode invariance",
        serre.len() == 4 && serre.iter().all(|c| pass(c)) && pass(anti) && anti["detail"]["pairs"] == 20,
        String::new(),
    ));

    let dbl = checks.prefix("double-");
    results.push((
        5,
        "double cross relations",
        dbl.len() == 16
            && dbl.iter().all(|c| {
                pass(c) && c["detail"]["matches_presentation"] == true && c["detail"]["alt_form_agrees"] == true
            }),
        format!("{} pairs", dbl.len()),
    ));

    let br = checks.prefix("bracket-");
    let conj = checks.prefix("conj-");
    results.push((
        6,
        "bracket catalogue",
        !br.is_empty() && br.iter().chain(&conj).all(|c| pass(c)),
        format!("{} identities", br.len() + conj.len()),
    ));

    let lemmas = checks.prefix("lemma-");
    let both: Vec<_> = lemmas.iter().filter(|c| c["detail"]["method"] == "both").collect();
    let agree = checks.one("lemma-oracle-agreement");
    results.push((
        7,
        "lemma suite, oracle and rewriter",
        lemmas.iter().all(|c| pass(c))
            && !both.is_empty()
            && both.iter().all(|c| c["detail"]["oracle"] == true && c["detail"]["rewriter"] == true)
            && agree["detail"]["elements"] == 50,
        format!("{} identities, {} checked by both", lemmas.len(), both.len()),
    ));

    let tp = checks.prefix("t-preserve-");
    results.push((
        8,
        "T-preservation matrix, full suite time",
        tp.len() == 20 && tp.iter().all(|c| pass(c)) && ok_a && elapsed < Duration::from_secs(300),
        format!("{} cells, suite {:.1} s", tp.len(), elapsed.as_secs_f64()),
    ));

    let sp = checks.one("specialization-ef");
    results.push((9, "one-parameter specialization of the e f relation", pass(sp), sp["detail"].to_string()));

    let stripped_a = serde_json::to_string_pretty(&strip_timing(&a)).unwrap();
    let stripped_b = serde_json::to_string_pretty(&strip_timing(&b)).unwrap();
    let (c_path, d_path) = (dir.join("c.json"), dir.join("d.json"));
    verify(&c_path, &["--no-timing", "--filter", "tabular-*"]);
    verify(&d_path, &["--no-timing", "--filter", "tabular-*", "--jobs", "1"]);
    let bytes_equal = std::fs::read(&c_path).unwrap() == std::fs::read(&d_path).unwrap();
    results.push((10, "verify JSON is reproducible", ok_b && stripped_a == stripped_b && bytes_equal, String::new()));

    for (n, name, ok, note) in &results {
        println!(
            "criterion {n:>2}: {} {name}{}",
            if *ok { "PASS" } else { "FAIL" },
            if note.is_empty() { String::new() } else { format!(" ({note})") }
        );
    }
    let _ = std::fs::remove_dir_all(&dir);
    let failed: Vec<u32> = results.iter().filter(|r| !r.2).map(|r| r.0).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

fn cli_commands() {
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_qg2")).args(args).output().unwrap();
        (out.status.code(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
    };
    let (code, out, _) = run(&["nf", "e1*f1 - f1*e1"]);
    assert_eq!(code, Some(0));
    assert_eq!(out.trim(), "-1/(r - s)*w1' + 1/(r - s)*w1");
    let (_, out, _) = run(&["T", "2", "e1"]);
    assert_eq!(out.trim(), "e1*e2 - r^3*e2*e1");
    let (_, out, _) = run(&["pair", "f1", "e1"]);
    assert_eq!(out.trim(), "-1/(r - s)");
    let (_, out, _) = run(&["table", "f1^4*f2", "--format", "csv"]);
    assert_eq!(out.lines().count(), 127);
    let (code, _, err) = run(&["nf", "e1 + ("]);
    assert_eq!(code, Some(2));
    assert!(err.contains("syntax error"));
    let (code, _, _) = run(&["verify", "--filter", "pairing-constants"]);
    assert_eq!(code, Some(0));
    let (code, out, err) = run(&["verify", "--filter", "nonexistent*"]);
    assert_eq!(code, Some(0));
    assert!(out.starts_with("0 checks"));
    assert!(err.contains("warning"));
    let (code, _, err) = run(&["table", "f1^3*f2"]);
    assert_eq!(code, Some(2));
    assert!(err.contains("four f1"));
    let (code, _, err) = run(&["nf", "e1^-1"]);
    assert_eq!(code, Some(2));
    assert!(!err.is_empty());
}

fn main() {
    cli_commands();
    println!("cli commands: PASS");
    acceptance();
}
