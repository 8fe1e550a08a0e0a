use std::path::Path;

use trs_hull::cli;
use trs_hull::gf::Field;
use trs_hull::search::{self, EtaRange, SearchSpec};
use trs_hull::trs::Family;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(std::iter::once("trs-hull").chain(args.iter().copied()), &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

const E351: [&str; 12] = ["--family", "lemma31", "--field", "GF(2^4)", "--k", "5", "--t", "1", "--h", "3", "--eta", "g^1"];

#[test]
fn construct_then_analyze_e351() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.json");
    let mut args = vec!["construct"];
    args.extend(E351);
    args.extend(["--out", p(&file)]);
    let r = run(&args);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("[10, 5]"));
    let r = run(&["analyze", p(&file)]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("hull dimension   1"));
    assert!(r.out.contains("MDS              false"));
    assert!(r.out.contains("minimum distance 5"));
    let csv = run(&["analyze", p(&file), "--csv"]);
    assert!(csv.out.ends_with("GF(2^4),10,5,1,false,5,10,CertifiedNonGRS\n"));
}

#[test]
fn recipe_echo_round_trips_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.json");
    let mut args = vec!["construct"];
    args.extend(E351);
    args.extend(["--out", p(&file)]);
    assert_eq!(run(&args).code, 0);
    let stored = std::fs::read_to_string(&file).unwrap();
    let analyzed = run(&["analyze", p(&file), "--json"]).out;
    let tail = |s: &str| s[s.find("\"recipe\"").unwrap()..s.rfind('}').unwrap()].to_string();
    assert_eq!(tail(&stored), tail(&analyzed));
}

#[test]
fn construct_lemma32_and_parameter_errors() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.json");
    let base = ["construct", "--family", "lemma32", "--field", "GF(3^4)", "--k", "5", "--t", "2", "--eta", "g^0", "--out", p(&file)];
    let mut ok = base.to_vec();
    ok.extend(["--h", "2"]);
    let r = run(&ok);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("[10, 4]"));
    let mut bad = base.to_vec();
    bad.extend(["--h", "1"]);
    let r = run(&bad);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("h > 1 fails"));
    let r = run(&["construct", "--family", "lemma31", "--field", "GF(2^4)", "--k", "5", "--t", "1", "--h", "3", "--out", p(&file)]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("--eta"));
    let r = run(&["construct", "--family", "lemma31", "--field", "GF(6)", "--k", "5", "--t", "1", "--h", "3", "--eta", "1", "--out", p(&file)]);
    assert_eq!(r.code, 2);
}

#[test]
fn analyze_toy_and_malformed_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let toy = dir.path().join("toy.json");
    std::fs::write(&toy, r#"{"field":"GF(2)","n":2,"k":1,"G":[[1,1]]}"#).unwrap();
    let r = run(&["analyze", p(&toy)]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("hull dimension   1") && r.out.contains("MDS              true") && r.out.contains("minimum distance 2"));
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"field\": \"GF(2)\", \"n\": 2,").unwrap();
    assert_eq!(run(&["analyze", p(&broken)]).code, 3);
    assert_eq!(run(&["analyze", p(&dir.path().join("missing.json"))]).code, 3);
    let ragged = dir.path().join("ragged.json");
    std::fs::write(&ragged, r#"{"field":"GF(2)","n":2,"k":1,"G":[[1]]}"#).unwrap();
    assert_eq!(run(&["analyze", p(&ragged)]).code, 3);
}

#[test]
fn forced_enumeration_respects_the_guard() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("big.json");
    let r = run(&[
        "construct", "--family", "lemma32", "--field", "GF(3^8)", "--subfield", "81", "--k", "5", "--t", "2", "--h", "3", "--eta", "g^1",
        "--out", p(&file),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let r = run(&["analyze", p(&file)]);
    assert!(r.out.contains("minimum distance 7"));
    let r = run(&["analyze", p(&file), "--min-distance"]);
    assert_eq!(r.code, 4);
    assert!(r.err.contains("6561"));
}

#[test]
fn sweep_writes_files_matching_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let stem = dir.path().join("e361");
    let args = ["sweep", "--family", "lemma32", "--field", "GF(3^4)", "--k", "5", "--t", "2", "--h", "3", "--out", p(&stem)];
    let r = run(&args);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("tried 80 η: 10 MDS"));
    let csv = std::fs::read_to_string(stem.with_extension("csv")).unwrap();
    assert_eq!(csv.lines().count(), 81);
    assert_eq!(csv.lines().filter(|l| l.contains(",true,")).count(), 10);
    let json = std::fs::read_to_string(stem.with_extension("json")).unwrap();
    let f = Field::gf(3, 4).unwrap();
    let spec = SearchSpec::new(&f, None, Family::Lemma32, 5, 2, 3, EtaRange::AllNonzero).unwrap();
    assert_eq!(json, search::sweep_eta(&spec).unwrap().to_json());
    // Identical invocations give identical bytes.
    assert_eq!(run(&args).code, 0);
    assert_eq!(std::fs::read_to_string(stem.with_extension("json")).unwrap(), json);
}

#[test]
fn sweep_subfield_witness_and_empty_range() {
    let dir = tempfile::tempdir().unwrap();
    let stem = dir.path().join("e352");
    let r = run(&[
        "sweep", "--family", "lemma31", "--field", "GF(2^8)", "--subfield", "16", "--k", "5", "--t", "1", "--h", "3", "--out", p(&stem),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("tried 240 η: 240 MDS"));
    assert!(r.out.contains("first witness: η = g^1"));
    let empty = dir.path().join("empty");
    let r = run(&[
        "sweep", "--family", "lemma32", "--field", "GF(3^4)", "--k", "5", "--t", "2", "--h", "3", "--eta-range", "list:", "--out", p(&empty),
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(std::fs::read_to_string(empty.with_extension("csv")).unwrap().lines().count(), 1);
    let r = run(&["sweep", "--family", "lemma32", "--field", "GF(3^4)", "--k", "4", "--t", "2", "--h", "1", "--out", p(&empty)]);
    assert_eq!(r.code, 2);
}

#[test]
fn verify_subcommand_reports_claims() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("claims.json");
    let r = run(&["verify-paper", "--example", "E351", "--json", p(&json)]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert_eq!(r.out.lines().count(), 4);
    assert!(r.out.lines().all(|l| l.contains("PASS")));
    let reports: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(reports[0]["example"], "E351");
    let r = run(&["verify-paper", "--example", "E361", "--field", "GF(3^4;2,1,0,0,1)"]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert!(r.out.contains("DOWNGRADED") && r.out.contains("mds-set-size-10"));
    assert_eq!(run(&["verify-paper", "--example", "E999"]).code, 2);
    let r = run(&["verify-paper", "--example", "E351", "--field", "GF(2^3)"]);
    assert_eq!(r.code, 1);
}

#[test]
fn field_info_and_help() {
    let r = run(&["field-info", "--field", "GF(2^4)"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("1,1,0,0,1") && r.out.contains("Conway"));
    let r = run(&["field-info", "--field", "GF(3^4)", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["subfield_orders"], serde_json::json!([3, 9, 81]));
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&[]).code, 2);
}
