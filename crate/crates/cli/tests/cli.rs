use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use idealpow_cli::parse::{parse_polynomial, parse_ring};
use idealpow_cli::problem::parse_problem;
use idealpow_core::ideal_ops::power;
use proptest::prelude::*;

fn problem(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../problems");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealpow")).args(args).output().expect("binary runs")
}

fn run_with_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealpow")).args(args).env("IDEALPOW_THREADS", threads).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_problem(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn form_ideal_of_the_complete_intersection() {
    let o = run(&["form-ideal", "--file", &problem("infinite.ideal"), "--ideal", "I"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(x^2, x*y, y^5)\n");
    let o = run(&["form-ideal", "--file", &problem("infinite.ideal"), "-k", "2"]);
    assert_eq!(stdout(&o), "(x^4, x^3*y, x^2*y^2, x*y^6, y^9)\n");
}

#[test]
fn spread_of_the_triangle() {
    let o = run(&["spread", "--file", &problem("cover.ideal"), "--ideal", "I"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3\n");
    let o = run(&["spread", "--file", &problem("cover.ideal"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["analytic_spread"], 3);
}

#[test]
fn growth_table_of_the_binomial_example() {
    let args = ["growth", "--file", &problem("marc.ideal"), "--ideal", "I", "--aux", "m", "-e", "2", "--kmax", "4", "--format", "tsv"];
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "1\t1\t1\n2\t3\t3/4\n3\t6\t2/3\n4\t10\t5/8\n");

    let mut json_args = args.to_vec();
    json_args.truncate(json_args.len() - 1);
    json_args.push("json");
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&json_args))).unwrap();
    let last = &v["rows"][3];
    assert_eq!((last["k"].as_u64(), last["length"].as_u64()), (Some(4), Some(10)));
    assert_eq!((last["ratio_num"].as_str(), last["ratio_den"].as_str()), (Some("5"), Some("8")));
}

#[test]
fn probes_report_witnesses() {
    let o = run(&["form-probe", "--file", &problem("infinite.ideal"), "--kmax", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fail_at"], 2);
    assert_eq!(v["rows"][0]["k"], 2);
    assert_eq!(v["rows"][0]["verdict"], false);
    assert_eq!(v["rows"][0]["witness"], "y^9");
    assert_eq!(v["rows"][1]["witness"], "y^13");

    let o = run(&["veronese-probe", "--file", &problem("cover.ideal"), "-d", "2", "--kmax", "3", "--format", "tsv"]);
    assert_eq!(stdout(&o), "2\tpass\t\n3\tpass\t\n");
    let o = run(&["form-probe", "--file", &problem("depending_f2.ideal"), "--kmax", "3"]);
    assert_eq!(stdout(&o), "k = 2: fail, new generator y^9\nk = 3: fail, new generator y^13\nfails at k = 2\n");
}

#[test]
fn ideal_valued_commands() {
    let marc = problem("marc.ideal");
    let rees = stdout(&run(&["rees", "--file", &marc]));
    assert!(["y1", "y2", "y3"].iter().all(|y| rees.contains(y)), "{rees}");
    assert_eq!(rees.trim().trim_matches(|c| c == '(' || c == ')').split(", ").count(), 5);
    let sat = stdout(&run(&["saturate", "--file", &marc, "--aux", "m"]));
    let sym = stdout(&run(&["symbolic", "--file", &marc, "-k", "1"]));
    assert_eq!(sat, sym);
    assert_eq!(stdout(&run(&["length", "--file", &marc, "--aux", "I"])), "0\n");
    assert_eq!(stdout(&run(&["length", "--file", &problem("infinite.ideal")])), "6\n");
    let sharp = stdout(&run(&["sharp", "--file", &problem("infinite.ideal")]));
    assert!(sharp.contains("y^3*s - x*y"), "{sharp}");
    let colon = stdout(&run(&["colon", "--file", &problem("cover.ideal"), "--aux", "m"]));
    assert_eq!(colon, "(x*y, x*z, y*z)\n");
    assert_eq!(stdout(&run(&["power", "--file", &problem("cover.ideal"), "-k", "2", "--format", "tsv"])).lines().count(), 6);
}

#[test]
fn hilbert_series_output() {
    let f = temp_problem("ring Q[x,y]\nI = (x^2, y^3)\n");
    let o = run(&["hilbert", "--file", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "1 - t^2 - t^3 + t^5; 0; 6\n");
    let f = temp_problem("ring Q[x,y,z]\nI = (x*y, x*z, y*z)\n");
    assert_eq!(stdout(&run(&["hilbert", "--file", f.path().to_str().unwrap()])), "1 - 3*t^2 + 2*t^3; 1; 3\n");
}

#[test]
fn exit_codes() {
    let cases: &[(&str, &[&str], i32)] = &[
        ("ring Q[x,s]\nI = (x)\n", &["spread"], 2),
        ("ring F4[x]\nI = (x)\n", &["spread"], 2),
        ("ring Q[x,y]\nI = (x, q)\n", &["spread"], 2),
        ("ring Q[x,y]\nI = (x y)\n", &["spread"], 2),
        ("ring Q[x,y]\nI = (x^0)\n", &["spread"], 2),
        ("I = (x)\n", &["spread"], 2),
        ("ring Q[x,y]\nI = (x)\n", &["spread", "--ideal", "J"], 2),
        ("ring Q[x,y]\nI = (x)\n", &["power"], 2),
        ("ring Q[x,y]\nI = (x)\n", &["spread", "--format", "xml"], 2),
        ("ring Q[x,y]\nI = (x + 1)\n", &["form-ideal"], 1),
        ("ring Q[x,y]\nI = (x^2, x*y)\nJ = (x)\n", &["growth", "--aux", "J", "-e", "1", "--kmax", "2"], 1),
        ("ring Q[x,y]\nI = (x*y)\n", &["length"], 1),
        ("ring Q[x,y]\nI = (x)\n", &["form-probe", "--kmax", "1"], 1),
        ("ring Q[x,y]\nI = (x)\n", &["spread"], 0),
    ];
    for (text, args, code) in cases {
        let f = temp_problem(text);
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--file", f.path().to_str().unwrap()]);
        let o = run(&full);
        assert_eq!(o.status.code(), Some(*code), "{text:?} {args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let o = run(&["spread", "--file", "/nonexistent/problem.ideal"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run_with_threads(&["spread", "--file", &problem("cover.ideal")], "zero");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_runs_and_thread_counts() {
    let marc = problem("marc.ideal");
    let growth = ["growth", "--file", &marc, "-e", "2", "--kmax", "3", "--format", "json"];
    let probe = ["form-probe", "--file", &problem("infinite.ideal"), "--kmax", "4", "--format", "json"];
    for args in [&growth[..], &probe[..]] {
        let single = run_with_threads(args, "1").stdout;
        assert_eq!(single, run_with_threads(args, "1").stdout);
        assert_eq!(single, run_with_threads(args, "4").stdout);
        assert_eq!(single, run(args).stdout);
    }
}

#[test]
fn rendering_round_trips_on_the_golden_corpus() {
    for name in ["infinite.ideal", "marc.ideal", "cover.ideal", "depending_q.ideal", "depending_f5.ideal", "depending_f2.ideal"] {
        let text = std::fs::read_to_string(problem(name)).unwrap();
        let p = parse_problem(&text).unwrap();
        let ring = p.ring.clone();
        for ideal in p.ideals.values() {
            let mut polys: Vec<_> = ideal.generators().to_vec();
            polys.extend(ideal.groebner_basis().iter().cloned());
            polys.extend(power(ideal, 2).generators().iter().cloned());
            for f in polys {
                assert_eq!(parse_polynomial(&f.to_string(), &ring).unwrap(), f, "{name}: {f}");
            }
        }
    }
}

proptest! {
    #[test]
    fn rendering_round_trips_on_random_polynomials(
        field in prop_oneof![Just("Q"), Just("F2"), Just("F7")],
        terms in proptest::collection::vec((-9i64..=9, 1i64..=4, 0u32..4, 0u32..4, 0u32..4), 0..6)
    ) {
        let ring = parse_ring(&format!("{field}[x,y,z]")).unwrap();
        let text: Vec<String> = terms.iter().map(|(n, d, a, b, c)| format!("({n})/{d}*x^{}*y^{}*z^{}", a + 1, b + 1, c + 1)).collect();
        let text = if text.is_empty() { "0".to_string() } else { text.join(" + ") };
        let Ok(f) = parse_polynomial(&text, &ring) else { return Ok(()) };
        prop_assert_eq!(parse_polynomial(&f.to_string(), &ring).unwrap(), f);
    }
}
