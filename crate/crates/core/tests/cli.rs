use std::path::PathBuf;

use folkman::io::certificate::{Certificate, CertificateVerdict, Witness};
use folkman::io::cli::{run, EXIT_LIMIT, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("folkman").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("folkman-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn construct_gamma_prints_graph6_and_labels() {
    let (code, out, _) = invoke(&["construct", "--gamma", "3"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("MUzrrMquBWEoe_r??"));
    assert!(out.contains("# n=14 edges=42"));
    assert!(out.contains("# labels: v_1 v_2 v_3 v_4 v_5 v_6 v_7 u_1"));
}

#[test]
fn construct_witness() {
    let (code, out, _) = invoke(&["construct", "--witness", "3,3,2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("NuzvtyruVWUoeorO[o?\n"));
    assert!(out.contains("# labels: k_1 v_1"));
    let (code, _, err) = invoke(&["construct", "--witness", "4,2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
}

#[test]
fn construct_output_is_a_readable_graph_file() {
    let (_, out, _) = invoke(&["construct", "--gamma", "4"]);
    let path = scratch("gamma4.g6");
    std::fs::write(&path, &out).unwrap();
    let (code, json, _) = invoke(&["clique", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let cert = Certificate::from_json(&json).unwrap();
    assert_eq!(cert.clique_value, Some(4));
    assert!(cert.labels.is_none());
}

#[test]
fn deterministic_arrows_output_is_byte_identical() {
    let args = [
        "arrows",
        "witness:3,3,2",
        "--tuple",
        "3,3,2",
        "--deterministic",
        "--sigma",
    ];
    let (c1, o1, _) = invoke(&args);
    let (c2, o2, _) = invoke(&args);
    assert_eq!(c1, EXIT_OK);
    assert_eq!(c2, EXIT_OK);
    assert_eq!(o1, o2);
    assert!(!o1.contains("wall_ms"));
    let cert = Certificate::from_json(&o1).unwrap();
    assert_eq!(cert.verdict, CertificateVerdict::Arrows);
}

#[test]
fn not_arrows_exits_one_and_replays() {
    let (code, out, _) = invoke(&["arrows", "gamma:3", "--tuple", "3,3,3", "--deterministic"]);
    assert_eq!(code, EXIT_NEGATIVE);
    let path = scratch("free.json");
    std::fs::write(&path, &out).unwrap();
    let (code, msg, _) = invoke(&["verify", "--replay", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{msg}");

    let mut cert = Certificate::from_json(&out).unwrap();
    let Some(Witness::Coloring(colors)) = &mut cert.witness else {
        panic!("no witness")
    };
    colors.iter_mut().for_each(|c| *c = 1);
    std::fs::write(&path, cert.to_json()).unwrap();
    let (code, _, err) = invoke(&["verify", "--replay", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(err.starts_with("rejected"));
}

#[test]
fn sigma_needs_a_constructed_graph() {
    let (code, _, err) = invoke(&["arrows", "MUzrrMquBWEoe_r??", "--tuple", "3,3", "--sigma"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--sigma"));
    let (code, _, _) = invoke(&["arrows", "MUzrrMquBWEoe_r??", "--tuple", "3,3"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn budget_exhaustion_exits_three() {
    let (code, out, err) = invoke(&[
        "arrows",
        "gamma:5",
        "--tuple",
        "5,3",
        "--budget",
        "5",
        "--deterministic",
    ]);
    assert_eq!(code, EXIT_LIMIT);
    assert!(out.is_empty());
    assert!(err.contains("budget"));
    let (code, _, _) = invoke(&["verify", "--suite", "theorem1", "--p", "9"]);
    assert_eq!(code, EXIT_LIMIT);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["arrows", "Bw"],
        &["arrows", "Bw", "--tuple", "0,2"],
        &["clique", "Bx"],
        &["construct", "--gamma", "1"],
        &["verify", "--suite", "lemma1"],
        &["verify", "--suite", "main"],
        &["export", "--format", "png", "Bw"],
    ] {
        let (code, out, err) = invoke(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {out}{err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("arrows"));
    let (code, out, _) = invoke(&["--version"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn verify_suites() {
    for args in [
        &["verify", "--suite", "prop1", "--tuple", "3,3,2"][..],
        &["verify", "--suite", "paths", "--k-max", "10"],
        &["verify", "--suite", "lemma1", "--p", "3"],
        &["verify", "--suite", "lemmas23", "--p", "3"],
        &[
            "verify",
            "--suite",
            "theorem1",
            "--p",
            "4",
            "--deterministic",
        ],
        &["verify", "--suite", "corollary1", "--p", "6"],
        &[
            "verify",
            "--suite",
            "main",
            "--tuple",
            "2,2,3",
            "--deterministic",
        ],
    ] {
        let (code, out, err) = invoke(args);
        assert_eq!(code, EXIT_OK, "{args:?}: {err}");
        let cert = Certificate::from_json(&out).unwrap();
        assert!(cert.all_passed());
        let path = scratch("report.json");
        std::fs::write(&path, &out).unwrap();
        assert_eq!(
            invoke(&["verify", "--replay", path.to_str().unwrap()]).0,
            EXIT_OK
        );
    }
}

#[test]
fn bounds_report() {
    let (code, out, _) = invoke(&["bounds", "--tuple", "3,3,2"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["upper_main"]["value"], 15);
    assert_eq!(v["m"], 6);
    assert_eq!(v["p"], 3);
}

#[test]
fn export_formats() {
    let (code, out, _) = invoke(&["export", "--format", "dimacs", "Bw"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    let (code, out, _) = invoke(&["export", "--format", "graph6", "gamma:2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "IUW[U@_K?\n");
}
