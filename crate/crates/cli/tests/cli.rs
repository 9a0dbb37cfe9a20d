use std::process::{Command, Output};

use schubert_core::{SweepReport, VerificationReport};

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn degree_of_the_gr49_example() {
    let out = schubert(&[
        "degree", "--n", "9", "--k", "4", "--lambda", "5,4,3,1", "--root", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn degree_below_k_goes_through_the_dual() {
    // Gr(2,4), root 1: the dual root is 3 in Gr(2,4), λ=(2,2) is self-conjugate
    let out = schubert(&[
        "degree", "--n", "4", "--k", "2", "--lambda", "2,2", "--root", "1", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "n,k,lambda,root,beta,dualized,d\n4,2,\"2,2\",1,3,true,1\n"
    );
}

#[test]
fn quantum_square_on_the_line() {
    let out = schubert(&[
        "product", "--n", "2", "--k", "1", "--lhs", "1", "--rhs", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "q^1 * [()] x1\n");

    let out = schubert(&[
        "product", "--n", "4", "--k", "2", "--lambda", "1", "--mu", "2,1", "--format", "csv",
    ]);
    assert_eq!(stdout(&out), "partition,q,coeff\n,1,1\n\"2,2\",0,1\n");
}

#[test]
fn neighborhood_example() {
    let out = schubert(&[
        "neighborhood",
        "--n",
        "4",
        "--k",
        "2",
        "--d",
        "1",
        "--lambda-b",
        "",
        "--mu",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<_> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines, ["1,2", "1,3", "1,4", "2,3", "2,4"]);
}

#[test]
fn join_examples() {
    let out = schubert(&[
        "join",
        "--n",
        "4",
        "--u",
        "3,4,2,1",
        "--parabolic-y",
        "2,3",
        "--parabolic-z",
        "1,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3,2,4,1\n");
    // the same parabolic twice returns the representative itself
    let out = schubert(&[
        "join", "--n", "4", "--u", "3,4,2,1", "--dy", "1,3", "--dz", "1,3",
    ]);
    assert_eq!(stdout(&out), "3,4,1,2\n");
    let out = schubert(&["join", "--n", "3", "--u", "1,2,3", "--dy", "", "--dz", "2"]);
    assert_eq!(stdout(&out), "1,2,3\n");
}

#[test]
fn verify_small_sweep_and_single_case() {
    let out = schubert(&["verify", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("sweep n_max=2 mode=exhaustive: 4/4 pass\n"));

    let out = schubert(&[
        "verify", "--n", "4", "--k", "2", "--root", "2", "--u", "1,3,2,4", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: VerificationReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.pass);
    assert_eq!(report.d, 1);
}

#[test]
fn invalid_input_exits_with_two() {
    let cases: &[&[&str]] = &[
        &[
            "product", "--n", "4", "--k", "2", "--lhs", "3", "--rhs", "1",
        ],
        &[
            "product", "--n", "4", "--k", "2", "--lhs", "1,2", "--rhs", "1",
        ],
        &[
            "verify", "--n", "4", "--k", "2", "--root", "2", "--u", "1,1,2,4",
        ],
        &[
            "verify", "--n", "4", "--k", "2", "--root", "4", "--u", "1,2,3,4",
        ],
        &["verify", "--n", "4", "--k", "2"],
        &["verify", "--n-max", "1"],
        &["verify", "--n-max", "3", "--jobs", "0"],
        &[
            "degree", "--n", "5", "--k", "5", "--lambda", "", "--root", "1",
        ],
        &[
            "neighborhood",
            "--n",
            "4",
            "--k",
            "2",
            "--d",
            "3",
            "--lambda-b",
            "",
            "--mu",
            "",
        ],
        &["join", "--n", "3", "--u", "1,2", "--dy", "", "--dz", ""],
        &["join", "--n", "3", "--u", "1,2,3", "--dy", "3", "--dz", ""],
        &["frobnicate"],
    ];
    for args in cases {
        let out = schubert(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn worker_count_does_not_change_output() {
    for format in ["text", "json", "csv"] {
        let one = schubert(&["verify", "--n-max", "6", "--jobs", "1", "--format", format]);
        let four = schubert(&["verify", "--n-max", "6", "--jobs", "4", "--format", format]);
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, four.stdout, "{format}");
    }
    let sampled = |jobs| {
        schubert(&[
            "verify",
            "--n-max",
            "7",
            "--mode",
            "sampled",
            "--sample-size",
            "50",
            "--seed",
            "7",
            "--jobs",
            jobs,
        ])
        .stdout
    };
    assert_eq!(sampled("1"), sampled("3"));
}

#[test]
fn json_reports_roundtrip() {
    let out = schubert(&["verify", "--n-max", "4", "--format", "json"]);
    let text = stdout(&out);
    let report: SweepReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
    assert_eq!(report.total, report.cases.len());

    let out = schubert(&[
        "verify",
        "--n",
        "5",
        "--k",
        "3",
        "--root",
        "1",
        "--u",
        "2,5,1,3,4",
        "--format",
        "json",
    ]);
    let text = stdout(&out);
    let report: VerificationReport = serde_json::from_str(&text).unwrap();
    assert!(report.dualized);
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
}
