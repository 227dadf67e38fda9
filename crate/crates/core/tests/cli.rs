use std::fs;
use std::process::{Command, Output};

use qgames::cli::verify::{ClaimLedger, Verdict};
use qgames::gamedef::parse_game_file;
use qgames::solvers::EquilibriumReport;

fn qgames(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgames"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qgames(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,q,payoff_a,payoff_b"));
    lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect()
}

#[test]
fn classical_hawk_dove_table() {
    let out = stdout(&[
        "table", "--game", "hd", "--v", "50", "--i", "100", "--d", "10", "--format", "json",
    ]);
    let g = parse_game_file(&out).unwrap();
    assert_eq!(g.payoffs()[0], vec![(-25.0, -25.0), (50.0, 0.0)]);
    assert_eq!(g.payoffs()[1], vec![(0.0, 50.0), (15.0, 15.0)]);
}

#[test]
fn eisert_prisoners_dilemma_table() {
    let out = stdout(&[
        "table",
        "--game",
        "pd",
        "--scheme",
        "eisert",
        "--strategies",
        "C,D,Q",
        "--format",
        "json",
    ]);
    let g = parse_game_file(&out).unwrap();
    assert_eq!(g.labels_a(), ["C", "D", "Q"]);
    assert_eq!(
        g.payoffs(),
        [
            vec![(3.0, 3.0), (0.0, 5.0), (1.0, 1.0)],
            vec![(5.0, 0.0), (1.0, 1.0), (0.0, 5.0)],
            vec![(1.0, 1.0), (5.0, 0.0), (3.0, 3.0)],
        ]
    );
}

#[test]
fn marinatto_weber_corner_table() {
    let out = stdout(&[
        "table",
        "--game",
        "hd",
        "--scheme",
        "mw",
        "--state",
        "bell",
        "--strategies",
        "H,D",
        "--format",
        "json",
    ]);
    let g = parse_game_file(&out).unwrap();
    // Surface corners: (1,1) and (0,0) give −5, the off corners 25.
    assert_eq!(
        g.payoffs(),
        [vec![(-5.0, -5.0), (25.0, 25.0)], vec![(25.0, 25.0), (-5.0, -5.0)]]
    );
}

#[test]
fn table_formats() {
    let ascii = stdout(&["table", "--game", "pd"]);
    assert_eq!(ascii, "   C       D\nC  (3, 3)  (0, 5)\nD  (5, 0)  (1, 1)\n");
    let csv = stdout(&["table", "--game", "pd", "--format", "csv"]);
    assert!(csv.starts_with("row,col,payoff_a,payoff_b\nC,C,3,3\n"));
}

#[test]
fn u_literal_strategies() {
    let run = |list: &str| {
        let text = stdout(&[
            "table",
            "--game",
            "pd",
            "--scheme",
            "eisert",
            "--strategies",
            list,
            "--format",
            "json",
        ]);
        parse_game_file(&text).unwrap()
    };
    let named = run("C,D");
    let literal = run("u(0,0),u(3.141592653589793,0)");
    assert_eq!(literal.labels_a(), ["u(0,0)", "u(3.141592653589793,0)"]);
    assert_eq!(named.payoffs(), literal.payoffs());
    let csv = stdout(&[
        "table",
        "--game",
        "pd",
        "--scheme",
        "eisert",
        "--strategies",
        "u(0,0),D",
        "--format",
        "csv",
    ]);
    assert!(csv.contains("\n\"u(0,0)\",D,0,5\n"), "{csv}");
}

#[test]
fn scan_corners() {
    let hd = csv_rows(&stdout(&["scan", "--game", "hd", "--resolution", "2"]));
    assert_eq!(
        hd.iter().map(|r| r[2]).collect::<Vec<_>>(),
        vec![-5.0, 25.0, 25.0, -5.0]
    );
    let pd = csv_rows(&stdout(&["scan", "--game", "pd", "--resolution", "2"]));
    assert_eq!(pd.iter().map(|r| r[2]).collect::<Vec<_>>(), vec![2.0, 2.5, 2.5, 2.0]);
}

#[test]
fn scan_default_resolution_is_dense() {
    let rows = csv_rows(&stdout(&["scan"]));
    assert_eq!(rows.len(), 101 * 101);
}

#[test]
fn region_rows() {
    let rows = csv_rows(&stdout(&["region", "--game", "hd", "--threshold", "15"]));
    assert!(rows
        .iter()
        .any(|r| r[0] == 0.8 && r[1] == 0.1 && (r[2] - 17.2).abs() < 1e-9));
    assert!(rows.iter().all(|r| r[2] > 15.0));
    assert!(!rows.iter().any(|r| r[0] == 0.5 && r[1] == 0.5));
}

#[test]
fn region_empty_is_header_only() {
    assert_eq!(stdout(&["region", "--threshold", "1000"]), "p,q,payoff_a,payoff_b\n");
}

#[test]
fn solve_prisoners_dilemma() {
    let r: EquilibriumReport = serde_json::from_str(&stdout(&["solve", "--game", "pd"])).unwrap();
    assert_eq!(r.pure_nash, vec![(1, 1)]);
    assert_eq!(r.mixed_nash_2x2, Some(vec![(0.0, 0.0)]));
    assert!(r.ess.is_none());
}

#[test]
fn solve_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let hd = dir.path().join("hd.json");
    fs::write(&hd, stdout(&["table", "--game", "hd", "--format", "json"])).unwrap();
    let r: EquilibriumReport =
        serde_json::from_str(&stdout(&["solve", "--input", hd.to_str().unwrap(), "--ess"])).unwrap();
    assert_eq!(r.pure_nash, vec![(0, 1), (1, 0)]);
    assert!(!r.ess.as_ref().unwrap()[&1]);

    let t20 = dir.path().join("table20.json");
    fs::write(
        &t20,
        r#"{"labels_a": ["H","D","Q","R"], "labels_b": ["H","D","Q","R"], "payoffs": [
            [[-25,-25],[50,0],[15,15],[25,25]],
            [[0,50],[15,15],[50,0],[25,25]],
            [[15,15],[0,50],[15,15],[5,5]],
            [[25,25],[25,25],[5,5],[25,25]]]}"#,
    )
    .unwrap();
    let r: EquilibriumReport =
        serde_json::from_str(&stdout(&["solve", "--input", t20.to_str().unwrap(), "--ess"])).unwrap();
    assert!(r.ess.as_ref().unwrap()[&3]);
    assert!(r.pure_nash.contains(&(3, 3)));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let out = qgames(&["scan", "--resolution", "3", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        fs::read_to_string(&path).unwrap(),
        stdout(&["scan", "--resolution", "3"])
    );
}

#[test]
fn verify_ledger() {
    let text = stdout(&["verify"]);
    let ledger = ClaimLedger::from_json(&text).unwrap();
    assert_eq!(ledger.summary.families, ["D1", "D2", "D3", "D4"]);
    assert_eq!(ledger.summary.total, ledger.claims.len());
    for c in &ledger.claims {
        match c.verdict {
            Verdict::Match => assert!(c.family.is_none(), "{}", c.claim_id),
            Verdict::Discrepancy => assert_ne!(c.family.as_deref(), Some("UNEXPECTED"), "{}", c.claim_id),
        }
    }
    let t7 = ledger.get("T7-ALL").unwrap();
    assert_eq!((t7.verdict, t7.reported.len()), (Verdict::Match, 18));
    let qq = ledger.get("T16-QQ").unwrap();
    assert_eq!(qq.verdict, Verdict::Discrepancy);
    assert!(qq.computed.iter().all(|x| (x + 25.0).abs() < 1e-9));
    let max = ledger.get("EQ19-MAX").unwrap();
    assert_eq!(
        (max.reported.clone(), max.computed.clone(), max.verdict),
        (vec![25.0], vec![25.0], Verdict::Match)
    );
    // Round trip through the crate's own parser is lossless.
    assert_eq!(ClaimLedger::from_json(&ledger.to_json()).unwrap(), ledger);
}

#[test]
fn deterministic_output() {
    for args in [
        &["verify"][..],
        &["scan", "--game", "pd", "--resolution", "33"],
        &["region", "--game", "hd", "--resolution", "201"],
        &[
            "table",
            "--game",
            "hd",
            "--scheme",
            "mw",
            "--strategies",
            "H,D,Q,R",
            "--format",
            "csv",
        ],
    ] {
        assert_eq!(qgames(args).stdout, qgames(args).stdout, "{args:?}");
    }
}

#[test]
fn json_tables_round_trip() {
    let text = stdout(&[
        "table",
        "--game",
        "hd",
        "--scheme",
        "eisert",
        "--strategies",
        "H,D,Q,R",
        "--format",
        "json",
    ]);
    let g = parse_game_file(&text).unwrap();
    assert_eq!(format!("{}\n", g.to_json()), text);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| qgames(args).status.code().unwrap();
    assert_eq!(code(&["scan", "--resolution", "1"]), 2);
    assert_eq!(code(&["region", "--resolution", "0"]), 2);
    assert_eq!(code(&["table", "--game", "xx"]), 2);
    assert_eq!(
        code(&["table", "--game", "hd", "--scheme", "mw", "--strategies", "H,Z"]),
        2
    );
    assert_eq!(code(&["solve"]), 2);
    assert_eq!(code(&["bogus"]), 2);
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["solve", "--input", "/nonexistent/game.json"]), 1);
    // Out-of-domain angles are a computation error, not a usage error.
    assert_eq!(
        code(&["table", "--game", "pd", "--scheme", "eisert", "--strategies", "u(4,0)"]),
        1
    );
}

#[test]
fn malformed_game_file_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"labels_a": ["A"], "labels_b": ["B"], "payoffs": [[[1, "x"]]]}"#,
    )
    .unwrap();
    let out = qgames(&["solve", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("payoffs[0][0][1]"), "{err}");
}
