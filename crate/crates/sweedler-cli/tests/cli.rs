//! End-to-end tests driving the binary as a subprocess: command output,
//! format equivalence, round trips, and the exit-code contract.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sweedler"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("sweedler-cli-{}-{name}", std::process::id()));
    p
}

fn json_out(args: &[&str]) -> Value {
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, stdout, stderr) = run(&full);
    assert_eq!(code, 0, "expected success, stderr: {stderr}");
    serde_json::from_str(&stdout).expect("valid JSON output")
}

// --- verify ---------------------------------------------------------------

#[test]
fn verify_builtin_h8_passes_with_ten_axiom_lines() {
    let (code, stdout, _) = run(&["verify", "--builtin", "h8"]);
    assert_eq!(code, 0);
    let axiom_lines = stdout
        .lines()
        .take_while(|l| !l.starts_with("automorphism"))
        .filter(|l| l.starts_with("PASS"))
        .count();
    assert_eq!(axiom_lines, 10);
    assert!(stdout.contains("all checks passed"));
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn verify_reports_every_builtin_clean() {
    for name in ["h8", "c2", "c3", "c4", "c6", "s3"] {
        let (code, stdout, _) = run(&["verify", "--builtin", name]);
        assert_eq!(code, 0, "builtin {name}");
        assert!(stdout.contains("all checks passed"), "builtin {name}");
    }
}

#[test]
fn verify_json_carries_the_same_checks_as_text() {
    let report = json_out(&["verify", "--builtin", "h8"]);
    assert_eq!(report["all_passed"], Value::Bool(true));
    let axioms = report["axioms"].as_array().unwrap();
    assert_eq!(axioms.len(), 10);
    assert!(axioms.iter().all(|c| c["passed"] == Value::Bool(true)));
    let autos = report["automorphisms"].as_array().unwrap();
    assert_eq!(autos.len(), 4);
    for auto in autos {
        assert!(auto["checks"].as_array().unwrap().iter().all(|c| c["passed"] == Value::Bool(true)));
    }
}

#[test]
fn verify_flags_a_broken_file_naming_the_check() {
    let (code, exported, _) = run(&["export", "--builtin", "h8"]);
    assert_eq!(code, 0);
    let mut file: Value = serde_json::from_str(&exported).unwrap();
    file["counit"][0] = Value::String("2".to_string());
    let path = temp_path("broken-counit.alg");
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();

    let (code, stdout, stderr) = run(&["verify", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1);
    assert!(stdout.contains("FAIL"));
    assert!(stderr.contains("check failed:"));
}

// --- exponent -------------------------------------------------------------

#[test]
fn exponent_whole_algebra_examples() {
    let (code, stdout, _) = run(&["exponent", "--builtin", "h8", "--aut", "tau2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("exponent: 4"));
    assert!(stdout.contains("d_tau: 8"));

    let (code, stdout, _) = run(&["exponent", "--builtin", "h8", "--aut", "tau1", "--module", "V5"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("exponent: 8"));
}

#[test]
fn exponent_both_methods_agree_and_say_so() {
    let (code, stdout, _) =
        run(&["exponent", "--builtin", "h8", "--aut", "tau3", "--method", "both"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("exponent (definition): 2"));
    assert!(stdout.contains("exponent (q-element): 2"));
    assert!(stdout.contains("methods agree"));
}

#[test]
fn exponent_q_method_alone_matches_the_definition() {
    for (aut, module, expected) in
        [("tau2", Some("V5"), "4"), ("tau4", Some("V3"), "2"), ("tau1", None, "8")]
    {
        let mut args = vec!["exponent", "--builtin", "h8", "--aut", aut, "--method", "q"];
        if let Some(m) = module {
            args.extend(["--module", m]);
        }
        let (code, stdout, stderr) = run(&args);
        assert_eq!(code, 0, "{aut}/{module:?}: {stderr}");
        assert!(stdout.contains(&format!("exponent: {expected}")), "{aut}/{module:?}: {stdout}");
    }
}

#[test]
fn exponent_text_and_json_agree_on_values() {
    let report = json_out(&["exponent", "--builtin", "h8", "--aut", "tau2"]);
    assert_eq!(report["results"][0]["exponent"], Value::from(4u64));
    assert_eq!(report["results"][0]["d_tau"], Value::from(8u64));
    assert_eq!(report["module"], Value::Null);
    assert_eq!(report["order"], Value::from(2u64));

    let (_, stdout, _) = run(&["exponent", "--builtin", "h8", "--aut", "tau2"]);
    assert!(stdout.contains("exponent: 4"));
    assert!(stdout.contains("d_tau: 8"));
}

#[test]
fn exponent_accepts_trivial_regular_and_file_modules() {
    let (code, stdout, _) =
        run(&["exponent", "--builtin", "h8", "--aut", "tau2", "--module", "trivial"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("exponent: 1"));

    let (code, stdout, _) =
        run(&["exponent", "--builtin", "h8", "--aut", "tau2", "--module", "regular"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("exponent: 4"));

    let rep = r#"{
        "algebra": "h8",
        "dim_V": 2,
        "action": [
            [["1","0"],["0","1"]],
            [["1","0"],["0","-1"]],
            [["-1","0"],["0","1"]],
            [["-1","0"],["0","-1"]],
            [["0","1"],["1","0"]],
            [["0","1"],["-1","0"]],
            [["0","-1"],["1","0"]],
            [["0","-1"],["-1","0"]]
        ]
    }"#;
    let path = temp_path("swap-module.rep");
    std::fs::write(&path, rep).unwrap();
    let (code, stdout, stderr) =
        run(&["exponent", "--builtin", "h8", "--aut", "tau1", "--module", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0, "{stderr}");
    assert!(stdout.contains("exponent: 8"));
}

// --- indicators -----------------------------------------------------------

#[test]
fn indicators_both_methods_agree_entry_by_entry() {
    let report = json_out(&[
        "indicators",
        "--builtin",
        "h8",
        "--aut",
        "tau2",
        "--module",
        "V5",
        "--m-max",
        "16",
        "--method",
        "both",
    ]);
    let entries = report["entries"].as_array().unwrap();
    let ms: Vec<u64> = entries.iter().map(|e| e["m"].as_u64().unwrap()).collect();
    assert_eq!(ms, vec![2, 4, 6, 8, 10, 12, 14, 16]);
    assert_eq!(report["period"], Value::from(8u64));
    // One full period repeats inside the window.
    let values: Vec<&str> = entries.iter().map(|e| e["value"].as_str().unwrap()).collect();
    assert_eq!(values[..4], values[4..]);
    assert_eq!(entries[3]["value"], Value::String("2".to_string()));
    assert_eq!(report["all_rational_integers"], Value::Bool(true));
}

#[test]
fn indicators_trivial_module_is_all_ones() {
    let report = json_out(&[
        "indicators", "--builtin", "h8", "--aut", "tau1", "--module", "trivial", "--m-max", "6",
    ]);
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 6);
    assert!(entries.iter().all(|e| e["value"] == Value::String("1".to_string())));
    assert_eq!(report["period"], Value::from(1u64));
    assert_eq!(report["ring_conductor"], Value::from(1u64));
}

#[test]
fn indicators_tabulate_only_multiples_of_the_order() {
    for (m_max, expect) in [(5u64, vec![2u64, 4]), (2, vec![2]), (1, vec![])] {
        let report = json_out(&[
            "indicators",
            "--builtin",
            "h8",
            "--aut",
            "tau2",
            "--module",
            "V1",
            "--m-max",
            &m_max.to_string(),
        ]);
        let ms: Vec<u64> =
            report["entries"].as_array().unwrap().iter().map(|e| e["m"].as_u64().unwrap()).collect();
        assert_eq!(ms, expect, "m_max = {m_max}");
    }
}

#[test]
fn indicators_default_window_is_four_periods() {
    let report =
        json_out(&["indicators", "--builtin", "h8", "--aut", "tau2", "--module", "V5"]);
    assert_eq!(report["m_max"], Value::from(32u64));
    assert_eq!(report["entries"].as_array().unwrap().len(), 16);
}

#[test]
fn indicators_text_shows_table_and_footer() {
    let (code, stdout, _) = run(&[
        "indicators", "--builtin", "h8", "--aut", "tau2", "--module", "V5", "--m-max", "8",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("m  value"));
    assert!(stdout.contains("period: 8"));
    assert!(stdout.contains("ring: Z"));
    assert!(stdout.contains("rational integers only: yes"));
}

// --- tables ---------------------------------------------------------------

#[test]
fn tables_render_all_three_tables_cell_for_cell() {
    let (code, stdout, _) = run(&["tables", "--builtin", "h8"]);
    assert_eq!(code, 0);

    let row = |prefix: &str| {
        stdout
            .lines()
            .find(|l| l.starts_with(prefix))
            .unwrap_or_else(|| panic!("row {prefix} present"))
            .split_whitespace()
            .skip(1)
            .map(str::to_string)
            .collect::<Vec<_>>()
    };

    // Character table, including the called-out cells.
    assert_eq!(row("chi_1"), ["1", "1", "1", "1", "1", "1", "1", "1"]);
    assert_eq!(row("chi_2"), ["1", "1", "1", "1", "-1", "-1", "-1", "-1"]);
    assert_eq!(row("chi_3"), ["1", "-1", "-1", "1", "i", "-i", "-i", "i"]);
    assert_eq!(row("chi_4"), ["1", "-1", "-1", "1", "-i", "i", "i", "-i"]);
    assert_eq!(row("chi_5"), ["2", "0", "0", "-2", "0", "0", "0", "0"]);

    // Automorphism images of the generators.
    assert_eq!(row("tau1  "), ["x", "y", "z"]);
    assert_eq!(row("tau2  "), ["x", "y", "xyz"]);
    let tau3 = stdout.lines().find(|l| l.starts_with("tau3") && l.contains("1/2")).unwrap();
    assert!(tau3.contains("1/2*z + 1/2*xz + 1/2*yz - 1/2*xyz"));
    let tau4 = stdout.lines().find(|l| l.starts_with("tau4") && l.contains("1/2")).unwrap();
    assert!(tau4.contains("-1/2*z + 1/2*xz + 1/2*yz + 1/2*xyz"));

    // Exponent table rows (numeric rows come after the automorphism table).
    let exp_row = |name: &str| {
        stdout
            .lines()
            .filter(|l| l.starts_with(name))
            .filter_map(|l| {
                let cells: Vec<u64> =
                    l.split_whitespace().skip(1).filter_map(|c| c.parse().ok()).collect();
                (cells.len() == 6).then_some(cells)
            })
            .next()
            .unwrap_or_else(|| panic!("exponent row {name} present"))
    };
    assert_eq!(exp_row("tau1"), [1, 2, 2, 2, 8, 8]);
    assert_eq!(exp_row("tau2"), [1, 1, 1, 1, 4, 4]);
    assert_eq!(exp_row("tau3"), [1, 1, 2, 2, 2, 2]);
    assert_eq!(exp_row("tau4"), [1, 1, 2, 2, 2, 2]);
}

#[test]
fn tables_json_matches_the_text_values() {
    let report = json_out(&["tables", "--builtin", "h8"]);
    let chi3: Vec<&str> = report["characters"]["rows"][2]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(chi3, ["1", "-1", "-1", "1", "i", "-i", "-i", "i"]);
    assert_eq!(report["automorphisms"]["rows"][1]["images"][2], Value::String("xyz".into()));
    let tau1: Vec<u64> = report["exponents"]["rows"][0]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(tau1, [1, 2, 2, 2, 8, 8]);
}

// --- export ---------------------------------------------------------------

#[test]
fn export_verify_round_trip_passes() {
    let (code, exported, _) = run(&["export", "--builtin", "h8"]);
    assert_eq!(code, 0);
    assert!(exported.contains("\"1/2\""), "comultiplication halves present");
    let path = temp_path("roundtrip.alg");
    std::fs::write(&path, &exported).unwrap();

    let (code, stdout, _) = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 0, "re-imported algebra verifies");
    assert!(stdout.contains("all checks passed"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn exported_algebra_reproduces_builtin_exponents() {
    let (code, exported, _) = run(&["export", "--builtin", "h8"]);
    assert_eq!(code, 0);
    let path = temp_path("exponents.alg");
    std::fs::write(&path, &exported).unwrap();

    for aut in ["tau1", "tau2", "tau3", "tau4"] {
        let from_file = json_out(&["exponent", path.to_str().unwrap(), "--aut", aut]);
        let from_builtin = json_out(&["exponent", "--builtin", "h8", "--aut", aut]);
        assert_eq!(from_file, from_builtin, "automorphism {aut}");
    }
    std::fs::remove_file(&path).ok();
}

#[test]
fn export_is_deterministic_for_every_builtin() {
    for name in ["h8", "c2", "c3", "c4", "c6", "s3"] {
        let (code, first, _) = run(&["export", "--builtin", name]);
        assert_eq!(code, 0, "builtin {name}");
        let (_, second, _) = run(&["export", "--builtin", name]);
        assert_eq!(first, second, "builtin {name}");
        assert!(first.ends_with('\n'));
    }
}

// --- exit codes -----------------------------------------------------------

#[test]
fn usage_errors_exit_4() {
    let cases: &[&[&str]] = &[
        &["verify"],
        &["verify", "--builtin", "nope"],
        &["exponent", "--builtin", "h8", "--aut", "tau9"],
        &["exponent", "--builtin", "h8", "--aut", "tau1", "--module", "V9"],
        &["exponent", "--builtin", "h8", "--aut", "tau1", "--method", "zzz"],
        &["tables", "--builtin", "c2"],
        &["tables", "--builtin", "nope"],
        &["export", "--builtin", "nope"],
        &["indicators", "--builtin", "h8", "--aut", "tau1"],
        &["nonsense-command"],
    ];
    for args in cases {
        let (code, _, _) = run(args);
        assert_eq!(code, 4, "args: {args:?}");
    }
}

#[test]
fn conflicting_file_and_builtin_exit_4() {
    let path = temp_path("conflict.alg");
    std::fs::write(&path, "{}").unwrap();
    let (code, _, _) = run(&["verify", path.to_str().unwrap(), "--builtin", "h8"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 4);
}

#[test]
fn parse_errors_exit_2() {
    let (code, _, stderr) = run(&["verify", "/nonexistent/algebra.alg"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"));

    let path = temp_path("bad.alg");
    std::fs::write(&path, "{ not json").unwrap();
    let (code, _, _) = run(&["verify", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 2);
}

#[test]
fn bad_literal_in_file_exits_2() {
    let (_, exported, _) = run(&["export", "--builtin", "c2"]);
    let path = temp_path("bad-literal.alg");
    std::fs::write(&path, exported.replace("\"1\"", "\"1 +\"")).unwrap();
    let (code, _, stderr) = run(&["verify", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 2);
    assert!(stderr.contains("literal"));
}

#[test]
fn exceeded_bound_exits_3_with_the_stated_message() {
    let (code, _, stderr) =
        run(&["exponent", "--builtin", "h8", "--aut", "tau1", "--module", "V5", "--bound", "3"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("bound exceeded; exponent may be infinite"));
}

#[test]
fn help_and_version_exit_0() {
    for args in [&["--help"][..], &["--version"][..], &["exponent", "--help"][..]] {
        let (code, _, _) = run(args);
        assert_eq!(code, 0, "args: {args:?}");
    }
}

// --- whole-corpus stability ----------------------------------------------

#[test]
fn every_builtin_automorphism_pair_computes_an_exponent() {
    let pairs: &[(&str, &[&str])] = &[
        ("h8", &["tau1", "tau2", "tau3", "tau4"]),
        ("c2", &["id"]),
        ("c3", &["id", "inv"]),
        ("c4", &["id", "inv"]),
        ("c6", &["id", "inv"]),
        ("s3", &["id", "conj_r", "conj_r2", "conj_s", "conj_rs", "conj_r2s"]),
    ];
    for (name, auts) in pairs {
        for aut in *auts {
            let (code, stdout, stderr) = run(&["exponent", "--builtin", name, "--aut", aut]);
            assert_eq!(code, 0, "{name}/{aut}: {stderr}");
            assert!(stdout.contains("exponent: "), "{name}/{aut}");
        }
    }
}
