use std::io::Write;
use std::process::Command;

fn hd() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hd"))
}

fn stdout_of(cmd: &mut Command) -> String {
    let out = cmd.output().expect("binary runs");
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn table_t1_reproduces_reference_column() {
    let text = stdout_of(hd().args(["table", "t1"]));
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("orbital,n,kappa_neg,kappa_pos,states,delta,computed_present"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 32);
    // spot-check the first doublet at δ = 0.025
    let first: Vec<&str> = rows[0].split(',').collect();
    // "states" is quoted since it contains a comma
    assert!(rows[0].contains("(1s1/2,0d3/2)"));
    let computed: f64 = first[7].parse().unwrap();
    assert!((computed - 0.0972235).abs() < 1e-5);
}

#[test]
fn table_output_is_deterministic() {
    let a = stdout_of(hd().args(["table", "t2"]));
    let b = stdout_of(hd().args(["table", "t2"]));
    assert_eq!(a, b);
}

#[test]
fn energy_json_lines() {
    let text = stdout_of(hd().args([
        "energy",
        "--symmetry",
        "spin",
        "--scheme",
        "r1",
        "--n",
        "0",
        "--kappa",
        "1",
        "--delta",
        "0.025",
        "--format",
        "json",
    ]));
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect();
    assert_eq!(rows.len(), 2);
    let plus = rows.iter().find(|r| r["branch"] == "plus").unwrap();
    assert_eq!(plus["state_label"], "0p1/2");
    assert_eq!(plus["counting_number"], 2);
    assert_eq!(plus["valid"], "true");
    let e = plus["energy_fm_inv"].as_f64().unwrap();
    assert!((e + 0.0995915).abs() < 1e-5);
    let minus = rows.iter().find(|r| r["branch"] == "minus").unwrap();
    assert_eq!(minus["valid"], "false");
}

#[test]
fn invalid_state_exits_2() {
    // κ < 0 with n − l ≤ 0 has a nonpositive counting number
    let out = hd()
        .args(["energy", "--symmetry", "spin", "--n", "0", "--kappa", "-2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // unknown table id
    let out = hd().args(["table", "t3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unbound_wavefunction_exits_3() {
    // pseudospin proper-r1: the selected branch fails the bound-state checks
    let out = hd()
        .args([
            "wavefunction",
            "--symmetry",
            "pseudospin",
            "--scheme",
            "r1",
            "--constant",
            "0",
            "--n",
            "1",
            "--kappa",
            "2",
            "--delta",
            "0.025",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn wavefunction_emits_header_and_grid() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wf.csv");
    let out = hd()
        .args([
            "wavefunction",
            "--symmetry",
            "spin",
            "--scheme",
            "r2",
            "--constant",
            "0",
            "--n",
            "1",
            "--kappa",
            "1",
            "--delta",
            "0.25",
            "--points",
            "20001",
            "--output",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("# node_count=1"));
    assert!(text.contains("# energy_fm_inv="));
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data[0], "r,f_upper,g_lower");
    assert_eq!(data.len(), 20001 + 1);
    // normalization: Simpson over the emitted samples integrates to ~1
    let mut rows: Vec<(f64, f64, f64)> = Vec::new();
    for line in &data[1..] {
        let v: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        rows.push((v[0], v[1], v[2]));
    }
    let h = rows[1].0 - rows[0].0;
    let mut norm = 0.0;
    for (i, &(_, f, g)) in rows.iter().enumerate() {
        let w = if i == 0 || i == rows.len() - 1 {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        norm += w * (f * f + g * g);
    }
    norm *= h / 3.0;
    assert!((norm - 1.0).abs() < 1e-6, "norm {norm}");
}

#[test]
fn sweep_marks_complex_pairs_not_real() {
    // pseudospin quadratic loses its real roots along a mass scan
    let text = stdout_of(hd().args([
        "sweep",
        "--axis",
        "mass",
        "--from",
        "0.5",
        "--to",
        "12",
        "--steps",
        "40",
        "--symmetry",
        "pseudospin",
        "--delta",
        "0.25",
        "--n",
        "0",
        "--kappa",
        "2",
        "--jobs",
        "3",
    ]));
    assert!(text.lines().next().unwrap().starts_with("axis,axis_value,"));
    assert!(text.contains("not-real"), "expected a complex-pair region:\n{text}");
    assert!(text.contains(",true,") || text.contains(",false,"));
}

#[test]
fn sweep_rejects_bad_ranges() {
    let out = hd()
        .args([
            "sweep", "--axis", "delta", "--from", "-0.1", "--to", "0.2", "--steps", "5",
            "--symmetry", "spin",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = hd()
        .args([
            "sweep", "--axis", "delta", "--from", "0.1", "--to", "0.2", "--steps", "0",
            "--symmetry", "spin",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_is_order_deterministic_across_jobs() {
    let run = |jobs: &str| {
        stdout_of(hd().args([
            "sweep", "--axis", "delta", "--from", "0.025", "--to", "0.25", "--steps", "9",
            "--symmetry", "spin", "--states", "0:1,0:2", "--jobs", jobs,
        ]))
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn config_file_defaults_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.cfg");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# defaults for a spin run").unwrap();
    writeln!(f, "symmetry = spin").unwrap();
    writeln!(f, "mass = 9.0").unwrap();
    writeln!(f, "delta = 0.025").unwrap();
    drop(f);
    // config supplies symmetry and mass
    let with_cfg = stdout_of(hd().args(["energy", "--config", path.to_str().unwrap()]));
    // explicit flag overrides the config mass; result must differ
    let with_flag = stdout_of(hd().args([
        "energy",
        "--config",
        path.to_str().unwrap(),
        "--mass",
        "5.0",
    ]));
    assert_ne!(with_cfg, with_flag);
    // flag run equals the plain preset run at mass 5
    let plain = stdout_of(hd().args(["energy", "--symmetry", "spin", "--delta", "0.025"]));
    assert_eq!(with_flag, plain);
}

#[test]
fn compare_reports_oracle_columns() {
    let text = stdout_of(hd().args([
        "compare", "--symmetry", "spin", "--n", "0", "--kappa", "1", "--delta", "0.25",
    ]));
    let header = text
        .lines()
        .find(|l| l.starts_with("scheme,"))
        .expect("column header");
    assert_eq!(
        header,
        "scheme,closed_form,oracle_scheme_ode,oracle_exact_ode,closed_minus_oracle,scheme_minus_exact,note"
    );
    // three scheme rows, closed and oracle agree to the printed digits
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#') && !l.starts_with("scheme,")).collect();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        let closed: f64 = cols[1].parse().unwrap();
        let oracle: f64 = cols[2].parse().unwrap();
        assert!((closed - oracle).abs() < 1e-6, "{row}");
    }
}

#[test]
fn compare_pseudospin_reports_no_eigenvalue() {
    let text = stdout_of(hd().args([
        "compare",
        "--symmetry",
        "pseudospin",
        "--n",
        "0",
        "--kappa",
        "2",
        "--delta",
        "0.25",
    ]));
    assert!(text.contains("no eigenvalue"), "{text}");
}

#[test]
fn profile_emits_all_comparators() {
    let text = stdout_of(hd().args([
        "profile", "--symmetry", "pseudospin", "--kappa", "2", "--delta", "0.1", "--steps", "8",
        "--r-from", "0.5", "--r-to", "4.5",
    ]));
    assert!(text.starts_with("scheme,r,exact,approximated,abs_error"));
    for name in ["r2,", "r2-conventional,", "r1,", "w-squared,"] {
        assert!(text.contains(name), "missing {name}");
    }
    // the shifted substitution beats the conventional one pointwise at r = 1
    let err_of = |scheme: &str| -> f64 {
        text.lines()
            .find(|l| l.starts_with(scheme) && l.contains(",1.000000,"))
            .and_then(|l| l.rsplit(',').next())
            .unwrap()
            .parse()
            .unwrap()
    };
    assert!(err_of("r2,") < err_of("r2-conventional,"));
}
