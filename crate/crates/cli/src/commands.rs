use std::io::Write;

use hd_core::model::spectroscopic_label;
use hd_core::oracle::{self, CentrifugalMode};
use hd_core::spectra::{self, EnergySolution};
use hd_core::spinor;
use hd_core::tables::{computed_entry, TableId, DELTAS};
use hd_core::{Error, ModelParams, QuantumState, Scheme, SchemeConfig};

use crate::output::{energy_rows, fmt_sig, write_energy_rows, EnergyRow, OutputFormat};

pub fn cmd_table(table: TableId, format: OutputFormat, out: &mut dyn Write) -> std::io::Result<()> {
    let (col_a, col_b) = table.column_names();
    match format {
        OutputFormat::Csv => {
            let mut wtr = csv::Writer::from_writer(vec![]);
            let mut header = vec![
                "orbital".to_string(),
                "n".into(),
                "kappa_neg".into(),
                "kappa_pos".into(),
                "states".into(),
                "delta".into(),
                format!("computed_{col_a}"),
                format!("published_{col_a}"),
            ];
            if table == TableId::T1 {
                header.push(format!("published_{col_b}"));
            } else {
                header.push(format!("computed_{col_b}"));
                header.push(format!("published_{col_b}"));
            }
            header.push("counting_number".into());
            wtr.write_record(&header).map_err(std::io::Error::other)?;
            for row in table.rows() {
                for (i, &delta) in DELTAS.iter().enumerate() {
                    let a = computed_entry(table, row, delta, false).map_err(std::io::Error::other)?;
                    let mut rec = vec![
                        row.orbital.to_string(),
                        row.n.to_string(),
                        row.kappa_neg.to_string(),
                        row.kappa_pos.to_string(),
                        row.states.to_string(),
                        fmt_sig(delta, 7),
                        a.selected_energy().map(|e| fmt_sig(e, 7)).unwrap_or_default(),
                        fmt_sig(row.values_a[i], 7),
                    ];
                    if table == TableId::T1 {
                        rec.push(fmt_sig(row.values_b[i], 7));
                    } else {
                        let b = computed_entry(table, row, delta, true).map_err(std::io::Error::other)?;
                        rec.push(b.selected_energy().map(|e| fmt_sig(e, 7)).unwrap_or_default());
                        rec.push(fmt_sig(row.values_b[i], 7));
                    }
                    rec.push(a.counting_number.to_string());
                    wtr.write_record(&rec).map_err(std::io::Error::other)?;
                }
            }
            out.write_all(&wtr.into_inner().map_err(|e| std::io::Error::other(e.into_error()))?)
        }
        OutputFormat::Json => {
            for row in table.rows() {
                for (i, &delta) in DELTAS.iter().enumerate() {
                    let a = computed_entry(table, row, delta, false).map_err(std::io::Error::other)?;
                    let mut obj = serde_json::json!({
                        "orbital": row.orbital,
                        "n": row.n,
                        "kappa_neg": row.kappa_neg,
                        "kappa_pos": row.kappa_pos,
                        "states": row.states,
                        "delta": delta,
                        format!("computed_{col_a}"): a.selected_energy(),
                        format!("published_{col_a}"): row.values_a[i],
                        "counting_number": a.counting_number,
                    });
                    if table == TableId::T1 {
                        obj[format!("published_{col_b}")] = row.values_b[i].into();
                    } else {
                        let b = computed_entry(table, row, delta, true).map_err(std::io::Error::other)?;
                        obj[format!("computed_{col_b}")] =
                            b.selected_energy().map_or(serde_json::Value::Null, |e| e.into());
                        obj[format!("published_{col_b}")] = row.values_b[i].into();
                    }
                    writeln!(out, "{obj}")?;
                }
            }
            Ok(())
        }
    }
}

pub fn solve_energy(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
) -> Result<EnergySolution, Error> {
    spectra::energy(params, state, scheme)
}

pub fn cmd_energy(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CommandError> {
    let sol = solve_energy(params, state, scheme)?;
    let rows = energy_rows(state, params.symmetry, scheme.scheme.as_str(), params.screening, &sol);
    write_energy_rows(out, format, &rows)?;
    Ok(())
}

pub fn cmd_wavefunction(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
    n_points: usize,
    out: &mut dyn Write,
) -> Result<(), CommandError> {
    let sol = solve_energy(params, state, scheme)?;
    let energy = sol.selected_energy().ok_or_else(|| {
        Error::NotBound("the selected branch has no real energy for these parameters".into())
    })?;
    if !sol.branch_valid(sol.selected.expect("selected exists when energy does")) {
        return Err(Error::NotBound(format!(
            "selected energy {energy} fails the bound-state conditions"
        ))
        .into());
    }
    let solution = spinor::build_normalized(params, state, energy, scheme, n_points)?;
    let nodes = spinor::principal_node_count(&solution, params.symmetry);
    let spec = spinor::spec_for(params, state, scheme);
    let principal = spinor::principal_component(&solution, params.symmetry);
    let residual = spinor::ode_residual(principal, &solution.grid, &spec, energy)?;
    writeln!(out, "# energy_fm_inv={}", fmt_sig(energy, 10))?;
    writeln!(out, "# norm_constant={}", fmt_sig(solution.norm_constant, 10))?;
    writeln!(out, "# node_count={nodes}")?;
    writeln!(out, "# ode_residual_max_rel={:.3e}", residual.max_rel)?;
    writeln!(out, "# ode_residual_rms_rel={:.3e}", residual.rms_rel)?;
    writeln!(out, "r,f_upper,g_lower")?;
    for ((&r, f), g) in solution.grid.points().iter().zip(&solution.f).zip(&solution.g) {
        writeln!(out, "{},{},{}", fmt_sig(r, 9), fmt_sig(*f, 9), fmt_sig(*g, 9))?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    Delta,
    Mass,
    Constant,
}

impl SweepAxis {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepAxis::Delta => "delta",
            SweepAxis::Mass => "mass",
            SweepAxis::Constant => "constant",
        }
    }
}

pub struct SweepRequest {
    pub axis: SweepAxis,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub states: Vec<QuantumState>,
    pub jobs: usize,
}

pub fn cmd_sweep(
    params: &ModelParams,
    scheme: &SchemeConfig,
    req: &SweepRequest,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CommandError> {
    if req.steps == 0 {
        return Err(Error::Domain("sweep needs at least one step".into()).into());
    }
    if req.states.is_empty() {
        return Err(Error::Domain("sweep needs at least one state".into()).into());
    }
    if req.axis == SweepAxis::Delta && (req.from <= 0.0 || req.to <= 0.0) {
        return Err(Error::Domain("delta sweep range must stay positive".into()).into());
    }
    let values: Vec<f64> = (0..=req.steps)
        .map(|i| req.from + (req.to - req.from) * i as f64 / req.steps as f64)
        .collect();
    // pure units of work fanned out over a small pool; results keep input order
    let jobs = req.jobs.max(1).min(values.len().max(1));
    let mut results: Vec<Vec<EnergyRow>> = vec![Vec::new(); values.len()];
    let chunk = values.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        for (worker, slot) in results.chunks_mut(chunk).enumerate() {
            let values = &values;
            let states = &req.states;
            scope.spawn(move || {
                for (off, cell) in slot.iter_mut().enumerate() {
                    let idx = worker * chunk + off;
                    let value = values[idx];
                    let p = match req.axis {
                        SweepAxis::Delta => ModelParams::new(
                            params.mass,
                            value,
                            params.strength,
                            params.symmetry_constant,
                            params.symmetry,
                        ),
                        SweepAxis::Mass => ModelParams::new(
                            value,
                            params.screening,
                            params.strength,
                            params.symmetry_constant,
                            params.symmetry,
                        ),
                        SweepAxis::Constant => ModelParams::new(
                            params.mass,
                            params.screening,
                            params.strength,
                            value,
                            params.symmetry,
                        ),
                    };
                    let Ok(p) = p else { continue };
                    for &state in states {
                        if let Ok(sol) = solve_energy(&p, state, scheme) {
                            let mut rows = energy_rows(
                                state,
                                p.symmetry,
                                scheme.scheme.as_str(),
                                p.screening,
                                &sol,
                            );
                            for row in &mut rows {
                                row.axis = Some(req.axis.as_str().to_string());
                                row.axis_value = Some(value);
                            }
                            cell.extend(rows);
                        }
                    }
                }
            });
        }
    });
    let rows: Vec<EnergyRow> = results.into_iter().flatten().collect();
    write_energy_rows(out, format, &rows)?;
    Ok(())
}

pub fn cmd_compare(
    params: &ModelParams,
    state: QuantumState,
    out: &mut dyn Write,
) -> Result<(), CommandError> {
    let schemes = [
        SchemeConfig::improved(),
        SchemeConfig::conventional(),
        SchemeConfig::proper_r1(),
    ];
    writeln!(
        out,
        "# state={} n={} kappa={} {}",
        spectroscopic_label(state, params.symmetry),
        state.n,
        state.kappa,
        params.symmetry.as_str()
    )?;
    writeln!(
        out,
        "# mass={} delta={} strength={} constant={}",
        params.mass, params.screening, params.strength, params.symmetry_constant
    )?;
    writeln!(
        out,
        "scheme,closed_form,oracle_scheme_ode,oracle_exact_ode,closed_minus_oracle,scheme_minus_exact,note"
    )?;
    for scheme in schemes {
        let mut note = String::new();
        let closed = match solve_energy(params, state, &scheme) {
            Ok(sol) => sol.selected_energy(),
            Err(e) => {
                note = format!("closed form: {e}");
                None
            }
        };
        let mode = match scheme.scheme {
            Scheme::ProperR1 => CentrifugalMode::SchemeR1,
            _ => CentrifugalMode::SchemeR2 { d0: scheme.effective_d0() },
        };
        let (oracle_scheme, oracle_exact) = match closed {
            Some(e) => {
                let half = 0.05f64.max(0.05 * e.abs());
                let bracket = (e - half, e + half);
                let spec = oracle::build_ode(params, state, mode);
                let got = oracle::shoot_eigenvalue(&spec, state.n as usize, bracket, 1e-9);
                let exact_spec = oracle::build_ode(params, state, CentrifugalMode::Exact);
                let wide = ((e - 4.0 * half), (e + 4.0 * half));
                let got_exact =
                    oracle::shoot_eigenvalue(&exact_spec, state.n as usize, wide, 1e-9);
                let os = match got {
                    Ok(r) => Some(r.energy),
                    Err(err) => {
                        note = format!("scheme oracle: {err}");
                        None
                    }
                };
                let oe = match got_exact {
                    Ok(r) => Some(r.energy),
                    Err(err) => {
                        if !note.is_empty() {
                            note.push_str("; ");
                        }
                        note.push_str(&format!("exact oracle: {err}"));
                        None
                    }
                };
                (os, oe)
            }
            None => (None, None),
        };
        let diff1 = match (closed, oracle_scheme) {
            (Some(a), Some(b)) => fmt_sig(a - b, 4),
            _ => String::new(),
        };
        let diff2 = match (oracle_scheme, oracle_exact) {
            (Some(a), Some(b)) => fmt_sig(a - b, 4),
            _ => String::new(),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            scheme.scheme.as_str(),
            closed.map(|e| fmt_sig(e, 8)).unwrap_or_default(),
            oracle_scheme.map(|e| fmt_sig(e, 8)).unwrap_or_default(),
            oracle_exact.map(|e| fmt_sig(e, 8)).unwrap_or_default(),
            diff1,
            diff2,
            note.replace(',', ";"),
        )?;
    }
    Ok(())
}

/// Orbital-term substitution quality along a radial grid, one block per
/// comparator (the three schemes plus the single-term W² ansatz).
#[allow(clippy::too_many_arguments)]
pub fn cmd_profile(
    delta: f64,
    kappa: i32,
    symmetry: hd_core::Symmetry,
    d0: f64,
    r_from: f64,
    r_to: f64,
    steps: usize,
    out: &mut dyn Write,
) -> Result<(), CommandError> {
    use hd_core::approx::{error_profile, OrbitalSign, ProfileKind};
    if steps == 0 {
        return Err(Error::Domain("profile needs at least one step".into()).into());
    }
    let grid: Vec<f64> = (0..=steps)
        .map(|i| r_from + (r_to - r_from) * i as f64 / steps as f64)
        .collect();
    let sign = OrbitalSign::for_symmetry(symmetry);
    let kinds: [(&str, ProfileKind); 4] = [
        ("r2", ProfileKind::Scheme(SchemeConfig::improved_with_d0(d0))),
        ("r2-conventional", ProfileKind::Scheme(SchemeConfig::conventional())),
        ("r1", ProfileKind::Scheme(SchemeConfig::proper_r1())),
        ("w-squared", ProfileKind::WSquaredOnly),
    ];
    writeln!(out, "scheme,r,exact,approximated,abs_error")?;
    for (name, kind) in kinds {
        let profile = error_profile(kind, delta, kappa, sign, &grid)?;
        for row in &profile.rows {
            writeln!(
                out,
                "{},{},{},{},{}",
                name,
                fmt_sig(row.r, 7),
                fmt_sig(row.exact, 7),
                fmt_sig(row.approximated, 7),
                fmt_sig(row.abs_error, 4)
            )?;
        }
    }
    Ok(())
}

/// Errors bubbled to main for exit-code mapping.
#[derive(Debug)]
pub enum CommandError {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Core(e)
    }
}

impl From<std::io::Error> for CommandError {
    fn from(e: std::io::Error) -> Self {
        CommandError::Io(e)
    }
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CommandError::Core(e) => write!(f, "{e}"),
            CommandError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl CommandError {
    /// 2 invalid configuration, 3 no bound state, 4 oracle failure, 1 io.
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Core(Error::Domain(_)) | CommandError::Core(Error::InvalidState(_)) => 2,
            CommandError::Core(Error::NotBound(_))
            | CommandError::Core(Error::DivergentComponent(_)) => 3,
            CommandError::Core(Error::NoEigenvalue(_))
            | CommandError::Core(Error::Integration(_)) => 4,
            CommandError::Io(_) => 1,
        }
    }
}

/// States string "n:kappa[,n:kappa...]".
pub fn parse_states(s: &str) -> Result<Vec<QuantumState>, Error> {
    let mut states = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (n, k) = part
            .split_once(':')
            .ok_or_else(|| Error::Domain(format!("state '{part}' is not n:kappa")))?;
        let n: u32 = n
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad n in '{part}'")))?;
        let k: i32 = k
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad kappa in '{part}'")))?;
        states.push(QuantumState::new(n, k)?);
    }
    if states.is_empty() {
        return Err(Error::Domain("no states given".into()));
    }
    Ok(states)
}
