use std::io::Write;

use hd_core::spectra::{Branch, EnergySolution};
use hd_core::{QuantumState, Symmetry};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Fixed-significant-digit formatting (7 matches the reference tables).
pub fn fmt_sig(x: f64, sig: i32) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let dec = (sig - 1 - mag).max(0) as usize;
    format!("{x:.dec$}")
}

/// One wire row per (state, branch):
/// state_label,n,kappa,l_or_ltilde,delta,scheme,branch,energy_fm_inv,valid,counting_number,
/// optionally prefixed by the sweep axis columns.
#[derive(Debug, Clone, Serialize)]
pub struct EnergyRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axis: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axis_value: Option<f64>,
    pub state_label: String,
    pub n: u32,
    pub kappa: i32,
    pub l_or_ltilde: u32,
    pub delta: f64,
    pub scheme: String,
    pub branch: String,
    /// None encodes a complex pair (empty cell / null).
    pub energy_fm_inv: Option<f64>,
    /// "true", "false", or "not-real".
    pub valid: String,
    pub counting_number: i64,
}

pub fn energy_rows(
    state: QuantumState,
    symmetry: Symmetry,
    scheme_name: &str,
    delta: f64,
    sol: &EnergySolution,
) -> Vec<EnergyRow> {
    let label = hd_core::model::spectroscopic_label(state, symmetry);
    let orbital = hd_core::model::derive_orbital(state, symmetry);
    [Branch::Plus, Branch::Minus]
        .into_iter()
        .map(|branch| {
            let energy = sol.branch_energy(branch);
            let valid = match energy {
                None => "not-real".to_string(),
                Some(_) => sol.branch_valid(branch).to_string(),
            };
            EnergyRow {
                axis: None,
                axis_value: None,
                state_label: label.clone(),
                n: state.n,
                kappa: state.kappa,
                l_or_ltilde: orbital,
                delta,
                scheme: scheme_name.to_string(),
                branch: branch.as_str().to_string(),
                energy_fm_inv: energy,
                valid,
                counting_number: sol.counting_number,
            }
        })
        .collect()
}

pub fn write_energy_rows(
    out: &mut dyn Write,
    format: OutputFormat,
    rows: &[EnergyRow],
) -> std::io::Result<()> {
    let with_axis = rows.iter().any(|r| r.axis.is_some());
    match format {
        OutputFormat::Csv => {
            let mut wtr = csv::Writer::from_writer(vec![]);
            let mut header: Vec<&str> = Vec::new();
            if with_axis {
                header.extend(["axis", "axis_value"]);
            }
            header.extend([
                "state_label",
                "n",
                "kappa",
                "l_or_ltilde",
                "delta",
                "scheme",
                "branch",
                "energy_fm_inv",
                "valid",
                "counting_number",
            ]);
            wtr.write_record(&header).map_err(csv_err)?;
            for row in rows {
                let mut rec: Vec<String> = Vec::new();
                if with_axis {
                    rec.push(row.axis.clone().unwrap_or_default());
                    rec.push(row.axis_value.map(|v| fmt_sig(v, 7)).unwrap_or_default());
                }
                rec.extend([
                    row.state_label.clone(),
                    row.n.to_string(),
                    row.kappa.to_string(),
                    row.l_or_ltilde.to_string(),
                    fmt_sig(row.delta, 7),
                    row.scheme.clone(),
                    row.branch.clone(),
                    row.energy_fm_inv.map(|e| fmt_sig(e, 7)).unwrap_or_default(),
                    row.valid.clone(),
                    row.counting_number.to_string(),
                ]);
                wtr.write_record(&rec).map_err(csv_err)?;
            }
            out.write_all(&wtr.into_inner().map_err(|e| std::io::Error::other(e.into_error()))?)
        }
        OutputFormat::Json => {
            for row in rows {
                writeln!(out, "{}", serde_json::to_value(row).expect("row serializes"))?;
            }
            Ok(())
        }
    }
}

fn csv_err(e: csv::Error) -> std::io::Error {
    std::io::Error::other(e)
}
