//! Published reference tables (energies in fm⁻¹) and the parameter presets
//! they were computed with, kept verbatim as data.
//!
//! Values are stored exactly as printed. Most are reproduced by the energy
//! equations; a documented subset is not reproducible under any quantum-number
//! convention (see the notes on each table), and the acceptance suite reports
//! those as mismatches rather than patching them.

use crate::error::Result;
use crate::model::{ModelParams, QuantumState, SchemeConfig, Symmetry};
use crate::spectra::{self, EnergySolution};

pub const DELTAS: [f64; 4] = [0.025, 0.100, 0.175, 0.250];

pub const MASS: f64 = 5.0;
pub const STRENGTH: f64 = 3.40;
pub const C_PS_T1: f64 = -4.90;
pub const C_S_T2: f64 = 4.90;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    T1,
    T2,
    T4,
    T5,
}

impl TableId {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "t1" => Some(TableId::T1),
            "t2" => Some(TableId::T2),
            "t4" => Some(TableId::T4),
            "t5" => Some(TableId::T5),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TableId::T1 => "t1",
            TableId::T2 => "t2",
            TableId::T4 => "t4",
            TableId::T5 => "t5",
        }
    }

    pub fn symmetry(self) -> Symmetry {
        match self {
            TableId::T1 | TableId::T4 => Symmetry::Pseudospin,
            TableId::T2 | TableId::T5 => Symmetry::Spin,
        }
    }

    pub fn symmetry_constant(self) -> f64 {
        match self {
            TableId::T1 => C_PS_T1,
            TableId::T2 => C_S_T2,
            TableId::T4 | TableId::T5 => 0.0,
        }
    }

    pub fn rows(self) -> &'static [TableRow] {
        match self {
            TableId::T1 => &T1_ROWS,
            TableId::T2 => &T2_ROWS,
            TableId::T4 => &T4_ROWS,
            TableId::T5 => &T5_ROWS,
        }
    }

    /// Column pair held by `values_a`/`values_b`: Table 1 stores (this work,
    /// earlier-work comparison), the others (improved r⁻², proper r⁻¹).
    pub fn column_names(self) -> (&'static str, &'static str) {
        match self {
            TableId::T1 => ("present", "ref_comparison"),
            _ => ("r2_improved", "r1_proper"),
        }
    }
}

/// One doublet row: quantum labels and the two printed energy columns over the
/// four δ values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    /// l̃ (pseudospin tables) or l (spin tables).
    pub orbital: u32,
    /// Radial quantum number as printed (labels the κ<0 member).
    pub n: u32,
    pub kappa_neg: i32,
    pub kappa_pos: i32,
    pub states: &'static str,
    pub values_a: [f64; 4],
    pub values_b: [f64; 4],
}

impl TableRow {
    /// The (n, κ) actually fed to the energy formulas for this table's rows.
    ///
    /// Pinned against the printed values: Table 1 rows go through the κ>0
    /// doublet partner (n−1, κ = l̃+1); Tables 2/4/5 use the printed n with the
    /// κ>0 member. The κ<0 members' own counting numbers are nonpositive for
    /// every printed row.
    pub fn computing_state(&self, table: TableId) -> QuantumState {
        let n = match table {
            TableId::T1 => self.n - 1,
            _ => self.n,
        };
        QuantumState { n, kappa: self.kappa_pos }
    }
}

/// The computed counterpart of a printed entry.
pub fn computed_entry(
    table: TableId,
    row: &TableRow,
    delta: f64,
    column_b: bool,
) -> Result<EnergySolution> {
    let params = ModelParams::new(
        MASS,
        delta,
        STRENGTH,
        table.symmetry_constant(),
        table.symmetry(),
    )?;
    let state = row.computing_state(table);
    match (table, column_b) {
        (TableId::T1, _) => {
            spectra::energy_pseudospin_r2(&params, state, &SchemeConfig::improved())
        }
        (TableId::T2, false) => spectra::energy_spin_r2(&params, state, &SchemeConfig::improved()),
        (TableId::T2, true) => spectra::energy_spin_r1(&params, state),
        (TableId::T4, false) => {
            spectra::energy_pseudospin_r2_exact(&params, state, &SchemeConfig::improved())
        }
        (TableId::T4, true) => spectra::energy_pseudospin_r1(&params, state),
        (TableId::T5, false) => {
            spectra::energy_spin_r2_exact(&params, state, &SchemeConfig::improved())
        }
        (TableId::T5, true) => spectra::energy_spin_r1(&params, state),
    }
}

// Table 1: pseudospin, M = 5.0, Δ₀ = 3.40, C_ps = −4.90 fm⁻¹.
// values_a: this work (improved r⁻²); values_b: the earlier W²-ansatz
// comparison column, stored as published data only.
pub static T1_ROWS: [TableRow; 8] = [
    TableRow { orbital: 1, n: 1, kappa_neg: -1, kappa_pos: 2, states: "(1s1/2,0d3/2)",
        values_a: [0.0972235, 0.0561798, -0.0302923, -0.1544010],
        values_b: [0.0963638, 0.0425738, -0.0710009, -0.2346580] },
    TableRow { orbital: 2, n: 1, kappa_neg: -2, kappa_pos: 3, states: "(1p3/2,0f5/2)",
        values_a: [0.0937343, 0.00275013, -0.1793260, -0.4196540],
        values_b: [0.0912282, -0.0363590, -0.2930130, -0.6351320] },
    TableRow { orbital: 3, n: 1, kappa_neg: -3, kappa_pos: 4, states: "(1d5/2,0g7/2)",
        values_a: [0.0888560, -0.0690512, -0.3642070, -0.7148860],
        values_b: [0.0839128, -0.1447100, -0.5760950, -1.0984500] },
    TableRow { orbital: 4, n: 1, kappa_neg: -4, kappa_pos: 5, states: "(1f7/2,0h9/2)",
        values_a: [0.08260190, -0.1564720, -0.5680850, -1.0019200],
        values_b: [0.0744360, -0.2784550, -0.8953110, -1.5671200] },
    TableRow { orbital: 1, n: 2, kappa_neg: -1, kappa_pos: 2, states: "(2s1/2,1d3/2)",
        values_a: [0.0938034, 0.0038600, -0.1758970, -0.4125570],
        values_b: [0.0928939, -0.0103694, -0.2174930, -0.4920870] },
    TableRow { orbital: 2, n: 2, kappa_neg: -2, kappa_pos: 3, states: "(2p3/2,1f5/2)",
        values_a: [0.0889591, -0.0673920, -0.3590490, -0.7041020],
        values_b: [0.0863238, -0.1078600, -0.4732160, -0.9131390] },
    TableRow { orbital: 3, n: 2, kappa_neg: -3, kappa_pos: 4, states: "(2d5/2,1g7/2)",
        values_a: [0.0827390, -0.1542610, -0.5611560, -0.9872420],
        values_b: [0.0775818, -0.2316110, -0.7705370, -1.3540100] },
    TableRow { orbital: 4, n: 2, kappa_neg: -4, kappa_pos: 5, states: "(2f7/2,1h9/2)",
        values_a: [0.0751593, -0.2536460, -0.7673870, -1.2384300],
        values_b: [0.0666955, -0.3771030, -1.0870200, -1.7758200] },
];

// Table 2: spin, M = 5.0, Σ₀ = V₀ = 3.40, C_s = 4.90 fm⁻¹.
// values_b (proper r⁻¹): the printed l ≥ 2 entries are NOT roots of the
// r⁻¹ energy equation under any convention (shooting on the r⁻¹ equation
// agrees with our closed form instead); kept verbatim.
pub static T2_ROWS: [TableRow; 8] = [
    TableRow { orbital: 1, n: 0, kappa_neg: -2, kappa_pos: 1, states: "(0p1/2,0p3/2)",
        values_a: [-0.0942003, -0.00840935, 0.1727090, 0.4336300],
        values_b: [-0.0995915, -0.0935025, -0.0803626, -0.0607447] },
    TableRow { orbital: 1, n: 1, kappa_neg: -2, kappa_pos: 1, states: "(1p1/2,1p3/2)",
        values_a: [-0.0869848, 0.1022580, 0.4825270, 0.9884020],
        values_b: [-0.0989452, -0.0833617, -0.0506572, -0.00443345] },
    TableRow { orbital: 2, n: 0, kappa_neg: -3, kappa_pos: 2, states: "(0d3/2,0d5/2)",
        values_a: [-0.0869533, 0.1027630, 0.4840740, 0.9915680],
        values_b: [-0.0984295, -0.0750704, -0.0249639, 0.0491605] },
    TableRow { orbital: 2, n: 1, kappa_neg: -3, kappa_pos: 2, states: "(1d3/2,1d5/2)",
        values_a: [-0.0768780, 0.2514980, 0.8697760, 1.6152900],
        values_b: [-0.0974023, -0.0590862, 0.0210900, 0.1346870] },
    TableRow { orbital: 3, n: 0, kappa_neg: -4, kappa_pos: 3, states: "(0f5/2,0f7/2)",
        values_a: [-0.0768308, 0.2522540, 0.8720970, 1.6200500],
        values_b: [-0.0970491, -0.0534195, 0.0385481, 0.1706690] },
    TableRow { orbital: 3, n: 1, kappa_neg: -4, kappa_pos: 3, states: "(1f5/2,1f7/2)",
        values_a: [-0.0639221, 0.4335670, 1.3001200, 2.2370300],
        values_b: [-0.0956585, -0.0320936, 0.0980973, 0.2762140] },
    TableRow { orbital: 4, n: 0, kappa_neg: -5, kappa_pos: 4, states: "(0g7/2,0g9/2)",
        values_a: [-0.0638592, 0.4345750, 1.3032300, 2.2434000],
        values_b: [-0.0952974, -0.0262998, 0.1159560, 0.3130470] },
    TableRow { orbital: 4, n: 1, kappa_neg: -5, kappa_pos: 4, states: "(1g7/2,1g9/2)",
        values_a: [-0.04815070, 0.6422870, 1.7441400, 2.8076500],
        values_b: [-0.0935402, 0.000171676, 0.1871360, 0.4324460] },
];

// Table 4: exact pseudospin symmetry (C_ps = 0), M = 5.0, Δ₀ = V₀ = 3.40 fm⁻¹.
// Unlike Table 1, these rows were generated with the printed n and κ = l̃+1.
// The (2s1/2,1d3/2) r⁻¹ entry at δ = 0.250 prints 4.426637; the equation root
// is 4.4263652 (a typographic digit duplication).
pub static T4_ROWS: [TableRow; 8] = [
    TableRow { orbital: 1, n: 1, kappa_neg: -1, kappa_pos: 2, states: "(1s1/2,0d3/2)",
        values_a: [4.98403, 4.75186, 4.28511, 3.66359],
        values_b: [4.99611, 4.93821, 4.81377, 4.62906] },
    TableRow { orbital: 2, n: 1, kappa_neg: -2, kappa_pos: 3, states: "(1p3/2,0f5/2)",
        values_a: [4.97165, 4.56885, 3.80980, 2.89301],
        values_b: [4.99270, 4.88469, 4.65663, 4.32792] },
    TableRow { orbital: 3, n: 1, kappa_neg: -3, kappa_pos: 4, states: "(1d5/2,0g7/2)",
        values_a: [4.95577, 4.34556, 3.28126, 2.12740],
        values_b: [4.98821, 4.81515, 4.45771, 3.96084] },
    TableRow { orbital: 4, n: 1, kappa_neg: -4, kappa_pos: 5, states: "(1f7/2,0h9/2)",
        values_a: [4.93644, 4.08954, 2.73540, 1.42282],
        values_b: [4.98265, 4.73030, 4.22266, 3.54589] },
    TableRow { orbital: 1, n: 2, kappa_neg: -1, kappa_pos: 2, states: "(2s1/2,1d3/2)",
        values_a: [4.97167, 4.56926, 3.81106, 2.89559],
        values_b: [4.99376, 4.90141, 4.70660, 4.426637] },
    TableRow { orbital: 2, n: 2, kappa_neg: -2, kappa_pos: 3, states: "(2p3/2,1f5/2)",
        values_a: [4.95580, 4.34617, 3.28315, 2.13127],
        values_b: [4.98965, 4.83772, 4.52424, 4.08931] },
    TableRow { orbital: 3, n: 2, kappa_neg: -3, kappa_pos: 4, states: "(2d5/2,1g7/2)",
        values_a: [4.93649, 4.09036, 2.73792, 1.42801],
        values_b: [4.98446, 4.75851, 4.30443, 3.70026] },
    TableRow { orbital: 4, n: 2, kappa_neg: -4, kappa_pos: 5, states: "(2f7/2,1h9/2)",
        values_a: [4.91377, 3.80963, 2.20283, 0.81097],
        values_b: [4.97820, 4.66464, 4.05329, 3.27673] },
];

// Table 5: exact spin symmetry (C_s = 0), M = 5.0, Σ₀ = V₀ = 3.40 fm⁻¹.
// The r⁻¹ column shares Table 2's l ≥ 2 defect.
pub static T5_ROWS: [TableRow; 8] = [
    TableRow { orbital: 1, n: 0, kappa_neg: -2, kappa_pos: 1, states: "(0p1/2,0p3/2)",
        values_a: [-4.98993, -4.84099, -4.52642, -4.07294],
        values_b: [-4.99731, -4.95718, -4.86979, -4.73717] },
    TableRow { orbital: 2, n: 0, kappa_neg: -3, kappa_pos: 2, states: "(0d3/2,0d5/2)",
        values_a: [-4.97737, -4.64815, -3.98590, -3.10317],
        values_b: [-4.99356, -4.89773, -4.69175, -4.38588] },
    TableRow { orbital: 3, n: 0, kappa_neg: -4, kappa_pos: 3, states: "(0f5/2,0f7/2)",
        values_a: [-4.95982, -4.38880, -3.31174, -2.00840],
        values_b: [-4.98847, -4.81796, -4.45782, -3.93859] },
    TableRow { orbital: 4, n: 0, kappa_neg: -5, kappa_pos: 4, states: "(0g7/2,0g9/2)",
        values_a: [-4.93733, -4.07241, -2.56164, -0.91879],
        values_b: [-4.98196, -4.71713, -4.17002, -3.40926] },
    TableRow { orbital: 1, n: 1, kappa_neg: -2, kappa_pos: 1, states: "(1p1/2,1p3/2)",
        values_a: [-4.97738, -4.64843, -3.98679, -3.10497],
        values_b: [-4.99375, -4.90078, -4.70098, -4.40441] },
    TableRow { orbital: 2, n: 1, kappa_neg: -3, kappa_pos: 2, states: "(1d3/2,1d5/2)",
        values_a: [-4.95984, -4.38924, -3.31306, -2.01110],
        values_b: [-4.98857, -4.81949, -4.46248, -3.94799] },
    TableRow { orbital: 3, n: 1, kappa_neg: -4, kappa_pos: 3, states: "(1f5/2,1f7/2)",
        values_a: [-4.93736, -4.07298, -2.56340, -0.92240],
        values_b: [-4.98205, -4.71859, -4.17448, -3.41830] },
    TableRow { orbital: 4, n: 1, kappa_neg: -5, kappa_pos: 4, states: "(1g7/2,1g9/2)",
        values_a: [-4.91001, -3.71030, -1.78844, 0.082117],
        values_b: [-4.97411, -4.59756, -3.84019, -2.83080] },
];
