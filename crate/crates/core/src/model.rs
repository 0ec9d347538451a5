//! Physical parameters and quantum-number bookkeeping.
//!
//! Everything downstream is keyed on the spin-orbit number κ; the orbital
//! quantum numbers l (spin) and l̃ (pseudospin) are always derived from it,
//! never stored, so the two conventions cannot drift apart:
//!
//!   spin:        l  = κ      (κ > 0),   l  = −(κ+1)  (κ < 0),   κ(κ+1) = l(l+1)
//!   pseudospin:  l̃ = κ − 1  (κ > 0),   l̃ = −κ      (κ < 0),   κ(κ−1) = l̃(l̃+1)

use crate::error::{Error, Result};

pub const DEFAULT_D0: f64 = 1.0 / 12.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// Δ(r) = V − S constant; Hulthen sum potential couples to the upper component.
    Spin,
    /// Σ(r) = V + S constant; Hulthen difference potential couples to the lower component.
    Pseudospin,
}

impl Symmetry {
    pub fn as_str(self) -> &'static str {
        match self {
            Symmetry::Spin => "spin",
            Symmetry::Pseudospin => "pseudospin",
        }
    }
}

/// Model parameters, all in fm^-1 (relativistic units, hbar = c = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Rest mass M.
    pub mass: f64,
    /// Screening parameter δ of the Hulthen potential; strictly positive.
    pub screening: f64,
    /// Potential strength V0 = Δ0 = Σ0.
    pub strength: f64,
    /// The constant value of the non-dynamical combination: C_s for spin, C_ps for pseudospin.
    pub symmetry_constant: f64,
    pub symmetry: Symmetry,
}

impl ModelParams {
    pub fn new(
        mass: f64,
        screening: f64,
        strength: f64,
        symmetry_constant: f64,
        symmetry: Symmetry,
    ) -> Result<Self> {
        if !(mass > 0.0) {
            return Err(Error::Domain(format!("mass must be positive, got {mass}")));
        }
        if !(screening > 0.0) {
            return Err(Error::Domain(format!(
                "screening must be positive, got {screening}"
            )));
        }
        if !strength.is_finite() || !symmetry_constant.is_finite() {
            return Err(Error::Domain("non-finite parameter".into()));
        }
        Ok(Self {
            mass,
            screening,
            strength,
            symmetry_constant,
            symmetry,
        })
    }

    /// M_s = M − C_s (spin) or M_ps = M + C_ps (pseudospin); the asymptotic gap
    /// of the proper-r⁻¹ equations.
    pub fn effective_mass(&self) -> f64 {
        match self.symmetry {
            Symmetry::Spin => self.mass - self.symmetry_constant,
            Symmetry::Pseudospin => self.mass + self.symmetry_constant,
        }
    }
}

/// (n, κ) label of a Dirac eigenstate. κ ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumState {
    pub n: u32,
    pub kappa: i32,
}

impl QuantumState {
    pub fn new(n: u32, kappa: i32) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::InvalidState("kappa must be nonzero".into()));
        }
        Ok(Self { n, kappa })
    }

    /// Twice the total angular momentum: 2j = 2|κ| − 1.
    pub fn j_times_two(&self) -> u32 {
        2 * self.kappa.unsigned_abs() - 1
    }
}

/// Orbital quantum number seen by the second-order equation: l for spin,
/// l̃ for pseudospin.
pub fn derive_orbital(state: QuantumState, symmetry: Symmetry) -> u32 {
    let k = state.kappa;
    match symmetry {
        Symmetry::Spin => {
            if k > 0 {
                k as u32
            } else {
                (-(k + 1)) as u32
            }
        }
        Symmetry::Pseudospin => {
            if k > 0 {
                (k - 1) as u32
            } else {
                (-k) as u32
            }
        }
    }
}

const ORBITAL_LETTERS: [char; 12] = ['s', 'p', 'd', 'f', 'g', 'h', 'i', 'k', 'l', 'm', 'n', 'o'];

/// "1s1/2"-style label built from n, l and j = |κ| − 1/2.
///
/// For pseudospin states the letter still encodes the true orbital l of the
/// upper component, matching the usual nomenclature.
pub fn spectroscopic_label(state: QuantumState, _symmetry: Symmetry) -> String {
    let l = derive_orbital(state, Symmetry::Spin) as usize;
    let letter = ORBITAL_LETTERS
        .get(l)
        .copied()
        .map(|c| c.to_string())
        .unwrap_or_else(|| format!("[l={l}]"));
    format!("{}{}{}/2", state.n, letter, state.j_times_two())
}

/// The degenerate partner within the symmetry's doublet.
///
/// Spin doublets share (n, l): κ ↔ −κ−1. Pseudospin doublets share l̃ with the
/// radial quantum number offset by one: (n, κ=−l̃) ↔ (n−1, κ=l̃+1).
pub fn doublet_partner(state: QuantumState, symmetry: Symmetry) -> Result<QuantumState> {
    match symmetry {
        Symmetry::Spin => QuantumState::new(state.n, -state.kappa - 1),
        Symmetry::Pseudospin => {
            if state.kappa < 0 {
                if state.n == 0 {
                    return Err(Error::InvalidState(
                        "pseudospin partner would need n = -1".into(),
                    ));
                }
                QuantumState::new(state.n - 1, -state.kappa + 1)
            } else if state.kappa == 1 {
                // l̃ = 0: the partner would need κ = 0
                Err(Error::InvalidState("pseudospin l̃ = 0 state is unpaired".into()))
            } else {
                QuantumState::new(state.n + 1, 1 - state.kappa)
            }
        }
    }
}

/// Which centrifugal substitution is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// δ²[d0 + 1/(e^{δr}−1) + 1/(e^{δr}−1)²] for 1/r².
    ImprovedR2,
    /// The Greene-Aldrich form, i.e. the same with d0 = 0.
    ConventionalR2,
    /// κ(κ±1)/r² = κ²W² ∓ κW′ with W = δ/(e^{δr}−1), from substituting 1/r → W
    /// in the first-order system.
    ProperR1,
}

impl Scheme {
    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::ImprovedR2 => "r2",
            Scheme::ConventionalR2 => "r2-conventional",
            Scheme::ProperR1 => "r1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeConfig {
    pub scheme: Scheme,
    /// Dimensionless shift; only ImprovedR2 reads it.
    pub d0: f64,
}

impl SchemeConfig {
    pub fn improved() -> Self {
        Self {
            scheme: Scheme::ImprovedR2,
            d0: DEFAULT_D0,
        }
    }

    pub fn improved_with_d0(d0: f64) -> Self {
        Self {
            scheme: Scheme::ImprovedR2,
            d0,
        }
    }

    pub fn conventional() -> Self {
        Self {
            scheme: Scheme::ConventionalR2,
            d0: 0.0,
        }
    }

    pub fn proper_r1() -> Self {
        Self {
            scheme: Scheme::ProperR1,
            d0: 0.0,
        }
    }

    /// The shift actually applied: ConventionalR2 pins d0 = 0, ProperR1 has none.
    pub fn effective_d0(&self) -> f64 {
        match self.scheme {
            Scheme::ImprovedR2 => self.d0,
            _ => 0.0,
        }
    }
}
