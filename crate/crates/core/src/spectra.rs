//! Closed-form energy spectra for both symmetries and both centrifugal
//! substitutions, plus the nonrelativistic limits.
//!
//! Conventions pinned by the published reference tables (see `tables`):
//! the pseudospin spectra select the minus branch of their quadratic, the spin
//! spectra the plus branch. Counting numbers follow the printed rules
//!
//!   r⁻²:  N = 2(n + l + 1) for κ > 0,  2(n − l) for κ < 0   (l → l̃ for pseudospin)
//!   r⁻¹:  N =    n + l + 1 for κ > 0,     n − l for κ < 0
//!
//! and a nonpositive N is reported as an invalid state rather than patched.

use crate::error::{Error, Result};
use crate::model::{ModelParams, QuantumState, Scheme, SchemeConfig, Symmetry, derive_orbital};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
    }
}

/// Both roots of the energy quadratic with per-branch bound-state validity and
/// the branch the symmetry selects.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergySolution {
    pub e_plus: Option<f64>,
    pub e_minus: Option<f64>,
    pub selected: Option<Branch>,
    pub counting_number: i64,
    pub valid_plus: bool,
    pub valid_minus: bool,
}

impl EnergySolution {
    pub fn selected_energy(&self) -> Option<f64> {
        match self.selected {
            Some(Branch::Plus) => self.e_plus,
            Some(Branch::Minus) => self.e_minus,
            None => None,
        }
    }

    pub fn branch_energy(&self, branch: Branch) -> Option<f64> {
        match branch {
            Branch::Plus => self.e_plus,
            Branch::Minus => self.e_minus,
        }
    }

    pub fn branch_valid(&self, branch: Branch) -> bool {
        match branch {
            Branch::Plus => self.valid_plus,
            Branch::Minus => self.valid_minus,
        }
    }
}

/// Energy quadratic in the layout a2·E² − a1·E + a0 = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticForm {
    pub a2: f64,
    pub a1: f64,
    pub a0: f64,
}

impl QuadraticForm {
    /// (E⁺, E⁻) where E^± = (a1 ± √(a1² − 4·a2·a0)) / (2·a2), solved in the
    /// numerically stable order: the larger-magnitude root first, the other via
    /// a0/(a2·r). a1² can dwarf the discriminant at small δ.
    pub fn roots(&self) -> (Option<f64>, Option<f64>) {
        let disc = self.a1.mul_add(self.a1, -4.0 * self.a2 * self.a0);
        if disc < 0.0 || !disc.is_finite() {
            return (None, None);
        }
        let sq = disc.sqrt();
        if self.a1 >= 0.0 {
            let plus = (self.a1 + sq) / (2.0 * self.a2);
            let minus = if plus != 0.0 { self.a0 / (self.a2 * plus) } else { (self.a1 - sq) / (2.0 * self.a2) };
            (Some(plus), Some(minus))
        } else {
            let minus = (self.a1 - sq) / (2.0 * self.a2);
            let plus = if minus != 0.0 { self.a0 / (self.a2 * minus) } else { (self.a1 + sq) / (2.0 * self.a2) };
            (Some(plus), Some(minus))
        }
    }

    /// a2·E² − a1·E + a0 at a candidate root.
    pub fn residual(&self, e: f64) -> f64 {
        (self.a2 * e).mul_add(e, -self.a1 * e) + self.a0
    }
}

/// N₁/N₂ (r⁻² schemes) or N_s/N_ps (proper r⁻¹) for the state under the printed
/// κ-sign conventions. Nonpositive results signal an invalid state: the energy
/// formulas divide by N.
pub fn counting_number(
    n: u32,
    kappa: i32,
    symmetry: Symmetry,
    scheme: Scheme,
) -> Result<i64> {
    if kappa == 0 {
        return Err(Error::InvalidState("kappa must be nonzero".into()));
    }
    let state = QuantumState { n, kappa };
    let orbital = derive_orbital(state, symmetry) as i64;
    let n = n as i64;
    let base = if kappa > 0 { n + orbital + 1 } else { n - orbital };
    let value = match scheme {
        Scheme::ImprovedR2 | Scheme::ConventionalR2 => 2 * base,
        Scheme::ProperR1 => base,
    };
    if value <= 0 {
        return Err(Error::InvalidState(format!(
            "counting number {value} <= 0 for n={n}, kappa={kappa}, {}/{}",
            symmetry.as_str(),
            scheme.as_str()
        )));
    }
    Ok(value)
}

fn expect_symmetry(params: &ModelParams, want: Symmetry) -> Result<()> {
    if params.symmetry != want {
        return Err(Error::Domain(format!(
            "operation requires {} symmetry, params carry {}",
            want.as_str(),
            params.symmetry.as_str()
        )));
    }
    Ok(())
}

/// Pseudospin r⁻² energy quadratic:
/// [1 + (Δ₀/(N₁δ))²]E² − [C_ps + 2Δ₀U/N₁]E + δ²[U² − SM/Δ₀ − κ(κ−1)d₀] = 0,
/// U = S/N₁ + N₁/4, S = (C_ps + M)Δ₀/δ².
pub fn quadratic_pseudospin_r2(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
) -> Result<QuadraticForm> {
    expect_symmetry(params, Symmetry::Pseudospin)?;
    if params.strength == 0.0 {
        return Err(Error::Domain("strength must be nonzero (S/Δ₀ undefined)".into()));
    }
    let nn = counting_number(state.n, state.kappa, Symmetry::Pseudospin, scheme.scheme)? as f64;
    let (m, d, d0c, c) = (params.mass, params.screening, params.strength, params.symmetry_constant);
    let d0 = scheme.effective_d0();
    let k = state.kappa as f64;
    let s = (c + m) * d0c / (d * d);
    let u = s / nn + nn / 4.0;
    Ok(QuadraticForm {
        a2: 1.0 + (d0c / (nn * d)).powi(2),
        a1: c + 2.0 * d0c * u / nn,
        a0: d * d * (u * u - s * m / d0c - k * (k - 1.0) * d0),
    })
}

/// Spin r⁻² energy quadratic:
/// [1 + (Σ₀/(N₂δ))²]E² − [C_s + 2Σ₀W/N₂]E + δ²[W² + TM/Σ₀ − κ(κ+1)d₀] = 0,
/// W = T/N₂ + N₂/4, T = (C_s − M)Σ₀/δ².
pub fn quadratic_spin_r2(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
) -> Result<QuadraticForm> {
    expect_symmetry(params, Symmetry::Spin)?;
    if params.strength == 0.0 {
        return Err(Error::Domain("strength must be nonzero (T/Σ₀ undefined)".into()));
    }
    let nn = counting_number(state.n, state.kappa, Symmetry::Spin, scheme.scheme)? as f64;
    let (m, d, s0, c) = (params.mass, params.screening, params.strength, params.symmetry_constant);
    let d0 = scheme.effective_d0();
    let k = state.kappa as f64;
    let t = (c - m) * s0 / (d * d);
    let w = t / nn + nn / 4.0;
    Ok(QuadraticForm {
        a2: 1.0 + (s0 / (nn * d)).powi(2),
        a1: c + 2.0 * s0 * w / nn,
        a0: d * d * (w * w + t * m / s0 - k * (k + 1.0) * d0),
    })
}

/// Decay-exponent radicand (εδ)² of the pseudospin r⁻² wave functions:
/// M² − E² + C_ps(E + M) + κ(κ−1)δ²d₀. Positive for a bound-state solution.
pub fn pseudospin_r2_eps_sq(params: &ModelParams, state: QuantumState, d0: f64, e: f64) -> f64 {
    let (m, d, c) = (params.mass, params.screening, params.symmetry_constant);
    let k = state.kappa as f64;
    m * m - e * e + c * (e + m) + k * (k - 1.0) * d * d * d0
}

/// (ε̄δ)² of the spin r⁻² wave functions:
/// M² − E² + C_s(E − M) + κ(κ+1)δ²d₀.
pub fn spin_r2_eps_sq(params: &ModelParams, state: QuantumState, d0: f64, e: f64) -> f64 {
    let (m, d, c) = (params.mass, params.screening, params.symmetry_constant);
    let k = state.kappa as f64;
    m * m - e * e + c * (e - m) + k * (k + 1.0) * d * d * d0
}

const EXCLUDED_POINT_TOL: f64 = 1e-9;

fn solution_from_quadratic(
    quad: &QuadraticForm,
    counting: i64,
    selected: Branch,
    mut valid: impl FnMut(f64) -> bool,
) -> EnergySolution {
    let (e_plus, e_minus) = quad.roots();
    let valid_plus = e_plus.map(&mut valid).unwrap_or(false);
    let valid_minus = e_minus.map(&mut valid).unwrap_or(false);
    let sel_real = match selected {
        Branch::Plus => e_plus.is_some(),
        Branch::Minus => e_minus.is_some(),
    };
    EnergySolution {
        e_plus,
        e_minus,
        selected: sel_real.then_some(selected),
        counting_number: counting,
        valid_plus,
        valid_minus,
    }
}

/// Pseudospin r⁻² spectrum. The published tables select the minus branch; a
/// branch is flagged valid when its decay radicand is positive and the energy
/// avoids the excluded point E = +M of the exact-symmetry limit.
pub fn energy_pseudospin_r2(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
) -> Result<EnergySolution> {
    let quad = quadratic_pseudospin_r2(params, state, scheme)?;
    let nn = counting_number(state.n, state.kappa, Symmetry::Pseudospin, scheme.scheme)?;
    let d0 = scheme.effective_d0();
    let p = *params;
    Ok(solution_from_quadratic(&quad, nn, Branch::Minus, |e| {
        pseudospin_r2_eps_sq(&p, state, d0, e) > 0.0
            && (e - p.mass).abs() > EXCLUDED_POINT_TOL * p.mass.max(1.0)
    }))
}

/// Spin r⁻² spectrum; plus branch selected, validity mirrored with the
/// excluded point E = −M.
pub fn energy_spin_r2(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
) -> Result<EnergySolution> {
    let quad = quadratic_spin_r2(params, state, scheme)?;
    let nn = counting_number(state.n, state.kappa, Symmetry::Spin, scheme.scheme)?;
    let d0 = scheme.effective_d0();
    let p = *params;
    Ok(solution_from_quadratic(&quad, nn, Branch::Plus, |e| {
        spin_r2_eps_sq(&p, state, d0, e) > 0.0
            && (e + p.mass).abs() > EXCLUDED_POINT_TOL * p.mass.max(1.0)
    }))
}

/// Exact pseudospin symmetry (C_ps = 0) in closed form, written independently
/// of the general quadratic: a2 = 1 + (Δ₀/(N₁δ))², a1 = 2Δ₀U₀/N₁,
/// a0 = δ²U₀² − M² − κ(κ−1)δ²d₀ with U₀ = MΔ₀/(δ²N₁) + N₁/4.
pub fn energy_pseudospin_r2_exact(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
) -> Result<EnergySolution> {
    expect_symmetry(params, Symmetry::Pseudospin)?;
    if params.symmetry_constant != 0.0 {
        return Err(Error::Domain(
            "exact pseudospin symmetry requires C_ps = 0".into(),
        ));
    }
    let nn = counting_number(state.n, state.kappa, Symmetry::Pseudospin, scheme.scheme)?;
    let nf = nn as f64;
    let (m, d, d0c) = (params.mass, params.screening, params.strength);
    if d0c == 0.0 {
        return Err(Error::Domain("strength must be nonzero".into()));
    }
    let d0 = scheme.effective_d0();
    let k = state.kappa as f64;
    let u0 = m * d0c / (d * d * nf) + nf / 4.0;
    let quad = QuadraticForm {
        a2: 1.0 + (d0c / (nf * d)).powi(2),
        a1: 2.0 * d0c * u0 / nf,
        a0: (d * u0).mul_add(d * u0, -m * m) - k * (k - 1.0) * d * d * d0,
    };
    let p = *params;
    Ok(solution_from_quadratic(&quad, nn, Branch::Minus, |e| {
        pseudospin_r2_eps_sq(&p, state, d0, e) > 0.0
            && (e - p.mass).abs() > EXCLUDED_POINT_TOL * p.mass.max(1.0)
    }))
}

/// Exact spin symmetry (C_s = 0) in closed form: a1 = 2Σ₀W₀/N₂,
/// a0 = δ²W₀² − M² − κ(κ+1)δ²d₀ with W₀ = −MΣ₀/(δ²N₂) + N₂/4.
pub fn energy_spin_r2_exact(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
) -> Result<EnergySolution> {
    expect_symmetry(params, Symmetry::Spin)?;
    if params.symmetry_constant != 0.0 {
        return Err(Error::Domain("exact spin symmetry requires C_s = 0".into()));
    }
    let nn = counting_number(state.n, state.kappa, Symmetry::Spin, scheme.scheme)?;
    let nf = nn as f64;
    let (m, d, s0) = (params.mass, params.screening, params.strength);
    if s0 == 0.0 {
        return Err(Error::Domain("strength must be nonzero".into()));
    }
    let d0 = scheme.effective_d0();
    let k = state.kappa as f64;
    let w0 = -m * s0 / (d * d * nf) + nf / 4.0;
    let quad = QuadraticForm {
        a2: 1.0 + (s0 / (nf * d)).powi(2),
        a1: 2.0 * s0 * w0 / nf,
        a0: (d * w0).mul_add(d * w0, -m * m) - k * (k + 1.0) * d * d * d0,
    };
    let p = *params;
    Ok(solution_from_quadratic(&quad, nn, Branch::Plus, |e| {
        spin_r2_eps_sq(&p, state, d0, e) > 0.0
            && (e + p.mass).abs() > EXCLUDED_POINT_TOL * p.mass.max(1.0)
    }))
}

/// Coefficients of the proper-r⁻¹ squared energy equation P·E² − Q·E − W = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct R1Coefficients {
    pub q: f64,
    pub p: f64,
    pub w: f64,
    pub counting: i64,
}

/// Spin proper-r⁻¹ coefficients: Q_s = V₀[δ²(N_s² − κ²) − 2V₀M_s],
/// P_s = V₀² + δ²N_s², W_s = M_s(M_sP_s + Q_s) + δ⁴[κ²(2N_s² − κ²) − N_s⁴]/4.
pub fn spin_r1_coefficients(params: &ModelParams, state: QuantumState) -> Result<R1Coefficients> {
    expect_symmetry(params, Symmetry::Spin)?;
    let counting = counting_number(state.n, state.kappa, Symmetry::Spin, Scheme::ProperR1)?;
    let ns = counting as f64;
    let (d, v0) = (params.screening, params.strength);
    let ms = params.effective_mass();
    let k2 = (state.kappa as f64).powi(2);
    let q = v0 * (d * d * (ns * ns - k2) - 2.0 * v0 * ms);
    let p = v0 * v0 + d * d * ns * ns;
    let w = ms * (ms * p + q) + 0.25 * d.powi(4) * (k2 * (2.0 * ns * ns - k2) - ns.powi(4));
    Ok(R1Coefficients { q, p, w, counting })
}

/// Pseudospin proper-r⁻¹ coefficients: Q_ps = V₀[δ²(N_ps² − κ²) + 2V₀M_ps],
/// W_ps = M_ps(M_psP_ps − Q_ps) + δ⁴[κ²(2N_ps² − κ²) − N_ps⁴]/4.
pub fn pseudospin_r1_coefficients(
    params: &ModelParams,
    state: QuantumState,
) -> Result<R1Coefficients> {
    expect_symmetry(params, Symmetry::Pseudospin)?;
    let counting = counting_number(state.n, state.kappa, Symmetry::Pseudospin, Scheme::ProperR1)?;
    let nps = counting as f64;
    let (d, v0) = (params.screening, params.strength);
    let mps = params.effective_mass();
    let k2 = (state.kappa as f64).powi(2);
    let q = v0 * (d * d * (nps * nps - k2) + 2.0 * v0 * mps);
    let p = v0 * v0 + d * d * nps * nps;
    let w = mps * (mps * p - q) + 0.25 * d.powi(4) * (k2 * (2.0 * nps * nps - k2) - nps.powi(4));
    Ok(R1Coefficients { q, p, w, counting })
}

/// Signed gap of the unsquared spin r⁻¹ energy equation at E:
/// rhs − √(M_s² − E²) with rhs = [2(E+M_s)V₀ + κ²δ²]/(N₂δ) − N₂δ/4, N₂ = 2N_s.
/// Returns (lhs, rhs); a root of the squared quadratic is genuine only when
/// lhs is real, rhs ≥ 0 and the two agree.
pub fn spin_r1_unsquared_sides(
    params: &ModelParams,
    state: QuantumState,
    e: f64,
) -> Result<(Option<f64>, f64)> {
    let counting = counting_number(state.n, state.kappa, Symmetry::Spin, Scheme::ProperR1)? as f64;
    let n2 = 2.0 * counting;
    let (d, v0) = (params.screening, params.strength);
    let ms = params.effective_mass();
    let k2 = (state.kappa as f64).powi(2);
    let lhs2 = ms * ms - e * e;
    let lhs = (lhs2 >= 0.0).then(|| lhs2.sqrt());
    let rhs = (2.0 * (e + ms) * v0 + k2 * d * d) / (n2 * d) - n2 * d / 4.0;
    Ok((lhs, rhs))
}

/// As above for pseudospin: rhs = [2(E−M_ps)V₀ + κ²δ²]/(N₁δ) − N₁δ/4, N₁ = 2N_ps.
pub fn pseudospin_r1_unsquared_sides(
    params: &ModelParams,
    state: QuantumState,
    e: f64,
) -> Result<(Option<f64>, f64)> {
    let counting =
        counting_number(state.n, state.kappa, Symmetry::Pseudospin, Scheme::ProperR1)? as f64;
    let n1 = 2.0 * counting;
    let (d, v0) = (params.screening, params.strength);
    let mps = params.effective_mass();
    let k2 = (state.kappa as f64).powi(2);
    let lhs2 = mps * mps - e * e;
    let lhs = (lhs2 >= 0.0).then(|| lhs2.sqrt());
    let rhs = (2.0 * (e - mps) * v0 + k2 * d * d) / (n1 * d) - n1 * d / 4.0;
    Ok((lhs, rhs))
}

const UNSQUARED_TOL: f64 = 1e-9;

fn unsquared_ok(lhs: Option<f64>, rhs: f64) -> bool {
    match lhs {
        Some(l) => rhs >= -UNSQUARED_TOL && (l - rhs).abs() <= UNSQUARED_TOL * rhs.abs().max(1.0),
        None => false,
    }
}

/// Spin proper-r⁻¹ spectrum: roots of P_sE² − Q_sE − W_s = 0 with each root
/// checked against the unsquared equation; squaring manufactures one spurious
/// root which the check rejects. Bound states additionally need M_s > 0 and
/// |E| < M_s. The plus branch is the published one.
pub fn energy_spin_r1(params: &ModelParams, state: QuantumState) -> Result<EnergySolution> {
    let c = spin_r1_coefficients(params, state)?;
    let quad = QuadraticForm { a2: c.p, a1: c.q, a0: -c.w };
    let ms = params.effective_mass();
    let p = *params;
    Ok(solution_from_quadratic(&quad, c.counting, Branch::Plus, |e| {
        let bound = ms > 0.0 && e.abs() < ms && 2.0 * (e + ms) * p.strength >= 0.0;
        bound
            && spin_r1_unsquared_sides(&p, state, e)
                .map(|(l, r)| unsquared_ok(l, r))
                .unwrap_or(false)
            && (e + p.mass).abs() > EXCLUDED_POINT_TOL * p.mass.max(1.0)
    }))
}

/// Pseudospin proper-r⁻¹ spectrum; minus branch published, with the mirrored
/// unsquared check and |E| < M_ps.
pub fn energy_pseudospin_r1(params: &ModelParams, state: QuantumState) -> Result<EnergySolution> {
    let c = pseudospin_r1_coefficients(params, state)?;
    let quad = QuadraticForm { a2: c.p, a1: c.q, a0: -c.w };
    let mps = params.effective_mass();
    let p = *params;
    Ok(solution_from_quadratic(&quad, c.counting, Branch::Minus, |e| {
        let bound = mps > 0.0 && e.abs() < mps;
        bound
            && pseudospin_r1_unsquared_sides(&p, state, e)
                .map(|(l, r)| unsquared_ok(l, r))
                .unwrap_or(false)
            && (e - p.mass).abs() > EXCLUDED_POINT_TOL * p.mass.max(1.0)
    }))
}

/// Dispatch on scheme + symmetry.
pub fn energy(params: &ModelParams, state: QuantumState, scheme: &SchemeConfig) -> Result<EnergySolution> {
    match (params.symmetry, scheme.scheme) {
        (Symmetry::Pseudospin, Scheme::ImprovedR2 | Scheme::ConventionalR2) => {
            energy_pseudospin_r2(params, state, scheme)
        }
        (Symmetry::Spin, Scheme::ImprovedR2 | Scheme::ConventionalR2) => {
            energy_spin_r2(params, state, scheme)
        }
        (Symmetry::Spin, Scheme::ProperR1) => energy_spin_r1(params, state),
        (Symmetry::Pseudospin, Scheme::ProperR1) => energy_pseudospin_r1(params, state),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonrelVariant {
    /// Shifted-r⁻² limit with d₀ = 1/12.
    ImprovedD0,
    /// Greene-Aldrich limit (d₀ = 0).
    Traditional,
    /// Limit of the proper-r⁻¹ scheme; reduces to the exact Hulthen s-wave
    /// result at l = 0.
    ProperR1,
}

/// Nonrelativistic Hulthen spectra (atomic-style units, energy in δ²/m scale):
///
///   ImprovedD0:  E = (δ²/2m)[l(l+1)/12 − g²]
///   Traditional: E = −(δ²/2m) g²
///   ProperR1:    E = −(δ²/2m)[(m·V₀/δ² + l²/2)/(n+l+1) − (n+l+1)/2]²
///
/// with g = m(V₀/δ²)/(n+l+1) − (n+l+1)/2.
pub fn energy_nonrel(n: u32, l: u32, m: f64, v0: f64, delta: f64, variant: NonrelVariant) -> Result<f64> {
    if !(m > 0.0) || !(delta > 0.0) {
        return Err(Error::Domain("m and delta must be positive".into()));
    }
    let np = (n + l + 1) as f64;
    let lf = l as f64;
    let a = m * v0 / (delta * delta);
    let pref = delta * delta / (2.0 * m);
    Ok(match variant {
        NonrelVariant::ImprovedD0 => {
            // literally the traditional value plus the d0 shift, so the two
            // variants differ by exactly δ²l(l+1)/(24m) in floating point too
            energy_nonrel(n, l, m, v0, delta, NonrelVariant::Traditional)?
                + delta * delta * lf * (lf + 1.0) / (24.0 * m)
        }
        NonrelVariant::Traditional => {
            let g = a / np - np / 2.0;
            -pref * g * g
        }
        NonrelVariant::ProperR1 => {
            let g = (a + lf * lf / 2.0) / np - np / 2.0;
            -pref * g * g
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps_params(c: f64, delta: f64) -> ModelParams {
        ModelParams::new(5.0, delta, 3.4, c, Symmetry::Pseudospin).unwrap()
    }

    fn spin_params(c: f64, delta: f64) -> ModelParams {
        ModelParams::new(5.0, delta, 3.4, c, Symmetry::Spin).unwrap()
    }

    #[test]
    fn counting_number_conventions() {
        // (n=0, κ=2, pseudospin, r2): l̃=1, N₁ = 4
        assert_eq!(counting_number(0, 2, Symmetry::Pseudospin, Scheme::ImprovedR2).unwrap(), 4);
        // (n=0, κ=1, spin, r1): N_s = 2
        assert_eq!(counting_number(0, 1, Symmetry::Spin, Scheme::ProperR1).unwrap(), 2);
        // (n=1, κ=−1, pseudospin, r2): 2(n−l̃) = 0 → invalid
        assert!(counting_number(1, -1, Symmetry::Pseudospin, Scheme::ImprovedR2).is_err());
        // κ<0 spin r1 with n>l is fine: (n=3, κ=−2): l=1, N=2
        assert_eq!(counting_number(3, -2, Symmetry::Spin, Scheme::ProperR1).unwrap(), 2);
    }

    #[test]
    fn table1_anchor_value() {
        // doublet (1s1/2, 0d3/2) at δ=0.025 computed through the κ>0 member
        let p = ps_params(-4.9, 0.025);
        let st = QuantumState::new(0, 2).unwrap();
        let sol = energy_pseudospin_r2(&p, st, &SchemeConfig::improved()).unwrap();
        let e = sol.e_minus.unwrap();
        assert!((e - 0.0972235).abs() < 1e-5, "{e}");
        assert_eq!(sol.selected, Some(Branch::Minus));
        assert_eq!(sol.counting_number, 4);
        // quadratic self-consistency
        let quad = quadratic_pseudospin_r2(&p, st, &SchemeConfig::improved()).unwrap();
        assert!(quad.residual(e).abs() < 1e-9 * quad.a0.abs().max(1.0));
    }

    #[test]
    fn table2_anchor_values() {
        let p = spin_params(4.9, 0.025);
        let st = QuantumState::new(0, 1).unwrap();
        let sol = energy_spin_r2(&p, st, &SchemeConfig::improved()).unwrap();
        assert!((sol.e_plus.unwrap() + 0.0942003).abs() < 1e-5);
        assert_eq!(sol.selected, Some(Branch::Plus));
        let r1 = energy_spin_r1(&p, st).unwrap();
        assert!((r1.e_plus.unwrap() + 0.0995915).abs() < 1e-5);
        assert!(r1.valid_plus);
        assert!(!r1.valid_minus, "squaring's spurious root must be rejected");
        // large-δ l=4: the equation's own plus root stays inside |E| < M_s and
        // passes the unsquared check (the published 0.4324460 for this entry
        // does not solve the equation; see tables)
        let p = spin_params(4.9, 0.25);
        let st = QuantumState::new(1, 4).unwrap();
        let r1 = energy_spin_r1(&p, st).unwrap();
        let e = r1.e_plus.unwrap();
        assert!(e.abs() < p.effective_mass());
        assert!(r1.valid_plus);
        let (lhs, rhs) = spin_r1_unsquared_sides(&p, st, e).unwrap();
        assert!((lhs.unwrap() - rhs).abs() < 1e-9 * rhs.abs().max(1.0));
    }

    #[test]
    fn exact_symmetry_specializations_agree() {
        let scheme = SchemeConfig::improved();
        for &(n, kappa, delta) in &[(0u32, 2i32, 0.025), (1, 3, 0.1), (2, 5, 0.25)] {
            let st = QuantumState::new(n, kappa).unwrap();
            let p = ps_params(0.0, delta);
            let a = energy_pseudospin_r2(&p, st, &scheme).unwrap();
            let b = energy_pseudospin_r2_exact(&p, st, &scheme).unwrap();
            assert!((a.e_minus.unwrap() - b.e_minus.unwrap()).abs() < 1e-10);
            assert!((a.e_plus.unwrap() - b.e_plus.unwrap()).abs() < 1e-10);
            let p = spin_params(0.0, delta);
            let a = energy_spin_r2(&p, st, &scheme).unwrap();
            let b = energy_spin_r2_exact(&p, st, &scheme).unwrap();
            assert!((a.e_plus.unwrap() - b.e_plus.unwrap()).abs() < 1e-10);
        }
        // the specialized routes refuse C ≠ 0
        let st = QuantumState::new(0, 2).unwrap();
        assert!(energy_pseudospin_r2_exact(&ps_params(-4.9, 0.1), st, &scheme).is_err());
        assert!(energy_spin_r2_exact(&spin_params(4.9, 0.1), st, &scheme).is_err());
    }

    #[test]
    fn table4_and_5_anchor_values() {
        // Table 4 rows use the printed n with κ = l̃+1
        let p = ps_params(0.0, 0.025);
        let st = QuantumState::new(1, 2).unwrap();
        let sol = energy_pseudospin_r2_exact(&p, st, &SchemeConfig::improved()).unwrap();
        assert!((sol.e_minus.unwrap() - 4.98403).abs() < 1e-4);
        let r1 = energy_pseudospin_r1(&p, st).unwrap();
        assert!((r1.e_minus.unwrap() - 4.99611).abs() < 1e-4);
        assert!(!r1.valid_minus, "pseudospin branch fails the unsquared check");
        let p = spin_params(0.0, 0.025);
        let st = QuantumState::new(0, 1).unwrap();
        let sol = energy_spin_r2_exact(&p, st, &SchemeConfig::improved()).unwrap();
        assert!((sol.e_plus.unwrap() + 4.98993).abs() < 1e-4);
        let r1 = energy_spin_r1(&p, st).unwrap();
        assert!((r1.e_plus.unwrap() + 4.99731).abs() < 1e-4);
        assert!(r1.valid_plus);
    }

    #[test]
    fn pseudospin_monotone_in_delta() {
        // Table-1 columns: selected energy decreases as δ grows
        let st = QuantumState::new(0, 2).unwrap();
        let mut prev = f64::MAX;
        for &d in &[0.025, 0.1, 0.175, 0.25] {
            let e = energy_pseudospin_r2(&ps_params(-4.9, d), st, &SchemeConfig::improved())
                .unwrap()
                .e_minus
                .unwrap();
            assert!(e < prev);
            prev = e;
        }
    }

    #[test]
    fn nonrel_limits() {
        let (m, v0, d) = (1.0, 1.0, 0.1);
        // Eq-67 minus Eq-69 is the pure shift δ²l(l+1)/(24m)
        for &(n, l) in &[(0u32, 0u32), (1, 2), (3, 4)] {
            let a = energy_nonrel(n, l, m, v0, d, NonrelVariant::ImprovedD0).unwrap();
            let b = energy_nonrel(n, l, m, v0, d, NonrelVariant::Traditional).unwrap();
            let shift = d * d * (l * (l + 1)) as f64 / (24.0 * m);
            assert!((a - b - shift).abs() <= 4.0 * f64::EPSILON * a.abs().max(1.0));
        }
        // all variants coincide at l = 0 (the exact s-wave result)
        for n in 0..=5 {
            let a = energy_nonrel(n, 0, m, v0, d, NonrelVariant::ImprovedD0).unwrap();
            let b = energy_nonrel(n, 0, m, v0, d, NonrelVariant::Traditional).unwrap();
            let c = energy_nonrel(n, 0, m, v0, d, NonrelVariant::ProperR1).unwrap();
            assert_eq!(b, c);
            assert!((a - b).abs() < 1e-12 * b.abs());
        }
    }

    #[test]
    fn stable_roots_tiny_discriminant() {
        // δ = 0.025, C_ps = 0: a1² and 4·a2·a0 agree to seven digits; the roots
        // must still satisfy the quadratic to 1e-9 relative
        let p = ps_params(0.0, 0.025);
        let st = QuantumState::new(1, 2).unwrap();
        let quad = quadratic_pseudospin_r2(&p, st, &SchemeConfig::improved()).unwrap();
        let (ep, em) = quad.roots();
        for e in [ep.unwrap(), em.unwrap()] {
            assert!(quad.residual(e).abs() < 1e-9 * quad.a0.abs().max(1.0));
        }
    }
}
