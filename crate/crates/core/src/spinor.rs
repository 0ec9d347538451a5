//! Closed-form two-component radial spinors, nonrelativistic radial functions,
//! normalization and residual diagnostics.
//!
//! One component solves the second-order equation in closed form; its partner
//! is generated through the first-order coupling, which is the ground truth
//! for the bracket structure of the printed companion expressions:
//!
//!   (d/dr + κ/r) F = (M + E − Δ) G        (d/dr − κ/r) G = (M − E + Σ) F
//!
//! For the proper-r⁻¹ scheme the substitution 1/r → W(r) is made in this
//! system itself, so the companion and the residual checks use κW(r) there.

use crate::approx::hulthen_w;
use crate::error::{Error, Result};
use crate::model::{
    ModelParams, QuantumState, Scheme, SchemeConfig, Symmetry, derive_orbital,
};
use crate::oracle::{self, node_count, CentrifugalMode, OdeSpec};
use crate::spectra::{pseudospin_r2_eps_sq, spin_r2_eps_sq, NonrelVariant};
use crate::specfun::{hyp2f1_terminating, hyp2f1_terminating_derivative};

/// Uniform radial grid, r > 0, odd point count (Simpson-ready).
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    points: Vec<f64>,
    step: f64,
}

impl RadialGrid {
    pub fn uniform(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        if !(r_min > 0.0) || !(r_max > r_min) {
            return Err(Error::Domain(format!(
                "need 0 < r_min < r_max, got [{r_min}, {r_max}]"
            )));
        }
        if n_points < 9 {
            return Err(Error::Domain("grid needs at least 9 points".into()));
        }
        let n_points = if n_points.is_multiple_of(2) { n_points + 1 } else { n_points };
        let step = (r_max - r_min) / (n_points - 1) as f64;
        let points = (0..n_points).map(|i| r_min + step * i as f64).collect();
        Ok(Self { points, step })
    }

    /// Grid sized for a bound state: starts past the 1/r singularity at
    /// max(1e-4/δ, 1e-3) and extends until e^{−δr} < 1e-12 and the component
    /// envelope e^{−(decay)r} has dropped ~25 e-foldings.
    pub fn for_bound_state(delta: f64, decay_rate: f64, n_points: usize) -> Result<Self> {
        if !(delta > 0.0) || !(decay_rate > 0.0) {
            return Err(Error::Domain("delta and decay rate must be positive".into()));
        }
        let r_min = (1e-4 / delta).max(1e-3);
        let r_max = (30.0 / delta).max(25.0 / decay_rate);
        Self::uniform(r_min, r_max, n_points)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A bound-state pair on a grid, with its normalization bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorSolution {
    pub grid: RadialGrid,
    pub f: Vec<f64>,
    pub g: Vec<f64>,
    pub energy: f64,
    pub norm_constant: f64,
    pub quantum: QuantumState,
    pub scheme: SchemeConfig,
}

/// Composite Simpson rule over uniformly spaced samples (odd count).
pub fn simpson(values: &[f64], step: f64) -> f64 {
    let n = values.len();
    if n < 3 {
        return 0.0;
    }
    let n = if n.is_multiple_of(2) { n - 1 } else { n };
    let mut acc = values[0] + values[n - 1];
    for (i, &v) in values[1..n - 1].iter().enumerate() {
        acc += if i % 2 == 0 { 4.0 * v } else { 2.0 * v };
    }
    acc * step / 3.0
}

struct ClosedForm {
    /// decay exponent ε (units of δ)
    eps: f64,
    /// (1−s)^gamma boundary exponent
    gamma: f64,
    /// ₂F₁ parameters (−n, b; c; s)
    n: u32,
    b: f64,
    c: f64,
}

impl ClosedForm {
    fn eval(&self, delta: f64, r: f64) -> Result<f64> {
        let s = (-delta * r).exp();
        let one_minus = -(-delta * r).exp_m1();
        Ok(s.powf(self.eps)
            * one_minus.powf(self.gamma)
            * hyp2f1_terminating(self.n, self.b, self.c, s)?)
    }

    /// d/dr of eval, analytically: the shell factor contributes
    /// (−εδ + γδ s/(1−s)), the series δ·s·|dF/ds| via the contiguous relation.
    fn eval_deriv(&self, delta: f64, r: f64) -> Result<f64> {
        let s = (-delta * r).exp();
        let one_minus = -(-delta * r).exp_m1();
        let shell = s.powf(self.eps) * one_minus.powf(self.gamma);
        let series = hyp2f1_terminating(self.n, self.b, self.c, s)?;
        let dseries = hyp2f1_terminating_derivative(self.n, self.b, self.c, s)?;
        Ok(shell * ((-self.eps * delta + self.gamma * delta * s / one_minus) * series
            - delta * s * dseries))
    }
}

fn pseudospin_r2_form(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
    energy: f64,
) -> Result<ClosedForm> {
    let rad = pseudospin_r2_eps_sq(params, state, scheme.effective_d0(), energy);
    if rad <= 0.0 {
        return Err(Error::NotBound(format!(
            "decay radicand {rad} <= 0 at E = {energy}"
        )));
    }
    let eps = rad.sqrt() / params.screening;
    let lt = derive_orbital(state, Symmetry::Pseudospin) as f64;
    Ok(ClosedForm {
        eps,
        gamma: lt + 1.0,
        n: state.n,
        b: state.n as f64 + 2.0 * (eps + lt + 1.0),
        c: 1.0 + 2.0 * eps,
    })
}

fn spin_r2_form(
    params: &ModelParams,
    state: QuantumState,
    scheme: &SchemeConfig,
    energy: f64,
) -> Result<ClosedForm> {
    let rad = spin_r2_eps_sq(params, state, scheme.effective_d0(), energy);
    if rad <= 0.0 {
        return Err(Error::NotBound(format!(
            "decay radicand {rad} <= 0 at E = {energy}"
        )));
    }
    let eps = rad.sqrt() / params.screening;
    let l = derive_orbital(state, Symmetry::Spin) as f64;
    Ok(ClosedForm {
        eps,
        gamma: l + 1.0,
        n: state.n,
        b: state.n as f64 + 2.0 * (eps + l + 1.0),
        c: 1.0 + 2.0 * eps,
    })
}

fn r1_form(params: &ModelParams, state: QuantumState, energy: f64) -> Result<ClosedForm> {
    let mm = params.effective_mass();
    let rad = mm * mm - energy * energy;
    if rad <= 0.0 {
        return Err(Error::NotBound(format!(
            "|E| = {} is not below the gap {}",
            energy.abs(),
            mm.abs()
        )));
    }
    let alpha = rad.sqrt() / params.screening;
    let orbital = derive_orbital(state, params.symmetry) as f64;
    Ok(ClosedForm {
        eps: alpha,
        gamma: orbital + 1.0,
        n: state.n,
        b: state.n as f64 + 2.0 * (alpha + orbital + 1.0),
        c: 1.0 + 2.0 * alpha,
    })
}

fn eval_on_grid(form: &ClosedForm, delta: f64, grid: &RadialGrid) -> Result<Vec<f64>> {
    grid.points().iter().map(|&r| form.eval(delta, r)).collect()
}

/// Lower pseudospin r⁻² component
/// G(r) = e^{−εδr}(1 − e^{−δr})^{l̃+1} ₂F₁(−n, n + 2(ε + l̃ + 1); 1 + 2ε; e^{−δr}).
pub fn lower_pseudospin_r2(
    params: &ModelParams,
    state: QuantumState,
    energy: f64,
    scheme: &SchemeConfig,
    grid: &RadialGrid,
) -> Result<Vec<f64>> {
    let form = pseudospin_r2_form(params, state, scheme, energy)?;
    eval_on_grid(&form, params.screening, grid)
}

/// Upper pseudospin companion F = [(d/dr − κ/r)G]/(M − E + C_ps).
pub fn upper_from_lower_pseudospin_r2(
    params: &ModelParams,
    state: QuantumState,
    energy: f64,
    scheme: &SchemeConfig,
    grid: &RadialGrid,
) -> Result<Vec<f64>> {
    let denom = params.mass - energy + params.symmetry_constant;
    if denom.abs() < 1e-12 {
        return Err(Error::DivergentComponent(format!(
            "M − E + C_ps = {denom}: upper component diverges"
        )));
    }
    let form = pseudospin_r2_form(params, state, scheme, energy)?;
    let d = params.screening;
    let k = state.kappa as f64;
    grid.points()
        .iter()
        .map(|&r| Ok((form.eval_deriv(d, r)? - k / r * form.eval(d, r)?) / denom))
        .collect()
}

/// Upper spin r⁻² component
/// F(r) = e^{−ε̄δr}(1 − e^{−δr})^{l+1} ₂F₁(−n, n + 2(ε̄ + l + 1); 1 + 2ε̄; e^{−δr}).
pub fn upper_spin_r2(
    params: &ModelParams,
    state: QuantumState,
    energy: f64,
    scheme: &SchemeConfig,
    grid: &RadialGrid,
) -> Result<Vec<f64>> {
    let form = spin_r2_form(params, state, scheme, energy)?;
    eval_on_grid(&form, params.screening, grid)
}

/// Lower spin companion G = [(d/dr + κ/r)F]/(M + E − C_s).
pub fn lower_spin_r2(
    params: &ModelParams,
    state: QuantumState,
    energy: f64,
    scheme: &SchemeConfig,
    grid: &RadialGrid,
) -> Result<Vec<f64>> {
    let denom = params.mass + energy - params.symmetry_constant;
    if denom.abs() < 1e-12 {
        return Err(Error::DivergentComponent(format!(
            "M + E − C_s = {denom}: lower component diverges"
        )));
    }
    let form = spin_r2_form(params, state, scheme, energy)?;
    let d = params.screening;
    let k = state.kappa as f64;
    grid.points()
        .iter()
        .map(|&r| Ok((form.eval_deriv(d, r)? + k / r * form.eval(d, r)?) / denom))
        .collect()
}

/// Proper-r⁻¹ pair: the symmetry's own component in closed form, its partner
/// through the W-substituted first-order coupling. Returns (F, G).
pub fn spinor_r1(
    params: &ModelParams,
    state: QuantumState,
    energy: f64,
    grid: &RadialGrid,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let form = r1_form(params, state, energy)?;
    let d = params.screening;
    let k = state.kappa as f64;
    let mm = params.effective_mass();
    match params.symmetry {
        Symmetry::Spin => {
            let denom = energy + mm;
            if denom.abs() < 1e-12 {
                return Err(Error::DivergentComponent("E + M_s vanishes".into()));
            }
            let f = eval_on_grid(&form, d, grid)?;
            let g = grid
                .points()
                .iter()
                .map(|&r| {
                    let w = hulthen_w(r, d)?;
                    Ok((form.eval_deriv(d, r)? + k * w * form.eval(d, r)?) / denom)
                })
                .collect::<Result<Vec<f64>>>()?;
            Ok((f, g))
        }
        Symmetry::Pseudospin => {
            let denom = mm - energy;
            if denom.abs() < 1e-12 {
                return Err(Error::DivergentComponent("M_ps − E vanishes".into()));
            }
            let g = eval_on_grid(&form, d, grid)?;
            let f = grid
                .points()
                .iter()
                .map(|&r| {
                    let w = hulthen_w(r, d)?;
                    Ok((form.eval_deriv(d, r)? - k * w * form.eval(d, r)?) / denom)
                })
                .collect::<Result<Vec<f64>>>()?;
            Ok((f, g))
        }
    }
}

/// Nonrelativistic radial function for the given variant. The r⁻² variants
/// return the full radial function R(r) (with the 1/r prefactor); ProperR1
/// returns the reduced function u(r) = rR(r), which is what its closed form
/// describes.
pub fn nonrel_radial(
    n: u32,
    l: u32,
    m: f64,
    v0: f64,
    delta: f64,
    variant: NonrelVariant,
    grid: &RadialGrid,
) -> Result<Vec<f64>> {
    let e = crate::spectra::energy_nonrel(n, l, m, v0, delta, variant)?;
    let lf = l as f64;
    let (zeta_sq, reduced) = match variant {
        NonrelVariant::ImprovedD0 => (
            (-2.0 * m * e + lf * (lf + 1.0) * delta * delta / 12.0) / (delta * delta),
            false,
        ),
        NonrelVariant::Traditional => ((-2.0 * m * e) / (delta * delta), false),
        NonrelVariant::ProperR1 => ((-2.0 * m * e) / (delta * delta), true),
    };
    if zeta_sq <= 0.0 {
        return Err(Error::NotBound(format!(
            "nonrelativistic bound condition violated (E = {e})"
        )));
    }
    let zeta = zeta_sq.sqrt();
    let form = ClosedForm {
        eps: zeta,
        gamma: lf + 1.0,
        n,
        b: n as f64 + 2.0 * (zeta + lf + 1.0),
        c: 1.0 + 2.0 * zeta,
    };
    grid.points()
        .iter()
        .map(|&r| {
            let u = form.eval(delta, r)?;
            Ok(if reduced { u } else { u / r })
        })
        .collect()
}

/// Scale so that ∫(F² + G²)dr = 1 under composite Simpson on the grid.
pub fn normalize(solution: &SpinorSolution) -> Result<SpinorSolution> {
    let density: Vec<f64> = solution
        .f
        .iter()
        .zip(&solution.g)
        .map(|(f, g)| f * f + g * g)
        .collect();
    let integral = simpson(&density, solution.grid.step());
    if !(integral.is_finite() && integral > 0.0) {
        return Err(Error::Domain(format!(
            "norm integral {integral} is not positive-finite"
        )));
    }
    let scale = integral.sqrt().recip();
    Ok(SpinorSolution {
        grid: solution.grid.clone(),
        f: solution.f.iter().map(|v| v * scale).collect(),
        g: solution.g.iter().map(|v| v * scale).collect(),
        energy: solution.energy,
        norm_constant: solution.norm_constant * scale,
        quantum: solution.quantum,
        scheme: solution.scheme,
    })
}

/// Convenience constructor: closed-form pair for (params, state, E) under the
/// scheme, assembled and normalized on a bound-state grid.
pub fn build_normalized(
    params: &ModelParams,
    state: QuantumState,
    energy: f64,
    scheme: &SchemeConfig,
    n_points: usize,
) -> Result<SpinorSolution> {
    let d = params.screening;
    let (f, g, decay, grid) = match (params.symmetry, scheme.scheme) {
        (Symmetry::Pseudospin, Scheme::ImprovedR2 | Scheme::ConventionalR2) => {
            let rad = pseudospin_r2_eps_sq(params, state, scheme.effective_d0(), energy);
            if rad <= 0.0 {
                return Err(Error::NotBound("decay radicand nonpositive".into()));
            }
            let grid = RadialGrid::for_bound_state(d, rad.sqrt(), n_points)?;
            (
                upper_from_lower_pseudospin_r2(params, state, energy, scheme, &grid)?,
                lower_pseudospin_r2(params, state, energy, scheme, &grid)?,
                rad.sqrt(),
                grid,
            )
        }
        (Symmetry::Spin, Scheme::ImprovedR2 | Scheme::ConventionalR2) => {
            let rad = spin_r2_eps_sq(params, state, scheme.effective_d0(), energy);
            if rad <= 0.0 {
                return Err(Error::NotBound("decay radicand nonpositive".into()));
            }
            let grid = RadialGrid::for_bound_state(d, rad.sqrt(), n_points)?;
            (
                upper_spin_r2(params, state, energy, scheme, &grid)?,
                lower_spin_r2(params, state, energy, scheme, &grid)?,
                rad.sqrt(),
                grid,
            )
        }
        (_, Scheme::ProperR1) => {
            let mm = params.effective_mass();
            let rad = mm * mm - energy * energy;
            if rad <= 0.0 {
                return Err(Error::NotBound("energy outside the mass gap".into()));
            }
            let grid = RadialGrid::for_bound_state(d, rad.sqrt(), n_points)?;
            let (f, g) = spinor_r1(params, state, energy, &grid)?;
            (f, g, rad.sqrt(), grid)
        }
    };
    let _ = decay;
    let raw = SpinorSolution {
        grid,
        f,
        g,
        energy,
        norm_constant: 1.0,
        quantum: state,
        scheme: *scheme,
    };
    normalize(&raw)
}

/// Residual diagnostics of a component against its second-order equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeResidual {
    pub max_rel: f64,
    pub rms_rel: f64,
    /// True when the component is numerically zero (residual meaningless).
    pub degenerate: bool,
}

/// Central-difference check of u'' + q·u = 0 on the interior of a uniform
/// grid, normalized to the scale of the equation terms.
pub fn ode_residual(
    component: &[f64],
    grid: &RadialGrid,
    spec: &OdeSpec,
    energy: f64,
) -> Result<OdeResidual> {
    if grid.len() != component.len() {
        return Err(Error::Domain("component and grid lengths differ".into()));
    }
    if grid.len() < 34 {
        return Err(Error::Domain("grid too coarse: need at least 32 interior points".into()));
    }
    let peak = component.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if peak == 0.0 {
        return Ok(OdeResidual {
            max_rel: 0.0,
            rms_rel: 0.0,
            degenerate: true,
        });
    }
    let h = grid.step();
    let pts = grid.points();
    let mut max_abs = 0.0f64;
    let mut sum_sq = 0.0f64;
    let mut scale = 0.0f64;
    let mut count = 0usize;
    for i in 1..component.len() - 1 {
        let q = spec.q(pts[i], energy);
        // a 3-point stencil carries no information where the local wavelength
        // is unresolved (|q|h² of order one, e.g. against 1/r² near r = 0)
        if q.abs() * h * h > 0.05 {
            continue;
        }
        let second = (component[i + 1] - 2.0 * component[i] + component[i - 1]) / (h * h);
        let qu = q * component[i];
        let res = second + qu;
        max_abs = max_abs.max(res.abs());
        sum_sq += res * res;
        scale = scale.max(qu.abs());
        count += 1;
    }
    if count < 32 {
        return Err(Error::Domain(
            "grid too coarse: fewer than 32 resolvable interior points".into(),
        ));
    }
    let scale = scale.max(1e-300);
    Ok(OdeResidual {
        max_rel: max_abs / scale,
        rms_rel: (sum_sq / count as f64).sqrt() / scale,
        degenerate: false,
    })
}

/// Max residual of the first-order coupling for a constructed (F, G) pair,
/// normalized to the scale of the coupling terms. `orbital_w` selects the κW
/// form the proper-r⁻¹ scheme induces; the r⁻² forms keep κ/r.
pub fn first_order_residual(
    params: &ModelParams,
    state: QuantumState,
    energy: f64,
    f: &[f64],
    g: &[f64],
    grid: &RadialGrid,
    orbital_w: bool,
) -> Result<f64> {
    if f.len() != grid.len() || g.len() != grid.len() {
        return Err(Error::Domain("component and grid lengths differ".into()));
    }
    let h = grid.step();
    let pts = grid.points();
    let d = params.screening;
    let k = state.kappa as f64;
    let m = params.mass;
    let c = params.symmetry_constant;
    let v0 = params.strength;
    let mut worst1 = 0.0f64;
    let mut worst2 = 0.0f64;
    let mut scale1 = 0.0f64;
    let mut scale2 = 0.0f64;
    // five-point first derivative: keeps the stencil floor (O(h⁴)) well below
    // the 1e-5 scale the coupling residual is probing
    let d5 = |v: &[f64], i: usize| {
        (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h)
    };
    for i in 2..grid.len() - 2 {
        let r = pts[i];
        let x = 1.0 / (d * r).exp_m1();
        let orb = if orbital_w { k * d * x } else { k / r };
        // Δ and Σ of the symmetry's setup
        let (delta_r, sigma_r) = match params.symmetry {
            Symmetry::Spin => {
                // Δ = C_s; Σ = Hulthen (r²) or 2V − C_s (r¹)
                let sigma = if orbital_w { -2.0 * v0 * x - c } else { -v0 * x };
                (c, sigma)
            }
            Symmetry::Pseudospin => {
                // Σ = C_ps; Δ = Hulthen (r²) or 2V − C_ps (r¹)
                let delta_pot = if orbital_w { -2.0 * v0 * x - c } else { -v0 * x };
                (delta_pot, c)
            }
        };
        let df = d5(f, i);
        let dg = d5(g, i);
        // (d/dr + κ·orb)F = (M + E − Δ)G
        let r1 = df + orb * f[i] - (m + energy - delta_r) * g[i];
        let s1 = df.abs().max((orb * f[i]).abs()).max(((m + energy - delta_r) * g[i]).abs());
        // (d/dr − κ·orb)G = (M − E + Σ)F
        let r2 = dg - orb * g[i] - (m - energy + sigma_r) * f[i];
        let s2 = dg.abs().max((orb * g[i]).abs()).max(((m - energy + sigma_r) * f[i]).abs());
        worst1 = worst1.max(r1.abs());
        worst2 = worst2.max(r2.abs());
        scale1 = scale1.max(s1);
        scale2 = scale2.max(s2);
    }
    // relative to the global scale of each coupling equation's terms
    Ok((worst1 / scale1.max(1e-300)).max(worst2 / scale2.max(1e-300)))
}

/// Node count of the dominant component (the larger-normed one).
pub fn dominant_node_count(solution: &SpinorSolution) -> usize {
    let nf: f64 = solution.f.iter().map(|v| v * v).sum();
    let ng: f64 = solution.g.iter().map(|v| v * v).sum();
    if nf >= ng {
        node_count(&solution.f)
    } else {
        node_count(&solution.g)
    }
}

/// Node count of the component that solves the second-order equation (F for
/// spin, G for pseudospin); this is the one the radial quantum number counts.
pub fn principal_node_count(solution: &SpinorSolution, symmetry: Symmetry) -> usize {
    match symmetry {
        Symmetry::Spin => node_count(&solution.f),
        Symmetry::Pseudospin => node_count(&solution.g),
    }
}

/// The principal component's samples for a symmetry.
pub fn principal_component(solution: &SpinorSolution, symmetry: Symmetry) -> &[f64] {
    match symmetry {
        Symmetry::Spin => &solution.f,
        Symmetry::Pseudospin => &solution.g,
    }
}

/// The ODE spec matching a solution's scheme/symmetry, for residual checks.
pub fn spec_for(params: &ModelParams, state: QuantumState, scheme: &SchemeConfig) -> OdeSpec {
    let mode = match scheme.scheme {
        Scheme::ImprovedR2 | Scheme::ConventionalR2 => CentrifugalMode::SchemeR2 {
            d0: scheme.effective_d0(),
        },
        Scheme::ProperR1 => CentrifugalMode::SchemeR1,
    };
    oracle::build_ode(params, state, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra;

    fn spin_params(c: f64, delta: f64) -> ModelParams {
        ModelParams::new(5.0, delta, 3.4, c, Symmetry::Spin).unwrap()
    }

    fn t5_state(delta: f64, n: u32, kappa: i32) -> (ModelParams, QuantumState, f64) {
        let p = spin_params(0.0, delta);
        let st = QuantumState::new(n, kappa).unwrap();
        let e = spectra::energy_spin_r2(&p, st, &SchemeConfig::improved())
            .unwrap()
            .e_plus
            .unwrap();
        (p, st, e)
    }

    #[test]
    fn upper_spin_component_boundary_behavior() {
        let (p, st, e) = t5_state(0.1, 0, 1);
        let grid = RadialGrid::for_bound_state(0.1, 0.5, 2001).unwrap();
        let f = upper_spin_r2(&p, st, e, &SchemeConfig::improved(), &grid).unwrap();
        let peak = f.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        // vanishes at both ends for a bound state
        assert!(f[0].abs() < 1e-4 * peak);
        assert!(f.last().unwrap().abs() < 1e-10 * peak);
        // n = 0 is nodeless
        assert_eq!(node_count(&f), 0);
    }

    #[test]
    fn spin_r2_pair_satisfies_first_order_system() {
        let (p, st, e) = t5_state(0.025, 0, 1);
        let sol = build_normalized(&p, st, e, &SchemeConfig::improved(), 240_001).unwrap();
        let res = first_order_residual(&p, st, e, &sol.f, &sol.g, &sol.grid, false).unwrap();
        assert!(res < 1e-5, "residual {res}");
    }

    #[test]
    fn spin_r1_pair_satisfies_substituted_system() {
        let p = spin_params(0.0, 0.1);
        let st = QuantumState::new(1, 2).unwrap();
        let e = spectra::energy_spin_r1(&p, st).unwrap().e_plus.unwrap();
        // short dense grid: the state decays at √(M²−E²) ≈ 1.3 fm⁻¹
        let grid = RadialGrid::uniform(1e-3, 25.0, 40_001).unwrap();
        let (f, g) = spinor_r1(&p, st, e, &grid).unwrap();
        let res = first_order_residual(&p, st, e, &f, &g, &grid, true).unwrap();
        assert!(res < 1e-5, "residual {res}");
        assert_eq!(node_count(&f), 1);
    }

    #[test]
    fn closed_form_solves_its_ode() {
        let (p, st, e) = t5_state(0.1, 1, 1);
        let grid = RadialGrid::for_bound_state(0.1, 1.3, 160_001).unwrap();
        let f = upper_spin_r2(&p, st, e, &SchemeConfig::improved(), &grid).unwrap();
        let spec = spec_for(&p, st, &SchemeConfig::improved());
        let res = ode_residual(&f, &grid, &spec, e).unwrap();
        assert!(!res.degenerate);
        assert!(res.max_rel < 1e-4, "max_rel {}", res.max_rel);
        // a 1% energy perturbation must blow the residual up by orders of magnitude
        let f_bad = upper_spin_r2(&p, st, e * 1.01, &SchemeConfig::improved(), &grid).unwrap();
        let res_bad = ode_residual(&f_bad, &grid, &spec, e * 1.01).unwrap();
        assert!(res_bad.max_rel > 100.0 * res.max_rel);
    }

    #[test]
    fn residual_converges_at_second_order() {
        let (p, st, e) = t5_state(0.1, 0, 1);
        let spec = spec_for(&p, st, &SchemeConfig::improved());
        let mut prev = f64::MAX;
        for n_points in [20_001usize, 40_001, 80_001] {
            let grid = RadialGrid::for_bound_state(0.1, 1.3, n_points).unwrap();
            let f = upper_spin_r2(&p, st, e, &SchemeConfig::improved(), &grid).unwrap();
            let res = ode_residual(&f, &grid, &spec, e).unwrap();
            assert!(res.max_rel < prev / 3.0, "{} !<< {prev}", res.max_rel);
            prev = res.max_rel;
        }
    }

    #[test]
    fn normalization_is_idempotent_and_scale_invariant() {
        let (p, st, e) = t5_state(0.1, 0, 1);
        let sol = build_normalized(&p, st, e, &SchemeConfig::improved(), 2001).unwrap();
        let density: Vec<f64> = sol.f.iter().zip(&sol.g).map(|(f, g)| f * f + g * g).collect();
        assert!((simpson(&density, sol.grid.step()) - 1.0).abs() < 1e-10);
        let twice = normalize(&sol).unwrap();
        for (a, b) in twice.f.iter().zip(&sol.f) {
            assert!((a - b).abs() < 1e-10 * b.abs().max(1e-12));
        }
        // doubling all values then normalizing gives the same output
        let doubled = SpinorSolution {
            f: sol.f.iter().map(|v| 2.0 * v).collect(),
            g: sol.g.iter().map(|v| 2.0 * v).collect(),
            ..sol.clone()
        };
        let renorm = normalize(&doubled).unwrap();
        for (a, b) in renorm.f.iter().zip(&sol.f) {
            assert!((a - b).abs() < 1e-12 * b.abs().max(1e-12));
        }
        // zero input is rejected
        let zero = SpinorSolution {
            f: vec![0.0; sol.f.len()],
            g: vec![0.0; sol.g.len()],
            ..sol.clone()
        };
        assert!(normalize(&zero).is_err());
    }

    #[test]
    fn pseudospin_r2_components_build() {
        // Table-1-style state: closed-form shapes exist even though these
        // energies are algebraic continuations, and the companion's n = 0
        // second term vanishes
        let p = ModelParams::new(5.0, 0.025, 3.4, -4.9, Symmetry::Pseudospin).unwrap();
        let st = QuantumState::new(0, 2).unwrap();
        let e = spectra::energy_pseudospin_r2(&p, st, &SchemeConfig::improved())
            .unwrap()
            .e_minus
            .unwrap();
        let grid = RadialGrid::for_bound_state(0.025, 0.12, 2001).unwrap();
        let g = lower_pseudospin_r2(&p, st, e, &SchemeConfig::improved(), &grid).unwrap();
        // G(0) → 0 for κ ≥ 1 and decays at infinity
        let peak = g.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        assert!(g[0].abs() < 1e-3 * peak);
        assert!(g.last().unwrap().abs() < 1e-8 * peak);
        let f = upper_from_lower_pseudospin_r2(&p, st, e, &SchemeConfig::improved(), &grid).unwrap();
        assert!(f.iter().all(|v| v.is_finite()));
    }

    #[test]
    fn zero_component_is_degenerate() {
        let grid = RadialGrid::uniform(1e-3, 10.0, 201).unwrap();
        let p = spin_params(0.0, 0.1);
        let st = QuantumState::new(0, 1).unwrap();
        let spec = spec_for(&p, st, &SchemeConfig::improved());
        let res = ode_residual(&vec![0.0; grid.len()], &grid, &spec, -4.8).unwrap();
        assert!(res.degenerate);
        assert_eq!(res.max_rel, 0.0);
    }

    #[test]
    fn nonrel_radial_shapes() {
        let grid = RadialGrid::uniform(1e-3, 15.0, 40_001).unwrap();
        // l = 0 traditional: the exact s-wave: finite at origin after the 1/r
        let r = nonrel_radial(0, 0, 1.0, 1.0, 0.1, NonrelVariant::Traditional, &grid).unwrap();
        assert!(r[0].is_finite() && r[0] > 0.0);
        // R(0) stays finite for l = 1: (1−e^{−δr})^{l+1}/r ~ δ^{l+1} r^l, so the
        // first grid point is already deep below the peak and shrinking like r
        let r1 = nonrel_radial(0, 1, 1.0, 1.0, 0.1, NonrelVariant::ImprovedD0, &grid).unwrap();
        let peak = r1.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        assert!(r1[0].is_finite() && r1[0].abs() < 0.05 * peak);
        // reduced ProperR1 solves the W-substituted radial equation
        let u = nonrel_radial(1, 1, 1.0, 1.0, 0.1, NonrelVariant::ProperR1, &grid).unwrap();
        let e = spectra::energy_nonrel(1, 1, 1.0, 1.0, 0.1, NonrelVariant::ProperR1).unwrap();
        let spec = oracle::build_nonrel_ode(1.0, 1.0, 0.1, 1, oracle::NonrelCentrifugal::ProperR1);
        let res = ode_residual(&u, &grid, &spec, e).unwrap();
        assert!(res.max_rel < 1e-4, "{}", res.max_rel);
        assert_eq!(node_count(&u), 1);
    }
}
