//! Centrifugal-term substitutions.
//!
//! The screened kernel W(r) = δ/(e^{δr} − 1) ≈ 1/r drives both schemes:
//!
//!   1/r²        ≈ δ²[d0 + 1/(e^{δr}−1) + 1/(e^{δr}−1)²]   (shifted Greene-Aldrich)
//!   κ(κ±1)/r²   = κ²W² ∓ κW′                               (1/r → W in the first-order system)
//!
//! with W′ = −(W² + δW). Small δr is where these substitutions earn their keep,
//! so 1/(e^{δr}−1) is always evaluated through expm1.

use crate::error::{Error, Result};
use crate::model::{Scheme, SchemeConfig, Symmetry};

/// Sign convention of the orbital term being replaced: κ(κ+1)/r² couples to the
/// upper component (spin side), κ(κ−1)/r² to the lower one (pseudospin side).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitalSign {
    /// κ(κ+1)/r² → κ²W² − κW′
    Upper,
    /// κ(κ−1)/r² → κ²W² + κW′
    Lower,
}

impl OrbitalSign {
    pub fn for_symmetry(symmetry: Symmetry) -> Self {
        match symmetry {
            Symmetry::Spin => OrbitalSign::Upper,
            Symmetry::Pseudospin => OrbitalSign::Lower,
        }
    }

    /// κ(κ±1) for this sign.
    pub fn orbital_factor(self, kappa: i32) -> f64 {
        let k = kappa as f64;
        match self {
            OrbitalSign::Upper => k * (k + 1.0),
            OrbitalSign::Lower => k * (k - 1.0),
        }
    }
}

fn check_positive(r: f64, delta: f64) -> Result<()> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    if !(delta > 0.0) {
        return Err(Error::Domain(format!("delta must be positive, got {delta}")));
    }
    Ok(())
}

/// W(r) = δ/(e^{δr} − 1), fm^-1.
pub fn hulthen_w(r: f64, delta: f64) -> Result<f64> {
    check_positive(r, delta)?;
    Ok(delta / (delta * r).exp_m1())
}

/// W′(r) = −δ²e^{δr}/(e^{δr}−1)², computed as −W(W + δ) which stays finite for
/// large δr and keeps full precision for small δr.
pub fn hulthen_w_prime(r: f64, delta: f64) -> Result<f64> {
    let w = hulthen_w(r, delta)?;
    Ok(-w * (w + delta))
}

/// δ²[d0 + 1/(e^{δr}−1) + 1/(e^{δr}−1)²] = δ²d0 + δW + W², fm^-2.
pub fn improved_inv_r2(r: f64, delta: f64, d0: f64) -> Result<f64> {
    let w = hulthen_w(r, delta)?;
    Ok(delta * delta * d0 + delta * w + w * w)
}

/// The induced substitute for κ(κ±1)/r²: κ²W² ∓ κW′, fm^-2.
pub fn proper_orbital_term(r: f64, delta: f64, kappa: i32, sign: OrbitalSign) -> Result<f64> {
    let w = hulthen_w(r, delta)?;
    let wp = -w * (w + delta);
    let k = kappa as f64;
    Ok(match sign {
        OrbitalSign::Upper => k * k * w * w - k * wp,
        OrbitalSign::Lower => k * k * w * w + k * wp,
    })
}

/// What `error_profile` compares against the exact orbital term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileKind {
    /// One of the three substitution schemes.
    Scheme(SchemeConfig),
    /// The single-term W² ansatz used by earlier work, kept as a comparator.
    WSquaredOnly,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileRow {
    pub r: f64,
    pub exact: f64,
    pub approximated: f64,
    pub abs_error: f64,
}

/// Exact vs substituted κ-dependent orbital term along a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxProfile {
    pub rows: Vec<ProfileRow>,
}

pub fn error_profile(
    kind: ProfileKind,
    delta: f64,
    kappa: i32,
    sign: OrbitalSign,
    grid: &[f64],
) -> Result<ApproxProfile> {
    if grid.is_empty() {
        return Err(Error::Domain("empty grid".into()));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("grid must be strictly increasing".into()));
    }
    let factor = sign.orbital_factor(kappa);
    let mut rows = Vec::with_capacity(grid.len());
    for &r in grid {
        let exact = factor / (r * r);
        let approximated = match kind {
            ProfileKind::Scheme(cfg) => match cfg.scheme {
                Scheme::ImprovedR2 | Scheme::ConventionalR2 => {
                    factor * improved_inv_r2(r, delta, cfg.effective_d0())?
                }
                Scheme::ProperR1 => proper_orbital_term(r, delta, kappa, sign)?,
            },
            ProfileKind::WSquaredOnly => {
                let w = hulthen_w(r, delta)?;
                factor * w * w
            }
        };
        rows.push(ProfileRow {
            r,
            exact,
            approximated,
            abs_error: (approximated - exact).abs(),
        });
    }
    Ok(ApproxProfile { rows })
}
