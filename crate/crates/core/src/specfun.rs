//! Pochhammer symbols, terminating Gauss hypergeometric series and Jacobi
//! polynomials: the ingredients of the closed-form radial components.
//!
//! Every hypergeometric series here terminates (first parameter −n), so the
//! general analytic-continuation machinery is out of scope on purpose.

use crate::error::{Error, Result};

/// Rising factorial (x)_k = x(x+1)...(x+k−1); empty product is 1.
pub fn pochhammer(x: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= x + i as f64;
    }
    acc
}

/// Coefficients of ₂F₁(−n, b; c; x) = Σ_{k=0}^{n} (−n)_k (b)_k / ((c)_k k!) x^k.
#[derive(Debug, Clone, PartialEq)]
pub struct TerminatingHyp {
    pub n: u32,
    pub b: f64,
    pub c: f64,
    pub coefficients: Vec<f64>,
}

fn check_no_pole(n: u32, c: f64) -> Result<()> {
    for k in 0..n {
        if (c + k as f64).abs() < 1e-12 {
            return Err(Error::Domain(format!(
                "pole in (c)_k: c = {c} hits a nonpositive integer within k < {n}"
            )));
        }
    }
    Ok(())
}

impl TerminatingHyp {
    pub fn new(n: u32, b: f64, c: f64) -> Result<Self> {
        check_no_pole(n, c)?;
        let mut coefficients = Vec::with_capacity(n as usize + 1);
        let mut term = 1.0;
        coefficients.push(term);
        for k in 0..n {
            let kf = k as f64;
            term *= (-(n as f64) + kf) * (b + kf) / ((c + kf) * (kf + 1.0));
            coefficients.push(term);
        }
        Ok(Self { n, b, c, coefficients })
    }

    /// Horner evaluation of the stored polynomial.
    pub fn eval_horner(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coefficients.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// ₂F₁(−n, b; c; x) as a finite sum with compensated accumulation; the
/// alternating terms at moderate n would otherwise shed digits.
pub fn hyp2f1_terminating(n: u32, b: f64, c: f64, x: f64) -> Result<f64> {
    check_no_pole(n, c)?;
    let mut sum = 1.0;
    let mut comp = 0.0;
    let mut term = 1.0;
    for k in 0..n {
        let kf = k as f64;
        term *= (-(n as f64) + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

/// d/dx ₂F₁(−n, b; c; x) = (−n·b/c) ₂F₁(−n+1, b+1; c+1; x).
pub fn hyp2f1_terminating_derivative(n: u32, b: f64, c: f64, x: f64) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    let factor = -(n as f64) * b / c;
    Ok(factor * hyp2f1_terminating(n - 1, b + 1.0, c + 1.0, x)?)
}

/// Jacobi polynomial P_n^{(a,b)}(x) by the standard three-term recurrence.
pub fn jacobi_p(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut p_prev = 1.0;
    let mut p = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for m in 1..n {
        let mf = m as f64;
        let c1 = 2.0 * (mf + 1.0) * (mf + a + b + 1.0) * (2.0 * mf + a + b);
        let c2 = (2.0 * mf + a + b + 1.0) * (a * a - b * b);
        let c3 = pochhammer(2.0 * mf + a + b, 3);
        let c4 = 2.0 * (mf + a) * (mf + b) * (2.0 * mf + a + b + 2.0);
        let next = ((c2 + c3 * x) * p - c4 * p_prev) / c1;
        p_prev = p;
        p = next;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(3.7, 0), 1.0);
        assert_eq!(pochhammer(1.0, 5), 120.0);
        assert!((pochhammer(0.5, 3) - 1.875).abs() < 1e-15);
    }

    #[test]
    fn hyp_terminates() {
        // n = 0 is identically 1
        assert_eq!(hyp2f1_terminating(0, 4.3, -2.5, 0.9).unwrap(), 1.0);
        // n = 1: 1 − (b/c) x
        let v = hyp2f1_terminating(1, 2.0, 3.0, 0.5).unwrap();
        assert!((v - (1.0 - 2.0 / 3.0 * 0.5)).abs() < 1e-15);
        // pole detection
        assert!(hyp2f1_terminating(3, 1.0, -1.0, 0.2).is_err());
        assert!(TerminatingHyp::new(3, 1.0, -2.0, ).is_err());
    }

    #[test]
    fn horner_and_sum_agree() {
        for n in 0..=10u32 {
            let h = TerminatingHyp::new(n, 1.3 + n as f64, 0.7).unwrap();
            for &x in &[(-0.9), -0.3, 0.0, 0.4, 1.0] {
                let a = h.eval_horner(x);
                let b = hyp2f1_terminating(n, h.b, h.c, x).unwrap();
                // round-off agreement, scaled by the series' own cancellation
                let cond: f64 = h
                    .coefficients
                    .iter()
                    .enumerate()
                    .map(|(k, ck)| ck.abs() * x.abs().powi(k as i32))
                    .sum();
                assert!((a - b).abs() <= 1e-14 * cond.max(1.0), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn derivative_identity_vs_finite_differences() {
        let (n, b, c) = (4u32, 2.7, 1.9);
        let h = 1e-5;
        for &x in &[-0.8, -0.2, 0.3, 0.7] {
            let fd = (hyp2f1_terminating(n, b, c, x + h).unwrap()
                - hyp2f1_terminating(n, b, c, x - h).unwrap())
                / (2.0 * h);
            let an = hyp2f1_terminating_derivative(n, b, c, x).unwrap();
            assert!((fd - an).abs() < 1e-6 * an.abs().max(1.0), "x={x}");
        }
    }

    #[test]
    fn jacobi_first_orders() {
        assert_eq!(jacobi_p(0, 0.3, -0.2, 0.7), 1.0);
        let (a, b, x) = (1.4, 0.9, -0.35);
        let expect = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
        assert!((jacobi_p(1, a, b, x) - expect).abs() < 1e-14);
    }

    #[test]
    fn jacobi_matches_terminating_hypergeometric() {
        // P_n^{(a,b)}(1−2s) = (a+1)_n/n! · ₂F₁(−n, n+a+b+1; a+1; s)
        for n in 0..=10u32 {
            let (a, b) = (2.2, 1.1);
            let pref = pochhammer(a + 1.0, n) / pochhammer(1.0, n);
            for i in 0..=8 {
                let s = i as f64 / 8.0;
                let lhs = jacobi_p(n, a, b, 1.0 - 2.0 * s);
                let rhs = pref * hyp2f1_terminating(n, n as f64 + a + b + 1.0, a + 1.0, s).unwrap();
                let h = TerminatingHyp::new(n, n as f64 + a + b + 1.0, a + 1.0).unwrap();
                let cond: f64 = h
                    .coefficients
                    .iter()
                    .enumerate()
                    .map(|(k, ck)| pref * ck.abs() * s.powi(k as i32))
                    .sum();
                // 1e-12 of the value plus a few ulps per cancelled digit
                let tol = 1e-12 * lhs.abs().max(1.0) + 5e-15 * cond;
                assert!((lhs - rhs).abs() <= tol, "n={n} s={s}: {lhs} vs {rhs}");
            }
        }
    }
}
