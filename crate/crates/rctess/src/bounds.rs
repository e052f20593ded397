//! Closed-form duality transforms and critical-value threshold formulas.
//!
//! Everything here is a stateless function of the spec `(d, d̂)` and the
//! model parameters `(p, q)`. Thresholds are open conditions (strict
//! inequalities); boundary equality is reported as undetermined rather than
//! decided either way. Logarithms are natural throughout.

use crate::error::{Error, Result};
use crate::isoperimetry::{beta_delta_exact, iso_exact};
use serde::Serialize;

/// The odds map `h(x) = x/(1-x)`, the currency of the duality algebra.
pub fn h(x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::DomainError(format!("h({x}) outside [0,1)")));
    }
    Ok(x / (1.0 - x))
}

/// Inverse odds map `h^{-1}(y) = y/(1+y)`.
pub fn h_inverse(y: f64) -> f64 {
    y / (1.0 + y)
}

/// The dual edge parameter `p' = (1-p) q / (p + (1-p) q)`.
///
/// Satisfies `h(p) h(p') = q` and is an involution: the dual of `p'` is `p`
/// again. Endpoints map 0 ↔ 1.
pub fn dual_parameter(p: f64, q: f64) -> Result<f64> {
    check_p(p)?;
    check_q(q)?;
    Ok((1.0 - p) * q / (p + (1.0 - p) * q))
}

/// The fixed point of the duality map: `p = sqrt(q)/(sqrt(q)+1)`.
pub fn self_dual_point(q: f64) -> Result<f64> {
    check_q(q)?;
    let s = q.sqrt();
    Ok(s / (s + 1.0))
}

/// Solve `h(known) · h(partner) = q` for the partner critical value.
///
/// The product relations pair the wired lower critical value of a graph
/// with the free uniqueness value of its dual, and the free lower value
/// with the wired uniqueness value.
pub fn pcpu_relation(q: f64, known: f64) -> Result<f64> {
    check_q(q)?;
    if !(known > 0.0 && known < 1.0) {
        return Err(Error::DomainError(format!("critical value {known} outside (0,1)")));
    }
    Ok(h_inverse(q / h(known)?))
}

/// `p = 1 - e^{-2β}`.
pub fn p_from_beta(beta: f64) -> f64 {
    -(-2.0 * beta).exp_m1()
}

/// `β = -½ log(1-p)`.
pub fn beta_from_p(p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(-0.5 * (-p).ln_1p())
}

/// Edge probability and cluster weight, with the derived exponent
/// `b = log(p/(1-p)) / log q` used by the threshold formulas.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ModelParams {
    pub p: f64,
    pub q: f64,
}

impl ModelParams {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        check_p(p)?;
        check_q(q)?;
        Ok(ModelParams { p, q })
    }

    pub fn from_beta(beta: f64, q: f64) -> Result<Self> {
        check_q(q)?;
        if beta < 0.0 {
            return Err(Error::DomainError(format!("beta {beta} negative")));
        }
        Ok(ModelParams { p: p_from_beta(beta), q })
    }

    /// Inverse temperature of the coupled Potts model.
    pub fn beta(&self) -> f64 {
        -0.5 * (-self.p).ln_1p()
    }

    /// `b = log h(p) / log q`; undefined at `q = 1`.
    pub fn b(&self) -> Option<f64> {
        if self.q == 1.0 {
            return None;
        }
        Some((self.p / (1.0 - self.p)).ln() / self.q.ln())
    }

    pub fn b_plus(&self) -> Option<f64> {
        self.b().map(|b| b.max(0.0))
    }
}

/// Outcome of a threshold test at given `(p, q)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ThresholdDecision {
    /// Whether the sufficient condition holds (strictly).
    pub holds: bool,
    /// The exponent `b`, when defined.
    pub b: Option<f64>,
    /// The minimal `q` at which the condition holds for this `p`.
    pub minimal_q: Option<f64>,
}

/// Sufficient condition for the free measure to have no infinite cluster:
/// `b < β(G)` and `log q > (1 + log(d-1)) / (β(G) - b⁺)`.
///
/// Returns [`Error::Inapplicable`] when `b >= β(G)` at the given `q`.
/// `minimal_q` solves `log q = (1 + log(d-1) + log⁺h(p)) / β(G)`, the
/// смallest weight for which both parts of the hypothesis hold at this `p`.
pub fn free_death_threshold(d: u32, beta_g: f64, p: f64, q: f64) -> Result<ThresholdDecision> {
    check_p(p)?;
    check_q(q)?;
    if d < 3 {
        return Err(Error::DomainError(format!("degree {d} below 3")));
    }
    if !(beta_g > 0.0 && beta_g < 1.0) {
        return Err(Error::DomainError(format!("beta(G) = {beta_g} outside (0,1)")));
    }
    let c = 1.0 + ((d - 1) as f64).ln();
    let log_h = (p / (1.0 - p)).ln(); // -inf at p = 0, +inf at p -> 1
    let minimal_q = Some(((c + log_h.max(0.0)) / beta_g).exp());
    if q == 1.0 {
        return Ok(ThresholdDecision { holds: false, b: None, minimal_q });
    }
    let b = log_h / q.ln();
    if b >= beta_g {
        return Err(Error::Inapplicable(format!(
            "b = {b:.6} >= beta(G) = {beta_g:.6} at q = {q}"
        )));
    }
    let holds = q.ln() > c / (beta_g - b.max(0.0));
    Ok(ThresholdDecision { holds, b: Some(b), minimal_q })
}

/// Sufficient condition for the wired measure to have a unique infinite
/// cluster: `b > 1 - β(d̂G)` and
/// `log q > (1 + log(d̂-1)) / (b∧1 - 1 + β(d̂G))`.
///
/// This is [`free_death_threshold`] applied to the dual graph at the dual
/// parameter, where the exponent transforms as `b' = 1 - b`.
pub fn wired_uniqueness_threshold(
    codegree: u32,
    beta_dual: f64,
    p: f64,
    q: f64,
) -> Result<ThresholdDecision> {
    check_p(p)?;
    check_q(q)?;
    if codegree < 3 {
        return Err(Error::DomainError(format!("dual degree {codegree} below 3")));
    }
    if !(beta_dual > 0.0 && beta_dual < 1.0) {
        return Err(Error::DomainError(format!("beta(dual) = {beta_dual} outside (0,1)")));
    }
    let c = 1.0 + ((codegree - 1) as f64).ln();
    if q == 1.0 {
        return Ok(ThresholdDecision { holds: false, b: None, minimal_q: None });
    }
    let b = (p / (1.0 - p)).ln() / q.ln();
    if b <= 1.0 - beta_dual {
        return Err(Error::Inapplicable(format!(
            "b = {b:.6} <= 1 - beta(dual G) = {:.6} at q = {q}",
            1.0 - beta_dual
        )));
    }
    let holds = q.ln() > c / (b.min(1.0) - 1.0 + beta_dual);
    Ok(ThresholdDecision { holds, b: Some(b), minimal_q: None })
}

/// The threshold above which the free lower critical value strictly exceeds
/// the wired uniqueness value, together with the interior exponent `b0`
/// used to establish it.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SeparationReport {
    /// `q* = (2 + log((d-1)(d̂-1))) (dd̂-d-d̂) / sqrt((d-2)(d̂-2)(dd̂-2d-2d̂))`.
    pub q_star: f64,
    /// Weighted mean of `1-β(d̂G)` and `β(G)` at which both threshold
    /// formulas meet; satisfies `1-β(d̂G) < b0 < β(G)`.
    pub b0: f64,
    /// `(1 + log(d-1)) / (β(G) - b0)`; equals `q_star` up to rounding.
    pub free_side: f64,
    /// `(1 + log(d̂-1)) / (b0 - 1 + β(d̂G))`; equals `q_star` up to rounding.
    pub wired_side: f64,
}

pub fn separation_threshold(d: u32, codegree: u32) -> Result<SeparationReport> {
    let (df, dhf) = (d as f64, codegree as f64);
    let disc = df * dhf - 2.0 * df - 2.0 * dhf;
    if disc <= 0.0 {
        return Err(Error::Inapplicable(format!(
            "({d},{codegree}) is not hyperbolic: dd̂-2d-2d̂ = {disc}"
        )));
    }
    let c1 = 1.0 + (df - 1.0).ln();
    let c2 = 1.0 + (dhf - 1.0).ln();
    let q_star = (c1 + c2) * (df * dhf - df - dhf)
        / ((df - 2.0) * (dhf - 2.0) * disc).sqrt();

    let beta = beta_delta_exact(d, codegree)?.beta;
    let beta_dual = beta_delta_exact(codegree, d)?.beta;
    let b0 = (c1 * (1.0 - beta_dual) + c2 * beta) / (c1 + c2);
    debug_assert!(1.0 - beta_dual < b0 && b0 < beta);
    let free_side = c1 / (beta - b0);
    let wired_side = c2 / (b0 - 1.0 + beta_dual);
    Ok(SeparationReport { q_star, b0, free_side, wired_side })
}

/// Below `q_max = dd̂ - 2d - 2d̂` the opposite ordering holds (free lower
/// value below wired uniqueness value). The formula is total; a value
/// `<= 1` carries no information and is flagged vacuous.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CoexistenceReport {
    pub q_max: f64,
    pub vacuous: bool,
}

pub fn coexistence_bound(d: u32, codegree: u32) -> CoexistenceReport {
    let q_max = d as f64 * codegree as f64 - 2.0 * d as f64 - 2.0 * codegree as f64;
    CoexistenceReport { q_max, vacuous: q_max <= 1.0 }
}

/// The underlying sufficient condition `h(p_c(G)) h(p_c(d̂G)) < 1/q`, for
/// user-supplied Bernoulli critical values.
pub fn coexistence_sufficient(q: f64, pc_primal: f64, pc_dual: f64) -> Result<bool> {
    check_q(q)?;
    Ok(h(pc_primal)? * h(pc_dual)? < 1.0 / q)
}

/// Upper bound `p_c(G) <= 1/(1 + ι_E(G))` usable in
/// [`coexistence_sufficient`] when no sharper estimate is available.
pub fn pc_upper_bound_from_iso(d: u32, codegree: u32) -> Result<f64> {
    Ok(1.0 / (1.0 + iso_exact(d, codegree)?))
}

/// Inverse-temperature interval on which the Potts model has a phase
/// transition but not a robust one (for large `q`):
/// `e^{2β} - 1 ∈ [q^{2/(d+ι/2)}, q^{2/(d-ι/2)}]`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RobustInterval {
    pub beta_low: f64,
    pub beta_high: f64,
    pub exponent_low: f64,
    pub exponent_high: f64,
}

pub fn robust_interval(d: u32, iota: f64, q: f64) -> Result<RobustInterval> {
    if iota <= 0.0 {
        return Err(Error::Inapplicable("amenable graph: iota = 0".into()));
    }
    if q <= 1.0 {
        return Err(Error::DomainError(format!("q = {q} must exceed 1")));
    }
    if d as f64 <= iota / 2.0 {
        return Err(Error::DomainError("degree too small for the exponents".into()));
    }
    let exponent_low = 2.0 / (d as f64 + iota / 2.0);
    let exponent_high = 2.0 / (d as f64 - iota / 2.0);
    let beta_low = 0.5 * q.powf(exponent_low).ln_1p();
    let beta_high = 0.5 * q.powf(exponent_high).ln_1p();
    Ok(RobustInterval { beta_low, beta_high, exponent_low, exponent_high })
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::DomainError(format!("p = {p} outside [0,1]")));
    }
    Ok(())
}

fn check_q(q: f64) -> Result<()> {
    if !(q >= 1.0) {
        return Err(Error::DomainError(format!("q = {q} below 1")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_parameter_examples() {
        assert_eq!(dual_parameter(0.5, 1.0).unwrap(), 0.5);
        assert!((dual_parameter(2.0 / 3.0, 4.0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(dual_parameter(0.0, 7.0).unwrap(), 1.0);
        assert_eq!(dual_parameter(1.0, 7.0).unwrap(), 0.0);
    }

    #[test]
    fn self_dual_points() {
        assert_eq!(self_dual_point(1.0).unwrap(), 0.5);
        assert!((self_dual_point(4.0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        let p = self_dual_point(9.0).unwrap();
        assert!((p - 0.75).abs() < 1e-15);
        assert!((dual_parameter(p, 9.0).unwrap() - p).abs() < 1e-15);
    }

    #[test]
    fn pcpu_examples() {
        // q = 2, free lower value 1/2 -> wired uniqueness value of the dual.
        let partner = pcpu_relation(2.0, 0.5).unwrap();
        assert!((partner - 2.0 / 3.0).abs() < 1e-12);
        // q = 1: the relation degenerates to h(x) h(y) = 1.
        assert!((pcpu_relation(1.0, 0.5).unwrap() - 0.5).abs() < 1e-15);
        // Round trip.
        let back = pcpu_relation(2.0, partner).unwrap();
        assert!((back - 0.5).abs() < 1e-12);
        assert!(pcpu_relation(2.0, 0.0).is_err());
        assert!(pcpu_relation(2.0, 1.0).is_err());
    }

    #[test]
    fn free_death_examples() {
        let beta = crate::isoperimetry::beta_delta_exact(5, 5).unwrap().beta;
        // p = 1/2 means b = 0; the minimal weight is exp((1+log 4)/beta).
        let dec = free_death_threshold(5, beta, 0.5, 30.0).unwrap();
        assert!(dec.holds);
        let minimal = dec.minimal_q.unwrap();
        assert!((minimal - ((1.0 + 4f64.ln()) / beta).exp()).abs() < 1e-9);
        assert!((minimal - 27.0536).abs() < 1e-3);
        // Just below the minimal weight the condition fails.
        assert!(!free_death_threshold(5, beta, 0.5, minimal - 0.01).unwrap().holds);
        // q = 1 always fails.
        assert!(!free_death_threshold(5, beta, 0.5, 1.0).unwrap().holds);
        // b >= beta(G): hypothesis boundary.
        let err = free_death_threshold(5, beta, 0.95, 2.0);
        assert!(matches!(err, Err(Error::Inapplicable(_))));
    }

    #[test]
    fn wired_matches_free_on_dual() {
        // The wired test is the free test on the dual graph at the dual
        // parameter: decisions must agree on a grid.
        let beta_dual = crate::isoperimetry::beta_delta_exact(5, 5).unwrap().beta;
        for &p in &[0.3, 0.5, 0.7, 0.9, 0.97] {
            for &q in &[1.5, 2.0, 8.0, 30.0, 100.0] {
                let wired = wired_uniqueness_threshold(5, beta_dual, p, q);
                let p_dual = dual_parameter(p, q).unwrap();
                let free = free_death_threshold(5, beta_dual, p_dual, q);
                match (wired, free) {
                    (Ok(w), Ok(f)) => assert_eq!(w.holds, f.holds, "p={p} q={q}"),
                    (Err(Error::Inapplicable(_)), Err(Error::Inapplicable(_))) => {}
                    (w, f) => panic!("p={p} q={q}: wired {w:?} vs free-on-dual {f:?}"),
                }
            }
        }
        // At b = 1 (p = q/(1+q)) the threshold reduces to (1+log(d̂-1))/β(d̂G).
        let q = 40.0;
        let p = q / (1.0 + q);
        let dec = wired_uniqueness_threshold(5, beta_dual, p, q).unwrap();
        let expect = q.ln() > (1.0 + 4f64.ln()) / beta_dual;
        assert_eq!(dec.holds, expect);
        assert!(!wired_uniqueness_threshold(5, beta_dual, 0.9, 1.0).unwrap().holds);
    }

    #[test]
    fn separation_values() {
        let r = separation_threshold(5, 5).unwrap();
        assert!((r.q_star - (2.0 + 4.0 * 2f64.ln()) * 5f64.sqrt()).abs() < 1e-9);
        assert!((r.q_star - 10.6719).abs() < 1e-4);
        assert!((r.free_side - r.q_star).abs() < 1e-9);
        assert!((r.wired_side - r.q_star).abs() < 1e-9);

        let r = separation_threshold(3, 7).unwrap();
        assert!((r.q_star - (2.0 + 12f64.ln()) * 11.0 / 5f64.sqrt()).abs() < 1e-9);
        assert!((r.free_side - r.q_star).abs() < 1e-9);
        assert!((r.wired_side - r.q_star).abs() < 1e-9);

        let r = separation_threshold(4, 6).unwrap();
        assert!(r.q_star.is_finite());
        assert!((r.free_side - r.q_star).abs() < 1e-9);
        assert!((r.wired_side - r.q_star).abs() < 1e-9);

        assert!(matches!(separation_threshold(4, 4), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn coexistence_values() {
        let r = coexistence_bound(5, 5);
        assert_eq!(r.q_max, 5.0);
        assert!(!r.vacuous);
        let r = coexistence_bound(4, 4);
        assert_eq!(r.q_max, 0.0);
        assert!(r.vacuous);
        // Ising case q = 2 separates free from wired on (6,4).
        let r = coexistence_bound(6, 4);
        assert_eq!(r.q_max, 4.0);
        assert!(2.0 < r.q_max);
    }

    #[test]
    fn robust_interval_values() {
        let iota = crate::isoperimetry::iso_exact(5, 5).unwrap();
        let r = robust_interval(5, iota, 100.0).unwrap();
        assert!((r.exponent_low - 2.0 / (5.0 + 5f64.sqrt() / 2.0)).abs() < 1e-15);
        assert!((r.exponent_high - 2.0 / (5.0 - 5f64.sqrt() / 2.0)).abs() < 1e-15);
        assert!(r.beta_low < r.beta_high);
        assert!((r.beta_low - 0.5 * (1.0 + 100f64.powf(r.exponent_low)).ln()).abs() < 1e-15);
        assert!(matches!(robust_interval(4, 0.0, 100.0), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn beta_p_conversions() {
        assert_eq!(p_from_beta(0.0), 0.0);
        for &beta in &[0.01, 0.3, 1.0, 4.0] {
            let p = p_from_beta(beta);
            assert!((beta_from_p(p).unwrap() - beta).abs() < 1e-15 * beta.max(1.0));
        }
    }
}
