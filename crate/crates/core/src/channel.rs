//! RIS channel math: phase-error degradation, array responses, the
//! effective CSI of a user and the OMA/NOMA rate expressions built on it.
//!
//! Downstream modules only ever see [`EffectiveCsi`]; the raw cascaded
//! channel collapses into `Γ = P_t |αβ|² N² M / (I + σ²)` here, and every
//! rate is a function of `Γ · sinc²(δ)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::{db_to_linear, linear_to_db};

/// Unnormalized `(sin δ / δ)²`, the expected coherent gain of a large RIS
/// whose per-element phase errors are uniform on `[-δ, δ]`.
pub fn sinc_sq(delta: f64) -> Result<f64> {
    check_delta(delta)?;
    if delta == 0.0 {
        return Ok(1.0);
    }
    let s = delta.sin() / delta;
    Ok(s * s)
}

fn check_delta(delta: f64) -> Result<()> {
    if !(0.0..PI).contains(&delta) {
        return Err(Error::Domain {
            name: "delta",
            value: delta,
            domain: "[0, pi)",
        });
    }
    Ok(())
}

/// Uniform phase-error model with bound `δ` and its cached degradation factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseModel {
    delta: f64,
    degradation: f64,
}

impl PhaseModel {
    pub fn new(delta: f64) -> Result<Self> {
        let degradation = sinc_sq(delta)?;
        Ok(Self { delta, degradation })
    }

    pub fn from_degrees(delta_deg: f64) -> Result<Self> {
        Self::new(delta_deg.to_radians())
    }

    /// Perfect phase compensation, `δ = 0`.
    pub fn perfect() -> Self {
        Self {
            delta: 0.0,
            degradation: 1.0,
        }
    }

    /// Phase-error bound in radians.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// `sinc²(δ)`.
    pub fn degradation(&self) -> f64 {
        self.degradation
    }
}

/// Monte-Carlo estimate of `E |Σₖ e^{jθₖ} / N|²` with `θₖ ~ U[-δ, δ]` i.i.d.
///
/// Brute-force reference for [`sinc_sq`]. For finite `N` the exact mean is
/// `sinc²(δ) + (1 - sinc²(δ)) / N`, so the estimate converges to `sinc²(δ)`
/// only as `N` grows.
pub fn phase_error_gain_mc(n_elements: usize, delta: f64, trials: usize, seed: u64) -> Result<f64> {
    check_delta(delta)?;
    if n_elements == 0 {
        return Err(Error::Domain {
            name: "n_elements",
            value: 0.0,
            domain: ">= 1",
        });
    }
    if trials == 0 {
        return Err(Error::Domain {
            name: "trials",
            value: 0.0,
            domain: ">= 1",
        });
    }
    if delta == 0.0 {
        return Ok(1.0);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n_elements as f64;
    let mut acc = 0.0;
    for _ in 0..trials {
        let (mut re, mut im) = (0.0, 0.0);
        for _ in 0..n_elements {
            let theta: f64 = rng.random_range(-delta..=delta);
            let (s, c) = theta.sin_cos();
            re += c;
            im += s;
        }
        acc += (re * re + im * im) / (n * n);
    }
    Ok(acc / trials as f64)
}

/// Uniform square planar array pointed at `(azimuth, elevation)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrayGeometry {
    elements: usize,
    side: usize,
    spacing_over_wavelength: f64,
    azimuth: f64,
    elevation: f64,
}

impl ArrayGeometry {
    pub fn new(elements: usize, spacing_over_wavelength: f64, azimuth: f64, elevation: f64) -> Result<Self> {
        let side = perfect_square_root(elements).ok_or(Error::Domain {
            name: "elements",
            value: elements as f64,
            domain: "positive perfect square",
        })?;
        if !(spacing_over_wavelength > 0.0 && spacing_over_wavelength.is_finite()) {
            return Err(Error::Domain {
                name: "spacing_over_wavelength",
                value: spacing_over_wavelength,
                domain: "(0, inf)",
            });
        }
        Ok(Self {
            elements,
            side,
            spacing_over_wavelength,
            azimuth,
            elevation,
        })
    }

    pub fn elements(&self) -> usize {
        self.elements
    }
}

/// Integer square root when `n` is a positive perfect square.
pub fn perfect_square_root(n: usize) -> Option<usize> {
    if n == 0 {
        return None;
    }
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

/// Array response vector of a uniform square planar array.
///
/// Element `(x, y)`, `0 ≤ x, y < √X`, carries the phase
/// `2π (d/λ) (x sinΩᵃ sinΩᵃ + y cosΩᵉ)`; `x` is the outer index.
pub fn array_response(geom: &ArrayGeometry) -> Vec<Complex64> {
    let k = 2.0 * PI * geom.spacing_over_wavelength;
    let horizontal = geom.azimuth.sin() * geom.azimuth.sin();
    let vertical = geom.elevation.cos();
    let mut out = Vec::with_capacity(geom.elements);
    for x in 0..geom.side {
        for y in 0..geom.side {
            let phase = k * (x as f64 * horizontal + y as f64 * vertical);
            out.push(Complex64::from_polar(1.0, phase));
        }
    }
    out
}

/// Physical inputs from which a user's effective CSI is derived. Powers in watts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkBudget {
    pub transmit_power: f64,
    /// `|αβ|²`, product of the user→RIS and RIS→BS power gains.
    pub composite_gain: f64,
    pub ris_elements: usize,
    pub bs_antennas: usize,
    pub interference: f64,
    pub noise_power: f64,
}

impl LinkBudget {
    pub fn validate(&self) -> Result<()> {
        let nonneg = [
            ("transmit_power", self.transmit_power),
            ("composite_gain", self.composite_gain),
            ("interference", self.interference),
        ];
        for (name, value) in nonneg {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(Error::Domain {
                    name,
                    value,
                    domain: "[0, inf)",
                });
            }
        }
        if !(self.noise_power > 0.0 && self.noise_power.is_finite()) {
            return Err(Error::Domain {
                name: "noise_power",
                value: self.noise_power,
                domain: "(0, inf)",
            });
        }
        if self.ris_elements == 0 {
            return Err(Error::Domain {
                name: "ris_elements",
                value: 0.0,
                domain: ">= 1",
            });
        }
        if self.bs_antennas == 0 {
            return Err(Error::Domain {
                name: "bs_antennas",
                value: 0.0,
                domain: ">= 1",
            });
        }
        Ok(())
    }
}

/// Effective CSI `Γᵢ` of a user, linear scale.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EffectiveCsi(f64);

impl EffectiveCsi {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma >= 0.0 && gamma.is_finite()) {
            return Err(Error::Domain {
                name: "gamma",
                value: gamma,
                domain: "[0, inf)",
            });
        }
        Ok(Self(gamma))
    }

    pub fn from_db(gamma_db: f64) -> Result<Self> {
        Self::new(db_to_linear(gamma_db))
    }

    pub fn gamma(self) -> f64 {
        self.0
    }

    pub fn to_db(self) -> f64 {
        linear_to_db(self.0)
    }
}

/// `Γ = P_t |αβ|² N² M / (I + σ²)`.
pub fn effective_csi(link: &LinkBudget) -> Result<EffectiveCsi> {
    link.validate()?;
    let n = link.ris_elements as f64;
    let m = link.bs_antennas as f64;
    let gamma = link.transmit_power * link.composite_gain * n * n * m / (link.interference + link.noise_power);
    EffectiveCsi::new(gamma)
}

/// Achievable rates of the strong and weak user of a pair, bits/s/Hz.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RatePair {
    pub strong: f64,
    pub weak: f64,
}

/// OMA rate `½ log₂(1 + Γ sinc²δ)`; each user holds half of the resources.
pub fn rate_oma(csi: EffectiveCsi, phase: &PhaseModel) -> f64 {
    0.5 * (csi.0 * phase.degradation).ln_1p() / std::f64::consts::LN_2
}

/// OMA rates of a strong/weak pair.
pub fn rates_oma(csi1: EffectiveCsi, csi2: EffectiveCsi, phase: &PhaseModel) -> RatePair {
    RatePair {
        strong: rate_oma(csi1, phase),
        weak: rate_oma(csi2, phase),
    }
}

/// Uplink NOMA rates with SIC at the BS: the strong user is decoded first
/// and sees the weak user as interference.
pub fn rate_noma(
    alpha1: f64,
    alpha2: f64,
    csi1: EffectiveCsi,
    csi2: EffectiveCsi,
    phase: &PhaseModel,
) -> Result<RatePair> {
    check_fraction("alpha1", alpha1)?;
    check_fraction("alpha2", alpha2)?;
    let s = phase.degradation;
    let weak_snr = alpha2 * csi2.0 * s;
    let strong_sinr = alpha1 * csi1.0 * s / (1.0 + weak_snr);
    Ok(RatePair {
        strong: strong_sinr.ln_1p() / std::f64::consts::LN_2,
        weak: weak_snr.ln_1p() / std::f64::consts::LN_2,
    })
}

fn check_fraction(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::Domain {
            name,
            value,
            domain: "[0, 1]",
        });
    }
    Ok(())
}

/// Achievable sum rate `R₁ + R₂`.
pub fn asr(rates: &RatePair) -> f64 {
    rates.strong + rates.weak
}

/// Energy efficiency `(R₁ + R₂) / (α₁ + α₂)`.
pub fn ee(rates: &RatePair, alpha1: f64, alpha2: f64) -> Result<f64> {
    let power = alpha1 + alpha2;
    if power == 0.0 {
        return Err(Error::DivisionByZero("alpha1 + alpha2"));
    }
    Ok(asr(rates) / power)
}

/// Closed form of the pair sum rate, `log₂(1 + (α₁Γ₁ + α₂Γ₂) sinc²δ)`.
pub fn sum_rate_closed_form(alpha1: f64, alpha2: f64, csi1: EffectiveCsi, csi2: EffectiveCsi, phase: &PhaseModel) -> f64 {
    ((alpha1 * csi1.0 + alpha2 * csi2.0) * phase.degradation).ln_1p() / std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn db(x: f64) -> EffectiveCsi {
        EffectiveCsi::from_db(x).unwrap()
    }

    #[test]
    fn sinc_sq_reference_values() {
        assert_eq!(sinc_sq(0.0).unwrap(), 1.0);
        assert!((sinc_sq(0.191986).unwrap() - 0.98777).abs() < 1e-5);
        let half_pi = sinc_sq(PI / 2.0).unwrap();
        assert!((half_pi - (2.0 / PI).powi(2)).abs() < 1e-15);
        assert!((half_pi - 0.40528).abs() < 1e-5);
    }

    #[test]
    fn sinc_sq_domain() {
        assert!(matches!(sinc_sq(-1e-3), Err(Error::Domain { .. })));
        assert!(matches!(sinc_sq(PI), Err(Error::Domain { .. })));
        assert!(sinc_sq(PI - 1e-9).unwrap() > 0.0);
        assert!(PhaseModel::new(4.0).is_err());
    }

    #[test]
    fn mc_gain_zero_delta_is_exact() {
        assert_eq!(phase_error_gain_mc(7, 0.0, 1, 3).unwrap(), 1.0);
        assert_eq!(phase_error_gain_mc(1024, 0.0, 1, 0).unwrap(), 1.0);
    }

    #[test]
    fn mc_gain_large_array_tracks_sinc_sq() {
        let mc = phase_error_gain_mc(1024, 0.5, 10_000, 11).unwrap();
        let exact = sinc_sq(0.5).unwrap();
        assert!((exact - 0.919395).abs() < 1e-6);
        assert!(((mc - exact) / exact).abs() < 0.01, "mc={mc} exact={exact}");
    }

    #[test]
    fn mc_gain_small_array_exceeds_sinc_sq() {
        // Finite-N mean is sinc² + (1 - sinc²)/N.
        let s = sinc_sq(0.5).unwrap();
        let expected = s + (1.0 - s) / 4.0;
        let mc = phase_error_gain_mc(4, 0.5, 1_000_000, 5).unwrap();
        assert!(mc > s);
        assert!((mc - expected).abs() < 1e-3, "mc={mc} expected={expected}");
    }

    #[test]
    fn mc_gain_is_seeded() {
        let a = phase_error_gain_mc(16, 1.0, 200, 42).unwrap();
        let b = phase_error_gain_mc(16, 1.0, 200, 42).unwrap();
        let c = phase_error_gain_mc(16, 1.0, 200, 43).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
        assert_ne!(a, c);
        assert!(phase_error_gain_mc(0, 1.0, 1, 0).is_err());
        assert!(phase_error_gain_mc(4, 1.0, 0, 0).is_err());
    }

    #[test]
    fn array_response_cases() {
        let single = array_response(&ArrayGeometry::new(1, 0.5, 0.3, 1.1).unwrap());
        assert_eq!(single, vec![Complex64::new(1.0, 0.0)]);

        let flat = array_response(&ArrayGeometry::new(4, 0.5, 0.0, PI / 2.0).unwrap());
        for z in flat {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }

        assert!(ArrayGeometry::new(8, 0.5, 0.0, 0.0).is_err());
        assert!(ArrayGeometry::new(0, 0.5, 0.0, 0.0).is_err());
        assert!(ArrayGeometry::new(4, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn effective_csi_cases() {
        let unit = LinkBudget {
            transmit_power: 1.0,
            composite_gain: 1.0,
            ris_elements: 1,
            bs_antennas: 1,
            interference: 0.0,
            noise_power: 1.0,
        };
        assert_eq!(effective_csi(&unit).unwrap().gamma(), 1.0);

        let zero = LinkBudget {
            composite_gain: 0.0,
            ..unit
        };
        assert_eq!(effective_csi(&zero).unwrap().gamma(), 0.0);

        let base = LinkBudget {
            transmit_power: 0.2,
            composite_gain: 3e-12,
            ris_elements: 32,
            bs_antennas: 8,
            interference: 1e-12,
            noise_power: 4e-13,
        };
        let g = effective_csi(&base).unwrap().gamma();
        let n2 = effective_csi(&LinkBudget { ris_elements: 64, ..base }).unwrap().gamma();
        let m2 = effective_csi(&LinkBudget { bs_antennas: 16, ..base }).unwrap().gamma();
        assert!((n2 / g - 4.0).abs() < 1e-12);
        assert!((m2 / g - 2.0).abs() < 1e-12);

        assert!(effective_csi(&LinkBudget { noise_power: 0.0, ..unit }).is_err());
        assert!(effective_csi(&LinkBudget { ris_elements: 0, ..unit }).is_err());
        assert!(effective_csi(&LinkBudget { transmit_power: -1.0, ..unit }).is_err());
    }

    #[test]
    fn oma_rates() {
        let p = PhaseModel::perfect();
        assert_eq!(rate_oma(EffectiveCsi::new(0.0).unwrap(), &p), 0.0);
        assert!((rate_oma(db(8.0), &p) - 1.434894).abs() < 1e-6);
        assert!((rate_oma(db(5.0), &p) - 1.028687).abs() < 1e-6);
    }

    #[test]
    fn noma_rates() {
        let p = PhaseModel::perfect();
        let (g1, g2) = (db(8.0), db(5.0));
        assert_eq!(rate_noma(0.0, 0.7, g1, g2, &p).unwrap().strong, 0.0);

        let r = rate_noma(1.0, 0.0, g1, g2, &p).unwrap();
        assert_eq!(r.weak, 0.0);
        assert!((r.strong - (1.0 + g1.gamma()).log2()).abs() < 1e-12);

        // α₂ at the upper bound leaves the strong user exactly at its OMA rate.
        let r = rate_noma(1.0, 0.8549604344530763, g1, g2, &p).unwrap();
        assert!((r.strong - rate_oma(g1, &p)).abs() < 1e-9);
        assert!((asr(&r) - 3.323831).abs() < 1e-6);

        assert!(rate_noma(1.2, 0.5, g1, g2, &p).is_err());
        assert!(rate_noma(0.5, -0.1, g1, g2, &p).is_err());
    }

    #[test]
    fn asr_and_ee() {
        assert_eq!(asr(&RatePair::default()), 0.0);
        let p = PhaseModel::perfect();
        let r = rate_noma(1.0, 1.0, db(8.0), db(5.0), &p).unwrap();
        assert!((ee(&r, 1.0, 1.0).unwrap() - asr(&r) / 2.0).abs() < 1e-15);
        assert!(matches!(ee(&r, 0.0, 0.0), Err(Error::DivisionByZero(_))));
    }

    proptest! {
        #[test]
        fn sum_rate_identity(a1 in 0.0..=1.0f64, a2 in 0.0..=1.0f64,
                             g1_db in -10.0..30.0f64, g2_db in -10.0..30.0f64,
                             delta in 0.0..3.1f64) {
            let p = PhaseModel::new(delta).unwrap();
            let (c1, c2) = (db(g1_db), db(g2_db));
            let r = rate_noma(a1, a2, c1, c2, &p).unwrap();
            let closed = sum_rate_closed_form(a1, a2, c1, c2, &p);
            prop_assert!((asr(&r) - closed).abs() <= 1e-9);
        }

        #[test]
        fn rates_monotone(a1 in 0.0..=0.99f64, a2 in 0.0..=0.99f64,
                          g1_db in -10.0..30.0f64, g2_db in -10.0..30.0f64,
                          delta in 0.0..3.0f64) {
            let p = PhaseModel::new(delta).unwrap();
            let (c1, c2) = (db(g1_db), db(g2_db));
            let h = 0.01;
            let base = rate_noma(a1, a2, c1, c2, &p).unwrap();
            let up1 = rate_noma(a1 + h, a2, c1, c2, &p).unwrap();
            let up2 = rate_noma(a1, a2 + h, c1, c2, &p).unwrap();
            prop_assert!(asr(&up1) >= asr(&base) - 1e-12);
            prop_assert!(asr(&up2) >= asr(&base) - 1e-12);
            prop_assert!(up1.strong >= base.strong - 1e-12);
            prop_assert!(up2.strong <= base.strong + 1e-12);
            prop_assert!(up2.weak >= base.weak - 1e-12);

            let worse = PhaseModel::new(delta + 0.1).unwrap();
            let degraded = rate_noma(a1, a2, c1, c2, &worse).unwrap();
            prop_assert!(degraded.weak <= base.weak + 1e-12);
            prop_assert!(asr(&degraded) <= asr(&base) + 1e-12);
            prop_assert!(rate_oma(c1, &worse) <= rate_oma(c1, &p) + 1e-12);
        }

        #[test]
        fn array_norm_equals_element_count(side in 1usize..12, d in 0.05..2.0f64,
                                           az in -3.2..3.2f64, el in -3.2..3.2f64) {
            let geom = ArrayGeometry::new(side * side, d, az, el).unwrap();
            let a = array_response(&geom);
            let norm: f64 = a.iter().map(|z| z.norm_sqr()).sum();
            prop_assert_eq!(a.len(), side * side);
            prop_assert!((norm - (side * side) as f64).abs() < 1e-9);
        }

        #[test]
        fn csi_db_round_trip(g in 1e-6..1e9f64) {
            let c = EffectiveCsi::new(g).unwrap();
            let back = EffectiveCsi::from_db(c.to_db()).unwrap().gamma();
            prop_assert!(((back - g) / g).abs() <= 1e-12);
        }
    }
}
