//! Rayleigh-fading link model, random topologies and scenario files.
//!
//! The per-attempt error rate of a link follows the three-parameter
//! approximation `PER(g) = 1` for `g < gamma_pn`, `a_n * exp(-g_n * g)`
//! otherwise, averaged over an exponentially distributed SNR `g` with mean
//! `mean_snr(d)`. The mean SNR uses log-distance path loss whose reference
//! distance is calibrated once so that a link at the transmission range
//! reaches [`CALIBRATION_PRR`] at [`CALIBRATION_SNR_DB`].

mod scenario;
mod topology;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{LinkQualityMatrix, Network, INTERFERENCE_PRR};

pub use scenario::{load_scenario, save_scenario, Scenario};
pub use topology::{generate_topology, inner_node_count, TopologyParams, MAX_TOPOLOGY_DRAWS};

/// Reference SNR at which the range-edge calibration holds.
pub const CALIBRATION_SNR_DB: f64 = 60.0;
/// PRR of a link at exactly the transmission range, at the calibration SNR.
pub const CALIBRATION_PRR: f64 = 0.67;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    pub a_n: f64,
    pub g_n: f64,
    /// SNR threshold below which every packet is lost (linear scale).
    pub gamma_pn: f64,
    /// Path-loss exponent.
    pub alpha: f64,
    /// Reference SNR in dB.
    pub gamma0_db: f64,
    /// Transmission range.
    pub r_t: f64,
    /// Interference range.
    pub r_i: f64,
}

impl Default for ChannelParams {
    fn default() -> Self {
        ChannelParams {
            a_n: 67.7328,
            g_n: 0.9819,
            gamma_pn: 4.2935,
            alpha: 3.3,
            gamma0_db: 60.0,
            r_t: 30.0,
            r_i: 60.0,
        }
    }
}

impl ChannelParams {
    pub fn with_snr_db(self, gamma0_db: f64) -> Self {
        ChannelParams { gamma0_db, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.a_n > 0.0
            && self.g_n > 0.0
            && self.gamma_pn > 0.0
            && self.alpha > 0.0
            && self.gamma0_db.is_finite()
            && self.r_t > 0.0
            && self.r_t <= self.r_i
            && self.r_i.is_finite();
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "invalid channel parameters {self:?}"
            )))
        }
    }
}

/// Channel parameters with the calibrated range-edge SNR cached.
#[derive(Clone, Copy, Debug)]
pub struct ChannelModel {
    params: ChannelParams,
    /// Mean linear SNR at `d = r_t` for the configured `gamma0_db`.
    edge_snr: f64,
}

impl ChannelModel {
    pub fn new(params: ChannelParams) -> Result<Self> {
        params.validate()?;
        let calibrated = calibrate_edge_snr(&params);
        let edge_snr = calibrated * db_to_linear(params.gamma0_db - CALIBRATION_SNR_DB);
        Ok(ChannelModel { params, edge_snr })
    }

    pub fn params(&self) -> &ChannelParams {
        &self.params
    }

    /// Distance at which the mean SNR equals `gamma0_db`.
    pub fn reference_distance(&self) -> f64 {
        let edge_db = 10.0 * self.edge_snr.log10();
        self.params.r_t
            * 10f64.powf(-(self.params.gamma0_db - edge_db) / (10.0 * self.params.alpha))
    }

    /// Mean linear SNR at `distance` (log-distance path loss).
    pub fn mean_snr(&self, distance: f64) -> f64 {
        self.edge_snr * (self.params.r_t / distance).powf(self.params.alpha)
    }

    /// Average per-attempt packet reception rate over a link of length
    /// `distance`; `1e-5` inside the interference-only band, 0 beyond it.
    pub fn link_prr(&self, distance: f64) -> Result<f64> {
        if distance.is_nan() || distance <= 0.0 {
            return Err(Error::Domain(format!(
                "link distance must be positive, got {distance}"
            )));
        }
        let p = &self.params;
        if distance > p.r_i {
            Ok(0.0)
        } else if distance > p.r_t {
            Ok(INTERFERENCE_PRR)
        } else {
            Ok(average_prr(self.mean_snr(distance), p))
        }
    }
}

fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// `1 - PER` averaged over Rayleigh fading with mean SNR `mean_snr`:
///
/// `exp(-gpn / s) * (1 - a_n * exp(-gpn * g_n) / (1 + g_n * s))`
///
/// Written as a product of two factors that are each nondecreasing in `s`,
/// so the floating-point result is monotone too.
pub fn average_prr(mean_snr: f64, p: &ChannelParams) -> f64 {
    let outage = (-p.gamma_pn / mean_snr).exp();
    let tail = p.a_n * (-p.gamma_pn * p.g_n).exp() / (1.0 + p.g_n * mean_snr);
    (outage * (1.0 - tail)).clamp(0.0, 1.0)
}

/// Smallest mean SNR (bisection in log space) with
/// `average_prr >= CALIBRATION_PRR`.
fn calibrate_edge_snr(p: &ChannelParams) -> f64 {
    let (mut lo, mut hi) = (1e-6f64.ln(), 1e12f64.ln());
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if average_prr(mid.exp(), p) < CALIBRATION_PRR {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi.exp()
}

/// `link_prr` for a one-off distance. Prefer [`ChannelModel`] in loops.
pub fn link_prr(distance: f64, params: &ChannelParams) -> Result<f64> {
    ChannelModel::new(*params)?.link_prr(distance)
}

/// `q_tp = link_prr(dist(t, p))` for every transceiver `t` and node `p != t`.
/// Coincident nodes are treated as distance `f64::MIN_POSITIVE`.
pub fn build_quality_matrix(net: &Network, params: &ChannelParams) -> Result<LinkQualityMatrix> {
    ChannelModel::new(*params)?.quality_matrix(net)
}

impl ChannelModel {
    pub fn quality_matrix(&self, net: &Network) -> Result<LinkQualityMatrix> {
        LinkQualityMatrix::from_fn(net, |t, p| {
            let d = net.distance(t, p).max(f64::MIN_POSITIVE);
            self.link_prr(d).expect("distance is positive")
        })
    }
}
