use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Continuous power law: the fraction of vertices of degree `k ≥ 1` is
/// `p_k = k^{1-α} - (k+1)^{1-α}`, hence `P(d ≥ K) = K^{1-α}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawModel {
    alpha: f64,
    n: usize,
}

impl PowerLawModel {
    pub fn new(alpha: f64, n: usize) -> Result<Self> {
        if !(alpha > 1.0 && alpha.is_finite()) {
            return Err(Error::Domain(format!("power-law exponent must exceed 1, got {alpha}")));
        }
        Ok(PowerLawModel { alpha, n })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pk(&self, k: u64) -> Result<f64> {
        if k == 0 {
            return Err(Error::Domain("p_k is defined for k >= 1".into()));
        }
        let e = 1.0 - self.alpha;
        let k = k as f64;
        Ok(k.powf(e) - (k + 1.0).powf(e))
    }

    /// Expected number of vertices of degree at least `k`: `n·k^{1-α}`.
    pub fn expected_high_degree_count(&self, k: u64) -> Result<f64> {
        if k == 0 {
            return Err(Error::Domain("n_K is defined for K >= 1".into()));
        }
        Ok(self.n as f64 * (k as f64).powf(1.0 - self.alpha))
    }
}

/// Threshold rules; each evaluates its growth class with constant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KRule {
    /// `√m`: AYZ listing and new-listing on general sparse graphs.
    SqrtM,
    /// `n^{1/α}`: new-listing on power-law graphs.
    #[serde(rename = "powerlaw")]
    PowerLaw,
    /// `m^{(ω-1)/(ω+1)}`: AYZ pseudo-listing.
    AyzPseudo,
    /// `√(m·ln n)`: constant-space new-listing.
    #[serde(rename = "sqrt-mlogn")]
    SqrtMLogN,
    /// `n^{(ω-1)/(ωα-ω+2)}`: AYZ pseudo-listing on power-law graphs.
    #[serde(rename = "ayz-pseudo-powerlaw")]
    AyzPseudoPowerLaw,
}

impl KRule {
    pub const ALL: [KRule; 5] =
        [KRule::SqrtM, KRule::PowerLaw, KRule::AyzPseudo, KRule::SqrtMLogN, KRule::AyzPseudoPowerLaw];

    pub fn name(self) -> &'static str {
        match self {
            KRule::SqrtM => "sqrt-m",
            KRule::PowerLaw => "powerlaw",
            KRule::AyzPseudo => "ayz-pseudo",
            KRule::SqrtMLogN => "sqrt-mlogn",
            KRule::AyzPseudoPowerLaw => "ayz-pseudo-powerlaw",
        }
    }
}

impl fmt::Display for KRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KRule::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| {
            let names: Vec<_> = KRule::ALL.iter().map(|r| r.name()).collect();
            Error::Usage(format!("unknown K rule {s:?} (expected one of {})", names.join(", ")))
        })
    }
}

/// Ceiling that ignores floating-point noise just above an integer.
fn ceil_tolerant(x: f64) -> usize {
    let r = x.round();
    if (x - r).abs() <= 1e-9 * r.max(1.0) {
        r as usize
    } else {
        x.ceil() as usize
    }
}

/// `⌈rule(n, m, α, ω)⌉`. `alpha` is required by the power-law rules only.
pub fn k_formula(rule: KRule, n: usize, m: usize, alpha: Option<f64>, omega: f64) -> Result<usize> {
    if !(omega >= 2.0 && omega.is_finite()) {
        return Err(Error::Domain(format!("matrix exponent must be in [2, inf), got {omega}")));
    }
    let alpha = || {
        let a = alpha.ok_or_else(|| Error::Usage(format!("K rule {rule} needs --alpha")))?;
        PowerLawModel::new(a, n).map(|model| model.alpha())
    };
    let (n, m) = (n as f64, m as f64);
    let value = match rule {
        KRule::SqrtM => m.sqrt(),
        KRule::PowerLaw => n.powf(1.0 / alpha()?),
        KRule::AyzPseudo => m.powf((omega - 1.0) / (omega + 1.0)),
        KRule::SqrtMLogN => (m * n.max(1.0).ln()).sqrt(),
        KRule::AyzPseudoPowerLaw => n.powf((omega - 1.0) / (omega * alpha()? - omega + 2.0)),
    };
    Ok(ceil_tolerant(value))
}
