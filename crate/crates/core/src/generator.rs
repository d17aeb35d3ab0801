//! Seeded test graphs.
//!
//! Random kinds draw from xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`), so a spec always yields the same
//! graph.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GenKind {
    Clique,
    Path,
    Cycle,
    /// Center 0, leaves `1..n`.
    Star,
    /// Erdős–Rényi `G(n, p)`.
    Er { p: f64 },
    /// Configuration model over a continuous power-law degree sequence.
    PowerLaw { alpha: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    #[serde(flatten)]
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        GenSpec { kind, n, seed }
    }

    pub fn er(n: usize, p: f64, seed: u64) -> Self {
        GenSpec::new(GenKind::Er { p }, n, seed)
    }

    pub fn powerlaw(n: usize, alpha: f64, seed: u64) -> Self {
        GenSpec::new(GenKind::PowerLaw { alpha }, n, seed)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Usage("generator needs n >= 1".into()));
        }
        if VertexId::try_from(self.n).is_err() {
            return Err(Error::Capacity(format!("n = {} exceeds 32-bit ids", self.n)));
        }
        match self.kind {
            GenKind::Er { p } if !(0.0..=1.0).contains(&p) => {
                Err(Error::Usage(format!("p = {p} is outside [0, 1]")))
            }
            GenKind::PowerLaw { alpha } if !(alpha > 1.0 && alpha.is_finite()) => {
                Err(Error::Usage(format!("alpha = {alpha} must be > 1")))
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.n as VertexId;
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(self.seed);
        let edges: Vec<(VertexId, VertexId)> = match self.kind {
            GenKind::Clique => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
            GenKind::Path => (1..n).map(|v| (v - 1, v)).collect(),
            GenKind::Cycle => {
                let mut e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                if n >= 3 {
                    e.push((n - 1, 0));
                }
                e
            }
            GenKind::Star => (1..n).map(|v| (0, v)).collect(),
            GenKind::Er { p } => erdos_renyi(n, p, &mut rng),
            GenKind::PowerLaw { alpha } => configuration_model(n, alpha, &mut rng),
        };
        Ok(Graph::from_edges(self.n, edges).0)
    }
}

/// Pairs `u < v` kept independently with probability `p`, enumerated by
/// geometric skips over the lexicographic pair order.
fn erdos_renyi(n: VertexId, p: f64, rng: &mut impl Rng) -> Vec<(VertexId, VertexId)> {
    if p <= 0.0 || n < 2 {
        return Vec::new();
    }
    if p >= 1.0 {
        return (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    }
    let log_q = (1.0 - p).ln();
    let mut edges = Vec::new();
    let (mut v, mut w): (i64, i64) = (1, -1);
    let n = n as i64;
    while v < n {
        let r: f64 = rng.random();
        w += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
        while w >= v && v < n {
            w -= v;
            v += 1;
        }
        if v < n {
            edges.push((w as VertexId, v as VertexId));
        }
    }
    edges
}

/// Degree drawn by inverse transform from `P(d ≥ k) = k^{1-α}`, capped at
/// `cap`.
pub fn sample_degree(alpha: f64, cap: usize, rng: &mut impl Rng) -> usize {
    // u in (0, 1]
    let u: f64 = 1.0 - rng.random::<f64>();
    let k = u.powf(1.0 / (1.0 - alpha)).floor();
    if k >= cap as f64 {
        cap
    } else {
        k as usize
    }
}

fn configuration_model(n: VertexId, alpha: f64, rng: &mut impl Rng) -> Vec<(VertexId, VertexId)> {
    let cap = (n as usize).saturating_sub(1);
    let mut stubs = Vec::new();
    for v in 0..n {
        let d = sample_degree(alpha, cap, rng);
        stubs.extend(std::iter::repeat_n(v, d));
    }
    if stubs.len() % 2 == 1 {
        stubs.pop();
    }
    stubs.shuffle(rng);
    stubs.chunks_exact(2).map(|pair| (pair[0], pair[1])).collect()
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::Clique => write!(f, "clique,n={}", self.n)?,
            GenKind::Path => write!(f, "path,n={}", self.n)?,
            GenKind::Cycle => write!(f, "cycle,n={}", self.n)?,
            GenKind::Star => write!(f, "star,n={}", self.n)?,
            GenKind::Er { p } => write!(f, "er,n={},p={p}", self.n)?,
            GenKind::PowerLaw { alpha } => write!(f, "powerlaw,n={},alpha={alpha}", self.n)?,
        }
        write!(f, ",seed={}", self.seed)
    }
}

/// Parses `KIND,key=value,...` with keys `n`, `p`, `alpha` and `seed`
/// (seed defaults to 0), e.g. `powerlaw,n=100000,alpha=2.5,seed=7`. The
/// seed may also be given bare: `er,n=50,p=0.1,7`.
impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let usage = |msg: String| Error::Usage(format!("--gen {s:?}: {msg}"));
        let mut parts = s.split(',').map(str::trim);
        let kind = parts.next().unwrap_or_default().to_ascii_lowercase();
        let (mut n, mut p, mut alpha, mut seed) = (None, None, None, 0u64);
        for part in parts.filter(|p| !p.is_empty()) {
            let Some((key, value)) = part.split_once('=') else {
                // A bare integer is the seed.
                seed = part.parse().map_err(|_| usage(format!("expected key=value, got {part:?}")))?;
                continue;
            };
            let bad = |_| usage(format!("bad value for {key}: {value:?}"));
            let bad_f = |_| usage(format!("bad value for {key}: {value:?}"));
            match key {
                "n" => n = Some(value.parse::<usize>().map_err(bad)?),
                "p" => p = Some(value.parse::<f64>().map_err(bad_f)?),
                "alpha" => alpha = Some(value.parse::<f64>().map_err(bad_f)?),
                "seed" => seed = value.parse::<u64>().map_err(bad)?,
                _ => return Err(usage(format!("unknown key {key:?}"))),
            }
        }
        let n = n.ok_or_else(|| usage("missing n".into()))?;
        let kind = match kind.as_str() {
            "clique" => GenKind::Clique,
            "path" => GenKind::Path,
            "cycle" => GenKind::Cycle,
            "star" => GenKind::Star,
            "er" => GenKind::Er { p: p.ok_or_else(|| usage("er needs p".into()))? },
            "powerlaw" => GenKind::PowerLaw { alpha: alpha.ok_or_else(|| usage("powerlaw needs alpha".into()))? },
            other => return Err(usage(format!("unknown kind {other:?}"))),
        };
        let spec = GenSpec::new(kind, n, seed);
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{degree_distribution, fit_alpha};
    use crate::fixtures::brute_force;

    fn gen(kind: GenKind, n: usize) -> Graph {
        GenSpec::new(kind, n, 0).generate().unwrap()
    }

    #[test]
    fn clique_ten() {
        let g = gen(GenKind::Clique, 10);
        assert_eq!((g.n(), g.m()), (10, 45));
        assert_eq!(brute_force(&g).len(), 120);
    }

    #[test]
    fn deterministic_kinds() {
        assert_eq!(brute_force(&gen(GenKind::Path, 4)).len(), 0);
        assert_eq!(gen(GenKind::Cycle, 5).m(), 5);
        let star = gen(GenKind::Star, 6);
        assert_eq!((star.degree(0), star.m()), (5, 5));
        assert_eq!(gen(GenKind::Cycle, 2).m(), 1);
        assert_eq!(gen(GenKind::Clique, 1).m(), 0);
    }

    #[test]
    fn er_extremes() {
        assert_eq!(gen(GenKind::Er { p: 1.0 }, 9), gen(GenKind::Clique, 9));
        assert_eq!(gen(GenKind::Er { p: 0.0 }, 9).m(), 0);
    }

    #[test]
    fn er_edge_density_is_close_to_p() {
        let g = GenSpec::er(400, 0.1, 3).generate().unwrap();
        let pairs = 400.0 * 399.0 / 2.0;
        let density = g.m() as f64 / pairs;
        assert!((density - 0.1).abs() < 0.01, "density {density}");
    }

    #[test]
    fn same_seed_same_graph() {
        for spec in [GenSpec::er(200, 0.05, 9), GenSpec::powerlaw(2000, 2.3, 9)] {
            let (a, b) = (spec.generate().unwrap(), spec.generate().unwrap());
            let (mut x, mut y) = (Vec::new(), Vec::new());
            a.write_binary(&mut x).unwrap();
            b.write_binary(&mut y).unwrap();
            assert_eq!(x, y);
            a.validate().unwrap();
        }
        assert_ne!(
            GenSpec::powerlaw(2000, 2.3, 1).generate().unwrap(),
            GenSpec::powerlaw(2000, 2.3, 2).generate().unwrap()
        );
    }

    #[test]
    fn powerlaw_fit_recovers_alpha() {
        let g = GenSpec::powerlaw(10_000, 2.5, 42).generate().unwrap();
        let alpha = fit_alpha(&degree_distribution(&g)).unwrap();
        assert!((alpha - 2.5).abs() <= 0.3, "fitted {alpha}");
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(GenSpec::er(10, 1.5, 0).generate().is_err());
        assert!(GenSpec::powerlaw(10, 1.0, 0).generate().is_err());
        assert!(GenSpec::new(GenKind::Clique, 0, 0).generate().is_err());
    }

    #[test]
    fn parses_cli_form() {
        let spec: GenSpec = "powerlaw,n=100000,alpha=2.5,seed=7".parse().unwrap();
        assert_eq!(spec, GenSpec::powerlaw(100_000, 2.5, 7));
        assert_eq!(spec.to_string().parse::<GenSpec>().unwrap(), spec);
        let spec: GenSpec = "er,n=10,p=0.5".parse().unwrap();
        assert_eq!(spec.seed, 0);
        assert_eq!("er,n=10,p=0.5,7".parse::<GenSpec>().unwrap(), GenSpec::er(10, 0.5, 7));
        for bad in ["er,n=10", "blob,n=3", "clique", "clique,n=x", "clique,n=3,q=1", "clique,n=3,x"] {
            assert!(bad.parse::<GenSpec>().is_err(), "{bad}");
        }
    }
}
