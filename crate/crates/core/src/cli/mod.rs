//! Command dispatch and report rendering shared by the `coset-spectra`
//! binary and the C API.

mod render;
mod spec;

use std::fmt;
use std::str::FromStr;

pub use render::{render_json, render_text};
pub use spec::{EtaSelector, SpaceSpec};

use crate::error::{Error, Result};
use crate::gkrs::{GkrsChecker, GkrsReport};
use crate::homspace::{
    default_cutoff, kostant_lowest, landau_levels, spectrum, KostantLowest, SpectralLine,
};
use crate::reps::{dominant_weights_up_to_dimension, weyl_dimension};
use crate::weight::{Weight, Q};
use crate::weyl::{coset_transversal, enumerate_weyl, WeylElement, DEFAULT_WEYL_LIMIT};

pub const NORMALIZATION_NOTE: &str =
    "long roots have (a,a)=2 in g; eta carries the restriction of g's form; \
energies are exact rationals times the scale factor";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Lowest,
    GkrsCheck,
    WeylInfo,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Lowest => "lowest",
            Command::GkrsCheck => "gkrs-check",
            Command::WeylInfo => "weyl-info",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Command {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "spectrum" => Ok(Command::Spectrum),
            "lowest" => Ok(Command::Lowest),
            "gkrs-check" => Ok(Command::GkrsCheck),
            "weyl-info" => Ok(Command::WeylInfo),
            other => Err(format!(
                "unknown command `{other}` (expected spectrum, lowest, gkrs-check or weyl-info)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub lines: usize,
    pub dim_bound: u64,
    /// Overrides the scale given in the space specification.
    pub scale: Option<Q>,
    pub weyl_limit: usize,
    /// Overrides the default `(μ+ρ_η, μ+ρ_η)·4 + 100` cutoff.
    pub cutoff: Option<Q>,
    pub provenance: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            lines: 10,
            dim_bound: 100,
            scale: None,
            weyl_limit: DEFAULT_WEYL_LIMIT,
            cutoff: None,
            provenance: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylInfo {
    pub order_g: usize,
    pub order_eta: usize,
    pub transversal: Vec<WeylElement>,
    pub rho_g: Weight,
    pub rho_eta: Weight,
    pub m_positive_roots: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Spectrum {
        mu: Weight,
        cutoff: Q,
        ground_energy: Q,
        lines: Vec<SpectralLine>,
    },
    Lowest {
        mu: Weight,
        ground_energy: Q,
        kostant: Option<KostantLowest>,
        frobenius: SpectralLine,
    },
    Gkrs {
        dim_bound: u64,
        reports: Vec<(u64, GkrsReport)>,
    },
    WeylInfo(WeylInfo),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: Command,
    pub query: SpaceSpec,
    pub scale: Q,
    pub payload: Payload,
    pub provenance: bool,
}

impl Report {
    /// False iff a requested verification failed.
    pub fn passed(&self) -> bool {
        match &self.payload {
            Payload::Gkrs { reports, .. } => reports.iter().all(|(_, r)| r.verified),
            _ => true,
        }
    }
}

/// Runs one command on a parsed space specification.
pub fn run(command: Command, spec: &SpaceSpec, options: &Options) -> Result<Report> {
    let pair = spec.pair()?;
    let scale = options.scale.unwrap_or_else(|| spec.scale_or_default());
    if scale <= Q::from_integer(0) {
        return Err(Error::NonPositiveScale(crate::weight::fmt_q(&scale)));
    }
    let dim = pair.g().ambient_dim();
    let payload = match command {
        Command::Spectrum => {
            let mu = spec.mu_weight(dim)?;
            let cutoff = options.cutoff.unwrap_or_else(|| default_cutoff(&pair, &mu));
            let lines = landau_levels(&spectrum(&pair, &mu, options.lines, cutoff)?, scale)?;
            Payload::Spectrum {
                mu,
                cutoff,
                ground_energy: pair.ground_energy() * scale,
                lines,
            }
        }
        Command::Lowest => {
            let mu = spec.mu_weight(dim)?;
            let cutoff = options.cutoff.unwrap_or_else(|| default_cutoff(&pair, &mu));
            let kostant = kostant_lowest(&pair, &mu)?.map(|k| KostantLowest {
                energy: k.energy * scale,
                ..k
            });
            let first = spectrum(&pair, &mu, 1, cutoff)?;
            let frobenius = landau_levels(&first, scale)?.remove(0);
            Payload::Lowest {
                mu,
                ground_energy: pair.ground_energy() * scale,
                kostant,
                frobenius,
            }
        }
        Command::GkrsCheck => {
            let mut checker = GkrsChecker::new(&pair, options.weyl_limit)?;
            let mut reports = Vec::new();
            for lambda in dominant_weights_up_to_dimension(pair.g(), options.dim_bound)? {
                let dim = weyl_dimension(pair.g(), &lambda)?;
                reports.push((dim, checker.check(&lambda)?));
            }
            Payload::Gkrs {
                dim_bound: options.dim_bound,
                reports,
            }
        }
        Command::WeylInfo => {
            let wg = enumerate_weyl(pair.g(), options.weyl_limit)?;
            let weta = enumerate_weyl(pair.eta(), options.weyl_limit)?;
            let transversal = coset_transversal(pair.g(), pair.eta(), &wg)?;
            Payload::WeylInfo(WeylInfo {
                order_g: wg.order(),
                order_eta: weta.order(),
                transversal,
                rho_g: pair.rho_g().clone(),
                rho_eta: pair.rho_eta().clone(),
                m_positive_roots: pair.m_positive_roots().to_vec(),
            })
        }
    };
    Ok(Report {
        command,
        query: spec.clone(),
        scale,
        payload,
        provenance: options.provenance,
    })
}
