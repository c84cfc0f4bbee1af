//! Laplacian spectra on an equal-rank homogeneous space `G/H`.
//!
//! The Laplacian acting on sections of the bundle induced from the
//! `H`-module `U_μ` is `C₂(G) - C₂(H, U_μ)`. On the isotypic component of a
//! `G`-irrep `V_λ` it acts by
//!
//! ```text
//! E_λ = (λ+ρ_g, λ+ρ_g) - (μ+ρ_η, μ+ρ_η) - (ρ_g, ρ_g) + (ρ_η, ρ_η)
//! ```
//!
//! with degeneracy `dim V_λ`. Two notions of "lowest level" are exposed:
//! [`kostant_lowest`] is the closed form attached to the multiplet
//! `λ = w(μ+ρ_η) - ρ_g`, while [`spectrum`] enumerates the `V_λ` that
//! actually occur in sections of `G ×_H U_μ` (Frobenius reciprocity). They
//! generally differ; reports keep them apart.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::reps::{
    character, decompose_cached, require_dominant, require_dominant_integral, weyl_dimension,
    weyl_product_ratio, CharacterCache, IrrepLabel, VirtualCharacter,
};
use crate::rootsys::{sub_root_system, weyl_vector, RootSystem};
use crate::weight::{q, qi, Weight, Q};
use crate::weyl::{dominant_conjugate, WeylElement};

/// A root system `g` with a same-rank subsystem `eta` sharing its Cartan.
#[derive(Clone, Debug)]
pub struct EqualRankPair {
    g: RootSystem,
    eta: RootSystem,
    m_positive_roots: Vec<Weight>,
    rho_g: Weight,
    rho_eta: Weight,
}

impl EqualRankPair {
    pub fn g(&self) -> &RootSystem {
        &self.g
    }

    pub fn eta(&self) -> &RootSystem {
        &self.eta
    }

    /// `Φ⁺_g \ Φ⁺_η`, in the order of `Φ⁺_g`.
    pub fn m_positive_roots(&self) -> &[Weight] {
        &self.m_positive_roots
    }

    pub fn rho_g(&self) -> &Weight {
        &self.rho_g
    }

    pub fn rho_eta(&self) -> &Weight {
        &self.rho_eta
    }

    pub fn with_eta_name(mut self, name: impl Into<String>) -> Self {
        self.eta = self.eta.with_name(name);
        self
    }

    /// `(ρ_η, ρ_η) - (ρ_g, ρ_g)`, the lower bound of the spectrum.
    pub fn ground_energy(&self) -> Q {
        let form = self.g.form();
        form.norm2(&self.rho_eta) - form.norm2(&self.rho_g)
    }

    fn require_mu(&self, mu: &Weight) -> Result<()> {
        require_dominant(&self.eta, mu)?;
        if !self.g.is_integral(mu) {
            return Err(Error::NotIntegral {
                weight: mu.to_string(),
                system: self.g.name().to_string(),
            });
        }
        Ok(())
    }
}

/// Builds the pair `(g, η)` with `η` generated by `eta_generators`.
pub fn make_pair(g: &RootSystem, eta_generators: &[Weight]) -> Result<EqualRankPair> {
    let eta = sub_root_system(g, eta_generators)?;
    let eta_roots: HashSet<Weight> = eta.roots().into_iter().collect();
    for a in &eta_roots {
        for b in &eta_roots {
            let sum = a + b;
            if g.is_root(&sum) && !eta_roots.contains(&sum) {
                return Err(Error::ClosureViolation(format!("{a} + {b} = {sum}")));
            }
        }
    }
    let m_positive_roots: Vec<Weight> = g
        .positive_roots()
        .iter()
        .filter(|a| !eta_roots.contains(a))
        .cloned()
        .collect();
    let rho_g = weyl_vector(g);
    let rho_eta = weyl_vector(&eta);
    debug_assert_eq!(
        &rho_g - &rho_eta,
        m_positive_roots
            .iter()
            .fold(Weight::zero(g.ambient_dim()), |acc, a| &acc + a)
            .scale(q(1, 2))
    );
    Ok(EqualRankPair {
        g: g.clone(),
        eta,
        m_positive_roots,
        rho_g,
        rho_eta,
    })
}

/// The two half-spin modules of `o(m)`, as `η`-characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinModules {
    pub s_plus: VirtualCharacter,
    pub s_minus: VirtualCharacter,
}

impl SpinModules {
    /// `S⁺ - S⁻`.
    pub fn difference(&self) -> VirtualCharacter {
        self.s_plus.minus(&self.s_minus)
    }
}

/// Weights `½ Σ s_α α` over all sign vectors on `Φ⁺_m`; an even number of
/// minus signs goes to `S⁺`.
pub fn spin_modules(pair: &EqualRankPair) -> Result<SpinModules> {
    let roots = &pair.m_positive_roots;
    if roots.is_empty() {
        return Err(Error::EmptyComplement);
    }
    if roots.len() > 30 {
        return Err(Error::Overflow("half-spin weights"));
    }
    let dim = pair.g.ambient_dim();
    let mut s_plus = VirtualCharacter::zero();
    let mut s_minus = VirtualCharacter::zero();
    for mask in 0u32..(1 << roots.len()) {
        let mut w = Weight::zero(dim);
        for (i, a) in roots.iter().enumerate() {
            w = if mask & (1 << i) == 0 { &w + a } else { &w - a };
        }
        let w = w.scale(q(1, 2));
        if mask.count_ones() % 2 == 0 {
            s_plus.add_term(w, 1);
        } else {
            s_minus.add_term(w, 1);
        }
    }
    Ok(SpinModules { s_plus, s_minus })
}

/// Laplacian eigenvalue on the `V_λ` component of sections of `G ×_H U_μ`.
pub fn eigenvalue(pair: &EqualRankPair, lambda: &Weight, mu: &Weight) -> Result<Q> {
    require_dominant_integral(&pair.g, lambda)?;
    pair.require_mu(mu)?;
    Ok(energy_unchecked(pair, lambda, mu))
}

fn energy_unchecked(pair: &EqualRankPair, lambda: &Weight, mu: &Weight) -> Q {
    let form = pair.g.form();
    form.norm2(&(lambda + &pair.rho_g))
        - form.norm2(&(mu + &pair.rho_eta))
        - form.norm2(&pair.rho_g)
        + form.norm2(&pair.rho_eta)
}

/// Lowest level attached to `μ` through the multiplet correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantLowest {
    pub lambda: IrrepLabel,
    pub energy: Q,
    pub multiplicity: u64,
    /// The Weyl element `w` with `w(μ+ρ_η) - ρ_g` dominant.
    pub w: WeylElement,
}

/// Searches `W_g` for `w` with `w(μ+ρ_η) - ρ_g` dominant. Returns `None`
/// when `μ+ρ_η` lies on a wall of the `g`-chambers.
pub fn kostant_lowest(pair: &EqualRankPair, mu: &Weight) -> Result<Option<KostantLowest>> {
    pair.require_mu(mu)?;
    let g = &pair.g;
    let form = g.form();
    let shifted = mu + &pair.rho_eta;
    if g.positive_roots()
        .iter()
        .any(|a| form.dot(&shifted, a).is_zero())
    {
        return Ok(None);
    }
    // On a regular weight the dominant conjugate is strictly dominant and
    // reached by a unique w.
    let (image, word) = dominant_conjugate(g, &shifted);
    let mut w = WeylElement::identity(g.ambient_dim());
    for i in word {
        w = WeylElement::reflection(form, &g.simple_roots()[i])?.compose(&w);
    }
    let lambda = &image - &pair.rho_g;
    require_dominant_integral(g, &lambda)?;
    let mult = weyl_product_ratio(g, &image);
    if !mult.is_integer() || !mult.is_positive() {
        return Err(Error::NotIntegral {
            weight: lambda.to_string(),
            system: g.name().to_string(),
        });
    }
    let multiplicity =
        u64::try_from(mult.to_integer()).map_err(|_| Error::Overflow("multiplicity"))?;
    Ok(Some(KostantLowest {
        energy: energy_unchecked(pair, &lambda, mu),
        lambda: IrrepLabel::new(g, lambda),
        multiplicity,
        w,
    }))
}

/// One eigenspace of the Laplacian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralLine {
    pub lambda: IrrepLabel,
    pub energy: Q,
    /// `dim V_λ`.
    pub degeneracy: u64,
    /// Multiplicity of `U_μ` in `V_λ|_η`.
    pub frobenius_multiplicity: u64,
}

/// `(μ+ρ_η, μ+ρ_η)·4 + 100`.
pub fn default_cutoff(pair: &EqualRankPair, mu: &Weight) -> Q {
    pair.g.form().norm2(&(mu + &pair.rho_eta)) * qi(4) + qi(100)
}

/// Lazily enumerates the spectral lines of sections of `G ×_H U_μ` in
/// nondecreasing energy.
///
/// Candidates are the dominant integral `λ` with `λ - μ` in the root
/// lattice, visited in increasing `(λ+ρ_g, λ+ρ_g)` (ties lexicographic);
/// each is kept when `U_μ` occurs in `V_λ|_η`. The stream ends once the
/// norm passes the cutoff.
pub struct SpectrumStream<'a> {
    pair: &'a EqualRankPair,
    mu: Weight,
    cutoff: Q,
    fundamental: Vec<Weight>,
    heap: BinaryHeap<Reverse<(Q, Weight)>>,
    queued: HashSet<Weight>,
    cache: CharacterCache,
    done: bool,
}

impl<'a> SpectrumStream<'a> {
    pub fn new(pair: &'a EqualRankPair, mu: &Weight, cutoff: Q) -> Result<Self> {
        pair.require_mu(mu)?;
        let zero = Weight::zero(pair.g.ambient_dim());
        let norm = pair.g.form().norm2(&pair.rho_g);
        Ok(SpectrumStream {
            pair,
            mu: mu.clone(),
            cutoff,
            fundamental: pair.g.fundamental_weights(),
            heap: BinaryHeap::from([Reverse((norm, zero.clone()))]),
            queued: HashSet::from([zero]),
            cache: CharacterCache::default(),
            done: false,
        })
    }

    fn next_candidate(&mut self) -> Option<(Q, Weight)> {
        let Reverse((norm, lambda)) = self.heap.pop()?;
        if norm > self.cutoff {
            self.heap.clear();
            return None;
        }
        let form = self.pair.g.form();
        for om in &self.fundamental {
            let next = &lambda + om;
            if self.queued.insert(next.clone()) {
                let n = form.norm2(&(&next + &self.pair.rho_g));
                self.heap.push(Reverse((n, next)));
            }
        }
        Some((norm, lambda))
    }

    fn evaluate(&mut self, lambda: &Weight) -> Result<Option<SpectralLine>> {
        let pair = self.pair;
        if !pair.g.in_root_lattice(&(lambda - &self.mu)) {
            return Ok(None);
        }
        let chi = character(&pair.g, lambda)?;
        let parts = decompose_cached(&pair.eta, &chi, &mut self.cache)?;
        let mult = parts
            .iter()
            .find(|(label, _)| label.highest_weight == self.mu)
            .map(|(_, k)| *k)
            .unwrap_or(0);
        if mult <= 0 {
            return Ok(None);
        }
        Ok(Some(SpectralLine {
            lambda: IrrepLabel::new(&pair.g, lambda.clone()),
            energy: energy_unchecked(pair, lambda, &self.mu),
            degeneracy: weyl_dimension(&pair.g, lambda)?,
            frobenius_multiplicity: mult as u64,
        }))
    }
}

impl Iterator for SpectrumStream<'_> {
    type Item = Result<SpectralLine>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        while let Some((_, lambda)) = self.next_candidate() {
            match self.evaluate(&lambda) {
                Ok(Some(line)) => return Some(Ok(line)),
                Ok(None) => continue,
                Err(e) => {
                    self.done = true;
                    return Some(Err(e));
                }
            }
        }
        self.done = true;
        None
    }
}

/// First `max_lines` spectral lines whose `(λ+ρ_g, λ+ρ_g)` does not exceed
/// `hard_cutoff`.
pub fn spectrum(
    pair: &EqualRankPair,
    mu: &Weight,
    max_lines: usize,
    hard_cutoff: Q,
) -> Result<Vec<SpectralLine>> {
    let lines = SpectrumStream::new(pair, mu, hard_cutoff)?
        .take(max_lines)
        .collect::<Result<Vec<_>>>()?;
    if lines.is_empty() {
        return Err(Error::CutoffBeforeFirstLine(crate::weight::fmt_q(
            &hard_cutoff,
        )));
    }
    Ok(lines)
}

/// Multiplies every energy by `scale` (the `ħ²/2M` prefactor).
pub fn landau_levels(lines: &[SpectralLine], scale: Q) -> Result<Vec<SpectralLine>> {
    if !scale.is_positive() {
        return Err(Error::NonPositiveScale(crate::weight::fmt_q(&scale)));
    }
    Ok(lines
        .iter()
        .map(|l| SpectralLine {
            energy: l.energy * scale,
            ..l.clone()
        })
        .collect())
}

/// Groups spectral lines sharing an energy, summing their degeneracies.
pub fn levels_by_energy(lines: &[SpectralLine]) -> Vec<(Q, u64)> {
    let mut order: Vec<Q> = Vec::new();
    let mut total: HashMap<Q, u64> = HashMap::new();
    for l in lines {
        let slot = total.entry(l.energy).or_insert_with(|| {
            order.push(l.energy);
            0
        });
        *slot += l.degeneracy * l.frobenius_multiplicity;
    }
    order.into_iter().map(|e| (e, total[&e])).collect()
}
