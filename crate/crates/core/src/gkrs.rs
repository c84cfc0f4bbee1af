//! Computational check of the multiplet identity
//! `V_λ ⊗ S⁺ - V_λ ⊗ S⁻ = Σ_{c∈C} (-1)^c U_{c•λ}` in `R(η)`.
//!
//! Both sides are compared as formal characters on the common Cartan.

use crate::error::{Error, Result};
use crate::homspace::{spin_modules, EqualRankPair};
use crate::reps::{
    character, multiply, require_dominant_integral, CharacterCache, IrrepLabel, VirtualCharacter,
};
use crate::weight::Weight;
use crate::weyl::{
    coset_transversal, enumerate_weyl, in_transversal, WeylElement, DEFAULT_WEYL_LIMIT,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsTerm {
    pub c: WeylElement,
    pub sign: i8,
    pub label: IrrepLabel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkrsReport {
    pub lambda: IrrepLabel,
    pub lhs: VirtualCharacter,
    pub rhs_terms: Vec<RhsTerm>,
    pub verified: bool,
    /// `lhs - rhs`; empty exactly when verified.
    pub discrepancy: VirtualCharacter,
}

/// `c•λ = c(λ+ρ_g) - ρ_η`.
pub fn dotted_action(c: &WeylElement, lambda: &Weight, pair: &EqualRankPair) -> Result<Weight> {
    require_dominant_integral(pair.g(), lambda)?;
    if !in_transversal(pair.g(), pair.eta(), c) {
        return Err(Error::NotInTransversal);
    }
    Ok(dotted_unchecked(c, lambda, pair))
}

fn dotted_unchecked(c: &WeylElement, lambda: &Weight, pair: &EqualRankPair) -> Weight {
    &c.apply(&(lambda + pair.rho_g())) - pair.rho_eta()
}

/// Reusable state for checking many `λ` on one pair.
pub struct GkrsChecker<'a> {
    pair: &'a EqualRankPair,
    transversal: Vec<WeylElement>,
    spin_difference: VirtualCharacter,
    eta_chars: CharacterCache,
}

impl<'a> GkrsChecker<'a> {
    pub fn new(pair: &'a EqualRankPair, weyl_limit: usize) -> Result<Self> {
        let spin = spin_modules(pair)?;
        let group = enumerate_weyl(pair.g(), weyl_limit)?;
        let transversal = coset_transversal(pair.g(), pair.eta(), &group)?;
        Ok(GkrsChecker {
            pair,
            transversal,
            spin_difference: spin.difference(),
            eta_chars: CharacterCache::default(),
        })
    }

    pub fn transversal(&self) -> &[WeylElement] {
        &self.transversal
    }

    pub fn check(&mut self, lambda: &Weight) -> Result<GkrsReport> {
        let pair = self.pair;
        let g_char = character(pair.g(), lambda)?;
        let lhs = multiply(&g_char, &self.spin_difference)?;
        let mut rhs = VirtualCharacter::zero();
        let mut rhs_terms = Vec::with_capacity(self.transversal.len());
        for c in &self.transversal {
            let mu = dotted_unchecked(c, lambda, pair);
            let u = self.eta_chars.get_or_compute(pair.eta(), &mu)?;
            rhs = if c.sign() > 0 {
                rhs.plus(u)
            } else {
                rhs.minus(u)
            };
            rhs_terms.push(RhsTerm {
                c: c.clone(),
                sign: c.sign(),
                label: IrrepLabel::new(pair.eta(), mu),
            });
        }
        let discrepancy = lhs.minus(&rhs);
        Ok(GkrsReport {
            lambda: IrrepLabel::new(pair.g(), lambda.clone()),
            lhs,
            rhs_terms,
            verified: discrepancy.is_zero(),
            discrepancy,
        })
    }
}

/// Checks the identity for one highest weight `λ` of `g`.
pub fn gkrs_check(pair: &EqualRankPair, lambda: &Weight) -> Result<GkrsReport> {
    require_dominant_integral(pair.g(), lambda)?;
    GkrsChecker::new(pair, DEFAULT_WEYL_LIMIT)?.check(lambda)
}
