//! Highest-weight representations: Weyl dimensions, Freudenthal characters,
//! virtual-character arithmetic and Casimir eigenvalues.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{sub_root_system, weyl_vector, RootSystem};
use crate::weight::{qi, Weight, Q};
use crate::weyl::{dominant_conjugate, is_dominant};

/// Finite formal integer combination of weights.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VirtualCharacter {
    terms: BTreeMap<Weight, i64>,
}

impl VirtualCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `{w: 1}`.
    pub fn singleton(w: Weight) -> Self {
        Self::from_terms([(w, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut chi = Self::zero();
        for (w, m) in terms {
            chi.add_term(w, m);
        }
        chi
    }

    pub fn add_term(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(m);
            }
        }
    }

    fn add_scaled(&mut self, other: &VirtualCharacter, k: i64) {
        for (w, m) in &other.terms {
            let entry = self.terms.entry(w.clone()).or_insert(0);
            *entry += k * m;
            if *entry == 0 {
                self.terms.remove(w);
            }
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, m)| (w, *m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients; the dimension for a genuine character.
    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Sum of absolute values of the coefficients.
    pub fn mass(&self) -> i64 {
        self.terms.values().map(|m| m.abs()).sum()
    }

    fn ambient_dim(&self) -> Option<usize> {
        self.terms.keys().next().map(Weight::dim)
    }

    pub fn scaled(&self, k: i64) -> VirtualCharacter {
        let mut out = VirtualCharacter::zero();
        out.add_scaled(self, k);
        out
    }

    pub fn plus(&self, other: &VirtualCharacter) -> VirtualCharacter {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    pub fn minus(&self, other: &VirtualCharacter) -> VirtualCharacter {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {m}")?;
        }
        write!(f, "}}")
    }
}

/// Highest weight of an irreducible module, tagged with its system's name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    pub highest_weight: Weight,
    pub system: String,
}

impl IrrepLabel {
    pub fn new(rs: &RootSystem, highest_weight: Weight) -> Self {
        IrrepLabel {
            highest_weight,
            system: rs.name().to_string(),
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.system, self.highest_weight)
    }
}

pub(crate) fn require_dominant(rs: &RootSystem, w: &Weight) -> Result<()> {
    rs.require_dim(w)?;
    if !is_dominant(rs, w, false) {
        return Err(Error::NotDominant {
            weight: w.to_string(),
            system: rs.name().to_string(),
        });
    }
    Ok(())
}

pub(crate) fn require_dominant_integral(rs: &RootSystem, w: &Weight) -> Result<()> {
    require_dominant(rs, w)?;
    if !rs.is_integral(w) {
        return Err(Error::NotIntegral {
            weight: w.to_string(),
            system: rs.name().to_string(),
        });
    }
    Ok(())
}

/// `Π (v, α) / Π (ρ, α)` over the positive roots, for any `v`.
pub fn weyl_product_ratio(rs: &RootSystem, v: &Weight) -> Q {
    let form = rs.form();
    let rho = weyl_vector(rs);
    let mut acc: Ratio<i128> = Ratio::one();
    for a in rs.positive_roots() {
        let num = form.dot(v, a);
        let den = form.dot(&rho, a);
        acc *= Ratio::new(*num.numer() as i128, *num.denom() as i128)
            / Ratio::new(*den.numer() as i128, *den.denom() as i128);
    }
    let (n, d) = (acc.numer().to_i64(), acc.denom().to_i64());
    match (n, d) {
        (Some(n), Some(d)) => Q::new(n, d),
        _ => panic!("Weyl product does not fit in 64 bits"),
    }
}

/// Dimension of the irreducible module with highest weight `lambda`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    require_dominant_integral(rs, lambda)?;
    let shifted = lambda + &weyl_vector(rs);
    let ratio = weyl_product_ratio(rs, &shifted);
    debug_assert!(ratio.is_integer() && ratio.is_positive());
    ratio
        .to_integer()
        .to_u64()
        .ok_or(Error::Overflow("Weyl dimension"))
}

/// The Weyl orbit of `w`, sorted.
pub fn weyl_orbit(rs: &RootSystem, w: &Weight) -> Vec<Weight> {
    let form = rs.form();
    let norms: Vec<Q> = rs.simple_roots().iter().map(|a| form.norm2(a)).collect();
    let mut seen: HashSet<Weight> = HashSet::from([w.clone()]);
    let mut stack = vec![w.clone()];
    while let Some(x) = stack.pop() {
        for (a, n) in rs.simple_roots().iter().zip(&norms) {
            let y = form.reflect_unchecked(a, *n, &x);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    out
}

/// Dominant weights of the module with highest weight `lambda`, with their
/// depth below `lambda` (sum of simple-root coefficients of `lambda - μ`).
fn dominant_weights(rs: &RootSystem, lambda: &Weight) -> Vec<(i64, Weight)> {
    let form = rs.form();
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for a in rs.positive_roots() {
            let k = form.coroot_pairing(&mu, a).expect("roots are nonzero");
            let k = k.to_integer();
            for t in 1..=k {
                let (dom, _) = dominant_conjugate(rs, &(&mu - &a.scale(qi(t))));
                if seen.insert(dom.clone()) {
                    stack.push(dom);
                }
            }
        }
    }
    let mut out: Vec<(i64, Weight)> = seen
        .into_iter()
        .map(|mu| {
            let c = rs
                .simple_coefficients(&(lambda - &mu))
                .expect("weight in root coset");
            let depth: Q = c.iter().sum();
            (depth.to_integer(), mu)
        })
        .collect();
    out.sort_by(|(da, a), (db, b)| da.cmp(db).then_with(|| b.cmp(a)));
    out
}

/// All weight multiplicities of `V_λ`, by Freudenthal's recursion over the
/// dominant weights. Each result is spread over its Weyl orbit so later
/// steps can look weights up directly.
fn freudenthal(rs: &RootSystem, lambda: &Weight) -> HashMap<Weight, i64> {
    let form = rs.form();
    let rho = weyl_vector(rs);
    let top = form.norm2(&(lambda + &rho));
    let mut mult: HashMap<Weight, i64> = HashMap::new();
    for (depth, mu) in dominant_weights(rs, lambda) {
        let m = if depth == 0 {
            1
        } else {
            let mut sum = Q::zero();
            for a in rs.positive_roots() {
                let mut nu = &mu + a;
                while let Some(&m_nu) = mult.get(&nu) {
                    sum += form.dot(&nu, a) * qi(m_nu);
                    nu = &nu + a;
                }
            }
            let denom = top - form.norm2(&(&mu + &rho));
            let value = qi(2) * sum / denom;
            debug_assert!(value.is_integer(), "Freudenthal produced {value}");
            value.to_integer()
        };
        // Zero multiplicities stay recorded so strings are not cut short.
        for w in weyl_orbit(rs, &mu) {
            mult.insert(w, m);
        }
    }
    mult
}

/// Simple roots grouped into the irreducible components of `rs`.
fn components(rs: &RootSystem) -> Vec<Vec<Weight>> {
    let form = rs.form();
    let simple = rs.simple_roots();
    let mut label: Vec<usize> = (0..simple.len()).collect();
    // Union by repeated relabelling; ranks are tiny.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..simple.len() {
            for j in 0..simple.len() {
                if !form.dot(&simple[i], &simple[j]).is_zero() && label[j] > label[i] {
                    label[j] = label[i];
                    changed = true;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Weight>> = BTreeMap::new();
    for (i, a) in simple.iter().enumerate() {
        groups.entry(label[i]).or_default().push(a.clone());
    }
    groups.into_values().collect()
}

/// Character of an irreducible root system via Freudenthal, expanded over
/// Weyl orbits. Rank one is the unbroken `α`-string.
fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> VirtualCharacter {
    let mut chi = VirtualCharacter::zero();
    if let [alpha] = rs.simple_roots() {
        let k = rs
            .form()
            .coroot_pairing(lambda, alpha)
            .expect("roots are nonzero")
            .to_integer();
        for t in 0..=k {
            chi.terms.insert(lambda - &alpha.scale(qi(t)), 1);
        }
        return chi;
    }
    chi.terms = freudenthal(rs, lambda)
        .into_iter()
        .filter(|(_, m)| *m != 0)
        .collect();
    chi
}

/// Full character of the irreducible module `V_λ`.
///
/// Orthogonal components contribute independently, so the character is
/// the product of the component characters.
pub fn character(rs: &RootSystem, lambda: &Weight) -> Result<VirtualCharacter> {
    require_dominant_integral(rs, lambda)?;
    if rs.is_empty() {
        return Ok(VirtualCharacter::singleton(lambda.clone()));
    }
    let parts = components(rs);
    if parts.len() == 1 {
        return Ok(irreducible_character(rs, lambda));
    }
    let mut chi = VirtualCharacter::singleton(lambda.clone());
    for simple in parts {
        let sub = sub_root_system(rs, &simple)?;
        let factor = irreducible_character(&sub, lambda);
        let mut next = VirtualCharacter::zero();
        for (x, mx) in chi.iter() {
            for (y, my) in factor.iter() {
                next.add_term(&(x + y) - lambda, mx * my);
            }
        }
        chi = next;
    }
    Ok(chi)
}

/// Character of a tensor product: convolution of weight multiplicities.
pub fn multiply(a: &VirtualCharacter, b: &VirtualCharacter) -> Result<VirtualCharacter> {
    if let (Some(da), Some(db)) = (a.ambient_dim(), b.ambient_dim()) {
        if da != db {
            return Err(Error::DimensionMismatch {
                expected: da,
                got: db,
            });
        }
    }
    let mut out = VirtualCharacter::zero();
    for (x, mx) in a.iter() {
        for (y, my) in b.iter() {
            let entry = out.terms.entry(x + y).or_insert(0);
            *entry += mx * my;
        }
    }
    out.terms.retain(|_, m| *m != 0);
    Ok(out)
}

/// Memo of irreducible characters keyed by highest weight. Only valid for
/// a single root system.
#[derive(Debug, Default)]
pub struct CharacterCache {
    chars: HashMap<Weight, VirtualCharacter>,
}

impl CharacterCache {
    pub fn get_or_compute(
        &mut self,
        rs: &RootSystem,
        lambda: &Weight,
    ) -> Result<&VirtualCharacter> {
        if !self.chars.contains_key(lambda) {
            let chi = character(rs, lambda)?;
            self.chars.insert(lambda.clone(), chi);
        }
        Ok(&self.chars[lambda])
    }
}

/// Expands a Weyl-invariant virtual character in irreducible characters.
///
/// Peels off the dominant weight with the largest `(ν+ρ, ν+ρ)` (ties broken
/// by the lexicographically largest weight) until nothing is left.
pub fn decompose(rs: &RootSystem, chi: &VirtualCharacter) -> Result<Vec<(IrrepLabel, i64)>> {
    decompose_cached(rs, chi, &mut CharacterCache::default())
}

/// [`decompose`] reusing irreducible characters across calls.
pub fn decompose_cached(
    rs: &RootSystem,
    chi: &VirtualCharacter,
    cache: &mut CharacterCache,
) -> Result<Vec<(IrrepLabel, i64)>> {
    if let Some(d) = chi.ambient_dim() {
        if d != rs.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: rs.ambient_dim(),
                got: d,
            });
        }
    }
    let form = rs.form();
    let norms: Vec<Q> = rs.simple_roots().iter().map(|a| form.norm2(a)).collect();
    for (w, m) in chi.iter() {
        for (a, n) in rs.simple_roots().iter().zip(&norms) {
            if chi.get(&form.reflect_unchecked(a, *n, w)) != m {
                return Err(Error::NotWInvariant(w.to_string()));
            }
        }
    }
    let rho = weyl_vector(rs);
    let mut rest = chi.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let (top, coeff) = rest
            .iter()
            .filter(|(w, _)| is_dominant(rs, w, false))
            .map(|(w, m)| (form.norm2(&(w + &rho)), w, m))
            .max_by(|(na, wa, _), (nb, wb, _)| na.cmp(nb).then_with(|| wa.cmp(wb)))
            .map(|(_, w, m)| (w.clone(), m))
            .ok_or_else(|| {
                Error::NonIntegralPeel(
                    rest.iter()
                        .next()
                        .map(|(w, _)| w.to_string())
                        .unwrap_or_default(),
                )
            })?;
        if !rs.is_integral(&top) {
            return Err(Error::NonIntegralPeel(top.to_string()));
        }
        let irr = cache.get_or_compute(rs, &top)?;
        rest.add_scaled(irr, -coeff);
        if rest.get(&top) != 0 {
            return Err(Error::NonIntegralPeel(top.to_string()));
        }
        out.push((IrrepLabel::new(rs, top), coeff));
    }
    Ok(out)
}

/// Rebuilds `Σ coeff · char(label)` from a decomposition.
pub fn reconstruct(rs: &RootSystem, parts: &[(IrrepLabel, i64)]) -> Result<VirtualCharacter> {
    let mut out = VirtualCharacter::zero();
    for (label, k) in parts {
        out.add_scaled(&character(rs, &label.highest_weight)?, *k);
    }
    Ok(out)
}

/// Dominant integral weights of `rs` whose irreducible module has
/// dimension at most `bound`, ordered by `(λ+ρ, λ+ρ)` then lexicographically.
pub fn dominant_weights_up_to_dimension(rs: &RootSystem, bound: u64) -> Result<Vec<Weight>> {
    let zero = Weight::zero(rs.ambient_dim());
    if bound == 0 {
        return Ok(Vec::new());
    }
    let fundamental = rs.fundamental_weights();
    let mut seen: HashSet<Weight> = HashSet::from([zero.clone()]);
    let mut stack = vec![zero];
    let mut out = Vec::new();
    // Dimension grows strictly along every fundamental direction.
    while let Some(lambda) = stack.pop() {
        for om in &fundamental {
            let next = &lambda + om;
            if !seen.contains(&next) && weyl_dimension(rs, &next)? <= bound {
                seen.insert(next.clone());
                stack.push(next);
            }
        }
        out.push(lambda);
    }
    let rho = weyl_vector(rs);
    let form = rs.form();
    out.sort_by_cached_key(|w| (form.norm2(&(w + &rho)), w.clone()));
    Ok(out)
}

/// Quadratic Casimir eigenvalue `(λ+ρ, λ+ρ) - (ρ, ρ)`.
pub fn casimir(rs: &RootSystem, lambda: &Weight) -> Result<Q> {
    require_dominant(rs, lambda)?;
    let form = rs.form();
    let rho = weyl_vector(rs);
    Ok(form.norm2(&(lambda + &rho)) - form.norm2(&rho))
}
