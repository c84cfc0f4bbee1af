//! Weyl groups as explicit rational orthogonal matrices.

use std::collections::HashSet;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{weyl_vector, BilinearForm, RootSystem};
use crate::weight::{qi, Matrix, Weight, Q};

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_WEYL_LIMIT: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: Matrix,
    sign: i8,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement {
            matrix: Matrix::identity(dim),
            sign: 1,
        }
    }

    /// The reflection `s_root` as a matrix acting on column vectors.
    pub fn reflection(form: &BilinearForm, root: &Weight) -> Result<Self> {
        root.check_dim(form.dim())?;
        let rr = form.norm2(root);
        if rr.is_zero() {
            return Err(Error::ZeroRoot);
        }
        let n = form.dim();
        let g_root: Vec<Q> = (0..n)
            .map(|j| (0..n).map(|k| form.gram().get(j, k) * root[k]).sum())
            .collect();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let delta = if i == j { qi(1) } else { qi(0) };
                        delta - qi(2) * root[i] * g_root[j] / rr
                    })
                    .collect()
            })
            .collect();
        Ok(WeylElement {
            matrix: Matrix::from_rows(rows),
            sign: -1,
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Determinant on the root span, `(-1)^length`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        self.matrix.apply(w)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            matrix: self.matrix.mul(&other.matrix),
            sign: self.sign * other.sign,
        }
    }

    /// Inverse with respect to `form`: `G⁻¹ Mᵀ G`.
    pub fn inverse(&self, form: &BilinearForm) -> WeylElement {
        let g = form.gram();
        let g_inv = g.inverse().expect("form is nondegenerate");
        WeylElement {
            matrix: g_inv.mul(&self.matrix.transpose()).mul(g),
            sign: self.sign,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.matrix.size())
    }
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    lengths: Vec<usize>,
    generators: Vec<WeylElement>,
}

impl WeylGroup {
    /// Elements ordered by word length, then lexicographically on matrices.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Simple reflections, in the order of the system's simple roots.
    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    /// Word length of `elements()[i]`.
    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, WeylElement> {
        self.elements.iter()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.elements.iter().any(|e| e.matrix == w.matrix)
    }
}

/// `w - 2 (w, root)/(root, root) · root`.
pub fn reflect(form: &BilinearForm, root: &Weight, w: &Weight) -> Result<Weight> {
    form.reflect(root, w)
}

/// Breadth-first closure of the simple reflections of `rs`.
pub fn enumerate_weyl(rs: &RootSystem, limit: usize) -> Result<WeylGroup> {
    let form = rs.form();
    let generators = rs
        .simple_roots()
        .iter()
        .map(|a| WeylElement::reflection(form, a))
        .collect::<Result<Vec<_>>>()?;
    let identity = WeylElement::identity(rs.ambient_dim());
    let mut seen: HashSet<Matrix> = HashSet::from([identity.matrix.clone()]);
    let mut elements = vec![identity.clone()];
    let mut lengths = vec![0];
    let mut level = vec![identity];
    let mut depth = 0;
    while !level.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for x in &level {
            for s in &generators {
                let y = s.compose(x);
                if seen.insert(y.matrix.clone()) {
                    if seen.len() > limit {
                        return Err(Error::GroupTooLarge { limit });
                    }
                    next.push(y);
                }
            }
        }
        next.sort_by(|a, b| a.matrix.cmp(&b.matrix));
        elements.extend(next.iter().cloned());
        lengths.extend(std::iter::repeat_n(depth, next.len()));
        level = next;
    }
    Ok(WeylGroup {
        elements,
        lengths,
        generators,
    })
}

/// `(w, α) ≥ 0` (or `> 0` when `strict`) for every positive root `α`.
pub fn is_dominant(rs: &RootSystem, w: &Weight, strict: bool) -> bool {
    if w.dim() != rs.ambient_dim() {
        return false;
    }
    // Checking simple roots is equivalent to checking all of Φ⁺.
    rs.simple_roots().iter().all(|a| {
        let p = rs.form().dot(w, a);
        if strict {
            p.is_positive()
        } else {
            !p.is_negative()
        }
    })
}

/// Reflects `w` through violated simple roots until it is dominant.
/// Returns the dominant weight and the applied simple-reflection indices in
/// application order.
pub fn dominant_conjugate(rs: &RootSystem, w: &Weight) -> (Weight, Vec<usize>) {
    let form = rs.form();
    let norms: Vec<Q> = rs.simple_roots().iter().map(|a| form.norm2(a)).collect();
    let mut cur = w.clone();
    let mut word = Vec::new();
    while let Some(i) = rs
        .simple_roots()
        .iter()
        .position(|a| form.dot(&cur, a).is_negative())
    {
        cur = form.reflect_unchecked(&rs.simple_roots()[i], norms[i], &cur);
        word.push(i);
    }
    (cur, word)
}

/// Returns `(u, u·w)` with `u·w` weakly dominant.
pub fn to_dominant(
    group: &WeylGroup,
    rs: &RootSystem,
    w: &Weight,
) -> Result<(WeylElement, Weight)> {
    rs.require_dim(w)?;
    let (dominant, word) = dominant_conjugate(rs, w);
    let mut u = WeylElement::identity(rs.ambient_dim());
    for i in word {
        u = group.generators[i].compose(&u);
    }
    Ok((u, dominant))
}

/// True iff `eta` shares the ambient space of `g` and all its roots are roots of `g`.
pub fn is_subsystem(g: &RootSystem, eta: &RootSystem) -> bool {
    g.form() == eta.form() && eta.positive_roots().iter().all(|a| g.is_root(a))
}

/// Elements of `W_g` carrying the positive `g`-chamber into the positive
/// `eta`-chamber, i.e. those `c` with `c(ρ_g)` strictly `eta`-dominant.
pub fn coset_transversal(
    g: &RootSystem,
    eta: &RootSystem,
    group: &WeylGroup,
) -> Result<Vec<WeylElement>> {
    if !is_subsystem(g, eta) {
        return Err(Error::NotASubsystem);
    }
    let rho = weyl_vector(g);
    Ok(group
        .iter()
        .filter(|c| is_dominant(eta, &c.apply(&rho), true))
        .cloned()
        .collect())
}

/// True iff `c` maps the positive chamber of `g` into that of `eta`.
pub fn in_transversal(g: &RootSystem, eta: &RootSystem, c: &WeylElement) -> bool {
    let rho = weyl_vector(g);
    let image = c.apply(&rho);
    // A genuine Weyl element permutes the roots, so c(ρ_g) has the same norm.
    g.form().norm2(&image) == g.form().norm2(&rho) && is_dominant(eta, &image, true)
}
