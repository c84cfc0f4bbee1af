//! Classical root systems in explicit rational coordinates.
//!
//! Every system is normalized so that long roots have squared length 2; in
//! B1 the single root length counts as long, so there `(ε1, ε1) = 2`.
//! A_n lives in the sum-zero hyperplane of an (n+1)-dimensional ambient
//! space, B/C/D in n dimensions with the usual `ε_i` coordinates, and G2 in
//! the basis of its simple roots `(α_short, α_long)` with the Gram matrix
//! `[[2/3, -1], [-1, 2]]`.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weight::{q, qi, Matrix, Weight, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    G2,
}

impl Series {
    /// Parses the series letter; `E` and `F` are recognized and rejected.
    pub fn from_letter(letter: char) -> Result<Series> {
        match letter {
            'A' => Ok(Series::A),
            'B' => Ok(Series::B),
            'C' => Ok(Series::C),
            'D' => Ok(Series::D),
            'G' => Ok(Series::G2),
            other => Err(Error::UnsupportedSeries(other.to_string())),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::G2 => 'G',
        }
    }
}

/// Symmetric positive-definite rational form on the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
    // Set when `gram` is `c * I`, which is every series except G2.
    scalar: Option<Q>,
}

impl BilinearForm {
    pub fn scalar(dim: usize, c: Q) -> Self {
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { c } else { Q::zero() })
                    .collect()
            })
            .collect();
        BilinearForm {
            gram: Matrix::from_rows(rows),
            scalar: Some(c),
        }
    }

    pub fn from_gram(gram: Matrix) -> Self {
        BilinearForm { gram, scalar: None }
    }

    pub fn dim(&self) -> usize {
        self.gram.size()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Result<Q> {
        a.check_dim(self.dim())?;
        b.check_dim(self.dim())?;
        Ok(self.dot(a, b))
    }

    /// Unchecked inner product; callers guarantee matching dimensions.
    pub fn dot(&self, a: &Weight, b: &Weight) -> Q {
        debug_assert_eq!(a.dim(), self.dim());
        debug_assert_eq!(b.dim(), self.dim());
        match self.scalar {
            Some(c) => {
                c * a
                    .coords()
                    .iter()
                    .zip(b.coords())
                    .map(|(x, y)| x * y)
                    .sum::<Q>()
            }
            None => {
                let n = self.dim();
                let mut acc = Q::zero();
                for i in 0..n {
                    if a[i].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        acc += a[i] * self.gram.get(i, j) * b[j];
                    }
                }
                acc
            }
        }
    }

    pub fn norm2(&self, a: &Weight) -> Q {
        self.dot(a, a)
    }

    /// `2 (w, root) / (root, root)`.
    pub fn coroot_pairing(&self, w: &Weight, root: &Weight) -> Result<Q> {
        w.check_dim(self.dim())?;
        root.check_dim(self.dim())?;
        let rr = self.norm2(root);
        if rr.is_zero() {
            return Err(Error::ZeroRoot);
        }
        Ok(qi(2) * self.dot(w, root) / rr)
    }

    /// Reflection of `w` in the hyperplane orthogonal to `root`.
    pub fn reflect(&self, root: &Weight, w: &Weight) -> Result<Weight> {
        let k = self.coroot_pairing(w, root)?;
        Ok(w - &root.scale(k))
    }

    pub(crate) fn reflect_unchecked(&self, root: &Weight, root_norm2: Q, w: &Weight) -> Weight {
        let k = qi(2) * self.dot(w, root) / root_norm2;
        if k.is_zero() {
            w.clone()
        } else {
            w - &root.scale(k)
        }
    }
}

/// A reduced root system together with a choice of positive roots.
///
/// Subsystems produced by [`sub_root_system`] share the parent's ambient
/// space and form and carry `series == None`; their rank is the number of
/// simple roots, so an empty subsystem (a bare torus) has rank zero.
#[derive(Clone, Debug)]
pub struct RootSystem {
    series: Option<Series>,
    rank: usize,
    name: String,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    form: BilinearForm,
    root_set: HashSet<Weight>,
    // Inverse of the Gram matrix of the simple roots, for basis coefficients.
    simple_gram_inv: Option<Matrix>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.simple_roots == other.simple_roots
            && self.positive_roots == other.positive_roots
            && self.form == other.form
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl RootSystem {
    fn assemble(
        series: Option<Series>,
        name: String,
        simple_roots: Vec<Weight>,
        roots: Vec<Weight>,
        positive: impl Fn(&[Q]) -> bool,
        form: BilinearForm,
    ) -> RootSystem {
        let rank = simple_roots.len();
        let simple_gram_inv = if rank == 0 {
            None
        } else {
            let rows = simple_roots
                .iter()
                .map(|a| simple_roots.iter().map(|b| form.dot(a, b)).collect())
                .collect();
            Some(
                Matrix::from_rows(rows)
                    .inverse()
                    .expect("simple roots are linearly independent"),
            )
        };
        let mut rs = RootSystem {
            series,
            rank,
            name,
            simple_roots,
            positive_roots: Vec::new(),
            form,
            root_set: roots.iter().cloned().collect(),
            simple_gram_inv,
        };
        let mut pos: Vec<(Q, Weight)> = roots
            .into_iter()
            .filter_map(|r| {
                let c = rs.simple_coefficients(&r)?;
                positive(&c).then(|| (c.iter().sum::<Q>(), r))
            })
            .collect();
        // Height ascending, ties lexicographically descending.
        pos.sort_by(|(ha, a), (hb, b)| ha.cmp(hb).then_with(|| b.cmp(a)));
        rs.positive_roots = pos.into_iter().map(|(_, r)| r).collect();
        rs
    }

    pub fn series(&self) -> Option<Series> {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// All roots, positive ones first then their negatives.
    pub fn roots(&self) -> Vec<Weight> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|r| -r));
        all
    }

    pub fn is_empty(&self) -> bool {
        self.positive_roots.is_empty()
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.root_set.contains(w)
    }

    /// Coefficients of `w` in the basis of simple roots, or `None` when `w`
    /// is not in their span.
    pub fn simple_coefficients(&self, w: &Weight) -> Option<Vec<Q>> {
        if w.dim() != self.ambient_dim() {
            return None;
        }
        let Some(inv) = &self.simple_gram_inv else {
            return w.is_zero().then(Vec::new);
        };
        let pairings = Weight::new(
            self.simple_roots
                .iter()
                .map(|a| self.form.dot(a, w))
                .collect(),
        );
        let coeffs = inv.apply(&pairings);
        let mut back = Weight::zero(self.ambient_dim());
        for (c, a) in coeffs.coords().iter().zip(&self.simple_roots) {
            back = &back + &a.scale(*c);
        }
        (back == *w).then(|| coeffs.coords().to_vec())
    }

    /// True iff `w` is an integer combination of the simple roots.
    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.simple_coefficients(w)
            .is_some_and(|c| c.iter().all(|x| x.is_integer()))
    }

    /// True iff `w` is a nonnegative integer combination of simple roots.
    pub fn is_nonneg_root_combination(&self, w: &Weight) -> bool {
        self.simple_coefficients(w)
            .is_some_and(|c| c.iter().all(|x| x.is_integer() && !x.is_negative()))
    }

    /// Integral weight: integer pairing with every simple coroot.
    pub fn is_integral(&self, w: &Weight) -> bool {
        self.simple_roots.iter().all(|a| {
            self.form
                .coroot_pairing(w, a)
                .map(|k| k.is_integer())
                .unwrap_or(false)
        })
    }

    /// Fundamental weights inside the span of the roots.
    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let Some(inv) = &self.simple_gram_inv else {
            return Vec::new();
        };
        (0..self.rank)
            .map(|i| {
                let mut w = Weight::zero(self.ambient_dim());
                let half_norm = self.form.norm2(&self.simple_roots[i]) / qi(2);
                for (j, a) in self.simple_roots.iter().enumerate() {
                    w = &w + &a.scale(half_norm * inv.get(i, j));
                }
                w
            })
            .collect()
    }

    pub(crate) fn require_dim(&self, w: &Weight) -> Result<()> {
        w.check_dim(self.ambient_dim())
    }
}

/// Closure of `generators` under the reflections they generate.
pub fn reflection_closure(form: &BilinearForm, generators: &[Weight]) -> Vec<Weight> {
    let mut roots: Vec<Weight> = Vec::new();
    let mut seen: HashSet<Weight> = HashSet::new();
    for g in generators {
        for r in [g.clone(), -g] {
            if seen.insert(r.clone()) {
                roots.push(r);
            }
        }
    }
    let mut frontier = 0;
    while frontier < roots.len() {
        let end = roots.len();
        for i in 0..end {
            for j in frontier..end {
                for (a, b) in [(i, j), (j, i)] {
                    let na = form.norm2(&roots[a]);
                    let r = form.reflect_unchecked(&roots[a], na, &roots[b]);
                    if seen.insert(r.clone()) {
                        roots.push(r);
                    }
                }
            }
        }
        frontier = end;
    }
    roots
}

/// Builds the standard realization of a classical (or G2) root system.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem> {
    let invalid = || Error::InvalidRank {
        series: series.letter().to_string(),
        rank,
    };
    let min_rank = match series {
        Series::D => 2,
        _ => 1,
    };
    if rank < min_rank || (series == Series::G2 && rank != 2) {
        return Err(invalid());
    }
    let n = rank;
    let e = |dim: usize, i: usize| Weight::unit(dim, i);
    let (dim, simple, form) = match series {
        Series::A => {
            let dim = n + 1;
            let simple = (0..n).map(|i| &e(dim, i) - &e(dim, i + 1)).collect();
            (dim, simple, BilinearForm::scalar(dim, Q::one()))
        }
        Series::B | Series::C | Series::D => {
            let mut simple: Vec<Weight> = (0..n - 1).map(|i| &e(n, i) - &e(n, i + 1)).collect();
            let (last, c) = match series {
                // B1 has a single root length, which then counts as long.
                Series::B if n == 1 => (e(n, 0), qi(2)),
                Series::B => (e(n, n - 1), Q::one()),
                Series::C => (e(n, n - 1).scale(qi(2)), q(1, 2)),
                _ => (&e(n, n - 2) + &e(n, n - 1), Q::one()),
            };
            simple.push(last);
            (n, simple, BilinearForm::scalar(n, c))
        }
        Series::G2 => {
            let gram = Matrix::from_rows(vec![vec![q(2, 3), qi(-1)], vec![qi(-1), qi(2)]]);
            (2, vec![e(2, 0), e(2, 1)], BilinearForm::from_gram(gram))
        }
    };
    debug_assert_eq!(form.dim(), dim);
    let roots = reflection_closure(&form, &simple);
    let name = match series {
        Series::G2 => "G2".to_string(),
        s => format!("{}{}", s.letter(), n),
    };
    Ok(RootSystem::assemble(
        Some(series),
        name,
        simple,
        roots,
        |c| c.iter().all(|x| !x.is_negative()),
        form,
    ))
}

/// Smallest root subsystem of `parent` containing `generators`, with
/// positivity inherited from the parent.
pub fn sub_root_system(parent: &RootSystem, generators: &[Weight]) -> Result<RootSystem> {
    for g in generators {
        if !parent.is_root(g) {
            return Err(Error::NotARoot(g.to_string()));
        }
    }
    let form = parent.form.clone();
    let roots = reflection_closure(&form, generators);
    let parent_positive: HashSet<&Weight> = parent.positive_roots.iter().collect();
    let positive: Vec<Weight> = roots
        .iter()
        .filter(|r| parent_positive.contains(r))
        .cloned()
        .collect();
    let positive_set: HashSet<&Weight> = positive.iter().collect();
    // Simple roots are the positive roots that are not a sum of two others.
    let mut simple: Vec<Weight> = positive
        .iter()
        .filter(|r| !positive.iter().any(|a| positive_set.contains(&(*r - a))))
        .cloned()
        .collect();
    simple.sort_by(|a, b| b.cmp(a));
    let name = format!("sub({})", parent.name);
    Ok(RootSystem::assemble(
        None,
        name,
        simple,
        roots,
        |c| c.iter().all(|x| !x.is_negative()),
        form,
    ))
}

/// Half the sum of the positive roots.
pub fn weyl_vector(rs: &RootSystem) -> Weight {
    let mut sum = Weight::zero(rs.ambient_dim());
    for a in &rs.positive_roots {
        sum = &sum + a;
    }
    sum.scale(q(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn b2_positive_roots_in_order() {
        let b2 = build_root_system(Series::B, 2).unwrap();
        assert_eq!(
            b2.positive_roots(),
            &[w(&[1, -1]), w(&[0, 1]), w(&[1, 0]), w(&[1, 1])]
        );
    }

    #[test]
    fn a1_has_one_root() {
        let a1 = build_root_system(Series::A, 1).unwrap();
        assert_eq!(a1.positive_roots(), &[w(&[1, -1])]);
        assert_eq!(a1.ambient_dim(), 2);
    }

    #[test]
    fn rank_and_series_errors() {
        assert!(matches!(
            build_root_system(Series::D, 1),
            Err(Error::InvalidRank { .. })
        ));
        assert!(matches!(
            build_root_system(Series::A, 0),
            Err(Error::InvalidRank { .. })
        ));
        assert!(matches!(
            build_root_system(Series::G2, 3),
            Err(Error::InvalidRank { .. })
        ));
        assert!(matches!(
            Series::from_letter('E'),
            Err(Error::UnsupportedSeries(_))
        ));
        assert!(matches!(
            Series::from_letter('F'),
            Err(Error::UnsupportedSeries(_))
        ));
    }

    #[test]
    fn positive_root_counts() {
        for n in 1..=6 {
            assert_eq!(
                build_root_system(Series::A, n)
                    .unwrap()
                    .positive_roots()
                    .len(),
                n * (n + 1) / 2
            );
            assert_eq!(
                build_root_system(Series::B, n)
                    .unwrap()
                    .positive_roots()
                    .len(),
                n * n
            );
            assert_eq!(
                build_root_system(Series::C, n)
                    .unwrap()
                    .positive_roots()
                    .len(),
                n * n
            );
            if n >= 2 {
                assert_eq!(
                    build_root_system(Series::D, n)
                        .unwrap()
                        .positive_roots()
                        .len(),
                    n * (n - 1)
                );
            }
        }
        assert_eq!(
            build_root_system(Series::G2, 2)
                .unwrap()
                .positive_roots()
                .len(),
            6
        );
    }

    #[test]
    fn root_lengths_per_series() {
        for (series, rank) in [
            (Series::A, 3),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
            (Series::G2, 2),
        ] {
            let rs = build_root_system(series, rank).unwrap();
            let mut lengths: Vec<Q> = rs
                .positive_roots()
                .iter()
                .map(|a| rs.form().norm2(a))
                .collect();
            lengths.sort();
            lengths.dedup();
            let expected = match series {
                Series::A | Series::D => vec![qi(2)],
                Series::B | Series::C => vec![qi(1), qi(2)],
                Series::G2 => vec![q(2, 3), qi(2)],
            };
            assert_eq!(lengths, expected, "{series:?}");
        }
    }

    #[test]
    fn d_n_inside_b_n() {
        for n in 2..=4 {
            let b = build_root_system(Series::B, n).unwrap();
            let gens: Vec<Weight> = b
                .positive_roots()
                .iter()
                .filter(|a| a.coords().iter().filter(|c| **c != qi(0)).count() == 2)
                .cloned()
                .collect();
            let d = sub_root_system(&b, &gens).unwrap();
            let dn = build_root_system(Series::D, n).unwrap();
            let mut got = d.positive_roots().to_vec();
            let mut want = dn.positive_roots().to_vec();
            got.sort();
            want.sort();
            assert_eq!(got, want);
            assert_eq!(d.rank(), n);
        }
    }

    #[test]
    fn empty_and_single_root_subsystems() {
        let b1 = build_root_system(Series::B, 1).unwrap();
        let torus = sub_root_system(&b1, &[]).unwrap();
        assert!(torus.is_empty());
        assert_eq!(torus.rank(), 0);
        assert_eq!(weyl_vector(&torus), Weight::zero(1));

        let b2 = build_root_system(Series::B, 2).unwrap();
        let a1 = sub_root_system(&b2, &[w(&[1, 1])]).unwrap();
        assert_eq!(a1.positive_roots(), &[w(&[1, 1])]);
        assert_eq!(a1.roots().len(), 2);

        assert!(matches!(
            sub_root_system(&b2, &[w(&[2, 0])]),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn inner_products_and_pairings() {
        let b2 = build_root_system(Series::B, 2).unwrap();
        let f = b2.form();
        assert_eq!(f.inner(&w(&[1, 0]), &w(&[1, 0])).unwrap(), qi(1));
        assert_eq!(f.inner(&w(&[3, -7]), &w(&[0, 0])).unwrap(), qi(0));
        let rho = weyl_vector(&b2);
        assert_eq!(rho, Weight::from_fracs(&[(3, 2), (1, 2)]));
        assert_eq!(f.inner(&rho, &rho).unwrap(), q(5, 2));
        assert!(matches!(
            f.inner(&w(&[1]), &w(&[1, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
        for a in b2.simple_roots() {
            assert_eq!(f.coroot_pairing(&rho, a).unwrap(), qi(1));
            assert_eq!(f.coroot_pairing(&Weight::zero(2), a).unwrap(), qi(0));
        }
        assert_eq!(
            f.coroot_pairing(&w(&[1, 0]), &Weight::zero(2)),
            Err(Error::ZeroRoot)
        );

        let b1 = build_root_system(Series::B, 1).unwrap();
        for i in 1..=9 {
            let mu = Weight::from_fracs(&[(i, 2)]);
            assert_eq!(b1.form().coroot_pairing(&mu, &w(&[1])).unwrap(), qi(i));
        }
    }

    #[test]
    fn weyl_vectors_of_b_and_d() {
        for n in 1..=6i64 {
            let b = build_root_system(Series::B, n as usize).unwrap();
            let expected: Vec<(i64, i64)> = (0..n).map(|i| (2 * (n - i) - 1, 2)).collect();
            assert_eq!(weyl_vector(&b), Weight::from_fracs(&expected));
            if n >= 2 {
                let d = build_root_system(Series::D, n as usize).unwrap();
                let expected: Vec<i64> = (0..n).map(|i| n - 1 - i).collect();
                assert_eq!(weyl_vector(&d), w(&expected));
            }
        }
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for (series, rank) in [
            (Series::A, 3),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
            (Series::G2, 2),
        ] {
            let rs = build_root_system(series, rank).unwrap();
            let fws = rs.fundamental_weights();
            for (i, om) in fws.iter().enumerate() {
                for (j, a) in rs.simple_roots().iter().enumerate() {
                    let expected = if i == j { qi(1) } else { qi(0) };
                    assert_eq!(rs.form().coroot_pairing(om, a).unwrap(), expected);
                }
            }
            let sum = fws
                .iter()
                .fold(Weight::zero(rs.ambient_dim()), |acc, x| &acc + x);
            assert_eq!(sum, weyl_vector(&rs));
        }
    }
}
