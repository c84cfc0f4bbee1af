//! Independent oracles shared by the integration suites. Nothing here calls
//! Freudenthal's recursion, `decompose`, or the spectrum enumerator.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet};

use coset_spectra::homspace::{make_pair, EqualRankPair};
use coset_spectra::reps::VirtualCharacter;
use coset_spectra::rootsys::{build_root_system, weyl_vector, RootSystem, Series};
use coset_spectra::weight::{q, qi, Weight, Q};
use coset_spectra::weyl::{enumerate_weyl, is_dominant, WeylGroup, DEFAULT_WEYL_LIMIT};

pub fn w(c: &[i64]) -> Weight {
    Weight::from_ints(c)
}

pub fn wf(c: &[(i64, i64)]) -> Weight {
    Weight::from_fracs(c)
}

pub fn group(rs: &RootSystem) -> WeylGroup {
    enumerate_weyl(rs, DEFAULT_WEYL_LIMIT).unwrap()
}

/// `ε_i ± ε_j` generators of D_n inside B_n.
pub fn d_generators(b: &RootSystem) -> Vec<Weight> {
    b.positive_roots()
        .iter()
        .filter(|a| a.coords().iter().filter(|c| **c != qi(0)).count() == 2)
        .cloned()
        .collect()
}

pub fn b_over_d(n: usize) -> EqualRankPair {
    let b = build_root_system(Series::B, n).unwrap();
    make_pair(&b, &d_generators(&b))
        .unwrap()
        .with_eta_name(format!("D{n}"))
}

/// The five pairs of the test matrix, each with five `μ` that are
/// `η`-dominant and `g`-integral.
pub fn test_matrix() -> Vec<(&'static str, EqualRankPair, Vec<Weight>)> {
    let b1 = build_root_system(Series::B, 1).unwrap();
    let b2 = build_root_system(Series::B, 2).unwrap();
    let g2 = build_root_system(Series::G2, 2).unwrap();
    vec![
        (
            "B1/torus",
            make_pair(&b1, &[]).unwrap().with_eta_name("torus"),
            vec![
                w(&[0]),
                wf(&[(1, 2)]),
                w(&[1]),
                wf(&[(5, 2)]),
                wf(&[(-3, 2)]),
            ],
        ),
        (
            "B2/D2",
            b_over_d(2),
            vec![
                w(&[0, 0]),
                wf(&[(1, 2), (1, 2)]),
                wf(&[(1, 2), (-1, 2)]),
                w(&[1, 1]),
                wf(&[(3, 2), (1, 2)]),
            ],
        ),
        (
            "B3/D3",
            b_over_d(3),
            vec![
                w(&[0, 0, 0]),
                wf(&[(1, 2), (1, 2), (1, 2)]),
                wf(&[(1, 2), (1, 2), (-1, 2)]),
                wf(&[(3, 2), (1, 2), (1, 2)]),
                w(&[1, 1, 0]),
            ],
        ),
        (
            "B2/A1+torus",
            make_pair(&b2, &[w(&[1, 1])]).unwrap().with_eta_name("A1"),
            vec![
                w(&[0, 0]),
                w(&[1, 0]),
                w(&[0, 1]),
                w(&[2, -1]),
                wf(&[(3, 2), (1, 2)]),
            ],
        ),
        (
            "G2/A1xA1",
            make_pair(&g2, &[w(&[1, 0]), w(&[3, 2])])
                .unwrap()
                .with_eta_name("A1xA1"),
            vec![w(&[0, 0]), w(&[1, 0]), w(&[2, 1]), w(&[3, 2]), w(&[3, 1])],
        ),
    ]
}

/// Positive roots of the classical series written out directly in `ε`
/// coordinates (G2 omitted).
pub fn explicit_positive_roots(series: Series, n: usize) -> Vec<Weight> {
    let dim = if series == Series::A { n + 1 } else { n };
    let e = |i: usize| Weight::unit(dim, i);
    let mut out = Vec::new();
    match series {
        Series::A => {
            for i in 0..=n {
                for j in i + 1..=n {
                    out.push(&e(i) - &e(j));
                }
            }
        }
        _ => {
            for i in 0..n {
                for j in i + 1..n {
                    out.push(&e(i) - &e(j));
                    out.push(&e(i) + &e(j));
                }
                match series {
                    Series::B => out.push(e(i)),
                    Series::C => out.push(e(i).scale(qi(2))),
                    _ => {}
                }
            }
        }
    }
    out.sort();
    out
}

/// Sums `α + β` of roots of `rs` that belong to `ambient_roots` but are
/// missing from `rs`.
pub fn pairwise_sum_violations(rs: &RootSystem, ambient_roots: &HashSet<Weight>) -> Vec<Weight> {
    let roots: HashSet<Weight> = rs.roots().into_iter().collect();
    let mut bad = Vec::new();
    for a in &roots {
        for b in &roots {
            let s = a + b;
            if ambient_roots.contains(&s) && !roots.contains(&s) {
                bad.push(s);
            }
        }
    }
    bad
}

/// Kostant partition function: number of ways to write `v` as a
/// nonnegative integer combination of positive roots.
pub struct PartitionFunction<'a> {
    rs: &'a RootSystem,
    coeffs: Vec<Vec<i64>>,
    memo: HashMap<(usize, Vec<i64>), i64>,
}

impl<'a> PartitionFunction<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let coeffs = rs
            .positive_roots()
            .iter()
            .map(|a| {
                rs.simple_coefficients(a)
                    .unwrap()
                    .iter()
                    .map(|c| c.to_integer())
                    .collect()
            })
            .collect();
        PartitionFunction {
            rs,
            coeffs,
            memo: HashMap::new(),
        }
    }

    pub fn count(&mut self, v: &Weight) -> i64 {
        let Some(c) = self.rs.simple_coefficients(v) else {
            return 0;
        };
        if c.iter().any(|x| !x.is_integer()) {
            return 0;
        }
        let target: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
        self.count_from(0, target)
    }

    fn count_from(&mut self, idx: usize, target: Vec<i64>) -> i64 {
        if target.iter().any(|&t| t < 0) {
            return 0;
        }
        if idx == self.coeffs.len() {
            return i64::from(target.iter().all(|&t| t == 0));
        }
        if let Some(&v) = self.memo.get(&(idx, target.clone())) {
            return v;
        }
        let mut total = 0;
        let mut rest = target.clone();
        loop {
            total += self.count_from(idx + 1, rest.clone());
            for (r, c) in rest.iter_mut().zip(&self.coeffs[idx]) {
                *r -= c;
            }
            if rest.iter().any(|&t| t < 0) {
                break;
            }
        }
        self.memo.insert((idx, target), total);
        total
    }
}

/// Character of `V_λ` from the alternating sum over the Weyl group:
/// `m(μ) = Σ_w ε(w) P(w(λ+ρ) - (μ+ρ))`. The candidate weights are all
/// `λ - Σ n_i α_i` inside the ball of radius `|λ|`.
pub fn weyl_sum_character(rs: &RootSystem, lambda: &Weight) -> VirtualCharacter {
    let rho = weyl_vector(rs);
    let grp = group(rs);
    let mut pf = PartitionFunction::new(rs);
    let images: Vec<(Weight, i8)> = grp
        .iter()
        .map(|e| (e.apply(&(lambda + &rho)), e.sign()))
        .collect();
    let radius = rs.form().norm2(lambda);
    let mut out = VirtualCharacter::zero();
    let mut seen = HashSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        let mut m = 0;
        for (img, s) in &images {
            m += i64::from(*s) * pf.count(&(img - &(&mu + &rho)));
        }
        out.add_term(mu.clone(), m);
        for a in rs.simple_roots() {
            let next = &mu - a;
            if rs.form().norm2(&next) <= radius && seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    out
}

/// Multiplicity of `U_μ` in a `W_η`-invariant character, by the alternating
/// sum `Σ_{w∈W_η} ε(w) χ(w(μ+ρ_η) - ρ_η)`.
pub fn racah_branching(
    eta: &RootSystem,
    eta_group: &WeylGroup,
    chi: &VirtualCharacter,
    mu: &Weight,
) -> i64 {
    let rho = weyl_vector(eta);
    eta_group
        .iter()
        .map(|e| i64::from(e.sign()) * chi.get(&(&e.apply(&(mu + &rho)) - &rho)))
        .sum()
}

/// Transcription of the closed product for `dim V_λ` on `S^{2n}` with
/// `μ = (I/2, ..., I/2)`:
/// `Π_i (I+2n-2i)/(2n+1-2i)! · Π_{i<j} (j-i)(I+2n-i-j)`.
pub fn sphere_product_formula(n: i64, big_i: i64) -> Q {
    let fact = |k: i64| (1..=k).product::<i64>();
    let mut acc = qi(1);
    for i in 1..=n {
        acc *= q(big_i + 2 * n - 2 * i, fact(2 * n + 1 - 2 * i));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            acc *= qi((j - i) * (big_i + 2 * n - i - j));
        }
    }
    acc
}

/// The general-μ version of the same product:
/// `Π_i (2μ_i+2n-2i)/(2n+1-2i)! · Π_{i<j} (μ_i-μ_j+j-i)(μ_i+μ_j+2n-i-j)`.
pub fn sphere_product_formula_general(mu: &Weight) -> Q {
    let n = mu.dim() as i64;
    let fact = |k: i64| (1..=k).product::<i64>();
    let m = |i: i64| mu[(i - 1) as usize];
    let mut acc = qi(1);
    for i in 1..=n {
        acc *= (qi(2) * m(i) + qi(2 * n - 2 * i)) / qi(fact(2 * n + 1 - 2 * i));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            acc *= (m(i) - m(j) + qi(j - i)) * (m(i) + m(j) + qi(2 * n - i - j));
        }
    }
    acc
}

/// All dominant integral weights of `rs` with `(λ+ρ, λ+ρ) <= cutoff`, by
/// scanning a box in fundamental-weight coordinates.
pub fn dominant_weights_in_ball(rs: &RootSystem, cutoff: Q) -> Vec<Weight> {
    let fws = rs.fundamental_weights();
    let rho = weyl_vector(rs);
    let form = rs.form();
    // Each coordinate a_i is bounded since (a_i ω_i + ρ)² ≤ (λ+ρ)².
    let bounds: Vec<i64> = fws
        .iter()
        .map(|om| {
            let mut a = 0;
            while form.norm2(&(&om.scale(qi(a + 1)) + &rho)) <= cutoff {
                a += 1;
            }
            a
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0i64; fws.len()];
    loop {
        let mut lam = Weight::zero(rs.ambient_dim());
        for (a, om) in idx.iter().zip(&fws) {
            lam = &lam + &om.scale(qi(*a));
        }
        if form.norm2(&(&lam + &rho)) <= cutoff {
            assert!(is_dominant(rs, &lam, false));
            out.push(lam);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] <= bounds[k] {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Weight multiplicities as a sorted map, for readable diffs.
pub fn as_map(chi: &VirtualCharacter) -> BTreeMap<Weight, i64> {
    chi.iter().map(|(w, m)| (w.clone(), m)).collect()
}

/// Kostant's multiplicity formula for one weight:
/// `m_λ(ν) = Σ_w ε(w) P(w(λ+ρ) - (ν+ρ))`.
pub fn kostant_multiplicity(
    rs: &RootSystem,
    grp: &WeylGroup,
    pf: &mut PartitionFunction<'_>,
    lambda: &Weight,
    nu: &Weight,
) -> i64 {
    let rho = weyl_vector(rs);
    let shifted = nu + &rho;
    grp.iter()
        .map(|e| i64::from(e.sign()) * pf.count(&(&e.apply(&(lambda + &rho)) - &shifted)))
        .sum()
}

/// Multiplicity of `U_μ` in `V_λ|_η`, by Racah's alternating sum with the
/// weight multiplicities taken from Kostant's formula.
pub fn racah_multiplicity(
    pair: &EqualRankPair,
    g_group: &WeylGroup,
    eta_group: &WeylGroup,
    pf: &mut PartitionFunction<'_>,
    lambda: &Weight,
    mu: &Weight,
) -> i64 {
    let rho_eta = pair.rho_eta();
    eta_group
        .iter()
        .map(|e| {
            let nu = &e.apply(&(mu + rho_eta)) - rho_eta;
            i64::from(e.sign()) * kostant_multiplicity(pair.g(), g_group, pf, lambda, &nu)
        })
        .sum()
}

/// Brute-force lowest line: scans every dominant `λ` of `g` in the ball
/// `(λ+ρ_g)² <= cutoff` and returns the minimal energy together with every
/// `λ` attaining it.
pub fn brute_force_lowest(
    pair: &EqualRankPair,
    mu: &Weight,
    cutoff: Q,
) -> Option<(Q, Vec<Weight>)> {
    let g = pair.g();
    let gg = group(g);
    let ge = group(pair.eta());
    let mut pf = PartitionFunction::new(g);
    let form = g.form();
    let energy = |lam: &Weight| {
        form.norm2(&(lam + pair.rho_g()))
            - form.norm2(&(mu + pair.rho_eta()))
            - form.norm2(pair.rho_g())
            + form.norm2(pair.rho_eta())
    };
    let mut best: Option<(Q, Vec<Weight>)> = None;
    for lam in dominant_weights_in_ball(g, cutoff) {
        if !g.in_root_lattice(&(&lam - mu)) {
            continue;
        }
        let e = energy(&lam);
        if let Some((b, _)) = &best {
            if e > *b {
                continue;
            }
        }
        if racah_multiplicity(pair, &gg, &ge, &mut pf, &lam, mu) <= 0 {
            continue;
        }
        match &mut best {
            Some((b, ls)) if *b == e => ls.push(lam),
            _ => best = Some((e, vec![lam])),
        }
    }
    best
}
