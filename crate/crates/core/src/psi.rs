//! The root sets `Ψ(ξ)`, the order `≤_Ψ` on dominant weights, the distance
//! `d_Ψ`, and finite slices `≤_Ψ λ` and `[μ, λ]_Ψ` of that poset.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weight::Weight;

/// `Ψ(ξ) = {α ∈ R : (ξ, α) = max ξ}` together with `ξ` and `ρ_ξ = Σ_{β∈Ψ} β`.
#[derive(Clone, Debug)]
pub struct PsiSet {
    rs: Arc<RootSystem>,
    xi: Weight,
    /// `form_scale · max ξ`.
    max_scaled: i64,
    roots: Vec<Weight>,
    roots_simple: Vec<Vec<i64>>,
    rho_xi: Weight,
}

impl PsiSet {
    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn xi(&self) -> &Weight {
        &self.xi
    }

    pub fn max_xi(&self) -> BigRational {
        BigRational::new(self.max_scaled.into(), self.rs.form_scale().into())
    }

    /// Members of `Ψ` in fundamental coordinates, in root-system order.
    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn roots_simple(&self) -> &[Vec<i64>] {
        &self.roots_simple
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn rho_xi(&self) -> &Weight {
        &self.rho_xi
    }

    /// `λ_Ψ`, the same weight as `ρ_ξ`.
    pub fn lambda_psi(&self) -> &Weight {
        &self.rho_xi
    }

    pub fn contains(&self, root: &Weight) -> bool {
        self.roots.contains(root)
    }

    /// Every member of `Ψ` is a positive root.
    pub fn is_positive(&self) -> bool {
        self.roots.iter().all(|r| self.rs.is_positive_root(r))
    }

    fn require_positive(&self) -> Result<()> {
        if self.is_positive() {
            Ok(())
        } else {
            Err(Error::PsiNotPositive(self.xi.clone()))
        }
    }

    /// `(x, ξ)/max ξ`.
    pub fn xi_level(&self, x: &Weight) -> BigRational {
        BigRational::new(
            self.rs.pair_scaled(x.coords(), self.xi.coords()).into(),
            self.max_scaled.into(),
        )
    }

    /// A nonnegative integer vector `n` with `Σ n_β β = target`, the target
    /// given in simple-root coordinates. Depth-first over the members of `Ψ`.
    pub fn represent(&self, target: &[i64]) -> Option<Vec<u64>> {
        if target.iter().any(|&c| c < 0) {
            return None;
        }
        let mut counts = vec![0u64; self.roots.len()];
        let mut rest = target.to_vec();
        if self.represent_from(0, &mut rest, &mut counts) {
            Some(counts)
        } else {
            None
        }
    }

    fn represent_from(&self, idx: usize, rest: &mut [i64], counts: &mut [u64]) -> bool {
        if idx == self.roots_simple.len() {
            return rest.iter().all(|&c| c == 0);
        }
        let beta = &self.roots_simple[idx];
        let max = beta
            .iter()
            .zip(rest.iter())
            .filter(|(b, _)| **b > 0)
            .map(|(b, r)| r / b)
            .min()
            .unwrap_or(0);
        for c in (0..=max).rev() {
            for (r, b) in rest.iter_mut().zip(beta) {
                *r -= c * b;
            }
            counts[idx] = c as u64;
            let found = self.represent_from(idx + 1, rest, counts);
            for (r, b) in rest.iter_mut().zip(beta) {
                *r += c * b;
            }
            if found {
                return true;
            }
        }
        counts[idx] = 0;
        false
    }
}

/// Scans all roots for the maximizers of `(ξ, ·)`.
pub fn compute_psi(rs: &Arc<RootSystem>, xi: &Weight) -> Result<PsiSet> {
    rs.check_weight(xi)?;
    if xi.is_zero() {
        return Err(Error::ZeroXi);
    }
    let pairs: Vec<i64> = rs
        .all_roots()
        .iter()
        .map(|a| rs.pair_scaled(xi.coords(), a.coords()))
        .collect();
    let max_scaled = *pairs.iter().max().expect("nonempty root system");
    if max_scaled <= 0 {
        return Err(Error::Inconsistency(format!("max over R of (xi, -) is {max_scaled} for xi = {xi}")));
    }
    let mut roots = Vec::new();
    let mut roots_simple = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        if *p == max_scaled {
            roots.push(rs.all_roots()[i].clone());
            roots_simple.push(rs.all_roots_simple()[i].clone());
        }
    }
    let rho_xi = roots
        .iter()
        .fold(Weight::zero(rs.rank()), |acc, b| &acc + b);
    let psi = PsiSet {
        rs: rs.clone(),
        xi: xi.clone(),
        max_scaled,
        roots,
        roots_simple,
        rho_xi,
    };
    if let Some((a, b)) = sum_free_violation(&psi) {
        return Err(Error::Inconsistency(format!(
            "{a} + {b} lies in R ∪ {{0}} for Psi({xi})"
        )));
    }
    Ok(psi)
}

/// A pair `β, β' ∈ Ψ` with `β + β' ∈ R ∪ {0}`, if any.
pub fn sum_free_violation(psi: &PsiSet) -> Option<(Weight, Weight)> {
    for (i, a) in psi.roots.iter().enumerate() {
        for b in &psi.roots[i..] {
            let s = a + b;
            if s.is_zero() || psi.rs.is_root(&s) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// `d_Ψ(lower, upper)` when `lower ≤_Ψ upper`, otherwise `None`.
///
/// Membership is decided by an explicit search for nonnegative
/// coefficients; the coefficient sum of the witness must match the closed
/// form `(upper - lower, ξ)/max ξ`.
pub fn leq_psi(psi: &PsiSet, lower: &Weight, upper: &Weight) -> Result<Option<usize>> {
    let rs = &psi.rs;
    rs.check_dominant(lower)?;
    rs.check_dominant(upper)?;
    psi.require_positive()?;
    distance_unchecked(psi, lower, upper)
}

fn distance_unchecked(psi: &PsiSet, lower: &Weight, upper: &Weight) -> Result<Option<usize>> {
    let diff = upper - lower;
    let Some(target) = psi.rs.simple_coords_integral(&diff) else {
        return Ok(None);
    };
    let Some(counts) = psi.represent(&target) else {
        return Ok(None);
    };
    let found: u64 = counts.iter().sum();
    let closed = psi.xi_level(&diff);
    if closed != BigRational::from_integer(BigInt::from(found)) {
        return Err(Error::Inconsistency(format!(
            "d_Psi({lower}, {upper}): witness sum {found} but closed form {closed}"
        )));
    }
    Ok(Some(found as usize))
}

/// A finite set of dominant weights below a top weight `λ`, each paired
/// with `d_Ψ(ν, λ)`.
#[derive(Clone, Debug)]
pub struct PosetSlice {
    psi: PsiSet,
    top: Weight,
    bottom: Option<Weight>,
    /// Sorted by distance, then lexicographically.
    members: Vec<(Weight, usize)>,
}

impl PosetSlice {
    pub fn psi(&self) -> &PsiSet {
        &self.psi
    }

    pub fn top(&self) -> &Weight {
        &self.top
    }

    /// The lower end `μ` for an interval `[μ, λ]_Ψ`.
    pub fn bottom(&self) -> Option<&Weight> {
        self.bottom.as_ref()
    }

    pub fn members(&self) -> &[(Weight, usize)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn distance_to_top(&self, w: &Weight) -> Option<usize> {
        self.members.iter().find(|(m, _)| m == w).map(|(_, d)| *d)
    }

    pub fn depth(&self) -> usize {
        self.members.iter().map(|(_, d)| *d).max().unwrap_or(0)
    }

    /// Matrix index order: distance to the top descending, then
    /// lexicographic. Comparable pairs `μ <_Ψ ν` always have `μ` first.
    pub fn index_order(&self) -> Vec<Weight> {
        let mut v: Vec<(core::cmp::Reverse<usize>, Weight)> = self
            .members
            .iter()
            .map(|(w, d)| (core::cmp::Reverse(*d), w.clone()))
            .collect();
        v.sort();
        v.into_iter().map(|(_, w)| w).collect()
    }

    /// `d_Ψ(lower, upper)` for two members, if comparable.
    pub fn leq(&self, lower: &Weight, upper: &Weight) -> Result<Option<usize>> {
        leq_psi(&self.psi, lower, upper)
    }

    /// Restriction to `[μ, top]_Ψ`.
    pub fn interval_from(&self, mu: &Weight) -> Result<PosetSlice> {
        if leq_psi(&self.psi, mu, &self.top)?.is_none() {
            return Err(Error::Incomparable {
                lower: mu.clone(),
                upper: self.top.clone(),
            });
        }
        let mut members = Vec::new();
        for (w, d) in &self.members {
            if leq_psi(&self.psi, mu, w)?.is_some() {
                members.push((w.clone(), *d));
            }
        }
        Ok(PosetSlice {
            psi: self.psi.clone(),
            top: self.top.clone(),
            bottom: Some(mu.clone()),
            members,
        })
    }
}

/// `≤_Ψ λ = {ν ∈ P⁺ : λ - ν ∈ ℤ₊Ψ}` with distances.
///
/// Walks `λ - Σ n_β β` level by level (`Σ n_β` = level). Intermediate
/// weights need not be dominant, but a dominant `ν` has nonnegative
/// simple-root coordinates and every `β` is positive, so any partial sum
/// with a negative simple coordinate can be dropped.
pub fn enumerate_down_set(psi: &PsiSet, lambda: &Weight) -> Result<PosetSlice> {
    let rs = psi.rs.clone();
    rs.check_dominant(lambda)?;
    psi.require_positive()?;
    let denom = rs.simple_denom();
    let to_scaled_simple = |w: &Weight| -> Vec<i64> {
        let mut v = Vec::with_capacity(rs.rank());
        for r in rs.to_simple_root_coords(w).expect("rank checked") {
            let s = r * BigRational::from_integer(denom.into());
            v.push(i64::try_from(s.to_integer()).expect("small coordinates"));
        }
        v
    };
    let steps: Vec<(Weight, Vec<i64>)> = psi
        .roots
        .iter()
        .zip(&psi.roots_simple)
        .map(|(b, s)| (b.clone(), s.iter().map(|c| c * denom).collect()))
        .collect();

    let mut level_of: BTreeMap<Weight, usize> = BTreeMap::new();
    let mut layer: BTreeMap<Weight, Vec<i64>> = BTreeMap::new();
    layer.insert(lambda.clone(), to_scaled_simple(lambda));
    let lambda_norm = rs.pair_scaled(lambda.coords(), lambda.coords());
    let mut members = Vec::new();
    let mut level = 0usize;
    while !layer.is_empty() {
        let mut next: BTreeMap<Weight, Vec<i64>> = BTreeMap::new();
        for (w, simple) in &layer {
            if let Some(prev) = level_of.insert(w.clone(), level) {
                return Err(Error::Inconsistency(format!(
                    "{w} reached at levels {prev} and {level} below {lambda}"
                )));
            }
            if w.is_dominant() {
                if rs.pair_scaled(w.coords(), w.coords()) > lambda_norm {
                    return Err(Error::Inconsistency(format!(
                        "dominant {w} below {lambda} has larger norm"
                    )));
                }
                members.push((w.clone(), level));
            }
            for (b, bs) in &steps {
                let s: Vec<i64> = simple.iter().zip(bs).map(|(x, y)| x - y).collect();
                if s.iter().all(|&c| c >= 0) {
                    next.insert(w - b, s);
                }
            }
        }
        layer = next;
        level += 1;
    }
    members.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(PosetSlice {
        psi: psi.clone(),
        top: lambda.clone(),
        bottom: None,
        members,
    })
}

/// `[μ, λ]_Ψ`; fails with [`Error::Incomparable`] unless `μ ≤_Ψ λ`.
pub fn enumerate_interval(psi: &PsiSet, mu: &Weight, lambda: &Weight) -> Result<PosetSlice> {
    psi.rs.check_dominant(mu)?;
    enumerate_down_set(psi, lambda)?.interval_from(mu)
}

/// One evaluated instance of the support inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportInstance {
    /// `(index into all_roots, m_α)`.
    pub coefficients: Vec<(usize, u64)>,
    pub psi_coefficients: Vec<u64>,
    pub sum_all: u64,
    pub sum_psi: u64,
    pub supported_on_psi: bool,
}

impl SupportInstance {
    /// `Σ n_β ≤ Σ m_α`, with equality exactly when `m` lives on `Ψ`.
    pub fn holds(&self) -> bool {
        self.sum_psi <= self.sum_all && ((self.sum_psi == self.sum_all) == self.supported_on_psi)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SupportReport {
    pub trials: usize,
    pub landed: usize,
    pub equality_cases: usize,
    pub counterexamples: Vec<SupportInstance>,
}

/// Evaluates `Σ m_α α` for coefficients indexed into `all_roots`. Returns
/// `None` when the sum is not in `ℤ₊Ψ`.
pub fn support_instance(psi: &PsiSet, coefficients: &[(usize, u64)]) -> Option<SupportInstance> {
    let rs = &psi.rs;
    let mut v = vec![0i64; rs.rank()];
    for &(i, m) in coefficients {
        for (x, c) in v.iter_mut().zip(&rs.all_roots_simple()[i]) {
            *x += m as i64 * c;
        }
    }
    let n = psi.represent(&v)?;
    let sum_all = coefficients.iter().map(|(_, m)| m).sum();
    let supported_on_psi = coefficients
        .iter()
        .all(|&(i, m)| m == 0 || psi.contains(&rs.all_roots()[i]));
    Some(SupportInstance {
        coefficients: coefficients.to_vec(),
        sum_psi: n.iter().sum(),
        psi_coefficients: n,
        sum_all,
        supported_on_psi,
    })
}

/// Seeded random check of the support inequality. Half the samples start
/// from a combination of `Ψ` and add a few arbitrary roots, half are
/// arbitrary combinations of roots; only samples landing in `ℤ₊Ψ` count.
pub fn check_support_lemma(psi: &PsiSet, trials: usize, seed: u64) -> Result<SupportReport> {
    psi.require_positive()?;
    let rs = &psi.rs;
    let psi_idx: Vec<usize> = rs
        .all_roots()
        .iter()
        .enumerate()
        .filter(|(_, r)| psi.contains(r))
        .map(|(i, _)| i)
        .collect();
    let nroots = rs.all_roots().len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SupportReport {
        trials,
        ..SupportReport::default()
    };
    for _ in 0..trials {
        let mut coeffs: BTreeMap<usize, u64> = BTreeMap::new();
        if rng.gen_bool(0.5) {
            for &i in &psi_idx {
                let c = rng.gen_range(0..=2u64);
                if c > 0 {
                    *coeffs.entry(i).or_default() += c;
                }
            }
            for _ in 0..rng.gen_range(0..=2) {
                *coeffs.entry(rng.gen_range(0..nroots)).or_default() += rng.gen_range(1..=2);
            }
        } else {
            for _ in 0..rng.gen_range(1..=4) {
                *coeffs.entry(rng.gen_range(0..nroots)).or_default() += rng.gen_range(1..=3);
            }
        }
        let coeffs: Vec<(usize, u64)> = coeffs.into_iter().collect();
        if let Some(inst) = support_instance(psi, &coeffs) {
            report.landed += 1;
            if inst.sum_psi == inst.sum_all {
                report.equality_cases += 1;
            }
            if !inst.holds() {
                report.counterexamples.push(inst);
            }
        }
    }
    Ok(report)
}

/// Root sets compared as sets.
pub fn same_roots(a: &PsiSet, b: &PsiSet) -> bool {
    let x: BTreeSet<&Weight> = a.roots.iter().collect();
    let y: BTreeSet<&Weight> = b.roots.iter().collect();
    x == y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, LieType};

    fn rs(f: Family, n: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(LieType::new(f, n).unwrap()))
    }

    fn w(v: &[i64]) -> Weight {
        Weight::from(v)
    }

    fn slice_map(s: &PosetSlice) -> Vec<(Weight, usize)> {
        let mut v = s.members().to_vec();
        v.sort();
        v
    }

    #[test]
    fn a1_psi() {
        let a1 = rs(Family::A, 1);
        let psi = compute_psi(&a1, &w(&[1])).unwrap();
        assert_eq!(psi.roots(), &[w(&[2])]);
        assert_eq!(psi.max_xi(), BigRational::from_integer(1.into()));
        assert!(psi.is_positive());
        let neg = compute_psi(&a1, &w(&[-1])).unwrap();
        assert_eq!(neg.roots(), &[w(&[-2])]);
        assert!(!neg.is_positive());
        assert!(matches!(compute_psi(&a1, &w(&[0])), Err(Error::ZeroXi)));
        let theta = compute_psi(&a1, a1.theta()).unwrap();
        assert_eq!(theta.roots(), &[w(&[2])]);
    }

    #[test]
    fn b3_two_element_psi() {
        let b3 = rs(Family::B, 3);
        let theta = b3.theta().clone();
        let alpha2 = b3.simple_root(2).clone();
        let xi = &theta.scaled(2) - &alpha2;
        let psi = compute_psi(&b3, &xi).unwrap();
        let expected: BTreeSet<Weight> = [theta.clone(), &theta - &alpha2].into_iter().collect();
        assert_eq!(psi.roots().iter().cloned().collect::<BTreeSet<_>>(), expected);
        assert!(psi.is_positive());
        let again = compute_psi(&b3, psi.rho_xi()).unwrap();
        assert!(same_roots(&psi, &again));
    }

    #[test]
    fn a1_order() {
        let a1 = rs(Family::A, 1);
        let psi = compute_psi(&a1, &w(&[1])).unwrap();
        assert_eq!(leq_psi(&psi, &w(&[3]), &w(&[3])).unwrap(), Some(0));
        assert_eq!(leq_psi(&psi, &w(&[0]), &w(&[2])).unwrap(), Some(1));
        assert_eq!(leq_psi(&psi, &w(&[1]), &w(&[2])).unwrap(), None);
        assert_eq!(leq_psi(&psi, &w(&[4]), &w(&[2])).unwrap(), None);
        assert!(leq_psi(&psi, &w(&[-2]), &w(&[2])).is_err());
        let neg = compute_psi(&a1, &w(&[-1])).unwrap();
        assert!(matches!(
            leq_psi(&neg, &w(&[0]), &w(&[2])),
            Err(Error::PsiNotPositive(_))
        ));
    }

    #[test]
    fn a1_slices() {
        let a1 = rs(Family::A, 1);
        let psi = compute_psi(&a1, &w(&[1])).unwrap();
        let s = enumerate_down_set(&psi, &w(&[0])).unwrap();
        assert_eq!(s.members(), &[(w(&[0]), 0)]);
        let s = enumerate_down_set(&psi, &w(&[4])).unwrap();
        assert_eq!(s.members(), &[(w(&[4]), 0), (w(&[2]), 1), (w(&[0]), 2)]);
        assert_eq!(s.index_order(), vec![w(&[0]), w(&[2]), w(&[4])]);
        let s = enumerate_down_set(&psi, &w(&[3])).unwrap();
        assert_eq!(s.members(), &[(w(&[3]), 0), (w(&[1]), 1)]);

        let i = enumerate_interval(&psi, &w(&[4]), &w(&[4])).unwrap();
        assert_eq!(i.members(), &[(w(&[4]), 0)]);
        let i = enumerate_interval(&psi, &w(&[0]), &w(&[4])).unwrap();
        assert_eq!(slice_map(&i).len(), 3);
        let i = enumerate_interval(&psi, &w(&[2]), &w(&[4])).unwrap();
        assert_eq!(i.members(), &[(w(&[4]), 0), (w(&[2]), 1)]);
        assert!(matches!(
            enumerate_interval(&psi, &w(&[1]), &w(&[4])),
            Err(Error::Incomparable { .. })
        ));
    }

    #[test]
    fn support_instances() {
        let a1 = rs(Family::A, 1);
        let psi = compute_psi(&a1, &w(&[1])).unwrap();
        // all_roots = [-α, α]
        let inst = support_instance(&psi, &[(1, 1)]).unwrap();
        assert_eq!(inst.psi_coefficients, vec![1]);
        assert_eq!(inst.sum_all, inst.sum_psi);
        assert!(inst.supported_on_psi && inst.holds());
        let inst = support_instance(&psi, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((inst.sum_psi, inst.sum_all), (1, 3));
        assert!(inst.holds());
        assert!(support_instance(&psi, &[(0, 1)]).is_none());
    }
}
