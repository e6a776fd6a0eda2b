//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use liekoszul_core::psi::{compute_psi, enumerate_down_set, PosetSlice, PsiSet};
use liekoszul_core::{Family, LieType, RootSystem, Weight};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn rs(f: Family, n: usize) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(LieType::new(f, n).unwrap()))
}

pub fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}

/// `s_i(x) = x - <x, α_i^∨> α_i`, with `α_i` read off row `i` of the Cartan matrix.
pub fn reflect(cartan: &[Vec<i64>], i: usize, x: &[i64]) -> Vec<i64> {
    x.iter().zip(&cartan[i]).map(|(xj, cij)| xj - x[i] * cij).collect()
}

/// Orbit of a point under the Weyl group, with the parity of a word reaching each element.
pub fn orbit_with_parity(cartan: &[Vec<i64>], x: &[i64]) -> Vec<(Vec<i64>, usize)> {
    let mut seen = BTreeMap::new();
    let mut q = VecDeque::new();
    seen.insert(x.to_vec(), 0usize);
    q.push_back(x.to_vec());
    while let Some(y) = q.pop_front() {
        let p = seen[&y];
        for i in 0..cartan.len() {
            let z = reflect(cartan, i, &y);
            if !seen.contains_key(&z) {
                seen.insert(z.clone(), p + 1);
                q.push_back(z);
            }
        }
    }
    seen.into_iter().map(|(k, p)| (k, p % 2)).collect()
}

/// All roots as the Weyl orbits of the simple roots.
pub fn brute_force_roots(rs: &RootSystem) -> BTreeSet<Vec<i64>> {
    let c = rs.cartan();
    let mut out = BTreeSet::new();
    for row in c {
        for (r, _) in orbit_with_parity(c, row) {
            out.insert(r);
        }
    }
    out
}

/// Simple-root coordinates of an integral weight lying in the root lattice,
/// by exact elimination against the transposed Cartan matrix.
pub fn to_simple(rs: &RootSystem, x: &[i64]) -> Option<Vec<i64>> {
    let n = x.len();
    let c = rs.cartan();
    // x_j = Σ_i a_i c[i][j]
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigRational> =
                (0..n).map(|i| BigRational::from_integer(c[i][j].into())).collect();
            row.push(BigRational::from_integer(x[j].into()));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for k in 0..=n {
            m[col][k] = &m[col][k] * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in 0..=n {
                    let t = &f * &m[col][k];
                    m[r][k] -= t;
                }
            }
        }
    }
    m.iter()
        .map(|row| {
            let v = &row[n];
            v.is_integer().then(|| v.to_integer().try_into().unwrap())
        })
        .collect()
}

/// Kostant partition function on positive roots given in simple coordinates.
pub struct Partition {
    roots: Vec<Vec<i64>>,
    memo: HashMap<(usize, Vec<i64>), BigInt>,
}

impl Partition {
    pub fn new(roots: Vec<Vec<i64>>) -> Self {
        Partition {
            roots,
            memo: HashMap::new(),
        }
    }

    pub fn count(&mut self, v: &[i64]) -> BigInt {
        self.go(0, v.to_vec())
    }

    fn go(&mut self, idx: usize, v: Vec<i64>) -> BigInt {
        if v.iter().any(|&c| c < 0) {
            return BigInt::zero();
        }
        if idx == self.roots.len() {
            return if v.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        if let Some(r) = self.memo.get(&(idx, v.clone())) {
            return r.clone();
        }
        let mut total = BigInt::zero();
        let mut cur = v.clone();
        loop {
            total += self.go(idx + 1, cur.clone());
            for (c, r) in cur.iter_mut().zip(&self.roots[idx]) {
                *c -= r;
            }
            if cur.iter().any(|&c| c < 0) {
                break;
            }
        }
        self.memo.insert((idx, v), total.clone());
        total
    }
}

/// Weight multiplicity `m_λ(μ) = Σ_w ε(w) P(w(λ+ρ) - (μ+ρ))`.
pub fn kostant_mult(rs: &RootSystem, part: &mut Partition, lambda: &Weight, mu: &Weight) -> BigInt {
    let lr: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    let mr: Vec<i64> = mu.coords().iter().map(|c| c + 1).collect();
    let mut total = BigInt::zero();
    for (x, parity) in orbit_with_parity(rs.cartan(), &lr) {
        let diff: Vec<i64> = x.iter().zip(&mr).map(|(a, b)| a - b).collect();
        let Some(s) = to_simple(rs, &diff) else { continue };
        let p = part.count(&s);
        if parity == 0 {
            total += p;
        } else {
            total -= p;
        }
    }
    assert!(!total.is_negative());
    total
}

/// `2θ - α_{i₀}` for the first simple root with `(θ, α_{i₀}) > 0`.
pub fn two_theta_minus(rs: &RootSystem) -> Weight {
    let i0 = (1..=rs.rank())
        .find(|&i| rs.inner_product(rs.theta(), rs.simple_root(i)).unwrap().is_positive())
        .unwrap();
    &rs.theta().scaled(2) - rs.simple_root(i0)
}

pub struct SliceCase {
    pub label: String,
    pub psi: PsiSet,
    pub slice: PosetSlice,
}

/// The slices exercised at scale: A1 with `λ = 2ω..12ω`, A2 with `ξ = ρ`,
/// B3 with `ξ = 2θ - α₂`, G2 with `ξ = ρ`.
pub fn scale_cases() -> Vec<(Family, usize, Weight, Weight)> {
    let mut v = Vec::new();
    for k in 2..=12 {
        v.push((Family::A, 1, w(&[1]), w(&[k])));
    }
    for k in 1..=3 {
        v.push((Family::A, 2, w(&[1, 1]), w(&[k, k])));
    }
    for lam in [[1, 0, 2], [2, 1, 4], [3, 0, 6]] {
        v.push((Family::B, 3, w(&[1, 0, 2]), w(&lam)));
    }
    v.push((Family::G, 2, w(&[1, 1]), w(&[2, 2])));
    v
}

pub fn build_case(f: Family, n: usize, xi: &Weight, lambda: &Weight) -> SliceCase {
    let r = rs(f, n);
    let psi = compute_psi(&r, xi).unwrap();
    let slice = enumerate_down_set(&psi, lambda).unwrap();
    SliceCase {
        label: format!("{f}{n} xi={xi} lambda={lambda}"),
        psi,
        slice,
    }
}

pub type MeshVertex = (usize, usize);

/// Dimensions of path spaces modulo the mesh ideal, computed by closing the
/// relators under left and right multiplication by arrows and eliminating.
pub fn mesh_oracle(depth: usize) -> BTreeMap<(MeshVertex, MeshVertex), usize> {
    let inside = |v: MeshVertex| v.0 + v.1 <= depth;
    let mut verts = Vec::new();
    for m in 0..=depth {
        for n in 0..=depth - m {
            verts.push((m, n));
        }
    }
    let mut arrows: Vec<(MeshVertex, MeshVertex)> = Vec::new();
    for &(m, n) in &verts {
        if inside((m, n + 1)) {
            arrows.push(((m, n), (m, n + 1)));
        }
        if n > 0 && inside((m + 1, n - 1)) {
            arrows.push(((m, n), (m + 1, n - 1)));
        }
    }
    // paths by length, as arrow-index words
    type Path = Vec<usize>;
    let mut all: BTreeMap<(MeshVertex, MeshVertex), Vec<Path>> = BTreeMap::new();
    for &v in &verts {
        let mut frontier: Vec<(Path, MeshVertex)> = vec![(vec![], v)];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (p, end) in frontier {
                all.entry((v, end)).or_default().push(p.clone());
                for (k, a) in arrows.iter().enumerate() {
                    if a.0 == end {
                        let mut q = p.clone();
                        q.push(k);
                        next.push((q, a.1));
                    }
                }
            }
            frontier = next;
        }
    }
    let arrow_between = |a: MeshVertex, b: MeshVertex| arrows.iter().position(|x| *x == (a, b));
    // ideal elements: (source, target, combination of paths)
    type Elem = (MeshVertex, MeshVertex, BTreeMap<Path, i64>);
    let mut gens: Vec<Elem> = Vec::new();
    for &(m, n) in &verts {
        if m == 0 {
            continue;
        }
        let t = (m - 1, n);
        let mut middles = vec![(m - 1, n + 1)];
        if n > 0 {
            middles.push((m, n - 1));
        }
        if !middles.iter().all(|&x| inside(x)) {
            continue;
        }
        let mut comb = BTreeMap::new();
        for x in middles {
            let p = vec![arrow_between(t, x).unwrap(), arrow_between(x, (m, n)).unwrap()];
            *comb.entry(p).or_insert(0) += 1;
        }
        gens.push((t, (m, n), comb));
    }
    let mut ideal: BTreeSet<(MeshVertex, MeshVertex, Vec<(Path, i64)>)> = BTreeSet::new();
    let mut queue: VecDeque<Elem> = gens.into_iter().collect();
    while let Some((s, t, comb)) = queue.pop_front() {
        let key = (s, t, comb.iter().map(|(p, c)| (p.clone(), *c)).collect::<Vec<_>>());
        if !ideal.insert(key) {
            continue;
        }
        for (k, a) in arrows.iter().enumerate() {
            if a.1 == s {
                let c = comb
                    .iter()
                    .map(|(p, c)| {
                        let mut q = vec![k];
                        q.extend(p);
                        (q, *c)
                    })
                    .collect();
                queue.push_back((a.0, t, c));
            }
            if a.0 == t {
                let c = comb
                    .iter()
                    .map(|(p, c)| {
                        let mut q = p.clone();
                        q.push(k);
                        (q, *c)
                    })
                    .collect();
                queue.push_back((s, a.1, c));
            }
        }
    }
    let mut out = BTreeMap::new();
    for &u in &verts {
        for &v in &verts {
            let paths = all.get(&(u, v)).cloned().unwrap_or_default();
            let rows: Vec<Vec<BigRational>> = ideal
                .iter()
                .filter(|(s, t, _)| *s == u && *t == v)
                .map(|(_, _, comb)| {
                    paths
                        .iter()
                        .map(|p| {
                            let c = comb.iter().find(|(q, _)| q == p).map(|(_, c)| *c).unwrap_or(0);
                            BigRational::from_integer(c.into())
                        })
                        .collect()
                })
                .collect();
            out.insert((u, v), paths.len() - rank(rows));
        }
    }
    out
}

pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &rows[r][col];
                for k in col..ncols {
                    let t = &f * &rows[r][k];
                    rows[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}
