//! Root data for the simple Lie types `A`–`G`.
//!
//! Conventions: `cartan[i][j] = 2(α_i, α_j)/(α_j, α_j)`, so row `i` of the
//! Cartan matrix is the simple root `α_i` written in fundamental-weight
//! coordinates. Simple roots are numbered as in Bourbaki. The form is
//! normalized so that long roots have squared length 2; `Ψ(ξ)`, `≤_Ψ` and
//! `d_Ψ` do not change under positive rescaling of the form.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::weight::Weight;

pub const DEFAULT_RANK_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::Invalid(format!("unknown Lie family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated simple Lie type such as `B3` or `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Self::with_rank_limit(family, rank, DEFAULT_RANK_LIMIT)
    }

    /// Like [`LieType::new`], with an explicit ceiling on the rank of the
    /// classical families.
    pub fn with_rank_limit(family: Family, rank: usize, limit: usize) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidType {
            family: family.letter(),
            rank,
            reason: reason.to_string(),
        };
        match family {
            Family::A if rank < 1 => return Err(bad("type A requires rank >= 1")),
            Family::B if rank < 2 => return Err(bad("type B requires rank >= 2")),
            Family::C if rank < 2 => return Err(bad("type C requires rank >= 2")),
            Family::D if rank < 3 => return Err(bad("type D requires rank >= 3")),
            Family::E if !(6..=8).contains(&rank) => {
                return Err(bad("type E requires rank 6, 7 or 8"))
            }
            Family::F if rank != 4 => return Err(bad("type F requires rank 4")),
            Family::G if rank != 2 => return Err(bad("type G requires rank 2")),
            _ => {}
        }
        if matches!(family, Family::A | Family::B | Family::C | Family::D) && rank > limit {
            return Err(bad(&format!("rank exceeds the configured limit {limit}")));
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The Cartan matrix with `cartan[i][j] = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => c[n - 2][n - 1] = -2,
            Family::C => c[n - 1][n - 2] = -2,
            Family::F => c[1][2] = -2,
            Family::G => c[1][0] = -3,
            _ => {}
        }
        c
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Immutable root data for one simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    /// `(α_i, α_i)/2`, long roots giving 1.
    half_lengths: Vec<BigRational>,
    positive_roots: Vec<Weight>,
    positive_simple: Vec<Vec<i64>>,
    all_roots: Vec<Weight>,
    all_simple: Vec<Vec<i64>>,
    root_lookup: BTreeMap<Weight, usize>,
    sym_form: Vec<Vec<BigRational>>,
    /// `form_scale · (ω_i, ω_j)`, integral.
    gram: Vec<Vec<i64>>,
    form_scale: i64,
    /// `simple_denom · (C^T)^{-1}`, integral.
    simple_from_fund: Vec<Vec<i64>>,
    simple_denom: i64,
    /// `gram · α` for each positive root, so `(x, α)` is one dot product.
    positive_pairing: Vec<Vec<i64>>,
    rho: Weight,
    theta: Weight,
    dim_g: usize,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let n = lie_type.rank();
        let cartan = lie_type.cartan_matrix();
        let simple_roots: Vec<Weight> = cartan.iter().map(|r| Weight::new(r.clone())).collect();
        let half_lengths = half_lengths(&cartan);

        // (ω_i, α_j) = δ_ij (α_j, α_j)/2, hence C·G = D.
        let c_rat = linalg::from_int(&cartan);
        let c_inv = linalg::inverse(&c_rat).expect("Cartan matrix is invertible");
        let d: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { half_lengths[i].clone() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        let sym_form = linalg::mul(&c_inv, &d);
        let scale = linalg::common_denominator(&sym_form);
        let gram = linalg::scale_to_i64(&sym_form, &scale);
        let form_scale = scale.to_i64().expect("small form scale");

        let ct_inv = linalg::transpose(&c_inv);
        let sdenom = linalg::common_denominator(&ct_inv);
        let simple_from_fund = linalg::scale_to_i64(&ct_inv, &sdenom);
        let simple_denom = sdenom.to_i64().expect("small denominator");

        let positive_simple = generate_positive_roots(&cartan);
        let to_fund = |c: &[i64]| -> Weight {
            Weight::new(
                (0..n)
                    .map(|j| (0..n).map(|k| c[k] * cartan[k][j]).sum())
                    .collect(),
            )
        };
        let positive_roots: Vec<Weight> = positive_simple.iter().map(|c| to_fund(c)).collect();

        let mut all: Vec<(Vec<i64>, Weight)> = positive_simple
            .iter()
            .zip(&positive_roots)
            .flat_map(|(c, w)| {
                let neg: Vec<i64> = c.iter().map(|x| -x).collect();
                [(c.clone(), w.clone()), (neg, -w)]
            })
            .collect();
        all.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| a.0.cmp(&b.0))
        });
        let all_simple: Vec<Vec<i64>> = all.iter().map(|(c, _)| c.clone()).collect();
        let all_roots: Vec<Weight> = all.into_iter().map(|(_, w)| w).collect();
        let root_lookup = all_roots
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();

        let positive_pairing = positive_roots
            .iter()
            .map(|a| {
                (0..n)
                    .map(|i| (0..n).map(|j| gram[i][j] * a.coords()[j]).sum())
                    .collect()
            })
            .collect();

        let theta = positive_roots.last().cloned().expect("at least one root");
        let dim_g = all_roots.len() + n;
        RootSystem {
            lie_type,
            cartan,
            simple_roots,
            half_lengths,
            positive_roots,
            positive_simple,
            all_roots,
            all_simple,
            root_lookup,
            sym_form,
            gram,
            form_scale,
            simple_from_fund,
            simple_denom,
            positive_pairing,
            rho: Weight::new(vec![1; n]),
            theta,
            dim_g,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Simple roots in fundamental coordinates (rows of the Cartan matrix).
    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i - 1]
    }

    /// Positive roots sorted by height, then lexicographically on their
    /// simple-root coordinates.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn positive_roots_simple(&self) -> &[Vec<i64>] {
        &self.positive_simple
    }

    /// All roots, same ordering as [`RootSystem::positive_roots`] with
    /// negative heights first.
    pub fn all_roots(&self) -> &[Weight] {
        &self.all_roots
    }

    pub fn all_roots_simple(&self) -> &[Vec<i64>] {
        &self.all_simple
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.root_lookup.contains_key(w)
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.root_lookup
            .get(w)
            .is_some_and(|&i| self.all_simple[i].iter().sum::<i64>() > 0)
    }

    /// `(ω_i, ω_j)`.
    pub fn sym_form(&self) -> &[Vec<BigRational>] {
        &self.sym_form
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The highest root.
    pub fn theta(&self) -> &Weight {
        &self.theta
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    /// `(α_i, α_i)/2` for the simple roots.
    pub fn half_lengths(&self) -> &[BigRational] {
        &self.half_lengths
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
        Ok(())
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.rank() == self.rank() && w.is_dominant()
    }

    /// The exact value of `(x, y)`.
    pub fn inner_product(&self, x: &Weight, y: &Weight) -> Result<BigRational> {
        self.check_weight(x)?;
        self.check_weight(y)?;
        Ok(BigRational::new(
            BigInt::from(self.pair_scaled(x.coords(), y.coords())),
            BigInt::from(self.form_scale),
        ))
    }

    /// `form_scale · (x, y)` as an integer.
    pub(crate) fn pair_scaled(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            let mut row = 0;
            for j in 0..n {
                row += self.gram[i][j] * y[j];
            }
            s += x[i] * row;
        }
        s
    }

    pub(crate) fn form_scale(&self) -> i64 {
        self.form_scale
    }

    /// `form_scale · (x, α)` for the `k`-th positive root.
    pub(crate) fn pair_positive_scaled(&self, x: &[i64], k: usize) -> i64 {
        x.iter()
            .zip(&self.positive_pairing[k])
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Coordinates `c` with `Σ c_i α_i = w`.
    pub fn to_simple_root_coords(&self, w: &Weight) -> Result<Vec<BigRational>> {
        self.check_weight(w)?;
        Ok(self
            .simple_scaled(w.coords())
            .into_iter()
            .map(|c| BigRational::new(c.into(), self.simple_denom.into()))
            .collect())
    }

    /// Integral simple-root coordinates, or `None` if `w` is outside the
    /// root lattice.
    pub fn simple_coords_integral(&self, w: &Weight) -> Option<Vec<i64>> {
        let d = self.simple_denom;
        self.simple_scaled(w.coords())
            .into_iter()
            .map(|c| if c % d == 0 { Some(c / d) } else { None })
            .collect()
    }

    fn simple_scaled(&self, w: &[i64]) -> Vec<i64> {
        self.simple_from_fund
            .iter()
            .map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `simple_denom · height(w)`.
    pub(crate) fn height_scaled(&self, w: &[i64]) -> i64 {
        self.simple_scaled(w).into_iter().sum()
    }

    pub(crate) fn simple_denom(&self) -> i64 {
        self.simple_denom
    }

    /// Height of `w`, i.e. the sum of its simple-root coordinates.
    pub fn height(&self, w: &Weight) -> Result<BigRational> {
        self.check_weight(w)?;
        Ok(BigRational::new(
            self.height_scaled(w.coords()).into(),
            self.simple_denom.into(),
        ))
    }

    /// From simple-root coordinates to fundamental coordinates.
    pub fn from_simple_coords(&self, c: &[i64]) -> Weight {
        let n = self.rank();
        Weight::new(
            (0..n)
                .map(|j| (0..n).map(|k| c[k] * self.cartan[k][j]).sum())
                .collect(),
        )
    }

    /// The simple reflection `s_i` (1-based), in place.
    pub(crate) fn reflect_in_place(&self, i: usize, w: &mut [i64]) {
        let c = w[i];
        if c != 0 {
            for (x, a) in w.iter_mut().zip(&self.cartan[i]) {
                *x -= c * a;
            }
        }
    }

    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let mut v = w.clone();
        self.reflect_in_place(i - 1, v.coords_mut());
        v
    }

    /// Moves `w` into the dominant chamber by simple reflections, returning
    /// the result and the number of reflections used (its parity is the
    /// sign of the Weyl group element when `w` is regular).
    pub fn to_dominant(&self, w: &Weight) -> (Weight, usize) {
        let mut v = w.clone();
        let steps = self.dominate_in_place(v.coords_mut());
        (v, steps)
    }

    pub(crate) fn dominate_in_place(&self, w: &mut [i64]) -> usize {
        let mut steps = 0;
        while let Some(i) = w.iter().position(|&c| c < 0) {
            self.reflect_in_place(i, w);
            steps += 1;
        }
        steps
    }

    /// The Weyl orbit of a dominant weight, sorted.
    pub fn orbit(&self, dominant: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(dominant.clone());
        queue.push_back(dominant.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                if w.coords()[i] > 0 {
                    let mut v = w.clone();
                    self.reflect_in_place(i, v.coords_mut());
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Size of the Weyl orbit of a dominant weight.
    pub fn orbit_size(&self, dominant: &Weight) -> usize {
        self.orbit(dominant).len()
    }

    /// The dual weight `-w₀λ`: the dominant representative of `-λ`.
    pub fn dual_weight(&self, w: &Weight) -> Weight {
        self.to_dominant(&-w).0
    }
}

/// `(α_i, α_i)/2` normalized so the longest simple root gives 1.
fn half_lengths(cartan: &[Vec<i64>]) -> Vec<BigRational> {
    let n = cartan.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    d[0] = Some(BigRational::one());
    let mut stack = vec![0usize];
    // Symmetrizability: cartan[i][j]·d_j = cartan[j][i]·d_i.
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * BigRational::new(cartan[j][i].into(), cartan[i][j].into()));
                stack.push(j);
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let max = d.iter().max().cloned().unwrap();
    d.into_iter().map(|x| x / &max).collect()
}

/// Positive roots in simple-root coordinates, by height then lexicographic.
///
/// Closure from the simple roots: for a root `β` and simple `α_i`, the
/// `α_i`-string through `β` runs from `β - pα_i` to `β + qα_i` with
/// `p - q = ⟨β, α_i^∨⟩`, and `β + α_i` is a root exactly when `q > 0`.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut known: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut roots = layer.clone();
    while !layer.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|k| beta[k] * cartan[k][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !known.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        for r in &next {
            known.insert(r.clone());
        }
        layer = next.into_iter().collect();
        roots.extend(layer.iter().cloned());
    }
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    roots
}
