//! Characters of finite-dimensional `g`-modules.
//!
//! A character is stored on its dominant weights only; the full weight
//! diagram is recovered by Weyl-orbit expansion when an algorithm needs it.
//! Multiplicities are `BigInt` throughout.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{LieType, RootSystem};
use crate::weight::Weight;

pub const DEFAULT_MAX_SYM_DEGREE: usize = 16;
/// Bumped whenever the on-disk layout of cached power characters changes.
pub const POWER_FORMAT_VERSION: u32 = 1;

/// A signed combination of irreducible-free weight data: a finite map from
/// dominant weights to nonzero integers. Used for intermediate values of
/// the power recursions and for identities such as
/// `Σ (-1)^i Λ^i · S^{k-i} = 0`.
#[derive(Clone, Debug)]
pub struct VirtualCharacter {
    rs: Arc<RootSystem>,
    mults: BTreeMap<Weight, BigInt>,
}

impl PartialEq for VirtualCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.rs.lie_type() == other.rs.lie_type() && self.mults == other.mults
    }
}

impl Eq for VirtualCharacter {}

impl VirtualCharacter {
    pub fn zero(rs: &Arc<RootSystem>) -> Self {
        VirtualCharacter {
            rs: rs.clone(),
            mults: BTreeMap::new(),
        }
    }

    /// Builds from a map keyed by dominant weights; zero entries are dropped.
    pub fn from_map(rs: &Arc<RootSystem>, mults: BTreeMap<Weight, BigInt>) -> Result<Self> {
        for w in mults.keys() {
            rs.check_dominant(w)?;
        }
        let mults = mults.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        Ok(VirtualCharacter {
            rs: rs.clone(),
            mults,
        })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn dominant_mults(&self) -> &BTreeMap<Weight, BigInt> {
        &self.mults
    }

    /// Multiplicity of an arbitrary weight (looked up through its dominant
    /// representative).
    pub fn mult(&self, w: &Weight) -> BigInt {
        if w.is_dominant() {
            return self.mults.get(w).cloned().unwrap_or_default();
        }
        let (d, _) = self.rs.to_dominant(w);
        self.mults.get(&d).cloned().unwrap_or_default()
    }

    /// Full weight diagram, sorted by weight.
    pub fn expand(&self) -> Vec<(Weight, BigInt)> {
        let mut out = Vec::new();
        for (d, m) in &self.mults {
            for w in self.rs.orbit(d) {
                out.push((w, m.clone()));
            }
        }
        out.sort();
        out
    }

    pub fn total_dim(&self) -> BigInt {
        self.mults
            .iter()
            .map(|(d, m)| m * BigInt::from(self.rs.orbit_size(d)))
            .sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut mults = self.mults.clone();
        for (w, m) in &other.mults {
            *mults.entry(w.clone()).or_default() += m;
        }
        mults.retain(|_, m| !m.is_zero());
        VirtualCharacter {
            rs: self.rs.clone(),
            mults,
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.rs);
        }
        VirtualCharacter {
            rs: self.rs.clone(),
            mults: self.mults.iter().map(|(w, m)| (w.clone(), m * k)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    /// The Adams operation `ψ^m`, scaling every weight by `m`.
    pub fn adams(&self, m: i64) -> Self {
        assert!(m >= 1, "Adams operations are indexed by m >= 1");
        VirtualCharacter {
            rs: self.rs.clone(),
            mults: self.mults.iter().map(|(w, c)| (w.scaled(m), c.clone())).collect(),
        }
    }

    /// Character of the tensor product.
    pub fn product(&self, other: &Self) -> Self {
        let a = self.expand();
        let b = other.expand();
        let (small, large) = if a.len() <= b.len() { (&a, &b) } else { (&b, &a) };
        let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for (x, mx) in small {
            let xc = x.coords();
            for (y, my) in large {
                if xc.iter().zip(y.coords()).all(|(p, q)| p + q >= 0) {
                    *acc.entry(x + y).or_default() += mx * my;
                }
            }
        }
        acc.retain(|_, m| !m.is_zero());
        VirtualCharacter {
            rs: self.rs.clone(),
            mults: acc,
        }
    }

    fn divide_exact(&self, k: i64) -> Result<Self> {
        let k = BigInt::from(k);
        let mut mults = BTreeMap::new();
        for (w, m) in &self.mults {
            let (q, r) = m.div_rem(&k);
            if !r.is_zero() {
                return Err(Error::Inconsistency(format!(
                    "multiplicity {m} at {w} is not divisible by {k}"
                )));
            }
            mults.insert(w.clone(), q);
        }
        Ok(VirtualCharacter {
            rs: self.rs.clone(),
            mults,
        })
    }

    /// Succeeds when every multiplicity is positive.
    pub fn into_character(self) -> Result<Character> {
        if let Some((w, m)) = self.mults.iter().find(|(_, m)| m.is_negative()) {
            return Err(Error::Inconsistency(format!(
                "negative multiplicity {m} at {w}"
            )));
        }
        Ok(Character { inner: self })
    }
}

/// Character of an actual module: all stored multiplicities are positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    inner: VirtualCharacter,
}

impl Character {
    pub fn trivial(rs: &Arc<RootSystem>) -> Self {
        let mut mults = BTreeMap::new();
        mults.insert(Weight::zero(rs.rank()), BigInt::one());
        Character {
            inner: VirtualCharacter {
                rs: rs.clone(),
                mults,
            },
        }
    }

    pub fn zero(rs: &Arc<RootSystem>) -> Self {
        Character {
            inner: VirtualCharacter::zero(rs),
        }
    }

    /// Character of the adjoint representation.
    pub fn adjoint(rs: &Arc<RootSystem>) -> Self {
        let mut mults = BTreeMap::new();
        mults.insert(Weight::zero(rs.rank()), BigInt::from(rs.rank()));
        for a in rs.positive_roots() {
            if a.is_dominant() {
                mults.insert(a.clone(), BigInt::one());
            }
        }
        Character {
            inner: VirtualCharacter {
                rs: rs.clone(),
                mults,
            },
        }
    }

    pub fn from_map(rs: &Arc<RootSystem>, mults: BTreeMap<Weight, BigInt>) -> Result<Self> {
        VirtualCharacter::from_map(rs, mults)?.into_character()
    }

    pub fn as_virtual(&self) -> &VirtualCharacter {
        &self.inner
    }

    pub fn into_virtual(self) -> VirtualCharacter {
        self.inner
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.inner.rs
    }

    pub fn dominant_mults(&self) -> &BTreeMap<Weight, BigInt> {
        &self.inner.mults
    }

    pub fn mult(&self, w: &Weight) -> BigInt {
        self.inner.mult(w)
    }

    pub fn expand(&self) -> Vec<(Weight, BigInt)> {
        self.inner.expand()
    }

    pub fn total_dim(&self) -> BigInt {
        self.inner.total_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn product(&self, other: &Character) -> Character {
        Character {
            inner: self.inner.product(&other.inner),
        }
    }
}

/// Multiplicities of irreducible summands, keyed by highest weight.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompositionList {
    entries: BTreeMap<Weight, BigInt>,
}

impl DecompositionList {
    pub fn multiplicity(&self, highest: &Weight) -> BigInt {
        self.entries.get(highest).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<Weight, BigInt> {
        &self.entries
    }

    /// `Σ mult(λ) · dim V(λ)`.
    pub fn total_dim(&self, rs: &RootSystem) -> BigInt {
        self.entries
            .iter()
            .map(|(w, m)| m * weyl_dim_unchecked(rs, w))
            .sum()
    }

    fn from_signed(acc: BTreeMap<Weight, BigInt>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (w, m) in acc {
            if m.is_negative() {
                return Err(Error::Inconsistency(format!(
                    "negative multiplicity {m} for V{w} in a decomposition"
                )));
            }
            if !m.is_zero() {
                entries.insert(w, m);
            }
        }
        Ok(DecompositionList { entries })
    }
}

/// Weight multiplicities of `V(λ)` by Freudenthal's recursion on the
/// dominant weights below `λ`.
pub fn irrep_character(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<Character> {
    rs.check_dominant(lambda)?;
    let n = rs.rank();
    let dominant = dominant_weights_below(rs, lambda);
    let lr: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    let top_norm = rs.pair_scaled(&lr, &lr);

    let mut mults: BTreeMap<Weight, BigInt> = BTreeMap::new();
    mults.insert(lambda.clone(), BigInt::one());
    let mut x = alloc::vec![0i64; n];
    for mu in dominant.iter().skip(1) {
        let mut acc = BigInt::zero();
        for (k, alpha) in rs.positive_roots().iter().enumerate() {
            x.copy_from_slice(mu.coords());
            loop {
                for (xi, ai) in x.iter_mut().zip(alpha.coords()) {
                    *xi += ai;
                }
                let mut d = x.clone();
                rs.dominate_in_place(&mut d);
                let Some(m) = mults.get(&Weight::new(d)) else {
                    break;
                };
                acc += m * BigInt::from(rs.pair_positive_scaled(&x, k));
            }
        }
        acc *= 2;
        let mr: Vec<i64> = mu.coords().iter().map(|c| c + 1).collect();
        let denom = BigInt::from(top_norm - rs.pair_scaled(&mr, &mr));
        let (m, r) = acc.div_rem(&denom);
        if !r.is_zero() || !m.is_positive() {
            return Err(Error::Inconsistency(format!(
                "Freudenthal recursion gave {acc}/{denom} at {mu} for V{lambda}"
            )));
        }
        mults.insert(mu.clone(), m);
    }
    Character::from_map(rs, mults)
}

/// Dominant weights `μ ≤ λ`, ordered by the height of `λ - μ` and then
/// lexicographically; `λ` comes first.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(w) = queue.pop_front() {
        for a in rs.positive_roots() {
            let v = &w - a;
            if v.is_dominant() && !seen.contains(&v) {
                seen.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    let top = rs.height_scaled(lambda.coords());
    let mut out: Vec<(i64, Weight)> = seen
        .into_iter()
        .map(|w| (top - rs.height_scaled(w.coords()), w))
        .collect();
    out.sort();
    out.into_iter().map(|(_, w)| w).collect()
}

/// Weyl's dimension formula `Π_{α>0} (λ+ρ, α)/(ρ, α)`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    rs.check_dominant(lambda)?;
    Ok(weyl_dim_unchecked(rs, lambda))
}

fn weyl_dim_unchecked(rs: &RootSystem, lambda: &Weight) -> BigInt {
    let shifted: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    let rho = rs.rho().coords();
    let mut q = BigRational::one();
    for k in 0..rs.positive_roots().len() {
        q *= BigRational::new(
            rs.pair_positive_scaled(&shifted, k).into(),
            rs.pair_positive_scaled(rho, k).into(),
        );
    }
    debug_assert!(q.is_integer());
    q.to_integer()
}

/// Racah–Speiser: decomposition of `M ⊗ V(μ)` from the full weight diagram
/// of `M`. A weight `κ` contributes `±mult(κ)` to `V(ν)` when `κ + μ + ρ`
/// reflects to `ν + ρ`, and nothing when it lies on a wall.
pub fn decompose_tensor_with(
    rs: &RootSystem,
    weights: &[(Weight, BigInt)],
    mu: &Weight,
) -> Result<DecompositionList> {
    rs.check_dominant(mu)?;
    let shift: Vec<i64> = mu.coords().iter().map(|c| c + 1).collect();
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    let mut v = alloc::vec![0i64; rs.rank()];
    for (kappa, m) in weights {
        for ((vi, ki), si) in v.iter_mut().zip(kappa.coords()).zip(&shift) {
            *vi = ki + si;
        }
        let steps = rs.dominate_in_place(&mut v);
        if v.contains(&0) {
            continue;
        }
        let nu = Weight::new(v.iter().map(|c| c - 1).collect());
        let slot = acc.entry(nu).or_default();
        if steps % 2 == 0 {
            *slot += m;
        } else {
            *slot -= m;
        }
    }
    DecompositionList::from_signed(acc)
}

/// Decomposition of `V(λ) ⊗ V(μ)`.
pub fn tensor_decompose(
    rs: &Arc<RootSystem>,
    lambda: &Weight,
    mu: &Weight,
) -> Result<DecompositionList> {
    rs.check_dominant(mu)?;
    let ch = irrep_character(rs, lambda)?;
    decompose_tensor_with(rs, &ch.expand(), mu)
}

/// Full decomposition of a character by repeatedly peeling off the
/// irreducible whose highest weight is a maximal remaining weight.
pub fn decompose_character(ch: &Character) -> Result<DecompositionList> {
    let rs = ch.root_system().clone();
    let mut rest = ch.as_virtual().clone();
    let mut entries = BTreeMap::new();
    while !rest.is_zero() {
        let top = rest
            .dominant_mults()
            .keys()
            .max_by_key(|w| (rs.height_scaled(w.coords()), (*w).clone()))
            .cloned()
            .unwrap();
        let m = rest.dominant_mults()[&top].clone();
        if m.is_negative() {
            return Err(Error::Inconsistency(format!(
                "character is not a module: V{top} would appear {m} times"
            )));
        }
        let irr = irrep_character(&rs, &top)?;
        rest = rest.sub(&irr.as_virtual().scale(&m));
        entries.insert(top, m);
    }
    Ok(DecompositionList { entries })
}

/// Multiplicity of `V(ν)` in `M` by the alternating sum
/// `Σ_w (-1)^{ℓ(w)} m_M(w(ν+ρ) - ρ)`.
///
/// The orbit of `ν + ρ` is walked downward from the dominant point; a
/// branch stops once the height drops below every weight of `M`.
pub fn mult_in(rs: &RootSystem, nu: &Weight, m: &Character) -> Result<BigInt> {
    rs.check_dominant(nu)?;
    if m.is_zero() {
        return Ok(BigInt::zero());
    }
    let floor = -m
        .dominant_mults()
        .keys()
        .map(|w| rs.height_scaled(w.coords()))
        .max()
        .unwrap();
    let top: Vec<i64> = nu.coords().iter().map(|c| c + 1).collect();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<(Vec<i64>, usize)> = VecDeque::new();
    seen.insert(top.clone());
    queue.push_back((top, 0));
    let rho_height = rs.height_scaled(rs.rho().coords());
    let mut acc = BigInt::zero();
    while let Some((p, len)) = queue.pop_front() {
        if rs.height_scaled(&p) - rho_height < floor {
            continue;
        }
        let x = Weight::new(p.iter().map(|c| c - 1).collect());
        let mx = m.mult(&x);
        if len % 2 == 0 {
            acc += mx;
        } else {
            acc -= mx;
        }
        for i in 0..rs.rank() {
            if p[i] > 0 {
                let mut q = p.clone();
                rs.reflect_in_place(i, &mut q);
                if seen.insert(q.clone()) {
                    queue.push_back((q, len + 1));
                }
            }
        }
    }
    if acc.is_negative() {
        return Err(Error::Inconsistency(format!(
            "alternating sum for V{nu} is negative ({acc})"
        )));
    }
    Ok(acc)
}

/// `dim Hom_g(V(ν), A ⊗ V(μ))` by Racah–Speiser over the weights of `A`.
pub fn hom_dim_tensor(
    rs: &RootSystem,
    nu: &Weight,
    a: &Character,
    mu: &Weight,
) -> Result<BigInt> {
    rs.check_dominant(nu)?;
    Ok(decompose_tensor_with(rs, &a.expand(), mu)?.multiplicity(nu))
}

/// Same quantity as [`hom_dim_tensor`], via the character of `A ⊗ V(μ)`
/// and the alternating sum.
pub fn hom_dim_tensor_by_product(
    rs: &Arc<RootSystem>,
    nu: &Weight,
    a: &Character,
    mu: &Weight,
) -> Result<BigInt> {
    rs.check_dominant(nu)?;
    let v = irrep_character(rs, mu)?;
    mult_in(rs, nu, &a.product(&v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PowerKind {
    Sym,
    Ext,
}

impl PowerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PowerKind::Sym => "sym",
            PowerKind::Ext => "ext",
        }
    }
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Identifies one cached power character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PowerKey {
    pub lie_type: LieType,
    pub kind: PowerKind,
    pub degree: usize,
}

/// Persistent backing for [`PowerTable`]. Entries are the dominant
/// multiplicities of the character. Implementations may lose or corrupt
/// entries; whatever `load` returns is re-validated before use.
pub trait PowerStore {
    fn load(&self, key: &PowerKey) -> Option<Vec<(Weight, BigInt)>>;
    fn save(&self, key: &PowerKey, mults: &[(Weight, BigInt)]);
}

/// Memoized `S^k(g)` and `Λ^j(g)` for one root system, plus cached
/// decompositions of `A_k ⊗ V(μ)`.
pub struct PowerTable {
    rs: Arc<RootSystem>,
    sym: Vec<Character>,
    ext: Vec<Character>,
    sym_full: Vec<Vec<(Weight, BigInt)>>,
    ext_full: Vec<Vec<(Weight, BigInt)>>,
    max_sym_degree: usize,
    max_ext_degree: usize,
    store: Option<Box<dyn PowerStore>>,
    decompositions: BTreeMap<(PowerKind, usize, Weight), DecompositionList>,
}

impl fmt::Debug for PowerTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PowerTable")
            .field("lie_type", &self.rs.lie_type())
            .field("sym_computed", &self.sym.len())
            .field("ext_computed", &self.ext.len())
            .finish()
    }
}

impl PowerTable {
    pub fn new(rs: &Arc<RootSystem>) -> Self {
        PowerTable {
            rs: rs.clone(),
            sym: alloc::vec![Character::trivial(rs)],
            ext: alloc::vec![Character::trivial(rs)],
            sym_full: alloc::vec![Character::trivial(rs).expand()],
            ext_full: alloc::vec![Character::trivial(rs).expand()],
            max_sym_degree: DEFAULT_MAX_SYM_DEGREE,
            max_ext_degree: rs.dim_g(),
            store: None,
            decompositions: BTreeMap::new(),
        }
    }

    pub fn with_store(mut self, store: Box<dyn PowerStore>) -> Self {
        self.store = Some(store);
        self
    }

    pub fn with_max_sym_degree(mut self, k: usize) -> Self {
        self.max_sym_degree = k;
        self
    }

    /// Ceiling for `Λ^j`; degrees above `dim g` always give the zero
    /// character and are never refused.
    pub fn with_max_ext_degree(mut self, j: usize) -> Self {
        self.max_ext_degree = j;
        self
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn max_degree(&self, kind: PowerKind) -> usize {
        match kind {
            PowerKind::Sym => self.max_sym_degree,
            PowerKind::Ext => self.max_ext_degree,
        }
    }

    pub fn sym(&mut self, k: usize) -> Result<&Character> {
        self.power(PowerKind::Sym, k)
    }

    pub fn ext(&mut self, j: usize) -> Result<&Character> {
        self.power(PowerKind::Ext, j)
    }

    pub fn power(&mut self, kind: PowerKind, k: usize) -> Result<&Character> {
        self.ensure(kind, k)?;
        Ok(match kind {
            PowerKind::Sym => &self.sym[k],
            PowerKind::Ext => &self.ext[k],
        })
    }

    fn full(&mut self, kind: PowerKind, k: usize) -> Result<&[(Weight, BigInt)]> {
        self.ensure(kind, k)?;
        Ok(match kind {
            PowerKind::Sym => &self.sym_full[k],
            PowerKind::Ext => &self.ext_full[k],
        })
    }

    fn ensure(&mut self, kind: PowerKind, k: usize) -> Result<()> {
        let dim_g = self.rs.dim_g();
        let limit = self.max_degree(kind);
        if k > limit && !(kind == PowerKind::Ext && k > dim_g) {
            return Err(Error::DegreeCeiling {
                kind,
                degree: k,
                limit,
            });
        }
        loop {
            let have = match kind {
                PowerKind::Sym => self.sym.len(),
                PowerKind::Ext => self.ext.len(),
            };
            if have > k {
                return Ok(());
            }
            let next = if kind == PowerKind::Ext && have > dim_g {
                Character::zero(&self.rs)
            } else {
                self.load_or_compute(kind, have)?
            };
            let full = next.expand();
            match kind {
                PowerKind::Sym => {
                    self.sym.push(next);
                    self.sym_full.push(full);
                }
                PowerKind::Ext => {
                    self.ext.push(next);
                    self.ext_full.push(full);
                }
            }
        }
    }

    fn expected_dim(&self, kind: PowerKind, k: usize) -> BigInt {
        let n = self.rs.dim_g();
        match kind {
            PowerKind::Sym => binomial(n + k - 1, k),
            PowerKind::Ext => binomial(n, k),
        }
    }

    fn load_or_compute(&mut self, kind: PowerKind, k: usize) -> Result<Character> {
        let key = PowerKey {
            lie_type: self.rs.lie_type(),
            kind,
            degree: k,
        };
        if let Some(store) = &self.store {
            if let Some(entries) = store.load(&key) {
                let map: BTreeMap<Weight, BigInt> = entries.into_iter().collect();
                if let Ok(ch) = Character::from_map(&self.rs, map) {
                    if ch.total_dim() == self.expected_dim(kind, k) {
                        return Ok(ch);
                    }
                }
            }
        }
        let ch = self.newton_step(kind, k)?;
        if ch.total_dim() != self.expected_dim(kind, k) {
            return Err(Error::Inconsistency(format!(
                "{kind}^{k} has dimension {} instead of {}",
                ch.total_dim(),
                self.expected_dim(kind, k)
            )));
        }
        if let Some(store) = &self.store {
            let entries: Vec<(Weight, BigInt)> = ch
                .dominant_mults()
                .iter()
                .map(|(w, m)| (w.clone(), m.clone()))
                .collect();
            store.save(&key, &entries);
        }
        Ok(ch)
    }

    /// `k·S^k = Σ_{m=1..k} ψ^m(g)·S^{k-m}` and
    /// `j·Λ^j = Σ_{m=1..j} (-1)^{m-1} ψ^m(g)·Λ^{j-m}`.
    fn newton_step(&self, kind: PowerKind, k: usize) -> Result<Character> {
        let rank = BigInt::from(self.rs.rank());
        let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for m in 1..=k {
            let (lower, lower_full) = match kind {
                PowerKind::Sym => (&self.sym[k - m], &self.sym_full[k - m]),
                PowerKind::Ext => (&self.ext[k - m], &self.ext_full[k - m]),
            };
            let negate = kind == PowerKind::Ext && m % 2 == 0;
            let mut add = |w: Weight, v: BigInt| {
                let slot = acc.entry(w).or_default();
                if negate {
                    *slot -= v;
                } else {
                    *slot += v;
                }
            };
            // zero weight of ψ^m(g), multiplicity rank
            for (w, c) in lower.dominant_mults() {
                add(w.clone(), c * &rank);
            }
            let step = m as i64;
            for (x, c) in lower_full {
                for a in self.rs.all_roots() {
                    if x.coords().iter().zip(a.coords()).all(|(p, q)| p + step * q >= 0) {
                        add(x + &a.scaled(step), c.clone());
                    }
                }
            }
        }
        let v = VirtualCharacter::from_map(&self.rs, acc)?;
        v.divide_exact(k as i64)?.into_character()
    }

    /// Decomposition of `A_k ⊗ V(μ)` where `A_k` is `S^k(g)` or `Λ^k(g)`.
    pub fn decompose_with(
        &mut self,
        kind: PowerKind,
        k: usize,
        mu: &Weight,
    ) -> Result<&DecompositionList> {
        self.rs.check_dominant(mu)?;
        let key = (kind, k, mu.clone());
        if !self.decompositions.contains_key(&key) {
            let rs = self.rs.clone();
            let d = decompose_tensor_with(&rs, self.full(kind, k)?, mu)?;
            self.decompositions.insert(key.clone(), d);
        }
        Ok(&self.decompositions[&key])
    }

    /// `dim Hom_g(V(ν), A_k ⊗ V(μ))`.
    pub fn hom_dim(
        &mut self,
        nu: &Weight,
        kind: PowerKind,
        k: usize,
        mu: &Weight,
    ) -> Result<BigInt> {
        self.rs.check_dominant(nu)?;
        Ok(self.decompose_with(kind, k, mu)?.multiplicity(nu))
    }
}

/// Character of `S^k(g)`.
pub fn adjoint_sym_power(rs: &Arc<RootSystem>, k: usize) -> Result<Character> {
    let mut t = PowerTable::new(rs).with_max_sym_degree(k.max(DEFAULT_MAX_SYM_DEGREE));
    t.sym(k).cloned()
}

/// Character of `Λ^j(g)`; zero for `j > dim g`.
pub fn adjoint_ext_power(rs: &Arc<RootSystem>, j: usize) -> Result<Character> {
    let mut t = PowerTable::new(rs);
    t.ext(j).cloned()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}
