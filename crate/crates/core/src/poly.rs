//! Integer polynomials in `t` and square matrices of them.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::weight::Weight;

/// `Σ coeffs[i] t^i`, with no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `Some((c, d))` when the polynomial is exactly `c·t^d` with `c ≠ 0`.
    pub fn as_monomial(&self) -> Option<(&BigInt, usize)> {
        let d = self.degree()?;
        if self.coeffs[..d].iter().all(Zero::is_zero) {
            Some((&self.coeffs[d], d))
        } else {
            None
        }
    }

    /// `p(-t)`.
    pub fn at_neg_t(&self) -> Self {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Square matrix of polynomials indexed by an ordered list of weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    index: Vec<Weight>,
    entries: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn zeros(index: Vec<Weight>) -> Self {
        let n = index.len();
        PolyMatrix {
            index,
            entries: alloc::vec![alloc::vec![Poly::zero(); n]; n],
        }
    }

    pub fn identity(index: Vec<Weight>) -> Self {
        let mut m = Self::zeros(index);
        for i in 0..m.len() {
            m.entries[i][i] = Poly::one();
        }
        m
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn index(&self) -> &[Weight] {
        &self.index
    }

    pub fn position(&self, w: &Weight) -> Option<usize> {
        self.index.iter().position(|x| x == w)
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    /// Entry at `(row weight, column weight)`.
    pub fn entry(&self, row: &Weight, col: &Weight) -> Option<&Poly> {
        Some(&self.entries[self.position(row)?][self.position(col)?])
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i][j] = p;
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.entries
    }

    fn same_index(&self, other: &PolyMatrix) {
        assert_eq!(self.index, other.index, "matrices over different index sets");
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        self.same_index(other);
        let n = self.len();
        let mut out = Self::zeros(self.index.clone());
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] = out.entries[i][j].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        self.same_index(other);
        PolyMatrix {
            index: self.index.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a.sub(b)).collect())
                .collect(),
        }
    }

    /// Substitutes `t ↦ -t` in every entry.
    pub fn at_neg_t(&self) -> PolyMatrix {
        PolyMatrix {
            index: self.index.clone(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(Poly::at_neg_t).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let n = self.len();
        PolyMatrix {
            index: self.index.clone(),
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Poly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, p)| if i == j { p.is_one() } else { p.is_zero() })
        })
    }

    /// Ones on the diagonal and zeros below it.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, p)| match i.cmp(&j) {
                    core::cmp::Ordering::Equal => p.is_one(),
                    core::cmp::Ordering::Greater => p.is_zero(),
                    core::cmp::Ordering::Less => true,
                })
        })
    }

    /// Restriction to the given weights, in the order given; `None` if some
    /// weight is not in the index.
    pub fn principal_submatrix(&self, weights: &[Weight]) -> Option<PolyMatrix> {
        let pos: Option<Vec<usize>> = weights.iter().map(|w| self.position(w)).collect();
        let pos = pos?;
        Some(PolyMatrix {
            index: weights.to_vec(),
            entries: pos
                .iter()
                .map(|&i| pos.iter().map(|&j| self.entries[i][j].clone()).collect())
                .collect(),
        })
    }

    /// Largest exponent carrying a nonzero coefficient off the diagonal,
    /// with its position.
    pub fn max_off_diagonal_degree(&self) -> Option<(usize, usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, r) in self.entries.iter().enumerate() {
            for (j, p) in r.iter().enumerate() {
                if i == j {
                    continue;
                }
                if let Some(d) = p.degree() {
                    if best.is_none_or(|(b, _, _)| d > b) {
                        best = Some((d, i, j));
                    }
                }
            }
        }
        best
    }
}
