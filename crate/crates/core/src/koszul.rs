//! Hilbert matrices of the invariant algebras over a finite slice `F`, and
//! the checks built on them.
//!
//! For `μ ≤_Ψ ν` in `F` with `d = d_Ψ(μ, ν)`:
//!
//! * symmetric algebra: `dim Hom_g(V(μ), S^d g ⊗ V(ν))`,
//! * exterior algebra: `dim (Λ^d g ⊗ V(μ)* ⊗ V(ν))^g`, evaluated as the
//!   multiplicity of `V(ν*)` in `Λ^d g ⊗ V(μ*)`,
//! * Ext/Yoneda matrix: `dim Hom_g(Λ^d g ⊗ V(ν), V(μ))`, the multiplicity
//!   of `V(μ)` in `Λ^d g ⊗ V(ν)`,
//!
//! each placed at `(μ, ν)` as a monomial in `t^d`. Incomparable pairs are 0.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::charlib::{PowerKind, PowerTable};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyMatrix};
use crate::psi::{PosetSlice, PsiSet};
use crate::weight::Weight;

fn check_table(slice: &PosetSlice, table: &PowerTable) -> Result<()> {
    let a = slice.psi().root_system().lie_type();
    let b = table.root_system().lie_type();
    if a != b {
        return Err(Error::Invalid(format!(
            "power table is for {b} but the slice lives in {a}"
        )));
    }
    Ok(())
}

fn assemble<F>(slice: &PosetSlice, table: &mut PowerTable, mut entry: F) -> Result<PolyMatrix>
where
    F: FnMut(&mut PowerTable, &Weight, &Weight, usize) -> Result<BigInt>,
{
    check_table(slice, table)?;
    let index = slice.index_order();
    let mut m = PolyMatrix::identity(index.clone());
    for (i, mu) in index.iter().enumerate() {
        for (j, nu) in index.iter().enumerate().skip(i + 1) {
            if let Some(d) = slice.leq(mu, nu)? {
                let c = entry(table, mu, nu, d)?;
                m.set(i, j, Poly::monomial(c, d));
            }
        }
    }
    Ok(m)
}

/// `H(S_Ψ^g(F), t)`.
pub fn hilbert_matrix_sym(slice: &PosetSlice, table: &mut PowerTable) -> Result<PolyMatrix> {
    assemble(slice, table, |t, mu, nu, d| t.hom_dim(mu, PowerKind::Sym, d, nu))
}

/// `H(E_Ψ^g(F), t)`.
pub fn hilbert_matrix_ext(slice: &PosetSlice, table: &mut PowerTable) -> Result<PolyMatrix> {
    let rs = slice.psi().root_system().clone();
    assemble(slice, table, |t, mu, nu, d| {
        let mu_dual = rs.dual_weight(mu);
        let nu_dual = rs.dual_weight(nu);
        t.hom_dim(&nu_dual, PowerKind::Ext, d, &mu_dual)
    })
}

/// Hilbert matrix of the Yoneda algebra: `Ext^d(S_ν, S_μ)` at `(μ, ν)`.
pub fn ext_matrix(slice: &PosetSlice, table: &mut PowerTable) -> Result<PolyMatrix> {
    assemble(slice, table, |t, mu, nu, d| t.hom_dim(mu, PowerKind::Ext, d, nu))
}

/// Outcome of the numerical Koszul criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulCheck {
    /// `ext(-t) · H_S(t) = 1`.
    pub ok: bool,
    /// `H_S(t) · ext(-t) = 1`.
    pub right_inverse_ok: bool,
    /// `ext(-t) · H_S(t) - 1`.
    pub residual: PolyMatrix,
}

/// Exact check that `ext(-t)` inverts `H_S(t)` on both sides.
pub fn koszul_criterion(hilbert_s: &PolyMatrix, ext: &PolyMatrix) -> KoszulCheck {
    let e = ext.at_neg_t();
    let id = PolyMatrix::identity(hilbert_s.index().to_vec());
    let residual = e.mul(hilbert_s).sub(&id);
    let right = hilbert_s.mul(&e).sub(&id);
    KoszulCheck {
        ok: residual.is_zero(),
        right_inverse_ok: right.is_zero(),
        residual,
    }
}

pub fn koszulity_check(slice: &PosetSlice, table: &mut PowerTable) -> Result<KoszulCheck> {
    let h = hilbert_matrix_sym(slice, table)?;
    let e = ext_matrix(slice, table)?;
    Ok(koszul_criterion(&h, &e))
}

/// The Yoneda matrix agrees entrywise with the Hilbert matrix of the
/// exterior invariant algebra read on the opposite side.
pub fn duality_check(slice: &PosetSlice, table: &mut PowerTable) -> Result<bool> {
    let e = ext_matrix(slice, table)?;
    let h = hilbert_matrix_ext(slice, table)?;
    Ok(e == h)
}

/// Global dimension read off an Ext matrix, with a maximizing pair
/// `(row, column)`. Degrees above `bound` are reported as an inconsistency.
pub fn global_dimension_of(
    ext: &PolyMatrix,
    bound: usize,
) -> Result<(usize, Option<(Weight, Weight)>)> {
    let Some((d, i, j)) = ext.max_off_diagonal_degree() else {
        return Ok((0, None));
    };
    if d > bound {
        return Err(Error::Inconsistency(format!(
            "Ext in degree {d} between {} and {} exceeds |Psi| = {bound}",
            ext.index()[i],
            ext.index()[j]
        )));
    }
    Ok((d, Some((ext.index()[i].clone(), ext.index()[j].clone()))))
}

pub fn global_dimension(
    slice: &PosetSlice,
    table: &mut PowerTable,
) -> Result<(usize, Option<(Weight, Weight)>)> {
    let e = ext_matrix(slice, table)?;
    global_dimension_of(&e, slice.psi().len())
}

/// Dominant weights `Σ k_i ω_i` with `Σ k_i = level`, lexicographically
/// descending.
pub fn dominant_weights_of_level(rank: usize, level: usize) -> Vec<Weight> {
    fn go(rank: usize, left: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if prefix.len() + 1 == rank {
            prefix.push(left);
            out.push(Weight::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for k in (0..=left).rev() {
            prefix.push(k);
            go(rank, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rank, level as i64, &mut Vec::new(), &mut out);
    out
}

/// First dominant `μ` (by level, then lexicographically descending) with
/// `μ + λ_Ψ` dominant and `dim Hom_g(V(μ + λ_Ψ), Λ^{|Ψ|} g ⊗ V(μ)) = 1`.
/// Every tested dimension must be at most 1.
pub fn find_attaining_weight(
    psi: &PsiSet,
    search_bound: usize,
    table: &mut PowerTable,
) -> Result<Option<Weight>> {
    if !psi.is_positive() {
        return Err(Error::PsiNotPositive(psi.xi().clone()));
    }
    let rs = psi.root_system();
    let lambda_psi = psi.lambda_psi();
    for level in 0..=search_bound {
        for mu in dominant_weights_of_level(rs.rank(), level) {
            let top = &mu + lambda_psi;
            if !top.is_dominant() {
                continue;
            }
            let dim = table.hom_dim(&top, PowerKind::Ext, psi.len(), &mu)?;
            if dim > BigInt::one() {
                return Err(Error::Inconsistency(format!(
                    "Hom(V{top}, Lambda^{} g ⊗ V{mu}) has dimension {dim} > 1",
                    psi.len()
                )));
            }
            if dim.is_one() {
                return Ok(Some(mu));
            }
        }
    }
    Ok(None)
}

/// Everything the `koszul-check` command reports for one slice.
#[derive(Clone, Debug)]
pub struct KoszulReport {
    pub xi: Weight,
    pub psi: Vec<Weight>,
    pub top: Weight,
    pub bottom: Option<Weight>,
    pub slice_size: usize,
    pub hilbert_s: PolyMatrix,
    pub hilbert_e: PolyMatrix,
    pub ext_matrix: PolyMatrix,
    pub koszul_ok: bool,
    pub right_inverse_ok: bool,
    pub residual: PolyMatrix,
    pub duality_ok: bool,
    pub gldim: usize,
    pub gldim_bound: usize,
    pub gldim_witness: Option<(Weight, Weight)>,
    pub attainment_witness: Option<Weight>,
}

impl KoszulReport {
    pub fn all_ok(&self) -> bool {
        self.koszul_ok && self.right_inverse_ok && self.duality_ok && self.gldim <= self.gldim_bound
    }
}

/// Runs every check on a slice. With `attain_bound` set, also searches for
/// a weight realizing Ext in degree `|Ψ|`.
pub fn koszul_report(
    slice: &PosetSlice,
    table: &mut PowerTable,
    attain_bound: Option<usize>,
) -> Result<KoszulReport> {
    let hilbert_s = hilbert_matrix_sym(slice, table)?;
    let hilbert_e = hilbert_matrix_ext(slice, table)?;
    let ext = ext_matrix(slice, table)?;
    let check = koszul_criterion(&hilbert_s, &ext);
    let duality_ok = ext == hilbert_e;
    let psi = slice.psi();
    let (gldim, gldim_witness) = global_dimension_of(&ext, psi.len())?;
    let attainment_witness = match attain_bound {
        Some(b) => find_attaining_weight(psi, b, table)?,
        None => None,
    };
    Ok(KoszulReport {
        xi: psi.xi().clone(),
        psi: psi.roots().to_vec(),
        top: slice.top().clone(),
        bottom: slice.bottom().cloned(),
        slice_size: slice.len(),
        hilbert_s,
        hilbert_e,
        ext_matrix: ext,
        koszul_ok: check.ok,
        right_inverse_ok: check.right_inverse_ok,
        residual: check.residual,
        duality_ok,
        gldim,
        gldim_bound: psi.len(),
        gldim_witness,
        attainment_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi::{compute_psi, enumerate_down_set};
    use crate::rootsys::{Family, LieType, RootSystem};
    use alloc::sync::Arc;
    use alloc::vec;

    fn w(v: &[i64]) -> Weight {
        Weight::from(v)
    }

    fn mono(c: i64, d: usize) -> Poly {
        Poly::monomial(BigInt::from(c), d)
    }

    fn a1() -> (Arc<RootSystem>, PsiSet) {
        let rs = Arc::new(RootSystem::new(LieType::new(Family::A, 1).unwrap()));
        let psi = compute_psi(&rs, &w(&[1])).unwrap();
        (rs, psi)
    }

    #[test]
    fn single_vertex_slice() {
        let (rs, psi) = a1();
        let s = enumerate_down_set(&psi, &w(&[0])).unwrap();
        let mut t = PowerTable::new(&rs);
        assert!(hilbert_matrix_sym(&s, &mut t).unwrap().is_identity());
        assert!(hilbert_matrix_ext(&s, &mut t).unwrap().is_identity());
        let k = koszulity_check(&s, &mut t).unwrap();
        assert!(k.ok && k.residual.is_zero());
        assert!(duality_check(&s, &mut t).unwrap());
        assert_eq!(global_dimension(&s, &mut t).unwrap(), (0, None));
    }

    #[test]
    fn a1_two_by_two() {
        let (rs, psi) = a1();
        let s = enumerate_down_set(&psi, &w(&[2])).unwrap();
        let mut t = PowerTable::new(&rs);
        let h = hilbert_matrix_sym(&s, &mut t).unwrap();
        assert_eq!(h.index(), &[w(&[0]), w(&[2])]);
        assert_eq!(h.get(0, 1), &mono(1, 1));
        let e = ext_matrix(&s, &mut t).unwrap();
        assert_eq!(e.get(0, 1), &mono(1, 1));
        assert_eq!(hilbert_matrix_ext(&s, &mut t).unwrap().get(0, 1), &mono(1, 1));
    }

    #[test]
    fn a1_three_by_three() {
        let (rs, psi) = a1();
        let s = enumerate_down_set(&psi, &w(&[4])).unwrap();
        let mut t = PowerTable::new(&rs);
        let h = hilbert_matrix_sym(&s, &mut t).unwrap();
        assert_eq!(h.entry(&w(&[0]), &w(&[4])).unwrap(), &mono(1, 2));
        assert_eq!(h.entry(&w(&[2]), &w(&[4])).unwrap(), &mono(1, 1));
        let he = hilbert_matrix_ext(&s, &mut t).unwrap();
        assert!(he.entry(&w(&[0]), &w(&[4])).unwrap().is_zero());
        let e = ext_matrix(&s, &mut t).unwrap();
        assert!(e.entry(&w(&[0]), &w(&[4])).unwrap().is_zero());
        let k = koszul_criterion(&h, &e);
        assert!(k.ok && k.right_inverse_ok);
        assert!(duality_check(&s, &mut t).unwrap());
        let (g, witness) = global_dimension(&s, &mut t).unwrap();
        assert_eq!(g, 1);
        let (a, b) = witness.unwrap();
        assert!(
            (a == w(&[0]) && b == w(&[2])) || (a == w(&[2]) && b == w(&[4])),
            "witness {a} {b}"
        );
    }

    #[test]
    fn a1_attaining_weight() {
        let (rs, psi) = a1();
        let mut t = PowerTable::new(&rs);
        assert_eq!(find_attaining_weight(&psi, 3, &mut t).unwrap(), Some(w(&[0])));
    }

    #[test]
    fn weights_of_level() {
        assert_eq!(
            dominant_weights_of_level(2, 2),
            vec![w(&[2, 0]), w(&[1, 1]), w(&[0, 2])]
        );
        assert_eq!(dominant_weights_of_level(3, 0), vec![w(&[0, 0, 0])]);
    }

    #[test]
    fn gldim_bound_violation_is_inconsistency() {
        let idx = vec![w(&[0]), w(&[2])];
        let mut e = PolyMatrix::identity(idx);
        e.set(0, 1, mono(1, 3));
        assert!(matches!(global_dimension_of(&e, 1), Err(Error::Inconsistency(_))));
    }
}
