//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use liekoszul_core::charlib::{
    adjoint_ext_power, adjoint_sym_power, binomial, dominant_weights_below, irrep_character,
};
use liekoszul_core::koszul::{dominant_weights_of_level, find_attaining_weight, koszul_report};
use liekoszul_core::meshquiver::{build_mesh_quiver, hom_dimensions};
use liekoszul_core::psi::{
    check_support_lemma, compute_psi, enumerate_interval, leq_psi, same_roots,
    sum_free_violation,
};
use liekoszul_core::{Family, Poly, PowerTable, VirtualCharacter};
use num_bigint::BigInt;
use num_rational::BigRational;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn t(d: usize) -> Poly {
    Poly::monomial(BigInt::from(1), d)
}

fn criterion_1() -> Outcome {
    let case = build_case(Family::A, 1, &w(&[1]), &w(&[4]));
    let mut table = PowerTable::new(case.psi.root_system());
    let rep = koszul_report(&case.slice, &mut table, None).map_err(|e| e.to_string())?;
    ensure(rep.hilbert_s.index() == [w(&[0]), w(&[2]), w(&[4])], "index order")?;
    let hs = [[t(0), t(1), t(2)], [Poly::zero(), t(0), t(1)], [Poly::zero(), Poly::zero(), t(0)]];
    for i in 0..3 {
        for j in 0..3 {
            ensure(rep.hilbert_s.get(i, j) == &hs[i][j], format!("H_S[{i}][{j}]"))?;
            let e = if (i, j) == (0, 2) { Poly::zero() } else { hs[i][j].clone() };
            ensure(rep.ext_matrix.get(i, j) == &e, format!("ext[{i}][{j}]"))?;
        }
    }
    ensure(rep.koszul_ok && rep.right_inverse_ok, "Koszul identity")?;
    ensure(rep.gldim == 1 && case.psi.len() == 1, "gldim")?;
    Ok("H_S(0,4w)=t^2, ext(0,4w)=0, koszul ok, gldim=1".into())
}

fn criterion_2() -> Outcome {
    let r = rs(Family::B, 3);
    let xi = two_theta_minus(&r);
    ensure(xi == w(&[1, 0, 2]), format!("2theta-alpha2 = {xi}"))?;
    let psi = compute_psi(&r, &xi).map_err(|e| e.to_string())?;
    let theta = r.theta().clone();
    let other = &theta - r.simple_root(2);
    let mut got = psi.roots().to_vec();
    got.sort();
    let mut want = vec![theta, other];
    want.sort();
    ensure(got == want, format!("Psi = {got:?}"))?;
    Ok(format!("Psi(2theta-alpha2) = {{{}, {}}}", want[0], want[1]))
}

struct ScaleRun {
    label: String,
    elapsed: Duration,
    koszul: bool,
    duality: bool,
    gldim: usize,
    bound: usize,
    depth: usize,
}

fn scale_runs() -> Result<Vec<ScaleRun>, String> {
    let mut out = Vec::new();
    for (f, n, xi, lambda) in scale_cases() {
        let start = Instant::now();
        let case = build_case(f, n, &xi, &lambda);
        let mut table = PowerTable::new(case.psi.root_system());
        let rep = koszul_report(&case.slice, &mut table, None).map_err(|e| format!("{}: {e}", case.label))?;
        out.push(ScaleRun {
            label: case.label,
            elapsed: start.elapsed(),
            koszul: rep.koszul_ok && rep.right_inverse_ok,
            duality: rep.duality_ok,
            gldim: rep.gldim,
            bound: rep.gldim_bound,
            depth: case.slice.depth(),
        });
    }
    Ok(out)
}

fn criterion_3(runs: &[ScaleRun]) -> Outcome {
    for r in runs {
        ensure(r.koszul, format!("{}: identity fails", r.label))?;
        ensure(r.elapsed < Duration::from_secs(60), format!("{}: {:?}", r.label, r.elapsed))?;
    }
    let b3_deep = runs.iter().filter(|r| r.label.starts_with("B3") && r.depth >= 3).count();
    ensure(b3_deep >= 1, "no B3 slice of depth >= 3")?;
    let slowest = runs.iter().map(|r| r.elapsed).max().unwrap_or_default();
    Ok(format!("{} slices, slowest {slowest:?}", runs.len()))
}

fn criterion_4(runs: &[ScaleRun]) -> Outcome {
    for r in runs {
        ensure(r.gldim <= r.bound, format!("{}: gldim {} > {}", r.label, r.gldim, r.bound))?;
    }
    let mut found = Vec::new();
    for (f, n, xi) in [(Family::A, 1, w(&[1])), (Family::A, 2, w(&[1, 1])), (Family::B, 3, w(&[1, 0, 2]))] {
        let r = rs(f, n);
        let psi = compute_psi(&r, &xi).map_err(|e| e.to_string())?;
        let mut table = PowerTable::new(&r);
        let mu = find_attaining_weight(&psi, 6, &mut table)
            .map_err(|e| e.to_string())?
            .ok_or(format!("{f}{n}: no attaining weight within 6"))?;
        let top = &mu + psi.lambda_psi();
        let iv = enumerate_interval(&psi, &mu, &top).map_err(|e| e.to_string())?;
        let rep = koszul_report(&iv, &mut table, None).map_err(|e| e.to_string())?;
        ensure(
            rep.ext_matrix.entry(&mu, &top) == Some(&t(psi.len())),
            format!("{f}{n}: ext({mu}, {top}) != t^{}", psi.len()),
        )?;
        found.push(format!("{f}{n} mu={mu}"));
    }
    Ok(format!("gldim <= |Psi| everywhere; attained at {}", found.join(", ")))
}

fn criterion_5(runs: &[ScaleRun]) -> Outcome {
    for r in runs {
        ensure(r.duality, format!("{}: ext != H_E", r.label))?;
    }
    Ok(format!("{} slices", runs.len()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut checks = 0usize;
    for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::B, 2), (Family::G, 2)] {
        let r = rs(f, n);
        let dim = r.dim_g();
        for k in 1..=6 {
            let mut acc = VirtualCharacter::zero(&r);
            for i in 0..=k {
                let ext = adjoint_ext_power(&r, i).map_err(|e| e.to_string())?;
                let sym = adjoint_sym_power(&r, k - i).map_err(|e| e.to_string())?;
                let term = ext.as_virtual().product(sym.as_virtual());
                acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            ensure(acc.is_zero(), format!("{f}{n}: Newton identity at k={k}"))?;
            let s = adjoint_sym_power(&r, k).map_err(|e| e.to_string())?;
            let e = adjoint_ext_power(&r, k).map_err(|e| e.to_string())?;
            ensure(s.total_dim() == binomial(dim + k - 1, k), format!("{f}{n}: dim S^{k}"))?;
            ensure(e.total_dim() == binomial(dim, k), format!("{f}{n}: dim Lambda^{k}"))?;
            checks += 3;
        }
    }
    for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::B, 2)] {
        let r = rs(f, n);
        let mut part = Partition::new(r.positive_roots_simple().to_vec());
        for level in 0..=8 {
            for lambda in dominant_weights_of_level(n, level) {
                let ch = irrep_character(&r, &lambda).map_err(|e| e.to_string())?;
                for mu in dominant_weights_below(&r, &lambda) {
                    ensure(
                        ch.mult(&mu) == kostant_mult(&r, &mut part, &lambda, &mu),
                        format!("{f}{n}: m_{lambda}({mu})"),
                    )?;
                    checks += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), format!("took {elapsed:?}"))?;
    Ok(format!("{checks} checks in {elapsed:?}"))
}

fn criterion_7() -> Outcome {
    let mut triples = 0usize;
    for (f, n, xi, lambda) in scale_cases() {
        let case = build_case(f, n, &xi, &lambda);
        let (psi, slice) = (&case.psi, &case.slice);
        let err = |e: liekoszul_core::Error| e.to_string();
        ensure(sum_free_violation(psi).is_none(), format!("{}: not sum-free", case.label))?;
        let again = compute_psi(psi.root_system(), psi.rho_xi()).map_err(err)?;
        ensure(same_roots(psi, &again), format!("{}: Psi(rho_xi) != Psi(xi)", case.label))?;
        for (mu, d) in slice.members() {
            let diff = slice.top() - mu;
            let closed = psi.root_system().inner_product(&diff, psi.xi()).map_err(err)? / psi.max_xi();
            ensure(closed == BigRational::from_integer((*d).into()), format!("{}: closed form at {mu}", case.label))?;
        }
        let m = slice.members();
        for (a, _) in m {
            for (b, _) in m {
                let Some(ab) = leq_psi(psi, a, b).map_err(err)? else { continue };
                for (c, _) in m {
                    if let Some(bc) = leq_psi(psi, b, c).map_err(err)? {
                        ensure(
                            leq_psi(psi, a, c).map_err(err)? == Some(ab + bc),
                            format!("{}: additivity {a} {b} {c}", case.label),
                        )?;
                        triples += 1;
                    }
                }
            }
        }
        let rep = check_support_lemma(psi, 1000, 7).map_err(err)?;
        ensure(rep.counterexamples.is_empty(), format!("{}: support counterexample", case.label))?;
    }
    Ok(format!("{triples} chains, support lemma clean (1000 trials, seed 7)"))
}

fn criterion_8() -> Outcome {
    let q4 = build_mesh_quiver(4).map_err(|e| e.to_string())?;
    let d4 = hom_dimensions(&q4);
    ensure(d4.entries() == &mesh_oracle(4), "depth 4 table differs from oracle")?;
    let d6 = hom_dimensions(&build_mesh_quiver(6).map_err(|e| e.to_string())?);
    for ((u, v), d) in d4.entries() {
        ensure(d6.get(*u, *v) == Some(*d), format!("{u:?}->{v:?} changes from depth 4 to 6"))?;
    }
    Ok(format!("{} pairs match; stable to depth 6", d4.entries().len()))
}

fn report(n: usize, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut res = f();
    let elapsed = start.elapsed();
    if let (Ok(_), Some(l)) = (&res, limit) {
        if elapsed >= l {
            res = Err(format!("took {elapsed:?}, limit {l:?}"));
        }
    }
    match &res {
        Ok(msg) => println!("criterion {n}: PASS ({elapsed:.2?}) {msg}"),
        Err(msg) => println!("criterion {n}: FAIL ({elapsed:.2?}) {msg}"),
    }
    res.is_ok()
}

fn main() {
    let mut ok = true;
    ok &= report(1, Some(Duration::from_secs(1)), criterion_1);
    ok &= report(2, Some(Duration::from_secs(1)), criterion_2);
    let runs = scale_runs();
    let with_runs = |g: fn(&[ScaleRun]) -> Outcome| {
        let runs = &runs;
        move || runs.as_ref().map_err(|e| e.clone()).and_then(|r| g(r))
    };
    ok &= report(3, None, with_runs(criterion_3));
    ok &= report(4, None, with_runs(criterion_4));
    ok &= report(5, None, with_runs(criterion_5));
    ok &= report(6, Some(Duration::from_secs(120)), criterion_6);
    ok &= report(7, None, criterion_7);
    ok &= report(8, None, criterion_8);
    if !ok {
        std::process::exit(1);
    }
}
