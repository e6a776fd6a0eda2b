use std::collections::BTreeMap;
use std::sync::Arc;

use liekoszul_core::koszul::{
    ext_matrix, find_attaining_weight, global_dimension_of, hilbert_matrix_ext, hilbert_matrix_sym,
    koszul_report, KoszulReport,
};
use liekoszul_core::meshquiver::{build_mesh_quiver, hom_dimensions};
use liekoszul_core::psi::{
    check_support_lemma, compute_psi, enumerate_down_set, enumerate_interval, PosetSlice, PsiSet,
};
use liekoszul_core::{LieType, Poly, PowerTable, RootSystem, Weight};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cache::DiskStore;
use crate::config::{parse_weight, Command, RunConfig};
use crate::output::*;
use crate::CliError;

type Outcome = Result<(Value, Document), CliError>;

/// Everything resolved from the configuration before any computation.
struct Ctx {
    rs: Arc<RootSystem>,
    resolved: BTreeMap<String, Value>,
}

impl Ctx {
    fn new(cfg: &RunConfig) -> Result<Self, CliError> {
        let family = cfg
            .family
            .ok_or_else(|| CliError::Validation("--family is required".into()))?;
        let rank = cfg.resolved_rank()?;
        let lt = LieType::with_rank_limit(family, rank, cfg.rank_limit)?;
        let mut resolved = BTreeMap::new();
        resolved.insert("type".into(), json!(lt.to_string()));
        Ok(Ctx {
            rs: Arc::new(RootSystem::new(lt)),
            resolved,
        })
    }

    fn weight(&mut self, name: &str, expr: &Option<String>) -> Result<Weight, CliError> {
        let expr = expr
            .as_ref()
            .ok_or_else(|| CliError::Validation(format!("--{name} is required")))?;
        let w = parse_weight(expr, &self.rs)?;
        self.resolved.insert(name.into(), json!(w.coords()));
        Ok(w)
    }

    fn opt_weight(&mut self, name: &str, expr: &Option<String>) -> Result<Option<Weight>, CliError> {
        match expr {
            Some(_) => self.weight(name, expr).map(Some),
            None => Ok(None),
        }
    }

    fn table(&self, cfg: &RunConfig) -> PowerTable {
        let t = PowerTable::new(&self.rs).with_max_sym_degree(cfg.max_sym_degree);
        match &cfg.cache_dir {
            Some(dir) => t.with_store(Box::new(DiskStore::new(dir))),
            None => t,
        }
    }

    fn psi(&mut self, cfg: &RunConfig) -> Result<PsiSet, CliError> {
        let xi = self.weight("xi", &cfg.xi)?;
        Ok(compute_psi(&self.rs, &xi)?)
    }

    fn slice(&mut self, cfg: &RunConfig) -> Result<PosetSlice, CliError> {
        let psi = self.psi(cfg)?;
        let lambda = self.weight("lambda", &cfg.lambda)?;
        let mu = self.opt_weight("mu", &cfg.mu)?;
        Ok(match mu {
            Some(mu) => enumerate_interval(&psi, &mu, &lambda)?,
            None => enumerate_down_set(&psi, &lambda)?,
        })
    }

    fn resolved(&self) -> Value {
        json!(self.resolved)
    }
}

pub(crate) fn dispatch(cfg: &RunConfig) -> Outcome {
    match cfg.command {
        Command::Roots => roots(cfg),
        Command::Psi => psi(cfg),
        Command::Poset => poset(cfg),
        Command::Hilbert => hilbert(cfg),
        Command::KoszulCheck => koszul_check(cfg),
        Command::Gldim => gldim(cfg),
        Command::Attain => attain(cfg),
        Command::Quiver => quiver(cfg),
        Command::Grow => grow(cfg),
    }
}

fn weight_list(ws: &[Weight]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
}

fn roots(cfg: &RunConfig) -> Outcome {
    let ctx = Ctx::new(cfg)?;
    let rs = &ctx.rs;
    let form: Vec<Vec<String>> = rs
        .sym_form()
        .iter()
        .map(|r| r.iter().map(|q| q.to_string()).collect())
        .collect();
    let result = json!({
        "type": rs.lie_type().to_string(),
        "rank": rs.rank(),
        "dim_g": rs.dim_g(),
        "cartan": rs.cartan(),
        "symmetric_form": form,
        "simple_roots": weights_json(rs, rs.simple_roots()),
        "positive_roots": weights_json(rs, rs.positive_roots()),
        "theta": weight_json(rs, rs.theta()),
        "rho": weight_json(rs, rs.rho()),
    });
    let mut t = Table::new("positive_roots", &["index", "fundamental", "simple", "height"]);
    for (i, (r, s)) in rs.positive_roots().iter().zip(rs.positive_roots_simple()).enumerate() {
        let s: Vec<String> = s.iter().map(|c| c.to_string()).collect();
        t.rows.push(vec![
            i.to_string(),
            r.to_string(),
            format!("({})", s.join(",")),
            rs.height(r)?.to_string(),
        ]);
    }
    let text = format!(
        "dim g = {}, |R+| = {}\ntheta = {}\nrho = {}\ncartan = {:?}\n",
        rs.dim_g(),
        rs.positive_roots().len(),
        rs.theta(),
        rs.rho(),
        rs.cartan()
    );
    Ok((ctx.resolved(), Document { result, verified: None, tables: vec![t], text }))
}

fn psi(cfg: &RunConfig) -> Outcome {
    let mut ctx = Ctx::new(cfg)?;
    let psi = ctx.psi(cfg)?;
    let rs = ctx.rs.clone();
    let support = if psi.is_positive() {
        let rep = check_support_lemma(&psi, cfg.trials, cfg.seed)?;
        Some(rep)
    } else {
        None
    };
    let mut result = json!({
        "psi": weights_json(&rs, psi.roots()),
        "size": psi.len(),
        "max_xi": psi.max_xi().to_string(),
        "lambda_psi": weight_json(&rs, psi.lambda_psi()),
        "positive": psi.is_positive(),
        "sum_free": true,
    });
    let mut text = format!(
        "Psi = {{{}}}  (|Psi| = {}, max (xi,alpha) = {})\nlambda_Psi = {}\n",
        weight_list(psi.roots()),
        psi.len(),
        psi.max_xi(),
        psi.lambda_psi()
    );
    let verified = support.as_ref().map(|r| r.counterexamples.is_empty());
    if let Some(r) = &support {
        result["support_lemma"] = json!({
            "trials": r.trials,
            "seed": cfg.seed,
            "landed": r.landed,
            "equality_cases": r.equality_cases,
            "counterexamples": r.counterexamples.len(),
        });
        text.push_str(&format!(
            "support lemma: {} trials, {} in Z+Psi, {} equalities, {} counterexamples\n",
            r.trials,
            r.landed,
            r.equality_cases,
            r.counterexamples.len()
        ));
    } else {
        text.push_str("Psi contains negative roots; no slices can be built\n");
    }
    let mut t = Table::new("psi", &["fundamental", "simple"]);
    for (r, s) in psi.roots().iter().zip(psi.roots_simple()) {
        let s: Vec<String> = s.iter().map(|c| c.to_string()).collect();
        t.rows.push(vec![r.to_string(), format!("({})", s.join(","))]);
    }
    Ok((ctx.resolved(), Document { result, verified, tables: vec![t], text }))
}

fn poset(cfg: &RunConfig) -> Outcome {
    let mut ctx = Ctx::new(cfg)?;
    let slice = ctx.slice(cfg)?;
    let rs = ctx.rs.clone();
    let order = slice.index_order();
    let members: Vec<Value> = order
        .iter()
        .map(|w| {
            json!({
                "weight": weight_json(&rs, w),
                "distance": slice.distance_to_top(w),
            })
        })
        .collect();
    let result = json!({
        "psi": weights_json(&rs, slice.psi().roots()),
        "top": weight_json(&rs, slice.top()),
        "bottom": slice.bottom().map(|b| weight_json(&rs, b)),
        "size": slice.len(),
        "depth": slice.depth(),
        "members": members,
    });
    let mut t = Table::new("members", &["weight", "distance"]);
    let mut text = format!("{} weights, depth {}\n", slice.len(), slice.depth());
    for w in &order {
        let d = slice.distance_to_top(w).unwrap_or_default();
        t.rows.push(vec![w.to_string(), d.to_string()]);
        text.push_str(&format!("  {w}  d = {d}\n"));
    }
    Ok((ctx.resolved(), Document { result, verified: None, tables: vec![t], text }))
}

fn hilbert(cfg: &RunConfig) -> Outcome {
    let mut ctx = Ctx::new(cfg)?;
    let slice = ctx.slice(cfg)?;
    let rs = ctx.rs.clone();
    let mut table = ctx.table(cfg);
    let hs = hilbert_matrix_sym(&slice, &mut table)?;
    let he = hilbert_matrix_ext(&slice, &mut table)?;
    let ext = ext_matrix(&slice, &mut table)?;
    let result = json!({
        "hilbert_s": matrix_json(&rs, &hs),
        "hilbert_e": matrix_json(&rs, &he),
        "ext": matrix_json(&rs, &ext),
    });
    let mut t = Table::new("matrices", &MATRIX_HEADER);
    for (name, m) in [("hilbert_s", &hs), ("hilbert_e", &he), ("ext", &ext)] {
        t.rows.extend(matrix_rows(name, m));
    }
    let text = format!(
        "H_S(t):\n{}\nH_E(t):\n{}\nExt(t):\n{}",
        matrix_text(&hs),
        matrix_text(&he),
        matrix_text(&ext)
    );
    Ok((ctx.resolved(), Document { result, verified: None, tables: vec![t], text }))
}

fn report_json(rs: &RootSystem, r: &KoszulReport) -> Value {
    json!({
        "xi": weight_json(rs, &r.xi),
        "psi": weights_json(rs, &r.psi),
        "top": weight_json(rs, &r.top),
        "bottom": r.bottom.as_ref().map(|b| weight_json(rs, b)),
        "slice_size": r.slice_size,
        "hilbert_s": matrix_json(rs, &r.hilbert_s),
        "hilbert_e": matrix_json(rs, &r.hilbert_e),
        "ext": matrix_json(rs, &r.ext_matrix),
        "residual": matrix_json(rs, &r.residual),
        "koszul_ok": r.koszul_ok,
        "right_inverse_ok": r.right_inverse_ok,
        "duality_ok": r.duality_ok,
        "gldim": r.gldim,
        "gldim_bound": r.gldim_bound,
        "gldim_witness": r.gldim_witness.as_ref().map(|(a, b)| json!([weight_json(rs, a), weight_json(rs, b)])),
    })
}

fn report_summary(r: &KoszulReport) -> String {
    let yn = |b: bool| if b { "yes" } else { "NO" };
    format!(
        "|F| = {}  koszul: {}  right inverse: {}  duality: {}  gldim = {} (bound {})\n",
        r.slice_size,
        yn(r.koszul_ok),
        yn(r.right_inverse_ok),
        yn(r.duality_ok),
        r.gldim,
        r.gldim_bound
    )
}

fn koszul_check(cfg: &RunConfig) -> Outcome {
    let mut ctx = Ctx::new(cfg)?;
    let slice = ctx.slice(cfg)?;
    let rs = ctx.rs.clone();
    let mut table = ctx.table(cfg);
    let r = koszul_report(&slice, &mut table, None)?;
    let mut t = Table::new("matrices", &MATRIX_HEADER);
    for (name, m) in [("hilbert_s", &r.hilbert_s), ("hilbert_e", &r.hilbert_e), ("ext", &r.ext_matrix)] {
        t.rows.extend(matrix_rows(name, m));
    }
    let mut s = Table::new("checks", &["koszul_ok", "right_inverse_ok", "duality_ok", "gldim", "gldim_bound"]);
    s.rows.push(vec![
        r.koszul_ok.to_string(),
        r.right_inverse_ok.to_string(),
        r.duality_ok.to_string(),
        r.gldim.to_string(),
        r.gldim_bound.to_string(),
    ]);
    let text = format!(
        "Psi = {{{}}}\nH_S(t):\n{}\nExt(t):\n{}{}",
        weight_list(&r.psi),
        matrix_text(&r.hilbert_s),
        matrix_text(&r.ext_matrix),
        report_summary(&r)
    );
    Ok((
        ctx.resolved(),
        Document {
            result: report_json(&rs, &r),
            verified: Some(r.all_ok()),
            tables: vec![s, t],
            text,
        },
    ))
}

fn gldim(cfg: &RunConfig) -> Outcome {
    let mut ctx = Ctx::new(cfg)?;
    let slice = ctx.slice(cfg)?;
    let rs = ctx.rs.clone();
    let mut table = ctx.table(cfg);
    let ext = ext_matrix(&slice, &mut table)?;
    let bound = slice.psi().len();
    let (g, witness) = global_dimension_of(&ext, bound)?;
    let result = json!({
        "gldim": g,
        "bound": bound,
        "witness": witness.as_ref().map(|(a, b)| json!([weight_json(&rs, a), weight_json(&rs, b)])),
    });
    let mut t = Table::new("gldim", &["gldim", "bound", "witness_row", "witness_col"]);
    let (wr, wc) = witness
        .as_ref()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .unwrap_or_default();
    t.rows.push(vec![g.to_string(), bound.to_string(), wr.clone(), wc.clone()]);
    let text = match &witness {
        Some(_) => format!("gldim = {g} (bound |Psi| = {bound}), witnessed by Ext({wr}, {wc})\n"),
        None => format!("gldim = 0 (bound |Psi| = {bound})\n"),
    };
    Ok((ctx.resolved(), Document { result, verified: Some(g <= bound), tables: vec![t], text }))
}

fn attain(cfg: &RunConfig) -> Outcome {
    let mut ctx = Ctx::new(cfg)?;
    let psi = ctx.psi(cfg)?;
    let rs = ctx.rs.clone();
    let mut table = ctx.table(cfg);
    let found = find_attaining_weight(&psi, cfg.search_bound, &mut table)?;
    let mut t = Table::new("attain", &["mu", "mu_plus_lambda_psi", "ext_entry"]);
    let (result, verified, text) = match found {
        Some(mu) => {
            let top = &mu + psi.lambda_psi();
            let iv = enumerate_interval(&psi, &mu, &top)?;
            let ext = ext_matrix(&iv, &mut table)?;
            let entry = ext.entry(&mu, &top).cloned().unwrap_or_else(Poly::zero);
            let ok = entry == Poly::monomial(BigInt::from(1), psi.len());
            t.rows.push(vec![mu.to_string(), top.to_string(), entry.to_string()]);
            (
                json!({
                    "found": true,
                    "mu": weight_json(&rs, &mu),
                    "mu_plus_lambda_psi": weight_json(&rs, &top),
                    "ext_entry": poly_json(&entry),
                    "psi_size": psi.len(),
                }),
                ok,
                format!("mu = {mu}: Ext({mu}, {top}) = {entry}  (|Psi| = {})\n", psi.len()),
            )
        }
        None => (
            json!({ "found": false, "psi_size": psi.len() }),
            false,
            format!("no attaining weight up to level {}\n", cfg.search_bound),
        ),
    };
    Ok((ctx.resolved(), Document { result, verified: Some(verified), tables: vec![t], text }))
}

fn histogram(values: impl Iterator<Item = String>) -> BTreeMap<String, usize> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_default() += 1;
    }
    h
}

fn quiver(cfg: &RunConfig) -> Outcome {
    let q = build_mesh_quiver(cfg.depth)?;
    let dims = hom_dimensions(&q);
    let mut resolved = BTreeMap::new();
    resolved.insert("depth".to_string(), json!(cfg.depth));
    let entries: Vec<Value> = dims
        .entries()
        .iter()
        .map(|((u, v), d)| {
            json!({
                "from": [u.0, u.1],
                "to": [v.0, v.1],
                "dim": d,
                "provisional": dims.is_provisional(*u, *v),
            })
        })
        .collect();
    let diagram = q.ascii_diagram();
    let mut result = json!({
        "vertices": q.vertices().iter().map(|v| [v.0, v.1]).collect::<Vec<_>>(),
        "arrows": q.arrows().iter().map(|(a, b)| [[a.0, a.1], [b.0, b.1]]).collect::<Vec<_>>(),
        "dimensions": entries,
        "diagram": diagram,
    });
    let mut t = Table::new("dimensions", &["from", "to", "dim", "provisional"]);
    for ((u, v), d) in dims.entries() {
        t.rows.push(vec![
            format!("({},{})", u.0, u.1),
            format!("({},{})", v.0, v.1),
            d.to_string(),
            dims.is_provisional(*u, *v).to_string(),
        ]);
    }
    let mut text = diagram.clone();
    text.push_str("\nnonzero dimensions:\n");
    for ((u, v), d) in dims.entries() {
        if *d > 0 && u != v {
            text.push_str(&format!("  ({},{}) -> ({},{}): {d}\n", u.0, u.1, v.0, v.1));
        }
    }
    // optional side-by-side with a Ψ-slice; reported, never asserted
    if cfg.family.is_some() && cfg.xi.is_some() && cfg.lambda.is_some() {
        let mut ctx = Ctx::new(cfg)?;
        let slice = ctx.slice(cfg)?;
        let mut table = ctx.table(cfg);
        let hs = hilbert_matrix_sym(&slice, &mut table)?;
        let quiver_hist = histogram(
            dims.entries()
                .iter()
                .filter(|((u, v), _)| !q.paths(*u, *v).is_empty())
                .map(|(_, d)| d.to_string()),
        );
        let n = hs.len();
        let slice_hist = histogram(
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| slice.leq(&hs.index()[i], &hs.index()[j]).ok().flatten().is_some())
                .map(|(i, j)| hs.get(i, j).coeffs().iter().next_back().map(|c| c.to_string()).unwrap_or("0".into())),
        );
        let agree = quiver_hist == slice_hist;
        text.push_str(&format!(
            "\ncomparison (not asserted): quiver dims {quiver_hist:?}, slice H_S coefficients {slice_hist:?}\n"
        ));
        result["comparison"] = json!({
            "slice_size": slice.len(),
            "slice_depth": slice.depth(),
            "quiver_dimension_counts": quiver_hist,
            "slice_coefficient_counts": slice_hist,
            "histograms_agree": agree,
        });
        for (k, v) in ctx.resolved {
            resolved.insert(k, v);
        }
    }
    Ok((json!(resolved), Document { result, verified: None, tables: vec![t], text }))
}

fn grow(cfg: &RunConfig) -> Outcome {
    let mut ctx = Ctx::new(cfg)?;
    let psi = ctx.psi(cfg)?;
    let lambda = ctx.weight("lambda", &cfg.lambda)?;
    let rs = ctx.rs.clone();
    let mut table = ctx.table(cfg);
    let mut steps = Vec::new();
    let mut t = Table::new("steps", &["step", "lambda", "slice_size", "depth", "koszul_ok", "duality_ok", "gldim"]);
    let mut text = format!("Psi = {{{}}}, lambda_Psi = {}\n", weight_list(psi.roots()), psi.lambda_psi());
    let mut all = true;
    let mut current = lambda;
    for k in 0..=cfg.grow_steps {
        let slice = enumerate_down_set(&psi, &current)?;
        let r = koszul_report(&slice, &mut table, None)?;
        all &= r.all_ok();
        steps.push(json!({
            "step": k,
            "lambda": weight_json(&rs, &current),
            "slice_size": r.slice_size,
            "depth": slice.depth(),
            "koszul_ok": r.koszul_ok && r.right_inverse_ok,
            "duality_ok": r.duality_ok,
            "gldim": r.gldim,
        }));
        t.rows.push(vec![
            k.to_string(),
            current.to_string(),
            r.slice_size.to_string(),
            slice.depth().to_string(),
            (r.koszul_ok && r.right_inverse_ok).to_string(),
            r.duality_ok.to_string(),
            r.gldim.to_string(),
        ]);
        text.push_str(&format!("step {k}: lambda = {current}  {}", report_summary(&r)));
        current = &current + psi.lambda_psi();
    }
    let result = json!({ "psi": weights_json(&rs, psi.roots()), "steps": steps });
    Ok((ctx.resolved(), Document { result, verified: Some(all), tables: vec![t], text }))
}
