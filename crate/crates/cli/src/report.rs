//! Rendering of command results as aligned text or JSON.

use std::fmt::Write as _;

use anyhow::Context;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use kmoduli_core::arith::{fmt_rational, rational_json};
use kmoduli_core::cqsing::{self, CyclicQuotientSingularity, SingularityClassification};
use kmoduli_core::moduli::{self, LocalModuliModel};
use kmoduli_core::quotsurf::{Family, FixedPointRecord, QDefModel, SurfaceModel};
use kmoduli_core::torusgit::{self, SupportPoint, WeightSystem};

use crate::{Format, ReportConfig};

/// Coarse dimensions with no outside value to compare against.
const UNCHECKED_COARSE: [(Family, u64); 2] = [(Family::Y, 3), (Family::Y, 9)];

#[derive(Serialize)]
struct Rat(#[serde(with = "rational_json")] BigRational);

fn rats(xs: &[BigRational]) -> Vec<Rat> {
    xs.iter().cloned().map(Rat).collect()
}

fn json<T: Serialize>(v: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<20}{value}");
}

fn join<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn join_rats(xs: &[BigRational]) -> String {
    if xs.is_empty() {
        "(none)".into()
    } else {
        join(xs.iter().map(fmt_rational), ", ")
    }
}

fn type_label(c: &SingularityClassification) -> &'static str {
    if c.is_smooth {
        "smooth"
    } else if c.is_du_val {
        "Du Val"
    } else if c.is_primitive_t {
        "primitive T"
    } else if c.is_t {
        "T"
    } else if c.is_qg_rigid {
        "rigid"
    } else {
        "neither T nor rigid"
    }
}

fn qdef_label(d: Option<u64>) -> String {
    d.map_or_else(|| "UNKNOWN".into(), |d| d.to_string())
}

#[derive(Serialize)]
struct SingReport {
    input: String,
    normal_form: String,
    order: u64,
    q: Option<u64>,
    hj_chain: Vec<u64>,
    self_intersections: Vec<i64>,
    discrepancies: Vec<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    log_discrepancies: Option<Vec<Rat>>,
    gorenstein_index: u64,
    classification: SingularityClassification,
}

pub fn sing(input: &str, cfg: &ReportConfig) -> anyhow::Result<String> {
    let germ: CyclicQuotientSingularity = input.parse()?;
    let nf = cqsing::normalize(&germ)?;
    let hj = cqsing::hirzebruch_jung(&nf).ok();
    let disc = hj.as_ref().map(cqsing::discrepancies);
    let a: Vec<BigRational> = disc.as_ref().map_or_else(Vec::new, |d| d.values().to_vec());
    let log_a: Vec<BigRational> = disc
        .as_ref()
        .map_or_else(Vec::new, |d| d.log_discrepancies());
    let chain: Vec<u64> = hj
        .as_ref()
        .map_or_else(Vec::new, |h| h.coefficients().to_vec());
    let class = cqsing::classify(&nf);
    let rep = SingReport {
        input: input.to_string(),
        normal_form: nf.to_string(),
        order: nf.order(),
        q: nf.q(),
        self_intersections: hj
            .as_ref()
            .map_or_else(Vec::new, |h| h.self_intersections()),
        hj_chain: chain,
        discrepancies: rats(&a),
        log_discrepancies: cfg.convention_note.then(|| rats(&log_a)),
        gorenstein_index: cqsing::gorenstein_index(&nf),
        classification: class.clone(),
    };
    if cfg.format == Format::Json {
        return json(&rep);
    }
    let mut out = String::new();
    line(&mut out, "singularity", input);
    match nf.q() {
        Some(q) => line(
            &mut out,
            "normal form",
            format!("{nf}  (n = {}, q = {q})", nf.order()),
        ),
        None => line(&mut out, "normal form", "smooth"),
    }
    if rep.hj_chain.is_empty() {
        line(&mut out, "HJ chain", "(none)");
    } else {
        line(
            &mut out,
            "HJ chain",
            format!("[{}]", join(&rep.hj_chain, ", ")),
        );
        line(
            &mut out,
            "self-intersections",
            join(&rep.self_intersections, ", "),
        );
    }
    line(&mut out, "discrepancy a_j", join_rats(&a));
    if cfg.convention_note {
        line(&mut out, "log discrepancy", join_rats(&log_a));
    }
    line(&mut out, "gorenstein index", rep.gorenstein_index);
    line(
        &mut out,
        "w, r, m, w0",
        format!("{}, {}, {}, {}", class.w, class.r, class.m, class.w0),
    );
    line(&mut out, "type", type_label(&class));
    line(&mut out, "qDef dim", qdef_label(class.qdef_dim));
    if cfg.convention_note && !a.is_empty() {
        out.push_str("\nconventions: K_min = f*K + sum a_j E_j; log discrepancy = 1 + a_j\n");
    }
    Ok(out)
}

fn notes_for(model: &LocalModuliModel) -> Vec<String> {
    let id = model.surface_id;
    let mut notes = Vec::new();
    if UNCHECKED_COARSE.contains(&(id.family, id.l)) {
        notes.push(format!(
            "coarse_dim of {id} is computed only; no external value to compare against"
        ));
    }
    notes
}

#[derive(Serialize)]
struct SurfaceReport<'a> {
    model: &'a LocalModuliModel,
    surface: &'a SurfaceModel,
    qdef: &'a QDefModel,
    notes: Vec<String>,
}

fn model_lines(out: &mut String, m: &LocalModuliModel, cfg: &ReportConfig) {
    line(out, "qdef_dim", m.qdef_dim);
    line(out, "aut_dim", m.aut_dim);
    line(out, "stack_dim", m.stack_dim);
    line(out, "coarse_dim", m.coarse_dim);
    line(out, "kernel_rank", m.kernel_rank);
    line(out, "isolated", m.isolated);
    line(out, "volume", fmt_rational(&m.volume));
    let md = fmt_rational(&m.min_discrepancy);
    if cfg.convention_note {
        let log = &m.min_discrepancy + BigRational::from_integer(BigInt::from(1));
        line(
            out,
            "min_discrepancy",
            format!("{md}  (log discrepancy {})", fmt_rational(&log)),
        );
    } else {
        line(out, "min_discrepancy", md);
    }
    line(out, "gorenstein_index", m.gorenstein_index);
    line(out, "b2_generic", m.b2_generic);
}

fn point_row(p: &FixedPointRecord) -> String {
    format!(
        "  {:<16}{:<12}{:<16}{:<20}{}",
        p.point_label,
        p.stabilizer_order,
        format!(
            "({},{})",
            p.local_cyclic_weights[0], p.local_cyclic_weights[1]
        ),
        format!("{} {}", p.local_torus_weights[0], p.local_torus_weights[1]),
        p.singularity,
    )
}

pub fn surface(family: Family, l: u64, cfg: &ReportConfig) -> anyhow::Result<String> {
    let analysis = moduli::analyze(family, l).with_context(|| {
        if family == Family::Y && l.is_multiple_of(2) {
            format!("{family}_{l}: even order not admissible")
        } else {
            format!("{family}_{l}")
        }
    })?;
    let m = &analysis.model;
    let notes = notes_for(m);
    if cfg.format == Format::Json {
        return json(&SurfaceReport {
            model: m,
            surface: &analysis.surface,
            qdef: &analysis.qdef,
            notes,
        });
    }
    let a = &analysis.surface.action;
    let mut out = String::new();
    line(
        &mut out,
        "surface",
        format!(
            "{}  ({}/Z_{}, weights ({}))",
            m.surface_id,
            a.ambient,
            a.order,
            join(&a.weights, ",")
        ),
    );
    model_lines(&mut out, m, cfg);
    out.push_str("\nsingular locus\n");
    let _ = writeln!(
        out,
        "  {:<16}{:<12}{:<16}{:<20}type",
        "point", "stabilizer", "chart weights", "torus characters"
    );
    for p in &analysis.surface.singular_locus {
        out.push_str(&point_row(p));
        out.push('\n');
    }
    let q = &analysis.qdef;
    let _ = writeln!(out, "\nqDef weight matrix (2 x {})", q.total_dim);
    for row in &q.weight_matrix {
        let _ = writeln!(out, "  {}", join(row.iter().map(|x| format!("{x:>4}")), ""));
    }
    for n in notes {
        let _ = writeln!(out, "\nnote: {n}");
    }
    Ok(out)
}

fn one_based(p: &SupportPoint) -> Vec<usize> {
    p.iter().map(|i| i + 1).collect()
}

#[derive(Serialize)]
struct StepReport {
    lambda: Vec<String>,
    limit: Vec<usize>,
}

#[derive(Serialize)]
struct SupportReport {
    support: Vec<usize>,
    polystable: bool,
    polystable_core: Vec<usize>,
    limit_chain: Vec<StepReport>,
}

#[derive(Serialize)]
struct OracleReport {
    degree_cap: u32,
    invariant_monomials: usize,
    exponent_lattice_rank: usize,
}

#[derive(Serialize)]
struct GitReport {
    weights: WeightSystem,
    quotient_dim: usize,
    kernel_rank: usize,
    effective_rank: usize,
    largest_polystable: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    support: Option<SupportReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleReport>,
}

fn fmt_support(p: &[usize]) -> String {
    format!("{{{}}}", join(p, ","))
}

pub fn git(
    weights: &str,
    support: Option<&str>,
    oracle_cap: Option<u32>,
    cfg: &ReportConfig,
) -> anyhow::Result<String> {
    let ws = WeightSystem::parse(weights)?;
    let res = torusgit::analyze(&ws);
    let full = SupportPoint::full(ws.n_coords());
    let support = support
        .map(|s| -> anyhow::Result<SupportReport> {
            let p = SupportPoint::parse_one_based(s, ws.n_coords())?;
            Ok(SupportReport {
                support: one_based(&p),
                polystable: torusgit::is_polystable(&ws, &p),
                polystable_core: one_based(&torusgit::polystable_core(&ws, &p)),
                limit_chain: torusgit::limit_chain(&ws, &p)
                    .iter()
                    .map(|d| StepReport {
                        lambda: d.lambda().iter().map(BigInt::to_string).collect(),
                        limit: one_based(&d.limit),
                    })
                    .collect(),
            })
        })
        .transpose()?;
    let oracle = oracle_cap
        .map(|cap| -> anyhow::Result<OracleReport> {
            let mons = torusgit::invariant_monomials(&ws, cap, cfg.budget)?;
            Ok(OracleReport {
                degree_cap: cap,
                invariant_monomials: mons.len(),
                exponent_lattice_rank: torusgit::exponent_lattice_rank(&mons),
            })
        })
        .transpose()?;
    let rep = GitReport {
        weights: ws.clone(),
        quotient_dim: res.quotient_dim,
        kernel_rank: res.kernel_rank,
        effective_rank: res.effective_rank,
        largest_polystable: one_based(&torusgit::polystable_core(&ws, &full)),
        support,
        oracle,
    };
    if cfg.format == Format::Json {
        return json(&rep);
    }
    let mut out = String::new();
    let rows: Vec<String> = ws.matrix().iter().map(|r| join(r, ",")).collect();
    line(&mut out, "weights", rows.join("; "));
    line(&mut out, "quotient_dim", rep.quotient_dim);
    line(&mut out, "kernel_rank", rep.kernel_rank);
    line(&mut out, "effective_rank", rep.effective_rank);
    let lp = if rep.largest_polystable.is_empty() {
        "{} (origin only)".to_string()
    } else {
        fmt_support(&rep.largest_polystable)
    };
    line(&mut out, "largest polystable", lp);
    if let Some(s) = &rep.support {
        line(&mut out, "support", fmt_support(&s.support));
        line(&mut out, "polystable", s.polystable);
        if !s.polystable {
            line(&mut out, "polystable core", fmt_support(&s.polystable_core));
        }
        for (i, step) in s.limit_chain.iter().enumerate() {
            line(
                &mut out,
                &format!("step {}", i + 1),
                format!(
                    "lambda ({}) -> limit {}",
                    step.lambda.join(","),
                    fmt_support(&step.limit)
                ),
            );
        }
    }
    if let Some(o) = &rep.oracle {
        line(&mut out, "oracle degree cap", o.degree_cap);
        line(&mut out, "invariant monomials", o.invariant_monomials);
        line(&mut out, "exponent rank", o.exponent_lattice_rank);
    }
    Ok(out)
}

/// Column order of the text table; matches the JSON field names.
pub const TABLE_COLUMNS: [&str; 12] = [
    "surface_id",
    "qdef_dim",
    "aut_dim",
    "stack_dim",
    "coarse_dim",
    "kernel_rank",
    "isolated",
    "volume",
    "min_discrepancy",
    "gorenstein_index",
    "b2_generic",
    "log_discrepancy",
];

fn table_text(rows: &[LocalModuliModel], cfg: &ReportConfig) -> String {
    let ncols = if cfg.convention_note { 12 } else { 11 };
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|m| {
            let log = &m.min_discrepancy + BigRational::from_integer(BigInt::from(1));
            vec![
                m.surface_id.to_string(),
                m.qdef_dim.to_string(),
                m.aut_dim.to_string(),
                m.stack_dim.to_string(),
                m.coarse_dim.to_string(),
                m.kernel_rank.to_string(),
                m.isolated.to_string(),
                fmt_rational(&m.volume),
                fmt_rational(&m.min_discrepancy),
                m.gorenstein_index.to_string(),
                m.b2_generic.to_string(),
                fmt_rational(&log),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..ncols)
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].len())
                .chain([TABLE_COLUMNS[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let render = |r: &[&str]| -> String {
        let parts: Vec<String> = (0..ncols)
            .map(|c| format!("{:>w$}", r[c], w = widths[c]))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = render(&TABLE_COLUMNS);
    for r in &cells {
        let refs: Vec<&str> = r.iter().map(String::as_str).collect();
        out.push_str(&render(&refs));
    }
    for n in rows.iter().flat_map(notes_for) {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

pub fn table(family: Family, l_min: u64, l_max: u64, cfg: &ReportConfig) -> anyhow::Result<String> {
    let rows = moduli::table(family, l_min, l_max)?;
    match cfg.format {
        Format::Json => json(&rows),
        Format::Table => Ok(table_text(&rows, cfg)),
    }
}

#[derive(Serialize)]
struct WitnessReport {
    family: Family,
    target_dim: u64,
    l: u64,
    model: LocalModuliModel,
}

pub fn witness(family: Family, target_dim: u64, cfg: &ReportConfig) -> anyhow::Result<String> {
    let l = moduli::unboundedness_witness(family, target_dim);
    let model = moduli::local_model(family, l)?;
    let dim_name = match family {
        Family::X => "coarse_dim",
        Family::Y => "stack_dim",
    };
    if cfg.format == Format::Json {
        return json(&WitnessReport {
            family,
            target_dim,
            l,
            model,
        });
    }
    let mut out = String::new();
    line(&mut out, "family", family);
    line(
        &mut out,
        "target_dim",
        format!("{target_dim}  ({dim_name})"),
    );
    line(&mut out, "l", l);
    line(&mut out, "surface", model.surface_id);
    model_lines(&mut out, &model, cfg);
    Ok(out)
}
