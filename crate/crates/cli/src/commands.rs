//! Subcommand dispatch. Every command reads one clutter document, runs a
//! core operation, and renders the result in the selected format.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use clutterkit::analysis::{classify, check_main_theorem, ClassifyOptions, ClassificationReport};
use clutterkit::cone::{
    hilbert_basis_bruteforce, hilbert_basis_with_budget, indecomposable_parallelizations,
    indecomposable_induced_subclutters, simis_cone, WorkBudget,
};
use clutterkit::covers::CoverVector;
use clutterkit::ideal::{edge_ideal, ideals_equal, power, symbolic_power, MonomialIdeal};
use clutterkit::{Clutter, VertexId};

use crate::document::{
    parse_data, parse_text, serialize_data, serialize_text, to_clutter, ClutterDocument,
};
use crate::error::CliError;

/// Environment variable overriding the completion-step work budget.
pub const BUDGET_ENV: &str = "CLUTTERKIT_WORK_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text.
    Text,
    /// JSON.
    Data,
}

#[derive(Debug, Parser)]
#[command(name = "clutterkit", version, about = "Exact combinatorics of clutters")]
pub struct Cli {
    /// Output format. Input format is detected: documents starting with
    /// '{' parse as JSON, everything else as the line-oriented text format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Worker count; accepted for compatibility, output never depends on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal vertex covers (the blocker clutter).
    Blocker { file: PathBuf },
    /// Vertex covering number.
    Alpha { file: PathBuf },
    /// Replicate vertices according to a multiplicity vector.
    Parallelize {
        file: PathBuf,
        /// Comma-separated multiplicities, one per vertex.
        #[arg(long, value_name = "CSV")]
        a: String,
    },
    /// Hilbert basis of the clutter's cone.
    Hilbert {
        file: PathBuf,
        /// Print only the number of basis elements.
        #[arg(long)]
        count: bool,
        /// Restrict output to the box a ≤ box[..n], b ≤ box[n]
        /// (n+1 comma-separated bounds).
        #[arg(long, value_name = "CSV")]
        r#box: Option<String>,
        /// Use the brute-force box search instead of the cone pipeline
        /// (requires --box; sound for elements strictly inside the box).
        #[arg(long, requires = "box")]
        brute: bool,
    },
    /// Multiplicity vectors with indecomposable parallelizations
    /// (the Hilbert basis, read combinatorially).
    Indecomposables { file: PathBuf },
    /// Vertex subsets inducing indecomposable subclutters.
    Subclutters { file: PathBuf },
    /// Generators of the b-th symbolic power of the edge ideal.
    SymbolicPower {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
    },
    /// Generators of the i-th ordinary power of the edge ideal.
    Power {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        i: u32,
    },
    /// Compare ordinary and symbolic powers up to an exponent.
    ComparePowers {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_i: u32,
    },
    /// Full classification report.
    Classify { file: PathBuf },
    /// Cross-check Hilbert-basis membership against the partition search
    /// over all multiplicity vectors in a box.
    CheckTheorem {
        file: PathBuf,
        /// Comma-separated per-vertex bounds (n values).
        #[arg(long, value_name = "CSV")]
        r#box: String,
    },
}

fn budget_from_env() -> Result<WorkBudget, CliError> {
    let mut budget = WorkBudget::default();
    if let Ok(s) = std::env::var(BUDGET_ENV) {
        budget.completion_steps = s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_ENV} must be a positive integer")))?;
    }
    Ok(budget)
}

fn load(path: &Path) -> Result<(ClutterDocument, Clutter), CliError> {
    let input = std::fs::read_to_string(path)?;
    let doc = if input.trim_start().starts_with('{') {
        parse_data(&input)?
    } else {
        parse_text(&input)?
    };
    let c = to_clutter(&doc)?;
    Ok((doc, c))
}

fn parse_csv<T: std::str::FromStr>(s: &str, expected: usize, what: &str) -> Result<Vec<T>, CliError> {
    let vals: Result<Vec<T>, _> = s.split(',').map(|t| t.trim().parse()).collect();
    let vals = vals.map_err(|_| CliError::Usage(format!("{what}: expected integers, got '{s}'")))?;
    if vals.len() != expected {
        return Err(CliError::Usage(format!(
            "{what}: expected {expected} comma-separated values, got {}",
            vals.len()
        )));
    }
    Ok(vals)
}

/// Map the original vertex bases back to document labels; parallelization
/// copies render as label^copy.
fn label_map(doc: &ClutterDocument, c: &Clutter) -> BTreeMap<u32, String> {
    c.vertices()
        .iter()
        .zip(&doc.vertices)
        .map(|(v, l)| (v.base, l.clone()))
        .collect()
}

fn vertex_label(labels: &BTreeMap<u32, String>, v: VertexId) -> String {
    let base = &labels[&v.base];
    if v.copy == 1 {
        base.clone()
    } else {
        format!("{base}^{}", v.copy)
    }
}

fn cover_vector_line(cv: &CoverVector) -> String {
    let a: Vec<String> = cv.a.iter().map(|x| x.to_string()).collect();
    format!("({}; {})", a.join(","), cv.b)
}

fn monomial_string(labels: &[String], exps: &[u32]) -> String {
    let parts: Vec<String> = labels
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(l, &e)| if e == 1 { l.clone() } else { format!("{l}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn ideal_lines(labels: &[String], ideal: &MonomialIdeal) -> Vec<String> {
    if ideal.is_zero() {
        return vec!["0".into()];
    }
    ideal
        .generators()
        .iter()
        .map(|g| monomial_string(labels, &g.exponents))
        .collect()
}

fn edge_label_lists(doc: &ClutterDocument, base: &Clutter, c: &Clutter) -> Vec<Vec<String>> {
    let labels = label_map(doc, base);
    c.edge_lists()
        .iter()
        .map(|e| e.iter().map(|&v| vertex_label(&labels, v)).collect())
        .collect()
}

fn require_edges(c: &Clutter, what: &str) -> Result<(), CliError> {
    if c.is_discrete() {
        return Err(CliError::Domain(format!("{what} needs a clutter with at least one edge")));
    }
    Ok(())
}

fn report_text(r: &ClassificationReport, labels: &BTreeMap<u32, String>) -> String {
    let mut out = String::new();
    let mut kv = |k: &str, v: String| out.push_str(&format!("{k}: {v}\n"));
    kv("id", r.id.clone());
    kv("graph", r.is_graph.to_string());
    kv("alpha0", r.alpha0.to_string());
    kv("beta0", r.beta0.to_string());
    kv("beta1", r.beta1.to_string());
    kv("konig", r.konig.to_string());
    kv("connected", r.connected.to_string());
    match &r.decomposable {
        None => kv("decomposable", "false".into()),
        Some((x, y)) => {
            let part = |s: &[VertexId]| {
                s.iter().map(|&v| vertex_label(labels, v)).collect::<Vec<_>>().join(" ")
            };
            kv("decomposable", format!("true [{} | {}]", part(x), part(y)));
        }
    }
    kv("mfmc_exact", r.mfmc_exact.to_string());
    if let Some(b) = r.bipartite {
        kv("bipartite", b.to_string());
    }
    if let Some(d) = &r.perfect_diagnosis {
        kv("perfect_via_berge", d.berge.to_string());
        kv("odd_holes", d.odd_holes.len().to_string());
        kv("odd_antiholes", d.odd_antiholes.len().to_string());
        kv("self_complementary_pentagons", d.self_complementary.to_string());
        if let Some(ok) = d.clique_generators_ok {
            kv("clique_generators_ok", ok.to_string());
        }
    }
    kv("hilbert_total", r.hilbert_summary.total.to_string());
    kv("hilbert_zero_one", r.hilbert_summary.zero_one.to_string());
    kv("hilbert_max_b", r.hilbert_summary.max_b.to_string());
    out
}

fn report_json(r: &ClassificationReport, labels: &BTreeMap<u32, String>) -> serde_json::Value {
    let names =
        |s: &[VertexId]| -> Vec<String> { s.iter().map(|&v| vertex_label(labels, v)).collect() };
    json!({
        "id": r.id,
        "graph": r.is_graph,
        "alpha0": r.alpha0,
        "beta0": r.beta0,
        "beta1": r.beta1,
        "konig": r.konig,
        "connected": r.connected,
        "decomposable": r.decomposable.as_ref().map(|(x, y)| json!([names(x), names(y)])),
        "mfmc_exact": r.mfmc_exact,
        "bipartite": r.bipartite,
        "perfect_diagnosis": r.perfect_diagnosis.as_ref().map(|d| json!({
            "berge": d.berge,
            "odd_holes": d.odd_holes.iter().map(|h| names(h)).collect::<Vec<_>>(),
            "odd_antiholes": d.odd_antiholes.iter().map(|h| names(h)).collect::<Vec<_>>(),
            "self_complementary_pentagons": d.self_complementary,
            "clique_generators_ok": d.clique_generators_ok,
        })),
        "hilbert": {
            "total": r.hilbert_summary.total,
            "zero_one": r.hilbert_summary.zero_one,
            "max_b": r.hilbert_summary.max_b,
        },
    })
}

fn render_json(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json renders");
    s.push('\n');
    s
}

fn cover_vectors_out(elements: &[CoverVector], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for cv in elements {
                out.push_str(&cover_vector_line(cv));
                out.push('\n');
            }
            out
        }
        Format::Data => render_json(json!({
            "elements": elements
                .iter()
                .map(|cv| json!({"a": cv.a, "b": cv.b}))
                .collect::<Vec<_>>(),
        })),
    }
}

pub fn dispatch(cli: &Cli) -> Result<String, CliError> {
    let budget = budget_from_env()?;
    let format = cli.format;
    match &cli.command {
        Command::Blocker { file } => {
            let (doc, c) = load(file)?;
            let covers = edge_label_lists(&doc, &c, &c.blocker());
            Ok(match format {
                Format::Text => {
                    covers.iter().map(|e| e.join(" ") + "\n").collect::<String>()
                }
                Format::Data => render_json(json!({ "covers": covers })),
            })
        }
        Command::Alpha { file } => {
            let (_, c) = load(file)?;
            Ok(match format {
                Format::Text => format!("{}\n", c.covering_number()),
                Format::Data => render_json(json!({ "alpha0": c.covering_number() })),
            })
        }
        Command::Parallelize { file, a } => {
            let (doc, c) = load(file)?;
            let a: Vec<u32> = parse_csv(a, c.vertex_count(), "--a")?;
            let pc = c.parallelization(&a)?;
            let labels = label_map(&doc, &c);
            let verts: Vec<String> =
                pc.vertices().iter().map(|&v| vertex_label(&labels, v)).collect();
            let edges = edge_label_lists(&doc, &c, &pc);
            let out_doc = ClutterDocument {
                name: doc.name.clone(),
                vertices: verts,
                edges,
            };
            Ok(match format {
                Format::Text => serialize_text(&out_doc),
                Format::Data => serialize_data(&out_doc),
            })
        }
        Command::Hilbert { file, count, r#box, brute } => {
            let (_, c) = load(file)?;
            let n = c.vertex_count();
            let bound: Option<Vec<u64>> = match r#box {
                Some(s) => Some(parse_csv(s, n + 1, "--box")?),
                None => None,
            };
            let elements: Vec<CoverVector> = if *brute {
                let bound = bound.clone().expect("clap enforces --box with --brute");
                hilbert_basis_bruteforce(&simis_cone(&c), &bound)?
            } else {
                hilbert_basis_with_budget(&simis_cone(&c), &budget)?.elements
            };
            let elements: Vec<CoverVector> = match &bound {
                None => elements,
                Some(bd) => elements
                    .into_iter()
                    .filter(|cv| {
                        cv.a.iter().zip(bd).all(|(&x, &u)| x as u64 <= u) && cv.b <= bd[n]
                    })
                    .collect(),
            };
            if *count {
                return Ok(match format {
                    Format::Text => format!("{}\n", elements.len()),
                    Format::Data => render_json(json!({ "count": elements.len() })),
                });
            }
            Ok(cover_vectors_out(&elements, format))
        }
        Command::Indecomposables { file } => {
            let (_, c) = load(file)?;
            let elements = indecomposable_parallelizations(&c, &budget)?;
            Ok(cover_vectors_out(&elements, format))
        }
        Command::Subclutters { file } => {
            let (doc, c) = load(file)?;
            let labels = label_map(&doc, &c);
            let subs = indecomposable_induced_subclutters(&c, &budget)?;
            Ok(match format {
                Format::Text => subs
                    .iter()
                    .map(|(s, b)| {
                        let names: Vec<String> =
                            s.iter().map(|&v| vertex_label(&labels, v)).collect();
                        format!("{} alpha0={b}\n", names.join(" "))
                    })
                    .collect(),
                Format::Data => render_json(json!({
                    "subclutters": subs
                        .iter()
                        .map(|(s, b)| json!({
                            "vertices": s
                                .iter()
                                .map(|&v| vertex_label(&labels, v))
                                .collect::<Vec<_>>(),
                            "alpha0": b,
                        }))
                        .collect::<Vec<_>>(),
                })),
            })
        }
        Command::SymbolicPower { file, b } => {
            let (doc, c) = load(file)?;
            require_edges(&c, "symbolic power")?;
            let ideal = symbolic_power(&c, *b);
            let lines = ideal_lines(&doc.vertices, &ideal);
            Ok(match format {
                Format::Text => lines.iter().map(|l| l.clone() + "\n").collect(),
                Format::Data => render_json(json!({ "generators": lines })),
            })
        }
        Command::Power { file, i } => {
            let (doc, c) = load(file)?;
            let ideal = power(&edge_ideal(&c), *i);
            let lines = ideal_lines(&doc.vertices, &ideal);
            Ok(match format {
                Format::Text => lines.iter().map(|l| l.clone() + "\n").collect(),
                Format::Data => render_json(json!({ "generators": lines })),
            })
        }
        Command::ComparePowers { file, max_i } => {
            let (doc, c) = load(file)?;
            require_edges(&c, "power comparison")?;
            let edge = edge_ideal(&c);
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            for i in 1..=*max_i {
                let ordinary = power(&edge, i);
                let symbolic = symbolic_power(&c, i);
                if ideals_equal(&ordinary, &symbolic)? {
                    lines.push(format!("i={i}: equal"));
                    rows.push(json!({ "i": i, "equal": true }));
                } else {
                    // ordinary ⊆ symbolic always, so a witness is a symbolic
                    // generator outside the ordinary power
                    let witness = symbolic
                        .generators()
                        .iter()
                        .find(|g| !ordinary.generators().iter().any(|h| h.divides(g)))
                        .expect("unequal ideals have a witness");
                    let w = monomial_string(&doc.vertices, &witness.exponents);
                    lines.push(format!("i={i}: differ, witness {w} in symbolic only"));
                    rows.push(json!({ "i": i, "equal": false, "witness": w }));
                }
            }
            Ok(match format {
                Format::Text => lines.iter().map(|l| l.clone() + "\n").collect(),
                Format::Data => render_json(json!({ "comparisons": rows })),
            })
        }
        Command::Classify { file } => {
            let (doc, c) = load(file)?;
            let id = if doc.name.is_empty() {
                file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
            } else {
                doc.name.clone()
            };
            let report = classify(&c, &id, &ClassifyOptions { budget })?;
            let labels = label_map(&doc, &c);
            Ok(match format {
                Format::Text => report_text(&report, &labels),
                Format::Data => render_json(report_json(&report, &labels)),
            })
        }
        Command::CheckTheorem { file, r#box } => {
            let (_, c) = load(file)?;
            let bound: Vec<u32> = parse_csv(r#box, c.vertex_count(), "--box")?;
            let holds = check_main_theorem(&c, &bound)?;
            Ok(match format {
                Format::Text => format!("{holds}\n"),
                Format::Data => render_json(json!({ "holds": holds })),
            })
        }
    }
}
