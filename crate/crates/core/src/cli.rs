//! Command-line front end. [`run`] writes everything to the given sink so
//! the commands can be driven from tests without spawning a process.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::certifier::{
    certify, scan_range, Certificate, ScanReport, Verdict, VertexCollision, DEFAULT_SCAN_SPAN,
};
use crate::closed_forms::{sums_report, SumsReport};
use crate::error::Error;
use crate::graph::{
    parse_edge_list, serialize, EdgeList, ExplicitLabeling, LabelKind, SimpleGraph, Structure,
};
use crate::labeling::{label_all, label_inverse, label_subgraph, Order};
use crate::oracle::{
    check_antimagic, check_oriented_antimagic, check_total, exhaustive_antimagic,
    exhaustive_orientation_antimagic, Witness, DEFAULT_LABELING_CAP, DEFAULT_ORIENTATION_CAP,
};

#[derive(Debug, Parser)]
#[command(
    name = "kn-antimagic",
    version,
    about = "Canonical labelings of K_n and antimagic certification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical labeling of K_n, invert one label, or label a subgraph.
    Label {
        #[arg(required_unless_present = "graph")]
        n: Option<usize>,
        /// Print the edge carrying this label instead.
        #[arg(long, value_name = "K", conflicts_with = "graph")]
        inverse: Option<u64>,
        /// Label the edges of the graph in FILE.
        #[arg(long, value_name = "FILE", conflicts_with = "n")]
        graph: Option<PathBuf>,
    },
    /// Per-vertex in/out/total/oriented sums and vertex weights.
    Sums {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Certify every property for one order.
    Certify {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Certify every order in LO..=HI.
    Scan {
        lo: usize,
        hi: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_SCAN_SPAN)]
        max_span: usize,
    },
    /// Check a labeled edge-list file against the definitions.
    Verify {
        file: PathBuf,
        /// Check oriented sums (undirected input gets the canonical orientation).
        #[arg(long, conflicts_with = "total")]
        directed: bool,
        /// Check the labels as a total labeling.
        #[arg(long)]
        total: bool,
    },
    /// Exhaustively search labelings (or orientations and labelings) of a graph.
    Search {
        file: PathBuf,
        #[arg(long)]
        orientations: bool,
        /// Maximum edge count to search [default: 10, or 8 with --orientations].
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{path}: {source}")]
    File { path: String, source: Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match cli.command {
        Command::Label { n, inverse, graph } => cmd_label(n, inverse, graph)?,
        Command::Sums { n, format } => cmd_sums(n, format)?,
        Command::Certify { n, format } => {
            let cert = certify(Order::new(n)?)?;
            match format {
                Format::Table => render_certificate(&cert),
                Format::Json => to_json(&certificate_json(&cert)),
            }
        }
        Command::Scan {
            lo,
            hi,
            format,
            max_span,
        } => {
            let report = scan_range(lo, hi, max_span)?;
            match format {
                Format::Table => render_scan(&report),
                Format::Json => to_json(&scan_json(&report)),
            }
        }
        Command::Verify {
            file,
            directed,
            total,
        } => cmd_verify(&file, directed, total)?,
        Command::Search {
            file,
            orientations,
            cap,
        } => cmd_search(&file, orientations, cap)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn read_edge_list(path: &PathBuf) -> Result<EdgeList, CliError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: display.clone(),
        source,
    })?;
    parse_edge_list(&text).map_err(|source| CliError::File {
        path: display,
        source,
    })
}

fn cmd_label(
    n: Option<usize>,
    inverse: Option<u64>,
    graph: Option<PathBuf>,
) -> Result<String, CliError> {
    if let Some(path) = graph {
        let list = read_edge_list(&path)?;
        let (structure, simple) = match list.structure {
            Structure::Undirected(g) => (None, g),
            Structure::Directed(d) if d.is_canonical() => {
                let g = d.underlying();
                (Some(d), g)
            }
            Structure::Directed(_) => {
                return Err(CliError::Usage(
                    "only canonically oriented (low -> high) arcs can be labeled".into(),
                ))
            }
        };
        let labeling = ExplicitLabeling::from(&label_subgraph(&simple)?);
        let structure = match structure {
            Some(d) => Structure::Directed(d),
            None => Structure::Undirected(simple),
        };
        return Ok(serialize(&EdgeList::labeled(structure, labeling)));
    }
    let order = Order::new(n.expect("clap enforces n without --graph"))?;
    if let Some(k) = inverse {
        let p = label_inverse(order, k)?;
        return Ok(format!("{} {}\n", p.i(), p.j()));
    }
    let labeling = ExplicitLabeling::from(&label_all(order));
    Ok(serialize(&EdgeList::labeled(
        Structure::Undirected(SimpleGraph::complete(order)),
        labeling,
    )))
}

fn cmd_sums(n: usize, format: Format) -> Result<String, CliError> {
    let report = sums_report(Order::new(n)?)?;
    Ok(match format {
        Format::Table => render_sums(&report),
        Format::Json => to_json(&serde_json::to_value(&report).expect("report serializes")),
    })
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "{}", parts.join("  ")).unwrap();
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn render_sums(report: &SumsReport) -> String {
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            [
                r.vertex as i128,
                r.in_sum,
                r.out_sum,
                r.total_sum,
                r.oriented_sum,
                r.vertex_weight,
            ]
            .iter()
            .map(|v| v.to_string())
            .collect()
        })
        .collect();
    let mut out = format!("n = {}\n", report.order);
    out += &table(
        &[
            "vertex",
            "in_sum",
            "out_sum",
            "total_sum",
            "oriented_sum",
            "vertex_weight",
        ],
        &rows,
    );
    writeln!(out, "closed_vs_direct_ok: {}", report.closed_vs_direct_ok).unwrap();
    writeln!(out, "sums_distinct: {}", report.sums_distinct).unwrap();
    if !report.sums_distinct {
        out += "warning: vertex sums are not pairwise distinct\n";
    }
    out
}

fn verdict_text(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "true",
        Verdict::Fails => "false",
        Verdict::NotApplicable => "n/a",
    }
}

fn vertex_collision_text(c: &VertexCollision) -> String {
    format!("v{},v{} both {}", c.first, c.second, c.value)
}

pub fn render_certificate(c: &Certificate) -> String {
    let mut out = format!("n = {}\n", c.order);
    for (name, v) in [
        ("antimagic_ok", c.antimagic_ok),
        ("vertex_total_ok", c.vertex_total_ok),
        ("edge_total_ok", c.edge_total_ok),
        ("totally_total_ok", c.totally_total_ok),
        ("oriented_ok", c.oriented_ok),
    ] {
        writeln!(out, "{name}: {}", verdict_text(v)).unwrap();
    }
    for (name, b) in [
        ("vertex_sums_increasing", c.vertex_sums_increasing),
        ("in_sums_increasing", c.in_sums_increasing),
        ("vertex_weights_increasing", c.vertex_weights_increasing),
        ("detectors_agree", c.detectors_agree),
        ("oriented_methods_agree", c.oriented_methods_agree),
    ] {
        writeln!(out, "{name}: {b}").unwrap();
    }
    for (name, w) in [
        ("vertex sum collision", &c.vertex_sum_witness),
        ("vertex weight collision", &c.vertex_weight_witness),
        ("oriented sum collision", &c.oriented_witness),
    ] {
        if let Some(w) = w {
            writeln!(out, "{name}: {}", vertex_collision_text(w)).unwrap();
        }
    }
    if !c.collisions.is_empty() {
        writeln!(out, "edge weight collisions: {}", c.collisions.len()).unwrap();
        for w in &c.collisions {
            writeln!(out, "  {}~{} weight {}", w.first, w.second, w.weight).unwrap();
        }
    }
    if !c.exceptions.is_empty() {
        writeln!(
            out,
            "exception quadruples (i,i',j',j): {}",
            c.exceptions.len()
        )
        .unwrap();
        for q in &c.exceptions {
            writeln!(out, "  ({},{},{},{})", q.i, q.i_prime, q.j_prime, q.j).unwrap();
        }
    }
    out
}

pub fn certificate_json(c: &Certificate) -> Value {
    json!({
        "order": c.order,
        "flags": {
            "antimagic_ok": c.antimagic_ok,
            "vertex_total_ok": c.vertex_total_ok,
            "edge_total_ok": c.edge_total_ok,
            "totally_total_ok": c.totally_total_ok,
            "oriented_ok": c.oriented_ok,
            "vertex_sums_increasing": c.vertex_sums_increasing,
            "in_sums_increasing": c.in_sums_increasing,
            "vertex_weights_increasing": c.vertex_weights_increasing,
            "detectors_agree": c.detectors_agree,
            "oriented_methods_agree": c.oriented_methods_agree,
        },
        "witnesses": {
            "vertex_sum": c.vertex_sum_witness,
            "vertex_weight": c.vertex_weight_witness,
            "oriented_sum": c.oriented_witness,
            "collisions": c.collisions,
            "exceptions": c.exceptions,
        },
    })
}

pub fn render_scan(report: &ScanReport) -> String {
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|c| {
            let mut row = vec![c.order.to_string()];
            row.extend(
                [
                    c.antimagic_ok,
                    c.vertex_total_ok,
                    c.edge_total_ok,
                    c.totally_total_ok,
                    c.oriented_ok,
                ]
                .map(|v| verdict_text(v).to_string()),
            );
            row.push(c.collisions.len().to_string());
            row
        })
        .collect();
    let mut out = table(
        &[
            "n",
            "antimagic_ok",
            "vertex_total_ok",
            "edge_total_ok",
            "totally_total_ok",
            "oriented_ok",
            "collisions",
        ],
        &rows,
    );
    let certified: Vec<String> = report
        .edge_total_certified
        .iter()
        .map(|n| n.to_string())
        .collect();
    writeln!(out, "edge_total_ok for n in: {}", certified.join(" ")).unwrap();
    out
}

pub fn scan_json(report: &ScanReport) -> Value {
    json!({
        "rows": report.rows.iter().map(certificate_json).collect::<Vec<_>>(),
        "edge_total_certified": report.edge_total_certified,
    })
}

fn witness_text(w: &Witness) -> String {
    format!("{},{} both {}", w.first, w.second, w.value)
}

fn join(values: &[i128]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_verify(path: &PathBuf, directed: bool, total: bool) -> Result<String, CliError> {
    let list = read_edge_list(path)?;
    let file_err = |source: Error| CliError::File {
        path: path.display().to_string(),
        source,
    };
    let labeling = list.labeling.clone().ok_or_else(|| {
        file_err(Error::MissingLabel(
            "every edge (file has no label column)".into(),
        ))
    })?;

    if total {
        let flags = match &list.structure {
            Structure::Undirected(g) => check_total(g, &labeling),
            Structure::Directed(d) => check_total(d, &labeling),
        };
        let mut out = String::new();
        writeln!(out, "total: {}", flags.is_total).unwrap();
        writeln!(out, "super: {}", flags.is_super).unwrap();
        for (name, ok, w) in [
            (
                "vertex-antimagic-total",
                flags.vertex_antimagic_total,
                &flags.vertex_witness,
            ),
            (
                "edge-antimagic-total",
                flags.edge_antimagic_total,
                &flags.edge_witness,
            ),
        ] {
            match w {
                Some(w) if !ok => {
                    writeln!(out, "{name}: false (collision at {})", w.value).unwrap();
                    writeln!(out, "  witness: {}~{}", w.first, w.second).unwrap();
                }
                _ => writeln!(out, "{name}: {ok}").unwrap(),
            }
        }
        writeln!(
            out,
            "totally-antimagic-total: {}",
            flags.totally_antimagic_total
        )
        .unwrap();
        if !flags.vertex_weights.is_empty() {
            writeln!(out, "vertex weights: {}", join(&flags.vertex_weights)).unwrap();
            writeln!(out, "edge weights: {}", join(&flags.edge_weights)).unwrap();
        }
        return Ok(out);
    }

    if labeling.kind != LabelKind::EdgeOnly {
        return Err(file_err(Error::NotBijective {
            expected_max: list.structure.edge_keys().len() as u64,
            detail: "edge labels must be 1..=l (use --total for total labelings)".into(),
        }));
    }

    if directed {
        let (digraph, labeling) = match list.structure {
            Structure::Directed(d) => (d, labeling),
            Structure::Undirected(g) => (g.canonical_orientation(), labeling),
        };
        let r = check_oriented_antimagic(&digraph, &labeling).map_err(file_err)?;
        return Ok(match r.witness {
            None => format!("oriented antimagic: oriented sums {}\n", join(&r.values)),
            Some(w) => format!(
                "NOT oriented antimagic: {}\noriented sums {}\n",
                witness_text(&w),
                join(&r.values)
            ),
        });
    }

    let (graph, labeling) = match list.structure {
        Structure::Undirected(g) => (g, labeling),
        Structure::Directed(d) => {
            let edges = labeling
                .edges
                .iter()
                .map(|(&(u, v), &k)| ((u.min(v), u.max(v)), k));
            (d.underlying(), ExplicitLabeling::edge_only(edges))
        }
    };
    let r = check_antimagic(&graph, &labeling).map_err(file_err)?;
    Ok(match r.witness {
        None => format!("antimagic: sums {}\n", join(&r.values)),
        Some(w) => format!(
            "NOT antimagic: {}\nsums {}\n",
            witness_text(&w),
            join(&r.values)
        ),
    })
}

fn cmd_search(path: &PathBuf, orientations: bool, cap: Option<usize>) -> Result<String, CliError> {
    let list = read_edge_list(path)?;
    let graph = match list.structure {
        Structure::Undirected(g) => g,
        Structure::Directed(d) => d.underlying(),
    };
    let mut out = String::new();
    if orientations {
        let outcome =
            exhaustive_orientation_antimagic(&graph, cap.unwrap_or(DEFAULT_ORIENTATION_CAP))?;
        let count = outcome.count.unwrap_or(0);
        if outcome.exists {
            writeln!(out, "antimagic orientation exists").unwrap();
        } else {
            writeln!(out, "no antimagic orientation").unwrap();
        }
        writeln!(
            out,
            "count: {count} of {} (orientation, labeling) pairs",
            outcome.searched
        )
        .unwrap();
        if let Some(ex) = outcome.example {
            let digraph = ex.digraph.expect("orientation searches return a digraph");
            out += "witness:\n";
            out += &serialize(&EdgeList::labeled(
                Structure::Directed(digraph),
                ex.labeling,
            ));
        }
    } else {
        let outcome = exhaustive_antimagic(&graph, cap.unwrap_or(DEFAULT_LABELING_CAP))?;
        let count = outcome.count.unwrap_or(0);
        if outcome.exists {
            writeln!(out, "antimagic labeling exists").unwrap();
        } else {
            writeln!(out, "not antimagic").unwrap();
        }
        writeln!(out, "count: {count} of {} labelings", outcome.searched).unwrap();
        if let Some(ex) = outcome.example {
            out += "witness:\n";
            out += &serialize(&EdgeList::labeled(
                Structure::Undirected(graph),
                ex.labeling,
            ));
        }
    }
    Ok(out)
}
