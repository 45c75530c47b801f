use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use balgraph::alexander::{alexander_check, complement, interior_subset};
use balgraph::construct::{conjecture_search, realize, SearchParams};
use balgraph::coxeter::{BruhatGraph, DihedralGroup, Permutation, SymmetricGroup};
use balgraph::digraph::{LabeledDigraph, VertexId};
use balgraph::fixtures;
use balgraph::ncpoly::{ab_to_cd, parse_cd};
use balgraph::qsym::{f_falling_interval, f_rising_interval, peak_membership, Basis};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "balgraph",
    version,
    about = "cd-indexes and balance of labeled acyclic digraphs"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cd-index of a bounded graph (or the ab-index with --ab).
    Cdindex {
        #[arg(long)]
        graph: String,
        /// Use the interval `x:y` instead of the whole graph.
        #[arg(long)]
        interval: Option<String>,
        #[arg(long)]
        ab: bool,
    },
    /// Decide whether a graph is balanced; exit 1 with a witness if not.
    Balance {
        #[arg(long)]
        graph: String,
        /// Also evaluate the three equivalent conditions separately.
        #[arg(long)]
        equivalence: bool,
    },
    /// Compare the falling sums of the restricted graphs for S and its complement.
    Alexander {
        #[arg(long)]
        graph: String,
        /// Comma-separated interior vertices; commas inside brackets are
        /// part of a name, so `{1},{1,3}` names two vertices.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        subset: Option<String>,
        /// Sweep every subset of the interior.
        #[arg(long)]
        all: bool,
    },
    /// Print the rising and falling quasisymmetric functions.
    Qsym {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        interval: Option<String>,
        #[arg(long, value_enum, ignore_case = true, default_value = "L")]
        basis: BasisArg,
    },
    /// Bruhat-graph invariants of an interval of S_n or I_2(m).
    Bruhat {
        #[arg(long = "type", value_enum, ignore_case = true)]
        kind: GroupType,
        /// `n` for type A, `m` for type I.
        #[arg(long)]
        n: usize,
        /// `u:v`; defaults to the whole group.
        #[arg(long)]
        interval: Option<String>,
        #[arg(long)]
        complete_cd: bool,
        #[arg(long)]
        poset_cd: bool,
        #[arg(long)]
        r_poly: bool,
        /// Write the interval graph as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a balanced linearly labeled graph with a given cd-index.
    Construct {
        #[arg(long)]
        cd: String,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for balanced graphs with a negative cd-coefficient; exit 1 if any is found.
    Search {
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = 4)]
        max_labels: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Write the built-in example graphs, or compare them with files on disk.
    Fixtures {
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Compare instead of writing; exit 1 on any difference.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    #[value(name = "M")]
    M,
    #[value(name = "L")]
    L,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupType {
    /// Symmetric group S_n.
    #[value(name = "A")]
    A,
    /// Dihedral group I_2(m).
    #[value(name = "I")]
    I,
}

struct Report {
    text: String,
    json: Value,
    negative: bool,
}

impl Report {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            negative: false,
        }
    }
}

/// A graph file, or the name of a built-in example when no such file exists.
fn load_graph(spec: &str) -> Result<LabeledDigraph> {
    let path = Path::new(spec);
    if path.exists() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        return LabeledDigraph::from_json(&text).with_context(|| format!("parsing {spec}"));
    }
    let stem = spec.trim_end_matches(".json");
    fixtures::all()
        .into_iter()
        .find(|(name, _)| name.trim_end_matches(".json") == stem)
        .map(|(_, g)| g)
        .ok_or_else(|| anyhow!("no such file or built-in graph: {spec}"))
}

fn split_pair(s: &str) -> Result<(&str, &str)> {
    s.split_once(':')
        .ok_or_else(|| anyhow!("expected an interval of the form x:y, got {s:?}"))
}

fn vertex(g: &LabeledDigraph, name: &str) -> Result<VertexId> {
    g.vertex(name)
        .ok_or_else(|| anyhow!("unknown vertex {name:?}"))
}

fn endpoints(g: &LabeledDigraph, interval: Option<&str>) -> Result<(VertexId, VertexId)> {
    match interval {
        Some(s) => {
            let (x, y) = split_pair(s)?;
            Ok((vertex(g, x)?, vertex(g, y)?))
        }
        None => g.proper_bounds().ok_or_else(|| {
            anyhow!("graph does not have a unique source and a distinct unique sink")
        }),
    }
}

fn cdindex(graph: &str, interval: Option<&str>, ab: bool) -> Result<Report> {
    let g = load_graph(graph)?;
    let (x, y) = endpoints(&g, interval)?;
    let psi = g.ab_index(x, y)?;
    let span = json!([g.vertex_name(x), g.vertex_name(y)]);
    if ab {
        return Ok(Report::ok(
            psi.to_string(),
            json!({"interval": span, "ab_index": psi.to_string()}),
        ));
    }
    Ok(match ab_to_cd(&psi) {
        Ok(cd) => Report::ok(
            cd.to_string(),
            json!({"interval": span, "cd_index": cd.to_string()}),
        ),
        Err(e) => Report {
            text: format!("no cd-index\nab-index: {psi}"),
            json: json!({
                "interval": span,
                "cd_index": null,
                "ab_index": psi.to_string(),
                "residual": e.residual.to_string(),
            }),
            negative: true,
        },
    })
}

fn balance(graph: &str, equivalence: bool) -> Result<Report> {
    let g = load_graph(graph)?;
    let r = g.is_balanced();
    let mut lines = Vec::new();
    let mut out = json!({"balanced": r.balanced});
    match &r.witness {
        None => {
            lines.push("balanced".to_string());
            if let Some(cd) = &r.cd_index {
                lines.push(format!("cd-index: {cd}"));
                out["cd_index"] = json!(cd.to_string());
            }
        }
        Some(w) => {
            lines.push("unbalanced".to_string());
            lines.push(format!(
                "witness: [{}, {}] length {}: {} rising, {} falling",
                w.x, w.y, w.length, w.rising, w.falling
            ));
            out["witness"] = json!({
                "x": w.x,
                "y": w.y,
                "length": w.length,
                "rising": w.rising.to_string(),
                "falling": w.falling.to_string(),
            });
        }
    }
    if equivalence {
        let e = g.balance_equivalence();
        lines.push(format!(
            "all lengths: {}\neven lengths: {}\ncd-index exists: {}",
            e.all_lengths, e.even_lengths, e.cd_exists
        ));
        out["equivalence"] = serde_json::to_value(e)?;
    }
    Ok(Report {
        text: lines.join("\n"),
        json: out,
        negative: !r.balanced,
    })
}

/// Splits on commas that are not inside `{}`, `()` or `[]`.
fn split_names(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '{' | '(' | '[' => depth += 1,
            '}' | ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|n| !n.is_empty());
    out
}

fn alexander(graph: &str, subset: Option<&str>, all: bool) -> Result<Report> {
    let g = load_graph(graph)?;
    let subsets: Vec<Vec<VertexId>> = if all {
        let (s, t) = g
            .proper_bounds()
            .ok_or_else(|| anyhow!("graph is not bounded"))?;
        let interior: Vec<VertexId> = (0..g.vertex_count())
            .filter(|&v| v != s && v != t)
            .collect();
        if interior.len() > 20 {
            bail!("{} interior vertices is too many for --all", interior.len());
        }
        (0u32..1 << interior.len())
            .map(|mask| {
                interior
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect()
    } else {
        vec![interior_subset(&g, &split_names(subset.unwrap_or("")))?]
    };
    let names = |vs: &[VertexId]| -> Vec<String> {
        vs.iter().map(|&v| g.vertex_name(v).to_string()).collect()
    };
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut failures = 0;
    for s in &subsets {
        let check = alexander_check(&g, s)?;
        if !check.equal {
            failures += 1;
        }
        let (sn, tn) = (names(s), names(&complement(&g, s)));
        lines.push(format!(
            "S={{{}}} T={{{}}} lhs={} rhs={} {}",
            sn.join(","),
            tn.join(","),
            check.lhs,
            check.rhs,
            if check.equal { "equal" } else { "DIFFERENT" }
        ));
        rows.push(json!({
            "s": sn,
            "t": tn,
            "lhs": check.lhs.to_string(),
            "rhs": check.rhs.to_string(),
            "equal": check.equal,
        }));
    }
    if all {
        lines.push(format!("{} subsets, {} unequal", subsets.len(), failures));
    }
    Ok(Report {
        text: lines.join("\n"),
        json: json!({"checks": rows, "unequal": failures}),
        negative: failures > 0,
    })
}

fn qsym(graph: &str, interval: Option<&str>, basis: BasisArg) -> Result<Report> {
    let g = load_graph(graph)?;
    let (x, y) = endpoints(&g, interval)?;
    let b = match basis {
        BasisArg::M => Basis::M,
        BasisArg::L => Basis::L,
    };
    let rising = f_rising_interval(&g, x, y);
    let falling = f_falling_interval(&g, x, y);
    let peak = peak_membership(&rising);
    let (r, f) = (rising.render(b), falling.render(b));
    Ok(Report::ok(
        format!("rising: {r}\nfalling: {f}\npeak algebra: {peak}"),
        json!({
            "interval": [g.vertex_name(x), g.vertex_name(y)],
            "basis": match basis { BasisArg::M => "M", BasisArg::L => "L" },
            "rising": r,
            "falling": f,
            "peak": peak,
        }),
    ))
}

struct BruhatArgs<'a> {
    kind: GroupType,
    n: usize,
    interval: Option<&'a str>,
    complete_cd: bool,
    poset_cd: bool,
    r_poly: bool,
    out: Option<&'a Path>,
}

fn bruhat(a: BruhatArgs) -> Result<Report> {
    let b = match a.kind {
        GroupType::A => BruhatGraph::new(&SymmetricGroup::new(a.n)?),
        GroupType::I => BruhatGraph::new(&DihedralGroup::new(a.n)?),
    };
    let lookup = |name: &str| -> Result<VertexId> {
        let name = match a.kind {
            GroupType::A => name.parse::<Permutation>()?.to_string(),
            GroupType::I => name.to_string(),
        };
        Ok(b.element(&name)?)
    };
    let (u, v) = match a.interval {
        Some(s) => {
            let (u, v) = split_pair(s)?;
            (lookup(u)?, lookup(v)?)
        }
        None => (b.identity(), b.top()),
    };
    if let Some(path) = a.out {
        fs::write(path, b.interval(u, v)?.to_json())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let mut wanted = Vec::new();
    if a.complete_cd || !(a.poset_cd || a.r_poly) {
        wanted.push(("complete_cd", b.complete_cd_index(u, v)?.to_string()));
    }
    if a.poset_cd {
        wanted.push(("poset_cd", b.poset_cd_index(u, v)?.to_string()));
    }
    if a.r_poly {
        let r = b.r_polynomial_recursive(u, v);
        let dyer = b.r_polynomial_dyer(u, v)?;
        if dyer != r {
            bail!("R-polynomial mismatch: recursion {r}, rising paths {dyer}");
        }
        wanted.push(("r_poly", r.to_string()));
    }
    let text = if wanted.len() == 1 {
        wanted[0].1.clone()
    } else {
        wanted
            .iter()
            .map(|(k, v)| format!("{}: {v}", k.replace('_', "-")))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let mut out = json!({
        "interval": [b.name(u), b.name(v)],
        "length": b.length(v) - b.length(u),
    });
    for (k, val) in wanted {
        out[k] = json!(val);
    }
    Ok(Report::ok(text, out))
}

fn construct(cd: &str, out: Option<&Path>) -> Result<Report> {
    let w = parse_cd(cd)?;
    let g = realize(&w)?;
    let check = g.cd_index()?;
    if check != w {
        bail!("constructed graph has cd-index {check}, expected {w}");
    }
    let summary = format!(
        "{} vertices, {} edges, cd-index {}",
        g.vertex_count(),
        g.edge_count(),
        check
    );
    let graph_json: Value = serde_json::from_str(&g.to_json())?;
    let text = match out {
        Some(path) => {
            fs::write(path, g.to_json()).with_context(|| format!("writing {}", path.display()))?;
            format!("{summary}\nwrote {}", path.display())
        }
        None => g.to_json().trim_end().to_string(),
    };
    Ok(Report::ok(
        text,
        json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "cd_index": check.to_string(),
            "graph": graph_json,
        }),
    ))
}

fn search(p: SearchParams) -> Result<Report> {
    if p.max_vertices < 2 || p.max_labels < 1 {
        bail!("need --max-vertices ≥ 2 and --max-labels ≥ 1");
    }
    let r = conjecture_search(&p);
    let mut lines = vec![format!(
        "seed {}: {} trials, {} balanced, {} with cd-index ≠ 1, {} negative",
        r.seed,
        r.trials,
        r.balanced,
        r.nontrivial,
        r.counterexamples.len()
    )];
    for c in &r.counterexamples {
        lines.push(format!("trial {}: {}", c.trial, c.cd_index));
    }
    Ok(Report {
        text: lines.join("\n"),
        negative: !r.counterexamples.is_empty(),
        json: serde_json::to_value(&r)?,
    })
}

fn fixtures_cmd(dir: &Path, check: bool) -> Result<Report> {
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut differing = 0;
    if !check {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    for (name, g) in fixtures::all() {
        let path = dir.join(name);
        let text = g.to_json();
        let status = if check {
            match fs::read_to_string(&path) {
                Ok(existing) if existing == text => "same",
                Ok(_) => "different",
                Err(_) => "missing",
            }
        } else {
            fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
            "written"
        };
        if status == "different" || status == "missing" {
            differing += 1;
        }
        lines.push(format!("{status} {}", path.display()));
        rows.push(json!({"file": path.display().to_string(), "status": status}));
    }
    Ok(Report {
        text: lines.join("\n"),
        json: json!({"files": rows}),
        negative: differing > 0,
    })
}

fn run(cli: Cli) -> Result<Report> {
    match cli.command {
        Command::Cdindex {
            graph,
            interval,
            ab,
        } => cdindex(&graph, interval.as_deref(), ab),
        Command::Balance { graph, equivalence } => balance(&graph, equivalence),
        Command::Alexander { graph, subset, all } => alexander(&graph, subset.as_deref(), all),
        Command::Qsym {
            graph,
            interval,
            basis,
        } => qsym(&graph, interval.as_deref(), basis),
        Command::Bruhat {
            kind,
            n,
            interval,
            complete_cd,
            poset_cd,
            r_poly,
            out,
        } => bruhat(BruhatArgs {
            kind,
            n,
            interval: interval.as_deref(),
            complete_cd,
            poset_cd,
            r_poly,
            out: out.as_deref(),
        }),
        Command::Construct { cd, out } => construct(&cd, out.as_deref()),
        Command::Search {
            trials,
            max_vertices,
            max_labels,
            seed,
        } => search(SearchParams {
            seed,
            trials,
            max_vertices,
            max_labels,
        }),
        Command::Fixtures { out, check } => fixtures_cmd(&out, check),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    let mut stdout = std::io::stdout().lock();
    match run(cli) {
        Ok(r) => {
            let body = if as_json {
                serde_json::to_string_pretty(&r.json).expect("json values serialize")
            } else {
                r.text
            };
            let _ = writeln!(stdout, "{body}");
            ExitCode::from(if r.negative { 1 } else { 0 })
        }
        Err(e) => {
            if as_json {
                let _ = writeln!(stdout, "{}", json!({"error": format!("{e:#}")}));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
