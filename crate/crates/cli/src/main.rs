//! `mag`: inspect, traverse and export MultiAspect Graphs.

mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mag_core::io::{parse_mag, write_mag};
use mag_core::*;
use serde_json::{json, Value};

use render::{distance_json, distance_text, fields, join, pred_json, pred_text, table};

#[derive(Parser, Debug)]
#[command(name = "mag", version, about = "Inspect, traverse and export MultiAspect Graphs")]
struct Cli {
    /// Emit JSON instead of plain-text tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// A `.mag` file, or `builtin:T` / `builtin:R`.
    #[arg(value_name = "IN", conflicts_with = "input")]
    path: Option<String>,
    /// Same as the positional argument.
    #[arg(long, value_name = "IN")]
    input: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a MAG.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Order, companion tuple, sizes and trivial components.
    Info {
        #[command(flatten)]
        input: Input,
    },
    /// In- and outdegree of every (sub-determined) composite vertex.
    Degree {
        #[command(flatten)]
        input: Input,
        /// Sub-determination as a binary string, rightmost digit = first aspect.
        #[arg(long)]
        zeta: Option<String>,
        /// Count collapsed self-loops in a separate column.
        #[arg(long, requires = "zeta")]
        separate_loops: bool,
        /// Compute through matrix-vector products.
        #[arg(long)]
        algebraic: bool,
    },
    /// Breadth-first search from a source vertex.
    Bfs {
        #[command(flatten)]
        input: Input,
        /// Comma-separated labels; with --zeta, labels of the kept aspects only.
        #[arg(long)]
        source: String,
        #[arg(long)]
        zeta: Option<String>,
    },
    /// Depth-first search over all vertices.
    Dfs {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        zeta: Option<String>,
    },
    /// Write a matrix in Matrix Market format.
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        matrix: MatrixKind,
        /// Required by subdet-adjacency.
        #[arg(long)]
        zeta: Option<String>,
        /// Drop the rows/columns of trivial components.
        #[arg(long)]
        main_components: bool,
        /// Output path, `-` for standard output.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the sub-determined MAG as a `.mag` file.
    Subdet {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        zeta: String,
        /// Output path, `-` for standard output.
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MatrixKind {
    Adjacency,
    Incidence,
    Laplacian,
    WeightedLaplacian,
    NormalizedLaplacian,
    SubdetAdjacency,
    Elimination,
}

enum Failure {
    Usage(String),
    Domain(String),
}

type Outcome = std::result::Result<String, Failure>;

/// Loaded input with a display name for diagnostics.
struct Source {
    name: String,
    mag: Mag,
}

impl Source {
    fn fail(&self, e: MagError) -> Failure {
        Failure::Domain(format!("{}: {e}", self.name))
    }

    fn zeta(&self, z: &str) -> std::result::Result<SubDetermination, Failure> {
        SubDetermination::parse(z, self.mag.order()).map_err(|e| self.fail(e))
    }

    /// Label form of 1-based vertex `d` over `tau` (full or sub-determined).
    fn label(&self, tau: &CompanionTuple, zeta: Option<SubDetermination>, d: usize) -> String {
        let aspects = match zeta {
            Some(z) => self.mag.aspects().select(&z.kept()).expect("kept aspects are valid"),
            None => self.mag.aspects().clone(),
        };
        let v = tau.vertex_at(d).expect("index within range");
        format!("({})", aspects.labels(&v).join(","))
    }
}

fn load(input: &Input) -> std::result::Result<Source, Failure> {
    let spec = match (&input.path, &input.input) {
        (Some(p), None) | (None, Some(p)) => p.clone(),
        _ => return Err(Failure::Usage("an input file or --input is required".into())),
    };
    if let Some(name) = spec.strip_prefix("builtin:") {
        let mag = builtin_example(name).map_err(|e| Failure::Domain(e.to_string()))?;
        return Ok(Source { name: spec, mag });
    }
    let text = fs::read_to_string(&spec).map_err(|e| Failure::Domain(format!("{spec}: {e}")))?;
    let mag = parse_mag(&text).map_err(|e| Failure::Domain(format!("{spec}: {e}")))?;
    Ok(Source { name: spec, mag })
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Validate { input } => validate(&load(&input)?, json),
        Command::Info { input } => info(&load(&input)?, json),
        Command::Degree {
            input,
            zeta,
            separate_loops,
            algebraic,
        } => degree_cmd(&load(&input)?, zeta.as_deref(), separate_loops, algebraic, json),
        Command::Bfs { input, source, zeta } => bfs_cmd(&load(&input)?, &source, zeta.as_deref(), json),
        Command::Dfs { input, zeta } => dfs_cmd(&load(&input)?, zeta.as_deref(), json),
        Command::Export {
            input,
            matrix,
            zeta,
            main_components,
            output,
        } => export(&load(&input)?, matrix, zeta.as_deref(), main_components, &output, json),
        Command::Subdet { input, zeta, output } => subdet(&load(&input)?, &zeta, &output, json),
    }
}

fn validate(src: &Source, json: bool) -> Outcome {
    let m = &src.mag;
    Ok(if json {
        json!({
            "valid": true,
            "name": m.name(),
            "order": m.order(),
            "vertices": m.vertex_count(),
            "edges": m.edges().len(),
        })
        .to_string()
            + "\n"
    } else {
        format!(
            "ok: {} (order {}, {} composite vertices, {} edges)\n",
            src.name,
            m.order(),
            m.vertex_count(),
            m.edges().len()
        )
    })
}

fn info(src: &Source, json: bool) -> Outcome {
    let m = &src.mag;
    let tau = m.companion_tuple();
    let trivial = trivial_components(m);
    if json {
        let aspects: Vec<Value> = m
            .aspects()
            .aspects()
            .iter()
            .map(|a| json!({"name": a.name(), "elements": a.elements()}))
            .collect();
        return Ok(json!({
            "name": m.name(),
            "order": m.order(),
            "aspects": aspects,
            "tau": tau.sizes(),
            "vertices": m.vertex_count(),
            "edges": m.edges().len(),
            "trivial_components": trivial,
        })
        .to_string()
            + "\n");
    }
    let aspects: Vec<String> = m
        .aspects()
        .aspects()
        .iter()
        .map(|a| format!("{}({})", a.name(), a.len()))
        .collect();
    Ok(fields(&[
        ("name", m.name().to_string()),
        ("order", m.order().to_string()),
        ("aspects", aspects.join(" ")),
        ("tau", tau.to_string()),
        ("vertices", m.vertex_count().to_string()),
        ("edges", m.edges().len().to_string()),
        ("trivial", join(&trivial)),
    ]))
}

fn degree_cmd(src: &Source, zeta: Option<&str>, separate: bool, algebraic: bool, json: bool) -> Outcome {
    let m = &src.mag;
    let zeta = zeta.map(|z| src.zeta(z)).transpose()?;
    let jm = adjacency_matrix(m);
    let result = match (zeta, algebraic) {
        (None, false) => Ok(degree(m)),
        (None, true) => degree_algebraic(&jm),
        (Some(z), false) => sub_det_degree(m, z, separate),
        (Some(z), true) => sub_det_degree_algebraic(&jm, z, separate),
    }
    .map_err(|e| src.fail(e))?;
    if json {
        let mut out = json!({
            "tau": result.tau.sizes(),
            "indegree": result.indegree,
            "outdegree": result.outdegree,
        });
        if let Some(s) = &result.selfdegree {
            out["selfdegree"] = json!(s);
        }
        return Ok(out.to_string() + "\n");
    }
    let mut headers = vec!["index", "vertex", "in", "out"];
    if result.selfdegree.is_some() {
        headers.push("self");
    }
    let rows: Vec<Vec<String>> = (0..result.indegree.len())
        .map(|k| {
            let mut row = vec![
                (k + 1).to_string(),
                src.label(&result.tau, zeta, k + 1),
                result.indegree[k].to_string(),
                result.outdegree[k].to_string(),
            ];
            if let Some(s) = &result.selfdegree {
                row.push(s[k].to_string());
            }
            row
        })
        .collect();
    Ok(table(&headers, &rows))
}

fn bfs_cmd(src: &Source, source: &str, zeta: Option<&str>, json: bool) -> Outcome {
    let m = &src.mag;
    let jm = adjacency_matrix(m);
    let zeta = zeta.map(|z| src.zeta(z)).transpose()?;
    let result = match zeta {
        None => m.aspects().parse_vertex(source).and_then(|s| bfs(&jm, &s)),
        Some(z) => m
            .aspects()
            .select(&z.kept())
            .and_then(|a| a.parse_vertex(source))
            .and_then(|s| bfs_sub(&jm, z, &s)),
    }
    .map_err(|e| src.fail(e))?;
    if json {
        return Ok(json!({
            "tau": result.tau.sizes(),
            "vertices": result.vertices,
            "distance": distance_json(&result.distance),
            "pred": pred_json(&result.pred),
        })
        .to_string()
            + "\n");
    }
    let rows: Vec<Vec<String>> = (0..result.distance.len())
        .map(|k| {
            vec![
                (k + 1).to_string(),
                src.label(&result.tau, zeta, k + 1),
                distance_text(result.distance[k]),
                pred_text(result.pred[k]),
            ]
        })
        .collect();
    Ok(format!("vertices  {}\n", join(&result.vertices))
        + &table(&["index", "vertex", "distance", "pred"], &rows))
}

fn dfs_cmd(src: &Source, zeta: Option<&str>, json: bool) -> Outcome {
    let jm = adjacency_matrix(&src.mag);
    let zeta = zeta.map(|z| src.zeta(z)).transpose()?;
    let result = match zeta {
        None => dfs(&jm),
        Some(z) => dfs_sub(&jm, z),
    }
    .map_err(|e| src.fail(e))?;
    if json {
        return Ok(json!({
            "tau": result.tau.sizes(),
            "d": result.disc,
            "f": result.fin,
            "pred": pred_json(&result.pred),
        })
        .to_string()
            + "\n");
    }
    let rows: Vec<Vec<String>> = (0..result.disc.len())
        .map(|k| {
            vec![
                (k + 1).to_string(),
                src.label(&result.tau, zeta, k + 1),
                result.disc[k].to_string(),
                result.fin[k].to_string(),
                pred_text(result.pred[k]),
            ]
        })
        .collect();
    Ok(table(&["index", "vertex", "d", "f", "pred"], &rows))
}

fn build_matrix(src: &Source, kind: MatrixKind, zeta: Option<&str>, main: bool) -> std::result::Result<SparseMatrix, Failure> {
    let m = &src.mag;
    match (kind, zeta.is_some()) {
        (MatrixKind::SubdetAdjacency, false) => {
            return Err(Failure::Usage("subdet-adjacency requires --zeta".into()))
        }
        (MatrixKind::SubdetAdjacency, true) => {}
        (_, true) => return Err(Failure::Usage("--zeta only applies to subdet-adjacency".into())),
        _ => {}
    }
    if main && matches!(kind, MatrixKind::SubdetAdjacency | MatrixKind::Elimination) {
        return Err(Failure::Usage("--main-components does not apply to this matrix".into()));
    }
    let fail = |e| src.fail(e);
    let c = || incidence_matrix(m).matrix;
    let x = match kind {
        MatrixKind::Adjacency => adjacency_matrix(m).matrix,
        MatrixKind::Incidence => c(),
        MatrixKind::Laplacian => combinatorial_laplacian(&c()),
        MatrixKind::WeightedLaplacian => weighted_laplacian(&c(), &m.weights()).map_err(fail)?,
        MatrixKind::NormalizedLaplacian => normalized_laplacian(&c()),
        MatrixKind::Elimination => elimination_matrix(m),
        MatrixKind::SubdetAdjacency => {
            let z = src.zeta(zeta.unwrap_or_default())?;
            let jm = adjacency_matrix(m);
            let mz = sub_determination_matrix(&jm.tau, z).map_err(fail)?;
            sub_determined_adjacency(&jm.matrix, &mz).map_err(fail)?
        }
    };
    if !main {
        return Ok(x);
    }
    let mode = if kind == MatrixKind::Incidence {
        Elimination::Right
    } else {
        Elimination::TwoSided
    };
    main_components(&x, &elimination_matrix(m), mode).map_err(fail)
}

fn write_output(path: &PathBuf, bytes: &[u8]) -> std::result::Result<bool, Failure> {
    if path.as_os_str() == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(bytes)
            .and_then(|_| out.flush())
            .map_err(|e| Failure::Domain(format!("stdout: {e}")))?;
        return Ok(true);
    }
    fs::write(path, bytes).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    Ok(false)
}

fn export(src: &Source, kind: MatrixKind, zeta: Option<&str>, main: bool, output: &PathBuf, json: bool) -> Outcome {
    let x = build_matrix(src, kind, zeta, main)?;
    let mut buf = Vec::new();
    write_matrix_market(&x, &mut buf).map_err(|e| src.fail(e))?;
    if write_output(output, &buf)? {
        return Ok(String::new());
    }
    Ok(if json {
        json!({
            "path": output.display().to_string(),
            "rows": x.rows(),
            "cols": x.cols(),
            "nnz": x.nnz(),
        })
        .to_string()
            + "\n"
    } else {
        format!(
            "wrote {}x{} matrix with {} entries to {}\n",
            x.rows(),
            x.cols(),
            x.nnz(),
            output.display()
        )
    })
}

fn subdet(src: &Source, zeta: &str, output: &PathBuf, json: bool) -> Outcome {
    let z = src.zeta(zeta)?;
    let sub = sub_determine_mag(&src.mag, z).map_err(|e| src.fail(e))?;
    if write_output(output, write_mag(&sub).as_bytes())? {
        return Ok(String::new());
    }
    Ok(if json {
        json!({
            "path": output.display().to_string(),
            "tau": sub.companion_tuple().sizes(),
            "vertices": sub.vertex_count(),
            "edges": sub.edges().len(),
        })
        .to_string()
            + "\n"
    } else {
        format!(
            "wrote MAG with tau {} and {} edges to {}\n",
            sub.companion_tuple(),
            sub.edges().len(),
            output.display()
        )
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code().clamp(0, 255) as u8);
        }
    };
    match run(cli) {
        Ok(text) => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
