use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use golden8::constants::{by_name, NAMES};
use golden8::identities::{
    printed_transcription_probe, run_named, schlafli_probe, IdentityReport, Suite, VERIFIER_NAMES,
};
use golden8::lattice;
use golden8::projection::{self, Basis};
use golden8::roots::{self, EnumerationRule, PairingMode};
use golden8::ExactMatrix;

#[derive(Parser)]
#[command(name = "golden8", version, about = "Exact checks for the golden-ratio matrix U, E8 and hull projections")]
struct Cli {
    /// Write the report into this directory instead of stdout.
    #[arg(long, global = true, env = "GOLDEN8_OUT_DIR")]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity battery.
    Verify {
        /// Run one verifier family only.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(VERIFIER_NAMES))]
        only: Option<String>,
        /// Substitute U (built-in name or matrix file), e.g. U_printed.
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Show cmU^n ± cmU^-n scalars.
    Powers {
        /// Single exponent (1..=12); default runs 1..=10.
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..=12))]
        n: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate positive roots of a Cartan-type matrix.
    Roots(RootsArgs),
    /// E8, Hamming code and Construction A checks.
    Lattice {
        #[arg(long, value_enum, default_value = "all")]
        check: LatticeCheck,
        #[arg(long)]
        json: bool,
    },
    /// Project cmU vertices onto coordinate triples and peel hulls.
    Project(ProjectArgs),
    /// Print a built-in matrix.
    Dump {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(NAMES))]
        name: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct RootsArgs {
    /// Built-in name or path to a matrix literal file.
    #[arg(long, default_value = "cmU")]
    matrix: String,
    #[arg(long, value_enum, default_value = "normalized")]
    mode: Mode,
    #[arg(long, default_value_t = 10)]
    max_height: u32,
    /// Keep one record per discovery path.
    #[arg(long)]
    no_dedup: bool,
    #[arg(long, group = "roots_format")]
    dot: bool,
    #[arg(long, group = "roots_format")]
    csv: bool,
    #[arg(long, group = "roots_format")]
    json: bool,
}

#[derive(Args)]
struct ProjectArgs {
    /// Comma-separated 1-based coordinates, e.g. 2,3,4.
    #[arg(long, value_delimiter = ',', conflicts_with = "all")]
    dims: Option<Vec<usize>>,
    /// All 56 coordinate triples.
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "u")]
    basis: BasisArg,
    #[arg(long, value_enum, default_value = "relaxed")]
    mode: Mode,
    #[arg(long, default_value_t = 8)]
    max_height: u32,
    #[arg(long, group = "project_format")]
    json: bool,
    #[arg(long, group = "project_format")]
    csv: bool,
    /// Directory for per-projection OBJ meshes.
    #[arg(long)]
    obj: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Normalized,
    Raw,
    Relaxed,
}

impl From<Mode> for PairingMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Normalized => PairingMode::Normalized,
            Mode::Raw => PairingMode::Raw,
            Mode::Relaxed => PairingMode::Relaxed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "cmU", alias = "cmu")]
    CmU,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeCheck {
    Roots,
    Hamming,
    ConstructionA,
    HadamardMap,
    All,
}

/// A rendered report: file extension, body and whether every check held.
struct Output {
    name: &'static str,
    ext: &'static str,
    body: String,
    ok: bool,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<golden8::Error> for Failure {
    fn from(e: golden8::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn envelope(command: &str, ok: bool, data: impl Serialize) -> String {
    let v = json!({ "command": command, "ok": ok, "data": data });
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn resolve_matrix(spec: &str) -> Result<ExactMatrix, Failure> {
    if let Some(m) = by_name(spec) {
        return Ok(m);
    }
    let text = fs::read_to_string(spec)
        .map_err(|e| Failure::Usage(format!("{spec:?} is neither a built-in matrix ({}) nor a readable file: {e}", NAMES.join(", "))))?;
    Ok(ExactMatrix::parse_literal(&text)?)
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn report_line(r: &IdentityReport) -> String {
    let mut line = format!("[{}] {}", status(r.holds), r.name);
    if let Some(w) = &r.witness {
        let at = match (w.row, w.col) {
            (Some(i), Some(j)) => format!(" at ({i},{j})"),
            _ => String::new(),
        };
        line += &format!(": expected {}, got {}{at}", w.expected, w.actual);
    }
    if let Some(d) = &r.detail {
        line += &format!(" ({d})");
    }
    line
}

fn verify(only: Option<String>, u: Option<String>, as_json: bool) -> Result<Output, Failure> {
    let suite = match u {
        Some(spec) => {
            let m = resolve_matrix(&spec)?;
            if m.dim() != 8 {
                return Err(Failure::Usage(format!("--u needs an 8x8 matrix, {spec} is {0}x{0}", m.dim())));
            }
            Suite::with_u(m)
        }
        None => Suite::default(),
    };
    let reports = match &only {
        Some(name) => run_named(&suite, name).expect("validated by clap"),
        None => suite.run_all(),
    };
    let probes = if only.is_none() {
        vec![schlafli_probe(), printed_transcription_probe()]
    } else {
        Vec::new()
    };
    let ok = reports.iter().all(|r| r.holds);
    let body = if as_json {
        envelope("verify", ok, json!({ "reports": reports, "probes": probes }))
    } else {
        let mut s = String::new();
        for r in &reports {
            s += &report_line(r);
            s.push('\n');
        }
        for p in &probes {
            s += &format!("[probe] {}: {} ({})\n", p.name, if p.matches { "matches" } else { "differs" }, p.finding);
        }
        s += &format!("{} of {} identities hold\n", reports.iter().filter(|r| r.holds).count(), reports.len());
        s
    };
    Ok(Output {
        name: "verify",
        ext: if as_json { "json" } else { "txt" },
        body,
        ok,
    })
}

fn powers(n: Option<u32>, as_json: bool) -> Result<Output, Failure> {
    let suite = Suite::default();
    let range: Vec<u32> = match n {
        Some(n) => vec![n],
        None => (1..=10).collect(),
    };
    let patterns = range
        .into_iter()
        .map(|n| suite.verify_power_pattern(n))
        .collect::<golden8::Result<Vec<_>>>()?;
    let ok = patterns.iter().all(|p| p.sum_report.holds && p.diff_report.holds);
    let body = if as_json {
        envelope("powers", ok, json!({ "patterns": patterns }))
    } else {
        patterns
            .iter()
            .map(|p| {
                format!(
                    "n={}: sum scalar {}, diff scalar {}, integer side {} [{}]\n",
                    p.n,
                    golden8::field::format_sqrt5(&p.sum_scalar),
                    golden8::field::format_sqrt5(&p.diff_scalar),
                    p.integer_side,
                    status(p.sum_report.holds && p.diff_report.holds)
                )
            })
            .collect()
    };
    Ok(Output {
        name: "powers",
        ext: if as_json { "json" } else { "txt" },
        body,
        ok,
    })
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).expect("in-memory csv");
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

fn roots_cmd(a: RootsArgs) -> Result<Output, Failure> {
    let m = resolve_matrix(&a.matrix)?;
    let rule = EnumerationRule {
        mode: a.mode.into(),
        max_height: a.max_height,
        dedup: !a.no_dedup,
    };
    let sys = roots::enumerate(&m, rule)?;
    let edges = roots::hasse(&sys);
    let weights = roots::weights_table(&sys);
    let (ext, body) = if a.dot {
        ("dot", roots::emit_hasse_dot(&edges, &sys))
    } else if a.csv {
        let body = csv_string(|w| {
            w.write_record(["index", "height", "coeffs", "weight", "parents"])?;
            for (i, r) in sys.roots.iter().enumerate() {
                let weight: Vec<String> = r.weight.iter().map(ToString::to_string).collect();
                let parents: Vec<String> = r.parents.iter().map(|(p, j)| format!("{p}+e{}", j + 1)).collect();
                w.write_record([
                    i.to_string(),
                    r.height.to_string(),
                    r.coeff_string(),
                    weight.join(";"),
                    parents.join(";"),
                ])?;
            }
            Ok(())
        });
        ("csv", body)
    } else if a.json {
        let data = json!({
            "matrix": a.matrix,
            "rule": rule,
            "count": sys.len(),
            "max_height": sys.max_height(),
            "cumulative": sys.cumulative_counts(),
            "distinct_weights": sys.distinct_weight_count(),
            "all_integer_weights": weights.all_integer,
            "roots": sys.roots,
            "hasse_edges": edges,
        });
        ("json", envelope("roots", true, data))
    } else {
        let mut s = format!(
            "{} positive roots (max height {}, {} mode, max_height {})\n",
            sys.len(),
            sys.max_height(),
            rule.mode.name(),
            rule.max_height
        );
        let cumulative: Vec<String> = sys.cumulative_counts().iter().map(|(h, c)| format!("{h}:{c}")).collect();
        s += &format!("cumulative by height: {}\n", cumulative.join(" "));
        s += &format!(
            "distinct weights: {}, integer weights: {}\n",
            sys.distinct_weight_count(),
            weights.all_integer
        );
        s += &format!("hasse edges: {}\n", edges.len());
        ("txt", s)
    };
    Ok(Output {
        name: "roots",
        ext,
        body,
        ok: true,
    })
}

fn lattice_cmd(check: LatticeCheck, as_json: bool) -> Result<Output, Failure> {
    let want = |c| check == c || check == LatticeCheck::All;
    let mut ok = true;
    let mut data = serde_json::Map::new();
    let mut text = String::new();
    if want(LatticeCheck::Roots) {
        let r = lattice::check_roots();
        ok &= r.holds;
        text += &format!(
            "[{}] E8 roots: {} roots, norm 2: {}, pairs at distance sqrt2: {}, symmetric: {}\n",
            status(r.holds),
            r.count,
            r.all_norm_two,
            r.edge_pairs,
            r.symmetry_closed
        );
        text += &format!("  {}\n  {}\n", report_line(&r.cartan_gram), report_line(&r.vertex_coords));
        data.insert("roots".into(), serde_json::to_value(r).expect("serializable"));
    }
    if want(LatticeCheck::Hamming) {
        let h = lattice::check_hamming();
        ok &= h.holds;
        text += &format!(
            "[{}] Hamming (8,4): {} codewords, weight enumerator {:?}, min distance {:?}, self-dual {}\n",
            status(h.holds),
            h.codewords.len(),
            h.weight_enumerator,
            h.min_distance,
            h.self_dual
        );
        data.insert("hamming".into(), serde_json::to_value(h).expect("serializable"));
    }
    if want(LatticeCheck::ConstructionA) {
        let c = lattice::check_construction_a()?;
        ok &= c.holds;
        text += &format!(
            "[{}] Construction A: even {}, det {}, positive definite {}, minimal vectors {}\n",
            status(c.holds),
            c.even,
            c.determinant,
            c.positive_definite,
            c.minimal_vectors
        );
        data.insert("construction_a".into(), serde_json::to_value(c).expect("serializable"));
    }
    if want(LatticeCheck::HadamardMap) {
        let m = lattice::hadamard_code_correspondence();
        ok &= m.report.holds;
        text += &format!("{}\n", report_line(&m.report));
        for r in &m.rows {
            text += &format!("  {:>6} {} -> {}\n", r.source, r.bits, r.codeword);
        }
        data.insert("hadamard_map".into(), serde_json::to_value(m).expect("serializable"));
    }
    let body = if as_json { envelope("lattice", ok, data) } else { text };
    Ok(Output {
        name: "lattice",
        ext: if as_json { "json" } else { "txt" },
        body,
        ok,
    })
}

fn fmt_spread(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.6}")).unwrap_or_default()
}

fn project_cmd(a: ProjectArgs) -> Result<Output, Failure> {
    let basis = match a.basis {
        BasisArg::U => Basis::U,
        BasisArg::CmU => Basis::CmU,
    };
    let rule = EnumerationRule::new(a.mode.into(), a.max_height);
    let vs = projection::build_vertices(basis, rule)?;
    let subsets: Vec<[usize; 3]> = match (&a.dims, a.all) {
        (_, true) => projection::all_subsets(),
        (Some(d), false) => match d.as_slice() {
            &[a, b, c] => vec![[a, b, c]],
            _ => return Err(Failure::Usage(format!("--dims needs three values, got {}", d.len()))),
        },
        (None, false) => vec![[2, 3, 4]],
    };
    let mut reports = Vec::with_capacity(subsets.len());
    for dims in subsets {
        let (report, layers) = projection::analyze(&vs, dims)?;
        if let Some(dir) = &a.obj {
            let path = dir.join(format!("hull_{}{}{}.obj", dims[0], dims[1], dims[2]));
            write_file(&path, &projection::layers_to_obj(dims, &layers))?;
        }
        reports.push(report);
    }
    let groups = projection::group_reports(&reports);
    let (ext, body) = if a.json {
        let data = json!({
            "provenance": vs.provenance,
            "vertex_count": vs.len(),
            "reports": reports,
            "group_count": groups.len(),
            "groups": groups,
        });
        ("json", envelope("project", true, data))
    } else if a.csv {
        let body = csv_string(|w| {
            w.write_record(["dims", "distinct_points", "layer", "vertex_count", "classification", "edge_count", "edge_spread"])?;
            for r in &reports {
                let dims = format!("{}{}{}", r.dims[0], r.dims[1], r.dims[2]);
                for (k, l) in r.layers.iter().enumerate() {
                    w.write_record([
                        dims.clone(),
                        r.distinct_points.to_string(),
                        (k + 1).to_string(),
                        l.vertex_count.to_string(),
                        l.classification.clone(),
                        l.edge_count.to_string(),
                        fmt_spread(l.edge_spread),
                    ])?;
                }
            }
            Ok(())
        });
        ("csv", body)
    } else {
        let mut s = format!(
            "{} vertices from {} positive roots of cmU ({} mode, max height {}), basis {}\n",
            vs.len(),
            vs.provenance.positive_roots,
            rule.mode.name(),
            rule.max_height,
            basis.name()
        );
        for r in &reports {
            s += &format!("dims {:?}: {} points, {} layers\n", r.dims, r.distinct_points, r.layers.len());
            for (k, l) in r.layers.iter().enumerate() {
                s += &format!(
                    "  layer {}: {} vertices, {} edges, {} (spread {})\n",
                    k + 1,
                    l.vertex_count,
                    l.edge_count,
                    l.classification,
                    fmt_spread(l.edge_spread)
                );
            }
        }
        s += &format!("{} signature group(s)\n", groups.len());
        for g in &groups {
            let members: Vec<String> = g.members.iter().map(|d| format!("{}{}{}", d[0], d[1], d[2])).collect();
            s += &format!("  [{}] {}\n    {}\n", g.members.len(), members.join(" "), g.signature);
        }
        ("txt", s)
    };
    Ok(Output {
        name: "project",
        ext,
        body,
        ok: true,
    })
}

fn dump(name: &str, as_json: bool) -> Result<Output, Failure> {
    let m = resolve_matrix(name)?;
    let body = if as_json {
        let rows: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        envelope("dump", true, json!({ "name": name, "dim": m.dim(), "rows": rows }))
    } else {
        m.to_literal()
    };
    Ok(Output {
        name: "dump",
        ext: if as_json { "json" } else { "txt" },
        body,
        ok: true,
    })
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| Failure::Io(format!("{}: {e}", parent.display())))?;
    }
    fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Verify { only, u, json } => verify(only, u, json),
        Command::Powers { n, json } => powers(n, json),
        Command::Roots(a) => roots_cmd(a),
        Command::Lattice { check, json } => lattice_cmd(check, json),
        Command::Project(a) => project_cmd(a),
        Command::Dump { name, json } => dump(&name, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_dir = cli.out_dir.clone();
    match run(cli) {
        Ok(out) => {
            let written = match &out_dir {
                Some(dir) => write_file(&dir.join(format!("{}.{}", out.name, out.ext)), &out.body),
                None => std::io::stdout()
                    .write_all(out.body.as_bytes())
                    .map_err(|e| Failure::Io(e.to_string())),
            };
            match written {
                Err(Failure::Io(e) | Failure::Usage(e)) => {
                    eprintln!("golden8: {e}");
                    ExitCode::from(2)
                }
                Ok(()) if out.ok => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
            }
        }
        Err(Failure::Usage(e)) => {
            eprintln!("golden8: {e}");
            eprintln!("usage: golden8 <verify|powers|roots|lattice|project|dump> [options]; see --help");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("golden8: {e}");
            ExitCode::from(2)
        }
    }
}
