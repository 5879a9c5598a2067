mod cache;
mod input;

use cache::{write_atomic, ResultCache, CACHE_DIR_ENV};
use clap::{Args, Parser, Subcommand, ValueEnum};
use edgereg::graph::{canonical_graph6, induced_matching_number};
use edgereg::resolution::{betti_table_with, taylor_betti_oracle, BettiTable, BettiTableJson, HomologyRoute};
use edgereg::verify::{summarize, Conjecture, GraphParams, ScanConfig};
use edgereg::{Caps, EngineConfig, Field, Monomial, MonomialIdeal, Statement, VerificationReport, Verifier};
use input::{parse_vertex_list, GraphSource, VertexList};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit 2.
    Parse(String),
    /// Engine cap exceeded: exit 3.
    Cap(String),
    /// Oracle disagreement: exit 4.
    Mismatch(String),
    Io(String),
}

impl From<edgereg::Error> for CliError {
    fn from(e: edgereg::Error) -> Self {
        if e.is_cap_overrun() {
            CliError::Cap(e.to_string())
        } else {
            CliError::Parse(e.to_string())
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Mismatch(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "invalid input: {m}"),
            CliError::Cap(m) => write!(f, "cap exceeded: {m}"),
            CliError::Mismatch(m) => write!(f, "oracle mismatch: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "edgereg", version, about = "Betti tables, regularity and verifiers for edge ideals and their powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Betti table of I(G)^k or of a monomial ideal.
    Betti(BettiArgs),
    /// S-suspensions of graphs.
    Suspend(SuspendArgs),
    /// One-vertex extensions with their im and reg.
    Extend(ExtendArgs),
    /// Run one verifier over a family or an ideal.
    Verify(VerifyArgs),
    /// Scan a family for counterexamples to a conjecture.
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RouteArg {
    UpperKoszul,
    OrderComplex,
}

#[derive(Debug, Clone, Args)]
struct EngineArgs {
    /// Coefficient field: Q or GF(p).
    #[arg(long, default_value = "Q", value_parser = parse_field)]
    field: Field,
    /// Homology route at each lattice element.
    #[arg(long, value_enum, default_value_t = RouteArg::UpperKoszul)]
    route: RouteArg,
    /// Largest lcm lattice to build.
    #[arg(long = "lattice-cap", default_value_t = Caps::default().lattice_size)]
    lattice_cap: usize,
    /// Most faces in one simplicial complex.
    #[arg(long = "face-cap", default_value_t = Caps::default().face_count)]
    face_cap: usize,
    /// Most generators for the Taylor oracle.
    #[arg(long = "taylor-cap", default_value_t = Caps::default().taylor_generators)]
    taylor_cap: usize,
    /// Most generators for linear-quotient order search.
    #[arg(long = "quotient-cap", default_value_t = Caps::default().quotient_generators)]
    quotient_cap: usize,
    /// Wall-clock budget for a linear-quotient order search.
    #[arg(long = "time-budget-ms", default_value_t = Caps::default().time_budget_ms)]
    time_budget_ms: u64,
    /// Cache directory; also read from the environment.
    #[arg(long = "cache-dir", env = CACHE_DIR_ENV, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Ignore the cache for this run.
    #[arg(long = "no-cache")]
    no_cache: bool,
}

impl EngineArgs {
    fn config(&self) -> Result<EngineConfig, CliError> {
        let caps = Caps {
            lattice_size: self.lattice_cap,
            face_count: self.face_cap,
            taylor_generators: self.taylor_cap,
            quotient_generators: self.quotient_cap,
            time_budget_ms: self.time_budget_ms,
        };
        if caps.lattice_size == 0 || caps.face_count == 0 || caps.taylor_generators == 0 || caps.quotient_generators == 0 {
            return Err(CliError::Parse("caps must be positive".into()));
        }
        let route = match self.route {
            RouteArg::UpperKoszul => HomologyRoute::UpperKoszul,
            RouteArg::OrderComplex => HomologyRoute::OrderComplex,
        };
        Ok(EngineConfig { caps, route })
    }

    fn cache(&self) -> ResultCache {
        match (&self.cache_dir, self.no_cache) {
            (Some(d), false) => ResultCache::at(d),
            _ => ResultCache::disabled(),
        }
    }

    /// Key parts shared by every cached result.
    fn key_parts(&self) -> Result<Vec<String>, CliError> {
        let cfg = self.config()?;
        Ok(vec![
            self.field.to_string(),
            serde_json::to_string(&cfg).expect("serializable"),
            env!("CARGO_PKG_VERSION").to_string(),
        ])
    }
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
struct OutArgs {
    /// Write output here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BettiArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Monomial ideal such as `x0*x1, x1^2` instead of a graph.
    #[arg(long)]
    ideal: Option<String>,
    /// Number of variables for `--ideal` (inferred when omitted).
    #[arg(long)]
    nvars: Option<usize>,
    /// Take this power first.
    #[arg(long, default_value_t = 1)]
    power: u32,
    /// Cross-check against the Taylor-complex oracle.
    #[arg(long)]
    oracle: bool,
    /// Include multigraded Betti numbers.
    #[arg(long)]
    multi: bool,
    #[command(flatten)]
    engine: EngineArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args)]
struct SuspendArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Independent set, e.g. `0,2`.
    #[arg(long = "set", visible_alias = "independent-set", value_parser = parse_vertex_list, conflicts_with = "all")]
    set: Option<VertexList>,
    /// Every independent set other than the full vertex set.
    #[arg(long)]
    all: bool,
    /// Check im and reg invariance; reports go to the sidecar file.
    #[arg(long)]
    verify: bool,
    /// Sidecar path for `--verify` reports (default: `<out>.verify.jsonl`
    /// or `suspend.verify.jsonl`).
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args)]
struct ExtendArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Only (im, reg)-invariant extensions.
    #[arg(long)]
    invariant: bool,
    /// One extension per isomorphism class.
    #[arg(long)]
    distinct: bool,
    #[command(flatten)]
    engine: EngineArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Statement id, e.g. froberg, main1, keylemma.
    #[arg(long, value_parser = parse_statement)]
    statement: Statement,
    #[command(flatten)]
    source: GraphSource,
    /// Ideal I for the ideal statements.
    #[arg(long)]
    ideal: Option<String>,
    /// Number of variables (inferred when omitted).
    #[arg(long)]
    nvars: Option<usize>,
    /// J for betti-splitting and doublelinear, or the subideal J for abc-bound.
    #[arg(long = "j-ideal")]
    j_ideal: Option<String>,
    /// K for betti-splitting and doublelinear.
    #[arg(long = "k-ideal")]
    k_ideal: Option<String>,
    /// Monomial m for colon-reg-bound.
    #[arg(long)]
    monomial: Option<String>,
    /// Independent set for suspension statements.
    #[arg(long = "set", value_parser = parse_vertex_list)]
    set: Option<VertexList>,
    /// Vertex cover for keylemma.
    #[arg(long, value_parser = parse_vertex_list)]
    cover: Option<VertexList>,
    /// Power for single-power statements.
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Largest power for range statements.
    #[arg(long = "kmax", default_value_t = 3)]
    k_max: u32,
    /// Starting power for newconj2.
    #[arg(long = "cg", default_value_t = 2)]
    c_g: u32,
    /// Also compare Betti splittings multidegree by multidegree.
    #[arg(long)]
    multigraded: bool,
    /// Summary CSV path.
    #[arg(long, value_name = "PATH")]
    summary: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConjectureArg {
    Np,
    GeneralNp,
    Newconj2,
    DeletionProbe,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Conjecture to test.
    #[arg(long, value_enum)]
    conjecture: ConjectureArg,
    #[command(flatten)]
    source: GraphSource,
    /// Largest power to check.
    #[arg(long = "kmax", default_value_t = 3)]
    k_max: u32,
    /// Only graphs with this regularity (general-np, newconj2).
    #[arg(long)]
    reg: Option<i64>,
    /// Starting power for newconj2.
    #[arg(long = "cg", default_value_t = 2)]
    c_g: u32,
    /// Recompute the checked powers over GF(2) and flag differences.
    #[arg(long = "cross-field")]
    cross_field: bool,
    /// Summary CSV path.
    #[arg(long, value_name = "PATH")]
    summary: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
    #[command(flatten)]
    out: OutArgs,
}

fn parse_statement(s: &str) -> Result<Statement, String> {
    s.parse::<Statement>().map_err(|e| e.to_string())
}

/// Collected stdout lines, written at the end.
struct Output {
    lines: Vec<String>,
}

impl Output {
    fn new() -> Self {
        Output { lines: Vec::new() }
    }

    fn push(&mut self, line: String) {
        self.lines.push(line);
    }

    fn bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        for l in &self.lines {
            buf.extend_from_slice(l.as_bytes());
            buf.push(b'\n');
        }
        buf
    }

    fn emit(&self, out: &OutArgs) -> Result<(), CliError> {
        let bytes = self.bytes();
        match &out.out {
            Some(path) => write_atomic(path, &bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(&bytes)
                    .and_then(|_| stdout.flush())
                    .map_err(|e| CliError::Io(e.to_string()))
            }
        }
    }
}

fn parse_ideal(text: &str, nvars: Option<usize>) -> Result<MonomialIdeal, CliError> {
    let n = nvars.unwrap_or_else(|| Monomial::infer_nvars(text));
    Ok(MonomialIdeal::parse(text, n)?)
}

#[derive(Debug, Serialize, Deserialize)]
struct BettiRecord {
    input: String,
    power: u32,
    #[serde(flatten)]
    table: BettiTableJson,
}

fn run_betti(args: &BettiArgs) -> Result<(), CliError> {
    let cfg = args.engine.config()?;
    let field = args.engine.field;
    let cache = args.engine.cache();
    let mut parts = args.engine.key_parts()?;
    parts.push(format!("power={}", args.power));
    parts.push(format!("multi={}", args.multi));
    let mut inputs: Vec<(String, String, Option<MonomialIdeal>)> = Vec::new();
    if let Some(text) = &args.ideal {
        let ideal = parse_ideal(text, args.nvars)?;
        inputs.push((ideal.to_string(), format!("ideal:{}:{}", ideal.nvars(), ideal), Some(ideal)));
    }
    for g in args.source.load()? {
        // graded tables are isomorphism invariants; multigraded ones are not
        let id = if args.multi { g.to_string() } else { canonical_graph6(&g) };
        let ideal = if g.edge_count() == 0 {
            None
        } else {
            Some(MonomialIdeal::edge_ideal(&g)?)
        };
        inputs.push((g.to_string(), format!("graph:{id}"), ideal));
    }
    let records = inputs
        .par_iter()
        .map(|(label, id, ideal)| -> Result<BettiRecord, CliError> {
            let table = match ideal {
                None => BettiTable::from_graded(field, Default::default()).to_json(),
                Some(ideal) => {
                    let mut key_parts: Vec<&str> = parts.iter().map(String::as_str).collect();
                    key_parts.extend(["betti", id]);
                    let key = ResultCache::key(&key_parts);
                    let powered = ideal.power(args.power)?;
                    let table = cache.get_or_compute(&key, || -> Result<BettiTableJson, CliError> {
                        let t = betti_table_with(&powered, field, &cfg)?;
                        let t = if args.multi { t } else { t.without_multigraded() };
                        Ok(t.to_json())
                    })?;
                    if args.oracle {
                        let oracle = taylor_betti_oracle(&powered, field, &cfg.caps)?;
                        let oracle = if args.multi { oracle } else { oracle.without_multigraded() };
                        if BettiTable::from(table.clone()) != oracle {
                            return Err(CliError::Mismatch(format!("{label}: lattice and Taylor tables differ")));
                        }
                    }
                    table
                }
            };
            Ok(BettiRecord {
                input: label.clone(),
                power: args.power,
                table,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = Output::new();
    for r in &records {
        out.push(serde_json::to_string(r).expect("serializable"));
    }
    out.emit(&args.out)
}

fn run_suspend(args: &SuspendArgs) -> Result<(), CliError> {
    if args.set.is_none() && !args.all {
        return Err(CliError::Parse("give --set or --all".into()));
    }
    let verifier = Verifier::new(args.engine.field).with_engine(args.engine.config()?);
    let mut out = Output::new();
    let mut reports = Output::new();
    for g in args.source.load()? {
        let sets = match &args.set {
            Some(s) => vec![s.0.clone()],
            None => g.independent_sets().into_iter().filter(|s| s.len() < g.vertex_count()).collect(),
        };
        for s in sets {
            out.push(g.s_suspension(&s)?.to_string());
            if args.verify {
                let r = verifier.check_s_suspension_invariance(&g, &s)?;
                reports.push(r.to_json_line());
            }
        }
    }
    out.emit(&args.out)?;
    if args.verify {
        let path = args.report.clone().unwrap_or_else(|| match &args.out.out {
            Some(p) => {
                let mut s = p.clone().into_os_string();
                s.push(".verify.jsonl");
                PathBuf::from(s)
            }
            None => PathBuf::from("suspend.verify.jsonl"),
        });
        reports.emit(&OutArgs { out: Some(path) })?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct ExtensionRecord {
    base: String,
    graph6: String,
    neighbors: Vec<usize>,
    canonical: String,
    im: Option<usize>,
    reg: Option<i64>,
    invariant: bool,
}

fn run_extend(args: &ExtendArgs) -> Result<(), CliError> {
    let verifier = Verifier::new(args.engine.field).with_engine(args.engine.config()?);
    let mut out = Output::new();
    for g in args.source.load()? {
        let base = if g.edge_count() == 0 {
            None
        } else {
            Some((induced_matching_number(&g)?, verifier.edge_reg(&g, 1)?))
        };
        let n = g.vertex_count();
        let records = g
            .one_vertex_extensions()?
            .par_iter()
            .map(|e| -> Result<ExtensionRecord, CliError> {
                let im = induced_matching_number(e)?;
                let reg = verifier.edge_reg(e, 1)?;
                Ok(ExtensionRecord {
                    base: g.to_string(),
                    graph6: e.to_string(),
                    neighbors: e.neighborhood(n)?,
                    canonical: canonical_graph6(e),
                    im: Some(im),
                    reg: Some(reg),
                    invariant: base == Some((im, reg)),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut seen = std::collections::BTreeSet::new();
        for r in records {
            if args.invariant && !r.invariant {
                continue;
            }
            if args.distinct && !seen.insert(r.canonical.clone()) {
                continue;
            }
            out.push(serde_json::to_string(&r).expect("serializable"));
        }
    }
    out.emit(&args.out)
}

fn write_summary(path: &PathBuf, reports: &[VerificationReport], always: &[Statement]) -> Result<(), CliError> {
    let mut rows = summarize(reports);
    for st in always {
        rows.entry(*st).or_default();
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(["statement", "instances", "pass", "fail", "skipped"]).map_err(io)?;
    for (st, row) in rows {
        w.write_record([
            st.id().to_string(),
            row.instances.to_string(),
            row.pass.to_string(),
            row.fail.to_string(),
            row.skipped.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    write_atomic(path, &bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn finish(reports: &[VerificationReport], out: &OutArgs, summary: Option<&PathBuf>, st: Statement) -> Result<bool, CliError> {
    let mut o = Output::new();
    for r in reports {
        o.push(r.to_json_line());
    }
    o.emit(out)?;
    if let Some(path) = summary {
        write_summary(path, reports, &[st])?;
    }
    let fails = reports.iter().filter(|r| r.is_fail()).count();
    if fails > 0 {
        eprintln!("{fails} failing report(s) for {st}");
    }
    Ok(fails == 0)
}

fn run_verify(args: &VerifyArgs) -> Result<bool, CliError> {
    let cfg = args.engine.config()?;
    let verifier = Verifier::new(args.engine.field)
        .with_engine(cfg)
        .with_multigraded(args.multigraded);
    let st = args.statement;
    let mut reports = Vec::new();
    if let Some(text) = &args.ideal {
        let i = parse_ideal(text, args.nvars)?;
        let n = i.nvars();
        let other = |t: &Option<String>, flag: &str| -> Result<MonomialIdeal, CliError> {
            let t = t.as_ref().ok_or_else(|| CliError::Parse(format!("{st} needs {flag}")))?;
            Ok(MonomialIdeal::parse(t, n)?)
        };
        let r = match st {
            Statement::BettiSplitting => {
                verifier.check_betti_splitting(&i, &other(&args.j_ideal, "--j-ideal")?, &other(&args.k_ideal, "--k-ideal")?)?
            }
            Statement::Doublelinear => {
                verifier.check_doublelinear(&i, &other(&args.j_ideal, "--j-ideal")?, &other(&args.k_ideal, "--k-ideal")?)?
            }
            Statement::ColonRegBound => {
                let m = args
                    .monomial
                    .as_ref()
                    .ok_or_else(|| CliError::Parse("colon-reg-bound needs --monomial".into()))?;
                verifier.check_colon_reg_bound(&i, &Monomial::parse(m, n)?)?
            }
            Statement::AbcBound => verifier.check_abc_bound(&other(&args.j_ideal, "--j-ideal")?, &i, None)?,
            _ => return Err(CliError::Parse(format!("{st} takes a graph, not --ideal"))),
        };
        reports.push(r);
    }
    let params = GraphParams {
        set: args.set.as_ref().map(|s| s.0.clone()),
        cover: args.cover.as_ref().map(|c| c.0.clone()),
        k: args.k,
        k_max: args.k_max,
        c_g: args.c_g,
    };
    let cache = args.engine.cache();
    let mut parts = args.engine.key_parts()?;
    parts.extend([
        "verify".to_string(),
        st.id().to_string(),
        format!("{:?}", params),
        format!("multigraded={}", args.multigraded),
    ]);
    let graphs = args.source.load()?;
    let per_graph = graphs
        .par_iter()
        .map(|g| -> Result<Vec<VerificationReport>, CliError> {
            let g6 = g.to_string();
            let mut key_parts: Vec<&str> = parts.iter().map(String::as_str).collect();
            key_parts.push(&g6);
            cache.get_or_compute(&ResultCache::key(&key_parts), || {
                verifier.run_graph_statement(st, g, &params).map_err(CliError::from)
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    reports.extend(per_graph.into_iter().flatten());
    finish(&reports, &args.out, args.summary.as_ref(), st)
}

fn run_scan(args: &ScanArgs) -> Result<bool, CliError> {
    let cfg = args.engine.config()?;
    let verifier = Verifier::new(args.engine.field).with_engine(cfg);
    let conjecture = match args.conjecture {
        ConjectureArg::Np => Conjecture::Np,
        ConjectureArg::GeneralNp => Conjecture::GeneralNp,
        ConjectureArg::Newconj2 => Conjecture::Newconj2,
        ConjectureArg::DeletionProbe => Conjecture::DeletionProbe,
    };
    let config = ScanConfig {
        k_max: args.k_max,
        reg: args.reg,
        c_g: args.c_g,
        cross_field: args.cross_field,
        ..ScanConfig::new(conjecture)
    };
    let cache = args.engine.cache();
    let mut parts = args.engine.key_parts()?;
    parts.extend(["scan".to_string(), format!("{config:?}")]);
    let graphs = args.source.load_canonical()?;
    let per_graph = graphs
        .par_iter()
        .map(|g| -> Result<Vec<VerificationReport>, CliError> {
            let g6 = g.to_string();
            let mut key_parts: Vec<&str> = parts.iter().map(String::as_str).collect();
            key_parts.push(&g6);
            cache.get_or_compute(&ResultCache::key(&key_parts), || {
                verifier
                    .scan_conjecture(std::slice::from_ref(g), &config)
                    .map_err(CliError::from)
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut reports: Vec<VerificationReport> = per_graph.into_iter().flatten().collect();
    reports.sort_by(|a, b| a.instance_graph6().cmp(&b.instance_graph6()));
    finish(&reports, &args.out, args.summary.as_ref(), conjecture.statement())
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::Betti(a) => run_betti(a).map(|_| true),
        Command::Suspend(a) => run_suspend(a).map(|_| true),
        Command::Extend(a) => run_extend(a).map(|_| true),
        Command::Verify(a) => run_verify(a),
        Command::Scan(a) => run_scan(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("edgereg: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
