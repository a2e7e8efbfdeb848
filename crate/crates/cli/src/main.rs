use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mzvkit::numerics::{
    zeta_index, BigComplex, CacheError, CacheKind, NumContext, NumericsError, ZetaCache, DEFAULT_GUARD,
};
use mzvkit::rsmzv::zrs_index;
use mzvkit::verify::{run_all_with_cache, run_check_with_cache, CheckSpec, Overrides, Report, VerifyError, CHECK_NAMES};
use mzvkit::word_algebra::{dual_index, hoffman_dual, Index};
use mzvkit_cli::{parse_expression, DslError, EvalError, Evaluator};
use rug::Float;
use serde_json::{json, Value as Json};

#[derive(Parser)]
#[command(name = "mzvkit", version, about = "Multiple zeta values, their symmetric refinements and identity checks")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Persistent value cache.
    #[arg(long, global = true, env = "MZVKIT_CACHE")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as `zeta(1,2)` or `zrs("yxy" sh "y")`.
    Eval {
        expr: String,
        /// Significant decimal digits.
        #[arg(long, default_value_t = 30)]
        prec: u32,
    },
    /// The refined symmetric value of an index.
    Zrs {
        index: String,
        #[arg(long, default_value_t = 30)]
        prec: u32,
    },
    /// Dual of an admissible index.
    Dual { index: String },
    /// Hoffman dual of a nonempty index.
    Hdual { index: String },
    /// Values of every index up to a weight.
    Table {
        #[arg(long)]
        max_weight: u32,
        #[arg(long, value_enum, default_value_t = TableKind::Zeta)]
        kind: TableKind,
        #[arg(long, default_value_t = 30)]
        prec: u32,
    },
    /// Run a named identity check, or `all`.
    Check(CheckArgs),
    /// Inspect or verify the value cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Zeta,
    Zrs,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    Info,
    Verify,
}

#[derive(Args)]
struct CheckArgs {
    name: String,
    #[arg(long)]
    max_weight: Option<u32>,
    #[arg(long)]
    max_m: Option<u32>,
    #[arg(long)]
    maxdeg: Option<u32>,
    #[arg(long)]
    prec: Option<u32>,
    #[arg(long)]
    tol: Option<f64>,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("{0}")]
    Usage(String),
    #[error("cache verification failed: {0}")]
    CacheMismatch(String),
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        let corrupt = |e: &NumericsError| matches!(e, NumericsError::Cache(CacheError::Corrupt { .. }));
        match self {
            CliError::Cache(CacheError::Corrupt { .. }) | CliError::CacheMismatch(_) => 3,
            CliError::Numerics(e) | CliError::Eval(EvalError::Numerics(e)) | CliError::Verify(VerifyError::Numerics(e))
                if corrupt(e) =>
            {
                3
            }
            _ => 2,
        }
    }
}

struct App {
    json: bool,
    cache: Arc<ZetaCache>,
}

impl App {
    fn new(json: bool, path: Option<&Path>) -> Result<App, CliError> {
        let cache = match path {
            Some(p) => ZetaCache::open(p)?,
            None => ZetaCache::in_memory(),
        };
        Ok(App { json, cache: Arc::new(cache) })
    }

    fn context(&self, digits: u32) -> Result<NumContext, CliError> {
        Ok(NumContext::with_cache(digits, DEFAULT_GUARD, self.cache.clone())?)
    }

    fn emit(&self, text: impl Display, doc: Json) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&doc).expect("json serializes"));
        } else {
            println!("{text}");
        }
    }

    fn finish(&self) -> Result<(), CliError> {
        Ok(self.cache.save()?)
    }
}

fn parse_index(s: &str) -> Result<Index, CliError> {
    let s = s.trim();
    let text = if s.starts_with('(') { s.to_string() } else { format!("({s})") };
    text.parse().map_err(|e| CliError::Usage(format!("bad index {s:?}: {e}")))
}

fn complex_json(z: &BigComplex, digits: usize) -> Json {
    json!({ "re": mzvkit::numerics::format_real(&z.re, digits), "im": mzvkit::numerics::format_real(&z.im, digits) })
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let app = App::new(cli.json, cli.cache.as_deref())?;
    match cli.command {
        Command::Eval { expr, prec } => {
            let e = parse_expression(&expr)?;
            let ctx = app.context(prec)?;
            let v = Evaluator { ctx: &ctx }.eval(&e)?;
            let text = v.render(prec as usize);
            app.emit(&text, json!({ "expr": e.to_string(), "kind": v.kind(), "value": text }));
        }
        Command::Zrs { index, prec } => {
            let k = parse_index(&index)?;
            let ctx = app.context(prec)?;
            let z = zrs_index(&k, &ctx)?;
            let text = z.to_decimal(prec as usize);
            app.emit(&text, json!({ "index": k.to_string(), "value": text, "parts": complex_json(&z, prec as usize) }));
        }
        Command::Dual { index } => {
            let k = parse_index(&index)?;
            let d = dual_index(&k).map_err(|e| CliError::Usage(e.to_string()))?;
            app.emit(&d, json!({ "index": k.to_string(), "dual": d.to_string() }));
        }
        Command::Hdual { index } => {
            let k = parse_index(&index)?;
            let d = hoffman_dual(&k).map_err(|e| CliError::Usage(e.to_string()))?;
            app.emit(&d, json!({ "index": k.to_string(), "hoffman_dual": d.to_string() }));
        }
        Command::Table { max_weight, kind, prec } => {
            if max_weight > 12 {
                return Err(CliError::Usage(format!("max weight {max_weight} exceeds 12")));
            }
            let ctx = app.context(prec)?;
            let digits = prec as usize;
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for w in 0..=max_weight {
                for k in mzvkit::verify::enumerate_indices(w, matches!(kind, TableKind::Zeta)) {
                    let z = match kind {
                        TableKind::Zeta => BigComplex::from_real(zeta_index(&k, &ctx)?),
                        TableKind::Zrs => zrs_index(&k, &ctx)?,
                    };
                    let text = z.to_decimal(digits);
                    lines.push(format!("{k}\t{text}"));
                    rows.push(json!({ "index": k.to_string(), "weight": w, "value": text }));
                }
            }
            app.emit(lines.join("\n"), Json::Array(rows));
        }
        Command::Check(args) => return run_checks(&app, args),
        Command::Cache { action } => {
            if app.cache.path().is_none() {
                return Err(CliError::Usage("no cache file given (use --cache or MZVKIT_CACHE)".into()));
            }
            match action {
                CacheAction::Info => cache_info(&app),
                CacheAction::Verify => cache_verify(&app)?,
            }
            return Ok(0);
        }
    }
    app.finish()?;
    Ok(0)
}

fn run_checks(app: &App, args: CheckArgs) -> Result<u8, CliError> {
    let overrides = Overrides {
        max_weight: args.max_weight,
        max_m: args.max_m,
        maxdeg: args.maxdeg,
        precision: args.prec,
        tolerance: args.tol,
    };
    let reports: Vec<Report> = if args.name == "all" {
        run_all_with_cache(&overrides, app.cache.clone())?
    } else {
        if !CHECK_NAMES.contains(&args.name.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown check {:?}; expected one of: all, {}",
                args.name,
                CHECK_NAMES.join(", ")
            )));
        }
        let spec = overrides.apply(CheckSpec::default_for(&args.name)?);
        vec![run_check_with_cache(&spec, app.cache.clone())?]
    };
    app.finish()?;
    let pass = reports.iter().all(|r| r.pass);
    let doc = if reports.len() == 1 {
        serde_json::to_value(&reports[0]).expect("report serializes")
    } else {
        json!({ "pass": pass, "reports": reports })
    };
    if let Some(path) = &args.report {
        let text = serde_json::to_string_pretty(&doc).expect("report serializes") + "\n";
        std::fs::write(path, text).map_err(|source| CliError::Write { path: path.clone(), source })?;
    }
    let mut lines = Vec::new();
    for r in &reports {
        lines.push(r.summary());
        for f in r.failures.iter().take(5) {
            lines.push(format!("    {}: residual {}{}", f.case, f.residual, f.mismatch.as_ref().map(|m| format!(" ({m})")).unwrap_or_default()));
        }
    }
    if reports.len() > 1 {
        let failed = reports.iter().filter(|r| !r.pass).count();
        lines.push(format!("{} of {} checks passed", reports.len() - failed, reports.len()));
    }
    app.emit(lines.join("\n"), doc);
    Ok(if pass { 0 } else { 1 })
}

fn cache_info(app: &App) {
    let records = app.cache.records();
    let count = |kind| records.iter().filter(|r| r.kind == kind).count();
    let mut precisions: Vec<u32> = records.iter().map(|r| r.precision).collect();
    precisions.sort_unstable();
    precisions.dedup();
    let path = app.cache.path().expect("checked by caller").display().to_string();
    let text = format!(
        "cache: {path}\nrecords: {}\nzeta: {}\nzrs: {}\nprecisions: {}",
        records.len(),
        count(CacheKind::Zeta),
        count(CacheKind::Zrs),
        precisions.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")
    );
    app.emit(
        text,
        json!({ "path": path, "records": records.len(), "zeta": count(CacheKind::Zeta), "zrs": count(CacheKind::Zrs), "precisions": precisions }),
    );
}

/// Recompute every record without the cache and compare.
fn cache_verify(app: &App) -> Result<(), CliError> {
    let records = app.cache.records();
    let mut bad = Vec::new();
    for r in &records {
        let k: Index = r.index.parse().map_err(|e| CliError::CacheMismatch(format!("{}: {e}", r.index)))?;
        let ctx = NumContext::with_guard(r.precision, r.guard)?;
        let fresh = match r.kind {
            CacheKind::Zeta => BigComplex::from_real(zeta_index(&k, &ctx)?),
            CacheKind::Zrs => zrs_index(&k, &ctx)?,
        };
        let parse = |s: &str| Float::parse(s).map(|p| Float::with_val(ctx.prec(), p)).ok();
        let stored_im = match &r.imag {
            Some(s) => parse(s),
            None => Some(Float::new(ctx.prec())),
        };
        let ok = match (parse(&r.value), stored_im) {
            (Some(re), Some(im)) => BigComplex::new(re, im).dist(&fresh) < ctx.ten_pow_neg(r.precision as i32 - 5),
            _ => false,
        };
        if !ok {
            bad.push(format!("{:?} {} at {} digits", r.kind, r.index, r.precision));
        }
    }
    if !bad.is_empty() {
        return Err(CliError::CacheMismatch(format!("{} of {} records differ: {}", bad.len(), records.len(), bad.join("; "))));
    }
    app.emit(format!("ok: {} records verified", records.len()), json!({ "ok": true, "records": records.len() }));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
