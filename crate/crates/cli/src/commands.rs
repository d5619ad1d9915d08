//! Subcommands of the `grp` binary.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};
use grp_core::bounds::{cn_bounds, cs_bounds, BigUint, BoundTerm, Bounds, CS_TABLE};
use grp_core::group::{FindingStatus, DEFAULT_CAP};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dsl::{parse, Expr};
use crate::eval::evaluate_with;
use crate::report::{render_check, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "grp", version, about = "Solvable group invariants and composition-length bounds")]
pub struct Cli {
    /// Enumeration cap; overrides GRP_MAX_ELEMENTS.
    #[arg(long, global = true)]
    pub max_elements: Option<usize>,
    /// Worker threads for verify-table; overrides GRP_THREADS.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a group and report its invariants and structural checks.
    Eval {
        expr: String,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Derived series orders and n(G).
    Series { expr: String },
    /// Structural checks only.
    Check {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Bounds on c_S(d), or c_N(d) with --nilpotent.
    Bounds {
        d: u32,
        #[arg(long)]
        nilpotent: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build the designated witness for each d and compare with the table.
    VerifyTable {
        #[arg(long, default_value_t = 8)]
        max_d: usize,
        /// Omit d = 7 and d = 8.
        #[arg(long)]
        skip_heavy: bool,
    },
}

/// Designated witness per derived length; the second d = 5 row is a cross-check.
pub const WITNESSES: &[(usize, &str)] = &[
    (0, "cyclic(1)"),
    (1, "cyclic(2)"),
    (2, "metacyclic(2,3)"),
    (3, "natsd(s3mat(5),2)"),
    (4, "gl(2,3)"),
    (5, "qutrit(7)"),
    (5, "natsd(gl(2,3),2)"),
    (6, "gsp(gl(2,3),3,1)"),
    (7, "prop8(7)"),
    (8, "d8()"),
];

fn env_usize(name: &str) -> Result<Option<usize>, String> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{name} must be a positive integer, got `{v}`")),
        Err(_) => Ok(None),
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

macro_rules! say {
    ($w:expr, $($t:tt)*) => {
        let _ = writeln!($w, $($t)*);
    };
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let mut io = Io { out, err };
    let cap = match cli.max_elements.map(|c| Ok(Some(c))).unwrap_or_else(|| env_usize("GRP_MAX_ELEMENTS")) {
        Ok(Some(c)) if c > 0 => c,
        Ok(None) => DEFAULT_CAP,
        Ok(Some(_)) => {
            say!(io.err, "error: the enumeration cap must be positive");
            return EXIT_ERROR;
        }
        Err(e) => {
            say!(io.err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let threads = match cli.threads.map(|t| Ok(Some(t))).unwrap_or_else(|| env_usize("GRP_THREADS")) {
        Ok(t) => t,
        Err(e) => {
            say!(io.err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    match cli.command {
        Command::Eval { expr, json, .. } => eval(&mut io, &expr, cap, json),
        Command::Series { expr } => series(&mut io, &expr, cap),
        Command::Check { expr, json } => check(&mut io, &expr, cap, json),
        Command::Bounds { d, nilpotent, json } => bounds(&mut io, d, nilpotent, json),
        Command::VerifyTable { max_d, skip_heavy } => verify_table(&mut io, max_d, skip_heavy, cap, threads),
    }
}

fn parse_or_report(io: &mut Io, src: &str) -> Option<Expr> {
    match parse(src) {
        Ok(e) => Some(e),
        Err(e) => {
            say!(io.err, "error: {e}");
            if let Some(line) = src.lines().nth(e.pos.line - 1) {
                say!(io.err, "  {line}");
                say!(io.err, "  {}^", " ".repeat(e.pos.col - 1));
            }
            None
        }
    }
}

fn build(io: &mut Io, src: &str, cap: usize, checks: bool) -> Option<Report> {
    let started = Instant::now();
    let expr = parse_or_report(io, src)?;
    let g = match evaluate_with(&expr, cap) {
        Ok(g) => g,
        Err(e) => {
            say!(io.err, "error: {e}");
            return None;
        }
    };
    match Report::build(&crate::dsl::render(&expr), &g, checks, started) {
        Ok(r) => Some(r),
        Err(e) => {
            say!(io.err, "error: {e}");
            None
        }
    }
}

fn any_failed(r: &Report) -> bool {
    r.checks.iter().any(|c| c.status == FindingStatus::Fail.as_str())
}

fn eval(io: &mut Io, src: &str, cap: usize, json: bool) -> i32 {
    let Some(r) = build(io, src, cap, true) else {
        return EXIT_ERROR;
    };
    if json {
        say!(io.out, "{}", r.to_json());
    } else {
        say!(io.out, "{}", r.to_text());
    }
    if any_failed(&r) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn series(io: &mut Io, src: &str, cap: usize) -> i32 {
    let Some(r) = build(io, src, cap, false) else {
        return EXIT_ERROR;
    };
    say!(io.out, "derived orders {:?}", r.derived_orders);
    say!(io.out, "n {:?}", r.n);
    say!(
        io.out,
        "d {}  c {}",
        r.d.map_or("-".into(), |d| d.to_string()),
        r.c.map_or("-".into(), |c| c.to_string())
    );
    EXIT_OK
}

fn check(io: &mut Io, src: &str, cap: usize, json: bool) -> i32 {
    let Some(r) = build(io, src, cap, true) else {
        return EXIT_ERROR;
    };
    if json {
        say!(io.out, "{}", serde_json::to_string_pretty(&r.checks).expect("serializes"));
    } else {
        for c in &r.checks {
            say!(io.out, "{}", render_check(c));
        }
    }
    if any_failed(&r) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn big_json(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn bounds_json(b: &Bounds, nilpotent: bool) -> Value {
    let terms = |ts: &[BoundTerm]| -> Vec<Value> {
        ts.iter().map(|t| json!({"rule": t.rule, "value": big_json(&t.value)})).collect()
    };
    json!({
        "quantity": if nilpotent { "c_N" } else { "c_S" },
        "d": b.d,
        "lower": big_json(&b.lower),
        "upper": big_json(&b.upper),
        "lower_terms": terms(&b.lower_terms),
        "upper_terms": terms(&b.upper_terms),
        "annotation": b.annotation.map(|a| json!({"lower": a.lower, "upper": a.upper, "note": a.note})),
    })
}

fn bounds(io: &mut Io, d: u32, nilpotent: bool, json: bool) -> i32 {
    let b = if nilpotent { cn_bounds(d) } else { cs_bounds(d) };
    if json {
        say!(io.out, "{}", serde_json::to_string_pretty(&bounds_json(&b, nilpotent)).expect("serializes"));
        return EXIT_OK;
    }
    let q = if nilpotent { "c_N" } else { "c_S" };
    if b.is_exact() {
        say!(io.out, "{q}({d}) = {}", b.lower);
    } else {
        say!(io.out, "{} <= {q}({d}) <= {}", b.lower, b.upper);
    }
    for t in &b.lower_terms {
        say!(io.out, "  lower  {:<22} {}", t.rule, t.value);
    }
    for t in &b.upper_terms {
        say!(io.out, "  upper  {:<22} {}", t.rule, t.value);
    }
    if let Some(a) = b.annotation {
        say!(io.out, "  annotation: {}..{} ({})", a.lower, a.upper, a.note);
    }
    EXIT_OK
}

/// One verify-table line and whether it passed.
pub fn verify_row(d: usize, spec: &str, cap: usize) -> (String, bool) {
    let expect_c = CS_TABLE[d];
    let result = parse(spec)
        .map_err(|e| e.to_string())
        .and_then(|e| evaluate_with(&e, cap).map_err(|e| e.to_string()))
        .and_then(|g| g.series().map_err(|e| e.to_string()));
    match result {
        Ok(r) => {
            let ok = r.d == Some(d) && r.c.map(u64::from) == Some(expect_c);
            let line = format!(
                "d={d} {spec:<20} order={:<10} d={} c={:<3} expected=({d},{expect_c}) n={:?} {}",
                r.order(),
                r.d.map_or("-".into(), |x| x.to_string()),
                r.c.map_or("-".into(), |x| x.to_string()),
                r.n,
                if ok { "PASS" } else { "FAIL" }
            );
            (line, ok)
        }
        Err(e) => (format!("d={d} {spec:<20} ERROR {e}"), false),
    }
}

fn verify_table(io: &mut Io, max_d: usize, skip_heavy: bool, cap: usize, threads: Option<usize>) -> i32 {
    if max_d >= CS_TABLE.len() {
        say!(io.err, "error: no witness is designated for d > {}", CS_TABLE.len() - 1);
        return EXIT_ERROR;
    }
    let rows: Vec<(usize, &str)> = WITNESSES
        .iter()
        .copied()
        .filter(|&(d, _)| d <= max_d && !(skip_heavy && d >= 7))
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            say!(io.err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let results: Vec<(String, bool)> =
        pool.install(|| rows.par_iter().map(|&(d, s)| verify_row(d, s, cap)).collect());
    let passed = results.iter().filter(|r| r.1).count();
    for (line, _) in &results {
        say!(io.out, "{line}");
    }
    say!(io.out, "{passed}/{} rows pass", results.len());
    if passed == results.len() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}
