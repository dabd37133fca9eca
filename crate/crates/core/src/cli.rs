//! The `cactus-flags` command line.
//!
//! Exit codes: 0 success, 1 a verification found a failing trial (reports,
//! including counterexamples, are still written to stdout), 2 usage or input error.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::axioms::{check_all, check_axiom, check_glue, AxiomReport};
use crate::cactus::{act_word, verify_instances, verify_relation, verify_relations, CactusWord, Relation};
use crate::error::{Error, Result};
use crate::flag::{Configuration, MultiIndex};
use crate::mutation::{flip_transport, transport};
use crate::polygon::{chart_dimension, ChartPoint, Triangulation};
use crate::reconstruct::{charts_to_flags, flags_to_charts, random_positive, DEFAULT_BOUND};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cactus-flags", version, about = "Exact positive flag configurations, flips, reversal and cactus actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Random positive configuration of n flags in R^m
    Gen {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bound on numerators and denominators of the sampled chart values
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
    /// Evaluate one Δ coordinate, e.g. `delta config.json 0,1,0,1`
    Delta {
        /// Configuration JSON file, or `-` for stdin
        input: String,
        index: String,
    },
    /// Chart values of a configuration on a triangulation
    Charts {
        input: String,
        /// Diagonals as `a-b,c-d`; defaults to the fan at vertex 1
        #[arg(long)]
        diagonals: Option<String>,
        /// Also write an SVG of the triangulation with its chart indices
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Flip one diagonal of a chart point
    Flip {
        input: String,
        a: usize,
        b: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Transport a chart point to another triangulation
    Transport {
        input: String,
        #[arg(long)]
        diagonals: String,
    },
    /// Apply a cactus word (JSON `[[p,q],...]`) to a configuration or chart point
    Act { input: String, word: String },
    /// Check axioms 1-8 and the gluing on random points
    VerifyAxioms {
        /// 1..=8 or `glue`; all when omitted
        #[arg(long)]
        axiom: Option<String>,
        /// Dimension; taken from a configuration on stdin when one is piped
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the cactus relations R1-R3 on random points
    VerifyCactus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// R1, R2 or R3; all when omitted
        #[arg(long, conflicts_with_all = ["lhs", "rhs"])]
        relation: Option<String>,
        /// Check the candidate relation `lhs = rhs` between two words instead
        #[arg(long, requires = "rhs")]
        lhs: Option<String>,
        #[arg(long, requires = "lhs")]
        rhs: Option<String>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dimension of the positive part, (n-2)·C(m+1,2) + (m+1) - n
    Dim { n: usize, m: usize },
}

/// Streams available to a command. `stdin` is `None` when nothing is piped.
pub struct Io<'a> {
    pub stdin: Option<&'a mut dyn Read>,
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, io: Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(io.err, "{e}")
            } else {
                write!(io.out, "{e}")
            };
            return code;
        }
    };
    let Io { stdin, out, err } = io;
    let mut stdin = stdin;
    match execute(cli.command, &mut stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_input(input: &str, stdin: &mut Option<&mut dyn Read>) -> Result<String> {
    if input == "-" {
        let reader = stdin
            .as_mut()
            .ok_or_else(|| Error::Parse("`-` given but nothing is piped on stdin".into()))?;
        let mut s = String::new();
        reader
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Parse(format!("reading {input}: {e}")))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed {what} JSON: {e}")))
}

/// One line of JSON for data, indented JSON for reports.
fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))?;
    write_line(out, &text)
}

fn emit_report<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    write_line(out, &text)
}

fn write_line(out: &mut dyn Write, text: &str) -> Result<()> {
    match writeln!(out, "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::Internal(e.to_string())),
        _ => Ok(()),
    }
}

/// `a-b,c-d` (empty for none).
fn parse_diagonals(n: usize, text: &str) -> Result<Triangulation> {
    let diagonals = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (a, b) = pair
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("diagonal {pair:?} is not of the form a-b")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad vertex {s:?} in diagonal {pair:?}")))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Triangulation::new(n, diagonals)
}

fn execute(cmd: Command, stdin: &mut Option<&mut dyn Read>, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen { n, m, seed, bound } => {
            if n < 3 || m < 2 {
                return Err(Error::Parse(format!("need n >= 3 and m >= 2, got n = {n}, m = {m}")));
            }
            emit(out, &random_positive(n, m, seed, bound)?)?;
        }
        Command::Delta { input, index } => {
            let c: Configuration = parse_json(&read_input(&input, stdin)?, "configuration")?;
            let idx: MultiIndex = index.parse()?;
            let v = c.delta(&idx)?;
            write_line(out, &v.to_string())?;
        }
        Command::Charts { input, diagonals, svg } => {
            let c: Configuration = parse_json(&read_input(&input, stdin)?, "configuration")?;
            let t = match diagonals {
                Some(d) => parse_diagonals(c.n(), &d)?,
                None => Triangulation::fan(c.n(), 1)?,
            };
            let p = flags_to_charts(&c, &t)?;
            write_svg(svg, &p)?;
            emit(out, &p)?;
        }
        Command::Flip { input, a, b, svg } => {
            let p: ChartPoint = parse_json(&read_input(&input, stdin)?, "chart point")?;
            let q = flip_transport(&p, (a, b))?;
            write_svg(svg, &q)?;
            emit(out, &q)?;
        }
        Command::Transport { input, diagonals } => {
            let p: ChartPoint = parse_json(&read_input(&input, stdin)?, "chart point")?;
            let t = parse_diagonals(p.n(), &diagonals)?;
            emit(out, &transport(&p, &t)?)?;
        }
        Command::Act { input, word } => {
            let text = read_input(&input, stdin)?;
            let w: CactusWord = if word.trim_start().starts_with('[') {
                parse_json(&word, "cactus word")?
            } else {
                parse_json(&read_input(&word, stdin)?, "cactus word")?
            };
            let value: serde_json::Value = parse_json(&text, "input")?;
            if value.get("triangulation").is_some() {
                let p: ChartPoint = parse_json(&text, "chart point")?;
                w.check(p.n())?;
                let c = act_word(&charts_to_flags(&p)?, &w)?;
                emit(out, &flags_to_charts(&c, p.triangulation())?)?;
            } else {
                let c: Configuration = parse_json(&text, "configuration")?;
                w.check(c.n())?;
                emit(out, &act_word(&c, &w)?)?;
            }
        }
        Command::VerifyAxioms { axiom, m, trials, seed } => {
            let piped = match stdin.as_mut() {
                Some(r) => {
                    let mut s = String::new();
                    r.read_to_string(&mut s)
                        .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
                    s
                }
                None => String::new(),
            };
            let m = match (m, piped.trim().is_empty()) {
                (Some(m), _) => m,
                (None, false) => parse_json::<Configuration>(&piped, "configuration")?.m(),
                (None, true) => return Err(Error::Parse("--m is required when no configuration is piped".into())),
            };
            if !(2..=4).contains(&m) {
                return Err(Error::Parse(format!("axiom checks support m in 2..=4, got {m}")));
            }
            let reports: Vec<AxiomReport> = match axiom.as_deref() {
                None => check_all(m, trials, seed)?,
                Some("glue") => vec![check_glue(m, trials, seed)?],
                Some(k) => {
                    let k: usize = k
                        .parse()
                        .map_err(|_| Error::Parse(format!("unknown axiom {k:?}; expected 1..=8 or glue")))?;
                    vec![check_axiom(k, m, trials, seed)?]
                }
            };
            emit_report(out, &reports)?;
            return Ok(if reports.iter().all(AxiomReport::passed) { EXIT_OK } else { EXIT_FAILED });
        }
        Command::VerifyCactus { n, m, relation, lhs, rhs, trials, seed } => {
            if m < 2 {
                return Err(Error::Parse(format!("need m >= 2, got {m}")));
            }
            let reports = match (relation, lhs, rhs) {
                (_, Some(lhs), Some(rhs)) => {
                    let lhs: CactusWord = parse_json(&lhs, "cactus word")?;
                    let rhs: CactusWord = parse_json(&rhs, "cactus word")?;
                    lhs.check(n)?;
                    rhs.check(n)?;
                    let rel = Relation::Words { lhs, rhs };
                    vec![verify_instances("custom", n, m, trials, seed, |_| Some(rel.clone()))?]
                }
                (Some(r), _, _) => vec![verify_relation(&r, n, m, trials, seed)?],
                _ => verify_relations(n, m, trials, seed)?,
            };
            emit_report(out, &reports)?;
            return Ok(if reports.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_FAILED });
        }
        Command::Dim { n, m } => {
            if n < 3 || m < 1 {
                return Err(Error::Parse(format!("need n >= 3 and m >= 1, got n = {n}, m = {m}")));
            }
            write_line(out, &chart_dimension(n, m).to_string())?;
        }
    }
    Ok(EXIT_OK)
}

fn write_svg(path: Option<PathBuf>, p: &ChartPoint) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(&path, render_svg(p))
            .map_err(|e| Error::Parse(format!("writing {}: {e}", path.display())))?;
    }
    Ok(())
}

/// The polygon with its diagonals and a dot at the barycenter of every chart index.
pub fn render_svg(p: &ChartPoint) -> String {
    let n = p.n();
    let (size, radius) = (400.0, 160.0);
    let vertex = |v: usize| {
        let angle = std::f64::consts::TAU * (v as f64 - 1.0) / n as f64 - std::f64::consts::FRAC_PI_2;
        (size / 2.0 + radius * angle.cos(), size / 2.0 + radius * angle.sin())
    };
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    );
    for (a, b) in p.triangulation().edges() {
        let ((x1, y1), (x2, y2)) = (vertex(a), vertex(b));
        s.push_str(&format!(
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"black\"/>\n"
        ));
    }
    for v in 1..=n {
        let (x, y) = vertex(v);
        let (lx, ly) = (size / 2.0 + (x - size / 2.0) * 1.12, size / 2.0 + (y - size / 2.0) * 1.12);
        s.push_str(&format!(
            "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{v}</text>\n"
        ));
    }
    let m = p.m() as f64;
    for (idx, value) in p.values() {
        let (mut x, mut y) = (0.0, 0.0);
        for (k, &w) in idx.entries().iter().enumerate() {
            let (vx, vy) = vertex(k + 1);
            x += vx * w as f64 / m;
            y += vy * w as f64 / m;
        }
        s.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"black\"><title>{idx}: {value}</title></circle>\n"
        ));
    }
    s.push_str("</svg>\n");
    s
}
