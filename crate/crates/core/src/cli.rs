//! Command-line front end. [`run`] parses arguments, writes results to
//! `out` and diagnostics to `err`, and returns the process exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::bracket::{jones_with, kauffman_bracket_with, BracketOptions, DEFAULT_CAP};
use crate::certify::{certify_distinct, certify_distinct_torus, check_jones1_identity, Outcome, Verdict};
use crate::diagram::{connected_sum, parse_diagram, ArcId, ComponentId, Diagram};
use crate::error::{BracketError, CertifyError, DiagramError, SiteError};
use crate::moves::{crossing_move, saddle_move, MarkedDiagram};
use crate::poly::LaurentPoly;
use crate::torus::TorusLinkSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "knotcert", version, about = "Jones polynomials and saddle/crossing-move certificates for link diagrams")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest crossing count the bracket will expand.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Worker threads for the state sum.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a diagram.
    Validate { file: PathBuf },
    /// Jones polynomial in t.
    Jones { file: PathBuf },
    /// Kauffman bracket in A.
    Bracket { file: PathBuf },
    Writhe { file: PathBuf },
    /// Linking number of two components (0-based indices).
    Lk {
        file: PathBuf,
        #[arg(long)]
        c1: usize,
        #[arg(long)]
        c2: usize,
    },
    /// Apply the saddle move at the marked site.
    Saddle { file: PathBuf },
    /// Apply the crossing move at the marked site.
    Crossing { file: PathBuf },
    /// Check the saddle/crossing Jones identity on a marked diagram.
    Identity { file: PathBuf },
    /// Try to separate two marked diagrams.
    Certify { x: PathBuf, y: PathBuf },
    /// Try to separate a marked diagram from any whose saddle gives L(2,2m).
    CertifyTorus {
        x: PathBuf,
        #[arg(long)]
        m: i64,
    },
    /// Closure of the positive two-strand braid with n crossings.
    Torus {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, conflicts_with = "jones")]
        emit_pd: bool,
        #[arg(long)]
        jones: bool,
    },
    /// Connected sum along one arc of each diagram.
    Consum {
        f1: PathBuf,
        #[arg(long = "arc", num_args = 1, required = true)]
        arcs: Vec<ArcId>,
        f2: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Cap(String),
    Identity,
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<SiteError> for Failure {
    fn from(e: SiteError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<BracketError> for Failure {
    fn from(e: BracketError) -> Self {
        match e {
            BracketError::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<CertifyError> for Failure {
    fn from(e: CertifyError) -> Self {
        match e {
            CertifyError::Bracket(b) => b.into(),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Result<Diagram, Failure> {
    parse_diagram(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_marked(path: &Path) -> Result<MarkedDiagram, Failure> {
    MarkedDiagram::from_json_str(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

struct Printer<'a, W: Write> {
    out: &'a mut W,
    json: bool,
}

impl<W: Write> Printer<'_, W> {
    fn line(&mut self, s: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{s}");
    }

    fn poly(&mut self, p: &LaurentPoly) {
        if self.json {
            let v = serde_json::to_value(p.to_json_terms()).expect("plain data");
            self.line(v);
        } else {
            self.line(p);
        }
    }

    fn diagram(&mut self, d: &Diagram) {
        if self.json {
            self.line(d.to_json());
        } else {
            self.line(d.to_pd_string());
        }
    }

    fn verdict(&mut self, v: &Verdict) {
        if self.json {
            self.line(v.to_json());
        } else {
            self.line(match v.outcome {
                Outcome::Distinguished => "Distinguished",
                Outcome::Inconclusive => "Inconclusive",
            });
            self.line(format_args!("lhs: {}", v.lhs));
            self.line(format_args!("rhs: {}", v.rhs));
            self.line(format_args!("delta_w: {}", v.delta_w));
            let check = serde_json::to_value(v.triviality_check).expect("plain data");
            self.line(format_args!("triviality_check: {}", check.as_str().unwrap_or_default()));
        }
    }
}

fn execute<W: Write>(cli: Cli, p: &mut Printer<'_, W>) -> Result<i32, Failure> {
    let opts = BracketOptions { cap: cli.cap, threads: cli.threads.max(1) };
    match cli.command {
        Command::Validate { file } => {
            let d = load_diagram(&file)?;
            if p.json {
                p.line(serde_json::json!({
                    "valid": true,
                    "crossings": d.crossing_count(),
                    "components": d.component_count(),
                    "writhe": d.writhe(),
                }));
            } else {
                p.line(format_args!(
                    "valid: {} crossings, {} components, writhe {}",
                    d.crossing_count(),
                    d.component_count(),
                    d.writhe()
                ));
            }
        }
        Command::Jones { file } => p.poly(&jones_with(&load_diagram(&file)?, opts)?),
        Command::Bracket { file } => p.poly(&kauffman_bracket_with(&load_diagram(&file)?, opts)?),
        Command::Writhe { file } => {
            let w = load_diagram(&file)?.writhe();
            if p.json {
                p.line(serde_json::json!({ "writhe": w }));
            } else {
                p.line(w);
            }
        }
        Command::Lk { file, c1, c2 } => {
            let lk = load_diagram(&file)?.linking_number(ComponentId(c1), ComponentId(c2))?;
            if p.json {
                p.line(serde_json::json!({ "linking_number": lk }));
            } else {
                p.line(lk);
            }
        }
        Command::Saddle { file } => p.diagram(&saddle_move(&load_marked(&file)?)?),
        Command::Crossing { file } => p.diagram(&crossing_move(&load_marked(&file)?)?),
        Command::Identity { file } => {
            let check = check_jones1_identity(&load_marked(&file)?, opts)?;
            if p.json {
                p.line(serde_json::json!({
                    "holds": check.holds,
                    "lhs": check.lhs.to_json_terms(),
                    "rhs": check.rhs.to_json_terms(),
                    "delta_w": check.delta_w,
                }));
            } else {
                p.line(if check.holds { "holds" } else { "FAILS" });
                p.line(format_args!("lhs: {}", check.lhs));
                p.line(format_args!("rhs: {}", check.rhs));
                p.line(format_args!("delta_w: {}", check.delta_w));
            }
            if !check.holds {
                return Err(Failure::Identity);
            }
        }
        Command::Certify { x, y } => {
            let v = certify_distinct(&load_marked(&x)?, &load_marked(&y)?, opts)?;
            p.verdict(&v);
            return Ok(outcome_code(v.outcome));
        }
        Command::CertifyTorus { x, m } => {
            let v = certify_distinct_torus(&load_marked(&x)?, m, opts)?;
            p.verdict(&v);
            return Ok(outcome_code(v.outcome));
        }
        Command::Torus { n, emit_pd: _, jones } => {
            let spec = TorusLinkSpec::new(n)?;
            let d = spec.diagram();
            if jones {
                p.poly(&jones_with(&d, opts)?);
            } else {
                p.diagram(&d);
            }
        }
        Command::Consum { f1, arcs, f2 } => {
            let [a1, a2] = arcs[..] else {
                return Err(Failure::Input(format!("consum takes exactly two --arc values, got {}", arcs.len())));
            };
            p.diagram(&connected_sum(&load_diagram(&f1)?, a1, &load_diagram(&f2)?, a2)?);
        }
    }
    Ok(EXIT_OK)
}

fn outcome_code(o: Outcome) -> i32 {
    match o {
        Outcome::Distinguished => EXIT_OK,
        Outcome::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    let json = cli.json;
    match execute(cli, &mut Printer { out, json }) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Cap(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CAP
        }
        Err(Failure::Identity) => {
            let _ = writeln!(err, "error: identity check failed");
            EXIT_IDENTITY_FAILED
        }
    }
}
