//! Command-line front end. `run` takes the argument list and output sinks
//! and returns the process exit code: 0 success or PASS, 1 FAIL, 2 input
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::matrix::structured_poly;
use crate::algebra::{PolyMatrix, Var, WeightPoly};
use crate::block::{dual_code, hwgf, ipwgf, LinearCode, SystematicCode};
use crate::conv::generator::format_fq_poly;
use crate::conv::{
    dual_constraint_code, dual_total_wgf, free_distance, free_wgf, iowam, ipwam, macwilliams_ipwam,
    macwilliams_wam, orthogonality_check, poly_generator, rational_generator, total_wgf, wam,
    Collapse, ConvSeed, FreeDistance, SystematicConvSeed,
};
use crate::error::{Error, Result};
use crate::formats::{self, ConvFile, FileKind};
use crate::quantum::{
    dual_spec, poly_check_matrix, quantum_dual_wam, quantum_wam, state_diagram, validate_clifford,
    EaqccSpec,
};
use crate::verify::{self, Check};

#[derive(Parser, Debug)]
#[command(
    name = "convwam",
    version,
    about = "Weight enumerators and MacWilliams identities for block, convolutional and quantum convolutional codes"
)]
struct Cli {
    /// Truncation degree in D for series outputs.
    #[arg(long, global = true, default_value_t = 10)]
    dmax: u32,
    /// Merge variables before printing.
    #[arg(long, global = true, value_enum)]
    collapse: Option<CollapseArg>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest number of words any enumeration may visit.
    #[arg(long, global = true)]
    budget: Option<u128>,
    #[command(subcommand)]
    group: Group,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CollapseArg {
    #[value(name = "y")]
    Y,
    #[value(name = "yIyP")]
    YiYp,
    #[value(name = "yIyO")]
    YiYo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Linear block codes.
    Block {
        #[command(subcommand)]
        cmd: BlockCmd,
    },
    /// Convolutional encoders.
    Conv {
        #[command(subcommand)]
        cmd: ConvCmd,
    },
    /// Entanglement-assisted quantum convolutional codes.
    Quantum {
        #[command(subcommand)]
        cmd: QuantumCmd,
    },
    /// Check identities against exhaustive oracles.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand, Debug)]
enum BlockCmd {
    /// Hamming weight generating function.
    Hwgf { file: PathBuf },
    /// Input-parity weight generating function of a systematic generator.
    Ipwgf { file: PathBuf },
    /// Generator of the dual code.
    Dual { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ConvCmd {
    /// Weight adjacency matrix (input-parity variables for systematic files).
    Wam { file: PathBuf },
    /// Input-parity WAM of a systematic encoder.
    Ipwam { file: PathBuf },
    /// Input-output WAM.
    Iowam { file: PathBuf },
    /// WAM of the dual code via the MacWilliams transform.
    DualWam { file: PathBuf },
    /// Input-parity WAM of the dual systematic encoder.
    DualIpwam { file: PathBuf },
    /// Total weight generating function W(D).
    Total { file: PathBuf },
    /// Total weight generating function of the dual code.
    DualTotal { file: PathBuf },
    /// Generating function of concatenated fundamental paths.
    Free { file: PathBuf },
    /// Free distance.
    Dfree { file: PathBuf },
    /// Generator matrix G(D), truncated and as a rational matrix.
    Gd { file: PathBuf },
    /// Orthogonality of the encoder and its dual.
    CheckDual { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum QuantumCmd {
    /// WAM of the code.
    Wam { file: PathBuf },
    /// WAM of the dual code via the MacWilliams transform.
    DualWam { file: PathBuf },
    /// Seed file of the dual code.
    DualSpec { file: PathBuf },
    /// Check the Clifford relations and role sets.
    CheckSeed { file: PathBuf },
    /// Polynomial check matrix S(D) and logical matrix L(D).
    Sd { file: PathBuf },
    /// State diagram with (logical, physical) edge labels.
    StateDiagram { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Every identity applicable to the file.
    All { file: PathBuf },
}

/// What a command produced.
enum Outcome {
    Text(String),
    Verdict(Vec<Check>),
}

struct Ctx {
    dmax: u32,
    collapse: Option<Collapse>,
    format: Format,
    budget: Option<u128>,
}

/// Input problems that are not library errors.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> InputError {
        InputError(e.to_string())
    }
}

type CmdResult = std::result::Result<Outcome, InputError>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let ctx = Ctx {
        dmax: cli.dmax,
        collapse: cli.collapse.map(|c| match c {
            CollapseArg::Y => Collapse::Y,
            CollapseArg::YiYp => Collapse::YiYp,
            CollapseArg::YiYo => Collapse::YiYo,
        }),
        format: cli.format,
        budget: cli.budget,
    };
    let result = match &cli.group {
        Group::Block { cmd } => block(&ctx, cmd),
        Group::Conv { cmd } => conv(&ctx, cmd),
        Group::Quantum { cmd } => quantum(&ctx, cmd),
        Group::Verify {
            cmd: VerifyCmd::All { file },
        } => verify_all(&ctx, file),
    };
    match result {
        Ok(Outcome::Text(s)) => {
            let _ = write!(out, "{s}");
            0
        }
        Ok(Outcome::Verdict(checks)) => {
            for c in &checks {
                let _ = writeln!(out, "{}", c.line());
            }
            if checks.iter().all(|c| c.passed) {
                0
            } else {
                1
            }
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, InputError> {
    std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

/// Library errors from parsing are reported as `path:line:col: msg`.
fn located<T>(path: &Path, r: Result<T>) -> std::result::Result<T, InputError> {
    r.map_err(|e| match e {
        Error::Parse { line, col, msg } => {
            InputError(format!("{}:{line}:{col}: {msg}", path.display()))
        }
        other => InputError(format!("{}: {other}", path.display())),
    })
}

fn load_block(ctx: &Ctx, path: &Path) -> std::result::Result<LinearCode, InputError> {
    let code = located(path, formats::parse_block(&read(path)?))?;
    Ok(match ctx.budget {
        Some(b) => code.with_budget(b),
        None => code,
    })
}

fn load_conv(ctx: &Ctx, path: &Path) -> std::result::Result<ConvFile, InputError> {
    let mut f = located(path, formats::parse_conv(&read(path)?))?;
    if let Some(b) = ctx.budget {
        f.seed = f.seed.with_budget(b);
        if let Some(s) = &f.systematic {
            let base = s.base().clone().with_budget(b);
            f.systematic = Some(if s.is_leading() {
                SystematicConvSeed::new(base)?
            } else {
                SystematicConvSeed::new_trailing(base)?
            });
        }
    }
    Ok(f)
}

fn load_quantum(ctx: &Ctx, path: &Path) -> std::result::Result<EaqccSpec, InputError> {
    let spec = located(path, formats::parse_quantum(&read(path)?))?;
    Ok(match ctx.budget {
        Some(b) => spec.with_budget(b),
        None => spec,
    })
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"
}

fn no_dot(ctx: &Ctx) -> std::result::Result<(), InputError> {
    if ctx.format == Format::Dot {
        return Err(InputError(
            "--format dot is only available for state diagrams".into(),
        ));
    }
    Ok(())
}

fn show_matrix(ctx: &Ctx, l: &PolyMatrix) -> CmdResult {
    no_dot(ctx)?;
    let l = match ctx.collapse {
        Some(c) => c.apply_matrix(l),
        None => l.clone(),
    };
    Ok(Outcome::Text(match ctx.format {
        Format::Structured => json(&l.to_structured()),
        _ => l.render(),
    }))
}

/// The WAM at x = 1, which the series are defined on.
fn lambda_y(s: &ConvSeed) -> Result<PolyMatrix> {
    Ok(wam(s)?.map(|e| e.set_ones(&[Var::X])))
}

fn show_poly(ctx: &Ctx, p: &WeightPoly) -> CmdResult {
    no_dot(ctx)?;
    let p = match ctx.collapse {
        Some(c) => c.apply(p),
        None => p.clone(),
    };
    Ok(Outcome::Text(match ctx.format {
        Format::Structured => json(&structured_poly(&p)),
        _ => format!("{p}\n"),
    }))
}

fn systematic_block(code: LinearCode) -> std::result::Result<SystematicCode, InputError> {
    SystematicCode::new(code.clone())
        .or_else(|_| SystematicCode::new_trailing(code))
        .map_err(|_| InputError("generator is neither (I_k | A) nor (B | I_k)".into()))
}

fn block(ctx: &Ctx, cmd: &BlockCmd) -> CmdResult {
    match cmd {
        BlockCmd::Hwgf { file } => show_poly(ctx, &hwgf(&load_block(ctx, file)?)?),
        BlockCmd::Ipwgf { file } => {
            show_poly(ctx, &ipwgf(&systematic_block(load_block(ctx, file)?)?)?)
        }
        BlockCmd::Dual { file } => {
            no_dot(ctx)?;
            let d = dual_code(&load_block(ctx, file)?);
            Ok(Outcome::Text(match ctx.format {
                Format::Structured => {
                    let rows: Vec<Vec<u32>> = d
                        .generator()
                        .iter()
                        .map(|r| r.iter().map(|x| x.index()).collect())
                        .collect();
                    json(&serde_json::json!({
                        "q": d.field().q(),
                        "n": d.n(),
                        "k": d.k(),
                        "generator": rows,
                    }))
                }
                _ => formats::write_block(&d),
            }))
        }
    }
}

fn require_systematic(f: &ConvFile) -> std::result::Result<&SystematicConvSeed, InputError> {
    f.systematic
        .as_ref()
        .ok_or_else(|| InputError("this command needs a file with a 'systematic' line".into()))
}

fn conv(ctx: &Ctx, cmd: &ConvCmd) -> CmdResult {
    use ConvCmd::*;
    let file = match cmd {
        Wam { file }
        | Ipwam { file }
        | Iowam { file }
        | DualWam { file }
        | DualIpwam { file }
        | Total { file }
        | DualTotal { file }
        | Free { file }
        | Dfree { file }
        | Gd { file }
        | CheckDual { file } => file,
    };
    let f = load_conv(ctx, file)?;
    let s = &f.seed;
    let (n, k, m) = (s.n(), s.k(), s.m());
    match cmd {
        Wam { .. } => match &f.systematic {
            Some(sys) => show_matrix(ctx, &ipwam(sys)?),
            None => show_matrix(ctx, &wam(s)?),
        },
        Ipwam { .. } => show_matrix(ctx, &ipwam(require_systematic(&f)?)?),
        Iowam { .. } => show_matrix(ctx, &iowam(s)?),
        DualWam { .. } => show_matrix(ctx, &macwilliams_wam(&wam(s)?, s.field(), n, k, m)?),
        DualIpwam { .. } => {
            let sys = require_systematic(&f)?;
            show_matrix(ctx, &macwilliams_ipwam(&ipwam(sys)?, s.field(), n, k, m)?)
        }
        Total { .. } => show_poly(ctx, &total_wgf(&lambda_y(s)?, ctx.dmax)),
        DualTotal { .. } => show_poly(
            ctx,
            &dual_total_wgf(&wam(s)?, s.field(), n, k, m, ctx.dmax)?,
        ),
        Free { .. } => show_poly(ctx, &free_wgf(&lambda_y(s)?, ctx.dmax)),
        Dfree { .. } => {
            no_dot(ctx)?;
            let text = match free_distance(&lambda_y(s)?, ctx.dmax) {
                FreeDistance::Found(d) => format!("{d}\n"),
                FreeDistance::Undetermined { d_max } => {
                    format!("undetermined within {d_max} steps\n")
                }
                FreeDistance::NoNonzeroPaths => "no nonzero fundamental path\n".to_string(),
            };
            Ok(Outcome::Text(text))
        }
        Gd { .. } => {
            no_dot(ctx)?;
            let g = poly_generator(s, ctx.dmax as usize);
            let (num, den) = rational_generator(s);
            let mut text = format!("G(D) mod D^{}:\n{g}", ctx.dmax + 1);
            text += &format!("denominator: {}\nnumerator:\n", format_fq_poly(&den));
            for row in &num {
                let cells: Vec<String> = row.iter().map(|p| format_fq_poly(p)).collect();
                text += &format!("[{}]\n", cells.join(", "));
            }
            Ok(Outcome::Text(text))
        }
        CheckDual { .. } => {
            let dual = dual_constraint_code(s)?;
            let report = orthogonality_check(s, &dual);
            let mut checks = vec![Check {
                name: "generator matrices are orthogonal".into(),
                passed: report.holds(),
                detail: report.failures.join("; "),
            }];
            if let Some(sys) = &f.systematic {
                let r = orthogonality_check(s, sys.dual()?.base());
                checks.push(Check {
                    name: "systematic dual generator is orthogonal".into(),
                    passed: r.holds(),
                    detail: r.failures.join("; "),
                });
            }
            Ok(Outcome::Verdict(checks))
        }
    }
}

fn quantum(ctx: &Ctx, cmd: &QuantumCmd) -> CmdResult {
    use QuantumCmd::*;
    match cmd {
        Wam { file } => show_matrix(ctx, &quantum_wam(&load_quantum(ctx, file)?)?),
        DualWam { file } => show_matrix(ctx, &quantum_dual_wam(&load_quantum(ctx, file)?)?),
        DualSpec { file } => {
            no_dot(ctx)?;
            Ok(Outcome::Text(formats::write_quantum(&dual_spec(
                &load_quantum(ctx, file)?,
            ))))
        }
        CheckSeed { file } => {
            let qf = located(file, formats::parse_quantum_file(&read(file)?))?;
            let report = validate_clifford(&qf.seed);
            let mut checks = vec![Check {
                name: "seed satisfies the symplectic relations".into(),
                passed: report.is_valid(),
                detail: report.violations.join("; "),
            }];
            if report.is_valid() {
                let roles = qf.into_spec();
                checks.push(Check {
                    name: "role sets are consistent".into(),
                    passed: roles.is_ok(),
                    detail: roles.err().map(|e| e.to_string()).unwrap_or_default(),
                });
            }
            Ok(Outcome::Verdict(checks))
        }
        Sd { file } => {
            no_dot(ctx)?;
            let h = poly_check_matrix(&load_quantum(ctx, file)?, ctx.dmax);
            Ok(Outcome::Text(match ctx.format {
                Format::Structured => {
                    let rows = |v: &[crate::quantum::PauliSeries]| -> Vec<String> {
                        v.iter().map(|r| r.to_string()).collect()
                    };
                    json(&serde_json::json!({
                        "d_max": h.d_max,
                        "s_z": rows(&h.s_z),
                        "s_e": rows(&h.s_e),
                        "logical": rows(&h.logical),
                    }))
                }
                _ => h.to_string(),
            }))
        }
        StateDiagram { file } => {
            let d = state_diagram(&load_quantum(ctx, file)?)?;
            Ok(Outcome::Text(match ctx.format {
                Format::Dot => d.to_dot(),
                Format::Structured => {
                    let edges: Vec<serde_json::Value> = d
                        .edges
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "from": d.labels[e.from],
                                "to": d.labels[e.to],
                                "logical": e.logical.to_string(),
                                "physical": e.physical.to_string(),
                            })
                        })
                        .collect();
                    json(&serde_json::json!({ "labels": d.labels, "edges": edges }))
                }
                Format::Text => d.render(),
            }))
        }
    }
}

fn verify_all(ctx: &Ctx, path: &Path) -> CmdResult {
    let text = read(path)?;
    let checks = match formats::detect(&text) {
        FileKind::Block => verify::verify_block(&load_block(ctx, path)?)?,
        FileKind::Conv => verify::verify_conv(&load_conv(ctx, path)?, ctx.dmax)?,
        FileKind::Quantum => verify::verify_quantum(&load_quantum(ctx, path)?, ctx.dmax)?,
    };
    Ok(Outcome::Verdict(checks))
}
