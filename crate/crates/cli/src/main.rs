use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pretzel_core::arith::format_rational;
use pretzel_core::hatcher_oertel::{enumerate_surfaces, SurfaceReport};
use pretzel_core::jones::{
    degree_report, DegreeReport, FitCaps, PretzelKnot, Quadratic, StateSumEngine,
};
use pretzel_core::verify::{parse_range, summarize, sweep, verify, CaseLabel, VerificationResult};
use serde_json::json;

const EXIT_OUT_OF_SCOPE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pretzel",
    version,
    about = "Colored Jones polynomials and boundary slopes of pretzel knots P(1/r, 1/s, 1/t)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest period tried by the quasi-polynomial fit.
    #[arg(long, default_value_t = 12, global = true)]
    period_cap: usize,
    /// Largest cutoff tried by the quasi-polynomial fit.
    #[arg(long, default_value_t = 3, global = true)]
    cutoff_cap: usize,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Copy)]
struct KnotArgs {
    #[arg(short, allow_negative_numbers = true)]
    r: i64,
    #[arg(short, allow_negative_numbers = true)]
    s: i64,
    #[arg(short, allow_negative_numbers = true)]
    t: i64,
}

impl KnotArgs {
    fn knot(&self) -> Result<PretzelKnot> {
        Ok(PretzelKnot::new(self.r, self.s, self.t)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print J_K(N; v).
    Jones {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(short = 'n', long = "n", default_value_t = 2)]
        n: u32,
    },
    /// Print d₊J_K(1..=N_max) and the fitted degree law.
    Degrees {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(short = 'n', long, default_value_t = 14)]
        n_max: u32,
    },
    /// Print the candidate surfaces from the edgepath algorithm.
    Slopes {
        #[command(flatten)]
        knot: KnotArgs,
    },
    /// Compare the Jones degree law with the candidate surfaces.
    Verify {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(short = 'n', long, default_value_t = 14)]
        n_max: u32,
    },
    /// Verify every in-scope knot in a box of parameters.
    Sweep {
        /// Inclusive range such as -9..-3; even values are skipped.
        #[arg(long, allow_hyphen_values = true)]
        r_range: String,
        #[arg(long, allow_hyphen_values = true)]
        s_range: String,
        #[arg(long, allow_hyphen_values = true)]
        t_range: String,
        #[arg(short = 'n', long, default_value_t = 14)]
        n_max: u32,
    },
}

struct Output {
    text: String,
    code: u8,
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn knot_json(k: &PretzelKnot) -> serde_json::Value {
    json!({ "r": k.r, "s": k.s, "t": k.t })
}

fn degree_text(k: &PretzelKnot, r: &DegreeReport) -> String {
    let mut out = format!("{k}\n  N  d+J(N)\n");
    for (i, d) in r.degrees.iter().enumerate() {
        out += &format!("{:>3}  {d}\n", i + 1);
    }
    out += &format!(
        "law ({:?}, period {}, cutoff {}):\n",
        r.source, r.period, r.cutoff
    );
    for (j, c) in r.constants.iter().enumerate() {
        let q = Quadratic::new(r.slope.clone(), r.linear.clone(), c.clone());
        out += &format!("  n = {j} mod {}: {q}\n", r.period);
    }
    if let Some(ok) = r.consistent {
        out += &format!("closed form agrees: {ok}\n");
    }
    out
}

fn surface_line(s: &SurfaceReport) -> String {
    format!(
        "slope {:>7}  chi/m {:>5}  m {:>3}  |dS| {:>2}  r {:?}  {}{}{}\n    {}\n",
        format_rational(&s.slope),
        format_rational(&s.chi_over_m),
        s.sheets,
        s.boundary_components,
        s.r_cycle,
        if s.incompressible {
            "incompressible"
        } else {
            "compressible"
        },
        if s.is_seifert_reference {
            ", Seifert reference"
        } else {
            ""
        },
        if s.euler_validated {
            ""
        } else {
            ", unvalidated-euler"
        },
        s.edgepaths.join(" | ")
    )
}

fn verification_text(v: &VerificationResult) -> String {
    let mut out = format!("{}  {}\n", v.knot, v.case);
    match &v.jones {
        Some(j) => {
            out += &format!(
                "  jones slope {}, b = {}\n",
                format_rational(&j.slope),
                format_rational(&(&j.linear / pretzel_core::arith::int(2)))
            )
        }
        None => out += &format!("  jones: {}\n", v.error.as_deref().unwrap_or("unavailable")),
    }
    if let Some(w) = v.witness {
        out += &format!("  witness: {}", surface_line(&v.surfaces[w]));
    }
    out += &format!(
        "  slope match: {}, strong match: {}\n",
        v.matches.slope, v.matches.strong
    );
    out
}

fn run(cli: &Cli) -> Result<Output> {
    let caps = FitCaps {
        period: cli.period_cap,
        cutoff: cli.cutoff_cap,
    };
    let engine = StateSumEngine::new();
    let json_mode = cli.format == Format::Json;
    Ok(match &cli.command {
        Command::Jones { knot, n } => {
            let k = knot.knot()?;
            let j = engine.colored_jones(&k, *n)?;
            let text = if json_mode {
                json_text(&json!({ "knot": knot_json(&k), "n": n, "jones": j.to_string() }))
            } else {
                format!("{j}\n")
            };
            Output { text, code: 0 }
        }
        Command::Degrees { knot, n_max } => {
            let k = knot.knot()?;
            let r = degree_report(&engine, &k, *n_max, caps)?;
            let text = if json_mode {
                json_text(&json!({ "knot": knot_json(&k), "jones": r }))
            } else {
                degree_text(&k, &r)
            };
            Output { text, code: 0 }
        }
        Command::Slopes { knot } => {
            let k = knot.knot()?;
            let surfaces = enumerate_surfaces(&k);
            let text = if json_mode {
                json_text(&json!({ "knot": knot_json(&k), "surfaces": surfaces }))
            } else {
                format!("{k}\n") + &surfaces.iter().map(surface_line).collect::<String>()
            };
            Output { text, code: 0 }
        }
        Command::Verify { knot, n_max } => {
            let k = knot.knot()?;
            let v = verify(&engine, &k, *n_max, caps);
            let code = if v.case == CaseLabel::OutOfScope {
                EXIT_OUT_OF_SCOPE
            } else if v.passed() {
                0
            } else {
                EXIT_MISMATCH
            };
            let text = if json_mode {
                json_text(&serde_json::to_value(&v)?)
            } else if code == EXIT_MISMATCH {
                verification_text(&v) + &json_text(&serde_json::to_value(&v)?)
            } else {
                verification_text(&v)
            };
            Output { text, code }
        }
        Command::Sweep {
            r_range,
            s_range,
            t_range,
            n_max,
        } => {
            let rs = parse_range(r_range).context("--r-range")?;
            let ss = parse_range(s_range).context("--s-range")?;
            let ts = parse_range(t_range).context("--t-range")?;
            let results = sweep(&engine, &rs, &ss, &ts, *n_max, caps);
            let summary = summarize(&results);
            let code = if summary.failures > 0 {
                EXIT_MISMATCH
            } else {
                0
            };
            let text = if json_mode {
                json_text(&json!({ "results": results, "summary": summary }))
            } else {
                let mut out: String = results.iter().map(verification_text).collect();
                out += &format!(
                    "{} knots: {} slope matches, {} strong matches, {} failures\n",
                    summary.knots, summary.slope_matches, summary.strong_matches, summary.failures
                );
                for v in results.iter().filter(|v| !v.passed()) {
                    out += &format!(
                        "MISMATCH {}\n{}",
                        v.knot,
                        json_text(&serde_json::to_value(v)?)
                    );
                }
                out
            };
            Output { text, code }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e:#}");
            let invalid = e
                .downcast_ref::<pretzel_core::Error>()
                .is_some_and(|e| matches!(e, pretzel_core::Error::InvalidKnot(_)));
            return ExitCode::from(if invalid { EXIT_OUT_OF_SCOPE } else { 1 });
        }
    };
    let written = match &cli.out {
        Some(path) => {
            std::fs::write(path, &out.text).with_context(|| format!("writing {}", path.display()))
        }
        None => std::io::stdout()
            .write_all(out.text.as_bytes())
            .map_err(Into::into),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::FAILURE;
    }
    ExitCode::from(out.code)
}
