use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use txray::cutting::{cut_u2, CutSpec};
use txray::document::{Document, Payload};
use txray::geometry::{LatticeVector, Rational};
use txray::group::{Lambda, ROOTS};
use txray::obstruction::tolman_check;
use txray::render::{render, Format, Overlays};
use txray::scenarios::{gelfand_cetlin, hirzebruch, hn_sweep, m1_flag, m2_toric, HnParams};
use txray::xray::{chamber_to_xray, flag_xray, toric_xray, validate_xray};
use txray::Error;

/// X-rays, symplectic cuts and Kähler obstructions for Hamiltonian torus
/// actions. Files are JSON documents; `-` means stdin or stdout.
#[derive(Parser)]
#[command(name = "txray", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an X-ray.
    #[command(subcommand)]
    Xray(XrayCommand),
    /// Cut a chamber document by `<X, p> <= a`.
    #[command(allow_negative_numbers = true)]
    Cut {
        #[arg(long)]
        chamber: PathBuf,
        /// Cutting circle `X`, e.g. `1,2`.
        #[arg(long, allow_hyphen_values = true)]
        circle: String,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
        #[command(flatten)]
        out: Out,
    },
    /// Run the obstruction check on an X-ray document.
    Check {
        #[arg(long)]
        xray: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Worked examples.
    #[command(subcommand)]
    Scenario(ScenarioCommand),
    /// Draw an X-ray document.
    Render {
        #[arg(long)]
        xray: PathBuf,
        #[arg(long, value_enum, default_value = "svg")]
        format: RenderFormat,
        /// Draw the Weyl wall.
        #[arg(long)]
        wall: bool,
        /// Dashed cut line, given with `--level`.
        #[arg(long, allow_hyphen_values = true, requires = "level")]
        circle: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "circle")]
        level: Option<String>,
        /// Highlight the uncovered faces of a verdict document.
        #[arg(long)]
        highlight: Option<PathBuf>,
        #[command(flatten)]
        out: Out,
    },
    /// Decode a document and check its invariants.
    Validate {
        #[arg(long)]
        file: PathBuf,
        /// Also require Weyl symmetry of an X-ray.
        #[arg(long)]
        weyl: bool,
    },
}

#[derive(Subcommand)]
enum XrayCommand {
    /// Generic coadjoint orbit of U(3).
    Flag {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        out: Out,
    },
    /// Toric manifold from a polytope3 document.
    Toric {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Multiplicity-free U(2)-space from a chamber document.
    Chamber {
        #[arg(long)]
        chamber: PathBuf,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum ScenarioCommand {
    /// Generalized Hirzebruch space H_n.
    #[command(allow_negative_numbers = true)]
    Hn {
        #[arg(long)]
        n: i64,
        /// Override the default eigenvalues.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Override the default cut level.
        #[arg(long, allow_hyphen_values = true)]
        level: Option<String>,
        #[arg(long, value_enum, default_value = "verdict")]
        emit: Emit,
        #[command(flatten)]
        out: Out,
    },
    /// Verdicts for H_n over a range of n.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
        #[command(flatten)]
        out: Out,
    },
    /// The flag variety M1.
    M1 {
        #[arg(long, default_value = "5,1,0", allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        out: Out,
    },
    /// The toric manifold M2.
    M2 {
        #[arg(long, value_enum, default_value = "xray")]
        emit: Emit,
        #[command(flatten)]
        out: Out,
    },
    /// Tolman's M3, i.e. H_2.
    M3 {
        #[arg(long, value_enum, default_value = "verdict")]
        emit: Emit,
        #[command(flatten)]
        out: Out,
    },
    /// Chamber data of a generic coadjoint orbit of U(3).
    GelfandCetlin {
        #[arg(long, default_value = "5,1,0", allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Polytope3,
    Chamber,
    Xray,
    Verdict,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Svg,
    Ascii,
}

#[derive(Args)]
struct Out {
    /// Output file.
    #[arg(long, default_value = "-")]
    out: PathBuf,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> &'static str {
        match self {
            Failure::Lib(e) => e.code(),
            Failure::Io(_) => "Io",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        }
    }
}

type Run<T = ()> = std::result::Result<T, Failure>;

fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read(path: &Path) -> Run<String> {
    let mut text = String::new();
    if is_stdio(path) {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn load(path: &Path) -> Run<Document> {
    Ok(Document::decode(&read(path)?)?)
}

fn write(out: &Out, text: &str) -> Run {
    if is_stdio(&out.out) {
        io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}")))
    } else {
        fs::write(&out.out, text).map_err(|e| Failure::Io(format!("{}: {e}", out.out.display())))
    }
}

fn emit(out: &Out, payload: Payload, provenance: String) -> Run {
    write(out, &Document::new(payload, provenance).encode())
}

fn parse_rational(s: &str) -> Run<Rational> {
    Rational::from_str(s.trim())
        .map_err(|e| Error::InvalidParameter(format!("bad rational {s:?}: {e}")).into())
}

fn parse_list(s: &str, n: usize) -> Run<Vec<Rational>> {
    let items = s.split(',').map(parse_rational).collect::<Run<Vec<_>>>()?;
    if items.len() != n {
        return Err(Error::InvalidParameter(format!(
            "expected {n} comma-separated values, got {s:?}"
        ))
        .into());
    }
    Ok(items)
}

fn parse_lambda(s: &str) -> Run<Lambda> {
    let v = parse_list(s, 3)?;
    Ok(Lambda::new(v[0], v[1], v[2])?)
}

fn parse_circle(s: &str) -> Run<LatticeVector> {
    let v = parse_list(s, 2)?;
    if v.iter().any(|r| !r.is_integer()) {
        return Err(
            Error::InvalidParameter(format!("circle {s:?} must have integer entries")).into(),
        );
    }
    Ok(LatticeVector::new(v[0].to_integer(), v[1].to_integer()))
}

fn hn_payload(h: txray::scenarios::Hirzebruch, what: Emit) -> Run<Payload> {
    Ok(match what {
        Emit::Chamber => Payload::Chamber(h.chamber),
        Emit::Xray => Payload::XRay(h.xray),
        Emit::Verdict => Payload::Verdict(h.verdict),
        Emit::Polytope3 => {
            return Err(Error::InvalidParameter("H_n has no 3-dimensional polytope".into()).into())
        }
    })
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Xray(XrayCommand::Flag { lambda, out }) => {
            let x = flag_xray(&parse_lambda(&lambda)?)?;
            emit(
                &out,
                Payload::XRay(x),
                format!("xray flag --lambda {lambda}"),
            )
        }
        Command::Xray(XrayCommand::Toric { file, out }) => {
            let x = toric_xray(&load(&file)?.into_polytope()?)?;
            emit(
                &out,
                Payload::XRay(x),
                format!("xray toric --file {}", file.display()),
            )
        }
        Command::Xray(XrayCommand::Chamber { chamber, out }) => {
            let x = chamber_to_xray(&load(&chamber)?.into_chamber()?)?;
            emit(
                &out,
                Payload::XRay(x),
                format!("xray chamber --chamber {}", chamber.display()),
            )
        }
        Command::Cut {
            chamber,
            circle,
            level,
            out,
        } => {
            let cd = load(&chamber)?.into_chamber()?;
            let spec = CutSpec::new(parse_circle(&circle)?, parse_rational(&level)?)?;
            let cut = cut_u2(&cd, &spec)?;
            emit(
                &out,
                Payload::Chamber(cut.chamber),
                format!(
                    "cut --chamber {} --circle {circle} --level {level}",
                    chamber.display()
                ),
            )
        }
        Command::Check { xray, out } => {
            let verdict = tolman_check(&load(&xray)?.into_xray()?)?;
            emit(
                &out,
                Payload::Verdict(verdict),
                format!("check --xray {}", xray.display()),
            )
        }
        Command::Scenario(s) => scenario(s),
        Command::Render {
            xray,
            format,
            wall,
            circle,
            level,
            highlight,
            out,
        } => {
            let x = load(&xray)?.into_xray()?;
            let cut = match (circle, level) {
                (Some(c), Some(l)) => Some(CutSpec::new(parse_circle(&c)?, parse_rational(&l)?)?),
                _ => None,
            };
            let highlight = match highlight {
                Some(path) => load(&path)?
                    .into_verdict()?
                    .certificates()
                    .iter()
                    .map(|c| c.uncovered_face)
                    .collect(),
                None => Vec::new(),
            };
            let format = match format {
                RenderFormat::Svg => Format::Svg,
                RenderFormat::Ascii => Format::Ascii,
            };
            write(
                &out,
                &render(
                    &x,
                    format,
                    &Overlays {
                        cut,
                        wall,
                        highlight,
                    },
                ),
            )
        }
        Command::Validate { file, weyl } => {
            let doc = load(&file)?;
            if let Payload::XRay(x) = &doc.payload {
                let report = validate_xray(x, weyl);
                if !report.is_valid() {
                    let why: Vec<String> =
                        report.violations.iter().map(|v| v.to_string()).collect();
                    return Err(Error::InvalidXRay(why.join("; ")).into());
                }
            }
            let ok = serde_json::json!({ "valid": true, "kind": doc.kind() });
            println!("{ok}");
            Ok(())
        }
    }
}

fn scenario(s: ScenarioCommand) -> Run {
    match s {
        ScenarioCommand::Hn {
            n,
            lambda,
            level,
            emit: what,
            out,
        } => {
            let params = match (&lambda, &level) {
                (Some(l), Some(a)) => HnParams {
                    n,
                    lambda: parse_lambda(l)?,
                    level: parse_rational(a)?,
                },
                _ => {
                    let mut p = HnParams::defaults(n)?;
                    if let Some(l) = &lambda {
                        p.lambda = parse_lambda(l)?;
                    }
                    if let Some(a) = &level {
                        p.level = parse_rational(a)?;
                    }
                    p
                }
            };
            let h = hirzebruch(&params)?;
            emit(&out, hn_payload(h, what)?, format!("scenario hn --n {n}"))
        }
        ScenarioCommand::Sweep { from, to, out } => emit(
            &out,
            Payload::Sweep(hn_sweep(from, to)?),
            format!("scenario sweep --from {from} --to {to}"),
        ),
        ScenarioCommand::M1 { lambda, out } => emit(
            &out,
            Payload::XRay(m1_flag(&parse_lambda(&lambda)?)?),
            format!("scenario m1 --lambda {lambda}"),
        ),
        ScenarioCommand::M2 { emit: what, out } => {
            let (p, x) = m2_toric()?;
            let payload = match what {
                Emit::Polytope3 => Payload::Polytope3(p),
                Emit::Xray => Payload::XRay(x),
                Emit::Verdict => Payload::Verdict(tolman_check(&x)?),
                Emit::Chamber => {
                    return Err(Error::InvalidParameter("M2 has no chamber data".into()).into())
                }
            };
            emit(&out, payload, "scenario m2".into())
        }
        ScenarioCommand::M3 { emit: what, out } => {
            let h = hirzebruch(&HnParams::defaults(2)?)?;
            emit(&out, hn_payload(h, what)?, "scenario m3".into())
        }
        ScenarioCommand::GelfandCetlin { lambda, out } => emit(
            &out,
            Payload::Chamber(gelfand_cetlin(&parse_lambda(&lambda)?)?),
            format!("scenario gelfand-cetlin --lambda {lambda}"),
        ),
    }
}

fn main() -> ExitCode {
    if let Err(e) = ROOTS.check() {
        eprintln!("{}", error_json(&Failure::Lib(e)));
        return ExitCode::from(3);
    }
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", error_json(&f));
            ExitCode::from(1)
        }
    }
}

fn error_json(f: &Failure) -> serde_json::Value {
    serde_json::json!({ "error": { "code": f.code(), "message": f.message() } })
}
