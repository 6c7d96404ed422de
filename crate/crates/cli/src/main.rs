//! Batch front end: parse datum specs, dispatch to the library, emit
//! deterministic JSON or aligned-text reports, and run the verification
//! suites.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when a verification
//! certificate fails.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use parind_core::character::{Mode, SmoothCharacter, SymbolAction};
use parind_core::ext::{ParabolicExtQuery, TorusAssumptions};
use parind_core::report::{
    self, CoinvariantsReport, CosetEntry, CosetsReport, ExtReport, FiltrationCommandReport,
    RootsReport, VerifyReport, WeylReport, SCHEMA_VERSION,
};
use parind_core::{coinv, ext, geom, verify, RootDatum, Subset, WeylGroup};
use serde::Serialize;
use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

mod render;

#[derive(Parser)]
#[command(
    name = "parind",
    version,
    about = "Exact combinatorics of parabolic induction for p-adic reductive groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Root-datum spec file (JSON or TOML).
    #[arg(long, global = true)]
    datum: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CharModeArg {
    Formal,
    Concrete,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExtModeArg {
    Ps,
    Parabolic,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots with their dimension weights.
    Roots,
    /// Enumerate the Weyl group.
    Weyl,
    /// Minimal double-coset representatives for (I, K).
    Cosets {
        #[arg(long = "I", default_value = "")]
        i: String,
        #[arg(long = "K", default_value = "")]
        k: String,
    },
    /// Graded pieces of the coinvariants filtration, grouped by height.
    Filtration {
        #[arg(long = "I", default_value = "")]
        i: String,
        #[arg(long = "K", default_value = "")]
        k: String,
        #[arg(long, value_enum, default_value_t = CharModeArg::Formal)]
        mode: CharModeArg,
    },
    /// Derived coinvariants of a principal series, per degree.
    Ps {
        #[arg(long = "I", default_value = "")]
        i: String,
        #[arg(long = "K", default_value = "")]
        k: String,
        /// Character of the Levi: `trivial`, a symbol name, or inline JSON.
        #[arg(long, default_value = "trivial")]
        chi: String,
        #[arg(long, value_enum, default_value_t = CharModeArg::Formal)]
        mode: CharModeArg,
    },
    /// Derived coinvariants of a generalized Steinberg representation.
    Steinberg {
        #[arg(long = "I", default_value = "")]
        i: String,
        #[arg(long = "K", default_value = "")]
        k: String,
    },
    /// Ext-group predictions.
    Ext {
        #[arg(long, value_enum)]
        mode: ExtModeArg,
        #[arg(long = "I", default_value = "")]
        i: String,
        #[arg(long = "K", default_value = "")]
        k: String,
        /// Degree r ≥ 0 (already `Q_p`-normalized).
        #[arg(long, default_value_t = 0)]
        r: u64,
        #[arg(long)]
        chi: Option<String>,
        #[arg(long)]
        chi_prime: Option<String>,
        #[arg(long, value_enum, default_value_t = CharModeArg::Formal)]
        char_mode: CharModeArg,
        /// Assert that the minimal Levi is a split torus.
        #[arg(long)]
        assume_split_torus: bool,
        /// Assert that p is odd and F has no p-th roots of unity.
        #[arg(long)]
        assume_p_odd_no_p_roots: bool,
        #[arg(long)]
        left_cuspidal: bool,
        #[arg(long)]
        right_cuspidal: bool,
        #[arg(long)]
        distinct_central_chars: bool,
    },
    /// Run certificate suites; exits 2 on the first counterexample.
    Verify {
        /// `all` or one of the suite names.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("parind: error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn load_group(cli_datum: &Option<PathBuf>) -> Result<WeylGroup> {
    let path = cli_datum.as_ref().ok_or_else(|| anyhow!("--datum <file> is required"))?;
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read datum spec `{}`", path.display()))?;
    let datum = RootDatum::from_spec_str(&text)?;
    Ok(WeylGroup::new(datum)?)
}

fn parse_subset(spec: &str, rank: usize) -> Result<Subset> {
    let mut out = Subset::EMPTY;
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let idx: usize = part
            .strip_prefix(['a', 'A'])
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| anyhow!("bad simple-root name `{part}` (expected e.g. `a1`)"))?;
        if idx == 0 || idx > rank {
            bail!("simple root `{part}` out of range for rank {rank}");
        }
        out = out.with(idx - 1);
    }
    Ok(out)
}

fn char_mode(arg: CharModeArg, w: &WeylGroup) -> Result<Mode> {
    Ok(match arg {
        CharModeArg::Formal => Mode::Formal,
        CharModeArg::Concrete => Mode::concrete(w.datum())?,
    })
}

fn parse_character(spec: &str, mode: Mode, w: &WeylGroup) -> Result<SmoothCharacter> {
    let rank = w.datum().rank();
    if spec.trim_start().starts_with('{') {
        let chi: SmoothCharacter =
            serde_json::from_str(spec).context("bad character JSON")?;
        if chi.mode() != mode {
            bail!("character mode in JSON disagrees with --mode / the datum prime");
        }
        if chi.cyclo().len() != rank {
            bail!("character weight has length {}, expected {rank}", chi.cyclo().len());
        }
        return Ok(chi);
    }
    match spec {
        "trivial" | "1" => Ok(SmoothCharacter::trivial(rank, mode)),
        name if name.chars().all(|c| c.is_alphanumeric() || c == '_') && !name.is_empty() => {
            Ok(SmoothCharacter::symbol(rank, name, mode))
        }
        other => bail!("bad character spec `{other}`"),
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: String) -> Result<()> {
    match format {
        Format::Json => {
            let json = serde_json::to_string_pretty(value)?;
            println!("{json}");
        }
        Format::Text => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    let format = cli.format;
    let w = load_group(&cli.datum)?;
    let rank = w.datum().rank();
    match cli.command {
        Command::Roots => {
            let rd = w.datum();
            let positive_roots: Vec<report::RootReport> = rd
                .positive_roots()
                .iter()
                .enumerate()
                .map(|(idx, r)| report::RootReport {
                    coeffs: r.coeffs().to_vec(),
                    d: rd.d_positive(idx),
                })
                .collect();
            let rep = RootsReport {
                schema: SCHEMA_VERSION,
                command: "roots".into(),
                rank,
                f: rd.f(),
                z_dim: rd.z_dim(),
                dim_g: rd.dim_g(),
                positive_roots,
            };
            emit(format, &rep, render::roots(&rep))?;
        }
        Command::Weyl => {
            let elements: Vec<report::WeylElementReport> =
                w.elements().map(|e| report::weyl_element_report(&w, e)).collect();
            let rep = WeylReport {
                schema: SCHEMA_VERSION,
                command: "weyl".into(),
                order: w.order(),
                longest_length: w.length(w.longest()),
                elements,
            };
            emit(format, &rep, render::weyl(&rep))?;
        }
        Command::Cosets { i, k } => {
            let (i, k) = (parse_subset(&i, rank)?, parse_subset(&k, rank)?);
            let f = w.datum().f();
            let cosets = w
                .dml(i, k)?
                .into_iter()
                .map(|e| CosetEntry {
                    word: w.word_external(e),
                    length: w.length(e),
                    d_w: w.d_w(e),
                    degree: -((f * w.d_w(e)) as i64),
                })
                .collect();
            let rep =
                CosetsReport { schema: SCHEMA_VERSION, command: "cosets".into(), i, k, cosets };
            emit(format, &rep, render::cosets(&rep))?;
        }
        Command::Filtration { i, k, mode } => {
            let (i, k) = (parse_subset(&i, rank)?, parse_subset(&k, rank)?);
            let mode = char_mode(mode, &w)?;
            let filt = geom::graded_pieces(&w, i, k, mode)?;
            let rep = FiltrationCommandReport {
                schema: SCHEMA_VERSION,
                command: "filtration".into(),
                i,
                k,
                mode: match mode {
                    Mode::Formal => "formal".into(),
                    Mode::Concrete { .. } => "concrete".into(),
                },
                height: filt.height(),
                filtration: report::filtration_report(&w, &filt),
            };
            emit(format, &rep, render::filtration(&rep))?;
        }
        Command::Ps { i, k, chi, mode } => {
            let (i, k) = (parse_subset(&i, rank)?, parse_subset(&k, rank)?);
            let mode = char_mode(mode, &w)?;
            let chi = parse_character(&chi, mode, &w)?;
            let out = coinv::ps_coinvariants(&w, i, k, &chi, &SymbolAction::Trivial)?;
            let rep = CoinvariantsReport {
                schema: SCHEMA_VERSION,
                command: "ps".into(),
                i,
                k,
                chi: Some(chi),
                degrees: report::summand_reports(&w, &out),
            };
            emit(format, &rep, render::coinvariants(&rep))?;
        }
        Command::Steinberg { i, k } => {
            let (i, k) = (parse_subset(&i, rank)?, parse_subset(&k, rank)?);
            let out = coinv::steinberg_coinvariants(&w, i, k)?;
            let rep = CoinvariantsReport {
                schema: SCHEMA_VERSION,
                command: "steinberg".into(),
                i,
                k,
                chi: None,
                degrees: report::summand_reports(&w, &out),
            };
            emit(format, &rep, render::coinvariants(&rep))?;
        }
        Command::Ext {
            mode,
            i,
            k,
            r,
            chi,
            chi_prime,
            char_mode: cm,
            assume_split_torus,
            assume_p_odd_no_p_roots,
            left_cuspidal,
            right_cuspidal,
            distinct_central_chars,
        } => {
            let (i, k) = (parse_subset(&i, rank)?, parse_subset(&k, rank)?);
            let prediction = match mode {
                ExtModeArg::Ps => {
                    if !k.is_empty() {
                        bail!("ps mode compares against the minimal parabolic; --K must be empty");
                    }
                    let cmode = char_mode(cm, &w)?;
                    let chi = parse_character(
                        chi.as_deref().ok_or_else(|| anyhow!("--chi is required in ps mode"))?,
                        cmode,
                        &w,
                    )?;
                    let chi_prime = parse_character(
                        chi_prime
                            .as_deref()
                            .ok_or_else(|| anyhow!("--chi-prime is required in ps mode"))?,
                        cmode,
                        &w,
                    )?;
                    let assumptions = TorusAssumptions {
                        z_split: assume_split_torus,
                        p_odd_no_p_roots: assume_p_odd_no_p_roots,
                    };
                    ext::predict_ps_ext(
                        &w,
                        i,
                        &chi,
                        &chi_prime,
                        r,
                        &assumptions,
                        &SymbolAction::Trivial,
                    )?
                }
                ExtModeArg::Parabolic => {
                    if chi.is_some() || chi_prime.is_some() {
                        bail!("--chi/--chi-prime only apply in ps mode");
                    }
                    let q = ParabolicExtQuery {
                        i,
                        k,
                        degree: r,
                        left_cuspidal,
                        right_cuspidal,
                        distinct_central_characters: distinct_central_chars,
                    };
                    ext::predict_parabolic_ext(&w, &q)?
                }
            };
            let rep = ExtReport {
                schema: SCHEMA_VERSION,
                command: "ext".into(),
                mode: match mode {
                    ExtModeArg::Ps => "ps".into(),
                    ExtModeArg::Parabolic => "parabolic".into(),
                },
                i,
                k,
                degree: r,
                prediction,
            };
            emit(format, &rep, render::ext(&rep))?;
        }
        Command::Verify { suite } => {
            let suites = if suite == "all" {
                verify::run_all(&w)
            } else {
                vec![verify::run_suite(&w, &suite)?]
            };
            let passed = suites.iter().all(|s| s.passed);
            let rep =
                VerifyReport { schema: SCHEMA_VERSION, command: "verify".into(), passed, suites };
            emit(format, &rep, render::verify(&rep, color_enabled()))?;
            if !passed {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn color_enabled() -> bool {
    match std::env::var("PARIND_COLOR").as_deref() {
        Ok("never") => false,
        _ => std::io::stdout().is_terminal(),
    }
}
