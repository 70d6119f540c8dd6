//! `normord`: normal ordering, contraction listings, table generation, and
//! property checks for coupled multi-mode boson words.
//!
//! Exit codes: 0 success, 2 unparsable input or bad usage, 3 length cap
//! exceeded, 4 a requested equality or property check failed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use normord::{
    check_internal_cap, check_oracle, check_sun, contraction_listing, parse_cli_word, parse_pairs,
    render_check_report, render_contraction_listing, render_relation_report, render_table_csv,
    render_table_text, table_dto, write_gallery, BellDto, CliError, DiagramDto, GalleryDto,
    NormalFormDto, RepReportDto, EXIT_MISMATCH, EXIT_OK,
};
use normord_core::{check_cnr_recursion, CheckReport, ModeSystem, RepConfig};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EngineChoice {
    Rewrite,
    Contraction,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SignChoice {
    /// Creators act as multiplication by exp(-s); the commutation relations
    /// come out with the expected sign.
    Corrected,
    /// Creators act with the opposite sign, for comparison; the creator
    /// relations then evaluate to -1 instead of +1.
    Literal,
}

#[derive(Parser)]
#[command(
    name = "normord",
    version,
    about = "Exact normal ordering for coupled multi-mode boson operators"
)]
struct Cli {
    /// Number of modes (letters a1..aN; aliases a..d when N <= 4)
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    modes: u32,

    /// Use the coupled commutation matrix (all ones); the default
    #[arg(long, global = true, conflicts_with = "noncoupled")]
    coupled: bool,

    /// Use the identity commutation matrix (independent modes)
    #[arg(long, global = true)]
    noncoupled: bool,

    /// Output format; csv applies to table-producing commands only
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,

    /// Maximum word length accepted or built internally
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(usize))]
    length_cap: usize,

    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for exhaustive checks; output is independent of this
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,

    /// Sign convention for the differential representation
    #[arg(long, global = true, value_enum, default_value_t = SignChoice::Corrected)]
    sign: SignChoice,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-order a word and print the result
    NormalOrder {
        /// Word such as "a a+ b b+" or "a2+^2 a1"
        word: String,
        /// Which engine to run; both runs the two engines and compares
        #[arg(long, value_enum, default_value_t = EngineChoice::Both)]
        engine: EngineChoice,
    },
    /// List the contractions of a word with degrees and residuals
    Contractions {
        word: String,
        /// Write one SVG diagram per matching into this directory
        #[arg(long)]
        render_dir: Option<PathBuf>,
        /// Draw per-mode vertex shapes in rendered diagrams
        #[arg(long)]
        shapes: bool,
    },
    /// Print a table of normal ordering coefficients
    #[command(group(ArgGroup::new("which").required(true).args(["first", "second"])))]
    Stirling {
        /// First-type table for these per-mode exponents (one per mode)
        #[arg(long, num_args = 1.., value_name = "EXP")]
        first: Option<Vec<u32>>,
        /// Second-type table for this power of the mode product
        #[arg(long, value_name = "M")]
        second: Option<u32>,
    },
    /// Print the sum of a coefficient table
    #[command(group(ArgGroup::new("which").required(true).args(["first", "second"])))]
    Bell {
        #[arg(long, num_args = 1.., value_name = "EXP")]
        first: Option<Vec<u32>>,
        #[arg(long, value_name = "M")]
        second: Option<u32>,
    },
    /// Table for powers of (b^r a+ a) on the coupled two-mode pair
    Cnr {
        /// Exponent of the bare annihilator factor
        r: u32,
        /// Power of the whole block
        n: u32,
    },
    /// Run a property check suite; exits 4 if any item fails
    Check {
        #[command(subcommand)]
        suite: CheckSuite,
    },
    /// Verify the differential representation against the algebra
    RepVerify {
        /// Check indices m in -M..=M
        #[arg(long, default_value_t = 3, value_name = "M")]
        m_range: i64,
        /// Check exponents k in 0..=K
        #[arg(long, default_value_t = 3, value_name = "K")]
        k_max: u32,
    },
    /// Render one contraction diagram
    Diagram {
        word: String,
        /// Pair list such as "1-3,2-6"; empty for the null matching
        #[arg(long, default_value = "")]
        pairs: String,
        /// Emit the text rendering instead of SVG
        #[arg(long)]
        ascii: bool,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Draw per-mode vertex shapes
        #[arg(long)]
        shapes: bool,
    },
}

#[derive(Subcommand)]
enum CheckSuite {
    /// Verify the table recursions against engine-built tables
    Recursions {
        #[arg(long, default_value_t = 4)]
        na_max: u32,
        #[arg(long, default_value_t = 4)]
        nb_max: u32,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
        #[arg(long, default_value_t = 3)]
        r_max: u32,
        #[arg(long, default_value_t = 2)]
        n_max: u32,
    },
    /// Exhaustively compare the two engines on all short two-mode words
    Oracle {
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Verify the generating polynomial recurrences
    GenPoly {
        #[arg(long, default_value_t = 3)]
        na_max: u32,
        #[arg(long, default_value_t = 3)]
        nb_max: u32,
        #[arg(long, default_value_t = 2)]
        m_max: u32,
    },
    /// Verify that collapsing all modes to one commutes with ordering
    Sun {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 500)]
        samples: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn mode_system(cli: &Cli) -> ModeSystem {
    if cli.noncoupled {
        ModeSystem::noncoupled(cli.modes as usize)
    } else {
        ModeSystem::coupled(cli.modes as usize)
    }
}

fn reject_csv(cli: &Cli, command: &str) -> Result<(), CliError> {
    if cli.output == OutputFormat::Csv {
        return Err(CliError::Parse(format!(
            "--output csv is only available for table commands, not {command}"
        )));
    }
    Ok(())
}

fn print_json<T: serde::Serialize>(value: &T) {
    normord::emit(&serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::NormalOrder { word, engine } => cmd_normal_order(cli, word, *engine),
        Command::Contractions {
            word,
            render_dir,
            shapes,
        } => cmd_contractions(cli, word, render_dir.as_deref(), *shapes),
        Command::Stirling { first, second } => cmd_stirling(cli, first.as_deref(), *second),
        Command::Bell { first, second } => cmd_bell(cli, first.as_deref(), *second),
        Command::Cnr { r, n } => cmd_cnr(cli, *r, *n),
        Command::Check { suite } => cmd_check(cli, suite),
        Command::RepVerify { m_range, k_max } => cmd_rep_verify(cli, *m_range, *k_max),
        Command::Diagram {
            word,
            pairs,
            ascii,
            out,
            shapes,
        } => cmd_diagram(cli, word, pairs, *ascii, out.as_deref(), *shapes),
    }
}

fn cmd_normal_order(cli: &Cli, text: &str, engine: EngineChoice) -> Result<u8, CliError> {
    reject_csv(cli, "normal-order")?;
    let sys = mode_system(cli);
    let word = parse_cli_word(text, &sys, cli.length_cap)?;
    let nf = match engine {
        EngineChoice::Rewrite => normord_core::normal_order_rewrite(&word, &sys),
        EngineChoice::Contraction => normord_core::normal_order_contraction(&word, &sys),
        EngineChoice::Both => {
            let rewritten = normord_core::normal_order_rewrite(&word, &sys);
            let contracted = normord_core::normal_order_contraction(&word, &sys);
            if rewritten != contracted {
                return Err(CliError::Mismatch(format!(
                    "engines disagree on {}:\n  rewrite:     {}\n  contraction: {}",
                    word.pretty(sys.modes()),
                    rewritten.pretty(),
                    contracted.pretty()
                )));
            }
            rewritten
        }
    };
    match cli.output {
        OutputFormat::Json => print_json(&NormalFormDto::from_normal_form(&nf)),
        _ => normord::emit(&nf.pretty()),
    }
    Ok(EXIT_OK)
}

fn cmd_contractions(
    cli: &Cli,
    text: &str,
    render_dir: Option<&std::path::Path>,
    shapes: bool,
) -> Result<u8, CliError> {
    reject_csv(cli, "contractions")?;
    let sys = mode_system(cli);
    let word = parse_cli_word(text, &sys, cli.length_cap)?;
    let set = normord_core::enumerate_contractions(&word, &sys);
    let gallery = match render_dir {
        Some(dir) => {
            let files = write_gallery(dir, &word, &sys, shapes)?;
            Some(GalleryDto {
                dir: dir.display().to_string(),
                files,
            })
        }
        None => None,
    };
    let listing = contraction_listing(&set, sys.modes(), gallery);
    match cli.output {
        OutputFormat::Json => print_json(&listing),
        _ => normord::emit(&render_contraction_listing(&listing)),
    }
    Ok(EXIT_OK)
}

fn print_table(cli: &Cli, table: &normord::TableDto, symbol: &str) {
    match cli.output {
        OutputFormat::Json => print_json(table),
        OutputFormat::Csv => normord::emit(render_table_csv(table).trim_end()),
        OutputFormat::Text => normord::emit(&render_table_text(table, symbol)),
    }
}

fn cmd_stirling(cli: &Cli, first: Option<&[u32]>, second: Option<u32>) -> Result<u8, CliError> {
    let sys = mode_system(cli);
    let table = match (first, second) {
        (Some(exponents), None) => {
            if exponents.len() != sys.modes() {
                return Err(CliError::Parse(format!(
                    "--first needs one exponent per mode: got {} for {} modes",
                    exponents.len(),
                    sys.modes()
                )));
            }
            let word = normord_core::first_type_word(&sys, exponents);
            check_internal_cap(word.len(), cli.length_cap, "the first-type word")?;
            let table = normord_core::coloured_stirling_first(&sys, exponents);
            table_dto(
                "first",
                exponents.to_vec(),
                table.entries().map(|(k, v)| (k.clone(), v)),
            )
        }
        (None, Some(power)) => {
            let word = normord_core::second_type_word(&sys, power);
            check_internal_cap(word.len(), cli.length_cap, "the second-type word")?;
            let table = normord_core::coloured_stirling_second(&sys, power);
            table_dto(
                "second",
                vec![power],
                table.entries().map(|(k, v)| (k.clone(), v)),
            )
        }
        _ => unreachable!("clap group enforces exactly one"),
    };
    print_table(cli, &table, "S");
    Ok(EXIT_OK)
}

fn cmd_bell(cli: &Cli, first: Option<&[u32]>, second: Option<u32>) -> Result<u8, CliError> {
    reject_csv(cli, "bell")?;
    let sys = mode_system(cli);
    let (kind, params, value): (&str, Vec<u32>, BigInt) = match (first, second) {
        (Some(exponents), None) => {
            if exponents.len() != sys.modes() {
                return Err(CliError::Parse(format!(
                    "--first needs one exponent per mode: got {} for {} modes",
                    exponents.len(),
                    sys.modes()
                )));
            }
            let word = normord_core::first_type_word(&sys, exponents);
            check_internal_cap(word.len(), cli.length_cap, "the first-type word")?;
            (
                "first",
                exponents.to_vec(),
                normord_core::coloured_bell_first(&sys, exponents),
            )
        }
        (None, Some(power)) => {
            let word = normord_core::second_type_word(&sys, power);
            check_internal_cap(word.len(), cli.length_cap, "the second-type word")?;
            (
                "second",
                vec![power],
                normord_core::coloured_bell_second(&sys, power),
            )
        }
        _ => unreachable!("clap group enforces exactly one"),
    };
    match cli.output {
        OutputFormat::Json => print_json(&BellDto {
            kind: kind.to_string(),
            params,
            value: value.to_string(),
        }),
        _ => normord::emit(&value.to_string()),
    }
    Ok(EXIT_OK)
}

fn cmd_cnr(cli: &Cli, r: u32, n: u32) -> Result<u8, CliError> {
    // this table lives on the coupled two-mode pair regardless of the
    // global mode flags; the defining word ties b to a+ through kappa = 1
    let word = normord_core::cnr_word(r, n);
    check_internal_cap(word.len(), cli.length_cap, "the defining word")?;
    let table = normord_core::cnr_table(r, n);
    let dto = table_dto(
        "cnr",
        vec![r, n],
        table.entries().map(|(&(i, j, k), v)| (vec![i, j, k], v)),
    );
    print_table(cli, &dto, "c");
    Ok(EXIT_OK)
}

fn cmd_check(cli: &Cli, suite: &CheckSuite) -> Result<u8, CliError> {
    reject_csv(cli, "check")?;
    let report: CheckReport = match suite {
        CheckSuite::Recursions {
            na_max,
            nb_max,
            m_max,
            r_max,
            n_max,
        } => {
            check_internal_cap(
                (2 * (na_max + nb_max)) as usize,
                cli.length_cap,
                "the largest first-type word",
            )?;
            check_internal_cap(
                (n_max * (r_max + 2)) as usize,
                cli.length_cap,
                "the largest cnr word",
            )?;
            let mut report = normord_core::check_stirling_recursions(*na_max, *nb_max, *m_max);
            let cnr = check_cnr_recursion(*r_max, *n_max, normord_core::CnrMiddleFactor::JPlusOne);
            for item in cnr.checks {
                report.push(item);
            }
            report
        }
        CheckSuite::Oracle { max_len } => {
            check_internal_cap(*max_len, cli.length_cap, "the exhaustive word sweep")?;
            check_oracle(*max_len, cli.threads as usize)
        }
        CheckSuite::GenPoly {
            na_max,
            nb_max,
            m_max,
        } => {
            check_internal_cap(
                (2 * (na_max + nb_max)) as usize,
                cli.length_cap,
                "the largest first-type word",
            )?;
            normord_core::check_gen_recurrences(*na_max, *nb_max, *m_max)
        }
        CheckSuite::Sun { max_len, samples } => {
            check_internal_cap(*max_len, cli.length_cap, "the sampled words")?;
            check_sun(cli.modes, *max_len, *samples, cli.seed)
        }
    };
    match cli.output {
        OutputFormat::Json => print_json(&normord::CheckReportDto::from_report(&report)),
        _ => normord::emit(&render_check_report(&report)),
    }
    if report.pass() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_MISMATCH)
    }
}

fn cmd_rep_verify(cli: &Cli, m_range: i64, k_max: u32) -> Result<u8, CliError> {
    reject_csv(cli, "rep-verify")?;
    // the representation realizes the coupled relation family; the
    // coupling flags do not change what is being verified
    let (cfg, sign) = match cli.sign {
        SignChoice::Corrected => (RepConfig::corrected(cli.modes as usize), "corrected"),
        SignChoice::Literal => (RepConfig::literal(cli.modes as usize), "literal"),
    };
    let report = normord_core::verify_relations(&cfg, m_range, k_max);
    match cli.output {
        OutputFormat::Json => print_json(&RepReportDto::from_report(&report, sign)),
        _ => normord::emit(&render_relation_report(&report, sign)),
    }
    Ok(EXIT_OK)
}

fn cmd_diagram(
    cli: &Cli,
    text: &str,
    pairs: &str,
    ascii: bool,
    out: Option<&std::path::Path>,
    shapes: bool,
) -> Result<u8, CliError> {
    reject_csv(cli, "diagram")?;
    let sys = mode_system(cli);
    let word = parse_cli_word(text, &sys, cli.length_cap)?;
    let matching = parse_pairs(pairs)?;
    if !matching.is_valid_for(&word, &sys) {
        return Err(CliError::Parse(format!(
            "pair list is not a valid contraction of {}: each pair must take an \
             annihilator to a later coupled creator, positions disjoint",
            word.pretty(sys.modes())
        )));
    }
    let mut spec = normord_core::DiagramSpec::new(word, matching, sys.modes());
    spec.shapes = shapes;
    let (format, content) = if ascii {
        ("ascii", normord_core::render_ascii(&spec))
    } else {
        ("svg", normord_core::render_svg(&spec))
    };
    if let Some(path) = out {
        let data = if cli.output == OutputFormat::Json {
            serde_json::to_string_pretty(&DiagramDto {
                format: format.to_string(),
                content: content.clone(),
            })
            .expect("serializable")
        } else {
            content.clone()
        };
        std::fs::write(path, data)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
        normord::emit(&format!("wrote {}", path.display()));
    } else {
        match cli.output {
            OutputFormat::Json => print_json(&DiagramDto {
                format: format.to_string(),
                content,
            }),
            _ => normord::emit(content.trim_end_matches('\n')),
        }
    }
    Ok(EXIT_OK)
}
