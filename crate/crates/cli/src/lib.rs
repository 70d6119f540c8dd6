//! Support library for the `normord` command line tool: output encodings
//! (JSON, CSV, text), seeded word sampling, and the orchestrated check suites
//! that the `check` subcommand exposes.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use normord_core::{
    enumerate_contractions, normal_order_contraction, normal_order_rewrite, render_svg,
    residual_word, CheckItem, CheckReport, ContractionSet, DiagramSpec, Generator, Matching,
    ModeSystem, Monomial, NormalForm, ParseErrorKind, RelationReport, Word,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

/// Failure modes with their exit-code contract: 2 for unparsable input,
/// 3 for a length cap violation, 4 for a failed equality or property check.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Cap(String),
    Mismatch(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Cap(_) => EXIT_CAP,
            CliError::Mismatch(_) => EXIT_MISMATCH,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "{msg}"),
            CliError::Cap(msg) => write!(f, "{msg}"),
            CliError::Mismatch(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Writes a line to stdout; a closed pipe ends the process quietly instead
/// of panicking, so `normord ... | head` behaves.
pub fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(err) = writeln!(out, "{text}").and_then(|_| out.flush()) {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("stdout error: {err}");
        std::process::exit(1);
    }
}

/// Parses a word for the CLI, mapping cap overruns to their own exit code
/// and decorating parse failures with a caret line.
pub fn parse_cli_word(text: &str, sys: &ModeSystem, cap: usize) -> Result<Word, CliError> {
    normord_core::parse_word_capped(text, sys, cap).map_err(|err| {
        let rendered = normord_core::render_error(text, &err);
        match err.kind {
            ParseErrorKind::TooLong { .. } => CliError::Cap(rendered),
            _ => CliError::Parse(rendered),
        }
    })
}

/// Guards words the CLI builds internally (tables, checks) with the same
/// length cap that applies to parsed input.
pub fn check_internal_cap(len: usize, cap: usize, what: &str) -> Result<(), CliError> {
    if len > cap {
        return Err(CliError::Cap(format!(
            "{what} expands to {len} letters, over the cap of {cap}; raise --length-cap"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------- JSON DTOs

#[derive(Serialize)]
pub struct TermDto {
    pub coeff: String,
    pub creators: Vec<u32>,
    pub annihilators: Vec<u32>,
}

#[derive(Serialize)]
pub struct NormalFormDto {
    pub modes: usize,
    pub terms: Vec<TermDto>,
}

impl NormalFormDto {
    pub fn from_normal_form(nf: &NormalForm) -> Self {
        NormalFormDto {
            modes: nf.modes(),
            terms: nf
                .sorted_terms()
                .into_iter()
                .map(|(monomial, coeff)| TermDto {
                    coeff: coeff.to_string(),
                    creators: monomial.creators.clone(),
                    annihilators: monomial.annihilators.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct MatchingDto {
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct ContractionMatchDto {
    pub pairs: Vec<(usize, usize)>,
    pub degree: usize,
    pub residual: String,
}

#[derive(Serialize)]
pub struct GalleryDto {
    pub dir: String,
    pub files: usize,
}

#[derive(Serialize)]
pub struct ContractionListingDto {
    pub word: String,
    pub modes: usize,
    pub count: usize,
    pub histogram: BTreeMap<String, u64>,
    pub matchings: Vec<ContractionMatchDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gallery: Option<GalleryDto>,
}

#[derive(Serialize)]
pub struct TableEntryDto {
    pub index: Vec<u32>,
    pub value: String,
}

#[derive(Serialize)]
pub struct TableDto {
    pub kind: String,
    pub params: Vec<u32>,
    pub entries: Vec<TableEntryDto>,
}

#[derive(Serialize)]
pub struct BellDto {
    pub kind: String,
    pub params: Vec<u32>,
    pub value: String,
}

#[derive(Serialize)]
pub struct CheckItemDto {
    pub name: String,
    pub cases: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize)]
pub struct CheckReportDto {
    pub checks: Vec<CheckItemDto>,
    pub passed: bool,
}

impl CheckReportDto {
    pub fn from_report(report: &CheckReport) -> Self {
        CheckReportDto {
            checks: report
                .checks
                .iter()
                .map(|item| CheckItemDto {
                    name: item.name.clone(),
                    cases: item.cases,
                    passed: item.passed,
                    detail: item.detail.clone(),
                })
                .collect(),
            passed: report.pass(),
        }
    }
}

#[derive(Serialize)]
pub struct RepConfigDto {
    pub modes: usize,
    pub sign: String,
    pub m_range: i64,
    pub k_max: u32,
}

#[derive(Serialize)]
pub struct RelationRowDto {
    pub pair: String,
    pub expected: u8,
    pub observed: Option<String>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct RepReportDto {
    pub config: RepConfigDto,
    pub relations: Vec<RelationRowDto>,
}

impl RepReportDto {
    pub fn from_report(report: &RelationReport, sign: &str) -> Self {
        RepReportDto {
            config: RepConfigDto {
                modes: report.config.modes,
                sign: sign.to_string(),
                m_range: report.m_range,
                k_max: report.k_max,
            },
            relations: report
                .rows
                .iter()
                .map(|row| RelationRowDto {
                    pair: row.pair.clone(),
                    expected: row.expected,
                    observed: row.observed.as_ref().map(|r| r.to_string()),
                    pass: row.pass,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct DiagramDto {
    pub format: String,
    pub content: String,
}

pub fn contraction_listing(
    set: &ContractionSet,
    modes: usize,
    gallery: Option<GalleryDto>,
) -> ContractionListingDto {
    let histogram = normord_core::degree_histogram(set);
    ContractionListingDto {
        word: set.word().pretty(modes),
        modes,
        count: set.matchings().len(),
        histogram: histogram
            .into_iter()
            .map(|(degree, count)| (degree.to_string(), count))
            .collect(),
        matchings: set
            .matchings()
            .iter()
            .map(|matching| ContractionMatchDto {
                pairs: matching.pairs().to_vec(),
                degree: matching.degree(),
                residual: residual_word(set.word(), matching).pretty(modes),
            })
            .collect(),
        gallery,
    }
}

pub fn table_dto<'a>(
    kind: &str,
    params: Vec<u32>,
    entries: impl Iterator<Item = (Vec<u32>, &'a BigInt)>,
) -> TableDto {
    TableDto {
        kind: kind.to_string(),
        params,
        entries: entries
            .map(|(index, value)| TableEntryDto {
                index,
                value: value.to_string(),
            })
            .collect(),
    }
}

// ------------------------------------------------------------ text renders

pub fn render_table_text(table: &TableDto, symbol: &str) -> String {
    let mut out = String::new();
    let mut sum = BigInt::from(0);
    for entry in &table.entries {
        let index = entry
            .index
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(out, "{symbol}({index}) = {}", entry.value);
        sum += entry.value.parse::<BigInt>().expect("integer value");
    }
    let _ = write!(out, "sum = {sum}");
    out
}

pub fn render_table_csv(table: &TableDto) -> String {
    let mut out = String::new();
    let width = table.entries.first().map_or(0, |e| e.index.len());
    let header: Vec<String> = (1..=width).map(|i| format!("i{i}")).collect();
    let _ = writeln!(out, "{},value", header.join(","));
    for entry in &table.entries {
        let index = entry
            .index
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(out, "{index},{}", entry.value);
    }
    out
}

pub fn render_contraction_listing(listing: &ContractionListingDto) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "word: {}", listing.word);
    let _ = writeln!(out, "matchings: {}", listing.count);
    let histogram = listing
        .histogram
        .iter()
        .map(|(degree, count)| format!("{degree}:{count}"))
        .collect::<Vec<_>>()
        .join(" ");
    let _ = writeln!(out, "histogram: {histogram}");
    for (k, matching) in listing.matchings.iter().enumerate() {
        let pairs = if matching.pairs.is_empty() {
            "-".to_string()
        } else {
            matching
                .pairs
                .iter()
                .map(|(p, q)| format!("({p},{q})"))
                .collect::<Vec<_>>()
                .join("")
        };
        let residual = if matching.residual.is_empty() {
            "1"
        } else {
            &matching.residual
        };
        let _ = writeln!(out, "{k:>4}: {pairs:<16} {residual}");
    }
    if let Some(gallery) = &listing.gallery {
        let _ = writeln!(
            out,
            "gallery: wrote {} files to {}",
            gallery.files, gallery.dir
        );
    }
    out.truncate(out.trim_end().len());
    out
}

pub fn render_check_report(report: &CheckReport) -> String {
    let mut out = String::new();
    for item in &report.checks {
        if item.passed {
            let _ = writeln!(out, "ok    {} (cases: {})", item.name, item.cases);
        } else {
            let _ = writeln!(out, "FAIL  {} (cases: {})", item.name, item.cases);
            if let Some(detail) = &item.detail {
                let _ = writeln!(out, "      {detail}");
            }
        }
    }
    let failed = report.checks.iter().filter(|item| !item.passed).count();
    if failed == 0 {
        let _ = write!(out, "all {} checks passed", report.checks.len());
    } else {
        let _ = write!(out, "{failed} of {} checks failed", report.checks.len());
    }
    out
}

pub fn render_relation_report(report: &RelationReport, sign: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "config: modes {}, sign {}, m range -{}..={}, k max {}",
        report.config.modes, sign, report.m_range, report.m_range, report.k_max
    );
    for row in &report.rows {
        let observed = row
            .observed
            .as_ref()
            .map_or("not scalar".to_string(), |r| r.to_string());
        let verdict = if row.pass { "pass" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:<10} expected {}  observed {:<10} {}",
            row.pair, row.expected, observed, verdict
        );
    }
    let deviations = report.rows.iter().filter(|row| !row.pass).count();
    if deviations == 0 {
        let _ = write!(out, "all relations hold");
    } else {
        let _ = write!(
            out,
            "{deviations} of {} relations deviate",
            report.rows.len()
        );
    }
    out
}

// --------------------------------------------------------------- sampling

/// Draws a word of length 0..=max_len with uniform independent letters.
pub fn sample_word<R: Rng>(rng: &mut R, modes: u32, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let mode = rng.gen_range(1..=modes);
            if rng.gen_bool(0.5) {
                Generator::creator(mode)
            } else {
                Generator::annihilator(mode)
            }
        })
        .collect();
    Word::from_letters(letters)
}

/// Decodes the two-mode word with the given length and rank; letters are the
/// base-4 digits 0 = a, 1 = a+, 2 = b, 3 = b+, most significant first.
pub fn two_mode_word(len: usize, rank: u64) -> Word {
    let mut letters = vec![Generator::annihilator(1); len];
    let mut rest = rank;
    for slot in (0..len).rev() {
        let digit = rest % 4;
        rest /= 4;
        letters[slot] = match digit {
            0 => Generator::annihilator(1),
            1 => Generator::creator(1),
            2 => Generator::annihilator(2),
            _ => Generator::creator(2),
        };
    }
    debug_assert_eq!(rest, 0);
    Word::from_letters(letters)
}

// ----------------------------------------------------------------- checks

/// Exhaustive two-engine agreement over every two-mode word of length
/// 0..=max_len, under both couplings. `threads` splits the word range into
/// contiguous chunks; the report does not depend on the thread count.
pub fn check_oracle(max_len: usize, threads: usize) -> CheckReport {
    assert!(threads >= 1);
    // prefix[l] = number of words shorter than l
    let mut prefix: Vec<u64> = vec![0];
    for len in 0..=max_len {
        let last = *prefix.last().unwrap();
        prefix.push(last + 4u64.pow(len as u32));
    }
    let total = *prefix.last().unwrap();

    let decode = |global: u64| -> Word {
        let len = prefix.iter().skip(1).position(|&p| global < p).unwrap();
        two_mode_word(len, global - prefix[len])
    };

    let worker = |from: u64, to: u64| -> (u64, Vec<String>) {
        let coupled = ModeSystem::coupled(2);
        let noncoupled = ModeSystem::noncoupled(2);
        let mut cases = 0;
        let mut mismatches = Vec::new();
        for global in from..to {
            let word = decode(global);
            for sys in [&coupled, &noncoupled] {
                let rewritten = normal_order_rewrite(&word, sys);
                let contracted = normal_order_contraction(&word, sys);
                if rewritten != contracted && mismatches.len() < 5 {
                    let preset = if sys.is_coupled() {
                        "coupled"
                    } else {
                        "noncoupled"
                    };
                    mismatches.push(format!("{} ({preset})", word.pretty(2)));
                }
            }
            cases += 1;
        }
        (cases, mismatches)
    };

    let (cases, mismatches) = if threads == 1 || total < 64 {
        worker(0, total)
    } else {
        let chunk = total.div_ceil(threads as u64);
        let results: Vec<(u64, Vec<String>)> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads as u64)
                .map(|t| {
                    let from = (t * chunk).min(total);
                    let to = ((t + 1) * chunk).min(total);
                    scope.spawn(move || worker(from, to))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut cases = 0;
        let mut mismatches = Vec::new();
        for (c, m) in results {
            cases += c;
            mismatches.extend(m);
        }
        (cases, mismatches)
    };

    let name = format!(
        "rewrite and contraction engines agree on all two-mode words of length <= {max_len}, both couplings"
    );
    let mut report = CheckReport::new();
    if mismatches.is_empty() {
        report.push(CheckItem::pass(&name, cases));
    } else {
        report.push(CheckItem::fail(
            &name,
            cases,
            format!("first mismatches: {}", mismatches.join("; ")),
        ));
    }
    report
}

/// Mode-collapse commutation checks: seeded random words, the fixed
/// six-letter instance, and the noncoupled counter-instance.
pub fn check_sun(modes: u32, max_len: usize, samples: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new();
    let sys_n = ModeSystem::coupled(modes as usize);
    let sys_1 = ModeSystem::coupled(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut failure: Option<String> = None;
    for _ in 0..samples {
        let word = sample_word(&mut rng, modes, max_len);
        let collapsed_first = normal_order_rewrite(&normord_core::sunglasses_word(&word), &sys_1);
        let ordered_first = normord_core::sunglasses_nf(&normal_order_rewrite(&word, &sys_n));
        if collapsed_first != ordered_first && failure.is_none() {
            failure = Some(format!("word {}", word.pretty(modes as usize)));
        }
    }
    let name = format!(
        "mode collapse commutes with normal ordering ({samples} seeded words, {modes} modes, length <= {max_len})"
    );
    match failure {
        None => report.push(CheckItem::pass(&name, samples)),
        Some(detail) => report.push(CheckItem::fail(&name, samples, detail)),
    }

    // fixed six-letter instance: collapse of the coupled normal form
    let sys_2 = ModeSystem::coupled(2);
    let word = normord_core::parse_word("a^2 a+ b^2 b+", &sys_2).expect("fixed word");
    let mut expected = NormalForm::zero(1);
    expected.add_term(BigInt::from(1), Monomial::new(vec![2], vec![4]));
    expected.add_term(BigInt::from(6), Monomial::new(vec![1], vec![3]));
    expected.add_term(BigInt::from(6), Monomial::new(vec![0], vec![2]));
    let via_collapse = normord_core::sunglasses_nf(&normal_order_rewrite(&word, &sys_2));
    let via_single = normal_order_rewrite(&normord_core::sunglasses_word(&word), &sys_1);
    if via_collapse == expected && via_single == expected {
        report.push(CheckItem::pass(
            "six-letter instance collapses to c+^2 c^4 + 6 c+ c^3 + 6 c^2",
            1,
        ));
    } else {
        report.push(CheckItem::fail(
            "six-letter instance collapses to c+^2 c^4 + 6 c+ c^3 + 6 c^2",
            1,
            format!("got {}", via_collapse.pretty()),
        ));
    }

    // the identity needs the coupling: noncoupled coefficients drop to 4
    let non_2 = ModeSystem::noncoupled(2);
    let collapsed_non = normord_core::sunglasses_nf(&normal_order_rewrite(&word, &non_2));
    let coeff = collapsed_non.coeff(&Monomial::new(vec![1], vec![3]));
    if collapsed_non != expected && coeff == BigInt::from(4) {
        report.push(CheckItem::pass(
            "noncoupled modes break the collapse identity (coefficient 4, not 6)",
            1,
        ));
    } else {
        report.push(CheckItem::fail(
            "noncoupled modes break the collapse identity (coefficient 4, not 6)",
            1,
            format!("got {}", collapsed_non.pretty()),
        ));
    }

    report
}

// ---------------------------------------------------------------- gallery

/// Writes one SVG per matching of `word`, named contraction_<k>.svg with k
/// following the enumeration order. Returns the number of files written.
pub fn write_gallery(
    dir: &Path,
    word: &Word,
    sys: &ModeSystem,
    shapes: bool,
) -> Result<usize, CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
    let set = enumerate_contractions(word, sys);
    for (k, matching) in set.matchings().iter().enumerate() {
        let mut spec = DiagramSpec::new(word.clone(), matching.clone(), sys.modes());
        spec.shapes = shapes;
        let path = dir.join(format!("contraction_{k}.svg"));
        std::fs::write(&path, render_svg(&spec))
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(set.matchings().len())
}

/// Parses a pair list like "1-3,2-6" into a matching; empty input gives the
/// null matching.
pub fn parse_pairs(text: &str) -> Result<Matching, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Matching::null());
    }
    let mut pairs = Vec::new();
    for part in trimmed.split(',') {
        let (p, q) = part
            .trim()
            .split_once('-')
            .ok_or_else(|| CliError::Parse(format!("pair '{part}' is not of the form p-q")))?;
        let p: usize = p
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("bad position '{p}'")))?;
        let q: usize = q
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("bad position '{q}'")))?;
        pairs.push((p, q));
    }
    Ok(Matching::new(pairs))
}
