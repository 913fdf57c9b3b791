use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use algimm::bounds::Thm12Convention;
use algimm::codes::{code_report, dual_generator, ht_bound, is_lcd, CyclicCode, GenPoly, HtCoprime, DEFAULT_BUDGET};
use algimm::complement::complement_vectorial;
use algimm::corpus::write_corpus;
use algimm::io::FunctionFile;
use algimm::report::{analyze, AnalysisOptions};
use algimm::seq::{berlekamp_massey, FilterGenerator};
use algimm::{make_field, Error, FieldElement};

#[derive(Parser)]
#[command(name = "algimm", version, about = "Annihilators, algebraic immunity and cyclic codes of vectorial Boolean functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of a function file.
    Analyze(AnalyzeArgs),
    /// Write a corpus of function files and a reference manifest.
    Corpus(CorpusArgs),
    /// Build a cyclic code from a defining set of exponents.
    Code(CodeArgs),
    /// Write the algebraic complement of a function file.
    Complement(ComplementArgs),
    /// Filter-generator keystream of a function.
    Keystream(KeystreamArgs),
    /// Linear complexity of a bit stream.
    Bm(BmArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum HtArg {
    /// gcd(m', n) = 1
    N,
    /// gcd(m', 2^n - 1) = 1
    Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum Thm12Arg {
    Strict,
    Weak,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON (default).
    #[arg(long, conflicts_with = "table")]
    json: bool,
    /// Emit a human-readable table.
    #[arg(long)]
    table: bool,
    /// Write to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value = "order")]
    ht_coprime: HtArg,
    #[arg(long = "thm12-convention", value_enum, default_value = "strict")]
    thm12: Thm12Arg,
    /// Include wall time per stage.
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    n: u32,
    /// Comma-separated root exponents, e.g. `1,2`.
    #[arg(long, value_delimiter = ',')]
    defining: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value = "order")]
    ht_coprime: HtArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ComplementArgs {
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StreamFormat {
    Bits,
    Hex,
}

#[derive(Args)]
struct KeystreamArgs {
    input: PathBuf,
    /// Nonzero initial state, hex.
    #[arg(long, default_value = "1")]
    state: String,
    /// Number of symbols.
    #[arg(long)]
    len: usize,
    /// `bits` needs m = 1; defaults to bits for m = 1 and hex otherwise.
    #[arg(long, value_enum)]
    format: Option<StreamFormat>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BmArgs {
    /// Stream of 0/1 characters; stdin when absent or `-`.
    input: Option<PathBuf>,
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn ht(arg: HtArg) -> HtCoprime {
    match arg {
        HtArg::N => HtCoprime::Degree,
        HtArg::Order => HtCoprime::Order,
    }
}

fn cmd_analyze(a: AnalyzeArgs) -> Result<ExitCode, Error> {
    let f = FunctionFile::read(&a.input)?.to_function()?;
    let opts = AnalysisOptions {
        budget: a.budget,
        ht_coprime: ht(a.ht_coprime),
        thm12: match a.thm12 {
            Thm12Arg::Strict => Thm12Convention::Strict,
            Thm12Arg::Weak => Thm12Convention::Weak,
        },
        timings: a.timings,
    };
    let report = analyze(&f, &opts);
    let text = if a.output.table {
        report.to_table()
    } else {
        report.to_json() + "\n"
    };
    emit(&text, a.output.out.as_deref())?;
    let failed = report.failed_invariants();
    if failed.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("invariant violations: {}", failed.join(", "));
        Ok(ExitCode::from(1))
    }
}

fn cmd_corpus(a: CorpusArgs) -> Result<ExitCode, Error> {
    let manifest = write_corpus(&a.out, a.n, a.m, a.count, a.seed)?;
    for w in &manifest.warnings {
        eprintln!("warning: {w}");
    }
    eprintln!(
        "wrote {} functions and manifest.json to {}",
        manifest.count,
        a.out.display()
    );
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CodeOutput {
    code: algimm::codes::CodeReport,
    dual_gen_coeffs: Vec<String>,
    lcd: algimm::codes::LcdCheck,
    ht: algimm::codes::HtBound,
}

fn cmd_code(a: CodeArgs) -> Result<ExitCode, Error> {
    let field = make_field(a.n)?;
    let code = CyclicCode::new(field.clone(), GenPoly::from_exponents(&field, &a.defining));
    let out = CodeOutput {
        code: code_report(&code, false, a.budget),
        dual_gen_coeffs: dual_generator(&code).to_hex(),
        lcd: is_lcd(&code),
        ht: ht_bound(code.defining_set(), a.n, ht(a.ht_coprime)),
    };
    let text = if a.output.table {
        format!(
            "length {}\ndimension {}\ndefining set {:?}\ngenerator {}\nlcd {}\nminimum distance {}\nht bound {} (t {}, k {})\n",
            out.code.length,
            out.code.dimension,
            out.code.defining_set,
            out.code.gen_coeffs.join(" "),
            out.lcd.lcd,
            serde_json::to_string(&out.code.min_distance).expect("serializable"),
            out.ht.value,
            out.ht.t,
            out.ht.k
        )
    } else {
        json(&out)
    };
    emit(&text, a.output.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_complement(a: ComplementArgs) -> Result<ExitCode, Error> {
    let file = FunctionFile::read(&a.input)?;
    let f = file.to_function()?;
    let pair = complement_vectorial(&f);
    let out = FunctionFile::from_function(&pair.fc, file.repr)?;
    emit(&(out.to_json() + "\n"), a.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_keystream(a: KeystreamArgs) -> Result<ExitCode, Error> {
    let f = FunctionFile::read(&a.input)?.to_function()?;
    let state = u16::from_str_radix(a.state.trim(), 16)
        .map_err(|e| Error::Parse { field: "--state".into(), msg: e.to_string() })?;
    if state as usize >= f.field().size() {
        return Err(Error::Parse {
            field: "--state".into(),
            msg: format!("{} is not an element of GF(2^{})", a.state, f.n()),
        });
    }
    let m = f.m();
    let gen = FilterGenerator::new(f, FieldElement(state))?;
    let z = gen.keystream(a.len);
    let format = a.format.unwrap_or(if m == 1 { StreamFormat::Bits } else { StreamFormat::Hex });
    let mut text = match format {
        StreamFormat::Bits => {
            if m != 1 {
                return Err(Error::Parse {
                    field: "--format".into(),
                    msg: "bit streams need m = 1".into(),
                });
            }
            z.iter().map(|&v| if v == 1 { '1' } else { '0' }).collect::<String>()
        }
        StreamFormat::Hex => z.iter().map(|v| format!("{v:x}")).collect::<Vec<_>>().join(" "),
    };
    text.push('\n');
    emit(&text, a.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bm(a: BmArgs) -> Result<ExitCode, Error> {
    let mut text = String::new();
    match a.input.as_deref() {
        Some(p) if p != Path::new("-") => text = std::fs::read_to_string(p)?,
        _ => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    let mut bits = Vec::new();
    for (i, c) in text.chars().filter(|c| !c.is_whitespace()).enumerate() {
        match c {
            '0' => bits.push(0u8),
            '1' => bits.push(1u8),
            _ => {
                return Err(Error::Parse {
                    field: format!("symbol {i}"),
                    msg: format!("expected 0 or 1, found {c:?}"),
                })
            }
        }
    }
    emit(&json(&berlekamp_massey(&bits)), None)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Corpus(a) => cmd_corpus(a),
        Command::Code(a) => cmd_code(a),
        Command::Complement(a) => cmd_complement(a),
        Command::Keystream(a) => cmd_keystream(a),
        Command::Bm(a) => cmd_bm(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
