use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use log::info;

use phifst::demo::{self, Demo};
use phifst::fst::{read_text, to_dot, write_text, PHI_SYMBOL};
use phifst::maxmatch::render_tokens;
use phifst::phi_transduce::StageDump;
use phifst::{
    compose, naive_phi_compose, phi_transduce, ComposeConfig, Fst, SymbolTable, Tokenizer,
    TropicalWeight, Vocabulary,
};

/// Failure-transition transducers, gallic-semiring transduction and MaxMatch tokenization.
#[derive(Parser, Debug)]
#[command(name = "phifst", version)]
struct Cli {
    /// Log stage sizes and composition statistics to stderr (-vv for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compile a vocabulary into a MaxMatch failure transducer.
    Build {
        #[arg(long)]
        vocab: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Tokenize text, printing one bracketed token sequence per input line.
    Tokenize {
        #[arg(long)]
        vocab: PathBuf,
        #[arg(long, conflicts_with = "stdin", required_unless_present = "stdin")]
        text: Option<String>,
        #[arg(long)]
        stdin: bool,
    },
    /// Transduce a pattern acceptor through a failure transducer.
    Transduce {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        transducer: PathBuf,
        /// Write every pipeline stage as stage_<k>_<name>.fst and .dot.
        #[arg(long)]
        dump_stages: Option<PathBuf>,
        /// Use plain tropical φ-composition (drops failure-arc outputs).
        #[arg(long)]
        naive: bool,
        #[arg(long, default_value = PHI_SYMBOL)]
        phi: String,
    },
    /// Compose two machines, optionally with failure matching on the second.
    Compose {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        phi: Option<String>,
    },
    /// Read and re-print a machine in canonical text form.
    Print { fst: PathBuf },
    /// Print a machine as a Graphviz digraph.
    Draw { fst: PathBuf },
    /// Run a self-checking reference example.
    Demo {
        which: DemoName,
        #[arg(long)]
        dump_stages: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DemoName {
    #[value(name = "fig1-automata")]
    Fig1Automata,
    #[value(name = "fig1-transducer-naive")]
    Fig1TransducerNaive,
    #[value(name = "fig1-transducer-correct")]
    Fig1TransducerCorrect,
    #[value(name = "fig2")]
    Fig2,
}

impl From<DemoName> for Demo {
    fn from(d: DemoName) -> Demo {
        match d {
            DemoName::Fig1Automata => Demo::Automata,
            DemoName::Fig1TransducerNaive => Demo::TransducerNaive,
            DemoName::Fig1TransducerCorrect => Demo::TransducerCorrect,
            DemoName::Fig2 => Demo::Tokenizer,
        }
    }
}

fn read_fst(path: &Path, syms: &mut SymbolTable) -> Result<Fst<TropicalWeight>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_text(&text, syms).with_context(|| format!("parsing {}", path.display()))
}

fn load_tokenizer(path: &Path) -> Result<Tokenizer> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let vocab = Vocabulary::load(&text).with_context(|| format!("loading {}", path.display()))?;
    Ok(Tokenizer::new(vocab)?)
}

fn write_stages(dir: &Path, stages: &[StageDump]) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (k, stage) in stages.iter().enumerate() {
        let stem = stage.file_stem(k);
        fs::write(dir.join(format!("{stem}.fst")), &stage.text)?;
        fs::write(dir.join(format!("{stem}.dot")), &stage.dot)?;
        info!("{stem}: {} states, {} arcs", stage.states, stage.arcs);
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    match cli.command {
        Command::Build { vocab, out: path } => {
            let tok = load_tokenizer(&vocab)?;
            fs::write(&path, write_text(tok.transducer(), tok.symbols())?)
                .with_context(|| format!("writing {}", path.display()))?;
        }
        Command::Tokenize { vocab, text, stdin } => {
            let tok = load_tokenizer(&vocab)?;
            let lines: Vec<String> = match (text, stdin) {
                (Some(t), _) => vec![t],
                (None, true) => io::stdin().lock().lines().collect::<io::Result<_>>()?,
                (None, false) => bail!("either --text or --stdin is required"),
            };
            for line in lines {
                writeln!(out, "{}", render_tokens(&tok.tokenize(&line)?))?;
            }
        }
        Command::Transduce {
            pattern,
            transducer,
            dump_stages,
            naive,
            phi,
        } => {
            let mut syms = SymbolTable::with_phi();
            let p = read_fst(&pattern, &mut syms)?;
            let t = read_fst(&transducer, &mut syms)?;
            let phi = syms.add_symbol(&phi);
            let result = if naive {
                if dump_stages.is_some() {
                    bail!("--dump-stages is only available for the gallic pipeline");
                }
                naive_phi_compose(&p, &t, phi)?
            } else {
                let run = phi_transduce(&p, &t, &syms, phi)?;
                if let Some(dir) = dump_stages {
                    write_stages(&dir, &run.dumps(&syms)?)?;
                }
                run.det
            };
            write!(out, "{}", write_text(&result, &syms)?)?;
        }
        Command::Compose { left, right, phi } => {
            let mut syms = SymbolTable::with_phi();
            let l = read_fst(&left, &mut syms)?;
            let r = read_fst(&right, &mut syms)?;
            let cfg = match phi {
                Some(s) => ComposeConfig::with_phi(syms.add_symbol(&s)),
                None => ComposeConfig::default(),
            };
            write!(out, "{}", write_text(&compose(&l, &r, cfg)?, &syms)?)?;
        }
        Command::Print { fst } => {
            let mut syms = SymbolTable::with_phi();
            let f = read_fst(&fst, &mut syms)?;
            write!(out, "{}", write_text(&f, &syms)?)?;
        }
        Command::Draw { fst } => {
            let mut syms = SymbolTable::with_phi();
            let f = read_fst(&fst, &mut syms)?;
            write!(out, "{}", to_dot(&f, &syms))?;
        }
        Command::Demo { which, dump_stages } => {
            let report = demo::run(which.into())?;
            writeln!(out, "observed: {}", report.observed)?;
            writeln!(out, "expected: {}", report.expected)?;
            for note in &report.notes {
                writeln!(out, "  {note}")?;
            }
            if let Some(dir) = dump_stages {
                if report.stages.is_empty() {
                    bail!("this demo has no pipeline stages to dump");
                }
                write_stages(&dir, &report.stages)?;
            }
            writeln!(out, "{}", if report.passed { "PASS" } else { "FAIL" })?;
            if !report.passed {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).init();
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
