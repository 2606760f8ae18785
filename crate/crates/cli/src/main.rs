use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cardgeom::analysis::probability_rows;
use cardgeom::capsearch::{find_max_cap, find_noquad, noquad_probability_estimate, CapCertificate};
use cardgeom::decks::{build_deck, card_to_grid, export_deck, DeckKind};
use cardgeom::projective::parse_symbol_names;
use cardgeom::sim::{simulate, simulate_batch, Game, GameConfig, Variant};
use cardgeom::verify::{run_all, Check, Suite};
use cardgeom::xmap::{correspond, Origin};
use cardgeom::Card;

#[derive(Parser)]
#[command(name = "cardgeom", version, about = "Finite geometry of SET, Socks, Spot It! and EvenQuads")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for batch simulations and Monte Carlo sampling.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Generate and export decks.
    Deck {
        #[command(subcommand)]
        action: DeckAction,
    },
    /// Exact match probabilities for the Socks deck.
    Prob {
        #[command(subcommand)]
        action: ProbAction,
    },
    /// Run self-check suites.
    Verify {
        #[arg(value_parser = ["all", "algebra", "decks", "rules", "probability", "caps", "planes", "correspondence", "sim"])]
        suite: String,
    },
    /// Search for caps (set-free or quad-free piles).
    Search {
        #[command(subcommand)]
        action: SearchAction,
    },
    /// Monte Carlo estimates.
    Estimate {
        #[command(subcommand)]
        action: EstimateAction,
    },
    /// Read an EvenQuads card as a Socks card.
    Correspond {
        /// Six-bit code, e.g. 011010.
        #[arg(long)]
        code: String,
        /// Origin card (the one with no socks).
        #[arg(long, default_value = "000000")]
        origin: String,
    },
    /// Play seeded games.
    Simulate(SimulateArgs),
    /// Position of a six-bit card on the 8x8 grid.
    Grid {
        #[arg(long)]
        code: String,
    },
}

#[derive(Subcommand)]
enum DeckAction {
    Gen {
        #[arg(long, value_parser = ["set", "socks", "quads", "spotit"])]
        game: String,
        /// Spot It! plane order (prime).
        #[arg(long, default_value_t = 7)]
        q: u32,
        /// Spot It! symbol names, one `id: name` per line.
        #[arg(long)]
        names: Option<PathBuf>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ProbAction {
    Table {
        #[arg(long, default_value_t = 31)]
        max: u32,
        /// Take odd rows from the closed form instead of the recursion.
        #[arg(long)]
        closed_form: bool,
        /// Include even n.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
enum SearchAction {
    Cap {
        #[arg(long)]
        dim: u32,
        /// Seconds.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
    },
    Noquad {
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
    },
}

#[derive(Subcommand)]
enum EstimateAction {
    Noquad {
        #[arg(long, default_value_t = 9)]
        size: usize,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    game: Option<String>,
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    runs: u64,
    #[arg(long, default_value_t = 2)]
    players: u32,
    /// EvenQuads layout size.
    #[arg(long)]
    table_size: Option<usize>,
    /// Spot It! plane order.
    #[arg(long)]
    q: Option<u32>,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<cardgeom::Error> for Failure {
    fn from(e: cardgeom::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Deck { action: DeckAction::Gen { game, q, names, out } } => deck_gen(format, game, *q, names, out),
        Command::Prob { action: ProbAction::Table { max, closed_form, all } } => prob_table(format, *max, *all, *closed_form),
        Command::Verify { suite } => verify(format, suite),
        Command::Search { action } => search(format, action),
        Command::Estimate { action: EstimateAction::Noquad { size, samples, seed } } => {
            no_csv(format, "estimate")?;
            let e = noquad_probability_estimate(*size, *samples, *seed)?;
            Ok(match format {
                Format::Json => json(&e),
                _ => format!(
                    "{} of {} random {}-card piles are quad-free: {:.6} +/- {:.6}\n",
                    e.hits, e.samples, e.pile_size, e.fraction, e.std_error
                ),
            })
        }
        Command::Correspond { code, origin } => {
            no_csv(format, "correspond")?;
            let r = correspond(parse_code(code)?, Origin(parse_code(origin)?))?;
            Ok(match format {
                Format::Json => json(&r),
                _ => format!("{}\nquads: {}\nsocks: {}\n", r.bits, r.quads, r.socks),
            })
        }
        Command::Simulate(args) => simulate_cmd(format, args),
        Command::Grid { code } => grid(format, parse_code(code)?),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn no_csv(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage(format!("csv output is not available for {what}")));
    }
    Ok(())
}

fn parse_code(bits: &str) -> Result<Card, Failure> {
    if bits.len() != 6 {
        return Err(Failure::Usage(format!("expected six bits, got {bits:?}")));
    }
    Ok(Card::from_bits(bits)?)
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn deck_gen(format: Format, game: &str, q: u32, names: &Option<PathBuf>, out: &Option<PathBuf>) -> Outcome {
    let kind = match game {
        "set" => DeckKind::Set,
        "socks" => DeckKind::Socks,
        "quads" => DeckKind::Quads,
        _ => DeckKind::SpotIt(q),
    };
    let names = names.as_ref().map(|p| read(p).and_then(|t| Ok(parse_symbol_names(&t)?))).transpose()?;
    let export = export_deck(&build_deck(kind)?, names.as_ref())?;
    let text = match format {
        Format::Json => export.to_json() + "\n",
        Format::Csv => export.to_csv(),
        Format::Text => export.to_text(),
    };
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn prob_table(format: Format, max: u32, all: bool, closed_form: bool) -> Outcome {
    let rows = probability_rows(max, all, closed_form)?;
    Ok(match format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut s = String::from("n,exact,decimal,minus_one_64th\n");
            for r in &rows {
                writeln!(s, "{},{},{},{}", r.n, r.exact, r.decimal, r.minus_one_64th).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!("{:>3}  {:<30}  {:<14}  {}\n", "n", "P(n)", "decimal", "P(n) - 1/64");
            for r in &rows {
                writeln!(s, "{:>3}  {:<30}  {:<14}  {}", r.n, r.exact.to_string(), r.decimal, r.minus_one_64th).unwrap();
            }
            s
        }
    })
}

fn verify(format: Format, suite: &str) -> Outcome {
    let checks: Vec<Check> = if suite == "all" { run_all() } else { suite.parse::<Suite>()?.run() };
    let failed = checks.iter().filter(|c| !c.passed).count();
    let out = match format {
        Format::Json => json(&checks),
        Format::Csv => {
            let mut s = String::from("suite,check,passed,detail\n");
            for c in &checks {
                writeln!(s, "{},{},{},\"{}\"", c.suite, c.name, c.passed, c.detail.replace('"', "\"\"")).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
            writeln!(s, "{} passed, {failed} failed", checks.len() - failed).unwrap();
            s
        }
    };
    if failed > 0 {
        Err(Failure::Verification(out))
    } else {
        Ok(out)
    }
}

fn budget(secs: f64) -> Result<Duration, Failure> {
    if !(secs.is_finite() && secs > 0.0) {
        return Err(Failure::Usage(format!("budget must be a positive number of seconds, got {secs}")));
    }
    Ok(Duration::from_secs_f64(secs))
}

fn search(format: Format, action: &SearchAction) -> Outcome {
    no_csv(format, "search")?;
    let cert = match action {
        SearchAction::Cap { dim, budget: b } => find_max_cap(*dim, budget(*b)?)?,
        SearchAction::Noquad { budget: b } => find_noquad(budget(*b)?)?,
    };
    let out = match format {
        Format::Json => cert.to_json() + "\n",
        _ => certificate_text(&cert),
    };
    if cert.verify() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn certificate_text(cert: &CapCertificate) -> String {
    let width = cert.space.n as usize;
    let pile: Vec<String> = cert
        .pile
        .iter()
        .map(|c| cert.space.digits(*c).iter().map(u32::to_string).collect())
        .collect();
    let blocked = cert.extensions.iter().filter(|e| e.creates).count();
    format!(
        "{}-card pile in F_{}^{} with {} internal {}s ({})\n{}\n{} of {} other cards complete a {}; {}\n",
        cert.size(),
        cert.space.p,
        width,
        cert.internal_count,
        cert.kind.name(),
        if cert.exhaustive { "maximum" } else { "best found within budget" },
        pile.join(" "),
        blocked,
        cert.extensions.len(),
        cert.kind.name(),
        if cert.verify() { "certificate verified" } else { "certificate FAILED" },
    )
}

fn simulate_cmd(format: Format, args: &SimulateArgs) -> Outcome {
    no_csv(format, "simulate")?;
    let game: Game = args.game.as_deref().unwrap_or("set").parse()?;
    let mut config = GameConfig::new(game, args.seed).with_players(args.players);
    if let Some(v) = &args.variant {
        config = config.with_variant(v.parse::<Variant>()?);
    }
    config.table_size = args.table_size;
    config.q = args.q;
    if args.runs > 1 {
        let s = simulate_batch(&config, args.runs)?;
        return Ok(match format {
            Format::Json => json(&s),
            _ => format!(
                "{} runs from seed {}: {:.2} claims per game, mean leftover {:.3}, max leftover {}, stranded {} ({:.4})\n",
                s.runs, args.seed, s.mean_claims, s.mean_leftover, s.max_leftover, s.stranded_runs, s.stranded_frequency
            ),
        });
    }
    let log = simulate(&config)?;
    if format == Format::Json {
        return Ok(log.to_json() + "\n");
    }
    let scores: Vec<String> = log.scores.iter().map(|(p, s)| format!("player {p}: {s}")).collect();
    let table: Vec<String> = log.final_table.iter().map(|c| c.0.to_string()).collect();
    Ok(format!(
        "{} events; final table [{}]; {}\n",
        log.events.len(),
        table.join(", "),
        scores.join(", ")
    ))
}

fn grid(format: Format, card: Card) -> Outcome {
    no_csv(format, "grid")?;
    let (row, col) = card_to_grid(card)?;
    if format == Format::Json {
        return Ok(json(&serde_json::json!({ "code": card.bits(6), "row": row, "col": col })));
    }
    let mut s = format!("{}: row {row}, column {col}\n", card.bits(6));
    for r in 0..8 {
        let line: String = (0..8).map(|c| if (r, c) == (row, col) { 'X' } else { '.' }).collect();
        writeln!(s, "{line}").unwrap();
    }
    Ok(s)
}
