use clap::{Parser, Subcommand, ValueEnum};
use qg2::expr::parse_expr;
use qg2::free::NcPoly;
use qg2::lusztig::Lusztig;
use qg2::pairing::Pairing;
use qg2::relations::Params;
use qg2::rewrite::RuleSet;
use qg2::suite::run_suite;
use qg2::tabular::{parse_f_word, tabular_report};
use std::process::ExitCode;
use std::sync::OnceLock;

#[derive(Parser)]
#[command(name = "qg2", version, about = "Exact computations in the two-parameter quantum group U_{r,s}(G2)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamsArg {
    Rs,
    Swapped,
}

impl From<ParamsArg> for Params {
    fn from(p: ParamsArg) -> Params {
        match p {
            ParamsArg::Rs => Params::Standard,
            ParamsArg::Swapped => Params::Swapped,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the verification suite.
    Verify {
        /// Only run checks whose id matches this glob.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        /// Leave timing fields out of the JSON report.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print the normal form of an expression.
    Nf {
        expr: String,
        #[arg(long, value_enum, default_value = "rs")]
        params: ParamsArg,
    },
    /// Evaluate the pairing <F, E>.
    Pair {
        f: String,
        e: String,
        #[arg(long, value_enum, default_value = "rs")]
        params: ParamsArg,
    },
    /// Print the coproduct table of an f-word such as f1^2*f2*f1^2.
    Table {
        word: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "rs")]
        params: ParamsArg,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Apply T1 or T2 and print the normal form.
    #[command(name = "T", alias = "t")]
    T {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        i: u8,
        expr: String,
    },
    /// Dump the completed rewriting system as JSON.
    Rules {
        #[arg(long, value_enum, default_value = "rs")]
        params: ParamsArg,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn lusztig() -> &'static Lusztig {
    static L: OnceLock<Lusztig> = OnceLock::new();
    L.get_or_init(Lusztig::standard)
}

fn eval(text: &str) -> Result<NcPoly, String> {
    let e = parse_expr(text).map_err(|e| format!("{e}\n  {text}\n  {}^", " ".repeat(e.offset())))?;
    let call = |i: usize, x: &NcPoly| lusztig().apply(i, x).map_err(|e| e.to_string());
    e.eval(Some(&call)).map_err(|e| e.to_string())
}

fn run(cmd: Cmd) -> Result<bool, String> {
    match cmd {
        Cmd::Verify { filter, jobs, json, no_timing } => {
            let rep = run_suite(filter.as_deref(), jobs)?;
            if rep.results.is_empty() {
                eprintln!("warning: no check matches {}", filter.as_deref().unwrap_or("*"));
            }
            for r in &rep.results {
                println!("{} {} ({} ms)", if r.passed { "PASS" } else { "FAIL" }, r.id, r.millis);
            }
            let failed = rep.failures().count();
            println!("{} checks, {} failed, {} ms", rep.results.len(), failed, rep.total_millis);
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&rep.to_json(!no_timing)).unwrap();
                std::fs::write(&path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(rep.passed())
        }
        Cmd::Nf { expr, params } => {
            let rules = RuleSet::shared(params.into());
            let nf = rules.straighten(&eval(&expr)?).map_err(|e| e.to_string())?;
            println!("{}", nf.render());
            Ok(true)
        }
        Cmd::Pair { f, e, params } => {
            let p = Pairing::new(params.into());
            let v = p.pair(&eval(&f)?, &eval(&e)?).map_err(|e| e.to_string())?;
            println!("{}", v.render());
            Ok(true)
        }
        Cmd::Table { word, format, params, out } => {
            let w = parse_f_word(&word).ok_or_else(|| format!("not an f-word: {word}"))?;
            let rep = tabular_report(&w, &Pairing::new(params.into())).map_err(|e| e.to_string())?;
            let text = match format {
                Format::Csv => rep.to_csv(),
                Format::Json => serde_json::to_string_pretty(&rep.to_json()).unwrap() + "\n",
                Format::Text => rep.to_text(),
            };
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Cmd::T { i, expr } => {
            let x = eval(&expr)?;
            let y = lusztig().apply(i as usize - 1, &x).map_err(|e| e.to_string())?;
            println!("{}", y.render());
            Ok(true)
        }
        Cmd::Rules { params } => {
            let rules = RuleSet::shared(params.into());
            println!("{}", serde_json::to_string_pretty(&rules.to_json()).unwrap());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
