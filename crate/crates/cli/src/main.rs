//! Command-line front end: construct vector-spread Borel ideals, compute
//! their homological invariants and cross-check every closed formula
//! against the built-in brute-force oracles.
//!
//! Exit codes: 0 success, 2 parse/usage errors, 3 precondition violations,
//! 4 verification mismatches, 5 oracle cap exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tspread_core::monomial::{count_spread, enumerate_spread};
use tspread_core::resolution::formula_set;
use tspread_core::{
    betti_table, betti_table_via_sets, borel_closure, cm_report, cm_witness_scan, colon_set_oracle,
    extremal_betti, extremal_from_table, homological_invariants, ideal_height,
    is_spread_strongly_stable, minimal_primes, poincare_series, taylor_betti, veronese_ideal,
    Error, IdealDocument, Monomial, MonomialIdeal, SpreadVector,
};

#[derive(Parser)]
#[command(
    name = "tspread",
    version,
    about = "Vector-spread Borel ideals: Betti tables, Poincare series, extremal corners and Cohen-Macaulay classification with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// An ideal given inline (`--n`, `--t`, `--gens`) or as a JSON document
/// (`--file`).
#[derive(Args)]
struct IdealInput {
    /// Ideal document file: {"version":1,"n":...,"t":[...],"generators":[...]}
    #[arg(long, conflicts_with_all = ["n", "t", "gens"])]
    file: Option<PathBuf>,
    /// Ambient variable count
    #[arg(long)]
    n: Option<u32>,
    /// Spread vector, comma separated (e.g. 1,0)
    #[arg(long, value_delimiter = ',')]
    t: Option<Vec<u32>>,
    /// Generators, comma separated (e.g. "x1*x2,x1*x4^2")
    #[arg(long)]
    gens: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List (or count) all t-spread monomials of one degree
    Enumerate {
        #[arg(long)]
        n: u32,
        /// Degree of the monomials
        #[arg(long)]
        l: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<u32>,
        /// Print only the cardinality
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check the count formula and the shift round-trips
        #[arg(long)]
        verify: bool,
    },
    /// Smallest t-spread strongly stable ideal containing the seeds
    Closure {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Re-check the closure exhaustively and for idempotence
        #[arg(long)]
        verify: bool,
    },
    /// The t-spread Veronese ideal of one degree
    Veronese {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check against the Borel closure of the largest seed
        #[arg(long)]
        verify: bool,
    },
    /// Graded Betti table of the ideal
    Betti {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check against the Taylor-complex oracle
        #[arg(long)]
        verify: bool,
    },
    /// Bigraded Poincare polynomial of the quotient
    Poincare {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check coefficients against the Betti table
        #[arg(long)]
        verify: bool,
    },
    /// Extremal Betti numbers (corners of the table)
    Extremal {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check against the oracle-derived table scan
        #[arg(long)]
        verify: bool,
    },
    /// Height, dimension, depth and the Cohen-Macaulay report
    Cm {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check height against minimal covers and the witness scan
        #[arg(long)]
        verify: bool,
    },
    /// Run the whole formula-vs-oracle battery on one ideal
    Verify {
        #[command(flatten)]
        input: IdealInput,
    },
}

enum CliError {
    Core(Error),
    Io(String),
    Usage(String),
    Mismatch(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(msg) | CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Mismatch(msg) => write!(f, "mismatch: {msg}"),
        }
    }
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Io(_) | CliError::Usage(_) => 2,
        CliError::Mismatch(_) => 4,
        CliError::Core(err) => match err {
            Error::Parse { .. } | Error::IndexOutOfRange { .. } | Error::EmptySpread => 2,
            Error::GeneratorCap { .. } => 5,
            Error::CrossCheck(_) => 4,
            _ => 3,
        },
    }
}

impl IdealInput {
    fn load(&self) -> Result<(MonomialIdeal, SpreadVector), CliError> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            let doc = IdealDocument::from_json(&text)?;
            return Ok(doc.to_ideal()?);
        }
        let (Some(n), Some(t), Some(gens)) = (self.n, &self.t, &self.gens) else {
            return Err(CliError::Usage(
                "provide --file or all of --n, --t and --gens".to_string(),
            ));
        };
        let t = SpreadVector::new(t.clone())?;
        let mut monomials = Vec::new();
        for part in gens.split(',') {
            monomials.push(Monomial::parse(part.trim(), n)?);
        }
        let ideal = MonomialIdeal::from_generators(monomials, n)?.with_spread(t.clone())?;
        Ok((ideal, t))
    }
}

fn render_ideal(ideal: &MonomialIdeal, t: &SpreadVector, format: Format) -> String {
    match format {
        Format::Json => IdealDocument::from_ideal(ideal, t).to_json(),
        Format::Text => {
            let gens: Vec<String> = ideal.generators().iter().map(Monomial::to_string).collect();
            let t_text: Vec<String> = t.entries().iter().map(u32::to_string).collect();
            format!(
                "n: {}\nt: {}\ngenerators: {}",
                ideal.n(),
                t_text.join(","),
                if gens.is_empty() {
                    "(zero ideal)".to_string()
                } else {
                    gens.join(", ")
                }
            )
        }
    }
}

fn mismatch(
    check: &str,
    formula: impl std::fmt::Display,
    oracle: impl std::fmt::Display,
) -> CliError {
    CliError::Mismatch(format!(
        "{check}:\nformula value:\n{formula}\noracle value:\n{oracle}"
    ))
}

/// The full per-ideal verification battery behind the `verify` command:
/// runs every check, prints one line each, and reports the first mismatch.
fn battery(ideal: &MonomialIdeal, t: &SpreadVector) -> Result<(), CliError> {
    let mut checks: Vec<(&str, Result<(), CliError>)> = Vec::new();

    let exhaustive = is_spread_strongly_stable(ideal, t, true)?;
    checks.push((
        "strong stability (exhaustive)",
        if exhaustive {
            Ok(())
        } else {
            Err(CliError::Core(Error::NotStronglyStable {
                witness: "exhaustive check found an escaping exchange".to_string(),
            }))
        },
    ));

    let table = betti_table(ideal, t)?;
    let via_sets = betti_table_via_sets(ideal, t)?;
    checks.push((
        "Betti: closed formula vs quotient sets",
        if table == via_sets {
            Ok(())
        } else {
            Err(mismatch(
                "betti routes",
                table.render_text(),
                via_sets.render_text(),
            ))
        },
    ));

    let oracle = taylor_betti(ideal)?;
    let shifted = table.to_quotient();
    checks.push((
        "Betti: closed formula vs Taylor oracle",
        if shifted == oracle {
            Ok(())
        } else {
            Err(mismatch(
                "betti vs taylor",
                shifted.render_text(),
                oracle.render_text(),
            ))
        },
    ));

    let mut colon_ok = Ok(());
    for k in 2..=ideal.generators().len() {
        let colon = colon_set_oracle(ideal, k)?;
        let formula = formula_set(&ideal.generators()[k - 1], t)?;
        if !colon.is_variable_generated || colon.variables != formula {
            colon_ok = Err(mismatch(
                &format!("colon set k={k}"),
                format!("{formula:?}"),
                format!(
                    "{:?} (variable-generated: {})",
                    colon.variables, colon.is_variable_generated
                ),
            ));
            break;
        }
    }
    checks.push(("linear quotients: colon sets", colon_ok));

    let poincare = poincare_series(ideal, t)?;
    let mut poincare_ok = Ok(());
    for (i, j, value) in table.iter() {
        let row = j - i;
        if poincare.coefficient(i + 1, row) != *value {
            poincare_ok = Err(mismatch(
                &format!("poincare coefficient (y^{}, z^{row})", i + 1),
                poincare.coefficient(i + 1, row),
                value,
            ));
            break;
        }
    }
    checks.push(("Poincare coefficients vs Betti table", poincare_ok));

    let extremals = extremal_betti(ideal, t)?;
    let from_oracle = extremal_from_table(&oracle_to_ideal_table(&oracle));
    checks.push((
        "extremal Betti: formulas vs oracle table",
        if extremals == from_oracle {
            Ok(())
        } else {
            Err(mismatch(
                "extremal corners",
                format!("{extremals:?}"),
                format!("{from_oracle:?}"),
            ))
        },
    ));

    let height = ideal_height(ideal, t)?;
    let primes = minimal_primes(ideal)?;
    let min_cover = primes.iter().map(|p| p.len()).min().unwrap_or(0) as u32;
    checks.push((
        "height vs minimal covers",
        if height == min_cover {
            Ok(())
        } else {
            Err(mismatch("height", height, min_cover))
        },
    ));

    let report = cm_report(ideal, t)?;
    let witness_found = cm_witness_scan(ideal, t)?.is_some();
    checks.push((
        "Cohen-Macaulay: witness scan vs depth = dim",
        if report.is_cm == witness_found {
            Ok(())
        } else {
            Err(mismatch("cm", report.is_cm, witness_found))
        },
    ));

    let mut failure = None;
    for (name, outcome) in checks {
        match outcome {
            Ok(()) => println!("ok: {name}"),
            Err(e) => {
                println!("MISMATCH: {name}");
                if failure.is_none() {
                    failure = Some(e);
                }
            }
        }
    }
    match failure {
        None => Ok(()),
        Some(e) => Err(e),
    }
}

/// Ideal-subject view of an oracle (quotient) table for the extremal scan.
fn oracle_to_ideal_table(quotient: &tspread_core::BettiTable) -> tspread_core::BettiTable {
    let mut table = tspread_core::BettiTable::new(tspread_core::Subject::Ideal);
    for (i, j, v) in quotient.iter() {
        if i >= 1 {
            table.add(i - 1, j, v.clone());
        }
    }
    table
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Enumerate {
            n,
            l,
            t,
            count,
            format,
            verify,
        } => {
            let t = SpreadVector::new(t)?;
            let listed = enumerate_spread(n, l, &t);
            let cardinality = count_spread(n, l, &t);
            if verify {
                if cardinality != listed.len().into() {
                    return Err(mismatch("count formula", &cardinality, listed.len()));
                }
                for u in &listed {
                    let round = u.shift_from_spread(&t)?.shift_to_spread(&t)?;
                    if &round != u {
                        return Err(mismatch("shift round-trip", u, round));
                    }
                }
            }
            match format {
                Format::Json => {
                    let monomials: Vec<String> = if count {
                        Vec::new()
                    } else {
                        listed.iter().map(Monomial::to_string).collect()
                    };
                    let body = serde_json::json!({
                        "n": n,
                        "l": l,
                        "t": t.entries(),
                        "count": cardinality.to_string(),
                        "monomials": monomials,
                    });
                    println!("{}", serde_json::to_string_pretty(&body).expect("json"));
                }
                Format::Text => {
                    if count {
                        println!("{cardinality}");
                    } else {
                        for u in &listed {
                            println!("{u}");
                        }
                    }
                }
            }
            Ok(())
        }
        Command::Closure {
            input,
            format,
            verify,
        } => {
            let (seeds, t) = input.load()?;
            let closed = borel_closure(seeds.generators(), &t, seeds.n())?;
            if verify {
                if !is_spread_strongly_stable(&closed, &t, true)? {
                    return Err(mismatch(
                        "closure strong stability",
                        "closed ideal",
                        "escaping exchange",
                    ));
                }
                let again = borel_closure(closed.generators(), &t, closed.n())?;
                if again != closed {
                    return Err(mismatch(
                        "closure idempotence",
                        render_ideal(&closed, &t, Format::Text),
                        render_ideal(&again, &t, Format::Text),
                    ));
                }
            }
            println!("{}", render_ideal(&closed, &t, format));
            Ok(())
        }
        Command::Veronese {
            n,
            l,
            t,
            format,
            verify,
        } => {
            let t = SpreadVector::new(t)?;
            let ideal = veronese_ideal(n, l, &t);
            if verify {
                if ideal.generators().len() != enumerate_spread(n, l, &t).len() {
                    return Err(mismatch(
                        "veronese generators",
                        ideal.generators().len(),
                        "enumeration",
                    ));
                }
                if !ideal.is_zero() && l >= 1 {
                    let seed: Vec<u32> = (1..=l).map(|k| n - t.gap_sum(l) + t.gap_sum(k)).collect();
                    let closed = borel_closure(&[Monomial::from_indices(seed)], &t, n)?;
                    if closed != ideal {
                        return Err(mismatch(
                            "veronese vs closure of the largest seed",
                            render_ideal(&ideal, &t, Format::Text),
                            render_ideal(&closed, &t, Format::Text),
                        ));
                    }
                }
            }
            println!("{}", render_ideal(&ideal, &t, format));
            Ok(())
        }
        Command::Betti {
            input,
            format,
            verify,
        } => {
            let (ideal, t) = input.load()?;
            let table = betti_table(&ideal, &t)?;
            if verify {
                let via_sets = betti_table_via_sets(&ideal, &t)?;
                if table != via_sets {
                    return Err(mismatch(
                        "betti routes",
                        table.render_text(),
                        via_sets.render_text(),
                    ));
                }
                let oracle = taylor_betti(&ideal)?;
                let shifted = table.to_quotient();
                if shifted != oracle {
                    return Err(mismatch(
                        "betti vs taylor",
                        shifted.render_text(),
                        oracle.render_text(),
                    ));
                }
            }
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&table).expect("json")),
                Format::Text => print!("{}", table.render_text()),
            }
            Ok(())
        }
        Command::Poincare {
            input,
            format,
            verify,
        } => {
            let (ideal, t) = input.load()?;
            let poincare = poincare_series(&ideal, &t)?;
            if verify {
                let table = betti_table(&ideal, &t)?;
                for (i, j, value) in table.iter() {
                    if poincare.coefficient(i + 1, j - i) != *value {
                        return Err(mismatch(
                            "poincare coefficients",
                            poincare.coefficient(i + 1, j - i),
                            value,
                        ));
                    }
                }
            }
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&poincare).expect("json"))
                }
                Format::Text => println!("{poincare}"),
            }
            Ok(())
        }
        Command::Extremal {
            input,
            format,
            verify,
        } => {
            let (ideal, t) = input.load()?;
            let extremals = extremal_betti(&ideal, &t)?;
            if verify {
                let oracle = taylor_betti(&ideal)?;
                let from_oracle = extremal_from_table(&oracle_to_ideal_table(&oracle));
                if extremals != from_oracle {
                    return Err(mismatch(
                        "extremal corners vs oracle table",
                        format!("{extremals:?}"),
                        format!("{from_oracle:?}"),
                    ));
                }
            }
            match format {
                Format::Json => {
                    let body: Vec<serde_json::Value> = extremals
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "k": e.homological,
                                "l": e.degree,
                                "value": e.value.to_string(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&body).expect("json"));
                }
                Format::Text => {
                    if extremals.is_empty() {
                        println!("no extremal Betti numbers (zero ideal)");
                    }
                    for e in &extremals {
                        println!(
                            "beta_{{{k},{k}+{l}}} = {v}",
                            k = e.homological,
                            l = e.degree,
                            v = e.value
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Cm {
            input,
            format,
            verify,
        } => {
            let (ideal, t) = input.load()?;
            let report = cm_report(&ideal, &t)?;
            if verify {
                let primes = minimal_primes(&ideal)?;
                let min_cover = primes.iter().map(|p| p.len()).min().unwrap_or(0) as u32;
                if report.height != min_cover {
                    return Err(mismatch(
                        "height vs minimal covers",
                        report.height,
                        min_cover,
                    ));
                }
                let witness_found = cm_witness_scan(&ideal, &t)?.is_some();
                if report.is_cm != witness_found {
                    return Err(mismatch(
                        "cm flag vs witness scan",
                        report.is_cm,
                        witness_found,
                    ));
                }
            }
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("json"))
                }
                Format::Text => print!("{}", report.render_text()),
            }
            Ok(())
        }
        Command::Verify { input } => {
            let (ideal, t) = input.load()?;
            // invariants need a proper nonzero ideal; report that cleanly
            homological_invariants(&ideal, &t)?;
            battery(&ideal, &t)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
