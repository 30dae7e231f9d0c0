//! `frobkit`: Frobenius numbers of primitive Pythagorean triples and
//! general gcd-1 generator sets, with explicit representations and
//! brute-force cross-checks.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on
//! invalid input, 3 when an oracle table would exceed its budget (set via
//! the `FROBKIT_BUDGET` environment variable, in table entries).

mod report;

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use frobkit::closed_forms::pythagorean_frobenius;
use frobkit::constructive::{
    construction_trace, lemma_bound_holds, lemma_interval_search, represent_any,
    solve_diophantine,
};
use frobkit::oracle::{
    Budget, apery_set, denumerant, frobenius_dp, frobenius_round_robin, gaps,
    is_representable_dp,
};
use frobkit::{GeneratorSet, TripleParams};

use report::{Check, Report, int_array, int_value, render_text, uint_value};

#[derive(Parser)]
#[command(name = "frobkit", version, about = "Frobenius numbers of primitive Pythagorean triples")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Re-verify results against the brute-force oracles
    #[arg(long, global = true)]
    check: bool,
    /// Include intermediate construction values where available
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius number of a triple (via --m/--n) or of a generator list
    #[command(group(ArgGroup::new("mode").required(true).args(["m", "generators"])))]
    Frobenius {
        /// Larger triple parameter
        #[arg(long, requires = "n")]
        m: Option<i128>,
        /// Smaller triple parameter
        #[arg(long, requires = "m")]
        n: Option<i128>,
        /// Comma-separated generators, e.g. "6,10,15"
        #[arg(long, conflicts_with = "n")]
        generators: Option<String>,
    },
    /// Represent a target over the triple generated by --m/--n
    Represent {
        #[arg(long)]
        m: i128,
        #[arg(long)]
        n: i128,
        /// Value to decompose
        #[arg(long, allow_hyphen_values = true)]
        target: i128,
    },
    /// Cross-validate formula, gaps, and construction over a parameter sweep
    Verify {
        /// Largest m in the sweep (all valid n per m are covered)
        #[arg(long, default_value_t = 10)]
        max_m: i128,
    },
    /// Smallest representable value in each residue class of a modulus
    Apery {
        /// Comma-separated generators
        #[arg(long)]
        generators: String,
        /// Class modulus; must be one of the generators
        #[arg(long)]
        modulus: i128,
    },
    /// All unrepresentable nonnegative integers
    Gaps {
        /// Comma-separated generators
        #[arg(long)]
        generators: String,
    },
    /// Number of distinct representations of a target
    Denumerant {
        /// Comma-separated generators
        #[arg(long)]
        generators: String,
        /// Value whose representations are counted
        #[arg(long, allow_hyphen_values = true)]
        target: i128,
    },
}

#[derive(Debug)]
enum CliError {
    Lib(frobkit::Error),
    NotRepresentable { target: i128, frobenius: i128 },
    Input(String),
}

impl From<frobkit::Error> for CliError {
    fn from(err: frobkit::Error) -> Self {
        CliError::Lib(err)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(err) => err.fmt(f),
            CliError::NotRepresentable { target, frobenius } => write!(
                f,
                "target {target} has no representation; \
                 the largest unrepresentable value is {frobenius}"
            ),
            CliError::Input(msg) => f.write_str(msg),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Lib(frobkit::Error::BudgetExceeded { .. }) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            match format {
                Format::Json => {
                    // canonical form: keys sorted at every level, so any
                    // parse-and-reserialize reproduces the bytes
                    let value = serde_json::to_value(&report).expect("reports always serialize");
                    println!("{value}");
                }
                Format::Text => print!("{}", render_text(&report)),
            }
            if report.all_checks_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let budget = budget_from_env()?;
    let text_mode = cli.format == Format::Text;
    match cli.command {
        Command::Frobenius { m: Some(m), n: Some(n), generators: None } => {
            cmd_frobenius_triple(m, n, cli.check, budget)
        }
        Command::Frobenius { m: None, n: None, generators: Some(raw) } => {
            cmd_frobenius_generators(&raw, cli.check, budget)
        }
        Command::Frobenius { .. } => unreachable!("clap enforces the frobenius mode group"),
        Command::Represent { m, n, target } => {
            cmd_represent(m, n, target, cli.check, cli.trace, budget)
        }
        Command::Verify { max_m } => cmd_verify(max_m, budget, text_mode),
        Command::Apery { generators, modulus } => {
            cmd_apery(&generators, modulus, cli.check, budget)
        }
        Command::Gaps { generators } => cmd_gaps(&generators, cli.check, budget),
        Command::Denumerant { generators, target } => {
            cmd_denumerant(&generators, target, cli.check, budget)
        }
    }
}

fn budget_from_env() -> Result<Budget, CliError> {
    match std::env::var("FROBKIT_BUDGET") {
        Ok(raw) => raw.trim().parse::<u64>().map(Budget::new).map_err(|_| {
            CliError::Input(format!(
                "FROBKIT_BUDGET must be a decimal number of table entries, got {raw:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(Budget::default()),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(CliError::Input("FROBKIT_BUDGET is not valid UTF-8".to_string()))
        }
    }
}

fn parse_generators(raw: &str) -> Result<Vec<i128>, CliError> {
    raw.split(',')
        .map(str::trim)
        .filter(|piece| !piece.is_empty())
        .map(|piece| {
            piece.parse::<i128>().map_err(|_| {
                CliError::Input(format!("generator {piece:?} is not an integer"))
            })
        })
        .collect()
}

fn agreement_check(name: &str, expected: i128, actual: i128) -> Check {
    let passed = expected == actual;
    let details = (!passed).then(|| format!("expected {expected}, got {actual}"));
    Check::new(name, passed, details)
}

fn cmd_frobenius_triple(m: i128, n: i128, check: bool, budget: Budget) -> Result<Report, CliError> {
    let params = TripleParams::new(m, n)?;
    let triple = params.triple()?;
    let frobenius = pythagorean_frobenius(params)?;
    let mut checks = Vec::new();
    if check {
        let set = triple.generator_set();
        checks.push(agreement_check(
            "table scan agrees",
            frobenius.value(),
            frobenius_dp(&set, budget)?.value(),
        ));
        checks.push(agreement_check(
            "residue shortest paths agree",
            frobenius.value(),
            frobenius_round_robin(&set, budget)?.value(),
        ));
    }
    Ok(Report {
        command: "frobenius".to_string(),
        inputs: json!({ "m": int_value(m), "n": int_value(n) }),
        result: json!({
            "generators": int_array(&triple.generators()),
            "frobenius": int_value(frobenius.value()),
        }),
        checks,
    })
}

fn cmd_frobenius_generators(raw: &str, check: bool, budget: Budget) -> Result<Report, CliError> {
    let values = parse_generators(raw)?;
    let set = GeneratorSet::new(&values)?;
    let frobenius = frobenius_dp(&set, budget)?;
    let mut checks = Vec::new();
    if check {
        checks.push(agreement_check(
            "residue shortest paths agree",
            frobenius.value(),
            frobenius_round_robin(&set, budget)?.value(),
        ));
        checks.push(agreement_check(
            "apery set agrees",
            frobenius.value(),
            apery_set(&set, set.smallest(), budget)?.frobenius().value(),
        ));
    }
    Ok(Report {
        command: "frobenius".to_string(),
        inputs: json!({ "generators": int_array(&values) }),
        result: json!({
            "generators": int_array(set.gens()),
            "frobenius": int_value(frobenius.value()),
        }),
        checks,
    })
}

fn cmd_represent(
    m: i128,
    n: i128,
    target: i128,
    check: bool,
    trace: bool,
    budget: Budget,
) -> Result<Report, CliError> {
    let params = TripleParams::new(m, n)?;
    let frobenius = pythagorean_frobenius(params)?.value();
    let Some(rep) = represent_any(target, params, budget)? else {
        return Err(CliError::NotRepresentable { target, frobenius });
    };
    let constructed = target > frobenius;
    let mut result = json!({
        "generators": int_array(rep.generators()),
        "coefficients": int_array(rep.coeffs()),
        "frobenius": int_value(frobenius),
        "path": if constructed { "closed-form" } else { "table" },
    });
    if trace && constructed {
        let tr = construction_trace(target, params)?;
        result["trace"] = json!({
            "a": int_value(tr.pair().a()),
            "b": int_value(tr.pair().b()),
            "x": int_value(tr.witness().x()),
            "y": int_value(tr.witness().y()),
        });
    }
    let mut checks = Vec::new();
    if check {
        checks.push(Check::new(
            "coefficients are nonnegative",
            rep.coeffs().iter().all(|&c| c >= 0),
            None,
        ));
        let dot = rep
            .coeffs()
            .iter()
            .zip(rep.generators())
            .try_fold(0i128, |acc, (&c, &g)| {
                c.checked_mul(g).and_then(|term| acc.checked_add(term))
            });
        checks.push(Check::new(
            "coefficients reproduce the target",
            dot == Some(target),
            (dot != Some(target)).then(|| format!("sum is {dot:?}, target is {target}")),
        ));
        // the table oracle only fits small targets; skip it beyond the budget
        if (target as u128) < u128::from(budget.max_entries()) {
            let set = params.triple()?.generator_set();
            checks.push(Check::new(
                "oracle confirms representability",
                is_representable_dp(target, &set, budget)?,
                None,
            ));
        }
    }
    Ok(Report {
        command: "represent".to_string(),
        inputs: json!({
            "m": int_value(m),
            "n": int_value(n),
            "target": int_value(target),
        }),
        result,
        checks,
    })
}

/// Collects sweep counterexamples, keeping only the first few for the
/// report details.
struct Tally {
    failures: u64,
    samples: Vec<String>,
}

impl Tally {
    const MAX_SAMPLES: usize = 8;

    fn new() -> Self {
        Tally { failures: 0, samples: Vec::new() }
    }

    fn record(&mut self, sample: impl FnOnce() -> String) {
        self.failures += 1;
        if self.samples.len() < Self::MAX_SAMPLES {
            self.samples.push(sample());
        }
    }

    fn into_check(self, name: &str) -> Check {
        let passed = self.failures == 0;
        let details = (!passed).then(|| {
            let mut text = self.samples.join("; ");
            let extra = self.failures - self.samples.len() as u64;
            if extra > 0 {
                text.push_str(&format!(" (+{extra} more)"));
            }
            text
        });
        Check::new(name, passed, details)
    }
}

fn cmd_verify(max_m: i128, budget: Budget, text_mode: bool) -> Result<Report, CliError> {
    const CONSTRUCTION_WINDOW: i128 = 200;
    let mut formula = Tally::new();
    let mut gap = Tally::new();
    let mut window = Tally::new();
    let mut bound = Tally::new();
    let mut construction = Tally::new();
    let mut pairs = 0u64;
    for m in 2..=max_m {
        if text_mode {
            eprint!("\rverify: m = {m}/{max_m}");
        }
        for n in 1..m {
            let Ok(params) = TripleParams::new(m, n) else {
                continue;
            };
            pairs += 1;
            let frobenius = pythagorean_frobenius(params)?.value();
            let triple = params.triple()?;
            let set = triple.generator_set();

            let scanned = frobenius_dp(&set, budget)?.value();
            if scanned != frobenius {
                formula.record(|| format!("(m={m}, n={n}): formula {frobenius}, scan {scanned}"));
            }

            // class minima give O(1) membership: v is representable
            // exactly when v reaches its residue class's minimum
            let smallest = set.smallest();
            let apery = apery_set(&set, smallest, budget)?;
            let minimum = |v: i128| apery.values()[(v % smallest) as usize];
            if frobenius >= minimum(frobenius) {
                gap.record(|| format!("(m={m}, n={n}): {frobenius} is representable"));
            }
            for j in 1..=smallest {
                if frobenius + j < minimum(frobenius + j) {
                    window.record(|| {
                        format!("(m={m}, n={n}): {} is unrepresentable", frobenius + j)
                    });
                }
            }

            let generators = triple.generators();
            for target in frobenius + 1..=frobenius + CONSTRUCTION_WINDOW {
                let pair = solve_diophantine(target, params)?;
                let witness = lemma_interval_search(pair.b(), params)?;
                if !lemma_bound_holds(witness, params)? {
                    bound.record(|| format!("(m={m}, n={n}, b={}): bound fails", pair.b()));
                }
                match recomputed_coefficients(params, pair, witness, &generators) {
                    Some((coeffs, total)) if coeffs.iter().all(|&c| c >= 0) && total == target => {}
                    outcome => construction.record(|| {
                        format!("(m={m}, n={n}, target={target}): got {outcome:?}")
                    }),
                }
            }
        }
    }
    if text_mode && max_m >= 2 {
        eprintln!();
    }
    let checks = vec![
        formula.into_check("closed form matches table scan"),
        gap.into_check("frobenius number is unrepresentable"),
        window.into_check("next values are all representable"),
        bound.into_check("interval witness satisfies the bound"),
        construction.into_check("construction yields valid representations"),
    ];
    Ok(Report {
        command: "verify".to_string(),
        inputs: json!({ "max_m": int_value(max_m) }),
        result: json!({
            "parameter_pairs": pairs,
            "construction_window": int_value(CONSTRUCTION_WINDOW),
        }),
        checks,
    })
}

/// Re-derives the three construction coefficients and their weighted sum
/// with checked arithmetic, independently of the library's own
/// construction path. `None` signals overflow.
fn recomputed_coefficients(
    params: TripleParams,
    pair: frobkit::constructive::DiophantinePair,
    witness: frobkit::LemmaWitness,
    generators: &[i128; 3],
) -> Option<([i128; 3], i128)> {
    let (m, n) = (params.m(), params.n());
    let (x, y) = (witness.x(), witness.y());
    let ym = y.checked_mul(m)?;
    let xn = x.checked_mul(n)?;
    let xm = x.checked_mul(m)?;
    let yn = y.checked_mul(n)?;
    let coeffs = [
        pair.a().checked_sub(ym.checked_add(xn)?)?,
        xm.checked_sub(yn)?.checked_sub(pair.b())?,
        ym.checked_sub(xn)?,
    ];
    let mut total = 0i128;
    for (&c, &g) in coeffs.iter().zip(generators) {
        total = total.checked_add(c.checked_mul(g)?)?;
    }
    Some((coeffs, total))
}

fn cmd_apery(raw: &str, modulus: i128, check: bool, budget: Budget) -> Result<Report, CliError> {
    let values = parse_generators(raw)?;
    let set = GeneratorSet::new(&values)?;
    let apery = apery_set(&set, modulus, budget)?;
    let mut checks = Vec::new();
    if check {
        checks.push(agreement_check(
            "table scan agrees",
            apery.frobenius().value(),
            frobenius_dp(&set, budget)?.value(),
        ));
    }
    Ok(Report {
        command: "apery".to_string(),
        inputs: json!({
            "generators": int_array(&values),
            "modulus": int_value(modulus),
        }),
        result: json!({
            "generators": int_array(set.gens()),
            "values": int_array(apery.values()),
            "frobenius": int_value(apery.frobenius().value()),
        }),
        checks,
    })
}

fn cmd_gaps(raw: &str, check: bool, budget: Budget) -> Result<Report, CliError> {
    let values = parse_generators(raw)?;
    let set = GeneratorSet::new(&values)?;
    let gap_list = gaps(&set, budget)?;
    let frobenius = gap_list.last().copied().unwrap_or(-1);
    let mut checks = Vec::new();
    if check {
        checks.push(agreement_check(
            "largest gap matches residue shortest paths",
            frobenius,
            frobenius_round_robin(&set, budget)?.value(),
        ));
    }
    Ok(Report {
        command: "gaps".to_string(),
        inputs: json!({ "generators": int_array(&values) }),
        result: json!({
            "generators": int_array(set.gens()),
            "count": gap_list.len(),
            "frobenius": int_value(frobenius),
            "gaps": int_array(&gap_list),
        }),
        checks,
    })
}

fn cmd_denumerant(
    raw: &str,
    target: i128,
    check: bool,
    budget: Budget,
) -> Result<Report, CliError> {
    let values = parse_generators(raw)?;
    let set = GeneratorSet::new(&values)?;
    let count = denumerant(target, &set, budget)?;
    let mut checks = Vec::new();
    if check {
        let reachable = is_representable_dp(target, &set, budget)?;
        checks.push(Check::new(
            "count positivity matches reachability",
            (count > 0) == reachable,
            None,
        ));
    }
    Ok(Report {
        command: "denumerant".to_string(),
        inputs: json!({
            "generators": int_array(&values),
            "target": int_value(target),
        }),
        result: json!({
            "generators": int_array(set.gens()),
            "count": uint_value(count),
        }),
        checks,
    })
}
