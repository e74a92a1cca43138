use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use arrovian::axioms::full_report;
use arrovian::exec::with_workers;
use arrovian::format::{
    pair_records, parse_builtin_spec, parse_profile, parse_swf, parse_witness, write_witness, WitnessRecord,
};
use arrovian::report::{
    axiom_report, estimate_report, lemma_report, pruned_report, survey_report, sweep_report, verdict_report, Report,
};
use arrovian::search::{
    contradictory_pair_survey, exact_cycle_fraction, monte_carlo_condorcet, pruned_full_triples, sweep_candidates,
    verify_lemmas, CandidateSpace, Culture, SweepMode, SweepPlan, MAX_EXACT_PROFILES,
};
use arrovian::witness::{arrow_witness, contradictory_pair, neutrality_witness, pareto_witness, strictness_witness};
use arrovian::{render_chain, Axiom, Error, IiaSwf, PreferenceRelation, Profile};

#[derive(Parser)]
#[command(
    name = "arrovian",
    version,
    about = "Arrovian axiom checks and cycle witnesses for three alternatives"
)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a relation literal such as `0e1`, or every column of a profile file.
    Classify {
        /// Relation literal, profile file or witness file.
        input: String,
    },
    /// Check axioms of an SWF given as a file or `builtin:<name>[:args]:<n>`.
    Check(CheckArgs),
    /// Construct a cycle witness, or replay one with `--verify`.
    Witness(WitnessArgs),
    /// Sweep IIA candidates with Unanimity fixed.
    Enumerate(EnumerateArgs),
    /// Estimate how often pairwise majority cycles.
    Simulate(SimulateArgs),
}

#[derive(Args)]
struct CheckArgs {
    swf: String,
    #[arg(long, value_parser = parse_axiom, conflicts_with = "all", required_unless_present = "all")]
    axiom: Vec<Axiom>,
    #[arg(long)]
    all: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Strictness,
    Neutrality,
    Pareto,
    Arrow,
    ContradictoryPair,
}

#[derive(Args)]
struct WitnessArgs {
    swf: String,
    #[arg(long, value_enum, required_unless_present = "verify")]
    theorem: Option<Theorem>,
    /// Output path; a contradictory pair also writes `<out>.prime`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Re-evaluate a witness file under the SWF.
    #[arg(long, conflicts_with_all = ["theorem", "out"])]
    verify: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, default_value_t = 2)]
    individuals: usize,
    #[arg(long, default_value = "symmetric", value_parser = parse_mode)]
    mode: SweepMode,
    /// Sample this many candidates instead of sweeping exhaustively.
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    workers: Option<usize>,
    /// Exhaustive backtracking over full triples (two individuals).
    #[arg(long, conflicts_with_all = ["trials", "seed", "lemmas", "survey"])]
    pruned: bool,
    /// Also check the lemma properties on UD-satisfying candidates.
    #[arg(long)]
    lemmas: bool,
    /// Survey contradictory pairs instead of cycle witnesses.
    #[arg(long)]
    survey: bool,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    voters: usize,
    #[arg(long, default_value_t = 1_000_000)]
    trials: u64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value = "strict", value_parser = parse_culture)]
    culture: Culture,
    #[arg(long)]
    workers: Option<usize>,
    /// Also enumerate all profiles for the exact fraction, when small enough.
    #[arg(long)]
    exact: bool,
}

fn parse_axiom(s: &str) -> Result<Axiom, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<SweepMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_culture(s: &str) -> Result<Culture, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Negative(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PreconditionFailed(_) => Failure::Negative(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(Report, bool), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path, e: Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn load_swf(spec: &str) -> Result<IiaSwf, Failure> {
    if spec.starts_with("builtin:") {
        return Ok(parse_builtin_spec(spec)?);
    }
    let path = Path::new(spec);
    parse_swf(&read(path)?).map_err(|e| in_file(path, e))
}

fn describe(t: &PreferenceRelation) -> String {
    format!("{}: {}", t.classify().kind, render_chain(t))
}

fn profile_lines(r: &mut Report, m: &Profile) {
    r.push("individuals", m.n());
    for (i, c) in m.columns().iter().enumerate() {
        r.push(format!("individual.{}", i + 1), format!("{c} {}", describe(c)));
    }
    r.push("strict", m.is_strict());
}

fn classify(input: &str) -> Outcome {
    let mut r = Report::new();
    if let Ok(t) = input.parse::<PreferenceRelation>() {
        let c = t.classify();
        r.push("relation", t.to_string())
            .push(c.kind.to_string(), render_chain(&t))
            .push("strict", c.strict);
        return Ok((r, true));
    }
    let path = Path::new(input);
    let text = read(path)?;
    let witness = text.lines().any(|l| l.trim_start().starts_with("aggregate:"));
    if witness {
        let w = parse_witness(&text).map_err(|e| in_file(path, e))?;
        profile_lines(&mut r, &w.profile);
        r.push("aggregate", format!("{} {}", w.aggregate, describe(&w.aggregate)))
            .push("provenance", w.provenance.name());
    } else {
        let m = parse_profile(&text).map_err(|e| in_file(path, e))?;
        profile_lines(&mut r, &m);
    }
    Ok((r, true))
}

fn check(args: CheckArgs) -> Outcome {
    let swf = load_swf(&args.swf)?;
    if args.all {
        let report = full_report(&swf)?;
        return Ok((axiom_report(&report), report.all_hold()));
    }
    let mut r = Report::new();
    let mut ok = true;
    for axiom in args.axiom {
        let v = axiom.check(&swf)?;
        ok &= v.holds;
        r.extend(verdict_report(&v));
    }
    Ok((r, ok))
}

fn emit(r: &mut Report, key: &str, record: &WitnessRecord, out: Option<&Path>) -> Result<(), Failure> {
    let text = write_witness(record);
    match out {
        Some(path) => {
            write(path, &text)?;
            r.push(key, path.display().to_string());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn witness(args: WitnessArgs, json: bool) -> Outcome {
    let swf = load_swf(&args.swf)?;
    let mut r = Report::new();
    if let Some(path) = args.verify {
        let w = parse_witness(&read(&path)?).map_err(|e| in_file(&path, e))?;
        let actual = swf.apply(&w.profile)?;
        let ok = actual == w.aggregate && actual.is_cycle();
        r.push("profile", w.profile.to_string())
            .push("recorded", w.aggregate.to_string())
            .push("aggregate", format!("{actual} {}", describe(&actual)))
            .push("reproduced", ok);
        return Ok((r, ok));
    }
    let theorem = args.theorem.expect("clap requires --theorem without --verify");
    let out = args.out.as_deref();
    if out.is_none() && json {
        return Err(Failure::Usage("--json needs --out for witness files".into()));
    }
    let single = match theorem {
        Theorem::Strictness => strictness_witness(&swf)?,
        Theorem::Neutrality => neutrality_witness(&swf)?,
        Theorem::Pareto => pareto_witness(&swf)?,
        Theorem::Arrow => Some(arrow_witness(&swf)?),
        Theorem::ContradictoryPair => {
            let Some(out) = out else {
                return Err(Failure::Usage("contradictory-pair needs --out".into()));
            };
            let (m, m_prime) = pair_records(&contradictory_pair(&swf)?);
            let mut prime = out.as_os_str().to_owned();
            prime.push(".prime");
            emit(&mut r, "written", &m, Some(out))?;
            emit(&mut r, "written-prime", &m_prime, Some(Path::new(&prime)))?;
            return Ok((r, true));
        }
    };
    let Some(w) = single else {
        let property = match theorem {
            Theorem::Strictness => Axiom::StrictnessPreservation,
            Theorem::Neutrality => Axiom::StrictNeutrality,
            _ => Axiom::FullNeutrality,
        };
        return Err(Failure::Negative(format!("no witness: {property} holds")));
    };
    emit(&mut r, "written", &WitnessRecord::from(&w), out)?;
    Ok((r, true))
}

fn enumerate(args: EnumerateArgs) -> Outcome {
    if args.pruned {
        if args.mode != SweepMode::FullTriples {
            return Err(Failure::Usage("--pruned needs --mode full".into()));
        }
        let p = with_workers(args.workers, || pruned_full_triples(args.individuals))?;
        let mut r = Report::new();
        r.push("individuals", args.individuals)
            .push("mode", "full")
            .push("plan", "pruned");
        r.extend(pruned_report(&p));
        return Ok((r, p.discrepancies.is_empty()));
    }
    let space = CandidateSpace::new(args.individuals, args.mode, true)?;
    let plan = match (args.trials, args.seed, args.mode) {
        (_, None, SweepMode::FullTriples) => return Err(Failure::Usage("--mode full needs --seed".into())),
        (Some(_), None, _) => return Err(Failure::Usage("--trials needs --seed".into())),
        (None, None, _) => SweepPlan::Exhaustive,
        (trials, Some(seed), _) => SweepPlan::Sampled {
            trials: trials.unwrap_or(1_000_000),
            seed,
        },
    };
    with_workers(args.workers, || {
        let mut r = Report::new();
        r.push("individuals", args.individuals)
            .push("mode", args.mode.to_string());
        match plan {
            SweepPlan::Exhaustive => r.push("plan", "exhaustive"),
            SweepPlan::Sampled { trials, seed } => r.push("plan", format!("sampled trials={trials} seed={seed}")),
        };
        if args.survey {
            let s = contradictory_pair_survey(&space, plan)?;
            r.extend(survey_report(&s));
            return Ok((r, s.failures() == 0));
        }
        let s = sweep_candidates(&space, plan)?;
        let mut ok = s.discrepancies.is_empty();
        r.extend(sweep_report(&s));
        if args.lemmas {
            let l = verify_lemmas(&space, plan)?;
            ok &= l.total_violations() == 0;
            r.extend(lemma_report(&l));
        }
        Ok((r, ok))
    })
}

fn simulate(args: SimulateArgs) -> Outcome {
    let Some(seed) = args.seed else {
        return Err(Failure::Usage("simulate needs --seed".into()));
    };
    let e = with_workers(args.workers, || {
        monte_carlo_condorcet(args.voters, args.trials, seed, args.culture)
    })?;
    let mut r = estimate_report(&e);
    if args.exact {
        let (cycles, total) = exact_cycle_fraction(args.voters, args.culture)
            .map_err(|_| Failure::Usage(format!("--exact enumerates at most {MAX_EXACT_PROFILES} profiles")))?;
        r.push("exact", format!("{cycles}/{total}"))
            .push("exact-fraction", format!("{:.6}", cycles as f64 / total as f64));
    }
    Ok((r, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Classify { input } => classify(&input),
        Command::Check(a) => check(a),
        Command::Witness(a) => witness(a, cli.json),
        Command::Enumerate(a) => enumerate(a),
        Command::Simulate(a) => simulate(a),
    };
    match outcome {
        Ok((report, ok)) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Negative(msg)) => {
            eprintln!("arrovian: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("arrovian: {msg}");
            ExitCode::from(2)
        }
    }
}
