//! Command-line front end: build construction automata, query the word
//! problem, enumerate balls, render DOT, and run the refutation tools.
//!
//! Exit codes: 0 on success (for `eq`: the words are equal), 1 for a
//! negative verdict (`eq` unequal, `oracle-check` failure), 2 for any input
//! or usage error.

use autsemi::algebra::FiniteSemigroup;
use autsemi::constructions::{
    act_extension, adjoin_identity, adjoin_zero, direct_power, direct_product,
    free_product_finite, free_product_general, ideal_extension, rees_matrix, strong_semilattice,
    wreath_product, ActExtensionSpec, HypothesisMode, IdealExtensionSpec, ReesSpec,
    SemilatticeSpec,
};
use autsemi::io::{parse_automaton, parse_map, parse_semigroup, serialize_automaton, MapFile};
use autsemi::mealy::{export_dot, minimize, EpString, MealyAutomaton, StateId, Word};
use autsemi::word_problem::{
    ball, equal, periodic_by_recursion, refute_n0_valuation, NatOrZero, Refutation, Valuation,
};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "autsemi", version, about = "Automata generating semigroups: constructions and analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an automaton file and report whether it is well-formed.
    Validate { automaton: PathBuf },
    /// Compile a construction into an automaton file.
    #[command(subcommand)]
    Build(BuildCommand),
    /// Decide whether two words over the states are equal in the generated
    /// semigroup. Words are space-separated state names in one argument.
    Eq { automaton: PathBuf, u: String, v: String },
    /// Act on a string (--string) or an eventually periodic string
    /// (--periodic "prefix : period").
    Act {
        automaton: PathBuf,
        word: String,
        #[arg(long, conflicts_with = "periodic")]
        string: Option<String>,
        #[arg(long)]
        periodic: Option<String>,
        /// With --periodic, print the first N symbols of the unrolled
        /// image instead of the prefix : period form.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Enumerate the distinct elements represented by words of length at
    /// most the radius.
    Ball {
        automaton: PathBuf,
        #[arg(long)]
        radius: usize,
        /// Print only the per-length counts of new elements.
        #[arg(long)]
        growth: bool,
    },
    /// Merge behaviourally equivalent states.
    Minimize {
        automaton: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Render the automaton as a Graphviz digraph.
    Dot {
        automaton: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Find verified exponents m < n with state^m = state^n, given that the
    /// state recurses only to itself and a zero state.
    Periodic {
        automaton: PathBuf,
        #[arg(long)]
        state: String,
        #[arg(long)]
        zero: String,
    },
    /// Run the refutation procedure against a claimed valuation of the
    /// states in the naturals-with-zero (map file, values are naturals or
    /// the zero marker z!).
    Refute {
        automaton: PathBuf,
        #[arg(long)]
        valuation: PathBuf,
    },
    /// Cross-check a shipped construction instance against its model
    /// arithmetic.
    OracleCheck {
        #[arg(long)]
        construction: String,
    },
}

#[derive(Subcommand)]
enum BuildCommand {
    /// Free product of two finite semigroups with chosen idempotents.
    FreeProductFinite {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Idempotent element of the left factor.
        #[arg(long)]
        e: String,
        /// Idempotent element of the right factor.
        #[arg(long)]
        f: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Free product of two automaton semigroups with distinguished states.
    FreeProduct {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        e: String,
        #[arg(long)]
        f: String,
        /// Accept the power hypothesis by assertion instead of verifying
        /// idempotency; the output is flagged unverified.
        #[arg(long)]
        assert_homogeneous: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Wreath product of an automaton monoid with a finite monoid.
    Wreath {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        top: PathBuf,
        /// Identity state of the base; adjoined fresh when omitted.
        #[arg(long)]
        identity: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rees matrix semigroup over an automaton monoid.
    Rees {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        identity: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        lambda: usize,
        /// Map file "lambda i -> state" for the sandwich matrix (1-based).
        #[arg(long)]
        matrix: PathBuf,
        /// Map file "entry state -> state" of left-multiplication claims.
        #[arg(long)]
        left_mult: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Strong semilattice of automaton semigroups over a finite bottom.
    Semilattice {
        /// Part automata, repeatable in order.
        #[arg(long, required = true)]
        part: Vec<PathBuf>,
        #[arg(long)]
        bottom: PathBuf,
        /// Right zero of the bottom semigroup.
        #[arg(long)]
        zero: String,
        /// One map file per part: "state -> bottom element".
        #[arg(long, required = true)]
        hom: Vec<PathBuf>,
        #[arg(long, default_value_t = 4)]
        bound: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extension of an automaton semigroup by a finite ideal with a right
    /// zero.
    IdealExt {
        #[arg(long)]
        top: PathBuf,
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        zero: String,
        /// Map file "state element -> element" for the left action.
        #[arg(long)]
        left: PathBuf,
        /// Map file "element state -> element" for the right action.
        #[arg(long)]
        right: PathBuf,
        #[arg(long, default_value_t = 3)]
        bound: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extension of an automaton semigroup by a finite right act.
    Sx {
        #[arg(long)]
        base: PathBuf,
        /// Comma-separated point names.
        #[arg(long)]
        points: String,
        /// Map file "point state -> point".
        #[arg(long)]
        action: PathBuf,
        #[arg(long, default_value_t = 4)]
        bound: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Adjoin a fresh zero state and blank symbol.
    AdjoinZero {
        automaton: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Adjoin a fresh identity state.
    AdjoinIdentity {
        automaton: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Componentwise product of two automata.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Componentwise n-th power of an automaton.
    Power {
        automaton: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate { automaton } => {
            let aut = load_automaton(&automaton)?;
            println!("ok: {} states, {} symbols", aut.state_count(), aut.alphabet_len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Build(build) => run_build(build),
        Command::Eq { automaton, u, v } => {
            let aut = load_automaton(&automaton)?;
            let u = parse_word(&aut, &u)?;
            let v = parse_word(&aut, &v)?;
            let outcome = equal(&aut, &u, &v);
            if outcome.equal {
                println!("equal");
                Ok(ExitCode::SUCCESS)
            } else {
                let witness = outcome
                    .witness
                    .expect("unequal outcome carries a witness")
                    .iter()
                    .map(|&b| aut.symbol_name(b).to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                println!("not equal; witness: {witness}");
                Ok(ExitCode::from(1))
            }
        }
        Command::Act { automaton, word, string, periodic, depth } => {
            let aut = load_automaton(&automaton)?;
            let w = parse_word(&aut, &word)?;
            match (string, periodic) {
                (Some(s), None) => {
                    let input = parse_symbols(&aut, &s)?;
                    let image = aut.act(&w, &input);
                    println!("{}", join_symbols(&aut, &image));
                    Ok(ExitCode::SUCCESS)
                }
                (None, Some(p)) => {
                    let input = parse_periodic(&aut, &p)?;
                    let image = autsemi::mealy::act_eventually_periodic(&aut, &w, &input);
                    match depth {
                        Some(n) => println!("{}", join_symbols(&aut, &image.unroll(n))),
                        None => println!(
                            "{} : {}",
                            join_symbols(&aut, image.prefix()),
                            join_symbols(&aut, image.period())
                        ),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                _ => Err("exactly one of --string or --periodic is required".into()),
            }
        }
        Command::Ball { automaton, radius, growth } => {
            if radius == 0 {
                return Err("radius must be at least 1".into());
            }
            let aut = load_automaton(&automaton)?;
            let ball = ball(&aut, radius);
            if growth {
                let counts: Vec<String> = ball.growth.iter().map(|c| c.to_string()).collect();
                println!("{}", counts.join(" "));
            } else {
                for w in &ball.representatives {
                    println!("{}", join_states(&aut, w));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Minimize { automaton, output } => {
            let aut = load_automaton(&automaton)?;
            let min = minimize(&aut);
            let comments: Vec<String> = aut
                .state_ids()
                .map(|q| {
                    format!(
                        "class: {} -> {}",
                        aut.state_name(q),
                        min.automaton.state_name(StateId(min.class_of[q.0]))
                    )
                })
                .collect();
            emit(output.as_deref(), &serialize_automaton(&min.automaton, &comments))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot { automaton, output } => {
            let aut = load_automaton(&automaton)?;
            emit(output.as_deref(), &export_dot(&aut))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Periodic { automaton, state, zero } => {
            let aut = load_automaton(&automaton)?;
            let q = state_id(&aut, &state)?;
            let z = state_id(&aut, &zero)?;
            let (m, n) = periodic_by_recursion(&aut, q, z).map_err(|e| e.to_string())?;
            println!("{m} {n}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Refute { automaton, valuation } => {
            let aut = load_automaton(&automaton)?;
            let map = load_map(&valuation)?;
            let valuation = parse_valuation(&aut, &map)?;
            print_refutation(&aut, refute_n0_valuation(&aut, &valuation));
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleCheck { construction } => {
            if !autsemi::checks::CONSTRUCTIONS.contains(&construction.as_str()) {
                return Err(format!(
                    "unknown construction {construction:?}; available: {}",
                    autsemi::checks::CONSTRUCTIONS.join(", ")
                ));
            }
            match autsemi::checks::oracle_check(&construction) {
                Ok(report) => {
                    println!(
                        "PASS {}: {} words, {} distinct elements",
                        report.construction, report.words_checked, report.distinct_elements
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Err(failure) => {
                    println!("FAIL {failure}");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn run_build(build: BuildCommand) -> Result<ExitCode, String> {
    let (aut, comments, output) = match build {
        BuildCommand::FreeProductFinite { left, right, e, f, output } => {
            let s = load_semigroup(&left)?;
            let t = load_semigroup(&right)?;
            let e = element_id(&s, &e)?;
            let f = element_id(&t, &f)?;
            let fp = free_product_finite(&s, &t, e, f).map_err(|e| e.to_string())?;
            (
                fp.automaton,
                vec![format!(
                    "free product of finite semigroups ({} and {} elements), idempotents {} and {}",
                    s.len(),
                    t.len(),
                    s.name(e),
                    t.name(f)
                )],
                output,
            )
        }
        BuildCommand::FreeProduct { left, right, e, f, assert_homogeneous, output } => {
            let a1 = load_automaton(&left)?;
            let a2 = load_automaton(&right)?;
            let e = state_id(&a1, &e)?;
            let f = state_id(&a2, &f)?;
            let mode = if assert_homogeneous {
                HypothesisMode::AssertedHomogeneous
            } else {
                HypothesisMode::IdempotentVerified
            };
            let fp = free_product_general(&a1, &a2, e, f, mode).map_err(|e| e.to_string())?;
            let mut comments = vec![format!(
                "free product of automaton semigroups, distinguished states {} and {}",
                a1.state_name(e),
                a2.state_name(f)
            )];
            if !fp.verified {
                comments.push("UNVERIFIED: hypothesis accepted by assertion".into());
            }
            (fp.automaton, comments, output)
        }
        BuildCommand::Wreath { base, top, identity, output } => {
            let base_aut = load_automaton(&base)?;
            let top_sg = load_semigroup(&top)?;
            let id_state = match identity {
                Some(name) => Some(state_id(&base_aut, &name)?),
                None => None,
            };
            let w = wreath_product(&base_aut, id_state, &top_sg).map_err(|e| e.to_string())?;
            let mut comments =
                vec![format!("wreath product with a finite monoid of order {}", top_sg.len())];
            if w.identity_adjoined {
                comments.push(
                    "note: no identity state was designated, so one was adjoined; this realizes the wreath product of the monoid completion".into(),
                );
            }
            (w.automaton, comments, output)
        }
        BuildCommand::Rees { base, identity, i, lambda, matrix, left_mult, output } => {
            let base_aut = load_automaton(&base)?;
            let identity = state_id(&base_aut, &identity)?;
            let matrix_map = load_map(&matrix)?;
            let mut entries = Vec::with_capacity(lambda);
            for l in 1..=lambda {
                let mut row = Vec::with_capacity(i);
                for col in 1..=i {
                    let key = [l.to_string(), col.to_string()];
                    let name = matrix_map
                        .get_single(&[&key[0], &key[1]])
                        .ok_or_else(|| format!("matrix entry {l} {col} missing"))?;
                    row.push(state_id(&base_aut, name)?);
                }
                entries.push(row);
            }
            let lm_map = load_map(&left_mult)?;
            let mut left_mult = Vec::new();
            for (key, value) in &lm_map.entries {
                let [p, x] = &key[..] else {
                    return Err("left-mult keys are \"entry state\"".into());
                };
                let [y] = &value[..] else {
                    return Err("left-mult values are a single state".into());
                };
                left_mult.push(((state_id(&base_aut, p)?, state_id(&base_aut, x)?), state_id(&base_aut, y)?));
            }
            let spec = ReesSpec { base: base_aut, identity, i_count: i, lambda_count: lambda, entries, left_mult };
            let built = rees_matrix(&spec).map_err(|e| e.to_string())?;
            (
                built.automaton,
                vec![format!("Rees matrix semigroup, {i} x {lambda} index ranges")],
                output,
            )
        }
        BuildCommand::Semilattice { part, bottom, zero, hom, bound, output } => {
            if part.len() != hom.len() {
                return Err("one --hom file per --part is required".into());
            }
            let parts: Vec<MealyAutomaton> =
                part.iter().map(|p| load_automaton(p)).collect::<Result<_, _>>()?;
            let bottom_sg = load_semigroup(&bottom)?;
            let zero = element_id(&bottom_sg, &zero)?;
            let mut homs = Vec::with_capacity(hom.len());
            for (part_aut, path) in parts.iter().zip(&hom) {
                let map = load_map(path)?;
                let mut image = Vec::with_capacity(part_aut.state_count());
                for q in part_aut.state_ids() {
                    let name = map
                        .get_single(&[part_aut.state_name(q)])
                        .ok_or_else(|| format!("hom misses state {}", part_aut.state_name(q)))?;
                    image.push(element_id(&bottom_sg, name)?);
                }
                homs.push(autsemi::algebra::GeneratorHom { image });
            }
            let spec = SemilatticeSpec { parts, bottom: bottom_sg, zero, homs, hom_bound: bound };
            let built = strong_semilattice(&spec).map_err(|e| e.to_string())?;
            (
                built.automaton,
                vec![format!("strong semilattice of {} parts over a finite bottom", part.len())],
                output,
            )
        }
        BuildCommand::IdealExt { top, ideal, zero, left, right, bound, output } => {
            let top_aut = load_automaton(&top)?;
            let ideal_sg = load_semigroup(&ideal)?;
            let zero = element_id(&ideal_sg, &zero)?;
            let left_map = load_map(&left)?;
            let right_map = load_map(&right)?;
            let mut left = vec![vec![0; ideal_sg.len()]; top_aut.state_count()];
            for q in top_aut.state_ids() {
                for s in 0..ideal_sg.len() {
                    let name = left_map
                        .get_single(&[top_aut.state_name(q), ideal_sg.name(s)])
                        .ok_or_else(|| {
                            format!(
                                "left action misses {} {}",
                                top_aut.state_name(q),
                                ideal_sg.name(s)
                            )
                        })?;
                    left[q.0][s] = element_id(&ideal_sg, name)?;
                }
            }
            let mut right = vec![vec![0; top_aut.state_count()]; ideal_sg.len()];
            for s in 0..ideal_sg.len() {
                for q in top_aut.state_ids() {
                    let name = right_map
                        .get_single(&[ideal_sg.name(s), top_aut.state_name(q)])
                        .ok_or_else(|| {
                            format!(
                                "right action misses {} {}",
                                ideal_sg.name(s),
                                top_aut.state_name(q)
                            )
                        })?;
                    right[s][q.0] = element_id(&ideal_sg, name)?;
                }
            }
            let spec = IdealExtensionSpec { top: top_aut, ideal: ideal_sg, zero, left, right, bound };
            let built = ideal_extension(&spec).map_err(|e| e.to_string())?;
            (built, vec!["ideal extension by a finite semigroup with a right zero".into()], output)
        }
        BuildCommand::Sx { base, points, action, bound, output } => {
            let base_aut = load_automaton(&base)?;
            let points: Vec<String> = points.split(',').map(|s| s.trim().to_string()).collect();
            if points.is_empty() || points.iter().any(String::is_empty) {
                return Err("points must be a nonempty comma-separated list".into());
            }
            let map = load_map(&action)?;
            let point_id = |name: &str| -> Result<usize, String> {
                points
                    .iter()
                    .position(|p| p == name)
                    .ok_or_else(|| format!("unknown point {name:?}"))
            };
            let mut table = vec![vec![0; points.len()]; base_aut.state_count()];
            for q in base_aut.state_ids() {
                for (x, point) in points.iter().enumerate() {
                    let name = map
                        .get_single(&[point, base_aut.state_name(q)])
                        .ok_or_else(|| format!("action misses {point} {}", base_aut.state_name(q)))?;
                    table[q.0][x] = point_id(name)?;
                }
            }
            let spec = ActExtensionSpec { base: base_aut, points, action: table, bound };
            let built = act_extension(&spec).map_err(|e| e.to_string())?;
            (built, vec!["extension by a finite right act".into()], output)
        }
        BuildCommand::AdjoinZero { automaton, output } => {
            let aut = load_automaton(&automaton)?;
            (adjoin_zero(&aut), vec!["zero adjoined".into()], output)
        }
        BuildCommand::AdjoinIdentity { automaton, output } => {
            let aut = load_automaton(&automaton)?;
            (adjoin_identity(&aut), vec!["identity adjoined".into()], output)
        }
        BuildCommand::Product { left, right, output } => {
            let a1 = load_automaton(&left)?;
            let a2 = load_automaton(&right)?;
            (direct_product(&a1, &a2), vec!["componentwise product".into()], output)
        }
        BuildCommand::Power { automaton, n, output } => {
            if n == 0 {
                return Err("power must be at least 1".into());
            }
            let aut = load_automaton(&automaton)?;
            (direct_power(&aut, n), vec![format!("componentwise power {n}")], output)
        }
    };
    emit(output.as_deref(), &serialize_automaton(&aut, &comments))?;
    Ok(ExitCode::SUCCESS)
}

fn print_refutation(aut: &MealyAutomaton, refutation: Refutation) {
    match refutation {
        Refutation::NoFiniteValues => println!("no-finite-values"),
        Refutation::NotHom { left, right, left_sum, right_sum, equal_in_automaton } => {
            println!(
                "not-hom: {} (sum {}) vs {} (sum {}); {} in the automaton",
                join_states(aut, &left),
                left_sum,
                join_states(aut, &right),
                right_sum,
                if equal_in_automaton { "equal" } else { "not equal" }
            );
        }
        Refutation::Periodic { word, m, n } => {
            println!("periodic: ({})^{m} = ({})^{n}", join_states(aut, &word), join_states(aut, &word));
        }
        Refutation::Inconclusive { diagnostic } => println!("inconclusive: {diagnostic}"),
    }
}

fn load_automaton(path: &Path) -> Result<MealyAutomaton, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let aut = parse_automaton(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let defects = aut.validate();
    if let Some(d) = defects.first() {
        return Err(format!("{}: {d}", path.display()));
    }
    Ok(aut)
}

fn load_semigroup(path: &Path) -> Result<FiniteSemigroup, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_semigroup(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_map(path: &Path) -> Result<MapFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_map(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_word(aut: &MealyAutomaton, text: &str) -> Result<Word, String> {
    let word = aut
        .word_from_names(text.split_whitespace())
        .map_err(|tok| format!("unknown state {tok:?}"))?;
    word.ok_or_else(|| "empty word: semigroup elements need at least one letter".into())
}

fn parse_symbols(aut: &MealyAutomaton, text: &str) -> Result<Vec<autsemi::mealy::SymbolId>, String> {
    aut.symbols_from_names(text.split_whitespace())
        .map_err(|tok| format!("unknown symbol {tok:?}"))
}

fn parse_periodic(aut: &MealyAutomaton, text: &str) -> Result<EpString, String> {
    let (prefix, period) = match text.rsplit_once(':') {
        Some((p, q)) => (p, q),
        None => ("", text),
    };
    let prefix = parse_symbols(aut, prefix)?;
    let period = parse_symbols(aut, period)?;
    EpString::new(prefix, period).ok_or_else(|| "period must be nonempty".into())
}

fn parse_valuation(aut: &MealyAutomaton, map: &MapFile) -> Result<Valuation, String> {
    let mut values = Vec::with_capacity(aut.state_count());
    for q in aut.state_ids() {
        let name = aut.state_name(q);
        let value = map
            .get_single(&[name])
            .ok_or_else(|| format!("valuation misses state {name:?}"))?;
        values.push(if value == "z!" {
            NatOrZero::Zero
        } else {
            NatOrZero::Nat(
                value
                    .parse::<u64>()
                    .map_err(|_| format!("value for {name:?} must be a natural or z!"))?,
            )
        });
    }
    Ok(Valuation { values })
}

fn state_id(aut: &MealyAutomaton, name: &str) -> Result<StateId, String> {
    aut.state_id(name).ok_or_else(|| format!("unknown state {name:?}"))
}

fn element_id(sg: &FiniteSemigroup, name: &str) -> Result<usize, String> {
    sg.element(name).ok_or_else(|| format!("unknown element {name:?}"))
}

fn join_symbols(aut: &MealyAutomaton, symbols: &[autsemi::mealy::SymbolId]) -> String {
    symbols.iter().map(|&b| aut.symbol_name(b).to_string()).collect::<Vec<_>>().join(" ")
}

fn join_states(aut: &MealyAutomaton, w: &Word) -> String {
    w.letters().iter().map(|&q| aut.state_name(q).to_string()).collect::<Vec<_>>().join(" ")
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
