use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cyclaut::construct::{multiplier_subgroup, ConstructionSpec};
use cyclaut::gf2poly::factor_xn_minus_1;
use cyclaut::manifest::{run_entries, EntryOutcome, Manifest, RunOptions};
use cyclaut::verify::{self, OrderClaim, VerifyOptions, DEFAULT_MAX_N, DEFAULT_SEED};
use cyclaut::{code::DEFAULT_MAX_DIM, CyclicCode, Error, Gf2Poly, PermGroup};

const DEFAULT_MANIFEST: &str = include_str!("../manifests/orders.json");
const EXTENDED_MANIFEST: &str = include_str!("../manifests/orders_extended.json");
const MANIFEST_ENV: &str = "CYCLAUT_MANIFEST";

#[derive(Parser)]
#[command(
    name = "cyclaut",
    version,
    about = "Automorphism groups of binary cyclic codes"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Global {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for negative sampling when an entry does not fix one.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Manifest entries verified concurrently.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    /// Largest length for exhaustive enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Factor x^n - 1 into irreducibles over GF(2).
    Factor { n: usize },
    /// Parameters, generator rows and weight distribution of C(n, g).
    CodeInfo { n: usize, generator: String },
    /// Enumerate the automorphism group exhaustively.
    AutBrute {
        n: usize,
        generator: String,
        /// Print a generating set of the group.
        #[arg(long)]
        emit_gens: bool,
    },
    /// Build the group generated by constructions and report its order.
    AutConstruct {
        n: usize,
        generator: String,
        /// JSON list of constructions, or @path to a file holding one.
        #[arg(long)]
        construction: String,
        /// Claimed order to verify; exit status 1 on mismatch.
        #[arg(long)]
        expected: Option<String>,
        /// Only require the group order to divide the claimed order.
        #[arg(long, requires = "expected")]
        subgroup: bool,
        /// Random permutations outside the group to test for escapes.
        #[arg(long)]
        trials: Option<usize>,
        /// Print the individual generators.
        #[arg(long)]
        emit_gens: bool,
    },
    /// Multipliers i -> a*i preserving C(n, g) and the order of shift and multipliers.
    Multipliers { n: usize, generator: String },
    /// Verify every entry of a manifest.
    VerifyTable {
        /// Manifest path; defaults to $CYCLAUT_MANIFEST, then the built-in table.
        manifest: Option<PathBuf>,
        /// Only entries whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// Use the built-in manifest of slow rows (lengths 961 and 1922).
        #[arg(long, conflicts_with = "manifest")]
        extended: bool,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Claim,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claim) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let g = cli.global;
    match cli.command {
        Command::Factor { n } => factor(g, n),
        Command::CodeInfo { n, generator } => code_info(g, n, &generator),
        Command::AutBrute {
            n,
            generator,
            emit_gens,
        } => aut_brute(g, n, &generator, emit_gens),
        Command::AutConstruct {
            n,
            generator,
            construction,
            expected,
            subgroup,
            trials,
            emit_gens,
        } => {
            let specs = load_constructions(&construction)?;
            let code = build_code(n, &generator)?;
            let claim = if subgroup {
                OrderClaim::Subgroup
            } else {
                OrderClaim::Exact
            };
            aut_construct(
                g,
                &code,
                &specs,
                expected.as_deref(),
                claim,
                trials,
                emit_gens,
            )
        }
        Command::Multipliers { n, generator } => multipliers(g, n, &generator),
        Command::VerifyTable {
            manifest,
            filter,
            extended,
        } => verify_table(g, manifest, filter.as_deref(), extended),
    }
}

fn build_code(n: usize, generator: &str) -> Result<CyclicCode, Error> {
    CyclicCode::new(n, Gf2Poly::parse_product(generator)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn factor(g: Global, n: usize) -> Outcome {
    let factors = factor_xn_minus_1(n)?;
    if g.json {
        let list: Vec<Value> = factors
            .iter()
            .map(|f| json!({"factor": f.poly.to_string(), "multiplicity": f.multiplicity}))
            .collect();
        print_json(&json!({"n": n, "factors": list}));
    } else {
        for f in &factors {
            println!("({})^{}", f.poly, f.multiplicity);
        }
    }
    Ok(())
}

fn code_info(g: Global, n: usize, generator: &str) -> Outcome {
    let code = build_code(n, generator)?;
    let k = code.dimension();
    let rows: Vec<String> = code
        .generator_rows()
        .iter()
        .map(|r| r.to_string())
        .collect();
    let dist = (k <= DEFAULT_MAX_DIM)
        .then(|| code.weight_distribution(DEFAULT_MAX_DIM))
        .transpose()?;
    if g.json {
        let dist = dist.map(|d| {
            d.into_iter()
                .map(|(w, c)| (w.to_string(), json!(c)))
                .collect::<serde_json::Map<_, _>>()
        });
        print_json(&json!({
            "n": n,
            "k": k,
            "generator": code.generator().to_string(),
            "check_polynomial": code.check_polynomial().to_string(),
            "generator_rows": rows,
            "weight_distribution": dist,
        }));
        return Ok(());
    }
    println!("[{n},{k}]");
    println!("generator: {}", code.generator());
    println!("check polynomial: {}", code.check_polynomial());
    println!("generator rows:");
    for r in &rows {
        println!("  {r}");
    }
    match dist {
        Some(d) => {
            println!("weight distribution:");
            for (w, c) in d {
                println!("  {w}: {c}");
            }
        }
        None => println!("weight distribution: skipped (dimension {k} > {DEFAULT_MAX_DIM})"),
    }
    Ok(())
}

fn aut_brute(g: Global, n: usize, generator: &str, emit_gens: bool) -> Outcome {
    let code = build_code(n, generator)?;
    let (all, group) = verify::brute_force_group(&code, g.max_n)?;
    let gens: Vec<String> = group.generators().iter().map(|p| p.to_string()).collect();
    if g.json {
        let mut v = json!({"n": n, "generator": code.generator().to_string(), "order": all.len().to_string()});
        if emit_gens {
            v["generators"] = json!(gens);
        }
        print_json(&v);
    } else {
        println!("{}", all.len());
        if emit_gens {
            for s in gens {
                println!("{s}");
            }
        }
    }
    Ok(())
}

fn load_constructions(arg: &str) -> Result<Vec<ConstructionSpec>, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("bad construction: {e}")))
}

fn aut_construct(
    g: Global,
    code: &CyclicCode,
    specs: &[ConstructionSpec],
    expected: Option<&str>,
    claim: OrderClaim,
    trials: Option<usize>,
    emit_gens: bool,
) -> Outcome {
    let options = VerifyOptions {
        claim,
        sampling: trials.map(|t| (t, g.seed)),
        max_n: g.max_n,
    };
    let mut gens = Vec::new();
    for spec in specs {
        gens.extend(spec.instantiate(code.length(), g.max_n)?);
    }
    // Without a claim, the computed order itself is compared, which always passes unless a
    // generator fails.
    let order_text = match expected {
        Some(e) => e.to_string(),
        None => {
            let perms: Vec<_> = gens.iter().map(|x| x.perm.clone()).collect();
            PermGroup::new(code.length(), &perms)?.order().to_string()
        }
    };
    let report = verify::verify_generators(code, &gens, &order_text, "construct", &options)?;
    if g.json {
        let mut v = json!({
            "n": code.length(),
            "generator": code.generator().to_string(),
            "expected_order": expected,
            "computed_order": report.computed_order.as_ref().map(|o| o.to_string()),
            "generators": gens.len(),
            "pass": report.pass,
            "seed": g.seed,
            "summary": report.summary(),
        });
        if emit_gens {
            v["generator_list"] = json!(gens.iter().map(|x| x.to_string()).collect::<Vec<_>>());
        }
        print_json(&v);
    } else {
        if emit_gens {
            for x in &gens {
                println!("{x}");
            }
        }
        println!("{report}");
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Claim)
    }
}

fn multipliers(g: Global, n: usize, generator: &str) -> Outcome {
    let code = build_code(n, generator)?;
    let units = multiplier_subgroup(&code);
    let order = n * units.len();
    if g.json {
        print_json(&json!({
            "n": n,
            "generator": code.generator().to_string(),
            "units": units,
            "order": order.to_string(),
        }));
    } else {
        let list: Vec<String> = units.iter().map(|u| u.to_string()).collect();
        println!("units: {{{}}}", list.join(","));
        println!("count: {}", units.len());
        println!("order: {order}");
    }
    Ok(())
}

fn verify_table(g: Global, path: Option<PathBuf>, filter: Option<&str>, extended: bool) -> Outcome {
    let path = path.or_else(|| std::env::var_os(MANIFEST_ENV).map(PathBuf::from));
    let text = match (&path, extended) {
        (_, true) => EXTENDED_MANIFEST.to_string(),
        (Some(p), false) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", p.display())))?,
        (None, false) => DEFAULT_MANIFEST.to_string(),
    };
    let manifest = Manifest::from_json(&text)?;
    let entries = manifest.filtered(filter);
    let options = RunOptions {
        seed: g.seed,
        max_n: g.max_n,
        jobs: g.jobs as usize,
    };
    let outcomes = run_entries(&entries, options)?;
    if g.json {
        print_records(&outcomes);
    } else {
        print_table(&outcomes);
    }
    if outcomes.iter().all(|o| o.report.pass) {
        Ok(())
    } else {
        Err(Failure::Claim)
    }
}

/// A JSON array holding one record per line.
fn print_records(outcomes: &[EntryOutcome]) {
    if outcomes.is_empty() {
        println!("[]");
        return;
    }
    println!("[");
    for (i, o) in outcomes.iter().enumerate() {
        let sep = if i + 1 < outcomes.len() { "," } else { "" };
        println!("{}{sep}", serde_json::to_string(&o.record()).expect("json"));
    }
    println!("]");
}

fn print_table(outcomes: &[EntryOutcome]) {
    for o in outcomes {
        let r = &o.report;
        let computed = r
            .computed_order
            .as_ref()
            .map_or("-".to_string(), |c| c.to_string());
        println!(
            "{} {:<28} n={:<4} method={:<10} expected={} computed={} seed={} {}ms",
            if r.pass { "PASS" } else { "FAIL" },
            o.name,
            r.length,
            r.method,
            r.expected_order,
            computed,
            o.seed,
            r.elapsed.as_millis()
        );
        if !r.pass {
            println!("     {}", r.summary());
        }
        for note in &r.notes {
            println!("     note: {note}");
        }
    }
    let passed = outcomes.iter().filter(|o| o.report.pass).count();
    println!("{passed}/{} entries passed", outcomes.len());
}
