//! Command-line front end for the exact Ext toolkit: Ext tables between
//! Weyl and Schur functors, stable cohomology dimensions, the
//! dimension-counting power series, resolution shapes, and cross-checking
//! verification suites.
//!
//! Exit codes: 0 success, 1 verification failure or internal inconsistency,
//! 2 usage or parse error, 3 unsupported query, 4 resource guard.  All
//! output is deterministic: identical queries print identical bytes.
//! `--json` switches a command to a single JSON document on stdout; the
//! verify suites report progress as lines prefixed `# ` (on stderr in JSON
//! mode) so data rows stay machine-parseable.

mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use weylext::combinat::Partition;
use weylext::exactlin::RingSelector;
use weylext::polyfun::FunctorExpr;
use weylext::resolutions::{
    schur_resolution_shape_with_guard, weyl_resolution_shape_with_guard, Flavor, ResolutionShape,
    RESOLUTION_SIZE_GUARD,
};
use weylext::series::{e_series, SeriesMethod, DEFAULT_T_MAX, DEFAULT_U_MAX};
use weylext::speccomplex::{
    ext_from_hook_with_guard, ext_schur_query_with_guard, stable_coh_dims_with_guard, ExtTable,
    COMPLEX_DEGREE_GUARD,
};
use weylext::{Error, Result};

#[derive(Parser)]
#[command(
    name = "weylext",
    version,
    about = "Exact Ext computations for Weyl and Schur functors",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ext groups out of a hook Weyl functor, or between two Schur functors
    Ext(ExtArgs),
    /// Stable cohomology dimensions of a Schur functor over a prime field
    StableCoh(StableCohArgs),
    /// The two-variable series whose coefficients count Ext dimensions
    Series(SeriesArgs),
    /// The summand shape of the canonical finite resolution of a partition
    Resolution(ResolutionArgs),
    /// Cross-checking suites; exits 0 only when every check passes
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingChoice {
    /// Exact integer coefficients (groups come out as rank plus torsion)
    Int,
    /// A prime field; give the characteristic with --p
    Gf,
}

#[derive(Args)]
struct ExtArgs {
    /// Coefficient ring
    #[arg(long, value_enum, default_value = "int")]
    ring: RingChoice,
    /// Field characteristic (with --ring gf)
    #[arg(long, value_name = "PRIME")]
    p: Option<u64>,
    /// Hook partition; Ext is taken out of its Weyl functor
    #[arg(long, value_name = "PARTITION", requires = "target_weyl", conflicts_with = "schur_pair")]
    source: Option<String>,
    /// Partition whose Weyl functor the Ext groups land in
    #[arg(long, value_name = "PARTITION", requires = "source", conflicts_with = "schur_pair")]
    target_weyl: Option<String>,
    /// Two partitions: Ext between their Schur functors
    #[arg(long, num_args = 2, value_names = ["LAMBDA", "MU"])]
    schur_pair: Option<Vec<String>>,
    /// Raise the complex degree guard (default 8)
    #[arg(long, value_name = "D")]
    unsafe_degree: Option<usize>,
    /// Emit one JSON document instead of the table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct StableCohArgs {
    /// Coefficient ring; only gf is meaningful here
    #[arg(long, value_enum, default_value = "gf")]
    ring: RingChoice,
    /// Field characteristic
    #[arg(long, value_name = "PRIME")]
    p: Option<u64>,
    /// Partition of the Schur functor
    #[arg(long, value_name = "PARTITION")]
    mu: String,
    /// Raise the complex degree guard (default 8)
    #[arg(long, value_name = "D")]
    unsafe_degree: Option<usize>,
    /// Emit one JSON document instead of the table
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodChoice {
    /// Expand the closed product formula
    Closed,
    /// Unfold the digit recursion (memoized)
    Recursive,
}

#[derive(Args)]
struct SeriesArgs {
    /// Field characteristic
    #[arg(long, value_name = "PRIME")]
    p: u64,
    /// Series index
    #[arg(long)]
    k: u64,
    /// Highest retained power of t
    #[arg(long, default_value_t = DEFAULT_T_MAX)]
    tmax: usize,
    /// Highest retained power of u
    #[arg(long, default_value_t = DEFAULT_U_MAX)]
    umax: usize,
    /// Evaluation strategy (both agree; recursive is the cross-check)
    #[arg(long, value_enum, default_value = "closed")]
    method: MethodChoice,
    /// Emit one JSON document instead of the expansion
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorChoice {
    /// Resolve the Weyl functor by products of divided powers
    Divided,
    /// Resolve the Schur functor by products of exterior powers
    Exterior,
}

#[derive(Args)]
struct ResolutionArgs {
    /// Partition to resolve
    #[arg(long, value_name = "PARTITION")]
    mu: String,
    /// Which side to resolve
    #[arg(long, value_enum, default_value = "divided")]
    flavor: FlavorChoice,
    /// Raise the partition size guard (default 12)
    #[arg(long, value_name = "D")]
    unsafe_degree: Option<usize>,
    /// Emit one JSON document instead of the table
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteChoice {
    Invariance,
    Duality,
    Periodicity,
    Twisted,
    Blocks,
    Simplicial,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(long, value_enum)]
    suite: SuiteChoice,
    /// Sweep bound for the suites
    #[arg(long, default_value_t = 5)]
    max_degree: usize,
    /// Field characteristic used alongside the integers
    #[arg(long, value_name = "PRIME", default_value_t = 2)]
    p: u64,
    /// Emit one JSON report instead of the summary lines
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Dispatch; `Ok(true)` means a verification suite reported failures.
fn run(command: &Command) -> Result<bool> {
    match command {
        Command::Ext(args) => cmd_ext(args).map(|()| false),
        Command::StableCoh(args) => cmd_stable_coh(args).map(|()| false),
        Command::Series(args) => cmd_series(args).map(|()| false),
        Command::Resolution(args) => cmd_resolution(args).map(|()| false),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// The documented exit code for an error: 2 for bad input, 3 for queries no
/// rewriting rule supports, 4 for guard rejections, 1 for anything that
/// signals an internal inconsistency.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::ShapeMismatch(_)
        | Error::IndexOutOfRange(_)
        | Error::UnsupportedRing(_) => 2,
        Error::NoHookRoute(_) | Error::FormalAtom(_) => 3,
        Error::DegreeGuard { .. } => 4,
        Error::MalformedComplex(_) | Error::Internal(_) => 1,
    }
}

fn resolve_ring(ring: RingChoice, p: Option<u64>) -> Result<RingSelector> {
    match (ring, p) {
        (RingChoice::Int, None) => Ok(RingSelector::Integers),
        (RingChoice::Int, Some(_)) => {
            Err(Error::Parse("--p only applies with --ring gf".into()))
        }
        (RingChoice::Gf, Some(p)) => RingSelector::prime_field(p),
        (RingChoice::Gf, None) => Err(Error::Parse("--ring gf needs --p".into())),
    }
}

fn cmd_ext(args: &ExtArgs) -> Result<()> {
    let ring = resolve_ring(args.ring, args.p)?;
    let guard = args.unsafe_degree.unwrap_or(COMPLEX_DEGREE_GUARD);
    let table = match (&args.source, &args.schur_pair) {
        (Some(source), None) => {
            let mu: Partition = source.parse()?;
            let target = args.target_weyl.as_deref().unwrap_or_default();
            let lambda: Partition = target.parse()?;
            ext_from_hook_with_guard(&mu, &FunctorExpr::weyl(lambda), ring, guard)?
        }
        (None, Some(pair)) => {
            let lambda: Partition = pair[0].parse()?;
            let mu: Partition = pair[1].parse()?;
            ext_schur_query_with_guard(&lambda, &mu, ring, guard)?
        }
        _ => {
            return Err(Error::Parse(
                "give either --source with --target-weyl, or --schur-pair".into(),
            ))
        }
    };
    if args.json {
        println!("{}", table.to_json());
    } else {
        print!("{}", render_ext(&table));
    }
    Ok(())
}

/// Rows are `j=<degree>: <value>`: a dimension over a prime field, the group
/// in rank-plus-torsion form over the integers.
fn render_ext(table: &ExtTable) -> String {
    let mut out = format!("Ext({}, {}) over {}\n", table.source, table.target, table.ring);
    for line in &table.rewrite_chain {
        out.push_str(&format!("  {line}\n"));
    }
    if table.entries.is_empty() {
        out.push_str("  all groups vanish\n");
    }
    for (j, g) in &table.entries {
        match table.ring {
            RingSelector::Integers => out.push_str(&format!("  j={j}: {g}\n")),
            RingSelector::PrimeField(_) => out.push_str(&format!("  j={j}: {}\n", g.rank())),
        }
    }
    out
}

fn cmd_stable_coh(args: &StableCohArgs) -> Result<()> {
    if args.ring == RingChoice::Int {
        return Err(Error::UnsupportedRing(
            "stable cohomology dimensions are a prime-field identity; use --ring gf".into(),
        ));
    }
    let ring = resolve_ring(args.ring, args.p)?;
    let p = ring.prime().expect("gf resolution always carries a prime");
    let mu: Partition = args.mu.parse()?;
    let guard = args.unsafe_degree.unwrap_or(COMPLEX_DEGREE_GUARD);
    let table = stable_coh_dims_with_guard(&mu, p, guard)?;
    if args.json {
        let dims: serde_json::Map<String, serde_json::Value> =
            table.iter().map(|(j, d)| (j.to_string(), (*d).into())).collect();
        println!(
            "{}",
            serde_json::json!({ "mu": mu.to_string(), "p": p, "dims": dims })
        );
    } else {
        println!("stable cohomology of Schur({mu}) over F_{p}");
        let mut any = false;
        for (j, dim) in &table {
            if *dim > 0 {
                println!("  j={j}: {dim}");
                any = true;
            }
        }
        if !any {
            println!("  all groups vanish");
        }
    }
    Ok(())
}

fn cmd_series(args: &SeriesArgs) -> Result<()> {
    RingSelector::prime_field(args.p)?;
    let (method, method_name) = match args.method {
        MethodChoice::Closed => (SeriesMethod::Closed, "closed"),
        MethodChoice::Recursive => (SeriesMethod::Recursive, "recursive"),
    };
    let series = e_series(args.k, args.p, args.tmax, args.umax, method);
    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "k": args.k,
                "p": args.p,
                "method": method_name,
                "series": series.to_json(),
            })
        );
    } else {
        println!(
            "E_{}(t,u) at p={} on the window t<={}, u<={}",
            args.k, args.p, args.tmax, args.umax
        );
        println!("{series}");
    }
    Ok(())
}

fn cmd_resolution(args: &ResolutionArgs) -> Result<()> {
    let mu: Partition = args.mu.parse()?;
    let guard = args.unsafe_degree.unwrap_or(RESOLUTION_SIZE_GUARD);
    let shape = match args.flavor {
        FlavorChoice::Divided => weyl_resolution_shape_with_guard(&mu, guard)?,
        FlavorChoice::Exterior => schur_resolution_shape_with_guard(&mu, guard)?,
    };
    if args.json {
        println!("{}", shape.to_json());
    } else {
        print!("{}", render_resolution(&shape));
    }
    Ok(())
}

fn render_resolution(shape: &ResolutionShape) -> String {
    let mut out = match shape.flavor {
        Flavor::Divided => format!(
            "resolution of W({}) by products of divided powers\n",
            shape.target
        ),
        Flavor::Exterior => format!(
            "resolution of Schur({}) by products of exterior powers\n",
            shape.target
        ),
    };
    for (degree, bag) in shape.terms.iter().enumerate() {
        if bag.is_empty() {
            continue;
        }
        let rendered: Vec<String> = bag.iter().map(|l| format!("({l})")).collect();
        out.push_str(&format!("  {degree}: {}\n", rendered.join(" ")));
    }
    out.push_str(&format!("count: {}\n", shape.summand_count()));
    out.push_str(&format!("length: {}\n", shape.length()));
    out
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    RingSelector::prime_field(args.p)?;
    let suites: Vec<verify::Suite> = match args.suite {
        SuiteChoice::All => verify::Suite::ALL.to_vec(),
        SuiteChoice::Invariance => vec![verify::Suite::Invariance],
        SuiteChoice::Duality => vec![verify::Suite::Duality],
        SuiteChoice::Periodicity => vec![verify::Suite::Periodicity],
        SuiteChoice::Twisted => vec![verify::Suite::Twisted],
        SuiteChoice::Blocks => vec![verify::Suite::Blocks],
        SuiteChoice::Simplicial => vec![verify::Suite::Simplicial],
    };

    let json = args.json;
    let mut any_failure = false;
    let mut suite_docs = Vec::new();
    for suite in suites {
        let mut progress = |line: &str| {
            if json {
                eprintln!("# {line}");
            } else {
                println!("# {line}");
            }
        };
        let reports = verify::run(suite, args.max_degree, args.p, &mut progress)?;
        let checks: usize = reports.iter().map(|r| r.passes.len() + r.failures.len()).sum();
        let failures: Vec<String> = reports
            .iter()
            .flat_map(|r| r.failures.iter().map(move |f| format!("{} - {f}", r.label)))
            .collect();
        if json {
            suite_docs.push(serde_json::json!({
                "name": suite.name(),
                "checks": checks,
                "failures": failures,
            }));
        } else if failures.is_empty() {
            println!("suite {}: ok ({checks} checks)", suite.name());
        } else {
            println!(
                "suite {}: FAILED ({} of {checks} checks)",
                suite.name(),
                failures.len()
            );
            for f in &failures {
                println!("  FAIL: {f}");
            }
        }
        any_failure |= !failures.is_empty();
    }

    if json {
        println!(
            "{}",
            serde_json::json!({
                "max_degree": args.max_degree,
                "p": args.p,
                "suites": suite_docs,
                "ok": !any_failure,
            })
        );
    } else if any_failure {
        println!("verify: FAILED");
    } else {
        println!("verify: ok");
    }
    Ok(any_failure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;
    use weylext::exactlin::HomologyGroup;

    #[test]
    fn exit_codes_follow_the_documented_map() {
        assert_eq!(exit_code(&Error::Parse("x".into())), 2);
        assert_eq!(exit_code(&Error::ShapeMismatch("x".into())), 2);
        assert_eq!(exit_code(&Error::IndexOutOfRange("x".into())), 2);
        assert_eq!(exit_code(&Error::UnsupportedRing("x".into())), 2);
        assert_eq!(exit_code(&Error::NoHookRoute("x".into())), 3);
        assert_eq!(exit_code(&Error::FormalAtom("x".into())), 3);
        assert_eq!(exit_code(&Error::DegreeGuard { requested: 9, limit: 8 }), 4);
        assert_eq!(exit_code(&Error::Internal("x".into())), 1);
        assert_eq!(exit_code(&Error::MalformedComplex("x".into())), 1);
    }

    #[test]
    fn ring_resolution_enforces_the_pairing_rules() {
        assert_eq!(resolve_ring(RingChoice::Int, None).unwrap(), RingSelector::Integers);
        assert_eq!(
            resolve_ring(RingChoice::Gf, Some(3)).unwrap(),
            RingSelector::PrimeField(3)
        );
        assert!(matches!(resolve_ring(RingChoice::Int, Some(2)), Err(Error::Parse(_))));
        assert!(matches!(resolve_ring(RingChoice::Gf, None), Err(Error::Parse(_))));
        assert!(matches!(
            resolve_ring(RingChoice::Gf, Some(4)),
            Err(Error::UnsupportedRing(_))
        ));
    }

    #[test]
    fn ext_rendering_shows_dimensions_over_fields_and_groups_over_z() {
        let field = ExtTable {
            ring: RingSelector::PrimeField(2),
            source: "W(2,1,1)".into(),
            target: "W(2,2)".into(),
            rewrite_chain: vec![],
            entries: BTreeMap::from([
                (0, HomologyGroup::ModP { p: 2, dimension: 1 }),
                (1, HomologyGroup::ModP { p: 2, dimension: 1 }),
            ]),
        };
        assert_eq!(
            render_ext(&field),
            "Ext(W(2,1,1), W(2,2)) over F_2\n  j=0: 1\n  j=1: 1\n"
        );
        let integral = ExtTable {
            ring: RingSelector::Integers,
            source: "W(1,1)".into(),
            target: "D2".into(),
            rewrite_chain: vec![],
            entries: BTreeMap::from([(
                1,
                HomologyGroup::Integral { free_rank: 0, invariant_factors: vec![2u32.into()] },
            )]),
        };
        assert_eq!(render_ext(&integral), "Ext(W(1,1), D2) over Z\n  j=1: Z/2\n");
        let empty = ExtTable {
            ring: RingSelector::Integers,
            source: "W(2)".into(),
            target: "L2".into(),
            rewrite_chain: vec![],
            entries: BTreeMap::new(),
        };
        assert!(render_ext(&empty).contains("all groups vanish"));
    }
}
