//! Command-line front end for the exact E-polynomial pipeline.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
//! invariant breach (an exactness assumption of the pipeline failed, which
//! no input should be able to trigger).

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use epoly::exactpoly::IntPoly;
use epoly::{heckedeg, oracle, strata, typesum, BigInt};

#[derive(Parser)]
#[command(
    name = "epoly",
    version,
    about = "Exact E-polynomials of parabolic Sp(2n)-character varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the E-polynomial E(n, g) with its metadata block.
    Total(CommonArgs),
    /// List every principal-series type with its character degree, Hecke
    /// factor and constant.
    Types(TypesArgs),
    /// One row per sign subgroup with its kernel partition and stratum
    /// E-polynomial, plus the verified total.
    Strata(CommonArgs),
    /// Run a verification suite; exits 1 if any identity fails.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct CommonArgs {
    /// Rank n of Sp(2n).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Genus of the surface.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    g: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TypesArgs {
    /// Rank n of Sp(2n).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Generic-degree identities d(1) = dim and sum d * dim = P.
    Hecke,
    /// Cyclotomic recomputation of the type constants.
    Ctau,
    /// Brute-force SL(2, F_q) count at an odd-order twist vs the formula.
    Brute,
    /// Brute-force count at the order-four twist vs its quasi-polynomial.
    Quasi,
    /// Frobenius character sums vs brute-force counts on S_3.
    Frobenius,
    /// Stratum E-polynomials sum to the total.
    Strata,
    /// Reversal of each Hecke factor lands on the dual type.
    Duality,
    /// Everything above with the given bounds.
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which identity suite to run.
    #[arg(value_enum)]
    suite: Suite,
    /// Rank bound for ctau / strata / duality / all.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Genus for brute / quasi / strata.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    g: u64,
    /// Twist order for ctau / brute (defaults: standard per-rank twists; 3).
    #[arg(long)]
    m: Option<u64>,
    /// Comma-separated twist exponents for ctau.
    #[arg(long, value_delimiter = ',')]
    exponents: Option<Vec<u64>>,
    /// Field size for ctau / brute / quasi.
    #[arg(long)]
    q: Option<u64>,
    /// Largest reflection-group rank for the hecke suite.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=8))]
    max_rank: u64,
}

fn main() -> ExitCode {
    if let Err(msg) = configure_threads() {
        eprintln!("{}", msg);
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    match panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(err)) => {
            eprintln!("internal invariant breach: {}", err);
            ExitCode::from(3)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            eprintln!("internal invariant breach: {}", msg);
            ExitCode::from(3)
        }
    }
}

/// Honors EPOLY_THREADS (0 = auto) before any rayon pool spins up.
fn configure_threads() -> Result<(), String> {
    match std::env::var("EPOLY_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => match raw.parse::<usize>() {
            Ok(0) => Ok(()),
            Ok(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global()
                .map_err(|e| format!("EPOLY_THREADS: {}", e)),
            Err(_) => Err(format!("EPOLY_THREADS must be an integer, got {:?}", raw)),
        },
    }
}

fn run(cli: Cli) -> epoly::Result<u8> {
    match cli.command {
        Command::Total(args) => cmd_total(&args),
        Command::Types(args) => cmd_types(&args),
        Command::Strata(args) => cmd_strata(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn usage(msg: &str) -> epoly::Result<u8> {
    eprintln!("usage error: {}", msg);
    Ok(2)
}

fn cmd_total(args: &CommonArgs) -> epoly::Result<u8> {
    let n = args.n as usize;
    let e = typesum::e_total(n, args.g)?;
    let degree = e.deg().expect("E-polynomials are nonzero");
    let leading = e.leading_coeff();
    let palindromic = e.is_palindromic(degree);
    let euler = e.eval(&BigInt::from(1));
    match args.format {
        Format::Json => {
            let v = json!({
                "n": n,
                "g": args.g,
                "poly": e.to_json(),
                "degree": degree,
                "leading_coefficient": leading.to_string(),
                "palindromic": palindromic,
                "euler": euler.to_string(),
            });
            println!("{}", v);
        }
        Format::Text | Format::Latex => {
            if args.format == Format::Latex {
                println!("{}", e.to_latex());
            } else {
                println!("{}", e);
            }
            println!("degree: {}", degree);
            println!("leading coefficient: {}", leading);
            println!("palindromic: {}", palindromic);
            println!("euler characteristic E(1): {}", euler);
        }
    }
    Ok(0)
}

fn cmd_types(args: &TypesArgs) -> epoly::Result<u8> {
    let n = args.n as usize;
    let types = typesum::enumerate_types(n);
    let mut rows = Vec::with_capacity(types.len());
    let mut c_sum = BigInt::from(0);
    for tau in &types {
        let chi = typesum::chi_degree(tau)?;
        let h = typesum::h_tau(tau)?;
        let c = typesum::c_tau(tau)?;
        c_sum += &c;
        rows.push((tau, chi, h, c));
    }
    match args.format {
        Format::Text => {
            for (i, (tau, chi, h, c)) in rows.iter().enumerate() {
                println!("{:>3}  {}  chi={}  H={}  C={}", i, tau, chi, h, c);
            }
            println!("types: {}  sum of C: {}", rows.len(), c_sum);
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .enumerate()
                .map(|(i, (tau, chi, h, c))| {
                    json!({
                        "index": i,
                        "type": tau.to_string(),
                        "lambda": tau.lambda,
                        "beta_a": tau.beta_a,
                        "alpha_one": tau.alpha_one,
                        "alpha_eps": tau.alpha_eps,
                        "chi": chi.to_json(),
                        "h": h.to_json(),
                        "c": c.to_string(),
                    })
                })
                .collect();
            println!("{}", json!({ "n": n, "types": items, "c_sum": c_sum.to_string() }));
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{rllll}}");
            println!("index & type & $\\chi(1)$ & $H$ & $C$ \\\\");
            for (i, (tau, chi, h, c)) in rows.iter().enumerate() {
                println!(
                    "{} & {} & ${}$ & ${}$ & ${}$ \\\\",
                    i,
                    tau,
                    chi,
                    h.to_latex(),
                    c
                );
            }
            println!("\\end{{tabular}}");
            println!("% types: {}  sum of C: {}", rows.len(), c_sum);
        }
    }
    Ok(0)
}

/// Renders a sign vector with coordinate i at string position i.
fn mask_string(mask: u32, n: usize) -> String {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn cmd_strata(args: &CommonArgs) -> epoly::Result<u8> {
    let n = args.n as usize;
    let subgroups = strata::sign_subgroups(n);
    let mut rows = Vec::with_capacity(subgroups.len());
    let mut sum = IntPoly::zero();
    for subgroup in &subgroups {
        let kernel = strata::kernel_partition(subgroup);
        let e = strata::e_stratum(subgroup, args.g)?;
        sum = &sum + &e;
        let basis: Vec<String> = subgroup
            .basis()
            .iter()
            .map(|&m| mask_string(m, n))
            .collect();
        let blocks: Vec<String> = kernel
            .blocks()
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        rows.push((basis.join(","), blocks.join(""), e));
    }
    let total = typesum::e_total(n, args.g)?;
    if sum != total {
        eprintln!("internal invariant breach: strata sum differs from the total");
        return Ok(3);
    }
    match args.format {
        Format::Text => {
            for (basis, kernel, e) in &rows {
                println!("subgroup=<{}>  kernel={}  E={}", basis, kernel, e);
            }
            println!("total  E={}", total);
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(basis, kernel, e)| {
                    json!({ "subgroup": basis, "kernel": kernel, "e": e.to_json() })
                })
                .collect();
            println!(
                "{}",
                json!({ "n": n, "g": args.g, "strata": items, "total": total.to_json() })
            );
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{lll}}");
            println!("subgroup & kernel & $E$ \\\\");
            for (basis, kernel, e) in &rows {
                println!("$\\langle {}\\rangle$ & {} & ${}$ \\\\", basis, kernel, e.to_latex());
            }
            println!("total & & ${}$ \\\\", total.to_latex());
            println!("\\end{{tabular}}");
        }
    }
    Ok(0)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn report(ok: bool, detail: &str) -> bool {
    println!("{} ({})", if ok { "PASS" } else { "FAIL" }, detail);
    ok
}

fn verify_hecke(max_rank: usize) -> epoly::Result<bool> {
    let mut all = true;
    let mut a = true;
    for m in 0..=max_rank {
        a &= heckedeg::degrees_consistent_a(m)?;
    }
    all &= report(
        a,
        &format!("type A, m <= {}: d(1) = dim and sum d dim = P", max_rank),
    );
    let mut b = true;
    for m in 0..=max_rank {
        b &= heckedeg::degrees_consistent_b(m)?;
    }
    all &= report(
        b,
        &format!("type B, m <= {}: d(1) = dim and sum d dim = P", max_rank),
    );
    let mut d = true;
    for m in 2..=max_rank.max(2) {
        d &= heckedeg::degrees_consistent_d(m)?;
    }
    all &= report(
        d,
        &format!("type D, m in 2..={}: d(1) = dim and sum d dim = P", max_rank.max(2)),
    );
    Ok(all)
}

fn verify_ctau(n: usize, specs: &[oracle::XiSpec]) -> epoly::Result<bool> {
    let count = typesum::enumerate_types(n).len();
    let mut all = true;
    for spec in specs {
        let ok = oracle::ctau_matches(n, spec)?;
        all &= report(
            ok,
            &format!(
                "rank {}: {} type constants match the cyclotomic sum at order {} over F_{}",
                n, count, spec.m, spec.q
            ),
        );
    }
    Ok(all)
}

fn verify_brute(q: u64, m: u64, g: u64) -> epoly::Result<bool> {
    let (brute, predicted) = oracle::sl2_generic_count(q, m, g)?;
    let ok = brute == predicted;
    Ok(report(ok, &format!("{} = {}", brute, predicted)))
}

fn verify_quasi(q: u64, g: u64) -> epoly::Result<bool> {
    let (brute, predicted) = oracle::sl2_quasi_count(q, g)?;
    let ok = brute == predicted;
    Ok(report(ok, &format!("{} = {}", brute, predicted)))
}

fn verify_frobenius() -> epoly::Result<bool> {
    use epoly::oracle::FiniteGroup;
    let group = oracle::s3_group();
    let table = oracle::s3_character_table();
    let class_of = oracle::s3_class_of();
    let mut ok = true;
    for genus in 1..=2u64 {
        for z in 0..group.size() {
            ok &= oracle::commutator_count(&group, z, genus)
                == oracle::frobenius_count(&table, class_of[z], genus)?;
        }
    }
    Ok(report(
        ok,
        "S_3 Frobenius counts equal brute force for every element, g = 1, 2",
    ))
}

fn verify_strata(n: usize, g: u64) -> epoly::Result<bool> {
    let ok = strata::strata_sum_matches_total(n, g)?;
    let count = strata::sign_subgroups(n).len();
    Ok(report(
        ok,
        &format!("{} strata at rank {} sum to E({}, {})", count, n, n, g),
    ))
}

fn verify_duality(n: usize) -> epoly::Result<bool> {
    let ok = typesum::duality_holds(n)?;
    let count = typesum::enumerate_types(n).len();
    Ok(report(
        ok,
        &format!("Hecke-factor reversal matches the dual type for {} types", count),
    ))
}

fn cmd_verify(args: &VerifyArgs) -> epoly::Result<u8> {
    let n = args.n as usize;
    let max_rank = args.max_rank as usize;

    let mut ok = true;
    match args.suite {
        Suite::Hecke => ok &= verify_hecke(max_rank)?,
        Suite::Ctau => {
            // Bad twist data is a usage error, not a verification failure.
            let specs = match (args.m, &args.exponents, args.q) {
                (None, None, None) => oracle::standard_xi_specs(n),
                (Some(m), Some(exponents), Some(q)) => {
                    let spec = oracle::XiSpec::new(m, exponents.clone(), q);
                    if spec.exponents.len() != n {
                        return usage("--exponents must list exactly n entries");
                    }
                    if !oracle::validate_generic(&spec) {
                        return usage(
                            "the twist (m, exponents, q) is not generic: need q = 1 mod 2m, \
                             no exponent of order <= 2, no vanishing signed subset sum",
                        );
                    }
                    vec![spec]
                }
                _ => return usage("--m, --exponents and --q must be given together"),
            };
            ok &= verify_ctau(n, &specs)?;
        }
        Suite::Brute => {
            let q = args.q.unwrap_or(7);
            let m = args.m.unwrap_or(3);
            if q > oracle::MAX_BRUTE_FIELD || !is_prime(q) || q % 2 == 0 {
                return usage("--q must be an odd prime at most 17");
            }
            if m < 3 || m % 2 == 0 || (q - 1) % m != 0 {
                return usage("--m must be odd, at least 3, and divide q - 1");
            }
            ok &= verify_brute(q, m, args.g)?;
        }
        Suite::Quasi => {
            let q = args.q.unwrap_or(5);
            if q > oracle::MAX_BRUTE_FIELD || !is_prime(q) || q % 4 != 1 {
                return usage("--q must be a prime at most 17 with q = 1 mod 4");
            }
            ok &= verify_quasi(q, args.g)?;
        }
        Suite::Frobenius => ok &= verify_frobenius()?,
        Suite::Strata => ok &= verify_strata(n, args.g)?,
        Suite::Duality => ok &= verify_duality(n)?,
        Suite::All => {
            ok &= verify_hecke(max_rank)?;
            let specs = oracle::standard_xi_specs(n);
            ok &= verify_ctau(n, &specs)?;
            ok &= verify_brute(7, 3, 1)?;
            ok &= verify_quasi(5, 1)?;
            ok &= verify_frobenius()?;
            ok &= verify_strata(n, args.g)?;
            ok &= verify_duality(n)?;
        }
    }
    Ok(if ok { 0 } else { 1 })
}
