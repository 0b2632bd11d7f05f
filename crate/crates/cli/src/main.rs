//! Command-line front end: point counts, L-polynomials, Jacobian orders,
//! torsion bounds, Mordell-Weil group enumeration, K-point extraction,
//! and the full built-in verification run.

mod config;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use g2jac_core::curve::is_inert;
use g2jac_core::finfield::{legendre, FqDesc};
use g2jac_core::pipeline::{
    self, enumerate_k_points, expected_value_checks, instance_group, InstanceSpec,
};
use g2jac_core::zeta::{count_points, jacobian_order, l_polynomial, order_factored, torsion_bound};
use g2jac_core::Genus2Curve;

#[derive(Parser)]
#[command(
    name = "g2jac",
    about = "Exact genus-2 Jacobian arithmetic over quadratic fields: torsion bounds, \
             Mordell-Weil enumeration, and the torsion classification checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bad-reduction primes of a curve: {2} plus the odd divisors of disc(f).
    Badprimes {
        /// "c1", "c2", or a path to an instance file.
        curve: String,
    },
    /// Count points of the curve over F_p (or F_{p^2} with --ext 2).
    Count {
        curve: String,
        #[arg(long)]
        p: u64,
        /// Extension degree: 1 or 2.
        #[arg(long, default_value_t = 1)]
        ext: u8,
        /// Radicand for the quadratic extension (must be inert at p);
        /// default picks a canonical non-residue.
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
    },
    /// L-polynomial coefficients (c1, c2) of the curve at a good prime.
    Lpoly {
        curve: String,
        #[arg(long)]
        p: u64,
    },
    /// |J(F_p)| (--ext 1) or |J(F_{p^2})| (--ext 2).
    Jacorder {
        curve: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        ext: u8,
    },
    /// Torsion bound of J(Q(sqrt(d))) by gcd over inert witness primes.
    TorsionBound {
        curve: String,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        /// Machine-readable key/value output.
        #[arg(long)]
        kv: bool,
    },
    /// The Mordell-Weil group of an instance, element by element.
    Group {
        curve: String,
        /// Radicand selecting the built-in instance (unneeded for files).
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
        #[arg(long)]
        kv: bool,
    },
    /// All K-rational points of an instance's curve.
    Points {
        curve: String,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
        #[arg(long)]
        kv: bool,
    },
    /// Run the three built-in instances and check every expected value;
    /// exits nonzero on any mismatch.
    VerifyPaper {
        #[arg(long)]
        kv: bool,
    },
}

fn resolve_curve(arg: &str) -> Result<Genus2Curve, String> {
    match arg {
        "c1" => Ok(pipeline::curve_c1()),
        "c2" => Ok(pipeline::curve_c2()),
        path => config::parse_instance_file(path).map(|spec| spec.curve),
    }
}

fn resolve_instance(arg: &str, d: Option<i64>) -> Result<InstanceSpec, String> {
    match arg {
        "c1" | "c2" => {
            let d = d.ok_or("built-in instances need --d (-1 or -3)")?;
            pipeline::builtin_instances()
                .into_iter()
                .find(|spec| spec.curve.label() == arg && spec.field.d() == d)
                .ok_or_else(|| {
                    format!(
                        "no built-in instance for {} with d = {}; built-ins: (c1, -1), (c1, -3), (c2, -3)",
                        arg, d
                    )
                })
        }
        path => {
            let spec = config::parse_instance_file(path)?;
            if let Some(d) = d {
                if d != spec.field.d() {
                    return Err(format!(
                        "--d {} conflicts with the file's radicand {}",
                        d,
                        spec.field.d()
                    ));
                }
            }
            Ok(spec)
        }
    }
}

fn quadratic_desc(p: u64, d: Option<i64>) -> Result<FqDesc, String> {
    FqDesc::prime(p).map_err(|e| e.to_string())?;
    let d = match d {
        Some(d) => {
            if !is_inert(p, d).map_err(|e| e.to_string())? {
                return Err(format!("d = {} is not inert at p = {}", d, p));
            }
            d
        }
        None => {
            if p % 4 == 3 {
                -1
            } else {
                (2..).find(|&s| legendre(s, p) == -1).unwrap()
            }
        }
    };
    FqDesc::quadratic(p, d).map_err(|e| e.to_string())
}

fn run(cli: Cli, out: &mut String) -> Result<ExitCode, String> {
    use std::fmt::Write as _;
    match cli.cmd {
        Command::Badprimes { curve } => {
            let c = resolve_curve(&curve)?;
            let primes: Vec<String> = c.bad_primes().iter().map(|p| p.to_string()).collect();
            let _ = writeln!(out, "disc = {}", c.disc());
            let _ = writeln!(out, "bad primes of {}: {}", c.label(), primes.join(", "));
        }
        Command::Count { curve, p, ext, d } => {
            let c = resolve_curve(&curve)?;
            let desc = match ext {
                1 => FqDesc::prime(p).map_err(|e| e.to_string())?,
                2 => quadratic_desc(p, d)?,
                _ => return Err("--ext must be 1 or 2".into()),
            };
            let n = count_points(&c, &desc).map_err(|e| e.to_string())?;
            let _ = writeln!(out, "#{}({}) = {}", c.label(), desc, n);
        }
        Command::Lpoly { curve, p } => {
            let c = resolve_curve(&curve)?;
            let lp = l_polynomial(&c, p).map_err(|e| e.to_string())?;
            let _ = writeln!(out, "P(T) = {}", lp);
            let _ = writeln!(out, "c1 = {}, c2 = {}", lp.c1(), lp.c2());
            let _ = writeln!(out, "P(1) = {}, P(-1) = {}", lp.eval_at_one(), lp.eval_at_minus_one());
        }
        Command::Jacorder { curve, p, ext } => {
            let c = resolve_curve(&curve)?;
            let n = jacobian_order(&c, p, ext).map_err(|e| e.to_string())?;
            let field = if ext == 1 {
                format!("F_{}", p)
            } else {
                format!("F_{}^2", p)
            };
            let _ = writeln!(out, "|J({})({})| = {} = {}", c.label(), field, n, order_factored(n));
        }
        Command::TorsionBound {
            curve,
            d,
            primes,
            kv,
        } => {
            let c = resolve_curve(&curve)?;
            let report = torsion_bound(&c, d, &primes).map_err(|e| e.to_string())?;
            if kv {
                let _ = write!(out, "{}", report.to_kv());
            } else {
                let _ = writeln!(out, "{}", report);
            }
        }
        Command::Group { curve, d, kv } => {
            let spec = resolve_instance(&curve, d)?;
            let (jac, group, bound) = instance_group(&spec).map_err(|e| e.to_string())?;
            if kv {
                let _ = writeln!(out, "report = group");
                let _ = writeln!(out, "instance = {}", spec.label());
                let _ = writeln!(out, "order = {}", group.len());
                for el in &group {
                    let (a, b, w) = jac.triple(el);
                    let _ = writeln!(out, 
                        "element = a: {} | b: {} | d: {}",
                        config::poly_coeff_string(&a),
                        config::poly_coeff_string(&b),
                        w
                    );
                }
            } else {
                let _ = writeln!(out, 
                    "J({}) from the given seeds: {} elements (torsion bound {})",
                    spec.label(),
                    group.len(),
                    bound.bound
                );
                for el in &group {
                    let _ = writeln!(out, "  {}", jac.triple_string(el));
                }
                let structure = jac.group_structure(&group).map_err(|e| e.to_string())?;
                let _ = writeln!(out, "structure: {}", structure);
            }
        }
        Command::Points { curve, d, kv } => {
            let spec = resolve_instance(&curve, d)?;
            let points = enumerate_k_points(&spec).map_err(|e| e.to_string())?;
            if kv {
                let _ = writeln!(out, "report = points");
                let _ = writeln!(out, "instance = {}", spec.label());
                for p in &points {
                    let _ = writeln!(out, "point = {}", p);
                }
                let _ = writeln!(out, "count = {}", points.len());
            } else {
                let _ = writeln!(out, "{}: {} points", spec.label(), points.len());
                for p in &points {
                    let _ = writeln!(out, "  {}", p);
                }
            }
        }
        Command::VerifyPaper { kv } => {
            let reports = pipeline::verify_paper().map_err(|e| e.to_string())?;
            if kv {
                for r in &reports {
                    let _ = write!(out, "{}", r.to_kv());
                    let _ = writeln!(out);
                }
            } else {
                for r in &reports {
                    let _ = writeln!(out, "{}", r);
                    let _ = writeln!(out);
                }
            }
            let checks = expected_value_checks(&reports);
            let mut all_ok = true;
            let _ = writeln!(out, "expected-value checks:");
            for c in &checks {
                if c.ok {
                    let _ = writeln!(out, "  [ok  ] {} = {}", c.name, c.got);
                } else {
                    let _ = writeln!(out, "  [FAIL] {}: expected {}, got {}", c.name, c.expected, c.got);
                    all_ok = false;
                }
            }
            if all_ok {
                let _ = writeln!(out, "all checks passed");
            } else {
                let _ = writeln!(out, "some checks FAILED");
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    // Ignore broken pipes (e.g. piping into `head`).
    let _ = std::io::Write::write_all(&mut std::io::stdout(), out.as_bytes());
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::FAILURE
        }
    }
}
