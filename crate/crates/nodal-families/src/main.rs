//! Command-line front end: identity verification, node censuses, the
//! torus-instance locus tools and the invariant calculators.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use clap::{Args, Parser, Subcommand};
use nodal_families::families::{
    self, fourteen_nodal_family, l_from_point, FamilySpecJson, FourteenNodalParams,
    QuadricContext, X_VARS,
};
use nodal_families::identities;
use nodal_families::invariants::{
    chi_normal_bundle, delta_genus_check, kernel_codimension, moduli_dimensions, twistor_delta,
    InvariantInput,
};
use nodal_families::numeric::{censuses_agree, numeric_singular_search, SearchConfig};
use nodal_families::poly::MultiPoly;
use nodal_families::report::census_json;
use nodal_families::scalar::{parse_scalar, Scalar};
use nodal_families::singular::{
    structural_nodes_fourteen, structural_nodes_tetrahedral, verify_singular,
    SingularPointRecord,
};
use nodal_families::dualcurve;
use num_traits::Zero;
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "nodal-families",
    about = "Exact constructors, identity checks and node censuses for conic-bundle / double-solid families"
)]
struct Cli {
    /// Seed for all randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Numeric tolerance override.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Output path (stdout when omitted; plot uses it as a prefix).
    #[arg(long, global = true)]
    out: Option<String>,
    /// Output format.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity verification suite.
    Verify {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Structural node census with the numeric cross-check.
    Nodes {
        /// Path to a family parameter file ({"family": ..., "params": ...}).
        #[arg(long)]
        params: String,
        /// Newton starts per affine chart.
        #[arg(long, default_value_t = 2000)]
        starts: usize,
    },
    /// Locus tools for the torus-action instance.
    Torus(TorusArgs),
    /// Invariant and dimension formulas.
    Invariants {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        delta: i64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        r: i64,
        #[arg(long, default_value_t = false)]
        symmetric: bool,
    },
}

#[derive(Args)]
struct TorusArgs {
    /// Coefficients A0,A1,A2,A3 of the cubic, as rationals.
    #[arg(long, value_delimiter = ',', conflicts_with = "factors")]
    a: Vec<String>,
    /// Alternatively, the three factors "a1,b1;a2,b2;a3,b3" of the cubic.
    #[arg(long)]
    factors: Option<String>,
    /// Action to run.
    #[arg(value_parser = ["locus", "cusps", "doublepoints", "plot"])]
    action: String,
    /// Plot windows: main, zoom or all.
    #[arg(long, default_value = "all")]
    window: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Option<String>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| e.to_string()),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Verify { suite } => {
            let reports = identities::run_suite(suite)
                .ok_or_else(|| format!("unknown suite `{suite}`"))?;
            let all_pass = reports.iter().all(|r| r.pass);
            let body = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?;
            emit(&cli.out, &body)?;
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Nodes { params, starts } => {
            let text = std::fs::read_to_string(params).map_err(|e| e.to_string())?;
            let spec = FamilySpecJson::from_json(&text).map_err(|e| e.to_string())?;
            let cfg = SearchConfig {
                starts_per_chart: *starts,
                tol: cli.tol,
                seed: cli.seed,
                ..Default::default()
            };
            let (name, quartic, structural) = build_census(&spec)?;
            let numeric = numeric_singular_search(&quartic, &cfg);
            let agreement = censuses_agree(&structural, &numeric, cli.tol.max(1e-8), true);
            let report = census_json(&name, cli.seed, cli.tol, &structural, &numeric, agreement);
            let body = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
            emit(&cli.out, &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Torus(args) => run_torus(&cli, args),
        Command::Invariants {
            n,
            delta,
            g,
            r,
            symmetric,
        } => {
            let input = InvariantInput {
                n: *n,
                delta: *delta,
                g: *g,
                r: *r,
                symmetric: *symmetric,
            };
            if !delta_genus_check(&input) {
                return Err(format!(
                    "inadmissible tuple: 1 + {delta} + {g} != {r} + ({n} - 1)^2"
                ));
            }
            let dims = moduli_dimensions(&input).map_err(|e| e.to_string())?;
            let chi = chi_normal_bundle(&input).map_err(|e| e.to_string())?;
            let mut body = json!({
                "input": input,
                "admissible": true,
                "dimensions": dims,
                "chi_normal_bundle": chi,
                "twistor_delta": twistor_delta(*n).map_err(|e| e.to_string())?,
            });
            if *n >= 3 {
                body["kernel_codimension"] =
                    json!(kernel_codimension(*n).map_err(|e| e.to_string())?);
            }
            emit(
                &cli.out,
                &serde_json::to_string_pretty(&body).map_err(|e| e.to_string())?,
            )?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_scalars(raw: &[String]) -> Result<Vec<Scalar>, String> {
    raw.iter()
        .map(|s| parse_scalar(s).map_err(|e| e.to_string()))
        .collect()
}

fn parse_plane(text: &str) -> Result<MultiPoly, String> {
    let p = MultiPoly::parse(&X_VARS, text).map_err(|e| e.to_string())?;
    if p.total_degree() != 1 || p.is_zero() {
        return Err(format!("`{text}` is not a linear form"));
    }
    Ok(p)
}

fn build_census(
    spec: &FamilySpecJson,
) -> Result<(String, MultiPoly, Vec<SingularPointRecord>), String> {
    match spec {
        FamilySpecJson::Tetrahedral { planes, factor } => {
            let ps: Vec<MultiPoly> = planes
                .iter()
                .map(|t| parse_plane(t))
                .collect::<Result<_, _>>()?;
            let factor = match factor {
                Some(f) => parse_scalar(f).map_err(|e| e.to_string())?,
                None => nodal_families::scalar::int(1),
            };
            let q = QuadricContext::new().q;
            let census = structural_nodes_tetrahedral(
                &q,
                &[ps[0].clone(), ps[1].clone(), ps[2].clone(), ps[3].clone()],
                &factor,
            )
            .map_err(|e| e.to_string())?;
            Ok(("tetrahedral".into(), census.quartic, census.records))
        }
        FamilySpecJson::TetrahedralThirteen { planes, point } => {
            let ps: Vec<MultiPoly> = planes
                .iter()
                .map(|t| parse_plane(t))
                .collect::<Result<_, _>>()?;
            let p = parse_scalars(point)?;
            let ctx = QuadricContext::new();
            let k = ps[0].mul(&ps[1]).mul(&ps[2]);
            let qp = ctx.q.evaluate(&p).map_err(|e| e.to_string())?;
            let kp = k.evaluate(&p).map_err(|e| e.to_string())?;
            if kp.is_zero() {
                return Err("the point lies on the cubic; no 13th node there".into());
            }
            let aa = qp / (Scalar::from_integer(2.into()) * kp);
            let l4 = l_from_point(&ctx.q, &k, &aa, &p).map_err(|e| e.to_string())?;
            let factor = &aa * Scalar::from_integer(4.into());
            let census = structural_nodes_tetrahedral(
                &ctx.q,
                &[ps[0].clone(), ps[1].clone(), ps[2].clone(), l4],
                &factor,
            )
            .map_err(|e| e.to_string())?;
            let mut records = census.records;
            records.push(verify_singular(&census.quartic, &p));
            Ok(("tetrahedral-13".into(), census.quartic, records))
        }
        FamilySpecJson::FourteenNodal {
            lambda,
            mu,
            a,
            b,
            k1,
            k2,
            alpha1,
            alpha2,
        } => {
            let params = FourteenNodalParams {
                lambda: parse_scalar(lambda).map_err(|e| e.to_string())?,
                mu: parse_scalar(mu).map_err(|e| e.to_string())?,
                a: {
                    let v = parse_scalars(a)?;
                    (v[0].clone(), v[1].clone())
                },
                b: {
                    let v = parse_scalars(b)?;
                    (v[0].clone(), v[1].clone())
                },
                k1: parse_plane(k1)?,
                k2: parse_plane(k2)?,
                alpha1: parse_scalar(alpha1).map_err(|e| e.to_string())?,
                alpha2: parse_scalar(alpha2).map_err(|e| e.to_string())?,
            };
            let fam = fourteen_nodal_family(&params).map_err(|e| e.to_string())?;
            let aa_c2 = &(&params.alpha1 * &params.alpha2) * &(&fam.factor * &fam.factor);
            let u1 = fam.k1.scale(&aa_c2);
            let census = structural_nodes_fourteen(
                (&u1, &fam.k2),
                (&fam.l0, &fam.l3),
                (&fam.l1, &fam.l2),
            )
            .map_err(|e| e.to_string())?;
            Ok(("fourteen-nodal".into(), census.quartic, census.records))
        }
        _ => Err("this family has no node census; use tetrahedral, tetrahedral-thirteen or fourteen-nodal".into()),
    }
}

fn run_torus(cli: &Cli, args: &TorusArgs) -> Result<ExitCode, String> {
    let a: [Scalar; 4] = if let Some(raw) = &args.factors {
        let factors: Vec<(Scalar, Scalar)> = raw
            .split(';')
            .map(|pair| {
                let parts: Vec<&str> = pair.split(',').collect();
                if parts.len() != 2 {
                    return Err(format!("bad factor `{pair}`; expected a,b"));
                }
                Ok((
                    parse_scalar(parts[0]).map_err(|e| e.to_string())?,
                    parse_scalar(parts[1]).map_err(|e| e.to_string())?,
                ))
            })
            .collect::<Result<_, String>>()?;
        if factors.len() != 3 {
            return Err("--factors needs three a,b pairs separated by `;`".into());
        }
        let params = families::TorusParams {
            factors,
            s: nodal_families::scalar::int(0),
            alpha1: nodal_families::scalar::int(0),
            alpha2: nodal_families::scalar::int(0),
        };
        params.a_coefficients()
    } else {
        if args.a.len() != 4 {
            return Err("--a needs exactly four rationals A0,A1,A2,A3".into());
        }
        let av = parse_scalars(&args.a)?;
        [av[0].clone(), av[1].clone(), av[2].clone(), av[3].clone()]
    };
    let a_text: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    let curve = dualcurve::torus_locus(&a).map_err(|e| e.to_string())?;
    match args.action.as_str() {
        "locus" => {
            let body = json!({
                "a": a_text,
                "locus": {
                    "s": {
                        "numerator": curve.s.numerator().to_string_in("t"),
                        "denominator": curve.s.denominator().to_string_in("t"),
                    },
                    "alpha_product": {
                        "numerator": curve.alpha_product.numerator().to_string_in("t"),
                        "denominator": curve.alpha_product.denominator().to_string_in("t"),
                    }
                }
            });
            emit(
                &cli.out,
                &serde_json::to_string_pretty(&body).map_err(|e| e.to_string())?,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        "cusps" => {
            let report = dualcurve::find_cusps(&curve, (-5.0, 5.0), cli.tol.min(1e-9));
            let body = json!({"a": a_text, "cusps": report});
            emit(
                &cli.out,
                &serde_json::to_string_pretty(&body).map_err(|e| e.to_string())?,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        "doublepoints" => {
            let dps = dualcurve::find_double_points(&curve, cli.tol.min(1e-9));
            let body = json!({"a": a_text, "double_points": dps});
            emit(
                &cli.out,
                &serde_json::to_string_pretty(&body).map_err(|e| e.to_string())?,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        "plot" => {
            let marked: Vec<f64> = dualcurve::find_double_points(&curve, 1e-9)
                .iter()
                .flat_map(|d| [d.t1, d.t2])
                .collect();
            let windows = dualcurve::default_windows();
            let selected: Vec<_> = windows
                .iter()
                .filter(|w| args.window == "all" || w.name == args.window)
                .collect();
            if selected.is_empty() {
                return Err(format!("unknown window `{}`", args.window));
            }
            for w in &selected {
                let rows = dualcurve::emit_plot(&curve, w, &marked);
                let csv = dualcurve::plot_to_csv(&rows);
                match &cli.out {
                    Some(prefix) => {
                        let path = format!("{prefix}_{}.csv", w.name);
                        std::fs::write(&path, csv).map_err(|e| e.to_string())?;
                        eprintln!("wrote {path}");
                    }
                    None => {
                        println!("# window: {}", w.name);
                        print!("{csv}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown action `{other}`")),
    }
}
