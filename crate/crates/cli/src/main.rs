//! CLI for the spectral-constant library: single constants, directed bounds
//! with route provenance, verification campaigns, and report tables.
//!
//! Exit codes: 0 success / all checks pass, 1 verification failures,
//! 2 usage or domain errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use pleijel_core::faberkrahn::{fk_best, fk_euclidean};
use pleijel_core::functional::{
    gn_from_sobolev, gn_nagy, sobolev_euclidean, sobolev_heisenberg, sobolev_lift,
};
use pleijel_core::isoperimetry::{
    iso_euclidean, iso_lift, iso_lower_heisenberg, pansu_isoperimetric,
};
use pleijel_core::pleijel::{best_gamma_bound, gamma_candidates};
use pleijel_core::table::fmt_sci;
use pleijel_core::weyl::{cn_closed_form, cn_hurwitz, cn_series, weyl_euclidean, weyl_hn_rk};
use pleijel_core::{
    emit_table, render_campaign, run_campaign, Bound, CampaignName, Direction, Error, Format,
    GroupSpec, Hypothesis, TableName, Value,
};

#[derive(Parser)]
#[command(
    name = "pleijel",
    version,
    about = "Spectral-geometry constants on H_n x R^k with tracked error bounds"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Csv,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Csv => Format::Csv,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HypothesisArg {
    Unconditional,
    Pansu,
}

impl From<HypothesisArg> for Hypothesis {
    fn from(h: HypothesisArg) -> Hypothesis {
        match h {
            HypothesisArg::Unconditional => Hypothesis::Unconditional,
            HypothesisArg::Pansu => Hypothesis::PansuConjecture,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a named constant for the group (n, k)
    Constant {
        /// one of: cn, weyl, sobolev, gn, iso, fk
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
        /// method/route selector (cn: hurwitz|series|closed; iso/fk: lower|pansu)
        #[arg(long)]
        method: Option<String>,
        /// interpolation exponent for --name gn
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Compute a directed bound with route provenance
    Bound {
        /// currently: pleijel
        #[arg(long)]
        quantity: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, value_enum, default_value_t = HypothesisArg::Unconditional)]
        hypothesis: HypothesisArg,
        /// list every evaluated route, not only the winner
        #[arg(long)]
        all_routes: bool,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Run a verification campaign
    Verify {
        /// one of: maincomp, pansu, bessel, hps, tables, series, lifting, all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 1.0)]
        tol_mult: f64,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Emit a report table
    Table {
        /// one of: cn, gamma_tilde, quotients, constants, routes
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 13)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
}

fn value_line(label: &str, v: Value) -> String {
    format!("{label} = {} (err {})", fmt_sci(v.estimate), fmt_sci(v.err))
}

fn print_value(label: &str, v: Value, format: OutFormat) {
    match format {
        OutFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&v).expect("finite value"));
        }
        _ => println!("{}", value_line(label, v)),
    }
}

fn bound_lines(b: &Bound) -> String {
    let dir = match b.direction {
        Direction::Lower => "lower bound",
        Direction::Upper => "upper bound",
        Direction::Exact => "exact",
    };
    let hyp = match b.hypothesis {
        Hypothesis::Unconditional => "unconditional",
        Hypothesis::PansuConjecture => "conditional on the conjectured isoperimetric value",
    };
    format!(
        "{} (err {}) [{dir}, {hyp}]\n  route: {}",
        fmt_sci(b.value.estimate),
        fmt_sci(b.value.err),
        b.route.join(" <- ")
    )
}

fn run_constant(
    name: &str,
    n: u32,
    k: u32,
    method: Option<&str>,
    q: Option<f64>,
    format: OutFormat,
) -> Result<(), Error> {
    match name {
        "cn" => {
            let v = match method.unwrap_or("hurwitz") {
                "hurwitz" => cn_hurwitz(n)?,
                "series" => cn_series(n, 1e-7)?,
                "closed" => cn_closed_form(n)?,
                other => {
                    return Err(Error::domain("cli_main", format!("unknown cn method '{other}'")))
                }
            };
            print_value(&format!("cn({n})"), v, format);
        }
        "weyl" => {
            let v = if n == 0 { weyl_euclidean(k)? } else { weyl_hn_rk(GroupSpec::new(n, k)?)? };
            print_value(&format!("weyl(n={n},k={k})"), v, format);
        }
        "sobolev" => {
            if n == 0 {
                print_value(&format!("sobolev(R^{k})"), sobolev_euclidean(k)?, format);
            } else if k == 0 {
                print_value(&format!("sobolev(H_{n})"), sobolev_heisenberg(n)?, format);
            } else {
                let b = sobolev_lift(GroupSpec::new(n, k)?)?;
                match format {
                    OutFormat::Json => {
                        println!("{}", serde_json::to_string_pretty(&b).expect("finite"))
                    }
                    _ => println!("sobolev(n={n},k={k}) >= {}", bound_lines(&b)),
                }
            }
        }
        "gn" => {
            let q = q.ok_or_else(|| Error::domain("cli_main", "--name gn requires --q"))?;
            let v = if k == 1 {
                gn_nagy(q)?
            } else {
                gn_from_sobolev(k, q)?
            };
            print_value(&format!("gn(k={k},q={q})"), v, format);
        }
        "iso" => {
            if n == 0 {
                print_value(&format!("iso(R^{k})"), iso_euclidean(k)?, format);
            } else {
                let base = match method.unwrap_or("lower") {
                    "lower" => iso_lower_heisenberg(n)?,
                    "pansu" => pansu_isoperimetric(n)?,
                    other => {
                        return Err(Error::domain(
                            "cli_main",
                            format!("unknown iso method '{other}'"),
                        ))
                    }
                };
                let lifted = iso_lift(GroupSpec::new(n, k)?, &base)?;
                match format {
                    OutFormat::Json => {
                        println!("{}", serde_json::to_string_pretty(&lifted).expect("finite"))
                    }
                    _ => println!("iso(n={n},k={k}) {}", bound_lines(&lifted.bound)),
                }
            }
        }
        "fk" => {
            if n == 0 {
                print_value(&format!("fk(R^{k})"), fk_euclidean(k)?, format);
            } else {
                let hyp = match method.unwrap_or("lower") {
                    "lower" => Hypothesis::Unconditional,
                    "pansu" => Hypothesis::PansuConjecture,
                    other => {
                        return Err(Error::domain(
                            "cli_main",
                            format!("unknown fk method '{other}'"),
                        ))
                    }
                };
                let b = fk_best(GroupSpec::new(n, k)?, hyp)?;
                match format {
                    OutFormat::Json => {
                        println!("{}", serde_json::to_string_pretty(&b).expect("finite"))
                    }
                    _ => println!("fk(n={n},k={k}) >= {}", bound_lines(&b)),
                }
            }
        }
        other => return Err(Error::domain("cli_main", format!("unknown constant '{other}'"))),
    }
    Ok(())
}

fn run_bound(
    quantity: &str,
    n: u32,
    k: u32,
    hypothesis: Hypothesis,
    all_routes: bool,
    format: OutFormat,
) -> Result<(), Error> {
    if quantity != "pleijel" {
        return Err(Error::domain("cli_main", format!("unknown quantity '{quantity}'")));
    }
    let g = GroupSpec::new(n, k)?;
    let best = best_gamma_bound(g, hypothesis)?;
    match format {
        OutFormat::Json => println!("{}", serde_json::to_string_pretty(&best).expect("finite")),
        _ => {
            println!("pleijel(n={n},k={k}) <= {}", bound_lines(&best.bound));
            println!("  headline (capped at the Courant baseline 1): {}", fmt_sci(best.headline()));
            if all_routes {
                for c in gamma_candidates(g, hypothesis)? {
                    println!("  candidate {} = {}", c.route[0], fmt_sci(c.value.estimate));
                }
            }
        }
    }
    Ok(())
}

fn real_main() -> i32 {
    let cli = Cli::parse();
    let outcome: Result<i32, Error> = match cli.cmd {
        Cmd::Constant { name, n, k, method, q, format } => {
            run_constant(&name, n, k, method.as_deref(), q, format).map(|_| 0)
        }
        Cmd::Bound { quantity, n, k, hypothesis, all_routes, format } => {
            run_bound(&quantity, n, k, hypothesis.into(), all_routes, format).map(|_| 0)
        }
        Cmd::Verify { suite, tol_mult, format } => (|| {
            let name = CampaignName::parse(&suite)?;
            let campaign = run_campaign(name, tol_mult)?;
            let bytes = render_campaign(&campaign, Format::from(format));
            std::io::stdout().write_all(&bytes).expect("stdout");
            Ok(campaign.exit_status)
        })(),
        Cmd::Table { name, max_n, format } => (|| {
            let table = TableName::parse(&name)?;
            let bytes = emit_table(table, Format::from(format), max_n)?;
            std::io::stdout().write_all(&bytes).expect("stdout");
            Ok(0)
        })(),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn main() {
    std::process::exit(real_main());
}
