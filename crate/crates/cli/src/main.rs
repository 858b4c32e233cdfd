use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qfusion::abacus::{r_core, r_quotient};
use qfusion::apps::{
    kbar_closed, kbar_skew_closed, rocha_caridi, theta_dim, theta_qdim, virasoro_limit_check,
    VirasoroLabel,
};
use qfusion::fusion::{
    fusion_product_classical, q_fusion_product, restricted_hall_littlewood, restricted_kostka,
    weyl_reduce, Convention, ReductionResult,
};
use qfusion::llt::{enumerate_ribbon_tableaux, llt_cospin, llt_spin, q_lr_cospin, spin_polynomial};
use qfusion::partition::{format_tuple, parse_tuple};
use qfusion::{LaurentQPoly, Partition, SchurExpansion};

#[derive(Parser)]
#[command(
    name = "qfusion",
    version,
    about = "q-analogues of Littlewood-Richardson and fusion coefficients"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Tuple of partitions, `"2,1;2,1;2,1"`.
#[derive(Clone)]
struct Tuple(Vec<Partition>);

impl std::str::FromStr for Tuple {
    type Err = qfusion::Error;
    fn from_str(s: &str) -> qfusion::Result<Self> {
        parse_tuple(s).map(Tuple)
    }
}

#[derive(Args)]
struct ShapeR {
    #[arg(long)]
    partition: Partition,
    #[arg(long)]
    r: usize,
}

#[derive(Args)]
struct Level {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    l: usize,
}

#[derive(Subcommand)]
enum Command {
    /// r-core of a partition
    Core(ShapeR),
    /// r-core and r-quotient of a partition
    Quotient(ShapeR),
    /// Ribbon tableaux of a shape with empty r-core
    RibbonTableaux {
        #[command(flatten)]
        shape: ShapeR,
        #[arg(long, default_value_t = 1)]
        max_entry: usize,
        /// Only tableaux of this weight
        #[arg(long)]
        weight: Option<String>,
        /// Print the spin generating polynomial of the weight instead
        #[arg(long, requires = "weight")]
        spin: bool,
    },
    /// Schur expansion of the LLT polynomial (cospin unless --spin)
    Llt {
        #[command(flatten)]
        shape: ShapeR,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        spin: bool,
    },
    /// q-Littlewood-Richardson coefficients of a tuple of factors
    Qlr {
        #[arg(long)]
        factors: Tuple,
        #[arg(long)]
        n: usize,
        /// Single coefficient instead of the whole expansion
        #[arg(long)]
        nu: Option<Partition>,
    },
    /// Affine Weyl reduction of one weight
    Reduce {
        #[arg(long)]
        partition: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long = "L")]
        level_sum: usize,
    },
    /// Classical fusion product
    Fusion {
        #[arg(long)]
        factors: Tuple,
        #[command(flatten)]
        level: Level,
    },
    /// q-fusion product (cospin unless --spin)
    Qfusion {
        #[arg(long)]
        factors: Tuple,
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        spin: bool,
    },
    /// Restricted Kostka polynomials of a weight
    Rkostka {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        lambda: Option<Partition>,
        #[command(flatten)]
        level: Level,
    },
    /// Closed-form sl2 restricted Kostka polynomial of (N+b,N)/(a)
    Kbar {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 0)]
        a: usize,
        #[arg(long = "L")]
        level_sum: usize,
    },
    /// Normalized minimal-model character below q^order
    Virasoro {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        order: i64,
    },
    /// Compare the normalized skew restricted Kostka polynomial with its limit character
    LimitCheck {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long = "L")]
        level_sum: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        order: usize,
    },
    /// Dimension of the space of theta functions of level l
    Theta {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        g: u32,
        /// q-dimension from cospin q-fusion
        #[arg(long)]
        q: bool,
    },
}

struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn poly(p: &LaurentQPoly) -> Self {
        Output {
            text: p.to_string(),
            json: p.to_json(),
        }
    }

    fn expansion(e: &SchurExpansion) -> Self {
        Output {
            text: e.to_string(),
            json: e.to_json(),
        }
    }
}

fn show(p: &Partition) -> String {
    if p.is_empty() {
        "0".into()
    } else {
        p.to_string()
    }
}

fn convention(spin: bool) -> Convention {
    if spin {
        Convention::Spin
    } else {
        Convention::Cospin
    }
}

fn run(command: Command) -> qfusion::Result<Output> {
    Ok(match command {
        Command::Core(ShapeR { partition, r }) => {
            let core = r_core(&partition, r)?;
            Output {
                text: show(&core),
                json: json!({ "core": core.to_string() }),
            }
        }
        Command::Quotient(ShapeR { partition, r }) => {
            let core = r_core(&partition, r)?;
            let quotient = r_quotient(&partition, r)?;
            let strings: Vec<String> = quotient.iter().map(ToString::to_string).collect();
            Output {
                text: format!("core={} quotient={}", show(&core), format_tuple(&quotient)),
                json: json!({ "core": core.to_string(), "quotient": strings }),
            }
        }
        Command::RibbonTableaux {
            shape: ShapeR { partition, r },
            max_entry,
            weight,
            spin,
        } => {
            let weight = weight.map(|w| parse_weight(&w)).transpose()?;
            if spin {
                return Ok(Output::poly(&spin_polynomial(
                    &partition,
                    r,
                    weight.as_deref().unwrap_or_default(),
                )?));
            }
            let all = enumerate_ribbon_tableaux(&partition, r, max_entry)?;
            let chosen: Vec<_> = all
                .iter()
                .filter(|t| weight.as_ref().is_none_or(|w| &t.weight() == w))
                .collect();
            let text = chosen
                .iter()
                .map(|t| {
                    let weight: Vec<String> = t.weight().iter().map(ToString::to_string).collect();
                    format!(
                        "weight={} spin={} chain={}",
                        weight.join(","),
                        t.spin(),
                        format_tuple(t.chain())
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            let json = chosen
                .iter()
                .map(|t| {
                    let chain: Vec<String> = t.chain().iter().map(ToString::to_string).collect();
                    json!({ "chain": chain, "spin": t.spin().to_string(), "weight": t.weight() })
                })
                .collect();
            Output {
                text,
                json: Value::Array(json),
            }
        }
        Command::Llt {
            shape: ShapeR { partition, r },
            n,
            spin,
        } => {
            let e = if spin {
                llt_spin(&partition, r, n)?
            } else {
                llt_cospin(&partition, r, n)?
            };
            Output::expansion(&e)
        }
        Command::Qlr {
            factors: Tuple(factors),
            n,
            nu,
        } => match nu {
            Some(nu) => Output::poly(&q_lr_cospin(&nu, &factors, n)?),
            None => {
                let shape = qfusion::abacus::from_core_and_quotient(
                    &Partition::empty(),
                    &factors,
                    factors.len(),
                )?;
                Output::expansion(&llt_cospin(&shape, factors.len(), n)?)
            }
        },
        Command::Reduce {
            partition,
            n,
            level_sum,
        } => {
            let red = weyl_reduce(&partition, n, level_sum)?;
            let json = match &red {
                ReductionResult::Zero => json!({ "zero": true }),
                ReductionResult::Term { sign, z, mu } => {
                    json!({ "mu": mu.to_string(), "sign": sign, "z": z })
                }
            };
            Output {
                text: red.to_string(),
                json,
            }
        }
        Command::Fusion {
            factors: Tuple(factors),
            level: Level { n, l },
        } => Output::expansion(fusion_product_classical(&factors, n, l)?.as_expansion()),
        Command::Qfusion {
            factors: Tuple(factors),
            level: Level { n, l },
            spin,
        } => Output::expansion(q_fusion_product(&factors, n, l, convention(spin))?.as_expansion()),
        Command::Rkostka {
            mu,
            lambda,
            level: Level { n, l },
        } => match lambda {
            Some(lambda) => Output::poly(&restricted_kostka(&lambda, &mu, n, l)?),
            None => Output::expansion(restricted_hall_littlewood(&mu, n, l)?.as_expansion()),
        },
        Command::Kbar {
            big_n,
            b,
            a,
            level_sum,
        } => {
            let k = if a == 0 {
                kbar_closed(big_n, b, level_sum)?
            } else {
                kbar_skew_closed(big_n, b, a, level_sum)?
            };
            Output::poly(&k)
        }
        Command::Virasoro { m, r, s, order } => {
            let label = VirasoroLabel::new(m, r, s)?;
            let chi = rocha_caridi(label, order)?;
            let (c, h) = (label.central_charge(), label.conformal_weight());
            Output {
                text: format!("c={c} h={h} q^-h*chi={} + O(q^{order})", chi.terms()),
                json: json!({ "c": c.to_string(), "h": h.to_string(), "order": order, "terms": chi.terms().to_json() }),
            }
        }
        Command::LimitCheck {
            a,
            b,
            level_sum,
            big_n,
            order,
        } => {
            let report = virasoro_limit_check(a, b, level_sum, big_n, order)?;
            let text = match report.first_mismatch {
                None => format!("agree through q^{order}"),
                Some(e) => format!("first mismatch at q^{e}"),
            };
            Output {
                text,
                json: json!({ "first_mismatch": report.first_mismatch, "order": order }),
            }
        }
        Command::Theta {
            level: Level { n, l },
            g,
            q,
        } => {
            if q {
                Output::poly(&theta_qdim(n, l, g)?)
            } else {
                let d = theta_dim(n, l, g)?;
                Output {
                    text: d.to_string(),
                    json: Value::String(d.to_string()),
                }
            }
        }
    })
}

fn parse_weight(s: &str) -> qfusion::Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| qfusion::Error::Parse(format!("bad weight entry {t:?}")))
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.to_string();
            eprintln!(
                "{}",
                msg.lines()
                    .find(|l| !l.trim().is_empty())
                    .unwrap_or("usage error")
            );
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", out.json),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
