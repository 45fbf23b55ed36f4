//! Batch command-line surface over the limweight library: classification,
//! support and highest-weight queries, branching, degrees, annihilator
//! labels, and the verification harness.
//!
//! JSON goes to stdout, a one-line summary to stderr. Exit codes: 0 success,
//! 1 verification failure, 2 parse error, 3 violated hypothesis or
//! unsupported input.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use limweight::branching::{branch_xsl, branch_xsp};
use limweight::classify::{hw_test_xsl, hw_test_xsp, iso_xsl, HwCertificate};
use limweight::degrees::GtEngine;
use limweight::limits::{
    annihilator_label, classify_sl, five_type, hw_test_limit, iso_limit, Algebra, LimitHw,
    LimitKind, LimitModuleDescriptor, Sided,
};
use limweight::limits::support_oracle;
use limweight::parse;
use limweight::verify::{run_suite, SUITES};
use limweight::borel::BorelDescriptor;
use limweight::setdesc::SetDescriptor;
use limweight::weight::Weight;
use limweight::{Error, Result};

#[derive(Parser)]
#[command(name = "limweight", version, about = "bounded weight modules of finitary Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the module described by a weight sequence.
    Classify {
        #[arg(long, default_value = "sl")]
        alg: String,
        #[arg(long)]
        mu: String,
    },
    /// Membership of a weight sequence in the support of a module.
    Support {
        #[arg(long, default_value = "sl")]
        alg: String,
        /// module descriptor, e.g. "SV[2,1]" or "XSl[[1,2; tail=0]]"
        #[arg(long)]
        module: String,
        #[arg(long)]
        lambda: String,
    },
    /// Restrict a finite-rank X(mu) one level down.
    Branch {
        #[arg(long, default_value = "sl")]
        alg: String,
        /// finite weight, e.g. "(-1,1,0)"
        #[arg(long)]
        mu: String,
        /// summand window radius
        #[arg(long, default_value_t = 6)]
        r#box: i64,
    },
    /// Dimension and degree of the finite-dimensional gl module L(lambda).
    Degree {
        #[arg(long)]
        lambda: String,
    },
    /// Highest-weight test against a Borel descriptor.
    Hw {
        #[arg(long, default_value = "sl")]
        alg: String,
        /// weight sequence for the limit test, or a finite weight with --rank
        #[arg(long)]
        mu: String,
        /// Borel order descriptor; defaults to the natural order
        #[arg(long)]
        borel: Option<String>,
        /// run the finite-rank test instead of the limit test
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Isomorphism of two modules given by weight sequences or descriptors.
    Iso {
        #[arg(long, default_value = "sl")]
        alg: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// compare finite-rank X modules as sl (not gl) modules
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Annihilator label of a module descriptor.
    Annihilator {
        #[arg(long, default_value = "sl")]
        alg: String,
        #[arg(long)]
        module: String,
    },
    /// Run a verification suite ("all" for every suite).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

fn kind_name(k: &LimitKind) -> &'static str {
    match k {
        LimitKind::Trivial => "Trivial",
        LimitKind::Natural => "Natural",
        LimitKind::Conatural => "Conatural",
        LimitKind::SemiInfExterior(_) => "SemiInfExterior",
        LimitKind::SInfV(_) => "SInfV",
        LimitKind::SInfVStar(_) => "SInfVStar",
        LimitKind::SPartV(_) => "SPartV",
        LimitKind::SPartVStar(_) => "SPartVStar",
        LimitKind::XSlInf(_) => "XSlInf",
        LimitKind::XSpInf(_) => "XSpInf",
        LimitKind::SpinorB(_) => "SpinorB",
        LimitKind::SpinorD(_) => "SpinorD",
    }
}

fn parse_finite_weight(src: &str) -> Result<Weight> {
    parse::parse_weight(src)
}

fn parse_int_row(src: &str) -> Result<Vec<i64>> {
    src.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse { pos: 0, msg: format!("bad integer {:?}", s) })
        })
        .collect()
}

fn classify_descriptor(alg: Algebra, mu_src: &str) -> Result<LimitModuleDescriptor> {
    let mu = parse::parse_weight_seq(mu_src)?;
    match alg {
        Algebra::Sl => classify_sl(&mu),
        Algebra::Sp => LimitModuleDescriptor::new(Algebra::Sp, LimitKind::XSpInf(mu)),
        _ => Err(Error::NotSupported(
            "o(inf) has no X-module realization; pass a module descriptor instead".into(),
        )),
    }
}

fn hw_json(hw: &LimitHw) -> Value {
    match hw {
        LimitHw::HighestWeight { weight, sided } => json!({
            "result": "HighestWeight",
            "sided": sided.map(|s| match s {
                Sided::OneSided => "one-sided",
                Sided::TwoSided => "two-sided",
            }),
            "weight": weight.to_string(),
        }),
        LimitHw::PseudoHighestWeight => json!({ "result": "PseudoHighestWeight" }),
        LimitHw::Neither => json!({ "result": "Neither" }),
    }
}

fn cert_json(cert: Option<HwCertificate>) -> Value {
    match cert {
        None => json!({ "result": "NotHighestWeight" }),
        Some(c) => json!({
            "result": "HighestWeight",
            "weight": c.hw_weight().to_string(),
        }),
    }
}

/// (json, stderr summary, exit code)
fn run(cmd: Command) -> Result<(Value, String, i32)> {
    match cmd {
        Command::Classify { alg, mu } => {
            let alg = parse::parse_algebra(&alg)?;
            let d = classify_descriptor(alg, &mu)?;
            let integrable = match alg {
                Algebra::Sl => json!(five_type(&d).is_ok()),
                _ => Value::Null,
            };
            let ann = annihilator_label(&d)?;
            let summary = format!("{} -> {}", mu, d);
            Ok((
                json!({
                    "family": kind_name(&d.kind),
                    "integrable": integrable,
                    "annihilator": ann.to_string(),
                }),
                summary,
                0,
            ))
        }
        Command::Support { alg, module, lambda } => {
            let alg = parse::parse_algebra(&alg)?;
            let d = parse::parse_module(&module, alg)?;
            let lam = parse::parse_weight_seq(&lambda)?;
            let member = support_oracle(&d, &lam)?;
            Ok((
                json!({ "module": d.to_string(), "lambda": lam.to_string(), "member": member }),
                format!("{} in supp {}: {}", lam, d, member),
                0,
            ))
        }
        Command::Branch { alg, mu, r#box } => {
            let alg = parse::parse_algebra(&alg)?;
            let mu = parse_finite_weight(&mu)?;
            let summands = match alg {
                Algebra::Sl => branch_xsl(&mu, r#box)?,
                Algebra::Sp => branch_xsp(&mu, r#box)?,
                _ => return Err(Error::NotSupported("branch handles sl and sp".into())),
            };
            let rows: Vec<Value> = summands
                .iter()
                .map(|s| {
                    json!({
                        "mu": s.module.mu.to_string(),
                        "charge": s.charge.to_string(),
                        "k": s.k,
                    })
                })
                .collect();
            Ok((
                json!({ "mu": mu.to_string(), "summands": rows }),
                format!("{} summands in the window", summands.len()),
                0,
            ))
        }
        Command::Degree { lambda } => {
            let row = parse_int_row(&lambda)?;
            let mut engine = GtEngine::new();
            let dim = engine.dim(&row)?;
            let deg = engine.deg(&row)?;
            Ok((
                json!({ "dim": dim, "deg": deg }),
                format!("L({}) has dim {} and degree {}", lambda, dim, deg),
                0,
            ))
        }
        Command::Hw { alg, mu, borel, rank } => {
            let alg = parse::parse_algebra(&alg)?;
            let b = match &borel {
                Some(src) => parse::parse_borel(src)?,
                None => match alg {
                    Algebra::Sp => BorelDescriptor::natural_signed(SetDescriptor::all()),
                    _ => BorelDescriptor::natural(),
                },
            };
            match rank {
                None => {
                    let d = classify_descriptor(alg, &mu)?;
                    let hw = hw_test_limit(&d, &b)?;
                    Ok((hw_json(&hw), format!("{} | {}", d, b), 0))
                }
                Some(n) => {
                    let w = parse_finite_weight(&mu)?;
                    if w.rank() != n {
                        return Err(Error::RankMismatch { expected: n, got: w.rank() });
                    }
                    let cert = match alg {
                        Algebra::Sl => hw_test_xsl(&w, &b)?,
                        Algebra::Sp => hw_test_xsp(&w, &b)?,
                        _ => return Err(Error::NotSupported("finite hw handles sl and sp".into())),
                    };
                    Ok((cert_json(cert), format!("X({}) | {}", w, b), 0))
                }
            }
        }
        Command::Iso { alg, a, b, rank } => {
            let alg = parse::parse_algebra(&alg)?;
            let iso = match rank {
                None => {
                    let da = parse::parse_module(&a, alg)?;
                    let db = parse::parse_module(&b, alg)?;
                    iso_limit(&da, &db)?
                }
                Some(_) => {
                    let wa = parse_finite_weight(&a)?;
                    let wb = parse_finite_weight(&b)?;
                    iso_xsl(&wa, &wb, matches!(alg, Algebra::Sl))?
                }
            };
            Ok((json!({ "isomorphic": iso }), format!("isomorphic: {}", iso), 0))
        }
        Command::Annihilator { alg, module } => {
            let alg = parse::parse_algebra(&alg)?;
            let d = parse::parse_module(&module, alg)?;
            let ann = annihilator_label(&d)?;
            Ok((
                json!({ "module": d.to_string(), "annihilator": ann.to_string() }),
                format!("Ann {} = {}", d, ann),
                0,
            ))
        }
        Command::Verify { suite, seed } => {
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![SUITES
                    .iter()
                    .find(|s| **s == suite)
                    .copied()
                    .ok_or_else(|| Error::NotSupported(format!("unknown suite {:?}", suite)))?]
            };
            let mut reports = Vec::new();
            let mut all_ok = true;
            for name in names {
                let r = run_suite(name, seed)?;
                all_ok &= r.ok();
                reports.push(json!({
                    "suite": r.name,
                    "seed": r.seed,
                    "checked": r.checked,
                    "ok": r.ok(),
                    "failures": r.failures,
                }));
            }
            let summary = if all_ok {
                "all suites passed".to_string()
            } else {
                "verification FAILED".to_string()
            };
            Ok((json!({ "reports": reports }), summary, if all_ok { 0 } else { 1 }))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((value, summary, code)) => {
            println!("{}", value);
            eprintln!("{}", summary);
            std::process::exit(code);
        }
        Err(e) => {
            let code = match e {
                Error::Parse { .. } => 2,
                _ => 3,
            };
            eprintln!("error: {}", e);
            std::process::exit(code);
        }
    }
}
