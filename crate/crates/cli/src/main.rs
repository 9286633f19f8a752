use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use satake_core::hecke::{convolve, inverse_satake, normalized_satake, satake};
use satake_core::json::{self as j, bigint_value};
use satake_core::plattice::{convolution_oracle, inv_pair, parse_rational, schubert_count, structure_constants, PLattice};
use satake_core::repring::{dimension, tensor, weight_multiplicity};
use satake_core::symfunc::{expand_in_schur, from_schur_expansion};
use satake_core::tate::{h_operator, tate_dimension, v_binomial, TateConfig};
use satake_core::trace_k::KTrace;
use satake_core::{checks, Error, SymPoly, Weight};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "satake", version, about = "Exact Satake transforms, Hecke convolution and lattice counts for GL_n")]
struct Cli {
    /// Emit the structured JSON shape instead of the compact weight map.
    #[arg(long, global = true)]
    structured: bool,

    /// Basis for symmetric-function input and output.
    #[arg(long, global = true, value_enum, default_value_t = Basis::Monomial)]
    basis: Basis,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Monomial,
    Schur,
}

#[derive(Subcommand)]
enum Verb {
    /// Satake transform of a Hecke element.
    Satake {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
    },
    /// Hecke element with the given Satake transform.
    InvSatake {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        f: String,
    },
    /// Convolution product of two Hecke elements.
    Conv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Normalized transform `T_μ ↦ P_μ(x; v^-2)`.
    Normalize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
    },
    /// Tensor product of representation classes.
    Tensor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Multiplicity of the weight `lam` in `V_mu`.
    WeightMult {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        lam: String,
    },
    /// Dimension of `V_mu`.
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: String,
    },
    /// S-operator of a representation class.
    SOp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
    },
    /// The scalar `1 → V ⊗ V* → 1`.
    SPairing {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: String,
    },
    /// Dimension of `V_mu^Tate`.
    TateDim {
        /// JSON file with `n`, `center`, `sigma` and optional `gl_rank`.
        #[arg(long, conflicts_with = "preset")]
        config: Option<String>,
        /// `gu:<r>` or `odd-unitary:<n>`.
        #[arg(long)]
        preset: Option<String>,
        /// Highest weight; defaults to the preset's standard weight.
        #[arg(long)]
        mu: Option<String>,
    },
    /// The unitary Hecke element `h` for `GU(1, 2r)`.
    HOp {
        #[arg(long)]
        r: usize,
    },
    /// Gaussian binomial `[n over m]_v`.
    Qbinom {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        m: i64,
    },
    /// Relative position of two lattices given by basis matrices.
    Inv {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Number of lattices in relative position `mu` to the standard one.
    Count {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: String,
    },
    /// Structure constants of `T_lam * T_mu` from lattice counts.
    Oracle {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: Option<String>,
    },
    /// Run a named bundle of identities.
    Check {
        #[arg(value_parser = checks::SUITES)]
        suite: String,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Schema(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Schema(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type Out = std::result::Result<Value, Failure>;

fn parse_json(s: &str) -> std::result::Result<Value, Failure> {
    serde_json::from_str(s).map_err(|e| Failure::Schema(format!("invalid JSON: {e}")))
}

fn weight(s: &str, n: usize) -> std::result::Result<Weight, Failure> {
    let w: Weight = s.parse()?;
    if w.rank() != n {
        return Err(Failure::Schema(format!("weight {s} has rank {}, expected {n}", w.rank())));
    }
    Ok(w)
}

fn sympoly_in(cli: &Cli, s: &str, n: usize) -> std::result::Result<SymPoly, Failure> {
    let v = parse_json(s)?;
    let f = j::sympoly_from_json(&v, Some(n))?;
    if f.rank() != n {
        return Err(Failure::Schema(format!("input has rank {}, expected {n}", f.rank())));
    }
    Ok(match cli.basis {
        Basis::Monomial => f,
        Basis::Schur => from_schur_expansion(n, &f.terms().map(|(w, c)| (w.clone(), c.clone())).collect())?,
    })
}

fn sympoly_out(cli: &Cli, f: &SymPoly) -> Out {
    Ok(match cli.basis {
        Basis::Monomial => j::sympoly_to_json(f, cli.structured),
        Basis::Schur => {
            let coeffs: BTreeMap<_, _> = expand_in_schur(f);
            j::sympoly_to_json(&SymPoly::from_terms(f.rank(), coeffs)?, cli.structured)
        }
    })
}

fn hecke_in(s: &str, n: usize) -> std::result::Result<satake_core::hecke::HeckeElement, Failure> {
    let h = j::hecke_from_json(&parse_json(s)?, Some(n))?;
    if h.rank() != n {
        return Err(Failure::Schema(format!("input has rank {}, expected {n}", h.rank())));
    }
    Ok(h)
}

fn rep_in(s: &str, n: usize) -> std::result::Result<satake_core::repring::RepElement, Failure> {
    let r = j::rep_from_json(&parse_json(s)?, Some(n))?;
    if r.rank() != n {
        return Err(Failure::Schema(format!("input has rank {}, expected {n}", r.rank())));
    }
    Ok(r)
}

/// A basis matrix: JSON rows of integers or `"a/b"` strings.
fn matrix_in(s: &str) -> std::result::Result<Vec<Vec<BigRational>>, Failure> {
    let v = parse_json(s)?;
    let rows = v.as_array().ok_or_else(|| Failure::Schema("matrix must be an array of rows".into()))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Failure::Schema("matrix rows must be arrays".into()))?
                .iter()
                .map(|x| match x {
                    Value::Number(_) => Ok(parse_rational(&x.to_string())?),
                    Value::String(s) => Ok(parse_rational(s)?),
                    other => Err(Failure::Schema(format!("matrix entry {other} is not a rational"))),
                })
                .collect()
        })
        .collect()
}

fn tate_config(config: &Option<String>, preset: &Option<String>) -> std::result::Result<(TateConfig, Option<Weight>), Failure> {
    if let Some(path) = config {
        let text = fs::read_to_string(path).map_err(|e| Failure::Schema(format!("cannot read {path}: {e}")))?;
        let cfg: TateConfig = serde_json::from_str(&text).map_err(|e| Failure::Schema(format!("bad config: {e}")))?;
        return Ok((cfg, None));
    }
    let preset = preset.as_deref().ok_or_else(|| Failure::Schema("tate-dim needs --config or --preset".into()))?;
    let (kind, arg) = preset
        .split_once(':')
        .ok_or_else(|| Failure::Schema(format!("preset {preset:?} must look like gu:<r> or odd-unitary:<n>")))?;
    let k: usize = arg.parse().map_err(|_| Failure::Schema(format!("bad preset argument {arg:?}")))?;
    match kind {
        "gu" => Ok((TateConfig::gu_similitude(k)?, Some(TateConfig::gu_similitude_weight(k)))),
        "odd-unitary" => Ok((TateConfig::odd_unitary(k)?, None)),
        other => Err(Failure::Schema(format!("unknown preset {other:?}"))),
    }
}

fn run(cli: &Cli) -> Out {
    match &cli.verb {
        Verb::Satake { n, a } => sympoly_out(cli, &satake(&hecke_in(a, *n)?)?),
        Verb::InvSatake { n, f } => Ok(j::hecke_to_json(&inverse_satake(&sympoly_in(cli, f, *n)?)?, cli.structured)),
        Verb::Conv { n, a, b } => {
            Ok(j::hecke_to_json(&convolve(&hecke_in(a, *n)?, &hecke_in(b, *n)?)?, cli.structured))
        }
        Verb::Normalize { n, a } => sympoly_out(cli, &normalized_satake(&hecke_in(a, *n)?)?),
        Verb::Tensor { n, a, b } => Ok(j::rep_to_json(&tensor(&rep_in(a, *n)?, &rep_in(b, *n)?)?, cli.structured)),
        Verb::WeightMult { n, mu, lam } => Ok(json!(weight_multiplicity(&weight(mu, *n)?, &weight(lam, *n)?)?)),
        Verb::Dim { n, mu } => Ok(bigint_value(&dimension(&weight(mu, *n)?)?)),
        Verb::SOp { n, a } => {
            let jel = KTrace::split(*n).s_operator(&rep_in(a, *n)?)?;
            match cli.basis {
                Basis::Monomial => Ok(j::jelement_to_json(&jel, cli.structured)),
                Basis::Schur => sympoly_out(cli, jel.value()),
            }
        }
        Verb::SPairing { n, mu } => {
            let s = KTrace::split(*n).s_pairing(&weight(mu, *n)?)?;
            Ok(s.as_integer().map(|k| bigint_value(&k)).unwrap_or_else(|| j::scalar_to_json(&s, "v")))
        }
        Verb::TateDim { config, preset, mu } => {
            let (cfg, default_mu) = tate_config(config, preset)?;
            let mu = match (mu, default_mu) {
                (Some(s), _) => weight(s, cfg.rank())?,
                (None, Some(w)) => w,
                (None, None) => return Err(Failure::Schema("tate-dim needs --mu for this configuration".into())),
            };
            Ok(json!(tate_dimension(&mu, &cfg)?))
        }
        Verb::HOp { r } => Ok(j::formal_hecke_to_json(&h_operator(*r)?, cli.structured)),
        Verb::Qbinom { n, m } => {
            let b = v_binomial(*n, *m)?;
            Ok(if cli.structured { j::scalar_structured(&b) } else { j::scalar_to_json(&b, "v") })
        }
        Verb::Inv { p, a, b } => {
            let l1 = PLattice::new(*p, matrix_in(a)?)?;
            let l2 = PLattice::new(*p, matrix_in(b)?)?;
            Ok(j::weight_to_json(&inv_pair(&l1, &l2)?))
        }
        Verb::Count { p, n, mu } => Ok(json!(schubert_count(&weight(mu, *n)?, *p, *n)?)),
        Verb::Oracle { p, lam, mu, nu } => {
            let lam: Weight = lam.parse()?;
            let n = lam.rank();
            let mu = weight(mu, n)?;
            match nu {
                Some(nu) => Ok(json!(convolution_oracle(&lam, &mu, &weight(nu, n)?, *p)?)),
                None => {
                    let mut m = serde_json::Map::new();
                    for (nu, c) in structure_constants(&lam, &mu, *p)?.into_iter().rev() {
                        m.insert(nu.to_string(), json!(c));
                    }
                    Ok(Value::Object(m))
                }
            }
        }
        Verb::Check { .. } => unreachable!("handled separately"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            println!("{}", json!({"error": first}));
            return ExitCode::from(2);
        }
    };
    if let Verb::Check { suite, json } = &cli.verb {
        return match checks::run(suite) {
            Ok(report) => {
                if *json {
                    println!("{}", serde_json::to_string(&report).expect("reports serialize"));
                } else {
                    print!("{}", report.table());
                }
                match report.first_failure() {
                    None => ExitCode::SUCCESS,
                    Some(row) => {
                        if !*json {
                            println!("first failure: {}", row.name);
                        }
                        ExitCode::from(1)
                    }
                }
            }
            Err(e) => {
                println!("{}", json!({"error": e.to_string()}));
                ExitCode::from(1)
            }
        };
    }
    match run(&cli) {
        Ok(v) => {
            println!("{}", serde_json::to_string(&v).expect("values serialize"));
            ExitCode::SUCCESS
        }
        Err(Failure::Schema(msg)) => {
            println!("{}", json!({"error": msg}));
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            println!("{}", json!({"error": msg}));
            ExitCode::from(1)
        }
    }
}
