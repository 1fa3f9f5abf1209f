//! Command-line frontend for the multiqsym kernel.
//!
//! Elements are read and written as JSON (see the library's `json` module for
//! the wire format); `--pretty` renders human-readable text instead. Exit
//! codes: 0 on success, 1 on a domain error (violated precondition, level
//! mismatch), 2 on malformed input.

use std::collections::BTreeSet;
use std::io::Read as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use multiqsym::coef::format_coef;
use multiqsym::comb::{ExtVec, LPartite, VectorComposition};
use multiqsym::functionals::Rule;
use multiqsym::json;
use multiqsym::posets::{ColoredPoset, MultigradedPoset};
use multiqsym::subalg::{GeneratorKind, OddEvenSpec, Parity};
use multiqsym::theta::{self, PeakPair};
use multiqsym::{
    fqsym, Error, FQSymElem, GradedFunctional, NSymBasis, NSymElem, QSymBasis, QSymElem,
};

#[derive(Parser)]
#[command(
    name = "multiqsym",
    about = "Exact arithmetic for multigraded quasisymmetric functions and friends",
    version
)]
struct Cli {
    /// Render human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements (same algebra and level).
    Mul {
        /// Output basis (QSym: M/F/P/eta; NSym: S/Phi/Upsilon).
        #[arg(long)]
        basis: Option<String>,
        /// First operand (JSON file, '-' for stdin).
        a: PathBuf,
        /// Second operand (JSON file, '-' for stdin).
        b: PathBuf,
    },
    /// Coproduct of an element.
    Comul {
        #[arg(long)]
        basis: Option<String>,
        a: PathBuf,
    },
    /// Antipode of an element.
    Antipode {
        #[arg(long)]
        basis: Option<String>,
        a: PathBuf,
    },
    /// Re-expand an element in another basis of the same algebra.
    Convert {
        /// Target basis.
        #[arg(long)]
        to: String,
        a: PathBuf,
    },
    /// Duality pairing of a noncommutative and a quasisymmetric element.
    Pair {
        /// NSym element.
        f: PathBuf,
        /// QSym element.
        g: PathBuf,
    },
    /// Evaluate a named functional on a quasisymmetric element.
    EvalFunctional {
        /// One of: zeta, zeta-bar, zeta-inv, zeta-k, nu-k, chi, epsilon.
        #[arg(long)]
        functional: String,
        /// Threshold vector for zeta-k / nu-k, e.g. '[4,"inf"]'.
        #[arg(long)]
        k: Option<String>,
        a: PathBuf,
    },
    /// Maps induced by functionals and peak functions.
    #[command(subcommand)]
    Theta(ThetaCmd),
    /// k-odd/k-even subalgebras and their orthogonal ideals.
    #[command(subcommand)]
    Subalg(SubalgCmd),
    /// Weight-graded dimension row of the k-odd subalgebra.
    Hilbert {
        #[arg(long)]
        level: usize,
        /// Threshold vector, e.g. '["inf"]' or '[4,0,3]'.
        #[arg(long)]
        k: String,
        #[arg(long)]
        max_weight: Option<u32>,
    },
    /// Multigraded and colored posets.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Free quasisymmetric operations.
    #[command(subcommand)]
    Fqsym(FqsymCmd),
}

#[derive(Subcommand)]
enum ThetaCmd {
    /// Apply the map induced by a functional to a quasisymmetric element.
    Apply {
        /// One of: zeta, zeta-bar, zeta-inv, zeta-k, nu-k, chi, epsilon.
        #[arg(long)]
        functional: String,
        #[arg(long)]
        k: Option<String>,
        /// Output basis (default M).
        #[arg(long)]
        basis: Option<String>,
        /// Input element (JSON file, '-' for stdin).
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Expand a peak function indexed by a peak set and a color word.
    Peak {
        /// Peak set as a JSON array, e.g. '[2]'.
        #[arg(long = "S")]
        s: String,
        /// Color word as a digit string, e.g. '010'.
        #[arg(long)]
        u: String,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        basis: Option<String>,
    },
}

#[derive(Args)]
struct SubalgSpecArgs {
    /// Subalgebra parity: odd or even.
    #[arg(long, default_value = "odd")]
    parity: String,
    /// Threshold vector, e.g. '[4,0,3]' or '["inf","inf"]'.
    #[arg(long)]
    k: String,
}

#[derive(Subcommand)]
enum SubalgCmd {
    /// Basis elements of one graded component.
    Basis {
        #[command(flatten)]
        spec: SubalgSpecArgs,
        /// Degree as a JSON vector, e.g. '[2,0,1]'.
        #[arg(long)]
        degree: String,
        /// Basis to expand in (odd: P or eta; even: M).
        #[arg(long)]
        basis: Option<String>,
    },
    /// Degreewise generators of the orthogonal ideal.
    Generators {
        #[command(flatten)]
        spec: SubalgSpecArgs,
        /// Generator family (odd: phi, upsilon, chi; even: s).
        #[arg(long, default_value = "phi")]
        kind: String,
        #[arg(long)]
        max_weight: Option<u32>,
        /// Basis to expand the generators in.
        #[arg(long)]
        basis: Option<String>,
    },
    /// Test membership of a quasisymmetric element in the subalgebra.
    Membership {
        #[command(flatten)]
        spec: SubalgSpecArgs,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Hilbert series of the subalgebra by multidegree.
    Hilbert {
        #[command(flatten)]
        spec: SubalgSpecArgs,
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        max_weight: Option<u32>,
        /// closed, enumerate, or both (cross-checked).
        #[arg(long, default_value = "closed")]
        mode: String,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Flag numbers of a multigraded poset.
    Flag {
        #[arg(long = "in")]
        input: PathBuf,
        /// Restrict to a single composition (JSON array of columns).
        #[arg(long)]
        composition: Option<String>,
    },
    /// Test whether a poset is k-Eulerian.
    Eulerian {
        #[arg(long = "in")]
        input: PathBuf,
        /// Threshold vector; defaults to all-infinity.
        #[arg(long)]
        k: Option<String>,
    },
    /// Generalized Dehn-Sommerville relations: list violations.
    Dehn {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: Option<String>,
    },
    /// Moebius function of the full interval.
    Mobius {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Quasisymmetric image of a multigraded poset.
    F {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        basis: Option<String>,
    },
    /// Quasisymmetric generating function of a colored poset.
    Gamma {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        basis: Option<String>,
    },
    /// Lattice of order ideals of a colored poset, as a multigraded poset.
    Jmap {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum FqsymCmd {
    /// Abelianize a free quasisymmetric element to QSym.
    D {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        basis: Option<String>,
    },
    /// The complete noncommutative generator of a multidegree, embedded.
    S {
        /// Multidegree as a JSON vector, e.g. '[2,1]'.
        #[arg(long)]
        n: String,
    },
    /// Sum of the linear extensions of a colored poset.
    GammaHat {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own diagnostic; usage errors are parse errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            e.print().expect("write clap diagnostics");
            std::process::exit(code);
        }
    };
    match run(&cli) {
        Ok(output) => {
            println!("{output}");
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn max_weight_default() -> u32 {
    std::env::var("MULTIQSYM_MAX_WEIGHT")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(10)
}

// ---------------------------------------------------------------------------
// Input plumbing
// ---------------------------------------------------------------------------

fn read_input(path: &PathBuf) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::parse(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::parse(format!("reading {}: {e}", path.display())))
    }
}

fn read_json(path: &PathBuf) -> Result<Value, Error> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| Error::parse(format!("invalid JSON: {e}")))
}

fn parse_json_arg(text: &str, what: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(|e| Error::parse(format!("invalid JSON in {what}: {e}")))
}

/// An element of any of the three algebras, tagged with its preferred
/// display basis.
enum AnyElem {
    Q(QSymElem),
    N(NSymElem),
    Fq(FQSymElem),
}

fn load_elem(path: &PathBuf) -> Result<(AnyElem, Option<String>), Error> {
    let v = read_json(path)?;
    let algebra = v
        .get("algebra")
        .and_then(Value::as_str)
        .unwrap_or("QSym")
        .to_string();
    let declared_basis = v
        .get("basis")
        .and_then(Value::as_str)
        .map(str::to_string);
    let elem = match algebra.as_str() {
        "QSym" => AnyElem::Q(json::qsym_from_value(&v)?),
        "NSym" => AnyElem::N(json::nsym_from_value(&v)?),
        "FQSym" => AnyElem::Fq(json::fqsym_from_value(&v)?),
        other => return Err(Error::parse(format!("unknown algebra {other:?}"))),
    };
    Ok((elem, declared_basis))
}

fn qsym_basis(name: Option<&str>, fallback: &str) -> Result<QSymBasis, Error> {
    QSymBasis::parse(name.unwrap_or(fallback))
}

fn nsym_basis(name: Option<&str>, fallback: &str) -> Result<NSymBasis, Error> {
    NSymBasis::parse(name.unwrap_or(fallback))
}

fn parse_extvec(text: &str, what: &str) -> Result<ExtVec, Error> {
    json::extvec_from_value(&parse_json_arg(text, what)?)
}

fn parse_lpartite(text: &str, what: &str) -> Result<LPartite, Error> {
    json::lpartite_from_value(&parse_json_arg(text, what)?)
}

fn parse_parity(s: &str) -> Result<Parity, Error> {
    match s {
        "odd" => Ok(Parity::Odd),
        "even" => Ok(Parity::Even),
        _ => Err(Error::parse(format!(
            "parity must be odd or even, got {s:?}"
        ))),
    }
}

fn build_functional(name: &str, k: Option<&str>, level: usize) -> Result<GradedFunctional, Error> {
    let need_k = || -> Result<ExtVec, Error> {
        let text = k.ok_or_else(|| Error::parse(format!("functional {name:?} requires --k")))?;
        parse_extvec(text, "--k")
    };
    let rule = match name {
        "epsilon" => Rule::Epsilon,
        "zeta" => Rule::Zeta,
        "zeta-bar" => Rule::ZetaBar,
        "zeta-inv" => Rule::ZetaInv,
        "zeta-k" => Rule::ZetaK(need_k()?),
        "nu-k" => Rule::NuK(need_k()?),
        "chi" => Rule::Chi,
        other => return Err(Error::parse(format!("unknown functional {other:?}"))),
    };
    GradedFunctional::new(level, rule)
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

fn emit_qsym(a: &QSymElem, basis: QSymBasis, pretty: bool) -> String {
    if pretty {
        json::pretty_qsym(a, basis)
    } else {
        json::qsym_to_value(a, basis).to_string()
    }
}

fn emit_nsym(a: &NSymElem, basis: NSymBasis, pretty: bool) -> String {
    if pretty {
        json::pretty_nsym(a, basis)
    } else {
        json::nsym_to_value(a, basis).to_string()
    }
}

fn emit_fqsym(a: &FQSymElem, pretty: bool) -> String {
    if pretty {
        json::pretty_fqsym(a)
    } else {
        json::fqsym_to_value(a).to_string()
    }
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

fn run(cli: &Cli) -> Result<String, Error> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Mul { basis, a, b } => {
            let (ea, da) = load_elem(a)?;
            let (eb, _) = load_elem(b)?;
            match (ea, eb) {
                (AnyElem::Q(x), AnyElem::Q(y)) => {
                    let out_basis =
                        qsym_basis(basis.as_deref(), da.as_deref().unwrap_or("M"))?;
                    Ok(emit_qsym(&x.mul(&y)?, out_basis, pretty))
                }
                (AnyElem::N(x), AnyElem::N(y)) => {
                    let out_basis =
                        nsym_basis(basis.as_deref(), da.as_deref().unwrap_or("S"))?;
                    Ok(emit_nsym(&x.mul(&y)?, out_basis, pretty))
                }
                (AnyElem::Fq(x), AnyElem::Fq(y)) => Ok(emit_fqsym(&x.mul(&y)?, pretty)),
                _ => Err(Error::precondition(
                    "operands must belong to the same algebra",
                )),
            }
        }
        Command::Comul { basis: _, a } => {
            let (ea, _) = load_elem(a)?;
            match ea {
                AnyElem::Q(x) => {
                    let t = x.coproduct();
                    Ok(if pretty {
                        json::pretty_qsym_tensor(&t)
                    } else {
                        json::qsym_tensor_to_value(&t).to_string()
                    })
                }
                AnyElem::N(x) => {
                    let t = x.coproduct();
                    Ok(if pretty {
                        json::pretty_nsym_tensor(&t)
                    } else {
                        json::nsym_tensor_to_value(&t).to_string()
                    })
                }
                AnyElem::Fq(x) => {
                    let t = x.coproduct()?;
                    Ok(if pretty {
                        json::pretty_fqsym_tensor(&t)
                    } else {
                        json::fqsym_tensor_to_value(&t).to_string()
                    })
                }
            }
        }
        Command::Antipode { basis, a } => {
            let (ea, da) = load_elem(a)?;
            match ea {
                AnyElem::Q(x) => {
                    let out_basis =
                        qsym_basis(basis.as_deref(), da.as_deref().unwrap_or("M"))?;
                    Ok(emit_qsym(&x.antipode(), out_basis, pretty))
                }
                AnyElem::N(x) => {
                    let out_basis =
                        nsym_basis(basis.as_deref(), da.as_deref().unwrap_or("S"))?;
                    Ok(emit_nsym(&x.antipode(), out_basis, pretty))
                }
                AnyElem::Fq(x) => Ok(emit_fqsym(&x.antipode()?, pretty)),
            }
        }
        Command::Convert { to, a } => {
            let (ea, _) = load_elem(a)?;
            match ea {
                AnyElem::Q(x) => Ok(emit_qsym(&x, QSymBasis::parse(to)?, pretty)),
                AnyElem::N(x) => Ok(emit_nsym(&x, NSymBasis::parse(to)?, pretty)),
                AnyElem::Fq(_) => Err(Error::precondition(
                    "free quasisymmetric elements have a single basis",
                )),
            }
        }
        Command::Pair { f, g } => {
            let (ef, _) = load_elem(f)?;
            let (eg, _) = load_elem(g)?;
            let (AnyElem::N(x), AnyElem::Q(y)) = (ef, eg) else {
                return Err(Error::precondition(
                    "pair expects an NSym element then a QSym element",
                ));
            };
            let v = x.pair(&y)?;
            Ok(if pretty {
                format_coef(&v)
            } else {
                serde_json::json!({ "value": format_coef(&v) }).to_string()
            })
        }
        Command::EvalFunctional { functional, k, a } => {
            let (ea, _) = load_elem(a)?;
            let AnyElem::Q(x) = ea else {
                return Err(Error::precondition(
                    "functionals act on quasisymmetric elements",
                ));
            };
            let f = build_functional(functional, k.as_deref(), x.level())?;
            let v = f.evaluate(&x)?;
            Ok(if pretty {
                format_coef(&v)
            } else {
                serde_json::json!({ "value": format_coef(&v) }).to_string()
            })
        }
        Command::Theta(cmd) => run_theta(cmd, pretty),
        Command::Subalg(cmd) => run_subalg(cmd, pretty),
        Command::Hilbert {
            level,
            k,
            max_weight,
        } => {
            let k = parse_extvec(k, "--k")?;
            let spec = OddEvenSpec::new(*level, k, Parity::Odd)?;
            let mw = max_weight.unwrap_or_else(max_weight_default);
            let series = spec.hilbert_closed(mw)?;
            let row = multiqsym::subalg::weight_graded(&series, mw);
            Ok(if pretty {
                row.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            } else {
                Value::Array(
                    row.iter()
                        .map(|c| Value::String(c.to_string()))
                        .collect(),
                )
                .to_string()
            })
        }
        Command::Poset(cmd) => run_poset(cmd, pretty),
        Command::Fqsym(cmd) => run_fqsym(cmd, pretty),
    }
}

fn run_theta(cmd: &ThetaCmd, pretty: bool) -> Result<String, Error> {
    match cmd {
        ThetaCmd::Apply {
            functional,
            k,
            basis,
            input,
        } => {
            let (ea, _) = load_elem(input)?;
            let AnyElem::Q(x) = ea else {
                return Err(Error::precondition(
                    "induced maps act on quasisymmetric elements",
                ));
            };
            let f = build_functional(functional, k.as_deref(), x.level())?;
            let out = theta::induced_map(&f, &x)?;
            let out_basis = qsym_basis(basis.as_deref(), "M")?;
            Ok(emit_qsym(&out, out_basis, pretty))
        }
        ThetaCmd::Peak { s, u, level, basis } => {
            let sv = parse_json_arg(s, "--S")?;
            let set: BTreeSet<usize> = sv
                .as_array()
                .ok_or_else(|| Error::parse("--S must be a JSON array"))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .map(|n| n as usize)
                        .ok_or_else(|| Error::parse("--S entries must be naturals"))
                })
                .collect::<Result<_, Error>>()?;
            let word: Vec<u8> = u
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::parse("--u must be a digit string"))
                })
                .collect::<Result<_, Error>>()?;
            let pair = PeakPair::new(set, word)?;
            let out = theta::peak_function(*level, &pair)?;
            let out_basis = qsym_basis(basis.as_deref(), "M")?;
            Ok(emit_qsym(&out, out_basis, pretty))
        }
    }
}

fn parse_spec(args: &SubalgSpecArgs, level: Option<usize>) -> Result<OddEvenSpec, Error> {
    let k = parse_extvec(&args.k, "--k")?;
    let level = level.unwrap_or_else(|| k.level());
    OddEvenSpec::new(level, k, parse_parity(&args.parity)?)
}

fn run_subalg(cmd: &SubalgCmd, pretty: bool) -> Result<String, Error> {
    match cmd {
        SubalgCmd::Basis {
            spec,
            degree,
            basis,
        } => {
            let parity = parse_parity(&spec.parity)?;
            let spec = parse_spec(spec, None)?;
            let n = parse_lpartite(degree, "--degree")?;
            let fallback = match parity {
                Parity::Odd => "P",
                Parity::Even => "M",
            };
            let b = qsym_basis(basis.as_deref(), fallback)?;
            let elems = spec.basis_elements(&n, b)?;
            if pretty {
                Ok(elems
                    .iter()
                    .map(|e| json::pretty_qsym(e, b))
                    .collect::<Vec<_>>()
                    .join("\n"))
            } else {
                Ok(Value::Array(
                    elems.iter().map(|e| json::qsym_to_value(e, b)).collect(),
                )
                .to_string())
            }
        }
        SubalgCmd::Generators {
            spec,
            kind,
            max_weight,
            basis,
        } => {
            let parity = parse_parity(&spec.parity)?;
            let spec = parse_spec(spec, None)?;
            let kind = match (parity, kind.as_str()) {
                (Parity::Odd, "phi") => GeneratorKind::Phi,
                (Parity::Odd, "upsilon") => GeneratorKind::Upsilon,
                (Parity::Odd, "chi") => GeneratorKind::Chi,
                (Parity::Even, "s" | "S") => GeneratorKind::Complete,
                (_, other) => {
                    return Err(Error::parse(format!(
                        "generator kind {other:?} not available for this parity"
                    )))
                }
            };
            let mw = max_weight.unwrap_or_else(max_weight_default);
            let gens = spec.ideal_generators(kind, mw)?;
            let b = nsym_basis(basis.as_deref(), "S")?;
            if pretty {
                Ok(gens
                    .iter()
                    .map(|(n, g)| format!("{:?}: {}", n.0, json::pretty_nsym(g, b)))
                    .collect::<Vec<_>>()
                    .join("\n"))
            } else {
                Ok(Value::Array(
                    gens.iter()
                        .map(|(n, g)| {
                            serde_json::json!({
                                "degree": json::lpartite_to_value(n),
                                "generator": json::nsym_to_value(g, b),
                            })
                        })
                        .collect(),
                )
                .to_string())
            }
        }
        SubalgCmd::Membership { spec, input } => {
            let spec = parse_spec(spec, None)?;
            let (ea, _) = load_elem(input)?;
            let AnyElem::Q(x) = ea else {
                return Err(Error::precondition(
                    "membership applies to quasisymmetric elements",
                ));
            };
            let member = spec.membership(&x)?;
            Ok(if pretty {
                format!("{member}")
            } else {
                serde_json::json!({ "member": member }).to_string()
            })
        }
        SubalgCmd::Hilbert {
            spec,
            level,
            max_weight,
            mode,
        } => {
            let spec = parse_spec(spec, *level)?;
            let mw = max_weight.unwrap_or_else(max_weight_default);
            let series = match mode.as_str() {
                "closed" => spec.hilbert_closed(mw)?,
                "enumerate" => spec.hilbert_enumerate(mw)?,
                "both" => {
                    let closed = spec.hilbert_closed(mw)?;
                    let enumerated = spec.hilbert_enumerate(mw)?;
                    if closed != enumerated {
                        return Err(Error::precondition(
                            "closed-form and enumerated Hilbert series disagree",
                        ));
                    }
                    closed
                }
                other => {
                    return Err(Error::parse(format!(
                        "mode must be closed, enumerate, or both, got {other:?}"
                    )))
                }
            };
            if pretty {
                let row = multiqsym::subalg::weight_graded(&series, mw);
                Ok(row
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", "))
            } else {
                Ok(json::series_to_value(&series).to_string())
            }
        }
    }
}

fn load_multigraded(path: &PathBuf) -> Result<MultigradedPoset, Error> {
    json::multigraded_poset_from_value(&read_json(path)?)
}

fn load_colored(path: &PathBuf) -> Result<ColoredPoset, Error> {
    json::colored_poset_from_value(&read_json(path)?)
}

fn run_poset(cmd: &PosetCmd, pretty: bool) -> Result<String, Error> {
    match cmd {
        PosetCmd::Flag { input, composition } => {
            let p = load_multigraded(input)?;
            let rows: Vec<(VectorComposition, u64)> = match composition {
                Some(text) => {
                    let i = json::composition_from_value(
                        p.level(),
                        &parse_json_arg(text, "--composition")?,
                    )?;
                    let count = p.flag_f(&i)?;
                    vec![(i, count)]
                }
                None => {
                    let rank = p.multirank();
                    if rank.weight() > max_weight_default() {
                        return Err(Error::precondition(
                            "poset rank exceeds MULTIQSYM_MAX_WEIGHT; pass --composition",
                        ));
                    }
                    VectorComposition::compositions_of(&rank)
                        .into_iter()
                        .map(|i| p.flag_f(&i).map(|c| (i, c)))
                        .collect::<Result<_, Error>>()?
                }
            };
            if pretty {
                Ok(rows
                    .iter()
                    .map(|(i, c)| {
                        format!(
                            "{}: {c}",
                            serde_json::to_string(&json::composition_to_value(i))
                                .expect("composition")
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n"))
            } else {
                Ok(json::flag_table_to_value(&rows).to_string())
            }
        }
        PosetCmd::Eulerian { input, k } => {
            let p = load_multigraded(input)?;
            let k = match k {
                Some(text) => parse_extvec(text, "--k")?,
                None => ExtVec::inf(p.level()),
            };
            let ok = p.is_k_eulerian(&k)?;
            Ok(if pretty {
                format!("{ok}")
            } else {
                serde_json::json!({ "eulerian": ok }).to_string()
            })
        }
        PosetCmd::Dehn { input, k } => {
            let p = load_multigraded(input)?;
            let k = match k {
                Some(text) => parse_extvec(text, "--k")?,
                None => ExtVec::inf(p.level()),
            };
            let violations = p.dehn_sommerville_check(&k)?;
            if pretty {
                if violations.is_empty() {
                    Ok("no violations".to_string())
                } else {
                    Ok(violations
                        .iter()
                        .map(|(i, pos)| {
                            format!(
                                "{} at column {pos}",
                                serde_json::to_string(&json::composition_to_value(i))
                                    .expect("composition")
                            )
                        })
                        .collect::<Vec<_>>()
                        .join("\n"))
                }
            } else {
                Ok(Value::Array(
                    violations
                        .iter()
                        .map(|(i, pos)| {
                            serde_json::json!({
                                "composition": json::composition_to_value(i),
                                "column": pos,
                            })
                        })
                        .collect(),
                )
                .to_string())
            }
        }
        PosetCmd::Mobius { input } => {
            let p = load_multigraded(input)?;
            let mu = p.mobius();
            Ok(if pretty {
                format!("{mu}")
            } else {
                serde_json::json!({ "mobius": mu }).to_string()
            })
        }
        PosetCmd::F { input, basis } => {
            let p = load_multigraded(input)?;
            let out = p.f_homomorphism()?;
            let b = qsym_basis(basis.as_deref(), "M")?;
            Ok(emit_qsym(&out, b, pretty))
        }
        PosetCmd::Gamma { input, basis } => {
            let p = load_colored(input)?;
            let out = p.gamma()?;
            let b = qsym_basis(basis.as_deref(), "M")?;
            Ok(emit_qsym(&out, b, pretty))
        }
        PosetCmd::Jmap { input } => {
            let p = load_colored(input)?;
            let j = p.j_map()?;
            Ok(json::multigraded_poset_to_value(&j).to_string())
        }
    }
}

fn run_fqsym(cmd: &FqsymCmd, pretty: bool) -> Result<String, Error> {
    match cmd {
        FqsymCmd::D { input, basis } => {
            let (ea, _) = load_elem(input)?;
            let AnyElem::Fq(x) = ea else {
                return Err(Error::precondition(
                    "expected a free quasisymmetric element",
                ));
            };
            let out = x.d_map()?;
            let b = qsym_basis(basis.as_deref(), "M")?;
            Ok(emit_qsym(&out, b, pretty))
        }
        FqsymCmd::S { n } => {
            let n = parse_lpartite(n, "--n")?;
            let out = fqsym::s_embed(&n)?;
            Ok(emit_fqsym(&out, pretty))
        }
        FqsymCmd::GammaHat { input } => {
            let p = load_colored(input)?;
            let out = fqsym::gamma_hat(&p)?;
            Ok(emit_fqsym(&out, pretty))
        }
    }
}
