//! The `locfree` command line.
//!
//! ```text
//! locfree symbol {legendre A P | kronecker A N | hilbert A B [--place P|inf]}
//! locfree quat {ramified A B | bpinf P | nrd A B t x y z}
//! locfree order {disc P | classset P | classnumber P}
//! locfree quadclass D [--narrow]
//! locfree lfcg {swan (--spec FILE | --bp P) | eichler (--spec FILE | --bp P)
//!              | cancel --range A..B [--verify] | stable P}
//! ```
//!
//! Every subcommand accepts `--json`. Exit status is 0 on success, 2 on a
//! usage error and 1 when the input violates a mathematical precondition.

use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::latorder::{class_set, eichler_class_number, lambda, unit_count};
use crate::lfcg::{
    cancellation_table, eichler_condition, stable_class, stably_isomorphic, swan_class_group, SeparableAlgebraSpec,
};
use crate::numtheory::{candidate_primes, hilbert_symbol, kronecker, legendre, Place};
use crate::quadfield::class_group;
use crate::quatalg::{b_p_infinity, Quaternion, QuaternionAlgebra};
use crate::report;

#[derive(Parser, Debug)]
#[command(name = "locfree", version, about = "Locally free class groups and cancellation for quaternion orders")]
struct Cli {
    /// Print machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Residue and Hilbert symbols
    #[command(subcommand)]
    Symbol(SymbolCmd),
    /// Quaternion algebras over Q
    #[command(subcommand)]
    Quat(QuatCmd),
    /// Maximal orders of the algebra ramified at {p, inf}
    #[command(subcommand)]
    Order(OrderCmd),
    /// Class group of a quadratic discriminant
    #[command(allow_negative_numbers = true)]
    Quadclass {
        disc: i64,
        #[arg(long)]
        narrow: bool,
    },
    /// Locally free class groups and cancellation
    #[command(subcommand)]
    Lfcg(LfcgCmd),
}

#[derive(Subcommand, Debug)]
enum SymbolCmd {
    #[command(allow_negative_numbers = true)]
    Legendre { a: BigInt, p: u64 },
    #[command(allow_negative_numbers = true)]
    Kronecker { a: BigInt, n: i64 },
    #[command(allow_negative_numbers = true)]
    Hilbert {
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        a: BigRational,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        b: BigRational,
        /// A prime or `inf`; all relevant places when omitted
        #[arg(long, value_parser = parse_place)]
        place: Option<Place>,
    },
}

#[derive(Subcommand, Debug)]
enum QuatCmd {
    #[command(allow_negative_numbers = true)]
    Ramified {
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        a: BigRational,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        b: BigRational,
    },
    Bpinf { p: u64 },
    #[command(allow_negative_numbers = true)]
    Nrd {
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        a: BigRational,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        b: BigRational,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        t: BigRational,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        x: BigRational,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        y: BigRational,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        z: BigRational,
    },
}

#[derive(Subcommand, Debug)]
enum OrderCmd {
    Disc { p: u64 },
    Classset { p: u64 },
    Classnumber { p: u64 },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct AlgebraSource {
    /// JSON algebra description
    #[arg(long)]
    spec: Option<std::path::PathBuf>,
    /// The quaternion algebra ramified at {P, inf}
    #[arg(long)]
    bp: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum LfcgCmd {
    Swan(AlgebraSource),
    Eichler(AlgebraSource),
    Cancel {
        /// Half-open `A..B` or closed `A..=B`
        #[arg(long, value_parser = parse_range)]
        range: (u64, u64),
        /// Also enumerate class sets and compare with the formula
        #[arg(long)]
        verify: bool,
    },
    Stable { p: u64 },
}

fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let q = BigRational::from_str(s.trim()).map_err(|_| format!("not a rational number: {s}"))?;
    Ok(q)
}

fn parse_place(s: &str) -> std::result::Result<Place, String> {
    match s {
        "inf" | "infinity" | "oo" => Ok(Place::INFINITY),
        _ => s.parse::<u64>().map(Place::Finite).map_err(|_| format!("expected a prime or `inf`, got {s}")),
    }
}

fn parse_range(s: &str) -> std::result::Result<(u64, u64), String> {
    let bad = || format!("expected A..B or A..=B, got {s}");
    let (a, rest, closed) = if let Some((a, b)) = s.split_once("..=") {
        (a, b, true)
    } else if let Some((a, b)) = s.split_once("..") {
        (a, b, false)
    } else {
        return Err(bad());
    };
    let lo: u64 = a.trim().parse().map_err(|_| bad())?;
    let hi: u64 = rest.trim().parse().map_err(|_| bad())?;
    let hi = if closed { hi + 1 } else { hi };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// A result in both renderings.
struct Output {
    command: &'static str,
    json: Value,
    text: String,
}

fn load_spec(src: &AlgebraSource) -> Result<SeparableAlgebraSpec> {
    match (&src.spec, src.bp) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidSpec(format!("cannot read {}: {e}", path.display())))?;
            SeparableAlgebraSpec::from_json(&text)
        }
        (None, Some(p)) => SeparableAlgebraSpec::b_p_infinity(p),
        (None, None) => unreachable!("clap enforces one source"),
    }
}

fn symbol(cmd: &SymbolCmd) -> Result<Output> {
    Ok(match cmd {
        SymbolCmd::Legendre { a, p } => {
            let v = legendre(a, *p)?;
            Output {
                command: "symbol legendre",
                json: json!({"a": report::int(a), "p": report::int(p), "value": report::int(v)}),
                text: v.to_string(),
            }
        }
        SymbolCmd::Kronecker { a, n } => {
            let v = kronecker(a, *n)?;
            Output {
                command: "symbol kronecker",
                json: json!({"a": report::int(a), "n": report::int(n), "value": report::int(v)}),
                text: v.to_string(),
            }
        }
        SymbolCmd::Hilbert { a, b, place } => {
            let places: Vec<Place> = match place {
                Some(v) => vec![*v],
                None => {
                    let mut ps: Vec<Place> = candidate_primes(a, b)?.into_iter().map(Place::Finite).collect();
                    ps.push(Place::INFINITY);
                    ps
                }
            };
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for v in places {
                let s = hilbert_symbol(a, b, v)?;
                rows.push(json!({"place": v.to_string(), "value": report::int(s)}));
                text.push(if place.is_some() { s.to_string() } else { format!("{v}\t{s}") });
            }
            Output {
                command: "symbol hilbert",
                json: json!({"a": report::rat(a), "b": report::rat(b), "symbols": rows}),
                text: text.join("\n"),
            }
        }
    })
}

fn quat(cmd: &QuatCmd) -> Result<Output> {
    Ok(match cmd {
        QuatCmd::Ramified { a, b } => {
            let alg = QuaternionAlgebra::new(a.clone(), b.clone())?;
            let names: Vec<String> = alg.ramified().iter().map(|p| p.to_string()).collect();
            Output {
                command: "quat ramified",
                json: report::algebra(&alg),
                text: if names.is_empty() { "split".into() } else { names.join(" ") },
            }
        }
        QuatCmd::Bpinf { p } => {
            let alg = b_p_infinity(*p)?;
            Output {
                command: "quat bpinf",
                text: format!("({}, {})", alg.a(), alg.b()),
                json: report::algebra(&alg),
            }
        }
        QuatCmd::Nrd { a, b, t, x, y, z } => {
            let alg = QuaternionAlgebra::new(a.clone(), b.clone())?;
            let x = Quaternion::new(t.clone(), x.clone(), y.clone(), z.clone());
            let n = alg.nrd(&x);
            Output {
                command: "quat nrd",
                json: json!({"a": report::rat(a), "b": report::rat(b), "element": report::quaternion(&x), "nrd": report::rat(&n)}),
                text: n.to_string(),
            }
        }
    })
}

fn order(cmd: &OrderCmd) -> Result<Output> {
    Ok(match cmd {
        OrderCmd::Disc { p } => {
            let o = lambda(*p)?;
            let d = o.discriminant_report();
            let mut text = vec![format!("algebra ({}, {})", o.algebra().a(), o.algebra().b())];
            for e in o.basis() {
                text.push(format!("  {e}"));
            }
            text.push(format!("reduced_disc {}", d.reduced_disc));
            text.push(format!("trace_det {}", d.trace_det));
            let mut j = report::order(&o);
            j["p"] = report::int(p);
            Output {
                command: "order disc",
                json: j,
                text: text.join("\n"),
            }
        }
        OrderCmd::Classset { p } => {
            let o = lambda(*p)?;
            let reps = class_set(&o)?;
            let mut classes = Vec::new();
            let mut text = vec![format!("{} classes", reps.len())];
            for (k, r) in reps.iter().enumerate() {
                let u = unit_count(&r.left_order())?;
                classes.push(report::ideal_class(r, u));
                text.push(format!("class {k}: nrd {} units {u}", r.nrd()));
            }
            Output {
                command: "order classset",
                json: json!({"p": report::int(p), "count": report::int(reps.len()), "classes": classes}),
                text: text.join("\n"),
            }
        }
        OrderCmd::Classnumber { p } => {
            let h = eichler_class_number(*p)?;
            let n = class_set(&lambda(*p)?)?.len() as u64;
            Output {
                command: "order classnumber",
                json: json!({"p": report::int(p), "formula": report::int(h), "enumeration": report::int(n), "agree": h == n}),
                text: format!("formula {h}\nenumeration {n}\nagree {}", h == n),
            }
        }
    })
}

fn quadclass(disc: i64, narrow: bool) -> Result<Output> {
    let g = class_group(disc, narrow)?;
    let forms: Vec<String> = g.reps().iter().map(|f| f.to_string()).collect();
    Ok(Output {
        command: "quadclass",
        json: report::class_group(&g),
        text: format!("order {}\nstructure {:?}\nforms {}", g.order(), g.structure(), forms.join(" ")),
    })
}

fn lfcg(cmd: &LfcgCmd) -> Result<Output> {
    Ok(match cmd {
        LfcgCmd::Swan(src) => {
            let g = swan_class_group(&load_spec(src)?)?;
            Output {
                command: "lfcg swan",
                json: report::ray_group(&g),
                text: format!("order {}\nelementary_divisors {:?}", g.order(), g.elementary_divisors()),
            }
        }
        LfcgCmd::Eichler(src) => {
            let r = eichler_condition(&load_spec(src)?)?;
            let mut text = vec![format!("eichler {}", r.holds)];
            for f in &r.factors {
                text.push(format!("factor {}: {} split at [{}]", f.index, f.holds, f.split_places.join(", ")));
            }
            Output {
                command: "lfcg eichler",
                json: report::eichler(&r),
                text: text.join("\n"),
            }
        }
        LfcgCmd::Cancel { range, verify } => {
            let table = cancellation_table(range.0, range.1, *verify)?;
            let holds: Vec<u64> = table.iter().filter(|v| v.holds).map(|v| v.p).collect();
            let mut text = vec!["p\th\tcl\tholds".to_string()];
            for v in &table {
                text.push(format!("{}\t{}\t{}\t{}", v.p, v.h, v.cl, v.holds));
            }
            text.push(format!("holds for {holds:?}"));
            Output {
                command: "lfcg cancel",
                json: json!({
                    "range": [report::int(range.0), report::int(range.1)],
                    "table": table.iter().map(report::verdict).collect::<Vec<_>>(),
                    "holds_for": report::ints(holds),
                }),
                text: text.join("\n"),
            }
        }
        LfcgCmd::Stable { p } => {
            let reps = class_set(&lambda(*p)?)?;
            let mut classes = Vec::new();
            let mut text = Vec::new();
            let mut order = 1;
            for (k, r) in reps.iter().enumerate() {
                let s = stable_class(r)?;
                order = s.group_order;
                classes.push(json!({"nrd": report::rat(&s.nrd), "stable_class": report::int(s.value)}));
                text.push(format!("class {k}: nrd {} stable class {}", s.nrd, s.value));
            }
            let mut all = true;
            for a in &reps {
                for b in &reps {
                    all &= stably_isomorphic(a, b)?;
                }
            }
            text.insert(0, format!("group order {order}, {} classes, all stably isomorphic {all}", reps.len()));
            Output {
                command: "lfcg stable",
                json: json!({
                    "p": report::int(p),
                    "group_order": report::int(order),
                    "class_count": report::int(reps.len()),
                    "classes": classes,
                    "all_stably_isomorphic": all,
                }),
                text: text.join("\n"),
            }
        }
    })
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Symbol(c) => symbol(c),
        Command::Quat(c) => quat(c),
        Command::Order(c) => order(c),
        Command::Quadclass { disc, narrow } => quadclass(*disc, *narrow),
        Command::Lfcg(c) => lfcg(c),
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&report::envelope(o.command, o.json)).expect("json values serialize")
            } else {
                o.text
            };
            let _ = writeln!(out, "{body}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
