//! The `polydendriform` command line: JSON in, JSON out.
//!
//! Exit codes: 0 on success, 1 on a domain error or a failed check, 2 on
//! malformed input. Errors are printed as `{"error":{"kind":…,"message":…}}`.

use std::io::Read;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::clans::Universe;
use crate::constructs::{count_by_nodes, enumerate, Construct};
use crate::encodings::{
    associahedron_decode, associahedron_encode, hypercube_decode, hypercube_encode, permutohedron_decode,
    permutohedron_encode,
};
use crate::error::Error;
use crate::json::{
    biguint_to_json, construct_from_json, construct_to_json, delegation_from_json, hypergraph_from_json,
    linear_to_json, parse_carrier, universe_from_json,
};
use crate::qalgebra::LinearConstruct;
use crate::shuffle::{shuffle_nonrecursive, shuffle_with, trio_with, QMode};
use crate::suites::{run_suite, Suite, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "polydendriform", version, about = "Shuffle products on faces of hypergraph polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the constructs of a universe member.
    Enumerate {
        /// Universe tag, or `explicit` to read a hypergraph from stdin.
        #[arg(long)]
        universe: String,
        /// Carrier such as `1..5`, `1,3,5` or `a,b,c`.
        #[arg(long)]
        carrier: Option<String>,
        #[arg(long)]
        max_nodes: Option<usize>,
    },
    /// Count constructs by number of nodes.
    Counts {
        #[arg(long)]
        universe: String,
        #[arg(long)]
        carrier: Option<String>,
    },
    /// Multiply a delegation read from stdin.
    Product {
        /// Substitute this integer for q.
        #[arg(long, allow_hyphen_values = true)]
        at_q: Option<i64>,
        /// Compute from the restriction characterization instead of the recursion.
        #[arg(long)]
        nonrecursive: bool,
    },
    /// The three operations on a binary delegation read from stdin.
    Trio {
        #[arg(long, allow_hyphen_values = true)]
        at_q: Option<i64>,
    },
    /// Run an identity suite.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        universe: String,
        #[arg(long, default_value_t = 5)]
        max_carrier: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Encode a construct as a word or tree.
    Encode {
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        carrier: String,
        /// The construct; read from stdin when absent.
        #[arg(long)]
        input: Option<String>,
    },
    /// Decode a word or tree into a construct.
    Decode {
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        carrier: String,
        #[arg(long)]
        input: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Packed,
    Cubeword,
    Schroeder,
}

/// Failure of a command: malformed input or a domain error.
enum Failure {
    Malformed(String, String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownUniverse(_) => Failure::Malformed(e.kind().into(), e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

fn malformed(msg: impl Into<String>) -> Failure {
    Failure::Malformed("MalformedInput".into(), msg.into())
}

fn error_json(kind: &str, message: &str) -> Value {
    json!({"error": {"kind": kind, "message": message}})
}

fn render(v: &Value) -> Vec<u8> {
    let mut out = serde_json::to_vec(v).expect("values serialize");
    out.push(b'\n');
    out
}

/// Runs one invocation. `args` includes the program name.
pub fn run(args: &[String], input: &mut dyn Read) -> (i32, Vec<u8>) {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string().into_bytes()),
                _ => (2, render(&error_json("Usage", e.to_string().trim()))),
            };
        }
    };
    match dispatch(cli.command, input) {
        Ok((code, v)) => (code, render(&v)),
        Err(Failure::Malformed(kind, msg)) => (2, render(&error_json(&kind, &msg))),
        Err(Failure::Domain(e)) => (1, render(&error_json(e.kind(), &e.to_string()))),
    }
}

fn read_all(input: &mut dyn Read) -> Result<String, Failure> {
    let mut s = String::new();
    input
        .read_to_string(&mut s)
        .map_err(|e| malformed(format!("cannot read input: {e}")))?;
    Ok(s)
}

fn read_json(input: &mut dyn Read) -> Result<Value, Failure> {
    let s = read_all(input)?;
    serde_json::from_str(&s).map_err(|e| malformed(format!("invalid JSON: {e}")))
}

fn member(universe: &str, carrier: Option<&str>, input: &mut dyn Read) -> Result<crate::Hypergraph, Failure> {
    if universe == "explicit" {
        return Ok(hypergraph_from_json(&read_json(input)?)?);
    }
    let u = universe_from_json(&Value::String(universe.into()))?;
    let carrier = parse_carrier(carrier.ok_or_else(|| malformed("--carrier is required"))?)?;
    u.member(&carrier).ok_or_else(|| {
        Failure::Domain(Error::NotInUniverse {
            universe: u.to_string(),
            carrier: carrier.to_string(),
        })
    })
}

fn product_json(l: &LinearConstruct) -> Value {
    json!({"terms": linear_to_json(l), "display": l.to_string()})
}

fn text_input(given: Option<String>, input: &mut dyn Read) -> Result<String, Failure> {
    let raw = match given {
        Some(s) => s,
        None => read_all(input)?,
    };
    let raw = raw.trim().to_string();
    // a JSON string is unwrapped, anything else is taken literally
    Ok(match serde_json::from_str::<Value>(&raw) {
        Ok(Value::String(s)) => s,
        _ => raw,
    })
}

fn dispatch(cmd: Command, input: &mut dyn Read) -> Result<(i32, Value), Failure> {
    match cmd {
        Command::Enumerate {
            universe,
            carrier,
            max_nodes,
        } => {
            let h = member(&universe, carrier.as_deref(), input)?;
            let all: Vec<Construct> = enumerate(&h)?
                .into_iter()
                .filter(|c| max_nodes.map_or(true, |k| c.node_count() <= k))
                .collect();
            Ok((
                0,
                json!({
                    "count": all.len(),
                    "constructs": all.iter().map(construct_to_json).collect::<Vec<_>>(),
                    "text": all.iter().map(ToString::to_string).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::Counts { universe, carrier } => {
            let h = member(&universe, carrier.as_deref(), input)?;
            let by_nodes = count_by_nodes(&h)?;
            let total: BigUint = by_nodes.iter().sum();
            Ok((
                0,
                json!({
                    "by_nodes": by_nodes.iter().map(biguint_to_json).collect::<Vec<_>>(),
                    "total": biguint_to_json(&total),
                }),
            ))
        }
        Command::Product { at_q, nonrecursive } => {
            let d = delegation_from_json(&read_json(input)?)?;
            let q = at_q.map_or_else(|| QMode::default_for(d.team().mode()), QMode::At);
            let out = if nonrecursive {
                let l = shuffle_nonrecursive(&d)?;
                match q {
                    QMode::Symbolic => l,
                    QMode::At(v) => l.evaluate_q(v),
                }
            } else {
                shuffle_with(&d, q)?
            };
            Ok((0, product_json(&out)))
        }
        Command::Trio { at_q } => {
            let d = delegation_from_json(&read_json(input)?)?;
            let q = at_q.map_or_else(|| QMode::default_for(d.team().mode()), QMode::At);
            let t = trio_with(&d, q)?;
            Ok((
                0,
                json!({"prec": product_json(&t.prec), "dot": product_json(&t.dot), "succ": product_json(&t.succ)}),
            ))
        }
        Command::Check {
            suite,
            universe,
            max_carrier,
            seed,
            samples,
        } => {
            let suite: Suite = suite.parse()?;
            let u: Universe = universe.parse()?;
            let mut cfg = SuiteConfig::new(Arc::new(u), max_carrier, seed);
            cfg.samples = samples;
            let r = run_suite(suite, &cfg)?;
            let passed = r.passed();
            Ok((
                if passed { 0 } else { 1 },
                json!({
                    "suite": r.suite.name(),
                    "universe": r.universe,
                    "cases": r.cases,
                    "failures": r.failures,
                    "skipped": r.skipped,
                    "passed": passed,
                    "counterexample": r.counterexample,
                }),
            ))
        }
        Command::Encode { format, carrier, input: given } => {
            let x = parse_carrier(&carrier)?;
            let text = text_input(given, input)?;
            let c = match serde_json::from_str::<Value>(&text) {
                Ok(v @ Value::Object(_)) => construct_from_json(&v)?,
                _ => text.parse::<Construct>()?,
            };
            let word = match format {
                Format::Packed => {
                    let u = Universe::permutohedra();
                    crate::constructs::validate(&u.member(&x).expect("complete graph is connected"), &c)?;
                    permutohedron_encode(&c, &x)?.to_string()
                }
                Format::Cubeword => hypercube_encode(&c, &x)?.to_string(),
                Format::Schroeder => associahedron_encode(&c, &x)?.to_string(),
            };
            Ok((0, json!({"word": word, "construct": c.to_string()})))
        }
        Command::Decode { format, carrier, input: given } => {
            let x = parse_carrier(&carrier)?;
            let text = text_input(given, input)?;
            let c = match format {
                Format::Packed => permutohedron_decode(&text.parse()?, &x)?,
                Format::Cubeword => hypercube_decode(&text.parse()?, &x)?,
                Format::Schroeder => associahedron_decode(&text.parse()?, &x)?,
            };
            Ok((0, json!({"construct": construct_to_json(&c), "text": c.to_string()})))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(line: &str, stdin: &str) -> (i32, Value) {
        let args: Vec<String> = std::iter::once("polydendriform")
            .chain(line.split_whitespace())
            .map(String::from)
            .collect();
        let (code, out) = run(&args, &mut stdin.as_bytes());
        (code, serde_json::from_slice(&out).unwrap_or(Value::Null))
    }

    #[test]
    fn counts_command() {
        let (code, v) = call("counts --universe frieze --carrier 1..4", "");
        assert_eq!(code, 0);
        assert_eq!(v, json!({"by_nodes": [1, 13, 33, 22], "total": 69}));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call("enumerate --universe nowhere --carrier 1..3", "").0, 2);
        assert_eq!(call("product", "{not json").0, 2);
        assert_eq!(call("frobnicate", "").0, 2);
        let (code, v) = call("product", r#"{"universe":"frieze","parts":["2(1)","3(4)"],"whole":[1,2,3,4,5]}"#);
        assert_eq!(code, 1);
        assert_eq!(v["error"]["kind"], "NotPartition");
    }

    #[test]
    fn codec_commands() {
        let (_, v) = call("decode --format packed --carrier 1..3 --input 1,2,1", "");
        assert_eq!(v["text"], "2(13)");
        let (_, v) = call("encode --format cubeword --carrier 1..4", "3(12,4)");
        assert_eq!(v["word"], "+.+-");
    }
}
