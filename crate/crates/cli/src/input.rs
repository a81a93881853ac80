//! Field and graph arguments.

use std::fs;
use std::path::Path;

use lkoszul::field::{is_prime, DEFAULT_PRIME};
use lkoszul::graph::{
    chain, complete_layered, hypercube, non_uniform_witness, parse, parse_unvalidated, LayeredGraph,
};
use lkoszul::Error;

/// Primes below this trigger a warning about small characteristic.
pub const SMALL_PRIME: u64 = 1000;

pub enum FieldChoice {
    Prime(u64),
    Rational,
}

pub fn parse_field(text: &str) -> Result<FieldChoice, String> {
    match text.to_ascii_lowercase().as_str() {
        "q" | "rational" | "rationals" => Ok(FieldChoice::Rational),
        "" => Ok(FieldChoice::Prime(DEFAULT_PRIME)),
        s => {
            let p: u64 = s
                .parse()
                .map_err(|_| format!("--field expects a prime or `q`, got `{text}`"))?;
            if !is_prime(p) || p >= 1 << 31 {
                return Err(format!("--field {p} is not a prime below 2^31"));
            }
            Ok(FieldChoice::Prime(p))
        }
    }
}

/// Built-in names: `hypercubeN`, `chainN`, `witness`, `complete:1,2,2`.
fn builtin(name: &str) -> Option<lkoszul::Result<LayeredGraph>> {
    if name == "witness" {
        return Some(Ok(non_uniform_witness()));
    }
    if let Some(sizes) = name.strip_prefix("complete:") {
        let sizes: Result<Vec<usize>, _> = sizes.split(',').map(|s| s.trim().parse()).collect();
        return sizes.ok().map(|s| complete_layered(&s));
    }
    for (prefix, make) in [("hypercube", hypercube as fn(usize) -> _), ("chain", chain)] {
        if let Some(n) = name.strip_prefix(prefix).and_then(|n| n.parse().ok()) {
            return Some(make(n));
        }
    }
    None
}

fn read(arg: &str, validate: bool) -> Result<LayeredGraph, Error> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("cannot read {arg}: {e}"),
        })?;
        return if validate {
            parse(&text)
        } else {
            parse_unvalidated(&text)
        };
    }
    match builtin(arg) {
        Some(g) => g,
        None => Err(Error::Parse {
            line: 0,
            msg: format!("`{arg}` is neither a file nor a built-in graph"),
        }),
    }
}

/// A validated graph from a file path or built-in name.
pub fn load_graph(arg: &str) -> Result<LayeredGraph, Error> {
    read(arg, true)
}

/// A graph as written, without structural validation.
pub fn load_graph_unvalidated(arg: &str) -> Result<LayeredGraph, Error> {
    read(arg, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        assert_eq!(load_graph("hypercube3").unwrap().num_vertices(), 8);
        assert_eq!(load_graph("chain5").unwrap().num_vertices(), 6);
        assert_eq!(load_graph("complete:1,2,2").unwrap().num_vertices(), 5);
        assert!(!load_graph("witness").unwrap().is_uniform());
        assert!(load_graph("hypercube").is_err());
        assert!(load_graph("complete:1,x").is_err());
    }

    #[test]
    fn field_arguments() {
        assert!(matches!(
            parse_field("65537"),
            Ok(FieldChoice::Prime(65537))
        ));
        assert!(matches!(parse_field("Q"), Ok(FieldChoice::Rational)));
        assert!(parse_field("32004").is_err());
        assert!(parse_field("seven").is_err());
    }
}
