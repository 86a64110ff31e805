use std::io::Read;

use clap::Args;
use signed_graph_core::{generate, parse_edge_list, GeneratorSpec, Sign, SignedGraph};

use crate::CliError;

/// Where the graph comes from: a file (or stdin) in edge-list format, or one
/// of the built-in generator families.
#[derive(Args, Debug)]
pub struct InputArgs {
    /// Edge-list file to read; `-` reads standard input
    #[arg(long, value_name = "PATH", conflicts_with = "generate")]
    pub input: Option<String>,

    /// Generate a graph instead: path, cycle, complete, paw, extended-paw, random
    #[arg(long, value_name = "FAMILY")]
    pub generate: Option<String>,

    /// Vertex count for path/cycle/complete/random
    #[arg(long, value_name = "N")]
    pub n: Option<usize>,

    /// Edge probability for the random family (default 0.5)
    #[arg(long, value_name = "PROB")]
    pub p: Option<f64>,

    /// Probability that a kept random edge is negative (default 0.5)
    #[arg(long, value_name = "PROB")]
    pub q: Option<f64>,

    /// RNG seed for the random family
    #[arg(long, value_name = "SEED", default_value_t = 0)]
    pub seed: u64,

    /// Edge signs for path/cycle/complete as a compact string, e.g. "+--"
    #[arg(long, value_name = "SIGNS")]
    pub signs: Option<String>,
}

pub fn load_graph(args: &InputArgs) -> Result<SignedGraph, CliError> {
    match (&args.input, &args.generate) {
        (Some(path), None) => {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?
            };
            Ok(parse_edge_list(&text)?)
        }
        (None, Some(family)) => Ok(generate(&spec_for(family, args)?)?),
        _ => Err(CliError::Usage(
            "exactly one of --input or --generate is required".into(),
        )),
    }
}

fn spec_for(family: &str, args: &InputArgs) -> Result<GeneratorSpec, CliError> {
    let signs = args.signs.as_deref().map(parse_signs).transpose()?;
    let need_n =
        || args.n.ok_or_else(|| CliError::Usage(format!("--generate {family} requires --n")));
    Ok(match family {
        "path" => GeneratorSpec::Path { n: need_n()?, signs },
        "cycle" => GeneratorSpec::Cycle { n: need_n()?, signs },
        "complete" => GeneratorSpec::Complete { n: need_n()?, signs },
        "paw" => GeneratorSpec::Paw,
        "extended-paw" => GeneratorSpec::ExtendedPaw,
        "random" => GeneratorSpec::Random {
            n: need_n()?,
            edge_prob: args.p.unwrap_or(0.5),
            neg_prob: args.q.unwrap_or(0.5),
            seed: args.seed,
        },
        other => {
            return Err(CliError::Usage(format!(
                "unknown generator family {other:?} \
                 (expected path, cycle, complete, paw, extended-paw, or random)"
            )))
        }
    })
}

fn parse_signs(s: &str) -> Result<Vec<Sign>, CliError> {
    s.chars()
        .map(|ch| match ch {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            other => Err(CliError::Usage(format!(
                "invalid sign character {other:?} in --signs (use '+' and '-')"
            ))),
        })
        .collect()
}
