use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use clap::ValueEnum;
use trilist::generator::GenSpec;
use trilist::graph::load_edge_list;
use trilist::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Sniff the binary magic, otherwise read an edge list.
    Auto,
    Text,
    Binary,
}

/// The input could not be read or decoded.
#[derive(Debug)]
pub struct InputError(pub anyhow::Error);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot read input: {:#}", self.0)
    }
}

impl std::error::Error for InputError {}

pub fn load(input: Option<&Path>, gen: Option<&GenSpec>, format: Format) -> anyhow::Result<Graph> {
    match (input, gen) {
        (_, Some(spec)) => {
            log::info!("generating {spec}");
            Ok(spec.generate()?)
        }
        (Some(path), None) => read(path, format).map_err(|e| InputError(e).into()),
        (None, None) => unreachable!("clap requires --input or --gen"),
    }
}

fn read(path: &Path, format: Format) -> anyhow::Result<Graph> {
    let mut reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(io::stdin().lock())
    } else {
        let file = File::open(path).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
        Box::new(BufReader::new(file))
    };
    let binary = match format {
        Format::Text => false,
        Format::Binary => true,
        Format::Auto => reader.fill_buf()?.starts_with(b"TRIG"),
    };
    if binary {
        return Ok(Graph::read_binary(&mut reader as &mut dyn Read)?);
    }
    Ok(load_edge_list(reader)?)
}
