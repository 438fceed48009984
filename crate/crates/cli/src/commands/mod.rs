//! Subcommand implementations.

pub mod bounds;
pub mod clutter;
pub mod gen;
pub mod graph;
pub mod poly;
pub mod setsys;

use cubeideal::clutter::Clutter;
use cubeideal::graphapps::MixedGraph;
use cubeideal::setsys::SetSystem;

use crate::{input_error, CliResult, Common};

/// Parsed input together with the digest of its bytes.
pub struct Loaded<T> {
    pub value: T,
    pub digest: String,
}

pub fn parse_set_system(c: &Common) -> CliResult<Loaded<SetSystem>> {
    let input = c.read_input()?;
    Ok(Loaded { value: SetSystem::parse(&input.text)?, digest: input.digest })
}

pub fn parse_clutter(c: &Common) -> CliResult<Loaded<Clutter>> {
    let input = c.read_input()?;
    Ok(Loaded { value: Clutter::parse(&input.text)?, digest: input.digest })
}

pub fn parse_graph(c: &Common) -> CliResult<Loaded<MixedGraph>> {
    let input = c.read_input()?;
    Ok(Loaded { value: MixedGraph::parse(&input.text)?, digest: input.digest })
}

/// 1-based elements of a mask.
pub fn one_based(mask: u64) -> Vec<usize> {
    (0..64).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect()
}

/// Converts 1-based indices to 0-based, rejecting zero.
pub fn zero_based(indices: &[usize]) -> CliResult<Vec<usize>> {
    indices.iter().map(|&i| i.checked_sub(1).ok_or_else(|| input_error("indices are 1-based"))).collect()
}

/// A bitstring whose character `k` is bit `k`.
pub fn parse_bits(s: &str, len: usize, what: &str) -> CliResult<u64> {
    let (p, n) = cubeideal::setsys::Point::from_bitstring(s.trim())?;
    if n != len {
        return Err(input_error(format!("{what} has length {n}, expected {len}")));
    }
    Ok(p.0)
}

pub fn bitstrings(s: &SetSystem) -> Vec<String> {
    s.points().iter().map(|p| p.to_bitstring(s.dim())).collect()
}
