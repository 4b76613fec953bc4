//! Text format for a colour system:
//!
//! ```text
//! a b c d
//! 2 1 2 2
//! 1 0 1 1
//! 0 1 0 2
//! 0 1 0 2
//! weights
//! a 2 -1 1
//! d 2 1 1
//! ```
//!
//! The first line names the colours, then one matrix row per colour. An
//! optional `weights` stanza gives `colour scale offset min` per line;
//! unlisted colours keep scale 1, offset 0, min 1. `#` starts a comment.

use super::{ColourSystem, DifferenceMatrix, PartitionSystem, WeightMap};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFile {
    pub system: PartitionSystem,
}

pub fn parse_system_file(text: &str) -> Result<SystemFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, msg: String| Error::Invalid(format!("line {line}: {msg}"));

    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Invalid("empty colour system file".into()))?;
    let colours = ColourSystem::new(header.split_whitespace())?;
    let n = colours.len();

    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::Invalid(format!("expected {n} matrix rows")))?;
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| err(no, format!("bad entry `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(err(
                no,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    let matrix = DifferenceMatrix::new(rows)?;

    let mut scales = vec![1u32; n];
    let mut offsets = vec![0i64; n];
    let mut minimums = vec![1u32; n];
    if let Some((no, line)) = lines.next() {
        if line != "weights" {
            return Err(err(no, format!("expected `weights`, found `{line}`")));
        }
        for (no, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [colour, scale, offset, min] = fields[..] else {
                return Err(err(no, "expected `colour scale offset min`".into()));
            };
            let x = colours
                .index_of(colour)
                .ok_or_else(|| err(no, format!("unknown colour `{colour}`")))?;
            scales[x] = scale
                .parse()
                .map_err(|_| err(no, format!("bad scale `{scale}`")))?;
            offsets[x] = offset
                .parse()
                .map_err(|_| err(no, format!("bad offset `{offset}`")))?;
            minimums[x] = min
                .parse()
                .map_err(|_| err(no, format!("bad min `{min}`")))?;
        }
    }
    let weights = WeightMap::from_parts(scales, offsets, minimums)?;
    Ok(SystemFile {
        system: PartitionSystem::new(colours, matrix, weights)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_default_system() {
        let text = "a b c d\n2 1 2 2\n1 0 1 1\n0 1 0 2\n0 1 0 2\n";
        assert_eq!(
            parse_system_file(text).unwrap().system,
            PartitionSystem::primc()
        );
    }

    #[test]
    fn parses_weights_stanza() {
        let text = "# dilated\na b\n1 0\n0 1\nweights\na 2 -1 1\nb 2 0 4\n";
        let sys = parse_system_file(text).unwrap().system;
        assert_eq!(sys.weights.weight(1, 0), 1);
        assert!(!sys.weights.admits(1, 1));
        assert!(sys.weights.admits(2, 1));
    }

    #[test]
    fn rejects_short_rows() {
        assert!(parse_system_file("a b\n1 0\n0\n").is_err());
        assert!(parse_system_file("a b\n1 0\n0 1\nextra\n").is_err());
    }
}
