//! Dilations `q → q^r`, `x → x·q^{off_x}`: the same data drives the variable
//! substitution on series, the weights of dilated coloured parts, and the
//! transformed difference matrix.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{ColourSystem, DifferenceMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilationSpec {
    pub q_scale: u32,
    /// Per-colour offsets; colours not listed have offset 0.
    #[serde(default)]
    pub offsets: BTreeMap<String, i64>,
    /// Colour variables specialised to 1 after substitution.
    #[serde(default)]
    pub eliminate: BTreeSet<String>,
}

impl Default for DilationSpec {
    fn default() -> Self {
        DilationSpec::identity()
    }
}

impl DilationSpec {
    pub fn identity() -> Self {
        DilationSpec {
            q_scale: 1,
            offsets: BTreeMap::new(),
            eliminate: BTreeSet::new(),
        }
    }

    pub fn new(q_scale: u32, offsets: &[(&str, i64)]) -> Self {
        DilationSpec {
            q_scale,
            offsets: offsets.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            eliminate: BTreeSet::new(),
        }
    }

    pub fn eliminating(mut self, names: &[&str]) -> Self {
        self.eliminate.extend(names.iter().map(|s| s.to_string()));
        self
    }

    pub fn offset(&self, colour: &str) -> i64 {
        self.offsets.get(colour).copied().unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        self.q_scale == 1 && self.offsets.values().all(|&o| o == 0) && self.eliminate.is_empty()
    }

    /// Dilated value `r·k + off_x` of the part `k_x`.
    pub fn dilate(&self, k: u32, colour: &str) -> i64 {
        i64::from(self.q_scale) * i64::from(k) + self.offset(colour)
    }

    /// Every part `k_x` with `k >= 1` must land on a positive integer.
    pub fn validate(&self, colours: &ColourSystem) -> Result<()> {
        if self.q_scale == 0 {
            return Err(Error::Invalid("dilation q_scale must be positive".into()));
        }
        for name in self.offsets.keys() {
            if colours.index_of(name).is_none() {
                return Err(Error::Invalid(format!(
                    "offset for unknown colour `{name}`"
                )));
            }
        }
        for label in colours.labels() {
            if self.dilate(1, label) < 1 {
                return Err(Error::Invalid(format!(
                    "dilation sends 1_{label} to {}",
                    self.dilate(1, label)
                )));
            }
        }
        Ok(())
    }
}

/// `D_r[x][y] = r·D[x][y] + off_x − off_y`.
///
/// A negative entry would allow a part to be followed by a strictly larger
/// one, which has no counterpart in the original order; that is reported as
/// an inconsistency.
pub fn dilated_matrix(
    matrix: &DifferenceMatrix,
    colours: &ColourSystem,
    spec: &DilationSpec,
) -> Result<DifferenceMatrix> {
    spec.validate(colours)?;
    let r = i64::from(spec.q_scale);
    let labels = colours.labels();
    let mut rows = Vec::with_capacity(labels.len());
    for (x, lx) in labels.iter().enumerate() {
        let mut row = Vec::with_capacity(labels.len());
        for (y, ly) in labels.iter().enumerate() {
            let value = r * matrix.get(x, y) + spec.offset(lx) - spec.offset(ly);
            if value < 0 {
                return Err(Error::InconsistentDilation {
                    row: lx.clone(),
                    col: ly.clone(),
                    value,
                });
            }
            row.push(value);
        }
        rows.push(row);
    }
    DifferenceMatrix::new(rows)
}

/// A dilated coloured integer, e.g. `3_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilatedPart {
    pub value: i64,
    pub colour: String,
    /// The undilated part `k` it came from.
    pub k: u32,
}

impl fmt::Display for DilatedPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.colour)
    }
}

/// The first `count` dilated coloured integers in increasing order of value,
/// ties broken by the undilated order.
pub fn dilated_order(
    colours: &ColourSystem,
    spec: &DilationSpec,
    count: usize,
) -> Result<Vec<DilatedPart>> {
    spec.validate(colours)?;
    let mut parts = Vec::new();
    // every colour contributes at least one part per q_scale window
    let k_max = count as u32 + 1;
    for k in 1..=k_max {
        for (x, label) in colours.labels().iter().enumerate() {
            parts.push((spec.dilate(k, label), k, x, label.clone()));
        }
    }
    parts.sort();
    // values beyond this bound may still be missing larger-offset colours
    let bound = i64::from(spec.q_scale) * i64::from(k_max)
        + colours
            .labels()
            .iter()
            .map(|l| spec.offset(l))
            .min()
            .unwrap_or(0);
    Ok(parts
        .into_iter()
        .filter(|p| p.0 <= bound)
        .take(count)
        .map(|(value, k, _, colour)| DilatedPart { value, colour, k })
        .collect())
}
