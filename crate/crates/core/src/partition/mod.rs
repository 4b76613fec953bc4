//! Coloured integers, difference-condition matrices, and the enumeration of
//! admissible coloured partitions.
//!
//! A coloured partition is a nonincreasing sequence of parts `k_x`. Consecutive
//! parts `k_x, k'_y` must satisfy `k − k' ≥ D[x][y]`, with the row indexed by
//! the colour of the larger (earlier) part.

mod congruence;
pub(crate) mod enumerate;
mod matrix_file;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dilation::{dilated_matrix, DilationSpec};
use crate::error::{Error, Result};
use crate::series::{Monomial, Series, Variables};

pub use congruence::{CongruenceClass, KindRule};
pub use enumerate::Letter;
pub use matrix_file::{parse_system_file, SystemFile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColourSystem {
    labels: Vec<String>,
}

impl Default for ColourSystem {
    /// The four colours `a < b < c < d`.
    fn default() -> Self {
        ColourSystem {
            labels: ["a", "b", "c", "d"].map(String::from).to_vec(),
        }
    }
}

impl ColourSystem {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::Invalid(
                "colour system needs at least one colour".into(),
            ));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || labels[..i].contains(l) {
                return Err(Error::Invalid(format!(
                    "bad or duplicate colour label `{l}`"
                )));
            }
        }
        Ok(ColourSystem { labels })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DifferenceMatrix {
    rows: Vec<Vec<i64>>,
}

impl DifferenceMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid(
                "difference matrix must be square and nonempty".into(),
            ));
        }
        if rows.iter().flatten().any(|&e| e < 0) {
            return Err(Error::Invalid(
                "difference matrix entries must be nonnegative".into(),
            ));
        }
        Ok(DifferenceMatrix { rows })
    }

    /// The four-colour matrix on `a, b, c, d`.
    pub fn primc() -> Self {
        DifferenceMatrix {
            rows: vec![
                vec![2, 1, 2, 2],
                vec![1, 0, 1, 1],
                vec![0, 1, 0, 2],
                vec![0, 1, 0, 2],
            ],
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, larger: usize, smaller: usize) -> i64 {
        self.rows[larger][smaller]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Checks every consecutive pair of a (nonincreasing) partition.
    pub fn admits(&self, partition: &ColouredPartition) -> bool {
        partition.parts.windows(2).all(|w| {
            i64::from(w[0].value) - i64::from(w[1].value) >= self.get(w[0].colour, w[1].colour)
        })
    }
}

/// Per-colour weight `k_x ↦ scale_x·k + offset_x`, plus a minimum admissible
/// weight per colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMap {
    scales: Vec<u32>,
    offsets: Vec<i64>,
    minimums: Vec<u32>,
}

impl WeightMap {
    pub fn identity(colours: usize) -> Self {
        WeightMap {
            scales: vec![1; colours],
            offsets: vec![0; colours],
            minimums: vec![1; colours],
        }
    }

    pub fn from_dilation(colours: &ColourSystem, spec: &DilationSpec) -> Result<Self> {
        spec.validate(colours)?;
        Ok(WeightMap {
            scales: vec![spec.q_scale; colours.len()],
            offsets: colours.labels().iter().map(|l| spec.offset(l)).collect(),
            minimums: vec![1; colours.len()],
        })
    }

    pub fn from_parts(scales: Vec<u32>, offsets: Vec<i64>, minimums: Vec<u32>) -> Result<Self> {
        if scales.len() != offsets.len() || scales.len() != minimums.len() {
            return Err(Error::Invalid("weight map columns differ in length".into()));
        }
        if scales.contains(&0) {
            return Err(Error::Invalid("weight scale must be positive".into()));
        }
        Ok(WeightMap {
            scales,
            offsets,
            minimums,
        })
    }

    pub fn with_minimum(mut self, colour: usize, minimum: u32) -> Self {
        self.minimums[colour] = minimum;
        self
    }

    pub fn len(&self) -> usize {
        self.scales.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scales.is_empty()
    }

    pub fn weight(&self, k: u32, colour: usize) -> i64 {
        i64::from(self.scales[colour]) * i64::from(k) + self.offsets[colour]
    }

    /// Whether `k_x` is an allowed part (`k ≥ 1`, weight at least the
    /// colour's minimum and positive).
    pub fn admits(&self, k: u32, colour: usize) -> bool {
        k >= 1 && self.weight(k, colour) >= i64::from(self.minimums[colour].max(1))
    }
}

/// How gaps and order are measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    /// Parts are `k_x` ordered by `(k, colour)`; gaps are in `k`.
    Coloured,
    /// Parts are their weights, ordered by weight (ties by `(k, colour)`);
    /// gaps are in weight. Used with a dilated matrix.
    Dilated,
}

/// A part: `value` is `k` in coloured space and the weight in dilated space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    pub value: u32,
    pub colour: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ColouredPartition {
    pub parts: Vec<Part>,
}

/// Free-standing admissibility predicate.
pub fn is_admissible(partition: &ColouredPartition, matrix: &DifferenceMatrix) -> bool {
    matrix.admits(partition)
}

/// Whether a bounded series counts partitions with largest part at most, or
/// exactly, the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    AtMost,
    Exactly,
}

/// A difference-condition partition system: colours, matrix, part weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSystem {
    pub colours: ColourSystem,
    pub matrix: DifferenceMatrix,
    pub weights: WeightMap,
    pub space: Space,
}

/// One enumerated partition rendered for output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListedPartition {
    pub weight: u32,
    pub parts: String,
    /// Multiplicities of the tracked statistics, in variable order.
    pub stats: Vec<u32>,
}

impl PartitionSystem {
    pub fn new(
        colours: ColourSystem,
        matrix: DifferenceMatrix,
        weights: WeightMap,
    ) -> Result<Self> {
        Self::with_space(colours, matrix, weights, Space::Coloured)
    }

    pub fn with_space(
        colours: ColourSystem,
        matrix: DifferenceMatrix,
        weights: WeightMap,
        space: Space,
    ) -> Result<Self> {
        if matrix.dim() != colours.len() || weights.len() != colours.len() {
            return Err(Error::Invalid(format!(
                "{} colours but matrix is {}x{} and weight map has {} entries",
                colours.len(),
                matrix.dim(),
                matrix.dim(),
                weights.len()
            )));
        }
        Ok(PartitionSystem {
            colours,
            matrix,
            weights,
            space,
        })
    }

    /// Four colours, the matrix on `a, b, c, d`, unit weights.
    pub fn primc() -> Self {
        PartitionSystem {
            colours: ColourSystem::default(),
            matrix: DifferenceMatrix::primc(),
            weights: WeightMap::identity(4),
            space: Space::Coloured,
        }
    }

    /// Undilated parts with dilated weights; gaps still measured in `k`.
    pub fn with_dilated_weights(
        colours: ColourSystem,
        matrix: DifferenceMatrix,
        spec: &DilationSpec,
    ) -> Result<Self> {
        let weights = WeightMap::from_dilation(&colours, spec)?;
        Self::new(colours, matrix, weights)
    }

    /// Parts are dilated integers and gaps are checked against the dilated
    /// matrix.
    pub fn dilated(
        colours: ColourSystem,
        matrix: &DifferenceMatrix,
        spec: &DilationSpec,
    ) -> Result<Self> {
        let dm = dilated_matrix(matrix, &colours, spec)?;
        let weights = WeightMap::from_dilation(&colours, spec)?;
        Self::with_space(colours, dm, weights, Space::Dilated)
    }

    pub fn weight_of(&self, part: &Part) -> u32 {
        match self.space {
            Space::Coloured => self.weights.weight(part.value, part.colour) as u32,
            Space::Dilated => part.value,
        }
    }

    /// Position of a part in this system's total order.
    fn order_key(&self, part: &Part) -> (u32, u32, usize) {
        match self.space {
            Space::Coloured => (part.value, part.value, part.colour),
            Space::Dilated => {
                let w = i64::from(part.value);
                let k = (w - self.weights.offsets[part.colour]).max(0)
                    / i64::from(self.weights.scales[part.colour]);
                (part.value, k as u32, part.colour)
            }
        }
    }

    fn keyed_letters(&self, max_weight: u32) -> Vec<((u32, u32, usize), Letter)> {
        let mut keyed = Vec::new();
        for x in 0..self.colours.len() {
            let mut k = 1;
            while self.weights.weight(k, x) <= i64::from(max_weight) {
                if self.weights.admits(k, x) {
                    let w = self.weights.weight(k, x) as u32;
                    let value = match self.space {
                        Space::Coloured => k,
                        Space::Dilated => w,
                    };
                    let part = Part { value, colour: x };
                    keyed.push((
                        self.order_key(&part),
                        Letter {
                            value,
                            colour: x,
                            weight: w,
                        },
                    ));
                }
                k += 1;
            }
        }
        keyed.sort_by_key(|(key, _)| *key);
        keyed
    }

    /// All allowed parts of weight at most `max_weight`, in increasing order.
    pub fn letters(&self, max_weight: u32) -> Vec<Letter> {
        self.keyed_letters(max_weight)
            .into_iter()
            .map(|(_, l)| l)
            .collect()
    }

    fn allows<'a>(&'a self, letters: &'a [Letter]) -> impl Fn(usize, usize) -> bool + 'a {
        move |i, j| {
            let (a, b) = (&letters[i], &letters[j]);
            i64::from(a.value) - i64::from(b.value) >= self.matrix.get(a.colour, b.colour)
        }
    }

    pub fn is_admissible(&self, partition: &ColouredPartition) -> bool {
        self.matrix.admits(partition)
    }

    /// Admissible partitions of weight exactly `n`.
    pub fn enumerate_exact(&self, n: u32) -> Vec<ColouredPartition> {
        let letters = self.letters(n);
        let words = enumerate::list_exact(&letters, &self.allows(&letters), n);
        words
            .into_iter()
            .map(|word| ColouredPartition {
                parts: word
                    .into_iter()
                    .map(|i| Part {
                        value: letters[i].value,
                        colour: letters[i].colour,
                    })
                    .collect(),
            })
            .collect()
    }

    /// Admissible partitions of weight at most `n_max`, grouped by weight.
    pub fn enumerate(&self, n_max: u32) -> Vec<ColouredPartition> {
        (0..=n_max).flat_map(|n| self.enumerate_exact(n)).collect()
    }

    fn tracked_indices(&self, tracked: &Variables) -> Result<Vec<Option<usize>>> {
        for name in tracked.names() {
            if self.colours.index_of(name).is_none() {
                return Err(Error::Invalid(format!(
                    "tracked variable `{name}` is not a colour"
                )));
            }
        }
        Ok(self
            .colours
            .labels()
            .iter()
            .map(|l| tracked.index_of(l))
            .collect())
    }

    fn letter_monomial<'a>(
        &'a self,
        tracked: &'a Variables,
        slots: &'a [Option<usize>],
    ) -> impl Fn(&Letter) -> Monomial + 'a {
        move |l| {
            let mut exps = vec![0; tracked.len()];
            if let Some(v) = slots[l.colour] {
                exps[v] = 1;
            }
            Monomial::new(l.weight, &exps)
        }
    }

    fn by_largest(
        &self,
        tracked: &Variables,
        truncation: u32,
    ) -> Result<(Vec<Letter>, Vec<Series>)> {
        let slots = self.tracked_indices(tracked)?;
        let letters = self.letters(truncation);
        let f = enumerate::series_by_largest(
            &letters,
            &self.allows(&letters),
            &self.letter_monomial(tracked, &slots),
            tracked,
            truncation,
        );
        Ok((letters, f))
    }

    /// `Σ_λ q^{|λ|} Π x^{#x-parts}` over admissible `λ`, for the tracked
    /// colours only.
    pub fn generating_series(&self, tracked: &Variables, truncation: u32) -> Result<Series> {
        let (_, f) = self.by_largest(tracked, truncation)?;
        let mut total = Series::one(tracked, truncation);
        for s in &f {
            total.add_shifted(s, &Monomial::one(tracked));
        }
        Ok(total)
    }

    /// Generating series restricted to partitions whose largest part is at
    /// most (or exactly) `bound` in this system's order. A bound of value 0
    /// admits only the empty partition.
    pub fn generating_series_bounded(
        &self,
        bound: Part,
        mode: Bound,
        tracked: &Variables,
        truncation: u32,
    ) -> Result<Series> {
        let (letters, f) = self.by_largest(tracked, truncation)?;
        let bound_key = self.order_key(&bound);
        let mut out = match mode {
            Bound::AtMost => Series::one(tracked, truncation),
            Bound::Exactly => Series::zero(tracked, truncation),
        };
        let one = Monomial::one(tracked);
        for (l, s) in letters.iter().zip(&f) {
            let key = self.order_key(&Part {
                value: l.value,
                colour: l.colour,
            });
            let hit = match mode {
                Bound::AtMost => key <= bound_key,
                Bound::Exactly => key == bound_key,
            };
            if hit {
                out.add_shifted(s, &one);
            }
        }
        Ok(out)
    }

    /// Every allowed part of weight at most `truncation`, in increasing order,
    /// with the series of partitions whose largest part is exactly that part.
    /// Running sums give all the "at most" series in one pass.
    pub fn largest_part_series(
        &self,
        tracked: &Variables,
        truncation: u32,
    ) -> Result<Vec<(Part, Series)>> {
        let (letters, f) = self.by_largest(tracked, truncation)?;
        Ok(letters
            .iter()
            .zip(f)
            .map(|(l, s)| {
                (
                    Part {
                        value: l.value,
                        colour: l.colour,
                    },
                    s,
                )
            })
            .collect())
    }

    /// `value` followed by the colour's display suffix; in coloured space with
    /// non-identity weights the displayed value is the weight.
    pub fn render(&self, partition: &ColouredPartition, suffixes: &[String]) -> String {
        canonical_form(
            partition
                .parts
                .iter()
                .map(|p| (self.weight_of(p), suffixes[p.colour].clone()))
                .collect(),
        )
    }

    pub fn stats(&self, partition: &ColouredPartition, tracked: &Variables) -> Vec<u32> {
        let mut out = vec![0; tracked.len()];
        for p in &partition.parts {
            if let Some(v) = tracked.index_of(self.colours.label(p.colour)) {
                out[v] += 1;
            }
        }
        out
    }

    pub fn list(&self, n: u32, suffixes: &[String], tracked: &Variables) -> Vec<ListedPartition> {
        self.enumerate_exact(n)
            .iter()
            .map(|p| ListedPartition {
                weight: n,
                parts: self.render(p, suffixes),
                stats: self.stats(p, tracked),
            })
            .collect()
    }
}

/// Parts sorted by value descending, then suffix ascending, joined by commas.
pub fn canonical_form(mut parts: Vec<(u32, String)>) -> String {
    parts.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    parts
        .iter()
        .map(|(v, s)| format!("{v}{s}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Re-canonicalises a printed partition such as `3,2',1` (suffixes are any
/// non-digit tail of each part).
pub fn canonicalize_printed(text: &str) -> Result<String> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    if text.is_empty() {
        return Ok(String::new());
    }
    let parts = text
        .split(',')
        .map(|p| {
            let p = p.trim();
            let split = p.find(|c: char| !c.is_ascii_digit()).unwrap_or(p.len());
            let value: u32 = p[..split]
                .parse()
                .map_err(|_| Error::Invalid(format!("bad part `{p}`")))?;
            Ok((value, p[split..].replace('′', "'")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(canonical_form(parts))
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.value, self.colour)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn part(value: u32, colour: char) -> Part {
        Part {
            value,
            colour: "abcd".find(colour).unwrap(),
        }
    }

    fn labels() -> Vec<String> {
        ["a", "b", "c", "d"].map(String::from).to_vec()
    }

    #[test]
    fn admissibility_examples() {
        let d = DifferenceMatrix::primc();
        let ok = ColouredPartition {
            parts: vec![part(2, 'a'), part(1, 'b')],
        };
        let bad = ColouredPartition {
            parts: vec![part(2, 'd'), part(1, 'd')],
        };
        assert!(is_admissible(&ok, &d));
        assert!(!is_admissible(&bad, &d));
        assert!(is_admissible(&ColouredPartition::default(), &d));
    }

    #[test]
    fn small_enumerations() {
        let sys = PartitionSystem::primc();
        assert_eq!(sys.enumerate(0), vec![ColouredPartition::default()]);
        let ones: Vec<String> = sys
            .enumerate_exact(1)
            .iter()
            .map(|p| sys.render(p, &labels()))
            .collect();
        assert_eq!(ones, ["1d", "1c", "1b", "1a"]);
    }

    #[test]
    fn generating_series_first_terms() {
        let sys = PartitionSystem::primc();
        let vars = Variables::acd();
        assert_eq!(
            sys.generating_series(&vars, 0).unwrap(),
            Series::one(&vars, 0)
        );
        let s = sys.generating_series(&vars, 1).unwrap();
        for exps in [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            assert_eq!(s.coeff_at(1, &exps).unwrap(), BigInt::from(1));
        }
        assert_eq!(s.term_count(), 5);
    }

    #[test]
    fn series_matches_listing() {
        let sys = PartitionSystem::primc();
        let vars = Variables::acd();
        let s = sys.generating_series(&vars, 8).unwrap();
        for n in 0..=8 {
            let mut counts = std::collections::BTreeMap::new();
            for p in sys.enumerate_exact(n) {
                assert!(sys.is_admissible(&p));
                *counts.entry(sys.stats(&p, &vars)).or_insert(0u32) += 1;
            }
            let slice = s.slice(n).unwrap();
            assert_eq!(slice.len(), counts.len());
            for (exps, c) in slice {
                assert_eq!(*c, BigInt::from(counts[exps]));
            }
        }
    }

    #[test]
    fn bounded_oracle_small_cases() {
        let sys = PartitionSystem::primc();
        let vars = Variables::acd();
        let empty = sys
            .generating_series_bounded(part(0, 'd'), Bound::AtMost, &vars, 6)
            .unwrap();
        assert_eq!(empty, Series::one(&vars, 6));
        let g1d = sys
            .generating_series_bounded(part(1, 'd'), Bound::AtMost, &vars, 6)
            .unwrap();
        assert_eq!(g1d.total_at(1).unwrap(), BigInt::from(4));
        // largest part exactly 1_b: 1_b repeated
        let e1b = sys
            .generating_series_bounded(part(1, 'b'), Bound::Exactly, &vars, 6)
            .unwrap();
        let want = Series::from_terms(
            &vars,
            6,
            (1..=6).map(|n| (Monomial::new(n, &[0, 0, 0]), BigInt::from(1))),
        )
        .unwrap();
        assert_eq!(e1b, want);
    }

    #[test]
    fn orientation_reproduces_largest_part_removal() {
        // after a largest part k_d the next part is k_c, k_a, or at most (k-1)_c
        let sys = PartitionSystem::primc();
        let k = 3;
        let letters = sys.letters(20);
        let allows = sys.allows(&letters);
        let top = letters
            .iter()
            .position(|l| l.value == k && l.colour == 3)
            .unwrap();
        let followers: Vec<(u32, usize)> = (0..=top)
            .filter(|&j| allows(top, j))
            .map(|j| (letters[j].value, letters[j].colour))
            .collect();
        let mut want: Vec<(u32, usize)> = vec![(k, 2), (k, 0)];
        // everything up to (k-1)_c, which excludes (k-1)_d
        want.extend((1..k).flat_map(|v| (0..4).map(move |c| (v, c))));
        want.retain(|&p| p != (k - 1, 3));
        want.sort();
        let mut got = followers;
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn weight_minimum_excludes_parts() {
        let sys = PartitionSystem::new(
            ColourSystem::default(),
            DifferenceMatrix::primc(),
            WeightMap::identity(4).with_minimum(3, 2),
        )
        .unwrap();
        assert!(sys
            .letters(3)
            .iter()
            .all(|l| !(l.colour == 3 && l.weight < 2)));
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(canonicalize_printed("(2',2,2)").unwrap(), "2,2,2'");
        assert_eq!(canonicalize_printed("5′,1").unwrap(), "5',1");
        assert_eq!(canonicalize_printed("()").unwrap(), "");
    }
}
