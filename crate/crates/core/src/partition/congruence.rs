use serde::{Deserialize, Serialize};

use super::enumerate::{self, Letter};
use super::{canonical_form, ListedPartition};
use crate::error::{Error, Result};
use crate::series::{Monomial, Series, Variables};

/// One kind of part in a congruence-defined class: all positive integers in a
/// residue class, optionally distinct, optionally marked and tracked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KindRule {
    pub residue: u32,
    /// Printed after the value, e.g. `'` for a second kind.
    #[serde(default)]
    pub suffix: String,
    #[serde(default)]
    pub distinct: bool,
    /// Statistic variable counting parts of this kind.
    #[serde(default)]
    pub tracked: Option<String>,
}

/// Partitions whose parts are drawn from residue classes modulo `modulus`.
/// The same residue may appear in several kinds (e.g. ordinary and primed
/// multiples of 3).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceClass {
    pub modulus: u32,
    pub kinds: Vec<KindRule>,
}

impl KindRule {
    pub fn new(residue: u32) -> Self {
        KindRule {
            residue,
            suffix: String::new(),
            distinct: false,
            tracked: None,
        }
    }

    pub fn distinct(mut self) -> Self {
        self.distinct = true;
        self
    }

    pub fn suffix(mut self, s: &str) -> Self {
        self.suffix = s.to_string();
        self
    }

    pub fn tracked(mut self, var: &str) -> Self {
        self.tracked = Some(var.to_string());
        self
    }
}

impl CongruenceClass {
    pub fn new(modulus: u32, kinds: Vec<KindRule>) -> Result<Self> {
        let class = CongruenceClass { modulus, kinds };
        class.validate()?;
        Ok(class)
    }

    pub fn validate(&self) -> Result<()> {
        if self.modulus == 0 {
            return Err(Error::Invalid("modulus must be positive".into()));
        }
        for (i, k) in self.kinds.iter().enumerate() {
            if k.residue >= self.modulus {
                return Err(Error::Invalid(format!(
                    "residue {} not in [0, {})",
                    k.residue, self.modulus
                )));
            }
            if self.kinds[..i]
                .iter()
                .any(|o| o.residue == k.residue && o.suffix == k.suffix)
            {
                return Err(Error::Invalid(format!(
                    "kind {}{} listed twice",
                    k.residue, k.suffix
                )));
            }
        }
        Ok(())
    }

    /// Letters ordered by value, then kind index.
    fn letters(&self, max_weight: u32) -> Vec<Letter> {
        let mut out = Vec::new();
        for v in 1..=max_weight {
            for (i, k) in self.kinds.iter().enumerate() {
                if v % self.modulus == k.residue {
                    out.push(Letter {
                        value: v,
                        colour: i,
                        weight: v,
                    });
                }
            }
        }
        out
    }

    /// A word is a multiset listed in decreasing letter order; distinct kinds
    /// may not repeat.
    fn allows<'a>(&'a self, letters: &'a [Letter]) -> impl Fn(usize, usize) -> bool + 'a {
        move |i, j| j < i || !self.kinds[letters[i].colour].distinct
    }

    fn slots(&self, tracked: &Variables) -> Result<Vec<Option<usize>>> {
        self.kinds
            .iter()
            .map(|k| match &k.tracked {
                None => Ok(None),
                Some(name) => tracked.index_of(name).map(Some).ok_or_else(|| {
                    Error::Invalid(format!(
                        "kind tracks `{name}`, which is not in the variable set"
                    ))
                }),
            })
            .collect()
    }

    pub fn list(&self, n: u32, tracked: &Variables) -> Result<Vec<ListedPartition>> {
        let slots = self.slots(tracked)?;
        let letters = self.letters(n);
        let words = enumerate::list_exact(&letters, &self.allows(&letters), n);
        Ok(words
            .into_iter()
            .map(|word| {
                let mut stats = vec![0; tracked.len()];
                let parts = word
                    .iter()
                    .map(|&i| {
                        let l = &letters[i];
                        if let Some(v) = slots[l.colour] {
                            stats[v] += 1;
                        }
                        (l.value, self.kinds[l.colour].suffix.clone())
                    })
                    .collect();
                ListedPartition {
                    weight: n,
                    parts: canonical_form(parts),
                    stats,
                }
            })
            .collect())
    }

    pub fn generating_series(&self, tracked: &Variables, truncation: u32) -> Result<Series> {
        let slots = self.slots(tracked)?;
        let letters = self.letters(truncation);
        let monomial = |l: &Letter| {
            let mut exps = vec![0; tracked.len()];
            if let Some(v) = slots[l.colour] {
                exps[v] = 1;
            }
            Monomial::new(l.weight, &exps)
        };
        let f = enumerate::series_by_largest(
            &letters,
            &self.allows(&letters),
            &monomial,
            tracked,
            truncation,
        );
        let mut total = Series::one(tracked, truncation);
        for s in &f {
            total = &total + s;
        }
        Ok(total)
    }
}
