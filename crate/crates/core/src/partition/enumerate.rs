//! Enumeration over a finite ordered alphabet of weighted letters, where a
//! partition is a nonincreasing word and an adjacency predicate decides which
//! letter may follow which.

use num_bigint::BigInt;
use num_traits::One;

use crate::series::{Monomial, Series, Variables};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    /// The quantity gaps are measured in (an undilated `k` or a dilated value).
    pub value: u32,
    pub colour: usize,
    pub weight: u32,
}

/// All words of total weight exactly `n`, largest letter first. Words are
/// produced in descending lexicographic order of letter indices.
pub(crate) fn list_exact<F>(letters: &[Letter], allows: &F, n: u32) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    fn descend<F: Fn(usize, usize) -> bool>(
        letters: &[Letter],
        allows: &F,
        remaining: u32,
        last: Option<usize>,
        word: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(word.clone());
            return;
        }
        let top = match last {
            Some(i) => i + 1,
            None => letters.len(),
        };
        for j in (0..top).rev() {
            if letters[j].weight > remaining {
                continue;
            }
            if let Some(i) = last {
                if !allows(i, j) {
                    continue;
                }
            }
            word.push(j);
            descend(
                letters,
                allows,
                remaining - letters[j].weight,
                Some(j),
                word,
                out,
            );
            word.pop();
        }
    }
    let mut out = Vec::new();
    descend(letters, allows, n, None, &mut Vec::new(), &mut out);
    out
}

/// `F[j]`: generating series of admissible words whose first (largest) letter
/// is `j`, computed in increasing letter order from
/// `F[j] = x_j · (1 + Σ_{i ≤ j, allows(j, i)} F[i])`.
pub(crate) fn series_by_largest<F, M>(
    letters: &[Letter],
    allows: &F,
    monomial: &M,
    vars: &Variables,
    truncation: u32,
) -> Vec<Series>
where
    F: Fn(usize, usize) -> bool,
    M: Fn(&Letter) -> Monomial,
{
    let one = BigInt::one();
    let mut by_largest: Vec<Series> = Vec::with_capacity(letters.len());
    for (j, letter) in letters.iter().enumerate() {
        let m = monomial(letter);
        let mut f = Series::monomial(vars, truncation, one.clone(), m.clone());
        for (i, prev) in by_largest.iter().enumerate() {
            if allows(j, i) {
                f.add_shifted(prev, &m);
            }
        }
        if allows(j, j) {
            // repeated letter: F[j] appears on both sides, solve degree by degree
            f = f
                .div_binomial(&-one.clone(), &m)
                .expect("letters have positive weight");
        }
        by_largest.push(f);
    }
    by_largest
}
