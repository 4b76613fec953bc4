//! Difference conditions stated in words rather than as a matrix, enumerated
//! directly so they can be compared with the matrix form.

use serde::{Deserialize, Serialize};

use crate::partition::{canonical_form, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProseRule {
    /// Two colours, red and green (green printed with `'`), no green 1, and
    /// `λ_i − λ_{i+1} ≥ 1` if `λ_i` is odd and the colours differ, `≥ 2` if
    /// `λ_i` is even and the colours differ, `≥ 3` if `λ_i` is odd and the
    /// colours agree.
    RedGreen,
    /// No part equal to 3, and `λ_i − λ_{i+1} ≥ 5` if `λ_i ≡ 3 (mod 4)` or if
    /// `λ_i ≡ 0, 1` and `λ_{i+1} ≡ 1, 2 (mod 4)`.
    ModFour,
}

impl ProseRule {
    fn kinds(self) -> &'static [&'static str] {
        match self {
            ProseRule::RedGreen => &["", "'"],
            ProseRule::ModFour => &[""],
        }
    }

    fn admits_part(self, value: u32, kind: usize) -> bool {
        match self {
            ProseRule::RedGreen => !(value == 1 && kind == 1),
            ProseRule::ModFour => value != 3,
        }
    }

    fn allows(self, (v, x): (u32, usize), (w, y): (u32, usize)) -> bool {
        let gap = v - w;
        match self {
            ProseRule::RedGreen => {
                let odd = v % 2 == 1;
                match (odd, x == y) {
                    (true, false) => gap >= 1,
                    (false, false) => gap >= 2,
                    (true, true) => gap >= 3,
                    (false, true) => true,
                }
            }
            ProseRule::ModFour => {
                let big = v % 4 == 3 || (matches!(v % 4, 0 | 1) && matches!(w % 4, 1 | 2));
                !big || gap >= 5
            }
        }
    }

    /// All partitions of `n` satisfying the rule, canonically printed.
    pub fn list(self, n: u32) -> Vec<String> {
        let kinds = self.kinds();
        let mut letters = Vec::new();
        for v in 1..=n {
            for x in 0..kinds.len() {
                if self.admits_part(v, x) {
                    letters.push(Letter {
                        value: v,
                        colour: x,
                        weight: v,
                    });
                }
            }
        }
        let allows = |i: usize, j: usize| {
            let (a, b) = (&letters[i], &letters[j]);
            self.allows((a.value, a.colour), (b.value, b.colour))
        };
        let mut out: Vec<String> = crate::partition::enumerate::list_exact(&letters, &allows, n)
            .into_iter()
            .map(|word| {
                canonical_form(
                    word.iter()
                        .map(|&i| (letters[i].value, kinds[letters[i].colour].to_string()))
                        .collect(),
                )
            })
            .collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn red_green_six() {
        let got = ProseRule::RedGreen.list(6);
        assert_eq!(got.len(), 11);
        assert!(got.contains(&"5',1".to_string()));
        assert!(!got.contains(&"5,1'".to_string()));
    }

    #[test]
    fn mod_four_fourteen() {
        assert_eq!(ProseRule::ModFour.list(14).len(), 13);
        assert!(ProseRule::ModFour.list(3).iter().all(|p| p != "3"));
    }
}
