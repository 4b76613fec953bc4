use std::collections::BTreeMap;

use super::{ExtraCheck, IdentityCase, ProseRule, Side, DEFAULT_N_MAX, DEFAULT_TRUNCATION};
use crate::dilation::DilationSpec;
use crate::error::{Error, Result};
use crate::partition::{CongruenceClass, DifferenceMatrix, KindRule};
use crate::product::Product;

/// Name accepted by the CLI for the Rogers–Ramanujan check, which is not an
/// [`IdentityCase`].
pub const RR_CASE: &str = "rr";

fn map(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn product(text: &str) -> Product {
    Product::parse(text).expect("built-in product parses")
}

fn base(name: &str, description: &str) -> IdentityCase {
    IdentityCase {
        name: name.into(),
        description: description.into(),
        colours: strings(&["a", "b", "c", "d"]),
        matrix: DifferenceMatrix::primc().rows().to_vec(),
        dilation: DilationSpec::identity(),
        minimums: BTreeMap::new(),
        tracked: strings(&["a", "c", "d"]),
        suffixes: BTreeMap::new(),
        legend: BTreeMap::new(),
        b_side: None,
        product: Product::default(),
        n_max: DEFAULT_N_MAX,
        truncation: DEFAULT_TRUNCATION,
        extra: Vec::new(),
    }
}

fn theorem_main() -> IdentityCase {
    IdentityCase {
        suffixes: map(&[("a", "a"), ("b", "b"), ("c", "c"), ("d", "d")]),
        legend: map(&[
            ("a", "parts coloured a"),
            ("c", "parts coloured c"),
            ("d", "parts coloured d"),
        ]),
        product: product("(-aq;q^2)_inf (-dq;q^2)_inf / (q;q)_inf / (cq;q^2)_inf"),
        extra: vec![ExtraCheck::EngineSuite],
        ..base(
            "theorem-main",
            "four-coloured partitions under the basic difference matrix",
        )
    }
}

fn q2_dilation() -> DilationSpec {
    DilationSpec::new(2, &[("a", -1), ("d", 1)])
}

fn primc() -> IdentityCase {
    IdentityCase {
        dilation: q2_dilation().eliminating(&["a", "c", "d"]),
        tracked: Vec::new(),
        suffixes: map(&[("b", "'"), ("d", "'")]),
        b_side: Some(CongruenceClass {
            modulus: 1,
            kinds: vec![KindRule::new(0)],
        }),
        product: product("(-q;q^4)_inf (-q^3;q^4)_inf / (q^2;q^2)_inf / (q^2;q^4)_inf"),
        extra: vec![
            ExtraCheck::PartitionNumbers { n_max: 40 },
            ExtraCheck::ProductEquals {
                product: product("1/(q;q)_inf"),
                truncation: 60,
            },
        ],
        ..base(
            "primc",
            "the q -> q^2 dilation with every statistic set to 1: ordinary partitions",
        )
    }
}

fn cor2() -> IdentityCase {
    IdentityCase {
        dilation: q2_dilation(),
        suffixes: map(&[("b", "'"), ("d", "'")]),
        legend: map(&[
            ("a", "odd red parts (A) / parts 1 mod 4 (B)"),
            ("c", "even red parts (A) / green parts (B)"),
            ("d", "odd green parts (A) / parts 3 mod 4 (B)"),
        ]),
        b_side: Some(CongruenceClass {
            modulus: 4,
            kinds: vec![
                KindRule::new(0),
                KindRule::new(1).distinct().tracked("a"),
                KindRule::new(2),
                KindRule::new(2).suffix("'").tracked("c"),
                KindRule::new(3).distinct().tracked("d"),
            ],
        }),
        product: product("(-aq;q^4)_inf (-dq^3;q^4)_inf / (q^2;q^2)_inf / (cq^2;q^4)_inf"),
        extra: vec![
            ExtraCheck::GoldenList {
                side: Side::A,
                n: 6,
                partitions: strings(&[
                    "6", "6'", "5,1", "5',1", "4,2", "4',2", "4,2'", "4',2'", "3',2,1", "2,2,2",
                    "2',2',2'",
                ]),
                probe: Vec::new(),
            },
            ExtraCheck::GoldenList {
                side: Side::B,
                n: 6,
                partitions: strings(&[
                    "6", "6'", "5,1", "4,2", "4,2'", "3,2,1", "3,2',1", "2,2,2", "2,2,2'",
                    "2,2',2'", "2',2',2'",
                ]),
                probe: Vec::new(),
            },
            ExtraCheck::PointValue {
                n: 6,
                exps: [("a", 1), ("c", 0), ("d", 1)]
                    .iter()
                    .map(|(k, v)| (k.to_string(), *v))
                    .collect(),
                value: 1,
            },
            ExtraCheck::ProseEquivalence {
                rule: ProseRule::RedGreen,
                n_max: 20,
            },
        ],
        ..base(
            "cor2",
            "two-coloured partitions from the q -> q^2 dilation (green printed with ')",
        )
    }
}

fn cor3() -> IdentityCase {
    IdentityCase {
        dilation: DilationSpec::new(4, &[("a", -3), ("c", -2), ("d", 3)]),
        legend: map(&[
            ("a", "parts 1 mod 4 (A) / 1 mod 8 (B)"),
            ("c", "parts 2 mod 4 (A) / 2 mod 8 (B)"),
            ("d", "parts 3 mod 4 (A) / 7 mod 8 (B)"),
        ]),
        b_side: Some(CongruenceClass {
            modulus: 8,
            kinds: vec![
                KindRule::new(0),
                KindRule::new(1).distinct().tracked("a"),
                KindRule::new(2).tracked("c"),
                KindRule::new(4),
                KindRule::new(7).distinct().tracked("d"),
            ],
        }),
        product: product("(-aq;q^8)_inf (-dq^7;q^8)_inf / (q^4;q^4)_inf / (cq^2;q^8)_inf"),
        n_max: 28,
        extra: vec![
            ExtraCheck::GoldenList {
                side: Side::A,
                n: 14,
                partitions: strings(&[
                    "14",
                    "13,1",
                    "12,2",
                    "11,2,1",
                    "10,4",
                    "10,2,2",
                    "9,2,2,1",
                    "8,2,2,2",
                    "7,2,2,2,1",
                    "6,6,2",
                    "6,4,4",
                    "6,2,2,2,2",
                    "2,2,2,2,2,2,2",
                ]),
                probe: vec![13, 14],
            },
            ExtraCheck::GoldenList {
                side: Side::B,
                n: 14,
                partitions: strings(&[
                    "12,2",
                    "10,4",
                    "10,2,2",
                    "9,4,1",
                    "9,2,2,1",
                    "8,4,2",
                    "8,2,2,2",
                    "7,4,2,1",
                    "7,2,2,2,1",
                    "4,4,4,2",
                    "4,4,2,2,2",
                    "4,2,2,2,2,2",
                    "2,2,2,2,2,2,2",
                ]),
                probe: vec![13, 14],
            },
            ExtraCheck::ProseEquivalence {
                rule: ProseRule::ModFour,
                n_max: 28,
            },
        ],
        ..base(
            "cor3",
            "partitions from the q -> q^4 dilation, no part equal to 3",
        )
    }
}

fn capparelli_adjacent() -> IdentityCase {
    IdentityCase {
        dilation: DilationSpec::new(3, &[("a", -1), ("d", 1)]).eliminating(&["c"]),
        tracked: strings(&["a", "d"]),
        suffixes: map(&[("c", "'")]),
        legend: map(&[
            ("a", "parts 2 mod 3 (A) / 2 mod 6 (B)"),
            ("d", "parts 1 mod 3 (A) / 4 mod 6 (B)"),
        ]),
        b_side: Some(CongruenceClass {
            modulus: 6,
            kinds: vec![
                KindRule::new(0),
                KindRule::new(0).suffix("'").distinct(),
                KindRule::new(2).distinct().tracked("a"),
                KindRule::new(3),
                KindRule::new(3).suffix("'").distinct(),
                KindRule::new(4).distinct().tracked("d"),
            ],
        }),
        product: product("(-aq^2;q^6)_inf (-dq^4;q^6)_inf (-q^3;q^3)_inf / (q^3;q^3)_inf"),
        ..base(
            "capparelli-adjacent",
            "the q -> q^3 dilation with c set to 1; multiples of 3 in two kinds; \
             the product differs from the Capparelli product only by 1/(q^3;q^3)_inf",
        )
    }
}

/// The built-in cases, in a fixed order.
pub fn builtin_cases() -> Vec<IdentityCase> {
    vec![
        theorem_main(),
        primc(),
        cor2(),
        cor3(),
        capparelli_adjacent(),
    ]
}

pub fn builtin_case(name: &str) -> Result<IdentityCase> {
    builtin_cases()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCase(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Variables;
    use num_bigint::BigInt;

    #[test]
    fn all_cases_validate() {
        let cases = builtin_cases();
        let names: Vec<&str> = cases.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "theorem-main",
                "primc",
                "cor2",
                "cor3",
                "capparelli-adjacent"
            ]
        );
        for c in &cases {
            c.validate().unwrap();
        }
        assert!(matches!(builtin_case("nope"), Err(Error::UnknownCase(_))));
    }

    #[test]
    fn primc_counts_partitions_of_five() {
        let s = builtin_case("primc").unwrap().a_series(5).unwrap();
        assert_eq!(s.vars(), &Variables::none());
        assert_eq!(s.total_at(5).unwrap(), BigInt::from(7));
    }

    #[test]
    fn cases_round_trip_through_json() {
        for c in builtin_cases() {
            let json = serde_json::to_string(&c).unwrap();
            let back: IdentityCase = serde_json::from_str(&json).unwrap();
            assert_eq!(back, c);
        }
    }
}
