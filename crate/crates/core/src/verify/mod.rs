//! Identity cases: a difference-condition side, an optional congruence side
//! and an infinite product, compared coefficient by coefficient.

mod brute;
mod builtin;
mod prose;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dilation::DilationSpec;
use crate::error::{Error, Result};
use crate::partition::{
    canonicalize_printed, ColourSystem, CongruenceClass, DifferenceMatrix, ListedPartition,
    PartitionSystem, WeightMap,
};
use crate::product::Product;
use crate::recurrence::checks::{engine_suite, rogers_ramanujan, SuiteParams};
use crate::report::{CaseReport, CheckReport};
use crate::series::{Series, Variables};

pub use brute::{count_partitions, partition_number};
pub use builtin::{builtin_case, builtin_cases, RR_CASE};
pub use prose::ProseRule;

/// Largest truncation used for the dilation-consistency check; the
/// undilated four-variable series gets expensive beyond it.
pub const DILATION_CHECK_CAP: u32 = 24;

pub const DEFAULT_N_MAX: u32 = 24;
pub const DEFAULT_TRUNCATION: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
    #[serde(rename = "product")]
    Product,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Side::A),
            "B" | "b" => Ok(Side::B),
            "product" | "P" => Ok(Side::Product),
            _ => Err(Error::Invalid(format!(
                "side must be A, B or product, got `{s}`"
            ))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
            Side::Product => "product",
        })
    }
}

/// Case-specific checks beyond the side-by-side comparison.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExtraCheck {
    /// The A-side with every statistic set to 1 counts ordinary partitions,
    /// checked against a naive counter.
    PartitionNumbers { n_max: u32 },
    /// The case's product equals another product.
    ProductEquals { product: Product, truncation: u32 },
    /// The listing of one side at weight `n` is exactly `partitions`. Each
    /// weight in `probe` is also tried and the matching ones are reported.
    GoldenList {
        side: Side,
        n: u32,
        partitions: Vec<String>,
        #[serde(default)]
        probe: Vec<u32>,
    },
    /// A single coefficient on the A- and B-sides.
    PointValue {
        n: u32,
        exps: BTreeMap<String, u32>,
        value: i64,
    },
    /// Partitions described by a prose rule coincide with the A-side.
    ProseEquivalence { rule: ProseRule, n_max: u32 },
    /// The full recurrence-engine suite.
    EngineSuite,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCase {
    pub name: String,
    #[serde(default)]
    pub description: String,
    #[serde(default = "default_colours")]
    pub colours: Vec<String>,
    /// Undilated difference matrix, rows indexed by the larger part's colour.
    pub matrix: Vec<Vec<i64>>,
    #[serde(default)]
    pub dilation: DilationSpec,
    /// Minimum allowed weight per colour.
    #[serde(default)]
    pub minimums: BTreeMap<String, u32>,
    /// Statistic variables, all of them colour names.
    pub tracked: Vec<String>,
    /// Printed after each part, by colour.
    #[serde(default)]
    pub suffixes: BTreeMap<String, String>,
    /// What each statistic counts, for reports.
    #[serde(default)]
    pub legend: BTreeMap<String, String>,
    #[serde(default)]
    pub b_side: Option<CongruenceClass>,
    pub product: Product,
    #[serde(default = "default_n_max")]
    pub n_max: u32,
    #[serde(default = "default_truncation")]
    pub truncation: u32,
    #[serde(default)]
    pub extra: Vec<ExtraCheck>,
}

fn default_colours() -> Vec<String> {
    ColourSystem::default().labels().to_vec()
}

fn default_n_max() -> u32 {
    DEFAULT_N_MAX
}

fn default_truncation() -> u32 {
    DEFAULT_TRUNCATION
}

impl IdentityCase {
    pub fn colour_system(&self) -> Result<ColourSystem> {
        ColourSystem::new(self.colours.iter().cloned())
    }

    /// The A-side system: parts are dilated integers, gaps checked against
    /// the dilated matrix.
    pub fn a_system(&self) -> Result<PartitionSystem> {
        let colours = self.colour_system()?;
        let matrix = DifferenceMatrix::new(self.matrix.clone())?;
        let mut sys = if self.dilation.is_identity() {
            PartitionSystem::new(colours.clone(), matrix, WeightMap::identity(colours.len()))?
        } else {
            PartitionSystem::dilated(colours.clone(), &matrix, &self.dilation)?
        };
        for (name, &min) in &self.minimums {
            let x = colours
                .index_of(name)
                .ok_or_else(|| Error::Invalid(format!("minimum for unknown colour `{name}`")))?;
            sys.weights = sys.weights.clone().with_minimum(x, min);
        }
        Ok(sys)
    }

    pub fn variables(&self) -> Result<Variables> {
        Variables::new(self.tracked.iter().cloned())
    }

    pub fn suffix_list(&self) -> Vec<String> {
        self.colours
            .iter()
            .map(|c| self.suffixes.get(c).cloned().unwrap_or_default())
            .collect()
    }

    pub fn a_series(&self, truncation: u32) -> Result<Series> {
        self.a_system()?
            .generating_series(&self.variables()?, truncation)
    }

    pub fn b_series(&self, truncation: u32) -> Result<Option<Series>> {
        match &self.b_side {
            None => Ok(None),
            Some(class) => class
                .generating_series(&self.variables()?, truncation)
                .map(Some),
        }
    }

    pub fn product_series(&self, truncation: u32) -> Result<Series> {
        self.product.expand_in(&self.variables()?, truncation)
    }

    /// Partitions of weight `n` on one of the combinatorial sides.
    pub fn list(&self, side: Side, n: u32) -> Result<Vec<ListedPartition>> {
        let vars = self.variables()?;
        match side {
            Side::A => Ok(self.a_system()?.list(n, &self.suffix_list(), &vars)),
            Side::B => match &self.b_side {
                Some(class) => class.list(n, &vars),
                None => Err(Error::Invalid(format!(
                    "case `{}` has no B-side",
                    self.name
                ))),
            },
            Side::Product => Err(Error::Invalid(
                "the product side has no partition listing".into(),
            )),
        }
    }

    pub fn series(&self, side: Side, truncation: u32) -> Result<Series> {
        match side {
            Side::A => self.a_series(truncation),
            Side::B => self
                .b_series(truncation)?
                .ok_or_else(|| Error::Invalid(format!("case `{}` has no B-side", self.name))),
            Side::Product => self.product_series(truncation),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let colours = self.colour_system()?;
        self.a_system()?;
        let vars = self.variables()?;
        for t in vars.names() {
            if colours.index_of(t).is_none() {
                return Err(Error::Invalid(format!("tracked `{t}` is not a colour")));
            }
            if self.dilation.eliminate.contains(t) {
                return Err(Error::Invalid(format!(
                    "`{t}` is both tracked and eliminated"
                )));
            }
        }
        for l in self.product.letters() {
            if vars.index_of(&l).is_none() {
                return Err(Error::Invalid(format!(
                    "product uses untracked variable `{l}`"
                )));
            }
        }
        if let Some(class) = &self.b_side {
            class.validate()?;
        }
        Ok(())
    }
}

/// Loads cases from a JSON array (or a single object).
pub fn load_cases(json: &str) -> Result<Vec<IdentityCase>> {
    let value: serde_json::Value =
        serde_json::from_str(json).map_err(|e| Error::Invalid(format!("case file: {e}")))?;
    let cases: Vec<IdentityCase> = match value {
        serde_json::Value::Array(_) => serde_json::from_value(value),
        _ => serde_json::from_value(value).map(|c| vec![c]),
    }
    .map_err(|e| Error::Invalid(format!("case file: {e}")))?;
    for c in &cases {
        c.validate()?;
    }
    Ok(cases)
}

fn totals(s: &Series, n_max: u32) -> Result<Vec<String>> {
    (0..=n_max)
        .map(|n| Ok(s.total_at(n)?.to_string()))
        .collect()
}

/// Compares every computed side up to `q^{n_max}` (all statistics), then
/// runs the case's extra checks.
pub fn verify_case(case: &IdentityCase, n_max: u32, truncation: u32) -> Result<CaseReport> {
    if n_max > truncation {
        return Err(Error::TruncationTooSmall { n_max, truncation });
    }
    case.validate()?;
    let n = n_max;
    let ((a, b), p) = rayon::join(
        || rayon::join(|| case.a_series(n), || case.b_series(n)),
        || case.product_series(n),
    );
    let (a, b, p) = (a?, b?, p?);

    let mut checks = Vec::new();
    let mut rep = CheckReport::new("a-vs-product").param("n_max", n);
    rep.compare("A-side vs product", &a, &p, n)?;
    checks.push(rep);
    if let Some(b) = &b {
        let mut rep = CheckReport::new("b-vs-product").param("n_max", n);
        rep.compare("B-side vs product", b, &p, n)?;
        checks.push(rep);
        let mut rep = CheckReport::new("a-vs-b").param("n_max", n);
        rep.compare("A-side vs B-side", &a, b, n)?;
        checks.push(rep);
    }
    if !case.dilation.is_identity() {
        checks.push(dilation_consistency(case, &a, n.min(DILATION_CHECK_CAP))?);
    }
    let extras: Vec<Result<Vec<CheckReport>>> =
        case.extra.par_iter().map(|x| run_extra(case, x)).collect();
    for e in extras {
        checks.extend(e?);
    }

    let mut side_totals = BTreeMap::new();
    side_totals.insert("A".to_string(), totals(&a, n)?);
    if let Some(b) = &b {
        side_totals.insert("B".to_string(), totals(b, n)?);
    }
    side_totals.insert("product".to_string(), totals(&p, n)?);
    Ok(CaseReport {
        case: case.name.clone(),
        n_max,
        truncation,
        checks,
        totals: side_totals,
    })
}

/// The undilated generating series, pushed through the dilation, equals the
/// series of the dilated system.
fn dilation_consistency(case: &IdentityCase, a: &Series, n: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new("dilation-consistency").param("truncation", n);
    let colours = case.colour_system()?;
    let wanted: BTreeSet<&String> = case
        .tracked
        .iter()
        .chain(&case.dilation.eliminate)
        .collect();
    let all = Variables::new(
        colours
            .labels()
            .iter()
            .filter(|c| wanted.contains(c))
            .cloned(),
    )?;
    let base = PartitionSystem::new(
        colours.clone(),
        DifferenceMatrix::new(case.matrix.clone())?,
        WeightMap::identity(colours.len()),
    )?;
    // a dilated part weighs at least its undilated k, so truncation n suffices
    let undilated = base.generating_series(&all, n)?;
    let pushed = undilated.substitute(&case.dilation, n)?;
    rep.compare("substituted vs dilated", &pushed, &a.truncate(n), n)?;
    Ok(rep)
}

fn run_extra(case: &IdentityCase, extra: &ExtraCheck) -> Result<Vec<CheckReport>> {
    let vars = case.variables()?;
    Ok(match extra {
        ExtraCheck::PartitionNumbers { n_max } => {
            let mut rep = CheckReport::new("partition-numbers").param("n_max", *n_max);
            let names: Vec<&str> = vars.names().iter().map(String::as_str).collect();
            let a = case.a_series(*n_max)?.specialize_to_one(&names);
            for n in 0..=*n_max {
                let got = a.total_at(n)?;
                let want = BigInt::from(partition_number(n));
                rep.require(&format!("p({n}) = {want}, series gives {got}"), got == want);
            }
            vec![rep]
        }
        ExtraCheck::ProductEquals {
            product,
            truncation,
        } => {
            let mut rep = CheckReport::new("product-equals")
                .param("other", product.to_string())
                .param("truncation", *truncation);
            let lhs = case.product.expand_in(&vars, *truncation)?;
            let rhs = product.expand_in(&vars, *truncation)?;
            rep.compare("product vs other", &lhs, &rhs, *truncation)?;
            vec![rep]
        }
        ExtraCheck::GoldenList {
            side,
            n,
            partitions,
            probe,
        } => {
            let mut rep = CheckReport::new(format!("golden-list-{side}-{n}"))
                .param("side", side.to_string())
                .param("n", *n)
                .param("expected_count", partitions.len());
            let want: BTreeSet<String> = partitions
                .iter()
                .map(|p| canonicalize_printed(p))
                .collect::<Result<_>>()?;
            let listing = |m: u32| -> Result<BTreeSet<String>> {
                Ok(case.list(*side, m)?.into_iter().map(|l| l.parts).collect())
            };
            let got = listing(*n)?;
            rep.note(format!("{} partitions of {n} listed", got.len()));
            if let Some(extra) = got.difference(&want).next() {
                rep.note(format!("listed but not expected: ({extra})"));
            }
            if let Some(missing) = want.difference(&got).next() {
                rep.note(format!("expected but not listed: ({missing})"));
            }
            rep.require("listing matches", got == want);
            for &m in probe {
                let at = listing(m)?;
                let verdict = if at == want {
                    "matches"
                } else {
                    "does not match"
                };
                rep.note(format!(
                    "weight {m}: {} partitions, {verdict} the list",
                    at.len()
                ));
            }
            vec![rep]
        }
        ExtraCheck::PointValue { n, exps, value } => {
            let mut rep = CheckReport::new(format!("point-value-{n}"))
                .param("n", *n)
                .param("exps", serde_json::to_value(exps).expect("plain map"))
                .param("value", *value);
            let mut e = vec![0; vars.len()];
            for (name, k) in exps {
                let i = vars
                    .index_of(name)
                    .ok_or_else(|| Error::Invalid(format!("`{name}` is not tracked")))?;
                e[i] = *k;
            }
            let want = BigInt::from(*value);
            let a = case.a_series(*n)?.coeff_at(*n, &e)?;
            rep.require(&format!("A-side gives {a}"), a == want);
            if let Some(b) = case.b_series(*n)? {
                let b = b.coeff_at(*n, &e)?;
                rep.require(&format!("B-side gives {b}"), b == want);
            }
            vec![rep]
        }
        ExtraCheck::ProseEquivalence { rule, n_max } => {
            let mut rep = CheckReport::new("prose-equivalence")
                .param("rule", serde_json::to_value(rule).expect("unit enum"))
                .param("n_max", *n_max);
            let sys = case.a_system()?;
            let suffixes = case.suffix_list();
            for n in 0..=*n_max {
                let mut from_matrix: Vec<String> = sys
                    .list(n, &suffixes, &vars)
                    .into_iter()
                    .map(|l| l.parts)
                    .collect();
                from_matrix.sort();
                let from_prose = rule.list(n);
                if from_matrix != from_prose {
                    let only_m = from_matrix.iter().find(|p| !from_prose.contains(p));
                    let only_p = from_prose.iter().find(|p| !from_matrix.contains(p));
                    rep.require(
                        &format!(
                            "weight {n}: matrix-only {:?}, prose-only {:?}",
                            only_m, only_p
                        ),
                        false,
                    );
                }
            }
            if rep.passed() {
                rep.note("the prose conditions and the matrix admit the same partitions");
            }
            vec![rep]
        }
        ExtraCheck::EngineSuite => engine_suite(SuiteParams::default())?,
    })
}

/// The Rogers–Ramanujan pseudo-case.
pub fn verify_rr(truncation: u32) -> Result<CaseReport> {
    Ok(CaseReport {
        case: RR_CASE.to_string(),
        n_max: truncation,
        truncation,
        checks: vec![rogers_ramanujan(truncation)?],
        totals: BTreeMap::new(),
    })
}

/// Every case at the given sizes, in parallel, reports in input order.
pub fn verify_all(cases: &[IdentityCase], n_max: u32, truncation: u32) -> Result<Vec<CaseReport>> {
    if n_max > truncation {
        return Err(Error::TruncationTooSmall { n_max, truncation });
    }
    cases
        .par_iter()
        .map(|c| verify_case(c, n_max, truncation))
        .collect()
}
