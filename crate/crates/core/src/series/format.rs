use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Map, Value};

use super::{Monomial, Series, Variables};
use crate::error::{Error, Result};

impl Series {
    /// `{"truncation": N, "variables": [...], "terms": [{"q":..,"a":..,"coef":".."}]}`
    /// with terms sorted by `(q, colour exponents)` ascending. Coefficients are
    /// decimal strings.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut rec = Map::new();
                rec.insert("q".into(), json!(m.q_exp));
                for (name, e) in self.vars.names().iter().zip(&m.colour_exps) {
                    rec.insert(name.clone(), json!(e));
                }
                rec.insert("coef".into(), json!(c.to_string()));
                Value::Object(rec)
            })
            .collect();
        json!({
            "truncation": self.truncation,
            "variables": self.vars.names(),
            "terms": terms,
        })
    }

    pub fn from_json(value: &Value) -> Result<Series> {
        let bad = |what: &str| Error::Invalid(format!("series JSON: {what}"));
        let truncation = value
            .get("truncation")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing truncation"))? as u32;
        let names: Vec<String> = value
            .get("variables")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing variables"))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("variable name"))
            })
            .collect::<Result<_>>()?;
        let vars = Variables::new(names)?;
        let mut terms = Vec::new();
        for rec in value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?
        {
            let field = |k: &str| rec.get(k).and_then(Value::as_u64).map(|v| v as u32);
            let q = field("q").ok_or_else(|| bad("term without q"))?;
            let exps = vars
                .names()
                .iter()
                .map(|n| field(n).ok_or_else(|| bad("term missing a variable")))
                .collect::<Result<Vec<u32>>>()?;
            let coef: BigInt = rec
                .get("coef")
                .and_then(Value::as_str)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("coef must be a decimal string"))?;
            terms.push((Monomial::new(q, &exps), coef));
        }
        Series::from_terms(&vars, truncation, terms)
    }

    /// Tab-separated rows `q <vars...> coef` with a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("q");
        for name in self.vars.names() {
            out.push('\t');
            out.push_str(name);
        }
        out.push_str("\tcoef\n");
        for (m, c) in &self.terms {
            write!(out, "{}", m.q_exp).unwrap();
            for e in &m.colour_exps {
                write!(out, "\t{e}").unwrap();
            }
            writeln!(out, "\t{c}").unwrap();
        }
        out
    }

    /// Human-readable sum, e.g. `1 + a q + 2 a d q^3`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let body = m.display(&self.vars);
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if m.is_one() {
                write!(out, "{abs}").unwrap();
            } else if abs.is_one() {
                out.push_str(&body);
            } else {
                write!(out, "{abs}{body}").unwrap();
            }
        }
        out
    }
}
