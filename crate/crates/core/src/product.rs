//! Products of `q`-Pochhammer symbols written the way they are printed:
//!
//! ```text
//! (-aq;q^2)_inf (-dq;q^2)_inf / (q;q)_inf / (cq;q^2)_inf
//! 1/(q;q)
//! (x;q)_0
//! ```
//!
//! A factor is `(±monomial;q^r)_n`, where `n` is an integer, `inf` or `∞`
//! (omitted means infinite). Factors are joined by `*`, `/` or juxtaposition;
//! `/` puts only the next factor in the denominator. A leading `1` is allowed.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::series::{
    pochhammer, pochhammer_reciprocal, Count, Monomial, PochhammerBase, Series, Variables,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Position {
    Numerator,
    Denominator,
}

/// A base monomial by variable name, independent of any variable set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BaseMonomial {
    pub q_exp: u32,
    pub exps: BTreeMap<String, u32>,
}

impl BaseMonomial {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser::new(text);
        let m = p.monomial()?;
        p.skip_ws();
        if !p.done() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(m)
    }

    fn in_vars(&self, vars: &Variables) -> Result<Monomial> {
        let mut exps = vec![0; vars.len()];
        for (name, e) in &self.exps {
            let i = vars.index_of(name).ok_or_else(|| {
                Error::Invalid(format!("variable `{name}` is not in {:?}", vars.names()))
            })?;
            exps[i] = *e;
        }
        Ok(Monomial::new(self.q_exp, &exps))
    }
}

impl fmt::Display for BaseMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (name, e) in &self.exps {
            out.push_str(name);
            if *e > 1 {
                out.push_str(&format!("^{e}"));
            }
        }
        match self.q_exp {
            0 if out.is_empty() => out.push('1'),
            0 => {}
            1 => out.push('q'),
            e => out.push_str(&format!("q^{e}")),
        }
        f.write_str(&out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FactorRecord", into = "FactorRecord")]
pub struct Factor {
    pub negated: bool,
    pub base: BaseMonomial,
    pub ratio: u32,
    pub count: Count,
    pub position: Position,
}

/// JSON shape of a factor: `{"sign": "-", "base": "aq", "ratio": 2,
/// "count": "inf", "position": "numerator"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct FactorRecord {
    #[serde(default = "plus")]
    sign: String,
    base: String,
    ratio: u32,
    #[serde(default = "inf")]
    count: Value,
    #[serde(default = "numerator")]
    position: Position,
}

fn plus() -> String {
    "+".into()
}

fn inf() -> Value {
    Value::String("inf".into())
}

fn numerator() -> Position {
    Position::Numerator
}

impl TryFrom<FactorRecord> for Factor {
    type Error = Error;

    fn try_from(r: FactorRecord) -> Result<Self> {
        let negated = match r.sign.as_str() {
            "+" | "" => false,
            "-" => true,
            s => {
                return Err(Error::Invalid(format!(
                    "factor sign must be + or -, got `{s}`"
                )))
            }
        };
        let count = match &r.count {
            Value::Number(n) => Count::Finite(
                n.as_u64()
                    .and_then(|n| u32::try_from(n).ok())
                    .ok_or_else(|| Error::Invalid(format!("bad factor count {n}")))?,
            ),
            Value::String(s) if s == "inf" || s == "∞" => Count::Infinite,
            v => return Err(Error::Invalid(format!("bad factor count {v}"))),
        };
        if r.ratio == 0 {
            return Err(Error::Invalid("factor ratio must be positive".into()));
        }
        Ok(Factor {
            negated,
            base: BaseMonomial::parse(&r.base)?,
            ratio: r.ratio,
            count,
            position: r.position,
        })
    }
}

impl From<Factor> for FactorRecord {
    fn from(f: Factor) -> Self {
        FactorRecord {
            sign: if f.negated { "-" } else { "+" }.into(),
            base: f.base.to_string(),
            ratio: f.ratio,
            count: match f.count {
                Count::Finite(n) => Value::from(n),
                Count::Infinite => inf(),
            },
            position: f.position,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negated { "-" } else { "" };
        let ratio = match self.ratio {
            1 => "q".to_string(),
            r => format!("q^{r}"),
        };
        write!(f, "({sign}{};{ratio})_{}", self.base, self.count)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Product {
    pub factors: Vec<Factor>,
}

impl Product {
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).product()
    }

    /// Variable names used by the bases, sorted.
    pub fn letters(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .factors
            .iter()
            .flat_map(|f| f.base.exps.keys().cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `a, c, d` followed by any other letters the product uses.
    pub fn default_variables(&self) -> Variables {
        let mut names: Vec<String> = ["a", "c", "d"].iter().map(|s| s.to_string()).collect();
        for l in self.letters() {
            if !names.contains(&l) {
                names.push(l);
            }
        }
        Variables::new(names).expect("letters are distinct and not q")
    }

    pub fn expand(&self, truncation: u32) -> Result<Series> {
        self.expand_in(&self.default_variables(), truncation)
    }

    pub fn expand_in(&self, vars: &Variables, truncation: u32) -> Result<Series> {
        let mut out = Series::one(vars, truncation);
        for f in &self.factors {
            let base = PochhammerBase::new(f.negated, f.base.in_vars(vars)?);
            let s = match f.position {
                Position::Numerator => pochhammer(vars, &base, f.ratio, f.count, truncation)?,
                Position::Denominator => {
                    pochhammer_reciprocal(vars, &base, f.ratio, f.count, truncation)?
                }
            };
            out = out.checked_mul(&s)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: Vec<String> = self
            .factors
            .iter()
            .filter(|x| x.position == Position::Numerator)
            .map(|x| x.to_string())
            .collect();
        let den: Vec<String> = self
            .factors
            .iter()
            .filter(|x| x.position == Position::Denominator)
            .map(|x| x.to_string())
            .collect();
        let head = if num.is_empty() {
            "1".to_string()
        } else {
            num.join("")
        };
        if den.is_empty() {
            write!(f, "{head}")
        } else {
            write!(f, "{head}/({})", den.join(""))
        }
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().enumerate().collect(),
            pos: 0,
            text,
        }
    }

    fn done(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// 1-based column of the current character.
    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.chars.len(), |&(i, _)| i)
            + 1
    }

    fn error(&self, message: &str) -> Error {
        let found = match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".into(),
        };
        Error::parse(
            self.column(),
            format!("{message} (found {found} in `{}`)", self.text),
        )
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error("integer too large")
        })
    }

    /// `^e` or `^{e}`, defaulting to 1.
    fn exponent(&mut self) -> Result<u32> {
        if !self.eat('^') {
            return Ok(1);
        }
        if self.eat('{') {
            let e = self.integer()?;
            self.expect('}')?;
            Ok(e)
        } else {
            self.integer()
        }
    }

    fn monomial(&mut self) -> Result<BaseMonomial> {
        let mut m = BaseMonomial::default();
        let mut any = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('1') if !any => {
                    self.pos += 1;
                    any = true;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    if c == 'q' {
                        m.q_exp += e;
                    } else {
                        *m.exps.entry(c.to_string()).or_insert(0) += e;
                    }
                    any = true;
                }
                _ => break,
            }
        }
        if !any {
            return Err(self.error("expected a monomial"));
        }
        Ok(m)
    }

    fn count(&mut self) -> Result<Count> {
        if !self.eat('_') {
            return Ok(Count::Infinite);
        }
        let braced = self.eat('{');
        self.skip_ws();
        let count = match self.peek() {
            Some('∞') => {
                self.pos += 1;
                Count::Infinite
            }
            Some('i') => {
                for c in "inf".chars() {
                    self.expect(c)?;
                }
                Count::Infinite
            }
            Some('\\') => {
                for c in "\\infty".chars() {
                    self.expect(c)?;
                }
                Count::Infinite
            }
            _ => Count::Finite(self.integer()?),
        };
        if braced {
            self.expect('}')?;
        }
        Ok(count)
    }

    fn factor(&mut self, position: Position) -> Result<Factor> {
        self.expect('(')?;
        let negated = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let base = self.monomial()?;
        self.expect(';')?;
        self.expect('q')?;
        let ratio = self.exponent()?;
        if ratio == 0 {
            return Err(self.error("ratio must be a positive power of q"));
        }
        self.expect(')')?;
        let count = self.count()?;
        Ok(Factor {
            negated,
            base,
            ratio,
            count,
            position,
        })
    }

    fn product(&mut self) -> Result<Product> {
        let mut factors = Vec::new();
        self.skip_ws();
        if self.peek() == Some('1') {
            self.pos += 1;
        } else {
            factors.push(self.factor(Position::Numerator)?);
        }
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('*') => {
                    self.pos += 1;
                    factors.push(self.factor(Position::Numerator)?);
                }
                Some('/') => {
                    self.pos += 1;
                    factors.push(self.factor(Position::Denominator)?);
                }
                Some('(') => factors.push(self.factor(Position::Numerator)?),
                Some(_) => return Err(self.error("expected `*`, `/` or `(`")),
            }
        }
        Ok(Product { factors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn partition_numbers() {
        let s = Product::parse("1/(q;q)").unwrap().expand(6).unwrap();
        let want = [1, 1, 2, 3, 5, 7, 11];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(s.total_at(n as u32).unwrap(), BigInt::from(*w));
        }
    }

    #[test]
    fn empty_product_is_one() {
        let p = Product::parse("(x;q)_0").unwrap();
        let s = p.expand(5).unwrap();
        assert_eq!(s, Series::one(s.vars(), 5));
        assert_eq!(s.vars().names(), ["a", "c", "d", "x"]);
    }

    #[test]
    fn signed_base() {
        let s = Product::parse("(-aq;q^2)_inf").unwrap().expand(3).unwrap();
        assert_eq!(s.pretty(), "1 + aq + aq^3");
    }

    #[test]
    fn grammar_variants_agree() {
        let forms = [
            "(-aq;q^2)_inf(-dq;q^2)_∞/(q;q)_inf/(cq;q^2)",
            "(-aq;q^{2})_{\\infty} * (-dq;q^2) / (q;q) / (cq;q^2)_inf",
        ];
        let a = Product::parse(forms[0]).unwrap();
        let b = Product::parse(forms[1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.to_string(),
            "(-aq;q^2)_inf(-dq;q^2)_inf/((q;q)_inf(cq;q^2)_inf)"
        );
    }

    #[test]
    fn errors_carry_columns() {
        match Product::parse("(aq;q^2)_inf * (dq,q)") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 19),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            Product::parse(""),
            Err(Error::Parse { column: 1, .. })
        ));
        assert!(matches!(
            Product::parse("(a;q^0)"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn divergent_and_singular_factors() {
        assert!(matches!(
            Product::parse("(a;q)_inf").unwrap().expand(4),
            Err(Error::FormalDivergence(_))
        ));
        assert!(matches!(
            Product::parse("1/(a;q)_2").unwrap().expand(4),
            Err(Error::NonInvertible(_))
        ));
    }

    #[test]
    fn factor_json_round_trip() {
        let p = Product::parse("(-aq;q^4)/(cq^2;q^4)_3").unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"sign":"-","base":"aq","ratio":4,"count":"inf","position":"numerator"},{"sign":"+","base":"cq^2","ratio":4,"count":3,"position":"denominator"}]"#
        );
        assert_eq!(serde_json::from_str::<Product>(&json).unwrap(), p);
    }
}
