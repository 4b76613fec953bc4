//! Sparse truncated power series in `q` and a configurable set of colour
//! variables, with arbitrary-precision integer coefficients.
//!
//! A [`Series`] is exact for every monomial whose `q`-exponent is at most its
//! truncation `N`; nothing is known above `N`. Binary operations take the
//! minimum truncation of their operands, and asking for a coefficient above
//! the truncation is an error rather than a silent zero.

mod format;
mod pochhammer;
mod substitute;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use pochhammer::{pochhammer, pochhammer_reciprocal, Count, PochhammerBase};

/// Ordered names of the colour variables tracked alongside `q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Variables(Arc<[String]>);

impl Variables {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name == "q" {
                return Err(Error::Invalid(format!(
                    "`{name}` cannot be a colour variable"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::Invalid(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Variables(names.into()))
    }

    /// The `{a, c, d}` set used by the main four-colour identity (colour `b`
    /// carries no variable).
    pub fn acd() -> Self {
        Variables::new(["a", "c", "d"]).expect("static names")
    }

    /// No colour variables: plain series in `q`.
    pub fn none() -> Self {
        Variables(Arc::from(Vec::<String>::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl fmt::Debug for Variables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

pub(crate) type Exponents = SmallVec<[u32; 4]>;

/// `q^q_exp` times a product of colour variables. Ordering is by `q`-exponent
/// first, then by the colour exponents in variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    q_exp: u32,
    colour_exps: Exponents,
}

impl Monomial {
    pub fn new(q_exp: u32, colour_exps: &[u32]) -> Self {
        Monomial {
            q_exp,
            colour_exps: colour_exps.iter().copied().collect(),
        }
    }

    /// `q^q_exp` with every colour exponent zero.
    pub fn q_power(q_exp: u32, vars: &Variables) -> Self {
        Monomial {
            q_exp,
            colour_exps: smallvec::smallvec![0; vars.len()],
        }
    }

    pub fn one(vars: &Variables) -> Self {
        Self::q_power(0, vars)
    }

    pub fn q_exp(&self) -> u32 {
        self.q_exp
    }

    pub fn colour_exps(&self) -> &[u32] {
        &self.colour_exps
    }

    pub fn is_one(&self) -> bool {
        self.q_exp == 0 && self.colour_exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            q_exp: self.q_exp + other.q_exp,
            colour_exps: self
                .colour_exps
                .iter()
                .zip(&other.colour_exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let q_exp = self.q_exp.checked_sub(other.q_exp)?;
        let colour_exps = self
            .colour_exps
            .iter()
            .zip(&other.colour_exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Exponents>>()?;
        Some(Monomial { q_exp, colour_exps })
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial {
            q_exp: self.q_exp * n,
            colour_exps: self.colour_exps.iter().map(|e| e * n).collect(),
        }
    }

    pub fn display(&self, vars: &Variables) -> String {
        let mut out = String::new();
        for (name, &e) in vars.names().iter().zip(&self.colour_exps) {
            push_power(&mut out, name, e);
        }
        push_power(&mut out, "q", self.q_exp);
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

fn push_power(out: &mut String, name: &str, e: u32) {
    match e {
        0 => {}
        1 => out.push_str(name),
        _ => {
            out.push_str(name);
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// An exact truncated power series.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    vars: Variables,
    truncation: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Series {
    pub fn zero(vars: &Variables, truncation: u32) -> Self {
        Series {
            vars: vars.clone(),
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Variables, truncation: u32) -> Self {
        Self::constant(vars, truncation, 1)
    }

    pub fn constant(vars: &Variables, truncation: u32, c: i64) -> Self {
        Self::monomial(vars, truncation, BigInt::from(c), Monomial::one(vars))
    }

    pub fn monomial(vars: &Variables, truncation: u32, coef: BigInt, m: Monomial) -> Self {
        let mut s = Self::zero(vars, truncation);
        s.insert_add(m, coef);
        s
    }

    pub fn from_terms<I>(vars: &Variables, truncation: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut s = Self::zero(vars, truncation);
        for (m, c) in terms {
            if m.colour_exps.len() != vars.len() {
                return Err(Error::Invalid(format!(
                    "monomial has {} colour exponents, expected {}",
                    m.colour_exps.len(),
                    vars.len()
                )));
            }
            s.insert_add(m, c);
        }
        Ok(s)
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Adds `c·m`, dropping it if it lies above the truncation and removing
    /// the entry if the sum cancels.
    pub(crate) fn insert_add(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() || m.q_exp > self.truncation {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Series) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.names().to_vec(),
                right: other.vars.names().to_vec(),
            });
        }
        Ok(())
    }

    /// Lowers the truncation to `n` (no-op if already at or below `n`).
    pub fn truncate(&self, n: u32) -> Series {
        if n >= self.truncation {
            return self.clone();
        }
        Series {
            vars: self.vars.clone(),
            truncation: n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.q_exp <= n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &Series) -> Result<Series> {
        self.check_vars(other)?;
        let mut out = self.truncate(other.truncation);
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Series) -> Result<Series> {
        self.check_vars(other)?;
        let mut out = self.truncate(other.truncation);
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Series {
        let mut out = Series::zero(&self.vars, self.truncation);
        if k.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        out
    }

    /// Terms grouped by `q`-exponent, for exponents `0..=limit`.
    fn graded(&self, limit: u32) -> Vec<Vec<(&Monomial, &BigInt)>> {
        let mut rows = vec![Vec::new(); limit as usize + 1];
        for (m, c) in &self.terms {
            if m.q_exp > limit {
                break;
            }
            rows[m.q_exp as usize].push((m, c));
        }
        rows
    }

    pub fn checked_mul(&self, other: &Series) -> Result<Series> {
        self.check_vars(other)?;
        let n = self.truncation.min(other.truncation);
        let lhs = self.graded(n);
        let rhs = other.graded(n);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (i, row) in lhs.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            for col in rhs.iter().take(n as usize - i + 1) {
                for (m1, c1) in row {
                    for (m2, c2) in col {
                        *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += *c1 * *c2;
                    }
                }
            }
        }
        let mut out = Series::zero(&self.vars, n);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(out)
    }

    /// `coef · m · self`, keeping the truncation of `self`.
    pub fn mul_monomial(&self, coef: &BigInt, m: &Monomial) -> Series {
        let mut out = Series::zero(&self.vars, self.truncation);
        if coef.is_zero() || m.q_exp > self.truncation {
            return out;
        }
        let limit = self.truncation - m.q_exp;
        out.terms = self
            .terms
            .iter()
            .take_while(|(t, _)| t.q_exp <= limit)
            .map(|(t, c)| (t.mul(m), c * coef))
            .collect();
        out
    }

    /// `self += m · other`, restricted to this series' truncation. Variable
    /// sets must agree; used by the enumeration DP where they always do.
    pub(crate) fn add_shifted(&mut self, other: &Series, m: &Monomial) {
        debug_assert_eq!(self.vars, other.vars);
        if m.q_exp > self.truncation {
            return;
        }
        let limit = (self.truncation - m.q_exp).min(other.truncation);
        for (t, c) in other.terms.iter().take_while(|(t, _)| t.q_exp <= limit) {
            self.insert_add(t.mul(m), c.clone());
        }
    }

    /// `self · (1 + coef·m)`.
    pub fn mul_binomial(&self, coef: &BigInt, m: &Monomial) -> Series {
        let mut out = self.clone();
        for (t, c) in self.terms.iter() {
            if t.q_exp + m.q_exp > self.truncation {
                break;
            }
            out.insert_add(t.mul(m), c * coef);
        }
        out
    }

    /// `self / (1 + coef·m)` for `m` of positive `q`-degree.
    pub fn div_binomial(&self, coef: &BigInt, m: &Monomial) -> Result<Series> {
        if m.q_exp == 0 {
            return Err(Error::NonInvertible(format!(
                "1 + ({coef})·{} has no q-degree to expand in",
                m.display(&self.vars)
            )));
        }
        // t = s - coef·m·t, solved in increasing q-degree.
        let mut out = Series::zero(&self.vars, self.truncation);
        for q in 0..=self.truncation {
            let mut row: BTreeMap<Monomial, BigInt> = self
                .terms
                .range(Monomial::q_power(q, &self.vars)..)
                .take_while(|(t, _)| t.q_exp == q)
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect();
            if q >= m.q_exp {
                let lo = Monomial::q_power(q - m.q_exp, &self.vars);
                let shifted: Vec<(Monomial, BigInt)> = out
                    .terms
                    .range(lo..)
                    .take_while(|(t, _)| t.q_exp == q - m.q_exp)
                    .map(|(t, c)| (t.mul(m), -(c * coef)))
                    .collect();
                for (t, c) in shifted {
                    *row.entry(t).or_insert_with(BigInt::zero) += c;
                }
            }
            for (t, c) in row {
                out.insert_add(t, c);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse of a series whose `q^0` part is exactly `±1`.
    pub fn invert_unit(&self) -> Result<Series> {
        let n = self.truncation;
        let rows = self.graded(n);
        let unit = match rows[0].as_slice() {
            [(m, c)] if m.is_one() && (c.is_one() || (-*c).is_one()) => (*c).clone(),
            [] => return Err(Error::NonInvertible("constant term is 0".into())),
            _ => {
                return Err(Error::NonInvertible(
                    "q^0 part must be exactly +1 or -1".into(),
                ))
            }
        };
        // t_0 = u, t_j = -u · Σ_{i=1..j} s_i t_{j-i}
        let mut inv_rows: Vec<Vec<(Monomial, BigInt)>> = Vec::with_capacity(n as usize + 1);
        inv_rows.push(vec![(Monomial::one(&self.vars), unit.clone())]);
        let neg_unit = -unit;
        for j in 1..=n as usize {
            let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
            for (i, row) in rows.iter().enumerate().take(j + 1).skip(1) {
                for (m1, c1) in row {
                    for (m2, c2) in &inv_rows[j - i] {
                        *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += *c1 * c2;
                    }
                }
            }
            let mut row: Vec<(Monomial, BigInt)> = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, c * &neg_unit))
                .collect();
            row.sort_by(|a, b| a.0.cmp(&b.0));
            inv_rows.push(row);
        }
        let mut out = Series::zero(&self.vars, n);
        out.terms = inv_rows.into_iter().flatten().collect();
        Ok(out)
    }

    pub fn coeff(&self, m: &Monomial) -> Result<BigInt> {
        if m.q_exp > self.truncation {
            return Err(Error::TruncationExceeded {
                requested: m.q_exp,
                truncation: self.truncation,
            });
        }
        if m.colour_exps.len() != self.vars.len() {
            return Err(Error::Invalid(format!(
                "expected {} colour exponents, got {}",
                self.vars.len(),
                m.colour_exps.len()
            )));
        }
        Ok(self.terms.get(m).cloned().unwrap_or_default())
    }

    pub fn coeff_at(&self, q_exp: u32, colour_exps: &[u32]) -> Result<BigInt> {
        self.coeff(&Monomial::new(q_exp, colour_exps))
    }

    /// The homogeneous `q^n` part as (colour exponents, coefficient) pairs.
    pub fn slice(&self, n: u32) -> Result<Vec<(&[u32], &BigInt)>> {
        if n > self.truncation {
            return Err(Error::TruncationExceeded {
                requested: n,
                truncation: self.truncation,
            });
        }
        Ok(self
            .terms
            .range(Monomial::q_power(n, &self.vars)..)
            .take_while(|(m, _)| m.q_exp == n)
            .map(|(m, c)| (m.colour_exps(), c))
            .collect())
    }

    /// Sum of all coefficients at `q^n`, i.e. the coefficient after setting
    /// every colour variable to 1.
    pub fn total_at(&self, n: u32) -> Result<BigInt> {
        Ok(self.slice(n)?.into_iter().map(|(_, c)| c).sum())
    }

    /// Sets the named variables to 1, removing them from the variable set.
    pub fn specialize_to_one(&self, names: &[&str]) -> Series {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| !names.contains(&self.vars.names()[i].as_str()))
            .collect();
        let vars = Variables(
            keep.iter()
                .map(|&i| self.vars.names()[i].clone())
                .collect::<Vec<_>>()
                .into(),
        );
        let mut out = Series::zero(&vars, self.truncation);
        for (m, c) in &self.terms {
            let exps: Exponents = keep.iter().map(|&i| m.colour_exps[i]).collect();
            out.insert_add(
                Monomial {
                    q_exp: m.q_exp,
                    colour_exps: exps,
                },
                c.clone(),
            );
        }
        out
    }

    /// First monomial (in ascending order, `q`-exponent at most `up_to`) at
    /// which the two series differ, with both coefficients.
    pub fn first_discrepancy(
        &self,
        other: &Series,
        up_to: u32,
    ) -> Result<Option<(Monomial, BigInt, BigInt)>> {
        self.check_vars(other)?;
        let limit = up_to.min(self.truncation).min(other.truncation);
        let mut left = self
            .terms
            .iter()
            .take_while(|(m, _)| m.q_exp <= limit)
            .peekable();
        let mut right = other
            .terms
            .iter()
            .take_while(|(m, _)| m.q_exp <= limit)
            .peekable();
        let zero = BigInt::zero();
        loop {
            let next = match (left.peek(), right.peek()) {
                (None, None) => return Ok(None),
                (Some((m, c)), None) => Some(((*m).clone(), (*c).clone(), zero.clone())),
                (None, Some((m, c))) => Some(((*m).clone(), zero.clone(), (*c).clone())),
                (Some((lm, lc)), Some((rm, rc))) => match lm.cmp(rm) {
                    std::cmp::Ordering::Less => Some(((*lm).clone(), (*lc).clone(), zero.clone())),
                    std::cmp::Ordering::Greater => {
                        Some(((*rm).clone(), zero.clone(), (*rc).clone()))
                    }
                    std::cmp::Ordering::Equal => {
                        if lc != rc {
                            Some(((*lm).clone(), (*lc).clone(), (*rc).clone()))
                        } else {
                            left.next();
                            right.next();
                            None
                        }
                    }
                },
            };
            if let Some(d) = next {
                return Ok(Some(d));
            }
        }
    }

    /// True when both series agree on every monomial with `q`-exponent at most
    /// `up_to` (which must lie within both truncations).
    pub fn agrees_with(&self, other: &Series, up_to: u32) -> Result<bool> {
        let limit = self.truncation.min(other.truncation);
        if up_to > limit {
            return Err(Error::TruncationExceeded {
                requested: up_to,
                truncation: limit,
            });
        }
        Ok(self.first_discrepancy(other, up_to)?.is_none())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.pretty(), self.truncation + 1)
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;
    fn add(self, rhs: &'a Series) -> Series {
        self.checked_add(rhs).expect("series variable sets differ")
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;
    fn sub(self, rhs: &'a Series) -> Series {
        self.checked_sub(rhs).expect("series variable sets differ")
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;
    fn mul(self, rhs: &'a Series) -> Series {
        self.checked_mul(rhs).expect("series variable sets differ")
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&BigInt::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn acd() -> Variables {
        Variables::acd()
    }

    /// Builds a polynomial from (coef, [a, c, d], q) triples.
    fn poly(n: u32, terms: &[(i64, [u32; 3], u32)]) -> Series {
        let vars = acd();
        Series::from_terms(
            &vars,
            n,
            terms
                .iter()
                .map(|(c, e, q)| (Monomial::new(*q, e), BigInt::from(*c))),
        )
        .unwrap()
    }

    fn geometric(n: u32) -> Series {
        poly(n, &(0..=n).map(|k| (1, [0, 0, 0], k)).collect::<Vec<_>>())
    }

    #[test]
    fn add_cancels() {
        let s = &poly(5, &[(1, [0, 0, 0], 0), (1, [0, 0, 0], 1)])
            + &poly(5, &[(1, [0, 0, 0], 0), (-1, [0, 0, 0], 1)]);
        assert_eq!(s, Series::constant(&acd(), 5, 2));
        let t = poly(5, &[(1, [1, 0, 0], 1)]);
        assert_eq!(&t + &Series::zero(&acd(), 5), t);
        assert_eq!((&t + &poly(5, &[(1, [0, 1, 0], 1)])).term_count(), 2);
    }

    #[test]
    fn add_takes_min_truncation() {
        let s = &Series::one(&acd(), 7) + &Series::one(&acd(), 3);
        assert_eq!(s.truncation(), 3);
    }

    #[test]
    fn mismatched_variables_error() {
        let s = Series::one(&acd(), 3);
        let t = Series::one(&Variables::none(), 3);
        assert!(matches!(
            s.checked_add(&t),
            Err(Error::VariableMismatch { .. })
        ));
        assert!(s.checked_mul(&t).is_err());
    }

    #[test]
    fn mul_expands_binomials() {
        let s = &poly(6, &[(1, [0, 0, 0], 0), (1, [1, 0, 0], 1)])
            * &poly(6, &[(1, [0, 0, 0], 0), (1, [0, 0, 1], 1)]);
        let want = poly(
            6,
            &[
                (1, [0, 0, 0], 0),
                (1, [1, 0, 0], 1),
                (1, [0, 0, 1], 1),
                (1, [1, 0, 1], 2),
            ],
        );
        assert_eq!(s, want);
        assert_eq!(&want * &Series::one(&acd(), 6), want);
    }

    #[test]
    fn telescoping_product() {
        for n in [0, 1, 4, 9] {
            let one_minus_q = poly(n, &[(1, [0, 0, 0], 0), (-1, [0, 0, 0], 1)]);
            assert_eq!(&one_minus_q * &geometric(n), Series::one(&acd(), n));
        }
    }

    #[test]
    fn invert_geometric() {
        let one_minus_q = poly(8, &[(1, [0, 0, 0], 0), (-1, [0, 0, 0], 1)]);
        assert_eq!(one_minus_q.invert_unit().unwrap(), geometric(8));
        assert_eq!(
            Series::one(&acd(), 8).invert_unit().unwrap(),
            Series::one(&acd(), 8)
        );
        let one_minus_cq = poly(6, &[(1, [0, 0, 0], 0), (-1, [0, 1, 0], 1)]);
        let want = poly(6, &(0..=6).map(|k| (1, [0, k, 0], k)).collect::<Vec<_>>());
        assert_eq!(one_minus_cq.invert_unit().unwrap(), want);
        let neg = poly(6, &[(-1, [0, 0, 0], 0), (1, [0, 0, 0], 2)]);
        let inv = neg.invert_unit().unwrap();
        assert_eq!(&inv * &neg, Series::one(&acd(), 6));
    }

    #[test]
    fn invert_rejects_non_units() {
        assert!(matches!(
            poly(4, &[(2, [0, 0, 0], 0)]).invert_unit(),
            Err(Error::NonInvertible(_))
        ));
        assert!(Series::zero(&acd(), 4).invert_unit().is_err());
        // 1 - c has no expansion in q
        assert!(poly(4, &[(1, [0, 0, 0], 0), (-1, [0, 1, 0], 0)])
            .invert_unit()
            .is_err());
    }

    #[test]
    fn binomial_fast_paths_match_general_ops() {
        let s = poly(
            9,
            &[(1, [0, 0, 0], 0), (3, [1, 0, 0], 2), (-2, [0, 1, 1], 3)],
        );
        let m = Monomial::new(2, &[0, 1, 0]);
        let c = BigInt::from(-1);
        let binom = poly(9, &[(1, [0, 0, 0], 0), (-1, [0, 1, 0], 2)]);
        assert_eq!(s.mul_binomial(&c, &m), &s * &binom);
        assert_eq!(
            s.div_binomial(&c, &m).unwrap(),
            &s * &binom.invert_unit().unwrap()
        );
    }

    #[test]
    fn coeff_beyond_truncation_is_an_error() {
        let s = geometric(4);
        assert_eq!(s.coeff_at(4, &[0, 0, 0]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff_at(2, &[1, 0, 0]).unwrap(), BigInt::zero());
        assert_eq!(
            s.coeff_at(5, &[0, 0, 0]),
            Err(Error::TruncationExceeded {
                requested: 5,
                truncation: 4
            })
        );
    }

    #[test]
    fn coeff_in_small_product() {
        let s = &(&poly(6, &[(1, [0, 0, 0], 0), (1, [1, 0, 0], 1)])
            * &poly(6, &[(1, [0, 0, 0], 0), (1, [0, 0, 1], 1)]))
            * &geometric(6);
        // a q · d q · q^1 is the only way to reach a d q^3
        assert_eq!(s.coeff_at(3, &[1, 0, 1]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn specialize_merges_terms() {
        let s = poly(
            3,
            &[(1, [1, 0, 0], 1), (1, [0, 1, 0], 1), (2, [0, 0, 1], 2)],
        );
        let t = s.specialize_to_one(&["a", "c"]);
        assert_eq!(t.vars().names(), &["d".to_string()]);
        assert_eq!(t.coeff_at(1, &[0]).unwrap(), BigInt::from(2));
        assert_eq!(t.total_at(2).unwrap(), BigInt::from(2));
    }

    #[test]
    fn first_discrepancy_reports_lowest_monomial() {
        let s = poly(5, &[(1, [0, 0, 0], 0), (1, [1, 0, 0], 3)]);
        let t = poly(5, &[(1, [0, 0, 0], 0), (2, [0, 0, 0], 4)]);
        let (m, l, r) = s.first_discrepancy(&t, 5).unwrap().unwrap();
        assert_eq!(m, Monomial::new(3, &[1, 0, 0]));
        assert_eq!((l, r), (BigInt::from(1), BigInt::zero()));
        assert!(s.first_discrepancy(&t, 2).unwrap().is_none());
    }

    #[test]
    fn variables_reject_q_and_duplicates() {
        assert!(Variables::new(["a", "q"]).is_err());
        assert!(Variables::new(["a", "a"]).is_err());
    }
}
