use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Monomial, Series, Variables};
use crate::error::{Error, Result};

/// The base `±m` of a q-Pochhammer symbol `(±m; q^r)_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochhammerBase {
    pub negated: bool,
    pub monomial: Monomial,
}

impl PochhammerBase {
    pub fn new(negated: bool, monomial: Monomial) -> Self {
        PochhammerBase { negated, monomial }
    }

    /// Coefficient `c` such that each factor reads `1 + c·m·q^{rk}`.
    fn factor_coef(&self) -> BigInt {
        BigInt::from(if self.negated { 1 } else { -1 })
    }
}

/// Number of factors in a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Count {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => f.write_str("inf"),
        }
    }
}

/// The monomials `m·q^{rk}` for every factor that can affect the expansion
/// below `q^{N+1}`.
fn factor_monomials(
    base: &PochhammerBase,
    ratio: u32,
    count: Count,
    truncation: u32,
    vars: &Variables,
) -> Result<Vec<Monomial>> {
    if ratio == 0 {
        return Err(Error::Invalid(
            "Pochhammer ratio exponent must be positive".into(),
        ));
    }
    let n = match count {
        Count::Finite(n) => n,
        Count::Infinite => {
            if base.monomial.q_exp() == 0 {
                return Err(Error::FormalDivergence(base.monomial.display(vars)));
            }
            // factors with m·q^{rk} beyond q^N contribute 1
            (truncation - base.monomial.q_exp().min(truncation)) / ratio + 1
        }
    };
    Ok((0..n)
        .map(|k| base.monomial.mul(&Monomial::q_power(ratio * k, vars)))
        .collect())
}

/// Truncated expansion of `(±m; q^ratio)_count`.
pub fn pochhammer(
    vars: &Variables,
    base: &PochhammerBase,
    ratio: u32,
    count: Count,
    truncation: u32,
) -> Result<Series> {
    let coef = base.factor_coef();
    let mut out = Series::one(vars, truncation);
    for m in factor_monomials(base, ratio, count, truncation, vars)? {
        out = out.mul_binomial(&coef, &m);
    }
    Ok(out)
}

/// Truncated expansion of `1 / (±m; q^ratio)_count`, computed factor by factor
/// as geometric series. Every factor must have positive `q`-degree.
pub fn pochhammer_reciprocal(
    vars: &Variables,
    base: &PochhammerBase,
    ratio: u32,
    count: Count,
    truncation: u32,
) -> Result<Series> {
    let coef = base.factor_coef();
    let mut out = Series::one(vars, truncation);
    for m in factor_monomials(base, ratio, count, truncation, vars)? {
        if m.q_exp() > truncation {
            continue;
        }
        out = out.div_binomial(&coef, &m)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_base(negated: bool, q: u32) -> PochhammerBase {
        PochhammerBase::new(negated, Monomial::new(q, &[]))
    }

    fn coeffs(s: &Series) -> Vec<i64> {
        (0..=s.truncation())
            .map(|n| s.total_at(n).unwrap().try_into().unwrap())
            .collect()
    }

    /// Partitions of n into parts of size at most `max`.
    fn partitions(n: u32, max: u32) -> i64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|p| partitions(n - p, p)).sum()
    }

    #[test]
    fn finite_products() {
        let v = Variables::none();
        let s = pochhammer(&v, &q_base(true, 1), 1, Count::Finite(2), 6).unwrap();
        assert_eq!(coeffs(&s), vec![1, 1, 1, 1, 0, 0, 0]);
        let x = Variables::new(["x"]).unwrap();
        let empty = PochhammerBase::new(false, Monomial::new(0, &[1]));
        assert_eq!(
            pochhammer(&x, &empty, 1, Count::Finite(0), 5).unwrap(),
            Series::one(&x, 5)
        );
    }

    #[test]
    fn euler_reciprocal_counts_partitions() {
        let v = Variables::none();
        let euler = pochhammer(&v, &q_base(false, 1), 1, Count::Infinite, 12).unwrap();
        let inv = euler.invert_unit().unwrap();
        let want: Vec<i64> = (0..=12).map(|n| partitions(n, n)).collect();
        assert_eq!(coeffs(&inv), want);
        assert_eq!(inv.total_at(5).unwrap(), BigInt::from(7));
        let direct = pochhammer_reciprocal(&v, &q_base(false, 1), 1, Count::Infinite, 12).unwrap();
        assert_eq!(direct, inv);
    }

    #[test]
    fn infinite_product_needs_positive_degree() {
        let vars = Variables::acd();
        let c = PochhammerBase::new(false, Monomial::new(0, &[0, 1, 0]));
        assert!(matches!(
            pochhammer(&vars, &c, 2, Count::Infinite, 5),
            Err(Error::FormalDivergence(_))
        ));
        assert!(pochhammer(&vars, &c, 2, Count::Finite(3), 5).is_ok());
    }

    #[test]
    fn signed_base_skips_even_powers() {
        // (-aq; q^2)_inf = 1 + aq + aq^3 + ... with no q^2 term
        let vars = Variables::acd();
        let base = PochhammerBase::new(true, Monomial::new(1, &[1, 0, 0]));
        let s = pochhammer(&vars, &base, 2, Count::Infinite, 3).unwrap();
        assert_eq!(s.term_count(), 3);
        assert_eq!(s.coeff_at(1, &[1, 0, 0]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff_at(3, &[1, 0, 0]).unwrap(), BigInt::from(1));
        assert_eq!(s.total_at(2).unwrap(), BigInt::from(0));
    }
}
