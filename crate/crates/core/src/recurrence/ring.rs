use num_bigint::BigInt;

use crate::series::{
    pochhammer, pochhammer_reciprocal, Count, Monomial, PochhammerBase, Series, Variables,
};

/// Shorthand for building polynomials and Pochhammer symbols in a fixed
/// variable set and truncation.
#[derive(Clone, Debug)]
pub struct Ring {
    pub vars: Variables,
    pub truncation: u32,
}

impl Ring {
    pub fn new(vars: Variables, truncation: u32) -> Self {
        Ring { vars, truncation }
    }

    /// Over `{a, c, d}`.
    pub fn acd(truncation: u32) -> Self {
        Ring::new(Variables::acd(), truncation)
    }

    /// Monomial from a string of variable letters (repeats allowed) and a
    /// `q`-exponent: `mono("ad", 3)` is `a d q^3`.
    pub fn mono(&self, letters: &str, q_exp: u32) -> Monomial {
        let mut exps = vec![0; self.vars.len()];
        for ch in letters.chars() {
            let i = self
                .vars
                .index_of(&ch.to_string())
                .unwrap_or_else(|| panic!("variable {ch} not in {:?}", self.vars));
            exps[i] += 1;
        }
        Monomial::new(q_exp, &exps)
    }

    pub fn zero(&self) -> Series {
        Series::zero(&self.vars, self.truncation)
    }

    pub fn one(&self) -> Series {
        Series::one(&self.vars, self.truncation)
    }

    /// Sum of `coef · letters · q^e` terms.
    pub fn poly(&self, terms: &[(i64, &str, u32)]) -> Series {
        let mut out = self.zero();
        for &(c, letters, e) in terms {
            out.insert_add(self.mono(letters, e), BigInt::from(c));
        }
        out
    }

    pub fn q(&self, e: u32) -> Series {
        self.poly(&[(1, "", e)])
    }

    /// `1 / (1 − letters·q^e)` for `e ≥ 1`.
    pub fn geometric(&self, letters: &str, e: u32) -> Series {
        self.poly(&[(1, "", 0), (-1, letters, e)])
            .invert_unit()
            .expect("positive q-degree")
    }

    /// `(±letters·q^base; q^ratio)_n`.
    pub fn poch(&self, negated: bool, letters: &str, base: u32, ratio: u32, n: u32) -> Series {
        pochhammer(
            &self.vars,
            &PochhammerBase::new(negated, self.mono(letters, base)),
            ratio,
            Count::Finite(n),
            self.truncation,
        )
        .expect("finite product")
    }

    pub fn poch_inf(&self, negated: bool, letters: &str, base: u32, ratio: u32) -> Series {
        pochhammer(
            &self.vars,
            &PochhammerBase::new(negated, self.mono(letters, base)),
            ratio,
            Count::Infinite,
            self.truncation,
        )
        .expect("base has positive q-degree")
    }

    pub fn inv(&self, s: &Series) -> Series {
        s.invert_unit().expect("unit constant term")
    }

    /// `letters · q^e · s`.
    pub fn times(&self, letters: &str, e: u32, s: &Series) -> Series {
        s.mul_monomial(&BigInt::from(1), &self.mono(letters, e))
    }

    /// `s / (1 − letters·q^e)` for `e ≥ 1`.
    pub fn over(&self, letters: &str, e: u32, s: &Series) -> Series {
        s.div_binomial(&BigInt::from(-1), &self.mono(letters, e))
            .expect("positive q-degree")
    }

    /// `1 / (±letters·q^base; q^ratio)_n`; every factor needs positive
    /// `q`-degree.
    pub fn poch_recip(
        &self,
        negated: bool,
        letters: &str,
        base: u32,
        ratio: u32,
        n: u32,
    ) -> Series {
        self.recip(negated, letters, base, ratio, Count::Finite(n))
    }

    pub fn poch_inf_recip(&self, negated: bool, letters: &str, base: u32, ratio: u32) -> Series {
        self.recip(negated, letters, base, ratio, Count::Infinite)
    }

    fn recip(&self, negated: bool, letters: &str, base: u32, ratio: u32, count: Count) -> Series {
        pochhammer_reciprocal(
            &self.vars,
            &PochhammerBase::new(negated, self.mono(letters, base)),
            ratio,
            count,
            self.truncation,
        )
        .expect("positive q-degree")
    }
}
