use num_bigint::BigInt;

use super::{Exponents, Monomial, Series, Variables};
use crate::dilation::DilationSpec;
use crate::error::{Error, Result};

impl Series {
    /// Applies `q → q^r`, `x → x·q^{off_x}` to every colour variable, then sets
    /// the eliminated variables of the dilation to 1.
    ///
    /// The caller supplies the truncation of the result: how far the image is
    /// exact depends on how the offsets interact with the support of `self`.
    pub fn substitute(&self, spec: &DilationSpec, truncation: u32) -> Result<Series> {
        let names = self.vars.names();
        let offsets: Vec<i64> = names.iter().map(|n| spec.offset(n)).collect();
        let keep: Vec<usize> = (0..names.len())
            .filter(|&i| !spec.eliminate.contains(&names[i]))
            .collect();
        let vars = Variables::new(keep.iter().map(|&i| names[i].clone()))?;
        let r = i64::from(spec.q_scale);
        let mut out = Series::zero(&vars, truncation);
        for (m, c) in &self.terms {
            let q_exp = r * i64::from(m.q_exp)
                + m.colour_exps
                    .iter()
                    .zip(&offsets)
                    .map(|(&e, &off)| i64::from(e) * off)
                    .sum::<i64>();
            if q_exp < 0 {
                return Err(Error::InvalidDilation {
                    monomial: m.display(&self.vars),
                    q_exp,
                });
            }
            if q_exp > i64::from(truncation) {
                continue;
            }
            let exps: Exponents = keep.iter().map(|&i| m.colour_exps[i]).collect();
            out.insert_add(
                Monomial {
                    q_exp: q_exp as u32,
                    colour_exps: exps,
                },
                BigInt::clone(c),
            );
        }
        Ok(out)
    }
}
