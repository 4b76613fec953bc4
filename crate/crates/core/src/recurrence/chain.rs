use super::lemma::gkd_prop_recurrence;
use super::ring::Ring;
use crate::series::Series;

/// A power series in an auxiliary variable `x` whose coefficients are
/// `q`-series, kept up to `x^{x_max}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSeries {
    pub coeffs: Vec<Series>,
}

impl XSeries {
    pub fn new(coeffs: Vec<Series>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "an x-series needs at least the x^0 coefficient"
        );
        XSeries { coeffs }
    }

    /// Polynomial in `x` from `(degree, coefficient)` pairs.
    pub fn poly(ring: &Ring, x_max: u32, terms: &[(u32, Series)]) -> Self {
        let mut coeffs = vec![ring.zero(); x_max as usize + 1];
        for (deg, s) in terms {
            if *deg <= x_max {
                coeffs[*deg as usize] = &coeffs[*deg as usize] + s;
            }
        }
        XSeries { coeffs }
    }

    pub fn x_max(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeff(&self, n: u32) -> &Series {
        &self.coeffs[n as usize]
    }

    /// `x ↦ x q^j`: the `x^n` coefficient picks up `q^{jn}`.
    pub fn dilate_x(&self, j: u32) -> XSeries {
        let r = Ring::new(self.coeffs[0].vars().clone(), self.coeffs[0].truncation());
        XSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, s)| r.times("", j * n as u32, s))
                .collect(),
        }
    }

    pub fn add(&self, other: &XSeries) -> XSeries {
        XSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &XSeries) -> XSeries {
        XSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Product truncated at the smaller `x_max`.
    pub fn mul(&self, other: &XSeries) -> XSeries {
        let x_max = self.x_max().min(other.x_max()) as usize;
        let coeffs = (0..=x_max)
            .map(|n| {
                let mut acc = &self.coeffs[0] * &other.coeffs[n];
                for i in 1..=n {
                    acc = &acc + &(&self.coeffs[i] * &other.coeffs[n - i]);
                }
                acc
            })
            .collect();
        XSeries { coeffs }
    }

    /// `self / other` for `other` with `x^0` coefficient exactly 1.
    pub fn div_monic(&self, other: &XSeries) -> XSeries {
        assert!(
            other.coeffs[0] == Series::one(other.coeffs[0].vars(), other.coeffs[0].truncation()),
            "divisor must have constant x-coefficient 1"
        );
        let x_max = self.x_max().min(other.x_max()) as usize;
        let mut out: Vec<Series> = Vec::with_capacity(x_max + 1);
        for n in 0..=x_max {
            let mut acc = self.coeffs[n].clone();
            for j in 1..=n {
                acc = &acc - &(&other.coeffs[j] * &out[n - j]);
            }
            out.push(acc);
        }
        XSeries { coeffs: out }
    }
}

/// `(−x;q)_∞ = Σ_n x^n q^{C(n,2)} / (q;q)_n`.
pub fn neg_x_pochhammer(ring: &Ring, x_max: u32) -> XSeries {
    XSeries {
        coeffs: (0..=x_max)
            .map(|n| {
                ring.times(
                    "",
                    n * n.saturating_sub(1) / 2,
                    &ring.poch_recip(false, "", 1, 1, n),
                )
            })
            .collect(),
    }
}

#[derive(Clone, Debug)]
pub struct TransformChain {
    /// `H_k = G_{k_d} / (1 − q^{k+1})` for `k = 0..=k_max`.
    pub h: Vec<Series>,
    /// `f(x) = Σ_{k≥0} H_{k−1} x^k`.
    pub f: XSeries,
    /// `g(x) = f(x) / (−x;q)_∞`.
    pub g: XSeries,
    /// The `x`-coefficients of `g`.
    pub a: Vec<Series>,
}

impl TransformChain {
    /// `H_k` for any integer `k`, with `H_{−1} = 1` and `H_k = 0` below.
    pub fn h_at(&self, k: i64) -> Series {
        let r = Ring::acd(self.h[0].truncation());
        match k {
            -1 => r.one(),
            k if k < -1 => r.zero(),
            k => self.h[k as usize].clone(),
        }
    }
}

/// Builds the chain from `G_{k_d}` supplied by the caller.
pub fn transform_chain_from(gkd: &[Series], x_max: u32, truncation: u32) -> TransformChain {
    assert!(gkd.len() >= x_max as usize, "need G_{{k_d}} for k < x_max");
    let r = Ring::acd(truncation);
    let h: Vec<Series> = gkd
        .iter()
        .enumerate()
        .map(|(k, g)| r.over("", k as u32 + 1, g))
        .collect();
    let mut fc = vec![r.one()];
    fc.extend(h.iter().take(x_max as usize).cloned());
    let f = XSeries::new(fc);
    let g = f.div_monic(&neg_x_pochhammer(&r, x_max));
    let a = g.coeffs.clone();
    TransformChain { h, f, g, a }
}

/// `H` up to `k_max`, `f`, `g` and `a_n` up to `x^{x_max}`, starting from the
/// third-order recurrence for `G_{k_d}`.
pub fn transform_chain(k_max: u32, x_max: u32, truncation: u32) -> TransformChain {
    let k = k_max.max(x_max.saturating_sub(1));
    transform_chain_from(&gkd_prop_recurrence(k, truncation), x_max, truncation)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        let chain = transform_chain(3, 4, 10);
        let r = Ring::acd(10);
        assert_eq!(chain.h[0], r.over("", 1, &r.one()));
        assert_eq!(chain.f.coeff(0), &r.one());
        assert_eq!(chain.a[0], r.one());
        assert!(chain.a[1].is_zero());
    }

    #[test]
    fn division_inverts_multiplication() {
        let r = Ring::acd(8);
        let e = neg_x_pochhammer(&r, 5);
        let p = XSeries::poly(
            &r,
            5,
            &[(0, r.one()), (1, r.poly(&[(1, "a", 1)])), (3, r.q(2))],
        );
        assert_eq!(p.mul(&e).div_monic(&e), p);
    }
}
