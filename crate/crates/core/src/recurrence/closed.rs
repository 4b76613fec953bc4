use super::ring::Ring;
use crate::series::{Series, Variables};

fn binom2(m: u32) -> u32 {
    m * m.saturating_sub(1) / 2
}

/// `(−aq;q²)_i (−dq;q²)_i`.
fn odd_pair(r: &Ring, i: u32) -> Series {
    &r.poch(true, "a", 1, 2, i) * &r.poch(true, "d", 1, 2, i)
}

/// `a_n`: zero for odd `n`, otherwise
/// `(−aq;q²)_m (−dq;q²)_m / ((q²;q²)_m (cq;q²)_m)` with `n = 2m`.
pub fn a_closed_form(n: u32, truncation: u32) -> Series {
    let r = Ring::acd(truncation);
    if n % 2 == 1 {
        return r.zero();
    }
    let m = n / 2;
    let num = odd_pair(&r, m);
    &(&num * &r.poch_recip(false, "", 2, 2, m)) * &r.poch_recip(false, "c", 1, 2, m)
}

/// `(−aq;q²)_∞ (−dq;q²)_∞ / ((q;q)_∞ (cq;q²)_∞)`.
pub fn theorem_product(truncation: u32) -> Series {
    let r = Ring::acd(truncation);
    let num = &r.poch_inf(true, "a", 1, 2) * &r.poch_inf(true, "d", 1, 2);
    let den = &r.poch_inf_recip(false, "", 1, 1) * &r.poch_inf_recip(false, "c", 1, 2);
    &num * &den
}

/// `h_k^(i) = (1 − q^{k+1}) q^{C(m,2)} (−aq;q²)_i (−dq;q²)_i / ((q;q)_m (q²;q²)_i)`
/// with `m = k − 2i + 1`, and zero when `m < 0`.
pub fn h_term(k: u32, i: u32, truncation: u32) -> Series {
    let r = Ring::acd(truncation);
    let Some(m) = (k + 1).checked_sub(2 * i) else {
        return r.zero();
    };
    let core = &r.times("", binom2(m), &odd_pair(&r, i)) * &r.poch_recip(false, "", 1, 1, m);
    let t = &core * &r.poch_recip(false, "", 2, 2, i);
    &r.poly(&[(1, "", 0), (-1, "", k + 1)]) * &t
}

/// `G_{k_d}` as the finite sum `Σ_i h_k^(i) / (cq;q²)_i`, written out
/// independently of [`h_term`].
pub fn closed_form_gkd(k: u32, truncation: u32) -> Series {
    let r = Ring::acd(truncation);
    let mut sum = r.zero();
    for i in 0..=k.div_ceil(2) {
        let m = k + 1 - 2 * i;
        let mut t = r.times("", binom2(m), &odd_pair(&r, i));
        t = &t * &r.poch_recip(false, "", 1, 1, m);
        t = &t * &r.poch_recip(false, "", 2, 2, i);
        t = &t * &r.poch_recip(false, "c", 1, 2, i);
        sum = &sum + &t;
    }
    &r.poly(&[(1, "", 0), (-1, "", k + 1)]) * &sum
}

/// Right side of the first-order recurrence for `h_k^(i)` (`i, k ≥ 1`):
/// `q^k/(1 − q^k) h_{k−1}^(i) + q^{C(m,2)} (−aq;q²)_i (−dq;q²)_i / ((q;q)_m (q²;q²)_{i−1})`.
pub fn h_recurrence_rhs(k: u32, i: u32, truncation: u32) -> Series {
    assert!(k >= 1 && i >= 1);
    let r = Ring::acd(truncation);
    let carried = r.over("", k, &r.times("", k, &h_term(k - 1, i, truncation)));
    let fresh = match (k + 1).checked_sub(2 * i) {
        None => r.zero(),
        Some(m) => {
            let t = &r.times("", binom2(m), &odd_pair(&r, i)) * &r.poch_recip(false, "", 1, 1, m);
            &t * &r.poch_recip(false, "", 2, 2, i - 1)
        }
    };
    &carried + &fresh
}

/// `Σ_i q^{C(2i+δ,2)} / (q;q)_{2i+δ}` and `(−q;q)_∞`, both in `q` alone.
pub fn final_limit_sides(delta: u32, truncation: u32) -> (Series, Series) {
    let r = Ring::new(Variables::none(), truncation);
    let mut lhs = r.zero();
    let mut i = 0;
    while binom2(2 * i + delta) <= truncation {
        let n = 2 * i + delta;
        lhs = &lhs + &r.times("", binom2(n), &r.poch_recip(false, "", 1, 1, n));
        i += 1;
    }
    (lhs, r.poch_inf(true, "", 1, 1))
}

/// Both sides of the Rogers–Ramanujan identity for `i ∈ {0, 1}`:
/// `Σ_n q^{n²+(1−i)n}/(q;q)_n` and `1/((q^{2−i};q⁵)_∞ (q^{3+i};q⁵)_∞)`.
pub fn rr_identity(i: u32, truncation: u32) -> (Series, Series) {
    assert!(i <= 1, "i must be 0 or 1");
    let r = Ring::new(Variables::none(), truncation);
    let mut lhs = r.zero();
    let mut n = 0;
    while n * n + (1 - i) * n <= truncation {
        lhs = &lhs + &r.times("", n * n + (1 - i) * n, &r.poch_recip(false, "", 1, 1, n));
        n += 1;
    }
    let rhs = &r.poch_inf_recip(false, "", 2 - i, 5) * &r.poch_inf_recip(false, "", 3 + i, 5);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_a_values() {
        let r = Ring::acd(10);
        assert_eq!(a_closed_form(0, 10), r.one());
        assert!(a_closed_form(1, 10).is_zero());
        let want = r.over(
            "",
            2,
            &r.over(
                "c",
                1,
                &r.poly(&[(1, "", 0), (1, "a", 1), (1, "d", 1), (1, "ad", 2)]),
            ),
        );
        assert_eq!(a_closed_form(2, 10), want);
    }

    #[test]
    fn product_first_terms() {
        let p = theorem_product(8);
        assert_eq!(p.coeff_at(0, &[0, 0, 0]).unwrap(), BigInt::from(1));
        for exps in [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            assert_eq!(p.coeff_at(1, &exps).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn closed_form_low_levels() {
        let r = Ring::acd(12);
        assert_eq!(closed_form_gkd(0, 12), r.one());
        assert_eq!(h_term(0, 0, 12), r.one());
        assert!(h_term(2, 2, 12).is_zero());
    }

    #[test]
    fn rr_small_coefficients() {
        let (l1, r1) = rr_identity(1, 10);
        let (l0, r0) = rr_identity(0, 10);
        assert_eq!(l1.total_at(1).unwrap(), BigInt::from(1));
        assert_eq!(r1.total_at(1).unwrap(), BigInt::from(1));
        assert_eq!(l0.total_at(1).unwrap(), BigInt::from(0));
        assert_eq!(r0.total_at(1).unwrap(), BigInt::from(0));
        assert_eq!(l1.total_at(4).unwrap(), BigInt::from(2));
        assert_eq!(r1.total_at(4).unwrap(), BigInt::from(2));
    }

    #[test]
    fn limit_sums_small() {
        for delta in 0..2 {
            let (l, r) = final_limit_sides(delta, 10);
            assert_eq!(l, r);
        }
    }
}
