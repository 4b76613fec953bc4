//! Named checks over the recurrence engines, each producing a
//! [`CheckReport`].

use rayon::prelude::*;

use super::chain::{transform_chain_from, TransformChain, XSeries};
use super::closed::{
    a_closed_form, closed_form_gkd, final_limit_sides, h_recurrence_rhs, h_term, rr_identity,
    theorem_product,
};
use super::lemma::{gkd_prop_recurrence, lemma_run, A, B, C, D};
use super::ring::Ring;
use crate::error::Result;
use crate::partition::{Part, PartitionSystem};
use crate::report::CheckReport;
use crate::series::{Series, Variables};

/// Brute-force `E_{k_x}` and `G_{k_x}` for `k = 0..=k_max`, indexed `[k][x]`.
pub fn oracle_table(k_max: u32, truncation: u32) -> Result<Vec<[(Series, Series); 4]>> {
    let vars = Variables::acd();
    let sys = PartitionSystem::primc();
    let by_part = sys.largest_part_series(&vars, truncation)?;
    let zero = Series::zero(&vars, truncation);
    let mut running = Series::one(&vars, truncation);
    // level 0 holds no parts at all
    let mut table = vec![std::array::from_fn(|_| (zero.clone(), running.clone()))];
    let mut it = by_part.iter().peekable();
    for k in 1..=k_max {
        let mut row: [(Series, Series); 4] = std::array::from_fn(|_| (zero.clone(), zero.clone()));
        for (x, slot) in row.iter_mut().enumerate() {
            let here = Part {
                value: k,
                colour: x,
            };
            let e = match it.peek() {
                Some((p, s)) if *p == here => {
                    it.next();
                    s.clone()
                }
                _ => zero.clone(),
            };
            running = &running + &e;
            *slot = (e, running.clone());
        }
        table.push(row);
    }
    Ok(table)
}

/// Lemma engine, third-order recurrence, closed form and brute force give the
/// same `G_{k_d}` for every `k ≤ k_max`.
pub fn engine_agreement(k_max: u32, truncation: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new("engine-agreement")
        .param("k_max", k_max)
        .param("truncation", truncation);
    let lemma = lemma_run(k_max, truncation);
    let prop = gkd_prop_recurrence(k_max, truncation);
    let oracle = oracle_table(k_max, truncation)?;
    for k in 0..=k_max {
        let i = k as usize;
        let closed = closed_form_gkd(k, truncation);
        let oracle_g = &oracle[i][D].1;
        rep.compare(
            &format!("lemma vs oracle, k={k}"),
            &lemma[i].g[D],
            oracle_g,
            truncation,
        )?;
        rep.compare(
            &format!("recurrence vs oracle, k={k}"),
            &prop[i],
            oracle_g,
            truncation,
        )?;
        rep.compare(
            &format!("closed form vs oracle, k={k}"),
            &closed,
            oracle_g,
            truncation,
        )?;
    }
    Ok(rep)
}

/// Lemma engine `G_{k_x}` and `E_{k_x}` against brute force for every colour
/// and `1 ≤ k ≤ k_max`.
pub fn per_colour_agreement(k_max: u32, truncation: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new("per-colour-oracle")
        .param("k_max", k_max)
        .param("truncation", truncation);
    rep.note(
        "level 0 starts from formal values (G_{0_a} = 0, E_{0_b} = 1) and is compared from k = 1",
    );
    let lemma = lemma_run(k_max, truncation);
    let oracle = oracle_table(k_max, truncation)?;
    let names = ["a", "b", "c", "d"];
    for k in 1..=k_max as usize {
        for x in [A, B, C, D] {
            let (e, g) = &oracle[k][x];
            rep.compare(
                &format!("E_{{{k}_{}}}", names[x]),
                &lemma[k].e[x],
                e,
                truncation,
            )?;
            rep.compare(
                &format!("G_{{{k}_{}}}", names[x]),
                &lemma[k].g[x],
                g,
                truncation,
            )?;
        }
    }
    Ok(rep)
}

/// `d·E_{k_c} = c·E_{k_d}`.
pub fn proportionality(k_max: u32, truncation: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new("proportionality")
        .param("k_max", k_max)
        .param("truncation", truncation);
    let r = Ring::acd(truncation);
    for s in lemma_run(k_max, truncation) {
        let lhs = r.times("d", 0, &s.e[C]);
        let rhs = r.times("c", 0, &s.e[D]);
        rep.compare(&format!("k={}", s.k), &lhs, &rhs, truncation)?;
    }
    Ok(rep)
}

/// `(1−cq^k)(1−q^{k+1})H_k = (1−cq^{2k})H_{k−1} + (aq^k+dq^k+adq^{2k})H_{k−2} + adq^{2k−1}H_{k−3}`
/// with `H_{−1} = 1`, `H_{−2} = H_{−3} = 0`.
pub fn h_sequence(chain: &TransformChain, truncation: u32) -> Result<CheckReport> {
    let k_max = chain.h.len() as u32 - 1;
    let mut rep = CheckReport::new("h-sequence")
        .param("k_max", k_max)
        .param("truncation", truncation);
    let r = Ring::acd(truncation);
    for k in 0..=k_max {
        let kk = i64::from(k);
        let lhs = &r.poly(&[
            (1, "", 0),
            (-1, "c", k),
            (-1, "", k + 1),
            (1, "c", 2 * k + 1),
        ]) * &chain.h_at(kk);
        let mut rhs = &(&r.poly(&[(1, "", 0), (-1, "c", 2 * k)]) * &chain.h_at(kk - 1))
            + &(&r.poly(&[(1, "a", k), (1, "d", k), (1, "ad", 2 * k)]) * &chain.h_at(kk - 2));
        if k >= 1 {
            rhs = &rhs + &r.times("ad", 2 * k - 1, &chain.h_at(kk - 3));
        }
        rep.compare(&format!("k={k}"), &lhs, &rhs, truncation)?;
    }
    Ok(rep)
}

/// `f` satisfies its `q`-difference equation multiplied through by `q`:
/// `q(1−x)f(x) = (q + c + (a+d)q²x²) f(xq) − (c + cqx − adq³x² − adq⁴x³) f(xq²)`.
pub fn f_equation(chain: &TransformChain, truncation: u32) -> Result<CheckReport> {
    let x_max = chain.f.x_max();
    let mut rep = CheckReport::new("f-equation")
        .param("x_max", x_max)
        .param("truncation", truncation);
    let r = Ring::acd(truncation);
    let f = &chain.f;
    let lhs = XSeries::poly(&r, x_max, &[(0, r.q(1)), (1, r.poly(&[(-1, "", 1)]))]).mul(f);
    let p1 = XSeries::poly(
        &r,
        x_max,
        &[
            (0, r.poly(&[(1, "", 1), (1, "c", 0)])),
            (2, r.poly(&[(1, "a", 2), (1, "d", 2)])),
        ],
    );
    let p2 = XSeries::poly(
        &r,
        x_max,
        &[
            (0, r.poly(&[(1, "c", 0)])),
            (1, r.poly(&[(1, "c", 1)])),
            (2, r.poly(&[(-1, "ad", 3)])),
            (3, r.poly(&[(-1, "ad", 4)])),
        ],
    );
    let rhs = p1.mul(&f.dilate_x(1)).sub(&p2.mul(&f.dilate_x(2)));
    compare_x(&mut rep, &lhs, &rhs, truncation)?;
    Ok(rep)
}

/// `q(1−x²)g(x) = (q + c + (a+d)q²x²) g(xq) − (c − adq³x²) g(xq²)`.
pub fn g_equation(chain: &TransformChain, truncation: u32) -> Result<CheckReport> {
    let x_max = chain.g.x_max();
    let mut rep = CheckReport::new("g-equation")
        .param("x_max", x_max)
        .param("truncation", truncation);
    let r = Ring::acd(truncation);
    let g = &chain.g;
    let lhs = XSeries::poly(&r, x_max, &[(0, r.q(1)), (2, r.poly(&[(-1, "", 1)]))]).mul(g);
    let p1 = XSeries::poly(
        &r,
        x_max,
        &[
            (0, r.poly(&[(1, "", 1), (1, "c", 0)])),
            (2, r.poly(&[(1, "a", 2), (1, "d", 2)])),
        ],
    );
    let p2 = XSeries::poly(
        &r,
        x_max,
        &[(0, r.poly(&[(1, "c", 0)])), (2, r.poly(&[(-1, "ad", 3)]))],
    );
    let rhs = p1.mul(&g.dilate_x(1)).sub(&p2.mul(&g.dilate_x(2)));
    compare_x(&mut rep, &lhs, &rhs, truncation)?;
    Ok(rep)
}

fn compare_x(rep: &mut CheckReport, lhs: &XSeries, rhs: &XSeries, truncation: u32) -> Result<()> {
    for (n, (l, r)) in lhs.coeffs.iter().zip(&rhs.coeffs).enumerate() {
        rep.compare(&format!("x^{n}"), l, r, truncation)?;
    }
    Ok(())
}

/// `a_n (1−q^n)(1−cq^{n−1}) = a_{n−2} (1+aq^{n−1})(1+dq^{n−1})` for `n ≥ 2`,
/// odd `a_n` vanish, and even `a_n` equal their closed form.
pub fn a_sequence(chain: &TransformChain, truncation: u32) -> Result<CheckReport> {
    let n_max = chain.a.len() as u32 - 1;
    let mut rep = CheckReport::new("a-sequence")
        .param("n_max", n_max)
        .param("truncation", truncation);
    let r = Ring::acd(truncation);
    let a = &chain.a;
    for n in 2..=n_max {
        let i = n as usize;
        let lhs = &(&r.poly(&[(1, "", 0), (-1, "", n)]) * &r.poly(&[(1, "", 0), (-1, "c", n - 1)]))
            * &a[i];
        let rhs = &(&r.poly(&[(1, "", 0), (1, "a", n - 1)])
            * &r.poly(&[(1, "", 0), (1, "d", n - 1)]))
            * &a[i - 2];
        rep.compare(&format!("recurrence n={n}"), &lhs, &rhs, truncation)?;
    }
    for n in 0..=n_max {
        if n % 2 == 1 {
            rep.require(&format!("a_{n} vanishes"), a[n as usize].is_zero());
        } else {
            let want = a_closed_form(n, truncation);
            rep.compare(
                &format!("closed form n={n}"),
                &a[n as usize],
                &want,
                truncation,
            )?;
        }
    }
    Ok(rep)
}

/// `Σ_i h_k^(i) / (cq;q²)_i = G_{k_d}`.
pub fn h_sum(k_max: u32, truncation: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new("h-sum")
        .param("k_max", k_max)
        .param("truncation", truncation);
    let r = Ring::acd(truncation);
    let prop = gkd_prop_recurrence(k_max, truncation);
    for k in 0..=k_max {
        let mut sum = r.zero();
        for i in 0..=k.div_ceil(2) {
            sum = &sum + &(&h_term(k, i, truncation) * &r.poch_recip(false, "c", 1, 2, i));
        }
        rep.compare(&format!("k={k}"), &sum, &prop[k as usize], truncation)?;
    }
    Ok(rep)
}

/// `h_k^(i) = q^k/(1−q^k) h_{k−1}^(i) + q^{C(m,2)}(−aq;q²)_i(−dq;q²)_i/((q;q)_m(q²;q²)_{i−1})`
/// for `1 ≤ k ≤ k_max`, `1 ≤ i ≤ i_max`.
pub fn h_recurrence(k_max: u32, i_max: u32, truncation: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new("h-recurrence")
        .param("k_max", k_max)
        .param("i_max", i_max)
        .param("truncation", truncation);
    for k in 1..=k_max {
        for i in 1..=i_max {
            let lhs = h_term(k, i, truncation);
            let rhs = h_recurrence_rhs(k, i, truncation);
            rep.compare(&format!("k={k}, i={i}"), &lhs, &rhs, truncation)?;
        }
    }
    Ok(rep)
}

/// `Σ_i q^{C(2i+δ,2)}/(q;q)_{2i+δ} = (−q;q)_∞`.
pub fn summation_identity(delta: u32, truncation: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("summation-identity-{delta}"))
        .param("delta", delta)
        .param("truncation", truncation);
    let (lhs, rhs) = final_limit_sides(delta, truncation);
    rep.compare("sum vs product", &lhs, &rhs, truncation)?;
    Ok(rep)
}

/// For every `n ≤ n_max`, the `q^n` coefficient of `G_{k_d}` equals the
/// product's for all `n ≤ k ≤ n_max + 2`, and does not yet at `k = n − 1`.
pub fn stabilization(n_max: u32) -> Result<CheckReport> {
    let k_max = n_max + 2;
    let mut rep = CheckReport::new("stabilization")
        .param("n_max", n_max)
        .param("k_max", k_max);
    let product = theorem_product(n_max);
    let g = gkd_prop_recurrence(k_max, n_max);
    for (k, gk) in g.iter().enumerate() {
        let k = k as u32;
        rep.compare(&format!("k={k}"), gk, &product, k.min(n_max))?;
        if (1..=n_max).contains(&(k + 1)) {
            let n = k + 1;
            let early = gk.slice(n)? != product.slice(n)?;
            rep.require(&format!("G_{{{k}_d}} already complete at q^{n}"), early);
        }
    }
    Ok(rep)
}

/// Both Rogers–Ramanujan identities.
pub fn rogers_ramanujan(truncation: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new("rogers-ramanujan").param("truncation", truncation);
    for i in 0..2 {
        let (lhs, rhs) = rr_identity(i, truncation);
        rep.compare(&format!("i={i}"), &lhs, &rhs, truncation)?;
    }
    Ok(rep)
}

/// Sizes for [`engine_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub k_max: u32,
    pub x_max: u32,
    pub a_max: u32,
    pub i_max: u32,
    pub stabilize_max: u32,
    pub truncation: u32,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            k_max: 12,
            x_max: 10,
            a_max: 20,
            i_max: 6,
            stabilize_max: 15,
            truncation: 20,
        }
    }
}

/// Every engine check, run in parallel, in a fixed order.
pub fn engine_suite(p: SuiteParams) -> Result<Vec<CheckReport>> {
    let n = p.truncation;
    let gkd = gkd_prop_recurrence(p.k_max.max(p.a_max), n);
    let chain_a = transform_chain_from(&gkd, p.a_max, n);
    let chain_x = transform_chain_from(&gkd, p.x_max, n);
    let jobs: Vec<Box<dyn Fn() -> Result<CheckReport> + Send + Sync>> = vec![
        Box::new(move || engine_agreement(p.k_max, n)),
        Box::new(move || per_colour_agreement(p.k_max, n)),
        Box::new(move || proportionality(p.k_max, n)),
        Box::new(|| h_sequence(&chain_a, n)),
        Box::new(|| f_equation(&chain_x, n)),
        Box::new(|| g_equation(&chain_x, n)),
        Box::new(|| a_sequence(&chain_a, n)),
        Box::new(move || h_sum(p.k_max, n)),
        Box::new(move || h_recurrence(p.k_max, p.i_max, n)),
        Box::new(move || summation_identity(0, n)),
        Box::new(move || summation_identity(1, n)),
        Box::new(move || stabilization(p.stabilize_max)),
    ];
    jobs.par_iter().map(|job| job()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let p = SuiteParams {
            k_max: 5,
            x_max: 6,
            a_max: 8,
            i_max: 3,
            stabilize_max: 7,
            truncation: 10,
        };
        for rep in engine_suite(p).unwrap() {
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn wrong_initial_value_is_caught() {
        let mut chain = super::super::chain::transform_chain(4, 5, 8);
        let r = Ring::acd(8);
        chain.h[2] = &chain.h[2] + &r.q(5);
        assert!(!h_sequence(&chain, 8).unwrap().passed());
    }

    #[test]
    fn oracle_level_one() {
        let t = oracle_table(1, 6).unwrap();
        let r = Ring::acd(6);
        assert_eq!(t[1][B].0, r.over("", 1, &r.q(1)));
        assert_eq!(t[1][A].0, r.poly(&[(1, "a", 1)]));
    }
}
