use super::ring::Ring;
use crate::series::Series;

/// Colour slots in `a, b, c, d` order.
pub const A: usize = 0;
pub const B: usize = 1;
pub const C: usize = 2;
pub const D: usize = 3;

/// `E_{k_x}` and `G_{k_x}` for the four colours at one level `k`.
#[derive(Clone, Debug)]
pub struct LemmaState {
    pub k: u32,
    pub e: [Series; 4],
    pub g: [Series; 4],
    /// `G_{(k-1)_d}`, needed one level later.
    pub g_prev_d: Series,
}

/// Level 0: `E_{0_b} = 1`, `G_{0_b} = G_{0_c} = G_{0_d} = 1`, `G_{0_a} = G_{-1_d} = 0`.
///
/// These are formal starting values rather than counts: `G_{0_a} = 0` makes
/// the level-1 equations come out right, but no partition has "largest part
/// at most `0_a`" with count zero.
pub fn lemma_init(truncation: u32) -> LemmaState {
    let r = Ring::acd(truncation);
    LemmaState {
        k: 0,
        e: [r.zero(), r.one(), r.zero(), r.zero()],
        g: [r.zero(), r.one(), r.one(), r.one()],
        g_prev_d: r.zero(),
    }
}

pub fn lemma_step(s: &LemmaState) -> LemmaState {
    let r = Ring::acd(s.g[D].truncation());
    let k = s.k + 1;

    let e_a = r.times("a", k, &(&s.e[B] + &s.g_prev_d));
    let e_b = r.over("", k, &r.times("", k, &s.g[D]));
    let bracket = r.over("c", k, &(&e_a + &s.g[C]));
    let e_c = r.times("c", k, &bracket);
    let e_d = r.times("d", k, &bracket);

    let g_a = &s.g[D] + &e_a;
    let g_b = &g_a + &e_b;
    let g_c = &g_b + &e_c;
    let g_d = &g_c + &e_d;
    LemmaState {
        k,
        e: [e_a, e_b, e_c, e_d],
        g: [g_a, g_b, g_c, g_d],
        g_prev_d: s.g[D].clone(),
    }
}

/// States for levels `0..=k_max`.
pub fn lemma_run(k_max: u32, truncation: u32) -> Vec<LemmaState> {
    let mut out = vec![lemma_init(truncation)];
    for _ in 0..k_max {
        let next = lemma_step(out.last().unwrap());
        out.push(next);
    }
    out
}

/// `G_{k_d}` for `k = 0..=k_max` from the third-order recurrence alone.
pub fn gkd_prop_recurrence(k_max: u32, truncation: u32) -> Vec<Series> {
    let r = Ring::acd(truncation);
    let mut g = Vec::with_capacity(k_max as usize + 1);
    g.push(r.one());
    if k_max >= 1 {
        let aq_dq = r.poly(&[(1, "", 0), (1, "a", 1), (1, "d", 1), (1, "ad", 2)]);
        let g1 = &r.over("", 1, &r.q(1)) + &r.over("c", 1, &aq_dq);
        g.push(g1);
        if k_max >= 2 {
            let first = r.over("", 1, &r.over("", 2, &r.q(3)));
            let second = r.over(
                "",
                1,
                &r.over(
                    "",
                    2,
                    &r.over("c", 1, &(&aq_dq * &r.poly(&[(1, "", 0), (-1, "", 3)]))),
                ),
            );
            g.push(&first + &second);
        }
    }
    for k in 3..=k_max {
        let i = k as usize;
        let t1 = r.over(
            "",
            k,
            &(&r.poly(&[(1, "", 0), (-1, "c", 2 * k)]) * &g[i - 1]),
        );
        let t2 = r.over(
            "",
            k - 1,
            &(&r.poly(&[(1, "a", k), (1, "d", k), (1, "ad", 2 * k)]) * &g[i - 2]),
        );
        let t3 = r.over("", k - 2, &r.times("ad", 2 * k - 1, &g[i - 3]));
        let rhs = &(&t1 + &t2) + &t3;
        g.push(r.over("c", k, &rhs));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_values() {
        let s = lemma_init(10);
        let r = Ring::acd(10);
        assert_eq!(s.e[B], r.one());
        assert!(s.g[A].is_zero());
        assert_eq!(s.g[D], r.one());
    }

    #[test]
    fn first_level() {
        let r = Ring::acd(12);
        let s1 = lemma_step(&lemma_init(12));
        assert_eq!(s1.e[A], r.poly(&[(1, "a", 1)]));
        assert_eq!(s1.e[B], r.over("", 1, &r.q(1)));
        let want = &r.over("", 1, &r.q(1))
            + &r.over(
                "c",
                1,
                &r.poly(&[(1, "", 0), (1, "a", 1), (1, "d", 1), (1, "ad", 2)]),
            );
        assert_eq!(s1.g[D], want);
    }

    #[test]
    fn prop_engine_matches_lemma() {
        let states = lemma_run(6, 14);
        let prop = gkd_prop_recurrence(6, 14);
        for (s, g) in states.iter().zip(&prop) {
            assert_eq!(&s.g[D], g, "k = {}", s.k);
        }
    }

    #[test]
    fn proportional_c_and_d() {
        let r = Ring::acd(12);
        for s in lemma_run(5, 12) {
            assert_eq!(r.times("d", 0, &s.e[C]), r.times("c", 0, &s.e[D]));
        }
    }
}
