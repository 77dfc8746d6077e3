mod common;

use common::{corpus_knots, knot};
use hfroots_core::poly::IntPoly;
use num_integer::gcd;
use proptest::prelude::*;

/// `mu = sum_i (p_i - 1) a_i p_{i+1}...p_g - p_1...p_g + 1` from linking pairs.
fn mu_formula(linking: &[(i64, i64)]) -> i64 {
    let tail = |from: usize| linking[from..].iter().map(|l| l.0).product::<i64>();
    let sum: i64 = linking
        .iter()
        .enumerate()
        .map(|(i, &(p, a))| (p - 1) * a * tail(i + 1))
        .sum();
    sum - tail(0) + 1
}

fn linking_pairs(newton: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = Vec::new();
    for &(p, q) in newton {
        let a = match out.last() {
            None => q,
            Some(&(pp, ap)) => q + p * pp * ap,
        };
        out.push((p, a));
    }
    out
}

#[test]
fn gaps_lie_below_mf_on_corpus() {
    for pairs in corpus_knots() {
        let k = knot(&pairs);
        assert_eq!(k.linking_pairs(), linking_pairs(&pairs).as_slice());
        assert_eq!(k.mu(), mu_formula(k.linking_pairs()), "{pairs:?}");
        assert!(k.gaps().iter().all(|&g| g < k.mf()), "{pairs:?}");
        assert_eq!(k.gaps().len() as i64, k.delta());
    }
}

#[test]
fn largest_gap_below_mf_up_to_three_pairs() {
    let mut count = 0;
    let coprime = |p: i64, q: i64| gcd(p, q) == 1;
    for p1 in 2..=9 {
        for q1 in p1 + 1..=9 {
            if !coprime(p1, q1) {
                continue;
            }
            let mut stack = vec![vec![(p1, q1)]];
            while let Some(pairs) = stack.pop() {
                let l = linking_pairs(&pairs);
                let (pg, ag) = *l.last().unwrap();
                // the largest gap is mu - 1
                assert!(mu_formula(&l) <= ag * pg, "{pairs:?}");
                count += 1;
                if pairs.len() < 3 {
                    for p in 2..=9 {
                        for q in 1..=9 {
                            if coprime(p, q) {
                                let mut next = pairs.clone();
                                next.push((p, q));
                                stack.push(next);
                            }
                        }
                    }
                }
            }
        }
    }
    // 19 first pairs, 46 choices for each later pair
    assert_eq!(count, 19 * (1 + 46 + 46 * 46));
}

proptest! {
    #[test]
    fn q_polynomial_identity(p1 in 2i64..=6, q1 in 3i64..=9, second in prop::option::of((2i64..=3, 1i64..=4))) {
        prop_assume!(p1 < q1 && gcd(p1, q1) == 1);
        let mut pairs = vec![(p1, q1)];
        if let Some((p2, q2)) = second {
            prop_assume!(gcd(p2, q2) == 1);
            pairs.push((p2, q2));
        }
        let k = knot(&pairs);
        let t_minus_1 = IntPoly::new(vec![-1, 1]);
        let rebuilt = IntPoly::one()
            .add(&IntPoly::new(vec![-k.delta(), k.delta()]))
            .add(&t_minus_1.mul(&t_minus_1).mul(&k.q_polynomial()));
        prop_assert_eq!(&rebuilt, k.alexander());
        // alpha_i counts gaps above i
        for (i, &a) in k.alpha().iter().enumerate() {
            prop_assert_eq!(a, k.gaps().iter().filter(|&&g| g > i as i64).count() as i64);
        }
        prop_assert_eq!(k.alpha().len() as i64, k.mu() - 1);
    }
}
