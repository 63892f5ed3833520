mod common;

use num::{BigRational, One, Signed};
use proptest::prelude::*;
use rand::Rng;

use realmodels::arith::count_all_real_roots;
use realmodels::interpolation::{positive_interpolate, positive_ratio_interpolate};

fn instance(seed: u64) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rng = common::rng(seed);
    let m = rng.gen_range(1..=6);
    let nodes = common::distinct_rationals(&mut rng, m, 100);
    let values = (0..m)
        .map(|_| common::positive_rational(&mut rng, 100))
        .collect();
    (nodes, values)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interpolant_invariants(seed in any::<u64>()) {
        let (nodes, values) = instance(seed);
        let ip = positive_interpolate(&nodes, &values).unwrap();
        for (x, y) in nodes.iter().zip(&values) {
            prop_assert_eq!(&common::naive_eval(ip.poly.coeffs(), x), y);
        }
        prop_assert_eq!(count_all_real_roots(&ip.poly).unwrap(), 0);
        prop_assert_eq!(ip.poly.degree(), Some(2 * nodes.len()));
        prop_assert_eq!(ip.poly.leading_coeff(), Some(&BigRational::one()));
    }

    #[test]
    fn positive_everywhere_sampled(seed in any::<u64>()) {
        let (nodes, values) = instance(seed);
        let ip = positive_interpolate(&nodes, &values).unwrap();
        let mut rng = common::rng(seed ^ 0x5eed);
        for _ in 0..100 {
            let t = common::rational(&mut rng, 1000);
            prop_assert!(common::naive_eval(ip.poly.coeffs(), &t).is_positive());
        }
    }

    #[test]
    fn scaling_equivariance(seed in any::<u64>(), cn in 1i64..50, cd in 1i64..50) {
        let (nodes, values) = instance(seed);
        let c = BigRational::new(cn.into(), cd.into());
        let scaled: Vec<_> = values.iter().map(|v| v * &c).collect();
        let ip = positive_interpolate(&nodes, &scaled).unwrap();
        for (x, y) in nodes.iter().zip(&values) {
            prop_assert_eq!(ip.poly.eval(x), y * &c);
        }
    }

    #[test]
    fn ratio_hits_targets(seed in any::<u64>()) {
        let (nodes, ys) = instance(seed);
        let mut rng = common::rng(seed.rotate_left(7));
        let zs: Vec<_> = ys.iter().map(|_| common::positive_rational(&mut rng, 100)).collect();
        let r = positive_ratio_interpolate(&nodes, &ys, &zs).unwrap();
        prop_assert_eq!(r.p.degree(), r.q.degree());
        prop_assert_eq!(count_all_real_roots(&r.p).unwrap(), 0);
        prop_assert_eq!(count_all_real_roots(&r.q).unwrap(), 0);
        for ((x, y), z) in nodes.iter().zip(&ys).zip(&zs) {
            prop_assert_eq!(r.p.eval(x) / r.q.eval(x), y / z);
        }
    }
}
