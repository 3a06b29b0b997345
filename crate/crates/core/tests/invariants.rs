use proptest::prelude::*;

use rootadj::algebra::{GeneratorSpec, PresentedAlgebra};
use rootadj::basis::{enumerate_basis, BasisTable};
use rootadj::coeffs::{CoefficientRing, Scalar};
use rootadj::grading::Bidegree;
use rootadj::regrading::{collapse_weights, dilate_weights, restrict_weights};
use rootadj::splitting::{assemble_thh_table, frobenius_orbits};

fn table(cells: &[(i64, i64, usize)], window: (i64, i64)) -> BasisTable {
    let mut t = BasisTable::new(window, 0);
    for (i, &(deg, wt, rank)) in cells.iter().enumerate() {
        t.extend(Bidegree::new(deg, wt), (0..rank).map(|j| format!("e{i}_{j}")));
    }
    t
}

fn cells() -> impl Strategy<Value = Vec<(i64, i64, usize)>> {
    prop::collection::vec((0i64..40, -6i64..6, 1usize..4), 0..20)
}

fn two_gen(d1: i64, w1: i64, d2: i64, w2: i64) -> PresentedAlgebra {
    let z5 = CoefficientRing::zp_local(5).unwrap();
    let spec = |name: &str, d: i64, w: i64| {
        if d % 2 == 0 {
            GeneratorSpec::polynomial(name, d, w)
        } else {
            GeneratorSpec::exterior(name, d, w)
        }
    };
    PresentedAlgebra::builder(z5).gen(spec("x", d1, w1)).gen(spec("y", d2, w2)).build().unwrap()
}

proptest! {
    #[test]
    fn orbits_partition_and_are_closed(m in 1u64..60, p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])) {
        let orbits = frobenius_orbits(m, p).unwrap();
        let mut seen: Vec<u64> = orbits.blocks.iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..m).collect::<Vec<_>>());
        if m % p != 0 {
            for block in &orbits.blocks {
                for w in block {
                    prop_assert!(block.contains(&(w * p % m)));
                }
            }
        }
        prop_assert_eq!(orbits.is_full_splitting(), p % m == 1 % m);
    }

    #[test]
    fn assembled_rank(thh in cells(), log in cells(), m in 1u64..6, k in 0i64..5) {
        let flat = |c: &[(i64, i64, usize)]| c.iter().map(|&(d, _, r)| (d, 0, r)).collect::<Vec<_>>();
        let a = table(&flat(&thh), (0, 40));
        let l = table(&flat(&log), (-40, 40));
        let out = assemble_thh_table(&a, &l, m, k).unwrap();
        let shifted: usize = (1..m as i64)
            .map(|i| {
                l.entries
                    .iter()
                    .filter(|(b, _)| (0..=40).contains(&(b.deg + i * k)))
                    .map(|(_, v)| v.len())
                    .sum::<usize>()
            })
            .sum();
        prop_assert_eq!(out.total_rank(), a.total_rank() + shifted);
        prop_assert_eq!(out.weight_slice(0).total_rank(), a.total_rank());
    }

    #[test]
    fn collapse_keeps_rank_per_degree(c in cells(), n in 1u64..8) {
        let t = table(&c, (0, 40));
        let collapsed = collapse_weights(&t, n).unwrap();
        prop_assert_eq!(collapsed.ranks_by_degree(), t.ranks_by_degree());
        prop_assert!(collapsed.entries.keys().all(|b| (0..n as i64).contains(&b.wt)));
    }

    #[test]
    fn restrict_undoes_dilate(c in cells(), s in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3, 5])) {
        let t = table(&c, (0, 40));
        let back = restrict_weights(&dilate_weights(&t, s).unwrap(), s).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn enumeration_is_monotone_in_the_window(d1 in 1i64..7, w1 in -3i64..4, d2 in 1i64..7, w2 in -3i64..4, hi in 0i64..30) {
        let alg = two_gen(d1, w1, d2, w2);
        let small = enumerate_basis(&alg, (0, hi)).unwrap();
        let big = enumerate_basis(&alg, (0, hi + 7)).unwrap();
        for (b, labels) in &small.entries {
            prop_assert_eq!(big.labels(*b), labels.as_slice());
        }
    }

    #[test]
    fn koszul_sign(d1 in 1i64..7, w1 in -3i64..4, d2 in 1i64..7, w2 in -3i64..4) {
        let alg = two_gen(d1, w1, d2, w2);
        let x = alg.generator("x").unwrap();
        let y = alg.generator("y").unwrap();
        let sign = if d1 % 2 == 1 && d2 % 2 == 1 { -1 } else { 1 };
        let yx = alg.scale(&Scalar::from_integer(sign.into()), &alg.multiply(&y, &x));
        prop_assert_eq!(alg.multiply(&x, &y), yx);
        if d1 % 2 == 1 {
            prop_assert!(alg.multiply(&x, &x).is_zero());
        }
    }
}
