use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabtherm_core::mite::{self, graph_mite_criterion, is_mite_on};
use stabtherm_core::{subsets, Graph, StabilizerTableau, Support};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_and_graph_criteria_agree(seed in any::<u64>(), n in 3usize..=9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = Graph::random(n, 0.45, &mut rng);
        let t = g.to_stabilizer();
        for k in 1..=4.min(n) {
            subsets::for_each(n, k, |s| {
                let a = Support::new(s.iter().copied());
                assert_eq!(graph_mite_criterion(&g, &a).unwrap(), is_mite_on(&t, &a).holds);
            });
        }
    }

    #[test]
    fn verdicts_are_monotone(seed in any::<u64>(), n in 2usize..=9) {
        let t = StabilizerTableau::random(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let kb: Vec<bool> = (1..=n).map(|k| mite::k_body_mite(&t, k).holds).collect();
        let ll: Vec<bool> = (1..=n).map(|l| mite::l_local_mite(&t, l).holds).collect();
        prop_assert!(kb.windows(2).all(|w| w[0] || !w[1]));
        prop_assert!(ll.windows(2).all(|w| w[0] || !w[1]));
        let u = mite::max_uniformity(&t);
        for k in 1..=n {
            prop_assert_eq!(kb[k - 1], u >= k);
        }
    }

    #[test]
    fn failing_verdicts_carry_witnesses(seed in any::<u64>(), n in 2usize..=8) {
        let t = StabilizerTableau::random(n, &mut ChaCha8Rng::seed_from_u64(seed));
        for k in 1..=n {
            let v = mite::k_body_mite(&t, k);
            prop_assert_eq!(v.holds, v.violating_witness.is_none());
            if let Some((a, w)) = v.violating_witness {
                prop_assert_eq!(a.len(), k);
                prop_assert!(w.support().is_subset_of(&a));
                prop_assert!(t.contains(&w));
            }
        }
    }
}

#[test]
fn full_system_is_never_mite() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..8 {
        assert!(!is_mite_on(&StabilizerTableau::random(n, &mut rng), &Support::full(n)).holds);
    }
}
