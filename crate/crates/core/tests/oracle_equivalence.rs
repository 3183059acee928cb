use proptest::prelude::*;

use selfext_core::lab::cross_check_oracle;
use selfext_core::oracle::realize::{kupisch_presentation, serial_module};
use selfext_core::oracle::{iso_test, IsoResult, Oracle};
use selfext_core::verdict::Status;
use selfext_core::{NakayamaAlgebra, Shape};

fn algebra() -> impl Strategy<Value = NakayamaAlgebra> {
    (1usize..=4, prop::bool::ANY)
        .prop_flat_map(|(n, cyclic)| (prop::collection::vec(1usize..=6, n), Just(cyclic)))
        .prop_filter_map("invalid series", |(series, cyclic)| {
            let shape = if cyclic { Shape::Cyclic } else { Shape::Linear };
            NakayamaAlgebra::new(&series, shape).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn formulas_agree_with_the_oracle(alg in algebra(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let verdicts = cross_check_oracle(&alg, p, 8).unwrap();
        for v in verdicts {
            prop_assert_eq!(v.status, Status::Pass, "{:?}", v);
        }
    }

    #[test]
    fn syzygies_match_the_formula(alg in algebra()) {
        let oracle = Oracle::build(&kupisch_presentation(&alg, 2)).unwrap();
        for m in alg.modules() {
            let om = oracle.syzygy(&serial_module(&oracle, m.vertex, m.length));
            match alg.syzygy(m) {
                None => prop_assert!(om.is_zero()),
                Some(s) => {
                    let expected = serial_module(&oracle, s.vertex, s.length);
                    prop_assert_eq!(iso_test(&om, &expected, 0), IsoResult::Isomorphic, "Ω{} over {}", m, alg);
                }
            }
        }
    }
}

#[test]
fn wider_field_on_a_larger_local_algebra() {
    let alg = NakayamaAlgebra::cyclic(&[7]).unwrap();
    for v in cross_check_oracle(&alg, 7, 10).unwrap() {
        assert_eq!(v.status, Status::Pass, "{v:?}");
    }
}
