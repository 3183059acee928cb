use proptest::prelude::*;

use selfext_core::{Dimension, NakayamaAlgebra, SerialModule, Shape};

fn algebra() -> impl Strategy<Value = NakayamaAlgebra> {
    (1usize..=4, prop::bool::ANY)
        .prop_flat_map(|(n, cyclic)| (prop::collection::vec(1usize..=8, n), Just(cyclic)))
        .prop_filter_map("invalid series", |(series, cyclic)| {
            let shape = if cyclic { Shape::Cyclic } else { Shape::Linear };
            NakayamaAlgebra::new(&series, shape).ok()
        })
}

fn with_modules() -> impl Strategy<Value = (NakayamaAlgebra, SerialModule, SerialModule)> {
    algebra().prop_flat_map(|alg| {
        let count = alg.modules().len();
        (Just(alg), 0..count, 0..count).prop_map(|(alg, a, b)| {
            let ms = alg.modules();
            (alg, ms[a], ms[b])
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn validation_is_idempotent(alg in algebra()) {
        prop_assert_eq!(NakayamaAlgebra::new(alg.kupisch(), alg.shape()).unwrap(), alg);
    }

    #[test]
    fn syzygy_has_the_complementary_length((alg, m, _) in with_modules()) {
        let c = alg.c(m.vertex as i64);
        match alg.syzygy(m) {
            None => prop_assert!(alg.is_projective(m)),
            Some(om) => {
                prop_assert_eq!(om.length, c - m.length);
                prop_assert!(alg.contains(om));
            }
        }
    }

    #[test]
    fn rigidity_is_vanishing_self_extension((alg, m, _) in with_modules()) {
        prop_assert_eq!(alg.is_rigid(m), alg.ext1_dim(m, m) == 0);
    }

    #[test]
    fn dimension_shift((alg, m, n) in with_modules(), i in 1usize..6) {
        let shifted = alg.syzygy_power(m, i).map_or(0, |om| alg.ext1_dim(om, n));
        prop_assert_eq!(alg.ext_dim(m, n, i + 1), shifted);
    }

    #[test]
    fn opposite_is_an_involution(alg in algebra()) {
        prop_assert_eq!(alg.opposite().opposite(), alg);
    }

    #[test]
    fn duality_swaps_extension_arguments((alg, m, n) in with_modules()) {
        let op = alg.opposite();
        let (dm, dn) = (alg.dual_module(m), alg.dual_module(n));
        prop_assert_eq!(op.dual_module(dm), m);
        prop_assert_eq!(alg.hom_dim(m, n), op.hom_dim(dn, dm));
        prop_assert_eq!(alg.ext1_dim(m, n), op.ext1_dim(dn, dm));
    }

    #[test]
    fn finite_projective_dimension_iff_orbit_ends((alg, m, _) in with_modules()) {
        let (orbit, cycles) = alg.syzygy_orbit(m);
        match alg.proj_dim(m) {
            Dimension::Finite(d) => {
                prop_assert!(!cycles);
                prop_assert_eq!(d + 1, orbit.len());
            }
            Dimension::Infinite => prop_assert!(cycles),
        }
    }

    #[test]
    fn non_rigid_modules_extend_in_every_degree((alg, m, _) in with_modules()) {
        if !alg.is_rigid(m) {
            for i in 1..=12 {
                prop_assert!(alg.ext_dim(m, m, i) > 0, "Ext^{} of {} over {} vanishes", i, m, alg);
            }
        }
    }
}
