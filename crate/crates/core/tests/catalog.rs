use selfext_core::hybrid::verify::{
    verify_all, verify_hybrid_vertex_lemma, verify_loop_nonvanishing, verify_quaternion_period4,
    verify_sd_syzygy_structure, LoopExpectation, Suite,
};
use selfext_core::hybrid::{catalog, HybridError};
use selfext_core::oracle::Oracle;
use selfext_core::verdict::Status;

#[test]
fn every_suite_passes() {
    for (name, result) in verify_all(12, 0) {
        let verdicts = result.unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(!verdicts.is_empty(), "{name}");
        for v in verdicts {
            assert_eq!(v.status, Status::Pass, "{v:?}");
        }
    }
}

#[test]
fn verdicts_do_not_depend_on_the_seed() {
    let a = selfext_core::hybrid::verify::verify_entry("sd2a2", 8, 1).unwrap();
    let b = selfext_core::hybrid::verify::verify_entry("sd2a2", 8, 99).unwrap();
    let status =
        |vs: &[selfext_core::verdict::Verdict]| vs.iter().map(|v| (v.check.clone(), v.status)).collect::<Vec<_>>();
    assert_eq!(status(&a), status(&b));
}

fn oracle(name: &str) -> Oracle {
    Oracle::build(&catalog::presentation(name).unwrap()).unwrap()
}

#[test]
fn misuse_is_reported() {
    assert_eq!(
        verify_sd_syzygy_structure("triangle", 4, 0).unwrap_err(),
        HybridError::NotACatalogSDAlgebra("triangle".into())
    );
    assert!(matches!(
        verify_sd_syzygy_structure("nope", 4, 0),
        Err(HybridError::UnknownEntry(_))
    ));

    let o = oracle("triangle");
    let mut suite = Suite::new("triangle", &o, 0);
    assert!(matches!(
        verify_loop_nonvanishing(&mut suite, 0, 4, LoopExpectation::AllDegrees),
        Err(HybridError::NoLoopAtVertex(_))
    ));

    let triangle = catalog::biserial_data("triangle").unwrap().validate().unwrap();
    let a0 = triangle.arrow("a0").unwrap();
    assert!(matches!(
        verify_hybrid_vertex_lemma(&mut suite, &triangle, a0),
        Err(HybridError::VertexNotHybrid(_))
    ));

    let o = oracle("brauer_loop");
    let mut suite = Suite::new("brauer_loop", &o, 0);
    let brauer = catalog::biserial_data("brauer_loop").unwrap().validate().unwrap();
    assert!(matches!(
        verify_quaternion_period4(&mut suite, &brauer, 0),
        Err(HybridError::VertexNotQuaternion(_))
    ));
}

#[test]
fn hybrid_loop_vanishes_only_in_degrees_three_mod_four() {
    let o = oracle("hybrid_loop");
    let pattern = selfext_core::hybrid::verify::loop_pattern(&o, 0, 16);
    let zeros: Vec<usize> = (1..=16).filter(|&n| pattern[n - 1] == 0).collect();
    assert_eq!(zeros, vec![3, 7, 11, 15]);
}

#[test]
fn triangle_resolution_has_length_four() {
    let o = oracle("triangle");
    for v in 0..3 {
        let res = o.resolution(&o.simple(v), 4);
        assert_eq!(res.syzygies[4].dims(), o.simple(v).dims());
        // dim e_iΛ = 4 + 4
        assert_eq!(o.projective(v).dim(), 8);
    }
}
