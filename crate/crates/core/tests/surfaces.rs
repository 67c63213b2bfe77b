use num_traits::Zero;
use pretzel_core::arith::int;
use pretzel_core::hatcher_oertel::{
    boundary_slope, enumerate_surfaces, enumerate_systems, seifert_reference, twist_number,
};
use pretzel_core::jones::PretzelKnot;

fn sample() -> Vec<PretzelKnot> {
    let mut out = Vec::new();
    for r in [-3, -5, -7, -9] {
        for s in [3, 5, 7, 9] {
            for t in [3, 5, 7, 9] {
                out.push(PretzelKnot::new(r, s, t).unwrap());
            }
        }
    }
    out.push(PretzelKnot::new(3, 5, 7).unwrap());
    out.push(PretzelKnot::new(-3, -5, 7).unwrap());
    out
}

#[test]
fn endpoints_satisfy_the_gluing_equations() {
    for k in sample() {
        let systems = enumerate_systems(&k);
        assert!(!systems.is_empty(), "{k}");
        for sys in systems {
            let ends = [0, 1, 2].map(|i| sys.endpoint(i));
            assert_eq!(ends[0].horizontal(), ends[1].horizontal(), "{k}");
            assert_eq!(ends[1].horizontal(), ends[2].horizontal(), "{k}");
            let vertical = ends.iter().map(|e| e.vertical()).fold(int(0), |a, v| a + v);
            assert!(vertical.is_zero(), "{k}: vertical sum {vertical}");
            for (l, k_i) in sys.lambdas.iter().zip(sys.ks) {
                assert_eq!(l * int(sys.m), int(k_i));
            }
        }
    }
}

#[test]
fn reference_surface() {
    for k in sample() {
        let seifert = seifert_reference(&k);
        assert_eq!(boundary_slope(&seifert, &seifert), int(0));
        // One increasing and two decreasing short paths.
        let negatives = [k.r, k.s, k.t].iter().filter(|p| **p < 0).count() as i64;
        assert_eq!(twist_number(&seifert), int(2 * (3 - 2 * negatives)), "{k}");
        let reports = enumerate_surfaces(&k);
        assert_eq!(reports.iter().filter(|s| s.is_seifert_reference).count(), 1);
    }
}

#[test]
fn sheets_count_boundary_circles() {
    for k in sample() {
        for s in enumerate_surfaces(&k) {
            let denom: i64 = s.slope.denom().try_into().unwrap();
            assert_eq!(
                s.sheets,
                s.boundary_components * denom,
                "{k} slope {}",
                s.slope
            );
            assert_eq!(s.chi_over_m * int(s.sheets), s.euler_characteristic);
        }
    }
}
