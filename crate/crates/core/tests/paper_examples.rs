use multiseg::criteria::{
    cosocle_ladder_times, irreducible, irreducible_seg_times_rigid, is_ladder, lc_pair,
    socle_ladder_times, PairVariant,
};
use multiseg::grammar::parse_rigid;
use multiseg::oracle::{enumerate_multisegments, ui_order_leq_rigid};
use multiseg::{parse, transpose, Error, RigidMultisegment, Segment};
use proptest::prelude::*;

fn r(text: &str) -> RigidMultisegment {
    parse_rigid(text).unwrap().1
}

fn points(m: &RigidMultisegment) -> Vec<i64> {
    let mut p: Vec<i64> = m.iter().flat_map(|s| s.points()).collect();
    p.sort_unstable();
    p
}

#[test]
fn leclerc_multisegment_is_not_a_ladder_and_not_certified() {
    let pi = parse("[3,4]+[1,3]+[2,2]+[0,1]").unwrap();
    assert!(!is_ladder(pi.part(&Default::default()).unwrap()));
    // pi x pi has length two, so no criterion may claim irreducibility
    assert_ne!(irreducible(&pi, &pi), Ok(true));
}

#[test]
fn lc_without_irreducibility() {
    let (m, n) = (r("[0,0]+[0,0]+[1,1]"), r("[0,0]+[1,1]+[1,1]"));
    assert!(lc_pair(&m, &n, PairVariant::Base));
    let (pm, pn) = (parse("[0,0]+[0,0]+[1,1]").unwrap(), parse("[0,0]+[1,1]+[1,1]").unwrap());
    assert!(matches!(irreducible(&pm, &pn), Err(Error::Unsupported(_))));
}

#[test]
fn two_segment_times_a_point() {
    let point = |x| r(&format!("[{x},{x}]"));
    let s01 = Segment::new(0, 1).unwrap();
    assert!(irreducible_seg_times_rigid(s01, &point(0)));
    assert!(irreducible_seg_times_rigid(s01, &point(1)));
    // the Langlands quotient of [0,1] is Z([0,0]+[1,1])
    let lang = transpose(&r("[0,1]"));
    assert_eq!(lang, r("[0,0]+[1,1]"));
    for x in [0, 1] {
        assert!(irreducible_seg_times_rigid(Segment::point(x), &lang));
    }
    // nested segments are unlinked
    assert!(irreducible_seg_times_rigid(Segment::new(-1, 1).unwrap(), &point(0)));
    assert!(!irreducible_seg_times_rigid(Segment::new(-1, 0).unwrap(), &point(1)));
}

#[test]
fn rising_points_build_the_essentially_square_integrable() {
    // soc(rho nu^n x ... x rho) is L([0,n]), whose Zelevinsky parameter is
    // the transpose of [0,n]
    let mut acc = r("[0,0]");
    for n in 1..=5 {
        acc = socle_ladder_times(&r(&format!("[{n},{n}]")), &acc).unwrap();
        let seg: RigidMultisegment = std::iter::once(Segment::new(0, n).unwrap()).collect();
        assert_eq!(acc, transpose(&seg), "n = {n}");
    }
}

#[test]
fn two_points_socle_and_cosocle() {
    assert_eq!(socle_ladder_times(&r("[0,0]"), &r("[1,1]")).unwrap(), r("[0,1]"));
    assert_eq!(cosocle_ladder_times(&r("[0,0]"), &r("[1,1]")).unwrap(), r("[0,0]+[1,1]"));
    assert_eq!(socle_ladder_times(&r("[1,1]"), &r("[0,0]")).unwrap(), r("[0,0]+[1,1]"));
}

fn ladders() -> Vec<RigidMultisegment> {
    enumerate_multisegments(3, 3).into_iter().filter(is_ladder).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ladder_socle_keeps_support(i in any::<prop::sample::Index>(), n in any::<prop::sample::Index>()) {
        let all = enumerate_multisegments(3, 3);
        let ls = ladders();
        let (m, x) = (&ls[i.index(ls.len())], &all[n.index(all.len())]);
        let soc = socle_ladder_times(m, x).unwrap();
        prop_assert_eq!(points(&soc), points(&m.sum(x)));
        prop_assert_eq!(ui_order_leq_rigid(&soc, &m.sum(x), 12), Ok(true));
    }

    #[test]
    fn order_is_reflexive(n in any::<prop::sample::Index>()) {
        let all = enumerate_multisegments(3, 3);
        let m = &all[n.index(all.len())];
        prop_assert_eq!(ui_order_leq_rigid(m, m, 8), Ok(true));
    }
}
