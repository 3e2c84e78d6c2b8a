use mwdraw::geometry::{BetaRegion, Point};
use mwdraw::io::{DrawingDocument, TreeDocument};
use mwdraw::proximity::{extract_mw_graphs, verify, DrawingPair, Mode};
use mwdraw::tree_model::{gen_random_tree, RootedTree};
use mwdraw::{Beta, TAU};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Point> {
    (-100.0..100.0f64, -100.0..100.0f64).prop_map(|(x, y)| Point::new(x, y))
}

fn beta() -> impl Strategy<Value = Beta> {
    prop_oneof![
        Just(Beta::Infinite),
        (1.0..20.0f64).prop_map(|b| Beta::new(b).unwrap())
    ]
}

fn distinct(pts: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    for p in pts {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

proptest! {
    #[test]
    fn regions_are_symmetric_and_nested(p in point(), q in point(), w in point(), b in beta()) {
        prop_assume!(p != q);
        for closed in [false, true] {
            prop_assert_eq!(
                BetaRegion::new(p, q, b, closed).unwrap().contains(w),
                BetaRegion::new(q, p, b, closed).unwrap().contains(w)
            );
        }
        if BetaRegion::open(p, q, b).unwrap().contains(w) {
            prop_assert!(BetaRegion::closed(p, q, b).unwrap().contains(w));
        }
    }

    #[test]
    fn gabriel_region_is_the_diameter_disk(p in point(), q in point(), w in point()) {
        prop_assume!(p != q);
        let r = BetaRegion::open(p, q, Beta::GABRIEL).unwrap();
        let m = r.margin(w);
        let disk = p.dist(q) / 2.0 - w.dist(p.lerp(q, 0.5));
        prop_assert!((m - disk).abs() <= 1e-12 * r.scale(w));
    }

    #[test]
    fn extracted_graphs_verify(
        a in prop::collection::vec(point(), 1..8),
        b in prop::collection::vec(point(), 1..8),
        beta in beta(),
        closed in any::<bool>(),
    ) {
        let (a, b) = (distinct(a), distinct(b));
        let (g0, g1) = extract_mw_graphs(&a, &b, beta, closed).unwrap();
        let d = DrawingPair::from_points(a, g0, b, g1).unwrap();
        let mode = if closed { Mode::Closed } else { Mode::Open };
        let r = verify(&d, beta, mode, TAU);
        prop_assert!(r.is_valid(), "{:?}", r.violations);
    }

    #[test]
    fn drawing_documents_round_trip(
        a in prop::collection::vec(point(), 0..8),
        b in prop::collection::vec(point(), 0..8),
    ) {
        let (a, b) = (distinct(a), distinct(b));
        let ea: Vec<_> = (1..a.len()).map(|i| (i - 1, i)).collect();
        let d = DrawingPair::from_points(a, ea, b, vec![]).unwrap();
        let text = DrawingDocument::from_drawing(&d).to_json();
        prop_assert_eq!(DrawingDocument::from_json(&text).unwrap().drawing().unwrap(), d);
    }

    #[test]
    fn tree_documents_round_trip(n in 1..60usize, seed in any::<u64>()) {
        let t = gen_random_tree(n, seed).unwrap();
        let rt = RootedTree::new(t.clone(), t.center()).unwrap();
        let doc = TreeDocument::from_rooted(&rt, None);
        let back = TreeDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        let rooted = back.rooted().unwrap().unwrap();
        prop_assert_eq!(rooted.all_children(), rt.all_children());
    }
}
