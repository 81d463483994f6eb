use fracint::{
    build_strips, gamma, power_oracle, region_family, translate_check, Error, Horizon, Integrand,
    Order, TransformPair,
};

fn pair(a: f64, t: f64) -> TransformPair {
    TransformPair::new(Order::new(a).unwrap(), Horizon::new(t).unwrap()).unwrap()
}

#[test]
fn unit_order_gives_rectangles() {
    let g = build_strips(&Integrand::identity(), &pair(1.0, 10.0), 5, 50).unwrap();
    assert_eq!(g.boundaries.len(), 6);
    for (i, b) in g.boundaries.iter().enumerate() {
        let x0 = 2.0 * i as f64;
        assert!(
            b.points.iter().all(|&(x, _)| (x - x0).abs() < 1e-12),
            "boundary {i}"
        );
    }
    // left sum of τ over five strips of width 2
    assert!((g.strip_area_sum() - 40.0).abs() < 1e-12);
    assert!((g.total_area - 50.0).abs() < 1e-10);
}

#[test]
fn five_strips_at_four_fifths() {
    let g = build_strips(&Integrand::identity(), &pair(0.8, 10.0), 5, 200).unwrap();
    assert_eq!(g.boundaries.len(), 6);
    let last = *g.right_edge().points.last().unwrap();
    assert!((last.0 - 10.0).abs() < 1e-9 && (last.1 - 10.0).abs() < 1e-9);
    let span = 10f64.powf(0.8) / gamma(1.8).unwrap();
    assert!((g.span() - span).abs() <= 1e-12 * span);
    let report = translate_check(&g, None).unwrap();
    assert!(report.max_offset_deviation <= 1e-10 * 10.0);
    assert!(report.right_edge_shape_distance.is_none());
}

#[test]
fn boundaries_stay_in_region() {
    let f = Integrand::sqrt();
    let g = build_strips(&f, &pair(0.5, 4.0), 7, 100).unwrap();
    let top = f.eval(4.0);
    for b in &g.boundaries {
        let mut prev = -1.0;
        for &(x, y) in &b.points {
            assert!(y >= prev && y <= top * (1.0 + 1e-12));
            prev = y;
            // right of (or on) the graph of f
            assert!(x >= f.inverse(y, 4.0).unwrap() - 1e-9);
        }
        assert!((b.points.last().unwrap().1 - b.clip_height).abs() < 1e-9 * top);
    }
}

#[test]
fn areas_converge_to_total() {
    let f = Integrand::identity();
    let p = pair(0.8, 10.0);
    let oracle = power_oracle(1.0, p.order(), p.horizon()).unwrap();
    let mut prev_gap = f64::INFINITY;
    for n in [10, 100, 1_000] {
        let g = build_strips(&f, &p, n, 2).unwrap();
        let gap = (g.strip_area_sum() - oracle).abs() / oracle;
        assert!(gap < prev_gap);
        prev_gap = gap;
    }
    let g = build_strips(&f, &p, 1, 50).unwrap();
    assert!((g.total_area - oracle).abs() < 1e-9 * oracle);
    assert!((g.region_area - oracle).abs() < 1e-7 * oracle);
}

#[test]
fn family_is_alpha_major() {
    let alphas: Vec<Order> = [0.4, 0.8].iter().map(|&a| Order::new(a).unwrap()).collect();
    let ts: Vec<Horizon> = [2.0, 6.0, 10.0]
        .iter()
        .map(|&t| Horizon::new(t).unwrap())
        .collect();
    let fam = region_family(&Integrand::identity(), &alphas, &ts, 20).unwrap();
    assert_eq!(fam.len(), 6);
    assert_eq!((fam[0].alpha(), fam[0].t()), (0.4, 2.0));
    assert_eq!((fam[3].alpha(), fam[3].t()), (0.8, 2.0));
    assert!(fam.iter().all(|g| g.n == 1 && g.boundaries.len() == 2));
    // right edges of the same order at different t are not simple rescalings
    let r = translate_check(&fam[0], Some(&fam[2])).unwrap();
    assert!(r.right_edge_shape_distance.unwrap() > 1e-3);
    let same = translate_check(&fam[1], Some(&fam[1])).unwrap();
    assert!(same.right_edge_shape_distance.unwrap() < 1e-12);
}

#[test]
fn rejects_unusable_integrands() {
    let p = pair(0.5, 1.0);
    let unknown = Integrand::new("sin", f64::sin);
    assert!(matches!(
        build_strips(&unknown, &p, 3, 10),
        Err(Error::NonMonotone(_))
    ));
    let shifted = Integrand::new("1+x", |x| 1.0 + x).increasing();
    assert!(build_strips(&shifted, &p, 3, 10).is_err());
    assert!(build_strips(&Integrand::identity(), &p, 0, 10).is_err());
    assert!(build_strips(&Integrand::identity(), &p, 3, 1).is_err());
}
