//! Counts on the built-in constructions, computed once and frozen. Where the
//! instance is small enough the brute-force oracle recomputes each value.

use num_bigint::BigUint;
use planecount::constructions as c;
use planecount::counting as k;
use planecount::geom::Point;
use planecount::oracle::Oracle;
use planecount::pslg::Pslg;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn square(diag: bool) -> Pslg {
    let pts = vec![
        Point::from_ints(0, 0),
        Point::from_ints(2, 0),
        Point::from_ints(2, 2),
        Point::from_ints(0, 2),
    ];
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
    if diag {
        edges.push((0, 2));
    }
    Pslg::checked(pts, edges, false).unwrap()
}

#[test]
fn small_hand_instances() {
    let tri = Pslg::checked(
        vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(0, 1),
        ],
        vec![(0, 1), (1, 2), (0, 2)],
        false,
    )
    .unwrap();
    assert_eq!(k::count_monotone_paths_all_directions(&tri), big(6));
    assert_eq!(k::count_convex_polygons(&tri), big(1));

    let sq = square(true);
    let o = Oracle::default();
    let center = Point::new(planecount::geom::ratio(3, 2), planecount::geom::ratio(1, 2));
    assert_eq!(k::count_convex_polygons(&sq), big(3));
    assert_eq!(k::count_star_at_center(&sq, &center).unwrap(), big(2));
    assert_eq!(o.star_at_center(&sq, &center).unwrap(), big(2));
    assert_eq!(o.count_star_total(&sq).unwrap(), big(3));
    assert_eq!(k::count_convex_pairs(&sq).unwrap(), big(1));
    assert_eq!(o.convex_pairs(&sq).unwrap(), big(1));
    assert_eq!(k::count_convex_polygons(&square(false)), big(1));
}

#[test]
fn monotone_lower_bound_family() {
    let xmono: [u64; 6] = [10, 44, 451, 32713, 159880262, 3812315183993412];
    let all: [u64; 3] = [15, 102, 1177];
    let o = Oracle::default();
    for (i, &want) in xmono.iter().enumerate() {
        let l = i as u32 + 1;
        let g = c::gen_monotone_lb(l).unwrap();
        assert_eq!(k::count_xmonotone(&g), big(want), "l={l}");
        if let Some(&a) = all.get(i) {
            assert_eq!(k::count_monotone_paths_all_directions(&g), big(a), "l={l}");
            assert_eq!(o.monotone_all_directions(&g).unwrap(), big(a), "l={l}");
        }
    }
}

#[test]
fn minimum_monotone_family() {
    let o = Oracle::default();
    for (l, want) in [(2u32, 126u64), (3, 922)] {
        let g = c::gen_min_monpath(l).unwrap();
        assert_eq!(
            k::count_monotone_paths_all_directions(&g),
            big(want),
            "l={l}"
        );
        assert_eq!(o.monotone_all_directions(&g).unwrap(), big(want), "l={l}");
    }
}

#[test]
fn zigzag_convex_counts() {
    let o = Oracle::default();
    for n in 5..=10usize {
        let g = c::gen_min_convex_zigzag(n).unwrap();
        let pairs = (n - 4) as u64;
        let convex = 4 * n as u64 - 12;
        assert_eq!(k::count_convex_polygons(&g), big(convex), "n={n}");
        assert_eq!(k::count_convex_pairs(&g).unwrap(), big(pairs), "n={n}");
        assert_eq!(o.convex_polygons(&g).unwrap(), big(convex), "n={n}");
        assert_eq!(o.convex_pairs(&g).unwrap(), big(pairs), "n={n}");
    }
    let xmono: [u64; 6] = [15, 26, 40, 57, 77, 100];
    for (i, &want) in xmono.iter().enumerate() {
        assert_eq!(
            k::count_xmonotone(&c::gen_min_convex_zigzag(i + 5).unwrap()),
            big(want)
        );
    }
}

#[test]
fn star_lower_bound_center() {
    let g = c::gen_star_lb(1).unwrap();
    let o = c::star_lb_center();
    assert_eq!(k::count_star_at_center(&g, &o).unwrap(), big(27));
    assert_eq!(Oracle::default().star_at_center(&g, &o).unwrap(), big(27));
}

#[test]
fn directed_lower_bound_totals() {
    let want: [u64; 7] = [11, 25, 52, 103, 198, 374, 699];
    let o = Oracle::default();
    for (i, &w) in want.iter().enumerate() {
        let g = c::gen_directed_lb(i + 4).unwrap();
        assert_eq!(
            k::count_directed_paths_total(&g).unwrap(),
            big(w),
            "n={}",
            i + 4
        );
        assert_eq!(o.directed_total(&g).unwrap(), big(w), "n={}", i + 4);
    }
}

#[test]
fn fan_counts() {
    let all: [u64; 6] = [6, 17, 37, 70, 121, 198];
    let convex: [u64; 6] = [1, 3, 6, 10, 15, 21];
    let xmono: [u64; 6] = [4, 6, 21, 25, 63, 69];
    let o = Oracle::default();
    for i in 0..6 {
        let n = i + 3;
        let g = c::gen_fan(n).unwrap();
        assert_eq!(
            k::count_monotone_paths_all_directions(&g),
            big(all[i]),
            "n={n}"
        );
        assert_eq!(k::count_convex_polygons(&g), big(convex[i]), "n={n}");
        assert_eq!(k::count_xmonotone(&g), big(xmono[i]), "n={n}");
        assert_eq!(o.monotone_all_directions(&g).unwrap(), big(all[i]), "n={n}");
        assert_eq!(o.convex_polygons(&g).unwrap(), big(convex[i]), "n={n}");
    }
    for n in 3..=10usize {
        let g = c::gen_fan(n).unwrap();
        let t = ((n - 1) * (n - 2) / 2) as u64;
        assert_eq!(o.count_star_total(&g).unwrap(), big(t), "n={n}");
    }
}
