//! Seeded random instances: integer point sets completed to edge-maximal
//! graphs by greedy insertion, and random orientations.

use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{self, IntFrame, Orientation, Point, SegmentRelation};
use crate::pslg::Pslg;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` distinct points with coordinates in `0..=range`.
pub fn random_points<R: Rng>(rng: &mut R, n: usize, range: i64) -> Result<Vec<Point>> {
    if ((range + 1) * (range + 1)) < n as i64 {
        return Err(Error::Precondition(format!(
            "grid 0..={range} cannot hold {n} distinct points"
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let (x, y) = (rng.gen_range(0..=range), rng.gen_range(0..=range));
        if seen.insert((x, y)) {
            pts.push(Point::from_ints(x, y));
        }
    }
    Ok(pts)
}

fn insertable(f: &IntFrame, edges: &[(usize, usize)], a: usize, b: usize) -> bool {
    if (0..f.pts.len()).any(|p| p != a && p != b && f.in_open_segment(p, a, b)) {
        return false;
    }
    edges.iter().all(|&(c, d)| {
        matches!(
            f.segment_relation((a, b), (c, d)),
            SegmentRelation::Disjoint | SegmentRelation::SharedEndpoint
        )
    })
}

/// Inserts every pair in random order unless it conflicts with an edge
/// already present; the result cannot take another segment.
pub fn greedy_triangulation<R: Rng>(rng: &mut R, points: Vec<Point>) -> Pslg {
    let f = IntFrame::new(&points);
    let n = points.len();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    pairs.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (a, b) in pairs {
        if insertable(&f, &edges, a, b) {
            edges.push((a, b));
        }
    }
    edges.sort_unstable();
    Pslg::new(points, edges, false)
}

/// Random edge-maximal instance on `n >= 3` points that are not all collinear.
pub fn random_triangulation<R: Rng>(rng: &mut R, n: usize, range: i64) -> Result<Pslg> {
    if n < 3 {
        return Err(Error::Precondition("need at least three points".into()));
    }
    for _ in 0..64 {
        let pts = random_points(rng, n, range)?;
        let f = IntFrame::new(&pts);
        let flat = (2..n).all(|c| f.orient(0, 1, c) == Orientation::Collinear);
        if !flat {
            return Ok(greedy_triangulation(rng, pts));
        }
    }
    Err(Error::Construction(
        "could not draw a non-collinear point set".into(),
    ))
}

/// No three of the points collinear.
pub fn in_general_position(points: &[Point]) -> bool {
    let f = IntFrame::new(points);
    let n = points.len();
    (0..n).all(|a| {
        (a + 1..n).all(|b| (b + 1..n).all(|c| f.orient(a, b, c) != Orientation::Collinear))
    })
}

/// Like [`random_triangulation`] but redraws until no three points are
/// collinear.
pub fn random_general_triangulation<R: Rng>(rng: &mut R, n: usize, range: i64) -> Result<Pslg> {
    if n < 3 {
        return Err(Error::Precondition("need at least three points".into()));
    }
    for _ in 0..256 {
        let pts = random_points(rng, n, range)?;
        if in_general_position(&pts) {
            return Ok(greedy_triangulation(rng, pts));
        }
    }
    Err(Error::Construction(format!(
        "no point set in general position on grid 0..={range}"
    )))
}

/// `count` instances with sizes drawn from `min_n..=max_n` and coordinates
/// in a grid of side `2n`.
pub fn seeded_instances(seed: u64, count: usize, min_n: usize, max_n: usize) -> Result<Vec<Pslg>> {
    if min_n < 3 || max_n < min_n {
        return Err(Error::Precondition(format!(
            "bad size range {min_n}..={max_n}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            random_triangulation(&mut rng, n, 2 * n as i64)
        })
        .collect()
}

/// Orients each edge from lower to higher rank of a random permutation.
pub fn random_acyclic_orientation<R: Rng>(rng: &mut R, g: &Pslg) -> Pslg {
    let mut rank: Vec<usize> = (0..g.n()).collect();
    rank.shuffle(rng);
    let edges = g
        .edges
        .iter()
        .map(|&(a, b)| if rank[a] < rank[b] { (a, b) } else { (b, a) })
        .collect();
    g.with_edges(edges, true)
}

/// Independent fair orientation of every edge; may contain cycles.
pub fn random_orientation<R: Rng>(rng: &mut R, g: &Pslg) -> Pslg {
    let edges = g
        .edges
        .iter()
        .map(|&(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect();
    g.with_edges(edges, true)
}

/// Rational point with denominator 7 near the bounding box of `g`, off
/// every vertex and every supporting line of an edge.
pub fn random_center<R: Rng>(rng: &mut R, g: &Pslg) -> Result<Point> {
    let bound = |f: fn(&Point) -> f64| -> (i64, i64) {
        let vs: Vec<f64> = g.points.iter().map(f).collect();
        let lo = vs.iter().cloned().fold(f64::INFINITY, f64::min).floor() as i64;
        let hi = vs.iter().cloned().fold(f64::NEG_INFINITY, f64::max).ceil() as i64;
        (lo * 7, hi * 7)
    };
    let (x0, x1) = bound(|p| p.x.to_f64().unwrap_or(0.0));
    let (y0, y1) = bound(|p| p.y.to_f64().unwrap_or(0.0));
    for _ in 0..1000 {
        let o = Point::new(
            geom::ratio(rng.gen_range(x0..=x1), 7),
            geom::ratio(rng.gen_range(y0..=y1), 7),
        );
        let on_vertex = g.points.contains(&o);
        let on_line = g
            .edges
            .iter()
            .any(|&(a, b)| geom::orient(&g.points[a], &g.points[b], &o) == Orientation::Collinear);
        if !on_vertex && !on_line {
            return Ok(o);
        }
    }
    Err(Error::Construction("no valid center found".into()))
}
