//! Generators for the extremal graph families. Every generator validates its
//! output with exact predicates before returning it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::geom::{self, rat, ratio, AngleVerdict, Point, Rational};
use crate::interval;
use crate::pslg::Pslg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstructionName {
    MonotoneLb,
    Gk,
    StarLb,
    DirectedLb,
    MinConvexZigzag,
    Fan,
    DirectedFan,
    MinMonpath,
}

impl ConstructionName {
    pub const ALL: [ConstructionName; 8] = [
        ConstructionName::MonotoneLb,
        ConstructionName::Gk,
        ConstructionName::StarLb,
        ConstructionName::DirectedLb,
        ConstructionName::MinConvexZigzag,
        ConstructionName::Fan,
        ConstructionName::DirectedFan,
        ConstructionName::MinMonpath,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstructionName::MonotoneLb => "monotone-lb",
            ConstructionName::Gk => "gk",
            ConstructionName::StarLb => "star-lb",
            ConstructionName::DirectedLb => "directed-lb",
            ConstructionName::MinConvexZigzag => "min-convex-zigzag",
            ConstructionName::Fan => "fan",
            ConstructionName::DirectedFan => "directed-fan",
            ConstructionName::MinMonpath => "min-monpath",
        }
    }
}

impl fmt::Display for ConstructionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstructionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown construction {s:?}")))
    }
}

/// A named construction with its integer parameters (`l`, `k`, `n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub name: ConstructionName,
    pub params: BTreeMap<String, u64>,
}

impl ConstructionSpec {
    pub fn new(name: ConstructionName) -> Self {
        ConstructionSpec {
            name,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: u64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    fn get(&self, key: &str) -> Result<u64> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{} requires parameter {key}", self.name)))
    }

    fn small(&self, key: &str) -> Result<u32> {
        let v = self.get(key)?;
        u32::try_from(v)
            .map_err(|_| Error::Precondition(format!("parameter {key} = {v} is too large")))
    }

    pub fn build(&self) -> Result<Pslg> {
        match self.name {
            ConstructionName::MonotoneLb => gen_monotone_lb(self.small("l")?),
            ConstructionName::Gk => gen_gk(self.small("l")?, self.small("k")?),
            ConstructionName::StarLb => gen_star_lb(self.small("l")?),
            ConstructionName::DirectedLb => gen_directed_lb(self.get("n")? as usize),
            ConstructionName::MinConvexZigzag => gen_min_convex_zigzag(self.get("n")? as usize),
            ConstructionName::Fan => gen_fan(self.get("n")? as usize),
            ConstructionName::DirectedFan => gen_directed_fan(self.get("n")? as usize),
            ConstructionName::MinMonpath => gen_min_monpath(self.small("l")?),
        }
    }
}

fn finish(g: Pslg, what: &str) -> Result<Pslg> {
    g.validate()
        .map_err(|e| Error::Construction(format!("{what}: {e}")))?;
    Ok(g)
}

const MAX_LEVEL: u32 = 24;

/// Points `v_1..v_n` at `x = i`; odd indices on an upward arch, even ones on
/// an inverted arch high above it.
fn two_chain_points(n: usize) -> Vec<Point> {
    let big = n as i64 + 1;
    (1..=n as i64)
        .map(|i| {
            let arch = i * (big - i);
            let y = if i % 2 == 1 { arch } else { big * big - arch };
            Point::from_ints(i, y)
        })
        .collect()
}

/// Edges of the level-`k` subgraph: the path plus `(v_i, v_{i+2^j})` for
/// `1 <= j <= k` whenever `i - 1` or `i - 2` is a multiple of `2^j`.
fn gk_edges(n: usize, k: u32) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    for j in 1..=k {
        let step = 1usize << j;
        for i in 1..=n {
            if i + step > n {
                break;
            }
            if (i - 1) % step == 0 || (i >= 2 && (i - 2) % step == 0) {
                edges.push((i - 1, i - 1 + step));
            }
        }
    }
    edges
}

/// The level-`l` lower-bound graph on `2^l + 2` vertices.
pub fn gen_monotone_lb(l: u32) -> Result<Pslg> {
    gen_gk(l, l)
}

/// The subgraph containing the path and the chords of length `2^j`, `j <= k`.
pub fn gen_gk(l: u32, k: u32) -> Result<Pslg> {
    if l == 0 || l > MAX_LEVEL {
        return Err(Error::Precondition(format!(
            "level l = {l} must lie in 1..={MAX_LEVEL}"
        )));
    }
    if k > l {
        return Err(Error::Precondition(format!(
            "sublevel k = {k} exceeds l = {l}"
        )));
    }
    let n = (1usize << l) + 2;
    finish(Pslg::new(two_chain_points(n), gk_edges(n, k), false), "gk")
}

/// Center of the cyclic arrangement produced by [`gen_star_lb`].
pub fn star_lb_center() -> Point {
    Point::from_ints(0, 0)
}

/// Three projective copies of the lower-bound graph arranged clockwise
/// around the origin, joined last-to-first by connector edges.
///
/// The copy `(x, y)` with `x` rescaled to `[-1, 1]` maps to
/// `(x, 1) * H / (y + H)`, sending the upward point at infinity to the
/// origin; copies are rotated by a rational rotation of about 120 degrees.
pub fn gen_star_lb(l: u32) -> Result<Pslg> {
    let base = gen_monotone_lb(l)?;
    let n = base.n();
    // cos, sin of the rotation with half-angle tangent 7/4
    let (c, s) = (ratio(-33, 65), ratio(56, 65));
    let mut h = rat(1);
    for _ in 0..8 {
        let copy: Vec<Point> = base
            .points
            .iter()
            .map(|p| {
                let x = (&p.x * rat(2) - rat(n as i64 + 1)) / rat(n as i64 - 1);
                let scale = &h / (&p.y + &h);
                Point::new(x * &scale, scale)
            })
            .collect();
        let mut points = Vec::with_capacity(3 * n);
        let mut rot = (rat(1), rat(0));
        for _ in 0..3 {
            for p in &copy {
                // clockwise rotation by the angle
                points.push(Point::new(
                    &rot.0 * &p.x + &rot.1 * &p.y,
                    -&rot.1 * &p.x + &rot.0 * &p.y,
                ));
            }
            rot = (&rot.0 * &c - &rot.1 * &s, &rot.1 * &c + &rot.0 * &s);
        }
        let mut edges = Vec::with_capacity(3 * base.m() + 3);
        for j in 0..3 {
            edges.extend(base.edges.iter().map(|&(a, b)| (a + j * n, b + j * n)));
            edges.push((j * n + n - 1, ((j + 1) % 3) * n));
        }
        let g = Pslg::new(points, edges, false);
        let o = star_lb_center();
        let clockwise = g.edges.iter().all(|&(a, b)| {
            let (pa, pb) = (&g.points[a], &g.points[b]);
            geom::orient(&o, pa, pb) == geom::Orientation::Cw
        });
        if clockwise && g.validate().is_ok() {
            return Ok(g);
        }
        h *= rat(16);
    }
    Err(Error::Construction(
        "star-lb: no valid projective parameter found".into(),
    ))
}

/// Directed graph with `v_j -> v_i` for `1 <= i - j <= 3` on nested
/// homothetic triangles: `v_{3t+s} = A_s / 2^t`.
pub fn gen_directed_lb(n: usize) -> Result<Pslg> {
    if n < 4 {
        return Err(Error::Precondition("directed-lb requires n >= 4".into()));
    }
    let corners = [(0, 2), (-2, -1), (2, -1)];
    let points = (0..n)
        .map(|i| {
            let (x, y) = corners[i % 3];
            let d = BigInt::one() << (i / 3);
            Point::new(
                BigRational::new(BigInt::from(x), d.clone()),
                BigRational::new(BigInt::from(y), d),
            )
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for gap in 1..=3 {
            if i + gap < n {
                edges.push((i, i + gap));
            }
        }
    }
    finish(Pslg::new(points, edges, true), "directed-lb")
}

fn fan_points(n: usize) -> Vec<Point> {
    let l = (n * n + 1) as i64;
    let mut pts = vec![Point::from_ints(0, 0)];
    for i in 1..n as i64 {
        let x = 2 * i - n as i64;
        pts.push(Point::from_ints(x, l - x * x));
    }
    pts
}

/// Apex `0` joined to a convex rim path `1..n-1` above it.
pub fn gen_fan(n: usize) -> Result<Pslg> {
    if n < 3 {
        return Err(Error::Precondition("fan requires n >= 3".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    edges.extend((1..n - 1).map(|i| (i, i + 1)));
    finish(Pslg::new(fan_points(n), edges, false), "fan")
}

/// Fan with every apex edge pointing up and rim edges alternating, so that
/// odd rim vertices are sources of the rim and even ones are sinks.
pub fn gen_directed_fan(n: usize) -> Result<Pslg> {
    if n < 4 {
        return Err(Error::Precondition("directed-fan requires n >= 4".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    for i in 1..n - 1 {
        edges.push(if i % 2 == 1 { (i, i + 1) } else { (i + 1, i) });
    }
    finish(Pslg::new(fan_points(n), edges, true), "directed-fan")
}

/// Two poles `0 = (0, H)` and `1 = (0, -H)` joined to each other and to every
/// vertex of the zigzag `z_j = (j, (-1)^j)`, `j = 1..n-2`.
pub fn gen_min_convex_zigzag(n: usize) -> Result<Pslg> {
    if n < 5 {
        return Err(Error::Precondition(
            "min-convex-zigzag requires n >= 5".into(),
        ));
    }
    let m = (n - 2) as i64;
    let h = 2 * m + 2;
    let mut points = vec![Point::from_ints(0, h), Point::from_ints(0, -h)];
    points.extend((1..=m).map(|j| Point::from_ints(j, if j % 2 == 0 { 1 } else { -1 })));
    let mut edges = vec![(0, 1)];
    edges.extend((2..n - 1).map(|i| (i, i + 1)));
    for z in 2..n {
        edges.push((0, z));
        edges.push((1, z));
    }
    finish(Pslg::new(points, edges, false), "min-convex-zigzag")
}

/// Vertex ids of the circle layers of [`gen_min_monpath`]; ids 0, 1, 2 are
/// `o`, `a` and `b`.
pub fn min_monpath_layers(l: u32) -> Vec<Vec<usize>> {
    (0..l)
        .map(|i| {
            let start = 3 + (1usize << i) - 1;
            (start..start + (1usize << i)).collect()
        })
        .collect()
}

const ANGLE_BITS: u32 = 40;

/// Rational point at distance `r` from the origin in the direction with
/// half-angle tangent `t`.
fn on_circle(t: &Rational, r: &Rational) -> Point {
    let one = Rational::one();
    let d = &one + t * t;
    Point::new(r * (&one - t * t) / &d, r * rat(2) * t / &d)
}

/// Dyadic approximation of `tan(theta / 2)` for
/// `theta = pi/4 + (2j - 1) pi / 2^(i+2)`.
fn layer_half_tangent(i: u32, j: u64) -> Rational {
    let theta = std::f64::consts::FRAC_PI_4
        + (2 * j - 1) as f64 * std::f64::consts::PI / f64::powi(2.0, i as i32 + 2);
    let scaled = ((theta / 2.0).tan() * f64::powi(2.0, ANGLE_BITS as i32)).round();
    BigRational::new(
        BigInt::from(scaled.to_i64().expect("finite")),
        BigInt::one() << ANGLE_BITS,
    )
}

/// Right triangle `o a b` with `2^i` points on the `i`-th circle,
/// stacked so that each new point sees its two angular neighbours among
/// earlier points at a sharp angle.
///
/// Circle radii are `D^-i` and the corners sit at `(-D, D)` and `(D, D)`;
/// `D` doubles until every check passes.
pub fn gen_min_monpath(l: u32) -> Result<Pslg> {
    if l == 0 || l > 12 {
        return Err(Error::Precondition(format!(
            "min-monpath level l = {l} must lie in 1..=12"
        )));
    }
    let mut d = 4i64;
    for _ in 0..24 {
        if let Some(g) = try_min_monpath(l, d)? {
            return Ok(g);
        }
        d = d
            .checked_mul(2)
            .ok_or_else(|| Error::Construction("min-monpath: scale overflow".into()))?;
    }
    Err(Error::Construction(
        "min-monpath: refinement budget exhausted".into(),
    ))
}

fn try_min_monpath(l: u32, d: i64) -> Result<Option<Pslg>> {
    let mut points = vec![
        Point::from_ints(0, 0),
        Point::from_ints(-d, d),
        Point::from_ints(d, d),
    ];
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    // earlier vertices in clockwise angular order: a first, b last
    let mut angular: Vec<usize> = vec![1, 2];
    let mut sharp: Vec<(usize, usize)> = Vec::new();
    let mut r = Rational::one();
    let inv = BigRational::new(BigInt::one(), BigInt::from(d));
    // one dyadic grid for every point keeps the common denominator small
    let grid = ANGLE_BITS + 24 + l * (64 - d.leading_zeros());
    let snap = |p: Point| {
        Point::new(
            interval::round_down(&p.x, grid),
            interval::round_down(&p.y, grid),
        )
    };
    for i in 0..l {
        let count = 1u64 << i;
        let mut next = Vec::with_capacity(angular.len() + count as usize);
        next.push(angular[0]);
        // points of layer i, counterclockwise index j from b towards a;
        // the clockwise slot between angular[s] and angular[s+1] holds j = count - s
        for s in 0..angular.len() - 1 {
            let j = count - s as u64;
            let v = points.len();
            points.push(snap(on_circle(&layer_half_tangent(i, j), &r)));
            let (left, right) = (angular[s], angular[s + 1]);
            edges.push((0, v));
            edges.push((v, left));
            edges.push((v, right));
            sharp.push((v, left));
            sharp.push((v, right));
            next.push(v);
            next.push(right);
        }
        angular = next;
        r *= &inv;
    }
    let g = Pslg::new(points, edges, false);
    let o = Point::from_ints(0, 0);
    // the clockwise angular order about o must match the construction order
    let order_ok = angular
        .windows(2)
        .all(|w| geom::orient(&o, &g.points[w[0]], &g.points[w[1]]) == geom::Orientation::Cw);
    if !order_ok {
        return Ok(None);
    }
    for &(v, older) in &sharp {
        let verdict = geom::angle_less_than_dyadic(&g.points[older], &g.points[v], &o, l + 1)?;
        if verdict != AngleVerdict::Less {
            return Ok(None);
        }
    }
    if g.validate().is_err() {
        return Ok(None);
    }
    match g.analyze_triangulation() {
        Ok(info) if info.is_edge_maximal => Ok(Some(g)),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{self, Count};

    #[test]
    fn monotone_lb_small() {
        let g = gen_monotone_lb(1).unwrap();
        assert_eq!(g.n(), 4);
        let mut e = g.edges.clone();
        e.sort();
        assert_eq!(e, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(gen_monotone_lb(3).unwrap().n(), 10);
        assert!(gen_gk(3, 9).is_err());
    }

    #[test]
    fn gk_edge_counts() {
        // G_0 is the path
        let g0 = gen_gk(3, 0).unwrap();
        assert_eq!(g0.m(), 9);
        assert_eq!(
            counting::count_maximal_monotone_in_direction(&g0, &geom::Vec2::from_ints(1, 0))
                .unwrap(),
            Count::from(1u32)
        );
        // level l graph has the full chord set: 2 chords per dyadic block on each side
        let g = gen_monotone_lb(4).unwrap();
        let n = g.n();
        let chords: usize = (1..=4)
            .map(|j| {
                (0..n)
                    .filter(|&i| {
                        let i1 = i + 1;
                        i1 + (1 << j) <= n
                            && ((i1 - 1) % (1 << j) == 0 || (i1 >= 2 && (i1 - 2) % (1 << j) == 0))
                    })
                    .count()
            })
            .sum();
        assert_eq!(g.m(), n - 1 + chords);
    }

    #[test]
    fn star_lb_small() {
        let g = gen_star_lb(1).unwrap();
        assert_eq!(g.n(), 12);
        let c = counting::count_star_at_center(&g, &star_lb_center()).unwrap();
        assert_eq!(c, Count::from(27u32));
    }

    #[test]
    fn directed_lb_small() {
        let g = gen_directed_lb(6).unwrap();
        assert_eq!(
            counting::count_directed_st_paths(&g, &[0], &[5]).unwrap(),
            Count::from(13u32)
        );
    }

    #[test]
    fn fans() {
        for n in 3..9 {
            let g = gen_fan(n).unwrap();
            assert!(
                g.analyze_triangulation().unwrap().is_edge_maximal,
                "n = {n}"
            );
            assert_eq!(g.adjacency()[0].len(), n - 1);
        }
        for n in 4..12 {
            let g = gen_directed_fan(n).unwrap();
            assert_eq!(
                counting::count_directed_paths_total(&g).unwrap(),
                Count::from(3 * n - 5)
            );
        }
    }

    #[test]
    fn zigzag_is_edge_maximal() {
        for n in 5..12 {
            let g = gen_min_convex_zigzag(n).unwrap();
            let info = g.analyze_triangulation().unwrap();
            assert!(info.is_edge_maximal, "n = {n}");
            assert_eq!(g.m(), 2 * n + info.interior_count - 3);
        }
    }

    #[test]
    fn min_monpath_small() {
        let g = gen_min_monpath(1).unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        assert_eq!(g.analyze_triangulation().unwrap().bounded_faces.len(), 3);
        let g = gen_min_monpath(3).unwrap();
        assert_eq!(g.n(), 10);
        let up = counting::orient_by_direction(&g, &geom::Vec2::from_ints(0, 1)).unwrap();
        let layers = min_monpath_layers(3);
        assert_eq!(
            counting::count_directed_st_paths(&up, &layers[2], &[1, 2]).unwrap(),
            Count::from(18u32)
        );
    }

    #[test]
    fn spec_round_trip() {
        for name in ConstructionName::ALL {
            assert_eq!(name.as_str().parse::<ConstructionName>().unwrap(), name);
        }
        let g = ConstructionSpec::new(ConstructionName::Fan)
            .with("n", 6)
            .build()
            .unwrap();
        assert_eq!(g.n(), 6);
        assert!(ConstructionSpec::new(ConstructionName::Fan)
            .build()
            .is_err());
    }
}
