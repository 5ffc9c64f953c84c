//! Exact counters for monotone paths, directed paths, star-shaped polygons
//! about a center and convex polygons.

use std::collections::{HashMap, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geom::{IVec, IntFrame, Orientation, Point, Vec2};
use crate::oracle;
use crate::pslg::Pslg;

pub type Count = BigUint;

/// An open arc of directions over which every edge has a fixed sign against
/// the direction, together with the critical direction closing it
/// counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionClass {
    pub representative: Vec2,
    pub boundary: Option<Vec2>,
}

fn int_dir(u: &Vec2) -> Result<IVec> {
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(u.to_integer_direction())
}

/// Edges oriented so that they point along `u`; perpendicular edges dropped.
/// Edge directions of `g` are ignored.
pub fn orient_by_direction(g: &Pslg, u: &Vec2) -> Result<Pslg> {
    let u = int_dir(u)?;
    Ok(g.with_edges(oriented_edges(g, &g.frame(), &u), true))
}

fn oriented_edges(g: &Pslg, f: &IntFrame, u: &IVec) -> Vec<(usize, usize)> {
    g.edges
        .iter()
        .filter_map(|&(a, b)| {
            let s = f.vec(a, b).dot(u);
            if s.is_positive() {
                Some((a, b))
            } else if s.is_negative() {
                Some((b, a))
            } else {
                None
            }
        })
        .collect()
}

/// Vertices sorted by projection onto `u`, then onto `u` rotated, then id.
fn projection_order(f: &IntFrame, u: &IVec) -> Vec<usize> {
    let up = u.perp();
    let keys: Vec<(BigInt, BigInt)> = f.pts.iter().map(|p| (p.dot(u), p.dot(&up))).collect();
    let mut order: Vec<usize> = (0..f.pts.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(a.cmp(&b)));
    order
}

fn in_lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); n];
    for &(a, b) in edges {
        inc[b].push(a);
    }
    inc
}

fn count_in_direction_int(g: &Pslg, f: &IntFrame, u: &IVec) -> Count {
    let edges = oriented_edges(g, f, u);
    let inc = in_lists(g.n(), &edges);
    let mut end = vec![Count::zero(); g.n()];
    let mut total = Count::zero();
    for v in projection_order(f, u) {
        let mut s = Count::zero();
        for &w in &inc[v] {
            s += &end[w] + 1u32;
        }
        total += &s;
        end[v] = s;
    }
    total
}

/// Paths with at least one edge whose every edge has positive dot product
/// with `u`.
pub fn count_monotone_paths_in_direction(g: &Pslg, u: &Vec2) -> Result<Count> {
    let u = int_dir(u)?;
    Ok(count_in_direction_int(g, &g.frame(), &u))
}

pub fn count_xmonotone(g: &Pslg) -> Count {
    count_in_direction_int(g, &g.frame(), &IVec::new(BigInt::one(), BigInt::zero()))
}

/// Monotone paths in direction `u` that can be extended at neither end.
pub fn count_maximal_monotone_in_direction(g: &Pslg, u: &Vec2) -> Result<Count> {
    let u = int_dir(u)?;
    let f = g.frame();
    let edges = oriented_edges(g, &f, &u);
    let n = g.n();
    let inc = in_lists(n, &edges);
    let mut outdeg = vec![0usize; n];
    for &(a, _) in &edges {
        outdeg[a] += 1;
    }
    let mut from_source = vec![Count::zero(); n];
    let mut total = Count::zero();
    for v in projection_order(&f, &u) {
        let mut s = if inc[v].is_empty() {
            Count::one()
        } else {
            Count::zero()
        };
        for &w in &inc[v] {
            s += &from_source[w];
        }
        if outdeg[v] == 0 && !inc[v].is_empty() {
            total += &s;
        }
        from_source[v] = s;
    }
    Ok(total)
}

fn normalized_normals(g: &Pslg, f: &IntFrame) -> Vec<IVec> {
    let mut normals: Vec<IVec> = Vec::with_capacity(2 * g.m());
    for &(a, b) in &g.edges {
        let nrm = f.vec(a, b).perp();
        normals.push(nrm.neg());
        normals.push(nrm);
    }
    normals.sort_by(|a, b| a.angle_cmp(b));
    normals.dedup_by(|a, b| a.angle_cmp(b) == std::cmp::Ordering::Equal);
    normals
}

fn classes_int(g: &Pslg, f: &IntFrame) -> Vec<(IVec, IVec)> {
    let normals = normalized_normals(g, f);
    let k = normals.len();
    (0..k)
        .map(|i| {
            let c0 = &normals[i];
            let c1 = &normals[(i + 1) % k];
            let rep = if k == 2 {
                c0.perp()
            } else {
                IVec::new(&c0.x + &c1.x, &c0.y + &c1.y)
            };
            (rep, c1.clone())
        })
        .collect()
}

/// Direction classes in counterclockwise order, split at every edge normal.
pub fn critical_direction_classes(g: &Pslg) -> Vec<DirectionClass> {
    classes_int(g, &g.frame())
        .into_iter()
        .map(|(rep, bnd)| DirectionClass {
            representative: rep.to_vec2(),
            boundary: Some(bnd.to_vec2()),
        })
        .collect()
}

/// Undirected paths monotone in at least one direction.
pub fn count_monotone_paths_all_directions(g: &Pslg) -> Count {
    count_monotone_paths_all_directions_with(g, Execution::auto())
}

/// Sums the per-class counts, subtracts the counts at the critical
/// directions between classes and halves: every monotone path is
/// monotone on an open arc of directions, which contains one more class than
/// critical directions, and is counted once per traversal orientation.
pub fn count_monotone_paths_all_directions_with(g: &Pslg, exec: Execution) -> Count {
    let f = g.frame();
    let classes = classes_int(g, &f);
    let per_class: Vec<(Count, Count)> = exec.map(&classes, |(rep, bnd)| {
        (
            count_in_direction_int(g, &f, rep),
            count_in_direction_int(g, &f, bnd),
        )
    });
    let mut plus = Count::zero();
    let mut minus = Count::zero();
    for (a, b) in per_class {
        plus += a;
        minus += b;
    }
    assert!(plus >= minus, "class sum below boundary sum");
    let diff = plus - minus;
    assert!(!diff.bit(0), "odd numerator in all-directions count");
    diff >> 1u32
}

/// Topological order by Kahn's algorithm, or a directed cycle.
pub fn topological_order(
    n: usize,
    edges: &[(usize, usize)],
) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for &(a, b) in edges {
        indeg[b] += 1;
        out[a].push(b);
    }
    let mut q: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = q.pop_front() {
        order.push(v);
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                q.push_back(w);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // every leftover vertex has a leftover predecessor; walk back to a repeat
    let inc = in_lists(n, edges);
    let mut v = (0..n).find(|&v| indeg[v] > 0).unwrap();
    let mut seen = HashMap::new();
    let mut walk = Vec::new();
    while !seen.contains_key(&v) {
        seen.insert(v, walk.len());
        walk.push(v);
        v = *inc[v].iter().find(|&&w| indeg[w] > 0).unwrap();
    }
    let mut cycle = walk[seen[&v]..].to_vec();
    cycle.reverse();
    Err(cycle)
}

fn require_directed(g: &Pslg) -> Result<()> {
    if g.directed {
        Ok(())
    } else {
        Err(Error::Precondition("a directed graph is required".into()))
    }
}

/// Directed paths with at least one edge from a vertex of `s` to a vertex of `t`.
pub fn count_directed_st_paths(g: &Pslg, s: &[usize], t: &[usize]) -> Result<Count> {
    require_directed(g)?;
    if s.is_empty() || t.is_empty() {
        return Err(Error::Precondition(
            "source and target sets must be nonempty".into(),
        ));
    }
    let n = g.n();
    if let Some(&v) = s.iter().chain(t).find(|&&v| v >= n) {
        return Err(Error::Precondition(format!("vertex {v} does not exist")));
    }
    let order = topological_order(n, &g.edges).map_err(Error::Cycle)?;
    let inc = in_lists(n, &g.edges);
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    let mut f = vec![Count::zero(); n];
    for v in order {
        let mut c = if in_s[v] { Count::one() } else { Count::zero() };
        for &w in &inc[v] {
            c += &f[w];
        }
        f[v] = c;
    }
    let mut t_sorted = t.to_vec();
    t_sorted.sort_unstable();
    t_sorted.dedup();
    Ok(t_sorted
        .into_iter()
        .map(|v| if in_s[v] { &f[v] - 1u32 } else { f[v].clone() })
        .sum())
}

/// Directed simple paths with at least one edge.
///
/// Acyclic graphs use dynamic programming; cyclic graphs fall back to
/// enumeration when `n <= limit`.
pub fn count_directed_paths_total(g: &Pslg) -> Result<Count> {
    count_directed_paths_total_with_limit(g, oracle::DEFAULT_LIMIT)
}

pub fn count_directed_paths_total_with_limit(g: &Pslg, limit: usize) -> Result<Count> {
    require_directed(g)?;
    let n = g.n();
    match topological_order(n, &g.edges) {
        Ok(order) => {
            let inc = in_lists(n, &g.edges);
            let mut end = vec![Count::zero(); n];
            let mut total = Count::zero();
            for v in order {
                let mut c = Count::zero();
                for &w in &inc[v] {
                    c += &end[w] + 1u32;
                }
                total += &c;
                end[v] = c;
            }
            Ok(total)
        }
        Err(cycle) => {
            if n > limit {
                return Err(Error::Cycle(cycle));
            }
            Ok(Count::from(
                oracle::enumerate_simple_paths_with_limit(g, limit)?.len(),
            ))
        }
    }
}

fn check_center(g: &Pslg, o: &Point) -> Result<IntFrame> {
    let mut pts = g.points.clone();
    pts.push(o.clone());
    let f = IntFrame::new(&pts);
    let c = g.n();
    if g.points.iter().any(|p| p == o) {
        return Err(Error::BadCenter);
    }
    if g.edges
        .iter()
        .any(|&(a, b)| f.orient(c, a, b) == Orientation::Collinear)
    {
        return Err(Error::BadCenter);
    }
    Ok(f)
}

/// Ray directions from the center that avoid every vertex: one bisector per
/// angular gap between consecutive vertex directions.
fn candidate_rays(f: &IntFrame, n: usize) -> Vec<IVec> {
    let mut dirs: Vec<IVec> = (0..n).map(|v| f.vec(n, v)).collect();
    if dirs.is_empty() {
        return vec![IVec::new(BigInt::one(), BigInt::zero())];
    }
    dirs.sort_by(|a, b| a.angle_cmp(b));
    dirs.dedup_by(|a, b| a.angle_cmp(b) == std::cmp::Ordering::Equal);
    let k = dirs.len();
    if k == 1 {
        return vec![dirs[0].neg()];
    }
    (0..k)
        .map(|i| {
            let d0 = &dirs[i];
            let d1 = &dirs[(i + 1) % k];
            let c = d0.cross(d1);
            let sum = IVec::new(&d0.x + &d1.x, &d0.y + &d1.y);
            if c.is_positive() {
                sum
            } else if c.is_negative() {
                sum.neg()
            } else {
                d0.perp()
            }
        })
        .collect()
}

fn star_count_with_ray(g: &Pslg, f: &IntFrame, ray: &IVec, exec: Execution) -> Count {
    let n = g.n();
    let c = n;
    let dir = |v: usize| f.vec(c, v);
    let mut crossing = Vec::new();
    let mut rest = Vec::new();
    for &(p, q) in &g.edges {
        let (a, b) = if f.orient(c, p, q) == Orientation::Cw {
            (p, q)
        } else {
            (q, p)
        };
        if dir(a).cross(ray).is_negative() && ray.cross(&dir(b)).is_negative() {
            crossing.push((a, b));
        } else {
            rest.push((a, b));
        }
    }
    let order = topological_order(n, &rest).expect("edges not crossing the ray form a DAG");
    let out = {
        let mut out = vec![Vec::new(); n];
        for &(a, b) in &rest {
            out[a].push(b);
        }
        out
    };
    exec.sum_map(&crossing, |&(a, b)| {
        let mut ways = vec![Count::zero(); n];
        ways[b] = Count::one();
        for &v in &order {
            if ways[v].is_zero() {
                continue;
            }
            let w = ways[v].clone();
            for &x in &out[v] {
                ways[x] += &w;
            }
        }
        std::mem::take(&mut ways[a])
    })
}

/// Simple cycles of `g` that are star-shaped with center `o`.
///
/// Edges are oriented clockwise about `o`; every directed cycle then winds
/// once around `o` and crosses a fixed ray exactly once, so the count is a
/// sum over ray-crossing edges `a -> b` of the paths from `b` back to `a`
/// that avoid the ray.
pub fn count_star_at_center(g: &Pslg, o: &Point) -> Result<Count> {
    count_star_at_center_with(g, o, Execution::auto())
}

pub fn count_star_at_center_with(g: &Pslg, o: &Point, exec: Execution) -> Result<Count> {
    let f = check_center(g, o)?;
    let rays = candidate_rays(&f, g.n());
    let total = star_count_with_ray(g, &f, &rays[0], exec);
    if cfg!(debug_assertions) && rays.len() > 1 {
        let other = star_count_with_ray(g, &f, &rays[rays.len() / 2 + rays.len() % 2], exec);
        debug_assert_eq!(total, other, "star count depends on the cutting ray");
    }
    Ok(total)
}

/// Star counts at `o` for every vertex-avoiding cutting ray candidate.
pub fn star_counts_all_rays(g: &Pslg, o: &Point) -> Result<Vec<Count>> {
    let f = check_center(g, o)?;
    Ok(candidate_rays(&f, g.n())
        .iter()
        .map(|r| star_count_with_ray(g, &f, r, Execution::Sequential))
        .collect())
}

/// Angle key on `(-pi/2, 3pi/2]`: half 0 for directions pointing right or
/// straight up, half 1 otherwise; ties broken by cross product.
fn convex_key_cmp(a: &IVec, b: &IVec) -> std::cmp::Ordering {
    let half = |v: &IVec| -> u8 {
        if v.x.is_positive() || (v.x.is_zero() && v.y.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        if c.is_positive() {
            std::cmp::Ordering::Less
        } else if c.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    })
}

fn convex_from(g: &Pslg, f: &IntFrame, rank: &[usize], b: usize) -> Count {
    let n = g.n();
    let mut darts: Vec<(usize, usize, IVec)> = Vec::new();
    for &(p, q) in &g.edges {
        if rank[p] < rank[b] || rank[q] < rank[b] {
            continue;
        }
        darts.push((p, q, f.vec(p, q)));
        darts.push((q, p, f.vec(q, p)));
    }
    darts.sort_by(|x, y| convex_key_cmp(&x.2, &y.2));
    // chains ending at each vertex: (incoming direction, count)
    let mut ending: Vec<Vec<(usize, Count)>> = vec![Vec::new(); n];
    let mut total = Count::zero();
    for (i, (p, q, d)) in darts.iter().enumerate() {
        let ways = if *p == b {
            Count::one()
        } else {
            let mut s = Count::zero();
            for (j, c) in &ending[*p] {
                if darts[*j].2.cross(d).is_positive() {
                    s += c;
                }
            }
            s
        };
        if ways.is_zero() {
            continue;
        }
        if *q == b {
            total += ways;
        } else {
            ending[*q].push((i, ways));
        }
    }
    total
}

/// Simple cycles bounding a strictly convex polygon.
pub fn count_convex_polygons(g: &Pslg) -> Count {
    count_convex_polygons_with(g, Execution::auto())
}

/// One dynamic program per choice of lowest vertex `b` (lexicographic):
/// convex chains leaving `b` have strictly increasing edge angles on
/// `(-pi/2, 3pi/2]`, each turn strictly left, and close back at `b`.
pub fn count_convex_polygons_with(g: &Pslg, exec: Execution) -> Count {
    let f = g.frame();
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| (&f.pts[i].x, &f.pts[i].y).cmp(&(&f.pts[j].x, &f.pts[j].y)));
    let mut rank = vec![0usize; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    exec.map_range(n, |b| convex_from(g, &f, &rank, b))
        .into_iter()
        .sum()
}

/// Interior edges of an edge-maximal graph whose two incident triangles form
/// a strictly convex quadrilateral.
pub fn count_convex_pairs(g: &Pslg) -> Result<Count> {
    let info = g.analyze_triangulation()?;
    if !info.is_edge_maximal {
        return Err(Error::NotEdgeMaximal);
    }
    let f = g.frame();
    let mut apex: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for face in &info.bounded_faces {
        debug_assert_eq!(face.len(), 3);
        for i in 0..3 {
            let (a, b, c) = (face[i], face[(i + 1) % 3], face[(i + 2) % 3]);
            apex.entry((a.min(b), a.max(b))).or_default().push(c);
        }
    }
    let mut count = 0u64;
    for (&(a, b), tops) in &apex {
        if let [c, d] = tops[..] {
            let oa = f.orient(c, d, a);
            let ob = f.orient(c, d, b);
            if oa != Orientation::Collinear && ob != Orientation::Collinear && oa != ob {
                count += 1;
            }
        }
    }
    Ok(Count::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratio;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn v(x: i64, y: i64) -> Vec2 {
        Vec2::from_ints(x, y)
    }

    fn generic_triangle() -> Pslg {
        Pslg::new(
            vec![p(0, 0), p(3, 1), p(1, 4)],
            vec![(0, 1), (1, 2), (2, 0)],
            false,
        )
    }

    fn square_diag() -> Pslg {
        Pslg::new(
            vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
            false,
        )
    }

    fn c(n: u64) -> Count {
        Count::from(n)
    }

    #[test]
    fn direction_examples() {
        assert_eq!(
            count_monotone_paths_in_direction(&generic_triangle(), &v(1, 0)).unwrap(),
            c(4)
        );
        let vertical = Pslg::new(vec![p(0, 0), p(0, 1)], vec![(0, 1)], false);
        assert_eq!(
            count_monotone_paths_in_direction(&vertical, &v(1, 0)).unwrap(),
            c(0)
        );
        assert!(count_monotone_paths_in_direction(&vertical, &v(0, 0)).is_err());
    }

    #[test]
    fn maximal_examples() {
        assert_eq!(
            count_maximal_monotone_in_direction(&generic_triangle(), &v(1, 0)).unwrap(),
            c(2)
        );
        let h = Pslg::new(vec![p(0, 0), p(1, 0)], vec![(0, 1)], false);
        assert_eq!(
            count_maximal_monotone_in_direction(&h, &v(1, 0)).unwrap(),
            c(1)
        );
    }

    #[test]
    fn class_examples() {
        let one = Pslg::new(vec![p(0, 0), p(1, 0)], vec![(0, 1)], false);
        assert_eq!(critical_direction_classes(&one).len(), 2);
        let two = Pslg::new(vec![p(0, 0), p(1, 0), p(0, 1)], vec![(0, 1), (0, 2)], false);
        assert_eq!(critical_direction_classes(&two).len(), 4);
        assert_eq!(critical_direction_classes(&generic_triangle()).len(), 6);
        let empty = Pslg::new(vec![p(0, 0)], vec![], false);
        assert!(critical_direction_classes(&empty).is_empty());
        assert_eq!(count_monotone_paths_all_directions(&empty), c(0));
    }

    #[test]
    fn class_representatives_are_generic() {
        let g = square_diag();
        for cl in critical_direction_classes(&g) {
            for &(a, b) in &g.edges {
                let e = g.points[a].to(&g.points[b]);
                assert!(!e.dot(&cl.representative).is_zero());
            }
        }
    }

    #[test]
    fn all_direction_examples() {
        let one = Pslg::new(vec![p(0, 0), p(1, 0)], vec![(0, 1)], false);
        assert_eq!(count_monotone_paths_all_directions(&one), c(1));
        assert_eq!(
            count_monotone_paths_all_directions(&generic_triangle()),
            c(6)
        );
        let g = square_diag();
        assert_eq!(
            count_monotone_paths_all_directions_with(&g, Execution::Sequential),
            count_monotone_paths_all_directions_with(&g, Execution::Parallel)
        );
    }

    #[test]
    fn directed_examples() {
        let chain = Pslg::new(
            vec![p(0, 0), p(1, 0), p(2, 1), p(3, 0)],
            vec![(0, 1), (1, 2), (2, 3)],
            true,
        );
        assert_eq!(count_directed_st_paths(&chain, &[0], &[2]).unwrap(), c(1));
        assert_eq!(count_directed_paths_total(&chain).unwrap(), c(6));
        let single = Pslg::new(vec![p(0, 0), p(1, 0)], vec![(0, 1)], true);
        assert_eq!(count_directed_paths_total(&single).unwrap(), c(1));
        // S and T overlapping: a lone vertex is not a path
        assert_eq!(
            count_directed_st_paths(&chain, &[0, 1], &[0, 1]).unwrap(),
            c(1)
        );
        assert!(count_directed_st_paths(&generic_triangle(), &[0], &[1]).is_err());
    }

    #[test]
    fn cycle_is_reported() {
        let cyc = Pslg::new(
            vec![p(0, 0), p(3, 1), p(1, 4)],
            vec![(0, 1), (1, 2), (2, 0)],
            true,
        );
        match count_directed_st_paths(&cyc, &[0], &[2]) {
            Err(Error::Cycle(c)) => {
                assert_eq!(c.len(), 3);
                for i in 0..3 {
                    assert!(cyc.has_edge(c[i], c[(i + 1) % 3]));
                }
            }
            other => panic!("{other:?}"),
        }
        // small cyclic graphs fall back to enumeration: 3 + 3 paths
        assert_eq!(count_directed_paths_total(&cyc).unwrap(), c(6));
        assert!(count_directed_paths_total_with_limit(&cyc, 2).is_err());
    }

    #[test]
    fn star_examples() {
        let o = Point::new(ratio(4, 3), ratio(5, 3));
        assert_eq!(count_star_at_center(&generic_triangle(), &o).unwrap(), c(1));
        let inner = Point::new(ratio(3, 2), ratio(1, 2));
        assert_eq!(count_star_at_center(&square_diag(), &inner).unwrap(), c(2));
        assert_eq!(
            count_star_at_center(&square_diag(), &p(0, 0)),
            Err(Error::BadCenter)
        );
        assert_eq!(
            count_star_at_center(&square_diag(), &p(1, 1)),
            Err(Error::BadCenter)
        );
        let outside = Point::new(ratio(7, 2), ratio(1, 3));
        assert_eq!(
            count_star_at_center(&square_diag(), &outside).unwrap(),
            c(0)
        );
        for r in star_counts_all_rays(&square_diag(), &inner).unwrap() {
            assert_eq!(r, c(2));
        }
    }

    #[test]
    fn convex_examples() {
        assert_eq!(count_convex_polygons(&generic_triangle()), c(1));
        assert_eq!(count_convex_polygons(&square_diag()), c(3));
        assert_eq!(count_convex_pairs(&square_diag()).unwrap(), c(1));
        assert_eq!(count_convex_pairs(&generic_triangle()).unwrap(), c(0));
        let sq = Pslg::new(
            vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)],
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
            false,
        );
        assert_eq!(count_convex_pairs(&sq), Err(Error::NotEdgeMaximal));
        // vertical first edge out of the lowest vertex
        let tall = Pslg::new(
            vec![p(0, 0), p(0, 2), p(1, 1)],
            vec![(0, 1), (1, 2), (2, 0)],
            false,
        );
        assert_eq!(count_convex_polygons(&tall), c(1));
    }

    #[test]
    fn scale_invariance() {
        let g = square_diag();
        for (dx, dy) in [(1, 2), (-3, 1), (2, -5)] {
            let a = count_monotone_paths_in_direction(&g, &v(dx, dy)).unwrap();
            let b = count_monotone_paths_in_direction(
                &g,
                &Vec2::new(ratio(dx * 7, 3), ratio(dy * 7, 3)),
            )
            .unwrap();
            assert_eq!(a, b);
        }
    }
}
