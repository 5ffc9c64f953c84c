//! Brute-force enumeration used as ground truth for the counters.
//!
//! Everything here is exponential; inputs above a vertex limit are refused.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::counting::{self, Count};
use crate::error::{Error, Result};
use crate::geom::{self, HalfPlane, IVec, IntFrame, Orientation, Point, SegmentRelation, Vec2};
use crate::pslg::{self, Pslg};

pub const DEFAULT_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub valid_direction: Option<Vec2>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub kernel_point: Option<Point>,
}

/// Brute-force counts with a configurable size guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            limit: DEFAULT_LIMIT,
        }
    }
}

fn undirected(g: &Pslg) -> Pslg {
    g.with_edges(g.edges.clone(), false)
}

/// True when the vectors fit in an open half-plane through the origin:
/// sorted by angle, some cyclic gap between consecutive directions exceeds
/// a straight angle.
pub fn fits_open_halfplane(vs: &[IVec]) -> bool {
    if vs.iter().any(IVec::is_zero) {
        return false;
    }
    let mut d = vs.to_vec();
    d.sort_by(|a, b| a.angle_cmp(b));
    d.dedup_by(|a, b| a.angle_cmp(b) == Ordering::Equal);
    if d.len() <= 1 {
        return true;
    }
    (0..d.len()).any(|i| d[i].cross(&d[(i + 1) % d.len()]).is_negative())
}

fn ccw_cycle(f: &IntFrame, cycle: &[usize]) -> Vec<usize> {
    let mut s = num_bigint::BigInt::zero();
    for i in 0..cycle.len() {
        let p = &f.pts[cycle[i]];
        let q = &f.pts[cycle[(i + 1) % cycle.len()]];
        s += &p.x * &q.y - &q.x * &p.y;
    }
    let mut c = cycle.to_vec();
    if s.is_negative() {
        c.reverse();
    }
    c
}

/// A direction in which every traversal edge of the path points forward.
pub fn is_monotone(path: &PathWitness, g: &Pslg) -> Option<Vec2> {
    let hs: Vec<HalfPlane> = path
        .vertices
        .windows(2)
        .map(|w| {
            let e = g.points[w[0]].to(&g.points[w[1]]);
            HalfPlane::new(e.dx, e.dy, num_rational::BigRational::zero()).ok()
        })
        .collect::<Option<_>>()?;
    if hs.is_empty() {
        return None;
    }
    geom::halfplane_intersection_witness(&hs).map(|p| Vec2::new(p.x, p.y))
}

/// A point strictly inside the polygon from which the whole boundary is visible.
pub fn is_star_shaped(cycle: &CycleWitness, g: &Pslg) -> Option<Point> {
    let c = ccw_cycle(&g.frame(), &cycle.vertices);
    let hs: Vec<HalfPlane> = (0..c.len())
        .map(|i| HalfPlane::left_of(&g.points[c[i]], &g.points[c[(i + 1) % c.len()]]).ok())
        .collect::<Option<_>>()?;
    geom::halfplane_intersection_witness(&hs)
}

/// All turns along the cycle have the same nonzero orientation.
pub fn is_convex(cycle: &CycleWitness, g: &Pslg) -> bool {
    let v = &cycle.vertices;
    let k = v.len();
    if k < 3 {
        return false;
    }
    let f = g.frame();
    let first = f.orient(v[0], v[1], v[2 % k]);
    first != Orientation::Collinear
        && (0..k).all(|i| f.orient(v[i], v[(i + 1) % k], v[(i + 2) % k]) == first)
}

impl Oracle {
    pub fn new(limit: usize) -> Self {
        Oracle { limit }
    }

    fn guard(&self, g: &Pslg) -> Result<()> {
        if g.n() > self.limit {
            Err(Error::LimitExceeded {
                n: g.n(),
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// Visits every simple path with at least one edge once: undirected
    /// paths with the smaller endpoint first, directed paths along edges.
    /// `prune` sees each prefix; returning false skips its extensions.
    pub fn visit_paths<P, F>(&self, g: &Pslg, mut prune: P, mut visit: F) -> Result<()>
    where
        P: FnMut(&[usize]) -> bool,
        F: FnMut(&[usize]),
    {
        self.guard(g)?;
        let adj = g.out_adjacency();
        let mut on = vec![false; g.n()];
        let mut path = Vec::with_capacity(g.n());
        #[allow(clippy::too_many_arguments)]
        fn dfs<P: FnMut(&[usize]) -> bool, F: FnMut(&[usize])>(
            adj: &[Vec<usize>],
            directed: bool,
            on: &mut [bool],
            path: &mut Vec<usize>,
            prune: &mut P,
            visit: &mut F,
        ) {
            let v = *path.last().unwrap();
            for &w in &adj[v] {
                if on[w] {
                    continue;
                }
                path.push(w);
                if prune(path) {
                    if directed || path[0] < w {
                        visit(path);
                    }
                    on[w] = true;
                    dfs(adj, directed, on, path, prune, visit);
                    on[w] = false;
                }
                path.pop();
            }
        }
        for s in 0..g.n() {
            path.clear();
            path.push(s);
            on[s] = true;
            dfs(&adj, g.directed, &mut on, &mut path, &mut prune, &mut visit);
            on[s] = false;
        }
        Ok(())
    }

    pub fn enumerate_simple_paths(&self, g: &Pslg) -> Result<Vec<PathWitness>> {
        let mut out = Vec::new();
        self.visit_paths(
            g,
            |_| true,
            |p| {
                out.push(PathWitness {
                    vertices: p.to_vec(),
                    valid_direction: None,
                })
            },
        )?;
        Ok(out)
    }

    /// Visits every simple cycle once: starting at its smallest vertex and,
    /// for undirected graphs, with the smaller neighbour of that vertex second.
    pub fn visit_cycles<F: FnMut(&[usize])>(&self, g: &Pslg, mut visit: F) -> Result<()> {
        self.guard(g)?;
        let adj = g.out_adjacency();
        let n = g.n();
        fn dfs<F: FnMut(&[usize])>(
            adj: &[Vec<usize>],
            directed: bool,
            on: &mut [bool],
            path: &mut Vec<usize>,
            visit: &mut F,
        ) {
            let s = path[0];
            let v = *path.last().unwrap();
            for &w in &adj[v] {
                if w == s {
                    let ok = if directed {
                        path.len() >= 2
                    } else {
                        path.len() >= 3 && path[1] < v
                    };
                    if ok {
                        visit(path);
                    }
                    continue;
                }
                if w < s || on[w] {
                    continue;
                }
                on[w] = true;
                path.push(w);
                dfs(adj, directed, on, path, visit);
                path.pop();
                on[w] = false;
            }
        }
        let mut on = vec![false; n];
        for s in 0..n {
            let mut path = vec![s];
            on[s] = true;
            dfs(&adj, g.directed, &mut on, &mut path, &mut visit);
            on[s] = false;
        }
        Ok(())
    }

    pub fn enumerate_simple_cycles(&self, g: &Pslg) -> Result<Vec<CycleWitness>> {
        let mut out = Vec::new();
        self.visit_cycles(g, |c| {
            out.push(CycleWitness {
                vertices: c.to_vec(),
                kernel_point: None,
            })
        })?;
        Ok(out)
    }

    /// Undirected paths monotone in direction `u` (either traversal).
    pub fn monotone_in_direction(&self, g: &Pslg, u: &Vec2) -> Result<Count> {
        if u.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = undirected(g);
        let mut c = 0u64;
        self.visit_paths(
            &g,
            |_| true,
            |p| {
                let signs: Vec<i32> = p
                    .windows(2)
                    .map(|w| geom::dot_sign(&g.points[w[0]].to(&g.points[w[1]]), u))
                    .collect();
                if signs.iter().all(|&s| s > 0) || signs.iter().all(|&s| s < 0) {
                    c += 1;
                }
            },
        )?;
        Ok(Count::from(c))
    }

    /// Monotone paths in direction `u` that extend at neither end.
    pub fn maximal_monotone_in_direction(&self, g: &Pslg, u: &Vec2) -> Result<Count> {
        Ok(Count::from(self.maximal_monotone_paths(g, u)?.len()))
    }

    /// Maximal `u`-monotone paths, listed in traversal order.
    pub fn maximal_monotone_paths(&self, g: &Pslg, u: &Vec2) -> Result<Vec<Vec<usize>>> {
        if u.is_zero() {
            return Err(Error::ZeroVector);
        }
        let dg = counting::orient_by_direction(g, u)?;
        let n = dg.n();
        let mut has_in = vec![false; n];
        let mut has_out = vec![false; n];
        for &(a, b) in &dg.edges {
            has_out[a] = true;
            has_in[b] = true;
        }
        let mut out = Vec::new();
        self.visit_paths(
            &dg,
            |_| true,
            |p| {
                if !has_in[p[0]] && !has_out[*p.last().unwrap()] {
                    out.push(p.to_vec());
                }
            },
        )?;
        Ok(out)
    }

    /// Undirected paths monotone in some direction.
    pub fn monotone_all_directions(&self, g: &Pslg) -> Result<Count> {
        let g = undirected(g);
        let f = g.frame();
        let mut c = 0u64;
        // a path that is not monotone has no monotone extension
        self.visit_paths(
            &g,
            |p| fits_open_halfplane(&p.windows(2).map(|w| f.vec(w[0], w[1])).collect::<Vec<_>>()),
            |_| c += 1,
        )?;
        Ok(Count::from(c))
    }

    pub fn monotone_paths_all_directions(&self, g: &Pslg) -> Result<Vec<PathWitness>> {
        let g = undirected(g);
        let mut out = Vec::new();
        self.visit_paths(
            &g,
            |_| true,
            |p| {
                let mut w = PathWitness {
                    vertices: p.to_vec(),
                    valid_direction: None,
                };
                if let Some(u) = is_monotone(&w, &g) {
                    w.valid_direction = Some(u);
                    out.push(w);
                }
            },
        )?;
        Ok(out)
    }

    /// Cycles whose open kernel contains `o`.
    pub fn star_at_center(&self, g: &Pslg, o: &Point) -> Result<Count> {
        let g = undirected(g);
        let mut pts = g.points.clone();
        pts.push(o.clone());
        let f = IntFrame::new(&pts);
        let c = g.n();
        let mut count = 0u64;
        self.visit_cycles(&g, |cyc| {
            let cyc = ccw_cycle(&f, cyc);
            let k = cyc.len();
            if (0..k).all(|i| f.orient(cyc[i], cyc[(i + 1) % k], c) == Orientation::Ccw) {
                count += 1;
            }
        })?;
        Ok(Count::from(count))
    }

    /// Cycles with a nonempty open kernel.
    pub fn count_star_total(&self, g: &Pslg) -> Result<Count> {
        let g = undirected(g);
        let mut count = 0u64;
        self.visit_cycles(&g, |cyc| {
            let w = CycleWitness {
                vertices: cyc.to_vec(),
                kernel_point: None,
            };
            if is_star_shaped(&w, &g).is_some() {
                count += 1;
            }
        })?;
        Ok(Count::from(count))
    }

    pub fn convex_polygons(&self, g: &Pslg) -> Result<Count> {
        let g = undirected(g);
        let f = g.frame();
        let mut count = 0u64;
        self.visit_cycles(&g, |v| {
            let k = v.len();
            let first = f.orient(v[0], v[1], v[2]);
            if first != Orientation::Collinear
                && (0..k).all(|i| f.orient(v[i], v[(i + 1) % k], v[(i + 2) % k]) == first)
            {
                count += 1;
            }
        })?;
        Ok(Count::from(count))
    }

    /// Convex 4-cycles with one diagonal present and no vertex inside; in an
    /// edge-maximal graph these are exactly the convex unions of two
    /// adjacent triangles.
    pub fn convex_pairs(&self, g: &Pslg) -> Result<Count> {
        let g = undirected(g);
        let f = g.frame();
        let mut count = 0u64;
        self.visit_cycles(&g, |v| {
            if v.len() != 4 {
                return;
            }
            let turn = f.orient(v[0], v[1], v[2]);
            let convex = turn != Orientation::Collinear
                && (0..4).all(|i| f.orient(v[i], v[(i + 1) % 4], v[(i + 2) % 4]) == turn);
            if !convex || !(g.has_edge(v[0], v[2]) || g.has_edge(v[1], v[3])) {
                return;
            }
            let empty = (0..g.n()).all(|w| {
                v.contains(&w) || !(0..4).all(|i| f.orient(v[i], v[(i + 1) % 4], w) == turn)
            });
            if empty {
                count += 1;
            }
        })?;
        Ok(Count::from(count))
    }

    /// Directed simple paths with at least one edge.
    pub fn directed_total(&self, g: &Pslg) -> Result<Count> {
        if !g.directed {
            return Err(Error::Precondition("a directed graph is required".into()));
        }
        let mut c = 0u64;
        self.visit_paths(g, |_| true, |_| c += 1)?;
        Ok(Count::from(c))
    }

    /// Directed paths from `s` to `t` with at least one edge.
    pub fn directed_st(&self, g: &Pslg, s: &[usize], t: &[usize]) -> Result<Count> {
        let mut c = 0u64;
        self.visit_paths(
            g,
            |_| true,
            |p| {
                if s.contains(&p[0]) && t.contains(p.last().unwrap()) {
                    c += 1;
                }
            },
        )?;
        Ok(Count::from(c))
    }

    /// Checks that every maximal monotone path ends on the hull boundary,
    /// for a representative and the closing critical direction of every
    /// direction class. Returns a violating path if one exists.
    pub fn check_maximal_endpoints_on_hull(&self, g: &Pslg) -> Result<Option<PathWitness>> {
        self.guard(g)?;
        let g = undirected(g);
        let info = g.analyze_triangulation()?;
        if !info.is_edge_maximal {
            return Err(Error::NotEdgeMaximal);
        }
        let f = g.frame();
        let (hull, _) = pslg::convex_hull(&f)?;
        let on_boundary: Vec<bool> = (0..g.n())
            .map(|v| {
                (0..hull.len()).any(|i| {
                    v == hull[i] || f.in_open_segment(v, hull[i], hull[(i + 1) % hull.len()])
                })
            })
            .collect();
        for class in counting::critical_direction_classes(&g) {
            let dirs = std::iter::once(class.representative).chain(class.boundary);
            for u in dirs {
                for p in self.maximal_monotone_paths(&g, &u)? {
                    if !on_boundary[p[0]] || !on_boundary[*p.last().unwrap()] {
                        return Ok(Some(PathWitness {
                            vertices: p,
                            valid_direction: Some(u),
                        }));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Edge-maximality straight from the definition: every missing segment is
/// blocked by an edge or passes through a vertex.
pub fn is_edge_maximal_bruteforce(g: &Pslg) -> bool {
    let f = g.frame();
    let n = g.n();
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(i, j) || g.has_edge(j, i) {
                continue;
            }
            let through_vertex = (0..n).any(|v| v != i && v != j && f.in_open_segment(v, i, j));
            let blocked = through_vertex
                || g.edges.iter().any(|&e| {
                    matches!(
                        f.segment_relation((i, j), e),
                        SegmentRelation::Crossing
                            | SegmentRelation::Overlapping
                            | SegmentRelation::Touching
                    )
                });
            if !blocked {
                return false;
            }
        }
    }
    true
}

pub fn enumerate_simple_paths(g: &Pslg) -> Result<Vec<PathWitness>> {
    Oracle::default().enumerate_simple_paths(g)
}

pub fn enumerate_simple_paths_with_limit(g: &Pslg, limit: usize) -> Result<Vec<PathWitness>> {
    Oracle::new(limit).enumerate_simple_paths(g)
}

pub fn enumerate_simple_cycles(g: &Pslg) -> Result<Vec<CycleWitness>> {
    Oracle::default().enumerate_simple_cycles(g)
}

pub fn count_star_total(g: &Pslg) -> Result<Count> {
    Oracle::default().count_star_total(g)
}

pub fn check_maximal_endpoints_on_hull(g: &Pslg) -> Result<Option<PathWitness>> {
    Oracle::default().check_maximal_endpoints_on_hull(g)
}
