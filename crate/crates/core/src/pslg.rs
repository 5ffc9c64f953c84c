//! Plane straight-line graphs: data model, validation, triangulation
//! structure and the JSON file format.

use std::collections::HashSet;
use std::path::Path;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::geom::{IVec, IntFrame, Orientation, Point, SegmentRelation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pslg {
    pub points: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
    pub directed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationInfo {
    /// Strict convex hull corners in counterclockwise order.
    pub hull: Vec<usize>,
    /// Vertices on the hull boundary, including those in the relative
    /// interior of a hull edge.
    pub boundary_count: usize,
    /// Vertices strictly inside the hull.
    pub interior_count: usize,
    /// Bounded faces as counterclockwise vertex cycles.
    pub bounded_faces: Vec<Vec<usize>>,
    pub is_edge_maximal: bool,
}

impl Pslg {
    pub fn new(points: Vec<Point>, edges: Vec<(usize, usize)>, directed: bool) -> Self {
        Pslg {
            points,
            edges,
            directed,
        }
    }

    /// Builds and validates.
    pub fn checked(points: Vec<Point>, edges: Vec<(usize, usize)>, directed: bool) -> Result<Self> {
        let g = Pslg::new(points, edges, directed);
        g.validate()?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn frame(&self) -> IntFrame {
        IntFrame::new(&self.points)
    }

    /// Same embedding with another edge list.
    pub fn with_edges(&self, edges: Vec<(usize, usize)>, directed: bool) -> Pslg {
        Pslg::new(self.points.clone(), edges, directed)
    }

    /// Neighbour lists ignoring edge direction.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Out-neighbour lists (for undirected graphs, both directions).
    pub fn out_adjacency(&self) -> Vec<Vec<usize>> {
        if !self.directed {
            return self.adjacency();
        }
        let mut adj = vec![Vec::new(); self.n()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges
            .iter()
            .any(|&(p, q)| (p, q) == (a, b) || (!self.directed && (q, p) == (a, b)))
    }

    fn check_structure(&self) -> Result<()> {
        let n = self.n();
        let mut seen = std::collections::HashMap::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(Violation::EdgeOutOfRange { edge: e, vertex: v }.into());
                }
            }
            if a == b {
                return Err(Violation::SelfLoop { edge: e }.into());
            }
            let key = if self.directed {
                (a, b)
            } else {
                (a.min(b), a.max(b))
            };
            if let Some(&first) = seen.get(&key) {
                return Err(Violation::DuplicateEdge { first, second: e }.into());
            }
            seen.insert(key, e);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| self.points[i].cmp(&self.points[j]));
        for w in order.windows(2) {
            if self.points[w[0]] == self.points[w[1]] {
                let (first, second) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Violation::DuplicatePoint { first, second }.into());
            }
        }
        Ok(())
    }

    /// Checks every graph invariant, including pairwise segment relations.
    ///
    /// Segment pairs are only tested when their x-ranges overlap, which keeps
    /// the long-range constructions cheap to validate.
    pub fn validate(&self) -> Result<()> {
        self.check_structure()?;
        let f = self.frame();
        let xs: Vec<_> = f.pts.iter().map(|p| p.x.clone()).collect();
        let range = |&(a, b): &(usize, usize)| {
            if xs[a] <= xs[b] {
                (a, b)
            } else {
                (b, a)
            }
        };
        // vertex in the relative interior of an edge
        let mut by_x: Vec<usize> = (0..self.n()).collect();
        by_x.sort_by(|&i, &j| xs[i].cmp(&xs[j]));
        for (e, edge) in self.edges.iter().enumerate() {
            let (l, r) = range(edge);
            let start = by_x.partition_point(|&v| xs[v] < xs[l]);
            for &v in by_x[start..].iter().take_while(|&&v| xs[v] <= xs[r]) {
                if v != edge.0 && v != edge.1 && f.in_open_segment(v, edge.0, edge.1) {
                    return Err(Violation::VertexOnEdge { vertex: v, edge: e }.into());
                }
            }
        }
        // edge pairs with overlapping x-ranges
        let mut order: Vec<usize> = (0..self.m()).collect();
        order.sort_by(|&i, &j| xs[range(&self.edges[i]).0].cmp(&xs[range(&self.edges[j]).0]));
        let mut conflicts = Vec::new();
        for (pos, &e1) in order.iter().enumerate() {
            let r1 = &xs[range(&self.edges[e1]).1];
            for &e2 in &order[pos + 1..] {
                if &xs[range(&self.edges[e2]).0] > r1 {
                    break;
                }
                let rel = f.segment_relation(self.edges[e1], self.edges[e2]);
                if matches!(
                    rel,
                    SegmentRelation::Crossing
                        | SegmentRelation::Overlapping
                        | SegmentRelation::Touching
                ) {
                    conflicts.push((e1.min(e2), e1.max(e2), rel));
                }
            }
        }
        if let Some(&(first, second, relation)) = conflicts.iter().min_by_key(|c| (c.0, c.1)) {
            return Err(Violation::SegmentConflict {
                first,
                second,
                relation,
            }
            .into());
        }
        Ok(())
    }

    /// Hull corners, boundary vertex count, faces and edge-maximality.
    ///
    /// A plane straight-line graph on `n` points with `h` points on the hull
    /// boundary is edge-maximal exactly when it has `3n - 3 - h` edges, since
    /// every such graph extends to a triangulation of its point set.
    pub fn analyze_triangulation(&self) -> Result<TriangulationInfo> {
        self.validate()?;
        let n = self.n();
        if n < 3 {
            return Err(Error::Precondition(
                "at least three vertices are required".into(),
            ));
        }
        let f = self.frame();
        let (hull, boundary_count) = convex_hull(&f)?;
        let faces = self.faces(&f);
        let bounded_faces = faces
            .into_iter()
            .filter(|c| face_area2(&f, c).is_positive())
            .collect();
        Ok(TriangulationInfo {
            hull,
            boundary_count,
            interior_count: n - boundary_count,
            bounded_faces,
            is_edge_maximal: self.m() == 3 * n - 3 - boundary_count,
        })
    }

    pub fn is_edge_maximal(&self) -> Result<bool> {
        Ok(self.analyze_triangulation()?.is_edge_maximal)
    }

    /// Neighbours of every vertex in counterclockwise angular order.
    pub fn rotation_system(&self, f: &IntFrame) -> Vec<Vec<usize>> {
        let mut adj = self.adjacency();
        for (v, nb) in adj.iter_mut().enumerate() {
            let dirs: Vec<(usize, IVec)> = nb.iter().map(|&w| (w, f.vec(v, w))).collect();
            let mut dirs = dirs;
            dirs.sort_by(|a, b| a.1.angle_cmp(&b.1));
            *nb = dirs.into_iter().map(|(w, _)| w).collect();
        }
        adj
    }

    /// All face boundary walks; each half-edge is used exactly once and the
    /// face lies to the left of every half-edge of its walk.
    pub fn faces(&self, f: &IntFrame) -> Vec<Vec<usize>> {
        let rot = self.rotation_system(f);
        let pos: Vec<std::collections::HashMap<usize, usize>> = rot
            .iter()
            .map(|nb| nb.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        let mut used: HashSet<(usize, usize)> = HashSet::new();
        let mut faces = Vec::new();
        for u in 0..self.n() {
            for &v in &rot[u] {
                if used.contains(&(u, v)) {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (u, v);
                while used.insert((a, b)) {
                    walk.push(a);
                    let d = rot[b].len();
                    let i = pos[b][&a];
                    let c = rot[b][(i + d - 1) % d];
                    a = b;
                    b = c;
                }
                faces.push(walk);
            }
        }
        faces
    }

    pub fn to_json(&self) -> String {
        let file = PslgFile {
            n: self.n(),
            points: self.points.clone(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            directed: self.directed,
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    /// Parses and validates.
    pub fn from_json(s: &str) -> Result<Self> {
        let file: PslgFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if file.n != file.points.len() {
            return Err(Error::Parse(format!(
                "n = {} but {} points are listed",
                file.n,
                file.points.len()
            )));
        }
        let g = Pslg::new(
            file.points,
            file.edges.into_iter().map(|[a, b]| (a, b)).collect(),
            file.directed,
        );
        g.validate()?;
        Ok(g)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
        Pslg::from_json(&s)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n").map_err(|e| Error::Io(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PslgFile {
    n: usize,
    points: Vec<Point>,
    edges: Vec<[usize; 2]>,
    directed: bool,
}

fn face_area2(f: &IntFrame, cycle: &[usize]) -> num_bigint::BigInt {
    let mut s = num_bigint::BigInt::zero();
    for i in 0..cycle.len() {
        let p = &f.pts[cycle[i]];
        let q = &f.pts[cycle[(i + 1) % cycle.len()]];
        s += &p.x * &q.y - &q.x * &p.y;
    }
    s
}

/// Strict hull corners (counterclockwise, starting at the lexicographically
/// smallest point) and the number of points on the hull boundary.
pub fn convex_hull(f: &IntFrame) -> Result<(Vec<usize>, usize)> {
    let n = f.pts.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| (&f.pts[i].x, &f.pts[i].y).cmp(&(&f.pts[j].x, &f.pts[j].y)));
    let build = |iter: &mut dyn Iterator<Item = usize>| {
        let mut h: Vec<usize> = Vec::new();
        for p in iter {
            while h.len() >= 2 && f.orient(h[h.len() - 2], h[h.len() - 1], p) != Orientation::Ccw {
                h.pop();
            }
            h.push(p);
        }
        h
    };
    let mut lower = build(&mut idx.iter().copied());
    let mut upper = build(&mut idx.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let hull = lower;
    if hull.len() < 3 {
        return Err(Error::Collinear);
    }
    let mut boundary = 0;
    for v in 0..n {
        let on = (0..hull.len()).any(|i| {
            let a = hull[i];
            let b = hull[(i + 1) % hull.len()];
            v == a || f.in_open_segment(v, a, b)
        });
        if on {
            boundary += 1;
        }
    }
    Ok((hull, boundary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratio;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn triangle() -> Pslg {
        Pslg::new(
            vec![p(0, 0), p(2, 0), p(1, 2)],
            vec![(0, 1), (1, 2), (2, 0)],
            false,
        )
    }

    fn square(diag: bool) -> Pslg {
        let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        if diag {
            e.push((0, 2));
        }
        Pslg::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)], e, false)
    }

    #[test]
    fn validate_examples() {
        assert!(triangle().validate().is_ok());
        let cross = Pslg::new(
            vec![p(0, 0), p(2, 2), p(0, 2), p(2, 0)],
            vec![(0, 1), (2, 3)],
            false,
        );
        assert!(matches!(
            cross.validate(),
            Err(Error::Invalid(Violation::SegmentConflict {
                relation: SegmentRelation::Crossing,
                ..
            }))
        ));
        let dup = Pslg::new(vec![p(0, 0), p(1, 0), p(0, 0)], vec![(0, 1)], false);
        assert!(matches!(
            dup.validate(),
            Err(Error::Invalid(Violation::DuplicatePoint { .. }))
        ));
        let touch = Pslg::new(
            vec![p(0, 0), p(2, 0), p(1, 0), p(1, 1)],
            vec![(0, 1), (2, 3)],
            false,
        );
        assert!(touch.validate().is_err());
        let on_edge = Pslg::new(vec![p(0, 0), p(2, 0), p(1, 0)], vec![(0, 1)], false);
        assert!(matches!(
            on_edge.validate(),
            Err(Error::Invalid(Violation::VertexOnEdge {
                vertex: 2,
                edge: 0
            }))
        ));
        let dup_edge = Pslg::new(vec![p(0, 0), p(2, 0)], vec![(0, 1), (1, 0)], false);
        assert!(matches!(
            dup_edge.validate(),
            Err(Error::Invalid(Violation::DuplicateEdge { .. }))
        ));
        let anti = Pslg::new(vec![p(0, 0), p(2, 0)], vec![(0, 1), (1, 0)], true);
        assert!(anti.validate().is_err());
    }

    #[test]
    fn triangulation_examples() {
        let t = triangle().analyze_triangulation().unwrap();
        assert_eq!(
            (t.hull.len(), t.interior_count, t.bounded_faces.len()),
            (3, 0, 1)
        );
        assert!(t.is_edge_maximal);
        let s = square(true).analyze_triangulation().unwrap();
        assert_eq!(
            (s.hull.len(), s.interior_count, s.bounded_faces.len()),
            (4, 0, 2)
        );
        assert!(s.is_edge_maximal);
        assert_eq!(square(true).m(), 2 * 4 - 3);
        assert!(
            !square(false)
                .analyze_triangulation()
                .unwrap()
                .is_edge_maximal
        );
        let line = Pslg::new(vec![p(0, 0), p(1, 0), p(2, 0)], vec![(0, 1), (1, 2)], false);
        assert_eq!(line.analyze_triangulation(), Err(Error::Collinear));
    }

    #[test]
    fn collinear_boundary_points_are_not_interior() {
        // (1,0) lies on the bottom hull edge
        let g = Pslg::new(
            vec![p(0, 0), p(1, 0), p(2, 0), p(1, 2)],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)],
            false,
        );
        let t = g.analyze_triangulation().unwrap();
        assert_eq!(t.hull.len(), 3);
        assert_eq!((t.boundary_count, t.interior_count), (4, 0));
        assert!(t.is_edge_maximal);
        assert_eq!(t.bounded_faces.len(), 2);
    }

    #[test]
    fn face_degrees_sum_to_twice_edges() {
        let g = Pslg::new(
            vec![p(0, 0), p(4, 0), p(2, 3), p(2, 1)],
            vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
            false,
        );
        let f = g.frame();
        let faces = g.faces(&f);
        assert_eq!(faces.iter().map(Vec::len).sum::<usize>(), 2 * g.m());
        let t = g.analyze_triangulation().unwrap();
        assert_eq!(t.bounded_faces.len(), 3);
        assert_eq!(t.interior_count, 1);
        assert!(t.is_edge_maximal);
    }

    #[test]
    fn json_round_trip() {
        let mut g = triangle();
        g.points[2] = Point::new(ratio(1, 3), ratio(7, 2));
        let s = g.to_json();
        assert_eq!(Pslg::from_json(&s).unwrap(), g);
        let dir = std::env::temp_dir().join(format!("planecount-rt-{}.json", std::process::id()));
        g.write(&dir).unwrap();
        assert_eq!(Pslg::read(&dir).unwrap(), g);
        std::fs::remove_file(dir).ok();
    }

    #[test]
    fn json_errors_and_canonicalization() {
        let self_loop =
            r#"{"n":2,"points":[["0","0"],["1","0"]],"edges":[[0,0]],"directed":false}"#;
        assert!(matches!(
            Pslg::from_json(self_loop),
            Err(Error::Invalid(Violation::SelfLoop { edge: 0 }))
        ));
        let reducible =
            r#"{"n":2,"points":[["2/4","0"],["1","0"]],"edges":[[0,1]],"directed":false}"#;
        let g = Pslg::from_json(reducible).unwrap();
        assert_eq!(g.points[0].x, ratio(1, 2));
        assert!(g.to_json().contains("\"1/2\""));
        let out = r#"{"n":2,"points":[["0","0"],["1","0"]],"edges":[[0,5]],"directed":false}"#;
        assert!(matches!(
            Pslg::from_json(out),
            Err(Error::Invalid(Violation::EdgeOutOfRange { .. }))
        ));
        let float = r#"{"n":1,"points":[[0.5,"0"]],"edges":[],"directed":false}"#;
        assert!(matches!(Pslg::from_json(float), Err(Error::Parse(_))));
        let zero_den = r#"{"n":1,"points":[["1/0","0"]],"edges":[],"directed":false}"#;
        assert!(Pslg::from_json(zero_den).is_err());
        let count = r#"{"n":3,"points":[["1","0"]],"edges":[],"directed":false}"#;
        assert!(Pslg::from_json(count).is_err());
    }

    #[test]
    fn writer_key_order() {
        let s = triangle().to_json();
        let pos = |k: &str| s.find(k).unwrap();
        assert!(pos("\"n\"") < pos("\"points\""));
        assert!(pos("\"points\"") < pos("\"edges\""));
        assert!(pos("\"edges\"") < pos("\"directed\""));
    }
}
