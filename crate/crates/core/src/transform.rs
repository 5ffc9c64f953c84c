//! Combinatorial reductions on left-to-right ordered graphs: flips in
//! monotone triangulations, the shift operation, and outdegree reduction.
//! Vertices are numbered `1..=n` in left-to-right order.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::analytics;
use crate::counting::{self, Count};
use crate::error::{Error, Result};
use crate::pslg::Pslg;

/// Vertices `1..=n`; edges `(i, j)` with `i < j` and multiplicity at least one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedMultigraph {
    n: usize,
    edges: BTreeMap<(usize, usize), u32>,
}

impl OrderedMultigraph {
    pub fn new(n: usize) -> Self {
        OrderedMultigraph {
            n,
            edges: BTreeMap::new(),
        }
    }

    /// Repeated pairs raise the multiplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = OrderedMultigraph::new(n);
        for &(i, j) in edges {
            g.add_edge(i, j, 1)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, i: usize, j: usize, mult: u32) -> Result<()> {
        if !(1 <= i && i < j && j <= self.n) {
            return Err(Error::Precondition(format!(
                "edge ({i}, {j}) needs 1 <= i < j <= {}",
                self.n
            )));
        }
        if mult > 0 {
            *self.edges.entry((i, j)).or_insert(0) += mult;
        }
        Ok(())
    }

    fn remove_one(&mut self, i: usize, j: usize) {
        if let Some(m) = self.edges.get_mut(&(i, j)) {
            *m -= 1;
            if *m == 0 {
                self.edges.remove(&(i, j));
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.edges.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.edges.iter().map(|(&e, &m)| (e, m))
    }

    pub fn distinct_edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.values().map(|&m| m as u64).sum()
    }

    pub fn outdegree(&self, i: usize) -> u64 {
        self.edges
            .range((i, 0)..(i + 1, 0))
            .map(|(_, &m)| m as u64)
            .sum()
    }

    pub fn max_outdegree(&self) -> u64 {
        (1..=self.n).map(|i| self.outdegree(i)).max().unwrap_or(0)
    }

    /// Out-neighbours of `i` in increasing order, repeated by multiplicity.
    pub fn out_neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .range((i, 0)..(i + 1, 0))
            .flat_map(|(&(_, j), &m)| std::iter::repeat_n(j, m as usize))
            .collect()
    }

    pub fn total_length(&self) -> u64 {
        self.edges
            .iter()
            .map(|(&(i, j), &m)| (j - i) as u64 * m as u64)
            .sum()
    }

    /// Sorted out-edge lengths of every vertex dominate `1, 2, 3`.
    pub fn has_spread_out_edges(&self) -> bool {
        (1..=self.n).all(|i| {
            let out = self.out_neighbors(i);
            out.len() <= 3 && out.iter().enumerate().all(|(t, &j)| j - i > t)
        })
    }
}

impl fmt::Display for OrderedMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for ((i, j), m) in self.edges() {
            if m == 1 {
                write!(f, " ({i},{j})")?;
            } else {
                write!(f, " ({i},{j})x{m}")?;
            }
        }
        Ok(())
    }
}

/// Left-to-right paths with at least one edge; parallel edges are distinct.
pub fn count_xmonotone_multigraph(g: &OrderedMultigraph) -> Count {
    // ending[v]: paths (including the trivial one) that end at v
    let mut ending = vec![Count::one(); g.n + 1];
    let mut total = Count::zero();
    for ((i, j), m) in g.edges() {
        // edges arrive sorted by tail, so ending[i] is final here
        let add = &ending[i] * m;
        total += &add;
        ending[j] += add;
    }
    total
}

/// One step of the reduction pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuditEntry {
    Flip {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        before: Count,
        after: Count,
        total_len: u64,
    },
    Shift {
        i: usize,
        j: usize,
        k: usize,
        before: Count,
        after: Count,
    },
}

impl AuditEntry {
    pub fn is_monotone(&self) -> bool {
        match self {
            AuditEntry::Flip { before, after, .. } | AuditEntry::Shift { before, after, .. } => {
                after >= before
            }
        }
    }
}

impl fmt::Display for AuditEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditEntry::Flip {
                i,
                j,
                k,
                l,
                before,
                after,
                total_len,
            } => {
                write!(
                    f,
                    "FLIP {i} {j} -> {k} {l} | {before} {after} | {total_len}"
                )
            }
            AuditEntry::Shift {
                i,
                j,
                k,
                before,
                after,
            } => write!(f, "SHIFT {i} {j} {k} | {before} {after}"),
        }
    }
}

/// Simple ordered graph with its bounded triangular faces. An edge is
/// interior when two bounded faces contain it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneTriangulation {
    graph: OrderedMultigraph,
    faces: Vec<[usize; 3]>,
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

impl MonotoneTriangulation {
    pub fn new(n: usize, edges: &[(usize, usize)], faces: &[[usize; 3]]) -> Result<Self> {
        let mut graph = OrderedMultigraph::new(n);
        for &(a, b) in edges {
            let (i, j) = (a.min(b), a.max(b));
            if graph.multiplicity(i, j) > 0 {
                return Err(Error::Precondition(format!("edge ({i}, {j}) repeated")));
            }
            graph.add_edge(i, j, 1)?;
        }
        let mut fs: Vec<[usize; 3]> = faces.iter().map(|f| sorted3(f[0], f[1], f[2])).collect();
        fs.sort_unstable();
        fs.dedup();
        if fs.len() != faces.len() {
            return Err(Error::Precondition("repeated face".into()));
        }
        let t = MonotoneTriangulation { graph, faces: fs };
        for f in &t.faces {
            for (a, b) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
                if t.graph.multiplicity(a, b) == 0 {
                    return Err(Error::Precondition(format!(
                        "face {f:?} uses missing edge ({a}, {b})"
                    )));
                }
            }
        }
        for ((i, j), _) in t.graph.edges() {
            if t.apexes(i, j).len() > 2 {
                return Err(Error::Precondition(format!(
                    "edge ({i}, {j}) lies on more than two faces"
                )));
            }
        }
        Ok(t)
    }

    /// Converts an edge-maximal straight-line graph. Vertices are ordered by
    /// `x + eps * y`, which keeps every strict x-order and breaks ties by y.
    /// Returns the triangulation and `order[r - 1]` = original vertex of rank `r`.
    pub fn from_pslg(g: &Pslg) -> Result<(Self, Vec<usize>)> {
        let info = g.analyze_triangulation()?;
        if !info.is_edge_maximal {
            return Err(Error::NotEdgeMaximal);
        }
        let order = shear_order(g);
        let mut rank = vec![0; g.n()];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r + 1;
        }
        let edges: Vec<(usize, usize)> = g.edges.iter().map(|&(a, b)| (rank[a], rank[b])).collect();
        let mut faces = Vec::with_capacity(info.bounded_faces.len());
        for f in &info.bounded_faces {
            if f.len() != 3 {
                return Err(Error::Invariant(format!(
                    "bounded face with {} vertices",
                    f.len()
                )));
            }
            faces.push([rank[f[0]], rank[f[1]], rank[f[2]]]);
        }
        Ok((MonotoneTriangulation::new(g.n(), &edges, &faces)?, order))
    }

    pub fn graph(&self) -> &OrderedMultigraph {
        &self.graph
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    /// Third vertices of the faces containing edge `(i, j)`.
    pub fn apexes(&self, i: usize, j: usize) -> Vec<usize> {
        let (i, j) = (i.min(j), i.max(j));
        self.faces
            .iter()
            .filter(|f| f.contains(&i) && f.contains(&j))
            .map(|f| f.iter().copied().find(|&v| v != i && v != j).unwrap())
            .collect()
    }

    pub fn is_interior(&self, i: usize, j: usize) -> bool {
        self.graph.multiplicity(i.min(j), i.max(j)) > 0 && self.apexes(i, j).len() == 2
    }

    fn flip_partner(&self, i: usize, j: usize) -> Option<(usize, usize)> {
        if !self.is_interior(i, j) {
            return None;
        }
        let a = self.apexes(i, j);
        let (k, l) = (a[0].min(a[1]), a[0].max(a[1]));
        (i < k && l < j && self.graph.multiplicity(k, l) == 0).then_some((k, l))
    }

    /// First edge (in edge order) that admits a length-decreasing flip.
    pub fn flippable_edge(&self) -> Option<(usize, usize)> {
        self.graph
            .edges()
            .map(|(e, _)| e)
            .find(|&(i, j)| self.flip_partner(i, j).is_some())
    }
}

fn shear_order(g: &Pslg) -> Vec<usize> {
    let pts = &g.points;
    let mut min_dx: Option<BigRational> = None;
    let mut max_dy = BigRational::zero();
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            let dx = (&pts[a].x - &pts[b].x).abs();
            if dx.is_positive() && min_dx.as_ref().is_none_or(|m| &dx < m) {
                min_dx = Some(dx);
            }
            let dy = (&pts[a].y - &pts[b].y).abs();
            if dy > max_dy {
                max_dy = dy;
            }
        }
    }
    let eps = min_dx.unwrap_or_else(BigRational::one)
        / (BigRational::from_integer(2.into()) * (max_dy + BigRational::one()));
    let key: Vec<BigRational> = pts.iter().map(|p| &p.x + &eps * &p.y).collect();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| key[a].cmp(&key[b]));
    order
}

/// Replaces interior edge `(i, j)` by `(k, l)` where `k, l` are the apexes of
/// its two faces and `i < k < l < j`.
pub fn flip(t: &MonotoneTriangulation, i: usize, j: usize) -> Result<MonotoneTriangulation> {
    Ok(flip_logged(t, i, j)?.0)
}

pub fn flip_logged(
    t: &MonotoneTriangulation,
    i: usize,
    j: usize,
) -> Result<(MonotoneTriangulation, AuditEntry)> {
    let (i, j) = (i.min(j), i.max(j));
    let (k, l) = t.flip_partner(i, j).ok_or(Error::NotFlippable(i, j))?;
    let before = count_xmonotone_multigraph(&t.graph);
    let len_before = t.graph.total_length();
    let mut graph = t.graph.clone();
    graph.remove_one(i, j);
    graph.add_edge(k, l, 1)?;
    let mut faces: Vec<[usize; 3]> = t
        .faces
        .iter()
        .filter(|f| !(f.contains(&i) && f.contains(&j)))
        .copied()
        .collect();
    faces.push(sorted3(i, k, l));
    faces.push(sorted3(j, k, l));
    faces.sort_unstable();
    let after = count_xmonotone_multigraph(&graph);
    let total_len = graph.total_length();
    if total_len >= len_before {
        return Err(Error::Invariant(format!(
            "flip ({i}, {j}) did not shorten the graph"
        )));
    }
    if after < before {
        return Err(Error::Invariant(format!(
            "flip ({i}, {j}) lost paths: {before} -> {after}"
        )));
    }
    let entry = AuditEntry::Flip {
        i,
        j,
        k,
        l,
        before,
        after,
        total_len,
    };
    Ok((MonotoneTriangulation { graph, faces }, entry))
}

/// Flips until no edge admits a length-decreasing flip.
pub fn normalize_flips(
    t: &MonotoneTriangulation,
) -> Result<(MonotoneTriangulation, Vec<AuditEntry>)> {
    let mut cur = t.clone();
    let mut log = Vec::new();
    while let Some((i, j)) = cur.flippable_edge() {
        let (next, entry) = flip_logged(&cur, i, j)?;
        log.push(entry);
        cur = next;
    }
    Ok((cur, log))
}

/// Whether some face on interior edge `(i, j)` has its apex outside `[i, j]`.
pub fn lemma2_predicate(t: &MonotoneTriangulation, i: usize, j: usize) -> Result<bool> {
    let (i, j) = (i.min(j), i.max(j));
    if !t.is_interior(i, j) {
        return Err(Error::Precondition(format!(
            "edge ({i}, {j}) is not interior"
        )));
    }
    Ok(t.apexes(i, j).iter().any(|&k| k < i || k > j))
}

/// Whether every consecutive pair `(i, i + 1)` is an edge.
pub fn lemma3_predicate(t: &MonotoneTriangulation) -> bool {
    has_consecutive_edges(&t.graph)
}

fn has_consecutive_edges(g: &OrderedMultigraph) -> bool {
    (1..g.n).all(|i| g.multiplicity(i, i + 1) > 0)
}

/// Moves one copy of `(i, k)` to `(j, k)`; needs `i < j < k` with `(i, j)`
/// and `(i, k)` present.
pub fn shift(g: &OrderedMultigraph, i: usize, j: usize, k: usize) -> Result<OrderedMultigraph> {
    if !(i < j && j < k) {
        return Err(Error::Precondition(format!(
            "shift({i}, {j}, {k}) needs i < j < k"
        )));
    }
    if g.multiplicity(i, j) == 0 || g.multiplicity(i, k) == 0 {
        return Err(Error::Precondition(format!(
            "shift({i}, {j}, {k}) needs edges ({i}, {j}) and ({i}, {k})"
        )));
    }
    let mut out = g.clone();
    out.remove_one(i, k);
    out.add_edge(j, k, 1)?;
    Ok(out)
}

/// Every consecutive edge present with multiplicity one.
pub fn check_i1(g: &OrderedMultigraph) -> Result<()> {
    for i in 1..g.n {
        let m = g.multiplicity(i, i + 1);
        if m != 1 {
            return Err(Error::Invariant(format!(
                "consecutive edge ({i}, {}) has multiplicity {m}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// `|E_ij| <= 3 |V_ij| - 6` for every range `i..=j` of at least three
/// vertices, counting multiplicities.
pub fn check_i2(g: &OrderedMultigraph) -> Result<()> {
    let n = g.n;
    // inside[i][j]: edges (a, b) with i <= a and b <= j
    let mut inside = vec![vec![0u64; n + 2]; n + 2];
    let mut by_tail = vec![vec![0u64; n + 2]; n + 2];
    for ((a, b), m) in g.edges() {
        by_tail[a][b] += m as u64;
    }
    for i in (1..=n).rev() {
        let mut row = 0u64;
        for j in i..=n {
            row += by_tail[i][j];
            inside[i][j] = inside[i + 1][j] + row;
        }
    }
    for i in 1..=n {
        for j in i + 2..=n {
            let v = (j - i + 1) as u64;
            if inside[i][j] > 3 * v - 6 {
                return Err(Error::Invariant(format!(
                    "range {i}..={j} has {} edges on {v} vertices",
                    inside[i][j]
                )));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: OrderedMultigraph,
    pub log: Vec<AuditEntry>,
}

fn with_log(e: Error, log: &[AuditEntry]) -> Error {
    let lines: Vec<String> = log.iter().map(|x| x.to_string()).collect();
    Error::Invariant(format!("{e}; log so far:\n{}", lines.join("\n")))
}

/// Sweeps left to right; while a vertex has outdegree four or more, shifts
/// its longest edge onto its shortest out-neighbour. Checks both range
/// invariants and count monotonicity after each step.
pub fn reduce_outdegrees(g: &OrderedMultigraph) -> Result<Reduction> {
    check_i1(g)?;
    check_i2(g)?;
    let n = g.n;
    let budget = (n as u64) * (g.max_outdegree().max(1)) * (n as u64);
    let mut cur = g.clone();
    let mut log = Vec::new();
    let mut count = count_xmonotone_multigraph(&cur);
    for i in 1..=n {
        while cur.outdegree(i) > 3 {
            if log.len() as u64 >= budget {
                return Err(with_log(
                    Error::Invariant(format!("step budget {budget} exhausted")),
                    &log,
                ));
            }
            let out = cur.out_neighbors(i);
            let (j, k) = (out[0], *out.last().unwrap());
            let next = shift(&cur, i, j, k).map_err(|e| with_log(e, &log))?;
            let after = count_xmonotone_multigraph(&next);
            log.push(AuditEntry::Shift {
                i,
                j,
                k,
                before: count.clone(),
                after: after.clone(),
            });
            if after < count {
                return Err(with_log(
                    Error::Invariant(format!("shift({i}, {j}, {k}) lost paths")),
                    &log,
                ));
            }
            check_i1(&next)
                .and_then(|_| check_i2(&next))
                .map_err(|e| with_log(e, &log))?;
            cur = next;
            count = after;
        }
    }
    if !cur.has_spread_out_edges() {
        return Err(with_log(
            Error::Invariant("out-edge lengths do not dominate 1, 2, 3".into()),
            &log,
        ));
    }
    Ok(Reduction { graph: cur, log })
}

/// Result of running flips and outdegree reduction on a straight-line graph.
#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub n: usize,
    /// x-monotone paths of the straight-line input.
    pub original_count: Count,
    /// Paths of the sheared ordering before any flip.
    pub ordered_count: Count,
    pub flips: Vec<AuditEntry>,
    pub lemma2_holds: bool,
    pub lemma3_holds: bool,
    pub reduction: Reduction,
    pub final_count: Count,
    pub tribonacci_sum: Count,
    pub reduced_bound: Count,
}

impl PipelineReport {
    pub fn audit_lines(&self) -> Vec<String> {
        self.flips
            .iter()
            .chain(&self.reduction.log)
            .map(|e| e.to_string())
            .collect()
    }

    pub fn all_steps_monotone(&self) -> bool {
        self.flips
            .iter()
            .chain(&self.reduction.log)
            .all(AuditEntry::is_monotone)
    }
}

pub fn run_pipeline(g: &Pslg) -> Result<PipelineReport> {
    let original_count = counting::count_xmonotone(g);
    let (t, _) = MonotoneTriangulation::from_pslg(g)?;
    let ordered_count = count_xmonotone_multigraph(t.graph());
    let (t, flips) = normalize_flips(&t)?;
    let mut lemma2_holds = true;
    for ((i, j), _) in t.graph.edges() {
        if t.is_interior(i, j) && !lemma2_predicate(&t, i, j)? {
            lemma2_holds = false;
        }
    }
    let lemma3_holds = lemma3_predicate(&t);
    let reduction = reduce_outdegrees(t.graph())?;
    let final_count = count_xmonotone_multigraph(&reduction.graph);
    Ok(PipelineReport {
        n: g.n(),
        original_count,
        ordered_count,
        flips,
        lemma2_holds,
        lemma3_holds,
        final_count,
        reduction,
        tribonacci_sum: analytics::tribonacci_prefix_sum(g.n())?,
        reduced_bound: analytics::reduced_path_bound(g.n())?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::geom::Point;

    fn c(v: u32) -> Count {
        Count::from(v)
    }

    #[test]
    fn multigraph_counts() {
        assert_eq!(
            count_xmonotone_multigraph(&OrderedMultigraph::from_edges(2, &[(1, 2)]).unwrap()),
            c(1)
        );
        let tri = OrderedMultigraph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(count_xmonotone_multigraph(&tri), c(4));
        let double = OrderedMultigraph::from_edges(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(double.multiplicity(1, 2), 2);
        assert_eq!(count_xmonotone_multigraph(&double), c(2));
        // 1=2=3: 2 + 2 + 4
        let chain = OrderedMultigraph::from_edges(3, &[(1, 2), (1, 2), (2, 3), (2, 3)]).unwrap();
        assert_eq!(count_xmonotone_multigraph(&chain), c(8));
        assert!(OrderedMultigraph::from_edges(3, &[(2, 2)]).is_err());
    }

    fn quad() -> MonotoneTriangulation {
        MonotoneTriangulation::new(
            4,
            &[(1, 2), (2, 4), (1, 3), (3, 4), (1, 4)],
            &[[1, 2, 4], [1, 3, 4]],
        )
        .unwrap()
    }

    #[test]
    fn flip_quad() {
        let t = quad();
        assert!(!lemma2_predicate(&t, 1, 4).unwrap());
        assert!(!lemma3_predicate(&t));
        let (f, entry) = flip_logged(&t, 1, 4).unwrap();
        assert_eq!(entry.to_string(), "FLIP 1 4 -> 2 3 | 7 10 | 7");
        assert!(f.graph().multiplicity(2, 3) == 1 && f.graph().multiplicity(1, 4) == 0);
        assert_eq!(f.faces(), &[[1, 2, 3], [2, 3, 4]]);
        assert!(lemma3_predicate(&f));
        assert!(lemma2_predicate(&f, 2, 3).unwrap());
        // boundary edges
        assert!(matches!(flip(&t, 1, 2), Err(Error::NotFlippable(1, 2))));
        assert!(lemma2_predicate(&t, 1, 2).is_err());
    }

    #[test]
    fn flip_needs_strictly_inner_apexes() {
        // apexes 2 and 4 of (1, 3): 4 lies right of 3
        let t = MonotoneTriangulation::new(
            4,
            &[(1, 2), (2, 3), (1, 3), (3, 4), (1, 4)],
            &[[1, 2, 3], [1, 3, 4]],
        )
        .unwrap();
        assert!(matches!(flip(&t, 1, 3), Err(Error::NotFlippable(1, 3))));
        assert!(lemma2_predicate(&t, 1, 3).unwrap());
        let tri = MonotoneTriangulation::new(3, &[(1, 2), (2, 3), (1, 3)], &[[1, 2, 3]]).unwrap();
        assert!(lemma2_predicate(&tri, 1, 3).is_err());
        assert!(lemma3_predicate(&tri));
    }

    #[test]
    fn shift_examples() {
        let g = OrderedMultigraph::from_edges(4, &[(1, 2), (1, 4), (2, 3), (3, 4)]).unwrap();
        let s = shift(&g, 1, 2, 4).unwrap();
        assert_eq!(
            s,
            OrderedMultigraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
        );
        assert_eq!(count_xmonotone_multigraph(&g), c(7));
        assert_eq!(count_xmonotone_multigraph(&s), c(8));
        let g = OrderedMultigraph::from_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(shift(&g, 1, 2, 3).unwrap().multiplicity(2, 3), 2);
        assert!(shift(&g, 1, 3, 2).is_err());
        assert!(shift(
            &OrderedMultigraph::from_edges(3, &[(1, 3)]).unwrap(),
            1,
            2,
            3
        )
        .is_err());
    }

    #[test]
    fn invariants() {
        let path = OrderedMultigraph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let r = reduce_outdegrees(&path).unwrap();
        assert_eq!(r.graph, path);
        assert!(r.log.is_empty());
        let k4 =
            OrderedMultigraph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
                .unwrap();
        assert!(check_i2(&k4).is_ok());
        let k4_plus = OrderedMultigraph::from_edges(
            4,
            &[(1, 2), (1, 3), (1, 4), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert!(check_i2(&k4_plus).is_err());
        assert!(check_i1(&OrderedMultigraph::from_edges(3, &[(1, 2)]).unwrap()).is_err());
    }

    #[test]
    fn reduces_high_outdegree_fan() {
        // vertex 1 sees everyone, plus the path: a maximal outerplanar fan
        let n = 8;
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.extend((3..=n).map(|j| (1, j)));
        let g = OrderedMultigraph::from_edges(n, &edges).unwrap();
        let r = reduce_outdegrees(&g).unwrap();
        assert!(r.graph.max_outdegree() <= 3);
        assert!(r.graph.has_spread_out_edges());
        assert!(r.log.iter().all(AuditEntry::is_monotone));
        assert!(r.log[0].to_string().starts_with("SHIFT 1 2 8 | "));
        assert!(count_xmonotone_multigraph(&r.graph) <= analytics::reduced_path_bound(n).unwrap());
    }

    #[test]
    fn pipeline_on_lower_bound_graph() {
        let g = constructions::gen_monotone_lb(2).unwrap();
        let r = run_pipeline(&g).unwrap();
        assert!(r.all_steps_monotone());
        assert!(r.lemma2_holds && r.lemma3_holds);
        assert!(r.reduction.graph.max_outdegree() <= 3);
        assert!(r.original_count <= r.ordered_count && r.ordered_count <= r.final_count);
        assert!(r.final_count <= r.reduced_bound);
    }

    #[test]
    fn point_in_triangle_exceeds_tribonacci_sum() {
        let pts = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, -1),
            Point::from_ints(2, -3),
            Point::from_ints(3, 0),
        ];
        let g = Pslg::checked(
            pts,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            false,
        )
        .unwrap();
        assert!(g.is_edge_maximal().unwrap());
        let r = run_pipeline(&g).unwrap();
        assert_eq!(r.original_count, c(11));
        assert_eq!(r.tribonacci_sum, c(8));
        assert_eq!(r.reduced_bound, c(11));
    }
}
