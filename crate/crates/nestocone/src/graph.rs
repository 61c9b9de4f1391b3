//! Graphs, tubes, tubings, and the graphical side of the extremality theory.
//!
//! A tube is a non-empty vertex set inducing a connected subgraph. Two tubes
//! are compatible when nested, or disjoint with non-adjacent parts. Maximal
//! tubings are the maximal cliques of the compatibility graph, and each has
//! exactly `n` tubes; graphical nested complexes are flag, so clique
//! enumeration is sound here (it is not for general building sets).

use crate::error::Error;
use crate::vset::{Tube, VertexSet, MAX_VERTEX};

/// An undirected simple graph on the ground set `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    edges: Vec<(u32, u32)>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Build from an edge list. Rejects loops, out-of-range endpoints and
    /// duplicate edges.
    pub fn new(n: u32, edges: &[(u32, u32)]) -> Result<Graph, Error> {
        if n == 0 {
            return Err(Error::EmptyGround);
        }
        if n > MAX_VERTEX {
            return Err(Error::VertexOutOfRange { vertex: n });
        }
        let mut adj = vec![VertexSet::EMPTY; n as usize];
        let mut canon: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge { v: a });
            }
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::NotInGround {
                        vertex: v,
                        ground: VertexSet::range(n),
                    });
                }
            }
            let e = (a.min(b), a.max(b));
            if canon.contains(&e) {
                return Err(Error::DuplicateEdge { a: e.0, b: e.1 });
            }
            canon.push(e);
            adj[(a - 1) as usize].insert(b);
            adj[(b - 1) as usize].insert(a);
        }
        canon.sort_unstable();
        Ok(Graph {
            n,
            edges: canon,
            adj,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ground(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> VertexSet {
        self.adj[(v - 1) as usize]
    }

    /// Neighbors of any vertex of `s`, excluding `s` itself.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s.iter() {
            out = out.union(self.neighbors(v));
        }
        out.difference(s)
    }

    /// Whether `s` induces a connected subgraph. The empty set counts as
    /// connected here; callers dealing with tubes exclude it separately.
    pub fn is_connected_subset(&self, s: VertexSet) -> bool {
        let Some(start) = s.min() else { return true };
        let mut reached = VertexSet::singleton(start);
        loop {
            let mut frontier = VertexSet::EMPTY;
            for v in reached.iter() {
                frontier = frontier.union(self.neighbors(v));
            }
            let grown = reached.union(frontier.intersection(s));
            if grown == reached {
                break;
            }
            reached = grown;
        }
        reached == s
    }

    pub fn is_tube(&self, s: VertexSet) -> bool {
        !s.is_empty() && s.is_subset(self.ground()) && self.is_connected_subset(s)
    }

    fn check_tube(&self, s: VertexSet) -> Result<(), Error> {
        if self.is_tube(s) {
            Ok(())
        } else {
            Err(Error::InvalidTube(s))
        }
    }

    /// Connected components, as vertex sets in canonical order.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.ground();
        let mut out = Vec::new();
        while let Some(v) = left.min() {
            let mut comp = VertexSet::singleton(v);
            loop {
                let grown = comp.union(self.neighborhood(comp));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left = left.difference(comp);
        }
        out.sort();
        out
    }
}

/// All tubes of `g`, in canonical order (size, then lexicographic).
///
/// Enumerates connected induced subgraphs directly: for each root vertex in
/// increasing order, grows connected sets avoiding smaller roots, branching
/// on each frontier vertex with an exclusion set so every set appears once.
pub fn enumerate_tubes(g: &Graph) -> Vec<Tube> {
    fn grow(g: &Graph, set: VertexSet, cand: VertexSet, banned: VertexSet, out: &mut Vec<Tube>) {
        out.push(set);
        let mut cand = cand;
        let mut banned = banned;
        while let Some(u) = cand.min() {
            cand = cand.remove(u);
            let set2 = {
                let mut s = set;
                s.insert(u);
                s
            };
            let cand2 = cand
                .union(g.neighbors(u))
                .difference(set2)
                .difference(banned);
            grow(g, set2, cand2, banned, out);
            banned.insert(u);
        }
    }

    let mut out = Vec::new();
    let mut roots_seen = VertexSet::EMPTY;
    for v in 1..=g.n {
        let start = VertexSet::singleton(v);
        let cand = g.neighbors(v).difference(roots_seen);
        grow(g, start, cand, roots_seen, &mut out);
        roots_seen.insert(v);
    }
    out.sort();
    out
}

/// Vertices of `t` whose removal leaves the tube empty or connected.
pub fn non_disconnecting(g: &Graph, t: Tube) -> Result<VertexSet, Error> {
    g.check_tube(t)?;
    let mut out = VertexSet::EMPTY;
    for v in t.iter() {
        if g.is_connected_subset(t.remove(v)) {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Compatibility: nested, or disjoint with the union not a tube.
pub fn tubes_compatible(g: &Graph, t: Tube, t2: Tube) -> Result<bool, Error> {
    g.check_tube(t)?;
    g.check_tube(t2)?;
    if t.is_subset(t2) || t2.is_subset(t) {
        return Ok(true);
    }
    Ok(t.is_disjoint(t2) && !g.is_tube(t.union(t2)))
}

/// All maximal tubings, each a set of exactly `n` pairwise compatible tubes
/// containing every connected component. Canonical order throughout.
pub fn enumerate_maximal_tubings(g: &Graph) -> Vec<Vec<Tube>> {
    let tubes = enumerate_tubes(g);
    let m = tubes.len();
    let n = g.n as usize;
    // Pairwise compatibility over tube indices.
    let mut compat: Vec<Vec<bool>> = vec![vec![false; m]; m];
    for i in 0..m {
        for j in (i + 1)..m {
            let c = tubes_compatible(g, tubes[i], tubes[j]).expect("enumerated tubes are valid");
            compat[i][j] = c;
            compat[j][i] = c;
        }
    }

    // Cliques of size n are exactly the maximal cliques: every tubing has at
    // most n tubes and the maximal ones have exactly n.
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    fn dfs(
        start: usize,
        chosen: &mut Vec<usize>,
        compat: &[Vec<bool>],
        m: usize,
        n: usize,
        tubes: &[Tube],
        out: &mut Vec<Vec<Tube>>,
    ) {
        if chosen.len() == n {
            out.push(chosen.iter().map(|&i| tubes[i]).collect());
            return;
        }
        let need = n - chosen.len();
        for i in start..m {
            if m - i < need {
                break;
            }
            if chosen.iter().all(|&j| compat[j][i]) {
                chosen.push(i);
                dfs(i + 1, chosen, compat, m, n, tubes, out);
                chosen.pop();
            }
        }
    }
    dfs(0, &mut chosen, &compat, m, n, &tubes, &mut out);
    out
}

/// The extremal exchangeable pairs with their parent: triples
/// `(s \ {v'}, s \ {v}, s)` over tubes `s` and unordered pairs `v < v'` of
/// distinct non-disconnecting vertices of `s`.
pub fn graphical_maximal_pairs(g: &Graph) -> Vec<(Tube, Tube, Tube)> {
    let mut out = Vec::new();
    for s in enumerate_tubes(g) {
        let nd = non_disconnecting(g, s).expect("enumerated tube is valid").to_vec();
        for i in 0..nd.len() {
            for j in (i + 1)..nd.len() {
                let (v, vp) = (nd[i], nd[j]);
                out.push((s.remove(vp), s.remove(v), s));
            }
        }
    }
    out
}
