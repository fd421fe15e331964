//! Reference triangulations.
//!
//! Every supported surface carries one fixed triangulation: an ideal
//! triangulation (vertices at the punctures) when the surface is punctured,
//! and a one-vertex triangulation for the closed genus-2 surface. Curves are
//! stored as reduced cyclic words of oriented edge crossings, i.e. reduced
//! closed paths on the dual trivalent graph; the normal coordinate of a curve
//! on an edge is the number of times the word crosses that edge.

use crate::errors::{Result, TopoError};

/// Oriented edge, encoded as `2*edge + dir`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OEdge(pub u32);

impl OEdge {
    pub fn new(edge: usize, positive: bool) -> Self {
        OEdge(2 * edge as u32 + u32::from(!positive))
    }

    pub fn edge(self) -> usize {
        (self.0 / 2) as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn rev(self) -> OEdge {
        OEdge(self.0 ^ 1)
    }
}

impl std::fmt::Debug for OEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", if self.is_positive() { "+" } else { "-" }, self.edge())
    }
}

/// A triangulated reference surface. Triangles list their sides in
/// counterclockwise order; every oriented edge occurs in exactly one
/// triangle slot.
#[derive(Clone, Debug)]
pub struct RefTriangulation {
    pub triangles: Vec<[OEdge; 3]>,
    pub num_edges: usize,
    /// `slot[oe]` is `(triangle, slot)` for the oriented edge `oe`.
    slot: Vec<(u32, u8)>,
    /// Each vertex as the cyclic list of oriented edges pointing into it,
    /// in rotation order.
    pub vertices: Vec<Vec<OEdge>>,
    /// Vertex index at the head of each oriented edge.
    head: Vec<u32>,
}

impl RefTriangulation {
    pub fn new(num_edges: usize, triangles: Vec<[OEdge; 3]>) -> Result<Self> {
        let mut slot = vec![(u32::MAX, 0u8); 2 * num_edges];
        if triangles.len() * 3 != 2 * num_edges {
            return Err(TopoError::InvalidCurve(format!(
                "triangulation has {} triangles for {} edges",
                triangles.len(),
                num_edges
            )));
        }
        for (t, tri) in triangles.iter().enumerate() {
            for (s, oe) in tri.iter().enumerate() {
                if oe.edge() >= num_edges {
                    return Err(TopoError::InvalidCurve("edge index out of range".into()));
                }
                if slot[oe.0 as usize].0 != u32::MAX {
                    return Err(TopoError::InvalidCurve(format!(
                        "oriented edge {oe:?} occurs twice"
                    )));
                }
                slot[oe.0 as usize] = (t as u32, s as u8);
            }
        }
        if slot.iter().any(|&(t, _)| t == u32::MAX) {
            return Err(TopoError::InvalidCurve("unused oriented edge".into()));
        }
        let mut tri = RefTriangulation {
            triangles,
            num_edges,
            slot,
            vertices: Vec::new(),
            head: vec![u32::MAX; 2 * num_edges],
        };
        tri.compute_vertices();
        for t in 0..tri.triangles.len() {
            let sides = tri.triangles[t];
            for k in 0..3 {
                // non-degenerate: a triangle never carries both directions
                // of one edge (no self-folded triangles in the references)
                if sides[k].edge() == sides[(k + 1) % 3].edge() {
                    return Err(TopoError::InvalidCurve("self-folded triangle".into()));
                }
            }
        }
        Ok(tri)
    }

    /// Triangle containing the oriented edge.
    pub fn triangle_of(&self, oe: OEdge) -> usize {
        self.slot[oe.0 as usize].0 as usize
    }

    /// The next side counterclockwise in the same triangle; its tail is the
    /// head of `oe`.
    pub fn succ(&self, oe: OEdge) -> OEdge {
        let (t, s) = self.slot[oe.0 as usize];
        self.triangles[t as usize][(s as usize + 1) % 3]
    }

    /// Rotation around the head of `oe`: the next oriented edge pointing
    /// into the same vertex.
    pub fn rot(&self, oe: OEdge) -> OEdge {
        self.succ(oe).rev()
    }

    pub fn vertex_at_head(&self, oe: OEdge) -> usize {
        self.head[oe.0 as usize] as usize
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn euler(&self) -> i64 {
        self.vertices.len() as i64 - self.num_edges as i64 + self.triangles.len() as i64
    }

    fn compute_vertices(&mut self) {
        let mut seen = vec![false; 2 * self.num_edges];
        for start in 0..2 * self.num_edges {
            if seen[start] {
                continue;
            }
            let v = self.vertices.len() as u32;
            let mut orbit = Vec::new();
            let mut oe = OEdge(start as u32);
            loop {
                seen[oe.0 as usize] = true;
                self.head[oe.0 as usize] = v;
                orbit.push(oe);
                oe = self.rot(oe);
                if oe.0 as usize == start {
                    break;
                }
            }
            self.vertices.push(orbit);
        }
    }

    /// The crossing word of a small loop around vertex `v` (the vertex link),
    /// traversed in rotation order.
    pub fn vertex_link_word(&self, v: usize) -> Vec<OEdge> {
        self.vertices[v].iter().map(|&x| self.succ(x)).collect()
    }

    /// `(triangle, slot)` of an oriented edge.
    pub fn slot_of(&self, oe: OEdge) -> (usize, usize) {
        let (t, s) = self.slot[oe.0 as usize];
        (t as usize, s as usize)
    }

    /// Checks that `word` is a valid reduced cyclic crossing word: each
    /// crossing leads into the triangle of the next one and there is no
    /// immediate backtracking.
    pub fn word_is_valid(&self, word: &[OEdge]) -> bool {
        if word.is_empty() {
            return false;
        }
        let m = word.len();
        for i in 0..m {
            let cur = word[i];
            let next = word[(i + 1) % m];
            if next == cur.rev() && m > 1 {
                return false;
            }
            if self.triangle_of(cur.rev()) != self.triangle_of(next) {
                return false;
            }
        }
        true
    }

    /// Edge-crossing counts of a word (the normal coordinates).
    pub fn weights(&self, word: &[OEdge]) -> Vec<u64> {
        let mut w = vec![0u64; self.num_edges];
        for oe in word {
            w[oe.edge()] += 1;
        }
        w
    }
}

/// Traces a vector of edge weights on the triangulation and splits it into
/// the crossing words of its connected components. Fails when the matching
/// conditions do not hold.
pub fn trace_components(tri: &RefTriangulation, weights: &[u64]) -> Result<Vec<Vec<OEdge>>> {
    if weights.len() != tri.num_edges {
        return Err(TopoError::Parse("weight vector has wrong length".into()));
    }
    // corner counts per triangle: corner k sits between sides k and k+1
    let mut corner = vec![[0i64; 3]; tri.triangles.len()];
    for (t, tr) in tri.triangles.iter().enumerate() {
        let w = [
            weights[tr[0].edge()] as i64,
            weights[tr[1].edge()] as i64,
            weights[tr[2].edge()] as i64,
        ];
        for k in 0..3 {
            let c = w[k] + w[(k + 1) % 3] - w[(k + 2) % 3];
            if c < 0 || c % 2 != 0 {
                return Err(TopoError::Parse(format!(
                    "weights violate the matching conditions in triangle {t}"
                )));
            }
            corner[t][k] = c / 2;
        }
    }
    // positions along each oriented side are numbered from its tail; the
    // first `corner[t][k-1]`-many belong to the tail corner. A strand at
    // position j (from the tail of side `oe`, 0-based) continues within the
    // triangle of `oe` to a position on the neighbouring side determined by
    // corner nesting.
    //
    // We trace by following (oriented crossing, position) states: the state
    // (oe, j) means the strand just crossed edge(oe) out of triangle(oe)
    // and sits at position j counted along the positive direction of the
    // underlying edge.
    let total: u64 = weights.iter().sum();
    if total == 0 {
        return Ok(Vec::new());
    }
    // State (oe, j): the strand has just crossed edge(oe) leaving
    // triangle_of(oe), at the point with index j along the positive
    // direction of the underlying edge.
    let next_state = |oe: OEdge, j: u64| -> Result<(OEdge, u64)> {
        let s = oe.rev(); // side of the entered triangle
        let (t, slot) = tri.slot_of(s);
        let tr = tri.triangles[t];
        let w_s = weights[s.edge()];
        if j >= w_s {
            return Err(TopoError::Parse("tracing position out of range".into()));
        }
        let pos_from_tail = if s.is_positive() { j } else { w_s - 1 - j };
        // arcs at the tail corner of s occupy the positions nearest tail(s)
        let n_tail = corner[t][(slot + 2) % 3] as u64;
        let (exit, from_tail_exit) = if pos_from_tail < n_tail {
            // corner at tail(s): exit through the previous side p, nested
            // toward the shared vertex head(p) = tail(s)
            let p = tr[(slot + 2) % 3];
            let w_p = weights[p.edge()];
            (p, w_p - 1 - pos_from_tail)
        } else {
            // corner at head(s): exit through the next side q; shared
            // vertex is tail(q) = head(s)
            let q = tr[(slot + 1) % 3];
            (q, w_s - 1 - pos_from_tail)
        };
        debug_assert_eq!(tri.triangle_of(exit), t);
        let w_e = weights[exit.edge()];
        if from_tail_exit >= w_e {
            return Err(TopoError::Parse("tracing position out of range".into()));
        }
        let j_exit = if exit.is_positive() {
            from_tail_exit
        } else {
            w_e - 1 - from_tail_exit
        };
        Ok((exit, j_exit))
    };

    let mut visited: std::collections::HashSet<(u32, u64)> = std::collections::HashSet::new();
    let mut components = Vec::new();
    for e in 0..tri.num_edges {
        for j in 0..weights[e] {
            let start = (OEdge::new(e, true), j);
            if visited.contains(&(start.0 .0, start.1)) {
                continue;
            }
            let mut word = Vec::new();
            let mut state = start;
            loop {
                if !visited.insert((state.0 .0, state.1)) {
                    // re-entered mid-cycle: inconsistent weights
                    return Err(TopoError::Parse("weights do not trace to disjoint circles".into()));
                }
                // also mark the reverse crossing at the same point
                visited.insert((state.0.rev().0, state.1));
                word.push(state.0);
                state = next_state(state.0, state.1)?;
                if state == start {
                    break;
                }
                if word.len() > (2 * total) as usize {
                    return Err(TopoError::Parse("tracing failed to close up".into()));
                }
            }
            components.push(word);
        }
    }
    Ok(components)
}

/// Builds the reference triangulation for the n-punctured sphere (n >= 4)
/// as a doubled ideal polygon with front and back fans.
pub fn sphere_reference(n: usize) -> Result<RefTriangulation> {
    assert!(n >= 4);
    // edges 0..n: polygon sides s_i from vertex i to i+1 (mod n)
    // edges n..2n-3: front diagonals f_j from 0 to j, j = 2..=n-2
    // edges 2n-3..3n-6: back diagonals b_j from 1 to j, j = 3..=n-1
    let num_edges = 3 * n - 6;
    let s = |i: usize, pos: bool| OEdge::new(i % n, pos);
    let f = |j: usize, pos: bool| OEdge::new(n + (j - 2), pos);
    let b = |j: usize, pos: bool| OEdge::new(2 * n - 3 + (j - 3), pos);
    let mut triangles = Vec::new();
    // front fan from vertex 0
    if n == 4 {
        triangles.push([s(0, true), s(1, true), f(2, false)]);
        triangles.push([f(2, true), s(2, true), s(3, true)]);
    } else {
        triangles.push([s(0, true), s(1, true), f(2, false)]);
        for j in 2..=n - 3 {
            triangles.push([f(j, true), s(j, true), f(j + 1, false)]);
        }
        triangles.push([f(n - 2, true), s(n - 2, true), s(n - 1, true)]);
    }
    // back fan from vertex 1; back polygon cycle is 1 -> 0 -> n-1 -> ... -> 2 -> 1
    if n == 4 {
        triangles.push([s(0, false), s(3, false), b(3, false)]);
        triangles.push([b(3, true), s(2, false), s(1, false)]);
    } else {
        triangles.push([s(0, false), s(n - 1, false), b(n - 1, false)]);
        for j in (4..=n - 1).rev() {
            triangles.push([b(j, true), s(j - 1, false), b(j - 1, false)]);
        }
        triangles.push([b(3, true), s(2, false), s(1, false)]);
    }
    RefTriangulation::new(num_edges, triangles)
}

/// Builds the one-(ideal-)vertex reference triangulation of the genus-g
/// surface from a fan-triangulated 4g-gon with the standard side pairing
/// `a1 b1 a1' b1' ... ag bg ag' bg'`.
pub fn polygon_reference(g: usize) -> Result<RefTriangulation> {
    assert!(g >= 1);
    let sides = 4 * g;
    // side k of the polygon (k = 0..4g) is a copy of edge class:
    //   k = 4i   -> +a_i ; k = 4i+1 -> +b_i ; k = 4i+2 -> -a_i ; k = 4i+3 -> -b_i
    let side = |k: usize| -> OEdge {
        let i = k / 4;
        match k % 4 {
            0 => OEdge::new(2 * i, true),
            1 => OEdge::new(2 * i + 1, true),
            2 => OEdge::new(2 * i, false),
            _ => OEdge::new(2 * i + 1, false),
        }
    };
    // diagonals d_k from corner 0 to corner k, k = 2..=4g-2
    let num_edges = 2 * g + (sides - 3);
    let d = |k: usize, pos: bool| OEdge::new(2 * g + (k - 2), pos);
    let mut triangles = Vec::new();
    triangles.push([side(0), side(1), d(2, false)]);
    for k in 2..=sides - 3 {
        triangles.push([d(k, true), side(k), d(k + 1, false)]);
    }
    triangles.push([d(sides - 2, true), side(sides - 2), side(sides - 1)]);
    RefTriangulation::new(num_edges, triangles)
}

/// Replaces triangle `t` by three triangles coned to a fresh vertex.
/// Used to add punctures one at a time.
pub fn cone_triangle(tri: &RefTriangulation, t: usize) -> Result<RefTriangulation> {
    let base = tri.triangles[t];
    let e0 = tri.num_edges;
    let mut triangles = tri.triangles.clone();
    let u = |k: usize, pos: bool| OEdge::new(e0 + k, pos);
    // sides (x, y, z); cone edges u_k from head(side k) to the new vertex
    let [x, y, z] = base;
    triangles[t] = [x, u(0, true), u(2, false)];
    triangles.push([y, u(1, true), u(0, false)]);
    triangles.push([z, u(2, true), u(1, false)]);
    RefTriangulation::new(tri.num_edges + 3, triangles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_references_are_valid() {
        for n in 4..=7 {
            let tri = sphere_reference(n).unwrap();
            assert_eq!(tri.num_edges, 3 * n - 6);
            assert_eq!(tri.triangles.len(), 2 * n - 4);
            assert_eq!(tri.num_vertices(), n, "n={n}");
            assert_eq!(tri.euler(), 2);
        }
    }

    #[test]
    fn torus_reference_is_valid() {
        let tri = polygon_reference(1).unwrap();
        assert_eq!(tri.num_edges, 3);
        assert_eq!(tri.num_vertices(), 1);
        assert_eq!(tri.euler(), 0);
    }

    #[test]
    fn genus2_reference_is_valid() {
        let tri = polygon_reference(2).unwrap();
        assert_eq!(tri.num_edges, 9);
        assert_eq!(tri.triangles.len(), 6);
        assert_eq!(tri.num_vertices(), 1);
        assert_eq!(tri.euler(), -2);
    }

    #[test]
    fn coning_adds_a_puncture() {
        let tri = polygon_reference(1).unwrap();
        let tri2 = cone_triangle(&tri, 1).unwrap();
        assert_eq!(tri2.num_vertices(), 2);
        assert_eq!(tri2.num_edges, 6);
        assert_eq!(tri2.euler(), 0);
    }

    #[test]
    fn vertex_links_are_valid_words() {
        for tri in [sphere_reference(5).unwrap(), polygon_reference(2).unwrap()] {
            for v in 0..tri.num_vertices() {
                let w = tri.vertex_link_word(v);
                assert!(tri.word_is_valid(&w), "link of vertex {v}");
            }
        }
    }

    #[test]
    fn tracing_roundtrips_vertex_links() {
        let tri = sphere_reference(5).unwrap();
        let w = tri.vertex_link_word(0);
        let weights = tri.weights(&w);
        let comps = trace_components(&tri, &weights).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(tri.weights(&comps[0]), weights);
        assert!(tri.word_is_valid(&comps[0]));
    }
}
