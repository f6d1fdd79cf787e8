//! Basic polyhedra: 4-valent plane graph templates with numbered vertex
//! slots, and tangle substitution into them.
//!
//! Each template is the medial graph of a small planar seed graph (the
//! medial of a wheel is an antiprism, of the triangular prism the 9-vertex
//! basic polyhedron, and so on). A template carries a planar rotation
//! system, a slot numbering, and the alternating over/under assignment of
//! its base diagram; substituting the tangle `1` in every slot reproduces
//! that alternating diagram. Slot numberings follow the tabulation
//! conventions and are pinned by the classification anchors in the test
//! suite.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::tangle::{self, Corner, Tangle};

/// Slot counts for symbol parsing.
const SLOT_COUNTS: &[(&str, usize)] = &[
    ("6*", 6),
    ("8*", 8),
    ("9*", 9),
    ("10*", 10),
    ("10**", 10),
    ("10***", 10),
    ("101*", 10),
    ("102*", 10),
    ("103*", 10),
    ("11*", 11),
    ("11**", 11),
    ("11***", 11),
];

pub fn slot_count(id: &str) -> Option<usize> {
    SLOT_COUNTS
        .iter()
        .find(|&&(name, _)| name == id)
        .map(|&(_, n)| n)
}

/// A 4-valent planar rotation system: for each vertex, its four
/// `(neighbor, neighbor_stub)` attachments in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rotation4 {
    pub adj: Vec<[(u32, u8); 4]>,
}

impl Rotation4 {
    pub fn vertices(&self) -> usize {
        self.adj.len()
    }

    /// Check that stubs form an involution and trace faces; returns the face
    /// sizes. Panics on malformed data.
    pub fn face_sizes(&self) -> Vec<usize> {
        let n = self.adj.len();
        for (v, nb) in self.adj.iter().enumerate() {
            for (s, &(w, ws)) in nb.iter().enumerate() {
                let back = self.adj[w as usize][ws as usize];
                assert_eq!(
                    (back.0 as usize, back.1 as usize),
                    (v, s),
                    "stub involution broken at vertex {v} stub {s}"
                );
            }
        }
        let mut seen = vec![[false; 4]; n];
        let mut sizes = Vec::new();
        for v0 in 0..n {
            for s0 in 0..4 {
                if seen[v0][s0] {
                    continue;
                }
                let mut len = 0usize;
                let (mut v, mut s) = (v0, s0);
                loop {
                    seen[v][s] = true;
                    len += 1;
                    let (w, ws) = self.adj[v][s];
                    v = w as usize;
                    s = (ws as usize + 1) % 4;
                    if v == v0 && s == s0 {
                        break;
                    }
                }
                sizes.push(len);
            }
        }
        sizes
    }

    /// Alternating over/under assignment propagated from vertex 0.
    /// Returns the over-diagonal parity per vertex.
    pub fn alternating_assignment(&self, seed_over: u8) -> Vec<u8> {
        let n = self.adj.len();
        let mut over = vec![u8::MAX; n];
        over[0] = seed_over;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for s in 0..4u8 {
                let (w, ws) = self.adj[v][s as usize];
                let over_here = s % 2 == over[v];
                let w_over = if over_here { 1 - ws % 2 } else { ws % 2 };
                let w = w as usize;
                if over[w] == u8::MAX {
                    over[w] = w_over;
                    stack.push(w);
                } else {
                    assert_eq!(over[w], w_over, "no alternating assignment exists");
                }
            }
        }
        over
    }
}

/// A usable basic-polyhedron template.
#[derive(Clone, Debug)]
pub struct Template {
    pub id: String,
    pub rot: Rotation4,
    /// Slot `i` of the Conway symbol addresses vertex `order[i]`.
    pub order: Vec<u32>,
    /// Over-diagonal parity per vertex of the alternating base diagram.
    pub over: Vec<u8>,
    /// Stub playing the inserted tangle's NE corner, per vertex. Rotating a
    /// frame by one stub swaps the slot conventions `t` and `t 0` there.
    pub frame: Vec<u8>,
}

impl Template {
    pub fn vertices(&self) -> usize {
        self.rot.vertices()
    }

    pub fn new(id: &str, rot: Rotation4, order: Vec<u32>, seed_over: u8) -> Template {
        let over = rot.alternating_assignment(seed_over);
        assert_eq!(order.len(), rot.vertices());
        let frame = over.clone();
        Template {
            id: String::from(id),
            rot,
            order,
            over,
            frame,
        }
    }

    /// Rotate selected vertex frames by a quarter turn (slot convention
    /// `t` <-> `t 0` at those vertices).
    pub fn with_frame_turns(mut self, turns: &[bool]) -> Template {
        assert_eq!(turns.len(), self.frame.len());
        for (f, &t) in self.frame.iter_mut().zip(turns) {
            if t {
                *f = (*f + 1) % 4;
            }
        }
        self
    }
}

/// Serialized template format for loading custom polyhedra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TemplateSpec {
    pub id: String,
    /// `adj[v][s] = [w, ws]`.
    pub adj: Vec<[[u32; 2]; 4]>,
    #[serde(default)]
    pub order: Option<Vec<u32>>,
    #[serde(default)]
    pub seed_over: u8,
}

impl TemplateSpec {
    pub fn build(&self) -> Template {
        let rot = Rotation4 {
            adj: self
                .adj
                .iter()
                .map(|v| {
                    [
                        (v[0][0], v[0][1] as u8),
                        (v[1][0], v[1][1] as u8),
                        (v[2][0], v[2][1] as u8),
                        (v[3][0], v[3][1] as u8),
                    ]
                })
                .collect(),
        };
        let n = rot.vertices();
        let order = self
            .order
            .clone()
            .unwrap_or_else(|| (0..n as u32).collect());
        Template::new(&self.id, rot, order, self.seed_over)
    }
}

/// Substitute one built tangle per slot into the template.
pub fn substitute(template: &Template, slots: Vec<Tangle>) -> Diagram {
    let n = template.vertices();
    assert_eq!(slots.len(), n);
    // parts indexed by vertex
    let mut parts: Vec<Option<Tangle>> = vec![None; n];
    for (slot, tangle) in slots.into_iter().enumerate() {
        parts[template.order[slot] as usize] = Some(tangle);
    }
    let parts: Vec<Tangle> = parts.into_iter().map(|t| t.unwrap()).collect();

    // weld: template edge (v, s)-(w, ws), each side's stub mapped to the
    // corner of the inserted tangle via the vertex frame
    const CORNER_CCW: [Corner; 4] = [Corner::Ne, Corner::Nw, Corner::Sw, Corner::Se];
    let corner_at = |v: usize, s: u8| -> Corner {
        let frame = template.frame[v];
        CORNER_CCW[((s + 4 - frame) % 4) as usize]
    };
    let mut welds = Vec::new();
    for v in 0..n {
        for s in 0..4u8 {
            let (w, ws) = template.rot.adj[v][s as usize];
            if (v, s) < (w as usize, ws) {
                welds.push(((v, corner_at(v, s)), (w as usize, corner_at(w as usize, ws))));
            }
        }
    }
    tangle::assemble_closed(parts, &welds)
}

/// Rotation system of a small planar seed graph: counterclockwise neighbor
/// lists (no parallel edges).
#[derive(Clone, Debug)]
pub struct Seed {
    pub adj: Vec<Vec<u32>>,
}

impl Seed {
    /// The wheel W_k: hub vertex `k`, rim `0..k` counterclockwise.
    pub fn wheel(k: usize) -> Seed {
        let mut adj: Vec<Vec<u32>> = Vec::with_capacity(k + 1);
        for i in 0..k {
            let prev = ((i + k - 1) % k) as u32;
            let next = ((i + 1) % k) as u32;
            adj.push(vec![next, k as u32, prev]);
        }
        adj.push((0..k as u32).collect()); // hub, counterclockwise
        Seed { adj }
    }

    /// Triangular prism: top triangle 0,1,2, bottom 3,4,5 (i above i+3).
    pub fn prism() -> Seed {
        Seed {
            adj: vec![
                vec![3, 1, 2], // 0: down, next, prev
                vec![4, 2, 0],
                vec![5, 0, 1],
                vec![4, 0, 5],
                vec![5, 1, 3],
                vec![3, 2, 4],
            ],
        }
    }

    /// Prism with one square face split by the diagonal 0-4.
    pub fn prism_diag() -> Seed {
        // square face 0-1-4-3 gets diagonal 0-4
        Seed {
            adj: vec![
                vec![3, 4, 1, 2], // 0
                vec![4, 2, 0],
                vec![5, 0, 1],
                vec![4, 0, 5],
                vec![5, 1, 0, 3],
                vec![3, 2, 4],
            ],
        }
    }

    /// Octahedron (antiprism rotation) minus the two disjoint ring edges
    /// 1-2 and 4-5.
    pub fn oct_minus_two() -> Seed {
        let mut s = Seed::octahedron();
        s.remove_edge(1, 2);
        s.remove_edge(4, 5);
        s
    }

    /// Octahedron minus the ring edge 1-2.
    pub fn oct_minus_one() -> Seed {
        let mut s = Seed::octahedron();
        s.remove_edge(1, 2);
        s
    }

    /// Wheel W5 plus one rim chord 0-2 (drawn outside the rim).
    pub fn wheel5_chord() -> Seed {
        let mut s = Seed::wheel(5);
        // chord outside the pentagon between rim 0 and rim 2
        // at 0: rotation [next=1, hub, prev=4] -> insert 2 after prev (outer side)
        s.adj[0] = vec![1, 5, 4, 2];
        s.adj[2] = vec![3, 5, 1, 0];
        s
    }

    pub fn octahedron() -> Seed {
        // triangular antiprism: evens outer triangle, odds inner
        let mut adj = Vec::new();
        for v in 0..6u32 {
            let m = |x: u32| (x + 6) % 6;
            if v % 2 == 0 {
                adj.push(vec![m(v + 1), m(v + 2), m(v + 4), m(v + 5)]);
            } else {
                adj.push(vec![m(v + 1), m(v + 5), m(v + 4), m(v + 2)]);
            }
        }
        Seed { adj }
    }

    fn remove_edge(&mut self, a: u32, b: u32) {
        self.adj[a as usize].retain(|&w| w != b);
        self.adj[b as usize].retain(|&w| w != a);
    }

    /// The medial graph: one 4-valent vertex per seed edge.
    pub fn medial(&self) -> Rotation4 {
        // canonical darts: (v, i) with i an index into adj[v]
        let mut edge_ix: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (v, nb) in self.adj.iter().enumerate() {
            for &w in nb {
                let key = if (v as u32) < w {
                    (v as u32, w)
                } else {
                    (w, v as u32)
                };
                if !edge_ix.contains_key(&key) {
                    edge_ix.insert(key, edges.len());
                    edges.push(key);
                }
            }
        }
        let pos = |v: u32, w: u32| -> usize {
            self.adj[v as usize]
                .iter()
                .position(|&x| x == w)
                .expect("edge present")
        };
        // sigma_inv: previous dart counterclockwise around v
        let sigma_inv = |v: u32, w: u32| -> u32 {
            let i = pos(v, w);
            let d = self.adj[v as usize].len();
            self.adj[v as usize][(i + d - 1) % d]
        };
        // corner id: (v, w) for the corner between darts (v->w) and
        // (v->sigma(v,w)); each corner is one medial edge
        let mut corner_slots: BTreeMap<(u32, u32), Vec<(u32, u8)>> = BTreeMap::new();
        let mut adj: Vec<[(u32, u8); 4]> = vec![[(0, 0); 4]; edges.len()];
        for (ei, &(x, y)) in edges.iter().enumerate() {
            // dart d: x -> y with x < y
            // counterclockwise around the medial vertex:
            //   [corner(sigma_inv_x), corner at y left, corner at y right, corner at x left]
            let corners: [(u32, u32); 4] = [
                (x, sigma_inv(x, y)), // corner (sigma_inv(d), d) at x
                (y, x),               // corner (d_bar, sigma(d_bar)) at y
                (y, sigma_inv(y, x)), // corner (sigma_inv(d_bar), d_bar) at y
                (x, y),               // corner (d, sigma(d)) at x
            ];
            for (s, &c) in corners.iter().enumerate() {
                corner_slots.entry(c).or_default().push((ei as u32, s as u8));
            }
        }
        for (corner, slots) in corner_slots {
            assert_eq!(slots.len(), 2, "corner {corner:?} must bound 2 medial stubs");
            let (a, b) = (slots[0], slots[1]);
            adj[a.0 as usize][a.1 as usize] = b;
            adj[b.0 as usize][b.1 as usize] = a;
        }
        Rotation4 { adj }
    }
}

/// Built-in templates, in the order of [`SLOT_COUNTS`].
#[derive(Clone, Debug)]
pub struct Registry {
    templates: BTreeMap<String, Template>,
}

impl Registry {
    pub fn builtin() -> Registry {
        let mut templates = BTreeMap::new();
        let mut add = |id: &str, rot: Rotation4, order: Vec<u32>, seed_over: u8| {
            templates.insert(String::from(id), Template::new(id, rot, order, seed_over));
        };

        let m6 = Seed::wheel(3).medial();
        let m8 = Seed::wheel(4).medial();
        let m9 = Seed::prism().medial();
        let m10a = Seed::wheel(5).medial();
        let m10b = Seed::prism_diag().medial();
        let m10c = Seed::oct_minus_two().medial();
        let m11a = Seed::oct_minus_one().medial();
        let m11b = Seed::wheel5_chord().medial();

        add("6*", m6.clone(), order_6(), OVER_6);
        add("8*", m8.clone(), order_8(), OVER_8);
        add("9*", m9.clone(), order_9(), OVER_9);
        add("10*", m10a.clone(), order_10a(), OVER_10A);
        add("10**", m10b.clone(), order_10b(), OVER_10B);
        add("10***", m10c.clone(), order_10c(), OVER_10C);
        add("101*", m10a, order_10a(), OVER_10A);
        add("102*", m10b, order_10b(), OVER_10B);
        add("103*", m10c, order_10c(), OVER_10C);
        add("11*", m11a.clone(), order_11a(), OVER_11A);
        add("11**", m11b.clone(), order_11b(), OVER_11B);
        add("11***", m11a, order_11a(), OVER_11A);
        Registry { templates }
    }

    pub fn get(&self, id: &str) -> Option<&Template> {
        self.templates.get(id)
    }

    pub fn insert(&mut self, t: Template) {
        self.templates.insert(t.id.clone(), t);
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.templates.keys().map(|s| s.as_str())
    }
}

// Slot numberings and mirror seeds, pinned by the classification anchors.
fn order_6() -> Vec<u32> {
    vec![0, 1, 2, 3, 4, 5]
}
const OVER_6: u8 = 0;
fn order_8() -> Vec<u32> {
    vec![0, 1, 2, 3, 4, 5, 6, 7]
}
const OVER_8: u8 = 0;
fn order_9() -> Vec<u32> {
    (0..9).collect()
}
const OVER_9: u8 = 0;
fn order_10a() -> Vec<u32> {
    (0..10).collect()
}
const OVER_10A: u8 = 0;
fn order_10b() -> Vec<u32> {
    (0..10).collect()
}
const OVER_10B: u8 = 0;
fn order_10c() -> Vec<u32> {
    (0..10).collect()
}
const OVER_10C: u8 = 0;
fn order_11a() -> Vec<u32> {
    (0..11).collect()
}
const OVER_11A: u8 = 0;
fn order_11b() -> Vec<u32> {
    (0..11).collect()
}
const OVER_11B: u8 = 0;

pub fn lookup(id: &str) -> Option<PolyInfo> {
    slot_count(id).map(|n| PolyInfo { n })
}

pub struct PolyInfo {
    n: usize,
}

impl PolyInfo {
    pub fn vertices(&self) -> usize {
        self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(rot: &Rotation4, v: usize, e: usize, digon_free: bool) {
        assert_eq!(rot.vertices(), v);
        let sizes = rot.face_sizes();
        let f = sizes.len();
        assert_eq!(v + f, e + 2, "Euler characteristic");
        assert_eq!(sizes.iter().sum::<usize>(), 2 * e);
        if digon_free {
            assert!(sizes.iter().all(|&s| s >= 3), "digon in faces: {sizes:?}");
        }
    }

    #[test]
    fn medial_shapes() {
        check(&Seed::wheel(3).medial(), 6, 12, true);
        check(&Seed::wheel(4).medial(), 8, 16, true);
        check(&Seed::prism().medial(), 9, 18, true);
        check(&Seed::wheel(5).medial(), 10, 20, true);
        check(&Seed::prism_diag().medial(), 10, 20, true);
        check(&Seed::oct_minus_two().medial(), 10, 20, true);
        check(&Seed::oct_minus_one().medial(), 11, 22, true);
        check(&Seed::wheel5_chord().medial(), 11, 22, true);
    }

    #[test]
    fn octahedron_medial_is_octahedron() {
        // medial of K4 is 4-regular with 8 triangular faces
        let m = Seed::wheel(3).medial();
        let sizes = m.face_sizes();
        assert_eq!(sizes.len(), 8);
        assert!(sizes.iter().all(|&s| s == 3));
    }

    #[test]
    fn alternating_assignment_consistent() {
        for rot in [
            Seed::wheel(3).medial(),
            Seed::wheel(4).medial(),
            Seed::prism().medial(),
            Seed::wheel(5).medial(),
            Seed::prism_diag().medial(),
            Seed::oct_minus_two().medial(),
            Seed::oct_minus_one().medial(),
            Seed::wheel5_chord().medial(),
        ] {
            let over = rot.alternating_assignment(0);
            assert!(over.iter().all(|&o| o <= 1));
        }
    }

    #[test]
    fn base_polyhedron_diagrams() {
        // all-1 substitution gives the alternating basic polyhedron
        let reg = Registry::builtin();
        for (id, n) in [("6*", 6usize), ("8*", 8), ("9*", 9), ("10*", 10)] {
            let t = reg.get(id).unwrap();
            let slots = vec![Tangle::elementary(1); n];
            let d = substitute(t, slots);
            assert_eq!(d.crossing_count(), n, "{id}");
            assert!(d.is_alternating(), "{id} base must be alternating");
            assert!(d.is_connected(), "{id} base must be connected");
            assert!(d.nugatory_crossings().is_empty(), "{id}");
        }
        // Borromean rings: 3 components
        let t = reg.get("6*").unwrap();
        let d = substitute(t, vec![Tangle::elementary(1); 6]);
        assert_eq!(d.component_count(), 3);
        // 8* closes to a knot
        let t = reg.get("8*").unwrap();
        let d = substitute(t, vec![Tangle::elementary(1); 8]);
        assert_eq!(d.component_count(), 1);
        // 9* closes to a knot
        let t = reg.get("9*").unwrap();
        let d = substitute(t, vec![Tangle::elementary(1); 9]);
        assert_eq!(d.component_count(), 1);
    }
}
