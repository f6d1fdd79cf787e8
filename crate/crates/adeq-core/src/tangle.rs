//! Tangle algebra: twist regions, sum, product, ramification, closures, and
//! assembly of [`ConwayExpr`] trees into closed diagrams.
//!
//! A tangle is a fragment of a link diagram inside a disk with four boundary
//! endpoints NW, NE, SE, SW. Crossings carry their four legs in
//! counterclockwise cyclic order `0=NE, 1=NW, 2=SW, 3=SE`; the `over` field
//! selects the over-strand diagonal: legs `(over, over+2)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::conway::ConwayExpr;
use crate::diagram::{Crossing, Diagram};
use crate::polyhedra;

/// Boundary corner of a tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Corner {
    Nw,
    Ne,
    Se,
    Sw,
}

pub const CORNERS: [Corner; 4] = [Corner::Nw, Corner::Ne, Corner::Se, Corner::Sw];

/// Strand endpoint: a crossing leg (port `4*crossing + leg`) or a boundary
/// terminal. Terminals of the tangle itself carry tag 0; other tags appear
/// transiently while gluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Node {
    Leg(u32),
    Term(u32, Corner),
}

/// Over-strand diagonal of the positive elementary crossing. The negative
/// crossing uses the other diagonal. Pinned by the signed pretzel classes:
/// `2,2,-2` must come out `-adequate`.
pub(crate) const POSITIVE_OVER: u8 = 1;

/// A 2-string tangle under construction.
#[derive(Clone, Debug)]
pub struct Tangle {
    /// Over-diagonal per crossing (legs `(over, over+2)` pass on top).
    crossings: Vec<u8>,
    /// Arc involution over legs and terminals.
    conn: BTreeMap<Node, Node>,
    /// Closed crossing-free circles swallowed during gluing.
    free_loops: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    /// Join NW-NE and SW-SE.
    Numerator,
    /// Join NW-SW and NE-SE.
    Denominator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Sum,
    Product,
    Ramification,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    UnknownPolyhedron(String),
    SlotCount { id: String, got: usize, want: usize },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::UnknownPolyhedron(id) => write!(f, "unknown basic polyhedron `{id}`"),
            BuildError::SlotCount { id, got, want } => {
                write!(f, "basic polyhedron `{id}` takes {want} slots, got {got}")
            }
        }
    }
}

fn link(conn: &mut BTreeMap<Node, Node>, a: Node, b: Node) {
    conn.insert(a, b);
    conn.insert(b, a);
}

/// Remove node `x` and return its arc partner, dropping the back-pointer.
fn unlink(conn: &mut BTreeMap<Node, Node>, x: Node) -> Node {
    let p = conn.remove(&x).expect("node present in arc map");
    if p != x {
        conn.remove(&p);
    }
    p
}

impl Tangle {
    /// The 0-tangle: two horizontal strands NW-NE and SW-SE.
    pub fn zero() -> Self {
        let mut conn = BTreeMap::new();
        link(&mut conn, Node::Term(0, Corner::Nw), Node::Term(0, Corner::Ne));
        link(&mut conn, Node::Term(0, Corner::Sw), Node::Term(0, Corner::Se));
        Tangle {
            crossings: Vec::new(),
            conn,
            free_loops: 0,
        }
    }

    /// A single crossing; `sign > 0` is the positive elementary tangle `1`.
    pub fn elementary(sign: i32) -> Self {
        let over = if sign > 0 {
            POSITIVE_OVER
        } else {
            1 - POSITIVE_OVER
        };
        let mut conn = BTreeMap::new();
        link(&mut conn, Node::Term(0, Corner::Ne), Node::Leg(0));
        link(&mut conn, Node::Term(0, Corner::Nw), Node::Leg(1));
        link(&mut conn, Node::Term(0, Corner::Sw), Node::Leg(2));
        link(&mut conn, Node::Term(0, Corner::Se), Node::Leg(3));
        Tangle {
            crossings: alloc::vec![over],
            conn,
            free_loops: 0,
        }
    }

    /// A horizontal twist region of `|k|` crossings with the sign of `k`.
    pub fn integer(k: i32) -> Self {
        if k == 0 {
            return Tangle::zero();
        }
        let mut t = Tangle::elementary(k.signum());
        for _ in 1..k.unsigned_abs() {
            t = sum(t, Tangle::elementary(k.signum()));
        }
        t
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Mirror image: every crossing changes its over-strand.
    pub fn mirror(mut self) -> Self {
        for over in &mut self.crossings {
            *over = 1 - *over;
        }
        self
    }

    /// Rotate 90 degrees counterclockwise: the point at NE moves to NW,
    /// NW to SW, SW to SE, SE to NE. Internal combinatorics are unchanged.
    pub fn rotate_ccw(self) -> Self {
        fn perm(c: Corner) -> Corner {
            match c {
                Corner::Ne => Corner::Nw,
                Corner::Nw => Corner::Sw,
                Corner::Sw => Corner::Se,
                Corner::Se => Corner::Ne,
            }
        }
        let map = |n: Node| match n {
            Node::Term(t, c) => Node::Term(t, perm(c)),
            leg => leg,
        };
        Tangle {
            crossings: self.crossings,
            conn: self.conn.iter().map(|(&a, &b)| (map(a), map(b))).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Offset legs by `offset` crossings and move tag-0 terminals to `tag`.
    fn retagged(self, tag: u32, offset: u32) -> Self {
        let map = |n: Node| match n {
            Node::Leg(p) => Node::Leg(p + 4 * offset),
            Node::Term(0, c) => Node::Term(tag, c),
            t => t,
        };
        Tangle {
            crossings: self.crossings,
            conn: self.conn.iter().map(|(&a, &b)| (map(a), map(b))).collect(),
            free_loops: self.free_loops,
        }
    }
}

/// Glue a list of tangles: weld the given terminal pairs and expose the rest
/// as the result's corners. Every non-welded terminal must appear in
/// `expose` exactly once (or the assembly must be closed).
fn glue(
    parts: Vec<Tangle>,
    welds: &[((usize, Corner), (usize, Corner))],
    expose: &[(Corner, (usize, Corner))],
) -> Tangle {
    let mut crossings: Vec<u8> = Vec::new();
    let mut conn: BTreeMap<Node, Node> = BTreeMap::new();
    let mut free_loops = 0u32;
    for (i, part) in parts.into_iter().enumerate() {
        let offset = crossings.len() as u32;
        let part = part.retagged(i as u32 + 1, offset);
        crossings.extend(&part.crossings);
        free_loops += part.free_loops;
        conn.extend(part.conn);
    }
    for &((pa, ca), (pb, cb)) in welds {
        let a = Node::Term(pa as u32 + 1, ca);
        let b = Node::Term(pb as u32 + 1, cb);
        let x = unlink(&mut conn, a);
        if x == b {
            free_loops += 1;
            continue;
        }
        let y = unlink(&mut conn, b);
        link(&mut conn, x, y);
    }
    for &(result_corner, (p, c)) in expose {
        let t = Node::Term(p as u32 + 1, c);
        let partner = unlink(&mut conn, t);
        link(&mut conn, Node::Term(0, result_corner), partner);
    }
    Tangle {
        crossings,
        conn,
        free_loops,
    }
}

/// Tangle sum: `a + b`, joining a.NE-b.NW and a.SE-b.SW.
pub fn sum(a: Tangle, b: Tangle) -> Tangle {
    glue(
        alloc::vec![a, b],
        &[
            ((0, Corner::Ne), (1, Corner::Nw)),
            ((0, Corner::Se), (1, Corner::Sw)),
        ],
        &[
            (Corner::Nw, (0, Corner::Nw)),
            (Corner::Sw, (0, Corner::Sw)),
            (Corner::Ne, (1, Corner::Ne)),
            (Corner::Se, (1, Corner::Se)),
        ],
    )
}

/// Conway's tangle reflection, applied to the left operand of a product and
/// to every ramification entry: a quarter turn together with a mirror.
pub fn turn(t: Tangle) -> Tangle {
    t.rotate_ccw().mirror()
}

/// Conway product of two tangles: `a b = turn(a) + b`.
pub fn product(a: Tangle, b: Tangle) -> Tangle {
    sum(turn(a), b)
}

/// Comma (pretzel) join of a list of tangles: `(a,b,..) = turn(a)+turn(b)+..`.
pub fn ramification(parts: Vec<Tangle>) -> Tangle {
    let mut it = parts.into_iter();
    let mut acc = turn(it.next().expect("ramification of nothing"));
    for p in it {
        acc = sum(acc, turn(p));
    }
    acc
}

/// Generic combine entry point.
pub fn combine(op: CombineOp, parts: Vec<Tangle>) -> Tangle {
    assert!(parts.len() >= 2, "combine needs at least 2 parts");
    match op {
        CombineOp::Sum => {
            let mut it = parts.into_iter();
            let mut acc = it.next().unwrap();
            for p in it {
                acc = sum(acc, p);
            }
            acc
        }
        CombineOp::Product => {
            let mut it = parts.into_iter();
            let mut acc = it.next().unwrap();
            for p in it {
                acc = product(acc, p);
            }
            acc
        }
        CombineOp::Ramification => ramification(parts),
    }
}

/// Close a tangle into a diagram.
pub fn close(t: Tangle, mode: ClosureMode) -> Diagram {
    let welds: [((usize, Corner), (usize, Corner)); 2] = match mode {
        ClosureMode::Numerator => [
            ((0, Corner::Nw), (0, Corner::Ne)),
            ((0, Corner::Sw), (0, Corner::Se)),
        ],
        ClosureMode::Denominator => [
            ((0, Corner::Nw), (0, Corner::Sw)),
            ((0, Corner::Ne), (0, Corner::Se)),
        ],
    };
    compile(glue(alloc::vec![t], &welds, &[]))
}

/// Assemble tangles into a closed diagram by welding all their corners
/// pairwise (used for basic-polyhedron substitution).
pub(crate) fn assemble_closed(
    parts: Vec<Tangle>,
    welds: &[((usize, Corner), (usize, Corner))],
) -> Diagram {
    compile(glue(parts, welds, &[]))
}

/// Turn a corner-free tangle into a [`Diagram`].
fn compile(t: Tangle) -> Diagram {
    let n = t.crossings.len();
    let mut arc = alloc::vec![u32::MAX; 4 * n];
    for (&a, &b) in &t.conn {
        match (a, b) {
            (Node::Leg(p), Node::Leg(q)) => arc[p as usize] = q,
            _ => panic!("unclosed tangle end: {a:?} -> {b:?}"),
        }
    }
    let crossings = t.crossings.into_iter().map(|over| Crossing { over }).collect();
    Diagram::new(crossings, arc, t.free_loops)
}

/// Build the tangle denoted by a Conway expression.
pub fn build_tangle(e: &ConwayExpr) -> Result<Tangle, BuildError> {
    Ok(match e {
        ConwayExpr::Rational { terms } => {
            let mut acc = Tangle::integer(terms[0]);
            for &t in &terms[1..] {
                acc = product(acc, Tangle::integer(t));
            }
            acc
        }
        ConwayExpr::Product { factors } => {
            let mut acc = build_tangle(&factors[0])?;
            for f in &factors[1..] {
                acc = product(acc, build_tangle(f)?);
            }
            acc
        }
        ConwayExpr::Pretzel { parts, twists } => {
            let built = parts
                .iter()
                .map(build_tangle)
                .collect::<Result<Vec<_>, _>>()?;
            let mut acc = ramification(built);
            let sign = twists.signum();
            for _ in 0..twists.unsigned_abs() {
                acc = sum(acc, Tangle::elementary(sign));
            }
            acc
        }
        ConwayExpr::Mirror { inner } => build_tangle(inner)?.mirror(),
        ConwayExpr::Polyhedral { .. } => {
            panic!("polyhedral expressions close into diagrams directly; use build_diagram")
        }
    })
}

/// Build the closed link diagram denoted by a Conway expression
/// (numerator closure, or polyhedral substitution).
pub fn build_diagram(e: &ConwayExpr) -> Result<Diagram, BuildError> {
    let registry = polyhedra::Registry::builtin();
    build_diagram_with(e, &registry)
}

/// As [`build_diagram`] with a custom basic-polyhedron registry.
pub fn build_diagram_with(
    e: &ConwayExpr,
    registry: &polyhedra::Registry,
) -> Result<Diagram, BuildError> {
    match e {
        ConwayExpr::Polyhedral { poly, slots } => {
            let template = registry
                .get(poly)
                .ok_or_else(|| BuildError::UnknownPolyhedron(poly.clone()))?;
            if slots.len() != template.vertices() {
                return Err(BuildError::SlotCount {
                    id: poly.clone(),
                    got: slots.len(),
                    want: template.vertices(),
                });
            }
            let built = slots
                .iter()
                .map(build_tangle)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(polyhedra::substitute(template, built))
        }
        ConwayExpr::Mirror { inner } => Ok(build_diagram_with(inner, registry)?.mirror()),
        _ => Ok(close(build_tangle(e)?, ClosureMode::Numerator)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conway::parse_conway;

    fn diagram(s: &str) -> Diagram {
        build_diagram(&parse_conway(s).unwrap()).unwrap()
    }

    #[test]
    fn hopf_link() {
        let d = diagram("2");
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn trefoil() {
        let d = diagram("3");
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert!(d.is_alternating());
    }

    #[test]
    fn denominator_closure_of_two() {
        let t = build_tangle(&parse_conway("2").unwrap()).unwrap();
        let d = close(t, ClosureMode::Denominator);
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn figure_eight() {
        let d = diagram("2 2");
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.component_count(), 1);
        assert!(d.is_alternating(), "figure-eight must build alternating");
    }

    #[test]
    fn zero_closures() {
        let d = close(Tangle::zero(), ClosureMode::Numerator);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 2);
        let d = close(Tangle::zero(), ClosureMode::Denominator);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn sum_with_zero_is_identity() {
        let a = build_tangle(&parse_conway("2 1").unwrap()).unwrap();
        let n = a.crossing_count();
        let s = sum(a, Tangle::zero());
        assert_eq!(s.crossing_count(), n);
        let d = close(s, ClosureMode::Numerator);
        assert_eq!(d.component_count(), diagram("2 1").component_count());
    }

    #[test]
    fn mirror_is_involution() {
        let d = diagram("3,2 1,-2");
        let dd = d.clone().mirror().mirror();
        assert_eq!(d.crossing_count(), dd.crossing_count());
        assert_eq!(d.component_count(), dd.component_count());
        assert!(d
            .crossings()
            .iter()
            .zip(dd.crossings())
            .all(|(a, b)| a.over == b.over));
    }

    #[test]
    fn crossing_counts_match_symbols() {
        for s in [
            "2,2,-2,-2",
            "3 1 5 4",
            "2,2,2+",
            "2 1,2,2",
            "(2,2) 1 (2,2)",
            "((1,(1,3),1,1,1,1),1,1,1,1)",
        ] {
            let e = parse_conway(s).unwrap();
            assert_eq!(
                diagram(s).crossing_count(),
                e.crossing_count(),
                "crossing count for `{s}`"
            );
        }
    }

    #[test]
    fn alternating_positive_builds() {
        for s in [
            "2 2",
            "2 1 2",
            "2 2 2",
            "3 1 5 4",
            "2,2,2",
            "2 1,2,2",
            "2,2,2+",
            "(2,2) (2,2)",
        ] {
            assert!(diagram(s).is_alternating(), "`{s}` should be alternating");
        }
    }
}
