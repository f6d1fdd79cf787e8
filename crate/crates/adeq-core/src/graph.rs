//! Multigraphs on state circles: reduction moves, chromatic polynomials,
//! vertex connectivity and block decompositions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

/// An undirected multigraph; loops allowed, multiplicity = repeated pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

/// Chromatic polynomial, coefficients indexed by power of the variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromPoly(pub Vec<i128>);

impl ChromPoly {
    pub fn zero() -> Self {
        ChromPoly(Vec::new())
    }

    pub fn one() -> Self {
        ChromPoly(vec![1])
    }

    fn monomial(power: usize) -> Self {
        let mut v = vec![0; power + 1];
        v[power] = 1;
        ChromPoly(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn eval(&self, y: i128) -> i128 {
        self.0.iter().rev().fold(0i128, |acc, &c| acc * y + c)
    }

    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    fn add(&self, other: &ChromPoly) -> ChromPoly {
        let mut v = vec![0i128; self.0.len().max(other.0.len())];
        for (i, &c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, &c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        ChromPoly(v).trim()
    }

    fn sub(&self, other: &ChromPoly) -> ChromPoly {
        let mut v = vec![0i128; self.0.len().max(other.0.len())];
        for (i, &c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, &c) in other.0.iter().enumerate() {
            v[i] -= c;
        }
        ChromPoly(v).trim()
    }

    pub fn mul(&self, other: &ChromPoly) -> ChromPoly {
        if self.is_zero() || other.is_zero() {
            return ChromPoly::zero();
        }
        let mut v = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        ChromPoly(v).trim()
    }

    /// `y (y-1)^k`: chromatic polynomial of a tree with `k` edges.
    fn tree(k: usize) -> ChromPoly {
        let mut p = ChromPoly(vec![0, 1]);
        let lin = ChromPoly(vec![-1, 1]);
        for _ in 0..k {
            p = p.mul(&lin);
        }
        p
    }
}

impl core::fmt::Display for ChromPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = c.unsigned_abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        f.write_str("y")?;
                    } else {
                        write!(f, "y^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Result of applying the reduction moves to a state graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Multigraph,
    /// Components consisting only of degree-2 vertices cannot be collapsed;
    /// they are left in place and flagged.
    pub pure_cycle: bool,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut g = Multigraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: u32, b: u32) {
        assert!((a as usize) < self.n && (b as usize) < self.n);
        self.edges.push(if a <= b { (a, b) } else { (b, a) });
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    /// Degrees counting multiplicity; a loop adds 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            d[a as usize] += 1;
            d[b as usize] += 1;
        }
        d
    }

    /// Drop duplicate edges (and keep loops as single loops).
    pub fn simplified(&self) -> Multigraph {
        let mut seen = alloc::collections::BTreeSet::new();
        let mut edges = Vec::new();
        for &e in &self.edges {
            if seen.insert(e) {
                edges.push(e);
            }
        }
        Multigraph {
            n: self.n,
            edges,
        }
    }

    fn adjacency(&self) -> Vec<Vec<(u32, usize)>> {
        let mut adj: Vec<Vec<(u32, usize)>> = vec![Vec::new(); self.n];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            adj[a as usize].push((b, i));
            if a != b {
                adj[b as usize].push((a, i));
            }
        }
        adj
    }

    pub fn component_count(&self) -> usize {
        self.vertex_components().len()
    }

    pub fn vertex_components(&self) -> Vec<Vec<u32>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s as u32];
            seen[s] = true;
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &(w, _) in &adj[v as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    pub fn is_cut_vertex(&self, v: u32) -> bool {
        self.cut_vertices().contains(&v)
    }

    /// Blocks (maximal biconnected subgraphs, as edge index sets) and cut
    /// vertices, via the DFS lowpoint algorithm. A bridge is a block of one
    /// edge; parallel edges lie in a common block. Loops belong to no block.
    pub fn blocks(&self) -> (Vec<Vec<usize>>, Vec<u32>) {
        struct Ctx<'a> {
            adj: &'a [Vec<(u32, usize)>],
            num: Vec<usize>,
            low: Vec<usize>,
            timer: usize,
            stack: Vec<usize>,
            blocks: Vec<Vec<usize>>,
            is_cut: Vec<bool>,
        }
        fn dfs(ctx: &mut Ctx, v: usize, parent_edge: usize) -> usize {
            let mut children = 0usize;
            for i in 0..ctx.adj[v].len() {
                let (w, ei) = ctx.adj[v][i];
                let w = w as usize;
                if ei == parent_edge || w == v {
                    continue;
                }
                if ctx.num[w] == usize::MAX {
                    children += 1;
                    ctx.stack.push(ei);
                    ctx.num[w] = ctx.timer;
                    ctx.low[w] = ctx.timer;
                    ctx.timer += 1;
                    dfs(ctx, w, ei);
                    if ctx.low[w] < ctx.low[v] {
                        ctx.low[v] = ctx.low[w];
                    }
                    if ctx.low[w] >= ctx.num[v] {
                        let mut blk = Vec::new();
                        while let Some(e) = ctx.stack.pop() {
                            blk.push(e);
                            if e == ei {
                                break;
                            }
                        }
                        ctx.blocks.push(blk);
                        if parent_edge != usize::MAX {
                            ctx.is_cut[v] = true;
                        }
                    }
                } else if ctx.num[w] < ctx.num[v] {
                    ctx.stack.push(ei);
                    if ctx.num[w] < ctx.low[v] {
                        ctx.low[v] = ctx.num[w];
                    }
                }
            }
            children
        }

        let adj = self.adjacency();
        let mut ctx = Ctx {
            adj: &adj,
            num: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            timer: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
            is_cut: vec![false; self.n],
        };
        for s in 0..self.n {
            if ctx.num[s] != usize::MAX {
                continue;
            }
            ctx.num[s] = ctx.timer;
            ctx.low[s] = ctx.timer;
            ctx.timer += 1;
            let children = dfs(&mut ctx, s, usize::MAX);
            if children > 1 {
                ctx.is_cut[s] = true;
            }
        }
        let cuts = ctx
            .is_cut
            .iter()
            .enumerate()
            .filter_map(|(v, &c)| c.then_some(v as u32))
            .collect();
        (ctx.blocks, cuts)
    }

    pub fn cut_vertices(&self) -> Vec<u32> {
        self.blocks().1
    }

    /// Minimum vertex cut size between non-adjacent vertices (Menger via
    /// unit-capacity max-flow). `K_n` yields `n-1`; disconnected graphs 0.
    pub fn vertex_connectivity(&self) -> usize {
        let g = self.simplified();
        let n = g.n;
        if n <= 1 {
            return 0;
        }
        if !g.is_connected() {
            return 0;
        }
        let mut adj_set: Vec<alloc::collections::BTreeSet<u32>> = vec![Default::default(); n];
        for &(a, b) in &g.edges {
            if a != b {
                adj_set[a as usize].insert(b);
                adj_set[b as usize].insert(a);
            }
        }
        if g.edges.iter().filter(|&&(a, b)| a != b).count() == n * (n - 1) / 2 {
            return n - 1; // complete graph
        }
        let mut best = usize::MAX;
        for s in 0..n {
            for t in 0..n {
                if s >= t || adj_set[s].contains(&(t as u32)) {
                    continue;
                }
                best = best.min(g.min_vertex_cut(s, t, &adj_set));
            }
        }
        if best == usize::MAX {
            n - 1
        } else {
            best
        }
    }

    /// Max-flow with split vertices, unit capacities.
    fn min_vertex_cut(
        &self,
        s: usize,
        t: usize,
        adj_set: &[alloc::collections::BTreeSet<u32>],
    ) -> usize {
        // node 2v = v_in, 2v+1 = v_out
        let n = self.n;
        let mut cap: BTreeMap<(usize, usize), i32> = BTreeMap::new();
        for v in 0..n {
            cap.insert((2 * v, 2 * v + 1), if v == s || v == t { i32::MAX } else { 1 });
        }
        for (v, set) in adj_set.iter().enumerate() {
            for &w in set {
                cap.insert((2 * v + 1, 2 * (w as usize)), i32::MAX);
            }
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0usize;
        loop {
            // BFS for augmenting path
            let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
            let mut queue = alloc::collections::VecDeque::new();
            queue.push_back(source);
            prev.insert(source, source);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for (&(a, b), &c) in cap.range((u, 0)..(u + 1, 0)) {
                    debug_assert_eq!(a, u);
                    if c > 0 && !prev.contains_key(&b) {
                        prev.insert(b, u);
                        queue.push_back(b);
                    }
                }
            }
            if !prev.contains_key(&sink) {
                break;
            }
            let mut v = sink;
            while v != source {
                let u = prev[&v];
                *cap.get_mut(&(u, v)).unwrap() -= 1;
                *cap.entry((v, u)).or_insert(0) += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }

    /// Apply the state-graph reduction moves to a fixed point:
    /// multiplicity above 2 becomes a single edge, and maximal chains through
    /// degree-2 vertices collapse to a single edge between their anchors.
    pub fn reduce(&self) -> Reduction {
        let mut g = self.clone();
        let mut pure_cycle = false;
        loop {
            let mut changed = false;

            // (a) multiple edge reduction: multiplicity > 2 -> single edge
            let mut mult: BTreeMap<(u32, u32), usize> = BTreeMap::new();
            for &e in &g.edges {
                *mult.entry(e).or_insert(0) += 1;
            }
            if mult.values().any(|&m| m > 2) {
                let mut edges = Vec::new();
                for (&e, &m) in &mult {
                    let keep = if m > 2 { 1 } else { m };
                    for _ in 0..keep {
                        edges.push(e);
                    }
                }
                g.edges = edges;
                changed = true;
            }

            // (b) edge chain collapse: maximal run of degree-2 vertices
            // between two anchors becomes one edge
            let deg = g.degrees();
            let adj = g.adjacency();
            let mut collapsed = false;
            'search: for v in 0..g.n {
                if deg[v] != 2 || adj[v].is_empty() {
                    continue;
                }
                if adj[v].len() == 1 {
                    // both incidences on one edge: loop at v, or double edge
                    continue;
                }
                // walk left and right to the anchors
                let mut ends = [0u32; 2];
                let mut interior = vec![v as u32];
                let mut ok = true;
                for dir in 0..2 {
                    let (mut prev, mut cur) = (v as u32, adj[v][dir].0);
                    loop {
                        if deg[cur as usize] != 2 {
                            ends[dir] = cur;
                            break;
                        }
                        if cur == v as u32 {
                            // came back around: pure cycle component
                            ok = false;
                            break;
                        }
                        interior.push(cur);
                        let nbrs = &adj[cur as usize];
                        if nbrs.len() < 2 {
                            ok = false; // double edge inside the chain
                            break;
                        }
                        let next = if nbrs[0].0 == prev && nbrs.len() > 1 {
                            // pick the incidence that is not the one we came from;
                            // with parallel edges both go back, treat as stuck
                            if nbrs[1].0 == prev && nbrs[0].1 != nbrs[1].1 {
                                ok = false;
                                break;
                            }
                            nbrs[1].0
                        } else {
                            nbrs[0].0
                        };
                        prev = cur;
                        cur = next;
                    }
                    if !ok {
                        break;
                    }
                }
                if !ok {
                    pure_cycle = true;
                    continue 'search;
                }
                if ends[0] == ends[1] {
                    // chain returns to its source: collapsing would create a
                    // loop; inputs are adequate graphs, flag and skip
                    pure_cycle = true;
                    continue 'search;
                }
                // remove the chain edges and interior vertices' incidences
                let interior_set: alloc::collections::BTreeSet<u32> =
                    interior.iter().copied().collect();
                let mut edges = Vec::new();
                for &(a, b) in &g.edges {
                    if interior_set.contains(&a) || interior_set.contains(&b) {
                        continue;
                    }
                    edges.push((a, b));
                }
                edges.push(if ends[0] <= ends[1] {
                    (ends[0], ends[1])
                } else {
                    (ends[1], ends[0])
                });
                g = Multigraph {
                    n: g.n,
                    edges,
                }
                .drop_isolated(&interior_set);
                collapsed = true;
                changed = true;
                break 'search;
            }
            let _ = collapsed;

            if !changed {
                break;
            }
        }
        Reduction {
            graph: g,
            pure_cycle,
        }
    }

    /// Remove the given (now isolated) vertices, compacting indices.
    fn drop_isolated(&self, remove: &alloc::collections::BTreeSet<u32>) -> Multigraph {
        let mut map = vec![u32::MAX; self.n];
        let mut next = 0u32;
        for v in 0..self.n as u32 {
            if !remove.contains(&v) {
                map[v as usize] = next;
                next += 1;
            }
        }
        Multigraph {
            n: next as usize,
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| (map[a as usize], map[b as usize]))
                .collect(),
        }
    }

    /// Relabel vertices by `perm` (new index of old vertex `v` is `perm[v]`).
    pub fn relabeled(&self, perm: &[u32]) -> Multigraph {
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a as usize], perm[b as usize]);
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        Multigraph {
            n: self.n,
            edges,
        }
    }

    /// Canonical form of the simplified graph: a sorted edge list invariant
    /// under relabeling, computed by iterative color refinement with
    /// backtracking on ties (individualization-refinement, taking the
    /// lexicographically smallest branch).
    pub fn canonical_key(&self) -> Vec<(u32, u32)> {
        let g = self.simplified();
        let n = g.n;
        if n == 0 {
            return Vec::new();
        }
        let mut loops = vec![0u64; n];
        for &(a, b) in &g.edges {
            if a == b {
                loops[a as usize] += 1;
            }
        }
        let deg = g.degrees();
        let adj = g.adjacency();
        let init: Vec<u64> = (0..n).map(|v| ((deg[v] as u64) << 8) | loops[v]).collect();

        fn refine(adj: &[Vec<(u32, usize)>], color: &mut Vec<u64>) {
            let n = color.len();
            loop {
                let mut sig: Vec<(u64, Vec<u64>, usize)> = (0..n)
                    .map(|v| {
                        let mut nb: Vec<u64> =
                            adj[v].iter().map(|&(w, _)| color[w as usize]).collect();
                        nb.sort_unstable();
                        (color[v], nb, v)
                    })
                    .collect();
                sig.sort();
                let mut next = vec![0u64; n];
                let mut c = 0u64;
                for i in 0..n {
                    if i > 0 && (sig[i].0, &sig[i].1) != (sig[i - 1].0, &sig[i - 1].1) {
                        c += 1;
                    }
                    next[sig[i].2] = c;
                }
                if next == *color {
                    return;
                }
                *color = next;
            }
        }

        fn key_from(g: &Multigraph, color: &[u64]) -> Vec<(u32, u32)> {
            let n = color.len();
            let mut by_color: Vec<(u64, usize)> = (0..n).map(|v| (color[v], v)).collect();
            by_color.sort();
            let mut perm = vec![0u32; n];
            for (i, &(_, v)) in by_color.iter().enumerate() {
                perm[v] = i as u32;
            }
            let mut key: Vec<(u32, u32)> = g
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a as usize], perm[b as usize]);
                    if x <= y {
                        (x, y)
                    } else {
                        (y, x)
                    }
                })
                .collect();
            key.sort_unstable();
            key
        }

        fn canon(
            g: &Multigraph,
            adj: &[Vec<(u32, usize)>],
            mut color: Vec<u64>,
        ) -> Vec<(u32, u32)> {
            refine(adj, &mut color);
            // find the smallest non-singleton color class
            let n = color.len();
            let mut cells: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
            for v in 0..n {
                cells.entry(color[v]).or_default().push(v);
            }
            let branch = cells.values().find(|c| c.len() > 1);
            match branch {
                None => key_from(g, &color),
                Some(cell) => {
                    let fresh = color.iter().copied().max().unwrap() + 1;
                    let mut best: Option<Vec<(u32, u32)>> = None;
                    for &v in cell {
                        let mut c2 = color.clone();
                        c2[v] = fresh; // individualize
                        let k = canon(g, adj, c2);
                        if best.is_none() || Some(&k) < best.as_ref() {
                            best = Some(k);
                        }
                    }
                    best.unwrap()
                }
            }
        }

        canon(&g, &adj, init)
    }

    /// Chromatic polynomial of the graph viewed as simple (multiplicities
    /// collapse); any loop yields the zero polynomial. Deletion-contraction
    /// with a memo table keyed by canonical form.
    pub fn chromatic_polynomial(&self) -> ChromPoly {
        let mut memo = BTreeMap::new();
        self.chromatic_polynomial_memo(&mut memo)
    }

    /// As [`Multigraph::chromatic_polynomial`] with a caller-provided memo
    /// table (shareable across graphs; use one per thread).
    pub fn chromatic_polynomial_memo(
        &self,
        memo: &mut BTreeMap<Vec<(u32, u32)>, ChromPoly>,
    ) -> ChromPoly {
        if self.has_loop() {
            return ChromPoly::zero();
        }
        let g = self.simplified();
        chrom_rec(&g, memo)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.n {
            s.push_str(&format!("  v{v};\n"));
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("  v{a} -- v{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

fn chrom_rec(g: &Multigraph, memo: &mut BTreeMap<Vec<(u32, u32)>, ChromPoly>) -> ChromPoly {
    if g.edges.iter().any(|&(a, b)| a == b) {
        return ChromPoly::zero();
    }
    let comps = g.vertex_components();
    if comps.len() > 1 {
        let mut acc = ChromPoly::one();
        for comp in comps {
            let sub = g.induced(&comp);
            acc = acc.mul(&chrom_rec(&sub, memo));
        }
        return acc;
    }
    let n = g.n;
    let e = g.edges.len();
    if n == 0 {
        return ChromPoly::one();
    }
    if e == n - 1 {
        return ChromPoly::tree(e); // connected with n-1 edges: a tree
    }
    if e == n * (n - 1) / 2 {
        // complete graph: falling factorial
        let mut p = ChromPoly::monomial(0);
        for k in 0..n {
            p = p.mul(&ChromPoly(vec![-(k as i128), 1]));
        }
        return p;
    }
    let key = g.canonical_key();
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    // pick a cycle edge: any edge works; prefer one with high-degree ends
    let deg = g.degrees();
    let (ei, _) = g
        .edges
        .iter()
        .enumerate()
        .max_by_key(|&(_, &(a, b))| deg[a as usize] + deg[b as usize])
        .unwrap();
    let (a, b) = g.edges[ei];
    // delete
    let mut del = g.clone();
    del.edges.swap_remove(ei);
    // contract b into a, dropping the resulting parallel duplicates
    let mut perm: Vec<u32> = (0..g.n as u32).collect();
    perm[b as usize] = a;
    for v in (b as usize + 1)..g.n {
        perm[v] -= 1;
    }
    let mut con_edges = Vec::new();
    for (j, &(x, y)) in g.edges.iter().enumerate() {
        if j == ei {
            continue;
        }
        let (mut p, mut q) = (perm[x as usize], perm[y as usize]);
        if p > q {
            core::mem::swap(&mut p, &mut q);
        }
        con_edges.push((p, q));
    }
    let con = Multigraph {
        n: g.n - 1,
        edges: con_edges,
    }
    .simplified();
    let p = chrom_rec(&del.simplified(), memo).sub(&chrom_rec(&con, memo));
    memo.insert(key, p.clone());
    p
}

impl Multigraph {
    /// Induced subgraph on the given vertices (relabeled 0..len).
    pub fn induced(&self, verts: &[u32]) -> Multigraph {
        let mut map = BTreeMap::new();
        for (i, &v) in verts.iter().enumerate() {
            map.insert(v, i as u32);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((*map.get(&a)?, *map.get(&b)?)))
            .collect();
        Multigraph {
            n: verts.len(),
            edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn chromatic_triangle() {
        // y^3 - 3y^2 + 2y
        assert_eq!(triangle().chromatic_polynomial().0, vec![0, 2, -3, 1]);
    }

    #[test]
    fn chromatic_four_cycle() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        // brute-force proper colorings for y = 1..5 pin the polynomial
        let p = c4.chromatic_polynomial();
        for y in 1..=5i128 {
            assert_eq!(p.eval(y), brute_colorings(&c4, y));
        }
        assert_eq!(p.0, vec![0, -3, 6, -4, 1]);
    }

    #[test]
    fn chromatic_loop_and_multi() {
        let mut g = triangle();
        g.add_edge(0, 1); // double edge: same chromatic polynomial
        assert_eq!(g.chromatic_polynomial(), triangle().chromatic_polynomial());
        g.add_edge(2, 2);
        assert!(g.chromatic_polynomial().is_zero());
    }

    pub(super) fn brute_colorings(g: &Multigraph, colors: i128) -> i128 {
        let n = g.vertex_count();
        let mut count = 0i128;
        let k = colors as usize;
        let mut assign = vec![0usize; n];
        'outer: loop {
            let proper = g
                .edges()
                .iter()
                .all(|&(a, b)| a == b || assign[a as usize] != assign[b as usize])
                && !g.edges().iter().any(|&(a, b)| a == b);
            if proper {
                count += 1;
            }
            // increment
            for i in 0..n {
                assign[i] += 1;
                if assign[i] < k {
                    continue 'outer;
                }
                assign[i] = 0;
            }
            break;
        }
        if n == 0 {
            1
        } else {
            count
        }
    }

    #[test]
    fn connectivity_examples() {
        // path of 3 vertices
        let p3 = Multigraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.vertex_connectivity(), 1);
        // K4
        let k4 = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.vertex_connectivity(), 3);
        // C4
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(c4.vertex_connectivity(), 2);
        // disconnected
        let d = Multigraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(d.vertex_connectivity(), 0);
    }

    #[test]
    fn blocks_two_triangles() {
        // two triangles sharing vertex 2
        let g = Multigraph::from_edges(
            5,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)],
        );
        let (blocks, cuts) = g.blocks();
        assert_eq!(blocks.len(), 2);
        assert_eq!(cuts, vec![2]);
        // biconnected graph: one block, no cuts
        let (blocks, cuts) = triangle().blocks();
        assert_eq!(blocks.len(), 1);
        assert!(cuts.is_empty());
    }

    #[test]
    fn reduce_chain() {
        // path of 5 vertices hanging between two degree-3 anchors:
        // anchors 0 and 4; chain 0-1-2-3-4 with extra edges making 0,4 deg 3
        let g = Multigraph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 5),
                (0, 6),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
        );
        let r = g.reduce();
        assert!(!r.pure_cycle);
        // interior chain vertices 1,2,3 vanish
        assert_eq!(r.graph.vertex_count(), 4);
        let deg = r.graph.degrees();
        assert!(deg.iter().all(|&d| d == 3));
    }

    #[test]
    fn reduce_multiplicity() {
        let mut g = Multigraph::new(2);
        for _ in 0..5 {
            g.add_edge(0, 1);
        }
        let r = g.reduce();
        // multiplicity 5 -> single edge; both endpoints then degree 1
        assert_eq!(r.graph.edge_count(), 1);

        let mut g = Multigraph::new(3);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(1, 2);
        // double edges are kept
        let r = g.reduce();
        assert_eq!(r.graph.edge_count(), 4);
    }

    #[test]
    fn reduce_triangle_fixed_point() {
        let r = triangle().reduce();
        assert_eq!(r.graph, triangle());
    }

    #[test]
    fn reduce_pure_cycle_flagged() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let r = c4.reduce();
        assert!(r.pure_cycle);
        assert_eq!(r.graph, c4);
    }

    #[test]
    fn canonical_key_invariance() {
        let g = Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        let perm = vec![3u32, 0, 4, 1, 2];
        let h = g.relabeled(&perm);
        assert_eq!(g.canonical_key(), h.canonical_key());
    }
}
