//! Kauffman states: smoothing, state circles and graphs, adequacy, and the
//! exhaustive Gray-code state sweep.
//!
//! A state assigns a `+1`/`-1` marker to every crossing. With crossing legs
//! in counterclockwise order and the over-strand on legs `(over, over+2)`,
//! the A-smoothing joins leg pairs `{(over-1, over), (over+1, over+2)}`; the
//! `+` marker is the A-smoothing.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::graph::Multigraph;

/// The `+` marker performs the A-smoothing of its crossing.
const PLUS_IS_A: bool = true;

/// Marker assignment, crossing `i` positive iff bit `i` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KauffmanState {
    pub bits: u64,
    pub n: u8,
}

impl KauffmanState {
    pub fn all_plus(n: usize) -> Self {
        KauffmanState {
            bits: if n == 64 { !0 } else { (1u64 << n) - 1 },
            n: n as u8,
        }
    }

    pub fn all_minus(n: usize) -> Self {
        KauffmanState {
            bits: 0,
            n: n as u8,
        }
    }

    pub fn marker(&self, crossing: usize) -> i8 {
        if self.bits >> crossing & 1 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn complement(&self) -> Self {
        KauffmanState {
            bits: !self.bits & ((1u64 << self.n) - 1).max(if self.n == 64 { !0 } else { 0 }),
            n: self.n,
        }
    }

    /// Number of `+` markers minus number of `-` markers.
    pub fn sigma(&self) -> i32 {
        let plus = self.bits.count_ones() as i32;
        2 * plus - self.n as i32
    }

    pub fn markers(&self) -> Vec<i8> {
        (0..self.n as usize).map(|i| self.marker(i)).collect()
    }
}

impl fmt::Display for KauffmanState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n as usize {
            f.write_str(if self.marker(i) > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// Smoothing pairing at one crossing: partner leg of `leg` under the given
/// marker. Pairing `even` joins legs {0,1} and {2,3}; `odd` joins {1,2} and
/// {3,0}.
#[inline]
fn smooth_partner(over: u8, marker: i8, leg: u8) -> u8 {
    // A-smoothing is the even pairing iff the over diagonal is (1,3)
    let a_is_even = over == 1;
    let use_a = (marker > 0) == PLUS_IS_A;
    let even = a_is_even == use_a;
    if even {
        leg ^ 1
    } else {
        3 - leg
    }
}

/// State circles of a smoothed diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateDiagram {
    /// Circles as sequences of ports (each port on exactly one circle).
    pub circles: Vec<Vec<u32>>,
    /// Circle id of every port.
    pub port_circle: Vec<u32>,
    /// For each crossing, the two circles its smoothing arcs lie on.
    pub touchpoints: Vec<(u32, u32)>,
}

impl StateDiagram {
    /// Touch-point counts per circle (the circle lengths).
    pub fn circle_lengths(&self) -> Vec<usize> {
        let mut len = vec![0usize; self.circles.len()];
        for &(a, b) in &self.touchpoints {
            len[a as usize] += 1;
            len[b as usize] += 1;
        }
        len
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }
}

/// Trace all state circles of `d` under state `s`.
pub fn smooth(d: &Diagram, s: KauffmanState) -> StateDiagram {
    let np = d.port_count();
    let mut port_circle = vec![u32::MAX; np as usize];
    let mut circles = Vec::new();
    for start in 0..np {
        if port_circle[start as usize] != u32::MAX {
            continue;
        }
        let id = circles.len() as u32;
        let mut ports = Vec::new();
        let mut p = start;
        loop {
            // smoothing arc inside the crossing, then the strand arc
            port_circle[p as usize] = id;
            ports.push(p);
            let c = (p / 4) as usize;
            let q = (p & !3) | smooth_partner(d.crossings()[c].over, s.marker(c), (p % 4) as u8) as u32;
            port_circle[q as usize] = id;
            ports.push(q);
            p = d.arc(q);
            if p == start {
                break;
            }
        }
        circles.push(ports);
    }
    let touchpoints = (0..d.crossing_count())
        .map(|c| {
            let base = 4 * c as u32;
            let l0 = port_circle[base as usize];
            let partner = smooth_partner(d.crossings()[c].over, s.marker(c), 0) as u32;
            // the other arc involves the two legs not paired with leg 0
            let other_leg = (1..4).find(|&l| l != partner).unwrap();
            let l1 = port_circle[(base + other_leg) as usize];
            (l0, l1)
        })
        .collect();
    StateDiagram {
        circles,
        port_circle,
        touchpoints,
    }
}

/// The state graph: one vertex per circle, one edge per smoothed crossing.
pub fn state_graph(sd: &StateDiagram) -> Multigraph {
    let mut g = Multigraph::new(sd.circles.len());
    for &(a, b) in &sd.touchpoints {
        g.add_edge(a, b);
    }
    g
}

/// A state is adequate iff its state graph is loopless.
pub fn is_adequate_state(g: &Multigraph) -> bool {
    !g.has_loop()
}

/// Diagram-level adequacy from the two special states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdequacyClass {
    pub plus: bool,
    pub minus: bool,
}

impl AdequacyClass {
    pub fn is_adequate(&self) -> bool {
        self.plus && self.minus
    }

    pub fn is_semi_adequate(&self) -> bool {
        self.plus != self.minus
    }

    pub fn is_inadequate(&self) -> bool {
        !self.plus && !self.minus
    }

    pub fn name(&self) -> &'static str {
        match (self.plus, self.minus) {
            (true, true) => "adequate",
            (true, false) => "+adequate",
            (false, true) => "-adequate",
            (false, false) => "inadequate",
        }
    }
}

impl fmt::Display for AdequacyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Is the diagram `s`-adequate? Every smoothed crossing must touch two
/// distinct circles.
pub fn is_state_adequate(d: &Diagram, s: KauffmanState) -> bool {
    let sd = smooth(d, s);
    sd.touchpoints.iter().all(|&(a, b)| a != b)
}

/// Classify a diagram by its special states only.
pub fn classify_diagram(d: &Diagram) -> AdequacyClass {
    let n = d.crossing_count();
    AdequacyClass {
        plus: is_state_adequate(d, KauffmanState::all_plus(n)),
        minus: is_state_adequate(d, KauffmanState::all_minus(n)),
    }
}

/// Link-level adequacy aggregated over a set of diagrams of the same link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkAdequacy {
    Adequate,
    WeaklyAdequate,
    PlusAdequate,
    MinusAdequate,
    /// Every supplied diagram is inadequate; confirming inadequacy requires
    /// the Jones-coefficient test.
    CandidateInadequate,
}

impl LinkAdequacy {
    pub fn name(&self) -> &'static str {
        match self {
            LinkAdequacy::Adequate => "adequate",
            LinkAdequacy::WeaklyAdequate => "weakly adequate",
            LinkAdequacy::PlusAdequate => "+adequate",
            LinkAdequacy::MinusAdequate => "-adequate",
            LinkAdequacy::CandidateInadequate => "candidate inadequate",
        }
    }
}

/// Aggregate diagram classes: adequate if any diagram is adequate; weakly
/// adequate if some diagram is only +adequate and another only -adequate.
pub fn classify_link(diagrams: &[Diagram]) -> LinkAdequacy {
    assert!(!diagrams.is_empty(), "classify_link needs diagrams");
    let classes: Vec<AdequacyClass> = diagrams.iter().map(classify_diagram).collect();
    if classes.iter().any(|c| c.is_adequate()) {
        return LinkAdequacy::Adequate;
    }
    let any_plus = classes.iter().any(|c| c.plus);
    let any_minus = classes.iter().any(|c| c.minus);
    match (any_plus, any_minus) {
        (true, true) => LinkAdequacy::WeaklyAdequate,
        (true, false) => LinkAdequacy::PlusAdequate,
        (false, true) => LinkAdequacy::MinusAdequate,
        (false, false) => LinkAdequacy::CandidateInadequate,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapExceeded {
    pub crossings: usize,
    pub cap: usize,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "diagram has {} crossings, above the enumeration cap {}",
            self.crossings, self.cap
        )
    }
}

/// Outcome of an exhaustive state sweep.
#[derive(Clone, Debug, Default)]
pub struct SweepOutcome {
    /// Count of states per `(sigma, circle_count)` pair.
    pub histogram: BTreeMap<(i32, u32), u64>,
    /// All adequate states found.
    pub adequate: Vec<KauffmanState>,
    pub total: u64,
}

/// Exhaustively enumerate all `2^n` states in Gray-code order, maintaining
/// circles incrementally: flipping one marker only retraces the circles
/// through that crossing.
pub fn sweep_states(d: &Diagram, cap: usize) -> Result<SweepOutcome, CapExceeded> {
    let n = d.crossing_count();
    if n > cap || n > 63 {
        return Err(CapExceeded { crossings: n, cap });
    }
    Ok(sweep_states_prefix(d, 0, n))
}

/// Sweep the `2^free` states whose markers above bit `free` equal those of
/// `prefix` (bits `free..n` fixed). With `free == n` this is the full sweep;
/// smaller `free` gives disjoint blocks mergeable by summation.
pub fn sweep_states_prefix(d: &Diagram, prefix: u64, free: usize) -> SweepOutcome {
    let n = d.crossing_count();
    debug_assert!(free <= n);
    let mut engine = SweepEngine::new(d, KauffmanState {
        bits: prefix,
        n: n as u8,
    });
    let mut out = SweepOutcome::default();
    let total = 1u64 << free;
    for i in 0..total {
        engine.record(&mut out);
        if i + 1 < total {
            let flip = (i + 1).trailing_zeros() as usize;
            engine.flip(flip);
        }
    }
    out.total = total;
    out
}

/// Reference implementation: independent full retrace per state, no
/// incremental updates. Used as a brute-force oracle in tests.
pub fn sweep_states_naive(d: &Diagram, cap: usize) -> Result<SweepOutcome, CapExceeded> {
    let n = d.crossing_count();
    if n > cap || n > 63 {
        return Err(CapExceeded { crossings: n, cap });
    }
    let mut out = SweepOutcome::default();
    for bits in 0u64..1 << n {
        let s = KauffmanState {
            bits,
            n: n as u8,
        };
        let sd = smooth(d, s);
        let adequate = sd.touchpoints.iter().all(|&(a, b)| a != b);
        let circles = sd.circle_count() as u32 + d.free_loops();
        *out.histogram.entry((s.sigma(), circles)).or_insert(0) += 1;
        if adequate {
            out.adequate.push(s);
        }
        out.total += 1;
    }
    Ok(out)
}

/// Count adequate states over all `2^n` states; also returns them.
pub fn count_adequate_states(
    d: &Diagram,
    cap: usize,
) -> Result<(usize, Vec<KauffmanState>), CapExceeded> {
    let out = sweep_states(d, cap)?;
    Ok((out.adequate.len(), out.adequate))
}

/// Incremental sweep engine.
struct SweepEngine<'a> {
    d: &'a Diagram,
    state: KauffmanState,
    port_circle: Vec<u32>,
    next_circle_id: u32,
    circle_count: u32,
    /// Crossings whose two smoothing arcs lie on one circle.
    bad: Vec<bool>,
    bad_count: usize,
    sigma: i32,
}

impl<'a> SweepEngine<'a> {
    fn new(d: &'a Diagram, state: KauffmanState) -> Self {
        let np = d.port_count() as usize;
        let mut engine = SweepEngine {
            d,
            state,
            port_circle: vec![u32::MAX; np],
            next_circle_id: 0,
            circle_count: 0,
            bad: vec![false; d.crossing_count()],
            bad_count: 0,
            sigma: state.sigma(),
        };
        engine.retrace_all();
        engine
    }

    fn partner(&self, port: u32) -> u32 {
        let c = (port / 4) as usize;
        (port & !3)
            | smooth_partner(
                self.d.crossings()[c].over,
                self.state.marker(c),
                (port % 4) as u8,
            ) as u32
    }

    fn retrace_all(&mut self) {
        self.port_circle.iter_mut().for_each(|p| *p = u32::MAX);
        self.circle_count = 0;
        for start in 0..self.d.port_count() {
            if self.port_circle[start as usize] == u32::MAX {
                self.trace_from(start);
                self.circle_count += 1;
            }
        }
        self.bad_count = 0;
        for c in 0..self.d.crossing_count() {
            self.bad[c] = self.crossing_bad(c);
            if self.bad[c] {
                self.bad_count += 1;
            }
        }
    }

    fn trace_from(&mut self, start: u32) -> u32 {
        let id = self.next_circle_id;
        self.next_circle_id += 1;
        let mut p = start;
        loop {
            self.port_circle[p as usize] = id;
            let q = self.partner(p);
            self.port_circle[q as usize] = id;
            p = self.d.arc(q);
            if p == start {
                break;
            }
        }
        id
    }

    fn crossing_bad(&self, c: usize) -> bool {
        let base = 4 * c as u32;
        let partner0 = self.partner(base) & 3;
        let other = (1..4).find(|&l| l != partner0).unwrap();
        self.port_circle[base as usize] == self.port_circle[(base + other) as usize]
    }

    /// Flip the marker of one crossing and retrace the affected circles.
    fn flip(&mut self, c: usize) {
        self.state.bits ^= 1 << c;
        self.sigma += 2 * self.state.marker(c) as i32;

        // circles through c change; everything else is untouched
        let base = 4 * c as u32;
        let old: Vec<u32> = (0..4).map(|l| self.port_circle[(base + l) as usize]).collect();
        let mut distinct_old = old.clone();
        distinct_old.sort_unstable();
        distinct_old.dedup();

        // retrace from the four ports of c under the new pairing, collecting
        // the set of visited ports to know which crossings to re-examine
        let mut visited: Vec<u32> = Vec::new();
        let mut new_ids: Vec<u32> = Vec::new();
        for l in 0..4u32 {
            let start = base + l;
            if new_ids
                .iter()
                .any(|&id| self.port_circle[start as usize] == id)
            {
                continue;
            }
            let id = self.next_circle_id;
            self.next_circle_id += 1;
            new_ids.push(id);
            let mut p = start;
            loop {
                self.port_circle[p as usize] = id;
                visited.push(p);
                let q = self.partner(p);
                self.port_circle[q as usize] = id;
                visited.push(q);
                p = self.d.arc(q);
                if p == start {
                    break;
                }
            }
        }
        self.circle_count = self.circle_count + new_ids.len() as u32 - distinct_old.len() as u32;

        // re-evaluate badness of crossings on the retraced circles
        let mut seen_crossings: Vec<u32> = visited.iter().map(|p| p / 4).collect();
        seen_crossings.sort_unstable();
        seen_crossings.dedup();
        for &cx in &seen_crossings {
            let cx = cx as usize;
            let now = self.crossing_bad(cx);
            if now != self.bad[cx] {
                self.bad[cx] = now;
                if now {
                    self.bad_count += 1;
                } else {
                    self.bad_count -= 1;
                }
            }
        }
    }

    fn record(&self, out: &mut SweepOutcome) {
        let circles = self.circle_count + self.d.free_loops();
        *out
            .histogram
            .entry((self.sigma, circles))
            .or_insert(0) += 1;
        if self.bad_count == 0 {
            out.adequate.push(self.state);
        }
    }
}

/// Human-readable marker string for reports.
pub fn state_string(s: &KauffmanState) -> String {
    use alloc::string::ToString;
    s.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conway::parse_conway;
    use crate::tangle::build_diagram;

    fn diagram(s: &str) -> Diagram {
        build_diagram(&parse_conway(s).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_special_states() {
        let d = diagram("3");
        let plus = smooth(&d, KauffmanState::all_plus(3));
        let minus = smooth(&d, KauffmanState::all_minus(3));
        let counts = [plus.circle_count(), minus.circle_count()];
        // an alternating diagram: |s+| + |s-| = n + 2
        assert_eq!(counts[0] + counts[1], 5);
        let g = state_graph(&plus);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn edge_count_equals_crossings() {
        let d = diagram("2 2");
        for bits in 0..16u64 {
            let sd = smooth(&d, KauffmanState { bits, n: 4 });
            assert_eq!(state_graph(&sd).edge_count(), 4);
            assert_eq!(sd.circle_lengths().iter().sum::<usize>(), 8);
        }
    }

    #[test]
    fn figure_eight_has_three_circle_state() {
        // some mixed state with two + and two - markers yields 3 circles
        let d = diagram("2 2");
        let found = (0..16u64).any(|bits| {
            let s = KauffmanState { bits, n: 4 };
            s.sigma() == 0 && smooth(&d, s).circle_count() == 3
        });
        assert!(found);
    }

    #[test]
    fn reduced_alternating_is_adequate() {
        for s in ["3", "2 2", "2 1 2", "2,2,2", "3 1 5 4"] {
            let d = diagram(s);
            let c = classify_diagram(&d);
            assert!(c.is_adequate(), "`{s}` should be adequate, got {c}");
        }
    }

    #[test]
    fn mirror_swaps_adequacy() {
        let d = diagram("2,2,-2");
        let c = classify_diagram(&d);
        let m = classify_diagram(&d.mirror());
        assert_eq!(c.plus, m.minus);
        assert_eq!(c.minus, m.plus);
        assert!(c.is_semi_adequate());
    }

    #[test]
    fn sweep_matches_naive() {
        for s in ["3", "2 2", "2,2,-2", "2 1 2", "6*2.-2 0.-2.2 0"] {
            let d = diagram(s);
            let fast = sweep_states(&d, 24).unwrap();
            let naive = sweep_states_naive(&d, 24).unwrap();
            assert_eq!(fast.histogram, naive.histogram, "histogram for `{s}`");
            let mut a: Vec<u64> = fast.adequate.iter().map(|s| s.bits).collect();
            let mut b: Vec<u64> = naive.adequate.iter().map(|s| s.bits).collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b, "adequate states for `{s}`");
        }
    }

    #[test]
    fn adequate_count_crossing_change_invariant() {
        let d = diagram("2 1 2");
        let (count, _) = count_adequate_states(&d, 24).unwrap();
        for i in 0..d.crossing_count() {
            let flipped = d.with_crossing_changed(i);
            let (c2, _) = count_adequate_states(&flipped, 24).unwrap();
            assert_eq!(count, c2);
        }
    }

    #[test]
    fn every_diagram_two_adequate_states() {
        for s in ["3", "2 2", "2,2,-2", "2,-2", "3 2 4 -2 2", "2 0.-3.-2 0.2"] {
            let d = diagram(s);
            let (count, _) = count_adequate_states(&d, 24).unwrap();
            assert!(count >= 2, "`{s}` has {count} adequate states");
        }
    }

    #[test]
    fn complement_maps_to_mirror() {
        let d = diagram("2 1 2");
        let m = d.mirror();
        for bits in 0..32u64 {
            let s = KauffmanState { bits, n: 5 };
            let a = smooth(&d, s).circle_count();
            let b = smooth(&m, s.complement()).circle_count();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn prefix_blocks_merge_to_full_sweep() {
        let d = diagram("2 1 2");
        let full = sweep_states(&d, 24).unwrap();
        let free = 3usize;
        let mut merged: BTreeMap<(i32, u32), u64> = BTreeMap::new();
        let mut adequate = 0usize;
        for hi in 0..(1u64 << (5 - free)) {
            let block = sweep_states_prefix(&d, hi << free, free);
            for (k, v) in block.histogram {
                *merged.entry(k).or_insert(0) += v;
            }
            adequate += block.adequate.len();
        }
        assert_eq!(merged, full.histogram);
        assert_eq!(adequate, full.adequate.len());
    }
}
