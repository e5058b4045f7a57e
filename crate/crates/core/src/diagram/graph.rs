//! Mutable slot-level view of a diagram used to build new diagrams.
//!
//! Crossings are four slots in counterclockwise order (0/2 under, 1/3
//! over); edges join two slots, or none for a crossingless loop. Each edge
//! carries a sort key so that renumbering after an edit is deterministic:
//! components are listed by their lowest key and numbered from it.

use std::collections::{BTreeMap, BTreeSet};

use super::{ArcId, Diagram, Slot};
use crate::error::DiagramError;

const UNSET: usize = usize::MAX;
const FRESH_KEYS: u64 = 1 << 40;

#[derive(Clone, Debug)]
struct Edge {
    /// `[tail, head]`, or `None` for a crossingless loop.
    ends: Option<[Slot; 2]>,
    key: u64,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct SlotGraph {
    crossings: Vec<Option<[usize; 4]>>,
    edges: Vec<Option<Edge>>,
    next_key: u64,
}

/// Edge index of every arc id (including free-loop ids) of a source diagram.
pub(crate) struct EdgeMap {
    by_arc: BTreeMap<ArcId, usize>,
}

impl EdgeMap {
    pub fn get(&self, arc: ArcId) -> Option<usize> {
        self.by_arc.get(&arc).copied()
    }

    pub fn edge(&self, arc: ArcId) -> usize {
        self.by_arc[&arc]
    }
}

impl SlotGraph {
    pub fn from_diagram(d: &Diagram, key_offset: u64) -> (SlotGraph, EdgeMap) {
        let mut g = SlotGraph {
            crossings: vec![Some([UNSET; 4]); d.crossing_count()],
            edges: Vec::new(),
            next_key: FRESH_KEYS,
        };
        let mut by_arc = BTreeMap::new();
        for (arc, ends) in d.arcs() {
            let e = g.push_edge(Some([ends.tail, ends.head]), arc as u64 + key_offset);
            by_arc.insert(arc, e);
        }
        for k in 0..d.free_loops() {
            let arc = d.free_loop_arc(k);
            let e = g.push_edge(None, arc as u64 + key_offset);
            by_arc.insert(arc, e);
        }
        (g, EdgeMap { by_arc })
    }

    fn push_edge(&mut self, ends: Option<[Slot; 2]>, key: u64) -> usize {
        let e = self.edges.len();
        self.edges.push(Some(Edge { ends, key }));
        if let Some(ends) = ends {
            for s in ends {
                self.crossings[s.crossing].as_mut().expect("live crossing")[s.pos] = e;
            }
        }
        e
    }

    /// Adds an edge with a key above every existing one.
    pub fn new_edge(&mut self, ends: Option<[Slot; 2]>) -> usize {
        let key = self.next_key;
        self.next_key += 1;
        self.push_edge(ends, key)
    }

    pub fn add_crossing(&mut self) -> usize {
        self.crossings.push(Some([UNSET; 4]));
        self.crossings.len() - 1
    }

    /// Moves `other` into `self`; returns the crossing and edge index
    /// offsets of the appended part.
    pub fn append(&mut self, other: SlotGraph) -> (usize, usize) {
        let (c_off, e_off) = (self.crossings.len(), self.edges.len());
        let shift = |s: Slot| Slot::new(s.crossing + c_off, s.pos);
        self.crossings.extend(
            other.crossings.into_iter().map(|c| c.map(|t| t.map(|e| if e == UNSET { UNSET } else { e + e_off }))),
        );
        self.edges.extend(other.edges.into_iter().map(|e| {
            e.map(|Edge { ends, key }| Edge { ends: ends.map(|x| x.map(shift)), key })
        }));
        self.next_key = self.next_key.max(other.next_key);
        (c_off, e_off)
    }

    fn edge(&self, e: usize) -> &Edge {
        self.edges[e].as_ref().expect("live edge")
    }

    fn edge_mut(&mut self, e: usize) -> &mut Edge {
        self.edges[e].as_mut().expect("live edge")
    }

    pub fn key(&self, e: usize) -> u64 {
        self.edge(e).key
    }

    pub fn at(&self, s: Slot) -> usize {
        self.crossings[s.crossing].expect("live crossing")[s.pos]
    }

    fn register(&mut self, s: Slot, e: usize) {
        self.crossings[s.crossing].as_mut().expect("live crossing")[s.pos] = e;
    }

    /// Whether the edge at `s` enters its crossing there.
    pub fn is_incoming(&self, s: Slot) -> bool {
        self.edge(self.at(s)).ends.is_some_and(|[_, h]| h == s)
    }

    pub fn flip(&mut self, e: usize) {
        if let Some(ends) = self.edge_mut(e).ends.as_mut() {
            ends.swap(0, 1);
        }
    }

    /// Cuts edge `e` so that its first half ends at `into` and its second
    /// half starts at `out_of`. Returns `(first, second)`; for a loop both
    /// are the same edge.
    pub fn cut(&mut self, e: usize, into: Slot, out_of: Slot) -> (usize, usize) {
        match self.edge(e).ends {
            None => {
                self.edge_mut(e).ends = Some([out_of, into]);
                self.register(out_of, e);
                self.register(into, e);
                (e, e)
            }
            Some([tail, head]) => {
                self.edge_mut(e).ends = Some([tail, into]);
                self.register(into, e);
                let second = self.new_edge(Some([out_of, head]));
                (e, second)
            }
        }
    }

    /// Orientation-preserving reconnection of two distinct edges:
    /// `t1 -> h1`, `t2 -> h2` become `t1 -> h2`, `t2 -> h1`.
    pub fn reconnect(&mut self, e1: usize, e2: usize) {
        debug_assert_ne!(e1, e2);
        match (self.edge(e1).ends, self.edge(e2).ends) {
            (None, None) => self.edges[e2] = None,
            (None, Some(_)) => self.edges[e1] = None,
            (Some(_), None) => self.edges[e2] = None,
            (Some([t1, h1]), Some([t2, h2])) => {
                self.edge_mut(e1).ends = Some([t1, h2]);
                self.register(h2, e1);
                self.edge_mut(e2).ends = Some([t2, h1]);
                self.register(h1, e2);
            }
        }
    }

    /// Removes crossing `i`, joining the two slot pairs. Returns the edge
    /// that passes through each join. Orientation is left as is; call
    /// [`SlotGraph::orient`] afterwards.
    pub fn smooth(&mut self, i: usize, pairs: [(usize, usize); 2]) -> [usize; 2] {
        let first = self.join(Slot::new(i, pairs[0].0), Slot::new(i, pairs[0].1));
        let second = self.join(Slot::new(i, pairs[1].0), Slot::new(i, pairs[1].1));
        self.crossings[i] = None;
        // The second join may have absorbed the first edge.
        if self.edges[first].is_none() {
            return [second, second];
        }
        [first, second]
    }

    fn join(&mut self, p: Slot, q: Slot) -> usize {
        let (ep, eq) = (self.at(p), self.at(q));
        if ep == eq {
            self.edge_mut(ep).ends = None;
            return ep;
        }
        let far = |g: &SlotGraph, e: usize, s: Slot| {
            let [a, b] = g.edge(e).ends.expect("edge at a slot has ends");
            if a == s {
                b
            } else {
                a
            }
        };
        let (far_p, far_q) = (far(self, ep, p), far(self, eq, q));
        let key = self.key(ep).min(self.key(eq));
        *self.edge_mut(ep) = Edge { ends: Some([far_p, far_q]), key };
        self.register(far_q, ep);
        self.edges[eq] = None;
        ep
    }

    /// Makes every strand cycle consistently oriented. The direction of the
    /// first listed edge on each cycle is kept; cycles with no listed edge
    /// keep the direction of their lowest-key edge.
    pub fn orient(&mut self, keep: &[usize]) {
        let mut order: Vec<usize> = keep.to_vec();
        let mut rest: Vec<usize> = (0..self.edges.len()).filter(|&e| self.edges[e].is_some()).collect();
        rest.sort_by_key(|&e| self.key(e));
        order.extend(rest);
        let mut seen = BTreeSet::new();
        for start in order {
            if !seen.insert(start) || self.edge(start).ends.is_none() {
                continue;
            }
            let mut e = start;
            loop {
                let [_, head] = self.edge(e).ends.unwrap();
                let p = head.partner();
                let f = self.at(p);
                if f == start {
                    break;
                }
                if self.edge(f).ends.unwrap()[0] != p {
                    self.flip(f);
                }
                seen.insert(f);
                e = f;
            }
        }
    }

    /// Rotates the slot order of crossing `i` by `by` positions. Rotating
    /// by one swaps over and under while keeping the counterclockwise order.
    pub fn rotate_crossing(&mut self, i: usize, by: usize) {
        let t = self.crossings[i].expect("live crossing");
        let remap = |q: usize| (q + 4 - by % 4) % 4;
        let mut rotated = [UNSET; 4];
        for q in 0..4 {
            rotated[remap(q)] = t[q];
        }
        self.crossings[i] = Some(rotated);
        for e in t.into_iter().collect::<BTreeSet<_>>() {
            let ends = self.edge_mut(e).ends.as_mut().expect("edge at a slot has ends");
            for s in ends.iter_mut().filter(|s| s.crossing == i) {
                s.pos = remap(s.pos);
            }
        }
    }

    /// Sign of crossing `i` under the current edge directions.
    pub fn crossing_sign(&self, i: usize) -> i32 {
        let under_in = if self.is_incoming(Slot::new(i, 0)) { 0 } else { 2 };
        let over_in = if self.is_incoming(Slot::new(i, 1)) { 1 } else { 3 };
        // Positive when the over-strand enters at the slot just clockwise of
        // the incoming under-strand.
        if over_in == (under_in + 3) % 4 {
            1
        } else {
            -1
        }
    }

    /// Renumbers and validates. Returns the diagram and the arc id of every
    /// surviving edge.
    pub fn into_diagram(self) -> Result<(Diagram, Relabel), DiagramError> {
        let mut tables = Vec::new();
        let mut over_forward = Vec::new();
        for (i, t) in self.crossings.iter().enumerate() {
            let Some(t) = *t else { continue };
            let incoming = |pos: usize| self.edge(t[pos]).ends.is_some_and(|[_, h]| h == Slot::new(i, pos));
            let (u0, u2, o1, o3) = (incoming(0), incoming(2), incoming(1), incoming(3));
            if u0 == u2 || o1 == o3 {
                return Err(DiagramError::Orientation(0));
            }
            let table = if u0 { t } else { [t[2], t[3], t[0], t[1]] };
            over_forward.push(if u0 { o1 } else { o3 });
            tables.push(table);
        }

        // Strand cycles, ordered by lowest key, numbered from that edge.
        let live: Vec<usize> = (0..self.edges.len()).filter(|&e| self.edges[e].is_some()).collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut loops = Vec::new();
        let mut seen = BTreeSet::new();
        for &e in &live {
            if seen.contains(&e) {
                continue;
            }
            if self.edge(e).ends.is_none() {
                seen.insert(e);
                loops.push(e);
                continue;
            }
            let mut cycle = vec![e];
            seen.insert(e);
            let mut cur = e;
            loop {
                let head = self.edge(cur).ends.unwrap()[1];
                let next = self.at(head.partner());
                if next == e {
                    break;
                }
                if !seen.insert(next) {
                    return Err(DiagramError::Orientation(0));
                }
                cycle.push(next);
                cur = next;
            }
            let low = (0..cycle.len()).min_by_key(|&k| self.key(cycle[k])).unwrap();
            cycle.rotate_left(low);
            cycles.push(cycle);
        }
        cycles.sort_by_key(|c| self.key(c[0]));
        loops.sort_by_key(|&e| self.key(e));

        let mut labels = BTreeMap::new();
        let mut next: ArcId = 1;
        for c in &cycles {
            for &e in c {
                labels.insert(e, next);
                next += 1;
            }
        }
        for &e in &loops {
            labels.insert(e, next);
            next += 1;
        }
        let crossings = tables.iter().map(|t| t.map(|e| labels[&e])).collect();
        let d = Diagram::from_pd_oriented(crossings, loops.len() as u32, over_forward)?;
        Ok((d, Relabel { labels }))
    }
}

/// Arc id of each surviving edge of a [`SlotGraph`] after renumbering.
pub(crate) struct Relabel {
    labels: BTreeMap<usize, ArcId>,
}

impl Relabel {
    pub fn arc(&self, edge: usize) -> ArcId {
        self.labels[&edge]
    }
}
