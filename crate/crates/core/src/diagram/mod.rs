//! Oriented planar link diagrams in PD form.
//!
//! A crossing `X[a,b,c,d]` lists its four arcs counterclockwise, starting
//! with the under-strand arc entering the crossing; the under-strand leaves
//! along `c`. Orientation is carried by arc numbering: along every component
//! the arcs are numbered consecutively (wrapping from the largest label back
//! to the smallest). The over-strand runs `b -> d` when `d` follows `b`,
//! otherwise `d -> b`, and the crossing is positive exactly when it runs
//! `d -> b`.

mod graph;
mod io;
mod ops;

use std::collections::BTreeMap;

use crate::error::DiagramError;

pub(crate) use graph::SlotGraph;
pub use io::{parse_diagram, parse_pd, DiagramJson};
pub use ops::{braid_closure, connected_sum, disjoint_union, reidemeister_r1, reidemeister_r2, smooth, Chirality, Smoothing};

pub type ArcId = u32;

/// Index into [`Diagram::components`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentId(pub usize);

/// Position of an arc end on a crossing: slot `pos` of the PD tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub crossing: usize,
    pub pos: usize,
}

impl Slot {
    pub fn new(crossing: usize, pos: usize) -> Self {
        Slot { crossing, pos }
    }

    /// The slot the same strand continues through.
    pub fn partner(self) -> Slot {
        Slot { crossing: self.crossing, pos: self.pos ^ 2 }
    }
}

/// Side of an oriented arc: `A` is its left, `B` its right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Where an arc starts and ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcEnds {
    pub tail: Slot,
    pub head: Slot,
}

/// A traversal step along a face boundary: an arc walked forwards
/// (`true`) or backwards.
pub type Dart = (ArcId, bool);

/// An oriented link diagram. Immutable once constructed.
#[derive(Clone, Debug)]
pub struct Diagram {
    crossings: Vec<[ArcId; 4]>,
    free_loops: u32,
    over_forward: Vec<bool>,
    components: Vec<Vec<ArcId>>,
    arcs: BTreeMap<ArcId, ArcEnds>,
    arc_component: BTreeMap<ArcId, usize>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
            && self.free_loops == other.free_loops
            && self.over_forward == other.over_forward
    }
}

impl Eq for Diagram {}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Role {
    In,
    Out,
}

/// Per-piece crossing lists plus the free loop count. See [`Diagram::canonical_form`].
pub type CanonicalForm = (Vec<Vec<([u32; 4], bool)>>, u32);

impl Diagram {
    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `k` disjoint crossingless circles, `k >= 1`.
    pub fn unlink(k: u32) -> Self {
        Self::from_pd(Vec::new(), k).expect("nonempty unlink")
    }

    /// Validates PD tuples, inferring over-strand directions from the
    /// numbering.
    pub fn from_pd(crossings: Vec<[ArcId; 4]>, free_loops: u32) -> Result<Self, DiagramError> {
        let roles = infer_roles(&crossings)?;
        Self::from_roles(crossings, free_loops, roles)
    }

    /// Validates PD tuples whose over-strand directions are given
    /// explicitly (`true` means `b -> d`).
    pub fn from_pd_oriented(
        crossings: Vec<[ArcId; 4]>,
        free_loops: u32,
        over_forward: Vec<bool>,
    ) -> Result<Self, DiagramError> {
        let roles = over_forward
            .iter()
            .map(|&fwd| {
                if fwd {
                    [Role::In, Role::In, Role::Out, Role::Out]
                } else {
                    [Role::In, Role::Out, Role::Out, Role::In]
                }
            })
            .collect();
        Self::from_roles(crossings, free_loops, roles)
    }

    fn from_roles(
        crossings: Vec<[ArcId; 4]>,
        free_loops: u32,
        roles: Vec<[Role; 4]>,
    ) -> Result<Self, DiagramError> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        let occurrences = slot_occurrences(&crossings)?;
        let mut arcs = BTreeMap::new();
        for (&arc, slots) in &occurrences {
            let (s0, s1) = (slots[0], slots[1]);
            let (r0, r1) = (roles[s0.crossing][s0.pos], roles[s1.crossing][s1.pos]);
            let ends = match (r0, r1) {
                (Role::Out, Role::In) => ArcEnds { tail: s0, head: s1 },
                (Role::In, Role::Out) => ArcEnds { tail: s1, head: s0 },
                _ => return Err(DiagramError::Orientation(arc)),
            };
            arcs.insert(arc, ends);
        }

        let label_at = |s: Slot| crossings[s.crossing][s.pos];
        let mut components = Vec::new();
        let mut arc_component = BTreeMap::new();
        for &start in arcs.keys() {
            if arc_component.contains_key(&start) {
                continue;
            }
            let idx = components.len();
            let mut cycle = vec![start];
            arc_component.insert(start, idx);
            let mut cur = start;
            loop {
                let next = label_at(arcs[&cur].head.partner());
                if next == start {
                    break;
                }
                if arc_component.insert(next, idx).is_some() {
                    return Err(DiagramError::Orientation(next));
                }
                cycle.push(next);
                cur = next;
            }
            // `start` is the lowest label of its component, so sequential
            // numbering means the cycle reads start, start+1, ...
            for (k, &arc) in cycle.iter().enumerate() {
                if arc as u64 != start as u64 + k as u64 {
                    return Err(DiagramError::NonSequential(start));
                }
            }
            components.push(cycle);
        }
        components.extend((0..free_loops).map(|_| Vec::new()));

        let over_forward = roles.iter().map(|r| r[1] == Role::In).collect();
        Ok(Diagram { crossings, free_loops, over_forward, components, arcs, arc_component })
    }

    pub fn crossings(&self) -> &[[ArcId; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    /// Whether the over-strand of crossing `i` runs `b -> d`.
    pub fn over_forward(&self, i: usize) -> bool {
        self.over_forward[i]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (ArcId, ArcEnds)> + '_ {
        self.arcs.iter().map(|(a, e)| (*a, *e))
    }

    pub fn arc_ends(&self, arc: ArcId) -> Option<ArcEnds> {
        self.arcs.get(&arc).copied()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn max_label(&self) -> ArcId {
        self.arcs.keys().next_back().copied().unwrap_or(0)
    }

    /// Free loops are addressable as arcs numbered after the crossing arcs:
    /// loop `k` has id `max_label + 1 + k`.
    pub fn free_loop_arc(&self, k: u32) -> ArcId {
        self.max_label() + 1 + k
    }

    /// Index of the free loop an arc id refers to, if any.
    pub fn free_loop_index(&self, arc: ArcId) -> Option<u32> {
        let first = self.max_label() + 1;
        (arc >= first && arc - first < self.free_loops).then(|| arc - first)
    }

    pub fn contains_arc(&self, arc: ArcId) -> bool {
        self.arcs.contains_key(&arc) || self.free_loop_index(arc).is_some()
    }

    pub fn label_at(&self, slot: Slot) -> ArcId {
        self.crossings[slot.crossing][slot.pos]
    }

    /// Components: arcs in traversal order, starting at the lowest label.
    /// Free loops come last and have no arcs.
    pub fn components(&self) -> Vec<(ComponentId, &[ArcId])> {
        self.components
            .iter()
            .enumerate()
            .map(|(i, c)| (ComponentId(i), c.as_slice()))
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, arc: ArcId) -> Option<ComponentId> {
        if let Some(&c) = self.arc_component.get(&arc) {
            return Some(ComponentId(c));
        }
        let crossing_components = self.components.len() - self.free_loops as usize;
        self.free_loop_index(arc).map(|k| ComponentId(crossing_components + k as usize))
    }

    /// Sign of crossing `i`: `+1` when the over-strand runs `d -> b`.
    pub fn crossing_sign(&self, i: usize) -> Result<i32, DiagramError> {
        match self.over_forward.get(i) {
            Some(true) => Ok(-1),
            Some(false) => Ok(1),
            None => Err(DiagramError::CrossingIndex { index: i, len: self.crossings.len() }),
        }
    }

    pub fn signs(&self) -> Vec<i32> {
        self.over_forward.iter().map(|&f| if f { -1 } else { 1 }).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.signs().iter().map(|&s| s as i64).sum()
    }

    /// Half the signed count of crossings between two distinct components.
    pub fn linking_number(&self, c1: ComponentId, c2: ComponentId) -> Result<i64, DiagramError> {
        let n = self.components.len();
        for c in [c1, c2] {
            if c.0 >= n {
                return Err(DiagramError::UnknownComponent(c.0));
            }
        }
        if c1 == c2 {
            return Err(DiagramError::SameComponent);
        }
        let mut total = 0i64;
        for (i, x) in self.crossings.iter().enumerate() {
            let under = self.arc_component[&x[0]];
            let over = self.arc_component[&x[1]];
            if (under, over) == (c1.0, c2.0) || (under, over) == (c2.0, c1.0) {
                total += self.crossing_sign(i)? as i64;
            }
        }
        if total % 2 != 0 {
            return Err(DiagramError::OddLinking(total));
        }
        Ok(total / 2)
    }

    /// Swaps over and under at every crossing.
    pub fn mirror(&self) -> Diagram {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.over_forward)
            .map(|(&[a, b, c, d], &fwd)| if fwd { [b, c, d, a] } else { [d, a, b, c] })
            .collect();
        // The old under-strand a -> c becomes the over-strand and flips its
        // b/d direction.
        let over_forward = self.over_forward.iter().map(|&fwd| !fwd).collect();
        Diagram::from_pd_oriented(crossings, self.free_loops, over_forward)
            .expect("mirror of a valid diagram")
    }

    /// Reverses the orientation of one component. Arcs are renumbered.
    pub fn reverse_component(&self, c: ComponentId) -> Result<Diagram, DiagramError> {
        if c.0 >= self.components.len() {
            return Err(DiagramError::UnknownComponent(c.0));
        }
        let (mut g, map) = SlotGraph::from_diagram(self, 0);
        for arc in &self.components[c.0] {
            g.flip(map.edge(*arc));
        }
        Ok(g.into_diagram()?.0)
    }

    /// Faces of the diagram as cyclic dart sequences, each face on the left
    /// of its darts. Free loops contribute no faces here.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = BTreeMap::new();
        let mut faces = Vec::new();
        for &arc in self.arcs.keys() {
            for fwd in [true, false] {
                if seen.contains_key(&(arc, fwd)) {
                    continue;
                }
                let idx = faces.len();
                let mut face = Vec::new();
                let mut dart = (arc, fwd);
                while seen.insert(dart, idx).is_none() {
                    face.push(dart);
                    dart = self.next_dart(dart);
                }
                faces.push(face);
            }
        }
        faces
    }

    fn next_dart(&self, (arc, fwd): Dart) -> Dart {
        let ends = self.arcs[&arc];
        let arrive = if fwd { ends.head } else { ends.tail };
        let leave = Slot::new(arrive.crossing, (arrive.pos + 3) % 4);
        let next = self.label_at(leave);
        let next_ends = self.arcs[&next];
        // An arc with both ends on this crossing leaves forwards from its tail.
        (next, next_ends.tail == leave)
    }

    /// The face to the given side of an arc, as an index into [`faces`].
    ///
    /// [`faces`]: Diagram::faces
    pub fn face_of(&self, faces: &[Vec<Dart>], arc: ArcId, side: Side) -> Option<usize> {
        let dart = (arc, side == Side::A);
        faces.iter().position(|f| f.contains(&dart))
    }

    /// Euler-characteristic planarity check on each connected piece.
    pub fn is_planar(&self) -> bool {
        let faces = self.faces();
        let piece = self.pieces();
        let mut vertices = BTreeMap::<usize, i64>::new();
        for &p in &piece {
            *vertices.entry(p).or_default() += 1;
        }
        let mut face_counts = BTreeMap::<usize, i64>::new();
        for f in &faces {
            *face_counts.entry(piece[self.arcs[&f[0].0].tail.crossing]).or_default() += 1;
        }
        vertices.iter().all(|(p, v)| face_counts.get(p).copied().unwrap_or(0) == v + 2)
    }

    /// Connected piece of each crossing, as the smallest crossing index in
    /// it.
    fn pieces(&self) -> Vec<usize> {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for ends in self.arcs.values() {
            let (a, b) = (find(&mut parent, ends.tail.crossing), find(&mut parent, ends.head.crossing));
            parent[a.max(b)] = a.min(b);
        }
        (0..n).map(|i| find(&mut parent, i)).collect()
    }

    /// Whether two arcs between crossings lie in the same connected piece
    /// of the diagram.
    pub fn same_piece(&self, a1: ArcId, a2: ArcId) -> bool {
        match (self.arcs.get(&a1), self.arcs.get(&a2)) {
            (Some(e1), Some(e2)) => {
                let piece = self.pieces();
                piece[e1.tail.crossing] == piece[e2.tail.crossing]
            }
            _ => false,
        }
    }

    /// A relabeling-invariant form: two diagrams have equal forms exactly
    /// when one is obtained from the other by renaming arcs and reordering
    /// crossings and components.
    pub fn canonical_form(&self) -> CanonicalForm {
        let mut pieces: Vec<Vec<([u32; 4], bool)>> = Vec::new();
        let mut done = vec![false; self.components.len()];
        for ci in 0..self.components.len() {
            if done[ci] || self.components[ci].is_empty() {
                continue;
            }
            // Collect the connected piece (components sharing crossings).
            let mut piece = vec![ci];
            done[ci] = true;
            let mut k = 0;
            while k < piece.len() {
                for arc in &self.components[piece[k]] {
                    let ends = self.arcs[arc];
                    for s in [ends.tail, ends.head] {
                        for &other in &self.crossings[s.crossing] {
                            let oc = self.arc_component[&other];
                            if !done[oc] {
                                done[oc] = true;
                                piece.push(oc);
                            }
                        }
                    }
                }
                k += 1;
            }
            let mut best: Option<Vec<([u32; 4], bool)>> = None;
            for &c in &piece {
                for &start in &self.components[c] {
                    let form = self.relabel_from(start);
                    if best.as_ref().is_none_or(|b| form < *b) {
                        best = Some(form);
                    }
                }
            }
            pieces.push(best.expect("nonempty piece"));
        }
        pieces.sort();
        (pieces, self.free_loops)
    }

    /// Relabels the connected piece containing `start`, walking components
    /// in discovery order, and returns its sorted crossing list.
    fn relabel_from(&self, start: ArcId) -> Vec<([u32; 4], bool)> {
        let mut label = BTreeMap::new();
        let mut queue = vec![start];
        let mut next_label = 1u32;
        let mut qi = 0;
        while qi < queue.len() {
            let first = queue[qi];
            qi += 1;
            if label.contains_key(&first) {
                continue;
            }
            let comp = &self.components[self.arc_component[&first]];
            let offset = comp.iter().position(|&a| a == first).unwrap();
            let walk: Vec<ArcId> = comp[offset..].iter().chain(&comp[..offset]).copied().collect();
            for &arc in &walk {
                label.insert(arc, next_label);
                next_label += 1;
            }
            for &arc in &walk {
                let head = self.arcs[&arc].head;
                for &other in &self.crossings[head.crossing] {
                    if !label.contains_key(&other) {
                        queue.push(other);
                    }
                }
            }
        }
        let mut out: Vec<([u32; 4], bool)> = self
            .crossings
            .iter()
            .zip(&self.over_forward)
            .filter(|(x, _)| label.contains_key(&x[0]))
            .map(|(x, &f)| (x.map(|a| label[&a]), f))
            .collect();
        out.sort();
        out
    }

    pub fn same_up_to_relabeling(&self, other: &Diagram) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// PD text, e.g. `X[1,4,2,5] X[3,6,4,1] O`.
    pub fn to_pd_string(&self) -> String {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
            .collect();
        parts.extend((0..self.free_loops).map(|_| "O".to_string()));
        parts.join(" ")
    }
}

fn slot_occurrences(crossings: &[[ArcId; 4]]) -> Result<BTreeMap<ArcId, Vec<Slot>>, DiagramError> {
    let mut occ: BTreeMap<ArcId, Vec<Slot>> = BTreeMap::new();
    for (i, x) in crossings.iter().enumerate() {
        for (pos, &arc) in x.iter().enumerate() {
            occ.entry(arc).or_default().push(Slot::new(i, pos));
        }
    }
    if let Some((&arc, slots)) = occ.iter().find(|(_, s)| s.len() != 2) {
        return Err(DiagramError::ArcMultiplicity { arc, count: slots.len() });
    }
    Ok(occ)
}

/// Two-colours every slot as incoming/outgoing. Under-strand slots are
/// fixed by the PD convention; over-strand slots follow by propagation, and
/// components that never pass under are oriented from their numbering.
fn infer_roles(crossings: &[[ArcId; 4]]) -> Result<Vec<[Role; 4]>, DiagramError> {
    let occ = slot_occurrences(crossings)?;
    let n = crossings.len();
    let mut roles: Vec<[Option<Role>; 4]> = vec![[Some(Role::In), None, Some(Role::Out), None]; n];
    let other_end = |s: Slot| -> Slot {
        let slots = &occ[&crossings[s.crossing][s.pos]];
        if slots[0] == s {
            slots[1]
        } else {
            slots[0]
        }
    };
    let flip = |r: Role| if r == Role::In { Role::Out } else { Role::In };

    // Walk one strand cycle from a slot of known role, assigning as we go.
    let propagate = |roles: &mut Vec<[Option<Role>; 4]>, start: Slot| -> Result<(), DiagramError> {
        let mut s = start;
        loop {
            let r = roles[s.crossing][s.pos].expect("seeded");
            let e = other_end(s);
            let want = flip(r);
            match roles[e.crossing][e.pos] {
                Some(x) if x != want => return Err(DiagramError::Orientation(crossings[e.crossing][e.pos])),
                _ => roles[e.crossing][e.pos] = Some(want),
            }
            let p = e.partner();
            let want_p = flip(want);
            match roles[p.crossing][p.pos] {
                Some(x) if x != want_p => return Err(DiagramError::Orientation(crossings[p.crossing][p.pos])),
                Some(_) if p == start => return Ok(()),
                _ => roles[p.crossing][p.pos] = Some(want_p),
            }
            if p == start {
                return Ok(());
            }
            s = p;
        }
    };

    for i in 0..n {
        for pos in [0, 2] {
            propagate(&mut roles, Slot::new(i, pos))?;
        }
    }
    // Components lying entirely over the rest of the diagram.
    for i in 0..n {
        if roles[i][1].is_some() {
            continue;
        }
        let b = crossings[i][1];
        let d = crossings[i][3];
        let labels = strand_labels(crossings, &occ, Slot::new(i, 1));
        let lo = *labels.iter().min().unwrap();
        let hi = *labels.iter().max().unwrap();
        let next = |x: ArcId| if x == hi { lo } else { x + 1 };
        let role_b = if d == next(b) {
            Role::In
        } else if b == next(d) {
            Role::Out
        } else {
            return Err(DiagramError::NonSequential(lo));
        };
        roles[i][1] = Some(role_b);
        roles[i][3] = Some(flip(role_b));
        propagate(&mut roles, Slot::new(i, 1))?;
    }
    Ok(roles.into_iter().map(|r| r.map(|x| x.expect("all slots assigned"))).collect())
}

fn strand_labels(crossings: &[[ArcId; 4]], occ: &BTreeMap<ArcId, Vec<Slot>>, start: Slot) -> Vec<ArcId> {
    let mut labels = Vec::new();
    let mut s = start;
    loop {
        let arc = crossings[s.crossing][s.pos];
        labels.push(arc);
        let slots = &occ[&arc];
        let e = if slots[0] == s { slots[1] } else { slots[0] };
        s = e.partner();
        if s == start {
            return labels;
        }
    }
}
