//! Diagram-building operations. Except for [`disjoint_union`], results are
//! renumbered: components are listed by their lowest surviving arc id and
//! numbered from it.

use super::{ArcId, Diagram, Side, Slot, SlotGraph};
use crate::error::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    Positive,
    Negative,
}

/// Kauffman's two smoothings of `X[a,b,c,d]`: `A` joins `a-b` and `c-d`,
/// `B` joins `a-d` and `b-c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    pub(crate) fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::A => [(0, 1), (2, 3)],
            Smoothing::B => [(0, 3), (1, 2)],
        }
    }
}

/// Places `d2` beside `d1`, shifting its arc ids past those of `d1`.
pub fn disjoint_union(d1: &Diagram, d2: &Diagram) -> Diagram {
    let offset = d1.max_label();
    let mut crossings = d1.crossings().to_vec();
    let mut over_forward: Vec<bool> = (0..d1.crossing_count()).map(|i| d1.over_forward(i)).collect();
    crossings.extend(d2.crossings().iter().map(|x| x.map(|a| a + offset)));
    over_forward.extend((0..d2.crossing_count()).map(|i| d2.over_forward(i)));
    Diagram::from_pd_oriented(crossings, d1.free_loops() + d2.free_loops(), over_forward)
        .expect("union of valid diagrams")
}

/// Closure of a braid on `strands` strands. Letter `k > 0` is the positive
/// generator crossing strand positions `k` and `k + 1` (the left strand
/// passes over), `-k` its inverse. Strands are oriented upwards, so each
/// letter's sign is its crossing's sign. Untouched strands close into
/// crossingless loops.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Diagram, DiagramError> {
    if strands == 0 {
        return Err(DiagramError::Empty);
    }
    let mut g = SlotGraph::default();
    let mut pending: Vec<Option<Slot>> = vec![None; strands];
    let mut first_in: Vec<Option<Slot>> = vec![None; strands];
    for &letter in word {
        let k = letter.unsigned_abs() as usize;
        if letter == 0 || k >= strands {
            return Err(DiagramError::BraidLetter { letter, strands });
        }
        let x = g.add_crossing();
        // (left in, right in, left out, right out)
        let slots = if letter > 0 { [3, 0, 2, 1] } else { [0, 1, 3, 2] };
        for (p, slot_in, slot_out) in [(k - 1, slots[0], slots[2]), (k, slots[1], slots[3])] {
            let sin = Slot::new(x, slot_in);
            match pending[p] {
                Some(out) => {
                    g.new_edge(Some([out, sin]));
                }
                None => first_in[p] = Some(sin),
            }
            pending[p] = Some(Slot::new(x, slot_out));
        }
    }
    for p in 0..strands {
        match (pending[p], first_in[p]) {
            (Some(out), Some(sin)) => g.new_edge(Some([out, sin])),
            _ => g.new_edge(None),
        };
    }
    Ok(g.into_diagram()?.0)
}

/// Removes crossing `i` by the given smoothing and reorients every
/// component consistently.
pub fn smooth(d: &Diagram, i: usize, kind: Smoothing) -> Result<Diagram, DiagramError> {
    if i >= d.crossing_count() {
        return Err(DiagramError::CrossingIndex { index: i, len: d.crossing_count() });
    }
    let (mut g, _) = SlotGraph::from_diagram(d, 0);
    g.smooth(i, kind.pairs());
    g.orient(&[]);
    Ok(g.into_diagram()?.0)
}

/// Cuts `a1` in `d1` and `a2` in `d2` and cross-joins the ends, following
/// orientation.
pub fn connected_sum(d1: &Diagram, a1: ArcId, d2: &Diagram, a2: ArcId) -> Result<Diagram, DiagramError> {
    let (mut g, m1) = SlotGraph::from_diagram(d1, 0);
    let e1 = m1.get(a1).ok_or(DiagramError::UnknownArc(a1))?;
    let key_offset = d1.free_loop_arc(d1.free_loops()) as u64;
    let (g2, m2) = SlotGraph::from_diagram(d2, key_offset);
    let e2 = m2.get(a2).ok_or(DiagramError::UnknownArc(a2))?;
    let (_, e_off) = g.append(g2);
    g.reconnect(e1, e2 + e_off);
    Ok(g.into_diagram()?.0)
}

/// Adds a curl of the requested sign on arc `arc`.
pub fn reidemeister_r1(d: &Diagram, arc: ArcId, chirality: Chirality) -> Result<Diagram, DiagramError> {
    let (mut g, m) = SlotGraph::from_diagram(d, 0);
    let e = m.get(arc).ok_or(DiagramError::UnknownArc(arc))?;
    let k = g.add_crossing();
    let s = |pos| Slot::new(k, pos);
    // The strand enters over, loops back in under the adjacent slot, and
    // leaves under.
    match chirality {
        Chirality::Positive => {
            g.cut(e, s(3), s(2));
            g.new_edge(Some([s(1), s(0)]));
        }
        Chirality::Negative => {
            g.cut(e, s(1), s(2));
            g.new_edge(Some([s(3), s(0)]));
        }
    }
    Ok(g.into_diagram()?.0)
}

/// Pushes arc `a1` over arc `a2`, adding two crossings of opposite sign
/// that bound a bigon. `side` says on which side of `a1` the arc `a2` lies;
/// when both arcs are in the same connected piece they must share the face
/// there, and their relative direction is read from it. Arcs in different
/// pieces, or on crossingless loops, are taken to be anti-parallel.
pub fn reidemeister_r2(d: &Diagram, a1: ArcId, a2: ArcId, side: Side) -> Result<Diagram, DiagramError> {
    if a1 == a2 {
        return Err(DiagramError::SameArc);
    }
    let (mut g, m) = SlotGraph::from_diagram(d, 0);
    let e1 = m.get(a1).ok_or(DiagramError::UnknownArc(a1))?;
    let e2 = m.get(a2).ok_or(DiagramError::UnknownArc(a2))?;

    let parallel = if d.same_piece(a1, a2) {
        let faces = d.faces();
        let face = &faces[d.face_of(&faces, a1, side).expect("every dart has a face")];
        let (anti, par) = (face.contains(&(a2, side == Side::A)), face.contains(&(a2, side != Side::A)));
        if !anti && !par {
            return Err(DiagramError::NotCofacial(a1, a2));
        }
        par && !anti
    } else {
        false
    };

    let x1 = g.add_crossing();
    let x2 = g.add_crossing();
    let flip = |pos: usize| if side == Side::A && pos % 2 == 1 { pos ^ 2 } else { pos };
    // (crossing, in-slot, out-slot) along each arc, drawn with a2 on the
    // right of a1.
    let (route1, route2) = if parallel {
        ([(x1, 3, 1), (x2, 1, 3)], [(x1, 0, 2), (x2, 0, 2)])
    } else {
        ([(x1, 1, 3), (x2, 3, 1)], [(x2, 0, 2), (x1, 0, 2)])
    };
    for (e, route) in [(e1, route1), (e2, route2)] {
        let mut rest = e;
        for (x, i, o) in route {
            rest = g.cut(rest, Slot::new(x, flip(i)), Slot::new(x, flip(o))).1;
        }
    }
    Ok(g.into_diagram()?.0)
}
