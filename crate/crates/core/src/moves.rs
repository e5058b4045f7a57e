//! Marked two-strand sites and the saddle and crossing moves performed at
//! them.
//!
//! A site is two arcs `s1`, `s2` that bound a common face, together with the
//! side of `s1` on which that face lies (`A` = left, `B` = right). The arcs
//! must run anti-parallel along the face, so that each sees it on the same
//! side. Arcs in different connected pieces of the diagram always qualify.

use serde::{Deserialize, Serialize};

use crate::diagram::{ArcId, Diagram, DiagramJson, Side, Slot, SlotGraph};
use crate::error::SiteError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Site {
    pub s1: ArcId,
    pub s2: ArcId,
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedDiagram {
    pub diagram: Diagram,
    pub site: Site,
}

#[derive(Serialize, Deserialize)]
struct MarkedJson {
    diagram: DiagramJson,
    site: Site,
}

/// Validated site: the slots where each arc starts and ends, and the
/// index in [`Diagram::faces`] of the face on the marked side of `s1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SiteDescriptor {
    pub site: Site,
    pub s1_tail: Slot,
    pub s1_head: Slot,
    pub s2_tail: Slot,
    pub s2_head: Slot,
    pub face: usize,
}

impl MarkedDiagram {
    /// Builds and validates.
    pub fn new(diagram: Diagram, site: Site) -> Result<Self, SiteError> {
        let md = MarkedDiagram { diagram, site };
        validate_site(&md)?;
        Ok(md)
    }

    pub fn from_json_str(text: &str) -> Result<Self, SiteError> {
        let j: MarkedJson = serde_json::from_str(text).map_err(|e| SiteError::Json(e.to_string()))?;
        MarkedDiagram::new(Diagram::try_from(j.diagram)?, j.site)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MarkedJson { diagram: DiagramJson::from(&self.diagram), site: self.site })
            .expect("plain data")
    }
}

pub fn validate_site(md: &MarkedDiagram) -> Result<SiteDescriptor, SiteError> {
    let d = &md.diagram;
    let Site { s1, s2, side } = md.site;
    if s1 == s2 {
        return Err(SiteError::SameArc);
    }
    let ends = |arc| {
        if !d.contains_arc(arc) {
            return Err(SiteError::MissingArc(arc));
        }
        d.arc_ends(arc).ok_or(SiteError::FreeLoop(arc))
    };
    let (e1, e2) = (ends(s1)?, ends(s2)?);
    let faces = d.faces();
    let face = d.face_of(&faces, s1, side).expect("every dart lies on a face");
    let same_side = side == Side::A;
    // Separate pieces can always be placed so that the arcs face each other.
    if d.same_piece(s1, s2) && !faces[face].contains(&(s2, same_side)) {
        return Err(if faces[face].contains(&(s2, !same_side)) {
            SiteError::Parallel(s1, s2)
        } else {
            SiteError::NotCofacial(s1, s2)
        });
    }
    Ok(SiteDescriptor {
        site: md.site,
        s1_tail: e1.tail,
        s1_head: e1.head,
        s2_tail: e2.tail,
        s2_head: e2.head,
        face,
    })
}

/// Inserts the new crossing at the site and returns the graph with it,
/// along with its index. The crossing is positive and orientation follows
/// the first half of `s1`.
fn insert_crossing(md: &MarkedDiagram) -> Result<(SlotGraph, usize), SiteError> {
    validate_site(md)?;
    let (mut g, map) = SlotGraph::from_diagram(&md.diagram, 0);
    let (e1, e2) = (map.edge(md.site.s1), map.edge(md.site.s2));
    let x = g.add_crossing();
    let s = |pos| Slot::new(x, pos);
    // Counterclockwise around the new crossing: tail and head ends of s1,
    // then of s2, in the order the face side dictates.
    let (t1, h1, t2, h2) = match md.site.side {
        Side::B => (s(0), s(3), s(2), s(1)),
        Side::A => (s(3), s(0), s(1), s(2)),
    };
    let (first, _) = g.cut(e1, t1, h1);
    g.cut(e2, t2, h2);
    g.orient(&[first]);
    if g.crossing_sign(x) < 0 {
        g.rotate_crossing(x, 1);
    }
    Ok((g, x))
}

/// Joins the two strands at the site with a single positive crossing.
pub fn crossing_move(md: &MarkedDiagram) -> Result<Diagram, SiteError> {
    let (g, _) = insert_crossing(md)?;
    Ok(g.into_diagram()?.0)
}

/// The oriented smoothing of the crossing added by [`crossing_move`]:
/// `s1` and `s2` are cut and cross-joined, with orientations taken from
/// the crossing-move diagram.
pub fn saddle_move(md: &MarkedDiagram) -> Result<Diagram, SiteError> {
    let (mut g, x) = insert_crossing(md)?;
    let u = if g.is_incoming(Slot::new(x, 0)) { 0 } else { 2 };
    g.smooth(x, [(u, (u + 1) % 4), ((u + 3) % 4, (u + 2) % 4)]);
    Ok(g.into_diagram()?.0)
}

/// Cross-joins `s1` and `s2` keeping every arc's direction: `s1` now runs
/// into the head of `s2` and vice versa. The result is marked at the two
/// joined arcs, so applying this twice restores the original diagram.
pub fn reconnect(md: &MarkedDiagram) -> Result<MarkedDiagram, SiteError> {
    validate_site(md)?;
    let (mut g, map) = SlotGraph::from_diagram(&md.diagram, 0);
    let (e1, e2) = (map.edge(md.site.s1), map.edge(md.site.s2));
    g.reconnect(e1, e2);
    let (diagram, relabel) = g.into_diagram()?;
    let site = Site { s1: relabel.arc(e1), s2: relabel.arc(e2), side: md.site.side.flip() };
    MarkedDiagram::new(diagram, site)
}

/// Replaces crossing `i` by its non-oriented smoothing and marks the two
/// resulting arcs. When the crossing is positive, [`crossing_move`] puts it
/// back. The strand through slot 0 keeps its direction. Fails when the
/// smoothing leaves a crossingless loop at the site or joins both sides
/// into a single arc.
pub fn unsmooth_crossing(d: &Diagram, i: usize) -> Result<MarkedDiagram, SiteError> {
    let sign = d.crossing_sign(i)?;
    let (mut g, _) = SlotGraph::from_diagram(d, 0);
    let kind = if sign > 0 { [(0, 3), (1, 2)] } else { [(0, 1), (3, 2)] };
    let [s1, s2] = g.smooth(i, kind);
    if s1 == s2 {
        return Err(SiteError::SameArc);
    }
    g.orient(&[s1]);
    let (diagram, relabel) = g.into_diagram()?;
    let (a1, a2) = (relabel.arc(s1), relabel.arc(s2));
    let mut last = Err(SiteError::SameArc);
    for side in [Side::B, Side::A] {
        last = MarkedDiagram::new(diagram.clone(), Site { s1: a1, s2: a2, side });
        if last.is_ok() {
            break;
        }
    }
    last
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::jones;
    use crate::diagram::{parse_pd, reidemeister_r2};
    use crate::poly::{LaurentPoly, Var};
    use crate::torus::torus_diagram;

    fn y1() -> MarkedDiagram {
        unsmooth_crossing(&torus_diagram(3).unwrap(), 0).unwrap()
    }

    fn x0() -> MarkedDiagram {
        let kink = parse_pd("X[1,1,2,2]").unwrap();
        let split = reidemeister_r2(&kink, 1, 2, Side::A).unwrap();
        assert_eq!(split.signs(), vec![1, -1, 1]);
        unsmooth_crossing(&split, 2).unwrap()
    }

    #[test]
    fn y1_moves() {
        let y = y1();
        assert_eq!(y.diagram.crossing_count(), 2);
        assert!(jones(&y.diagram).unwrap().is_one());
        let hopf = saddle_move(&y).unwrap();
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(jones(&hopf).unwrap(), LaurentPoly::from_terms(Var::T, [(-1, 2), (-1, 10)]));
        let k = crossing_move(&y).unwrap();
        assert_eq!(jones(&k).unwrap(), LaurentPoly::from_int_exps(Var::T, [(1, 1), (1, 3), (-1, 4)]));
        assert_eq!(k.writhe(), hopf.writhe() + 1);
    }

    #[test]
    fn x0_moves() {
        let x = x0();
        assert_eq!(x.diagram.component_count(), 1);
        assert!(jones(&x.diagram).unwrap().is_one());
        let l = saddle_move(&x).unwrap();
        assert_eq!(jones(&l).unwrap(), LaurentPoly::from_terms(Var::T, [(-1, -2), (-1, 2)]));
        let k = crossing_move(&x).unwrap();
        assert!(jones(&k).unwrap().is_one());
        assert_eq!(k.writhe(), l.writhe() + 1);
    }

    #[test]
    fn site_errors() {
        let y = y1();
        let mut bad = y.clone();
        bad.site.s2 = bad.site.s1;
        assert_eq!(validate_site(&bad), Err(SiteError::SameArc));
        bad.site.s2 = 99;
        assert_eq!(validate_site(&bad), Err(SiteError::MissingArc(99)));
        let mut flipped = y.clone();
        flipped.site.side = y.site.side.flip();
        assert!(validate_site(&flipped).is_err());
        let loop_site = MarkedDiagram { diagram: Diagram::unlink(2), site: Site { s1: 1, s2: 2, side: Side::A } };
        assert_eq!(validate_site(&loop_site), Err(SiteError::FreeLoop(1)));
    }

    #[test]
    fn parallel_site_is_rejected() {
        // Two parallel strands through a positive R2 clasp of an unlink.
        let u = Diagram::unlink(2);
        let r = reidemeister_r2(&u, 1, 2, Side::B).unwrap();
        let flipped = r.reverse_component(crate::diagram::ComponentId(1)).unwrap();
        let faces = flipped.faces();
        let mut saw_parallel = false;
        for (arc, _) in flipped.arcs() {
            for side in [Side::A, Side::B] {
                let f = flipped.face_of(&faces, arc, side).unwrap();
                for &(other, _) in &faces[f] {
                    if other == arc || flipped.component_of(other) == flipped.component_of(arc) {
                        continue;
                    }
                    let md = MarkedDiagram { diagram: flipped.clone(), site: Site { s1: arc, s2: other, side } };
                    if let Err(SiteError::Parallel(..)) = validate_site(&md) {
                        saw_parallel = true;
                    }
                }
            }
        }
        assert!(saw_parallel);
    }

    #[test]
    fn reconnect_is_an_involution() {
        for md in [y1(), x0()] {
            let once = reconnect(&md).unwrap();
            let twice = reconnect(&once).unwrap();
            assert!(twice.diagram.same_up_to_relabeling(&md.diagram));
            assert_eq!(once.diagram.crossing_count(), md.diagram.crossing_count());
            let dc = once.diagram.component_count() as i64 - md.diagram.component_count() as i64;
            assert_eq!(dc.abs(), 1);
        }
    }

    #[test]
    fn crossing_move_undoes_unsmoothing() {
        let t = torus_diagram(5).unwrap();
        for i in 0..5 {
            let md = unsmooth_crossing(&t, i).unwrap();
            let back = crossing_move(&md).unwrap();
            assert_eq!(jones(&back).unwrap(), jones(&t).unwrap());
            assert_eq!(back.writhe(), 5);
        }
    }

    #[test]
    fn json_round_trip() {
        let y = y1();
        let back = MarkedDiagram::from_json_str(&y.to_json().to_string()).unwrap();
        assert_eq!(back, y);
        assert!(matches!(MarkedDiagram::from_json_str("{}"), Err(SiteError::Json(_))));
    }
}
