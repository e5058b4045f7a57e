mod common;

use common::*;
use knotcert::bracket::jones;
use knotcert::diagram::{connected_sum, Diagram};
use knotcert::error::SiteError;
use knotcert::moves::{crossing_move, saddle_move, validate_site, MarkedDiagram};
use knotcert::poly::{LaurentPoly, Var};
use knotcert::torus::torus_diagram;

#[test]
fn torus_files_match_generator() {
    for n in 1..=11 {
        let d = diagram_fixture(&format!("torus_{n}.pd"));
        assert_eq!(d, torus_diagram(n).unwrap(), "n = {n}");
    }
    assert_eq!(diagram_fixture("trefoil.pd"), torus_diagram(3).unwrap());
    assert_eq!(diagram_fixture("trefoil_negative.pd"), torus_diagram(3).unwrap().mirror());
    assert_eq!(diagram_fixture("unknot.pd"), Diagram::unknot());
}

#[test]
fn connected_sum_files() {
    let t = torus_diagram(3).unwrap();
    assert!(diagram_fixture("trefoil_sum_trefoil.pd").same_up_to_relabeling(&connected_sum(&t, 1, &t, 1).unwrap()));
    assert!(diagram_fixture("unknot_sum_trefoil.pd").same_up_to_relabeling(&t));
}

#[test]
fn x0_is_a_marked_unknot() {
    let x = x0();
    assert_eq!(x.diagram.component_count(), 1);
    assert!(x.diagram.is_planar());
    assert!(jones(&x.diagram).unwrap().is_one());
    let l = saddle_move(&x).unwrap();
    assert_eq!(l.component_count(), 2);
    assert_eq!(jones(&l).unwrap(), LaurentPoly::from_terms(Var::T, [(-1, -2), (-1, 2)]));
    let k = crossing_move(&x).unwrap();
    assert!(jones(&k).unwrap().is_one());
    assert_eq!(k.writhe() - x.diagram.writhe(), 1);
}

#[test]
fn y1_is_a_marked_unknot() {
    let y = y1();
    assert_eq!(y.diagram.component_count(), 1);
    assert!(jones(&y.diagram).unwrap().is_one());
    let k = crossing_move(&y).unwrap();
    assert_eq!(k.signs(), vec![1, 1, 1]);
}

#[test]
fn parallel_fixture_is_rejected() {
    let text = fixture("parallel.marked.json");
    assert!(matches!(MarkedDiagram::from_json_str(&text), Err(SiteError::Parallel(..))));
}

#[test]
fn marked_files_round_trip() {
    for name in ["x0.marked.json", "y1.marked.json"] {
        let md = marked_fixture(name);
        validate_site(&md).unwrap();
        assert_eq!(md.to_json().to_string() + "\n", fixture(name));
    }
}
