#![allow(dead_code)]

use std::path::PathBuf;

use knotcert::diagram::{braid_closure, connected_sum, disjoint_union, parse_diagram, Diagram};
use knotcert::moves::{crossing_move, saddle_move, unsmooth_crossing, MarkedDiagram};
use knotcert::torus::torus_diagram;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn diagram_fixture(name: &str) -> Diagram {
    parse_diagram(&fixture(name)).unwrap()
}

pub fn marked_fixture(name: &str) -> MarkedDiagram {
    MarkedDiagram::from_json_str(&fixture(name)).unwrap()
}

pub fn x0() -> MarkedDiagram {
    marked_fixture("x0.marked.json")
}

pub fn y1() -> MarkedDiagram {
    marked_fixture("y1.marked.json")
}

pub fn marked_fixtures() -> Vec<(&'static str, MarkedDiagram)> {
    vec![("x0", x0()), ("y1", y1())]
}

/// A random braid word on 2..=4 strands.
pub fn random_word(rng: &mut impl Rng, max_len: usize) -> (usize, Vec<i32>) {
    let strands = rng.gen_range(2..=4);
    let len = rng.gen_range(1..=max_len);
    let word = (0..len)
        .map(|_| {
            let k = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    (strands, word)
}

/// Marked diagrams obtained by undoing one crossing of a random braid
/// closure with at most `max_crossings + 1` crossings.
pub fn random_marked(seed: u64, count: usize, max_crossings: usize) -> Vec<MarkedDiagram> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let (strands, word) = random_word(&mut rng, max_crossings + 1);
        let d = braid_closure(strands, &word).unwrap();
        let i = rng.gen_range(0..d.crossing_count());
        if let Ok(md) = unsmooth_crossing(&d, i) {
            if md.diagram.crossing_count() <= max_crossings {
                out.push(md);
            }
        }
    }
    out
}

/// Named diagrams used across the suites.
pub fn corpus() -> Vec<(String, Diagram)> {
    let mut out: Vec<(String, Diagram)> = Vec::new();
    out.push(("unknot".into(), Diagram::unknot()));
    out.push(("unlink3".into(), Diagram::unlink(3)));
    for name in ["trefoil.pd", "trefoil_negative.pd", "trefoil_sum_trefoil.pd", "unknot_sum_trefoil.pd"] {
        out.push((name.into(), diagram_fixture(name)));
    }
    for n in 1..=11 {
        out.push((format!("torus_{n}"), torus_diagram(n).unwrap()));
    }
    let trefoil = torus_diagram(3).unwrap();
    out.push(("figure_eight".into(), braid_closure(3, &[1, -2, 1, -2]).unwrap()));
    out.push(("trefoil+unknot".into(), disjoint_union(&trefoil, &Diagram::unknot())));
    out.push(("trefoil#figure_eight".into(), connected_sum(&trefoil, 2, &braid_closure(3, &[1, -2, 1, -2]).unwrap(), 3).unwrap()));
    for (name, md) in marked_fixtures() {
        out.push((format!("{name}.diagram"), md.diagram.clone()));
        out.push((format!("{name}.saddle"), saddle_move(&md).unwrap()));
        out.push((format!("{name}.crossing"), crossing_move(&md).unwrap()));
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for k in 0..12 {
        let (strands, word) = random_word(&mut rng, 9);
        out.push((format!("braid{k}:{strands}:{word:?}"), braid_closure(strands, &word).unwrap()));
    }
    out
}
