//! Regenerates the files under `fixtures/`.
//!
//!     cargo run -p knotcert --example gen_fixtures

use std::fs;
use std::path::PathBuf;

use knotcert::diagram::{connected_sum, parse_pd, reidemeister_r2, Diagram, Side};
use knotcert::moves::{unsmooth_crossing, validate_site, MarkedDiagram, Site};
use knotcert::torus::torus_diagram;
use knotcert::SiteError;

fn x0() -> MarkedDiagram {
    let kink = parse_pd("X[1,1,2,2]").unwrap();
    let split = reidemeister_r2(&kink, 1, 2, Side::A).unwrap();
    unsmooth_crossing(&split, 2).unwrap()
}

fn y1() -> MarkedDiagram {
    unsmooth_crossing(&torus_diagram(3).unwrap(), 0).unwrap()
}

/// First site of `d` rejected as parallel.
fn parallel_site(d: &Diagram) -> MarkedDiagram {
    for (s1, _) in d.arcs() {
        for (s2, _) in d.arcs() {
            for side in [Side::A, Side::B] {
                let md = MarkedDiagram { diagram: d.clone(), site: Site { s1, s2, side } };
                if let Err(SiteError::Parallel(..)) = validate_site(&md) {
                    return md;
                }
            }
        }
    }
    panic!("no parallel site");
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, text: String| fs::write(dir.join(name), text + "\n").unwrap();

    write("unknot.pd", Diagram::unknot().to_pd_string());
    let trefoil = torus_diagram(3).unwrap();
    write("trefoil.pd", trefoil.to_pd_string());
    write("trefoil_negative.pd", trefoil.mirror().to_pd_string());
    for n in 1..=11 {
        write(&format!("torus_{n}.pd"), torus_diagram(n).unwrap().to_pd_string());
    }
    let tt = connected_sum(&trefoil, 1, &trefoil, 1).unwrap();
    write("trefoil_sum_trefoil.pd", tt.to_pd_string());
    let ut = connected_sum(&Diagram::unknot(), 1, &trefoil, 1).unwrap();
    write("unknot_sum_trefoil.pd", ut.to_pd_string());
    write("x0.marked.json", x0().to_json().to_string());
    write("y1.marked.json", y1().to_json().to_string());
    let y = y1();
    write("parallel.marked.json", parallel_site(&y.diagram).to_json().to_string());
}
