mod common;

use knotcert::bracket::{jones, kauffman_bracket, kauffman_bracket_oracle, kauffman_bracket_with, BracketOptions};
use knotcert::certify::{certify_distinct, check_jones1_identity, Outcome};
use knotcert::diagram::{braid_closure, parse_diagram, parse_pd, ComponentId, Diagram};
use knotcert::moves::{crossing_move, reconnect, saddle_move, unsmooth_crossing, MarkedDiagram};
use knotcert::poly::{LaurentPoly, Var};
use proptest::prelude::*;

fn braid() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=4).prop_flat_map(|strands| {
        let letter = (1..strands as i32, any::<bool>()).prop_map(|(k, pos)| if pos { k } else { -k });
        (Just(strands), prop::collection::vec(letter, 1..=8))
    })
}

fn closure((strands, word): &(usize, Vec<i32>)) -> Diagram {
    braid_closure(*strands, word).unwrap()
}

/// `p(t) -> p(t^-1)`.
fn invert(p: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_terms(Var::T, p.terms().map(|(e, c)| (c.clone(), -e)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn state_sum_matches_oracle(b in braid()) {
        let d = closure(&b);
        prop_assert_eq!(kauffman_bracket(&d).unwrap(), kauffman_bracket_oracle(&d).unwrap());
    }

    #[test]
    fn chunked_state_sum_matches(b in braid(), threads in 2usize..9) {
        let d = closure(&b);
        let opts = BracketOptions { cap: 24, threads };
        prop_assert_eq!(kauffman_bracket_with(&d, opts).unwrap(), kauffman_bracket(&d).unwrap());
    }

    #[test]
    fn jones_exponent_parity(b in braid()) {
        let d = closure(&b);
        let j = jones(&d).unwrap();
        if d.component_count() % 2 == 1 {
            prop_assert!(j.has_integer_exponents(), "{}", j);
        } else {
            prop_assert!(j.has_half_odd_exponents(), "{}", j);
        }
    }

    #[test]
    fn mirror_inverts_t(b in braid()) {
        let d = closure(&b);
        prop_assert_eq!(jones(&d.mirror()).unwrap(), invert(&jones(&d).unwrap()));
        prop_assert_eq!(d.mirror().writhe(), -d.writhe());
    }

    #[test]
    fn linking_number_symmetry(b in braid()) {
        let d = closure(&b);
        let n = d.component_count();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let (ci, cj) = (ComponentId(i), ComponentId(j));
                    prop_assert_eq!(d.linking_number(ci, cj), d.linking_number(cj, ci));
                }
            }
        }
        if n == 2 {
            let lk = d.linking_number(ComponentId(0), ComponentId(1)).unwrap();
            for c in 0..2 {
                let r = d.reverse_component(ComponentId(c)).unwrap();
                prop_assert_eq!(r.linking_number(ComponentId(0), ComponentId(1)), Ok(-lk));
            }
        }
    }

    #[test]
    fn jones1_identity_on_random_sites(b in braid(), pick in any::<prop::sample::Index>()) {
        let d = closure(&b);
        let i = pick.index(d.crossing_count());
        if let Ok(md) = unsmooth_crossing(&d, i) {
            let c = check_jones1_identity(&md, BracketOptions::default()).unwrap();
            prop_assert!(c.holds, "{} at {:?}: {} vs {}", md.diagram.to_pd_string(), md.site, c.lhs, c.rhs);
            prop_assert_eq!(crossing_move(&md).unwrap().writhe(), saddle_move(&md).unwrap().writhe() + 1);
            let v = certify_distinct(&md, &md, BracketOptions::default()).unwrap();
            prop_assert_eq!(v.outcome, Outcome::Inconclusive);
        }
    }

    #[test]
    fn move_counts(b in braid(), pick in any::<prop::sample::Index>()) {
        let d = closure(&b);
        let i = pick.index(d.crossing_count());
        if let Ok(md) = unsmooth_crossing(&d, i) {
            let n = md.diagram.crossing_count();
            let s = saddle_move(&md).unwrap();
            let k = crossing_move(&md).unwrap();
            prop_assert_eq!(s.crossing_count(), n);
            prop_assert_eq!(k.crossing_count(), n + 1);
            prop_assert_eq!(k.component_count(), md.diagram.component_count());
            let dc = s.component_count() as i64 - md.diagram.component_count() as i64;
            prop_assert_eq!(dc.abs(), 1);
            prop_assert!(s.is_planar() && k.is_planar());
        }
    }

    #[test]
    fn reconnect_twice_restores(b in braid(), pick in any::<prop::sample::Index>()) {
        let d = closure(&b);
        let i = pick.index(d.crossing_count());
        if let Ok(md) = unsmooth_crossing(&d, i) {
            let back = reconnect(&reconnect(&md).unwrap()).unwrap();
            prop_assert!(back.diagram.same_up_to_relabeling(&md.diagram));
        }
    }

    #[test]
    fn crossing_move_restores_positive_crossings(b in braid(), pick in any::<prop::sample::Index>()) {
        let d = closure(&b);
        let i = pick.index(d.crossing_count());
        if d.crossing_sign(i).unwrap() > 0 && d.component_count() == 1 {
            if let Ok(md) = unsmooth_crossing(&d, i) {
                let k = crossing_move(&md).unwrap();
                prop_assert_eq!(k.writhe(), d.writhe());
                prop_assert_eq!(jones(&k).unwrap(), jones(&d).unwrap());
            }
        }
    }

    #[test]
    fn text_and_json_round_trips(b in braid(), pick in any::<prop::sample::Index>()) {
        let d = closure(&b);
        let from_text = parse_pd(&d.to_pd_string()).unwrap();
        prop_assert_eq!(jones(&from_text).unwrap(), jones(&d).unwrap());
        let from_json = parse_diagram(&d.to_json().to_string()).unwrap();
        prop_assert_eq!(&from_json, &from_text);
        let i = pick.index(d.crossing_count());
        if let Ok(md) = unsmooth_crossing(&d, i) {
            let back = MarkedDiagram::from_json_str(&md.to_json().to_string()).unwrap();
            prop_assert_eq!(back.site, md.site);
            prop_assert_eq!(back.diagram.crossings(), md.diagram.crossings());
        }
    }

    #[test]
    fn moves_are_deterministic(b in braid(), pick in any::<prop::sample::Index>()) {
        let d = closure(&b);
        let i = pick.index(d.crossing_count());
        if let Ok(md) = unsmooth_crossing(&d, i) {
            prop_assert_eq!(saddle_move(&md).unwrap(), saddle_move(&md).unwrap());
            prop_assert_eq!(crossing_move(&md).unwrap(), crossing_move(&md).unwrap());
        }
    }
}

#[test]
fn random_marked_corpus_is_large_enough() {
    let corpus = common::random_marked(1, 50, 8);
    assert_eq!(corpus.len(), 50);
    assert!(corpus.iter().any(|md| md.diagram.component_count() > 1));
    assert!(corpus.iter().any(|md| md.diagram.crossing_count() >= 6));
}
