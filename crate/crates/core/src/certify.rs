//! The Jones-polynomial test that two marked diagrams are inequivalent.
//!
//! For a marked diagram with underlying link `K`, saddle result `L` and
//! crossing-move result `K'`,
//!
//! ```text
//! J(K') = -t^(1/2) J(L) + (-1)^dw t^((3 dw + 1)/4) J(K),   dw = w(K') - w(K).
//! ```
//!
//! Evaluating the right-hand side with the saddle result of a second marked
//! diagram `Y` gives a polynomial that `J(K')` must equal whenever `X` and
//! `Y` are equivalent; a mismatch separates them.

use serde::{Deserialize, Serialize};

use crate::bracket::{jones_with, BracketOptions};
use crate::diagram::Diagram;
use crate::error::CertifyError;
use crate::moves::{crossing_move, saddle_move, MarkedDiagram};
use crate::poly::{JsonTerm, LaurentPoly, Var};
use crate::torus::{jones_torus_link_closed, saddle_term_closed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Distinguished,
    Inconclusive,
}

/// How the triviality of `K` was established, if it was needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrivialityCheck {
    /// Only `J(K) = 1` was checked.
    JonesOnly,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub delta_w: i64,
    pub triviality_check: TrivialityCheck,
}

#[derive(Serialize, Deserialize)]
struct VerdictJson {
    outcome: Outcome,
    lhs: Vec<JsonTerm>,
    rhs: Vec<JsonTerm>,
    delta_w: i64,
    triviality_check: TrivialityCheck,
}

impl Verdict {
    fn decide(lhs: LaurentPoly, rhs: LaurentPoly, delta_w: i64, triviality_check: TrivialityCheck) -> Self {
        let outcome = if lhs != rhs { Outcome::Distinguished } else { Outcome::Inconclusive };
        Verdict { outcome, lhs, rhs, delta_w, triviality_check }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(VerdictJson {
            outcome: self.outcome,
            lhs: self.lhs.to_json_terms(),
            rhs: self.rhs.to_json_terms(),
            delta_w: self.delta_w,
            triviality_check: self.triviality_check,
        })
        .expect("plain data")
    }

    pub fn from_json_str(text: &str) -> Result<Self, CertifyError> {
        let j: VerdictJson = serde_json::from_str(text).map_err(|e| CertifyError::Json(e.to_string()))?;
        let lhs = LaurentPoly::from_json_terms(Var::T, &j.lhs)?;
        let rhs = LaurentPoly::from_json_terms(Var::T, &j.rhs)?;
        Ok(Verdict::decide(lhs, rhs, j.delta_w, j.triviality_check))
    }
}

/// `-t^(1/2) j_l + (-1)^dw t^((3 dw + 1)/4) j_k`.
pub fn rhs_jones1(j_l: &LaurentPoly, j_k: &LaurentPoly, delta_w: i64) -> LaurentPoly {
    let sign = if delta_w.rem_euclid(2) == 0 { 1 } else { -1 };
    &j_l.scale(-1, 2) + &j_k.scale(sign, 3 * delta_w + 1)
}

/// Both sides of the identity for one marked diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub delta_w: i64,
}

/// `D_K`, `D_L = saddle`, `D_K' = crossing`.
struct Moves {
    k: Diagram,
    l: Diagram,
    k_prime: Diagram,
}

impl Moves {
    fn of(md: &MarkedDiagram) -> Result<Self, CertifyError> {
        Ok(Moves { k: md.diagram.clone(), l: saddle_move(md)?, k_prime: crossing_move(md)? })
    }

    fn delta_w(&self) -> i64 {
        self.k_prime.writhe() - self.k.writhe()
    }
}

pub fn check_jones1_identity(md: &MarkedDiagram, opts: BracketOptions) -> Result<IdentityCheck, CertifyError> {
    let m = Moves::of(md)?;
    let delta_w = m.delta_w();
    let lhs = jones_with(&m.k_prime, opts)?;
    let rhs = rhs_jones1(&jones_with(&m.l, opts)?, &jones_with(&m.k, opts)?, delta_w);
    Ok(IdentityCheck { holds: lhs == rhs, lhs, rhs, delta_w })
}

/// Compares `J(K'_x)` with the right-hand side built from `x`'s writhe
/// change and `J(K_x)` but `y`'s saddle result.
pub fn certify_distinct(x: &MarkedDiagram, y: &MarkedDiagram, opts: BracketOptions) -> Result<Verdict, CertifyError> {
    let mx = Moves::of(x)?;
    let l_y = saddle_move(y)?;
    let delta_w = mx.delta_w();
    let lhs = jones_with(&mx.k_prime, opts)?;
    let rhs = rhs_jones1(&jones_with(&l_y, opts)?, &jones_with(&mx.k, opts)?, delta_w);
    Ok(Verdict::decide(lhs, rhs, delta_w, TrivialityCheck::NotApplicable))
}

/// The same test against a `y` whose saddle result is the torus link
/// `L(2, 2m)` and whose knot `K` is trivial, using the closed form
/// `t^m + t^(m+2) (1 + t^(2m-1))/(1 + t) + (-1)^dw t^((3 dw + 1)/4)`.
pub fn certify_distinct_torus(x: &MarkedDiagram, m: i64, opts: BracketOptions) -> Result<Verdict, CertifyError> {
    if m < 1 {
        return Err(CertifyError::TorusParameter(m));
    }
    let mx = Moves::of(x)?;
    let j_k = jones_with(&mx.k, opts)?;
    if !j_k.is_one() {
        return Err(CertifyError::NotTrivial(j_k.to_string()));
    }
    let delta_w = mx.delta_w();
    let sign = if delta_w.rem_euclid(2) == 0 { 1 } else { -1 };
    let rhs = &saddle_term_closed(m)? + &LaurentPoly::monomial(Var::T, sign, 3 * delta_w + 1);
    if rhs != rhs_jones1(&jones_torus_link_closed(m)?, &LaurentPoly::one(Var::T), delta_w) {
        return Err(CertifyError::ClosedFormMismatch);
    }
    let lhs = jones_with(&mx.k_prime, opts)?;
    Ok(Verdict::decide(lhs, rhs, delta_w, TrivialityCheck::JonesOnly))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::T, terms.iter().copied())
    }

    #[test]
    fn rhs_examples() {
        let one = LaurentPoly::one(Var::T);
        let hopf = t(&[(-1, 2), (-1, 10)]);
        assert_eq!(rhs_jones1(&hopf, &one, 1), t(&[(1, 12)]));
        let unlink = t(&[(-1, -2), (-1, 2)]);
        assert!(rhs_jones1(&unlink, &one, 1).is_one());
        let zero = LaurentPoly::zero(Var::T);
        for dw in -3..=3 {
            assert!(rhs_jones1(&zero, &zero, dw).is_zero());
        }
    }

    #[test]
    fn closed_form_path_matches_general_rhs() {
        let one = LaurentPoly::one(Var::T);
        for m in 1..=5 {
            let closed = &saddle_term_closed(m).unwrap() + &LaurentPoly::monomial(Var::T, -1, 4);
            assert_eq!(closed, rhs_jones1(&jones_torus_link_closed(m).unwrap(), &one, 1));
        }
    }

    #[test]
    fn verdict_json_round_trip() {
        let v = Verdict::decide(LaurentPoly::one(Var::T), t(&[(1, 12)]), 1, TrivialityCheck::JonesOnly);
        assert_eq!(v.outcome, Outcome::Distinguished);
        let text = v.to_json().to_string();
        assert!(text.contains("\"outcome\":\"distinguished\""));
        assert!(text.contains("\"triviality_check\":\"jones_only\""));
        assert_eq!(Verdict::from_json_str(&text).unwrap(), v);
    }
}
