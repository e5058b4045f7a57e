//! Closures of the positive two-strand braid and the closed-form Jones
//! polynomials of the resulting torus knots and links.

use crate::diagram::{braid_closure, Diagram};
use crate::error::{CertifyError, PolyError};
use crate::poly::{LaurentPoly, Var};

/// The `(2, n)` torus link as a braid closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusLinkSpec {
    n: u32,
}

impl TorusLinkSpec {
    pub fn new(n: i64) -> Result<Self, CertifyError> {
        if n < 1 || n > u32::MAX as i64 {
            return Err(CertifyError::TorusParameter(n));
        }
        Ok(TorusLinkSpec { n: n as u32 })
    }

    pub fn crossings(self) -> u32 {
        self.n
    }

    pub fn is_knot(self) -> bool {
        self.n % 2 == 1
    }

    /// `m` for the link `L(2, 2m)`; `None` for knots.
    pub fn half_twists(self) -> Option<u32> {
        (!self.is_knot()).then_some(self.n / 2)
    }

    pub fn diagram(self) -> Diagram {
        positive_closure(self.n as usize)
    }

    pub fn jones_closed_form(self) -> LaurentPoly {
        match self.half_twists() {
            Some(m) => jones_torus_link_closed(m as i64).expect("m >= 1"),
            None => jones_torus_knot_closed((self.n as i64 - 1) / 2).expect("k >= 0"),
        }
    }
}

/// Closure of `sigma_1^n` with every crossing positive.
pub fn torus_diagram(n: i64) -> Result<Diagram, CertifyError> {
    Ok(TorusLinkSpec::new(n)?.diagram())
}

fn positive_closure(n: usize) -> Diagram {
    braid_closure(2, &vec![1; n]).expect("generator 1 exists on two strands")
}

fn t_poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_int_exps(Var::T, terms.iter().copied())
}

/// `t^k (1 - t^3 - t^(2k+2) + t^(2k+3)) / (1 - t^2)`, the Jones polynomial
/// of `K(2, 2k+1)`.
pub fn jones_torus_knot_closed(k: i64) -> Result<LaurentPoly, PolyError> {
    assert!(k >= 0, "torus knot index must be nonnegative");
    let numerator = t_poly(&[(1, 0), (-1, 3), (-1, 2 * k + 2), (1, 2 * k + 3)]);
    let denominator = t_poly(&[(1, 0), (-1, 2)]);
    Ok(numerator.div_exact(&denominator)?.scale(1, 4 * k))
}

/// `(1 + t^(2m-1)) / (1 + t)`, exact for `m >= 1`.
fn link_quotient(m: i64) -> Result<LaurentPoly, PolyError> {
    t_poly(&[(1, 0), (1, 2 * m - 1)]).div_exact(&t_poly(&[(1, 0), (1, 1)]))
}

/// `-t^((2m-1)/2) - t^((2m+3)/2) (1 + t^(2m-1)) / (1 + t)`, the Jones
/// polynomial of `L(2, 2m)`.
pub fn jones_torus_link_closed(m: i64) -> Result<LaurentPoly, CertifyError> {
    if m < 1 {
        return Err(CertifyError::TorusParameter(m));
    }
    let q = link_quotient(m)?;
    let first = LaurentPoly::monomial(Var::T, -1, 2 * (2 * m - 1));
    Ok(&first - &q.scale(1, 2 * (2 * m + 3)))
}

/// `-t^(1/2) J(L(2,2m))` expanded: `t^m + t^(m+2) (1 + t^(2m-1)) / (1 + t)`.
pub(crate) fn saddle_term_closed(m: i64) -> Result<LaurentPoly, CertifyError> {
    if m < 1 {
        return Err(CertifyError::TorusParameter(m));
    }
    let q = link_quotient(m)?;
    Ok(&LaurentPoly::monomial(Var::T, 1, 4 * m) + &q.scale(1, 4 * (m + 2)))
}
