//! Exact Laurent polynomials with quarter-integer exponents.
//!
//! A single representation serves both the bracket variable `A` and the
//! Jones variable `t`. Exponents are stored as an integer number of
//! quarter-units: the stored key `e` stands for `var^(e/4)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::PolyError;

/// Indeterminate a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    A,
    T,
}

impl Var {
    fn symbol(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::T => "t",
        }
    }
}

/// Laurent polynomial over the integers in `A` or `t`, with exponents in
/// quarter-units. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, 0)
    }

    /// `coeff * var^(exp_quarters / 4)`.
    pub fn monomial(var: Var, coeff: impl Into<BigInt>, exp_quarters: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp_quarters, coeff.into());
        p
    }

    /// Builds from `(coefficient, exponent in quarter-units)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(var: Var, terms: impl IntoIterator<Item = (C, i64)>) -> Self {
        let mut p = Self::zero(var);
        for (c, e) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Builds from integer exponents, i.e. whole powers of the variable.
    pub fn from_int_exps<C: Into<BigInt>>(var: Var, terms: impl IntoIterator<Item = (C, i64)>) -> Self {
        Self::from_terms(var, terms.into_iter().map(|(c, e)| (c, 4 * e)))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms as `(exponent in quarter-units, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp_quarters: i64) -> BigInt {
        self.terms.get(&exp_quarters).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_var(&self, other: &Self) -> Result<(), PolyError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(PolyError::VarMismatch { lhs: self.var, rhs: other.var })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Multiplies by `coeff * var^(exp_quarters/4)`.
    pub fn scale(&self, coeff: impl Into<BigInt>, exp_quarters: i64) -> Self {
        let coeff = coeff.into();
        let mut out = Self::zero(self.var);
        for (e, c) in &self.terms {
            out.add_term(e + exp_quarters, c * &coeff);
        }
        out
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`. Fails unless the division leaves no
    /// remainder in the Laurent ring.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.check_var(divisor)?;
        let (d_lo, d_hi) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(PolyError::DivisionByZero),
        };
        let Some(p_hi) = self.max_exp() else {
            return Ok(Self::zero(self.var));
        };
        let lead = divisor.terms[&d_lo].clone();
        // Quotient exponents cannot exceed this bound.
        let q_hi = p_hi - d_hi;

        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        while let Some(r_lo) = rem.min_exp() {
            let shift = r_lo - d_lo;
            if shift > q_hi {
                return Err(PolyError::InexactDivision);
            }
            let (c, r) = rem.terms[&r_lo].div_rem(&lead);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            let step = divisor.scale(c.clone(), shift);
            rem = &rem - &step;
            quot.add_term(shift, c);
        }
        Ok(quot)
    }

    /// `A -> t^(-1/4)`: a term `c A^k` becomes `c t^(-k/4)`.
    pub fn substitute_a_to_t(&self) -> Result<Self, PolyError> {
        if self.var != Var::A {
            return Err(PolyError::WrongVar { expected: Var::A, found: self.var });
        }
        let mut out = Self::zero(Var::T);
        for (e, c) in &self.terms {
            if e % 4 != 0 {
                return Err(PolyError::FractionalBracketExponent(*e));
            }
            out.add_term(-e / 4, c.clone());
        }
        Ok(out)
    }

    /// The JSON rendering: `[{"num": c, "exp_quarters": e}, ...]` ascending.
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(e, c)| JsonTerm { num: JsonInt::from_bigint(c), exp_quarters: *e })
            .collect()
    }

    pub fn from_json_terms(var: Var, terms: &[JsonTerm]) -> Result<Self, PolyError> {
        let mut p = Self::zero(var);
        let mut last = None;
        for t in terms {
            if last.is_some_and(|l| l >= t.exp_quarters) {
                return Err(PolyError::UnsortedTerms);
            }
            last = Some(t.exp_quarters);
            let c = t.num.to_bigint()?;
            if c.is_zero() {
                return Err(PolyError::ZeroCoefficient);
            }
            p.add_term(t.exp_quarters, c);
        }
        Ok(p)
    }

    /// True when every exponent is a whole power of the variable.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 4 == 0)
    }

    /// True when every exponent lies in `Z + 1/2`.
    pub fn has_half_odd_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.rem_euclid(4) == 2)
    }
}

/// `(-A^3)^k` for any integer `k`.
pub fn neg_cube_a_pow(k: i64) -> LaurentPoly {
    let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::monomial(Var::A, sign, 12 * k)
}

/// `-A^2 - A^-2`, the value of an extra disjoint circle.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_int_exps(Var::A, [(-1, 2), (-1, -2)])
}

/// Integer coefficient for JSON: a plain number when it fits in `i64`,
/// otherwise a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_bigint(c: &BigInt) -> Self {
        match c.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(c.to_string()),
        }
    }

    fn to_bigint(&self) -> Result<BigInt, PolyError> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().map_err(|_| PolyError::BadCoefficient(s.clone())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub num: JsonInt,
    pub exp_quarters: i64,
}

fn fmt_exponent(e: i64) -> String {
    let g = e.abs().gcd(&4);
    let (num, den) = (e / g, 4 / g);
    if den == 1 {
        format!("{num}")
    } else {
        format!("{num}/{den}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}^({})", self.var.symbol(), fmt_exponent(*e))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics on a variable mismatch; use the `try_` form to handle it.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$try(rhs).expect("polynomial variable mismatch")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1, 0)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
