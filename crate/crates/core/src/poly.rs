//! Polynomials with positive integer coefficients encoding multisets of
//! weights (one variable) and weight pairs (two variables).
//!
//! Text form lists terms by descending exponent with the coefficient always
//! written: `16 x^25`, `21 x^9 y^9 + 4 x^3 y^9`. Here `x` is σ and `y` is τ.
//! The empty polynomial renders as `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<OneVarTerm>", from = "Vec<OneVarTerm>")]
pub struct OneVarPolynomial {
    terms: BTreeMap<u64, u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneVarTerm {
    pub exp: u64,
    pub coeff: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<TwoVarTerm>", from = "Vec<TwoVarTerm>")]
pub struct TwoVarPolynomial {
    terms: BTreeMap<(u64, u64), u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoVarTerm {
    pub sigma: u64,
    pub tau: u64,
    pub coeff: u64,
}

impl OneVarPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, exp: u64, coeff: u64) {
        if coeff > 0 {
            *self.terms.entry(exp).or_insert(0) += coeff;
        }
    }

    pub fn coefficient(&self, exp: u64) -> u64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms by descending exponent.
    pub fn terms(&self) -> Vec<OneVarTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(&exp, &coeff)| OneVarTerm { exp, coeff })
            .collect()
    }

    /// Value at σ = 1, the sum of coefficients.
    pub fn at_one(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl TwoVarPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, sigma: u64, tau: u64, coeff: u64) {
        if coeff > 0 {
            *self.terms.entry((sigma, tau)).or_insert(0) += coeff;
        }
    }

    pub fn coefficient(&self, sigma: u64, tau: u64) -> u64 {
        self.terms.get(&(sigma, tau)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms by descending σ-exponent, then descending τ-exponent.
    pub fn terms(&self) -> Vec<TwoVarTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(&(sigma, tau), &coeff)| TwoVarTerm { sigma, tau, coeff })
            .collect()
    }

    /// Substitutes τ = 1.
    pub fn tau_at_one(&self) -> OneVarPolynomial {
        let mut p = OneVarPolynomial::new();
        for (&(a, _), &c) in &self.terms {
            p.add_term(a, c);
        }
        p
    }

    /// Substitutes σ = 1, leaving a polynomial in τ.
    pub fn sigma_at_one(&self) -> OneVarPolynomial {
        let mut p = OneVarPolynomial::new();
        for (&(_, b), &c) in &self.terms {
            p.add_term(b, c);
        }
        p
    }

    /// Value at σ = τ = 1.
    pub fn at_one(&self) -> u64 {
        self.terms.values().sum()
    }
}

/// Result of substituting 1 for some of the variables of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Specialized {
    Two(TwoVarPolynomial),
    One(OneVarPolynomial),
    Value(u64),
}

pub fn evaluate_two_var(p: &TwoVarPolynomial, sigma_one: bool, tau_one: bool) -> Specialized {
    match (sigma_one, tau_one) {
        (false, false) => Specialized::Two(p.clone()),
        (false, true) => Specialized::One(p.tau_at_one()),
        (true, false) => Specialized::One(p.sigma_at_one()),
        (true, true) => Specialized::Value(p.at_one()),
    }
}

pub fn evaluate_one_var(p: &OneVarPolynomial, sigma_one: bool) -> Specialized {
    if sigma_one {
        Specialized::Value(p.at_one())
    } else {
        Specialized::One(p.clone())
    }
}

impl From<OneVarPolynomial> for Vec<OneVarTerm> {
    fn from(p: OneVarPolynomial) -> Self {
        p.terms()
    }
}

impl From<Vec<OneVarTerm>> for OneVarPolynomial {
    fn from(terms: Vec<OneVarTerm>) -> Self {
        let mut p = OneVarPolynomial::new();
        for t in terms {
            p.add_term(t.exp, t.coeff);
        }
        p
    }
}

impl From<TwoVarPolynomial> for Vec<TwoVarTerm> {
    fn from(p: TwoVarPolynomial) -> Self {
        p.terms()
    }
}

impl From<Vec<TwoVarTerm>> for TwoVarPolynomial {
    fn from(terms: Vec<TwoVarTerm>) -> Self {
        let mut p = TwoVarPolynomial::new();
        for t in terms {
            p.add_term(t.sigma, t.tau, t.coeff);
        }
        p
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl fmt::Display for OneVarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms()
            .into_iter()
            .map(|t| format!("{} x^{}", t.coeff, t.exp))
            .collect();
        f.write_str(&join_terms(terms))
    }
}

impl fmt::Display for TwoVarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms()
            .into_iter()
            .map(|t| format!("{} x^{} y^{}", t.coeff, t.sigma, t.tau))
            .collect();
        f.write_str(&join_terms(terms))
    }
}

fn poly_error(msg: impl Into<String>) -> Error {
    Error::Syntax {
        line: 1,
        message: msg.into(),
    }
}

/// Splits one term into its coefficient and the exponents of `x` and `y`.
/// A missing coefficient is 1; a missing variable has exponent 0.
fn parse_term(term: &str) -> Result<(u64, u64, u64)> {
    let mut coeff = None;
    let (mut x, mut y) = (None, None);
    for token in term.split_whitespace() {
        let (var, exp) = match token.split_once('^') {
            Some((v, e)) => (v, e),
            None if token == "x" || token == "y" => (token, "1"),
            None => {
                if coeff.is_some() || x.is_some() || y.is_some() {
                    return Err(poly_error(format!("unexpected {token:?}")));
                }
                coeff = Some(
                    token
                        .parse::<u64>()
                        .map_err(|_| poly_error(format!("bad coefficient {token:?}")))?,
                );
                continue;
            }
        };
        let exp = exp
            .parse::<u64>()
            .map_err(|_| poly_error(format!("bad exponent in {token:?}")))?;
        let slot = match var {
            "x" => &mut x,
            "y" => &mut y,
            _ => return Err(poly_error(format!("unknown variable {var:?}"))),
        };
        if slot.replace(exp).is_some() {
            return Err(poly_error(format!("variable repeated in {term:?}")));
        }
    }
    if coeff.is_none() && x.is_none() && y.is_none() {
        return Err(poly_error("empty term"));
    }
    Ok((coeff.unwrap_or(1), x.unwrap_or(0), y.unwrap_or(0)))
}

fn split_terms(text: &str) -> impl Iterator<Item = &str> {
    text.split('+').map(str::trim)
}

impl FromStr for OneVarPolynomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut p = OneVarPolynomial::new();
        if text.trim() == "0" {
            return Ok(p);
        }
        for term in split_terms(text) {
            let (c, a, b) = parse_term(term)?;
            if b != 0 {
                return Err(poly_error("unexpected y in a one-variable polynomial"));
            }
            p.add_term(a, c);
        }
        Ok(p)
    }
}

impl FromStr for TwoVarPolynomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut p = TwoVarPolynomial::new();
        if text.trim() == "0" {
            return Ok(p);
        }
        for term in split_terms(text) {
            let (c, a, b) = parse_term(term)?;
            p.add_term(a, b, c);
        }
        Ok(p)
    }
}
