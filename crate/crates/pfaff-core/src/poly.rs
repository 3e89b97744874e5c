//! Sparse homogeneous polynomials in the three projective coordinates x0, x1, x2.
//!
//! Every nonzero [`Poly`] is homogeneous: construction and arithmetic enforce
//! that all stored monomials share the declared degree. The zero polynomial
//! keeps a degree tag but stores no terms, and compares equal to every other
//! zero. Coefficients come from any [`Ring`]; most of the library uses
//! `Poly<Scalar>`, the canonical-form workflow uses `Poly<MPoly>`.

use crate::error::{Error, Result};
use crate::parse::{parse_expression, ParseTarget};
use crate::ring::Ring;
use crate::scalar::{FieldSpec, Scalar};
use num::BigRational;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent triple with graded-lexicographic order (degree first, then x0 most
/// significant).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono3(pub [u32; 3]);

impl Mono3 {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, rhs: &Mono3) -> Mono3 {
        Mono3([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }

    /// Componentwise quotient, if `rhs` divides `self`.
    pub fn try_div(&self, rhs: &Mono3) -> Option<Mono3> {
        let mut e = [0u32; 3];
        for (slot, (&a, &b)) in e.iter_mut().zip(self.0.iter().zip(rhs.0.iter())) {
            *slot = a.checked_sub(b)?;
        }
        Some(Mono3(e))
    }
}

impl Ord for Mono3 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono3 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone)]
pub struct Poly<R: Ring> {
    degree: u32,
    terms: BTreeMap<Mono3, R>,
}

impl<R: Ring> Poly<R> {
    pub fn zero(degree: u32) -> Poly<R> {
        Poly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: R) -> Poly<R> {
        Poly::from_term(Mono3([0, 0, 0]), c)
    }

    pub fn one() -> Poly<R> {
        Poly::constant(R::one())
    }

    pub fn from_term(mono: Mono3, coeff: R) -> Poly<R> {
        let mut terms = BTreeMap::new();
        let degree = mono.degree();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Poly { degree, terms }
    }

    /// The coordinate variable `x{k}`.
    pub fn var(k: usize) -> Poly<R> {
        assert!(k < 3, "variable index out of range");
        let mut e = [0u32; 3];
        e[k] = 1;
        Poly::from_term(Mono3(e), R::one())
    }

    /// The linear form c0*x0 + c1*x1 + c2*x2.
    pub fn linear(c: [R; 3]) -> Poly<R> {
        let mut terms = BTreeMap::new();
        for (k, coeff) in c.into_iter().enumerate() {
            if !coeff.is_zero() {
                let mut e = [0u32; 3];
                e[k] = 1;
                terms.insert(Mono3(e), coeff);
            }
        }
        Poly { degree: 1, terms }
    }

    /// Builds a polynomial from term pairs, validating homogeneity.
    pub fn from_terms(degree: u32, pairs: impl IntoIterator<Item = (Mono3, R)>) -> Result<Poly<R>> {
        let mut poly = Poly::zero(degree);
        for (mono, coeff) in pairs {
            if mono.degree() != degree {
                return Err(Error::Inhomogeneous(degree, mono.degree()));
            }
            if coeff.is_zero() {
                continue;
            }
            let entry = poly.terms.entry(mono).or_insert_with(R::zero);
            *entry = entry.add(&coeff);
            if entry.is_zero() {
                poly.terms.remove(&mono);
            }
        }
        Ok(poly)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono3, &R)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Mono3) -> R {
        self.terms.get(mono).cloned().unwrap_or_else(R::zero)
    }

    /// Leading term in graded-lex order, if any.
    pub fn lead(&self) -> Option<(&Mono3, &R)> {
        self.terms.iter().next_back()
    }

    pub fn try_add(&self, rhs: &Poly<R>) -> Result<Poly<R>> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != rhs.degree {
            return Err(Error::DegreeMismatch(self.degree, rhs.degree));
        }
        let mut out = self.clone();
        for (mono, coeff) in &rhs.terms {
            let entry = out.terms.entry(*mono).or_insert_with(R::zero);
            *entry = entry.add(coeff);
            if entry.is_zero() {
                out.terms.remove(mono);
            }
        }
        Ok(out)
    }

    /// Sum; panics on a degree mismatch (see [`Poly::try_add`] for the checked
    /// form).
    pub fn add(&self, rhs: &Poly<R>) -> Poly<R> {
        self.try_add(rhs).expect("degree mismatch in add")
    }

    pub fn try_sub(&self, rhs: &Poly<R>) -> Result<Poly<R>> {
        self.try_add(&rhs.neg())
    }

    pub fn sub(&self, rhs: &Poly<R>) -> Poly<R> {
        self.try_sub(rhs).expect("degree mismatch in sub")
    }

    pub fn neg(&self) -> Poly<R> {
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff = coeff.neg();
        }
        out
    }

    pub fn mul(&self, rhs: &Poly<R>) -> Poly<R> {
        let mut out = Poly::zero(self.degree + rhs.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mono = ma.mul(mb);
                let prod = ca.mul(cb);
                if prod.is_zero() {
                    continue;
                }
                let entry = out.terms.entry(mono).or_insert_with(R::zero);
                *entry = entry.add(&prod);
                if entry.is_zero() {
                    out.terms.remove(&mono);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &R) -> Poly<R> {
        if c.is_zero() {
            return Poly::zero(self.degree);
        }
        let mut out = Poly::zero(self.degree);
        for (mono, coeff) in &self.terms {
            let prod = coeff.mul(c);
            if !prod.is_zero() {
                out.terms.insert(*mono, prod);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly<R> {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to `x{var}`.
    pub fn partial(&self, var: usize) -> Poly<R> {
        assert!(var < 3, "variable index out of range");
        let degree = self.degree.saturating_sub(1);
        let mut out = Poly::zero(degree);
        for (mono, coeff) in &self.terms {
            let e = mono.0[var];
            if e == 0 {
                continue;
            }
            let mut m = *mono;
            m.0[var] -= 1;
            let c = coeff.mul(&R::from_integer(e as i64));
            if !c.is_zero() {
                out.terms.insert(m, c);
            }
        }
        out
    }

    /// Evaluation at a point with coordinates in the coefficient ring.
    pub fn eval(&self, pt: &[R; 3]) -> R {
        let mut powers: [Vec<R>; 3] = [vec![R::one()], vec![R::one()], vec![R::one()]];
        for k in 0..3 {
            let max = self.terms.keys().map(|m| m.0[k]).max().unwrap_or(0);
            for e in 1..=max as usize {
                let next = powers[k][e - 1].mul(&pt[k]);
                powers[k].push(next);
            }
        }
        let mut acc = R::zero();
        for (mono, coeff) in &self.terms {
            let mut term = coeff.clone();
            for k in 0..3 {
                term = term.mul(&powers[k][mono.0[k] as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Applies `f` to every coefficient (dropping zeros), e.g. to reduce mod p
    /// or to evaluate symbolic coefficients.
    pub fn map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Poly<S> {
        let mut out = Poly::zero(self.degree);
        for (mono, coeff) in &self.terms {
            let c = f(coeff);
            if !c.is_zero() {
                out.terms.insert(*mono, c);
            }
        }
        out
    }

    pub fn try_map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> Result<S>) -> Result<Poly<S>> {
        let mut out = Poly::zero(self.degree);
        for (mono, coeff) in &self.terms {
            let c = f(coeff)?;
            if !c.is_zero() {
                out.terms.insert(*mono, c);
            }
        }
        Ok(out)
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    /// Equality as polynomial functions: zero polynomials of any declared
    /// degree are equal.
    fn eq(&self, other: &Self) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        if !self.is_zero() && self.degree != other.degree {
            return false;
        }
        self.terms
            .iter()
            .zip(other.terms.iter())
            .all(|((ma, ca), (mb, cb))| ma == mb && ca == cb)
    }
}

impl Poly<Scalar> {
    /// The field the coefficients live in (rational for the zero polynomial).
    pub fn field(&self) -> FieldSpec {
        self.terms
            .values()
            .next()
            .map(|c| c.field())
            .unwrap_or(FieldSpec::Rational)
    }

    /// Moves every coefficient into `field`.
    pub fn into_field(&self, field: FieldSpec) -> Result<Poly<Scalar>> {
        self.try_map_coeffs(|c| c.clone().try_into_field(field))
    }

    /// Evaluates at a point given as plain scalars.
    pub fn eval_point(&self, pt: &[Scalar; 3]) -> Scalar {
        self.eval(pt)
    }

    /// Exact quotient `self / g`; fails with the offending remainder witness
    /// when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Poly<Scalar>) -> Result<Poly<Scalar>> {
        assert!(!g.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Poly::zero(0));
        }
        if self.degree < g.degree {
            return Err(Error::NotDivisible {
                witness: self.to_string(),
            });
        }
        let (g_mono, g_coeff) = g.lead().expect("nonzero divisor");
        let mut quotient = Poly::zero(self.degree - g.degree);
        let mut rem = self.clone();
        while !rem.is_zero() {
            let (r_mono, r_coeff) = rem.lead().expect("nonzero remainder");
            let Some(q_mono) = r_mono.try_div(g_mono) else {
                return Err(Error::NotDivisible {
                    witness: Poly::from_term(*r_mono, r_coeff.clone()).to_string(),
                });
            };
            let q_coeff = r_coeff.div(g_coeff);
            let t = Poly::from_term(q_mono, q_coeff);
            quotient = quotient.add(&t);
            rem = rem.sub(&t.mul(g));
        }
        Ok(quotient)
    }

    /// Parses the polynomial grammar (variables x0,x1,x2 with aliases x,y,z)
    /// and validates homogeneity; coefficients land in `field`.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Poly<Scalar>> {
        let resolve = |name: &str| -> Option<u32> {
            match name {
                "x0" | "x" => Some(0),
                "x1" | "y" => Some(1),
                "x2" | "z" => Some(2),
                _ => None,
            }
        };
        let raw: RawPoly = parse_expression(text, &resolve)?;
        let mut degree = None;
        for mono in raw.0.keys() {
            match degree {
                None => degree = Some(mono.degree()),
                Some(d) if d != mono.degree() => {
                    return Err(Error::Inhomogeneous(d, mono.degree()))
                }
                _ => {}
            }
        }
        let poly = Poly {
            degree: degree.unwrap_or(0),
            terms: raw.0,
        };
        poly.into_field(field)
    }
}

/// Parse-time accumulator: a trivariate polynomial with no homogeneity
/// constraint. Validated and converted on the way out of [`Poly::parse`].
struct RawPoly(BTreeMap<Mono3, Scalar>);

impl Clone for RawPoly {
    fn clone(&self) -> Self {
        RawPoly(self.0.clone())
    }
}

impl ParseTarget for RawPoly {
    fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        let c = Scalar::Rat(q);
        if !c.is_zero() {
            terms.insert(Mono3([0, 0, 0]), c);
        }
        RawPoly(terms)
    }

    fn variable(id: u32) -> Self {
        let mut e = [0u32; 3];
        e[id as usize] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Mono3(e), Scalar::one());
        RawPoly(terms)
    }

    fn p_add(&self, rhs: &Self) -> Self {
        let mut out = self.0.clone();
        for (mono, coeff) in &rhs.0 {
            let entry = out.entry(*mono).or_insert_with(Scalar::zero);
            *entry = entry.add(coeff);
            if entry.is_zero() {
                out.remove(mono);
            }
        }
        RawPoly(out)
    }

    fn p_mul(&self, rhs: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &rhs.0 {
                let mono = ma.mul(mb);
                let prod = ca.mul(cb);
                let entry = out.entry(mono).or_insert_with(Scalar::zero);
                *entry = entry.add(&prod);
                if entry.is_zero() {
                    out.remove(&mono);
                }
            }
        }
        RawPoly(out)
    }

    fn p_neg(&self) -> Self {
        RawPoly(self.0.iter().map(|(m, c)| (*m, c.neg())).collect())
    }
}

const VAR_NAMES: [&str; 3] = ["x0", "x1", "x2"];

impl fmt::Display for Poly<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (mono, coeff) in self.terms.iter().rev() {
            let (sign_neg, mag) = match coeff {
                Scalar::Rat(q) if q < &BigRational::from_integer(0.into()) => {
                    (true, Scalar::Rat(-q))
                }
                other => (false, other.clone()),
            };
            if first {
                if sign_neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if sign_neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            let is_one = mag == Scalar::one();
            if !is_one || mono.degree() == 0 {
                factors.push(format!("{mag}"));
            }
            for (name, &exp) in VAR_NAMES.iter().zip(mono.0.iter()) {
                match exp {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
