//! Sparse multivariate polynomials over [`Scalar`] with numbered variables.
//!
//! Used as the coefficient ring for symbolic parameter computations: the
//! canonical-form workflow treats the matrix entries c_{ij} as indeterminates,
//! so pfaffians there live in `Poly<MPoly>`. Variables are bare indices; name
//! tables are supplied at parse/format time by the caller.

use crate::error::Result;
use crate::parse::{parse_expression, ParseTarget};
use crate::ring::Ring;
use crate::scalar::Scalar;
use num::BigRational;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Sparse exponent vector, sorted by variable index, exponents > 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MVMono(Vec<(u16, u16)>);

impl MVMono {
    pub fn one() -> MVMono {
        MVMono(Vec::new())
    }

    pub fn var(v: u16) -> MVMono {
        MVMono(vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exponent(&self, v: u16) -> u16 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = u16> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, rhs: &MVMono) -> MVMono {
        let mut out = Vec::with_capacity(self.0.len() + rhs.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < rhs.0.len() {
            match (self.0.get(i), rhs.0.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&t), None) => {
                    out.push(t);
                    i += 1;
                }
                (None, Some(&t)) => {
                    out.push(t);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        MVMono(out)
    }

    /// Removes `v`, returning its exponent and the remaining monomial.
    fn split_var(&self, v: u16) -> (u16, MVMono) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut exp = 0;
        for &(w, e) in &self.0 {
            if w == v {
                exp = e;
            } else {
                rest.push((w, e));
            }
        }
        (exp, MVMono(rest))
    }
}

impl Ord for MVMono {
    /// Graded lexicographic: total degree first, then lower-indexed variables
    /// more significant, higher exponent greater.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // Earlier variable present only on one side: that side has
                    // the larger exponent there, so it is lex-greater.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for MVMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over [`Scalar`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MPoly {
    terms: BTreeMap<MVMono, Scalar>,
}

impl MPoly {
    pub fn constant(c: Scalar) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(MVMono::one(), c);
        }
        MPoly { terms }
    }

    pub fn var(v: u16) -> MPoly {
        let mut terms = BTreeMap::new();
        terms.insert(MVMono::var(v), Scalar::one());
        MPoly { terms }
    }

    pub fn from_term(mono: MVMono, coeff: Scalar) -> MPoly {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        MPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MVMono, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: u16) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// The value if the polynomial is constant, else None.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (mono, coeff) = self.terms.iter().next().unwrap();
                (mono.degree() == 0).then(|| coeff.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::default();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, v)| {
                    let p = v.mul(c);
                    (!p.is_zero()).then_some((m.clone(), p))
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Splits into coefficient layers by the exponent of `v`:
    /// returns the list of (exponent, polynomial-without-v) pairs.
    pub fn layers_in(&self, v: u16) -> BTreeMap<u16, MPoly> {
        let mut out: BTreeMap<u16, MPoly> = BTreeMap::new();
        for (mono, coeff) in &self.terms {
            let (e, rest) = mono.split_var(v);
            out.entry(e).or_default().terms.insert(rest, coeff.clone());
        }
        out
    }

    /// Substitutes `replacement` for variable `v`.
    pub fn subst(&self, v: u16, replacement: &MPoly) -> MPoly {
        let mut acc = MPoly::default();
        let mut powers: Vec<MPoly> = vec![MPoly::one()];
        for (e, layer) in self.layers_in(v) {
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().mul(replacement);
                powers.push(next);
            }
            acc = acc.add(&layer.mul(&powers[e as usize]));
        }
        acc
    }

    /// Partial derivative with respect to `v`.
    pub fn partial(&self, v: u16) -> MPoly {
        let mut out = MPoly::default();
        for (mono, coeff) in &self.terms {
            let (e, rest) = mono.split_var(v);
            if e == 0 {
                continue;
            }
            let new_mono = if e == 1 {
                rest
            } else {
                rest.mul(&MVMono(vec![(v, e - 1)]))
            };
            let c = coeff.mul(&Scalar::from_integer(e as i64));
            if !c.is_zero() {
                // Decrementing one exponent is injective on monomials, so no
                // two source terms collide here.
                out.terms.insert(new_mono, c);
            }
        }
        out
    }

    /// Evaluates with `assign[v]` substituted for variable v. Every variable
    /// occurring in the polynomial must be covered.
    pub fn eval(&self, assign: &dyn Fn(u16) -> Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (mono, coeff) in &self.terms {
            let mut term = coeff.clone();
            for &(v, e) in &mono.0 {
                term = term.mul(&assign(v).pow(e as u32));
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Parses an expression whose variables are the entries of `names`.
    pub fn parse(text: &str, names: &[&str]) -> Result<MPoly> {
        let resolve = |ident: &str| -> Option<u32> {
            names.iter().position(|n| *n == ident).map(|i| i as u32)
        };
        parse_expression(text, &resolve)
    }

    /// Formats with the given variable name table, descending graded-lex.
    pub fn format_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = match coeff {
                Scalar::Rat(q) if q < &BigRational::from_integer(0.into()) => {
                    (true, Scalar::Rat(-q))
                }
                other => (false, other.clone()),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != Scalar::one() || mono.degree() == 0 {
                factors.push(format!("{mag}"));
            }
            for &(v, e) in &mono.0 {
                let name = names
                    .get(v as usize)
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| format!("v{v}"));
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl Ring for MPoly {
    fn zero() -> MPoly {
        MPoly::default()
    }

    fn one() -> MPoly {
        MPoly::constant(Scalar::one())
    }

    fn from_integer(n: i64) -> MPoly {
        MPoly::constant(Scalar::from_int(n))
    }

    fn add(&self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (mono, coeff) in &rhs.terms {
            let entry = out.terms.entry(mono.clone()).or_insert_with(Scalar::zero);
            *entry = entry.add(coeff);
            if entry.is_zero() {
                out.terms.remove(mono);
            }
        }
        out
    }

    fn sub(&self, rhs: &MPoly) -> MPoly {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mono = ma.mul(mb);
                let prod = ca.mul(cb);
                if prod.is_zero() {
                    continue;
                }
                let entry = out.terms.entry(mono.clone()).or_insert_with(Scalar::zero);
                *entry = entry.add(&prod);
                if entry.is_zero() {
                    out.terms.remove(&mono);
                }
            }
        }
        out
    }

    fn neg(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl ParseTarget for MPoly {
    fn from_rational(q: BigRational) -> Self {
        MPoly::constant(Scalar::Rat(q))
    }

    fn variable(id: u32) -> Self {
        MPoly::var(id as u16)
    }

    fn p_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }

    fn p_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }

    fn p_neg(&self) -> Self {
        self.neg()
    }
}
