//! Canonical-form workflow for pfaffian representations of the plane quartic
//! x^4 - y*z^3 - y^4 (coordinates x = x0, y = x1, z = x2).
//!
//! Every linear pfaffian representation of the curve is congruent to the 8x8
//! canonical pencil A = x*X + z*Z + y*C, where X and Z are two fixed
//! constant skew matrices and C carries 28 upper-triangle parameters c_ij.
//! This module derives everything downstream of that frame symbolically:
//!
//! - the seven coefficient relations (starting with c48 = 1) that are linear
//!   in their targets, eliminated in a fixed triangular order;
//! - the reduced 12-parameter form of C after the relations and a congruence
//!   normalization zero out the remaining non-free entries;
//! - the three residual equations in the 12 parameters equivalent to
//!   Pf A = x^4 - y*z^3 - y^4;
//! - the three-parameter family of congruences P(a, e, p) preserving the
//!   frame, its explicit action on the 12 parameters, and the two
//!   polynomial invariants of that action;
//! - solution sampling over prime fields and the Jacobian-based dimension
//!   count 12 - 3 (residual equations) - 3 (action parameters) = 6.
//!
//! Invariants: all printed-formula objects (relations, reduced entries,
//! residuals) are regenerated from the pfaffian expansion, never hardcoded;
//! parameter indices are 1-based pairs (i, j) with i < j <= 8 throughout.

use crate::error::{Error, Result};
use crate::matrix::ConstMatrix;
use crate::mpoly::MPoly;
use crate::poly::{Mono3, Poly};
use crate::reps::PfaffianRep;
use crate::ring::Ring;
use crate::scalar::{joint_field, FieldSpec, Scalar};
use crate::skew::SkewPolyMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::sync::OnceLock;

// ---- The frame and parameter indexing ----

/// Support of the x-coefficient matrix (1-based pairs).
const X_PAIRS: [(usize, usize); 4] = [(1, 8), (2, 7), (3, 6), (4, 5)];

/// Support of the z-coefficient matrix (1-based pairs).
const Z_PAIRS: [(usize, usize); 3] = [(1, 7), (2, 6), (3, 5)];

/// Names of the 28 parameters, indexed by [`pair_index`].
pub const PARAM_NAMES: [&str; 28] = [
    "c12", "c13", "c14", "c15", "c16", "c17", "c18", "c23", "c24", "c25", "c26", "c27", "c28",
    "c34", "c35", "c36", "c37", "c38", "c45", "c46", "c47", "c48", "c56", "c57", "c58", "c67",
    "c68", "c78",
];

/// The 12 parameters that remain free in reduced mode, in reporting order.
pub const REDUCED_FREE: [(usize, usize); 12] = [
    (1, 2),
    (1, 3),
    (2, 3),
    (2, 5),
    (2, 6),
    (3, 5),
    (3, 6),
    (4, 5),
    (4, 6),
    (5, 6),
    (5, 7),
    (6, 7),
];

/// The 9 parameters normalized to zero in the reduced form.
const ZEROED_IN_REDUCED: [(usize, usize); 9] = [
    (1, 4),
    (2, 4),
    (3, 4),
    (1, 8),
    (2, 8),
    (3, 8),
    (5, 8),
    (6, 8),
    (7, 8),
];

/// Elimination targets and the coefficient monomial (in x, y, z) each one is
/// solved from, in dependency order: every step is unit-linear in its target
/// once the earlier substitutions are in place.
const ELIMINATION: [((usize, usize), Mono3); 7] = [
    ((4, 8), Mono3([0, 1, 3])),
    ((4, 7), Mono3([1, 1, 2])),
    ((3, 7), Mono3([2, 1, 1])),
    ((2, 7), Mono3([3, 1, 0])),
    ((1, 7), Mono3([0, 2, 2])),
    ((1, 6), Mono3([1, 2, 1])),
    ((1, 5), Mono3([2, 2, 0])),
];

/// The residual coefficient monomials, in reporting order: x*y^3, y^4, y^3*z.
const RESIDUAL_MONOMIALS: [Mono3; 3] = [Mono3([1, 3, 0]), Mono3([0, 4, 0]), Mono3([0, 3, 1])];

/// Dimension of the congruence family acting on the reduced parameters.
pub const ACTION_DIMENSION: usize = 3;

/// Variable index of the parameter c_ij (1-based, i < j <= 8).
pub fn pair_index(i: usize, j: usize) -> Result<u16> {
    if i < 1 || j <= i || j > 8 {
        return Err(Error::IndexOutOfRange { i, j, n: 8 });
    }
    Ok(((i - 1) * (16 - i) / 2 + (j - i - 1)) as u16)
}

/// Inverse of [`pair_index`].
pub fn index_pair(v: u16) -> (usize, usize) {
    let mut v = v as usize;
    for i in 1..8 {
        let row = 8 - i;
        if v < row {
            return (i, i + 1 + v);
        }
        v -= row;
    }
    unreachable!("variable index out of range");
}

/// The fixed part of the canonical pencil: the constant skew matrices
/// multiplying x and z, and the target curve x^4 - y*z^3 - y^4.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalFrame {
    x_mat: ConstMatrix,
    z_mat: ConstMatrix,
    curve: Poly<Scalar>,
}

impl Default for CanonicalFrame {
    fn default() -> Self {
        CanonicalFrame::new()
    }
}

impl CanonicalFrame {
    pub fn new() -> CanonicalFrame {
        let mut x_mat = ConstMatrix::zero(8, 8);
        for &(i, j) in &X_PAIRS {
            x_mat.set(i - 1, j - 1, Scalar::one());
            x_mat.set(j - 1, i - 1, Scalar::from_int(-1));
        }
        let mut z_mat = ConstMatrix::zero(8, 8);
        for &(i, j) in &Z_PAIRS {
            z_mat.set(i - 1, j - 1, Scalar::one());
            z_mat.set(j - 1, i - 1, Scalar::from_int(-1));
        }
        let curve = Poly::parse("x0^4 - x1*x2^3 - x1^4", FieldSpec::Rational).expect("fixed curve");
        CanonicalFrame {
            x_mat,
            z_mat,
            curve,
        }
    }

    pub fn x_mat(&self) -> &ConstMatrix {
        &self.x_mat
    }

    pub fn z_mat(&self) -> &ConstMatrix {
        &self.z_mat
    }

    pub fn curve(&self) -> &Poly<Scalar> {
        &self.curve
    }
}

/// The curve as a polynomial with multivariate-constant coefficients, for
/// comparison against symbolic pfaffians.
fn curve_mpoly() -> Poly<MPoly> {
    Poly::from_terms(
        4,
        [
            (Mono3([4, 0, 0]), MPoly::constant(Scalar::from_int(1))),
            (Mono3([0, 1, 3]), MPoly::constant(Scalar::from_int(-1))),
            (Mono3([0, 4, 0]), MPoly::constant(Scalar::from_int(-1))),
        ],
    )
    .expect("degree 4 terms")
}

/// The canonical pencil with all 28 parameters as indeterminates:
/// A = x*X + z*Z + y*C(c12, ..., c78).
pub fn symbolic_full_matrix() -> SkewPolyMatrix<MPoly> {
    let one = || MPoly::constant(Scalar::from_int(1));
    let mut a = SkewPolyMatrix::new(8, 1).expect("even size");
    for i in 1..=8usize {
        for j in (i + 1)..=8 {
            let mut entry: Poly<MPoly> = Poly::zero(1);
            if X_PAIRS.contains(&(i, j)) {
                entry = entry.add(&Poly::from_term(Mono3([1, 0, 0]), one()));
            }
            if Z_PAIRS.contains(&(i, j)) {
                entry = entry.add(&Poly::from_term(Mono3([0, 0, 1]), one()));
            }
            let v = pair_index(i, j).expect("valid pair");
            entry = entry.add(&Poly::from_term(Mono3([0, 1, 0]), MPoly::var(v)));
            a.set(i - 1, j - 1, entry).expect("linear entry");
        }
    }
    a
}

// ---- Linear relations and the reduced form ----

/// One derived substitution c_ij = rhs(other parameters).
#[derive(Debug, Clone, PartialEq)]
pub struct LinearRelation {
    pub i: usize,
    pub j: usize,
    pub rhs: MPoly,
}

impl LinearRelation {
    /// Human-readable "cij = ..." line.
    pub fn render(&self) -> String {
        format!(
            "c{}{} = {}",
            self.i,
            self.j,
            self.rhs.format_with(&PARAM_NAMES)
        )
    }
}

fn derive_relations_uncached() -> Result<Vec<LinearRelation>> {
    let pf = symbolic_full_matrix().pfaffian();
    let mut diff = pf.sub(&curve_mpoly());
    let mut out = Vec::with_capacity(ELIMINATION.len());
    for &((i, j), mono) in ELIMINATION.iter() {
        let v = pair_index(i, j)?;
        let eq = diff.coeff(&mono);
        let layers = eq.layers_in(v);
        let too_high = layers.keys().any(|&e| e > 1);
        let unit = layers.get(&1).and_then(|m| m.as_constant());
        let unit = match unit {
            Some(u) if !u.is_zero() && !too_high => u,
            _ => {
                return Err(Error::EliminationFailed {
                    target: format!("c{i}{j}"),
                })
            }
        };
        let rest = layers.get(&0).cloned().unwrap_or_else(MPoly::zero);
        let rhs = rest.scale(&unit.inv().neg());
        diff = diff.map_coeffs(|m| m.subst(v, &rhs));
        out.push(LinearRelation { i, j, rhs });
    }
    for &(_, mono) in ELIMINATION.iter() {
        if !diff.coeff(&mono).is_zero() {
            return Err(Error::EliminationFailed {
                target: "post-substitution check".into(),
            });
        }
    }
    Ok(out)
}

/// The seven substitutions that make the canonical pfaffian match the
/// coefficients of the curve on its zero monomials, derived symbolically and
/// cached. Order: c48, c47, c37, c27, c17, c16, c15.
pub fn derive_linear_relations() -> Result<&'static [LinearRelation]> {
    static CACHE: OnceLock<Result<Vec<LinearRelation>>> = OnceLock::new();
    match CACHE.get_or_init(derive_relations_uncached) {
        Ok(v) => Ok(v.as_slice()),
        Err(e) => Err(e.clone()),
    }
}

fn reduced_matrix_uncached() -> Result<SkewPolyMatrix<MPoly>> {
    let relations = derive_linear_relations()?;
    let mut m = symbolic_full_matrix();
    for rel in relations {
        let v = pair_index(rel.i, rel.j)?;
        m = m.map_entries(|e| e.map_coeffs(|c| c.subst(v, &rel.rhs)))?;
    }
    let zero = MPoly::zero();
    for &(i, j) in ZEROED_IN_REDUCED.iter() {
        let v = pair_index(i, j)?;
        m = m.map_entries(|e| e.map_coeffs(|c| c.subst(v, &zero)))?;
    }
    Ok(m)
}

/// The canonical pencil over the 12 free parameters: the full matrix after
/// the linear relations and the normalization of the 9 congruence-removable
/// parameters to zero. Cached.
pub fn reduced_symbolic_matrix() -> Result<&'static SkewPolyMatrix<MPoly>> {
    static CACHE: OnceLock<Result<SkewPolyMatrix<MPoly>>> = OnceLock::new();
    match CACHE.get_or_init(reduced_matrix_uncached) {
        Ok(v) => Ok(v),
        Err(e) => Err(e.clone()),
    }
}

// ---- The residual system ----

/// One residual coefficient equation: `equation` = 0 is the condition on the
/// 12 parameters coming from the stated monomial of Pf A - F.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualEquation {
    pub monomial: Mono3,
    pub equation: MPoly,
}

fn residuals_uncached() -> Result<Vec<ResidualEquation>> {
    let m = reduced_symbolic_matrix()?;
    let diff = m.pfaffian().sub(&curve_mpoly());
    let found: BTreeMap<Mono3, MPoly> = diff.terms().map(|(mono, c)| (*mono, c.clone())).collect();
    if found.len() != 3 {
        return Err(Error::WrongCount {
            expected: 3,
            got: found.len(),
        });
    }
    let mut out = Vec::with_capacity(3);
    for mono in RESIDUAL_MONOMIALS {
        match found.get(&mono) {
            Some(eq) => out.push(ResidualEquation {
                monomial: mono,
                equation: eq.clone(),
            }),
            None => {
                return Err(Error::WrongCount {
                    expected: 3,
                    got: out.len(),
                })
            }
        }
    }
    Ok(out)
}

/// The three equations in the 12 free parameters whose vanishing is
/// equivalent to Pf A = x^4 - y*z^3 - y^4. Cached; reporting order is the
/// x*y^3, y^4, y^3*z coefficient.
pub fn residual_system() -> Result<&'static [ResidualEquation]> {
    static CACHE: OnceLock<Result<Vec<ResidualEquation>>> = OnceLock::new();
    match CACHE.get_or_init(residuals_uncached) {
        Ok(v) => Ok(v.as_slice()),
        Err(e) => Err(e.clone()),
    }
}

// ---- Parameter sets ----

/// Whether a parameter set carries all 28 entries or the reduced 12.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamMode {
    Full,
    Reduced,
}

/// An assignment of scalars to the canonical-form parameters c_ij.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticParams {
    mode: ParamMode,
    values: BTreeMap<(usize, usize), Scalar>,
    field: FieldSpec,
}

impl QuarticParams {
    fn build(
        mode: ParamMode,
        required: &[(usize, usize)],
        values: BTreeMap<(usize, usize), Scalar>,
    ) -> Result<QuarticParams> {
        for &(i, j) in values.keys() {
            pair_index(i, j)?;
            if !required.contains(&(i, j)) {
                return Err(Error::UnexpectedParameter { i, j });
            }
        }
        for &(i, j) in required {
            if !values.contains_key(&(i, j)) {
                return Err(Error::MissingParameter { i, j });
            }
        }
        let refs: Vec<&Scalar> = values.values().collect();
        let field = joint_field(&refs)?;
        let values = values
            .into_iter()
            .map(|(k, v)| Ok((k, v.try_into_field(field)?)))
            .collect::<Result<_>>()?;
        Ok(QuarticParams {
            mode,
            values,
            field,
        })
    }

    /// Wraps exactly the 12 free parameters of the reduced form.
    pub fn reduced(values: BTreeMap<(usize, usize), Scalar>) -> Result<QuarticParams> {
        QuarticParams::build(ParamMode::Reduced, &REDUCED_FREE, values)
    }

    /// Wraps all 28 upper-triangle parameters.
    pub fn full(values: BTreeMap<(usize, usize), Scalar>) -> Result<QuarticParams> {
        let mut all = Vec::with_capacity(28);
        for i in 1..=8usize {
            for j in (i + 1)..=8 {
                all.push((i, j));
            }
        }
        QuarticParams::build(ParamMode::Full, &all, values)
    }

    pub fn mode(&self) -> ParamMode {
        self.mode
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&Scalar> {
        self.values
            .get(&(i, j))
            .ok_or(Error::MissingParameter { i, j })
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.values.iter()
    }

    pub fn into_field(self, field: FieldSpec) -> Result<QuarticParams> {
        let values = self
            .values
            .into_iter()
            .map(|(k, v)| Ok((k, v.try_into_field(field)?)))
            .collect::<Result<_>>()?;
        Ok(QuarticParams {
            mode: self.mode,
            values,
            field,
        })
    }

    /// Expands reduced parameters into the full 28-entry set by evaluating
    /// the derived composite entries.
    pub fn to_full(&self) -> Result<QuarticParams> {
        if self.mode == ParamMode::Full {
            return Ok(self.clone());
        }
        let sym = reduced_symbolic_matrix()?;
        let mut values = BTreeMap::new();
        for i in 1..=8usize {
            for j in (i + 1)..=8 {
                let coeff = sym.entry(i - 1, j - 1).coeff(&Mono3([0, 1, 0]));
                let value = coeff
                    .eval(&|v| {
                        let (a, b) = index_pair(v);
                        self.values[&(a, b)].clone()
                    })
                    .try_into_field(self.field)?;
                values.insert((i, j), value);
            }
        }
        QuarticParams::full(values)
    }

    fn require_reduced(&self) -> Result<()> {
        if self.mode != ParamMode::Reduced {
            return Err(Error::WrongMode("reduced".into()));
        }
        Ok(())
    }
}

// ---- Assembly and verification ----

/// The canonical pencil at a concrete parameter set: x*X + z*Z + y*C.
/// In reduced mode the composite entries of C are evaluated from the derived
/// 12-parameter matrix.
pub fn assemble_canonical(params: &QuarticParams) -> Result<SkewPolyMatrix<Scalar>> {
    let field = params.field();
    let frame = CanonicalFrame::new();
    let mut a = SkewPolyMatrix::new(8, 1)?;
    match params.mode() {
        ParamMode::Full => {
            for i in 1..=8usize {
                for j in (i + 1)..=8 {
                    let mut coeffs = [
                        Scalar::field_zero(field),
                        params.get(i, j)?.clone(),
                        Scalar::field_zero(field),
                    ];
                    if X_PAIRS.contains(&(i, j)) {
                        coeffs[0] = Scalar::field_one(field);
                    }
                    if Z_PAIRS.contains(&(i, j)) {
                        coeffs[2] = Scalar::field_one(field);
                    }
                    a.set(i - 1, j - 1, Poly::linear(coeffs))?;
                }
            }
        }
        ParamMode::Reduced => {
            let sym = reduced_symbolic_matrix()?;
            for (i, j, entry) in sym.upper_entries() {
                let concrete = entry.try_map_coeffs(|m| {
                    m.eval(&|v| {
                        let (a, b) = index_pair(v);
                        params.values[&(a, b)].clone()
                    })
                    .try_into_field(field)
                })?;
                a.set(i, j, concrete)?;
            }
        }
    }
    let _ = frame;
    Ok(a)
}

/// Assembles the pencil and verifies Pf A = x^4 - y*z^3 - y^4 over the
/// parameter field, returning the verified representation (scale 1).
pub fn verified_representation(params: &QuarticParams) -> Result<PfaffianRep> {
    let a = assemble_canonical(params)?;
    let curve = CanonicalFrame::new().curve().into_field(params.field())?;
    PfaffianRep::verify(a.pencil_coefficients()?, curve)
}

/// Evaluates the three residual equations at a reduced parameter set.
pub fn residuals_at(params: &QuarticParams) -> Result<[Scalar; 3]> {
    params.require_reduced()?;
    let field = params.field();
    let res = residual_system()?;
    let mut out = [
        Scalar::field_zero(field),
        Scalar::field_zero(field),
        Scalar::field_zero(field),
    ];
    for (slot, r) in out.iter_mut().zip(res.iter()) {
        *slot = r
            .equation
            .eval(&|v| {
                let (a, b) = index_pair(v);
                params.values[&(a, b)].clone()
            })
            .try_into_field(field)?;
    }
    Ok(out)
}

// ---- The parameter action ----

/// A frame-preserving congruence, parametrized by a, e, p with p != 0 and
/// a != e.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    a: Scalar,
    e: Scalar,
    p: Scalar,
}

impl GroupElement {
    pub fn new(a: Scalar, e: Scalar, p: Scalar) -> Result<GroupElement> {
        let field = joint_field(&[&a, &e, &p])?;
        let a = a.try_into_field(field)?;
        let e = e.try_into_field(field)?;
        let p = p.try_into_field(field)?;
        if p.is_zero() || a == e {
            return Err(Error::InvalidGroupElement);
        }
        Ok(GroupElement { a, e, p })
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn e(&self) -> &Scalar {
        &self.e
    }

    pub fn p(&self) -> &Scalar {
        &self.p
    }

    fn promoted(&self, field: FieldSpec) -> Result<(Scalar, Scalar, Scalar)> {
        let a = self.a.clone().try_into_field(field)?;
        let e = self.e.clone().try_into_field(field)?;
        let p = self.p.clone().try_into_field(field)?;
        if p.is_zero() || a == e {
            return Err(Error::InvalidGroupElement);
        }
        Ok((a, e, p))
    }
}

/// The 8x8 block congruence matrix of a group element: scalar blocks
/// [[(1/p)Id, (a/p)Id], [(p/(e-a))Id, (pe/(e-a))Id]], of determinant 1.
/// Congruence of the canonical pencil by it fixes the x and z matrices and
/// the pfaffian exactly; the y-part it produces satisfies the linear
/// relations but leaves the reduced normalization (the parameter action
/// composes this congruence with the return to reduced form).
pub fn group_block_matrix(g: &GroupElement, field: FieldSpec) -> Result<ConstMatrix> {
    let (a, e, p) = g.promoted(field)?;
    let ea = e.sub(&a);
    let alpha = p.inv();
    let beta = a.div(&p);
    let gamma = p.div(&ea);
    let delta = p.mul(&e).div(&ea);
    let mut m = ConstMatrix::zero(8, 8);
    for k in 0..4 {
        m.set(k, k, alpha.clone());
        m.set(k, 4 + k, beta.clone());
        m.set(4 + k, k, gamma.clone());
        m.set(4 + k, 4 + k, delta.clone());
    }
    Ok(m)
}

/// The action of a group element on the 12 reduced parameters: the explicit
/// parameter map of the frame-preserving equivalence followed by the return
/// to reduced form. It fixes c26, c45, c46, maps residual solutions to
/// residual solutions, and leaves [`invariant_pair`] unchanged.
pub fn apply_group_action(params: &QuarticParams, g: &GroupElement) -> Result<QuarticParams> {
    params.require_reduced()?;
    let field = match (params.field(), g.a.field()) {
        (FieldSpec::Rational, f) => f,
        (f, FieldSpec::Rational) => f,
        (f1, f2) if f1 == f2 => f1,
        (f1, f2) => {
            return Err(Error::UnsupportedField(
                f2.descriptor(),
                format!("parameters live in {}", f1.descriptor()),
            ))
        }
    };
    let pp = params.clone().into_field(field)?;
    let (a, e, p) = g.promoted(field)?;
    let c = |i: usize, j: usize| pp.values[&(i, j)].clone();
    let int = Scalar::from_int;
    let p2 = p.pow(2);
    let ae = a.sub(&e);
    let ae2 = ae.pow(2);

    let c46sq = c(4, 6).pow(2);
    // c12 <- (c12 + a(-2c25 - 2c36c46 - 3c45c46 + a c56 + a c46c67)) / p^2
    let inner12 = int(-2)
        .mul(&c(2, 5))
        .add(&int(-2).mul(&c(3, 6)).mul(&c(4, 6)))
        .add(&int(-3).mul(&c(4, 5)).mul(&c(4, 6)))
        .add(&a.mul(&c(5, 6)))
        .add(&a.mul(&c(4, 6)).mul(&c(6, 7)));
    let c12 = c(1, 2).add(&a.mul(&inner12)).div(&p2);
    // c13 <- (c13 + a(-c26 - 2c35 - c46^2 + a c57)) / p^2
    let inner13 = c(2, 6)
        .neg()
        .add(&int(-2).mul(&c(3, 5)))
        .sub(&c46sq)
        .add(&a.mul(&c(5, 7)));
    let c13 = c(1, 3).add(&a.mul(&inner13)).div(&p2);
    // c23 <- (c23 + a(-2c36 - c45 + a c67)) / p^2
    let inner23 = int(-2).mul(&c(3, 6)).sub(&c(4, 5)).add(&a.mul(&c(6, 7)));
    let c23 = c(2, 3).add(&a.mul(&inner23)).div(&p2);
    // c25 <- (c12 - a c25 - c23c46 - 2a c45c46 - e c25 + a e c56) / (a - e)
    let c25 = c(1, 2)
        .sub(&a.mul(&c(2, 5)))
        .sub(&c(2, 3).mul(&c(4, 6)))
        .sub(&int(2).mul(&a).mul(&c(4, 5)).mul(&c(4, 6)))
        .sub(&e.mul(&c(2, 5)))
        .add(&a.mul(&e).mul(&c(5, 6)))
        .div(&ae);
    // c35 <- (c13 - e c35 - a(c26 + c35 + c46^2 - e c57)) / (a - e)
    let inner35 = c(2, 6).add(&c(3, 5)).add(&c46sq).sub(&e.mul(&c(5, 7)));
    let c35 = c(1, 3).sub(&e.mul(&c(3, 5))).sub(&a.mul(&inner35)).div(&ae);
    // c36 <- (c23 - e c36 - a(c36 + c45 - e c67)) / (a - e)
    let inner36 = c(3, 6).add(&c(4, 5)).sub(&e.mul(&c(6, 7)));
    let c36 = c(2, 3).sub(&e.mul(&c(3, 6))).sub(&a.mul(&inner36)).div(&ae);
    // c56 <- (c12 - c23c46 + e(-2c25 - 2c45c46 + e c56)) p^2 / (a - e)^2
    let inner56 = int(-2)
        .mul(&c(2, 5))
        .add(&int(-2).mul(&c(4, 5)).mul(&c(4, 6)))
        .add(&e.mul(&c(5, 6)));
    let c56 = c(1, 2)
        .sub(&c(2, 3).mul(&c(4, 6)))
        .add(&e.mul(&inner56))
        .mul(&p2)
        .div(&ae2);
    // c57 <- (c13 + e(-c26 - 2c35 - c46^2 + e c57)) p^2 / (a - e)^2
    let inner57 = c(2, 6)
        .neg()
        .add(&int(-2).mul(&c(3, 5)))
        .sub(&c46sq)
        .add(&e.mul(&c(5, 7)));
    let c57 = c(1, 3).add(&e.mul(&inner57)).mul(&p2).div(&ae2);
    // c67 <- (c23 + e(-2c36 - c45 + e c67)) p^2 / (a - e)^2
    let inner67 = int(-2).mul(&c(3, 6)).sub(&c(4, 5)).add(&e.mul(&c(6, 7)));
    let c67 = c(2, 3).add(&e.mul(&inner67)).mul(&p2).div(&ae2);

    let mut values = BTreeMap::new();
    values.insert((1, 2), c12);
    values.insert((1, 3), c13);
    values.insert((2, 3), c23);
    values.insert((2, 5), c25);
    values.insert((2, 6), c(2, 6));
    values.insert((3, 5), c35);
    values.insert((3, 6), c36);
    values.insert((4, 5), c(4, 5));
    values.insert((4, 6), c(4, 6));
    values.insert((5, 6), c56);
    values.insert((5, 7), c57);
    values.insert((6, 7), c67);
    QuarticParams::reduced(values)
}

/// The two polynomials in the reduced parameters that are constant along
/// orbits of the action: c13*c57 - c35*(c35 + c26 + c46^2) and
/// c23*c67 - c36*(c36 + c45).
pub fn invariant_pair(params: &QuarticParams) -> Result<(Scalar, Scalar)> {
    params.require_reduced()?;
    let c = |i: usize, j: usize| params.values[&(i, j)].clone();
    let first = c(1, 3)
        .mul(&c(5, 7))
        .sub(&c(3, 5).mul(&c(3, 5).add(&c(2, 6)).add(&c(4, 6).pow(2))));
    let second = c(2, 3)
        .mul(&c(6, 7))
        .sub(&c(3, 6).mul(&c(3, 6).add(&c(4, 5))));
    Ok((first, second))
}

// ---- Solution sampling and the dimension count ----

/// Solutions found by [`solve_over_prime_field`], with the number of inner
/// evaluations spent.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub solutions: Vec<QuarticParams>,
    pub attempts: u64,
}

/// A residual equation specialized to the three scanned variables, in a form
/// evaluable with machine arithmetic: (coefficient, exponents of c56, c57,
/// c67).
fn compact_terms(eq: &MPoly, p: u64, scan: &[u16; 3]) -> Result<Vec<(u64, [u32; 3])>> {
    let field = FieldSpec::Prime(p);
    let mut out = Vec::with_capacity(eq.term_count());
    for (mono, coeff) in eq.terms() {
        let mut exps = [0u32; 3];
        for v in mono.vars() {
            let slot = scan
                .iter()
                .position(|&s| s == v)
                .expect("specialized equation only mentions scanned variables");
            exps[slot] = mono.exponent(v) as u32;
        }
        let c = coeff
            .clone()
            .try_into_field(field)?
            .residue_value()
            .expect("prime-field residue");
        if c != 0 {
            out.push((c, exps));
        }
    }
    Ok(out)
}

fn eval_compact(terms: &[(u64, [u32; 3])], powers: &[Vec<u64>; 3], p: u64) -> u64 {
    let mut acc: u64 = 0;
    for &(c, exps) in terms {
        let mut t = c as u128;
        for (slot, &e) in exps.iter().enumerate() {
            t = t * powers[slot][e as usize] as u128 % p as u128;
        }
        acc = ((acc as u128 + t) % p as u128) as u64;
    }
    acc
}

/// Samples exact solutions of the residual system over F_p: 9 of the 12
/// parameters are drawn at random, the remaining three (c56, c57, c67) are
/// scanned exhaustively. Each attempt is one scanned triple; the search
/// stops at `budget` attempts or `max_solutions` verified solutions.
/// Deterministic in the seed.
pub fn solve_over_prime_field(
    p: u64,
    seed: u64,
    budget: u64,
    max_solutions: usize,
) -> Result<SolveOutcome> {
    let field = FieldSpec::parse(&format!("Fp:{p}"))?;
    if p <= 3 {
        return Err(Error::UnsupportedField(
            field.descriptor(),
            "solution sampling needs p > 3".into(),
        ));
    }
    let residuals = residual_system()?;
    let scan: [u16; 3] = [pair_index(5, 6)?, pair_index(5, 7)?, pair_index(6, 7)?];
    let outer: Vec<(usize, usize)> = REDUCED_FREE
        .iter()
        .copied()
        .filter(|&(i, j)| !matches!((i, j), (5, 6) | (5, 7) | (6, 7)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts: u64 = 0;
    let mut solutions: Vec<QuarticParams> = Vec::new();
    'outer: while attempts < budget && solutions.len() < max_solutions {
        let assignment: BTreeMap<(usize, usize), u64> = outer
            .iter()
            .map(|&(i, j)| ((i, j), rng.gen_range(0..p)))
            .collect();
        let specialized: Vec<Vec<(u64, [u32; 3])>> = residuals
            .iter()
            .map(|r| {
                let mut q = r.equation.clone();
                for (&(i, j), &val) in &assignment {
                    let v = pair_index(i, j)?;
                    q = q.subst(v, &MPoly::constant(Scalar::residue(val, p)));
                }
                compact_terms(&q, p, &scan)
            })
            .collect::<Result<_>>()?;
        let mut powers: [Vec<u64>; 3] = [vec![], vec![], vec![]];
        'scan: for v56 in 0..p {
            powers[0] = power_table(v56, p);
            for v57 in 0..p {
                powers[1] = power_table(v57, p);
                for v67 in 0..p {
                    attempts += 1;
                    powers[2] = power_table(v67, p);
                    if specialized
                        .iter()
                        .all(|terms| eval_compact(terms, &powers, p) == 0)
                    {
                        let mut values: BTreeMap<(usize, usize), Scalar> = assignment
                            .iter()
                            .map(|(&k, &v)| (k, Scalar::residue(v, p)))
                            .collect();
                        values.insert((5, 6), Scalar::residue(v56, p));
                        values.insert((5, 7), Scalar::residue(v57, p));
                        values.insert((6, 7), Scalar::residue(v67, p));
                        let params = QuarticParams::reduced(values)?;
                        verified_representation(&params)
                            .expect("residual solutions assemble to representations");
                        if !solutions.contains(&params) {
                            solutions.push(params);
                        }
                        if solutions.len() >= max_solutions {
                            break 'outer;
                        }
                    }
                    if attempts >= budget {
                        break 'scan;
                    }
                }
            }
        }
    }
    if solutions.is_empty() {
        return Err(Error::NoSolutionFound { attempts });
    }
    Ok(SolveOutcome {
        solutions,
        attempts,
    })
}

fn power_table(v: u64, p: u64) -> Vec<u64> {
    let mut t = Vec::with_capacity(5);
    t.push(1u64);
    for _ in 0..4 {
        let last = *t.last().expect("nonempty");
        t.push((last as u128 * v as u128 % p as u128) as u64);
    }
    t
}

/// Jacobian ranks of the residual system at sampled solutions and the
/// resulting dimension count: 12 parameters minus the Jacobian rank minus
/// the 3-dimensional parameter action.
#[derive(Debug, Clone)]
pub struct DimensionEstimate {
    pub jacobian_ranks: Vec<usize>,
    pub dimension: usize,
}

/// Estimates the dimension of the solution variety modulo the action from
/// at least 5 sampled solutions over F_p: majority of 12 - rank - 3.
pub fn moduli_dimension_estimate(solutions: &[QuarticParams], p: u64) -> Result<DimensionEstimate> {
    if solutions.len() < 5 {
        return Err(Error::WrongCount {
            expected: 5,
            got: solutions.len(),
        });
    }
    let field = FieldSpec::parse(&format!("Fp:{p}"))?;
    let residuals = residual_system()?;
    let partials: Vec<Vec<MPoly>> = residuals
        .iter()
        .map(|r| {
            REDUCED_FREE
                .iter()
                .map(|&(i, j)| Ok(r.equation.partial(pair_index(i, j)?)))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut ranks = Vec::with_capacity(solutions.len());
    for sol in solutions {
        sol.require_reduced()?;
        let solp = sol.clone().into_field(field)?;
        let mut jac = ConstMatrix::zero(3, 12);
        for (r, row) in partials.iter().enumerate() {
            for (col, d) in row.iter().enumerate() {
                let v = d
                    .eval(&|v| {
                        let (a, b) = index_pair(v);
                        solp.values[&(a, b)].clone()
                    })
                    .try_into_field(field)?;
                jac.set(r, col, v);
            }
        }
        ranks.push(jac.rank());
    }
    if ranks.iter().all(|&r| r < 3) {
        return Err(Error::DegenerateSamples(ranks.len()));
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &r in &ranks {
        *counts.entry(12 - r - ACTION_DIMENSION).or_insert(0) += 1;
    }
    let dimension = counts
        .iter()
        .max_by_key(|&(dim, count)| (*count, std::cmp::Reverse(*dim)))
        .map(|(&dim, _)| dim)
        .expect("nonempty ranks");
    Ok(DimensionEstimate {
        jacobian_ranks: ranks,
        dimension,
    })
}
